//! Words in the pair generators `λ_{i,j}` of the pure subgroup, which form a
//! right-angled Artin group: two generators commute exactly when their index
//! sets are disjoint.
//!
//! The normal form is computed in two stages: stack-based cancellation (a
//! letter cancels a later inverse across a block of letters commuting with
//! it), then a greedy linearisation that always emits the least available
//! generator in the lexicographic order on `(i, j)`. Equal group elements get
//! identical normal forms, which decides the word problem.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::SignedLambda;
use crate::word::{check_strands, split_tokens, VGen, VWord};

/// An unsigned pair generator `λ_{i,j}`, `1 <= i < j <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LambdaGen {
    pub i: usize,
    pub j: usize,
}

impl LambdaGen {
    pub fn new(i: usize, j: usize) -> Self {
        debug_assert!(i < j, "pair generator indices must be ordered");
        LambdaGen { i, j }
    }

    /// Commutation test: disjoint index sets. A generator does not commute
    /// with itself under this predicate, which is the dependence relation the
    /// normal form needs.
    pub fn commutes_with(&self, other: &LambdaGen) -> bool {
        self.i != other.i && self.i != other.j && self.j != other.i && self.j != other.j
    }

    /// Position in the lexicographic listing of all pairs over `n` strands.
    pub fn rank(&self, n: usize) -> usize {
        let before_row = (self.i - 1) * n - self.i * (self.i - 1) / 2;
        before_row + (self.j - self.i - 1)
    }
}

impl fmt::Display for LambdaGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}.{}", self.i, self.j)
    }
}

/// All pair generators over `n` strands in lexicographic order; the vertex
/// list of the defining graph.
pub fn all_gens(n: usize) -> Vec<LambdaGen> {
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(LambdaGen::new(i, j));
        }
    }
    out
}

impl SignedLambda {
    pub fn gen(&self) -> LambdaGen {
        LambdaGen::new(self.i, self.j)
    }

    pub fn from_gen(g: LambdaGen, sign: i8) -> Self {
        SignedLambda::new(g.i, g.j, sign)
    }
}

/// A word in pair generators over `n` strands, stored as syllables
/// `(generator, nonzero exponent)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RaagWord {
    strands: usize,
    syllables: Vec<(LambdaGen, i64)>,
}

impl RaagWord {
    pub fn identity(n: usize) -> Result<Self> {
        check_strands(n)?;
        Ok(RaagWord {
            strands: n,
            syllables: Vec::new(),
        })
    }

    /// Builds a word; merges adjacent equal-generator syllables and drops
    /// zero exponents, validating indices against `n`.
    pub fn new(n: usize, syllables: Vec<(LambdaGen, i64)>) -> Result<Self> {
        check_strands(n)?;
        let mut merged: Vec<(LambdaGen, i64)> = Vec::with_capacity(syllables.len());
        for (g, e) in syllables {
            if g.i < 1 || g.j > n || g.i >= g.j {
                return Err(Error::IndexOutOfRange {
                    index: g.j.max(g.i),
                    max: n,
                    n,
                });
            }
            if e == 0 {
                continue;
            }
            match merged.last_mut() {
                Some((h, f)) if *h == g => {
                    *f += e;
                    if *f == 0 {
                        merged.pop();
                    }
                }
                _ => merged.push((g, e)),
            }
        }
        Ok(RaagWord {
            strands: n,
            syllables: merged,
        })
    }

    pub fn generator(n: usize, g: LambdaGen) -> Result<Self> {
        RaagWord::new(n, vec![(g, 1)])
    }

    pub fn from_letters(n: usize, letters: Vec<SignedLambda>) -> Result<Self> {
        RaagWord::new(
            n,
            letters
                .into_iter()
                .map(|x| (x.gen(), x.sign as i64))
                .collect(),
        )
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn syllables(&self) -> &[(LambdaGen, i64)] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Expands syllables into single signed letters.
    pub fn letters(&self) -> Vec<SignedLambda> {
        let mut out = Vec::new();
        for &(g, e) in &self.syllables {
            let sign = if e > 0 { 1 } else { -1 };
            for _ in 0..e.unsigned_abs() {
                out.push(SignedLambda::from_gen(g, sign));
            }
        }
        out
    }

    pub fn concat(&self, other: &RaagWord) -> Result<RaagWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut syl = self.syllables.clone();
        syl.extend_from_slice(&other.syllables);
        RaagWord::new(self.strands, syl)
    }

    pub fn invert(&self) -> RaagWord {
        RaagWord {
            strands: self.strands,
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> RaagWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut syl = Vec::new();
        for _ in 0..k.unsigned_abs() {
            syl.extend_from_slice(&base.syllables);
        }
        RaagWord::new(self.strands, syl).expect("validated syllables")
    }

    /// The conjugate `by · self · by^-1`.
    pub fn conjugate_by(&self, by: &RaagWord) -> Result<RaagWord> {
        by.concat(self)?.concat(&by.invert())
    }

    /// Exponent-sum vector over the generators, the abelianised image.
    pub fn abelianize(&self) -> AbelianImage {
        let n = self.strands;
        let mut exponents = vec![0i64; n * (n - 1) / 2];
        for &(g, e) in &self.syllables {
            exponents[g.rank(n)] += e;
        }
        AbelianImage { n, exponents }
    }

    /// Parses tokens `L<i>.<j>` with an optional `^<k>` exponent suffix.
    pub fn parse(n: usize, text: &str) -> Result<RaagWord> {
        check_strands(n)?;
        let mut syllables = Vec::new();
        for (pos, tok) in split_tokens(text) {
            let (head, exp) = match tok.find('^') {
                Some(c) => {
                    let e: i64 = tok[c + 1..].parse().map_err(|_| {
                        Error::parse(pos + c + 1, format!("bad exponent in `{tok}`"))
                    })?;
                    (&tok[..c], e)
                }
                None => (tok.as_str(), 1),
            };
            if !head.starts_with('L') {
                return Err(Error::parse(pos, format!("expected L<i>.<j>, got `{tok}`")));
            }
            let dot = head
                .find('.')
                .ok_or_else(|| Error::parse(pos, format!("missing `.` in `{tok}`")))?;
            let i: usize = head[1..dot]
                .parse()
                .map_err(|_| Error::parse(pos + 1, format!("bad index in `{tok}`")))?;
            let j: usize = head[dot + 1..]
                .parse()
                .map_err(|_| Error::parse(pos + dot + 1, format!("bad index in `{tok}`")))?;
            if i < 1 || j <= i || j > n {
                return Err(Error::IndexOutOfRange {
                    index: j,
                    max: n,
                    n,
                });
            }
            if exp == 0 {
                return Err(Error::parse(pos, "zero exponent"));
            }
            syllables.push((LambdaGen::new(i, j), exp));
        }
        RaagWord::new(n, syllables)
    }

    /// Fully reduced, canonically ordered representative of the same group
    /// element. Idempotent; constant on commutation classes.
    pub fn normal_form(&self) -> RaagWord {
        let reduced = reduce_letters(&self.letters());
        let ordered = linearize(reduced);
        RaagWord::from_letters(self.strands, ordered).expect("letters already validated")
    }

    /// Replaces each pair generator by its defining word over the involutive
    /// generators and freely reduces the concatenation.
    pub fn expand_to_vtn(&self) -> VWord {
        let mut letters = Vec::new();
        for x in self.letters() {
            let mut base = Vec::new();
            for idx in (x.i + 1..x.j).rev() {
                base.push(VGen::r(idx));
            }
            base.push(VGen::s(x.i));
            base.push(VGen::r(x.i));
            base.extend((x.i + 1..x.j).map(VGen::r));
            if x.sign < 0 {
                base.reverse();
            }
            letters.extend(base);
        }
        VWord::new(self.strands, letters)
            .expect("expansion letters in range")
            .free_reduce()
    }
}

impl fmt::Display for RaagWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, x) in self.letters().iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Stack-based cancellation: each incoming letter scans back across letters
/// commuting with it; an inverse found there cancels, a like letter or a
/// non-commuting letter blocks. The running word stays fully reduced.
fn reduce_letters(letters: &[SignedLambda]) -> Vec<SignedLambda> {
    let mut out: Vec<SignedLambda> = Vec::with_capacity(letters.len());
    'next: for &x in letters {
        let g = x.gen();
        let mut k = out.len();
        while k > 0 {
            let y = out[k - 1];
            if y.gen() == g {
                if y.sign == -x.sign {
                    out.remove(k - 1);
                    continue 'next;
                }
                break;
            }
            if !y.gen().commutes_with(&g) {
                break;
            }
            k -= 1;
        }
        out.push(x);
    }
    out
}

/// Greedy canonical linearisation: repeatedly emit the least available
/// letter, where a letter is available when everything before it commutes
/// with it. Two available letters never share a generator, so ordering by
/// generator is well defined.
fn linearize(mut letters: Vec<SignedLambda>) -> Vec<SignedLambda> {
    let mut out = Vec::with_capacity(letters.len());
    while !letters.is_empty() {
        let mut best: Option<usize> = None;
        for p in 0..letters.len() {
            let g = letters[p].gen();
            if letters[..p].iter().all(|y| y.gen().commutes_with(&g)) {
                let better = match best {
                    None => true,
                    Some(b) => g < letters[b].gen(),
                };
                if better {
                    best = Some(p);
                }
            }
        }
        out.push(letters.remove(best.expect("nonempty word has an available letter")));
    }
    out
}

/// Word-problem decision: equal normal forms.
pub fn raag_equal(u: &RaagWord, v: &RaagWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(u.normal_form() == v.normal_form())
}

/// Exponent-sum vector indexed by the lexicographically ordered generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianImage {
    pub n: usize,
    pub exponents: Vec<i64>,
}

impl AbelianImage {
    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &AbelianImage) -> Result<AbelianImage> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        Ok(AbelianImage {
            n: self.n,
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rw(n: usize, s: &str) -> RaagWord {
        RaagWord::parse(n, s).unwrap()
    }

    #[test]
    fn gen_rank_is_lexicographic_position() {
        for n in 2..=8 {
            for (k, g) in all_gens(n).iter().enumerate() {
                assert_eq!(g.rank(n), k);
            }
        }
    }

    #[test]
    fn normal_form_sorts_commuting_letters() {
        assert_eq!(rw(4, "L3.4 L1.2").normal_form(), rw(4, "L1.2 L3.4"));
        assert!(rw(4, "L1.2 L1.2^-1").normal_form().is_empty());
        assert_eq!(rw(4, "L1.2 L3.4 L1.2^-1").normal_form(), rw(4, "L3.4"));
    }

    #[test]
    fn normal_form_keeps_blocked_letters() {
        let w = rw(4, "L1.2 L1.3 L1.2^-1");
        assert!(!raag_equal(&w, &rw(4, "L1.3")).unwrap());
        assert_eq!(w.normal_form().letters().len(), 3);
    }

    #[test]
    fn raag_equal_on_commuting_pair() {
        assert!(raag_equal(&rw(4, "L1.2 L3.4"), &rw(4, "L3.4 L1.2")).unwrap());
        assert!(!raag_equal(&rw(4, "L1.2"), &rw(4, "L1.3")).unwrap());
        assert!(raag_equal(&rw(5, "L1.2"), &rw(4, "L1.2")).is_err());
    }

    #[test]
    fn cancellation_across_commuting_block() {
        // inverse pair separated by two commuting letters
        let w = rw(6, "L1.2 L3.4 L5.6 L1.2^-1");
        assert_eq!(w.normal_form(), rw(6, "L3.4 L5.6"));
    }

    #[test]
    fn abelianize_examples() {
        let v = rw(3, "L1.2 L1.2 L1.3^-1").abelianize();
        assert_eq!(v.exponents, vec![2, -1, 0]);
        let comm = rw(3, "L1.2^-1 L1.3^-1 L1.2 L1.3").abelianize();
        assert!(comm.is_zero());
        assert!(RaagWord::identity(3).unwrap().abelianize().is_zero());
    }

    #[test]
    fn abelianize_is_additive_and_nf_invariant() {
        let u = rw(4, "L1.2 L2.3^-1 L1.4");
        let v = rw(4, "L3.4 L1.2^-1");
        let sum = u.abelianize().add(&v.abelianize()).unwrap();
        assert_eq!(u.concat(&v).unwrap().abelianize(), sum);
        assert_eq!(u.normal_form().abelianize(), u.abelianize());
    }

    #[test]
    fn expansion_of_pair_generators() {
        assert_eq!(
            rw(2, "L1.2").expand_to_vtn(),
            VWord::parse(2, "s1 r1").unwrap()
        );
        assert_eq!(
            rw(3, "L1.3").expand_to_vtn(),
            VWord::parse(3, "r2 s1 r1 r2").unwrap()
        );
        assert_eq!(
            rw(2, "L1.2^-1").expand_to_vtn(),
            VWord::parse(2, "r1 s1").unwrap()
        );
    }

    #[test]
    fn parse_display_round_trip() {
        let w = rw(5, "L1.2 L3.5^-1 L3.5^-1 L2.4");
        assert_eq!(RaagWord::parse(5, &w.to_string()).unwrap(), w);
        assert_eq!(rw(5, "L1.2^2"), rw(5, "L1.2 L1.2"));
        assert!(RaagWord::parse(3, "L1.4").is_err());
        assert!(RaagWord::parse(3, "L2.2").is_err());
        assert!(RaagWord::parse(3, "L1.2^0").is_err());
    }

    #[test]
    fn constructor_merges_and_drops() {
        let g = LambdaGen::new(1, 2);
        let h = LambdaGen::new(1, 3);
        let w = RaagWord::new(3, vec![(g, 1), (g, -1), (h, 2), (h, 0)]).unwrap();
        assert_eq!(w.syllables(), &[(h, 2)]);
    }
}
