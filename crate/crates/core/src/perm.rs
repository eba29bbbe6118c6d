//! Permutations, the projection onto the symmetric group, the Schreier
//! transversal, and the induced action on signed pair generators.
//!
//! Composition convention, fixed once for the whole crate: in a product
//! `a.then(b)` the factor `a` acts first. Projecting a word therefore reads it
//! left to right. Conjugating a pair generator by a word of `r`-letters is
//! index transport along the *inverse* of the projected permutation under this
//! convention; [`act`] encapsulates that so callers never see the inverse.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{check_strands, split_tokens, VWord};

/// A permutation of `{1..n}`, stored as 0-based images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            if p >= n || seen[p] {
                return Err(Error::parse(0, "image list is not a bijection"));
            }
            seen[p] = true;
        }
        Ok(Perm { images })
    }

    /// The adjacent transposition swapping `i` and `i+1` (1-based).
    pub fn transposition(n: usize, i: usize) -> Self {
        debug_assert!((1..n).contains(&i));
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &q)| p == q)
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// Preimage of a 1-based point.
    pub fn preimage(&self, point: usize) -> usize {
        self.images.iter().position(|&q| q == point - 1).unwrap() + 1
    }

    /// `self` acts first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&p| other.images[p]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q] = p;
        }
        Perm { images }
    }

    pub fn is_even(&self) -> bool {
        // count inversions mod 2
        let v = &self.images;
        let mut odd = false;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    odd = !odd;
                }
            }
        }
        !odd
    }

    /// Every permutation of degree `n`, in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut images: Vec<usize> = (0..n).collect();
        loop {
            out.push(Perm {
                images: images.clone(),
            });
            if !next_permutation(&mut images) {
                break;
            }
        }
        out
    }

    /// Parses either a one-line image list `[3,1,2]` or cycle notation
    /// `(1 3 2)(4 5)`; fixed points may be omitted in cycles.
    pub fn parse(n: usize, text: &str) -> Result<Perm> {
        check_strands(n)?;
        let t = text.trim();
        if t.starts_with('[') {
            if !t.ends_with(']') {
                return Err(Error::parse(t.len(), "unterminated image list"));
            }
            let inner = &t[1..t.len() - 1];
            let mut images = Vec::new();
            if !inner.trim().is_empty() {
                for part in inner.split(',') {
                    let v: usize = part
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(0, format!("bad image `{}`", part.trim())))?;
                    if v < 1 || v > n {
                        return Err(Error::parse(0, format!("image {v} out of range 1..={n}")));
                    }
                    images.push(v - 1);
                }
            }
            if images.len() != n {
                return Err(Error::parse(
                    0,
                    format!("expected {n} images, got {}", images.len()),
                ));
            }
            Perm::from_images(images)
        } else if t.starts_with('(') {
            let mut perm = Perm::identity(n);
            let mut rest = t;
            while let Some(open) = rest.find('(') {
                let close = rest[open..]
                    .find(')')
                    .ok_or_else(|| Error::parse(open, "unterminated cycle"))?
                    + open;
                let body = &rest[open + 1..close];
                let mut points = Vec::new();
                for (pos, tok) in split_tokens(&body.replace(',', " ")) {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| Error::parse(pos, format!("bad point `{tok}`")))?;
                    if v < 1 || v > n {
                        return Err(Error::parse(pos, format!("point {v} out of range 1..={n}")));
                    }
                    points.push(v);
                }
                if points.len() > 1 {
                    let cycle = cycle_perm(n, &points)?;
                    perm = perm.then(&cycle);
                }
                rest = &rest[close + 1..];
            }
            if !rest.trim().is_empty() {
                return Err(Error::parse(0, "trailing input after cycles"));
            }
            Ok(perm)
        } else if t.is_empty() {
            Ok(Perm::identity(n))
        } else {
            Err(Error::parse(
                0,
                "expected `[..]` image list or `(..)` cycles",
            ))
        }
    }
}

fn cycle_perm(n: usize, points: &[usize]) -> Result<Perm> {
    let mut images: Vec<usize> = (0..n).collect();
    for w in points.windows(2) {
        images[w[0] - 1] = w[1] - 1;
    }
    images[points[points.len() - 1] - 1] = points[0] - 1;
    Perm::from_images(images).map_err(|_| Error::parse(0, "cycle repeats a point"))
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, &p) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p + 1)?;
        }
        f.write_str("]")
    }
}

/// The homomorphic image of a word in the symmetric group: both letter kinds
/// map to the adjacent transposition of their index; the leftmost letter acts
/// first.
pub fn pi_image(w: &VWord) -> Perm {
    let n = w.strands();
    // entry swaps compose on the input side, so accumulate the inverse and
    // flip once at the end; this keeps the leftmost letter acting first
    let mut inv: Vec<usize> = (0..n).collect();
    for g in w.letters() {
        inv.swap(g.index - 1, g.index);
    }
    Perm { images: inv }.inverse()
}

/// A signed pair generator `λ_{i,j}^{±1}` with `1 <= i < j <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedLambda {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

impl SignedLambda {
    /// Normalises an unordered signed pair via `λ_{b,a} = λ_{a,b}^{-1}`.
    pub fn new(a: usize, b: usize, sign: i8) -> Self {
        debug_assert!(a != b && sign.abs() == 1);
        if a < b {
            SignedLambda { i: a, j: b, sign }
        } else {
            SignedLambda {
                i: b,
                j: a,
                sign: -sign,
            }
        }
    }

    pub fn positive(i: usize, j: usize) -> Self {
        SignedLambda::new(i, j, 1)
    }

    pub fn inverse(self) -> Self {
        SignedLambda {
            sign: -self.sign,
            ..self
        }
    }
}

impl fmt::Display for SignedLambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}.{}", self.i, self.j)?;
        if self.sign < 0 {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// The symmetric-group action on signed pair generators: conjugation of
/// `λ_{i,j}` by any `r`-letter word projecting to `sigma`.
///
/// With the leftmost-first projection this is transport of the index pair
/// along `sigma^{-1}`, normalised by `λ_{b,a} = λ_{a,b}^{-1}`. For a single
/// adjacent transposition it reproduces the generator relabelling table
/// row by row, which the tests check exhaustively.
pub fn act(sigma: &Perm, x: SignedLambda) -> SignedLambda {
    SignedLambda::new(sigma.preimage(x.i), sigma.preimage(x.j), x.sign)
}

/// Coset label for the Schreier transversal: indices `(i_1, …, i_{n-1})` with
/// `0 <= i_k <= k`, standing for the word `m_{1,i_1} m_{2,i_2} … m_{n-1,i_{n-1}}`
/// where `m_{k,i}` is the descending block `r_k r_{k-1} … r_{i+1}` (empty when
/// `i = k`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchreierTuple {
    pub n: usize,
    pub indices: Vec<usize>,
}

impl SchreierTuple {
    pub fn new(n: usize, indices: Vec<usize>) -> Result<Self> {
        check_strands(n)?;
        if indices.len() != n - 1 || indices.iter().enumerate().any(|(k, &i)| i > k + 1) {
            return Err(Error::parse(0, "malformed transversal tuple"));
        }
        Ok(SchreierTuple { n, indices })
    }
}

/// The transversal word of a tuple: concatenation of its descending blocks.
pub fn schreier_word(t: &SchreierTuple) -> VWord {
    let mut letters = Vec::new();
    for (k0, &ik) in t.indices.iter().enumerate() {
        let k = k0 + 1;
        for idx in (ik + 1..=k).rev() {
            letters.push(crate::word::VGen::r(idx));
        }
    }
    VWord::new(t.n, letters).expect("block letters in range")
}

/// The unique tuple whose transversal word projects to `sigma`.
///
/// Peels block positions from `n-1` down to `1`: the image of `k+1` under the
/// residual permutation determines `i_k`, after which the block is divided
/// off. The exhaustive bijection test pins correctness for small `n`.
pub fn schreier_tuple(sigma: &Perm) -> SchreierTuple {
    let n = sigma.degree();
    let mut indices = vec![0usize; n - 1];
    let mut residual = sigma.clone();
    for k in (1..n).rev() {
        let ik = residual.apply(k + 1) - 1;
        indices[k - 1] = ik;
        let block = SchreierTuple {
            n,
            indices: (0..n - 1)
                .map(|k0| if k0 + 1 == k { ik } else { k0 + 1 })
                .collect(),
        };
        residual = residual.then(&pi_image(&schreier_word(&block)).inverse());
    }
    debug_assert!(residual.is_identity());
    SchreierTuple { n, indices }
}

/// Outcome of enumerating the diagonal action on ordered pairs of signed
/// generators with disjoint index sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalOrbitReport {
    pub n: usize,
    pub pair_count: usize,
    pub orbit_count: usize,
    pub stabilizer_size: usize,
    pub expected_stabilizer: usize,
}

/// Enumerates the diagonal action of the symmetric group on ordered pairs
/// `(λ_{i,j}^ε, λ_{k,l}^{ε'})` with `{i,j} ∩ {k,l} = ∅`, reporting the orbit
/// count and the size of the stabiliser of `(λ_{1,2}, λ_{n-1,n})`.
pub fn diagonal_orbit_check(n: usize) -> Result<DiagonalOrbitReport> {
    if n < 4 {
        return Err(Error::NotApplicable { n, min: 4 });
    }
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in 1..=n {
                for l in k + 1..=n {
                    if i != k && i != l && j != k && j != l {
                        for si in [1i8, -1] {
                            for sj in [1i8, -1] {
                                pairs.push((
                                    SignedLambda::new(i, j, si),
                                    SignedLambda::new(k, l, sj),
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    let pair_count = pairs.len();

    let gens: Vec<Perm> = (1..n).map(|i| Perm::transposition(n, i)).collect();
    let index_of = |p: &(SignedLambda, SignedLambda)| pairs.iter().position(|q| q == p).unwrap();
    let mut seen = vec![false; pair_count];
    let mut orbit_count = 0;
    for start in 0..pair_count {
        if seen[start] {
            continue;
        }
        orbit_count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(p) = stack.pop() {
            let (a, b) = pairs[p];
            for g in &gens {
                let q = index_of(&(act(g, a), act(g, b)));
                if !seen[q] {
                    seen[q] = true;
                    stack.push(q);
                }
            }
        }
    }

    let base = (
        SignedLambda::positive(1, 2),
        SignedLambda::positive(n - 1, n),
    );
    let stabilizer_size = Perm::all(n)
        .iter()
        .filter(|sigma| act(sigma, base.0) == base.0 && act(sigma, base.1) == base.1)
        .count();

    Ok(DiagonalOrbitReport {
        n,
        pair_count,
        orbit_count,
        stabilizer_size,
        expected_stabilizer: factorial(n - 4),
    })
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> VWord {
        VWord::parse(n, s).unwrap()
    }

    #[test]
    fn pi_maps_letters_to_adjacent_transpositions() {
        assert_eq!(pi_image(&w(2, "s1")), Perm::transposition(2, 1));
        assert!(pi_image(&w(3, "")).is_identity());
        // leftmost letter acts first
        let p = pi_image(&w(3, "r1 r2"));
        assert_eq!((p.apply(1), p.apply(2), p.apply(3)), (3, 1, 2));
    }

    #[test]
    fn pi_is_a_homomorphism() {
        let u = w(4, "s1 r2 s3");
        let v = w(4, "r3 r1 s2 s1");
        assert_eq!(
            pi_image(&u.concat(&v).unwrap()),
            pi_image(&u).then(&pi_image(&v))
        );
    }

    #[test]
    fn act_matches_pinned_cases() {
        let n = 4;
        let t1 = Perm::transposition(n, 1);
        let t2 = Perm::transposition(n, 2);
        assert_eq!(
            act(&t1, SignedLambda::positive(1, 2)),
            SignedLambda::new(1, 2, -1)
        );
        assert_eq!(
            act(&t2, SignedLambda::positive(1, 2)),
            SignedLambda::positive(1, 3)
        );
        assert_eq!(
            act(&Perm::identity(n), SignedLambda::positive(2, 4)),
            SignedLambda::positive(2, 4)
        );
    }

    /// The generator relabelling table for a single `r_i`, written out row by
    /// row, independently of the index-transport shortcut inside `act`.
    fn table_action(i: usize, x: SignedLambda) -> SignedLambda {
        let (k, l, sign) = (x.i, x.j, x.sign);
        if (k, l) == (i, i + 1) {
            SignedLambda {
                i: k,
                j: l,
                sign: -sign,
            }
        } else if k == i && l >= i + 2 {
            SignedLambda::new(i + 1, l, sign)
        } else if l == i && k < i {
            SignedLambda::new(k, i + 1, sign)
        } else if k == i + 1 && l >= i + 2 {
            SignedLambda::new(i, l, sign)
        } else if l == i + 1 && k < i {
            SignedLambda::new(k, i, sign)
        } else {
            debug_assert!(k != i && k != i + 1 && l != i && l != i + 1);
            x
        }
    }

    #[test]
    fn act_reproduces_relabelling_table_exhaustively() {
        for n in 2..=6 {
            for i in 1..n {
                let t = Perm::transposition(n, i);
                for a in 1..=n {
                    for b in a + 1..=n {
                        for sign in [1i8, -1] {
                            let x = SignedLambda::new(a, b, sign);
                            assert_eq!(act(&t, x), table_action(i, x), "n={n} i={i} x={x}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn descending_block_words_reach_every_signed_generator() {
        // conjugating the base generator by r_{i-1}..r_1 r_{j-1}..r_2 lands on
        // the (i,j) generator; appending r_1 to the second block inverts it
        for n in 2..=6usize {
            for i in 1..=n {
                for j in i + 1..=n {
                    let mut plain = Vec::new();
                    plain.extend((1..i).rev().map(crate::word::VGen::r));
                    plain.extend((2..j).rev().map(crate::word::VGen::r));
                    let mut inverted = plain.clone();
                    inverted.push(crate::word::VGen::r(1));
                    let base = SignedLambda::positive(1, 2);
                    let conj = |letters: Vec<crate::word::VGen>| {
                        act(&pi_image(&VWord::new(n, letters).unwrap()), base)
                    };
                    assert_eq!(conj(plain), SignedLambda::positive(i, j));
                    assert_eq!(conj(inverted), SignedLambda::new(i, j, -1));
                }
            }
        }
    }

    #[test]
    fn act_is_a_left_action_exhaustively() {
        for n in 2..=5 {
            let perms = Perm::all(n);
            let mut gens = Vec::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    gens.push(SignedLambda::positive(a, b));
                    gens.push(SignedLambda::new(a, b, -1));
                }
            }
            for s in &perms {
                for t in &perms {
                    let st = s.then(t);
                    for &x in &gens {
                        assert_eq!(act(&st, x), act(s, act(t, x)));
                    }
                }
            }
        }
    }

    #[test]
    fn action_orbit_covers_all_signed_generators() {
        for n in 2..=6 {
            let mut orbit = vec![SignedLambda::positive(1, 2)];
            let mut k = 0;
            while k < orbit.len() {
                let x = orbit[k];
                k += 1;
                for i in 1..n {
                    let y = act(&Perm::transposition(n, i), x);
                    if !orbit.contains(&y) {
                        orbit.push(y);
                    }
                }
            }
            assert_eq!(orbit.len(), n * (n - 1));
        }
    }

    #[test]
    fn schreier_words_match_pinned_cases() {
        let t = SchreierTuple::new(3, vec![0, 2]).unwrap();
        assert_eq!(schreier_word(&t), w(3, "r1"));
        let t = SchreierTuple::new(3, vec![1, 2]).unwrap();
        assert_eq!(schreier_word(&t), w(3, ""));
        let t = SchreierTuple::new(3, vec![0, 0]).unwrap();
        assert_eq!(schreier_word(&t), w(3, "r1 r2 r1"));
    }

    #[test]
    fn schreier_tuple_of_transposition() {
        let sigma = Perm::transposition(3, 1);
        assert_eq!(schreier_tuple(&sigma).indices, vec![0, 2]);
        assert!(schreier_tuple(&Perm::identity(3)).is_identity_tuple());
    }

    impl SchreierTuple {
        fn is_identity_tuple(&self) -> bool {
            self.indices.iter().enumerate().all(|(k, &i)| i == k + 1)
        }
    }

    #[test]
    fn transversal_is_a_bijection_for_small_degrees() {
        for n in 2..=5 {
            let mut seen = std::collections::HashSet::new();
            for sigma in Perm::all(n) {
                let t = schreier_tuple(&sigma);
                assert_eq!(pi_image(&schreier_word(&t)), sigma);
                seen.insert(t.indices.clone());
            }
            assert_eq!(seen.len(), factorial(n));
        }
    }

    #[test]
    fn tuple_word_projection_round_trip_on_all_tuples() {
        for n in 2..=5usize {
            // every valid tuple, odometer style
            let mut indices = vec![0usize; n - 1];
            let mut checked = 0usize;
            'tuples: loop {
                let t = SchreierTuple::new(n, indices.clone()).unwrap();
                let back = schreier_tuple(&pi_image(&schreier_word(&t)));
                assert_eq!(back, t);
                checked += 1;
                let mut k = 0;
                loop {
                    if k == n - 1 {
                        break 'tuples;
                    }
                    indices[k] += 1;
                    if indices[k] <= k + 1 {
                        break;
                    }
                    indices[k] = 0;
                    k += 1;
                }
            }
            assert_eq!(checked, factorial(n));
        }
    }

    #[test]
    fn diagonal_orbit_counts() {
        for (n, stab) in [(4, 1), (5, 1), (6, 2)] {
            let rep = diagonal_orbit_check(n).unwrap();
            assert_eq!(rep.pair_count, n * (n - 1) * (n - 2) * (n - 3));
            assert_eq!(rep.orbit_count, 1);
            assert_eq!(rep.stabilizer_size, stab);
            assert_eq!(rep.expected_stabilizer, stab);
        }
        assert!(diagonal_orbit_check(3).is_err());
    }

    #[test]
    fn perm_parsing_accepts_images_and_cycles() {
        let p = Perm::parse(3, "[3,1,2]").unwrap();
        assert_eq!(p.apply(1), 3);
        assert_eq!(Perm::parse(3, "(1 3 2)").unwrap(), p);
        assert_eq!(Perm::parse(4, "(1 2)(3 4)").unwrap().apply(3), 4);
        assert_eq!(Perm::parse(3, &p.to_string()).unwrap(), p);
        assert!(Perm::parse(3, "[1,1,2]").is_err());
        assert!(Perm::parse(3, "[1,2]").is_err());
        assert!(Perm::parse(3, "(1 5)").is_err());
    }

    #[test]
    fn parity_detects_even_permutations() {
        assert!(Perm::identity(4).is_even());
        assert!(!Perm::transposition(4, 2).is_even());
        assert!(pi_image(&w(4, "r1 r3")).is_even());
    }
}
