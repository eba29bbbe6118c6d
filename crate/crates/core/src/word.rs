//! Words over the involutive generators of the virtual twin group and the
//! catalogue of its defining relators.
//!
//! A word is a finite sequence of letters `s_i` / `r_i` (`r` is the virtual
//! generator) over a fixed strand count `n`. Every generator is an involution,
//! so inverses need no sign: inverting a word reverses its letters.

use std::fmt;

use crate::error::{Error, Result};

/// The two generator families: `S` for the twin generators `s_i`, `R` for the
/// virtual generators `r_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    S,
    R,
}

/// A single letter `s_i` or `r_i`, `1 <= i <= n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VGen {
    pub kind: GenKind,
    pub index: usize,
}

impl VGen {
    pub fn s(index: usize) -> Self {
        VGen {
            kind: GenKind::S,
            index,
        }
    }

    pub fn r(index: usize) -> Self {
        VGen {
            kind: GenKind::R,
            index,
        }
    }
}

impl fmt::Display for VGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::S => write!(f, "s{}", self.index),
            GenKind::R => write!(f, "r{}", self.index),
        }
    }
}

/// A word over the generators of the virtual twin group on `strands` strands.
///
/// The empty word is the identity. Words are immutable after construction;
/// every operation returns a fresh value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VWord {
    strands: usize,
    letters: Vec<VGen>,
}

impl VWord {
    /// The identity word on `n` strands.
    pub fn identity(n: usize) -> Result<Self> {
        check_strands(n)?;
        Ok(VWord {
            strands: n,
            letters: Vec::new(),
        })
    }

    /// Builds a word, validating every letter index against `n`.
    pub fn new(n: usize, letters: Vec<VGen>) -> Result<Self> {
        check_strands(n)?;
        for g in &letters {
            if g.index < 1 || g.index > n - 1 {
                return Err(Error::IndexOutOfRange {
                    index: g.index,
                    max: n - 1,
                    n,
                });
            }
        }
        Ok(VWord {
            strands: n,
            letters,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[VGen] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation; both words must share the strand count.
    pub fn concat(&self, other: &VWord) -> Result<VWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(VWord {
            strands: self.strands,
            letters,
        })
    }

    /// The inverse word: letters reversed (each letter is an involution).
    pub fn invert(&self) -> VWord {
        VWord {
            strands: self.strands,
            letters: self.letters.iter().rev().copied().collect(),
        }
    }

    /// `self` repeated `k` times.
    pub fn pow(&self, k: usize) -> VWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        VWord {
            strands: self.strands,
            letters,
        }
    }

    /// Cancels adjacent equal letters until none remain. The result represents
    /// the same group element and the operation is idempotent.
    pub fn free_reduce(&self) -> VWord {
        let mut out: Vec<VGen> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&g) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        VWord {
            strands: self.strands,
            letters: out,
        }
    }

    /// Letter counts `(s-count, r-count)` taken mod 2: the image in the
    /// abelianisation, an elementary abelian group of order four.
    pub fn parity(&self) -> (u8, u8) {
        let mut s = 0u8;
        let mut r = 0u8;
        for g in &self.letters {
            match g.kind {
                GenKind::S => s ^= 1,
                GenKind::R => r ^= 1,
            }
        }
        (s, r)
    }

    /// Parses the shared word grammar: whitespace-separated tokens `s<i>` and
    /// `r<i>`; the empty string is the identity.
    pub fn parse(n: usize, text: &str) -> Result<VWord> {
        check_strands(n)?;
        let mut letters = Vec::new();
        for (pos, tok) in split_tokens(text) {
            let kind = match tok.as_bytes().first() {
                Some(b's') => GenKind::S,
                Some(b'r') => GenKind::R,
                _ => {
                    return Err(Error::parse(
                        pos,
                        format!("expected s<i> or r<i>, got `{tok}`"),
                    ))
                }
            };
            let index: usize = tok[1..]
                .parse()
                .map_err(|_| Error::parse(pos + 1, format!("bad generator index in `{tok}`")))?;
            if index < 1 || index > n - 1 {
                return Err(Error::IndexOutOfRange {
                    index,
                    max: n - 1,
                    n,
                });
            }
            letters.push(VGen { kind, index });
        }
        Ok(VWord {
            strands: n,
            letters,
        })
    }
}

impl fmt::Display for VWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_strands(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidStrandCount { got: n, min: 2 })
    } else {
        Ok(())
    }
}

/// Splits on whitespace, keeping byte offsets for parse diagnostics.
pub(crate) fn split_tokens(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, text[s..i].to_string()));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, text[s..].to_string()));
    }
    out
}

/// The defining relators of the virtual twin group on `strands` strands, one
/// word per relation instance, each labelled by its family and indices.
#[derive(Debug, Clone)]
pub struct RelatorSet {
    pub strands: usize,
    pub relators: Vec<VWord>,
    pub labels: Vec<String>,
}

impl RelatorSet {
    pub fn iter(&self) -> impl Iterator<Item = (&str, &VWord)> {
        self.labels.iter().map(String::as_str).zip(&self.relators)
    }
}

/// All defining relator instances for `n` strands:
///
/// 1. `s_i^2`
/// 2. `(s_i s_j)^2` for `|i-j| >= 2`
/// 3. `r_i^2`
/// 4. `(r_i r_j)^2` for `|i-j| >= 2`
/// 5. `r_i r_{i+1} r_i r_{i+1} r_i r_{i+1}`
/// 6. `(r_i s_j)^2` for `|i-j| >= 2`
/// 7. `r_i r_{i+1} s_i r_{i+1} r_i s_{i+1}`
///
/// Two-sided relations are moved to one side using involutivity.
pub fn defining_relators(n: usize) -> Result<RelatorSet> {
    check_strands(n)?;
    let mut relators = Vec::new();
    let mut labels = Vec::new();
    let mut push = |label: String, letters: Vec<VGen>| {
        relators.push(VWord::new(n, letters).expect("relator letters in range"));
        labels.push(label);
    };

    for i in 1..n {
        push(format!("s{i}^2"), vec![VGen::s(i), VGen::s(i)]);
    }
    for i in 1..n {
        for j in i + 2..n {
            push(
                format!("(s{i} s{j})^2"),
                vec![VGen::s(i), VGen::s(j), VGen::s(i), VGen::s(j)],
            );
        }
    }
    for i in 1..n {
        push(format!("r{i}^2"), vec![VGen::r(i), VGen::r(i)]);
    }
    for i in 1..n {
        for j in i + 2..n {
            push(
                format!("(r{i} r{j})^2"),
                vec![VGen::r(i), VGen::r(j), VGen::r(i), VGen::r(j)],
            );
        }
    }
    for i in 1..n.saturating_sub(1) {
        push(
            format!("braid(r{i}, r{})", i + 1),
            vec![
                VGen::r(i),
                VGen::r(i + 1),
                VGen::r(i),
                VGen::r(i + 1),
                VGen::r(i),
                VGen::r(i + 1),
            ],
        );
    }
    for i in 1..n {
        for j in 1..n {
            if j >= i + 2 || i >= j + 2 {
                push(
                    format!("(r{i} s{j})^2"),
                    vec![VGen::r(i), VGen::s(j), VGen::r(i), VGen::s(j)],
                );
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        push(
            format!("mixed(r{i}, s{i})"),
            vec![
                VGen::r(i),
                VGen::r(i + 1),
                VGen::s(i),
                VGen::r(i + 1),
                VGen::r(i),
                VGen::s(i + 1),
            ],
        );
    }

    Ok(RelatorSet {
        strands: n,
        relators,
        labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> VWord {
        VWord::parse(n, s).unwrap()
    }

    #[test]
    fn free_reduce_cancels_involutions() {
        assert_eq!(w(3, "s1 s1").free_reduce(), w(3, ""));
        assert_eq!(w(3, "s1 r2 r2 s1").free_reduce(), w(3, ""));
        assert_eq!(w(3, "s1 r2 s1").free_reduce(), w(3, "s1 r2 s1"));
    }

    #[test]
    fn invert_reverses_letters() {
        assert_eq!(w(3, "s1 r2").invert(), w(3, "r2 s1"));
        assert_eq!(w(3, "").invert(), w(3, ""));
        assert_eq!(w(2, "r1 s1 r1 s1").invert(), w(2, "s1 r1 s1 r1"));
    }

    #[test]
    fn concat_then_invert_reduces_to_identity() {
        let u = w(4, "s1 r2 s3 r1");
        assert!(u.concat(&u.invert()).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn relators_for_two_strands() {
        let rs = defining_relators(2).unwrap();
        assert_eq!(rs.relators, vec![w(2, "s1 s1"), w(2, "r1 r1")]);
    }

    #[test]
    fn relators_include_braid_and_mixed_instances() {
        let rs = defining_relators(3).unwrap();
        assert!(rs.relators.contains(&w(3, "r1 r2 r1 r2 r1 r2")));
        assert!(rs.relators.contains(&w(3, "r1 r2 s1 r2 r1 s2")));

        let rs4 = defining_relators(4).unwrap();
        assert!(rs4.relators.contains(&w(4, "s1 s3 s1 s3")));
    }

    #[test]
    fn relator_count_matches_index_ranges() {
        // per family: (n-1) + C + (n-1) + C + (n-2) + 2C + (n-2)
        // where C = (n-2)(n-3)/2 counts far-commuting unordered pairs.
        for n in 2usize..=6 {
            let c = (n - 2) * n.saturating_sub(3) / 2;
            let expected = 2 * (n - 1) + 2 * (n - 2) + 4 * c;
            assert_eq!(defining_relators(n).unwrap().relators.len(), expected);
        }
    }

    #[test]
    fn rejects_bad_strand_count_and_indices() {
        assert!(defining_relators(1).is_err());
        assert!(VWord::parse(3, "s3").is_err());
        assert!(VWord::parse(3, "x1").is_err());
        assert!(VWord::parse(3, "s").is_err());
    }

    #[test]
    fn parse_display_round_trip() {
        let u = w(5, "s1 r4 s2 r1");
        assert_eq!(w(5, &u.to_string()), u);
        assert_eq!(w(5, "").to_string(), "");
    }

    #[test]
    fn parity_counts_mod_two() {
        assert_eq!(w(3, "s1").parity(), (1, 0));
        assert_eq!(w(3, "r1").parity(), (0, 1));
        assert_eq!(w(3, "s1 r2").parity(), (1, 1));
        assert_eq!(w(3, "s1 r2 r1 s2").parity(), (0, 0));
    }
}
