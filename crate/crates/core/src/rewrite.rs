//! Rewriting words of the virtual twin group into the pair generators of its
//! pure subgroup, and the word-problem solver built on top of it.
//!
//! A single left-to-right scan tracks the permutation image of the processed
//! prefix. An `r`-letter contributes nothing; an `s_i` contributes the
//! conjugate of `λ_{i,i+1}` by (any transversal word for) the tracked prefix,
//! which [`act`](crate::perm::act) evaluates directly on the index pair. The
//! scan therefore runs in one pass over the word, and only the permutation
//! image of the prefix matters — the coherence tests pin that this matches
//! honest conjugation by the transversal words.

use crate::error::{Error, Result};
use crate::perm::{act, pi_image, schreier_tuple, schreier_word, Perm, SignedLambda};
use crate::raag::RaagWord;
use crate::word::{GenKind, VGen, VWord};

/// The contribution of one letter read against a prefix with permutation
/// image `mu`: empty for `r`-letters, a single signed pair letter for
/// `s`-letters.
pub fn gamma(mu: &Perm, a: VGen) -> RaagWord {
    let n = mu.degree();
    match a.kind {
        GenKind::R => RaagWord::identity(n).expect("degree >= 2"),
        GenKind::S => {
            let x = act(mu, SignedLambda::positive(a.index, a.index + 1));
            RaagWord::from_letters(n, vec![x]).expect("indices in range")
        }
    }
}

/// Scan state of the rewriting pass: the permutation image of the processed
/// prefix and the letters emitted so far.
#[derive(Debug, Clone)]
pub struct RewriteState {
    sigma: Perm,
    emitted: Vec<SignedLambda>,
}

impl RewriteState {
    pub fn new(n: usize) -> Self {
        RewriteState {
            sigma: Perm::identity(n),
            emitted: Vec::new(),
        }
    }

    /// Consumes one letter: `s`-letters emit their conjugated pair generator,
    /// every letter advances the prefix image.
    pub fn step(&mut self, g: VGen) {
        if g.kind == GenKind::S {
            self.emitted.push(act(
                &self.sigma,
                SignedLambda::positive(g.index, g.index + 1),
            ));
        }
        self.sigma = self
            .sigma
            .then(&Perm::transposition(self.sigma.degree(), g.index));
    }

    pub fn prefix_image(&self) -> &Perm {
        &self.sigma
    }

    pub fn emitted(&self) -> &[SignedLambda] {
        &self.emitted
    }
}

/// Rewrites a kernel word into the pair generators, normal-formed. Errors
/// when the word has a nontrivial permutation image.
pub fn rewrite_tau(w: &VWord) -> Result<RaagWord> {
    if !pi_image(w).is_identity() {
        return Err(Error::NotInKernel);
    }
    let n = w.strands();
    let mut state = RewriteState::new(n);
    for &g in w.letters() {
        state.step(g);
    }
    debug_assert!(state.prefix_image().is_identity());
    Ok(RaagWord::from_letters(n, state.emitted)?.normal_form())
}

/// Word-problem solver: trivial permutation image and trivial rewritten word.
pub fn vt_is_identity(w: &VWord) -> bool {
    if !pi_image(w).is_identity() {
        return false;
    }
    rewrite_tau(w).map(|p| p.is_empty()).unwrap_or(false)
}

/// Equality in the virtual twin group: `u v^{-1}` is the identity.
pub fn vt_equal(u: &VWord, v: &VWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(vt_is_identity(&u.concat(&v.invert())?))
}

/// Splits a word along the semidirect decomposition: returns the pure part
/// (normal-formed) and the permutation image, so that the original word
/// equals `expand(pure) · transversal(image)`.
pub fn decompose(w: &VWord) -> Result<(RaagWord, Perm)> {
    let sigma = pi_image(w);
    let coset_word = schreier_word(&schreier_tuple(&sigma));
    let kernel_part = w.concat(&coset_word.invert())?;
    let pure = rewrite_tau(&kernel_part)?;
    Ok((pure, sigma))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raag::raag_equal;
    use crate::word::defining_relators;

    fn w(n: usize, s: &str) -> VWord {
        VWord::parse(n, s).unwrap()
    }

    fn rw(n: usize, s: &str) -> RaagWord {
        RaagWord::parse(n, s).unwrap()
    }

    #[test]
    fn gamma_on_single_letters() {
        let id = Perm::identity(3);
        assert_eq!(gamma(&id, VGen::s(1)), rw(3, "L1.2"));
        assert!(gamma(&Perm::transposition(3, 2), VGen::r(1)).is_empty());
        assert_eq!(
            gamma(&Perm::transposition(3, 1), VGen::s(1)),
            rw(3, "L1.2^-1")
        );
    }

    #[test]
    fn tau_on_pinned_words() {
        assert_eq!(rewrite_tau(&w(2, "s1 r1")).unwrap(), rw(2, "L1.2"));
        assert_eq!(rewrite_tau(&w(2, "r1 s1 r1 s1")).unwrap(), rw(2, "L1.2^-2"));
        assert!(rewrite_tau(&w(4, "s1 s3 s1 s3")).unwrap().is_empty());
        assert_eq!(rewrite_tau(&w(2, "s1")), Err(Error::NotInKernel));
    }

    #[test]
    fn identity_solver_accepts_every_defining_relator() {
        for n in 2..=6 {
            for (label, r) in defining_relators(n).unwrap().iter() {
                assert!(vt_is_identity(r), "relator {label} at n={n}");
            }
        }
    }

    #[test]
    fn identity_solver_rejects_nontrivial_words() {
        assert!(!vt_is_identity(&w(3, "s1")));
        assert!(!vt_is_identity(&w(3, "s1 r1")));
        assert!(!vt_is_identity(&w(4, "s1 s2 s1 s2")));
    }

    #[test]
    fn quartic_relation_on_four_strands() {
        let base = w(4, "s1 r2 r1 r3 r2");
        assert!(vt_is_identity(&base.pow(4)));
        assert!(!vt_is_identity(&base.pow(2)));
    }

    #[test]
    fn equality_of_the_mixed_relation_sides() {
        for n in 3..=5 {
            for i in 1..n - 1 {
                let lhs = VWord::new(n, vec![VGen::r(i), VGen::r(i + 1), VGen::s(i)]).unwrap();
                let rhs = VWord::new(n, vec![VGen::s(i + 1), VGen::r(i), VGen::r(i + 1)]).unwrap();
                assert!(vt_equal(&lhs, &rhs).unwrap());
            }
        }
        assert!(!vt_equal(&w(3, "s1"), &w(3, "r1")).unwrap());
        let u = w(3, "s1 r2 s1");
        assert!(vt_equal(&u, &u).unwrap());
        assert!(vt_equal(&w(3, "s1"), &w(4, "s1")).is_err());
    }

    #[test]
    fn decompose_on_pinned_words() {
        let (p, sigma) = decompose(&w(2, "s1")).unwrap();
        assert_eq!(p, rw(2, "L1.2"));
        assert_eq!(sigma, Perm::transposition(2, 1));

        let (p, sigma) = decompose(&w(3, "r2")).unwrap();
        assert!(p.is_empty());
        assert_eq!(sigma, Perm::transposition(3, 2));

        let (p, sigma) = decompose(&rw(3, "L1.3").expand_to_vtn()).unwrap();
        assert_eq!(p, rw(3, "L1.3"));
        assert!(sigma.is_identity());
    }

    #[test]
    fn tau_inverts_expansion_on_sample_words() {
        for (n, text) in [
            (3, "L1.2 L1.3^-1 L2.3"),
            (4, "L1.4 L2.3 L1.4^-1"),
            (5, "L2.5^2 L1.3 L4.5^-1 L2.5"),
            (6, "L1.6 L3.4^-1 L2.5 L1.6^-1"),
        ] {
            let x = rw(n, text);
            let back = rewrite_tau(&x.expand_to_vtn()).unwrap();
            assert!(raag_equal(&back, &x).unwrap(), "n={n} word={text}");
        }
    }

    #[test]
    fn conjugation_by_transversal_words_matches_the_action() {
        for n in 2..=4 {
            for sigma in Perm::all(n) {
                let m = schreier_word(&schreier_tuple(&sigma));
                let lambda = rw(n, "L1.2").expand_to_vtn();
                let conj = m.concat(&lambda).unwrap().concat(&m.invert()).unwrap();
                let rewritten = rewrite_tau(&conj).unwrap();
                let expected = act(&sigma, SignedLambda::positive(1, 2));
                assert_eq!(
                    rewritten,
                    RaagWord::from_letters(n, vec![expected]).unwrap(),
                    "n={n} sigma={sigma}"
                );
            }
        }
    }

    #[test]
    fn relators_stay_trivial_under_all_transversal_conjugates() {
        for n in 2..=4 {
            let relators = defining_relators(n).unwrap();
            for sigma in Perm::all(n) {
                let m = schreier_word(&schreier_tuple(&sigma));
                for (label, r) in relators.iter() {
                    let conj = m.concat(r).unwrap().concat(&m.invert()).unwrap();
                    assert!(vt_is_identity(&conj), "relator {label}, coset {sigma}");
                }
            }
        }
    }
}
