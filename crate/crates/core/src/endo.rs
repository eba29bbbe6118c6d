//! Endomorphisms of the pure subgroup given by generator images, the standard
//! automorphism families (generator permutations, inversions, transvections,
//! partial conjugations, inner automorphisms), the strand-forgetting and
//! strand-adding maps, and the conjugation tables special to four strands.
//!
//! Products of endomorphisms compose like functions: in `compose(a, b)` the
//! factor `b` is applied first. Equality is decided on generator images via
//! normal forms, so no word-length bound is ever needed.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::defining_graph;
use crate::perm::{act, Perm, SignedLambda};
use crate::raag::{all_gens, LambdaGen, RaagWord};
use crate::word::check_strands;

/// A map from the pair generators into words, applied letterwise. The inverse
/// images are carried only when invertibility has been witnessed, which every
/// named constructor below does for its family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupEndo {
    n: usize,
    images: Vec<RaagWord>,
    inverse: Option<Vec<RaagWord>>,
}

impl GroupEndo {
    pub fn identity(n: usize) -> Result<Self> {
        check_strands(n)?;
        let images: Vec<RaagWord> = all_gens(n)
            .into_iter()
            .map(|g| RaagWord::generator(n, g).expect("valid generator"))
            .collect();
        Ok(GroupEndo {
            n,
            inverse: Some(images.clone()),
            images,
        })
    }

    /// Builds an endomorphism from one image per generator, in the
    /// lexicographic generator order. No invertibility is claimed.
    pub fn from_images(n: usize, images: Vec<RaagWord>) -> Result<Self> {
        check_strands(n)?;
        if images.len() != n * (n - 1) / 2 {
            return Err(Error::parse(0, "wrong number of generator images"));
        }
        for w in &images {
            if w.strands() != n {
                return Err(Error::StrandMismatch(n, w.strands()));
            }
        }
        Ok(GroupEndo {
            n,
            images: images.into_iter().map(|w| w.normal_form()).collect(),
            inverse: None,
        })
    }

    /// Attaches an inverse after verifying both compositions are the
    /// identity on generators.
    pub fn certify_inverse(mut self, inv: GroupEndo) -> Result<Self> {
        if self.n != inv.n {
            return Err(Error::StrandMismatch(self.n, inv.n));
        }
        let ok = all_gens(self.n).iter().all(|&g| {
            let gw = RaagWord::generator(self.n, g).expect("valid generator");
            self.apply(&inv.apply(&gw)) == gw.normal_form()
                && inv.apply(&self.apply(&gw)) == gw.normal_form()
        });
        if !ok {
            return Err(Error::parse(0, "claimed inverse fails on a generator"));
        }
        self.inverse = Some(inv.images);
        Ok(self)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn image_of(&self, g: LambdaGen) -> &RaagWord {
        &self.images[g.rank(self.n)]
    }

    pub fn is_automorphism(&self) -> bool {
        self.inverse.is_some()
    }

    /// The witnessed inverse, when present.
    pub fn inverse(&self) -> Option<GroupEndo> {
        self.inverse.as_ref().map(|inv| GroupEndo {
            n: self.n,
            images: inv.clone(),
            inverse: Some(self.images.clone()),
        })
    }

    /// Applies letterwise and normal-forms the result.
    pub fn apply(&self, w: &RaagWord) -> RaagWord {
        let mut acc = RaagWord::identity(self.n).expect("valid strand count");
        for &(g, e) in w.syllables() {
            acc = acc
                .concat(&self.images[g.rank(self.n)].pow(e))
                .expect("same strand count");
        }
        acc.normal_form()
    }

    /// Function composition: `other` first, then `self`.
    pub fn compose(&self, other: &GroupEndo) -> Result<GroupEndo> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let images: Vec<RaagWord> = other.images.iter().map(|w| self.apply(w)).collect();
        let inverse = match (&self.inverse, &other.inverse) {
            (Some(a_inv), Some(b_inv)) => {
                // (a ∘ b)^{-1} = b^{-1} ∘ a^{-1}
                let b = GroupEndo {
                    n: self.n,
                    images: b_inv.clone(),
                    inverse: None,
                };
                Some(a_inv.iter().map(|w| b.apply(w)).collect())
            }
            _ => None,
        };
        Ok(GroupEndo {
            n: self.n,
            images,
            inverse,
        })
    }

    /// Equality on every generator image (images are kept normal-formed).
    pub fn equal(&self, other: &GroupEndo) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        Ok(self.images == other.images)
    }

    pub fn is_identity(&self) -> bool {
        self.equal(&GroupEndo::identity(self.n).expect("valid strand count"))
            .expect("same strand count")
    }

    /// Parses the one-line-per-generator text form `L<i>.<j> -> <word>`.
    /// Generators missing from the text are fixed.
    pub fn parse(n: usize, text: &str) -> Result<GroupEndo> {
        let mut endo = GroupEndo::identity(n)?;
        endo.inverse = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| Error::parse(0, format!("missing `->` in `{line}`")))?;
            let source = RaagWord::parse(n, lhs.trim())?;
            let [(g, 1)] = source.syllables() else {
                return Err(Error::parse(
                    0,
                    format!("left side of `{line}` must be a generator"),
                ));
            };
            endo.images[g.rank(n)] = RaagWord::parse(n, rhs.trim())?.normal_form();
        }
        Ok(endo)
    }
}

impl fmt::Display for GroupEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in all_gens(self.n) {
            writeln!(f, "{g} -> {}", self.image_of(g))?;
        }
        Ok(())
    }
}

/// The automorphism induced by a permutation of the strands: generator-wise
/// index transport.
pub fn perm_auto(sigma: &Perm) -> GroupEndo {
    let n = sigma.degree();
    let images = lambda_images(n, |g| {
        let x = act(sigma, SignedLambda::from_gen(g, 1));
        RaagWord::from_letters(n, vec![x]).expect("valid letter")
    });
    let inv = lambda_images(n, |g| {
        let x = act(&sigma.inverse(), SignedLambda::from_gen(g, 1));
        RaagWord::from_letters(n, vec![x]).expect("valid letter")
    });
    GroupEndo {
        n,
        images,
        inverse: Some(inv),
    }
}

/// Sends one generator to its inverse and fixes the rest; an involution.
pub fn inversion(n: usize, g: LambdaGen) -> Result<GroupEndo> {
    check_strands(n)?;
    let images = lambda_images(n, |h| {
        let e = if h == g { -1 } else { 1 };
        RaagWord::new(n, vec![(h, e)]).expect("valid generator")
    });
    Ok(GroupEndo {
        n,
        inverse: Some(images.clone()),
        images,
    })
}

/// Conjugation of every generator by `g`, in the exponent convention
/// `a ↦ g^{-1} a g`.
pub fn inner(n: usize, g: &RaagWord) -> Result<GroupEndo> {
    if g.strands() != n {
        return Err(Error::StrandMismatch(n, g.strands()));
    }
    let conj = |by: &RaagWord, h: LambdaGen| {
        by.invert()
            .concat(&RaagWord::generator(n, h).expect("valid generator"))
            .and_then(|w| w.concat(by))
            .expect("same strand count")
            .normal_form()
    };
    let images = lambda_images(n, |h| conj(g, h));
    let ginv = g.invert();
    let inv = lambda_images(n, |h| conj(&ginv, h));
    Ok(GroupEndo {
        n,
        images,
        inverse: Some(inv),
    })
}

/// Partial conjugation: conjugates the generators of `c` by `v` and fixes
/// everything else. `c` must be a union of connected components of the graph
/// minus the star of `v`; the union of all components gives the inner
/// automorphism of `v`.
pub fn partial_conj(n: usize, v: LambdaGen, c: &[LambdaGen]) -> Result<GroupEndo> {
    let graph = defining_graph(n)?;
    let comps = graph.components_minus_star(v);
    let mut covered = vec![false; comps.len()];
    for &w in c {
        match comps.iter().position(|comp| comp.contains(&w)) {
            Some(k) => covered[k] = true,
            None => return Err(Error::NotAComponentUnion),
        }
    }
    let chosen: Vec<LambdaGen> = comps
        .iter()
        .zip(&covered)
        .filter(|(_, &used)| used)
        .flat_map(|(comp, _)| comp.iter().copied())
        .collect();
    {
        let mut c_sorted: Vec<LambdaGen> = c.to_vec();
        c_sorted.sort_unstable();
        c_sorted.dedup();
        let mut chosen_sorted = chosen.clone();
        chosen_sorted.sort_unstable();
        if c_sorted != chosen_sorted {
            return Err(Error::NotAComponentUnion);
        }
    }
    let make = |exp: i64| {
        lambda_images(n, |h| {
            if chosen.contains(&h) {
                RaagWord::new(n, vec![(v, -exp), (h, 1), (v, exp)])
                    .expect("valid syllables")
                    .normal_form()
            } else {
                RaagWord::generator(n, h).expect("valid generator")
            }
        })
    };
    Ok(GroupEndo {
        n,
        images: make(1),
        inverse: Some(make(-1)),
    })
}

/// Transvection `a ↦ ab`; requires `b` to dominate `a`.
pub fn transvection(n: usize, a: LambdaGen, b: LambdaGen) -> Result<GroupEndo> {
    let graph = defining_graph(n)?;
    if !graph.dominates(a, b)? {
        return Err(Error::DominationViolation);
    }
    let make = |exp: i64| {
        lambda_images(n, |h| {
            if h == a {
                RaagWord::new(n, vec![(a, 1), (b, exp)]).expect("valid syllables")
            } else {
                RaagWord::generator(n, h).expect("valid generator")
            }
        })
    };
    Ok(GroupEndo {
        n,
        images: make(1),
        inverse: Some(make(-1)),
    })
}

/// The graph automorphism `θ_k`: the inversion at `λ_{k,k+1}` composed with
/// the permutation automorphism of the adjacent transposition, which fixes
/// `λ_{k,k+1}` and transports indices elsewhere.
pub fn theta(n: usize, k: usize) -> Result<GroupEndo> {
    check_strands(n)?;
    if k < 1 || k > n - 1 {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: n - 1,
            n,
        });
    }
    inversion(n, LambdaGen::new(k, k + 1))?.compose(&perm_auto(&Perm::transposition(n, k)))
}

fn lambda_images(n: usize, f: impl Fn(LambdaGen) -> RaagWord) -> Vec<RaagWord> {
    all_gens(n)
        .into_iter()
        .map(|g| f(g).normal_form())
        .collect()
}

/// Deletes every syllable whose generator touches the last strand; the result
/// lives on one strand fewer.
pub fn f_map(w: &RaagWord) -> Result<RaagWord> {
    let n = w.strands();
    if n < 3 {
        return Err(Error::InvalidStrandCount { got: n, min: 3 });
    }
    let syllables: Vec<(LambdaGen, i64)> = w
        .syllables()
        .iter()
        .copied()
        .filter(|(g, _)| g.j != n)
        .collect();
    RaagWord::new(n - 1, syllables)
}

/// Embeds a word on `n-1` strands into `n` strands; a section of [`f_map`].
pub fn include(n: usize, w: &RaagWord) -> Result<RaagWord> {
    if w.strands() + 1 != n {
        return Err(Error::StrandMismatch(n, w.strands()));
    }
    RaagWord::new(n, w.syllables().to_vec())
}

/// The conjugate `μ λ_{i,n} μ^{-1}` for `μ` on one strand fewer: a generator
/// of the kernel of [`f_map`], normal-formed.
pub fn u_generator(n: usize, mu: &RaagWord, i: usize) -> Result<RaagWord> {
    if i < 1 || i > n - 1 {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n - 1,
            n,
        });
    }
    let mu_n = include(n, mu)?;
    let lam = RaagWord::generator(n, LambdaGen::new(i, n))?;
    Ok(lam.conjugate_by(&mu_n)?.normal_form())
}

/// A naming of the three commuting generator pairs on four strands: `x[k]`
/// and `y[k]` span the `k`-th pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pvt4Dict {
    pub x: [LambdaGen; 3],
    pub y: [LambdaGen; 3],
}

impl Pvt4Dict {
    pub fn canonical() -> Self {
        Pvt4Dict {
            x: [
                LambdaGen::new(1, 2),
                LambdaGen::new(1, 3),
                LambdaGen::new(1, 4),
            ],
            y: [
                LambdaGen::new(3, 4),
                LambdaGen::new(2, 4),
                LambdaGen::new(2, 3),
            ],
        }
    }

    /// Every `(x[k], y[k])` must be an edge and the six vertices must cover
    /// the graph.
    pub fn is_valid(&self) -> bool {
        let graph = match defining_graph(4) {
            Ok(g) => g,
            Err(_) => return false,
        };
        let mut seen: Vec<LambdaGen> = Vec::new();
        for k in 0..3 {
            if !graph.adjacent(self.x[k], self.y[k]) {
                return false;
            }
            seen.push(self.x[k]);
            seen.push(self.y[k]);
        }
        seen.sort_unstable();
        seen.dedup();
        seen.len() == 6
    }

    /// Relabels the dictionary along a graph automorphism given as an image
    /// vector over vertex ranks.
    pub fn transformed(&self, auto: &[usize]) -> Self {
        let gens = all_gens(4);
        let map = |g: LambdaGen| gens[auto[g.rank(4)]];
        Pvt4Dict {
            x: [map(self.x[0]), map(self.x[1]), map(self.x[2])],
            y: [map(self.y[0]), map(self.y[1]), map(self.y[2])],
        }
    }

    fn component(&self, k: usize) -> Vec<LambdaGen> {
        vec![self.x[k], self.y[k]]
    }

    /// The pair swap `x[a] ↔ x[b]`, `y[a] ↔ y[b]` as a graph automorphism.
    fn pair_swap(&self, a: usize, b: usize) -> Result<GroupEndo> {
        let n = 4;
        let mut endo = GroupEndo::identity(n)?;
        let mut set = |from: LambdaGen, to: LambdaGen| {
            endo.images[from.rank(n)] = RaagWord::generator(n, to).expect("valid generator");
        };
        set(self.x[a], self.x[b]);
        set(self.x[b], self.x[a]);
        set(self.y[a], self.y[b]);
        set(self.y[b], self.y[a]);
        endo.inverse = Some(endo.images.clone());
        Ok(endo)
    }
}

/// Replays the conjugation identities among the four-strand automorphism
/// families under the given dictionary, returning one labelled verdict per
/// identity.
pub fn pvt4_table_checks(dict: &Pvt4Dict) -> Result<Vec<(String, bool)>> {
    let n = 4;
    if !dict.is_valid() {
        return Err(Error::NotAComponentUnion);
    }
    let psi1 = dict.pair_swap(0, 1)?;
    let inv_of = |g: LambdaGen| inversion(n, g).expect("valid");
    let tr = |a: LambdaGen, b: LambdaGen| transvection(n, a, b).expect("dominating pair");
    let pc = |v: LambdaGen, comp: Vec<LambdaGen>| partial_conj(n, v, &comp).expect("component");

    let (x, y) = (&dict.x, &dict.y);
    let c = |k: usize| dict.component(k);
    let mut checks: Vec<(String, GroupEndo, GroupEndo)> = Vec::new();
    let conj = |outer: &GroupEndo, mid: &GroupEndo| -> GroupEndo {
        outer
            .compose(mid)
            .and_then(|e| e.compose(outer))
            .expect("same strand count")
    };

    // pair swap against transvections and inversions
    checks.push((
        "swap12 . tr(x1,y1) . swap12 = tr(x2,y2)".into(),
        conj(&psi1, &tr(x[0], y[0])),
        tr(x[1], y[1]),
    ));
    checks.push((
        "swap12 . tr(y1,x1) . swap12 = tr(y2,x2)".into(),
        conj(&psi1, &tr(y[0], x[0])),
        tr(y[1], x[1]),
    ));
    checks.push((
        "swap12 . tr(x3,y3) . swap12 = tr(x3,y3)".into(),
        conj(&psi1, &tr(x[2], y[2])),
        tr(x[2], y[2]),
    ));
    checks.push((
        "swap12 . tr(y3,x3) . swap12 = tr(y3,x3)".into(),
        conj(&psi1, &tr(y[2], x[2])),
        tr(y[2], x[2]),
    ));
    for (label, g, img) in [
        ("x1", x[0], x[1]),
        ("y1", y[0], y[1]),
        ("x3", x[2], x[2]),
        ("y3", y[2], y[2]),
    ] {
        checks.push((
            format!("swap12 . inv({label}) . swap12"),
            conj(&psi1, &inv_of(g)),
            inv_of(img),
        ));
    }

    // pair swap against partial conjugations
    let pc_table = [
        ((x[0], 1usize), (x[1], 0usize)),
        ((y[0], 1), (y[1], 0)),
        ((x[1], 2), (x[0], 2)),
        ((y[1], 2), (y[0], 2)),
        ((x[2], 0), (x[2], 1)),
        ((y[2], 0), (y[2], 1)),
    ];
    for ((v, cv), (w, cw)) in pc_table {
        checks.push((
            format!("swap12 . pc({v},{cv}) . swap12 = pc({w},{cw})"),
            conj(&psi1, &pc(v, c(cv))),
            pc(w, c(cw)),
        ));
    }

    // inversion at x1 against partial conjugations
    let ix1 = inv_of(x[0]);
    checks.push((
        "inv(x1) . pc(x1,C2) . inv(x1) = pc(x1,C2)^-1".into(),
        conj(&ix1, &pc(x[0], c(1))),
        pc(x[0], c(1)).inverse().expect("witnessed"),
    ));
    for (v, cv) in [(y[0], 1usize), (x[1], 2), (y[1], 2), (x[2], 0), (y[2], 0)] {
        checks.push((
            format!("inv(x1) . pc({v},{cv}) . inv(x1) fixed"),
            conj(&ix1, &pc(v, c(cv))),
            pc(v, c(cv)),
        ));
    }

    // transvection at (x1,y1) against partial conjugations
    let t = tr(x[0], y[0]);
    let t_inv = t.inverse().expect("witnessed");
    let conj_t = |mid: &GroupEndo| -> GroupEndo {
        t_inv
            .compose(mid)
            .and_then(|e| e.compose(&t))
            .expect("same strand count")
    };
    checks.push((
        "tr^-1 . pc(x1,C2) . tr = pc(y1,C2)^-1 pc(x1,C2)".into(),
        conj_t(&pc(x[0], c(1))),
        pc(y[0], c(1))
            .inverse()
            .expect("witnessed")
            .compose(&pc(x[0], c(1)))
            .expect("same strand count"),
    ));
    for (v, cv) in [(y[0], 1usize), (x[1], 2), (y[1], 2), (x[2], 0), (y[2], 0)] {
        checks.push((
            format!("tr^-1 . pc({v},{cv}) . tr fixed"),
            conj_t(&pc(v, c(cv))),
            pc(v, c(cv)),
        ));
    }

    // commutation of the inversion/transvection blocks attached to
    // different pairs
    for a in 0..3 {
        for b in a + 1..3 {
            let block = |k: usize| vec![tr(x[k], y[k]), tr(y[k], x[k]), inv_of(x[k]), inv_of(y[k])];
            for (p, e1) in block(a).into_iter().enumerate() {
                for (q, e2) in block(b).into_iter().enumerate() {
                    checks.push((
                        format!("block {a}:{p} commutes with block {b}:{q}"),
                        e1.compose(&e2).expect("same strand count"),
                        e2.compose(&e1).expect("same strand count"),
                    ));
                }
            }
        }
    }

    // partial-conjugation presentation relations, over both orderings of the
    // two components away from pair i
    for i in 0..3 {
        let (j0, k0) = others(i);
        for (j, k) in [(j0, k0), (k0, j0)] {
            for (gi, label) in [(x[i], "x"), (y[i], "y")] {
                checks.push((
                    format!("[pc({label}{i},C{j}), pc({label}{i},C{k})] = 1"),
                    pc(gi, c(j)).compose(&pc(gi, c(k))).expect("same strands"),
                    pc(gi, c(k)).compose(&pc(gi, c(j))).expect("same strands"),
                ));
            }
            checks.push((
                format!("[pc(x{i},C{j}), pc(y{i},C{k})] = 1"),
                pc(x[i], c(j))
                    .compose(&pc(y[i], c(k)))
                    .expect("same strands"),
                pc(y[i], c(k))
                    .compose(&pc(x[i], c(j)))
                    .expect("same strands"),
            ));
            checks.push((
                format!("[pc(x{i},C{j}), pc(y{i},C{j})] = 1"),
                pc(x[i], c(j))
                    .compose(&pc(y[i], c(j)))
                    .expect("same strands"),
                pc(y[i], c(j))
                    .compose(&pc(x[i], c(j)))
                    .expect("same strands"),
            ));
        }
    }
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            let k = 3 - i - j;
            let prod = |g: LambdaGen| pc(g, c(j)).compose(&pc(g, c(k))).expect("same strands");
            for (a, la) in [(x[i], "x"), (y[i], "y")] {
                for (b, lb) in [(x[j], "x"), (y[j], "y")] {
                    checks.push((
                        format!("[pc({la}{i},C{j})pc({la}{i},C{k}), pc({lb}{j},C{k})] = 1"),
                        prod(a).compose(&pc(b, c(k))).expect("same strands"),
                        pc(b, c(k)).compose(&prod(a)).expect("same strands"),
                    ));
                }
            }
        }
    }

    checks
        .into_iter()
        .map(|(label, lhs, rhs)| Ok((label, lhs.equal(&rhs)?)))
        .collect()
}

fn others(i: usize) -> (usize, usize) {
    match i {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}
