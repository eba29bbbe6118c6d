//! Batch verifiers that replay the library's headline computations and emit
//! pass/fail reports, in both human-readable text and a stable JSON shape
//! `{suite, n, seed, claims: [{id, anchor, status, witness?}]}`.
//!
//! Every claim carries the identity it checks in its `anchor` field; random
//! word suites are deterministic in `(suite, n, seed)` and embed the seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{defining_graph, graph_automorphisms_with_limit};
use crate::perm::{factorial, pi_image, Perm};
use crate::raag::{all_gens, raag_equal, LambdaGen, RaagWord};
use crate::rewrite::{vt_equal, vt_is_identity};
use crate::word::{defining_relators, VGen, VWord};

/// Default sample count for random-word claims.
pub const DEFAULT_SAMPLES: usize = 200;
/// Default length bound for random words.
pub const DEFAULT_MAX_LEN: usize = 24;
/// Default seed for every randomised suite.
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: String,
    pub anchor: String,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub n: usize,
    pub seed: u64,
    pub claims: Vec<Claim>,
}

impl VerificationReport {
    fn new(suite: &str, n: usize, seed: u64) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            n,
            seed,
            claims: Vec::new(),
        }
    }

    fn add(
        &mut self,
        id: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        witness: Option<String>,
    ) {
        self.claims.push(Claim {
            id: id.into(),
            anchor: anchor.into(),
            status: if ok {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            },
            witness: if ok { None } else { witness },
        });
    }

    fn finish(mut self) -> Self {
        self.claims.sort_by(|a, b| a.id.cmp(&b.id));
        debug_assert!(
            self.claims.windows(2).all(|w| w[0].id != w[1].id),
            "claim ids must be unique"
        );
        self
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status == ClaimStatus::Pass)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("suite {} n={} seed={}\n", self.suite, self.n, self.seed);
        for c in &self.claims {
            let mark = match c.status {
                ClaimStatus::Pass => "pass",
                ClaimStatus::Fail => "FAIL",
            };
            s.push_str(&format!("  {mark} {:<28} {}\n", c.id, c.anchor));
            if let Some(w) = &c.witness {
                s.push_str(&format!("       witness: {w}\n"));
            }
        }
        let ok = self
            .claims
            .iter()
            .filter(|c| c.status == ClaimStatus::Pass)
            .count();
        s.push_str(&format!(
            "result: {} ({ok}/{})\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.claims.len()
        ));
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialises")
    }
}

/// Seeded random word over the involutive generators.
pub fn random_vword(rng: &mut impl Rng, n: usize, max_len: usize) -> VWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let index = rng.gen_range(1..n);
            if rng.gen_bool(0.5) {
                VGen::s(index)
            } else {
                VGen::r(index)
            }
        })
        .collect();
    VWord::new(n, letters).expect("indices in range")
}

/// Seeded random word over the pair generators, exponents in `±1..±3`.
pub fn random_raag_word(rng: &mut impl Rng, n: usize, max_syllables: usize) -> RaagWord {
    let gens = all_gens(n);
    let len = rng.gen_range(0..=max_syllables);
    let syllables = (0..len)
        .map(|_| {
            let g = gens[rng.gen_range(0..gens.len())];
            let e = *[-3i64, -2, -1, 1, 2, 3]
                .get(rng.gen_range(0..6))
                .expect("index in range");
            (g, e)
        })
        .collect();
    RaagWord::new(n, syllables).expect("valid syllables")
}

fn word(n: usize, letters: Vec<VGen>) -> VWord {
    VWord::new(n, letters).expect("letters in range")
}

fn comm(a: &VWord, b: &VWord) -> VWord {
    a.invert()
        .concat(&b.invert())
        .and_then(|w| w.concat(a))
        .and_then(|w| w.concat(b))
        .expect("same strand count")
}

/// `x_i = r_i r_1`
fn gen_x(n: usize, i: usize) -> VWord {
    word(n, vec![VGen::r(i), VGen::r(1)])
}

/// `y = s_1 r_2 r_1 s_1`
fn gen_y(n: usize) -> VWord {
    word(n, vec![VGen::s(1), VGen::r(2), VGen::r(1), VGen::s(1)])
}

/// `z = (r_1 s_1)^2`
fn gen_z(n: usize) -> VWord {
    word(n, vec![VGen::r(1), VGen::s(1), VGen::r(1), VGen::s(1)])
}

/// Checks the reduced presentation on `n >= 3` strands: the surviving
/// relations among `s_1` and the `r_i`, the elimination identity expressing
/// every `s_{i+1}` through `s_1`, and the derived far-commutations.
pub fn verify_reduced_presentation(n: usize) -> Result<VerificationReport> {
    if n < 3 {
        return Err(Error::NotApplicable { n, min: 3 });
    }
    let mut rep = VerificationReport::new("reduced_presentation", n, 0);

    let s1_sq = word(n, vec![VGen::s(1), VGen::s(1)]);
    rep.add(
        "rel.s1.squared",
        "(s1)^2 = 1",
        vt_is_identity(&s1_sq),
        Some(s1_sq.to_string()),
    );

    for i in 1..n {
        let r = word(n, vec![VGen::r(i), VGen::r(i)]);
        rep.add(
            format!("rel.r{i}.squared"),
            format!("(r{i})^2 = 1"),
            vt_is_identity(&r),
            Some(r.to_string()),
        );
    }
    for i in 1..n {
        for j in i + 2..n {
            let r = word(n, vec![VGen::r(i), VGen::r(j), VGen::r(i), VGen::r(j)]);
            rep.add(
                format!("rel.far.r{i}.r{j}"),
                format!("(r{i} r{j})^2 = 1"),
                vt_is_identity(&r),
                Some(r.to_string()),
            );
        }
    }
    for i in 1..n - 1 {
        let r = word(
            n,
            vec![
                VGen::r(i),
                VGen::r(i + 1),
                VGen::r(i),
                VGen::r(i + 1),
                VGen::r(i),
                VGen::r(i + 1),
            ],
        );
        rep.add(
            format!("rel.braid.r{i}"),
            format!("(r{i} r{})^3 = 1", i + 1),
            vt_is_identity(&r),
            Some(r.to_string()),
        );
    }
    for i in 3..n {
        let r = word(n, vec![VGen::r(i), VGen::s(1), VGen::r(i), VGen::s(1)]);
        rep.add(
            format!("rel.far.r{i}.s1"),
            format!("(r{i} s1)^2 = 1"),
            vt_is_identity(&r),
            Some(r.to_string()),
        );
    }
    if n >= 4 {
        let base = word(
            n,
            vec![VGen::s(1), VGen::r(2), VGen::r(1), VGen::r(3), VGen::r(2)],
        );
        let r = base.pow(4);
        rep.add(
            "rel.quartic",
            "(s1 r2 r1 r3 r2)^4 = 1",
            vt_is_identity(&r),
            Some(r.to_string()),
        );
    }

    // elimination identity for each higher twin generator
    for i in 1..=n - 2 {
        let mut letters = Vec::new();
        letters.extend((1..=i).rev().map(VGen::r));
        letters.extend((2..=i + 1).rev().map(VGen::r));
        letters.push(VGen::s(1));
        letters.extend((2..=i + 1).map(VGen::r));
        letters.extend((1..=i).map(VGen::r));
        let rhs = word(n, letters);
        let lhs = word(n, vec![VGen::s(i + 1)]);
        rep.add(
            format!("eliminate.s{}", i + 1),
            format!(
                "s{} = (r{i}..r1)(r{}..r2) s1 (r2..r{})(r1..r{i})",
                i + 1,
                i + 1,
                i + 1
            ),
            vt_equal(&lhs, &rhs)?,
            Some(rhs.to_string()),
        );
    }

    // derived far-commutation of twin letters with virtual letters
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                let lhs = word(n, vec![VGen::s(i), VGen::r(j)]);
                let rhs = word(n, vec![VGen::r(j), VGen::s(i)]);
                rep.add(
                    format!("derived.far.s{i}.r{j}"),
                    format!("s{i} r{j} = r{j} s{i}"),
                    vt_equal(&lhs, &rhs)?,
                    Some(lhs.to_string()),
                );
            }
        }
    }

    Ok(rep.finish())
}

/// Checks the commutator-subgroup presentation: substitutes the generators
/// `x_i`, `y`, `z` by their defining words and verifies every listed relation,
/// that each generator has trivial abelianised image, and that the images of
/// the `x_i` generate the alternating group.
pub fn verify_commutator_presentation(n: usize) -> Result<VerificationReport> {
    crate::word::check_strands(n)?;
    let mut rep = VerificationReport::new("commutator_presentation", n, 0);

    let z = gen_z(n);
    rep.add(
        "gen.parity.z",
        "z = (r1 s1)^2 has even letter counts",
        z.parity() == (0, 0),
        Some(z.to_string()),
    );
    rep.add(
        "gen.nontrivial.z",
        "z is not the identity",
        !vt_is_identity(&z),
        Some(z.to_string()),
    );

    if n >= 3 {
        let y = gen_y(n);
        rep.add(
            "gen.parity.y",
            "y = s1 r2 r1 s1 has even letter counts",
            y.parity() == (0, 0),
            Some(y.to_string()),
        );
        for i in 2..n {
            let x = gen_x(n, i);
            rep.add(
                format!("gen.parity.x{i}"),
                format!("x{i} = r{i} r1 has even letter counts"),
                x.parity() == (0, 0),
                Some(x.to_string()),
            );
        }

        // closure of the projected x_i equals the even permutations
        let gens: Vec<Perm> = (2..n).map(|i| pi_image(&gen_x(n, i))).collect();
        let mut closure = std::collections::HashSet::new();
        closure.insert(Perm::identity(n));
        let mut frontier = vec![Perm::identity(n)];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q = p.then(g);
                if closure.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        let alternating = closure.len() == factorial(n) / 2 && closure.iter().all(|p| p.is_even());
        rep.add(
            "gen.alternating",
            "projected x_i generate the even permutations",
            alternating,
            Some(format!("closure size {}", closure.len())),
        );

        let mut relation = |id: String, anchor: String, w: VWord| {
            rep.add(id, anchor, vt_is_identity(&w), Some(w.to_string()));
        };

        let x2 = gen_x(n, 2);
        relation("rel.x2.cubed".into(), "(x2)^3 = 1".into(), x2.pow(3));
        relation("rel.y.cubed".into(), "(y)^3 = 1".into(), y.pow(3));
        for j in 3..n {
            relation(
                format!("rel.x{j}.squared"),
                format!("(x{j})^2 = 1"),
                gen_x(n, j).pow(2),
            );
        }
        for i in 2..n - 1 {
            let w = gen_x(n, i).concat(&gen_x(n, i + 1).invert())?.pow(3);
            relation(
                format!("rel.braid.x{i}"),
                format!("(x{i} x{}^-1)^3 = 1", i + 1),
                w,
            );
        }
        for i in 2..n - 1 {
            for j in i + 2..n {
                let w = gen_x(n, i).concat(&gen_x(n, j).invert())?.pow(2);
                relation(
                    format!("rel.far.x{i}.x{j}"),
                    format!("(x{i} x{j}^-1)^2 = 1"),
                    w,
                );
            }
        }
        for j in 3..n {
            let w = gen_x(n, j).concat(&z)?.pow(2);
            relation(format!("rel.xz.x{j}"), format!("(x{j} z)^2 = 1"), w);
        }
        if n >= 4 {
            let x3 = gen_x(n, 3);
            let w = y.concat(&z.invert())?.concat(&x3.invert())?.pow(3);
            relation("rel.yzx3.cubed".into(), "(y z^-1 x3^-1)^3 = 1".into(), w);
            for j in 4..n {
                let w = y.concat(&z.invert())?.concat(&gen_x(n, j).invert())?.pow(2);
                relation(
                    format!("rel.yzx.x{j}"),
                    format!("(y z^-1 x{j}^-1)^2 = 1"),
                    w,
                );
            }
            let x2 = gen_x(n, 2);
            let long1 = y
                .concat(&z.invert())?
                .concat(&x3.invert())?
                .concat(&y.invert())?
                .concat(&x2)?
                .concat(&x3)?
                .concat(&x2.invert())?
                .pow(2);
            relation(
                "rel.mixed.long1".into(),
                "(y z^-1 x3^-1 y^-1 x2 x3 x2^-1)^2 = 1".into(),
                long1,
            );
            let long2 = z
                .concat(&y.invert())?
                .concat(&x3)?
                .concat(&z)?
                .concat(&y)?
                .concat(&z.invert())?
                .concat(&x2.invert())?
                .concat(&x3.invert())?
                .concat(&x2)?
                .pow(2);
            relation(
                "rel.mixed.long2".into(),
                "(z y^-1 x3 z y z^-1 x2^-1 x3^-1 x2)^2 = 1".into(),
                long2,
            );
        }
    }

    Ok(rep.finish())
}

/// Checks the identities that collapse the lower central series at the second
/// term: each `r_{i+1}` (resp. `s_{i+1}`) equals `r_i` (resp. `s_i`) times an
/// iterated commutator.
pub fn verify_lcs_stabilization(n: usize) -> Result<VerificationReport> {
    if n < 3 {
        return Err(Error::NotApplicable { n, min: 3 });
    }
    let mut rep = VerificationReport::new("lcs_stabilization", n, 0);
    for i in 1..n - 1 {
        let ri = word(n, vec![VGen::r(i)]);
        let ri1 = word(n, vec![VGen::r(i + 1)]);
        let si = word(n, vec![VGen::s(i)]);
        let si1 = word(n, vec![VGen::s(i + 1)]);

        let rhs_r = ri.concat(&comm(&ri, &comm(&ri, &ri1)))?;
        rep.add(
            format!("lcs.r{}", i + 1),
            format!("r{} = r{i} [r{i}, [r{i}, r{}]]", i + 1, i + 1),
            vt_equal(&ri1, &rhs_r)?,
            Some(rhs_r.to_string()),
        );

        let rhs_s = si.concat(&comm(&comm(&ri1, &comm(&ri1, &ri)), &si).invert())?;
        rep.add(
            format!("lcs.s{}", i + 1),
            format!(
                "s{} = s{i} [[r{}, [r{}, r{i}]], s{i}]^-1",
                i + 1,
                i + 1,
                i + 1
            ),
            vt_equal(&si1, &rhs_s)?,
            Some(rhs_s.to_string()),
        );
    }
    Ok(rep.finish())
}

/// Checks that the parity map to the elementary abelian group of order four
/// kills every defining relator and that all four classes are realised.
pub fn verify_vt_abelianization(n: usize) -> Result<VerificationReport> {
    crate::word::check_strands(n)?;
    let mut rep = VerificationReport::new("vt_abelianization", n, 0);

    let mut all_zero = true;
    let mut bad = None;
    for (label, r) in defining_relators(n)?.iter() {
        if r.parity() != (0, 0) {
            all_zero = false;
            bad = Some(format!("{label}: {r}"));
            break;
        }
    }
    rep.add(
        "ab.relators",
        "every defining relator has parity (0,0)",
        all_zero,
        bad,
    );

    let reps = [
        ("", (0u8, 0u8)),
        ("s1", (1, 0)),
        ("r1", (0, 1)),
        ("s1 r1", (1, 1)),
    ];
    for (text, expected) in reps {
        let w = VWord::parse(n, text)?;
        rep.add(
            format!(
                "ab.class.{}",
                if text.is_empty() { "id" } else { text }.replace(' ', "_")
            ),
            format!("parity of `{text}` is {expected:?}"),
            w.parity() == expected,
            Some(w.to_string()),
        );
    }
    Ok(rep.finish())
}

/// Bundles the graph-theoretic facts: neighbourhood sizes, automorphism
/// counts, the domination dichotomy, the component structure away from a
/// star, and chordality.
pub fn verify_graph_claims(n: usize) -> Result<VerificationReport> {
    if !(3..=6).contains(&n) {
        return Err(Error::NotApplicable { n, min: 3 });
    }
    let mut rep = VerificationReport::new("graph_claims", n, 0);
    let graph = defining_graph(n)?;

    let expected_non = 2 * n - 4;
    let expected_star = (((n as i64 - 2) * (n as i64 - 4) + n as i64) / 2) as usize;
    rep.add(
        "graph.non_neighbors",
        format!("every vertex has {expected_non} non-neighbours"),
        graph
            .vertices()
            .iter()
            .all(|&v| graph.non_neighbors(v).len() == expected_non),
        None,
    );
    rep.add(
        "graph.star",
        format!("every star has {expected_star} vertices"),
        graph
            .vertices()
            .iter()
            .all(|&v| graph.star(v).len() == expected_star),
        None,
    );

    let expected_autos = if n == 4 { 48 } else { factorial(n) };
    let autos = graph_automorphisms_with_limit(n, 6)?;
    rep.add(
        "graph.auto_count",
        format!("{expected_autos} graph automorphisms"),
        autos.len() == expected_autos,
        Some(format!("found {}", autos.len())),
    );

    if n >= 4 {
        let pairs = graph.dominating_pairs();
        let expected_pairs = if n == 4 { 6 } else { 0 };
        rep.add(
            "graph.domination",
            format!("{expected_pairs} dominating ordered pairs"),
            pairs.len() == expected_pairs,
            Some(format!("found {}", pairs.len())),
        );

        let comps_ok = graph.vertices().iter().all(|&v| {
            let comps = graph.components_minus_star(v);
            if n == 4 {
                comps.len() == 2
            } else {
                comps.len() == 1
            }
        });
        rep.add(
            "graph.components",
            if n == 4 {
                "two components away from every star".to_string()
            } else {
                "connected away from every star".to_string()
            },
            comps_ok,
            None,
        );
    }

    let expected_chordal = n <= 4;
    rep.add(
        "graph.chordal",
        format!("chordality is {expected_chordal}"),
        graph.is_chordal() == expected_chordal,
        None,
    );
    Ok(rep.finish())
}

/// Checks the strand-forgetting split: the section property, the random-word
/// decomposition, the identification relation among kernel generators, and
/// distinctness of the nested conjugates.
pub fn verify_semidirect(n: usize) -> Result<VerificationReport> {
    verify_semidirect_seeded(n, DEFAULT_SEED)
}

pub fn verify_semidirect_seeded(n: usize, seed: u64) -> Result<VerificationReport> {
    use crate::endo::{f_map, include, u_generator};
    if n < 3 {
        return Err(Error::NotApplicable { n, min: 3 });
    }
    let mut rep = VerificationReport::new("semidirect", n, seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let section_ok = all_gens(n - 1).into_iter().all(|g| {
        let w = RaagWord::generator(n - 1, g).expect("valid generator");
        f_map(&include(n, &w).expect("one strand more")).expect("n >= 3") == w
    });
    rep.add(
        "semi.section",
        "forgetting after adding a strand is the identity",
        section_ok,
        None,
    );

    let mut decomp_ok = true;
    let mut witness = None;
    for _ in 0..DEFAULT_SAMPLES {
        // syllable bound of eight with exponents up to three keeps letter
        // counts within the default length budget
        let w = random_raag_word(&mut rng, n, DEFAULT_MAX_LEN / 3);
        let f = f_map(&w)?;
        let kernel_part = include(n, &f)?.invert().concat(&w)?;
        let reassembled = include(n, &f)?.concat(&kernel_part)?;
        if !f_map(&kernel_part)?.normal_form().is_empty() || !raag_equal(&reassembled, &w)? {
            decomp_ok = false;
            witness = Some(w.to_string());
            break;
        }
    }
    rep.add(
        "semi.decompose",
        format!("{DEFAULT_SAMPLES} random words split as image times kernel"),
        decomp_ok,
        witness,
    );

    let mut ident_ok = true;
    let mut witness = None;
    'outer: for i in 1..n {
        for k in 1..n {
            for l in k + 1..n {
                if k == i || l == i {
                    continue;
                }
                let lam = RaagWord::generator(n - 1, LambdaGen::new(k, l))?;
                for _ in 0..8 {
                    let mu = random_raag_word(&mut rng, n - 1, 6);
                    let u1 = u_generator(n, &mu, i)?;
                    let u2 = u_generator(n, &mu.concat(&lam)?, i)?;
                    if !raag_equal(&u1, &u2)? {
                        ident_ok = false;
                        witness = Some(format!("i={i} k={k} l={l} mu={mu}"));
                        break 'outer;
                    }
                }
            }
        }
    }
    rep.add(
        "semi.identify",
        "conjugating the kernel generator by a disjoint generator changes nothing",
        ident_ok,
        witness,
    );

    let g1 = LambdaGen::new(n - 2, n - 1);
    let g2 = LambdaGen::new(n - 1, n);
    let alphas: Vec<RaagWord> = (0..=10)
        .map(|e| {
            RaagWord::new(n, vec![(g1, -e), (g2, 1), (g1, e)])
                .expect("valid syllables")
                .normal_form()
        })
        .collect();
    let mut distinct = true;
    for a in 0..alphas.len() {
        for b in a + 1..alphas.len() {
            if alphas[a] == alphas[b] {
                distinct = false;
            }
        }
    }
    rep.add(
        "semi.alpha_distinct",
        "nested conjugates of the last generator are pairwise distinct",
        distinct,
        None,
    );

    Ok(rep.finish())
}

/// Runs every suite applicable at `n`, in a fixed order.
pub fn run_all(n: usize, seed: u64) -> Result<Vec<VerificationReport>> {
    crate::word::check_strands(n)?;
    let mut reports = Vec::new();
    if n >= 3 {
        reports.push(verify_reduced_presentation(n)?);
    }
    reports.push(verify_commutator_presentation(n)?);
    if n >= 3 {
        reports.push(verify_lcs_stabilization(n)?);
    }
    reports.push(verify_vt_abelianization(n)?);
    if (3..=6).contains(&n) {
        reports.push(verify_graph_claims(n)?);
    }
    if n >= 3 {
        reports.push(verify_semidirect_seeded(n, seed)?);
    }
    Ok(reports)
}

/// Looks up a single suite by name; `all` is handled by [`run_all`].
pub fn run_suite(name: &str, n: usize, seed: u64) -> Result<VerificationReport> {
    match name {
        "reduced" | "reduced_presentation" => verify_reduced_presentation(n),
        "commutator" | "commutator_presentation" => verify_commutator_presentation(n),
        "lcs" | "lcs_stabilization" => verify_lcs_stabilization(n),
        "abelianization" | "vt_abelianization" => verify_vt_abelianization(n),
        "graph" | "graph_claims" => verify_graph_claims(n),
        "semidirect" => verify_semidirect_seeded(n, seed),
        _ => Err(Error::parse(0, format!("unknown suite `{name}`"))),
    }
}
