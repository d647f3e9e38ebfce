use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::gen::{gen_coloring_problem, gen_poset, gen_structure, GenConfig};
use crate::error::{Error, Result};
use crate::geometry::{count_lattice_points, ehrhart_qsym, hilbert_function};
use crate::invariants::{
    chromatic_polynomial, chromatic_qsym, count_by_transfer_matrix, count_colorings,
};
use crate::io::render_structure;
use crate::problem::{ColoringProblem, Maybe};
use crate::qsym::principal_specialization;
use crate::species::{phi, poset_to_antimatroid, psi, HopfMonoid, HopfStructure, Poset, SpeciesTag};
use crate::subset::{Relabeling, Subset};

/// Outcome of a suite run. `failures` holds `(law, counterexample)` pairs in
/// trial order.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub trials: usize,
    pub failures: Vec<(String, String)>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Names of the laws that failed at least once, in first-failure order.
    pub fn failed_laws(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for (law, _) in &self.failures {
            if !out.contains(&law.as_str()) {
                out.push(law);
            }
        }
        out
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!("{}: {} trials, all laws hold ({:.2?})", self.suite, self.trials, self.elapsed)
        } else {
            format!(
                "{}: {} trials, {} failures in {} ({:.2?})",
                self.suite,
                self.trials,
                self.failures.len(),
                self.failed_laws().join(", "),
                self.elapsed
            )
        }
    }
}

/// Per-trial configs: sizes drawn uniformly from `0..=cfg.ground_size`.
struct TrialSeeds {
    rng: ChaCha8Rng,
    base: GenConfig,
}

impl TrialSeeds {
    fn new(cfg: &GenConfig, trial: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(trial as u64);
        TrialSeeds {
            rng,
            base: cfg.clone(),
        }
    }

    fn next(&mut self) -> GenConfig {
        let size = self.rng.random_range(0..=self.base.ground_size);
        self.sized(size)
    }

    fn sized(&mut self, size: usize) -> GenConfig {
        self.base.with(self.rng.random(), size)
    }
}

type Failures = Vec<(String, String)>;

fn run_trials(
    suite: &str,
    trials: usize,
    cfg: &GenConfig,
    trial: impl Fn(&mut TrialSeeds) -> Failures + Sync,
) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let per_trial: Vec<Failures> = (0..trials)
        .into_par_iter()
        .map(|i| trial(&mut TrialSeeds::new(cfg, i)))
        .collect();
    Ok(SuiteReport {
        suite: suite.to_string(),
        trials,
        failures: per_trial.into_iter().flatten().collect(),
        elapsed: start.elapsed(),
    })
}

/// Collects one counterexample per law within a trial.
struct Checker<'a, H> {
    render: &'a (dyn Fn(&H) -> String + Sync),
    failures: Failures,
}

impl<H> Checker<'_, H> {
    fn check(&mut self, law: &str, ok: bool, witness: impl FnOnce() -> String) {
        if !ok && !self.failures.iter().any(|(l, _)| l == law) {
            self.failures.push((law.to_string(), witness()));
        }
    }

}

/// Fresh labels `l` ↦ `l<suffix>` so that products have disjoint grounds.
fn primed<H: HopfMonoid>(x: &H, suffix: &str) -> H {
    let sigma = Relabeling::new(
        x.ground()
            .labels()
            .iter()
            .map(|l| (l.clone(), format!("{l}{suffix}"))),
    );
    x.relabel(&sigma).expect("suffixing labels is a bijection")
}

fn product_of<H: HopfMonoid>(x: Maybe<H>, y: Maybe<H>) -> Maybe<H> {
    Some(x?.product(&y?).expect("restrictions of disjoint factors stay disjoint"))
}

/// Runs every Hopf monoid law on instances produced by `gen`.
///
/// `render` serializes counterexamples. Three independent instances per
/// trial are made disjoint by relabelling.
pub fn run_axiom_suite_with<H: HopfMonoid>(
    suite: &str,
    trials: usize,
    cfg: &GenConfig,
    gen: impl Fn(&GenConfig) -> H + Sync,
    render: &(dyn Fn(&H) -> String + Sync),
) -> Result<SuiteReport> {
    run_trials(suite, trials, cfg, |seeds| {
        let x = gen(&seeds.next());
        let y = primed(&gen(&seeds.next()), "1");
        let z = primed(&gen(&seeds.next()), "2");
        let mut ck = Checker {
            render,
            failures: Vec::new(),
        };
        axiom_laws(&mut ck, &x, &y, &z, seeds);
        ck.failures
    })
}

fn axiom_laws<H: HopfMonoid>(ck: &mut Checker<'_, H>, x: &H, y: &H, z: &H, seeds: &mut TrialSeeds) {
    let render = ck.render;
    let show = |xs: &[&H]| xs.iter().map(|x| render(x)).collect::<Vec<_>>().join(" ; ");
    let full = x.ground().full();
    let unit = x.empty_like();

    // Naturality: relabelling commutes with restriction and contraction.
    let mut perm: Vec<usize> = (0..x.ground().len()).collect();
    perm.shuffle(&mut seeds.rng);
    let sigma = Relabeling::new(
        x.ground()
            .labels()
            .iter()
            .zip(&perm)
            .map(|(l, i)| (l.clone(), format!("v{i}"))),
    );
    let xs = x.relabel(&sigma).expect("bijective relabelling");
    let back = xs.relabel(&sigma.inverse()).expect("inverse relabelling");
    ck.check("naturality", back == *x && x.relabel(&Relabeling::identity(x.ground())).ok().as_ref() == Some(x), || {
        show(&[x])
    });
    for s in full.subsets() {
        let r = sigma.restrict_to(x.ground(), s);
        let c = sigma.restrict_to(x.ground(), full.difference(s));
        let ok_r = xs.restrict(s) == x.restrict(s).map(|v| v.relabel(&r).expect("restricted bijection"));
        let ok_c = xs.contract(s) == x.contract(s).map(|v| v.relabel(&c).expect("restricted bijection"));
        ck.check("naturality", ok_r && ok_c, || format!("{} at {s:?}", show(&[x])));
    }

    // Monoid laws.
    let xy = x.product(y);
    let zero_divisor_ok = xy.is_ok() && y.product(z).is_ok();
    ck.check("zero divisors", zero_divisor_ok, || show(&[x, y, z]));
    let (Ok(xy), Ok(yz)) = (xy, y.product(z)) else { return };
    let left = xy.product(z);
    let right = x.product(&yz);
    ck.check("associativity", left.is_ok() && left.ok() == right.ok(), || show(&[x, y, z]));
    let lu = unit.product(x);
    let ru = x.product(&unit);
    ck.check("unit", lu.ok().as_ref() == Some(x) && ru.ok().as_ref() == Some(x), || show(&[x]));

    // Comonoid laws.
    ck.check(
        "counit",
        x.restrict(full).as_ref() == Some(x) && x.contract(Subset::EMPTY).as_ref() == Some(x),
        || show(&[x]),
    );
    ck.check(
        "connectedness",
        x.restrict(Subset::EMPTY).as_ref() == Some(&unit) && x.contract(full).as_ref() == Some(&unit),
        || show(&[x]),
    );
    for s in full.subsets() {
        let xs_ = x.restrict(s);
        let xc = x.contract(s);
        ck.check("zero conditions", xs_.is_some() == xc.is_some(), || {
            format!("{} at {s:?}", show(&[x]))
        });
        if x.is_stable() {
            let ok = xs_.as_ref().is_none_or(|v| v.is_stable()) && xc.as_ref().is_none_or(|v| v.is_stable());
            ck.check("stable subcomonoid", ok, || format!("{} at {s:?}", show(&[x])));
        }
        for r in s.subsets() {
            // x|_S / R == (x/R)|_{S∖R}
            let lhs = x.minor(r, s);
            let rhs = x.contract(r).and_then(|v| v.restrict(s.difference(r).compress(full.difference(r))));
            let mut ok = lhs == rhs;
            if lhs.is_some() {
                // (x|_S)|_R == x|_R and x/S == (x/R)/(S∖R)
                ok &= xs_.as_ref().and_then(|v| v.restrict(r.compress(s))) == x.restrict(r);
                ok &= xc == x.contract(r).and_then(|v| v.contract(s.difference(r).compress(full.difference(r))));
            }
            ck.check("coassociativity", ok, || {
                format!("{} at R={r:?} S={s:?}", show(&[x]))
            });
            // Combinatorial comonoid: x|_R, x|_S nonzero forces x|_S / R nonzero.
            if x.restrict(r).is_some() && xs_.is_some() {
                ck.check("combinatorial comonoid", lhs.is_some(), || {
                    format!("{} at R={r:?} S={s:?}", show(&[x]))
                });
            }
        }
    }

    // Bimonoid compatibility on x·y.
    let m = x.ground().len();
    let low = Subset::full(m);
    for s in xy.ground().full().subsets() {
        let sx = s.intersection(low);
        let sy = Subset::from_bits(s.bits() >> m);
        let ok_r = xy.restrict(s) == product_of(x.restrict(sx), y.restrict(sy));
        let ok_c = xy.contract(s) == product_of(x.contract(sx), y.contract(sy));
        ck.check("compatibility", ok_r && ok_c, || {
            format!("{} at {s:?}", show(&[x, y]))
        });
    }

    // Stability structure.
    let both = x.is_stable() && y.is_stable();
    ck.check("stable submonoid", !both || xy.is_stable(), || show(&[x, y]));
    ck.check("unstable ideal", both || !xy.is_stable(), || show(&[x, y]));
}

/// The axiom suite for one species, with sizes up to `cfg.ground_size`.
pub fn run_axiom_suite(tag: SpeciesTag, trials: usize, cfg: &GenConfig) -> Result<SuiteReport> {
    run_axiom_suite_with(
        &format!("axioms[{}]", tag.name()),
        trials,
        cfg,
        |c| gen_structure(tag, c),
        &render_structure,
    )
}

fn render_problem(c: &ColoringProblem) -> String {
    render_structure(&HopfStructure::ColoringProblem(c.clone()))
}

fn fail(law: &str, detail: String) -> std::result::Result<(), (String, String)> {
    Err((law.to_string(), detail))
}

type Check = std::result::Result<(), (String, String)>;

/// `chromatic_polynomial`, the transfer matrix and the brute-force count agree
/// for `k = 0..=5`.
pub fn check_oracle_agreement(c: &ColoringProblem) -> Check {
    let poly = chromatic_polynomial(c).map_err(|e| ("oracle agreement".into(), e.to_string()))?;
    for k in 0..=5u32 {
        let brute = count_colorings(c, k).map_err(|e| ("oracle agreement".into(), e.to_string()))?;
        let walk = count_by_transfer_matrix(c, k).map_err(|e| ("oracle agreement".into(), e.to_string()))?;
        if poly.eval_int(k as i64) != BigInt::from(brute).into() || walk != brute.into() {
            return fail("oracle agreement", format!("{} at k={k}", render_problem(c)));
        }
    }
    Ok(())
}

/// The principal specialization of the chromatic quasisymmetric function
/// counts colorings.
pub fn check_specialization(c: &ColoringProblem) -> Check {
    let q = chromatic_qsym(c);
    for k in 0..=5u32 {
        let brute = count_colorings(c, k).map_err(|e| ("specialization".into(), e.to_string()))?;
        if principal_specialization(&q, k as u64) != BigInt::from(brute) {
            return fail("specialization", format!("{} at k={k}", render_problem(c)));
        }
    }
    Ok(())
}

pub fn check_multiplicativity(c: &ColoringProblem, d: &ColoringProblem) -> Check {
    let cd = c.product(d).map_err(|e| ("multiplicativity".into(), e.to_string()))?;
    if chromatic_qsym(&cd) != chromatic_qsym(c).mul(&chromatic_qsym(d)) {
        return fail("multiplicativity", format!("{} ; {}", render_problem(c), render_problem(d)));
    }
    Ok(())
}

/// `χ(x+y) = Σ_{S ∈ p} χ(c|_S, x) χ(c/S, y)` for `x + y ≤ 5`.
pub fn check_binomial(c: &ColoringProblem) -> Check {
    let err = |e: Error| ("binomial".to_string(), e.to_string());
    for total in 0..=5u32 {
        let lhs = count_colorings(c, total).map_err(err)?;
        for x in 0..=total {
            let mut rhs = 0u64;
            for s in c.family().iter() {
                let r = c.restrict(s).expect("family member");
                let q = c.contract(s).expect("family member");
                rhs += count_colorings(&r, x).map_err(err)? * count_colorings(&q, total - x).map_err(err)?;
            }
            if lhs != rhs {
                return fail("binomial", format!("{} at x={x} y={}", render_problem(c), total - x));
            }
        }
    }
    Ok(())
}

/// Hilbert function in degree `n` equals `χ(n+1)`, for `n = 0..=4`.
pub fn check_hilbert(c: &ColoringProblem) -> Check {
    let poly = chromatic_polynomial(c).map_err(|e| ("hilbert".into(), e.to_string()))?;
    for n in 0..=4u32 {
        let h = hilbert_function(c, n).map_err(|e| ("hilbert".into(), e.to_string()))?;
        if poly.eval_int(n as i64 + 1) != BigInt::from(h).into() {
            return fail("hilbert", format!("{} at n={n}", render_problem(c)));
        }
    }
    Ok(())
}

pub fn check_ehrhart(c: &ColoringProblem) -> Check {
    if ehrhart_qsym(c) != chromatic_qsym(c) {
        return fail("ehrhart", render_problem(c));
    }
    Ok(())
}

/// Lattice points in `[1, box]^N` match colorings with `box` colors, `box = 1..=4`.
pub fn check_lattice_points(c: &ColoringProblem) -> Check {
    let err = |e: Error| ("lattice points".to_string(), e.to_string());
    for b in 1..=4u32 {
        if count_lattice_points(c, b).map_err(err)? != count_colorings(c, b).map_err(err)? {
            return fail("lattice points", format!("{} at box={b}", render_problem(c)));
        }
    }
    Ok(())
}

/// `φ` preserves products, restrictions, contractions (zero included) and stability.
pub fn check_phi_morphism<H: HopfMonoid>(x: &H, y: &H, render: impl Fn(&H) -> String) -> Check {
    let px = phi(x);
    let xy = x.product(y).map_err(|e| ("phi morphism".into(), e.to_string()))?;
    if phi(&xy) != px.product(&phi(y)).expect("disjoint grounds") {
        return fail("phi morphism", format!("product of {} ; {}", render(x), render(y)));
    }
    for s in x.ground().full().subsets() {
        if x.restrict(s).map(|v| phi(&v)) != px.restrict(s) {
            return fail("phi morphism", format!("restriction of {} to {s:?}", render(x)));
        }
        if x.contract(s).map(|v| phi(&v)) != px.contract(s) {
            return fail("phi morphism", format!("contraction of {} by {s:?}", render(x)));
        }
    }
    if x.is_stable() != px.is_stable() {
        return fail("phi morphism", format!("stability of {}", render(x)));
    }
    Ok(())
}

pub fn check_psi_preservation<H: HopfMonoid>(x: &H, render: impl Fn(&H) -> String) -> Check {
    if psi(x) != chromatic_qsym(&phi(x)) {
        return fail("psi preservation", render(x));
    }
    Ok(())
}

pub fn check_phi_idempotence(c: &ColoringProblem) -> Check {
    if phi(c) != *c {
        return fail("phi idempotence", render_problem(c));
    }
    Ok(())
}

/// The order-ideal antimatroid commutes with product, restriction and contraction.
pub fn check_j_naturality(p: &Poset, q: &Poset) -> Check {
    let show = |p: &Poset| render_structure(&HopfStructure::Poset(p.clone()));
    let pq = p.product(q).map_err(|e| ("J naturality".into(), e.to_string()))?;
    let jp = poset_to_antimatroid(p);
    if poset_to_antimatroid(&pq) != jp.product(&poset_to_antimatroid(q)).expect("disjoint grounds") {
        return fail("J naturality", format!("product of {} ; {}", show(p), show(q)));
    }
    for s in p.ground().full().subsets() {
        let ok = p.restrict(s).map(|v| poset_to_antimatroid(&v)) == jp.restrict(s)
            && p.contract(s).map(|v| poset_to_antimatroid(&v)) == jp.contract(s);
        if !ok {
            return fail("J naturality", format!("{} at {s:?}", show(p)));
        }
    }
    Ok(())
}

/// Cross-module identities on random coloring problems and random structures
/// of every species.
pub fn run_theorem_suite(trials: usize, cfg: &GenConfig) -> Result<SuiteReport> {
    run_trials("theorems", trials, cfg, |seeds| {
        let c = gen_coloring_problem(&seeds.next());
        let size = seeds.rng.random_range(0..=(cfg.ground_size + 2 - c.len()).min(cfg.ground_size));
        let d = primed(&gen_coloring_problem(&seeds.sized(size)), "1");
        let mut results = vec![
            check_oracle_agreement(&c),
            check_specialization(&c),
            check_multiplicativity(&c, &d),
            check_binomial(&c),
            check_hilbert(&c),
            check_ehrhart(&c),
            check_lattice_points(&c),
            check_phi_idempotence(&c),
        ];
        for tag in SpeciesTag::ALL {
            let x = gen_structure(tag, &seeds.next());
            let y = primed(&gen_structure(tag, &seeds.next()), "1");
            results.push(check_phi_morphism(&x, &y, render_structure));
            results.push(check_psi_preservation(&x, render_structure));
        }
        let p = gen_poset(&seeds.next());
        let q = primed(&gen_poset(&seeds.next()), "1");
        results.push(check_j_naturality(&p, &q));
        results.into_iter().filter_map(|r| r.err()).collect()
    })
}
