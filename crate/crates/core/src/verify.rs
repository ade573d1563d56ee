//! Cross-checks between the combinatorial predictions and the oracle, for
//! single ideals and for seeded sweeps over random loop graphs.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis::{
    classify_first_nonlinear, cycle_complement_betti, diagonal_betti, first_step_in_row,
    has_linear_resolution, linear_presentation_routes, verify_shape, NonlinearClassification,
};
use crate::graph::{is_chordal, min_degree_one_cycle_check};
use crate::ideal::{MonomialIdeal, Multidegree};
use crate::io::to_ideal_format;
use crate::oracle::{
    linear_strand_betti, BettiTable, ExactField, HochsterOracle, MultigradedBetti, OracleError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Predicted `i_3`, `beta_{i_3,i_3+3}` and the vanishing beyond it.
    FirstNonlinearStep,
    /// Multidegrees carried by the first nonlinear syzygies.
    MultigradedRefinement,
    /// `beta_{i,2(i+1)}` counts induced matchings of `i+1` edges.
    DiagonalLaw,
    /// Squarefree: linear resolution iff chordal complement.
    ChordalComplement,
    Shape,
    /// The three linear-presentation tests agree with each other and the oracle.
    LinearPresentation,
    /// `beta_{0,2}` is the number of generators.
    Normalization,
    /// Multigraded entries sum to the graded ones.
    GradedMultigraded,
    /// Component counts reproduce the linear strand.
    LinearStrand,
    /// Linearly presented with squares: same behaviour as the squarefree part.
    SquarefreePart,
    /// Closed formula and palindromic strand for complements of cycles.
    CycleComplement,
    /// Degree-one vertices lie on no chordless cycle of length >= 5 in the complement.
    WhiskerCycles,
    /// Restriction to a predicted multidegree keeps the multigraded numbers.
    Restriction,
}

impl CheckKind {
    pub const ALL: [CheckKind; 13] = [
        CheckKind::FirstNonlinearStep,
        CheckKind::MultigradedRefinement,
        CheckKind::DiagonalLaw,
        CheckKind::ChordalComplement,
        CheckKind::Shape,
        CheckKind::LinearPresentation,
        CheckKind::Normalization,
        CheckKind::GradedMultigraded,
        CheckKind::LinearStrand,
        CheckKind::SquarefreePart,
        CheckKind::CycleComplement,
        CheckKind::WhiskerCycles,
        CheckKind::Restriction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::FirstNonlinearStep => "first_nonlinear_step",
            CheckKind::MultigradedRefinement => "multigraded_refinement",
            CheckKind::DiagonalLaw => "diagonal_law",
            CheckKind::ChordalComplement => "chordal_complement",
            CheckKind::Shape => "shape",
            CheckKind::LinearPresentation => "linear_presentation",
            CheckKind::Normalization => "normalization",
            CheckKind::GradedMultigraded => "graded_multigraded",
            CheckKind::LinearStrand => "linear_strand",
            CheckKind::SquarefreePart => "squarefree_part",
            CheckKind::CycleComplement => "cycle_complement",
            CheckKind::WhiskerCycles => "whisker_cycles",
            CheckKind::Restriction => "restriction",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub kind: CheckKind,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of the full battery on one ideal. Checks that do not apply to the
/// ideal are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ideal: String,
    pub classification: String,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, kind: CheckKind) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(move |c| c.kind == kind)
    }
}

struct Recorder(Vec<CheckResult>);

impl Recorder {
    fn push(&mut self, kind: CheckKind, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckResult {
            kind,
            passed,
            detail: detail.into(),
        });
    }
}

/// Fields every ideal is checked over; `extra` is added when it is neither.
pub fn verification_fields(extra: Option<ExactField>) -> Vec<ExactField> {
    let mut fields = vec![ExactField::Rationals, ExactField::Prime(2)];
    if let Some(f) = extra {
        if !fields.contains(&f) {
            fields.push(f);
        }
    }
    fields
}

fn first_nonlinear_step(class: &NonlinearClassification, t: &BettiTable) -> Result<(), String> {
    let i3 = class.i3();
    let oracle_i3 = first_step_in_row(t, 3);
    if oracle_i3 != i3 {
        return Err(format!("i3: predicted {i3}, oracle {oracle_i3}"));
    }
    if i3 == 0 {
        return if t.is_linear() {
            Ok(())
        } else {
            Err("predicted linear resolution, oracle has several rows".into())
        };
    }
    let beta = t.get(i3, i3 + 3);
    if beta != BigUint::from(class.beta()) {
        return Err(format!(
            "beta_{{{i3},{}}}: predicted {}, oracle {beta}",
            i3 + 3,
            class.beta()
        ));
    }
    if let Some((i, j, v)) = t.iter().find(|&(i, j, _)| i <= i3 && j > i3 + 3) {
        return Err(format!("beta_{{{i},{j}}} = {v} should vanish"));
    }
    Ok(())
}

/// `None` when the check does not apply, else the failure description
/// (empty on success).
fn multigraded_refinement(
    class: &NonlinearClassification,
    mg: &MultigradedBetti,
) -> Option<String> {
    let NonlinearClassification::FirstStepR {
        r, multidegrees, ..
    } = class
    else {
        return None;
    };
    let step = r - 3;
    for (i, s, v) in mg.iter() {
        if s.len() == *r
            && i <= step
            && (i != step || v != 1 || !multidegrees.iter().any(|m| m == s))
        {
            return Some(format!("unexpected beta_{{{i},{s:?}}} = {v}"));
        }
    }
    for m in multidegrees {
        if mg.get(step, m) != 1 {
            return Some(format!(
                "beta_{{{step},{m:?}}} = {}, expected 1",
                mg.get(step, m)
            ));
        }
    }
    Some(String::new())
}

/// Runs every applicable check on `ideal` over the given fields.
pub fn verify_ideal(
    ideal: &MonomialIdeal,
    fields: &[ExactField],
    cap: usize,
) -> Result<VerifyReport, OracleError> {
    let class = classify_first_nonlinear(ideal);
    let pol = ideal.polarize();
    let mut rec = Recorder(Vec::new());

    let mut tables = Vec::with_capacity(fields.len());
    for &field in fields {
        let oracle = HochsterOracle::new(field).with_cap(cap)?;
        let t = oracle.graded_betti(ideal)?;

        match first_nonlinear_step(&class, &t) {
            Ok(()) => rec.push(
                CheckKind::FirstNonlinearStep,
                true,
                format!("{field}: i3 = {}", class.i3()),
            ),
            Err(e) => rec.push(
                CheckKind::FirstNonlinearStep,
                false,
                format!("{field}: {e}"),
            ),
        }

        let n = ideal.num_vars();
        let bad_diag = (0..n).find_map(|i| {
            let predicted = BigUint::from(diagonal_betti(ideal, i));
            let got = t.get(i, 2 * (i + 1));
            (predicted != got).then(|| {
                format!(
                    "{field}: beta_{{{i},{}}} = {got}, predicted {predicted}",
                    2 * (i + 1)
                )
            })
        });
        rec.push(
            CheckKind::DiagonalLaw,
            bad_diag.is_none(),
            bad_diag.unwrap_or_else(|| field.to_string()),
        );

        let shape = verify_shape(&t);
        rec.push(
            CheckKind::Shape,
            shape.valid,
            format!("{field}: indices {:?}", shape.indices),
        );

        let norm = t.get(0, 2) == BigUint::from(ideal.num_generators())
            && t.iter().all(|(i, j, _)| i > 0 || j == 2);
        rec.push(
            CheckKind::Normalization,
            norm,
            format!("{field}: beta_{{0,2}} = {}", t.get(0, 2)),
        );

        if ideal.is_squarefree() {
            let one_row = t.num_rows() <= 1;
            let chordal = is_chordal(&ideal.to_graph().complement());
            let ok = one_row == chordal && chordal == has_linear_resolution(ideal);
            rec.push(
                CheckKind::ChordalComplement,
                ok,
                format!("{field}: one row = {one_row}, chordal complement = {chordal}"),
            );
        }

        let mg = oracle.multigraded_betti(ideal)?;
        let consistent = mg.to_graded() == t;
        rec.push(CheckKind::GradedMultigraded, consistent, field.to_string());

        if let Some(detail) = multigraded_refinement(&class, &mg) {
            rec.push(
                CheckKind::MultigradedRefinement,
                detail.is_empty(),
                format!("{field} {detail}").trim().to_string(),
            );
        }
        tables.push((field, t));
    }

    if let Some((_, t)) = tables.first() {
        let strand = linear_strand_betti(&pol.ideal)?;
        let row: Vec<BigUint> = t.row(2);
        let trimmed: Vec<BigUint> = {
            let mut r = row.clone();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
            r
        };
        rec.push(
            CheckKind::LinearStrand,
            strand == trimmed,
            format!(
                "components {:?}",
                strand.iter().map(ToString::to_string).collect::<Vec<_>>()
            ),
        );

        let routes = linear_presentation_routes(ideal);
        let oracle_lp = t.get(1, 4).is_zero();
        rec.push(
            CheckKind::LinearPresentation,
            routes.consistent() && routes.value() == oracle_lp,
            format!(
                "no 2K2 = {}, generator conditions = {}, edge graph diameter = {}, oracle = {oracle_lp}",
                routes.no_induced_matching, routes.generator_conditions, routes.diameter
            ),
        );

        if !ideal.is_squarefree() && routes.value() {
            if let Ok(sq) = ideal.squarefree_part() {
                let oracle = HochsterOracle::new(ExactField::Rationals).with_cap(cap)?;
                let ts = oracle.graded_betti(&sq)?;
                let ok = t.is_linear() == ts.is_linear()
                    && first_step_in_row(t, 3) == first_step_in_row(&ts, 3);
                rec.push(
                    CheckKind::SquarefreePart,
                    ok,
                    format!(
                        "i3 = {} vs {}",
                        first_step_in_row(t, 3),
                        first_step_in_row(&ts, 3)
                    ),
                );
            }
        }
    }

    let n = ideal.num_vars();
    if n >= 4 && MonomialIdeal::cycle_complement(n).as_ref() == Ok(ideal) {
        let predicted = cycle_complement_betti(n).expect("n >= 4");
        for (field, t) in &tables {
            let row = t.row(2);
            let strand = &row[..=n - 4];
            let palindrome = strand.iter().eq(strand.iter().rev());
            let ok = *t == predicted && palindrome && t.get(n - 3, n).is_one();
            rec.push(CheckKind::CycleComplement, ok, format!("{field}: n = {n}"));
        }
    }

    let polar_graph = pol.ideal.to_graph().strip_loops();
    let tips: Vec<usize> = polar_graph
        .vertices()
        .iter()
        .filter(|&v| polar_graph.degree(v) == 1)
        .collect();
    if !tips.is_empty() {
        let bad: Vec<usize> = tips
            .iter()
            .copied()
            .filter(|&v| !min_degree_one_cycle_check(&polar_graph, v).unwrap_or(false))
            .collect();
        rec.push(
            CheckKind::WhiskerCycles,
            bad.is_empty(),
            format!("degree-one vertices {tips:?}, failing {bad:?}"),
        );
    }

    if let NonlinearClassification::FirstStepR { multidegrees, .. } = &class {
        let oracle = HochsterOracle::new(ExactField::Rationals).with_cap(cap)?;
        let m = &multidegrees[0];
        let s = Multidegree::squarefree(pol.ideal.num_vars(), m.iter().copied());
        let ok = oracle.restriction_consistency_check(&pol.ideal, &s)?;
        rec.push(CheckKind::Restriction, ok, format!("support {m:?}"));
    }

    Ok(VerifyReport {
        ideal: ideal.to_string(),
        classification: class.name().to_string(),
        checks: rec.0,
    })
}

/// Parameters of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub seed: u64,
    /// Number of random graphs.
    pub count: usize,
    /// Number of extra graphs whose complement contains a planted chordless
    /// cycle of length at least 5.
    pub planted: usize,
    pub n_min: usize,
    pub n_max: usize,
    /// Random graphs whose polarization has more variables are redrawn.
    pub max_polarized: Option<usize>,
    /// Every loop graph on up to this many vertices is included; 0 disables.
    pub exhaustive_max_n: usize,
    pub cap: usize,
    pub fields: Vec<ExactField>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            seed: 1,
            count: 200,
            planted: 100,
            n_min: 4,
            n_max: 8,
            max_polarized: Some(9),
            exhaustive_max_n: 4,
            cap: crate::oracle::DEFAULT_CAP,
            fields: verification_fields(None),
        }
    }
}

/// Random graph draws that fail the size filter this many times in a row are
/// given up on.
const MAX_REDRAWS: usize = 1000;

/// Loop graph on `n` vertices with each of the `n(n+1)/2` possible edges and
/// loops present independently with probability `p`, as an ideal.
pub fn random_ideal(rng: &mut impl Rng, n: usize, p: f64) -> Option<MonomialIdeal> {
    let gens: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i..=n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    MonomialIdeal::new(n, gens).ok()
}

/// Every nonempty loop graph on exactly `n` vertices.
pub fn all_ideals(n: usize) -> Vec<MonomialIdeal> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    (1u64..1 << pairs.len())
        .map(|mask| {
            let gens = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p);
            MonomialIdeal::new(n, gens).expect("valid generators")
        })
        .collect()
}

/// Ideal on `n` vertices whose graph's complement has the chordless cycle
/// through `cycle` (in order), every other pair of vertices at least one of
/// which is off the cycle joined with probability `p`, and loops added with
/// probability `loop_p`.
pub fn planted_cycle_ideal(
    rng: &mut impl Rng,
    n: usize,
    cycle: &[usize],
    p: f64,
    loop_p: f64,
) -> Option<MonomialIdeal> {
    let r = cycle.len();
    let on_cycle = |v: usize| cycle.contains(&v);
    let cycle_edge = |u: usize, v: usize| {
        (0..r).any(|k| {
            let (a, b) = (cycle[k], cycle[(k + 1) % r]);
            (a, b) == (u, v) || (b, a) == (u, v)
        })
    };
    let mut gens = Vec::new();
    for i in 1..=n {
        if rng.gen_bool(loop_p) {
            gens.push((i, i));
        }
        for j in i + 1..=n {
            let in_complement = if on_cycle(i) && on_cycle(j) {
                cycle_edge(i, j)
            } else {
                rng.gen_bool(p)
            };
            if !in_complement {
                gens.push((i, j));
            }
        }
    }
    MonomialIdeal::new(n, gens).ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    Exhaustive,
    Random,
    Planted,
}

/// The instance list of a sweep: exhaustive ideals, then random ones, then
/// planted ones.
/// The second component counts random draws abandoned by the size filter.
pub fn sweep_instances(cfg: &SweepConfig) -> (Vec<(Origin, MonomialIdeal)>, usize) {
    let mut out: Vec<(Origin, MonomialIdeal)> = (1..=cfg.exhaustive_max_n)
        .flat_map(all_ideals)
        .map(|i| (Origin::Exhaustive, i))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut abandoned = 0;
    for _ in 0..cfg.count {
        let mut found = None;
        for _ in 0..MAX_REDRAWS {
            let n = rng.gen_range(cfg.n_min..=cfg.n_max);
            let p: f64 = rng.gen_range(0.05..0.95);
            let Some(ideal) = random_ideal(&mut rng, n, p) else {
                continue;
            };
            let size = ideal.polarize().ideal.num_vars();
            if cfg.max_polarized.is_none_or(|m| size <= m) {
                found = Some(ideal);
                break;
            }
        }
        match found {
            Some(i) => out.push((Origin::Random, i)),
            None => abandoned += 1,
        }
    }
    let n_lo = cfg.n_min.max(5);
    for _ in 0..cfg.planted {
        let mut found = None;
        for _ in 0..MAX_REDRAWS {
            if n_lo > cfg.n_max {
                break;
            }
            let n = rng.gen_range(n_lo..=cfg.n_max);
            let r = rng.gen_range(5..=n);
            let mut order: Vec<usize> = (1..=n).collect();
            order.shuffle(&mut rng);
            let p: f64 = rng.gen_range(0.05..0.95);
            let loop_p: f64 = rng.gen_range(0.0..0.3);
            let Some(ideal) = planted_cycle_ideal(&mut rng, n, &order[..r], p, loop_p) else {
                continue;
            };
            let size = ideal.polarize().ideal.num_vars();
            if cfg.max_polarized.is_none_or(|m| size <= m) {
                found = Some(ideal);
                break;
            }
        }
        match found {
            Some(i) => out.push((Origin::Planted, i)),
            None => abandoned += 1,
        }
    }
    (out, abandoned)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

/// An ideal that failed, ready to be written to a file and replayed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub ideal: String,
    pub replay: String,
    pub failed: Vec<CheckResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub exhaustive: usize,
    pub random: usize,
    pub planted: usize,
    /// Random draws abandoned plus instances over the cap.
    pub skipped: usize,
    pub first_step_r: usize,
    pub squarefree: usize,
    pub tallies: BTreeMap<CheckKind, Tally>,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tally(&self, kind: CheckKind) -> Tally {
        self.tallies.get(&kind).cloned().unwrap_or_default()
    }
}

pub fn run_sweep(cfg: &SweepConfig) -> SweepReport {
    let (instances, abandoned) = sweep_instances(cfg);
    let results: Vec<(Origin, &MonomialIdeal, Result<VerifyReport, OracleError>)> = instances
        .par_iter()
        .map(|(o, i)| (*o, i, verify_ideal(i, &cfg.fields, cfg.cap)))
        .collect();

    let mut report = SweepReport {
        config: cfg.clone(),
        exhaustive: 0,
        random: 0,
        planted: 0,
        skipped: abandoned,
        first_step_r: 0,
        squarefree: 0,
        tallies: BTreeMap::new(),
        failures: Vec::new(),
    };
    for (origin, ideal, result) in results {
        let v = match result {
            Ok(v) => v,
            Err(OracleError::CapExceeded { .. }) => {
                report.skipped += 1;
                continue;
            }
            Err(e) => {
                report.failures.push(SweepFailure {
                    ideal: ideal.to_string(),
                    replay: to_ideal_format(ideal),
                    failed: vec![CheckResult {
                        kind: CheckKind::FirstNonlinearStep,
                        passed: false,
                        detail: e.to_string(),
                    }],
                });
                continue;
            }
        };
        match origin {
            Origin::Exhaustive => report.exhaustive += 1,
            Origin::Random => report.random += 1,
            Origin::Planted => report.planted += 1,
        }
        if v.classification == "FirstStepR" {
            report.first_step_r += 1;
        }
        if ideal.is_squarefree() {
            report.squarefree += 1;
        }
        for c in &v.checks {
            let t = report.tallies.entry(c.kind).or_default();
            if c.passed {
                t.passed += 1;
            } else {
                t.failed += 1;
            }
        }
        if !v.passed() {
            report.failures.push(SweepFailure {
                ideal: v.ideal.clone(),
                replay: to_ideal_format(ideal),
                failed: v.failures().cloned().collect(),
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn worked_ideal() -> MonomialIdeal {
        MonomialIdeal::new(5, [(1, 1), (1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn worked_ideal_passes() {
        let r = verify_ideal(&worked_ideal(), &verification_fields(None), 16).unwrap();
        assert!(r.passed(), "{r:#?}");
        assert_eq!(r.classification, "FirstStepOne");
        assert!(r.check(CheckKind::LinearPresentation).count() == 1);
        assert!(r.check(CheckKind::WhiskerCycles).count() == 1);
    }

    #[test]
    fn cycle_complements_pass() {
        for n in 4..=7 {
            let i = MonomialIdeal::cycle_complement(n).unwrap();
            let r = verify_ideal(&i, &verification_fields(None), 16).unwrap();
            assert!(r.passed(), "{r:#?}");
            assert_eq!(r.check(CheckKind::CycleComplement).count(), 2);
        }
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(all_ideals(1).len(), 1);
        assert_eq!(all_ideals(2).len(), 7);
        assert_eq!(all_ideals(3).len(), 63);
    }

    #[test]
    fn sweeps_are_reproducible() {
        let cfg = SweepConfig {
            count: 20,
            planted: 0,
            exhaustive_max_n: 0,
            ..SweepConfig::default()
        };
        let (a, _) = sweep_instances(&cfg);
        let (b, _) = sweep_instances(&cfg);
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        assert!(a.iter().all(|(_, i)| i.polarize().ideal.num_vars() <= 9));
        let other = sweep_instances(&SweepConfig { seed: 2, ..cfg }).0;
        assert_ne!(a, other);
    }

    #[test]
    fn small_sweep_passes() {
        let cfg = SweepConfig {
            count: 10,
            planted: 10,
            exhaustive_max_n: 3,
            ..SweepConfig::default()
        };
        let r = run_sweep(&cfg);
        assert!(r.passed(), "{:#?}", r.failures);
        assert_eq!(r.exhaustive, 1 + 7 + 63);
        assert_eq!(r.random, 10);
        assert_eq!(r.planted, 10);
    }
}
