//! Named verification suites: each expands a [`ParamGrid`] into independent
//! tasks, one per check id and parameter set.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::families::{HahnParams, KrawtchoukParams, QRacahParams, RacahParams, WilsonParams};
use crate::identities::dual_addition::{classical_dual_addition, q_dual_addition, DualMode};
use crate::identities::theorem::{theorem, CquTable};
use crate::identities::{
    addition, duality, linearization, orthogonality, restriction, run_check, structural, CheckReport,
    Checker, ParamGrid, Pythagorean,
};
use crate::numerics::{
    aw_h0_deviation, aw_weight, bessel_script_j, cqu_orthogonality_residual, cqu_weight, limit_check,
    LimitKind, LimitSpec, Quadrature,
};
use crate::params::QParams;
use crate::rat::Rat;

/// `m, n` bound for the continuous q-ultraspherical duality.
pub const DUALITY_MMAX: usize = 6;
/// Bounds for the restriction check: `j <= m <= ℓ <= 3`, `m <= n <= 4`.
pub const RESTRICTION_LMAX: usize = 3;
pub const RESTRICTION_NMAX: usize = 4;
/// Largest `N` for Racah checks (the positive parameter set stops there).
pub const RACAH_NMAX: usize = 4;
/// Largest degree for the addition and product formulas.
pub const ADDITION_NMAX: usize = 5;
/// Largest `m, n` for the quadrature orthogonality check.
pub const QUADRATURE_NMAX: usize = 4;
/// Dyadic exponents of the limit schedules.
pub const LIMIT_SCHEDULE: std::ops::RangeInclusive<u32> = 4..=10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Duality,
    Orthogonality,
    WeightRecurrence,
    Difference,
    BackwardShift,
    Linearization,
    Theorem,
    DualAddition,
    Addition,
    Restriction,
    ProductFormula,
    Limits,
    NumericOrthogonality,
    All,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Duality,
        Suite::Orthogonality,
        Suite::WeightRecurrence,
        Suite::Difference,
        Suite::BackwardShift,
        Suite::Linearization,
        Suite::Theorem,
        Suite::DualAddition,
        Suite::Addition,
        Suite::Restriction,
        Suite::ProductFormula,
        Suite::Limits,
        Suite::NumericOrthogonality,
        Suite::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Orthogonality => "orthogonality",
            Suite::WeightRecurrence => "weight-recurrence",
            Suite::Difference => "difference",
            Suite::BackwardShift => "backward-shift",
            Suite::Linearization => "linearization",
            Suite::Theorem => "theorem-5-1",
            Suite::DualAddition => "dual-addition",
            Suite::Addition => "addition",
            Suite::Restriction => "restriction",
            Suite::ProductFormula => "product-formula",
            Suite::Limits => "limits",
            Suite::NumericOrthogonality => "numeric-orthogonality",
            Suite::All => "all",
        }
    }

    /// The suites `all` is made of.
    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::ALL.into_iter().filter(|s| *s != Suite::All).collect(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite '{s}'")))
    }
}

impl Serialize for Suite {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

type Body = Arc<dyn Fn(&mut Checker) -> Result<()> + Send + Sync>;

/// One check with fixed parameters.
#[derive(Clone)]
pub struct Task {
    pub id: String,
    pub params: BTreeMap<String, String>,
    body: Body,
}

impl fmt::Debug for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Task").field("id", &self.id).field("params", &self.params).finish()
    }
}

impl Task {
    fn new<K: Into<String>>(
        id: &str,
        params: Vec<(K, String)>,
        body: impl Fn(&mut Checker) -> Result<()> + Send + Sync + 'static,
    ) -> Task {
        Task {
            id: id.to_string(),
            params: params.into_iter().map(|(k, v)| (k.into(), v)).collect(),
            body: Arc::new(body),
        }
    }

    /// Runs the check; `probe` corrupts the comparison with that index.
    pub fn run(&self, probe: Option<usize>) -> CheckReport {
        run_check(self.id.clone(), self.params.clone(), probe, |ck| (self.body)(ck))
    }
}

/// Rejects grids that some family cannot accept.
pub fn validate_grid(grid: &ParamGrid) -> Result<()> {
    if grid.qparams.is_empty() {
        return invalid("grid needs at least one q parameter pair");
    }
    if let Some(a) = grid.alphas.iter().find(|a| **a <= Rat::new(-1, 2)) {
        return invalid(format!("classical checks need α > -1/2 (got {a})"));
    }
    if grid.nmax < 2 {
        return invalid("nmax must be at least 2 for the difference formula");
    }
    Ok(())
}

fn qkey(qp: &QParams) -> (&'static str, String) {
    ("qparams", qp.to_string())
}

fn triples() -> Vec<Pythagorean> {
    Pythagorean::standard().into_iter().take(3).collect()
}

fn krawtchouk_p() -> Rat {
    Rat::new(1, 3)
}

fn hahn_pairs() -> [(Rat, Rat); 2] {
    [(Rat::zero(), Rat::zero()), (Rat::new(1, 2), Rat::new(3, 2))]
}

/// `(α, β, δ)` with positive Racah weights for `N <= 4`.
fn racah_positive(big_n: usize) -> RacahParams {
    RacahParams::finite(Rat::new(1, 2), Rat::new(1, 3), big_n, Rat::new(11, 2))
}

/// A q-Racah family with positive weights for `N <= 4`.
fn qracah_generic(big_n: usize) -> Result<QRacahParams> {
    QRacahParams::new(Rat::new(1, 3), Rat::new(1, 2), big_n, Rat::from_int(-4), Rat::new(1, 4))
}

fn duality_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    for qp in &grid.qparams {
        let q = qp.clone();
        out.push(Task::new("duality.cqu", vec![qkey(qp), ("mmax", DUALITY_MMAX.to_string())], move |ck| {
            duality::cqu(ck, &q, DUALITY_MMAX)
        }));
        let (q, nmax) = (qp.clone(), grid.nmax);
        out.push(Task::new("duality.cqu-representations", vec![qkey(qp), ("nmax", nmax.to_string())], move |ck| {
            duality::cqu_representations(ck, &q, nmax)
        }));
    }
    for big_n in 1..=grid.discrete_nmax {
        let p = krawtchouk_p();
        out.push(Task::new("duality.krawtchouk", vec![("p", p.to_string()), ("N", big_n.to_string())], move |ck| {
            duality::krawtchouk_self(ck, &KrawtchoukParams::new(p.clone(), big_n)?)
        }));
        for (a, b) in hahn_pairs() {
            let ps = vec![("alpha", a.to_string()), ("beta", b.to_string()), ("N", big_n.to_string())];
            out.push(Task::new("duality.hahn-dual-hahn", ps, move |ck| {
                duality::hahn_dual_hahn(ck, &HahnParams::new(a.clone(), b.clone(), big_n)?)
            }));
        }
    }
    for big_n in 1..=grid.discrete_nmax.min(RACAH_NMAX) {
        let rp = RacahParams::finite(Rat::new(1, 2), Rat::new(1, 3), big_n, Rat::new(1, 5));
        let ps = vec![("alpha", "1/2".into()), ("beta", "1/3".into()), ("delta", "1/5".into()), ("N", big_n.to_string())];
        out.push(Task::new("duality.racah", ps, move |ck| duality::racah_swap(ck, &rp)));
    }
    let wp = WilsonParams::new(Rat::new(1, 2), Rat::new(1, 3), Rat::new(1, 4), Rat::new(2, 3));
    out.push(Task::new(
        "duality.wilson",
        vec![("abcd", "1/2,1/3,1/4,2/3".into()), ("nmax", "4".into())],
        move |ck| duality::wilson(ck, &wp, 4),
    ));
    out
}

fn orthogonality_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    for big_n in 1..=grid.discrete_nmax {
        let p = krawtchouk_p();
        out.push(Task::new("orthogonality.krawtchouk", vec![("p", p.to_string()), ("N", big_n.to_string())], move |ck| {
            orthogonality::krawtchouk_gram(ck, &KrawtchoukParams::new(p.clone(), big_n)?)
        }));
        for (a, b) in hahn_pairs() {
            let ps = vec![("alpha", a.to_string()), ("beta", b.to_string()), ("N", big_n.to_string())];
            out.push(Task::new("orthogonality.hahn", ps, move |ck| {
                orthogonality::hahn_gram(ck, &HahnParams::new(a.clone(), b.clone(), big_n)?)
            }));
        }
    }
    for big_n in 0..=grid.discrete_nmax.min(RACAH_NMAX) {
        let ps = vec![("alpha", "1/2".into()), ("beta", "1/3".into()), ("delta", "11/2".into()), ("N", big_n.to_string())];
        out.push(Task::new("orthogonality.racah", ps, move |ck| orthogonality::racah_gram(ck, &racah_positive(big_n))));
        let ps = vec![
            ("alpha", "1/3".into()),
            ("beta", "1/2".into()),
            ("delta", "-4".into()),
            ("q", "1/4".into()),
            ("N", big_n.to_string()),
        ];
        out.push(Task::new("orthogonality.q-racah", ps, move |ck| {
            orthogonality::qracah_gram(ck, &qracah_generic(big_n)?)
        }));
    }
    for qp in &grid.qparams {
        for (l, m) in grid.lm_pairs() {
            let q = qp.clone();
            let ps = vec![qkey(qp), ("l", l.to_string()), ("m", m.to_string())];
            out.push(Task::new("orthogonality.q-racah-linearization", ps, move |ck| {
                orthogonality::qracah_gram(ck, &QRacahParams::cqu_linearization(&q, l, m)?)
            }));
        }
    }
    out
}

fn weight_recurrence_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    for qp in &grid.qparams {
        let q = qp.clone();
        out.push(Task::new("structure.weight-ratio", vec![qkey(qp)], move |ck| structural::weight_ratio(ck, &q)));
        let (q, nmax) = (qp.clone(), grid.nmax);
        out.push(Task::new("structure.leading-coefficient", vec![qkey(qp), ("nmax", nmax.to_string())], move |ck| {
            structural::leading_coefficient(ck, &q, nmax)
        }));
    }
    out
}

fn difference_tasks(grid: &ParamGrid) -> Vec<Task> {
    grid.qparams
        .iter()
        .map(|qp| {
            let (q, nmax) = (qp.clone(), grid.nmax);
            Task::new("structure.difference", vec![qkey(qp), ("nmax", nmax.to_string())], move |ck| {
                structural::difference(ck, &q, nmax)
            })
        })
        .collect()
}

/// q-Racah families for the backward-shift suite, each with its label.
fn shift_families(grid: &ParamGrid) -> Vec<(Vec<(&'static str, String)>, QRacahParams)> {
    let mut out = Vec::new();
    for big_n in 1..=grid.discrete_nmax.min(RACAH_NMAX) {
        if let Ok(p) = qracah_generic(big_n) {
            out.push((
                vec![
                    ("alpha", "1/3".into()),
                    ("beta", "1/2".into()),
                    ("delta", "-4".into()),
                    ("q", "1/4".into()),
                    ("N", big_n.to_string()),
                ],
                p,
            ));
        }
    }
    for qp in &grid.qparams {
        for (l, m) in grid.lm_pairs() {
            if m == 0 {
                continue;
            }
            if let Ok(p) = QRacahParams::cqu_linearization(qp, l, m) {
                out.push((vec![qkey(qp), ("l", l.to_string()), ("m", m.to_string())], p));
            }
        }
    }
    out
}

fn backward_shift_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    for (ps, p) in shift_families(grid) {
        let p1 = p.clone();
        out.push(Task::new("structure.q-racah-at-top", ps.clone(), move |ck| structural::qracah_top(ck, &p1)));
        let p2 = p.clone();
        out.push(Task::new("structure.backward-shift", ps.clone(), move |ck| structural::backward_shift(ck, &p2)));
        out.push(Task::new("structure.summation-by-parts", ps, move |ck| structural::summation_by_parts(ck, &p)));
    }
    out
}

fn linearization_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    for qp in &grid.qparams {
        for (l, m) in grid.lm_pairs() {
            let q = qp.clone();
            let ps = vec![qkey(qp), ("l", l.to_string()), ("m", m.to_string())];
            out.push(Task::new("linearization.q", ps, move |ck| {
                linearization::q_side(ck, &mut CquTable::new(&q), l, m)
            }));
        }
    }
    let cl = grid.classical_lmax;
    for alpha in &grid.alphas {
        for l in 0..=cl {
            for m in 0..=l {
                let a = alpha.clone();
                let ps = vec![("alpha", alpha.to_string()), ("l", l.to_string()), ("m", m.to_string())];
                out.push(Task::new("linearization.classical", ps, move |ck| linearization::classical(ck, &a, l, m)));
            }
        }
    }
    for l in 0..=cl {
        for m in 0..=l {
            let ps = vec![("l", l.to_string()), ("m", m.to_string())];
            out.push(Task::new("linearization.legendre", ps, move |ck| linearization::legendre(ck, l, m)));
        }
    }
    out
}

fn theorem_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    for qp in &grid.qparams {
        for l in 0..=grid.lmax {
            let (q, mb) = (qp.clone(), grid.m_bound());
            let ps = vec![qkey(qp), ("l", l.to_string()), ("mmax", mb.min(l).to_string())];
            out.push(Task::new("theorem.weighted-sum", ps, move |ck| theorem(ck, &mut CquTable::new(&q), l, mb)));
        }
    }
    out
}

fn dual_addition_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    for qp in &grid.qparams {
        for (l, m) in grid.lm_pairs() {
            for (mode, name) in [(DualMode::Direct, "direct"), (DualMode::Inversion, "inversion")] {
                let q = qp.clone();
                let ps = vec![qkey(qp), ("l", l.to_string()), ("m", m.to_string()), ("mode", name.into())];
                out.push(Task::new("dual-addition.q", ps, move |ck| {
                    q_dual_addition(ck, &mut CquTable::new(&q), l, m, mode)
                }));
            }
        }
    }
    for alpha in &grid.alphas {
        for l in 0..=grid.classical_lmax {
            for m in 0..=l {
                let a = alpha.clone();
                let ps = vec![("alpha", alpha.to_string()), ("l", l.to_string()), ("m", m.to_string())];
                out.push(Task::new("dual-addition.classical", ps, move |ck| classical_dual_addition(ck, &a, l, m)));
            }
        }
    }
    out
}

fn addition_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    let us = [Rat::from_int(2), Rat::new(3, 2)];
    let vs = [Rat::from_int(3), Rat::new(5, 4)];
    for qp in &grid.qparams {
        for u in &us {
            for v in &vs {
                for n in 0..=ADDITION_NMAX {
                    let (q, uu, vv) = (qp.clone(), u.clone(), v.clone());
                    let ps = vec![qkey(qp), ("n", n.to_string()), ("u", u.to_string()), ("v", v.to_string())];
                    out.push(Task::new("addition.q", ps, move |ck| {
                        addition::q_addition(ck, &mut CquTable::new(&q), n, &uu, &vv)
                    }));
                }
            }
        }
    }
    for alpha in &grid.alphas {
        for n in 0..=ADDITION_NMAX {
            let a = alpha.clone();
            let ps = vec![("alpha", alpha.to_string()), ("n", n.to_string())];
            out.push(Task::new("addition.classical", ps, move |ck| {
                let ts = triples();
                for xp in &ts {
                    for yp in &ts {
                        for tp in &ts {
                            addition::classical_addition(ck, &a, n, xp, yp, tp)?;
                        }
                    }
                }
                Ok(())
            }));
        }
    }
    for n in 0..=ADDITION_NMAX {
        out.push(Task::new("addition.legendre", vec![("n", n.to_string())], move |ck| {
            let ts = triples();
            for xp in &ts {
                for yp in &ts {
                    for cp in &ts {
                        addition::legendre_addition(ck, n, xp, yp, cp)?;
                    }
                }
            }
            Ok(())
        }));
    }
    out
}

fn restriction_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    for qp in &grid.qparams {
        for l in 0..=RESTRICTION_LMAX {
            for m in 0..=l {
                for j in 0..=m {
                    for n in m..=RESTRICTION_NMAX {
                        let q = qp.clone();
                        let ps = vec![
                            qkey(qp),
                            ("l", l.to_string()),
                            ("m", m.to_string()),
                            ("j", j.to_string()),
                            ("n", n.to_string()),
                        ];
                        out.push(Task::new("restriction", ps, move |ck| restriction::restriction(ck, &q, l, m, j, n)));
                    }
                }
            }
        }
    }
    out
}

fn product_formula_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    for alpha in &grid.alphas {
        for n in 0..=grid.classical_lmax {
            let a = alpha.clone();
            let ps = vec![("alpha", alpha.to_string()), ("n", n.to_string())];
            out.push(Task::new("product-formula", ps, move |ck| {
                let ts = triples();
                for xp in &ts {
                    for yp in &ts {
                        addition::product_formula(ck, &a, n, xp, yp)?;
                    }
                }
                Ok(())
            }));
        }
    }
    out
}

fn limit_tasks() -> Vec<Task> {
    let mut out: Vec<Task> = LimitKind::ALL
        .into_iter()
        .map(|kind| {
            let spec = LimitSpec::standard(kind);
            let mut ps: Vec<(String, String)> = spec.params().into_iter().filter(|(k, _)| k != "kind").collect();
            ps.push(("schedule".into(), format!("j = {}..{}", LIMIT_SCHEDULE.start(), LIMIT_SCHEDULE.end())));
            Task::new(&format!("limits.{kind}"), ps, move |ck| {
                let report = limit_check(&spec, LIMIT_SCHEDULE, ck.probe_next())?;
                ck.limit(kind.as_str(), report);
                Ok(())
            })
        })
        .collect();
    out.push(Task::new("limits.bessel-special-cases", vec![("tol", "1e-12".into())], |ck| {
        for x in [0.5f64, 1.0, 2.0, 5.0, 10.0] {
            ck.close(format!("alpha = -1/2 at x = {x}"), bessel_script_j(-0.5, x, 1e-17)?, x.cos(), 1e-12);
            ck.close(format!("alpha = 1/2 at x = {x}"), bessel_script_j(0.5, x, 1e-17)?, x.sin() / x, 1e-12);
        }
        Ok(())
    }));
    out
}

fn numeric_tasks(grid: &ParamGrid) -> Vec<Task> {
    let mut out = Vec::new();
    for qp in &grid.qparams {
        let q = qp.clone();
        out.push(Task::new("numeric.cqu-orthogonality", vec![qkey(qp), ("nmax", QUADRATURE_NMAX.to_string())], move |ck| {
            let quad = Quadrature::default();
            for n in 1..=QUADRATURE_NMAX {
                for m in 0..n {
                    let r = cqu_orthogonality_residual(&q, m, n, &quad)?;
                    ck.close(format!("(m, n) = ({m}, {n})"), r, 0.0, 1e-8);
                }
            }
            Ok(())
        }));
        let q = qp.clone();
        out.push(Task::new("numeric.aw-h0", vec![qkey(qp)], move |ck| {
            let dev = aw_h0_deviation(&q, &Quadrature::default())?;
            ck.close("relative deviation of the weight integral", dev, 0.0, 1e-8);
            Ok(())
        }));
        let q = qp.clone();
        out.push(Task::new("numeric.weights", vec![qkey(qp)], move |ck| weight_samples(ck, &q)));
    }
    out
}

/// Sampled weight identities: the exact ratio for `β ↦ qβ`, evenness, and
/// the Askey-Wilson weight as the q-ultraspherical one times `sin θ`.
fn weight_samples(ck: &mut Checker, qp: &QParams) -> Result<()> {
    let (q, beta) = (qp.q().to_f64(), qp.beta().to_f64());
    let awp = crate::families::cqu_params(qp);
    let params = [awp.a.to_f64(), awp.b.to_f64(), awp.c.to_f64(), awp.d.to_f64()];
    let c = q.sqrt() * beta;
    let mut first_ratio = None;
    for i in 1..12 {
        let th = i as f64 * std::f64::consts::PI / 12.0 + 0.01;
        let x = th.cos();
        let w = cqu_weight(q, beta, th)?;
        let exact = (1.0 + c).powi(2) - 4.0 * c * x * x;
        ck.close(format!("ratio at θ = {th:.4}"), cqu_weight(q, q * beta, th)? / w, exact, 1e-10);
        ck.close(format!("evenness at θ = {th:.4}"), w, cqu_weight(q, beta, std::f64::consts::PI - th)?, 1e-12 * w.max(1.0));
        let r = aw_weight(&params, q, th)? / (w * th.sin());
        let r0 = *first_ratio.get_or_insert(r);
        ck.close(format!("askey-wilson factor at θ = {th:.4}"), r, r0, 1e-10);
    }
    Ok(())
}

/// All tasks of a suite, in a fixed order.
pub fn tasks(suite: Suite, grid: &ParamGrid) -> Vec<Task> {
    suite
        .members()
        .into_iter()
        .flat_map(|s| match s {
            Suite::Duality => duality_tasks(grid),
            Suite::Orthogonality => orthogonality_tasks(grid),
            Suite::WeightRecurrence => weight_recurrence_tasks(grid),
            Suite::Difference => difference_tasks(grid),
            Suite::BackwardShift => backward_shift_tasks(grid),
            Suite::Linearization => linearization_tasks(grid),
            Suite::Theorem => theorem_tasks(grid),
            Suite::DualAddition => dual_addition_tasks(grid),
            Suite::Addition => addition_tasks(grid),
            Suite::Restriction => restriction_tasks(grid),
            Suite::ProductFormula => product_formula_tasks(grid),
            Suite::Limits => limit_tasks(),
            Suite::NumericOrthogonality => numeric_tasks(grid),
            Suite::All => Vec::new(),
        })
        .collect()
}

fn sort_key(r: &CheckReport) -> (String, Vec<(String, String)>) {
    (r.id.clone(), r.params.clone().into_iter().collect())
}

/// Runs every task of `suite` on up to `jobs` threads (0 = rayon default);
/// the result is sorted by check id and then parameters.
pub fn run_suite(suite: Suite, grid: &ParamGrid, jobs: usize) -> Result<Vec<CheckReport>> {
    validate_grid(grid)?;
    let all = tasks(suite, grid);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let mut reports: Vec<CheckReport> = pool.install(|| all.par_iter().map(|t| t.run(None)).collect());
    reports.sort_by_key(sort_key);
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn every_suite_has_tasks() {
        let grid = ParamGrid::default();
        for s in Suite::ALL {
            assert!(!tasks(s, &grid).is_empty(), "{s}");
        }
    }

    #[test]
    fn bad_alpha_rejected() {
        let grid = ParamGrid { alphas: vec![Rat::from_int(-1)], ..ParamGrid::default() };
        assert!(validate_grid(&grid).is_err());
    }
}
