//! Cross-checks, structural identities, and the positivity scan.
//!
//! Each check runs over a [`Universe`] of diagrams on a worker pool and
//! produces a [`VerificationReport`]. Per-diagram results are merged in the
//! canonical diagram order, so a report never depends on the worker count.

mod report;
mod universe;

pub use report::{Failure, Skipped, VerificationReport};
pub use universe::Universe;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::csm::{
    cell_table, csm_h, csm_h_with_d, csm_rat_with_d, gamma_lgv_table, gamma_onerow, variety_from_cells, CsmError,
    GammaTable, LgvMode, Method,
};
use crate::partition::Partition;
use crate::schubert::{cap_special, cap_total, pushforward_monomial, Bundle, ChowClass, ChowError};
use crate::Integer;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("malformed rectangle {0:?} (expected NxD, e.g. 5x5)")]
    BadRect(String),
    #[error("unknown check {0:?}")]
    UnknownCheck(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Csm(#[from] CsmError),
    #[error(transparent)]
    Chow(#[from] ChowError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Cross,
    Positivity,
    Duality,
    Adjunction,
    Euler,
    Normalization,
    DStability,
    OneRow,
    Antisym,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Cross,
        Check::Positivity,
        Check::Duality,
        Check::Adjunction,
        Check::Euler,
        Check::Normalization,
        Check::DStability,
        Check::OneRow,
        Check::Antisym,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Check::Cross => "cross",
            Check::Positivity => "positivity",
            Check::Duality => "duality",
            Check::Adjunction => "adjunction",
            Check::Euler => "euler",
            Check::Normalization => "normalization",
            Check::DStability => "dstable",
            Check::OneRow => "onerow",
            Check::Antisym => "antisym",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Check {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL.into_iter().find(|c| c.label() == s).ok_or_else(|| VerifyError::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, Default)]
pub struct ScanOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    /// Wall-clock allowance per diagram. Measured after the fact: a diagram
    /// that took longer is listed as skipped and not counted as tested, but
    /// any failure it produced is still reported.
    pub budget: Option<Duration>,
    /// Include the generating-function method in the cross check.
    pub genfun: bool,
}

type Table = GammaTable<Integer>;

fn h_table(alpha: &Partition) -> Result<Table, VerifyError> {
    Ok(csm_h(alpha)?)
}

fn pool(opts: &ScanOptions) -> Result<rayon::ThreadPool, VerifyError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()
        .map_err(|e| VerifyError::Pool(e.to_string()))
}

/// Runs `per_alpha` over the universe. `None` marks a diagram the check does
/// not apply to; it is neither tested nor skipped.
fn scan<F>(check: &str, universe: &Universe, opts: &ScanOptions, per_alpha: F) -> Result<VerificationReport, VerifyError>
where
    F: Fn(&Partition) -> Result<Option<Vec<Failure>>, VerifyError> + Sync,
{
    let start = Instant::now();
    let alphas = universe.diagrams();
    let results: Vec<_> = pool(opts)?.install(|| {
        alphas
            .par_iter()
            .map(|a| {
                let t = Instant::now();
                let r = per_alpha(a);
                (r, t.elapsed())
            })
            .collect()
    });
    let mut report = VerificationReport::new(check, universe.to_string());
    for (alpha, (result, took)) in alphas.iter().zip(results) {
        let Some(failures) = result? else { continue };
        match opts.budget {
            Some(b) if took > b => report.skipped.push(Skipped {
                alpha: alpha.clone(),
                reason: format!("over budget: {} ms > {} ms", took.as_millis(), b.as_millis()),
            }),
            _ => report.tested += 1,
        }
        report.failures.extend(failures);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// `h`, `rat` and `det` tables agree, plus `genfun` when enabled and `lgv`
/// (both modes) on diagrams with at most two rows.
pub fn check_cross_methods(universe: &Universe, opts: &ScanOptions) -> Result<VerificationReport, VerifyError> {
    scan("cross", universe, opts, |alpha| {
        let mut tables: Vec<(String, Table)> = Vec::new();
        let mut methods = vec![Method::H, Method::Rat, Method::Det];
        if opts.genfun {
            methods.push(Method::Genfun);
        }
        for m in methods {
            tables.push((m.label().to_string(), cell_table(alpha, m)?));
        }
        if alpha.rows() <= 2 {
            tables.push(("lgv".into(), gamma_lgv_table(alpha, LgvMode::Determinant)?));
            tables.push(("lgv-enum".into(), gamma_lgv_table(alpha, LgvMode::Enumerate)?));
        }
        let (_, reference) = &tables[0];
        let mut failures = Vec::new();
        for (beta, expected) in reference.entries() {
            let values: BTreeMap<String, String> =
                tables.iter().map(|(l, t)| (l.clone(), t.get(beta).expect("complete table").to_string())).collect();
            if let Some((_, t)) = tables.iter().find(|(_, t)| t.get(beta) != Some(expected)) {
                let actual = t.get(beta).expect("complete table");
                failures.push(Failure::new(alpha, Some(beta), expected, actual).with_values(values));
            }
        }
        Ok(Some(failures))
    })
}

/// Every `gamma(alpha, beta)` is nonnegative.
pub fn check_positivity(universe: &Universe, opts: &ScanOptions) -> Result<VerificationReport, VerifyError> {
    scan("positivity", universe, opts, |alpha| {
        let t = h_table(alpha)?;
        Ok(Some(
            t.entries()
                .filter(|(_, v)| v.sign() == num_bigint::Sign::Minus)
                .map(|(b, v)| Failure::new(alpha, Some(b), ">= 0", v))
                .collect(),
        ))
    })
}

/// `gamma(alpha, beta) = gamma(alpha^t, beta^t)`.
pub fn check_duality(universe: &Universe, opts: &ScanOptions) -> Result<VerificationReport, VerifyError> {
    scan("duality", universe, opts, |alpha| {
        let t = h_table(alpha)?;
        let dual = h_table(&alpha.transpose())?;
        let mut failures = Vec::new();
        for (beta, v) in t.entries() {
            let w = dual.get(&beta.transpose()).expect("transpose of a subdiagram is a subdiagram");
            if v != w {
                failures.push(Failure::new(alpha, Some(beta), v, w));
            }
        }
        Ok(Some(failures))
    })
}

fn class_failure(alpha: &Partition, side: &str, lhs: &ChowClass<Integer>, rhs: &ChowClass<Integer>) -> Failure {
    let values = BTreeMap::from([("identity".to_string(), side.to_string())]);
    Failure::new(alpha, None, rhs, lhs).with_values(values)
}

/// `c_d(S^∨) ∩ c_SM(S(alpha)°) = c(S^∨) ∩ c_SM(S(alpha^-)°)`, `d` the row
/// count of `alpha`. `None` for the empty diagram.
fn adjunction_rows_failure(alpha: &Partition) -> Result<Option<Option<Failure>>, VerifyError> {
    if alpha.is_empty() {
        return Ok(None);
    }
    let d = alpha.rows();
    let lhs = cap_special(&h_table(alpha)?.to_chow(), d as u32, Bundle::DualSub, d)?;
    let rhs = cap_total(&h_table(&alpha.remove_column().expect("nonempty"))?.to_chow(), d as u32, Bundle::DualSub, d)?;
    Ok(Some((!lhs.same_terms(&rhs)).then(|| class_failure(alpha, "rows", &lhs, &rhs))))
}

/// `c_{alpha_1}(Q) ∩ c_SM(S(alpha)°) = c(Q) ∩ c_SM(S(alpha')°)` on the
/// Grassmannian of `d`-planes, `d` the row count of `alpha`.
fn adjunction_cols_failure(alpha: &Partition) -> Result<Option<Option<Failure>>, VerifyError> {
    if alpha.is_empty() {
        return Ok(None);
    }
    let d = alpha.rows();
    let k = alpha.part(0);
    let lhs = cap_special(&h_table(alpha)?.to_chow(), k, Bundle::Quotient, d)?;
    let rhs = cap_total(&h_table(&alpha.remove_bottom_row().expect("nonempty"))?.to_chow(), k, Bundle::Quotient, d)?;
    Ok(Some((!lhs.same_terms(&rhs)).then(|| class_failure(alpha, "cols", &lhs, &rhs))))
}

fn single(check: &str, alpha: &Partition, outcome: Option<Option<Failure>>, start: Instant) -> VerificationReport {
    let mut r = VerificationReport::new(check, format!("alpha {alpha}"));
    if let Some(f) = outcome {
        r.tested = 1;
        r.failures.extend(f);
    }
    r.elapsed = start.elapsed();
    r
}

pub fn check_adjunction_rows(alpha: &Partition) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    Ok(single("adjunction-rows", alpha, adjunction_rows_failure(alpha)?, start))
}

pub fn check_adjunction_cols(alpha: &Partition) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    Ok(single("adjunction-cols", alpha, adjunction_cols_failure(alpha)?, start))
}

/// Both adjunction identities on every nonempty diagram.
pub fn check_adjunction(universe: &Universe, opts: &ScanOptions) -> Result<VerificationReport, VerifyError> {
    scan("adjunction", universe, opts, |alpha| {
        let rows = adjunction_rows_failure(alpha)?;
        let cols = adjunction_cols_failure(alpha)?;
        match (rows, cols) {
            (Some(r), Some(c)) => Ok(Some(r.into_iter().chain(c).collect())),
            _ => Ok(None),
        }
    })
}

/// `gamma(alpha, 0) = 1`, and the point coefficient of the variety class
/// equals the number of subdiagrams.
pub fn check_euler(universe: &Universe, opts: &ScanOptions) -> Result<VerificationReport, VerifyError> {
    let closure: BTreeSet<Partition> = universe.diagrams().iter().flat_map(|a| a.subdiagrams()).collect();
    let closure: Vec<Partition> = closure.into_iter().collect();
    let built: Vec<Table> = pool(opts)?.install(|| closure.par_iter().map(h_table).collect::<Result<_, _>>())?;
    let cells: BTreeMap<Partition, Table> = closure.into_iter().zip(built).collect();
    scan("euler", universe, opts, |alpha| {
        let point = Partition::empty();
        let mut failures = Vec::new();
        let cell = &cells[alpha];
        let one = Integer::from(1);
        if cell.get(&point) != Some(&one) {
            failures.push(Failure::new(alpha, Some(&point), 1, cell.get(&point).expect("complete")));
        }
        let variety = variety_from_cells(alpha, Method::H, |b| Ok(cells[b].clone()))?;
        let count = Integer::from(alpha.subdiagrams().count());
        let got = variety.get(&point).expect("complete");
        if *got != count {
            let values = BTreeMap::from([("class".to_string(), "variety".to_string())]);
            failures.push(Failure::new(alpha, Some(&point), &count, got).with_values(values));
        }
        Ok(Some(failures))
    })
}

/// `gamma(alpha, alpha) = gamma(alpha, 0) = 1` for the `h`, `rat` and `det`
/// tables.
pub fn check_normalization(universe: &Universe, opts: &ScanOptions) -> Result<VerificationReport, VerifyError> {
    scan("normalization", universe, opts, |alpha| {
        let mut failures = Vec::new();
        let one = Integer::from(1);
        for m in [Method::H, Method::Rat, Method::Det] {
            let t: Table = cell_table(alpha, m)?;
            for beta in [alpha.clone(), Partition::empty()] {
                let v = t.get(&beta).expect("complete");
                if *v != one {
                    let values = BTreeMap::from([("method".to_string(), m.to_string())]);
                    failures.push(Failure::new(alpha, Some(&beta), 1, v).with_values(values));
                }
            }
        }
        Ok(Some(failures))
    })
}

/// Tables computed with `d` and `d + 1` variables agree, for `h` and `rat`.
pub fn check_d_stability(universe: &Universe, opts: &ScanOptions) -> Result<VerificationReport, VerifyError> {
    scan("dstable", universe, opts, |alpha| {
        let d = alpha.rows();
        let mut failures = Vec::new();
        let pairs: [(Method, Table, Table); 2] = [
            (Method::H, csm_h_with_d(alpha, d)?, csm_h_with_d(alpha, d + 1)?),
            (Method::Rat, csm_rat_with_d(alpha, d)?, csm_rat_with_d(alpha, d + 1)?),
        ];
        for (m, a, b) in &pairs {
            for (beta, v) in a.entries() {
                let w = b.get(beta).expect("complete");
                if v != w {
                    let values = BTreeMap::from([("method".to_string(), m.to_string())]);
                    failures.push(Failure::new(alpha, Some(beta), v, w).with_values(values));
                }
            }
        }
        Ok(Some(failures))
    })
}

/// One-row entries of the `h` table match the one-row product formula.
pub fn check_one_row(universe: &Universe, opts: &ScanOptions) -> Result<VerificationReport, VerifyError> {
    scan("onerow", universe, opts, |alpha| {
        let t = h_table(alpha)?;
        let poly = gamma_onerow::<Integer>(alpha);
        let mut failures = Vec::new();
        for (r, v) in t.one_row().iter().enumerate() {
            let expected = poly.coefficient(&[r as u32]);
            if *v != expected {
                let beta = Partition::new(vec![r as u32]).expect("one part");
                failures.push(Failure::new(alpha, Some(&beta), expected, v));
            }
        }
        if poly.total_degree() > alpha.columns() as u64 {
            failures.push(Failure::new(alpha, None, format!("degree <= {}", alpha.columns()), poly.total_degree()));
        }
        Ok(Some(failures))
    })
}

/// For the rectangle `(n^d)`: `pi_*(x^r) = -pi_*(x^r')` where `r'` replaces
/// `(r_i, r_{i+1})` by `(r_{i+1} + 1, r_i - 1)`, over all `r` with entries
/// `<= n + d` and all `i` with `r_i > 0`.
pub fn check_pushforward_antisymmetry(n: u32, d: usize) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let alpha = Partition::rectangle(n, d);
    let mut report = VerificationReport::new("antisym", format!("rect {n}x{d}"));
    let top = n + d as u32;
    let mut r = vec![0u32; d];
    loop {
        for i in 0..d.saturating_sub(1) {
            if r[i] == 0 {
                continue;
            }
            let mut s = r.clone();
            s[i] = r[i + 1] + 1;
            s[i + 1] = r[i] - 1;
            let lhs = pushforward_monomial::<Integer>(&alpha, d, &r)?;
            let rhs = pushforward_monomial::<Integer>(&alpha, d, &s)?;
            report.tested += 1;
            if !lhs.same_terms(&rhs.neg()) {
                let values = BTreeMap::from([("r".to_string(), format!("{r:?}")), ("swapped".to_string(), format!("{s:?}"))]);
                report.failures.push(Failure::new(&alpha, None, rhs.neg(), lhs).with_values(values));
            }
        }
        // odometer over [0, top]^d
        let mut k = d;
        loop {
            if k == 0 {
                report.elapsed = start.elapsed();
                return Ok(report);
            }
            k -= 1;
            if r[k] < top {
                r[k] += 1;
                break;
            }
            r[k] = 0;
        }
    }
}

/// Runs one check. `antisym` uses the rectangle's own `(n, d)` and needs a
/// rectangle universe.
pub fn run_check(check: Check, universe: &Universe, opts: &ScanOptions) -> Result<VerificationReport, VerifyError> {
    match check {
        Check::Cross => check_cross_methods(universe, opts),
        Check::Positivity => check_positivity(universe, opts),
        Check::Duality => check_duality(universe, opts),
        Check::Adjunction => check_adjunction(universe, opts),
        Check::Euler => check_euler(universe, opts),
        Check::Normalization => check_normalization(universe, opts),
        Check::DStability => check_d_stability(universe, opts),
        Check::OneRow => check_one_row(universe, opts),
        Check::Antisym => match universe {
            Universe::Rect { columns, rows, .. } => check_pushforward_antisymmetry(*columns, *rows),
            Universe::List(_) => Err(VerifyError::InvalidArgument("antisym needs a rectangle universe".into())),
        },
    }
}

/// Runs every check in [`Check::ALL`] order; `antisym` is left out for list
/// universes.
pub fn run_all(universe: &Universe, opts: &ScanOptions) -> Result<Vec<VerificationReport>, VerifyError> {
    Check::ALL
        .into_iter()
        .filter(|c| *c != Check::Antisym || matches!(universe, Universe::Rect { .. }))
        .map(|c| run_check(c, universe, opts))
        .collect()
}
