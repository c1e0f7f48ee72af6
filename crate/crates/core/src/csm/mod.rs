//! Coefficients `gamma(alpha, beta)` of the CSM class of a Schubert cell,
//! `c_SM(S(alpha)°) = sum over beta <= alpha of gamma(alpha, beta) [S(beta)]`.
//!
//! Five independent routes are implemented:
//!
//! | [`Method`] | route |
//! |---|---|
//! | `h` | complete-homogeneous product, pushed forward ([`csm_h`]) |
//! | `rat` | rational function with `1/(1 + x_i - x_j)` factors ([`csm_rat`]) |
//! | `det` | sum of binomial determinants ([`gamma_det`]) |
//! | `genfun` | coefficient of a `2d`-variable generating function ([`gamma_genfun`]) |
//! | `lgv` | nonintersecting lattice paths, two-row diagrams only ([`gamma_lgv`]) |
//!
//! Every table carries all `beta <= alpha`, zeros included.

mod detform;
mod expansion;
mod genfun;
mod lattice;

pub use detform::{detform_terms, gamma_det, gamma_det_table};
pub use expansion::{
    c_coefficient, c_prime_coefficient, csm_h, csm_h_with_d, csm_rat, csm_rat_with_d, h_polynomial, rat_series,
};
pub use genfun::{gamma_genfun, gamma_genfun_table};
pub use lattice::{gamma_lgv, gamma_lgv_table, lgv_counts, LgvMode};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::partition::Partition;
use crate::poly::{PolyError, PolyRing, SparsePoly};
use crate::scalar::{Binomials, Coefficient};
use crate::schubert::{ChowClass, ChowError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CsmError {
    #[error("{beta} is not contained in {alpha}")]
    NotContained { alpha: Partition, beta: Partition },
    #[error("lattice paths need at most two rows, {0} has more")]
    TooManyRows(Partition),
    #[error("unknown method {0:?} (expected h, rat, det, genfun or lgv)")]
    UnknownMethod(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("division by d! u^d is not exact")]
    InexactDivision,
    #[error("coefficient does not fit the requested scalar type")]
    Overflow,
    #[error(transparent)]
    Chow(#[from] ChowError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    H,
    Rat,
    Det,
    Genfun,
    Lgv,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::H, Method::Rat, Method::Det, Method::Genfun, Method::Lgv];

    pub fn label(self) -> &'static str {
        match self {
            Method::H => "h",
            Method::Rat => "rat",
            Method::Det => "det",
            Method::Genfun => "genfun",
            Method::Lgv => "lgv",
        }
    }

    /// Whether the method handles `alpha` at all.
    pub fn applies_to(self, alpha: &Partition) -> bool {
        self != Method::Lgv || alpha.rows() <= 2
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Method {
    type Err = CsmError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL.into_iter().find(|m| m.label() == s).ok_or_else(|| CsmError::UnknownMethod(s.to_string()))
    }
}

/// Whether a table holds cell coefficients or the class of the closed
/// Schubert variety.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableKind {
    Cell,
    Variety,
}

impl TableKind {
    pub fn label(self) -> &'static str {
        match self {
            TableKind::Cell => "cell",
            TableKind::Variety => "variety",
        }
    }
}

/// `beta -> gamma(alpha, beta)` over every subdiagram `beta` of `alpha`.
#[derive(Clone, PartialEq, Eq)]
pub struct GammaTable<C> {
    alpha: Partition,
    method: Method,
    kind: TableKind,
    entries: BTreeMap<Partition, C>,
}

impl<C: Coefficient> GammaTable<C> {
    /// Builds a table from a value per subdiagram.
    pub fn from_fn<E>(alpha: &Partition, method: Method, mut f: impl FnMut(&Partition) -> Result<C, E>) -> Result<Self, E> {
        let mut entries = BTreeMap::new();
        for beta in alpha.subdiagrams() {
            let v = f(&beta)?;
            entries.insert(beta, v);
        }
        Ok(GammaTable { alpha: alpha.clone(), method, kind: TableKind::Cell, entries })
    }

    /// Reads a table off a class; every key must be a subdiagram.
    pub fn from_chow(alpha: &Partition, method: Method, class: &ChowClass<C>) -> Result<Self, CsmError> {
        if let Some((beta, _)) = class.terms().find(|(b, _)| !alpha.contains(b)) {
            return Err(CsmError::NotContained { alpha: alpha.clone(), beta: beta.clone() });
        }
        Self::from_fn(alpha, method, |b| Ok(class.coefficient(b)))
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn kind(&self) -> TableKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `None` when `beta` is not a subdiagram of `alpha`.
    pub fn get(&self, beta: &Partition) -> Option<&C> {
        self.entries.get(beta)
    }

    /// Entries in the canonical subdiagram order.
    pub fn entries(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.entries.iter()
    }

    /// Same values, ignoring the method label.
    pub fn same_values(&self, other: &Self) -> bool {
        self.alpha == other.alpha && self.entries == other.entries
    }

    pub fn to_chow(&self) -> ChowClass<C> {
        let mut c = ChowClass::zero_in(self.alpha.clone());
        for (b, v) in &self.entries {
            c.add_term(b.clone(), v);
        }
        c
    }

    /// The one-row entries `gamma(alpha, (r))` for `r = 0..=alpha_1`.
    pub fn one_row(&self) -> Vec<C> {
        (0..=self.alpha.columns())
            .map(|r| {
                let beta = if r == 0 { Partition::empty() } else { Partition::new(vec![r]).expect("one part") };
                self.entries.get(&beta).cloned().unwrap_or_else(C::zero)
            })
            .collect()
    }
}

impl<C: Coefficient> fmt::Debug for GammaTable<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GammaTable[{} {} {}]{{", self.kind.label(), self.alpha, self.method)?;
        for (i, (b, v)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}: {v}")?;
        }
        f.write_str("}")
    }
}

/// `{"alpha": [..], "kind": "cell", "method": "h", "terms": [{"beta": [..], "coeff": ".."}, ..]}`
impl<C: Coefficient> Serialize for GammaTable<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GammaTable", 4)?;
        st.serialize_field("alpha", &self.alpha)?;
        st.serialize_field("kind", self.kind.label())?;
        st.serialize_field("method", self.method.label())?;
        let terms: Vec<_> =
            self.entries.iter().map(|(b, c)| crate::schubert::TermEntry { beta: b, coeff: c }).collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

pub(crate) fn require_contains(alpha: &Partition, beta: &Partition) -> Result<(), CsmError> {
    if alpha.contains(beta) {
        Ok(())
    } else {
        Err(CsmError::NotContained { alpha: alpha.clone(), beta: beta.clone() })
    }
}

/// The full cell table of `alpha` by the given method.
pub fn cell_table<C: Coefficient>(alpha: &Partition, method: Method) -> Result<GammaTable<C>, CsmError> {
    match method {
        Method::H => csm_h(alpha),
        Method::Rat => csm_rat(alpha),
        Method::Det => gamma_det_table(alpha),
        Method::Genfun => gamma_genfun_table(alpha),
        Method::Lgv => gamma_lgv_table(alpha, LgvMode::Determinant),
    }
}

/// A single coefficient by the given method.
pub fn gamma<C: Coefficient>(alpha: &Partition, beta: &Partition, method: Method) -> Result<C, CsmError> {
    require_contains(alpha, beta)?;
    match method {
        Method::Det => gamma_det(alpha, beta),
        Method::Genfun => gamma_genfun(alpha, beta),
        Method::Lgv => gamma_lgv(alpha, beta, LgvMode::Determinant),
        Method::H | Method::Rat => {
            let table = cell_table::<C>(alpha, method)?;
            Ok(table.get(beta).cloned().expect("table covers every subdiagram"))
        }
    }
}

/// The class of the closed Schubert variety `S(alpha)`, assembled from the
/// cell tables returned by `cell`: the coefficient at `delta` is the sum of
/// `gamma(beta, delta)` over `delta <= beta <= alpha`.
pub fn variety_from_cells<C, F>(alpha: &Partition, method: Method, mut cell: F) -> Result<GammaTable<C>, CsmError>
where
    C: Coefficient,
    F: FnMut(&Partition) -> Result<GammaTable<C>, CsmError>,
{
    let mut sums: BTreeMap<Partition, C> = alpha.subdiagrams().map(|b| (b, C::zero())).collect();
    for beta in alpha.subdiagrams() {
        let table = cell(&beta)?;
        for (delta, v) in table.entries() {
            sums.get_mut(delta).expect("subdiagram of a subdiagram").add_assign_ref(v);
        }
    }
    Ok(GammaTable { alpha: alpha.clone(), method, kind: TableKind::Variety, entries: sums })
}

pub fn csm_variety<C: Coefficient>(alpha: &Partition, method: Method) -> Result<GammaTable<C>, CsmError> {
    variety_from_cells(alpha, method, |b| cell_table(b, method))
}

/// `prod_i (1 + i u)^(alpha_i - alpha_{i+1})`; its `u^r` coefficient is
/// `gamma(alpha, (r))`.
pub fn gamma_onerow<C: Coefficient>(alpha: &Partition) -> SparsePoly<C> {
    let ring = PolyRing::new(1);
    let mut out = SparsePoly::one(&ring);
    for i in 0..alpha.rows() {
        let e = alpha.part(i) - alpha.part(i + 1);
        let factor = SparsePoly::one(&ring).add(&SparsePoly::var(&ring, 0).scale(&C::from_i64(i as i64 + 1))).expect("same ring");
        out = out.mul(&factor.pow(e)).expect("same ring");
    }
    out
}

/// One-row part of the total Chern class of the Grassmannian of `d`-planes
/// in an `(n + d)`-dimensional space:
/// `(1 / (d! u^d)) sum_i binom(d, i) (-1)^(d-i) (1 + i u)^(n + d)`.
pub fn chern_grass_onerow<C: Coefficient>(n: u32, d: u32) -> Result<SparsePoly<C>, CsmError> {
    if n == 0 || d == 0 {
        return Err(CsmError::InvalidArgument(format!("n and d must be positive (got n={n}, d={d})")));
    }
    let dim = n + d;
    let binom = Binomials::<BigInt>::new(dim as usize);
    // coefficient of u^k in the alternating sum
    let mut sum = vec![BigInt::from(0); dim as usize + 1];
    for i in 0..=d {
        let sign = if (d - i).is_multiple_of(2) { 1 } else { -1 };
        let outer = binom.get(d as i64, i as i64) * sign;
        let mut ipow = BigInt::from(1);
        for (k, slot) in sum.iter_mut().enumerate() {
            *slot += &outer * binom.get(dim as i64, k as i64) * &ipow;
            ipow *= i;
        }
    }
    let dfact: BigInt = (1..=d).map(BigInt::from).product();
    if sum[..d as usize].iter().any(|c| c != &BigInt::from(0)) {
        return Err(CsmError::InexactDivision);
    }
    let ring = PolyRing::new(1);
    let mut terms = Vec::new();
    for (k, c) in sum.iter().enumerate().skip(d as usize) {
        if c % &dfact != BigInt::from(0) {
            return Err(CsmError::InexactDivision);
        }
        let q = C::from_bigint(&(c / &dfact)).ok_or(CsmError::Overflow)?;
        terms.push((vec![k as u32 - d], q));
    }
    Ok(SparsePoly::from_terms(&ring, terms)?)
}

/// Renders a univariate polynomial as `10 + 30u + 35u^2 + 15u^3`.
pub fn render_univariate<C: Coefficient>(p: &SparsePoly<C>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let k = e[0];
        if k == 0 || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        if k >= 1 {
            out.push_str(var);
        }
        if k >= 2 {
            out.push_str(&format!("^{k}"));
        }
    }
    out
}
