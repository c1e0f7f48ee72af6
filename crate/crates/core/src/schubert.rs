//! Schubert classes, Ω-normalization, and the Bott–Samelson pushforward.
//!
//! A monomial `x_1^{r_1} ... x_d^{r_d}` capped against the fundamental class
//! of the Bott–Samelson resolution of `S(alpha)` pushes forward to
//! `±[S(beta)]` or zero. Everything else here is linear algebra on top of
//! that rule.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::partition::Partition;
use crate::poly::{complete_in_vars, elementary_in_vars, PolyError, PolyRing, SparsePoly};
use crate::scalar::Coefficient;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("ambient diagrams differ: {0} vs {1}")]
    AmbientMismatch(Partition, Partition),
    #[error("exponent vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("diagram {alpha} has more than {d} rows")]
    TooManyRows { alpha: Partition, d: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Finite formal sum of Schubert classes `[S(beta)]`.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowClass<C> {
    terms: BTreeMap<Partition, C>,
    ambient: Option<Partition>,
}

impl<C: Coefficient> ChowClass<C> {
    pub fn zero() -> Self {
        ChowClass { terms: BTreeMap::new(), ambient: None }
    }

    pub fn zero_in(ambient: Partition) -> Self {
        ChowClass { terms: BTreeMap::new(), ambient: Some(ambient) }
    }

    /// The single class `[S(beta)]`.
    pub fn basis(beta: Partition) -> Self {
        let mut c = Self::zero();
        c.terms.insert(beta, C::one());
        c
    }

    pub fn ambient(&self) -> Option<&Partition> {
        self.ambient.as_ref()
    }

    /// Sets the ambient diagram; `None` if some key does not fit inside it.
    pub fn with_ambient(mut self, ambient: Partition) -> Option<Self> {
        if self.terms.keys().all(|b| ambient.contains(b)) {
            self.ambient = Some(ambient);
            Some(self)
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in the canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, beta: &Partition) -> C {
        self.terms.get(beta).cloned().unwrap_or_else(C::zero)
    }

    pub(crate) fn add_term(&mut self, beta: Partition, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(beta) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                o.get_mut().add_assign_ref(c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub(crate) fn sub_term(&mut self, beta: Partition, c: &C) {
        self.add_term(beta, &-c.clone());
    }

    fn merged_ambient(&self, rhs: &Self) -> Result<Option<Partition>, ChowError> {
        match (&self.ambient, &rhs.ambient) {
            (Some(a), Some(b)) if a != b => Err(ChowError::AmbientMismatch(a.clone(), b.clone())),
            (Some(a), _) | (None, Some(a)) => Ok(Some(a.clone())),
            (None, None) => Ok(None),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, ChowError> {
        let mut out = self.clone();
        out.ambient = self.merged_ambient(rhs)?;
        for (b, c) in &rhs.terms {
            out.add_term(b.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, ChowError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        ChowClass {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), -c.clone())).collect(),
            ambient: self.ambient.clone(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return ChowClass { terms: BTreeMap::new(), ambient: self.ambient.clone() };
        }
        ChowClass {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c.mul_ref(k))).collect(),
            ambient: self.ambient.clone(),
        }
    }

    /// Equality of the underlying sums, ignoring ambients.
    pub fn same_terms(&self, rhs: &Self) -> bool {
        self.terms == rhs.terms
    }

    /// Largest row count among the keys.
    pub fn max_rows(&self) -> usize {
        self.terms.keys().map(Partition::rows).max().unwrap_or(0)
    }
}

impl<C: Coefficient> Default for ChowClass<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> fmt::Display for ChowClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "[S({b})]")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for ChowClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `[{"beta": [..], "coeff": "decimal"}, ...]`
impl<C: Coefficient> Serialize for ChowClass<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (b, c) in &self.terms {
            seq.serialize_element(&TermEntry { beta: b, coeff: c })?;
        }
        seq.end()
    }
}

pub(crate) struct TermEntry<'a, C> {
    pub beta: &'a Partition,
    pub coeff: &'a C,
}

impl<C: Coefficient> Serialize for TermEntry<'_, C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("beta", self.beta)?;
        m.serialize_entry("coeff", &self.coeff.to_string())?;
        m.end()
    }
}

/// An Ω-spec `(a_d, ..., a_1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OmegaSpec {
    // stored as a_1, ..., a_d
    low_first: Vec<i64>,
}

impl OmegaSpec {
    /// Entries in the order `a_d, ..., a_1`.
    pub fn new(entries: Vec<i64>) -> Self {
        let mut low_first = entries;
        low_first.reverse();
        OmegaSpec { low_first }
    }

    /// Entries in the order `a_1, ..., a_d`.
    pub fn from_low_first(low_first: Vec<i64>) -> Self {
        OmegaSpec { low_first }
    }

    /// The spec of `x^r` over the resolution of `S(alpha)`:
    /// `a_i = alpha_i - r_i + d + 1 - i`.
    pub fn of_monomial(alpha: &Partition, r: &[u32]) -> Self {
        OmegaSpec { low_first: monomial_spec(alpha, r) }
    }

    pub fn len(&self) -> usize {
        self.low_first.len()
    }

    pub fn is_empty(&self) -> bool {
        self.low_first.is_empty()
    }

    /// Entries in the order `a_d, ..., a_1`.
    pub fn entries(&self) -> Vec<i64> {
        self.low_first.iter().rev().copied().collect()
    }

    /// `(negative, beta)`, or `None` for the zero class.
    pub fn normalize(&self) -> Option<(bool, Partition)> {
        let mut a = self.low_first.clone();
        normalize_in_place(&mut a)
    }
}

fn monomial_spec(alpha: &Partition, r: &[u32]) -> Vec<i64> {
    let d = r.len() as i64;
    r.iter()
        .enumerate()
        .map(|(i, &ri)| alpha.part(i) as i64 - ri as i64 + d - i as i64)
        .collect()
}

/// Sorts `a` (given as `a_1..a_d`) decreasingly, counting transpositions.
fn normalize_in_place(a: &mut [i64]) -> Option<(bool, Partition)> {
    if a.iter().any(|&v| v <= 0) {
        return None;
    }
    let mut odd = false;
    for i in 1..a.len() {
        let mut j = i;
        while j > 0 && a[j - 1] < a[j] {
            a.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
        if j > 0 && a[j - 1] == a[j] {
            return None;
        }
    }
    let d = a.len() as i64;
    let parts: Vec<u32> = a.iter().enumerate().map(|(i, &v)| (v - (d - i as i64)) as u32).collect();
    Some((odd, Partition::new(parts).expect("strictly decreasing spec gives a partition")))
}

pub fn omega_normalize<C: Coefficient>(spec: &OmegaSpec) -> ChowClass<C> {
    match spec.normalize() {
        None => ChowClass::zero(),
        Some((neg, beta)) => {
            let c = ChowClass::basis(beta);
            if neg {
                c.neg()
            } else {
                c
            }
        }
    }
}

fn check_rows(alpha: &Partition, d: usize) -> Result<(), ChowError> {
    if alpha.rows() > d {
        Err(ChowError::TooManyRows { alpha: alpha.clone(), d })
    } else {
        Ok(())
    }
}

/// `pi_*(x^r ∩ [V(alpha)])` with `d = r.len()`.
pub fn pushforward_monomial<C: Coefficient>(alpha: &Partition, d: usize, r: &[u32]) -> Result<ChowClass<C>, ChowError> {
    if r.len() != d {
        return Err(ChowError::LengthMismatch { expected: d, got: r.len() });
    }
    check_rows(alpha, d)?;
    let mut out = ChowClass::zero_in(alpha.clone());
    let mut a = monomial_spec(alpha, r);
    if let Some((neg, beta)) = normalize_in_place(&mut a) {
        if neg {
            out.sub_term(beta, &C::one());
        } else {
            out.add_term(beta, &C::one());
        }
    }
    Ok(out)
}

/// Linear extension of [`pushforward_monomial`] over the terms of `p`.
pub fn pushforward_poly<C: Coefficient>(alpha: &Partition, d: usize, p: &SparsePoly<C>) -> Result<ChowClass<C>, ChowError> {
    if p.nvars() != d {
        return Err(ChowError::LengthMismatch { expected: d, got: p.nvars() });
    }
    check_rows(alpha, d)?;
    let mut acc: BTreeMap<Partition, C> = BTreeMap::new();
    let mut a = vec![0i64; d];
    for (r, c) in p.terms() {
        for i in 0..d {
            a[i] = alpha.part(i) as i64 - r[i] as i64 + (d - i) as i64;
        }
        if let Some((neg, beta)) = normalize_in_place(&mut a) {
            let slot = acc.entry(beta).or_insert_with(C::zero);
            if neg {
                slot.sub_assign_ref(c);
            } else {
                slot.add_assign_ref(c);
            }
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(ChowClass { terms: acc, ambient: Some(alpha.clone()) })
}

/// Tautological bundles whose Chern classes act by cap product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bundle {
    /// `S^∨`, with `c(S^∨) = prod (1 + x_i)`.
    DualSub,
    /// `Q`, with `c(Q) = prod 1/(1 - x_i)`.
    Quotient,
}

fn chern_poly<C: Coefficient>(bundle: Bundle, k: u32, d: usize) -> SparsePoly<C> {
    let ring: Arc<PolyRing> = PolyRing::new(d);
    match bundle {
        Bundle::DualSub => elementary_in_vars(&ring, k),
        Bundle::Quotient => complete_in_vars(&ring, k),
    }
}

/// `c_k(bundle) ∩ c` on the Grassmannian of `d`-planes.
pub fn cap_special<C: Coefficient>(c: &ChowClass<C>, k: u32, bundle: Bundle, d: usize) -> Result<ChowClass<C>, ChowError> {
    if let Some((beta, _)) = c.terms().find(|(b, _)| b.rows() > d) {
        return Err(ChowError::TooManyRows { alpha: beta.clone(), d });
    }
    if k == 0 {
        return Ok(c.clone());
    }
    let p = chern_poly::<C>(bundle, k, d);
    cap_with(c, &p, d)
}

/// `c(bundle) ∩ c` truncated to degrees `0..=top`.
pub fn cap_total<C: Coefficient>(c: &ChowClass<C>, top: u32, bundle: Bundle, d: usize) -> Result<ChowClass<C>, ChowError> {
    if let Some((beta, _)) = c.terms().find(|(b, _)| b.rows() > d) {
        return Err(ChowError::TooManyRows { alpha: beta.clone(), d });
    }
    let ring = PolyRing::new(d);
    let mut p = SparsePoly::zero(&ring);
    for k in 0..=top {
        p = p.add(&chern_poly(bundle, k, d))?;
    }
    cap_with(c, &p, d)
}

fn cap_with<C: Coefficient>(c: &ChowClass<C>, p: &SparsePoly<C>, d: usize) -> Result<ChowClass<C>, ChowError> {
    let mut out = ChowClass { terms: BTreeMap::new(), ambient: c.ambient.clone() };
    for (beta, coeff) in c.terms() {
        let image = pushforward_poly(beta, d, p)?;
        for (b, v) in image.terms() {
            out.add_term(b.clone(), &v.mul_ref(coeff));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;
    use num_bigint::BigInt;

    type Class = ChowClass<i64>;

    fn signed(neg: bool, beta: Partition) -> Class {
        let c = Class::basis(beta);
        if neg {
            c.neg()
        } else {
            c
        }
    }

    #[test]
    fn normalization_examples() {
        for d in 0..6i64 {
            let spec = OmegaSpec::new((1..=d).collect());
            assert_eq!(omega_normalize::<i64>(&spec), Class::basis(Partition::empty()), "d={d}");
        }
        assert!(omega_normalize::<i64>(&OmegaSpec::new(vec![3, 5, 3])).is_zero());
        assert!(omega_normalize::<i64>(&OmegaSpec::new(vec![3, 0])).is_zero());
        assert!(omega_normalize::<i64>(&OmegaSpec::new(vec![-1, 4])).is_zero());
        assert_eq!(omega_normalize::<i64>(&OmegaSpec::new(vec![4, 2])), signed(true, p(&[2, 1])));
        assert_eq!(OmegaSpec::new(vec![4, 2]).entries(), vec![4, 2]);
    }

    #[test]
    fn normalization_matches_brute_force_sign() {
        // sign oracle: parity of inversions of the decreasing sort
        for a1 in 1..6i64 {
            for a2 in 1..6 {
                for a3 in 1..6 {
                    let low = vec![a1, a2, a3];
                    let got = OmegaSpec::from_low_first(low.clone()).normalize();
                    let distinct = a1 != a2 && a2 != a3 && a1 != a3;
                    if !distinct {
                        assert_eq!(got, None);
                        continue;
                    }
                    let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| low[i] < low[j]).count();
                    let mut sorted = low.clone();
                    sorted.sort_by(|x, y| y.cmp(x));
                    let beta = Partition::new(sorted.iter().enumerate().map(|(i, &v)| (v - (3 - i as i64)) as u32).collect()).unwrap();
                    assert_eq!(got, Some((inv % 2 == 1, beta)));
                }
            }
        }
    }

    #[test]
    fn pushforward_examples() {
        let alpha = p(&[7, 6, 4, 3]);
        let c: Class = pushforward_monomial(&alpha, 4, &[10, 2, 0, 0]).unwrap();
        assert_eq!(c.coefficient(&p(&[3, 3, 2])), -1);
        assert_eq!(c.len(), 1);
        assert!(pushforward_monomial::<i64>(&alpha, 4, &[10, 3, 0, 0]).unwrap().is_zero());
        let id: Class = pushforward_monomial(&alpha, 4, &[0, 0, 0, 0]).unwrap();
        assert!(id.same_terms(&Class::basis(alpha.clone())));
        assert_eq!(id.ambient(), Some(&alpha));

        assert_eq!(
            pushforward_monomial::<i64>(&alpha, 4, &[1, 2]),
            Err(ChowError::LengthMismatch { expected: 4, got: 2 })
        );
        assert!(matches!(pushforward_monomial::<i64>(&alpha, 3, &[0, 0, 0]), Err(ChowError::TooManyRows { .. })));
    }

    #[test]
    fn pushforward_of_one() {
        let r = PolyRing::new(3);
        let c = pushforward_poly(&p(&[3, 1]), 3, &SparsePoly::<i64>::one(&r)).unwrap();
        assert!(c.same_terms(&Class::basis(p(&[3, 1]))));
        assert!(matches!(pushforward_poly(&p(&[3, 1]), 2, &SparsePoly::<i64>::one(&r)), Err(ChowError::LengthMismatch { .. })));
    }

    #[test]
    fn two_by_two_polynomial_terms() {
        let alpha = p(&[2, 2]);
        let r = PolyRing::new(2);
        let kept = [([0u32, 0], 1i64), ([0, 1], 3), ([0, 2], 4), ([1, 1], 5), ([2, 0], 1), ([1, 2], 4), ([2, 2], 1)];
        let dropped = [([1u32, 0], 2i64), ([2, 1], 2), ([0, 3], 3), ([1, 3], 1), ([0, 4], 1)];
        for (e, _) in dropped {
            assert!(pushforward_monomial::<i64>(&alpha, 2, &e).unwrap().is_zero(), "{e:?}");
        }
        let poly = SparsePoly::from_terms(&r, kept.iter().chain(&dropped).map(|(e, c)| (e.to_vec(), *c))).unwrap();
        let c = pushforward_poly(&alpha, 2, &poly).unwrap();
        assert_eq!(c.coefficient(&p(&[1, 1])), 4);
    }

    #[test]
    fn antisymmetry_top_degree() {
        for n in 1..=4u32 {
            for d in 2..=4usize {
                let alpha = Partition::rectangle(n, d);
                let total = n * d as u32;
                let mut r = vec![1u32; d];
                // all compositions of the top degree into positive parts
                fn walk(r: &mut Vec<u32>, i: usize, rest: u32, alpha: &Partition, d: usize) {
                    if i + 1 == r.len() {
                        r[i] = rest;
                        for j in 0..d - 1 {
                            let mut s = r.clone();
                            s[j] = r[j + 1] + 1;
                            s[j + 1] = r[j] - 1;
                            let lhs = pushforward_monomial::<i64>(alpha, d, r).unwrap();
                            let rhs = pushforward_monomial::<i64>(alpha, d, &s).unwrap();
                            assert_eq!(lhs, rhs.neg(), "{alpha} r={r:?}");
                        }
                        return;
                    }
                    for v in 1..rest.saturating_sub((r.len() - i - 1) as u32) + 1 {
                        r[i] = v;
                        walk(r, i + 1, rest - v, alpha, d);
                    }
                }
                if total >= d as u32 {
                    walk(&mut r, 0, total, &alpha, d);
                }
            }
        }
    }

    #[test]
    fn geometric_monomials() {
        for alpha in Partition::in_rectangle(4, 4) {
            for d in alpha.rows()..=alpha.rows() + 1 {
                let a = alpha.padded(d);
                for beta in alpha.subdiagrams() {
                    let r: Vec<u32> = a.iter().zip(beta.padded(d)).map(|(x, y)| x - y).collect();
                    let c: Class = pushforward_monomial(&alpha, d, &r).unwrap();
                    assert!(c.same_terms(&Class::basis(beta.clone())), "{alpha} {beta} d={d}");
                }
            }
        }
    }

    fn remove_one_box(beta: &Partition) -> Class {
        let mut out = Class::zero();
        let parts = beta.parts();
        for i in 0..parts.len() {
            if parts.get(i + 1).copied().unwrap_or(0) < parts[i] {
                let mut q = parts.to_vec();
                q[i] -= 1;
                out.add_term(Partition::new(q).unwrap(), &1);
            }
        }
        out
    }

    #[test]
    fn cap_examples() {
        let c = Class::basis(p(&[2, 1]));
        assert_eq!(cap_special(&c, 0, Bundle::DualSub, 2).unwrap(), c);
        let capped = cap_special(&c, 1, Bundle::DualSub, 2).unwrap();
        assert_eq!(capped, Class::basis(p(&[1, 1])).add(&Class::basis(p(&[2]))).unwrap());
        let point = cap_special(&Class::basis(p(&[1, 1])), 2, Bundle::DualSub, 2).unwrap();
        assert_eq!(point, Class::basis(Partition::empty()));
        assert!(matches!(cap_special(&Class::basis(p(&[1, 1, 1])), 1, Bundle::DualSub, 2), Err(ChowError::TooManyRows { .. })));
    }

    #[test]
    fn pieri_single_box_removal() {
        for beta in Partition::in_rectangle(4, 4) {
            let oracle = remove_one_box(&beta);
            for d in [beta.rows(), 4] {
                let capped = cap_special(&Class::basis(beta.clone()), 1, Bundle::DualSub, d).unwrap();
                assert_eq!(capped, oracle, "{beta} d={d}");
            }
        }
    }

    #[test]
    fn quotient_degree_one_agrees_with_dual_sub() {
        // c_1(Q) = -c_1(S) = c_1(S^∨)
        for beta in Partition::in_rectangle(3, 3) {
            let c = Class::basis(beta.clone());
            assert_eq!(cap_special(&c, 1, Bundle::Quotient, 3).unwrap(), cap_special(&c, 1, Bundle::DualSub, 3).unwrap());
        }
    }

    #[test]
    fn chow_linear_algebra() {
        let c = Class::basis(p(&[1])).add(&Class::basis(p(&[2, 1])).scale(&3)).unwrap();
        assert!(c.add(&c.scale(&-1)).unwrap().is_zero());
        assert!(c.scale(&0).is_zero());
        assert_eq!(Class::basis(p(&[1])).add(&Class::basis(p(&[1]))).unwrap().coefficient(&p(&[1])), 2);
        let a = Class::zero_in(p(&[2]));
        let b = Class::zero_in(p(&[1, 1]));
        assert!(matches!(a.add(&b), Err(ChowError::AmbientMismatch(..))));
        assert!(Class::basis(p(&[3])).with_ambient(p(&[2, 2])).is_none());
        assert_eq!(c.to_string(), "[S(1)] + 3*[S(2,1)]");
        assert_eq!(c.neg().to_string(), "-[S(1)] - 3*[S(2,1)]");
    }

    #[test]
    fn json_rendering() {
        let big = BigInt::from(1) << 70;
        let c = ChowClass::basis(p(&[2, 1])).scale(&big).add(&ChowClass::basis(Partition::empty())).unwrap();
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"[{"beta":[],"coeff":"1"},{"beta":[2,1],"coeff":"1180591620717411303424"}]"#
        );
    }

    use proptest::prelude::*;

    fn small_class() -> impl Strategy<Value = Class> {
        proptest::collection::vec((0u32..4, 0u32..4, 0u32..3, -3i64..4), 0..5).prop_map(|v| {
            let mut c = Class::zero();
            for (a, b, e, k) in v {
                let mut parts = vec![a, b, e];
                parts.sort_by(|x, y| y.cmp(x));
                c.add_term(Partition::new(parts).unwrap(), &k);
            }
            c
        })
    }

    fn bundle() -> impl Strategy<Value = Bundle> {
        prop_oneof![Just(Bundle::DualSub), Just(Bundle::Quotient)]
    }

    proptest! {
        #[test]
        fn caps_commute(c in small_class(), j in 0u32..4, k in 0u32..4, b1 in bundle(), b2 in bundle()) {
            let d = 3;
            let jk = cap_special(&cap_special(&c, j, b1, d).unwrap(), k, b2, d).unwrap();
            let kj = cap_special(&cap_special(&c, k, b2, d).unwrap(), j, b1, d).unwrap();
            prop_assert_eq!(jk, kj);
        }

        #[test]
        fn swapped_spec_negates(a in proptest::collection::vec(-2i64..8, 2..5), i in 0usize..4) {
            let i = i % (a.len() - 1);
            let mut b = a.clone();
            b.swap(i, i + 1);
            let x = omega_normalize::<i64>(&OmegaSpec::from_low_first(a));
            let y = omega_normalize::<i64>(&OmegaSpec::from_low_first(b));
            prop_assert_eq!(x, y.neg());
        }
    }
}
