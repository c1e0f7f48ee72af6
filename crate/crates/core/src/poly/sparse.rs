use std::borrow::Borrow;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Bound;
use std::sync::Arc;

use crate::scalar::Coefficient;

use super::PolyError;

/// Variable count plus an optional per-variable degree cap.
///
/// With caps set, the ring is the quotient by all monomials exceeding a cap
/// in some variable, i.e. truncated power series.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    nvars: usize,
    caps: Option<Vec<u32>>,
}

impl PolyRing {
    pub fn new(nvars: usize) -> Arc<PolyRing> {
        Arc::new(PolyRing { nvars, caps: None })
    }

    pub fn truncated(caps: Vec<u32>) -> Arc<PolyRing> {
        Arc::new(PolyRing { nvars: caps.len(), caps: Some(caps) })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn caps(&self) -> Option<&[u32]> {
        self.caps.as_deref()
    }

    #[inline]
    pub fn admits(&self, exps: &[u32]) -> bool {
        match &self.caps {
            None => true,
            Some(caps) => exps.iter().zip(caps).all(|(e, c)| e <= c),
        }
    }
}

/// Exponents of a monomial, one slot per ring variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Box<[u32]>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps.into_boxed_slice())
    }

    pub fn zero(nvars: usize) -> Self {
        ExponentVector(vec![0; nvars].into_boxed_slice())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Borrow<[u32]> for ExponentVector {
    fn borrow(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sparse multivariate polynomial (or truncated series) with exact
/// coefficients. No zero coefficient is ever stored, and every stored
/// exponent respects the ring's caps.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly<C> {
    ring: Arc<PolyRing>,
    terms: BTreeMap<ExponentVector, C>,
}

impl<C: Coefficient> SparsePoly<C> {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        SparsePoly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: C) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zero(ring.nvars), c);
        }
        p
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        assert!(i < ring.nvars, "variable index {i} out of range");
        let mut e = vec![0; ring.nvars];
        e[i] = 1;
        Self::monomial(ring, e, C::one())
    }

    /// `c * x^e`; dropped when `e` is beyond the caps.
    pub fn monomial(ring: &Arc<PolyRing>, exps: Vec<u32>, c: C) -> Self {
        assert_eq!(exps.len(), ring.nvars, "exponent vector length");
        let mut p = Self::zero(ring);
        if !c.is_zero() && ring.admits(&exps) {
            p.terms.insert(ExponentVector::new(exps), c);
        }
        p
    }

    /// Sums the given terms; zero and out-of-profile terms are dropped.
    pub fn from_terms<I>(ring: &Arc<PolyRing>, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (Vec<u32>, C)>,
    {
        let mut p = Self::zero(ring);
        for (exps, c) in terms {
            if exps.len() != ring.nvars {
                return Err(PolyError::ExponentLength { expected: ring.nvars, got: exps.len() });
            }
            if ring.admits(&exps) {
                p.accumulate(&exps, &c);
            }
        }
        p.prune();
        Ok(p)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&vec![0; self.ring.nvars])
    }

    /// Stored coefficient or zero. Exponents outside the truncation profile
    /// read as zero; use [`SparsePoly::try_coefficient`] to have them
    /// reported instead.
    pub fn coefficient(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn try_coefficient(&self, exps: &[u32]) -> Result<C, PolyError> {
        if exps.len() != self.ring.nvars {
            return Err(PolyError::ExponentLength { expected: self.ring.nvars, got: exps.len() });
        }
        if !self.ring.admits(exps) {
            return Err(PolyError::OutOfProfile(exps.to_vec()));
        }
        Ok(self.coefficient(exps))
    }

    /// Largest total degree among the stored terms (0 for the zero polynomial).
    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(ExponentVector::total_degree).max().unwrap_or(0)
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    fn accumulate(&mut self, exps: &[u32], c: &C) {
        if let Some(v) = self.terms.get_mut(exps) {
            v.add_assign_ref(c);
        } else {
            self.terms.insert(ExponentVector::new(exps.to_vec()), c.clone());
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check_ring(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.accumulate(e.as_slice(), c);
        }
        out.prune();
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ring);
        }
        SparsePoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.mul_ref(k))).collect(),
        }
    }

    /// Product; terms beyond the caps are discarded.
    pub fn mul(&self, rhs: &Self) -> Result<Self, PolyError> {
        self.check_ring(rhs)?;
        let mut out = Self::zero(&self.ring);
        let n = self.ring.nvars;
        let mut scratch = vec![0u32; n];
        let caps = self.ring.caps.as_deref();
        for (ea, ca) in &self.terms {
            'inner: for (eb, cb) in &rhs.terms {
                for i in 0..n {
                    let e = ea.0[i] + eb.0[i];
                    if let Some(caps) = caps {
                        if e > caps[i] {
                            continue 'inner;
                        }
                    }
                    scratch[i] = e;
                }
                let prod = ca.mul_ref(cb);
                out.accumulate(&scratch, &prod);
            }
        }
        out.prune();
        Ok(out)
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, mut n: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        loop {
            if n & 1 == 1 {
                result = result.mul(&base).expect("same ring");
            }
            n >>= 1;
            if n == 0 {
                break;
            }
            base = base.mul(&base).expect("same ring");
        }
        result
    }

    /// Truncated expansion of `1 / (1 - f)`.
    pub fn geom_inverse(f: &Self) -> Result<Self, PolyError> {
        Self::one(&f.ring).mul_geom_inverse(f)
    }

    /// `self / (1 - f)` as a truncated series, i.e. `self * (1 + f + f^2 + ...)`.
    ///
    /// Solves `q = self + f q` one monomial at a time in increasing
    /// lexicographic order; since `f` has no constant term, every
    /// contribution to a monomial comes from a strictly smaller one.
    pub fn mul_geom_inverse(&self, f: &Self) -> Result<Self, PolyError> {
        self.check_ring(f)?;
        if !f.constant_term().is_zero() {
            return Err(PolyError::NonzeroConstantTerm);
        }
        if f.is_zero() {
            return Ok(self.clone());
        }
        let caps = self.ring.caps.as_deref().ok_or(PolyError::MissingTruncation)?;
        let n = self.ring.nvars;
        let mut acc = self.terms.clone();
        let mut scratch = vec![0u32; n];
        let mut cursor = acc.keys().next().cloned();
        while let Some(m) = cursor {
            let c = acc[&m].clone();
            if !c.is_zero() {
                'terms: for (t, ft) in &f.terms {
                    for i in 0..n {
                        let e = m.0[i] + t.0[i];
                        if e > caps[i] {
                            continue 'terms;
                        }
                        scratch[i] = e;
                    }
                    let add = c.mul_ref(ft);
                    if let Some(v) = acc.get_mut(&scratch[..]) {
                        v.add_assign_ref(&add);
                    } else {
                        acc.insert(ExponentVector::new(scratch.clone()), add);
                    }
                }
            }
            cursor = acc.range::<ExponentVector, _>((Bound::Excluded(&m), Bound::Unbounded)).next().map(|(k, _)| k.clone());
        }
        let mut out = SparsePoly { ring: self.ring.clone(), terms: acc };
        out.prune();
        Ok(out)
    }

    /// Re-reads the polynomial in another ring with the same variables,
    /// dropping terms beyond the new caps.
    pub fn into_ring(self, ring: &Arc<PolyRing>) -> Result<Self, PolyError> {
        if ring.nvars != self.ring.nvars {
            return Err(PolyError::RingMismatch);
        }
        let terms = self.terms.into_iter().filter(|(e, _)| ring.admits(e.as_slice())).collect();
        Ok(SparsePoly { ring: ring.clone(), terms })
    }

    /// Renders as `5*x1*x2 + 3*x2` with caller-chosen variable names.
    pub fn render_with(&self, name: impl Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.is_constant() {
                factors.push(abs.to_string());
            }
            for (i, &x) in e.0.iter().enumerate() {
                match x {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{}", name(i), x)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|i| format!("x{}", i + 1)))
    }
}

impl<C: Coefficient> fmt::Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}
