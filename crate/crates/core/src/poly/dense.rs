use std::sync::Arc;

use crate::scalar::Coefficient;

use super::{PolyError, PolyRing, SparsePoly};

/// Upper bound on the number of stored coefficients.
pub const MAX_DENSE_LEN: u128 = 1 << 27;

/// A power series truncated to the box `0 <= e_k <= caps[k]`, stored densely
/// with the first variable varying slowest.
///
/// All arithmetic is overflow-checked and reports [`PolyError::Overflow`],
/// so callers can run with a machine integer first and retry wider.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseSeries<C> {
    caps: Vec<u32>,
    strides: Vec<usize>,
    data: Vec<C>,
}

struct Term<C> {
    offset: usize,
    exps: Vec<(usize, u32)>,
    coeff: C,
}

impl<C: Coefficient> DenseSeries<C> {
    pub fn zero(caps: &[u32]) -> Result<Self, PolyError> {
        let len: u128 = caps.iter().map(|&c| c as u128 + 1).product();
        if len > MAX_DENSE_LEN {
            return Err(PolyError::SeriesTooLarge(len));
        }
        let mut strides = vec![1usize; caps.len()];
        for k in (0..caps.len().saturating_sub(1)).rev() {
            strides[k] = strides[k + 1] * (caps[k + 1] as usize + 1);
        }
        Ok(DenseSeries { caps: caps.to_vec(), strides, data: vec![C::zero(); len as usize] })
    }

    pub fn one(caps: &[u32]) -> Result<Self, PolyError> {
        let mut s = Self::zero(caps)?;
        s.data[0] = C::one();
        Ok(s)
    }

    /// Truncates `p` to the box; `p` must have one variable per cap.
    pub fn from_sparse(caps: &[u32], p: &SparsePoly<C>) -> Result<Self, PolyError> {
        if p.nvars() != caps.len() {
            return Err(PolyError::RingMismatch);
        }
        let mut s = Self::zero(caps)?;
        for (e, c) in p.terms() {
            if let Some(i) = s.index(e) {
                s.data[i] = c.clone();
            }
        }
        Ok(s)
    }

    pub fn caps(&self) -> &[u32] {
        &self.caps
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    fn index(&self, exps: &[u32]) -> Option<usize> {
        if exps.len() != self.caps.len() {
            return None;
        }
        let mut i = 0;
        for ((&e, &cap), &stride) in exps.iter().zip(&self.caps).zip(&self.strides) {
            if e > cap {
                return None;
            }
            i += e as usize * stride;
        }
        Some(i)
    }

    /// Coefficient of `x^exps`; zero outside the box.
    pub fn coefficient(&self, exps: &[u32]) -> C {
        self.index(exps).map(|i| self.data[i].clone()).unwrap_or_else(C::zero)
    }

    pub fn to_sparse(&self, ring: &Arc<PolyRing>) -> Result<SparsePoly<C>, PolyError> {
        if ring.nvars() != self.caps.len() {
            return Err(PolyError::RingMismatch);
        }
        let mut terms = Vec::new();
        let mut pos = vec![0u32; self.caps.len()];
        for c in &self.data {
            if !c.is_zero() {
                terms.push((pos.clone(), c.clone()));
            }
            self.step_up(&mut pos);
        }
        SparsePoly::from_terms(ring, terms)
    }

    fn step_up(&self, pos: &mut [u32]) {
        for k in (0..pos.len()).rev() {
            if pos[k] < self.caps[k] {
                pos[k] += 1;
                return;
            }
            pos[k] = 0;
        }
    }

    fn step_down(&self, pos: &mut [u32]) {
        for k in (0..pos.len()).rev() {
            if pos[k] > 0 {
                pos[k] -= 1;
                return;
            }
            pos[k] = self.caps[k];
        }
    }

    fn split_terms(&self, f: &SparsePoly<C>) -> Result<(C, Vec<Term<C>>), PolyError> {
        if f.nvars() != self.caps.len() {
            return Err(PolyError::RingMismatch);
        }
        let mut constant = C::zero();
        let mut rest = Vec::new();
        'terms: for (e, c) in f.terms() {
            let mut offset = 0;
            let mut exps = Vec::new();
            for (k, &ek) in e.iter().enumerate() {
                if ek > self.caps[k] {
                    continue 'terms;
                }
                if ek > 0 {
                    offset += ek as usize * self.strides[k];
                    exps.push((k, ek));
                }
            }
            if exps.is_empty() {
                constant = c.clone();
            } else {
                rest.push(Term { offset, exps, coeff: c.clone() });
            }
        }
        Ok((constant, rest))
    }

    /// `self <- self * f`, truncated to the box.
    pub fn mul_poly(&mut self, f: &SparsePoly<C>) -> Result<(), PolyError> {
        let (constant, terms) = self.split_terms(f)?;
        if self.data.is_empty() {
            return Ok(());
        }
        // descending order: every source index is below the target
        let mut pos = self.caps.clone();
        for idx in (0..self.data.len()).rev() {
            let mut acc = if constant.is_zero() {
                C::zero()
            } else {
                self.data[idx].checked_mul(&constant).ok_or(PolyError::Overflow)?
            };
            for t in &terms {
                if t.exps.iter().all(|&(k, e)| pos[k] >= e) {
                    let src = &self.data[idx - t.offset];
                    if !src.is_zero() {
                        let p = src.checked_mul(&t.coeff).ok_or(PolyError::Overflow)?;
                        acc = acc.checked_add(&p).ok_or(PolyError::Overflow)?;
                    }
                }
            }
            self.data[idx] = acc;
            self.step_down(&mut pos);
        }
        Ok(())
    }

    /// `self <- self / (1 - f)` for `f` with zero constant term.
    pub fn mul_geom_inverse(&mut self, f: &SparsePoly<C>) -> Result<(), PolyError> {
        let (constant, terms) = self.split_terms(f)?;
        if !constant.is_zero() {
            return Err(PolyError::NonzeroConstantTerm);
        }
        // ascending order: q[i] = s[i] + sum f_e q[i - e], sources already final
        let mut pos = vec![0u32; self.caps.len()];
        for idx in 0..self.data.len() {
            let mut acc = self.data[idx].clone();
            for t in &terms {
                if t.exps.iter().all(|&(k, e)| pos[k] >= e) {
                    let src = &self.data[idx - t.offset];
                    if !src.is_zero() {
                        let p = src.checked_mul(&t.coeff).ok_or(PolyError::Overflow)?;
                        acc = acc.checked_add(&p).ok_or(PolyError::Overflow)?;
                    }
                }
            }
            self.data[idx] = acc;
            self.step_up(&mut pos);
        }
        Ok(())
    }
}
