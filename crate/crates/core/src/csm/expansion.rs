use std::sync::Arc;

use crate::partition::Partition;
use crate::poly::{h_complete, PolyRing, SparsePoly};
use crate::scalar::Coefficient;
use crate::schubert::pushforward_poly;

use super::{CsmError, GammaTable, Method};

/// Per-variable caps `x_i <= alpha_i + d - i` (one-based `i`). Larger
/// exponents push forward to zero.
fn useful_caps(alpha: &Partition, d: usize) -> Vec<u32> {
    (0..d).map(|i| alpha.part(i) + (d - 1 - i) as u32).collect()
}

fn ring_for(alpha: &Partition, d: usize, truncated: bool) -> Arc<PolyRing> {
    if truncated {
        PolyRing::truncated(useful_caps(alpha, d))
    } else {
        PolyRing::new(d)
    }
}

fn check_d(alpha: &Partition, d: usize) -> Result<(), CsmError> {
    if d < alpha.rows() {
        return Err(CsmError::InvalidArgument(format!("d = {d} is smaller than the {} rows of {alpha}", alpha.rows())));
    }
    Ok(())
}

/// `prod_i (1 + x_i)^(alpha_i - alpha_{i+1}) h_{alpha_{i+1}}(1 + x_i, x_{i+1}, ..., x_d)`.
///
/// With `truncated` the product is computed under the caps
/// `x_i <= alpha_i + d - i`, which changes no pushforward.
pub fn h_polynomial<C: Coefficient>(alpha: &Partition, d: usize, truncated: bool) -> Result<SparsePoly<C>, CsmError> {
    check_d(alpha, d)?;
    let ring = ring_for(alpha, d, truncated);
    let one = SparsePoly::one(&ring);
    let mut out = one.clone();
    for i in 0..d {
        let shifted = one.add(&SparsePoly::var(&ring, i))?;
        out = out.mul(&shifted.pow(alpha.part(i) - alpha.part(i + 1)))?;
        let next = alpha.part(i + 1);
        if next > 0 {
            let mut args = vec![shifted];
            args.extend((i + 1..d).map(|j| SparsePoly::var(&ring, j)));
            out = out.mul(&h_complete(&ring, next, &args)?)?;
        }
    }
    Ok(out)
}

/// `prod_i (1 + x_i)^(alpha_i + d - i) / prod_{i<j} (1 + x_i - x_j)`,
/// truncated to the caps `x_i <= alpha_i + d - i`.
pub fn rat_series<C: Coefficient>(alpha: &Partition, d: usize) -> Result<SparsePoly<C>, CsmError> {
    check_d(alpha, d)?;
    let ring = ring_for(alpha, d, true);
    let one = SparsePoly::one(&ring);
    let mut out = one.clone();
    for i in 0..d {
        let shifted = one.add(&SparsePoly::var(&ring, i))?;
        out = out.mul(&shifted.pow(alpha.part(i) + (d - 1 - i) as u32))?;
    }
    for i in 0..d {
        for j in i + 1..d {
            let f = SparsePoly::var(&ring, j).sub(&SparsePoly::var(&ring, i))?;
            out = out.mul_geom_inverse(&f)?;
        }
    }
    Ok(out)
}

pub fn csm_h<C: Coefficient>(alpha: &Partition) -> Result<GammaTable<C>, CsmError> {
    csm_h_with_d(alpha, alpha.rows())
}

/// [`csm_h`] computed with `d` variables, `d >= alpha.rows()`.
pub fn csm_h_with_d<C: Coefficient>(alpha: &Partition, d: usize) -> Result<GammaTable<C>, CsmError> {
    let poly = h_polynomial(alpha, d, true)?;
    GammaTable::from_chow(alpha, Method::H, &pushforward_poly(alpha, d, &poly)?)
}

pub fn csm_rat<C: Coefficient>(alpha: &Partition) -> Result<GammaTable<C>, CsmError> {
    csm_rat_with_d(alpha, alpha.rows())
}

/// [`csm_rat`] computed with `d` variables, `d >= alpha.rows()`.
pub fn csm_rat_with_d<C: Coefficient>(alpha: &Partition, d: usize) -> Result<GammaTable<C>, CsmError> {
    let series = rat_series(alpha, d)?;
    GammaTable::from_chow(alpha, Method::Rat, &pushforward_poly(alpha, d, &series)?)
}

/// Exponent of `x_i` matched with `b_i`: `alpha_i + d + 1 - i - b_i`, or
/// `None` when negative.
fn target_exponents(alpha: &Partition, b: &[u32]) -> Option<Vec<u32>> {
    let d = b.len();
    b.iter()
        .enumerate()
        .map(|(i, &bi)| {
            let e = alpha.part(i) as i64 + (d - i) as i64 - bi as i64;
            u32::try_from(e).ok()
        })
        .collect()
}

/// Coefficient of `x_1^(alpha_1 + d - b_1) ... x_d^(alpha_d + 1 - b_d)` in
/// the full (untruncated) [`h_polynomial`], with `d = b.len()`.
pub fn c_coefficient<C: Coefficient>(alpha: &Partition, b: &[u32]) -> Result<C, CsmError> {
    let poly = h_polynomial::<C>(alpha, b.len(), false)?;
    Ok(target_exponents(alpha, b).map(|e| poly.coefficient(&e)).unwrap_or_else(C::zero))
}

/// The same coefficient in [`rat_series`].
pub fn c_prime_coefficient<C: Coefficient>(alpha: &Partition, b: &[u32]) -> Result<C, CsmError> {
    let series = rat_series::<C>(alpha, b.len())?;
    Ok(target_exponents(alpha, b).map(|e| series.coefficient(&e)).unwrap_or_else(C::zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;
    use crate::poly::permutations_with_sign;

    #[test]
    fn two_by_two_expansion() {
        let poly = h_polynomial::<i64>(&p(&[2, 2]), 2, false).unwrap();
        let expected = [
            ([0u32, 0], 1i64),
            ([0, 1], 3),
            ([0, 2], 4),
            ([1, 1], 5),
            ([2, 0], 1),
            ([1, 2], 4),
            ([2, 2], 1),
            ([1, 0], 2),
            ([2, 1], 2),
            ([0, 3], 3),
            ([1, 3], 1),
            ([0, 4], 1),
        ];
        assert_eq!(poly.len(), expected.len());
        for (e, c) in expected {
            assert_eq!(poly.coefficient(&e), c, "{e:?}");
        }
        assert_eq!(c_coefficient::<i64>(&p(&[2, 2]), &[3, 2]).unwrap(), 5);
        assert_eq!(c_coefficient::<i64>(&p(&[2, 2]), &[2, 3]).unwrap(), 1);
        assert_eq!(csm_h::<i64>(&p(&[2, 2])).unwrap().get(&p(&[1, 1])), Some(&4));
    }

    #[test]
    fn small_tables() {
        let t = csm_h::<i64>(&Partition::empty()).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t.get(&Partition::empty()), Some(&1));
        let t = csm_rat::<i64>(&Partition::empty()).unwrap();
        assert_eq!(t.get(&Partition::empty()), Some(&1));
        let t = csm_h::<i64>(&p(&[1])).unwrap();
        assert_eq!(t.entries().map(|(_, v)| *v).collect::<Vec<_>>(), vec![1, 1]);
    }

    #[test]
    fn c_and_c_prime_differ_but_antisymmetrize_equally() {
        let alpha = p(&[2, 1, 1]);
        assert_eq!(c_coefficient::<i64>(&alpha, &[5, 2, 1]).unwrap(), 4);
        assert_eq!(c_prime_coefficient::<i64>(&alpha, &[5, 2, 1]).unwrap(), 5);
        let b = [5u32, 2, 1];
        let mut via_c = 0i64;
        let mut via_c_prime = 0i64;
        for (perm, odd) in permutations_with_sign(3) {
            let bs: Vec<u32> = perm.iter().map(|&k| b[k]).collect();
            let s = if odd { -1 } else { 1 };
            via_c += s * c_coefficient::<i64>(&alpha, &bs).unwrap();
            via_c_prime += s * c_prime_coefficient::<i64>(&alpha, &bs).unwrap();
        }
        assert_eq!(via_c, 3);
        assert_eq!(via_c_prime, 3);
        assert_eq!(csm_h::<i64>(&alpha).unwrap().get(&p(&[2])), Some(&3));
        assert_eq!(csm_rat::<i64>(&alpha).unwrap().get(&p(&[2])), Some(&3));
    }

    #[test]
    fn truncation_changes_nothing() {
        for alpha in Partition::in_rectangle(3, 3) {
            let d = alpha.rows();
            let full = h_polynomial::<i64>(&alpha, d, false).unwrap();
            let cut = h_polynomial::<i64>(&alpha, d, true).unwrap();
            assert_eq!(pushforward_poly(&alpha, d, &full).unwrap(), pushforward_poly(&alpha, d, &cut).unwrap(), "{alpha}");
        }
    }

    #[test]
    fn d_stability() {
        for alpha in Partition::in_rectangle(3, 3) {
            let d = alpha.rows();
            assert!(csm_h_with_d::<i64>(&alpha, d).unwrap().same_values(&csm_h_with_d(&alpha, d + 1).unwrap()));
            assert!(csm_rat_with_d::<i64>(&alpha, d).unwrap().same_values(&csm_rat_with_d(&alpha, d + 1).unwrap()));
        }
        assert!(matches!(csm_h_with_d::<i64>(&p(&[1, 1]), 1), Err(CsmError::InvalidArgument(_))));
    }
}
