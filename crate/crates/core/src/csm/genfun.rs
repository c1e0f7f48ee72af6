use num_bigint::BigInt;

use crate::partition::Partition;
use crate::poly::{DenseSeries, PolyError, PolyRing, SparsePoly};
use crate::scalar::Coefficient;

use super::{require_contains, CsmError, GammaTable, Method};

// Variables: t_1..t_d are 0..d, u_1..u_d are d..2d.

/// Shifted targets `e_i + d + 1 - i` absorbing the monomial prefactor.
fn shifted(parts: &[u32]) -> Vec<u32> {
    let d = parts.len();
    parts.iter().enumerate().map(|(i, &v)| v + (d - i) as u32).collect()
}

/// The `t`-only part: `prod_{i<j} (t_i - t_j) / (1 - 2 t_j + t_i t_j) * prod_i (1 - t_i)^d`.
fn t_factor(tcaps: &[u32]) -> Result<SparsePoly<BigInt>, PolyError> {
    let d = tcaps.len();
    let ring = PolyRing::truncated(tcaps.to_vec());
    let one = SparsePoly::one(&ring);
    let t = |i| SparsePoly::<BigInt>::var(&ring, i);
    let mut out = one.clone();
    for i in 0..d {
        out = out.mul(&one.sub(&t(i))?.pow(d as u32))?;
    }
    for i in 0..d {
        for j in i + 1..d {
            out = out.mul(&t(i).sub(&t(j))?)?;
            let f = t(j).scale(&BigInt::from(2)).sub(&t(i).mul(&t(j))?)?;
            out = out.mul_geom_inverse(&f)?;
        }
    }
    Ok(out)
}

/// The `u`-only part: `prod_{i<j} (u_i - u_j)`.
fn u_factor(d: usize) -> Result<SparsePoly<BigInt>, PolyError> {
    let ring = PolyRing::new(d);
    let mut out = SparsePoly::one(&ring);
    for i in 0..d {
        for j in i + 1..d {
            out = out.mul(&SparsePoly::var(&ring, i).sub(&SparsePoly::var(&ring, j))?)?;
        }
    }
    Ok(out)
}

/// `prod_{i,j} 1 / (1 - t_i (1 + u_j))` in the box `tcaps x ucaps`.
fn mixed_factor<C: Coefficient>(tcaps: &[u32], ucaps: &[u32]) -> Result<DenseSeries<C>, PolyError> {
    let d = tcaps.len();
    let caps: Vec<u32> = tcaps.iter().chain(ucaps).copied().collect();
    let ring = PolyRing::truncated(caps.clone());
    let mut series = DenseSeries::one(&caps)?;
    for i in 0..d {
        for j in 0..d {
            let ti = SparsePoly::<C>::var(&ring, i);
            let f = ti.add(&ti.mul(&SparsePoly::var(&ring, d + j))?)?;
            series.mul_geom_inverse(&f)?;
        }
    }
    Ok(series)
}

/// Coefficients at `t^T u^(target)` for each target, combining the three
/// factors at the end.
fn extract<C: Coefficient>(tcaps: &[u32], ucaps: &[u32], targets: &[Vec<u32>]) -> Result<Vec<BigInt>, PolyError> {
    let d = tcaps.len();
    let f = t_factor(tcaps)?;
    let g = u_factor(d)?;
    let h = mixed_factor::<C>(tcaps, ucaps)?;
    let mut at = vec![0u32; 2 * d];
    let mut out = Vec::with_capacity(targets.len());
    for target in targets {
        let mut total = BigInt::from(0);
        for (te, tc) in f.terms() {
            for (ue, uc) in g.terms() {
                let fits = (0..d).all(|i| te[i] <= tcaps[i] && ue[i] <= target[i]);
                if !fits {
                    continue;
                }
                for i in 0..d {
                    at[i] = tcaps[i] - te[i];
                    at[d + i] = target[i] - ue[i];
                }
                let hc = h.coefficient(&at);
                if !hc.is_zero() {
                    total += tc * uc * hc.to_bigint();
                }
            }
        }
        out.push(total);
    }
    Ok(out)
}

/// Runs [`extract`] in `i64`, then `i128`, then `BigInt`.
fn extract_widening(tcaps: &[u32], ucaps: &[u32], targets: &[Vec<u32>]) -> Result<Vec<BigInt>, CsmError> {
    match extract::<i64>(tcaps, ucaps, targets) {
        Err(PolyError::Overflow) => {}
        other => return Ok(other?),
    }
    match extract::<i128>(tcaps, ucaps, targets) {
        Err(PolyError::Overflow) => {}
        other => return Ok(other?),
    }
    Ok(extract::<BigInt>(tcaps, ucaps, targets)?)
}

fn narrow<C: Coefficient>(v: &BigInt) -> Result<C, CsmError> {
    C::from_bigint(v).ok_or(CsmError::Overflow)
}

/// Coefficient of `t^alpha u^beta` in the generating function, with
/// `d = alpha.rows()`.
pub fn gamma_genfun<C: Coefficient>(alpha: &Partition, beta: &Partition) -> Result<C, CsmError> {
    require_contains(alpha, beta)?;
    let d = alpha.rows();
    let tcaps = shifted(&alpha.padded(d));
    let ucaps = shifted(&beta.padded(d));
    let values = extract_widening(&tcaps, &ucaps, std::slice::from_ref(&ucaps))?;
    narrow(&values[0])
}

/// Every `gamma(alpha, beta)` from one expansion with `u` caps taken from
/// `alpha`.
pub fn gamma_genfun_table<C: Coefficient>(alpha: &Partition) -> Result<GammaTable<C>, CsmError> {
    let d = alpha.rows();
    let tcaps = shifted(&alpha.padded(d));
    let betas: Vec<Partition> = alpha.subdiagrams().collect();
    let targets: Vec<Vec<u32>> = betas.iter().map(|b| shifted(&b.padded(d))).collect();
    let values = extract_widening(&tcaps, &tcaps, &targets)?;
    let mut it = values.iter();
    GammaTable::from_fn(alpha, Method::Genfun, |_| narrow(it.next().expect("one value per subdiagram")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    /// The generating function expanded as one sparse product, straight
    /// from its definition.
    fn direct(alpha: &Partition, beta: &Partition) -> BigInt {
        let d = alpha.rows();
        let tcaps = shifted(&alpha.padded(d));
        let ucaps = shifted(&beta.padded(d));
        let caps: Vec<u32> = tcaps.iter().chain(&ucaps).copied().collect();
        let ring = PolyRing::truncated(caps.clone());
        let v = |i| SparsePoly::<BigInt>::var(&ring, i);
        let one = SparsePoly::one(&ring);
        let mut s = one.clone();
        for i in 0..d {
            for j in i + 1..d {
                s = s.mul(&v(i).sub(&v(j)).unwrap()).unwrap();
                s = s.mul(&v(d + i).sub(&v(d + j)).unwrap()).unwrap();
                let f = v(j).scale(&BigInt::from(2)).sub(&v(i).mul(&v(j)).unwrap()).unwrap();
                s = s.mul_geom_inverse(&f).unwrap();
            }
        }
        for i in 0..d {
            for j in 0..d {
                s = s.mul(&one.sub(&v(i)).unwrap()).unwrap();
                let f = v(i).add(&v(i).mul(&v(d + j)).unwrap()).unwrap();
                s = s.mul_geom_inverse(&f).unwrap();
            }
        }
        s.coefficient(&caps)
    }

    #[test]
    fn golden_values() {
        assert_eq!(gamma_genfun::<i64>(&p(&[2, 2]), &p(&[1, 1])).unwrap(), 4);
        assert_eq!(gamma_genfun::<i64>(&p(&[2, 1, 1]), &p(&[2])).unwrap(), 3);
        assert_eq!(gamma_genfun::<i64>(&p(&[2, 2, 1]), &p(&[2])).unwrap(), 6);
        assert_eq!(gamma_genfun::<i64>(&p(&[3, 2]), &p(&[1, 1])).unwrap(), 6);
        assert_eq!(gamma_genfun::<i64>(&Partition::empty(), &Partition::empty()).unwrap(), 1);
        for alpha in Partition::in_rectangle(2, 3) {
            assert_eq!(gamma_genfun::<i64>(&alpha, &alpha).unwrap(), 1, "{alpha}");
        }
    }

    #[test]
    fn split_product_matches_direct_expansion() {
        for alpha in Partition::in_rectangle(2, 3) {
            for beta in alpha.subdiagrams() {
                assert_eq!(gamma_genfun::<BigInt>(&alpha, &beta).unwrap(), direct(&alpha, &beta), "{alpha} {beta}");
            }
        }
    }

    #[test]
    fn table_matches_single_coefficients() {
        for alpha in [p(&[2, 2]), p(&[3, 1]), p(&[2, 1, 1])] {
            let table = gamma_genfun_table::<i64>(&alpha).unwrap();
            for (beta, v) in table.entries() {
                assert_eq!(*v, gamma_genfun::<i64>(&alpha, beta).unwrap());
            }
        }
    }

    #[test]
    fn widths_agree() {
        let alpha = p(&[3, 3, 2]);
        let tcaps = shifted(&alpha.padded(3));
        let targets: Vec<Vec<u32>> = alpha.subdiagrams().map(|b| shifted(&b.padded(3))).collect();
        let narrow = extract::<i64>(&tcaps, &tcaps, &targets).unwrap();
        let wide = extract::<BigInt>(&tcaps, &tcaps, &targets).unwrap();
        assert_eq!(narrow, wide);
    }
}
