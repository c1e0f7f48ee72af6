use std::collections::HashSet;

use crate::partition::Partition;
use crate::scalar::{Binomials, Coefficient};

use super::{require_contains, CsmError, GammaTable, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LgvMode {
    /// Exhaustive search over pairs of paths.
    Enumerate,
    /// 2x2 determinants of single-path counts.
    Determinant,
}

type Point = (i64, i64);

/// Every right/down lattice path from `a` to `b`, as its list of points.
fn paths(a: Point, b: Point) -> Vec<Vec<Point>> {
    let mut out = Vec::new();
    if b.0 < a.0 || b.1 > a.1 {
        return out;
    }
    let mut cur = vec![a];
    fn walk(cur: &mut Vec<Point>, b: Point, out: &mut Vec<Vec<Point>>) {
        let (x, y) = *cur.last().expect("nonempty");
        if (x, y) == b {
            out.push(cur.clone());
            return;
        }
        if x < b.0 {
            cur.push((x + 1, y));
            walk(cur, b, out);
            cur.pop();
        }
        if y > b.1 {
            cur.push((x, y - 1));
            walk(cur, b, out);
            cur.pop();
        }
    }
    walk(&mut cur, b, &mut out);
    out
}

fn endpoints(alpha: &Partition, beta: &Partition, l: i64) -> [Point; 4] {
    let (a1, a2) = (alpha.part(0) as i64, alpha.part(1) as i64);
    let (b1, b2) = (beta.part(0) as i64, beta.part(1) as i64);
    [(l + 2, a1 + 2), (b1 + 2, b1 + 2), (1 - l, a2 + 1 - l), (b2 + 1, b2 + 1)]
}

/// Nonintersecting path pairs for each `l = 0..=alpha_2`.
pub fn lgv_counts<C: Coefficient>(alpha: &Partition, beta: &Partition, mode: LgvMode) -> Result<Vec<C>, CsmError> {
    if alpha.rows() > 2 {
        return Err(CsmError::TooManyRows(alpha.clone()));
    }
    require_contains(alpha, beta)?;
    let a2 = alpha.part(1) as i64;
    let (a1, b1, b2) = (alpha.part(0) as i64, beta.part(0) as i64, beta.part(1) as i64);
    let binom = Binomials::<C>::new(alpha.part(0) as usize + 2);
    (0..=a2)
        .map(|l| match mode {
            LgvMode::Determinant => {
                let mut v = binom.get(a1 - l, b1 - l).mul_ref(&binom.get(a2, b2 + l));
                v.sub_assign_ref(&binom.get(a1 - l, b2 - 1 - l).mul_ref(&binom.get(a2, b1 + 1 + l)));
                Ok(v)
            }
            LgvMode::Enumerate => {
                let [start1, end1, start2, end2] = endpoints(alpha, beta, l);
                let second: Vec<HashSet<Point>> =
                    paths(start2, end2).into_iter().map(|p| p.into_iter().collect()).collect();
                let mut n = 0i64;
                for p in paths(start1, end1) {
                    n += second.iter().filter(|q| p.iter().all(|pt| !q.contains(pt))).count() as i64;
                }
                Ok(C::from_i64(n))
            }
        })
        .collect()
}

/// `gamma(alpha, beta)` for `alpha` with at most two rows.
pub fn gamma_lgv<C: Coefficient>(alpha: &Partition, beta: &Partition, mode: LgvMode) -> Result<C, CsmError> {
    let mut total = C::zero();
    for v in lgv_counts::<C>(alpha, beta, mode)? {
        total.add_assign_ref(&v);
    }
    Ok(total)
}

pub fn gamma_lgv_table<C: Coefficient>(alpha: &Partition, mode: LgvMode) -> Result<GammaTable<C>, CsmError> {
    if alpha.rows() > 2 {
        return Err(CsmError::TooManyRows(alpha.clone()));
    }
    GammaTable::from_fn(alpha, Method::Lgv, |beta| gamma_lgv(alpha, beta, mode))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn example_counts() {
        for mode in [LgvMode::Enumerate, LgvMode::Determinant] {
            assert_eq!(lgv_counts::<i64>(&p(&[3, 2]), &p(&[1, 1]), mode).unwrap(), vec![5, 1, 0]);
            assert_eq!(gamma_lgv::<i64>(&p(&[3, 2]), &p(&[1, 1]), mode).unwrap(), 6);
        }
    }

    #[test]
    fn single_path_counts_are_binomials() {
        let b = Binomials::<i64>::new(20);
        for a1 in 0..6i64 {
            for b1 in 0..=a1 {
                for l in 0..=b1 {
                    let n = paths((l + 2, a1 + 2), (b1 + 2, b1 + 2)).len() as i64;
                    assert_eq!(n, b.get(a1 - l, b1 - l));
                }
            }
        }
    }

    #[test]
    fn modes_agree_and_normalize() {
        for alpha in Partition::in_rectangle(5, 2) {
            for beta in alpha.subdiagrams() {
                let e = gamma_lgv::<i64>(&alpha, &beta, LgvMode::Enumerate).unwrap();
                let d = gamma_lgv::<i64>(&alpha, &beta, LgvMode::Determinant).unwrap();
                assert_eq!(e, d, "{alpha} {beta}");
            }
            assert_eq!(gamma_lgv::<i64>(&alpha, &alpha, LgvMode::Enumerate).unwrap(), 1);
            assert_eq!(gamma_lgv::<i64>(&alpha, &Partition::empty(), LgvMode::Enumerate).unwrap(), 1);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(gamma_lgv::<i64>(&p(&[1, 1, 1]), &p(&[1]), LgvMode::Determinant), Err(CsmError::TooManyRows(_))));
        assert!(matches!(gamma_lgv::<i64>(&p(&[1]), &p(&[2]), LgvMode::Determinant), Err(CsmError::NotContained { .. })));
    }
}
