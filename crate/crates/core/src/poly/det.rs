use std::sync::Arc;

use crate::scalar::Coefficient;

use super::{PolyError, PolyRing, SparsePoly};

const MAX_DIM: usize = 8;

/// All permutations of `0..n` with their signs (`true` for odd).
pub fn permutations_with_sign(n: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, false, &mut out);
    out
}

fn permute(perm: &mut Vec<usize>, k: usize, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) {
    if k == perm.len() {
        out.push((perm.clone(), odd));
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, odd ^ (i != k), out);
        perm.swap(k, i);
    }
}

/// Leibniz determinant of a square matrix of polynomials over `ring`.
///
/// Partial row products are shared along a depth-first walk over the
/// permutations, so a `d x d` matrix costs at most `d!` leaf products.
pub fn det<C: Coefficient>(ring: &Arc<PolyRing>, m: &[Vec<SparsePoly<C>>]) -> Result<SparsePoly<C>, PolyError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(PolyError::NonSquare);
    }
    if n > MAX_DIM {
        return Err(PolyError::DimensionTooLarge(n));
    }
    for row in m {
        for e in row {
            if **e.ring() != **ring {
                return Err(PolyError::RingMismatch);
            }
        }
    }
    let mut used = vec![false; n];
    expand(m, 0, &SparsePoly::one(ring), false, &mut used)
}

fn expand<C: Coefficient>(
    m: &[Vec<SparsePoly<C>>],
    row: usize,
    partial: &SparsePoly<C>,
    odd: bool,
    used: &mut [bool],
) -> Result<SparsePoly<C>, PolyError> {
    let n = m.len();
    if row == n {
        return Ok(if odd { partial.neg() } else { partial.clone() });
    }
    let mut acc = SparsePoly::zero(partial.ring());
    // sign of placing `row` at column `col` = parity of used columns after col
    for col in 0..n {
        if used[col] || m[row][col].is_zero() {
            continue;
        }
        let inversions = used[col + 1..].iter().filter(|&&u| u).count();
        let next = partial.mul(&m[row][col])?;
        if next.is_zero() {
            continue;
        }
        used[col] = true;
        let sub = expand(m, row + 1, &next, odd ^ (inversions % 2 == 1), used)?;
        used[col] = false;
        acc = acc.add(&sub)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = SparsePoly<i64>;

    fn consts(r: &Arc<PolyRing>, rows: &[&[i64]]) -> Vec<Vec<P>> {
        rows.iter().map(|row| row.iter().map(|&v| P::constant(r, v)).collect()).collect()
    }

    fn cofactor(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * cofactor(&minor)
            })
            .sum()
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations_with_sign(3);
        assert_eq!(perms.len(), 6);
        for (p, odd) in &perms {
            let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            assert_eq!(*odd, inv % 2 == 1);
        }
        assert_eq!(permutations_with_sign(0), vec![(vec![], false)]);
    }

    #[test]
    fn constant_examples() {
        let r = PolyRing::new(1);
        let id = consts(&r, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(det(&r, &id).unwrap(), P::one(&r));
        assert_eq!(det(&r, &consts(&r, &[&[3, 1], &[1, 2]])).unwrap(), P::constant(&r, 5));
        assert!(det(&r, &consts(&r, &[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]])).unwrap().is_zero());
        assert_eq!(det::<i64>(&r, &[]).unwrap(), P::one(&r));
    }

    #[test]
    fn errors() {
        let r = PolyRing::new(1);
        let ragged = vec![vec![P::one(&r), P::one(&r)], vec![P::one(&r)]];
        assert_eq!(det(&r, &ragged), Err(PolyError::NonSquare));
        let big: Vec<Vec<P>> = (0..9).map(|_| (0..9).map(|_| P::one(&r)).collect()).collect();
        assert_eq!(det(&r, &big), Err(PolyError::DimensionTooLarge(9)));
    }

    #[test]
    fn polynomial_entries() {
        // det [[x, 1], [1, x]] = x^2 - 1
        let r = PolyRing::new(1);
        let x = P::var(&r, 0);
        let m = vec![vec![x.clone(), P::one(&r)], vec![P::one(&r), x]];
        let d = det(&r, &m).unwrap();
        assert_eq!(d.coefficient(&[2]), 1);
        assert_eq!(d.coefficient(&[0]), -1);
        assert_eq!(d.len(), 2);
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(vals in proptest::collection::vec(-9i64..10, 9)) {
            let rows: Vec<Vec<i64>> = vals.chunks(3).map(|c| c.to_vec()).collect();
            let r = PolyRing::new(1);
            let m: Vec<Vec<P>> = rows.iter().map(|row| row.iter().map(|&v| P::constant(&r, v)).collect()).collect();
            prop_assert_eq!(det(&r, &m).unwrap().constant_term(), cofactor(&rows));
        }
    }
}
