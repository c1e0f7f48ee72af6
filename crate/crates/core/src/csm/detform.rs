use std::collections::HashMap;

use crate::partition::Partition;
use crate::poly::permutations_with_sign;
use crate::scalar::{Binomials, Coefficient};

use super::{require_contains, CsmError, GammaTable, Method};

// Row i (zero-based) of the matrix, given s = outgoing sum and c = incoming
// sum: binom(alpha_i - s, beta_j + (i - j) + c - s).
fn row_entry<C: Coefficient>(binom: &Binomials<C>, a: &[i64], b: &[i64], i: usize, j: usize, s: i64, c: i64) -> C {
    binom.get(a[i] - s, b[j] + i as i64 - j as i64 + c - s)
}

/// Every way to write a total `<= bound` as `len` nonnegative parts,
/// grouped by total.
fn splittings(len: usize, bound: u32) -> Vec<Vec<Vec<u32>>> {
    let mut by_sum = vec![Vec::new(); bound as usize + 1];
    let mut cur = vec![0u32; len];
    fn walk(cur: &mut Vec<u32>, i: usize, used: u32, bound: u32, out: &mut Vec<Vec<Vec<u32>>>) {
        if i == cur.len() {
            out[used as usize].push(cur.clone());
            return;
        }
        for v in 0..=bound - used {
            cur[i] = v;
            walk(cur, i + 1, used + v, bound, out);
        }
        cur[i] = 0;
    }
    walk(&mut cur, 0, 0, bound, &mut by_sum);
    by_sum
}

/// Sum over all nonnegative `l[i][k]` (`k < i`) with `sum_i l[i][k] <=
/// alpha_{k+1}` of the determinant of binomials.
///
/// Rows are added one at a time. The state is the vector of incoming sums
/// still owed to later rows together with the signed minors on each set of
/// used columns; a row's entries depend only on its outgoing total, so the
/// minors are updated once per total and then shared among every splitting
/// of that total.
pub fn gamma_det<C: Coefficient>(alpha: &Partition, beta: &Partition) -> Result<C, CsmError> {
    require_contains(alpha, beta)?;
    let d = alpha.rows();
    if d == 0 {
        return Ok(C::one());
    }
    let a: Vec<i64> = alpha.padded(d).iter().map(|&v| v as i64).collect();
    let b: Vec<i64> = beta.padded(d).iter().map(|&v| v as i64).collect();
    let binom = Binomials::<C>::new(alpha.part(0) as usize);
    let full = 1usize << d;

    // key: incoming sums for rows k..d; value: minors indexed by column mask
    let mut states: HashMap<Vec<u32>, Vec<C>> = HashMap::new();
    let mut start = vec![C::zero(); full];
    start[0] = C::one();
    states.insert(vec![0; d], start);

    for k in 0..d {
        let bound = alpha.part(k + 1);
        let later = d - k - 1;
        let splits = splittings(later, bound);
        let mut next: HashMap<Vec<u32>, Vec<C>> = HashMap::new();
        for (incoming, minors) in &states {
            let c = incoming[0] as i64;
            for (s, group) in splits.iter().enumerate() {
                if group.is_empty() {
                    continue;
                }
                let row: Vec<C> = (0..d).map(|j| row_entry(&binom, &a, &b, k, j, s as i64, c)).collect();
                if row.iter().all(|v| v.is_zero()) {
                    continue;
                }
                let mut updated = vec![C::zero(); full];
                let mut any = false;
                for (mask, m) in minors.iter().enumerate() {
                    if m.is_zero() {
                        continue;
                    }
                    for (j, r) in row.iter().enumerate() {
                        if mask & (1 << j) != 0 || r.is_zero() {
                            continue;
                        }
                        let above = (mask >> (j + 1)).count_ones();
                        let term = m.mul_ref(r);
                        if above % 2 == 1 {
                            updated[mask | (1 << j)].sub_assign_ref(&term);
                        } else {
                            updated[mask | (1 << j)].add_assign_ref(&term);
                        }
                        any = true;
                    }
                }
                if !any {
                    continue;
                }
                for split in group {
                    let key: Vec<u32> = incoming[1..].iter().zip(split).map(|(x, y)| x + y).collect();
                    let slot = next.entry(key).or_insert_with(|| vec![C::zero(); full]);
                    for (dst, src) in slot.iter_mut().zip(&updated) {
                        if !src.is_zero() {
                            dst.add_assign_ref(src);
                        }
                    }
                }
            }
        }
        states = next;
    }
    let mut total = C::zero();
    for minors in states.values() {
        total.add_assign_ref(&minors[full - 1]);
    }
    Ok(total)
}

pub fn gamma_det_table<C: Coefficient>(alpha: &Partition) -> Result<GammaTable<C>, CsmError> {
    GammaTable::from_fn(alpha, Method::Det, |beta| gamma_det(alpha, beta))
}

/// The individual determinants of the sum computed by [`gamma_det`], one per
/// choice of the `l[i][k]`, by direct Leibniz expansion. Choices are
/// enumerated column by column (`k = 1, 2, ...`), each column's entries in
/// increasing row order, with the first entry varying slowest.
pub fn detform_terms<C: Coefficient>(alpha: &Partition, beta: &Partition) -> Result<Vec<C>, CsmError> {
    require_contains(alpha, beta)?;
    let d = alpha.rows();
    let a: Vec<i64> = alpha.padded(d).iter().map(|&v| v as i64).collect();
    let b: Vec<i64> = beta.padded(d).iter().map(|&v| v as i64).collect();
    let binom = Binomials::<C>::new(alpha.part(0) as usize);
    let perms = permutations_with_sign(d);

    // columns[k] lists the admissible (l[k+1][k], ..., l[d-1][k])
    let columns: Vec<Vec<Vec<u32>>> = (0..d)
        .map(|k| {
            let mut col: Vec<_> = splittings(d - k - 1, alpha.part(k + 1)).into_iter().flatten().collect();
            col.sort();
            col
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; d];
    loop {
        let mut s = vec![0i64; d];
        let mut c = vec![0i64; d];
        for k in 0..d {
            for (off, &v) in columns[k][choice[k]].iter().enumerate() {
                s[k] += v as i64;
                c[k + 1 + off] += v as i64;
            }
        }
        let mut det = C::zero();
        for (perm, odd) in &perms {
            let mut prod = C::one();
            for i in 0..d {
                prod = prod.mul_ref(&row_entry(&binom, &a, &b, i, perm[i], s[i], c[i]));
            }
            if *odd {
                det.sub_assign_ref(&prod);
            } else {
                det.add_assign_ref(&prod);
            }
        }
        out.push(det);
        // odometer, last column fastest
        let mut k = d;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < columns[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn determinant_terms_three_rows() {
        let alpha = p(&[2, 2, 1]);
        let beta = p(&[2]);
        let mut terms: Vec<i64> = detform_terms(&alpha, &beta).unwrap();
        assert_eq!(terms.len(), 12);
        let mut listed = vec![1, 0, 1, 0, 0, 0, 1, 1, 2, 0, -1, 1];
        terms.sort();
        listed.sort();
        assert_eq!(terms, listed);
        assert_eq!(gamma_det::<i64>(&alpha, &beta).unwrap(), 6);
    }

    #[test]
    fn determinant_terms_two_rows() {
        let terms: Vec<i64> = detform_terms(&p(&[3, 2]), &p(&[1, 1])).unwrap();
        assert_eq!(terms, vec![5, 1, 0]);
        assert_eq!(gamma_det::<i64>(&p(&[3, 2]), &p(&[1, 1])).unwrap(), 6);
    }

    #[test]
    fn leading_and_point_coefficients() {
        for alpha in Partition::in_rectangle(3, 4) {
            assert_eq!(gamma_det::<i64>(&alpha, &alpha).unwrap(), 1, "{alpha}");
            assert_eq!(gamma_det::<i64>(&alpha, &Partition::empty()).unwrap(), 1, "{alpha}");
        }
    }

    #[test]
    fn matches_brute_force_sum() {
        for alpha in Partition::in_rectangle(3, 4) {
            for beta in alpha.subdiagrams() {
                let brute: i64 = detform_terms::<i64>(&alpha, &beta).unwrap().into_iter().sum();
                assert_eq!(gamma_det::<i64>(&alpha, &beta).unwrap(), brute, "{alpha} {beta}");
            }
        }
    }

    #[test]
    fn containment_is_required() {
        assert!(matches!(gamma_det::<i64>(&p(&[1]), &p(&[1, 1])), Err(CsmError::NotContained { .. })));
    }
}
