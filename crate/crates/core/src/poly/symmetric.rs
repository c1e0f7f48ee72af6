use std::sync::Arc;

use crate::scalar::Coefficient;

use super::{PolyError, PolyRing, SparsePoly};

/// Complete homogeneous symmetric polynomial `h_a(y_1, ..., y_n)` evaluated
/// at polynomial arguments.
///
/// Uses `h_j(y_k, ..., y_n) = h_j(y_{k+1}, ..., y_n) + y_k * h_{j-1}(y_k, ..., y_n)`,
/// one multiplication per `(k, j)`. `h_0 = 1`; with no arguments and
/// `a > 0` the result is zero.
pub fn h_complete<C: Coefficient>(
    ring: &Arc<PolyRing>,
    a: u32,
    args: &[SparsePoly<C>],
) -> Result<SparsePoly<C>, PolyError> {
    let a = a as usize;
    // h[j] holds h_j of the current suffix of args
    let mut h: Vec<SparsePoly<C>> = (0..=a)
        .map(|j| if j == 0 { SparsePoly::one(ring) } else { SparsePoly::zero(ring) })
        .collect();
    for y in args.iter().rev() {
        if !Arc::ptr_eq(y.ring(), ring) && **y.ring() != **ring {
            return Err(PolyError::RingMismatch);
        }
        for j in 1..=a {
            let step = y.mul(&h[j - 1])?;
            h[j] = h[j].add(&step)?;
        }
    }
    Ok(h.swap_remove(a))
}

/// `e_k(x_1, ..., x_n)` in the ring's own variables.
pub fn elementary_in_vars<C: Coefficient>(ring: &Arc<PolyRing>, k: u32) -> SparsePoly<C> {
    let n = ring.nvars();
    let mut terms = Vec::new();
    let mut exps = vec![0u32; n];
    subsets(n, k as usize, 0, &mut exps, &mut terms);
    SparsePoly::from_terms(ring, terms.into_iter().map(|e| (e, C::one()))).expect("lengths match")
}

fn subsets(n: usize, k: usize, start: usize, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if k == 0 {
        out.push(exps.clone());
        return;
    }
    for i in start..n {
        if n - i < k {
            break;
        }
        exps[i] = 1;
        subsets(n, k - 1, i + 1, exps, out);
        exps[i] = 0;
    }
}

/// `h_k(x_1, ..., x_n)` in the ring's own variables.
pub fn complete_in_vars<C: Coefficient>(ring: &Arc<PolyRing>, k: u32) -> SparsePoly<C> {
    let n = ring.nvars();
    let mut terms = Vec::new();
    if n > 0 {
        let mut exps = vec![0u32; n];
        compositions(k, 0, &mut exps, &mut terms);
    } else if k == 0 {
        terms.push(Vec::new());
    }
    SparsePoly::from_terms(ring, terms.into_iter().map(|e| (e, C::one()))).expect("lengths match")
}

fn compositions(rest: u32, i: usize, exps: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if i + 1 == exps.len() {
        exps[i] = rest;
        out.push(exps.clone());
        exps[i] = 0;
        return;
    }
    for v in 0..=rest {
        exps[i] = v;
        compositions(rest - v, i + 1, exps, out);
    }
    exps[i] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = SparsePoly<i64>;

    #[test]
    fn h_examples() {
        let r = PolyRing::new(2);
        let x1 = P::var(&r, 0);
        let x2 = P::var(&r, 1);
        let anything = x1.add(&x2.scale(&7)).unwrap();
        assert_eq!(h_complete(&r, 0, &[anything.clone(), anything]).unwrap(), P::one(&r));

        let h2 = h_complete(&r, 2, &[x1.clone(), x2.clone()]).unwrap();
        let expected = P::from_terms(&r, vec![(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)]).unwrap();
        assert_eq!(h2, expected);
        assert_eq!(complete_in_vars::<i64>(&r, 2), expected);

        let one_plus_x1 = P::one(&r).add(&x1).unwrap();
        let h1 = h_complete(&r, 1, &[one_plus_x1, x2]).unwrap();
        let expected = P::from_terms(&r, vec![(vec![0, 0], 1), (vec![1, 0], 1), (vec![0, 1], 1)]).unwrap();
        assert_eq!(h1, expected);

        assert!(h_complete::<i64>(&r, 3, &[]).unwrap().is_zero());
        assert_eq!(h_complete::<i64>(&r, 0, &[]).unwrap(), P::one(&r));
    }

    #[test]
    fn h_matches_brute_force_definition() {
        // h_a(y1, y2, y3) = sum over i1 + i2 + i3 = a of y1^i1 y2^i2 y3^i3
        let r = PolyRing::new(3);
        let ys: Vec<P> = vec![
            P::one(&r).add(&P::var(&r, 0)).unwrap(),
            P::var(&r, 1).scale(&2),
            P::var(&r, 2).sub(&P::var(&r, 0)).unwrap(),
        ];
        for a in 0..5u32 {
            let mut brute = P::zero(&r);
            for i in 0..=a {
                for j in 0..=a - i {
                    let k = a - i - j;
                    let term = ys[0].pow(i).mul(&ys[1].pow(j)).unwrap().mul(&ys[2].pow(k)).unwrap();
                    brute = brute.add(&term).unwrap();
                }
            }
            assert_eq!(h_complete(&r, a, &ys).unwrap(), brute, "a={a}");
        }
    }

    #[test]
    fn elementary() {
        let r = PolyRing::new(3);
        assert_eq!(elementary_in_vars::<i64>(&r, 0), P::one(&r));
        assert_eq!(elementary_in_vars::<i64>(&r, 2).len(), 3);
        assert_eq!(elementary_in_vars::<i64>(&r, 3).coefficient(&[1, 1, 1]), 1);
        assert!(elementary_in_vars::<i64>(&r, 4).is_zero());
        assert_eq!(complete_in_vars::<i64>(&r, 3).len(), 10);
    }
}
