//! Exact coefficient rings.
//!
//! Every computation in this crate is carried out over an exact integer
//! ring. [`Coefficient`] abstracts over the machine integers `i64`/`i128`
//! and the arbitrary-precision [`BigInt`]; the crate root fixes `BigInt`
//! through type aliases, which is what callers normally want. Machine
//! integers are useful for tests and for the checked fast paths that fall
//! back to `BigInt` on overflow.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{AddAssign, Neg, SubAssign};

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

pub trait Coefficient:
    Clone
    + Debug
    + Display
    + Ord
    + Hash
    + Send
    + Sync
    + Zero
    + One
    + Signed
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Lossless conversion into a big integer.
    fn to_bigint(&self) -> BigInt;

    /// `None` when the value does not fit.
    fn from_bigint(v: &BigInt) -> Option<Self>;

    fn mul_ref(&self, rhs: &Self) -> Self;

    fn add_assign_ref(&mut self, rhs: &Self);

    fn sub_assign_ref(&mut self, rhs: &Self);

    /// `self += a * b`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        self.add_assign_ref(&a.mul_ref(b));
    }
}

macro_rules! machine_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }

            fn from_bigint(v: &BigInt) -> Option<Self> {
                <$t>::try_from(v).ok()
            }

            #[inline]
            fn mul_ref(&self, rhs: &Self) -> Self {
                *self * *rhs
            }

            #[inline]
            fn add_assign_ref(&mut self, rhs: &Self) {
                *self += *rhs;
            }

            #[inline]
            fn sub_assign_ref(&mut self, rhs: &Self) {
                *self -= *rhs;
            }

            #[inline]
            fn add_mul(&mut self, a: &Self, b: &Self) {
                *self += *a * *b;
            }
        }
    )*};
}

machine_coefficient!(i64, i128);

impl Coefficient for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn to_bigint(&self) -> BigInt {
        self.clone()
    }

    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self -= rhs;
    }
}

/// Coefficient as `i128` when it fits; used for compact diagnostics.
pub fn small<C: Coefficient>(c: &C) -> Option<i128> {
    c.to_bigint().to_i128()
}

/// Signed binomial coefficients with the zero convention: `binom(n, m) = 0`
/// unless `0 <= m <= n`.
///
/// Rows are built by Pascal's rule, so only ring addition is needed.
#[derive(Clone, Debug)]
pub struct Binomials<C> {
    rows: Vec<Vec<C>>,
}

impl<C: Coefficient> Binomials<C> {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<C>> = Vec::with_capacity(max_n + 1);
        for n in 0..=max_n {
            let mut row = vec![C::one(); n + 1];
            if n > 0 {
                let prev = &rows[n - 1];
                for k in 1..n {
                    let mut v = prev[k - 1].clone();
                    v.add_assign_ref(&prev[k]);
                    row[k] = v;
                }
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Panics if `n` is beyond the table (a caller bug, not a data error).
    pub fn get(&self, n: i64, m: i64) -> C {
        if n < 0 || m < 0 || m > n {
            return C::zero();
        }
        self.rows[n as usize][m as usize].clone()
    }

    pub fn get_ref(&self, n: i64, m: i64) -> Option<&C> {
        if n < 0 || m < 0 || m > n {
            return None;
        }
        Some(&self.rows[n as usize][m as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_rows() {
        let b = Binomials::<i64>::new(10);
        assert_eq!(b.get(5, 2), 10);
        assert_eq!(b.get(10, 5), 252);
        assert_eq!(b.get(0, 0), 1);
        assert_eq!(b.get(3, -1), 0);
        assert_eq!(b.get(3, 4), 0);
        assert_eq!(b.get(-1, 0), 0);
    }

    #[test]
    fn big_rows_do_not_overflow() {
        let b = Binomials::<BigInt>::new(200);
        let v = b.get(200, 100);
        assert!(v > BigInt::from(u128::MAX));
        assert_eq!(i128::from_bigint(&v), None);
    }
}
