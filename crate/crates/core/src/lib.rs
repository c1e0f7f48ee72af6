//! Exact Chern–Schwartz–MacPherson classes of Schubert cells and Schubert
//! varieties in Grassmannians.
//!
//! The algorithms are generic over an exact integer [`Coefficient`] ring;
//! the aliases below fix arbitrary-precision integers, which is what the
//! command-line tool and the verification engine use.
//!
//! ```
//! use schubert_csm::{csm::csm_h, partition::p, Table};
//!
//! let table: Table = csm_h(&p(&[2, 2])).unwrap();
//! assert_eq!(table.get(&p(&[1, 1])).unwrap(), &4.into());
//! ```

pub mod csm;
pub mod partition;
pub mod poly;
pub mod scalar;
pub mod schubert;
pub mod verify;

pub use scalar::Coefficient;

pub type Integer = num_bigint::BigInt;
pub type Poly = poly::SparsePoly<Integer>;
pub type Chow = schubert::ChowClass<Integer>;
pub type Table = csm::GammaTable<Integer>;
