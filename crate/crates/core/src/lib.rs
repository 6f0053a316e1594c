//! Torsion units in integral group rings: exact character arithmetic and
//! the eigenvalue multiplicity constraints on partial augmentations.
//!
//! ```
//! use zchelp::chartab::fixtures;
//! use zchelp::engine::{verify_group, VerifyOptions};
//!
//! let s5 = fixtures::s5();
//! let report = verify_group(&s5, &VerifyOptions { orders: Some(vec![2]), ..Default::default() }).unwrap();
//! assert_eq!(report.orders[0].towers.len(), 2);
//! ```

pub mod arith;
pub mod chartab;
pub mod cyclo;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod psl2;
pub mod solver;

pub use chartab::{Character, CharacterKind, CharacterTable};
pub use cyclo::CyclotomicNumber;
pub use error::{Error, Result};
