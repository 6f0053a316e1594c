//! Constraint systems for hypothetical torsion units and the induction over
//! unit orders.

mod system;
mod tower;
mod verify;

pub use system::{
    allowed_classes, build_system, coeff_a, coeff_b, congruence_rows, multiplicity, usable_brauer_primes,
    ConstraintSystem, Row, RowKey, RowKind, SystemBuilder,
};
pub use tower::{PartialAugmentationTuple, Tower};
pub use verify::{
    check_bovdi, enumerate_admissible, order_report, tower_doc, verify_group, BovdiReport, BovdiViolation, Enumerator,
    OrderReport, OrderStatus, Report, TowerDoc, VerifyOptions, INCONSISTENT, UNDECIDED, VERIFIED,
};
