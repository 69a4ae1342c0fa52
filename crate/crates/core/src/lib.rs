//! Modular groupoids `Z_n(t,u)` with `a * b = (t*a + u*b) mod n`.
//!
//! The crate is split along the lines of the work it does:
//!
//! * [`groupoid`] builds the groupoid and materializes Cayley tables,
//! * [`properties`] holds brute-force checkers for the AG-groupoid property
//!   vocabulary (left invertive law, T³, cancellativity, AG-groups, ...),
//! * [`classes`] enumerates the parameter classes `Z(n) ⊆ Z*(n) ⊆ Z**(n) ⊆ Z***(n)`
//!   and their AG subclasses,
//! * [`theorems`] instantiates each construction theorem over a range of
//!   moduli and runs the checkers against every instance.
//!
//! All checkers are written against the [`Magma`] trait so that they run
//! unchanged on an explicit [`CayleyTable`] (including tables imported from
//! disk) or on a [`ModGroupoid`] that computes products on the fly.

pub mod classes;
pub mod error;
pub mod groupoid;
pub mod properties;
pub mod theorems;

pub use classes::{ag_group_members, ag_members, enumerate_class, ClassListing, ClassVariant};
pub use error::{Error, Result};
pub use groupoid::{CayleyTable, Magma, ModGroupoid};
pub use properties::{classify, AgGroupVerdict, Property, PropertyProfile, Verdict};
pub use theorems::{
    falsify_converse, verify, verify_all, NRange, Obligation, TheoremId, TheoremReport,
    VerifyConfig, Violation,
};
