//! Signed standard bases for submodules of free right modules over basic
//! algebras, with Loewy layers and minimal generators.

pub mod algebra;
pub mod buchberger;
pub mod cli;
pub mod f5;
pub mod field;
pub mod linalg;
pub mod loewy;
pub mod module;
pub mod oracle;
pub mod problem;
pub mod ordering;
pub mod quiver;
pub mod random;
pub mod reduction;
