//! Exact Wronskian machinery for sums of products of powers of sparse
//! polynomials, `sum_i a_i prod_j f_j^(alpha_{i,j})`.

pub mod bounds;
mod dense;
pub mod diffpower;
pub mod error;
pub mod limits;
pub mod pit;
pub mod poly;
pub mod realroots;
pub mod report;
pub mod sps;
pub mod wronskian;

pub use error::{Error, Result};
pub use limits::Limits;
pub use pit::{Model, PitVerdict};
pub use poly::{Coefficient, Degree, SparsePoly};
pub use realroots::RationalInterval;
pub use sps::{ExpansionBudget, InstanceParams, SpsInstance};
pub use wronskian::PowerProduct;
