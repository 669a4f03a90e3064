//! Maximum-likelihood fitting and comparison of distributions on the unit
//! interval: Beta, Kumaraswamy, Topp-Leone, Unit-Lindley, MBUR and the two
//! GOMBUR parameterizations.

pub mod cli;
pub mod data;
pub mod distributions;
pub mod error;
pub mod gof;
pub mod inference;
pub mod optim;
pub mod report;
pub mod specfun;

pub use data::{describe, Dataset, DescriptiveStats};
pub use distributions::{Family, FamilySpec};
pub use error::{Error, Result};
