//! Descriptors, the built-in catalog, reports and the command-line front end
//! over [`rwg_core`].

pub mod catalog;
pub mod cli;
pub mod descriptor;
pub mod report;

pub use descriptor::Descriptor;
pub use report::Report;
