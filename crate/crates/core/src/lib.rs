pub mod braid;
pub mod cartan;
pub mod cli;
pub mod cyclicity;
pub mod problem;
pub mod qpoly;
pub mod report;
pub mod weyl;
