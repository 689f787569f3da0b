pub mod cli;
pub mod elements;
pub mod error;
pub mod lattice;
pub mod om;
pub mod linalg;
pub mod maps;
pub mod report;
pub mod sign;
pub mod topo;
pub mod sphere;
