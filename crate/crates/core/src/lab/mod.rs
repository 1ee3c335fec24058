//! Experiments and checks built on the core modules.

pub mod experiment;
pub mod random;
pub mod reference;
pub mod refine;
pub mod scan;
pub mod trace;
pub mod verify;
