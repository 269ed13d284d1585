pub mod cartan;
pub mod classify;
pub mod cli;
pub mod integrable;
pub mod reflect;
pub mod scalars;
