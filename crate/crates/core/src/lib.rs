pub mod algebra;
pub mod bitset;
pub mod syntax;
pub mod filters;
pub mod frames;
pub mod checker;
pub mod prover;
pub mod decider;
pub mod cli;
