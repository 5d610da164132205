//! Exact solvers for edge modification towards threshold and chain graphs.
//!
//! The crate is organised around six areas:
//! * [`graph`] — the graph value, edit sets, twin classes, neighborhood nesting.
//! * [`recognition`] — threshold / chain / split / chordal recognition with witnesses.
//! * [`kernel`] — twin rule, obstruction modulator, irrelevant-vertex rule; quadratic kernels.
//! * [`solver`] — brute-force oracle and the subexponential partition-enumeration solver.
//! * [`reductions`] — hardness-instance generators (SAT gadget and the chain/chordal chain).
//! * [`fileio`] / [`cli`] — text formats, instance generator, command line front end.

pub mod cli;
pub mod fileio;
pub mod graph;
pub mod kernel;
pub mod recognition;
pub mod reductions;
pub mod solver;
