//! Exact rational workbench for Lie bialgebras, Yang–Baxter equations and the
//! left-invariant geometry of dual groups, centred on oscillator algebras.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
pub mod cli;
pub mod geometry;
pub mod io;
pub mod linalg;
pub mod multivector;
pub mod oracle;
pub mod oscillator;
pub mod sampling;
pub mod scalar;
pub mod verify;
