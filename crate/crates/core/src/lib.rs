//! Finite inverse monoids of partial bijections, their Boolean and AF
//! limits, and the MV-algebras they coordinatize.

pub mod bratteli;
pub mod coordinatize;
pub mod cuntz;
pub mod dimension;
pub mod effect;
pub mod error;
pub mod graph_inverse;
pub mod partial_bijections;
pub mod prefix;
pub mod quotient;
pub mod selftest;
pub mod semisimple;

pub use error::{Error, Result};
