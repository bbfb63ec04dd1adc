//! Exact arithmetic, simulation and classification for qutrit Clifford+T
//! and Clifford+R circuits.

pub mod adjoint;
pub mod analysis;
pub mod catalog;
pub mod circuit;
pub mod rings;
pub mod sim;
pub mod verify;
