//! Exact word problems for braid groups, the symplectic group Sp₄ over
//! Z and Z/m, and mechanical checks of the relations linking B₆, the
//! Steinberg group St(C₂, Z) and Sp₄(Z).

pub mod braid;
pub mod engine;
pub mod error;
pub mod homs;
pub mod oracle;
pub mod report;
pub mod ring;
pub mod root;
pub mod steinberg;
pub mod symplectic;
pub mod verify;

pub use error::{Error, Result};
