//! Two-dimensional finite-element laboratory for forced filtration into a
//! periodic porous medium.
//!
//! The crate solves the three coupled problems that determine the effective
//! interface behaviour of a viscous fluid entering a porous bed:
//!
//! * the periodic **cell problem** on the unit pore geometry, yielding the
//!   permeability tensor `K` and the pore-scale velocity/pressure fields,
//! * the **interface boundary-layer problem** on a truncated strip, yielding
//!   the slip constant `C1bl` and the pressure constant `Cpi`,
//! * the **microscopic Stokes problem** on a perforated strip at pore size
//!   `eps`.
//!
//! From these it assembles composite approximation fields, evaluates the
//! interface error norms over a sweep of `eps`, and fits convergence rates.
//!
//! Most capabilities have a runnable demonstration under `examples/`; the
//! `porohomog` binary drives complete studies from a TOML configuration.

pub mod analysis;
pub mod blayer;
pub mod cell;
pub mod effective;
pub mod error;
pub mod fem;
pub mod geometry;
pub mod micro;
pub mod study;

pub use error::{Error, Result};
