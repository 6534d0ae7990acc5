//! A desk-scale numerical laboratory for free quantum field theory.
//!
//! The crate implements, side by side, the two standard pictures of a free
//! quantum field:
//!
//! * the **particle** picture — truncated Fock spaces over finite mode sets
//!   ([`fock`]), and
//! * the **field** picture — wave functionals over classical field
//!   configurations ([`functional`]),
//!
//! together with the classical field observables the comparison rests on:
//! the classical Dirac field with its charge/current/energy/momentum flows
//! ([`dirac`]), the free electromagnetic field with its candidate photon
//! wave function ([`em`]), and a finite Grassmann algebra engine for the
//! fermionic-field-value pathologies ([`grassmann`]).
//!
//! Everything lives on a periodic lattice with a shared discrete Fourier
//! mode structure ([`basis`]). Named experiments wiring these modules to
//! config files and report tables live in [`scenario`] and are driven by the
//! `fieldlab` binary.

pub mod basis;
pub mod constants;
pub mod dirac;
pub mod em;
pub mod error;
pub mod fock;
pub mod functional;
pub mod grassmann;
pub mod io;
pub mod plot;
pub mod scenario;

pub use basis::ModeBasis;
pub use constants::PhysicalConstants;
pub use error::{Error, Result};
