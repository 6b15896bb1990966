//! Chromatic numbers of the integer distance graphs `Cay(ℤ, {±a, ±b, ±c})`.
//!
//! The closed-form classification lives in [`zhu`]; every answer can be
//! backed by a [`ChiCertificate`]: a periodic coloring with period at most
//! `b + c` (pulled back from a circulant quotient, see [`circulant`]) and an
//! independently checkable lower-bound witness. [`intmat`] carries the
//! relation-matrix view of the same graphs, including the row collapses that
//! realize reduction modulo a sum or difference of two distances.
//!
//! ```
//! use zhu_chromatic::{certify, chi_formula, ChiBranch, DistanceTriple};
//!
//! let t = DistanceTriple::new(2, 3, 5)?;
//! assert_eq!(chi_formula(&t), (4, ChiBranch::SumNotCongMod3));
//! let cert = certify(&t)?;
//! assert!(cert.upper.period <= t.b() + t.c());
//! # Ok::<(), zhu_chromatic::Error>(())
//! ```

pub mod circulant;
pub mod cli;
mod error;
pub mod intmat;
pub mod periodic;
pub mod zhu;

pub use circulant::{chromatic_number, exists_coloring, make_circulant, Circulant, Coloring};
pub use error::{Error, Result};
pub use intmat::{
    build_heuberger_matrix, distance_matrix, egcd, solve_eq1, CollapseSign, LabeledMatrix,
};
pub use periodic::{
    candidate_moduli, certify, find_periodic_coloring, segment_colorable, verify_periodic,
    ChiCertificate, LowerBound, PeriodicColoring,
};
pub use zhu::{
    chi_formula, is_bipartite, normalize_triple, orient_for_matrix, ChiBranch, DistanceTriple,
};
