//! Explicit map-building recipes: dimension-raising extensions of Keller
//! maps, gradient and symmetric reductions, Družkowski lifts, tame
//! sequences and the audited `λ` search.

mod druzkowski;
mod extension;
mod lambda;
mod reductions;
mod tame;

pub use druzkowski::{druzkowski_lift, is_druzkowski};
pub use extension::{extend, ExtensionParam, ExtensionVariant};
pub use lambda::{combination, find_lambda, sample_mu, LambdaAudit, LambdaSearch};
pub use reductions::{grad_reduction, symred};
pub use tame::{tame_compose, tame_coordinate_witness, TameSequence, TameStep};
