//! Executable properties: seeded instance generators, one checker per
//! checkable claim, and a suite runner producing canonical reports.

mod checkers;
mod generators;
mod report;
mod suite;
mod unimodular;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use checkers::{
    check_bakext_i, check_extension_determinant, check_extension_irreducibility, check_irredcor_chain,
    check_irredth_sampling, check_j41_direction, check_keller_squarefree_preservation, check_lindiv,
    check_symdiag, check_symm_lemma, check_symred_components, ids, is_cubic_without_quadratic,
    scan_mu_reducible,
};
pub use generators::{gen, GeneratorKind, GeneratorSpec, Instance};
pub use report::{Outcome, PropertyReport, Witness, WitnessValue};
pub use suite::{run_suite, SuiteConfig, SuiteReport};
pub use unimodular::unit_ideal_certificate;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Seed of the `index`-th sub-instance of a run seeded with `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index);
    r.next_u64()
}
