//! Level-one symmetric functions in Schur coordinates.

mod character;
mod classical;
mod expansion;
mod lr;

pub use character::{mn_character, z_classical, z_classical_t};
pub use classical::{classical_hl, classical_kostka, classical_kostka_modified};
pub use expansion::SymExpansion;
pub use lr::{lr_coeff, lr_product, schur_product};
