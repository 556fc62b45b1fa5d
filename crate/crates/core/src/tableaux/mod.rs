//! Semistandard tableaux on skew shapes and on r-tuples of shapes: reading
//! words, lattice words, charge and jeu de taquin.

mod counts;
mod jdt;
mod shape;
mod tableau;
mod word;

pub use counts::{at_one, ls_kostka_via_charge, sst0_count, sst_count, theta, thm314_rhs, Theta};
pub use jdt::{rectify, rectify_with};
pub use shape::{skew_star, star_all, SkewShape};
pub use tableau::{enumerate_sst, enumerate_sst_multi, multi_to_skew, MultiTableau, SkewTableau};
pub use word::{charge, is_lattice, tableau_charge, word};
