//! The ring of functions in r colour sets of variables: power sums, the
//! t-deformed form, and the Hall-Littlewood families P^± with their Kostka
//! functions.

mod gram;
mod ldu;
mod tables;
mod transition;

use std::fmt;
use std::str::FromStr;

pub use gram::{form, gram, GramMatrix};
pub use ldu::{invert_unit_lower, ldu, Ldu};
pub use tables::{
    biorthogonalize, engine, hl_multi, ic_minus_candidate, kostka_modified, kostka_multi, kostka_table, transition,
    Biorthogonal, Engine, HlFamily, KostkaTable,
};
pub use transition::{z_multi, Transition};

use crate::error::{Error, Result};
use crate::partitions::{MultiPartition, TotalOrder};
use crate::symfunc::SymExpansion;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    #[default]
    Minus,
    Plus,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "-" | "minus" => Ok(Sign::Minus),
            "+" | "plus" => Ok(Sign::Plus),
            other => Err(Error::Parse(format!("unknown sign {other:?}"))),
        }
    }
}

/// Which argument of the form is conjugate-linear.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ConjugateSlot {
    #[default]
    First,
    Second,
}

impl fmt::Display for ConjugateSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConjugateSlot::First => "first",
            ConjugateSlot::Second => "second",
        })
    }
}

impl FromStr for ConjugateSlot {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(ConjugateSlot::First),
            "second" => Ok(ConjugateSlot::Second),
            other => Err(Error::Parse(format!("unknown conjugate slot {other:?}"))),
        }
    }
}

/// Choices the tables depend on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct EngineConfig {
    pub order: TotalOrder,
    pub conjugate: ConjugateSlot,
}

/// p_Bλ in the multi-Schur basis.
pub fn pmulti_to_schur(lambda: &MultiPartition) -> Result<SymExpansion> {
    Ok(transition(lambda.size(), lambda.level())?.p_in_schur(lambda))
}
