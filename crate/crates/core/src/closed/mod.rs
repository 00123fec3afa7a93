//! Closed formulas for `E_str`, `e_str` and the stringy index, written out
//! family by family. These share nothing with the engine beyond the
//! arithmetic and serve as an independent check on it.

mod forms;
mod sets;
mod tables;

use serde::Serialize;

pub use forms::closed_e_function;
pub use sets::{theorem_exponents, ExponentSets, Pair, Triple};
pub use tables::{closed_e_number, closed_index, milnor_table, IndexCheck};

use crate::algebra::{BigRational, RationalFunction};
use crate::catalog::AdeType;
use crate::error::Result;

/// Everything the closed formulas state about one type.
#[derive(Clone, Debug, Serialize)]
pub struct ClosedForm {
    pub ty: AdeType,
    pub e_function: RationalFunction,
    #[serde(with = "crate::algebra::rational_string")]
    pub e_number: BigRational,
    pub index_check: IndexCheck,
}

pub fn closed_form(ty: AdeType) -> Result<ClosedForm> {
    Ok(ClosedForm {
        ty,
        e_function: closed_e_function(ty)?,
        e_number: closed_e_number(ty)?,
        index_check: closed_index(ty)?,
    })
}
