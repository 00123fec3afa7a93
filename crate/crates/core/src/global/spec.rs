use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::invalid;
use crate::catalog::AdeType;
use crate::error::{Error, Result};

/// Singular points by type, each with a positive count.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityMultiset {
    entries: Vec<(AdeType, u32)>,
}

impl SingularityMultiset {
    pub fn new(entries: Vec<(AdeType, u32)>) -> Result<Self> {
        for &(ty, count) in &entries {
            ty.validate()?;
            if count == 0 {
                return Err(invalid(format!("count of {ty} must be positive")));
            }
        }
        Ok(Self { entries })
    }

    pub fn single(ty: AdeType, count: u32) -> Result<Self> {
        Self::new(vec![(ty, count)])
    }

    pub fn entries(&self) -> &[(AdeType, u32)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Parses one `FAMILY[:n]xCOUNT` token such as `A:1x125`, `D:6x1`, `E7x2`.
pub fn parse_singularity_token(token: &str) -> Result<(AdeType, u32)> {
    let bad = |reason: &str| Error::Parse {
        what: "singularity",
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let (ty, count) = token
        .trim()
        .rsplit_once(['x', 'X'])
        .ok_or_else(|| bad("expected FAMILY[:n]xCOUNT, e.g. A:1x125 or E7x2"))?;
    let ty: AdeType = ty.parse().map_err(|e: Error| bad(&e.to_string()))?;
    let count: u32 = count.parse().map_err(|_| bad("count is not a positive integer"))?;
    if count == 0 {
        return Err(bad("count must be positive"));
    }
    Ok((ty, count))
}

impl FromStr for SingularityMultiset {
    type Err = Error;

    /// Tokens separated by commas or whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_singularity_token)
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl fmt::Display for SingularityMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|(t, c)| format!("{c}x{t}")).collect();
        f.write_str(&parts.join(" + "))
    }
}

pub(crate) fn check_ci_shape(r: u32, degrees: &[u32]) -> Result<()> {
    if r < 4 {
        return Err(invalid(format!("ambient dimension r must be at least 4, got {r}")));
    }
    if degrees.len() != (r - 3) as usize {
        return Err(invalid(format!(
            "a threefold in P^{r} needs {} degrees, got {}",
            r - 3,
            degrees.len()
        )));
    }
    if degrees.contains(&0) {
        return Err(invalid("degrees must be at least 1"));
    }
    Ok(())
}

/// Complete intersection threefold of multidegree `degrees` in `P^r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompleteIntersectionSpec {
    pub r: u32,
    pub degrees: Vec<u32>,
    pub sings: SingularityMultiset,
}

impl CompleteIntersectionSpec {
    pub fn new(r: u32, degrees: Vec<u32>, sings: SingularityMultiset) -> Result<Self> {
        check_ci_shape(r, &degrees)?;
        Ok(Self { r, degrees, sings })
    }
}

/// Kodaira type of the second surface's fiber over a common critical value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Partner {
    I(u32),
    II,
}

impl fmt::Display for Partner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Partner::I(b) => write!(f, "I_{b}"),
            Partner::II => f.write_str("II"),
        }
    }
}

/// Common singular fibers `(b, partner)`: the first surface has an `I_b`
/// fiber, the second an `I_b'` or a type II fiber.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberProductSpec {
    common_fibers: Vec<(u32, Partner)>,
}

impl FiberProductSpec {
    pub fn new(common_fibers: Vec<(u32, Partner)>) -> Result<Self> {
        for &(b, p) in &common_fibers {
            if b == 0 || p == Partner::I(0) {
                return Err(invalid("fiber indices b, b' must be positive"));
            }
        }
        Ok(Self { common_fibers })
    }

    pub fn fibers(&self) -> &[(u32, Partner)] {
        &self.common_fibers
    }
}

/// Parses `bxI:b'` or `bxII`, e.g. `5xI:7`, `5xII`.
pub fn parse_fiber_token(token: &str) -> Result<(u32, Partner)> {
    let bad = |reason: &str| Error::Parse {
        what: "fiber",
        token: token.to_string(),
        reason: reason.to_string(),
    };
    let (b, kind) = token
        .trim()
        .split_once(['x', 'X'])
        .ok_or_else(|| bad("expected bxI:b' or bxII"))?;
    let b: u32 = b.parse().map_err(|_| bad("b is not a positive integer"))?;
    let partner = match kind {
        "II" => Partner::II,
        k => match k.strip_prefix("I:").or_else(|| k.strip_prefix("I_")) {
            Some(b2) => Partner::I(b2.parse().map_err(|_| bad("b' is not a positive integer"))?),
            None => {
                return Err(bad(&format!(
                    "unsupported Kodaira type {k:?}; supported partner fibers are I:<b'> and II"
                )))
            }
        },
    };
    if b == 0 || partner == Partner::I(0) {
        return Err(bad("fiber indices must be positive"));
    }
    Ok((b, partner))
}

impl FromStr for FiberProductSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fibers = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_fiber_token)
            .collect::<Result<Vec<_>>>()?;
        Self::new(fibers)
    }
}
