//! Exact comparison operators, definition-table generators and property
//! verifiers for b-regular order-preserving space-filling curves in arbitrary
//! dimension: the interdimensionally consistent ternary families (Peano,
//! coil, half-coil, Meurthe), the binary families (Butz-Moore, harmonious
//! Hilbert), and composed curves that reproduce a base curve's order on
//! half-fixed and diagonal subspaces.
//!
//! Points are finite base-2 or base-3 digit strings, so every comparison is
//! exact. The brute-force order expansion in [`curvespec`] is the oracle all
//! streamlined comparators are verified against; the [`verify`] module turns
//! the curves' structural properties (visible orders, vertex continuity,
//! neutral orientation, monotonicity) into executable checks.
//!
//! The `parallel` feature (on by default) runs the heavy verification loops
//! on rayon; without it everything falls back to sequential iteration.

pub mod compose;
pub mod curvespec;
pub mod digits;
pub mod error;
pub mod graycode;
pub mod hilbert;
mod parallel;
pub mod ternary;
pub mod verify;

pub use crate::digits::{Base, DigitString, Point, SignedPoint};
pub use crate::error::{Error, Result};
pub use crate::hilbert::BinaryFamily;
pub use crate::ternary::TernaryFamily;

use crate::curvespec::CurveSpec;

/// One of the six shipped curve families, dimension-independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Ternary(TernaryFamily),
    Binary(BinaryFamily),
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Ternary(TernaryFamily::Peano),
        Family::Ternary(TernaryFamily::Coil),
        Family::Ternary(TernaryFamily::HalfCoil),
        Family::Ternary(TernaryFamily::Meurthe),
        Family::Binary(BinaryFamily::ButzMoore),
        Family::Binary(BinaryFamily::Harmonious),
    ];

    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "peano" => Ok(Family::Ternary(TernaryFamily::Peano)),
            "coil" => Ok(Family::Ternary(TernaryFamily::Coil)),
            "half-coil" | "halfcoil" => Ok(Family::Ternary(TernaryFamily::HalfCoil)),
            "meurthe" => Ok(Family::Ternary(TernaryFamily::Meurthe)),
            "butz-moore" | "butzmoore" => Ok(Family::Binary(BinaryFamily::ButzMoore)),
            "harmonious" => Ok(Family::Binary(BinaryFamily::Harmonious)),
            _ => Err(Error::Unsupported(format!("unknown curve family '{tag}'"))),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Family::Ternary(f) => f.tag(),
            Family::Binary(f) => f.tag(),
        }
    }

    pub fn base(&self) -> Base {
        match self {
            Family::Ternary(_) => Base::Ternary,
            Family::Binary(_) => Base::Binary,
        }
    }

    /// Materializes the full definition table for dimension `d`.
    pub fn spec(&self, d: usize) -> Result<CurveSpec> {
        match self {
            Family::Ternary(f) => f.spec(d),
            Family::Binary(f) => f.spec(d),
        }
    }

    /// Table-free comparison for points in the unit cube.
    pub fn compare(&self, p: &Point, q: &Point) -> Result<bool> {
        match self {
            Family::Ternary(f) => f.compare(p, q),
            Family::Binary(f) => f.compare(p, q),
        }
    }

    /// Comparison for points with arbitrary non-negative coordinates.
    pub fn compare_nonneg(&self, p: &SignedPoint, q: &SignedPoint) -> Result<bool> {
        match self {
            Family::Ternary(f) => f.compare_nonneg(p, q),
            Family::Binary(f) => f.compare_nonneg(p, q),
        }
    }

    /// Comparison for arbitrary real coordinates. Only the ternary families
    /// extend to negative coordinates.
    pub fn compare_signed(&self, p: &SignedPoint, q: &SignedPoint) -> Result<bool> {
        match self {
            Family::Ternary(f) => f.compare_signed(p, q),
            Family::Binary(_) => Err(Error::Unsupported(
                "the binary families have no negative-coordinate extension".into(),
            )),
        }
    }
}
