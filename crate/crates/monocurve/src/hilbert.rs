//! Standard Hilbert curves in the binary base: the Butz-Moore rotation
//! family and the harmonious Hilbert family. Locations follow the binary
//! reflected Gray code; reflections are fixed by the standard-Hilbert gate
//! structure; the families differ only in how the remaining permutation
//! digits are chosen.
//!
//! The comparator follows the framework algorithm exactly, including the
//! deliberately self-correcting Forward/Reflected carry-over between
//! recursion levels: entering a level with globally complemented flags does
//! not change any verdict, and the flags are repaired within the first
//! dimension step of the level.

use crate::curvespec::{CurveSpec, Permutation, Transform};
use crate::digits::{Base, Point, SignedPoint};
use crate::error::{Error, Result};
use crate::graycode::{rgc_encode, BaseBNumber};
use crate::verify::{check_shows, Face, FaceTransform};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryFamily {
    ButzMoore,
    Harmonious,
}

impl BinaryFamily {
    pub const ALL: [BinaryFamily; 2] = [BinaryFamily::ButzMoore, BinaryFamily::Harmonious];

    pub fn tag(&self) -> &'static str {
        match self {
            BinaryFamily::ButzMoore => "butz-moore",
            BinaryFamily::Harmonious => "harmonious",
        }
    }

    /// Inverse permutation of subregion `r`, from the rank digits.
    fn inverse_perm_of_rank(&self, r: &[u8]) -> Vec<usize> {
        let d = r.len();
        match self {
            BinaryFamily::ButzMoore => {
                let a0 = butz_moore_inv0(r);
                (0..d).map(|j| (a0 + j) % d).collect()
            }
            BinaryFamily::Harmonious => {
                // indices with digit differing from the last move to the
                // front reversed; the rest follow, also reversed
                let last = r[d - 1];
                let mut inv: Vec<usize> = (0..d).filter(|&i| r[i] != last).rev().collect();
                inv.extend((0..d).filter(|&i| r[i] == last).rev());
                inv
            }
        }
    }

    /// Materializes the full definition table for dimension `d`:
    /// `c = BRGC`, reflections per the standard-Hilbert rule, permutations
    /// per family.
    pub fn spec(&self, d: usize) -> Result<CurveSpec> {
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        let count = 2usize
            .checked_pow(d as u32)
            .filter(|&c| (c as u128) <= crate::curvespec::MAX_EXPANSION_CELLS)
            .ok_or(Error::DepthTooLarge {
                cells: u128::MAX,
                limit: crate::curvespec::MAX_EXPANSION_CELLS,
            })?;
        let rows = (0..count)
            .map(|r| {
                let rank = BaseBNumber::from_index(Base::Binary, d, r);
                let code = rgc_encode(&rank);
                let flip: Vec<bool> = if r == 0 {
                    vec![false; d]
                } else {
                    let pred = rgc_encode(&BaseBNumber::from_index(Base::Binary, d, r - 1));
                    (0..d)
                        .map(|i| {
                            if i == d - 1 {
                                code.digit(i) == 0
                            } else {
                                pred.digit(i) == 1
                            }
                        })
                        .collect()
                };
                let perm = Permutation::from_inverse(self.inverse_perm_of_rank(rank.digits()))?;
                Ok((code, Transform::new(perm, flip)?))
            })
            .collect::<Result<Vec<_>>>()?;
        CurveSpec::new(d, Base::Binary, rows)
    }

    /// True iff `p` precedes `q`, for points in the unit cube.
    pub fn compare(&self, p: &Point, q: &Point) -> Result<bool> {
        check_pair(p, q)?;
        let d = p.dim();
        let levels = p.max_len().max(q.max_len());
        let mut m = BinaryMachine::new(*self, d);
        for level in 0..levels {
            for _ in 0..d {
                let src = m.source();
                let (a, b) = m.step(p.coord(src).digit_at(level), q.coord(src).digit_at(level));
                if a != b {
                    return Ok(a < b);
                }
            }
        }
        Ok(false)
    }

    /// Comparison extended to arbitrary non-negative coordinates. Both points
    /// are rescaled until they lie in the unit cube; the number of levels per
    /// rescale step is chosen so that the embedding subregion is
    /// untransformed, which keeps verdicts for in-cube points unchanged.
    /// Negative coordinates are rejected: no origin placement is known that
    /// preserves interdimensional consistency for the binary families.
    pub fn compare_nonneg(&self, p: &SignedPoint, q: &SignedPoint) -> Result<bool> {
        check_signed_pair(p, q)?;
        if p.any_negative() || q.any_negative() {
            return Err(Error::NegativeCoordinate);
        }
        // harmonious: first-of-first is untransformed (reversal squared);
        // Butz-Moore: the first subregion rotates by one axis per level, so
        // it takes d levels to come back around
        let levels = match self {
            BinaryFamily::Harmonious => 2,
            BinaryFamily::ButzMoore => p.dim() as u32,
        };
        let mut p = p.clone();
        let mut q = q.clone();
        while !(p.all_in_unit() && q.all_in_unit()) {
            for c in p.coords_mut().iter_mut().chain(q.coords_mut().iter_mut()) {
                c.div_base_pow(levels);
            }
        }
        self.compare(&p.to_point()?, &q.to_point()?)
    }
}

/// `a^-1_0(r)` by the location scan: one less than the position of the least
/// significant 1 in `c(r)`, wrapping to `d-1` when `c(r)` has no ones.
fn butz_moore_inv0(r: &[u8]) -> usize {
    let d = r.len();
    let code: Vec<u8> = {
        // BRGC digit-wise: c_i = r_i xor r_{i-1}
        (0..d).map(|i| if i == 0 { r[0] } else { r[i] ^ r[i - 1] }).collect()
    };
    match code.iter().rposition(|&c| c == 1) {
        Some(0) | None => d - 1,
        Some(i) => i - 1,
    }
}

fn check_pair(p: &Point, q: &Point) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), got: q.dim() });
    }
    if p.base() != Base::Binary || q.base() != Base::Binary {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

fn check_signed_pair(p: &SignedPoint, q: &SignedPoint) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), got: q.dim() });
    }
    if p.base() != Base::Binary || q.base() != Base::Binary {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

/// The streaming state machine behind the binary comparators: one dimension
/// step per call, yielding rank digits for both points. For Butz-Moore the
/// permutation is a rotation tracked through the same array; for harmonious
/// curves the inverse permutation is rebuilt per level from the rank digits.
#[derive(Debug)]
pub(crate) struct BinaryMachine {
    family: BinaryFamily,
    d: usize,
    perm: Vec<usize>,
    alt: Vec<usize>,
    reflected: Vec<bool>,
    forward: bool,
    rank: Vec<u8>,
    i: usize,
    i_minus_one: usize,
    rot_index: usize,
}

impl BinaryMachine {
    pub(crate) fn new(family: BinaryFamily, d: usize) -> Self {
        BinaryMachine {
            family,
            d,
            perm: (0..d).collect(),
            alt: vec![0; d],
            reflected: vec![false; d],
            forward: true,
            rank: vec![0; d],
            i: 0,
            i_minus_one: d - 1,
            rot_index: d - 1,
        }
    }

    pub(crate) fn source(&self) -> usize {
        self.perm[self.i]
    }

    /// Consumes one raw digit of each point and returns the pair of rank
    /// digits. State updates follow the first point's digits.
    pub(crate) fn step(&mut self, dp_raw: u8, dq_raw: u8) -> (u8, u8) {
        let src = self.perm[self.i];
        let (mut dp, mut dq) = (dp_raw, dq_raw);
        if self.reflected[src] {
            dp = 1 - dp;
            dq = 1 - dq;
        }
        let (rp, rq) = if self.forward { (dp, dq) } else { (1 - dp, 1 - dq) };
        self.rank[self.i] = rp;
        if dp == 1 {
            self.forward = !self.forward;
            self.reflected[src] = !self.reflected[src];
            self.rot_index = self.i_minus_one;
        }
        self.i_minus_one = self.i;
        self.i += 1;
        if self.i == self.d {
            self.i = 0;
            self.end_level();
        }
        (rp, rq)
    }

    fn end_level(&mut self) {
        match self.family {
            BinaryFamily::ButzMoore => {
                // inverse permutation is the rotation starting at rot_index
                for i in 0..self.d {
                    self.alt[i] = self.perm[(self.rot_index + i) % self.d];
                }
            }
            BinaryFamily::Harmonious => {
                let ones: usize = self.rank.iter().map(|&x| x as usize).sum();
                let mut next = [0usize; 2];
                if self.rank[self.d - 1] == 0 {
                    next[1] = 0;
                    next[0] = ones;
                } else {
                    next[0] = 0;
                    next[1] = self.d - ones;
                }
                for i in (0..self.d).rev() {
                    let digit = self.rank[i] as usize;
                    self.alt[next[digit]] = self.perm[i];
                    next[digit] += 1;
                }
            }
        }
        self.reflected[self.perm[self.d - 1]] = !self.reflected[self.perm[self.d - 1]];
        self.reflected[self.alt[0]] = !self.reflected[self.alt[0]];
        std::mem::swap(&mut self.perm, &mut self.alt);
        self.i_minus_one = self.d - 1;
        self.rot_index = self.d - 1;
    }
}

/// A concrete demonstration that the 3D Butz-Moore curve is not
/// interdimensionally consistent: every front face shows the 2D Hilbert
/// order at depth 1, but some face diverges at depth 2.
#[derive(Debug, Clone)]
pub struct InconsistencyWitness {
    pub face: Face,
    pub depth: usize,
    pub position: usize,
    pub expected: Vec<u32>,
    pub actual: Vec<u32>,
}

/// Searches the front faces of the 3D Butz-Moore curve for the first
/// divergence from the 2D Hilbert order. Used as a negative control for the
/// consistency checker; failing to find a witness would indicate a checker
/// bug.
pub fn butzmoore_inconsistency_witness() -> Result<InconsistencyWitness> {
    let spec3 = BinaryFamily::ButzMoore.spec(3)?;
    let spec2 = BinaryFamily::ButzMoore.spec(2)?;
    for axis in 0..3 {
        let face = Face::front(axis);
        if let Some(w) = check_shows(&spec3, &spec2, face, 1, FaceTransform::Identity)? {
            return Err(Error::InvalidSpec(format!(
                "checker bug: face {face} deviates already at depth 1: {w:?}"
            )));
        }
    }
    for axis in 0..3 {
        let face = Face::front(axis);
        if let Some(w) = check_shows(&spec3, &spec2, face, 2, FaceTransform::Identity)? {
            return Ok(InconsistencyWitness {
                face,
                depth: 2,
                position: w.position,
                expected: w.expected,
                actual: w.actual,
            });
        }
    }
    Err(Error::InvalidSpec(
        "checker bug: no Butz-Moore front-face divergence found at depth 2".into(),
    ))
}
