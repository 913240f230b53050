//! The generic b-regular order-preserving mono-curve engine: curve
//! definitions as rank-indexed tables, the generic comparison operator, rank
//! paths, brute-force order expansion (the oracle every comparator is tested
//! against), gate computation and definition-table emission.

use crate::digits::{Base, Point};
use crate::error::{Error, Result};
use crate::graycode::BaseBNumber;
use std::fmt;

/// Hard cap on the number of cells an expansion may materialize.
pub const MAX_EXPANSION_CELLS: u128 = 1 << 24;

/// A bijection on axis indices, stored together with its inverse.
/// `forward[i]` is the axis of the unit-cube curve rotated onto axis `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    forward: Vec<usize>,
    inverse: Vec<usize>,
}

impl Permutation {
    pub fn new(forward: Vec<usize>) -> Result<Self> {
        let d = forward.len();
        let mut inverse = vec![usize::MAX; d];
        for (i, &j) in forward.iter().enumerate() {
            if j >= d || inverse[j] != usize::MAX {
                return Err(Error::InvalidPermutation(format!("{forward:?} is not a bijection")));
            }
            inverse[j] = i;
        }
        Ok(Permutation { forward, inverse })
    }

    /// Builds a permutation from its inverse.
    pub fn from_inverse(inverse: Vec<usize>) -> Result<Self> {
        let p = Permutation::new(inverse)?;
        Ok(Permutation { forward: p.inverse, inverse: p.forward })
    }

    pub fn identity(d: usize) -> Self {
        let forward: Vec<usize> = (0..d).collect();
        Permutation { inverse: forward.clone(), forward }
    }

    pub fn reversal(d: usize) -> Self {
        let forward: Vec<usize> = (0..d).rev().collect();
        Permutation { inverse: forward.clone(), forward }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn forward(&self) -> &[usize] {
        &self.forward
    }

    pub fn inverse(&self) -> &[usize] {
        &self.inverse
    }

    pub fn is_identity(&self) -> bool {
        self.forward.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` applied after `inner`: `(self ∘ inner)[i] = inner[self[i]]`.
    pub fn compose(&self, inner: &Permutation) -> Permutation {
        let forward: Vec<usize> = self.forward.iter().map(|&j| inner.forward[j]).collect();
        Permutation::new(forward).expect("composition of bijections")
    }

    /// Removes element `i` and renumbers the survivors consecutively.
    pub fn take_out(&self, i: usize) -> Result<Permutation> {
        let d = self.len();
        if i >= d {
            return Err(Error::IndexOutOfRange { index: i, len: d });
        }
        let removed = self.forward[i];
        let forward: Vec<usize> = self
            .forward
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &v)| if v > removed { v - 1 } else { v })
            .collect();
        Permutation::new(forward)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.forward {
            if v > 9 {
                return Err(fmt::Error);
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The linear part of a subregion transformation: axis permutation plus
/// per-axis reflection, acting on the unit cube as
/// `out[i] = flip[i] ? 1 - x[perm[i]] : x[perm[i]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transform {
    perm: Permutation,
    flip: Vec<bool>,
}

impl Transform {
    pub fn new(perm: Permutation, flip: Vec<bool>) -> Result<Self> {
        if perm.len() != flip.len() {
            return Err(Error::DimensionMismatch { expected: perm.len(), got: flip.len() });
        }
        Ok(Transform { perm, flip })
    }

    pub fn identity(d: usize) -> Self {
        Transform { perm: Permutation::identity(d), flip: vec![false; d] }
    }

    /// Reflection in a plane orthogonal to `axis`.
    pub fn mirror(d: usize, axis: usize) -> Self {
        let mut flip = vec![false; d];
        flip[axis] = true;
        Transform { perm: Permutation::identity(d), flip }
    }

    /// Reflection in every axis (point reflection through the cube centre).
    pub fn point_reflection(d: usize) -> Self {
        Transform { perm: Permutation::identity(d), flip: vec![true; d] }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn flip(&self) -> &[bool] {
        &self.flip
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.flip.iter().all(|&f| !f)
    }

    /// `self` applied after `inner` (both as unit-cube automorphisms).
    pub fn compose(&self, inner: &Transform) -> Transform {
        let d = self.dim();
        let mut perm = Vec::with_capacity(d);
        let mut flip = Vec::with_capacity(d);
        for i in 0..d {
            let mid = self.perm.forward[i];
            perm.push(inner.perm.forward[mid]);
            flip.push(self.flip[i] ^ inner.flip[mid]);
        }
        Transform { perm: Permutation::new(perm).expect("bijection"), flip }
    }

    /// Smallest `k >= 1` with `self^k = identity`.
    pub fn order(&self) -> usize {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }

    /// Image of a cube corner (coordinates 0 or 1).
    pub fn apply_corner(&self, corner: &[u8]) -> Vec<u8> {
        (0..self.dim())
            .map(|i| {
                let v = corner[self.perm.forward[i]];
                if self.flip[i] {
                    1 - v
                } else {
                    v
                }
            })
            .collect()
    }

    /// Image of a grid cell in a `side^d` grid (no translation).
    pub fn apply_cell(&self, cell: &[u32], side: u32) -> Vec<u32> {
        (0..self.dim())
            .map(|i| {
                let v = cell[self.perm.forward[i]];
                if self.flip[i] {
                    side - 1 - v
                } else {
                    v
                }
            })
            .collect()
    }
}

/// A nested-subregion identifier: the sequence of ranks from the unit cube
/// down to a cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellPath {
    ranks: Vec<usize>,
}

impl CellPath {
    pub fn new(ranks: Vec<usize>) -> Self {
        CellPath { ranks }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn depth(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_prefix_of(&self, other: &CellPath) -> bool {
        other.ranks.len() >= self.ranks.len() && other.ranks[..self.ranks.len()] == self.ranks[..]
    }
}

/// A full curve definition: for every rank, the location of the subregion
/// and the rotation/reflection that maps the unit-cube curve into it. The
/// translation is implied: the corner of `S(r)` mapped to the origin is
/// `(c(r) + m(r)) / b`.
#[derive(Debug, Clone)]
pub struct CurveSpec {
    dim: usize,
    base: Base,
    locations: Vec<BaseBNumber>,
    transforms: Vec<Transform>,
    loc_to_rank: Vec<u32>,
}

impl CurveSpec {
    pub fn new(dim: usize, base: Base, rows: Vec<(BaseBNumber, Transform)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let count = (base.radix() as usize)
            .checked_pow(dim as u32)
            .ok_or(Error::DepthTooLarge { cells: u128::MAX, limit: MAX_EXPANSION_CELLS })?;
        if rows.len() != count {
            return Err(Error::InvalidSpec(format!(
                "expected {count} subregions, got {}",
                rows.len()
            )));
        }
        let mut locations = Vec::with_capacity(count);
        let mut transforms = Vec::with_capacity(count);
        let mut loc_to_rank = vec![u32::MAX; count];
        for (rank, (loc, t)) in rows.into_iter().enumerate() {
            if loc.base() != base || loc.width() != dim {
                return Err(Error::InvalidSpec("location width/base mismatch".into()));
            }
            if t.dim() != dim {
                return Err(Error::InvalidSpec("transform dimension mismatch".into()));
            }
            let idx = loc.to_index();
            if loc_to_rank[idx] != u32::MAX {
                return Err(Error::InvalidSpec(format!("location {loc} occurs twice")));
            }
            loc_to_rank[idx] = rank as u32;
            locations.push(loc);
            transforms.push(t);
        }
        Ok(CurveSpec { dim, base, locations, transforms, loc_to_rank })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn rank_count(&self) -> usize {
        self.locations.len()
    }

    pub fn location(&self, rank: usize) -> &BaseBNumber {
        &self.locations[rank]
    }

    pub fn transform(&self, rank: usize) -> &Transform {
        &self.transforms[rank]
    }

    pub fn rank_of_location(&self, digits: &[u8]) -> usize {
        let radix = self.base.radix() as usize;
        let idx = digits.iter().fold(0usize, |acc, &d| acc * radix + d as usize);
        self.loc_to_rank[idx] as usize
    }

    fn check_point(&self, p: &Point) -> Result<()> {
        if p.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: p.dim() });
        }
        if p.base() != self.base {
            return Err(Error::BaseMismatch);
        }
        Ok(())
    }

    /// True iff `p` precedes `q` along the curve, under the ordering that
    /// assigns every point to the subregion on its upper-right side. Equal
    /// points (at the given digit precision) yield `false`.
    pub fn compare(&self, p: &Point, q: &Point) -> Result<bool> {
        self.check_point(p)?;
        self.check_point(q)?;
        let d = self.dim;
        let radix = self.base.radix();
        let levels = p.max_len().max(q.max_len());
        let mut state = ComparatorState::new(d);
        let mut cp = vec![0u8; d];
        let mut cq = vec![0u8; d];
        for level in 0..levels {
            for i in 0..d {
                let src = state.source(i);
                let dp = p.coord(src).digit_at(level);
                let dq = q.coord(src).digit_at(level);
                cp[i] = state.transformed(src, dp, radix);
                cq[i] = state.transformed(src, dq, radix);
            }
            let rp = self.rank_of_location(&cp);
            let rq = self.rank_of_location(&cq);
            if rp != rq {
                return Ok(rp < rq);
            }
            state.update(&self.transforms[rp]);
        }
        Ok(false)
    }

    /// The ranks of the nested cells containing `p`, down to `depth` levels.
    pub fn rank_path(&self, p: &Point, depth: usize) -> Result<CellPath> {
        self.check_point(p)?;
        let d = self.dim;
        let radix = self.base.radix();
        let mut state = ComparatorState::new(d);
        let mut loc = vec![0u8; d];
        let mut ranks = Vec::with_capacity(depth);
        for level in 0..depth {
            for i in 0..d {
                let src = state.source(i);
                loc[i] = state.transformed(src, p.coord(src).digit_at(level), radix);
            }
            let r = self.rank_of_location(&loc);
            ranks.push(r);
            state.update(&self.transforms[r]);
        }
        Ok(CellPath::new(ranks))
    }

    /// All `b^(depth*d)` grid cells in curve order, by literal recursive
    /// application of the subregion transformations. This is the test oracle
    /// for every comparator in the crate.
    pub fn expand_order(&self, depth: usize) -> Result<Vec<Vec<u32>>> {
        Ok(self.expand_with_transforms(depth)?.0)
    }

    /// Expansion plus the accumulated transform of each cell.
    pub fn expand_with_transforms(&self, depth: usize) -> Result<(Vec<Vec<u32>>, Vec<Transform>)> {
        let radix = self.base.radix() as u128;
        let cells = radix.pow((depth * self.dim) as u32);
        if cells > MAX_EXPANSION_CELLS {
            return Err(Error::DepthTooLarge { cells, limit: MAX_EXPANSION_CELLS });
        }
        let mut order: Vec<Vec<u32>> = vec![vec![0; self.dim]];
        let mut trans: Vec<Transform> = vec![Transform::identity(self.dim)];
        for level in 1..=depth {
            let side = (self.base.radix() as u32).pow(level as u32 - 1);
            let mut next_order = Vec::with_capacity(order.len() * self.rank_count());
            let mut next_trans = Vec::with_capacity(trans.len() * self.rank_count());
            for r in 0..self.rank_count() {
                let t = &self.transforms[r];
                let loc = &self.locations[r];
                for (cell, acc) in order.iter().zip(&trans) {
                    let mut img = t.apply_cell(cell, side);
                    for (i, v) in img.iter_mut().enumerate() {
                        *v += loc.digit(i) as u32 * side;
                    }
                    next_order.push(img);
                    next_trans.push(t.compose(acc));
                }
            }
            order = next_order;
            trans = next_trans;
        }
        Ok((order, trans))
    }

    /// A point strictly inside the given grid cell with finite digits: the
    /// cell corner digits followed by one extra digit 1 per coordinate.
    /// (Exact ternary cell centres have no finite digit expansion.)
    pub fn cell_probe_point(&self, cell: &[u32], depth: usize) -> Point {
        let radix = self.base.radix() as u32;
        let coords = cell
            .iter()
            .map(|&g| {
                let mut digits = vec![0u8; depth + 1];
                let mut rest = g;
                for slot in digits[..depth].iter_mut().rev() {
                    *slot = (rest % radix) as u8;
                    rest /= radix;
                }
                digits[depth] = 1;
                crate::digits::DigitString::new(self.base, digits).expect("valid digits")
            })
            .collect();
        Point::new(coords).expect("non-empty")
    }

    /// Entrance and exit gates as cube corners. The entrance is the unique
    /// fixed point of the first subregion's transformation, the exit that of
    /// the last; a fixed point that is not a cube corner is rejected.
    pub fn gates(&self) -> Result<(Vec<u8>, Vec<u8>)> {
        let entrance = self.corner_fixed_point(0)?;
        let exit = self.corner_fixed_point(self.rank_count() - 1)?;
        Ok((entrance, exit))
    }

    fn corner_fixed_point(&self, rank: usize) -> Result<Vec<u8>> {
        if self.dim > 24 {
            return Err(Error::GateNotCorner("dimension too large for corner probe".into()));
        }
        let radix = self.base.radix();
        let loc = &self.locations[rank];
        let t = &self.transforms[rank];
        for bits in 0u32..(1 << self.dim) {
            let corner: Vec<u8> = (0..self.dim).map(|i| ((bits >> i) & 1) as u8).collect();
            let fixed = (0..self.dim).all(|i| {
                let fed = corner[t.perm().forward()[i]] ^ u8::from(t.flip()[i]);
                radix * corner[i] == loc.digit(i) + fed
            });
            if fixed {
                return Ok(corner);
            }
        }
        Err(Error::GateNotCorner(format!(
            "subregion {rank} does not pin the recursion to a corner"
        )))
    }

    /// Entry and exit gates of subregion `r`, as numerators over `base`.
    pub fn subregion_gates(&self, rank: usize) -> Result<(Vec<u8>, Vec<u8>)> {
        let (entrance, exit) = self.gates()?;
        Ok((self.gate_image(rank, &entrance), self.gate_image(rank, &exit)))
    }

    fn gate_image(&self, rank: usize, gate: &[u8]) -> Vec<u8> {
        let loc = &self.locations[rank];
        let t = &self.transforms[rank];
        (0..self.dim)
            .map(|i| loc.digit(i) + (gate[t.perm().forward()[i]] ^ u8::from(t.flip()[i])))
            .collect()
    }

    /// The definition table as TSV: one row per rank with location,
    /// permutation, inverse, reflections and the subregion exit gate.
    pub fn emit_table(&self) -> Result<String> {
        if self.dim > 10 {
            return Err(Error::Unsupported(
                "definition tables use single-character digits (d <= 10)".into(),
            ));
        }
        let (_, exit) = self.gates()?;
        let radix = self.base.radix();
        let mut out = String::from("rank\tloc\tperm\tinv\trefl\texit\n");
        for r in 0..self.rank_count() {
            let rank = BaseBNumber::from_index(self.base, self.dim, r);
            let t = &self.transforms[r];
            let refl: String =
                t.flip().iter().map(|&f| if f { '1' } else { '0' }).collect();
            let inv: String = t.perm().inverse().iter().map(|&v| char::from(b'0' + v as u8)).collect();
            let gate = self.gate_image(r, &exit);
            let gate_s: Vec<String> = gate.iter().map(|n| n.to_string()).collect();
            out.push_str(&format!(
                "{rank}\t{loc}\t{perm}\t{inv}\t{refl}\t1/{radix}({gates})\n",
                loc = self.locations[r],
                perm = t.perm(),
                gates = gate_s.join(",")
            ));
        }
        Ok(out)
    }
}

/// The lazily composed transformation carried across recursion levels of a
/// comparison: which source coordinate feeds each logical axis and which
/// columns of the composed transform carry a minus.
#[derive(Debug, Clone)]
pub struct ComparatorState {
    perm: Vec<usize>,
    alt: Vec<usize>,
    reflected: Vec<bool>,
}

impl ComparatorState {
    pub fn new(d: usize) -> Self {
        ComparatorState {
            perm: (0..d).collect(),
            alt: vec![0; d],
            reflected: vec![false; d],
        }
    }

    /// The source coordinate feeding logical axis `i`.
    pub fn source(&self, i: usize) -> usize {
        self.perm[i]
    }

    /// Applies the pending reflection of a source coordinate to one digit.
    pub fn transformed(&self, src: usize, digit: u8, radix: u8) -> u8 {
        if self.reflected[src] {
            radix - 1 - digit
        } else {
            digit
        }
    }

    /// Folds the subregion transformation into the carried state.
    pub fn update(&mut self, t: &Transform) {
        for i in 0..self.perm.len() {
            let j = t.perm().inverse()[i];
            self.alt[i] = self.perm[j];
            if t.flip()[j] {
                self.reflected[self.alt[i]] = !self.reflected[self.alt[i]];
            }
        }
        std::mem::swap(&mut self.perm, &mut self.alt);
    }
}

/// A per-level digit-pair source: yields the next base-b digit of two points
/// being compared along the same coordinate.
pub trait PairSource {
    fn next_pair(&mut self) -> (u8, u8);
}

/// Runs the generic comparison operator with coordinates drawn from digit
/// sources instead of materialized points. Used by the composed-curve
/// comparator, which feeds rank digits of inner comparators into a 2D driver.
pub fn compare_sources<S: PairSource>(
    spec: &CurveSpec,
    sources: &mut [S],
    levels: usize,
) -> Result<bool> {
    if sources.len() != spec.dim() {
        return Err(Error::DimensionMismatch { expected: spec.dim(), got: sources.len() });
    }
    let d = spec.dim();
    let radix = spec.base().radix();
    let mut state = ComparatorState::new(d);
    let mut cp = vec![0u8; d];
    let mut cq = vec![0u8; d];
    for _ in 0..levels {
        for i in 0..d {
            let src = state.source(i);
            let (dp, dq) = sources[src].next_pair();
            cp[i] = state.transformed(src, dp, radix);
            cq[i] = state.transformed(src, dq, radix);
        }
        let rp = spec.rank_of_location(&cp);
        let rq = spec.rank_of_location(&cq);
        if rp != rq {
            return Ok(rp < rq);
        }
        state.update(&spec.transforms[rp]);
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digits::DigitString;

    fn perm(s: &str) -> Permutation {
        Permutation::new(s.bytes().map(|b| (b - b'0') as usize).collect()).unwrap()
    }

    #[test]
    fn permutation_inverse_round_trip() {
        let p = perm("30142");
        for i in 0..5 {
            assert_eq!(p.inverse()[p.forward()[i]], i);
        }
        assert_eq!(Permutation::from_inverse(p.inverse().to_vec()).unwrap(), p);
    }

    #[test]
    fn permutation_rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3]).is_err());
    }

    // The renumbering formula: survivors larger than the removed element
    // decrement. (The worked example printed in the source text, "2041", is
    // not a permutation of {0..3}; the formula gives 2031.)
    #[test]
    fn permutation_take_out() {
        let p = perm("30142");
        assert_eq!(p.take_out(2).unwrap(), perm("2031"));
        assert_eq!(perm("10").take_out(0).unwrap(), perm("0"));
    }

    #[test]
    fn transform_compose_and_order() {
        let swap = Transform::new(perm("10"), vec![false, false]).unwrap();
        assert_eq!(swap.order(), 2);
        let quarter = Transform::new(perm("10"), vec![true, false]).unwrap();
        // 90-degree rotation of the square has order 4
        assert_eq!(quarter.order(), 4);
        assert!(swap.compose(&swap).is_identity());
    }

    #[test]
    fn transform_apply_cell() {
        let t = Transform::new(perm("10"), vec![true, false]).unwrap();
        // out0 = side-1 - cell1, out1 = cell0
        assert_eq!(t.apply_cell(&[2, 0], 3), vec![2, 2]);
    }

    fn classic_hilbert() -> CurveSpec {
        // locations 00,01,11,10 with swap/id/id/swap and reflections only in
        // the last quadrant
        let rows = vec![
            (num("00"), Transform::new(perm("10"), vec![false, false]).unwrap()),
            (num("01"), Transform::new(perm("01"), vec![false, false]).unwrap()),
            (num("11"), Transform::new(perm("01"), vec![false, false]).unwrap()),
            (num("10"), Transform::new(perm("10"), vec![true, true]).unwrap()),
        ];
        CurveSpec::new(2, Base::Binary, rows).unwrap()
    }

    fn num(s: &str) -> BaseBNumber {
        BaseBNumber::new(Base::Binary, s.bytes().map(|b| b - b'0').collect()).unwrap()
    }

    fn pt(text: &str) -> Point {
        Point::parse(text, Base::Binary, 8).unwrap()
    }

    #[test]
    fn hilbert_level1_order() {
        let spec = classic_hilbert();
        let cells = spec.expand_order(1).unwrap();
        assert_eq!(cells, vec![vec![0, 0], vec![0, 1], vec![1, 1], vec![1, 0]]);
    }

    #[test]
    fn hilbert_level2_order_is_vertex_continuous_classic() {
        let spec = classic_hilbert();
        let cells = spec.expand_order(2).unwrap();
        assert_eq!(cells.len(), 16);
        assert_eq!(cells[0], vec![0, 0]);
        assert_eq!(cells[1], vec![1, 0]);
        assert_eq!(cells[15], vec![3, 0]);
    }

    #[test]
    fn compare_level1_quadrants() {
        let spec = classic_hilbert();
        // lower-left before upper-left
        assert!(spec.compare(&pt("0.01,0.01"), &pt("0.01,0.11")).unwrap());
        // equality yields false
        assert!(!spec.compare(&pt("0.01,0.01"), &pt("0.01,0.01")).unwrap());
    }

    #[test]
    fn compare_agrees_with_expansion() {
        let spec = classic_hilbert();
        for depth in 1..=3 {
            let cells = spec.expand_order(depth).unwrap();
            let pts: Vec<Point> =
                cells.iter().map(|c| spec.cell_probe_point(c, depth)).collect();
            for i in 0..pts.len() {
                for j in 0..pts.len() {
                    assert_eq!(
                        spec.compare(&pts[i], &pts[j]).unwrap(),
                        i < j,
                        "depth {depth} cells {i} {j}"
                    );
                }
            }
        }
    }

    #[test]
    fn rank_path_examples() {
        let spec = classic_hilbert();
        let origin = Point::new(vec![
            DigitString::empty(Base::Binary),
            DigitString::empty(Base::Binary),
        ])
        .unwrap();
        assert_eq!(spec.rank_path(&origin, 3).unwrap().ranks(), &[0, 0, 0]);
        // (0.75, 0.25) lies in the last-visited quadrant
        assert_eq!(spec.rank_path(&pt("0.11,0.01"), 1).unwrap().ranks(), &[3]);
        assert_eq!(spec.rank_path(&pt("0.11,0.01"), 0).unwrap().depth(), 0);
    }

    #[test]
    fn rank_path_prefix_consistency() {
        let spec = classic_hilbert();
        let p = pt("0.1101,0.0111");
        for depth in 0..4 {
            let shorter = spec.rank_path(&p, depth).unwrap();
            let longer = spec.rank_path(&p, depth + 1).unwrap();
            assert!(shorter.is_prefix_of(&longer));
        }
    }

    #[test]
    fn rank_path_matches_comparison() {
        let spec = classic_hilbert();
        let p = pt("0.101,0.011");
        let q = pt("0.100,0.010");
        let rp = spec.rank_path(&p, 4).unwrap();
        let rq = spec.rank_path(&q, 4).unwrap();
        assert_eq!(spec.compare(&p, &q).unwrap(), rp.ranks() < rq.ranks());
    }

    #[test]
    fn gates_of_classic_hilbert() {
        let spec = classic_hilbert();
        let (entrance, exit) = spec.gates().unwrap();
        assert_eq!(entrance, vec![0, 0]);
        assert_eq!(exit, vec![1, 0]);
        // gate between the first two quadrants sits at (0, 1/2)
        let (_, first_exit) = spec.subregion_gates(0).unwrap();
        assert_eq!(first_exit, vec![0, 1]);
    }

    #[test]
    fn gate_rejects_non_corner() {
        // a spec whose first subregion rotates: recursion spirals, the fixed
        // point is interior, so the corner probe must fail
        let rows = vec![
            (num("00"), Transform::new(perm("10"), vec![true, false]).unwrap()),
            (num("01"), Transform::identity(2)),
            (num("11"), Transform::identity(2)),
            (num("10"), Transform::identity(2)),
        ];
        let spec = CurveSpec::new(2, Base::Binary, rows).unwrap();
        assert!(matches!(spec.gates(), Err(Error::GateNotCorner(_))));
    }

    #[test]
    fn transform_maps_unit_cube_onto_subregion() {
        let spec = classic_hilbert();
        for r in 0..spec.rank_count() {
            let t = spec.transform(r);
            let loc = spec.location(r);
            let mut images: Vec<Vec<u8>> = (0..4u32)
                .map(|bits| {
                    let corner: Vec<u8> = (0..2).map(|i| ((bits >> i) & 1) as u8).collect();
                    let img = t.apply_corner(&corner);
                    (0..2).map(|i| loc.digit(i) + img[i]).collect()
                })
                .collect();
            images.sort();
            let mut expected: Vec<Vec<u8>> = (0..4u32)
                .map(|bits| {
                    (0..2).map(|i| loc.digit(i) + ((bits >> i) & 1) as u8).collect()
                })
                .collect();
            expected.sort();
            assert_eq!(images, expected, "rank {r}");
        }
    }

    #[test]
    fn expansion_guard_trips() {
        let spec = classic_hilbert();
        assert!(matches!(
            spec.expand_order(14),
            Err(Error::DepthTooLarge { .. })
        ));
    }

    #[test]
    fn spec_rejects_duplicate_locations() {
        let rows = vec![
            (num("00"), Transform::identity(2)),
            (num("00"), Transform::identity(2)),
            (num("11"), Transform::identity(2)),
            (num("10"), Transform::identity(2)),
        ];
        assert!(CurveSpec::new(2, Base::Binary, rows).is_err());
    }

    #[test]
    fn emit_table_classic_hilbert() {
        let spec = classic_hilbert();
        let table = spec.emit_table().unwrap();
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[0], "rank\tloc\tperm\tinv\trefl\texit");
        assert_eq!(lines[1], "00\t00\t10\t10\t00\t1/2(0,1)");
        assert_eq!(lines[4], "11\t10\t10\t10\t11\t1/2(2,0)");
    }
}
