//! Curves of doubled dimension that reproduce a base curve's order on the
//! half-fixed subspace (last coordinates zero) and on the diagonal subspace
//! (both halves equal). The construction runs the base curve's comparator on
//! each half and feeds the resulting rank digits into a monotone 2D driver:
//! the Hilbert curve for base 2, the Meander-pattern curve for base 3.
//!
//! For a symmetric base curve the composed curve is itself an
//! order-preserving mono-curve and its explicit definition table can be
//! derived; for asymmetric bases only the streaming comparator applies.

use crate::curvespec::{
    compare_sources, CurveSpec, PairSource, Permutation, Transform,
};
use crate::digits::{Base, DigitString, Point};
use crate::error::{Error, Result};
use crate::graycode::BaseBNumber;
use crate::hilbert::BinaryMachine;
use crate::ternary::TernaryMachine;
use crate::verify::{check_monotone, check_vertex_continuity, Segment};
use crate::{BinaryFamily, Family};
use std::sync::OnceLock;

/// The 2D driver curve: monotone along the bottom edge and the ascending
/// diagonal, which is exactly what the composition needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Driver {
    H2,
    H3,
}

impl Driver {
    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "h2" => Ok(Driver::H2),
            "h3" => Ok(Driver::H3),
            _ => Err(Error::Unsupported(format!("unknown driver '{tag}'"))),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Driver::H2 => "h2",
            Driver::H3 => "h3",
        }
    }

    pub fn base(&self) -> Base {
        match self {
            Driver::H2 => Base::Binary,
            Driver::H3 => Base::Ternary,
        }
    }

    /// The driver for a given digit base.
    pub fn for_base(base: Base) -> Driver {
        match base {
            Base::Binary => Driver::H2,
            Base::Ternary => Driver::H3,
        }
    }

    pub fn spec(&self) -> Result<&'static CurveSpec> {
        match self {
            Driver::H2 => h2_spec(),
            Driver::H3 => h3_spec(),
        }
    }
}

static H2_SPEC: OnceLock<std::result::Result<CurveSpec, String>> = OnceLock::new();
static H3_SPEC: OnceLock<std::result::Result<CurveSpec, String>> = OnceLock::new();

/// The classic 2D Hilbert curve, verified monotone along the bottom edge and
/// the ascending diagonal before use.
pub fn h2_spec() -> Result<&'static CurveSpec> {
    H2_SPEC
        .get_or_init(|| {
            let spec = BinaryFamily::Harmonious.spec(2).map_err(|e| e.to_string())?;
            validate_driver(&spec).map_err(|e| e.to_string())?;
            Ok(spec)
        })
        .as_ref()
        .map_err(|msg| Error::InvalidSpec(msg.clone()))
}

// rank -> (location, axis swap, reflections); derived from the Meander
// pattern with entrance (0,0) and validated below rather than trusted
const H3_RULE: [([u8; 2], bool, [bool; 2]); 9] = [
    ([0, 0], false, [false, false]),
    ([1, 0], true, [false, false]),
    ([1, 1], true, [false, false]),
    ([0, 1], false, [true, true]),
    ([0, 2], false, [false, false]),
    ([1, 2], false, [false, false]),
    ([2, 2], false, [false, false]),
    ([2, 1], true, [true, true]),
    ([2, 0], true, [true, true]),
];

/// The 3-regular Meander-pattern mono-curve: entrance at the origin,
/// monotone along the bottom edge and the ascending diagonal. The rule table
/// is machine-verified at construction.
pub fn h3_spec() -> Result<&'static CurveSpec> {
    H3_SPEC
        .get_or_init(|| {
            let rows = H3_RULE
                .iter()
                .map(|&(loc, swap, flip)| {
                    let perm = if swap {
                        Permutation::reversal(2)
                    } else {
                        Permutation::identity(2)
                    };
                    Ok((
                        BaseBNumber::new(Base::Ternary, loc.to_vec())?,
                        Transform::new(perm, flip.to_vec())?,
                    ))
                })
                .collect::<Result<Vec<_>>>()
                .map_err(|e| e.to_string())?;
            let spec = CurveSpec::new(2, Base::Ternary, rows).map_err(|e| e.to_string())?;
            validate_driver(&spec).map_err(|e| e.to_string())?;
            Ok(spec)
        })
        .as_ref()
        .map_err(|msg| Error::InvalidSpec(msg.clone()))
}

fn validate_driver(spec: &CurveSpec) -> Result<()> {
    let (entrance, _) = spec.gates()?;
    if entrance != vec![0, 0] {
        return Err(Error::InvalidSpec("driver entrance gate must be the origin".into()));
    }
    for segment in [Segment::BOTTOM, Segment::DIAGONAL] {
        if let Some(w) = check_monotone(spec, segment, 3)? {
            return Err(Error::InvalidSpec(format!(
                "driver fails {segment} monotonicity at cell ({},{})",
                w.cell.0, w.cell.1
            )));
        }
    }
    if check_vertex_continuity(spec, 3)?.is_some() {
        return Err(Error::InvalidSpec("driver is not vertex-continuous".into()));
    }
    Ok(())
}

/// A resumable comparator over one point pair: each call yields the next
/// rank digit of both points' positions along the inner curve. Digits are
/// reliable up to and including the first divergence, which is all the outer
/// comparator ever consumes.
pub struct StreamingComparator {
    machine: Machine,
    p: Point,
    q: Point,
    level_len: usize,
    emitted: usize,
    budget: usize,
}

enum Machine {
    Ternary(TernaryMachine),
    Binary(BinaryMachine),
}

impl StreamingComparator {
    pub fn new(inner: Family, p: Point, q: Point) -> Result<Self> {
        if p.dim() != q.dim() {
            return Err(Error::DimensionMismatch { expected: p.dim(), got: q.dim() });
        }
        if p.base() != inner.base() || q.base() != inner.base() {
            return Err(Error::BaseMismatch);
        }
        let d = p.dim();
        let machine = match inner {
            Family::Ternary(f) => Machine::Ternary(TernaryMachine::new(f, d)),
            Family::Binary(f) => Machine::Binary(BinaryMachine::new(f, d)),
        };
        let budget = d * p.max_len().max(q.max_len());
        Ok(StreamingComparator { machine, p, q, level_len: d, emitted: 0, budget })
    }

    /// Number of rank digits backed by actual coordinate digits; beyond this
    /// the stream continues on zero padding.
    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn exhausted(&self) -> bool {
        self.emitted >= self.budget
    }
}

impl PairSource for StreamingComparator {
    fn next_pair(&mut self) -> (u8, u8) {
        let level = self.emitted / self.level_len;
        self.emitted += 1;
        match &mut self.machine {
            Machine::Ternary(m) => {
                let src = m.source();
                m.step(self.p.coord(src).digit_at(level), self.q.coord(src).digit_at(level))
            }
            Machine::Binary(m) => {
                let src = m.source();
                m.step(self.p.coord(src).digit_at(level), self.q.coord(src).digit_at(level))
            }
        }
    }
}

/// True iff `p` precedes `q` along the composed curve `inner ∘ driver`: the
/// two halves of each point are compared along the inner curve and the rank
/// digit streams are ordered by the 2D driver.
pub fn compare_composed(p: &Point, q: &Point, inner: Family, outer: Driver) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), got: q.dim() });
    }
    if p.dim() % 2 != 0 || p.dim() == 0 {
        return Err(Error::OddDimension(p.dim()));
    }
    if inner.base() != outer.base() || p.base() != inner.base() {
        return Err(Error::BaseMismatch);
    }
    let left = StreamingComparator::new(inner, p.half(false)?, q.half(false)?)?;
    let right = StreamingComparator::new(inner, p.half(true)?, q.half(true)?)?;
    let levels = left.budget().max(right.budget());
    let mut sources = [left, right];
    compare_sources(outer.spec()?, &mut sources, levels)
}

/// The composed curve's cell order at the given depth, straight from the
/// definition: the driver's refined cells, with each driver coordinate
/// replaced by the inner curve's cell of that rank. Independent of the
/// comparator and of the derived definition table.
pub fn composed_expand_order(
    inner: &CurveSpec,
    outer: Driver,
    depth: usize,
) -> Result<Vec<Vec<u32>>> {
    let driver = outer.spec()?;
    if driver.base() != inner.base() {
        return Err(Error::BaseMismatch);
    }
    let inner_cells = inner.expand_order(depth)?;
    let driver_cells = driver.expand_order(inner.dim() * depth)?;
    Ok(driver_cells
        .into_iter()
        .map(|cell| {
            let mut coords = inner_cells[cell[0] as usize].clone();
            coords.extend_from_slice(&inner_cells[cell[1] as usize]);
            coords
        })
        .collect())
}

/// Derives the explicit definition table of the composed curve for a
/// symmetric inner curve. `reversal_witness` must map the inner curve onto
/// its own reversal (`f(1-t) = ρ(f(t))`); it is machine-verified before use.
pub fn derive_composed_spec(inner: &CurveSpec, reversal_witness: &Transform) -> Result<CurveSpec> {
    verify_reversal_witness(inner, reversal_witness)?;
    let driver = Driver::for_base(inner.base()).spec()?;
    let d = inner.dim();
    let (cells, transforms) = driver.expand_with_transforms(d)?;
    let side = (inner.base().radix() as u32).pow(d as u32);
    let mut rows = Vec::with_capacity(cells.len());
    for (cell, t2) in cells.iter().zip(&transforms) {
        debug_assert!(cell[0] < side && cell[1] < side);
        let mut loc = Vec::with_capacity(2 * d);
        let mut perm = Vec::with_capacity(2 * d);
        let mut flip = Vec::with_capacity(2 * d);
        for k in 0..2 {
            let rank = cell[k] as usize;
            loc.extend_from_slice(inner.location(rank).digits());
            let mut t = inner.transform(rank).clone();
            if t2.flip()[k] {
                t = t.compose(reversal_witness);
            }
            let half_shift = d * t2.perm().forward()[k];
            for i in 0..d {
                perm.push(t.perm().forward()[i] + half_shift);
                flip.push(t.flip()[i]);
            }
        }
        rows.push((
            BaseBNumber::new(inner.base(), loc)?,
            Transform::new(Permutation::new(perm)?, flip)?,
        ));
    }
    CurveSpec::new(2 * d, inner.base(), rows)
}

/// Checks that reversing the inner curve's cell order equals applying the
/// witness transform to every cell, at refinement depths 1 and 2.
fn verify_reversal_witness(inner: &CurveSpec, witness: &Transform) -> Result<()> {
    if witness.dim() != inner.dim() {
        return Err(Error::SymmetryWitness(format!(
            "witness dimension {} does not match curve dimension {}",
            witness.dim(),
            inner.dim()
        )));
    }
    for depth in 1..=2 {
        let cells = inner.expand_order(depth)?;
        let side = (inner.base().radix() as u32).pow(depth as u32);
        let n = cells.len();
        for (k, cell) in cells.iter().enumerate() {
            let image = witness.apply_cell(cell, side);
            if image != cells[n - 1 - k] {
                return Err(Error::SymmetryWitness(format!(
                    "cell {k} at depth {depth}: reversal visits {:?}, witness image is {image:?}",
                    cells[n - 1 - k]
                )));
            }
        }
    }
    Ok(())
}

/// An axis-aligned box given by per-axis minima and maxima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rectangle {
    mins: Vec<DigitString>,
    maxs: Vec<DigitString>,
}

impl Rectangle {
    pub fn new(mins: Vec<DigitString>, maxs: Vec<DigitString>) -> Result<Self> {
        if mins.is_empty() || mins.len() != maxs.len() {
            return Err(Error::DimensionMismatch { expected: mins.len(), got: maxs.len() });
        }
        let base = mins[0].base();
        for (lo, hi) in mins.iter().zip(&maxs) {
            if lo.base() != base || hi.base() != base {
                return Err(Error::BaseMismatch);
            }
            if lo.value_cmp(hi) == std::cmp::Ordering::Greater {
                return Err(Error::InvalidSpec(format!("rectangle has min {lo} > max {hi}")));
            }
        }
        Ok(Rectangle { mins, maxs })
    }

    /// Parses `min0 min1 ... max0 max1 ...`, whitespace-separated, all
    /// coordinates in `[0,1)`.
    pub fn parse(line: &str, base: Base, precision: usize) -> Result<Self> {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.is_empty() || parts.len() % 2 != 0 {
            return Err(Error::MalformedCoordinate(line.into()));
        }
        let coords = parts
            .iter()
            .map(|part| crate::digits::parse_unit_coord(part, base, precision))
            .collect::<Result<Vec<_>>>()?;
        let d = coords.len() / 2;
        Rectangle::new(coords[..d].to_vec(), coords[d..].to_vec())
    }

    pub fn dim(&self) -> usize {
        self.mins.len()
    }

    pub fn base(&self) -> Base {
        self.mins[0].base()
    }
}

/// How rectangles are encoded as points of doubled dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RectMode {
    /// `(min0, ..., max0, ...)`: degenerate rectangles become diagonal points.
    Xy,
    /// `(centre0, ..., extent0, ...)`: degenerate rectangles become
    /// half-fixed points.
    Cd,
}

impl RectMode {
    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "xy" => Ok(RectMode::Xy),
            "cd" => Ok(RectMode::Cd),
            _ => Err(Error::Unsupported(format!("unknown rectangle mode '{tag}'"))),
        }
    }
}

/// Encodes a rectangle as a `2d`-dimensional point. Centre coordinates are
/// exact in base 2 (one extra digit); in base 3 they are truncated to
/// `precision` digits.
pub fn rect_to_point(rect: &Rectangle, mode: RectMode, precision: usize) -> Result<Point> {
    let coords = match mode {
        RectMode::Xy => {
            let mut coords = rect.mins.clone();
            coords.extend(rect.maxs.iter().cloned());
            coords
        }
        RectMode::Cd => {
            let mut coords: Vec<DigitString> = rect
                .mins
                .iter()
                .zip(&rect.maxs)
                .map(|(lo, hi)| midpoint(lo, hi, precision))
                .collect();
            coords.extend(rect.mins.iter().zip(&rect.maxs).map(|(lo, hi)| subtract(hi, lo)));
            coords
        }
    };
    Point::new(coords)
}

/// `(a + b) / 2` on fractional digit strings.
fn midpoint(a: &DigitString, b: &DigitString, precision: usize) -> DigitString {
    let radix = a.base().radix();
    let len = a.len().max(b.len());
    // add, least significant first
    let mut sum = vec![0u8; len];
    let mut carry = 0u8;
    for k in (0..len).rev() {
        let s = a.digit_at(k) + b.digit_at(k) + carry;
        sum[k] = s % radix;
        carry = s / radix;
    }
    // divide carry.sum by two
    let limit = if radix == 2 { len + 1 } else { precision.max(len) };
    let mut out = Vec::with_capacity(limit);
    let mut rem = carry;
    let mut k = 0;
    while out.len() < limit && (rem > 0 || k < len) {
        let cur = rem * radix + if k < len { sum[k] } else { 0 };
        out.push(cur / 2);
        rem = cur % 2;
        k += 1;
    }
    DigitString::new(a.base(), out).expect("digits stay in range")
}

/// `a - b` on fractional digit strings, requiring `a >= b`.
fn subtract(a: &DigitString, b: &DigitString) -> DigitString {
    let radix = a.base().radix();
    let len = a.len().max(b.len());
    let mut out = vec![0u8; len];
    let mut borrow = 0i16;
    for k in (0..len).rev() {
        let mut v = a.digit_at(k) as i16 - b.digit_at(k) as i16 - borrow;
        if v < 0 {
            v += radix as i16;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[k] = v as u8;
    }
    debug_assert_eq!(borrow, 0, "subtract requires a >= b");
    DigitString::new(a.base(), out).expect("digits stay in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::TernaryFamily;

    fn pt(text: &str, base: Base) -> Point {
        Point::parse(text, base, 12).unwrap()
    }

    #[test]
    fn h2_level1_order() {
        let spec = h2_spec().unwrap();
        assert_eq!(
            spec.expand_order(1).unwrap(),
            vec![vec![0, 0], vec![0, 1], vec![1, 1], vec![1, 0]]
        );
    }

    #[test]
    fn h2_is_monotone_on_all_five_segments() {
        let spec = h2_spec().unwrap();
        let segments = [
            Segment::LEFT,
            Segment::TOP,
            Segment::RIGHT_DOWNWARD,
            Segment::BOTTOM,
            Segment::DIAGONAL,
        ];
        for segment in segments {
            for depth in 1..=3 {
                assert!(
                    check_monotone(spec, segment, depth).unwrap().is_none(),
                    "{segment} depth {depth}"
                );
            }
        }
    }

    #[test]
    fn h3_validates_and_has_expected_gates() {
        let spec = h3_spec().unwrap();
        let (entrance, exit) = spec.gates().unwrap();
        assert_eq!(entrance, vec![0, 0]);
        assert_eq!(exit, vec![1, 0]);
        assert_eq!(spec.expand_order(1).unwrap().len(), 9);
    }

    #[test]
    fn h3_diagonal_cells_ordered_at_depth2() {
        let spec = h3_spec().unwrap();
        let cells = spec.expand_order(2).unwrap();
        let diag_positions: Vec<usize> = (0..9u32)
            .map(|g| cells.iter().position(|c| c == &vec![g, g]).unwrap())
            .collect();
        for w in diag_positions.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn halffix_law_small() {
        // order of (a|0) equals the inner order of a
        let inner = Family::Binary(BinaryFamily::Harmonious);
        let pairs = [
            ("0.01,0.11", "0.11,0.01"),
            ("0.0,0.1", "0.1,0.0"),
            ("0.101,0.001", "0.011,0.111"),
        ];
        for (a, b) in pairs {
            let pa = pt(a, Base::Binary);
            let pb = pt(b, Base::Binary);
            let zero = pt("0,0", Base::Binary);
            let want = BinaryFamily::Harmonious.compare(&pa, &pb).unwrap();
            let got = compare_composed(
                &pa.concat(&zero).unwrap(),
                &pb.concat(&zero).unwrap(),
                inner,
                Driver::H2,
            )
            .unwrap();
            assert_eq!(got, want, "{a} vs {b}");
        }
    }

    #[test]
    fn diagonal_law_small() {
        let inner = Family::Ternary(TernaryFamily::Meurthe);
        let pairs = [("0.1,0.2", "0.2,0.1"), ("0.01,0.21", "0.22,0.0"), ("0.2,0.2", "0.21,0.2")];
        for (a, b) in pairs {
            let pa = pt(a, Base::Ternary);
            let pb = pt(b, Base::Ternary);
            let want = TernaryFamily::Meurthe.compare(&pa, &pb).unwrap();
            let got =
                compare_composed(&pa.diaglift(), &pb.diaglift(), inner, Driver::H3).unwrap();
            assert_eq!(got, want, "{a} vs {b}");
        }
    }

    #[test]
    fn composed_rejects_odd_dimension() {
        let p = pt("0.1,0.0,0.1", Base::Binary);
        assert!(matches!(
            compare_composed(&p, &p, Family::Binary(BinaryFamily::Harmonious), Driver::H2),
            Err(Error::OddDimension(3))
        ));
    }

    #[test]
    fn derived_spec_matches_composition_table_rows() {
        let inner = h2_spec().unwrap();
        let spec = derive_composed_spec(inner, &Transform::mirror(2, 0)).unwrap();
        assert_eq!(spec.rank_count(), 16);
        // rank 0000
        assert_eq!(spec.location(0).to_string(), "0000");
        assert_eq!(spec.transform(0).perm().to_string(), "1032");
        assert_eq!(spec.transform(0).flip(), &[false; 4]);
        // rank 0011
        assert_eq!(spec.location(3).to_string(), "0001");
        assert_eq!(spec.transform(3).perm().to_string(), "1023");
        assert_eq!(spec.transform(3).flip(), &[false, true, true, false]);
        // rank 1111
        assert_eq!(spec.location(15).to_string(), "1000");
        assert_eq!(spec.transform(15).perm().to_string(), "1032");
        assert_eq!(spec.transform(15).flip(), &[true, true, false, false]);
    }

    #[test]
    fn derived_spec_agrees_with_streaming_comparator() {
        let inner = h2_spec().unwrap();
        let derived = derive_composed_spec(inner, &Transform::mirror(2, 0)).unwrap();
        let cells = derived.expand_order(2).unwrap();
        let points: Vec<Point> =
            cells.iter().map(|c| derived.cell_probe_point(c, 2)).collect();
        for i in (0..points.len()).step_by(7) {
            for j in (0..points.len()).step_by(5) {
                let want = derived.compare(&points[i], &points[j]).unwrap();
                let got = compare_composed(
                    &points[i],
                    &points[j],
                    Family::Binary(BinaryFamily::Harmonious),
                    Driver::H2,
                )
                .unwrap();
                assert_eq!(got, want, "{i} {j}");
            }
        }
    }

    #[test]
    fn composed_oracle_matches_derived_expansion() {
        let inner = h2_spec().unwrap();
        let derived = derive_composed_spec(inner, &Transform::mirror(2, 0)).unwrap();
        for depth in 1..=2 {
            assert_eq!(
                composed_expand_order(inner, Driver::H2, depth).unwrap(),
                derived.expand_order(depth).unwrap(),
                "depth {depth}"
            );
        }
    }

    #[test]
    fn asymmetric_inner_is_rejected() {
        // the Meander driver is not symmetric
        let h3 = h3_spec().unwrap();
        for witness in [
            Transform::point_reflection(2),
            Transform::mirror(2, 0),
            Transform::mirror(2, 1),
        ] {
            assert!(matches!(
                derive_composed_spec(h3, &witness),
                Err(Error::SymmetryWitness(_))
            ));
        }
        // a wrong witness for a symmetric curve is also rejected
        let peano = TernaryFamily::Peano.spec(2).unwrap();
        assert!(matches!(
            derive_composed_spec(&peano, &Transform::mirror(2, 0)),
            Err(Error::SymmetryWitness(_))
        ));
    }

    #[test]
    fn symmetric_ternary_inner_derives() {
        let peano = TernaryFamily::Peano.spec(2).unwrap();
        let derived = derive_composed_spec(&peano, &Transform::point_reflection(2)).unwrap();
        assert_eq!(derived.rank_count(), 81);
        assert_eq!(
            composed_expand_order(&peano, Driver::H3, 1).unwrap(),
            derived.expand_order(1).unwrap()
        );
    }

    #[test]
    fn rect_to_point_examples() {
        let rect = Rectangle::parse("0 0 0.5 0.5", Base::Binary, 8).unwrap();
        let xy = rect_to_point(&rect, RectMode::Xy, 8).unwrap();
        assert_eq!(xy.to_string(), "0,0,0.10000000,0.10000000");
        let cd = rect_to_point(&rect, RectMode::Cd, 8).unwrap();
        // centres (1/4, 1/4), extents (1/2, 1/2)
        assert_eq!(cd.coord(0).digits(), &[0, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(cd.coord(2).digits(), &[1, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn degenerate_rectangle_modes() {
        let rect = Rectangle::parse("0.01 0.11 0.01 0.11", Base::Binary, 8).unwrap();
        let xy = rect_to_point(&rect, RectMode::Xy, 8).unwrap();
        let centre = pt("0.01,0.11", Base::Binary);
        assert_eq!(xy, centre.diaglift());
        let cd = rect_to_point(&rect, RectMode::Cd, 8).unwrap();
        assert!(cd.coord(2).is_zero() && cd.coord(3).is_zero());
        assert_eq!(cd.coord(0).value_cmp(centre.coord(0)), std::cmp::Ordering::Equal);
    }

    #[test]
    fn rectangle_rejects_min_above_max() {
        assert!(Rectangle::parse("0.5 0.5 0.25 0.75", Base::Binary, 8).is_err());
        assert!(Rectangle::parse("0.1 0.2 0.3", Base::Binary, 8).is_err());
    }

    #[test]
    fn ternary_midpoint_truncates() {
        let a = DigitString::new(Base::Ternary, vec![1]).unwrap();
        let b = DigitString::new(Base::Ternary, vec![2]).unwrap();
        // (1/3 + 2/3) / 2 = 1/2 = 0.111..._3 truncated
        let mid = midpoint(&a, &b, 6);
        assert_eq!(mid.digits(), &[1, 1, 1, 1, 1, 1]);
    }
}
