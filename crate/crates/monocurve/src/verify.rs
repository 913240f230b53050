//! Executable property checkers built on the brute-force expansion oracle:
//! visible orders on hypercube faces, interdimensional consistency,
//! vertex-continuity, neutral orientation (permutation closure) and
//! monotonicity along edges and the diagonal.
//!
//! All checks work on cell orders (scanning orders) of interior cells, which
//! sidesteps tie-breaking on shared boundaries; reports should be read as
//! "verified for interior cell orders".

use crate::curvespec::{CurveSpec, Permutation};
use crate::digits::Point;
use crate::error::{Error, Result};
use crate::parallel;
use crate::Family;
use std::collections::HashSet;
use std::fmt;

/// A face of the unit hypercube: the front face of axis `i` has coordinate
/// `i = 0`, the back face has coordinate `i = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Face {
    pub axis: usize,
    pub back: bool,
}

impl Face {
    pub fn front(axis: usize) -> Self {
        Face { axis, back: false }
    }

    pub fn back(axis: usize) -> Self {
        Face { axis, back: true }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}_{}", u8::from(self.back), self.axis)
    }
}

/// How a reference order is mapped onto a face before comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceTransform {
    Identity,
    /// Mirror in the given axis of the face's own coordinate system.
    MirrorAxis(usize),
}

impl fmt::Display for FaceTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceTransform::Identity => write!(f, "identity"),
            FaceTransform::MirrorAxis(i) => write!(f, "mirror{i}"),
        }
    }
}

/// The cells of `cells` touching `face`, in order, with the face axis
/// dropped. `side` is the grid resolution the cells live in.
pub fn visible_order_from(cells: &[Vec<u32>], face: Face, side: u32) -> Vec<Vec<u32>> {
    let wanted = if face.back { side - 1 } else { 0 };
    cells
        .iter()
        .filter(|c| c[face.axis] == wanted)
        .map(|c| {
            let mut reduced = c.clone();
            reduced.remove(face.axis);
            reduced
        })
        .collect()
}

/// The visible order of a curve on one of its faces at the given depth.
pub fn visible_order(spec: &CurveSpec, face: Face, depth: usize) -> Result<Vec<Vec<u32>>> {
    if face.axis >= spec.dim() {
        return Err(Error::IndexOutOfRange { index: face.axis, len: spec.dim() });
    }
    let side = (spec.base().radix() as u32).pow(depth as u32);
    Ok(visible_order_from(&spec.expand_order(depth)?, face, side))
}

/// First position where a visible order deviates from the reference order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShowsFailure {
    pub position: usize,
    pub expected: Vec<u32>,
    pub actual: Vec<u32>,
}

/// Checks that `spec_d` shows `spec_ref` (one dimension lower) on `face`:
/// the visible order must equal the reference expansion, cell by cell, under
/// the stated transform. `None` means pass.
pub fn check_shows(
    spec_d: &CurveSpec,
    spec_ref: &CurveSpec,
    face: Face,
    depth: usize,
    transform: FaceTransform,
) -> Result<Option<ShowsFailure>> {
    if spec_d.dim() != spec_ref.dim() + 1 {
        return Err(Error::DimensionMismatch { expected: spec_ref.dim() + 1, got: spec_d.dim() });
    }
    if spec_d.base() != spec_ref.base() {
        return Err(Error::BaseMismatch);
    }
    let visible = visible_order(spec_d, face, depth)?;
    let reference = spec_ref.expand_order(depth)?;
    let side = (spec_d.base().radix() as u32).pow(depth as u32);
    Ok(compare_against_reference(&visible, &reference, transform, side))
}

pub(crate) fn compare_against_reference(
    visible: &[Vec<u32>],
    reference: &[Vec<u32>],
    transform: FaceTransform,
    side: u32,
) -> Option<ShowsFailure> {
    debug_assert_eq!(visible.len(), reference.len());
    for (k, (got, reference_cell)) in visible.iter().zip(reference).enumerate() {
        let mut want = reference_cell.clone();
        if let FaceTransform::MirrorAxis(i) = transform {
            want[i] = side - 1 - want[i];
        }
        if *got != want {
            return Some(ShowsFailure { position: k, expected: want, actual: got.clone() });
        }
    }
    None
}

/// First pair of consecutive cells that do not share a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuityFailure {
    pub position: usize,
    pub prev: Vec<u32>,
    pub next: Vec<u32>,
}

/// Vertex-continuity: every pair of consecutive cells in the expansion must
/// share at least one vertex, i.e. differ by at most one grid unit per axis.
pub fn check_vertex_continuity(
    spec: &CurveSpec,
    depth: usize,
) -> Result<Option<ContinuityFailure>> {
    let cells = spec.expand_order(depth)?;
    Ok(continuity_violation(&cells))
}

pub(crate) fn continuity_violation(cells: &[Vec<u32>]) -> Option<ContinuityFailure> {
    if cells.len() < 2 {
        return None;
    }
    parallel::find_violation(cells.len() - 1, |k| {
        let a = &cells[k];
        let b = &cells[k + 1];
        let adjacent = a
            .iter()
            .zip(b)
            .all(|(&x, &y)| x.abs_diff(y) <= 1);
        if adjacent {
            None
        } else {
            Some(ContinuityFailure { position: k, prev: a.clone(), next: b.clone() })
        }
    })
}

/// Outcome of the permutation-closure test for neutral orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orientation {
    /// Every permutation is reachable as a composition of exactly `depth`
    /// subregion permutations.
    Neutral { depth: usize },
    /// The reachable sets stabilized (or a cycle was found) without ever
    /// covering all `d!` permutations.
    NotNeutral { reachable_sizes: Vec<usize>, cycled: bool },
}

impl Orientation {
    pub fn is_neutral(&self) -> bool {
        matches!(self, Orientation::Neutral { .. })
    }
}

/// Iterates the sets `S_k` of compositions of exactly `k` subregion
/// permutations, reporting the smallest `k` covering all `d!` permutations.
pub fn check_neutral_orientation(spec: &CurveSpec, max_depth: usize) -> Result<Orientation> {
    let d = spec.dim();
    if d > 7 {
        return Err(Error::Unsupported("orientation check needs d! sets (d <= 7)".into()));
    }
    let factorial: usize = (1..=d).product();
    let generators: HashSet<Vec<usize>> = (0..spec.rank_count())
        .map(|r| spec.transform(r).perm().forward().to_vec())
        .collect();
    let generators: Vec<Permutation> = generators
        .into_iter()
        .map(|f| Permutation::new(f).expect("spec permutations are valid"))
        .collect();
    let mut current: HashSet<Vec<usize>> =
        generators.iter().map(|g| g.forward().to_vec()).collect();
    let mut sizes = Vec::new();
    let mut snapshots: HashSet<Vec<Vec<usize>>> = HashSet::new();
    for depth in 1..=max_depth {
        sizes.push(current.len());
        if current.len() == factorial {
            return Ok(Orientation::Neutral { depth });
        }
        let mut snapshot: Vec<Vec<usize>> = current.iter().cloned().collect();
        snapshot.sort();
        if !snapshots.insert(snapshot) {
            return Ok(Orientation::NotNeutral { reachable_sizes: sizes, cycled: true });
        }
        let mut next = HashSet::with_capacity(current.len());
        for f in &current {
            let p = Permutation::new(f.clone()).expect("valid");
            for g in &generators {
                next.insert(p.compose(g).forward().to_vec());
            }
        }
        current = next;
    }
    Ok(Orientation::NotNeutral { reachable_sizes: sizes, cycled: false })
}

/// A straight segment of the unit square whose cell sequence can be checked
/// for monotonicity: one of the four edges (in either direction) or the
/// ascending diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    from: (u8, u8),
    to: (u8, u8),
}

impl Segment {
    pub const BOTTOM: Segment = Segment { from: (0, 0), to: (1, 0) };
    pub const LEFT: Segment = Segment { from: (0, 0), to: (0, 1) };
    pub const TOP: Segment = Segment { from: (0, 1), to: (1, 1) };
    pub const RIGHT_DOWNWARD: Segment = Segment { from: (1, 1), to: (1, 0) };
    pub const DIAGONAL: Segment = Segment { from: (0, 0), to: (1, 1) };

    pub fn new(from: (u8, u8), to: (u8, u8)) -> Result<Self> {
        let corners = from.0 <= 1 && from.1 <= 1 && to.0 <= 1 && to.1 <= 1;
        let edge = (from.0 == to.0) != (from.1 == to.1);
        let ascending_diag = from == (0, 0) && to == (1, 1);
        if corners && (edge || ascending_diag) {
            Ok(Segment { from, to })
        } else {
            Err(Error::UnsupportedSegment)
        }
    }

    /// The grid cells the segment intersects, ordered from `from` to `to`.
    fn cells(&self, side: u32) -> Vec<(u32, u32)> {
        let span = |a: u8, b: u8, t: u32| -> u32 {
            match (a, b) {
                (0, 1) => t,
                (1, 0) => side - 1 - t,
                (0, 0) => 0,
                _ => side - 1,
            }
        };
        (0..side)
            .map(|t| (span(self.from.0, self.to.0, t), span(self.from.1, self.to.1, t)))
            .collect()
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})->({},{})",
            self.from.0, self.from.1, self.to.0, self.to.1
        )
    }
}

/// First cell along the segment that breaks strictly increasing curve order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneFailure {
    pub position: usize,
    pub prev_cell: (u32, u32),
    pub cell: (u32, u32),
}

/// Checks that the cells intersected by the segment appear in strictly
/// increasing curve-order position. Two-dimensional curves only.
pub fn check_monotone(
    spec: &CurveSpec,
    segment: Segment,
    depth: usize,
) -> Result<Option<MonotoneFailure>> {
    if spec.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: spec.dim() });
    }
    let side = (spec.base().radix() as u32).pow(depth as u32);
    let cells = spec.expand_order(depth)?;
    let mut position = vec![0u32; (side * side) as usize];
    for (pos, cell) in cells.iter().enumerate() {
        position[(cell[0] * side + cell[1]) as usize] = pos as u32;
    }
    let path = segment.cells(side);
    for k in 1..path.len() {
        let prev = position[(path[k - 1].0 * side + path[k - 1].1) as usize];
        let here = position[(path[k].0 * side + path[k].1) as usize];
        if prev >= here {
            return Ok(Some(MonotoneFailure {
                position: k,
                prev_cell: path[k - 1],
                cell: path[k],
            }));
        }
    }
    Ok(None)
}

/// First pair of probe points whose comparator verdict contradicts the
/// oracle's index order.
#[derive(Debug, Clone)]
pub struct OrderDisagreement {
    pub i: usize,
    pub j: usize,
    pub verdict: bool,
}

/// How thoroughly [`check_order_agreement`] covers the pair space.
#[derive(Debug, Clone, Copy)]
pub enum PairBudget {
    /// Every ordered pair.
    Exhaustive,
    /// Comparator-sort recovery of the full order, all adjacent pairs, plus
    /// the given number of random pairs.
    Sampled { pairs: usize, seed: u64 },
}

/// Verifies that a comparator reproduces the oracle order of `points`
/// (probe points of an expansion, in expansion order): `compare(p_i, p_j)`
/// must hold exactly when `i < j`.
pub fn check_order_agreement<C>(
    points: &[Point],
    compare: C,
    budget: PairBudget,
) -> Option<OrderDisagreement>
where
    C: Fn(&Point, &Point) -> bool + Sync,
{
    let n = points.len();
    if n < 2 {
        return None;
    }
    match budget {
        PairBudget::Exhaustive => parallel::find_violation(n, |i| {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let verdict = compare(&points[i], &points[j]);
                if verdict != (i < j) {
                    return Some(OrderDisagreement { i, j, verdict });
                }
            }
            None
        }),
        PairBudget::Sampled { pairs, seed } => {
            // full order recovery through the comparator
            let mut indices: Vec<usize> = (0..n).collect();
            let mut rng = SplitMix64::new(seed);
            for k in (1..n).rev() {
                indices.swap(k, (rng.next() % (k as u64 + 1)) as usize);
            }
            indices.sort_by(|&a, &b| {
                if compare(&points[a], &points[b]) {
                    std::cmp::Ordering::Less
                } else if compare(&points[b], &points[a]) {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Equal
                }
            });
            if let Some((k, &v)) = indices.iter().enumerate().find(|&(k, &v)| k != v) {
                return Some(OrderDisagreement { i: k, j: v, verdict: false });
            }
            // every adjacent pair, both directions
            if let Some(v) = parallel::find_violation(n - 1, |i| {
                if !compare(&points[i], &points[i + 1]) {
                    return Some(OrderDisagreement { i, j: i + 1, verdict: false });
                }
                if compare(&points[i + 1], &points[i]) {
                    return Some(OrderDisagreement { i: i + 1, j: i, verdict: true });
                }
                None
            }) {
                return Some(v);
            }
            // random pairs
            let draws: Vec<(usize, usize)> = {
                let mut rng = SplitMix64::new(seed ^ 0x9e37_79b9_7f4a_7c15);
                (0..pairs)
                    .map(|_| ((rng.next() % n as u64) as usize, (rng.next() % n as u64) as usize))
                    .collect()
            };
            parallel::find_violation(draws.len(), |k| {
                let (i, j) = draws[k];
                if i == j {
                    return None;
                }
                let verdict = compare(&points[i], &points[j]);
                if verdict != (i < j) {
                    Some(OrderDisagreement { i, j, verdict })
                } else {
                    None
                }
            })
        }
    }
}

struct SplitMix64(u64);

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

/// One line of a verification report: family, dimension, check name,
/// parameters, verdict and a witness (or "-").
#[derive(Debug, Clone)]
pub struct ReportLine {
    pub family: String,
    pub dim: usize,
    pub check: String,
    pub params: String,
    pub pass: bool,
    pub witness: String,
}

impl fmt::Display for ReportLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\td={}\t{}\t{}\t{}\t{}",
            self.family,
            self.dim,
            self.check,
            self.params,
            if self.pass { "PASS" } else { "FAIL" },
            self.witness
        )
    }
}

/// The faces a family is expected to reproduce the lower-dimensional curve
/// on, with the transform each face needs.
pub fn expected_faces(family: Family, d: usize) -> Vec<(Face, FaceTransform)> {
    let mut faces: Vec<(Face, FaceTransform)> =
        (0..d).map(|i| (Face::front(i), FaceTransform::Identity)).collect();
    match family {
        Family::Ternary(_) => {
            faces.extend((0..d).map(|i| (Face::back(i), FaceTransform::Identity)));
        }
        Family::Binary(crate::BinaryFamily::Harmonious) => {
            faces.extend(
                (0..d - 1).map(|i| (Face::back(i), FaceTransform::MirrorAxis(i))),
            );
        }
        Family::Binary(crate::BinaryFamily::ButzMoore) => {}
    }
    faces
}

/// Runs the interdimensional-consistency checks for the given families:
/// every expected face of the d-dimensional curve must show the
/// (d-1)-dimensional curve at the given depth. Faces are checked in
/// parallel.
pub fn consistency_suite(
    families: &[Family],
    d_max: usize,
    depth: usize,
) -> Result<Vec<ReportLine>> {
    let mut lines = Vec::new();
    for &family in families {
        for d in 2..=d_max {
            let spec = family.spec(d)?;
            let reference = family.spec(d - 1)?.expand_order(depth)?;
            let cells = spec.expand_order(depth)?;
            let side = (spec.base().radix() as u32).pow(depth as u32);
            let work = expected_faces(family, d);
            let results = parallel::map_items(work, |(face, tf)| {
                let visible = visible_order_from(&cells, face, side);
                let failure = compare_against_reference(&visible, &reference, tf, side);
                (face, tf, failure)
            });
            for (face, tf, failure) in results {
                lines.push(ReportLine {
                    family: family.tag().into(),
                    dim: d,
                    check: "shows".into(),
                    params: format!("face={face} depth={depth} transform={tf}"),
                    pass: failure.is_none(),
                    witness: failure
                        .map(|w| {
                            format!(
                                "position {}: expected {:?}, got {:?}",
                                w.position, w.expected, w.actual
                            )
                        })
                        .unwrap_or_else(|| "-".into()),
                });
            }
        }
    }
    Ok(lines)
}

/// Vertex-continuity over families and dimensions.
pub fn continuity_suite(
    families: &[Family],
    d_max: usize,
    depth: usize,
) -> Result<Vec<ReportLine>> {
    let mut lines = Vec::new();
    for &family in families {
        for d in 1..=d_max {
            let spec = family.spec(d)?;
            let failure = check_vertex_continuity(&spec, depth)?;
            lines.push(ReportLine {
                family: family.tag().into(),
                dim: d,
                check: "vertex-continuity".into(),
                params: format!("depth={depth}"),
                pass: failure.is_none(),
                witness: failure
                    .map(|w| format!("cells {} and {}: {:?} -> {:?}", w.position, w.position + 1, w.prev, w.next))
                    .unwrap_or_else(|| "-".into()),
            });
        }
    }
    Ok(lines)
}

/// Whether a family's d-dimensional member has neutral orientation.
pub fn expected_neutral(family: Family, d: usize) -> bool {
    match family {
        Family::Ternary(crate::TernaryFamily::Peano) => d == 1,
        Family::Ternary(crate::TernaryFamily::Coil) => d == 1,
        Family::Ternary(crate::TernaryFamily::HalfCoil) => d <= 2,
        Family::Ternary(crate::TernaryFamily::Meurthe) => true,
        Family::Binary(crate::BinaryFamily::ButzMoore) => d <= 2,
        Family::Binary(crate::BinaryFamily::Harmonious) => true,
    }
}

/// Neutral-orientation classification versus the known one.
pub fn orientation_suite(
    families: &[Family],
    d_max: usize,
    max_depth: usize,
) -> Result<Vec<ReportLine>> {
    let mut lines = Vec::new();
    for &family in families {
        for d in 2..=d_max {
            let spec = family.spec(d)?;
            let orientation = check_neutral_orientation(&spec, max_depth)?;
            let expected = expected_neutral(family, d);
            let witness = match &orientation {
                Orientation::Neutral { depth } => format!("closure depth {depth}"),
                Orientation::NotNeutral { reachable_sizes, cycled } => format!(
                    "reachable sizes {reachable_sizes:?}{}",
                    if *cycled { " (cycle)" } else { "" }
                ),
            };
            lines.push(ReportLine {
                family: family.tag().into(),
                dim: d,
                check: "neutral-orientation".into(),
                params: format!("max_depth={max_depth} expected={}", if expected { "neutral" } else { "not-neutral" }),
                pass: orientation.is_neutral() == expected,
                witness,
            });
        }
    }
    Ok(lines)
}

/// Monotonicity of a 2D driver curve along the given segments.
pub fn monotone_suite(
    spec: &CurveSpec,
    name: &str,
    segments: &[Segment],
    depth: usize,
) -> Result<Vec<ReportLine>> {
    let mut lines = Vec::new();
    for &segment in segments {
        let failure = check_monotone(spec, segment, depth)?;
        lines.push(ReportLine {
            family: name.into(),
            dim: 2,
            check: "monotone".into(),
            params: format!("segment={segment} depth={depth}"),
            pass: failure.is_none(),
            witness: failure
                .map(|w| {
                    format!(
                        "cell ({},{}) before ({},{})",
                        w.prev_cell.0, w.prev_cell.1, w.cell.0, w.cell.1
                    )
                })
                .unwrap_or_else(|| "-".into()),
        });
    }
    Ok(lines)
}
