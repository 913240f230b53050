//! The four interdimensionally consistent ternary families: Peano, coil,
//! half-coil and Meurthe. All four share the ternary reflected Gray code as
//! location map and the digit-sum reflection rule; they differ only in the
//! axis permutations. The comparators here are table-free: the permutation
//! update per family is a constant-size rule, so dimensions well beyond what
//! a materialized table allows are fine.

use crate::curvespec::{CurveSpec, Permutation, Transform};
use crate::digits::{Base, Point, SignedPoint};
use crate::error::{Error, Result};
use crate::graycode::{rgc_encode, BaseBNumber};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TernaryFamily {
    Peano,
    Coil,
    HalfCoil,
    Meurthe,
}

impl TernaryFamily {
    pub const ALL: [TernaryFamily; 4] = [
        TernaryFamily::Peano,
        TernaryFamily::Coil,
        TernaryFamily::HalfCoil,
        TernaryFamily::Meurthe,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            TernaryFamily::Peano => "peano",
            TernaryFamily::Coil => "coil",
            TernaryFamily::HalfCoil => "half-coil",
            TernaryFamily::Meurthe => "meurthe",
        }
    }

    /// The axis permutation of subregion `r`, from the rank digits.
    fn perm_of_rank(&self, r: &[u8]) -> Permutation {
        let d = r.len();
        match self {
            TernaryFamily::Peano => Permutation::identity(d),
            TernaryFamily::Coil => Permutation::reversal(d),
            TernaryFamily::HalfCoil => {
                let digitsum: u32 = r.iter().map(|&x| x as u32).sum();
                if digitsum % 2 == 1 {
                    Permutation::identity(d)
                } else {
                    Permutation::reversal(d)
                }
            }
            TernaryFamily::Meurthe => {
                // axes with rank digit 0 or 1 move to the front in reverse
                // order; axes with digit 2 keep their order at the back
                let forward: Vec<usize> = (0..d)
                    .map(|i| {
                        if r[i] <= 1 {
                            r[i + 1..].iter().filter(|&&x| x <= 1).count()
                        } else {
                            d - 1 - r[i + 1..].iter().filter(|&&x| x == 2).count()
                        }
                    })
                    .collect();
                Permutation::new(forward).expect("family rule yields a bijection")
            }
        }
    }

    /// Materializes the full definition table for dimension `d`:
    /// `c = TRGC`, `m_i(r) = (digitsum(r) - r_i) mod 2`, permutations per
    /// family.
    pub fn spec(&self, d: usize) -> Result<CurveSpec> {
        if d == 0 {
            return Err(Error::ZeroDimension);
        }
        let count = 3usize
            .checked_pow(d as u32)
            .filter(|&c| (c as u128) <= crate::curvespec::MAX_EXPANSION_CELLS)
            .ok_or(Error::DepthTooLarge {
                cells: u128::MAX,
                limit: crate::curvespec::MAX_EXPANSION_CELLS,
            })?;
        let rows = (0..count)
            .map(|r| {
                let rank = BaseBNumber::from_index(Base::Ternary, d, r);
                let digitsum: u32 = rank.digits().iter().map(|&x| x as u32).sum();
                let flip: Vec<bool> =
                    rank.digits().iter().map(|&x| (digitsum - x as u32) % 2 == 1).collect();
                let perm = self.perm_of_rank(rank.digits());
                Ok((rgc_encode(&rank), Transform::new(perm, flip)?))
            })
            .collect::<Result<Vec<_>>>()?;
        CurveSpec::new(d, Base::Ternary, rows)
    }

    /// True iff `p` precedes `q`, for points in the unit cube.
    pub fn compare(&self, p: &Point, q: &Point) -> Result<bool> {
        check_pair(p, q)?;
        let d = p.dim();
        let levels = p.max_len().max(q.max_len());
        let mut m = TernaryMachine::new(*self, d);
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

    /// Comparison extended to arbitrary non-negative coordinates: both points
    /// are rescaled by 1/9 until they lie in the unit cube. The first
    /// sub-subregion is untransformed in all four families, so verdicts for
    /// points already inside the cube are unchanged.
    pub fn compare_nonneg(&self, p: &SignedPoint, q: &SignedPoint) -> Result<bool> {
        check_signed_pair(p, q)?;
        if p.any_negative() || q.any_negative() {
            return Err(Error::NegativeCoordinate);
        }
        let mut p = p.clone();
        let mut q = q.clone();
        while !(p.all_in_unit() && q.all_in_unit()) {
            for c in p.coords_mut().iter_mut().chain(q.coords_mut().iter_mut()) {
                c.div_base_pow(2);
            }
        }
        self.compare(&p.to_point()?, &q.to_point()?)
    }

    /// Comparison extended to arbitrary real coordinates: both points are
    /// mapped through `x -> (x + 20) / 81` until all coordinates lie in
    /// `[0,1)`. For points already inside the unit cube this is a valid
    /// ordering of the same curve, but a different one than
    /// [`compare_nonneg`] picks.
    pub fn compare_signed(&self, p: &SignedPoint, q: &SignedPoint) -> Result<bool> {
        check_signed_pair(p, q)?;
        let mut p = p.clone();
        let mut q = q.clone();
        while !(p.all_in_unit() && q.all_in_unit()) {
            for c in p.coords_mut().iter_mut().chain(q.coords_mut().iter_mut()) {
                c.add_int(20);
                c.div_base_pow(4);
            }
        }
        self.compare(&p.to_point()?, &q.to_point()?)
    }
}

fn check_pair(p: &Point, q: &Point) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), got: q.dim() });
    }
    if p.base() != Base::Ternary || q.base() != Base::Ternary {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

fn check_signed_pair(p: &SignedPoint, q: &SignedPoint) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), got: q.dim() });
    }
    if p.base() != Base::Ternary || q.base() != Base::Ternary {
        return Err(Error::BaseMismatch);
    }
    Ok(())
}

/// The streaming state machine behind the ternary comparators: one
/// dimension-step per call, yielding the rank digits of both points. The
/// digit-sum parity is tracked incrementally in `forward` and `reflected`
/// rather than recomputed per level; the values carried into a new level can
/// be globally complemented, which cancels out in the comparisons.
#[derive(Debug)]
pub(crate) struct TernaryMachine {
    family: TernaryFamily,
    d: usize,
    perm: Vec<usize>,
    alt: Vec<usize>,
    reflected: Vec<bool>,
    forward: bool,
    direction: bool,
    rank: Vec<u8>,
    i: usize,
}

impl TernaryMachine {
    pub(crate) fn new(family: TernaryFamily, d: usize) -> Self {
        let alt = match family {
            // coil and half-coil keep `alt` as the reversal of `perm`
            TernaryFamily::Coil | TernaryFamily::HalfCoil => (0..d).rev().collect(),
            _ => vec![0; d],
        };
        TernaryMachine {
            family,
            d,
            perm: (0..d).collect(),
            alt,
            reflected: vec![false; d],
            forward: true,
            direction: true,
            rank: vec![0; d],
            i: 0,
        }
    }

    /// The source coordinate the next step will consume.
    pub(crate) fn source(&self) -> usize {
        self.perm[self.i]
    }

    /// Consumes one raw digit of each point and returns the pair of rank
    /// digits. State updates follow the first point's digits, so the second
    /// rank digit is only reliable up to the first divergence.
    pub(crate) fn step(&mut self, dp_raw: u8, dq_raw: u8) -> (u8, u8) {
        let src = self.perm[self.i];
        let (mut dp, mut dq) = (dp_raw, dq_raw);
        if self.reflected[src] == self.forward {
            dp = 2 - dp;
            dq = 2 - dq;
        }
        self.rank[self.i] = dp;
        if dp % 2 == 1 {
            self.forward = !self.forward;
            self.reflected[src] = !self.reflected[src];
        }
        self.i += 1;
        if self.i == self.d {
            self.i = 0;
            self.end_level();
        }
        (dp, dq)
    }

    fn end_level(&mut self) {
        match self.family {
            TernaryFamily::Peano => {}
            TernaryFamily::Coil => {
                std::mem::swap(&mut self.perm, &mut self.alt);
            }
            TernaryFamily::HalfCoil => {
                // an even rank (digit sum even, forward unchanged) reverses
                if self.forward == self.direction {
                    std::mem::swap(&mut self.perm, &mut self.alt);
                }
                self.direction = self.forward;
            }
            TernaryFamily::Meurthe => {
                let twos = self.rank.iter().filter(|&&x| x == 2).count();
                let mut next_two = self.d - twos;
                let mut next_low = next_two as isize - 1;
                for i in 0..self.d {
                    if self.rank[i] == 2 {
                        self.alt[next_two] = self.perm[i];
                        next_two += 1;
                    } else {
                        self.alt[next_low as usize] = self.perm[i];
                        next_low -= 1;
                    }
                }
                std::mem::swap(&mut self.perm, &mut self.alt);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(text: &str) -> Point {
        Point::parse(text, Base::Ternary, 12).unwrap()
    }

    fn spt(text: &str) -> SignedPoint {
        SignedPoint::parse(text, Base::Ternary, 12).unwrap()
    }

    fn perm(s: &str) -> Vec<usize> {
        s.bytes().map(|b| (b - b'0') as usize).collect()
    }

    #[test]
    fn meurthe_table_rows() {
        let spec = TernaryFamily::Meurthe.spec(3).unwrap();
        // rank 020
        let r = spec.rank_of_location(&[0, 2, 0]);
        assert_eq!(r, 6);
        let t = spec.transform(6);
        assert_eq!(t.perm().forward(), perm("120"));
        assert_eq!(t.perm().inverse(), perm("201"));
        assert_eq!(t.flip(), &[false, false, false]);
        // rank 222 is the identity permutation
        assert!(spec.transform(26).perm().is_identity());
    }

    #[test]
    fn reflections_at_rank_001() {
        for family in TernaryFamily::ALL {
            let spec = family.spec(3).unwrap();
            assert_eq!(spec.transform(1).flip(), &[true, true, false], "{family:?}");
        }
    }

    /// The alternative construction of the Meurthe inverse permutation:
    /// indices with rank digit 0 or 1 move to the front in reverse order.
    fn meurthe_inverse_oracle(r: &[u8]) -> Vec<usize> {
        let mut inv: Vec<usize> =
            (0..r.len()).filter(|&i| r[i] <= 1).rev().collect();
        inv.extend((0..r.len()).filter(|&i| r[i] == 2));
        inv
    }

    #[test]
    fn meurthe_permutation_matches_inverse_construction() {
        for d in 1..=4 {
            let spec = TernaryFamily::Meurthe.spec(d).unwrap();
            for r in 0..spec.rank_count() {
                let rank = BaseBNumber::from_index(Base::Ternary, d, r);
                let oracle = meurthe_inverse_oracle(rank.digits());
                assert_eq!(spec.transform(r).perm().inverse(), oracle, "d={d} r={rank}");
            }
        }
    }

    #[test]
    fn meurthe_is_not_always_self_inverse() {
        // the six ranks where a mistaken use of a instead of a^-1 would bite
        let spec = TernaryFamily::Meurthe.spec(3).unwrap();
        let differing: Vec<usize> = (0..27)
            .filter(|&r| {
                let p = spec.transform(r).perm();
                p.forward() != p.inverse()
            })
            .collect();
        let expected: Vec<usize> = ["020", "021", "120", "121", "220", "221"]
            .iter()
            .map(|s| {
                s.bytes().fold(0usize, |acc, b| acc * 3 + (b - b'0') as usize)
            })
            .collect();
        assert_eq!(differing, expected);
    }

    #[test]
    fn compare_peano_level1() {
        // first column precedes the second
        assert!(TernaryFamily::Peano.compare(&pt("0.0,0.2"), &pt("0.1,0.2")).unwrap());
        assert!(!TernaryFamily::Peano.compare(&pt("0.1,0.0"), &pt("0.0,0.1")).unwrap());
    }

    #[test]
    fn compare_equal_points() {
        for family in TernaryFamily::ALL {
            let p = pt("0.21,0.02");
            assert!(!family.compare(&p, &p).unwrap());
            // differing trailing zeros do not make points unequal
            let q = pt("0.210,0.020");
            assert!(!family.compare(&p, &q).unwrap());
            assert!(!family.compare(&q, &p).unwrap());
        }
    }

    #[test]
    fn compare_meurthe_oracle_cells() {
        let spec = TernaryFamily::Meurthe.spec(3).unwrap();
        let cells = spec.expand_order(1).unwrap();
        let p5 = spec.cell_probe_point(&cells[5], 1);
        let p4 = spec.cell_probe_point(&cells[4], 1);
        assert!(!TernaryFamily::Meurthe.compare(&p5, &p4).unwrap());
        assert!(TernaryFamily::Meurthe.compare(&p4, &p5).unwrap());
    }

    #[test]
    fn compare_matches_generic_spec() {
        for family in TernaryFamily::ALL {
            for d in 1..=3 {
                let spec = family.spec(d).unwrap();
                let depth = if d <= 2 { 2 } else { 1 };
                let cells = spec.expand_order(depth).unwrap();
                let pts: Vec<Point> =
                    cells.iter().map(|c| spec.cell_probe_point(c, depth)).collect();
                for i in 0..pts.len() {
                    for j in 0..pts.len() {
                        assert_eq!(
                            family.compare(&pts[i], &pts[j]).unwrap(),
                            i < j,
                            "{family:?} d={d} {i} {j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn nonneg_agrees_inside_unit_cube() {
        for family in TernaryFamily::ALL {
            let pairs = [
                ("0.12,0.2", "0.2,0.01"),
                ("0.001,0.22", "0.01,0.1"),
                ("0.11,0.11", "0.112,0.11"),
            ];
            for (a, b) in pairs {
                let verdict = family.compare(&pt(a), &pt(b)).unwrap();
                assert_eq!(
                    family.compare_nonneg(&spt(a), &spt(b)).unwrap(),
                    verdict,
                    "{family:?} {a} {b}"
                );
            }
        }
    }

    #[test]
    fn nonneg_origin_first() {
        for family in TernaryFamily::ALL {
            assert!(family.compare_nonneg(&spt("0,0"), &spt("4.2,0.1")).unwrap());
            assert!(!family.compare_nonneg(&spt("4.2,0.1"), &spt("0,0")).unwrap());
        }
    }

    #[test]
    fn nonneg_rescale_step() {
        // (1, ...) vs (2, ...) equals the unit-cube verdict on points divided
        // by nine: 1/9 = 0.01_3, 2/9 = 0.02_3
        for family in TernaryFamily::ALL {
            let got = family.compare_nonneg(&spt("1,0.1"), &spt("2,0.1")).unwrap();
            let want = family
                .compare(&pt("0.01,0.001"), &pt("0.02,0.001"))
                .unwrap();
            assert_eq!(got, want, "{family:?}");
        }
    }

    #[test]
    fn nonneg_rejects_negative() {
        assert!(matches!(
            TernaryFamily::Peano.compare_nonneg(&spt("-0.1,0"), &spt("0,0")),
            Err(Error::NegativeCoordinate)
        ));
    }

    #[test]
    fn signed_equal_points() {
        for family in TernaryFamily::ALL {
            let p = spt("-3.1,7");
            assert!(!family.compare_signed(&p, &p).unwrap());
        }
    }

    #[test]
    fn signed_zoom_out_example() {
        // (-1, 0) and (0, 0) land on (19/81, 20/81) and (20/81, 20/81) after
        // one zoom-out; 19/81 = 0.0201_3 and 20/81 = 0.0202_3
        let spec = TernaryFamily::Peano.spec(2).unwrap();
        let p1 = pt("0.0201,0.0202");
        let q1 = pt("0.0202,0.0202");
        let want = spec.compare(&p1, &q1).unwrap();
        let got = TernaryFamily::Peano.compare_signed(&spt("-1,0"), &spt("0,0")).unwrap();
        assert_eq!(got, want);
        assert!(got);
    }

    #[test]
    fn signed_matches_plain_inside_cube() {
        // in-cube points need no zoom-out, so the signed comparator reduces
        // to the plain one
        for family in TernaryFamily::ALL {
            let pairs = [("0.1,0.0", "0.0,0.1"), ("0.2,0.1", "0.1,0.2"), ("0.0,0.2", "0.2,0.0")];
            for (a, b) in pairs {
                let plain = family.compare(&pt(a), &pt(b)).unwrap();
                let signed = family.compare_signed(&spt(a), &spt(b)).unwrap();
                assert_eq!(plain, signed, "{family:?} {a} {b}");
            }
        }
    }

    #[test]
    fn signed_differs_from_nonneg_outside_cube() {
        // the two extensions embed the unit cube differently, so somewhere in
        // the non-negative range their orderings disagree
        let mut found = false;
        'outer: for family in TernaryFamily::ALL {
            let values = ["0.2", "1.1", "2.2", "4", "7.02"];
            let mut points = Vec::new();
            for a in values {
                for b in values {
                    points.push(spt(&format!("{a},{b}")));
                }
            }
            for p in &points {
                for q in &points {
                    let nonneg = family.compare_nonneg(p, q).unwrap();
                    let signed = family.compare_signed(p, q).unwrap();
                    if nonneg != signed {
                        found = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn signed_hyperplane_reduces_to_lower_dimension() {
        // 2D points sharing coordinate i = 0 compare like the 1D family on
        // the remaining coordinate
        let coords = ["-1.2", "0.21", "2.1", "-0.02", "1", "0.2"];
        for family in TernaryFamily::ALL {
            for i in 0..2 {
                for (k, a) in coords.iter().enumerate() {
                    for b in &coords[k + 1..] {
                        let mk = |x: &str| {
                            let text = if i == 0 {
                                format!("0,{x}")
                            } else {
                                format!("{x},0")
                            };
                            SignedPoint::parse(&text, Base::Ternary, 12).unwrap()
                        };
                        let got = family.compare_signed(&mk(a), &mk(b)).unwrap();
                        let want = family
                            .compare_signed(
                                &SignedPoint::parse(a, Base::Ternary, 12).unwrap(),
                                &SignedPoint::parse(b, Base::Ternary, 12).unwrap(),
                            )
                            .unwrap();
                        assert_eq!(got, want, "{family:?} axis {i}: {a} vs {b}");
                    }
                }
            }
        }
    }
}
