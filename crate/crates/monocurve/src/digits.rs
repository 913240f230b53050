//! Exact point representation: coordinates are finite base-b digit strings,
//! never floating-point numbers. Comparisons terminate when both strings are
//! exhausted, so every operator in this crate is exact and reproducible.

use crate::error::{Error, Result};
use std::fmt;

/// Digit base of a curve: 2-regular curves subdivide cubes into `2^d`
/// subcubes, 3-regular curves into `3^d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Base {
    Binary,
    Ternary,
}

impl Base {
    pub fn radix(self) -> u8 {
        match self {
            Base::Binary => 2,
            Base::Ternary => 3,
        }
    }

    pub fn from_radix(radix: u8) -> Result<Self> {
        match radix {
            2 => Ok(Base::Binary),
            3 => Ok(Base::Ternary),
            _ => Err(Error::Unsupported(format!("base {radix} not supported"))),
        }
    }
}

/// The fractional part of one coordinate in `[0,1)`, most significant digit
/// first. The represented value is `Σ digits[i] · base^-(i+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString {
    base: Base,
    digits: Vec<u8>,
}

impl DigitString {
    pub fn new(base: Base, digits: Vec<u8>) -> Result<Self> {
        let radix = base.radix();
        if let Some(&bad) = digits.iter().find(|&&d| d >= radix) {
            return Err(Error::InvalidDigit {
                digit: (b'0' + bad) as char,
                base: radix,
            });
        }
        Ok(DigitString { base, digits })
    }

    pub fn empty(base: Base) -> Self {
        DigitString { base, digits: Vec::new() }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Digit at position `k`, treating the string as padded with infinitely
    /// many trailing zeros.
    pub fn digit_at(&self, k: usize) -> u8 {
        self.digits.get(k).copied().unwrap_or(0)
    }

    /// Removes the first digit and returns it together with the remainder.
    /// On an empty string this yields a zero and the empty string.
    pub fn extract(&self) -> (u8, DigitString) {
        match self.digits.split_first() {
            Some((&head, tail)) => (
                head,
                DigitString { base: self.base, digits: tail.to_vec() },
            ),
            None => (0, self.clone()),
        }
    }

    /// Inverse of [`extract`](Self::extract) for non-empty remainders.
    pub fn prepend(&self, digit: u8) -> Result<DigitString> {
        let mut digits = Vec::with_capacity(self.digits.len() + 1);
        digits.push(digit);
        digits.extend_from_slice(&self.digits);
        DigitString::new(self.base, digits)
    }

    pub fn is_zero(&self) -> bool {
        self.digits.iter().all(|&d| d == 0)
    }

    /// Exact value comparison (shorter strings compare as zero-padded).
    pub fn value_cmp(&self, other: &DigitString) -> std::cmp::Ordering {
        let n = self.len().max(other.len());
        for k in 0..n {
            match self.digit_at(k).cmp(&other.digit_at(k)) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "0");
        }
        write!(f, "0.")?;
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// A point in `[0,1)^d` with all coordinates sharing one base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    base: Base,
    coords: Vec<DigitString>,
}

impl Point {
    pub fn new(coords: Vec<DigitString>) -> Result<Self> {
        let base = coords.first().ok_or(Error::ZeroDimension)?.base();
        if coords.iter().any(|c| c.base() != base) {
            return Err(Error::BaseMismatch);
        }
        Ok(Point { base, coords })
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[DigitString] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &DigitString {
        &self.coords[i]
    }

    /// Longest coordinate digit string; the number of recursion levels a
    /// comparison of this point can need.
    pub fn max_len(&self) -> usize {
        self.coords.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    /// Parses a comma-separated list of coordinates. Each coordinate is either
    /// an explicit digit string (all digits valid in `base`, taken verbatim)
    /// or a decimal fraction, converted to exactly `precision` digits by
    /// repeated multiply-by-base truncation. Coordinates outside `[0,1)` are
    /// rejected.
    pub fn parse(text: &str, base: Base, precision: usize) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|part| parse_unit_coord(part.trim(), base, precision))
            .collect::<Result<Vec<_>>>()?;
        Point::new(coords)
    }

    /// Inserts zero coordinates at the positions not selected by `sel`.
    pub fn lift(&self, sel: &DimensionSelector) -> Result<Point> {
        if self.dim() != sel.d_from {
            return Err(Error::DimensionMismatch { expected: sel.d_from, got: self.dim() });
        }
        let mut coords = vec![DigitString::empty(self.base); sel.d_to];
        for (i, &target) in sel.mu.iter().enumerate() {
            coords[target] = self.coords[i].clone();
        }
        Point::new(coords)
    }

    /// Concatenates two copies of the coordinate sequence, doubling the
    /// dimension.
    pub fn diaglift(&self) -> Point {
        let mut coords = self.coords.clone();
        coords.extend(self.coords.iter().cloned());
        Point { base: self.base, coords }
    }

    /// Concatenation `p|q` of two coordinate sequences.
    pub fn concat(&self, other: &Point) -> Result<Point> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        Point::new(coords)
    }

    /// First or last `d` coordinates of a `2d`-dimensional point.
    pub fn half(&self, second: bool) -> Result<Point> {
        if self.dim() % 2 != 0 {
            return Err(Error::OddDimension(self.dim()));
        }
        let d = self.dim() / 2;
        let range = if second { d..self.dim() } else { 0..d };
        Point::new(self.coords[range].to_vec())
    }

    /// Drops coordinate `i`, reducing the dimension by one.
    pub fn drop_coord(&self, i: usize) -> Result<Point> {
        if i >= self.dim() {
            return Err(Error::IndexOutOfRange { index: i, len: self.dim() });
        }
        let mut coords = self.coords.clone();
        coords.remove(i);
        Point::new(coords)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coords {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// A strictly increasing injection selecting `d_from` dimensions out of
/// `d_to`, used to lift lower-dimensional points.
#[derive(Debug, Clone)]
pub struct DimensionSelector {
    d_from: usize,
    d_to: usize,
    mu: Vec<usize>,
}

impl DimensionSelector {
    pub fn new(d_to: usize, mu: Vec<usize>) -> Result<Self> {
        let d_from = mu.len();
        if d_from == 0 || d_to <= d_from.saturating_sub(1) {
            return Err(Error::ZeroDimension);
        }
        for w in mu.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidPermutation(
                    "selector must be strictly increasing".into(),
                ));
            }
        }
        if *mu.last().unwrap() >= d_to {
            return Err(Error::IndexOutOfRange { index: *mu.last().unwrap(), len: d_to });
        }
        Ok(DimensionSelector { d_from, d_to, mu })
    }

    pub fn identity_into(d_from: usize, d_to: usize) -> Result<Self> {
        DimensionSelector::new(d_to, (0..d_from).collect())
    }
}

/// One coordinate with sign and integer part, for the comparators extended
/// beyond the unit cube. The integer part is held exactly; the fractional
/// part is a finite digit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedCoord {
    neg: bool,
    int: u128,
    frac: DigitString,
}

impl SignedCoord {
    pub fn new(neg: bool, int: u128, frac: DigitString) -> Self {
        let mut c = SignedCoord { neg, int, frac };
        if c.int == 0 && c.frac.is_zero() {
            c.neg = false;
        }
        c
    }

    pub fn base(&self) -> Base {
        self.frac.base()
    }

    pub fn is_negative(&self) -> bool {
        self.neg
    }

    /// True when the value lies in `[0,1)`.
    pub fn in_unit(&self) -> bool {
        !self.neg && self.int == 0
    }

    /// Adds a non-negative integer, exactly.
    pub fn add_int(&mut self, n: u128) {
        if !self.neg {
            self.int += n;
            return;
        }
        // magnitude is int + 0.frac, with frac possibly non-zero
        let frac_zero = self.frac.is_zero();
        if self.int > n || (self.int == n && !frac_zero) {
            self.int -= n;
        } else if self.int == n {
            // frac is zero: exact cancellation
            self.int = 0;
            self.neg = false;
            self.frac = DigitString::empty(self.frac.base());
        } else if frac_zero {
            self.int = n - self.int;
            self.neg = false;
            self.frac = DigitString::empty(self.frac.base());
        } else {
            self.int = n - self.int - 1;
            self.neg = false;
            self.frac = frac_complement(&self.frac);
        }
        if self.int == 0 && self.frac.is_zero() {
            self.neg = false;
        }
    }

    /// Divides by `base^k`: shifts `k` digits from the integer part into the
    /// fraction.
    pub fn div_base_pow(&mut self, k: u32) {
        let radix = self.base().radix() as u128;
        let mut carried = vec![0u8; k as usize];
        for slot in carried.iter_mut().rev() {
            *slot = (self.int % radix) as u8;
            self.int /= radix;
        }
        carried.extend_from_slice(self.frac.digits());
        self.frac = DigitString::new(self.base(), carried).expect("digits stay in range");
    }

    /// The fractional digit string of a value already inside `[0,1)`.
    pub fn to_fraction(&self) -> Result<DigitString> {
        if !self.in_unit() {
            return Err(Error::CoordinateOutOfRange(self.to_string()));
        }
        Ok(self.frac.clone())
    }

    /// Parses `[-]int[.frac]` where the integer part is decimal and the
    /// fractional part follows the same explicit-vs-decimal rule as
    /// [`Point::parse`].
    pub fn parse(text: &str, base: Base, precision: usize) -> Result<Self> {
        let text = text.trim();
        let (neg, rest) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        if rest.is_empty() {
            return Err(Error::MalformedCoordinate(text.into()));
        }
        let (int_text, frac_text) = match rest.split_once('.') {
            Some((i, f)) => (i, Some(f)),
            None => (rest, None),
        };
        if int_text.is_empty() || !int_text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::MalformedCoordinate(text.into()));
        }
        let int: u128 = int_text
            .parse()
            .map_err(|_| Error::MalformedCoordinate(text.into()))?;
        let frac = match frac_text {
            Some(f) => parse_fraction(f, base, precision, text)?,
            None => DigitString::empty(base),
        };
        Ok(SignedCoord::new(neg, int, frac))
    }
}

impl fmt::Display for SignedCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.neg {
            write!(f, "-")?;
        }
        write!(f, "{}", self.int)?;
        if !self.frac.is_empty() {
            write!(f, ".")?;
            for d in self.frac.digits() {
                write!(f, "{d}")?;
            }
        }
        Ok(())
    }
}

/// A point with arbitrary real coordinates as finite digit strings, for the
/// non-negative and signed comparator extensions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPoint {
    base: Base,
    coords: Vec<SignedCoord>,
}

impl SignedPoint {
    pub fn new(coords: Vec<SignedCoord>) -> Result<Self> {
        let base = coords.first().ok_or(Error::ZeroDimension)?.base();
        if coords.iter().any(|c| c.base() != base) {
            return Err(Error::BaseMismatch);
        }
        Ok(SignedPoint { base, coords })
    }

    pub fn parse(text: &str, base: Base, precision: usize) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|part| SignedCoord::parse(part, base, precision))
            .collect::<Result<Vec<_>>>()?;
        SignedPoint::new(coords)
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[SignedCoord] {
        &self.coords
    }

    pub fn coords_mut(&mut self) -> &mut [SignedCoord] {
        &mut self.coords
    }

    pub fn any_negative(&self) -> bool {
        self.coords.iter().any(|c| c.is_negative())
    }

    pub fn all_in_unit(&self) -> bool {
        self.coords.iter().all(|c| c.in_unit())
    }

    /// Converts to a unit-cube point once every coordinate is in `[0,1)`.
    pub fn to_point(&self) -> Result<Point> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.to_fraction())
            .collect::<Result<Vec<_>>>()?;
        Point::new(coords)
    }

    pub fn drop_coord(&self, i: usize) -> Result<SignedPoint> {
        if i >= self.dim() {
            return Err(Error::IndexOutOfRange { index: i, len: self.dim() });
        }
        let mut coords = self.coords.clone();
        coords.remove(i);
        SignedPoint::new(coords)
    }
}

/// `1 - 0.f` for a non-zero fraction `0.f`, as a digit string of the same
/// length up to trailing zeros.
fn frac_complement(f: &DigitString) -> DigitString {
    let radix = f.base().radix();
    let digits = f.digits();
    let last = digits
        .iter()
        .rposition(|&d| d > 0)
        .expect("complement of zero handled by caller");
    let mut out = Vec::with_capacity(last + 1);
    for (i, &d) in digits.iter().enumerate().take(last + 1) {
        if i < last {
            out.push(radix - 1 - d);
        } else {
            out.push(radix - d);
        }
    }
    DigitString::new(f.base(), out).expect("digits stay in range")
}

pub(crate) fn parse_unit_coord(text: &str, base: Base, precision: usize) -> Result<DigitString> {
    let c = SignedCoord::parse(text, base, precision)?;
    if c.is_negative() || !c.in_unit() {
        return Err(Error::CoordinateOutOfRange(text.into()));
    }
    c.to_fraction()
}

/// Fraction digits: taken verbatim when every character is a valid base-b
/// digit, otherwise interpreted as a decimal fraction and converted to
/// `precision` digits by repeated multiply-by-base truncation.
fn parse_fraction(text: &str, base: Base, precision: usize, whole: &str) -> Result<DigitString> {
    if text.is_empty() {
        return Ok(DigitString::empty(base));
    }
    if !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedCoordinate(whole.into()));
    }
    let radix = base.radix();
    if text.bytes().all(|b| b - b'0' < radix) {
        let digits = text.bytes().map(|b| b - b'0').collect();
        return DigitString::new(base, digits);
    }
    if text.len() > 27 {
        return Err(Error::MalformedCoordinate(whole.into()));
    }
    let mut num: u128 = text.parse().map_err(|_| Error::MalformedCoordinate(whole.into()))?;
    let den: u128 = 10u128.pow(text.len() as u32);
    let mut digits = Vec::with_capacity(precision);
    for _ in 0..precision {
        num *= radix as u128;
        digits.push((num / den) as u8);
        num %= den;
    }
    DigitString::new(base, digits)
}
