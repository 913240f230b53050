//! Reflected Gray codes for base 2 and 3, plus the digit-editing operators
//! (take-out, reduce, mirror) used by the consistency checker.
//!
//! Encoding is a single left-to-right pass with a reflect flag; the recursive
//! sequence construction lives in the tests as an independent oracle.

use crate::digits::Base;
use crate::error::{Error, Result};
use std::fmt;

/// A fixed-width base-b number, digit 0 most significant. Leading zeros are
/// significant; the width is the dimension it indexes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseBNumber {
    base: Base,
    digits: Vec<u8>,
}

impl BaseBNumber {
    pub fn new(base: Base, digits: Vec<u8>) -> Result<Self> {
        let radix = base.radix();
        if let Some(&bad) = digits.iter().find(|&&d| d >= radix) {
            return Err(Error::InvalidDigit { digit: (b'0' + bad) as char, base: radix });
        }
        Ok(BaseBNumber { base, digits })
    }

    pub fn zero(base: Base, width: usize) -> Self {
        BaseBNumber { base, digits: vec![0; width] }
    }

    /// The `index`-th `width`-digit base-b number.
    pub fn from_index(base: Base, width: usize, index: usize) -> Self {
        let radix = base.radix() as usize;
        let mut digits = vec![0u8; width];
        let mut rest = index;
        for slot in digits.iter_mut().rev() {
            *slot = (rest % radix) as u8;
            rest /= radix;
        }
        debug_assert_eq!(rest, 0, "index exceeds width");
        BaseBNumber { base, digits }
    }

    pub fn to_index(&self) -> usize {
        let radix = self.base.radix() as usize;
        self.digits.iter().fold(0, |acc, &d| acc * radix + d as usize)
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn width(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn digit(&self, i: usize) -> u8 {
        self.digits[i]
    }
}

impl fmt::Display for BaseBNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// `RGC^d(r)`: one pass over the digits, reflecting everything after an odd
/// digit. The test on the current digit uses its already-reflected value.
pub fn rgc_encode(r: &BaseBNumber) -> BaseBNumber {
    let radix = r.base().radix();
    let mut reflect = false;
    let digits = r
        .digits()
        .iter()
        .map(|&d| {
            let out = if reflect { radix - 1 - d } else { d };
            if out % 2 == 1 {
                reflect = !reflect;
            }
            out
        })
        .collect();
    BaseBNumber { base: r.base(), digits }
}

/// Inverse of [`rgc_encode`]: recovers the rank from a code word.
pub fn rgc_decode(c: &BaseBNumber) -> BaseBNumber {
    let radix = c.base().radix();
    let mut forward = true;
    let digits = c
        .digits()
        .iter()
        .map(|&d| {
            let out = if forward { d } else { radix - 1 - d };
            if d % 2 == 1 {
                forward = !forward;
            }
            out
        })
        .collect();
    BaseBNumber { base: c.base(), digits }
}

/// Removes digit `i`, shrinking the width by one.
pub fn take_out(x: &BaseBNumber, i: usize) -> Result<BaseBNumber> {
    if i >= x.width() {
        return Err(Error::IndexOutOfRange { index: i, len: x.width() });
    }
    let mut digits = x.digits.clone();
    digits.remove(i);
    Ok(BaseBNumber { base: x.base, digits })
}

/// Selects the elements with digit `i` equal to `j` and removes that digit
/// from each, preserving order.
pub fn reduce(seq: &[BaseBNumber], i: usize, j: u8) -> Result<Vec<BaseBNumber>> {
    seq.iter()
        .filter(|x| x.digit(i) == j)
        .map(|x| take_out(x, i))
        .collect()
}

/// Replaces digit `i` by its complement with respect to `base - 1`.
pub fn mirror_digit(x: &BaseBNumber, i: usize) -> Result<BaseBNumber> {
    if i >= x.width() {
        return Err(Error::IndexOutOfRange { index: i, len: x.width() });
    }
    let mut digits = x.digits.clone();
    digits[i] = x.base.radix() - 1 - digits[i];
    Ok(BaseBNumber { base: x.base, digits })
}

/// The full code sequence `RGC^d` in rank order.
pub fn rgc_sequence(base: Base, width: usize) -> Vec<BaseBNumber> {
    let count = (base.radix() as usize).pow(width as u32);
    (0..count)
        .map(|r| rgc_encode(&BaseBNumber::from_index(base, width, r)))
        .collect()
}
