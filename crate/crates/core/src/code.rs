//! Binary words and linear binary block codes.
//!
//! A [`BitVector`] of length `N` stores coordinate 1 in its most significant
//! used bit, so the integer order of the backing word coincides with the
//! lexicographic order of the written bitstring (`101 < 110`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub const MAX_LENGTH: usize = 64;

/// Largest dimension for which codewords are enumerated explicitly.
pub const MAX_ENUMERATION_DIMENSION: usize = 24;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: u8,
    bits: u64,
}

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BitVector {
    pub fn zero(len: usize) -> Result<Self> {
        Self::from_bits(len, 0)
    }

    /// Builds a vector from its integer value (coordinate 1 is the most significant bit).
    pub fn from_bits(len: usize, bits: u64) -> Result<Self> {
        if len == 0 || len > MAX_LENGTH {
            return Err(Error::BadLength(len));
        }
        if bits & !mask(len) != 0 {
            return Err(Error::OutOfRange(format!(
                "value {bits:#x} does not fit in {len} bits"
            )));
        }
        Ok(Self {
            len: len as u8,
            bits,
        })
    }

    /// The standard basis vector `e_i`, `i` in `1..=len`.
    pub fn unit(len: usize, i: usize) -> Result<Self> {
        if i == 0 || i > len {
            return Err(Error::OutOfRange(format!("coordinate {i} of length {len}")));
        }
        Self::from_bits(len, 1u64 << (len - i))
    }

    pub fn ones(len: usize) -> Result<Self> {
        Self::from_bits(len, mask(len))
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Coordinate `i` (1-based).
    pub fn get(&self, i: usize) -> bool {
        assert!(i >= 1 && i <= self.len(), "coordinate {i} out of range");
        self.bits >> (self.len() - i) & 1 == 1
    }

    /// Coordinates equal to 1, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.get(i)).collect()
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self {
            len: self.len,
            bits: self.bits ^ other.bits,
        })
    }

    pub fn and(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(Self {
            len: self.len,
            bits: self.bits & other.bits,
        })
    }

    /// Flips coordinate `i`.
    pub fn flip(&self, i: usize) -> Self {
        assert!(i >= 1 && i <= self.len(), "coordinate {i} out of range");
        Self {
            len: self.len,
            bits: self.bits ^ (1u64 << (self.len() - i)),
        }
    }

    pub(crate) fn with_bits(&self, bits: u64) -> Self {
        debug_assert_eq!(bits & !mask(self.len()), 0);
        Self {
            len: self.len,
            bits,
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s.len() > MAX_LENGTH {
            return Err(Error::BadBitstring(s.to_string()));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                _ => return Err(Error::BadBitstring(s.to_string())),
            }
        }
        Self::from_bits(s.len(), bits)
    }
}

/// `(wt(x1 + x2), wt(x1) + wt(x2), wt(x1 & x2))`.
///
/// The three values always satisfy `wt(x1 + x2) = wt(x1) + wt(x2) - 2 wt(x1 & x2)`.
pub fn weight_sum_identity(x1: &BitVector, x2: &BitVector) -> Result<(usize, usize, usize)> {
    let sum = x1.xor(x2)?.weight();
    let parts = x1.weight() + x2.weight();
    let overlap = x1.and(x2)?.weight();
    debug_assert_eq!(sum + 2 * overlap, parts);
    Ok((sum, parts, overlap))
}

/// A linear code, stored by its reduced row-echelon basis.
///
/// Rows are ordered by pivot coordinate; each pivot is the leading
/// coordinate of its row and is zero in every other row, so two codes are
/// equal exactly when their stored bases are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    len: usize,
    basis: Vec<BitVector>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CodeClass {
    pub has_weight_1_or_2: bool,
    pub even: bool,
    pub doubly_even: bool,
}

impl LinearCode {
    pub fn zero(len: usize) -> Result<Self> {
        if len == 0 || len > MAX_LENGTH {
            return Err(Error::BadLength(len));
        }
        Ok(Self {
            len,
            basis: Vec::new(),
        })
    }

    /// The code spanned by `vectors`, all of length `len`.
    pub fn span(len: usize, vectors: &[BitVector]) -> Result<Self> {
        let mut code = Self::zero(len)?;
        for v in vectors {
            if v.len() != len {
                return Err(Error::LengthMismatch(len, v.len()));
            }
            code.insert(*v);
        }
        Ok(code)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    /// Bit mask of the pivot coordinates.
    pub fn pivot_mask(&self) -> u64 {
        self.basis.iter().fold(0, |m, r| m | leading_bit(r.bits))
    }

    /// Clears every pivot coordinate of `bits`; the result is the smallest
    /// member of the coset `bits + C`.
    pub fn reduce_bits(&self, mut bits: u64) -> u64 {
        for row in &self.basis {
            if bits & leading_bit(row.bits) != 0 {
                bits ^= row.bits;
            }
        }
        bits
    }

    pub fn reduce(&self, v: &BitVector) -> BitVector {
        v.with_bits(self.reduce_bits(v.bits))
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.len && self.reduce_bits(v.bits) == 0
    }

    fn insert(&mut self, v: BitVector) {
        let r = self.reduce_bits(v.bits);
        if r == 0 {
            return;
        }
        let lead = leading_bit(r);
        for row in &mut self.basis {
            if row.bits & lead != 0 {
                row.bits ^= r;
            }
        }
        self.basis.push(v.with_bits(r));
        self.basis.sort_by_key(|b| std::cmp::Reverse(b.bits));
    }

    /// All `2^k` codewords in ascending integer order (the zero word first).
    pub fn codewords(&self) -> Result<Vec<BitVector>> {
        let k = self.dimension();
        if k > MAX_ENUMERATION_DIMENSION {
            return Err(Error::DimensionTooLarge(k));
        }
        let mut words: Vec<BitVector> = (0u64..1 << k)
            .map(|mask| {
                let bits = self
                    .basis
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .fold(0, |acc, (_, r)| acc ^ r.bits);
                BitVector {
                    len: self.len as u8,
                    bits,
                }
            })
            .collect();
        words.sort();
        Ok(words)
    }

    /// Weight flags of the code: by enumeration when `k <= 24`, otherwise
    /// from the basis.
    pub fn classify(&self) -> CodeClass {
        if self.dimension() <= MAX_ENUMERATION_DIMENSION {
            self.classify_by_enumeration()
                .expect("dimension checked against enumeration limit")
        } else {
            self.classify_by_basis()
        }
    }

    pub fn classify_by_enumeration(&self) -> Result<CodeClass> {
        let words = self.codewords()?;
        let has_weight_1_or_2 = words.iter().any(|w| matches!(w.weight(), 1 | 2));
        let even = words.iter().all(|w| w.weight() % 2 == 0);
        let doubly_even = words.iter().all(|w| w.weight() % 4 == 0);
        Ok(CodeClass {
            has_weight_1_or_2,
            even,
            doubly_even,
        })
    }

    /// Basis-only classification.
    ///
    /// Doubly even iff every basis row has weight divisible by 4 and every
    /// pair of rows overlaps in an even number of coordinates. Low-weight
    /// words are found by membership tests of all `e_i` and `e_i + e_j`.
    pub fn classify_by_basis(&self) -> CodeClass {
        let even = self.basis.iter().all(|r| r.weight() % 2 == 0);
        let doubly_even = self.basis.iter().all(|r| r.weight() % 4 == 0)
            && self.basis.iter().enumerate().all(|(a, r)| {
                self.basis[a + 1..]
                    .iter()
                    .all(|s| (r.bits & s.bits).count_ones() % 2 == 0)
            });
        let mut has_weight_1_or_2 = false;
        'outer: for i in 0..self.len {
            let ei = 1u64 << i;
            if self.reduce_bits(ei) == 0 {
                has_weight_1_or_2 = true;
                break;
            }
            for j in i + 1..self.len {
                if self.reduce_bits(ei | 1u64 << j) == 0 {
                    has_weight_1_or_2 = true;
                    break 'outer;
                }
            }
        }
        CodeClass {
            has_weight_1_or_2,
            even,
            doubly_even,
        }
    }

    /// First codeword of weight 1 or 2 in ascending order, if any.
    pub fn low_weight_codeword(&self) -> Option<BitVector> {
        let mut found: Vec<u64> = Vec::new();
        for i in 0..self.len {
            let ei = 1u64 << i;
            if self.reduce_bits(ei) == 0 {
                found.push(ei);
            }
            for j in i + 1..self.len {
                if self.reduce_bits(ei | 1u64 << j) == 0 {
                    found.push(ei | 1u64 << j);
                }
            }
        }
        found.into_iter().min().map(|bits| BitVector {
            len: self.len as u8,
            bits,
        })
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearCode")
            .field("len", &self.len)
            .field(
                "basis",
                &self.basis.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            )
            .finish()
    }
}

fn leading_bit(bits: u64) -> u64 {
    if bits == 0 {
        0
    } else {
        1u64 << (63 - bits.leading_zeros())
    }
}

/// Canonical basis of the span of `vectors`.
pub fn rref_basis(vectors: &[BitVector]) -> Result<LinearCode> {
    let len = vectors.first().ok_or(Error::EmptyLength)?.len();
    LinearCode::span(len, vectors)
}

/// Staggered generator rows of `d_{2n}`: `n - 1` quartets of ones, each
/// shifted two places right of the previous.
pub fn d2n_generators(n: usize) -> Result<Vec<BitVector>> {
    if !(3..=MAX_LENGTH / 2).contains(&n) {
        return Err(Error::OutOfRange(format!("d_2n needs 3 <= n <= 32, got {n}")));
    }
    let len = 2 * n;
    (0..n - 1)
        .map(|j| BitVector::from_bits(len, 0b1111u64 << (len - 4 - 2 * j)))
        .collect()
}

/// The doubly even code `d_{2n}` of length `2n` and dimension `n - 1`.
pub fn d2n_family(n: usize) -> Result<LinearCode> {
    LinearCode::span(2 * n, &d2n_generators(n)?)
}

/// Parses the plain-text code format: one bitstring per line, `#` comments.
///
/// Returns the listed vectors; an empty list is valid.
pub fn parse_code_file(text: &str) -> Result<Vec<BitVector>> {
    let mut out: Vec<BitVector> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let v: BitVector = line.parse().map_err(|e: Error| Error::Parse {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        if let Some(first) = out.first() {
            if first.len() != v.len() {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("length {} differs from {}", v.len(), first.len()),
                });
            }
        }
        out.push(v);
    }
    Ok(out)
}

pub const MAX_CENSUS_LENGTH: usize = 8;

/// Every linear code of length `len`, each exactly once, by enumerating
/// reduced row echelon forms.
pub fn all_codes(len: usize) -> Result<Vec<LinearCode>> {
    if !(1..=MAX_CENSUS_LENGTH).contains(&len) {
        return Err(Error::OutOfRange(format!(
            "code census needs 1 <= length <= {MAX_CENSUS_LENGTH}, got {len}"
        )));
    }
    let mut out = Vec::new();
    // pivot sets as bitmasks over coordinates, bit `len - i` for coordinate `i`
    for pivots in 0u64..(1 << len) {
        let pivot_list: Vec<u32> = (0..len as u32).rev().filter(|b| pivots >> b & 1 == 1).collect();
        // free slots of each row: non-pivot bits below its pivot
        let slots: Vec<Vec<u32>> = pivot_list
            .iter()
            .map(|&p| (0..p).filter(|b| pivots >> b & 1 == 0).collect())
            .collect();
        let total: u32 = slots.iter().map(|s| s.len() as u32).sum();
        for fill in 0u64..(1 << total) {
            let mut bit = 0;
            let rows = pivot_list
                .iter()
                .zip(&slots)
                .map(|(&p, free)| {
                    let mut row = 1u64 << p;
                    for &b in free {
                        if fill >> bit & 1 == 1 {
                            row |= 1 << b;
                        }
                        bit += 1;
                    }
                    BitVector::from_bits(len, row)
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(LinearCode::span(len, &rows)?);
        }
    }
    Ok(out)
}

pub fn format_code(code: &LinearCode) -> String {
    let mut s = format!("# length {} dimension {}\n", code.len(), code.dimension());
    for row in code.basis() {
        s.push_str(&row.to_string());
        s.push('\n');
    }
    s
}
