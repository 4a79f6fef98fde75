//! Bit numbering, payload bit streams, and the per-byte primitives the codecs
//! share.
//!
//! Bit positions inside a component byte are numbered 1..=8 starting from the
//! most significant bit: position 1 is the MSB, position 8 the LSB. So
//! `bit_at(b, p) == (b >> (8 - p)) & 1`.
//!
//! The group-match codec reads three overlapping 3-bit windows at positions
//! {2,3,4}, {3,4,5} and {4,5,6}; the pair-match codec reads the pairs {3,4}
//! and {5,6}. Positions 7 and 8 carry codes and literals and are never part
//! of a window or pair.

use crate::error::{Result, StegoError};

/// Value of bit `position` (1 = MSB, 8 = LSB) of `byte`.
#[inline]
pub fn bit_at(byte: u8, position: u32) -> u8 {
    debug_assert!((1..=8).contains(&position));
    (byte >> (8 - position)) & 1
}

/// Ordered sequence of secret bits. Octets expand MSB first.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitSeq {
    bits: Vec<bool>,
}

impl BitSeq {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Self {
            bits: Vec::with_capacity(bits),
        }
    }

    /// Expands each octet into eight bits, most significant first.
    pub fn from_octets(data: &[u8]) -> Self {
        let bits = data
            .iter()
            .flat_map(|&octet| (1..=8).map(move |p| bit_at(octet, p) == 1))
            .collect();
        Self { bits }
    }

    /// Packs the bits back into octets. The length must be a multiple of 8.
    pub fn to_octets(&self) -> Result<Vec<u8>> {
        if !self.bits.len().is_multiple_of(8) {
            return Err(StegoError::InvalidPayloadLength {
                bits: self.bits.len(),
            });
        }
        Ok(self
            .bits
            .chunks_exact(8)
            .map(|chunk| chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8))
            .collect())
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<bool> {
        self.bits.get(index).copied()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    /// Appends the low `width` bits of `value`, most significant first.
    pub fn push_value(&mut self, value: u8, width: u32) {
        for shift in (0..width).rev() {
            self.bits.push((value >> shift) & 1 == 1);
        }
    }

    pub fn truncate(&mut self, len: usize) {
        self.bits.truncate(len);
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.bits.iter().copied()
    }

    /// Number of 3-bit groups, counting a zero-padded final group.
    pub fn group_count(&self) -> usize {
        self.bits.len().div_ceil(3)
    }

    /// Number of 2-bit pairs, counting a zero-padded final pair.
    pub fn pair_count(&self) -> usize {
        self.bits.len().div_ceil(2)
    }

    /// The `index`-th 3-bit group as 0..=7. Missing trailing bits read as 0.
    pub fn group_at(&self, index: usize) -> Result<u8> {
        self.chunk_at(index, 3, self.group_count())
    }

    /// The `index`-th 2-bit pair as 0..=3. Missing trailing bits read as 0.
    pub fn pair_at(&self, index: usize) -> Result<u8> {
        self.chunk_at(index, 2, self.pair_count())
    }

    fn chunk_at(&self, index: usize, width: usize, count: usize) -> Result<u8> {
        if index >= count {
            return Err(StegoError::IndexOutOfRange { index, len: count });
        }
        let start = index * width;
        Ok((start..start + width).fold(0u8, |acc, i| {
            (acc << 1) | self.bits.get(i).copied().unwrap_or(false) as u8
        }))
    }
}

impl std::fmt::Debug for BitSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitSeq[")?;
        for b in &self.bits {
            write!(f, "{}", *b as u8)?;
        }
        write!(f, "]")
    }
}

impl FromIterator<bool> for BitSeq {
    fn from_iter<I: IntoIterator<Item = bool>>(iter: I) -> Self {
        Self {
            bits: iter.into_iter().collect(),
        }
    }
}

impl From<Vec<bool>> for BitSeq {
    fn from(bits: Vec<bool>) -> Self {
        Self { bits }
    }
}

impl TryFrom<&[u8]> for BitSeq {
    type Error = StegoError;

    /// Builds a sequence from explicit 0/1 values.
    fn try_from(values: &[u8]) -> Result<Self> {
        values
            .iter()
            .enumerate()
            .map(|(i, &v)| match v {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(StegoError::CorruptPayload(format!(
                    "bit {i} has value {v}, expected 0 or 1"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from)
    }
}

/// The three overlapping 3-bit windows at positions 2-4, 3-5 and 4-6.
#[inline]
pub fn windows_of_byte(b: u8) -> [u8; 3] {
    [(b >> 4) & 0b111, (b >> 3) & 0b111, (b >> 2) & 0b111]
}

/// The two interior pairs at positions 3-4 and 5-6.
#[inline]
pub fn pairs_of_byte(b: u8) -> [u8; 2] {
    [(b >> 4) & 0b11, (b >> 2) & 0b11]
}

/// Replaces positions 7-8 with `code`.
#[inline]
pub fn write_lsb2(b: u8, code: u8) -> u8 {
    debug_assert!(code < 4);
    (b & !0b11) | (code & 0b11)
}

#[inline]
pub fn read_lsb2(b: u8) -> u8 {
    b & 0b11
}

/// Replaces position 8 with `bit`.
#[inline]
pub fn write_lsb1(b: u8, bit: u8) -> u8 {
    debug_assert!(bit < 2);
    (b & !1) | (bit & 1)
}

#[inline]
pub fn read_lsb1(b: u8) -> u8 {
    b & 1
}
