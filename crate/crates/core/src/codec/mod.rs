//! The three embedding schemes and what they have in common.

pub mod group3;
pub mod lsb1;
pub mod pair2;

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Zero;

use crate::bitplane::BitSeq;
use crate::error::{Result, StegoError};
use crate::raster::{read_header, RgbRaster, StegoHeader};
use crate::scalar::Real;

pub use group3::GroupMatch;
pub use lsb1::Lsb;
pub use pair2::{PairIndexCode, PairMatch};

/// Embedding scheme, identified in the stego header by its id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// One bit per component in position 8.
    Lsb1 = 1,
    /// 2-bit secret pairs matched against the pairs at positions 3-4 and 5-6.
    Pair2 = 2,
    /// 3-bit secret groups matched against three overlapping windows.
    Group3 = 3,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Group3, Algorithm::Pair2, Algorithm::Lsb1];

    pub fn id(self) -> u8 {
        self as u8
    }

    pub fn from_id(id: u8) -> Option<Self> {
        match id {
            1 => Some(Self::Lsb1),
            2 => Some(Self::Pair2),
            3 => Some(Self::Group3),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Lsb1 => "lsb1",
            Self::Pair2 => "pair2",
            Self::Group3 => "group3",
        }
    }

    pub fn embed(self, cover: &RgbRaster, secret: &BitSeq) -> Result<Embedded> {
        match self {
            Self::Lsb1 => Lsb::embed(cover, secret),
            Self::Pair2 => PairMatch::embed(cover, secret),
            Self::Group3 => GroupMatch::embed(cover, secret),
        }
    }

    pub fn extract(self, stego: &RgbRaster) -> Result<BitSeq> {
        match self {
            Self::Lsb1 => Lsb::extract(stego),
            Self::Pair2 => PairMatch::extract(stego),
            Self::Group3 => GroupMatch::extract(stego),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm {s:?}, expected group3, pair2 or lsb1"))
    }
}

/// A steganographic scheme over [`RgbRaster`] carriers.
pub trait Codec {
    const ALGORITHM: Algorithm;

    fn embed(cover: &RgbRaster, secret: &BitSeq) -> Result<Embedded>;

    fn extract(stego: &RgbRaster) -> Result<BitSeq>;
}

/// Reads the header and picks the codec it names.
pub fn extract_auto(stego: &RgbRaster) -> Result<(Algorithm, BitSeq)> {
    let header = read_header(stego)?;
    Ok((header.algorithm, header.algorithm.extract(stego)?))
}

#[derive(Clone, Debug)]
pub struct Embedded {
    pub stego: RgbRaster,
    pub stats: EmbedStats,
}

/// Counters for one embed.
///
/// For the group-match codec `matches[i]` counts components whose window
/// `i + 1` took a group and `skips` counts no-match components. The pair-match
/// codec uses `matches[0..2]` for its two pairs and `skips` for components
/// that received the pair verbatim. The LSB codec has no matching.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EmbedStats {
    pub components_visited: u64,
    pub matches: [u64; 3],
    pub skips: u64,
    pub payload_bits_embedded: u64,
    /// Tail components holding pair-match index codes.
    pub index_components: u64,
}

impl EmbedStats {
    pub fn total_matches(&self) -> u64 {
        self.matches.iter().sum()
    }

    /// Payload components visited plus index components.
    pub fn components_used(&self) -> u64 {
        self.components_visited + self.index_components
    }

    /// Exact payload bits per visited component; zero when nothing was visited.
    pub fn bits_per_component(&self) -> Ratio<u64> {
        if self.components_visited == 0 {
            Ratio::zero()
        } else {
            Ratio::new(self.payload_bits_embedded, self.components_visited)
        }
    }

    pub fn bits_per_component_as<T: Real>(&self) -> T {
        if self.components_visited == 0 {
            T::zero()
        } else {
            T::from_count(self.payload_bits_embedded) / T::from_count(self.components_visited)
        }
    }
}

/// Header length field for `secret`, or `CapacityExhausted` past 2^32 - 1 bits.
pub(crate) fn header_length(secret: &BitSeq) -> Result<u32> {
    u32::try_from(secret.len()).map_err(|_| StegoError::CapacityExhausted {
        placed_bits: u32::MAX as u64,
        required_bits: secret.len() as u64,
    })
}

/// Reads the header and checks it names `expected`.
pub(crate) fn expect_header(stego: &RgbRaster, expected: Algorithm) -> Result<StegoHeader> {
    let header = read_header(stego)?;
    if header.algorithm != expected {
        return Err(StegoError::AlgorithmMismatch {
            expected,
            found: header.algorithm,
        });
    }
    Ok(header)
}
