//! The 56-bit stego header.
//!
//! Wire layout, MSB first: bits 0..16 magic `0x5347` ("SG"), bits 16..24
//! algorithm id, bits 24..56 payload bit length (big-endian). The bits are
//! stored two per component in positions 7-8 of components 0..28.

use super::{ensure_header_fits, RgbRaster};
use crate::bitplane::{read_lsb2, write_lsb2};
use crate::codec::Algorithm;
use crate::error::{Result, StegoError};

pub const MAGIC: u16 = 0x5347;
pub const HEADER_BITS: usize = 56;
pub const HEADER_COMPONENTS: usize = HEADER_BITS / 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StegoHeader {
    pub algorithm: Algorithm,
    /// Exact secret length in bits, before any group/pair padding.
    pub payload_bit_length: u32,
}

impl StegoHeader {
    pub fn new(algorithm: Algorithm, payload_bit_length: u32) -> Self {
        Self {
            algorithm,
            payload_bit_length,
        }
    }

    fn to_word(self) -> u64 {
        (MAGIC as u64) << 40 | (self.algorithm.id() as u64) << 32 | self.payload_bit_length as u64
    }

    /// The 28 two-bit codes in component order.
    pub fn codes(self) -> [u8; HEADER_COMPONENTS] {
        let word = self.to_word();
        std::array::from_fn(|i| ((word >> (HEADER_BITS - 2 - 2 * i)) & 0b11) as u8)
    }
}

pub fn write_header(raster: &RgbRaster, header: StegoHeader) -> Result<RgbRaster> {
    let mut out = raster.clone();
    write_header_into(out.components_mut(), header)?;
    Ok(out)
}

pub(crate) fn write_header_into(components: &mut [u8], header: StegoHeader) -> Result<()> {
    ensure_header_fits(components.len())?;
    for (c, code) in components.iter_mut().zip(header.codes()) {
        *c = write_lsb2(*c, code);
    }
    Ok(())
}

pub fn read_header(raster: &RgbRaster) -> Result<StegoHeader> {
    let components = raster.components();
    ensure_header_fits(components.len())?;
    let word = components[..HEADER_COMPONENTS]
        .iter()
        .fold(0u64, |acc, &c| (acc << 2) | read_lsb2(c) as u64);
    if (word >> 40) as u16 != MAGIC {
        return Err(StegoError::NotAStegoImage);
    }
    let id = (word >> 32) as u8;
    let algorithm = Algorithm::from_id(id).ok_or(StegoError::UnsupportedAlgorithm(id))?;
    Ok(StegoHeader {
        algorithm,
        payload_bit_length: word as u32,
    })
}
