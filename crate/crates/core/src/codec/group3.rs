//! Group-match embedding: three secret bits per matching component.
//!
//! The secret is cut into 3-bit groups. Each payload component offers three
//! overlapping windows (positions 2-4, 3-5, 4-6). When the current group
//! equals a window, the window number 1..=3 is written into positions 7-8 and
//! the next group becomes current. Otherwise code 0 is written, the component
//! is skipped, and the same group is tried on the next component. Windows never
//! overlap positions 7-8, so the receiver reads each code and looks the group
//! back up in the window it names.

use super::{expect_header, header_length, Algorithm, Codec, EmbedStats, Embedded};
use crate::bitplane::{read_lsb2, windows_of_byte, write_lsb2, BitSeq};
use crate::error::{Result, StegoError};
use crate::raster::{
    ensure_header_fits, write_header_into, RgbRaster, StegoHeader, HEADER_COMPONENTS,
};

pub struct GroupMatch;

/// Code for `group` against `b`: window number 1..=3, first match wins, or 0.
#[inline]
pub fn try_match_byte(b: u8, group: u8) -> u8 {
    windows_of_byte(b)
        .iter()
        .position(|&w| w == group)
        .map_or(0, |i| i as u8 + 1)
}

/// Secret bits the raster carries when every payload component matches.
pub fn capacity_best_case(raster: &RgbRaster) -> Result<u64> {
    ensure_header_fits(raster.component_count())?;
    Ok(3 * (raster.component_count() - HEADER_COMPONENTS) as u64)
}

impl Codec for GroupMatch {
    const ALGORITHM: Algorithm = Algorithm::Group3;

    fn embed(cover: &RgbRaster, secret: &BitSeq) -> Result<Embedded> {
        let header = StegoHeader::new(Self::ALGORITHM, header_length(secret)?);
        let mut stego = cover.clone();
        let components = stego.components_mut();
        write_header_into(components, header)?;

        let groups = secret.group_count();
        let mut stats = EmbedStats::default();
        let mut cursor = 0;
        for c in &mut components[HEADER_COMPONENTS..] {
            if cursor == groups {
                break;
            }
            let group = secret.group_at(cursor)?;
            let code = try_match_byte(*c, group);
            *c = write_lsb2(*c, code);
            stats.components_visited += 1;
            match code {
                0 => stats.skips += 1,
                n => {
                    stats.matches[n as usize - 1] += 1;
                    stats.payload_bits_embedded += 3;
                    cursor += 1;
                }
            }
        }
        if cursor < groups {
            return Err(StegoError::CapacityExhausted {
                placed_bits: stats.payload_bits_embedded,
                required_bits: 3 * groups as u64,
            });
        }
        Ok(Embedded { stego, stats })
    }

    fn extract(stego: &RgbRaster) -> Result<BitSeq> {
        let header = expect_header(stego, Self::ALGORITHM)?;
        let len = header.payload_bit_length as usize;
        let groups = len.div_ceil(3);
        let mut out = BitSeq::with_capacity(3 * groups);
        let mut found = 0;
        for &c in &stego.components()[HEADER_COMPONENTS..] {
            if found == groups {
                break;
            }
            match read_lsb2(c) {
                0 => continue,
                n => {
                    out.push_value(windows_of_byte(c)[n as usize - 1], 3);
                    found += 1;
                }
            }
        }
        if found < groups {
            return Err(StegoError::CorruptPayload(format!(
                "image ended after {found} of {groups} groups"
            )));
        }
        out.truncate(len);
        Ok(out)
    }
}
