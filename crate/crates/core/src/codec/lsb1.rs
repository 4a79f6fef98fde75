//! Plain one-bit LSB insertion, the capacity yardstick.

use super::{expect_header, header_length, Algorithm, Codec, EmbedStats, Embedded};
use crate::bitplane::{read_lsb1, write_lsb1, BitSeq};
use crate::error::{Result, StegoError};
use crate::raster::{
    ensure_header_fits, write_header_into, RgbRaster, StegoHeader, HEADER_COMPONENTS,
};

pub struct Lsb;

impl Codec for Lsb {
    const ALGORITHM: Algorithm = Algorithm::Lsb1;

    fn embed(cover: &RgbRaster, secret: &BitSeq) -> Result<Embedded> {
        let header = StegoHeader::new(Self::ALGORITHM, header_length(secret)?);
        let n = cover.component_count();
        ensure_header_fits(n)?;
        let capacity = n - HEADER_COMPONENTS;
        if secret.len() > capacity {
            return Err(StegoError::CapacityExhausted {
                placed_bits: capacity as u64,
                required_bits: secret.len() as u64,
            });
        }
        let mut stego = cover.clone();
        let components = stego.components_mut();
        write_header_into(components, header)?;
        for (c, bit) in components[HEADER_COMPONENTS..]
            .iter_mut()
            .zip(secret.iter())
        {
            *c = write_lsb1(*c, bit as u8);
        }
        let stats = EmbedStats {
            components_visited: secret.len() as u64,
            payload_bits_embedded: secret.len() as u64,
            ..Default::default()
        };
        Ok(Embedded { stego, stats })
    }

    fn extract(stego: &RgbRaster) -> Result<BitSeq> {
        let header = expect_header(stego, Self::ALGORITHM)?;
        let len = header.payload_bit_length as usize;
        let payload = &stego.components()[HEADER_COMPONENTS..];
        if len > payload.len() {
            return Err(StegoError::CorruptPayload(format!(
                "{len} bits declared, {} components available",
                payload.len()
            )));
        }
        Ok(payload[..len].iter().map(|&c| read_lsb1(c) == 1).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raster::write_header;
    use proptest::prelude::*;

    #[test]
    fn one_bit() {
        let cover = RgbRaster::filled(4, 4, 180);
        let secret = BitSeq::from(vec![true]);
        let e = Lsb::embed(&cover, &secret).unwrap();
        assert_eq!(e.stego.components()[28], 181);
        assert_eq!(&e.stego.components()[29..], &cover.components()[29..]);
        assert_eq!(Lsb::extract(&e.stego).unwrap(), secret);
    }

    #[test]
    fn empty_and_overflow() {
        let cover = RgbRaster::filled(4, 4, 7);
        let e = Lsb::embed(&cover, &BitSeq::new()).unwrap();
        assert_eq!(&e.stego.components()[28..], &cover.components()[28..]);
        assert!(Lsb::embed(&cover, &BitSeq::from(vec![false; 20])).is_ok());
        assert!(matches!(
            Lsb::embed(&cover, &BitSeq::from(vec![false; 21])),
            Err(StegoError::CapacityExhausted {
                placed_bits: 20,
                required_bits: 21
            })
        ));
    }

    #[test]
    fn absurd_declared_length() {
        let stego = write_header(
            &RgbRaster::filled(4, 4, 0),
            StegoHeader::new(Algorithm::Lsb1, 1_000_000_000),
        )
        .unwrap();
        assert!(matches!(
            Lsb::extract(&stego),
            Err(StegoError::CorruptPayload(_))
        ));
    }

    proptest! {
        #[test]
        fn round_trip(
            seed_components in proptest::collection::vec(any::<u8>(), 192..=192),
            raw in proptest::collection::vec(any::<bool>(), 0..=164),
        ) {
            let cover = RgbRaster::new(8, 8, seed_components).unwrap();
            let secret = BitSeq::from(raw);
            let e = Lsb::embed(&cover, &secret).unwrap();
            prop_assert_eq!(Lsb::extract(&e.stego).unwrap(), secret);
            for (&a, &b) in cover.components()[28..].iter().zip(&e.stego.components()[28..]) {
                prop_assert!((a as i16 - b as i16).abs() <= 1);
                prop_assert_eq!(a >> 1, b >> 1);
            }
        }
    }
}
