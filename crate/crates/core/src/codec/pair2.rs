//! Pair-match embedding, the 2-bit predecessor of the group-match codec.
//!
//! Every secret pair consumes one payload component. If the pair equals the
//! component's bits 3-4 or 5-6 the component is left alone; otherwise the pair
//! is written verbatim into positions 7-8. A 2-bit index code per pair records
//! which case applied. Index codes live in their own region at the image tail,
//! code `k` in component `N - 1 - k`.

use super::{expect_header, header_length, Algorithm, Codec, EmbedStats, Embedded};
use crate::bitplane::{pairs_of_byte, read_lsb2, write_lsb2, BitSeq};
use crate::error::{Result, StegoError};
use crate::raster::{
    ensure_header_fits, index_layout, write_header_into, RgbRaster, StegoHeader, HEADER_COMPONENTS,
};

pub struct PairMatch;

/// Index code packed as `index1 * 2 + index2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairIndexCode {
    /// (0,0): positions 7-8 hold the pair itself.
    Literal = 0,
    /// (1,0): pair found at positions 3-4.
    First = 2,
    /// (1,1): pair found at positions 5-6.
    Second = 3,
}

impl PairIndexCode {
    pub fn value(self) -> u8 {
        self as u8
    }

    /// `None` for 1, which the codec never produces.
    pub fn from_value(value: u8) -> Option<Self> {
        match value {
            0 => Some(Self::Literal),
            2 => Some(Self::First),
            3 => Some(Self::Second),
            _ => None,
        }
    }
}

/// First pair wins when both interior pairs equal `pair`.
pub fn match_pairs(b: u8, pair: u8) -> PairIndexCode {
    let [p1, p2] = pairs_of_byte(b);
    if pair == p1 {
        PairIndexCode::First
    } else if pair == p2 {
        PairIndexCode::Second
    } else {
        PairIndexCode::Literal
    }
}

/// Largest number of pairs whose payload and index regions fit side by side.
fn max_pairs(n: usize) -> usize {
    (n - HEADER_COMPONENTS) / 2
}

impl Codec for PairMatch {
    const ALGORITHM: Algorithm = Algorithm::Pair2;

    fn embed(cover: &RgbRaster, secret: &BitSeq) -> Result<Embedded> {
        let header = StegoHeader::new(Self::ALGORITHM, header_length(secret)?);
        let n = cover.component_count();
        ensure_header_fits(n)?;
        let pairs = secret.pair_count();
        let exhausted = || StegoError::CapacityExhausted {
            placed_bits: 2 * max_pairs(n) as u64,
            required_bits: secret.len() as u64,
        };
        let (index, payload) = index_layout(n, 2 * pairs).map_err(|_| exhausted())?;
        if pairs > payload.len() {
            return Err(exhausted());
        }

        let mut stego = cover.clone();
        let components = stego.components_mut();
        write_header_into(components, header)?;

        let mut stats = EmbedStats {
            components_visited: pairs as u64,
            payload_bits_embedded: 2 * pairs as u64,
            index_components: index.len() as u64,
            ..Default::default()
        };
        for k in 0..pairs {
            let pair = secret.pair_at(k)?;
            let slot = payload.start + k;
            let code = match_pairs(components[slot], pair);
            match code {
                PairIndexCode::First => stats.matches[0] += 1,
                PairIndexCode::Second => stats.matches[1] += 1,
                PairIndexCode::Literal => {
                    stats.skips += 1;
                    components[slot] = write_lsb2(components[slot], pair);
                }
            }
            let tail = n - 1 - k;
            components[tail] = write_lsb2(components[tail], code.value());
        }
        Ok(Embedded { stego, stats })
    }

    fn extract(stego: &RgbRaster) -> Result<BitSeq> {
        let header = expect_header(stego, Self::ALGORITHM)?;
        let len = header.payload_bit_length as usize;
        let pairs = len.div_ceil(2);
        let components = stego.components();
        let n = components.len();
        if pairs > max_pairs(n) {
            return Err(StegoError::CorruptPayload(format!(
                "{pairs} pairs declared, image holds at most {}",
                max_pairs(n)
            )));
        }
        let mut out = BitSeq::with_capacity(2 * pairs);
        for k in 0..pairs {
            let c = components[HEADER_COMPONENTS + k];
            let raw = read_lsb2(components[n - 1 - k]);
            let pair = match PairIndexCode::from_value(raw) {
                Some(PairIndexCode::First) => pairs_of_byte(c)[0],
                Some(PairIndexCode::Second) => pairs_of_byte(c)[1],
                Some(PairIndexCode::Literal) => read_lsb2(c),
                None => {
                    return Err(StegoError::CorruptPayload(format!(
                        "index code {raw} for pair {k}"
                    )))
                }
            };
            out.push_value(pair, 2);
        }
        out.truncate(len);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bits(values: &[u8]) -> BitSeq {
        BitSeq::try_from(values).unwrap()
    }

    #[test]
    fn pair_codes() {
        assert_eq!(match_pairs(180, 3), PairIndexCode::First);
        assert_eq!(match_pairs(180, 1), PairIndexCode::Second);
        assert_eq!(match_pairs(180, 0), PairIndexCode::Literal);
        assert_eq!(match_pairs(0b0001_0100, 1), PairIndexCode::First);
        for b in 0..=255u8 {
            for pair in 0..4 {
                assert_ne!(match_pairs(b, pair).value(), 1);
            }
        }
        assert_eq!(PairIndexCode::from_value(1), None);
    }

    #[test]
    fn single_matched_pair() {
        let cover = RgbRaster::filled(4, 4, 180);
        let e = PairMatch::embed(&cover, &bits(&[1, 1])).unwrap();
        let c = e.stego.components();
        assert_eq!(c[28], 180);
        assert_eq!(read_lsb2(c[47]), 2);
        assert_eq!(&c[29..47], &cover.components()[29..47]);
        assert_eq!(e.stats.matches, [1, 0, 0]);
        assert_eq!(e.stats.index_components, 1);
        assert_eq!(PairMatch::extract(&e.stego).unwrap(), bits(&[1, 1]));
    }

    #[test]
    fn zero_pair_on_180() {
        let cover = RgbRaster::filled(4, 4, 180);
        let e = PairMatch::embed(&cover, &bits(&[0, 0])).unwrap();
        assert_eq!(e.stego.components()[28], 180);
        assert_eq!(read_lsb2(e.stego.components()[47]), 0);
        assert_eq!(e.stats.skips, 1);
        assert_eq!(PairMatch::extract(&e.stego).unwrap(), bits(&[0, 0]));
    }

    #[test]
    fn literal_overwrites_lsbs() {
        // pairs of 180 are (3, 1); pair 2 misses both.
        let e = PairMatch::embed(&RgbRaster::filled(4, 4, 180), &bits(&[1, 0])).unwrap();
        assert_eq!(e.stego.components()[28], 182);
        assert_eq!(PairMatch::extract(&e.stego).unwrap(), bits(&[1, 0]));
    }

    #[test]
    fn empty_secret_touches_header_only() {
        let cover = RgbRaster::from_fn(4, 4, |x, y, c| (x * 50 + y * 9 + c as u32) as u8);
        let e = PairMatch::embed(&cover, &BitSeq::new()).unwrap();
        assert_eq!(&e.stego.components()[28..], &cover.components()[28..]);
        assert!(PairMatch::extract(&e.stego).unwrap().is_empty());
    }

    #[test]
    fn capacity_limits() {
        // 48 components: 20 after the header, room for 10 pairs.
        let cover = RgbRaster::filled(4, 4, 99);
        assert!(PairMatch::embed(&cover, &BitSeq::from(vec![true; 20])).is_ok());
        assert!(matches!(
            PairMatch::embed(&cover, &BitSeq::from(vec![true; 21])),
            Err(StegoError::CapacityExhausted {
                placed_bits: 20,
                required_bits: 21
            })
        ));
    }

    #[test]
    fn tampered_index_code() {
        let mut e = PairMatch::embed(&RgbRaster::filled(4, 4, 180), &bits(&[1, 1, 0, 1])).unwrap();
        let last = e.stego.component_count() - 2;
        e.stego.components_mut()[last] = write_lsb2(e.stego.components()[last], 1);
        assert!(matches!(
            PairMatch::extract(&e.stego),
            Err(StegoError::CorruptPayload(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn round_trip_and_bounds(
            seed_components in proptest::collection::vec(any::<u8>(), 300..=300),
            raw in proptest::collection::vec(any::<bool>(), 0..=272),
        ) {
            let cover = RgbRaster::new(10, 10, seed_components).unwrap();
            let secret = BitSeq::from(raw);
            let e = PairMatch::embed(&cover, &secret).unwrap();
            prop_assert_eq!(PairMatch::extract(&e.stego).unwrap(), secret.clone());
            let pairs = secret.pair_count();
            let n = cover.component_count();
            for k in 0..pairs {
                let (a, b) = (cover.components()[28 + k], e.stego.components()[28 + k]);
                if match_pairs(a, secret.pair_at(k).unwrap()) != PairIndexCode::Literal {
                    prop_assert_eq!(a, b);
                }
            }
            for (&a, &b) in cover.components().iter().zip(e.stego.components()) {
                prop_assert!((a as i16 - b as i16).abs() <= 3);
                prop_assert_eq!(a >> 2, b >> 2);
            }
            prop_assert_eq!(&cover.components()[28 + pairs..n - pairs], &e.stego.components()[28 + pairs..n - pairs]);
        }
    }
}
