//! Image steganography over 8-bit RGB rasters.
//!
//! Three codecs share one header and one component order:
//!
//! - [`GroupMatch`] matches 3-bit secret groups against three overlapping
//!   windows of each component and records the window number in its two LSBs.
//! - [`PairMatch`] matches 2-bit pairs against two interior pairs and keeps
//!   its index codes in a tail region.
//! - [`Lsb`] writes one bit per component.
//!
//! ```
//! use stegmatch_core::{Algorithm, BitSeq, RgbRaster, extract_auto};
//!
//! let cover = RgbRaster::from_fn(32, 32, |x, y, c| (x * 7 + y * 3 + c as u32 * 50) as u8);
//! let secret = BitSeq::from_octets(b"hello");
//! let embedded = Algorithm::Group3.embed(&cover, &secret).unwrap();
//! let (algo, bits) = extract_auto(&embedded.stego).unwrap();
//! assert_eq!(algo, Algorithm::Group3);
//! assert_eq!(bits.to_octets().unwrap(), b"hello");
//! ```

pub mod bitplane;
pub mod codec;
pub mod error;
pub mod metrics;
pub mod raster;
pub mod scalar;

pub use bitplane::BitSeq;
pub use codec::{extract_auto, Algorithm, Codec, EmbedStats, Embedded, GroupMatch, Lsb, PairMatch};
pub use error::{Result, StegoError};
pub use raster::{load_png, read_header, save_png, write_header, Region, RgbRaster, StegoHeader};
pub use scalar::Real;

pub type QualityReport64 = metrics::QualityReport<f64>;
pub type QualityReport32 = metrics::QualityReport<f32>;
