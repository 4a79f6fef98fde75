use thiserror::Error;

use crate::codec::Algorithm;

/// Everything that can go wrong while embedding, extracting or measuring.
#[derive(Debug, Error)]
pub enum StegoError {
    #[error("payload of {bits} bits is not a whole number of octets")]
    InvalidPayloadLength { bits: usize },

    #[error("index {index} out of range for {len} units")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("image has {components} components, at least {required} are needed")]
    ImageTooSmall { components: usize, required: usize },

    #[error("image does not carry a stego header")]
    NotAStegoImage,

    #[error("unsupported algorithm id {0}")]
    UnsupportedAlgorithm(u8),

    #[error("header names algorithm {found}, expected {expected}")]
    AlgorithmMismatch {
        expected: Algorithm,
        found: Algorithm,
    },

    /// The carrier ran out of room; `placed_bits` of `required_bits` made it in.
    #[error("capacity exhausted: placed {placed_bits} of {required_bits} bits")]
    CapacityExhausted {
        placed_bits: u64,
        required_bits: u64,
    },

    #[error("corrupt payload: {0}")]
    CorruptPayload(String),

    #[error("image dimensions differ: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(u32, u32, u32, u32),

    #[error("unsupported image format: {0}")]
    UnsupportedImageFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = StegoError> = std::result::Result<T, E>;
