//! Real scalar abstraction used by the quality metrics.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating point type the metrics can be computed in: f32 or f64.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Lossy conversion from an exact integer count.
    fn from_count(n: u64) -> Self {
        Self::from_u64(n).expect("every u64 is representable as a float")
    }
}

impl Real for f32 {}
impl Real for f64 {}
