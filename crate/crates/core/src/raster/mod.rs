//! RGB raster model and the fixed component layout shared by all codecs.
//!
//! Components are walked in one total order: component `c` belongs to pixel
//! `c / 3` (row-major) and channel `c % 3` (0 = R, 1 = G, 2 = B). The first
//! [`HEADER_COMPONENTS`] components carry the [`StegoHeader`]; payload starts
//! right after. The pair-match codec additionally keeps an index region at the
//! tail of the image, filled backward from the last component.

mod header;
mod png;

pub use header::{read_header, write_header, StegoHeader, HEADER_BITS, HEADER_COMPONENTS, MAGIC};
pub use png::{load_png, save_png};

pub(crate) use header::write_header_into;

use crate::error::{Result, StegoError};

/// Width x height x 3 component array, 8 bits per component, row-major RGB.
///
/// An alpha plane read from an RGBA file rides along untouched. It is never
/// used as a carrier and never enters the quality metrics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RgbRaster {
    width: u32,
    height: u32,
    components: Vec<u8>,
    alpha: Option<Vec<u8>>,
}

impl RgbRaster {
    pub fn new(width: u32, height: u32, components: Vec<u8>) -> Result<Self> {
        let expected = component_count(width, height);
        if components.len() != expected {
            return Err(StegoError::CorruptPayload(format!(
                "{width}x{height} raster needs {expected} components, got {}",
                components.len()
            )));
        }
        Ok(Self {
            width,
            height,
            components,
            alpha: None,
        })
    }

    /// Raster with every component set to `value`.
    pub fn filled(width: u32, height: u32, value: u8) -> Self {
        Self {
            width,
            height,
            components: vec![value; component_count(width, height)],
            alpha: None,
        }
    }

    /// Builds a raster from `f(x, y, channel)`.
    pub fn from_fn(width: u32, height: u32, mut f: impl FnMut(u32, u32, usize) -> u8) -> Self {
        let mut components = Vec::with_capacity(component_count(width, height));
        for y in 0..height {
            for x in 0..width {
                for ch in 0..3 {
                    components.push(f(x, y, ch));
                }
            }
        }
        Self {
            width,
            height,
            components,
            alpha: None,
        }
    }

    /// Attaches an alpha plane, one byte per pixel.
    pub fn with_alpha(mut self, alpha: Vec<u8>) -> Result<Self> {
        let pixels = self.width as usize * self.height as usize;
        if alpha.len() != pixels {
            return Err(StegoError::CorruptPayload(format!(
                "alpha plane has {} entries for {pixels} pixels",
                alpha.len()
            )));
        }
        self.alpha = Some(alpha);
        Ok(self)
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn components(&self) -> &[u8] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn alpha(&self) -> Option<&[u8]> {
        self.alpha.as_deref()
    }

    pub fn into_components(self) -> Vec<u8> {
        self.components
    }

    pub(crate) fn components_mut(&mut self) -> &mut [u8] {
        &mut self.components
    }

    /// Maps a component index to `(x, y, channel)`.
    pub fn locate(&self, component: usize) -> Option<(u32, u32, usize)> {
        if component >= self.components.len() {
            return None;
        }
        let pixel = component / 3;
        let w = self.width as usize;
        Some(((pixel % w) as u32, (pixel / w) as u32, component % 3))
    }

    pub fn same_dimensions(&self, other: &RgbRaster) -> bool {
        self.width == other.width && self.height == other.height
    }
}

fn component_count(width: u32, height: u32) -> usize {
    3 * width as usize * height as usize
}

/// Half-open range of component indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Region {
    pub start: usize,
    pub end: usize,
}

impl Region {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn contains(&self, component: usize) -> bool {
        (self.start..self.end).contains(&component)
    }
}

/// Components after the header, up to the end of the image.
pub fn payload_region(raster: &RgbRaster) -> Result<Region> {
    let n = raster.component_count();
    ensure_header_fits(n)?;
    Ok(Region {
        start: HEADER_COMPONENTS,
        end: n,
    })
}

/// Tail region holding `index_bit_count` bits at two bits per component.
///
/// Returned together with the payload region it leaves in front of it.
pub fn index_region(raster: &RgbRaster, index_bit_count: usize) -> Result<(Region, Region)> {
    index_layout(raster.component_count(), index_bit_count)
}

pub(crate) fn index_layout(n: usize, index_bit_count: usize) -> Result<(Region, Region)> {
    ensure_header_fits(n)?;
    let needed = index_bit_count.div_ceil(2);
    let available = n - HEADER_COMPONENTS;
    if needed > available {
        return Err(StegoError::CapacityExhausted {
            placed_bits: 0,
            required_bits: index_bit_count as u64,
        });
    }
    let index = Region {
        start: n - needed,
        end: n,
    };
    let payload = Region {
        start: HEADER_COMPONENTS,
        end: index.start,
    };
    Ok((index, payload))
}

pub(crate) fn ensure_header_fits(n: usize) -> Result<()> {
    if n < HEADER_COMPONENTS {
        return Err(StegoError::ImageTooSmall {
            components: n,
            required: HEADER_COMPONENTS,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn traversal_is_row_major_rgb() {
        let r = RgbRaster::filled(4, 2, 0);
        assert_eq!(r.locate(0), Some((0, 0, 0)));
        assert_eq!(r.locate(5), Some((1, 0, 2)));
        assert_eq!(r.locate(12), Some((0, 1, 0)));
        assert_eq!(r.locate(23), Some((3, 1, 2)));
        assert_eq!(r.locate(24), None);

        let r = RgbRaster::from_fn(3, 2, |x, y, ch| (y * 30 + x * 3) as u8 + ch as u8);
        for (c, &v) in r.components().iter().enumerate() {
            assert_eq!(v as usize, (c / 3 / 3) * 30 + (c / 3 % 3) * 3 + c % 3);
        }
    }

    #[test]
    fn rejects_wrong_component_count() {
        assert!(RgbRaster::new(2, 2, vec![0; 11]).is_err());
        assert!(RgbRaster::filled(2, 2, 0).with_alpha(vec![0; 3]).is_err());
    }

    #[test]
    fn regions() {
        let r = RgbRaster::filled(10, 10, 0);
        assert_eq!(r.component_count(), 300);
        let (index, payload) = index_region(&r, 40).unwrap();
        assert_eq!(
            index,
            Region {
                start: 280,
                end: 300
            }
        );
        assert_eq!(
            payload,
            Region {
                start: 28,
                end: 280
            }
        );

        let (index, payload) = index_region(&r, 0).unwrap();
        assert!(index.is_empty());
        assert_eq!(payload, payload_region(&r).unwrap());

        let small = RgbRaster::filled(5, 4, 0);
        assert_eq!(small.component_count(), 60);
        assert!(matches!(
            index_region(&small, 80),
            Err(StegoError::CapacityExhausted { .. })
        ));
        assert!(matches!(
            payload_region(&RgbRaster::filled(3, 3, 0)),
            Err(StegoError::ImageTooSmall { components: 27, .. })
        ));
    }
}
