use std::fs;
use std::path::Path;

use image::{DynamicImage, ExtendedColorType, ImageError, ImageFormat};

use super::RgbRaster;
use crate::error::{Result, StegoError};

/// Reads an 8-bit PNG. Gray is expanded to R=G=B; alpha is kept aside.
pub fn load_png(path: impl AsRef<Path>) -> Result<RgbRaster> {
    let bytes = fs::read(path.as_ref())?;
    decode_png(&bytes)
}

pub(crate) fn decode_png(bytes: &[u8]) -> Result<RgbRaster> {
    let img = image::load_from_memory_with_format(bytes, ImageFormat::Png)
        .map_err(|e| StegoError::UnsupportedImageFormat(e.to_string()))?;
    let (width, height) = (img.width(), img.height());
    let (components, alpha) = match img {
        DynamicImage::ImageRgb8(buf) => (buf.into_raw(), None),
        DynamicImage::ImageRgba8(buf) => split_alpha(buf.as_raw(), 4, |px| [px[0], px[1], px[2]]),
        DynamicImage::ImageLuma8(buf) => {
            (buf.as_raw().iter().flat_map(|&l| [l, l, l]).collect(), None)
        }
        DynamicImage::ImageLumaA8(buf) => split_alpha(buf.as_raw(), 2, |px| [px[0], px[0], px[0]]),
        other => {
            return Err(StegoError::UnsupportedImageFormat(format!(
                "{:?} is not an 8-bit gray/RGB(A) layout",
                other.color()
            )))
        }
    };
    let raster = RgbRaster::new(width, height, components)?;
    match alpha {
        Some(a) => raster.with_alpha(a),
        None => Ok(raster),
    }
}

fn split_alpha(
    raw: &[u8],
    stride: usize,
    rgb: impl Fn(&[u8]) -> [u8; 3],
) -> (Vec<u8>, Option<Vec<u8>>) {
    let mut components = Vec::with_capacity(raw.len() / stride * 3);
    let mut alpha = Vec::with_capacity(raw.len() / stride);
    for px in raw.chunks_exact(stride) {
        components.extend(rgb(px));
        alpha.push(px[stride - 1]);
    }
    (components, Some(alpha))
}

/// Writes RGB, or RGBA when the raster carries an alpha plane.
pub fn save_png(raster: &RgbRaster, path: impl AsRef<Path>) -> Result<()> {
    let (data, color) = match raster.alpha() {
        None => (raster.components().to_vec(), ExtendedColorType::Rgb8),
        Some(alpha) => {
            let data = raster
                .components()
                .chunks_exact(3)
                .zip(alpha)
                .flat_map(|(rgb, &a)| [rgb[0], rgb[1], rgb[2], a])
                .collect();
            (data, ExtendedColorType::Rgba8)
        }
    };
    image::save_buffer_with_format(
        path.as_ref(),
        &data,
        raster.width(),
        raster.height(),
        color,
        ImageFormat::Png,
    )
    .map_err(|e| match e {
        ImageError::IoError(io) => StegoError::Io(io),
        other => StegoError::UnsupportedImageFormat(other.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use image::{GrayImage, ImageBuffer, Rgb, Rgba};

    #[test]
    fn rgb_round_trip_is_lossless() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.png");
        let r = RgbRaster::from_fn(512, 512, |x, y, ch| {
            (x * 7 + y * 13 + ch as u32 * 101) as u8
        });
        save_png(&r, &path).unwrap();
        let back = load_png(&path).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn gray_expands_to_rgb() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.png");
        GrayImage::from_fn(3, 2, |x, y| image::Luma([(x + 10 * y) as u8]))
            .save(&path)
            .unwrap();
        let r = load_png(&path).unwrap();
        assert_eq!(r.component_count(), 18);
        for px in r.components().chunks(3) {
            assert!(px[0] == px[1] && px[1] == px[2]);
        }
        assert_eq!(r.components()[3 * 4], 11);
        assert!(r.alpha().is_none());
    }

    #[test]
    fn alpha_passes_through() {
        let dir = tempfile::tempdir().unwrap();
        let src = dir.path().join("rgba.png");
        let out = dir.path().join("out.png");
        ImageBuffer::from_fn(4, 4, |x, y| Rgba([x as u8, y as u8, 9, (x * 40 + y) as u8]))
            .save(&src)
            .unwrap();
        let r = load_png(&src).unwrap();
        assert_eq!(r.alpha().unwrap()[5], 41);
        save_png(&r, &out).unwrap();
        let again = image::open(&out).unwrap().to_rgba8();
        assert_eq!(again.get_pixel(1, 1), &Rgba([1, 1, 9, 41]));
    }

    #[test]
    fn rejects_bad_inputs() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.png");
        ImageBuffer::from_fn(8, 8, |x, _| Rgb([x as u8; 3]))
            .save(&path)
            .unwrap();
        let bytes = fs::read(&path).unwrap();
        assert!(matches!(
            decode_png(&bytes[..bytes.len() / 2]),
            Err(StegoError::UnsupportedImageFormat(_))
        ));

        let wide = dir.path().join("16.png");
        ImageBuffer::<Rgb<u16>, _>::from_fn(2, 2, |_, _| Rgb([1000u16; 3]))
            .save(&wide)
            .unwrap();
        assert!(matches!(
            load_png(&wide),
            Err(StegoError::UnsupportedImageFormat(_))
        ));

        assert!(matches!(
            load_png(dir.path().join("missing.png")),
            Err(StegoError::Io(_))
        ));
    }
}
