//! MSE and PSNR between a cover and a stego raster.
//!
//! The squared error is summed over every R, G and B component and divided by
//! `3 * width * height`. Alpha is ignored. PSNR uses a peak of 255 and is
//! `+inf` for identical rasters.

use crate::error::{Result, StegoError};
use crate::raster::RgbRaster;
use crate::scalar::Real;

/// Peak component value of 8-bit samples.
pub const MAX_COMPONENT: u8 = 255;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QualityReport<T> {
    pub mse: T,
    /// `+inf` when the rasters are identical.
    pub psnr_db: T,
    pub max_component_delta: u8,
    pub components_changed: u64,
}

fn check_dimensions(a: &RgbRaster, b: &RgbRaster) -> Result<()> {
    if !a.same_dimensions(b) {
        return Err(StegoError::DimensionMismatch(
            a.width(),
            a.height(),
            b.width(),
            b.height(),
        ));
    }
    Ok(())
}

fn squared_error_sum(a: &RgbRaster, b: &RgbRaster) -> u64 {
    a.components()
        .iter()
        .zip(b.components())
        .map(|(&x, &y)| {
            let d = x.abs_diff(y) as u64;
            d * d
        })
        .sum()
}

fn mean<T: Real>(sum: u64, count: usize) -> T {
    if count == 0 {
        T::zero()
    } else {
        T::from_count(sum) / T::from_count(count as u64)
    }
}

pub fn mse<T: Real>(a: &RgbRaster, b: &RgbRaster) -> Result<T> {
    check_dimensions(a, b)?;
    Ok(mean(squared_error_sum(a, b), a.component_count()))
}

pub fn psnr<T: Real>(a: &RgbRaster, b: &RgbRaster) -> Result<T> {
    mse(a, b).map(psnr_from_mse)
}

/// `10 * log10(MAX^2 / mse)`.
pub fn psnr_from_mse<T: Real>(mse: T) -> T {
    if mse.is_zero() {
        return T::infinity();
    }
    let peak = T::from_u8(MAX_COMPONENT).unwrap();
    T::from_u8(10).unwrap() * (peak * peak / mse).log10()
}

/// `20 * log10(MAX / sqrt(mse))`, the amplitude form of the same quantity.
pub fn psnr_from_rmse<T: Real>(mse: T) -> T {
    if mse.is_zero() {
        return T::infinity();
    }
    let peak = T::from_u8(MAX_COMPONENT).unwrap();
    T::from_u8(20).unwrap() * (peak / mse.sqrt()).log10()
}

pub fn quality_report<T: Real>(cover: &RgbRaster, stego: &RgbRaster) -> Result<QualityReport<T>> {
    check_dimensions(cover, stego)?;
    let mut sum = 0u64;
    let mut max_delta = 0u8;
    let mut changed = 0u64;
    for (&x, &y) in cover.components().iter().zip(stego.components()) {
        let d = x.abs_diff(y);
        if d != 0 {
            changed += 1;
            max_delta = max_delta.max(d);
            sum += d as u64 * d as u64;
        }
    }
    let mse = mean(sum, cover.component_count());
    Ok(QualityReport {
        mse,
        psnr_db: psnr_from_mse(mse),
        max_component_delta: max_delta,
        components_changed: changed,
    })
}
