use serde::Serialize;
use stegmatch_core::{EmbedStats, QualityReport64};

/// PSNR for display; `inf` for identical images.
pub fn format_db(db: f64) -> String {
    if db.is_infinite() {
        "inf".to_string()
    } else {
        format!("{db:.4}")
    }
}

/// JSON has no infinity, so identical images serialize `psnr_db` as null.
fn finite(db: f64) -> Option<f64> {
    db.is_finite().then_some(db)
}

#[derive(Serialize)]
pub struct QualityJson {
    pub mse: f64,
    pub psnr_db: Option<f64>,
    pub max_component_delta: u8,
    pub components_changed: u64,
}

impl From<&QualityReport64> for QualityJson {
    fn from(r: &QualityReport64) -> Self {
        Self {
            mse: r.mse,
            psnr_db: finite(r.psnr_db),
            max_component_delta: r.max_component_delta,
            components_changed: r.components_changed,
        }
    }
}

#[derive(Serialize)]
pub struct StatsJson {
    #[serde(flatten)]
    pub quality: QualityJson,
    pub components_visited: u64,
    pub matches: [u64; 3],
    pub skips: u64,
    pub payload_bits_embedded: u64,
}

impl StatsJson {
    pub fn new(stats: &EmbedStats, quality: &QualityReport64) -> Self {
        Self {
            quality: quality.into(),
            components_visited: stats.components_visited,
            matches: stats.matches,
            skips: stats.skips,
            payload_bits_embedded: stats.payload_bits_embedded,
        }
    }
}
