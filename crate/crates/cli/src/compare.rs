//! Side-by-side run of every codec on one cover and message.

use std::io::{self, Write};
use std::thread;

use serde::Serialize;
use stegmatch_core::metrics::psnr;
use stegmatch_core::{load_png, Algorithm, BitSeq, RgbRaster, StegoError};

use crate::report::format_db;
use crate::{CliError, CompareArgs};

#[derive(Debug, Serialize)]
pub struct Row {
    pub algorithm: &'static str,
    pub psnr_db: String,
    pub bits_embedded: Option<u64>,
    pub components_used: Option<u64>,
    pub bits_per_component: Option<f64>,
    pub status: String,
}

impl Row {
    fn failed(algorithm: Algorithm, why: String) -> Self {
        Self {
            algorithm: algorithm.name(),
            psnr_db: String::new(),
            bits_embedded: None,
            components_used: None,
            bits_per_component: None,
            status: why,
        }
    }
}

/// Embeds, re-extracts and verifies before measuring, so a row never shows a
/// PSNR for a message that did not survive.
fn run_codec(algorithm: Algorithm, cover: &RgbRaster, message: &[u8]) -> Row {
    let secret = BitSeq::from_octets(message);
    let result = algorithm.embed(cover, &secret).and_then(|embedded| {
        let back = algorithm.extract(&embedded.stego)?;
        if back != secret {
            return Err(StegoError::CorruptPayload("round trip mismatch".into()));
        }
        Ok((psnr::<f64>(cover, &embedded.stego)?, embedded.stats))
    });
    match result {
        Ok((db, stats)) => {
            let used = stats.components_used();
            Row {
                algorithm: algorithm.name(),
                psnr_db: format_db(db),
                bits_embedded: Some(stats.payload_bits_embedded),
                components_used: Some(used),
                bits_per_component: Some(if used == 0 {
                    0.0
                } else {
                    stats.payload_bits_embedded as f64 / used as f64
                }),
                status: "ok".into(),
            }
        }
        Err(e) => Row::failed(algorithm, e.to_string()),
    }
}

pub fn compare_all(cover: &RgbRaster, message: &[u8]) -> Vec<Row> {
    thread::scope(|scope| {
        let handles: Vec<_> = Algorithm::ALL
            .into_iter()
            .map(|algo| scope.spawn(move || run_codec(algo, cover, message)))
            .collect();
        handles
            .into_iter()
            .zip(Algorithm::ALL)
            .map(|(h, algo)| {
                h.join()
                    .unwrap_or_else(|_| Row::failed(algo, "codec panicked".into()))
            })
            .collect()
    })
}

pub fn cmd_compare(args: CompareArgs) -> Result<(), CliError> {
    let cover = load_png(&args.cover)?;
    let message = args.source.read()?;
    let rows = compare_all(&cover, &message);

    let mut out = io::stdout().lock();
    writeln!(
        out,
        "{:<9} {:>10} {:>13} {:>15} {:>18}  status",
        "algorithm", "psnr_db", "bits_embedded", "components_used", "bits_per_component"
    )?;
    for row in &rows {
        let opt = |v: Option<u64>| v.map_or("-".to_string(), |v| v.to_string());
        writeln!(
            out,
            "{:<9} {:>10} {:>13} {:>15} {:>18}  {}",
            row.algorithm,
            if row.psnr_db.is_empty() {
                "-"
            } else {
                &row.psnr_db
            },
            opt(row.bits_embedded),
            opt(row.components_used),
            row.bits_per_component
                .map_or("-".to_string(), |v| format!("{v:.4}")),
            row.status
        )?;
    }

    if let Some(path) = &args.out {
        let mut writer = csv::Writer::from_path(path).map_err(csv_error)?;
        for row in &rows {
            writer.serialize(row).map_err(csv_error)?;
        }
        writer.flush()?;
    }
    Ok(())
}

fn csv_error(e: csv::Error) -> CliError {
    if e.is_io_error() {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => return CliError::Io(io),
            _ => unreachable!(),
        }
    }
    CliError::Output(e.to_string())
}
