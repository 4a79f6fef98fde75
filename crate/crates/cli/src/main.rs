//! `stegmatch`: embed, extract, analyze and compare.
//!
//! Exit codes: 0 ok, 1 I/O, 2 capacity exhausted, 3 unsupported image
//! format, 4 not a stego image, 5 corrupt payload, 6 `--algo` disagrees with
//! the header, 7 image dimensions differ.

mod compare;
mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stegmatch_core::metrics::quality_report;
use stegmatch_core::{load_png, read_header, save_png, Algorithm, BitSeq, StegoError};

use crate::report::{QualityJson, StatsJson};

#[derive(Parser)]
#[command(
    name = "stegmatch",
    version,
    about = "Hide and recover messages in PNG images"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hide a message in a cover image.
    Embed(EmbedArgs),
    /// Recover a hidden message.
    Extract(ExtractArgs),
    /// Measure distortion between a cover and a stego image.
    Analyze(AnalyzeArgs),
    /// Run all three codecs on one cover and message.
    Compare(CompareArgs),
}

#[derive(Args)]
#[group(id = "payload", required = true, multiple = false)]
struct MessageSource {
    /// Message text (UTF-8).
    #[arg(long, group = "payload")]
    message: Option<String>,
    /// File whose bytes are the message.
    #[arg(long, group = "payload")]
    message_file: Option<PathBuf>,
}

impl MessageSource {
    fn read(&self) -> Result<Vec<u8>, CliError> {
        match (&self.message, &self.message_file) {
            (Some(text), _) => Ok(text.clone().into_bytes()),
            (None, Some(path)) => Ok(fs::read(path)?),
            (None, None) => unreachable!("clap requires one message source"),
        }
    }
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long, value_parser = parse_algorithm)]
    algo: Algorithm,
    #[arg(long)]
    cover: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    source: MessageSource,
    /// Write embed statistics and quality figures as JSON.
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Args)]
struct ExtractArgs {
    #[arg(long)]
    stego: PathBuf,
    /// Expected algorithm; the header decides when absent.
    #[arg(long, value_parser = parse_algorithm)]
    algo: Option<Algorithm>,
    /// Write the message here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    cover: PathBuf,
    #[arg(long)]
    stego: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long)]
    cover: PathBuf,
    #[command(flatten)]
    source: MessageSource,
    /// Also write the table as CSV.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

#[derive(Debug)]
enum CliError {
    Stego(StegoError),
    Io(io::Error),
    Output(String),
}

impl From<StegoError> for CliError {
    fn from(e: StegoError) -> Self {
        match e {
            StegoError::Io(io) => CliError::Io(io),
            other => CliError::Stego(other),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Output(_) => 1,
            CliError::Stego(e) => match e {
                StegoError::CapacityExhausted { .. } | StegoError::ImageTooSmall { .. } => 2,
                StegoError::UnsupportedImageFormat(_) => 3,
                StegoError::NotAStegoImage | StegoError::UnsupportedAlgorithm(_) => 4,
                StegoError::CorruptPayload(_) | StegoError::InvalidPayloadLength { .. } => 5,
                StegoError::AlgorithmMismatch { .. } => 6,
                StegoError::DimensionMismatch(..) => 7,
                StegoError::IndexOutOfRange { .. } | StegoError::Io(_) => 1,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Stego(e) => e.fmt(f),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Output(msg) => f.write_str(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Embed(args) => cmd_embed(args),
        Command::Extract(args) => cmd_extract(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Compare(args) => compare::cmd_compare(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("stegmatch: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn cmd_embed(args: EmbedArgs) -> Result<(), CliError> {
    let cover = load_png(&args.cover)?;
    let message = args.source.read()?;
    let embedded = args.algo.embed(&cover, &BitSeq::from_octets(&message))?;
    save_png(&embedded.stego, &args.out)?;
    if let Some(path) = &args.stats {
        let quality = quality_report::<f64>(&cover, &embedded.stego)?;
        let json = StatsJson::new(&embedded.stats, &quality);
        write_json(path, &json)?;
    }
    Ok(())
}

fn cmd_extract(args: ExtractArgs) -> Result<(), CliError> {
    let stego = load_png(&args.stego)?;
    let header = read_header(&stego).map_err(|e| match e {
        StegoError::ImageTooSmall { .. } => StegoError::NotAStegoImage,
        other => other,
    })?;
    if let Some(expected) = args.algo {
        if expected != header.algorithm {
            return Err(StegoError::AlgorithmMismatch {
                expected,
                found: header.algorithm,
            }
            .into());
        }
    }
    let bits = header.algorithm.extract(&stego)?;
    let octets = bits.to_octets().map_err(|_| {
        StegoError::CorruptPayload(format!(
            "{} bits is not a whole number of octets",
            bits.len()
        ))
    })?;
    match &args.out {
        Some(path) => fs::write(path, &octets)?,
        None => {
            let mut out = io::stdout().lock();
            out.write_all(&octets)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let cover = load_png(&args.cover)?;
    let stego = load_png(&args.stego)?;
    let report = quality_report::<f64>(&cover, &stego)?;
    let mut out = io::stdout().lock();
    if args.json {
        let json = serde_json::to_string_pretty(&QualityJson::from(&report))
            .map_err(|e| CliError::Output(e.to_string()))?;
        writeln!(out, "{json}")?;
    } else {
        writeln!(out, "mse                  {:.6}", report.mse)?;
        writeln!(
            out,
            "psnr_db              {}",
            report::format_db(report.psnr_db)
        )?;
        writeln!(out, "max_component_delta  {}", report.max_component_delta)?;
        writeln!(out, "components_changed   {}", report.components_changed)?;
    }
    Ok(())
}

fn write_json(path: &Path, value: &impl serde::Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Output(e.to_string()))?;
    fs::write(path, text + "\n")?;
    Ok(())
}
