use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fht_cli::csv::{complexity_row, error_row, write_hough_csv, COMPLEXITY_HEADER, ERROR_HEADER};
use fht_cli::quadrants::quadrants_counted;
use fht_cli::{pgm, raster};
use fht_core::analysis::{self, ErrorRecord};
use fht_core::{fht2d_counted, fht2d_pattern, HoughImage, Image, SplitStrategy};

/// Fast Hough transform for images of arbitrary size.
#[derive(Parser)]
#[command(name = "fht", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    /// Bisect the width.
    Simple,
    /// Cut off the largest power of two below the width.
    Tweaked,
}

impl From<Strategy> for SplitStrategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::Simple => SplitStrategy::Simple,
            Strategy::Tweaked => SplitStrategy::Tweaked,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Analysis {
    /// Addition counts per size.
    Complexity,
    /// Maximum line approximation errors per size.
    Error,
}

#[derive(Subcommand)]
enum Command {
    /// Transform a PGM (or FHT1 raster) image.
    ///
    /// Output columns are slopes t, rows are shifts s. A `.csv` output path
    /// writes CSV, anything else the FHT1 binary raster.
    ///
    /// With --quadrants four files are written with the suffixes _hpos, _hneg,
    /// _vpos and _vneg. The _hneg quadrant is the transform of the left-right
    /// mirrored image, so its row t is the line of slope -t on the original.
    /// The _vpos and _vneg quadrants do the same for the transposed image.
    Transform {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "tweaked")]
        strategy: Strategy,
        #[arg(long)]
        output: PathBuf,
        /// Print the number of additions (one line per output file).
        #[arg(long)]
        count: bool,
        #[arg(long)]
        quadrants: bool,
    },
    /// Print the generating pattern for width n and slope t as one CSV line.
    Pattern {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, value_enum, default_value = "tweaked")]
        strategy: Strategy,
    },
    /// Write the complexity or error series for n = 1..=n-max as CSV.
    Analyze {
        #[arg(value_enum)]
        kind: Analysis,
        #[arg(long, default_value_t = analysis::DEFAULT_N_MAX as u64, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        /// Error series only: sizes up to 1024 plus 1451, 2048, 4095 and 4096 (those not above n-max).
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        output: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fht: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Transform { input, strategy, output, count, quadrants } => {
            let img = read_image(&input)?;
            let strategy = strategy.into();
            if quadrants {
                let (set, counts) = quadrants_counted(&img, strategy)?;
                for ((suffix, j), n) in set.named().into_iter().zip(counts) {
                    write_hough(&suffixed(&output, suffix), j)?;
                    if count {
                        println!("{n}");
                    }
                }
            } else {
                let (j, n) = fht2d_counted(&img, strategy)?;
                write_hough(&output, &j)?;
                if count {
                    println!("{n}");
                }
            }
        }
        Command::Pattern { n, t, strategy } => {
            let pat = fht2d_pattern(n, t, strategy.into())?;
            let line: Vec<String> = pat.values.iter().map(i64::to_string).collect();
            println!("{}", line.join(","));
        }
        Command::Analyze { kind, n_max, fast, output } => {
            let n_max = usize::try_from(n_max).context("n-max too large")?;
            let file = File::create(&output).with_context(|| format!("creating {}", output.display()))?;
            let mut out = BufWriter::new(file);
            match kind {
                Analysis::Complexity => {
                    writeln!(out, "{COMPLEXITY_HEADER}")?;
                    for r in analysis::complexity_series(n_max) {
                        writeln!(out, "{}", complexity_row(&r))?;
                    }
                }
                Analysis::Error => {
                    let sizes: Vec<usize> = if fast {
                        analysis::fast_sizes().into_iter().filter(|&n| n <= n_max).collect()
                    } else {
                        (1..=n_max).collect()
                    };
                    writeln!(out, "{ERROR_HEADER}")?;
                    let mut rows: Vec<ErrorRecord> = Vec::with_capacity(sizes.len());
                    let mut io_err = None;
                    analysis::error_series_with(&sizes, |r| {
                        if io_err.is_none() {
                            io_err = writeln!(out, "{}", error_row(&r)).err();
                        }
                        rows.push(r);
                    });
                    if let Some(e) = io_err {
                        return Err(e).context("writing error series");
                    }
                    // The fraction is only meaningful over a contiguous prefix 1..=m.
                    let prefix = rows.iter().enumerate().take_while(|(i, r)| r.n == i + 1).count();
                    let frac = analysis::separation_fraction_of(&rows[..prefix]);
                    println!(
                        "separation_fraction n_max={prefix}: {}/{} = {}",
                        frac.numer(),
                        frac.denom(),
                        fht_cli::csv::format_f64(*frac.numer() as f64 / *frac.denom() as f64)
                    );
                }
            }
            out.flush()?;
        }
    }
    Ok(())
}

fn read_image(path: &Path) -> Result<Image> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let img = if bytes.starts_with(raster::MAGIC) {
        raster::decode_raster(&bytes)
    } else {
        pgm::parse_pgm(&bytes)
    };
    img.with_context(|| format!("decoding {}", path.display()))
}

fn write_hough(path: &Path, j: &HoughImage) -> Result<()> {
    let is_csv = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    if is_csv {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        let mut out = BufWriter::new(file);
        write_hough_csv(&mut out, j)?;
        out.flush()?;
    } else {
        raster::write_raster(path, j).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

/// `out.fht` + `hpos` -> `out_hpos.fht`.
fn suffixed(path: &Path, suffix: &str) -> PathBuf {
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let name = match path.extension() {
        Some(ext) => format!("{stem}_{suffix}.{}", ext.to_string_lossy()),
        None => format!("{stem}_{suffix}"),
    };
    path.with_file_name(name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suffix_goes_before_extension() {
        assert_eq!(suffixed(Path::new("a/out.fht"), "hpos"), PathBuf::from("a/out_hpos.fht"));
        assert_eq!(suffixed(Path::new("out"), "vneg"), PathBuf::from("out_vneg"));
    }

    #[test]
    fn refuses_bad_n_max() {
        assert!(Cli::try_parse_from(["fht", "analyze", "error", "--n-max", "0", "--output", "x.csv"]).is_err());
    }
}
