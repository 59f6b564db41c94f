//! Command-line front end.
//!
//! Exit status: 0 on a verified success, 1 on a well-formed negative result
//! (verification failed, search exhausted), 2 on usage or I/O errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use prefembed::profile::serialize_profiles;
use prefembed::{
    batch_run, count_canonical, embed_three_alternatives, embed_two_voters, greedy_embed,
    parse_profile, read_embedding, render_svg, verify, write_embedding, BatchOptions,
    CanonicalProfiles, DocumentMetadata, HeuristicConfig, ParseMode, Profile, Sampler,
    DEFAULT_VERIFY_MARGIN,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "prefembed", version, about = "2-D Euclidean embeddings of preference profiles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check an embedding document against a profile.
    Verify {
        profile: PathBuf,
        embedding: PathBuf,
        #[arg(long, default_value_t = DEFAULT_VERIFY_MARGIN)]
        margin: f64,
    },
    /// Build an embedding by a closed-form construction.
    Embed {
        profile: PathBuf,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
    },
    /// Search for an embedding with the randomized greedy heuristic.
    Search {
        profile: PathBuf,
        #[command(flatten)]
        heuristic: HeuristicArgs,
    },
    /// List canonical three-voter profiles.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        count_only: bool,
        /// Half-open range of stream indices, `lo..hi`.
        #[arg(long, value_parser = parse_range)]
        range: Option<(u64, u64)>,
    },
    /// Print the number of canonical three-voter profiles.
    Count {
        #[arg(long)]
        m: usize,
    },
    /// Run the heuristic over canonical three-voter profiles.
    Batch {
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = parse_range)]
        range: Option<(u64, u64)>,
        #[command(flatten)]
        heuristic: HeuristicArgs,
        /// Directory for per-profile documents and exhausted.txt.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Draw an embedding as SVG.
    Render {
        profile: PathBuf,
        embedding: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Auto,
    TwoVoter,
    ThreeAlt,
}

#[derive(Args)]
struct HeuristicArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = HeuristicConfig::default().max_restarts)]
    max_restarts: usize,
    /// Sample points tried per placement.
    #[arg(long, default_value_t = HeuristicConfig::default().samples_per_placement)]
    samples: usize,
    /// Placement margin.
    #[arg(long, default_value_t = HeuristicConfig::default().placement_margin)]
    margin: f64,
    #[arg(long, default_value_t = HeuristicConfig::default().verify_margin)]
    verify_margin: f64,
    #[arg(long, default_value_t = HeuristicConfig::default().voter_box)]
    voter_box: f64,
    #[arg(long, value_enum, default_value_t = SamplerArg::Uniform)]
    sampler: SamplerArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SamplerArg {
    Uniform,
    Halton,
}

impl HeuristicArgs {
    fn config(&self) -> anyhow::Result<HeuristicConfig> {
        let cfg = HeuristicConfig {
            seed: self.seed,
            max_restarts: self.max_restarts,
            samples_per_placement: self.samples,
            voter_box: self.voter_box,
            placement_margin: self.margin,
            verify_margin: self.verify_margin,
            sampler: match self.sampler {
                SamplerArg::Uniform => Sampler::Uniform,
                SamplerArg::Halton => Sampler::Halton,
            },
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let lo: u64 = lo.trim().parse().map_err(|e| format!("bad range start: {e}"))?;
    let hi: u64 = hi.trim().parse().map_err(|e| format!("bad range end: {e}"))?;
    if lo > hi {
        return Err(format!("range start {lo} exceeds end {hi}"));
    }
    Ok((lo, hi))
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_profile(path: &Path) -> anyhow::Result<Profile> {
    let p = parse_profile(&read_text(path)?, ParseMode::Lenient)
        .with_context(|| format!("parsing {}", path.display()))?;
    if p.has_duplicates() {
        eprintln!("warning: {} contains repeated preference orders", path.display());
    }
    Ok(p)
}

fn canonical_stream(m: usize, range: Option<(u64, u64)>) -> anyhow::Result<CanonicalProfiles> {
    Ok(match range {
        Some((lo, hi)) => CanonicalProfiles::range(m, lo, hi)?,
        None => CanonicalProfiles::new(m)?,
    })
}

#[derive(Serialize)]
struct ReportJson<'a> {
    ok: bool,
    min_slack: Option<f64>,
    margin: f64,
    violations: &'a [prefembed::Violation],
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Verify {
            profile,
            embedding,
            margin,
        } => {
            let p = read_profile(&profile)?;
            let (e, _) = read_embedding(&read_text(&embedding)?)
                .with_context(|| format!("parsing {}", embedding.display()))?;
            let r = verify(&p, &e, margin)?;
            print_json(&ReportJson {
                ok: r.ok,
                min_slack: r.min_slack.is_finite().then_some(r.min_slack),
                margin: r.margin,
                violations: &r.violations,
            })?;
            Ok(if r.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Embed { profile, strategy } => {
            let p = read_profile(&profile)?;
            let (n, m) = (p.num_voters(), p.num_alternatives());
            let e = match strategy {
                Strategy::TwoVoter => embed_two_voters(&p)?,
                Strategy::ThreeAlt => embed_three_alternatives(&p)?,
                Strategy::Auto if n <= 2 => embed_two_voters(&p)?,
                Strategy::Auto if m <= 3 => embed_three_alternatives(&p)?,
                Strategy::Auto => bail!(
                    "no closed-form construction for n = {n}, m = {m}; try `prefembed search`"
                ),
            };
            let r = verify(&p, &e, 0.0)?;
            print!("{}", write_embedding(&p, &e, &r, &DocumentMetadata::default()));
            Ok(if r.ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Search { profile, heuristic } => {
            let cfg = heuristic.config()?;
            let p = read_profile(&profile)?;
            let outcome = greedy_embed(&p, &cfg)?;
            match (&outcome.embedding, &outcome.report) {
                (Some(e), Some(r)) => {
                    let meta = DocumentMetadata {
                        seed: Some(cfg.seed),
                        config: Some(serde_json::to_value(&cfg)?),
                    };
                    print!("{}", write_embedding(&p, e, r, &meta));
                    eprintln!(
                        "embedded after {} restart(s), {} placement(s)",
                        outcome.restarts_used, outcome.placements_attempted
                    );
                    Ok(ExitCode::SUCCESS)
                }
                _ => {
                    eprintln!(
                        "search exhausted: {} restart(s), {} placement(s); this does not show that no embedding exists",
                        outcome.restarts_used, outcome.placements_attempted
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Enumerate {
            m,
            count_only,
            range,
        } => {
            let stream = canonical_stream(m, range)?;
            let mut out = io::BufWriter::new(io::stdout().lock());
            if count_only {
                writeln!(out, "{}", stream.remaining())?;
            } else {
                let start = stream.position();
                for (k, p) in stream.enumerate() {
                    let label = (start + k as u64).to_string();
                    out.write_all(serialize_profiles([(label, &p)]).as_bytes())?;
                }
            }
            out.flush()?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { m } => {
            println!("{}", count_canonical(m)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Batch {
            m,
            range,
            heuristic,
            out,
            workers,
        } => {
            let cfg = heuristic.config()?;
            let stream = canonical_stream(m, range)?;
            let start = stream.position();
            let indexed = stream.enumerate().map(|(k, p)| (start + k as u64, p));
            let summary = batch_run(indexed, &cfg, &BatchOptions { workers, out_dir: out })?;
            print!("{}", summary.to_json());
            eprintln!(
                "{} of {} profiles embedded in {:.2?}",
                summary.successes, summary.total, summary.elapsed
            );
            Ok(if summary.exhausted == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Render {
            profile,
            embedding,
            out,
        } => {
            let p = read_profile(&profile)?;
            let (e, _) = read_embedding(&read_text(&embedding)?)
                .with_context(|| format!("parsing {}", embedding.display()))?;
            let svg = render_svg(&p, &e)?;
            fs::write(&out, svg).with_context(|| format!("writing {}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
