//! Many-profile runs of the greedy search.
//!
//! Each profile is identified by its index in the input stream and searched
//! with the seed [`derive_seed`]`(cfg.seed, index)`, so a run's results do
//! not depend on how many workers share it or how the stream is split.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::{greedy_embed, HeuristicConfig, HeuristicOutcome};
use crate::embedding::{write_embedding, DocumentMetadata};
use crate::error::{Error, Result};
use crate::profile::{serialize_profiles, Profile};

const CHUNK: usize = 2048;
const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 finalizer applied to `seed + (index + 1) * golden_gamma`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(GOLDEN_GAMMA));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, Default)]
pub struct BatchOptions {
    pub workers: usize,
    /// When set, every success is written to `<dir>/<index>.json` and the
    /// exhausted profiles to `<dir>/exhausted.txt`.
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct BatchSummary {
    pub total: u64,
    pub successes: u64,
    pub exhausted: u64,
    pub placements_attempted: u64,
    /// Restarts used by each success -> number of profiles.
    pub restart_histogram: BTreeMap<usize, u64>,
    #[serde(serialize_with = "exhausted_as_rankings")]
    pub exhausted_profiles: Vec<(u64, Profile)>,
    /// Wall time; left out of the JSON form so equal runs serialize identically.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Serialize)]
struct ExhaustedEntry {
    index: u64,
    profile: Vec<Vec<usize>>,
}

fn exhausted_as_rankings<S: serde::Serializer>(
    v: &[(u64, Profile)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|(index, p)| ExhaustedEntry {
        index: *index,
        profile: p
            .orders()
            .iter()
            .map(|o| o.ranking().iter().map(|a| a + 1).collect())
            .collect(),
    }))
}

impl BatchSummary {
    fn record(&mut self, index: u64, profile: Profile, outcome: &HeuristicOutcome) {
        self.total += 1;
        self.placements_attempted += outcome.placements_attempted as u64;
        if outcome.is_success() {
            self.successes += 1;
            *self.restart_histogram.entry(outcome.restarts_used).or_default() += 1;
        } else {
            self.exhausted += 1;
            self.exhausted_profiles.push((index, profile));
        }
    }

    /// Combines two summaries; the result does not depend on argument order.
    pub fn merge(mut self, other: BatchSummary) -> BatchSummary {
        self.total += other.total;
        self.successes += other.successes;
        self.exhausted += other.exhausted;
        self.placements_attempted += other.placements_attempted;
        for (k, v) in other.restart_histogram {
            *self.restart_histogram.entry(k).or_default() += v;
        }
        self.exhausted_profiles.extend(other.exhausted_profiles);
        self.exhausted_profiles.sort_by_key(|(i, _)| *i);
        self.elapsed = self.elapsed.max(other.elapsed);
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }

    /// Exhausted profiles as concatenated profile text, labelled by index.
    pub fn exhausted_text(&self) -> String {
        serialize_profiles(
            self.exhausted_profiles
                .iter()
                .map(|(i, p)| (format!("profile {i}"), p)),
        )
    }
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Searches every `(index, profile)` pair of the stream.
///
/// The stream is consumed in fixed-size chunks, so memory stays bounded
/// however long it is. Output files are written from the calling thread in
/// stream order.
pub fn batch_run<I>(profiles: I, cfg: &HeuristicConfig, opts: &BatchOptions) -> Result<BatchSummary>
where
    I: IntoIterator<Item = (u64, Profile)>,
{
    cfg.validate()?;
    if opts.workers < 1 {
        return Err(Error::argument("workers must be at least 1"));
    }
    if let Some(dir) = &opts.out_dir {
        fs::create_dir_all(dir).map_err(|source| Error::Io {
            path: dir.clone(),
            source,
        })?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::argument(format!("cannot start worker pool: {e}")))?;

    let start = Instant::now();
    let mut summary = BatchSummary::default();
    let mut stream = profiles.into_iter();
    loop {
        let chunk: Vec<(u64, Profile)> = stream.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<(HeuristicConfig, HeuristicOutcome)> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(index, p)| {
                    let local = HeuristicConfig {
                        seed: derive_seed(cfg.seed, *index),
                        ..cfg.clone()
                    };
                    let outcome = greedy_embed(p, &local)?;
                    Ok((local, outcome))
                })
                .collect::<Result<_>>()
        })?;
        for ((index, p), (local, outcome)) in chunk.into_iter().zip(outcomes) {
            if let (Some(dir), Some(e), Some(report)) =
                (&opts.out_dir, &outcome.embedding, &outcome.report)
            {
                let meta = DocumentMetadata {
                    seed: Some(local.seed),
                    config: Some(serde_json::to_value(&local).expect("config serializes")),
                };
                write_file(
                    &dir.join(format!("{index}.json")),
                    &write_embedding(&p, e, report, &meta),
                )?;
            }
            summary.record(index, p, &outcome);
        }
    }
    summary.elapsed = start.elapsed();
    if let Some(dir) = &opts.out_dir {
        write_file(&dir.join("exhausted.txt"), &summary.exhausted_text())?;
    }
    Ok(summary)
}
