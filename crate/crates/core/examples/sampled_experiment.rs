//! Runs the greedy search on a seeded uniform sample of canonical
//! 3-voter profiles and prints the batch summary.
//!
//! ```text
//! cargo run --release --example sampled_experiment -- [m] [sample size] [seed] [workers] [max restarts]
//! ```
//! Defaults: m = 7, 5000 profiles, seed 2024, one worker per core and the
//! default restart budget.

use prefembed::{batch_run, enumerate_canonical, BatchOptions, HeuristicConfig};
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: u64| -> anyhow::Result<u64> {
        Ok(args.get(i).map(|s| s.parse()).transpose()?.unwrap_or(default))
    };
    let m = arg(0, 7)? as usize;
    let sample = arg(1, 5000)? as usize;
    let seed = arg(2, 2024)?;
    let workers = arg(3, rayon::current_num_threads() as u64)? as usize;

    let cursor = enumerate_canonical(m)?;
    let total = cursor.total() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked = index::sample(&mut rng, total, sample.min(total)).into_vec();
    picked.sort_unstable();
    let stream = picked
        .into_iter()
        .map(|i| (i as u64, cursor.get(i as u64).expect("index below total")));

    let mut cfg = HeuristicConfig::with_seed(seed);
    if let Some(r) = args.get(4) {
        cfg.max_restarts = r.parse()?;
    }
    let summary = batch_run(stream, &cfg, &BatchOptions { workers, out_dir: None })?;
    print!("{}", summary.to_json());
    eprintln!(
        "{} of {} profiles embedded in {:.1?}",
        summary.successes, summary.total, summary.elapsed
    );
    Ok(())
}
