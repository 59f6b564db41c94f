//! Searches for an embedding of a three-voter, seven-alternative profile
//! and prints the resulting JSON document.
//!
//! ```text
//! cargo run --release --example greedy_search -- [seed]
//! ```

use prefembed::{greedy_embed, parse_profile, write_embedding, DocumentMetadata, HeuristicConfig, ParseMode};

fn main() -> anyhow::Result<()> {
    let seed = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(1);
    let profile = parse_profile(
        "7 3\n1 2 3 4 5 6 7\n3 1 7 2 6 4 5\n6 5 2 7 1 3 4\n",
        ParseMode::Strict,
    )?;
    let cfg = HeuristicConfig::with_seed(seed);
    let outcome = greedy_embed(&profile, &cfg)?;
    eprintln!(
        "{:?} after {} restart(s), {} placement(s)",
        outcome.status, outcome.restarts_used, outcome.placements_attempted
    );
    if let (Some(e), Some(r)) = (&outcome.embedding, &outcome.report) {
        let meta = DocumentMetadata {
            seed: Some(seed),
            config: Some(serde_json::to_value(&cfg)?),
        };
        print!("{}", write_embedding(&profile, e, r, &meta));
    }
    Ok(())
}
