//! Embeds a two-voter profile with the rank-coordinate construction and
//! prints each alternative's distance band.
//!
//! ```text
//! cargo run --example two_voter_construction
//! ```

use prefembed::{embed_two_voters, parse_profile, verify, ParseMode};

fn main() -> anyhow::Result<()> {
    let profile = parse_profile("7 2\n1 2 3 4 5 6 7\n4 7 1 3 2 6 5\n", ParseMode::Strict)?;
    let embedding = embed_two_voters(&profile)?;
    let m = profile.num_alternatives();
    let base = (m * m) as f64;

    for (v, voter) in embedding.voters.iter().enumerate() {
        println!("voter {} at {voter}", v + 1);
        for &alt in profile.orders()[v].ranking() {
            let rank = profile.rank(v, alt)?.value() as f64;
            let d = voter.dist(embedding.alternatives[alt]);
            println!(
                "  a{} at {}: {:.4} in [{}, {})",
                alt + 1,
                embedding.alternatives[alt],
                d,
                base + rank,
                base + rank + 1.0
            );
        }
    }
    let report = verify(&profile, &embedding, 0.0)?;
    println!("verified: {} (min slack {:.4})", report.ok, report.min_slack);
    Ok(())
}
