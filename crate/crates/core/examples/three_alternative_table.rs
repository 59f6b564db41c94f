//! Places one voter for each of the six rankings of three alternatives and
//! prints the distance table.
//!
//! ```text
//! cargo run --example three_alternative_table
//! ```

use prefembed::{embed_three_alternatives, verify, Profile};

fn main() -> anyhow::Result<()> {
    let rankings = [[0, 1, 2], [1, 0, 2], [1, 2, 0], [2, 1, 0], [2, 0, 1], [0, 2, 1]];
    let profile = Profile::from_rankings(3, rankings.iter().map(|r| r.to_vec()))?;
    let embedding = embed_three_alternatives(&profile)?;
    let names = ["a", "b", "c"];

    for (i, a) in embedding.alternatives.iter().enumerate() {
        println!("{} at {a}", names[i]);
    }
    for ((order, voter), row) in profile
        .orders()
        .iter()
        .zip(&embedding.voters)
        .zip(embedding.distance_matrix())
    {
        let label: Vec<&str> = order.ranking().iter().map(|&a| names[a]).collect();
        println!(
            "{:<8} at {voter}  d(a) = {:.3}  d(b) = {:.3}  d(c) = {:.3}",
            label.join(">"),
            row[0],
            row[1],
            row[2]
        );
    }
    let report = verify(&profile, &embedding, 0.0)?;
    println!("verified: {} (min slack {:.4})", report.ok, report.min_slack);
    Ok(())
}
