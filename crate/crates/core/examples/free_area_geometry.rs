//! Builds the free area for one placement step, lists its corners and the
//! disk the sampler searches, and draws a point from it.
//!
//! ```text
//! cargo run --example free_area_geometry
//! ```

use prefembed::geometry::{candidate_disk, corners, sample_free_area};
use prefembed::heuristic::annuli_for_alternative;
use prefembed::{Point, Profile};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> anyhow::Result<()> {
    // Voter 1 ranks 0 > 2 > 1, voter 2 ranks 1 > 2 > 0, voter 3 ranks 2 > 0 > 1.
    let profile = Profile::from_rankings(3, [vec![0, 2, 1], vec![1, 2, 0], vec![2, 0, 1]])?;
    let voters = [Point::new(-1.0, 0.0), Point::new(1.0, 0.0), Point::new(0.0, 1.0)];
    let placed = [Some(Point::new(-0.8, -0.2)), Some(Point::new(0.9, -0.3)), None];

    let free = annuli_for_alternative(&profile, &voters, &placed, 2)
        .map_err(|e| anyhow::anyhow!("voter {} has an empty band", e.voter))?;
    for (i, a) in free.annuli.iter().enumerate() {
        println!("voter {}: {:.4} < d < {:.4}", i + 1, a.inner(), a.outer());
    }
    for c in corners(&free) {
        println!("corner {c}");
    }
    let disk = candidate_disk(&free);
    println!("candidate disk: center {}, radius {:.4}", disk.center, disk.radius);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    match sample_free_area(&free, &mut rng, 200, 1e-6) {
        Some(p) => println!("placed alternative 3 at {p}"),
        None => println!("no point found within the sample budget"),
    }
    Ok(())
}
