//! Counts canonical three-voter profiles, shows the first few, and checks
//! that splitting the stream into ranges covers it exactly.
//!
//! ```text
//! cargo run --release --example canonical_enumeration -- [m]
//! ```

use prefembed::{count_canonical, enumerate_canonical, serialize_profile, CanonicalProfiles};

fn main() -> anyhow::Result<()> {
    let m = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(4);
    let total = count_canonical(m)?;
    println!("m = {m}: {total} canonical profiles");

    for (i, p) in enumerate_canonical(m)?.take(3).enumerate() {
        print!("# {i}\n{}", serialize_profile(&p));
    }

    let parts = 4;
    let step = total.div_ceil(parts);
    let covered: u64 = (0..parts)
        .map(|k| CanonicalProfiles::range(m, k * step, (k + 1) * step).map(|c| c.count() as u64))
        .sum::<Result<_, _>>()?;
    println!("{parts} ranges of <= {step} cover {covered} profiles");

    if let Some(last) = enumerate_canonical(m)?.get(total.saturating_sub(1)) {
        print!("# last ({})\n{}", total - 1, serialize_profile(&last));
    }
    Ok(())
}
