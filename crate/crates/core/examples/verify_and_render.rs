//! Writes an embedding document, reads it back, re-verifies it and renders
//! it as SVG.
//!
//! ```text
//! cargo run --example verify_and_render -- [out.svg]
//! ```

use prefembed::{
    embed_three_alternatives, read_embedding, render_svg, verify, write_embedding, DocumentMetadata,
    Profile,
};

fn main() -> anyhow::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "triangle.svg".into());
    let profile = Profile::from_rankings(3, [vec![0, 1, 2], vec![2, 0, 1], vec![1, 2, 0]])?;
    let embedding = embed_three_alternatives(&profile)?;
    let report = verify(&profile, &embedding, 0.0)?;
    let document = write_embedding(&profile, &embedding, &report, &DocumentMetadata::default());

    let (restored, _) = read_embedding(&document)?;
    assert_eq!(restored, embedding);
    let again = verify(&profile, &restored, 1e-7)?;
    println!("re-verified: {} (min slack {})", again.ok, again.min_slack);

    // A wrong claim about voter 1 is caught.
    let wrong = Profile::from_rankings(3, [vec![1, 0, 2], vec![2, 0, 1], vec![1, 2, 0]])?;
    for v in verify(&wrong, &restored, 0.0)?.violations {
        println!(
            "violation: voter {} puts a{} ({:.3}) before a{} ({:.3})",
            v.voter + 1,
            v.preferred + 1,
            v.d_preferred,
            v.other + 1,
            v.d_other
        );
    }

    std::fs::write(&out, render_svg(&profile, &restored)?)?;
    println!("wrote {out}");
    Ok(())
}
