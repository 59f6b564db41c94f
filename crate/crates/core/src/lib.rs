//! Two-dimensional Euclidean embeddings of preference profiles.
//!
//! A profile is 2-Euclidean when voters and alternatives can be placed in
//! the plane so that every voter ranks the alternatives by increasing
//! distance. This crate provides:
//!
//! * [`profile`]: profiles, their text format, canonical forms and the
//!   stream of canonical three-voter profiles;
//! * [`geometry`]: circles, annuli, free areas, enclosing disks and sampling;
//! * [`embedding`]: the verifier, closed-form constructions for two voters
//!   or three alternatives, JSON documents and SVG rendering;
//! * [`heuristic`]: the randomized greedy search and a batch runner.

pub mod embedding;
pub mod error;
pub mod geometry;
pub mod heuristic;
pub mod profile;

pub use embedding::{
    embed_three_alternatives, embed_two_voters, read_embedding, render_svg, verify,
    write_embedding, DocumentMetadata, Embedding, EmbeddingDocument, VerificationReport,
    Violation, DEFAULT_VERIFY_MARGIN,
};
pub use error::{Error, Result};
pub use geometry::{Point, Sampler};
pub use heuristic::{
    batch_run, greedy_embed, BatchOptions, BatchSummary, HeuristicConfig, HeuristicOutcome, Status,
};
pub use profile::{
    count_canonical, enumerate_canonical, parse_profile, serialize_profile, CanonicalProfiles,
    ParseMode, PreferenceOrder, Profile, Rank,
};
