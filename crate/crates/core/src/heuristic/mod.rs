//! Randomized greedy search for an embedding.
//!
//! Each restart scatters the voters in a square, shuffles the alternatives
//! and places them one at a time. An alternative must land in the free area:
//! for every voter, farther than each already-placed alternative the voter
//! prefers and nearer than each it likes less. That region is an
//! intersection of one annulus per voter. A point is drawn from it by
//! rejection sampling; if none is found the restart is abandoned.
//!
//! The search is one-sided: exhausting the budget says nothing about whether
//! an embedding exists.

mod batch;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::embedding::{verify, Embedding, VerificationReport};
use crate::error::{Error, Result};
use crate::geometry::{dist, sample_free_area_with, Annulus, FreeArea, Point, Sampler, GEOMETRY_TOLERANCE};
use crate::profile::Profile;

pub use batch::{batch_run, derive_seed, BatchOptions, BatchSummary};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeuristicConfig {
    pub seed: u64,
    pub max_restarts: usize,
    pub samples_per_placement: usize,
    /// Voters are drawn from `[-voter_box, voter_box]^2`.
    pub voter_box: f64,
    pub placement_margin: f64,
    pub verify_margin: f64,
    #[serde(default)]
    pub sampler: Sampler,
}

impl Default for HeuristicConfig {
    fn default() -> Self {
        HeuristicConfig {
            seed: 0,
            max_restarts: 1_000_000,
            samples_per_placement: 200,
            voter_box: 1.0,
            placement_margin: 1e-6,
            verify_margin: 1e-7,
            sampler: Sampler::Uniform,
        }
    }
}

impl HeuristicConfig {
    pub fn with_seed(seed: u64) -> Self {
        HeuristicConfig {
            seed,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_restarts < 1 {
            return Err(Error::argument("max_restarts must be at least 1"));
        }
        if self.samples_per_placement < 1 {
            return Err(Error::argument("samples_per_placement must be at least 1"));
        }
        if !(self.voter_box > 0.0 && self.voter_box.is_finite()) {
            return Err(Error::argument("voter_box must be positive and finite"));
        }
        if !(self.verify_margin >= 0.0 && self.placement_margin >= self.verify_margin)
            || !self.placement_margin.is_finite()
        {
            return Err(Error::argument(
                "margins must satisfy placement_margin >= verify_margin >= 0",
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Success,
    /// The restart budget ran out. Not a proof that no embedding exists.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HeuristicOutcome {
    pub status: Status,
    pub embedding: Option<Embedding>,
    pub report: Option<VerificationReport>,
    /// 1-based index of the successful restart, or `max_restarts`.
    pub restarts_used: usize,
    pub placements_attempted: usize,
}

impl HeuristicOutcome {
    pub fn is_success(&self) -> bool {
        self.status == Status::Success
    }
}

/// Voter `voter` cannot be satisfied: its lower bound meets its upper bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmptyBand {
    pub voter: usize,
    pub inner: f64,
    pub outer: f64,
}

/// One annulus per voter bounding where `alt` may go given the alternatives
/// already placed. Fails when some voter's band is empty.
pub fn annuli_for_alternative(
    p: &Profile,
    voter_points: &[Point],
    placed: &[Option<Point>],
    alt: usize,
) -> Result<FreeArea, EmptyBand> {
    let positions: Vec<Vec<usize>> = p.orders().iter().map(|o| o.positions()).collect();
    annuli_from_positions(&positions, voter_points, placed, alt)
}

fn annuli_from_positions(
    positions: &[Vec<usize>],
    voter_points: &[Point],
    placed: &[Option<Point>],
    alt: usize,
) -> Result<FreeArea, EmptyBand> {
    debug_assert!(placed[alt].is_none());
    let mut annuli = Vec::with_capacity(voter_points.len());
    for (voter, (pos, &v)) in positions.iter().zip(voter_points).enumerate() {
        let (mut inner, mut outer) = (0.0f64, f64::INFINITY);
        for (b, q) in placed.iter().enumerate() {
            let Some(q) = q else { continue };
            let d = dist(v, *q);
            if pos[b] < pos[alt] {
                inner = inner.max(d);
            } else {
                outer = outer.min(d);
            }
        }
        match Annulus::new(v, inner, outer) {
            Ok(a) => annuli.push(a),
            Err(_) => return Err(EmptyBand { voter, inner, outer }),
        }
    }
    Ok(FreeArea::new(annuli))
}

fn draw_voters<R: Rng>(n: usize, half_width: f64, rng: &mut R) -> Vec<Point> {
    let mut voters: Vec<Point> = Vec::with_capacity(n);
    while voters.len() < n {
        let v = Point::new(
            rng.gen_range(-half_width..=half_width),
            rng.gen_range(-half_width..=half_width),
        );
        if voters.iter().all(|&w| dist(v, w) > GEOMETRY_TOLERANCE) {
            voters.push(v);
        }
    }
    voters
}

/// Runs the restart loop. Equal `(p, cfg)` always give the same outcome.
pub fn greedy_embed(p: &Profile, cfg: &HeuristicConfig) -> Result<HeuristicOutcome> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let m = p.num_alternatives();
    let positions: Vec<Vec<usize>> = p.orders().iter().map(|o| o.positions()).collect();
    let mut order: Vec<usize> = (0..m).collect();
    let mut placements_attempted = 0;

    for restart in 1..=cfg.max_restarts {
        let voters = draw_voters(p.num_voters(), cfg.voter_box, &mut rng);
        order.shuffle(&mut rng);
        let mut placed: Vec<Option<Point>> = vec![None; m];
        let mut complete = true;
        for &alt in &order {
            placements_attempted += 1;
            let spot = annuli_from_positions(&positions, &voters, &placed, alt)
                .ok()
                .and_then(|free| {
                    sample_free_area_with(
                        &free,
                        &mut rng,
                        cfg.samples_per_placement,
                        cfg.placement_margin,
                        cfg.sampler,
                    )
                });
            match spot {
                Some(pt) => placed[alt] = Some(pt),
                None => {
                    complete = false;
                    break;
                }
            }
        }
        if !complete {
            continue;
        }
        let embedding = Embedding::new(voters, placed.into_iter().map(Option::unwrap).collect())?;
        let report = verify(p, &embedding, cfg.verify_margin)?;
        if report.ok {
            return Ok(HeuristicOutcome {
                status: Status::Success,
                embedding: Some(embedding),
                report: Some(report),
                restarts_used: restart,
                placements_attempted,
            });
        }
    }
    Ok(HeuristicOutcome {
        status: Status::Exhausted,
        embedding: None,
        report: None,
        restarts_used: cfg.max_restarts,
        placements_attempted,
    })
}
