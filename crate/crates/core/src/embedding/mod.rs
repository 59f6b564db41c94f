//! Point assignments for voters and alternatives, the verifier that
//! certifies them, and closed-form constructions for small profiles.

mod construct;
mod document;
mod svg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{dist, Point};
use crate::profile::{restriction_map, Profile};

pub use construct::{embed_three_alternatives, embed_two_voters};
pub use document::{read_embedding, write_embedding, DocumentMetadata, EmbeddingDocument};
pub use svg::render_svg;

/// Margin used when verifying machine-produced embeddings.
pub const DEFAULT_VERIFY_MARGIN: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq)]
pub struct Embedding {
    pub voters: Vec<Point>,
    pub alternatives: Vec<Point>,
}

impl Embedding {
    pub fn new(voters: Vec<Point>, alternatives: Vec<Point>) -> Result<Self> {
        if let Some(p) = voters.iter().chain(&alternatives).find(|p| !p.is_finite()) {
            return Err(Error::argument(format!("non-finite coordinate {p}")));
        }
        Ok(Embedding {
            voters,
            alternatives,
        })
    }

    /// Row `i` holds the distances from voter `i` to every alternative.
    pub fn distance_matrix(&self) -> Vec<Vec<f64>> {
        self.voters
            .iter()
            .map(|&v| self.alternatives.iter().map(|&a| dist(v, a)).collect())
            .collect()
    }

    /// Drops every alternative not in `keep`, renumbering like [`Profile::restrict`].
    pub fn restrict(&self, keep: &[usize]) -> Result<Embedding> {
        let map = restriction_map(self.alternatives.len(), keep)?;
        let alternatives = self
            .alternatives
            .iter()
            .zip(&map)
            .filter_map(|(&p, r)| r.map(|_| p))
            .collect();
        Ok(Embedding {
            voters: self.voters.clone(),
            alternatives,
        })
    }

    /// Applies `p -> R(p) + offset` to every point.
    pub fn rigid_motion(&self, angle: f64, offset: Point) -> Embedding {
        let (s, c) = angle.sin_cos();
        let f = |p: &Point| Point::new(c * p.x - s * p.y + offset.x, s * p.x + c * p.y + offset.y);
        Embedding {
            voters: self.voters.iter().map(f).collect(),
            alternatives: self.alternatives.iter().map(f).collect(),
        }
    }

    fn check_dimensions(&self, p: &Profile) -> Result<()> {
        if self.voters.len() != p.num_voters() || self.alternatives.len() != p.num_alternatives() {
            return Err(Error::Dimension(format!(
                "embedding has {} voters and {} alternatives, profile has n = {} and m = {}",
                self.voters.len(),
                self.alternatives.len(),
                p.num_voters(),
                p.num_alternatives()
            )));
        }
        Ok(())
    }
}

/// A consecutive ranked pair whose distances are not separated by the margin.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub voter: usize,
    pub preferred: usize,
    pub other: usize,
    pub d_preferred: f64,
    pub d_other: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub ok: bool,
    /// Smallest `d_other - d_preferred` over consecutive ranked pairs;
    /// `+inf` when there is nothing to compare (`m = 1`).
    pub min_slack: f64,
    pub margin: f64,
    pub violations: Vec<Violation>,
}

/// Checks `d(v_i, a) + margin < d(v_i, b)` for every consecutive pair
/// `a > b` in each voter's ranking. Ties fail at any margin.
pub fn verify(p: &Profile, e: &Embedding, margin: f64) -> Result<VerificationReport> {
    e.check_dimensions(p)?;
    if !(margin >= 0.0 && margin.is_finite()) {
        return Err(Error::argument(format!("margin {margin} must be finite and >= 0")));
    }
    let mut min_slack = f64::INFINITY;
    let mut violations = Vec::new();
    for (voter, (order, &v)) in p.orders().iter().zip(&e.voters).enumerate() {
        for pair in order.ranking().windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let d_preferred = dist(v, e.alternatives[a]);
            let d_other = dist(v, e.alternatives[b]);
            let slack = d_other - d_preferred;
            min_slack = min_slack.min(slack);
            // Negated so that NaN slack is a violation.
            if !(slack > margin) {
                violations.push(Violation {
                    voter,
                    preferred: a,
                    other: b,
                    d_preferred,
                    d_other,
                });
            }
        }
    }
    Ok(VerificationReport {
        ok: violations.is_empty(),
        min_slack,
        margin,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table_embedding(voter: Point) -> Embedding {
        Embedding::new(
            vec![voter],
            vec![Point::new(0.0, 2.0), Point::new(2.0, -1.0), Point::new(-2.0, -1.0)],
        )
        .unwrap()
    }

    #[test]
    fn verify_three_alternative_voter() {
        let p = Profile::from_rankings(3, [vec![0, 1, 2]]).unwrap();
        let r = verify(&p, &table_embedding(Point::new(2.0, 2.0)), 0.0).unwrap();
        assert!(r.ok);
        assert_eq!(r.min_slack, 1.0);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn verify_reports_wrong_claimed_order() {
        let p = Profile::from_rankings(3, [vec![0, 2, 1]]).unwrap();
        let r = verify(&p, &table_embedding(Point::new(2.0, 2.0)), 0.0).unwrap();
        assert!(!r.ok);
        assert_eq!(
            r.violations,
            vec![Violation {
                voter: 0,
                preferred: 2,
                other: 1,
                d_preferred: 5.0,
                d_other: 3.0
            }]
        );
        assert_eq!(r.min_slack, -2.0);
    }

    #[test]
    fn shared_point_is_a_violation() {
        let p = Profile::from_rankings(2, [vec![0, 1]]).unwrap();
        let e = Embedding::new(vec![Point::ORIGIN], vec![Point::new(1.0, 1.0); 2]).unwrap();
        let r = verify(&p, &e, 0.0).unwrap();
        assert!(!r.ok);
        assert_eq!(r.min_slack, 0.0);
    }

    #[test]
    fn dimension_mismatch() {
        let p = Profile::from_rankings(2, [vec![0, 1]]).unwrap();
        let e = Embedding::new(vec![Point::ORIGIN], vec![Point::ORIGIN]).unwrap();
        assert!(matches!(verify(&p, &e, 0.0), Err(Error::Dimension(_))));
    }

    #[test]
    fn single_alternative_has_infinite_slack() {
        let p = Profile::from_rankings(1, [vec![0]]).unwrap();
        let e = Embedding::new(vec![Point::ORIGIN], vec![Point::ORIGIN]).unwrap();
        let r = verify(&p, &e, 0.0).unwrap();
        assert!(r.ok);
        assert_eq!(r.min_slack, f64::INFINITY);
    }

    #[test]
    fn rejects_non_finite_points_and_bad_margin() {
        assert!(Embedding::new(vec![Point::new(f64::NAN, 0.0)], vec![]).is_err());
        let p = Profile::from_rankings(1, [vec![0]]).unwrap();
        let e = Embedding::new(vec![Point::ORIGIN], vec![Point::ORIGIN]).unwrap();
        assert!(verify(&p, &e, -1.0).is_err());
    }

    #[test]
    fn restrict_drops_points() {
        let e = table_embedding(Point::ORIGIN);
        let r = e.restrict(&[2, 0]).unwrap();
        assert_eq!(r.alternatives, vec![Point::new(0.0, 2.0), Point::new(-2.0, -1.0)]);
    }
}
