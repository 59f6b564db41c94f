//! JSON embedding documents: a profile, its points, the full distance
//! matrix and the verification outcome, with optional search metadata.
//!
//! Floats are written in shortest round-trip form and parsed with correct
//! rounding, so coordinates and distances survive a write/read cycle bit for bit.

use serde::{Deserialize, Serialize};

use super::{Embedding, VerificationReport, Violation};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::profile::{PreferenceOrder, Profile};

/// Seed and configuration that produced an embedding, if any.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct DocumentMetadata {
    pub seed: Option<u64>,
    pub config: Option<serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingDocument {
    pub m: usize,
    pub n: usize,
    /// 1-based rankings, most preferred first.
    pub profile: Vec<Vec<usize>>,
    pub voters: Vec<Point>,
    pub alternatives: Vec<Point>,
    pub distances: Vec<Vec<f64>>,
    /// `null` when there is no ranked pair to compare.
    pub min_slack: Option<f64>,
    #[serde(default)]
    pub margin: f64,
    pub ok: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub config: Option<serde_json::Value>,
}

impl EmbeddingDocument {
    pub fn new(
        p: &Profile,
        e: &Embedding,
        report: &VerificationReport,
        metadata: &DocumentMetadata,
    ) -> Self {
        EmbeddingDocument {
            m: p.num_alternatives(),
            n: p.num_voters(),
            profile: p
                .orders()
                .iter()
                .map(|o| o.ranking().iter().map(|a| a + 1).collect())
                .collect(),
            voters: e.voters.clone(),
            alternatives: e.alternatives.clone(),
            distances: e.distance_matrix(),
            min_slack: report.min_slack.is_finite().then_some(report.min_slack),
            margin: report.margin,
            ok: report.ok,
            violations: report.violations.clone(),
            seed: metadata.seed,
            config: metadata.config.clone(),
        }
    }

    /// Parses and checks shapes: `n` voters, `m` alternatives, an `n x m`
    /// distance matrix, finite coordinates and valid rankings.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: EmbeddingDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Document(msg));
        if self.voters.len() != self.n {
            return bad(format!("n = {} but {} voter points", self.n, self.voters.len()));
        }
        if self.alternatives.len() != self.m {
            return bad(format!(
                "m = {} but {} alternative points",
                self.m,
                self.alternatives.len()
            ));
        }
        if self.profile.len() != self.n {
            return bad(format!("n = {} but {} rankings", self.n, self.profile.len()));
        }
        if self.distances.len() != self.n || self.distances.iter().any(|r| r.len() != self.m) {
            return bad(format!("distance matrix is not {} x {}", self.n, self.m));
        }
        if self.voters.iter().chain(&self.alternatives).any(|p| !p.is_finite()) {
            return bad("non-finite coordinate".into());
        }
        self.to_profile().map(|_| ())
    }

    pub fn embedding(&self) -> Embedding {
        Embedding {
            voters: self.voters.clone(),
            alternatives: self.alternatives.clone(),
        }
    }

    /// The recorded profile (lenient: repeated orders are allowed).
    pub fn to_profile(&self) -> Result<Profile> {
        let orders = self
            .profile
            .iter()
            .map(|r| {
                let zero_based = r
                    .iter()
                    .map(|&a| a.checked_sub(1))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::Document("alternative id 0 in 1-based ranking".into()))?;
                PreferenceOrder::new(zero_based).map_err(|e| Error::Document(e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Profile::new_lenient(self.m, orders).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn metadata(&self) -> DocumentMetadata {
        DocumentMetadata {
            seed: self.seed,
            config: self.config.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

pub fn write_embedding(
    p: &Profile,
    e: &Embedding,
    report: &VerificationReport,
    metadata: &DocumentMetadata,
) -> String {
    EmbeddingDocument::new(p, e, report, metadata).to_json()
}

pub fn read_embedding(text: &str) -> Result<(Embedding, DocumentMetadata)> {
    let doc = EmbeddingDocument::parse(text)?;
    Ok((doc.embedding(), doc.metadata()))
}
