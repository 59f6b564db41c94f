//! Closed-form embeddings for profiles with at most two voters or at most
//! three alternatives.

use super::Embedding;
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::profile::Profile;

/// Rank-coordinate construction for one or two voters.
///
/// Voter 1 sits at `(-m^2, 0)` and voter 2 at `(0, -m^2)`; alternative `a`
/// sits at `(rk_1(a), rk_2(a))`. Every distance from voter `i` to `a` then
/// falls in `[m^2 + rk_i(a), m^2 + rk_i(a) + 1)`, so the bands of distinct
/// ranks never overlap. A single voter uses second coordinate 0.
pub fn embed_two_voters(p: &Profile) -> Result<Embedding> {
    let n = p.num_voters();
    if n > 2 {
        return Err(Error::argument(format!(
            "two-voter construction needs n <= 2, got n = {n}"
        )));
    }
    let m = p.num_alternatives();
    let far = -((m * m) as f64);
    let first = p.orders()[0].positions();
    let second = p.orders().get(1).map(|o| o.positions());

    let mut voters = vec![Point::new(far, 0.0)];
    if second.is_some() {
        voters.push(Point::new(0.0, far));
    }
    let alternatives = (0..m)
        .map(|a| {
            let y = second.as_ref().map_or(0, |s| s[a]);
            Point::new(first[a] as f64, y as f64)
        })
        .collect();
    Embedding::new(voters, alternatives)
}

// Alternatives a, b, c and one voter position per ranking of them.
const TRIANGLE: [Point; 3] = [Point::new(0.0, 2.0), Point::new(2.0, -1.0), Point::new(-2.0, -1.0)];
const TRIANGLE_VOTERS: [([usize; 3], Point); 6] = [
    ([0, 1, 2], Point::new(2.0, 2.0)),
    ([1, 0, 2], Point::new(2.0, 0.0)),
    ([1, 2, 0], Point::new(1.0, -1.0)),
    ([2, 1, 0], Point::new(-1.0, -1.0)),
    ([2, 0, 1], Point::new(-2.0, 0.0)),
    ([0, 2, 1], Point::new(-2.0, 2.0)),
];

/// Fixed-coordinate construction for at most three alternatives.
///
/// With three alternatives they are placed at `(0,2)`, `(2,-1)`, `(-2,-1)`
/// and each of the six rankings gets its own voter position. Two
/// alternatives go to `(0,0)` and `(3,0)` with voters at `(-1,0)` or `(4,0)`;
/// a lone alternative sits at the origin with every voter at `(1,0)`.
pub fn embed_three_alternatives(p: &Profile) -> Result<Embedding> {
    let m = p.num_alternatives();
    let (alternatives, voters): (Vec<Point>, Vec<Point>) = match m {
        1 => (vec![Point::ORIGIN], vec![Point::new(1.0, 0.0); p.num_voters()]),
        2 => (
            vec![Point::ORIGIN, Point::new(3.0, 0.0)],
            p.orders()
                .iter()
                .map(|o| {
                    if o.ranking()[0] == 0 {
                        Point::new(-1.0, 0.0)
                    } else {
                        Point::new(4.0, 0.0)
                    }
                })
                .collect(),
        ),
        3 => (
            TRIANGLE.to_vec(),
            p.orders()
                .iter()
                .map(|o| {
                    TRIANGLE_VOTERS
                        .iter()
                        .find(|(r, _)| r[..] == *o.ranking())
                        .map(|&(_, v)| v)
                        .expect("every ranking of three alternatives is tabulated")
                })
                .collect(),
        ),
        _ => {
            return Err(Error::argument(format!(
                "three-alternative construction needs m <= 3, got m = {m}"
            )))
        }
    };
    Embedding::new(voters, alternatives)
}
