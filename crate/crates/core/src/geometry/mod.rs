//! Planar primitives used by the embedders and the greedy search.
//!
//! All tolerances assume coordinates at roughly unit scale.

mod enclosing;
mod region;
mod sampling;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enclosing::min_enclosing_disk;
pub use region::{annulus_contains, corners, free_area_contains, Annulus, FreeArea};
pub use sampling::{candidate_disk, sample_free_area, sample_free_area_with, sample_in_disk, Sampler};

/// Absolute tolerance for on-circle tests and for merging nearby points.
pub const GEOMETRY_TOLERANCE: f64 = 1e-9;
/// Tolerance for classifying two circles as tangent.
pub const TANGENCY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn dist(self, other: Point) -> f64 {
        dist(self, other)
    }

    fn lerp(self, other: Point, t: f64) -> Point {
        Point::new(
            self.x + (other.x - self.x) * t,
            self.y + (other.y - self.y) * t,
        )
    }
}

impl From<[f64; 2]> for Point {
    fn from([x, y]: [f64; 2]) -> Self {
        Point { x, y }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Euclidean distance.
pub fn dist(p: Point, q: Point) -> f64 {
    (p.x - q.x).hypot(p.y - q.y)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() || radius < 0.0 {
            return Err(Error::argument(format!(
                "invalid circle: center {center}, radius {radius}"
            )));
        }
        Ok(Circle { center, radius })
    }
}

/// Closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub fn new(center: Point, radius: f64) -> Self {
        debug_assert!(radius >= 0.0 && radius.is_finite());
        Disk { center, radius }
    }

    pub fn contains(&self, p: Point, tolerance: f64) -> bool {
        dist(self.center, p) <= self.radius + tolerance
    }
}

/// Intersection points of two circle boundaries: zero, one (tangent) or two.
///
/// Circles with the same center and radius have infinitely many common
/// points and are reported as [`Error::Degenerate`].
pub fn circle_intersections(c1: &Circle, c2: &Circle) -> Result<Vec<Point>> {
    let d = dist(c1.center, c2.center);
    let (r1, r2) = (c1.radius, c2.radius);
    if d <= GEOMETRY_TOLERANCE {
        if (r1 - r2).abs() <= GEOMETRY_TOLERANCE {
            return Err(Error::Degenerate(format!(
                "coincident circles at {} with radius {r1}",
                c1.center
            )));
        }
        return Ok(Vec::new());
    }

    let outer_gap = d - (r1 + r2);
    let inner_gap = (r1 - r2).abs() - d;
    if outer_gap > TANGENCY_TOLERANCE || inner_gap > TANGENCY_TOLERANCE {
        return Ok(Vec::new());
    }
    let ux = (c2.center.x - c1.center.x) / d;
    let uy = (c2.center.y - c1.center.y) / d;
    if outer_gap.abs() <= TANGENCY_TOLERANCE {
        // Split the gap evenly so the point is equally close to both circles.
        let t = r1 + outer_gap / 2.0;
        return Ok(vec![Point::new(c1.center.x + ux * t, c1.center.y + uy * t)]);
    }
    if inner_gap.abs() <= TANGENCY_TOLERANCE {
        // Internal tangency: the point lies on the far side of the smaller circle.
        let (big, small, sign) = if r1 >= r2 {
            (c1, c2, 1.0)
        } else {
            (c2, c1, -1.0)
        };
        let t = (big.radius + small.radius + d) / 2.0;
        return Ok(vec![Point::new(
            big.center.x + sign * ux * t,
            big.center.y + sign * uy * t,
        )]);
    }

    // Distance from c1 along the center line to the chord, and half-chord length.
    let a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    let h = (r1 * r1 - a * a).max(0.0).sqrt();
    let base = Point::new(c1.center.x + ux * a, c1.center.y + uy * a);
    Ok(vec![
        Point::new(base.x - uy * h, base.y + ux * h),
        Point::new(base.x + uy * h, base.y - ux * h),
    ])
}
