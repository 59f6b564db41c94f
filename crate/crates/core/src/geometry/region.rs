use super::{circle_intersections, dist, Circle, Point, GEOMETRY_TOLERANCE};
use crate::error::{Error, Result};

/// Open ring `inner < dist(center, p) < outer`; `outer` may be infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Annulus {
    pub center: Point,
    inner: f64,
    outer: f64,
}

impl Annulus {
    pub fn new(center: Point, inner: f64, outer: f64) -> Result<Self> {
        let valid = center.is_finite()
            && inner.is_finite()
            && inner >= 0.0
            && !outer.is_nan()
            && outer > inner;
        if !valid {
            return Err(Error::argument(format!(
                "invalid annulus at {center}: need 0 <= {inner} < {outer}"
            )));
        }
        Ok(Annulus {
            center,
            inner,
            outer,
        })
    }

    /// The whole plane minus nothing: `(0, +inf)`.
    pub fn unconstrained(center: Point) -> Self {
        Annulus {
            center,
            inner: 0.0,
            outer: f64::INFINITY,
        }
    }

    pub fn inner(&self) -> f64 {
        self.inner
    }

    pub fn outer(&self) -> f64 {
        self.outer
    }

    pub fn is_bounded(&self) -> bool {
        self.outer.is_finite()
    }

    pub fn is_unconstrained(&self) -> bool {
        self.inner == 0.0 && !self.is_bounded()
    }

    /// Boundary circles that actually constrain: the inner one when its
    /// radius is positive, the outer one when finite.
    pub fn boundary_circles(&self) -> impl Iterator<Item = Circle> + '_ {
        let inner = (self.inner > 0.0).then_some(Circle {
            center: self.center,
            radius: self.inner,
        });
        let outer = self.is_bounded().then_some(Circle {
            center: self.center,
            radius: self.outer,
        });
        inner.into_iter().chain(outer)
    }
}

/// `inner + margin < dist < outer - margin`; the upper test is skipped when unbounded.
pub fn annulus_contains(a: &Annulus, p: Point, margin: f64) -> bool {
    let d = dist(a.center, p);
    d > a.inner + margin && (!a.is_bounded() || d < a.outer - margin)
}

/// Intersection of open annuli. The empty sequence is the whole plane.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FreeArea {
    pub annuli: Vec<Annulus>,
}

impl FreeArea {
    pub fn new(annuli: Vec<Annulus>) -> Self {
        FreeArea { annuli }
    }

    pub fn contains(&self, p: Point, margin: f64) -> bool {
        free_area_contains(self, p, margin)
    }
}

pub fn free_area_contains(f: &FreeArea, p: Point, margin: f64) -> bool {
    f.annuli.iter().all(|a| annulus_contains(a, p, margin))
}

/// Pairwise intersections of boundary circles from different annuli that lie
/// on the closure of the free area, with near-duplicates merged.
pub fn corners(f: &FreeArea) -> Vec<Point> {
    let circles: Vec<(usize, Circle)> = f
        .annuli
        .iter()
        .enumerate()
        .flat_map(|(i, a)| a.boundary_circles().map(move |c| (i, c)))
        .collect();

    let mut out: Vec<Point> = Vec::new();
    for (k, (i, c1)) in circles.iter().enumerate() {
        for (j, c2) in &circles[k + 1..] {
            // Concentric circles of one annulus never meet.
            if i == j {
                continue;
            }
            // Coincident boundaries have no isolated corner.
            let Ok(points) = circle_intersections(c1, c2) else {
                continue;
            };
            for p in points {
                if free_area_contains(f, p, -GEOMETRY_TOLERANCE)
                    && !out.iter().any(|&q| dist(p, q) <= GEOMETRY_TOLERANCE)
                {
                    out.push(p);
                }
            }
        }
    }
    out
}
