use std::f64::consts::TAU;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{corners, dist, min_enclosing_disk, Disk, FreeArea, Point, GEOMETRY_TOLERANCE};

/// Point sequence used when searching a candidate disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Sampler {
    /// Independent area-uniform draws.
    #[default]
    Uniform,
    /// Halton (2, 3) sequence with a random toroidal shift, mapped area-uniformly.
    Halton,
}

/// Area-uniform point in the closed disk; a zero-radius disk yields its center.
pub fn sample_in_disk<R: Rng + ?Sized>(d: &Disk, rng: &mut R) -> Point {
    if d.radius <= 0.0 {
        return d.center;
    }
    polar_to_disk(d, rng.gen::<f64>(), rng.gen::<f64>())
}

fn polar_to_disk(d: &Disk, u: f64, v: f64) -> Point {
    let r = d.radius * u.sqrt();
    let (s, c) = (TAU * v).sin_cos();
    Point::new(d.center.x + r * c, d.center.y + r * s)
}

fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let inv = 1.0 / base as f64;
    let (mut f, mut out) = (inv, 0.0);
    while i > 0 {
        out += (i % base) as f64 * f;
        i /= base;
        f *= inv;
    }
    out
}

/// Disk in which [`sample_free_area`] searches.
///
/// * corners present: the smallest disk containing them (unless it
///   degenerates to a point, in which case the rules below apply);
/// * otherwise, some annulus bounded: the outer disk of the tightest one;
/// * otherwise: a disk around the centroid of the centers, large enough to
///   reach past every inner circle.
pub fn candidate_disk(f: &FreeArea) -> Disk {
    let corner_pts = corners(f);
    if !corner_pts.is_empty() {
        let d = min_enclosing_disk(&corner_pts).expect("non-empty corner set");
        if d.radius > GEOMETRY_TOLERANCE {
            return d;
        }
    }
    if let Some(a) = f
        .annuli
        .iter()
        .filter(|a| a.is_bounded())
        .min_by(|a, b| a.outer().total_cmp(&b.outer()))
    {
        return Disk::new(a.center, a.outer());
    }
    if f.annuli.is_empty() {
        return Disk::new(Point::ORIGIN, 2.0);
    }
    let k = f.annuli.len() as f64;
    let centroid = Point::new(
        f.annuli.iter().map(|a| a.center.x).sum::<f64>() / k,
        f.annuli.iter().map(|a| a.center.y).sum::<f64>() / k,
    );
    let max_inner = f.annuli.iter().map(|a| a.inner()).fold(0.0, f64::max);
    let mut spread = 0.0f64;
    for (i, a) in f.annuli.iter().enumerate() {
        for b in &f.annuli[i + 1..] {
            spread = spread.max(dist(a.center, b.center));
        }
    }
    Disk::new(centroid, 2.0 * (max_inner + spread + 1.0))
}

/// [`sample_free_area_with`] using independent uniform draws.
pub fn sample_free_area<R: Rng + ?Sized>(
    f: &FreeArea,
    rng: &mut R,
    budget: usize,
    margin: f64,
) -> Option<Point> {
    sample_free_area_with(f, rng, budget, margin, Sampler::Uniform)
}

/// Tries up to `budget` points of the candidate disk and returns the first
/// one inside the free area with `margin` to spare. `None` does not mean
/// the free area is empty.
pub fn sample_free_area_with<R: Rng + ?Sized>(
    f: &FreeArea,
    rng: &mut R,
    budget: usize,
    margin: f64,
    sampler: Sampler,
) -> Option<Point> {
    let disk = candidate_disk(f);
    match sampler {
        Sampler::Uniform => (0..budget)
            .map(|_| sample_in_disk(&disk, rng))
            .find(|&p| f.contains(p, margin)),
        Sampler::Halton => {
            let (du, dv) = (rng.gen::<f64>(), rng.gen::<f64>());
            (1..=budget as u64)
                .map(|i| {
                    let u = (radical_inverse(i, 2) + du).fract();
                    let v = (radical_inverse(i, 3) + dv).fract();
                    polar_to_disk(&disk, u, v)
                })
                .find(|&p| f.contains(p, margin))
        }
    }
}
