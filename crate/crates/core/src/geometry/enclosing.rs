//! Smallest enclosing disk by randomized incremental construction.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{dist, Disk, Point, GEOMETRY_TOLERANCE};
use crate::error::{Error, Result};

// Fixed so that equal inputs give bit-identical disks.
const SHUFFLE_SEED: u64 = 0x5eed_d15c;

/// Smallest closed disk containing every point; expected linear time.
pub fn min_enclosing_disk(points: &[Point]) -> Result<Disk> {
    if points.is_empty() {
        return Err(Error::argument("min_enclosing_disk of an empty point set"));
    }
    let mut pts = points.to_vec();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(SHUFFLE_SEED));

    let mut disk = Disk::new(pts[0], 0.0);
    for i in 1..pts.len() {
        if outside(&disk, pts[i]) {
            disk = with_one_boundary(&pts[..i], pts[i]);
        }
    }
    Ok(disk)
}

fn outside(disk: &Disk, p: Point) -> bool {
    !disk.contains(p, GEOMETRY_TOLERANCE * 1e-3)
}

fn with_one_boundary(pts: &[Point], q: Point) -> Disk {
    let mut disk = Disk::new(q, 0.0);
    for j in 0..pts.len() {
        if outside(&disk, pts[j]) {
            disk = with_two_boundary(&pts[..j], q, pts[j]);
        }
    }
    disk
}

fn with_two_boundary(pts: &[Point], q1: Point, q2: Point) -> Disk {
    let mut disk = diameter_disk(q1, q2);
    for &p in pts {
        if outside(&disk, p) {
            disk = circumdisk(q1, q2, p);
        }
    }
    disk
}

pub(crate) fn diameter_disk(a: Point, b: Point) -> Disk {
    let center = a.lerp(b, 0.5);
    Disk::new(center, dist(a, center).max(dist(b, center)))
}

/// Circle through three points; collinear triples fall back to the widest pair.
pub(crate) fn circumdisk(a: Point, b: Point, c: Point) -> Disk {
    let (bx, by) = (b.x - a.x, b.y - a.y);
    let (cx, cy) = (c.x - a.x, c.y - a.y);
    let det = 2.0 * (bx * cy - by * cx);
    let scale = (bx * bx + by * by).max(cx * cx + cy * cy);
    if det.abs() <= f64::EPSILON * scale {
        let candidates = [diameter_disk(a, b), diameter_disk(a, c), diameter_disk(b, c)];
        return candidates
            .into_iter()
            .max_by(|d1, d2| d1.radius.total_cmp(&d2.radius))
            .expect("three candidates");
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / det;
    let uy = (bx * c2 - cx * b2) / det;
    let center = Point::new(a.x + ux, a.y + uy);
    let radius = dist(center, a).max(dist(center, b)).max(dist(center, c));
    Disk::new(center, radius)
}
