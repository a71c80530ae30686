//! Independent checks by coordinate embedding.
//!
//! A [`DiagQuad`] is laid out with its diagonal on the positive x-axis from
//! the origin, the `(a, b)` apex above and the `(c, d)` apex below, so the
//! figure is always convex. Areas then come from the shoelace sum and
//! concyclicity from circumcentre distances, neither of which shares code
//! with the closed-form formulas in [`crate::mensuration`].

use num_traits::Signed;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactnum::{ApproxScalar, Rational, Surd};
use crate::mensuration::{abadha_parts, cyclic_diagonal_pair, DiagQuad, QuadSides, Triangle};

/// Default oracle agreement tolerance exponent: `10^-30`.
pub const DEFAULT_TOLERANCE_EXP: i32 = -30;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub x: ApproxScalar,
    pub y: ApproxScalar,
}

impl Point {
    fn distance_squared(&self, other: &Point) -> ApproxScalar {
        let dx = &self.x - &other.x;
        let dy = &self.y - &other.y;
        &(&dx * &dx) + &(&dy * &dy)
    }

    pub fn distance(&self, other: &Point) -> ApproxScalar {
        self.distance_squared(other).sqrt().expect("sum of squares is non-negative")
    }
}

#[derive(Clone, Debug)]
pub struct EmbeddedQuad {
    /// `p0` at the origin, `p2 = (diagonal, 0)`, `p1` above and `p3` below.
    pub points: [Point; 4],
    pub precision: u32,
    pub source: DiagQuad,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanSample {
    pub diagonal: ApproxScalar,
    pub area: ApproxScalar,
}

#[derive(Clone, Debug)]
pub struct ScanResult {
    /// Strictly increasing in diagonal.
    pub samples: Vec<ScanSample>,
    pub argmax_diagonal: ApproxScalar,
    pub max_area: ApproxScalar,
    /// Grid spacing of the sampled diagonals.
    pub step: Rational,
}

impl ScanResult {
    pub fn argmax_index(&self) -> usize {
        self.samples
            .iter()
            .position(|s| s.area == self.max_area)
            .expect("max_area is one of the samples")
    }

    pub fn min_area(&self) -> &ApproxScalar {
        self.samples.iter().map(|s| &s.area).min().expect("scan has samples")
    }
}

/// Apex of the triangle on `base` (from the origin along +x) with the given
/// distances to the base's two ends; `above` selects the half-plane.
fn apex(base: &Surd, to_origin: &Surd, to_end: &Surd, above: bool, digits: u32) -> Result<Point> {
    let (segment, _, height_squared) = abadha_parts(base, to_origin, to_end)?;
    let height = ApproxScalar::sqrt_rational(&height_squared, digits)?;
    Ok(Point {
        x: segment.approx(digits),
        y: if above { height } else { -&height },
    })
}

pub fn embed(dq: &DiagQuad, digits: u32) -> EmbeddedQuad {
    let [a, b, c, d] = dq.sides().sides().clone().map(Surd::rational);
    let diagonal = dq.diagonal();
    let origin = Point {
        x: ApproxScalar::zero(digits),
        y: ApproxScalar::zero(digits),
    };
    let end = Point {
        x: diagonal.approx(digits),
        y: ApproxScalar::zero(digits),
    };
    let top = apex(diagonal, &a, &b, true, digits).expect("DiagQuad triangles are valid");
    let bottom = apex(diagonal, &d, &c, false, digits).expect("DiagQuad triangles are valid");
    EmbeddedQuad {
        points: [origin, top, end, bottom],
        precision: digits,
        source: dq.clone(),
    }
}

/// Triangle with side `c` on the x-axis from the origin and the apex above;
/// `a` is the distance from the origin to the apex.
pub fn embed_triangle(t: &Triangle, digits: u32) -> [Point; 3] {
    let [a, b, c] = t.sides();
    let top = apex(c, a, b, true, digits).expect("valid triangle");
    [
        Point {
            x: ApproxScalar::zero(digits),
            y: ApproxScalar::zero(digits),
        },
        Point {
            x: c.approx(digits),
            y: ApproxScalar::zero(digits),
        },
        top,
    ]
}

/// `½|Σ (xᵢyᵢ₊₁ − xᵢ₊₁yᵢ)|` over a closed polygon.
pub fn polygon_area(points: &[Point]) -> ApproxScalar {
    let digits = points.first().map_or(crate::exactnum::DEFAULT_DIGITS, |p| p.x.digits());
    let mut twice = ApproxScalar::zero(digits);
    for (i, p) in points.iter().enumerate() {
        let q = &points[(i + 1) % points.len()];
        twice = &twice + &(&(&p.x * &q.y) - &(&q.x * &p.y));
    }
    twice.abs().half()
}

pub fn shoelace_area(e: &EmbeddedQuad) -> ApproxScalar {
    polygon_area(&e.points)
}

/// Centre of the circle through three points.
pub fn circumcenter(p: &Point, q: &Point, r: &Point, tolerance: &ApproxScalar) -> Result<Point> {
    let det = &(&(&p.x * &(&q.y - &r.y)) + &(&q.x * &(&r.y - &p.y))) + &(&r.x * &(&p.y - &q.y));
    let det = &det + &det;
    if det.abs() <= *tolerance {
        return Err(Error::DegenerateCollinear);
    }
    let norm = |v: &Point| &(&v.x * &v.x) + &(&v.y * &v.y);
    let (np, nq, nr) = (norm(p), norm(q), norm(r));
    let ux = &(&(&np * &(&q.y - &r.y)) + &(&nq * &(&r.y - &p.y))) + &(&nr * &(&p.y - &q.y));
    let uy = &(&(&np * &(&r.x - &q.x)) + &(&nq * &(&p.x - &r.x))) + &(&nr * &(&q.x - &p.x));
    Ok(Point {
        x: ux.checked_div(&det)?,
        y: uy.checked_div(&det)?,
    })
}

/// Radius of the circle through the first three points.
pub fn circumradius(e: &EmbeddedQuad, tolerance: &ApproxScalar) -> Result<ApproxScalar> {
    let [p0, p1, p2, _] = &e.points;
    let centre = circumcenter(p0, p1, p2, tolerance)?;
    Ok(p0.distance(&centre))
}

/// Whether all four points are within `tolerance` of the same distance from
/// the circumcentre of the first three.
pub fn concyclic(e: &EmbeddedQuad, tolerance: &ApproxScalar) -> Result<bool> {
    let [p0, p1, p2, _] = &e.points;
    let centre = circumcenter(p0, p1, p2, tolerance)?;
    let radius = p0.distance(&centre);
    Ok(e
        .points
        .iter()
        .all(|p| (&p.distance(&centre) - &radius).abs() <= *tolerance))
}

/// Exact Ptolemy test on the embedded geometry: the second diagonal `p1p3`
/// of the convex layout satisfies `|p1p3|² = (s₁ − s₃)² + (h₁ + h₃)²`, and
/// the quadrilateral is cyclic iff `diagonal² · |p1p3|² = (ac + bd)²`.
pub fn ptolemy_exact(dq: &DiagQuad) -> Result<bool> {
    let [a, b, c, d] = dq.sides().sides().clone().map(Surd::rational);
    let diagonal = dq.diagonal();
    let (s1, _, h1_sq) = abadha_parts(diagonal, &a, &b)?;
    let (s3, _, h3_sq) = abadha_parts(diagonal, &d, &c)?;
    let h1 = Surd::sqrt_of(&h1_sq)?;
    let h3 = Surd::sqrt_of(&h3_sq)?;
    let cross = &h1 * &h3;
    let Some(cross) = cross.as_rational() else {
        // an irrational cross term leaves |p1p3|² outside the rationals, while
        // (ac + bd)² / diagonal² is rational
        return Ok(false);
    };
    let other_squared = s1.checked_sub(&s3)?.square() + h1_sq + h3_sq + cross * Rational::from_integer(2.into());
    let [a, b, c, d] = dq.sides().sides();
    let ptolemy = a * c + b * d;
    Ok(diagonal.square() * other_squared == &ptolemy * &ptolemy)
}

/// Open interval of diagonals that give a valid `(a, b) | (c, d)` split.
pub fn diagonal_range(q: &QuadSides) -> (Rational, Rational) {
    let [a, b, c, d] = q.sides();
    let lower = (a - b).abs().max((c - d).abs());
    let upper = (a + b).min(c + d);
    (lower, upper)
}

/// Sample `steps` equally spaced interior diagonals of the feasible range and
/// measure the embedded area at each.
pub fn area_scan(q: &QuadSides, steps: usize, digits: u32) -> Result<ScanResult> {
    if steps < 3 {
        return Err(Error::InvalidArgument(format!("scan needs at least 3 steps, got {steps}")));
    }
    let (lower, upper) = diagonal_range(q);
    let step = (&upper - &lower) / Rational::from_integer((steps + 1).into());
    let samples = (1..=steps)
        .into_par_iter()
        .map(|i| {
            let diagonal = &lower + &step * Rational::from_integer(i.into());
            let dq = DiagQuad::new(q.clone(), Surd::rational(diagonal.clone()))?;
            Ok(ScanSample {
                diagonal: ApproxScalar::from_rational(&diagonal, digits),
                area: shoelace_area(&embed(&dq, digits)),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let best = samples
        .iter()
        .enumerate()
        .fold(0, |best, (i, s)| if s.area > samples[best].area { i } else { best });
    Ok(ScanResult {
        argmax_diagonal: samples[best].diagonal.clone(),
        max_area: samples[best].area.clone(),
        samples,
        step,
    })
}

/// Whether `scan.argmax_diagonal` lies within one grid step of the cyclic
/// diagonal for the `(a, b) | (c, d)` split.
pub fn argmax_near_cyclic(q: &QuadSides, scan: &ScanResult, digits: u32) -> bool {
    let cyclic = cyclic_diagonal_pair(q).p.approx(digits);
    let step = ApproxScalar::from_rational(&scan.step, digits);
    (&scan.argmax_diagonal - &cyclic).abs() <= step
}
