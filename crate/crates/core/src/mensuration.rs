//! Area, diagonal and perpendicular formulas for triangles, trapezia, rhombi
//! and general quadrilaterals, all over exact surd arithmetic.
//!
//! Quadrilateral sides are listed in cyclic order `[a, b, c, d]`. A diagonal
//! always separates the triangle on sides `a, b` from the triangle on sides
//! `c, d`; any other split is expressed by rotating the side order.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Surd};

fn rat(value: i64) -> Rational {
    Rational::from_integer(value.into())
}

fn join(values: &[&dyn fmt::Display]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// `16·T²` for a triangle with squared sides `x, y, z`:
/// `2(xy + yz + zx) − (x² + y² + z²)`.
///
/// Only squares of the sides appear, so the result is rational even when
/// the sides are surds with different radicands. For positive sides it is
/// positive exactly when the strict triangle inequality holds.
fn sixteen_area_squared(x: &Rational, y: &Rational, z: &Rational) -> Rational {
    let two = rat(2);
    &two * (x * y + y * z + z * x) - (x * x + y * y + z * z)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    a: Surd,
    b: Surd,
    c: Surd,
}

impl Triangle {
    pub fn new(a: Surd, b: Surd, c: Surd) -> Result<Self> {
        let invalid = || Error::InvalidTriangle(join(&[&a, &b, &c]));
        if !(a.is_positive() && b.is_positive() && c.is_positive()) {
            return Err(invalid());
        }
        if !sixteen_area_squared(&a.square(), &b.square(), &c.square()).is_positive() {
            return Err(invalid());
        }
        Ok(Triangle { a, b, c })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into())
    }

    pub fn sides(&self) -> [&Surd; 3] {
        [&self.a, &self.b, &self.c]
    }

    fn area_squared(&self) -> Rational {
        sixteen_area_squared(&self.a.square(), &self.b.square(), &self.c.square()) / rat(16)
    }
}

/// Four positive rational sides in cyclic order, each shorter than the sum of
/// the other three.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSides {
    sides: [Rational; 4],
}

impl QuadSides {
    pub fn new(sides: [Rational; 4]) -> Result<Self> {
        let total: Rational = sides.iter().sum();
        let closes = sides.iter().all(|s| s.is_positive() && s + s < total);
        if !closes {
            return Err(Error::InvalidQuadrilateral(join(&[&sides[0], &sides[1], &sides[2], &sides[3]])));
        }
        Ok(QuadSides { sides })
    }

    pub fn from_ints(sides: [i64; 4]) -> Result<Self> {
        Self::new(sides.map(rat))
    }

    pub fn sides(&self) -> &[Rational; 4] {
        &self.sides
    }

    pub fn semiperimeter(&self) -> Rational {
        self.sides.iter().sum::<Rational>() / rat(2)
    }

    /// Cyclic rotation: side `i` of the result is side `i + by` of `self`.
    pub fn rotated(&self, by: usize) -> QuadSides {
        let s = &self.sides;
        QuadSides {
            sides: std::array::from_fn(|i| s[(i + by) % 4].clone()),
        }
    }

    /// The same polygon traversed the other way round: `[a, d, c, b]`.
    pub fn reversed(&self) -> QuadSides {
        let [a, b, c, d] = self.sides.clone();
        QuadSides { sides: [a, d, c, b] }
    }

    /// Side order with the middle pair exchanged: `[a, c, b, d]`.
    pub fn swap_middle(&self) -> QuadSides {
        let [a, b, c, d] = self.sides.clone();
        QuadSides { sides: [a, c, b, d] }
    }
}

impl fmt::Display for QuadSides {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.sides;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

/// A quadrilateral fixed by its sides plus the diagonal between the `a∧b`
/// triangle and the `c∧d` triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagQuad {
    sides: QuadSides,
    diagonal: Surd,
}

impl DiagQuad {
    pub fn new(sides: QuadSides, diagonal: Surd) -> Result<Self> {
        let dq = DiagQuad { sides, diagonal };
        if dq.first_triangle().is_err() || dq.second_triangle().is_err() {
            return Err(Error::InvalidDiagonal(format!("{} with diagonal {}", dq.sides, dq.diagonal)));
        }
        Ok(dq)
    }

    pub fn sides(&self) -> &QuadSides {
        &self.sides
    }

    pub fn diagonal(&self) -> &Surd {
        &self.diagonal
    }

    /// Triangle `(a, b, diagonal)`.
    pub fn first_triangle(&self) -> Result<Triangle> {
        let [a, b, _, _] = &self.sides.sides;
        Triangle::new(a.into(), b.into(), self.diagonal.clone())
    }

    /// Triangle `(c, d, diagonal)`.
    pub fn second_triangle(&self) -> Result<Triangle> {
        let [_, _, c, d] = &self.sides.sides;
        Triangle::new(c.into(), d.into(), self.diagonal.clone())
    }
}

/// Trapezium with parallel `base` and `face` and perpendicular distance
/// `height` between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trapezium {
    base: Rational,
    face: Rational,
    legs: [Rational; 2],
    height: Rational,
}

impl Trapezium {
    pub fn new(base: Rational, face: Rational, legs: [Rational; 2], height: Rational) -> Result<Self> {
        let positive = [&base, &face, &legs[0], &legs[1], &height].iter().all(|v| v.is_positive());
        if !positive {
            return Err(Error::InvalidTrapezium("all lengths must be positive".into()));
        }
        if face > base {
            return Err(Error::InvalidTrapezium(format!("face {face} exceeds base {base}")));
        }
        if legs.iter().any(|leg| &height > leg) {
            return Err(Error::InvalidTrapezium(format!("height {height} exceeds a leg")));
        }
        Ok(Trapezium { base, face, legs, height })
    }

    pub fn from_ints(base: i64, face: i64, legs: [i64; 2], height: i64) -> Result<Self> {
        Self::new(rat(base), rat(face), legs.map(rat), rat(height))
    }

    pub fn legs(&self) -> &[Rational; 2] {
        &self.legs
    }
}

/// Rhombus of side `side` with one diagonal `d1`, `0 < d1 < 2·side`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rhombus {
    side: Surd,
    d1: Surd,
}

impl Rhombus {
    pub fn new(side: Surd, d1: Surd) -> Result<Self> {
        let degenerate = || Error::DegenerateRhombus {
            side: side.to_string(),
            d1: d1.to_string(),
        };
        if !side.is_positive() || !d1.is_positive() {
            return Err(degenerate());
        }
        if d1.square() >= rat(4) * side.square() {
            return Err(degenerate());
        }
        Ok(Rhombus { side, d1 })
    }

    pub fn side(&self) -> &Surd {
        &self.side
    }

    pub fn d1(&self) -> &Surd {
        &self.d1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MensurationReport {
    pub semiperimeter: Surd,
    pub gross_area: Surd,
    pub sutra_area: Surd,
    pub split_area: Option<Surd>,
    /// Heights of the `(a, b)` and `(c, d)` triangles over the diagonal.
    pub perpendiculars: Option<(Surd, Surd)>,
}

/// The two diagonals of the cyclic quadrilateral with the given sides:
/// `p` separates `(a, b)` from `(c, d)`, `q` separates `(b, c)` from `(d, a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalPair {
    pub p: Surd,
    pub q: Surd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbadhaSplit {
    /// Signed distance from the left end of the base to the foot of the
    /// perpendicular; negative when the foot falls outside the base.
    pub segment_left: Surd,
    pub segment_right: Surd,
    pub height: Surd,
}

/// Product of the half-sums of opposite sides: `((a + c)/2)·((b + d)/2)`.
pub fn gross_area(q: &QuadSides) -> Surd {
    let [a, b, c, d] = &q.sides;
    Surd::rational((a + c) * (b + d) / rat(4))
}

/// `√((s−a)(s−b)(s−c)(s−d))` for any side list, whether or not a cyclic
/// quadrilateral is meant.
pub fn sutra_area(q: &QuadSides) -> Surd {
    let s = q.semiperimeter();
    // every factor is positive by the closure invariant
    q.sides
        .iter()
        .map(|side| Surd::sqrt_of(&(&s - side)).expect("closure keeps s − side positive"))
        .fold(Surd::integer(1), |acc, root| &acc * &root)
}

/// `√(s(s−a)(s−b)(s−c))`.
pub fn heron_area(t: &Triangle) -> Surd {
    Surd::sqrt_of(&t.area_squared()).expect("valid triangle has positive area")
}

/// `½·(base + face)·height`.
pub fn trapezium_area(t: &Trapezium) -> Surd {
    Surd::rational((&t.base + &t.face) * &t.height / rat(2))
}

/// `d₂ = √(4a² − d₁²)`.
pub fn rhombus_second_diagonal(r: &Rhombus) -> Surd {
    Surd::sqrt_of(&(rat(4) * r.side.square() - r.d1.square())).expect("rhombus invariant keeps 4a² > d₁²")
}

/// `½·d₁·d₂`.
pub fn rhombus_area(r: &Rhombus) -> Surd {
    (&r.d1 * &rhombus_second_diagonal(r)).scale(&Rational::new(1.into(), 2.into()))
}

/// Foot of the perpendicular from the apex onto `base`, for the triangle with
/// sides `flank_left` (at the left end of the base) and `flank_right`.
pub fn abadha_split(base: &Surd, flank_left: &Surd, flank_right: &Surd) -> Result<AbadhaSplit> {
    let (segment_left, segment_right, height_squared) = abadha_parts(base, flank_left, flank_right)?;
    Ok(AbadhaSplit {
        segment_left,
        segment_right,
        height: Surd::sqrt_of(&height_squared)?,
    })
}

/// Segments plus the squared height, which is always rational. The oracle
/// uses this to avoid factoring large radicands it only needs to approximate.
pub(crate) fn abadha_parts(base: &Surd, flank_left: &Surd, flank_right: &Surd) -> Result<(Surd, Surd, Rational)> {
    Triangle::new(base.clone(), flank_left.clone(), flank_right.clone())?;
    let numer = base.square() + flank_left.square() - flank_right.square();
    let segment_left = Surd::rational(numer / rat(2)).checked_div(base)?;
    // segment_left is a rational multiple of the base's radicand, so this
    // subtraction never mixes radicands
    let segment_right = base.checked_sub(&segment_left)?;
    let height_squared = flank_left.square() - segment_left.square();
    Ok((segment_left, segment_right, height_squared))
}

/// Area by splitting along the given diagonal into two triangles, plus the
/// perpendiculars onto that diagonal. The gross and sūtra fields are filled in
/// from the sides alone.
pub fn area_by_diagonal(dq: &DiagQuad) -> Result<MensurationReport> {
    let first = heron_area(&dq.first_triangle()?);
    let second = heron_area(&dq.second_triangle()?);
    let two_over_diagonal = dq.diagonal.recip()?.scale(&rat(2));
    let perpendiculars = (&first * &two_over_diagonal, &second * &two_over_diagonal);
    let split_area = first.checked_add(&second)?;
    Ok(MensurationReport {
        semiperimeter: Surd::rational(dq.sides.semiperimeter()),
        gross_area: gross_area(&dq.sides),
        sutra_area: sutra_area(&dq.sides),
        split_area: Some(split_area),
        perpendiculars: Some(perpendiculars),
    })
}

/// Report for the sides alone, without a diagonal.
pub fn quad_report(q: &QuadSides) -> MensurationReport {
    MensurationReport {
        semiperimeter: Surd::rational(q.semiperimeter()),
        gross_area: gross_area(q),
        sutra_area: sutra_area(q),
        split_area: None,
        perpendiculars: None,
    }
}

/// Diagonals of the cyclic quadrilateral with these sides in this order:
/// `p = √((ac+bd)(ad+bc)/(ab+cd))`, `q = √((ac+bd)(ab+cd)/(ad+bc))`.
pub fn cyclic_diagonal_pair(q: &QuadSides) -> DiagonalPair {
    let [a, b, c, d] = &q.sides;
    let ac_bd = a * c + b * d;
    let ad_bc = a * d + b * c;
    let ab_cd = a * b + c * d;
    let root = |value: Rational| Surd::sqrt_of(&value).expect("products of positive sides");
    DiagonalPair {
        p: root(&ac_bd * &ad_bc / &ab_cd),
        q: root(&ac_bd * &ab_cd / &ad_bc),
    }
}

/// Ptolemy's equality `p·q = ac + bd`, decided exactly.
pub fn ptolemy_check(q: &QuadSides, d: &DiagonalPair) -> bool {
    let [a, b, c, dd] = &q.sides;
    &d.p * &d.q == Surd::rational(a * c + b * dd)
}

/// `abc / (4·T)`.
pub fn triangle_circumradius(t: &Triangle) -> Surd {
    let area = heron_area(t);
    let product = &(&t.a * &t.b) * &t.c;
    let denom = area.scale(&rat(4));
    product.checked_div(&denom).expect("valid triangle has nonzero area")
}

/// Whether two side lists describe the same cyclic class: equal up to
/// rotation and reflection.
pub fn same_cyclic_class(x: &QuadSides, y: &QuadSides) -> bool {
    (0..4).any(|r| {
        let rotated = y.rotated(r);
        rotated == *x || rotated.reversed() == *x
    })
}

/// `true` when `a` equals `b` as unordered side multisets.
pub fn same_side_multiset(a: &QuadSides, b: &QuadSides) -> bool {
    let mut x = a.sides.to_vec();
    let mut y = b.sides.to_vec();
    x.sort();
    y.sort();
    x == y
}
