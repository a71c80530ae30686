//! Figures built from Pythagorean triples, and the reflection that moves a
//! cyclic quadrilateral between its side orderings on the same circle.

use std::collections::VecDeque;

use crate::error::Result;
use crate::exactnum::{Rational, Surd};
use crate::mensuration::{cyclic_diagonal_pair, same_cyclic_class, DiagQuad, QuadSides, Rhombus};
use crate::triples::PythTriple;

/// Two scaled right triangles glued along their common hypotenuse.
///
/// `sides` is in the canonical order `(l₁n₂, l₂n₁, m₂n₁, m₁n₂)`: the glue
/// diagonal separates `(d, a)` from `(b, c)`. [`CyclicQuadConstruction::glued`]
/// rotates it into the crate's `(a, b) | (c, d)` diagonal convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicQuadConstruction {
    pub source: (PythTriple, PythTriple),
    pub sides: QuadSides,
    pub glue_diagonal: Surd,
    /// Both glued triangles are right-angled on the glue diagonal, so it is a
    /// diameter of the circumcircle.
    pub circumdiameter: Surd,
}

impl CyclicQuadConstruction {
    /// The construction as a [`DiagQuad`] split along the glue diagonal:
    /// sides `(m₁n₂, l₁n₂, l₂n₁, m₂n₁)`.
    pub fn glued(&self) -> DiagQuad {
        DiagQuad::new(self.sides.rotated(3), self.glue_diagonal.clone())
            .expect("right triangles on a shared hypotenuse are valid")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleChoice {
    /// The triangle on sides `a, b`.
    First,
    /// The triangle on sides `c, d`.
    Second,
}

/// Rhombus with side `n` and diagonals `2l`, `2m`: four copies of the triple's
/// right triangle around the centre.
pub fn rhombus_from_triple(t: &PythTriple) -> Rhombus {
    Rhombus::new(Surd::integer(t.n() as i64), Surd::integer(2 * t.l() as i64))
        .expect("2l < 2n for a Pythagorean triple")
}

/// Scale `t1` by `n₂` and `t2` by `n₁`, then glue the two right triangles on
/// the shared hypotenuse `n₁n₂`.
pub fn brahmagupta_quad(t1: &PythTriple, t2: &PythTriple) -> CyclicQuadConstruction {
    let int = |v: u64| Rational::from_integer(v.into());
    let (n1, n2) = (t1.n(), t2.n());
    let sides = QuadSides::new([int(t1.l() * n2), int(t2.l() * n1), int(t2.m() * n1), int(t1.m() * n2)])
        .expect("sides of two glued triangles close up");
    let glue = Surd::integer((n1 * n2) as i64);
    CyclicQuadConstruction {
        source: (*t1, *t2),
        sides,
        glue_diagonal: glue.clone(),
        circumdiameter: glue,
    }
}

/// Reflect one triangle in the perpendicular bisector of the diagonal,
/// exchanging its two outer sides. The vertices stay on the same circle when
/// the input is cyclic.
pub fn reflect_swap(dq: &DiagQuad, which: TriangleChoice) -> DiagQuad {
    let [a, b, c, d] = dq.sides().sides().clone();
    let sides = match which {
        TriangleChoice::First => [b, a, c, d],
        TriangleChoice::Second => [a, b, d, c],
    };
    DiagQuad::new(
        QuadSides::new(sides).expect("same side multiset"),
        dq.diagonal().clone(),
    )
    .expect("reflection keeps both triangles")
}

/// Every cyclic class reachable from `start` by reflect_swap across either
/// cyclic diagonal, re-deriving the diagonals after each step. One
/// representative per class, in discovery order.
pub fn reflection_orbit(start: &QuadSides) -> Result<Vec<QuadSides>> {
    let mut seen: Vec<QuadSides> = vec![start.clone()];
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(current) = queue.pop_front() {
        let pair = cyclic_diagonal_pair(&current);
        // `q` separates (b, c) from (d, a); rotating by one puts it in the
        // (a, b) | (c, d) position
        let splits = [
            DiagQuad::new(current.clone(), pair.p)?,
            DiagQuad::new(current.rotated(1), pair.q)?,
        ];
        for split in &splits {
            for which in [TriangleChoice::First, TriangleChoice::Second] {
                let next = reflect_swap(split, which).sides().clone();
                if !seen.iter().any(|known| same_cyclic_class(known, &next)) {
                    seen.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mensuration::{area_by_diagonal, heron_area, ptolemy_check, rhombus_area, rhombus_second_diagonal, same_side_multiset, sutra_area, triangle_circumradius};
    use crate::triples::{generate_triples, validate_triple};

    fn triple(l: u64, m: u64, n: u64) -> PythTriple {
        validate_triple(l, m, n).unwrap()
    }

    fn quad(sides: [i64; 4]) -> QuadSides {
        QuadSides::from_ints(sides).unwrap()
    }

    fn multiset(q: &QuadSides) -> Vec<Rational> {
        let mut v = q.sides().to_vec();
        v.sort();
        v
    }

    #[test]
    fn rhombus_from_triple_examples() {
        for (t, d1, d2, area) in [
            (triple(15, 20, 25), 30, 40, 600),
            (triple(7, 24, 25), 14, 48, 336),
            (triple(3, 4, 5), 6, 8, 24),
        ] {
            let r = rhombus_from_triple(&t);
            assert_eq!(r.side(), &Surd::integer(t.n() as i64));
            assert_eq!(r.d1(), &Surd::integer(d1));
            assert_eq!(rhombus_second_diagonal(&r), Surd::integer(d2));
            assert_eq!(rhombus_area(&r), Surd::integer(area));
            assert_eq!(area, 2 * (t.l() * t.m()) as i64);
        }
    }

    #[test]
    fn construction_from_3_4_5_and_8_15_17() {
        let c = brahmagupta_quad(&triple(3, 4, 5), &triple(8, 15, 17));
        assert_eq!(c.sides, quad([51, 40, 75, 68]));
        assert_eq!(c.glue_diagonal, Surd::integer(85));
        assert_eq!(c.circumdiameter, Surd::integer(85));
        let glued = c.glued();
        // right-triangle areas: ½·51·68 + ½·40·75 = 1734 + 1500
        assert_eq!(heron_area(&glued.first_triangle().unwrap()), Surd::integer(1734));
        assert_eq!(heron_area(&glued.second_triangle().unwrap()), Surd::integer(1500));
        assert_eq!(area_by_diagonal(&glued).unwrap().split_area, Some(Surd::integer(3234)));
        let pair = cyclic_diagonal_pair(&c.sides);
        assert_eq!((pair.p.clone(), pair.q.clone()), (Surd::integer(77), Surd::integer(85)));
        assert!(ptolemy_check(&c.sides, &pair));
    }

    #[test]
    fn construction_degenerate_and_mixed() {
        let c = brahmagupta_quad(&triple(3, 4, 5), &triple(3, 4, 5));
        assert_eq!(multiset(&c.sides), multiset(&quad([15, 20, 15, 20])));
        assert_eq!(c.glue_diagonal, Surd::integer(25));
        assert_eq!(area_by_diagonal(&c.glued()).unwrap().split_area, Some(Surd::integer(300)));

        let c = brahmagupta_quad(&triple(3, 4, 5), &triple(5, 12, 13));
        assert_eq!(multiset(&c.sides), multiset(&quad([39, 52, 25, 60])));
        assert_eq!(c.glue_diagonal, Surd::integer(65));
        assert!(ptolemy_check(&c.sides, &cyclic_diagonal_pair(&c.sides)));
    }

    #[test]
    fn every_small_construction_is_integral_and_consistent() {
        let triples = generate_triples(25);
        for t1 in &triples {
            for t2 in &triples {
                let c = brahmagupta_quad(t1, t2);
                let glued = c.glued();
                let split = area_by_diagonal(&glued).unwrap().split_area.unwrap();
                assert!(split.is_rational() && split.coefficient().is_integer());
                assert_eq!(sutra_area(&c.sides), split, "{t1} {t2}");
                assert!(c.sides.sides().iter().all(|s| s.is_integer()));
                let r1 = triangle_circumradius(&glued.first_triangle().unwrap());
                let r2 = triangle_circumradius(&glued.second_triangle().unwrap());
                assert_eq!(r1.scale(&Rational::from_integer(2.into())), c.circumdiameter);
                assert_eq!(r1, r2);
            }
        }
    }

    #[test]
    fn reflect_swap_examples() {
        let dq = DiagQuad::new(quad([51, 40, 75, 68]), Surd::integer(85)).unwrap();
        let swapped = reflect_swap(&dq, TriangleChoice::First);
        assert_eq!(swapped.sides(), &quad([40, 51, 75, 68]));
        assert_eq!(swapped.diagonal(), &Surd::integer(85));
        let pair = cyclic_diagonal_pair(swapped.sides());
        assert_eq!((pair.p, pair.q), (Surd::integer(77), Surd::integer(84)));
        assert_eq!(reflect_swap(&swapped, TriangleChoice::First), dq);

        let square = DiagQuad::new(quad([25, 25, 25, 25]), &Surd::integer(25) * &Surd::sqrt_int(2)).unwrap();
        assert_eq!(reflect_swap(&square, TriangleChoice::First), square);
        assert_eq!(reflect_swap(&square, TriangleChoice::Second), square);
    }

    #[test]
    fn reflect_swap_keeps_circumradii_of_cyclic_input() {
        let glued = brahmagupta_quad(&triple(3, 4, 5), &triple(8, 15, 17)).glued();
        for which in [TriangleChoice::First, TriangleChoice::Second] {
            let swapped = reflect_swap(&glued, which);
            assert!(same_side_multiset(swapped.sides(), glued.sides()));
            for (x, y) in [
                (glued.first_triangle(), swapped.first_triangle()),
                (glued.second_triangle(), swapped.second_triangle()),
            ] {
                assert_eq!(triangle_circumradius(&x.unwrap()), triangle_circumradius(&y.unwrap()));
            }
        }
    }

    #[test]
    fn orbit_reaches_three_classes_with_diagonals_77_84_85() {
        let orbit = reflection_orbit(&quad([51, 40, 75, 68])).unwrap();
        assert_eq!(orbit.len(), 3);
        let mut diagonals: Vec<Surd> = orbit
            .iter()
            .flat_map(|q| {
                let pair = cyclic_diagonal_pair(q);
                [pair.p, pair.q]
            })
            .collect();
        diagonals.sort();
        diagonals.dedup();
        assert_eq!(diagonals, vec![Surd::integer(77), Surd::integer(84), Surd::integer(85)]);
        for q in &orbit {
            assert_eq!(sutra_area(q), Surd::integer(3234));
        }
    }

    #[test]
    fn orbit_of_a_square_is_itself() {
        assert_eq!(reflection_orbit(&quad([25, 25, 25, 25])).unwrap().len(), 1);
    }
}
