//! The reproduction manifest: every worked example re-derived from scratch,
//! each entry tagged with the historical passage it comes from.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::json::{approx_json, exact_json};
use super::RunConfig;
use crate::construct::{brahmagupta_quad, rhombus_from_triple, reflection_orbit};
use crate::error::{Error, Result};
use crate::exactnum::{ApproxScalar, Rational, Surd};
use crate::mensuration::{
    area_by_diagonal, cyclic_diagonal_pair, gross_area, heron_area, ptolemy_check, rhombus_area,
    rhombus_second_diagonal, same_cyclic_class, same_side_multiset, sutra_area, trapezium_area,
    triangle_circumradius, DiagQuad, DiagonalPair, QuadSides, Rhombus, Trapezium, Triangle,
};
use crate::oracle::{area_scan, concyclic, embed, embed_triangle, polygon_area, shoelace_area, DEFAULT_TOLERANCE_EXP};
use crate::triples::validate_triple;

const TRAPEZIUM: &str = "Līlāvatī 168 [170], Vāsanābhāṣya";
const GROSS: &str = "Brāhmasphuṭasiddhānta XII.21";
const WORKED: &str = "Līlāvatī 178 [176], Vāsanābhāṣya";
const RHOMBUS: &str = "Līlāvatī 174-175, Vāsanābhāṣya";
const CONSTRUCTION: &str = "Brāhmasphuṭasiddhānta XII.38; Līlāvatī 191-192 [186-187], Gaṇeśa";
const INDETERMINACY: &str = "Līlāvatī 169-170 [171], Vāsanābhāṣya";
const TRIANGLE_EXACT: &str = "Līlāvatī 167 [169]";

/// Random cases per seeded property entry.
pub const PROPERTY_CASES: usize = 100;

/// Agreement tolerance between exact values and the oracle: `10^-30`, or
/// six digits short of the working precision when that is lower.
pub fn oracle_tolerance(digits: u32) -> ApproxScalar {
    let exp = (-DEFAULT_TOLERANCE_EXP).min(digits as i32 - 6).max(1);
    ApproxScalar::pow10(-exp, digits)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryValue {
    Exact(Surd),
    Approx(ApproxScalar),
    Verdict(String),
}

impl EntryValue {
    fn to_json(&self, digits: u32) -> Value {
        match self {
            EntryValue::Exact(s) => exact_json(s, digits),
            EntryValue::Approx(a) => approx_json(a),
            EntryValue::Verdict(v) => Value::String(v.clone()),
        }
    }
}

impl fmt::Display for EntryValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntryValue::Exact(s) => write!(f, "{s}"),
            EntryValue::Approx(a) => {
                // long approximations would swamp the table
                let text = a.to_string();
                match text.char_indices().nth(24) {
                    Some((cut, _)) => write!(f, "{}…", &text[..cut]),
                    None => f.write_str(&text),
                }
            }
            EntryValue::Verdict(v) => f.write_str(v),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ManifestEntry {
    pub id: &'static str,
    pub description: &'static str,
    pub expected: EntryValue,
    pub computed: EntryValue,
    /// Set for approximate entries only.
    pub tolerance: Option<ApproxScalar>,
    pub passed: bool,
    pub provenance: &'static str,
}

impl ManifestEntry {
    pub fn status(&self) -> &'static str {
        if self.passed {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_json(&self, digits: u32) -> Value {
        json!({
            "id": self.id,
            "description": self.description,
            "expected": self.expected.to_json(digits),
            "computed": self.computed.to_json(digits),
            "tolerance": self.tolerance.as_ref().map(approx_json),
            "status": self.status(),
            "provenance": self.provenance,
        })
    }
}

struct Builder<'a> {
    digits: u32,
    inject: Option<&'a str>,
    entries: Vec<ManifestEntry>,
}

impl Builder<'_> {
    fn corrupt(&self, id: &str) -> bool {
        self.inject == Some(id)
    }

    fn exact(&mut self, id: &'static str, description: &'static str, provenance: &'static str, expected: Surd, computed: Surd) {
        let expected = if self.corrupt(id) {
            expected.checked_add(&Surd::integer(1)).unwrap_or_else(|_| expected.scale(&Rational::from_integer(2.into())))
        } else {
            expected
        };
        self.entries.push(ManifestEntry {
            id,
            description,
            passed: expected == computed,
            expected: EntryValue::Exact(expected),
            computed: EntryValue::Exact(computed),
            tolerance: None,
            provenance,
        });
    }

    #[allow(clippy::too_many_arguments)]
    fn approx(
        &mut self,
        id: &'static str,
        description: &'static str,
        provenance: &'static str,
        expected: ApproxScalar,
        tolerance: ApproxScalar,
        computed: ApproxScalar,
    ) {
        let expected = if self.corrupt(id) {
            &expected + &ApproxScalar::from_integer(1, self.digits)
        } else {
            expected
        };
        self.entries.push(ManifestEntry {
            id,
            description,
            passed: (&expected - &computed).abs() <= tolerance,
            expected: EntryValue::Approx(expected),
            computed: EntryValue::Approx(computed),
            tolerance: Some(tolerance),
            provenance,
        });
    }

    fn verdict(&mut self, id: &'static str, description: &'static str, provenance: &'static str, expected: String, computed: String) {
        let expected = if self.corrupt(id) { format!("not {expected}") } else { expected };
        self.entries.push(ManifestEntry {
            id,
            description,
            passed: expected == computed,
            expected: EntryValue::Verdict(expected),
            computed: EntryValue::Verdict(computed),
            tolerance: None,
            provenance,
        });
    }

    fn holds(&mut self, id: &'static str, description: &'static str, provenance: &'static str, computed: bool) {
        self.verdict(id, description, provenance, "true".into(), computed.to_string());
    }
}

fn int(v: i64) -> Surd {
    Surd::integer(v)
}

fn quad(sides: [i64; 4]) -> Result<QuadSides> {
    QuadSides::from_ints(sides)
}

fn listing(values: &[Surd]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// Evaluate the whole manifest. `inject` names one entry whose expected
/// value is deliberately perturbed; an unknown id is an error.
pub fn run_manifest(config: &RunConfig, inject: Option<&str>) -> Result<Vec<ManifestEntry>> {
    config.require_approx_precision()?;
    let digits = config.precision_digits;
    let tol = oracle_tolerance(digits);
    let loose = ApproxScalar::parse("0.001", digits)?;
    let mut m = Builder {
        digits,
        inject,
        entries: Vec::new(),
    };

    // trapezium: base 14, face 9, legs 13 and 12, height 12
    let trapezium = Trapezium::from_ints(14, 9, [13, 12], 12)?;
    let trapezium_sides = quad([14, 12, 9, 13])?;
    let sutra = sutra_area(&trapezium_sides);
    m.exact("trapezium.area", "true area of the trapezium (14, 9; 13, 12; height 12)", TRAPEZIUM, int(138), trapezium_area(&trapezium));
    m.exact("trapezium.sutra", "Brahmagupta's formula on the trapezium sides", TRAPEZIUM, &int(30) * &Surd::sqrt_int(22), sutra.clone());
    m.holds("trapezium.sutra_below_141", "formula value is a little less than 141", TRAPEZIUM, sutra < int(141));
    m.holds("trapezium.sutra_above_138", "formula value exceeds the true area 138", TRAPEZIUM, sutra > int(138));
    m.approx(
        "trapezium.sutra_decimal",
        "formula value as a decimal",
        TRAPEZIUM,
        ApproxScalar::parse("140.7124", digits)?,
        ApproxScalar::parse("0.0005", digits)?,
        sutra.approx(digits),
    );
    m.exact("gross.trapezium", "product of half-sums of opposite sides", GROSS, Surd::ratio(575, 4), gross_area(&trapezium_sides));
    m.holds("gross.exceeds_sutra", "gross rule exceeds the formula value", GROSS, gross_area(&trapezium_sides) > sutra);

    // worked example: face 51, base 75, left 68, right 40, diagonal 77
    let worked = DiagQuad::new(quad([75, 68, 51, 40])?, int(77))?;
    let report = area_by_diagonal(&worked)?;
    let (h1, h2) = report.perpendiculars.clone().expect("diagonal given");
    m.exact("worked.split_area", "area through the assumed diagonal 77", WORKED, int(3234), report.split_area.clone().expect("diagonal given"));
    m.exact("worked.perpendicular_first", "perpendicular onto 77 from the (75, 68) apex", WORKED, int(60), h1);
    m.exact("worked.perpendicular_second", "perpendicular onto 77 from the (51, 40) apex", WORKED, int(24), h2);
    let worked_cycle = quad([51, 68, 75, 40])?;
    m.exact("worked.sutra", "formula value on 51, 68, 75, 40", WORKED, int(3234), sutra_area(&worked_cycle));
    m.holds(
        "worked.ptolemy",
        "diagonals 85 and 77 satisfy Ptolemy's equality",
        WORKED,
        ptolemy_check(&worked_cycle, &DiagonalPair { p: int(85), q: int(77) }),
    );

    let orders = [quad([51, 68, 75, 40])?, quad([51, 75, 68, 40])?, quad([51, 68, 40, 75])?];
    let mut trio: Vec<Surd> = orders
        .iter()
        .flat_map(|q| {
            let pair = cyclic_diagonal_pair(q);
            [pair.p, pair.q]
        })
        .collect();
    trio.sort();
    trio.dedup();
    m.verdict("trio.diagonals", "cyclic diagonals over the three orderings", WORKED, "77, 84, 85".into(), listing(&trio));
    m.exact("trio.circumradius_first", "circumradius of triangle (75, 68, 77)", WORKED, Surd::ratio(85, 2), triangle_circumradius(&worked.first_triangle()?));
    m.exact("trio.circumradius_second", "circumradius of triangle (51, 40, 77)", WORKED, Surd::ratio(85, 2), triangle_circumradius(&worked.second_triangle()?));

    // rhombi of side 25
    let r1 = rhombus_from_triple(&validate_triple(15, 20, 25)?);
    let r2 = rhombus_from_triple(&validate_triple(7, 24, 25)?);
    let square = Rhombus::new(int(25), &int(25) * &Surd::sqrt_int(2))?;
    m.exact("rhombus.area_15_20_25", "rhombus from (15, 20, 25)", RHOMBUS, int(600), rhombus_area(&r1));
    m.exact("rhombus.area_7_24_25", "rhombus from (7, 24, 25)", RHOMBUS, int(336), rhombus_area(&r2));
    m.exact("rhombus.area_square_25", "square of side 25", RHOMBUS, int(625), rhombus_area(&square));
    m.exact("rhombus.diagonal_15_20_25", "second diagonal when the first is 30", RHOMBUS, int(40), rhombus_second_diagonal(&r1));
    m.exact("rhombus.diagonal_7_24_25", "second diagonal when the first is 14", RHOMBUS, int(48), rhombus_second_diagonal(&r2));
    for (id, d, area) in [("rhombus.embed_30", 30, 600), ("rhombus.embed_14", 14, 336)] {
        let dq = DiagQuad::new(quad([25, 25, 25, 25])?, int(d))?;
        m.approx(id, "shoelace area of the embedded rhombus", RHOMBUS, ApproxScalar::from_integer(area, digits), tol.clone(), shoelace_area(&embed(&dq, digits)));
    }

    // construction from (3, 4, 5) and (8, 15, 17)
    let built = brahmagupta_quad(&validate_triple(3, 4, 5)?, &validate_triple(8, 15, 17)?);
    let glued = built.glued();
    m.holds("construct.sides", "side multiset is {51, 40, 75, 68}", CONSTRUCTION, same_side_multiset(&built.sides, &quad([51, 40, 75, 68])?));
    m.exact("construct.glue_diagonal", "common hypotenuse 5·17", CONSTRUCTION, int(85), built.glue_diagonal.clone());
    m.exact("construct.split_area", "area through the glue diagonal", CONSTRUCTION, int(3234), area_by_diagonal(&glued)?.split_area.expect("diagonal given"));
    m.holds("construct.concyclic", "embedded vertices lie on one circle", CONSTRUCTION, concyclic(&embed(&glued, digits), &tol)?);
    m.holds("construct.same_class", "same cyclic class as the worked example", CONSTRUCTION, same_cyclic_class(&built.sides, &worked_cycle));
    let orbit = reflection_orbit(&built.sides)?;
    let mut orbit_diagonals: Vec<Surd> = orbit
        .iter()
        .flat_map(|q| {
            let pair = cyclic_diagonal_pair(q);
            [pair.p, pair.q]
        })
        .collect();
    orbit_diagonals.sort();
    orbit_diagonals.dedup();
    m.verdict("construct.orbit_diagonals", "diagonals met by reflecting across diagonals", CONSTRUCTION, "77, 84, 85".into(), listing(&orbit_diagonals));

    // oracle cross-checks
    m.approx("oracle.worked_area", "shoelace area of the worked example", WORKED, ApproxScalar::from_integer(3234, digits), tol.clone(), shoelace_area(&embed(&worked, digits)));
    let trapezium_split = DiagQuad::new(quad([14, 13, 9, 12])?, int(15))?;
    m.approx("oracle.trapezium_area", "shoelace area of the trapezium", TRAPEZIUM, ApproxScalar::from_integer(138, digits), tol.clone(), shoelace_area(&embed(&trapezium_split, digits)));
    m.holds("oracle.concyclic_77", "diagonal 77 puts the vertices on a circle", WORKED, concyclic(&embed(&worked, digits), &tol)?);
    let off = DiagQuad::new(quad([75, 68, 51, 40])?, int(70))?;
    m.verdict("oracle.concyclic_70", "diagonal 70 does not", INDETERMINACY, "false".into(), concyclic(&embed(&off, digits), &tol)?.to_string());

    // indeterminacy scans
    let square_scan = area_scan(&quad([25, 25, 25, 25])?, config.scan_steps, digits)?;
    let square_step = ApproxScalar::from_rational(&square_scan.step, digits);
    m.approx("scan.square_max", "largest sampled area for sides 25, 25, 25, 25", RHOMBUS, ApproxScalar::from_integer(625, digits), loose.clone(), square_scan.max_area.clone());
    m.approx("scan.square_argmax", "area peaks at the square's diagonal", RHOMBUS, (&int(25) * &Surd::sqrt_int(2)).approx(digits), square_step, square_scan.argmax_diagonal.clone());
    m.holds("scan.indeterminacy", "same sides, different areas", INDETERMINACY, square_scan.min_area() < &square_scan.max_area);
    let worked_scan = area_scan(&quad([75, 40, 51, 68])?, config.scan_steps, digits)?;
    let worked_step = ApproxScalar::from_rational(&worked_scan.step, digits);
    m.approx("scan.worked_max", "largest sampled area for sides 75, 40, 51, 68", WORKED, ApproxScalar::from_integer(3234, digits), loose, worked_scan.max_area.clone());
    m.approx("scan.worked_argmax", "area peaks at the cyclic diagonal 85", WORKED, ApproxScalar::from_integer(85, digits), worked_step, worked_scan.argmax_diagonal.clone());

    // seeded properties
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut held = 0;
    for _ in 0..PROPERTY_CASES {
        let q = random_quad(&mut rng, 500);
        let (gross, sutra) = (gross_area(&q), sutra_area(&q));
        let [a, b, c, d] = q.sides();
        let equal = gross == sutra;
        if gross >= sutra && equal == (a == c && b == d) {
            held += 1;
        }
    }
    let all = format!("{PROPERTY_CASES}/{PROPERTY_CASES}");
    m.verdict("property.gross_ge_sutra", "gross rule never undercuts the formula", GROSS, all.clone(), format!("{held}/{PROPERTY_CASES}"));
    let mut held = 0;
    for _ in 0..PROPERTY_CASES {
        let t = random_triangle(&mut rng, 200);
        let oracle = polygon_area(&embed_triangle(&t, digits));
        if (&heron_area(&t).approx(digits) - &oracle).abs() < tol {
            held += 1;
        }
    }
    m.verdict("property.heron_oracle", "Heron's rule matches the embedded triangle", TRIANGLE_EXACT, all, format!("{held}/{PROPERTY_CASES}"));

    if let Some(id) = inject {
        if !m.entries.iter().any(|e| e.id == id) {
            return Err(Error::InvalidArgument(format!("no manifest entry named {id:?}")));
        }
    }
    Ok(m.entries)
}

/// Integer side list with every side at most `max`, redrawn until it closes.
pub fn random_quad(rng: &mut impl Rng, max: i64) -> QuadSides {
    loop {
        let sides = [0; 4].map(|_| rng.gen_range(1..=max));
        if let Ok(q) = QuadSides::from_ints(sides) {
            return q;
        }
    }
}

/// Integer triangle with every side at most `max`.
pub fn random_triangle(rng: &mut impl Rng, max: i64) -> Triangle {
    loop {
        let [a, b, c] = [0; 3].map(|_| rng.gen_range(1..=max));
        if let Ok(t) = Triangle::from_ints(a, b, c) {
            return t;
        }
    }
}
