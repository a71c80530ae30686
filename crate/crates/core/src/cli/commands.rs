use std::fmt::Write as _;

use serde_json::{json, Value};

use super::json::{approx_json, exact_json, rational_json};
use super::manifest::{oracle_tolerance, run_manifest};
use super::{svg, Command, Rendered, RunConfig, EXIT_MANIFEST_FAILURE, EXIT_OK};
use crate::construct::{brahmagupta_quad, reflection_orbit, rhombus_from_triple};
use crate::error::{Error, Result};
use crate::exactnum::{parse_decimal, ApproxScalar, Rational, Surd};
use crate::mensuration::{
    cyclic_diagonal_pair, heron_area, quad_report, rhombus_area, rhombus_second_diagonal, triangle_circumradius,
    DiagQuad, QuadSides, Rhombus, Triangle,
};
use crate::oracle::{area_scan, argmax_near_cyclic, concyclic, diagonal_range, embed, ptolemy_exact, shoelace_area};
use crate::triples::{generate_triples, hypotenuse_pairs, validate_triple, PythTriple};

pub(crate) fn dispatch(command: &Command, config: &RunConfig) -> Result<Rendered> {
    match command {
        Command::Reproduce { inject_failure } => reproduce(config, inject_failure.as_deref()),
        Command::Area { lengths, diagonal } => area(lengths, diagonal.as_deref(), config),
        Command::Construct { l1, m1, n1, l2, m2, n2 } => construct([*l1, *m1, *n1], [*l2, *m2, *n2], config),
        Command::Scan { sides } => scan(sides, config),
        Command::Rhombus { side, d1, triple } => rhombus(side.as_deref(), d1.as_deref(), triple.as_deref(), config),
        Command::Triples { max_hypotenuse, pairs } => triples(*max_hypotenuse, *pairs),
    }
}

/// Text and JSON bodies built side by side.
struct Report {
    digits: u32,
    text: String,
    fields: serde_json::Map<String, Value>,
}

impl Report {
    fn new(digits: u32) -> Self {
        Report {
            digits,
            text: String::new(),
            fields: serde_json::Map::new(),
        }
    }

    fn line(&mut self, label: &str, value: impl std::fmt::Display) {
        writeln!(self.text, "{label:<26}{value}").expect("write to string");
    }

    fn exact(&mut self, key: &str, label: &str, value: &Surd) {
        let shown = if value.as_rational().is_some_and(|r| r.is_integer()) {
            value.to_string()
        } else {
            format!("{value} ≈ {}", value.approx(self.digits))
        };
        self.line(label, shown);
        self.fields.insert(key.into(), exact_json(value, self.digits));
    }

    fn approx(&mut self, key: &str, label: &str, value: &ApproxScalar) {
        self.line(label, value);
        self.fields.insert(key.into(), approx_json(value));
    }

    fn flag(&mut self, key: &str, label: &str, value: bool) {
        self.line(label, value);
        self.fields.insert(key.into(), json!(value));
    }

    fn raw(&mut self, key: &str, value: Value) {
        self.fields.insert(key.into(), value);
    }

    fn finish(self) -> Rendered {
        Rendered {
            code: EXIT_OK,
            text: self.text,
            json_body: vec![("report", Value::Object(self.fields))],
            svg: None,
        }
    }
}

fn parse_length(text: &str) -> Result<Rational> {
    let value = parse_decimal(text)?;
    if value <= Rational::from_integer(0.into()) {
        return Err(Error::InvalidArgument(format!("length must be positive, got {text}")));
    }
    Ok(value)
}

fn parse_quad(texts: &[String]) -> Result<QuadSides> {
    let sides: Vec<Rational> = texts.iter().map(|t| parse_length(t)).collect::<Result<_>>()?;
    let sides: [Rational; 4] = sides
        .try_into()
        .map_err(|_| Error::InvalidArgument("expected four side lengths".into()))?;
    QuadSides::new(sides)
}

fn sides_json(q: &QuadSides) -> Value {
    Value::Array(q.sides().iter().map(rational_json).collect())
}

fn reproduce(config: &RunConfig, inject: Option<&str>) -> Result<Rendered> {
    let entries = run_manifest(config, inject)?;
    let digits = config.precision_digits;
    let passed = entries.iter().filter(|e| e.passed).count();
    let id_width = entries.iter().map(|e| e.id.len()).max().unwrap_or(0);
    let mut text = String::new();
    for e in &entries {
        writeln!(
            text,
            "{}  {:<id_width$}  expected {}  computed {}  [{}]",
            e.status().to_uppercase(),
            e.id,
            e.expected,
            e.computed,
            e.provenance
        )
        .expect("write to string");
    }
    writeln!(text, "{passed}/{} entries pass", entries.len()).expect("write to string");
    Ok(Rendered {
        code: if passed == entries.len() { EXIT_OK } else { EXIT_MANIFEST_FAILURE },
        text,
        json_body: vec![
            ("entries", Value::Array(entries.iter().map(|e| e.to_json(digits)).collect())),
            ("summary", json!({ "passed": passed, "total": entries.len() })),
        ],
        svg: None,
    })
}

fn area(lengths: &[String], diagonal: Option<&str>, config: &RunConfig) -> Result<Rendered> {
    let digits = config.precision_digits;
    let mut r = Report::new(digits);
    if lengths.len() == 3 {
        if diagonal.is_some() {
            return Err(Error::InvalidArgument("--diagonal needs four side lengths".into()));
        }
        let sides: Vec<Surd> = lengths.iter().map(|t| parse_length(t).map(Surd::rational)).collect::<Result<_>>()?;
        let t = Triangle::new(sides[0].clone(), sides[1].clone(), sides[2].clone())?;
        r.line("figure", "triangle");
        r.raw("figure", json!("triangle"));
        r.line("sides", lengths.join(", "));
        r.raw("sides", Value::Array(sides.iter().map(|s| exact_json(s, digits)).collect()));
        let s = Surd::rational(sides.iter().map(|s| s.as_rational().expect("rational input").clone()).sum::<Rational>() / Rational::from_integer(2.into()));
        r.exact("semiperimeter", "semiperimeter", &s);
        r.exact("area", "area (Heron)", &heron_area(&t));
        r.exact("circumradius", "circumradius", &triangle_circumradius(&t));
        return Ok(r.finish());
    }

    let q = parse_quad(lengths)?;
    let base = quad_report(&q);
    r.line("figure", "quadrilateral");
    r.raw("figure", json!("quadrilateral"));
    r.line("sides", &q);
    r.raw("sides", sides_json(&q));
    r.exact("semiperimeter", "semiperimeter", &base.semiperimeter);
    r.exact("gross_area", "gross area", &base.gross_area);
    r.exact("sutra_area", "Brahmagupta area", &base.sutra_area);
    let pair = cyclic_diagonal_pair(&q);
    r.exact("cyclic_diagonal_p", "cyclic diagonal p", &pair.p);
    r.exact("cyclic_diagonal_q", "cyclic diagonal q", &pair.q);

    let Some(diagonal) = diagonal else {
        return Ok(r.finish());
    };
    let dq = DiagQuad::new(q, Surd::rational(parse_length(diagonal)?))?;
    r.exact("diagonal", "diagonal", dq.diagonal());
    let first = heron_area(&dq.first_triangle()?);
    let second = heron_area(&dq.second_triangle()?);
    r.exact("triangle_area_first", "area (a, b) triangle", &first);
    r.exact("triangle_area_second", "area (c, d) triangle", &second);
    match first.checked_add(&second) {
        Ok(split) => r.exact("split_area", "split area", &split),
        Err(_) => {
            // the two triangle areas have different radicands
            let split = &first.approx(digits) + &second.approx(digits);
            r.line("split area", format!("{first} + {second} ≈ {split}"));
            r.raw("split_area", approx_json(&split));
        }
    }
    let two_over_diagonal = dq.diagonal().recip()?.scale(&Rational::from_integer(2.into()));
    r.exact("perpendicular_first", "perpendicular (a, b)", &(&first * &two_over_diagonal));
    r.exact("perpendicular_second", "perpendicular (c, d)", &(&second * &two_over_diagonal));
    r.flag("cyclic", "cyclic (Ptolemy, exact)", ptolemy_exact(&dq)?);
    let embedded = embed(&dq, digits);
    r.approx("oracle_area", "oracle shoelace area", &shoelace_area(&embedded));
    r.flag("oracle_concyclic", "oracle concyclic", concyclic(&embedded, &oracle_tolerance(digits))?);
    Ok(r.finish())
}

fn triple(values: [u64; 3]) -> Result<PythTriple> {
    validate_triple(values[0], values[1], values[2])
}

fn construct(first: [u64; 3], second: [u64; 3], config: &RunConfig) -> Result<Rendered> {
    let digits = config.precision_digits;
    let (t1, t2) = (triple(first)?, triple(second)?);
    let built = brahmagupta_quad(&t1, &t2);
    let glued = built.glued();
    let pair = cyclic_diagonal_pair(&built.sides);
    let mut r = Report::new(digits);
    r.line("triples", format!("{t1} and {t2}"));
    r.raw("triples", json!([[t1.l(), t1.m(), t1.n()], [t2.l(), t2.m(), t2.n()]]));
    r.line("sides", &built.sides);
    r.raw("sides", sides_json(&built.sides));
    r.exact("glue_diagonal", "glue diagonal", &built.glue_diagonal);
    r.exact("cyclic_diagonal_p", "cyclic diagonal p", &pair.p);
    r.exact("cyclic_diagonal_q", "cyclic diagonal q", &pair.q);
    r.exact("area", "area", &crate::mensuration::sutra_area(&built.sides));
    r.exact("circumdiameter", "circumdiameter", &built.circumdiameter);
    r.flag("concyclic", "oracle concyclic", concyclic(&embed(&glued, digits), &oracle_tolerance(digits))?);
    let orbit = reflection_orbit(&built.sides)?;
    let mut classes = Vec::new();
    for q in &orbit {
        let d = cyclic_diagonal_pair(q);
        r.line("reflection class", format!("{q}: diagonals {}, {}", d.p, d.q));
        classes.push(json!({
            "sides": sides_json(q),
            "diagonal_p": exact_json(&d.p, digits),
            "diagonal_q": exact_json(&d.q, digits),
        }));
    }
    r.raw("reflection_classes", Value::Array(classes));
    Ok(r.finish())
}

fn scan(texts: &[String], config: &RunConfig) -> Result<Rendered> {
    config.require_approx_precision()?;
    let digits = config.precision_digits;
    let q = parse_quad(texts)?;
    let result = area_scan(&q, config.scan_steps, digits)?;
    let (lower, upper) = diagonal_range(&q);
    let pair = cyclic_diagonal_pair(&q);
    let mut r = Report::new(digits);
    r.line("sides", &q);
    r.raw("sides", sides_json(&q));
    r.line("diagonal range", format!("({lower}, {upper})"));
    r.raw("diagonal_range", json!({ "lower": rational_json(&lower), "upper": rational_json(&upper) }));
    r.line("steps", config.scan_steps);
    r.line("step", &result.step);
    r.raw("step", rational_json(&result.step));
    r.approx("max_area", "max sampled area", &result.max_area);
    r.approx("argmax_diagonal", "at diagonal", &result.argmax_diagonal);
    r.approx("min_area", "min sampled area", result.min_area());
    r.exact("sutra_area", "Brahmagupta area", &crate::mensuration::sutra_area(&q));
    r.exact("cyclic_diagonal", "cyclic diagonal", &pair.p);
    r.flag("argmax_near_cyclic", "argmax within a step", argmax_near_cyclic(&q, &result, digits));
    r.raw(
        "samples",
        Value::Array(
            result
                .samples
                .iter()
                .map(|s| json!({ "diagonal": approx_json(&s.diagonal), "area": approx_json(&s.area) }))
                .collect(),
        ),
    );
    let figure = svg::scan_figure(&q, &result)?;
    let mut rendered = r.finish();
    rendered.svg = Some(figure);
    Ok(rendered)
}

fn rhombus(side: Option<&str>, d1: Option<&str>, from_triple: Option<&[u64]>, config: &RunConfig) -> Result<Rendered> {
    let figure = match (side, d1, from_triple) {
        (_, _, Some(values)) => {
            let values: [u64; 3] = values
                .try_into()
                .map_err(|_| Error::InvalidArgument("--triple takes three integers".into()))?;
            rhombus_from_triple(&triple(values)?)
        }
        (Some(side), Some(d1), None) => Rhombus::new(Surd::rational(parse_length(side)?), Surd::rational(parse_length(d1)?))?,
        _ => return Err(Error::InvalidArgument("give a side and a diagonal, or --triple L M N".into())),
    };
    let mut r = Report::new(config.precision_digits);
    r.exact("side", "side", figure.side());
    r.exact("first_diagonal", "first diagonal", figure.d1());
    r.exact("second_diagonal", "second diagonal", &rhombus_second_diagonal(&figure));
    let area = rhombus_area(&figure);
    r.exact("area", "area", &area);
    let square = Surd::rational(figure.side().square());
    r.exact("square_area", "square of the same side", &square);
    // an irrational area has no exact difference from the rational square
    if let Ok(gap) = square.checked_sub(&area) {
        r.exact("square_excess", "square exceeds by", &gap);
    }
    Ok(r.finish())
}

fn triples(max: u64, pairs: bool) -> Result<Rendered> {
    let as_json = |t: &PythTriple| json!([t.l(), t.m(), t.n()]);
    let mut text = String::new();
    let entries: Vec<Value> = if pairs {
        hypotenuse_pairs(max)
            .iter()
            .map(|(a, b)| {
                writeln!(text, "{a} {b}").expect("write to string");
                json!([as_json(a), as_json(b)])
            })
            .collect()
    } else {
        generate_triples(max)
            .iter()
            .map(|t| {
                writeln!(text, "{t}").expect("write to string");
                as_json(t)
            })
            .collect()
    };
    Ok(Rendered {
        code: EXIT_OK,
        text,
        json_body: vec![("entries", Value::Array(entries))],
        svg: None,
    })
}
