//! One function per subcommand; each returns text and JSON renderings of the
//! same result.

use std::fmt::Write;

use gbfan::fan::{enumerate_fan, fan_equal, fan_oracle_zerodim, minimal_models, unique_gb_fast_check};
use gbfan::points::{
    complementary_pair, distraction_ideal, ideal_of_points, mgrid, natural_distraction, order_ideal_of, staircase,
};
use gbfan::{
    DistractionSpec, FieldElement, FieldSpec, GridIdeal, Ideal, LinearShift, MonomialIdeal, PointSet, Polynomial,
    ReducedGB, Ring, Term,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::input::{ordering, IdealSource, Source};
use crate::{CliError, Command, Context, Report};

type Outcome = Result<Report, CliError>;

pub fn name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Gb(_) => "gb",
        Command::Fan(_) => "fan",
        Command::Points(_) => "points",
        Command::Distract { .. } => "distract",
        Command::Natural(_) => "natural",
        Command::Staircase { .. } => "staircase",
        Command::Mgrid(_) => "mgrid",
        Command::Complement { .. } => "complement",
        Command::Shift { .. } => "shift",
        Command::Models { .. } => "models",
        Command::Unique(_) => "unique",
        Command::Selfcheck { .. } => "selfcheck",
    }
}

pub fn dispatch(ctx: &Context, cmd: &Command) -> Outcome {
    match cmd {
        Command::Gb(src) => gb(ctx, src),
        Command::Fan(src) => fan(ctx, src),
        Command::Points(src) => points(ctx, src),
        Command::Distract { source, spec } => distract(ctx, source, spec),
        Command::Natural(src) => natural(ctx, src),
        Command::Staircase { source, diagram } => stair(ctx, source, *diagram),
        Command::Mgrid(src) => max_grid(ctx, src),
        Command::Complement { grid, subset, ideal } => complement(ctx, grid, subset.as_deref(), ideal.as_deref()),
        Command::Shift {
            source,
            scales,
            offsets,
        } => shift(ctx, source, scales.as_deref(), offsets.as_deref()),
        Command::Models { source, function } => models(ctx, source, function),
        Command::Unique(src) => unique(ctx, src),
        Command::Selfcheck { count } => selfcheck(ctx, *count),
    }
}

fn lines<T: ToString>(items: &[T]) -> String {
    items.iter().map(|p| format!("{}\n", p.to_string())).collect()
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn ring_json(ring: &Ring) -> Value {
    json!({ "field": ring.field().to_string(), "vars": ring.var_names() })
}

fn basis_report(basis: &ReducedGB, mut extra: Value) -> Report {
    let elements = basis.to_strings();
    let mut json = json!({
        "order": basis.ordering().to_string(),
        "basis": elements,
    });
    merge(&mut json, ring_json(basis.ring()));
    merge(&mut json, extra.take());
    Report {
        text: lines(&elements),
        json,
    }
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(a), Value::Object(b)) = (into, from) {
        a.extend(b);
    }
}

fn gb(ctx: &Context, src: &IdealSource) -> Outcome {
    let ideal = ctx.flags.ideal(src)?;
    let basis = ideal.groebner(&ordering(&ctx.order, ideal.ring())?)?;
    Ok(basis_report(&basis, Value::Null))
}

fn fan(ctx: &Context, src: &IdealSource) -> Outcome {
    let ideal = ctx.flags.ideal(src)?;
    let fan = enumerate_fan(&ideal)?;
    Ok(Report {
        text: fan.to_string(),
        json: fan.to_json(),
    })
}

fn points(ctx: &Context, src: &Source) -> Outcome {
    let set = ctx.flags.points(&src.read()?)?;
    let (basis, quotient) = ideal_of_points(&set, &ordering(&ctx.order, set.ring())?)?;
    let q: Vec<String> = quotient.iter().map(|t| t.display(set.ring()).to_string()).collect();
    Ok(basis_report(&basis, json!({ "points": set.len(), "quotient_basis": q })))
}

fn generators_report(ideal: &Ideal) -> Report {
    let gens = strings(ideal.generators());
    let mut json = json!({ "generators": gens });
    merge(&mut json, ring_json(ideal.ring()));
    Report {
        text: lines(&gens),
        json,
    }
}

fn distract(ctx: &Context, src: &Source, spec: &str) -> Outcome {
    let m = ctx.flags.monomial_ideal(src)?;
    let spec = DistractionSpec::parse(m.ring(), spec)?;
    Ok(generators_report(&distraction_ideal(&m, &spec)?))
}

fn natural(ctx: &Context, src: &Source) -> Outcome {
    let m = ctx.flags.monomial_ideal(src)?;
    Ok(generators_report(&natural_distraction(&m)?))
}

/// Rows from the top, `●` for the order ideal and `○` for minimal generators.
fn diagram(m: &MonomialIdeal, inside: &[Term]) -> String {
    let cells: Vec<(&Term, char)> = inside
        .iter()
        .map(|t| (t, '●'))
        .chain(m.generators().iter().map(|t| (t, '○')))
        .collect();
    let width = cells.iter().map(|(t, _)| t.exponents()[0]).max().unwrap_or(0) as usize + 1;
    let height = cells.iter().map(|(t, _)| t.exponents()[1]).max().unwrap_or(0) as usize + 1;
    let mut grid = vec![vec!['.'; width]; height];
    for (t, c) in cells {
        grid[t.exponents()[1] as usize][t.exponents()[0] as usize] = c;
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let row: Vec<String> = row.iter().map(char::to_string).collect();
        writeln!(out, "{}", row.join(" ")).expect("string write");
    }
    out
}

fn stair(ctx: &Context, src: &Source, draw: bool) -> Outcome {
    let m = ctx.flags.monomial_ideal(src)?;
    let set = staircase(&m)?;
    let inside = order_ideal_of(&m)?;
    let text = if draw {
        if m.ring().nvars() != 2 {
            return Err(CliError::Usage("--diagram needs exactly two variables".into()));
        }
        diagram(&m, &inside)
    } else {
        set.to_csv()
    };
    let pts: Vec<Vec<String>> = set.points().iter().map(|p| strings(p)).collect();
    let mut json = json!({
        "points": pts,
        "order_ideal": inside.iter().map(|t| t.display(m.ring()).to_string()).collect::<Vec<_>>(),
    });
    merge(&mut json, ring_json(m.ring()));
    Ok(Report { text, json })
}

fn max_grid(ctx: &Context, src: &IdealSource) -> Outcome {
    let ideal = ctx.flags.ideal(src)?;
    let grid = mgrid(&ideal)?;
    let mut json = json!({ "generators": strings(&grid.generators()), "degrees": grid.degrees() });
    merge(&mut json, ring_json(ideal.ring()));
    Ok(Report {
        text: grid.to_string(),
        json,
    })
}

fn complement(
    ctx: &Context,
    grid: &Source,
    subset: Option<&std::path::Path>,
    ideal: Option<&str>,
) -> Outcome {
    let text = grid.read()?;
    let ring = ctx.flags.grid_ring(&text)?;
    let grid = GridIdeal::parse(&ring, &text)?;
    let i1 = match (subset, ideal) {
        (Some(path), _) => {
            let body = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            PointSet::parse(&ring, &body)?.ideal()?
        }
        (None, Some(gens)) => Ideal::parse(&ring, gens)?,
        (None, None) => return Err(CliError::Usage("complement needs --subset or --ideal".into())),
    };
    let (i2, cert) = complementary_pair(&grid, &i1)?;
    let basis = i2.groebner(&ordering(&ctx.order, &ring)?)?;
    let (j, a, b) = cert.multiplicities;
    let mut report = basis_report(
        &basis,
        json!({
            "multiplicities": { "grid": j, "ideal": a, "complement": b },
            "certificate": {
                "intersection_is_grid": cert.intersection_is_grid,
                "comaximal": cert.comaximal,
                "colon_is_symmetric": cert.colon_is_symmetric,
            },
        }),
    );
    report.text = format!("# multiplicities {j} = {a} + {b}\n{}", report.text);
    Ok(report)
}

fn elements(ring: &Ring, list: Option<&str>, default: FieldElement) -> Result<Vec<FieldElement>, CliError> {
    let Some(list) = list else {
        return Ok(vec![default; ring.nvars()]);
    };
    let values = list
        .split(',')
        .map(|c| ring.field().parse_element(c))
        .collect::<gbfan::Result<Vec<_>>>()?;
    Ok(values)
}

fn shift(ctx: &Context, src: &IdealSource, scales: Option<&str>, offsets: Option<&str>) -> Outcome {
    let ideal = ctx.flags.ideal(src)?;
    let ring = ideal.ring();
    let f = ring.field();
    let phi = LinearShift::new(ring, elements(ring, scales, f.one())?, elements(ring, offsets, f.zero())?)?;
    let shifted = ideal.shift(&phi)?;
    let basis = shifted.groebner(&ordering(&ctx.order, ring)?)?;
    Ok(basis_report(&basis, Value::Null))
}

fn models(ctx: &Context, src: &IdealSource, function: &str) -> Outcome {
    let ideal = ctx.flags.ideal(src)?;
    let f = Polynomial::parse(ideal.ring(), function)?;
    let found = strings(&minimal_models(&f, &ideal)?);
    let mut json = json!({ "function": f.to_string(), "models": found });
    merge(&mut json, ring_json(ideal.ring()));
    Ok(Report {
        text: lines(&found),
        json,
    })
}

fn unique(ctx: &Context, src: &IdealSource) -> Outcome {
    let ideal = ctx.flags.ideal(src)?;
    let answer = unique_gb_fast_check(&ideal);
    Ok(Report {
        text: format!("unique: {answer}\n"),
        json: json!({ "unique": answer }),
    })
}

fn random_point(rng: &mut ChaCha8Rng, ring: &Ring) -> Vec<FieldElement> {
    let f = ring.field();
    (0..ring.nvars())
        .map(|_| match f {
            FieldSpec::Rationals => f.from_i64(rng.gen_range(-3..=3)),
            FieldSpec::Prime(p) => f.from_i64(rng.gen_range(0..i64::from(p))),
        })
        .collect()
}

fn selfcheck(ctx: &Context, count: usize) -> Outcome {
    let field = ctx.flags.field.unwrap_or(FieldSpec::Rationals);
    let ring = Ring::parse_vars(field, ctx.flags.vars.as_deref().unwrap_or("x,y"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let mut cones = Vec::new();
    for k in 0..count {
        let size = rng.gen_range(1..=6);
        let mut pts: Vec<Vec<FieldElement>> = Vec::new();
        for _ in 0..4 * size {
            let p = random_point(&mut rng, &ring);
            if pts.len() < size && !pts.contains(&p) {
                pts.push(p);
            }
        }
        let ideal = PointSet::new(&ring, pts)?.ideal()?;
        let fan = enumerate_fan(&ideal)?;
        let oracle = fan_oracle_zerodim(&ideal, 8)?;
        if !fan_equal(&fan, &oracle)? {
            return Err(CliError::Check(format!("case {k}: flip fan and oracle fan differ")));
        }
        if unique_gb_fast_check(&ideal) != (fan.len() == 1) {
            return Err(CliError::Check(format!("case {k}: fast uniqueness check disagrees")));
        }
        cones.push(fan.len());
    }
    Ok(Report {
        text: format!("checked {count} ideals of points, cone counts {cones:?}\n"),
        json: json!({ "checked": count, "cones": cones, "seed": ctx.seed }),
    })
}
