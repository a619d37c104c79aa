use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::groebner::{Ideal, ReducedGB};
use crate::groebner::fglm::kernel_basis;
use crate::poly::{Ring, Term, TermOrdering};

/// A finite set of pairwise distinct points of `K^n`, kept in insertion order.
#[derive(Clone, PartialEq, Eq)]
pub struct PointSet {
    ring: Ring,
    points: Vec<Vec<FieldElement>>,
}

fn show(p: &[FieldElement]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

impl PointSet {
    pub fn new(ring: &Ring, points: Vec<Vec<FieldElement>>) -> Result<PointSet> {
        let field = ring.field();
        let mut seen = HashSet::new();
        for p in &points {
            if p.len() != ring.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: ring.nvars(),
                    got: p.len(),
                });
            }
            if let Some(c) = p.iter().find(|c| !field.owns(c)) {
                return Err(Error::FieldMismatch(field.to_string(), c.field().to_string()));
            }
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint(show(p)));
            }
        }
        Ok(PointSet {
            ring: ring.clone(),
            points,
        })
    }

    /// Points given by integer coordinates, embedded in the ring's field.
    pub fn from_integers(ring: &Ring, points: &[Vec<i64>]) -> Result<PointSet> {
        let f = ring.field();
        let pts = points
            .iter()
            .map(|p| p.iter().map(|&c| f.from_i64(c)).collect())
            .collect();
        PointSet::new(ring, pts)
    }

    /// Reads CSV rows of coordinates in field syntax. Lines starting with `#`
    /// are ignored.
    pub fn parse(ring: &Ring, text: &str) -> Result<PointSet> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(text.as_bytes());
        let mut points = Vec::new();
        for record in reader.records() {
            let record = record.map_err(|e| Error::Parse(e.to_string()))?;
            if record.iter().all(str::is_empty) {
                continue;
            }
            let p = record
                .iter()
                .map(|c| ring.field().parse_element(c))
                .collect::<Result<Vec<_>>>()?;
            points.push(p);
        }
        PointSet::new(ring, points)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[FieldElement]) -> bool {
        self.points.iter().any(|q| q == p)
    }

    /// Same points, regardless of order.
    pub fn same_set(&self, other: &PointSet) -> bool {
        self.len() == other.len() && self.points.iter().all(|p| other.contains(p))
    }

    /// Points of `self` not in `other`, in the order of `self`.
    pub fn difference(&self, other: &PointSet) -> PointSet {
        PointSet {
            ring: self.ring.clone(),
            points: self
                .points
                .iter()
                .filter(|p| !other.contains(p))
                .cloned()
                .collect(),
        }
    }

    /// Points of either set, `self` first.
    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut points = self.points.clone();
        points.extend(other.points.iter().filter(|p| !self.contains(p)).cloned());
        PointSet {
            ring: self.ring.clone(),
            points,
        }
    }

    /// The distinct values taken by coordinate `i`, in first-seen order.
    pub fn coordinate_values(&self, i: usize) -> Vec<FieldElement> {
        let mut out: Vec<FieldElement> = Vec::new();
        for p in &self.points {
            if !out.contains(&p[i]) {
                out.push(p[i].clone());
            }
        }
        out
    }

    /// True when the set is the full Cartesian product of its coordinate values.
    pub fn is_grid(&self) -> bool {
        let n = self.ring.nvars();
        let size = (0..n).try_fold(1usize, |acc, i| acc.checked_mul(self.coordinate_values(i).len()));
        size == Some(self.len())
    }

    /// The vanishing ideal, with its reduced degrevlex basis pre-cached.
    pub fn ideal(&self) -> Result<Ideal> {
        let (basis, _) = ideal_of_points(self, &TermOrdering::degrevlex(self.ring.nvars()))?;
        Ok(Ideal::from_basis(basis))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
            out.push_str(&parts.join(","));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|p| show(p)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Reads a points file whose optional `# field:` and `# vars:` headers fill in
/// whatever the caller leaves unspecified. Without either, the field is ℚ and
/// the variables are `x1, …, xn`.
pub fn parse_points_file(text: &str, field: Option<FieldSpec>, vars: Option<&str>) -> Result<PointSet> {
    let mut header_field = None;
    let mut header_vars = None;
    for line in text.lines() {
        let Some(rest) = line.trim().strip_prefix('#') else {
            continue;
        };
        if let Some((key, value)) = rest.split_once(':') {
            match key.trim() {
                "field" => header_field = Some(value.trim().parse::<FieldSpec>()?),
                "vars" => header_vars = Some(value.trim().to_string()),
                _ => {}
            }
        }
    }
    let field = field.or(header_field).unwrap_or(FieldSpec::Rationals);
    let vars = match vars.map(str::to_string).or(header_vars) {
        Some(v) => v,
        None => {
            let width = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .map_or(0, |l| l.split(',').count());
            (1..=width).map(|i| format!("x{i}")).collect::<Vec<_>>().join(",")
        }
    };
    let ring = Ring::parse_vars(field, &vars)?;
    PointSet::parse(&ring, text)
}

fn evaluate_term(t: &Term, p: &[FieldElement], one: &FieldElement) -> FieldElement {
    t.exponents()
        .iter()
        .zip(p)
        .filter(|(&e, _)| e > 0)
        .fold(one.clone(), |acc, (&e, c)| &acc * &c.pow(e))
}

/// The reduced σ-basis of the vanishing ideal of `points`, together with the
/// quotient basis sorted increasingly by σ.
///
/// The kernel of evaluation at the points, found term by term in increasing
/// σ order.
pub fn ideal_of_points(points: &PointSet, ord: &TermOrdering) -> Result<(ReducedGB, Vec<Term>)> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let ring = points.ring();
    let n = ring.nvars();
    if ord.nvars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: ord.nvars(),
        });
    }
    let one = ring.field().one();
    let image = |t: &Term| points.points.iter().map(|p| evaluate_term(t, p, &one)).collect();
    Ok(kernel_basis(ring, ord, image))
}
