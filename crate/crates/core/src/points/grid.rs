use std::fmt;

use super::PointSet;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::groebner::{Ideal, ReducedGB};
use crate::poly::{Polynomial, Ring, Term, TermOrdering};

/// The univariate generator attached to one variable of a grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GridFactor {
    /// `∏ (x_i − c)` over the listed roots, repetitions allowed.
    Roots(Vec<FieldElement>),
    /// A monic polynomial in `x_i` alone, of positive degree.
    Polynomial(Polynomial),
}

/// A grid ideal `⟨g_1(x_1), …, g_n(x_n)⟩`, each `g_i` of positive degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridIdeal {
    ring: Ring,
    factors: Vec<GridFactor>,
}

fn linear_root(ring: &Ring, i: usize, c: &FieldElement) -> Polynomial {
    &Polynomial::var(ring, i) - &Polynomial::constant(ring, c.clone())
}

fn product(ring: &Ring, fs: impl IntoIterator<Item = Polynomial>) -> Polynomial {
    fs.into_iter().fold(Polynomial::one(ring), |acc, f| &acc * &f)
}

fn check_count(ring: &Ring, got: usize) -> Result<()> {
    if got != ring.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ring.nvars(),
            got,
        });
    }
    Ok(())
}

/// Monic version of `g`, provided it is a nonconstant polynomial in `x_i` alone.
fn univariate_in(ring: &Ring, g: &Polynomial, i: usize) -> Result<Polynomial> {
    ring.check_same(g.ring())?;
    if g.univariate_var() != Some(i) {
        return Err(Error::InvalidGrid(format!(
            "`{g}` is not a nonconstant polynomial in {} alone",
            ring.var_name(i)
        )));
    }
    Ok(g.monic(&TermOrdering::degrevlex(ring.nvars())))
}

impl GridIdeal {
    pub fn from_roots(ring: &Ring, roots: Vec<Vec<FieldElement>>) -> Result<GridIdeal> {
        check_count(ring, roots.len())?;
        for (i, r) in roots.iter().enumerate() {
            if r.is_empty() {
                return Err(Error::InvalidGrid(format!("no roots for {}", ring.var_name(i))));
            }
            if let Some(c) = r.iter().find(|c| !ring.field().owns(c)) {
                return Err(Error::FieldMismatch(ring.field().to_string(), c.field().to_string()));
            }
        }
        Ok(GridIdeal {
            ring: ring.clone(),
            factors: roots.into_iter().map(GridFactor::Roots).collect(),
        })
    }

    /// Integer roots embedded in the ring's field.
    pub fn from_integer_roots(ring: &Ring, roots: &[Vec<i64>]) -> Result<GridIdeal> {
        let f = ring.field();
        GridIdeal::from_roots(
            ring,
            roots
                .iter()
                .map(|r| r.iter().map(|&c| f.from_i64(c)).collect())
                .collect(),
        )
    }

    pub fn from_polynomials(ring: &Ring, polys: Vec<Polynomial>) -> Result<GridIdeal> {
        check_count(ring, polys.len())?;
        let factors = polys
            .iter()
            .enumerate()
            .map(|(i, g)| univariate_in(ring, g, i).map(GridFactor::Polynomial))
            .collect::<Result<_>>()?;
        Ok(GridIdeal {
            ring: ring.clone(),
            factors,
        })
    }

    /// Reads one line per variable: `x: 0, 1/5, 2` lists roots and
    /// `x: poly x^2 + 1` gives the generator. `#` starts a comment line.
    pub fn parse(ring: &Ring, text: &str) -> Result<GridIdeal> {
        let n = ring.nvars();
        let mut slots: Vec<Option<GridFactor>> = vec![None; n];
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (name, body) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `var: …` in `{line}`")))?;
            let i = ring
                .var_index(name.trim())
                .ok_or_else(|| Error::Parse(format!("unknown variable `{}`", name.trim())))?;
            if slots[i].is_some() {
                return Err(Error::Parse(format!("variable `{}` given twice", name.trim())));
            }
            let body = body.trim();
            let factor = match body.strip_prefix("poly") {
                Some(expr) if expr.starts_with(char::is_whitespace) => {
                    GridFactor::Polynomial(univariate_in(ring, &Polynomial::parse(ring, expr)?, i)?)
                }
                _ => {
                    let roots = body
                        .split(',')
                        .map(|c| ring.field().parse_element(c))
                        .collect::<Result<Vec<_>>>()?;
                    GridFactor::Roots(roots)
                }
            };
            slots[i] = Some(factor);
        }
        let factors: Vec<GridFactor> = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| Error::Parse(format!("no line for `{}`", ring.var_name(i)))))
            .collect::<Result<_>>()?;
        Ok(GridIdeal {
            ring: ring.clone(),
            factors,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn factors(&self) -> &[GridFactor] {
        &self.factors
    }

    /// The monic generator `g_i(x_i)`.
    pub fn generator(&self, i: usize) -> Polynomial {
        match &self.factors[i] {
            GridFactor::Roots(r) => product(&self.ring, r.iter().map(|c| linear_root(&self.ring, i, c))),
            GridFactor::Polynomial(g) => g.clone(),
        }
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars()).map(|i| self.generator(i)).collect()
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.ring.nvars())
            .map(|i| match &self.factors[i] {
                GridFactor::Roots(r) => r.len() as u32,
                GridFactor::Polynomial(g) => g.total_degree().unwrap_or(0),
            })
            .collect()
    }

    /// The generators are the reduced basis for every ordering, so the
    /// degrevlex basis is seeded directly.
    pub fn ideal(&self) -> Ideal {
        let ord = TermOrdering::degrevlex(self.ring.nvars());
        Ideal::from_basis(ReducedGB::from_reduced(&self.ring, &ord, self.generators()))
    }

    /// `∏ x_i^{d_i − 1}`: every quotient-basis term divides it.
    pub fn socle_term(&self) -> Term {
        Term::from_exponents(self.degrees().into_iter().map(|d| d - 1).collect())
    }

    /// The Cartesian product of the roots, first variable varying slowest.
    pub fn points(&self) -> Result<PointSet> {
        let mut roots = Vec::new();
        for (i, f) in self.factors.iter().enumerate() {
            let GridFactor::Roots(r) = f else {
                return Err(Error::InvalidGrid(format!(
                    "roots of {} are not given in factored form",
                    self.ring.var_name(i)
                )));
            };
            if let Some((_, c)) = r.iter().enumerate().find(|&(k, c)| r[..k].contains(c)) {
                return Err(Error::RepeatedRoot(c.to_string(), self.ring.var_name(i).to_string()));
            }
            roots.push(r);
        }
        let mut points: Vec<Vec<FieldElement>> = vec![Vec::new()];
        for r in roots {
            points = points
                .into_iter()
                .flat_map(|p| {
                    r.iter().map(move |c| {
                        let mut q = p.clone();
                        q.push(c.clone());
                        q
                    })
                })
                .collect();
        }
        PointSet::new(&self.ring, points)
    }
}

impl fmt::Display for GridIdeal {
    /// The same line format [`GridIdeal::parse`] reads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            let name = self.ring.var_name(i);
            match factor {
                GridFactor::Roots(r) => {
                    let parts: Vec<String> = r.iter().map(ToString::to_string).collect();
                    writeln!(f, "{name}: {}", parts.join(", "))?;
                }
                GridFactor::Polynomial(g) => writeln!(f, "{name}: poly {g}")?,
            }
        }
        Ok(())
    }
}

pub fn grid_ideal(grid: &GridIdeal) -> Ideal {
    grid.ideal()
}

pub fn grid_points(grid: &GridIdeal) -> Result<PointSet> {
    grid.points()
}

pub fn socle_term(grid: &GridIdeal) -> Term {
    grid.socle_term()
}

/// The largest grid ideal inside a zero-dimensional ideal: per variable, the
/// monic generator of its intersection with `K[x_i]`.
pub fn mgrid(ideal: &Ideal) -> Result<GridIdeal> {
    if ideal.is_zero() || !ideal.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    if ideal.is_unit() {
        return Err(Error::InvalidGrid("the unit ideal contains no grid of positive degree".into()));
    }
    let ring = ideal.ring();
    let n = ring.nvars();
    let polys = (0..n)
        .map(|i| {
            let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let e = ideal.eliminate(&others)?;
            e.degrevlex()
                .elements()
                .first()
                .cloned()
                .ok_or(Error::NotZeroDimensional)
        })
        .collect::<Result<Vec<_>>>()?;
    GridIdeal::from_polynomials(ring, polys)
}

/// `⟨x_i^p − x_i⟩` over a prime field: the grid of every point of `𝔽_p^n`.
pub fn field_equation_ideal(ring: &Ring) -> Result<GridIdeal> {
    let elements = match ring.field() {
        FieldSpec::Rationals => return Err(Error::RationalsNotFinite),
        f @ FieldSpec::Prime(_) => f.elements()?,
    };
    GridIdeal::from_roots(ring, vec![elements; ring.nvars()])
}

/// Every ideal `⟨q_1(x_1), …, q_n(x_n)⟩` with `q_i` drawn from the supplied
/// factorization of `g_i`, first variable varying slowest. The factors must
/// multiply back to `g_i` up to a scalar; irreducibility is the caller's
/// responsibility.
pub fn grid_primary_components(grid: &GridIdeal, factors: &[Vec<Polynomial>]) -> Result<Vec<Ideal>> {
    let ring = grid.ring();
    check_count(ring, factors.len())?;
    let ord = TermOrdering::degrevlex(ring.nvars());
    let mut monic: Vec<Vec<Polynomial>> = Vec::new();
    for (i, fs) in factors.iter().enumerate() {
        let qs = fs
            .iter()
            .map(|q| univariate_in(ring, q, i))
            .collect::<Result<Vec<_>>>()?;
        let prod = product(ring, qs.iter().cloned());
        if prod != grid.generator(i) {
            return Err(Error::FactorProductMismatch(
                ring.var_name(i).to_string(),
                prod.to_string_with(&ord),
            ));
        }
        monic.push(qs);
    }
    let mut combos: Vec<Vec<Polynomial>> = vec![Vec::new()];
    for qs in monic {
        combos = combos
            .into_iter()
            .flat_map(|c| {
                qs.iter().map(move |q| {
                    let mut d = c.clone();
                    d.push(q.clone());
                    d
                })
            })
            .collect();
    }
    Ok(combos
        .into_iter()
        .map(|gens| Ideal::from_basis(ReducedGB::from_reduced(ring, &ord, gens)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(field: FieldSpec, vars: &str) -> Ring {
        Ring::parse_vars(field, vars).unwrap()
    }

    fn polys(r: &Ring, text: &str) -> Vec<Polynomial> {
        crate::poly::parse_polynomial_list(r, text).unwrap()
    }

    #[test]
    fn five_by_four_grid() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let g = GridIdeal::from_integer_roots(&r, &[vec![0, 1, 2, 3, 4], vec![0, 1, 2, 3]]).unwrap();
        let want = polys(&r, "x*(x-1)*(x-2)*(x-3)*(x-4), y*(y-1)*(y-2)*(y-3)");
        assert_eq!(g.generators(), want);
        assert_eq!(g.points().unwrap().len(), 20);
        assert_eq!(g.socle_term(), Term::from_exponents(vec![4, 3]));
        assert_eq!(g.ideal().multiplicity(), Ok(20));
        assert!(g.ideal().degrevlex().verify());
    }

    #[test]
    fn field_equations() {
        let r = ring(FieldSpec::Prime(3), "x,y,z");
        let g = field_equation_ideal(&r).unwrap();
        assert_eq!(g.generators(), polys(&r, "x^3 - x, y^3 - y, z^3 - z"));
        assert_eq!(g.points().unwrap().len(), 27);
        assert_eq!(g.ideal().multiplicity(), Ok(27));
        assert_eq!(g.socle_term(), Term::from_exponents(vec![2, 2, 2]));
        let r2 = ring(FieldSpec::Prime(2), "x");
        assert_eq!(field_equation_ideal(&r2).unwrap().generators(), polys(&r2, "x^2 + x"));
        let q = ring(FieldSpec::Rationals, "x");
        assert_eq!(field_equation_ideal(&q), Err(Error::RationalsNotFinite));
    }

    #[test]
    fn degree_one_grid_is_a_point() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let g = GridIdeal::from_integer_roots(&r, &[vec![5], vec![-2]]).unwrap();
        assert_eq!(g.points().unwrap().len(), 1);
        assert!(g.socle_term().is_one());
    }

    #[test]
    fn repeated_roots_only_block_points() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let g = GridIdeal::from_integer_roots(&r, &[vec![1, 1], vec![0]]).unwrap();
        assert_eq!(g.generators()[0], polys(&r, "(x-1)^2")[0]);
        assert_eq!(g.points(), Err(Error::RepeatedRoot("1".into(), "x".into())));
    }

    #[test]
    fn maximal_grid() {
        let r = ring(FieldSpec::Prime(2), "x,y,z");
        let i = Ideal::parse(&r, "x^2 + x, z^2 + z, y + x + 1, x*z + z").unwrap();
        assert_eq!(mgrid(&i).unwrap().generators(), polys(&r, "x^2 + x, y^2 + y, z^2 + z"));
        let q = ring(FieldSpec::Rationals, "x,y");
        let j1 = Ideal::parse(&q, "x - 1, y^2 - 2").unwrap();
        assert_eq!(mgrid(&j1).unwrap().generators(), polys(&q, "x - 1, y^2 - 2"));
        let line = Ideal::parse(&q, "x - y").unwrap();
        assert_eq!(mgrid(&line), Err(Error::NotZeroDimensional));
    }

    #[test]
    fn parse_round_trip() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let g = GridIdeal::parse(&r, "# grid\ny: poly y^2 - 2\nx: 0, 1/5, 2, -1\n").unwrap();
        assert_eq!(g.degrees(), [4, 2]);
        assert_eq!(GridIdeal::parse(&r, &g.to_string()).unwrap(), g);
        assert!(matches!(GridIdeal::parse(&r, "x: 1\n"), Err(Error::Parse(_))));
        assert!(matches!(GridIdeal::parse(&r, "x: 1\ny: poly x\n"), Err(Error::InvalidGrid(_))));
    }

    #[test]
    fn primary_components_of_a_nonradical_grid() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let g = GridIdeal::from_polynomials(&r, polys(&r, "x*(x^2+1)^2*(x-1), (y^3-1)*(y+2)")).unwrap();
        let fx = polys(&r, "x, (x^2+1)^2, x - 1");
        let fy = polys(&r, "y - 1, y^2 + y + 1, y + 2");
        let comps = grid_primary_components(&g, &[fx.clone(), fy]).unwrap();
        assert_eq!(comps.len(), 9);
        let mut total = 0;
        let mut acc = Ideal::unit(&r);
        for c in &comps {
            total += c.multiplicity().unwrap();
            acc = acc.intersection(c).unwrap();
        }
        assert_eq!(total, 24);
        assert!(acc.equals(&g.ideal()).unwrap());
        let bad = grid_primary_components(&g, &[fx, polys(&r, "y - 1, y + 2")]);
        assert!(matches!(bad, Err(Error::FactorProductMismatch(v, _)) if v == "y"));
    }
}
