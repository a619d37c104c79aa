//! Monomial ideals kept as their minimal generating set.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring, Term, TermOrdering};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    generators: Vec<Term>,
}

fn minimalize(mut terms: Vec<Term>) -> Vec<Term> {
    terms.sort();
    terms.dedup();
    let keep: Vec<bool> = terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            !terms
                .iter()
                .enumerate()
                .any(|(j, s)| j != i && s.divides(t))
        })
        .collect();
    terms
        .into_iter()
        .zip(keep)
        .filter_map(|(t, k)| k.then_some(t))
        .collect()
}

impl MonomialIdeal {
    pub fn new(ring: &Ring, generators: Vec<Term>) -> Result<Self> {
        if let Some(t) = generators.iter().find(|t| t.nvars() != ring.nvars()) {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                got: t.nvars(),
            });
        }
        Ok(MonomialIdeal {
            ring: ring.clone(),
            generators: minimalize(generators),
        })
    }

    /// Parses a list of monomials such as `x^2, x*y*z^2, y^2`.
    pub fn parse(ring: &Ring, text: &str) -> Result<Self> {
        let polys = crate::poly::parse_polynomial_list(ring, text)?;
        let mut gens = Vec::new();
        for p in polys {
            let mut it = p.terms();
            match (it.next(), it.next()) {
                (Some((t, c)), None) if c.is_one() => gens.push(t.clone()),
                _ => return Err(Error::Parse(format!("`{p}` is not a monomial"))),
            }
        }
        MonomialIdeal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Minimal generators in canonical (lexicographic exponent) order.
    pub fn generators(&self) -> &[Term] {
        &self.generators
    }

    pub fn contains(&self, t: &Term) -> bool {
        self.generators.iter().any(|g| g.divides(t))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        MonomialIdeal {
            ring: self.ring.clone(),
            generators: minimalize(gens),
        }
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.lcm(b)))
            .collect();
        MonomialIdeal {
            ring: self.ring.clone(),
            generators: minimalize(gens),
        }
    }

    /// `d_i`: largest exponent of `x_i` among the minimal generators.
    pub fn max_degrees(&self) -> Vec<u32> {
        (0..self.ring.nvars())
            .map(|i| {
                self.generators
                    .iter()
                    .map(|t| t.exponents()[i])
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Exponent `k` of the pure power `x_i^k` among the generators, if any.
    pub fn pure_power_degree(&self, i: usize) -> Option<u32> {
        self.generators
            .iter()
            .filter(|t| t.is_one() || t.pure_power_var() == Some(i))
            .map(|t| t.exponents()[i])
            .min()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        (0..self.ring.nvars()).all(|i| self.pure_power_degree(i).is_some())
    }

    /// The terms outside the ideal, in canonical order.
    pub fn order_ideal(&self) -> Result<Vec<Term>> {
        let n = self.ring.nvars();
        let mut bounds = Vec::with_capacity(n);
        for i in 0..n {
            match self.pure_power_degree(i) {
                Some(k) => bounds.push(k),
                None => return Err(Error::InfiniteOrderIdeal(self.ring.var_name(i).to_string())),
            }
        }
        let mut out = BTreeSet::new();
        let mut frontier = vec![Term::one(n)];
        while let Some(t) = frontier.pop() {
            if self.contains(&t) || out.contains(&t) {
                continue;
            }
            for i in 0..n {
                if t.exponents()[i] + 1 < bounds[i] {
                    frontier.push(t.times_var(i));
                }
            }
            out.insert(t);
        }
        Ok(out.into_iter().collect())
    }

    pub fn to_polynomials(&self) -> Vec<Polynomial> {
        self.generators
            .iter()
            .map(|t| Polynomial::monomial(&self.ring, self.ring.field().one(), t.clone()))
            .collect()
    }

    /// Generators as strings, increasing in degrevlex.
    pub fn to_strings(&self) -> Vec<String> {
        let ord = TermOrdering::degrevlex(self.ring.nvars());
        let mut gens = self.generators.clone();
        gens.sort_by(|a, b| ord.cmp(a, b));
        gens.iter().map(|t| t.display(&self.ring).to_string()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.to_strings().join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn ring3() -> Ring {
        Ring::new(FieldSpec::Rationals, &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn order_ideal_of_staircase_example() {
        let r = ring3();
        let m = MonomialIdeal::parse(&r, "x^2, x*y*z^2, y^2, z^3").unwrap();
        let o: Vec<String> = m
            .order_ideal()
            .unwrap()
            .iter()
            .map(|t| t.display(&r).to_string())
            .collect();
        assert_eq!(
            o,
            ["1", "z", "z^2", "y", "y*z", "y*z^2", "x", "x*z", "x*z^2", "x*y", "x*y*z"]
        );
    }

    #[test]
    fn trivial_cases() {
        let r = Ring::new(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let m = MonomialIdeal::parse(&r, "x, y").unwrap();
        assert_eq!(m.order_ideal().unwrap(), vec![Term::one(2)]);
        let inf = MonomialIdeal::parse(&r, "x^2").unwrap();
        assert_eq!(inf.order_ideal(), Err(Error::InfiniteOrderIdeal("y".into())));
        assert!(MonomialIdeal::parse(&r, "x + y").is_err());
        assert!(MonomialIdeal::parse(&r, "2*x").is_err());
    }

    #[test]
    fn minimal_generators() {
        let r = Ring::new(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let m = MonomialIdeal::parse(&r, "x^2, x^3*y, y^4, x^2*y").unwrap();
        assert_eq!(m.to_strings(), ["x^2", "y^4"]);
        assert_eq!(m.max_degrees(), vec![2, 4]);
        let a = MonomialIdeal::parse(&r, "x, y^2").unwrap();
        let b = MonomialIdeal::parse(&r, "x^2, y").unwrap();
        assert_eq!(a.intersection(&b).to_strings(), ["y^2", "x*y", "x^2"]);
        assert_eq!(a.sum(&b).to_strings(), ["y", "x"]);
    }
}
