use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::{fglm, ReducedGB};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::poly::{parse_polynomial_list, LinearShift, OrderKey, Polynomial, Ring, Term, TermOrdering};

/// An ideal given by generators, with reduced bases cached per ordering.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<OrderKey, Arc<ReducedGB>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            ring.check_same(g.ring())?;
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn parse(ring: &Ring, text: &str) -> Result<Ideal> {
        Ideal::new(ring, parse_polynomial_list(ring, text)?)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("no generators")
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The ideal generated by a reduced basis, with that basis pre-cached.
    pub fn from_basis(basis: ReducedGB) -> Ideal {
        let ideal = Ideal::new(basis.ring(), basis.elements().to_vec()).expect("same ring");
        ideal.seed(basis);
        ideal
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub(crate) fn seed(&self, basis: ReducedGB) {
        let key = basis.ordering().key();
        self.cache
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert_with(|| Arc::new(basis));
    }

    /// The reduced σ-basis, computed once per ordering.
    pub fn groebner(&self, ord: &TermOrdering) -> Result<Arc<ReducedGB>> {
        if ord.nvars() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                got: ord.nvars(),
            });
        }
        let key = ord.key();
        if let Some(g) = self.cache.lock().expect("cache lock").get(&key) {
            return Ok(g.clone());
        }
        let g = Arc::new(self.compute(ord)?);
        Ok(self
            .cache
            .lock()
            .expect("cache lock")
            .entry(key)
            .or_insert(g)
            .clone())
    }

    /// Converts a cached zero-dimensional basis by linear algebra when there
    /// is one, otherwise runs Buchberger from the smallest cached basis or
    /// the generators. Ties break on the ordering key so results and running
    /// times do not depend on hash order.
    fn compute(&self, ord: &TermOrdering) -> Result<ReducedGB> {
        let cached: Vec<Arc<ReducedGB>> = {
            let cache = self.cache.lock().expect("cache lock");
            let mut v: Vec<(&OrderKey, &Arc<ReducedGB>)> = cache.iter().collect();
            v.sort_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| a.0.cmp(b.0)));
            v.into_iter().map(|(_, g)| g.clone()).collect()
        };
        if let Some(g) = cached.iter().find(|g| g.is_zero_dimensional()) {
            return Ok(fglm::convert(g, ord));
        }
        let start = cached
            .first()
            .map(|g| g.elements().to_vec())
            .unwrap_or_else(|| self.generators.clone());
        ReducedGB::compute(&self.ring, &start, ord)
    }

    pub fn degrevlex(&self) -> Arc<ReducedGB> {
        self.groebner(&TermOrdering::degrevlex(self.ring.nvars()))
            .expect("ordering matches ring")
    }

    pub fn is_unit(&self) -> bool {
        self.degrevlex().is_unit()
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.degrevlex().is_zero_dimensional()
    }

    /// `dim_K(P/I)`.
    pub fn multiplicity(&self) -> Result<usize> {
        self.degrevlex().multiplicity()
    }

    pub fn quotient_basis(&self, ord: &TermOrdering) -> Result<Vec<Term>> {
        self.groebner(ord)?.quotient_basis()
    }

    pub fn leading_term_ideal(&self, ord: &TermOrdering) -> Result<MonomialIdeal> {
        Ok(self.groebner(ord)?.leading_term_ideal())
    }

    /// Normal form with respect to the reduced degrevlex basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.degrevlex().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.degrevlex().contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        let g = self.degrevlex();
        for f in &other.generators {
            if !g.contains(f)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, decided by comparing reduced degrevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(*self.degrevlex() == *other.degrevlex())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|f| other.generators.iter().map(move |g| f * g))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// `I1 ∩ I2`: eliminate a tag `t` from `t·I1 + (1 − t)·I2`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&other.ring)?;
        let n = self.ring.nvars();
        let tagged = self.ring.with_tag_variable();
        let ident: Vec<usize> = (0..n).collect();
        let t = Polynomial::var(&tagged, n);
        let one_minus_t = &Polynomial::one(&tagged) - &t;
        let mut gens = Vec::new();
        for f in self.degrevlex().elements() {
            gens.push(&t * &f.remap(&tagged, &ident));
        }
        for g in other.degrevlex().elements() {
            gens.push(&one_minus_t * &g.remap(&tagged, &ident));
        }
        let mut rows = vec![vec![0; n + 1]];
        rows[0][n] = 1;
        for r in TermOrdering::degrevlex(n).rows() {
            let mut r = r.clone();
            r.push(0);
            rows.push(r);
        }
        let ord = TermOrdering::from_matrix(rows)?;
        let g = ReducedGB::compute(&tagged, &gens, &ord)?;
        let kept: Vec<Polynomial> = g
            .elements()
            .iter()
            .filter(|p| !p.involves_any(&[n]))
            .map(|p| p.truncate_vars(&self.ring))
            .collect();
        Ok(self.with_degrevlex_basis(kept))
    }

    fn with_degrevlex_basis(&self, elements: Vec<Polynomial>) -> Ideal {
        let drl = TermOrdering::degrevlex(self.ring.nvars());
        Ideal::from_basis(ReducedGB::from_reduced(&self.ring, &drl, elements))
    }

    /// `J : I = {g : g·I ⊆ J}` with `self = J`.
    pub fn colon(&self, divisor: &Ideal) -> Result<Ideal> {
        self.ring.check_same(&divisor.ring)?;
        let gens = divisor.degrevlex();
        if gens.is_empty() {
            return Err(Error::ZeroIdealDivisor);
        }
        let mut acc: Option<Ideal> = None;
        for f in gens.elements() {
            let part = if f.is_constant() {
                self.clone()
            } else {
                let principal = Ideal::new(&self.ring, vec![f.clone()])?;
                let meet = self.intersection(&principal)?;
                let mut quot = Vec::new();
                for h in meet.degrevlex().elements() {
                    quot.push(h.exact_div(f).ok_or_else(|| {
                        Error::Internal(format!("{h} is not divisible by {f}"))
                    })?);
                }
                Ideal::new(&self.ring, quot)?
            };
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersection(&part)?,
            });
        }
        Ok(acc.expect("nonempty divisor"))
    }

    /// `I ∩ K[x_j : j ∉ vars]`, as an ideal of the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        if let Some(&v) = vars.iter().find(|&&v| v >= n) {
            return Err(Error::DimensionMismatch { expected: n, got: v + 1 });
        }
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let mut first = vec![0; n];
        for &v in vars {
            first[v] = 1;
        }
        let ord = TermOrdering::weighted_rows(vec![first])?;
        let kept: Vec<Polynomial> = self
            .groebner(&ord)?
            .elements()
            .iter()
            .filter(|p| !p.involves_any(vars))
            .cloned()
            .collect();
        Ok(self.with_degrevlex_basis(kept))
    }

    /// `⟨Φ(g) : g a generator⟩`.
    pub fn shift(&self, phi: &LinearShift) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| phi.apply(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "ideal({})", gens.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
