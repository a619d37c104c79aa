use std::cmp::Ordering;
use std::fmt;

use super::buchberger::buchberger;
use super::sparse::{Sparse, Weights};
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::poly::{Polynomial, Ring, Term, TermOrdering};

/// The reduced monic Gröbner basis of an ideal for one term ordering.
///
/// Elements are sorted by increasing leading term. The unit ideal has basis
/// `[1]` and the zero ideal the empty basis.
#[derive(Clone)]
pub struct ReducedGB {
    ring: Ring,
    ordering: TermOrdering,
    elements: Vec<Polynomial>,
    sparse: Vec<Sparse>,
    weights: Weights,
}

impl ReducedGB {
    /// Runs Buchberger's algorithm on `gens`.
    pub fn compute(ring: &Ring, gens: &[Polynomial], ord: &TermOrdering) -> Result<ReducedGB> {
        ReducedGB::compute_with(ring, gens, ord, true)
    }

    /// As [`ReducedGB::compute`], optionally without the pair criteria.
    pub fn compute_with(
        ring: &Ring,
        gens: &[Polynomial],
        ord: &TermOrdering,
        criteria: bool,
    ) -> Result<ReducedGB> {
        if ord.nvars() != ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                got: ord.nvars(),
            });
        }
        for g in gens {
            ring.check_same(g.ring())?;
        }
        let sparse = buchberger(gens, ord, criteria);
        Ok(ReducedGB::from_sparse(ring, ord, sparse))
    }

    fn from_sparse(ring: &Ring, ord: &TermOrdering, sparse: Vec<Sparse>) -> ReducedGB {
        ReducedGB {
            ring: ring.clone(),
            ordering: ord.clone(),
            elements: sparse.iter().map(|s| s.to_poly(ring)).collect(),
            sparse,
            weights: Weights::new(ord),
        }
    }

    /// Wraps polynomials already known to form the reduced basis for `ord`.
    pub(crate) fn from_reduced(ring: &Ring, ord: &TermOrdering, elements: Vec<Polynomial>) -> ReducedGB {
        let w = Weights::new(ord);
        let mut sparse: Vec<Sparse> = elements.iter().map(|p| Sparse::from_poly(p, &w)).collect();
        sparse.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
        ReducedGB::from_sparse(ring, ord, sparse)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ordering(&self) -> &TermOrdering {
        &self.ordering
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.sparse.iter().map(|s| s.lead_term().clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(f.ring())?;
        let basis: Vec<&Sparse> = self.sparse.iter().collect();
        Ok(Sparse::from_poly(f, &self.weights)
            .reduce(&basis, true)
            .to_poly(&self.ring))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn leading_term_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.leading_terms()).expect("terms fit the ring")
    }

    pub fn is_zero_dimensional(&self) -> bool {
        self.leading_term_ideal().is_zero_dimensional()
    }

    /// `𝒪_σ(I)` sorted by increasing σ.
    pub fn quotient_basis(&self) -> Result<Vec<Term>> {
        let lt = self.leading_term_ideal();
        if !lt.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        let mut o = lt.order_ideal()?;
        o.sort_by(|a, b| self.ordering.cmp(a, b));
        Ok(o)
    }

    pub fn multiplicity(&self) -> Result<usize> {
        self.quotient_basis().map(|o| o.len())
    }

    /// Every element has a support term divisible by all its other terms.
    pub fn is_factor_closed(&self) -> bool {
        self.elements.iter().all(Polynomial::is_factor_closed)
    }

    /// Canonical strings, one per element, terms in decreasing σ order.
    pub fn to_strings(&self) -> Vec<String> {
        self.elements
            .iter()
            .map(|p| p.to_string_with(&self.ordering))
            .collect()
    }

    /// Checks monicity, reducedness and that all S-polynomials reduce to zero.
    pub fn verify(&self) -> bool {
        let leads = self.leading_terms();
        for (k, s) in self.sparse.iter().enumerate() {
            if !s.lead().coeff.is_one() {
                return false;
            }
            for (l, lt) in leads.iter().enumerate() {
                if l != k && s.0.iter().any(|m| lt.divides(&m.term)) {
                    return false;
                }
            }
        }
        let basis: Vec<&Sparse> = self.sparse.iter().collect();
        for i in 0..self.sparse.len() {
            for j in i + 1..self.sparse.len() {
                let lcm = leads[i].lcm(&leads[j]);
                let s = Sparse::spoly(&self.sparse[i], &self.sparse[j], &lcm, &self.weights);
                if !s.reduce(&basis, true).is_zero() {
                    return false;
                }
            }
        }
        self.sparse
            .windows(2)
            .all(|w| w[0].lead().key.cmp(&w[1].lead().key) == Ordering::Less)
    }
}

impl PartialEq for ReducedGB {
    fn eq(&self, other: &ReducedGB) -> bool {
        self.ring == other.ring
            && self.elements.len() == other.elements.len()
            && self.elements.iter().all(|e| other.elements.contains(e))
    }
}

impl Eq for ReducedGB {}

impl fmt::Display for ReducedGB {
    /// A header `order: <spec>` followed by one polynomial per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order: {}", self.ordering)?;
        for s in self.to_strings() {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ReducedGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_strings().join(", "))
    }
}
