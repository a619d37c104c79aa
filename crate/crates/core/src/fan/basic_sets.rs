use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::fm::{self, Row};
use super::{GroebnerFan, MarkedReducedGB};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{Ideal, ReducedGB};
use crate::linalg::{Echelon, Insert};
use crate::poly::{Polynomial, Term};

/// Largest multiplicity accepted by the basic-set enumeration by default.
pub const DEFAULT_BASIC_SET_BOUND: usize = 12;

/// Normal forms against the reduced degrevlex basis, as coordinate vectors
/// over its quotient basis.
struct NormalForms<'a> {
    basis: &'a ReducedGB,
    index: HashMap<Term, usize>,
    cache: HashMap<Term, Vec<FieldElement>>,
}

impl<'a> NormalForms<'a> {
    fn new(basis: &'a ReducedGB) -> Result<Self> {
        let q = basis.quotient_basis()?;
        Ok(NormalForms {
            basis,
            index: q.into_iter().enumerate().map(|(i, t)| (t, i)).collect(),
            cache: HashMap::new(),
        })
    }

    fn coords(&mut self, t: &Term) -> Vec<FieldElement> {
        if let Some(v) = self.cache.get(t) {
            return v.clone();
        }
        let ring = self.basis.ring();
        let mono = Polynomial::monomial(ring, ring.field().one(), t.clone());
        let nf = self.basis.normal_form(&mono).expect("same ring");
        let mut v = vec![ring.field().zero(); self.index.len()];
        for (s, c) in nf.terms() {
            v[self.index[s]] = c.clone();
        }
        self.cache.insert(t.clone(), v.clone());
        v
    }
}

/// Exponent bounds: the degree of the monic generator of `I ∩ K[x_i]`.
fn grid_degrees(ideal: &Ideal) -> Result<Vec<u32>> {
    let n = ideal.ring().nvars();
    (0..n)
        .map(|i| {
            let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let e = ideal.eliminate(&others)?;
            let g = e.degrevlex();
            g.elements()
                .first()
                .and_then(Polynomial::total_degree)
                .ok_or(Error::NotZeroDimensional)
        })
        .collect()
}

/// All order ideals of size `s` whose exponents stay below `bounds`.
fn order_ideals(n: usize, s: usize, bounds: &[u32]) -> Vec<Vec<Term>> {
    let mut level: BTreeSet<Vec<Term>> = BTreeSet::new();
    level.insert(vec![Term::one(n)]);
    for _ in 1..s {
        let mut next = BTreeSet::new();
        for o in &level {
            let set: BTreeSet<&Term> = o.iter().collect();
            let mut corners: BTreeSet<Term> = BTreeSet::new();
            for t in o {
                for i in 0..n {
                    if t.exponents()[i] + 1 >= bounds[i] {
                        continue;
                    }
                    let u = t.times_var(i);
                    if !set.contains(&u) && u.predecessors().all(|p| set.contains(&p)) {
                        corners.insert(u);
                    }
                }
            }
            for u in corners {
                let mut bigger = o.clone();
                bigger.push(u);
                bigger.sort();
                next.insert(bigger);
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// Every order ideal of size `dim_K(P/I)` whose residue classes form a basis
/// of `P/I`, each sorted canonically.
pub fn enumerate_basic_sets(ideal: &Ideal, bound: usize) -> Result<Vec<Vec<Term>>> {
    Ok(basic_sets_with_coords(ideal, bound)?.0)
}

fn basic_sets_with_coords(ideal: &Ideal, bound: usize) -> Result<(Vec<Vec<Term>>, std::sync::Arc<ReducedGB>)> {
    let drl = ideal.degrevlex();
    if !drl.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let s = drl.multiplicity()?;
    if s > bound {
        return Err(Error::BoundExceeded { bound, found: s });
    }
    if s == 0 {
        return Ok((vec![Vec::new()], drl));
    }
    let n = ideal.ring().nvars();
    let bounds = grid_degrees(ideal)?;
    let mut nf = NormalForms::new(&drl)?;
    let mut out = Vec::new();
    for o in order_ideals(n, s, &bounds) {
        let mut e = Echelon::new(ideal.ring().field());
        let full = o
            .iter()
            .all(|t| matches!(e.insert(&nf.coords(t)), Insert::Independent));
        if full {
            out.push(o);
        }
    }
    Ok((out, drl))
}

/// The fan computed without flips: each basic set yields a candidate basis
/// `{t − NF_𝒪(t)}` over the corners of its complement, kept when a strictly
/// positive weight selects every `t` as leading term.
pub fn fan_oracle_zerodim(ideal: &Ideal, bound: usize) -> Result<GroebnerFan> {
    let (sets, drl) = basic_sets_with_coords(ideal, bound)?;
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let mut nf = NormalForms::new(&drl)?;
    let mut map: BTreeMap<Vec<Term>, MarkedReducedGB> = BTreeMap::new();
    for o in sets {
        let set: BTreeSet<&Term> = o.iter().collect();
        let mut corners: BTreeSet<Term> = BTreeSet::new();
        for t in o.iter() {
            for i in 0..n {
                let u = t.times_var(i);
                if !set.contains(&u) && u.predecessors().all(|p| set.contains(&p)) {
                    corners.insert(u);
                }
            }
        }
        if o.is_empty() {
            corners.insert(Term::one(n));
        }
        let mut e = Echelon::new(ring.field());
        for t in &o {
            e.insert(&nf.coords(t));
        }
        let mut elements = Vec::new();
        let mut rows: Vec<Row> = (0..n)
            .map(|i| {
                let mut a = vec![0; n];
                a[i] = 1;
                Row::new(&a, 1)
            })
            .collect();
        for t in &corners {
            let c = e
                .solve(&nf.coords(t))
                .ok_or_else(|| Error::Internal("basic set does not span".into()))?;
            let mut terms = vec![(t.clone(), ring.field().one())];
            for (s, k) in o.iter().zip(c) {
                if !k.is_zero() {
                    rows.push(Row::new(&t.difference(s), 1));
                    terms.push((s.clone(), -k));
                }
            }
            elements.push(Polynomial::from_terms(&ring, terms));
        }
        if fm::feasible(n, &rows, &[]) {
            let corners: Vec<Term> = corners.into_iter().collect();
            let m = MarkedReducedGB::with_marking(&ring, &elements, &corners)?;
            map.insert(corners, m);
        }
    }
    Ok(GroebnerFan::from_map(&ring, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::Ring;

    #[test]
    fn symmetric_quadric_basic_sets() {
        let r = Ring::parse_vars(FieldSpec::Rationals, "x,y").unwrap();
        let i = Ideal::parse(&r, "x^2 + x*y + y^2, x^3, x^2*y, x*y^2, y^3").unwrap();
        let sets = enumerate_basic_sets(&i, DEFAULT_BASIC_SET_BOUND).unwrap();
        let shown: Vec<Vec<String>> = sets
            .iter()
            .map(|o| o.iter().map(|t| t.display(&r).to_string()).collect())
            .collect();
        let sym = ["1", "y", "y^2", "x", "x^2"];
        assert!(shown.contains(&sym.iter().map(|s| s.to_string()).collect()));
        assert!(shown.contains(&["1", "y", "x", "x*y", "x^2"].iter().map(|s| s.to_string()).collect()));
        assert!(shown.contains(&["1", "y", "y^2", "x", "x*y"].iter().map(|s| s.to_string()).collect()));
        assert_eq!(fan_oracle_zerodim(&i, 12).unwrap().len(), 2);
    }

    #[test]
    fn grid_has_one_basic_set() {
        let r = Ring::parse_vars(FieldSpec::Rationals, "x,y").unwrap();
        let i = Ideal::parse(&r, "x^2 - 1, y^2 - 4").unwrap();
        let sets = enumerate_basic_sets(&i, 12).unwrap();
        assert_eq!(sets.len(), 1);
        assert_eq!(sets[0].len(), 4);
        let big = Ideal::parse(&r, "x^4, y^4").unwrap();
        assert_eq!(
            enumerate_basic_sets(&big, 12),
            Err(Error::BoundExceeded { bound: 12, found: 16 })
        );
        let line = Ideal::parse(&r, "x + y").unwrap();
        assert_eq!(enumerate_basic_sets(&line, 12), Err(Error::NotZeroDimensional));
    }
}
