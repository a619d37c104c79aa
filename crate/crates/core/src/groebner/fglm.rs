//! Change of ordering by linear algebra on a finite-dimensional quotient.

use std::collections::HashMap;

use super::ReducedGB;
use crate::field::FieldElement;
use crate::linalg::{Echelon, Insert};
use crate::poly::{Polynomial, Ring, Term, TermOrdering};

/// The reduced σ-basis of the kernel of a linear map `t ↦ image(t)` on terms,
/// together with the accepted terms in increasing σ order.
///
/// Terms are visited in increasing σ order and only multiples of accepted
/// terms become candidates, so every dependent term is a minimal generator of
/// the leading term ideal and its tail lies in the final quotient basis.
pub(crate) fn kernel_basis(
    ring: &Ring,
    ord: &TermOrdering,
    mut image: impl FnMut(&Term) -> Vec<FieldElement>,
) -> (ReducedGB, Vec<Term>) {
    let n = ring.nvars();
    let one = ring.field().one();
    let mut echelon = Echelon::new(ring.field());
    let mut accepted: Vec<Term> = Vec::new();
    let mut leading: Vec<Term> = Vec::new();
    let mut elements: Vec<Polynomial> = Vec::new();
    let mut candidates: Vec<Term> = vec![Term::one(n)];
    while !candidates.is_empty() {
        let k = (0..candidates.len())
            .reduce(|a, b| if ord.cmp(&candidates[b], &candidates[a]).is_lt() { b } else { a })
            .expect("nonempty");
        let t = candidates.swap_remove(k);
        if leading.iter().any(|s| s.divides(&t)) {
            continue;
        }
        match echelon.insert(&image(&t)) {
            Insert::Independent => {
                for i in 0..n {
                    let u = t.times_var(i);
                    if !candidates.contains(&u) {
                        candidates.push(u);
                    }
                }
                accepted.push(t);
            }
            Insert::Dependent(c) => {
                let mut terms = vec![(t.clone(), one.clone())];
                terms.extend(accepted.iter().cloned().zip(c.into_iter().map(|x| -x)));
                elements.push(Polynomial::from_terms(ring, terms));
                leading.push(t);
            }
        }
    }
    (ReducedGB::from_reduced(ring, ord, elements), accepted)
}

/// The reduced basis for `ord` of the zero-dimensional ideal with reduced
/// basis `from`.
///
/// Normal forms are coordinate vectors over the quotient basis of `from`;
/// the form of `u = t·x_i` is the multiplication matrix of `x_i` applied to
/// the form of `t`, so only border terms are ever reduced.
pub(crate) fn convert(from: &ReducedGB, ord: &TermOrdering) -> ReducedGB {
    let ring = from.ring();
    let field = ring.field();
    let n = ring.nvars();
    let basis = from.quotient_basis().expect("zero-dimensional basis");
    let index: HashMap<&Term, usize> = basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let coords = |p: &Polynomial| {
        let mut v = vec![field.zero(); basis.len()];
        for (s, c) in p.terms() {
            v[index[s]] = c.clone();
        }
        v
    };
    // times[i][k] = NF(x_i · basis[k])
    let times: Vec<Vec<Vec<FieldElement>>> = (0..n)
        .map(|i| {
            basis
                .iter()
                .map(|b| {
                    let m = Polynomial::monomial(ring, field.one(), b.times_var(i));
                    coords(&from.normal_form(&m).expect("same ring"))
                })
                .collect()
        })
        .collect();
    let mut known: HashMap<Term, Vec<FieldElement>> = HashMap::new();
    let image = |t: &Term| {
        let v = if t.is_one() {
            coords(&from.normal_form(&Polynomial::one(ring)).expect("same ring"))
        } else {
            let (i, parent) = (0..n)
                .filter_map(|i| {
                    let p = t.div(&Term::var(n, i))?;
                    known.get(&p).map(|v| (i, v))
                })
                .next()
                .expect("candidates extend visited terms");
            let mut out = vec![field.zero(); basis.len()];
            for (c, col) in parent.iter().zip(&times[i]) {
                if c.is_zero() {
                    continue;
                }
                for (o, x) in out.iter_mut().zip(col) {
                    if !x.is_zero() {
                        *o = &*o + &(c * x);
                    }
                }
            }
            out
        };
        known.insert(t.clone(), v.clone());
        v
    };
    kernel_basis(ring, ord, image).0
}
