//! Gröbner fans restricted to the positive orthant, GFan numbers, basic
//! sets and minimal models.

mod basic_sets;
mod cone;
mod fm;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde_json::{json, Value};

pub use basic_sets::{enumerate_basic_sets, fan_oracle_zerodim, DEFAULT_BASIC_SET_BOUND};
pub use cone::Cone;

use crate::error::{Error, Result};
use crate::groebner::{Ideal, ReducedGB};
use crate::monomial::MonomialIdeal;
use crate::poly::{Polynomial, Ring, Term, TermOrdering};

/// Safety cap on the number of cones a traversal may visit.
pub const MAX_CONES: usize = 10_000;

/// A reduced basis together with its leading-term marking and cone.
///
/// The basis is presented under the ordering given by the cone's canonical
/// interior weight refined by degrevlex, so the presentation depends only on
/// the leading-term ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct MarkedReducedGB {
    basis: ReducedGB,
    lt_ideal: MonomialIdeal,
    cone: Cone,
}

impl MarkedReducedGB {
    /// Marks `basis` by its own leading terms.
    pub fn new(basis: &ReducedGB) -> Result<MarkedReducedGB> {
        MarkedReducedGB::with_marking(basis.ring(), basis.elements(), &basis.leading_terms())
    }

    /// Marks arbitrary elements; fails if no positive weight realizes the marking.
    pub fn with_marking(ring: &Ring, elements: &[Polynomial], marking: &[Term]) -> Result<MarkedReducedGB> {
        let cone = Cone::of_marked(ring.nvars(), elements, marking)?;
        let w = cone.interior_point().ok_or(Error::InconsistentMarking)?;
        let ord = TermOrdering::weighted(&w)?;
        let basis = ReducedGB::from_reduced(ring, &ord, elements.to_vec());
        let lt_ideal = MonomialIdeal::new(ring, marking.to_vec())?;
        Ok(MarkedReducedGB {
            basis,
            lt_ideal,
            cone,
        })
    }

    pub fn basis(&self) -> &ReducedGB {
        &self.basis
    }

    pub fn marking(&self) -> Vec<Term> {
        self.basis.leading_terms()
    }

    pub fn lt_ideal(&self) -> &MonomialIdeal {
        &self.lt_ideal
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    /// Canonical weight ordering used for presentation.
    pub fn ordering(&self) -> &TermOrdering {
        self.basis.ordering()
    }

    fn key(&self) -> Vec<Term> {
        self.lt_ideal.generators().to_vec()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lt_ideal": self.lt_ideal.to_strings(),
            "reduced_gb": self.basis.to_strings(),
            "cone": self.cone.inequalities(),
            "order": self.basis.ordering().to_string(),
        })
    }
}

impl fmt::Debug for MarkedReducedGB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} @ {}", self.basis, self.cone)
    }
}

/// The set of marked reduced bases of an ideal, one per leading-term ideal,
/// sorted canonically.
#[derive(Clone, PartialEq, Eq)]
pub struct GroebnerFan {
    ring: Ring,
    cones: Vec<MarkedReducedGB>,
}

impl GroebnerFan {
    fn from_map(ring: &Ring, map: BTreeMap<Vec<Term>, MarkedReducedGB>) -> GroebnerFan {
        GroebnerFan {
            ring: ring.clone(),
            cones: map.into_values().collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn cones(&self) -> &[MarkedReducedGB] {
        &self.cones
    }

    /// The GFan number.
    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn lt_ideals(&self) -> Vec<MonomialIdeal> {
        self.cones.iter().map(|c| c.lt_ideal.clone()).collect()
    }

    /// Sorted inequality lists, one per cone.
    pub fn canonical_cones(&self) -> Vec<Cone> {
        let mut v: Vec<Cone> = self.cones.iter().map(|c| c.cone.clone()).collect();
        v.sort();
        v
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": 1,
            "field": self.ring.field().to_string(),
            "vars": self.ring.var_names(),
            "gfan_number": self.len(),
            "cones": self.cones.iter().map(MarkedReducedGB::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Debug for GroebnerFan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.cones).finish()
    }
}

impl fmt::Display for GroebnerFan {
    /// One block per cone: the basis under its canonical ordering, then the cone.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gfan number: {}", self.len())?;
        for (k, c) in self.cones.iter().enumerate() {
            writeln!(f)?;
            writeln!(f, "cone {}: {}", k + 1, c.cone)?;
            writeln!(f, "lt ideal: {}", c.lt_ideal)?;
            write!(f, "{}", c.basis)?;
        }
        Ok(())
    }
}

/// Walks the fan by flipping across facets that meet the open orthant,
/// starting from the degrevlex basis.
pub fn enumerate_fan(ideal: &Ideal) -> Result<GroebnerFan> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let zero_dim = ideal.is_zero_dimensional();
    let fail = |msg: String| {
        if zero_dim {
            Error::Internal(msg)
        } else {
            Error::UnsupportedIdealClass(msg)
        }
    };
    let start = MarkedReducedGB::new(&ideal.degrevlex())?;
    let mut seen: BTreeMap<Vec<Term>, MarkedReducedGB> = BTreeMap::new();
    let mut queue: VecDeque<Vec<Term>> = VecDeque::new();
    queue.push_back(start.key());
    seen.insert(start.key(), start);
    while let Some(key) = queue.pop_front() {
        let current = seen[&key].clone();
        let cone = current.cone();
        for (k, v) in cone.inequalities().iter().enumerate() {
            let Some(w) = cone.facet_point(k) else {
                continue;
            };
            let mut rows = vec![w.clone(), v.iter().map(|x| -x).collect::<Vec<i64>>()];
            rows.extend(TermOrdering::degrevlex(n).rows().iter().cloned());
            let ord = TermOrdering::from_matrix(rows)?;
            let basis = ideal.groebner(&ord)?;
            let lt = basis.leading_term_ideal();
            let nkey = lt.generators().to_vec();
            if nkey == key {
                return Err(fail(format!("flip across {v:?} did not leave the cone")));
            }
            let neighbour = match seen.get(&nkey) {
                Some(m) => m.clone(),
                None => MarkedReducedGB::new(&basis)?,
            };
            let back: Vec<i64> = v.iter().map(|x| -x).collect();
            if !neighbour.cone.contains(&w) || !neighbour.cone.inequalities().contains(&back) {
                return Err(fail(format!(
                    "neighbour across {v:?} does not share the facet"
                )));
            }
            if !seen.contains_key(&nkey) {
                if seen.len() >= MAX_CONES {
                    return Err(fail(format!("more than {MAX_CONES} cones")));
                }
                seen.insert(nkey.clone(), neighbour);
                queue.push_back(nkey);
            }
        }
    }
    Ok(GroebnerFan::from_map(&ring, seen))
}

/// `true` iff every element of the reduced degrevlex basis is factor-closed,
/// which holds exactly when the ideal has a single leading-term ideal.
pub fn unique_gb_fast_check(ideal: &Ideal) -> bool {
    ideal.degrevlex().is_factor_closed()
}

/// Number of cones of the fan, via the factor-closed test when it applies.
pub fn gfan_number(ideal: &Ideal) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if unique_gb_fast_check(ideal) {
        return Ok(1);
    }
    Ok(enumerate_fan(ideal)?.len())
}

/// `𝒪_σ(I)` for each cone, sorted increasingly by the cone's ordering.
pub fn gbasic_sets(fan: &GroebnerFan) -> Result<Vec<Vec<Term>>> {
    fan.cones.iter().map(|c| c.basis.quotient_basis()).collect()
}

/// Equality of the canonical cone sets.
pub fn fan_equal(a: &GroebnerFan, b: &GroebnerFan) -> Result<bool> {
    if a.ring.nvars() != b.ring.nvars() {
        return Err(Error::DimensionMismatch {
            expected: a.ring.nvars(),
            got: b.ring.nvars(),
        });
    }
    Ok(a.canonical_cones() == b.canonical_cones())
}

/// The distinct normal forms of `f` across all cones, sorted by their text.
pub fn minimal_models(f: &Polynomial, ideal: &Ideal) -> Result<Vec<Polynomial>> {
    ideal.ring().check_same(f.ring())?;
    if !ideal.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let fan = enumerate_fan(ideal)?;
    let mut out: BTreeMap<String, Polynomial> = BTreeMap::new();
    for c in fan.cones() {
        let r = c.basis.normal_form(f)?;
        out.insert(r.to_string(), r);
    }
    Ok(out.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn ideal(field: FieldSpec, vars: &str, gens: &str) -> Ideal {
        let r = Ring::parse_vars(field, vars).unwrap();
        Ideal::parse(&r, gens).unwrap()
    }

    #[test]
    fn linear_forms() {
        let i = ideal(FieldSpec::Rationals, "x,y", "x + y");
        let fan = enumerate_fan(&i).unwrap();
        assert_eq!(fan.len(), 2);
        let lts: Vec<String> = fan.lt_ideals().iter().map(|m| m.to_string()).collect();
        assert_eq!(lts, ["<y>", "<x>"]);
        let i3 = ideal(FieldSpec::Rationals, "x,y,z", "x + y + z");
        assert_eq!(enumerate_fan(&i3).unwrap().len(), 3);
        assert_eq!(gfan_number(&i3), Ok(3));
        let r = Ring::parse_vars(FieldSpec::Rationals, "x,y").unwrap();
        assert_eq!(gfan_number(&Ideal::zero(&r)), Err(Error::ZeroIdeal));
    }

    #[test]
    fn symmetric_quadric_fan() {
        let i = ideal(FieldSpec::Rationals, "x,y", "x^2 + x*y + y^2, x^3, x^2*y, x*y^2, y^3");
        let fan = enumerate_fan(&i).unwrap();
        assert_eq!(fan.len(), 2);
        assert!(!unique_gb_fast_check(&i));
        let oracle = fan_oracle_zerodim(&i, DEFAULT_BASIC_SET_BOUND).unwrap();
        assert_eq!(fan, oracle);
    }

    #[test]
    fn lac_operon_models() {
        let r = Ring::parse_vars(FieldSpec::Prime(2), "x,y,z").unwrap();
        let i = Ideal::parse(&r, "x^2+x, z^2+z, y+x+1, x*z+z").unwrap();
        let fan = enumerate_fan(&i).unwrap();
        assert_eq!(fan.len(), 2);
        let f = Polynomial::parse(&r, "y*z + y").unwrap();
        let models: Vec<String> = minimal_models(&f, &i).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(models, ["x + 1", "y"]);
        assert_eq!(gbasic_sets(&fan).unwrap().len(), 2);
        let zero: Vec<String> = minimal_models(&Polynomial::zero(&r), &i)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(zero, ["0"]);
    }

    #[test]
    fn single_cone_grid() {
        let i = ideal(FieldSpec::Rationals, "x,y", "x - 1, y^2 - 2");
        let fan = enumerate_fan(&i).unwrap();
        assert_eq!(fan.len(), 1);
        assert!(fan.cones()[0].cone().is_orthant());
        assert!(unique_gb_fast_check(&i));
        assert!(fan_equal(&fan, &fan).unwrap());
        let two = enumerate_fan(&ideal(FieldSpec::Rationals, "x,y", "x + y")).unwrap();
        assert!(!fan_equal(&fan, &two).unwrap());
    }
}
