use super::PointSet;
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::groebner::Ideal;
use crate::monomial::MonomialIdeal;
use crate::poly::{Polynomial, Ring, Term};

/// Per variable, a tuple of pairwise distinct constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistractionSpec {
    ring: Ring,
    tuples: Vec<Vec<FieldElement>>,
}

impl DistractionSpec {
    pub fn new(ring: &Ring, tuples: Vec<Vec<FieldElement>>) -> Result<DistractionSpec> {
        if tuples.len() != ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                got: tuples.len(),
            });
        }
        for (i, tuple) in tuples.iter().enumerate() {
            for (k, c) in tuple.iter().enumerate() {
                if !ring.field().owns(c) {
                    return Err(Error::FieldMismatch(ring.field().to_string(), c.field().to_string()));
                }
                if tuple[..k].contains(c) {
                    return Err(Error::RepeatedConstant(c.to_string(), ring.var_name(i).to_string()));
                }
            }
        }
        Ok(DistractionSpec {
            ring: ring.clone(),
            tuples,
        })
    }

    pub fn from_integers(ring: &Ring, tuples: &[Vec<i64>]) -> Result<DistractionSpec> {
        let f = ring.field();
        DistractionSpec::new(
            ring,
            tuples
                .iter()
                .map(|t| t.iter().map(|&c| f.from_i64(c)).collect())
                .collect(),
        )
    }

    /// `(0, 1, …, d_i − 1)` for each variable; the naturals below `max d_i`
    /// must stay distinct in the field.
    pub fn natural(ring: &Ring, degrees: &[u32]) -> Result<DistractionSpec> {
        let needed = degrees.iter().copied().max().unwrap_or(0);
        check_characteristic(ring.field(), needed)?;
        let f = ring.field();
        DistractionSpec::new(
            ring,
            degrees
                .iter()
                .map(|&d| (0..d as u64).map(|k| f.nat_embed(k)).collect())
                .collect(),
        )
    }

    /// Tuples separated by `;` or newlines, entries by commas, in variable
    /// order. An empty tuple is written as nothing between separators.
    pub fn parse(ring: &Ring, text: &str) -> Result<DistractionSpec> {
        let tuples = text
            .split([';', '\n'])
            .map(str::trim)
            .filter(|s| !s.starts_with('#'))
            .take(ring.nvars())
            .map(|s| {
                if s.is_empty() {
                    return Ok(Vec::new());
                }
                s.split(',').map(|c| ring.field().parse_element(c)).collect()
            })
            .collect::<Result<Vec<_>>>()?;
        DistractionSpec::new(ring, tuples)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn tuples(&self) -> &[Vec<FieldElement>] {
        &self.tuples
    }
}

/// Fails unless `needed` naturals `0, …, needed − 1` are distinct in `field`.
fn check_characteristic(field: FieldSpec, needed: u32) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && needed > p {
        return Err(Error::CharacteristicTooSmall {
            characteristic: p,
            needed,
        });
    }
    Ok(())
}

/// `∏_i ∏_{k ≤ α_i} (x_i − c_{i,k})` for `t = x^α`.
pub fn distraction_term(t: &Term, spec: &DistractionSpec) -> Result<Polynomial> {
    let ring = &spec.ring;
    if t.nvars() != ring.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ring.nvars(),
            got: t.nvars(),
        });
    }
    let mut acc = Polynomial::one(ring);
    for (i, &a) in t.exponents().iter().enumerate() {
        let tuple = &spec.tuples[i];
        if a as usize > tuple.len() {
            return Err(Error::SpecTooShort {
                var: ring.var_name(i).to_string(),
                len: tuple.len(),
                needed: a as usize,
            });
        }
        for c in &tuple[..a as usize] {
            acc = &acc * &(&Polynomial::var(ring, i) - &Polynomial::constant(ring, c.clone()));
        }
    }
    Ok(acc)
}

/// The ideal generated by the distractions of the minimal generators.
pub fn distraction_ideal(m: &MonomialIdeal, spec: &DistractionSpec) -> Result<Ideal> {
    m.ring().check_same(spec.ring())?;
    let gens = m
        .generators()
        .iter()
        .map(|t| distraction_term(t, spec))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(m.ring(), gens)
}

/// The distraction with constants `0, 1, 2, …` in every variable.
pub fn natural_distraction(m: &MonomialIdeal) -> Result<Ideal> {
    let spec = DistractionSpec::natural(m.ring(), &m.max_degrees())?;
    distraction_ideal(m, &spec)
}

/// The terms outside `m`, sorted canonically.
pub fn order_ideal_of(m: &MonomialIdeal) -> Result<Vec<Term>> {
    m.order_ideal()
}

/// The exponent vectors of the order ideal, read as points of `K^n`.
pub fn staircase(m: &MonomialIdeal) -> Result<PointSet> {
    let terms = m.order_ideal()?;
    let top = terms
        .iter()
        .flat_map(|t| t.exponents().iter().copied())
        .max()
        .unwrap_or(0);
    check_characteristic(m.ring().field(), top + 1)?;
    let f = m.ring().field();
    let points = terms
        .iter()
        .map(|t| t.exponents().iter().map(|&e| f.nat_embed(e as u64)).collect())
        .collect();
    PointSet::new(m.ring(), points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::TermOrdering;

    fn ring(field: FieldSpec, vars: &str) -> Ring {
        Ring::parse_vars(field, vars).unwrap()
    }

    fn poly(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn distraction_of_single_terms() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let spec = DistractionSpec::from_integers(&r, &[vec![3, 2, 5], vec![2, -1, 3, 12]]).unwrap();
        let t1 = Term::from_exponents(vec![3, 1]);
        let t2 = Term::from_exponents(vec![2, 4]);
        assert_eq!(
            distraction_term(&t1, &spec).unwrap(),
            poly(&r, "(x-3)*(x-2)*(x-5)*(y-2)")
        );
        assert_eq!(
            distraction_term(&t2, &spec).unwrap(),
            poly(&r, "(x-3)*(x-2)*(y-2)*(y+1)*(y-3)*(y-12)")
        );
        assert_eq!(distraction_term(&Term::one(2), &spec).unwrap(), Polynomial::one(&r));
        let f5 = ring(FieldSpec::Prime(5), "x,y");
        let spec5 = DistractionSpec::from_integers(&f5, &[vec![1, 3, 0], vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(distraction_term(&t1, &spec5).unwrap(), poly(&f5, "(x-1)*(x-3)*x*y"));
        let short = DistractionSpec::from_integers(&r, &[vec![1, 2], vec![0]]).unwrap();
        assert_eq!(
            distraction_term(&t1, &short),
            Err(Error::SpecTooShort {
                var: "x".into(),
                len: 2,
                needed: 3
            })
        );
    }

    #[test]
    fn repeated_constants_are_rejected() {
        let r = ring(FieldSpec::Rationals, "x,y");
        assert_eq!(
            DistractionSpec::from_integers(&r, &[vec![1, 2, 1], vec![0]]),
            Err(Error::RepeatedConstant("1".into(), "x".into()))
        );
        let f3 = ring(FieldSpec::Prime(3), "x,y");
        assert_eq!(
            DistractionSpec::from_integers(&f3, &[vec![1, 4], vec![0]]),
            Err(Error::RepeatedConstant("1".into(), "x".into()))
        );
    }

    #[test]
    fn distraction_is_its_own_reduced_basis() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let m = MonomialIdeal::parse(&r, "x^3*y, x^2*y^4").unwrap();
        let spec = DistractionSpec::from_integers(&r, &[vec![3, 2, 5], vec![2, -1, 3, 12]]).unwrap();
        let d = distraction_ideal(&m, &spec).unwrap();
        for ord in [TermOrdering::lex(2), TermOrdering::degrevlex(2), TermOrdering::lex_with_precedence(&[1, 0]).unwrap()] {
            let mut got: Vec<Polynomial> = d.groebner(&ord).unwrap().elements().to_vec();
            let mut want = d.generators().to_vec();
            got.sort_by_key(ToString::to_string);
            want.sort_by_key(ToString::to_string);
            assert_eq!(got, want);
        }
    }

    #[test]
    fn natural_distraction_and_staircase() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let m = MonomialIdeal::parse(&r, "x^5, x^4*y, x*y^2, y^4").unwrap();
        let d = natural_distraction(&m).unwrap();
        let want = Ideal::parse(
            &r,
            "x*(x-1)*(x-2)*(x-3)*(x-4), x*(x-1)*(x-2)*(x-3)*y, x*y*(y-1), y*(y-1)*(y-2)*(y-3)",
        )
        .unwrap();
        assert!(d.equals(&want).unwrap());
        let s = staircase(&m).unwrap();
        assert_eq!(s.len(), 11);
        assert!(s.ideal().unwrap().equals(&d).unwrap());
        let one = ring(FieldSpec::Rationals, "x");
        let sq = MonomialIdeal::parse(&one, "x^2").unwrap();
        assert_eq!(natural_distraction(&sq).unwrap().generators(), [poly(&one, "x*(x-1)")]);
    }

    #[test]
    fn staircase_example_three_variables() {
        let r = ring(FieldSpec::Rationals, "x,y,z");
        let m = MonomialIdeal::parse(&r, "x^2, x*y*z^2, y^2, z^3").unwrap();
        let s = staircase(&m).unwrap();
        let want = PointSet::from_integers(
            &r,
            &[
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 0, 2],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2],
                vec![1, 0, 0],
                vec![1, 0, 1],
                vec![1, 0, 2],
                vec![1, 1, 0],
                vec![1, 1, 1],
            ],
        )
        .unwrap();
        assert!(s.same_set(&want));
        let xy = MonomialIdeal::parse(&r, "x, y, z").unwrap();
        assert_eq!(staircase(&xy).unwrap().len(), 1);
    }

    #[test]
    fn small_characteristic() {
        let r = ring(FieldSpec::Prime(3), "x,y");
        let m = MonomialIdeal::parse(&r, "x^4, y").unwrap();
        assert_eq!(
            staircase(&m),
            Err(Error::CharacteristicTooSmall {
                characteristic: 3,
                needed: 4
            })
        );
        assert_eq!(
            natural_distraction(&m).unwrap_err(),
            Error::CharacteristicTooSmall {
                characteristic: 3,
                needed: 4
            }
        );
        let ok = MonomialIdeal::parse(&r, "x^3, y").unwrap();
        assert_eq!(staircase(&ok).unwrap().len(), 3);
        let line = MonomialIdeal::parse(&r, "x").unwrap();
        assert!(matches!(staircase(&line), Err(Error::InfiniteOrderIdeal(_))));
    }

    #[test]
    fn spec_parsing() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let s = DistractionSpec::parse(&r, "0, 1/5, 2, -1; 0, 1, 2").unwrap();
        assert_eq!(s.tuples()[0].len(), 4);
        assert_eq!(s.tuples()[1][2], FieldSpec::Rationals.from_i64(2));
        assert!(matches!(DistractionSpec::parse(&r, "0, a; 1"), Err(Error::Parse(_))));
        assert!(matches!(DistractionSpec::parse(&r, "0, 1"), Err(Error::DimensionMismatch { .. })));
    }
}
