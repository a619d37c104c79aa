use super::{Polynomial, Ring, Term};
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// The affine substitution `x_i ↦ a_i x_i + b_i` with every `a_i` nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearShift {
    scales: Vec<FieldElement>,
    offsets: Vec<FieldElement>,
}

impl LinearShift {
    pub fn new(ring: &Ring, scales: Vec<FieldElement>, offsets: Vec<FieldElement>) -> Result<Self> {
        let n = ring.nvars();
        for v in [&scales, &offsets] {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        for c in scales.iter().chain(&offsets) {
            if !ring.field().owns(c) {
                return Err(Error::FieldMismatch(
                    ring.field().to_string(),
                    c.field().to_string(),
                ));
            }
        }
        if let Some(i) = scales.iter().position(FieldElement::is_zero) {
            return Err(Error::NonInvertibleShift(ring.var_name(i).to_string()));
        }
        Ok(LinearShift { scales, offsets })
    }

    /// Pure translation `x_i ↦ x_i + b_i`.
    pub fn translation(ring: &Ring, offsets: Vec<FieldElement>) -> Result<Self> {
        let ones = vec![ring.field().one(); ring.nvars()];
        LinearShift::new(ring, ones, offsets)
    }

    pub fn identity(ring: &Ring) -> Self {
        let f = ring.field();
        LinearShift {
            scales: vec![f.one(); ring.nvars()],
            offsets: vec![f.zero(); ring.nvars()],
        }
    }

    pub fn scales(&self) -> &[FieldElement] {
        &self.scales
    }

    pub fn offsets(&self) -> &[FieldElement] {
        &self.offsets
    }

    /// `x_i ↦ a_i⁻¹ x_i − a_i⁻¹ b_i`.
    pub fn inverse(&self) -> LinearShift {
        let scales: Vec<FieldElement> = self
            .scales
            .iter()
            .map(|a| a.inv().expect("scales are nonzero"))
            .collect();
        let offsets = scales
            .iter()
            .zip(&self.offsets)
            .map(|(ai, b)| -&(ai * b))
            .collect();
        LinearShift { scales, offsets }
    }

    /// Substitutes and expands.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        let ring = f.ring();
        if self.scales.len() != ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: ring.nvars(),
                got: self.scales.len(),
            });
        }
        if let Some(c) = self.scales.first() {
            if c.field() != ring.field() {
                return Err(Error::FieldMismatch(
                    ring.field().to_string(),
                    c.field().to_string(),
                ));
            }
        }
        let n = ring.nvars();
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                Polynomial::from_terms(
                    ring,
                    [
                        (Term::var(n, i), self.scales[i].clone()),
                        (Term::one(n), self.offsets[i].clone()),
                    ],
                )
            })
            .collect();
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(ring)]; n];
        let mut out = Polynomial::zero(ring);
        for (t, c) in f.terms() {
            let mut acc = Polynomial::constant(ring, c.clone());
            for (i, &e) in t.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    acc = &acc * &powers[i][e as usize];
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::TermOrdering;
    use proptest::prelude::*;

    #[test]
    fn binomial_expansion() {
        let r = Ring::new(FieldSpec::Rationals, &["x"]).unwrap();
        let f = Polynomial::parse(&r, "x^2").unwrap();
        let phi = LinearShift::translation(&r, vec![r.field().one()]).unwrap();
        assert_eq!(phi.apply(&f).unwrap(), Polynomial::parse(&r, "x^2 + 2*x + 1").unwrap());
    }

    #[test]
    fn shift_of_symmetric_quadric() {
        let r = Ring::new(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let f = Polynomial::parse(&r, "x^2 + x*y + y^2").unwrap();
        let phi = LinearShift::translation(&r, vec![r.field().from_i64(1), r.field().from_i64(-2)]).unwrap();
        let expected = Polynomial::parse(&r, "(x+1)^2 + (x+1)*(y-2) + (y-2)^2").unwrap();
        assert_eq!(phi.apply(&f).unwrap(), expected);
        assert_eq!(LinearShift::identity(&r).apply(&f).unwrap(), f);
    }

    #[test]
    fn rejects_bad_shifts() {
        let r = Ring::new(FieldSpec::Rationals, &["x", "y"]).unwrap();
        let f = r.field();
        assert!(matches!(
            LinearShift::new(&r, vec![f.one(), f.zero()], vec![f.zero(), f.zero()]),
            Err(Error::NonInvertibleShift(_))
        ));
        let g5 = FieldSpec::Prime(5);
        assert!(matches!(
            LinearShift::new(&r, vec![g5.one(), g5.one()], vec![g5.zero(), g5.zero()]),
            Err(Error::FieldMismatch(..))
        ));
        let r5 = Ring::new(g5, &["x", "y"]).unwrap();
        let phi = LinearShift::identity(&r5);
        assert!(phi.apply(&Polynomial::var(&r, 0)).is_err());
    }

    fn coeffs() -> impl Strategy<Value = Vec<(u32, u32, i64)>> {
        proptest::collection::vec((0u32..4, 0u32..4, -5i64..6), 1..6)
    }

    proptest! {
        #[test]
        fn shift_preserves_leading_terms_and_inverts(terms in coeffs(),
                                                    a in proptest::collection::vec(1i64..5, 2),
                                                    b in proptest::collection::vec(-4i64..5, 2)) {
            let r = Ring::new(FieldSpec::Rationals, &["x", "y"]).unwrap();
            let fs = r.field();
            let f = Polynomial::from_terms(&r, terms.iter().map(|&(i, j, c)|
                (Term::from_exponents(vec![i, j]), fs.from_i64(c))));
            prop_assume!(!f.is_zero());
            let phi = LinearShift::new(&r, a.iter().map(|&k| fs.from_i64(k)).collect(),
                                       b.iter().map(|&k| fs.from_i64(k)).collect()).unwrap();
            let g = phi.apply(&f).unwrap();
            for o in [TermOrdering::lex(2), TermOrdering::deglex(2), TermOrdering::degrevlex(2)] {
                prop_assert_eq!(f.leading_term(&o).unwrap().0, g.leading_term(&o).unwrap().0);
            }
            prop_assert_eq!(phi.inverse().apply(&g).unwrap(), f);
        }
    }
}
