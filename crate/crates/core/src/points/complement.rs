use super::{GridIdeal, PointSet};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::LinearShift;

/// The identities checked for a complementary pair `(I1, I2)` inside `J`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementCertificate {
    /// `(dim P/J, dim P/I1, dim P/I2)`.
    pub multiplicities: (usize, usize, usize),
    /// `I1 ∩ I2 = J`.
    pub intersection_is_grid: bool,
    /// `I1 + I2 = ⟨1⟩`.
    pub comaximal: bool,
    /// `J : I2 = I1`.
    pub colon_is_symmetric: bool,
}

impl ComplementCertificate {
    pub fn holds(&self) -> bool {
        let (j, a, b) = self.multiplicities;
        self.intersection_is_grid && self.comaximal && self.colon_is_symmetric && j == a + b
    }

    fn failures(&self) -> String {
        let (j, a, b) = self.multiplicities;
        let mut out = Vec::new();
        if !self.intersection_is_grid {
            out.push("I1 ∩ I2 ≠ J".to_string());
        }
        if !self.comaximal {
            out.push("I1 + I2 ≠ ⟨1⟩".to_string());
        }
        if !self.colon_is_symmetric {
            out.push("J : I2 ≠ I1".to_string());
        }
        if j != a + b {
            out.push(format!("multiplicities {j} ≠ {a} + {b}"));
        }
        out.join("; ")
    }
}

/// `I2 = J : I1` for an ideal `I1` containing the grid ideal `J`, returned
/// only when the pair passes every identity of the certificate.
pub fn complementary_pair(grid: &GridIdeal, i1: &Ideal) -> Result<(Ideal, ComplementCertificate)> {
    grid.ring().check_same(i1.ring())?;
    let j = grid.ideal();
    for g in j.generators() {
        if !i1.contains(g)? {
            return Err(Error::NotContaining);
        }
    }
    let i2 = j.colon(i1)?;
    let cert = ComplementCertificate {
        multiplicities: (j.multiplicity()?, i1.multiplicity()?, i2.multiplicity()?),
        intersection_is_grid: i1.intersection(&i2)?.equals(&j)?,
        comaximal: i1.sum(&i2)?.is_unit(),
        colon_is_symmetric: j.colon(&i2)?.equals(i1)?,
    };
    if !cert.holds() {
        return Err(Error::ComplementarityCertificateFailed(cert.failures()));
    }
    Ok((i2, cert))
}

/// `(𝓘(Y), 𝓘(X ∖ Y))` for a nonempty subset `Y` of a full grid `X`. When
/// `Y = X` the second ideal is `⟨1⟩`.
pub fn subset_complement_ideals(grid: &PointSet, subset: &PointSet) -> Result<(Ideal, Ideal)> {
    grid.ring().check_same(subset.ring())?;
    if !grid.is_grid() {
        return Err(Error::NotGrid);
    }
    if subset.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if subset.points().iter().any(|p| !grid.contains(p)) {
        return Err(Error::NotSubset);
    }
    let rest = grid.difference(subset);
    let i2 = if rest.is_empty() {
        Ideal::unit(grid.ring())
    } else {
        rest.ideal()?
    };
    Ok((subset.ideal()?, i2))
}

/// `⟨Φ(g) : g a generator of I⟩`.
pub fn shift_ideal(ideal: &Ideal, phi: &LinearShift) -> Result<Ideal> {
    ideal.shift(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::{Ring, TermOrdering};

    fn ring(field: FieldSpec, vars: &str) -> Ring {
        Ring::parse_vars(field, vars).unwrap()
    }

    #[test]
    fn radical_grid_with_four_roots() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let grid = GridIdeal::from_integer_roots(&r, &[vec![0, 1], vec![0, 1]]).unwrap();
        let y = PointSet::from_integers(&r, &[vec![0, 0], vec![1, 1]]).unwrap();
        let i1 = y.ideal().unwrap();
        let (i2, cert) = complementary_pair(&grid, &i1).unwrap();
        assert_eq!(cert.multiplicities, (4, 2, 2));
        let rest = grid.points().unwrap().difference(&y);
        assert!(i2.equals(&rest.ideal().unwrap()).unwrap());
        let (a, b) = subset_complement_ideals(&grid.points().unwrap(), &y).unwrap();
        assert!(a.equals(&i1).unwrap() && b.equals(&i2).unwrap());
    }

    #[test]
    fn not_containing_and_failed_certificate() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let grid = GridIdeal::from_integer_roots(&r, &[vec![0, 1], vec![0, 1]]).unwrap();
        let far = Ideal::parse(&r, "x - 5, y").unwrap();
        assert_eq!(complementary_pair(&grid, &far).unwrap_err(), Error::NotContaining);
        // ⟨x², y⟩ ⊇ ⟨x², y²⟩ but is not a union of primary components
        let fat = GridIdeal::from_integer_roots(&r, &[vec![0, 0], vec![0, 0]]).unwrap();
        let half = Ideal::parse(&r, "x^2, y").unwrap();
        assert!(matches!(
            complementary_pair(&fat, &half),
            Err(Error::ComplementarityCertificateFailed(_))
        ));
    }

    #[test]
    fn subset_edge_cases() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let x = GridIdeal::from_integer_roots(&r, &[vec![0, 1], vec![2, 3]]).unwrap().points().unwrap();
        let (all, unit) = subset_complement_ideals(&x, &x).unwrap();
        assert!(unit.is_unit());
        assert_eq!(all.multiplicity(), Ok(4));
        let empty = PointSet::new(&r, vec![]).unwrap();
        assert_eq!(subset_complement_ideals(&x, &empty).unwrap_err(), Error::EmptyPointSet);
        let outside = PointSet::from_integers(&r, &[vec![0, 0]]).unwrap();
        assert_eq!(subset_complement_ideals(&x, &outside).unwrap_err(), Error::NotSubset);
        let ragged = PointSet::from_integers(&r, &[vec![0, 2], vec![1, 3]]).unwrap();
        assert_eq!(subset_complement_ideals(&ragged, &outside).unwrap_err(), Error::NotGrid);
    }

    #[test]
    fn shifted_example_keeps_leading_term_ideals() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let i = Ideal::parse(&r, "x^2 + x*y + y^2, x^3, x^2*y, x*y^2, y^3").unwrap();
        let f = r.field();
        let phi = LinearShift::new(&r, vec![f.one(), f.one()], vec![f.from_i64(1), f.from_i64(-2)]).unwrap();
        let s = shift_ideal(&i, &phi).unwrap();
        for ord in [TermOrdering::lex(2), TermOrdering::lex_with_precedence(&[1, 0]).unwrap()] {
            assert_eq!(s.leading_term_ideal(&ord).unwrap(), i.leading_term_ideal(&ord).unwrap());
        }
    }
}
