//! Buchberger's algorithm, reduced bases and ideal operations.

mod basis;
mod buchberger;
pub(crate) mod fglm;
mod ideal;
mod sparse;

pub use basis::ReducedGB;
pub use ideal::Ideal;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::poly::{Polynomial, Ring, Term, TermOrdering};

    fn ring(field: FieldSpec, vars: &str) -> Ring {
        Ring::parse_vars(field, vars).unwrap()
    }

    fn strings(g: &ReducedGB) -> Vec<String> {
        g.to_strings()
    }

    fn terms(r: &Ring, ts: &[Term]) -> Vec<String> {
        ts.iter().map(|t| t.display(r).to_string()).collect()
    }

    #[test]
    fn lac_operon_normal_forms() {
        let r = ring(FieldSpec::Prime(2), "x,y,z");
        let f = Polynomial::parse(&r, "y*z + y").unwrap();
        let g1 = Ideal::parse(&r, "x^2+x, z^2+z, y+x+1, x*z+z").unwrap();
        let g2 = Ideal::parse(&r, "y^2+y, z^2+z, x+y+1, y*z").unwrap();
        assert!(g1.equals(&g2).unwrap());
        let lex_yxz = TermOrdering::lex_with_precedence(&[1, 0, 2]).unwrap();
        let b1 = g1.groebner(&lex_yxz).unwrap();
        assert_eq!(strings(&b1), ["z^2 + z", "x*z + z", "x^2 + x", "y + x + 1"]);
        assert_eq!(b1.normal_form(&f).unwrap().to_string(), "x + 1");
        let b2 = g1.groebner(&TermOrdering::lex(3)).unwrap();
        assert_eq!(strings(&b2), ["z^2 + z", "y*z", "y^2 + y", "x + y + 1"]);
        assert_eq!(b2.normal_form(&f).unwrap().to_string(), "y");
        for g in b1.elements() {
            assert!(b1.normal_form(g).unwrap().is_zero());
        }
    }

    #[test]
    fn principal_and_trivial() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let i = Ideal::parse(&r, "x + y").unwrap();
        let g = i.groebner(&TermOrdering::lex(2)).unwrap();
        assert_eq!(strings(&g), ["x + y"]);
        assert!(!i.is_zero_dimensional());
        assert_eq!(i.multiplicity(), Err(crate::Error::NotZeroDimensional));
        let unit = Ideal::parse(&r, "x, x + 1").unwrap();
        assert!(unit.is_unit());
        assert!(unit.is_zero_dimensional());
        assert_eq!(unit.multiplicity(), Ok(0));
        assert!(Ideal::zero(&r).degrevlex().is_empty());
    }

    #[test]
    fn symmetric_quadric_leading_term_ideals() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let i = Ideal::parse(&r, "x^2 + x*y + y^2, x^3, x^2*y, x*y^2, y^3").unwrap();
        let j1 = i.leading_term_ideal(&TermOrdering::lex(2)).unwrap();
        assert_eq!(j1.to_strings(), ["x^2", "y^3", "x*y^2"]);
        let lex_yx = TermOrdering::lex_with_precedence(&[1, 0]).unwrap();
        let j2 = i.leading_term_ideal(&lex_yx).unwrap();
        assert_eq!(j2.to_strings(), ["y^2", "x^2*y", "x^3"]);
        assert_eq!(i.multiplicity(), Ok(5));
    }

    #[test]
    fn degrevlex_leading_terms_of_four_points() {
        let r = ring(FieldSpec::Rationals, "x,y,z");
        // ideal of (0,0,0), (1,0,0), (0,1,0), (0,0,1)
        let i = Ideal::parse(&r, "x^2 - x, y^2 - y, z^2 - z, x*y, x*z, y*z").unwrap();
        let lt = i.leading_term_ideal(&TermOrdering::degrevlex(3)).unwrap();
        assert_eq!(lt.to_strings(), ["z^2", "y*z", "x*z", "y^2", "x*y", "x^2"]);
        assert!(i.degrevlex().is_factor_closed());
    }

    #[test]
    fn radical_grid_split() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let j = Ideal::parse(&r, "(x^2+1)*(x-1)*(x-2), (y^2-2)*(y+2)").unwrap();
        let i1 = j.sum(&Ideal::parse(&r, "x - 1 + y^2 - 2").unwrap()).unwrap();
        assert_eq!(strings(&i1.degrevlex()), ["x - 1", "y^2 - 2"]);
        let i2 = j.colon(&i1).unwrap();
        assert_eq!(
            strings(&i2.degrevlex()),
            [
                "y^3 + 2*y^2 - 2*y - 4",
                "x^3*y + 2*x^3 - 2*x^2*y - 4*x^2 + x*y + 2*x - 2*y - 4",
                "x^4 - 3*x^3 + 3*x^2 - 3*x + 2",
            ]
        );
        assert_eq!(j.multiplicity(), Ok(12));
        assert_eq!(i1.multiplicity(), Ok(2));
        assert_eq!(i2.multiplicity(), Ok(10));
        let drl = TermOrdering::degrevlex(2);
        assert_eq!(terms(&r, &i1.quotient_basis(&drl).unwrap()), ["1", "y"]);
        let prod = i1.product(&i2).unwrap();
        assert!(prod.equals(&j).unwrap());
        assert!(i1.sum(&i2).unwrap().is_unit());
        assert!(i1.intersection(&i2).unwrap().equals(&j).unwrap());
        assert!(j.colon(&i2).unwrap().equals(&i1).unwrap());
    }

    #[test]
    fn intersection_colon_elimination_basics() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let x = Ideal::parse(&r, "x").unwrap();
        let y = Ideal::parse(&r, "y").unwrap();
        assert_eq!(strings(&x.intersection(&y).unwrap().degrevlex()), ["x*y"]);
        let unit = Ideal::unit(&r);
        let i = Ideal::parse(&r, "x^2 - y, y^3").unwrap();
        assert!(i.intersection(&unit).unwrap().equals(&i).unwrap());
        assert!(i.colon(&unit).unwrap().equals(&i).unwrap());
        assert_eq!(i.colon(&Ideal::zero(&r)).unwrap_err(), crate::Error::ZeroIdealDivisor);
        let e = Ideal::parse(&r, "x - y, y^2").unwrap().eliminate(&[1]).unwrap();
        assert_eq!(strings(&e.degrevlex()), ["x^2"]);
        assert!(i.eliminate(&[]).unwrap().equals(&i).unwrap());
        assert!(x.sum(&Ideal::zero(&r)).unwrap().equals(&x).unwrap());
    }

    #[test]
    fn lac_operon_elimination() {
        let r = ring(FieldSpec::Prime(2), "x,y,z");
        let i = Ideal::parse(&r, "x^2+x, z^2+z, y+x+1, x*z+z").unwrap();
        let e = i.eliminate(&[1, 2]).unwrap();
        assert_eq!(strings(&e.degrevlex()), ["x^2 + x"]);
    }

    #[test]
    fn criteria_do_not_change_output() {
        let r = ring(FieldSpec::Rationals, "x,y,z");
        let gens = crate::poly::parse_polynomial_list(
            &r,
            "x^2*y - z^2 + 1, x*y*z - y^2, z^3 - x*y + 2*x",
        )
        .unwrap();
        for ord in [TermOrdering::lex(3), TermOrdering::degrevlex(3), TermOrdering::deglex(3)] {
            let a = ReducedGB::compute_with(&r, &gens, &ord, true).unwrap();
            let b = ReducedGB::compute_with(&r, &gens, &ord, false).unwrap();
            assert_eq!(a.to_strings(), b.to_strings());
            assert!(a.verify());
        }
    }

    #[test]
    fn cache_and_display() {
        let r = ring(FieldSpec::Rationals, "x,y");
        let i = Ideal::parse(&r, "x - 1, y^2 - 2").unwrap();
        let a = i.groebner(&TermOrdering::degrevlex(2)).unwrap();
        let m = TermOrdering::from_matrix(vec![vec![2, 2], vec![0, -3]]).unwrap();
        let b = i.groebner(&m).unwrap();
        assert!(std::sync::Arc::ptr_eq(&a, &b));
        assert_eq!(a.to_string(), "order: degrevlex\nx - 1\ny^2 - 2\n");
    }
}
