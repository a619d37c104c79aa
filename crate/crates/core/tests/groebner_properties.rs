use gbfan::{FieldSpec, Ideal, Polynomial, ReducedGB, Ring, Term, TermOrdering};
use proptest::prelude::*;

fn ring(field: FieldSpec) -> Ring {
    Ring::parse_vars(field, "x,y,z").unwrap()
}

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rationals), Just(FieldSpec::Prime(5)), Just(FieldSpec::Prime(7))]
}

fn poly(r: &Ring, spec: &[(i64, [u32; 3])]) -> Polynomial {
    let f = r.field();
    Polynomial::from_terms(r, spec.iter().map(|(c, e)| (Term::from_exponents(e.to_vec()), f.from_i64(*c))))
}

fn poly_spec() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
    prop::collection::vec((-4i64..=4, [0u32..3, 0u32..3, 0u32..3]), 1..4)
}

fn orderings() -> Vec<TermOrdering> {
    vec![
        TermOrdering::lex(3),
        TermOrdering::degrevlex(3),
        TermOrdering::deglex(3),
        TermOrdering::lex_with_precedence(&[2, 0, 1]).unwrap(),
        TermOrdering::weighted(&[3, 1, 2]).unwrap(),
    ]
}

/// A zero-dimensional ideal: one univariate polynomial per variable plus
/// random extra generators.
fn zero_dim(r: &Ring, roots: &[Vec<i64>], extra: &[Vec<(i64, [u32; 3])>]) -> Ideal {
    let mut gens: Vec<Polynomial> = roots
        .iter()
        .enumerate()
        .map(|(i, rs)| {
            rs.iter().fold(Polynomial::one(r), |acc, &a| {
                &acc * &(&Polynomial::var(r, i) - &Polynomial::constant(r, r.field().from_i64(a)))
            })
        })
        .collect();
    gens.extend(extra.iter().map(|s| poly(r, s)));
    Ideal::new(r, gens).unwrap()
}

/// Field, roots per variable and extra generators.
type ZeroDimInput = (FieldSpec, Vec<Vec<i64>>, Vec<Vec<(i64, [u32; 3])>>);

fn zero_dim_input() -> impl Strategy<Value = ZeroDimInput> {
    (
        field(),
        prop::collection::vec(prop::collection::vec(-2i64..=2, 1..4), 3),
        prop::collection::vec(poly_spec(), 0..3),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent_and_linear(
        (f, roots, extra) in zero_dim_input(),
        a in poly_spec(),
        b in poly_spec(),
        k in -3i64..=3,
    ) {
        let r = ring(f);
        let i = zero_dim(&r, &roots, &extra);
        let (a, b) = (poly(&r, &a), poly(&r, &b));
        let c = Polynomial::constant(&r, f.from_i64(k));
        for ord in orderings() {
            let g = i.groebner(&ord).unwrap();
            let na = g.normal_form(&a).unwrap();
            prop_assert_eq!(g.normal_form(&na).unwrap(), na.clone());
            let nb = g.normal_form(&b).unwrap();
            let lhs = g.normal_form(&(&a + &(&c * &b))).unwrap();
            prop_assert_eq!(lhs, &na + &(&c * &nb));
            let lt = g.leading_term_ideal();
            prop_assert!(na.support().all(|t| !lt.contains(t)));
        }
    }

    #[test]
    fn criteria_and_conversion_agree_with_plain_buchberger((f, roots, extra) in zero_dim_input()) {
        let r = ring(f);
        let i = zero_dim(&r, &roots, &extra);
        i.degrevlex();
        for ord in orderings() {
            let plain = ReducedGB::compute_with(&r, i.generators(), &ord, false).unwrap();
            let with = ReducedGB::compute_with(&r, i.generators(), &ord, true).unwrap();
            prop_assert_eq!(plain.to_strings(), with.to_strings());
            let converted = i.groebner(&ord).unwrap();
            prop_assert_eq!(plain.to_strings(), converted.to_strings());
            prop_assert!(converted.verify());
        }
    }

    #[test]
    fn multiplicity_does_not_depend_on_the_ordering((f, roots, extra) in zero_dim_input()) {
        let r = ring(f);
        let i = zero_dim(&r, &roots, &extra);
        let m = i.multiplicity().unwrap();
        for ord in orderings() {
            prop_assert_eq!(i.quotient_basis(&ord).unwrap().len(), m);
        }
    }
}
