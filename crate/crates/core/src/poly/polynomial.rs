use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use super::{Ring, Term, TermOrdering};
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// A multivariate polynomial: a sparse map from terms to nonzero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Term, FieldElement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Ring, c: FieldElement) -> Self {
        Polynomial::monomial(ring, c, Term::one(ring.nvars()))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Polynomial::monomial(ring, ring.field().one(), Term::var(ring.nvars(), i))
    }

    pub fn monomial(ring: &Ring, c: FieldElement, t: Term) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(t, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from possibly repeated, possibly zero terms.
    pub fn from_terms(ring: &Ring, it: impl IntoIterator<Item = (Term, FieldElement)>) -> Self {
        let mut terms: BTreeMap<Term, FieldElement> = BTreeMap::new();
        for (t, c) in it {
            debug_assert_eq!(t.nvars(), ring.nvars());
            match terms.get_mut(&t) {
                Some(old) => {
                    *old = &*old + &c;
                    if old.is_zero() {
                        terms.remove(&t);
                    }
                }
                None => {
                    if !c.is_zero() {
                        terms.insert(t, c);
                    }
                }
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Term::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Supp(f)`, in canonical storage order.
    pub fn support(&self) -> impl Iterator<Item = &Term> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &FieldElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Term) -> FieldElement {
        self.terms
            .get(t)
            .cloned()
            .unwrap_or_else(|| self.ring.field().zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Term::degree).max()
    }

    /// Terms sorted by decreasing `ord`.
    pub fn sorted_terms(&self, ord: &TermOrdering) -> Vec<(Term, FieldElement)> {
        let mut v: Vec<(Term, FieldElement)> =
            self.terms.iter().map(|(t, c)| (t.clone(), c.clone())).collect();
        v.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        v
    }

    /// Leading term and coefficient, `None` for the zero polynomial.
    pub fn leading(&self, ord: &TermOrdering) -> Option<(&Term, &FieldElement)> {
        self.terms.iter().reduce(|best, cur| {
            if ord.cmp(cur.0, best.0) == Ordering::Greater {
                cur
            } else {
                best
            }
        })
    }

    pub fn leading_term(&self, ord: &TermOrdering) -> Result<(Term, FieldElement)> {
        if ord.nvars() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                got: ord.nvars(),
            });
        }
        self.leading(ord)
            .map(|(t, c)| (t.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Scales so the `ord`-leading coefficient is one.
    pub fn monic(&self, ord: &TermOrdering) -> Polynomial {
        match self.leading(ord) {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.clone(), a * c)).collect(),
        }
    }

    pub fn mul_term(&self, c: &FieldElement, m: &Term) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Checked ring arithmetic.
    pub fn arith(&self, other: &Polynomial, op: PolyOp) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(match op {
            PolyOp::Add => self + other,
            PolyOp::Sub => self - other,
            PolyOp::Mul => self * other,
        })
    }

    /// True iff some support term is divisible by every other support term.
    pub fn is_factor_closed(&self) -> bool {
        let Some(top) = self
            .terms
            .keys()
            .reduce(|a, b| if a.degree() >= b.degree() { a } else { b })
        else {
            return true;
        };
        self.terms.keys().all(|t| t.divides(top))
    }

    /// `Some(i)` when every support term only involves `x_i` (constants count).
    pub fn univariate_var(&self) -> Option<usize> {
        let mut var = None;
        for t in self.terms.keys() {
            for (i, &e) in t.exponents().iter().enumerate() {
                if e > 0 {
                    match var {
                        None => var = Some(i),
                        Some(j) if j != i => return None,
                        _ => {}
                    }
                }
            }
        }
        var
    }

    pub fn involves_any(&self, vars: &[usize]) -> bool {
        self.terms
            .keys()
            .any(|t| vars.iter().any(|&i| t.exponents()[i] > 0))
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        let mut acc = self.ring.field().zero();
        for (t, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(t.exponents()) {
                if e > 0 {
                    v = &v * &x.pow(e);
                }
            }
            acc = &acc + &v;
        }
        acc
    }

    /// Exact quotient `self / divisor`, `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let ord = TermOrdering::degrevlex(self.ring.nvars());
        let (lt, lc) = divisor.leading(&ord)?;
        let (lt, lc_inv) = (lt.clone(), lc.inv().ok()?);
        let mut rest = self.clone();
        let mut quot = Vec::new();
        while let Some((t, c)) = rest.leading(&ord) {
            let m = t.div(&lt)?;
            let q = c * &lc_inv;
            rest = &rest - &divisor.mul_term(&q, &m);
            quot.push((m, q));
        }
        Some(Polynomial::from_terms(&self.ring, quot))
    }

    /// Re-homes the polynomial in `target`, mapping variable `i` to `map[i]`.
    pub(crate) fn remap(&self, target: &Ring, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    let mut e = vec![0; n];
                    for (i, &a) in t.exponents().iter().enumerate() {
                        e[map[i]] += a;
                    }
                    (Term::from_exponents(e), c.clone())
                })
                .collect(),
        }
    }

    /// Drops the trailing variables of a polynomial that does not involve them.
    pub(crate) fn truncate_vars(&self, target: &Ring) -> Polynomial {
        let n = target.nvars();
        Polynomial {
            ring: target.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| {
                    debug_assert!(t.exponents()[n..].iter().all(|&e| e == 0));
                    (Term::from_exponents(t.exponents()[..n].to_vec()), c.clone())
                })
                .collect(),
        }
    }

    /// Canonical text with terms in decreasing `ord` order.
    pub fn to_string_with(&self, ord: &TermOrdering) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (t, c)) in self.sorted_terms(ord).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -&c } else { c };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let term = t.display(&self.ring).to_string();
            if t.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&term);
            } else {
                out.push_str(&format!("{abs}*{term}"));
            }
        }
        out
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Polynomial) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&TermOrdering::degrevlex(self.ring.nvars())))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn combine(a: &Polynomial, b: &Polynomial, negate: bool) -> Polynomial {
    assert!(a.ring == b.ring, "ring mismatch in polynomial arithmetic");
    let mut terms = a.terms.clone();
    for (t, c) in &b.terms {
        let c = if negate { -c } else { c.clone() };
        match terms.get_mut(t) {
            Some(old) => {
                *old = &*old + &c;
                if old.is_zero() {
                    terms.remove(t);
                }
            }
            None => {
                terms.insert(t.clone(), c);
            }
        }
    }
    Polynomial {
        ring: a.ring.clone(),
        terms,
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        combine(self, rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        combine(self, rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert!(self.ring == rhs.ring, "ring mismatch in polynomial arithmetic");
        let it = self
            .terms
            .iter()
            .flat_map(|(s, a)| rhs.terms.iter().map(move |(t, b)| (s.mul(t), a * b)));
        Polynomial::from_terms(&self.ring, it)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use proptest::prelude::*;

    fn qxy() -> Ring {
        Ring::new(FieldSpec::Rationals, &["x", "y"]).unwrap()
    }

    fn p(r: &Ring, s: &str) -> Polynomial {
        Polynomial::parse(r, s).unwrap()
    }

    #[test]
    fn leading_terms_of_symmetric_quadric() {
        let r = qxy();
        let f = p(&r, "x^2 + x*y + y^2");
        let (lt, lc) = f.leading_term(&TermOrdering::lex(2)).unwrap();
        assert_eq!(lt, Term::from_exponents(vec![2, 0]));
        assert!(lc.is_one());
        let ylex = TermOrdering::lex_with_precedence(&[1, 0]).unwrap();
        assert_eq!(f.leading_term(&ylex).unwrap().0, Term::from_exponents(vec![0, 2]));
        let g = p(&r, "x + y");
        for o in [TermOrdering::lex(2), TermOrdering::degrevlex(2), TermOrdering::weighted(&[3, 1]).unwrap()] {
            assert_eq!(g.leading_term(&o).unwrap().0, Term::var(2, 0));
        }
        assert_eq!(
            Polynomial::zero(&r).leading_term(&TermOrdering::lex(2)),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn factor_closed() {
        let r = Ring::new(FieldSpec::Rationals, &["x", "y", "z"]).unwrap();
        assert!(p(&r, "y*z - z").is_factor_closed());
        assert!(!p(&r, "x^2 + x*y + y^2").is_factor_closed());
        assert!(p(&r, "x - 1").is_factor_closed());
        assert!(Polynomial::zero(&r).is_factor_closed());
        assert!(!p(&r, "x*y + z").is_factor_closed());
    }

    #[test]
    fn arithmetic() {
        let r = qxy();
        assert!(p(&r, "x+y").arith(&p(&r, "x+y"), PolyOp::Sub).unwrap().is_zero());
        assert_eq!(&p(&r, "x-1") * &p(&r, "x-2"), p(&r, "x^2 - 3*x + 2"));
        assert_eq!(&p(&r, "y-1") * &p(&r, "y-2"), p(&r, "y^2 - 3*y + 2"));
        let other = Ring::new(FieldSpec::Rationals, &["a", "b"]).unwrap();
        assert_eq!(
            p(&r, "x").arith(&p(&other, "a"), PolyOp::Add),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn printing() {
        let r = qxy();
        let f = p(&r, "x^5 + 2*x^3 + (4/3)*y^2 + x + (4/3)*y - 8/3");
        assert_eq!(f.to_string(), "x^5 + 2*x^3 + 4/3*y^2 + x + 4/3*y - 8/3");
        assert_eq!(p(&r, "-x + 1").to_string(), "-x + 1");
        assert_eq!(p(&r, "1 - 2*x*y").to_string(), "-2*x*y + 1");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
        let f3 = Ring::new(FieldSpec::Prime(3), &["x"]).unwrap();
        assert_eq!(p(&f3, "x^3 - x").to_string(), "x^3 + 2*x");
    }

    #[test]
    fn exact_division() {
        let r = qxy();
        let f = p(&r, "x^2*y - y^3");
        assert_eq!(f.exact_div(&p(&r, "x - y")).unwrap(), p(&r, "x*y + y^2"));
        assert!(f.exact_div(&p(&r, "x + 2")).is_none());
    }

    fn small_poly() -> impl Strategy<Value = Vec<(u32, u32, u32, i64)>> {
        proptest::collection::vec((0u32..3, 0u32..3, 0u32..3, -3i64..4), 1..5)
    }

    fn build(r: &Ring, v: &[(u32, u32, u32, i64)]) -> Polynomial {
        Polynomial::from_terms(
            r,
            v.iter()
                .map(|&(a, b, c, k)| (Term::from_exponents(vec![a, b, c]), r.field().from_i64(k))),
        )
    }

    proptest! {
        #[test]
        fn leading_term_is_multiplicative(a in small_poly(), b in small_poly(),
                                         w in proptest::collection::vec(1i64..7, 3)) {
            let r = Ring::new(FieldSpec::Rationals, &["x", "y", "z"]).unwrap();
            let (f, g) = (build(&r, &a), build(&r, &b));
            prop_assume!(!f.is_zero() && !g.is_zero());
            for o in [TermOrdering::lex(3), TermOrdering::deglex(3), TermOrdering::degrevlex(3),
                      TermOrdering::weighted(&w).unwrap()] {
                let lf = f.leading_term(&o).unwrap().0;
                let lg = g.leading_term(&o).unwrap().0;
                prop_assert_eq!((&f * &g).leading_term(&o).unwrap().0, lf.mul(&lg));
            }
        }

        #[test]
        fn factor_closed_leading_term_is_order_free(a in small_poly(),
                                                    rows in proptest::collection::vec(
                                                        proptest::collection::vec(1i64..9, 3), 5)) {
            let r = Ring::new(FieldSpec::Prime(5), &["x", "y", "z"]).unwrap();
            let f = build(&r, &a);
            prop_assume!(!f.is_zero() && f.is_factor_closed());
            let reference = f.leading_term(&TermOrdering::lex(3)).unwrap().0;
            let mut orders = vec![TermOrdering::deglex(3), TermOrdering::degrevlex(3)];
            orders.extend(rows.iter().map(|w| TermOrdering::weighted(w).unwrap()));
            for o in orders {
                prop_assert_eq!(&f.leading_term(&o).unwrap().0, &reference);
            }
        }
    }
}
