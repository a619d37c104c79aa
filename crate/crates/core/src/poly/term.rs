use std::fmt;

use super::Ring;

/// A power product `x_1^a_1 ... x_n^a_n`, stored as its exponent vector.
///
/// The derived `Ord` is plain lexicographic comparison of exponent vectors; it
/// is only used for canonical storage, never as a term ordering.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term(Vec<u32>);

impl Term {
    pub fn one(nvars: usize) -> Self {
        Term(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Term(e)
    }

    pub fn pure_power(nvars: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        Term(e)
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Term(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Term) -> Option<Term> {
        if !other.divides(self) {
            return None;
        }
        Some(Term(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Term) -> Term {
        Term(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Term) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `Some(i)` when the term is `x_i^k` with `k > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Multiply by `x_i`.
    pub fn times_var(&self, i: usize) -> Term {
        let mut e = self.0.clone();
        e[i] += 1;
        Term(e)
    }

    /// Exponent-wise difference `self - other` as signed integers.
    pub fn difference(&self, other: &Term) -> Vec<i64> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect()
    }

    /// Proper divisors-by-one-variable `self / x_i`.
    pub fn predecessors(&self) -> impl Iterator<Item = Term> + '_ {
        (0..self.0.len()).filter(|&i| self.0[i] > 0).map(move |i| {
            let mut e = self.0.clone();
            e[i] -= 1;
            Term(e)
        })
    }

    pub fn display<'a>(&'a self, ring: &'a Ring) -> TermDisplay<'a> {
        TermDisplay { term: self, ring }
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Term{:?}", self.0)
    }
}

pub struct TermDisplay<'a> {
    term: &'a Term,
    ring: &'a Ring,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.term.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.term.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.var_name(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
