use std::fmt;

use num_integer::Integer;

use super::fm::{self, Row};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Term};

/// A polyhedral cone `{w ≥ 0 : v·w ≥ 0 for every listed v}` in weight space.
///
/// Inequalities are primitive, irredundant given the orthant, free of vectors
/// with only nonnegative entries, and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    nvars: usize,
    inequalities: Vec<Vec<i64>>,
}

fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g > 1 {
        v.into_iter().map(|x| x / g).collect()
    } else {
        v
    }
}

fn orthant(n: usize, b: i64) -> Vec<Row> {
    (0..n)
        .map(|i| {
            let mut a = vec![0; n];
            a[i] = 1;
            Row::new(&a, b)
        })
        .collect()
}

impl Cone {
    /// The cone of weights that select `marking[k]` as leading term of
    /// `elements[k]` for every `k`.
    pub fn of_marked(nvars: usize, elements: &[Polynomial], marking: &[Term]) -> Result<Cone> {
        let mut raw: Vec<Vec<i64>> = Vec::new();
        for (f, lt) in elements.iter().zip(marking) {
            for t in f.support().filter(|t| *t != lt) {
                let v = primitive(lt.difference(t));
                if v.iter().any(|&x| x < 0) {
                    raw.push(v);
                }
            }
        }
        raw.sort();
        raw.dedup();
        let cone = Cone::from_inequalities(nvars, raw);
        if cone.interior_point().is_none() {
            return Err(Error::InconsistentMarking);
        }
        Ok(cone)
    }

    /// Prunes redundant inequalities and sorts.
    pub(crate) fn from_inequalities(nvars: usize, mut ineqs: Vec<Vec<i64>>) -> Cone {
        ineqs.sort();
        ineqs.dedup();
        // componentwise domination: u ≤ v on the orthant implies v·w ≥ u·w
        let dominated: Vec<bool> = ineqs
            .iter()
            .map(|v| {
                ineqs
                    .iter()
                    .any(|u| u != v && u.iter().zip(v).all(|(a, b)| a <= b))
            })
            .collect();
        let mut keep: Vec<Vec<i64>> = ineqs
            .into_iter()
            .zip(dominated)
            .filter_map(|(v, d)| (!d).then_some(v))
            .collect();
        let mut k = 0;
        while k < keep.len() {
            let mut ge = orthant(nvars, 0);
            ge.extend(
                keep.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, u)| Row::new(u, 0)),
            );
            let neg: Vec<i64> = keep[k].iter().map(|x| -x).collect();
            ge.push(Row::new(&neg, 1));
            if fm::feasible(nvars, &ge, &[]) {
                k += 1;
            } else {
                keep.remove(k);
            }
        }
        Cone {
            nvars,
            inequalities: keep,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn inequalities(&self) -> &[Vec<i64>] {
        &self.inequalities
    }

    pub fn is_orthant(&self) -> bool {
        self.inequalities.is_empty()
    }

    fn dot(v: &[i64], w: &[i64]) -> i64 {
        v.iter().zip(w).map(|(a, b)| a * b).sum()
    }

    pub fn contains(&self, w: &[i64]) -> bool {
        w.len() == self.nvars
            && w.iter().all(|&x| x >= 0)
            && self.inequalities.iter().all(|v| Cone::dot(v, w) >= 0)
    }

    /// Strictly inside the cone and the open orthant.
    pub fn contains_in_interior(&self, w: &[i64]) -> bool {
        w.len() == self.nvars
            && w.iter().all(|&x| x > 0)
            && self.inequalities.iter().all(|v| Cone::dot(v, w) > 0)
    }

    /// A deterministic integer weight in the interior, all entries positive.
    pub fn interior_point(&self) -> Option<Vec<i64>> {
        let mut ge = orthant(self.nvars, 1);
        ge.extend(self.inequalities.iter().map(|v| Row::new(v, 1)));
        fm::find_point(self.nvars, &ge, &[]).map(|w| fm::to_integer_point(&w))
    }

    /// A positive integer weight in the relative interior of the facet
    /// `v·w = 0`, if that facet meets the open orthant.
    pub(crate) fn facet_point(&self, k: usize) -> Option<Vec<i64>> {
        let mut ge = orthant(self.nvars, 1);
        ge.extend(
            self.inequalities
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, v)| Row::new(v, 1)),
        );
        let eq = [Row::new(&self.inequalities[k], 0)];
        fm::find_point(self.nvars, &ge, &eq).map(|w| fm::to_integer_point(&w))
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .inequalities
            .iter()
            .map(|v| format!("{v:?}"))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
