//! Incremental row echelon form over a field, tracking how each reduced row
//! combines the vectors inserted so far.

use crate::field::{FieldElement, FieldSpec};

struct Row {
    pivot: usize,
    vec: Vec<FieldElement>,
    combo: Vec<FieldElement>,
}

pub(crate) struct Echelon {
    field: FieldSpec,
    rows: Vec<Row>,
}

pub(crate) enum Insert {
    /// Stored as a new original.
    Independent,
    /// `v = Σ c_k · original_k`.
    Dependent(Vec<FieldElement>),
}

impl Echelon {
    pub fn new(field: FieldSpec) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
        }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `v` and the combination of originals already subtracted.
    fn reduce(&self, v: &[FieldElement]) -> (Vec<FieldElement>, Vec<FieldElement>) {
        let mut res = v.to_vec();
        let mut acc = vec![self.field.zero(); self.rows.len()];
        for row in &self.rows {
            let f = res[row.pivot].clone();
            if f.is_zero() {
                continue;
            }
            for (a, b) in res.iter_mut().zip(&row.vec) {
                if !b.is_zero() {
                    *a = &*a - &(&f * b);
                }
            }
            for (a, b) in acc.iter_mut().zip(&row.combo) {
                if !b.is_zero() {
                    *a = &*a + &(&f * b);
                }
            }
        }
        (res, acc)
    }

    /// Coefficients of `v` over the originals, if `v` lies in their span.
    pub fn solve(&self, v: &[FieldElement]) -> Option<Vec<FieldElement>> {
        let (res, acc) = self.reduce(v);
        res.iter().all(FieldElement::is_zero).then_some(acc)
    }

    pub fn insert(&mut self, v: &[FieldElement]) -> Insert {
        let (res, acc) = self.reduce(v);
        let Some(pivot) = res.iter().position(|a| !a.is_zero()) else {
            return Insert::Dependent(acc);
        };
        let inv = res[pivot].inv().expect("nonzero pivot");
        for row in &mut self.rows {
            row.combo.push(self.field.zero());
        }
        let mut combo: Vec<FieldElement> = acc.iter().map(|a| -&(a * &inv)).collect();
        combo.push(inv.clone());
        self.rows.push(Row {
            pivot,
            vec: res.iter().map(|a| a * &inv).collect(),
            combo,
        });
        Insert::Independent
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dependency_coefficients() {
        let f = FieldSpec::Rationals;
        let v = |a: &[i64]| a.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let mut e = Echelon::new(f);
        assert!(matches!(e.insert(&v(&[1, 2, 0])), Insert::Independent));
        assert!(matches!(e.insert(&v(&[0, 1, 1])), Insert::Independent));
        match e.insert(&v(&[2, 1, -3])) {
            Insert::Dependent(c) => assert_eq!(c, v(&[2, -3])),
            Insert::Independent => panic!("dependent"),
        }
        assert_eq!(e.solve(&v(&[1, 3, 1])), Some(v(&[1, 1])));
        assert_eq!(e.solve(&v(&[0, 0, 1])), None);
        assert_eq!(e.rank(), 2);
    }
}
