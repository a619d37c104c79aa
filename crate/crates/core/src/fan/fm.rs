//! Exact Fourier–Motzkin elimination for small systems `a·w ≥ b`, `a·w = b`
//! with integer data.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `a·w ≥ b`, or `a·w = b` when used as an equation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Row {
    pub a: Vec<i128>,
    pub b: i128,
}

impl Row {
    pub fn new(a: &[i64], b: i64) -> Row {
        Row {
            a: a.iter().map(|&x| x as i128).collect(),
            b: b as i128,
        }
    }

    /// Divides by the positive gcd of all entries.
    fn normalize(mut self) -> Row {
        let g = self.a.iter().fold(self.b.abs(), |g, &x| g.gcd(&x.abs()));
        if g > 1 {
            for x in &mut self.a {
                *x /= g;
            }
            self.b /= g;
        }
        self
    }
}

/// `p·x_k > 0 > q·x_k`: the positive combination cancelling `x_k`.
fn combine(p: &Row, q: &Row, k: usize) -> Row {
    let (alpha, beta) = (p.a[k], -q.a[k]);
    Row {
        a: p.a.iter().zip(&q.a).map(|(x, y)| beta * x + alpha * y).collect(),
        b: beta * p.b + alpha * q.b,
    }
    .normalize()
}

/// Substitutes equation `e` (solved for `x_k`) into `r`.
fn substitute(r: &Row, e: &Row, k: usize) -> Row {
    let (ek, rk) = (e.a[k], r.a[k]);
    if rk == 0 {
        return r.clone();
    }
    let s = ek.signum();
    let m = ek.abs();
    Row {
        a: r.a.iter().zip(&e.a).map(|(x, y)| m * x - s * rk * y).collect(),
        b: m * r.b - s * rk * e.b,
    }
    .normalize()
}

/// Drops trivially true rows and keeps only the tightest bound per direction.
/// Returns `None` on a trivially false row.
fn tidy(rows: Vec<Row>) -> Option<Vec<Row>> {
    let mut best: HashMap<Vec<i128>, i128> = HashMap::new();
    for r in rows {
        if r.a.iter().all(|&x| x == 0) {
            if r.b > 0 {
                return None;
            }
            continue;
        }
        let e = best.entry(r.a).or_insert(r.b);
        if r.b > *e {
            *e = r.b;
        }
    }
    let mut out: Vec<Row> = best.into_iter().map(|(a, b)| Row { a, b }).collect();
    out.sort_by(|x, y| x.a.cmp(&y.a).then(x.b.cmp(&y.b)));
    Some(out)
}

fn ratio(num: i128, den: i128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Bounds on `x_k` from `rows`, given values for `x_0..x_{k-1}` (rows must
/// not involve variables above `k`).
fn bounds(rows: &[Row], k: usize, w: &[BigRational]) -> (Option<BigRational>, Option<BigRational>) {
    let mut lo: Option<BigRational> = None;
    let mut hi: Option<BigRational> = None;
    for r in rows {
        let c = r.a[k];
        if c == 0 {
            continue;
        }
        let mut rest = BigRational::from_integer(r.b.into());
        for j in 0..k {
            if r.a[j] != 0 {
                rest -= &w[j] * BigRational::from_integer(r.a[j].into());
            }
        }
        let v = rest / BigRational::from_integer(c.into());
        if c > 0 {
            if lo.as_ref().is_none_or(|l| v > *l) {
                lo = Some(v);
            }
        } else if hi.as_ref().is_none_or(|h| v < *h) {
            hi = Some(v);
        }
    }
    (lo, hi)
}

/// A rational point satisfying every `ge` row and every `eq` row, or `None`.
///
/// Back-substitution prefers the smallest integer above each lower bound, so
/// the answer is deterministic and usually integral.
pub(crate) fn find_point(n: usize, ge: &[Row], eq: &[Row]) -> Option<Vec<BigRational>> {
    let mut ge: Vec<Row> = ge.iter().cloned().map(Row::normalize).collect();
    let mut eqs: Vec<Row> = eq.iter().cloned().map(Row::normalize).collect();
    let mut solved: Vec<(usize, Row)> = Vec::new();
    while let Some(e) = eqs.pop() {
        let Some(k) = e.a.iter().position(|&x| x != 0) else {
            if e.b != 0 {
                return None;
            }
            continue;
        };
        for r in ge.iter_mut().chain(eqs.iter_mut()) {
            *r = substitute(r, &e, k);
        }
        solved.push((k, e));
    }
    let mut stages: Vec<Vec<Row>> = vec![Vec::new(); n];
    let mut cur = tidy(ge)?;
    for k in (0..n).rev() {
        stages[k] = cur.clone();
        if k == 0 {
            let (lo, hi) = bounds(&cur, 0, &[]);
            if let (Some(l), Some(h)) = (&lo, &hi) {
                if l > h {
                    return None;
                }
            }
            break;
        }
        let (mut pos, mut neg, mut next) = (Vec::new(), Vec::new(), Vec::new());
        for r in cur {
            match r.a[k].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => next.push(r),
            }
        }
        for p in &pos {
            for q in &neg {
                next.push(combine(p, q, k));
            }
        }
        cur = tidy(next)?;
    }
    let mut w = vec![BigRational::zero(); n];
    for k in 0..n {
        let (lo, hi) = bounds(&stages[k], k, &w);
        w[k] = match (lo, hi) {
            (Some(l), h) => {
                let c = l.ceil();
                match h {
                    Some(h) if c > h => l,
                    _ => c,
                }
            }
            (None, Some(h)) => {
                if h >= BigRational::zero() {
                    BigRational::zero()
                } else {
                    h.floor()
                }
            }
            (None, None) => BigRational::zero(),
        };
    }
    for (k, e) in solved.iter().rev() {
        let mut rest = BigRational::from_integer(e.b.into());
        for (j, &c) in e.a.iter().enumerate() {
            if j != *k && c != 0 {
                rest -= &w[j] * ratio(c, 1);
            }
        }
        w[*k] = rest / ratio(e.a[*k], 1);
    }
    Some(w)
}

pub(crate) fn feasible(n: usize, ge: &[Row], eq: &[Row]) -> bool {
    find_point(n, ge, eq).is_some()
}

/// Scales a rational point by the least common denominator.
pub(crate) fn to_integer_point(w: &[BigRational]) -> Vec<i64> {
    let l = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    w.iter()
        .map(|x| {
            let v = (x * BigRational::from_integer(l.clone())).to_integer();
            i64::try_from(v).expect("weight fits in i64")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(n: usize, ge: &[Row], eq: &[Row], w: &[BigRational]) -> bool {
        assert_eq!(w.len(), n);
        let dot = |r: &Row| -> BigRational {
            r.a.iter()
                .zip(w)
                .map(|(&a, x)| x * ratio(a, 1))
                .fold(BigRational::zero(), |s, t| s + t)
        };
        ge.iter().all(|r| dot(r) >= ratio(r.b, 1)) && eq.iter().all(|r| dot(r) == ratio(r.b, 1))
    }

    #[test]
    fn simple_systems() {
        let ge = [Row::new(&[1, -1], 1), Row::new(&[1, 0], 1), Row::new(&[0, 1], 1)];
        let w = find_point(2, &ge, &[]).unwrap();
        assert!(check(2, &ge, &[], &w));
        let bad = [Row::new(&[1, -1], 1), Row::new(&[-1, 1], 1)];
        assert!(find_point(2, &bad, &[]).is_none());
        let eq = [Row::new(&[1, -1, 0], 0)];
        let ge3 = [
            Row::new(&[1, 0, -1], 1),
            Row::new(&[1, 0, 0], 1),
            Row::new(&[0, 1, 0], 1),
            Row::new(&[0, 0, 1], 1),
        ];
        let w = find_point(3, &ge3, &eq).unwrap();
        assert!(check(3, &ge3, &eq, &w));
        assert_eq!(w[0], w[1]);
    }

    #[test]
    fn fractional_solutions_scale_to_integers() {
        // 2x = 1 + y forces a half-integer somewhere when y = 2
        let eq = [Row::new(&[2, -1], 1)];
        let ge = [Row::new(&[0, 1], 2), Row::new(&[0, -1], -2)];
        let w = find_point(2, &ge, &eq).unwrap();
        assert!(check(2, &ge, &eq, &w));
        assert_eq!(to_integer_point(&w), vec![3, 4]);
    }
}
