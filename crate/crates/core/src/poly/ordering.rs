//! Term orderings given by integer weight matrices.
//!
//! `s < t` iff the first nonzero entry of `M·(t - s)` is positive. Presets are
//! encoded as their standard matrices; degrevlex uses a row of ones followed by
//! the negated unit rows `-e_n, -e_{n-1}, …, -e_2`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::Term;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
    Weight,
    Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TermOrdering {
    kind: OrderKind,
    rows: Vec<Vec<i64>>,
    nvars: usize,
}

/// Canonical representative of the order a matrix defines: equivalent
/// matrices map to the same key.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderKey(Vec<Vec<BigInt>>);

fn degrevlex_rows(n: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![1; n]];
    for j in (1..n).rev() {
        let mut r = vec![0; n];
        r[j] = -1;
        rows.push(r);
    }
    rows
}

fn unit_rows(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect()
}

/// Rows reduced top-down against earlier rows, dependent rows dropped, then
/// scaled to primitive integer vectors with positive factors.
fn reduce_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    let mut kept: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut out = Vec::new();
    for row in rows {
        let mut v: Vec<BigRational> = row
            .iter()
            .map(|&a| BigRational::from_integer(a.into()))
            .collect();
        for (piv, r) in &kept {
            if !v[*piv].is_zero() {
                let c = &v[*piv] / &r[*piv];
                for (a, b) in v.iter_mut().zip(r) {
                    *a -= &c * b;
                }
            }
        }
        let Some(piv) = v.iter().position(|a| !a.is_zero()) else {
            continue;
        };
        let lcm = v
            .iter()
            .fold(BigInt::from(1), |acc, a| acc.lcm(a.denom()));
        let ints: Vec<BigInt> = v.iter().map(|a| (a * &lcm).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, a| acc.gcd(a));
        let ints: Vec<BigInt> = ints.into_iter().map(|a| a / &g).collect();
        out.push(ints);
        kept.push((piv, v));
    }
    out
}

impl TermOrdering {
    pub fn lex(n: usize) -> Self {
        TermOrdering {
            kind: OrderKind::Lex,
            rows: unit_rows(n),
            nvars: n,
        }
    }

    pub fn deglex(n: usize) -> Self {
        let mut rows = vec![vec![1; n]];
        rows.extend(unit_rows(n).into_iter().take(n.saturating_sub(1)));
        TermOrdering {
            kind: OrderKind::DegLex,
            rows,
            nvars: n,
        }
    }

    pub fn degrevlex(n: usize) -> Self {
        TermOrdering {
            kind: OrderKind::DegRevLex,
            rows: degrevlex_rows(n),
            nvars: n,
        }
    }

    /// Lex with variables ranked by `precedence` (most significant first).
    pub fn lex_with_precedence(precedence: &[usize]) -> Result<Self> {
        let n = precedence.len();
        let rows = precedence
            .iter()
            .map(|&i| {
                let mut r = vec![0; n];
                if i < n {
                    r[i] = 1;
                }
                r
            })
            .collect();
        TermOrdering::from_matrix(rows)
    }

    /// Weight vector refined by degrevlex.
    pub fn weighted(weights: &[i64]) -> Result<Self> {
        let n = weights.len();
        let mut rows = vec![weights.to_vec()];
        rows.extend(degrevlex_rows(n));
        let mut o = TermOrdering::from_matrix(rows)?;
        o.kind = OrderKind::Weight;
        Ok(o)
    }

    /// Several leading weight rows, completed by degrevlex.
    pub fn weighted_rows(leading: Vec<Vec<i64>>) -> Result<Self> {
        let n = leading
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidOrdering("no weight rows".into()))?;
        let mut rows = leading;
        rows.extend(degrevlex_rows(n));
        TermOrdering::from_matrix(rows)
    }

    /// Validates rank and positivity of the first nonzero entry per column.
    pub fn from_matrix(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidOrdering("empty matrix".into()))?;
        if n == 0 {
            return Err(Error::InvalidOrdering("zero columns".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidOrdering("ragged matrix".into()));
        }
        for j in 0..n {
            match rows.iter().map(|r| r[j]).find(|&a| a != 0) {
                Some(a) if a > 0 => {}
                _ => {
                    return Err(Error::InvalidOrdering(format!(
                        "column {j} must have a positive first nonzero entry"
                    )))
                }
            }
        }
        if reduce_rows(&rows).len() != n {
            return Err(Error::InvalidOrdering(format!("matrix rank is below {n}")));
        }
        Ok(TermOrdering {
            kind: OrderKind::Matrix,
            rows,
            nvars: n,
        })
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn key(&self) -> OrderKey {
        OrderKey(reduce_rows(&self.rows))
    }

    /// Unchecked comparison; both terms must have `nvars` entries.
    pub fn cmp(&self, s: &Term, t: &Term) -> Ordering {
        if s == t {
            return Ordering::Equal;
        }
        let (a, b) = (s.exponents(), t.exponents());
        for row in &self.rows {
            let mut acc: i128 = 0;
            for j in 0..self.nvars {
                acc += row[j] as i128 * (a[j] as i128 - b[j] as i128);
            }
            match acc.cmp(&0) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }

    pub fn compare_terms(&self, s: &Term, t: &Term) -> Result<Ordering> {
        for u in [s, t] {
            if u.nvars() != self.nvars {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars,
                    got: u.nvars(),
                });
            }
        }
        Ok(self.cmp(s, t))
    }

    /// The larger of two terms.
    pub fn max<'a>(&self, s: &'a Term, t: &'a Term) -> &'a Term {
        if self.cmp(s, t) == Ordering::Less {
            t
        } else {
            s
        }
    }

    /// Parses `lex`, `deglex`, `degrevlex`, `weight:w1,…,wn` or
    /// `matrix:r11,…,r1n;r21,…` for a ring with `n` variables.
    pub fn parse(spec: &str, n: usize) -> Result<Self> {
        let spec = spec.trim();
        let ints = |s: &str| -> Result<Vec<i64>> {
            s.split(',')
                .map(|a| {
                    a.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::InvalidOrdering(format!("bad integer `{a}`")))
                })
                .collect()
        };
        let o = match spec {
            "lex" => TermOrdering::lex(n),
            "deglex" => TermOrdering::deglex(n),
            "degrevlex" => TermOrdering::degrevlex(n),
            _ => {
                if let Some(w) = spec.strip_prefix("weight:") {
                    TermOrdering::weighted(&ints(w)?)?
                } else if let Some(m) = spec.strip_prefix("matrix:") {
                    let rows = m.split(';').map(ints).collect::<Result<Vec<_>>>()?;
                    TermOrdering::from_matrix(rows)?
                } else {
                    return Err(Error::InvalidOrdering(format!("unknown ordering `{spec}`")));
                }
            }
        };
        if o.nvars != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: o.nvars,
            });
        }
        Ok(o)
    }
}

impl fmt::Display for TermOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |r: &Vec<i64>| r.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        match self.kind {
            OrderKind::Lex => write!(f, "lex"),
            OrderKind::DegLex => write!(f, "deglex"),
            OrderKind::DegRevLex => write!(f, "degrevlex"),
            OrderKind::Weight => write!(f, "weight:{}", join(&self.rows[0])),
            OrderKind::Matrix => {
                let rows: Vec<String> = self.rows.iter().map(join).collect();
                write!(f, "matrix:{}", rows.join(";"))
            }
        }
    }
}

impl FromStr for OrderKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "deglex" => Ok(OrderKind::DegLex),
            "degrevlex" => Ok(OrderKind::DegRevLex),
            "weight" => Ok(OrderKind::Weight),
            "matrix" => Ok(OrderKind::Matrix),
            _ => Err(Error::InvalidOrdering(s.into())),
        }
    }
}
