//! Working representation for reduction: terms kept in strictly decreasing
//! order together with their weight keys, so comparisons are vector compares
//! and multiplying by a term adds keys.

use std::cmp::Ordering;

use crate::field::FieldElement;
use crate::poly::{Polynomial, Ring, Term, TermOrdering};

#[derive(Debug, Clone)]
pub(crate) struct Weights {
    rows: Vec<Vec<i64>>,
}

impl Weights {
    pub fn new(ord: &TermOrdering) -> Self {
        Weights {
            rows: ord.rows().to_vec(),
        }
    }

    pub fn key(&self, t: &Term) -> Vec<i64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(t.exponents()).map(|(a, &e)| a * e as i64).sum())
            .collect()
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Mono {
    pub key: Vec<i64>,
    pub term: Term,
    pub coeff: FieldElement,
}

/// Invariant: keys strictly decreasing, coefficients nonzero.
#[derive(Debug, Clone, Default)]
pub(crate) struct Sparse(pub Vec<Mono>);

fn add_keys(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_keys(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl Sparse {
    pub fn from_poly(p: &Polynomial, w: &Weights) -> Sparse {
        let mut v: Vec<Mono> = p
            .terms()
            .map(|(t, c)| Mono {
                key: w.key(t),
                term: t.clone(),
                coeff: c.clone(),
            })
            .collect();
        v.sort_by(|a, b| b.key.cmp(&a.key));
        Sparse(v)
    }

    pub fn to_poly(&self, ring: &Ring) -> Polynomial {
        Polynomial::from_terms(ring, self.0.iter().map(|m| (m.term.clone(), m.coeff.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn lead(&self) -> &Mono {
        &self.0[0]
    }

    pub fn lead_term(&self) -> &Term {
        &self.0[0].term
    }

    pub fn make_monic(&mut self) {
        if let Some(m) = self.0.first() {
            if !m.coeff.is_one() {
                let inv = m.coeff.inv().expect("nonzero leading coefficient");
                for m in &mut self.0 {
                    m.coeff = &m.coeff * &inv;
                }
            }
        }
    }

    /// `c · m · self` where `m` has weight key `mkey`.
    pub fn mul_term(&self, c: &FieldElement, m: &Term, mkey: &[i64]) -> Sparse {
        Sparse(
            self.0
                .iter()
                .map(|x| Mono {
                    key: add_keys(&x.key, mkey),
                    term: x.term.mul(m),
                    coeff: c * &x.coeff,
                })
                .collect(),
        )
    }

    /// Merges `head` (descending) with `-c·m·tail` (descending).
    fn merge_sub(head: &[Mono], c: &FieldElement, m: &Term, mkey: &[i64], tail: &[Mono]) -> Vec<Mono> {
        let mut out = Vec::with_capacity(head.len() + tail.len());
        let (mut i, mut j) = (0, 0);
        let next_tail = |j: usize| -> Mono {
            let x = &tail[j];
            Mono {
                key: add_keys(&x.key, mkey),
                term: x.term.mul(m),
                coeff: -&(c * &x.coeff),
            }
        };
        let mut pending: Option<Mono> = None;
        loop {
            if pending.is_none() && j < tail.len() {
                pending = Some(next_tail(j));
                j += 1;
            }
            match (head.get(i), pending.take()) {
                (None, None) => break,
                (Some(a), None) => {
                    out.push(a.clone());
                    i += 1;
                }
                (None, Some(b)) => out.push(b),
                (Some(a), Some(b)) => match a.key.cmp(&b.key) {
                    Ordering::Greater => {
                        out.push(a.clone());
                        i += 1;
                        pending = Some(b);
                    }
                    Ordering::Less => out.push(b),
                    Ordering::Equal => {
                        let s = &a.coeff + &b.coeff;
                        if !s.is_zero() {
                            out.push(Mono {
                                key: b.key,
                                term: b.term,
                                coeff: s,
                            });
                        }
                        i += 1;
                    }
                },
            }
        }
        out
    }

    /// S-polynomial of two monic polynomials.
    pub fn spoly(f: &Sparse, g: &Sparse, lcm: &Term, w: &Weights) -> Sparse {
        let mf = lcm.div(f.lead_term()).expect("lcm");
        let mg = lcm.div(g.lead_term()).expect("lcm");
        let one = f.lead().coeff.field().one();
        let fm = f.mul_term(&one, &mf, &w.key(&mf));
        let gk = w.key(&mg);
        Sparse(Sparse::merge_sub(&fm.0[1..], &one, &mg, &gk, &g.0[1..]))
    }

    /// Reduces by `basis`. With `full` every term is reduced, otherwise only
    /// until the leading term is irreducible.
    pub fn reduce(self, basis: &[&Sparse], full: bool) -> Sparse {
        let mut f = self.0;
        let mut start = 0;
        let mut rem: Vec<Mono> = Vec::new();
        while start < f.len() {
            let lead = &f[start];
            match basis.iter().find(|g| g.lead_term().divides(&lead.term)) {
                Some(g) => {
                    let gl = g.lead();
                    let m = lead.term.div(&gl.term).expect("divisible");
                    let mkey = sub_keys(&lead.key, &gl.key);
                    let c = &lead.coeff * &gl.coeff.inv().expect("nonzero");
                    f = Sparse::merge_sub(&f[start + 1..], &c, &m, &mkey, &g.0[1..]);
                    start = 0;
                }
                None => {
                    if !full {
                        break;
                    }
                    rem.push(f[start].clone());
                    start += 1;
                }
            }
        }
        if full {
            Sparse(rem)
        } else {
            f.drain(..start);
            Sparse(f)
        }
    }
}
