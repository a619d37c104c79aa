use super::sparse::{Sparse, Weights};
use crate::poly::{Polynomial, Term, TermOrdering};

struct Pair {
    i: usize,
    j: usize,
    lcm: Term,
    degree: u32,
    key: Vec<i64>,
}

struct State<'a> {
    w: &'a Weights,
    polys: Vec<Sparse>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    criteria: bool,
}

impl State<'_> {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.polys[i].lead_term().lcm(self.polys[j].lead_term());
        Pair {
            i,
            j,
            degree: lcm.degree(),
            key: self.w.key(&lcm),
            lcm,
        }
    }

    fn basis(&self) -> Vec<&Sparse> {
        self.polys
            .iter()
            .zip(&self.active)
            .filter_map(|(p, &a)| a.then_some(p))
            .collect()
    }

    /// Adds a monic polynomial whose leading term is irreducible by the
    /// active basis, maintaining the pair set.
    fn insert(&mut self, h: Sparse) {
        let hi = self.polys.len();
        let ht = h.lead_term().clone();
        self.polys.push(h);
        self.active.push(true);
        if !self.criteria {
            for g in 0..hi {
                let p = self.pair(g, hi);
                self.pairs.push(p);
            }
            return;
        }
        // Gebauer–Möller: chain criterion among the new pairs, then the
        // coprime criterion, then pruning of old pairs made redundant by h.
        let cands: Vec<Pair> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| self.pair(g, hi))
            .collect();
        let mut kept: Vec<&Pair> = Vec::new();
        for (k, p) in cands.iter().enumerate() {
            let coprime = ht.is_coprime(self.polys[p.i].lead_term());
            let dominated = cands[k + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        let fresh: Vec<(usize, usize)> = kept
            .iter()
            .filter(|p| !ht.is_coprime(self.polys[p.i].lead_term()))
            .map(|p| (p.i, p.j))
            .collect();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(ht.divides(&p.lcm)
                && polys[p.i].lead_term().lcm(&ht) != p.lcm
                && polys[p.j].lead_term().lcm(&ht) != p.lcm)
        });
        for (i, j) in fresh {
            let p = self.pair(i, j);
            self.pairs.push(p);
        }
        for g in 0..hi {
            if self.active[g] && ht.divides(self.polys[g].lead_term()) {
                self.active[g] = false;
            }
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.degree.cmp(&q.degree).then_with(|| p.key.cmp(&q.key))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    /// Reduces, normalizes and inserts; `true` if the unit ideal was reached.
    fn process(&mut self, f: Sparse) -> bool {
        let mut h = f.reduce(&self.basis(), false);
        if h.is_zero() {
            return false;
        }
        h.make_monic();
        if h.lead_term().is_one() {
            return true;
        }
        self.insert(h);
        false
    }
}

/// The reduced monic σ-Gröbner basis of the generators, sorted by
/// increasing leading term. `criteria` toggles the pair-pruning criteria.
pub(crate) fn buchberger(gens: &[Polynomial], ord: &TermOrdering, criteria: bool) -> Vec<Sparse> {
    let w = Weights::new(ord);
    let mut st = State {
        w: &w,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        criteria,
    };
    let unit = |g: &Polynomial| vec![Sparse::from_poly(&Polynomial::one(g.ring()), &w)];
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if st.process(Sparse::from_poly(g, &w)) {
            return unit(g);
        }
    }
    while let Some(p) = st.pop_pair() {
        let s = Sparse::spoly(&st.polys[p.i], &st.polys[p.j], &p.lcm, &w);
        if st.process(s) {
            return unit(&gens[0]);
        }
    }
    // minimal basis, then tail interreduction
    let mut minimal: Vec<usize> = (0..st.polys.len()).filter(|&i| st.active[i]).collect();
    if !criteria {
        let leads: Vec<Term> = minimal.iter().map(|&i| st.polys[i].lead_term().clone()).collect();
        minimal = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| {
                !leads
                    .iter()
                    .enumerate()
                    .any(|(l, t)| t.divides(&leads[k]) && (t != &leads[k] || l < k))
            })
            .map(|(_, &i)| i)
            .collect();
    }
    let mut out: Vec<Sparse> = minimal
        .iter()
        .map(|&i| {
            let others: Vec<&Sparse> = minimal
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| &st.polys[j])
                .collect();
            st.polys[i].clone().reduce(&others, true)
        })
        .collect();
    out.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    out
}
