use crate::monomial::Monomial;
use crate::ordering::WeightedOrdering;
use crate::polynomial::Polynomial;
use crate::Rat;
use num_traits::One;
use std::cmp::Ordering as Cmp;
use std::collections::VecDeque;

/// Comparator abstraction so the engine can also run elimination orders
/// (used by the iterated-quotient oracle) without widening the public
/// ordering type.
pub(crate) trait TermCmp {
    fn cmp_mon(&self, a: &Monomial, b: &Monomial) -> Cmp;
}

impl TermCmp for WeightedOrdering {
    fn cmp_mon(&self, a: &Monomial, b: &Monomial) -> Cmp {
        self.compare(a, b)
    }
}

/// Block order: the designated variable dominates, ties fall through to the
/// inner order. A leading term free of the variable forces the whole
/// polynomial to be free of it, which is exactly the elimination property.
pub(crate) struct ElimFirst<'a> {
    pub elim: usize,
    pub inner: &'a WeightedOrdering,
}

impl TermCmp for ElimFirst<'_> {
    fn cmp_mon(&self, a: &Monomial, b: &Monomial) -> Cmp {
        match a.exp(self.elim).cmp(&b.exp(self.elim)) {
            Cmp::Equal => self.inner.cmp_mon(a, b),
            other => other,
        }
    }
}

/// Term list sorted strictly descending under the active order; the front
/// entry is the leading term.
#[derive(Clone)]
pub(crate) struct OrdPoly {
    terms: VecDeque<(Monomial, Rat)>,
}

impl OrdPoly {
    pub(crate) fn from_poly(p: &Polynomial, cmp: &impl TermCmp) -> Self {
        let mut terms: Vec<(Monomial, Rat)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| cmp.cmp_mon(b, a));
        OrdPoly { terms: terms.into() }
    }

    pub(crate) fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().cloned())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn lead(&self) -> Option<&(Monomial, Rat)> {
        self.terms.front()
    }

    fn pop_lead(&mut self) -> (Monomial, Rat) {
        self.terms.pop_front().expect("pop_lead on zero polynomial")
    }

    pub(crate) fn make_monic(&mut self) {
        if let Some((_, c0)) = self.terms.front() {
            if c0.is_one() {
                return;
            }
            let inv = Rat::one() / c0.clone();
            for (_, c) in self.terms.iter_mut() {
                *c *= &inv;
            }
        }
    }

    /// self - c * m * g, merging two descending term lists.
    fn sub_mul(&self, c: &Rat, m: &Monomial, g: &OrdPoly, cmp: &impl TermCmp) -> OrdPoly {
        let mut out = VecDeque::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), -(gc * c)));
        let mut na = a.next();
        let mut nb = b.next();
        loop {
            match (na, nb.as_ref()) {
                (None, None) => break,
                (Some(ta), None) => {
                    out.push_back(ta.clone());
                    na = a.next();
                }
                (None, Some(_)) => {
                    out.push_back(nb.take().unwrap());
                    nb = b.next();
                }
                (Some(ta), Some(tb)) => match cmp.cmp_mon(&ta.0, &tb.0) {
                    Cmp::Greater => {
                        out.push_back(ta.clone());
                        na = a.next();
                    }
                    Cmp::Less => {
                        out.push_back(nb.take().unwrap());
                        nb = b.next();
                    }
                    Cmp::Equal => {
                        let coef = &ta.1 + &tb.1;
                        if !num_traits::Zero::is_zero(&coef) {
                            out.push_back((ta.0.clone(), coef));
                        }
                        na = a.next();
                        nb = b.next();
                    }
                },
            }
        }
        OrdPoly { terms: out }
    }

    /// Divide every term by the maximal power of variable `i` common to all
    /// terms; relative order is preserved.
    pub(crate) fn divide_var_max(&mut self, i: usize) {
        let Some(min) = self.terms.iter().map(|(m, _)| m.exp(i)).min() else {
            return;
        };
        if min == 0 {
            return;
        }
        let nvars = self.terms[0].0.nvars();
        let exps: Vec<u32> = (0..nvars).map(|v| if v == i { min } else { 0 }).collect();
        let div = Monomial::from_exps(exps);
        for (m, _) in self.terms.iter_mut() {
            *m = m.try_div(&div).unwrap();
        }
    }
}

/// Fully reduced normal form: no term of the result is divisible by any
/// leading monomial of the basis.
pub(crate) fn normal_form_ord(
    f: &OrdPoly,
    basis: &[OrdPoly],
    cmp: &impl TermCmp,
) -> OrdPoly {
    let mut p = f.clone();
    let mut rem: VecDeque<(Monomial, Rat)> = VecDeque::new();
    'outer: while let Some((lm, lc)) = p.lead().map(|(m, c)| (m.clone(), c.clone())) {
        for g in basis {
            let Some((gm, gc)) = g.lead() else { continue };
            if let Some(q) = lm.try_div(gm) {
                let factor = &lc / gc;
                p = p.sub_mul(&factor, &q, g, cmp);
                continue 'outer;
            }
        }
        rem.push_back(p.pop_lead());
    }
    OrdPoly { terms: rem }
}

pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: &WeightedOrdering) -> Polynomial {
    let b: Vec<OrdPoly> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| OrdPoly::from_poly(g, ord))
        .collect();
    normal_form_ord(&OrdPoly::from_poly(f, ord), &b, ord).to_poly(f.nvars())
}

pub(crate) fn spoly_ord(f: &OrdPoly, g: &OrdPoly, cmp: &impl TermCmp) -> OrdPoly {
    let (fm, fc) = f.lead().expect("spoly of zero polynomial");
    let (gm, gc) = g.lead().expect("spoly of zero polynomial");
    let l = fm.lcm(gm);
    let mf = l.try_div(fm).unwrap();
    // (l/fm)*f/fc - (l/gm)*g/gc, computed as one merge:
    let scaled = OrdPoly {
        terms: f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&mf), c / fc))
            .collect(),
    };
    let mg = l.try_div(gm).unwrap();
    scaled.sub_mul(&(Rat::one() / gc.clone()), &mg, g, cmp)
}

pub fn spoly(f: &Polynomial, g: &Polynomial, ord: &WeightedOrdering) -> Polynomial {
    spoly_ord(
        &OrdPoly::from_poly(f, ord),
        &OrdPoly::from_poly(g, ord),
        ord,
    )
    .to_poly(f.nvars())
}

/// Buchberger with a first-come pair queue. The product criterion and the
/// chain criterion prune trivial pairs. `post` runs on every nonzero
/// reduced s-polynomial before insertion; the saturation algorithm uses it
/// to strip variable factors.
pub(crate) fn buchberger_engine(
    gens: &[OrdPoly],
    cmp: &impl TermCmp,
    post: &mut dyn FnMut(&mut OrdPoly),
) -> Vec<OrdPoly> {
    let mut basis: Vec<OrdPoly> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            let mut g = g.clone();
            g.make_monic();
            basis.push(g);
        }
    }
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    let mut done: std::collections::HashSet<(usize, usize)> = Default::default();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            queue.push_back((i, j));
        }
    }
    while let Some((i, j)) = queue.pop_front() {
        let (ref lmi, _) = *basis[i].lead().unwrap();
        let (ref lmj, _) = *basis[j].lead().unwrap();
        if lmi.gcd_is_one(lmj) {
            done.insert((i, j));
            continue;
        }
        let l = lmi.lcm(lmj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().unwrap().0.divides(&l)
                && done.contains(&key(i, k))
                && done.contains(&key(k, j))
        });
        if chain {
            done.insert((i, j));
            continue;
        }
        let s = spoly_ord(&basis[i], &basis[j], cmp);
        let mut r = normal_form_ord(&s, &basis, cmp);
        done.insert((i, j));
        if r.is_zero() {
            continue;
        }
        post(&mut r);
        r.make_monic();
        let k = basis.len();
        basis.push(r);
        for i2 in 0..k {
            queue.push_back((i2, k));
        }
    }
    interreduce(basis, cmp)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalize and tail-reduce; the outcome is the reduced (hence unique)
/// basis for the ideal and ordering, sorted with the largest lead first.
pub(crate) fn interreduce(mut basis: Vec<OrdPoly>, cmp: &impl TermCmp) -> Vec<OrdPoly> {
    basis.retain(|g| !g.is_zero());
    for g in basis.iter_mut() {
        g.make_monic();
    }
    // Ascending by lead so a divisor always precedes its multiples.
    basis.sort_by(|a, b| cmp.cmp_mon(&a.lead().unwrap().0, &b.lead().unwrap().0));
    let mut kept: Vec<OrdPoly> = Vec::new();
    'next: for g in basis {
        let lm = &g.lead().unwrap().0;
        for h in &kept {
            if h.lead().unwrap().0.divides(lm) {
                continue 'next;
            }
        }
        kept.push(g);
    }
    // Tail reduction to the fixpoint.
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<OrdPoly> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h.clone())
                .collect();
            let mut r = normal_form_ord(&kept[i], &others, cmp);
            r.make_monic();
            if r.terms != kept[i].terms {
                changed = true;
                kept[i] = r;
            }
        }
        if !changed {
            break;
        }
    }
    kept.retain(|g| !g.is_zero());
    kept.sort_by(|a, b| cmp.cmp_mon(&b.lead().unwrap().0, &a.lead().unwrap().0));
    kept
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], ord: &WeightedOrdering) -> Vec<Polynomial> {
    let nvars = ord.nvars();
    let g: Vec<OrdPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| OrdPoly::from_poly(p, ord))
        .collect();
    buchberger_engine(&g, ord, &mut |_| {})
        .into_iter()
        .map(|p| p.to_poly(nvars))
        .collect()
}

/// Membership via reduction against a precomputed basis.
pub fn reduces_to_zero(f: &Polynomial, gb: &[Polynomial], ord: &WeightedOrdering) -> bool {
    normal_form(f, gb, ord).is_zero()
}
