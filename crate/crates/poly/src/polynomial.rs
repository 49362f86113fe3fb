use crate::faceset::FaceIndexSet;
use crate::monomial::Monomial;
use crate::ordering::WeightedOrdering;
use crate::{Int, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Polynomial with rational coefficients. Terms are stored keyed by
/// monomial; the map never holds zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rat::one())
    }

    pub fn variable(i: usize, nvars: usize) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.terms.insert(Monomial::var(i, nvars), Rat::one());
        p
    }

    pub fn monomial(m: Monomial, c: Rat) -> Self {
        let nvars = m.nvars();
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn is_single_term(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        assert_eq!(m.nvars(), self.nvars, "term arity mismatch");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        self.mul_term(&Monomial::one(self.nvars), c)
    }

    pub fn leading(&self, ord: &WeightedOrdering) -> Option<(&Monomial, &Rat)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.compare(a, b))
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self, ord: &WeightedOrdering) -> Polynomial {
        match self.leading(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = Rat::one() / c.clone();
                self.scale(&inv)
            }
        }
    }

    /// Substitute zero for every variable outside the face; terms touching
    /// an outside variable vanish.
    pub fn restricted_to(&self, face: &FaceIndexSet) -> Polynomial {
        assert_eq!(face.ambient(), self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.support().is_subset_of(face) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Divide out the highest power of variable i present in every term.
    pub fn divided_by_var_max(&self, i: usize) -> Polynomial {
        if self.terms.is_empty() {
            return self.clone();
        }
        let min = self.terms.keys().map(|m| m.exp(i)).min().unwrap();
        if min == 0 {
            return self.clone();
        }
        let mut div = Monomial::one(self.nvars);
        let exps: Vec<u32> = (0..self.nvars).map(|v| if v == i { min } else { 0 }).collect();
        div = div.mul(&Monomial::from_exps(exps));
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.try_div(&div).unwrap(), c.clone()))
                .collect(),
        }
    }

    /// Divide out the maximal monomial in the given variables that divides
    /// every term.
    pub fn divided_by_face_max(&self, face: &FaceIndexSet) -> Polynomial {
        let mut out = self.clone();
        for i in face.iter() {
            out = out.divided_by_var_max(i);
        }
        out
    }

    /// True when every variable occurring lies in `face`.
    pub fn supported_on(&self, face: &FaceIndexSet) -> bool {
        self.terms.keys().all(|m| m.support().is_subset_of(face))
    }

    pub fn is_weight_homogeneous(&self, weights: &[Int]) -> bool {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return true };
        let d = first.weighted_degree(weights);
        it.all(|m| m.weighted_degree(weights) == d)
    }

    /// Exponent permutation with per-variable scaling: variable i maps to
    /// sign[i] * (variable perm[i]).
    pub fn substituted_signed(&self, perm: &[usize], signs: &[Rat]) -> Polynomial {
        assert_eq!(perm.len(), self.nvars);
        assert_eq!(signs.len(), self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    let mut pow = Rat::one();
                    for _ in 0..e {
                        pow *= &signs[i];
                    }
                    coef *= pow;
                }
            }
            out.add_term(m.permuted(perm), coef);
        }
        out
    }

    /// Embed into a ring with extra trailing variables.
    pub fn extended(&self, extra: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars + extra,
            terms: self.terms.iter().map(|(m, c)| (m.extended(extra), c.clone())).collect(),
        }
    }

    /// Drop trailing variables; every term must avoid them.
    pub fn truncated(&self, nvars: usize) -> Polynomial {
        assert!(nvars <= self.nvars);
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            assert!(
                m.exps()[nvars..].iter().all(|&e| e == 0),
                "cannot truncate a term using the removed variables"
            );
            out.add_term(Monomial::from_exps(m.exps()[..nvars].to_vec()), c.clone());
        }
        out
    }
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}*{:?}", c, m)?;
            first = false;
        }
        Ok(())
    }
}
