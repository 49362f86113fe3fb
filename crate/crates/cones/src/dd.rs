//! Double description: convert a homogeneous system `A x >= 0, E x = 0`
//! into extreme rays plus a lineality basis, exactly over the integers.
//!
//! The engine starts from the whole space (lineality = identity basis, no
//! rays) and inserts one constraint at a time in a fixed sorted order.  A
//! constraint that is nonzero on the current lineality space is handled by a
//! pivot step; otherwise rays are partitioned by sign and adjacent
//! positive/negative pairs are combined on the new hyperplane.  Adjacency is
//! decided by the rank of the common tight set, which stays correct even
//! when earlier inequalities have become implicit equalities.

use gitfan_math::vector::{dot_int, is_zero_int, normalize_equation, primitive_int};
use gitfan_math::{Int, IntMatrix};
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;

pub(crate) struct DdOutput {
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

struct State {
    ambient: usize,
    rays: Vec<Vec<Int>>,
    lin: Vec<Vec<Int>>,
    /// Constraints already inserted (equations and inequalities alike); the
    /// adjacency rank test runs against this list.
    processed: Vec<Vec<Int>>,
}

impl State {
    fn whole_space(ambient: usize) -> Self {
        let lin = (0..ambient)
            .map(|i| {
                let mut e = vec![Int::zero(); ambient];
                e[i] = Int::from(1);
                e
            })
            .collect();
        State {
            ambient,
            rays: Vec::new(),
            lin,
            processed: Vec::new(),
        }
    }

    /// Pivot on a lineality basis vector with nonzero value under `a`,
    /// clearing every other generator against it.  Returns the pivot vector
    /// rescaled so that its value under `a` is positive.
    fn pivot_lineality(&mut self, a: &[Int], k: usize) -> Vec<Int> {
        let l0 = self.lin.swap_remove(k);
        let v0 = dot_int(a, &l0);
        for l in self.lin.iter_mut() {
            let v = dot_int(a, l);
            if !v.is_zero() {
                let combined: Vec<Int> = l
                    .iter()
                    .zip(&l0)
                    .map(|(x, y)| x * &v0 - &v * y)
                    .collect();
                *l = primitive_int(&combined);
            }
        }
        let scale = v0.abs();
        let sign = if v0.is_negative() { -Int::from(1) } else { Int::from(1) };
        for r in self.rays.iter_mut() {
            let v = dot_int(a, r);
            if !v.is_zero() {
                let combined: Vec<Int> = r
                    .iter()
                    .zip(&l0)
                    .map(|(x, y)| x * &scale - &sign * &v * y)
                    .collect();
                *r = primitive_int(&combined);
            }
        }
        if v0.is_negative() {
            l0.iter().map(|x| -x).collect()
        } else {
            l0
        }
    }

    fn insert_equation(&mut self, e: &[Int]) {
        if is_zero_int(e) {
            return;
        }
        if let Some(k) = self.lin.iter().position(|l| !dot_int(e, l).is_zero()) {
            // The pivot direction leaves the cone entirely; discard it.
            let _ = self.pivot_lineality(e, k);
            self.processed.push(e.to_vec());
            return;
        }
        if self.rays.iter().all(|r| dot_int(e, r).is_zero()) {
            self.processed.push(e.to_vec());
            return;
        }
        // No lineality pivot but some ray violates the equation: treat it as
        // an opposite pair of inequalities.
        self.insert_inequality(e);
        let neg: Vec<Int> = e.iter().map(|x| -x).collect();
        self.insert_inequality(&neg);
    }

    fn insert_inequality(&mut self, a: &[Int]) {
        if is_zero_int(a) {
            return;
        }
        if let Some(k) = self.lin.iter().position(|l| !dot_int(a, l).is_zero()) {
            let r0 = self.pivot_lineality(a, k);
            self.rays.push(r0);
            self.processed.push(a.to_vec());
            return;
        }
        let vals: Vec<Int> = self.rays.iter().map(|r| dot_int(a, r)).collect();
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut keep: Vec<Vec<Int>> = Vec::new();
        for (i, v) in vals.iter().enumerate() {
            if v.is_positive() {
                pos.push(i);
                keep.push(self.rays[i].clone());
            } else if v.is_zero() {
                keep.push(self.rays[i].clone());
            } else {
                neg.push(i);
            }
        }
        let mut fresh: BTreeSet<Vec<Int>> = BTreeSet::new();
        for &p in &pos {
            for &m in &neg {
                if !self.adjacent(&self.rays[p], &self.rays[m]) {
                    continue;
                }
                let (alpha, beta) = (vals[m].abs(), vals[p].clone());
                let combo: Vec<Int> = self.rays[p]
                    .iter()
                    .zip(&self.rays[m])
                    .map(|(x, y)| &alpha * x + &beta * y)
                    .collect();
                fresh.insert(primitive_int(&combo));
            }
        }
        keep.extend(fresh);
        self.rays = keep;
        self.processed.push(a.to_vec());
    }

    /// Rank test: two extreme rays are adjacent exactly when the constraints
    /// tight at both span a space of dimension ambient - lineality - 2.
    fn adjacent(&self, p: &[Int], m: &[Int]) -> bool {
        let needed = self.ambient as isize - self.lin.len() as isize - 2;
        if needed < 0 {
            return false;
        }
        let tight: Vec<Vec<Int>> = self
            .processed
            .iter()
            .filter(|c| dot_int(c, p).is_zero() && dot_int(c, m).is_zero())
            .cloned()
            .collect();
        if (tight.len() as isize) < needed {
            return false;
        }
        IntMatrix::from_int_rows(tight).rank() as isize == needed
    }
}

/// Extreme rays and lineality basis of `{x : a.x >= 0 for all a, e.x = 0
/// for all e}`.  Output is raw: rays are primitive but not yet reduced
/// modulo the lineality space, and neither list is sorted.
pub(crate) fn dual_description(
    ineqs: &[Vec<Int>],
    eqns: &[Vec<Int>],
    ambient: usize,
) -> DdOutput {
    let mut st = State::whole_space(ambient);
    let mut es: Vec<Vec<Int>> = eqns
        .iter()
        .map(|e| normalize_equation(e))
        .filter(|e| !is_zero_int(e))
        .collect();
    es.sort();
    es.dedup();
    for e in &es {
        st.insert_equation(e);
    }
    let mut is: Vec<Vec<Int>> = ineqs
        .iter()
        .map(|a| primitive_int(a))
        .filter(|a| !is_zero_int(a))
        .collect();
    is.sort();
    is.dedup();
    for a in &is {
        st.insert_inequality(a);
    }
    DdOutput {
        rays: st.rays,
        lineality: st.lin,
    }
}
