//! Exact feasibility solver: Phase-I simplex with Bland's rule over
//! arbitrary-precision rationals. Every caller works with homogeneous cone
//! data, so only feasibility questions (with witnesses) are needed.

use crate::vector::int_to_rat;
use crate::{Int, Rat};
use num_traits::{One, Signed, Zero};

/// Find x with A x = b where the first `nonneg` variables are constrained
/// to be >= 0 and the remaining ones are free. Returns a witness on
/// success, None when the system is infeasible.
pub fn solve_eq_nonneg(a: &[Vec<Rat>], b: &[Rat], nonneg: usize) -> Option<Vec<Rat>> {
    let m = a.len();
    assert_eq!(b.len(), m);
    let orig_n = a.first().map_or(nonneg, Vec::len);
    let free = orig_n - nonneg;
    // Free variables split as u - v so everything is nonnegative.
    let n = nonneg + 2 * free;

    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    for (row, bi) in a.iter().zip(b) {
        assert_eq!(row.len(), orig_n);
        let mut r: Vec<Rat> = Vec::with_capacity(n);
        r.extend(row[..nonneg].iter().cloned());
        for v in &row[nonneg..] {
            r.push(v.clone());
            r.push(-v.clone());
        }
        if bi.is_negative() {
            for v in r.iter_mut() {
                *v = -&*v;
            }
            tab.push(r);
            rhs.push(-bi.clone());
        } else {
            tab.push(r);
            rhs.push(bi.clone());
        }
    }

    // Artificial basis; w-row holds the negated reduced costs of the
    // artificial-sum objective.
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut art: Vec<Vec<Rat>> = (0..m)
        .map(|i| {
            let mut r = vec![Rat::zero(); m];
            r[i] = Rat::one();
            r
        })
        .collect();
    let mut w_row = vec![Rat::zero(); n + m];
    for j in 0..n {
        for row in tab.iter() {
            w_row[j] += &row[j];
        }
    }
    let mut w_val = Rat::zero();
    for v in &rhs {
        w_val += v;
    }

    let col_at = |tab: &Vec<Vec<Rat>>, art: &Vec<Vec<Rat>>, i: usize, j: usize| -> Rat {
        if j < n {
            tab[i][j].clone()
        } else {
            art[i][j - n].clone()
        }
    };

    loop {
        // Bland: smallest column with positive w-row entry.
        let Some(enter) = (0..n + m).find(|&j| w_row[j].is_positive()) else {
            break;
        };
        // Ratio test; Bland tie-break on the smallest basis variable.
        let mut best: Option<(Rat, usize)> = None;
        for i in 0..m {
            let coef = col_at(&tab, &art, i, enter);
            if coef.is_positive() {
                let ratio = &rhs[i] / &coef;
                match &best {
                    None => best = Some((ratio, i)),
                    Some((r, bi)) => {
                        if ratio < *r || (ratio == *r && basis[i] < basis[*bi]) {
                            best = Some((ratio, i));
                        }
                    }
                }
            }
        }
        let Some((_, leave)) = best else {
            // Unbounded Phase-I objective cannot happen (w >= 0), so a
            // missing pivot means the column is nonpositive; w-row said
            // otherwise only through arithmetic error.
            unreachable!("phase-1 objective is bounded below");
        };

        // Normalize pivot row.
        let pc = col_at(&tab, &art, leave, enter);
        for v in tab[leave].iter_mut() {
            *v = &*v / &pc;
        }
        for v in art[leave].iter_mut() {
            *v = &*v / &pc;
        }
        rhs[leave] = &rhs[leave] / &pc;
        // Eliminate the entering column elsewhere.
        for i in 0..m {
            if i == leave {
                continue;
            }
            let f = col_at(&tab, &art, i, enter);
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                let sub = &f * &tab[leave][j];
                tab[i][j] = &tab[i][j] - &sub;
            }
            for j in 0..m {
                let sub = &f * &art[leave][j];
                art[i][j] = &art[i][j] - &sub;
            }
            let sub = &f * &rhs[leave];
            rhs[i] = &rhs[i] - &sub;
        }
        let f = w_row[enter].clone();
        for j in 0..n {
            let sub = &f * &tab[leave][j];
            w_row[j] = &w_row[j] - &sub;
        }
        for j in 0..m {
            let sub = &f * &art[leave][j];
            w_row[n + j] = &w_row[n + j] - &sub;
        }
        let sub = &f * &rhs[leave];
        w_val = &w_val - &sub;
        basis[leave] = enter;
    }

    if !w_val.is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = rhs[i].clone();
        }
    }
    let mut out = Vec::with_capacity(orig_n);
    out.extend(x[..nonneg].iter().cloned());
    for k in 0..free {
        out.push(&x[nonneg + 2 * k] - &x[nonneg + 2 * k + 1]);
    }
    Some(out)
}

/// Is `target` a nonnegative combination of `gens` plus a linear
/// combination of `lin`? Witness coefficients are returned (gens part
/// first).
pub fn in_cone_hull(target: &[Int], gens: &[Vec<Int>], lin: &[Vec<Int>]) -> Option<Vec<Rat>> {
    let dim = target.len();
    let cols = gens.len() + lin.len();
    if cols == 0 {
        return if target.iter().all(Zero::is_zero) { Some(Vec::new()) } else { None };
    }
    let mut a = vec![vec![Rat::zero(); cols]; dim];
    for (j, g) in gens.iter().chain(lin.iter()).enumerate() {
        assert_eq!(g.len(), dim);
        for i in 0..dim {
            a[i][j] = Rat::from(g[i].clone());
        }
    }
    let b = int_to_rat(target);
    solve_eq_nonneg(&a, &b, gens.len())
}

/// Does the cone {x : ineqs.x >= 0, eqns.x = 0} lie inside
/// {x : target.x >= 0}? Farkas: yes iff target is a nonnegative
/// combination of the inequality normals plus the span of the equations.
pub fn halfspace_implied(ineqs: &[Vec<Int>], eqns: &[Vec<Int>], target: &[Int]) -> bool {
    in_cone_hull(target, ineqs, eqns).is_some()
}

/// Point x with ineqs.x >= 1 (componentwise) and eqns.x = 0; None when no
/// point satisfies every inequality strictly.
pub fn strict_point(ineqs: &[Vec<Int>], eqns: &[Vec<Int>], dim: usize) -> Option<Vec<Rat>> {
    let m = ineqs.len() + eqns.len();
    if m == 0 {
        return Some(vec![Rat::zero(); dim]);
    }
    let surplus = ineqs.len();
    // Variables: surplus (nonneg) then x (free).
    let mut a = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for (i, row) in ineqs.iter().enumerate() {
        assert_eq!(row.len(), dim);
        let mut r = vec![Rat::zero(); surplus + dim];
        r[i] = -Rat::one();
        for (j, v) in row.iter().enumerate() {
            r[surplus + j] = Rat::from(v.clone());
        }
        a.push(r);
        b.push(Rat::one());
    }
    for row in eqns {
        assert_eq!(row.len(), dim);
        let mut r = vec![Rat::zero(); surplus + dim];
        for (j, v) in row.iter().enumerate() {
            r[surplus + j] = Rat::from(v.clone());
        }
        a.push(r);
        b.push(Rat::zero());
    }
    solve_eq_nonneg(&a, &b, surplus).map(|sol| sol[surplus..].to_vec())
}

/// Membership of a rational point in a cone given by generators: point in
/// cone(rays) + span(lineality)?
pub fn point_in_cone_vrep(point: &[Rat], rays: &[Vec<Int>], lineality: &[Vec<Int>]) -> bool {
    let dim = point.len();
    let cols = rays.len() + lineality.len();
    if cols == 0 {
        return point.iter().all(Zero::is_zero);
    }
    let mut a = vec![vec![Rat::zero(); cols]; dim];
    for (j, g) in rays.iter().chain(lineality.iter()).enumerate() {
        for i in 0..dim {
            a[i][j] = Rat::from(g[i].clone());
        }
    }
    solve_eq_nonneg(&a, point, rays.len()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn cone_membership_witness() {
        let gens = vec![iv(&[1, 0]), iv(&[1, 1])];
        assert!(in_cone_hull(&iv(&[3, 1]), &gens, &[]).is_some());
        assert!(in_cone_hull(&iv(&[2, 1]), &gens, &[]).is_some());
        assert!(in_cone_hull(&iv(&[0, 1]), &gens, &[]).is_none());
        assert!(in_cone_hull(&iv(&[-1, 0]), &gens, &[]).is_none());
        // Lineality opens the negative direction back up.
        assert!(in_cone_hull(&iv(&[-1, 0]), &[], &[iv(&[1, 0])]).is_some());
    }

    #[test]
    fn implication_by_farkas() {
        // x >= 0, y >= 0 implies x + y >= 0 but not x - y >= 0.
        let ineqs = vec![iv(&[1, 0]), iv(&[0, 1])];
        assert!(halfspace_implied(&ineqs, &[], &iv(&[1, 1])));
        assert!(!halfspace_implied(&ineqs, &[], &iv(&[1, -1])));
    }

    #[test]
    fn strict_interior_point() {
        let ineqs = vec![iv(&[1, 1]), iv(&[-1, 1])];
        let p = strict_point(&ineqs, &[], 2).unwrap();
        assert!(crate::dot_rat(&int_to_rat(&ineqs[0]), &p) >= Rat::one());
        assert!(crate::dot_rat(&int_to_rat(&ineqs[1]), &p) >= Rat::one());
        // A ray has no strict point for both bounding halfplanes.
        let degenerate = vec![iv(&[1, 0]), iv(&[-1, 0])];
        assert!(strict_point(&degenerate, &[], 2).is_none());
    }

    #[test]
    fn vrep_membership() {
        let rays = vec![iv(&[1, 0, 0]), iv(&[0, 1, 0])];
        let lin = vec![iv(&[0, 0, 1])];
        let p = |v: &[i64]| v.iter().map(|&x| Rat::from(int(x))).collect::<Vec<_>>();
        assert!(point_in_cone_vrep(&p(&[2, 3, -5]), &rays, &lin));
        assert!(!point_in_cone_vrep(&p(&[-1, 0, 0]), &rays, &lin));
    }
}
