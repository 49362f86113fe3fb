//! Intersection of all leave-one-out column cones, computed entirely on
//! the inequality side.
//!
//! Each cone spanned by all grading columns but one is converted to
//! halfspace form; the union of those halfspaces describes the
//! intersection.  Implicit equalities are then detected by linear
//! programming, the remaining rows are reduced modulo the equality space,
//! and redundant rows are eliminated one at a time.  The surviving rows are
//! exactly the facet normals, so the intersection is described canonically
//! without ever enumerating its rays — which is what makes large inputs
//! tractable.

use gitfan_cones::{canonical_basis, reduce_mod_rows, Cone};
use gitfan_math::lp::halfspace_implied;
use gitfan_math::vector::{is_zero_int, primitive_int};
use gitfan_math::{Int, IntMatrix};
use gitfan_symmetry::{SignedPermutation, SymmetryGroup};
use rayon::prelude::*;
use std::collections::{BTreeSet, HashMap};

/// Canonical halfspace description of the intersection: `facet_normals`
/// are irredundant and reduced modulo the span of `equations`; both lists
/// are sorted and primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovingConeSummary {
    pub ambient: usize,
    pub facet_normals: Vec<Vec<Int>>,
    pub equations: Vec<Vec<Int>>,
}

/// Compute the summary, optionally sharing halfspace conversions across a
/// column symmetry: the cone missing column j maps to the cone missing
/// column sigma(j) under the induced matrices, so only one conversion per
/// column orbit is needed.  The group, when given, must carry induced
/// matrices and act on exactly the grading's columns.
pub fn moving_cone_summary(q: &IntMatrix, group: Option<&SymmetryGroup>) -> MovingConeSummary {
    let k = q.rows();
    let r = q.cols();
    assert!(r > 0, "the grading has no columns");
    let cols: Vec<Vec<Int>> = (0..r).map(|j| q.col(j)).collect();
    let leave_out = |j: usize| -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
        let rays: Vec<Vec<Int>> = (0..r)
            .filter(|&i| i != j)
            .map(|i| cols[i].clone())
            .collect();
        let c = Cone::from_rays(k, &rays).expect("grading columns have the grading's height");
        (c.inequalities().to_vec(), c.equations().to_vec())
    };

    let mut ineq_set: BTreeSet<Vec<Int>> = BTreeSet::new();
    let mut eqn_set: BTreeSet<Vec<Int>> = BTreeSet::new();
    match group {
        Some(g) if g.len() > 1 => {
            assert_eq!(
                g.arity(),
                r,
                "the group permutes {} variables but the grading has {} columns",
                g.arity(),
                r
            );
            let elems = g.elements();
            let mut seen = vec![false; r];
            let mut reps: Vec<usize> = Vec::new();
            for j in 0..r {
                if seen[j] {
                    continue;
                }
                reps.push(j);
                for e in elems {
                    seen[e.perm()[j]] = true;
                }
            }
            let rep_forms: Vec<(Vec<Vec<Int>>, Vec<Vec<Int>>)> =
                reps.par_iter().map(|&j| leave_out(j)).collect();
            let element_index: HashMap<&SignedPermutation, usize> =
                elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
            for (rows, eqs) in &rep_forms {
                for e in elems {
                    // image of {x : <n,x> >= 0} under A is {x : <A^-T n, x> >= 0};
                    // the inverse element's induced matrix is A^-1, already integral
                    let inv = element_index[&e.inverse()];
                    let m = g.induced_for(inv).transpose();
                    for n in rows {
                        ineq_set.insert(primitive_int(&m.mul_vec(n)));
                    }
                    for n in eqs {
                        eqn_set.insert(primitive_int(&m.mul_vec(n)));
                    }
                }
            }
        }
        _ => {
            let forms: Vec<(Vec<Vec<Int>>, Vec<Vec<Int>>)> =
                (0..r).into_par_iter().map(leave_out).collect();
            for (rows, eqs) in forms {
                ineq_set.extend(rows);
                eqn_set.extend(eqs);
            }
        }
    }

    let ineqs: Vec<Vec<Int>> = ineq_set.into_iter().collect();
    let eqns: Vec<Vec<Int>> = eqn_set.into_iter().collect();

    // a row whose negation is valid on the whole region holds with equality
    let flagged: Vec<bool> = ineqs
        .par_iter()
        .map(|a| {
            let neg: Vec<Int> = a.iter().map(|x| -x).collect();
            halfspace_implied(&ineqs, &eqns, &neg)
        })
        .collect();

    let mut eq_rows = eqns;
    for (a, &f) in ineqs.iter().zip(&flagged) {
        if f {
            eq_rows.push(a.clone());
        }
    }
    let equations = canonical_basis(&eq_rows);

    let mut reduced: BTreeSet<Vec<Int>> = BTreeSet::new();
    for (a, &f) in ineqs.iter().zip(&flagged) {
        if f {
            continue;
        }
        let red = reduce_mod_rows(a, &equations);
        if !is_zero_int(&red) {
            reduced.insert(primitive_int(&red));
        }
    }

    // drop rows implied by the others; what survives is exactly the facet
    // set, independent of the removal order
    let rows: Vec<Vec<Int>> = reduced.into_iter().collect();
    let mut keep = vec![true; rows.len()];
    for i in 0..rows.len() {
        keep[i] = false;
        let others: Vec<Vec<Int>> = rows
            .iter()
            .zip(&keep)
            .filter(|&(_, &kept)| kept)
            .map(|(row, _)| row.clone())
            .collect();
        if !halfspace_implied(&others, &equations, &rows[i]) {
            keep[i] = true;
        }
    }
    let facet_normals: Vec<Vec<Int>> = rows
        .into_iter()
        .zip(keep)
        .filter(|&(_, kept)| kept)
        .map(|(row, _)| row)
        .collect();

    MovingConeSummary {
        ambient: k,
        facet_normals,
        equations,
    }
}

pub fn moving_cone(q: &IntMatrix) -> Cone {
    let s = moving_cone_summary(q, None);
    Cone::from_inequalities(s.ambient, &s.facet_normals, &s.equations)
        .expect("summary rows have the grading's height")
}

#[cfg(test)]
mod tests {
    use super::*;
    use gitfan_math::int;
    use gitfan_symmetry::{group_closure, DEFAULT_ELEMENT_BOUND};

    fn v(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn opposite_column_pairs_pin_the_intersection_to_the_origin() {
        let q = IntMatrix::from_rows(&[vec![1, -1, -1, 1], vec![1, 1, -1, -1]]);
        let s = moving_cone_summary(&q, None);
        assert!(s.facet_normals.is_empty());
        assert_eq!(s.equations.len(), 2);
        let zero = Cone::from_rays(2, &[]).unwrap();
        assert_eq!(moving_cone(&q).canonical_key(), zero.canonical_key());
    }

    #[test]
    fn coordinate_columns_meet_only_at_the_origin() {
        let q = IntMatrix::identity(3);
        let s = moving_cone_summary(&q, None);
        assert!(s.facet_normals.is_empty());
        assert_eq!(s.equations.len(), 3);
    }

    #[test]
    fn three_columns_in_the_plane_leave_the_middle_ray() {
        let q = IntMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 1]]);
        let s = moving_cone_summary(&q, None);
        assert_eq!(s.equations, vec![v(&[1, -1])]);
        assert_eq!(s.facet_normals, vec![v(&[0, 1])]);
        let ray = Cone::from_rays(2, &[v(&[1, 1])]).unwrap();
        assert_eq!(moving_cone(&q).canonical_key(), ray.canonical_key());
    }

    #[test]
    fn orbit_sharing_reproduces_the_plain_computation() {
        let q = IntMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 1]]);
        let swap = SignedPermutation::from_cycles("(1,2)", 3).unwrap();
        let g = group_closure(&[swap], DEFAULT_ELEMENT_BOUND)
            .unwrap()
            .with_induced(&q)
            .unwrap();
        assert_eq!(moving_cone_summary(&q, Some(&g)), moving_cone_summary(&q, None));

        let square = IntMatrix::from_rows(&[vec![1, -1, -1, 1], vec![1, 1, -1, -1]]);
        let rot = SignedPermutation::from_cycles("(1,2,3,4)", 4).unwrap();
        let flip = SignedPermutation::from_cycles("(1,2)(3,4)", 4).unwrap();
        let d4 = group_closure(&[rot, flip], DEFAULT_ELEMENT_BOUND)
            .unwrap()
            .with_induced(&square)
            .unwrap();
        assert_eq!(
            moving_cone_summary(&square, Some(&d4)),
            moving_cone_summary(&square, None)
        );
    }
}
