//! Facets of a cone and the boundary test used during fan traversal.

use crate::cone::Cone;
use gitfan_math::lp::strict_point;
use gitfan_math::vector::{dot_int, int_to_rat, is_zero_int};
use gitfan_math::{Int, Rat};
use num_traits::{Signed, Zero};

/// One facet of a cone: the supporting inner normal (canonical form), the
/// facet as a cone of its own, and a precomputed relative interior point.
#[derive(Clone, Debug)]
pub struct Facet {
    parent_key: Vec<u8>,
    normal: Vec<Int>,
    cone: Cone,
    interior_point: Vec<Int>,
    dim: usize,
}

impl Facet {
    pub fn parent_canonical_id(&self) -> &[u8] {
        &self.parent_key
    }

    pub fn supporting_normal(&self) -> &[Int] {
        &self.normal
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Point in the relative interior of the facet: the sum of the parent's
    /// extreme rays lying on the facet.  When the facet is the parent's
    /// lineality space this is the origin, which still belongs to the
    /// relative interior.
    pub fn interior_point(&self) -> &[Int] {
        &self.interior_point
    }

    pub fn interior_point_rat(&self) -> Vec<Rat> {
        int_to_rat(&self.interior_point)
    }
}

/// All facets of a cone, one per canonical facet normal, in canonical
/// order.  The facet cones are handed back unconverted; their own canonical
/// descriptions are computed only if asked for.
pub fn facets(c: &Cone) -> Vec<Facet> {
    let parent_key = c.canonical_key();
    let ambient = c.ambient_dim();
    let parent_dim = c.dim();
    let ineqs = c.inequalities().to_vec();
    let eqns = c.equations().to_vec();
    let rays = c.rays();
    let mut out = Vec::with_capacity(ineqs.len());
    for a in &ineqs {
        let mut cut_eqns = eqns.clone();
        cut_eqns.push(a.clone());
        let cone = Cone::from_inequalities(ambient, &ineqs, &cut_eqns)
            .expect("facet inherits the parent's ambient dimension");
        let mut p = vec![Int::zero(); ambient];
        for r in rays.iter().filter(|r| dot_int(a, r).is_zero()) {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        out.push(Facet {
            parent_key: parent_key.clone(),
            normal: a.clone(),
            cone,
            interior_point: p,
            dim: parent_dim - 1,
        });
    }
    out
}

/// Whether a facet of a subdivision cone meets the interior of the support.
/// The facet fails exactly when it lies inside a facet hyperplane of the
/// support, which a single relative interior point detects: the support
/// normal is nonnegative on the whole facet, so vanishing at an interior
/// point forces it to vanish identically.
///
/// Precondition: the facet's parent is contained in the support.
pub fn is_interior_facet(f: &Facet, support: &Cone) -> bool {
    let p = f.interior_point();
    if is_zero_int(p) {
        // Facet equals a lineality space; it touches the support boundary
        // exactly when the support has any facet at all.
        return support.inequalities().is_empty();
    }
    support
        .inequalities()
        .iter()
        .all(|a| !dot_int(a, p).is_zero())
}

/// A point lying in both the facet's relative interior and the region's,
/// when the two intersect.  The facet's own sample point is used whenever
/// it qualifies; otherwise the intersection is decided exactly by linear
/// programming.  Unlike `is_interior_facet`, no containment relation
/// between the facet's parent and the region is assumed, so this is the
/// right test when the walk is restricted to a smaller cone.
pub fn interior_witness(f: &Facet, region: &Cone) -> Option<Vec<Rat>> {
    let p = f.interior_point();
    let strictly_inside = region.equations().iter().all(|a| dot_int(a, p).is_zero())
        && region.inequalities().iter().all(|a| dot_int(a, p).is_positive());
    // the zero sample sits in the region's relative interior exactly when
    // the region is a linear subspace
    if strictly_inside && (!is_zero_int(p) || region.inequalities().is_empty()) {
        return Some(f.interior_point_rat());
    }
    let fc = f.cone();
    let mut ineqs = fc.inequalities().to_vec();
    ineqs.extend(region.inequalities().iter().cloned());
    let mut eqns = fc.equations().to_vec();
    eqns.extend(region.equations().iter().cloned());
    strict_point(&ineqs, &eqns, fc.ambient_dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use gitfan_math::int;

    fn v(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn wedge_has_two_facet_rays() {
        let c = Cone::from_rays(2, &[v(&[1, 1]), v(&[-1, 1])]).unwrap();
        let fs = facets(&c);
        assert_eq!(fs.len(), 2);
        for f in &fs {
            assert_eq!(f.dim(), 1);
            assert_eq!(f.cone().dim(), 1);
            assert!(c.contains_cone(f.cone()));
            assert!(f.cone().contains(&f.interior_point_rat()));
            let p = f.interior_point_rat();
            assert!(f.cone().contains_in_relint(&p));
            assert!(dot_int(f.supporting_normal(), f.interior_point()).is_zero());
        }
        let normals: Vec<&[Int]> = fs.iter().map(|f| f.supporting_normal()).collect();
        assert_eq!(normals, vec![&v(&[-1, 1])[..], &v(&[1, 1])[..]]);
    }

    #[test]
    fn facet_count_matches_inequalities_for_full_dim_pointed() {
        let c = Cone::from_rays(
            3,
            &[v(&[1, 0, 1]), v(&[-1, 0, 1]), v(&[0, 1, 1]), v(&[0, -1, 1])],
        )
        .unwrap();
        assert_eq!(facets(&c).len(), c.inequalities().len());
        assert_eq!(facets(&c).len(), 4);
    }

    #[test]
    fn halfplane_facet_is_the_axis_line() {
        let c = Cone::from_inequalities(2, &[v(&[1, 0])], &[]).unwrap();
        let fs = facets(&c);
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].dim(), 1);
        assert_eq!(fs[0].cone().lineality_dim(), 1);
        // The facet is the y-axis, a line; the canonical interior point is 0.
        assert!(is_zero_int(fs[0].interior_point()));
    }

    #[test]
    fn interior_facet_splits_support() {
        // Split the upper halfplane into two quadrants; the shared facet is
        // the y-axis ray, interior to the support.
        let support = Cone::from_inequalities(2, &[v(&[0, 1])], &[]).unwrap();
        let left = Cone::from_rays(2, &[v(&[0, 1]), v(&[-1, 0])]).unwrap();
        let fs = facets(&left);
        assert_eq!(fs.len(), 2);
        for f in &fs {
            // The facet along the x-axis lies on the support boundary, the
            // one along the y-axis does not.
            if f.interior_point()[1].is_zero() {
                assert!(!is_interior_facet(f, &support));
            } else {
                assert!(is_interior_facet(f, &support));
            }
        }
    }

    #[test]
    fn witness_is_found_even_when_the_sample_point_misses_the_region() {
        // the upper halfplane's only facet is the x-axis line with sample
        // point 0; the right halfplane's interior misses 0 but meets the line
        let halfplane = Cone::from_inequalities(2, &[v(&[0, 1])], &[]).unwrap();
        let fs = facets(&halfplane);
        assert_eq!(fs.len(), 1);
        let right = Cone::from_inequalities(2, &[v(&[1, 0])], &[]).unwrap();
        let w = interior_witness(&fs[0], &right).expect("the line crosses the open halfplane");
        assert!(w[0].is_positive());
        assert!(w[1].is_zero());
        // a region meeting the line only at the origin has no witness
        let up = Cone::from_rays(2, &[v(&[0, 1])]).unwrap();
        assert!(interior_witness(&fs[0], &up).is_none());
    }

    #[test]
    fn all_facets_interior_when_support_is_a_subspace() {
        let support = Cone::from_rays_and_lineality(2, &[], &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        let quadrant = Cone::from_rays(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        for f in facets(&quadrant) {
            assert!(is_interior_facet(&f, &support));
        }
    }
}
