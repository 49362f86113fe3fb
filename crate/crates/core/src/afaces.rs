//! Face filtering up to symmetry: which coordinate subsets survive the
//! radical-membership test, enumerated one representative per orbit.

use gitfan_math::Int;
use gitfan_poly::{is_aface, AfaceMethod, FaceIndexSet, Ideal};
use gitfan_symmetry::{orbit_of_subset, subset_orbit_representatives, SymmetryGroup};
use rayon::prelude::*;

/// One surviving orbit: its representative subset and the orbit size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AfaceOrbit {
    pub representative: FaceIndexSet,
    pub orbit_length: usize,
}

/// Orbit representatives of the subsets passing the face test, in the
/// representative order (ascending as packed integers).  The grading rows
/// feed the fast saturation route; the test itself is order-free.
/// Expanding every representative by the group yields all passing subsets:
/// the test is constant on orbits because the ideal is invariant.
pub fn enumerate_afaces(
    ideal: &Ideal,
    grading: &[Vec<Int>],
    group: &SymmetryGroup,
    r: usize,
) -> Vec<AfaceOrbit> {
    enumerate_afaces_with(ideal, grading, group, r, AfaceMethod::Fast)
}

pub fn enumerate_afaces_with(
    ideal: &Ideal,
    grading: &[Vec<Int>],
    group: &SymmetryGroup,
    r: usize,
    method: AfaceMethod,
) -> Vec<AfaceOrbit> {
    assert_eq!(ideal.nvars(), r, "ideal variable count differs from r");
    let reps = subset_orbit_representatives(group, r);
    reps.into_par_iter()
        .filter(|f| is_aface(ideal, grading, *f, method))
        .map(|f| AfaceOrbit {
            representative: f,
            orbit_length: orbit_of_subset(group, &f).len(),
        })
        .collect()
}
