//! Group actions on ideals, index sets, and cones, plus orbit machinery.
//!
//! Index-set and cone actions use only the permutation part: rescaling a
//! coordinate moves points within the same torus orbit, so faces and their
//! image cones do not feel the signs.  The signs matter exactly when
//! substituting into polynomials.

use crate::group::SymmetryGroup;
use crate::perm::SignedPermutation;
use gitfan_cones::Cone;
use gitfan_math::{Int, IntMatrix};
use gitfan_poly::{FaceIndexSet, Ideal, Polynomial};
use std::collections::{BTreeMap, BTreeSet};

pub fn act_on_polynomial(sigma: &SignedPermutation, f: &Polynomial) -> Polynomial {
    f.substituted_signed(sigma.perm(), sigma.signs())
}

pub fn act_on_ideal(sigma: &SignedPermutation, ideal: &Ideal) -> Ideal {
    let gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| act_on_polynomial(sigma, g))
        .collect();
    Ideal::new(ideal.nvars(), gens)
}

/// G-invariance of the ideal as a set.  Checking the generators of the
/// group suffices: each generator has finite order, so mapping the ideal
/// into itself forces equality, and invariance under generators propagates
/// through every product.
pub fn verify_ideal_invariance(group: &SymmetryGroup, ideal: &Ideal) -> bool {
    group.generators().iter().all(|sigma| {
        ideal
            .gens()
            .iter()
            .all(|g| ideal.contains(&act_on_polynomial(sigma, g)))
    })
}

pub fn act_on_subset(sigma: &SignedPermutation, face: &FaceIndexSet) -> FaceIndexSet {
    face.apply_perm(sigma.perm())
}

/// All distinct images of the index set, ordered by bit value.
pub fn orbit_of_subset(group: &SymmetryGroup, face: &FaceIndexSet) -> Vec<FaceIndexSet> {
    let mut out: BTreeSet<FaceIndexSet> = BTreeSet::new();
    for sigma in group.elements() {
        out.insert(act_on_subset(sigma, face));
    }
    out.into_iter().collect()
}

/// Whether this index set is its orbit's representative: no image has a
/// smaller bit value.
pub fn is_subset_representative(group: &SymmetryGroup, face: &FaceIndexSet) -> bool {
    group
        .elements()
        .iter()
        .all(|sigma| act_on_subset(sigma, face) >= *face)
}

/// One representative per orbit of the G-action on all 2^r index sets: the
/// smallest bit value in each orbit, listed in increasing order.  Needs
/// 2^r enumerable; refuses beyond 32 variables.
pub fn subset_orbit_representatives(group: &SymmetryGroup, r: usize) -> Vec<FaceIndexSet> {
    assert_eq!(group.arity(), r, "group acts on a different variable count");
    assert!(
        r <= 32,
        "enumerating all 2^{r} subsets is not feasible; restrict the problem first"
    );
    let total: u64 = 1u64 << r;
    if r <= 24 {
        // Bit-packed visited map: one pass, each orbit expanded once.
        let mut visited = vec![0u64; ((total + 63) / 64) as usize];
        let mut reps = Vec::new();
        for bits in 0..total {
            if visited[(bits / 64) as usize] >> (bits % 64) & 1 == 1 {
                continue;
            }
            let face = FaceIndexSet::from_bits(bits, r);
            for image in orbit_of_subset(group, &face) {
                let ib = image.bits();
                visited[(ib / 64) as usize] |= 1 << (ib % 64);
            }
            reps.push(face);
        }
        reps
    } else {
        (0..total)
            .map(|bits| FaceIndexSet::from_bits(bits, r))
            .filter(|face| is_subset_representative(group, face))
            .collect()
    }
}

/// Image cone under a linear map: generators are mapped directly.
pub fn act_on_cone(a: &IntMatrix, c: &Cone) -> Cone {
    let rays: Vec<Vec<Int>> = c.rays().iter().map(|r| a.mul_vec(r)).collect();
    let lineality: Vec<Vec<Int>> = c.lineality().iter().map(|l| a.mul_vec(l)).collect();
    Cone::from_rays_and_lineality(c.ambient_dim(), &rays, &lineality)
        .expect("image cone keeps the ambient dimension")
}

/// Distinct image cones under the whole group, deduplicated and ordered by
/// canonical key.  Requires induced matrices on the group.
pub fn orbit_of_cone(group: &SymmetryGroup, c: &Cone) -> Vec<Cone> {
    let mats = group
        .induced()
        .expect("induced matrices not computed; call with_induced");
    let mut seen: BTreeMap<Vec<u8>, Cone> = BTreeMap::new();
    for a in mats {
        let image = act_on_cone(a, c);
        seen.entry(image.canonical_key()).or_insert(image);
    }
    seen.into_values().collect()
}
