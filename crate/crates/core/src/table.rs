//! The orbit-cone table: the projected cones in canonical order, the way the
//! symmetry group permutes them, and the chamber evaluation and fingerprints
//! taken against the table.

use crate::hash::ConeHash;
use crate::CoreError;
use gitfan_cones::Cone;
use gitfan_math::{Int, IntMatrix, Rat};
use gitfan_poly::FaceIndexSet;
use gitfan_symmetry::{act_on_cone, orbit_of_subset, SymmetryGroup};
use std::collections::BTreeSet;

/// Sorted, duplicate-free sequence of cones together with, per group
/// element, the permutation its induced linear map applies to the member
/// indices.  The member set must be closed under the group action — the
/// constructor checks this and fails loudly otherwise, since every later
/// stage relies on bit permutations being total.
#[derive(Clone, Debug)]
pub struct OrbitConeTable {
    ambient: usize,
    cones: Vec<Cone>,
    keys: Vec<Vec<u8>>,
    group: SymmetryGroup,
    index_perms: Vec<Vec<usize>>,
}

impl OrbitConeTable {
    /// Canonicalize, sort by canonical key, drop duplicates, and record the
    /// index permutation of every group element.  The group must already
    /// carry its induced linear maps.
    pub fn new(ambient: usize, cones: Vec<Cone>, group: SymmetryGroup) -> OrbitConeTable {
        assert!(
            group.induced().is_some(),
            "the group must carry induced linear maps; call with_induced first"
        );
        let mut keyed: Vec<(Vec<u8>, Cone)> = cones
            .into_iter()
            .map(|c| {
                assert_eq!(c.ambient_dim(), ambient, "table member in wrong space");
                (c.canonical_key(), c)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        let keys: Vec<Vec<u8>> = keyed.iter().map(|(k, _)| k.clone()).collect();
        let cones: Vec<Cone> = keyed.into_iter().map(|(_, c)| c).collect();

        let mut index_perms = Vec::with_capacity(group.len());
        for e in 0..group.len() {
            let a = group.induced_for(e);
            let mut perm = vec![usize::MAX; cones.len()];
            let mut seen = vec![false; cones.len()];
            for (i, c) in cones.iter().enumerate() {
                let image_key = act_on_cone(a, c).canonical_key();
                let j = keys
                    .binary_search(&image_key)
                    .unwrap_or_else(|_| panic!("table is not closed under the group action"));
                assert!(!seen[j], "group element does not permute the table");
                seen[j] = true;
                perm[i] = j;
            }
            index_perms.push(perm);
        }

        OrbitConeTable {
            ambient,
            cones,
            keys,
            group,
            index_perms,
        }
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, i: usize) -> &Cone {
        &self.cones[i]
    }

    pub fn keys(&self) -> &[Vec<u8>] {
        &self.keys
    }

    pub fn index_by_key(&self, key: &[u8]) -> Option<usize> {
        self.keys.binary_search_by(|k| k.as_slice().cmp(key)).ok()
    }

    pub fn group(&self) -> &SymmetryGroup {
        &self.group
    }

    /// How group element `e` permutes the member indices: member i maps to
    /// member `index_perm(e)[i]`.
    pub fn index_perm(&self, e: usize) -> &[usize] {
        &self.index_perms[e]
    }

    pub fn index_perms(&self) -> &[Vec<usize>] {
        &self.index_perms
    }

    /// Fingerprint of a rational point: bit i set iff member i contains it.
    pub fn membership_hash(&self, w: &[Rat]) -> ConeHash {
        let mut h = ConeHash::empty(self.len());
        for (i, c) in self.cones.iter().enumerate() {
            if c.contains(w) {
                h.set_bit(i);
            }
        }
        h
    }

    /// Union of the canonical constraint rows of the members selected by the
    /// fingerprint, deduplicated row by row.
    pub fn constraint_rows(&self, bits: &ConeHash) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
        assert_eq!(bits.len(), self.len(), "fingerprint over a different table");
        let mut ineqs: BTreeSet<Vec<Int>> = BTreeSet::new();
        let mut eqns: BTreeSet<Vec<Int>> = BTreeSet::new();
        for i in bits.indices() {
            let c = &self.cones[i];
            ineqs.extend(c.inequalities().iter().cloned());
            eqns.extend(c.equations().iter().cloned());
        }
        (ineqs.into_iter().collect(), eqns.into_iter().collect())
    }

    /// Intersection of the members selected by the fingerprint, left in
    /// constraint form (canonicalized lazily by the cone itself).
    pub fn intersection_cone(&self, bits: &ConeHash) -> Cone {
        let (ineqs, eqns) = self.constraint_rows(bits);
        Cone::from_inequalities(self.ambient, &ineqs, &eqns)
            .expect("constraint rows live in the table's space")
    }
}

/// The common refinement's support: the cone spanned by all grading columns.
pub fn support_cone(q: &IntMatrix) -> Cone {
    let cols: Vec<Vec<Int>> = (0..q.cols()).map(|j| q.col(j)).collect();
    Cone::from_rays(q.rows(), &cols).expect("columns live in the grading space")
}

/// Project every face in every orbit of the given representatives through
/// the grading: the cone spanned by the selected columns, collected into a
/// deduplicated table.  The group is equipped with induced maps here if it
/// does not carry them yet.
pub fn project_orbit_cones(
    afaces: &[FaceIndexSet],
    q: &IntMatrix,
    group: &SymmetryGroup,
) -> OrbitConeTable {
    let group = if group.induced().is_some() {
        group.clone()
    } else {
        group
            .clone()
            .with_induced(q)
            .expect("group is not compatible with the grading")
    };
    let mut faces: BTreeSet<FaceIndexSet> = BTreeSet::new();
    for rep in afaces {
        faces.extend(orbit_of_subset(&group, rep));
    }
    let k = q.rows();
    let cones: Vec<Cone> = faces
        .iter()
        .map(|f| {
            let cols: Vec<Vec<Int>> = f.to_indices().iter().map(|&j| q.col(j)).collect();
            Cone::from_rays(k, &cols).expect("columns live in the grading space")
        })
        .collect();
    OrbitConeTable::new(k, cones, group)
}

/// Members of dimension k that contain no other full-dimensional member
/// strictly: the smallest sub-table that still evaluates every chamber
/// correctly.
pub fn minimal_full_dim(table: &OrbitConeTable, k: usize) -> OrbitConeTable {
    let full: Vec<&Cone> = table.cones().iter().filter(|c| c.dim() == k).collect();
    let kept: Vec<Cone> = full
        .iter()
        .filter(|c| {
            !full.iter().any(|other| {
                other.canonical_key() != c.canonical_key() && c.contains_cone(other)
            })
        })
        .map(|c| (*c).clone())
        .collect();
    OrbitConeTable::new(table.ambient_dim(), kept, table.group().clone())
}

/// The two staged reductions of the full-dimensional projected cones.
pub struct ReducedTables {
    /// Union of the orbits minimal in the preorder "some member of one orbit
    /// is contained in some member of the other".
    pub orbit_minimal: OrbitConeTable,
    /// The orbit-minimal union additionally stripped of members that
    /// strictly contain another member.
    pub inclusion_minimal: OrbitConeTable,
}

/// Orbit-level reduction of the projected cones: restrict to the
/// full-dimensional ones, group them into orbits, keep only the orbits
/// minimal under member-wise containment, and optionally strip non-minimal
/// members.  Both outputs still contain every minimal full-dimensional cone,
/// so either can replace the full table for chamber evaluation.
pub fn reduce_by_orbit_inclusion(
    afaces: &[FaceIndexSet],
    q: &IntMatrix,
    group: &SymmetryGroup,
) -> ReducedTables {
    let group = if group.induced().is_some() {
        group.clone()
    } else {
        group
            .clone()
            .with_induced(q)
            .expect("group is not compatible with the grading")
    };
    let k = q.rows();

    // One cone orbit per face orbit, deduplicated: map each face orbit to
    // its full-dimensional projected cones keyed canonically.
    let mut orbits: Vec<Vec<Cone>> = Vec::new();
    let mut seen_orbits: BTreeSet<Vec<Vec<u8>>> = BTreeSet::new();
    for rep in afaces {
        let mut by_key: std::collections::BTreeMap<Vec<u8>, Cone> = Default::default();
        for f in orbit_of_subset(&group, rep) {
            let cols: Vec<Vec<Int>> = f.to_indices().iter().map(|&j| q.col(j)).collect();
            let c = Cone::from_rays(k, &cols).expect("columns live in the grading space");
            if c.dim() == k {
                by_key.insert(c.canonical_key(), c);
            }
        }
        if by_key.is_empty() {
            continue;
        }
        let key_set: Vec<Vec<u8>> = by_key.keys().cloned().collect();
        if seen_orbits.insert(key_set) {
            orbits.push(by_key.into_values().collect());
        }
    }

    // Orbit A is below orbit B when some member of A sits inside some member
    // of B.  Keep the orbits with nothing strictly below them.
    let below = |a: &[Cone], b: &[Cone]| -> bool {
        a.iter().any(|x| b.iter().any(|y| y.contains_cone(x)))
    };
    let minimal_orbits: Vec<&Vec<Cone>> = orbits
        .iter()
        .filter(|a| {
            !orbits
                .iter()
                .any(|b| !std::ptr::eq(*a, b) && below(b, a) && !below(a, b))
        })
        .collect();

    let omega1: Vec<Cone> = minimal_orbits
        .iter()
        .flat_map(|orbit| orbit.iter().cloned())
        .collect();
    let orbit_minimal = OrbitConeTable::new(k, omega1, group.clone());
    let inclusion_minimal = minimal_full_dim(&orbit_minimal, k);
    ReducedTables {
        orbit_minimal,
        inclusion_minimal,
    }
}

/// The chamber of a point: the intersection of every table member containing
/// it (plain membership, not relative interior).  Errors when no member
/// contains the point, which for a table covering the support means the
/// point lies outside.
pub fn gitcone_at(table: &OrbitConeTable, w: &[Rat]) -> Result<Cone, CoreError> {
    let bits = hash_at(table, w)?;
    Ok(table.intersection_cone(&bits))
}

/// Fingerprint of the chamber of `w` read off directly from membership of
/// the point, with no ray computation: bit i = [w ∈ table[i]] equals
/// [chamber(w) ⊆ table[i]] because the chamber is exactly the intersection
/// of the members containing w.
pub fn hash_at(table: &OrbitConeTable, w: &[Rat]) -> Result<ConeHash, CoreError> {
    assert_eq!(w.len(), table.ambient_dim(), "point in wrong space");
    let bits = table.membership_hash(w);
    if bits.is_zero() {
        return Err(CoreError::OutsideSupport);
    }
    Ok(bits)
}

/// Fingerprint of a cone by direct containment tests against every member.
pub fn hash_of(table: &OrbitConeTable, lam: &Cone) -> ConeHash {
    assert_eq!(lam.ambient_dim(), table.ambient_dim(), "cone in wrong space");
    let mut h = ConeHash::empty(table.len());
    for (i, c) in table.cones().iter().enumerate() {
        if c.contains_cone(lam) {
            h.set_bit(i);
        }
    }
    h
}
