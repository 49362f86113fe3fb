//! Rational polyhedral cones with two linked descriptions.
//!
//! A `Cone` is created from either generators (rays plus an optional
//! lineality basis) or constraints (inequalities plus equations).  The other
//! description, together with a canonical form of both, is computed on first
//! use by one double-description run and published atomically, so sharing a
//! cone across threads computes it at most once.
//!
//! Canonical form:
//! - equations: primitive RREF basis of the orthogonal complement of the
//!   span, rows in pivot order;
//! - inequalities: one primitive inner normal per facet, reduced modulo the
//!   equation space, sorted;
//! - lineality: primitive RREF basis, rows in pivot order;
//! - rays: primitive extreme-ray representatives reduced modulo the
//!   lineality space, sorted.
//!
//! Two cones are equal as point sets exactly when their canonical keys are
//! equal byte sequences.

use crate::dd::dual_description;
use crate::ConeError;
use gitfan_math::vector::{dot_int, dot_rat, int_to_rat, is_zero_int, primitive_int};
use gitfan_math::{Int, IntMatrix, Rat};
use gitfan_poly::FaceIndexSet;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;
use std::sync::OnceLock;

#[derive(Clone, Debug)]
pub(crate) struct Forms {
    pub ineqs: Vec<Vec<Int>>,
    pub eqns: Vec<Vec<Int>>,
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
    pub dim: usize,
}

#[derive(Clone, Debug)]
enum Raw {
    V {
        rays: Vec<Vec<Int>>,
        lineality: Vec<Vec<Int>>,
    },
    H {
        ineqs: Vec<Vec<Int>>,
        eqns: Vec<Vec<Int>>,
    },
}

pub struct Cone {
    ambient: usize,
    raw: Raw,
    forms: OnceLock<Forms>,
}

/// Primitive RREF basis of the row space, or empty for no nonzero rows.
pub fn canonical_basis(rows: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let nz: Vec<Vec<Int>> = rows.iter().filter(|r| !is_zero_int(r)).cloned().collect();
    if nz.is_empty() {
        return Vec::new();
    }
    IntMatrix::from_int_rows(nz).row_space_basis()
}

fn unit(i: usize, n: usize) -> Vec<Int> {
    let mut e = vec![Int::zero(); n];
    e[i] = Int::from(1);
    e
}

fn kernel_of(rows: &[Vec<Int>], ambient: usize) -> Vec<Vec<Int>> {
    let nz: Vec<Vec<Int>> = rows.iter().filter(|r| !is_zero_int(r)).cloned().collect();
    if nz.is_empty() {
        return (0..ambient).map(|i| unit(i, ambient)).collect();
    }
    IntMatrix::from_int_rows(nz).kernel_basis()
}

/// Unique coset representative of v modulo the row space of a primitive
/// RREF basis: pivot coordinates are cleared by positive rescaling, so ray
/// directions survive.
pub fn reduce_mod_rows(v: &[Int], basis: &[Vec<Int>]) -> Vec<Int> {
    let mut r = v.to_vec();
    for b in basis {
        let c = b
            .iter()
            .position(|x| !x.is_zero())
            .expect("zero row in reduction basis");
        if r[c].is_zero() {
            continue;
        }
        let (bc, rc) = (b[c].clone(), r[c].clone());
        for (x, y) in r.iter_mut().zip(b) {
            *x = &*x * &bc - &rc * y;
        }
        r = primitive_int(&r);
    }
    r
}

fn canon_vectors(vs: &[Vec<Int>], modulo: &[Vec<Int>]) -> Vec<Vec<Int>> {
    let mut set = BTreeSet::new();
    for v in vs {
        let red = reduce_mod_rows(v, modulo);
        if !is_zero_int(&red) {
            set.insert(primitive_int(&red));
        }
    }
    set.into_iter().collect()
}

fn rank_of(rows: &[Vec<Int>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    IntMatrix::from_int_rows(rows.to_vec()).rank()
}

fn forms_from_h(ineqs: &[Vec<Int>], eqns: &[Vec<Int>], ambient: usize) -> Forms {
    let dd = dual_description(ineqs, eqns, ambient);
    let lineality = canonical_basis(&dd.lineality);
    let rays = canon_vectors(&dd.rays, &lineality);
    let mut span = rays.clone();
    span.extend(lineality.iter().cloned());
    let eq_canon = canonical_basis(&kernel_of(&span, ambient));
    let dim = ambient - eq_canon.len();
    let mut normals = BTreeSet::new();
    if dim > 0 {
        for a in ineqs {
            let a = primitive_int(a);
            if is_zero_int(&a) {
                continue;
            }
            let mut tight: Vec<Vec<Int>> = rays
                .iter()
                .filter(|r| dot_int(&a, r).is_zero())
                .cloned()
                .collect();
            tight.extend(lineality.iter().cloned());
            if rank_of(&tight) + 1 == dim {
                let red = primitive_int(&reduce_mod_rows(&a, &eq_canon));
                normals.insert(red);
            }
        }
    }
    Forms {
        ineqs: normals.into_iter().collect(),
        eqns: eq_canon,
        rays,
        lineality,
        dim,
    }
}

fn forms_from_v(rays_raw: &[Vec<Int>], lin_raw: &[Vec<Int>], ambient: usize) -> Forms {
    // The dual system: y is a valid inequality exactly when it is
    // nonnegative on every generator and vanishes on the lineality space.
    let dd = dual_description(rays_raw, lin_raw, ambient);
    let eq_canon = canonical_basis(&dd.lineality);
    let ineqs = canon_vectors(&dd.rays, &eq_canon);
    let dim = ambient - eq_canon.len();
    let mut cons = ineqs.clone();
    cons.extend(eq_canon.iter().cloned());
    let lineality = canonical_basis(&kernel_of(&cons, ambient));
    let lin_dim = lineality.len();
    let mut rays = BTreeSet::new();
    if ambient >= lin_dim + 1 {
        let target = ambient - lin_dim - 1;
        for r in rays_raw {
            let red = reduce_mod_rows(r, &lineality);
            if is_zero_int(&red) {
                continue;
            }
            let red = primitive_int(&red);
            let mut tight: Vec<Vec<Int>> = ineqs
                .iter()
                .filter(|a| dot_int(a, &red).is_zero())
                .cloned()
                .collect();
            tight.extend(eq_canon.iter().cloned());
            if rank_of(&tight) == target {
                rays.insert(red);
            }
        }
    }
    Forms {
        ineqs,
        eqns: eq_canon,
        rays: rays.into_iter().collect(),
        lineality,
        dim,
    }
}

fn check_lengths(vectors: &[Vec<Int>], ambient: usize) -> Result<(), ConeError> {
    for v in vectors {
        if v.len() != ambient {
            return Err(ConeError::DimensionMismatch {
                expected: ambient,
                got: v.len(),
            });
        }
    }
    Ok(())
}

impl Cone {
    pub fn from_rays(ambient: usize, rays: &[Vec<Int>]) -> Result<Cone, ConeError> {
        Cone::from_rays_and_lineality(ambient, rays, &[])
    }

    pub fn from_rays_and_lineality(
        ambient: usize,
        rays: &[Vec<Int>],
        lineality: &[Vec<Int>],
    ) -> Result<Cone, ConeError> {
        check_lengths(rays, ambient)?;
        check_lengths(lineality, ambient)?;
        Ok(Cone {
            ambient,
            raw: Raw::V {
                rays: rays.to_vec(),
                lineality: lineality.to_vec(),
            },
            forms: OnceLock::new(),
        })
    }

    pub fn from_inequalities(
        ambient: usize,
        ineqs: &[Vec<Int>],
        eqns: &[Vec<Int>],
    ) -> Result<Cone, ConeError> {
        check_lengths(ineqs, ambient)?;
        check_lengths(eqns, ambient)?;
        Ok(Cone {
            ambient,
            raw: Raw::H {
                ineqs: ineqs.to_vec(),
                eqns: eqns.to_vec(),
            },
            forms: OnceLock::new(),
        })
    }

    /// The cone spanned by the unit vectors indexed by `face` inside Q^r.
    /// Both canonical descriptions are known in closed form, so no
    /// conversion run is needed.
    pub fn orthant_face(face: &FaceIndexSet, r: usize) -> Cone {
        assert_eq!(face.ambient(), r, "face set carries a different ambient");
        let mut gens: Vec<Vec<Int>> = face.iter().map(|i| unit(i, r)).collect();
        gens.sort();
        let eqns: Vec<Vec<Int>> = (0..r)
            .filter(|i| !face.contains(*i))
            .map(|i| unit(i, r))
            .collect();
        let forms = Forms {
            ineqs: gens.clone(),
            eqns,
            rays: gens.clone(),
            lineality: Vec::new(),
            dim: face.count(),
        };
        let lock = OnceLock::new();
        let _ = lock.set(forms);
        Cone {
            ambient: r,
            raw: Raw::V {
                rays: gens,
                lineality: Vec::new(),
            },
            forms: lock,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub(crate) fn forms(&self) -> &Forms {
        self.forms.get_or_init(|| match &self.raw {
            Raw::V { rays, lineality } => forms_from_v(rays, lineality, self.ambient),
            Raw::H { ineqs, eqns } => forms_from_h(ineqs, eqns, self.ambient),
        })
    }

    pub fn dim(&self) -> usize {
        self.forms().dim
    }

    pub fn rays(&self) -> &[Vec<Int>] {
        &self.forms().rays
    }

    pub fn lineality(&self) -> &[Vec<Int>] {
        &self.forms().lineality
    }

    pub fn inequalities(&self) -> &[Vec<Int>] {
        &self.forms().ineqs
    }

    pub fn equations(&self) -> &[Vec<Int>] {
        &self.forms().eqns
    }

    pub fn lineality_dim(&self) -> usize {
        self.forms().lineality.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality_dim() == 0
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Constraint view without forcing canonicalization: the construction
    /// constraints if this cone was built from them, the canonical ones
    /// otherwise.
    fn h_view(&self) -> (&[Vec<Int>], &[Vec<Int>]) {
        match &self.raw {
            Raw::H { ineqs, eqns } => (ineqs, eqns),
            Raw::V { .. } => {
                let f = self.forms();
                (&f.ineqs, &f.eqns)
            }
        }
    }

    pub fn contains(&self, w: &[Rat]) -> bool {
        assert_eq!(w.len(), self.ambient, "point has wrong length");
        let wr = w;
        let (ineqs, eqns) = self.h_view();
        ineqs
            .iter()
            .all(|a| !dot_rat(&int_to_rat(a), wr).is_negative())
            && eqns.iter().all(|e| dot_rat(&int_to_rat(e), wr).is_zero())
    }

    pub fn contains_int(&self, w: &[Int]) -> bool {
        assert_eq!(w.len(), self.ambient, "point has wrong length");
        let (ineqs, eqns) = self.h_view();
        ineqs.iter().all(|a| !dot_int(a, w).is_negative())
            && eqns.iter().all(|e| dot_int(e, w).is_zero())
    }

    pub fn contains_in_relint(&self, w: &[Rat]) -> bool {
        assert_eq!(w.len(), self.ambient, "point has wrong length");
        let f = self.forms();
        f.ineqs
            .iter()
            .all(|a| dot_rat(&int_to_rat(a), w).is_positive())
            && f.eqns.iter().all(|e| dot_rat(&int_to_rat(e), w).is_zero())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        assert_eq!(self.ambient, other.ambient);
        let (ineqs, eqns) = self.h_view();
        let of = other.forms();
        let ray_ok = of.rays.iter().all(|r| {
            ineqs.iter().all(|a| !dot_int(a, r).is_negative())
                && eqns.iter().all(|e| dot_int(e, r).is_zero())
        });
        let lin_ok = of.lineality.iter().all(|l| {
            ineqs.iter().all(|a| dot_int(a, l).is_zero())
                && eqns.iter().all(|e| dot_int(e, l).is_zero())
        });
        ray_ok && lin_ok
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.ambient, other.ambient, "ambient dimensions differ");
        let (ai, ae) = self.h_view();
        let (bi, be) = other.h_view();
        let mut ineqs = ai.to_vec();
        ineqs.extend(bi.iter().cloned());
        let mut eqns = ae.to_vec();
        eqns.extend(be.iter().cloned());
        Cone {
            ambient: self.ambient,
            raw: Raw::H { ineqs, eqns },
            forms: OnceLock::new(),
        }
    }

    /// Deterministic point of the relative interior: the sum of the
    /// canonical extreme rays (the zero lineality combination).  For the
    /// zero cone and for linear subspaces this is the origin, which lies in
    /// their relative interior.
    pub fn relative_interior_point(&self) -> Vec<Rat> {
        let f = self.forms();
        let mut p = vec![Int::zero(); self.ambient];
        for r in &f.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        int_to_rat(&p)
    }

    /// Same point as `relative_interior_point` but kept integral.
    pub fn relative_interior_point_int(&self) -> Vec<Int> {
        let f = self.forms();
        let mut p = vec![Int::zero(); self.ambient];
        for r in &f.rays {
            for (x, y) in p.iter_mut().zip(r) {
                *x += y;
            }
        }
        p
    }

    /// The dual cone {y : <y,x> >= 0 for all x in self}.  Generators and
    /// constraints swap roles, so both canonical descriptions transfer
    /// without another conversion run; in particular dual(dual(c)) has the
    /// same canonical key as c.
    pub fn dual(&self) -> Cone {
        let f = self.forms();
        let forms = Forms {
            ineqs: f.rays.clone(),
            eqns: f.lineality.clone(),
            rays: f.ineqs.clone(),
            lineality: f.eqns.clone(),
            dim: self.ambient - f.lineality.len(),
        };
        let lock = OnceLock::new();
        let _ = lock.set(forms);
        Cone {
            ambient: self.ambient,
            raw: Raw::H {
                ineqs: f.rays.clone(),
                eqns: f.lineality.clone(),
            },
            forms: lock,
        }
    }

    /// Byte key identifying the cone as a point set: ambient dimension,
    /// canonical equations, canonical facet normals.
    pub fn canonical_key(&self) -> Vec<u8> {
        let f = self.forms();
        let mut s = String::new();
        let _ = write!(s, "d{}", self.ambient);
        s.push_str("|e");
        for row in &f.eqns {
            s.push(':');
            push_row(&mut s, row);
        }
        s.push_str("|i");
        for row in &f.ineqs {
            s.push(':');
            push_row(&mut s, row);
        }
        s.into_bytes()
    }
}

fn push_row(s: &mut String, row: &[Int]) {
    for (k, x) in row.iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "{x}");
    }
}

impl Clone for Cone {
    fn clone(&self) -> Self {
        let forms = OnceLock::new();
        if let Some(f) = self.forms.get() {
            let _ = forms.set(f.clone());
        }
        Cone {
            ambient: self.ambient,
            raw: self.raw.clone(),
            forms,
        }
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = fm.debug_struct("Cone");
        d.field("ambient", &self.ambient);
        match self.forms.get() {
            Some(f) => {
                d.field("dim", &f.dim)
                    .field("rays", &f.rays)
                    .field("lineality", &f.lineality)
                    .field("inequalities", &f.ineqs)
                    .field("equations", &f.eqns);
            }
            None => {
                d.field("raw", &self.raw);
            }
        }
        d.finish()
    }
}

/// Force both canonical descriptions and return the result.
pub fn dd_convert(c: &Cone) -> Cone {
    let _ = c.forms();
    c.clone()
}

pub fn cone_from_rays(ambient: usize, rays: &[Vec<Int>]) -> Result<Cone, ConeError> {
    Cone::from_rays(ambient, rays)
}

pub fn cone_from_inequalities(
    ambient: usize,
    ineqs: &[Vec<Int>],
    eqns: &[Vec<Int>],
) -> Result<Cone, ConeError> {
    Cone::from_inequalities(ambient, ineqs, eqns)
}

#[derive(Serialize, Deserialize)]
struct ConeJson {
    rays: Vec<Vec<i64>>,
    lineality: Vec<Vec<i64>>,
    inequalities: Vec<Vec<i64>>,
    equations: Vec<Vec<i64>>,
}

fn to_i64_rows(rows: &[Vec<Int>]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_i64().expect("cone entry exceeds 64-bit range"))
                .collect()
        })
        .collect()
}

fn from_i64_rows(rows: &[Vec<i64>]) -> Vec<Vec<Int>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Int::from(x)).collect())
        .collect()
}

impl Serialize for Cone {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let f = self.forms();
        ConeJson {
            rays: to_i64_rows(&f.rays),
            lineality: to_i64_rows(&f.lineality),
            inequalities: to_i64_rows(&f.ineqs),
            equations: to_i64_rows(&f.eqns),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Cone {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let j = ConeJson::deserialize(de)?;
        let rays = from_i64_rows(&j.rays);
        let lineality = from_i64_rows(&j.lineality);
        let ineqs = from_i64_rows(&j.inequalities);
        let eqns = from_i64_rows(&j.equations);
        let ambient = rays
            .iter()
            .chain(&lineality)
            .chain(&ineqs)
            .chain(&eqns)
            .map(|v| v.len())
            .next()
            .ok_or_else(|| D::Error::custom("cone with no vectors in any field"))?;
        for v in rays.iter().chain(&lineality).chain(&ineqs).chain(&eqns) {
            if v.len() != ambient {
                return Err(D::Error::custom(format!(
                    "cone vectors mix lengths {} and {}",
                    ambient,
                    v.len()
                )));
            }
        }
        let cone = if ineqs.is_empty() && eqns.is_empty() {
            Cone::from_rays_and_lineality(ambient, &rays, &lineality)
        } else {
            Cone::from_inequalities(ambient, &ineqs, &eqns)
        }
        .map_err(|e| D::Error::custom(e.to_string()))?;
        #[cfg(debug_assertions)]
        {
            for r in &rays {
                debug_assert!(cone.contains_int(r), "stored ray violates constraints");
            }
            for l in &lineality {
                let neg: Vec<Int> = l.iter().map(|x| -x).collect();
                debug_assert!(
                    cone.contains_int(l) && cone.contains_int(&neg),
                    "stored lineality vector violates constraints"
                );
            }
        }
        Ok(cone)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gitfan_math::int;

    fn v(xs: &[i64]) -> Vec<Int> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn rv(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| Rat::from(int(x))).collect()
    }

    #[test]
    fn wedge_canonical_form() {
        let c = Cone::from_rays(2, &[v(&[1, 1]), v(&[-1, 1])]).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(c.is_pointed());
        assert_eq!(c.rays(), &[v(&[-1, 1]), v(&[1, 1])]);
        assert_eq!(c.inequalities(), &[v(&[-1, 1]), v(&[1, 1])]);
        assert!(c.equations().is_empty());
        assert_eq!(c.relative_interior_point(), rv(&[0, 2]));
    }

    #[test]
    fn whole_plane_is_pure_lineality() {
        let c = Cone::from_rays(2, &[v(&[1, 0]), v(&[-1, 0]), v(&[0, 1]), v(&[0, -1])]).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.lineality_dim(), 2);
        assert!(c.rays().is_empty());
        assert!(c.inequalities().is_empty());
        assert!(c.equations().is_empty());
    }

    #[test]
    fn intersection_of_quadrant_and_halfplane() {
        let quadrant = Cone::from_rays(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        let half = Cone::from_inequalities(2, &[v(&[-1, 1])], &[]).unwrap();
        let c = quadrant.intersect(&half);
        assert_eq!(c.rays(), &[v(&[0, 1]), v(&[1, 1])]);
    }

    #[test]
    fn quadrant_is_self_dual() {
        let q = Cone::from_rays(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        assert_eq!(q.dual().canonical_key(), q.canonical_key());
    }

    #[test]
    fn dual_of_whole_space_is_origin() {
        let all = Cone::from_rays_and_lineality(2, &[], &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        let origin = all.dual();
        assert_eq!(origin.dim(), 0);
        assert!(origin.rays().is_empty());
        assert_eq!(origin.equations().len(), 2);
    }

    #[test]
    fn biduality_is_exact_on_mixed_cones() {
        let cones = [
            Cone::from_rays(3, &[v(&[1, 0, 0]), v(&[1, 1, 0]), v(&[1, 1, 1])]).unwrap(),
            Cone::from_rays_and_lineality(3, &[v(&[1, 0, 0])], &[v(&[0, 1, 0])]).unwrap(),
            Cone::from_inequalities(3, &[v(&[1, 0, 0])], &[v(&[0, 0, 1])]).unwrap(),
        ];
        for c in &cones {
            assert_eq!(c.dual().dual().canonical_key(), c.canonical_key());
        }
    }

    #[test]
    fn canonical_key_ignores_presentation() {
        let a = Cone::from_rays(2, &[v(&[1, 1]), v(&[-1, 1])]).unwrap();
        let b = Cone::from_rays(2, &[v(&[-2, 2]), v(&[3, 3]), v(&[0, 1])]).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
        let c = Cone::from_inequalities(2, &[v(&[1, 1]), v(&[-1, 1]), v(&[0, 1])], &[]).unwrap();
        assert_eq!(a.canonical_key(), c.canonical_key());
    }

    #[test]
    fn halfplane_has_one_facet_normal() {
        let c = Cone::from_inequalities(2, &[v(&[1, 0])], &[]).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.lineality_dim(), 1);
        assert_eq!(c.inequalities(), &[v(&[1, 0])]);
        assert_eq!(c.rays(), &[v(&[1, 0])]);
    }

    #[test]
    fn membership_and_relative_interior() {
        let c = Cone::from_rays(2, &[v(&[1, 0]), v(&[1, 1])]).unwrap();
        assert!(c.contains(&rv(&[2, 1])));
        assert!(c.contains(&rv(&[1, 0])));
        assert!(!c.contains(&rv(&[-1, 0])));
        assert!(c.contains_in_relint(&rv(&[2, 1])));
        assert!(!c.contains_in_relint(&rv(&[1, 0])));
        assert!(!c.contains_in_relint(&rv(&[0, 0])));
        let p = c.relative_interior_point();
        assert!(c.contains_in_relint(&p));
    }

    #[test]
    fn cone_containment_ordering() {
        let big = Cone::from_rays(2, &[v(&[1, 0]), v(&[0, 1])]).unwrap();
        let small = Cone::from_rays(2, &[v(&[1, 1]), v(&[1, 2])]).unwrap();
        assert!(big.contains_cone(&small));
        assert!(!small.contains_cone(&big));
        assert!(big.contains_cone(&big));
    }

    #[test]
    fn orthant_face_agrees_with_converted_form() {
        let face = FaceIndexSet::from_indices(&[0, 2], 4);
        let direct = Cone::orthant_face(&face, 4);
        let generic =
            Cone::from_rays(4, &[v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0])]).unwrap();
        assert_eq!(direct.canonical_key(), generic.canonical_key());
        assert_eq!(direct.rays(), generic.rays());
        assert_eq!(direct.equations(), generic.equations());
        assert_eq!(direct.dim(), 2);

        let empty = Cone::orthant_face(&FaceIndexSet::empty(3), 3);
        assert_eq!(empty.dim(), 0);
        assert_eq!(empty.equations().len(), 3);
    }

    #[test]
    fn zero_cone_behaves() {
        let z = Cone::from_rays(3, &[]).unwrap();
        assert_eq!(z.dim(), 0);
        assert!(z.contains(&rv(&[0, 0, 0])));
        assert!(!z.contains(&rv(&[1, 0, 0])));
        assert!(z.contains_in_relint(&rv(&[0, 0, 0])));
        assert_eq!(z.relative_interior_point(), rv(&[0, 0, 0]));
    }

    #[test]
    fn json_round_trip_preserves_key() {
        let cones = [
            Cone::from_rays(2, &[v(&[1, 1]), v(&[-1, 1])]).unwrap(),
            Cone::from_rays_and_lineality(3, &[v(&[1, 0, 0])], &[v(&[0, 1, 1])]).unwrap(),
            Cone::from_rays(3, &[]).unwrap(),
            Cone::from_rays_and_lineality(2, &[], &[v(&[1, 0]), v(&[0, 1])]).unwrap(),
        ];
        for c in &cones {
            let text = serde_json::to_string(c).unwrap();
            let back: Cone = serde_json::from_str(&text).unwrap();
            assert_eq!(back.canonical_key(), c.canonical_key());
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let err = Cone::from_rays(3, &[v(&[1, 0])]).unwrap_err();
        match err {
            ConeError::DimensionMismatch { expected, got } => {
                assert_eq!((expected, got), (3, 2));
            }
        }
    }
}
