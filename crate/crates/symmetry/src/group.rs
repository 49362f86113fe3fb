//! Closure of a generated group of signed permutations and the induced
//! linear actions on the grading.

use crate::perm::SignedPermutation;
use crate::SymmetryError;
use gitfan_math::{lcm_of_denominators, Int, IntMatrix, MathError, Rat};
use std::collections::HashSet;

pub const DEFAULT_ELEMENT_BOUND: usize = 10_000;

#[derive(Clone, Debug)]
pub struct SymmetryGroup {
    arity: usize,
    generators: Vec<SignedPermutation>,
    elements: Vec<SignedPermutation>,
    /// A_sigma per element, aligned with `elements`; present once
    /// `with_induced` has run.
    induced: Option<Vec<IntMatrix>>,
}

/// Breadth-first closure of the generated group, deduplicated by
/// permutation and signs together.  The identity is element 0; the rest
/// follow in discovery order, which is deterministic in the generator
/// order.
pub fn group_closure(
    generators: &[SignedPermutation],
    bound: usize,
) -> Result<SymmetryGroup, SymmetryError> {
    let arity = generators
        .first()
        .map(|g| g.arity())
        .unwrap_or(0);
    for g in generators {
        if g.arity() != arity {
            return Err(SymmetryError::Parse(format!(
                "generator arities differ: {} vs {}",
                g.arity(),
                arity
            )));
        }
    }
    let mut elements = vec![SignedPermutation::identity(arity)];
    let mut seen: HashSet<SignedPermutation> = elements.iter().cloned().collect();
    let mut frontier = 0;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for g in generators {
            let next = g.compose(&current);
            if seen.insert(next.clone()) {
                if elements.len() + 1 > bound {
                    return Err(SymmetryError::BoundExceeded { bound });
                }
                elements.push(next);
            }
        }
    }
    Ok(SymmetryGroup {
        arity,
        generators: generators.to_vec(),
        elements,
        induced: None,
    })
}

/// The linear map A with A*Q = Q*P_sigma, where P_sigma sends the j-th
/// unit vector to the sigma(j)-th.  Exists exactly when sigma maps the
/// kernel of Q into itself.
///
/// When the columns of Q span a proper sublattice of Z^k the exact
/// solution can pick up a global denominator; every consumer of the
/// result treats it as a map on rays, so we return the smallest positive
/// integer multiple instead of failing.  Solutions that are already
/// integral come back unscaled.
pub fn induced_matrix(
    sigma: &SignedPermutation,
    q: &IntMatrix,
) -> Result<IntMatrix, SymmetryError> {
    assert_eq!(
        q.cols(),
        sigma.arity(),
        "grading has {} columns but the permutation moves {} variables",
        q.cols(),
        sigma.arity()
    );
    let p = IntMatrix::permutation(sigma.perm());
    let qp = q.mul(&p);
    let a = match q.solve_right(&qp) {
        Ok(x) => x,
        Err(MathError::NoSolution) => return Err(SymmetryError::NotASymmetry),
        Err(e) => {
            return Err(SymmetryError::Parse(format!(
                "induced-matrix solve failed: {e}"
            )))
        }
    };
    let flat: Vec<Rat> = (0..a.rows()).flat_map(|i| a.row(i).to_vec()).collect();
    let scale = lcm_of_denominators(&flat);
    let rows: Vec<Vec<Int>> = (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|x| x.numer() * (&scale / x.denom()))
                .collect()
        })
        .collect();
    Ok(IntMatrix::from_int_rows(rows))
}

impl SymmetryGroup {
    pub fn trivial(arity: usize) -> SymmetryGroup {
        SymmetryGroup {
            arity,
            generators: Vec::new(),
            elements: vec![SignedPermutation::identity(arity)],
            induced: None,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn generators(&self) -> &[SignedPermutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Compute A_sigma for every element.  Fails with NotASymmetry if any
    /// element fails the kernel condition or needs non-integral entries.
    pub fn with_induced(mut self, q: &IntMatrix) -> Result<SymmetryGroup, SymmetryError> {
        let mats = self
            .elements
            .iter()
            .map(|s| induced_matrix(s, q))
            .collect::<Result<Vec<_>, _>>()?;
        self.induced = Some(mats);
        Ok(self)
    }

    pub fn induced(&self) -> Option<&[IntMatrix]> {
        self.induced.as_deref()
    }

    pub fn induced_for(&self, idx: usize) -> &IntMatrix {
        &self
            .induced
            .as_ref()
            .expect("induced matrices not computed; call with_induced")[idx]
    }
}
