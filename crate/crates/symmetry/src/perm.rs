//! Signed variable permutations: T_j maps to c_j * T_{sigma(j)}.

use crate::SymmetryError;
use gitfan_math::Rat;
use num_traits::{One, Zero};
use std::fmt;

/// A permutation of variable indices together with one nonzero scalar per
/// variable.  Indices are 0-based internally; the text form is 1-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<Rat>,
}

impl SignedPermutation {
    pub fn identity(r: usize) -> Self {
        SignedPermutation {
            perm: (0..r).collect(),
            signs: vec![Rat::one(); r],
        }
    }

    pub fn new(perm: Vec<usize>, signs: Vec<Rat>) -> Result<Self, SymmetryError> {
        if perm.len() != signs.len() {
            return Err(SymmetryError::Parse(format!(
                "permutation length {} does not match sign count {}",
                perm.len(),
                signs.len()
            )));
        }
        let r = perm.len();
        let mut seen = vec![false; r];
        for &p in &perm {
            if p >= r || seen[p] {
                return Err(SymmetryError::Parse(
                    "index sequence is not a permutation".into(),
                ));
            }
            seen[p] = true;
        }
        if signs.iter().any(|s| s.is_zero()) {
            return Err(SymmetryError::Parse("zero scale factor".into()));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Self, SymmetryError> {
        let signs = vec![Rat::one(); perm.len()];
        SignedPermutation::new(perm, signs)
    }

    /// Parse disjoint cycles in 1-based notation, e.g. `(2,3)(5,6)(9,10)`.
    /// An empty string or `()` is the identity.  Signs default to +1; pass
    /// them separately via `with_signs`.
    pub fn from_cycles(text: &str, r: usize) -> Result<Self, SymmetryError> {
        let mut perm: Vec<usize> = (0..r).collect();
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = compact.as_str();
        let mut touched = vec![false; r];
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(SymmetryError::Parse(format!(
                    "expected '(' at {rest:?} in cycle notation"
                )));
            };
            let Some(close) = stripped.find(')') else {
                return Err(SymmetryError::Parse("unclosed cycle".into()));
            };
            let body = &stripped[..close];
            rest = &stripped[close + 1..];
            if body.is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for part in body.split(',') {
                let k: usize = part.parse().map_err(|_| {
                    SymmetryError::Parse(format!("bad index {part:?} in cycle"))
                })?;
                if k == 0 || k > r {
                    return Err(SymmetryError::Parse(format!(
                        "index {k} outside 1..={r}"
                    )));
                }
                if touched[k - 1] {
                    return Err(SymmetryError::Parse(format!(
                        "index {k} appears twice across cycles"
                    )));
                }
                touched[k - 1] = true;
                cycle.push(k - 1);
            }
            for (i, &a) in cycle.iter().enumerate() {
                perm[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        SignedPermutation::from_perm(perm)
    }

    pub fn with_signs(mut self, signs: Vec<Rat>) -> Result<Self, SymmetryError> {
        if signs.len() != self.perm.len() {
            return Err(SymmetryError::Parse(format!(
                "sign vector length {} does not match arity {}",
                signs.len(),
                self.perm.len()
            )));
        }
        if signs.iter().any(|s| s.is_zero()) {
            return Err(SymmetryError::Parse("zero scale factor".into()));
        }
        self.signs = signs;
        Ok(self)
    }

    pub fn arity(&self) -> usize {
        self.perm.len()
    }

    /// Image of variable index j (0-based).
    pub fn apply(&self, j: usize) -> usize {
        self.perm[j]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[Rat] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
            && self.signs.iter().all(|s| s.is_one())
    }

    /// self after other: (self*other)(T_j) = self(other(T_j)).
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        assert_eq!(self.arity(), other.arity(), "arities differ");
        let r = self.arity();
        let mut perm = vec![0; r];
        let mut signs = vec![Rat::one(); r];
        for j in 0..r {
            perm[j] = self.perm[other.perm[j]];
            signs[j] = &other.signs[j] * &self.signs[other.perm[j]];
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let r = self.arity();
        let mut perm = vec![0; r];
        let mut signs = vec![Rat::one(); r];
        for j in 0..r {
            perm[self.perm[j]] = j;
            signs[self.perm[j]] = Rat::one() / &self.signs[j];
        }
        SignedPermutation { perm, signs }
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.arity();
        let mut seen = vec![false; r];
        let mut wrote = false;
        for start in 0..r {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut j = start;
            let mut first = true;
            loop {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{}", j + 1)?;
                seen[j] = true;
                first = false;
                j = self.perm[j];
                if j == start {
                    break;
                }
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        if self.signs.iter().any(|s| !s.is_one()) {
            write!(f, " signs {:?}", self.signs.iter().map(|s| s.to_string()).collect::<Vec<_>>())?;
        }
        Ok(())
    }
}
