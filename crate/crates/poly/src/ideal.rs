use crate::groebner::{buchberger, normal_form};
use crate::ordering::WeightedOrdering;
use crate::polynomial::Polynomial;
use crate::Int;
use std::sync::OnceLock;

/// Ideal in Q[T_1..T_n], held by generators. A reduced basis for the
/// all-weights-one order is computed lazily and cached; ideal-level queries
/// (membership, equality) go through it.
#[derive(Debug)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            nvars: self.nvars,
            gens: self.gens.clone(),
            gb: OnceLock::new(),
        }
    }
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<Polynomial>) -> Self {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator arity mismatch");
        }
        Ideal { nvars, gens, gb: OnceLock::new() }
    }

    pub fn zero(nvars: usize) -> Self {
        Ideal::new(nvars, Vec::new())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn default_order(&self) -> WeightedOrdering {
        WeightedOrdering::grevlex(self.nvars)
    }

    /// Reduced basis under total degree with reverse-lex tiebreak.
    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb
            .get_or_init(|| buchberger(&self.gens, &self.default_order()))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.is_zero() {
            return true;
        }
        normal_form(f, self.groebner_basis(), &self.default_order()).is_zero()
    }

    pub fn contains_one(&self) -> bool {
        let gb = self.groebner_basis();
        gb.len() == 1 && gb[0].is_constant() && !gb[0].is_zero()
    }

    /// True when every generator is homogeneous for each row of the weight
    /// grading.
    pub fn is_homogeneous_for(&self, weight_rows: &[Vec<Int>]) -> bool {
        weight_rows
            .iter()
            .all(|w| self.gens.iter().all(|g| g.is_weight_homogeneous(w)))
    }

    /// True when every generator's monomials share one multidegree under
    /// the grading matrix (columns = variable degrees).
    pub fn is_homogeneous(&self, q: &gitfan_math::IntMatrix) -> bool {
        assert_eq!(q.cols(), self.nvars, "grading column count mismatch");
        (0..q.rows()).all(|r| {
            let row = q.row(r);
            self.gens.iter().all(|g| g.is_weight_homogeneous(&row))
        })
    }
}

/// Two ideals are equal iff each one's generators reduce to zero against
/// the other's basis.
pub fn ideal_equal(a: &Ideal, b: &Ideal) -> bool {
    a.gens().iter().all(|g| b.contains(g)) && b.gens().iter().all(|g| a.contains(g))
}
