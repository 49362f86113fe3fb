use crate::monomial::Monomial;
use crate::{Int, PolyError};
use num_traits::Signed;
use std::cmp::Ordering;

/// Global monomial order: weighted degree first (strictly positive integer
/// weights), ties broken by a negative-revlex scan over a fixed variable
/// sequence. The scan starts at the LAST variable of the sequence; at the
/// first differing exponent the SMALLER exponent wins.
///
/// With weight (1,..,1) and the identity sequence this is graded reverse
/// lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedOrdering {
    weights: Vec<Int>,
    tiebreak: Vec<usize>,
}

impl WeightedOrdering {
    pub fn new(weights: Vec<Int>, tiebreak: Vec<usize>) -> Result<Self, PolyError> {
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(PolyError::NonPositiveWeight);
        }
        if tiebreak.len() != weights.len() {
            return Err(PolyError::ArityMismatch {
                expected: weights.len(),
                got: tiebreak.len(),
            });
        }
        let mut seen = vec![false; tiebreak.len()];
        for &v in &tiebreak {
            if v >= tiebreak.len() || seen[v] {
                return Err(PolyError::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(WeightedOrdering { weights, tiebreak })
    }

    /// Graded reverse lexicographic: all weights one, natural sequence.
    pub fn grevlex(nvars: usize) -> Self {
        WeightedOrdering {
            weights: vec![Int::from(1); nvars],
            tiebreak: (0..nvars).collect(),
        }
    }

    /// Weighted grevlex with the natural variable sequence.
    pub fn weighted(weights: Vec<Int>) -> Result<Self, PolyError> {
        let n = weights.len();
        WeightedOrdering::new(weights, (0..n).collect())
    }

    /// The per-iteration order of the product-saturation algorithm: the
    /// designated variable moves to the end of the sequence, so terms with a
    /// smaller power of it are larger and leading terms avoid it whenever
    /// the polynomial allows.
    pub fn saturating(weights: Vec<Int>, last: usize) -> Result<Self, PolyError> {
        let n = weights.len();
        assert!(last < n);
        let mut tiebreak: Vec<usize> = (0..n).filter(|&v| v != last).collect();
        tiebreak.push(last);
        WeightedOrdering::new(weights, tiebreak)
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Int] {
        &self.weights
    }

    pub fn tiebreak(&self) -> &[usize] {
        &self.tiebreak
    }

    pub fn weighted_degree(&self, m: &Monomial) -> Int {
        m.weighted_degree(&self.weights)
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.weights.len());
        debug_assert_eq!(b.nvars(), self.weights.len());
        let da = self.weighted_degree(a);
        let db = self.weighted_degree(b);
        match da.cmp(&db) {
            Ordering::Equal => {}
            other => return other,
        }
        for &v in self.tiebreak.iter().rev() {
            let (ea, eb) = (a.exp(v), b.exp(v));
            if ea != eb {
                return if ea < eb { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }

    /// Extend to a ring with extra trailing variables of weight one, placed
    /// at the end of the tiebreak sequence.
    pub fn extended(&self, extra: usize) -> WeightedOrdering {
        let n = self.weights.len();
        let mut weights = self.weights.clone();
        weights.extend(std::iter::repeat(Int::from(1)).take(extra));
        let mut tiebreak = self.tiebreak.clone();
        tiebreak.extend(n..n + extra);
        WeightedOrdering { weights, tiebreak }
    }
}
