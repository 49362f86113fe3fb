use crate::faceset::FaceIndexSet;
use crate::groebner::{buchberger_engine, interreduce, ElimFirst, OrdPoly};
use crate::ideal::{ideal_equal, Ideal};
use crate::monomial::Monomial;
use crate::ordering::WeightedOrdering;
use crate::polynomial::Polynomial;
use crate::{Int, PolyError, Rat};
use num_traits::One;

/// Divide every element of a Groebner basis by the maximal power of the
/// variable `var` it contains. Valid whenever divisibility of an element
/// by the variable is equivalent to divisibility of its leading monomial;
/// that equivalence is checked, and under it the result is a Groebner
/// basis of the quotient of the original ideal by all powers of the
/// variable.
pub fn saturate_variable(
    basis: &[Polynomial],
    var: usize,
    ord: &WeightedOrdering,
) -> Result<Vec<Polynomial>, PolyError> {
    let mut out = Vec::new();
    for f in basis {
        if f.is_zero() {
            continue;
        }
        let (lm, _) = f.leading(ord).expect("nonzero polynomial");
        let lead_divisible = lm.exp(var) >= 1;
        let all_divisible = f.terms().all(|(m, _)| m.exp(var) >= 1);
        if lead_divisible && !all_divisible {
            return Err(PolyError::HypothesisViolated { var });
        }
        out.push(f.divided_by_var_max(var));
    }
    Ok(out)
}

/// Saturate `ideal` at the product of the variables named by `face`,
/// assuming every generator is homogeneous under the positive weight
/// vector `weights`.
///
/// One basis computation runs per face variable Y. The term order ranks
/// by weighted degree and breaks ties so that, among the equal-degree
/// monomials of a homogeneous polynomial, the leading one carries the
/// *minimal* Y-exponent. Divisibility of an element by Y then matches
/// divisibility of its lead, so dividing a finished basis through by
/// Y-powers lands exactly on the quotient by Y^infinity, one variable at
/// a time. Intermediate s-polynomial remainders are stripped of all
/// face-variable factors as they appear; that skips ahead within the
/// target ideal and keeps bases small.
pub fn saturate_at(
    ideal: &Ideal,
    weights: &[Int],
    face: FaceIndexSet,
) -> Result<Ideal, PolyError> {
    let nvars = ideal.nvars();
    if weights.len() != nvars {
        return Err(PolyError::ArityMismatch { expected: nvars, got: weights.len() });
    }
    for g in ideal.gens() {
        if !g.is_weight_homogeneous(weights) {
            return Err(PolyError::NotHomogeneous);
        }
    }
    if ideal.is_zero() || face.is_empty() {
        return Ok(ideal.clone());
    }
    let face_vars: Vec<usize> = face.to_indices();
    let mut current: Vec<Polynomial> = ideal.gens().to_vec();
    let mut last_ord = None;
    for &i in &face_vars {
        let ord = WeightedOrdering::saturating(weights.to_vec(), i)?;
        let gens: Vec<OrdPoly> = current
            .iter()
            .map(|p| OrdPoly::from_poly(p, &ord))
            .collect();
        let basis = buchberger_engine(&gens, &ord, &mut |r| {
            for &j in &face_vars {
                r.divide_var_max(j);
            }
        });
        let polys: Vec<Polynomial> = basis.into_iter().map(|p| p.to_poly(nvars)).collect();
        current = saturate_variable(&polys, i, &ord)?;
        last_ord = Some(ord);
    }
    let ord = last_ord.expect("nonempty face");
    // Residual face-variable factors can be stripped outright: the ideal
    // is already saturated, so each divided element stays inside it and
    // regenerates the original by multiplication.
    for p in current.iter_mut() {
        *p = p.divided_by_face_max(&face);
    }
    let reduced = interreduce(
        current.iter().map(|p| OrdPoly::from_poly(p, &ord)).collect(),
        &ord,
    );
    Ok(Ideal::new(
        nvars,
        reduced.into_iter().map(|p| p.to_poly(nvars)).collect(),
    ))
}

/// Saturation at the product of the first `m` variables; returns the final
/// iteration's reduced basis.
pub fn saturate_product(
    ideal: &Ideal,
    m: usize,
    weights: &[Int],
) -> Result<Vec<Polynomial>, PolyError> {
    assert!(m <= ideal.nvars(), "saturating variable count exceeds the ring");
    let ix: Vec<usize> = (0..m).collect();
    let face = FaceIndexSet::from_indices(&ix, ideal.nvars());
    Ok(saturate_at(ideal, weights, face)?.gens().to_vec())
}

/// Ideal quotient I : m for a monomial m, computed as (I `intersect` <m>)
/// divided through by m. The intersection comes from eliminating an
/// auxiliary variable t from t*I + (1-t)*<m>.
pub fn ideal_quotient_by_monomial(ideal: &Ideal, m: &Monomial) -> Ideal {
    let n = ideal.nvars();
    assert_eq!(m.nvars(), n, "monomial arity mismatch");
    if ideal.is_zero() {
        return Ideal::zero(n);
    }
    if m.is_one() {
        return ideal.clone();
    }
    // Ring extended by t at index n.
    let t = Polynomial::variable(n, n + 1);
    let m_ext = Polynomial::monomial(m.extended(1), Rat::one());
    let mut gens: Vec<Polynomial> = ideal
        .gens()
        .iter()
        .map(|g| g.extended(1).mul(&t))
        .collect();
    gens.push(Polynomial::one(n + 1).sub(&t).mul(&m_ext));

    let inner = WeightedOrdering::grevlex(n + 1);
    let elim = ElimFirst { elim: n, inner: &inner };
    let input: Vec<OrdPoly> = gens.iter().map(|p| OrdPoly::from_poly(p, &elim)).collect();
    let basis = buchberger_engine(&input, &elim, &mut |_| {});

    let mut out: Vec<Polynomial> = Vec::new();
    for g in &basis {
        let (lm, _) = g.lead().expect("nonzero basis element");
        // Under the block order a t-free lead forces a t-free polynomial.
        if lm.exp(n) != 0 {
            continue;
        }
        let p = g.to_poly(n + 1).truncated(n);
        let divided = Polynomial::from_terms(
            n,
            p.terms().map(|(mon, c)| {
                (
                    mon.try_div(m).expect("intersection element divisible by the monomial"),
                    c.clone(),
                )
            }),
        );
        out.push(divided);
    }
    Ideal::new(n, out)
}

fn face_product(face: FaceIndexSet, nvars: usize) -> Monomial {
    let exps: Vec<u32> = (0..nvars)
        .map(|i| if face.contains(i) { 1 } else { 0 })
        .collect();
    Monomial::from_exps(exps)
}

/// Independent route to the same saturation: iterate the ideal quotient
/// by the face product until it stabilizes. Needs no homogeneity and no
/// special term order, so it cross-checks the weighted algorithm.
pub fn saturate_iterated_quotient(ideal: &Ideal, face: FaceIndexSet) -> Ideal {
    let m = face_product(face, ideal.nvars());
    if m.is_one() {
        return ideal.clone();
    }
    let mut current = ideal.clone();
    loop {
        let next = ideal_quotient_by_monomial(&current, &m);
        if ideal_equal(&next, &current) {
            return current;
        }
        current = next;
    }
}

/// True iff some power of the face's variable product lies in the ideal,
/// decided by adjoining an inverse: the product has a power in I exactly
/// when I + <1 - t*product> is the unit ideal of the extended ring. Third
/// route, used when only the yes/no answer is needed.
pub fn contains_monomial_rabinowitsch(ideal: &Ideal, face: FaceIndexSet) -> bool {
    let n = ideal.nvars();
    if ideal.is_zero() {
        return false;
    }
    let m = face_product(face, n);
    let t = Polynomial::variable(n, n + 1);
    let m_ext = Polynomial::monomial(m.extended(1), Rat::one());
    let mut gens: Vec<Polynomial> = ideal.gens().iter().map(|g| g.extended(1)).collect();
    gens.push(Polynomial::one(n + 1).sub(&t.mul(&m_ext)));
    Ideal::new(n + 1, gens).contains_one()
}
