use crate::faceset::FaceIndexSet;
use crate::ideal::Ideal;
use crate::saturate::{contains_monomial_rabinowitsch, saturate_at, saturate_iterated_quotient};
use crate::{Int, PolyError};
use gitfan_math::lp::strict_point;
use gitfan_math::vector::rat_to_primitive_int;
use num_traits::Zero;

/// Which decision procedure answers the face test. All three agree; the
/// weighted one is the workhorse, the other two exist to check it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AfaceMethod {
    /// Weighted-order saturation, then a unit-ideal check.
    Fast,
    /// Iterated ideal quotient, then a unit-ideal check.
    Saturation,
    /// Radical membership of the face product via an adjoined inverse.
    Rabinowitsch,
}

/// Image of the ideal under setting every variable outside `face` to zero:
/// keep exactly the terms supported inside the face.
pub fn restrict_to_face(ideal: &Ideal, face: FaceIndexSet) -> Ideal {
    let gens = ideal
        .gens()
        .iter()
        .map(|g| g.restricted_to(&face))
        .filter(|g| !g.is_zero())
        .collect();
    Ideal::new(ideal.nvars(), gens)
}

/// Positive weight vector under which any ideal homogeneous for the
/// grading stays homogeneous after restriction to `face`: an integer
/// functional c with <c, q_j> >= 1 on every face column q_j of the
/// grading, found by exact feasibility. Variables outside the face never
/// occur in the restriction, so their weights are pinned to 1.
pub fn find_positive_weight(
    grading: &[Vec<Int>],
    nvars: usize,
    face: FaceIndexSet,
) -> Option<Vec<Int>> {
    if face.is_empty() {
        return Some(vec![Int::from(1); nvars]);
    }
    let k = grading.len();
    if k == 0 {
        return None;
    }
    let cols: Vec<Vec<Int>> = face
        .to_indices()
        .iter()
        .map(|&j| grading.iter().map(|row| row[j].clone()).collect())
        .collect();
    let c = strict_point(&cols, &[], k)?;
    let c = rat_to_primitive_int(&c);
    let mut w = vec![Int::from(1); nvars];
    for j in face.to_indices() {
        let wj: Int = grading
            .iter()
            .zip(c.iter())
            .map(|(row, ci)| &row[j] * ci)
            .sum();
        debug_assert!(wj > Int::zero());
        w[j] = wj;
    }
    Some(w)
}

/// Face test: `face` passes iff the restricted ideal does not become the
/// unit ideal after saturating at the product of the face variables —
/// equivalently, iff that product avoids the radical of the restriction.
///
/// The fast route needs a positive weight making the restriction
/// homogeneous: the all-ones weight when that already works, otherwise an
/// exact search through combinations of grading rows. If neither applies
/// the call silently falls back to the order-free quotient route, which
/// has no homogeneity requirement.
pub fn is_aface(
    ideal: &Ideal,
    grading: &[Vec<Int>],
    face: FaceIndexSet,
    method: AfaceMethod,
) -> bool {
    let restricted = restrict_to_face(ideal, face);
    if restricted.is_zero() {
        return true;
    }
    match method {
        AfaceMethod::Fast => {
            let ones = vec![Int::from(1); ideal.nvars()];
            let weight = if restricted.is_homogeneous_for(std::slice::from_ref(&ones)) {
                Some(ones)
            } else {
                find_positive_weight(grading, ideal.nvars(), face)
                    .filter(|w| restricted.is_homogeneous_for(std::slice::from_ref(w)))
            };
            match weight {
                Some(w) => match saturate_at(&restricted, &w, face) {
                    Ok(sat) => !sat.contains_one(),
                    Err(PolyError::NotHomogeneous) => {
                        !saturate_iterated_quotient(&restricted, face).contains_one()
                    }
                    Err(e) => unreachable!("saturation rejected validated input: {e}"),
                },
                None => !saturate_iterated_quotient(&restricted, face).contains_one(),
            }
        }
        AfaceMethod::Saturation => {
            !saturate_iterated_quotient(&restricted, face).contains_one()
        }
        AfaceMethod::Rabinowitsch => !contains_monomial_rabinowitsch(&restricted, face),
    }
}
