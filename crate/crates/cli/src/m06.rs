//! Helpers for the forty-variable bundled problem.  Its ideal is listed in
//! two parts: six quartic relations that are already symmetric as a set,
//! and fifteen mixed relations whose full orbit is only spelled out here.
//! The complete ideal is the saturation of the sum at the product of all
//! variables, with each part saturated on its own first — saturating the
//! raw sum directly is drastically slower.

use crate::problem::ProblemSpec;
use gitfan_poly::{
    find_positive_weight, saturate_product, FaceIndexSet, Ideal, PolyError, Polynomial,
};
use gitfan_symmetry::{act_on_polynomial, SymmetryGroup};

/// How many leading generators of the bundled file form the first part.
pub const M06_SPLIT: usize = 6;

type Runs = &'static [(i64, usize)];

/// Sign data for the five group generators, run-length encoded per
/// coordinate block (15 + 15 + 10 variables).
const SIGN_RUNS: [[Runs; 3]; 5] = [
    [
        &[(1, 7), (-1, 2), (1, 1), (-1, 1), (1, 2), (-1, 1), (1, 1)],
        &[(-1, 1), (1, 14)],
        &[(-1, 4), (1, 6)],
    ],
    [
        &[(1, 2), (-1, 1), (1, 2), (-1, 1), (1, 1), (-1, 2), (1, 1), (-1, 2), (1, 3)],
        &[(1, 5), (-1, 1), (1, 9)],
        &[(-1, 1), (1, 6), (-1, 3)],
    ],
    [
        &[(1, 3), (-1, 6), (1, 6)],
        &[(1, 9), (-1, 1), (1, 5)],
        &[(1, 2), (-1, 3), (1, 4), (-1, 1)],
    ],
    [
        &[(1, 13), (-1, 2)],
        &[(1, 12), (-1, 1), (1, 2)],
        &[(-1, 1), (1, 2), (-1, 1), (1, 2), (-1, 2), (1, 2)],
    ],
    [
        &[(1, 1), (-1, 2), (1, 8), (-1, 1), (1, 2), (-1, 1)],
        &[(1, 14), (-1, 1)],
        &[(-1, 2), (1, 2), (-1, 1), (1, 4), (-1, 1)],
    ],
];

const BLOCK_LENGTHS: [usize; 3] = [15, 15, 10];

/// Expand the run-length sign table into one ±1 vector of length 40 per
/// generator.  Every block must expand to its exact coordinate count; a
/// mismatch means the table itself was mistranscribed.
pub fn expanded_signs() -> Vec<Vec<i64>> {
    SIGN_RUNS
        .iter()
        .enumerate()
        .map(|(g, blocks)| {
            let mut v: Vec<i64> = Vec::with_capacity(40);
            for (b, runs) in blocks.iter().enumerate() {
                let expanded: usize = runs.iter().map(|(_, n)| n).sum();
                assert_eq!(
                    expanded, BLOCK_LENGTHS[b],
                    "sign runs for generator {} expand to {} entries in block {}, wanted {}",
                    g + 1,
                    expanded,
                    b + 1,
                    BLOCK_LENGTHS[b]
                );
                for &(value, count) in *runs {
                    v.extend(std::iter::repeat(value).take(count));
                }
            }
            v
        })
        .collect()
}

/// Saturate `part_one + G·part_two` at the product of all variables, going
/// through the two parts separately first.  `weights` must be a strictly
/// positive vector making every generator (and hence every orbit image)
/// homogeneous, so the saturations can use a weighted ordering.
pub fn two_stage_saturated_sum(
    part_one: &Ideal,
    part_two: &Ideal,
    group: &SymmetryGroup,
    weights: &[gitfan_math::Int],
) -> Result<Ideal, PolyError> {
    let r = part_one.nvars();
    assert_eq!(part_two.nvars(), r, "parts over different rings");

    let mut orbit_gens: Vec<Polynomial> = Vec::new();
    for e in group.elements() {
        for g in part_two.gens() {
            let image = act_on_polynomial(e, g);
            if !orbit_gens.contains(&image) {
                orbit_gens.push(image);
            }
        }
    }

    let sat_one = saturate_product(part_one, r, weights)?;
    let sat_two = saturate_product(&Ideal::new(r, orbit_gens), r, weights)?;
    let mut joined = sat_one;
    joined.extend(sat_two);
    let total = saturate_product(&Ideal::new(r, joined), r, weights)?;
    Ok(Ideal::new(r, total))
}

/// Assemble the complete forty-variable ideal from the bundled problem.
/// This is the expensive entry point behind the `--i-know-this-is-huge`
/// gate: the final saturation alone runs for hours.
pub fn build_m06_ideal(spec: &ProblemSpec) -> Result<Ideal, PolyError> {
    let r = spec.var_count();
    let gens = spec.ideal().gens();
    assert!(gens.len() > M06_SPLIT, "expected the two-part generator list");
    let part_one = Ideal::new(r, gens[..M06_SPLIT].to_vec());
    let part_two = Ideal::new(r, gens[M06_SPLIT..].to_vec());
    let weights = find_positive_weight(
        &spec.grading().row_vecs(),
        r,
        FaceIndexSet::full(r),
    )
    .ok_or(PolyError::NonPositiveWeight)?;
    two_stage_saturated_sum(&part_one, &part_two, spec.group(), &weights)
}
