//! Problem files: a JSON description of a graded ring with an ideal and an
//! optional variable symmetry.  Parsing compiles the file into the library
//! types and checks every structural invariant up front, so the commands
//! can assume a well-formed problem.

use gitfan_math::{rat, IntMatrix};
use gitfan_poly::{line_col, parse_polynomial_named, Ideal, Polynomial};
use gitfan_symmetry::{
    group_closure, SignedPermutation, SymmetryGroup, DEFAULT_ELEMENT_BOUND,
};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;

/// Methods accepted in the `options.method` field and the `--method` flag.
pub const METHOD_NAMES: [&str; 3] = ["fast", "sat", "ra"];

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
#[serde(deny_unknown_fields)]
pub struct RawGroup {
    /// Generators in cycle notation on 1-based variable indices, e.g.
    /// `"(1,2)(3,4)"`.  An empty list means the trivial group.
    #[serde(default)]
    pub perms: Vec<String>,
    /// Optional per-generator sign vectors, one entry of ±1 per variable.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<Vec<i64>>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
#[serde(deny_unknown_fields)]
pub struct RawOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restrict_moving: Option<bool>,
    /// One of `fast`, `sat`, `ra`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checkpoint: Option<String>,
}

/// The file exactly as written: variable names, generator strings, the
/// grading by rows, and the symmetry section.  Kept verbatim so a problem
/// can be printed back out unchanged.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RawProblem {
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    #[serde(rename = "Q")]
    pub q: Vec<Vec<i64>>,
    #[serde(default)]
    pub group: RawGroup,
    #[serde(default)]
    pub options: RawOptions,
}

/// A compiled problem: the raw file plus the library objects built from it.
/// The group is the full closure of the declared generators and carries the
/// induced linear maps on the grading space.
#[derive(Clone, Debug)]
pub struct ProblemSpec {
    raw: RawProblem,
    q: IntMatrix,
    ideal: Ideal,
    group: SymmetryGroup,
}

impl PartialEq for ProblemSpec {
    fn eq(&self, other: &Self) -> bool {
        // The compiled parts are functions of the raw file.
        self.raw == other.raw
    }
}

impl ProblemSpec {
    pub fn raw(&self) -> &RawProblem {
        &self.raw
    }

    pub fn vars(&self) -> &[String] {
        &self.raw.vars
    }

    pub fn var_count(&self) -> usize {
        self.raw.vars.len()
    }

    pub fn grading(&self) -> &IntMatrix {
        &self.q
    }

    pub fn grading_rank(&self) -> usize {
        self.q.rows()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn group(&self) -> &SymmetryGroup {
        &self.group
    }

    pub fn options(&self) -> &RawOptions {
        &self.raw.options
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValidationKind {
    /// Row lengths or structural counts disagree with the variable list.
    VarCount,
    /// The grading matrix rows are linearly dependent.
    FullRank,
    /// An ideal generator is not homogeneous under the grading.
    NotHomogeneous,
    /// The group section does not describe a symmetry of the input.
    Group,
    /// A sign vector is malformed.
    Signs,
    /// Anything else structurally wrong with the file.
    Shape,
}

impl fmt::Display for ValidationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ValidationKind::VarCount => "variable count",
            ValidationKind::FullRank => "full rank",
            ValidationKind::NotHomogeneous => "homogeneity",
            ValidationKind::Group => "group",
            ValidationKind::Signs => "signs",
            ValidationKind::Shape => "shape",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProblemError {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("validation error ({kind}): {msg}")]
    Validation { kind: ValidationKind, msg: String },
}

impl ProblemError {
    pub fn kind(&self) -> Option<ValidationKind> {
        match self {
            ProblemError::Parse { .. } => None,
            ProblemError::Validation { kind, .. } => Some(*kind),
        }
    }
}

fn invalid(kind: ValidationKind, msg: impl Into<String>) -> ProblemError {
    ProblemError::Validation { kind, msg: msg.into() }
}

/// Parse and validate a problem file.  Syntax errors (in the JSON or in a
/// generator string) carry a line and column; everything else is reported
/// as a validation error with a kind.
pub fn parse_problem(text: &str) -> Result<ProblemSpec, ProblemError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| ProblemError::Parse {
        line: e.line(),
        col: e.column(),
        msg: e.to_string(),
    })?;
    compile_problem(raw)
}

/// Validate an already-deserialized file and build the compiled problem.
pub fn compile_problem(raw: RawProblem) -> Result<ProblemSpec, ProblemError> {
    let r = raw.vars.len();
    if r == 0 {
        return Err(invalid(ValidationKind::Shape, "no variables declared"));
    }
    let mut seen = HashSet::new();
    for v in &raw.vars {
        if !seen.insert(v.as_str()) {
            return Err(invalid(
                ValidationKind::Shape,
                format!("variable {v:?} declared twice"),
            ));
        }
    }

    if raw.q.is_empty() {
        return Err(invalid(ValidationKind::Shape, "the grading matrix has no rows"));
    }
    let k = raw.q.len();
    for (i, row) in raw.q.iter().enumerate() {
        if row.len() != r {
            return Err(invalid(
                ValidationKind::VarCount,
                format!(
                    "grading row {} has {} entries but there are {} variables",
                    i + 1,
                    row.len(),
                    r
                ),
            ));
        }
    }
    let q = IntMatrix::from_rows(&raw.q);
    let rank = q.rank();
    if rank != k {
        return Err(invalid(
            ValidationKind::FullRank,
            format!("the grading matrix has rank {rank} but {k} rows"),
        ));
    }

    let mut gens: Vec<Polynomial> = Vec::with_capacity(raw.ideal.len());
    for (i, src) in raw.ideal.iter().enumerate() {
        let p = parse_polynomial_named(src, &raw.vars).map_err(|e| {
            let (line, col) = line_col(src, e.offset);
            ProblemError::Parse {
                line,
                col,
                msg: format!("ideal generator {}: {}", i + 1, e.msg),
            }
        })?;
        gens.push(p);
    }
    let grading_rows = q.row_vecs();
    for (i, g) in gens.iter().enumerate() {
        let single = Ideal::new(r, vec![g.clone()]);
        if !single.is_homogeneous_for(&grading_rows) {
            return Err(invalid(
                ValidationKind::NotHomogeneous,
                format!("ideal generator {} is not homogeneous under the grading", i + 1),
            ));
        }
    }
    let ideal = Ideal::new(r, gens);

    if let Some(signs) = &raw.group.signs {
        if signs.len() != raw.group.perms.len() {
            return Err(invalid(
                ValidationKind::Signs,
                format!(
                    "{} sign vectors for {} group generators",
                    signs.len(),
                    raw.group.perms.len()
                ),
            ));
        }
    }
    let mut group_gens: Vec<SignedPermutation> = Vec::with_capacity(raw.group.perms.len());
    for (i, cycles) in raw.group.perms.iter().enumerate() {
        let perm = SignedPermutation::from_cycles(cycles, r).map_err(|e| {
            invalid(ValidationKind::Group, format!("group generator {}: {e}", i + 1))
        })?;
        let perm = match &raw.group.signs {
            Some(signs) => {
                let s = &signs[i];
                if s.len() != r {
                    return Err(invalid(
                        ValidationKind::Signs,
                        format!(
                            "sign vector {} has {} entries but there are {} variables",
                            i + 1,
                            s.len(),
                            r
                        ),
                    ));
                }
                if let Some(bad) = s.iter().find(|v| **v != 1 && **v != -1) {
                    return Err(invalid(
                        ValidationKind::Signs,
                        format!("sign vector {} contains {bad}; only 1 and -1 are allowed", i + 1),
                    ));
                }
                perm.with_signs(s.iter().map(|v| rat(*v, 1)).collect())
                    .map_err(|e| invalid(ValidationKind::Signs, e.to_string()))?
            }
            None => perm,
        };
        group_gens.push(perm);
    }
    let group = if group_gens.is_empty() {
        SymmetryGroup::trivial(r)
    } else {
        group_closure(&group_gens, DEFAULT_ELEMENT_BOUND)
            .map_err(|e| invalid(ValidationKind::Group, e.to_string()))?
    };
    let group = group.with_induced(&q).map_err(|e| {
        invalid(
            ValidationKind::Group,
            format!("the grading does not descend along the group: {e}"),
        )
    })?;

    if let Some(m) = &raw.options.method {
        if !METHOD_NAMES.contains(&m.as_str()) {
            return Err(invalid(
                ValidationKind::Shape,
                format!("unknown method {m:?}; expected one of {METHOD_NAMES:?}"),
            ));
        }
    }

    Ok(ProblemSpec { raw, q, ideal, group })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal(vars: &str, ideal: &str, q: &str) -> String {
        format!("{{\"vars\": {vars}, \"ideal\": {ideal}, \"Q\": {q}}}")
    }

    #[test]
    fn a_problem_without_group_gets_the_trivial_one() {
        let text = minimal("[\"T1\", \"T2\"]", "[]", "[[1, 1]]");
        let spec = parse_problem(&text).unwrap();
        assert_eq!(spec.group().len(), 1);
        assert_eq!(spec.var_count(), 2);
        assert_eq!(spec.grading_rank(), 1);
        assert!(spec.ideal().is_zero());
    }

    #[test]
    fn json_syntax_errors_carry_their_position() {
        let err = parse_problem("{\n  \"vars\": [,]\n}").unwrap_err();
        match err {
            ProblemError::Parse { line, col, .. } => {
                assert_eq!(line, 2);
                assert!(col > 0);
            }
            other => panic!("wanted a parse error, got {other:?}"),
        }
    }

    #[test]
    fn a_broken_exponent_is_a_parse_error_with_position() {
        let text = minimal("[\"T1\"]", "[\"T(1)^^2\"]", "[[1]]");
        let err = parse_problem(&text).unwrap_err();
        match err {
            ProblemError::Parse { line, col, msg } => {
                assert_eq!(line, 1);
                assert_eq!(col, 6, "position of the second caret");
                assert!(msg.contains("generator 1"), "{msg}");
            }
            other => panic!("wanted a parse error, got {other:?}"),
        }
    }

    #[test]
    fn dependent_grading_rows_are_rejected() {
        let text = minimal("[\"T1\", \"T2\"]", "[]", "[[1, 1], [2, 2]]");
        let err = parse_problem(&text).unwrap_err();
        assert_eq!(err.kind(), Some(ValidationKind::FullRank));
    }

    #[test]
    fn row_length_must_match_the_variable_count() {
        let text = minimal("[\"T1\", \"T2\"]", "[]", "[[1, 1, 1]]");
        let err = parse_problem(&text).unwrap_err();
        assert_eq!(err.kind(), Some(ValidationKind::VarCount));
    }

    #[test]
    fn inhomogeneous_generators_are_rejected() {
        let text = minimal("[\"T1\", \"T2\"]", "[\"T1 + T2*T2\"]", "[[1, 1]]");
        let err = parse_problem(&text).unwrap_err();
        assert_eq!(err.kind(), Some(ValidationKind::NotHomogeneous));
    }

    #[test]
    fn the_group_must_act_on_the_grading() {
        // Swapping variables of different degree admits no induced map.
        let text = "{\"vars\": [\"T1\", \"T2\"], \"ideal\": [], \"Q\": [[1, 2]], \
                    \"group\": {\"perms\": [\"(1,2)\"]}}";
        let err = parse_problem(text).unwrap_err();
        assert_eq!(err.kind(), Some(ValidationKind::Group));
    }

    #[test]
    fn sign_entries_outside_plus_minus_one_are_rejected()  {
        let text = "{\"vars\": [\"T1\", \"T2\"], \"ideal\": [], \"Q\": [[1, 1]], \
                    \"group\": {\"perms\": [\"(1,2)\"], \"signs\": [[1, 2]]}}";
        let err = parse_problem(text).unwrap_err();
        assert_eq!(err.kind(), Some(ValidationKind::Signs));
    }
}
