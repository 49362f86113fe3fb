//! Output formatting.  Everything here is deterministic: struct fields are
//! serialized in declaration order, list orders come from the library's
//! canonical sorts, and a single-threaded rerun reproduces the bytes.

use crate::problem::ProblemSpec;
use gitfan_cones::Cone;
use gitfan_core::{orbit_adjacency_graph, GitFanResult, MovingConeSummary};
use gitfan_math::Int;
use num_traits::ToPrimitive;
use serde::Serialize;

fn pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("output types always encode");
    out.push('\n');
    out
}

/// The problem exactly as parsed, printed back in the file layout.
pub fn emit_problem_json(spec: &ProblemSpec) -> String {
    pretty(spec.raw())
}

/// The full fan result.
pub fn emit_result_json(result: &GitFanResult) -> String {
    pretty(result)
}

/// The orbit-level adjacency graph in DOT form: one node per orbit labeled
/// by the orbit length, one undirected edge per adjacent pair (self-loops
/// mean two chambers of the same orbit share a wall).  An empty graph is
/// still a valid document.
pub fn emit_dot(result: &GitFanResult) -> String {
    let graph = orbit_adjacency_graph(result);
    let mut out = String::from("graph orbits {\n");
    for (i, len) in result.orbit_lengths.iter().enumerate() {
        out.push_str(&format!("  o{i} [label=\"{len}\"];\n"));
    }
    for e in &graph.edges {
        out.push_str(&format!(
            "  o{} -- o{} [label=\"{}\"];\n",
            e.orbit_a, e.orbit_b, e.crossings
        ));
    }
    out.push_str("}\n");
    out
}

fn rows_to_i64(rows: &[Vec<Int>]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|v| v.to_i64().expect("canonical facet data fits in i64"))
                .collect()
        })
        .collect()
}

#[derive(Serialize)]
struct MovingOut {
    ambient: usize,
    facet_count: usize,
    facet_normals: Vec<Vec<i64>>,
    equations: Vec<Vec<i64>>,
}

/// Irredundant facet description of the intersection of the leave-one-out
/// projections.
pub fn emit_moving_json(summary: &MovingConeSummary) -> String {
    pretty(&MovingOut {
        ambient: summary.ambient,
        facet_count: summary.facet_normals.len(),
        facet_normals: rows_to_i64(&summary.facet_normals),
        equations: rows_to_i64(&summary.equations),
    })
}

#[derive(Serialize)]
struct DualOut<'a> {
    semiample: &'a Cone,
    mori: &'a Cone,
}

/// The distinguished chamber and its dual cone.
pub fn emit_dual_json(semiample: &Cone, mori: &Cone) -> String {
    pretty(&DualOut { semiample, mori })
}
