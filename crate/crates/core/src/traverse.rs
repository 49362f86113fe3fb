//! Chamber traversal: starting-point selection, facet crossing, the plain
//! and symmetry-reduced enumeration loops, and the derived adjacency and
//! summary data.
//!
//! The loop walks the full-dimensional chambers of the common refinement by
//! crossing interior facets.  Everything is driven by membership
//! fingerprints against the cone table: a candidate point on the far side of
//! a facet is accepted once its fingerprint proves the facet belongs to the
//! chamber found there (a subset test on bits) and the crossing direction is
//! dual-feasible.  No ray computation happens on rejected candidates.

use crate::checkpoint::{CheckpointState, FrontierRecord, CHECKPOINT_VERSION};
use crate::hash::{act_on_hash, ConeHash};
use crate::table::{hash_of, OrbitConeTable};
use crate::CoreError;
use gitfan_cones::{facets, interior_witness, Cone, Facet};
use gitfan_math::lp::halfspace_implied;
use gitfan_math::vector::int_to_rat;
use gitfan_math::{rat, Int, Rat};
use gitfan_symmetry::{act_on_cone, SymmetryGroup};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

/// An open facet awaiting its crossing: the facet itself, a point interior
/// to both the facet and the walk's region (where the crossing happens),
/// plus the inner normal and index of the chamber that contributed it.
#[derive(Clone, Debug)]
pub struct FrontierEntry {
    facet: Facet,
    crossing_point: Vec<Rat>,
    inner_normal: Vec<Int>,
    owner_orbit: usize,
}

impl FrontierEntry {
    pub fn new(facet: Facet, crossing_point: Vec<Rat>, owner_orbit: usize) -> FrontierEntry {
        let inner_normal = facet.supporting_normal().to_vec();
        FrontierEntry {
            facet,
            crossing_point,
            inner_normal,
            owner_orbit,
        }
    }

    pub fn facet(&self) -> &Facet {
        &self.facet
    }

    /// Point in the facet's relative interior, inside the walk's region,
    /// from which the crossing steps off.
    pub fn crossing_point(&self) -> &[Rat] {
        &self.crossing_point
    }

    /// Inner normal of the contributing chamber at this facet.
    pub fn inner_normal(&self) -> &[Int] {
        &self.inner_normal
    }

    pub fn owner_orbit(&self) -> usize {
        self.owner_orbit
    }
}

/// Undirected edge between two orbit indices; `crossings` counts how many
/// facet crossings connected them during the traversal (an artifact of the
/// walk order, recorded for diagnostics — the graph structure is what is
/// contractual).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AdjacencyEdge {
    pub orbit_a: usize,
    pub orbit_b: usize,
    pub crossings: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FanStatistics {
    /// Total number of maximal cones, i.e. the sum of the orbit lengths.
    pub maximal_cones: usize,
    /// Number of distinct extreme-ray directions over all maximal cones.
    pub fan_rays: usize,
    /// (orbit length, number of orbits of that length), ascending.
    pub orbit_length_histogram: Vec<(usize, usize)>,
}

/// Output of a traversal: one representative chamber per orbit (every
/// chamber, in plain mode), aligned orbit lengths and fingerprints, the
/// orbit adjacency data, the support the walk was restricted to, and
/// summary statistics.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GitFanResult {
    pub representatives: Vec<Cone>,
    pub orbit_lengths: Vec<usize>,
    /// Decimal fingerprint of each representative, aligned with
    /// `representatives`.
    pub hashes: Vec<String>,
    pub adjacency: Vec<AdjacencyEdge>,
    pub support: Cone,
    pub statistics: FanStatistics,
}

/// Orbit-level adjacency graph extracted from a result.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct OrbitGraph {
    pub vertex_count: usize,
    pub edges: Vec<AdjacencyEdge>,
}

impl OrbitGraph {
    pub fn multiplicity(&self, a: usize, b: usize) -> usize {
        let (a, b) = (a.min(b), a.max(b));
        self.edges
            .iter()
            .find(|e| e.orbit_a == a && e.orbit_b == b)
            .map_or(0, |e| e.crossings)
    }

    pub fn has_self_loop(&self, v: usize) -> bool {
        self.multiplicity(v, v) > 0
    }

    /// Connectivity over the undirected edge set (self-loops ignored).
    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count <= 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            if e.orbit_a != e.orbit_b {
                adj[e.orbit_a].push(e.orbit_b);
                adj[e.orbit_b].push(e.orbit_a);
            }
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn orbit_adjacency_graph(result: &GitFanResult) -> OrbitGraph {
    OrbitGraph {
        vertex_count: result.orbit_lengths.len(),
        edges: result.adjacency.clone(),
    }
}

/// The unique orbit of length one is the distinguished chamber; its dual is
/// the second cone of the returned pair.
pub fn extract_semiample_and_mori(result: &GitFanResult) -> Result<(Cone, Cone), CoreError> {
    let fixed: Vec<usize> = (0..result.orbit_lengths.len())
        .filter(|&i| result.orbit_lengths[i] == 1)
        .collect();
    match fixed.as_slice() {
        [i] => {
            let semiample = result.representatives[*i].clone();
            let mori = semiample.dual();
            Ok((semiample, mori))
        }
        _ => Err(CoreError::NoUniqueFixedOrbit),
    }
}

#[derive(Clone, Debug, Default)]
pub struct TraversalOptions {
    /// Where snapshots go; no file is ever written when absent.
    pub checkpoint_path: Option<std::path::PathBuf>,
    /// Snapshot after this many newly admitted representatives (0 = only
    /// when suspending).
    pub checkpoint_every: usize,
    /// Continue from a previously saved snapshot instead of starting fresh.
    pub resume_from: Option<CheckpointState>,
    /// Stop after this many frontier batches and return the suspended state
    /// (used to exercise resumability).
    pub batch_limit: Option<usize>,
    /// Identifier of the input data, stamped into snapshots and verified on
    /// resume.
    pub dataset_digest: String,
}

#[derive(Debug)]
pub enum TraversalOutcome {
    Complete(GitFanResult),
    Suspended(CheckpointState),
}

impl TraversalOutcome {
    #[track_caller]
    pub fn unwrap_complete(self) -> GitFanResult {
        match self {
            TraversalOutcome::Complete(r) => r,
            TraversalOutcome::Suspended(_) => panic!("traversal was suspended, not complete"),
        }
    }
}

/// Deterministic starting chamber: try the sum of all members' relative
/// interior points; then that sum nudged by j/2^j times the first ray of the
/// first member; then each member's own interior point; then sums of
/// interior points weighted by powers of a small base.  A candidate is
/// accepted when it lies in the relative interior of the support and its
/// chamber is full-dimensional.  At most 64 candidates are examined.
pub fn starting_point(
    table: &OrbitConeTable,
    support: &Cone,
) -> Result<(Vec<Rat>, ConeHash, Cone), CoreError> {
    let dim = table.ambient_dim();
    let relints: Vec<Vec<Rat>> = table
        .cones()
        .iter()
        .map(|c| c.relative_interior_point())
        .collect();

    let mut candidates: Vec<Vec<Rat>> = Vec::new();
    let mut sum = vec![Rat::from_integer(Int::from(0)); dim];
    for p in &relints {
        for (s, x) in sum.iter_mut().zip(p) {
            *s += x;
        }
    }
    candidates.push(sum.clone());
    if let Some(ray) = table.cones().iter().flat_map(|c| c.rays().iter()).next() {
        let ray = int_to_rat(ray);
        for j in 1..=24i64 {
            let scale = rat(j, 1i64 << j);
            let w: Vec<Rat> = sum
                .iter()
                .zip(&ray)
                .map(|(s, r)| s + &scale * r)
                .collect();
            candidates.push(w);
        }
    }
    candidates.extend(relints.iter().cloned());
    for t in [2i64, 3, 5, 7] {
        let mut w = vec![Rat::from_integer(Int::from(0)); dim];
        for (i, p) in relints.iter().enumerate() {
            let scale = Rat::from_integer(Int::from(t).pow(i as u32 + 1));
            for (s, x) in w.iter_mut().zip(p) {
                *s += &scale * x;
            }
        }
        candidates.push(w);
    }
    candidates.truncate(64);

    for w in candidates {
        if !support.contains_in_relint(&w) {
            continue;
        }
        let bits = table.membership_hash(&w);
        if bits.is_zero() {
            continue;
        }
        let lam = table.intersection_cone(&bits);
        if lam.dim() == dim {
            return Ok((w, bits, lam));
        }
    }
    Err(CoreError::NoFullDimStart)
}

/// Cross one interior facet: pick a point just past the facet's interior
/// point along the negated inner normal, halving the step until the point's
/// fingerprint certifies the far chamber.  Acceptance means (a) the facet's
/// bits are a superset of the point's — i.e. the facet is a face of the
/// chamber found — and (b) the negated normal is valid on that chamber, so
/// the facet is shared and the chamber lies on the far side.  Together with
/// the point lying strictly past the facet's hyperplane this forces the
/// chamber to be full-dimensional and adjacent across exactly this facet.
pub fn find_neighbor(
    table: &OrbitConeTable,
    entry: &FrontierEntry,
    support: &Cone,
) -> Result<(Vec<Rat>, ConeHash, Cone), CoreError> {
    let p = entry.crossing_point.clone();
    let v = int_to_rat(&entry.inner_normal);
    let facet_bits = table.membership_hash(&p);
    let neg_v: Vec<Int> = entry.inner_normal.iter().map(|x| -x).collect();

    let mut eps = rat(1, 1);
    for _ in 0..64 {
        let w: Vec<Rat> = p.iter().zip(&v).map(|(pi, vi)| pi - &eps * vi).collect();
        eps /= rat(2, 1);
        if !support.contains_in_relint(&w) {
            continue;
        }
        let bits = table.membership_hash(&w);
        if bits.is_zero() || !bits.is_subset_of(&facet_bits) {
            continue;
        }
        debug_assert_ne!(bits, facet_bits, "the crossing point cannot sit on the facet");
        let (ineqs, eqns) = table.constraint_rows(&bits);
        if !halfspace_implied(&ineqs, &eqns, &neg_v) {
            continue;
        }
        let lam = Cone::from_inequalities(table.ambient_dim(), &ineqs, &eqns)
            .expect("constraint rows live in the table's space");
        return Ok((w, bits, lam));
    }
    Err(CoreError::NoNeighbor)
}

struct Engine<'a> {
    table: &'a OrbitConeTable,
    support: &'a Cone,
    /// Number of group elements driving orbit identification; 1 gives the
    /// plain walk over every chamber.
    element_count: usize,
    reps: Vec<Cone>,
    rep_hashes: Vec<ConeHash>,
    orbit_lengths: Vec<usize>,
    /// Sorted fingerprint values of the admitted representatives.
    hash_list: Vec<BigUint>,
    /// Every group image of every admitted fingerprint, mapped to its orbit.
    image_to_orbit: BTreeMap<BigUint, usize>,
    adjacency: BTreeMap<(usize, usize), usize>,
    frontier: BTreeMap<Vec<u8>, FrontierEntry>,
    reps_at_snapshot: usize,
}

impl<'a> Engine<'a> {
    fn fresh(
        table: &'a OrbitConeTable,
        support: &'a Cone,
        element_count: usize,
    ) -> Result<Engine<'a>, CoreError> {
        let mut engine = Engine {
            table,
            support,
            element_count,
            reps: Vec::new(),
            rep_hashes: Vec::new(),
            orbit_lengths: Vec::new(),
            hash_list: Vec::new(),
            image_to_orbit: BTreeMap::new(),
            adjacency: BTreeMap::new(),
            frontier: BTreeMap::new(),
            reps_at_snapshot: 0,
        };
        let (_w0, bits0, lam0) = starting_point(table, support)?;
        engine.admit(lam0, bits0, None);
        Ok(engine)
    }

    fn resume(
        table: &'a OrbitConeTable,
        support: &'a Cone,
        element_count: usize,
        state: &CheckpointState,
        expected_digest: &str,
    ) -> Result<Engine<'a>, CoreError> {
        if state.version != CHECKPOINT_VERSION {
            return Err(CoreError::CheckpointMismatch(format!(
                "snapshot version {} is not {CHECKPOINT_VERSION}",
                state.version
            )));
        }
        if state.dataset_digest != expected_digest {
            return Err(CoreError::CheckpointMismatch(format!(
                "snapshot is for input {} but this run is {}",
                state.dataset_digest, expected_digest
            )));
        }
        let table_keys: Vec<String> = table
            .keys()
            .iter()
            .map(|k| String::from_utf8(k.clone()).expect("canonical keys are ascii"))
            .collect();
        if state.omega_keys != table_keys {
            return Err(CoreError::CheckpointMismatch(
                "snapshot was taken against a different cone table".into(),
            ));
        }
        let n = state.representatives.len();
        if state.rep_hashes.len() != n || state.orbit_lengths.len() != n {
            return Err(CoreError::CheckpointMismatch(
                "snapshot representative data is inconsistent".into(),
            ));
        }

        let mut engine = Engine {
            table,
            support,
            element_count,
            reps: state.representatives.clone(),
            rep_hashes: Vec::with_capacity(n),
            orbit_lengths: state.orbit_lengths.clone(),
            hash_list: Vec::with_capacity(n),
            image_to_orbit: BTreeMap::new(),
            adjacency: state
                .adjacency
                .iter()
                .map(|e| ((e.orbit_a, e.orbit_b), e.crossings))
                .collect(),
            frontier: BTreeMap::new(),
            reps_at_snapshot: n,
        };

        for (idx, (rep, stored)) in state
            .representatives
            .iter()
            .zip(&state.rep_hashes)
            .enumerate()
        {
            let bits = ConeHash::from_decimal(stored, table.len()).ok_or_else(|| {
                CoreError::CheckpointMismatch(format!("fingerprint {idx} does not parse"))
            })?;
            if hash_of(table, rep) != bits {
                return Err(CoreError::CheckpointMismatch(format!(
                    "representative {idx} does not match its stored fingerprint"
                )));
            }
            let mut images = BTreeSet::new();
            for e in 0..engine.element_count {
                images.insert(act_on_hash(table.index_perm(e), &bits));
            }
            if images.len() != state.orbit_lengths[idx] {
                return Err(CoreError::CheckpointMismatch(format!(
                    "representative {idx} has orbit length {} here, {} in the snapshot",
                    images.len(),
                    state.orbit_lengths[idx]
                )));
            }
            for img in images {
                engine.image_to_orbit.insert(img.value().clone(), idx);
            }
            engine.rep_hashes.push(bits);
        }
        engine.hash_list = state
            .hashes
            .iter()
            .map(|s| {
                ConeHash::from_decimal(s, table.len())
                    .map(|h| h.value().clone())
                    .ok_or_else(|| {
                        CoreError::CheckpointMismatch("stored fingerprint does not parse".into())
                    })
            })
            .collect::<Result<_, _>>()?;
        if !engine.hash_list.windows(2).all(|w| w[0] < w[1]) {
            return Err(CoreError::CheckpointMismatch(
                "stored fingerprint list is not strictly sorted".into(),
            ));
        }

        for rec in &state.frontier {
            if rec.owner >= n {
                return Err(CoreError::CheckpointMismatch(
                    "frontier refers to a missing representative".into(),
                ));
            }
            let normal: Vec<Int> = rec.normal.iter().map(|&x| Int::from(x)).collect();
            let facet = facets(&engine.reps[rec.owner])
                .into_iter()
                .find(|f| f.supporting_normal() == normal.as_slice())
                .ok_or_else(|| {
                    CoreError::CheckpointMismatch(
                        "frontier normal is not a facet of its representative".into(),
                    )
                })?;
            let witness = interior_witness(&facet, support).ok_or_else(|| {
                CoreError::CheckpointMismatch(
                    "frontier facet does not meet the region's interior".into(),
                )
            })?;
            let key = facet.cone().canonical_key();
            let entry = FrontierEntry::new(facet, witness, rec.owner);
            if engine.frontier.insert(key, entry).is_some() {
                return Err(CoreError::CheckpointMismatch(
                    "frontier contains a duplicate facet".into(),
                ));
            }
        }
        Ok(engine)
    }

    fn add_edge(&mut self, a: usize, b: usize) {
        let key = (a.min(b), a.max(b));
        *self.adjacency.entry(key).or_insert(0) += 1;
    }

    /// Record a newly discovered representative: index it, register every
    /// group image of its fingerprint, and toggle its interior facets into
    /// the frontier.
    fn admit(&mut self, lam: Cone, bits: ConeHash, owner: Option<usize>) -> usize {
        assert_eq!(
            lam.dim(),
            self.table.ambient_dim(),
            "traversal reached a non-maximal cone"
        );
        let idx = self.reps.len();
        match self.hash_list.binary_search(bits.value()) {
            Err(pos) => self.hash_list.insert(pos, bits.value().clone()),
            Ok(_) => unreachable!("fingerprint admitted twice"),
        }
        let mut images = BTreeSet::new();
        for e in 0..self.element_count {
            images.insert(act_on_hash(self.table.index_perm(e), &bits));
        }
        self.orbit_lengths.push(images.len());
        for img in images {
            let previous = self.image_to_orbit.insert(img.value().clone(), idx);
            assert!(previous.is_none(), "fingerprint orbits overlap");
        }
        if let Some(o) = owner {
            self.add_edge(o, idx);
        }
        for f in facets(&lam) {
            if let Some(witness) = interior_witness(&f, self.support) {
                let key = f.cone().canonical_key();
                if self.frontier.remove(&key).is_none() {
                    self.frontier.insert(key, FrontierEntry::new(f, witness, idx));
                }
            }
        }
        self.reps.push(lam);
        self.rep_hashes.push(bits);
        idx
    }

    fn snapshot(&self, digest: &str) -> CheckpointState {
        CheckpointState {
            version: CHECKPOINT_VERSION,
            dataset_digest: digest.to_string(),
            omega_keys: self
                .table
                .keys()
                .iter()
                .map(|k| String::from_utf8(k.clone()).expect("canonical keys are ascii"))
                .collect(),
            hashes: self.hash_list.iter().map(|h| h.to_str_radix(10)).collect(),
            representatives: self.reps.clone(),
            rep_hashes: self.rep_hashes.iter().map(|h| h.to_decimal()).collect(),
            orbit_lengths: self.orbit_lengths.clone(),
            adjacency: self
                .adjacency
                .iter()
                .map(|(&(a, b), &m)| AdjacencyEdge {
                    orbit_a: a,
                    orbit_b: b,
                    crossings: m,
                })
                .collect(),
            frontier: self
                .frontier
                .values()
                .map(|e| FrontierRecord {
                    owner: e.owner_orbit,
                    normal: e
                        .inner_normal
                        .iter()
                        .map(|x| x.to_i64().expect("canonical facet normals fit in i64"))
                        .collect(),
                })
                .collect(),
        }
    }

    fn run(mut self, opts: &TraversalOptions) -> Result<TraversalOutcome, CoreError> {
        let mut batches = 0usize;
        loop {
            if self.frontier.is_empty() {
                return Ok(TraversalOutcome::Complete(self.into_result()));
            }
            if let Some(limit) = opts.batch_limit {
                if batches >= limit {
                    let state = self.snapshot(&opts.dataset_digest);
                    if let Some(path) = &opts.checkpoint_path {
                        state.save(path)?;
                    }
                    return Ok(TraversalOutcome::Suspended(state));
                }
            }
            let drained: Vec<FrontierEntry> =
                std::mem::take(&mut self.frontier).into_values().collect();
            let found: Vec<(ConeHash, Cone)> = drained
                .par_iter()
                .map(|e| find_neighbor(self.table, e, self.support).map(|(_, b, c)| (b, c)))
                .collect::<Result<_, _>>()?;
            for (entry, (bits, lam)) in drained.iter().zip(found) {
                if let Some(&orbit) = self.image_to_orbit.get(bits.value()) {
                    self.add_edge(entry.owner_orbit, orbit);
                } else {
                    self.admit(lam, bits, Some(entry.owner_orbit));
                }
            }
            batches += 1;
            if opts.checkpoint_every > 0
                && self.reps.len() - self.reps_at_snapshot >= opts.checkpoint_every
            {
                if let Some(path) = &opts.checkpoint_path {
                    self.snapshot(&opts.dataset_digest).save(path)?;
                    self.reps_at_snapshot = self.reps.len();
                }
            }
        }
    }

    fn into_result(self) -> GitFanResult {
        // Expand every representative through the group; the count
        // cross-checks the orbit bookkeeping, the rays feed the statistics.
        let mut expanded: BTreeMap<Vec<u8>, Cone> = BTreeMap::new();
        for rep in &self.reps {
            for e in 0..self.element_count {
                let img = act_on_cone(self.table.group().induced_for(e), rep);
                expanded.insert(img.canonical_key(), img);
            }
        }
        let total: usize = self.orbit_lengths.iter().sum();
        assert_eq!(expanded.len(), total, "orbit bookkeeping mismatch");
        let mut rays: BTreeSet<Vec<Int>> = BTreeSet::new();
        for c in expanded.values() {
            rays.extend(c.rays().iter().cloned());
        }
        let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
        for &l in &self.orbit_lengths {
            *histogram.entry(l).or_insert(0) += 1;
        }
        GitFanResult {
            hashes: self.rep_hashes.iter().map(|h| h.to_decimal()).collect(),
            representatives: self.reps,
            orbit_lengths: self.orbit_lengths,
            adjacency: self
                .adjacency
                .into_iter()
                .map(|((a, b), m)| AdjacencyEdge {
                    orbit_a: a,
                    orbit_b: b,
                    crossings: m,
                })
                .collect(),
            support: self.support.clone(),
            statistics: FanStatistics {
                maximal_cones: total,
                fan_rays: rays.len(),
                orbit_length_histogram: histogram.into_iter().collect(),
            },
        }
    }
}

fn run_with(
    table: &OrbitConeTable,
    support: &Cone,
    element_count: usize,
    opts: &TraversalOptions,
) -> Result<TraversalOutcome, CoreError> {
    assert!(!table.is_empty(), "traversal needs a nonempty table");
    assert_eq!(
        table.ambient_dim(),
        support.ambient_dim(),
        "support lives in a different space"
    );
    let engine = match &opts.resume_from {
        Some(state) => Engine::resume(table, support, element_count, state, &opts.dataset_digest)?,
        None => Engine::fresh(table, support, element_count)?,
    };
    engine.run(opts)
}

/// Walk every chamber individually (no orbit identification).  The
/// representatives of the result are all maximal cones, each with orbit
/// length 1.
pub fn traverse_plain(table: &OrbitConeTable, support: &Cone) -> Result<GitFanResult, CoreError> {
    Ok(traverse_plain_with(table, support, &TraversalOptions::default())?.unwrap_complete())
}

pub fn traverse_plain_with(
    table: &OrbitConeTable,
    support: &Cone,
    opts: &TraversalOptions,
) -> Result<TraversalOutcome, CoreError> {
    run_with(table, support, 1, opts)
}

/// Walk one representative per group orbit, identifying chambers through
/// the fingerprint action.  The group must be the one the table was built
/// with (the table's index permutations are its action).
pub fn traverse_symmetric(
    table: &OrbitConeTable,
    group: &SymmetryGroup,
    support: &Cone,
) -> Result<GitFanResult, CoreError> {
    Ok(traverse_symmetric_with(table, group, support, &TraversalOptions::default())?
        .unwrap_complete())
}

pub fn traverse_symmetric_with(
    table: &OrbitConeTable,
    group: &SymmetryGroup,
    support: &Cone,
    opts: &TraversalOptions,
) -> Result<TraversalOutcome, CoreError> {
    assert_eq!(
        group.elements(),
        table.group().elements(),
        "the traversal group must match the table's group"
    );
    run_with(table, support, group.len(), opts)
}
