//! Durable traversal snapshots: enough state to continue an interrupted
//! enumeration in a fresh process, stored as versioned JSON.

use crate::traverse::AdjacencyEdge;
use crate::CoreError;
use gitfan_cones::Cone;
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const CHECKPOINT_VERSION: u32 = 1;

/// One pending frontier crossing: the representative whose facet is open and
/// the canonical inner normal selecting which facet.  The facet object is
/// rebuilt on resume from the representative's canonical form, so nothing
/// geometric needs to be stored beyond the normal.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FrontierRecord {
    pub owner: usize,
    pub normal: Vec<i64>,
}

/// Serialized traversal state.  The table keys and the input digest pin the
/// snapshot to one specific computation; resuming against anything else is
/// rejected.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckpointState {
    pub version: u32,
    pub dataset_digest: String,
    /// Canonical keys of the table members, in table order.
    pub omega_keys: Vec<String>,
    /// The sorted membership-fingerprint list, as decimal strings.
    pub hashes: Vec<String>,
    pub representatives: Vec<Cone>,
    /// Fingerprint of each representative, aligned with `representatives`.
    pub rep_hashes: Vec<String>,
    pub orbit_lengths: Vec<usize>,
    pub adjacency: Vec<AdjacencyEdge>,
    pub frontier: Vec<FrontierRecord>,
}

impl CheckpointState {
    pub fn save(&self, path: &Path) -> Result<(), CoreError> {
        let body = serde_json::to_string_pretty(self)
            .map_err(|e| CoreError::Checkpoint(format!("encode failed: {e}")))?;
        // Write to a sibling then rename so a crash mid-write never leaves a
        // truncated snapshot behind.
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, body)
            .map_err(|e| CoreError::Checkpoint(format!("write {} failed: {e}", tmp.display())))?;
        std::fs::rename(&tmp, path)
            .map_err(|e| CoreError::Checkpoint(format!("rename to {} failed: {e}", path.display())))
    }

    pub fn load(path: &Path) -> Result<CheckpointState, CoreError> {
        let body = std::fs::read_to_string(path)
            .map_err(|e| CoreError::Checkpoint(format!("read {} failed: {e}", path.display())))?;
        let state: CheckpointState = serde_json::from_str(&body)
            .map_err(|e| CoreError::Checkpoint(format!("decode failed: {e}")))?;
        if state.version != CHECKPOINT_VERSION {
            return Err(CoreError::CheckpointMismatch(format!(
                "snapshot version {} is not {CHECKPOINT_VERSION}",
                state.version
            )));
        }
        Ok(state)
    }
}
