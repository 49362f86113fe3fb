//! Bundled example problems.  Each ships inside the binary with a pinned
//! content digest, so a run can state exactly which revision of the data it
//! was given and a resumed run can refuse data that changed underneath it.

use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy)]
pub struct Dataset {
    pub name: &'static str,
    pub text: &'static str,
    /// SHA-256 of `text`, lowercase hex.
    pub digest: &'static str,
}

pub const CUBE_DIGEST: &str = "1f676253db1d656501ecea45131cbbbde95d6fcb60f5b7f925c98adc77d4529b";
pub const G25_DIGEST: &str = "0e03545d221b0b29d9259b1d87c1e1a731f7d0ff37cc1676f258de3a3611dd69";
pub const M06_DIGEST: &str = "ccb6205aa0a4c9af0d181ad55b694522565d61aa1c1259844952a1ed5ab4c134";

pub const DATASETS: [Dataset; 3] = [
    Dataset {
        name: "cube",
        text: include_str!("../datasets/cube.json"),
        digest: CUBE_DIGEST,
    },
    Dataset {
        name: "g25",
        text: include_str!("../datasets/g25.json"),
        digest: G25_DIGEST,
    },
    Dataset {
        name: "m06",
        text: include_str!("../datasets/m06.json"),
        digest: M06_DIGEST,
    },
];

pub fn dataset(name: &str) -> Option<&'static Dataset> {
    DATASETS.iter().find(|d| d.name == name)
}

/// Lowercase hex SHA-256, the digest stamped into results and snapshots.
pub fn text_digest(text: &str) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}
