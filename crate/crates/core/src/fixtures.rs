//! Bundled algebra presentations.

use crate::error::Result;
use crate::quiver::{parse_quiver_spec, AlgebraPresentation};

pub const KA2: &str = include_str!("../fixtures/ka2.q");
pub const KA3: &str = include_str!("../fixtures/ka3.q");
pub const KA4: &str = include_str!("../fixtures/ka4.q");
pub const KD4: &str = include_str!("../fixtures/kd4.q");
pub const SEC5_1: &str = include_str!("../fixtures/sec5_1.q");
pub const SEC5_2: &str = include_str!("../fixtures/sec5_2.q");
pub const TILTED_A3: &str = include_str!("../fixtures/sec5_3_tilted.q");

/// All fixtures by file stem.
pub const ALL: &[(&str, &str)] = &[
    ("ka2", KA2),
    ("ka3", KA3),
    ("ka4", KA4),
    ("kd4", KD4),
    ("sec5_1", SEC5_1),
    ("sec5_2", SEC5_2),
    ("sec5_3_tilted", TILTED_A3),
];

pub fn load(name: &str) -> Option<Result<AlgebraPresentation>> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, text)| parse_quiver_spec(text))
}
