//! The worked-example spaces, shipped as JSON documents under `fixtures/`.

use crate::aura::AuraSpace;
use crate::document::parse_space;

pub const S1_JSON: &str = include_str!("../fixtures/s1.json");
pub const S2_JSON: &str = include_str!("../fixtures/s2.json");
pub const S3_JSON: &str = include_str!("../fixtures/s3.json");
pub const S4_JSON: &str = include_str!("../fixtures/s4.json");
pub const S5_JSON: &str = include_str!("../fixtures/s5.json");
pub const S6_JSON: &str = include_str!("../fixtures/s6.json");
pub const S7_X_JSON: &str = include_str!("../fixtures/s7_x.json");
pub const S7_Y_JSON: &str = include_str!("../fixtures/s7_y.json");
pub const PS_X_JSON: &str = include_str!("../fixtures/ps_x.json");
pub const PS_Y_JSON: &str = include_str!("../fixtures/ps_y.json");

pub const ALL_JSON: [&str; 10] = [
    S1_JSON, S2_JSON, S3_JSON, S4_JSON, S5_JSON, S6_JSON, S7_X_JSON, S7_Y_JSON, PS_X_JSON,
    PS_Y_JSON,
];

/// File names of the catalog, relative to [`fixture_dir`].
pub const FILES: [&str; 10] = [
    "s1.json",
    "s2.json",
    "s3.json",
    "s4.json",
    "s5.json",
    "s6.json",
    "s7_x.json",
    "s7_y.json",
    "ps_x.json",
    "ps_y.json",
];

/// Directory holding the catalog in the source tree.
pub fn fixture_dir() -> &'static str {
    concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")
}

fn load(text: &str) -> AuraSpace {
    parse_space(text).expect("bundled fixture is valid")
}

/// Five points, discrete τ, auras `{1,2} {1,2} {3,4} {3,4} {5}`.
pub fn s1() -> AuraSpace {
    load(S1_JSON)
}

/// Three points, discrete τ, cyclic non-transitive aura.
pub fn s2() -> AuraSpace {
    load(S2_JSON)
}

/// `{0,1,2}`, discrete τ, nested auras `X ⊇ {1,2} ⊇ {2}`.
pub fn s3() -> AuraSpace {
    load(S3_JSON)
}

/// `τ = {∅,{a},{b,c},X}` with the trivial aura.
pub fn s4() -> AuraSpace {
    load(S4_JSON)
}

/// Four points with a chain of auras `{a} ⊆ {a,b} ⊆ {a,b,c} ⊆ X`.
pub fn s5() -> AuraSpace {
    load(S5_JSON)
}

/// Sierpiński space with `𝔞(a) = {a}`, `𝔞(b) = X`.
pub fn s6() -> AuraSpace {
    load(S6_JSON)
}

pub fn s7_x() -> AuraSpace {
    load(S7_X_JSON)
}

/// Two-point discrete space with the discrete aura.
pub fn s7_y() -> AuraSpace {
    load(S7_Y_JSON)
}

pub fn product_strict_x() -> AuraSpace {
    load(PS_X_JSON)
}

pub fn product_strict_y() -> AuraSpace {
    load(PS_Y_JSON)
}

pub fn discrete_pair() -> AuraSpace {
    s7_y()
}

pub fn all_single() -> Vec<AuraSpace> {
    ALL_JSON.iter().map(|t| load(t)).collect()
}
