use std::fmt::Write as _;

use serde::Serialize;

use aura_topology::connectivity::{
    a_components, is_a_connected, is_a_locally_connected, is_a_path_connected,
};
use aura_topology::{AuraClassification, AuraSpace, SeparationAxioms};

/// τ_𝔞 is listed in full only up to this many points.
const LISTING_MAX_POINTS: usize = 6;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Analysis {
    points: Vec<String>,
    classification: AuraClassification,
    cl_idempotent: bool,
    tau_a_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau_a: Option<Vec<Vec<String>>>,
    components: Vec<Vec<String>>,
    a_connected: bool,
    tau_connected: bool,
    a_path_connected: bool,
    a_locally_connected: bool,
    separation: SeparationAxioms,
}

fn labels(s: &AuraSpace, set: aura_topology::PointSet) -> Vec<String> {
    s.universe()
        .labels(set)
        .into_iter()
        .map(String::from)
        .collect()
}

pub fn analyze(s: &AuraSpace) -> Analysis {
    let tau = s.tau_a();
    Analysis {
        points: s.universe().names().to_vec(),
        classification: s.classify(),
        cl_idempotent: s.is_closure_idempotent(),
        tau_a_size: tau.len(),
        tau_a: (s.len() <= LISTING_MAX_POINTS)
            .then(|| tau.opens().iter().map(|&o| labels(s, o)).collect()),
        components: a_components(s)
            .blocks
            .iter()
            .map(|&b| labels(s, b))
            .collect(),
        a_connected: is_a_connected(s, s.full()),
        tau_connected: s.space().is_connected(),
        a_path_connected: is_a_path_connected(s),
        a_locally_connected: is_a_locally_connected(s),
        separation: s.separation_axioms(),
    }
}

fn braces(sets: &[Vec<String>]) -> String {
    let parts: Vec<String> = sets
        .iter()
        .map(|s| format!("{{{}}}", s.join(",")))
        .collect();
    parts.join(" ")
}

impl Analysis {
    pub fn to_text(&self) -> String {
        let c = &self.classification;
        let t = &self.separation;
        let mut out = String::new();
        let _ = writeln!(out, "points: {}", self.points.join(","));
        let _ = writeln!(
            out,
            "aura: transitive={} symmetric={} trivial={} discrete={}",
            c.transitive, c.symmetric, c.trivial, c.discrete
        );
        let _ = writeln!(out, "clIdempotent: {}", self.cl_idempotent);
        match &self.tau_a {
            Some(sets) => {
                let _ = writeln!(out, "tau_a ({} sets): {}", self.tau_a_size, braces(sets));
            }
            None => {
                let _ = writeln!(out, "tau_a: {} sets", self.tau_a_size);
            }
        }
        let _ = writeln!(out, "components: {}", braces(&self.components));
        let _ = writeln!(out, "aConnected: {}", self.a_connected);
        let _ = writeln!(out, "tauConnected: {}", self.tau_connected);
        let _ = writeln!(out, "aPathConnected: {}", self.a_path_connected);
        let _ = writeln!(out, "aLocallyConnected: {}", self.a_locally_connected);
        let _ = writeln!(out, "separation: aT0={} aT1={} aT2={}", t.t0, t.t1, t.t2);
        out
    }
}
