use serde::Serialize;
use sha2::{Digest, Sha256};
use symbreak::io::write_graph6;
use symbreak::{Caps, Graph};

#[derive(Debug, Serialize)]
pub struct CapSettings {
    pub aut_order: usize,
    pub aut_elements: u64,
    pub label_order: usize,
    pub hamiltonian_order: usize,
    /// Seconds; absent when unlimited.
    pub time_budget: Option<f64>,
}

impl From<&Caps> for CapSettings {
    fn from(c: &Caps) -> Self {
        CapSettings {
            aut_order: c.aut_order,
            aut_elements: c.aut_elements,
            label_order: c.label_order,
            hamiltonian_order: c.hamiltonian_order,
            time_budget: c.time_budget.map(|d| d.as_secs_f64()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputDigest {
    pub name: String,
    pub graph6: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn new(name: String, g: &Graph) -> Self {
        let graph6 = write_graph6(g);
        let sha256 = format!("{:x}", Sha256::digest(graph6.as_bytes()));
        InputDigest { name, graph6, sha256 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// Out of scope for the statement or over a cap.
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub id: String,
    pub inputs: Vec<String>,
    pub status: Status,
    pub detail: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub tool_version: &'static str,
    pub caps: CapSettings,
    pub theorem: String,
    pub range: String,
    pub inputs: Vec<InputDigest>,
    pub entries: Vec<Entry>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl RunManifest {
    pub fn new(theorem: &str, range: &str, caps: &Caps, inputs: Vec<InputDigest>, entries: Vec<Entry>) -> Self {
        let count = |s: Status| entries.iter().filter(|e| e.status == s).count();
        RunManifest {
            tool_version: env!("CARGO_PKG_VERSION"),
            caps: caps.into(),
            theorem: theorem.to_string(),
            range: range.to_string(),
            inputs,
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skipped),
            entries,
        }
    }

    pub fn first_failure(&self) -> Option<&Entry> {
        self.entries.iter().find(|e| e.status == Status::Fail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_k1() {
        let d = InputDigest::new("k1".into(), &Graph::empty(1).unwrap());
        assert_eq!(d.graph6, "@");
        // sha256("@")
        assert_eq!(d.sha256, "c3641f8544d7c02f3580b07c0f9887f0c6a27ff5ab1d4a3e29caf197cfc299ae");
    }
}
