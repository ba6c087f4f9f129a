use std::fmt::Display;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    Failed,
    AssertedNotComputed,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
            Status::AssertedNotComputed => "asserted-not-computed",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub paper_ref: String,
    pub expected: String,
    pub provenance: Provenance,
    pub computed: String,
    pub status: Status,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub parameters: Map<String, Value>,
    pub claims: Vec<Claim>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.claims.iter().any(|c| c.status == Status::Failed)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("scenario {} {}\n", self.scenario, Value::Object(self.parameters.clone()));
        for c in &self.claims {
            out.push_str(&format!(
                "{:<22} {:<34} expected={} [{}] computed={} ms={}  ({})\n",
                c.status.as_str(),
                c.id,
                c.expected,
                serde_json::to_value(c.provenance).expect("provenance").as_str().unwrap_or(""),
                c.computed,
                c.ms,
                c.paper_ref
            ));
        }
        out
    }
}

/// Collects claims for one scenario; `ms` is the time since the previous claim
/// when timings are enabled and 0 otherwise, so default reports are
/// reproducible byte for byte.
pub struct Recorder {
    scenario: String,
    parameters: Map<String, Value>,
    claims: Vec<Claim>,
    timings: bool,
    last: Instant,
}

impl Recorder {
    pub fn new(scenario: &str, timings: bool) -> Self {
        Recorder {
            scenario: scenario.into(),
            parameters: Map::new(),
            claims: Vec::new(),
            timings,
            last: Instant::now(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) {
        self.parameters.insert(key.into(), value.into());
    }

    fn elapsed(&mut self) -> u64 {
        let ms = if self.timings {
            self.last.elapsed().as_millis() as u64
        } else {
            0
        };
        self.last = Instant::now();
        ms
    }

    /// Verified iff the canonical renderings agree.
    pub fn check(&mut self, id: &str, paper_ref: &str, provenance: Provenance, expected: impl Display, computed: impl Display) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        let status = if expected == computed {
            Status::Verified
        } else {
            Status::Failed
        };
        let ms = self.elapsed();
        self.claims.push(Claim {
            id: id.into(),
            paper_ref: paper_ref.into(),
            expected,
            provenance,
            computed,
            status,
            ms,
        });
    }

    /// A claim checked by a predicate rather than by equality of renderings.
    pub fn check_with(
        &mut self,
        id: &str,
        paper_ref: &str,
        provenance: Provenance,
        expected: impl Display,
        computed: impl Display,
        ok: bool,
    ) {
        let ms = self.elapsed();
        self.claims.push(Claim {
            id: id.into(),
            paper_ref: paper_ref.into(),
            expected: expected.to_string(),
            provenance,
            computed: computed.to_string(),
            status: if ok { Status::Verified } else { Status::Failed },
            ms,
        });
    }

    /// A theoretical statement that is reported but not computed.
    pub fn assert_only(&mut self, id: &str, paper_ref: &str, expected: impl Display) {
        let ms = self.elapsed();
        self.claims.push(Claim {
            id: id.into(),
            paper_ref: paper_ref.into(),
            expected: expected.to_string(),
            provenance: Provenance::Paper,
            computed: "not computed".into(),
            status: Status::AssertedNotComputed,
            ms,
        });
    }

    pub fn finish(self) -> Report {
        Report {
            scenario: self.scenario,
            parameters: self.parameters,
            claims: self.claims,
        }
    }
}
