use std::fmt::{self, Write as _};

use serde::Serialize;

use super::config::ConfigEcho;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Str(String),
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        Value::Int(v as i64)
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v as i64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Str(v.to_string())
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Str(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Str(v)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Str(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Assumption,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Assumption => "assumption",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    #[serde(skip)]
    pub description: String,
    pub paper_location: String,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
}

impl Check {
    /// Pass iff computed == expected.
    pub fn compare(
        id: impl Into<String>,
        location: &str,
        description: impl Into<String>,
        expected: impl Into<Value>,
        computed: impl Into<Value>,
    ) -> Self {
        let (expected, computed) = (expected.into(), computed.into());
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Self {
            id: id.into(),
            description: description.into(),
            paper_location: location.to_string(),
            expected,
            computed,
            status,
        }
    }

    /// An imported fact, recorded but not derived.
    pub fn assumption(id: &str, location: &str, description: &str, value: impl Into<Value>) -> Self {
        let value = value.into();
        Self {
            id: id.to_string(),
            description: description.to_string(),
            paper_location: location.to_string(),
            expected: value.clone(),
            computed: value,
            status: Status::Assumption,
        }
    }

    pub fn failed(id: impl Into<String>, location: &str, description: impl Into<String>, expected: impl Into<Value>, error: impl fmt::Display) -> Self {
        Self {
            id: id.into(),
            description: description.into(),
            paper_location: location.to_string(),
            expected: expected.into(),
            computed: Value::Str(format!("error: {error}")),
            status: Status::Fail,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    #[serde(rename = "assumption")]
    pub assumptions: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.assumptions
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub config: ConfigEcho,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub overall: bool,
}

impl VerificationReport {
    pub fn new(config: ConfigEcho, checks: Vec<Check>) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Assumption => summary.assumptions += 1,
            }
        }
        Self { config, checks, overall: summary.fail == 0, summary }
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn render_report(rep: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rep).expect("serializable");
            s.push('\n');
            s
        }
        Format::Text => render_text(rep),
    }
}

fn render_text(rep: &VerificationReport) -> String {
    let id_w = rep.checks.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
    let exp_w = rep.checks.iter().map(|c| c.expected.to_string().len()).max().unwrap_or(8).max(8);
    let comp_w = rep.checks.iter().map(|c| c.computed.to_string().len()).max().unwrap_or(8).max(8);

    let mut out = String::new();
    let cfg = &rep.config;
    match (cfg.seed, &cfg.r, &cfg.s) {
        (Some(seed), _, _) => {
            let _ = writeln!(out, "seed {seed}, primes {:?}, max resamples {}", cfg.primes, cfg.max_resamples);
        }
        (None, r, s) => {
            let _ = writeln!(
                out,
                "r = {}, s = {}, primes {:?}",
                r.as_deref().unwrap_or("?"),
                s.as_deref().unwrap_or("?"),
                cfg.primes
            );
        }
    }

    let mut groups: Vec<&str> = Vec::new();
    for c in &rep.checks {
        if !groups.contains(&c.paper_location.as_str()) {
            groups.push(&c.paper_location);
        }
    }
    for group in groups {
        let _ = writeln!(out, "\n[{group}]");
        let _ = writeln!(
            out,
            "  {:<id_w$}  {:>exp_w$}  {:>comp_w$}  {:<10}  description",
            "id", "expected", "computed", "status"
        );
        for c in rep.checks.iter().filter(|c| c.paper_location == group) {
            let _ = writeln!(
                out,
                "  {:<id_w$}  {:>exp_w$}  {:>comp_w$}  {:<10}  {}",
                c.id,
                c.expected.to_string(),
                c.computed.to_string(),
                c.status.to_string(),
                c.description
            );
        }
    }
    let s = &rep.summary;
    let _ = writeln!(
        out,
        "\n{} checks: {} pass, {} fail, {} assumption",
        s.total(),
        s.pass,
        s.fail,
        s.assumptions
    );
    let _ = writeln!(out, "overall: {}", if rep.overall { "PASS" } else { "FAIL" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn echo() -> ConfigEcho {
        ConfigEcho { seed: Some(1), r: None, s: None, attempts: None, primes: vec![7], max_resamples: 3 }
    }

    #[test]
    fn empty_report_passes() {
        let rep = VerificationReport::new(echo(), vec![]);
        assert!(rep.overall);
        let json: serde_json::Value = serde_json::from_str(&render_report(&rep, Format::Json)).unwrap();
        assert_eq!(json["overall"], true);
        assert_eq!(json["checks"].as_array().unwrap().len(), 0);
        assert!(render_report(&rep, Format::Text).contains("0 checks"));
    }

    #[test]
    fn summary_counts() {
        let rep = VerificationReport::new(
            echo(),
            vec![
                Check::compare("a", "x", "a", 1i64, 1i64),
                Check::compare("b", "x", "b", 2i64, 3i64),
                Check::assumption("c", "y", "c", 2i64),
            ],
        );
        assert!(!rep.overall);
        assert_eq!((rep.summary.pass, rep.summary.fail, rep.summary.assumptions), (1, 1, 1));
        let json: serde_json::Value = serde_json::from_str(&render_report(&rep, Format::Json)).unwrap();
        assert_eq!(json["summary"]["assumption"], 1);
        assert_eq!(json["checks"][1]["status"], "fail");
        assert_eq!(json["checks"][0]["expected"], 1);
        assert!(json["checks"][0].get("description").is_none());
    }

    #[test]
    fn text_table_has_one_row_per_check() {
        let checks = vec![
            Check::compare("a", "group one", "first", 1i64, 1i64),
            Check::compare("b", "group two", "second", "true", "true"),
            Check::compare("c", "group one", "third", 5i64, 5i64),
        ];
        let rep = VerificationReport::new(echo(), checks);
        let text = render_report(&rep, Format::Text);
        let rows = text.lines().filter(|l| l.ends_with("first") || l.ends_with("second") || l.ends_with("third"));
        assert_eq!(rows.count(), rep.summary.total());
        assert!(text.find("[group one]").unwrap() < text.find("[group two]").unwrap());
        assert!(text.contains("overall: PASS"));
    }
}
