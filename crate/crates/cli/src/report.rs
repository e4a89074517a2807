//! Command output in text and JSON form.

use std::fmt::Write as _;

use serde::Serialize;
use slicereg_core::algebra::scalar::fmt_grat;
use slicereg_core::equiv::OrbitClass;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitJson {
    pub kind: String,
    pub lambda: String,
    pub isotropy: String,
}

impl From<&OrbitClass> for OrbitJson {
    fn from(c: &OrbitClass) -> Self {
        OrbitJson {
            kind: c.kind.as_str().into(),
            lambda: fmt_grat(&c.lambda),
            isotropy: c.isotropy.as_str().into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// One command's output. Unset fields are left out of the JSON.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub norm: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cdiv: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivalent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    /// `Some(None)` serializes as `null`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Option<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intertwiners: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub norm_alpha: Option<String>,
    #[serde(rename = "invertible_on_C", skip_serializing_if = "Option::is_none")]
    pub invertible_on_c: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<OrbitJson>,
    /// Result of `eval`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<Check>>,
}

impl Report {
    pub fn new(command: &str, inputs: &[&str]) -> Self {
        Report {
            command: command.into(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn push_check(&mut self, check: Check) {
        self.checks.get_or_insert_with(Vec::new).push(check);
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().flatten().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut line = |key: &str, val: &dyn std::fmt::Display| {
            let _ = writeln!(out, "{key}: {val}");
        };
        if let Some(v) = &self.trace {
            line("trace", v);
        }
        if let Some(v) = &self.norm {
            line("norm", v);
        }
        if let Some(v) = &self.cdiv {
            line("cdiv", v);
        }
        if let Some(v) = &self.value {
            line("value", v);
        }
        if let Some(o) = &self.orbit {
            line("orbit", &o.kind);
            line("lambda", &o.lambda);
            line("isotropy", &o.isotropy);
        }
        if let Some(v) = self.equivalent {
            line("equivalent", &v);
        }
        if let Some(v) = &self.branch {
            line("branch", v);
        }
        if let Some(Some(v)) = &self.reason {
            line("reason", v);
        }
        if let Some(list) = &self.intertwiners {
            line("intertwiners", &list.len());
            for (n, a) in list.iter().enumerate() {
                let _ = writeln!(out, "  alpha_{} = {a}", n + 1);
            }
        }
        if let Some(v) = &self.norm_alpha {
            let _ = writeln!(out, "Nm(alpha): {v}");
        }
        if let Some(v) = self.invertible_on_c {
            let _ = writeln!(out, "invertible_on_C: {v}");
        }
        for c in self.checks.iter().flatten() {
            let tag = if c.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{tag} {}: {}", c.name, c.detail);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absent_fields_are_omitted() {
        let mut r = Report::new("equiv", &["a", "b"]);
        r.equivalent = Some(true);
        r.reason = Some(None);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let obj = v.as_object().unwrap();
        assert_eq!(obj.len(), 4);
        assert!(obj["reason"].is_null());
        assert!(!obj.contains_key("trace"));
    }

    #[test]
    fn invertible_field_name() {
        let r = Report {
            invertible_on_c: Some(false),
            ..Default::default()
        };
        assert!(r.to_json().contains("\"invertible_on_C\": false"));
        assert!(r.to_text().contains("invertible_on_C: false"));
    }
}
