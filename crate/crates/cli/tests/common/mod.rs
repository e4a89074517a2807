#![allow(dead_code)]

use serde_json::Value;

fn golden(name: &str) -> Vec<String> {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{path}: {e}"))
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

pub fn stem_corpus() -> Vec<String> {
    golden("stem.txt")
}

pub fn point_corpus() -> Vec<String> {
    golden("point.txt")
}

pub fn pair_corpus() -> Vec<String> {
    golden("pair.txt")
}

/// Checks a command's JSON output against the published field set and types.
pub fn validate_schema(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("top level is not an object")?;
    let is_str = |x: &Value| x.is_string();
    let is_bool = |x: &Value| x.is_boolean();
    let str_list = |x: &Value| x.as_array().is_some_and(|a| a.iter().all(Value::is_string));
    for key in ["command", "inputs"] {
        if !obj.contains_key(key) {
            return Err(format!("missing required field {key}"));
        }
    }
    for (key, val) in obj {
        let ok = match key.as_str() {
            "command" | "trace" | "norm" | "cdiv" | "branch" | "norm_alpha" | "value" => is_str(val),
            "inputs" | "intertwiners" => str_list(val),
            "equivalent" | "invertible_on_C" => is_bool(val),
            "reason" => val.is_null() || val.is_string(),
            "orbit" => val.as_object().is_some_and(|o| {
                o.len() == 3 && ["kind", "lambda", "isotropy"].iter().all(|k| o.get(*k).is_some_and(is_str))
            }),
            "checks" => val.as_array().is_some_and(|a| {
                a.iter().all(|c| {
                    c.as_object().is_some_and(|o| {
                        o.len() == 3
                            && o.get("name").is_some_and(is_str)
                            && o.get("pass").is_some_and(is_bool)
                            && o.get("detail").is_some_and(is_str)
                    })
                })
            }),
            _ => return Err(format!("unknown field {key}")),
        };
        if !ok {
            return Err(format!("field {key} has the wrong type: {val}"));
        }
    }
    Ok(())
}
