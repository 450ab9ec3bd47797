//! JSON payloads and their flattened tab-separated form.

use cohrep::autdegrees::CoverageTag;
use cohrep::{CohRep, Partition, Poly};
use num_rational::Rational64;
use serde_json::{json, Map, Value};

pub const SCHEMA: u32 = 1;

/// Label attached to outputs that depend on an unproved conjecture.
pub const CONDITIONAL_ON: &str = "conjectural: automorphic Levi-induction conjecture";

pub fn envelope(verb: &str, input: &[String], body: Map<String, Value>) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), json!(SCHEMA));
    out.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    out.insert("verb".into(), json!(verb));
    out.insert("input".into(), json!(input));
    out.extend(body);
    Value::Object(out)
}

pub fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

pub fn poly(p: &Poly) -> Value {
    json!(p.coeffs())
}

pub fn rational(x: &Rational64) -> Value {
    json!(x.to_string())
}

pub fn rationals(xs: &[Rational64]) -> Value {
    Value::Array(xs.iter().map(rational).collect())
}

pub fn coverage(tag: &CoverageTag) -> Value {
    json!({
        "level": tag.level.to_string(),
        "source": tag.source.map(|s| s.to_string()),
    })
}

/// The identifying fields of a representation.
pub fn rep(r: &CohRep) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("label".into(), json!(r.to_string()));
    m.insert("lambda".into(), partition(&r.lambda));
    if r.family.kind != cohrep::FamilyKind::O {
        m.insert("mu".into(), partition(&r.mu));
    }
    if let Some(flag) = r.flag {
        m.insert("flag".into(), json!(flag));
    }
    m.insert("degree".into(), json!(r.degree));
    m
}

/// Enumeration row: identifying fields plus the block structure.
pub fn rep_detailed(r: &CohRep) -> Value {
    let mut m = rep(r);
    if let Some((plus, minus)) = r.hodge {
        m.insert("hodge".into(), json!([plus, minus]));
    }
    let rects: Vec<Value> = r
        .decomposition
        .rectangles
        .iter()
        .map(|x| json!([x.rows, x.cols]))
        .collect();
    m.insert("rectangles".into(), Value::Array(rects));
    if let Some(od) = &r.orthogonal {
        let pairs: Vec<Value> = od.pairs.iter().map(|x| json!([x.rows, x.cols])).collect();
        m.insert("pairs".into(), Value::Array(pairs));
        m.insert("center".into(), json!(od.center.map(|c| [c.rows, c.cols])));
        m.insert(
            "sign_multiplicity".into(),
            r.sign_multiplicity
                .map_or(json!("unresolved"), |s| json!(s)),
        );
    }
    m.insert("discrete_series".into(), json!(r.is_discrete_series()));
    Value::Object(m)
}

/// One `path<TAB>value` line per leaf, in document order.
pub fn to_tsv(v: &Value) -> String {
    let mut out = String::new();
    flatten(v, &mut String::new(), &mut out);
    out
}

fn flatten(v: &Value, path: &mut String, out: &mut String) {
    let mut child = |key: &str, v: &Value, path: &mut String| {
        let len = path.len();
        if !path.is_empty() {
            path.push('.');
        }
        path.push_str(key);
        flatten(v, path, out);
        path.truncate(len);
    };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, v) in m {
                child(k, v, path);
            }
        }
        Value::Array(a) if !a.is_empty() => {
            for (i, v) in a.iter().enumerate() {
                child(&i.to_string(), v, path);
            }
        }
        leaf => {
            out.push_str(path);
            out.push('\t');
            match leaf {
                Value::String(s) => out.push_str(s),
                other => out.push_str(&other.to_string()),
            }
            out.push('\n');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tsv_flattens_nested_values() {
        let v = json!({"a": [1, {"b": "x"}], "c": [], "d": null});
        assert_eq!(to_tsv(&v), "a.0\t1\na.1.b\tx\nc\t[]\nd\tnull\n");
    }

    #[test]
    fn envelope_leads_with_schema() {
        let v = envelope("degrees", &["degrees".into()], Map::new());
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["schema", "version", "verb", "input"]);
    }
}
