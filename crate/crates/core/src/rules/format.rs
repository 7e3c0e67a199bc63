//! Text rule files: one rule per line,
//!
//! ```text
//! IF a=v AND a=v THEN d=v [OR d=v] ; len=.. sup=.. str=.. cov=n/d
//! ```
//!
//! preceded by `#` header lines carrying the schema, so a written file
//! parses back to an identical [`RuleSet`]. Tokens containing separators
//! are percent-encoded.

use crate::error::{Result, RoughError};
use crate::fraction::Fraction;
use crate::set::AttributeId;
use crate::table::{AttributeValuePair, Value};

use super::{decision_support_measure, Rule, RuleKind, RuleMetrics, RuleSchema, RuleSet};

const MAGIC: &str = "# roughset rules v1";

fn encode(token: &str) -> String {
    let mut out = String::with_capacity(token.len());
    for c in token.chars() {
        match c {
            '%' | '=' | ',' | ';' | '#' => out.push_str(&format!("%{:02X}", c as u32)),
            c if c.is_whitespace() => {
                let mut buf = [0u8; 4];
                for b in c.encode_utf8(&mut buf).bytes() {
                    out.push_str(&format!("%{b:02X}"));
                }
            }
            c => out.push(c),
        }
    }
    out
}

fn decode(token: &str, line: usize) -> Result<String> {
    let bad = || RoughError::RuleFormat {
        line,
        message: format!("bad escape in `{token}`"),
    };
    let bytes = token.as_bytes();
    let mut out = Vec::with_capacity(bytes.len());
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'%' {
            let hex = token.get(i + 1..i + 3).ok_or_else(bad)?;
            out.push(u8::from_str_radix(hex, 16).map_err(|_| bad())?);
            i += 3;
        } else {
            out.push(bytes[i]);
            i += 1;
        }
    }
    String::from_utf8(out).map_err(|_| bad())
}

pub(crate) fn rule_body(schema: &RuleSchema, r: &Rule) -> String {
    let conds: Vec<String> = r
        .conditions
        .iter()
        .map(|c| {
            format!(
                "{}={}",
                encode(schema.attribute_name(c.attribute)),
                encode(c.value.as_str())
            )
        })
        .collect();
    let dec = encode(&schema.decision);
    let decs: Vec<String> = r
        .decisions
        .iter()
        .map(|v| format!("{dec}={}", encode(v.as_str())))
        .collect();
    format!("IF {} THEN {}", conds.join(" AND "), decs.join(" OR "))
}

fn rule_line(schema: &RuleSchema, r: &Rule) -> String {
    let m = &r.metrics;
    format!(
        "{} ; len={} sup={} str={} cov={}",
        rule_body(schema, r),
        m.length,
        m.support,
        m.strength,
        m.coverage
    )
}

fn join_encoded<'a>(items: impl Iterator<Item = &'a str>) -> String {
    items.map(encode).collect::<Vec<_>>().join(",")
}

fn counts(entries: &[(Value, usize)]) -> String {
    entries
        .iter()
        .map(|(v, n)| format!("{}={n}", encode(v.as_str())))
        .collect::<Vec<_>>()
        .join(",")
}

/// Serializes a rule set, header first.
pub fn write_rules(rs: &RuleSet) -> String {
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    out.push_str(&format!("# source: {}\n", rs.source));
    out.push_str(&format!(
        "# attributes: {}\n",
        join_encoded(rs.schema.attributes.iter().map(String::as_str))
    ));
    out.push_str(&format!("# decision: {}\n", encode(&rs.schema.decision)));
    out.push_str(&format!(
        "# values: {}\n",
        join_encoded(rs.schema.decision_values.iter().map(Value::as_str))
    ));
    out.push_str(&format!("# redundancy: {}\n", counts(&rs.redundancy)));
    for r in &rs.rules {
        out.push_str(&rule_line(&rs.schema, r));
        out.push('\n');
    }
    out
}

#[derive(Default)]
struct Header {
    source: Option<String>,
    attributes: Option<Vec<String>>,
    decision: Option<String>,
    values: Option<Vec<Value>>,
    redundancy: Option<Vec<(Value, usize)>>,
}

fn split_list(s: &str, line: usize) -> Result<Vec<String>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| decode(t.trim(), line)).collect()
}

fn parse_header(h: &mut Header, key: &str, value: &str, line: usize) -> Result<()> {
    match key {
        "source" => h.source = Some(value.to_owned()),
        "attributes" => h.attributes = Some(split_list(value, line)?),
        "decision" => h.decision = Some(decode(value, line)?),
        "values" => {
            h.values = Some(split_list(value, line)?.into_iter().map(Value).collect());
        }
        "redundancy" => {
            let mut entries = Vec::new();
            for item in split_list(value, line)? {
                // decoded already, so split on the last '='
                let (v, n) = item
                    .rsplit_once('=')
                    .ok_or_else(|| RoughError::RuleFormat {
                        line,
                        message: format!("bad redundancy entry `{item}`"),
                    })?;
                let n = n.parse().map_err(|_| RoughError::RuleFormat {
                    line,
                    message: format!("bad count in `{item}`"),
                })?;
                entries.push((Value::from(v), n));
            }
            h.redundancy = Some(entries);
        }
        _ => {}
    }
    Ok(())
}

struct RawRule {
    line: usize,
    conditions: Vec<(String, Value)>,
    decision: String,
    decisions: Vec<Value>,
    length: usize,
    support: usize,
    strength: usize,
    coverage: Fraction,
}

fn parse_rule_line(text: &str, line: usize) -> Result<RawRule> {
    let err = |message: String| RoughError::RuleFormat { line, message };
    let (body, metrics) = text
        .rsplit_once(';')
        .ok_or_else(|| err("missing `;` before metrics".into()))?;
    let body = body.trim();
    let rest = body
        .strip_prefix("IF ")
        .ok_or_else(|| err("rule must start with `IF `".into()))?;
    let (conds, decs) = rest
        .split_once(" THEN ")
        .ok_or_else(|| err("missing ` THEN `".into()))?;

    let pair = |s: &str| -> Result<(String, String)> {
        let (a, v) = s
            .trim()
            .split_once('=')
            .ok_or_else(|| err(format!("expected name=value, got `{s}`")))?;
        Ok((decode(a, line)?, decode(v, line)?))
    };

    let mut conditions = Vec::new();
    for c in conds.split(" AND ") {
        if c.trim().is_empty() {
            return Err(err("rule has no conditions".into()));
        }
        let (a, v) = pair(c)?;
        if conditions.iter().any(|(b, _): &(String, Value)| *b == a) {
            return Err(RoughError::DuplicateCondition(a));
        }
        conditions.push((a, Value(v)));
    }

    let mut decision: Option<String> = None;
    let mut decisions: Vec<Value> = Vec::new();
    for d in decs.split(" OR ") {
        let (name, v) = pair(d)?;
        match &decision {
            Some(existing) if *existing != name => {
                return Err(err(format!(
                    "mixed decision attributes `{existing}` and `{name}`"
                )))
            }
            _ => decision = Some(name),
        }
        let v = Value(v);
        if decisions.contains(&v) {
            return Err(err(format!("decision `{v}` listed twice")));
        }
        decisions.push(v);
    }

    let mut fields: [Option<&str>; 4] = [None; 4];
    for kv in metrics.split_whitespace() {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| err(format!("bad metric `{kv}`")))?;
        let slot = match k {
            "len" => 0,
            "sup" => 1,
            "str" => 2,
            "cov" => 3,
            _ => return Err(err(format!("unknown metric `{k}`"))),
        };
        fields[slot] = Some(v);
    }
    let count = |i: usize, name: &str| -> Result<usize> {
        fields[i]
            .ok_or_else(|| err(format!("missing metric `{name}`")))?
            .parse()
            .map_err(|_| err(format!("bad value for `{name}`")))
    };
    let length = count(0, "len")?;
    let support = count(1, "sup")?;
    let strength = count(2, "str")?;
    let coverage: Fraction = fields[3]
        .ok_or_else(|| err("missing metric `cov`".into()))?
        .parse()
        .map_err(err)?;
    if length != conditions.len() {
        return Err(err(format!(
            "len={length} but the rule has {} conditions",
            conditions.len()
        )));
    }
    if strength > support {
        return Err(err(format!("str={strength} exceeds sup={support}")));
    }
    Ok(RawRule {
        line,
        conditions,
        decision: decision.expect("at least one decision"),
        decisions,
        length,
        support,
        strength,
        coverage,
    })
}

/// Parses a rule file. Without header lines the schema is inferred from
/// the rules in order of first appearance.
pub fn parse_rules(text: &str) -> Result<RuleSet> {
    let mut header = Header::default();
    let mut raw = Vec::new();
    for (i, l) in text.lines().enumerate() {
        let line = i + 1;
        let l = l.trim();
        if l.is_empty() {
            continue;
        }
        if let Some(h) = l.strip_prefix('#') {
            if let Some((k, v)) = h.split_once(':') {
                parse_header(&mut header, k.trim(), v.trim(), line)?;
            }
            continue;
        }
        raw.push(parse_rule_line(l, line)?);
    }

    let decision = match (&header.decision, raw.first()) {
        (Some(d), _) => d.clone(),
        (None, Some(r)) => r.decision.clone(),
        (None, None) => String::new(),
    };
    let fixed_attributes = header.attributes.is_some();
    let mut attributes = header.attributes.unwrap_or_default();
    let mut values = header.values.unwrap_or_default();

    let mut rules = Vec::with_capacity(raw.len());
    for r in raw {
        if r.decision != decision {
            return Err(RoughError::RuleFormat {
                line: r.line,
                message: format!("decision `{}` does not match `{decision}`", r.decision),
            });
        }
        let mut conditions = Vec::with_capacity(r.conditions.len());
        for (name, v) in r.conditions {
            let id = match attributes.iter().position(|a| *a == name) {
                Some(i) => i,
                None if !fixed_attributes => {
                    attributes.push(name);
                    attributes.len() - 1
                }
                None => return Err(RoughError::UnknownAttribute(name)),
            };
            conditions.push(AttributeValuePair::new(AttributeId(id), v));
        }
        conditions.sort();
        for v in &r.decisions {
            if !values.contains(v) {
                values.push(v.clone());
            }
        }
        let kind = if r.decisions.len() == 1 {
            RuleKind::Exact
        } else {
            RuleKind::Approximate
        };
        rules.push(Rule {
            conditions,
            decisions: r.decisions,
            kind,
            metrics: RuleMetrics {
                length: r.length,
                strength: r.strength,
                support: r.support,
                coverage: r.coverage,
                discrimination_level: (r.support > 0).then(|| Fraction::new(r.strength, r.support)),
            },
        });
    }
    if !fixed_attributes && !decision.is_empty() && !attributes.contains(&decision) {
        attributes.push(decision.clone());
    }

    let mut rs = RuleSet {
        schema: RuleSchema {
            attributes,
            decision,
            decision_values: values,
        },
        source: header.source.unwrap_or_default(),
        rules,
        decision_support: Vec::new(),
        redundancy: header.redundancy.unwrap_or_default(),
    };
    rs.decision_support = decision_support_measure(&rs);
    Ok(rs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::induce_rules;
    use crate::table::{load_decision_table, CsvOptions};

    const CANONICAL: &str = "Coal,Sulfur,Phosphorus,Cracks\nHigh,High,Low,Yes\n\
        Avg,High,Low,No\nAvg,High,Low,Yes\nLow,Low,Low,No\nAvg,Low,High,Yes\nHigh,Low,High,Yes\n";

    #[test]
    fn canonical_rule_file() {
        let d =
            load_decision_table(CANONICAL.as_bytes(), "Cracks", &CsvOptions::default()).unwrap();
        let rs = induce_rules(&d).unwrap();
        let text = write_rules(&rs);
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(
            body,
            [
                "IF Coal=High THEN Cracks=Yes ; len=1 sup=2 str=2 cov=2/4",
                "IF Phosphorus=High THEN Cracks=Yes ; len=1 sup=2 str=2 cov=2/4",
                "IF Coal=Low THEN Cracks=No ; len=1 sup=1 str=1 cov=1/2",
                "IF Coal=Avg AND Sulfur=High THEN Cracks=Yes OR Cracks=No ; len=2 sup=2 str=2 cov=2/6",
            ]
        );
        assert_eq!(parse_rules(&text).unwrap(), rs);
    }

    #[test]
    fn headerless_file_infers_schema() {
        let rs = parse_rules(
            "IF Coal=High AND Sulfur=Low THEN Cracks=Yes ; len=2 sup=1 str=1 cov=1/4\n",
        )
        .unwrap();
        assert_eq!(rs.schema.attributes, ["Coal", "Sulfur", "Cracks"]);
        assert_eq!(rs.schema.decision, "Cracks");
        assert_eq!(
            rs.rules[0].metrics.discrimination_level,
            Some(Fraction::one())
        );
        assert_eq!(rs.decision_support, [(Value::from("Yes"), 1)]);
    }

    #[test]
    fn escapes_separators() {
        assert_eq!(encode("a b=c,d;e%f#"), "a%20b%3Dc%2Cd%3Be%25f%23");
        assert_eq!(
            decode(&encode("a b=c,d;e%f#ü"), 1).unwrap(),
            "a b=c,d;e%f#ü"
        );
        assert!(decode("%G1", 1).is_err());
        assert!(decode("%2", 1).is_err());
    }

    #[test]
    fn malformed_lines() {
        for bad in [
            "Coal=High THEN Cracks=Yes ; len=1 sup=1 str=1 cov=1/1",
            "IF Coal=High Cracks=Yes ; len=1 sup=1 str=1 cov=1/1",
            "IF Coal=High THEN Cracks=Yes",
            "IF Coal=High THEN Cracks=Yes ; len=2 sup=1 str=1 cov=1/1",
            "IF Coal=High THEN Cracks=Yes ; len=1 sup=1 str=2 cov=1/1",
            "IF Coal=High THEN Cracks=Yes ; len=1 sup=1 str=1",
            "IF Coal=High THEN Cracks=Yes OR Other=No ; len=1 sup=1 str=1 cov=1/1",
            "IF Coal=High AND Coal=Low THEN Cracks=Yes ; len=2 sup=0 str=0 cov=0/1",
            "IF  THEN Cracks=Yes ; len=0 sup=6 str=4 cov=4/4",
        ] {
            assert!(parse_rules(bad).is_err(), "accepted `{bad}`");
        }
        let err = parse_rules("# attributes: A,D\nIF B=x THEN D=y ; len=1 sup=1 str=1 cov=1/1\n")
            .unwrap_err();
        assert_eq!(err, RoughError::UnknownAttribute("B".into()));
    }
}
