//! Plain-text rendering of reports.

use std::fmt::Write;

use crate::report::*;

fn braces<S: AsRef<str>>(items: &[S]) -> String {
    let inner: Vec<&str> = items.iter().map(AsRef::as_ref).collect();
    format!("{{{}}}", inner.join(","))
}

fn rational(r: &Rational) -> String {
    format!("{}/{} ({})", r.numerator, r.denominator, r.decimal)
}

fn accuracy(r: &Option<Rational>) -> String {
    r.as_ref().map_or_else(|| "undefined".to_owned(), rational)
}

fn counts(entries: &[ValueCount]) -> String {
    entries
        .iter()
        .map(|c| format!("{}={}", c.value, c.count))
        .collect::<Vec<_>>()
        .join(" ")
}

fn plural(n: usize, noun: &str) -> String {
    if n == 1 {
        format!("{n} {noun}")
    } else {
        format!("{n} {noun}s")
    }
}

pub fn text(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Inspect(r) => inspect(&mut out, r),
        Report::Approx(r) => approx(&mut out, r),
        Report::Reducts(r) => reducts(&mut out, r),
        Report::Rules(r) => analysis(&mut out, r),
        Report::Classify(r) => classify(&mut out, r),
    }
    .expect("writing to a String cannot fail");
    out
}

fn header(out: &mut String, source: &str, fingerprint: &str) -> std::fmt::Result {
    writeln!(out, "source: {source}")?;
    writeln!(out, "fingerprint: {fingerprint}")
}

fn inspect(out: &mut String, r: &InspectReport) -> std::fmt::Result {
    header(out, &r.source, &r.fingerprint)?;
    writeln!(out, "objects: {}", r.objects)?;
    writeln!(out, "attributes: {}", r.attributes)?;
    if let Some(id) = &r.id_column {
        writeln!(out, "id column: {id}")?;
    }
    writeln!(out, "domains:")?;
    for d in &r.domains {
        writeln!(out, "  {}: {}", d.name, d.values.join(", "))?;
    }
    if r.duplicate_groups.is_empty() {
        writeln!(out, "duplicate groups: none")
    } else {
        let groups: Vec<String> = r.duplicate_groups.iter().map(|g| braces(g)).collect();
        writeln!(out, "duplicate groups: {}", groups.join(" "))
    }
}

fn approx(out: &mut String, r: &ApproxReport) -> std::fmt::Result {
    header(out, &r.source, &r.fingerprint)?;
    writeln!(out, "class: {}={}", r.decision, r.class)?;
    writeln!(out, "attributes: {}", braces(&r.attributes))?;
    writeln!(out, "target: {}", braces(&r.target))?;
    writeln!(out, "lower: {}", braces(&r.lower))?;
    writeln!(out, "upper: {}", braces(&r.upper))?;
    writeln!(out, "positive: {}", braces(&r.positive))?;
    writeln!(out, "boundary: {}", braces(&r.boundary))?;
    writeln!(out, "negative: {}", braces(&r.negative))?;
    writeln!(out, "accuracy: {}", accuracy(&r.accuracy))?;
    writeln!(out, "definability: {}", r.definability)
}

fn reducts(out: &mut String, r: &ReductReport) -> std::fmt::Result {
    header(out, &r.source, &r.fingerprint)?;
    match &r.decision {
        Some(d) => writeln!(out, "mode: {} (relative to {d})", r.mode)?,
        None => writeln!(out, "mode: {}", r.mode)?,
    }
    writeln!(out, "attributes: {}", braces(&r.candidates))?;
    writeln!(out, "reducts:")?;
    for red in &r.reducts {
        writeln!(out, "  {}", braces(red))?;
    }
    writeln!(out, "core: {}", braces(&r.core))
}

fn rule_line(out: &mut String, e: &RuleEntry) -> std::fmt::Result {
    let dl = e.discrimination_level.as_ref().map_or_else(
        || "-".to_owned(),
        |d| format!("{}/{}", d.numerator, d.denominator),
    );
    writeln!(
        out,
        "  R{} {} ; len={} sup={} str={} cov={}/{} dl={dl}",
        e.id, e.text, e.length, e.support, e.strength, e.coverage.numerator, e.coverage.denominator
    )
}

fn analysis(out: &mut String, r: &AnalysisReport) -> std::fmt::Result {
    header(out, &r.source, &r.fingerprint)?;
    writeln!(out, "objects: {}", r.objects)?;
    writeln!(out, "decision: {}", r.decision)?;
    writeln!(out, "conditions: {}", braces(&r.conditions))?;
    let kind = if r.deterministic {
        "deterministic"
    } else {
        "nondeterministic"
    };
    writeln!(out, "consistency: {} {kind}", rational(&r.consistency))?;
    writeln!(out, "classes:")?;
    for c in &r.classes {
        writeln!(
            out,
            "  {}={} size={} lower={} upper={} boundary={} accuracy={} {}",
            r.decision,
            c.value,
            c.size,
            braces(&c.lower),
            braces(&c.upper),
            braces(&c.boundary),
            accuracy(&c.accuracy),
            c.definability
        )?;
    }
    match &r.reducts {
        Some(s) => {
            let all: Vec<String> = s.reducts.iter().map(|x| braces(x)).collect();
            writeln!(out, "decision reducts: {}", all.join(" "))?;
            writeln!(out, "core: {}", braces(&s.core))?;
        }
        None => writeln!(
            out,
            "decision reducts: skipped, too many condition attributes"
        )?,
    }
    writeln!(out, "{}", plural(r.exact_rules, "exact rule"))?;
    for e in r.rules.iter().filter(|e| e.kind == "exact") {
        rule_line(out, e)?;
    }
    writeln!(out, "{}", plural(r.approximate_rules, "approximate rule"))?;
    for e in r.rules.iter().filter(|e| e.kind == "approximate") {
        rule_line(out, e)?;
    }
    writeln!(out, "decision support: {}", counts(&r.decision_support))?;
    writeln!(out, "redundancy: {}", counts(&r.redundancy))?;
    if let Some(path) = &r.rules_file {
        writeln!(out, "rules written to {path}")?;
    }
    Ok(())
}

fn classify(out: &mut String, r: &ClassifyReport) -> std::fmt::Result {
    for v in &r.results {
        let verdict = match v.verdict.as_str() {
            "decision" => v.decisions[0].clone(),
            "possible" => format!("possible{}", braces(&v.decisions)),
            _ => "abstain".to_owned(),
        };
        let fired = if v.fired.is_empty() {
            "-".to_owned()
        } else {
            v.fired
                .iter()
                .map(|i| format!("R{i}"))
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(out, "{}: {verdict} fired={fired}", v.object)?;
    }
    Ok(())
}
