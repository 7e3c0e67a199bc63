//! Command-line front end for the `roughset` library.
//!
//! Every subcommand builds a [`Report`], which is then printed either as
//! plain text or as pretty JSON. Objects are labelled by the id column
//! when one is configured, otherwise by one-based row number.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use roughset::reducts::DEFAULT_CAP;
use roughset::*;

mod render;
pub mod report;

pub use render::text;
pub use report::*;

/// Exit statuses; 2 is left to argument errors reported by clap.
pub mod exit {
    pub const OK: u8 = 0;
    pub const IO: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const PARSE: u8 = 3;
    pub const SEMANTIC: u8 = 4;
    pub const CAPACITY: u8 = 5;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "roughset",
    version,
    about = "Rough set analysis of categorical CSV tables"
)]
pub struct Cli {
    /// Print JSON instead of text (shorthand for `--output json`).
    #[arg(long, global = true)]
    pub json: bool,

    #[arg(long, global = true, value_enum, env = "ROUGHSET_OUTPUT", default_value_t = OutputMode::Text)]
    pub output: OutputMode,

    /// Column holding object labels; it is not treated as an attribute.
    #[arg(long, global = true)]
    pub id_column: Option<String>,

    /// Settings file with `decision = ...` and `id = ...` lines. Without
    /// it, `<table>.conf` next to the table is used when present.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dimensions, attribute domains and groups of duplicate rows.
    Inspect { table: PathBuf },
    /// Approximations of one decision class.
    Approx {
        table: PathBuf,
        #[arg(long)]
        decision: Option<String>,
        #[arg(long)]
        class: String,
        /// Comma-separated attribute subset; defaults to all conditions.
        #[arg(long, value_delimiter = ',')]
        attrs: Option<Vec<String>>,
    },
    /// All reducts and the core; decision-relative with `--decision`.
    Reducts {
        table: PathBuf,
        #[arg(long)]
        decision: Option<String>,
        /// Largest attribute count the exhaustive search accepts.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Induce exact and approximate rules with their metrics.
    Rules {
        table: PathBuf,
        #[arg(long)]
        decision: Option<String>,
        /// Also write the rule set to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a rule file to every row of a CSV.
    Classify { rules: PathBuf, objects: PathBuf },
}

#[derive(Debug)]
pub enum CliError {
    Io { path: PathBuf, source: io::Error },
    Usage(String),
    Rough(RoughError),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Usage(m) => f.write_str(m),
            CliError::Rough(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for CliError {}

impl From<RoughError> for CliError {
    fn from(e: RoughError) -> Self {
        CliError::Rough(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => exit::IO,
            CliError::Usage(_) => exit::USAGE,
            CliError::Rough(e) => match e.kind() {
                ErrorKind::Parse => exit::PARSE,
                ErrorKind::Semantic => exit::SEMANTIC,
                ErrorKind::Capacity => exit::CAPACITY,
            },
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

/// Table settings after merging flags with the sidecar file.
struct Settings {
    decision: Option<String>,
    id_column: Option<String>,
}

fn settings(cli: &Cli, table: &Path) -> CliResult<Settings> {
    let sidecar = match &cli.config {
        Some(p) => Some(SidecarConfig::parse(&read(p)?)?),
        None => {
            let p = table.with_extension("conf");
            if p.is_file() && p != table {
                Some(SidecarConfig::parse(&read(&p)?)?)
            } else {
                None
            }
        }
    }
    .unwrap_or_default();
    Ok(Settings {
        decision: sidecar.decision,
        id_column: cli.id_column.clone().or(sidecar.id_column),
    })
}

fn load(cli: &Cli, path: &Path) -> CliResult<(InformationTable, Settings)> {
    let s = settings(cli, path)?;
    let text = read(path)?;
    let opts = CsvOptions {
        id_column: s.id_column.clone(),
    };
    Ok((load_information_table(text.as_bytes(), &opts)?, s))
}

fn load_decision(cli: &Cli, path: &Path, flag: &Option<String>) -> CliResult<DecisionTable> {
    let (t, s) = load(cli, path)?;
    let name = flag.clone().or(s.decision).ok_or_else(|| {
        CliError::Usage("no decision attribute: pass --decision or set one in a config file".into())
    })?;
    Ok(DecisionTable::new(t, &name)?)
}

fn names(t: &InformationTable, b: &AttributeSet) -> Vec<String> {
    b.iter().map(|a| t.attribute_name(a).to_owned()).collect()
}

fn source(p: &Path) -> String {
    p.display().to_string()
}

pub fn cmd_inspect(cli: &Cli, table: &Path) -> CliResult<InspectReport> {
    let (t, _) = load(cli, table)?;
    let domains = t
        .attributes()
        .map(|a| AttributeDomain {
            name: t.attribute_name(a).to_owned(),
            values: t
                .value_domain(a)
                .expect("own attribute")
                .iter()
                .map(|v| v.0.clone())
                .collect(),
        })
        .collect();
    let duplicate_groups = partition(&t, &t.all_attributes())?
        .blocks()
        .iter()
        .filter(|b| b.len() > 1)
        .map(|b| t.labels(b))
        .collect();
    Ok(InspectReport {
        source: source(table),
        fingerprint: t.fingerprint(),
        objects: t.n_objects(),
        attributes: t.n_attributes(),
        id_column: t.label_column().map(str::to_owned),
        domains,
        duplicate_groups,
    })
}

pub fn cmd_approx(
    cli: &Cli,
    table: &Path,
    decision: &Option<String>,
    class: &str,
    attrs: &Option<Vec<String>>,
) -> CliResult<ApproxReport> {
    let d = load_decision(cli, table, decision)?;
    let t = d.base();
    let b = match attrs {
        Some(list) => {
            let list: Vec<&str> = list
                .iter()
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .collect();
            let b = t.attribute_set(&list)?;
            d.check_conditions(&b)?;
            b
        }
        None => d.conditions().clone(),
    };
    let x = decision_class(&d, class)?;
    let r = regions(t, &x, &b)?;
    Ok(ApproxReport {
        source: source(table),
        fingerprint: t.fingerprint(),
        decision: d.decision_name().to_owned(),
        class: class.to_owned(),
        attributes: names(t, &b),
        target: t.labels(&x),
        lower: t.labels(&r.lower),
        upper: t.labels(&r.upper),
        positive: t.labels(&r.positive),
        boundary: t.labels(&r.boundary),
        negative: t.labels(&r.negative),
        accuracy: r.accuracy.map(Rational::from),
        definability: r.category.as_str().to_owned(),
    })
}

pub fn cmd_reducts(
    cli: &Cli,
    table: &Path,
    decision: &Option<String>,
    cap: usize,
) -> CliResult<ReductReport> {
    let options = SearchOptions {
        cap,
        ..SearchOptions::default()
    };
    match decision {
        Some(name) => {
            let (t, _) = load(cli, table)?;
            let d = DecisionTable::new(t, name)?;
            let rs = reducts::find_decision_reducts_with(&d, options)?;
            let t = d.base();
            Ok(ReductReport {
                source: source(table),
                fingerprint: t.fingerprint(),
                mode: "decision".into(),
                decision: Some(d.decision_name().to_owned()),
                candidates: names(t, d.conditions()),
                reducts: rs.reducts.iter().map(|r| names(t, r)).collect(),
                core: names(t, &rs.core),
            })
        }
        None => {
            let (t, _) = load(cli, table)?;
            let rs = reducts::find_reducts_with(&t, options)?;
            Ok(ReductReport {
                source: source(table),
                fingerprint: t.fingerprint(),
                mode: "information".into(),
                decision: None,
                candidates: names(&t, &t.all_attributes()),
                reducts: rs.reducts.iter().map(|r| names(&t, r)).collect(),
                core: names(&t, &rs.core),
            })
        }
    }
}

fn rule_entry(rs: &RuleSet, id: usize, r: &Rule) -> RuleEntry {
    RuleEntry {
        id,
        kind: r.kind.as_str().to_owned(),
        conditions: r
            .conditions
            .iter()
            .map(|c| Condition {
                attribute: rs.schema.attribute_name(c.attribute).to_owned(),
                value: c.value.0.clone(),
            })
            .collect(),
        decisions: r.decisions.iter().map(|v| v.0.clone()).collect(),
        text: rs.describe(r),
        length: r.metrics.length,
        support: r.metrics.support,
        strength: r.metrics.strength,
        coverage: r.metrics.coverage.into(),
        discrimination_level: r.metrics.discrimination_level.map(Rational::from),
    }
}

fn value_counts(entries: &[(Value, usize)]) -> Vec<ValueCount> {
    entries
        .iter()
        .map(|(v, n)| ValueCount {
            value: v.0.clone(),
            count: *n,
        })
        .collect()
}

/// Builds the full analysis for a decision table and its induced rules.
pub fn analyse(d: &DecisionTable, rs: &RuleSet, source: String) -> Result<AnalysisReport> {
    let t = d.base();
    let mut classes = Vec::new();
    for (value, x) in decision_classes(d) {
        let r = regions(t, &x, d.conditions())?;
        classes.push(ClassSummary {
            value: value.0,
            size: x.len(),
            lower: t.labels(&r.lower),
            upper: t.labels(&r.upper),
            boundary: t.labels(&r.boundary),
            negative: t.labels(&r.negative),
            accuracy: r.accuracy.map(Rational::from),
            definability: r.category.as_str().to_owned(),
        });
    }
    let reducts = match find_decision_reducts(d) {
        Ok(found) => Some(ReductSummary {
            reducts: found.reducts.iter().map(|r| names(t, r)).collect(),
            core: names(t, &found.core),
        }),
        Err(RoughError::Capacity { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(AnalysisReport {
        source,
        fingerprint: t.fingerprint(),
        objects: t.n_objects(),
        decision: d.decision_name().to_owned(),
        conditions: names(t, d.conditions()),
        consistency: consistency_factor(d).into(),
        deterministic: is_deterministic(d),
        classes,
        reducts,
        exact_rules: rs.exact().count(),
        approximate_rules: rs.approximate().count(),
        rules: rs
            .rules
            .iter()
            .enumerate()
            .map(|(i, r)| rule_entry(rs, i + 1, r))
            .collect(),
        decision_support: value_counts(&rs.decision_support),
        redundancy: value_counts(&rs.redundancy),
        rules_file: None,
    })
}

pub fn cmd_rules(
    cli: &Cli,
    table: &Path,
    decision: &Option<String>,
    out: &Option<PathBuf>,
) -> CliResult<AnalysisReport> {
    let d = load_decision(cli, table, decision)?;
    let rs = induce_rules(&d)?;
    let mut report = analyse(&d, &rs, source(table))?;
    if let Some(path) = out {
        fs::write(path, write_rules(&rs)).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        report.rules_file = Some(path.display().to_string());
    }
    Ok(report)
}

pub fn cmd_classify(cli: &Cli, rules_path: &Path, objects: &Path) -> CliResult<ClassifyReport> {
    let rs = parse_rules(&read(rules_path)?)?;
    let (t, _) = load(cli, objects)?;
    // schema id -> column in the objects table, for attributes rules use
    let mut columns = HashMap::new();
    for r in &rs.rules {
        for c in &r.conditions {
            if columns.contains_key(&c.attribute) {
                continue;
            }
            let name = rs.schema.attribute_name(c.attribute);
            let col = t
                .attribute_id(name)
                .map_err(|_| RoughError::MissingObjectAttribute(name.to_owned()))?;
            columns.insert(c.attribute, col);
        }
    }
    let mut results = Vec::new();
    for x in t.objects() {
        let object: HashMap<AttributeId, Value> = columns
            .iter()
            .map(|(&a, &col)| (a, t.value(x, col).clone()))
            .collect();
        let c = classify(&rs, &object)?;
        let (verdict, decisions) = match c.verdict {
            Verdict::Decision(v) => ("decision", vec![v.0]),
            Verdict::Possible(vs) => ("possible", vs.into_iter().map(|v| v.0).collect()),
            Verdict::Abstain => ("abstain", Vec::new()),
        };
        results.push(ObjectVerdict {
            object: t.label(x),
            verdict: verdict.to_owned(),
            decisions,
            fired: c.fired.iter().map(|i| i + 1).collect(),
        });
    }
    Ok(ClassifyReport {
        rules: source(rules_path),
        rules_source: rs.source.clone(),
        objects_source: source(objects),
        decision: rs.schema.decision.clone(),
        results,
    })
}

pub fn execute(cli: &Cli) -> CliResult<Report> {
    Ok(match &cli.command {
        Command::Inspect { table } => Report::Inspect(cmd_inspect(cli, table)?),
        Command::Approx {
            table,
            decision,
            class,
            attrs,
        } => Report::Approx(cmd_approx(cli, table, decision, class, attrs)?),
        Command::Reducts {
            table,
            decision,
            cap,
        } => Report::Reducts(cmd_reducts(cli, table, decision, *cap)?),
        Command::Rules {
            table,
            decision,
            out,
        } => Report::Rules(cmd_rules(cli, table, decision, out)?),
        Command::Classify { rules, objects } => {
            Report::Classify(cmd_classify(cli, rules, objects)?)
        }
    })
}

pub fn json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

/// Runs a parsed command line and returns what should go to stdout.
pub fn run(cli: &Cli) -> CliResult<String> {
    let report = execute(cli)?;
    Ok(if cli.json || cli.output == OutputMode::Json {
        json(&report)
    } else {
        text(&report)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_kind() {
        assert_eq!(
            CliError::from(RoughError::NoAttributes).exit_code(),
            exit::PARSE
        );
        assert_eq!(
            CliError::from(RoughError::UnknownClass("x".into())).exit_code(),
            exit::SEMANTIC
        );
        let cap = RoughError::Capacity {
            attributes: 30,
            cap: 24,
        };
        assert_eq!(CliError::from(cap).exit_code(), exit::CAPACITY);
        assert_eq!(CliError::Usage(String::new()).exit_code(), exit::USAGE);
        let io = CliError::Io {
            path: "x".into(),
            source: io::Error::other("boom"),
        };
        assert_eq!(io.exit_code(), exit::IO);
    }

    #[test]
    fn cli_parses_global_flags_after_subcommand() {
        let cli = Cli::try_parse_from([
            "roughset",
            "approx",
            "t.csv",
            "--class",
            "Yes",
            "--attrs",
            "Coal,Sulfur",
            "--json",
        ])
        .unwrap();
        assert!(cli.json);
        match cli.command {
            Command::Approx { attrs, class, .. } => {
                assert_eq!(class, "Yes");
                assert_eq!(attrs.unwrap(), ["Coal", "Sulfur"]);
            }
            other => panic!("{other:?}"),
        }
    }
}
