use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use sharpbound::bounds;
use sharpbound::verify::{self, check_fixture, fixtures, SweepOptions, SCHEMA_VERSION};
use sharpbound::{Caps, Conjecture, GraphDocument, Mode, ObjectKind};

use crate::error::CliError;
use crate::{Format, KindArg, ModeArg};

fn read_input(path: Option<&Path>) -> Result<String, CliError> {
    match path {
        Some(p) if p != Path::new("-") => Ok(fs::read_to_string(p)?),
        _ => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

fn line<const N: usize>(fields: [(&str, &str, usize); N]) -> String {
    fields
        .iter()
        .map(|(_, sym, v)| format!("{sym}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn json_line(value: serde_json::Value) -> String {
    serde_json::to_string(&value).expect("json value serializes")
}

pub fn invariants(input: Option<&Path>, kind: Option<KindArg>, format: Format) -> Result<(), CliError> {
    let kind = kind.map(|k| match k {
        KindArg::Digraph => ObjectKind::Digraph,
        KindArg::Tree => ObjectKind::RootedTree,
        KindArg::Partition => ObjectKind::Partition,
    });
    let doc = GraphDocument::parse(&read_input(input)?, kind)?;
    let (table, characteristics) = match &doc {
        GraphDocument::Digraph(g) => {
            let ch = g.characteristics()?;
            (line(ch.fields()), serde_json::to_value(ch))
        }
        GraphDocument::RootedTree(t) => {
            let tc = t.characteristics();
            (line(tc.fields()), serde_json::to_value(tc))
        }
        GraphDocument::Partition(p) => {
            let pc = p.characteristics();
            (line(pc.fields()), serde_json::to_value(pc))
        }
    };
    match format {
        Format::Table => emit(&table),
        Format::Json => emit(&json_line(json!({
            "schema_version": SCHEMA_VERSION,
            "kind": doc.kind(),
            "characteristics": characteristics.expect("characteristics serialize"),
        }))),
    }
}

pub fn dot(input: Option<&Path>) -> Result<(), CliError> {
    match GraphDocument::parse(&read_input(input)?, Some(ObjectKind::Digraph))? {
        GraphDocument::Digraph(g) => emit(&g.to_dot()),
        _ => unreachable!("kind checked by parse"),
    }
}

/// Named parameters, looked up with `_` and `-` ignored and case folded.
struct Params(Vec<(String, usize)>);

impl Params {
    fn parse(raw: &[String], expected: &[&str]) -> Result<Self, CliError> {
        let norm = |k: &str| k.to_ascii_lowercase().replace(['_', '-'], "");
        let mut out: Vec<(String, usize)> = Vec::new();
        for item in raw {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("parameter {item:?} is not key=value")))?;
            let key = norm(k);
            if !expected.contains(&key.as_str()) {
                return Err(CliError::Usage(format!(
                    "unknown parameter {k:?}; expected {}",
                    expected.join(", ")
                )));
            }
            if out.iter().any(|(seen, _)| *seen == key) {
                return Err(CliError::Usage(format!("parameter {k:?} given twice")));
            }
            let value = v
                .parse()
                .map_err(|_| CliError::Usage(format!("parameter {k:?} must be a non-negative integer")))?;
            out.push((key, value));
        }
        if let Some(missing) = expected.iter().find(|e| !out.iter().any(|(k, _)| k == *e)) {
            return Err(CliError::Usage(format!("missing parameter {missing}")));
        }
        Ok(Self(out))
    }

    fn get(&self, key: &str) -> usize {
        self.0.iter().find(|(k, _)| k == key).map(|&(_, v)| v).expect("validated")
    }
}

fn parse_conjecture(s: &str) -> Result<Conjecture, CliError> {
    s.parse().map_err(|e: sharpbound::Error| CliError::Usage(e.to_string()))
}

pub fn bound(conjecture: &str, raw: &[String], format: Format) -> Result<(), CliError> {
    let conj = parse_conjecture(conjecture)?;
    let expected: &[&str] = match conj {
        Conjecture::Conj1 => &["v", "ccmax", "sccmin"],
        Conjecture::Conj2 => &["s", "ccmax", "sccmin"],
        Conjecture::Conj3 => &["v", "s", "sccmin"],
        Conjecture::Conj4 => &["v", "c", "ccmin", "sccmax"],
        Conjecture::Conj5 => &["n", "dmin", "dmax"],
        Conjecture::PartitionUpper => &["np", "mmin", "mdiff"],
        Conjecture::PartitionLower => &["np", "mmax", "mdiff"],
    };
    let p = Params::parse(raw, expected)?;
    let observed = conj.observed();

    if conj == Conjecture::Conj5 {
        let interval = bounds::tree_leaf_interval(p.get("n"), p.get("dmin"), p.get("dmax"))?;
        return match format {
            Format::Table => emit(&format!("\u{2113} \u{2208} {interval}")),
            Format::Json => emit(&json_line(json!({
                "schema_version": SCHEMA_VERSION,
                "conjecture": conj,
                "observed": observed,
                "interval": interval,
            }))),
        };
    }

    let (value, relation, case) = match conj {
        Conjecture::Conj1 => {
            let (v, m, s) = (p.get("v"), p.get("ccmax"), p.get("sccmin"));
            (bounds::conj1_bound(v, m, s)?, ">=", Some(bounds::conj1_case(v, m, s)?))
        }
        Conjecture::Conj2 => (
            bounds::conj2_bound(p.get("s"), p.get("ccmax"), p.get("sccmin"))?,
            ">=",
            None,
        ),
        Conjecture::Conj3 => {
            let (v, s, m) = (p.get("v"), p.get("s"), p.get("sccmin"));
            (bounds::conj3_bound(v, s, m)?, ">=", Some(bounds::conj3_case(v, s, m)?))
        }
        Conjecture::Conj4 => {
            let (v, c, m, s) = (p.get("v"), p.get("c"), p.get("ccmin"), p.get("sccmax"));
            (bounds::conj4_bound(v, c, m, s)?, ">=", Some(bounds::conj4_case(v, c, m, s)?))
        }
        Conjecture::PartitionUpper => (
            bounds::partition_nval_upper(p.get("np"), p.get("mmin"), p.get("mdiff"))?,
            "<=",
            None,
        ),
        Conjecture::PartitionLower => (
            bounds::partition_nval_lower(p.get("np"), p.get("mmax"), p.get("mdiff"))?,
            ">=",
            None,
        ),
        Conjecture::Conj5 => unreachable!("handled above"),
    };
    match format {
        Format::Table => {
            let mut text = format!("bound={value}");
            if let Some((case, _)) = case {
                text.push_str(&format!(" case={case}"));
            }
            emit(&text)
        }
        Format::Json => emit(&json_line(json!({
            "schema_version": SCHEMA_VERSION,
            "conjecture": conj,
            "observed": observed,
            "relation": relation,
            "bound": value,
            "case": case.map(|(c, _)| c.to_string()),
            "simplified_bound": case.map(|(_, b)| b),
        }))),
    }
}

pub struct VerifyArgs<'a> {
    pub conj: Option<&'a str>,
    pub max_n: Option<usize>,
    pub mode: ModeArg,
    pub jobs: usize,
    pub out: Option<&'a Path>,
    pub format: Format,
    pub force_cap: bool,
}

pub fn verify(args: VerifyArgs<'_>) -> Result<(), CliError> {
    let mode = match args.mode {
        ModeArg::Validity => Mode::Validity,
        ModeArg::Sharpness => Mode::Sharpness,
        ModeArg::Cases => Mode::Cases,
        ModeArg::TreePartition => Mode::TreePartition,
    };
    let conj = match (args.conj, mode) {
        (None, Mode::TreePartition) => Conjecture::Conj5,
        (Some(c), _) => parse_conjecture(c)?,
        (None, _) => return Err(CliError::Usage("--conj is required for this mode".into())),
    };
    if mode == Mode::TreePartition && conj != Conjecture::Conj5 {
        return Err(CliError::Usage("tree-partition mode checks conj5 only".into()));
    }
    if mode == Mode::Cases && conj.table().is_none() {
        return Err(CliError::Usage(format!("{conj} has no case table; use conj1, conj3 or conj4")));
    }
    let caps = if args.force_cap {
        Caps::unlimited()
    } else {
        Caps::from_env()?
    };
    let max_n = args.max_n.unwrap_or_else(|| conj.default_max_size());
    let opts = SweepOptions::default().with_jobs(args.jobs).with_caps(caps);
    let report = verify::run(conj, mode, max_n, &opts)?;

    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Table => report.to_table(),
    };
    match args.out {
        Some(path) => {
            let mut body = text;
            if !body.ends_with('\n') {
                body.push('\n');
            }
            fs::write(path, body)?
        }
        None => emit(&text)?,
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Violations(report.violations.len()))
    }
}

#[derive(Serialize)]
struct CatalogueEntry {
    case: String,
    instance: String,
    parameters: serde_json::Map<String, serde_json::Value>,
    observed: String,
    value: usize,
    bound: Option<usize>,
    simplified_bound: Option<usize>,
    equality: bool,
    error: Option<String>,
}

pub fn witnesses(conj: &str, format: Format) -> Result<(), CliError> {
    let conj = parse_conjecture(conj)?;
    if conj.table().is_none() {
        return Err(CliError::Usage(format!("{conj} has no case table; use conj1, conj3 or conj4")));
    }
    let entries: Vec<CatalogueEntry> = fixtures(conj)
        .into_iter()
        .map(|f| {
            let checked = check_fixture(&f);
            CatalogueEntry {
                case: f.case.to_string(),
                instance: GraphDocument::Digraph(f.instance.clone()).to_json(),
                parameters: f.parameters.iter().map(|&(k, v)| (k.to_string(), json!(v))).collect(),
                observed: f.expected.0.to_string(),
                value: f.expected.1,
                bound: checked.as_ref().ok().map(|c| c.bound),
                simplified_bound: checked.as_ref().ok().map(|c| c.simplified_bound),
                equality: checked.is_ok(),
                error: checked.err().map(|e| e.to_string()),
            }
        })
        .collect();
    let failures = entries.iter().filter(|e| !e.equality).count();
    match format {
        Format::Json => emit(&json_line(json!({
            "schema_version": SCHEMA_VERSION,
            "conjecture": conj,
            "witnesses": entries,
        })))?,
        Format::Table => {
            let mut text = String::new();
            for e in &entries {
                let params = e
                    .parameters
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                let verdict = match &e.error {
                    None => "equality holds".to_string(),
                    Some(err) => format!("FAILED ({err})"),
                };
                text.push_str(&format!(
                    "case {}\n  instance    {}\n  parameters  {}\n  {} = {}, bound = {}: {}\n",
                    e.case,
                    e.instance,
                    params,
                    e.observed,
                    e.value,
                    e.bound.map_or("-".to_string(), |b| b.to_string()),
                    verdict
                ));
            }
            emit(&text)?
        }
    }
    if failures > 0 {
        Err(CliError::Violations(failures))
    } else {
        Ok(())
    }
}
