//! Command-line front end for `hopfquiver`: argument grammar, file formats,
//! and report output.
//!
//! Every verb prints one JSON document (or a CSV table) carrying the tool
//! version, the primes and the seed. Exit codes: 0 ok, 1 verification
//! failure, 2 input error.

pub mod dump;
pub mod error;
pub mod schema;

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfquiver::bimodule::DEFAULT_SAMPLES;
use hopfquiver::{
    automorphisms, braiding, character_table, choose_prime, coinvariant_yd, count_classes, enumerate_types, isomorphic,
    parse_group, parse_ramification, type_one_dims, FieldPrime, GradedDims, Group, GroupContext, HopfBimodule, IsoMode,
    NicholsLimits, Report, Rsr, TruncatedHopf, VerifyMode, DEFAULT_ORDER_CAP,
};
use serde_json::{json, Value};

pub use error::CliError;
use schema::{type_json, ClassRef, DimsJson, ReportJson, RsrJson};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Prime count used for Nichols ranks when `NPRIMES` is unset.
pub const DEFAULT_NPRIMES: usize = 3;

#[derive(Debug, Parser)]
#[command(name = "hopfquiver", version, about = "Hopf quivers, RSRs, Hopf bimodules and Nichols algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order, classes, centralizers and automorphism data of a group.
    GroupInfo(Opts),
    /// Character table of a group, or of the centralizer of a class (--class).
    Chartab(Opts),
    /// Number of isomorphism classes of RSRs on a ramification.
    RsrCount(Opts),
    /// One type per isomorphism class of RSRs on a ramification.
    RsrEnumerate(Opts),
    /// Whether two RSR files describe isomorphic RSRs.
    RsrIso(Opts),
    /// Build and check the Hopf bimodule of each RSR.
    BimoduleVerify(Opts),
    /// Build and check the coinvariant Yetter-Drinfeld module and its braiding.
    YdVerify(Opts),
    /// Graded dimensions of the Nichols algebra of each RSR.
    NicholsDims(Opts),
    /// Check the truncated tensor Hopf algebra of each RSR.
    HopfVerify(Opts),
    /// Graded dimensions of the type-one Hopf algebra of each RSR.
    HopfDims(Opts),
    /// Run every verifier over a census of small RSRs.
    Selftest(Opts),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    /// Bare answer; only for verbs with a scalar or vector result.
    Text,
}

#[derive(Clone, Debug, Default, Args)]
pub struct Opts {
    /// Group spec: a name (S3, A4, D4, Q8, C6, S3xC2) or `perm:(0 1 2);(0 1)`.
    #[arg(long)]
    pub group: Option<String>,
    /// Ramification: comma-separated `rep:count`, e.g. `e:2,(0 1):1`.
    #[arg(long)]
    pub ram: Option<String>,
    /// RSR JSON file; repeatable. Without it, every type on --ram is used.
    #[arg(long = "rsr")]
    pub rsr: Vec<PathBuf>,
    /// Splitting prime; defaults to the smallest valid one.
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub max_degree: Option<usize>,
    /// rsr-iso: assume-inner | search-aut. Verifiers: auto | exhaustive | sampled.
    #[arg(long)]
    pub mode: Option<String>,
    /// Sample count for sampled verification.
    #[arg(long)]
    pub samples: Option<u64>,
    /// Class whose centralizer chartab should use.
    #[arg(long)]
    pub class: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// bimodule-verify / hopf-verify: write a structure dump of the first RSR.
    #[arg(long)]
    pub dump: Option<PathBuf>,
    /// bimodule-verify: write the quiver of the first RSR as DOT.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

/// What a verb produced.
pub struct Output {
    pub json: Value,
    pub table: (Vec<String>, Vec<Vec<String>>),
    pub text: Option<String>,
    pub failed: bool,
}

/// Parses `argv` (including the program name), runs the verb and writes its
/// report. Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cmd: &Command) -> Result<i32, CliError> {
    let (verb, opts) = verb_and_opts(cmd);
    let out = match cmd {
        Command::GroupInfo(o) => group_info(o)?,
        Command::Chartab(o) => chartab(o)?,
        Command::RsrCount(o) => rsr_count(o)?,
        Command::RsrEnumerate(o) => rsr_enumerate(o)?,
        Command::RsrIso(o) => rsr_iso(o)?,
        Command::BimoduleVerify(o) => bimodule_verify(o)?,
        Command::YdVerify(o) => yd_verify(o)?,
        Command::NicholsDims(o) => dims_verb(o, false)?,
        Command::HopfVerify(o) => hopf_verify(o)?,
        Command::HopfDims(o) => dims_verb(o, true)?,
        Command::Selftest(o) => selftest(o)?,
    };
    let rendered = match opts.format {
        Format::Json => {
            let mut v = out.json;
            if let Value::Object(m) = &mut v {
                m.insert("tool-version".into(), json!(TOOL_VERSION));
                m.insert("command".into(), json!(verb));
                m.insert("seed".into(), json!(opts.seed));
            }
            serde_json::to_string_pretty(&v).expect("values serialize") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&out.table.0)?;
            for row in &out.table.1 {
                w.write_record(row)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::Input(e.to_string()))?).expect("csv output is utf-8")
        }
        Format::Text => match out.text {
            Some(t) => t + "\n",
            None => return Err(CliError::Input(format!("{verb} has no text format; use json or csv"))),
        },
    };
    match &opts.out {
        Some(p) => write_file(p, &rendered)?,
        None => {
            let mut so = std::io::stdout().lock();
            let _ = so.write_all(rendered.as_bytes());
        }
    }
    Ok(if out.failed { 1 } else { 0 })
}

fn verb_and_opts(cmd: &Command) -> (&'static str, &Opts) {
    match cmd {
        Command::GroupInfo(o) => ("group-info", o),
        Command::Chartab(o) => ("chartab", o),
        Command::RsrCount(o) => ("rsr-count", o),
        Command::RsrEnumerate(o) => ("rsr-enumerate", o),
        Command::RsrIso(o) => ("rsr-iso", o),
        Command::BimoduleVerify(o) => ("bimodule-verify", o),
        Command::YdVerify(o) => ("yd-verify", o),
        Command::NicholsDims(o) => ("nichols-dims", o),
        Command::HopfVerify(o) => ("hopf-verify", o),
        Command::HopfDims(o) => ("hopf-dims", o),
        Command::Selftest(o) => ("selftest", o),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn nprimes() -> Result<usize, CliError> {
    match std::env::var("NPRIMES") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Input(format!("NPRIMES must be a positive integer, got '{s}'"))),
        },
        Err(_) => Ok(DEFAULT_NPRIMES),
    }
}

fn load_group(spec: &str) -> Result<Arc<Group>, CliError> {
    Ok(Arc::new(parse_group(spec, DEFAULT_ORDER_CAP)?))
}

fn field_prime(g: &Group, p: Option<u64>) -> Result<FieldPrime, CliError> {
    match p {
        None => Ok(choose_prime(g, 0)),
        Some(p) => FieldPrime::for_group(g, p).ok_or_else(|| {
            CliError::Input(format!(
                "{p} is not a splitting prime (need p prime, p > 2|G|, p = 1 mod {})",
                g.exponent()
            ))
        }),
    }
}

fn require<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    v.as_deref().ok_or_else(|| CliError::Input(format!("{flag} is required")))
}

fn context(o: &Opts) -> Result<(String, Arc<GroupContext>), CliError> {
    let spec = require(&o.group, "--group")?.to_string();
    let g = load_group(&spec)?;
    let fp = field_prime(&g, o.prime)?;
    Ok((spec, Arc::new(GroupContext::new(g, fp)?)))
}

fn inner_only_json(ctx: &GroupContext) -> Value {
    match ctx.inner_only() {
        Some(b) => json!(b),
        None => Value::Null,
    }
}

fn names(g: &Group, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter().map(|x| g.element_name(x)).collect()
}

fn group_info(o: &Opts) -> Result<Output, CliError> {
    let spec = require(&o.group, "--group")?;
    let g = load_group(spec)?;
    let fp = field_prime(&g, o.prime)?;
    let classes: Vec<Value> = g
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "index": i,
                "rep": g.element_name(c.rep),
                "size": c.size(),
                "element_order": c.element_order,
                "centralizer_order": g.order() / c.size(),
            })
        })
        .collect();
    let aut = automorphisms(&g, hopfquiver::automorphism::DEFAULT_AUT_CAP).ok();
    let inner_only =
        if hopfquiver::automorphism::known_inner_only(&g) { Some(true) } else { aut.as_ref().map(|a| a.inner_only) };
    let table = (
        vec!["index", "rep", "size", "element_order", "centralizer_order"].into_iter().map(String::from).collect(),
        g.classes()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                vec![
                    i.to_string(),
                    g.element_name(c.rep),
                    c.size().to_string(),
                    c.element_order.to_string(),
                    (g.order() / c.size()).to_string(),
                ]
            })
            .collect(),
    );
    Ok(Output {
        json: json!({
            "group": spec,
            "order": g.order(),
            "degree": g.degree(),
            "exponent": g.exponent(),
            "center_order": g.center_order(),
            "generators": names(&g, g.generators().iter().copied()),
            "classes": classes,
            "automorphism_count": aut.as_ref().map(|a| a.elements.len()),
            "inner_only": inner_only,
            "primes": [fp.p],
        }),
        table,
        text: None,
        failed: false,
    })
}

fn chartab(o: &Opts) -> Result<Output, CliError> {
    let spec = require(&o.group, "--group")?;
    let g = load_group(spec)?;
    let fp = field_prime(&g, o.prime)?;
    let (label, z) = match &o.class {
        None => (Value::Null, g.clone()),
        Some(c) => {
            let ci = ClassRef::Member(c.clone()).resolve(&g)?;
            let ctx = hopfquiver::ClassCtx::new(&g, ci);
            (json!(g.element_name(ctx.rep())), ctx.centralizer().group().clone())
        }
    };
    let t = character_table(&z, &fp)?;
    let class_names = names(&z, z.classes().iter().map(|k| k.rep));
    let mut headers = vec!["character".to_string(), "degree".to_string()];
    headers.extend(class_names.iter().cloned());
    let rows = t
        .rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = vec![i.to_string(), t.degrees[i].to_string()];
            row.extend(r.iter().map(u64::to_string));
            row
        })
        .collect();
    Ok(Output {
        json: json!({
            "group": spec,
            "centralizer_of": label,
            "primes": [fp.p],
            "p": fp.p,
            "classes": class_names,
            "class_sizes": t.class_sizes,
            "degrees": t.degrees,
            "rows": t.rows,
        }),
        table: (headers, rows),
        text: None,
        failed: false,
    })
}

fn census_input(o: &Opts) -> Result<(String, Arc<GroupContext>, hopfquiver::Ramification), CliError> {
    let (spec, ctx) = context(o)?;
    let ram = parse_ramification(ctx.group(), require(&o.ram, "--ram")?)?;
    Ok((spec, ctx, ram))
}

fn rsr_count(o: &Opts) -> Result<Output, CliError> {
    let (spec, ctx, ram) = census_input(o)?;
    let count = count_classes(&ctx, &ram);
    let inner = ctx.inner_only();
    if inner != Some(true) {
        eprintln!("warning: Aut G = Inn G is not established; the count is the number of types");
    }
    let count_json = match u64::try_from(&count) {
        Ok(c) => json!(c),
        Err(_) => json!(count.to_string()),
    };
    Ok(Output {
        json: json!({
            "group": spec,
            "ramification": ram.to_spec(ctx.group()),
            "primes": [ctx.prime().p],
            "count": count_json,
            "inner_only": inner_only_json(&ctx),
        }),
        table: (
            vec!["group".into(), "ramification".into(), "count".into()],
            vec![vec![spec.clone(), ram.to_spec(ctx.group()), count.to_string()]],
        ),
        text: Some(count.to_string()),
        failed: false,
    })
}

fn rsr_enumerate(o: &Opts) -> Result<Output, CliError> {
    let (spec, ctx, ram) = census_input(o)?;
    let g = ctx.group().clone();
    let types = enumerate_types(&ctx, &ram);
    let characters: Vec<Value> =
        ram.support().map(|(c, _)| json!({ "class": ClassRef::of(&g, c), "degrees": ctx.table(c).degrees })).collect();
    let mut rows = Vec::new();
    for (k, t) in types.iter().enumerate() {
        for (c, m) in &t.classes {
            rows.push(vec![
                k.to_string(),
                g.element_name(g.classes()[*c].rep),
                m.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
            ]);
        }
    }
    Ok(Output {
        json: json!({
            "group": spec,
            "ramification": ram.to_spec(&g),
            "primes": [ctx.prime().p],
            "inner_only": inner_only_json(&ctx),
            "characters": characters,
            "count": types.len(),
            "types": types.iter().map(|t| type_json(&g, t)).collect::<Vec<_>>(),
        }),
        table: (vec!["type".into(), "class".into(), "multiplicities".into()], rows),
        text: None,
        failed: false,
    })
}

/// RSRs named by --rsr files, or every type on --group/--ram.
struct RsrSet {
    group_spec: String,
    items: Vec<(String, Rsr)>,
}

fn load_rsrs(o: &Opts) -> Result<RsrSet, CliError> {
    if o.rsr.is_empty() {
        let (spec, ctx, ram) = census_input(o)?;
        let items = enumerate_types(&ctx, &ram)
            .iter()
            .enumerate()
            .map(|(k, t)| Ok((format!("type {k}"), Rsr::from_type(ctx.clone(), t)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        return Ok(RsrSet { group_spec: spec, items });
    }
    let mut contexts: BTreeMap<(String, u64), Arc<GroupContext>> = BTreeMap::new();
    let mut items = Vec::new();
    let mut group_spec = None;
    for path in &o.rsr {
        let text =
            fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        let file: RsrJson = serde_json::from_str(&text)
            .map_err(|source| CliError::Json { path: path.display().to_string(), source })?;
        let g = load_group(&file.group)?;
        let fp = field_prime(&g, file.prime.or(o.prime))?;
        let ctx = match contexts.get(&(file.group.clone(), fp.p)) {
            Some(c) => c.clone(),
            None => {
                let c = Arc::new(GroupContext::new(g, fp)?);
                contexts.insert((file.group.clone(), fp.p), c.clone());
                c
            }
        };
        group_spec.get_or_insert_with(|| file.group.clone());
        items.push((path.display().to_string(), file.to_rsr(ctx)?));
    }
    Ok(RsrSet { group_spec: group_spec.unwrap_or_default(), items })
}

fn rsr_iso(o: &Opts) -> Result<Output, CliError> {
    let set = load_rsrs(o)?;
    if set.items.len() != 2 {
        return Err(CliError::Input(format!("rsr-iso needs exactly two --rsr files, got {}", set.items.len())));
    }
    let (a, b) = (&set.items[0].1, &set.items[1].1);
    let mode = match o.mode.as_deref() {
        None => match a.context().inner_only() {
            Some(true) => IsoMode::AssumeInner,
            _ => IsoMode::SearchAut,
        },
        Some("assume-inner") => IsoMode::AssumeInner,
        Some("search-aut") => IsoMode::SearchAut,
        Some(m) => return Err(CliError::Input(format!("unknown mode '{m}' (assume-inner | search-aut)"))),
    };
    let iso = isomorphic(a, b, mode)?;
    let g = a.group();
    Ok(Output {
        json: json!({
            "group": set.group_spec,
            "primes": [a.prime().p],
            "mode": match mode { IsoMode::AssumeInner => "assume-inner", IsoMode::SearchAut => "search-aut" },
            "isomorphic": iso,
            "types": [type_json(g, &a.rsr_type()?), type_json(g, &b.rsr_type()?)],
        }),
        table: (
            vec!["first".into(), "second".into(), "isomorphic".into()],
            vec![vec![set.items[0].0.clone(), set.items[1].0.clone(), iso.to_string()]],
        ),
        text: Some(iso.to_string()),
        failed: false,
    })
}

fn bimodule_mode(o: &Opts) -> Result<VerifyMode, CliError> {
    Ok(match o.mode.as_deref() {
        None | Some("auto") => VerifyMode::Auto { seed: o.seed },
        Some("exhaustive") => VerifyMode::Exhaustive,
        Some("sampled") => VerifyMode::Sampled { samples: o.samples.unwrap_or(DEFAULT_SAMPLES), seed: o.seed },
        Some(m) => return Err(CliError::Input(format!("unknown mode '{m}' (auto | exhaustive | sampled)"))),
    })
}

/// Per-RSR verification results as JSON, CSV rows, and an overall verdict.
struct Verdicts {
    results: Vec<Value>,
    rows: Vec<Vec<String>>,
    failed: bool,
    primes: Vec<u64>,
}

impl Verdicts {
    fn new() -> Self {
        Verdicts { results: Vec::new(), rows: Vec::new(), failed: false, primes: Vec::new() }
    }

    fn push(&mut self, label: &str, rsr_json: &RsrJson, reports: &[(&str, &Report)], extra: Value) {
        let mut entry = json!({ "input": label, "rsr": rsr_json });
        for (name, r) in reports {
            if !r.passed() {
                self.failed = true;
                if let Some(c) = r.first_failure() {
                    eprintln!("FAIL {label}: {name}/{}: {}", c.name, c.failure.as_deref().unwrap_or(""));
                }
            }
            for c in &r.checks {
                self.rows.push(vec![
                    label.to_string(),
                    name.to_string(),
                    c.name.clone(),
                    c.cases.to_string(),
                    c.passed().to_string(),
                    c.failure.clone().unwrap_or_default(),
                ]);
            }
            entry[*name] = json!(ReportJson::from(*r));
        }
        if let (Value::Object(e), Value::Object(x)) = (&mut entry, extra) {
            e.extend(x);
        }
        if let Some(p) = rsr_json.prime {
            if !self.primes.contains(&p) {
                self.primes.push(p);
            }
        }
        self.results.push(entry);
    }

    fn finish(self, group: &str) -> Output {
        let headers = ["input", "report", "check", "cases", "passed", "failure"].map(String::from).to_vec();
        Output {
            json: json!({
                "group": group,
                "primes": self.primes,
                "passed": !self.failed,
                "results": self.results,
            }),
            table: (headers, self.rows),
            text: None,
            failed: self.failed,
        }
    }
}

fn bimodule_verify(o: &Opts) -> Result<Output, CliError> {
    let set = load_rsrs(o)?;
    let mode = bimodule_mode(o)?;
    let mut v = Verdicts::new();
    for (k, (label, rsr)) in set.items.iter().enumerate() {
        let m = HopfBimodule::build(rsr, o.seed)?;
        if k == 0 {
            if let Some(p) = &o.dump {
                let d = serde_json::to_string_pretty(&dump::bimodule_dump(&m, o.seed)).expect("dump serializes");
                write_file(p, &(d + "\n"))?;
            }
            if let Some(p) = &o.dot {
                write_file(p, &dump::quiver_dot(m.quiver()))?;
            }
        }
        let r = m.verify(mode);
        v.push(
            label,
            &RsrJson::from_rsr(&set.group_spec, rsr),
            &[("bimodule", &r)],
            json!({ "arrows": m.arrow_count() }),
        );
    }
    Ok(v.finish(&set.group_spec))
}

fn yd_verify(o: &Opts) -> Result<Output, CliError> {
    let set = load_rsrs(o)?;
    let mut v = Verdicts::new();
    for (label, rsr) in &set.items {
        let m = HopfBimodule::build(rsr, o.seed)?;
        let yd = coinvariant_yd(&m);
        let c = braiding(&yd);
        let (ry, rc) = (yd.verify(), c.verify());
        let degrees = names(rsr.group(), yd.degrees().iter().copied());
        v.push(
            label,
            &RsrJson::from_rsr(&set.group_spec, rsr),
            &[("yd", &ry), ("braiding", &rc)],
            json!({ "dim": yd.dim(), "degrees": degrees }),
        );
    }
    Ok(v.finish(&set.group_spec))
}

fn hopf_samples(o: &Opts) -> Result<Option<u64>, CliError> {
    Ok(match o.mode.as_deref() {
        None | Some("auto") => o.samples,
        Some("exhaustive") => Some(1 << 40),
        Some("sampled") => Some(o.samples.unwrap_or(2_000)),
        Some(m) => return Err(CliError::Input(format!("unknown mode '{m}' (auto | exhaustive | sampled)"))),
    })
}

fn hopf_verify(o: &Opts) -> Result<Output, CliError> {
    let set = load_rsrs(o)?;
    let n = o.max_degree.unwrap_or(3);
    let samples = hopf_samples(o)?;
    let mut v = Verdicts::new();
    for (k, (label, rsr)) in set.items.iter().enumerate() {
        let h = TruncatedHopf::from_rsr(rsr, n, o.seed)?;
        if k == 0 {
            if let Some(p) = &o.dump {
                let d = serde_json::to_string_pretty(&dump::hopf_dump(&h, o.seed)).expect("dump serializes");
                write_file(p, &(d + "\n"))?;
            }
        }
        let (rh, rs) = (h.verify(o.seed, samples), h.verify_skew_primitive());
        let dims: Vec<usize> = (0..=n).map(|d| h.degree_dim(d)).collect();
        v.push(
            label,
            &RsrJson::from_rsr(&set.group_spec, rsr),
            &[("hopf", &rh), ("skew-primitive", &rs)],
            json!({ "max_degree": n, "degree_dims": dims }),
        );
    }
    Ok(v.finish(&set.group_spec))
}

fn dims_verb(o: &Opts, type_one: bool) -> Result<Output, CliError> {
    let set = load_rsrs(o)?;
    let max = o.max_degree.unwrap_or(4);
    let np = nprimes()?;
    let limits = NicholsLimits::default();
    let mut results = Vec::new();
    let mut rows = Vec::new();
    let mut primes: Vec<u64> = Vec::new();
    let mut text = Vec::new();
    for (label, rsr) in &set.items {
        let d: GradedDims = if type_one {
            type_one_dims(rsr, max, np, &limits, o.seed)?
        } else {
            hopfquiver::rsr_nichols_dims(rsr, max, np, &limits, o.seed)?
        };
        if !d.agreed {
            eprintln!("warning: {label}: ranks differ across primes {:?}; reporting the maximum", d.primes);
        }
        for p in &d.primes {
            if !primes.contains(p) {
                primes.push(*p);
            }
        }
        for (k, x) in d.dims.iter().enumerate() {
            rows.push(vec![label.clone(), k.to_string(), x.to_string()]);
        }
        text.push(d.dims.iter().map(u64::to_string).collect::<Vec<_>>().join(" "));
        results.push(json!({
            "input": label,
            "rsr": RsrJson::from_rsr(&set.group_spec, rsr),
            "dims": DimsJson::from(&d),
        }));
    }
    Ok(Output {
        json: json!({ "group": set.group_spec, "primes": primes, "max_degree": max, "results": results }),
        table: (vec!["input".into(), "degree".into(), "dim".into()], rows),
        text: Some(text.join("\n")),
        failed: false,
    })
}

/// Ramifications used by `selftest` when --ram is absent: each class alone
/// with count 1 or 2, as long as `dim V` stays within the Nichols limit.
fn selftest_ramifications(g: &Group) -> Vec<String> {
    let limit = NicholsLimits::default().max_dim;
    let mut out = Vec::new();
    for c in g.classes() {
        for r in 1..=2 {
            if r * c.size() <= limit {
                out.push(format!("{}:{r}", g.element_name(c.rep)));
            }
        }
    }
    out
}

fn selftest(o: &Opts) -> Result<Output, CliError> {
    let (spec, ctx) = context(o)?;
    let g = ctx.group().clone();
    let rams = match &o.ram {
        Some(r) => vec![r.clone()],
        None => selftest_ramifications(&g),
    };
    let np = nprimes()?;
    let limits = NicholsLimits::default();
    let nmax = o.max_degree.unwrap_or(3);
    let mut v = Verdicts::new();
    for ram_spec in &rams {
        let ram = parse_ramification(&g, ram_spec)?;
        for (k, t) in enumerate_types(&ctx, &ram).iter().enumerate() {
            let rsr = Rsr::from_type(ctx.clone(), t)?;
            let label = format!("{ram_spec} type {k}");
            let m = HopfBimodule::build(&rsr, o.seed)?;
            let rb = m.verify(VerifyMode::Auto { seed: o.seed });
            let yd = coinvariant_yd(&m);
            let ry = yd.verify();
            let rc = braiding(&yd).verify();
            let h = TruncatedHopf::from_rsr(&rsr, 2, o.seed)?;
            let rh = h.verify(o.seed, Some(o.samples.unwrap_or(2_000)));
            let rs = h.verify_skew_primitive();
            let nd = hopfquiver::rsr_nichols_dims(&rsr, nmax, np, &limits, o.seed)?;
            let td = type_one_dims(&rsr, nmax, np, &limits, o.seed)?;
            let mut rn = Report::new(true, Some(o.seed));
            let dv = yd.dim() as u64;
            rn.check("degree-0").record(nd.dims[0] == 1, || format!("dim B(V)_0 = {}", nd.dims[0]));
            if nmax >= 1 {
                rn.check("degree-1")
                    .record(nd.dims[1] == dv, || format!("dim B(V)_1 = {} != dim V = {dv}", nd.dims[1]));
            }
            let bound = rn.check("tensor-bound");
            for (k, &x) in nd.dims.iter().enumerate() {
                bound.record(x <= dv.saturating_pow(k as u32), || format!("dim B(V)_{k} = {x} > (dim V)^{k}"));
            }
            let n = g.order() as u64;
            rn.check("type-one-biproduct").record(td.dims.iter().zip(&nd.dims).all(|(a, b)| *a == n * b), || {
                format!("{:?} != |G| x {:?}", td.dims, nd.dims)
            });
            if !nd.agreed {
                eprintln!("warning: {label}: ranks differ across primes {:?}", nd.primes);
            }
            v.push(
                &label,
                &RsrJson::from_rsr(&spec, &rsr),
                &[
                    ("bimodule", &rb),
                    ("yd", &ry),
                    ("braiding", &rc),
                    ("hopf", &rh),
                    ("skew-primitive", &rs),
                    ("nichols", &rn),
                ],
                json!({ "nichols_dims": DimsJson::from(&nd) }),
            );
        }
    }
    Ok(v.finish(&spec))
}
