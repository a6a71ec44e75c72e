//! Subcommands. Each returns a [`Report`] carrying both renderings; the
//! binary prints one of them.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use nanoword::bracket::{bracket_star, jones_star, writhe_star};
use nanoword::codec::encode;
use nanoword::kei::{count_colorings, fixture, gamma_group, presentation, FiniteKei, FIXTURE_NAMES};
use nanoword::presets::{alpha_0, alpha_1, alpha_star, datum, preset_name, projection, DataMorphism, KeiDatum};
use nanoword::search::{replay, Reduction};
use nanoword::{apply, bracket, equivalent, jones, reduce, writhe, Equivalence, HomotopyData, LaurentPoly, Move, Nanophrase,
    SearchBudget};
use serde_json::{json, Map, Value};

use crate::format::{self, parse_auto};
use crate::{chord, keifile};

#[derive(Debug, Parser)]
#[command(name = "nanoword", version, about = "Homotopy of nanowords and nanophrases: moves, brackets and kei colorings")]
pub struct Cli {
    /// Print a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a phrase file and list every problem.
    Validate { file: PathBuf },
    /// Bracket, writhe, Jones polynomial and kei coloring counts.
    Invariants { file: PathBuf },
    /// Map a phrase along a projection of homotopy data.
    Project {
        file: PathBuf,
        #[arg(long, value_parser = ["alpha_0", "alpha_1", "alpha_2"])]
        to: String,
    },
    /// Turn a signed Gauss code into a nanophrase over alpha_star.
    Encode { file: PathBuf },
    /// Search for a smallest phrase reachable by homotopy moves.
    Reduce {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Search for a move path between two phrases.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Kei presentation of a phrase, its group and coloring counts.
    Kei {
        file: PathBuf,
        #[arg(long, value_enum)]
        datum: DatumArg,
        /// Close the words: identify each input with its output.
        #[arg(long)]
        hat: bool,
        /// Also print the group presentation of the kei.
        #[arg(long)]
        group: bool,
        /// Count colorings by a shipped kei (dihedral3, dihedral5, trivial1).
        #[arg(long, conflicts_with = "kei_file")]
        color: Option<String>,
        /// Count colorings by a kei read from a file.
        #[arg(long)]
        kei_file: Option<PathBuf>,
    },
    /// Draw the chord diagram of a phrase as SVG.
    Chord {
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DatumArg {
    Link,
    Curve,
    Quasi,
}

impl DatumArg {
    fn name(self) -> &'static str {
        match self {
            DatumArg::Link => "link",
            DatumArg::Curve => "curve",
            DatumArg::Quasi => "quasi",
        }
    }
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    #[arg(long, default_value_t = SearchBudget::default().max_letters)]
    pub max_letters: usize,
    #[arg(long, default_value_t = SearchBudget::default().max_depth)]
    pub max_depth: usize,
    #[arg(long, default_value_t = SearchBudget::default().max_states)]
    pub max_states: usize,
    /// Longest run of consecutive insertions.
    #[arg(long, default_value_t = SearchBudget::default().max_insertions)]
    pub max_insertions: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_letters: self.max_letters,
            max_depth: self.max_depth,
            max_states: self.max_states,
            max_insertions: self.max_insertions,
        }
    }
}

/// Outcome of a subcommand: exit code plus text and JSON renderings.
#[derive(Debug)]
pub struct Report {
    pub code: u8,
    pub text: String,
    pub json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { code: 0, text, json }
    }
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Invariants { file } => invariants(file),
        Command::Project { file, to } => project(file, to),
        Command::Encode { file } => encode_file(file),
        Command::Reduce { file, budget } => reduce_file(file, budget.budget()),
        Command::Equiv { first, second, budget } => equiv(first, second, budget.budget()),
        Command::Kei { file, datum, hat, group, color, kei_file } => {
            kei(file, *datum, *hat, *group, color.as_deref(), kei_file.as_deref())
        }
        Command::Chord { file, out } => chord_file(file, out),
    }
}

fn read(path: &Path) -> Result<format::Document> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_auto(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Data and phrase of a phrase file; an invalid phrase is an error.
fn load(path: &Path) -> Result<(HomotopyData, Nanophrase)> {
    let doc = read(path)?;
    let data = doc.data()?;
    let phrase = doc
        .raw_phrase()?
        .resolve(&data)
        .map_err(|report| anyhow!("{} is not a valid phrase:\n{report}", path.display()))?;
    Ok((data, phrase))
}

fn data_label(data: &HomotopyData) -> String {
    preset_name(data).unwrap_or("custom").to_string()
}

fn validate(path: &Path) -> Result<Report> {
    let doc = read(path)?;
    let data = doc.data()?;
    let report = doc.raw_phrase()?.validate(&data);
    let issues: Vec<String> = report.issues.iter().map(ToString::to_string).collect();
    let json = json!({ "valid": report.is_ok(), "data": data_label(&data), "issues": issues });
    Ok(Report { code: if report.is_ok() { 0 } else { 1 }, text: report.to_string(), json })
}

/// The kei datum whose data is `data`, if any.
fn datum_for(data: &HomotopyData) -> Option<(&'static str, KeiDatum)> {
    ["link", "curve", "quasi"].into_iter().map(|n| (n, datum(n).expect("shipped datum"))).find(|(_, d)| d.data() == data)
}

fn fixture_over(d: &KeiDatum, name: &str) -> Result<FiniteKei> {
    fixture(name, d.quotient_names().to_vec(), d.quotient_tau())
        .ok_or_else(|| anyhow!("unknown kei `{name}` (shipped: {})", FIXTURE_NAMES.join(", ")))
}

/// Bracket, writhe and Jones polynomial where the data maps to `α₁`.
fn polynomials(data: &HomotopyData, p: &Nanophrase) -> Result<Option<(LaurentPoly, i64, LaurentPoly)>> {
    if *data == alpha_1() {
        return Ok(Some((bracket(p, data)?, writhe(p, data)?, jones(p, data)?)));
    }
    if *data == alpha_star() {
        return Ok(Some((bracket_star(p, data)?, writhe_star(p, data)?, jones_star(p, data)?)));
    }
    if *data == alpha_0() {
        let q = projection("zero_to_1")?.apply(p)?;
        let one = alpha_1();
        return Ok(Some((bracket(&q, &one)?, writhe(&q, &one)?, jones(&q, &one)?)));
    }
    Ok(None)
}

/// Datum name and closed coloring count per shipped kei.
type Counts = (&'static str, Vec<(&'static str, u64)>);

fn hat_counts(data: &HomotopyData, p: &Nanophrase) -> Result<Option<Counts>> {
    let Some((name, d)) = datum_for(data) else { return Ok(None) };
    let pres = presentation(p, &d, true)?;
    let mut counts = Vec::new();
    for k in FIXTURE_NAMES {
        counts.push((k, count_colorings(&pres, &fixture_over(&d, k)?)?));
    }
    Ok(Some((name, counts)))
}

fn invariants(path: &Path) -> Result<Report> {
    let (data, p) = load(path)?;
    let mut text = format!("data: {}\nletters: {}\nwords: {}\n", data_label(&data), p.letter_count(), p.len());
    let mut json = Map::new();
    json.insert("data".into(), json!(data_label(&data)));
    json.insert("letters".into(), json!(p.letter_count()));
    json.insert("words".into(), json!(p.len()));
    if let Some((b, w, j)) = polynomials(&data, &p)? {
        text.push_str(&format!("bracket: {b}\nwrithe: {w}\njones: {j}\n"));
        json.insert("bracket".into(), json!(b.to_string()));
        json.insert("bracket_terms".into(), json!(b.to_pairs()));
        json.insert("writhe".into(), json!(w));
        json.insert("jones".into(), json!(j.to_string()));
        json.insert("jones_terms".into(), json!(j.to_pairs()));
    }
    if let Some((datum, counts)) = hat_counts(&data, &p)? {
        text.push_str(&format!("colorings ({datum} datum, closed):\n"));
        let mut c = Map::new();
        for (k, n) in counts {
            text.push_str(&format!("  {k}: {n}\n"));
            c.insert(k.into(), json!(n));
        }
        json.insert("colorings".into(), json!({ "datum": datum, "hat": true, "counts": c }));
    }
    Ok(Report::ok(text, Value::Object(json)))
}

fn morphism(from: &HomotopyData, to: &str) -> Result<DataMorphism> {
    let source = preset_name(from).ok_or_else(|| anyhow!("projections start from a preset alphabet"))?;
    let name = match (source, to) {
        ("alpha_star", "alpha_0") => "star_to_0",
        ("alpha_star", "alpha_1") => "star_to_1",
        ("alpha_star", "alpha_2") => "star_to_2",
        ("alpha_0", "alpha_1") => "zero_to_1",
        (s, t) if s == t => return Ok(DataMorphism::identity(from.clone())),
        (s, t) => bail!("no projection from {s} to {t}"),
    };
    Ok(projection(name)?)
}

fn phrase_report(data: &HomotopyData, p: &Nanophrase) -> Report {
    Report::ok(format::write_text(data, p), format::to_json(data, p))
}

fn project(path: &Path, to: &str) -> Result<Report> {
    let (data, p) = load(path)?;
    let m = morphism(&data, to)?;
    Ok(phrase_report(m.target(), &m.apply(&p)?))
}

fn encode_file(path: &Path) -> Result<Report> {
    let doc = read(path)?;
    let code = doc.gauss.ok_or_else(|| anyhow!("{} has no @gausscode", path.display()))?;
    let p = encode(&code)?;
    Ok(phrase_report(&alpha_star(), &p))
}

/// Move descriptions along a path, each read on the phrase it applies to.
fn describe_path(start: &Nanophrase, data: &HomotopyData, path: &[Move]) -> Result<Vec<String>> {
    let mut p = start.canonical_form();
    let mut out = Vec::new();
    for mv in path {
        out.push(mv.describe(&p, data));
        p = apply(&p, data, mv)?.canonical_form();
    }
    Ok(out)
}

fn numbered(lines: &[String]) -> String {
    lines.iter().enumerate().map(|(i, l)| format!("  {}. {l}\n", i + 1)).collect()
}

fn reduce_file(path: &Path, budget: SearchBudget) -> Result<Report> {
    let (data, p) = load(path)?;
    let Reduction { start, phrase, path: moves, exhausted, states } = reduce(&p, &data, budget);
    let steps = describe_path(&start, &data, &moves)?;
    let text = format!(
        "letters: {} -> {}\nstates: {states}\nexhausted: {exhausted}\npath:\n{}result:\n{}",
        start.letter_count(),
        phrase.letter_count(),
        numbered(&steps),
        format::write_text(&data, &phrase)
    );
    let json = json!({
        "start": format::to_json(&data, &start),
        "result": format::to_json(&data, &phrase),
        "path": steps,
        "exhausted": exhausted,
        "states": states,
    });
    Ok(Report::ok(text, json))
}

fn equiv(first: &Path, second: &Path, budget: SearchBudget) -> Result<Report> {
    let (data, p) = load(first)?;
    let (other, q) = load(second)?;
    if data != other {
        bail!("the two files use different homotopy data");
    }
    match equivalent(&p, &q, &data, budget) {
        Equivalence::Equivalent(path) => {
            let end = replay(&p, &data, &path).map_err(|(i, e)| anyhow!("path fails at move {}: {e}", i + 1))?;
            debug_assert_eq!(end, q.canonical_form());
            let steps = describe_path(&p, &data, &path)?;
            let text = format!("equivalent ({} moves)\n{}", steps.len(), numbered(&steps));
            Ok(Report::ok(text, json!({ "result": "equivalent", "path": steps })))
        }
        Equivalence::Unknown => {
            // invariants of S-homotopy can still tell the phrases apart
            let mut differs = Vec::new();
            if let (Some(a), Some(b)) = (polynomials(&data, &p)?, polynomials(&data, &q)?) {
                if a.0 != b.0 {
                    differs.push(format!("bracket: {} vs {}", a.0, b.0));
                }
            }
            if let (Some(a), Some(b)) = (hat_counts(&data, &p)?, hat_counts(&data, &q)?) {
                for ((k, x), (_, y)) in a.1.iter().zip(&b.1) {
                    if x != y {
                        differs.push(format!("{k} colorings: {x} vs {y}"));
                    }
                }
            }
            if p.len() != q.len() {
                differs.push(format!("length: {} vs {}", p.len(), q.len()));
            }
            if differs.is_empty() {
                let text = "unknown: no path within the budget and no invariant separates them\n".to_string();
                Ok(Report::ok(text, json!({ "result": "unknown" })))
            } else {
                let text = format!("inequivalent\n{}", differs.iter().map(|d| format!("  {d}\n")).collect::<String>());
                Ok(Report::ok(text, json!({ "result": "inequivalent", "distinguished_by": differs })))
            }
        }
    }
}

fn kei(
    path: &Path,
    which: DatumArg,
    hat: bool,
    group: bool,
    color: Option<&str>,
    kei_file: Option<&Path>,
) -> Result<Report> {
    let (data, p) = load(path)?;
    let d = datum(which.name()).expect("shipped datum");
    if *d.data() != data {
        bail!("the {} datum works over {}, the phrase is over {}", which.name(), data_label(d.data()), data_label(&data));
    }
    let pres = presentation(&p, &d, hat)?;
    let mut text = format!("{pres}\n");
    let mut json = Map::new();
    json.insert("presentation".into(), json!(pres.to_string()));
    json.insert("generators".into(), json!(pres.generator_count()));
    json.insert("relations".into(), json!(pres.relations().len()));
    json.insert("hat".into(), json!(hat));
    if group {
        let g = gamma_group(&pres);
        text.push_str(&format!("group: {g}\n"));
        json.insert("group".into(), json!(g.to_string()));
    }
    let chosen = match (color, kei_file) {
        (Some(name), _) => Some((name.to_string(), fixture_over(&d, name)?)),
        (None, Some(file)) => {
            let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let k = keifile::parse(&text).with_context(|| format!("parsing {}", file.display()))?;
            if !k.is_valid() {
                let v = &k.validate()[0];
                bail!("{} violates axiom {} at symbol {} with {:?}", file.display(), v.axiom, k.symbols()[v.symbol], v.witness);
            }
            Some((file.display().to_string(), k))
        }
        (None, None) => None,
    };
    if let Some((name, k)) = chosen {
        let n = count_colorings(&pres, &k)?;
        text.push_str(&format!("colorings by {name}: {n}\n"));
        json.insert("colorings".into(), json!({ "kei": name, "count": n }));
    }
    Ok(Report::ok(text, Value::Object(json)))
}

fn chord_file(path: &Path, out: &Path) -> Result<Report> {
    let (data, p) = load(path)?;
    fs::write(out, chord::render(&p, &data)).with_context(|| format!("writing {}", out.display()))?;
    let text = format!("wrote {} ({} chords)\n", out.display(), p.letter_count());
    Ok(Report::ok(text, json!({ "out": out.display().to_string(), "chords": p.letter_count() })))
}
