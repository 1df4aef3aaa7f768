use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use braid_tc::bounds::{bounds_table, tc_bounds};
use braid_tc::equivalence::{equals, NormalForm};
use braid_tc::linking::linking_matrix;
use braid_tc::torsion::{torsion_report, torsion_witness, TorsionReport};
use braid_tc::verify::{run_suite, SuiteReport, SUITES};
use braid_tc::{BraidWord, Error, GroupSpec};

/// Braid-group toolkit: word problem, linking profiles, torsion in mixed
/// braid groups, and topological-complexity bounds.
///
/// Braid words are whitespace-separated signed generator indices ("1 2 -1"
/// is σ_1 σ_2 σ_1⁻¹). Permutations use cycle notation, e.g. "(1 2)(3 4 5)";
/// generator lists separate permutations with ';'.
#[derive(Parser)]
#[command(name = "braid-tc", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Clone)]
#[group(multiple = false)]
struct GroupArgs {
    /// Trivial G (pure braid group).
    #[arg(long)]
    pure: bool,
    /// G = S_n (full braid group).
    #[arg(long)]
    full: bool,
    /// G = S_a x S_b on blocks 1..a and a+1..a+b, given as "a,b".
    #[arg(long, value_parser = parse_pair)]
    mixed: Option<(usize, usize)>,
    /// G generated by permutations, e.g. "(1 2)(3 4);(1 2 3)".
    #[arg(long)]
    gens: Option<String>,
}

impl GroupArgs {
    fn given(&self) -> bool {
        self.pure || self.full || self.mixed.is_some() || self.gens.is_some()
    }

    fn spec(&self, n: usize) -> Result<GroupSpec, Error> {
        if let Some((a, b)) = self.mixed {
            if a + b != n {
                return Err(Error::InvalidArgument(format!(
                    "--mixed {a},{b} does not sum to n = {n}"
                )));
            }
            return Ok(GroupSpec::mixed(a, b));
        }
        if let Some(text) = &self.gens {
            return GroupSpec::parse_generators(n, text);
        }
        if self.full {
            return Ok(GroupSpec::full(n));
        }
        Ok(GroupSpec::pure(n))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Interval for TC_m(B_n^G).
    Bounds {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    /// Batch of bounds. Ranges are "a..b" (inclusive), "a" or "a,b,c".
    Table {
        #[arg(long, value_parser = parse_range)]
        n: Values,
        /// Mixed groups S_(n-k) x S_k for each k in range (k >= n is skipped).
        #[arg(long, value_parser = parse_range, conflicts_with_all = ["pure", "full", "mixed", "gens"])]
        k: Option<Values>,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_parser = parse_range, default_value = "2")]
        m: Values,
    },
    /// Is B_(n-k,k) modulo its centre torsion-free? Prints a witness if not.
    Torsion {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Torsion witness; fails when the quotient is torsion-free.
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Operations on braid words.
    Braid {
        #[arg(value_enum)]
        op: BraidOp,
        #[arg(long)]
        n: usize,
        #[arg(allow_hyphen_values = true)]
        words: Vec<String>,
    },
    /// Run a verification suite ("all" runs every suite).
    Verify {
        #[arg(value_parser = suite_names(), required_unless_present = "suite")]
        name: Option<String>,
        #[arg(long, value_parser = suite_names(), conflicts_with = "name")]
        suite: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BraidOp {
    Multiply,
    Invert,
    Perm,
    Linking,
    IsPure,
    Equal,
    NormalForm,
}

fn suite_names() -> clap::builder::PossibleValuesParser {
    let mut names: Vec<&'static str> = SUITES.iter().map(|(s, _)| *s).collect();
    names.push("all");
    clap::builder::PossibleValuesParser::new(names)
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected \"a,b\", got {s:?}"))?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok((num(a)?, num(b)?))
}

/// Integer list given on the command line as a range or comma list.
#[derive(Clone)]
struct Values(Vec<usize>);

fn parse_range(s: &str) -> Result<Values, String> {
    parse_values(s).map(Values)
}

fn parse_values(s: &str) -> Result<Vec<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
        if a > b {
            return Err(format!("empty range {s:?}"));
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(num).collect()
}

/// Rendered result: text for humans, a JSON value for everything else.
struct Output {
    text: String,
    json: Value,
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialise")
}

fn csv_cell(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some(String::new()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(x) => Some(x.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => Some(
            items
                .iter()
                .map(|i| csv_cell(i).unwrap_or_default())
                .collect::<Vec<_>>()
                .join(" "),
        ),
        _ => None,
    }
}

/// Scalar fields of an object, nested objects flattened with dotted keys;
/// arrays of objects (provenance lists, matrices) are left out.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    if let Value::Object(map) = v {
        for (key, value) in map {
            let name = if prefix.is_empty() {
                key.clone()
            } else {
                format!("{prefix}.{key}")
            };
            match value {
                Value::Object(_) => flatten(&name, value, out),
                _ => {
                    if let Some(cell) = csv_cell(value) {
                        out.push((name, cell));
                    }
                }
            }
        }
    }
}

fn render_csv(json: &Value) -> Result<String, Error> {
    let rows: Vec<&Value> = match json {
        Value::Array(items) => items.iter().collect(),
        other => vec![other],
    };
    let mut writer = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
    for (idx, row) in rows.iter().enumerate() {
        let mut cells = Vec::new();
        flatten("", row, &mut cells);
        if idx == 0 {
            writer
                .write_record(cells.iter().map(|(k, _)| k.as_str()))
                .map_err(csv_err)?;
        }
        writer
            .write_record(cells.iter().map(|(_, v)| v.as_str()))
            .map_err(csv_err)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn parse_words(n: usize, words: &[String]) -> Result<Vec<BraidWord>, Error> {
    words.iter().map(|w| BraidWord::parse(n, w)).collect()
}

fn need_words(words: &[BraidWord], count: usize, op: &str) -> Result<(), Error> {
    if words.len() != count {
        return Err(Error::InvalidArgument(format!(
            "braid {op} takes {count} word(s), got {}",
            words.len()
        )));
    }
    Ok(())
}

fn braid_command(op: BraidOp, n: usize, raw: &[String]) -> Result<Output, Error> {
    let words = parse_words(n, raw)?;
    let word_json = |w: &BraidWord| json!({"strands": w.strands(), "word": w.to_string()});
    Ok(match op {
        BraidOp::Multiply => {
            let mut product = BraidWord::identity(n);
            for w in &words {
                product = product.concat(w)?;
            }
            Output {
                text: product.to_string(),
                json: word_json(&product),
            }
        }
        BraidOp::Invert => {
            need_words(&words, 1, "invert")?;
            let inv = words[0].invert();
            Output {
                text: inv.to_string(),
                json: word_json(&inv),
            }
        }
        BraidOp::Perm => {
            need_words(&words, 1, "perm")?;
            let p = words[0].permutation();
            Output {
                text: p.to_string(),
                json: json!({"permutation": p.to_string(), "cycle_type": p.cycle_type().parts()}),
            }
        }
        BraidOp::Linking => {
            need_words(&words, 1, "linking")?;
            let profile = linking_matrix(&words[0]);
            let mut text = String::new();
            for (comp, row) in profile.components.iter().zip(&profile.matrix) {
                let label: Vec<String> = comp.iter().map(ToString::to_string).collect();
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                text.push_str(&format!("{{{}}}\t{}\n", label.join(","), cells.join(" ")));
            }
            Output {
                text: text.trim_end().to_string(),
                json: to_json(&profile),
            }
        }
        BraidOp::IsPure => {
            need_words(&words, 1, "is-pure")?;
            let pure = words[0].is_pure();
            Output {
                text: if pure { "pure" } else { "not pure" }.to_string(),
                json: json!({"pure": pure}),
            }
        }
        BraidOp::Equal => {
            need_words(&words, 2, "equal")?;
            let verdict = equals(&words[0], &words[1])?;
            Output {
                text: if verdict.equal { "equal" } else { "not equal" }.to_string(),
                json: to_json(&verdict),
            }
        }
        BraidOp::NormalForm => {
            need_words(&words, 1, "normal-form")?;
            let (nf, effort) = NormalForm::of(&words[0])?;
            let factors: Vec<String> = nf.factor_permutations().iter().map(ToString::to_string).collect();
            Output {
                text: format!("{nf}\n{}", nf.to_word()),
                json: json!({
                    "infimum": nf.infimum(),
                    "factors": factors,
                    "word": nf.to_word().to_string(),
                    "effort": effort,
                }),
            }
        }
    })
}

fn torsion_text(r: &TorsionReport) -> String {
    let (n, k) = (r.n, r.k);
    let labels = [
        format!("gcd({n},{k})"),
        format!("gcd({},{k})", n - 1),
        format!("gcd({},{})", n - 1, k - 1),
    ];
    let mut text = if r.torsion_free {
        let all: Vec<&str> = labels.iter().map(String::as_str).collect();
        format!("torsion: no ({}=1)", all.join("="))
    } else {
        let failing: Vec<String> = labels
            .iter()
            .zip(r.gcds)
            .filter(|(_, g)| *g != 1)
            .map(|(l, g)| format!("{l}={g}"))
            .collect();
        format!("torsion: yes ({})", failing.join(", "))
    };
    if let Some(w) = &r.witness {
        let family = match w.source {
            braid_tc::torsion::WitnessSource::DeltaPower => "delta",
            braid_tc::torsion::WitnessSource::EpsilonPower => "epsilon",
        };
        text.push_str(&format!(
            "\nwitness: {}\nconjugate of {family}^{} by a lift of {}; w^{} = Delta^{}",
            w.word, w.exponent, w.conjugator, w.order.m, w.order.l
        ));
    }
    text
}

fn suite_text(r: &SuiteReport) -> String {
    let mut lines = Vec::new();
    for c in &r.checks {
        let mark = if c.ok() { "PASS" } else { "FAIL" };
        lines.push(format!("{mark} {} {}: {} ({}/{})", r.criterion, r.suite, c.name, c.passed, c.total));
        for f in &c.failures {
            lines.push(format!("    {f}"));
        }
    }
    let mark = if r.passed() { "PASS" } else { "FAIL" };
    lines.push(format!("suite {} (seed {}): {mark}", r.suite, r.seed));
    lines.join("\n")
}

/// Runs a command. The boolean is false when a verification suite failed.
fn run(command: Command) -> Result<(Output, bool), Error> {
    Ok(match command {
        Command::Bounds { n, group, m } => {
            let spec = group.spec(n)?;
            let r = tc_bounds(n, &spec, m)?;
            let mut text = format!(
                "TC_{m}(B_{n}^G), G = {spec}: [{}, {}]{}  (cd = {})",
                r.lower,
                r.upper,
                if r.exact { " exact" } else { "" },
                r.cd
            );
            for p in &r.provenance {
                text.push_str(&format!("\n  {} -> {}: {}", p.tag, p.bound, p.quote));
            }
            (Output { text, json: to_json(&r) }, true)
        }
        Command::Table { n, k, group, m } => {
            let mut groups = Vec::new();
            for &size in &n.0 {
                match &k {
                    Some(ks) => groups.extend(
                        ks.0.iter()
                            .filter(|&&k| k >= 1 && k < size)
                            .map(|&k| GroupSpec::mixed(size - k, k)),
                    ),
                    None if group.given() => groups.push(group.spec(size)?),
                    None => groups.push(GroupSpec::pure(size)),
                }
            }
            let rows = bounds_table(&groups, m.0.iter().copied())?;
            let mut text = format!(
                "{:<24} {:>3} {:>3} {:>3} {:>6} {:>6} {:>6}",
                "group", "n", "m", "cd", "lower", "upper", "exact"
            );
            for row in &rows {
                let r = &row.report;
                text.push_str(&format!(
                    "\n{:<24} {:>3} {:>3} {:>3} {:>6} {:>6} {:>6}",
                    row.group, r.n, r.m, r.cd, r.lower, r.upper, r.exact
                ));
            }
            (Output { text, json: to_json(&rows) }, true)
        }
        Command::Torsion { n, k } => {
            let r = torsion_report(n, k)?;
            (Output { text: torsion_text(&r), json: to_json(&r) }, true)
        }
        Command::Witness { n, k } => {
            let r = torsion_witness(n, k)?;
            (Output { text: torsion_text(&r), json: to_json(&r) }, true)
        }
        Command::Braid { op, n, words } => (braid_command(op, n, &words)?, true),
        Command::Verify { name, suite, seed } => {
            let name = name.or(suite).expect("clap requires a suite name");
            let names: Vec<&str> = if name == "all" {
                SUITES.iter().map(|(s, _)| *s).collect()
            } else {
                vec![name.as_str()]
            };
            let reports = names
                .iter()
                .map(|s| run_suite(s, seed))
                .collect::<Result<Vec<_>, _>>()?;
            let ok = reports.iter().all(SuiteReport::passed);
            let text = reports.iter().map(suite_text).collect::<Vec<_>>().join("\n");
            let json = if reports.len() == 1 {
                to_json(&reports[0])
            } else {
                to_json(&reports)
            };
            (Output { text, json }, ok)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let result = run(cli.command).and_then(|(out, ok)| {
        let body = match format {
            Format::Text => out.text,
            Format::Json => out.json.to_string(),
            Format::Csv => render_csv(&out.json)?.trim_end().to_string(),
        };
        Ok((body, ok))
    });
    match result {
        Ok((body, ok)) => {
            println!("{body}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if format == Format::Json {
                let line = json!({"error": e.kind(), "message": e.to_string()});
                eprintln!("{line}");
            } else {
                eprintln!("error: {}: {e}", e.kind());
            }
            ExitCode::from(1)
        }
    }
}
