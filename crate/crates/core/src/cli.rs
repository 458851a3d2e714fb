//! The `ksbim` command line.
//!
//! [`run`] parses arguments, performs one computation and writes its result
//! once, as text or as a single JSON document. Exit status is `0` on
//! success, `1` on a domain error and `2` on a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};
use thiserror::Error;

use crate::bimodule::{self, basis_label, right_mul_matrix, BSWord, Generator};
use crate::demazure::{demazure_word, induction, induction_checked, irr_character, weyl_dim, InductionMethod};
use crate::frobenius::steinberg;
use crate::homspace::{hom_rank_predicted, hom_rank_specialized, hom_to_twisted_rank, subsequence_products};
use crate::laurent::LaurentPoly;
use crate::matrix::PolyMatrix;
use crate::root_datum::{DatumSpec, RootDatum, Weight, WeylGroup};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    /// Both pipelines, checked against each other.
    Both,
    Demazure,
    Weyl,
}

/// Comma-separated 1-based generator labels; the empty string is the empty
/// sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seq(pub Vec<usize>);

/// Comma-separated integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

fn parse_seq(s: &str) -> Result<Seq, String> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Seq(Vec::new()));
    }
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(0) => Err("generator labels start at 1".to_string()),
            Ok(l) => Ok(l),
            Err(_) => Err(format!("`{t}` is not a generator label")),
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Seq)
}

fn parse_ints(s: &str) -> Result<IntList, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(IntList(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| format!("`{t}` is not an integer")))
        .collect::<Result<Vec<_>, _>>()
        .map(IntList)
}

#[derive(Debug, Parser)]
#[command(name = "ksbim", version, about = "Exact computations with K-theory Soergel bimodules")]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct CliConfig {
    /// Cartan type, e.g. A2, B2, G2 or A1xA1.
    #[arg(long = "type", global = true, conflicts_with = "cartan")]
    pub type_label: Option<String>,
    /// JSON file holding a Cartan matrix, either bare or as {"cartan": [[..]]}.
    #[arg(long, global = true)]
    pub cartan: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    #[arg(long, global = true, env = "KSBIM_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Largest |x| + |y| accepted by `hom verify`.
    #[arg(long, global = true, default_value_t = crate::homspace::DEFAULT_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root datum summaries.
    Rootdatum {
        #[command(subcommand)]
        command: RootdatumCommand,
    },
    /// Apply Demazure operators along a word.
    Demazure {
        #[arg(long, value_parser = parse_seq)]
        word: Seq,
        /// Exponent of a single monomial e^λ.
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true, conflicts_with = "poly", required_unless_present = "poly")]
        monomial: Option<IntList>,
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Character of an irreducible representation.
    Character {
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        highest_weight: IntList,
    },
    /// Induction from the torus to the group.
    Induction {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Steinberg basis, Gram determinant and dual basis.
    Steinberg,
    /// Bott–Samelson bimodules.
    Bs {
        #[command(subcommand)]
        command: BsCommand,
    },
    /// Hom-space ranks.
    Hom {
        #[command(subcommand)]
        command: HomCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum RootdatumCommand {
    Info,
}

#[derive(Debug, Subcommand)]
pub enum BsCommand {
    /// Canonical left basis of B(x).
    Basis {
        #[arg(long, value_parser = parse_seq)]
        seq: Seq,
    },
    /// Matrix of right multiplication by a polynomial.
    Rightmul {
        #[arg(long, value_parser = parse_seq)]
        seq: Seq,
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Unit, counit, multiplication and comultiplication for B_s.
    Generators {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        s: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum HomCommand {
    /// Rank predicted by subsequence products.
    Predict {
        #[arg(long, value_parser = parse_seq)]
        seq_x: Seq,
        #[arg(long, value_parser = parse_seq)]
        seq_y: Seq,
    },
    /// Commutant nullity at prime specializations.
    Verify {
        #[arg(long, value_parser = parse_seq)]
        seq_x: Seq,
        #[arg(long, value_parser = parse_seq)]
        seq_y: Seq,
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Rank of Hom(R, R_w).
    Twisted {
        #[arg(long, value_parser = parse_seq)]
        w: Seq,
    },
}

/// Failures of the command line itself, outside the library.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("no root datum given; pass --type or --cartan")]
    MissingDatum,
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed Cartan file {path}: {message}")]
    CartanFile { path: String, message: String },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.code(),
            CliError::MissingDatum => "cli::MissingDatum",
            CliError::Io { .. } => "cli::Io",
            CliError::CartanFile { .. } => "cli::CartanFile",
        }
    }

    fn is_usage(&self) -> bool {
        matches!(self, CliError::MissingDatum)
    }
}

fn domain<E: Into<Error>>(e: E) -> CliError {
    CliError::Domain(e.into())
}

/// Runs one invocation and returns its exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            let _ = out.flush();
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.code());
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

fn load_datum(config: &CliConfig) -> Result<(String, RootDatum), CliError> {
    if let Some(label) = &config.type_label {
        return Ok((label.clone(), RootDatum::from_type(label).map_err(domain)?));
    }
    let Some(path) = &config.cartan else {
        return Err(CliError::MissingDatum);
    };
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: shown.clone(),
        message: e.to_string(),
    })?;
    let spec: DatumSpec = match serde_json::from_str::<DatumSpec>(&text) {
        Ok(spec) => spec,
        Err(first) => match serde_json::from_str::<Vec<Vec<i64>>>(&text) {
            Ok(cartan) => DatumSpec::Cartan { cartan },
            Err(_) => {
                return Err(CliError::CartanFile {
                    path: shown,
                    message: first.to_string(),
                })
            }
        },
    };
    let label = match &spec {
        DatumSpec::Type { label } => label.clone(),
        DatumSpec::Cartan { .. } => "custom".to_string(),
    };
    Ok((label, spec.build().map_err(domain)?))
}

fn word(datum: &RootDatum, seq: &Seq) -> Result<BSWord, CliError> {
    BSWord::from_labels(datum, &seq.0).map_err(domain)
}

fn poly_json(p: &LaurentPoly) -> Value {
    serde_json::to_value(p.to_json()).expect("serializable")
}

fn matrix_json(m: &PolyMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(poly_json).collect()))
            .collect(),
    )
}

fn render(config: &CliConfig, value: Value, text: String) -> String {
    match config.output {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("serializable");
            s.push('\n');
            s
        }
        OutputFormat::Text => text,
    }
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let config = &cli.config;
    let (label, datum) = load_datum(config)?;
    let rank = datum.rank();
    match &cli.command {
        Command::Rootdatum {
            command: RootdatumCommand::Info,
        } => {
            let group = WeylGroup::new(&datum).map_err(domain)?;
            let roots = datum.positive_roots();
            let value = json!({
                "rank": rank,
                "positive_roots": roots.len(),
                "weyl_order": group.order(),
                "type": label,
                "cartan": datum.cartan().rows(),
                "longest_word": group.longest().word().iter().map(|i| i + 1).collect::<Vec<_>>(),
                "roots": roots.iter().map(|r| json!({
                    "simple_coeffs": r.simple_coeffs,
                    "weight": r.weight,
                    "height": r.height(),
                })).collect::<Vec<_>>(),
            });
            let mut text = format!(
                "type: {label}\nrank: {rank}\npositive roots: {}\nweyl order: {}\nlongest element: {} (length {})\ncartan:\n",
                roots.len(),
                group.order(),
                group.longest(),
                group.longest().length()
            );
            for row in datum.cartan().rows() {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
                text.push_str(&format!("  [{}]\n", cells.join("")));
            }
            text.push_str("positive roots (simple-root coefficients, weight):\n");
            for r in roots {
                let c: Vec<String> = r.simple_coeffs.iter().map(i64::to_string).collect();
                text.push_str(&format!("  ({})  {}\n", c.join(","), r.weight));
            }
            Ok(render(config, value, text))
        }
        Command::Demazure { word: w, monomial, poly } => {
            let bs = word(&datum, w)?;
            let f = match (monomial, poly) {
                (Some(m), _) => {
                    let lambda = Weight::new(m.0.clone());
                    datum.check_weight(&lambda).map_err(domain)?;
                    LaurentPoly::exp(lambda)
                }
                (None, Some(p)) => LaurentPoly::parse(p, rank).map_err(domain)?,
                (None, None) => unreachable!("clap requires one of --monomial and --poly"),
            };
            let g = demazure_word(&datum, bs.letters(), &f).map_err(domain)?;
            let value = json!({"word": bs.labels(), "input": poly_json(&f), "result": poly_json(&g)});
            Ok(render(config, value, format!("{g}\n")))
        }
        Command::Character { highest_weight } => {
            let group = WeylGroup::new(&datum).map_err(domain)?;
            let lambda = Weight::new(highest_weight.0.clone());
            let chi = irr_character(&group, &lambda).map_err(domain)?;
            let dim = weyl_dim(&group, &lambda).map_err(domain)?;
            let dim_value = dim.to_u64().map_or_else(|| json!(dim.to_string()), |d| json!(d));
            let value = json!({
                "highest_weight": lambda,
                "character": poly_json(&chi),
                "dimension": dim_value,
            });
            Ok(render(config, value, format!("{chi}\ndimension: {dim}\n")))
        }
        Command::Induction { poly, method } => {
            let group = WeylGroup::new(&datum).map_err(domain)?;
            let f = LaurentPoly::parse(poly, rank).map_err(domain)?;
            let (g, name) = match method {
                MethodArg::Both => (induction_checked(&group, &f).map_err(domain)?, "both"),
                MethodArg::Demazure => (
                    induction(&group, &f, InductionMethod::Demazure).map_err(domain)?,
                    "demazure",
                ),
                MethodArg::Weyl => (
                    induction(&group, &f, InductionMethod::WeylFormula).map_err(domain)?,
                    "weyl",
                ),
            };
            let value = json!({"input": poly_json(&f), "method": name, "result": poly_json(&g)});
            Ok(render(config, value, format!("{g}\n")))
        }
        Command::Steinberg => {
            let group = WeylGroup::new(&datum).map_err(domain)?;
            let sd = steinberg(&group).map_err(domain)?;
            let value = serde_json::to_value(sd.to_json()).expect("serializable");
            let mut text = String::from("basis:\n");
            for (w, e) in sd.elements().iter().zip(sd.basis()) {
                text.push_str(&format!("  e[{w}] = {e}\n"));
            }
            text.push_str("dual basis:\n");
            for (w, e) in sd.elements().iter().zip(sd.dual()) {
                text.push_str(&format!("  e*[{w}] = {e}\n"));
            }
            text.push_str(&format!("gram determinant: {}\n", sd.det()));
            Ok(render(config, value, text))
        }
        Command::Bs { command } => bs_command(config, &datum, command),
        Command::Hom { command } => hom_command(config, &datum, command),
    }
}

fn bs_command(config: &CliConfig, datum: &RootDatum, command: &BsCommand) -> Result<String, CliError> {
    match command {
        BsCommand::Basis { seq } => {
            let x = word(datum, seq)?;
            let group = WeylGroup::new(datum).map_err(domain)?;
            let labels: Vec<String> = (0..x.basis_size()).map(|i| basis_label(datum, &x, i)).collect();
            let products = subsequence_products(&group, &x).map_err(domain)?;
            let mut prod_json = serde_json::Map::new();
            for (w, m) in products.entries() {
                prod_json.insert(w.label(), json!(m));
            }
            let value = json!({
                "seq": x.labels(),
                "rank": x.basis_size(),
                "basis": labels,
                "subsequence_products": prod_json,
            });
            let mut text = format!("B{x}: free of rank {}\n", x.basis_size());
            for (i, l) in labels.iter().enumerate() {
                text.push_str(&format!("  b{i} = {l}\n"));
            }
            text.push_str(&format!("subsequence products: {products}\n"));
            Ok(render(config, value, text))
        }
        BsCommand::Rightmul { seq, poly } => {
            let x = word(datum, seq)?;
            let r = LaurentPoly::parse(poly, datum.rank()).map_err(domain)?;
            let m = right_mul_matrix(datum, &x, &r).map_err(domain)?;
            let value = json!({"seq": x.labels(), "poly": poly_json(&r), "matrix": matrix_json(&m)});
            Ok(render(config, value, format!("{m}")))
        }
        BsCommand::Generators { s } => {
            let idx = word(datum, &Seq(vec![*s as usize]))?.letters()[0];
            let mut value = serde_json::Map::new();
            value.insert("s".into(), json!(s));
            let mut text = String::new();
            for gen in Generator::ALL {
                let f = bimodule::generator(datum, gen, idx).map_err(domain)?;
                value.insert(
                    gen.name().into(),
                    serde_json::to_value(f.to_json()).expect("serializable"),
                );
                text.push_str(&format!("{}: B{} -> B{}\n{}", gen.name(), f.source(), f.target(), f.matrix()));
            }
            Ok(render(config, Value::Object(value), text))
        }
    }
}

fn hom_command(config: &CliConfig, datum: &RootDatum, command: &HomCommand) -> Result<String, CliError> {
    let group = WeylGroup::new(datum).map_err(domain)?;
    match command {
        HomCommand::Predict { seq_x, seq_y } => {
            let x = word(datum, seq_x)?;
            let y = word(datum, seq_y)?;
            let predicted = hom_rank_predicted(&group, &x, &y).map_err(domain)?;
            let value = json!({"x": x.labels(), "y": y.labels(), "predicted": predicted});
            Ok(render(config, value, format!("predicted {predicted}\n")))
        }
        HomCommand::Verify { seq_x, seq_y, trials } => {
            let x = word(datum, seq_x)?;
            let y = word(datum, seq_y)?;
            let report = hom_rank_specialized(&group, &x, &y, config.seed, *trials, config.budget).map_err(domain)?;
            let value = serde_json::to_value(report.to_json()).expect("serializable");
            let mut text = format!("Hom(B{x}, B{y}): predicted {}\n", report.predicted);
            for t in &report.trials {
                text.push_str(&format!("  seed {}: nullity {}\n", t.seed, t.nullity));
            }
            text.push_str(&format!("agreed: {}\n", report.agreed));
            Ok(render(config, value, text))
        }
        HomCommand::Twisted { w } => {
            let labels = word(datum, w)?;
            let el = group.from_word(labels.letters()).map_err(domain)?;
            let r = hom_to_twisted_rank(datum, &el, config.seed).map_err(domain)?;
            let value = json!({"w": el.word().iter().map(|i| i + 1).collect::<Vec<_>>(), "rank": r});
            Ok(render(config, value, format!("rank Hom(R, R_{el}) = {r}\n")))
        }
    }
}
