//! Command-line front end: `list`, `show <name>`, `verify`, `gram`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::diagrams::{divisor_graph, gram_from_marked_graph, that_diagram};
use crate::exactalg::{IntMat, DEFAULT_CYCLOTOMIC_BOUND};
use crate::ktheory::{
    coxeter_data, ep_collection, gram_of_vectors, invariants_of, quiver_k3_gram, that_lattice,
    CoxeterData, LatticeInvariants,
};
use crate::singularities::{milnor_number, SingularityRecord, Table};
use crate::verify::{CheckId, Verifier};
use crate::Result;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Settings for `verify`. The defaults reproduce the acceptance suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub output_format: OutputFormat,
    pub cyclotomic_bound: u64,
    pub check_filter: Option<CheckId>,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            output_format: OutputFormat::Text,
            cyclotomic_bound: DEFAULT_CYCLOTOMIC_BOUND,
            check_filter: None,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "strange-duality",
    version,
    about = "Lattices of the 14 exceptional unimodal singularities"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the 14 records.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Details and lattice invariants for one record.
    Show {
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long)]
        json: bool,
        /// Only run one check, e.g. C9.
        #[arg(long)]
        check: Option<CheckId>,
        /// Largest cyclotomic order tried when factoring Coxeter polynomials.
        #[arg(long, default_value_t = DEFAULT_CYCLOTOMIC_BOUND)]
        dmax: u64,
    },
    /// Print a Gram matrix.
    Gram {
        #[arg(value_enum)]
        kind: GramKind,
        p: u32,
        q: u32,
        r: u32,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        format: MatrixFormat,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GramKind {
    /// The diagram T(p,q,r).
    That,
    /// Curves at infinity.
    Divisor,
    /// Pushed-forward simples of the weighted projective line plus O_Y[1].
    QuiverK3,
    /// The spherical sheaf collection.
    Ep,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixFormat {
    Csv,
    Json,
    Text,
}

pub fn gram_matrix(kind: GramKind, triple: [u32; 3]) -> Result<IntMat> {
    match kind {
        GramKind::That => Ok(gram_from_marked_graph(&that_diagram(triple)?)),
        GramKind::Divisor => Ok(gram_from_marked_graph(&divisor_graph(triple)?)),
        GramKind::QuiverK3 => quiver_k3_gram(triple),
        GramKind::Ep => {
            let (vs, ctx) = ep_collection(triple)?;
            gram_of_vectors(&vs, &ctx)
        }
    }
}

pub fn render_matrix(m: &IntMat, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Csv => m.to_csv(),
        MatrixFormat::Json => format!("{}\n", serde_json::to_string(m).expect("matrix serializes")),
        MatrixFormat::Text => m.to_string(),
    }
}

/// Parses `args` (program name first) and runs the command against `table`.
pub fn run<I, T>(args: I, table: &Table, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            let to_out = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if to_out { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if to_out { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let outcome = match args.command {
        Command::List { json } => cmd_list(table, json, out),
        Command::Show { name, json } => cmd_show(table, &name, json, out),
        Command::Verify { json, check, dmax } => {
            let config = CliConfig {
                output_format: if json { OutputFormat::Json } else { OutputFormat::Text },
                cyclotomic_bound: dmax,
                check_filter: check,
            };
            cmd_verify(table, &config, out)
        }
        Command::Gram {
            kind,
            p,
            q,
            r,
            format,
        } => gram_matrix(kind, [p, q, r]).map(|m| {
            let _ = write!(out, "{}", render_matrix(&m, format));
            EXIT_OK
        }),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn triple(t: [u32; 3]) -> String {
    format!("({},{},{})", t[0], t[1], t[2])
}

fn weights(r: &SingularityRecord) -> String {
    let ws: Vec<String> = r.ws.weights.iter().map(|w| w.to_string()).collect();
    format!("({})", ws.join(","))
}

pub fn cmd_list(table: &Table, json: bool, out: &mut dyn Write) -> Result<i32> {
    if json {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&table.to_json()).expect("json"));
        return Ok(EXIT_OK);
    }
    let _ = writeln!(out, "{:<5} {:<11} {:>3}  {:<9} {:<9} dual", "name", "weights", "h", "delta", "gamma");
    for r in table.records() {
        let _ = writeln!(
            out,
            "{:<5} {:<11} {:>3}  {:<9} {:<9} {}",
            r.name,
            weights(r),
            r.ws.h,
            triple(r.dolgachev),
            triple(r.gabrielov),
            r.dual
        );
    }
    Ok(EXIT_OK)
}

fn describe_invariants(inv: &LatticeInvariants) -> String {
    let f = inv.nontrivial_factors();
    let disc = if f.is_empty() {
        "trivial".to_string()
    } else {
        f.iter().map(|d| format!("Z/{d}")).collect::<Vec<_>>().join(" + ")
    };
    format!(
        "rank {}, det {}, signature {}, discriminant {disc}",
        inv.rank, inv.det, inv.signature
    )
}

fn describe_coxeter(c: &CoxeterData) -> String {
    let factors = match &c.cyclotomic_orders {
        Some(ds) => ds.iter().map(|d| format!("Phi_{d}")).collect::<Vec<_>>().join(" * "),
        None => "not a product of cyclotomics".to_string(),
    };
    let order = c.order.map_or("> 2h".to_string(), |o| o.to_string());
    format!("order {order}, char poly {factors}")
}

pub fn cmd_show(table: &Table, name: &str, json: bool, out: &mut dyn Write) -> Result<i32> {
    let r = table.lookup(name)?;
    let h = u64::from(r.ws.h);
    let td = invariants_of(&that_lattice(r.dolgachev)?)?;
    let tg = invariants_of(&that_lattice(r.gabrielov)?)?;
    let cox = coxeter_data(&that_lattice(r.gabrielov)?, DEFAULT_CYCLOTOMIC_BOUND, 2 * h)?;
    let mu = milnor_number(r);
    if json {
        let v = json!({
            "record": r,
            "mu": mu,
            "self_dual": r.is_self_dual(),
            "that_delta": td,
            "that_gamma": tg,
            "coxeter": cox,
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"));
        return Ok(EXIT_OK);
    }
    let dual = if r.is_self_dual() {
        format!("{} (self-dual)", r.dual)
    } else {
        r.dual.clone()
    };
    let _ = writeln!(out, "{}", r.name);
    let _ = writeln!(out, "  weights:   {} h = {}", weights(r), r.ws.h);
    let _ = writeln!(out, "  h:         {}", r.ws.h);
    let _ = writeln!(out, "  delta:     {}", triple(r.dolgachev));
    let _ = writeln!(out, "  gamma:     {}", triple(r.gabrielov));
    let _ = writeln!(out, "  dual:      {dual}");
    let _ = writeln!(out, "  mu:        {mu}");
    let _ = writeln!(out, "  T{}: {}", triple(r.dolgachev), describe_invariants(&td));
    let _ = writeln!(out, "  T{}: {}", triple(r.gabrielov), describe_invariants(&tg));
    let _ = writeln!(out, "  coxeter:   {}", describe_coxeter(&cox));
    let _ = writeln!(out, "  charpoly:  {}", cox.char_poly);
    Ok(EXIT_OK)
}

pub fn cmd_verify(table: &Table, config: &CliConfig, out: &mut dyn Write) -> Result<i32> {
    let report = Verifier::with_table(table.clone())
        .cyclotomic_bound(config.cyclotomic_bound)
        .run(config.check_filter);
    match config.output_format {
        OutputFormat::Json => {
            let _ = writeln!(out, "{}", report.to_json());
        }
        OutputFormat::Text => {
            for r in &report.results {
                let _ = writeln!(
                    out,
                    "{:<3} {:<12} {:<7} {}",
                    r.check_id.as_str(),
                    r.subject,
                    r.status.to_string(),
                    r.details
                );
            }
            let s = report.summary;
            let _ = writeln!(out, "summary: {} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
        }
    }
    Ok(if report.summary.fail == 0 { EXIT_OK } else { EXIT_FAILED })
}
