use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qsp4::algebras::{printed_variants, relation_catalog, Casimir, Family, GeneratorSet};
use qsp4::fock::{FockSpace, FockState, Parity, Sector};
use qsp4::ops::gram;
use qsp4::render::{pyramid, LabelStyle};
use qsp4::verify::basis::{check_basis_construction, check_printed_basis_forms, BasisCheck};
use qsp4::verify::ladder::check_ladder_actions;
use qsp4::verify::series::check_series_expansions;
use qsp4::verify::spectra::{casimir_table, check_spectra, named_table, SpectrumTable, TABLE_NAMES};
use qsp4::verify::structure::{check_classical_limit, check_structure};
use qsp4::verify::{check_casimirs, check_relations_tol, exit_code, mutated_catalog, reports_to_json, summarize, Report};
use qsp4::Error;

/// Report directory for JSON copies of every verification run.
const REPORT_DIR_VAR: &str = "SP4Q_REPORT_DIR";

#[derive(Parser)]
#[command(name = "qsp4", version, about = "Exact checks for the boson realizations of sp(4,R) and its q-deformations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct Common {
    /// Truncation: states with nu1 + nu_-1 <= cutoff.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(4..))]
    cutoff: u32,
    /// Sample points for the numeric checks.
    #[arg(long = "q", value_delimiter = ',', default_values_t = [0.7, 1.3], value_parser = positive)]
    qs: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite; exit 1 if anything fails.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Restrict to one family.
        #[arg(long)]
        family: Option<FamilyArg>,
        #[arg(long, value_enum, default_value_t = Suite::Relations)]
        suite: Suite,
        /// Relative tolerance of the numeric checks.
        #[arg(long, default_value_t = 1e-10, value_parser = positive)]
        tolerance: f64,
        /// Flip one sign in the named catalog relation before checking.
        #[arg(long)]
        mutate: Option<String>,
        /// Print only failing checks and the summary.
        #[arg(long)]
        failures_only: bool,
    },
    /// List the relation catalog.
    Catalog {
        #[arg(long)]
        family: Option<FamilyArg>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a spectrum table: a Casimir by name or one of the series tables.
    Spectrum {
        #[command(flatten)]
        common: Common,
        /// I2, C2_SU0, C2_SU+, C2_SU-, J2, K0_2, C2_SUq+, C2_SUq-, L2 or S2(s1,s2,s3,s4).
        #[arg(long, conflicts_with = "table")]
        casimir: Option<String>,
        /// phi1, phi2, alpha+even, alpha+odd, alpha-even, alpha-odd, phiq1, phiq2, qphi+, qphi-.
        #[arg(long)]
        table: Option<String>,
        #[arg(long, value_enum, default_value_t = SectorArg::All)]
        sector: SectorArg,
    },
    /// Draw a basis pyramid.
    Pyramid {
        #[arg(long, value_enum, default_value_t = LabelsArg::Pair)]
        labels: LabelsArg,
        /// Number of rows, starting at nu = 0 (even) or 1 (odd).
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
        #[arg(long, value_enum, default_value_t = ParityArg::Even)]
        sector: ParityArg,
    },
    /// Check the tensor basis-state constructions.
    Basis {
        #[command(flatten)]
        common: Common,
        /// ts, spb_minN0, spb_maxN0, eta, rtt or all.
        #[arg(long, default_value = "all")]
        which: String,
        /// Also check the displayed prefactors the construction does not reproduce.
        #[arg(long)]
        printed: bool,
    },
    /// Check the small-tau expansions at q = e^tau.
    Expand {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply a generator to a basis state.
    Eval {
        /// Generator name, e.g. T_1, L_-1, K0_+.
        op: String,
        #[arg(long)]
        family: FamilyArg,
        /// Source state as nu1,nu_-1.
        #[arg(long, value_parser = parse_state)]
        state: FockState,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(4..))]
        cutoff: u32,
        /// Also evaluate the orthonormal matrix elements at these q.
        #[arg(long = "q", value_delimiter = ',', value_parser = positive)]
        qs: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    /// Displayed forms that are expected to fail.
    Printed,
    Casimirs,
    Structure,
    Limit,
    Spectra,
    Basis,
    Ladder,
    Series,
    /// Everything except `printed`.
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Classical,
    Qboson,
    Tensor,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Classical => Family::ClassicalSp4,
            FamilyArg::Qboson => Family::QBosonSp4,
            FamilyArg::Tensor => Family::TensorSp4,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SectorArg {
    All,
    Even,
    Odd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LabelsArg {
    Pair,
    TripleMin,
    TripleMax,
}

fn positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("{s} must be positive"))
    }
}

fn parse_state(s: &str) -> Result<FockState, String> {
    let (a, b) = s.split_once(',').ok_or("expected nu1,nu_-1")?;
    let p = |x: &str| x.trim().parse::<u32>().map_err(|e| format!("{x}: {e}"));
    Ok(FockState::new(p(a)?, p(b)?))
}

fn families(f: Option<FamilyArg>) -> Vec<Family> {
    f.map(|f| vec![f.into()]).unwrap_or_else(|| Family::ALL.to_vec())
}

/// Deterministic coefficient tuples for the general invariant.
fn s2_tuples() -> Vec<[num_rational::BigRational; 4]> {
    let r = |n: i64, d: i64| num_rational::BigRational::new(n.into(), d.into());
    vec![
        [r(1, 1), r(0, 1), r(0, 1), r(0, 1)],
        [r(0, 1), r(1, 1), r(0, 1), r(0, 1)],
        [r(1, 2), r(-2, 3), r(3, 4), r(5, 7)],
        [r(-3, 5), r(1, 9), r(2, 1), r(-1, 4)],
        [r(7, 3), r(5, 2), r(-4, 5), r(1, 6)],
    ]
}

fn run_suite(suite: Suite, fams: &[Family], c: &Common, tol: f64, mutate: Option<&str>) -> Result<Vec<Report>, Error> {
    let mut out = Vec::new();
    let has = |f: Family, name: &str| relation_catalog(f).iter().any(|r| r.name == name);
    if let Some(name) = mutate {
        if !fams.iter().any(|&f| has(f, name)) {
            return Err(Error::UnknownRelation(name.to_string()));
        }
    }
    let relations = |out: &mut Vec<Report>| -> Result<(), Error> {
        for &f in fams {
            let rels = match mutate {
                Some(name) if has(f, name) => mutated_catalog(f, name)?,
                _ => relation_catalog(f),
            };
            let gens = GeneratorSet::build(f, FockSpace::full(c.cutoff))?;
            out.extend(check_relations_tol(&rels, &gens, &c.qs, tol)?);
        }
        Ok(())
    };
    match suite {
        Suite::Relations => relations(&mut out)?,
        Suite::Printed => {
            for &f in fams {
                let gens = GeneratorSet::build(f, FockSpace::full(c.cutoff))?;
                out.extend(check_relations_tol(&printed_variants(f), &gens, &[], tol)?);
            }
            if fams.contains(&Family::TensorSp4) {
                out.extend(check_printed_basis_forms(c.cutoff)?);
            }
        }
        Suite::Casimirs => out.extend(check_casimirs(c.cutoff, &s2_tuples())?.into_iter().filter(|r| r.family.is_some_and(|f| fams.contains(&f)))),
        Suite::Structure => {
            for &f in fams {
                out.extend(check_structure(f, c.cutoff, &c.qs)?);
            }
        }
        Suite::Limit => out.extend(check_classical_limit(c.cutoff)?),
        Suite::Spectra => out.extend(check_spectra(c.cutoff, &c.qs)?),
        Suite::Basis => {
            for b in BasisCheck::ALL {
                out.extend(check_basis_construction(b, c.cutoff)?);
            }
        }
        Suite::Ladder => out.extend(check_ladder_actions(c.cutoff)?),
        Suite::Series => out.extend(check_series_expansions()),
        Suite::All => {
            for s in [Suite::Relations, Suite::Casimirs, Suite::Structure, Suite::Limit, Suite::Spectra, Suite::Basis, Suite::Ladder, Suite::Series] {
                out.extend(run_suite(s, fams, c, tol, mutate)?);
            }
        }
    }
    Ok(out)
}

fn emit_reports(command: &str, reports: &[Report], format: Format, failures_only: bool) -> Result<i32, Error> {
    match format {
        Format::Json => println!("{}", reports_to_json(reports)),
        Format::Text => {
            for r in reports.iter().filter(|r| !failures_only || !r.holds()) {
                println!("{r}");
            }
            let s = summarize(reports);
            println!("{} checks: {} hold, {} fail", s.total, s.holds, s.fails);
        }
    }
    if let Some(dir) = std::env::var_os(REPORT_DIR_VAR) {
        let dir = PathBuf::from(dir);
        std::fs::create_dir_all(&dir).map_err(|e| Error::InvalidArgument(format!("{}: {e}", dir.display())))?;
        let path = dir.join(format!("{command}.json"));
        std::fs::write(&path, reports_to_json(reports) + "\n").map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
    }
    Ok(exit_code(reports))
}

fn table_json(t: &SpectrumTable) -> serde_json::Value {
    let rows: Vec<_> = t
        .rows
        .iter()
        .map(|r| json!({"key": r.key, "value": r.value, "exact": r.exact.to_string(), "numeric": r.numeric, "series": r.series}))
        .collect();
    json!({"label": t.label, "key_name": t.key_name, "value_name": t.value_name, "qs": t.qs, "rows": rows})
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Verify { common, family, suite, tolerance, mutate, failures_only } => {
            let reports = run_suite(suite, &families(family), &common, tolerance, mutate.as_deref())?;
            emit_reports("verify", &reports, common.format, failures_only)
        }
        Command::Catalog { family, format } => {
            let mut infos = Vec::new();
            for f in families(family) {
                let gens = GeneratorSet::build(f, FockSpace::full(8))?;
                for r in relation_catalog(f) {
                    infos.push(r.info(&gens)?);
                }
            }
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&serde_json::to_value(&infos).expect("serializable")).expect("serializable")),
                Format::Text => {
                    for i in &infos {
                        println!("{:<9} {:<44} reach {}  {}", i.family.to_string(), i.name, i.reach, i.statement);
                    }
                }
            }
            Ok(0)
        }
        Command::Spectrum { common, casimir, table, sector } => {
            let t = match (casimir, table) {
                (Some(c), _) => {
                    let c: Casimir = c.parse()?;
                    let sector = match sector {
                        SectorArg::All => Sector::All,
                        SectorArg::Even => Sector::Even,
                        SectorArg::Odd => Sector::Odd,
                    };
                    casimir_table(&c, common.cutoff, sector, &common.qs)?
                }
                (None, Some(name)) => named_table(&name, common.cutoff, &common.qs)?,
                (None, None) => return Err(Error::InvalidArgument(format!("give --casimir or --table ({})", TABLE_NAMES.join(", ")))),
            };
            match common.format {
                Format::Text => print!("{}", t.render()),
                Format::Json => println!("{}", serde_json::to_string_pretty(&table_json(&t)).expect("serializable")),
            }
            Ok(0)
        }
        Command::Pyramid { labels, rows, sector } => {
            let style = match labels {
                LabelsArg::Pair => LabelStyle::Pair,
                LabelsArg::TripleMin => LabelStyle::TripleMin,
                LabelsArg::TripleMax => LabelStyle::TripleMax,
            };
            let parity = if sector == ParityArg::Even { Parity::Even } else { Parity::Odd };
            print!("{}", pyramid(style, parity, rows)?);
            Ok(0)
        }
        Command::Basis { common, which, printed } => {
            let checks: Vec<BasisCheck> = if which == "all" { BasisCheck::ALL.to_vec() } else { vec![which.parse()?] };
            let mut reports = Vec::new();
            for b in checks {
                reports.extend(check_basis_construction(b, common.cutoff)?);
            }
            if printed {
                reports.extend(check_printed_basis_forms(common.cutoff)?);
            }
            emit_reports("basis", &reports, common.format, false)
        }
        Command::Expand { format } => emit_reports("expand", &check_series_expansions(), format, false),
        Command::Eval { op, family, state, cutoff, qs, format } => {
            let gens = GeneratorSet::build(family.into(), FockSpace::full(cutoff))?;
            let g = gens.get(&op)?;
            if !gens.space().contains(state) {
                return Err(Error::StateOutOfSpace(state));
            }
            let d = gens.deformation();
            let root2 = if g.root2() { "sqrt([2]) * " } else { "" };
            let terms: Vec<_> = g
                .apply(state)
                .into_iter()
                .map(|(dst, c)| {
                    // Orthonormal element c * sqrt(G(dst)/G(src)), times sqrt([2]) if flagged.
                    let numeric: Vec<f64> = qs
                        .iter()
                        .map(|&q| {
                            let r = (gram(dst, d).eval(q).unwrap_or(f64::NAN) / gram(state, d).eval(q).unwrap_or(f64::NAN)).sqrt();
                            let s2 = if g.root2() { d.bracket_f64(2.0, q).sqrt() } else { 1.0 };
                            c.eval(q).unwrap_or(f64::NAN) * r * s2
                        })
                        .collect();
                    (dst, c, numeric)
                })
                .collect();
            match format {
                Format::Json => {
                    let v: Vec<_> = terms
                        .iter()
                        .map(|(dst, c, n)| json!({"dst": [dst.nu1, dst.num1], "monomial": format!("{root2}{c}"), "orthonormal": n}))
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&json!({"op": op, "src": [state.nu1, state.num1], "qs": qs, "terms": v})).expect("serializable"));
                }
                Format::Text => {
                    if terms.is_empty() {
                        println!("{op} e{state} = 0");
                    }
                    for (dst, c, n) in &terms {
                        print!("{op} e{state} -> {root2}({c}) e{dst}");
                        for (q, x) in qs.iter().zip(n) {
                            print!("   <{dst}|{op}|{state}>(q={q}) = {x:.12}");
                        }
                        println!();
                    }
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (`qsp4 ... | head`) instead of panicking in print!.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
