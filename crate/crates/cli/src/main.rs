//! `concord`: command-line front end for the concordance-obstruction
//! toolkit. Exit codes: 0 success, 2 parse error, 3 unknown name, 4 I/O
//! error, 5 capability bound.

mod catalog;
mod error;
mod laurent_text;
mod report;
mod termexpr;

use catalog::{active_catalog, CatalogFile};
use clap::{Parser, Subcommand};
use concord_core::blanchfield::{
    basis_element, blanchfield_pair, enumerate_isotropic_submodules, AlexanderModule,
};
use concord_core::freegroup::{derived_depth, Word};
use concord_core::infection::{expand_clones, solvable_level, SolvableLevel};
use concord_core::rho::slice_obstruction;
use concord_core::signature::{rho0_with_bits, signature_function};
use error::{CliError, EXIT_IO, EXIT_PARSE};
use report::*;
use std::path::PathBuf;
use termexpr::{parse_term, TermExpr};

#[derive(Parser)]
#[command(
    name = "concord",
    version,
    about = "exact knot-concordance obstructions: classical invariants, signature integrals, Blanchfield isotropy, infection calculus"
)]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    /// Interval precision target in bits (radius 2^-bits)
    #[arg(long, global = true, default_value_t = 100)]
    precision: u32,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classical invariants of a knot expression
    Invariants { expr: String },
    /// Slice-obstruction verdict for a term
    Obstruct { expr: String },
    /// Signature step function as certified CSV rows theta_lo,theta_hi,sigma
    Sigfn {
        knot: String,
        /// Write rows to a file instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Certified decimal digits per endpoint
        #[arg(long, default_value_t = 30)]
        digits: usize,
    },
    /// The signature integral rho_0
    Rho0 { expr: String },
    /// Alexander module summary and Blanchfield pairing values
    Blanchfield {
        knot: String,
        x: Option<String>,
        y: Option<String>,
    },
    /// Genus-one metabolizers and isotropic submodules
    Metabolizers { knot: String },
    /// The recursive doubling family: levels, clones and ghosts
    Family {
        n: u32,
        knot: Option<String>,
        /// Expansion stage i (defaults to n)
        #[arg(long)]
        stage: Option<u32>,
    },
    /// Derived-series depth of a free-group word
    Depth {
        word: String,
        #[arg(long, default_value_t = 3)]
        kmax: u32,
    },
    /// Catalog persistence
    Catalog {
        #[command(subcommand)]
        action: CatalogCmd,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List entry names
    List,
    /// Print one entry as canonical JSON
    Show { name: String },
    /// Validate and persist an entry from a JSON file
    Add { name: String, file: PathBuf },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message);
        std::process::exit(e.code);
    }
}

fn emit<T: serde::Serialize>(json: bool, report: &T, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(report).expect("serializable"));
    } else {
        print!("{}", text);
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.cmd {
        Cmd::Depth { word, kmax } => return cmd_depth(&cli, word, *kmax),
        Cmd::Catalog { action } => return cmd_catalog(&cli, action),
        _ => {}
    }
    let cat = active_catalog()?;
    match &cli.cmd {
        Cmd::Invariants { expr } => cmd_invariants(&cli, &cat, expr),
        Cmd::Obstruct { expr } => cmd_obstruct(&cli, &cat, expr),
        Cmd::Sigfn { knot, csv, digits } => cmd_sigfn(&cli, &cat, knot, csv.as_deref(), *digits),
        Cmd::Rho0 { expr } => cmd_rho0(&cli, &cat, expr),
        Cmd::Blanchfield { knot, x, y } => {
            cmd_blanchfield(&cli, &cat, knot, x.as_deref(), y.as_deref())
        }
        Cmd::Metabolizers { knot } => cmd_metabolizers(&cli, &cat, knot),
        Cmd::Family { n, knot, stage } => cmd_family(&cli, &cat, *n, knot.as_deref(), *stage),
        Cmd::Depth { .. } | Cmd::Catalog { .. } => unreachable!(),
    }
}

fn combined_level(expr: &TermExpr) -> Option<SolvableLevel> {
    let mut acc: Option<SolvableLevel> = None;
    for t in expr.components() {
        let l = solvable_level(t).ok()?;
        // a connected sum sits at the minimum of the component levels
        acc = Some(match (acc, l) {
            (None, l) => l,
            (Some(SolvableLevel::SliceByConstruction), l) => l,
            (Some(p), SolvableLevel::SliceByConstruction) => p,
            (
                Some(SolvableLevel::Level {
                    twice: a,
                    rational_only: ra,
                }),
                SolvableLevel::Level {
                    twice: b,
                    rational_only: rb,
                },
            ) => SolvableLevel::Level {
                twice: a.min(b),
                rational_only: ra || rb,
            },
        });
    }
    acc
}

fn cmd_invariants(cli: &Cli, cat: &CatalogFile, expr: &str) -> Result<(), CliError> {
    let parsed = parse_term(expr, cat)?;
    if !parsed.is_knot() {
        return Err(CliError::new(
            EXIT_PARSE,
            "invariants are computed for knots; this term is a link",
        ));
    }
    let v = parsed.seifert()?;
    let sf = signature_function(&v);
    let rho = rho0_with_bits(&v, cli.precision);
    let report = InvariantsReport {
        alexander: v.alexander_polynomial().to_string(),
        algebraically_slice: AlgSliceOut::from_decision(&v.is_algebraically_slice()),
        arf: v.arf(),
        expression: parsed.display(),
        genus: v.genus(),
        level: combined_level(&parsed).map(|l| level_string(&l)),
        rho0: Rho0Out::from_value(&rho, 12),
        signature: SignatureOut::from_function(&sf, 12),
    };
    let text = report.text();
    emit(cli.json, &report, text);
    Ok(())
}

fn cmd_obstruct(cli: &Cli, cat: &CatalogFile, expr: &str) -> Result<(), CliError> {
    let parsed = parse_term(expr, cat)?;
    let verdict = match parsed.single() {
        Some(term) => slice_obstruction(term)?,
        None => {
            // componentwise: a sum of slice knots is slice
            if parsed.components().iter().all(|t| t.all_leaves_slice()) {
                concord_core::rho::Verdict::SliceByConstruction
            } else {
                concord_core::rho::Verdict::Inconclusive {
                    reason: "connected sums are analyzed componentwise only when all components are slice".into(),
                }
            }
        }
    };
    let report = ObstructReport::from_verdict(parsed.display(), &verdict);
    let text = report.text();
    emit(cli.json, &report, text);
    Ok(())
}

fn cmd_sigfn(
    cli: &Cli,
    cat: &CatalogFile,
    knot: &str,
    csv: Option<&std::path::Path>,
    digits: usize,
) -> Result<(), CliError> {
    let parsed = parse_term(knot, cat)?;
    if !parsed.is_knot() {
        return Err(CliError::new(EXIT_PARSE, "sigfn needs a knot"));
    }
    let v = parsed.seifert()?;
    let sf = signature_function(&v);
    let rows = sig_rows(&sf.arc_rows_certified(digits), digits);
    if cli.json {
        let report = SigfnReport {
            expression: parsed.display(),
            rows,
        };
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
        return Ok(());
    }
    let mut out = String::new();
    for r in &rows {
        out.push_str(&format!("{},{},{}\n", r.theta_lo, r.theta_hi, r.sigma));
    }
    match csv {
        Some(path) => std::fs::write(path, out).map_err(|e| {
            CliError::new(EXIT_IO, format!("cannot write {}: {}", path.display(), e))
        })?,
        None => print!("{}", out),
    }
    Ok(())
}

fn cmd_rho0(cli: &Cli, cat: &CatalogFile, expr: &str) -> Result<(), CliError> {
    let parsed = parse_term(expr, cat)?;
    if !parsed.is_knot() {
        return Err(CliError::new(EXIT_PARSE, "rho0 needs a knot"));
    }
    let v = parsed.seifert()?;
    let rho = rho0_with_bits(&v, cli.precision);
    // print only digits the interval radius certifies
    let digits = ((cli.precision as f64 * 0.301) as usize).saturating_sub(1).max(6);
    let report = Rho0Report {
        expression: parsed.display(),
        rho0: Rho0Out::from_value(&rho, digits),
    };
    let text = format!("rho0({}) = {}\n", report.expression, report.rho0.text());
    emit(cli.json, &report, text);
    Ok(())
}

fn parse_element(
    spec: &str,
    rank: usize,
) -> Result<concord_core::blanchfield::ModuleElement, CliError> {
    let s = spec.trim();
    if let Some(idx) = s.strip_prefix('e') {
        if let Ok(i) = idx.parse::<usize>() {
            if i == 0 || i > rank {
                return Err(CliError::new(
                    EXIT_PARSE,
                    format!("basis index e{} out of range 1..={}", i, rank),
                ));
            }
            return Ok(basis_element(rank, i - 1));
        }
    }
    let coords: Vec<&str> = s.split(',').collect();
    if coords.len() != rank {
        return Err(CliError::new(
            EXIT_PARSE,
            format!("expected {} comma-separated coordinates", rank),
        ));
    }
    coords
        .iter()
        .map(|c| laurent_text::parse(c).map_err(|e| CliError::new(EXIT_PARSE, e)))
        .collect()
}

fn cmd_blanchfield(
    cli: &Cli,
    cat: &CatalogFile,
    knot: &str,
    x: Option<&str>,
    y: Option<&str>,
) -> Result<(), CliError> {
    let parsed = parse_term(knot, cat)?;
    if !parsed.is_knot() {
        return Err(CliError::new(EXIT_PARSE, "blanchfield needs a knot"));
    }
    let v = parsed.seifert()?;
    let module = AlexanderModule::new(&v);
    let module_out = ModuleOut {
        cyclic: module.is_cyclic(),
        order: module.order().to_string(),
        smith_diagonal: module.smith().diag.iter().map(|d| d.to_string()).collect(),
    };
    let pairing = match (x, y) {
        (Some(xs), Some(ys)) => {
            let xe = parse_element(xs, v.size())?;
            let ye = parse_element(ys, v.size())?;
            let value = blanchfield_pair(&v, &xe, &ye)?;
            Some(PairingOut {
                value: value.to_string(),
                x: xe.iter().map(|c| c.to_string()).collect(),
                y: ye.iter().map(|c| c.to_string()).collect(),
                zero: value.is_zero(),
            })
        }
        (None, None) => None,
        _ => {
            return Err(CliError::new(
                EXIT_PARSE,
                "blanchfield takes either no elements or both x and y",
            ))
        }
    };
    let report = BlanchfieldReport {
        expression: parsed.display(),
        module: module_out,
        pairing,
    };
    let mut text = format!(
        "module:  presented by tV - V^T, order {} ({})\nsmith:   [{}]\n",
        report.module.order,
        if report.module.cyclic { "cyclic" } else { "not cyclic" },
        report.module.smith_diagonal.join(", ")
    );
    if let Some(p) = &report.pairing {
        text.push_str(&format!(
            "Bl(x,y) = {}{}\n",
            p.value,
            if p.zero { " (zero class)" } else { "" }
        ));
    }
    emit(cli.json, &report, text);
    Ok(())
}

fn cmd_metabolizers(cli: &Cli, cat: &CatalogFile, knot: &str) -> Result<(), CliError> {
    let parsed = parse_term(knot, cat)?;
    if !parsed.is_knot() {
        return Err(CliError::new(EXIT_PARSE, "metabolizers needs a knot"));
    }
    let v = parsed.seifert()?;
    let genus1 = if v.size() == 2 {
        Some(MetabolizersReport::genus1_from(
            &v.genus1_metabolizers()?.kind,
        ))
    } else {
        None
    };
    let en = enumerate_isotropic_submodules(&v)?;
    let report = MetabolizersReport {
        expression: parsed.display(),
        genus1,
        isotropic: IsotropyOut {
            complete: en.complete,
            submodules: en
                .submodules
                .iter()
                .map(|s| SubmoduleOut {
                    generator: s.generator.iter().map(|c| c.to_string()).collect(),
                    order: s.order.to_string(),
                })
                .collect(),
        },
    };
    let mut text = String::new();
    if let Some(g) = &report.genus1 {
        text.push_str(&format!("genus-1 isotropic lines: {}", g.kind));
        if !g.lines.is_empty() {
            let ls: Vec<String> = g
                .lines
                .iter()
                .map(|l| format!("({},{})", l[0], l[1]))
                .collect();
            text.push_str(&format!(" {}", ls.join(" ")));
        }
        text.push('\n');
    }
    text.push_str(&format!(
        "isotropic submodules ({}): {}\n",
        if report.isotropic.complete {
            "complete"
        } else {
            "partial"
        },
        report.isotropic.submodules.len()
    ));
    for s in &report.isotropic.submodules {
        text.push_str(&format!(
            "  order {} generated by [{}]\n",
            s.order,
            s.generator.join(", ")
        ));
    }
    emit(cli.json, &report, text);
    Ok(())
}

fn cmd_family(
    cli: &Cli,
    cat: &CatalogFile,
    n: u32,
    knot: Option<&str>,
    stage: Option<u32>,
) -> Result<(), CliError> {
    let leaf = cat.leaf(knot.unwrap_or("unknot"))?;
    let term = concord_core::infection::build_jn(n, leaf);
    let i = stage.unwrap_or(n);
    let cs = expand_clones(&term, i)?;
    let level = solvable_level(&term)?;
    let report = FamilyReport {
        clones: cs
            .clones
            .iter()
            .map(|c| CurveOut {
                depth: c.depth,
                id: c.id.clone(),
            })
            .collect(),
        expression: format!("{}", term),
        ghosts: cs
            .ghosts
            .iter()
            .map(|g| GhostOut {
                curves: g
                    .curves
                    .iter()
                    .map(|c| CurveOut {
                        depth: c.depth,
                        id: c.id.clone(),
                    })
                    .collect(),
                meridian_level: g.of_meridian_level,
            })
            .collect(),
        level: level_string(&level),
        n,
        residual: format!("{}", cs.residual),
        stage: i,
    };
    let mut text = format!(
        "family:   J_{} = {}\nlevel:    {}\nstage {}: {} clone(s), residual {}\n",
        n,
        report.expression,
        report.level,
        i,
        report.clones.len(),
        report.residual
    );
    for g in &report.ghosts {
        text.push_str(&format!(
            "  ghosts of mu_{}: {} at depth {}\n",
            g.meridian_level,
            g.curves.len(),
            g.curves.first().map(|c| c.depth).unwrap_or(0)
        ));
    }
    emit(cli.json, &report, text);
    Ok(())
}

fn cmd_depth(cli: &Cli, word: &str, kmax: u32) -> Result<(), CliError> {
    let w = Word::parse(word).map_err(CliError::from)?;
    let r = derived_depth(&w, kmax)?;
    let report = DepthReportOut {
        depth: r.depth,
        exact: r.exact,
        kmax,
        word: w.to_string(),
    };
    let text = format!(
        "word:  {}\ndepth: {} ({})\n",
        report.word,
        report.depth,
        if report.exact {
            "exact: not in the next derived subgroup"
        } else {
            "lower bound at the k_max cap"
        }
    );
    emit(cli.json, &report, text);
    Ok(())
}

fn cmd_catalog(cli: &Cli, action: &CatalogCmd) -> Result<(), CliError> {
    match action {
        CatalogCmd::List => {
            let cat = active_catalog()?;
            let report = CatalogListReport {
                names: cat.knots.keys().cloned().collect(),
            };
            let text = report.names.join("\n") + "\n";
            emit(cli.json, &report, text);
            Ok(())
        }
        CatalogCmd::Show { name } => {
            let cat = active_catalog()?;
            let (canonical, entry) = cat.lookup(name)?;
            let mut single = std::collections::BTreeMap::new();
            single.insert(canonical.to_string(), entry.clone());
            let mut text = serde_json::to_string_pretty(&single).unwrap();
            text.push('\n');
            print!("{}", text);
            Ok(())
        }
        CatalogCmd::Add { name, file } => {
            let text = std::fs::read_to_string(file).map_err(|e| {
                CliError::new(EXIT_IO, format!("cannot read {}: {}", file.display(), e))
            })?;
            let entry: catalog::CatalogEntry = serde_json::from_str(&text)
                .map_err(|e| CliError::new(EXIT_PARSE, format!("entry JSON: {}", e)))?;
            const RESERVED: [&str; 6] = ["Jn", "J", "BD", "infect", "sum", "mirror"];
            if RESERVED.contains(&name.as_str()) || name.starts_with("BD^") {
                return Err(CliError::new(
                    EXIT_PARSE,
                    format!("'{}' is reserved by the term grammar", name),
                ));
            }
            entry.validate(name)?;
            let path = catalog::resolve_path()
                .unwrap_or_else(|| PathBuf::from(catalog::DEFAULT_CATALOG_FILE));
            let mut cat = if path.exists() {
                CatalogFile::load(&path)?
            } else {
                CatalogFile::default_catalog()
            };
            cat.knots.insert(name.clone(), entry);
            cat.save(&path)?;
            let report = CatalogAddReport {
                added: name.clone(),
                path: path.display().to_string(),
            };
            let text = format!("added '{}' to {}\n", report.added, report.path);
            emit(cli.json, &report, text);
            Ok(())
        }
    }
}
