//! Command-line front end: ingest JSON specs, run the computations, emit
//! machine-readable reports.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on input
//! errors.

mod dto;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dto::*;
use pinlift::checks::{run_all, Fault, CHECKS};
use pinlift::cliff::{pin_cocycles, pin_preimage, word_strings, OrthGroup, PinVariant};
use pinlift::cohom::{h2, Coefficients};
use pinlift::ext::{baer_sum, decide_lift, from_cocycle_table, pullback, pushout};
use pinlift::grp::identify::identify;
use pinlift::grp::{generate, GroupSpec};
use pinlift::swc::{lifting_report, OrthogonalRep};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pinlift",
    about = "Exact central extensions, second group cohomology, pin double \
             covers and Stiefel-Whitney lifting obstructions for finite groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Clone)]
struct Common {
    /// Order cap for generated groups.
    #[arg(long, global = true, default_value_t = pinlift::grp::DEFAULT_CAP)]
    cap: usize,
    /// Output format; json is the stable contract.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized verification checks.
    #[arg(long, global = true, default_value_t = 2026)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Identify a group: order, center, abelianization, isomorphism type.
    Group {
        /// Path to a group spec JSON file.
        spec: PathBuf,
    },
    /// Compute H^2(G, A): invariant factors and representative cocycles.
    H2 {
        spec: PathBuf,
        /// Cyclic orders of the coefficients, e.g. "2" or "2,4".
        #[arg(long, default_value = "2")]
        coeffs: String,
    },
    /// Operations on central extensions.
    Ext {
        #[command(subcommand)]
        op: ExtOp,
    },
    /// Double-cover cocycles and preimages of an orthogonal matrix group.
    Pin {
        /// Path to a group spec JSON file of kind "orth".
        spec: PathBuf,
        #[arg(long, value_enum, default_value_t = VariantArg::All)]
        variant: VariantArg,
    },
    /// Stiefel-Whitney classes and lifting verdicts of a representation.
    Swc {
        /// Path to a representation JSON file.
        rep: PathBuf,
        /// Pad with this many trivial dimensions before the analysis.
        #[arg(long, default_value_t = 0)]
        pad: usize,
    },
    /// Run the verification suite.
    PaperChecks {
        /// List the check names without running them.
        #[arg(long)]
        list: bool,
        /// Corrupt one cocycle sign to demonstrate a failing run.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Subcommand)]
enum ExtOp {
    /// Build the extension of G by A attached to a cocycle table.
    Build {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value = "2")]
        coeffs: String,
        /// Path to a |G| x |G| cocycle table JSON file.
        #[arg(long)]
        cocycle: PathBuf,
    },
    /// The cohomology class of an extension (canonical cocycle).
    Class {
        #[arg(long)]
        ext: PathBuf,
    },
    /// Baer sum of two extensions of the same group.
    Baer {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
    },
    /// Pull an extension back along a homomorphism.
    Pullback {
        #[arg(long)]
        hom: PathBuf,
        #[arg(long)]
        ext: PathBuf,
    },
    /// Push an extension out along a coefficient homomorphism.
    Pushout {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        ext: PathBuf,
    },
    /// Decide whether a homomorphism lifts through an extension.
    Lift {
        #[arg(long)]
        hom: PathBuf,
        #[arg(long)]
        ext: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Plus,
    Minus,
    Tilde,
    All,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("cannot parse {}: {e}", path.display()))
}

fn parse_coeffs(s: &str) -> Result<Coefficients, String> {
    let moduli: Result<Vec<u64>, _> = s.split(',').map(|p| p.trim().parse::<u64>()).collect();
    Coefficients::new(moduli.map_err(|e| format!("bad coefficients: {e}"))?)
        .map_err(|e| e.to_string())
}

fn load_group(path: &Path, cap: usize) -> Result<pinlift::grp::Generated, String> {
    let spec: GroupSpec = read_json(path)?;
    generate(&spec, cap).map_err(|e| e.to_string())
}

fn emit<T: serde::Serialize>(common: &Common, value: &T, text: String) -> Result<(), String> {
    match common.format {
        Format::Json => {
            let json = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
            println!("{json}");
        }
        Format::Text => println!("{text}"),
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<ExitCode, String> {
    let common = &cli.common;
    match &cli.command {
        Command::Group { spec } => {
            let generated = load_group(spec, common.cap)?;
            let g = &generated.group;
            let (ab, _) = g.abelianization();
            let report = GroupReport {
                order: g.order(),
                iso: identify(g),
                center: g.center().len(),
                abelianization: pinlift::grp::identify::abelian_invariants(&ab),
                exponent: g.exponent(),
            };
            let text = format!(
                "order {}\niso {}\ncenter {}\nabelianization {:?}\nexponent {}",
                report.order,
                report.iso.as_deref().unwrap_or("unknown"),
                report.center,
                report.abelianization,
                report.exponent
            );
            emit(common, &report, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::H2 { spec, coeffs } => {
            let generated = load_group(spec, common.cap)?;
            let coeffs = parse_coeffs(coeffs)?;
            let basis = h2(&generated.group, &coeffs);
            let report = H2Report {
                group_order: generated.group.order(),
                coeffs: coeffs.moduli().to_vec(),
                dimension: basis.dimension(),
                invariants: basis.invariants.clone(),
                reps: basis
                    .reps
                    .iter()
                    .map(|r| cocycle_to_table(&r.canonical_rep()))
                    .collect(),
            };
            let text = format!(
                "H^2 of a group of order {} with Z/{:?} coefficients:\n\
                 dimension {}\ninvariant factors {:?}",
                report.group_order, report.coeffs, report.dimension, report.invariants
            );
            emit(common, &report, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ext { op } => run_ext(common, op),
        Command::Pin { spec, variant } => {
            let generated = load_group(spec, common.cap)?;
            let og = OrthGroup::from_generated(&generated)
                .ok_or("pin needs a spec of kind \"orth\"")?;
            let report = pin_cocycles(&og).map_err(|e| e.to_string())?;
            let mut preimages = BTreeMap::new();
            let wanted: Vec<PinVariant> = match variant {
                VariantArg::Plus => vec![PinVariant::Plus],
                VariantArg::Minus => vec![PinVariant::Minus],
                VariantArg::Tilde => vec![PinVariant::Tilde],
                VariantArg::All => {
                    vec![PinVariant::Plus, PinVariant::Minus, PinVariant::Tilde]
                }
            };
            for v in &wanted {
                let cover = pin_preimage(&og, *v).map_err(|e| e.to_string())?;
                preimages.insert(v.name().to_string(), identify(cover.middle()));
            }
            let json = PinReport {
                order: og.group.order(),
                dim: og.dim,
                word_lengths: report.word_lengths(),
                words: report.words.iter().map(word_strings).collect(),
                plus: cocycle_to_table(&report.plus),
                minus: cocycle_to_table(&report.minus),
                tilde: cocycle_to_table(&report.tilde),
                preimages: preimages.clone(),
            };
            let text = {
                let pre: Vec<String> = preimages
                    .iter()
                    .map(|(k, v)| format!("{k}: {}", v.as_deref().unwrap_or("unknown")))
                    .collect();
                format!(
                    "orthogonal group of order {} in dim {}\nword lengths {:?}\npreimages:\n  {}",
                    og.group.order(),
                    og.dim,
                    report.word_lengths(),
                    pre.join("\n  ")
                )
            };
            emit(common, &json, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Swc { rep, pad } => {
            let file: RepFile = read_json(rep)?;
            let generated = generate(&file.group, common.cap).map_err(|e| e.to_string())?;
            let mut images = Vec::new();
            for (key, rows) in &file.images {
                let idx: usize = key.parse().map_err(|_| "image keys must be indices")?;
                images.push((idx, parse_matrix(rows, file.dim)?));
            }
            let mut rep = OrthogonalRep::new(&generated.group, file.dim, &images)
                .map_err(|e| e.to_string())?;
            if *pad > 0 {
                rep = rep.padded(*pad);
            }
            let report = lifting_report(&rep).map_err(|e| e.to_string())?;
            let mut verdicts = BTreeMap::new();
            let mut counts = BTreeMap::new();
            let mut witnesses = BTreeMap::new();
            for v in [PinVariant::Tilde, PinVariant::Plus, PinVariant::Minus] {
                let r = report.report(v);
                verdicts.insert(v.name().to_string(), r.lifts);
                counts.insert(v.name().to_string(), r.count);
                witnesses.insert(
                    v.name().to_string(),
                    r.witness.as_ref().map(|w| w.map().to_vec()),
                );
            }
            let json = SwcJson {
                w1: report.w1.values().to_vec(),
                w2: cocycle_to_table(&report.w2.canonical_rep()),
                w1_squared: cocycle_to_table(&report.w1_squared.canonical_rep()),
                verdicts: verdicts.clone(),
                counts: counts.clone(),
                witnesses,
            };
            let text = {
                let lines: Vec<String> = verdicts
                    .iter()
                    .map(|(k, v)| {
                        format!(
                            "{k}: {} (lifts: {})",
                            if *v { "lifts" } else { "obstructed" },
                            counts[k]
                        )
                    })
                    .collect();
                format!(
                    "w1 = {:?}\nw2 zero: {}\nw1^2 zero: {}\n{}",
                    report.w1.values().iter().map(|v| v[0]).collect::<Vec<_>>(),
                    report.w2.is_zero(),
                    report.w1_squared.is_zero(),
                    lines.join("\n")
                )
            };
            emit(common, &json, text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::PaperChecks { list, inject_fault } => {
            if *list {
                for c in &CHECKS {
                    println!("{}", c.id);
                }
                return Ok(ExitCode::SUCCESS);
            }
            let fault = if *inject_fault { Fault::CupCocycleSign } else { Fault::None };
            let results = run_all(common.seed, fault);
            let all_passed = results.iter().all(|r| r.passed);
            match common.format {
                Format::Json => {
                    let report = ChecksReport {
                        seed: common.seed,
                        checks: results
                            .iter()
                            .map(|r| CheckJson {
                                id: r.spec.id.to_string(),
                                claim: r.spec.claim.to_string(),
                                passed: r.passed,
                                millis: r.millis,
                                budget_millis: r.spec.budget_millis,
                                detail: r.detail.clone(),
                            })
                            .collect(),
                        all_passed,
                    };
                    println!("{}", serde_json::to_string_pretty(&report).unwrap());
                }
                Format::Text => {
                    for r in &results {
                        println!(
                            "[{}] {} ({} ms / {} ms)\n       claim: {}\n       {}",
                            if r.passed { "PASS" } else { "FAIL" },
                            r.spec.id,
                            r.millis,
                            r.spec.budget_millis,
                            r.spec.claim,
                            r.detail
                        );
                    }
                    println!("{}", if all_passed { "all checks passed" } else { "FAILURES" });
                }
            }
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn run_ext(common: &Common, op: &ExtOp) -> Result<ExitCode, String> {
    match op {
        ExtOp::Build { group, coeffs, cocycle } => {
            let generated = load_group(group, common.cap)?;
            let coeffs = parse_coeffs(coeffs)?;
            let table: CocycleTable = read_json(cocycle)?;
            let x = from_cocycle_table(&generated.group, &coeffs, table)
                .map_err(|e| e.to_string())?;
            emit_extension(common, &x)
        }
        ExtOp::Class { ext } => {
            let file: ExtensionFile = read_json(ext)?;
            let x = extension_from_file(&file)?;
            let cls = x.to_class(None);
            let canonical = cls.canonical_rep();
            let report = ClassReport {
                group_order: x.base().order(),
                coeffs: x.coeffs().moduli().to_vec(),
                table: cocycle_to_table(&canonical),
                zero: cls.is_zero(),
            };
            let text = format!(
                "class over a base of order {}; zero: {}",
                report.group_order, report.zero
            );
            emit(common, &report, text)?;
            Ok(ExitCode::SUCCESS)
        }
        ExtOp::Baer { x, y } => {
            let xf: ExtensionFile = read_json(x)?;
            let yf: ExtensionFile = read_json(y)?;
            let sum = baer_sum(&extension_from_file(&xf)?, &extension_from_file(&yf)?)
                .map_err(|e| e.to_string())?;
            emit_extension(common, &sum)
        }
        ExtOp::Pullback { hom, ext } => {
            let hf: HomFile = read_json(hom)?;
            let xf: ExtensionFile = read_json(ext)?;
            let phi = hom_from_file(&hf, common.cap)?;
            let x = extension_from_file(&xf)?;
            let pulled = pullback(&phi, &x).map_err(|e| e.to_string())?;
            emit_extension(common, &pulled)
        }
        ExtOp::Pushout { map, ext } => {
            let mf: CoeffHomFile = read_json(map)?;
            let xf: ExtensionFile = read_json(ext)?;
            let psi = coeff_hom_from_file(&mf)?;
            let x = extension_from_file(&xf)?;
            let pushed = pushout(&psi, &x).map_err(|e| e.to_string())?;
            emit_extension(common, &pushed)
        }
        ExtOp::Lift { hom, ext } => {
            let hf: HomFile = read_json(hom)?;
            let xf: ExtensionFile = read_json(ext)?;
            let phi = hom_from_file(&hf, common.cap)?;
            let x = extension_from_file(&xf)?;
            let report = decide_lift(&phi, &x).map_err(|e| e.to_string())?;
            let json = lift_to_json(&report);
            let text = if json.lifts {
                format!("lifts; {} lifts in total", json.count)
            } else {
                "does not lift; obstruction class attached".to_string()
            };
            emit(common, &json, text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn emit_extension(
    common: &Common,
    x: &pinlift::ext::CentralExtension,
) -> Result<ExitCode, String> {
    let file = extension_to_file(x);
    let text = format!(
        "extension of a group of order {} by Z/{:?}; middle group of order {} ({}); class zero: {}",
        x.base().order(),
        x.coeffs().moduli(),
        x.middle().order(),
        file.middle_iso.as_deref().unwrap_or("unknown"),
        x.to_class(None).is_zero()
    );
    emit(common, &file, text)?;
    Ok(ExitCode::SUCCESS)
}
