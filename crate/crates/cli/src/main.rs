//! Command-line front end: enumeration dumps, transform printers, graded
//! cohomology tables and the verification suites.
//!
//! Weights are passed as comma-separated doubled coefficients in the basis
//! order `(c, e_1, ..., e_n)`, so `--lambda 0,2,2` is `e_1 + e_2`. Table
//! output is plain text (no color, so `NO_COLOR` is always honored).

use clap::{Args, Parser, Subcommand, ValueEnum};
use gsp2n::cohomology::{
    central_character, kostant_cohomology, truncate, TruncationDirection,
};
use gsp2n::endoscopy::{GTriple, LeviDatum};
use gsp2n::root_data::{ParabolicIndex, Weight};
use gsp2n::satake::{satake_transfer, SatakeFamily};
use gsp2n::verify::{enumation_view, run, RunConfig, Suite};
use std::collections::BTreeSet;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gsp2n", version, about = "Exact verification toolkit for GSp(2n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate elliptic endoscopic data, cuspidal Levis and their
    /// triples with all derived constants.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print spherical transforms as sorted monomial lists.
    Satake(SatakeArgs),
    /// Graded nilradical cohomology tables with the positivity truncation.
    Kostant {
        #[arg(long)]
        n: usize,
        /// Parabolic index set, e.g. `1,2`; empty for the whole group.
        #[arg(long, default_value = "")]
        s: String,
        /// Doubled coefficients of the highest weight, `(c, e_1, ..., e_n)`.
        #[arg(long)]
        lambda: String,
        /// Doubled coefficients of the central twist; defaults to the
        /// canonical central character of `lambda`.
        #[arg(long)]
        lambda0: Option<String>,
        #[arg(long, default_value = "above")]
        direction: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run the verification suites and emit a report.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        /// Include wall-clock timings (breaks byte-level reproducibility).
        #[arg(long, default_value_t = false)]
        timings: bool,
    },
}

#[derive(Args)]
struct SatakeArgs {
    /// Rank for a single twisted transform.
    #[arg(long)]
    n: Option<usize>,
    /// Level (power of the residue degree).
    #[arg(long, default_value_t = 1)]
    a: i64,
    /// Twist set `K`, e.g. `1,2`.
    #[arg(long, default_value = "")]
    k: String,
    /// Cuspidal Levi `r,t,m` for a whole transform family.
    #[arg(long)]
    levi: Option<String>,
    /// Subset `A` of the torus indices of the Levi.
    #[arg(long, default_value = "")]
    subset_a: String,
    /// Subset `B` of the two-by-two block indices of the Levi.
    #[arg(long, default_value = "")]
    subset_b: String,
    #[arg(long, default_value_t = 0)]
    m1: usize,
    #[arg(long, default_value_t = 0)]
    m2: usize,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| e.to_string()))
        .collect()
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| e.to_string()))
        .collect()
}

fn run_cli() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Enumerate { n, format } => {
            if n == 0 {
                return Err("rank must be positive".into());
            }
            let view = enumation_view(n);
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&view).map_err(|e| e.to_string())?
                ),
                Format::Table => {
                    println!("elliptic data of GSp({}):", 2 * n);
                    for d in &view.elliptic_data {
                        println!(
                            "  n1={} n2={}  {}  |Λ|={}  τ={}",
                            d.n1, d.n2, d.label, d.lambda_order, d.tamagawa()
                        );
                    }
                    println!("cuspidal Levis:");
                    for l in &view.cuspidal_levis {
                        println!(
                            "  (r,t,m)=({},{},{})  {}  n_M^G={}",
                            l.levi.r, l.levi.t, l.levi.m, l.label, l.n_m_g
                        );
                        for tr in &l.triples {
                            println!(
                                "      A={:?} B={:?} (m1,m2)=({},{})  H={}  M'={}  n={}  |Λ_G|={}",
                                tr.a, tr.b, tr.m1, tr.m2, tr.h_label, tr.m_prime_label,
                                tr.n_m_prime_h, tr.lambda_g_order
                            );
                        }
                    }
                }
            }
            Ok(true)
        }
        Command::Satake(args) => run_satake(args),
        Command::Kostant {
            n,
            s,
            lambda,
            lambda0,
            direction,
            format,
        } => {
            let sset = parse_usize_list(&s)?;
            let parabolic = ParabolicIndex::new(n, sset).map_err(|e| e.to_string())?;
            let lam_coeffs = parse_i64_list(&lambda)?;
            if lam_coeffs.len() != n + 1 {
                return Err(format!(
                    "lambda needs {} doubled coefficients (c, e_1..e_n)",
                    n + 1
                ));
            }
            let lam = Weight(lam_coeffs);
            let l0 = match lambda0 {
                Some(raw) => {
                    let v = parse_i64_list(&raw)?;
                    if v.len() != n + 1 {
                        return Err(format!("lambda0 needs {} doubled coefficients", n + 1));
                    }
                    Weight(v)
                }
                None => central_character(&lam),
            };
            let dir = match direction.as_str() {
                "above" => TruncationDirection::Above,
                "below" => TruncationDirection::Below,
                other => return Err(format!("unknown direction: {other}")),
            };
            let pieces = kostant_cohomology(n, &parabolic, &lam).map_err(|e| e.to_string())?;
            let pieces = truncate(&pieces, &l0, &parabolic, dir).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&pieces).map_err(|e| e.to_string())?
                ),
                Format::Table => {
                    println!("{:<6} {:<28} {:>9}  {}", "degree", "weight", "dimension", "kept");
                    for p in &pieces {
                        println!(
                            "{:<6} {:<28} {:>9}  {}",
                            p.degree,
                            p.kostant_weight.to_string(),
                            p.dimension,
                            if p.kept_by_truncation { "yes" } else { "no" }
                        );
                    }
                }
            }
            Ok(true)
        }
        Command::Verify {
            suite,
            n_max,
            samples,
            seed,
            format,
            out,
            timings,
        } => {
            let suite: Suite = suite.parse()?;
            let cfg = RunConfig {
                suite,
                n_max,
                samples,
                seed,
                timings,
            };
            let report = run(&cfg);
            let rendered = match format {
                Format::Json => report.to_json(),
                Format::Table => report.to_table(),
            };
            match out {
                Some(path) => std::fs::write(&path, rendered).map_err(|e| e.to_string())?,
                None => println!("{rendered}"),
            }
            Ok(report.passed)
        }
    }
}

fn run_satake(args: SatakeArgs) -> Result<bool, String> {
    let print_poly = |p: &gsp2n::laurent::LaurentPolynomial, format: Format| match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(p).expect("polynomial serialization")
        ),
        Format::Table => println!("{p}"),
    };
    if let Some(levi_raw) = &args.levi {
        let parts = parse_usize_list(levi_raw)?;
        if parts.len() != 3 {
            return Err("levi must be given as r,t,m".into());
        }
        let levi = LeviDatum::new(parts[0], parts[1], parts[2]);
        let a_set: BTreeSet<usize> = parse_usize_list(&args.subset_a)?.into_iter().collect();
        let b_set: BTreeSet<usize> = parse_usize_list(&args.subset_b)?.into_iter().collect();
        if args.m1 + args.m2 != levi.m {
            return Err("m1 + m2 must equal the hermitian rank m".into());
        }
        let triple =
            GTriple::new(&levi, a_set, b_set, args.m1, args.m2).map_err(|e| e.to_string())?;
        let fam = SatakeFamily::build(&levi, &triple, args.a).map_err(|e| e.to_string())?;
        match args.format {
            Format::Json => {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&serde_json::json!({
                        "k": fam.k,
                        "k_prime": fam.k_prime,
                        "phi": fam.phi,
                        "phi_m": fam.phi_m,
                        "phi_upper_m": fam.phi_upper_m,
                        "f_m_prime": fam.f_m_prime,
                        "f_h": fam.f_h,
                        "f_h_m_h": fam.f_h_m_h,
                        "psi_m_prime": fam.psi_m_prime,
                        "factorizations_hold": fam.verify_factorizations(),
                    }))
                    .expect("family serialization")
                );
            }
            Format::Table => {
                println!("K  = {:?}", fam.k);
                println!("K' = {:?}", fam.k_prime);
                println!("phi         = {}", fam.phi);
                println!("phi_M       = {}", fam.phi_m);
                println!("phi^M       = {}", fam.phi_upper_m);
                println!("f^M'        = {}", fam.f_m_prime);
                println!("f^H         = {}", fam.f_h);
                println!("f^H_MH      = {}", fam.f_h_m_h);
                println!("psi^M'      = {}", fam.psi_m_prime);
                println!("factorizations hold: {}", fam.verify_factorizations());
            }
        }
        return Ok(true);
    }
    let n = args.n.ok_or("either --n or --levi is required")?;
    let k: BTreeSet<usize> = parse_usize_list(&args.k)?.into_iter().collect();
    if k.iter().any(|i| *i < 1 || *i > n) {
        return Err("K must be a subset of 1..=n".into());
    }
    let poly = satake_transfer(n, args.a, &k);
    print_poly(&poly, args.format);
    Ok(true)
}

fn main() -> ExitCode {
    match run_cli() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
