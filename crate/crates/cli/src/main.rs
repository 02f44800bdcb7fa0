use clap::{Parser, Subcommand, ValueEnum};
use malcev_core::engine::{
    default_scale, run_search, shortest_identities, verify_identity_integer, verify_identity_modular, AlgebraStructure,
    IdentityRecord, SearchConfig,
};
use malcev_core::exactla::{Delta, Fp};
use malcev_core::freealg::{count_types, parse_terms, MonomialSpace, OpSet, Poly, MAX_DEGREE};
use malcev_core::sl2rep::{gl5_crosscheck, StructureConstants};
use num_traits::ToPrimitive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "malcev", version, about = "Polynomial identities of the 7-dimensional simple Malcev algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ops {
    Binary,
    Ternary,
    Mixed,
}

impl From<Ops> for OpSet {
    fn from(o: Ops) -> OpSet {
        match o {
            Ops::Binary => OpSet::Binary,
            Ops::Ternary => OpSet::Ternary,
            Ops::Mixed => OpSet::Mixed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CountOps {
    Binary,
    Ternary,
    /// types using both products
    Mixed,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Arith {
    /// exact 128-bit evaluation, overflow is an error
    Integer,
    /// evaluation in F_p
    Modular,
}

#[derive(Subcommand)]
enum Command {
    /// Write the bilinear and trilinear structure constants as JSON.
    BuildSc {
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        scale: i64,
        /// Output file (standard output if absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Association types and multilinear monomials per degree.
    Count {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value = "all")]
        ops: CountOps,
    },
    /// Fill-and-reduce, consequences and new identities in one degree.
    Search {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum)]
        ops: Ops,
        #[arg(long, default_value_t = 101)]
        prime: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        stall: usize,
        /// Trilinear scale (default 1, or -30 for mixed runs).
        #[arg(long, allow_hyphen_values = true)]
        scale: Option<i64>,
        /// Exit with status 1 unless every published dimension is reproduced.
        #[arg(long)]
        assert_paper: bool,
        /// Directory for report.json, timing.json and one file per generator.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check an identity file by exact integer evaluation.
    Verify {
        path: PathBuf,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, allow_hyphen_values = true)]
        scale: Option<i64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Components of the random integer arguments lie in [-bound, bound].
        #[arg(long, default_value_t = 9)]
        bound: i64,
        #[arg(long, value_enum, default_value = "integer")]
        arith: Arith,
        /// Prime for modular arithmetic.
        #[arg(long, default_value_t = 32749)]
        prime: u32,
    },
    /// LLL-reduced integer identities, shortest first (at most 510 monomials).
    Shortest {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum)]
        ops: Ops,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        stall: usize,
        #[arg(long, allow_hyphen_values = true)]
        scale: Option<i64>,
        /// How many vectors to print.
        #[arg(long, default_value_t = 5)]
        count: usize,
    },
}

type CliResult = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::BuildSc { scale, out } => build_sc(scale, out.as_deref()),
        Command::Count { degree, ops } => count(degree, ops),
        Command::Search { degree, ops, prime, seed, stall, scale, assert_paper, out } => {
            let ops = OpSet::from(ops);
            let cfg =
                SearchConfig { degree, opset: ops, prime, seed, stall, scale: scale.unwrap_or(default_scale(ops)) };
            search(&cfg, assert_paper, out.as_deref())
        }
        Command::Verify { path, trials, scale, seed, bound, arith, prime } => {
            verify(&path, trials, scale, seed, bound, arith, prime)
        }
        Command::Shortest { degree, ops, seed, stall, scale, count } => {
            let ops = OpSet::from(ops);
            shortest(degree, ops, seed, stall, scale.unwrap_or(default_scale(ops)), count)
        }
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn build_sc(scale: i64, out: Option<&Path>) -> CliResult {
    let sc = StructureConstants::build(scale).map_err(|e| e.to_string())?;
    let json = sc.to_json();
    let report = gl5_crosscheck().map_err(|e| e.to_string())?;
    let lambdas = format!("lambda_alpha {}\nlambda_beta {}", report.lambda_alpha, report.lambda_beta);
    match out {
        Some(path) => {
            std::fs::write(path, json).map_err(|e| format!("{}: {e}", path.display()))?;
            println!("{lambdas}");
        }
        None => {
            print!("{json}");
            eprintln!("{lambdas}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn count(degree: usize, ops: CountOps) -> CliResult {
    if !(1..=MAX_DEGREE).contains(&degree) {
        return Err(format!("degree must lie in 1..={MAX_DEGREE}"));
    }
    let rows = count_types(degree).map_err(|e| e.to_string())?;
    println!("degree binary ternary mixed total monomials");
    for r in &rows {
        println!("{:>6} {:>6} {:>7} {:>5} {:>5} {:>9}", r.degree, r.binary, r.ternary, r.mixed, r.total, r.monomials);
    }
    let last = &rows[degree - 1];
    let pure = |o: OpSet| -> Result<usize, String> {
        Ok(MonomialSpace::new(degree, o).map_or(0, |s| s.len()))
    };
    let (types, monomials) = match ops {
        CountOps::All => (last.total, last.monomials),
        CountOps::Binary => (last.binary, pure(OpSet::Binary)?),
        CountOps::Ternary => (last.ternary, pure(OpSet::Ternary)?),
        CountOps::Mixed => (last.mixed, last.monomials - pure(OpSet::Binary)? - pure(OpSet::Ternary)?),
    };
    println!("types {types}, monomials {monomials}");
    Ok(ExitCode::SUCCESS)
}

fn search(cfg: &SearchConfig, assert_paper: bool, out: Option<&Path>) -> CliResult {
    let report = run_search(cfg).map_err(|e| e.to_string())?;
    let json = report.to_json();
    let timing = serde_json::json!({ "wall_seconds": report.wall_seconds, "iterations": report.iterations });
    match out {
        Some(dir) => {
            let write = |name: &str, text: &str| {
                let p = dir.join(name);
                std::fs::write(&p, text).map_err(|e| format!("{}: {e}", p.display()))
            };
            std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
            write("report.json", &(json.clone() + "\n"))?;
            write("timing.json", &(timing.to_string() + "\n"))?;
            for g in report.generators.iter().chain(&report.single_generator) {
                write(&format!("{}.txt", g.name), &g.text)?;
            }
        }
        None => println!("{json}"),
    }
    eprintln!(
        "{} degree {}: rank {}, nullspace {}, consequences {}, new {}, generators {} ({:.1}s)",
        cfg.opset,
        cfg.degree,
        report.rank,
        report.nullity,
        report.known_rank,
        report.new_dim,
        report.generator_count(),
        report.wall_seconds
    );
    if assert_paper {
        if report.expected.is_none() {
            return Err(format!("no published values for {} degree {}", cfg.opset, cfg.degree));
        }
        if !report.mismatches.is_empty() {
            for m in &report.mismatches {
                eprintln!("mismatch: {m}");
            }
            return Ok(ExitCode::from(1));
        }
        eprintln!("all published values reproduced");
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(path: &Path, trials: usize, scale: Option<i64>, seed: u64, bound: i64, arith: Arith, prime: u32) -> CliResult {
    if trials == 0 {
        return Err("trials must be at least 1".into());
    }
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let list = parse_terms(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let scale = scale.unwrap_or(default_scale(list.opset()));
    let alg = AlgebraStructure::new(scale).map_err(|e| e.to_string())?;
    let (r, field) = match arith {
        Arith::Integer => (verify_identity_integer(&list, &alg, trials, seed, bound), "Z".to_string()),
        Arith::Modular => {
            let fp = Fp::new(prime).map_err(|e| e.to_string())?;
            (verify_identity_modular(&list, &alg, trials, seed, fp), format!("F_{prime}"))
        }
    };
    let r = r.map_err(|e| e.to_string())?;
    if r.holds {
        let n = list.terms.len();
        println!("PASS {n} terms, degree {}, {} trials over {field}, scale {scale}", list.degree, r.trials);
        Ok(ExitCode::SUCCESS)
    } else {
        let w = r.witness.expect("failed run has a witness");
        println!("FAIL at trial {}", w.trial + 1);
        for (i, a) in w.args.iter().enumerate() {
            println!("  {} = {:?}", (b'a' + i as u8) as char, a);
        }
        println!("  value = [{}]", w.value.join(", "));
        Ok(ExitCode::from(1))
    }
}

fn shortest(degree: usize, ops: OpSet, seed: u64, stall: usize, scale: i64, count: usize) -> CliResult {
    let space = MonomialSpace::new(degree, ops).map_err(|e| e.to_string())?;
    let alg = AlgebraStructure::new(scale).map_err(|e| e.to_string())?;
    let basis = shortest_identities(&space, &alg, seed, stall, Delta::default()).map_err(|e| e.to_string())?;
    println!("# {} vectors in the reduced basis", basis.len());
    for (k, v) in basis.iter().take(count).enumerate() {
        let coeffs: Option<Vec<i64>> = v.iter().map(|x| x.to_i64()).collect();
        let coeffs = coeffs.ok_or("coefficient out of 64-bit range")?;
        let poly = Poly::from_dense(&space, &coeffs);
        let rec = IdentityRecord::from_poly(&format!("short{}", k + 1), "lattice", &space, &poly);
        println!("# {}: {} terms, square norm {}", rec.name, rec.terms, poly.square_norm());
        print!("{}", rec.text);
    }
    Ok(ExitCode::SUCCESS)
}
