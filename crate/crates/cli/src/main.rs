//! `nleib`: analyze Leibniz n-algebras and check the Pascal-triangle
//! identities from the command line.
//!
//! Exit codes: 0 on success, 1 when a check fails or the input is
//! mathematically invalid, 2 on usage errors.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

use leibniz_core::bounds::{
    best_bounds, relative_constraints, AlgebraParams, RelativeExtras, RelativeId,
};
use leibniz_core::combinatorics::{
    decomposition_table, identity_sweep, rhombus_sum, sequences, SequenceKind,
};
use leibniz_core::identity::{check_fundamental_identity, IdentityOptions};
use leibniz_core::io::report::{bounds_json, bounds_text};
use leibniz_core::io::{analyze, builtin, parse_algebra, render_report, AnalyzeOptions, Format};
use leibniz_core::par::Execution;
use leibniz_core::{bounds::binom, Error, StructureConstants};

#[derive(Parser)]
#[command(name = "nleib", version, about = "Leibniz n-algebra analysis")]
struct Cli {
    /// Run everything on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the fundamental identity on every basis tuple.
    Verify {
        /// Algebra file, or `-` for stdin.
        file: PathBuf,
        /// Stop after this many violations.
        #[arg(long)]
        max_violations: Option<usize>,
        /// Run even above the tuple limit.
        #[arg(long)]
        force: bool,
    },
    /// Identity check, series, classification and bounds.
    Analyze {
        file: PathBuf,
        #[arg(long, default_value = "text", value_parser = parse_format)]
        format: Format,
        /// Report bounds without checking the identity. They are meaningless
        /// if it fails.
        #[arg(long)]
        skip_identity: bool,
        #[arg(long)]
        force: bool,
    },
    /// Bound catalog from parameters alone.
    Bounds(BoundsArgs),
    /// Sweep the Pascal-triangle identity in closed form and by enumeration.
    Identity {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        oracle_max_n: usize,
    },
    /// Rhombus sum of Pascal's triangle against C(2n,n) - 1.
    Rhombus {
        #[arg(long)]
        n: usize,
    },
    /// C(2n,n) as a combination of figurate numbers P^(r)_k.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// central_binomial or central_binomial_minus_one.
    Sequence {
        kind: String,
        #[arg(long)]
        count: usize,
    },
    /// Emit a built-in algebra: ex3_3:<m>, ex3_18, ex3_20, zero:<n>:<m>,
    /// filippov:<n>.
    Example {
        name: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    class: Option<usize>,
    #[arg(long)]
    lie_filiform: bool,
    #[arg(long)]
    maximal_class: bool,
    #[arg(long)]
    abelian: bool,
    #[arg(long)]
    m_central: Option<usize>,
    /// `J=DIM`: dim q^J_Lie, repeatable.
    #[arg(long = "qj-dim", value_parser = parse_qj)]
    qj_dims: Vec<(usize, usize)>,
    /// `DIM,CAP`: dim I and dim(I ∩ q²_Lie) for a central ideal I.
    #[arg(long, value_parser = parse_central)]
    central_ideal: Option<(usize, usize)>,
    /// Fail if this relative constraint lacks its inputs, repeatable.
    #[arg(long = "require")]
    require: Vec<String>,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_pair(s: &str, sep: char) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(sep)
        .ok_or_else(|| format!("expected two integers separated by `{sep}`"))?;
    let a = a
        .trim()
        .parse()
        .map_err(|_| format!("`{a}` is not an integer"))?;
    let b = b
        .trim()
        .parse()
        .map_err(|_| format!("`{b}` is not an integer"))?;
    Ok((a, b))
}

fn parse_qj(s: &str) -> Result<(usize, usize), String> {
    parse_pair(s, '=')
}

fn parse_central(s: &str) -> Result<(usize, usize), String> {
    parse_pair(s, ',')
}

/// Domain failure: a message for stderr and exit code 1.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn read_algebra(path: &PathBuf) -> Result<StructureConstants, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?
    };
    Ok(parse_algebra(&text)?)
}

fn one_based(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
    format!("({})", parts.join(", "))
}

fn verify(exec: Execution, file: &PathBuf, max: Option<usize>, force: bool) -> Outcome {
    let sc = read_algebra(file)?;
    let r = check_fundamental_identity(
        &sc,
        &IdentityOptions {
            max_violations: max,
            force,
            exec,
            ..Default::default()
        },
    )?;
    if r.is_ok() {
        println!("identity: ok ({} tuples checked)", r.tuples_checked);
        return Ok(true);
    }
    println!(
        "identity: violated ({} violations in {} of {} tuples)",
        r.violations.len(),
        r.tuples_checked,
        r.total_tuples
    );
    for v in &r.violations {
        println!(
            "  x = {}, y = {}: defect {}",
            one_based(&v.x_tuple),
            one_based(&v.y_tuple),
            v.defect
        );
    }
    Ok(false)
}

fn bounds(a: &BoundsArgs) -> Outcome {
    let mut p = AlgebraParams::new(a.n, a.m, a.d)?;
    if let Some(c) = a.class {
        p = p.with_class(c)?;
    }
    if a.lie_filiform {
        p = p.lie_filiform()?;
    }
    if a.maximal_class {
        p = p.maximal_class()?;
    }
    if a.abelian {
        p = p.abelian()?;
    }
    if let Some(mc) = a.m_central {
        p = p.with_m_central(mc)?;
    }
    let requested = a
        .require
        .iter()
        .map(|s| s.parse::<RelativeId>())
        .collect::<Result<Vec<_>, _>>()?;
    let extras = RelativeExtras {
        qj_dims: a.qj_dims.clone(),
        central_ideal: a.central_ideal,
    };
    let report = best_bounds(&p);
    let relative = relative_constraints(&p, &extras, &requested)?;
    match a.format {
        Format::Text => print!("{}", bounds_text(&report, &relative)),
        Format::Json => println!("{:#}", bounds_json(&report, &relative)),
    }
    Ok(true)
}

fn identity(exec: Execution, max_n: usize, oracle_max_n: usize) -> Outcome {
    if max_n < 2 {
        return Err(Failure("--max-n must be at least 2".into()));
    }
    let sweep = identity_sweep(max_n, oracle_max_n, exec)?;
    for (n, r, c) in &sweep.closed_form {
        let mark = if c.equal { "ok" } else { "FAIL" };
        println!("closed n={n} r={r}: {} = {} {mark}", c.lhs, c.rhs);
    }
    for (n, r, classes) in &sweep.classes {
        let total: u64 = classes.iter().map(|c| c.enumerated).sum();
        let bad: Vec<usize> = classes
            .iter()
            .filter(|c| !c.matches())
            .map(|c| c.i)
            .collect();
        if bad.is_empty() {
            println!(
                "oracle n={n} r={r}: {} classes, {total} sequences ok",
                classes.len()
            );
        } else {
            println!("oracle n={n} r={r}: classes {bad:?} FAIL");
        }
    }
    let ok = sweep.all_ok();
    println!("identity sweep: {}", if ok { "ok" } else { "FAIL" });
    Ok(ok)
}

fn rhombus(n: usize) -> Outcome {
    let sum = rhombus_sum(n)?;
    let expected = binom(2 * n as i64, n as i64) - 1;
    let ok = sum == expected;
    println!("{sum}");
    println!(
        "C(2n,n) - 1 = {expected}: {}",
        if ok { "ok" } else { "FAIL" }
    );
    Ok(ok)
}

fn decompose(n: usize, r: usize) -> Outcome {
    let rows = decomposition_table(n, r)?;
    println!("i\tcoefficient\tterm\tvalue\tproduct");
    for row in &rows {
        println!(
            "{}\t{}\tP^({r})_{}\t{}\t{}",
            row.i, row.coefficient, row.term_index, row.term, row.product
        );
    }
    let total: BigInt = rows.iter().map(|row| &row.product).sum();
    let ok = total == binom(2 * n as i64, n as i64);
    println!(
        "total: {total} = C(2n,n): {}",
        if ok { "ok" } else { "FAIL" }
    );
    Ok(ok)
}

fn run(cli: Cli) -> Outcome {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match cli.command {
        Command::Verify {
            file,
            max_violations,
            force,
        } => verify(exec, &file, max_violations, force),
        Command::Analyze {
            file,
            format,
            skip_identity,
            force,
        } => {
            let sc = read_algebra(&file)?;
            let report = analyze(
                &sc,
                &AnalyzeOptions {
                    skip_identity,
                    force,
                    exec,
                },
            )?;
            print!("{}", render_report(&report, format));
            Ok(!report.identity.is_violated())
        }
        Command::Bounds(a) => bounds(&a),
        Command::Identity {
            max_n,
            oracle_max_n,
        } => identity(exec, max_n, oracle_max_n),
        Command::Rhombus { n } => rhombus(n),
        Command::Decompose { n, r } => decompose(n, r),
        Command::Sequence { kind, count } => {
            let kind: SequenceKind = kind.parse()?;
            if count == 0 {
                return Err(Failure("--count must be at least 1".into()));
            }
            let terms: Vec<String> = sequences(kind, count)
                .iter()
                .map(|t| t.to_string())
                .collect();
            println!("{}", terms.join(", "));
            Ok(true)
        }
        Command::Example { name, output } => {
            let text = builtin(&name)?;
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
