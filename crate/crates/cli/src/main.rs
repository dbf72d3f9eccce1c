//! Command-line front end over the library: generators, searches,
//! verifiers, and exports, all speaking the line-oriented text formats.
//!
//! Exit codes: 0 success or valid, 1 validation or verification failed,
//! 2 search exhausted with no witness, 3 parse or usage error.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use efl_core::formats::{
    format_assignment, format_decomposition, format_dot, format_factorization, format_p_coloring,
    parse_decomposition, parse_factorization, parse_latin_square, parse_p_coloring, ParseError,
};
use efl_core::*;

#[derive(Parser)]
#[command(
    name = "efl",
    version,
    about = "Complete-graph decompositions, linear factorizations, and part colorings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate input files
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// Parse a file and run its validator
    Check {
        /// File format to check
        #[arg(value_enum)]
        kind: CheckKind,
        file: PathBuf,
    },
    /// Search for an assignment of factors to parts
    Assign {
        /// Decomposition file
        #[arg(long)]
        dec: PathBuf,
        /// Linear factorization file
        #[arg(long)]
        fac: PathBuf,
        /// Assignment file to write
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Search for an assignment and derive a part coloring from it
    Color {
        /// Decomposition file
        #[arg(long)]
        dec: PathBuf,
        /// Linear factorization file
        #[arg(long)]
        fac: PathBuf,
        /// Coloring file to write
        #[arg(long)]
        col: PathBuf,
        /// Assignment file to write
        #[arg(long)]
        asg: PathBuf,
        /// Bijection from factor indices to colors, e.g. "0,2,1" (default identity)
        #[arg(long)]
        labeling: Option<String>,
    },
    /// Check a part coloring against a decomposition
    Verify {
        /// Decomposition file
        #[arg(long)]
        dec: PathBuf,
        /// Coloring file
        #[arg(long)]
        col: PathBuf,
    },
    /// Compute the exact chromatic index and test the bound against the order
    Oracle {
        /// Decomposition file
        #[arg(long)]
        dec: PathBuf,
        /// Refuse decompositions with more parts than this
        #[arg(long, default_value_t = DEFAULT_PART_CAP)]
        cap: usize,
    },
    /// Export to other formats
    Export {
        #[command(subcommand)]
        what: Export,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// Write a decomposition of the complete graph
    Dec {
        #[arg(long, value_enum)]
        kind: DecKind,
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Base triples for cyclic-sts, e.g. "0,1,4;0,2,7"
        #[arg(long)]
        base: Option<String>,
        /// Decomposition file to write
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Write a linear factorization of the complete digraph with loops
    Fac {
        /// Take the factorization rows from this latin square file
        #[arg(long)]
        latin: Option<PathBuf>,
        /// Use the multiplication table of a named group family
        #[arg(long, value_enum)]
        group: Option<GroupKind>,
        /// Search for a difference-complete starter factor and translate it
        #[arg(long)]
        starter_search: bool,
        /// Order, for --group and --starter-search
        #[arg(long)]
        n: Option<usize>,
        /// Cycle vertex sets the starter must realize, e.g. "0,1,3;5,7,12"
        #[arg(long)]
        require: Option<String>,
        /// Factorization file to write
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum Export {
    /// Graphviz picture with one cluster per part, tinted by an optional coloring
    Dot {
        /// Decomposition file
        #[arg(long)]
        dec: PathBuf,
        /// Coloring file; must verify against the decomposition
        #[arg(long)]
        col: Option<PathBuf>,
        /// DOT file to write
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DecKind {
    Single,
    Edges,
    CyclicSts,
    NearPencil,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupKind {
    Zn,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Dec,
    Fac,
    Latin,
}

/// Failure carrying the process exit code and a message for stdout.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn report<V: fmt::Display>(what: &str, report: &Report<V>) -> Self {
        Failure::new(1, format!("{what}:\n{report}"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidDecomposition(r) => Failure::report("invalid decomposition", &r),
            Error::InvalidLatinSquare(r) => Failure::report("invalid latin square", &r),
            Error::InvalidLinearFactor(r) => Failure::report("invalid linear factor", &r),
            Error::InvalidFactorization(r) => Failure::report("invalid linear factorization", &r),
            Error::InvalidAssignment(r) => Failure::report("invalid assignment", &r),
            other => Failure::new(3, other.to_string()),
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(3, format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(3, format!("{}: {e}", path.display())))
}

fn in_file(path: &Path, e: ParseError) -> Failure {
    Failure::new(3, format!("{}: {e}", path.display()))
}

fn load_dec(path: &Path) -> Result<Decomposition, Failure> {
    parse_decomposition(&read_text(path)?).map_err(|e| in_file(path, e))
}

fn load_fac(path: &Path) -> Result<LinearFactorization, Failure> {
    parse_factorization(&read_text(path)?).map_err(|e| in_file(path, e))
}

fn load_col(path: &Path) -> Result<PColoring, Failure> {
    parse_p_coloring(&read_text(path)?).map_err(|e| in_file(path, e))
}

fn parse_usize_list(s: &str, what: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<usize>().map_err(|_| {
                Failure::new(
                    3,
                    format!("bad {what} `{t}`: expected a nonnegative integer"),
                )
            })
        })
        .collect()
}

fn parse_base_blocks(s: &str) -> Result<Vec<[usize; 3]>, Failure> {
    s.split(';')
        .map(|block| {
            let vs = parse_usize_list(block, "base block vertex")?;
            if vs.len() != 3 {
                return Err(Failure::new(
                    3,
                    format!("base block `{block}` must have exactly 3 vertices"),
                ));
            }
            Ok([vs[0], vs[1], vs[2]])
        })
        .collect()
}

fn parse_required_sets(s: &str) -> Result<Vec<Vec<usize>>, Failure> {
    s.split(';')
        .map(|set| parse_usize_list(set, "required cycle vertex"))
        .collect()
}

fn gen_dec(kind: DecKind, n: usize, base: Option<&str>, out: &Path) -> Result<u8, Failure> {
    if base.is_some() && !matches!(kind, DecKind::CyclicSts) {
        return Err(Failure::new(3, "--base only applies to --kind cyclic-sts"));
    }
    let d = match kind {
        DecKind::Single => single_part(n)?,
        DecKind::Edges => edge_decomposition(n)?,
        DecKind::NearPencil => near_pencil(n)?,
        DecKind::CyclicSts => {
            let base =
                base.ok_or_else(|| Failure::new(3, "--base is required for --kind cyclic-sts"))?;
            cyclic_sts(n, &parse_base_blocks(base)?)?
        }
    };
    write_text(out, &format_decomposition(&d))?;
    println!(
        "wrote {} (order {}, {} parts)",
        out.display(),
        d.order(),
        d.parts().len()
    );
    Ok(0)
}

fn gen_fac(
    latin: Option<&Path>,
    group: Option<GroupKind>,
    starter_search: bool,
    n: Option<usize>,
    require: Option<&str>,
    out: &Path,
) -> Result<u8, Failure> {
    let sources =
        usize::from(latin.is_some()) + usize::from(group.is_some()) + usize::from(starter_search);
    if sources != 1 {
        return Err(Failure::new(
            3,
            "choose exactly one source: --latin, --group, or --starter-search",
        ));
    }
    if require.is_some() && !starter_search {
        return Err(Failure::new(
            3,
            "--require only applies to --starter-search",
        ));
    }
    let fz = if let Some(path) = latin {
        if n.is_some() {
            return Err(Failure::new(3, "--n conflicts with --latin"));
        }
        let table = parse_latin_square(&read_text(path)?).map_err(|e| in_file(path, e))?;
        cayley_factorization(&Quasigroup::new(table)?)
    } else if group.is_some() {
        let n = n.ok_or_else(|| Failure::new(3, "--n is required with --group"))?;
        cayley_factorization(&Quasigroup::cyclic(n)?)
    } else {
        let n = n.ok_or_else(|| Failure::new(3, "--n is required with --starter-search"))?;
        let required = match require {
            Some(s) => parse_required_sets(s)?,
            None => Vec::new(),
        };
        match find_starter_factor(n, &required)? {
            None => {
                println!("no starter factor exists");
                return Ok(2);
            }
            Some(starter) => cyclic_factorization_from_starter(&starter)?,
        }
    };
    write_text(out, &format_factorization(&fz))?;
    println!("wrote {} (order {})", out.display(), fz.order());
    Ok(0)
}

fn check(kind: CheckKind, file: &Path) -> Result<u8, Failure> {
    let text = read_text(file)?;
    let (ok, rendered) = match kind {
        CheckKind::Dec => {
            let d = parse_decomposition(&text).map_err(|e| in_file(file, e))?;
            let r = validate_decomposition(&d);
            (r.is_ok(), r.to_string())
        }
        CheckKind::Fac => {
            let fz = parse_factorization(&text).map_err(|e| in_file(file, e))?;
            let r = validate_factorization(&fz);
            (r.is_ok(), r.to_string())
        }
        CheckKind::Latin => {
            let table = parse_latin_square(&text).map_err(|e| in_file(file, e))?;
            let r = validate_latin_square(&table);
            (r.is_ok(), r.to_string())
        }
    };
    println!("{rendered}");
    Ok(if ok { 0 } else { 1 })
}

fn assign(dec: &Path, fac: &Path, out: &Path) -> Result<u8, Failure> {
    let d = load_dec(dec)?;
    let fz = load_fac(fac)?;
    match find_assignment(&d, &fz)? {
        None => {
            println!("no assignment exists");
            Ok(2)
        }
        Some(h) => {
            write_text(out, &format_assignment(&h))?;
            println!("wrote {} ({} parts)", out.display(), h.part_count());
            Ok(0)
        }
    }
}

fn color(
    dec: &Path,
    fac: &Path,
    col: &Path,
    asg: &Path,
    labeling: Option<&str>,
) -> Result<u8, Failure> {
    let d = load_dec(dec)?;
    let fz = load_fac(fac)?;
    match find_assignment(&d, &fz)? {
        None => {
            println!("no assignment exists");
            Ok(2)
        }
        Some(h) => {
            let labeling = match labeling {
                Some(s) => ColorLabeling::new(parse_usize_list(s, "labeling entry")?)?,
                None => ColorLabeling::identity(fz.order()),
            };
            let coloring = coloring_from_assignment(&d, &fz, &h, &labeling)?;
            write_text(asg, &format_assignment(&h))?;
            write_text(col, &format_p_coloring(&coloring))?;
            println!("wrote {}", asg.display());
            println!("wrote {}", col.display());
            println!("k {}", coloring.num_colors());
            Ok(0)
        }
    }
}

fn verify(dec: &Path, col: &Path) -> Result<u8, Failure> {
    let d = load_dec(dec)?;
    let coloring = load_col(col)?;
    let r = verify_p_coloring(&d, &coloring);
    println!("{r}");
    Ok(if r.is_ok() { 0 } else { 1 })
}

fn oracle(dec: &Path, cap: usize) -> Result<u8, Failure> {
    let d = load_dec(dec)?;
    let report = verify_efl_bound(&d, cap)?;
    println!("chi_prime {}", report.chi_prime);
    println!("efl_bound {}", if report.holds { "holds" } else { "fails" });
    Ok(if report.holds { 0 } else { 1 })
}

fn export_dot(dec: &Path, col: Option<&Path>, out: &Path) -> Result<u8, Failure> {
    let d = load_dec(dec)?;
    let coloring = col.map(load_col).transpose()?;
    if let Some(c) = &coloring {
        let r = verify_p_coloring(&d, c);
        if !r.is_ok() {
            println!("coloring does not verify:\n{r}");
            return Ok(1);
        }
    }
    write_text(out, &format_dot(&d, coloring.as_ref()))?;
    println!("wrote {}", out.display());
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Gen { what } => match what {
            Gen::Dec { kind, n, base, out } => gen_dec(kind, n, base.as_deref(), &out),
            Gen::Fac {
                latin,
                group,
                starter_search,
                n,
                require,
                out,
            } => gen_fac(
                latin.as_deref(),
                group,
                starter_search,
                n,
                require.as_deref(),
                &out,
            ),
        },
        Command::Check { kind, file } => check(kind, &file),
        Command::Assign { dec, fac, out } => assign(&dec, &fac, &out),
        Command::Color {
            dec,
            fac,
            col,
            asg,
            labeling,
        } => color(&dec, &fac, &col, &asg, labeling.as_deref()),
        Command::Verify { dec, col } => verify(&dec, &col),
        Command::Oracle { dec, cap } => oracle(&dec, cap),
        Command::Export { what } => match what {
            Export::Dot { dec, col, out } => export_dot(&dec, col.as_deref(), &out),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            println!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
