use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use paritydeg::degree::{
    degree_perturbed, degree_regular_report, degree_via_chi_report, ls_degree_linear_report,
    AdmissibleTern, BoxDomain, PolynomialMap, SignedZero, ZeroLocation,
};
use paritydeg::format::{Problem, ProblemFile};
use paritydeg::linalg::{format_rational, parse_rational, to_f64, RootLocation};
use paritydeg::multiplicity::{chi_det, chi_smith, chi_transversal, is_k_transversal, Chi};
use paritydeg::orientation::ls_orientation;
use paritydeg::parity::{homotopy_parity_check, parity_local, parity_with_spectrum};
use paritydeg::random::CoefficientBounds;
use paritydeg::verify::{run_with, Campaign, CheckName};
use paritydeg::{AdmissiblePath, Error, Interval, Rational};

const EXIT_USAGE: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_CHECK: u8 = 3;

#[derive(Parser)]
#[command(
    name = "paritydeg",
    version,
    about = "Exact multiplicity, parity, orientation and degree computations"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Show rationals as decimal approximations (display only).
    #[arg(long, global = true)]
    decimal: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generalized algebraic multiplicity of a matrix path at a point.
    Chi {
        file: PathBuf,
        /// The point λ0, as "p/q".
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value_t = ChiMethod::All)]
        method: ChiMethod,
    },
    /// Parity of a matrix path on [a, b], or locally at a point.
    Parity {
        file: PathBuf,
        /// Interval ends; default to the interval stored in the file.
        #[arg(allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(allow_hyphen_values = true)]
        b: Option<String>,
        /// Local parity at this point instead of an interval.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a", "b"])]
        local: Option<String>,
    },
    /// Degree of an admissible tern (or of a linear operator).
    Degree {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = DegreeMethod::Regular)]
        method: DegreeMethod,
        /// Seed for the regular-value perturbation.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a randomized verification campaign.
    Verify {
        /// A campaign file; flags are ignored when given.
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of instances per check.
        #[arg(long, default_value_t = 50)]
        n: usize,
        /// Index of the first instance.
        #[arg(long, default_value_t = 0)]
        offset: usize,
        /// Dimension range "lo..hi" (or a single value).
        #[arg(long, default_value = "1..3")]
        dims: String,
        /// Path-degree range "lo..hi" (or a single value).
        #[arg(long, default_value = "1..2")]
        degrees: String,
        /// Comma-separated check names, or "all".
        #[arg(long, default_value = "all")]
        checks: String,
        /// Coefficient bounds "numerator/denominator".
        #[arg(long)]
        bounds: Option<String>,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall-clock timing in the report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChiMethod {
    Det,
    Smith,
    Transversal,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DegreeMethod {
    Regular,
    Chi,
    Perturbed,
    Ls,
}

/// A failed command with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_) => EXIT_USAGE,
            Error::Disagreement { .. } => EXIT_CHECK,
            _ => EXIT_PRECONDITION,
        };
        let message = match &e {
            Error::IrregularZero { .. } => format!("{e} (try --method perturbed)"),
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

struct Out {
    json: bool,
    decimal: bool,
}

impl Out {
    fn q(&self, r: &Rational) -> String {
        if self.decimal {
            format!("{}", to_f64(r))
        } else {
            format_rational(r)
        }
    }

    fn root(&self, r: &RootLocation) -> String {
        match r {
            RootLocation::Exact(x) => self.q(x),
            RootLocation::Isolated { lo, hi } => {
                if self.decimal {
                    format!("~{}", r.approx())
                } else {
                    format!(
                        "~{} in ({}, {})",
                        r.approx(),
                        format_rational(lo),
                        format_rational(hi)
                    )
                }
            }
        }
    }

    fn zero(&self, z: &ZeroLocation) -> String {
        match z {
            ZeroLocation::Exact(x) if self.decimal => {
                let parts: Vec<String> = x.iter().map(|v| self.q(v)).collect();
                format!("({})", parts.join(", "))
            }
            _ => z.to_string(),
        }
    }

    fn emit(&self, text: String, value: Value) {
        if self.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("json values serialize")
            );
        } else {
            print!("{text}");
        }
    }
}

fn read_problem(path: &Path) -> Result<ProblemFile, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(ProblemFile::parse(&text)?)
}

fn parse_q(s: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(|e| usage(format!("bad rational {s:?}: {e}")))
}

fn chi_json(c: Chi) -> Value {
    match c {
        Chi::Finite(k) => json!(k),
        Chi::Infinite => json!("INFINITE"),
    }
}

fn cmd_chi(out: &Out, file: &Path, at: &str, method: ChiMethod) -> CmdResult {
    let problem = read_problem(file)?;
    let Problem::MatrixPath(spec) = &problem.problem else {
        return Err(usage(format!(
            "chi needs a matrix_path file, found {}",
            problem.kind()
        )));
    };
    let path = spec.path()?;
    let lambda0 = parse_q(at)?;
    let by_det = chi_det(&path, &lambda0);
    let mut text = String::new();
    let mut value = json!({"at": format_rational(&lambda0)});

    let smith = || -> Result<Option<paritydeg::multiplicity::MultiplicityResult>, Failure> {
        match chi_smith(&path, &lambda0) {
            Ok(r) => Ok(Some(r)),
            Err(Error::IdenticallySingular) => Ok(None),
            Err(e) => Err(e.into()),
        }
    };
    let smith_detail = |r: &paritydeg::multiplicity::MultiplicityResult| {
        let pm: Vec<String> = r
            .partial_multiplicities
            .iter()
            .map(|d| d.to_string())
            .collect();
        format!(
            "partial multiplicities: [{}], order k={}\n",
            pm.join(", "),
            r.order_k
        )
    };

    match method {
        ChiMethod::Det => {
            text.push_str(&format!("chi={by_det}\n"));
            value["chi"] = chi_json(by_det);
        }
        ChiMethod::Smith => {
            let r = smith()?;
            let chi = r.as_ref().map_or(Chi::Infinite, |r| r.chi);
            text.push_str(&format!("chi={chi}\n"));
            value["chi"] = chi_json(chi);
            if let Some(r) = &r {
                text.push_str(&smith_detail(r));
                value["partial_multiplicities"] = json!(r.partial_multiplicities);
                value["order_k"] = json!(r.order_k);
            }
        }
        ChiMethod::Transversal => {
            let t = chi_transversal(&path, &lambda0)?;
            let k = is_k_transversal(&path, &lambda0).map(|t| t.k);
            text.push_str(&format!("chi={t}\n"));
            if let Some(k) = k {
                text.push_str(&format!("transversal k={k}\n"));
            }
            value["chi"] = json!(t);
            value["transversal_k"] = json!(k);
        }
        ChiMethod::All => {
            let r = smith()?;
            let by_smith = r.as_ref().map_or(Chi::Infinite, |r| r.chi);
            let transversal = match by_det {
                Chi::Infinite => None,
                Chi::Finite(_) => match is_k_transversal(&path, &lambda0) {
                    Some(t) => Some((chi_transversal(&path, &lambda0)?, t.k)),
                    None => None,
                },
            };
            let agree =
                by_smith == by_det && transversal.is_none_or(|(c, _)| Chi::Finite(c) == by_det);
            text.push_str(&format!(
                "chi={by_det}, {}\n",
                if agree { "agree" } else { "DISAGREE" }
            ));
            text.push_str(&format!("det order: {by_det}\n"));
            text.push_str(&format!("smith: {by_smith}\n"));
            if let Some(r) = &r {
                text.push_str(&smith_detail(r));
            }
            match transversal {
                Some((c, k)) => text.push_str(&format!("transversal: {c} (k={k})\n")),
                None => text.push_str("transversal: not applicable\n"),
            }
            value["chi"] = chi_json(by_det);
            value["agree"] = json!(agree);
            value["methods"] = json!({
                "det": chi_json(by_det),
                "smith": chi_json(by_smith),
                "transversal": transversal.map(|(c, _)| c),
            });
            if let Some(r) = &r {
                value["partial_multiplicities"] = json!(r.partial_multiplicities);
            }
            value["transversal_k"] = json!(transversal.map(|(_, k)| k));
            out.emit(text, value);
            return Ok(if agree { 0 } else { EXIT_CHECK });
        }
    }
    out.emit(text, value);
    Ok(0)
}

fn cmd_parity(
    out: &Out,
    file: &Path,
    a: Option<&str>,
    b: Option<&str>,
    local: Option<&str>,
) -> CmdResult {
    let problem = read_problem(file)?;
    match &problem.problem {
        Problem::MatrixPath(spec) => {
            let path = spec.path()?;
            if let Some(l) = local {
                let lambda0 = parse_q(l)?;
                let lp = parity_local(&path, &lambda0)?;
                let text = format!(
                    "sigma={}\nlocal at {} with chi={} on window [{}, {}]\n",
                    lp.value,
                    out.q(&lambda0),
                    lp.chi,
                    out.q(lp.window.a()),
                    out.q(lp.window.b())
                );
                let value = json!({
                    "sigma": lp.value,
                    "at": format_rational(&lambda0),
                    "chi": lp.chi,
                    "window": [format_rational(lp.window.a()), format_rational(lp.window.b())],
                });
                out.emit(text, value);
                return Ok(0);
            }
            let interval = match (a, b) {
                (Some(a), Some(b)) => Interval::new(parse_q(a)?, parse_q(b)?)?,
                (None, None) => spec
                    .interval()?
                    .ok_or_else(|| usage("no interval: pass a and b or store one in the file"))?,
                _ => return Err(usage("pass both interval ends")),
            };
            for end in [interval.a(), interval.b()] {
                let det = path.det_at(end);
                if det == Rational::from_integer(0.into()) {
                    return Err(Failure {
                        code: EXIT_PRECONDITION,
                        message: format!(
                            "path is not admissible: det L({}) = 0",
                            format_rational(end)
                        ),
                    });
                }
            }
            let ap = AdmissiblePath::new(path, interval.clone())?;
            let (sigma, spectrum) = parity_with_spectrum(&ap)?;
            let mut text = format!(
                "sigma={sigma}\ninterval [{}, {}]\n",
                out.q(interval.a()),
                out.q(interval.b())
            );
            let mut eigen = Vec::new();
            if spectrum.is_empty() {
                text.push_str("spectrum: empty\n");
            } else {
                text.push_str("spectrum:\n");
            }
            for ev in &spectrum.eigenvalues {
                let chi = ev.result.chi;
                text.push_str(&format!("  lambda={} chi={chi}\n", out.root(&ev.location)));
                eigen.push(json!({
                    "lower": format_rational(ev.location.lower()),
                    "upper": format_rational(ev.location.upper()),
                    "exact": ev.location.exact().is_some(),
                    "chi": chi_json(chi),
                }));
            }
            text.push_str(&format!("total chi={}\n", spectrum.total_chi()));
            let value = json!({
                "sigma": sigma,
                "interval": [format_rational(interval.a()), format_rational(interval.b())],
                "spectrum": eigen,
                "total_chi": spectrum.total_chi(),
            });
            out.emit(text, value);
            Ok(0)
        }
        Problem::Homotopy(spec) => {
            if local.is_some() || a.is_some() {
                return Err(usage("homotopy files carry their own interval"));
            }
            let (h, interval) = spec.homotopy()?;
            let (s0, s1) = homotopy_parity_check(&h, &interval)?;
            let agree = s0 == s1;
            let text = format!(
                "sigma(H(0))={s0}, sigma(H(1))={s1}, {}\n",
                if agree { "agree" } else { "DISAGREE" }
            );
            out.emit(
                text,
                json!({"sigma_start": s0, "sigma_end": s1, "agree": agree}),
            );
            Ok(if agree { 0 } else { EXIT_CHECK })
        }
        _ => Err(usage(format!(
            "parity needs a matrix_path or homotopy file, found {}",
            problem.kind()
        ))),
    }
}

fn load_tern(problem: &ProblemFile) -> Result<AdmissibleTern, Failure> {
    match &problem.problem {
        Problem::Tern(spec) => Ok(spec.tern()?),
        Problem::LinearOperator(spec) => {
            let (m, omega) = spec.operator()?;
            let n = m.rows();
            Ok(AdmissibleTern::new(
                PolynomialMap::linear(&m)?,
                omega,
                ls_orientation(n),
            )?)
        }
        _ => Err(usage(format!(
            "degree needs a tern or linear_operator file, found {}",
            problem.kind()
        ))),
    }
}

fn zeros_text(out: &Out, zeros: &[SignedZero]) -> (String, Value) {
    let mut text = String::new();
    if zeros.is_empty() {
        text.push_str("zeros: none\n");
    } else {
        text.push_str("zeros:\n");
    }
    let mut list = Vec::new();
    for z in zeros {
        text.push_str(&format!(
            "  {} eps={}\n",
            out.zero(&z.zero.location),
            z.epsilon
        ));
        list.push(json!({"zero": z.zero.location.to_string(), "epsilon": z.epsilon}));
    }
    (text, Value::Array(list))
}

fn domain_text(out: &Out, d: &BoxDomain) -> String {
    let sides: Vec<String> = d
        .sides()
        .iter()
        .map(|s| format!("({}, {})", out.q(s.a()), out.q(s.b())))
        .collect();
    sides.join(" x ")
}

fn cmd_degree(out: &Out, file: &Path, method: DegreeMethod, seed: u64) -> CmdResult {
    let problem = read_problem(file)?;
    if method == DegreeMethod::Ls {
        let Problem::LinearOperator(spec) = &problem.problem else {
            return Err(usage(format!(
                "--method ls needs a linear_operator file, found {}",
                problem.kind()
            )));
        };
        let (m, omega) = spec.operator()?;
        let r = ls_degree_linear_report(&m, &omega)?;
        let mut text = format!("degree={}\n", r.degree);
        let mut eig = Vec::new();
        if !r.eigenvalues.is_empty() {
            text.push_str("eigenvalues of I - L above 1:\n");
        }
        for (loc, malg) in &r.eigenvalues {
            text.push_str(&format!("  mu={} malg={malg}\n", out.root(loc)));
            eig.push(json!({"lower": format_rational(loc.lower()), "upper": format_rational(loc.upper()), "malg": malg}));
        }
        out.emit(
            text,
            json!({"degree": r.degree, "method": "ls", "eigenvalues": eig}),
        );
        return Ok(0);
    }

    let tern = load_tern(&problem)?;
    if tern.orientation().is_trivial() {
        eprintln!("warning: the orientation is trivial; the degree is 0 unless the map has zeros");
    }
    let header = format!(
        "map {} on {}\n",
        tern.map(),
        domain_text(out, tern.domain())
    );
    match method {
        DegreeMethod::Regular => {
            let r = degree_regular_report(&tern)?;
            let (zt, zv) = zeros_text(out, &r.zeros);
            let text = format!("degree={}\n{header}{zt}", r.degree);
            out.emit(
                text,
                json!({"degree": r.degree, "method": "regular", "zeros": zv}),
            );
        }
        DegreeMethod::Chi => {
            let r = degree_via_chi_report(&tern, None)?;
            let mut text = format!("degree={}\n{header}", r.degree);
            if let (Some(l), Some(s)) = (&r.reference, r.reference_sign) {
                text.push_str(&format!("reference L={l:?} eps(L)={s}\n"));
            }
            text.push_str("connecting paths are straight segments from Df(x) to L\n");
            let mut zs = Vec::new();
            for z in &r.zeros {
                text.push_str(&format!(
                    "  zero {}: chi sum={} parity={}\n",
                    out.zero(&z.zero.location),
                    z.chi_sum,
                    z.parity
                ));
                zs.push(json!({"zero": z.zero.location.to_string(), "chi_sum": z.chi_sum, "parity": z.parity}));
            }
            let sign = r.reference_sign;
            out.emit(
                text,
                json!({"degree": r.degree, "method": "chi", "reference_sign": sign, "zeros": zs}),
            );
        }
        DegreeMethod::Perturbed => {
            let r = degree_perturbed(tern.map(), tern.domain(), tern.orientation(), seed)?;
            let mut text = format!(
                "degree={}\n{header}margin={} radius={}\n",
                r.degree,
                out.q(&r.margin),
                out.q(&r.radius)
            );
            let mut samples = Vec::new();
            for s in &r.samples {
                let x0: Vec<String> = s.x0.iter().map(|v| out.q(v)).collect();
                text.push_str(&format!(
                    "sample x0=({}) degree={}\n",
                    x0.join(", "),
                    s.degree
                ));
                let (zt, zv) = zeros_text(out, &s.zeros);
                text.push_str(&zt);
                samples.push(json!({
                    "x0": s.x0.iter().map(format_rational).collect::<Vec<_>>(),
                    "degree": s.degree,
                    "zeros": zv,
                }));
            }
            text.push_str(&format!("rejected samples: {}\n", r.rejected));
            out.emit(
                text,
                json!({"degree": r.degree, "method": "perturbed", "margin": format_rational(&r.margin),
                       "samples": samples, "rejected": r.rejected}),
            );
        }
        DegreeMethod::Ls => unreachable!(),
    }
    Ok(0)
}

fn parse_range(s: &str, what: &str) -> Result<[usize; 2], Failure> {
    let bad = || usage(format!("bad {what} range {s:?}: expected lo..hi"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    Ok([
        lo.trim().parse().map_err(|_| bad())?,
        hi.trim().parse().map_err(|_| bad())?,
    ])
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    out: &Out,
    file: Option<&Path>,
    seed: u64,
    n: usize,
    offset: usize,
    dims: &str,
    degrees: &str,
    checks: &str,
    bounds: Option<&str>,
    out_file: Option<&Path>,
    timing: bool,
) -> CmdResult {
    let campaign = match file {
        Some(f) => {
            let problem = read_problem(f)?;
            let Problem::Campaign(c) = problem.problem else {
                return Err(usage(format!(
                    "verify needs a campaign file, found {}",
                    problem.kind()
                )));
            };
            c
        }
        None => {
            let mut c = Campaign::new(seed, n, CheckName::parse_list(checks)?);
            c.offset = offset;
            c.dims = parse_range(dims, "dimension")?;
            c.degrees = parse_range(degrees, "degree")?;
            if let Some(b) = bounds {
                let (p, q) = b
                    .split_once('/')
                    .ok_or_else(|| usage("bounds must be numerator/denominator"))?;
                c.bounds = CoefficientBounds {
                    numerator: p
                        .trim()
                        .parse()
                        .map_err(|_| usage("bad bounds numerator"))?,
                    denominator: q
                        .trim()
                        .parse()
                        .map_err(|_| usage("bad bounds denominator"))?,
                };
            }
            c
        }
    };
    let report = run_with(&campaign, timing)?;
    let json = report.to_json();
    if let Some(path) = out_file {
        fs::write(path, format!("{json}\n"))
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    if out.json {
        println!("{json}");
    } else {
        print!("{}", report.to_text());
    }
    Ok(if report.all_passed() { 0 } else { EXIT_CHECK })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = Out {
        json: cli.json,
        decimal: cli.decimal,
    };
    let result = match &cli.command {
        Command::Chi { file, at, method } => cmd_chi(&out, file, at, *method),
        Command::Parity { file, a, b, local } => {
            cmd_parity(&out, file, a.as_deref(), b.as_deref(), local.as_deref())
        }
        Command::Degree { file, method, seed } => cmd_degree(&out, file, *method, *seed),
        Command::Verify {
            file,
            seed,
            n,
            offset,
            dims,
            degrees,
            checks,
            bounds,
            out: out_file,
            timing,
        } => cmd_verify(
            &out,
            file.as_deref(),
            *seed,
            *n,
            *offset,
            dims,
            degrees,
            checks,
            bounds.as_deref(),
            out_file.as_deref(),
            *timing,
        ),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
