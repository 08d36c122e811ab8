use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lascoux_core::verify::{self, Suite, VerifyBounds};
use lascoux_core::{
    cell_constraints, character_of_points, closure_patterns, enumerate_all, enumerate_efficient,
    enumerate_enhancements, enumerate_gz_patterns, enumerate_reduced_faces, enumerate_tracks,
    grothendieck_via_patterns, key_polynomial, lascoux_via_cells, lascoux_w_lambda, patterns_for_perm,
    point_to_pattern, BetaPolynomial, EnhancedPattern, Error, GZPattern, Partition, Permutation, RationalPoint,
    Word,
};

#[derive(Parser)]
#[command(name = "lascoux", version, about = "Lascoux, key, Grothendieck and Schur polynomials via operators or Gelfand-Zetlin cells")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Lascoux,
    Key,
    Grothendieck,
    Schur,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Operator,
    Cells,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum What {
    Patterns,
    Faces,
    Cells,
    Tracks,
}

#[derive(Args)]
struct Shape {
    /// Number of variables; `--lambda` is padded with zeros up to it.
    #[arg(long)]
    n: Option<usize>,
    /// Partition, e.g. `3,2,0`.
    #[arg(long)]
    lambda: Option<String>,
    /// Permutation in one-line notation (`213`, `2,1,3`) or a word (`s1 s2`).
    #[arg(long)]
    perm: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a polynomial.
    Compute {
        #[arg(long, value_enum, default_value_t = Kind::Lascoux)]
        kind: Kind,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_enum, default_value_t = Method::Operator)]
        method: Method,
        /// Substitute this integer for β.
        #[arg(long, allow_hyphen_values = true)]
        beta_spec: Option<i64>,
    },
    /// List enhanced patterns, dual Kogan faces, cells or tracks.
    Enumerate {
        #[arg(value_enum)]
        what: What,
        #[command(flatten)]
        shape: Shape,
        /// Base pattern rows from the top, e.g. `0,1,2;1,2;2`; patterns only.
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        efficient_only: bool,
    },
    /// Find the cell containing a point of the polytope.
    Locate {
        #[command(flatten)]
        shape: Shape,
        /// Free rows below the top, entries `p/q` separated by `,`, rows by `;`.
        #[arg(long)]
        point: String,
        /// Also list every cell whose closure contains the point.
        #[arg(long)]
        closure: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_part: u32,
        #[arg(long, default_value_t = 2)]
        denominator: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Exit status 1 carries a message; 2 is a usage error.
enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::PointOutside => Failure::Check(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Out = Result<(Value, String, bool), Failure>;

fn partition(shape: &Shape) -> Result<Partition, Failure> {
    let text = shape.lambda.as_deref().ok_or_else(|| Failure::Usage("--lambda is required".into()))?;
    let mut parts: Vec<u32> = text
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("bad partition {text:?}")))?;
    if let Some(n) = shape.n {
        if parts.len() > n {
            return Err(Failure::Usage(format!("partition {text:?} has more than {n} parts")));
        }
        parts.resize(n, 0);
    }
    Ok(Partition::new(parts)?)
}

fn permutation(text: &str, n: usize) -> Result<Permutation, Failure> {
    let w = if text.contains('s') {
        text.parse::<Word>()?.product(n)?
    } else {
        text.parse::<Permutation>()?
    };
    if w.n() != n {
        return Err(Failure::Usage(format!("permutation {text:?} is not in S_{n}")));
    }
    Ok(w)
}

fn poly_out(p: BetaPolynomial, beta: Option<i64>) -> (Value, String) {
    let p = match beta {
        Some(b) => p.specialize_beta(&b.into()),
        None => p,
    };
    (json!({ "polynomial": p.to_json(), "terms": p.len() }), p.to_string())
}

fn compute(kind: Kind, shape: &Shape, method: Method, beta: Option<i64>) -> Out {
    let lambda = partition(shape)?;
    let n = lambda.n();
    let w = match (&shape.perm, kind) {
        (Some(t), Kind::Lascoux | Kind::Key) => permutation(t, n)?,
        (None, Kind::Lascoux | Kind::Key) => return Err(Failure::Usage("--perm is required".into())),
        _ => Permutation::longest(n),
    };
    let zero = 0.into();
    let p = match (kind, method) {
        (Kind::Lascoux, Method::Operator) => lascoux_w_lambda(&w, &lambda)?,
        (Kind::Lascoux, Method::Cells) => lascoux_via_cells(&w, &lambda)?,
        (Kind::Key, Method::Operator) => lascoux_w_lambda(&w, &lambda)?.specialize_beta(&zero),
        (Kind::Key, Method::Cells) => {
            let faces = key_polynomial(&w, &lambda)?;
            let cells = lascoux_via_cells(&w, &lambda)?.specialize_beta(&zero);
            if faces != cells {
                return Err(Failure::Check(format!("face sum {faces} differs from cells at β=0 {cells}")));
            }
            faces
        }
        (Kind::Grothendieck, Method::Operator) => lascoux_w_lambda(&w, &lambda)?,
        (Kind::Grothendieck, Method::Cells) => grothendieck_via_patterns(&lambda),
        (Kind::Schur, Method::Operator) => lascoux_w_lambda(&w, &lambda)?.specialize_beta(&zero),
        (Kind::Schur, Method::Cells) => character_of_points(&lambda, &enumerate_gz_patterns(&lambda)),
    };
    let (v, t) = poly_out(p, beta);
    Ok((v, t, true))
}

fn parse_base(text: &str) -> Result<GZPattern, Failure> {
    let rows: Vec<Vec<i64>> = text
        .split(';')
        .map(|r| r.split(',').map(|t| t.trim().parse()).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Usage(format!("bad base pattern {text:?}")))?;
    Ok(GZPattern::new(rows)?)
}

fn records<T>(items: &[T], json: impl Fn(&T) -> Value, text: impl Fn(&T) -> String) -> (Value, String) {
    let mut lines: Vec<String> = items.iter().map(text).collect();
    lines.push(format!("count: {}", items.len()));
    (
        json!({ "records": items.iter().map(json).collect::<Vec<_>>(), "count": items.len() }),
        lines.join("\n"),
    )
}

fn enumerate(what: What, shape: &Shape, base: Option<&str>, efficient_only: bool) -> Out {
    let (v, t) = match what {
        What::Faces => {
            let n = match (shape.n, &shape.lambda) {
                (Some(n), _) => n,
                (None, Some(_)) => partition(shape)?.n(),
                (None, None) => return Err(Failure::Usage("--n is required".into())),
            };
            let w = shape.perm.as_deref().map(|p| permutation(p, n)).transpose()?;
            let faces = enumerate_reduced_faces(n, w.as_ref());
            records(
                &faces,
                |f| json!({ "face": f.to_json(), "permutation": f.face_permutation().to_json() }),
                |f| format!("{}\nw(F) = {}\n", f.render_ascii(), f.face_permutation()),
            )
        }
        What::Tracks => {
            let lambda = partition(shape)?;
            records(&enumerate_tracks(&lambda), |t| t.to_json(), |t| t.to_string())
        }
        What::Patterns | What::Cells => {
            let pats = patterns(shape, base, efficient_only)?;
            if what == What::Patterns {
                records(&pats, |p| p.to_json(), |p| format!("{p}  rank {}", p.rank()))
            } else {
                let lambda = pats.first().map(|p| p.base().lambda());
                let cells: Vec<(EnhancedPattern, _)> = match lambda {
                    Some(l) => pats
                        .into_iter()
                        .map(|p| {
                            let c = cell_constraints(&p, &l)?;
                            Ok((p, c))
                        })
                        .collect::<Result<_, Error>>()?,
                    None => vec![],
                };
                records(
                    &cells,
                    |(p, c)| json!({ "pattern": p.to_json(), "cell": c.to_json() }),
                    |(p, c)| format!("{p}  :  {c}"),
                )
            }
        }
    };
    Ok((v, t, true))
}

fn patterns(shape: &Shape, base: Option<&str>, efficient_only: bool) -> Result<Vec<EnhancedPattern>, Failure> {
    let mut pats = if let Some(b) = base {
        enumerate_enhancements(&parse_base(b)?)
    } else {
        let lambda = partition(shape)?;
        match shape.perm.as_deref() {
            Some(p) => patterns_for_perm(&permutation(p, lambda.n())?, &lambda)?,
            None if efficient_only => enumerate_efficient(&lambda),
            None => enumerate_all(&lambda),
        }
    };
    if efficient_only {
        pats.retain(|p| p.is_efficient());
    }
    Ok(pats)
}

fn locate(shape: &Shape, point: &str, closure: bool) -> Out {
    let lambda = partition(shape)?;
    let pt = RationalPoint::parse(lambda.n(), point)?;
    let p = point_to_pattern(&lambda, &pt)?;
    let c = cell_constraints(&p, &lambda)?;
    let mut v = json!({ "point": pt.to_json(), "pattern": p.to_json(), "cell": c.to_json() });
    let mut t = format!("pattern: {p}\nrank: {}\ncell: {c}", p.rank());
    if closure {
        let cl = closure_patterns(&lambda, &pt)?;
        v["closure"] = Value::Array(cl.iter().map(|q| q.to_json()).collect());
        for q in &cl {
            t.push_str(&format!("\nclosure: {q}  rank {}", q.rank()));
        }
    }
    Ok((v, t, true))
}

fn run_verify(suite: &str, bounds: VerifyBounds) -> Out {
    let suite: Suite = suite.parse()?;
    let progress = |line: &str| eprintln!("{line}");
    let reports = verify::run(suite, &bounds, &progress);
    let ok = reports.iter().all(|r| r.ok());
    let v = json!({ "reports": reports.iter().map(|r| r.to_json()).collect::<Vec<_>>(), "ok": ok });
    let t = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    Ok((v, t, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, out) = match &cli.command {
        Command::Compute { kind, shape, method, beta_spec } => ("compute", compute(*kind, shape, *method, *beta_spec)),
        Command::Enumerate { what, shape, base, efficient_only } => {
            ("enumerate", enumerate(*what, shape, base.as_deref(), *efficient_only))
        }
        Command::Locate { shape, point, closure } => ("locate", locate(shape, point, *closure)),
        Command::Verify { suite, max_n, max_part, denominator, seed } => {
            if *denominator < 1 {
                eprintln!("error: --denominator must be positive");
                return ExitCode::from(2);
            }
            let bounds = VerifyBounds {
                max_n: *max_n,
                max_part: *max_part,
                denominator: *denominator,
                seed: *seed,
                ..Default::default()
            };
            ("verify", run_verify(suite, bounds))
        }
    };
    match out {
        Ok((value, text, ok)) => {
            match cli.format {
                Format::Json => println!("{}", json!({ "version": 1, "command": name, "result": value })),
                Format::Text => println!("{text}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
