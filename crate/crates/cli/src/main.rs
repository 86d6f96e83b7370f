use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use permclass::class::{self, count_report, simple_members_by_length, CountMethod};
use permclass::genfunc::named;
use permclass::{verify, ClassError, GfName, GriddingMatrix, Permutation, SimpleType, Word};

const SCHEMA_VERSION: &str = "1";

const EXIT_FAILURE: u8 = 1;
const EXIT_INPUT: u8 = 3;
const EXIT_NOT_IN_D: u8 = 4;

#[derive(Parser)]
#[command(
    name = "permclass",
    version,
    about = "Enumerate and inspect the class Av(2143, 4231)"
)]
struct Cli {
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, env = "PERMCLASS_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Brute,
    Gf,
    Both,
}

impl From<Method> for CountMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Brute => CountMethod::BruteForce,
            Method::Gf => CountMethod::GeneratingFunction,
            Method::Both => CountMethod::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count class members of each length.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        to: u16,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Count and classify simple members of each length from 4.
    Simples {
        #[arg(long, value_parser = clap::value_parser!(u16).range(4..))]
        to: u16,
    },
    /// Encode a member of the grid class D as a word over a, b, c.
    Encode {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        perm: Vec<String>,
    },
    /// Decode a word over a, b, c into a permutation.
    Decode { word: String },
    /// Test membership in a monotone grid class.
    Grid {
        /// Rows top first separated by `;`, cells by `,` (1, -1, 0 or .).
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(required = true, num_args = 1..)]
        perm: Vec<String>,
    },
    /// Print series coefficients of a named generating function.
    Series {
        #[arg(long, default_value = "f")]
        name: String,
        #[arg(long)]
        to: u16,
    },
    /// Run the consistency checks up to the given length.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
        to: u16,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Failure {
        Failure {
            code: EXIT_INPUT,
            message: message.to_string(),
        }
    }
}

/// Rendered output plus whether the command found a disagreement.
struct Outcome {
    text: String,
    ok: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n.into())
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILURE);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILURE)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Count { to, method } => Ok(count(*to as usize, (*method).into(), cli.format)),
        Command::Simples { to } => Ok(simples(*to as usize, cli.format)),
        Command::Encode { perm } => encode(&parse_perm(perm)?, cli.format),
        Command::Decode { word } => decode(word, cli.format),
        Command::Grid { matrix, perm } => grid(matrix, &parse_perm(perm)?, cli.format),
        Command::Series { name, to } => series(name, *to as usize, cli.format),
        Command::Verify { to } => Ok(verify_cmd(*to as usize, cli.format)),
    }
}

fn parse_perm(parts: &[String]) -> Result<Permutation, Failure> {
    parts.join(" ").parse().map_err(Failure::input)
}

fn document(command: &str, fields: Vec<(&str, Value)>) -> String {
    let mut map = Map::new();
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    map.insert("command".into(), json!(command));
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("serializable");
    s.push('\n');
    s
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn opt_str<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

fn count(to: usize, method: CountMethod, format: Format) -> Outcome {
    let report = count_report(to, method).expect("closed form has a power series");
    let ok = report.all_agree();
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &report.rows {
                match method {
                    CountMethod::Both => {
                        let mark = if r.agrees == Some(true) {
                            "ok"
                        } else {
                            "MISMATCH"
                        };
                        let _ = writeln!(
                            s,
                            "{:>3}  {}  {}  {mark}",
                            r.length,
                            opt_str(&r.brute),
                            opt_str(&r.gf)
                        );
                    }
                    _ => {
                        let _ = writeln!(s, "{:>3}  {}", r.length, r.count());
                    }
                }
            }
            s
        }
        Format::Json => {
            let rows = report
                .rows
                .iter()
                .map(|r| {
                    let mut m = Map::new();
                    m.insert("length".into(), json!(r.length.to_string()));
                    if let Some(b) = &r.brute {
                        m.insert("brute".into(), json!(b.to_string()));
                    }
                    if let Some(g) = &r.gf {
                        m.insert("gf".into(), json!(g.to_string()));
                    }
                    if let Some(a) = r.agrees {
                        m.insert("agrees".into(), json!(a));
                    }
                    Value::Object(m)
                })
                .collect();
            document(
                "count",
                vec![
                    ("method", json!(method.as_str())),
                    ("all_agree", json!(ok)),
                    ("rows", Value::Array(rows)),
                ],
            )
        }
        Format::Csv => {
            let header: &[&str] = match method {
                CountMethod::BruteForce => &["length", "brute"],
                CountMethod::GeneratingFunction => &["length", "gf"],
                CountMethod::Both => &["length", "brute", "gf", "agrees"],
            };
            let rows: Vec<Vec<String>> = report
                .rows
                .iter()
                .map(|r| {
                    let mut row = vec![r.length.to_string()];
                    row.extend(r.brute.as_ref().map(ToString::to_string));
                    row.extend(r.gf.as_ref().map(ToString::to_string));
                    row.extend(r.agrees.map(|a| a.to_string()));
                    row
                })
                .collect();
            csv(header, &rows)
        }
    };
    Outcome { text, ok }
}

struct SimpleRow {
    length: usize,
    total: usize,
    series: String,
    tally: [usize; SimpleType::ALL.len()],
    unclassified: usize,
}

fn simples(to: usize, format: Format) -> Outcome {
    let s = named(GfName::S).series(to).expect("s has a power series");
    let rows: Vec<SimpleRow> = simple_members_by_length(to)
        .iter()
        .enumerate()
        .map(|(k, level)| {
            let mut tally = [0; SimpleType::ALL.len()];
            let mut unclassified = 0;
            for p in level {
                match class::classify_simple(p) {
                    Ok(t) => tally[SimpleType::ALL.iter().position(|&x| x == t).unwrap()] += 1,
                    Err(_) => unclassified += 1,
                }
            }
            SimpleRow {
                length: k + 4,
                total: level.len(),
                series: s[k + 4].to_string(),
                tally,
                unclassified,
            }
        })
        .collect();
    let ok = rows
        .iter()
        .all(|r| r.total.to_string() == r.series && r.unclassified == 0);
    let text = match format {
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let mark = if r.total.to_string() == r.series {
                    "ok"
                } else {
                    "MISMATCH"
                };
                let _ = write!(
                    out,
                    "{:>3}  {}  (s: {}, {mark})",
                    r.length, r.total, r.series
                );
                for (t, &c) in SimpleType::ALL.iter().zip(&r.tally) {
                    if c > 0 {
                        let _ = write!(out, "  {t}={c}");
                    }
                }
                if r.unclassified > 0 {
                    let _ = write!(out, "  unclassified={}", r.unclassified);
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let rows = rows
                .iter()
                .map(|r| {
                    let types: Map<String, Value> = SimpleType::ALL
                        .iter()
                        .zip(&r.tally)
                        .map(|(t, c)| (t.as_str().to_string(), json!(c.to_string())))
                        .collect();
                    json!({
                        "length": r.length.to_string(),
                        "total": r.total.to_string(),
                        "series": r.series,
                        "unclassified": r.unclassified.to_string(),
                        "types": types,
                    })
                })
                .collect();
            document(
                "simples",
                vec![("all_agree", json!(ok)), ("rows", Value::Array(rows))],
            )
        }
        Format::Csv => {
            let mut header = vec!["length", "total", "series", "unclassified"];
            header.extend(SimpleType::ALL.iter().map(|t| t.as_str()));
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut row = vec![
                        r.length.to_string(),
                        r.total.to_string(),
                        r.series.clone(),
                        r.unclassified.to_string(),
                    ];
                    row.extend(r.tally.iter().map(ToString::to_string));
                    row
                })
                .collect();
            csv(&header, &rows)
        }
    };
    Outcome { text, ok }
}

fn encode(p: &Permutation, format: Format) -> Result<Outcome, Failure> {
    let word = class::encode_d(p).map_err(|e| match e {
        ClassError::NotInD(_) => Failure {
            code: EXIT_NOT_IN_D,
            message: e.to_string(),
        },
        other => Failure::input(other),
    })?;
    let text = match format {
        Format::Text => format!("{word}\n"),
        Format::Json => document(
            "encode",
            vec![
                ("permutation", json!(p.to_string())),
                ("word", json!(word.to_string())),
            ],
        ),
        Format::Csv => csv(
            &["permutation", "word"],
            &[vec![p.to_string(), word.to_string()]],
        ),
    };
    Ok(Outcome { text, ok: true })
}

fn decode(word: &str, format: Format) -> Result<Outcome, Failure> {
    let w: Word = word.parse().map_err(Failure::input)?;
    let p = class::decode_word(&w).map_err(Failure::input)?;
    let text = match format {
        Format::Text => format!("{p}\n"),
        Format::Json => document(
            "decode",
            vec![
                ("word", json!(w.to_string())),
                ("permutation", json!(p.to_string())),
            ],
        ),
        Format::Csv => csv(
            &["word", "permutation"],
            &[vec![w.to_string(), p.to_string()]],
        ),
    };
    Ok(Outcome { text, ok: true })
}

fn grid(matrix: &str, p: &Permutation, format: Format) -> Result<Outcome, Failure> {
    let m: GriddingMatrix = matrix.parse().map_err(Failure::input)?;
    let witness = m.find_gridding(p);
    let join = |cuts: &[usize]| cuts.iter().map(ToString::to_string).collect::<Vec<_>>();
    let text = match format {
        Format::Text => match &witness {
            Some(g) => format!("member\nwitness: {g}\n"),
            None => "non-member\n".to_string(),
        },
        Format::Json => {
            let witness = match &witness {
                Some(g) => json!({
                    "col_cuts": join(&g.col_cuts),
                    "row_cuts": join(&g.row_cuts),
                }),
                None => Value::Null,
            };
            document(
                "grid",
                vec![
                    ("matrix", json!(m.to_string())),
                    ("permutation", json!(p.to_string())),
                    ("member", json!(witness.is_object())),
                    ("witness", witness),
                ],
            )
        }
        Format::Csv => {
            let (member, cols, rows) = match &witness {
                Some(g) => (
                    "true",
                    join(&g.col_cuts).join(" "),
                    join(&g.row_cuts).join(" "),
                ),
                None => ("false", String::new(), String::new()),
            };
            csv(
                &["permutation", "member", "col_cuts", "row_cuts"],
                &[vec![p.to_string(), member.into(), cols, rows]],
            )
        }
    };
    Ok(Outcome { text, ok: true })
}

fn series(name: &str, to: usize, format: Format) -> Result<Outcome, Failure> {
    let name: GfName = name.parse().map_err(Failure::input)?;
    let coeffs = named(name).series(to).map_err(Failure::input)?;
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for (n, c) in coeffs.iter().enumerate() {
                let _ = writeln!(s, "{n:>3}  {c}");
            }
            s
        }
        Format::Json => {
            let rows = coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| json!({ "length": n.to_string(), "coefficient": c.to_string() }))
                .collect();
            document(
                "series",
                vec![("name", json!(name.as_str())), ("rows", Value::Array(rows))],
            )
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| vec![n.to_string(), c.to_string()])
                .collect();
            csv(&["length", "coefficient"], &rows)
        }
    };
    Ok(Outcome { text, ok: true })
}

fn verify_cmd(to: usize, format: Format) -> Outcome {
    let report = verify::run(to);
    let ok = report.all_passed();
    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for c in &report.checks {
                let _ = writeln!(s, "{c}");
            }
            let _ = writeln!(
                s,
                "{}",
                if ok {
                    "all checks passed"
                } else {
                    "some checks FAILED"
                }
            );
            s
        }
        Format::Json => {
            let checks = report
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                .collect();
            document(
                "verify",
                vec![
                    ("to", json!(to.to_string())),
                    ("all_passed", json!(ok)),
                    ("checks", Value::Array(checks)),
                ],
            )
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.to_string(),
                        c.passed.to_string(),
                        c.detail.replace(',', ";"),
                    ]
                })
                .collect();
            csv(&["check", "passed", "detail"], &rows)
        }
    };
    Outcome { text, ok }
}
