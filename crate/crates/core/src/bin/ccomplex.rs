//! Command-line front end. Exit codes: 0 success / YES / no obstruction
//! found, 1 NO, 2 invalid input or violated hypothesis.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ccomplex::{
    add_cancel_pair, decide_equivalent, full_substitution_word, linking_numbers, magnus_expand,
    make_equivalent_pair, mu3_detail, parse, prop_mu123_check, random_descriptor,
    random_descriptor_unlinked, serialize, stabilize, substitution_word, theorem2_decide,
    transpose, CComplexDescriptor, Verdict,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "ccomplex", version, about = "Claspword computations for C-complexes of links")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a descriptor file.
    Validate { file: PathBuf },
    /// Pairwise linking numbers.
    Lk { file: PathBuf },
    /// Milnor triple linking numbers for all triples i < j < k.
    Mu3 {
        file: PathBuf,
        /// Also print the epsilon terms and linking numbers of each triple.
        #[arg(long)]
        triples: bool,
    },
    /// Degree-two Magnus expansion of one component's substituted claspword.
    Magnus {
        file: PathBuf,
        #[arg(short = 'k', long = "component")]
        component: usize,
        /// Restrict to a triple of components; variables become positions 1..3.
        #[arg(long, value_parser = parse_triple)]
        scope: Option<[usize; 3]>,
    },
    /// Decide equivalence of two C-complexes.
    Equiv { a: PathBuf, b: PathBuf },
    /// Run every applicable obstruction to A and B admitting equivalent C-complexes.
    Obstruct { a: PathBuf, b: PathBuf },
    /// Build equivalent C-complexes for two 2-component descriptors.
    Canon {
        a: PathBuf,
        b: PathBuf,
        /// Write left.cc, right.cc and their .transcript sidecars here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Apply a single move.
    Move(MoveArgs),
    /// Restrict to a sublink, renumbering components in the given order.
    Sub {
        file: PathBuf,
        #[arg(required = true)]
        indices: Vec<usize>,
    },
    /// Generate a seeded random descriptor.
    Rand {
        #[arg(long)]
        components: usize,
        #[arg(long)]
        clasps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Generate canceling sign pairs so every linking number vanishes
        /// (the clasp count is rounded down to even).
        #[arg(long)]
        unlinked: bool,
    },
}

#[derive(Args)]
struct MoveArgs {
    file: PathBuf,
    #[command(flatten)]
    kind: MoveKind,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct MoveKind {
    /// Transpose letters p, p+1 of word i: `i,p`.
    #[arg(long, value_parser = parse_list::<2>)]
    transpose: Option<[usize; 2]>,
    /// Insert a canceling pair: `i,j,p,q`.
    #[arg(long = "cancel-pair", value_parser = parse_list::<4>)]
    cancel_pair: Option<[usize; 4]>,
    /// Raise the genus of component i.
    #[arg(long)]
    stabilize: Option<usize>,
}

fn parse_list<const N: usize>(s: &str) -> Result<[usize; N], String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("`{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<usize>| format!("expected {N} comma-separated integers, got {}", v.len()))
}

fn parse_triple(s: &str) -> Result<[usize; 3], String> {
    parse_list::<3>(s)
}

struct Outcome {
    text: String,
    json: Value,
    code: u8,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, code: 0 }
    }
}

type CliResult = Result<Outcome, String>;

fn load(path: &Path) -> Result<CComplexDescriptor, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn verdict_code<Y, N>(v: &Verdict<Y, N>) -> u8 {
    if v.is_yes() {
        0
    } else {
        1
    }
}

fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Validate { file } => {
            let d = load(&file)?;
            Ok(Outcome::ok(
                format!(
                    "valid: {} components, {} clasps, genus {:?}\n",
                    d.components(),
                    d.clasp_count(),
                    d.genus()
                ),
                json!({ "valid": true, "descriptor": d }),
            ))
        }
        Command::Lk { file } => {
            let d = load(&file)?;
            let lks = linking_numbers(&d);
            let mut text = String::new();
            for ((i, j), lk) in &lks {
                let _ = writeln!(text, "lk({i},{j}) = {lk}");
            }
            let json = lks
                .iter()
                .map(|((i, j), lk)| json!({ "pair": [i, j], "lk": lk }))
                .collect();
            Ok(Outcome::ok(text, Value::Array(json)))
        }
        Command::Mu3 { file, triples } => {
            let d = load(&file)?;
            let n = d.components();
            let mut text = String::new();
            let mut rows = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    for k in j + 1..=n {
                        let t = mu3_detail(&d, i, j, k).map_err(|e| e.to_string())?;
                        let _ = write!(text, "mu({i},{j},{k}) = {}", t.mu);
                        if triples {
                            let _ = write!(
                                text,
                                "  [e123={} e312={} e231={} lk12={} lk13={} lk23={}]",
                                t.e123, t.e312, t.e231, t.linking.0, t.linking.1, t.linking.2
                            );
                        }
                        text.push('\n');
                        rows.push(if triples {
                            serde_json::to_value(t).unwrap()
                        } else {
                            json!({ "triple": [i, j, k], "value": t.mu.value, "modulus": t.mu.modulus })
                        });
                    }
                }
            }
            Ok(Outcome::ok(text, Value::Array(rows)))
        }
        Command::Magnus {
            file,
            component,
            scope,
        } => {
            let d = load(&file)?;
            let word = match scope {
                Some(s) => substitution_word(&d, component, s),
                None => full_substitution_word(&d, component),
            }
            .map_err(|e| e.to_string())?;
            let m = magnus_expand(&word);
            Ok(Outcome::ok(
                format!("u{component} = {word}\nM{component} = {m}\n"),
                json!({ "component": component, "word": word, "series": m.to_string(), "terms": m }),
            ))
        }
        Command::Equiv { a, b } => {
            let (f, g) = (load(&a)?, load(&b)?);
            let v = decide_equivalent(&f, &g);
            let text = match &v {
                Verdict::Yes(cert) => format!("YES\n{cert}"),
                Verdict::No(r) => format!("NO\n{r}\n"),
            };
            Ok(Outcome {
                text,
                json: serde_json::to_value(&v).unwrap(),
                code: verdict_code(&v),
            })
        }
        Command::Obstruct { a, b } => obstruct(&load(&a)?, &load(&b)?),
        Command::Canon { a, b, out_dir } => canon(&load(&a)?, &load(&b)?, out_dir.as_deref()),
        Command::Move(args) => {
            let d = load(&args.file)?;
            let out = if let Some([i, p]) = args.kind.transpose {
                transpose(&d, i, p)
            } else if let Some([i, j, p, q]) = args.kind.cancel_pair {
                add_cancel_pair(&d, i, j, p, q)
            } else if let Some(i) = args.kind.stabilize {
                stabilize(&d, i)
            } else {
                unreachable!("clap requires one move")
            }
            .map_err(|e| e.to_string())?;
            Ok(Outcome::ok(serialize(&out), json!({ "descriptor": out })))
        }
        Command::Sub { file, indices } => {
            let d = load(&file)?;
            let out = d.sublink(&indices).map_err(|e| e.to_string())?;
            Ok(Outcome::ok(serialize(&out), json!({ "descriptor": out })))
        }
        Command::Rand {
            components,
            clasps,
            seed,
            unlinked,
        } => {
            if components == 0 {
                return Err("--components must be at least 1".into());
            }
            let d = if unlinked {
                random_descriptor_unlinked(components, clasps / 2, seed)
            } else {
                random_descriptor(components, clasps, seed)
            };
            Ok(Outcome::ok(serialize(&d), json!({ "descriptor": d })))
        }
    }
}

fn obstruct(d: &CComplexDescriptor, e: &CComplexDescriptor) -> CliResult {
    if d.components() != e.components() {
        return Err(format!(
            "component counts differ: {} vs {}",
            d.components(),
            e.components()
        ));
    }
    let n = d.components();
    let mut text = format!("components={n}\n");
    let vanishing = |x: &CComplexDescriptor| linking_numbers(x).iter().all(|(_, lk)| *lk == 0);

    if n == 2 {
        text.push_str("check=linking_number\n");
        let v = make_equivalent_pair(d, e).map_err(|err| err.to_string())?;
        return Ok(match &v {
            Verdict::Yes(pair) => {
                text.push_str("verdict=YES\n");
                let _ = writeln!(
                    text,
                    "witness_moves_left={} witness_moves_right={}",
                    pair.left.transcript().len(),
                    pair.right.transcript().len()
                );
                text.push_str("YES: equal linking numbers; equivalent C-complexes constructed\n");
                Outcome {
                    text,
                    json: json!({ "check": "linking_number", "verdict": "YES", "witness": pair }),
                    code: 0,
                }
            }
            Verdict::No(m) => {
                text.push_str("verdict=NO\n");
                let _ = writeln!(text, "mismatch=lk(1,2) left={} right={}", m.left, m.right);
                let _ = writeln!(text, "NO: linking numbers differ, {m}");
                Outcome {
                    text,
                    json: json!({ "check": "linking_number", "verdict": "NO", "mismatch": m }),
                    code: 1,
                }
            }
        });
    }

    if vanishing(d) && vanishing(e) {
        text.push_str("check=triple_linking\n");
        let v = theorem2_decide(d, e).map_err(|err| err.to_string())?;
        return Ok(match &v {
            Verdict::Yes(values) => {
                text.push_str("verdict=YES\n");
                text.push_str("YES: all triple linking numbers agree\n");
                Outcome {
                    text,
                    json: json!({ "check": "triple_linking", "verdict": "YES", "mu3": values }),
                    code: 0,
                }
            }
            Verdict::No(mismatches) => {
                text.push_str("verdict=NO\n");
                for m in mismatches {
                    let (i, j, k) = m.triple;
                    let _ = writeln!(text, "mismatch=({i},{j},{k}) left={} right={}", m.left, m.right);
                }
                let _ = writeln!(text, "NO: triple linking number differs at {}", mismatches[0]);
                Outcome {
                    text,
                    json: json!({ "check": "triple_linking", "verdict": "NO", "mismatches": mismatches }),
                    code: 1,
                }
            }
        });
    }

    text.push_str("check=necessary_conditions\n");
    let report = prop_mu123_check(d, e).map_err(|err| err.to_string())?;
    for c in report.linking.iter().filter(|c| !c.pass) {
        let _ = writeln!(text, "mismatch=lk({},{}) left={} right={}", c.pair.0, c.pair.1, c.left, c.right);
    }
    for c in report.triples.iter().filter(|c| !c.pass) {
        let (i, j, k) = c.triple;
        let _ = writeln!(
            text,
            "mismatch=({i},{j},{k}) left={} right={} modulus={}",
            c.left.value, c.right.value, c.modulus
        );
    }
    let obstructed = !report.all_pass();
    if obstructed {
        text.push_str("verdict=NO\nNO: a necessary condition fails\n");
    } else {
        text.push_str(
            "verdict=NO_OBSTRUCTION_FOUND\nno obstruction found (necessary conditions only; nonzero linking is not decided)\n",
        );
    }
    Ok(Outcome {
        text,
        json: json!({
            "check": "necessary_conditions",
            "verdict": if obstructed { "NO" } else { "NO_OBSTRUCTION_FOUND" },
            "report": report,
        }),
        code: if obstructed { 1 } else { 0 },
    })
}

fn canon(d: &CComplexDescriptor, e: &CComplexDescriptor, out_dir: Option<&Path>) -> CliResult {
    let v = make_equivalent_pair(d, e).map_err(|err| err.to_string())?;
    let pair = match v {
        Verdict::No(m) => {
            return Ok(Outcome {
                text: format!("NO\nlinking numbers differ, {m}\n"),
                json: json!({ "verdict": "NO", "mismatch": m }),
                code: 1,
            })
        }
        Verdict::Yes(pair) => pair,
    };
    let (lt, rt) = (pair.left.transcript(), pair.right.transcript());
    let mut text = String::from("YES\n");
    if let Some(dir) = out_dir {
        std::fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
        let files = [
            ("left.cc", serialize(&pair.left.descriptor)),
            ("right.cc", serialize(&pair.right.descriptor)),
            ("left.transcript", lt.to_string()),
            ("right.transcript", rt.to_string()),
        ];
        for (name, contents) in files {
            let path = dir.join(name);
            std::fs::write(&path, contents).map_err(|e| format!("{}: {e}", path.display()))?;
            let _ = writeln!(text, "wrote {}", path.display());
        }
    } else {
        let _ = write!(text, "# left\n{}", serialize(&pair.left.descriptor));
        let _ = write!(text, "# left transcript\n{}", indent(&lt.to_string()));
        let _ = write!(text, "# right\n{}", serialize(&pair.right.descriptor));
        let _ = write!(text, "# right transcript\n{}", indent(&rt.to_string()));
    }
    let _ = write!(text, "# certificate\n{}", indent(&pair.certificate.to_string()));
    Ok(Outcome {
        text,
        json: json!({ "verdict": "YES", "pair": pair }),
        code: 0,
    })
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("#   {l}\n")).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli.command) {
        Ok(out) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&out.json).unwrap());
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(msg) => {
            if json {
                println!("{}", json!({ "error": msg }));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(2)
        }
    }
}
