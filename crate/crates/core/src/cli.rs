//! Command-line surface. [`run`] returns the process exit code:
//! 0 X-planar, 1 not X-planar, 2 bad input or usage, 3 internal failure.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::decide::{decide_with, Certificate, DecideOptions, Outcome, Verdict};
use crate::embed::{trace_faces, RotationSystem};
use crate::error::Error;
use crate::euler::EulerTour;
use crate::format::{parse_certificate, parse_raw, write_certificate, write_embedding, write_xgraph};
use crate::gauss::{from_gauss_code, parse_word, turning_instance};
use crate::graph::{components, validate, Component, Dart, XGraph};
use crate::interlace::Side;
use crate::oracle::{oracle_forbidden_pairs_capped, oracle_rotations_capped, random_xgraph, CYCLE_CAP, RNG_NAME, ROTATION_CAP};
use crate::render::render_schematic;
use crate::walk::verify_forbidden_pair;

pub const EXIT_PLANAR: i32 = 0;
pub const EXIT_NOT_PLANAR: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "xplanar", version, about = "Decide X-planarity of 4-regular graphs with a crossing structure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// `.xg` file, or `-` for standard input
    #[arg(conflicts_with = "gauss")]
    file: Option<PathBuf>,
    /// Build the graph from a Gauss code instead, e.g. "a b a b"
    #[arg(long)]
    gauss: Option<String>,
}

#[derive(Args, Debug)]
struct Output {
    /// Write to this path instead of standard output
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Rotations,
    Cycles,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print an embedding (exit 0) or a certificate (exit 1)
    Decide {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// Reduce certificate walks to vertex-simple cycles
        #[arg(long)]
        simplify: bool,
        /// Add tours, colorings and odd cycles as comments
        #[arg(long)]
        trace: bool,
    },
    /// Print tour, coloring and rotation system of an X-planar graph
    Embed {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Print a certificate, or check one with --check
    Certify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        simplify: bool,
        /// Certificate file to verify against the graph
        #[arg(long, value_name = "CERT")]
        check: Option<PathBuf>,
    },
    /// Convert a Gauss code to `.xg`
    Gauss {
        word: String,
        /// Pair the two arrivals at each crossing instead of each pass's darts
        #[arg(long)]
        turning: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Decide with an exponential reference search
    Oracle {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[arg(long, value_enum, default_value = "rotations")]
        method: Method,
        /// Refuse inputs with more vertices than this
        #[arg(long)]
        max_v: Option<usize>,
    },
    /// Emit a seeded random X-graph
    Gen {
        #[arg(long)]
        letters: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Redraw every vertex's pairing at random
        #[arg(long)]
        shuffle: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Draw the embedding of an X-planar graph as SVG
    Render {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Report every structural problem of an `.xg` file
    Validate {
        #[command(flatten)]
        input: Input,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: if e.is_internal() { EXIT_INTERNAL } else { EXIT_INPUT },
            message: e.to_string(),
        }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_failure(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<XGraph, Failure> {
    match (&input.file, &input.gauss) {
        (_, Some(word)) => Ok(from_gauss_code(&parse_word(word))?),
        (Some(path), None) => Ok(crate::format::parse_xgraph(&read_text(path)?)?),
        (None, None) => Err(input_failure("no input: give an .xg file, `-`, or --gauss")),
    }
}

struct Emitted {
    text: String,
    code: i32,
}

fn emit(out: &Output, e: Emitted, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match &out.output {
        Some(path) => fs::write(path, &e.text).map_err(|err| input_failure(format!("{}: {err}", path.display())))?,
        None => stdout
            .write_all(e.text.as_bytes())
            .map_err(|err| input_failure(format!("writing output: {err}")))?,
    }
    Ok(e.code)
}

fn certificate_text(cert: &Certificate) -> String {
    format!(
        "# not X-planar ({})\n{}",
        cert.provenance,
        write_certificate(&cert.walk1, &cert.walk2, cert.crossing)
    )
}

fn embedding_text(v: &Verdict, g: &XGraph) -> String {
    let r = v.rotation(g).expect("planar verdicts carry a rotation");
    let faces = v.face_sets().expect("planar verdicts carry faces");
    format!("# X-planar\n{}", write_embedding(&r, &faces))
}

fn global_dump(tour: &EulerTour, c: &Component) -> String {
    tour.dump_relabeled(&c.graph, |v| c.vertices[v], |e| c.edges[e])
}

fn trace_text(v: &Verdict) -> String {
    let mut out = String::new();
    for (i, c) in v.components.iter().enumerate() {
        let local = &c.component;
        let _ = writeln!(out, "# component {i}: vertices {:?}", local.vertices);
        let _ = writeln!(out, "# component {i}: {}", global_dump(&c.tour, local));
        match &c.outcome {
            Outcome::Embedded { coloring, faces, .. } => {
                let sides: Vec<&str> = coloring
                    .sides
                    .iter()
                    .map(|s| if *s == Side::Inside { "in" } else { "out" })
                    .collect();
                let _ = writeln!(out, "# component {i}: coloring {} faces {}", sides.join(" "), faces.count());
            }
            Outcome::Certified(cert) => {
                let _ = writeln!(out, "# component {i}: {}", cert.provenance);
                if let Some(trace) = &cert.odd_cycle {
                    let global = |vs: &[usize]| -> Vec<usize> { vs.iter().map(|&v| local.vertices[v]).collect() };
                    let _ = writeln!(out, "# component {i}: odd cycle {:?}", global(&trace.cycle.vertices));
                    let _ = writeln!(
                        out,
                        "# component {i}: Y positions {:?} vertices {:?}",
                        trace.y.positions,
                        global(&trace.y.vertices)
                    );
                }
            }
        }
    }
    out
}

fn run_decide(g: &XGraph, simplify: bool, trace: bool) -> Result<Emitted, Failure> {
    let v = decide_with(g, DecideOptions { simplify })?;
    let mut text = if trace { trace_text(&v) } else { String::new() };
    let code = match v.certificate() {
        Some(cert) => {
            text.push_str(&certificate_text(cert));
            EXIT_NOT_PLANAR
        }
        None => {
            text.push_str(&embedding_text(&v, g));
            EXIT_PLANAR
        }
    };
    Ok(Emitted { text, code })
}

fn run_embed(g: &XGraph) -> Result<Emitted, Failure> {
    let v = decide_with(g, DecideOptions::default())?;
    if !v.planar() {
        return Ok(Emitted {
            text: "# not X-planar; run `decide` for a certificate\n".into(),
            code: EXIT_NOT_PLANAR,
        });
    }
    let mut text = String::new();
    for (i, c) in v.components.iter().enumerate() {
        let Outcome::Embedded { coloring, .. } = &c.outcome else {
            unreachable!("planar verdict")
        };
        let local = &c.component;
        let dump = global_dump(&c.tour, local);
        let _ = writeln!(text, "{} # component {i}", dump.split(" # ").next().unwrap_or(""));
        for (lv, side) in coloring.sides.iter().enumerate() {
            let name = if *side == Side::Inside { "in" } else { "out" };
            let _ = writeln!(text, "c {} {name}", local.vertices[lv]);
        }
    }
    text.push_str(&embedding_text(&v, g));
    Ok(Emitted {
        text,
        code: EXIT_PLANAR,
    })
}

fn run_check(g: &XGraph, path: &PathBuf) -> Result<Emitted, Failure> {
    let cert = parse_certificate(&read_text(path)?)?;
    let report = verify_forbidden_pair(&cert.walk1, &cert.walk2, g);
    let mut text = format!("crossing {:?}\n", report.crossing);
    let code = match (report.crossing_vertex(), cert.crossing) {
        (Some(x), Some(claimed)) if x != claimed => {
            let _ = writeln!(text, "invalid: certificate names vertex {claimed}, crossing is {x}");
            EXIT_INPUT
        }
        (Some(_), _) => {
            text.push_str("valid: not X-planar\n");
            EXIT_NOT_PLANAR
        }
        (None, _) => {
            let _ = writeln!(text, "invalid: {}", report.failure.as_deref().unwrap_or("rejected"));
            EXIT_INPUT
        }
    };
    Ok(Emitted { text, code })
}

fn run_oracle(g: &XGraph, method: Method, max_v: Option<usize>) -> Result<Emitted, Failure> {
    match method {
        Method::Rotations => {
            let cap = max_v.unwrap_or(ROTATION_CAP);
            let mut order = vec![None; g.vertex_count()];
            for c in components(g) {
                match oracle_rotations_capped(&c.graph, cap)? {
                    Some(r) => {
                        for (lv, &v) in c.vertices.iter().enumerate() {
                            order[v] = Some(r.at(lv).map(|d| c.global_dart(d)));
                        }
                    }
                    None => {
                        return Ok(Emitted {
                            text: "# not X-planar: no alternating rotation system is planar\n".into(),
                            code: EXIT_NOT_PLANAR,
                        })
                    }
                }
            }
            let order = order.into_iter().map(|o| o.expect("every vertex lies in a component")).collect();
            let r = RotationSystem::new(order, g)?;
            let faces: Vec<_> = components(g)
                .iter()
                .map(|c| {
                    let local = (0..c.graph.vertex_count())
                        .map(|lv| {
                            r.at(c.vertices[lv]).map(|d| {
                                let e = c.edges.binary_search(&d.edge).expect("dart of this component");
                                Dart::new(e, d.end)
                            })
                        })
                        .collect();
                    let lr = RotationSystem::new(local, &c.graph).expect("restriction of a valid rotation");
                    trace_faces(&c.graph, &lr)
                })
                .collect();
            let refs: Vec<_> = faces.iter().collect();
            Ok(Emitted {
                text: format!("# X-planar\n{}", write_embedding(&r, &refs)),
                code: EXIT_PLANAR,
            })
        }
        Method::Cycles => {
            let cap = max_v.unwrap_or(CYCLE_CAP);
            match oracle_forbidden_pairs_capped(g, cap)? {
                Some((w1, w2)) => {
                    let report = verify_forbidden_pair(&w1, &w2, g);
                    let x = report
                        .crossing_vertex()
                        .ok_or_else(|| Error::Internal("oracle pair failed verification".into()))?;
                    Ok(Emitted {
                        text: format!("# not X-planar (oracle)\n{}", write_certificate(&w1, &w2, x)),
                        code: EXIT_NOT_PLANAR,
                    })
                }
                None => Ok(Emitted {
                    text: "# X-planar: no forbidden cycle pair\n".into(),
                    code: EXIT_PLANAR,
                }),
            }
        }
    }
}

fn run_render(g: &XGraph) -> Result<Emitted, Failure> {
    let v = decide_with(g, DecideOptions::default())?;
    let (Some(r), Some(_)) = (v.rotation(g), v.face_sets()) else {
        return Err(Failure {
            code: EXIT_NOT_PLANAR,
            message: "not X-planar; nothing to render".into(),
        });
    };
    let faces = trace_faces(g, &r);
    Ok(Emitted {
        text: render_schematic(g, &r, &faces),
        code: EXIT_PLANAR,
    })
}

fn run_validate(input: &Input) -> Result<Emitted, Failure> {
    let raw = match (&input.file, &input.gauss) {
        (_, Some(word)) => from_gauss_code(&parse_word(word))?.to_raw(),
        (Some(path), None) => parse_raw(&read_text(path)?)?,
        (None, None) => return Err(input_failure("no input: give an .xg file, `-`, or --gauss")),
    };
    let violations = validate(&raw);
    if violations.is_empty() {
        return Ok(Emitted {
            text: "ok\n".into(),
            code: EXIT_PLANAR,
        });
    }
    let text = violations.iter().map(|v| format!("{v}\n")).collect();
    Ok(Emitted { text, code: EXIT_INPUT })
}

fn dispatch(cli: Cli, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match cli.command {
        Command::Decide {
            input,
            output,
            simplify,
            trace,
        } => emit(&output, run_decide(&load(&input)?, simplify, trace)?, stdout),
        Command::Embed { input, output } => emit(&output, run_embed(&load(&input)?)?, stdout),
        Command::Certify {
            input,
            output,
            simplify,
            check,
        } => {
            let g = load(&input)?;
            let e = match check {
                Some(path) => run_check(&g, &path)?,
                None => {
                    let v = decide_with(&g, DecideOptions { simplify })?;
                    match v.certificate() {
                        Some(cert) => Emitted {
                            text: certificate_text(cert),
                            code: EXIT_NOT_PLANAR,
                        },
                        None => Emitted {
                            text: "# X-planar: no certificate exists\n".into(),
                            code: EXIT_PLANAR,
                        },
                    }
                }
            };
            emit(&output, e, stdout)
        }
        Command::Gauss { word, turning, output } => {
            let symbols = parse_word(&word);
            let g = if turning {
                turning_instance(&symbols)?
            } else {
                from_gauss_code(&symbols)?
            };
            emit(
                &output,
                Emitted {
                    text: format!(
                        "# gauss{}: {}\n{}",
                        if turning { " (turning)" } else { "" },
                        symbols.join(" "),
                        write_xgraph(&g)
                    ),
                    code: EXIT_PLANAR,
                },
                stdout,
            )
        }
        Command::Oracle {
            input,
            output,
            method,
            max_v,
        } => emit(&output, run_oracle(&load(&input)?, method, max_v)?, stdout),
        Command::Gen {
            letters,
            seed,
            shuffle,
            output,
        } => {
            let g = random_xgraph(letters, seed, shuffle)?;
            let text = format!(
                "# seed={seed} letters={letters} shuffle={shuffle} rng={RNG_NAME}\n{}",
                write_xgraph(&g)
            );
            emit(&output, Emitted { text, code: EXIT_PLANAR }, stdout)
        }
        Command::Render { input, output } => emit(&output, run_render(&load(&input)?)?, stdout),
        Command::Validate { input } => {
            let e = run_validate(&input)?;
            emit(&Output { output: None }, e, stdout)
        }
    }
}

/// Parses `args` (including the program name) and runs one subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                EXIT_INPUT
            } else {
                let _ = write!(stdout, "{}", e.render());
                0
            };
            return code;
        }
    };
    match dispatch(cli, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "xplanar: {}", f.message);
            f.code
        }
    }
}
