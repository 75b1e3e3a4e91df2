//! `im2c`: command-line front end for the inverse-monoid machinery.
//!
//! One verb per question: build coset/Schützenberger automata, decide
//! equality, order, membership and conjugacy, build coset complexes, find
//! immersions, and test the covering property.
//!
//! Exit codes: 0 = true/success, 1 = false/absent, 2 = input error,
//! 3 = saturation budget exhausted, 4 = `--oracle` cross-check disagreement.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use im2c_core::{complex, graph, io, oracle, order, saturation};
use im2c_core::{Automaton, Error, Presentation, SaturationReport, TwoComplex, Word};

#[derive(Parser)]
#[command(
    name = "im2c",
    version,
    about = "Immersions into 2-complexes via inverse monoids"
)]
struct Cli {
    /// Maximum combined folds + expansions per saturation run.
    #[arg(long, global = true, default_value_t = saturation::DEFAULT_BUDGET)]
    budget: u64,

    /// Cross-check saturations against the brute-force reference engine.
    #[arg(long, global = true)]
    oracle: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PresentationArg {
    /// Presentation file (text format).
    #[arg(short = 'p', long = "presentation", value_name = "FILE")]
    presentation: PathBuf,
}

#[derive(Subcommand)]
enum Command {
    /// Build the coset automaton of the closed inverse submonoid ⟨Y⟩^ω.
    Coset {
        #[command(flatten)]
        pres: PresentationArg,
        /// Generator words, separated by `;`.
        #[arg(short = 'g', long = "generators", value_name = "WORDS")]
        generators: String,
        /// Also write DOT to this file.
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        /// Also write JSON to this file.
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Build the Schützenberger automaton of a word.
    Schutz {
        #[command(flatten)]
        pres: PresentationArg,
        /// The word.
        #[arg(short = 'w', long = "word", value_name = "WORD")]
        word: String,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Decide equality of two words in the monoid.
    Eq {
        #[command(flatten)]
        pres: PresentationArg,
        #[arg(short = 'u', long = "left", value_name = "WORD")]
        left: String,
        #[arg(short = 'w', long = "right", value_name = "WORD")]
        right: String,
    },
    /// Decide `u ≤ w` in the natural partial order.
    Leq {
        #[command(flatten)]
        pres: PresentationArg,
        #[arg(short = 'u', long = "left", value_name = "WORD")]
        left: String,
        #[arg(short = 'w', long = "right", value_name = "WORD")]
        right: String,
    },
    /// Decide membership of a word in ⟨Y⟩^ω.
    Member {
        #[command(flatten)]
        pres: PresentationArg,
        #[arg(short = 'g', long = "generators", value_name = "WORDS")]
        generators: String,
        #[arg(short = 'w', long = "word", value_name = "WORD")]
        word: String,
    },
    /// Find a word conjugating ⟨Y₁⟩^ω onto ⟨Y₂⟩^ω, if one exists.
    Conjugate {
        #[command(flatten)]
        pres: PresentationArg,
        #[arg(long = "g1", value_name = "WORDS")]
        g1: String,
        #[arg(long = "g2", value_name = "WORDS")]
        g2: String,
    },
    /// Build the coset complex of ⟨Y⟩^ω.
    Complex {
        #[command(flatten)]
        pres: PresentationArg,
        #[arg(short = 'g', long = "generators", value_name = "WORDS")]
        generators: String,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        json: Option<PathBuf>,
    },
    /// Find an immersion between two complexes.
    Immerse {
        #[command(flatten)]
        pres: PresentationArg,
        /// Source complex file (text or JSON).
        #[arg(long, value_name = "FILE")]
        from: PathBuf,
        /// Target complex file (text or JSON).
        #[arg(long, value_name = "FILE")]
        to: PathBuf,
        /// Basepoints `V1:V2` (source:target); tries all targets if absent.
        #[arg(long, value_name = "V1:V2")]
        at: Option<String>,
    },
    /// Decide whether the immersion between two complexes is a covering.
    Cover {
        #[command(flatten)]
        pres: PresentationArg,
        #[arg(long, value_name = "FILE")]
        from: PathBuf,
        /// Target complex file; the bouquet of the presentation if absent.
        #[arg(long, value_name = "FILE")]
        to: Option<PathBuf>,
        #[arg(long, value_name = "V1:V2")]
        at: Option<String>,
    },
    /// Print the greatest group image of the presentation.
    GroupImage {
        #[command(flatten)]
        pres: PresentationArg,
    },
}

/// Everything a verb can conclude, mapped to an exit code in `main`.
enum Outcome {
    Yes,
    No,
    InputError(String),
    BudgetExhausted,
    OracleDisagreement(String),
}

fn error_outcome(e: Error) -> Outcome {
    match e {
        Error::BudgetExhausted => Outcome::BudgetExhausted,
        other => Outcome::InputError(other.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Outcome::Yes => ExitCode::from(0),
        Outcome::No => ExitCode::from(1),
        Outcome::InputError(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Outcome::BudgetExhausted => {
            eprintln!("error: saturation budget exhausted");
            ExitCode::from(3)
        }
        Outcome::OracleDisagreement(msg) => {
            eprintln!("error: oracle disagreement: {msg}");
            ExitCode::from(4)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Coset {
            pres,
            generators,
            dot,
            json,
        } => with_pres(pres, |p| {
            let gens = io::parse_generators(&p, generators)?;
            let report = saturation::coset_automaton(&gens, &p, cli.budget);
            build_outcome(cli, &p, saturation::flower(&gens, &p), report, dot, json)
        }),
        Command::Schutz {
            pres,
            word,
            dot,
            json,
        } => with_pres(pres, |p| {
            let w = p.parse_word(word)?;
            let report = saturation::schutzenberger(&w, &p, cli.budget);
            build_outcome(
                cli,
                &p,
                saturation::linear_automaton(&w, &p),
                report,
                dot,
                json,
            )
        }),
        Command::Eq { pres, left, right } => with_pres(pres, |p| {
            let u = p.parse_word(left)?;
            let w = p.parse_word(right)?;
            let answer = order::word_eq(&u, &w, &p, cli.budget)?;
            if cli.oracle {
                let check =
                    oracle_leq(&u, &w, &p, cli.budget)? && oracle_leq(&w, &u, &p, cli.budget)?;
                if check != answer {
                    return Ok(Outcome::OracleDisagreement(format!(
                        "eq: engine says {answer}, oracle says {check}"
                    )));
                }
            }
            Ok(boolean(answer))
        }),
        Command::Leq { pres, left, right } => with_pres(pres, |p| {
            let u = p.parse_word(left)?;
            let w = p.parse_word(right)?;
            let answer = order::leq(&u, &w, &p, cli.budget)?;
            if cli.oracle {
                let check = oracle_leq(&u, &w, &p, cli.budget)?;
                if check != answer {
                    return Ok(Outcome::OracleDisagreement(format!(
                        "leq: engine says {answer}, oracle says {check}"
                    )));
                }
            }
            Ok(boolean(answer))
        }),
        Command::Member {
            pres,
            generators,
            word,
        } => with_pres(pres, |p| {
            let gens = io::parse_generators(&p, generators)?;
            let w = p.parse_word(word)?;
            let answer = order::submonoid_member(&w, &gens, &p, cli.budget)?;
            if cli.oracle {
                let report = oracle::generic_saturate(&saturation::flower(&gens, &p), cli.budget);
                if report.budget_exhausted {
                    return Err(Error::BudgetExhausted);
                }
                let check = report.automaton.accepts(&w);
                if check != answer {
                    return Ok(Outcome::OracleDisagreement(format!(
                        "member: engine says {answer}, oracle says {check}"
                    )));
                }
            }
            Ok(boolean(answer))
        }),
        Command::Conjugate { pres, g1, g2 } => with_pres(pres, |p| {
            let y1 = io::parse_generators(&p, g1)?;
            let y2 = io::parse_generators(&p, g2)?;
            let answer = order::conjugate(&y1, &y2, &p, cli.budget)?;
            if cli.oracle {
                let a1 = oracle_saturate(&saturation::flower(&y1, &p), cli.budget)?;
                let a2 = oracle_saturate(&saturation::flower(&y2, &p), cli.budget)?;
                let check = graph::iso_unrooted(&a1, &a2).is_some();
                if check != answer.is_some() {
                    return Ok(Outcome::OracleDisagreement(format!(
                        "conjugate: engine says {}, oracle says {check}",
                        answer.is_some()
                    )));
                }
            }
            match answer {
                Some(g) => {
                    println!("{}", p.word_string(&g));
                    Ok(Outcome::Yes)
                }
                None => {
                    println!("not conjugate");
                    Ok(Outcome::No)
                }
            }
        }),
        Command::Complex {
            pres,
            generators,
            dot,
            json,
        } => with_pres(pres, |p| {
            let gens = io::parse_generators(&p, generators)?;
            let report = saturation::coset_automaton(&gens, &p, cli.budget);
            if report.budget_exhausted {
                return Err(Error::BudgetExhausted);
            }
            if cli.oracle {
                let reference = oracle_saturate(&saturation::flower(&gens, &p), cli.budget)?;
                if !graph::iso_rooted(&report.automaton, &reference) {
                    return Ok(Outcome::OracleDisagreement("coset automata differ".into()));
                }
            }
            let c = TwoComplex::from_automaton(&report.automaton)?;
            print!("{}", io::complex_to_text(&c));
            if let Some(path) = dot {
                write_file(path, &io::complex_to_dot(&c))?;
            }
            if let Some(path) = json {
                write_file(path, &io::complex_to_json(&c))?;
            }
            Ok(Outcome::Yes)
        }),
        Command::Immerse { pres, from, to, at } => with_pres(pres, |p| {
            let c = read_complex_file(&p, from)?;
            let d = read_complex_file(&p, to)?;
            let found = find_immersion(&c, &d, at.as_deref())?;
            match found {
                Some((v_c, v_d, m)) => {
                    print_morphism(v_c, v_d, &m);
                    Ok(Outcome::Yes)
                }
                None => {
                    println!("none");
                    Ok(Outcome::No)
                }
            }
        }),
        Command::Cover { pres, from, to, at } => with_pres(pres, |p| {
            let c = read_complex_file(&p, from)?;
            let d = match to {
                Some(path) => read_complex_file(&p, path)?,
                None => TwoComplex::bouquet(&p),
            };
            let found = find_immersion(&c, &d, at.as_deref())?;
            match found {
                Some((_, _, m)) => {
                    if complex::is_covering(&c, &d, &m) {
                        println!("covering");
                        Ok(Outcome::Yes)
                    } else {
                        println!("not covering");
                        Ok(Outcome::No)
                    }
                }
                None => {
                    println!("no immersion");
                    Ok(Outcome::No)
                }
            }
        }),
        Command::GroupImage { pres } => with_pres(pres, |p| {
            println!("{}", p.group_image());
            Ok(Outcome::Yes)
        }),
    }
}

fn with_pres(
    arg: &PresentationArg,
    f: impl FnOnce(Presentation) -> Result<Outcome, Error>,
) -> Outcome {
    let text = match fs::read_to_string(&arg.presentation) {
        Ok(text) => text,
        Err(e) => return Outcome::InputError(format!("{}: {e}", arg.presentation.display())),
    };
    match io::parse_presentation(&text).and_then(f) {
        Ok(outcome) => outcome,
        Err(e) => error_outcome(e),
    }
}

fn boolean(answer: bool) -> Outcome {
    println!("{answer}");
    if answer {
        Outcome::Yes
    } else {
        Outcome::No
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents).map_err(|e| Error::Graph(format!("{}: {e}", path.display())))
}

fn read_complex_file(pres: &Presentation, path: &Path) -> Result<TwoComplex, Error> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::Complex(format!("{}: {e}", path.display())))?;
    io::read_complex(Some(pres), &text)
}

fn oracle_saturate(g: &im2c_core::LabeledGraph, budget: u64) -> Result<Automaton, Error> {
    let report = oracle::generic_saturate(g, budget);
    if report.budget_exhausted {
        return Err(Error::BudgetExhausted);
    }
    Ok(report.automaton)
}

fn oracle_leq(u: &Word, w: &Word, pres: &Presentation, budget: u64) -> Result<bool, Error> {
    let sa = oracle_saturate(&saturation::linear_automaton(u, pres), budget)?;
    Ok(sa.accepts(w))
}

/// Prints the automaton summary and handles `--dot`, `--json`, and
/// `--oracle` for the two saturation verbs. `initial` is the unsaturated
/// input graph, used to rerun the reference engine.
fn build_outcome(
    cli: &Cli,
    pres: &Presentation,
    initial: im2c_core::LabeledGraph,
    report: SaturationReport,
    dot: &Option<PathBuf>,
    json: &Option<PathBuf>,
) -> Result<Outcome, Error> {
    if report.budget_exhausted {
        return Err(Error::BudgetExhausted);
    }
    if cli.oracle {
        let reference = oracle_saturate(&initial, cli.budget)?;
        if !graph::iso_rooted(&report.automaton, &reference) {
            return Ok(Outcome::OracleDisagreement(
                "saturation outputs differ".into(),
            ));
        }
    }
    let a = &report.automaton;
    let (ri, rt) = a.roots();
    println!("vertices {}", a.vertex_count());
    println!("root-init {ri}");
    println!("root-term {rt}");
    for &(u, l, v) in a.edges() {
        println!("edge {u} {} {v}", pres.letter_name(l));
    }
    println!("expansions {}", report.expansions_applied);
    println!("folds {}", report.folds_applied);
    if let Some(path) = dot {
        write_file(path, &io::automaton_to_dot(a))?;
    }
    if let Some(path) = json {
        write_file(path, &io::automaton_to_json(a))?;
    }
    Ok(Outcome::Yes)
}

fn parse_basepoints(at: &str) -> Result<(usize, usize), Error> {
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Complex(format!("bad basepoint `{s}`")))
    };
    match at.split_once(':') {
        Some((a, b)) => Ok((parse(a.trim())?, parse(b.trim())?)),
        None => Err(Error::Complex("expected basepoints `V1:V2`".into())),
    }
}

fn find_immersion(
    c: &TwoComplex,
    d: &TwoComplex,
    at: Option<&str>,
) -> Result<Option<(usize, usize, complex::Morphism)>, Error> {
    match at {
        Some(pair) => {
            let (v_c, v_d) = parse_basepoints(pair)?;
            if v_c >= c.vertex_count() || v_d >= d.vertex_count() {
                return Err(Error::Complex("basepoint out of range".into()));
            }
            Ok(complex::immersion(c, d, v_c, v_d).map(|m| (v_c, v_d, m)))
        }
        None => Ok(complex::immersion_from(c, d, 0).map(|(v_d, m)| (0, v_d, m))),
    }
}

fn print_morphism(v_c: usize, v_d: usize, m: &complex::Morphism) {
    println!("basepoints {v_c} -> {v_d}");
    for (u, fu) in m.vertex_map.iter().enumerate() {
        println!("vertex {u} -> {fu}");
    }
    for (e, fe) in m.edge_map.iter().enumerate() {
        println!("edge {e} -> {fe}");
    }
    for (t, ft) in m.cell_map.iter().enumerate() {
        println!("cell {t} -> {ft}");
    }
}
