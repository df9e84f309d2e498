//! `daha`: evaluate generator words in either representation and run the
//! verification suites.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage or input error.

use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use daha::verify::{
    monomial_box, poly_relation_suite, random_words, random_words_of_length, single_generator_words,
    skein_relation_suite,
};
use daha::{
    averaging_s, check_intertwiner, check_subrep_closure, parse_word, BigInt, CheckReport, Coefficient, GeneratorWord,
    LaurentPoly, PolynomialRep, Representation, SkeinElement, SkeinRep,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "daha",
    version,
    about = "Exact computation in the double affine Hecke algebra"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for the check suites (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Arbitrary-precision coefficients instead of overflow-checked i64.
    #[arg(long, global = true)]
    bigint: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Rep {
    Poly,
    Skein,
}

impl Rep {
    fn name(self) -> &'static str {
        match self {
            Rep::Poly => "poly",
            Rep::Skein => "skein",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Intertwiner,
    Subrep,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Intertwiner => "intertwiner",
            Suite::Subrep => "subrep",
            Suite::All => "all",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apply a word to an element and print the canonical result.
    Eval {
        #[arg(long, value_enum)]
        rep: Rep,
        #[arg(long)]
        kappa: usize,
        /// Word such as "s1*y1^-1*x2"; empty means the identity.
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        /// Element such as "X1^2 - s*X2" or "c^4*(a1^-1*a2^2,[1 2])".
        #[arg(long, allow_hyphen_values = true)]
        elem: Option<String>,
        /// Substitute d = s before printing.
        #[arg(long)]
        d_eq_s: bool,
        /// Evaluate every `WORD ; ELEMENT` line of a file.
        #[arg(long, conflicts_with_all = ["word", "elem"])]
        file: Option<PathBuf>,
    },
    /// Run verification suites; exits 1 if any case fails.
    Check {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        kappa: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Exponents range over [-bound, bound].
        #[arg(long, default_value_t = 2)]
        bound: i32,
        /// Number of random words.
        #[arg(long, default_value_t = 50)]
        words: usize,
        /// Maximum random word length.
        #[arg(long, default_value_t = 4)]
        word_len: usize,
    },
    /// Time random-word actions in both representations.
    Bench {
        #[arg(long)]
        kappa: usize,
        #[arg(long)]
        word_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        words: usize,
    },
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl ToString) -> Self {
        Failure {
            code: 2,
            message: message.to_string(),
        }
    }
}

impl From<daha::Error> for Failure {
    fn from(e: daha::Error) -> Self {
        Failure::input(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    panic::set_hook(Box::new(|_| {}));
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| {
        if cli.bigint {
            run::<BigInt>(&cli)
        } else {
            run::<i64>(&cli)
        }
    }));
    let outcome = outcome.unwrap_or_else(|payload| {
        let msg = payload
            .downcast_ref::<&str>()
            .map(|s| s.to_string())
            .or_else(|| payload.downcast_ref::<String>().cloned())
            .unwrap_or_else(|| "internal error".to_string());
        let hint = if msg.contains("coefficient overflow") {
            "; rerun with --bigint"
        } else {
            ""
        };
        Err(Failure {
            code: if matches!(cli.command, Command::Check { .. }) {
                1
            } else {
                2
            },
            message: format!("{msg}{hint}"),
        })
    });
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn coefficient_name(cli: &Cli) -> &'static str {
    if cli.bigint {
        "bigint"
    } else {
        "i64"
    }
}

fn run<C: Coefficient>(cli: &Cli) -> Result<u8, Failure> {
    match &cli.command {
        Command::Eval {
            rep,
            kappa,
            word,
            elem,
            d_eq_s,
            file,
        } => {
            let jobs = match file {
                Some(path) => read_jobs(path)?,
                None => {
                    let elem = elem
                        .clone()
                        .ok_or_else(|| Failure::input("--elem is required without --file"))?;
                    vec![(word.clone().unwrap_or_default(), elem)]
                }
            };
            for (word, elem) in jobs {
                let output = eval::<C>(*rep, *kappa, &word, &elem, *d_eq_s)?;
                match cli.format {
                    Format::Text => println!("{output}"),
                    Format::JsonLines => println!(
                        "{}",
                        json!({"record": "eval", "rep": rep.name(), "kappa": kappa, "word": word,
                               "input": elem, "d_eq_s": d_eq_s, "output": output})
                    ),
                }
            }
            Ok(0)
        }
        Command::Check {
            suite,
            kappa,
            seed,
            bound,
            words,
            word_len,
        } => {
            let header = json!({"record": "header", "command": "check", "suite": suite.name(), "kappa": kappa,
                                "seed": seed, "bound": bound, "words": words, "word_len": word_len,
                                "coefficients": coefficient_name(cli)});
            emit_header(cli.format, &header);
            let reports = check::<C>(*suite, *kappa, *seed, *bound, *words, *word_len)?;
            let failures: usize = reports.iter().map(|r| r.failures).sum();
            for r in &reports {
                match cli.format {
                    Format::Text => println!("{r}"),
                    Format::JsonLines => {
                        let mut v = serde_json::to_value(r).expect("report serializes");
                        v["record"] = json!("check");
                        println!("{v}");
                    }
                }
            }
            match cli.format {
                Format::Text => println!("# checks={} failures={failures}", reports.len()),
                Format::JsonLines => {
                    println!(
                        "{}",
                        json!({"record": "summary", "checks": reports.len(), "failures": failures})
                    )
                }
            }
            Ok(if failures == 0 { 0 } else { 1 })
        }
        Command::Bench {
            kappa,
            word_len,
            seed,
            words,
        } => {
            let header = json!({"record": "header", "command": "bench", "kappa": kappa, "seed": seed,
                                "words": words, "word_len": word_len, "coefficients": coefficient_name(cli)});
            emit_header(cli.format, &header);
            bench::<C>(cli.format, *kappa, *word_len, *seed, *words)?;
            Ok(0)
        }
    }
}

fn emit_header(format: Format, header: &Value) {
    match format {
        Format::Text => {
            let fields: Vec<String> = header
                .as_object()
                .expect("header is an object")
                .iter()
                .filter(|(k, _)| *k != "record")
                .map(|(k, v)| format!("{k}={}", v.as_str().map_or_else(|| v.to_string(), str::to_string)))
                .collect();
            println!("# {}", fields.join(" "));
        }
        Format::JsonLines => println!("{header}"),
    }
}

/// Lines of the form `WORD ; ELEMENT`; blank lines and `#` comments are skipped.
fn read_jobs(path: &PathBuf) -> Result<Vec<(String, String)>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    text.lines()
        .enumerate()
        .map(|(n, line)| (n, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'))
        .map(|(n, line)| {
            line.split_once(';')
                .map(|(w, e)| (w.trim().to_string(), e.trim().to_string()))
                .ok_or_else(|| Failure::input(format!("{}:{}: expected `WORD ; ELEMENT`", path.display(), n + 1)))
        })
        .collect()
}

fn eval<C: Coefficient>(rep: Rep, kappa: usize, word: &str, elem: &str, d_eq_s: bool) -> Result<String, Failure> {
    let w = parse_word(word, kappa)?;
    Ok(match rep {
        Rep::Poly => {
            let f = LaurentPoly::<C>::parse(elem, kappa)?;
            let out = PolynomialRep::new(kappa)?.act_word(&w, &f)?;
            if d_eq_s { out.substitute_d_eq_s() } else { out }.to_string()
        }
        Rep::Skein => {
            let v = SkeinElement::<C>::parse(elem, kappa)?;
            let out = SkeinRep::new(kappa)?.act_word(&w, &v)?;
            if d_eq_s { out.substitute_d_eq_s() } else { out }.to_string()
        }
    })
}

fn check<C: Coefficient>(
    suite: Suite,
    kappa: usize,
    seed: u64,
    bound: i32,
    words: usize,
    word_len: usize,
) -> Result<Vec<CheckReport>, Failure> {
    if bound < 0 {
        return Err(Failure::input("--bound must be nonnegative"));
    }
    PolynomialRep::new(kappa)?;
    let mut reports = Vec::new();
    let random = || random_words(kappa, words, word_len, seed);
    let monomials = || monomial_box::<C>(kappa, -bound, bound);
    if matches!(suite, Suite::Relations | Suite::All) {
        reports.extend(poly_relation_suite::<C>(kappa, -bound, bound)?);
        reports.extend(skein_relation_suite::<C>(kappa, -bound, bound)?);
    }
    if matches!(suite, Suite::Intertwiner | Suite::All) {
        let mut report = check_intertwiner(kappa, &single_generator_words(kappa), &monomials());
        report.label = "intertwiner single generators".to_string();
        reports.push(report);
        let mut report = check_intertwiner(kappa, &random(), &monomials()).with_seed(seed);
        report.label = "intertwiner random words".to_string();
        reports.push(report);
    }
    if matches!(suite, Suite::Subrep | Suite::All) {
        reports.push(check_subrep_closure(kappa, &random(), &monomials()).with_seed(seed));
    }
    Ok(reports)
}

fn bench<C: Coefficient>(
    format: Format,
    kappa: usize,
    word_len: usize,
    seed: u64,
    count: usize,
) -> Result<(), Failure> {
    let words = random_words_of_length(kappa, count, word_len, seed);
    let poly = PolynomialRep::new(kappa)?;
    let skein = SkeinRep::new(kappa)?;
    for (index, w) in words.iter().enumerate() {
        let start = LaurentPoly::<C>::one(kappa);
        let (micros, terms) = time_word(&poly, w, start, LaurentPoly::len)?;
        print_bench(format, "poly", index, w, micros, &terms);
        let start = averaging_s(&LaurentPoly::<C>::one(kappa))?;
        let (micros, terms) = time_word(&skein, w, start, SkeinElement::len)?;
        print_bench(format, "skein", index, w, micros, &terms);
    }
    Ok(())
}

/// Applies `w` letter by letter, rightmost first, recording term counts.
fn time_word<C: Coefficient, R: Representation<C>>(
    rep: &R,
    w: &GeneratorWord,
    start: R::Element,
    len: impl Fn(&R::Element) -> usize,
) -> Result<(u128, Vec<usize>), Failure> {
    let clock = Instant::now();
    let mut v = start;
    let mut terms = vec![len(&v)];
    for &letter in w.letters().iter().rev() {
        v = rep.act_letter(letter, &v)?;
        terms.push(len(&v));
    }
    Ok((clock.elapsed().as_micros(), terms))
}

fn print_bench(format: Format, rep: &str, index: usize, w: &GeneratorWord, micros: u128, terms: &[usize]) {
    match format {
        Format::Text => println!(
            "{rep} word={index} len={} wall_us={micros} terms={} word={w}",
            w.len(),
            terms.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        ),
        Format::JsonLines => println!(
            "{}",
            json!({"record": "bench", "rep": rep, "index": index, "word": w.to_string(), "len": w.len(),
                   "wall_us": micros, "terms": terms})
        ),
    }
}
