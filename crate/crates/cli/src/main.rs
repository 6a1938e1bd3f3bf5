//! Exit codes: 0 holds or success, 1 fails, 2 error, 3 limit exceeded.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use utvar::analysis::{
    bicyclic_embed, bicyclic_mul, bicyclic_satisfies, enumerate_free, local_finiteness_report,
    verify_bicyclic_embedding, BicyclicElem, Finiteness, FreeMode, TorsionStatus,
    DEFAULT_TORSION_BOUND,
};
use utvar::variety::{check_identity, oracle_check, OracleBudget, Verdict, ADJAN};
use utvar::word::parse_alphabet;
use utvar::{Error, GElem, Identity, Letter, QAElem, Semiring, Word};

#[derive(Parser)]
#[command(name = "utvar", version, about = "Identities of upper triangular matrix monoids over semirings")]
struct Cli {
    /// Structured JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomised steps; UTVAR_SEED takes precedence.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// tropical, boolean, nat, interval, freeidpt:k, zmod:p or table:FILE
    #[arg(long, short, default_value = "tropical")]
    semiring: String,
    /// Matrix size.
    #[arg(long, short, default_value_t = 2)]
    n: u32,
    /// Alphabet such as `a,b,c`; defaults to the letters in use.
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether an identity `u = v` holds in UT_n(S).
    Check {
        #[command(flatten)]
        common: Common,
        /// The identity, e.g. "xx = xxx"; `adjan` names Adjan's identity.
        identity: String,
        /// Also run the matrix-substitution oracle and report disagreement.
        #[arg(long)]
        oracle: bool,
        /// Random substitutions for the oracle over infinite semirings.
        #[arg(long, default_value_t = 2000)]
        samples: u64,
    },
    /// Print ρ(w), optionally after λ or as its α image.
    Rho {
        #[command(flatten)]
        common: Common,
        /// The word to encode.
        #[arg(long)]
        word: String,
        /// Apply the reduction λ.
        #[arg(long, conflicts_with = "alpha")]
        lambda: bool,
        /// Map into the semidirect product (n = 2).
        #[arg(long)]
        alpha: bool,
    },
    /// λ(ρ(w)), or with --reconstruct invert λ on a printed element.
    Reduce {
        #[command(flatten)]
        common: Common,
        /// A word, or with --reconstruct an element such as "a_1 <1> + ...".
        input: String,
        /// Parse the input as an element and recover a word.
        #[arg(long)]
        reconstruct: bool,
    },
    /// The image of ρ(w) in the semidirect product, for n = 2.
    Alpha {
        #[command(flatten)]
        common: Common,
        /// The word to map.
        word: String,
    },
    /// Enumerate a free object with its Cayley table.
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// Number of generators.
        #[arg(long, default_value_t = 1)]
        rank: usize,
        /// Free semigroup instead of free monoid.
        #[arg(long)]
        semigroup: bool,
        /// Stop with exit code 3 beyond this many elements.
        #[arg(long, default_value_t = 100_000)]
        limit: usize,
        /// Write the Cayley table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the Cayley table as JSON.
        #[arg(long)]
        table_json: Option<PathBuf>,
    },
    /// Local finiteness of the variety generated by UT_n(S).
    Analyze {
        #[command(flatten)]
        common: Common,
        /// Largest exponent tried by the torsion search.
        #[arg(long, default_value_t = DEFAULT_TORSION_BOUND)]
        bound: u32,
    },
    /// The bicyclic monoid and its embedding into UT_2 of the tropical semiring.
    Bicyclic {
        /// Check the embedding on all coordinates up to --bound.
        #[arg(long)]
        verify_embedding: bool,
        #[arg(long, default_value_t = 20)]
        bound: u64,
        /// Multiply elements given as (i,j) or words over p and q.
        #[arg(long, num_args = 1..)]
        mul: Vec<String>,
        /// Print the matrix of an element.
        #[arg(long)]
        embed: Option<String>,
        /// Sample substitutions of bicyclic elements into an identity.
        #[arg(long)]
        identity: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
    },
}

struct Ctx {
    json: bool,
    seed: u64,
}

impl Ctx {
    fn emit(&self, text: String, value: serde_json::Value) {
        let out = if self.json {
            serde_json::to_string_pretty(&value).expect("json")
        } else {
            text
        };
        // a closed pipe (e.g. `| head`) is not an error worth a panic
        let _ = writeln!(std::io::stdout().lock(), "{out}");
    }
}

fn alphabet_for(common: &Common, words: &[&Word]) -> utvar::Result<Vec<Letter>> {
    match &common.alphabet {
        Some(a) => parse_alphabet(a),
        None => {
            let mut all = Word::empty();
            for w in words {
                all = all.concat(w);
            }
            Ok(all.alphabet())
        }
    }
}

fn parse_identity(text: &str) -> utvar::Result<Identity> {
    if text.trim().eq_ignore_ascii_case("adjan") {
        return ADJAN.parse();
    }
    text.parse()
}

fn verdict_code(v: &Verdict) -> u8 {
    if v.holds {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> utvar::Result<u8> {
    let seed = match std::env::var("UTVAR_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("UTVAR_SEED={s} is not an integer")))?,
        Err(_) => cli.seed,
    };
    let ctx = Ctx { json: cli.json, seed };
    match cli.command {
        Command::Check {
            common,
            identity,
            oracle,
            samples,
        } => {
            let s = Semiring::parse(&common.semiring)?;
            let id = parse_identity(&identity)?;
            let v = check_identity(&id, common.n, &s)?;
            let mut value = v.to_json();
            let mut text = v.summary();
            if oracle {
                let budget = OracleBudget {
                    samples,
                    seed: ctx.seed,
                    ..OracleBudget::default()
                };
                let o = oracle_check(&id, common.n, &s, &budget)?;
                let agree = o.holds == v.holds;
                text.push_str(&format!(
                    "\noracle: {} ({}{})",
                    if o.holds { "no counterexample" } else { "counterexample found" },
                    match o.method {
                        utvar::variety::Method::Exhaustive => "exhaustive",
                        _ => "random",
                    },
                    if agree { ", agrees" } else { ", DISAGREES" }
                ));
                value["oracle"] = o.to_json();
                if !agree && !o.holds {
                    // a sound checker never misses a counterexample
                    eprintln!("checker and oracle disagree on {id}");
                    return Ok(2);
                }
            }
            ctx.emit(text, value);
            Ok(verdict_code(&v))
        }
        Command::Rho {
            common,
            word,
            lambda,
            alpha: want_alpha,
        } => {
            let s = Semiring::parse(&common.semiring)?;
            let w: Word = word.parse()?;
            let sigma = alphabet_for(&common, &[&w])?;
            if want_alpha {
                if common.n != 2 {
                    return Err(Error::ShapeMismatch(format!("α needs n = 2, got {}", common.n)));
                }
                let g = GElem::of_word(&w, &sigma, &s)?;
                ctx.emit(g.to_string(), json!({"alpha": g.to_string()}));
                return Ok(0);
            }
            let r = QAElem::rho(&w, common.n, &sigma, &s)?;
            if lambda {
                let l = r.lambda_reduce()?;
                ctx.emit(l.to_string(), l.to_json());
            } else {
                ctx.emit(r.to_string(), r.to_json());
            }
            Ok(0)
        }
        Command::Reduce {
            common,
            input,
            reconstruct,
        } => {
            let s = Semiring::parse(&common.semiring)?;
            if reconstruct {
                let sigma = match &common.alphabet {
                    Some(a) => parse_alphabet(a)?,
                    None => input
                        .chars()
                        .filter(|c| c.is_ascii_alphabetic())
                        .collect::<String>()
                        .parse::<Word>()
                        .map(|w| w.alphabet())?,
                };
                let e = QAElem::parse(&input, common.n, &sigma, &s)?;
                let r = e.lambda_reconstruct()?;
                ctx.emit(r.to_string(), r.to_json());
            } else {
                let w: Word = input.parse()?;
                let sigma = alphabet_for(&common, &[&w])?;
                let l = QAElem::rho(&w, common.n, &sigma, &s)?.lambda_reduce()?;
                ctx.emit(l.to_string(), l.to_json());
            }
            Ok(0)
        }
        Command::Alpha { common, word } => {
            let s = Semiring::parse(&common.semiring)?;
            let w: Word = word.parse()?;
            let sigma = alphabet_for(&common, &[&w])?;
            let g = GElem::of_word(&w, &sigma, &s)?;
            ctx.emit(g.to_string(), json!({"alpha": g.to_string()}));
            Ok(0)
        }
        Command::Enumerate {
            common,
            rank,
            semigroup,
            limit,
            csv,
            table_json,
        } => {
            let s = Semiring::parse(&common.semiring)?;
            let mode = if semigroup { FreeMode::Semigroup } else { FreeMode::Monoid };
            let t = enumerate_free(common.n, &s, rank, mode, limit)?;
            if let Some(p) = csv {
                fs::write(&p, t.to_csv()).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            }
            if let Some(p) = table_json {
                let body = serde_json::to_string_pretty(&t.to_json()).expect("json");
                fs::write(&p, body).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            }
            let kind = if semigroup { "semigroup" } else { "monoid" };
            let mut text = format!(
                "free {kind} of rank {rank} for UT_{}({}): {} elements",
                common.n,
                s.name(),
                t.size()
            );
            for (i, w) in t.words.iter().enumerate() {
                let row: Vec<String> = t.table[i].iter().map(|x| x.to_string()).collect();
                text.push_str(&format!("\n{i}\t{w}\t{}", row.join(" ")));
            }
            ctx.emit(text, t.to_json());
            Ok(0)
        }
        Command::Analyze { common, bound } => {
            let s = Semiring::parse(&common.semiring)?;
            let r = local_finiteness_report(&s, common.n, bound)?;
            let mut text = match (&r.torsion.status, r.verdict) {
                (TorsionStatus::Found { i, j }, _) => format!("torsion ({i},{j}); locally finite"),
                (TorsionStatus::NoneUpTo { .. }, Finiteness::NotLocallyFinite) => {
                    format!("no torsion identity up to {bound}; not locally finite for any n ≥ 1")
                }
                (TorsionStatus::NoneUpTo { .. }, Finiteness::LocallyFinite) => {
                    format!("no torsion identity up to {bound}; locally finite (finite semiring)")
                }
                (TorsionStatus::NoneUpTo { .. }, _) => {
                    format!("no torsion identity up to {bound}; unknown")
                }
            };
            text.push_str(&format!("\ncertified: {}", r.certified));
            if let TorsionStatus::NoneUpTo { falsifiers, .. } = &r.torsion.status {
                for (i, j, a) in falsifiers.iter().take(5) {
                    text.push_str(&format!("\nA^{i} != A^{j} at A = {}", s.fmt_elem(a)));
                }
                if falsifiers.len() > 5 {
                    text.push_str(&format!("\n... {} more pairs", falsifiers.len() - 5));
                }
            }
            if let Some(k) = r.rank_one_size {
                text.push_str(&format!("\nfree monoid of rank 1 for UT_{}: {k} elements", common.n));
            }
            if let Some(k) = r.rank_one_distinct {
                text.push_str(&format!(
                    "\nρ(a^0), ..., ρ(a^20) in UT_{}: {k} distinct",
                    common.n
                ));
            }
            ctx.emit(text, r.to_json());
            Ok(0)
        }
        Command::Bicyclic {
            verify_embedding,
            bound,
            mul,
            embed,
            identity,
            samples,
        } => {
            let mut lines = Vec::new();
            let mut value = json!({});
            let mut code = 0;
            if verify_embedding {
                match verify_bicyclic_embedding(bound) {
                    Ok(k) => {
                        lines.push(format!(
                            "morphism+injectivity verified for i, j, k, l <= {bound} ({k} products)"
                        ));
                        value["embedding"] = json!({"verified": true, "bound": bound, "products": k});
                    }
                    Err(e) => {
                        lines.push(format!("embedding check failed: {e}"));
                        value["embedding"] = json!({"verified": false, "error": e});
                        code = 1;
                    }
                }
            }
            if !mul.is_empty() {
                let elems = mul
                    .iter()
                    .map(|m| m.parse::<BicyclicElem>())
                    .collect::<utvar::Result<Vec<_>>>()?;
                let p = elems.into_iter().fold(BicyclicElem::IDENTITY, bicyclic_mul);
                lines.push(p.to_string());
                value["product"] = json!(p.to_string());
            }
            if let Some(e) = embed {
                let m = bicyclic_embed(e.parse()?);
                lines.push(m.to_string());
                value["matrix"] = json!(m.to_strings());
            }
            if let Some(text) = identity {
                let id = parse_identity(&text)?;
                match bicyclic_satisfies(&id, samples, ctx.seed, 12) {
                    None => {
                        lines.push(format!("{id}: no counterexample in {samples} samples (seed {})", ctx.seed));
                        value["identity"] = json!({"holds": true, "samples": samples, "seed": ctx.seed});
                    }
                    Some(a) => {
                        let shown: Vec<String> = a.iter().map(|(l, e)| format!("{l} = {e}")).collect();
                        lines.push(format!("{id} fails at {}", shown.join(", ")));
                        value["identity"] = json!({
                            "holds": false,
                            "seed": ctx.seed,
                            "witness": a.iter().map(|(l, e)| (l.to_string(), e.to_string())).collect::<std::collections::BTreeMap<_, _>>(),
                        });
                        code = 1;
                    }
                }
            }
            if lines.is_empty() {
                return Err(Error::Parse(
                    "bicyclic needs --verify-embedding, --mul, --embed or --identity".into(),
                ));
            }
            ctx.emit(lines.join("\n"), value);
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::LimitExceeded(_) | Error::BudgetExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}
