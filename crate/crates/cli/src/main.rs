use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bireversible::action::{Caps, CertBounds, Engine, Order, Verdict};
use bireversible::canon::Policy;
use bireversible::catalog::{catalog_caps, enumerate, enumerate_vh4};
use bireversible::complex::parse_squares;
use bireversible::coset::{self, quotient_order, GroupPresentation, Status, Strategy};
use bireversible::ops::{self, derived_family, find_isomorphism, is_bireversible};
use bireversible::pi1::{self, Orientation};
use bireversible::reproduce::{passed, reproduce, EXPERIMENTS};
use bireversible::rf::{self, GeneratorMap};
use bireversible::{corpus, Automaton, Error, Kind, MixedWord, Names, Word};

#[derive(Parser)]
#[command(name = "birev", version, about = "Bireversible automata, square complexes and coset enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Automaton file (`.aut` arrows or `squares:` format) or `bundled:NAME`.
    #[arg(long, short)]
    automaton: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Hlt,
    Felsch,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Iso,
    Inverse,
    Dual,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an automaton and print it back.
    Validate(Input),
    /// Print the dual automaton (states and letters exchanged).
    Dual(Input),
    /// Print the inverse automaton.
    Inverse(Input),
    /// Check bireversibility with both independent methods.
    Bireversible(Input),
    /// Print the eight automata obtained by dualizing and inverting.
    Family(Input),
    /// Find an isomorphism to another automaton.
    Iso {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        other: String,
        /// Letters must map to themselves.
        #[arg(long)]
        fix_alphabet: bool,
    },
    /// Merge equivalent states.
    Minimize(Input),
    /// Image of a letter word under a state word.
    Act {
        #[command(flatten)]
        input: Input,
        /// State word.
        #[arg(long)]
        word: String,
        /// Letter word acted on.
        #[arg(long)]
        on: String,
    },
    /// Section of a state word at a letter word.
    Section {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        word: String,
        #[arg(long)]
        on: String,
    },
    /// Whether a state word is the identity of the group.
    Trivial {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        word: String,
    },
    /// Order of a group element, up to a cutoff.
    Order {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = 100)]
        max: usize,
    },
    /// Orbit of a letter word under the group.
    Orbit {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        word: String,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Transitivity on reduced letter words, level by level.
    Transitive {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 5)]
        max_level: usize,
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Finite / certified infinite / lower bound for the group.
    GroupOrder {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 100_000)]
        max_elements: usize,
        #[arg(long, default_value_t = 24)]
        max_len: usize,
    },
    /// Search for a replication certificate of infiniteness.
    Replicate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        max_k: u32,
        #[arg(long, default_value_t = 4)]
        max_m: u32,
        #[arg(long, default_value_t = 4)]
        max_word_len: usize,
    },
    /// Presentation of the fundamental group of the square complex.
    Presentation(Input),
    /// Normal form of a mixed word in the fundamental group.
    Nf {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        word: String,
        #[arg(long, value_enum, default_value_t = Side::Left)]
        side: Side,
    },
    /// Whether a mixed word is trivial in the fundamental group.
    Pi1Trivial {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        word: String,
    },
    /// Which powers of two words commute in the fundamental group.
    Commutes {
        #[command(flatten)]
        input: Input,
        /// State word.
        #[arg(long)]
        word: String,
        /// Letter word.
        #[arg(long)]
        other: String,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_m: usize,
    },
    /// A periodic tiling read off the arrow graph.
    Tiling(Input),
    /// Tile a rectangle with given left and top edges.
    Rect {
        #[command(flatten)]
        input: Input,
        /// Left edge, a state word.
        #[arg(long)]
        word: String,
        /// Top edge, a letter word.
        #[arg(long)]
        on: String,
    },
    /// List the tiles of the automaton.
    Tiles {
        #[command(flatten)]
        input: Input,
        /// Use the inverse-closed automaton.
        #[arg(long)]
        closed: bool,
    },
    /// Exponent-sum check and abelianization order.
    Abelianization(Input),
    /// Split states by the letters they fix.
    Partition(Input),
    /// Dual exponent of a binary automaton.
    Exponent(Input),
    /// Endomorphism of the fundamental group.
    Endo(Input),
    /// Check that a generator map respects every relator.
    VerifyMap {
        #[command(flatten)]
        input: Input,
        /// `gen -> word` pairs separated by `;`.
        #[arg(long)]
        map: String,
    },
    /// Embedding of the automaton into its own power.
    Embed {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Pairs of letters exchanged by an m-th power.
    Pm {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 3)]
        max_g_len: usize,
        #[arg(long, default_value_t = 3)]
        max_u_len: usize,
        /// Work with the dual automaton.
        #[arg(long)]
        dual: bool,
    },
    /// Non-residual-finiteness report.
    Nrf {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Coset enumeration over the subgroup of a presentation.
    Tc {
        /// Presentation file or `bundled:NAME`.
        #[arg(long, short)]
        presentation: String,
        #[arg(long, value_enum, default_value_t = StrategyArg::Felsch)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = coset::DEFAULT_CAP)]
        max_cosets: usize,
    },
    /// Order of a presentation with extra relators.
    Quotient {
        #[arg(long, short)]
        presentation: String,
        /// Extra relator; may be repeated.
        #[arg(long)]
        relator: Vec<String>,
        #[arg(long, default_value_t = 100_000)]
        max_cosets: usize,
    },
    /// Enumerate bireversible automata up to symmetry.
    Enumerate {
        #[arg(long, default_value_t = 2)]
        states: usize,
        #[arg(long, default_value_t = 2)]
        letters: usize,
        #[arg(long, value_enum, default_value_t = PolicyArg::Dual)]
        policy: PolicyArg,
        /// One-vertex VH complexes with four squares instead.
        #[arg(long)]
        vh4: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a named experiment; `list` shows them all.
    Reproduce {
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Failure {
    code: &'static str,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::Syntax { .. } => "syntax",
            Error::MissingTransition { .. } => "missing_transition",
            Error::DuplicateTransition { .. } => "duplicate_transition",
            Error::UnknownSymbol(_) => "unknown_symbol",
            Error::BadInverseClosure(_) => "bad_inverse_closure",
            Error::NotInvertible { .. } => "not_invertible",
            Error::NotBireversible => "not_bireversible",
            Error::InternalDisagreement { .. } => "internal_disagreement",
            Error::AlphabetMismatch => "alphabet_mismatch",
            Error::NameCollision(_) => "name_collision",
            Error::OrbitCapExceeded(_) => "orbit_cap_exceeded",
            Error::NotBinary => "not_binary",
            Error::DichotomyViolation(_) => "dichotomy_violation",
            Error::NotApplicable(_) => "not_applicable",
            Error::SizeTooLarge(_) => "size_too_large",
            Error::UnknownExperiment(_) => "unknown_experiment",
            Error::KindMismatch(_) => "kind_mismatch",
        };
        Failure { code, msg: e.to_string() }
    }
}

fn fail(code: &'static str, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

type Out = Result<(String, bool), Failure>;

fn read_source(source: &str) -> Result<String, Failure> {
    std::fs::read_to_string(source).map_err(|e| fail("io", format!("{source}: {e}")))
}

fn load(source: &str) -> Result<Automaton, Failure> {
    if let Some(name) = source.strip_prefix("bundled:") {
        return Ok(corpus::automaton(name)?);
    }
    let text = read_source(source)?;
    if text.trim().is_empty() {
        return Err(fail("empty_input", format!("{source}: no automaton")));
    }
    let squares = text.lines().any(|l| l.split('#').next().unwrap_or("").trim() == "squares:");
    Ok(if squares { parse_squares(&text)? } else { Automaton::parse(&text)? })
}

fn load_presentation(source: &str) -> Result<GroupPresentation, Failure> {
    let text = match source.strip_prefix("bundled:") {
        Some(name) => corpus::presentation_source(name)
            .ok_or_else(|| fail("unknown_symbol", format!("no bundled presentation `{name}`")))?
            .to_string(),
        None => read_source(source)?,
    };
    if text.trim().is_empty() {
        return Err(fail("empty_input", format!("{source}: no presentation")));
    }
    Ok(GroupPresentation::parse(&text)?)
}

fn render(a: &Automaton, format: Format) -> String {
    match format {
        Format::Text => a.to_text(),
        Format::Dot => a.to_dot(),
        Format::Tsv => {
            let mut out = String::from("from\tinput\toutput\tto\n");
            for r in a.arrows() {
                let n = |s| a.sym_name(s);
                let _ = writeln!(out, "{}\t{}\t{}\t{}", n(r.from), n(r.input), n(r.output), n(r.to));
            }
            out
        }
    }
}

fn engine(a: &Automaton) -> Result<Engine, Failure> {
    Ok(Engine::new(a)?)
}

fn state_word(a: &Automaton, text: &str) -> Result<Word, Failure> {
    Ok(a.names().parse_word(Kind::State, text)?)
}

fn letter_word(a: &Automaton, text: &str) -> Result<Word, Failure> {
    Ok(a.names().parse_word(Kind::Letter, text)?)
}

fn mixed(a: &Automaton, text: &str) -> Result<MixedWord, Failure> {
    Ok(a.names().parse_mixed(text)?)
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}

fn pairs(items: &[(String, String)]) -> String {
    lines(items.iter().map(|(a, b)| format!("{a} -> {b}")))
}

fn sym_words(names: &Names, items: &[(bireversible::Sym, Word)]) -> String {
    items
        .iter()
        .map(|(s, w)| format!("{} -> {}", names.sym_name(*s), names.fmt_word(w)))
        .collect::<Vec<_>>()
        .join("; ")
}

fn ok(s: String) -> Out {
    Ok((s, true))
}

fn run(cmd: Command) -> Out {
    match cmd {
        Command::Validate(i) => {
            let a = load(&i.automaton)?;
            if i.format == Format::Text {
                ok(format!(
                    "ok: {} states, {} letters, {}\n",
                    a.num_states(),
                    a.num_letters(),
                    if a.is_signed() { "signed" } else { "directed" }
                ))
            } else {
                ok(render(&a, i.format))
            }
        }
        Command::Dual(i) => ok(render(&ops::dual(&load(&i.automaton)?), i.format)),
        Command::Inverse(i) => ok(render(&ops::inverse(&load(&i.automaton)?)?, i.format)),
        Command::Bireversible(i) => ok(format!("{}\n", is_bireversible(&load(&i.automaton)?)?)),
        Command::Family(i) => {
            let a = load(&i.automaton)?;
            let mut out = String::new();
            for (d, b) in derived_family(&a) {
                let _ = writeln!(out, "== {}", d.label());
                match b {
                    Ok(b) => out.push_str(&render(&b, i.format)),
                    Err(e) => {
                        let _ = writeln!(out, "undefined: {e}");
                    }
                }
            }
            ok(out)
        }
        Command::Iso { input, other, fix_alphabet } => {
            let a = load(&input.automaton)?;
            let b = load(&other)?;
            ok(match find_isomorphism(&a, &b, fix_alphabet) {
                Some(iso) => pairs(&iso.describe(&a, &b)),
                None => "none\n".into(),
            })
        }
        Command::Minimize(i) => ok(render(&ops::minimize(&load(&i.automaton)?).0, i.format)),
        Command::Act { input, word, on } => {
            let a = load(&input.automaton)?;
            let e = engine(&a)?;
            let w = e.act(&state_word(&a, &word)?, &letter_word(&a, &on)?);
            ok(format!("{}\n", a.names().fmt_word(&w)))
        }
        Command::Section { input, word, on } => {
            let a = load(&input.automaton)?;
            let e = engine(&a)?;
            let w = e.section(&state_word(&a, &word)?, &letter_word(&a, &on)?);
            ok(format!("{}\n", a.names().fmt_word(&w)))
        }
        Command::Trivial { input, word } => {
            let a = load(&input.automaton)?;
            ok(format!("{}\n", engine(&a)?.is_trivial(&state_word(&a, &word)?)))
        }
        Command::Order { input, word, max } => {
            let a = load(&input.automaton)?;
            ok(match engine(&a)?.element_order(&state_word(&a, &word)?, max) {
                Order::Exact(n) => format!("{n}\n"),
                Order::AtLeast(n) => format!("> {n}\n"),
            })
        }
        Command::Orbit { input, word, max_size } => {
            let a = load(&input.automaton)?;
            let e = engine(&a)?;
            let gens: Vec<Word> = e.generators().into_iter().map(Word::single).collect();
            let orbit = e.orbit(&letter_word(&a, &word)?, &gens, max_size)?;
            let mut out = format!("size: {}\n", orbit.len());
            out.push_str(&lines(orbit.iter().map(|w| a.names().fmt_word(w))));
            ok(out)
        }
        Command::Transitive { input, max_level, max_size } => {
            let a = load(&input.automaton)?;
            let levels = engine(&a)?.is_level_transitive_reduced(max_level, max_size)?;
            let all = levels.iter().all(|&b| b);
            let mut out = lines(levels.iter().enumerate().map(|(n, b)| format!("level {n}: {b}")));
            let _ = writeln!(out, "transitive: {all}");
            ok(out)
        }
        Command::GroupOrder { input, max_elements, max_len } => {
            let a = load(&input.automaton)?;
            let v = engine(&a)?.group_order(Caps { max_elements, max_len });
            let mut out = format!("{}\n", v.summary());
            if let Verdict::InfiniteCertified { cert } = &v {
                let _ = writeln!(out, "certificate: k={} m={}", cert.k, cert.m);
            }
            ok(out)
        }
        Command::Replicate { input, max_k, max_m, max_word_len } => {
            let a = load(&input.automaton)?;
            let e = engine(&a)?;
            let bounds = CertBounds { max_k, max_m, max_word_len, ..CertBounds::default() };
            ok(match e.replication_certificate(bounds) {
                None => "none\n".into(),
                Some(c) => {
                    let n = a.names();
                    format!(
                        "k: {}\nm: {}\nsigma: {}\ntau: {}\npumped_state: {}\nbase_word: {}\norbit_size: {}\nverified: {}\n",
                        c.k,
                        c.m,
                        sym_words(n, &c.sigma),
                        sym_words(n, &c.tau),
                        n.sym_name(c.pumped_state),
                        n.fmt_word(&c.base_word),
                        c.orbit_size,
                        e.verify_certificate(&c)
                    )
                }
            })
        }
        Command::Presentation(i) => {
            let a = load(&i.automaton)?;
            let p = pi1::presentation(&a);
            ok(match i.format {
                Format::Tsv => lines(p.relators.iter().map(|r| p.names.fmt_mixed(r))),
                _ => p.to_text(),
            })
        }
        Command::Nf { input, word, side } => {
            let a = load(&input.automaton)?;
            let e = engine(&a)?;
            let o = match side {
                Side::Left => Orientation::Left,
                Side::Right => Orientation::Right,
            };
            ok(format!("{}\n", pi1::normal_form(&e, &mixed(&a, &word)?, o).describe(a.names())))
        }
        Command::Pi1Trivial { input, word } => {
            let a = load(&input.automaton)?;
            ok(format!("{}\n", pi1::pi1_is_trivial(&engine(&a)?, &mixed(&a, &word)?)))
        }
        Command::Commutes { input, word, other, max_n, max_m } => {
            let a = load(&input.automaton)?;
            let e = engine(&a)?;
            let c = pi1::commutes(&e, &state_word(&a, &word)?, &letter_word(&a, &other)?, max_n, max_m);
            let mut out = String::new();
            for (n, row) in c.matrix.iter().enumerate() {
                let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
                let _ = writeln!(out, "n={}: {}", n + 1, cells.join(" "));
            }
            let _ = writeln!(out, "no_commutation: {}", c.no_commutation());
            ok(out)
        }
        Command::Tiling(i) => {
            let a = load(&i.automaton)?;
            let t = pi1::periodic_tiling(&a);
            let n = a.names();
            let cycle: Vec<String> =
                t.cycle.iter().map(|&(s, x)| format!("({},{})", n.sym_name(s), n.sym_name(x))).collect();
            ok(format!(
                "cycle: {}\nw: {}\nu: {}\ncommute: {}\n",
                cycle.join(" "),
                n.fmt_word(&t.w),
                n.fmt_word(&t.u),
                t.verify(&engine(&a)?)
            ))
        }
        Command::Rect { input, word, on } => {
            let a = load(&input.automaton)?;
            let e = engine(&a)?;
            let top = letter_word(&a, &on)?;
            let r = pi1::tile_rectangle(&e, &state_word(&a, &word)?, &top);
            let mut out = r.render(a.names(), &top);
            let _ = writeln!(out, "bottom: {}", a.names().fmt_word(&r.bottom));
            let _ = writeln!(out, "right: {}", a.names().fmt_word(&r.right));
            ok(out)
        }
        Command::Tiles { input, closed } => {
            let a = load(&input.automaton)?;
            let e = if closed { Some(engine(&a)?) } else { None };
            ok(pi1::tiles_to_text(a.names(), &pi1::tileset(&a, e.as_ref())))
        }
        Command::Abelianization(i) => {
            let a = load(&i.automaton)?;
            let p = pi1::presentation(&a);
            let order = coset::abelianization_order(&GroupPresentation::from_pi1(&p));
            ok(format!(
                "exponent_sums_balanced: {}\norder: {}\n",
                pi1::abelianization_check(&p),
                order.map_or("infinite".to_string(), |n| n.to_string())
            ))
        }
        Command::Partition(i) => {
            let a = load(&i.automaton)?;
            let p = rf::stabilizer_partition(&engine(&a)?)?;
            let show = |v: &[bireversible::Sym]| v.iter().map(|&s| a.sym_name(s)).collect::<Vec<_>>().join(" ");
            ok(format!("plus: {}\nminus: {}\nrest: {}\n", show(&p.plus), show(&p.minus), show(&p.rest)))
        }
        Command::Exponent(i) => ok(format!("{}\n", rf::dual_exponent(&engine(&load(&i.automaton)?)?)?)),
        Command::Endo(i) => {
            let a = load(&i.automaton)?;
            let e = engine(&a)?;
            let endo = rf::build_endomorphism(&e)?;
            let mut out = pairs(&endo.map.describe(a.names(), &pi1::presentation(&a)));
            let _ = writeln!(out, "construction: {}", endo.construction);
            let _ = writeln!(out, "exponent: {}", endo.exponent);
            let _ = writeln!(out, "relators_respected: {}", rf::verify_morphism(&e, &endo.map).ok());
            ok(out)
        }
        Command::VerifyMap { input, map } => {
            let a = load(&input.automaton)?;
            let m = GeneratorMap::parse(a.names(), &map)?;
            let c = rf::verify_morphism(&engine(&a)?, &m);
            ok(match c.failing_relator {
                None => format!("true ({} relators)\n", c.relators_checked),
                Some(r) => format!("false (fails on {})\n", a.names().fmt_mixed(&r)),
            })
        }
        Command::Embed { input, max_len } => {
            let a = load(&input.automaton)?;
            ok(match rf::subautomaton_embedding(&engine(&a)?, max_len) {
                Some(emb) => format!("{}\n", sym_words(a.names(), &emb.images)),
                None => "none\n".into(),
            })
        }
        Command::Pm { input, m, max_g_len, max_u_len, dual } => {
            let mut a = load(&input.automaton)?;
            if dual {
                a = ops::dual(&a);
            }
            let e = engine(&a)?;
            let pm = rf::compute_pm(&e, m, max_g_len, max_u_len);
            let n = a.names();
            let mut out = String::new();
            for (&(x, y), (g, u)) in &pm.pairs {
                let _ = writeln!(
                    out,
                    "({}, {})\tg={}\tu={}",
                    n.sym_name(x),
                    n.sym_name(y),
                    n.fmt_word(g),
                    n.fmt_word(u)
                );
            }
            let _ = writeln!(out, "pairs: {} verified: {}", pm.pairs.len(), pm.verify(&e));
            ok(out)
        }
        Command::Nrf { input, seed } => {
            let a = load(&input.automaton)?;
            let r = rf::nrf_report(&engine(&a)?, catalog_caps(), seed);
            ok(r.to_record(&a).to_text())
        }
        Command::Tc { presentation, strategy, max_cosets } => {
            let p = load_presentation(&presentation)?;
            let s = match strategy {
                StrategyArg::Hlt => Strategy::Hlt,
                StrategyArg::Felsch => Strategy::Felsch,
            };
            let t = coset::enumerate(&p, s, max_cosets);
            let status = match t.status {
                Status::Closed => format!("closed\nindex: {}\nverified: {}", t.rows.len(), t.verify(&p)),
                Status::Capped => format!("capped\nlive: {}", t.rows.len()),
            };
            ok(format!("status: {status}\ndefined: {}\nmax_live: {}\n", t.defined, t.max_live))
        }
        Command::Quotient { presentation, relator, max_cosets } => {
            let p = load_presentation(&presentation)?;
            let extra = relator.iter().map(|r| p.parse_word(r)).collect::<Result<Vec<_>, _>>()?;
            ok(match quotient_order(&p, &extra, max_cosets) {
                Order::Exact(n) => format!("{n}\n"),
                Order::AtLeast(n) => format!("> {n}\n"),
            })
        }
        Command::Enumerate { states, letters, policy, vh4, format } => {
            if vh4 {
                let c = enumerate_vh4(catalog_caps());
                return ok(match format {
                    Format::Tsv => c.to_tsv(),
                    _ => format!("{}\n", c.summary()),
                });
            }
            let policy = match policy {
                PolicyArg::Iso => Policy::Iso,
                PolicyArg::Inverse => Policy::Inverse,
                PolicyArg::Dual => Policy::Dual,
            };
            let c = enumerate(states, letters, policy, catalog_caps())?;
            ok(match format {
                Format::Tsv => c.to_tsv(),
                _ => format!("{}\n", c.summary()),
            })
        }
        Command::Reproduce { name, seed } => {
            if name == "list" {
                return ok(lines(EXPERIMENTS.iter().map(|x| format!("{}\t{}", x.name, x.about))));
            }
            let names: Vec<&str> = if name == "all" {
                EXPERIMENTS.iter().map(|x| x.name).collect()
            } else {
                vec![name.as_str()]
            };
            let mut out = String::new();
            let mut all_passed = true;
            for n in names {
                let t0 = Instant::now();
                let r = reproduce(n, seed)?;
                eprintln!("{n}: {:.2}s", t0.elapsed().as_secs_f64());
                all_passed &= passed(&r);
                out.push_str(&r.to_text());
                out.push('\n');
            }
            Ok((out, all_passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, success)) => {
            print!("{out}");
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error[{}]: {}", f.code, f.msg);
            ExitCode::from(2)
        }
    }
}
