//! `numsg`: command line access to the numerical semigroup library.
//!
//! Exit codes: 0 success, 2 survey counterexample, 64 usage error,
//! 65 domain error (error name on stderr), 74 I/O failure.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use numsg::cyclotomy::{
    betti_factor_attempt, depth_height, exponent_sequence_full, hilbert_numerator,
    hilbert_truncated, is_cyclotomic, semigroup_polynomial,
};
use numsg::intpoly::{is_kronecker_graeffe, kronecker_factor};
use numsg::relations::{default_w_max, feen_check, is_polynomially_related};
use numsg::semigroup::parse_generators;
use numsg::structure::{
    binomial_depth_audit, binomial_semigroup, family_sym1, family_sym2, gluing_decompositions,
    is_complete_intersection, is_free_arrangement, SmoothSequence,
};
use numsg::survey::{height1_classify, run_survey};
use numsg::{CyclotomicFactorization, Error, IntPolynomial, NumericalSemigroup};

const EXIT_USAGE: u8 = 64;
const EXIT_DOMAIN: u8 = 65;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(
    name = "numsg",
    version,
    about = "Numerical semigroups and their semigroup polynomials"
)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Gens {
    /// Generators, comma or space separated.
    #[arg(long, num_args = 1.., required = true)]
    gens: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyName {
    Sym1,
    Sym2,
    Binomial,
}

#[derive(Subcommand)]
enum Command {
    /// Frobenius number, genus, multiplicity, gaps and symmetry type.
    Info(Gens),
    /// The semigroup polynomial P_S = (1 - x) H_S.
    Poly(Gens),
    /// Whether P_S is a product of cyclotomic polynomials, with the factors.
    Cyclotomic(Gens),
    /// Cyclotomic exponents e_1..e_J of P_S.
    Exponents {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..=100_000))]
        limit: u64,
    },
    /// Minimal d, h with P_S dividing (x^d - 1)^h.
    DepthHeight(Gens),
    /// Complete intersection test with a gluing tree witness.
    Ci(Gens),
    /// Free (smooth) arrangement of the generators.
    Free {
        #[command(flatten)]
        gens: Gens,
        /// Check this ordering instead of searching.
        #[arg(long, num_args = 1..)]
        arrangement: Option<Vec<String>>,
    },
    /// Betti elements and the attempted Betti factorization of P_S.
    Betti(Gens),
    /// Apéry set with respect to m.
    Apery {
        #[command(flatten)]
        gens: Gens,
        #[arg(short, long, value_parser = clap::value_parser!(u64).range(1..=1_000_000))]
        m: u64,
    },
    /// Pseudo-Frobenius numbers.
    PseudoFrobenius(Gens),
    /// Number of factorizations of n over the minimal generators.
    Denumerant {
        #[command(flatten)]
        gens: Gens,
        #[arg(short, long)]
        n: u64,
    },
    /// Coefficient of x^n in the Hilbert numerator.
    Chi {
        #[command(flatten)]
        gens: Gens,
        #[arg(short, long)]
        n: u64,
    },
    /// Hilbert series truncated after x^N, and its numerator.
    Hilbert {
        #[command(flatten)]
        gens: Gens,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(0..=1_000_000))]
        terms: u64,
    },
    /// Kronecker test for an arbitrary polynomial given in text form.
    Kronecker {
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// All relations H_S(x^w) f = H_T with w <= wmax.
    Related {
        #[arg(long, num_args = 1.., required = true)]
        source: Vec<String>,
        #[arg(long, num_args = 1.., required = true)]
        target: Vec<String>,
        #[arg(long)]
        wmax: Option<u64>,
    },
    /// A member of a named family: sym1/sym2 take m,q; binomial takes a,b,m.
    Family {
        #[arg(long, value_enum)]
        name: FamilyName,
        #[arg(long, num_args = 1.., required = true)]
        params: Vec<String>,
    },
    /// Cyclotomic versus complete intersection over symmetric semigroups, streamed to JSONL.
    Survey {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=99))]
        max_frobenius: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Cyclotomic semigroups of height one and the given depth.
    ClassifyHeight1 {
        #[arg(long)]
        depth: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(0..=30))]
        genus_bound: u64,
    },
}

/// Text and JSON renderings of one result.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            code: 0,
        }
    }
}

fn parse_list(parts: &[String]) -> Result<Vec<u64>, Error> {
    parse_generators(&parts.join(" "))
}

fn dedupe(mut gens: Vec<u64>, label: &str) -> Vec<u64> {
    let before = gens.len();
    let mut seen = std::collections::HashSet::new();
    gens.retain(|g| seen.insert(*g));
    if gens.len() != before {
        eprintln!("warning: duplicate {label} removed");
    }
    gens
}

fn semigroup(parts: &[String]) -> Result<NumericalSemigroup, Error> {
    NumericalSemigroup::from_generators(&dedupe(parse_list(parts)?, "generators"))
}

fn list(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn factors_text(fac: &CyclotomicFactorization) -> String {
    if fac.is_empty() {
        return "1".into();
    }
    fac.factors
        .iter()
        .map(|(d, e)| {
            if *e == 1 {
                format!("Phi{d}")
            } else {
                format!("Phi{d}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn factors_json(fac: &CyclotomicFactorization) -> Value {
    serde_json::to_value(&fac.factors).expect("factors serialize")
}

fn smooth_output(seq: Option<SmoothSequence>) -> Output {
    match seq {
        Some(seq) => {
            let p = seq.leher_polynomial();
            Output::new(
                format!(
                    "free: true\narrangement: {}\nratios: {}\nfrobenius: {}\npolynomial: {p}",
                    list(seq.terms()),
                    list(&seq.ratios()),
                    seq.frobenius_smooth()
                ),
                json!({
                    "free": true,
                    "arrangement": seq.terms(),
                    "ratios": seq.ratios(),
                    "frobenius": seq.frobenius_smooth(),
                    "polynomial": p.to_string(),
                }),
            )
        }
        None => Output::new("free: false", json!({"free": false})),
    }
}

/// Heap's algorithm over the generator orderings, stopping at the first smooth one.
fn find_free_arrangement(gens: &[u64]) -> Result<Option<SmoothSequence>, Error> {
    if gens.len() > 10 {
        return Err(Error::TooLarge(format!(
            "{} generators to arrange",
            gens.len()
        )));
    }
    let mut a = gens.to_vec();
    if let Some(seq) = is_free_arrangement(&a)? {
        return Ok(Some(seq));
    }
    let n = a.len();
    let mut c = vec![0; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            a.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
            if let Some(seq) = is_free_arrangement(&a)? {
                return Ok(Some(seq));
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(None)
}

fn run(command: Command) -> Result<Output, Error> {
    Ok(match command {
        Command::Info(g) => {
            let s = semigroup(&g.gens)?;
            let d = s.descriptors();
            let symmetry = s.symmetry_type();
            let mut value = serde_json::to_value(&d).expect("descriptors serialize");
            value["symmetry"] = serde_json::to_value(symmetry).expect("symmetry serializes");
            Output::new(
                format!(
                    "generators={}\nF={}\ngenus={}\nmultiplicity={}\nembedding_dimension={}\ngaps={}\nsymmetry={symmetry:?}",
                    list(&d.generators),
                    d.frobenius,
                    d.genus,
                    d.multiplicity,
                    d.embedding_dimension,
                    list(&d.gaps)
                ),
                value,
            )
        }
        Command::Poly(g) => {
            let p = semigroup_polynomial(&semigroup(&g.gens)?);
            let json = json!({"polynomial": p.to_string(), "coefficients": p});
            Output::new(p.to_string(), json)
        }
        Command::Cyclotomic(g) => match is_cyclotomic(&semigroup(&g.gens)?) {
            Some(fac) => Output::new(
                format!("cyclotomic: true\nfactors: {}", factors_text(&fac)),
                json!({"cyclotomic": true, "factors": factors_json(&fac)}),
            ),
            None => Output::new(
                "cyclotomic: false",
                json!({"cyclotomic": false, "factors": null}),
            ),
        },
        Command::Exponents { gens, limit } => {
            let seq = exponent_sequence_full(&semigroup(&gens.gens)?, limit as usize);
            let prefix: Vec<String> = seq.prefix.iter().map(|e| e.to_string()).collect();
            let mut text = format!("exponents: {}", prefix.join(" "));
            if let Some(finite) = seq.finite {
                text.push_str(&format!("\nfinite: {finite}"));
            }
            if let Some(support) = &seq.full_support {
                let parts: Vec<String> = support.iter().map(|(j, e)| format!("{j}:{e}")).collect();
                text.push_str(&format!("\nsupport: {}", parts.join(" ")));
            }
            Output::new(text, seq.to_json_value())
        }
        Command::DepthHeight(g) => {
            let dh = depth_height(&semigroup(&g.gens)?)?;
            Output::new(
                format!("depth={} height={}", dh.depth, dh.height),
                serde_json::to_value(dh).expect("depth serializes"),
            )
        }
        Command::Ci(g) => {
            let s = semigroup(&g.gens)?;
            let splits: Vec<Value> = gluing_decompositions(&s)
                .iter()
                .map(|sp| json!({"a1_part": sp.a1_part, "a2_part": sp.a2_part, "d1": sp.d1, "d2": sp.d2}))
                .collect();
            match is_complete_intersection(&s) {
                Some(tree) => Output::new(
                    format!(
                        "complete_intersection: true\ntree: {}\ngluing_degrees: {}",
                        tree.to_json(),
                        list(&tree.gluing_degrees())
                    ),
                    json!({
                        "complete_intersection": true,
                        "tree": tree.to_json_value(),
                        "gluing_degrees": tree.gluing_degrees(),
                        "splits": splits,
                    }),
                ),
                None => Output::new(
                    "complete_intersection: false",
                    json!({"complete_intersection": false, "tree": null, "splits": splits}),
                ),
            }
        }
        Command::Free { gens, arrangement } => {
            let s = semigroup(&gens.gens)?;
            match arrangement {
                Some(order) => {
                    let order = dedupe(parse_list(&order)?, "terms");
                    if NumericalSemigroup::from_generators(&order)? != s {
                        return Err(Error::ParameterOutOfRange(
                            "arrangement generates a different semigroup".into(),
                        ));
                    }
                    smooth_output(is_free_arrangement(&order)?)
                }
                None => smooth_output(find_free_arrangement(s.generators())?),
            }
        }
        Command::Betti(g) => {
            let s = semigroup(&g.gens)?;
            let betti = s.betti_elements();
            let factored = betti_factor_attempt(&s);
            let text = match &factored {
                Some(m) => {
                    let parts: Vec<String> = m.iter().map(|(b, e)| format!("{b}:{e}")).collect();
                    format!(
                        "betti: {}\nfactorization: {}",
                        list(&betti),
                        parts.join(" ")
                    )
                }
                None => format!("betti: {}\nfactorization: none", list(&betti)),
            };
            Output::new(text, json!({"betti": betti, "factorization": factored}))
        }
        Command::Apery { gens, m } => {
            let ap = semigroup(&gens.gens)?.apery(m);
            Output::new(list(&ap), json!({"m": m, "apery": ap}))
        }
        Command::PseudoFrobenius(g) => {
            let pf = semigroup(&g.gens)?.pseudo_frobenius()?;
            Output::new(list(&pf), json!({"pseudo_frobenius": pf}))
        }
        Command::Denumerant { gens, n } => {
            let d = semigroup(&gens.gens)?.denumerant(n)?;
            Output::new(d.to_string(), json!({"n": n, "denumerant": d.to_string()}))
        }
        Command::Chi { gens, n } => {
            let chi = semigroup(&gens.gens)?.shaded_chi(n);
            Output::new(chi.to_string(), json!({"n": n, "chi": chi}))
        }
        Command::Hilbert { gens, terms } => {
            let s = semigroup(&gens.gens)?;
            let h = hilbert_truncated(&s, terms);
            let num = hilbert_numerator(&s);
            Output::new(
                format!("series: {h}\nnumerator: {num}"),
                json!({"series": h.to_string(), "numerator": num.to_string()}),
            )
        }
        Command::Kronecker { poly } => {
            let p: IntPolynomial = poly.parse()?;
            let graeffe = is_kronecker_graeffe(&p)?;
            let fac = kronecker_factor(&p)?;
            let text = match &fac {
                Some(f) => format!("kronecker: true\nfactors: {}", factors_text(f)),
                None => "kronecker: false".into(),
            };
            Output::new(
                text,
                json!({"kronecker": graeffe, "factors": fac.as_ref().map(factors_json)}),
            )
        }
        Command::Related {
            source,
            target,
            wmax,
        } => {
            let (s, t) = (semigroup(&source)?, semigroup(&target)?);
            let w_max = wmax.unwrap_or_else(|| default_w_max(&t));
            let rels = is_polynomially_related(&s, &t, w_max)?;
            let text = if rels.is_empty() {
                format!("no relation with w <= {w_max}")
            } else {
                rels.iter()
                    .map(|r| format!("w={} f={}", r.w, r.f))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            let json: Vec<Value> = rels
                .iter()
                .map(|r| {
                    let mut v = r.to_json_value();
                    v["feen"] = serde_json::to_value(feen_check(r)).expect("report serializes");
                    v
                })
                .collect();
            Output::new(text, json!({"w_max": w_max, "relations": json}))
        }
        Command::Family { name, params } => {
            let p = parse_generators(&params.join(" "))?;
            let (s, closed, extra) = match (name, p.as_slice()) {
                (FamilyName::Sym1, &[m, q]) | (FamilyName::Sym2, &[m, q]) => {
                    let member = if matches!(name, FamilyName::Sym1) {
                        family_sym1(m, q)?
                    } else {
                        family_sym2(m, q)?
                    };
                    let apery = json!(member.apery);
                    (
                        member.semigroup,
                        member.closed_form,
                        json!({"apery": apery}),
                    )
                }
                (FamilyName::Binomial, &[a, b, m]) => {
                    let m =
                        u32::try_from(m).map_err(|_| Error::TooLarge(format!("exponent {m}")))?;
                    let member = binomial_semigroup(a, b, m)?;
                    let closed = member.smooth.leher_polynomial();
                    let f = member.frobenius_formula;
                    // defined only for distinct primes
                    let audit = binomial_depth_audit(a, b, m).ok();
                    (
                        member.semigroup,
                        closed,
                        json!({"frobenius_formula": f, "depth_audit": audit}),
                    )
                }
                (FamilyName::Binomial, _) => {
                    return Err(Error::ParameterOutOfRange("binomial takes a,b,m".into()));
                }
                _ => return Err(Error::ParameterOutOfRange("sym1/sym2 take m,q".into())),
            };
            let mut json = json!({
                "generators": s.generators(),
                "frobenius": s.frobenius(),
                "genus": s.genus(),
                "polynomial": closed.to_string(),
            });
            if let (Value::Object(dst), Value::Object(src)) = (&mut json, extra) {
                dst.extend(src);
            }
            Output::new(
                format!(
                    "generators: {}\nF={} genus={}\npolynomial: {closed}",
                    list(s.generators()),
                    s.frobenius(),
                    s.genus()
                ),
                json,
            )
        }
        Command::Survey { max_frobenius, out } => {
            let report = run_survey(max_frobenius, &out)?;
            let s = &report.summary;
            let mut output = Output::new(
                format!(
                    "symmetric semigroups with F <= {}: {}\ncyclotomic: {}\ncomplete intersection: {}\ndisagreements: {}\nresumed levels: {}",
                    s.max_frobenius, s.total, s.cyclotomic, s.complete_intersection, s.disagreements, report.resumed_levels
                ),
                json!({
                    "summary": serde_json::to_value(s).expect("summary serializes"),
                    "resumed_levels": report.resumed_levels,
                    "counterexamples": report.counterexamples.iter().map(|r| r.generators.clone()).collect::<Vec<_>>(),
                }),
            );
            output.code = report.exit_code() as u8;
            output
        }
        Command::ClassifyHeight1 { depth, genus_bound } => {
            let report = height1_classify(depth, genus_bound)?;
            let found: Vec<String> = report
                .found
                .iter()
                .map(|g| format!("<{}>", list(g)))
                .collect();
            let mut text = format!(
                "depth {depth}, height 1, genus <= {genus_bound}: {}",
                found.join(" ")
            );
            if let Some(m) = report.matches_prediction() {
                text.push_str(&format!("\nmatches prediction: {m}"));
            }
            let mut json = serde_json::to_value(&report).expect("report serializes");
            json["matches_prediction"] = json!(report.matches_prediction());
            Output::new(text, json)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(if matches!(e, Error::Io(_)) {
                EXIT_IO
            } else {
                EXIT_DOMAIN
            })
        }
    }
}
