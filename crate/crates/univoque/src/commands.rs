//! Subcommands and their execution.

use clap::Subcommand;
use num_rational::BigRational;
use serde_json::{json, Value};

use univoque_core::baseclass::{
    alpha_of_one, classify_base, classify_base_value, classify_point, expansions_of_one,
    prefix_outside_v, AlphaOfOne, BaseClass,
};
use univoque_core::components::{
    cardinality_of_uq, closure_component, constants, doubling_construction, left_endpoint,
    right_endpoint, smallest_univoque, stability_interval, BaseInput, Stability, DEFAULT_DEPTH,
};
use univoque_core::expansion::run_digits;
use univoque_core::oracle::enumerate_prefixes;
use univoque_core::sft::{base_topology, forbidden_blocks, point_topology, subshift_member, word_member};
use univoque_core::{EpSeq, Error, Word};

use crate::render;
use crate::spec::{parse_base, parse_left, parse_point, parse_rational, BaseArg};

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Greedy or quasi-greedy digits of x in base q.
    Expand {
        #[arg(long)]
        x: String,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 16)]
        digits: usize,
        /// Greedy algorithm (the default).
        #[arg(long, conflicts_with = "quasi")]
        greedy: bool,
        /// Quasi-greedy algorithm.
        #[arg(long)]
        quasi: bool,
    },
    /// Classify a base given by alpha or numerically.
    ClassifyBase {
        #[arg(long, conflicts_with = "value", required_unless_present = "value")]
        alpha: Option<String>,
        #[arg(long)]
        value: Option<String>,
        /// Digits of alpha(q) scanned for a period when --value is used.
        #[arg(long, default_value_t = 64)]
        digits: usize,
    },
    /// Classify the point whose quasi-greedy expansion is A.
    ClassifyPoint {
        #[arg(long)]
        a: String,
        #[arg(long)]
        alpha: String,
    },
    /// All expansions of 1 in the base with quasi-greedy expansion ALPHA.
    ExpansionsOfOne {
        #[arg(long)]
        alpha: String,
        /// Also list alpha and the N-th member of each family.
        #[arg(long)]
        materialize: Option<usize>,
    },
    /// Endpoints of a component of (1, inf) \ V from either end.
    Endpoints {
        #[arg(long, conflicts_with = "right", required_unless_present = "right")]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
    },
    /// Maximal stability interval containing q.
    Stability {
        #[arg(long)]
        q: String,
    },
    /// Stability component of q, or with --closure the component of
    /// (1, inf) \ closure(U).
    Component {
        #[arg(long)]
        q: String,
        #[arg(long)]
        closure: bool,
    },
    /// Doubling construction from an integer or a base in V \ U.
    Double {
        #[arg(long)]
        seed: String,
        #[arg(long)]
        k: usize,
    },
    /// The least univoque number in (n, n+1).
    SmallestUnivoque {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 8)]
        digits: usize,
        /// Doublings used for the enclosure.
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Forbidden blocks of U'_q.
    Sft {
        #[arg(long)]
        q: String,
    },
    /// Whether a sequence or word avoids the forbidden blocks of U'_q.
    SftMember {
        #[arg(long)]
        c: String,
        #[arg(long)]
        q: String,
    },
    /// Topology of U_q, and of one of its points with --point.
    Topology {
        #[arg(long)]
        q: String,
        #[arg(long)]
        point: Option<String>,
    },
    /// Cardinality of U_q.
    Cardinality {
        #[arg(long)]
        q: String,
        /// Doublings tried near q' and q''.
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Brute-force enumeration of expansion prefixes.
    Oracle {
        #[arg(long)]
        x: String,
        #[arg(long)]
        base: String,
        #[arg(long)]
        depth: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// G, q' and q'' with rational enclosures.
    Constants {
        #[arg(long, default_value = "1e-12")]
        eps: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        #[arg(long, default_value_t = 16)]
        digits: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Expand { .. } => "expand",
            Command::ClassifyBase { .. } => "classify-base",
            Command::ClassifyPoint { .. } => "classify-point",
            Command::ExpansionsOfOne { .. } => "expansions-of-one",
            Command::Endpoints { .. } => "endpoints",
            Command::Stability { .. } => "stability",
            Command::Component { .. } => "component",
            Command::Double { .. } => "double",
            Command::SmallestUnivoque { .. } => "smallest-univoque",
            Command::Sft { .. } => "sft",
            Command::SftMember { .. } => "sft-member",
            Command::Topology { .. } => "topology",
            Command::Cardinality { .. } => "cardinality",
            Command::Oracle { .. } => "oracle",
            Command::Constants { .. } => "constants",
        }
    }
}

/// A successful run.
#[derive(Clone, Debug)]
pub struct Output {
    /// Echo of how each argument was interpreted.
    pub input: Value,
    pub result: Value,
    pub text: String,
}

#[derive(Clone, Debug)]
pub enum CliError {
    /// An argument could not be read.
    Parse(Error),
    /// The arguments were read but the operation failed.
    Domain(Error),
}

impl CliError {
    pub fn error(&self) -> &Error {
        match self {
            CliError::Parse(e) | CliError::Domain(e) => e,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Domain(_) => "domain",
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn p<T>(r: Result<T, Error>) -> Result<T, CliError> {
    r.map_err(CliError::Parse)
}

fn base_echo(b: &BaseArg, text: &str) -> Value {
    json!({"text": text, "form": b.form, "interpreted": b.interpreted})
}

fn class_json(c: &BaseClass) -> Value {
    json!({
        "variant": c.variant.name(),
        "is_integer": c.is_integer,
        "alpha": c.alpha.to_string(),
        "minimal_k": c.minimal_k,
        "in_v": c.in_v(),
        "in_closure_u": c.in_closure_u(),
    })
}

fn class_text(c: &BaseClass) -> String {
    let mut s = format!("{} alpha={}", c.variant.name(), c.alpha);
    if c.is_integer {
        s.push_str(" integer");
    }
    if let Some(k) = c.minimal_k {
        s.push_str(&format!(" k={k}"));
    }
    s
}

fn alphabet_of(input: &BaseInput) -> Result<u8, Error> {
    match input {
        BaseInput::Alpha(a) => Ok(a.alphabet_max()),
        BaseInput::Value(q) => q.alphabet_max(),
        BaseInput::SmallestUnivoque(n) => {
            u8::try_from(*n).map_err(|_| Error::Unsupported(format!("alphabet {n} too large")))
        }
    }
}

pub fn run(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Expand {
            x,
            base,
            digits,
            greedy: _,
            quasi,
        } => {
            let b = p(parse_base(base))?;
            let q = b.value()?;
            let xv = p(parse_point(x, &q))?;
            let run = run_digits(&xv, &q, *digits, *quasi)?;
            let algorithm = if *quasi { "quasi-greedy" } else { "greedy" };
            Ok(Output {
                input: json!({"x": x, "base": base_echo(&b, base), "digits": digits}),
                result: json!({
                    "digits": run.digits.to_string(),
                    "algorithm": algorithm,
                    "base": render::algebraic(&q),
                    "residual_is_zero": run.residual.sign() == std::cmp::Ordering::Equal,
                }),
                text: run.digits.to_string(),
            })
        }
        Command::ClassifyBase {
            alpha,
            value,
            digits,
        } => {
            let (input, cls) = if let Some(a) = alpha {
                let a = p(EpSeq::parse(a, None))?;
                (json!({"alpha": a.to_string()}), classify_base(&a)?)
            } else {
                let text = value.as_deref().expect("clap enforces one of the two");
                let b = p(parse_base(text))?;
                let echo = json!({"value": base_echo(&b, text), "digits": digits});
                let cls = match &b.input {
                    BaseInput::Alpha(a) => classify_base(a)?,
                    BaseInput::Value(q) => match alpha_of_one(q, *digits)? {
                        AlphaOfOne::Certified(a) => classify_base(&a)?,
                        AlphaOfOne::Prefix(w) if prefix_outside_v(&w, q.alphabet_max()?) => {
                            return Ok(Output {
                                input: echo,
                                result: json!({
                                    "variant": "OutsideV",
                                    "is_integer": false,
                                    "alpha": null,
                                    "alpha_prefix": w.to_string(),
                                    "minimal_k": null,
                                    "in_v": false,
                                    "in_closure_u": false,
                                }),
                                text: format!("OutsideV alpha={w}..."),
                            })
                        }
                        AlphaOfOne::Prefix(_) => classify_base_value(q, *digits)?,
                    },
                    BaseInput::SmallestUnivoque(n) => {
                        return Ok(Output {
                            input: echo,
                            result: json!({
                                "variant": "Univoque",
                                "is_integer": false,
                                "alpha": null,
                                "minimal_k": null,
                                "in_v": true,
                                "in_closure_u": true,
                            }),
                            text: format!("Univoque (q^({n}), alpha not eventually periodic)"),
                        })
                    }
                };
                (echo, cls)
            };
            Ok(Output {
                input,
                result: class_json(&cls),
                text: class_text(&cls),
            })
        }
        Command::ClassifyPoint { a, alpha } => {
            let al = p(EpSeq::parse(alpha, None))?;
            let av = p(EpSeq::parse(a, Some(al.alphabet_max())))?;
            let pc = classify_point(&av, &al)?;
            Ok(Output {
                input: json!({"a": av.to_string(), "alpha": al.to_string()}),
                result: json!({
                    "in_uq": pc.in_uq,
                    "in_vq": pc.in_vq,
                    "greedy_finite": pc.greedy_finite,
                    "count": pc.count.name(),
                }),
                text: format!(
                    "count={} in_uq={} in_vq={} greedy_finite={}",
                    pc.count.name(),
                    pc.in_uq,
                    pc.in_vq,
                    pc.greedy_finite
                ),
            })
        }
        Command::ExpansionsOfOne { alpha, materialize } => {
            let al = p(EpSeq::parse(alpha, None))?;
            let fam = expansions_of_one(&classify_base(&al)?)?;
            let families: Vec<Value> = fam
                .families
                .iter()
                .map(|f| {
                    json!({
                        "head": f.head.to_string(),
                        "period_block": f.period_block.to_string(),
                        "tail": f.tail.to_string(),
                        "parameter": f.parameter,
                    })
                })
                .collect();
            let mut text = format!("alpha {}", fam.alpha);
            for f in &fam.families {
                text.push_str(&format!(
                    "\nfamily {}[{}]^{}{}",
                    f.head, f.period_block, f.parameter, f.tail
                ));
            }
            let mut result = json!({"alpha": fam.alpha.to_string(), "families": families});
            if let Some(n) = materialize {
                let members: Vec<String> = fam.materialize(*n)?.iter().map(ToString::to_string).collect();
                for m in &members {
                    text.push_str(&format!("\n{m}"));
                }
                result["members"] = json!(members);
            }
            Ok(Output {
                input: json!({"alpha": al.to_string(), "materialize": materialize}),
                result,
                text,
            })
        }
        Command::Endpoints { left, right } => {
            let (q1, q2) = if let Some(l) = left {
                let q1 = p(parse_left(l))?;
                let q2 = right_endpoint(&q1)?;
                (q1, q2)
            } else {
                let r = right.as_deref().expect("clap enforces one of the two");
                let q2 = p(EpSeq::parse(r, None))?;
                (left_endpoint(&q2)?, q2)
            };
            Ok(Output {
                input: json!({"left": left, "right": right}),
                result: json!({"q1": render::base_spec(&q1), "q2": q2.to_string(), "kind": "Interval"}),
                text: format!("({q1}, {q2}]"),
            })
        }
        Command::Stability { q } => stability(q),
        Command::Component { q, closure } => {
            if !*closure {
                return stability(q);
            }
            let b = p(parse_base(q))?;
            let cc = closure_component(&b.input)?;
            let chain: Vec<String> = cc.chain.iter().map(ToString::to_string).collect();
            let mut text = chain.join(" -> ");
            text.push_str(&format!(" -> {}\nr = {}", cc.p1, cc.r));
            Ok(Output {
                input: json!({"q": base_echo(&b, q), "closure": true}),
                result: json!({"p1": render::base_spec(&cc.p1), "chain": chain, "r": cc.r.to_string()}),
                text,
            })
        }
        Command::Double { seed, k } => {
            let s = p(parse_left(seed))?;
            let d = doubling_construction(&s, *k)?;
            let chain: Vec<String> = d.chain.iter().map(ToString::to_string).collect();
            let mut text = d.prefix.to_string();
            for c in &chain {
                text.push_str(&format!("\n{c}"));
            }
            Ok(Output {
                input: json!({"seed": render::base_spec(&s), "k": k}),
                result: json!({
                    "prefix": d.prefix.to_string(),
                    "m": d.m,
                    "alphabet_max": d.alphabet_max,
                    "chain": chain,
                }),
                text,
            })
        }
        Command::SmallestUnivoque { n, digits, depth } => {
            let (enc, word) = smallest_univoque(*n, *digits, *depth)?;
            let eps = BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(14));
            let e = render::enclosure(&enc, &eps);
            let text = format!(
                "{word}\n[{}, {}]",
                e["lower_decimal"].as_str().unwrap_or_default(),
                e["upper_decimal"].as_str().unwrap_or_default()
            );
            Ok(Output {
                input: json!({"n": n, "digits": digits, "depth": depth}),
                result: json!({"prefix": word.to_string(), "enclosure": e}),
                text,
            })
        }
        Command::Sft { q } => {
            let b = p(parse_base(q))?;
            let f = forbidden_blocks(&b.input)?;
            let blocks: Vec<String> = f.blocks.iter().map(ToString::to_string).collect();
            Ok(Output {
                input: json!({"q": base_echo(&b, q)}),
                result: json!({
                    "alphabet_max": f.alphabet_max,
                    "block_length": f.block_len(),
                    "blocks": blocks,
                }),
                text: blocks.join("\n"),
            })
        }
        Command::SftMember { c, q } => {
            let b = p(parse_base(q))?;
            let f = forbidden_blocks(&b.input)?;
            let member = if c.contains('(') {
                let s = p(EpSeq::parse(c, Some(f.alphabet_max)))?;
                subshift_member(&s, &f)?
            } else {
                let w = p(Word::parse(c))?;
                word_member(&w, &f)?
            };
            Ok(Output {
                input: json!({"c": c, "q": base_echo(&b, q)}),
                result: json!({"member": member}),
                text: member.to_string(),
            })
        }
        Command::Topology { q, point } => {
            let b = p(parse_base(q))?;
            let base = base_topology(&b.input)?;
            let mut result = json!({"base": base.name()});
            let mut text = format!("base: {}", base.name());
            if let Some(pt) = point {
                let m = alphabet_of(&b.input)?;
                let c = p(EpSeq::parse(pt, Some(m)))?;
                let t = point_topology(&c, &b.input)?;
                result["point"] = json!(t.name());
                text.push_str(&format!("\npoint: {}", t.name()));
            }
            Ok(Output {
                input: json!({"q": base_echo(&b, q), "point": point}),
                result,
                text,
            })
        }
        Command::Cardinality { q, depth } => {
            let b = p(parse_base(q))?;
            let c = cardinality_of_uq(&b.input, *depth)?;
            Ok(Output {
                input: json!({"q": base_echo(&b, q), "depth": depth}),
                result: json!({"cardinality": c.name()}),
                text: c.name().to_string(),
            })
        }
        Command::Oracle {
            x,
            base,
            depth,
            count_only,
        } => {
            let b = p(parse_base(base))?;
            let qv = b.value()?;
            let xv = p(parse_point(x, &qv))?;
            let tree = enumerate_prefixes(&xv, &qv, *depth)?;
            let count = tree.leaves.len();
            let mut result = json!({"count": count, "depth": depth, "nodes": tree.nodes});
            let text = if *count_only {
                count.to_string()
            } else {
                result["leaves"] = render::words(&tree.leaves);
                tree.leaves.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
            };
            Ok(Output {
                input: json!({"x": x, "base": base_echo(&b, base), "depth": depth}),
                result,
                text,
            })
        }
        Command::Constants { eps, depth, digits } => {
            let e = p(parse_rational(eps))?;
            if e <= BigRational::from_integer(0.into()) {
                return Err(CliError::Parse(Error::Parse("--eps must be positive".into())));
            }
            let c = constants(*depth, *digits)?;
            let (glo, ghi) = c.g.approx(&e);
            let qp = render::enclosure(&c.q_prime, &e);
            let qpp = render::enclosure(&c.q_double_prime, &e);
            let text = format!(
                "G   in [{}, {}]\nq'  in [{}, {}]  1 = {}...\nq'' in [{}, {}]  1 = {}...",
                render::decimal(&glo, 12),
                render::decimal_up(&ghi, 12),
                qp["lower_decimal"].as_str().unwrap_or_default(),
                qp["upper_decimal"].as_str().unwrap_or_default(),
                c.tau,
                qpp["lower_decimal"].as_str().unwrap_or_default(),
                qpp["upper_decimal"].as_str().unwrap_or_default(),
                c.lambda,
            );
            Ok(Output {
                input: json!({"eps": render::rational(&e), "depth": depth, "digits": digits}),
                result: json!({
                    "G": {"algebraic": render::algebraic(&c.g), "lower": render::rational(&glo), "upper": render::rational(&ghi)},
                    "q_prime": {"enclosure": qp, "prefix": c.tau.to_string()},
                    "q_double_prime": {"enclosure": qpp, "prefix": c.lambda.to_string()},
                }),
                text,
            })
        }
    }
}

fn stability(q: &str) -> Result<Output, CliError> {
    let b = p(parse_base(q))?;
    let (result, text) = match stability_interval(&b.input)? {
        Stability::Singleton(s) => (json!({"kind": "Singleton", "q": s}), format!("{{{s}}}")),
        Stability::Interval(c) => {
            let t = format!("({}, {}]", c.q1, c.q2);
            (render::component(&c), t)
        }
    };
    Ok(Output {
        input: json!({"q": base_echo(&b, q)}),
        result,
        text,
    })
}

/// The JSON envelope for one run.
pub fn envelope(command: &str, r: &Result<Output, CliError>) -> Value {
    match r {
        Ok(o) => json!({
            "status": "ok",
            "command": command,
            "input": o.input,
            "result": o.result,
        }),
        Err(e) => json!({
            "status": "error",
            "command": command,
            "error": {
                "code": e.error().code(),
                "kind": e.kind(),
                "message": e.error().to_string(),
            },
        }),
    }
}
