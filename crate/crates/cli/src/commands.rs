use std::fmt::Write as _;

use garside_al::absorb::{self, AbsorbError, SearchConfig};
use garside_al::braid::{BraidGroup, Perm};
use garside_al::complex::{ALComplex, ComplexError, EdgeKind};
use garside_al::special::{self, Piece, RoundCurve, SpecialError};
use garside_al::verify::{self, Suite};
use garside_al::word::{format_braid_word, format_factors, parse_braid_word, WordError};
use garside_al::{Braid, Garside, GarsideOps, KernelError};
use serde_json::{json, Value};
use thiserror::Error;

use crate::config::Settings;
use crate::{Cli, Command, SCHEMA_VERSION};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failure(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Failure(_) => "failure",
            CliError::Usage(_) => "usage",
            CliError::Budget(_) => "budget",
        }
    }
}

impl From<WordError> for CliError {
    fn from(e: WordError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<KernelError> for CliError {
    fn from(e: KernelError) -> Self {
        match e {
            KernelError::Bound(_) => CliError::Budget(e.to_string()),
            KernelError::Precondition(_) | KernelError::AtomOutOfRange { .. } => CliError::Usage(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

impl From<AbsorbError> for CliError {
    fn from(e: AbsorbError) -> Self {
        match e {
            AbsorbError::Budget { .. } => CliError::Budget(e.to_string()),
            AbsorbError::Kernel(k) => k.into(),
            other => CliError::Failure(other.to_string()),
        }
    }
}

impl From<ComplexError> for CliError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::Budget { .. } => CliError::Budget(e.to_string()),
            ComplexError::Absorb(a) => a.into(),
            ComplexError::Kernel(k) => k.into(),
            other => CliError::Failure(other.to_string()),
        }
    }
}

impl From<SpecialError> for CliError {
    fn from(e: SpecialError) -> Self {
        match e {
            SpecialError::Precondition(_) => CliError::Usage(e.to_string()),
            SpecialError::Kernel(k) => k.into(),
            SpecialError::Absorb(a) => a.into(),
            SpecialError::Complex(c) => c.into(),
            other => CliError::Failure(other.to_string()),
        }
    }
}

/// Text and JSON renderings of one command's result.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub status: u8,
}

struct Ctx<'a> {
    g: BraidGroup,
    settings: &'a Settings,
}

impl Ctx<'_> {
    fn parse(&self, word: &str) -> Result<Braid, CliError> {
        Ok(parse_braid_word(word, &self.g)?)
    }

    fn search(&self) -> SearchConfig {
        SearchConfig { budget: self.settings.budget, parallel: true }
    }

    fn element(&self, e: &Braid) -> Value {
        json!({
            "delta_power": e.delta_power(),
            "factors": e.factors().iter().map(|s| s.one_line()).collect::<Vec<_>>(),
            "word": format_braid_word(e, &self.g),
        })
    }

    fn show(&self, e: &Braid) -> String {
        format_factors(e, &self.g)
    }

    fn simple(&self, s: Perm) -> String {
        let w: Vec<String> = self.g.simple_word(s).into_iter().map(|i| format!("s{}", i + 1)).collect();
        if w.is_empty() {
            "1".into()
        } else {
            w.join("")
        }
    }

    fn output(&self, command: &str, inputs: Value, result: Value, text: String, status: u8) -> Output {
        let json = json!({
            "schema_version": SCHEMA_VERSION,
            "command": command,
            "n": self.g.strands(),
            "inputs": inputs,
            "result": result,
        });
        Output { text, json, status }
    }

    fn pieces(&self, pieces: &[Piece]) -> (String, Value) {
        let mut text = String::new();
        let mut list = Vec::new();
        for (k, p) in pieces.iter().enumerate() {
            let _ = writeln!(text, "{}: {}  absorbed by  {}  [{}]", k + 1, self.show(&p.factor), self.show(&p.absorber), p.rule);
            list.push(json!({
                "factor": self.element(&p.factor),
                "absorber": self.element(&p.absorber),
                "rule": p.rule,
            }));
        }
        (text, Value::Array(list))
    }
}

fn parse_curve(text: &str, n: usize) -> Result<RoundCurve, CliError> {
    let (i, j) = text
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("curve `{text}` should be `i,j`")))?;
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| CliError::Usage(format!("bad curve bound `{s}`")));
    Ok(RoundCurve::new(n, parse(i)?, parse(j)?)?)
}

pub fn run(cli: &Cli, settings: &Settings) -> Result<Output, CliError> {
    let g = BraidGroup::new(settings.n)?;
    let cx = Ctx { g, settings };
    let g = &cx.g;
    let out = match &cli.command {
        Command::Nf { word } => {
            let e = cx.parse(word)?;
            let text = format!("{}\n", cx.show(&e));
            cx.output("nf", json!({ "word": word }), cx.element(&e), text, 0)
        }
        Command::Rnf { word } => {
            let e = cx.parse(word)?;
            let rnf = g.right_normal_form(&e);
            let mut parts: Vec<String> = rnf.factors.iter().map(|&s| cx.simple(s)).collect();
            if rnf.delta_power != 0 {
                parts.push(format!("D^{}", rnf.delta_power));
            }
            let text = if parts.is_empty() { "1\n".to_string() } else { format!("{}\n", parts.join(" | ")) };
            let result = json!({
                "factors": rnf.factors.iter().map(|s| s.one_line()).collect::<Vec<_>>(),
                "delta_power": rnf.delta_power,
            });
            cx.output("rnf", json!({ "word": word }), result, text, 0)
        }
        Command::Stats { word } => {
            let e = cx.parse(word)?;
            let s = e.stats();
            let text = format!("inf {} sup {} len {}\n", s.inf, s.sup, s.len);
            cx.output("stats", json!({ "word": word }), json!({ "inf": s.inf, "sup": s.sup, "len": s.len }), text, 0)
        }
        Command::Eq { left, right } => {
            let equal = cx.parse(left)? == cx.parse(right)?;
            let text = if equal { "equal\n" } else { "different\n" }.to_string();
            cx.output("eq", json!({ "left": left, "right": right }), json!({ "equal": equal }), text, 0)
        }
        Command::Gcd { left, right, right_gcd } => {
            let (a, b) = (cx.parse(left)?, cx.parse(right)?);
            let d = if *right_gcd { g.right_gcd(&a, &b)? } else { g.left_gcd(&a, &b)? };
            let text = format!("{}\n", cx.show(&d));
            let inputs = json!({ "left": left, "right": right, "side": if *right_gcd { "right" } else { "left" } });
            cx.output("gcd", inputs, cx.element(&d), text, 0)
        }
        Command::Tau { word, power } => {
            let t = g.tau_element(&cx.parse(word)?, *power);
            let text = format!("{}\n", cx.show(&t));
            cx.output("tau", json!({ "word": word, "power": power }), cx.element(&t), text, 0)
        }
        Command::Complement { word } => {
            let c = g.complement(&cx.parse(word)?)?;
            let text = format!("{}\n", cx.show(&c));
            cx.output("complement", json!({ "word": word }), cx.element(&c), text, 0)
        }
        Command::Rigid { word } => {
            let rigid = g.is_rigid(&cx.parse(word)?)?;
            let text = if rigid { "rigid\n" } else { "not rigid\n" }.to_string();
            cx.output("rigid", json!({ "word": word }), json!({ "rigid": rigid }), text, 0)
        }
        Command::Absorbable { word, certificate } => {
            let y = cx.parse(word)?;
            let report = absorb::search(g, &y, &cx.search())?;
            let mut text = String::new();
            match &report.absorber {
                Some(x) => {
                    text.push_str("absorbable\n");
                    if *certificate {
                        let _ = writeln!(text, "absorber: {}", cx.show(x));
                        let _ = writeln!(text, "product:  {}", cx.show(&g.multiply(x, &y)?));
                    }
                }
                None => text.push_str("not absorbable\n"),
            }
            let _ = writeln!(text, "nodes visited: {}", report.stats.visited);
            let result = json!({
                "absorbable": report.absorber.is_some(),
                "absorber": report.absorber.as_ref().filter(|_| *certificate).map(|x| cx.element(x)),
                "visited": report.stats.visited,
                "pruned": report.stats.pruned,
            });
            cx.output("absorbable", json!({ "word": word, "certificate": certificate }), result, text, 0)
        }
        Command::EnumAbsorbable => {
            let l = cli.max_len;
            let list = match &settings.cache {
                Some(path) => absorb::enumerate_absorbable_cached(g, l, &cx.search(), path)?,
                None => absorb::enumerate_absorbable(g, l, &cx.search())?,
            };
            let mut text = format!("{} absorbable elements of length at most {l}\n", list.len());
            for e in &list {
                let _ = writeln!(text, "{}", cx.show(e));
            }
            let result = json!({ "count": list.len(), "elements": list.iter().map(|e| cx.element(e)).collect::<Vec<_>>() });
            cx.output("enum-absorbable", json!({ "max_len": l }), result, text, 0)
        }
        Command::Vertex { word } => {
            let complex = ALComplex::new(g, cx.search());
            let v = complex.vertex_of(&cx.parse(word)?);
            let text = format!("{}\n", cx.show(v.rep()));
            cx.output("vertex", json!({ "word": word }), cx.element(v.rep()), text, 0)
        }
        Command::Adjacent { left, right } => {
            let complex = ALComplex::new(g, cx.search());
            let (v, w) = (complex.vertex_of(&cx.parse(left)?), complex.vertex_of(&cx.parse(right)?));
            let inputs = json!({ "left": left, "right": right });
            if v == w {
                cx.output("adjacent", inputs, json!({ "same_vertex": true, "adjacent": false }), "same vertex\n".into(), 0)
            } else {
                match complex.are_adjacent(&v, &w)? {
                    Some(wit) => {
                        let kind = match wit.kind {
                            EdgeKind::Simple => "simple",
                            EdgeKind::Absorbable => "absorbable",
                        };
                        let mut text = format!("adjacent ({kind} edge)\nlabel: {} (shift {})\n", cx.show(&wit.label), wit.shift);
                        if let Some(x) = &wit.absorber {
                            let _ = writeln!(text, "absorber: {}", cx.show(x));
                        }
                        let result = json!({
                            "same_vertex": false,
                            "adjacent": true,
                            "kind": kind,
                            "label": cx.element(&wit.label),
                            "shift": wit.shift,
                            "absorber": wit.absorber.as_ref().map(|x| cx.element(x)),
                        });
                        cx.output("adjacent", inputs, result, text, 0)
                    }
                    None => cx.output("adjacent", inputs, json!({ "same_vertex": false, "adjacent": false }), "not adjacent\n".into(), 0),
                }
            }
        }
        Command::Path { left, right } => {
            let complex = ALComplex::new(g, cx.search());
            let (v, w) = (complex.vertex_of(&cx.parse(left)?), complex.vertex_of(&cx.parse(right)?));
            let path = complex.preferred_path(&v, &w)?;
            let mut text = format!("length {}\n", path.len());
            for (k, vert) in path.vertices.iter().enumerate() {
                if k > 0 {
                    let _ = writeln!(text, "  --{}-->", cx.simple(path.labels[k - 1]));
                }
                let _ = writeln!(text, "{}", cx.show(vert.rep()));
            }
            let result = json!({
                "length": path.len(),
                "vertices": path.vertices.iter().map(|v| cx.element(v.rep())).collect::<Vec<_>>(),
                "labels": path.labels.iter().map(|s| s.one_line()).collect::<Vec<_>>(),
            });
            cx.output("path", json!({ "left": left, "right": right }), result, text, 0)
        }
        Command::DistUb { left, right, radius } => {
            let complex = ALComplex::new(g, cx.search());
            let (v, w) = (complex.vertex_of(&cx.parse(left)?), complex.vertex_of(&cx.parse(right)?));
            let ub = complex.distance_upper_bound(&v, &w, cli.max_len, *radius, settings.vertex_budget)?;
            let text = match ub {
                Some(d) => format!("distance at most {d}\n"),
                None => format!("no bound within radius {radius}\n"),
            };
            let inputs = json!({ "left": left, "right": right, "radius": radius, "max_len": cli.max_len });
            cx.output("dist-ub", inputs, json!({ "upper_bound": ub }), text, 0)
        }
        Command::Xn => {
            let x = special::x_n(settings.n)?;
            let report = special::check_x_properties(settings.n)?;
            let text = format!("{}\n{report}\n", cx.show(&x));
            let result = json!({
                "x": cx.element(&x),
                "passes": report.passes(),
                "length": report.length,
                "expected_length": report.expected_length,
                "inf_zero": report.inf_zero,
                "normal_forms_agree": report.normal_forms_agree,
                "ends_single_atom": report.ends_single_atom,
                "complement_factor_at": report.complement_factor_at,
                "rigid": report.rigid,
            });
            cx.output("xn", json!({}), result, text, if report.passes() { 0 } else { 1 })
        }
        Command::Lambda { word } => {
            let x = special::x_n(settings.n)?;
            let lambda = special::lambda_x(g, &x, &cx.parse(word)?)?;
            cx.output("lambda", json!({ "word": word }), json!({ "lambda": lambda }), format!("{lambda}\n"), 0)
        }
        Command::DecomposeDelta { k } => {
            let pieces = special::delta_three_absorbables(settings.n, *k)?;
            let (text, list) = cx.pieces(&pieces);
            cx.output("decompose-delta", json!({ "k": k }), json!({ "pieces": list }), text, 0)
        }
        Command::DecomposeReducible { word, curve } => {
            let y = cx.parse(word)?;
            let curves = match curve {
                Some(c) => vec![parse_curve(c, settings.n)?],
                None => RoundCurve::all(settings.n)
                    .into_iter()
                    .filter(|&c| special::push_round_curve(g, &y, c).is_some())
                    .collect(),
            };
            let c = *curves
                .first()
                .ok_or_else(|| CliError::Usage("no round curve stays round under this braid".into()))?;
            let pieces = special::nine_absorbable_decomposition(g, &y, c, &cx.search())?;
            let (body, list) = cx.pieces(&pieces);
            let text = format!("curve {c}, {} pieces\n{body}", pieces.len());
            let inputs = json!({ "word": word, "curve": [c.i, c.j] });
            cx.output("decompose-reducible", inputs, json!({ "pieces": list }), text, 0)
        }
        Command::ProbeOrbit { word, count, radius } => {
            let complex = ALComplex::new(g, cx.search());
            let rows = special::orbit_diameter_probe(&complex, &cx.parse(word)?, *count, cli.max_len, *radius, settings.vertex_budget)?;
            let mut text = "i,upper_bound\n".to_string();
            for (i, ub) in &rows {
                let _ = writeln!(text, "{i},{}", ub.map(|d| d.to_string()).unwrap_or_default());
            }
            let result = json!({ "rows": rows.iter().map(|(i, ub)| json!({ "i": i, "upper_bound": ub })).collect::<Vec<_>>() });
            let inputs = json!({ "word": word, "count": count, "radius": radius, "max_len": cli.max_len });
            cx.output("probe-orbit", inputs, result, text, 0)
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(|e: verify::UnknownSuite| CliError::Usage(e.to_string()))?;
            let report = verify::run(suite, settings.seed, &cx.search());
            let status = if report.passed() {
                0
            } else if report.budget_exceeded() {
                3
            } else {
                1
            };
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    let (outcome, message) = match &c.outcome {
                        verify::Outcome::Pass => ("pass", None),
                        verify::Outcome::Fail(m) => ("fail", Some(m.clone())),
                        verify::Outcome::Budget(m) => ("budget", Some(m.clone())),
                    };
                    json!({ "suite": c.suite, "name": c.name, "outcome": outcome, "message": message })
                })
                .collect();
            let result = json!({ "passed": report.passed(), "seed": report.seed, "checks": checks });
            cx.output("verify", json!({ "suite": suite.name() }), result, format!("{report}\n"), status)
        }
    };
    Ok(out)
}
