//! Seeded verification suites and the random samplers they use.
//!
//! A suite is a list of named checks. A check either passes, fails with a
//! message, or aborts because a search budget ran out; budget exhaustion is
//! kept apart so callers can tell "false" from "undecided".

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::abelian::zn_structure;
use crate::absorb::{self, AbsorbError, SearchConfig};
use crate::braid::{BraidGroup, Perm};
use crate::complex::{ALComplex, ComplexError};
use crate::kernel::{Element, Garside, GarsideOps, KernelError};
use crate::special::{self, RoundCurve, SpecialError};
use crate::Braid;

/// Random samplers shared by the suites and the test targets.
pub mod sample {
    use super::*;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// Product of `letters` random atoms.
    pub fn positive_word<R: Rng>(g: &BraidGroup, letters: usize, rng: &mut R) -> Braid {
        let atoms: Vec<usize> = (0..letters).map(|_| rng.gen_range(1..g.strands())).collect();
        g.word(&atoms).expect("atoms in range")
    }

    /// Product of `letters` random atoms or inverse atoms.
    pub fn signed_word<R: Rng>(g: &BraidGroup, letters: usize, rng: &mut R) -> Braid {
        let atoms: Vec<(usize, i64)> = (0..letters)
            .map(|_| (rng.gen_range(1..g.strands()), if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect();
        g.signed_word(&atoms).expect("atoms in range")
    }

    /// Product of `factors` random proper simples.
    pub fn positive_factors<G: Garside, R: Rng>(g: &G, factors: usize, rng: &mut R) -> Element<G::Simple> {
        let simples = g.simples();
        let (id, delta) = (g.identity(), g.delta());
        let proper: Vec<G::Simple> = simples.into_iter().filter(|&s| s != id && s != delta).collect();
        let picks: Vec<G::Simple> = (0..factors).map(|_| *proper.choose(rng).expect("proper simples")).collect();
        let mut acc = Element::identity();
        for s in picks {
            acc = g.push_right(&acc, s);
        }
        acc
    }

    /// A reduced atom word of the simple `s`, choosing each next atom at random
    /// among the atoms that still divide it.
    pub fn simple_word<G: Garside, R: Rng>(g: &G, s: G::Simple, rng: &mut R) -> Vec<usize> {
        let mut rest = s;
        let mut out = Vec::new();
        while rest != g.identity() {
            let set = g.starting_set(rest);
            let atoms: Vec<usize> = (0..g.rank()).filter(|&i| set & (1 << i) != 0).collect();
            let a = *atoms.choose(rng).expect("nonidentity simple has a starting atom");
            rest = g.left_quotient(g.atom(a), rest).expect("atom divides");
            out.push(a);
        }
        out
    }

    /// A random left divisor of the positive element `z`: a prefix of a
    /// random atom word for `z`.
    pub fn prefix<G: Garside, R: Rng>(g: &G, z: &Element<G::Simple>, rng: &mut R) -> Element<G::Simple> {
        let mut atoms = Vec::new();
        for _ in 0..z.delta_power() {
            atoms.extend(simple_word(g, g.delta(), rng));
        }
        for &s in z.factors() {
            atoms.extend(simple_word(g, s, rng));
        }
        let cut = rng.gen_range(0..=atoms.len());
        let mut acc = Element::identity();
        for &a in &atoms[..cut] {
            acc = g.push_right(&acc, g.atom(a));
        }
        acc
    }

    /// A random right divisor of the positive element `z`.
    pub fn suffix<G: Garside, R: Rng>(g: &G, z: &Element<G::Simple>, rng: &mut R) -> Element<G::Simple> {
        let p = prefix(g, z, rng);
        g.multiply(&g.invert(&p), z).expect("same structure")
    }

    /// A braid built from moves that keep a round curve round: atoms inside
    /// or outside the tube, a strand passing over the whole tube, and `Δ^{±1}`.
    /// Returns the braid and the starting curve.
    pub fn round_preserving<R: Rng>(g: &BraidGroup, moves: usize, rng: &mut R) -> (Braid, RoundCurve) {
        let n = g.strands();
        let curves = RoundCurve::all(n);
        let start = *curves.choose(rng).expect("n ≥ 3 has round curves");
        let (mut i, mut j) = (start.i, start.j);
        let mut y = Element::identity();
        for _ in 0..moves {
            let mut w: Vec<usize> = Vec::new();
            match rng.gen_range(0..5) {
                0 => w.push(rng.gen_range(i..j)),
                1 => {
                    let outside: Vec<usize> = (1..n).filter(|&k| k + 1 < i || k > j).collect();
                    if let Some(&k) = outside.choose(rng) {
                        w.push(k);
                    }
                }
                2 if i > 1 => {
                    w.extend(i - 1..j);
                    (i, j) = (i - 1, j - 1);
                }
                3 if j < n => {
                    w.extend((i..=j).rev());
                    (i, j) = (i + 1, j + 1);
                }
                4 if rng.gen_bool(0.3) => {
                    let e = if rng.gen_bool(0.5) { 1 } else { -1 };
                    y = g.multiply(&y, &Element::delta_pow(e)).expect("same group");
                    (i, j) = (n + 1 - j, n + 1 - i);
                }
                _ => {}
            }
            y = g.multiply(&y, &g.word(&w).expect("atoms in range")).expect("same group");
        }
        (y, start)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Kernel,
    Absorb,
    Complex,
    Special,
    GoldenExamples,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Kernel => "kernel",
            Suite::Absorb => "absorb",
            Suite::Complex => "complex",
            Suite::Special => "special",
            Suite::GoldenExamples => "paper-examples",
            Suite::All => "all",
        }
    }

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Kernel, Suite::Absorb, Suite::Complex, Suite::Special, Suite::GoldenExamples],
            s => vec![s],
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown suite `{0}` (expected kernel, absorb, complex, special, paper-examples or all)")]
pub struct UnknownSuite(pub String);

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Suite, UnknownSuite> {
        Ok(match s {
            "kernel" => Suite::Kernel,
            "absorb" => Suite::Absorb,
            "complex" => Suite::Complex,
            "special" => Suite::Special,
            "paper-examples" => Suite::GoldenExamples,
            "all" => Suite::All,
            other => return Err(UnknownSuite(other.to_string())),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// A search budget ran out before the check could decide.
    Budget(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.outcome == Outcome::Pass)
    }

    pub fn budget_exceeded(&self) -> bool {
        self.checks.iter().any(|c| matches!(c.outcome, Outcome::Budget(_)))
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => writeln!(f, "pass   {}/{}", c.suite, c.name)?,
                Outcome::Fail(m) => writeln!(f, "FAIL   {}/{}: {m}", c.suite, c.name)?,
                Outcome::Budget(m) => writeln!(f, "BUDGET {}/{}: {m}", c.suite, c.name)?,
            }
        }
        let ok = self.checks.iter().filter(|c| c.outcome == Outcome::Pass).count();
        write!(f, "{ok}/{} checks passed (seed {})", self.checks.len(), self.seed)
    }
}

/// Error raised inside a check; budget errors are told apart.
#[derive(Debug)]
enum CheckError {
    Fail(String),
    Budget(String),
}

impl From<AbsorbError> for CheckError {
    fn from(e: AbsorbError) -> Self {
        match e {
            AbsorbError::Budget { .. } => CheckError::Budget(e.to_string()),
            other => CheckError::Fail(other.to_string()),
        }
    }
}

impl From<ComplexError> for CheckError {
    fn from(e: ComplexError) -> Self {
        match e {
            ComplexError::Absorb(a) => a.into(),
            ComplexError::Budget { .. } => CheckError::Budget(e.to_string()),
            other => CheckError::Fail(other.to_string()),
        }
    }
}

impl From<SpecialError> for CheckError {
    fn from(e: SpecialError) -> Self {
        match e {
            SpecialError::Absorb(a) => a.into(),
            SpecialError::Complex(c) => c.into(),
            other => CheckError::Fail(other.to_string()),
        }
    }
}

impl From<KernelError> for CheckError {
    fn from(e: KernelError) -> Self {
        CheckError::Fail(e.to_string())
    }
}

type CheckResult = Result<(), CheckError>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> CheckResult {
    if cond {
        Ok(())
    } else {
        Err(CheckError::Fail(msg()))
    }
}

struct Runner {
    suite: &'static str,
    checks: Vec<Check>,
}

impl Runner {
    fn run(&mut self, name: &str, f: impl FnOnce() -> CheckResult) {
        let outcome = match f() {
            Ok(()) => Outcome::Pass,
            Err(CheckError::Fail(m)) => Outcome::Fail(m),
            Err(CheckError::Budget(m)) => Outcome::Budget(m),
        };
        self.checks.push(Check { suite: self.suite, name: name.to_string(), outcome });
    }
}

/// Runs a suite. Every random choice derives from `seed`.
pub fn run(suite: Suite, seed: u64, config: &SearchConfig) -> VerifyReport {
    let mut checks = Vec::new();
    for part in suite.parts() {
        let mut r = Runner { suite: part.name(), checks: Vec::new() };
        match part {
            Suite::Kernel => kernel_suite(&mut r, seed),
            Suite::Absorb => absorb_suite(&mut r, seed, config),
            Suite::Complex => complex_suite(&mut r, seed, config),
            Suite::Special => special_suite(&mut r, seed, config),
            Suite::GoldenExamples => golden_suite(&mut r, config),
            Suite::All => unreachable!("expanded by parts"),
        }
        checks.extend(r.checks);
    }
    VerifyReport { seed, checks }
}

fn b(n: usize) -> BraidGroup {
    BraidGroup::new(n).expect("valid strand count")
}

fn kernel_suite(r: &mut Runner, seed: u64) {
    let mut rng = sample::rng(seed);
    let samples: Vec<(usize, Braid, Braid, Braid)> = (0..60)
        .map(|i| {
            let g = b(3 + i % 3);
            let x = sample::signed_word(&g, 8, &mut rng);
            let y = sample::signed_word(&g, 8, &mut rng);
            let z = sample::signed_word(&g, 8, &mut rng);
            (g.strands(), x, y, z)
        })
        .collect();
    r.run("product is associative", || {
        for (n, x, y, z) in &samples {
            let g = b(*n);
            let l = g.multiply(&g.multiply(x, y)?, z)?;
            let rr = g.multiply(x, &g.multiply(y, z)?)?;
            ensure(l == rr, || format!("B{n}: (xy)z ≠ x(yz)"))?;
        }
        Ok(())
    });
    r.run("inverse cancels", || {
        for (n, x, _, _) in &samples {
            let g = b(*n);
            ensure(g.multiply(x, &g.invert(x))?.is_identity(), || format!("B{n}: x·x⁻¹ ≠ 1"))?;
        }
        Ok(())
    });
    r.run("normal form is left-weighted with proper factors", || {
        for (n, x, _, _) in &samples {
            let g = b(*n);
            let f = x.factors();
            ensure(f.iter().all(|&s| s != g.identity() && s != g.delta()), || format!("B{n}: improper factor"))?;
            ensure(f.windows(2).all(|w| g.is_left_weighted(w[0], w[1])), || format!("B{n}: pair not left-weighted"))?;
        }
        Ok(())
    });
    r.run("right normal form multiplies back", || {
        for (n, x, _, _) in &samples {
            let g = b(*n);
            let rnf = g.right_normal_form(x);
            let mut acc = Element::identity();
            for &s in &rnf.factors {
                acc = g.push_right(&acc, s);
            }
            acc = g.multiply(&acc, &Element::delta_pow(rnf.delta_power))?;
            ensure(acc == *x, || format!("B{n}: right normal form differs"))?;
            ensure(rnf.factors.windows(2).all(|w| g.is_right_weighted(w[0], w[1])), || {
                format!("B{n}: pair not right-weighted")
            })?;
        }
        Ok(())
    });
    r.run("tau is conjugation by delta", || {
        for (n, x, _, _) in &samples {
            let g = b(*n);
            let conj = g.multiply(&g.multiply(&Element::delta_pow(-1), x)?, &Element::delta_pow(1))?;
            ensure(g.tau_element(x, 1) == conj, || format!("B{n}: τ(x) ≠ Δ⁻¹xΔ"))?;
        }
        Ok(())
    });
    r.run("complement multiplies to a delta power", || {
        for (n, x, _, _) in &samples {
            let g = b(*n);
            let y = g.multiply(x, &Element::delta_pow(-x.inf()))?;
            let c = g.complement(&y)?;
            ensure(g.multiply(&y, &c)? == Element::delta_pow(y.sup()), || format!("B{n}: y·∂y ≠ Δ^sup"))?;
        }
        Ok(())
    });
    r.run("gcd divides both and is maximal on atoms", || {
        for (n, x, y, _) in &samples {
            let g = b(*n);
            let d = g.left_gcd(x, y)?;
            ensure(g.left_divides(&d, x) && g.left_divides(&d, y), || format!("B{n}: gcd does not divide"))?;
            for i in 1..*n {
                let ds = g.multiply(&d, &g.sigma_element(i)?)?;
                ensure(!(g.left_divides(&ds, x) && g.left_divides(&ds, y)), || format!("B{n}: gcd·σ{i} divides both"))?;
            }
        }
        Ok(())
    });
    r.run("abelian fixture arithmetic", || {
        let z = zn_structure(3)?;
        let e1 = z.simple_element(z.unit(1)?);
        let e2 = z.simple_element(z.unit(2)?);
        let e3 = z.simple_element(z.unit(3)?);
        let all = z.multiply(&z.multiply(&e1, &e2)?, &e3)?;
        ensure(all == Element::delta_pow(1), || "e1+e2+e3 ≠ Δ".into())?;
        ensure(z.multiply(&e1, &e2)? == z.multiply(&e2, &e1)?, || "not commutative".into())
    });
}

fn absorb_suite(r: &mut Runner, seed: u64, config: &SearchConfig) {
    let mut rng = sample::rng(seed ^ 0xab);
    let b4 = b(4);
    r.run("certificates absorb", || {
        for _ in 0..20 {
            let y = sample::positive_factors(&b4, rng.gen_range(1..=2), &mut rng);
            if let Some(c) = absorb::is_absorbable(&b4, &y, config)? {
                ensure(absorb::absorbs(&b4, &c.x, &y)?, || "certificate does not absorb".into())?;
                ensure(c.x.inf() == 0 && c.x.sup() == y.sup(), || "certificate has the wrong shape".into())?;
            }
        }
        Ok(())
    });
    r.run("absorbability agrees with brute force on short B4 elements", || {
        let proper: Vec<Perm> = b4.simples().into_iter().filter(|&s| s != b4.identity() && s != b4.delta()).collect();
        for _ in 0..15 {
            let y = sample::positive_factors(&b4, 1, &mut rng);
            let found = absorb::is_absorbable(&b4, &y, config)?.is_some();
            let brute = proper.iter().any(|&s| {
                absorb::absorbs(&b4, &b4.simple_element(s), &y).unwrap_or(false)
            });
            ensure(found == brute, || format!("disagreement on {}", b4.format_element(&y)))?;
        }
        Ok(())
    });
    r.run("inverse of absorbable is absorbable", || {
        for _ in 0..10 {
            let y = sample::positive_factors(&b4, 1, &mut rng);
            let a = absorb::is_absorbable(&b4, &y, config)?.is_some();
            let ai = absorb::is_absorbable(&b4, &b4.invert(&y), config)?.is_some();
            ensure(a == ai, || "y and y⁻¹ disagree".into())?;
        }
        Ok(())
    });
    r.run("cache round trip", || {
        let list = absorb::enumerate_absorbable(&b(3), 3, config)?;
        let text = absorb::render_cache(&b(3), 3, &list);
        let back = absorb::parse_cache(&b(3), 3, &text).map_err(CheckError::Fail)?;
        ensure(back == list, || "cache did not round trip".into())
    });
}

fn complex_suite(r: &mut Runner, seed: u64, config: &SearchConfig) {
    let mut rng = sample::rng(seed ^ 0xc0);
    let b4 = b(4);
    let cx = ALComplex::new(&b4, *config);
    let pairs: Vec<(Braid, Braid)> = (0..25)
        .map(|_| {
            let (i, j) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
            (sample::positive_factors(&b4, i, &mut rng), sample::positive_factors(&b4, j, &mut rng))
        })
        .collect();
    r.run("preferred paths pass through the gcd vertex", || {
        for (x, y) in &pairs {
            let (v, w) = (cx.vertex_of(x), cx.vertex_of(y));
            let d = cx.gcd_vertex(&v, &w)?;
            let path = cx.preferred_path(&v, &w)?;
            ensure(path.vertices.contains(&d), || "gcd vertex missing from path".into())?;
        }
        Ok(())
    });
    r.run("preferred paths are symmetric", || {
        for (x, y) in &pairs {
            let (v, w) = (cx.vertex_of(x), cx.vertex_of(y));
            let mut back = cx.preferred_path(&w, &v)?.vertices;
            back.reverse();
            ensure(back == cx.preferred_path(&v, &w)?.vertices, || "A(w,v) is not A(v,w) reversed".into())?;
        }
        Ok(())
    });
    r.run("preferred path labels are left-weighted", || {
        for (x, y) in &pairs {
            let path = cx.preferred_path(&cx.vertex_of(x), &cx.vertex_of(y))?;
            ensure(path.labels.windows(2).all(|p| b4.is_left_weighted(p[0], p[1])), || "label pair not left-weighted".into())?;
        }
        Ok(())
    });
    r.run("triangles are 2-thin", || {
        for k in 0..8 {
            let (x, y) = &pairs[k];
            let z = &pairs[k + 8].0;
            let report = cx.triangle_thinness_report(&cx.vertex_of(x), &cx.vertex_of(y), &cx.vertex_of(z))?;
            ensure(report.max_gap() <= 2, || format!("gap {}", report.max_gap()))?;
        }
        Ok(())
    });
    r.run("Δ² acts trivially on vertices", || {
        for (x, _) in &pairs {
            let v = cx.vertex_of(x);
            ensure(cx.act(&Element::delta_pow(2), &v)? == v, || "Δ² moved a vertex".into())?;
        }
        Ok(())
    });
}

fn special_suite(r: &mut Runner, seed: u64, config: &SearchConfig) {
    let mut rng = sample::rng(seed ^ 0x5e);
    r.run("x_n properties for n = 4..8", || {
        for n in 4..=8 {
            let rep = special::check_x_properties(n)?;
            ensure(rep.passes(), || rep.to_string())?;
        }
        Ok(())
    });
    let b4 = b(4);
    let x = special::x_n(4).expect("x_4");
    let x5 = b4.power(&x, 5).expect("x_4^5");
    let prefixes: Vec<Braid> = (0..30).map(|_| sample::prefix(&b4, &x5, &mut rng)).collect();
    r.run("prefixes of x_4^5 sit between consecutive powers", || {
        for z in &prefixes {
            ensure(special::check_between_powers(&b4, &x, z, 5)?.passes(), || b4.format_element(z))?;
        }
        Ok(())
    });
    r.run("round-preserving braids split into at most nine absorbables", || {
        for k in 0..30 {
            let g = b(4 + k % 3);
            let (y, c) = sample::round_preserving(&g, rng.gen_range(1..10), &mut rng);
            let pieces = special::nine_absorbable_decomposition(&g, &y, c, config)?;
            ensure(pieces.len() <= 9, || format!("{} pieces", pieces.len()))?;
        }
        Ok(())
    });
}

fn golden_suite(r: &mut Runner, config: &SearchConfig) {
    let b3 = b(3);
    let b4 = b(4);
    let b5 = b(5);
    r.run("σ1²σ2²σ3²σ2²σ1 is absorbed by σ1σ2⁴σ1²σ2σ3", || {
        let y = b4.word(&[1, 1, 2, 2, 3, 3, 2, 2, 1])?;
        let x = b4.word(&[1, 2, 2, 2, 2, 1, 1, 2, 3])?;
        ensure(absorb::absorbs(&b4, &x, &y)?, || "given absorber fails".into())?;
        let shown: [&[usize]; 5] = [&[1, 2, 1], &[1, 2, 1, 3], &[1, 2, 3, 2], &[2, 3, 2], &[2, 3, 2, 1]];
        let expected = b4.from_simples(0, &shown.iter().map(|w| b4.simple_from_word(w)).collect::<Result<Vec<_>, _>>()?)?;
        let xy = b4.multiply(&x, &y)?;
        ensure(xy == expected && xy.factors().len() == 5, || "x·y differs from the displayed product".into())?;
        let cert = absorb::is_absorbable(&b4, &y, config)?.ok_or_else(|| CheckError::Fail("search found no absorber".into()))?;
        ensure(absorb::absorbs(&b4, &cert.x, &y)?, || "certificate fails".into())
    });
    r.run("(σ1σ3)² is not absorbable", || {
        let y = b4.word(&[1, 3, 1, 3])?;
        ensure(absorb::is_absorbable(&b4, &y, config)?.is_none(), || "absorber found".into())
    });
    r.run("σ_i⁻¹Δ is not absorbable in B4 and B5", || {
        for g in [&b4, &b5] {
            for i in 1..g.strands() {
                let y = g.simple_element(g.right_complement(g.sigma(i)?));
                ensure(absorb::is_absorbable(g, &y, config)?.is_none(), || format!("σ{i}⁻¹Δ absorbable in B{}", g.strands()))?;
            }
        }
        Ok(())
    });
    r.run("the absorbables of B3 up to length 3 are σ1 and σ2", || {
        let list = absorb::enumerate_absorbable(&b3, 3, config)?;
        let mut expected = vec![b3.sigma_element(1)?, b3.sigma_element(2)?];
        expected.sort_by(|a, b| a.factors().cmp(b.factors()));
        ensure(list == expected, || format!("got {} elements", list.len()))
    });
    r.run("multiples of unit vectors in Z^3 are absorbable", || {
        let z = zn_structure(3)?;
        for i in 1..=3 {
            let e = z.simple_element(z.unit(i)?);
            for k in 1..=4 {
                let y = z.power(&e, k)?;
                ensure(absorb::is_absorbable(&z, &y, config)?.is_some(), || format!("{k}·e{i} not absorbable"))?;
            }
        }
        Ok(())
    });
    r.run("Δ^k is a product of three absorbables", || {
        for n in [4, 5] {
            for k in [-2, -1, 1, 2] {
                ensure(special::delta_three_absorbables(n, k)?.len() == 3, || format!("n={n}, k={k}"))?;
            }
        }
        Ok(())
    });
    r.run("x_n golden properties for n = 4..10", || {
        for n in 4..=10 {
            let rep = special::check_x_properties(n)?;
            ensure(rep.passes(), || rep.to_string())?;
        }
        let x4 = special::x_n(4)?;
        let shown: [&[usize]; 6] = [&[2], &[2, 1, 3], &[1, 3, 2, 1, 3], &[1, 3, 2, 1, 3], &[1, 3, 2], &[2]];
        let words: Vec<Perm> = shown.iter().map(|w| b4.simple_from_word(w)).collect::<Result<_, _>>()?;
        ensure(x4.factors() == &words[..], || "x_4 differs from its displayed word".into())
    });
    r.run("reducible braid splits into interior and tubular parts", || {
        let c = RoundCurve::new(5, 1, 3)?;
        let y = b5.word(&[1, 2, 1, 4, 3, 2, 1, 1, 2, 1, 3, 2, 4, 4, 3, 2, 1])?;
        let t = special::tube_decomposition(&b5, &y, c)?.ok_or_else(|| CheckError::Fail("curve not kept round".into()))?;
        ensure(t.y_int == b5.word(&[1, 2, 1, 1, 2])?, || "interior part differs".into())?;
        ensure(t.y_tub == b5.word(&[4, 3, 2, 1, 1, 2, 3, 4, 4, 3, 2, 1])?, || "tubular part differs".into())?;
        ensure(absorb::absorbs(&b5, &b5.word(&[4, 4])?, &t.y_int)?, || "σ4² does not absorb y_int".into())?;
        ensure(absorb::absorbs(&b5, &b5.word(&[1, 1, 1])?, &t.y_tub)?, || "σ1³ does not absorb y_tub".into())?;
        let pieces = special::nine_absorbable_decomposition(&b5, &y, c, config)?;
        ensure(pieces.len() <= 9, || format!("{} pieces", pieces.len()))
    });
    r.run("x_4 is at distance between 2 and 6 from the identity", || {
        let cx = ALComplex::new(&b4, *config);
        let v = cx.vertex_of(&special::x_n(4)?);
        let one = cx.identity_vertex();
        ensure(cx.are_adjacent(&one, &v)?.is_none(), || "x_4 adjacent to 1".into())?;
        let ub = cx.distance_upper_bound(&one, &v, 2, 6, 2_000_000)?;
        ensure(matches!(ub, Some(d) if d <= 6), || format!("upper bound {ub:?}"))
    });
}
