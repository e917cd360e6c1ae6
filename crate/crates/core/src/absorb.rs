//! Absorbable elements.
//!
//! `x` absorbs `y` when `inf(xy) = inf(x)` and `sup(xy) = sup(x)`; `y` is
//! absorbable when `inf(y) = 0` or `sup(y) = 0` and some `x` absorbs it.
//! A positive `y` of canonical length `k` is absorbable iff it is absorbed
//! by some `x` with `inf(x) = 0` and `sup(x) = k`, so the search is finite.
//!
//! The search does not walk over `x` directly. Writing `w = xy`, the element
//! `c = ∂w = w⁻¹Δ^k` is positive with `inf 0`, `sup k`, and `yc = ∂x` also
//! has `inf 0`, `sup k`. Conversely any such `c` yields the absorber
//! `x = Δ^k(yc)⁻¹`. Building `c = c_1⋯c_k` factor by factor, every prefix
//! `y·c_1⋯c_j` must keep `inf 0` and `sup k`; `sup` stays at `k` exactly when
//! the next factor left-divides `∂` of the current last factor, which gives
//! a narrow candidate set and immediate pruning on `inf`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use crate::kernel::{Element, Garside, GarsideOps, KernelError};

pub const DEFAULT_BUDGET: u64 = 100_000_000;
const CACHE_MAGIC: &str = "GARSIDE-ABSORB v1";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AbsorbError {
    #[error("search budget of {limit} nodes exceeded")]
    Budget { limit: u64 },
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("cache {path}: {message}")]
    Cache { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, AbsorbError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Maximum number of search nodes before giving up with an error.
    pub budget: u64,
    /// Split the search over the first factor with rayon.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: DEFAULT_BUDGET, parallel: true }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub visited: u64,
    pub pruned: u64,
}

/// `x` absorbs `y`, with `inf(x) = 0` and `sup(x) = ℓ(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<S> {
    pub y: Element<S>,
    pub x: Element<S>,
    pub stats: SearchStats,
}

/// Outcome of an absorbability search, including the statistics of a
/// search that found nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport<S> {
    pub absorber: Option<Element<S>>,
    pub stats: SearchStats,
}

/// The individual conditions of the absorption test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AbsorbCheck {
    /// `inf(y) = 0` or `sup(y) = 0`.
    pub degree: bool,
    pub inf_kept: bool,
    pub sup_kept: bool,
}

impl AbsorbCheck {
    pub fn holds(&self) -> bool {
        self.degree && self.inf_kept && self.sup_kept
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tri {
    Yes,
    No,
    Unknown,
}

pub fn absorb_check<G: Garside>(g: &G, x: &Element<G::Simple>, y: &Element<G::Simple>) -> Result<AbsorbCheck> {
    let xy = g.multiply(x, y)?;
    Ok(AbsorbCheck {
        degree: y.inf() == 0 || y.sup() == 0,
        inf_kept: xy.inf() == x.inf(),
        sup_kept: xy.sup() == x.sup(),
    })
}

/// Whether `x` absorbs `y`. False when `y` has neither `inf` nor `sup` zero.
pub fn absorbs<G: Garside>(g: &G, x: &Element<G::Simple>, y: &Element<G::Simple>) -> Result<bool> {
    Ok(absorb_check(g, x, y)?.holds())
}

/// Decides absorbability; the certificate is the first absorber found in
/// lexicographic order of the dual sequence `c`.
pub fn is_absorbable<G: Garside>(
    g: &G,
    y: &Element<G::Simple>,
    config: &SearchConfig,
) -> Result<Option<Certificate<G::Simple>>> {
    let report = search(g, y, config)?;
    Ok(report.absorber.map(|x| Certificate { y: y.clone(), x, stats: report.stats }))
}

/// Runs the absorbability search and reports statistics either way.
pub fn search<G: Garside>(
    g: &G,
    y: &Element<G::Simple>,
    config: &SearchConfig,
) -> Result<SearchReport<G::Simple>> {
    g.check(y)?;
    let none = |stats| Ok(SearchReport { absorber: None, stats });
    if y.is_identity() {
        return Ok(SearchReport { absorber: Some(Element::identity()), stats: SearchStats::default() });
    }
    if y.canonical_length() == 0 {
        // Δ^p with p ≠ 0 has inf = sup = p.
        return none(SearchStats::default());
    }
    if y.inf() == 0 {
        search_positive(g, y, config)
    } else if y.sup() == 0 {
        // x absorbs y⁻¹ ⇒ x·y⁻¹ absorbs y, with the same inf and sup.
        let u = g.invert(y);
        let report = search_positive(g, &u, config)?;
        let absorber = match report.absorber {
            Some(x) => Some(g.multiply(&x, &u)?),
            None => None,
        };
        Ok(SearchReport { absorber, stats: report.stats })
    } else {
        none(SearchStats::default())
    }
}

struct Dfs<'a, G: Garside> {
    g: &'a G,
    k: usize,
    candidates: Vec<G::Simple>,
    budget: u64,
    visited: AtomicU64,
    pruned: AtomicU64,
}

impl<G: Garside> Dfs<'_, G> {
    fn options(&self, z: &Element<G::Simple>, prev: Option<G::Simple>) -> Vec<G::Simple> {
        let last = *z.factors().last().expect("search keeps ℓ = k ≥ 1");
        let room = self.g.right_complement(last);
        self.candidates
            .iter()
            .copied()
            .filter(|&s| self.g.left_divides_simple(s, room))
            .filter(|&s| prev.map_or(true, |p| self.g.is_left_weighted(p, s)))
            .collect()
    }

    /// Extends `z = y·c` by `s`; `None` if the infimum rises.
    fn step(&self, z: &Element<G::Simple>, s: G::Simple) -> Result<Option<Element<G::Simple>>> {
        let seen = self.visited.fetch_add(1, Ordering::Relaxed) + 1;
        if seen > self.budget {
            return Err(AbsorbError::Budget { limit: self.budget });
        }
        let next = self.g.push_right(z, s);
        if next.inf() != 0 {
            self.pruned.fetch_add(1, Ordering::Relaxed);
            return Ok(None);
        }
        debug_assert_eq!(next.canonical_length(), self.k);
        Ok(Some(next))
    }

    fn extend(&self, z: &Element<G::Simple>, depth: usize, prev: G::Simple) -> Result<Option<Element<G::Simple>>> {
        if depth == self.k {
            return Ok(Some(z.clone()));
        }
        for s in self.options(z, Some(prev)) {
            if let Some(next) = self.step(z, s)? {
                if let Some(done) = self.extend(&next, depth + 1, s)? {
                    return Ok(Some(done));
                }
            }
        }
        Ok(None)
    }

    fn root(&self, y: &Element<G::Simple>, s: G::Simple) -> Result<Option<Element<G::Simple>>> {
        match self.step(y, s)? {
            Some(next) => self.extend(&next, 1, s),
            None => Ok(None),
        }
    }
}

fn search_positive<G: Garside>(
    g: &G,
    y: &Element<G::Simple>,
    config: &SearchConfig,
) -> Result<SearchReport<G::Simple>> {
    debug_assert_eq!(y.inf(), 0);
    let k = y.canonical_length();
    let (id, delta) = (g.identity(), g.delta());
    let dfs = Dfs {
        g,
        k,
        candidates: g.simples().into_iter().filter(|&s| s != id && s != delta).collect(),
        budget: config.budget,
        visited: AtomicU64::new(0),
        pruned: AtomicU64::new(0),
    };
    let first = dfs.options(y, None);
    let found = if config.parallel {
        first
            .par_iter()
            .map(|&s| dfs.root(y, s))
            .find_map_first(|r| match r {
                Ok(None) => None,
                other => Some(other),
            })
            .transpose()?
            .flatten()
    } else {
        let mut hit = None;
        for &s in &first {
            if let Some(w) = dfs.root(y, s)? {
                hit = Some(w);
                break;
            }
        }
        hit
    };
    let stats = SearchStats {
        visited: dfs.visited.load(Ordering::Relaxed),
        pruned: dfs.pruned.load(Ordering::Relaxed),
    };
    let absorber = match found {
        Some(yc) => {
            let x = g.multiply(&Element::delta_pow(k as i64), &g.invert(&yc))?;
            debug_assert!(absorbs(g, &x, y).unwrap_or(false));
            Some(x)
        }
        None => None,
    };
    Ok(SearchReport { absorber, stats })
}

/// All positive absorbable elements with `inf 0` and `1 ≤ ℓ ≤ max_len`,
/// ordered by length and then by factor sequence.
///
/// Built level by level: the normal-form prefix and the suffix obtained by
/// dropping the first factor of an absorbable element are both positive
/// subwords, hence absorbable, so each level only extends the previous one.
pub fn enumerate_absorbable<G: Garside>(
    g: &G,
    max_len: usize,
    config: &SearchConfig,
) -> Result<Vec<Element<G::Simple>>> {
    if max_len == 0 {
        return Err(KernelError::Precondition("enumeration needs L ≥ 1".into()).into());
    }
    let (id, delta) = (g.identity(), g.delta());
    let proper: Vec<G::Simple> = g.simples().into_iter().filter(|&s| s != id && s != delta).collect();
    let decide = |cands: Vec<Vec<G::Simple>>| -> Result<Vec<Vec<G::Simple>>> {
        let checked: Vec<Result<Option<Vec<G::Simple>>>> = cands
            .into_par_iter()
            .map(|f| {
                let e = g.from_simples(0, &f)?;
                debug_assert_eq!(e.factors(), &f[..]);
                let cfg = SearchConfig { parallel: false, ..*config };
                Ok(search(g, &e, &cfg)?.absorber.map(|_| f))
            })
            .collect();
        let mut out = Vec::new();
        for r in checked {
            if let Some(f) = r? {
                out.push(f);
            }
        }
        Ok(out)
    };
    let mut level = decide(proper.iter().map(|&s| vec![s]).collect())?;
    let mut all = level.clone();
    for _ in 1..max_len {
        let known: BTreeSet<Vec<G::Simple>> = level.iter().cloned().collect();
        let mut cands = Vec::new();
        for f in &level {
            let last = *f.last().expect("nonempty");
            for &s in &proper {
                if !g.is_left_weighted(last, s) {
                    continue;
                }
                let mut suffix = f[1..].to_vec();
                suffix.push(s);
                if !known.contains(&suffix) {
                    continue;
                }
                let mut next = f.clone();
                next.push(s);
                cands.push(next);
            }
        }
        level = decide(cands)?;
        if level.is_empty() {
            break;
        }
        all.extend(level.iter().cloned());
    }
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all.into_iter().map(|f| g.from_simples(0, &f).map_err(AbsorbError::from)).collect()
}

/// [`enumerate_absorbable`] backed by a text cache file.
///
/// A readable cache with a matching header is used after re-checking about
/// one entry in a hundred; a missing cache is computed and written.
pub fn enumerate_absorbable_cached<G: Garside>(
    g: &G,
    max_len: usize,
    config: &SearchConfig,
    path: &Path,
) -> Result<Vec<Element<G::Simple>>> {
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| cache_err(path, e.to_string()))?;
        let list = parse_cache(g, max_len, &text).map_err(|m| cache_err(path, m))?;
        for e in list.iter().step_by(100) {
            if search(g, e, config)?.absorber.is_none() {
                return Err(cache_err(
                    path,
                    format!("entry {} is not absorbable", format_cache_line(g, e)),
                ));
            }
        }
        return Ok(list);
    }
    let list = enumerate_absorbable(g, max_len, config)?;
    fs::write(path, render_cache(g, max_len, &list)).map_err(|e| cache_err(path, e.to_string()))?;
    Ok(list)
}

fn cache_err(path: &Path, message: String) -> AbsorbError {
    AbsorbError::Cache { path: path.display().to_string(), message }
}

fn cache_header<G: Garside>(g: &G, max_len: usize) -> String {
    format!("{CACHE_MAGIC} {} n={} L={max_len}", g.id(), g.size())
}

fn format_cache_line<G: Garside>(g: &G, e: &Element<G::Simple>) -> String {
    e.factors().iter().map(|&s| g.format_simple(s)).collect::<Vec<_>>().join("|")
}

pub fn render_cache<G: Garside>(g: &G, max_len: usize, list: &[Element<G::Simple>]) -> String {
    let mut out = cache_header(g, max_len);
    out.push('\n');
    for e in list {
        let _ = writeln!(out, "{}", format_cache_line(g, e));
    }
    out
}

pub fn parse_cache<G: Garside>(
    g: &G,
    max_len: usize,
    text: &str,
) -> std::result::Result<Vec<Element<G::Simple>>, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty file")?;
    if header.trim_end() != cache_header(g, max_len) {
        return Err(format!("header `{header}` does not match `{}`", cache_header(g, max_len)));
    }
    let mut out = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let factors: Option<Vec<G::Simple>> = line.split('|').map(|t| g.parse_simple(t)).collect();
        let factors = factors.ok_or_else(|| format!("line {}: bad simple in `{line}`", i + 2))?;
        let e = g.from_simples(0, &factors).map_err(|e| format!("line {}: {e}", i + 2))?;
        if e.factors() != &factors[..] || e.canonical_length() > max_len {
            return Err(format!("line {}: `{line}` is not a normal form of length ≤ {max_len}", i + 2));
        }
        out.push(e);
    }
    Ok(out)
}

/// Semi-decision for the variant where the absorber must preserve `inf` and
/// `sup` along every initial segment of the fraction-form letters
/// `u_a⁻¹, …, u_1⁻¹, v_1, …, v_b` of `y = u⁻¹v`.
///
/// `Yes` for absorbable `y`, `No` when `u` or `v` is not absorbable, and
/// otherwise `Yes` only if an absorber with `inf 0` and `sup ≤ search_bound`
/// is found.
pub fn is_absorbable_prime<G: Garside>(
    g: &G,
    y: &Element<G::Simple>,
    search_bound: usize,
    config: &SearchConfig,
) -> Result<Tri> {
    if y.is_identity() || search(g, y, config)?.absorber.is_some() {
        return Ok(Tri::Yes);
    }
    let frac = g.fraction_form(y)?;
    for part in [&frac.negative, &frac.positive] {
        if !part.is_identity() && search(g, part, config)?.absorber.is_none() {
            return Ok(Tri::No);
        }
    }
    // Letters of the fraction form and their running products.
    let mut letters = Vec::new();
    for &s in frac.negative.factors().iter().rev() {
        letters.push(g.invert(&g.simple_element(s)));
    }
    for &s in frac.positive.factors() {
        letters.push(g.simple_element(s));
    }
    let mut segments = Vec::with_capacity(letters.len());
    let mut acc = Element::identity();
    for l in &letters {
        acc = g.multiply(&acc, l)?;
        segments.push(acc.clone());
    }
    let keeps = |x: &Element<G::Simple>| -> Result<bool> {
        for seg in &segments {
            let xs = g.multiply(x, seg)?;
            if xs.inf() != x.inf() || xs.sup() != x.sup() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let (id, delta) = (g.identity(), g.delta());
    let proper: Vec<G::Simple> = g.simples().into_iter().filter(|&s| s != id && s != delta).collect();
    let mut visited = 0u64;
    let mut frontier: Vec<Vec<G::Simple>> = vec![Vec::new()];
    for _ in 0..search_bound {
        let mut next = Vec::new();
        for f in &frontier {
            for &s in &proper {
                if f.last().map_or(false, |&p| !g.is_left_weighted(p, s)) {
                    continue;
                }
                visited += 1;
                if visited > config.budget {
                    return Ok(Tri::Unknown);
                }
                let mut h = f.clone();
                h.push(s);
                let x = g.from_simples(0, &h)?;
                if keeps(&x)? {
                    return Ok(Tri::Yes);
                }
                next.push(h);
            }
        }
        frontier = next;
    }
    Ok(Tri::Unknown)
}
