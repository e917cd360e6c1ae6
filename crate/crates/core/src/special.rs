//! Braid-specific constructions: the rigid elements `x_n`, the prefix
//! counting function `λ_x`, decompositions of `Δ^k` and of braids that keep a
//! round curve round into few absorbable pieces.

use std::fmt;

use thiserror::Error;

use crate::absorb::{self, AbsorbError, SearchConfig};
use crate::braid::{BraidGroup, Perm};
use crate::complex::{ALComplex, ComplexError};
use crate::kernel::{Element, Garside, GarsideOps, KernelError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecialError {
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Absorb(#[from] AbsorbError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invariant breach: {0}")]
    InvariantBreach(String),
}

pub type Result<T> = std::result::Result<T, SpecialError>;

type Braid = Element<Perm>;

fn floor_half(k: usize) -> usize {
    k / 2
}

/// `σ_i^{-1}Δ` in `B_n` as an element.
fn atom_complement(g: &BraidGroup, i: usize) -> Result<Braid> {
    let s = g.sigma_element(i)?;
    Ok(g.multiply(&g.invert(&s), &Element::delta_pow(1))?)
}

/// `σ_a σ_{a±1} ⋯ σ_b`, empty when the range is empty in the given direction.
fn atom_run(g: &BraidGroup, from: usize, to: usize, ascending: bool) -> Result<Braid> {
    let letters: Vec<usize> = if ascending {
        if from > to { Vec::new() } else { (from..=to).collect() }
    } else if from < to {
        Vec::new()
    } else {
        (to..=from).rev().collect()
    };
    Ok(g.word(&letters)?)
}

/// `u_n = sh(σ_{⌊(n−2)/2⌋}⁻¹Δ_{n−2}) · σ_1⋯σ_{⌊(n−1)/2⌋} · σ_{n−1}⋯σ_{⌊(n+3)/2⌋}`, `n ≥ 5`.
pub fn u_n(n: usize) -> Result<Braid> {
    if n < 5 {
        return Err(SpecialError::Precondition(format!("u_n needs n ≥ 5, got {n}")));
    }
    let g = BraidGroup::new(n)?;
    let small = BraidGroup::new(n - 2)?;
    let head = small.shift(&atom_complement(&small, floor_half(n - 2))?, 1, &g)?;
    let up = atom_run(&g, 1, floor_half(n - 1), true)?;
    let down = atom_run(&g, n - 1, floor_half(n + 3), false)?;
    Ok(g.multiply(&g.multiply(&head, &up)?, &down)?)
}

/// The braid `x_n`, `n ≥ 4`, built literally from its defining product.
pub fn x_n(n: usize) -> Result<Braid> {
    if n < 4 {
        return Err(SpecialError::Precondition(format!("x_n needs n ≥ 4, got {n}")));
    }
    let g = BraidGroup::new(n)?;
    let b4 = BraidGroup::new(4)?;
    let seed = b4.word(&[2, 2, 1, 3])?;
    let mut prefix = b4.shift(&seed, floor_half(n - 3), &g)?;
    for k in (5..=n).filter(|k| k % 2 == n % 2) {
        let bk = BraidGroup::new(k)?;
        let twisted = bk.tau_element(&u_n(k)?, floor_half(k + 1) as i64);
        prefix = g.multiply(&prefix, &bk.shift(&twisted, floor_half(n - k), &g)?)?;
    }
    let t = floor_half(n + 1) as i64;
    let m1 = g.tau_element(&atom_complement(&g, floor_half(n + 1))?, t);
    let m2 = g.tau_element(&atom_complement(&g, floor_half(n))?, t);
    let tail = g.rev(&prefix)?;
    let x = g.multiply(&g.multiply(&g.multiply(&prefix, &m1)?, &m2)?, &tail)?;
    Ok(x)
}

/// Outcome of checking the structural properties of `x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XReport {
    pub n: usize,
    pub length: usize,
    pub expected_length: usize,
    pub inf_zero: bool,
    pub length_formula: bool,
    /// Left and right normal forms have the same factors.
    pub normal_forms_agree: bool,
    /// First and last factor are both the atom `σ_{⌊(n+1)/2⌋}`.
    pub ends_single_atom: bool,
    /// 0-based positions of the factor `τ^{⌊(n+1)/2⌋}(σ_{⌊(n+1)/2⌋}⁻¹Δ)`.
    pub complement_factor_at: Vec<usize>,
    pub rigid: bool,
}

impl XReport {
    pub fn passes(&self) -> bool {
        self.inf_zero
            && self.length_formula
            && self.normal_forms_agree
            && self.ends_single_atom
            && !self.complement_factor_at.is_empty()
            && self.rigid
    }
}

impl fmt::Display for XReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "pass" } else { "FAIL" };
        writeln!(f, "x_{}: length {} (expected {})", self.n, self.length, self.expected_length)?;
        writeln!(f, "  inf = 0: {}", mark(self.inf_zero))?;
        writeln!(f, "  length formula: {}", mark(self.length_formula))?;
        writeln!(f, "  left = right normal form: {}", mark(self.normal_forms_agree))?;
        writeln!(f, "  first = last = single atom: {}", mark(self.ends_single_atom))?;
        writeln!(
            f,
            "  atom-complement factor at {:?}: {}",
            self.complement_factor_at,
            mark(!self.complement_factor_at.is_empty())
        )?;
        write!(f, "  rigid: {}", mark(self.rigid))
    }
}

pub fn check_x_properties(n: usize) -> Result<XReport> {
    let g = BraidGroup::new(n)?;
    let x = x_n(n)?;
    let expected_length = 2 * floor_half(n + 1) + 2;
    let rnf = g.right_normal_form(&x);
    let mid = g.sigma(floor_half(n + 1))?;
    let f = x.factors();
    let ends_single_atom = f.first() == Some(&mid) && f.last() == Some(&mid);
    let target = g.tau_pow(
        g.right_complement(g.sigma(floor_half(n + 1))?),
        floor_half(n + 1) as i64,
    );
    let complement_factor_at = f.iter().enumerate().filter(|(_, &s)| s == target).map(|(i, _)| i).collect();
    Ok(XReport {
        n,
        length: x.canonical_length(),
        expected_length,
        inf_zero: x.inf() == 0,
        length_formula: x.canonical_length() == expected_length && x.sup() == expected_length as i64,
        normal_forms_agree: rnf.delta_power == 0 && rnf.factors == f,
        ends_single_atom,
        complement_factor_at,
        rigid: !f.is_empty() && g.is_rigid(&x)?,
    })
}

/// `λ_x(z) = max{k : x^k ≼ z}` for `z` of infimum 0.
pub fn lambda_x<G: Garside>(g: &G, x: &Element<G::Simple>, z: &Element<G::Simple>) -> Result<usize> {
    if z.inf() != 0 {
        return Err(SpecialError::Precondition(format!("λ_x needs inf(z) = 0, got {}", z.inf())));
    }
    if x.inf() != 0 || x.canonical_length() == 0 {
        return Err(SpecialError::Precondition("λ_x needs x with inf 0 and ℓ ≥ 1".into()));
    }
    let mut k = 0;
    let mut power = x.clone();
    while power.canonical_length() <= z.canonical_length() && g.left_divides(&power, z) {
        k += 1;
        power = g.multiply(&power, x)?;
    }
    Ok(k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerCheck {
    pub lambda: usize,
    /// Main conclusion of the check.
    pub holds: bool,
    /// Secondary conclusion, when the statement has one.
    pub head_holds: bool,
}

impl PowerCheck {
    pub fn passes(&self) -> bool {
        self.holds && self.head_holds
    }
}

/// For `z ≼ x^m`: `x^λ ≼ z ≼ x^{λ+1}` and `Δ^{λr} ∧ z = x^λ`.
pub fn check_between_powers<G: Garside>(
    g: &G,
    x: &Element<G::Simple>,
    z: &Element<G::Simple>,
    m: usize,
) -> Result<PowerCheck> {
    let xm = g.power(x, m as i64)?;
    if z.inf() != 0 || !g.left_divides(z, &xm) {
        return Err(SpecialError::Precondition("z must have inf 0 and divide x^m".into()));
    }
    let lambda = lambda_x(g, x, z)?;
    let lo = g.power(x, lambda as i64)?;
    let hi = g.multiply(&lo, x)?;
    let holds = g.left_divides(&lo, z) && g.left_divides(z, &hi);
    let r = x.canonical_length();
    let head_holds = g.head(z, lambda * r) == lo;
    Ok(PowerCheck { lambda, holds, head_holds })
}

/// For `inf z = 0`, `λ_x(z) ≥ 2`: the first `(λ−1)r` factors of `z` are `x^{λ−1}`.
pub fn check_initial_segment<G: Garside>(
    g: &G,
    x: &Element<G::Simple>,
    z: &Element<G::Simple>,
) -> Result<PowerCheck> {
    let lambda = lambda_x(g, x, z)?;
    if lambda < 2 {
        return Err(SpecialError::Precondition(format!("needs λ_x(z) ≥ 2, got {lambda}")));
    }
    let r = x.canonical_length();
    let holds = g.head(z, (lambda - 1) * r) == g.power(x, lambda as i64 - 1)?;
    Ok(PowerCheck { lambda, holds, head_holds: true })
}

/// For `x^{k+1} ≽ z ≽ x^k`: the last `kr` factors of `z` are those of `x^k`.
pub fn check_final_segment<G: Garside>(
    g: &G,
    x: &Element<G::Simple>,
    z: &Element<G::Simple>,
    k: usize,
) -> Result<PowerCheck> {
    let xk = g.power(x, k as i64)?;
    let xk1 = g.multiply(&xk, x)?;
    if z.inf() != 0 || !g.right_divides(&xk, z) || !g.right_divides(z, &xk1) {
        return Err(SpecialError::Precondition("z must have inf 0 and sit between x^k and x^{k+1} as a suffix".into()));
    }
    let kr = k * x.canonical_length();
    let f = z.factors();
    let holds = f.len() >= kr && f[f.len() - kr..] == *xk.factors();
    Ok(PowerCheck { lambda: lambda_x(g, x, z)?, holds, head_holds: true })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCheck {
    pub lambda1: usize,
    pub lambda2: usize,
    /// `A(x^{λ1+1}, x^{λ2−1})` is a contiguous piece of `A(v1, v2)`.
    pub contained: bool,
}

pub fn check_path_through_powers<G: Garside>(
    cx: &ALComplex<'_, G>,
    x: &Element<G::Simple>,
    z1: &Element<G::Simple>,
    z2: &Element<G::Simple>,
) -> Result<PathCheck> {
    let g = cx.structure();
    let lambda1 = lambda_x(g, x, z1)?;
    let lambda2 = lambda_x(g, x, z2)?;
    if lambda2 < lambda1 + 3 {
        return Err(SpecialError::Precondition(format!("needs λ2 − λ1 ≥ 3, got {lambda1} and {lambda2}")));
    }
    let big = cx.preferred_path(&cx.vertex_of(z1), &cx.vertex_of(z2))?.vertices;
    let a = cx.vertex_of(&g.power(x, lambda1 as i64 + 1)?);
    let b = cx.vertex_of(&g.power(x, lambda2 as i64 - 1)?);
    let small = cx.preferred_path(&a, &b)?.vertices;
    let contained = big.windows(small.len()).any(|w| w == &small[..]);
    Ok(PathCheck { lambda1, lambda2, contained })
}

/// A factor of a decomposition together with an element absorbing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub factor: Braid,
    pub absorber: Braid,
    /// Which construction produced the absorber.
    pub rule: String,
}

fn verified(g: &BraidGroup, factor: Braid, absorber: Braid, rule: &str) -> Result<Piece> {
    if !absorb::absorbs(g, &absorber, &factor)? {
        return Err(SpecialError::InvariantBreach(format!("{rule}: absorber does not absorb its factor")));
    }
    Ok(Piece { factor, absorber, rule: rule.to_string() })
}

/// `Δ^k = A·B·C` with `A = σ1^k`, `B = σ3^k`, `C = A⁻¹B⁻¹Δ^k` for `k > 0`,
/// and `Δ^k = C'⁻¹B'⁻¹A'⁻¹` for `k < 0` from the triple of `−k`.
pub fn delta_three_absorbables(n: usize, k: i64) -> Result<Vec<Piece>> {
    if n < 4 {
        return Err(SpecialError::Precondition(format!("needs n ≥ 4, got {n}")));
    }
    if k == 0 {
        return Err(SpecialError::Precondition("needs k ≠ 0".into()));
    }
    let g = BraidGroup::new(n)?;
    let m = k.abs();
    let a = g.power(&g.sigma_element(1)?, m)?;
    let b = g.power(&g.sigma_element(3)?, m)?;
    let ab = g.multiply(&a, &b)?;
    let c = g.multiply(&g.invert(&ab), &Element::delta_pow(m))?;
    let pieces = if k > 0 {
        vec![
            verified(&g, a.clone(), b.clone(), "σ3^k absorbs σ1^k")?,
            verified(&g, b.clone(), a.clone(), "σ1^k absorbs σ3^k")?,
            verified(&g, c, a, "σ1^k absorbs A⁻¹B⁻¹Δ^k")?,
        ]
    } else {
        let ac = g.multiply(&a, &c)?;
        let abb = g.multiply(&a, &b)?;
        let ba = g.multiply(&b, &a)?;
        vec![
            verified(&g, g.invert(&c), ac, "A·C absorbs C⁻¹")?,
            verified(&g, g.invert(&b), abb, "A·B absorbs B⁻¹")?,
            verified(&g, g.invert(&a), ba, "B·A absorbs A⁻¹")?,
        ]
    };
    let product = pieces.iter().try_fold(Element::identity(), |acc, p| g.multiply(&acc, &p.factor))?;
    if product != Element::delta_pow(k) {
        return Err(SpecialError::InvariantBreach("factors do not multiply to Δ^k".into()));
    }
    Ok(pieces)
}

/// A circle around the consecutive punctures `i..=j` (1-based), enclosing at
/// least 2 and at most `n − 1` of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoundCurve {
    pub i: usize,
    pub j: usize,
}

impl RoundCurve {
    pub fn new(n: usize, i: usize, j: usize) -> Result<RoundCurve> {
        if i == 0 || j > n || j <= i || j - i + 1 > n - 1 {
            return Err(SpecialError::Precondition(format!("[{i},{j}] is not a round curve in B{n}")));
        }
        Ok(RoundCurve { i, j })
    }

    /// Every round curve of `B_n`.
    pub fn all(n: usize) -> Vec<RoundCurve> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if j - i + 1 <= n - 1 {
                    out.push(RoundCurve { i, j });
                }
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.j - self.i + 1
    }

    fn contains(&self, k: usize) -> bool {
        (self.i..=self.j).contains(&k)
    }
}

impl fmt::Display for RoundCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

/// Image of the curve under a simple braid, if it stays round.
fn push_simple(s: &Perm, c: RoundCurve) -> Option<RoundCurve> {
    let images: Vec<usize> = (c.i..=c.j).map(|k| s.image(k - 1) + 1).collect();
    let lo = *images.iter().min()?;
    let hi = *images.iter().max()?;
    (hi - lo + 1 == images.len()).then_some(RoundCurve { i: lo, j: hi })
}

fn reverse_curve(n: usize, c: RoundCurve) -> RoundCurve {
    RoundCurve { i: n + 1 - c.j, j: n + 1 - c.i }
}

/// Pushes `c` through `y` factor by factor; each `Δ` reverses the interval.
pub fn push_round_curve(g: &BraidGroup, y: &Braid, c: RoundCurve) -> Option<RoundCurve> {
    let n = g.strands();
    let mut cur = if y.delta_power().rem_euclid(2) == 1 { reverse_curve(n, c) } else { c };
    for s in y.factors() {
        cur = push_simple(s, cur)?;
    }
    Some(cur)
}

/// `y = y_int · y_tub` for a positive braid keeping a round curve round.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TubeDecomposition {
    pub y: Braid,
    pub curve: RoundCurve,
    /// Crossings among tube strands, moved to the start of the tube.
    pub y_int: Braid,
    /// `y` with the tube strands kept parallel.
    pub y_tub: Braid,
    /// Tube interval before each factor, and after the last one.
    pub tube: Vec<RoundCurve>,
    /// The tubular part of each simple factor.
    pub tub_factors: Vec<Perm>,
}

/// Relative order of the tube strands inside a simple factor, moved onto `target`.
fn interior_part(n: usize, s: &Perm, tube: RoundCurve, target: RoundCurve) -> Perm {
    let mut img: Vec<usize> = (1..=n).collect();
    let mut ends: Vec<(usize, usize)> = (tube.i..=tube.j).map(|k| (s.image(k - 1), k)).collect();
    ends.sort();
    // Position `tube.i + a` goes to `target.i + rank of its endpoint`.
    for (rank, &(_, k)) in ends.iter().enumerate() {
        img[target.i - 1 + (k - tube.i)] = target.i + rank;
    }
    Perm::from_one_line(&img).expect("interior part is a permutation")
}

pub fn tube_decomposition(g: &BraidGroup, y: &Braid, c: RoundCurve) -> Result<Option<TubeDecomposition>> {
    if y.inf() < 0 {
        return Err(SpecialError::Precondition("tube decomposition needs a positive braid".into()));
    }
    let n = g.strands();
    let mut simples = vec![g.delta(); y.delta_power() as usize];
    simples.extend_from_slice(y.factors());
    let mut tube = vec![c];
    let mut ints = Vec::new();
    let mut tubs = Vec::new();
    for s in &simples {
        let cur = *tube.last().expect("nonempty");
        let Some(next) = push_simple(s, cur) else { return Ok(None) };
        let local = interior_part(n, s, cur, cur);
        let tub = g
            .left_quotient(local, *s)
            .ok_or_else(|| SpecialError::InvariantBreach("interior part is not a prefix of its factor".into()))?;
        ints.push(interior_part(n, s, cur, c));
        tubs.push(tub);
        tube.push(next);
    }
    let y_int = g.from_simples(0, &ints)?;
    let y_tub = g.from_simples(0, &tubs)?;
    if g.multiply(&y_int, &y_tub)? != *y {
        return Err(SpecialError::InvariantBreach("y_int · y_tub differs from y".into()));
    }
    Ok(Some(TubeDecomposition { y: y.clone(), curve: c, y_int, y_tub, tube, tub_factors: tubs }))
}

/// `∏_{ι=1}^{p} τ^{e(ι)}(w)` for `e(ι) = ι` or `p − ι`.
fn twisted_product(g: &BraidGroup, w: &Braid, p: i64, descending: bool) -> Result<Braid> {
    let mut acc = Element::identity();
    for iota in 1..=p {
        let e = if descending { p - iota } else { iota };
        acc = g.multiply(&acc, &g.tau_element(w, e))?;
    }
    Ok(acc)
}

/// Tries both exponent orders of the twisted product and keeps the first
/// that absorbs `y`; the rule records which one matched.
fn twisted_absorber(g: &BraidGroup, y: &Braid, w: &Braid, p: i64, label: &str) -> Result<Piece> {
    for descending in [false, true] {
        let x = twisted_product(g, w, p, descending)?;
        if absorb::absorbs(g, &x, y)? {
            let e = if descending { "p−ι" } else { "ι" };
            return Ok(Piece { factor: y.clone(), absorber: x, rule: format!("∏ τ^{e}({label})") });
        }
    }
    Err(SpecialError::InvariantBreach(format!("no orientation of ∏ τ(…{label}) absorbs the factor")))
}

/// `Δ_C`: the half twist of the strands starting inside `c`.
fn delta_curve(g: &BraidGroup, c: RoundCurve) -> Result<Braid> {
    let mut img: Vec<usize> = (1..=g.strands()).collect();
    for k in c.i..=c.j {
        img[k - 1] = c.i + c.j - k;
    }
    let p = Perm::from_one_line(&img).expect("reversal of a block");
    Ok(g.simple_element(p))
}

fn interior_pieces(g: &BraidGroup, y_int: &Braid, c: RoundCurve) -> Result<Vec<Piece>> {
    let n = g.strands();
    if y_int.is_identity() {
        return Ok(Vec::new());
    }
    let p = y_int.sup();
    if c.size() < n - 1 {
        if let Some(j) = (1..n).find(|&j| !c.contains(j) && !c.contains(j + 1)) {
            let x = g.power(&g.sigma_element(j)?, p)?;
            return Ok(vec![verified(g, y_int.clone(), x, &format!("σ{j}^sup absorbs y_int"))?]);
        }
        let w = atom_run(g, 1, n - 1, true)?;
        return Ok(vec![twisted_absorber(g, y_int, &w, p, "σ1⋯σ(n−1)")?]);
    }
    // The curve misses one puncture; conjugating by Δ makes it the first.
    let flip = c.i == 1;
    let (y, c) = if flip { (g.tau_element(y_int, 1), reverse_curve(n, c)) } else { (y_int.clone(), c) };
    let dc = delta_curve(g, c)?;
    let mut k = 0;
    let mut rest = y.clone();
    while g.left_divides(&dc, &rest) {
        rest = g.multiply(&g.invert(&dc), &rest)?;
        k += 1;
    }
    let w = atom_run(g, n - 1, 1, false)?;
    let mut pieces = Vec::new();
    if k > 0 {
        let i = c.i;
        let si = g.power(&g.sigma_element(i)?, k)?;
        let dk = g.power(&dc, k)?;
        let other = g.multiply(&g.invert(&si), &dk)?;
        pieces.push(twisted_absorber(g, &si, &w, k, "σ(n−1)⋯σ1")?);
        pieces.push(twisted_absorber(g, &other, &w, k, "σ(n−1)⋯σ1")?);
    }
    if !rest.is_identity() {
        pieces.push(twisted_absorber(g, &rest, &w, rest.sup(), "σ(n−1)⋯σ1")?);
    }
    if flip {
        for piece in &mut pieces {
            piece.factor = g.tau_element(&piece.factor, 1);
            piece.absorber = g.tau_element(&piece.absorber, 1);
            piece.rule = format!("τ-conjugate of {}", piece.rule);
            if !absorb::absorbs(g, &piece.absorber, &piece.factor)? {
                return Err(SpecialError::InvariantBreach("conjugated absorber fails".into()));
            }
        }
    }
    Ok(pieces)
}

/// An absorber for `y` among the powers `σ_j^sup(y)`, else from the search.
fn atom_power_or_search(g: &BraidGroup, y: &Braid, atoms: std::ops::Range<usize>, config: &SearchConfig, what: &str) -> Result<Option<Piece>> {
    for j in atoms {
        let x = g.power(&g.sigma_element(j)?, y.sup())?;
        if absorb::absorbs(g, &x, y)? {
            return Ok(Some(Piece { factor: y.clone(), absorber: x, rule: format!("σ{j}^sup absorbs {what}") }));
        }
    }
    Ok(absorb::is_absorbable(g, y, config)?
        .map(|cert| Piece { factor: y.clone(), absorber: cert.x, rule: format!("search certificate for {what}") }))
}

/// Minimal split of tubular factors into runs, each absorbed by a power of an
/// atom joining two tube strands at the start of the run, falling back to the
/// general search. `None` when some factor sits in no absorbable run.
fn tubular_runs(g: &BraidGroup, f: &[Perm], tube: &[RoundCurve], config: &SearchConfig) -> Result<Option<Vec<Piece>>> {
    let m = f.len();
    let mut best: Vec<Option<(usize, usize)>> = vec![None; m + 1];
    let mut cost = vec![usize::MAX; m + 1];
    let mut found: std::collections::HashMap<(usize, usize), Piece> = std::collections::HashMap::new();
    cost[0] = 0;
    for end in 1..=m {
        for start in 0..end {
            if cost[start] == usize::MAX {
                continue;
            }
            let run = g.from_simples(0, &f[start..end])?;
            if run.is_identity() {
                if cost[start] < cost[end] {
                    cost[end] = cost[start];
                    best[end] = Some((start, usize::MAX));
                }
                continue;
            }
            if cost[start] + 1 >= cost[end] {
                continue;
            }
            let t = tube[start];
            if let Some(p) = atom_power_or_search(g, &run, t.i..t.j, config, "tubular run")? {
                cost[end] = cost[start] + 1;
                best[end] = Some((start, end));
                found.insert((start, end), p);
            }
        }
    }
    if cost[m] == usize::MAX {
        return Ok(None);
    }
    let mut out = Vec::new();
    let mut end = m;
    while end > 0 {
        let (start, key_end) = best[end].expect("reachable");
        if key_end != usize::MAX {
            out.push(found.remove(&(start, key_end)).expect("stored piece"));
        }
        end = start;
    }
    out.reverse();
    Ok(Some(out))
}

/// `σ_a^k` in the braid group where the tube is collapsed to one strand,
/// cabled back into `B_n`; also returns where the tube ends up.
fn cabled_atom_power(g: &BraidGroup, tube: RoundCurve, a: usize, k: usize) -> Result<(Braid, RoundCurve)> {
    let n = g.strands();
    let s = tube.size();
    let mut q = tube.i;
    let mut w = Vec::new();
    for _ in 0..k {
        if a + 1 < q {
            w.push(a);
        } else if a > q {
            w.push(a + s - 1);
        } else if a + 1 == q {
            w.extend(a..a + s);
            q = a;
        } else {
            w.extend((a..a + s).rev());
            q = a + 1;
        }
    }
    Ok((g.word(&w)?, RoundCurve::new(n, q, q + s - 1)?))
}

/// Pieces for `y_tub`. Runs of normal form factors suffice unless some
/// factor holds every crossing but those inside the tube; then a cabled atom
/// power is split off first, as for `Δ_C^k` in the interior part.
fn tubular_pieces(g: &BraidGroup, t: &TubeDecomposition, config: &SearchConfig) -> Result<Vec<Piece>> {
    if let Some(pieces) = tubular_runs(g, &t.tub_factors, &t.tube, config)? {
        return Ok(pieces);
    }
    let n = g.strands();
    let start = t.curve;
    let collapsed = n - start.size() + 1;
    let mut best: Option<Vec<Piece>> = None;
    for k in 1..=t.tub_factors.len() {
        for a in 1..collapsed {
            let (head, after) = cabled_atom_power(g, start, a, k)?;
            let rest = g.multiply(&g.invert(&head), &t.y_tub)?;
            if rest.inf() < 0 {
                continue;
            }
            let Some(first) = atom_power_or_search(g, &head, 1..n, config, "cabled atom power")? else { continue };
            let mut pieces = vec![first];
            if !rest.is_identity() {
                let Some(td) = tube_decomposition(g, &rest, after)? else { continue };
                if !td.y_int.is_identity() {
                    continue;
                }
                let Some(more) = tubular_runs(g, &td.tub_factors, &td.tube, config)? else { continue };
                pieces.extend(more);
            }
            if best.as_ref().map_or(true, |b| pieces.len() < b.len()) {
                best = Some(pieces);
            }
        }
        if best.is_some() {
            break;
        }
    }
    best.ok_or_else(|| SpecialError::InvariantBreach("tubular part admits no absorbable split".into()))
}

/// A decomposition of `y` into at most nine absorbable factors, each with a
/// verified absorber, for `y` sending the round curve `c` to a round curve.
pub fn nine_absorbable_decomposition(
    g: &BraidGroup,
    y: &Braid,
    c: RoundCurve,
    config: &SearchConfig,
) -> Result<Vec<Piece>> {
    let n = g.strands();
    if n < 4 {
        return Err(SpecialError::Precondition(format!("needs n ≥ 4, got {n}")));
    }
    if push_round_curve(g, y, c).is_none() {
        return Err(SpecialError::Precondition(format!("y does not keep {c} round")));
    }
    let mut pieces = Vec::new();
    let p = y.delta_power();
    let mut rest = y.clone();
    let mut curve = c;
    if p != 0 {
        pieces.extend(delta_three_absorbables(n, p)?);
        rest = g.multiply(&Element::delta_pow(-p), y)?;
        if p.rem_euclid(2) == 1 {
            curve = reverse_curve(n, c);
        }
    }
    if !rest.is_identity() {
        let t = tube_decomposition(g, &rest, curve)?
            .ok_or_else(|| SpecialError::InvariantBreach("curve stops being round".into()))?;
        pieces.extend(interior_pieces(g, &t.y_int, curve)?);
        pieces.extend(tubular_pieces(g, &t, config)?);
    }
    let product = pieces.iter().try_fold(Element::identity(), |acc, pc| g.multiply(&acc, &pc.factor))?;
    if product != *y {
        return Err(SpecialError::InvariantBreach("pieces do not multiply to y".into()));
    }
    if pieces.len() > 9 {
        return Err(SpecialError::InvariantBreach(format!("{} pieces, more than nine", pieces.len())));
    }
    Ok(pieces)
}

/// Upper bounds on `d(1, g^i·1)` for `i = 1..=count`: the smaller of the
/// search bound and the number of pieces of a short absorbable decomposition
/// of `g^i` when some round curve stays round.
pub fn orbit_diameter_probe(
    cx: &ALComplex<'_, BraidGroup>,
    g_elem: &Braid,
    count: usize,
    gen_len: usize,
    radius: usize,
    vertex_budget: u64,
) -> Result<Vec<(usize, Option<usize>)>> {
    let g = cx.structure();
    let one = cx.identity_vertex();
    let mut out = Vec::new();
    let mut power = Element::identity();
    for i in 1..=count {
        power = g.multiply(&power, g_elem)?;
        let v = cx.vertex_of(&power);
        let decomposed = if g.strands() >= 4 {
            RoundCurve::all(g.strands())
                .into_iter()
                .filter(|&c| push_round_curve(g, &power, c).is_some())
                .filter_map(|c| nine_absorbable_decomposition(g, &power, c, cx.config()).ok())
                .map(|pieces| pieces.len())
                .min()
        } else {
            None
        };
        let searched = match cx.distance_upper_bound(&one, &v, gen_len, radius, vertex_budget) {
            Ok(d) => d,
            Err(ComplexError::Budget { .. }) if decomposed.is_some() => None,
            Err(e) => return Err(e.into()),
        };
        let bound = match (searched, decomposed) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        out.push((i, bound));
    }
    Ok(out)
}
