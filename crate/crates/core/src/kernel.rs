//! Garside arithmetic over an abstract lattice of simple elements.
//!
//! A [`Garside`] implementation supplies the finite lattice of simple
//! elements (divisors of the Garside element `Δ`) together with the handful
//! of lattice callbacks the normal-form machinery needs. Normal forms,
//! products, inverses, gcds, `τ`, complements and rigidity come generically
//! from [`GarsideOps`], which is implemented for every structure.
//!
//! Atoms are indexed from `0` in this module. Atom sets are bitmasks, so a
//! structure may have at most 64 atoms.

use std::fmt;
use std::hash::Hash;

use thiserror::Error;

/// Bitmask over atom indices.
pub type AtomSet = u64;

/// Default bound on `|Δ-power|` and canonical length.
pub const DEFAULT_MAGNITUDE_LIMIT: i64 = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("atom index {index} out of range (rank {rank})")]
    AtomOutOfRange { index: usize, rank: usize },
    #[error("`{0}` is not a simple element of this structure")]
    NotSimple(String),
    #[error("element does not belong to structure {0}")]
    StructureMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("Δ-power or canonical length exceeds the configured bound {0}")]
    Bound(i64),
}

pub type Result<T> = std::result::Result<T, KernelError>;

/// A finite-type Garside structure, described through its simple elements.
///
/// Composition is left to right: `compose(a, b)` is the product `a·b`.
pub trait Garside: Send + Sync {
    type Simple: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    /// Short identifier used in cache headers, e.g. `B4` or `Z3`.
    fn id(&self) -> String;
    /// The size parameter `n` of the family (strands, or free abelian rank).
    fn size(&self) -> usize;
    /// Number of atoms.
    fn rank(&self) -> usize;
    fn atom(&self, index: usize) -> Self::Simple;
    fn identity(&self) -> Self::Simple;
    fn delta(&self) -> Self::Simple;
    /// Whether `s` is a simple element of this particular structure.
    fn contains(&self, s: &Self::Simple) -> bool;

    /// `a·b` when the product is again simple.
    fn compose(&self, a: Self::Simple, b: Self::Simple) -> Option<Self::Simple>;
    fn left_meet(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple;
    fn right_meet(&self, a: Self::Simple, b: Self::Simple) -> Self::Simple;
    /// `a⁻¹·b` when `a ≼ b`.
    fn left_quotient(&self, a: Self::Simple, b: Self::Simple) -> Option<Self::Simple>;
    /// `b·a⁻¹` when `a` is a suffix of `b`.
    fn right_quotient(&self, b: Self::Simple, a: Self::Simple) -> Option<Self::Simple>;

    /// `τ(s) = Δ⁻¹ s Δ`.
    fn tau(&self, s: Self::Simple) -> Self::Simple;
    fn tau_inv(&self, s: Self::Simple) -> Self::Simple;
    /// Order of `τ` as a permutation of the simple elements.
    fn tau_order(&self) -> u32;

    /// `∂s = s⁻¹Δ`.
    fn right_complement(&self, s: Self::Simple) -> Self::Simple;
    /// `Δs⁻¹`.
    fn left_complement(&self, s: Self::Simple) -> Self::Simple;

    /// Atoms that left-divide `s`.
    fn starting_set(&self, s: Self::Simple) -> AtomSet;
    /// Atoms that right-divide `s`.
    fn finishing_set(&self, s: Self::Simple) -> AtomSet;

    /// All simple elements, sorted.
    fn simples(&self) -> Vec<Self::Simple>;

    fn format_simple(&self, s: Self::Simple) -> String;
    fn parse_simple(&self, text: &str) -> Option<Self::Simple>;

    fn magnitude_limit(&self) -> i64 {
        DEFAULT_MAGNITUDE_LIMIT
    }

    fn left_divides_simple(&self, a: Self::Simple, b: Self::Simple) -> bool {
        self.left_meet(a, b) == a
    }

    fn right_divides_simple(&self, a: Self::Simple, b: Self::Simple) -> bool {
        self.right_meet(a, b) == a
    }

    /// `(a, b)` is left-weighted iff `S(b) ⊆ F(a)`.
    fn is_left_weighted(&self, a: Self::Simple, b: Self::Simple) -> bool {
        self.starting_set(b) & !self.finishing_set(a) == 0
    }

    /// `(a, b)` is right-weighted iff `F(a) ⊆ S(b)`.
    fn is_right_weighted(&self, a: Self::Simple, b: Self::Simple) -> bool {
        self.finishing_set(a) & !self.starting_set(b) == 0
    }

    fn tau_pow(&self, s: Self::Simple, k: i64) -> Self::Simple {
        let order = i64::from(self.tau_order().max(1));
        let k = k.rem_euclid(order);
        (0..k).fold(s, |acc, _| self.tau(acc))
    }

    /// A reduced atom word for `s` (greedy on the smallest starting atom).
    fn simple_word(&self, s: Self::Simple) -> Vec<usize> {
        let mut rest = s;
        let mut word = Vec::new();
        while rest != self.identity() {
            let set = self.starting_set(rest);
            let i = set.trailing_zeros() as usize;
            word.push(i);
            rest = self
                .left_quotient(self.atom(i), rest)
                .expect("starting atom divides");
        }
        word
    }
}

/// Left normal form `Δ^p · x_1 ⋯ x_r`: every `x_i` is a proper simple
/// (neither `1` nor `Δ`) and every adjacent pair is left-weighted.
///
/// The representation is unique, so derived equality is group equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element<S> {
    delta_power: i64,
    factors: Vec<S>,
}

impl<S: Copy> Element<S> {
    pub fn identity() -> Self {
        Element { delta_power: 0, factors: Vec::new() }
    }

    pub fn delta_pow(p: i64) -> Self {
        Element { delta_power: p, factors: Vec::new() }
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[S] {
        &self.factors
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    /// Canonical length `ℓ = sup − inf`.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.delta_power >= 0
    }

    pub fn stats(&self) -> Stats {
        Stats { inf: self.inf(), sup: self.sup(), len: self.canonical_length() }
    }

}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stats {
    pub inf: i64,
    pub sup: i64,
    pub len: usize,
}

/// Coprime left fraction `u⁻¹·v` with `u ∧ v = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionForm<S> {
    pub negative: Element<S>,
    pub positive: Element<S>,
}

/// Right normal form `y_1 ⋯ y_r · Δ^p`, consecutive pairs right-weighted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightNormalForm<S> {
    pub factors: Vec<S>,
    pub delta_power: i64,
}

/// One letter of an input word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter<S> {
    /// Atom by 0-based index.
    Atom(usize),
    Delta,
    Simple(S),
}

/// Normal-form arithmetic, available on every [`Garside`] structure.
pub trait GarsideOps: Garside {
    fn check(&self, e: &Element<Self::Simple>) -> Result<()> {
        if e.factors.iter().all(|s| self.contains(s)) {
            Ok(())
        } else {
            Err(KernelError::StructureMismatch(self.id()))
        }
    }

    fn check_bound(&self, e: &Element<Self::Simple>) -> Result<()> {
        let lim = self.magnitude_limit();
        if e.delta_power.abs() > lim || e.factors.len() as i64 > lim {
            Err(KernelError::Bound(lim))
        } else {
            Ok(())
        }
    }

    /// Left-weights `(a, b)` in place: `(a·m, m⁻¹·b)` with `m = ∂a ∧ b`.
    /// Returns `false` when the pair was already left-weighted.
    fn slide_pair(&self, a: &mut Self::Simple, b: &mut Self::Simple) -> bool {
        if self.is_left_weighted(*a, *b) {
            return false;
        }
        let m = self.left_meet(self.right_complement(*a), *b);
        if m == self.identity() {
            return false;
        }
        *a = self.compose(*a, m).expect("m ≼ ∂a");
        *b = self.left_quotient(m, *b).expect("m ≼ b");
        true
    }

    /// Restores the normal-form invariants of `Δ^p · f` after local edits.
    fn settle(&self, p: &mut i64, f: &mut Vec<Self::Simple>) {
        loop {
            let mut changed = false;
            for i in (1..f.len()).rev() {
                let (left, right) = f.split_at_mut(i);
                changed |= self.slide_pair(&mut left[i - 1], &mut right[0]);
            }
            if !changed {
                break;
            }
        }
        let delta = self.delta();
        let lead = f.iter().take_while(|&&s| s == delta).count();
        if lead > 0 {
            f.drain(..lead);
            *p += lead as i64;
        }
        let id = self.identity();
        while f.last() == Some(&id) {
            f.pop();
        }
        debug_assert!(f.iter().all(|&s| s != id && s != delta));
    }

    /// Right-multiplies `Δ^p · f` (in normal form) by the simple `s`.
    fn push_simple(&self, p: &mut i64, f: &mut Vec<Self::Simple>, s: Self::Simple) {
        if s == self.identity() {
            return;
        }
        if s == self.delta() {
            *p += 1;
            for x in f.iter_mut() {
                *x = self.tau(*x);
            }
            return;
        }
        f.push(s);
        let mut i = f.len() - 1;
        while i > 0 {
            let (left, right) = f.split_at_mut(i);
            if !self.slide_pair(&mut left[i - 1], &mut right[0]) {
                break;
            }
            i -= 1;
        }
        self.settle(p, f);
    }

    /// `e·s` for a simple `s`.
    fn push_right(&self, e: &Element<Self::Simple>, s: Self::Simple) -> Element<Self::Simple> {
        let mut p = e.delta_power;
        let mut f = e.factors.clone();
        self.push_simple(&mut p, &mut f, s);
        Element { delta_power: p, factors: f }
    }

    fn simple_element(&self, s: Self::Simple) -> Element<Self::Simple> {
        let mut p = 0;
        let mut f = Vec::new();
        self.push_simple(&mut p, &mut f, s);
        Element { delta_power: p, factors: f }
    }

    fn atom_element(&self, index: usize) -> Result<Element<Self::Simple>> {
        if index >= self.rank() {
            return Err(KernelError::AtomOutOfRange { index, rank: self.rank() });
        }
        Ok(self.simple_element(self.atom(index)))
    }

    fn delta_element(&self, p: i64) -> Element<Self::Simple> {
        Element::delta_pow(p)
    }

    /// Normal form of `Δ^p · s_1 ⋯ s_k` for arbitrary simples.
    fn from_simples(&self, p: i64, simples: &[Self::Simple]) -> Result<Element<Self::Simple>> {
        if let Some(bad) = simples.iter().find(|s| !self.contains(s)) {
            return Err(KernelError::NotSimple(format!("{bad:?}")));
        }
        let mut dp = p;
        let mut f = Vec::with_capacity(simples.len());
        for &s in simples {
            self.push_simple(&mut dp, &mut f, s);
        }
        let e = Element { delta_power: dp, factors: f };
        self.check_bound(&e)?;
        Ok(e)
    }

    /// Normal form of a word of letters with integer exponents.
    fn normalize(&self, word: &[(Letter<Self::Simple>, i64)]) -> Result<Element<Self::Simple>> {
        let mut acc = Element::identity();
        for &(letter, exp) in word {
            let base = match letter {
                Letter::Atom(i) => self.atom_element(i)?,
                Letter::Delta => Element::delta_pow(1),
                Letter::Simple(s) => {
                    if !self.contains(&s) {
                        return Err(KernelError::NotSimple(format!("{s:?}")));
                    }
                    self.simple_element(s)
                }
            };
            let term = self.power(&base, exp)?;
            acc = self.multiply(&acc, &term)?;
        }
        Ok(acc)
    }

    fn multiply(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
    ) -> Result<Element<Self::Simple>> {
        self.check(a)?;
        self.check(b)?;
        let mut p = a
            .delta_power
            .checked_add(b.delta_power)
            .ok_or(KernelError::Bound(self.magnitude_limit()))?;
        let mut f: Vec<Self::Simple> =
            a.factors.iter().map(|&x| self.tau_pow(x, b.delta_power)).collect();
        for &s in &b.factors {
            self.push_simple(&mut p, &mut f, s);
        }
        let e = Element { delta_power: p, factors: f };
        self.check_bound(&e)?;
        Ok(e)
    }

    fn invert(&self, a: &Element<Self::Simple>) -> Element<Self::Simple> {
        let r = a.factors.len() as i64;
        let p = a.delta_power;
        let mut f: Vec<Self::Simple> = a
            .factors
            .iter()
            .enumerate()
            .rev()
            .map(|(i, &x)| self.tau_pow(self.right_complement(x), -p - (i as i64 + 1)))
            .collect();
        let mut dp = -p - r;
        self.settle(&mut dp, &mut f);
        Element { delta_power: dp, factors: f }
    }

    fn power(&self, a: &Element<Self::Simple>, k: i64) -> Result<Element<Self::Simple>> {
        if k.unsigned_abs() as i64 > self.magnitude_limit() {
            return Err(KernelError::Bound(self.magnitude_limit()));
        }
        let base = if k < 0 { self.invert(a) } else { a.clone() };
        if base.factors.is_empty() {
            let p = base.delta_power.checked_mul(k.abs()).ok_or(KernelError::Bound(self.magnitude_limit()))?;
            let e = Element::delta_pow(p);
            self.check_bound(&e)?;
            return Ok(e);
        }
        let mut acc = Element::identity();
        for _ in 0..k.abs() {
            acc = self.multiply(&acc, &base)?;
        }
        Ok(acc)
    }

    /// `Δ^{-k} a Δ^k`.
    fn tau_element(&self, a: &Element<Self::Simple>, k: i64) -> Element<Self::Simple> {
        Element {
            delta_power: a.delta_power,
            factors: a.factors.iter().map(|&x| self.tau_pow(x, k)).collect(),
        }
    }

    /// `e·Δ^{-inf e}`, the representative of `eΔ^Z` with infimum 0.
    fn coset_rep(&self, e: &Element<Self::Simple>) -> Element<Self::Simple> {
        let p = e.delta_power;
        Element { delta_power: 0, factors: e.factors.iter().map(|&x| self.tau_pow(x, -p)).collect() }
    }

    /// `∂y = y⁻¹Δ^{sup y}` for `inf y = 0`, read off the normal form as the
    /// reversed sequence of `τ^{r-i}(∂y_i)`.
    fn complement(&self, y: &Element<Self::Simple>) -> Result<Element<Self::Simple>> {
        if y.delta_power != 0 {
            return Err(KernelError::Precondition(format!(
                "complement needs inf = 0, got {}",
                y.delta_power
            )));
        }
        let r = y.factors.len() as i64;
        let f: Vec<_> = y
            .factors
            .iter()
            .enumerate()
            .rev()
            .map(|(i, &x)| self.tau_pow(self.right_complement(x), r - (i as i64 + 1)))
            .collect();
        debug_assert!(f.windows(2).all(|w| self.is_left_weighted(w[0], w[1])));
        Ok(Element { delta_power: 0, factors: f })
    }

    /// `a ≼ b`: `a⁻¹b` is positive.
    fn left_divides(&self, a: &Element<Self::Simple>, b: &Element<Self::Simple>) -> bool {
        match self.multiply(&self.invert(a), b) {
            Ok(q) => q.delta_power >= 0,
            Err(_) => false,
        }
    }

    /// `a` is a suffix of `b` (`b ≽ a`): `b·a⁻¹` is positive.
    fn right_divides(&self, a: &Element<Self::Simple>, b: &Element<Self::Simple>) -> bool {
        match self.multiply(b, &self.invert(a)) {
            Ok(q) => q.delta_power >= 0,
            Err(_) => false,
        }
    }

    /// `Δ^i ∧ a`, the product of the first `i` letters of the normal form.
    fn head(&self, a: &Element<Self::Simple>, i: usize) -> Element<Self::Simple> {
        let i = i as i64;
        if i <= a.delta_power {
            return Element::delta_pow(i);
        }
        let take = ((i - a.delta_power) as usize).min(a.factors.len());
        Element { delta_power: a.delta_power, factors: a.factors[..take].to_vec() }
    }

    /// Largest simple prefix of a positive element.
    fn head_simple(&self, a: &Element<Self::Simple>) -> Self::Simple {
        if a.delta_power > 0 {
            self.delta()
        } else {
            a.factors.first().copied().unwrap_or_else(|| self.identity())
        }
    }

    /// Largest simple suffix of a positive element.
    fn tail_simple(&self, a: &Element<Self::Simple>) -> Self::Simple {
        if a.delta_power > 0 {
            self.delta()
        } else {
            self.right_normal_form(a).factors.last().copied().unwrap_or_else(|| self.identity())
        }
    }

    /// Left gcd, extending a common prefix by maximal common simple prefixes.
    fn left_gcd(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
    ) -> Result<Element<Self::Simple>> {
        self.check(a)?;
        self.check(b)?;
        let shift = a.delta_power.min(b.delta_power);
        let mut ra = Element { delta_power: a.delta_power - shift, factors: a.factors.clone() };
        let mut rb = Element { delta_power: b.delta_power - shift, factors: b.factors.clone() };
        let mut g = Element::delta_pow(shift);
        loop {
            let m = self.left_meet(self.head_simple(&ra), self.head_simple(&rb));
            if m == self.identity() {
                break;
            }
            let me = self.simple_element(m);
            let mi = self.invert(&me);
            ra = self.multiply(&mi, &ra)?;
            rb = self.multiply(&mi, &rb)?;
            g = self.multiply(&g, &me)?;
        }
        Ok(g)
    }

    /// Left gcd by single-atom greedy extension, trying atoms in `order`.
    fn left_gcd_by_atoms(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
        order: &[usize],
    ) -> Result<Element<Self::Simple>> {
        self.check(a)?;
        self.check(b)?;
        let shift = a.delta_power.min(b.delta_power);
        let mut ra = Element { delta_power: a.delta_power - shift, factors: a.factors.clone() };
        let mut rb = Element { delta_power: b.delta_power - shift, factors: b.factors.clone() };
        let mut g = Element::delta_pow(shift);
        'grow: loop {
            let (ha, hb) = (self.head_simple(&ra), self.head_simple(&rb));
            for &i in order {
                let at = self.atom(i);
                if self.left_divides_simple(at, ha) && self.left_divides_simple(at, hb) {
                    let ae = self.simple_element(at);
                    let ai = self.invert(&ae);
                    ra = self.multiply(&ai, &ra)?;
                    rb = self.multiply(&ai, &rb)?;
                    g = self.multiply(&g, &ae)?;
                    continue 'grow;
                }
            }
            break;
        }
        Ok(g)
    }

    fn right_gcd(
        &self,
        a: &Element<Self::Simple>,
        b: &Element<Self::Simple>,
    ) -> Result<Element<Self::Simple>> {
        self.check(a)?;
        self.check(b)?;
        let shift = a.delta_power.min(b.delta_power);
        // Δ^s·x = τ^{-s}(x)·Δ^s, so factor Δ^shift out on the right.
        let strip = |e: &Element<Self::Simple>| Element {
            delta_power: e.delta_power - shift,
            factors: e.factors.iter().map(|&x| self.tau_pow(x, -shift)).collect(),
        };
        let mut ra = strip(a);
        let mut rb = strip(b);
        let mut g = Element::identity();
        loop {
            let m = self.right_meet(self.tail_simple(&ra), self.tail_simple(&rb));
            if m == self.identity() {
                break;
            }
            let me = self.simple_element(m);
            let mi = self.invert(&me);
            ra = self.multiply(&ra, &mi)?;
            rb = self.multiply(&rb, &mi)?;
            g = self.multiply(&me, &g)?;
        }
        self.multiply(&g, &Element::delta_pow(shift))
    }

    fn right_normal_form(&self, a: &Element<Self::Simple>) -> RightNormalForm<Self::Simple> {
        let p = a.delta_power;
        let mut f: Vec<_> = a.factors.iter().map(|&x| self.tau_pow(x, -p)).collect();
        loop {
            let mut changed = false;
            for i in 0..f.len().saturating_sub(1) {
                let (s, t) = (f[i], f[i + 1]);
                if self.is_right_weighted(s, t) {
                    continue;
                }
                let m = self.right_meet(s, self.left_complement(t));
                if m == self.identity() {
                    continue;
                }
                f[i] = self.right_quotient(s, m).expect("m is a suffix of s");
                f[i + 1] = self.compose(m, t).expect("m·t is simple");
                changed = true;
            }
            if !changed {
                break;
            }
        }
        let id = self.identity();
        f.retain(|&s| s != id);
        RightNormalForm { factors: f, delta_power: p }
    }

    /// Rigid: `(x_r, τ^{-p}(x_1))` is left-weighted.
    fn is_rigid(&self, a: &Element<Self::Simple>) -> Result<bool> {
        let (first, last) = match (a.factors.first(), a.factors.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(KernelError::Precondition("rigidity needs ℓ ≥ 1".into())),
        };
        Ok(self.is_left_weighted(last, self.tau_pow(first, -a.delta_power)))
    }

    fn fraction_form(&self, a: &Element<Self::Simple>) -> Result<FractionForm<Self::Simple>> {
        if a.delta_power >= 0 {
            return Ok(FractionForm { negative: Element::identity(), positive: a.clone() });
        }
        let k = -a.delta_power;
        let x = Element { delta_power: 0, factors: a.factors.clone() };
        let dk = Element::delta_pow(k);
        let g = self.left_gcd(&dk, &x)?;
        let gi = self.invert(&g);
        Ok(FractionForm { negative: self.multiply(&gi, &dk)?, positive: self.multiply(&gi, &x)? })
    }

    /// Atom word of the positive part together with the Δ-power.
    fn positive_word(&self, a: &Element<Self::Simple>) -> (i64, Vec<usize>) {
        (a.delta_power, a.factors.iter().flat_map(|&s| self.simple_word(s)).collect())
    }

    fn format_element(&self, a: &Element<Self::Simple>) -> String {
        let body: Vec<String> = a.factors.iter().map(|&s| self.format_simple(s)).collect();
        format!("D^{} [{}]", a.delta_power, body.join("|"))
    }
}

impl<G: Garside + ?Sized> GarsideOps for G {}
