//! Braid groups `B_n` with the classical Garside structure.
//!
//! Simple elements are positive permutation braids, stored in one-line
//! notation: strand starting at position `i` ends at position `perm(i)`.
//! Products are read left to right (stack the first diagram on top), and a
//! simple `a` left-divides a simple `b` exactly when the crossings of `a`,
//! indexed by starting positions, are a subset of those of `b`.

use std::fmt;
use std::sync::OnceLock;

use crate::kernel::{AtomSet, Element, Garside, GarsideOps, KernelError, Letter, Result};

/// Largest supported strand count.
pub const MAX_STRANDS: usize = 32;

/// A positive permutation braid on at most [`MAX_STRANDS`] strands.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_STRANDS],
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        let mut img = [0u8; MAX_STRANDS];
        for (i, v) in img.iter_mut().enumerate().take(n) {
            *v = i as u8;
        }
        Perm { n: n as u8, img }
    }

    /// From 1-based one-line notation; `None` unless a bijection of `1..=n`.
    pub fn from_one_line(images: &[usize]) -> Option<Perm> {
        let n = images.len();
        if n == 0 || n > MAX_STRANDS {
            return None;
        }
        let mut seen = [false; MAX_STRANDS];
        let mut img = [0u8; MAX_STRANDS];
        for (i, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v - 1] {
                return None;
            }
            seen[v - 1] = true;
            img[i] = (v - 1) as u8;
        }
        Some(Perm { n: n as u8, img })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// 0-based image of 0-based position `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        (0..self.n()).map(|i| self.image(i) + 1).collect()
    }

    pub fn inverse(&self) -> Perm {
        let mut img = [0u8; MAX_STRANDS];
        for i in 0..self.n() {
            img[self.image(i)] = i as u8;
        }
        Perm { n: self.n, img }
    }

    /// Diagram stacking: `self` on top, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        let mut img = [0u8; MAX_STRANDS];
        for i in 0..self.n() {
            img[i] = other.img[self.image(i)];
        }
        Perm { n: self.n, img }
    }

    /// Number of crossings.
    pub fn inversions(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Crossing pairs `(i, j)`, `i < j`, by starting position.
    pub fn inversion_set(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    #[inline]
    fn swap_positions(&mut self, i: usize) {
        self.img.swap(i, i + 1);
    }

    #[inline]
    fn swap_values(&mut self, i: usize) {
        for k in 0..self.n() {
            if self.img[k] as usize == i {
                self.img[k] = (i + 1) as u8;
            } else if self.img[k] as usize == i + 1 {
                self.img[k] = i as u8;
            }
        }
    }

    fn starting_set(&self) -> AtomSet {
        let mut set = 0;
        for i in 0..self.n().saturating_sub(1) {
            if self.img[i] > self.img[i + 1] {
                set |= 1 << i;
            }
        }
        set
    }

    fn finishing_set(&self) -> AtomSet {
        self.inverse().starting_set()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    /// Digits when `n ≤ 9` (`2134`), otherwise comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = self.one_line();
        if self.n() <= 9 {
            for v in line {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = line.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// `B_n` with simples = permutation braids and `Δ` = the half twist.
#[derive(Debug)]
pub struct BraidGroup {
    n: usize,
    simples: OnceLock<Vec<Perm>>,
}

impl Clone for BraidGroup {
    fn clone(&self) -> Self {
        BraidGroup { n: self.n, simples: OnceLock::new() }
    }
}

impl PartialEq for BraidGroup {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl BraidGroup {
    pub fn new(n: usize) -> Result<BraidGroup> {
        if !(2..=MAX_STRANDS).contains(&n) {
            return Err(KernelError::Precondition(format!(
                "braid groups need 2 ≤ n ≤ {MAX_STRANDS}, got {n}"
            )));
        }
        Ok(BraidGroup { n, simples: OnceLock::new() })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    /// The atom `σ_i`, `1 ≤ i ≤ n−1`.
    pub fn sigma(&self, i: usize) -> Result<Perm> {
        atom(self.n, i)
    }

    /// `σ_i` as a group element.
    pub fn sigma_element(&self, i: usize) -> Result<Element<Perm>> {
        Ok(self.simple_element(self.sigma(i)?))
    }

    /// Normal form of a positive word given by 1-based atom indices.
    pub fn word(&self, letters: &[usize]) -> Result<Element<Perm>> {
        self.signed_word(&letters.iter().map(|&i| (i, 1)).collect::<Vec<_>>())
    }

    /// Normal form of a word of `(atom index, exponent)` pairs, 1-based.
    pub fn signed_word(&self, letters: &[(usize, i64)]) -> Result<Element<Perm>> {
        let mut word = Vec::with_capacity(letters.len());
        for &(i, e) in letters {
            if i == 0 || i >= self.n {
                return Err(KernelError::AtomOutOfRange { index: i, rank: self.n - 1 });
            }
            word.push((Letter::Atom(i - 1), e));
        }
        self.normalize(&word)
    }

    /// Simple element from a positive word, if that word is a permutation braid.
    pub fn simple_from_word(&self, letters: &[usize]) -> Result<Perm> {
        let mut acc = Perm::identity(self.n);
        for &i in letters {
            let s = self.sigma(i)?;
            acc = self
                .compose(acc, s)
                .ok_or_else(|| KernelError::NotSimple(format!("{letters:?}")))?;
        }
        Ok(acc)
    }

    /// Signed atom word (1-based) representing `e`; `Δ^{-1}` is written as the
    /// inverse letters of a reduced word for `Δ`.
    pub fn signed_letters(&self, e: &Element<Perm>) -> Vec<(usize, i64)> {
        let dword: Vec<usize> = self.simple_word(self.delta());
        let mut out = Vec::new();
        let p = e.delta_power();
        for _ in 0..p.max(0) {
            out.extend(dword.iter().map(|&i| (i + 1, 1)));
        }
        for _ in 0..(-p).max(0) {
            out.extend(dword.iter().rev().map(|&i| (i + 1, -1)));
        }
        for &s in e.factors() {
            out.extend(self.simple_word(s).into_iter().map(|i| (i + 1, 1)));
        }
        out
    }

    /// The shift morphism `σ_i ↦ σ_{i+k}`, landing in `target` (`B_m`).
    pub fn shift(&self, e: &Element<Perm>, k: usize, target: &BraidGroup) -> Result<Element<Perm>> {
        let letters: Vec<(usize, i64)> =
            self.signed_letters(e).into_iter().map(|(i, s)| (i + k, s)).collect();
        target.signed_word(&letters)
    }

    /// The reverse anti-automorphism `σ_{i_1}⋯σ_{i_l} ↦ σ_{i_l}⋯σ_{i_1}`.
    pub fn rev(&self, e: &Element<Perm>) -> Result<Element<Perm>> {
        let mut letters = self.signed_letters(e);
        letters.reverse();
        self.signed_word(&letters)
    }

    pub fn parse_perm(&self, text: &str) -> Option<Perm> {
        let text = text.trim();
        let images: Option<Vec<usize>> = if text.contains(',') {
            text.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            text.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let p = Perm::from_one_line(&images?)?;
        (p.n() == self.n).then_some(p)
    }
}

/// The atom `σ_i` of `B_n` as a permutation.
pub fn atom(n: usize, i: usize) -> Result<Perm> {
    if i == 0 || i >= n {
        return Err(KernelError::AtomOutOfRange { index: i, rank: n.saturating_sub(1) });
    }
    let mut p = Perm::identity(n);
    p.swap_positions(i - 1);
    Ok(p)
}

/// The half twist `Δ_n`.
pub fn delta(n: usize) -> Result<Perm> {
    if !(2..=MAX_STRANDS).contains(&n) {
        return Err(KernelError::Precondition(format!("Δ_n needs 2 ≤ n ≤ {MAX_STRANDS}")));
    }
    let images: Vec<usize> = (1..=n).rev().collect();
    Ok(Perm::from_one_line(&images).expect("reversal is a permutation"))
}

impl Garside for BraidGroup {
    type Simple = Perm;

    fn id(&self) -> String {
        format!("B{}", self.n)
    }

    fn size(&self) -> usize {
        self.n
    }

    fn rank(&self) -> usize {
        self.n - 1
    }

    fn atom(&self, index: usize) -> Perm {
        atom(self.n, index + 1).expect("atom index within rank")
    }

    fn identity(&self) -> Perm {
        Perm::identity(self.n)
    }

    fn delta(&self) -> Perm {
        delta(self.n).expect("n validated at construction")
    }

    fn contains(&self, s: &Perm) -> bool {
        s.n() == self.n
    }

    fn compose(&self, a: Perm, b: Perm) -> Option<Perm> {
        let c = a.then(&b);
        (c.inversions() == a.inversions() + b.inversions()).then_some(c)
    }

    fn left_meet(&self, a: Perm, b: Perm) -> Perm {
        let mut g = Perm::identity(self.n);
        let (mut ra, mut rb) = (a, b);
        loop {
            let common = ra.starting_set() & rb.starting_set();
            if common == 0 {
                return g;
            }
            let i = common.trailing_zeros() as usize;
            g.swap_values(i);
            ra.swap_positions(i);
            rb.swap_positions(i);
        }
    }

    fn right_meet(&self, a: Perm, b: Perm) -> Perm {
        let mut g = Perm::identity(self.n);
        let (mut ra, mut rb) = (a, b);
        loop {
            let common = ra.finishing_set() & rb.finishing_set();
            if common == 0 {
                return g;
            }
            let i = common.trailing_zeros() as usize;
            g.swap_positions(i);
            ra.swap_values(i);
            rb.swap_values(i);
        }
    }

    fn left_divides_simple(&self, a: Perm, b: Perm) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in i + 1..n {
                if a.img[i] > a.img[j] && b.img[i] < b.img[j] {
                    return false;
                }
            }
        }
        true
    }

    fn left_quotient(&self, a: Perm, b: Perm) -> Option<Perm> {
        if !self.left_divides_simple(a, b) {
            return None;
        }
        Some(a.inverse().then(&b))
    }

    fn right_quotient(&self, b: Perm, a: Perm) -> Option<Perm> {
        let q = b.then(&a.inverse());
        (q.inversions() + a.inversions() == b.inversions()).then_some(q)
    }

    fn tau(&self, s: Perm) -> Perm {
        let n = self.n;
        let mut img = [0u8; MAX_STRANDS];
        for (k, v) in img.iter_mut().enumerate().take(n) {
            *v = (n - 1 - s.image(n - 1 - k)) as u8;
        }
        Perm { n: s.n, img }
    }

    fn tau_inv(&self, s: Perm) -> Perm {
        self.tau(s)
    }

    fn tau_order(&self) -> u32 {
        2
    }

    fn right_complement(&self, s: Perm) -> Perm {
        s.inverse().then(&self.delta())
    }

    fn left_complement(&self, s: Perm) -> Perm {
        self.delta().then(&s.inverse())
    }

    fn starting_set(&self, s: Perm) -> AtomSet {
        s.starting_set()
    }

    fn finishing_set(&self, s: Perm) -> AtomSet {
        s.finishing_set()
    }

    fn simples(&self) -> Vec<Perm> {
        self.simples
            .get_or_init(|| {
                let mut out = Vec::new();
                let mut current: Vec<usize> = (1..=self.n).collect();
                loop {
                    out.push(Perm::from_one_line(&current).expect("valid permutation"));
                    if !next_permutation(&mut current) {
                        break;
                    }
                }
                out
            })
            .clone()
    }

    fn format_simple(&self, s: Perm) -> String {
        s.to_string()
    }

    fn parse_simple(&self, text: &str) -> Option<Perm> {
        self.parse_perm(text)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: usize) -> BraidGroup {
        BraidGroup::new(n).unwrap()
    }

    fn inv_subset(a: &Perm, b: &Perm) -> bool {
        let bs = b.inversion_set();
        a.inversion_set().iter().all(|p| bs.contains(p))
    }

    #[test]
    fn atoms_and_delta() {
        assert_eq!(atom(3, 1).unwrap().one_line(), vec![2, 1, 3]);
        assert_eq!(atom(3, 2).unwrap().one_line(), vec![1, 3, 2]);
        assert_eq!(atom(4, 3).unwrap().one_line(), vec![1, 2, 4, 3]);
        assert!(atom(4, 4).is_err());
        assert!(atom(4, 0).is_err());
        assert_eq!(delta(3).unwrap().one_line(), vec![3, 2, 1]);
        assert_eq!(delta(4).unwrap().one_line(), vec![4, 3, 2, 1]);
        assert_eq!(delta(2).unwrap().one_line(), vec![2, 1]);
        assert!(delta(1).is_err());
        let g = b(5);
        for i in 0..g.rank() {
            assert!(g.left_divides_simple(g.atom(i), g.delta()));
            assert!(g.right_divides_simple(g.atom(i), g.delta()));
            assert_eq!(g.atom(i).inversions(), 1);
        }
    }

    #[test]
    fn compose_simple_examples() {
        let g = b(3);
        let (s1, s2) = (g.sigma(1).unwrap(), g.sigma(2).unwrap());
        let p = g.compose(s1, s2).unwrap();
        assert_eq!(p.inversions(), 2);
        assert_eq!(p.one_line(), vec![3, 1, 2]);
        assert_eq!(g.compose(s1, s1), None);
        assert_eq!(g.compose(p, g.identity()), Some(p));
    }

    #[test]
    fn meets() {
        let g3 = b(3);
        let s12 = g3.simple_from_word(&[1, 2]).unwrap();
        let s21 = g3.simple_from_word(&[2, 1]).unwrap();
        assert_eq!(g3.left_meet(s12, s21), g3.identity());
        assert_eq!(g3.left_meet(g3.delta(), s12), s12);
        let g4 = b(4);
        let a = g4.simple_from_word(&[1, 2]).unwrap();
        let c = g4.simple_from_word(&[1, 3]).unwrap();
        assert_eq!(g4.left_meet(a, c), g4.sigma(1).unwrap());
        assert_eq!(g3.right_meet(s12, s21), g3.identity());
        assert_eq!(g3.right_meet(s12, g3.delta()), s12);
    }

    #[test]
    fn starting_and_finishing_sets() {
        let g4 = b(4);
        assert_eq!(g4.starting_set(g4.delta()), 0b111);
        let g3 = b(3);
        let s12 = g3.simple_from_word(&[1, 2]).unwrap();
        assert_eq!(g3.starting_set(s12), 0b01);
        assert_eq!(g3.finishing_set(s12), 0b10);
    }

    #[test]
    fn tau_flips_indices() {
        let g4 = b(4);
        assert_eq!(g4.tau(g4.sigma(1).unwrap()), g4.sigma(3).unwrap());
        assert_eq!(g4.tau(g4.sigma(2).unwrap()), g4.sigma(2).unwrap());
        assert_eq!(g4.tau(g4.delta()), g4.delta());
    }

    #[test]
    fn divisibility_matches_inversion_sets_exhaustively() {
        for n in [3, 4] {
            let g = b(n);
            let all = g.simples();
            assert_eq!(all.len(), if n == 3 { 6 } else { 24 });
            for &s in &all {
                for &t in &all {
                    let by_words = s.inversions() + s.inverse().then(&t).inversions() == t.inversions();
                    assert_eq!(g.left_divides_simple(s, t), inv_subset(&s, &t));
                    assert_eq!(g.left_divides_simple(s, t), by_words);
                    assert_eq!(g.left_meet(s, t) == s, inv_subset(&s, &t));
                }
            }
        }
    }

    #[test]
    fn complement_identities_exhaustively() {
        for n in [3, 4] {
            let g = b(n);
            for s in g.simples() {
                let ds = g.right_complement(s);
                assert_eq!(g.compose(s, ds), Some(g.delta()));
                assert_eq!(g.compose(g.left_complement(s), s), Some(g.delta()));
                assert_eq!(g.right_complement(ds), g.tau(s));
            }
        }
    }

    #[test]
    fn left_weighted_characterisation_exhaustively() {
        for n in [3, 4] {
            let g = b(n);
            let all = g.simples();
            for &s in &all {
                for &t in &all {
                    let no_movable_atom = (0..g.rank()).all(|i| {
                        let a = g.atom(i);
                        !(g.compose(s, a).is_some() && g.left_divides_simple(a, t))
                    });
                    assert_eq!(g.is_left_weighted(s, t), no_movable_atom, "{s} {t}");
                }
            }
        }
        let g3 = b(3);
        assert!(!g3.is_left_weighted(g3.sigma(1).unwrap(), g3.sigma(2).unwrap()));
        let g4 = b(4);
        let s2 = g4.sigma(2).unwrap();
        assert!(g4.is_left_weighted(s2, s2));
        for t in g4.simples() {
            assert!(g4.is_left_weighted(g4.delta(), t));
        }
    }

    #[test]
    fn shift_and_rev() {
        let g3 = b(3);
        let g6 = b(6);
        let s1 = g3.sigma_element(1).unwrap();
        assert_eq!(g3.shift(&s1, 1, &g3).unwrap(), g3.sigma_element(2).unwrap());
        let s21 = g3.word(&[2, 1]).unwrap();
        assert_eq!(g3.shift(&s21, 2, &g6).unwrap(), g6.word(&[4, 3]).unwrap());
        assert!(g3.shift(&s21, 4, &g6).is_err());
        let s12 = g3.word(&[1, 2]).unwrap();
        assert_eq!(g3.rev(&s12).unwrap(), s21);
        for n in 3..7 {
            let g = b(n);
            let d = g.delta_element(1);
            assert_eq!(g.rev(&d).unwrap(), d);
        }
        let mixed = g3.signed_word(&[(1, 2), (2, -1), (1, 1)]).unwrap();
        let expected = g3.signed_word(&[(1, 1), (2, -1), (1, 2)]).unwrap();
        assert_eq!(g3.rev(&mixed).unwrap(), expected);
    }

    #[test]
    fn text_form() {
        let g4 = b(4);
        let s1 = g4.sigma(1).unwrap();
        assert_eq!(s1.to_string(), "2134");
        assert_eq!(g4.parse_simple("2134"), Some(s1));
        assert_eq!(g4.parse_simple("213"), None);
        assert_eq!(g4.parse_simple("2234"), None);
        let g10 = b(10);
        let d = g10.delta();
        assert_eq!(g10.parse_simple(&d.to_string()), Some(d));
    }
}
