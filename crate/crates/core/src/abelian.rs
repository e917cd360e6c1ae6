//! Free abelian groups `Z^n` with simples the `{0,1}`-vectors and
//! `Δ = (1,…,1)`. Used as a cross-check for the generic kernel.

use crate::kernel::{AtomSet, Garside, KernelError, Result};

/// Bit `i` set means coordinate `i` (0-based) equals 1.
pub type AbelianSimple = u64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAbelian {
    n: usize,
}

/// The structure on `Z^n`, `1 ≤ n ≤ 64`.
pub fn zn_structure(n: usize) -> Result<FreeAbelian> {
    if !(1..=64).contains(&n) {
        return Err(KernelError::Precondition(format!("Z^n needs 1 ≤ n ≤ 64, got {n}")));
    }
    Ok(FreeAbelian { n })
}

impl FreeAbelian {
    fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// The simple `e_i`, 1-based.
    pub fn unit(&self, i: usize) -> Result<AbelianSimple> {
        if i == 0 || i > self.n {
            return Err(KernelError::AtomOutOfRange { index: i, rank: self.n });
        }
        Ok(1 << (i - 1))
    }
}

impl Garside for FreeAbelian {
    type Simple = AbelianSimple;

    fn id(&self) -> String {
        format!("Z{}", self.n)
    }

    fn size(&self) -> usize {
        self.n
    }

    fn rank(&self) -> usize {
        self.n
    }

    fn atom(&self, index: usize) -> u64 {
        1 << index
    }

    fn identity(&self) -> u64 {
        0
    }

    fn delta(&self) -> u64 {
        self.full()
    }

    fn contains(&self, s: &u64) -> bool {
        s & !self.full() == 0
    }

    fn compose(&self, a: u64, b: u64) -> Option<u64> {
        (a & b == 0).then_some(a | b)
    }

    fn left_meet(&self, a: u64, b: u64) -> u64 {
        a & b
    }

    fn right_meet(&self, a: u64, b: u64) -> u64 {
        a & b
    }

    fn left_quotient(&self, a: u64, b: u64) -> Option<u64> {
        (a & !b == 0).then_some(b & !a)
    }

    fn right_quotient(&self, b: u64, a: u64) -> Option<u64> {
        (a & !b == 0).then_some(b & !a)
    }

    fn tau(&self, s: u64) -> u64 {
        s
    }

    fn tau_inv(&self, s: u64) -> u64 {
        s
    }

    fn tau_order(&self) -> u32 {
        1
    }

    fn right_complement(&self, s: u64) -> u64 {
        self.full() & !s
    }

    fn left_complement(&self, s: u64) -> u64 {
        self.full() & !s
    }

    fn starting_set(&self, s: u64) -> AtomSet {
        s
    }

    fn finishing_set(&self, s: u64) -> AtomSet {
        s
    }

    fn simples(&self) -> Vec<u64> {
        assert!(self.n <= 20, "simple set of Z^{} is too large to list", self.n);
        (0..=self.full()).collect()
    }

    /// Coordinates left to right: `e_1` in `Z^3` is `100`.
    fn format_simple(&self, s: u64) -> String {
        (0..self.n).map(|i| if s >> i & 1 == 1 { '1' } else { '0' }).collect()
    }

    fn parse_simple(&self, text: &str) -> Option<u64> {
        let text = text.trim();
        if text.len() != self.n {
            return None;
        }
        let mut s = 0;
        for (i, c) in text.chars().enumerate() {
            match c {
                '1' => s |= 1 << i,
                '0' => {}
                _ => return None,
            }
        }
        Some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{GarsideOps, Letter};

    #[test]
    fn normal_form_of_repeated_unit() {
        let z = zn_structure(3).unwrap();
        let e = z.normalize(&[(Letter::Atom(0), 2)]).unwrap();
        let text: Vec<String> = e.factors().iter().map(|&s| z.format_simple(s)).collect();
        assert_eq!(text, vec!["100", "100"]);
        assert_eq!(z.format_simple(z.delta()), "111");
    }

    #[test]
    fn gcd_is_coordinatewise_min() {
        let z = zn_structure(3).unwrap();
        let a = z.normalize(&[(Letter::Atom(0), 1), (Letter::Atom(1), 1)]).unwrap();
        let b = z.normalize(&[(Letter::Atom(0), 1)]).unwrap();
        assert_eq!(z.left_gcd(&a, &b).unwrap(), b);
        assert_eq!(z.right_gcd(&a, &b).unwrap(), b);
    }

    #[test]
    fn normal_form_matches_greedy_vectors() {
        // For Z^n the left normal form of a vector v ≥ 0 has factors
        // [v_i ≥ k] for k = 1, 2, … after removing full Δ rows.
        let z = zn_structure(3).unwrap();
        let v = [3i64, 1, 2];
        let word: Vec<_> = v.iter().enumerate().map(|(i, &k)| (Letter::Atom(i), k)).collect();
        let e = z.normalize(&word).unwrap();
        assert_eq!(e.delta_power(), 1);
        let text: Vec<String> = e.factors().iter().map(|&s| z.format_simple(s)).collect();
        assert_eq!(text, vec!["101", "100"]);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(zn_structure(0).is_err());
        let z = zn_structure(2).unwrap();
        assert_eq!(z.parse_simple("10"), Some(1));
        assert_eq!(z.parse_simple("102"), None);
        assert!(z.unit(3).is_err());
    }
}
