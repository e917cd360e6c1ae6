//! Property tests for kernel, absorbability, complex and braid invariants.

use garside_al::abelian::zn_structure;
use garside_al::absorb::{self, SearchConfig};
use garside_al::braid::BraidGroup;
use garside_al::complex::ALComplex;
use garside_al::special::{self, x_n};
use garside_al::verify::sample;
use garside_al::word::{format_braid_word, parse_braid_word};
use garside_al::{Braid, Element, GarsideOps};
use proptest::prelude::*;

fn signed_word(n: usize, max: usize) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((1..n, prop::bool::ANY), 0..=max)
        .prop_map(|w| w.into_iter().map(|(i, pos)| (i, if pos { 1 } else { -1 })).collect())
}

fn positive_word(n: usize, max: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..n, 0..=max)
}

fn b(n: usize) -> BraidGroup {
    BraidGroup::new(n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn format_then_parse_is_identity(n in 3usize..=6, seed in any::<u64>()) {
        let g = b(n);
        let mut rng = sample::rng(seed);
        let x = sample::signed_word(&g, 10, &mut rng);
        let text = format_braid_word(&x, &g);
        prop_assert_eq!(parse_braid_word(&text, &g).unwrap(), x);
    }

    #[test]
    fn group_laws(w1 in signed_word(4, 10), w2 in signed_word(4, 10), w3 in signed_word(4, 10)) {
        let g = b(4);
        let (x, y, z) = (g.signed_word(&w1).unwrap(), g.signed_word(&w2).unwrap(), g.signed_word(&w3).unwrap());
        prop_assert_eq!(g.multiply(&g.multiply(&x, &y).unwrap(), &z).unwrap(), g.multiply(&x, &g.multiply(&y, &z).unwrap()).unwrap());
        prop_assert!(g.multiply(&g.invert(&x), &x).unwrap().is_identity());
        prop_assert_eq!(g.invert(&g.multiply(&x, &y).unwrap()), g.multiply(&g.invert(&y), &g.invert(&x)).unwrap());
    }

    #[test]
    fn inf_sup_of_inverse(w in signed_word(5, 12)) {
        let g = b(5);
        let x = g.signed_word(&w).unwrap();
        let xi = g.invert(&x);
        prop_assert_eq!(xi.inf(), -x.sup());
        prop_assert_eq!(xi.sup(), -x.inf());
    }

    #[test]
    fn tau_is_an_involution_and_a_homomorphism(w1 in signed_word(5, 10), w2 in signed_word(5, 10)) {
        let g = b(5);
        let (x, y) = (g.signed_word(&w1).unwrap(), g.signed_word(&w2).unwrap());
        prop_assert_eq!(g.tau_element(&g.tau_element(&x, 1), 1), x.clone());
        let xy = g.multiply(&x, &y).unwrap();
        prop_assert_eq!(g.tau_element(&xy, 1), g.multiply(&g.tau_element(&x, 1), &g.tau_element(&y, 1)).unwrap());
    }

    #[test]
    fn fraction_form_is_coprime(w in signed_word(4, 12)) {
        let g = b(4);
        let x = g.signed_word(&w).unwrap();
        let f = g.fraction_form(&x).unwrap();
        prop_assert!(f.negative.inf() >= 0 && f.positive.inf() >= 0);
        prop_assert_eq!(g.multiply(&g.invert(&f.negative), &f.positive).unwrap(), x);
        prop_assert!(g.left_gcd(&f.negative, &f.positive).unwrap().is_identity());
    }

    #[test]
    fn gcds_divide_and_agree_with_atom_version(
        w1 in positive_word(4, 8),
        w2 in positive_word(4, 8),
        order in Just(vec![0usize, 1, 2]).prop_shuffle(),
    ) {
        let g = b(4);
        let (x, y) = (g.word(&w1).unwrap(), g.word(&w2).unwrap());
        let d = g.left_gcd(&x, &y).unwrap();
        prop_assert_eq!(&d, &g.left_gcd_by_atoms(&x, &y, &order).unwrap());
        prop_assert!(g.left_divides(&d, &x) && g.left_divides(&d, &y));
        let e = g.right_gcd(&x, &y).unwrap();
        prop_assert!(g.right_divides(&e, &x) && g.right_divides(&e, &y));
    }

    #[test]
    fn abelian_products_commute(a in prop::collection::vec(1usize..=3, 0..8), c in prop::collection::vec(1usize..=3, 0..8)) {
        let z = zn_structure(3).unwrap();
        let build = |v: &[usize]| v.iter().fold(Element::identity(), |acc, &i| z.push_right(&acc, z.unit(i).unwrap()));
        let (x, y) = (build(&a), build(&c));
        prop_assert_eq!(z.multiply(&x, &y).unwrap(), z.multiply(&y, &x).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn absorbability_is_closed_under_inverse_and_tau(seed in any::<u64>(), len in 1usize..=2) {
        let g = b(4);
        let cfg = SearchConfig::default();
        let mut rng = sample::rng(seed);
        let y = sample::positive_factors(&g, len, &mut rng);
        let a = absorb::is_absorbable(&g, &y, &cfg).unwrap().is_some();
        prop_assert_eq!(a, absorb::is_absorbable(&g, &g.invert(&y), &cfg).unwrap().is_some());
        prop_assert_eq!(a, absorb::is_absorbable(&g, &g.tau_element(&y, 1), &cfg).unwrap().is_some());
    }

    #[test]
    fn positive_subwords_of_absorbables_are_absorbable(seed in any::<u64>()) {
        let g = b(4);
        let cfg = SearchConfig::default();
        let mut rng = sample::rng(seed);
        let y = sample::positive_factors(&g, 2, &mut rng);
        if absorb::is_absorbable(&g, &y, &cfg).unwrap().is_some() {
            // y = u·v·w with u a prefix and w a suffix of the rest.
            let u = sample::prefix(&g, &y, &mut rng);
            let rest = g.multiply(&g.invert(&u), &y).unwrap();
            let w = sample::suffix(&g, &rest, &mut rng);
            let v = g.multiply(&rest, &g.invert(&w)).unwrap();
            prop_assert!(v.inf() >= 0);
            prop_assert!(absorb::is_absorbable(&g, &v, &cfg).unwrap().is_some());
        }
    }

    #[test]
    fn complex_invariants(seed in any::<u64>(), i in 0usize..=4, j in 0usize..=4) {
        let g = b(4);
        let cx = ALComplex::new(&g, SearchConfig::default());
        let mut rng = sample::rng(seed);
        let x: Braid = sample::positive_factors(&g, i, &mut rng);
        let y: Braid = sample::positive_factors(&g, j, &mut rng);
        let h = sample::signed_word(&g, 6, &mut rng);
        let (v, w) = (cx.vertex_of(&x), cx.vertex_of(&y));
        if v != w {
            let fwd = cx.are_adjacent(&v, &w).unwrap().is_some();
            prop_assert_eq!(fwd, cx.are_adjacent(&w, &v).unwrap().is_some());
            let (hv, hw) = (cx.act(&h, &v).unwrap(), cx.act(&h, &w).unwrap());
            prop_assert_eq!(fwd, cx.are_adjacent(&hv, &hw).unwrap().is_some());
        }
        prop_assert_eq!(cx.act(&Element::delta_pow(2), &v).unwrap(), v.clone());
        let path = cx.preferred_path(&v, &w).unwrap();
        let d = cx.gcd_vertex(&v, &w).unwrap();
        let left = cx.preferred_path(&v, &d).unwrap().vertices;
        let right = cx.preferred_path(&d, &w).unwrap().vertices;
        let mut joined = left.clone();
        joined.extend(right.into_iter().skip(1));
        prop_assert_eq!(joined, path.vertices);
    }

    #[test]
    fn suffix_times_powers_of_x4_is_normal_as_written(seed in any::<u64>(), m in 0usize..=2) {
        let g = b(4);
        let x = x_n(4).unwrap();
        let mut rng = sample::rng(seed);
        let v = sample::suffix(&g, &x, &mut rng);
        if !v.is_identity() {
            let xm = g.power(&x, m as i64).unwrap();
            let vx = g.multiply(&v, &xm).unwrap();
            let mut expected = v.factors().to_vec();
            expected.extend_from_slice(xm.factors());
            prop_assert_eq!(vx.factors(), &expected[..]);
            prop_assert_eq!(vx.inf(), 0);
            let t = sample::prefix(&g, &vx, &mut rng);
            if !t.is_identity() {
                prop_assert!(!g.left_gcd(&v, &t).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn prefixes_of_x4_powers_sit_between_powers(seed in any::<u64>()) {
        let g = b(4);
        let x = x_n(4).unwrap();
        let x5 = g.power(&x, 5).unwrap();
        let mut rng = sample::rng(seed);
        let z = sample::prefix(&g, &x5, &mut rng);
        let r = special::check_between_powers(&g, &x, &z, 5).unwrap();
        prop_assert!(r.passes());
    }

    #[test]
    fn round_preserving_braids_decompose(seed in any::<u64>(), n in 4usize..=6) {
        let g = b(n);
        let mut rng = sample::rng(seed);
        let (y, c) = sample::round_preserving(&g, 8, &mut rng);
        let pieces = special::nine_absorbable_decomposition(&g, &y, c, &SearchConfig::default()).unwrap();
        prop_assert!(pieces.len() <= 9);
        for p in &pieces {
            prop_assert!(absorb::absorbs(&g, &p.absorber, &p.factor).unwrap());
        }
    }
}
