//! Acceptance run: one pass/fail line per criterion, non-zero exit on any
//! failure. Sampled criteria use fixed seeds, printed with the result.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use garside_al::abelian::zn_structure;
use garside_al::absorb::{self, SearchConfig};
use garside_al::braid::{BraidGroup, Perm};
use garside_al::complex::ALComplex;
use garside_al::special::{self, RoundCurve};
use garside_al::verify::sample;
use garside_al::{Braid, Element, Garside, GarsideOps};
use rand::Rng;

const SEED: u64 = 20_240_601;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Result<String, String>,
}

fn b(n: usize) -> BraidGroup {
    BraidGroup::new(n).unwrap()
}

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn simples_from_words(g: &BraidGroup, words: &[&[usize]]) -> Vec<Perm> {
    words.iter().map(|w| g.simple_from_word(w).unwrap()).collect()
}

/// All elements with `inf 0` and `sup k`, by extending with proper simples.
fn inf0_sup(g: &BraidGroup, k: usize) -> Vec<Braid> {
    let proper: Vec<Perm> = g.simples().into_iter().filter(|&s| s != g.identity() && s != g.delta()).collect();
    let mut layer = vec![Element::identity()];
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for x in &layer {
            for &s in &proper {
                let y = g.push_right(x, s);
                if y.inf() == 0 && y.sup() == x.sup() + 1 {
                    next.insert(y);
                }
            }
        }
        layer = next.into_iter().collect();
    }
    layer
}

fn long_absorbable() -> Result<String, String> {
    let g = b(4);
    let y = g.word(&[1, 1, 2, 2, 3, 3, 2, 2, 1]).map_err(e)?;
    let x = g.word(&[1, 2, 2, 2, 2, 1, 1, 2, 3]).map_err(e)?;
    let cert = absorb::is_absorbable(&g, &y, &cfg()).map_err(e)?.ok_or("search found no absorber")?;
    check(absorb::absorbs(&g, &cert.x, &y).map_err(e)?, "certificate does not absorb")?;
    check(cert.x.inf() == 0 && cert.x.sup() == 5, "certificate shape")?;
    check(absorb::absorbs(&g, &x, &y).map_err(e)?, "published absorber does not absorb")?;
    let shown = simples_from_words(&g, &[&[1, 2, 1], &[1, 2, 1, 3], &[1, 2, 3, 2], &[2, 3, 2], &[2, 3, 2, 1]]);
    let xy = g.multiply(&x, &y).map_err(e)?;
    check(xy.delta_power() == 0 && xy.factors() == &shown[..], "x·y normal form differs from the displayed product")?;
    Ok(format!("certificate {} after {} nodes", g.format_element(&cert.x), cert.stats.visited))
}

fn commuting_square() -> Result<String, String> {
    let g = b(4);
    let y = g.word(&[1, 3, 1, 3]).map_err(e)?;
    let report = absorb::search(&g, &y, &cfg()).map_err(e)?;
    check(report.absorber.is_none(), "search claims an absorber")?;
    let candidates = inf0_sup(&g, 2);
    let hits = candidates.iter().filter(|x| absorb::absorbs(&g, x, &y).unwrap()).count();
    check(hits == 0, format!("{hits} candidates absorb"))?;
    Ok(format!("{} inf-0 sup-2 candidates, none absorbs", candidates.len()))
}

fn atom_complements() -> Result<String, String> {
    let mut count = 0;
    for n in [4, 5] {
        let g = b(n);
        for i in 1..n {
            let y = g.simple_element(g.right_complement(g.sigma(i).map_err(e)?));
            check(absorb::is_absorbable(&g, &y, &cfg()).map_err(e)?.is_none(), format!("σ{i}⁻¹Δ absorbable in B{n}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} atom complements, none absorbable"))
}

fn three_strand_enumeration() -> Result<String, String> {
    let g = b(3);
    let list = absorb::enumerate_absorbable(&g, 3, &cfg()).map_err(e)?;
    let expected: BTreeSet<Braid> = [g.sigma_element(1).map_err(e)?, g.sigma_element(2).map_err(e)?].into();
    let got: BTreeSet<Braid> = list.iter().cloned().collect();
    check(got == expected && list.len() == 2, format!("got {} elements", list.len()))?;
    Ok("{σ1, σ2}".into())
}

fn abelian_multiples() -> Result<String, String> {
    let z = zn_structure(3).map_err(e)?;
    for i in 1..=3 {
        let unit = z.simple_element(z.unit(i).map_err(e)?);
        for k in 1..=4 {
            let y = z.power(&unit, k).map_err(e)?;
            check(absorb::is_absorbable(&z, &y, &cfg()).map_err(e)?.is_some(), format!("{k}·e{i}"))?;
        }
    }
    Ok("k·e_i absorbable for k ≤ 4, i ≤ 3".into())
}

fn delta_triples() -> Result<String, String> {
    for n in [4, 5] {
        let g = b(n);
        for k in [-2i64, -1, 1, 2] {
            let pieces = special::delta_three_absorbables(n, k).map_err(e)?;
            check(pieces.len() == 3, "not three pieces")?;
            let mut acc = Element::identity();
            for p in &pieces {
                check(absorb::absorbs(&g, &p.absorber, &p.factor).map_err(e)?, format!("n={n} k={k}: {}", p.rule))?;
                check(p.factor.inf() == 0 || p.factor.sup() == 0, "factor of the wrong shape")?;
                acc = g.multiply(&acc, &p.factor).map_err(e)?;
            }
            check(acc == Element::delta_pow(k), format!("n={n} k={k}: product ≠ Δ^k"))?;
        }
    }
    Ok("n ∈ {4,5}, k ∈ {−2,−1,1,2}".into())
}

fn x_golden() -> Result<String, String> {
    for n in 4..=10 {
        let r = special::check_x_properties(n).map_err(e)?;
        check(r.passes(), r.to_string())?;
        check(r.length == 2 * ((n + 1) / 2) + 2, format!("length of x_{n}"))?;
    }
    let g4 = b(4);
    let shown = simples_from_words(&g4, &[&[2], &[2, 1, 3], &[1, 3, 2, 1, 3], &[1, 3, 2, 1, 3], &[1, 3, 2], &[2]]);
    let x4 = special::x_n(4).map_err(e)?;
    check(x4.delta_power() == 0 && x4.factors() == &shown[..], "x_4 differs from its display")?;
    for n in [9, 10] {
        let g = b(n);
        let x = special::x_n(n).map_err(e)?;
        let s5 = g.sigma(5).map_err(e)?;
        check(x.canonical_length() == 12, format!("ℓ(x_{n}) = {}", x.canonical_length()))?;
        check(x.factors()[0] == s5 && x.factors()[11] == s5, format!("x_{n} ends"))?;
    }
    Ok("n = 4..10".into())
}

fn power_propositions() -> Result<String, String> {
    let g = b(4);
    let x = special::x_n(4).map_err(e)?;
    let mut rng = sample::rng(SEED);
    let x4 = g.power(&x, 4).map_err(e)?;
    let mut lambdas = BTreeSet::new();
    for _ in 0..100 {
        let z = sample::prefix(&g, &x4, &mut rng);
        let r = special::check_between_powers(&g, &x, &z, 4).map_err(e)?;
        check(r.passes(), format!("between powers: {}", g.format_element(&z)))?;
        lambdas.insert(r.lambda);
    }
    let mut initial = 0;
    while initial < 100 {
        let lam = rng.gen_range(2..=4);
        let tail = sample::positive_factors(&g, rng.gen_range(0..=3), &mut rng);
        let z = g.multiply(&g.power(&x, lam).map_err(e)?, &tail).map_err(e)?;
        if z.inf() != 0 {
            continue;
        }
        let r = special::check_initial_segment(&g, &x, &z).map_err(e)?;
        check(r.passes(), format!("initial segment: {}", g.format_element(&z)))?;
        initial += 1;
    }
    for _ in 0..100 {
        let k = rng.gen_range(1..=3);
        let v = sample::suffix(&g, &x, &mut rng);
        let z = g.multiply(&v, &g.power(&x, k as i64).map_err(e)?).map_err(e)?;
        let r = special::check_final_segment(&g, &x, &z, k).map_err(e)?;
        check(r.passes(), format!("final segment: {}", g.format_element(&z)))?;
    }
    let cx = ALComplex::new(&g, cfg());
    for _ in 0..100 {
        let l1 = rng.gen_range(0..=1);
        let l2 = rng.gen_range(l1 + 3..=4);
        let mut pick = |l: i64| -> Result<Braid, String> {
            let p = sample::prefix(&g, &x, &mut rng);
            let p = if p == x { Element::identity() } else { p };
            g.multiply(&g.power(&x, l).map_err(e)?, &p).map_err(e)
        };
        let (z1, z2) = (pick(l1)?, pick(l2)?);
        let r = special::check_path_through_powers(&cx, &x, &z1, &z2).map_err(e)?;
        check(r.contained, format!("path: {} to {}", g.format_element(&z1), g.format_element(&z2)))?;
    }
    Ok(format!("4 × 100 instances, seed {SEED}, λ values {lambdas:?}"))
}

fn preferred_paths() -> Result<String, String> {
    let mut rng = sample::rng(SEED + 1);
    let mut adjacent_pairs = 0;
    let mut pairs = 0;
    for n in [3, 4] {
        let g = b(n);
        let cx = ALComplex::new(&g, cfg());
        let absorbables = absorb::enumerate_absorbable(&g, if n == 3 { 3 } else { 2 }, &cfg()).map_err(e)?;
        let proper: Vec<Perm> = g.simples().into_iter().filter(|&s| s != g.identity() && s != g.delta()).collect();
        for _ in 0..100 {
            let x = sample::positive_factors(&g, rng.gen_range(0..=6), &mut rng);
            let y = sample::positive_factors(&g, rng.gen_range(0..=6), &mut rng);
            let (v, w) = (cx.vertex_of(&x), cx.vertex_of(&y));
            let path = cx.preferred_path(&v, &w).map_err(e)?;
            let mut back = cx.preferred_path(&w, &v).map_err(e)?.vertices;
            back.reverse();
            check(back == path.vertices, "path is not symmetric")?;
            let d = cx.gcd_vertex(&v, &w).map_err(e)?;
            let mut joined = cx.preferred_path(&v, &d).map_err(e)?.vertices;
            joined.extend(cx.preferred_path(&d, &w).map_err(e)?.vertices.into_iter().skip(1));
            check(joined == path.vertices, "path does not split at the gcd vertex")?;
            check(path.labels.windows(2).all(|p| g.is_left_weighted(p[0], p[1])), "labels not left-weighted")?;
            pairs += 1;

            // An adjacent pair: step from v along a simple or absorbable label.
            let step = if rng.gen_bool(0.5) {
                g.simple_element(proper[rng.gen_range(0..proper.len())])
            } else {
                let a = &absorbables[rng.gen_range(0..absorbables.len())];
                if rng.gen_bool(0.5) { g.invert(a) } else { a.clone() }
            };
            let w2 = cx.vertex_of(&g.multiply(&x, &step).map_err(e)?);
            if w2 != v {
                check(cx.adjacent_path_diameter_check(&v, &w2).map_err(e)?, "path between adjacent vertices has non-adjacent vertices")?;
                adjacent_pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, {adjacent_pairs} adjacent pairs, seed {}", SEED + 1))
}

fn thin_triangles() -> Result<String, String> {
    let g = b(4);
    let cx = ALComplex::new(&g, cfg());
    let mut rng = sample::rng(SEED + 2);
    let mut worst = 0;
    for _ in 0..100 {
        let mut corner = || cx.vertex_of(&sample::positive_factors(&g, rng.gen_range(0..=6), &mut rng));
        let (u, v, w) = (corner(), corner(), corner());
        let report = cx.triangle_thinness_report(&u, &v, &w).map_err(e)?;
        check(report.max_gap() <= 2, format!("gap {}", report.max_gap()))?;
        worst = worst.max(report.max_gap());
        let ui = g.invert(u.rep());
        let (v1, w1) = (cx.act(&ui, &v).map_err(e)?, cx.act(&ui, &w).map_err(e)?);
        let o = cx.overlap_length(&v1, &w1).map_err(e)?;
        check(o.length >= o.r, format!("overlap {} < r = {}", o.length, o.r))?;
    }
    Ok(format!("100 triangles, largest gap {worst}, seed {}", SEED + 2))
}

fn figure_braid() -> Result<String, String> {
    let g = b(5);
    let c = RoundCurve::new(5, 1, 3).map_err(e)?;
    let y = g.word(&[1, 2, 1, 4, 3, 2, 1, 1, 2, 1, 3, 2, 4, 4, 3, 2, 1]).map_err(e)?;
    let t = special::tube_decomposition(&g, &y, c).map_err(e)?.ok_or("curve does not stay round")?;
    check(t.y_int == g.word(&[1, 2, 1, 1, 2]).map_err(e)?, "interior part")?;
    check(t.y_tub == g.word(&[4, 3, 2, 1, 1, 2, 3, 4, 4, 3, 2, 1]).map_err(e)?, "tubular part")?;
    check(absorb::absorbs(&g, &g.word(&[4, 4]).map_err(e)?, &t.y_int).map_err(e)?, "σ4² does not absorb y_int")?;
    check(absorb::absorbs(&g, &g.word(&[1, 1, 1]).map_err(e)?, &t.y_tub).map_err(e)?, "σ1³ does not absorb y_tub")?;
    let pieces = special::nine_absorbable_decomposition(&g, &y, c, &cfg()).map_err(e)?;
    check(pieces.len() <= 9, "more than nine pieces")?;
    for p in &pieces {
        check(absorb::absorbs(&g, &p.absorber, &p.factor).map_err(e)?, "unverified piece")?;
    }
    Ok(format!("{} verified pieces", pieces.len()))
}

fn distance_facts() -> Result<String, String> {
    let g = b(4);
    let cx = ALComplex::new(&g, cfg());
    let one = cx.identity_vertex();
    let v = cx.vertex_of(&special::x_n(4).map_err(e)?);
    check(cx.are_adjacent(&one, &v).map_err(e)?.is_none(), "x_4 is adjacent to 1")?;
    let ub = cx.distance_upper_bound(&one, &v, 2, 7, 5_000_000).map_err(e)?;
    check(matches!(ub, Some(d) if d <= 6), format!("upper bound {ub:?}"))?;
    let mut rng = sample::rng(SEED + 3);
    for _ in 0..100 {
        let x = sample::signed_word(&g, 12, &mut rng);
        let w = cx.vertex_of(&x);
        check(cx.act(&Element::delta_pow(2), &w).map_err(e)? == w, "Δ² moves a vertex")?;
    }
    Ok(format!("2 ≤ d(1, x_4) ≤ {}", ub.unwrap()))
}

fn out_of_scope() -> Result<String, String> {
    Ok("not recomputed: the linear lower bound on d(1, x_n^N) and the explicit hyperbolicity constants \
        are statements about all paths in a locally infinite graph; criteria 8 to 10 test their \
        ingredients on seeded samples instead"
        .into())
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "long pseudo-Anosov absorbable in B4", limit: Duration::from_secs(60), run: long_absorbable },
        Criterion { id: 2, title: "(σ1σ3)² not absorbable", limit: Duration::from_secs(5), run: commuting_square },
        Criterion { id: 3, title: "σ_i⁻¹Δ not absorbable in B4, B5", limit: Duration::from_secs(600), run: atom_complements },
        Criterion { id: 4, title: "absorbables of B3 up to length 3", limit: Duration::from_secs(5), run: three_strand_enumeration },
        Criterion { id: 5, title: "multiples of units in Z^3", limit: Duration::from_secs(60), run: abelian_multiples },
        Criterion { id: 6, title: "Δ^k as three absorbables", limit: Duration::from_secs(60), run: delta_triples },
        Criterion { id: 7, title: "x_n golden suite", limit: Duration::from_secs(120), run: x_golden },
        Criterion { id: 8, title: "power propositions on random instances", limit: Duration::from_secs(600), run: power_propositions },
        Criterion { id: 9, title: "preferred path suite", limit: Duration::from_secs(600), run: preferred_paths },
        Criterion { id: 10, title: "2-thin triangles and overlap", limit: Duration::from_secs(1800), run: thin_triangles },
        Criterion { id: 11, title: "reducible braid regression", limit: Duration::from_secs(60), run: figure_braid },
        Criterion { id: 12, title: "distance facts for x_4", limit: Duration::from_secs(600), run: distance_facts },
        Criterion { id: 13, title: "scope statement", limit: Duration::from_secs(1), run: out_of_scope },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let took = start.elapsed();
        let (verdict, detail) = match result {
            Ok(d) if took <= c.limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {took:.2?}, limit {:?}", c.limit)),
            Err(m) => ("FAIL", m),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {verdict} [{:.2?}] {}: {detail}", c.id, took, c.title);
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
