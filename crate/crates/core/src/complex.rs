//! The additional length complex of a Garside group.
//!
//! Vertices are the cosets `gΔ^Z`, each stored through its unique
//! representative of infimum 0. Two vertices are adjacent when their
//! representatives differ, up to powers of `Δ`, by a simple element other
//! than `1` and `Δ`, or by an absorbable element. Preferred paths follow the
//! left normal form and use simple edges only.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::absorb::{self, AbsorbError, SearchConfig};
use crate::kernel::{Element, Garside, GarsideOps, KernelError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error(transparent)]
    Absorb(#[from] AbsorbError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error("adjacency is only asked for distinct vertices")]
    SameVertex,
    #[error("vertices are not adjacent")]
    NotAdjacent,
    #[error("search visited more than {limit} vertices")]
    Budget { limit: u64 },
    #[error("invariant breach: {0}")]
    InvariantBreach(String),
}

pub type Result<T> = std::result::Result<T, ComplexError>;

/// A coset `gΔ^Z`, identified by its representative of infimum 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex<S> {
    rep: Element<S>,
}

impl<S: Copy> Vertex<S> {
    pub fn rep(&self) -> &Element<S> {
        &self.rep
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Simple,
    Absorbable,
}

/// Why two vertices are adjacent: `v̲·label ∈ w̲Δ^Z`, with `label = z·Δ^shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeWitness<S> {
    pub kind: EdgeKind,
    pub label: Element<S>,
    pub shift: i64,
    /// For absorbable edges, an element absorbing the label.
    pub absorber: Option<Element<S>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreferredPath<S> {
    pub vertices: Vec<Vertex<S>>,
    pub labels: Vec<S>,
}

impl<S> PreferredPath<S> {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// One connector `(d∧Δ^i)·y = v̲∧Δ^i` on an initial segment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentWitness<S> {
    pub index: usize,
    pub connector: Element<S>,
    /// `d∧Δ^i`, which absorbs the connector.
    pub absorber: Element<S>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Overlap {
    /// `r = sup(a)` where `v̲ = d·a`, `d = v̲∧w̲`.
    pub r: i64,
    /// `sup(∂v̲ ∧ ∂a·τ^r(b))`.
    pub length: i64,
}

/// A short path from a vertex on one side of a triangle to the union of
/// the other two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinWitness<S> {
    /// Side as a pair of corner indices into `(u, v, w)`.
    pub side: (usize, usize),
    pub index: usize,
    pub p: Vertex<S>,
    pub q: Vertex<S>,
    /// The route `p → … → q` with repeated vertices removed.
    pub route: Vec<Vertex<S>>,
    /// Edge labels along the route (`v̲_j⁻¹ v̲_{j+1}` normalised to inf 0).
    pub labels: Vec<Element<S>>,
}

impl<S> ThinWitness<S> {
    pub fn len(&self) -> usize {
        self.route.len() - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinnessReport<S> {
    pub witnesses: Vec<ThinWitness<S>>,
}

impl<S> ThinnessReport<S> {
    pub fn max_gap(&self) -> usize {
        self.witnesses.iter().map(|w| w.len()).max().unwrap_or(0)
    }
}

pub struct ALComplex<'a, G: Garside> {
    g: &'a G,
    config: SearchConfig,
}

impl<'a, G: Garside> ALComplex<'a, G> {
    pub fn new(g: &'a G, config: SearchConfig) -> Self {
        ALComplex { g, config }
    }

    pub fn structure(&self) -> &G {
        self.g
    }

    pub fn config(&self) -> &SearchConfig {
        &self.config
    }

    pub fn vertex_of(&self, g: &Element<G::Simple>) -> Vertex<G::Simple> {
        Vertex { rep: self.g.coset_rep(g) }
    }

    pub fn identity_vertex(&self) -> Vertex<G::Simple> {
        Vertex { rep: Element::identity() }
    }

    /// Left action `g·v`.
    pub fn act(&self, g: &Element<G::Simple>, v: &Vertex<G::Simple>) -> Result<Vertex<G::Simple>> {
        Ok(self.vertex_of(&self.g.multiply(g, &v.rep)?))
    }

    /// `v̲⁻¹·w̲`.
    fn quotient(&self, v: &Vertex<G::Simple>, w: &Vertex<G::Simple>) -> Result<Element<G::Simple>> {
        Ok(self.g.multiply(&self.g.invert(&v.rep), &w.rep)?)
    }

    /// Exact adjacency test. Only the shifts `-inf z` and `-sup z` of
    /// `z = v̲⁻¹w̲` can produce an element with `inf 0` or `sup 0`.
    pub fn are_adjacent(
        &self,
        v: &Vertex<G::Simple>,
        w: &Vertex<G::Simple>,
    ) -> Result<Option<EdgeWitness<G::Simple>>> {
        if v == w {
            return Err(ComplexError::SameVertex);
        }
        let z = self.quotient(v, w)?;
        let k1 = -z.inf();
        let y1 = self.g.multiply(&z, &Element::delta_pow(k1))?;
        if z.canonical_length() == 1 {
            return Ok(Some(EdgeWitness { kind: EdgeKind::Simple, label: y1, shift: k1, absorber: None }));
        }
        let k2 = -z.sup();
        let y2 = self.g.multiply(&z, &Element::delta_pow(k2))?;
        for (y, k) in [(y1, k1), (y2, k2)] {
            if let Some(x) = absorb::search(self.g, &y, &self.config)?.absorber {
                return Ok(Some(EdgeWitness { kind: EdgeKind::Absorbable, label: y, shift: k, absorber: Some(x) }));
            }
        }
        Ok(None)
    }

    /// The path `A(v, w)` spelled by the normal form of the representative
    /// of `v̲⁻¹w̲`, translated to start at `v`.
    pub fn preferred_path(&self, v: &Vertex<G::Simple>, w: &Vertex<G::Simple>) -> Result<PreferredPath<G::Simple>> {
        let x = self.vertex_of(&self.quotient(v, w)?).rep;
        let mut vertices = vec![v.clone()];
        let mut acc = v.rep.clone();
        for &s in x.factors() {
            acc = self.g.push_right(&acc, s);
            vertices.push(self.vertex_of(&acc));
        }
        debug_assert_eq!(vertices.last(), Some(w));
        Ok(PreferredPath { vertices, labels: x.factors().to_vec() })
    }

    pub fn gcd_vertex(&self, v: &Vertex<G::Simple>, w: &Vertex<G::Simple>) -> Result<Vertex<G::Simple>> {
        Ok(self.vertex_of(&self.g.left_gcd(&v.rep, &w.rep)?))
    }

    /// Certified upper bound on the distance, from breadth-first search in
    /// the subgraph whose edges are simple labels and absorbable labels of
    /// canonical length at most `gen_len`. `None` when the bound exceeds
    /// `radius`. `vertex_budget` caps the number of stored vertices.
    pub fn distance_upper_bound(
        &self,
        v: &Vertex<G::Simple>,
        w: &Vertex<G::Simple>,
        gen_len: usize,
        radius: usize,
        vertex_budget: u64,
    ) -> Result<Option<usize>> {
        if v == w {
            return Ok(Some(0));
        }
        if self.are_adjacent(v, w)?.is_some() {
            return Ok(Some(1));
        }
        // The preferred path lies in the subgraph; search only for shorter.
        let path_len = self.vertex_of(&self.quotient(v, w)?).rep.canonical_length();
        let cap = radius.min(path_len.saturating_sub(1));
        let gens = self.generators(gen_len)?;
        let found = if cap >= 2 { self.bidirectional(v, w, &gens, cap, vertex_budget)? } else { None };
        Ok(match found {
            Some(d) => Some(d),
            None if path_len <= radius => Some(path_len),
            None => None,
        })
    }

    /// Right multipliers for the search, closed under inverses modulo `Δ`.
    pub fn generators(&self, gen_len: usize) -> Result<Vec<Element<G::Simple>>> {
        let (id, delta) = (self.g.identity(), self.g.delta());
        let mut gens: Vec<Element<G::Simple>> = self
            .g
            .simples()
            .into_iter()
            .filter(|&s| s != id && s != delta)
            .map(|s| self.g.simple_element(s))
            .collect();
        if gen_len >= 1 {
            let cfg = SearchConfig { budget: self.config.budget, parallel: self.config.parallel };
            for y in absorb::enumerate_absorbable(self.g, gen_len, &cfg)? {
                if y.canonical_length() >= 2 {
                    let inv = self.vertex_of(&self.g.invert(&y)).rep;
                    gens.push(y);
                    gens.push(inv);
                }
            }
        }
        gens.sort();
        gens.dedup();
        Ok(gens)
    }

    fn bidirectional(
        &self,
        v: &Vertex<G::Simple>,
        w: &Vertex<G::Simple>,
        gens: &[Element<G::Simple>],
        cap: usize,
        budget: u64,
    ) -> Result<Option<usize>> {
        let mut seen = [HashMap::new(), HashMap::new()];
        seen[0].insert(v.clone(), 0usize);
        seen[1].insert(w.clone(), 0usize);
        let mut frontier = [vec![v.clone()], vec![w.clone()]];
        let mut depth = [0usize, 0usize];
        while depth[0] + depth[1] < cap {
            let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
            if frontier[side].is_empty() {
                return Ok(None);
            }
            let next: Vec<Vec<Vertex<G::Simple>>> = frontier[side]
                .par_iter()
                .map(|u| {
                    gens.iter()
                        .map(|s| Ok(self.vertex_of(&self.g.multiply(&u.rep, s)?)))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            depth[side] += 1;
            let mut fresh = Vec::new();
            let mut best: Option<usize> = None;
            for u in next.into_iter().flatten() {
                if seen[side].contains_key(&u) {
                    continue;
                }
                if let Some(&other) = seen[1 - side].get(&u) {
                    let d = depth[side] + other;
                    best = Some(best.map_or(d, |b: usize| b.min(d)));
                }
                seen[side].insert(u.clone(), depth[side]);
                fresh.push(u);
                if (seen[0].len() + seen[1].len()) as u64 > budget {
                    return Err(ComplexError::Budget { limit: budget });
                }
            }
            if let Some(d) = best {
                return Ok((d <= cap).then_some(d));
            }
            frontier[side] = fresh;
        }
        Ok(None)
    }

    /// For `d = v̲∧w̲` and `i = 1..sup d`, the connector `y` with
    /// `(d∧Δ^i)·y = v̲∧Δ^i`, checked to be absorbed by `d∧Δ^i`.
    pub fn initial_segment_witnesses(
        &self,
        v: &Vertex<G::Simple>,
        w: &Vertex<G::Simple>,
    ) -> Result<Vec<SegmentWitness<G::Simple>>> {
        let d = self.g.left_gcd(&v.rep, &w.rep)?;
        let mut out = Vec::new();
        for i in 1..=d.sup().max(0) as usize {
            let di = self.g.head(&d, i);
            let vi = self.g.head(&v.rep, i);
            let y = self.g.multiply(&self.g.invert(&di), &vi)?;
            if y.inf() < 0 {
                return Err(ComplexError::InvariantBreach(format!("d∧Δ^{i} does not divide v̲∧Δ^{i}")));
            }
            if !y.is_identity() && !absorb::absorbs(self.g, &di, &y)? {
                return Err(ComplexError::InvariantBreach(format!(
                    "connector at step {i} is not absorbed by d∧Δ^{i}"
                )));
            }
            out.push(SegmentWitness { index: i, connector: y, absorber: di });
        }
        Ok(out)
    }

    /// The overlap bound for the triangle `(1, v, w)`, after checking that
    /// `U = ∂(Δ^r ∧↰ v̲)` is a common prefix of `∂v̲` and `∂a`.
    pub fn overlap_length(&self, v: &Vertex<G::Simple>, w: &Vertex<G::Simple>) -> Result<Overlap> {
        let g = self.g;
        let d = g.left_gcd(&v.rep, &w.rep)?;
        let di = g.invert(&d);
        let a = g.multiply(&di, &v.rep)?;
        let b = g.multiply(&di, &w.rep)?;
        let r = a.sup();
        let dv = g.complement(&v.rep)?;
        let da = g.complement(&a)?;
        let target = g.multiply(&da, &g.tau_element(&b, r))?;
        if target != self.vertex_of(&self.quotient(v, w)?).rep {
            return Err(ComplexError::InvariantBreach("∂a·τ^r(b) is not the representative of v̲⁻¹w̲".into()));
        }
        let tail = g.right_gcd(&Element::delta_pow(r), &v.rep)?;
        let u = g.complement(&tail)?;
        if !(g.left_divides(&u, &dv) && g.left_divides(&u, &da)) {
            return Err(ComplexError::InvariantBreach("U is not a common prefix of ∂v̲ and ∂a".into()));
        }
        let common = g.left_gcd(&dv, &target)?;
        Ok(Overlap { r, length: common.sup() })
    }

    /// Checks that every pair of vertices on `A(v, w)` is adjacent or equal.
    pub fn adjacent_path_diameter_check(&self, v: &Vertex<G::Simple>, w: &Vertex<G::Simple>) -> Result<bool> {
        if v != w && self.are_adjacent(v, w)?.is_none() {
            return Err(ComplexError::NotAdjacent);
        }
        let path = self.preferred_path(v, w)?;
        let vs = &path.vertices;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if vs[i] != vs[j] && self.are_adjacent(&vs[i], &vs[j])?.is_none() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// For every vertex on each side of the triangle with preferred-path
    /// sides, a route of length at most 2 to one of the other sides.
    ///
    /// Near a corner `X` (as long as the two sides at `X` share their first
    /// `sup(d)` steps, `d` the gcd after translating `X` to `1`) the route is
    /// `P_i → D_i → Q_i` with `P_i`, `Q_i` the `i`-th vertices of the two sides
    /// and `D_i` the `i`-th vertex of the path to `d`; both steps carry
    /// absorbable connectors. The remaining vertices are reached from the
    /// other corner of the same side.
    pub fn triangle_thinness_report(
        &self,
        u: &Vertex<G::Simple>,
        v: &Vertex<G::Simple>,
        w: &Vertex<G::Simple>,
    ) -> Result<ThinnessReport<G::Simple>> {
        let corners = [u.clone(), v.clone(), w.clone()];
        let sides = [(0usize, 1usize), (0, 2), (1, 2)];
        let paths: Vec<PreferredPath<G::Simple>> = sides
            .iter()
            .map(|&(a, b)| self.preferred_path(&corners[a], &corners[b]))
            .collect::<Result<_>>()?;
        let mut witnesses = Vec::new();
        for (si, &(a, b)) in sides.iter().enumerate() {
            let c = 3 - a - b;
            let k = paths[si].len();
            let sup_a = self.corner_reach(&corners[a], &corners[b], &corners[c])?;
            let sup_b = self.corner_reach(&corners[b], &corners[a], &corners[c])?;
            if sup_a + sup_b < k {
                return Err(ComplexError::InvariantBreach(format!(
                    "corner segments on side {a}{b} do not meet: {sup_a} + {sup_b} < {k}"
                )));
            }
            for i in 0..=k {
                let p = &paths[si].vertices[i];
                let (corner, toward, index) = if i <= sup_a { (a, b, i) } else { (b, a, k - i) };
                let route = self.corner_route(&corners[corner], &corners[toward], &corners[c], index)?;
                if route.first() != Some(p) {
                    return Err(ComplexError::InvariantBreach(format!(
                        "step {index} from corner {corner} does not land on vertex {i} of side {a}{b}"
                    )));
                }
                let q = route.last().expect("nonempty").clone();
                let other = [(corner.min(c), corner.max(c))];
                let on_other = sides.iter().zip(&paths).any(|(s, path)| other.contains(s) && path.vertices.contains(&q));
                if !on_other {
                    return Err(ComplexError::InvariantBreach(format!(
                        "endpoint for vertex {i} of side {a}{b} is not on side {}{}",
                        corner.min(c),
                        corner.max(c)
                    )));
                }
                let mut route = route;
                route.dedup();
                let labels = route
                    .windows(2)
                    .map(|pair| self.quotient(&pair[0], &pair[1]).map(|z| self.vertex_of(&z).rep))
                    .collect::<Result<Vec<_>>>()?;
                for pair in route.windows(2) {
                    if self.are_adjacent(&pair[0], &pair[1])?.is_none() {
                        return Err(ComplexError::InvariantBreach("route step is not an edge".into()));
                    }
                }
                witnesses.push(ThinWitness { side: (a, b), index: i, p: p.clone(), q, route, labels });
            }
        }
        Ok(ThinnessReport { witnesses })
    }

    /// `sup(d)` for `d = x̲⁻¹y̲ ∧ x̲⁻¹z̲` after translating by `x̲⁻¹`.
    fn corner_reach(&self, x: &Vertex<G::Simple>, y: &Vertex<G::Simple>, z: &Vertex<G::Simple>) -> Result<usize> {
        let e = self.vertex_of(&self.quotient(x, y)?).rep;
        let f = self.vertex_of(&self.quotient(x, z)?).rep;
        Ok(self.g.left_gcd(&e, &f)?.sup().max(0) as usize)
    }

    /// Route `P_i → D_i → Q_i` from corner `x`, `P` on the side toward `y`,
    /// `Q` on the side toward `z`, in original coordinates.
    fn corner_route(
        &self,
        x: &Vertex<G::Simple>,
        y: &Vertex<G::Simple>,
        z: &Vertex<G::Simple>,
        i: usize,
    ) -> Result<Vec<Vertex<G::Simple>>> {
        let g = self.g;
        let e = self.vertex_of(&self.quotient(x, y)?).rep;
        let f = self.vertex_of(&self.quotient(x, z)?).rep;
        let d = g.left_gcd(&e, &f)?;
        let (pi, di, qi) = (g.head(&e, i), g.head(&d, i), g.head(&f, i));
        for (end, name) in [(&pi, "P"), (&qi, "Q")] {
            let y = g.multiply(&g.invert(&di), end)?;
            if y.inf() < 0 || (!y.is_identity() && !absorb::absorbs(g, &di, &y)?) {
                return Err(ComplexError::InvariantBreach(format!("connector D→{name} fails at step {i}")));
            }
        }
        [pi, di, qi]
            .iter()
            .map(|h| Ok(self.vertex_of(&g.multiply(&x.rep, h)?)))
            .collect()
    }
}

impl<S: Copy + fmt::Debug> fmt::Display for Vertex<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rep.factors())
    }
}

/// One line per witness: `p -> q : len=<n> via <labels>`.
pub fn render_report<G: Garside>(g: &G, report: &ThinnessReport<G::Simple>) -> String {
    let show = |e: &Element<G::Simple>| -> String {
        if e.is_identity() {
            "1".to_string()
        } else {
            e.factors().iter().map(|&s| g.format_simple(s)).collect::<Vec<_>>().join(".")
        }
    };
    let mut out = String::new();
    for w in &report.witnesses {
        let via = if w.labels.is_empty() {
            "-".to_string()
        } else {
            w.labels.iter().map(show).collect::<Vec<_>>().join(",")
        };
        out.push_str(&format!("{} -> {} : len={} via {}\n", show(w.p.rep()), show(w.q.rep()), w.len(), via));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidGroup;

    fn cx(g: &BraidGroup) -> ALComplex<'_, BraidGroup> {
        ALComplex::new(g, SearchConfig::default())
    }

    #[test]
    fn vertex_examples() {
        let g3 = BraidGroup::new(3).unwrap();
        let c = cx(&g3);
        assert_eq!(c.vertex_of(&Element::delta_pow(5)), c.identity_vertex());
        let e = g3.multiply(&Element::delta_pow(1), &g3.sigma_element(2).unwrap()).unwrap();
        assert_eq!(c.vertex_of(&e).rep(), &g3.sigma_element(1).unwrap());
        let g4 = BraidGroup::new(4).unwrap();
        let c4 = cx(&g4);
        let v = c4.vertex_of(&g4.sigma_element(1).unwrap());
        assert_eq!(c4.act(&Element::delta_pow(1), &v).unwrap().rep(), &g4.sigma_element(3).unwrap());
        assert_eq!(c4.act(&Element::delta_pow(2), &v).unwrap(), v);
    }

    #[test]
    fn adjacency_examples() {
        let g3 = BraidGroup::new(3).unwrap();
        let c = cx(&g3);
        let one = c.identity_vertex();
        let w = c.vertex_of(&g3.word(&[1, 2]).unwrap());
        assert_eq!(c.are_adjacent(&one, &w).unwrap().unwrap().kind, EdgeKind::Simple);
        let sq = c.vertex_of(&g3.word(&[1, 1]).unwrap());
        assert!(c.are_adjacent(&one, &sq).unwrap().is_none());
        assert_eq!(c.are_adjacent(&one, &one), Err(ComplexError::SameVertex));
        let g4 = BraidGroup::new(4).unwrap();
        let c4 = cx(&g4);
        let y = g4.signed_word(&[(1, 2), (2, 2), (3, 2), (2, 2), (1, 1)]).unwrap();
        let wit = c4.are_adjacent(&c4.identity_vertex(), &c4.vertex_of(&y)).unwrap().unwrap();
        assert_eq!(wit.kind, EdgeKind::Absorbable);
    }

    #[test]
    fn path_examples() {
        let g3 = BraidGroup::new(3).unwrap();
        let c = cx(&g3);
        let one = c.identity_vertex();
        assert_eq!(c.preferred_path(&one, &one).unwrap().vertices, vec![one.clone()]);
        let sq = c.vertex_of(&g3.word(&[1, 1]).unwrap());
        let p = c.preferred_path(&one, &sq).unwrap();
        assert_eq!(p.labels, vec![g3.sigma(1).unwrap(); 2]);
        let s12 = c.vertex_of(&g3.word(&[1, 2]).unwrap());
        assert_eq!(c.gcd_vertex(&sq, &s12).unwrap(), c.vertex_of(&g3.sigma_element(1).unwrap()));
        assert_eq!(c.gcd_vertex(&one, &sq).unwrap(), one);
    }

    #[test]
    fn distance_examples() {
        let g3 = BraidGroup::new(3).unwrap();
        let c = cx(&g3);
        let one = c.identity_vertex();
        let sq = c.vertex_of(&g3.word(&[1, 1]).unwrap());
        assert_eq!(c.distance_upper_bound(&one, &one, 1, 3, 100_000).unwrap(), Some(0));
        assert_eq!(c.distance_upper_bound(&one, &sq, 1, 3, 100_000).unwrap(), Some(2));
        assert_eq!(c.distance_upper_bound(&one, &sq, 1, 1, 100_000).unwrap(), None);
    }

    #[test]
    fn segment_and_overlap_examples() {
        let g3 = BraidGroup::new(3).unwrap();
        let c = cx(&g3);
        let v = c.vertex_of(&g3.word(&[1, 2]).unwrap());
        let w = c.vertex_of(&g3.sigma_element(1).unwrap());
        let wit = c.initial_segment_witnesses(&v, &w).unwrap();
        assert_eq!(wit.len(), 1);
        assert_eq!(wit[0].absorber, g3.sigma_element(1).unwrap());
        assert_eq!(wit[0].connector, g3.sigma_element(2).unwrap());
        let same = c.initial_segment_witnesses(&v, &v).unwrap();
        assert!(same.iter().all(|s| s.connector.is_identity()));
        let sq = c.vertex_of(&g3.word(&[1, 1]).unwrap());
        let o = c.overlap_length(&sq, &v).unwrap();
        assert_eq!(o.r, 1);
        assert!(o.length >= o.r);
        let o = c.overlap_length(&v, &v).unwrap();
        assert_eq!(o.r, 0);
    }

    #[test]
    fn thinness_examples() {
        let g3 = BraidGroup::new(3).unwrap();
        let c = cx(&g3);
        let one = c.identity_vertex();
        let sq = c.vertex_of(&g3.word(&[1, 1]).unwrap());
        let s12 = c.vertex_of(&g3.word(&[1, 2]).unwrap());
        let report = c.triangle_thinness_report(&one, &sq, &s12).unwrap();
        assert!(report.max_gap() <= 2);
        assert_eq!(report.witnesses.len(), 3 + 3 + 2);
        let degenerate = c.triangle_thinness_report(&one, &one, &sq).unwrap();
        assert!(degenerate.witnesses.iter().filter(|w| w.side == (0, 1)).all(|w| w.len() == 0));
        let text = render_report(&g3, &report);
        assert!(text.lines().all(|l| l.contains(" -> ") && l.contains(" : len=")));
    }

    #[test]
    fn diameter_check_examples() {
        let g4 = BraidGroup::new(4).unwrap();
        let c = cx(&g4);
        let one = c.identity_vertex();
        let s = c.vertex_of(&g4.word(&[1, 2]).unwrap());
        assert!(c.adjacent_path_diameter_check(&one, &s).unwrap());
        let y = g4.signed_word(&[(1, 2), (2, 2), (3, 2), (2, 2), (1, 1)]).unwrap();
        assert!(c.adjacent_path_diameter_check(&one, &c.vertex_of(&y)).unwrap());
        let g3 = BraidGroup::new(3).unwrap();
        let c3 = cx(&g3);
        let far = c3.vertex_of(&g3.word(&[1, 1]).unwrap());
        assert_eq!(c3.adjacent_path_diameter_check(&c3.identity_vertex(), &far), Err(ComplexError::NotAdjacent));
    }
}
