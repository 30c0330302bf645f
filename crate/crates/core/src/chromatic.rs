//! Chromatic-polynomial engines and cross-checks.
//!
//! Three independent routes to the same coefficients live here:
//!
//! * [`chromatic_polynomial`] / [`Solver`]: deletion–contraction in
//!   magnitude space (both minors add), with a closed form at forests and an
//!   optional memo keyed by a canonical labeling;
//! * [`brute_force_colorings`]: direct enumeration of proper colorings,
//!   usable as an evaluation oracle under an explicit work budget;
//! * [`coefficients_via_broken_circuits`]: subset enumeration counting the
//!   edge sets that contain no broken circuit, one count per size.
//!
//! The routes share no code beyond the graph type, which is what makes their
//! agreement meaningful.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::binomial::binom;
use crate::cycles;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};
use crate::poly::ChromaticPolynomial;

/// Default step budget for [`brute_force_colorings`]: caps `v * q^v`.
pub const DEFAULT_COLORING_BUDGET: u128 = 1_000_000_000;

/// Default edge budget for [`coefficients_via_broken_circuits`], which walks
/// all `2^e` edge subsets.
pub const DEFAULT_SUBSET_EDGE_BUDGET: usize = 20;

/// Deletion–contraction solver. [`Solver::with_memo`] caches results keyed
/// by a canonical labeling, so isomorphic minors are solved once.
pub struct Solver {
    memo: Option<BTreeMap<Vec<u16>, Vec<BigUint>>>,
}

impl Solver {
    /// Plain recursion, no caching.
    pub fn new() -> Solver {
        Solver { memo: None }
    }

    /// Recursion with an isomorphism-keyed memo (graphs up to 12 vertices;
    /// larger intermediates fall through uncached).
    pub fn with_memo() -> Solver {
        Solver { memo: Some(BTreeMap::new()) }
    }

    /// Computes the chromatic polynomial; the input is simplified first.
    pub fn polynomial(&mut self, g: &Graph) -> ChromaticPolynomial {
        let simple = g.simplify();
        ChromaticPolynomial::from_magnitudes(self.solve(simple))
    }

    fn solve(&mut self, g: Graph) -> Vec<BigUint> {
        let v = g.vertex_count();
        let c = g.component_count();
        if g.edge_count() == v - c {
            return forest_magnitudes(v, c);
        }
        let key = self.memo.as_ref().and_then(|_| canonical_rows(&g));
        if let (Some(memo), Some(k)) = (self.memo.as_ref(), key.as_ref()) {
            if let Some(hit) = memo.get(k) {
                return hit.clone();
            }
        }
        // Pivot on an edge of a shortest circuit: deletion then cannot
        // lower the girth, and contraction strictly shrinks the graph.
        let (pivot, _) = cycles::shortest_cycle_edge(&g).expect("non-forest has a circuit");
        let deleted = g.delete_edge(pivot).expect("pivot exists");
        let contracted = g.contract_edge(pivot).expect("pivot exists");
        let mut mags = self.solve(deleted);
        let lower = self.solve(contracted);
        // Same slot `magnitudes[r - 1]` holds `a_r` in both vectors; the
        // contracted graph simply has no degree-`v` entry.
        for (slot, m) in lower.into_iter().enumerate() {
            mags[slot] += m;
        }
        if let (Some(memo), Some(k)) = (self.memo.as_mut(), key) {
            memo.insert(k, mags.clone());
        }
        mags
    }
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new()
    }
}

/// Chromatic polynomial by deletion–contraction.
///
/// Uses the plain solver: at desk scale the canonical-labeling work a
/// memoized [`Solver`] spends per recursion node costs more than the
/// subproblem reuse saves (240x slower on the 10-vertex 3-regular graph),
/// so memoization is opt-in via [`Solver::with_memo`].
pub fn chromatic_polynomial(g: &Graph) -> ChromaticPolynomial {
    Solver::new().polynomial(g)
}

/// Closed form at forests: `v` vertices, `c` components, all magnitudes
/// `a_r = binom(v - c, r - c)`.
fn forest_magnitudes(v: usize, c: usize) -> Vec<BigUint> {
    (1..=v)
        .map(|r| {
            binom((v - c) as i64, r as i64 - c as i64)
                .to_biguint()
                .expect("binomials of nonnegative arguments are nonnegative")
        })
        .collect()
}

/// Canonical adjacency rows: the lexicographically greatest sequence
/// `rows[d]` (bit `i` = adjacency of the vertex placed at `d` to the vertex
/// placed at `i`) over all orderings, found by branch and bound. Two graphs
/// get equal rows exactly when they are isomorphic. `None` above 12 vertices.
fn canonical_rows(g: &Graph) -> Option<Vec<u16>> {
    let v = g.vertex_count();
    if v > 12 {
        return None;
    }
    let mut adj = vec![0u16; v];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    let mut state = CanonState {
        adj: &adj,
        best: None,
        perm: Vec::with_capacity(v),
        rows: Vec::with_capacity(v),
        used: vec![false; v],
    };
    state.dfs(true);
    state.best
}

struct CanonState<'a> {
    adj: &'a [u16],
    best: Option<Vec<u16>>,
    perm: Vec<usize>,
    rows: Vec<u16>,
    used: Vec<bool>,
}

impl CanonState<'_> {
    /// `tied` holds while `rows` equals the best prefix; only then can a
    /// smaller candidate row be pruned.
    fn dfs(&mut self, tied: bool) {
        let v = self.adj.len();
        let d = self.perm.len();
        if d == v {
            if self.best.is_none() || !tied {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        let mut candidates: Vec<(u16, usize)> = (0..v)
            .filter(|&u| !self.used[u])
            .map(|u| {
                let mut row = 0u16;
                for (i, &p) in self.perm.iter().enumerate() {
                    if (self.adj[u] >> p) & 1 == 1 {
                        row |= 1 << i;
                    }
                }
                (row, u)
            })
            .collect();
        candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (row, u) in candidates {
            let (prune, child_tied) = match (&self.best, tied) {
                (Some(best), true) => match row.cmp(&best[d]) {
                    std::cmp::Ordering::Less => (true, false),
                    std::cmp::Ordering::Equal => (false, true),
                    std::cmp::Ordering::Greater => (false, false),
                },
                _ => (false, false),
            };
            if prune {
                break; // candidates are sorted descending: the rest are smaller
            }
            self.perm.push(u);
            self.rows.push(row);
            self.used[u] = true;
            self.dfs(child_tied);
            self.used[u] = false;
            self.rows.pop();
            self.perm.pop();
        }
    }
}

/// Number of proper colorings with `q` colors, by direct enumeration with
/// the default work budget.
pub fn brute_force_colorings(g: &Graph, q: u64) -> Result<BigUint> {
    brute_force_colorings_with_budget(g, q, DEFAULT_COLORING_BUDGET)
}

/// [`brute_force_colorings`] with an explicit budget on `v * q^v` steps;
/// refuses (rather than hangs) when the search would exceed it.
pub fn brute_force_colorings_with_budget(g: &Graph, q: u64, budget: u128) -> Result<BigUint> {
    let v = g.vertex_count();
    let mut work: u128 = v as u128;
    for _ in 0..v {
        work = work.saturating_mul(q as u128);
    }
    if work > budget {
        return Err(Error::BudgetExceeded { required: work, budget });
    }
    if q == 0 {
        return Ok(BigUint::zero());
    }
    // Neighbors with smaller index: the only ones assigned when a vertex is
    // colored, walking vertices in index order.
    let mut earlier = vec![Vec::new(); v];
    for e in g.edges() {
        let (lo, hi) = (e.u.min(e.v), e.u.max(e.v));
        earlier[hi].push(lo);
    }
    let mut colors = vec![0u64; v];
    let count = color_rec(0, q, &earlier, &mut colors);
    Ok(BigUint::from(count))
}

fn color_rec(i: usize, q: u64, earlier: &[Vec<usize>], colors: &mut Vec<u64>) -> u128 {
    if i == earlier.len() {
        return 1;
    }
    let mut total = 0u128;
    'next_color: for color in 0..q {
        for &w in &earlier[i] {
            if colors[w] == color {
                continue 'next_color;
            }
        }
        colors[i] = color;
        total += color_rec(i + 1, q, earlier, colors);
    }
    total
}

/// Edge ids in ascending order: the default order for broken circuits.
pub fn default_edge_order(g: &Graph) -> Vec<EdgeId> {
    let mut ids: Vec<EdgeId> = g.edges().iter().map(|e| e.id).collect();
    ids.sort_unstable();
    ids
}

/// Chromatic coefficients by broken-circuit counting with the default edge
/// budget: `a_r` is the number of `(v - r)`-edge subsets containing no
/// circuit-minus-its-greatest-edge, under the given total order on edges.
pub fn coefficients_via_broken_circuits(
    g: &Graph,
    order: &[EdgeId],
) -> Result<ChromaticPolynomial> {
    coefficients_via_broken_circuits_with_budget(g, order, DEFAULT_SUBSET_EDGE_BUDGET)
}

/// [`coefficients_via_broken_circuits`] with an explicit edge budget.
pub fn coefficients_via_broken_circuits_with_budget(
    g: &Graph,
    order: &[EdgeId],
    max_edges: usize,
) -> Result<ChromaticPolynomial> {
    if !g.is_simple() {
        return Err(Error::InvalidParams(
            "broken-circuit counting needs a simplified graph".into(),
        ));
    }
    let v = g.vertex_count();
    let e = g.edge_count();
    if e > max_edges.min(63) {
        return Err(Error::BudgetExceeded {
            required: e as u128,
            budget: max_edges.min(63) as u128,
        });
    }
    let mut rank: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for (i, &id) in order.iter().enumerate() {
        g.edge(id)?;
        if rank.insert(id, i).is_some() {
            return Err(Error::InvalidParams(format!("edge {id} repeated in order")));
        }
    }
    if rank.len() != e {
        return Err(Error::InvalidParams(format!(
            "order lists {} edges, graph has {e}",
            rank.len()
        )));
    }
    let position: BTreeMap<EdgeId, usize> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, edge)| (edge.id, i))
        .collect();

    // Broken circuits as bitmasks over edge positions, minimized: a subset
    // avoids all broken circuits iff it avoids the inclusion-minimal ones.
    let mut broken: Vec<u64> = cycles::cycles_as_edge_sets(g)
        .into_iter()
        .map(|ids| {
            let greatest = *ids.iter().max_by_key(|id| rank[id]).expect("circuit has edges");
            ids.iter()
                .filter(|&&id| id != greatest)
                .map(|id| 1u64 << position[&id])
                .sum()
        })
        .collect();
    broken.sort_unstable_by_key(|m| m.count_ones());
    let mut minimal: Vec<u64> = Vec::new();
    for m in broken {
        if minimal.iter().all(|&k| k & m != k) {
            minimal.push(m);
        }
    }

    let mut by_size = vec![0u64; e + 1];
    'subset: for mask in 0u64..(1u64 << e) {
        for &bc in &minimal {
            if mask & bc == bc {
                continue 'subset;
            }
        }
        by_size[mask.count_ones() as usize] += 1;
    }
    // A subset with no broken circuit is acyclic, so its size is below v.
    debug_assert!(by_size.iter().skip(v).all(|&c| c == 0));
    let mags = (1..=v)
        .map(|r| BigUint::from(*by_size.get(v - r).unwrap_or(&0)))
        .collect();
    Ok(ChromaticPolynomial::from_magnitudes(mags))
}

/// One coefficient's check that a graph's magnitudes are the sum of its two
/// minors' magnitudes at an edge.
#[derive(Clone, Debug)]
pub struct AdditivityRow {
    pub r: usize,
    pub whole: BigUint,
    pub deleted: BigUint,
    pub contracted: BigUint,
    pub holds: bool,
}

/// Per-coefficient comparison of `a_r` against `a'_r + a''_r`.
#[derive(Clone, Debug)]
pub struct AdditivityReport {
    pub edge_id: EdgeId,
    pub endpoints: (usize, usize),
    pub rows: Vec<AdditivityRow>,
    pub all_hold: bool,
}

/// Verifies magnitude additivity at one edge: each coefficient of the graph
/// equals the matching coefficient of the deletion plus that of the
/// contraction (the contraction contributing nothing at degree `v`).
pub fn verify_additivity(g: &Graph, edge: EdgeId) -> Result<AdditivityReport> {
    if !g.is_simple() {
        return Err(Error::InvalidParams("additivity check needs a simplified graph".into()));
    }
    let e = *g.edge(edge)?;
    let v = g.vertex_count();
    let whole = chromatic_polynomial(g);
    let deleted = chromatic_polynomial(&g.delete_edge(edge)?);
    let contracted = chromatic_polynomial(&g.contract_edge(edge)?);
    let mut rows = Vec::with_capacity(v);
    for r in 1..=v {
        let a = whole.magnitude(r).clone();
        let d = deleted.magnitude(r).clone();
        let c = if r <= v - 1 {
            contracted.magnitude(r).clone()
        } else {
            BigUint::zero()
        };
        let holds = a == &d + &c;
        rows.push(AdditivityRow { r, whole: a, deleted: d, contracted: c, holds });
    }
    let all_hold = rows.iter().all(|row| row.holds);
    Ok(AdditivityReport { edge_id: edge, endpoints: (e.u, e.v), rows, all_hold })
}

/// Shape observations about one polynomial's magnitude sequence.
#[derive(Clone, Debug)]
pub struct MagnitudeChainReport {
    pub edge_count: u64,
    /// Whether `a_v <= a_{v-1} <= ... <= a_1` holds.
    pub chain_holds: bool,
    /// The greatest `r` with `a_r > a_{r-1}`, when the chain fails.
    pub first_break: Option<usize>,
    pub alternating_sum: BigInt,
    pub alternating_sum_is_zero: bool,
    /// All `r` attaining the maximal magnitude.
    pub peak_indices: Vec<usize>,
}

/// Reports whether the magnitudes grow monotonically toward `a_1` and
/// whether the alternating sum `P(1)` vanishes.
pub fn magnitude_chain_report(p: &ChromaticPolynomial, edge_count: u64) -> MagnitudeChainReport {
    let v = p.vertex_count();
    let mut first_break = None;
    for r in (2..=v).rev() {
        if p.magnitude(r) > p.magnitude(r - 1) {
            first_break = Some(r);
            break;
        }
    }
    let alternating_sum = p.alternating_sum();
    let max = p.magnitudes().iter().max().cloned().expect("nonempty");
    let peak_indices = (1..=v).filter(|&r| *p.magnitude(r) == max).collect();
    MagnitudeChainReport {
        edge_count,
        chain_holds: first_break.is_none(),
        first_break,
        alternating_sum_is_zero: alternating_sum.is_zero(),
        alternating_sum,
        peak_indices,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use crate::generate;

    fn mags(p: &ChromaticPolynomial) -> Vec<u64> {
        p.magnitudes().iter().map(|m| m.to_u64().unwrap()).collect()
    }

    #[test]
    fn standard_polynomials() {
        let cases: Vec<(Graph, Vec<u64>)> = vec![
            (generate::path(2).unwrap(), vec![1, 1]),
            (generate::path(4).unwrap(), vec![1, 3, 3, 1]),
            (generate::complete(3).unwrap(), vec![2, 3, 1]),
            (generate::complete(4).unwrap(), vec![6, 11, 6, 1]),
            (generate::complete(5).unwrap(), vec![24, 50, 35, 10, 1]),
            (generate::complete(6).unwrap(), vec![120, 274, 225, 85, 15, 1]),
            (generate::cycle(4).unwrap(), vec![3, 6, 4, 1]),
            (generate::cycle(5).unwrap(), vec![4, 10, 10, 5, 1]),
            (generate::complete_bipartite(3, 3).unwrap(), vec![31, 78, 75, 36, 9, 1]),
        ];
        for (g, expected) in cases {
            assert_eq!(mags(&chromatic_polynomial(&g)), expected);
        }
    }

    #[test]
    fn petersen_polynomial_spot_values() {
        let p = chromatic_polynomial(&generate::petersen());
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.magnitude(10).to_u64(), Some(1));
        assert_eq!(p.magnitude(9).to_u64(), Some(15));
        assert_eq!(p.magnitude(7).to_u64(), Some(455)); // binom(15, 3)
        assert_eq!(p.magnitude(6).to_u64(), Some(1353)); // binom(15, 4) - 12
        assert_eq!(p.evaluate(3), BigInt::from(120));
        assert_eq!(p.evaluate(2), BigInt::from(0));
        assert_eq!(p.alternating_sum(), BigInt::from(0));
    }

    #[test]
    fn forests_and_single_vertices() {
        assert_eq!(mags(&chromatic_polynomial(&generate::path(1).unwrap())), vec![1]);
        assert_eq!(mags(&chromatic_polynomial(&generate::path(5).unwrap())), vec![1, 4, 6, 4, 1]);
        // Forest with two components: star plus an isolated edge. The
        // polynomial is q^2 (q - 1)^3, so the magnitude ladder is C(3, r - 2).
        let g = Graph::simple(5, &[(0, 1), (0, 2), (3, 4)]).unwrap();
        assert_eq!(mags(&chromatic_polynomial(&g)), vec![0, 1, 3, 3, 1]);
    }

    #[test]
    fn disconnected_graphs_multiply() {
        // Two disjoint triangles: the square of q^3 - 3q^2 + 2q.
        let g = Graph::simple(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(mags(&chromatic_polynomial(&g)), vec![0, 4, 12, 13, 6, 1]);
    }

    #[test]
    fn memoized_and_plain_agree() {
        for g in [generate::complete(5).unwrap(), generate::petersen()] {
            let plain = Solver::new().polynomial(&g);
            let memoized = Solver::with_memo().polynomial(&g);
            assert_eq!(plain, memoized);
        }
    }

    #[test]
    fn canonical_rows_identify_isomorphic_graphs() {
        // The same 4-circuit under two labelings.
        let a = Graph::simple(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = Graph::simple(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_rows(&a), canonical_rows(&b));
        // Circuit vs path of equal size differ.
        let p = generate::path(4).unwrap();
        assert_ne!(canonical_rows(&a), canonical_rows(&p));
    }

    #[test]
    fn brute_force_matches_evaluation() {
        for g in [
            generate::complete(4).unwrap(),
            generate::cycle(5).unwrap(),
            generate::complete_bipartite(2, 3).unwrap(),
        ] {
            let p = chromatic_polynomial(&g);
            for q in 0..=6u64 {
                assert_eq!(
                    BigInt::from(brute_force_colorings(&g, q).unwrap()),
                    p.evaluate(q),
                    "mismatch at q = {q}"
                );
            }
        }
    }

    #[test]
    fn brute_force_refuses_oversized_work() {
        let g = generate::petersen();
        let err = brute_force_colorings(&g, 10).unwrap_err();
        match err {
            Error::BudgetExceeded { required, budget } => {
                assert!(required > budget);
            }
            other => panic!("unexpected error {other:?}"),
        }
        // Small q on the same graph is fine.
        assert_eq!(brute_force_colorings(&g, 3).unwrap(), BigUint::from(120u32));
    }

    #[test]
    fn broken_circuits_match_deletion_contraction() {
        let graphs = [
            generate::complete(4).unwrap(),
            generate::complete(5).unwrap(),
            generate::cycle(6).unwrap(),
            generate::complete_bipartite(2, 3).unwrap(),
        ];
        for g in graphs {
            let expected = chromatic_polynomial(&g);
            let asc = default_edge_order(&g);
            let desc: Vec<EdgeId> = asc.iter().rev().copied().collect();
            // An interleaved order, distinct from both.
            let mut mixed = asc.clone();
            mixed.rotate_left(asc.len() / 2);
            for order in [asc, desc, mixed] {
                assert_eq!(
                    coefficients_via_broken_circuits(&g, &order).unwrap(),
                    expected
                );
            }
        }
    }

    #[test]
    fn broken_circuits_validate_input() {
        let g = generate::complete(4).unwrap();
        let order = default_edge_order(&g);
        assert!(coefficients_via_broken_circuits(&g, &order[1..]).is_err());
        let mut doubled = order.clone();
        doubled[0] = doubled[1];
        assert!(coefficients_via_broken_circuits(&g, &doubled).is_err());
        let big = generate::complete(8).unwrap(); // 28 edges
        assert!(matches!(
            coefficients_via_broken_circuits(&big, &default_edge_order(&big)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn additivity_holds_at_every_edge_of_k4() {
        let g = generate::complete(4).unwrap();
        for e in g.edges() {
            let report = verify_additivity(&g, e.id).unwrap();
            assert!(report.all_hold, "additivity failed at edge {:?}", report.endpoints);
            assert_eq!(report.rows.len(), 4);
        }
    }

    #[test]
    fn chain_report_shapes() {
        let t2 = magnitude_chain_report(&chromatic_polynomial(&generate::path(2).unwrap()), 1);
        assert!(t2.chain_holds);
        assert!(t2.alternating_sum_is_zero);
        let k4 = magnitude_chain_report(&chromatic_polynomial(&generate::complete(4).unwrap()), 6);
        assert!(!k4.chain_holds);
        assert_eq!(k4.first_break, Some(2)); // a_2 = 11 > a_1 = 6
        assert!(k4.alternating_sum_is_zero);
        assert_eq!(k4.peak_indices, vec![2]);
    }
}
