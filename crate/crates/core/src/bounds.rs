//! Upper bounds on chromatic-coefficient magnitudes.
//!
//! For a graph with `e` edges, `v` vertices, girth `g`, and `kg` circuits of
//! girth length, the coefficient magnitudes in the leading band
//! (`r >= v - g + 1`) have a closed form; below that band there is a
//! baseline upper bound using only those global counts, and a refined bound
//! that additionally subtracts corrections computed from one edge's local
//! circuit counts (`lg` girth circuits through it, and for triangle girth
//! the fan-avoiding count `l*` one length up). The refined bound never
//! exceeds the baseline: every correction term is a sum of binomials taken
//! nonnegative by convention.
//!
//! All binomials go through [`crate::binomial::binom`], whose `b = 0` rule
//! precedes the range checks; that precedence is load-bearing for the
//! baseline bound's soundness at `r = v - g + 2` and is deliberately kept
//! even where it makes the two refined forms disagree (they are compared,
//! not assumed equal).

use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::binomial::binom;
use crate::chromatic::chromatic_polynomial;
use crate::cycles::CycleCensus;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Inputs of one bound evaluation, all validated together.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundParams {
    /// Edge count `e`.
    pub edges: i64,
    /// Vertex count `v`.
    pub vertices: i64,
    /// Girth `g` (finite, `>= 3`).
    pub girth: i64,
    /// Number of girth-length circuits `kg >= 1`.
    pub girth_cycles: i64,
    /// Girth-length circuits through the chosen edge, `0 <= lg <= kg`.
    pub through_edge: i64,
    /// Fan-avoiding circuits of length `g + 1` through the chosen edge.
    pub star_next: i64,
    /// Coefficient index `r`, `1 <= r <= v`.
    pub index: i64,
}

impl BoundParams {
    /// Validates the parameter ranges stated on each field.
    pub fn validated(
        edges: i64,
        vertices: i64,
        girth: i64,
        girth_cycles: i64,
        through_edge: i64,
        star_next: i64,
        index: i64,
    ) -> Result<BoundParams> {
        let fail = |reason: String| Err(Error::InvalidParams(reason));
        if !(3..=vertices).contains(&girth) {
            return fail(format!("girth {girth} outside 3..={vertices}"));
        }
        if edges < girth {
            return fail(format!("{edges} edges cannot carry a girth-{girth} circuit"));
        }
        if girth_cycles < 1 {
            return fail(format!("need at least one girth circuit, got {girth_cycles}"));
        }
        if !(0..=girth_cycles).contains(&through_edge) {
            return fail(format!(
                "through-edge count {through_edge} outside 0..={girth_cycles}"
            ));
        }
        if star_next < 0 {
            return fail(format!("fan-avoiding count {star_next} negative"));
        }
        if !(1..=vertices).contains(&index) {
            return fail(format!("coefficient index {index} outside 1..={vertices}"));
        }
        Ok(BoundParams { edges, vertices, girth, girth_cycles, through_edge, star_next, index })
    }
}

/// Baseline upper bound on `a_r` from the global girth-circuit count.
pub fn baseline_bound(p: &BoundParams) -> BigInt {
    let (e, v, g, kg, r) = (p.edges, p.vertices, p.girth, p.girth_cycles, p.index);
    binom(e, v - r) - binom(e - g + 2, v - r - g + 2) + binom(e - kg - g + 2, v - r - g + 2)
}

/// Correction from girth circuits missing the chosen edge: a double sum of
/// binomials in column `v - r - g`, empty when `lg` is 0, 1, or `kg`.
pub fn correction_sum(p: &BoundParams) -> BigInt {
    let (e, v, g, kg, lg, r) = (
        p.edges,
        p.vertices,
        p.girth,
        p.girth_cycles,
        p.through_edge,
        p.index,
    );
    let mut sum = BigInt::zero();
    for n in 1..=(kg - lg) {
        for m in 1..=(lg - 1) {
            sum += binom(e - g + 1 - n - m, v - r - g);
        }
    }
    sum
}

/// Extra correction available only at triangle girth, fed by the circuits
/// one length up that survive the edge's fan. Zero when `g != 3`.
pub fn triangle_correction(p: &BoundParams) -> BigInt {
    if p.girth != 3 {
        return BigInt::zero();
    }
    let (e, v, g, kg, lg, star, r) = (
        p.edges,
        p.vertices,
        p.girth,
        p.girth_cycles,
        p.through_edge,
        p.star_next,
        p.index,
    );
    let mut sum = BigInt::zero();
    for n in 1..=(kg + star - lg) {
        sum += binom(e - lg - g + 1 - n, v - r - g);
    }
    sum
}

/// Refined upper bound: the baseline minus both corrections.
pub fn refined_bound(p: &BoundParams) -> BigInt {
    baseline_bound(p) - correction_sum(p) - triangle_correction(p)
}

/// Telescoped closed form of the refined bound. Derived from
/// [`refined_bound`] by collapsing the correction sums, which is exact only
/// while every collapsed binomial stays inside the telescoping domain; the
/// two forms are therefore compared, never assumed equal.
pub fn refined_bound_alt(p: &BoundParams) -> BigInt {
    let (e, v, g, kg, lg, star, r) = (
        p.edges,
        p.vertices,
        p.girth,
        p.girth_cycles,
        p.through_edge,
        p.star_next,
        p.index,
    );
    let c2 = v - r - g + 2;
    let c1 = v - r - g + 1;
    let mut value = binom(e, v - r) - binom(e - g + 2, c2) + binom(e - lg - g + 2, c2)
        - binom(e - g + 1, c2)
        + binom(e - kg + lg - g + 1, c2);
    if g == 3 {
        value -= binom(e - lg - g + 1, c1) - binom(e - kg - star - g + 1, c1);
    }
    value
}

/// Exact magnitude in the leading band: `binom(e, v - r)` above
/// `r = v - g + 1`, and `binom(e, g - 1) - kg` exactly there. `None` below
/// the band or outside `1..=v`.
pub fn leading_coefficient(
    edges: i64,
    vertices: i64,
    girth: i64,
    girth_cycles: i64,
    index: i64,
) -> Option<BigInt> {
    if index < 1 || index > vertices {
        return None;
    }
    let band_start = vertices - girth + 1;
    if index > band_start {
        Some(binom(edges, vertices - index))
    } else if index == band_start {
        Some(binom(edges, girth - 1) - BigInt::from(girth_cycles))
    } else {
        None
    }
}

/// How the correction edge is chosen across coefficient indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SelectionMode {
    /// One edge chosen at `r = 1` and reused for every row.
    Fixed,
    /// A fresh choice at every `r`.
    PerIndex,
}

impl FromStr for SelectionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<SelectionMode> {
        match s {
            "fixed" => Ok(SelectionMode::Fixed),
            "per-r" => Ok(SelectionMode::PerIndex),
            other => Err(Error::InvalidParams(format!(
                "unknown selection mode `{other}` (expected `fixed` or `per-r`)"
            ))),
        }
    }
}

impl std::fmt::Display for SelectionMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SelectionMode::Fixed => "fixed",
            SelectionMode::PerIndex => "per-r",
        })
    }
}

/// The edge feeding the refined bound's corrections, with its local counts.
#[derive(Clone, Debug)]
pub struct EdgeChoice {
    pub edge_id: EdgeId,
    pub endpoints: (usize, usize),
    /// Girth circuits through the edge.
    pub through_edge: u64,
    /// Fan-avoiding circuits of length girth + 1 through the edge.
    pub star_next: u64,
    /// Total correction the edge buys at the selection index.
    pub correction: BigInt,
}

/// Picks the edge maximizing the total correction at `index` among edges on
/// at least one girth circuit; ties break toward the smallest edge id.
pub fn select_edge(g: &Graph, census: &CycleCensus, index: usize) -> Result<EdgeChoice> {
    let girth = census.girth().finite().ok_or(Error::Acyclic)?;
    let kg = census.count(girth);
    let mut best: Option<EdgeChoice> = None;
    for e in g.edges() {
        let lg = census.through(e.id, girth);
        if lg == 0 {
            continue;
        }
        let star = census.through_star(e.id, girth + 1);
        let params = BoundParams::validated(
            g.edge_count() as i64,
            g.vertex_count() as i64,
            girth as i64,
            kg as i64,
            lg as i64,
            star as i64,
            index as i64,
        )?;
        let correction = correction_sum(&params) + triangle_correction(&params);
        if best.as_ref().map_or(true, |b| correction > b.correction) {
            best = Some(EdgeChoice {
                edge_id: e.id,
                endpoints: (e.u, e.v),
                through_edge: lg,
                star_next: star,
                correction,
            });
        }
    }
    best.ok_or(Error::Acyclic)
}

/// Builds an [`EdgeChoice`] for a caller-fixed edge, whatever its counts.
fn choice_for_edge(
    g: &Graph,
    census: &CycleCensus,
    girth: usize,
    kg: u64,
    id: EdgeId,
    index: usize,
) -> Result<EdgeChoice> {
    let e = *g.edge(id)?;
    let lg = census.through(id, girth);
    let star = census.through_star(id, girth + 1);
    let params = BoundParams::validated(
        g.edge_count() as i64,
        g.vertex_count() as i64,
        girth as i64,
        kg as i64,
        lg as i64,
        star as i64,
        index as i64,
    )?;
    Ok(EdgeChoice {
        edge_id: id,
        endpoints: (e.u, e.v),
        through_edge: lg,
        star_next: star,
        correction: correction_sum(&params) + triangle_correction(&params),
    })
}

/// One coefficient index compared against both bounds.
#[derive(Clone, Debug)]
pub struct BoundRow {
    pub index: usize,
    pub exact: BigUint,
    pub baseline: BigInt,
    pub refined: BigInt,
    pub refined_alt: BigInt,
    pub edge: EdgeChoice,
    pub bound_holds: bool,
    pub dominates_baseline: bool,
    pub in_leading_band: bool,
    /// Within the leading band: whether the refined bound equals the exact
    /// magnitude. `None` below the band.
    pub tight_at_leading: Option<bool>,
    pub forms_agree: bool,
}

/// All coefficient indices of one graph compared against both bounds.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub graph_name: String,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub girth: usize,
    pub girth_cycles: u64,
    pub mode: SelectionMode,
    pub edge_override: Option<(usize, usize)>,
    pub rows: Vec<BoundRow>,
}

/// Computes exact magnitudes and both bounds for every `r`, choosing the
/// correction edge per `mode` unless `edge_override` pins one.
pub fn bound_report(
    g: &Graph,
    mode: SelectionMode,
    edge_override: Option<EdgeId>,
) -> Result<BoundReport> {
    if !g.is_simple() {
        return Err(Error::InvalidParams("bound reports need a simplified graph".into()));
    }
    let census = CycleCensus::compute(g);
    let girth = census.girth().finite().ok_or(Error::Acyclic)?;
    let kg = census.count(girth);
    let exact = chromatic_polynomial(g);
    let v = g.vertex_count();
    let e = g.edge_count();
    // An override pins the edge for every row; otherwise fixed mode selects
    // once at r = 1 and per-index mode reselects at each row. Either way the
    // pinned edge's corrections are re-evaluated at each row's index.
    let pinned: Option<EdgeId> = match edge_override {
        Some(id) => Some(id),
        None => match mode {
            SelectionMode::Fixed => Some(select_edge(g, &census, 1)?.edge_id),
            SelectionMode::PerIndex => None,
        },
    };
    let mut rows = Vec::with_capacity(v);
    for r in 1..=v {
        let choice = match pinned {
            Some(id) => choice_for_edge(g, &census, girth, kg, id, r)?,
            None => select_edge(g, &census, r)?,
        };
        let params = BoundParams::validated(
            e as i64,
            v as i64,
            girth as i64,
            kg as i64,
            choice.through_edge as i64,
            choice.star_next as i64,
            r as i64,
        )?;
        let baseline = baseline_bound(&params);
        let refined = refined_bound(&params);
        let refined_alt = refined_bound_alt(&params);
        let exact_r = exact.magnitude(r).clone();
        let exact_signed = BigInt::from(exact_r.clone());
        let in_leading_band = r + girth >= v + 1;
        rows.push(BoundRow {
            index: r,
            bound_holds: refined >= exact_signed,
            dominates_baseline: refined <= baseline,
            in_leading_band,
            tight_at_leading: in_leading_band.then(|| refined == exact_signed),
            forms_agree: refined == refined_alt,
            exact: exact_r,
            baseline,
            refined,
            refined_alt,
            edge: choice,
        });
    }
    Ok(BoundReport {
        graph_name: String::new(),
        vertex_count: v,
        edge_count: e,
        girth,
        girth_cycles: kg,
        mode,
        edge_override: match edge_override {
            Some(id) => {
                let edge = g.edge(id)?;
                Some((edge.u, edge.v))
            }
            None => None,
        },
        rows,
    })
}

impl BoundReport {
    /// Same report carrying a display name for the graph.
    pub fn with_name(mut self, name: &str) -> BoundReport {
        self.graph_name = name.to_string();
        self
    }

    /// JSON value with sorted keys; all magnitudes as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "graph": {
                "name": self.graph_name,
                "vertices": self.vertex_count,
                "edges": self.edge_count,
                "girth": self.girth,
                "girth_cycles": self.girth_cycles,
            },
            "mode": self.mode.to_string(),
            "edge_override": self.edge_override.map(|(u, v)| vec![u, v]),
            "rows": self.rows.iter().map(|row| serde_json::json!({
                "index": row.index,
                "exact": row.exact.to_string(),
                "baseline": row.baseline.to_string(),
                "refined": row.refined.to_string(),
                "refined_alt": row.refined_alt.to_string(),
                "edge": {
                    "endpoints": vec![row.edge.endpoints.0, row.edge.endpoints.1],
                    "through_edge": row.edge.through_edge,
                    "star_next": row.edge.star_next,
                    "correction": row.edge.correction.to_string(),
                },
                "flags": {
                    "bound_holds": row.bound_holds,
                    "dominates_baseline": row.dominates_baseline,
                    "in_leading_band": row.in_leading_band,
                    "tight_at_leading": row.tight_at_leading,
                    "forms_agree": row.forms_agree,
                },
            })).collect::<Vec<_>>(),
        })
    }

    /// Pretty JSON with a trailing newline, byte-stable across runs.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("valid json");
        s.push('\n');
        s
    }

    /// CSV with a header row; booleans as `true`/`false`, absent band
    /// tightness empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "index,exact,baseline,refined,refined_alt,edge,through_edge,star_next,\
             correction,bound_holds,dominates_baseline,in_leading_band,tight_at_leading,\
             forms_agree\n",
        );
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}-{},{},{},{},{},{},{},{},{}\n",
                row.index,
                row.exact,
                row.baseline,
                row.refined,
                row.refined_alt,
                row.edge.endpoints.0,
                row.edge.endpoints.1,
                row.edge.through_edge,
                row.edge.star_next,
                row.edge.correction,
                row.bound_holds,
                row.dominates_baseline,
                row.in_leading_band,
                row.tight_at_leading.map_or(String::new(), |b| b.to_string()),
                row.forms_agree,
            ));
        }
        out
    }
}
