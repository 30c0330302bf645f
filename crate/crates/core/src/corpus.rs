//! The verification corpus: a fixed set of named graphs plus a seeded block
//! of random connected graphs, expanded deterministically.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::generate;
use crate::graph::Graph;

/// Work limits for the expensive cross-checks.
#[derive(Clone, Copy, Debug)]
pub struct Budgets {
    /// Cap on `v * q^v` for brute-force coloring counts.
    pub coloring_steps: u128,
    /// Cap on edges for `2^e` subset enumeration.
    pub subset_edges: usize,
}

impl Default for Budgets {
    fn default() -> Budgets {
        Budgets {
            coloring_steps: crate::chromatic::DEFAULT_COLORING_BUDGET,
            subset_edges: crate::chromatic::DEFAULT_SUBSET_EDGE_BUDGET,
        }
    }
}

/// Shape of the random block: connected graphs with `n` vertices drawn from
/// `n_min..=n_max` and `m` edges drawn from the connected range (optionally
/// narrowed), all from one seeded stream.
#[derive(Clone, Copy, Debug)]
pub struct RandomSpec {
    pub n_min: usize,
    pub n_max: usize,
    /// Lower edge bound; `None` means spanning-tree count `n - 1`.
    pub m_min: Option<usize>,
    /// Upper edge bound; `None` means the complete count `n (n-1) / 2`.
    pub m_max: Option<usize>,
    pub count: usize,
    pub seed: u64,
}

impl Default for RandomSpec {
    fn default() -> RandomSpec {
        RandomSpec { n_min: 4, n_max: 8, m_min: None, m_max: None, count: 100, seed: 42 }
    }
}

impl RandomSpec {
    /// Parses `n=4..8,m=5..12,count=100,seed=42`; single values allowed for
    /// the ranges, each key optional with the default filling in.
    pub fn parse(text: &str) -> Result<RandomSpec> {
        let mut spec = RandomSpec::default();
        let bad = |part: &str| Error::InvalidParams(format!("bad random spec part `{part}`"));
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part.split_once('=').ok_or_else(|| bad(part))?;
            let range = |v: &str| -> Result<(usize, usize)> {
                match v.split_once("..") {
                    Some((lo, hi)) => Ok((
                        lo.parse().map_err(|_| bad(part))?,
                        hi.parse().map_err(|_| bad(part))?,
                    )),
                    None => {
                        let x = v.parse().map_err(|_| bad(part))?;
                        Ok((x, x))
                    }
                }
            };
            match key.trim() {
                "n" => {
                    let (lo, hi) = range(value)?;
                    spec.n_min = lo;
                    spec.n_max = hi;
                }
                "m" => {
                    let (lo, hi) = range(value)?;
                    spec.m_min = Some(lo);
                    spec.m_max = Some(hi);
                }
                "count" => spec.count = value.parse().map_err(|_| bad(part))?,
                "seed" => spec.seed = value.parse().map_err(|_| bad(part))?,
                _ => return Err(bad(part)),
            }
        }
        if spec.n_min < 2 || spec.n_min > spec.n_max {
            return Err(Error::InvalidParams(format!(
                "vertex range {}..{} is empty or too small",
                spec.n_min, spec.n_max
            )));
        }
        Ok(spec)
    }
}

/// What to expand: the named families, an optional random block, and the
/// budgets the consuming checks should respect.
#[derive(Clone, Debug)]
pub struct CorpusSpec {
    pub named: bool,
    pub random: Option<RandomSpec>,
    pub budgets: Budgets,
}

impl CorpusSpec {
    /// Named families plus the default 100-graph random block.
    pub fn default_corpus() -> CorpusSpec {
        CorpusSpec { named: true, random: Some(RandomSpec::default()), budgets: Budgets::default() }
    }

    /// Named families only — quick, fully deterministic content.
    pub fn named_only() -> CorpusSpec {
        CorpusSpec { named: true, random: None, budgets: Budgets::default() }
    }
}

/// One corpus entry: a stable id and the graph.
#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub id: String,
    pub graph: Graph,
}

/// Expands a spec into its graph list, in a fixed order: the named families
/// first, then the random block in draw order.
pub fn expand(spec: &CorpusSpec) -> Result<Vec<CorpusGraph>> {
    let mut out = Vec::new();
    let mut push = |id: String, graph: Graph| out.push(CorpusGraph { id, graph });
    if spec.named {
        push("t2".into(), generate::path(2)?);
        for n in 3..=8 {
            push(format!("path_{n}"), generate::path(n)?);
        }
        for n in 3..=8 {
            push(format!("cycle_{n}"), generate::cycle(n)?);
        }
        for n in 3..=6 {
            push(format!("complete_{n}"), generate::complete(n)?);
        }
        push("bipartite_2_3".into(), generate::complete_bipartite(2, 3)?);
        push("bipartite_3_3".into(), generate::complete_bipartite(3, 3)?);
        push("petersen".into(), generate::petersen());
    }
    if let Some(random) = &spec.random {
        let mut rng = ChaCha8Rng::seed_from_u64(random.seed);
        for i in 0..random.count {
            let n = rng.gen_range(random.n_min..=random.n_max);
            let tree = n - 1;
            let full = n * (n - 1) / 2;
            let lo = random.m_min.unwrap_or(tree).max(tree);
            let hi = random.m_max.unwrap_or(full).min(full);
            if lo > hi {
                return Err(Error::InvalidParams(format!(
                    "edge range {lo}..{hi} empty for n = {n}"
                )));
            }
            let m = rng.gen_range(lo..=hi);
            let graph = generate::random_connected_gnm_with(&mut rng, n, m)?;
            push(format!("gnm_{i:03}_n{n}_m{m}"), graph);
        }
    }
    Ok(out)
}
