//! Graph family generators and the `family:key=value,...` spec parser.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Generator("complete graph needs n >= 1".into()));
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            pairs.push((u, v));
        }
    }
    Graph::simple(n, &pairs)
}

/// Circuit on `n >= 3` vertices.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Generator("cycle needs n >= 3".into()));
    }
    let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::simple(n, &pairs)
}

/// Path on `n >= 1` vertices (so `n - 1` edges).
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Generator("path needs n >= 1".into()));
    }
    let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::simple(n, &pairs)
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`; both `>= 1`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::Generator("complete bipartite graph needs a, b >= 1".into()));
    }
    let mut pairs = Vec::new();
    for u in 0..a {
        for w in 0..b {
            pairs.push((u, a + w));
        }
    }
    Graph::simple(a + b, &pairs)
}

/// The Petersen graph: outer 5-circuit `0..5`, inner pentagram `5..10`,
/// spokes `i`–`i+5`.
pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5)); // outer circuit
    }
    for i in 0..5 {
        pairs.push((i, i + 5)); // spokes
    }
    for i in 0..5 {
        pairs.push((5 + i, 5 + (i + 2) % 5)); // inner pentagram
    }
    Graph::simple(10, &pairs).expect("fixed construction is valid")
}

/// Uniform connected G(n, m): `m` distinct edges sampled uniformly among the
/// `C(n, 2)` pairs, resampled until connected. Deterministic in `seed`.
pub fn random_connected_gnm(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected_gnm_with(&mut rng, n, m)
}

/// [`random_connected_gnm`] drawing from a caller-provided stream, so a
/// corpus of many graphs can share one seed.
pub fn random_connected_gnm_with(rng: &mut impl Rng, n: usize, m: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Generator("random graph needs n >= 2".into()));
    }
    let max_edges = n * (n - 1) / 2;
    if m < n - 1 || m > max_edges {
        return Err(Error::Generator(format!(
            "edge count {m} outside the connected range [{}, {max_edges}] for n = {n}",
            n - 1
        )));
    }
    // All vertex pairs in a fixed order; sampling picks index sets.
    let mut all_pairs = Vec::with_capacity(max_edges);
    for u in 0..n {
        for v in (u + 1)..n {
            all_pairs.push((u, v));
        }
    }
    const MAX_ATTEMPTS: usize = 10_000;
    for _ in 0..MAX_ATTEMPTS {
        let mut picked = rand::seq::index::sample(rng, max_edges, m).into_vec();
        picked.sort_unstable();
        let pairs: Vec<_> = picked.iter().map(|&i| all_pairs[i]).collect();
        let g = Graph::simple(n, &pairs)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::SamplingExhausted { n, m, attempts: MAX_ATTEMPTS })
}

/// Parses a generator spec like `complete:n=5`, `cycle:n=6`,
/// `bipartite:a=3,b=3`, `petersen`, or `gnm:n=7,m=12,seed=3`.
///
/// `fallback_seed` supplies `gnm`'s seed when the spec omits it; an inline
/// `seed=` wins over the fallback.
pub fn from_spec(spec: &str, fallback_seed: Option<u64>) -> Result<Graph> {
    let (family, args) = match spec.split_once(':') {
        Some((f, a)) => (f.trim(), a.trim()),
        None => (spec.trim(), ""),
    };
    let mut kv = std::collections::BTreeMap::new();
    if !args.is_empty() {
        for part in args.split(',') {
            let (k, v) = part.split_once('=').ok_or_else(|| {
                Error::Generator(format!("expected key=value, got `{part}`"))
            })?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    let want = |key: &str| -> Result<usize> {
        kv.get(key)
            .ok_or_else(|| Error::Generator(format!("{family} needs `{key}=`")))?
            .parse::<usize>()
            .map_err(|_| Error::Generator(format!("`{key}` must be a nonnegative integer")))
    };
    let reject_extras = |allowed: &[&str]| -> Result<()> {
        for key in kv.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(Error::Generator(format!(
                    "{family} does not take `{key}=`"
                )));
            }
        }
        Ok(())
    };
    match family {
        "complete" => {
            reject_extras(&["n"])?;
            complete(want("n")?)
        }
        "cycle" => {
            reject_extras(&["n"])?;
            cycle(want("n")?)
        }
        "path" => {
            reject_extras(&["n"])?;
            path(want("n")?)
        }
        "bipartite" => {
            reject_extras(&["a", "b"])?;
            complete_bipartite(want("a")?, want("b")?)
        }
        "petersen" => {
            reject_extras(&[])?;
            Ok(petersen())
        }
        "gnm" => {
            reject_extras(&["n", "m", "seed"])?;
            let seed = match kv.get("seed") {
                Some(s) => s
                    .parse::<u64>()
                    .map_err(|_| Error::Generator("`seed` must be a nonnegative integer".into()))?,
                None => fallback_seed.ok_or_else(|| {
                    Error::Generator("gnm needs `seed=` (or a --seed flag)".into())
                })?,
            };
            random_connected_gnm(want("n")?, want("m")?, seed)
        }
        other => Err(Error::Generator(format!("unknown family `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_sizes() {
        let g = complete(5).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 10);
        assert!(complete(1).unwrap().edge_count() == 0);
        assert!(complete(0).is_err());
    }

    #[test]
    fn cycle_and_path_sizes() {
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
        assert!(cycle(2).is_err());
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(path(6).unwrap().edge_count(), 5);
        assert!(path(0).is_err());
    }

    #[test]
    fn bipartite_sizes() {
        let g = complete_bipartite(2, 3).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 6);
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|u| g.degree(u) == 3));
        assert!(g.is_connected());
        assert!(g.is_simple());
    }

    #[test]
    fn gnm_is_deterministic_connected_and_bounded() {
        let a = random_connected_gnm(6, 7, 42).unwrap();
        let b = random_connected_gnm(6, 7, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.is_connected());
        assert_eq!(a.edge_count(), 7);
        let c = random_connected_gnm(6, 7, 43).unwrap();
        // Different seeds almost surely differ; these two do.
        assert_ne!(a, c);
        assert!(random_connected_gnm(6, 4, 1).is_err()); // below tree count
        assert!(random_connected_gnm(6, 16, 1).is_err()); // above complete
    }

    #[test]
    fn spec_parser_handles_families_and_errors() {
        assert_eq!(from_spec("complete:n=4", None).unwrap().edge_count(), 6);
        assert_eq!(from_spec("petersen", None).unwrap().vertex_count(), 10);
        assert_eq!(from_spec("bipartite:a=3,b=3", None).unwrap().edge_count(), 9);
        let inline = from_spec("gnm:n=5,m=6,seed=9", Some(1)).unwrap();
        let direct = random_connected_gnm(5, 6, 9).unwrap();
        assert_eq!(inline, direct); // inline seed beats the fallback
        assert_eq!(from_spec("gnm:n=5,m=6", Some(9)).unwrap(), direct);
        assert!(from_spec("gnm:n=5,m=6", None).is_err());
        assert!(from_spec("torus:n=3", None).is_err());
        assert!(from_spec("cycle:m=3", None).is_err());
        assert!(from_spec("cycle:n=3,m=4", None).is_err());
        assert!(from_spec("cycle:n", None).is_err());
    }
}
