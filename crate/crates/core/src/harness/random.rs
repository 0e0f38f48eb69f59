use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{build_graph, Graph};

/// Attempts before a filter is declared unsatisfiable.
pub const MAX_RETRIES: usize = 1000;

/// Erdős–Rényi sampling parameters with rejection filters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomGraphSpec {
    pub min_n: usize,
    pub max_n: usize,
    pub edge_probability: f64,
    pub seed: u64,
    pub connected: bool,
    pub isolate_free: bool,
}

impl RandomGraphSpec {
    pub fn new(min_n: usize, max_n: usize, seed: u64) -> Self {
        Self {
            min_n,
            max_n,
            edge_probability: 0.5,
            seed,
            connected: false,
            isolate_free: false,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn isolate_free(mut self) -> Self {
        self.isolate_free = true;
        self
    }

    pub fn probability(mut self, p: f64) -> Self {
        self.edge_probability = p;
        self
    }

    fn accepts(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected()) && (!self.isolate_free || !g.has_isolated_vertex())
    }
}

/// One graph drawn from `spec`, reproducible from its seed alone.
pub fn random_graph(spec: &RandomGraphSpec) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    sample(spec, &mut rng)
}

/// Draws from an existing stream; used to build whole instance sequences.
pub fn sample(spec: &RandomGraphSpec, rng: &mut ChaCha8Rng) -> Result<Graph> {
    for _ in 0..MAX_RETRIES {
        let n = rng.gen_range(spec.min_n..=spec.max_n.max(spec.min_n));
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(spec.edge_probability.clamp(0.0, 1.0)) {
                    edges.push((i, j));
                }
            }
        }
        let g = build_graph(n, &edges, None)?;
        if spec.accepts(&g) {
            return Ok(g.with_name(format!("G(n={n},m={})", edges.len())));
        }
    }
    Err(Error::FilterUnsatisfiable(MAX_RETRIES))
}

/// A stream for one claim, independent of every other claim's stream.
pub fn stream(seed: u64, stream_id: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_graph() {
        let spec = RandomGraphSpec::new(5, 5, 1);
        assert_eq!(random_graph(&spec).unwrap(), random_graph(&spec).unwrap());
    }

    #[test]
    fn filters_hold() {
        let mut rng = stream(7, 0);
        let spec = RandomGraphSpec::new(2, 8, 0).connected();
        for _ in 0..50 {
            assert!(sample(&spec, &mut rng).unwrap().is_connected());
        }
    }

    #[test]
    fn unsatisfiable_filter() {
        let spec = RandomGraphSpec::new(1, 1, 3).isolate_free();
        assert!(matches!(random_graph(&spec), Err(Error::FilterUnsatisfiable(_))));
    }
}
