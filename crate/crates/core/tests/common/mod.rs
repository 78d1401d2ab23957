#![allow(dead_code)]

use exciton::{Graph, Permutation, SymmetricIntMatrix};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn star_a() -> Graph {
    Graph::new(5, [(1, 5), (2, 5), (3, 5), (4, 5)]).unwrap()
}

pub fn graph_b() -> Graph {
    Graph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
}

pub fn fixture(name: &str) -> Graph {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap();
    exciton::formats::read_graph(&text, exciton::Format::Hex, Some(24)).unwrap()
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// Every labeled graph on `n` vertices, indexed by edge bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let density: f64 = rng.gen_range(0.15..0.85);
    let edges: Vec<(usize, usize)> = pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(density))
        .collect();
    Graph::new(n, edges).unwrap()
}

/// A random graph with exactly `m` edges.
pub fn random_graph_with_edges(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut all = pairs(n);
    all.shuffle(rng);
    all.truncate(m);
    Graph::new(n, all).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

/// `D - A` written out from degrees and adjacency directly.
pub fn d_minus_a(g: &Graph) -> SymmetricIntMatrix {
    let n = g.n_vertices();
    let degrees = g.degrees();
    SymmetricIntMatrix::from_fn(n, |i, j| {
        if i == j {
            degrees[i] as i64
        } else if g.has_edge(i + 1, j + 1) {
            -1
        } else {
            0
        }
    })
    .unwrap()
}
