//! Seeded instance generators shared by the benchmarks.

use im2c_core::{LabeledGraph, Letter, Presentation, Word};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The torus presentation used by the saturation benchmarks.
pub fn torus() -> Presentation {
    Presentation::new(&["a", "b"], &[("rho", "a b a' b'")]).expect("valid presentation")
}

/// The commutator-style generating set whose coset automaton stays small.
pub fn torus_generators(pres: &Presentation) -> Vec<Word> {
    ["a' b' a b", "a b rho a'"]
        .iter()
        .map(|t| pres.parse_word(t).expect("valid generator"))
        .collect()
}

/// A random rooted multigraph over two generators: `vertices` vertices and
/// `edges` uniformly random generator edges, plus a spanning path so the
/// graph is connected. Deterministic in `seed`.
pub fn random_graph(vertices: usize, edges: usize, seed: u64) -> LabeledGraph {
    assert!(vertices > 0);
    let pres = Presentation::new(&["a", "b"], &[] as &[(&str, &str)]).expect("valid presentation");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = LabeledGraph::new(pres);
    for _ in 0..vertices {
        g.add_vertex();
    }
    for v in 1..vertices {
        let letter = Letter::x(rng.gen_range(0..2));
        g.add_edge(v - 1, letter, v);
    }
    for _ in 0..edges {
        let u = rng.gen_range(0..vertices);
        let v = rng.gen_range(0..vertices);
        let letter = Letter::x(rng.gen_range(0..2));
        g.add_edge(u, letter, v);
    }
    g.set_roots(0, vertices - 1);
    g
}

/// A random word of the given length over `a, a', b, b'`.
pub fn random_word(pres: &Presentation, length: usize, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters: Vec<Letter> = (0..length)
        .map(|_| {
            let index = rng.gen_range(0..pres.x_count());
            if rng.gen_bool(0.5) {
                Letter::x(index)
            } else {
                Letter::x_inv(index)
            }
        })
        .collect();
    Word::from_letters(letters)
}
