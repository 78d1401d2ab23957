mod common;

use common::*;
use exciton::level::{complement_index_map, induced_index_map};
use exciton::oracle::{brute_force_isomorphic, exciton_block};
use exciton::spectral::default_tolerance;
use exciton::subset::binomial;
use exciton::{
    char_poly_exact, compare_spectra, level_laplacian, level_matrix, spectrum, Graph, Permutation,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>())
        .prop_map(|(n, seed)| random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n))
}

fn graph_and_level(max_n: usize) -> impl Strategy<Value = (Graph, usize)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n_vertices();
        (Just(g), 0..=n)
    })
}

fn pair_count(g: &Graph, level: usize) -> i128 {
    let n = g.n_vertices();
    if level == 0 || level == n {
        return 0;
    }
    2 * g.edge_count() as i128 * binomial(n - 2, level - 1).unwrap() as i128
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn trace_and_frobenius_sum_rules((g, level) in graph_and_level(9)) {
        let m = level_matrix(&g, level).unwrap().into_matrix();
        prop_assert_eq!(m.trace(), 0);
        prop_assert_eq!(m.frobenius_norm_sq(), pair_count(&g, level));
        let s = spectrum(&m);
        prop_assert!(s.sum().abs() < 1e-8);
        prop_assert!((s.sum_of_squares() - pair_count(&g, level) as f64).abs() < 1e-7 * (1.0 + s.sum_of_squares()));
    }

    #[test]
    fn laplacian_trace_counts_boundaries((g, level) in graph_and_level(9)) {
        prop_assume!(level >= 1);
        let l = level_laplacian(&g, level).unwrap().into_matrix();
        prop_assert_eq!(i128::from(l.trace()), pair_count(&g, level));
        let smallest = spectrum(&l).values()[0];
        prop_assert!(smallest >= -default_tolerance([&l]));
    }

    #[test]
    fn relabeling_conjugates_the_level_matrix((g, level) in graph_and_level(8), seed in any::<u64>()) {
        let p = random_permutation(&mut ChaCha8Rng::seed_from_u64(seed), g.n_vertices());
        let h = g.apply_permutation(&p).unwrap();
        let image = induced_index_map(&p, level).unwrap();
        let m = level_matrix(&g, level).unwrap().into_matrix();
        prop_assert_eq!(m.conjugate(&image).unwrap(), level_matrix(&h, level).unwrap().into_matrix());
    }

    #[test]
    fn complement_level_is_a_relabeling((g, level) in graph_and_level(9)) {
        let n = g.n_vertices();
        let image = complement_index_map(n, level).unwrap();
        let m = level_matrix(&g, level).unwrap().into_matrix();
        prop_assert_eq!(m.conjugate(&image).unwrap(), level_matrix(&g, n - level).unwrap().into_matrix());
    }

    #[test]
    fn operator_block_matches_in_its_own_basis((g, level) in graph_and_level(8)) {
        let block = exciton_block(&g, level).unwrap();
        let direct = level_matrix(&g, level).unwrap().into_matrix();
        let sb = spectrum(&block.matrix);
        let sd = spectrum(&direct);
        prop_assert_eq!(compare_spectra(&sb, &sd, 1e-8).outcome, exciton::spectral::Outcome::Equal);
    }

    #[test]
    fn exact_polynomial_predicts_float_spectrum((g, level) in graph_and_level(7)) {
        let m = level_matrix(&g, level).unwrap().into_matrix();
        let tol = default_tolerance([&m]);
        let poly = char_poly_exact(&m).unwrap();
        prop_assert_eq!(poly.degree(), m.dim());
        let roots = poly.roots(tol / 10.0);
        let s = spectrum(&m);
        prop_assert_eq!(roots.len(), s.dim());
        for (r, v) in roots.iter().zip(s.values()) {
            prop_assert!((r - v).abs() <= tol, "root {} vs eigenvalue {}", r, v);
        }
    }
}

#[test]
fn relabeled_copy_has_lexicographically_least_witness() {
    let g = star_a();
    let p = Permutation::new(vec![5, 4, 3, 2, 1]).unwrap();
    let h = g.apply_permutation(&p).unwrap();
    let result = brute_force_isomorphic(&g, &h).unwrap();
    let exciton::oracle::IsomorphismResult::Isomorphic(w) = result else {
        panic!("expected isomorphic");
    };
    assert_eq!(h.apply_permutation(&w).unwrap(), g);
}

#[test]
fn complete_and_empty_graphs_have_known_levels() {
    // K_N at level n is the Johnson graph J(N, n): top eigenvalue n(N - n)
    for n in 2..=8 {
        let k = Graph::complete(n).unwrap();
        for level in 1..n {
            let s = spectrum(level_matrix(&k, level).unwrap().matrix());
            let top = *s.values().last().unwrap();
            assert!(
                (top - (level * (n - level)) as f64).abs() < 1e-8,
                "K{n} level {level}"
            );
        }
        let e = Graph::empty(n).unwrap();
        let s = spectrum(level_matrix(&e, n / 2).unwrap().matrix());
        assert!(s.values().iter().all(|v| v.abs() < 1e-12));
    }
}
