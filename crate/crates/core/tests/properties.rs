use num_bigint::BigInt;
use proptest::prelude::*;

use spectra_core::characterization::{check_graph, CheckOptions, GraphMatrix};
use spectra_core::exact::{
    charpoly, classify_polynomial, classify_spectrum_exact, eval_poly_matrix_exact, Poly,
    SquareMatrix,
};
use spectra_core::graph::{
    automorphisms, build_matrix, is_connected, parse_graph6, write_graph6, Graph, MatrixKind,
};
use spectra_core::spectra::{eigh, rank_one_factor, Hermitian, Matrix};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut it = bits.into_iter();
            for j in 1..n {
                for i in 0..j {
                    if it.next().unwrap() {
                        g.add_edge(i, j).unwrap();
                    }
                }
            }
            g
        })
    })
}

fn int_symmetric(max_n: usize) -> impl Strategy<Value = SquareMatrix<BigInt>> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-6i64..=6, n * n).prop_map(move |v| {
            SquareMatrix::from_fn(n, |i, j| BigInt::from(v[i.min(j) * n + i.max(j)]))
        })
    })
}

fn symmetric(max_n: usize) -> impl Strategy<Value = Hermitian<f64>> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-10.0f64..10.0, n * n).prop_map(move |v| {
            Hermitian::new(Matrix::from_fn(n, |i, j| v[i.min(j) * n + i.max(j)])).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn cayley_hamilton(m in int_symmetric(7)) {
        prop_assert!(eval_poly_matrix_exact(&charpoly(&m), &m).is_zero());
    }

    #[test]
    fn automorphisms_form_a_group(g in graph(7)) {
        let auts = automorphisms(&g).unwrap();
        prop_assert!(auts[0].is_identity());
        for p in &auts {
            prop_assert!(auts.binary_search(&p.inverse()).is_ok());
            for q in &auts {
                prop_assert!(auts.binary_search(&p.compose(q)).is_ok());
            }
        }
        // Lagrange: the order divides n!.
        let factorial: usize = (1..=g.n()).product();
        prop_assert_eq!(factorial % auts.len(), 0);
    }

    #[test]
    fn eigh_residuals(h in symmetric(12)) {
        let r = eigh(&h).unwrap();
        let bound = 1e-10 * h.n() as f64 * h.max_abs().max(1.0);
        prop_assert!(r.reconstruction_residual <= bound);
        prop_assert!(r.orthogonality_residual <= bound);
        prop_assert!(r.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        let trace: f64 = (0..h.n()).map(|i| h[(i, i)]).sum();
        let sum: f64 = r.eigenvalues.iter().sum();
        prop_assert!((trace - sum).abs() <= bound * h.n() as f64);
    }

    #[test]
    fn rank_one_recovers_outer_products(
        y in proptest::collection::vec(-5.0f64..5.0, 1..10),
        b in prop_oneof![-50.0f64..-0.5, 0.5f64..50.0],
    ) {
        let norm = y.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assume!(norm > 0.1);
        let unit: Vec<f64> = y.iter().map(|x| x / norm).collect();
        let p = Hermitian::symmetrized(&Matrix::outer(&unit, b));
        let r = rank_one_factor(&p, 1e-9).unwrap();
        prop_assert!((r.b - b).abs() <= 1e-10 * b.abs());
        prop_assert!(r.residual <= 1e-12 * b.abs());
    }

    #[test]
    fn classification_of_products_of_linear_factors(
        roots in proptest::collection::vec((-6i64..=6, 1usize..=3), 1..5),
    ) {
        let mut p = Poly::one();
        let mut mult = std::collections::BTreeMap::new();
        for &(r, m) in &roots {
            for _ in 0..m {
                p = p.mul(&Poly::linear(r));
            }
            *mult.entry(r).or_insert(0) += m;
        }
        let c = classify_polynomial(&p).unwrap();
        let mut expected: Vec<usize> = mult.values().copied().collect();
        expected.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(c.distinct_count, mult.len());
        prop_assert_eq!(c.multiplicity_profile, expected);
        prop_assert_eq!(c.total_degree, roots.iter().map(|r| r.1).sum::<usize>());
    }

    #[test]
    fn characterizations_hold_on_connected_graphs(g in graph(9)) {
        prop_assume!(g.n() >= 2 && is_connected(&g));
        for kind in GraphMatrix::ALL {
            let r = check_graph(&g, kind, &CheckOptions::default()).unwrap();
            prop_assert!(r.identities_hold(), "{} {:?}", kind, r.identity_failure);
            prop_assert!(r.pipelines_agree());
            let sign = if (r.k - 1).is_multiple_of(2) { 1.0 } else { -1.0 };
            match kind {
                GraphMatrix::Adjacency | GraphMatrix::Signless => prop_assert!(r.coefficient_b > 0.0),
                _ => prop_assert_eq!(r.coefficient_b.signum(), sign),
            }
        }
    }

    #[test]
    fn signless_and_laplacian_share_spectra_on_bipartite_graphs(n in 2usize..9, extra in any::<u64>()) {
        // Trees are bipartite, where L and Q are similar.
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v, (extra as usize >> (v % 32)) % v).unwrap();
        }
        let l = classify_spectrum_exact(&build_matrix(&g, MatrixKind::Laplacian));
        let q = classify_spectrum_exact(&build_matrix(&g, MatrixKind::Signless));
        prop_assert_eq!(l, q);
    }
}
