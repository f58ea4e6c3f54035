use fanspec_core::closed_form::{join_distance_laplacian_spectrum, join_laplacian_spectrum};
use fanspec_core::eigen::{self, group_multiplicities, DEFAULT_GROUPING_TOL};
use fanspec_core::graph::{generalized_fan, join, nc_graph, Graph};
use fanspec_core::matrix::{distance_laplacian, laplacian_matrix, DenseSymMatrix, MatrixKind};
use fanspec_core::quotient::{is_equitable, quotient_eigenvalue_list, quotient_matrix, Partition};
use fanspec_core::verify::{
    compare_spectra, contained_in, verify_case, ClosedFormKind, VerificationReport,
};
use fanspec_core::Family;
use nalgebra::{DMatrix, SymmetricEigen};
use proptest::prelude::*;

fn symmetric_matrix() -> impl Strategy<Value = DenseSymMatrix> {
    (1usize..12).prop_flat_map(|n| {
        prop::collection::vec(-10.0f64..10.0, n * n)
            .prop_map(move |raw| DenseSymMatrix::from_upper_fn(n, |i, j| raw[i * n + j]))
    })
}

fn random_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn family_matrix() -> impl Strategy<Value = DenseSymMatrix> {
    (2usize..6, 2usize..6, any::<bool>(), any::<bool>()).prop_map(|(m, n, nc, dl)| {
        let g = if nc {
            nc_graph(m, n).unwrap()
        } else {
            generalized_fan(m, n).unwrap()
        };
        let kind = if dl {
            MatrixKind::DistanceLaplacian
        } else {
            MatrixKind::Laplacian
        };
        kind.build(&g).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn jacobi_agrees_with_nalgebra(m in symmetric_matrix()) {
        let ours = eigen::eigenvalues(&m).unwrap();
        let n = m.order();
        let dm = DMatrix::from_row_slice(n, n, m.entries());
        let mut theirs: Vec<f64> = SymmetricEigen::new(dm).eigenvalues.iter().copied().collect();
        theirs.sort_by(f64::total_cmp);
        let scale = m.frobenius_norm().max(1.0);
        prop_assert!(compare_spectra(&ours, &theirs).unwrap() < 1e-10 * scale);
    }

    #[test]
    fn eigenvalue_sum_is_trace(m in symmetric_matrix()) {
        let sum: f64 = eigen::eigenvalues(&m).unwrap().iter().sum();
        prop_assert!((sum - m.trace()).abs() < 1e-8 * m.trace().abs().max(1.0));
    }

    #[test]
    fn permutation_invariance(m in family_matrix(), seed in any::<u64>()) {
        let n = m.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates from a splitmix stream
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_add(0x9E37_79B9_7F4A_7C15);
            let mut z = s;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
            let j = ((z ^ (z >> 31)) % (i as u64 + 1)) as usize;
            perm.swap(i, j);
        }
        let a = eigen::eigenvalues(&m).unwrap();
        let b = eigen::eigenvalues(&m.permuted(&perm)).unwrap();
        prop_assert!(compare_spectra(&a, &b).unwrap() < 1e-9);
    }

    #[test]
    fn laplacian_zero_multiplicity_counts_components(g1 in random_graph(6), g2 in random_graph(6)) {
        let g = g1.disjoint_union(&g2);
        let vals = eigen::eigenvalues(&laplacian_matrix(&g)).unwrap();
        prop_assert!(vals[0] >= -1e-9 && vals[0].abs() < 1e-9);
        let spectrum = group_multiplicities(&vals, DEFAULT_GROUPING_TOL);
        prop_assert_eq!(spectrum.multiplicity_near(0.0, 1e-9), g.component_count());
    }

    #[test]
    fn join_spectrum_maps(g1 in random_graph(8), g2 in random_graph(8)) {
        let joined = join(&g1, &g2).unwrap();
        let s1 = eigen::eigenvalues(&laplacian_matrix(&g1)).unwrap();
        let s2 = eigen::eigenvalues(&laplacian_matrix(&g2)).unwrap();

        let closed = join_laplacian_spectrum(&s1, &s2).unwrap();
        prop_assert_eq!(closed.len(), g1.order() + g2.order());
        let numeric = eigen::eigenvalues(&laplacian_matrix(&joined)).unwrap();
        prop_assert!(compare_spectra(&closed.expanded(), &numeric).unwrap() < 1e-8);

        let closed = join_distance_laplacian_spectrum(&s1, &s2).unwrap();
        let numeric = eigen::eigenvalues(&distance_laplacian(&joined).unwrap()).unwrap();
        prop_assert!(compare_spectra(&closed.expanded(), &numeric).unwrap() < 1e-8);
        prop_assert!(numeric[0] >= -1e-9);

        // two-sided quotient of D^L(G1 + G2)
        let p = Partition::join_sides(g1.order(), g2.order()).unwrap();
        let dl = distance_laplacian(&joined).unwrap();
        let b = quotient_matrix(&dl, &p).unwrap();
        let (n1, n2) = (g1.order() as f64, g2.order() as f64);
        prop_assert_eq!(b.rows(), vec![vec![n2, -n2], vec![-n1, n1]]);
    }

    #[test]
    fn grouping_invariants(values in prop::collection::vec(-5.0f64..5.0, 0..30), tol in 1e-9f64..0.5) {
        let mut sorted = values.clone();
        sorted.sort_by(f64::total_cmp);
        let s = group_multiplicities(&sorted, tol);
        prop_assert_eq!(s.len(), values.len());
        for w in s.pairs().windows(2) {
            prop_assert!(w[1].0 - w[0].0 > tol);
        }
    }

    #[test]
    fn canonical_quotients_are_contained(m in 2usize..8, n in 2usize..8, nc in any::<bool>(), dl in any::<bool>()) {
        let (g, p) = if nc {
            (nc_graph(m, n).unwrap(), Partition::nc_canonical(m, n).unwrap())
        } else {
            (generalized_fan(m, n).unwrap(), Partition::fan_canonical(m, n).unwrap())
        };
        let kind = if dl { MatrixKind::DistanceLaplacian } else { MatrixKind::Laplacian };
        let mat = kind.build(&g).unwrap();
        prop_assert!(is_equitable(&mat, &p, 1e-12));
        prop_assert!(quotient_matrix(&mat, &p).unwrap().symmetrization_defect() < 1e-12);
        let q = quotient_eigenvalue_list(&mat, &p, 1e-9).unwrap();
        let full = eigen::eigenvalues(&mat).unwrap();
        prop_assert!(contained_in(&q, &full, 1e-8));
    }

    #[test]
    fn report_json_round_trip(m in 2usize..6, n in 2usize..6, nc in any::<bool>(), dl in any::<bool>()) {
        let family = if nc { Family::Nc } else { Family::Fan };
        let kind = if dl { ClosedFormKind::DistanceLaplacian } else { ClosedFormKind::Laplacian };
        let report = verify_case(family, m, n, kind, 1e-8).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, report);
    }
}
