use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;
use qpa_core::fidelity::{
    f_symbol_sq, in_unit_interval, overall_fidelity, sector_fidelity_all, sector_fidelity_one, Objective, Rule,
};
use qpa_core::gyd::{
    constrained_schur, edge_monomial, edge_vars_to_wt, lowest_weight_monomial, ordering_permutation, wt_to_edge_vars,
    ConstraintMap, GeneralizedDiagram, PathGraph,
};
use qpa_core::protocol::{enumerate_environments, overhang_removal};
use qpa_core::rational::ratio;
use qpa_core::tableaux::{
    enumerate_diagrams, enumerate_gt_patterns, rsk_shape, schur_jacobi_trudi, schur_polynomial, specht_dim,
    sw_distribution, weyl_dim, SwSampler,
};
use qpa_core::{BigRational, Spectrum, YoungDiagram};

/// Positive weights normalized to a probability vector, not necessarily sorted.
fn weights(d: usize) -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec(1i64..30, d).prop_map(|w| {
        let total: i64 = w.iter().sum();
        w.into_iter().map(|x| ratio(x, total)).collect()
    })
}

/// Strictly decreasing spectrum.
fn spectrum(d: usize) -> impl Strategy<Value = Spectrum> {
    prop::collection::btree_set(1i64..60, d).prop_map(|set| {
        let total: i64 = set.iter().sum();
        Spectrum::new(set.into_iter().rev().map(|x| ratio(x, total)).collect()).unwrap()
    })
}

fn shape(d: usize, max_n: i64) -> impl Strategy<Value = YoungDiagram> {
    (0..=max_n).prop_flat_map(move |n| {
        let shapes = enumerate_diagrams(n, d);
        (0..shapes.len()).prop_map(move |i| shapes[i].clone())
    })
}

/// Length of the longest weakly increasing subsequence.
fn longest_weak_run(word: &[usize]) -> usize {
    let mut best = vec![0usize; word.len()];
    for i in 0..word.len() {
        best[i] = 1 + (0..i).filter(|&j| word[j] <= word[i]).map(|j| best[j]).max().unwrap_or(0);
    }
    best.into_iter().max().unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn schur_weyl_dimension_count(d in 1usize..=4, n in 0i64..=6) {
        let total: BigUint = enumerate_diagrams(n, d).iter().map(|s| specht_dim(s).unwrap() * weyl_dim(s)).sum();
        prop_assert_eq!(total, BigUint::from(d).pow(n as u32));
    }

    #[test]
    fn gt_count_is_weyl_dimension((d, s) in (1usize..=4).prop_flat_map(|d| (Just(d), shape(d, 6)))) {
        let _ = d;
        prop_assert_eq!(BigUint::from(enumerate_gt_patterns(&s).count()), weyl_dim(&s));
    }

    #[test]
    fn schur_by_branching_matches_determinant((s, q) in (1usize..=4).prop_flat_map(|d| (shape(d, 6), weights(d)))) {
        prop_assert_eq!(schur_polynomial(&s, &q), schur_jacobi_trudi(&s, &q));
    }

    #[test]
    fn sw_distribution_is_normalized((q, n) in ((1usize..=4).prop_flat_map(weights), 0i64..=6)) {
        let mass: BigRational = sw_distribution(n, &q).into_iter().map(|(_, x)| x).sum();
        prop_assert!(mass.is_one());
    }

    #[test]
    fn spectrum_text_round_trip(p in (2usize..=4).prop_flat_map(spectrum)) {
        let back: Spectrum = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn overhang_is_a_valid_removal(
        (p, s, k, m) in (2usize..=3).prop_flat_map(|d| (spectrum(d), shape(d, 7), 1..=d, 1i64..=4))
    ) {
        let r = overhang_removal(&s, k, m).unwrap();
        prop_assert_eq!(r.total(), m);
        prop_assert!(r.is_valid_for(&s));
        let mu = r.environment(&s).unwrap();
        prop_assert_eq!(mu.n(), s.n() - m);
        if s.n() > 0 {
            let all = sector_fidelity_all(&s, k, &r, p.probs()).unwrap();
            let one = sector_fidelity_one(&s, k, &mu, p.probs()).unwrap();
            prop_assert!(in_unit_interval(&all) && in_unit_interval(&one));
            // the one-site marginal is never worse than the full output
            prop_assert!(one >= all);
        }
    }

    #[test]
    fn f_symbols_form_a_distribution((s, m) in (1usize..=3).prop_flat_map(|d| (shape(d, 6), 1i64..=4))) {
        for r in enumerate_environments(&s, m) {
            let lambda = r.environment(&s).unwrap();
            let f: Vec<BigRational> = (1..=s.d()).map(|i| f_symbol_sq(&s, &lambda, i, m).unwrap()).collect();
            prop_assert!(f.iter().all(|x| *x >= BigRational::zero()));
            prop_assert!(f.iter().sum::<BigRational>().is_one());
        }
    }

    #[test]
    fn overall_is_a_probability_and_optimum_dominates(
        (p, n, k, m) in (2usize..=3).prop_flat_map(|d| (spectrum(d), 1i64..=5, 1..=d, 1i64..=3))
    ) {
        let m = m.min(n);
        for objective in [Objective::All, Objective::One] {
            let (f, _) = overall_fidelity(n, k, m, &p, objective, &Rule::Overhang).unwrap();
            let (best, _) = overall_fidelity(n, k, m, &p, objective, &Rule::OptimalPerSector).unwrap();
            prop_assert!(in_unit_interval(&f));
            prop_assert!(best >= f);
        }
    }

    #[test]
    fn rsk_first_row_is_longest_weak_run((d, word) in (1usize..=4).prop_flat_map(|d| (Just(d), prop::collection::vec(1..=d, 0..12)))) {
        let s = rsk_shape(&word, d).unwrap();
        prop_assert_eq!(s.n() as usize, word.len());
        prop_assert_eq!(s.row(1) as usize, longest_weak_run(&word));
    }

    #[test]
    fn gyd_sums_are_translation_invariant(
        cells in prop::collection::btree_set((0i64..3, 0i64..4), 1..6),
        shift in (-5i64..5, -5i64..5),
        q in weights(3),
    ) {
        let g = GeneralizedDiagram::new(cells);
        let h = g.translate(shift.0, shift.1);
        prop_assert_eq!(&g, &h);
        let a = constrained_schur(&g, &ConstraintMap::trivial(&g, 3), &q);
        let b = constrained_schur(&h, &ConstraintMap::trivial(&h, 3), &q);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn path_graph_parametrization((s, q) in shape(3, 5).prop_flat_map(|s| (Just(s), spectrum(3)))) {
        let q = q.probs().to_vec();
        let pi = ordering_permutation(&q).unwrap();
        let g = PathGraph::from_permutation(&pi).unwrap();
        let base = lowest_weight_monomial(s.rows(), &g, &q);
        for w in enumerate_gt_patterns(&s) {
            let t = wt_to_edge_vars(&w, &g).unwrap();
            prop_assert_eq!(&edge_vars_to_wt(&t, s.rows(), &g).unwrap(), &w);
            prop_assert_eq!(w.weight(&q), &base * edge_monomial(&t, &q));
        }
    }
}

/// The extensive law is continuous and nonincreasing in R on every family.
#[test]
fn extensive_law_is_monotone_in_rate() {
    use qpa_core::asymptotics::{extensive_fidelity, grid, Family};
    let families = [
        Family::Depolarized { d: 2 },
        Family::Depolarized { d: 3 },
        Family::Depolarized { d: 5 },
        Family::Linear { from: vec![0.5, 0.3, 0.2], to: vec![0.9, 0.07, 0.03] },
    ];
    for family in &families {
        for lambda in grid(0.05, 0.9, 18) {
            let p = family.spectrum(lambda);
            let mut last = 1.0;
            for rate in grid(0.0, 2.0, 2001) {
                let f = extensive_fidelity(&p, 1, rate).unwrap();
                assert!(f <= last + 1e-12, "{family:?} λ={lambda}: increases at R={rate}");
                last = f;
                // a jump would not shrink with the step size
                let near = f - extensive_fidelity(&p, 1, rate + 1e-6).unwrap();
                let far = f - extensive_fidelity(&p, 1, rate + 1e-3).unwrap();
                assert!(near <= 0.01 * far + 1e-12, "{family:?} λ={lambda}: jump at R={rate}");
            }
        }
    }
}

/// Empirical sector frequencies of the RSK sampler against the exact distribution.
#[test]
fn sampler_matches_schur_weyl_distribution() {
    let p: Spectrum = "1/2,3/10,1/5".parse().unwrap();
    let n = 4;
    let draws = 20_000;
    let mut sampler = SwSampler::new(&p, 11);
    let mut counts = std::collections::BTreeMap::new();
    for _ in 0..draws {
        *counts.entry(sampler.sample(n).rows().to_vec()).or_insert(0usize) += 1;
    }
    for (s, mass) in sw_distribution(n as i64, p.probs()) {
        let expect = qpa_core::rational::to_f64(&mass);
        let seen = *counts.get(s.rows()).unwrap_or(&0) as f64 / draws as f64;
        let sd = (expect * (1.0 - expect) / draws as f64).sqrt();
        assert!((seen - expect).abs() <= 4.0 * sd + 1e-9, "sector {s}: {seen} vs {expect}");
    }
}

#[test]
fn sampler_is_reproducible() {
    let p: Spectrum = "3/4,1/4".parse().unwrap();
    let a: Vec<_> = (0..5).map(|_| SwSampler::new(&p, 3).sample(50)).collect();
    let b: Vec<_> = (0..5).map(|_| SwSampler::new(&p, 3).sample(50)).collect();
    assert_eq!(a, b);
}
