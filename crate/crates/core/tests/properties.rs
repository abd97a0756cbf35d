use harmap_core::area::area_monotonicity_check;
use harmap_core::lipschitz::{inverse_residual, lipschitz_estimate, LipschitzVariant};
use harmap_core::norms::{hyperbolic_distance, hyperbolic_distance_forms};
use harmap_core::sampling::{normalized_map, rng, sense_preserving_map};
use harmap_core::{area_series, Complex64, HarmonicMap, Majorant, MappingSpec};
use proptest::prelude::*;

fn disk_point() -> impl Strategy<Value = Complex64> {
    (0.0..0.999f64, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn distance_is_a_metric(z in disk_point(), w in disk_point(), v in disk_point()) {
        let (a, b) = hyperbolic_distance_forms(z, w).unwrap();
        prop_assert!((a - b).abs() <= 1e-13 * a.max(1.0));
        let zw = hyperbolic_distance(z, w).unwrap();
        let zv = hyperbolic_distance(z, v).unwrap();
        let vw = hyperbolic_distance(v, w).unwrap();
        prop_assert!(zw <= zv + vw + 1e-12 * (zv + vw).max(1.0));
    }

    #[test]
    fn area_is_monotone_and_scales(seed in any::<u64>(), degree in 1usize..8, r in 0.05..1.0f64) {
        let f = sense_preserving_map(&mut rng(seed), degree);
        prop_assert!(area_monotonicity_check(&f, 16).unwrap());
        let s = area_series(&f, r).unwrap();
        let doubled = area_series(&f.scaled(2.0), r).unwrap();
        prop_assert!((doubled - 4.0 * s).abs() <= 1e-12 * doubled.abs().max(1.0));
    }

    #[test]
    fn dilation_matches_evaluation(seed in any::<u64>(), rho in 0.1..1.0f64, z in disk_point()) {
        let f = normalized_map(&mut rng(seed), 6, 1.0);
        let fr = f.dilated(rho);
        prop_assert!((fr.value_at(z) - f.value_at(z * rho)).norm() <= 1e-13);
    }

    #[test]
    fn inverse_differential_is_exact(seed in any::<u64>(), z in disk_point()) {
        let f = sense_preserving_map(&mut rng(seed), 6);
        if let Some(res) = inverse_residual(&f, z) {
            prop_assert!(res <= 1e-10);
        }
    }

    #[test]
    fn lipschitz_estimates_nest(seed in any::<u64>(), beta in 0.1..=1.0f64, r in 0.05..0.99f64) {
        let f = sense_preserving_map(&mut rng(seed), 5);
        let w = Majorant::power(beta).unwrap();
        let est = LipschitzVariant::ALL.map(|v| lipschitz_estimate(&f, &w, r, v, 200, seed).unwrap().constant);
        prop_assert!(est[0] >= est[1] && est[1] >= est[2] && est[2] >= 0.0);
    }

    #[test]
    fn spec_round_trips(seed in any::<u64>(), degree in 0usize..10) {
        let f = sense_preserving_map(&mut rng(seed), degree.max(1));
        let spec = MappingSpec::from_map(&f);
        let back = MappingSpec::parse(&spec.to_json()).unwrap().to_map();
        prop_assert_eq!(back.h().coeffs(), f.h().coeffs());
        prop_assert_eq!(back.g().coeffs(), f.g().coeffs());
    }
}

#[test]
fn identity_is_an_isometry_for_every_variant_pair() {
    let f = HarmonicMap::identity();
    let est = lipschitz_estimate(&f, &Majorant::linear(), 0.7, LipschitzVariant::FullDisk, 500, 9).unwrap();
    assert!((est.constant - 1.0).abs() < 1e-12);
}
