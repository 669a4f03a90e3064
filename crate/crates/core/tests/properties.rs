use proptest::prelude::*;

use unitfit::data::load_embedded;
use unitfit::distributions::{Family, FamilySpec};
use unitfit::gof::{criteria, ks_statistic, ks_statistic_at_samples};
use unitfit::inference::fit_mle;
use unitfit::optim::SimplexConfig;
use unitfit::report::{ecdf_overlay, pp_points};
use unitfit::Dataset;

/// (dataset id, family, LL, AIC, CAIC) as printed in the reference tables.
/// The Beta AIC of dataset 7 is printed garbled and is entered corrected.
const PRINTED: &[(u8, &str, f64, f64, f64)] = &[
    (1, "beta", 78.7767, -153.5535, -153.1249),
    (1, "kumaraswamy", 79.9489, -155.8979, -155.4693),
    (1, "mbur", 72.6528, -143.3057, -143.1678),
    (1, "topp_leone", 67.7965, -133.593, -133.4551),
    (1, "unit_lindley", 71.2959, -140.592, -140.454),
    (1, "gombur1", 81.0731, -158.1462, -157.7176),
    (1, "gombur2", 81.0731, -158.1462, -157.7176),
    (2, "beta", 30.2528, -56.5056, -55.7997),
    (2, "kumaraswamy", 30.3637, -56.7274, -56.0215),
    (2, "mbur", 30.0395, -58.079, -57.8567),
    (2, "topp_leone", 29.3398, -56.6796, -56.4574),
    (2, "unit_lindley", 29.6873, -57.3746, -57.1523),
    (2, "gombur1", 30.2757, -56.5514, -55.8455),
    (2, "gombur2", 30.2757, -56.5514, -55.8455),
    (3, "beta", 25.3076, -46.6152, -46.2516),
    (3, "kumaraswamy", 25.7968, -47.5937, -47.23),
    (3, "mbur", 25.4357, -48.8713, -48.7537),
    (3, "topp_leone", 21.2862, -40.5725, -40.4548),
    (3, "unit_lindley", 29.4661, -56.9322, -56.8145),
    (3, "gombur1", 25.4621, -46.9242, -46.5606),
    (3, "gombur2", 25.4621, -46.9242, -46.5606),
    (4, "beta", 14.1836, -24.3671, -23.6613),
    (4, "kumaraswamy", 12.9733, -21.9465, -21.2407),
    (4, "mbur", 6.4617, -10.9233, -10.7011),
    (4, "topp_leone", 7.3814, -12.7627, -12.5405),
    (4, "unit_lindley", 7.1727, -12.3454, -12.1231),
    (4, "gombur1", 14.2281, -24.4562, -23.7503),
    (4, "gombur2", 14.2281, -24.4562, -23.7503),
    (5, "beta", 20.0285, -36.0571, -35.4571),
    (5, "kumaraswamy", 20.3296, -36.6592, -36.0592),
    (5, "mbur", 19.9310, -37.862, -37.6712),
    (5, "topp_leone", 18.7827, -35.5653, -35.3749),
    (5, "unit_lindley", 14.5035, -27.007, -26.8165),
    (5, "gombur1", 20.6502, -37.3005, -36.7005),
    (5, "gombur2", 20.6502, -37.3005, -36.7005),
    (6, "beta", 85.94, -167.88, -167.6536),
    (6, "kumaraswamy", 86.6, -169.2, -168.9736),
    (6, "mbur", 25.4168, -48.8337, -48.7596),
    (6, "topp_leone", 24.1874, -46.3748, -46.3008),
    (6, "unit_lindley", 41.1353, -80.2707, -80.1966),
    (6, "gombur1", 85.783, -167.5661, -167.3396),
    (6, "gombur2", 85.783, -167.5661, -167.3396),
    (7, "beta", 57.5743, -111.1486, -110.9581),
    (7, "kumaraswamy", 55.2113, -106.4226, -106.2321),
    (7, "mbur", 25.2815, -48.5631, -48.5006),
    (7, "topp_leone", 24.8597, -47.7193, -47.6568),
    (7, "unit_lindley", 37.2268, -72.4535, -72.391),
    (7, "gombur1", 57.8962, -111.7925, -111.6020),
    (7, "gombur2", 57.8962, -111.7925, -111.6020),
    (8, "beta", 45.3995, -86.7989, -86.5884),
    (8, "kumaraswamy", 45.8644, -87.7288, -87.5183),
    (8, "mbur", 21.8839, -41.7679, -41.6989),
    (8, "topp_leone", 21.6739, -41.3478, -41.2788),
    (8, "unit_lindley", 32.3773, -62.7546, -62.6856),
    (8, "gombur1", 45.3017, -86.6033, -86.3928),
    (8, "gombur2", 45.3017, -86.6033, -86.3928),
    (9, "beta", 34.571, -65.142, -64.8753),
    (9, "kumaraswamy", 31.1846, -58.3691, -58.1025),
    (9, "mbur", 20.3763, -38.7526, -38.6056),
    (9, "topp_leone", 19.0963, -36.1927, -36.1057),
    (9, "unit_lindley", 10.534, -19.068, -18.9811),
    (9, "gombur1", 36.0834, -68.1668, -67.9002),
    (9, "gombur2", 36.0834, -68.1668, -67.9002),
    (10, "beta", 39.5609, -75.1218, -74.6773),
    (10, "kumaraswamy", 39.7976, -75.5952, -75.1508),
    (10, "mbur", 34.3474, -66.6947, -66.5518),
    (10, "topp_leone", 31.4451, -60.8902, -60.7473),
    (10, "unit_lindley", 37.3848, -72.7696, -72.6268),
    (10, "gombur1", 40.6942, -77.3883, -76.9439),
    (10, "gombur2", 40.6942, -77.3883, -76.9439),
    (11, "beta", 23.7772, -43.5545, -43.4391),
    (11, "kumaraswamy", 25.3947, -46.7894, -46.6740),
    (11, "mbur", 20.6892, -39.3785, -39.3404),
    (11, "topp_leone", 21.5262, -41.0524, -41.0143),
    (11, "unit_lindley", 25.3805, -48.7609, -48.7229),
    (11, "gombur1", 23.631, -43.262, -43.1466),
    (11, "gombur2", 23.631, -43.262, -43.1466),
    (12, "beta", 57.5743, -111.1486, -110.9581),
    (12, "kumaraswamy", 58.8343, -113.6686, -113.4782),
    (12, "mbur", 46.243, -90.4861, -90.4236),
    (12, "topp_leone", 51.5544, -101.1088, -101.0463),
    (12, "unit_lindley", 46.1149, -90.2298, -90.1673),
    (12, "gombur1", 57.6857, -111.3714, -111.1809),
    (12, "gombur2", 57.6857, -111.3714, -111.1809),
    (13, "beta", 25.9725, -47.9451, -47.6022),
    (13, "kumaraswamy", 25.4287, -46.8575, -46.5146),
    (13, "mbur", 22.0688, -42.1377, -42.0266),
    (13, "topp_leone", 24.7053, -47.4106, -47.2995),
    (13, "unit_lindley", 19.2585, -36.517, -36.4059),
    (13, "gombur1", 25.9139, -47.8278, -47.4849),
    (13, "gombur2", 25.9139, -47.8278, -47.4849),
    (14, "beta", 9.6075, -15.2149, -14.6149),
    (14, "kumaraswamy", 9.6708, -15.3416, -14.7416),
    (14, "mbur", 7.6079, -13.2158, -13.0253),
    (14, "topp_leone", 8.1151, -14.2302, -14.0398),
    (14, "gombur1", 9.6825, -15.365, -14.765),
    (14, "gombur2", 9.6825, -15.365, -14.765),
];

/// Cells whose printed CAIC disagrees with the printed AIC of the same column.
const MISPRINTED_CAIC: &[(u8, &str)] = &[(9, "mbur")];

#[test]
fn caic_identity_on_printed_triples() {
    for &(id, token, ll, aic, caic) in PRINTED {
        let family: Family = token.parse().unwrap();
        let n = load_embedded(id).unwrap().len();
        let c = criteria(ll, family.param_count(), n).unwrap();
        let gap = ((c.caic - c.aic) - (caic - aic)).abs();
        if MISPRINTED_CAIC.contains(&(id, token)) {
            assert!(gap > 0.05, "dataset {id} {token} no longer looks misprinted");
            assert!((c.aic - aic).abs() < 1e-3);
        } else {
            assert!(gap <= 1e-3, "dataset {id} {token}: gap {gap}");
        }
    }
}

#[test]
fn pp_deviation_tracks_ks_on_dwelling() {
    let data = load_embedded(1).unwrap();
    let fit = fit_mle(Family::Gombur1, &data, &SimplexConfig::default()).unwrap();
    let pp = pp_points(&data, &fit.spec);
    let max_dev = pp.series[0].points.iter().map(|&(f, p)| (f - p).abs()).fold(0.0, f64::max);
    let half_step = 0.5 / data.len() as f64;
    let ks = ks_statistic(&data, |y| fit.spec.cdf(y).unwrap());
    assert!((ks - 0.1654).abs() <= 0.002, "ks {ks}");
    assert!((max_dev + half_step - ks).abs() <= 1e-9, "max PP deviation {max_dev}, ks {ks}");
}

fn spec_strategy() -> impl Strategy<Value = FamilySpec> {
    let shape = 0.2f64..6.0;
    prop_oneof![
        (shape.clone(), shape.clone()).prop_map(|(a, b)| FamilySpec::beta(a, b).unwrap()),
        (shape.clone(), shape.clone()).prop_map(|(a, b)| FamilySpec::kumaraswamy(a, b).unwrap()),
        shape.clone().prop_map(|t| FamilySpec::topp_leone(t).unwrap()),
        shape.clone().prop_map(|t| FamilySpec::unit_lindley(t).unwrap()),
        (0.3f64..4.0).prop_map(|a| FamilySpec::mbur(a).unwrap()),
        (0.0f64..12.0, 0.3f64..4.0).prop_map(|(n, a)| FamilySpec::gombur1(n, a).unwrap()),
        (1.5f64..12.0, 0.3f64..4.0).prop_map(|(n, a)| FamilySpec::gombur2(n, a).unwrap()),
    ]
}

fn sample_strategy() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.001f64..0.999, 5..60)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ks_is_invariant_under_the_probability_integral_transform(spec in spec_strategy(), ys in sample_strategy()) {
        let us: Vec<f64> = ys.iter().map(|&y| spec.cdf(y).unwrap()).collect();
        prop_assume!(us.iter().all(|&u| u > 0.0 && u < 1.0));
        let data = Dataset::new("y", ys).unwrap();
        let uniform = Dataset::new("u", us).unwrap();
        let direct = ks_statistic(&data, |y| spec.cdf(y).unwrap());
        let transformed = ks_statistic(&uniform, |u| u);
        prop_assert!((direct - transformed).abs() < 1e-12);
    }

    #[test]
    fn pp_deviation_is_within_half_a_step_of_ks(spec in spec_strategy(), ys in sample_strategy()) {
        let data = Dataset::new("y", ys).unwrap();
        let n = data.len() as f64;
        let ks = ks_statistic(&data, |y| spec.cdf(y).unwrap());
        let at = ks_statistic_at_samples(&data, |y| spec.cdf(y).unwrap());
        let pp = pp_points(&data, &spec);
        let max_dev = pp.series[0].points.iter().map(|&(f, p)| (f - p).abs()).fold(0.0, f64::max);
        prop_assert!(at <= ks + 1e-12);
        prop_assert!((max_dev - ks).abs() <= 0.5 / n + 1e-12);
    }

    #[test]
    fn empirical_staircase_rises_to_one(spec in spec_strategy(), ys in sample_strategy()) {
        let data = Dataset::new("y", ys).unwrap();
        let plot = ecdf_overlay(&data, &[spec]);
        let empirical = plot.series.iter().find(|s| s.label == "empirical").unwrap();
        prop_assert!(empirical.points.windows(2).all(|w| w[0].0 <= w[1].0 && w[0].1 <= w[1].1));
        prop_assert_eq!(empirical.points.last().unwrap().1, 1.0);
        for s in plot.series.iter().filter(|s| s.label != "empirical") {
            prop_assert!(s.points.windows(2).all(|w| w[0].1 <= w[1].1 + 1e-12));
        }
    }

    #[test]
    fn quantile_is_monotone(spec in spec_strategy(), p in 0.001f64..0.998, dp in 1e-4f64..0.001) {
        let lo = spec.quantile(p).unwrap();
        let hi = spec.quantile(p + dp).unwrap();
        prop_assert!(lo <= hi);
        prop_assert!(lo > 0.0 && hi < 1.0);
    }
}
