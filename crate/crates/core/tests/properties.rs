use proptest::prelude::*;
use qaskey::families::{cqu_at, cqu_dual_point, cqu_f64, cqu_r};
use qaskey::identities::addition::moment;
use qaskey::numerics::bessel_script_j;
use qaskey::series::qpochhammer;
use qaskey::{rat, LaurentPoly, QParams, Rat};
use statrs::distribution::{Beta, Continuous};
use statrs::statistics::Distribution;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn unit_rat() -> impl Strategy<Value = Rat> {
    (2i64..=9).prop_flat_map(|d| (1..d, Just(d))).prop_map(|(n, d)| rat(n, d))
}

fn qparams() -> impl Strategy<Value = QParams> {
    (unit_rat(), unit_rat()).prop_map(|(t, s)| QParams::new(t, s).unwrap())
}

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, small_rat()), 0..6).prop_map(LaurentPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cosine_evaluation_tracks_exact(qp in qparams(), n in 0usize..=8, xn in -10i64..=10) {
        let x = rat(xn, 10);
        let coeffs = cqu_r(n, &qp).unwrap().to_x_coeffs();
        let exact = coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * &x + c).to_f64();
        let approx = cqu_r(n, &qp).unwrap().eval_cos(x.to_f64().acos());
        prop_assert!((approx - exact).abs() <= 1e-12 * exact.abs().max(1.0), "{approx} vs {exact}");
    }

    // The terminating 4phi3 in floating point cancels heavily once q^{-n} is
    // large, so the series path is only checked near q = 1 where limits use it.
    #[test]
    fn series_evaluation_tracks_exact(tn in 18i64..=19, s in unit_rat(), n in 0usize..=8, zn in 10i64..=20) {
        let qp = QParams::new(rat(tn, 20), s).unwrap();
        let z = rat(zn, 10);
        let exact = cqu_at(n, &qp, &z).unwrap().to_f64();
        let zf = z.to_f64();
        let approx = cqu_f64(n, qp.q().to_f64(), qp.beta().to_f64(), (zf + 1.0 / zf) / 2.0).unwrap();
        prop_assert!((approx - exact).abs() <= 1e-9 * exact.abs().max(1.0), "{approx} vs {exact}");
    }

    #[test]
    fn qpochhammer_splits(b in small_rat(), q in unit_rat(), j in 0usize..6, k in 0usize..6) {
        let whole = qpochhammer(&b, &q, j + k);
        let split = qpochhammer(&b, &q, j) * qpochhammer(&(&b * &q.pow(j as i64)), &q, k);
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn evaluation_is_a_ring_map(p in laurent(), r in laurent(), z in small_rat()) {
        prop_assume!(!z.is_zero());
        let (pz, rz) = (p.eval_at(&z).unwrap(), r.eval_at(&z).unwrap());
        prop_assert_eq!((&p * &r).eval_at(&z).unwrap(), &pz * &rz);
        prop_assert_eq!((&p + &r).eval_at(&z).unwrap(), &pz + &rz);
        prop_assert_eq!(p.invert_variable().eval_at(&z).unwrap(), p.eval_at(&z.recip()).unwrap());
    }

    #[test]
    fn cqu_duality_and_symmetry(qp in qparams(), m in 0usize..5, n in 0usize..5) {
        let rn = cqu_r(n, &qp).unwrap();
        prop_assert!(rn.as_poly().is_symmetric());
        let at_m = rn.eval_at(&cqu_dual_point(m, &qp)).unwrap();
        let at_n = cqu_r(m, &qp).unwrap().eval_at(&cqu_dual_point(n, &qp)).unwrap();
        prop_assert_eq!(at_m, at_n);
    }

    #[test]
    fn bessel_is_even(a in 0u32..8, x in 0.0f64..10.0) {
        let alpha = f64::from(a) / 2.0 - 0.5;
        let plus = bessel_script_j(alpha, x, 1e-15).unwrap();
        let minus = bessel_script_j(alpha, -x, 1e-15).unwrap();
        prop_assert_eq!(plus, minus);
    }
}

/// `t = 2B - 1` with `B ~ Beta(α+1/2, α+1/2)` has density proportional to
/// `(1-t²)^{α-1/2}`, so its moments are the normalized Gegenbauer moments.
#[test]
fn moments_match_beta_distribution() {
    for (num, den) in [(1, 2), (1, 1), (3, 2), (2, 1)] {
        let alpha = rat(num, den);
        let shape = alpha.to_f64() + 0.5;
        let beta = Beta::new(shape, shape).unwrap();
        let second = 4.0 * beta.variance().unwrap();
        assert!((second - moment(&alpha, 2).to_f64()).abs() < 1e-12, "α = {alpha}");

        // midpoint rule in t; the density is bounded for these α
        let steps = 200_000;
        let h = 2.0 / steps as f64;
        for i in [4usize, 6] {
            let integral: f64 = (0..steps)
                .map(|k| {
                    let t = -1.0 + (k as f64 + 0.5) * h;
                    t.powi(i as i32) * beta.pdf((t + 1.0) / 2.0) / 2.0 * h
                })
                .sum();
            let exact = moment(&alpha, i).to_f64();
            assert!((integral - exact).abs() < 1e-6, "α = {alpha}, i = {i}: {integral} vs {exact}");
        }
        assert!(moment(&alpha, 3).is_zero());
    }
}
