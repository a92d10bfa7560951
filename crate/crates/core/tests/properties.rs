use critline::approx::{
    approx_arg_gamma, approx_arg_zeta, coefficient_law, factorize, p_adic_valuation,
    ruler_normalized, symbolic_expression, symbolic_gamma_expression, Prime,
};
use critline::special::{
    arg_gamma_quarter, arg_zeta_principal, hardy_z, theta_exact, zeta_critical_line,
};
use critline::zeros::{floor_counter, read_zero_cache, write_zero_cache, ZeroList, ZeroSource};
use num_complex::Complex64;
use proptest::prelude::*;

fn small_primes() -> impl Strategy<Value = u64> {
    let primes: Vec<u64> = (2..100u64).filter(|&p| Prime::new(p).is_ok()).collect();
    prop::sample::select(primes)
}

proptest! {
    #[test]
    fn floor_counter_telescopes(alpha in 0.01f64..50.0, n in 1u64..2_000) {
        let expect = ((n + 1) as f64 * alpha).floor() as i64 - (n as f64 * alpha).floor() as i64;
        prop_assert_eq!(floor_counter(n, alpha), expect);
        let total: i64 = (1..=n).map(|k| floor_counter(k, alpha)).sum();
        prop_assert_eq!(total, ((n + 1) as f64 * alpha).floor() as i64 - alpha.floor() as i64);
    }

    #[test]
    fn coefficient_law_matches_expansion(p in small_primes(), n in 1u64..100_000) {
        let expr = symbolic_expression(n).unwrap();
        let law = coefficient_law(Prime::new(p).unwrap(), n);
        prop_assert_eq!(expr.coefficient(p), law);
    }

    #[test]
    fn ruler_identity(p in small_primes(), n in 1u64..100_000) {
        let prime = Prime::new(p).unwrap();
        let (index, scale) = if p == 2 { (8 * n, 32 * n) } else { (p * n, 4 * p * n) };
        let a = coefficient_law(prime, index);
        prop_assert_eq!(a % scale as i64, 0);
        prop_assert_eq!(-a / scale as i64, ruler_normalized(prime, n));
    }

    #[test]
    fn factorization_recomposes(n in 1u64..10_000_000) {
        let factors = factorize(n).unwrap();
        let product: u64 = factors.iter().map(|&(p, e)| p.get().pow(e)).product();
        prop_assert_eq!(product, n);
        for &(p, e) in &factors {
            prop_assert_eq!(p_adic_valuation(p, n), e);
        }
    }

    #[test]
    fn expansion_evaluates_to_approximation(n in 1u64..10_000) {
        let z = symbolic_expression(n).unwrap().evaluate();
        prop_assert!((z - approx_arg_zeta(n)).abs() < 1e-9, "n = {}", n);
        let g = symbolic_gamma_expression(n).unwrap().evaluate();
        prop_assert!((g - approx_arg_gamma(n)).abs() < 1e-9, "n = {}", n);
    }

    #[test]
    fn principal_arguments_stay_in_range(t in 0.5f64..9_999.0) {
        let g = arg_gamma_quarter(t);
        prop_assert!(g > -1.0 && g <= 1.0);
        if let Ok(z) = arg_zeta_principal(t) {
            prop_assert!(z > -1.0 && z <= 1.0);
        }
        let n = t.ceil() as u64;
        prop_assert!(approx_arg_zeta(n) > -1.0 && approx_arg_zeta(n) <= 1.0);
        prop_assert!(approx_arg_gamma(n) > -1.0 && approx_arg_gamma(n) <= 1.0);
    }

    #[test]
    fn hardy_z_modulus_matches_zeta(t in 2.0f64..3_000.0) {
        let z = hardy_z(t).unwrap();
        let zeta = zeta_critical_line(t).unwrap();
        prop_assert!((z.abs() - zeta.norm()).abs() < 1e-8 * (1.0 + zeta.norm()), "t = {}", t);
        // e^{i theta} zeta is real and equals Z
        let rotated = zeta * Complex64::from_polar(1.0, theta_exact(t));
        prop_assert!(rotated.im.abs() < 1e-8 * (1.0 + zeta.norm()), "t = {}", t);
        prop_assert!((rotated.re - z).abs() < 1e-8 * (1.0 + zeta.norm()), "t = {}", t);
    }

    #[test]
    fn cache_round_trip(mut raw in prop::collection::vec(0.5f64..999.0, 0..200)) {
        raw.sort_by(f64::total_cmp);
        raw.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
        let rounded: Vec<f64> = raw.iter().map(|y| format!("{y:.12}").parse().unwrap()).collect();
        let list = ZeroList::new(rounded, ZeroSource::Scanned, (0.0, 1000.0)).unwrap();
        let mut buf = Vec::new();
        write_zero_cache(&mut buf, &list, None).unwrap();
        let (back, header) = read_zero_cache(buf.as_slice()).unwrap();
        prop_assert_eq!(back, list);
        prop_assert_eq!(header.source, ZeroSource::Scanned);
        prop_assert_eq!(header.span, Some((0.0, 1000.0)));
    }
}
