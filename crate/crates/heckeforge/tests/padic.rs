use heckeforge::exactalg::{q, rf_series, LaurentPoly, RatFrac};
use heckeforge::padic::*;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PRIMES: [u64; 3] = [2, 3, 5];

fn psi(p: u64) -> AdditiveCharacter {
    AdditiveCharacter::standard(p, max_precision(p))
}

fn random_unit(p: u64, rng: &mut ChaCha8Rng) -> u128 {
    loop {
        let u = rng.gen_range(1..10_000u128);
        if u % p as u128 != 0 {
            return u;
        }
    }
}

fn random_num(p: u64, rng: &mut ChaCha8Rng, vals: std::ops::RangeInclusive<i64>) -> PadicNum {
    PadicNum::new(p, rng.gen_range(vals), random_unit(p, rng), max_precision(p)).unwrap()
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() < tol
}

#[test]
fn arithmetic() {
    let p = 3;
    let prec = 20;
    let a = PadicNum::from_q(p, &q(5, 9), prec).unwrap();
    assert_eq!(a.val, Some(-2));
    let b = PadicNum::from_q(p, &q(-4, 9), prec).unwrap();
    let s = a.add(&b);
    assert_eq!(s.val, Some(-2));
    assert_eq!(s, PadicNum::from_q(p, &q(1, 9), prec).unwrap());
    // cancellation lowers precision
    let c = PadicNum::from_q(p, &q(1, 1), prec).unwrap().add(&PadicNum::from_q(p, &q(2, 1), prec).unwrap());
    assert_eq!(c.val, Some(1));
    assert_eq!(c.prec, prec - 1);
    let x = PadicNum::from_q(p, &q(7, 12), prec).unwrap();
    let one = x.mul(&x.inv().unwrap());
    assert_eq!(one, PadicNum::from_i64(p, 1, prec).unwrap());
    assert!(x.sub(&x).is_zero());
    assert_eq!(PadicNum::from_i64(2, 12, 10).unwrap().abs(), 0.25);
}

#[test]
fn psi_examples() {
    let one = Complex64::new(1.0, 0.0);
    for p in PRIMES {
        assert_eq!(psi(p).eval(&PadicNum::zero(p, 10)).unwrap(), one);
    }
    let third = psi(3).eval(&PadicNum::from_q(3, &q(1, 3), 20).unwrap()).unwrap();
    assert!(close(third.powi(3), one, 1e-12) && !close(third, one, 1e-6));
    let two = psi(2).eval(&PadicNum::from_i64(2, 2, 20).unwrap()).unwrap();
    assert!(close(two, -one, 1e-12));
    assert!(close(psi(2).eval(&PadicNum::from_i64(2, 4, 20).unwrap()).unwrap(), one, 1e-12));
    // nontrivial on 4 p^-1 o
    assert!(!close(psi(3).eval(&PadicNum::from_q(3, &q(4, 3), 20).unwrap()).unwrap(), one, 1e-6));
}

#[test]
fn psi_is_additive() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for p in PRIMES {
        let ch = psi(p);
        for _ in 0..50 {
            let x = random_num(p, &mut rng, -4..=3);
            let y = random_num(p, &mut rng, -4..=3);
            let lhs = ch.eval(&x.add(&y)).unwrap();
            let rhs = ch.eval(&x).unwrap() * ch.eval(&y).unwrap();
            assert!(close(lhs, rhs, 1e-9));
            assert!((lhs.norm() - 1.0).abs() < 1e-12);
        }
    }
}

#[test]
fn insufficient_precision() {
    let x = PadicNum::new(3, -5, 1, 3).unwrap();
    assert!(matches!(psi(3).eval(&x), Err(PadicError::InsufficientPrecision { .. })));
}

#[test]
fn selfdual_measure_values() {
    for p in PRIMES {
        let ch = psi(p);
        let expected = if p == 2 { 2f64.sqrt() } else { 1.0 };
        assert!((selfdual_measure(&ch) - expected).abs() < 1e-12);
        assert!((selfdual_measure_numeric(&ch).unwrap() - expected).abs() < 1e-12);
        // deepening the conductor by one step scales mu(o) by q^{1/2}
        let deeper = AdditiveCharacter { c: ch.c + 1, ..ch };
        assert!((selfdual_measure(&deeper) / selfdual_measure(&ch) - (p as f64).sqrt()).abs() < 1e-12);
        assert!((selfdual_measure_numeric(&deeper).unwrap() - selfdual_measure(&deeper)).abs() < 1e-12);
    }
}

#[test]
fn gamma_is_eighth_root_and_square_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for p in PRIMES {
        let ch = psi(p);
        for _ in 0..50 {
            let a = random_num(p, &mut rng, -3..=3);
            let g = weil_gamma(&ch, &a).unwrap();
            assert!((g.norm() - 1.0).abs() < 1e-8);
            assert!(close(g.powi(8), Complex64::new(1.0, 0.0), 1e-8));
            let b = random_num(p, &mut rng, -2..=2);
            let gb = weil_gamma(&ch, &a.mul(&b).mul(&b)).unwrap();
            assert!(close(g, gb, 1e-8), "p = {p}");
        }
    }
}

#[test]
fn gamma_odd_units_are_one() {
    // for odd p and psi of conductor o, units give an unramified Gauss integral
    for p in [3u64, 5] {
        for u in 1..p as u128 {
            let a = PadicNum::new(p, 0, u, max_precision(p)).unwrap();
            assert!(close(weil_gamma(&psi(p), &a).unwrap(), Complex64::new(1.0, 0.0), 1e-10));
        }
    }
}

#[test]
fn gamma_stable_under_precision() {
    // p = 5 is 1 mod 4: compare against a lower working precision
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10 {
        let u = random_unit(5, &mut rng) % 625;
        let v = rng.gen_range(-2..=2);
        let hi = weil_gamma(&psi(5), &PadicNum::new(5, v, u, max_precision(5)).unwrap()).unwrap();
        let lo_psi = AdditiveCharacter::standard(5, 12);
        let lo = weil_gamma(&lo_psi, &PadicNum::new(5, v, u, 12).unwrap()).unwrap();
        assert!(close(hi, lo, 1e-10));
    }
}

#[test]
fn unit_integral_table() {
    for p in PRIMES {
        for k in 0..=4 {
            let got = unit_integral(&psi(p), k).unwrap();
            assert!(close(got, Complex64::new(unit_integral_expected(p, k), 0.0), 1e-9), "p = {p}, k = {k}");
        }
    }
    assert!((unit_integral_expected(3, 0) - 2.0 / 3.0).abs() < 1e-15);
    assert!((unit_integral_expected(2, 2) - 0.5 * 0.5f64.sqrt()).abs() < 1e-15);
}

#[test]
fn model_examples() {
    let ch = psi(2);
    // o / 2o inside r = 0
    let delta = FiniteWeilModel::embed(ch, 0, 1, &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)]).unwrap();
    let f = delta.fourier().unwrap();
    for v in &f.values {
        assert!(close(*v, Complex64::new(0.5f64.sqrt(), 0.0), 1e-12));
    }
    // upper(t), t in o, fixes functions supported on 2o
    let s = FiniteWeilModel::balanced_s(&ch, 2);
    let two_o = FiniteWeilModel::indicator(ch, 2, s, 1);
    let t = PadicNum::from_i64(2, 3, 20).unwrap();
    assert!(two_o.upper(&t).unwrap().max_diff(&two_o) < 1e-12);
    // lower(t) fixes the indicator of o
    let o = FiniteWeilModel::indicator(ch, 2, s, 0);
    for t in 0..4 {
        let t = if t == 0 { PadicNum::zero(2, 20) } else { PadicNum::from_i64(2, t, 20).unwrap() };
        assert!(o.lower(&t).unwrap().max_diff(&o) < 1e-12);
    }
}

#[test]
fn fourier_squared_is_parity() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for p in PRIMES {
        let ch = psi(p);
        let r = 1;
        let s = FiniteWeilModel::balanced_s(&ch, r);
        let mut m = FiniteWeilModel::zeros(ch, r, s);
        for v in m.values.iter_mut() {
            *v = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let ff = m.fourier().unwrap().fourier().unwrap();
        assert!(ff.max_diff(&m.parity()) < 1e-12);
    }
}

#[test]
fn model_too_small() {
    let ch = psi(3);
    let m = FiniteWeilModel::indicator(ch, 1, 1, -1);
    let t = PadicNum::new(3, -3, 1, 20).unwrap();
    assert!(matches!(m.upper(&t), Err(PadicError::ModelTooSmall(_))));
    assert!(matches!(FiniteWeilModel::zeros(ch, 1, 3).fourier(), Err(PadicError::ModelTooSmall(_))));
}

fn random_phi(p: u64, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    let n = ppow(p, e_of(p) as u32) as usize;
    (0..n).map(|_| Complex64::new(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0))).collect()
}

#[test]
fn rank1_series_matches_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for p in PRIMES {
        let expected = expected_rank1_series(p, 6).unwrap();
        for _ in 0..3 {
            let got = rank1_series(p, 6, &random_phi(p, &mut rng), 1).unwrap();
            for (g, e) in got.iter().zip(&expected) {
                assert!(close(*g, Complex64::new(*e, 0.0), 1e-8), "p = {p}");
            }
        }
    }
}

#[test]
fn rank1_series_examples() {
    let r = rank1_series(3, 3, &[Complex64::new(1.0, 0.0)], 1).unwrap();
    for (g, e) in r.iter().zip([1.0, 0.0, 2.0 / 3.0, 0.0]) {
        assert!(close(*g, Complex64::new(e, 0.0), 1e-10));
    }
    let r = rank1_series(2, 0, &[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], 2).unwrap();
    assert!(close(r[0], Complex64::new(0.5f64.sqrt(), 0.0), 1e-10));
    // phi whose transform vanishes at 0
    let bad = rank1_series(2, 1, &[Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)], 1);
    assert!(matches!(bad, Err(PadicError::Precondition(_))));
}

#[test]
fn expected_series_is_the_closed_form() {
    // independent: 1 + (1 - 1/q)(z^2 + z^4 + ..) scaled by |2|^{1/2}
    for p in PRIMES {
        let s = expected_rank1_series(p, 6).unwrap();
        let scale = if p == 2 { 0.5f64.sqrt() } else { 1.0 };
        for (k, c) in s.iter().enumerate() {
            let e = if k == 0 {
                scale
            } else if k % 2 == 0 {
                scale * (1.0 - 1.0 / p as f64)
            } else {
                0.0
            };
            assert!((c - e).abs() < 1e-12);
        }
    }
}

#[test]
fn iwasawa_zeta() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for p in [2u64, 3] {
        for _ in 0..10 {
            let t = random_num(p, &mut rng, -2..=-1);
            let r = (-t.val.unwrap()) as u32 + 1;
            let z = iwasawa_zeta_check(&t, r, 1e-6).unwrap();
            assert!(z.pass, "p = {p}, t = {t}, zeta = {}, gamma = {}", z.zeta, z.gamma);
        }
    }
    // unit squares do not change zeta
    let t = PadicNum::new(3, -1, 2, 20).unwrap();
    let u = PadicNum::new(3, 0, 5, 20).unwrap();
    let a = iwasawa_zeta_check(&t, 2, 1e-8).unwrap();
    let b = iwasawa_zeta_check(&t.mul(&u).mul(&u), 2, 1e-8).unwrap();
    assert!(a.pass && b.pass && close(a.zeta, b.zeta, 1e-8));
    assert!(matches!(iwasawa_zeta_check(&u, 2, 1e-8), Err(PadicError::Precondition(_))));
}

#[test]
fn gl2_series() {
    let c = gl2_gk_numeric(5, 3);
    for (a, b) in c.iter().zip([1.0, 0.8, 0.8, 0.8]) {
        assert!((a - b).abs() < 1e-12);
    }
    // matches the expansion of (1 - q^-1 z)/(1 - z) at q = 5
    let z = RatFrac::from_poly(LaurentPoly::var(1, 2));
    let one = RatFrac::one();
    let f = one.sub(&RatFrac::q_pow(-1).mul(&z)).div(&one.sub(&z)).unwrap();
    let s = rf_series(&f, 1, 5).unwrap();
    let g = gl2_gk_numeric(5, 5);
    for (a, b) in s.iter().zip(&g) {
        assert!((eval_f64(a, &[5f64.sqrt(), 0.0]) - b).abs() < 1e-12);
    }
}
