//! Randomized invariants across the library.

use heckeforge::exactalg::*;
use heckeforge::hecke::{HeckeAlgebra, HeckeElt, Sign};
use heckeforge::padic::{AdditiveCharacter, PadicNum};
use heckeforge::psmod::{c_closed, c_minus_rank1, eval_point, matched_d_function, UnramChar};
use heckeforge::weyl::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn rat() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| q(a, b))
}

fn nonzero_rat() -> impl Strategy<Value = Q> {
    rat().prop_filter("nonzero", |x| *x != qi(0))
}

/// Laurent polynomial in `(v, z)` with exponents in `lo..=2`.
fn poly(lo: i32, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-2i32..=2, lo..=2, rat()), 0..=max_terms)
        .prop_map(|ts| LaurentPoly::from_terms(2, ts.into_iter().map(|(a, b, c)| (vec![a, b], c))))
}

fn ratfrac() -> impl Strategy<Value = RatFrac> {
    (poly(-2, 3), poly(-2, 3).prop_filter("nonzero", |d| !d.is_zero()))
        .prop_map(|(n, d)| RatFrac::new(n, d).unwrap())
}

/// Fractions regular at `z = 0`: `z`-exponents are nonnegative and the
/// denominator has a nonzero constant in `z`.
fn regular_at_zero() -> impl Strategy<Value = RatFrac> {
    (poly(0, 3), nonzero_rat(), poly(0, 2)).prop_map(|(n, c, d)| {
        let z = LaurentPoly::var(1, 2);
        let den = LaurentPoly::constant(c, 2).add(&d.mul(&z));
        RatFrac::new(n, den).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms(a in ratfrac(), b in ratfrac(), c in ratfrac()) {
        prop_assert!(a.add(&b).add(&c).eq_val(&a.add(&b.add(&c))));
        prop_assert!(a.mul(&b).mul(&c).eq_val(&a.mul(&b.mul(&c))));
        prop_assert!(a.mul(&b.add(&c)).eq_val(&a.mul(&b).add(&a.mul(&c))));
        prop_assert!(a.add(&b).eq_val(&b.add(&a)));
        prop_assert!(a.mul(&b).eq_val(&b.mul(&a)));
        prop_assert!(a.sub(&a).is_zero());
        if !b.is_zero() {
            prop_assert!(a.div(&b).unwrap().mul(&b).eq_val(&a));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn specialize_commutes(a in ratfrac(), b in ratfrac(), x in nonzero_rat(), var in 0usize..2) {
        let bind = [(var, x)];
        let (Ok(sa), Ok(sb)) = (a.specialize(&bind), b.specialize(&bind)) else {
            return Ok(());
        };
        let ops = [(a.add(&b), sa.add(&sb)), (a.sub(&b), sa.sub(&sb)), (a.mul(&b), sa.mul(&sb))];
        for (whole, parts) in ops {
            prop_assert!(whole.specialize(&bind).unwrap().eq_val(&parts));
        }
        if !sb.is_zero() {
            prop_assert!(a.div(&b).unwrap().specialize(&bind).unwrap().eq_val(&sa.div(&sb).unwrap()));
        }
    }

    #[test]
    fn series_of_product_is_cauchy_product(a in regular_at_zero(), b in regular_at_zero()) {
        let order = 5;
        let sa = rf_series(&a, 1, order).unwrap();
        let sb = rf_series(&b, 1, order).unwrap();
        let sab = rf_series(&a.mul(&b), 1, order).unwrap();
        let cp = cauchy_product(&sa, &sb);
        prop_assert_eq!(sab.len(), order + 1);
        for k in 0..=order {
            prop_assert!(sab[k].eq_val(&cp[k]), "k = {}", k);
        }
    }

    #[test]
    fn reconstruct_inverts_sampling(
        num in prop::collection::vec(rat(), 1..=3),
        den in prop::collection::vec(rat(), 0..=2),
    ) {
        // den = 1 + d_1 z + d_2 z^2
        let horner = |c: &[Q], x: &Q| c.iter().rev().fold(qi(0), |acc, k| acc * x + k);
        let mut dc = vec![qi(1)];
        dc.extend(den.iter().cloned());
        let pts: Vec<(Q, Q)> = (1..=12)
            .map(|k| q(k, 7) - qi(1))
            .filter(|x| horner(&dc, x) != qi(0))
            .take(num.len() - 1 + dc.len() - 1 + 2)
            .map(|x| {
                let y = horner(&num, &x) / horner(&dc, &x);
                (x, y)
            })
            .collect();
        let r = rf_reconstruct(&pts, (num.len() - 1, dc.len() - 1)).unwrap();
        let to_poly = |c: &[Q]| {
            LaurentPoly::from_terms(2, c.iter().enumerate().map(|(i, k)| (vec![0, i as i32], k.clone())))
        };
        let f = RatFrac::new(to_poly(&num), to_poly(&dc)).unwrap();
        prop_assert!(r.eq_val(&f), "{} vs {}", r, f);
    }
}

fn word_weight(sys: &AffineSystem, p: &WeightProfile, w: &[usize]) -> i64 {
    w.iter().map(|&l| sys.weighted_length(&sys.gen(l).unwrap().elt, p)).sum()
}

fn systems() -> Vec<AffineSystem> {
    (1..=3).flat_map(|n| [AffineSystem::s(n), AffineSystem::sprime(n)]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn weighted_length_independent_of_word(
        which in 0usize..6,
        picks in prop::collection::vec(0usize..4, 0..10),
        seed in any::<u64>(),
    ) {
        let sys = &systems()[which];
        let labels = sys.labels();
        let word: Vec<usize> = picks.iter().map(|&i| labels[i % labels.len()]).collect();
        let x = sys.word_to_elt(&word).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let words: Vec<Vec<usize>> = (0..3).map(|_| sys.random_reduced_word(&x, &mut rng).unwrap()).collect();
        for w in &words {
            prop_assert_eq!(sys.word_to_elt(w).unwrap(), x.clone());
            prop_assert_eq!(w.len() as i64, sys.length(&x));
        }
        for p in [ELL, ELL0, ELL2, ELL_PRIME] {
            let expect = sys.weighted_length(&x, &p);
            for w in &words {
                prop_assert_eq!(word_weight(sys, &p, w), expect);
            }
        }
    }
}

/// `t(lambda) u` with `u` in the finite Weyl group of the Levi.
fn levi_normalizer_elt(m_group: &[AffineElt], lambda: &[i64], k: usize) -> AffineElt {
    AffineElt::t(lambda).mul(&m_group[k % m_group.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn positivity_closed_under_products(
        j in 0usize..3,
        l1 in prop::collection::vec(-3i64..=3, 2),
        l2 in prop::collection::vec(-3i64..=3, 2),
        k1 in 0usize..8,
        k2 in 0usize..8,
    ) {
        let sys = AffineSystem::s(2);
        let js: [&[usize]; 3] = [&[], &[1], &[2]];
        let levi = LeviData::standard(&sys, js[j]).unwrap();
        let mg = sys.subgroup(js[j], 64).unwrap();
        let x = levi_normalizer_elt(&mg, &l1, k1);
        let y = levi_normalizer_elt(&mg, &l2, k2);
        if levi.is_positive(&x) && levi.is_positive(&y) {
            prop_assert!(levi.is_positive(&x.mul(&y)));
        }
    }
}

fn random_elt(g: &HeckeAlgebra<Q>, terms: &[(Vec<usize>, i64)]) -> HeckeElt<Q> {
    let labels = g.sys.labels();
    let mut h = HeckeElt::zero();
    for (picks, c) in terms {
        let w: Vec<usize> = picks.iter().map(|&i| labels[i % labels.len()]).collect();
        h.add_term(g.sys.word_to_elt(&w).unwrap(), qi(*c));
    }
    h
}

fn hecke_terms() -> impl Strategy<Value = Vec<(Vec<usize>, i64)>> {
    prop::collection::vec((prop::collection::vec(0usize..4, 0..=6), -3i64..=3), 1..=2)
}

fn algebras() -> &'static Vec<HeckeAlgebra<Q>> {
    static A: OnceLock<Vec<HeckeAlgebra<Q>>> = OnceLock::new();
    A.get_or_init(|| {
        (1..=3)
            .flat_map(|n| [Sign::Plus, Sign::Minus].map(|s| HeckeAlgebra::specialized(n, s, qi(3))))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn hecke_mul_is_associative(which in 0usize..6, a in hecke_terms(), b in hecke_terms(), c in hecke_terms()) {
        let g = &algebras()[which];
        let (a, b, c) = (random_elt(g, &a), random_elt(g, &b), random_elt(g, &c));
        let lhs = g.mul(&g.mul(&a, &b), &c);
        let rhs = g.mul(&a, &g.mul(&b, &c));
        prop_assert!(lhs.eq_val(&rhs));
    }
}

fn cprime() -> &'static RatFrac {
    static C: OnceLock<RatFrac> = OnceLock::new();
    C.get_or_init(|| c_minus_rank1().unwrap().c)
}

/// Spherical Weyl group elements with a reduced word each.
fn spherical(n: usize, sign: Sign) -> Vec<(AffineElt, Vec<usize>)> {
    let sys = match sign {
        Sign::Plus => AffineSystem::s(n),
        Sign::Minus => AffineSystem::sprime(n),
    };
    let labels = sys.finite_labels();
    sys.subgroup(&labels, 1 << 10)
        .unwrap()
        .into_iter()
        .map(|w| {
            let word = sys.reduced_word(&w).unwrap();
            (w, word)
        })
        .collect()
}

fn cases() -> Vec<(usize, Sign)> {
    vec![(1, Sign::Plus), (2, Sign::Plus), (2, Sign::Minus)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn cocycle_law(
        v in (2i64..=7).prop_map(qi),
        zs in prop::collection::vec((1i64..=13, 1i64..=13).prop_map(|(a, b)| q(a, b + 13)), 2),
    ) {
        for (n, sign) in cases() {
            let cp = (sign == Sign::Minus).then(cprime);
            let sys = match sign {
                Sign::Plus => AffineSystem::s(n),
                Sign::Minus => AffineSystem::sprime(n),
            };
            let chi = UnramChar::new(zs[..n].to_vec()).unwrap();
            let c = |w: &[usize], ch: &UnramChar| c_closed(n, sign, w, cp).unwrap().eval(&eval_point(&v, ch));
            let els = spherical(n, sign);
            let mut checked = 0;
            for (x, wx) in &els {
                for (y, wy) in &els {
                    let xy = x.mul(y);
                    if sys.length(&xy) != wx.len() as i64 + wy.len() as i64 {
                        continue;
                    }
                    let wxy = sys.reduced_word(&xy).unwrap();
                    // characters on a pole of some factor carry no information
                    let (Ok(lhs), Ok(a), Ok(b)) = (c(&wxy, &chi), c(wx, &chi.act(&y.fin)), c(wy, &chi)) else {
                        continue;
                    };
                    let rhs = a * b;
                    prop_assert_eq!(lhs, rhs, "n = {}, x = {:?}, y = {:?}", n, wx, wy);
                    checked += usize::from(!wx.is_empty() && !wy.is_empty());
                }
            }
            // the non-split spherical group at n = 2 has order 2
            prop_assert!(n == 1 || sign == Sign::Minus || checked > 0);
        }
    }

    #[test]
    fn d_over_c_is_power_of_two_norm(e in 0i64..=3, alternate in any::<bool>()) {
        for (n, sign) in cases() {
            let cp = (sign == Sign::Minus).then(cprime);
            for (w, word) in spherical(n, sign) {
                let t = w.fin.signs().iter().filter(|&&s| s < 0).count() as i64;
                let d = matched_d_function(n, sign, &word, e, alternate, cp).unwrap();
                let c = c_closed(n, sign, &word, cp).unwrap();
                let mut k = RatFrac::v_pow((-e * t) as i32);
                if alternate {
                    k = k.mul(&RatFrac::q_pow(-1).neg().pow(t).unwrap());
                }
                prop_assert!(d.div(&c).unwrap().eq_val(&k), "w = {:?}", word);
            }
        }
    }
}

fn padic_num(p: u64, x: i64, shift: i64) -> PadicNum {
    PadicNum::from_i64(p, x, 24).unwrap().shift(shift)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn psi_is_additive(
        pi in 0usize..3,
        x in -10_000i64..10_000,
        y in -10_000i64..10_000,
        sx in -5i64..=3,
        sy in -5i64..=3,
    ) {
        let p = [2u64, 3, 5][pi];
        let psi = AdditiveCharacter::standard(p, 24);
        let (a, b) = (padic_num(p, x, sx), padic_num(p, y, sy));
        let lhs = psi.eval(&a.add(&b)).unwrap();
        let rhs = psi.eval(&a).unwrap() * psi.eval(&b).unwrap();
        prop_assert!((lhs - rhs).norm() < 1e-9);
        prop_assert!((lhs.norm() - 1.0).abs() < 1e-12);
    }
}
