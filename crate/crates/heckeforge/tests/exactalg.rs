use heckeforge::exactalg::linalg::Mat;
use heckeforge::exactalg::*;
use heckeforge::hecke::{HeckeAlgebra, Sign};
use heckeforge::psmod::{c_closed, c_rank1_numeric, Calibration, UnramChar};

fn z() -> RatFrac {
    RatFrac::from_poly(LaurentPoly::var(1, 2))
}

fn one() -> RatFrac {
    RatFrac::one()
}

/// `(1 - q^-1 z^2)/(1 - z^2)`.
fn gk() -> RatFrac {
    let z2 = z().mul(&z());
    one().sub(&RatFrac::q_pow(-1).mul(&z2)).div(&one().sub(&z2)).unwrap()
}

#[test]
fn arithmetic_examples() {
    let a = one().div(&one().sub(&z())).unwrap();
    let b = z().neg().div(&one().sub(&z())).unwrap();
    assert!(a.add(&b).eq_val(&one()));

    let v = RatFrac::v_pow(1);
    let vv = v.mul(&v);
    let (exps, c) = vv.as_poly().unwrap().as_monomial().unwrap();
    assert_eq!(exps[0], 2);
    assert!(exps[1..].iter().all(|&e| e == 0));
    assert_eq!(c, qi(1));
    assert!(vv.eq_val(&RatFrac::q_pow(1)));

    let z2 = z().mul(&z());
    let prod = gk().mul(&one().sub(&z2));
    assert!(prod.eq_val(&one().sub(&RatFrac::q_pow(-1).mul(&z2))));
    assert_eq!(gk().to_string(), "(1 - q^-1 z^2)/(1 - z^2)");
}

#[test]
fn division_by_zero() {
    assert_eq!(rf_arith(&one(), &RatFrac::zero(), ArithOp::Div).unwrap_err(), AlgError::DivisionByZero);
    assert!(RatFrac::new(LaurentPoly::one(1), LaurentPoly::zero(1)).is_err());
    assert!(rf_arith(&z(), &one(), ArithOp::Sub).is_ok());
}

#[test]
fn specialize_examples() {
    assert_eq!(gk().specialize(&[(1, Q::from_integer(0.into()))]).unwrap().as_constant(), Some(qi(1)));
    assert_eq!(gk().eval(&[qi(3), q(1, 2)]).unwrap(), q(35, 27));
    let e = 0;
    assert_eq!(RatFrac::v_pow(-e).eval(&[qi(3)]).unwrap(), qi(1));
    // |2|^{1/2} at p = 2
    assert_eq!(RatFrac::v_pow(-1).eval(&[qi(2)]).unwrap(), q(1, 2));
    let pole = one().div(&one().sub(&z())).unwrap();
    assert!(matches!(pole.specialize(&[(1, qi(1))]), Err(AlgError::VanishingDenominator { .. })));
    assert!(gk().specialize(&[(7, qi(1))]).unwrap().eq_val(&gk()));
    assert!(matches!(LaurentPoly::one(2).specialize(&[(7, qi(1))]), Err(AlgError::UnknownVariable(7))));
}

#[test]
fn series_examples() {
    let s = rf_series(&gk(), 1, 4).unwrap();
    let c = one().sub(&RatFrac::q_pow(-1));
    let expect = [one(), RatFrac::zero(), c.clone(), RatFrac::zero(), c];
    for (a, b) in s.iter().zip(&expect) {
        assert!(a.eq_val(b));
    }
    let geo = rf_series(&one().div(&one().sub(&z())).unwrap(), 1, 2).unwrap();
    assert!(geo.iter().all(|c| c.eq_val(&one())));
    let shifted = rf_series(&z().div(&one().sub(&z())).unwrap(), 1, 1).unwrap();
    assert!(shifted[0].is_zero() && shifted[1].eq_val(&one()));
    let pole = one().div(&z()).unwrap();
    assert!(matches!(rf_series(&pole, 1, 2), Err(AlgError::PoleAtZero { .. })));
}

#[test]
fn cauchy_product_of_series() {
    let a = rf_series(&gk(), 1, 5).unwrap();
    let b = rf_series(&one().div(&one().sub(&z())).unwrap(), 1, 5).unwrap();
    let ab = rf_series(&gk().div(&one().sub(&z())).unwrap(), 1, 5).unwrap();
    for (x, y) in cauchy_product(&a, &b).iter().zip(&ab) {
        assert!(x.eq_val(y));
    }
}

fn samples(f: impl Fn(&Q) -> Q, xs: &[Q]) -> Vec<(Q, Q)> {
    xs.iter().map(|x| (x.clone(), f(x))).collect()
}

#[test]
fn reconstruct_examples() {
    let xs: Vec<Q> = [2, 3, 5, 7, 11].iter().map(|&k| q(k, 13)).collect();
    let f = |x: &Q| (Q::from_integer(1.into()) - x) / (Q::from_integer(1.into()) + x);
    let r = rf_reconstruct(&samples(f, &xs), (1, 1)).unwrap();
    let expect = one().sub(&z()).div(&one().add(&z())).unwrap();
    assert!(r.eq_val(&expect));

    let r = rf_reconstruct(&samples(|_| qi(7), &xs[..3]), (0, 0)).unwrap();
    assert!(r.eq_val(&RatFrac::from_q(qi(7))));

    // order independence
    let mut rev = samples(f, &xs);
    rev.reverse();
    assert_eq!(rf_reconstruct(&rev, (1, 1)).unwrap().to_string(), expect.to_string());

    assert!(matches!(rf_reconstruct(&samples(f, &xs[..3]), (1, 1)), Err(AlgError::TooFewSamples { .. })));
    let dup = vec![(qi(1), qi(1)), (qi(1), qi(1)), (qi(2), qi(3))];
    assert_eq!(rf_reconstruct(&dup, (0, 0)).unwrap_err(), AlgError::RepeatedPoint);
    let cubic = samples(|x| x * x * x, &xs);
    assert!(matches!(rf_reconstruct(&cubic, (1, 1)), Err(AlgError::InconsistentSamples(1, 1))));
}

#[test]
fn reconstruct_spherical_eigenvalue() {
    // oracle: the rank-one intertwiner eigenvalue computed by module linear algebra
    let v = qi(3);
    let g = HeckeAlgebra::specialized(1, Sign::Plus, v.clone());
    let cal = Calibration::derive(&v).unwrap();
    let pts: Vec<(Q, Q)> = [q(2, 7), q(3, 5), q(5, 11), q(7, 4), q(11, 3), q(13, 17)]
        .into_iter()
        .map(|zz| {
            let chi = UnramChar::new(vec![zz.recip()]).unwrap();
            (zz, c_rank1_numeric(&g, &cal, 1, &chi).unwrap())
        })
        .collect();
    let r = rf_reconstruct(&pts, (2, 2)).unwrap();
    let closed = c_closed(1, Sign::Plus, &[1], None).unwrap().specialize(&[(0, v)]).unwrap();
    assert!(r.eq_val(&closed));
}

#[test]
fn json_round_trip() {
    for f in [gk(), RatFrac::from_q(q(-3, 4)), z().mul(&RatFrac::v_pow(-3))] {
        let j = f.to_json();
        let back = RatFrac::from_json(&j).unwrap();
        assert!(back.eq_val(&f));
        assert_eq!(back.to_json(), j);
        let s = serde_json::to_string(&j).unwrap();
        assert!(s.contains("\"num\"") && s.contains("\"exps\""));
    }
}

#[test]
fn rational_strings() {
    assert_eq!(parse_q(" -6/4 ").unwrap(), q(-3, 2));
    assert_eq!(q_to_string(&q(10, 5)), "2");
    assert!(parse_q("1/0").is_err());
    assert!(parse_q("x").is_err());
}

#[test]
fn linear_algebra() {
    let m = Mat::from_rows(vec![vec![qi(1), qi(2)], vec![qi(2), qi(4)]]);
    assert_eq!(m.rank(), 1);
    let ns = m.nullspace();
    assert_eq!(ns.len(), 1);
    assert!(m.mul_vec(&ns[0]).iter().all(|x| *x == qi(0)));
    let a = Mat::from_rows(vec![vec![qi(2), qi(1)], vec![qi(1), qi(1)]]);
    let inv = a.inverse().unwrap();
    assert_eq!(a.mul(&inv).to_rows(), Mat::identity(2).to_rows());
    assert!(m.inverse().is_none());
    assert_eq!(a.solve(&[qi(3), qi(2)]).unwrap(), vec![qi(1), qi(1)]);
}
