use crate::acceptance;
use crate::config::RunConfig;
use crate::report::{Case, Report};
use heckeforge::exactalg::{qi, Q};
use heckeforge::hecke::{
    braid_holds, quadratic_defect, spherical_idempotent, spherical_labels, theta, HeckeAlgebra, HeckeElt, Sign,
};
use heckeforge::padic::{
    expected_rank1_series, iwasawa_zeta_check, rank1_series, selfdual_measure, selfdual_measure_numeric, unit_integral,
    unit_integral_expected, weil_gamma, AdditiveCharacter, PadicNum,
};
use heckeforge::psmod::{
    c_closed, c_numeric, eval_point, generic_char, induce, Calibration, PsError,
};
use heckeforge::weyl::{embed_prime_word, occurrence_count, AffineElt, AffineSystem, SignedPerm, SystemKind};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

fn coxeter(cfg: &RunConfig) -> Vec<Case> {
    let n = cfg.n;
    let mut cases = Vec::new();
    for sys in [AffineSystem::s(n), AffineSystem::sprime(n)] {
        let name = sys.kind.name();
        let ball = sys.ball(5);
        let bad = ball.iter().filter(|x| match sys.reduced_word(x) {
            Ok(w) => w.len() as i64 != sys.length(x) || sys.word_to_elt(&w).as_ref() != Ok(*x),
            Err(_) => true,
        });
        let bad = bad.count();
        cases.push(Case::check(
            format!("coxeter/{name}/reduced-words"),
            json!({"n": n, "radius": 5}),
            "0 mismatches",
            format!("{bad} mismatches in {} elements", ball.len()),
            bad == 0,
        ));
        let labels = sys.labels();
        let mut braid_bad = 0;
        for (i, &a) in labels.iter().enumerate() {
            for &b in &labels[i + 1..] {
                let (Ok(ga), Ok(gb)) = (sys.gen(a), sys.gen(b)) else {
                    braid_bad += 1;
                    continue;
                };
                let ab = ga.elt.mul(&gb.elt);
                // infinite bonds have no braid relation
                let Some(m) = (1..=8).find(|&k| (0..k).fold(sys.identity(), |acc, _| acc.mul(&ab)).is_identity()) else {
                    continue;
                };
                let w1: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { a } else { b }).collect();
                let w2: Vec<usize> = (0..m).map(|k| if k % 2 == 0 { b } else { a }).collect();
                if sys.word_to_elt(&w1) != sys.word_to_elt(&w2) || sys.length(&sys.word_to_elt(&w1).unwrap_or(sys.identity())) != m as i64 {
                    braid_bad += 1;
                }
            }
        }
        cases.push(Case::check(format!("coxeter/{name}/braid"), json!({"n": n}), "0 failures", format!("{braid_bad} failures"), braid_bad == 0));
    }
    let t = AffineSystem::t(n);
    let flips = SignedPerm::all(n)
        .into_iter()
        .filter(|u| occurrence_count(&t, &AffineElt::finite(u.clone()), 1, 3, cfg.seed).ok() != Some(u.flip_count()))
        .count();
    cases.push(Case::check("coxeter/flips", json!({"n": n}), "0 mismatches", format!("{flips} mismatches"), flips == 0));
    if n >= 2 {
        let tp = AffineSystem::tprime(n);
        let bad = match tp.subgroup(&tp.labels(), 1000) {
            Ok(g) => g
                .iter()
                .filter(|x| {
                    let Ok(w) = tp.reduced_word(x) else { return true };
                    let Ok((_, img)) = embed_prime_word(SystemKind::TPrime, &w) else { return true };
                    t.length(x) as usize != img.len() || t.word_to_elt(&img).as_ref() != Ok(*x)
                })
                .count(),
            Err(_) => usize::MAX,
        };
        cases.push(Case::check("coxeter/primed-transition", json!({"n": n}), "0 mismatches", format!("{bad} mismatches"), bad == 0));
    }
    cases
}

fn hecke(cfg: &RunConfig) -> Vec<Case> {
    let (n, sign) = (cfg.n, cfg.sign);
    let g = HeckeAlgebra::symbolic(n, sign);
    let inputs = json!({"n": n, "sign": sign.symbol()});
    let mut cases = Vec::new();
    let k = g.sys.gens.len();
    let quad = (0..k).filter(|&i| !quadratic_defect(&g, i).is_zero()).count();
    cases.push(Case::check("hecke/quadratic", inputs.clone(), "0 failures", format!("{quad} failures"), quad == 0));
    let braid = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| !braid_holds(&g, i, j)).count();
    cases.push(Case::check("hecke/braid", inputs.clone(), "0 failures", format!("{braid} failures"), braid == 0));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let labels = g.sys.labels();
    let mut inv_bad = 0;
    for _ in 0..20 {
        let len = rng.gen_range(0..=6);
        let word: Vec<usize> = (0..len).map(|_| labels[rng.gen_range(0..labels.len())]).collect();
        let ok = g.sys.word_to_elt(&word).map(|x| g.mul(&HeckeElt::basis(x.clone()), &g.invert_basis(&x)).eq_val(&g.one()));
        inv_bad += (ok != Ok(true)) as usize;
    }
    cases.push(Case::check("hecke/inverses", json!({"n": n, "sign": sign.symbol(), "seed": cfg.seed}), "0 failures", format!("{inv_bad} failures in 20"), inv_bad == 0));
    match spherical_idempotent(&g) {
        Ok(e) => {
            let absorbs = spherical_labels(&g).into_iter().all(|l| match (g.gen(l), g.param_of(l)) {
                (Ok(t), Ok(p)) => g.mul(&t, &e).eq_val(&e.scale(p)),
                _ => false,
            });
            let ok = g.mul(&e, &e).eq_val(&e) && absorbs;
            cases.push(Case::check("hecke/idempotent", inputs.clone(), "idempotent and absorbing", format!("{} terms, ok = {ok}", e.len()), ok));
        }
        Err(e) => cases.push(Case::error("hecke/idempotent", inputs.clone(), "idempotent and absorbing", e)),
    }
    let gq = HeckeAlgebra::specialized(n, sign, qi(2));
    let lam: Vec<i64> = (0..n).map(|i| if sign == Sign::Minus && i == 0 { 0 } else { i as i64 + 1 }).collect();
    let neg: Vec<i64> = lam.iter().map(|x| -x).collect();
    let ok = match (theta(&gq, &lam), theta(&gq, &neg)) {
        (Ok(a), Ok(b)) => gq.mul(&a, &b).eq_val(&gq.one()),
        _ => false,
    };
    cases.push(Case::check("hecke/theta-inverse", json!({"n": n, "sign": sign.symbol(), "lambda": lam}), "theta(l) theta(-l) = T_e", ok.to_string(), ok));
    cases
}

fn psmod(cfg: &RunConfig) -> Vec<Case> {
    let (n, sign) = (cfg.module_rank(), cfg.sign);
    let v = qi(3);
    let g = HeckeAlgebra::specialized(n, sign, v.clone());
    let expected_dim = match sign {
        Sign::Plus => (1usize << n) * (1..=n).product::<usize>(),
        Sign::Minus => (1usize << (n - 1)) * (1..n).product::<usize>(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut cases = Vec::new();
    let cal = Calibration::derive(&v);
    for k in 0..3 {
        let chi = generic_char(&g, &mut rng);
        let zs: Vec<String> = chi.z.iter().map(|z| z.to_string()).collect();
        let inputs = json!({"n": n, "sign": sign.symbol(), "chi": zs});
        let res: Result<(usize, usize), PsError> = induce(&g, &chi).and_then(|m| {
            m.check_relations()?;
            Ok((m.dim(), m.spherical_projector()?.rank()))
        });
        match res {
            Ok((d, r)) => cases.push(Case::check(
                format!("psmod/induce-{k}"),
                inputs.clone(),
                format!("dim {expected_dim}, projector rank 1"),
                format!("dim {d}, projector rank {r}"),
                d == expected_dim && r == 1,
            )),
            Err(e) => cases.push(Case::error(format!("psmod/induce-{k}"), inputs.clone(), "module", e)),
        }
        if sign == Sign::Plus && n <= 2 {
            let w: Vec<usize> = (1..=n).rev().collect();
            let res = (|| -> Result<(Q, Q), PsError> {
                let cal = cal.clone()?;
                let closed = c_closed(n, sign, &w, None)?.eval(&eval_point(&v, &chi))?;
                Ok((closed, c_numeric(&g, &cal, &w, &chi)?))
            })();
            let id = format!("psmod/cfun-{k}");
            match res {
                Ok((a, b)) => cases.push(Case::check(id, json!({"chi": zs, "w": w}), a.to_string(), b.to_string(), a == b)),
                Err(e) => cases.push(Case::error(id, inputs, "c value", e)),
            }
        }
    }
    cases
}

fn padic(cfg: &RunConfig) -> Vec<Case> {
    let p = cfg.p;
    let psi = AdditiveCharacter::standard(p, cfg.precision);
    let mut cases = Vec::new();
    for k in 0..=4 {
        let expected = unit_integral_expected(p, k);
        let inputs = json!({"p": p, "k": k});
        let id = format!("padic/unit-integral-{k}");
        match unit_integral(&psi, k) {
            Ok(z) => {
                let d = (z - Complex64::new(expected, 0.0)).norm();
                cases.push(Case::check(id, inputs, format!("{expected:.12}"), format!("{:.12} (abs_err {d:.1e})", z.re), d < 1e-9));
            }
            Err(e) => cases.push(Case::error(id, inputs, format!("{expected:.12}"), e)),
        }
    }
    let mu = selfdual_measure(&psi);
    let mu_exp = (p as f64).powf(heckeforge::padic::e_of(p) as f64 / 2.0);
    let ok = selfdual_measure_numeric(&psi).map(|m| (m - mu_exp).abs() < 1e-12).unwrap_or(false) && (mu - mu_exp).abs() < 1e-12;
    cases.push(Case::check("padic/selfdual-measure", json!({"p": p}), format!("{mu_exp:.12}"), format!("{mu:.12}"), ok));
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut gbad = 0;
    for _ in 0..20 {
        let u = loop {
            let u = rng.gen_range(1..10_000u128);
            if u % p as u128 != 0 {
                break u;
            }
        };
        let ok = PadicNum::new(p, rng.gen_range(-3..=3), u, cfg.precision)
            .and_then(|a| weil_gamma(&psi, &a))
            .map(|g| (g.norm() - 1.0).abs() < 1e-8 && (g.powi(8) - 1.0).norm() < 1e-8);
        gbad += (ok != Ok(true)) as usize;
    }
    cases.push(Case::check("padic/gamma", json!({"p": p, "seed": cfg.seed}), "|gamma| = 1, gamma^8 = 1", format!("{gbad} failures in 20"), gbad == 0));
    let phi = vec![Complex64::new(1.0, 0.0); heckeforge::padic::ppow(p, heckeforge::padic::e_of(p) as u32) as usize];
    let ok = match (rank1_series(p, 6, &phi, 1), expected_rank1_series(p, 6)) {
        (Ok(a), Ok(b)) => a.iter().zip(&b).all(|(x, y)| (x - Complex64::new(*y, 0.0)).norm() < 1e-8),
        _ => false,
    };
    cases.push(Case::check("padic/rank1-series", json!({"p": p, "kmax": 6}), "closed-form series", ok.to_string(), ok));
    let t = PadicNum::new(p, -1, 1 + p as u128, cfg.precision);
    let z = t.and_then(|t| iwasawa_zeta_check(&t, 2, 1e-6));
    match z {
        Ok(z) => cases.push(Case::check("padic/zeta", json!({"p": p}), format!("{:.9}", z.gamma), format!("{:.9}", z.zeta), z.pass)),
        Err(e) => cases.push(Case::error("padic/zeta", json!({"p": p}), "zeta = gamma", e)),
    }
    cases
}

/// Runs the configured suite; cases are ordered by suite, then by id.
pub fn run_suite(cfg: &RunConfig) -> Report {
    let mut cases = Vec::new();
    let all = cfg.suite == "all";
    if all || cfg.suite == "coxeter" {
        cases.extend(coxeter(cfg));
    }
    if all || cfg.suite == "hecke" {
        cases.extend(hecke(cfg));
    }
    if all || cfg.suite == "psmod" {
        cases.extend(psmod(cfg));
    }
    if all || cfg.suite == "padic" {
        cases.extend(padic(cfg));
    }
    if cfg.suite == "acceptance" {
        cases.extend(acceptance::run_all(cfg.seed));
    }
    Report::new(&cfg.suite, cases)
}
