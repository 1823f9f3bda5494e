use heckeforge::weyl::*;
use std::collections::{HashMap, HashSet, VecDeque};

/// BFS distances from the identity over words, independent of root counting.
fn bfs_lengths(sys: &AffineSystem, r: usize) -> HashMap<AffineElt, usize> {
    let mut dist = HashMap::new();
    let mut q = VecDeque::new();
    dist.insert(sys.identity(), 0);
    q.push_back(sys.identity());
    while let Some(x) = q.pop_front() {
        let d = dist[&x];
        if d == r {
            continue;
        }
        for g in &sys.gens {
            let y = x.mul(&g.elt);
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                q.push_back(y);
            }
        }
    }
    dist
}

#[test]
fn word_to_elt_examples() {
    let s = AffineSystem::s(2);
    assert!(s.word_to_elt(&[]).unwrap().is_identity());
    let s0 = s.word_to_elt(&[0]).unwrap();
    assert_eq!(s0.trans, vec![1, 0]);
    assert_eq!(s0.fin, SignedPerm::flip(2, 0));
    let sp = AffineSystem::sprime(1).word_to_elt(&[1]).unwrap();
    let s1 = AffineSystem::s(1);
    assert_eq!(sp, s1.word_to_elt(&[1, 0, 1]).unwrap());
    assert_eq!(embed_prime(SystemKind::SPrime, 3, &[1]).unwrap(), AffineSystem::sprime(3).word_to_elt(&[1]).unwrap());
    assert!(s.word_to_elt(&[7]).is_err());
}

#[test]
fn translation_conventions() {
    let s = AffineSystem::s(1);
    assert_eq!(AffineElt::t(&[1]), s.word_to_elt(&[1, 0]).unwrap());
    assert_eq!(s.weighted_length(&AffineElt::t(&[1]), &ELL0), 1);
    let s2 = AffineSystem::s(2);
    assert_eq!(s2.length(&AffineElt::t(&[1, 0])), 4);
    assert_eq!(s2.length(&AffineElt::t(&[1, 1])), 6);
}

#[test]
fn reduce_s1s0s1() {
    let s = AffineSystem::s(1);
    let x = s.word_to_elt(&[1, 0, 1]).unwrap();
    assert_eq!(s.reduced_word(&x).unwrap(), vec![1, 0, 1]);
    let d = bfs_lengths(&s, 3);
    assert_eq!(d[&x], 3);
}

#[test]
fn length_matches_bfs() {
    for n in 1..=2 {
        for sys in [AffineSystem::s(n), AffineSystem::sprime(n)] {
            let d = bfs_lengths(&sys, 6);
            for (x, &l) in &d {
                let w = sys.reduced_word(x).unwrap();
                assert_eq!(w.len(), l);
                assert_eq!(sys.length(x) as usize, l);
                assert_eq!(&sys.word_to_elt(&w).unwrap(), x);
            }
        }
    }
}

#[test]
fn generator_relations() {
    for n in 1..=4 {
        let s = AffineSystem::s(n);
        for g in &s.gens {
            assert!(g.elt.mul(&g.elt).is_identity());
        }
        let m = |a: usize, b: usize| -> usize {
            let d = a.abs_diff(b);
            if d > 1 {
                2
            } else if n == 1 {
                0
            } else if (a.min(b) == 0) || (a.max(b) == n) {
                4
            } else {
                3
            }
        };
        for a in 0..=n {
            for b in 0..=n {
                if a == b || m(a, b) == 0 {
                    continue;
                }
                let ab = s.word_to_elt(&[a, b]).unwrap();
                let mut x = s.identity();
                for _ in 0..m(a, b) {
                    x = x.mul(&ab);
                }
                assert!(x.is_identity(), "n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn weighted_lengths_examples() {
    let s = AffineSystem::s(2);
    assert_eq!(s.weighted_length(&s.gens[0].elt, &ELL0), 0);
    let sp = AffineSystem::sprime(2);
    assert_eq!(sp.weighted_length(&sp.gen(1).unwrap().elt, &ELL_PRIME), 3);
    assert_eq!(sp.weighted_length(&sp.gen(1).unwrap().elt, &ELL2), 2);
    let sp1 = AffineSystem::sprime(1);
    assert_eq!(sp1.weighted_length(&sp1.gen(1).unwrap().elt, &ELL_PRIME), 3);
}

#[test]
fn weighted_length_is_word_sum() {
    let wt = |sys: &AffineSystem, p: &WeightProfile, w: &[usize]| -> i64 {
        w.iter()
            .map(|&l| sys.weighted_length(&sys.gen(l).unwrap().elt, p))
            .sum()
    };
    for n in 1..=3 {
        for sys in [AffineSystem::s(n), AffineSystem::sprime(n)] {
            for x in sys.ball(5) {
                let w = sys.reduced_word(&x).unwrap();
                for p in [ELL, ELL0, ELL2, ELL_PRIME] {
                    assert_eq!(sys.weighted_length(&x, &p), wt(&sys, &p, &w));
                }
            }
        }
    }
}

#[test]
fn flip_count_examples() {
    assert_eq!(flip_count(&SignedPerm::identity(3)), 0);
    assert_eq!(flip_count(&SignedPerm::flip(3, 0)), 1);
    assert_eq!(flip_count(&SignedPerm::minus_identity(3)), 3);
}

#[test]
fn flips_equal_long_node_occurrences() {
    for n in 1..=3 {
        let t = AffineSystem::t(n);
        for u in SignedPerm::all(n) {
            let x = AffineElt::finite(u.clone());
            assert_eq!(occurrence_count(&t, &x, 1, 3, 7).unwrap(), u.flip_count());
        }
    }
}

#[test]
fn embed_prime_examples() {
    assert_eq!(embed_prime_word(SystemKind::TPrime, &[2]).unwrap().1, vec![2, 1, 2]);
    assert_eq!(embed_prime_word(SystemKind::TPrime, &[3]).unwrap().1, vec![3]);
    let t = AffineSystem::t(3);
    let x = embed_prime(SystemKind::TPrime, 3, &[2]).unwrap();
    assert_eq!(t.length(&x), 3);
}

#[test]
fn embed_prime_preserves_reducedness() {
    for n in 2..=3 {
        let tp = AffineSystem::tprime(n);
        let t = AffineSystem::t(n);
        let group = tp.subgroup(&tp.labels(), 1000).unwrap();
        assert_eq!(group.len(), (1 << (n - 1)) * (1..n).product::<usize>());
        for x in group {
            let w = tp.reduced_word(&x).unwrap();
            let k = w.iter().filter(|&&l| l == 2).count();
            let (_, img) = embed_prime_word(SystemKind::TPrime, &w).unwrap();
            assert_eq!(img.len(), w.len() + 2 * k);
            assert_eq!(t.length(&x) as usize, img.len());
            assert_eq!(t.word_to_elt(&img).unwrap(), x);
            assert_eq!(k, x.fin.flip_count());
        }
    }
}

#[test]
fn sprime_rejects_outside_elements() {
    let sp = AffineSystem::sprime(2);
    let s = AffineSystem::s(2);
    assert!(matches!(sp.reduced_word(&s.gens[0].elt), Err(WeylError::NotInSubgroup { .. })));
}

#[test]
fn positivity_examples() {
    let s = AffineSystem::s(2);
    for j in [vec![], vec![1usize], vec![2usize]] {
        let levi = LeviData::standard(&s, &j).unwrap();
        assert!(levi.is_positive(&s.identity()));
        let lam: Vec<i64> = match j.as_slice() {
            [] => vec![2, 1],
            [1] => vec![1, 1],
            _ => vec![1, 0],
        };
        assert!(levi.is_strictly_central_dominant(&lam));
        assert!(levi.is_positive(&AffineElt::t(&lam)));
        let neg: Vec<i64> = lam.iter().map(|x| -x).collect();
        assert!(!levi.is_positive(&AffineElt::t(&neg)));
    }
}

#[test]
fn coset_reps() {
    let t = AffineSystem::t(2);
    assert_eq!(min_coset_reps(&t, &t.finite_labels()).unwrap(), vec![SignedPerm::identity(2)]);
    assert_eq!(min_coset_reps(&AffineSystem::t(1), &[]).unwrap().len(), 2);
    assert_eq!(min_coset_reps(&t, &[2]).unwrap().len(), 4);
}

#[test]
fn poincare_examples() {
    use heckeforge::exactalg::{qi, LaurentPoly};
    let q = LaurentPoly::q_pow(1, 1);
    let one = LaurentPoly::one(1);
    let t1 = AffineSystem::t(1);
    assert_eq!(poincare_poly(&t1, &ELL, &[1]).unwrap(), one.add(&q));
    let t2 = AffineSystem::t(2);
    let expect = one.add(&q).mul(&one.add(&q).add(&q.pow(2)).add(&q.pow(3)));
    assert_eq!(poincare_poly(&t2, &ELL, &[1, 2]).unwrap(), expect);
    assert_eq!(poincare_poly(&t2, &ELL, &[]).unwrap(), LaurentPoly::constant(qi(1), 1));
    assert!(poincare_poly(&AffineSystem::s(1), &ELL, &[0, 1]).is_err());
}

fn minimal_parabolic(n: usize) -> Parabolic {
    Parabolic::new(AffineSystem::tprime(n).positive_finite_roots())
}

#[test]
fn shared_roots_examples() {
    let p = minimal_parabolic(3);
    assert_eq!(shared_reduced_roots(&p, &p).unwrap(), 4);
    assert_eq!(shared_reduced_roots(&p, &p.opposite()).unwrap(), 0);
    let other = Parabolic::new(vec![vec![0, 1, 0]]);
    assert!(shared_reduced_roots(&p, &other).is_err());
}

#[test]
fn separating_roots_are_additive() {
    for n in 2..=3 {
        let tp = AffineSystem::tprime(n);
        let p = minimal_parabolic(n);
        let group = tp.subgroup(&tp.labels(), 1000).unwrap();
        let l = |x: &AffineElt| tp.length(x);
        for v in &group {
            for w in &group {
                let vw = v.mul(w);
                if l(&vw) != l(v) + l(w) {
                    continue;
                }
                let pvw = p.conjugate(&vw.fin);
                let pv = p.conjugate(&v.fin);
                let lhs = separating_reduced_roots(&pvw, &p).unwrap();
                let rhs = separating_reduced_roots(&pvw, &pv).unwrap() + separating_reduced_roots(&pv, &p).unwrap();
                assert_eq!(lhs, rhs);
                assert_eq!(lhs as i64, l(&vw));
            }
        }
    }
}

#[test]
fn literal_intersection_form_is_not_additive() {
    let p = minimal_parabolic(2);
    let d = shared_reduced_roots(&p, &p).unwrap();
    assert_ne!(d, d + d);
}

#[test]
fn levi_systems_have_simple_generators() {
    let s = AffineSystem::s(2);
    let levi = LeviData::standard(&s, &[1]).unwrap();
    let m = levi.levi_system(&s);
    assert_eq!(m.gens.len(), 2);
    let min = LeviData::standard(&s, &[]).unwrap().levi_system(&s);
    assert!(min.gens.is_empty());
    assert_eq!(min.length(&AffineElt::t(&[3, -1])), 0);
    let full = LeviData::standard(&s, &[1, 2]).unwrap().levi_system(&s);
    assert_eq!(full.gens.len(), 3);
    let seen: HashSet<_> = full.gens.iter().map(|g| g.elt.clone()).collect();
    let s_gens: HashSet<_> = s.gens.iter().map(|g| g.elt.clone()).collect();
    assert_eq!(seen, s_gens);
}

#[test]
fn json_round_trip() {
    let s = AffineSystem::s(3);
    let x = s.word_to_elt(&[0, 1, 2, 3, 2]).unwrap();
    let j = serde_json::to_string(&x.to_json()).unwrap();
    let back: AffineEltJson = serde_json::from_str(&j).unwrap();
    assert_eq!(AffineElt::from_json(&back).unwrap(), x);
}

#[test]
fn reversal_maps_t_to_s() {
    for n in 1..=3 {
        let t = AffineSystem::t(n);
        let s = AffineSystem::s(n);
        for i in 1..=n {
            let ti = &t.gen(i).unwrap().elt.fin;
            assert_eq!(&reverse_conjugate(ti), &s.gen(n + 1 - i).unwrap().elt.fin);
        }
    }
}
