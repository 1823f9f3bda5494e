use super::algebra::HeckeAlgebra;
use super::element::HeckeElt;
use crate::exactalg::Scalar;
use std::collections::BTreeMap;

/// Order of `s t`, or `None` if it exceeds `cap` (an infinite bond).
pub fn bond_order<C: Scalar>(g: &HeckeAlgebra<C>, i: usize, j: usize, cap: usize) -> Option<usize> {
    let st = g.sys.gens[i].elt.mul(&g.sys.gens[j].elt);
    let mut x = st.clone();
    for m in 1..=cap {
        if x.is_identity() {
            return Some(m);
        }
        x = x.mul(&st);
    }
    None
}

/// `(T_s - p_s)(T_s + 1)`; zero for every generator.
pub fn quadratic_defect<C: Scalar>(g: &HeckeAlgebra<C>, idx: usize) -> HeckeElt<C> {
    let e = g.one();
    let t = HeckeElt::basis(g.sys.gens[idx].elt.clone());
    let a = t.sub(&e.scale(g.param(idx)));
    let b = t.add(&e);
    g.mul(&a, &b)
}

/// Alternating product `T_s T_t T_s ..` with `m` factors.
fn alternating<C: Scalar>(g: &HeckeAlgebra<C>, i: usize, j: usize, m: usize) -> HeckeElt<C> {
    let mut r = g.one();
    for k in 0..m {
        r = g.right_mul_gen(&r, if k % 2 == 0 { i } else { j });
    }
    r
}

/// Whether the braid relation of the bond `(i, j)` holds as an element identity.
/// Infinite bonds hold vacuously.
pub fn braid_holds<C: Scalar>(g: &HeckeAlgebra<C>, i: usize, j: usize) -> bool {
    match bond_order(g, i, j, 8) {
        Some(m) => alternating(g, i, j, m).eq_val(&alternating(g, j, i, m)),
        None => true,
    }
}

/// Whether `T_s -> values[s]` extends to a character of the algebra.
///
/// Each value must be a root of `(x - p_s)(x + 1)` and every finite bond
/// must satisfy its braid relation in the commutative target.
pub fn check_character<C: Scalar>(g: &HeckeAlgebra<C>, values: &BTreeMap<usize, C>) -> bool {
    let k = g.sys.gens.len();
    let mut x = Vec::with_capacity(k);
    for (idx, gen) in g.sys.gens.iter().enumerate() {
        let Some(val) = values.get(&gen.label) else {
            return false;
        };
        let quad = val.sub(g.param(idx)).mul(&val.add(&C::one()));
        if !quad.is_zero() {
            return false;
        }
        x.push(val.clone());
    }
    for i in 0..k {
        for j in i + 1..k {
            let Some(m) = bond_order(g, i, j, 8) else {
                continue;
            };
            let lhs = alt_scalar(&x[i], &x[j], m);
            let rhs = alt_scalar(&x[j], &x[i], m);
            if !lhs.eq_val(&rhs) {
                return false;
            }
        }
    }
    true
}

fn alt_scalar<C: Scalar>(a: &C, b: &C, m: usize) -> C {
    let mut r = C::one();
    for k in 0..m {
        r = r.mul(if k % 2 == 0 { a } else { b });
    }
    r
}

/// Value of the character on `T_w`, from a reduced word.
pub fn character_value<C: Scalar>(values: &BTreeMap<usize, C>, word: &[usize]) -> C {
    word.iter().fold(C::one(), |acc, l| acc.mul(&values[l]))
}

/// The character `T_s -> p_s`.
pub fn index_character<C: Scalar>(g: &HeckeAlgebra<C>) -> BTreeMap<usize, C> {
    g.sys
        .gens
        .iter()
        .enumerate()
        .map(|(i, gen)| (gen.label, g.param(i).clone()))
        .collect()
}

/// The character `T_s -> -1`.
pub fn sign_character<C: Scalar>(g: &HeckeAlgebra<C>) -> BTreeMap<usize, C> {
    g.sys.gens.iter().map(|gen| (gen.label, C::one().neg())).collect()
}
