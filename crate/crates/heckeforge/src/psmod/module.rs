use super::{PsError, UnramChar};
use crate::exactalg::linalg::Mat;
use crate::exactalg::{q_to_string, Q};
use crate::hecke::{bond_order, spherical_idempotent, theta, HeckeAlgebra, HeckeElt, Sign};
use crate::weyl::AffineElt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Finite-dimensional module given by the matrices of the generators `T_s`.
///
/// Vectors are columns; `gens[i]` acts as the generator at position `i` of
/// the algebra's system. `basis` names each coordinate as `T_w (x) e_j`.
#[derive(Clone, Debug)]
pub struct FinModule {
    pub alg: HeckeAlgebra<Q>,
    pub gens: Vec<Mat>,
    pub basis: Vec<(AffineElt, usize)>,
    pub chi: Option<UnramChar>,
    /// Saturation radius at which the action closed.
    pub radius: usize,
}

impl FinModule {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn sign(&self) -> Sign {
        self.alg.sign
    }

    /// Matrix of `T_x`, from a reduced word.
    pub fn act_basis(&self, x: &AffineElt) -> Result<Mat, PsError> {
        let word = self.alg.sys.reduced_word(x)?;
        let mut m = Mat::identity(self.dim());
        for l in word {
            let idx = self.alg.gen_index(l)?;
            m = m.mul(&self.gens[idx]);
        }
        Ok(m)
    }

    /// Matrix of an algebra element.
    pub fn act(&self, h: &HeckeElt<Q>) -> Result<Mat, PsError> {
        let mut m = Mat::zeros(self.dim(), self.dim());
        for (x, c) in h.terms() {
            m = m.add(&self.act_basis(x)?.scale(c));
        }
        Ok(m)
    }

    /// `tr(T_x)`.
    pub fn trace(&self, x: &AffineElt) -> Result<Q, PsError> {
        Ok(self.act_basis(x)?.trace())
    }

    /// Checks quadratic relations and every finite braid relation as matrix identities.
    pub fn check_relations(&self) -> Result<(), PsError> {
        let d = self.dim();
        let id = Mat::identity(d);
        let k = self.gens.len();
        for i in 0..k {
            let a = &self.gens[i];
            let lhs = a.sub(&id.scale(self.alg.param(i))).mul(&a.add(&id));
            if !lhs.is_zero() {
                return Err(PsError::RelationFailure(format!("quadratic relation of generator {i}")));
            }
        }
        for i in 0..k {
            for j in i + 1..k {
                let Some(m) = bond_order(&self.alg, i, j, 8) else {
                    continue;
                };
                let alt = |a: usize, b: usize| {
                    (0..m).fold(id.clone(), |acc, t| acc.mul(&self.gens[if t % 2 == 0 { a } else { b }]))
                };
                if alt(i, j).to_rows() != alt(j, i).to_rows() {
                    return Err(PsError::RelationFailure(format!("braid relation of bond ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// Coordinate index of the basis label `T_e (x) e_0`.
    pub fn identity_index(&self) -> Option<usize> {
        let e = self.alg.sys.identity();
        self.basis.iter().position(|(w, j)| *w == e && *j == 0)
    }

    /// Image of the spherical idempotent, as a matrix.
    pub fn spherical_projector(&self) -> Result<Mat, PsError> {
        let e = spherical_idempotent(&self.alg)?;
        self.act(&e)
    }

    /// `e [T_e]`, normalized to coordinate 1 on `T_e`.
    pub fn spherical_vector(&self) -> Result<Vec<Q>, PsError> {
        let proj = self.spherical_projector()?;
        let rank = proj.rank();
        if rank != 1 {
            return Err(PsError::ProjectorRank(rank));
        }
        let i0 = self.identity_index().ok_or(PsError::NoIdentityLabel)?;
        let v = proj.col(i0);
        if v[i0].is_zero() {
            return Err(PsError::ProjectorRank(0));
        }
        let inv = v[i0].recip();
        Ok(v.iter().map(|x| x * &inv).collect())
    }

    /// The one-dimensional module `T_s -> values[s]`.
    pub fn character(alg: &HeckeAlgebra<Q>, values: &BTreeMap<usize, Q>) -> Result<Self, PsError> {
        let gens = alg
            .sys
            .gens
            .iter()
            .map(|g| {
                values
                    .get(&g.label)
                    .map(|x| Mat::scalar(1, x))
                    .ok_or(PsError::MissingValue(g.label))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let m = FinModule {
            alg: alg.clone(),
            gens,
            basis: vec![(alg.sys.identity(), 0)],
            chi: None,
            radius: 0,
        };
        m.check_relations()?;
        Ok(m)
    }

    /// Direct sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        let d1 = self.dim();
        let d = d1 + o.dim();
        let gens = self
            .gens
            .iter()
            .zip(&o.gens)
            .map(|(a, b)| {
                let mut m = Mat::zeros(d, d);
                for i in 0..d1 {
                    for j in 0..d1 {
                        m[(i, j)] = a[(i, j)].clone();
                    }
                }
                for i in 0..o.dim() {
                    for j in 0..o.dim() {
                        m[(d1 + i, d1 + j)] = b[(i, j)].clone();
                    }
                }
                m
            })
            .collect();
        let mut basis = self.basis.clone();
        basis.extend(o.basis.iter().cloned());
        FinModule {
            alg: self.alg.clone(),
            gens,
            basis,
            chi: None,
            radius: self.radius.max(o.radius),
        }
    }

    pub fn to_json(&self, algebra_id: &str) -> ModuleJson {
        let generators = self
            .alg
            .sys
            .gens
            .iter()
            .zip(&self.gens)
            .map(|(g, m)| {
                let rows = m
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(q_to_string).collect())
                    .collect();
                (g.label.to_string(), rows)
            })
            .collect();
        ModuleJson {
            algebra_id: algebra_id.to_string(),
            dim: self.dim(),
            char: self.chi.as_ref().map(|c| c.z.iter().map(q_to_string).collect()),
            generators,
        }
    }
}

/// JSON module `{algebra_id, dim, char, generators}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub algebra_id: String,
    pub dim: usize,
    pub char: Option<Vec<String>>,
    pub generators: BTreeMap<String, Vec<Vec<String>>>,
}

/// Matrices of a module over `Q` with `L A1(s) = A2(s) L` for all generators.
///
/// When `m1` is a principal series, `L` is fixed by `w = L [T_e]`, which must
/// satisfy `theta_lambda w = chi(lambda) w`; then `L [T_x] = T_x w`.
pub fn intertwiner_space(m1: &FinModule, m2: &FinModule) -> Vec<Mat> {
    if let Some(hom) = principal_homs(m1, m2) {
        return hom;
    }
    intertwiner_space_generic(m1, m2)
}

fn principal_homs(m1: &FinModule, m2: &FinModule) -> Option<Vec<Mat>> {
    let chi = m1.chi.as_ref()?;
    if m1.basis.iter().any(|(_, j)| *j != 0) {
        return None;
    }
    let n = m2.alg.n();
    let d2 = m2.dim();
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for &i in &m2.alg.sys.coords {
        let mut e = vec![0i64; n];
        e[i] = 1;
        let th = m2.act(&theta(&m2.alg, &e).ok()?).ok()?;
        let shifted = th.sub(&Mat::identity(d2).scale(&chi.z[i]));
        rows.extend(shifted.to_rows());
    }
    let ws = Mat::from_rows(rows).nullspace();
    let mut out = Vec::new();
    for w in ws {
        let cols = m1
            .basis
            .iter()
            .map(|(x, _)| m2.act_basis(x).map(|a| a.mul_vec(&w)))
            .collect::<Result<Vec<_>, _>>()
            .ok()?;
        let l = Mat::from_cols(&cols, d2);
        let ok = m1.gens.iter().zip(&m2.gens).all(|(a1, a2)| l.mul(a1).to_rows() == a2.mul(&l).to_rows());
        if !ok {
            return None;
        }
        out.push(l);
    }
    Some(out)
}

/// `intertwiner_space` by solving for all entries of `L` at once.
pub fn intertwiner_space_generic(m1: &FinModule, m2: &FinModule) -> Vec<Mat> {
    let (d1, d2) = (m1.dim(), m2.dim());
    let unknowns = d1 * d2;
    // L is stored row-major: L[a][b] at a * d1 + b
    let mut rows = Vec::new();
    for (a1, a2) in m1.gens.iter().zip(&m2.gens) {
        for a in 0..d2 {
            for b in 0..d1 {
                let mut row = vec![Q::zero(); unknowns];
                for k in 0..d1 {
                    // (L A1)[a][b] = sum_k L[a][k] A1[k][b]
                    row[a * d1 + k] += &a1[(k, b)];
                }
                for k in 0..d2 {
                    // (A2 L)[a][b] = sum_k A2[a][k] L[k][b]
                    row[k * d1 + b] -= &a2[(a, k)];
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let ns = if rows.is_empty() {
        (0..unknowns)
            .map(|i| {
                let mut x = vec![Q::zero(); unknowns];
                x[i] = Q::one();
                x
            })
            .collect()
    } else {
        Mat::from_rows(rows).nullspace()
    };
    ns.into_iter()
        .map(|x| Mat::from_rows((0..d2).map(|a| x[a * d1..(a + 1) * d1].to_vec()).collect()))
        .collect()
}

/// Dimension of the endomorphism algebra.
pub fn endomorphism_dim(m: &FinModule) -> usize {
    intertwiner_space(m, m).len()
}
