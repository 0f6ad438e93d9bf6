//! Lorentz generators `L_{μν}` for the optional sector of the N=2 algebra.
//!
//! The Lorentz brackets are derived from the standard vector and spinor
//! representations. Each candidate sign/transpose choice is screened against
//! closure and against compatibility with the odd-odd brackets, and the
//! first consistent one is used.

use crate::algebra::{Element, GenIdx, Grade, PresentationBuilder};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational, Scalar};
use crate::spinor::{eps_lower, sigma_set};

/// `(μ, ν)` with `μ < ν`, in generator order.
pub const LORENTZ_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub fn lorentz_name(mu: usize, nu: usize) -> String {
    format!("L{mu}{nu}")
}

fn eta(mu: usize) -> i64 {
    if mu == 0 {
        1
    } else {
        -1
    }
}

/// `(J^{μν})^ρ_σ = δ^ρ_μ η_{νσ} − δ^ρ_ν η_{μσ}`.
pub fn vector_generators() -> Vec<Matrix> {
    LORENTZ_PAIRS
        .iter()
        .map(|&(mu, nu)| {
            Matrix::from_fn(4, |r, s| {
                let mut v = 0;
                if r == mu && s == nu {
                    v += eta(nu);
                }
                if r == nu && s == mu {
                    v -= eta(mu);
                }
                Scalar::from_int(v)
            })
        })
        .collect()
}

/// `¼(σ^μσ̄^ν − σ^νσ̄^μ)`.
pub fn spinor_generators() -> Vec<Matrix> {
    let s = sigma_set();
    let quarter = GaussianRational::from_ratio(1, 4);
    LORENTZ_PAIRS
        .iter()
        .map(|&(mu, nu)| {
            (&(&s.sigma[mu] * &s.sigma_bar[nu]) - &(&s.sigma[nu] * &s.sigma_bar[mu]))
                .scale_const(&quarter)
        })
        .collect()
}

/// Structure constants: `[J_A, J_B] = Σ_C f[A][B][C] J_C`.
pub fn structure_constants(j: &[Matrix]) -> Result<Vec<Vec<Vec<Scalar>>>> {
    let mut f = vec![vec![vec![Scalar::zero(); 6]; 6]; 6];
    for a in 0..6 {
        for b in 0..6 {
            let c = j[a].commutator(&j[b])?;
            // J^{μν} is the only basis element with a nonzero (μ, ν) entry.
            let coeffs: Vec<Scalar> = LORENTZ_PAIRS
                .iter()
                .map(|&(mu, nu)| {
                    c.get(mu, nu)
                        .scale(&GaussianRational::from_integer(eta(nu)))
                })
                .collect();
            if combine(&coeffs, j) != c {
                return Err(Error::ConventionViolation(
                    "Lorentz commutator leaves the span of the generators".into(),
                ));
            }
            f[a][b] = coeffs;
        }
    }
    Ok(f)
}

fn combine(coeffs: &[Scalar], basis: &[Matrix]) -> Matrix {
    let mut out = Matrix::zeros(basis[0].dim());
    for (c, m) in coeffs.iter().zip(basis) {
        out += &m.scale(c);
    }
    out
}

fn is_homomorphism(m: &[Matrix], f: &[Vec<Vec<Scalar>>]) -> bool {
    (0..6).all(|a| (0..6).all(|b| m[a].commutator(&m[b]).ok() == Some(combine(&f[a][b], m))))
}

/// Matrices `V_A` (on `P`), `U_A` (on `Q`), `W_A` (on `Q̄`) with
/// `[L_A, X_i] = Σ_j M_A[j][i] X_j`.
#[derive(Clone, Debug)]
pub struct LorentzAction {
    pub f: Vec<Vec<Vec<Scalar>>>,
    pub vector: Vec<Matrix>,
    pub undotted: Vec<Matrix>,
    pub dotted: Vec<Matrix>,
}

pub fn derive_action() -> Result<LorentzAction> {
    let j = vector_generators();
    let f = structure_constants(&j)?;
    let b = spinor_generators();
    let s = sigma_set();
    let eps = Matrix::from_fn(2, |r, c| Scalar::from_int(eps_lower(r, c)));
    let neg = |m: &Matrix| -m;

    let vector_options: [Vec<Matrix>; 2] = [j.clone(), j.iter().map(|m| -&m.transpose()).collect()];
    let spinor_options: [Vec<Matrix>; 4] = [
        b.clone(),
        b.iter().map(neg).collect(),
        b.iter().map(Matrix::transpose).collect(),
        b.iter().map(|m| -&m.transpose()).collect(),
    ];
    for v in &vector_options {
        if !is_homomorphism(v, &f) {
            continue;
        }
        for u in &spinor_options {
            if !is_homomorphism(u, &f) {
                continue;
            }
            let w: Vec<Matrix> = (0..6)
                .map(|a| {
                    let mut acc = Matrix::zeros(2);
                    for mu in 0..4 {
                        acc += &s.sigma[mu].scale(v[a].get(0, mu));
                    }
                    &acc - &u[a].transpose()
                })
                .collect();
            if !is_homomorphism(&w, &f) {
                continue;
            }
            let intertwines = (0..6).all(|a| {
                (0..4).all(|nu| {
                    let mut lhs = Matrix::zeros(2);
                    for mu in 0..4 {
                        lhs += &s.sigma[mu].scale(v[a].get(nu, mu));
                    }
                    let rhs = &(&u[a].transpose() * &s.sigma[nu]) + &(&s.sigma[nu] * &w[a]);
                    lhs == rhs
                })
            });
            let preserves_eps = |m: &[Matrix]| {
                m.iter()
                    .all(|x| (&(&x.transpose() * &eps) + &(&eps * x)).is_zero())
            };
            if intertwines && preserves_eps(u) && preserves_eps(&w) {
                return Ok(LorentzAction {
                    f,
                    vector: v.clone(),
                    undotted: u.clone(),
                    dotted: w,
                });
            }
        }
    }
    Err(Error::ConventionViolation(
        "no consistent Lorentz action on the supercharges".into(),
    ))
}

/// Append `L01..L23` and their brackets. `p` are the momentum indices, `q` the
/// eight supercharges in `Charge::all` order.
pub(crate) fn add_lorentz_sector(
    b: &mut PresentationBuilder,
    p: &[GenIdx],
    q: &[GenIdx],
) -> Result<()> {
    let action = derive_action()?;
    let l: Vec<GenIdx> = LORENTZ_PAIRS
        .iter()
        .map(|&(mu, nu)| b.generator(&lorentz_name(mu, nu), Grade::BOSONIC))
        .collect::<Result<_>>()?;
    for a in 0..6 {
        for c in a + 1..6 {
            let mut e = Element::zero();
            for (k, coeff) in action.f[a][c].iter().enumerate() {
                e.add_term(l[k], coeff);
            }
            b.bracket(l[a], l[c], e)?;
        }
        let act = |m: &Matrix, targets: &[GenIdx], i: usize| {
            let mut e = Element::zero();
            for (jdx, &t) in targets.iter().enumerate() {
                e.add_term(t, m.get(jdx, i));
            }
            e
        };
        for i in 0..4 {
            b.bracket(l[a], p[i], act(&action.vector[a], p, i))?;
        }
        for block in 0..4 {
            let (m, targets) = if block < 2 {
                (&action.undotted[a], &q[2 * block..2 * block + 2])
            } else {
                (&action.dotted[a], &q[2 * block..2 * block + 2])
            };
            for alpha in 0..2 {
                b.bracket(l[a], targets[alpha], act(m, targets, alpha))?;
            }
        }
    }
    Ok(())
}
