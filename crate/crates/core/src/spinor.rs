//! Fixed convention tables: epsilon tensors, Pauli/sigma matrices, Weyl-basis
//! Dirac matrices and the Minkowski metric.
//!
//! Spinor and internal indices are 1-based in the public API (matching the
//! usual physics notation) and 0-based in storage. Spacetime indices run
//! `0..4`.

use std::sync::OnceLock;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{Failure, VerificationReport};
use crate::scalar::{GaussianRational, Scalar};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EpsilonKind {
    SpinorUndotted,
    SpinorDotted,
    Internal,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variance {
    Upper,
    Lower,
}

/// One 2×2 antisymmetric epsilon table.
#[derive(Clone, Debug, PartialEq)]
pub struct Epsilon2 {
    pub kind: EpsilonKind,
    pub variance: Variance,
    entries: [[i64; 2]; 2],
}

impl Epsilon2 {
    pub fn new(kind: EpsilonKind, variance: Variance) -> Self {
        // ε_{12} = ε_{1̇2̇} = 1, ε^{12} = ε^{1̇2̇} = −1, and for the internal
        // tensor −ε^{12} = ε^{21} = ε_{12} = −ε_{21} = 1. All three kinds share
        // the same numeric tables.
        let entries = match variance {
            Variance::Lower => [[0, 1], [-1, 0]],
            Variance::Upper => [[0, -1], [1, 0]],
        };
        Epsilon2 {
            kind,
            variance,
            entries,
        }
    }

    /// Entry at 1-based indices.
    pub fn get(&self, i: usize, j: usize) -> Result<GaussianRational> {
        if !(1..=2).contains(&i) || !(1..=2).contains(&j) {
            return Err(Error::IndexOutOfRange(format!(
                "epsilon indices ({i}, {j}) must lie in 1..=2"
            )));
        }
        Ok(GaussianRational::from_integer(self.entries[i - 1][j - 1]))
    }

    /// Entry at 0-based indices, for internal loops.
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn matrix(&self) -> Matrix {
        Matrix::from_fn(2, |r, c| Scalar::from_int(self.entries[r][c]))
    }
}

pub fn epsilon_lookup(
    kind: EpsilonKind,
    variance: Variance,
    i: usize,
    j: usize,
) -> Result<GaussianRational> {
    Epsilon2::new(kind, variance).get(i, j)
}

/// Lowered-index numeric ε_{ij} (0-based), identical for all kinds.
pub(crate) fn eps_lower(i: usize, j: usize) -> i64 {
    [[0, 1], [-1, 0]][i][j]
}

/// Raised-index numeric ε^{ij} (0-based), identical for all kinds.
pub(crate) fn eps_upper(i: usize, j: usize) -> i64 {
    [[0, -1], [1, 0]][i][j]
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndexDirection {
    Raise,
    Lower,
}

/// `ψ_α = ε_{αβ} ψ^β` (lower) or `ψ^α = ε^{αβ} ψ_β` (raise).
pub fn spinor_raise_lower(
    v: &[Scalar; 2],
    direction: IndexDirection,
    kind: EpsilonKind,
) -> [Scalar; 2] {
    let eps = Epsilon2::new(
        kind,
        match direction {
            IndexDirection::Raise => Variance::Upper,
            IndexDirection::Lower => Variance::Lower,
        },
    );
    let row = |a: usize| {
        let mut acc = Scalar::zero();
        for (b, vb) in v.iter().enumerate() {
            let e = eps.at(a, b);
            if e != 0 {
                acc += &vb.scale(&GaussianRational::from_integer(e));
            }
        }
        acc
    };
    [row(0), row(1)]
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Signature {
    /// diag(1, −1, −1, −1), the signature the sigma and gamma tables obey.
    MostlyMinus,
    /// diag(−1, 1, 1, 1); exposed only to show which identities then fail.
    MostlyPlus,
}

impl Signature {
    pub fn eta(self, mu: usize) -> i64 {
        let s = if mu == 0 { 1 } else { -1 };
        match self {
            Signature::MostlyMinus => s,
            Signature::MostlyPlus => -s,
        }
    }
}

pub fn pauli() -> [Matrix; 3] {
    let i = Scalar::i();
    let z = Scalar::zero;
    [
        Matrix::from_ints(&[&[0, 1], &[1, 0]]),
        Matrix::from_rows(vec![vec![z(), -&i], vec![i.clone(), z()]]).expect("2x2"),
        Matrix::from_ints(&[&[1, 0], &[0, -1]]),
    ]
}

/// σ^μ_{αα̇}, σ̄^{μ α̇α}, Γ^μ and η^{μν}.
#[derive(Clone, Debug)]
pub struct SigmaSet {
    pub sigma: [Matrix; 4],
    pub sigma_bar: [Matrix; 4],
    pub gamma: [Matrix; 4],
    pub eta: Matrix,
}

/// One failed anticommutator identity from [`SigmaSet::clifford_residuals`].
#[derive(Clone, Debug)]
pub struct ConventionResidual {
    pub identity: &'static str,
    pub mu: usize,
    pub nu: usize,
    pub residual: Matrix,
}

impl SigmaSet {
    fn assemble() -> SigmaSet {
        let [s1, s2, s3] = pauli();
        let one = Matrix::identity(2);
        let sigma = [one.clone(), s1.clone(), s2.clone(), s3.clone()];
        let sigma_bar = [one, -&s1, -&s2, -&s3];
        let gamma = std::array::from_fn(|mu| {
            Matrix::from_fn(4, |r, c| match (r < 2, c < 2) {
                (true, false) => sigma[mu].get(r, c - 2).clone(),
                (false, true) => sigma_bar[mu].get(r - 2, c).clone(),
                _ => Scalar::zero(),
            })
        });
        let eta = Matrix::from_fn(4, |r, c| {
            if r == c {
                Scalar::from_int(Signature::MostlyMinus.eta(r))
            } else {
                Scalar::zero()
            }
        });
        SigmaSet {
            sigma,
            sigma_bar,
            gamma,
            eta,
        }
    }

    /// Every violated identity among `σ^μσ̄^ν + σ^νσ̄^μ = 2η^{μν}`,
    /// `σ̄^μσ^ν + σ̄^νσ^μ = 2η^{μν}` and `{Γ^μ, Γ^ν} = 2η^{μν}` in the given
    /// signature, plus hermiticity of each σ^μ.
    pub fn clifford_residuals(&self, signature: Signature) -> Vec<ConventionResidual> {
        let mut out = Vec::new();
        for mu in 0..4 {
            for nu in 0..4 {
                let eta = if mu == nu { signature.eta(mu) } else { 0 };
                let two_eta = |n| Matrix::scalar(n, Scalar::from_int(2 * eta));
                let checks = [
                    (
                        "sigma sigma-bar",
                        &(&(&self.sigma[mu] * &self.sigma_bar[nu])
                            + &(&self.sigma[nu] * &self.sigma_bar[mu]))
                            - &two_eta(2),
                    ),
                    (
                        "sigma-bar sigma",
                        &(&(&self.sigma_bar[mu] * &self.sigma[nu])
                            + &(&self.sigma_bar[nu] * &self.sigma[mu]))
                            - &two_eta(2),
                    ),
                    (
                        "gamma gamma",
                        &self.gamma[mu].anticommutator(&self.gamma[nu]).expect("4x4") - &two_eta(4),
                    ),
                ];
                for (identity, residual) in checks {
                    if !residual.is_zero() {
                        out.push(ConventionResidual {
                            identity,
                            mu,
                            nu,
                            residual,
                        });
                    }
                }
            }
            let h = &self.sigma[mu].adjoint() - &self.sigma[mu];
            if !h.is_zero() {
                out.push(ConventionResidual {
                    identity: "sigma hermitian",
                    mu,
                    nu: mu,
                    residual: h,
                });
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let m = |x: &Matrix| -> Vec<Vec<String>> {
            x.rows()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect()
        };
        json!({
            "sigma": self.sigma.iter().map(m).collect::<Vec<_>>(),
            "sigma_bar": self.sigma_bar.iter().map(m).collect::<Vec<_>>(),
            "gamma": self.gamma.iter().map(m).collect::<Vec<_>>(),
            "eta": m(&self.eta),
        })
    }
}

/// Build and validate the tables; fails only if the tables themselves are wrong.
pub fn build_sigma() -> Result<SigmaSet> {
    let set = SigmaSet::assemble();
    let bad = set.clifford_residuals(Signature::MostlyMinus);
    if let Some(r) = bad.first() {
        return Err(Error::ConventionViolation(format!(
            "{} identity fails at (μ, ν) = ({}, {})",
            r.identity, r.mu, r.nu
        )));
    }
    Ok(set)
}

/// Shared validated tables.
pub fn sigma_set() -> &'static SigmaSet {
    static SET: OnceLock<SigmaSet> = OnceLock::new();
    SET.get_or_init(|| build_sigma().expect("convention tables are consistent"))
}

/// σ^μ_{αα̇} at 0-based spinor indices.
pub(crate) fn sigma_entry(mu: usize, a: usize, ad: usize) -> &'static Scalar {
    sigma_set().sigma[mu].get(a, ad)
}

/// Stated epsilon values as `(kind, variance, i, j, value)`, 1-based.
const STATED_EPSILON: [(EpsilonKind, Variance, usize, usize, i64); 8] = [
    (EpsilonKind::SpinorUndotted, Variance::Lower, 1, 2, 1),
    (EpsilonKind::SpinorDotted, Variance::Lower, 1, 2, 1),
    (EpsilonKind::SpinorUndotted, Variance::Upper, 1, 2, -1),
    (EpsilonKind::SpinorDotted, Variance::Upper, 1, 2, -1),
    (EpsilonKind::Internal, Variance::Upper, 1, 2, -1),
    (EpsilonKind::Internal, Variance::Upper, 2, 1, 1),
    (EpsilonKind::Internal, Variance::Lower, 1, 2, 1),
    (EpsilonKind::Internal, Variance::Lower, 2, 1, -1),
];

/// Epsilon tables against the stated values (plus antisymmetry), and the
/// anticommutator identities of σ, σ̄ and Γ in the mostly-minus signature.
pub fn convention_reports() -> Vec<VerificationReport> {
    let label = |kind: EpsilonKind, variance: Variance, i: usize, j: usize| {
        vec![
            format!("{kind:?}"),
            format!("{variance:?}"),
            i.to_string(),
            j.to_string(),
        ]
    };
    let mut eps = VerificationReport::new("epsilon-tables", "Epsilon2");
    for (kind, variance, i, j, v) in STATED_EPSILON {
        eps.total += 1;
        let got = epsilon_lookup(kind, variance, i, j).expect("indices in range");
        if got != GaussianRational::from_integer(v) {
            eps.failures.push(Failure::new(
                label(kind, variance, i, j),
                got.to_string().into(),
            ));
        }
    }
    for kind in [
        EpsilonKind::SpinorUndotted,
        EpsilonKind::SpinorDotted,
        EpsilonKind::Internal,
    ] {
        for variance in [Variance::Lower, Variance::Upper] {
            let e = Epsilon2::new(kind, variance);
            for i in 0..2 {
                for j in 0..2 {
                    eps.total += 1;
                    if e.at(i, j) != -e.at(j, i) {
                        eps.failures.push(Failure::new(
                            label(kind, variance, i + 1, j + 1),
                            "not antisymmetric".into(),
                        ));
                    }
                }
            }
        }
    }
    let set = SigmaSet::assemble();
    let mut cliff = VerificationReport::new("clifford-identities", "sigma/gamma mostly-minus");
    // Three anticommutator identities per (μ, ν) and one hermiticity check per μ.
    cliff.total = 3 * 16 + 4;
    for r in set.clifford_residuals(Signature::MostlyMinus) {
        cliff.failures.push(Failure::new(
            vec![r.identity.to_string(), r.mu.to_string(), r.nu.to_string()],
            r.residual.to_sparse_json(),
        ));
    }
    vec![eps, cliff]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_examples() {
        let lower12 = epsilon_lookup(EpsilonKind::SpinorUndotted, Variance::Lower, 1, 2).unwrap();
        assert!(lower12.is_one());
        let upper12 = epsilon_lookup(EpsilonKind::SpinorUndotted, Variance::Upper, 1, 2).unwrap();
        assert_eq!(upper12, GaussianRational::from_integer(-1));
        let internal = epsilon_lookup(EpsilonKind::Internal, Variance::Upper, 1, 2).unwrap();
        assert_eq!(internal, GaussianRational::from_integer(-1));
        assert!(matches!(
            epsilon_lookup(EpsilonKind::Internal, Variance::Upper, 0, 2),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn epsilon_tables_are_antisymmetric() {
        for kind in [
            EpsilonKind::SpinorUndotted,
            EpsilonKind::SpinorDotted,
            EpsilonKind::Internal,
        ] {
            for var in [Variance::Upper, Variance::Lower] {
                let e = Epsilon2::new(kind, var);
                for i in 1..=2 {
                    assert!(e.get(i, i).unwrap().is_zero());
                    for j in 1..=2 {
                        assert_eq!(e.get(i, j).unwrap(), -e.get(j, i).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn lower_then_raise() {
        let v = [Scalar::one(), Scalar::zero()];
        let low = spinor_raise_lower(&v, IndexDirection::Lower, EpsilonKind::SpinorUndotted);
        assert_eq!(low, [Scalar::zero(), Scalar::from_int(-1)]);
        let back = spinor_raise_lower(&low, IndexDirection::Raise, EpsilonKind::SpinorUndotted);
        assert_eq!(back, v);
        let zero = [Scalar::zero(), Scalar::zero()];
        assert_eq!(
            spinor_raise_lower(&zero, IndexDirection::Lower, EpsilonKind::SpinorDotted),
            zero
        );
    }

    #[test]
    fn sigma_and_gamma_shapes() {
        let set = build_sigma().unwrap();
        assert_eq!(set.sigma[0], Matrix::identity(2));
        let g2 = &set.gamma[2];
        let [_, s2, _] = pauli();
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(g2.get(r, c + 2), s2.get(r, c));
                assert_eq!(*g2.get(r + 2, c), -s2.get(r, c));
                assert!(g2.get(r, c).is_zero());
                assert!(g2.get(r + 2, c + 2).is_zero());
            }
        }
    }

    #[test]
    fn opposite_signature_breaks_clifford_relations() {
        let set = build_sigma().unwrap();
        assert!(set.clifford_residuals(Signature::MostlyMinus).is_empty());
        let bad = set.clifford_residuals(Signature::MostlyPlus);
        // Only the diagonal entries change: 4 values of μ, three identities each.
        assert_eq!(bad.len(), 12);
    }

    #[test]
    fn convention_reports_pass() {
        let r = convention_reports();
        assert_eq!(r[0].total, 8 + 24);
        assert!(r.iter().all(VerificationReport::passed));
    }
}
