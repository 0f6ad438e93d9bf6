//! Clifford algebras of polynomials: `(Σ x_k M_k)^d = f(x)·1`, and the
//! clock-and-shift generalised Clifford matrices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{Failure, VerificationReport};
use crate::scalar::{GaussianRational, Scalar, Symbol};
use crate::susy::LittleAlgebraRep;

/// `Σ_k x_k M_k` with named indeterminates.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm {
    indeterminates: Vec<Symbol>,
    matrices: Vec<Matrix>,
}

impl LinearForm {
    pub fn new(indeterminates: Vec<Symbol>, matrices: Vec<Matrix>) -> Result<Self> {
        if indeterminates.len() != matrices.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} indeterminates for {} matrices",
                indeterminates.len(),
                matrices.len()
            )));
        }
        if let Some(first) = matrices.first() {
            for m in &matrices[1..] {
                first.check_same_dim(m)?;
            }
        }
        let unique: BTreeSet<&Symbol> = indeterminates.iter().collect();
        if unique.len() != indeterminates.len() {
            return Err(Error::validation(
                "distinct indeterminates",
                "an indeterminate is repeated",
            ));
        }
        Ok(LinearForm {
            indeterminates,
            matrices,
        })
    }

    pub fn indeterminates(&self) -> &[Symbol] {
        &self.indeterminates
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn dim(&self) -> usize {
        self.matrices.first().map_or(0, Matrix::dim)
    }

    pub fn symbol_set(&self) -> BTreeSet<Symbol> {
        self.indeterminates.iter().cloned().collect()
    }

    /// The symbolic matrix `Σ_k x_k M_k`.
    pub fn assemble(&self) -> Matrix {
        let mut out = Matrix::zeros(self.dim());
        for (x, m) in self.indeterminates.iter().zip(&self.matrices) {
            out += &m.scale(&Scalar::symbol(x.name()));
        }
        out
    }
}

/// A target polynomial with its declared degree.
#[derive(Clone, Debug, PartialEq)]
pub struct PolynomialTarget {
    pub poly: Scalar,
    pub degree: u32,
}

impl PolynomialTarget {
    /// Checks homogeneity in the given indeterminates; other symbols count
    /// as parameters.
    pub fn new(poly: Scalar, degree: u32, indeterminates: &BTreeSet<Symbol>) -> Result<Self> {
        if degree == 0 || !poly.is_homogeneous_in(indeterminates, degree) {
            return Err(Error::InhomogeneousTarget(degree));
        }
        Ok(PolynomialTarget { poly, degree })
    }
}

/// Expand `(Σ x_k M_k)^d` and compare with `f·1` entry by entry.
pub fn clifford_verify(form: &LinearForm, target: &PolynomialTarget) -> Result<VerificationReport> {
    if target.degree < 2 {
        return Err(Error::validation(
            "degree at least two",
            format!("degree {}", target.degree),
        ));
    }
    if !target
        .poly
        .is_homogeneous_in(&form.symbol_set(), target.degree)
    {
        return Err(Error::InhomogeneousTarget(target.degree));
    }
    let power = form.assemble().pow(target.degree);
    let expected = Matrix::scalar(form.dim(), target.poly.clone());
    let residual = &power - &expected;
    let mut report = VerificationReport::new("clifford", &format!("degree {}", target.degree));
    for r in 0..form.dim() {
        for c in 0..form.dim() {
            report.total += 1;
            let e = residual.get(r, c);
            if !e.is_zero() {
                report.failures.push(Failure::new(
                    vec![r.to_string(), c.to_string()],
                    e.to_string().into(),
                ));
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Compatibility {
    pub compatible: bool,
    /// `P` with `(Σ x_k M_k)² = P·1`, when it exists.
    pub quadratic: Option<Scalar>,
    pub square: Matrix,
}

pub fn quadratic_compatibility_check(form: &LinearForm) -> Compatibility {
    let square = form.assemble().pow(2);
    let quadratic = square.as_scalar();
    Compatibility {
        compatible: quadratic.is_some(),
        quadratic,
        square,
    }
}

/// `C = diag(1, i, −1, −i)`.
pub fn clock() -> Matrix {
    let mut c = Matrix::zeros(4);
    for (k, v) in [
        GaussianRational::one(),
        GaussianRational::i(),
        GaussianRational::from_integer(-1),
        -&GaussianRational::i(),
    ]
    .into_iter()
    .enumerate()
    {
        c.set(k, k, Scalar::constant(v));
    }
    c
}

/// `S|b⟩ = |b+1 mod 4⟩`.
pub fn shift() -> Matrix {
    Matrix::from_fn(4, |r, c| {
        if r == (c + 1) % 4 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

#[derive(Clone, Debug)]
pub struct GeneralizedClifford {
    pub form: LinearForm,
    pub target: PolynomialTarget,
    /// `e_k⁴`, each `±1`.
    pub fourth_powers: Vec<Scalar>,
}

/// `n` matrices with `e_j e_k = i·e_k e_j` for `j < k`.
///
/// Slot `s` carries `C` for `e_{2s−1}` and `S` for `e_{2s}`, preceded by
/// `W = C³S` in every earlier slot and followed by identities. `CS = i·SC`
/// and `W` `i`-commutes with both `C` and `S`; `W⁴ = −1`, so generators in
/// even-numbered slots have `e_k⁴ = −1` and the target is `Σ e_k⁴ x_k⁴`.
pub fn build_generalized_clifford(n: usize) -> Result<GeneralizedClifford> {
    if n == 0 {
        return Err(Error::validation("at least one generator", "n = 0"));
    }
    let (c, s) = (clock(), shift());
    let w = &c.pow(3) * &s;
    let slots = n.div_ceil(2);
    let mut matrices = Vec::with_capacity(n);
    for k in 0..n {
        let slot = k / 2;
        let mut acc = Matrix::identity(1);
        for t in 0..slots {
            let f = match t.cmp(&slot) {
                std::cmp::Ordering::Less => w.clone(),
                std::cmp::Ordering::Equal if k % 2 == 0 => c.clone(),
                std::cmp::Ordering::Equal => s.clone(),
                std::cmp::Ordering::Greater => Matrix::identity(4),
            };
            acc = acc.kron(&f);
        }
        matrices.push(acc);
    }
    let indeterminates: Vec<Symbol> = (1..=n).map(|k| Symbol::new(&format!("x{k}"))).collect();
    let fourth_powers: Vec<Scalar> = matrices
        .iter()
        .map(|m| {
            m.pow(4)
                .as_scalar()
                .expect("clock-shift words have scalar fourth powers")
        })
        .collect();
    let mut poly = Scalar::zero();
    for (x, e4) in indeterminates.iter().zip(&fourth_powers) {
        poly += &(&Scalar::symbol(x.name()).pow(4) * e4);
    }
    let form = LinearForm::new(indeterminates, matrices)?;
    let target = PolynomialTarget::new(poly, 4, &form.symbol_set())?;
    Ok(GeneralizedClifford {
        form,
        target,
        fourth_powers,
    })
}

/// `x_I a^I + y^I a†_I` over the oscillators of the little-algebra representation.
pub fn oscillator_form(little: &LittleAlgebraRep) -> Result<LinearForm> {
    let mut names = Vec::with_capacity(8);
    let mut mats = Vec::with_capacity(8);
    for k in 0..4 {
        names.push(Symbol::new(&format!("x{}", k + 1)));
        mats.push(little.oscillators[k].clone());
    }
    for k in 0..4 {
        names.push(Symbol::new(&format!("y{}", k + 1)));
        mats.push(little.duals[k].clone());
    }
    LinearForm::new(names, mats)
}

/// `Σ_I c_I x_I y_I`.
pub fn pairing_polynomial(c: &[Scalar; 4]) -> Scalar {
    let mut p = Scalar::zero();
    for (k, ck) in c.iter().enumerate() {
        let xy = &Scalar::symbol(&format!("x{}", k + 1)) * &Scalar::symbol(&format!("y{}", k + 1));
        p += &(&xy * ck);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spinor::pauli;

    fn syms(n: &[&str]) -> Vec<Symbol> {
        n.iter().map(|s| Symbol::new(s)).collect()
    }

    #[test]
    fn pauli_square_is_euclidean_norm() {
        let form = LinearForm::new(syms(&["x", "y", "w"]), pauli().to_vec()).unwrap();
        let p: Scalar = "x^2 + y^2 + w^2".parse().unwrap();
        let t = PolynomialTarget::new(p, 2, &form.symbol_set()).unwrap();
        assert!(clifford_verify(&form, &t).unwrap().passed());
    }

    #[test]
    fn clock_fourth_power() {
        let form = LinearForm::new(syms(&["x"]), vec![clock()]).unwrap();
        let t = PolynomialTarget::new("x^4".parse().unwrap(), 4, &form.symbol_set()).unwrap();
        assert!(clifford_verify(&form, &t).unwrap().passed());
    }

    #[test]
    fn single_pauli_is_compatible() {
        let form = LinearForm::new(syms(&["x"]), vec![pauli()[0].clone()]).unwrap();
        let c = quadratic_compatibility_check(&form);
        assert_eq!(c.quadratic, Some("x^2".parse().unwrap()));
    }

    #[test]
    fn inhomogeneous_target_is_rejected() {
        let form = LinearForm::new(syms(&["x"]), vec![clock()]).unwrap();
        assert!(matches!(
            PolynomialTarget::new("x^4 + x".parse().unwrap(), 4, &form.symbol_set()),
            Err(Error::InhomogeneousTarget(4))
        ));
        // Parameters do not count towards the degree.
        assert!(PolynomialTarget::new("m*x^4".parse().unwrap(), 4, &form.symbol_set()).is_ok());
    }

    #[test]
    fn mismatched_form_is_rejected() {
        assert!(LinearForm::new(syms(&["x", "y"]), vec![clock()]).is_err());
        assert!(matches!(
            LinearForm::new(syms(&["x", "y"]), vec![clock(), Matrix::identity(2)]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn clock_and_shift_i_commute() {
        let (c, s) = (clock(), shift());
        let i = Scalar::i();
        assert_eq!(&c * &s, (&s * &c).scale(&i));
    }

    #[test]
    fn generalized_clifford_relations() {
        for n in 1..=4 {
            let g = build_generalized_clifford(n).unwrap();
            let m = g.form.matrices();
            assert_eq!(g.form.dim(), 4usize.pow(n.div_ceil(2) as u32));
            for j in 0..n {
                for k in j + 1..n {
                    assert_eq!(
                        &m[j] * &m[k],
                        (&m[k] * &m[j]).scale(&Scalar::i()),
                        "e{j} e{k}"
                    );
                }
            }
            assert!(
                clifford_verify(&g.form, &g.target).unwrap().passed(),
                "n = {n}"
            );
            if n >= 2 {
                assert!(!quadratic_compatibility_check(&g.form).compatible);
            }
        }
    }

    #[test]
    fn second_slot_generators_have_negative_fourth_power() {
        let g = build_generalized_clifford(3).unwrap();
        let one = Scalar::one();
        assert_eq!(g.fourth_powers, vec![one.clone(), one.clone(), -&one]);
    }
}
