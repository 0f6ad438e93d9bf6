//! The 16-dimensional massive little-algebra representation, built from four
//! fermionic oscillators.

use crate::algebra::{check_super_jacobi, AlgebraPresentation, Element, Representation};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{Failure, LedgerEntry, VerificationReport};
use crate::scalar::{GaussianRational, Scalar};

use super::presentation::{build_n2_presentation, Charge, CENTRAL, MOMENTA};

const fn q(i: usize, a: usize) -> Charge {
    Charge::Q { i, a }
}

const fn qb(i: usize, a: usize) -> Charge {
    Charge::Qbar { i, a }
}

/// `a^I` as `Q^1_α ± Q̄_{2α̇}` combinations.
pub const OSCILLATORS: [[(Charge, i64); 2]; 4] = [
    [(q(1, 1), 1), (qb(2, 2), -1)],
    [(q(1, 2), 1), (qb(2, 1), 1)],
    [(q(1, 1), 1), (qb(2, 2), 1)],
    [(q(1, 2), 1), (qb(2, 1), -1)],
];

/// `a†_I`, the conjugate substitution.
pub const DUALS: [[(Charge, i64); 2]; 4] = [
    [(qb(1, 1), 1), (q(2, 2), -1)],
    [(qb(1, 2), 1), (q(2, 1), 1)],
    [(qb(1, 1), 1), (q(2, 2), 1)],
    [(qb(1, 2), 1), (q(2, 1), -1)],
];

/// `(dual?, I, sign)`.
type Mode = (bool, usize, i64);

/// Each supercharge as `½(±x ± y)` in the oscillators.
const INVERSE: [(Charge, [Mode; 2]); 8] = [
    (q(1, 1), [(false, 0, 1), (false, 2, 1)]),
    (qb(2, 2), [(false, 2, 1), (false, 0, -1)]),
    (q(1, 2), [(false, 1, 1), (false, 3, 1)]),
    (qb(2, 1), [(false, 1, 1), (false, 3, -1)]),
    (qb(1, 1), [(true, 0, 1), (true, 2, 1)]),
    (q(2, 2), [(true, 2, 1), (true, 0, -1)]),
    (qb(1, 2), [(true, 1, 1), (true, 3, 1)]),
    (q(2, 1), [(true, 1, 1), (true, 3, -1)]),
];

fn element(p: &AlgebraPresentation, combo: &[(Charge, i64); 2]) -> Element {
    let mut e = Element::zero();
    for &(c, s) in combo {
        e.add_term(
            p.index_of(&c.name()).expect("supercharge"),
            &Scalar::from_int(s),
        );
    }
    e
}

/// Bilinear extension of the bracket to odd elements.
pub fn bracket_elements(p: &AlgebraPresentation, x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (g, c) in x.terms() {
        out.add_scaled(&p.bracket_with(g, y), c);
    }
    out
}

/// Value of an even element at rest: `P₀ = −i·m`, `P_k = 0`, `Z = z`.
pub fn rest_frame_value(p: &AlgebraPresentation, e: &Element, m: &Scalar, z: &Scalar) -> Scalar {
    let mut out = Scalar::zero();
    for (g, c) in e.terms() {
        let v = match p.name_of(g) {
            "P0" => -(&Scalar::i() * m),
            n if n == CENTRAL => z.clone(),
            _ => Scalar::zero(),
        };
        out += &(c * &v);
    }
    out
}

/// `{a^I, a†_I}` expanded through the structure constants at rest frame.
pub fn oscillator_coefficients(p: &AlgebraPresentation, m: &Scalar, z: &Scalar) -> [Scalar; 4] {
    std::array::from_fn(|k| {
        let e = bracket_elements(p, &element(p, &OSCILLATORS[k]), &element(p, &DUALS[k]));
        rest_frame_value(p, &e, m, z)
    })
}

/// Jordan–Wigner annihilators on `(C²)^{⊗4}`.
pub fn fermionic_modes() -> [Matrix; 4] {
    let lower = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
    let string = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
    let one = Matrix::identity(2);
    std::array::from_fn(|k| {
        let mut acc = Matrix::identity(1);
        for slot in 0..4 {
            let f = match slot.cmp(&k) {
                std::cmp::Ordering::Less => &string,
                std::cmp::Ordering::Equal => &lower,
                std::cmp::Ordering::Greater => &one,
            };
            acc = acc.kron(f);
        }
        acc
    })
}

#[derive(Clone, Debug)]
pub struct LittleAlgebraRep {
    pub presentation: AlgebraPresentation,
    pub rep: Representation,
    pub m: Scalar,
    pub z: Scalar,
    pub coefficients: [Scalar; 4],
    pub oscillators: [Matrix; 4],
    pub duals: [Matrix; 4],
    pub ledger: Vec<LedgerEntry>,
    pub self_check: VerificationReport,
}

fn supercharge_images(a: &[Matrix; 4], ad: &[Matrix; 4]) -> Vec<(Charge, Matrix)> {
    let half = GaussianRational::from_ratio(1, 2);
    INVERSE
        .iter()
        .map(|(c, parts)| {
            let mut acc = Matrix::zeros(a[0].dim());
            for &(dual, k, s) in parts {
                let src = if dual { &ad[k] } else { &a[k] };
                acc += &src.scale(&Scalar::from_int(s));
            }
            (*c, acc.scale_const(&half))
        })
        .collect()
}

fn assemble(
    a: &[Matrix; 4],
    ad: &[Matrix; 4],
    m: &Scalar,
    z: &Scalar,
    name: &str,
) -> Result<Representation> {
    let dim = a[0].dim();
    let mut rep = Representation::new(name, dim)?;
    for (c, img) in supercharge_images(a, ad) {
        rep.insert(&c.name(), img)?;
    }
    rep.insert(MOMENTA[0], Matrix::scalar(dim, -(&Scalar::i() * m)))?;
    for name in &MOMENTA[1..] {
        rep.insert(name, Matrix::zeros(dim))?;
    }
    rep.insert(CENTRAL, Matrix::scalar(dim, z.clone()))?;
    Ok(rep)
}

/// Build the representation with `a^I = c_I b_I`, `a†_I = b†_I`, then check
/// every superalgebra bracket exactly.
pub fn build_little_algebra_rep(m: Scalar, z: Scalar) -> Result<LittleAlgebraRep> {
    let presentation = build_n2_presentation(false)?;
    let coefficients = oscillator_coefficients(&presentation, &m, &z);
    let b = fermionic_modes();
    let oscillators: [Matrix; 4] = std::array::from_fn(|k| b[k].scale(&coefficients[k]));
    let duals: [Matrix; 4] = std::array::from_fn(|k| b[k].transpose());
    let rep = assemble(&oscillators, &duals, &m, &z, "little-algebra-16")?;
    let self_check = check_super_jacobi(&presentation, &rep)?;
    if !self_check.passed() {
        let f = &self_check.failures[0];
        return Err(Error::SelfCheckFailed(format!(
            "bracket at ({}) does not hold",
            f.indices.join(", ")
        )));
    }
    let ledger = coefficient_ledger(&coefficients, &m, &z);
    Ok(LittleAlgebraRep {
        presentation,
        rep,
        m,
        z,
        coefficients,
        oscillators,
        duals,
        ledger,
        self_check,
    })
}

/// The transcribed coefficients `2(2m+Z)` (I = 1, 2) and `2(2m−Z)` (I = 3, 4).
pub fn transcribed_coefficients(m: &Scalar, z: &Scalar) -> [Scalar; 4] {
    let two = Scalar::from_int(2);
    let plus = &two * &(&(&two * m) + z);
    let minus = &two * &(&(&two * m) - z);
    [plus.clone(), plus, minus.clone(), minus]
}

fn coefficient_ledger(c: &[Scalar; 4], m: &Scalar, z: &Scalar) -> Vec<LedgerEntry> {
    let reference = transcribed_coefficients(m, z);
    (0..4)
        .map(|k| {
            let ratio = c[k].constant_ratio(&reference[k]).map(|r| r.to_string());
            let note = match &ratio {
                Some(r) if r == "1" => "agrees".to_string(),
                Some(r) => format!("differs by the constant factor {r}"),
                None => "not proportional; computed value is used".to_string(),
            };
            LedgerEntry {
                topic: format!("{{a^{0}, a†_{0}}} coefficient c_{0}", k + 1),
                computed: c[k].to_string(),
                reference: reference[k].to_string(),
                ratio,
                note,
            }
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DualMode {
    /// `a†_I` as the conjugate transpose of `a^I`.
    Adjoint,
    /// `a†_I` from the conjugate substitution formulas.
    Substitution,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Oscillators {
    pub a: [Matrix; 4],
    pub a_dag: [Matrix; 4],
}

/// Recover `a^I` and `a†_I` from the supercharge images.
pub fn oscillator_substitution(rep: &Representation, mode: DualMode) -> Result<Oscillators> {
    let combine = |combo: &[(Charge, i64); 2]| -> Result<Matrix> {
        let mut acc = Matrix::zeros(rep.dim());
        for &(c, s) in combo {
            acc += &rep.image(&c.name())?.scale(&Scalar::from_int(s));
        }
        Ok(acc)
    };
    let a: Vec<Matrix> = OSCILLATORS.iter().map(combine).collect::<Result<_>>()?;
    let a_dag: Vec<Matrix> = match mode {
        DualMode::Adjoint => a.iter().map(Matrix::adjoint).collect(),
        DualMode::Substitution => DUALS.iter().map(combine).collect::<Result<_>>()?,
    };
    Ok(Oscillators {
        a: a.try_into().expect("four oscillators"),
        a_dag: a_dag.try_into().expect("four duals"),
    })
}

/// At numeric `(m, z)` where every `c_I` is the square of a nonnegative
/// rational, rebuild with `a^I = √c_I b_I`, `a†_I = √c_I b†_I` and check
/// `(Q^I_α)† = Q̄_{Iα̇}` together with every bracket.
pub fn hermiticity_spot_check(
    m: &GaussianRational,
    z: &GaussianRational,
) -> Result<VerificationReport> {
    let p = build_n2_presentation(false)?;
    let (ms, zs) = (Scalar::constant(m.clone()), Scalar::constant(z.clone()));
    let c = oscillator_coefficients(&p, &ms, &zs);
    let mut roots = Vec::with_capacity(4);
    for ck in &c {
        let v = ck.as_constant().expect("numeric bindings give constants");
        let r = v.rational_sqrt().ok_or_else(|| {
            Error::ShapeMismatch(format!(
                "oscillator coefficient {v} is not the square of a nonnegative rational"
            ))
        })?;
        roots.push(r);
    }
    let b = fermionic_modes();
    let a: [Matrix; 4] = std::array::from_fn(|k| b[k].scale_const(&roots[k]));
    let ad: [Matrix; 4] = std::array::from_fn(|k| b[k].transpose().scale_const(&roots[k]));
    let rep = assemble(&a, &ad, &ms, &zs, "little-algebra-16-hermitian")?;
    let mut report = VerificationReport::new("hermiticity", &rep.name);
    for charge in Charge::all().into_iter().filter(|c| !c.is_bar()) {
        let lhs = rep.image(&charge.name())?.adjoint();
        let rhs = rep.image(&charge.adjoint().name())?;
        report.total += 1;
        let residual = &lhs - rhs;
        if !residual.is_zero() {
            report.failures.push(Failure::new(
                vec![charge.name(), charge.adjoint().name()],
                residual.to_sparse_json(),
            ));
        }
    }
    report.merge(check_super_jacobi(&p, &rep)?);
    Ok(report)
}
