//! Closed-form four-bracket displays for the N=2 algebra and their
//! comparison against the little-algebra representation.

use rayon::prelude::*;

use crate::algebra::{
    check_generalized_jacobi_tables, evaluate_even_quadratic, fold_ratios, four_bracket_sym,
    multisets, AlgebraKind, AlgebraPresentation, EvenQuadratic, FamilyRatio, GenIdx, Grade,
    Observation, PresentationBuilder,
};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::report::{Failure, LedgerEntry, VerificationReport};
use crate::scalar::{GaussianRational, Scalar};
use crate::spinor::{eps_lower, eps_upper, sigma_entry};

use super::fock::LittleAlgebraRep;
use super::presentation::{Charge, CENTRAL, MOMENTA};

/// All 24 orderings of four items.
fn permutations4<T: Copy>(x: [T; 4]) -> Vec<[T; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    if a != b && a != c && a != d && b != c && b != d && c != d {
                        out.push([x[a], x[b], x[c], x[d]]);
                    }
                }
            }
        }
    }
    out
}

pub const FAMILIES: [&str; 5] = ["QQQQ", "QQQQb", "QQQbQb", "QQbQbQb", "QbQbQbQb"];

fn bar_count(args: &[Charge; 4]) -> usize {
    args.iter().filter(|c| c.is_bar()).count()
}

pub fn family_of(args: &[Charge; 4]) -> &'static str {
    FAMILIES[bar_count(args)]
}

/// Stable reorder putting the `Q` arguments first.
fn q_first(args: [Charge; 4]) -> [Charge; 4] {
    let mut v: Vec<Charge> = args.iter().copied().filter(|c| !c.is_bar()).collect();
    v.extend(args.iter().copied().filter(|c| c.is_bar()));
    [v[0], v[1], v[2], v[3]]
}

/// Evaluate a display given for at most one `Q̄`; families with three or four
/// `Q̄` follow by hermitian conjugation of the arguments and coefficients.
fn conjugated<T>(args: [Charge; 4], given: impl Fn([Charge; 4]) -> T, conj: impl Fn(T) -> T) -> T {
    if bar_count(&args) >= 3 {
        conj(given(q_first(args.map(Charge::adjoint))))
    } else {
        given(q_first(args))
    }
}

fn ix(c: Charge) -> (usize, usize) {
    match c {
        Charge::Q { i, a } | Charge::Qbar { i, a } => (i - 1, a - 1),
    }
}

fn delta(i: usize, j: usize) -> i64 {
    (i == j) as i64
}

/// `Σ_{pairings}` of `ε_{αα}ε_{αα}ε^{II}ε^{II}` over the three pairings.
fn four_q_pattern(args: &[Charge; 4]) -> i64 {
    let x: Vec<(usize, usize)> = args.iter().map(|&c| ix(c)).collect();
    let term = |p: usize, q: usize, r: usize, s: usize| {
        eps_lower(x[p].1, x[q].1)
            * eps_lower(x[r].1, x[s].1)
            * eps_upper(x[p].0, x[q].0)
            * eps_upper(x[r].0, x[s].0)
    };
    term(0, 1, 2, 3) + term(0, 2, 1, 3) + term(0, 3, 1, 2)
}

/// `Σ_k δ^{I_k}_{I₄} ε^{I_l I_n} ε_{α_l α_n} σ^μ_{α_k α̇₄}` for `(Q, Q, Q, Q̄)`.
fn three_q_pattern(args: &[Charge; 4], mu: usize) -> Scalar {
    let x: Vec<(usize, usize)> = args.iter().map(|&c| ix(c)).collect();
    let mut out = Scalar::zero();
    for (k, l, n) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
        let c = delta(x[k].0, x[3].0) * eps_upper(x[l].0, x[n].0) * eps_lower(x[l].1, x[n].1);
        if c != 0 {
            out += &sigma_entry(mu, x[k].1, x[3].1).scale(&GaussianRational::from_integer(c));
        }
    }
    out
}

/// `δ^{I₁}_{I₃}δ^{I₂}_{I₄}σ^μ_{α₁α̇₃}σ^ν_{α₂α̇₄} + δ^{I₁}_{I₄}δ^{I₂}_{I₃}σ^μ_{α₁α̇₄}σ^ν_{α₂α̇₃}`.
fn two_q_sigma_pattern(args: &[Charge; 4], mu: usize, nu: usize) -> Scalar {
    let x: Vec<(usize, usize)> = args.iter().map(|&c| ix(c)).collect();
    let mut out = Scalar::zero();
    if x[0].0 == x[2].0 && x[1].0 == x[3].0 {
        out += &(sigma_entry(mu, x[0].1, x[2].1) * sigma_entry(nu, x[1].1, x[3].1));
    }
    if x[0].0 == x[3].0 && x[1].0 == x[2].0 {
        out += &(sigma_entry(mu, x[0].1, x[3].1) * sigma_entry(nu, x[1].1, x[2].1));
    }
    out
}

/// `ε_{α₁α₂}ε_{α̇₃α̇₄}ε^{I₁I₂}ε_{I₃I₄}`.
fn two_q_eps_pattern(args: &[Charge; 4]) -> i64 {
    let x: Vec<(usize, usize)> = args.iter().map(|&c| ix(c)).collect();
    eps_lower(x[0].1, x[1].1)
        * eps_lower(x[2].1, x[3].1)
        * eps_upper(x[0].0, x[1].0)
        * eps_lower(x[2].0, x[3].0)
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn imag(n: i64) -> Scalar {
    Scalar::i().scale(&GaussianRational::from_integer(n))
}

/// Generator indices of `P0..P3` and `Z` in a presentation.
#[derive(Clone, Copy, Debug)]
pub struct EvenSlots {
    pub p: [GenIdx; 4],
    pub z: Option<GenIdx>,
}

impl EvenSlots {
    pub fn of(p: &AlgebraPresentation) -> Self {
        EvenSlots {
            p: MOMENTA.map(|n| p.index_of(n).expect("momentum generator")),
            z: p.index_of(CENTRAL),
        }
    }
}

/// The induced four-bracket display, written in `Z`, `P_μ`.
pub fn induced_display(slots: EvenSlots, args: [Charge; 4]) -> EvenQuadratic {
    let z = slots.z.expect("induced display needs Z");
    let given = |a: [Charge; 4]| {
        let mut e = EvenQuadratic::zero();
        match bar_count(&a) {
            0 => e.add_sym(z, z, &int(2 * four_q_pattern(&a))),
            1 => {
                for mu in 0..4 {
                    e.add_sym(z, slots.p[mu], &(&imag(-2) * &three_q_pattern(&a, mu)));
                }
            }
            _ => {
                for mu in 0..4 {
                    for nu in 0..4 {
                        let c = two_q_sigma_pattern(&a, mu, nu);
                        e.add_sym(slots.p[mu], slots.p[nu], &(&int(2) * &c));
                    }
                }
                e.add_sym(z, z, &int(2 * two_q_eps_pattern(&a)));
            }
        }
        e
    };
    conjugated(args, given, |e| e.conj())
}

/// The rest-frame display, written directly in `m` and `z`.
pub fn rest_frame_display(m: &Scalar, z: &Scalar, args: [Charge; 4]) -> Scalar {
    let given = |a: [Charge; 4]| match bar_count(&a) {
        0 => &(&int(2) * &z.pow(2)) * &int(four_q_pattern(&a)),
        1 => &(&(&int(2) * m) * z) * &three_q_pattern(&a, 0),
        _ => {
            let pp = &(&int(2) * &m.pow(2)) * &two_q_sigma_pattern(&a, 0, 0);
            let zz = &(&int(2) * &z.pow(2)) * &int(two_q_eps_pattern(&a));
            &pp + &zz
        }
    };
    conjugated(args, given, |s| s.conj())
}

/// The quartic extension of the Poincaré algebra given without central charge:
/// `{QQQQ} = {QQQ̄Q̄} = 0`, `{QQQQ̄} = 2i(δεεσ + …)^μ P_μ`.
pub fn quartic_poincare_display(slots: EvenSlots, args: [Charge; 4]) -> EvenQuadratic {
    let given = |a: [Charge; 4]| {
        let mut e = EvenQuadratic::zero();
        if bar_count(&a) == 1 {
            for mu in 0..4 {
                e.add_linear(slots.p[mu], &(&imag(2) * &three_q_pattern(&a, mu)));
            }
        }
        e
    };
    conjugated(args, given, |e| e.conj())
}

/// Order-four presentation with `P0..P3` and the eight supercharges.
pub fn build_quartic_poincare_presentation() -> Result<AlgebraPresentation> {
    let mut b = PresentationBuilder::new("quartic-poincare", AlgebraKind::OrderFour);
    for n in MOMENTA {
        b.generator(n, Grade::BOSONIC)?;
    }
    let charges = Charge::all();
    let q: Vec<GenIdx> = charges
        .iter()
        .map(|c| b.generator(&c.name(), c.grade()))
        .collect::<Result<_>>()?;
    let slots = EvenSlots {
        p: [0, 1, 2, 3],
        z: None,
    };
    for k in multisets(8, 4) {
        let args = [charges[k[0]], charges[k[1]], charges[k[2]], charges[k[3]]];
        b.quartic(k_to_idx(&q, &k), quartic_poincare_display(slots, args))?;
    }
    b.build()
}

fn k_to_idx(q: &[GenIdx], k: &[usize]) -> [GenIdx; 4] {
    [q[k[0]], q[k[1]], q[k[2]], q[k[3]]]
}

fn names(args: &[Charge]) -> Vec<String> {
    args.iter().map(|c| c.name()).collect()
}

/// Symmetry of the transcribed table over all 24 orderings, then the
/// generalised Jacobi identity at the level of structure constants.
pub fn verify_abstract_quartic_poincare() -> Result<Vec<VerificationReport>> {
    let p = build_quartic_poincare_presentation()?;
    let slots = EvenSlots::of(&p);
    let charges = Charge::all();
    let outcomes: Vec<Option<Failure>> = multisets(8, 4)
        .par_iter()
        .map(|k| {
            let args = [charges[k[0]], charges[k[1]], charges[k[2]], charges[k[3]]];
            let base = quartic_poincare_display(slots, args);
            permutations4(args)
                .into_iter()
                .find(|perm| quartic_poincare_display(slots, *perm) != base)
                .map(|perm| {
                    let diff = quartic_poincare_display(slots, perm).sub(&base);
                    Failure::new(names(&perm), p.render_quadratic(&diff).into())
                })
        })
        .collect();
    let symmetry = VerificationReport::from_outcomes("quartic-symmetry", &p.name, outcomes);
    let jacobi = check_generalized_jacobi_tables(&p)?;
    Ok(vec![symmetry, jacobi])
}

/// Per-family outcome of a display comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyOutcome {
    pub family: &'static str,
    pub ratio: FamilyRatio,
}

#[derive(Clone, Debug)]
pub struct DisplayComparison {
    pub report: VerificationReport,
    pub families: Vec<FamilyOutcome>,
    pub ledger: Vec<LedgerEntry>,
}

fn compare_families(
    check: &str,
    little: &LittleAlgebraRep,
    reference: impl Fn([Charge; 4]) -> Result<Matrix> + Sync,
    display_label: &str,
) -> Result<DisplayComparison> {
    let rep = &little.rep;
    let charges = Charge::all();
    let rows: Vec<(usize, Vec<String>, Observation)> = multisets(8, 4)
        .par_iter()
        .map(|k| {
            let args = [charges[k[0]], charges[k[1]], charges[k[2]], charges[k[3]]];
            let images: Vec<&Matrix> = args
                .iter()
                .map(|c| rep.image(&c.name()))
                .collect::<Result<_>>()?;
            let lhs = four_bracket_sym([images[0], images[1], images[2], images[3]])?;
            let rhs = reference(args)?;
            Ok((
                bar_count(&args),
                names(&args),
                Observation::of_matrices(&lhs, &rhs),
            ))
        })
        .collect::<Result<_>>()?;

    let mut families = Vec::new();
    let mut report = VerificationReport::new(check, &rep.name);
    let mut ledger = Vec::new();
    for (bars, family) in FAMILIES.iter().enumerate() {
        let ratio = fold_ratios(
            rows.iter()
                .filter(|r| r.0 == bars)
                .map(|r| (r.1.clone(), r.2.clone())),
        );
        report.total += 1;
        if let FamilyRatio::NonUniform(at) = &ratio {
            let mut indices = vec![family.to_string()];
            indices.extend(at.iter().cloned());
            report
                .failures
                .push(Failure::new(indices, "no single family constant".into()));
        }
        let note = match &ratio {
            FamilyRatio::Uniform(l) if l.is_one() => "agrees".to_string(),
            FamilyRatio::Uniform(l) => format!("uniform factor {l} (convention)"),
            FamilyRatio::AllZero => "both sides vanish".to_string(),
            FamilyRatio::NonUniform(at) => {
                format!(
                    "no single constant; first mismatch at {{{}}}",
                    at.join(", ")
                )
            }
        };
        ledger.push(LedgerEntry {
            topic: format!("{display_label} {family}"),
            computed: "four_bracket_sym of images".into(),
            reference: display_label.into(),
            ratio: ratio.render(),
            note,
        });
        families.push(FamilyOutcome { family, ratio });
    }
    Ok(DisplayComparison {
        report,
        families,
        ledger,
    })
}

/// Compare the images' four-brackets with the induced display evaluated in
/// the representation, one constant per family.
pub fn verify_induced_n2_quartic(little: &LittleAlgebraRep) -> Result<DisplayComparison> {
    let slots = EvenSlots::of(&little.presentation);
    let p = &little.presentation;
    compare_families(
        "induced-display",
        little,
        |args| evaluate_even_quadratic(p, &induced_display(slots, args), &little.rep),
        "induced display",
    )
}

/// Same comparison against the rest-frame display, plus the ratio of the two
/// family constants.
pub fn verify_little_algebra_display(little: &LittleAlgebraRep) -> Result<DisplayComparison> {
    let dim = little.rep.dim();
    let mut rest = compare_families(
        "rest-frame-display",
        little,
        |args| {
            Ok(Matrix::scalar(
                dim,
                rest_frame_display(&little.m, &little.z, args),
            ))
        },
        "rest-frame display",
    )?;
    let induced = verify_induced_n2_quartic(little)?;
    for (r, i) in rest.families.iter().zip(&induced.families) {
        let (ratio, note) = match (&r.ratio, &i.ratio) {
            (FamilyRatio::Uniform(a), FamilyRatio::Uniform(b)) => {
                let q = a / b;
                let note = if q.is_one() {
                    "displays agree under P0 = -i*m".to_string()
                } else {
                    format!("displays differ by {q} under P0 = -i*m")
                };
                (Some(q.to_string()), note)
            }
            (FamilyRatio::AllZero, FamilyRatio::AllZero) => (None, "both vanish".to_string()),
            _ => (
                None,
                "no comparison: a family constant is missing".to_string(),
            ),
        };
        rest.ledger.push(LedgerEntry {
            topic: format!("display consistency {}", r.family),
            computed: r.ratio.render().unwrap_or_else(|| "-".into()),
            reference: i.ratio.render().unwrap_or_else(|| "-".into()),
            ratio,
            note,
        });
    }
    Ok(rest)
}

/// With `Z = 0` the `{Q,Q,Q,Q}` and `{Q,Q,Q,Q̄}` entries of an induced table
/// vanish identically.
pub fn verify_zero_central_charge(induced: &AlgebraPresentation) -> Result<VerificationReport> {
    let z = induced
        .index_of(CENTRAL)
        .ok_or_else(|| crate::error::Error::MissingImage(CENTRAL.into()))?;
    let charges = Charge::all();
    let idx: Vec<GenIdx> = charges
        .iter()
        .map(|c| {
            induced
                .index_of(&c.name())
                .ok_or_else(|| crate::error::Error::MissingImage(c.name()))
        })
        .collect::<Result<_>>()?;
    let mut report = VerificationReport::new("zero-central-charge", &induced.name);
    for k in multisets(8, 4) {
        let args = [charges[k[0]], charges[k[1]], charges[k[2]], charges[k[3]]];
        if bar_count(&args) > 1 {
            continue;
        }
        report.total += 1;
        let e = induced.quartic([idx[k[0]], idx[k[1]], idx[k[2]], idx[k[3]]]);
        let mut at_zero = EvenQuadratic::zero();
        at_zero.add_constant(&e.constant);
        for (g, c) in e.linear().filter(|(g, _)| *g != z) {
            at_zero.add_linear(g, c);
        }
        for ((a, b), c) in e.quad().filter(|((a, b), _)| *a != z && *b != z) {
            at_zero.add_sym(a, b, c);
        }
        if !at_zero.is_zero() {
            report.failures.push(Failure::new(
                names(&args),
                induced.render_quadratic(&at_zero).into(),
            ));
        }
    }
    Ok(report)
}
