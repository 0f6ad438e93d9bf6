use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::LedgerEntry;
use crate::scalar::{GaussianRational, Scalar};

use super::jacobi::multisets;
use super::presentation::{
    AlgebraKind, AlgebraPresentation, EvenQuadratic, GenIdx, Grade, Parity, PresentationBuilder,
};

/// `{{A1,A2},{A3,A4}} + {{A1,A3},{A2,A4}} + {{A1,A4},{A2,A3}}` with each inner
/// anticommutator replaced by its table value.
pub fn nested_quartic(p: &AlgebraPresentation, args: [GenIdx; 4]) -> EvenQuadratic {
    let [a1, a2, a3, a4] = args;
    let mut out = EvenQuadratic::zero();
    for ((x, y), (u, v)) in [
        ((a1, a2), (a3, a4)),
        ((a1, a3), (a2, a4)),
        ((a1, a4), (a2, a3)),
    ] {
        out.add_anticommutator(&p.bracket(x, y), &p.bracket(u, v), &Scalar::one());
    }
    out
}

/// Central generators: the `(0,0)` sector, which must commute with everything.
fn central_generators(p: &AlgebraPresentation) -> Result<Vec<GenIdx>> {
    let central = p.generators_of_grade(Grade::CENTRAL);
    for &z in &central {
        if (0..p.generators().len()).any(|g| !p.bracket(z, g).is_zero()) {
            return Err(Error::NotCentral(p.name_of(z).to_string()));
        }
    }
    Ok(central)
}

/// The order-four algebra induced from a Z2×Z2-graded superalgebra.
///
/// Quadratic brackets of the even part and of the even part on the odd part
/// are copied; odd-odd brackets are replaced by the quartic table computed
/// from the nested identity.
pub fn induce_quartic(p: &AlgebraPresentation) -> Result<AlgebraPresentation> {
    if p.kind != AlgebraKind::Superalgebra {
        return Err(Error::ShapeMismatch(
            "induction starts from a superalgebra presentation".into(),
        ));
    }
    central_generators(p)?;
    let mut b = PresentationBuilder::new(&format!("{} (induced)", p.name), AlgebraKind::OrderFour);
    for g in p.generators() {
        b.generator(&g.name, g.grade)?;
    }
    for ((i, j), e) in p.bracket_entries() {
        if !Parity::both_odd(p.parity(i), p.parity(j)) {
            b.bracket(i, j, e.clone())?;
        }
    }
    let odd = p.odd_generators();
    for k in multisets(odd.len(), 4) {
        let args = [odd[k[0]], odd[k[1]], odd[k[2]], odd[k[3]]];
        b.quartic(args, nested_quartic(p, args))?;
    }
    b.build()
}

/// Families of four-brackets by the number of `(1,0)` and `(0,1)` arguments.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum QuarticFamily {
    PlusPlusPlusPlus,
    PlusPlusPlusMinus,
    PlusPlusMinusMinus,
    PlusMinusMinusMinus,
    MinusMinusMinusMinus,
}

impl QuarticFamily {
    pub fn label(self) -> &'static str {
        match self {
            QuarticFamily::PlusPlusPlusPlus => "F+F+F+F+",
            QuarticFamily::PlusPlusPlusMinus => "F+F+F+F-",
            QuarticFamily::PlusPlusMinusMinus => "F+F+F-F-",
            QuarticFamily::PlusMinusMinusMinus => "F+F-F-F-",
            QuarticFamily::MinusMinusMinusMinus => "F-F-F-F-",
        }
    }

    fn from_minus_count(n: usize) -> Self {
        match n {
            0 => QuarticFamily::PlusPlusPlusPlus,
            1 => QuarticFamily::PlusPlusPlusMinus,
            2 => QuarticFamily::PlusPlusMinusMinus,
            3 => QuarticFamily::PlusMinusMinusMinus,
            _ => QuarticFamily::MinusMinusMinusMinus,
        }
    }
}

/// Classify a multiset and reorder it with the `(1,0)` arguments first.
pub fn classify(
    p: &AlgebraPresentation,
    args: [GenIdx; 4],
) -> Option<(QuarticFamily, [GenIdx; 4])> {
    let mut plus: Vec<GenIdx> = Vec::new();
    let mut minus: Vec<GenIdx> = Vec::new();
    for g in args {
        match p.generator(g).grade {
            Grade::PLUS => plus.push(g),
            Grade::MINUS => minus.push(g),
            _ => return None,
        }
    }
    let family = QuarticFamily::from_minus_count(minus.len());
    plus.extend(minus);
    Some((family, [plus[0], plus[1], plus[2], plus[3]]))
}

/// The closed-form four-bracket display for a Z2×Z2-graded superalgebra with
/// a single central generator, in its corrected reading (the third index of
/// the last mixed term is `a₂`, the symmetrisation of the `F⁺F⁺F⁻F⁻` line
/// as printed). The three-`F⁻` and four-`F⁻` lines are the mirror images.
pub fn transcribed_quartic(
    p: &AlgebraPresentation,
    args: [GenIdx; 4],
) -> Result<(QuarticFamily, EvenQuadratic)> {
    let central = central_generators(p)?;
    let &[z] = central.as_slice() else {
        return Err(Error::ShapeMismatch(format!(
            "closed form needs exactly one central generator, found {}",
            central.len()
        )));
    };
    let (family, [a1, a2, a3, a4]) = classify(p, args).ok_or_else(|| {
        Error::ShapeMismatch("four-bracket arguments must have grade (1,0) or (0,1)".into())
    })?;
    let g = |x: GenIdx, y: GenIdx| p.g_pair(x, y, z);
    let even: Vec<GenIdx> = p.generators_of_grade(Grade::BOSONIC);
    let mut out = EvenQuadratic::zero();
    let two = Scalar::from_int(2);
    // 2Z·(Σ g·Q^i) B_i, recorded against sym(Z, B_i) = Z·B_i.
    let mixed = |pairs: [((GenIdx, GenIdx), (GenIdx, GenIdx)); 3], out: &mut EvenQuadratic| {
        for ((x, y), (u, v)) in pairs {
            let gxy = g(x, y);
            for &bi in &even {
                out.add_sym(z, bi, &(&(&gxy * &p.q_odd(u, v, bi)) * &two));
            }
        }
    };
    match family {
        QuarticFamily::PlusPlusPlusPlus | QuarticFamily::MinusMinusMinusMinus => {
            let c = &(&(&g(a1, a2) * &g(a3, a4)) + &(&g(a1, a3) * &g(a2, a4)))
                + &(&g(a1, a4) * &g(a2, a3));
            out.add_sym(z, z, &c);
        }
        QuarticFamily::PlusPlusPlusMinus => mixed(
            [
                ((a1, a2), (a3, a4)),
                ((a1, a3), (a2, a4)),
                ((a2, a3), (a1, a4)),
            ],
            &mut out,
        ),
        QuarticFamily::PlusMinusMinusMinus => mixed(
            [
                ((a3, a4), (a1, a2)),
                ((a2, a4), (a1, a3)),
                ((a2, a3), (a1, a4)),
            ],
            &mut out,
        ),
        QuarticFamily::PlusPlusMinusMinus => {
            for &bi in &even {
                for &bj in &even {
                    let c = &(&p.q_odd(a1, a3, bi) * &p.q_odd(a2, a4, bj))
                        + &(&p.q_odd(a1, a4, bi) * &p.q_odd(a2, a3, bj));
                    // {B_i, B_j} = 2·sym(B_i, B_j)
                    out.add_sym(bi, bj, &(&c * &two));
                }
            }
            out.add_sym(z, z, &(&g(a1, a2) * &g(a3, a4)));
        }
    }
    Ok((family, out))
}

/// One comparison between a computed value and its reference.
#[derive(Clone, Debug, PartialEq)]
pub enum Observation {
    BothZero,
    Ratio(GaussianRational),
    /// Not a constant multiple (including a zero reference against a nonzero value).
    Mismatch,
}

impl Observation {
    pub fn of_quadratics(computed: &EvenQuadratic, reference: &EvenQuadratic) -> Self {
        if computed.is_zero() && reference.is_zero() {
            return Observation::BothZero;
        }
        computed
            .constant_ratio(reference)
            .map_or(Observation::Mismatch, Observation::Ratio)
    }

    pub fn of_matrices(computed: &Matrix, reference: &Matrix) -> Self {
        if computed.is_zero() && reference.is_zero() {
            return Observation::BothZero;
        }
        computed
            .constant_ratio(reference)
            .map_or(Observation::Mismatch, Observation::Ratio)
    }
}

/// Outcome of comparing a family of values against reference values.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilyRatio {
    /// Every computed value is the same constant multiple of its reference.
    Uniform(GaussianRational),
    /// No single constant works; the first offending instance is recorded.
    NonUniform(Vec<String>),
    /// Both sides vanish throughout.
    AllZero,
}

impl FamilyRatio {
    pub fn render(&self) -> Option<String> {
        match self {
            FamilyRatio::Uniform(l) => Some(l.to_string()),
            _ => None,
        }
    }

    pub fn is_uniform(&self) -> bool {
        !matches!(self, FamilyRatio::NonUniform(_))
    }
}

/// Fold observations into the single family constant, if it exists.
pub fn fold_ratios(items: impl IntoIterator<Item = (Vec<String>, Observation)>) -> FamilyRatio {
    let mut lambda: Option<GaussianRational> = None;
    for (key, obs) in items {
        match obs {
            Observation::BothZero => {}
            Observation::Mismatch => return FamilyRatio::NonUniform(key),
            Observation::Ratio(r) => match &lambda {
                None => lambda = Some(r),
                Some(l) if *l == r => {}
                Some(_) => return FamilyRatio::NonUniform(key),
            },
        }
    }
    lambda.map_or(FamilyRatio::AllZero, FamilyRatio::Uniform)
}

/// Which part of an even quadratic a component filter keeps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Component {
    CentralSquare,
    CentralMixed,
    NonCentral,
}

impl Component {
    pub fn label(self) -> &'static str {
        match self {
            Component::CentralSquare => "Z^2",
            Component::CentralMixed => "Z*B",
            Component::NonCentral => "{B,B}",
        }
    }
}

/// Keep the quadratic terms of the given kind relative to the central set.
pub fn component(e: &EvenQuadratic, central: &[GenIdx], which: Component) -> EvenQuadratic {
    let mut out = EvenQuadratic::zero();
    for ((a, b), c) in e.quad() {
        let n = central.contains(&a) as u8 + central.contains(&b) as u8;
        let keep = match which {
            Component::CentralSquare => n == 2,
            Component::CentralMixed => n == 1,
            Component::NonCentral => n == 0,
        };
        if keep {
            out.add_sym(a, b, c);
        }
    }
    out
}

/// Compare the nested-identity table with the closed-form display, family by
/// family and component by component.
pub fn quartic_cross_report(p: &AlgebraPresentation) -> Result<Vec<LedgerEntry>> {
    let central = central_generators(p)?;
    let odd = p.odd_generators();
    let mut rows: Vec<(QuarticFamily, Vec<GenIdx>, EvenQuadratic, EvenQuadratic)> = Vec::new();
    for k in multisets(odd.len(), 4) {
        let args = [odd[k[0]], odd[k[1]], odd[k[2]], odd[k[3]]];
        let (family, reference) = transcribed_quartic(p, args)?;
        rows.push((family, args.to_vec(), nested_quartic(p, args), reference));
    }
    let mut ledger = Vec::new();
    for family in [
        QuarticFamily::PlusPlusPlusPlus,
        QuarticFamily::PlusPlusPlusMinus,
        QuarticFamily::PlusPlusMinusMinus,
        QuarticFamily::PlusMinusMinusMinus,
        QuarticFamily::MinusMinusMinusMinus,
    ] {
        for which in [
            Component::CentralSquare,
            Component::CentralMixed,
            Component::NonCentral,
        ] {
            let split: Vec<(Vec<GenIdx>, EvenQuadratic, EvenQuadratic)> = rows
                .iter()
                .filter(|r| r.0 == family)
                .map(|r| {
                    (
                        r.1.clone(),
                        component(&r.2, &central, which),
                        component(&r.3, &central, which),
                    )
                })
                .collect();
            let outcome = fold_ratios(split.iter().map(|(k, c, r)| {
                let names = k.iter().map(|&g| p.name_of(g).to_string()).collect();
                (names, Observation::of_quadratics(c, r))
            }));
            if outcome == FamilyRatio::AllZero {
                continue;
            }
            let sample = split
                .iter()
                .find(|(_, c, r)| !(c.is_zero() && r.is_zero()))
                .expect("a nonzero row exists");
            let names: Vec<&str> = sample.0.iter().map(|&g| p.name_of(g)).collect();
            let note = match &outcome {
                FamilyRatio::Uniform(l) if l.is_one() => "agrees".to_string(),
                FamilyRatio::Uniform(l) => format!("uniform factor {l}"),
                FamilyRatio::NonUniform(k) => {
                    format!("no uniform factor; first mismatch at {{{}}}", k.join(", "))
                }
                FamilyRatio::AllZero => unreachable!(),
            };
            ledger.push(LedgerEntry {
                topic: format!(
                    "quartic {} [{}] at {{{}}}",
                    family.label(),
                    which.label(),
                    names.join(", ")
                ),
                computed: p.render_quadratic(&sample.1),
                reference: p.render_quadratic(&sample.2),
                ratio: outcome.render(),
                note,
            });
        }
    }
    Ok(ledger)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::Element;

    /// One of each grade with generic couplings: {F⁺,F⁺} = aZ, {F⁻,F⁻} = bZ,
    /// {F⁺,F⁻} = cB.
    fn toy(a: i64, b_: i64, c: i64) -> AlgebraPresentation {
        let mut b = PresentationBuilder::new("toy", AlgebraKind::Superalgebra);
        let z = b.generator("Z", Grade::CENTRAL).unwrap();
        let bb = b.generator("B", Grade::BOSONIC).unwrap();
        let fp = b.generator("Fp", Grade::PLUS).unwrap();
        let fm = b.generator("Fm", Grade::MINUS).unwrap();
        b.bracket(fp, fp, Element::term(z, Scalar::from_int(a)))
            .unwrap();
        b.bracket(fm, fm, Element::term(z, Scalar::from_int(b_)))
            .unwrap();
        b.bracket(fp, fm, Element::term(bb, Scalar::from_int(c)))
            .unwrap();
        b.build().unwrap()
    }

    #[test]
    fn four_plus_is_three_pairings_of_z_squared() {
        let p = toy(3, 5, 7);
        let q = nested_quartic(&p, [2, 2, 2, 2]);
        // Three pairings, each {3Z, 3Z} = 18 Z².
        let mut want = EvenQuadratic::zero();
        want.add_sym(0, 0, &Scalar::from_int(54));
        assert_eq!(q, want);
    }

    #[test]
    fn mixed_family_vanishes_without_plus_coupling() {
        let p = toy(0, 5, 7);
        assert!(nested_quartic(&p, [2, 2, 2, 3]).is_zero());
    }

    #[test]
    fn induced_table_is_order_independent() {
        let p = toy(3, 5, 7);
        let ind = induce_quartic(&p).unwrap();
        assert_eq!(ind.kind, AlgebraKind::OrderFour);
        let base = nested_quartic(&p, [2, 2, 3, 3]);
        for perm in [[2, 3, 2, 3], [3, 3, 2, 2], [3, 2, 3, 2], [2, 3, 3, 2]] {
            assert_eq!(ind.quartic(perm), base);
            assert_eq!(nested_quartic(&p, perm), base);
        }
    }

    #[test]
    fn non_central_z_is_rejected() {
        let mut b = PresentationBuilder::new("bad", AlgebraKind::Superalgebra);
        let z = b.generator("Z", Grade::CENTRAL).unwrap();
        let f = b.generator("F", Grade::PLUS).unwrap();
        b.bracket(z, f, Element::generator(f)).unwrap();
        let p = b.build().unwrap();
        assert!(matches!(induce_quartic(&p), Err(Error::NotCentral(n)) if n == "Z"));
    }

    #[test]
    fn empty_odd_sector_gives_empty_quartic_table() {
        let mut b = PresentationBuilder::new("even", AlgebraKind::Superalgebra);
        b.generator("B", Grade::BOSONIC).unwrap();
        let ind = induce_quartic(&b.build().unwrap()).unwrap();
        assert_eq!(ind.quartic_len(), 0);
    }

    #[test]
    fn closed_form_ratios_on_toy_algebra() {
        let p = toy(3, 5, 7);
        let ledger = quartic_cross_report(&p).unwrap();
        let ratio = |topic: &str| {
            ledger
                .iter()
                .find(|e| e.topic.starts_with(topic))
                .and_then(|e| e.ratio.clone())
        };
        assert_eq!(ratio("quartic F+F+F+F+ [Z^2]").as_deref(), Some("2"));
        assert_eq!(ratio("quartic F+F+F+F- [Z*B]").as_deref(), Some("1"));
        assert_eq!(ratio("quartic F+F+F-F- [{B,B}]").as_deref(), Some("1"));
        assert_eq!(ratio("quartic F+F+F-F- [Z^2]").as_deref(), Some("2"));
    }
}
