use crate::algebra::{
    AlgebraKind, AlgebraPresentation, Element, GenIdx, Grade, PresentationBuilder,
};
use crate::error::Result;
use crate::scalar::{GaussianRational, Scalar};
use crate::spinor::{eps_lower, eps_upper, sigma_entry};

use super::lorentz;

/// A supercharge with 1-based internal and spinor indices.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum Charge {
    /// `Q^I_α`
    Q { i: usize, a: usize },
    /// `Q̄_{Iα̇}`
    Qbar { i: usize, a: usize },
}

impl Charge {
    pub fn all() -> [Charge; 8] {
        let mut out = [Charge::Q { i: 1, a: 1 }; 8];
        let mut k = 0;
        for bar in [false, true] {
            for i in 1..=2 {
                for a in 1..=2 {
                    out[k] = if bar {
                        Charge::Qbar { i, a }
                    } else {
                        Charge::Q { i, a }
                    };
                    k += 1;
                }
            }
        }
        out
    }

    pub fn name(self) -> String {
        match self {
            Charge::Q { i, a } => format!("Q{i}_{a}"),
            Charge::Qbar { i, a } => format!("Qb{i}_{a}"),
        }
    }

    pub fn parse(name: &str) -> Option<Charge> {
        let (bar, rest) = match name.strip_prefix("Qb") {
            Some(rest) => (true, rest),
            None => (false, name.strip_prefix('Q')?),
        };
        let (i, a) = rest.split_once('_')?;
        let (i, a): (usize, usize) = (i.parse().ok()?, a.parse().ok()?);
        if !(1..=2).contains(&i) || !(1..=2).contains(&a) {
            return None;
        }
        Some(if bar {
            Charge::Qbar { i, a }
        } else {
            Charge::Q { i, a }
        })
    }

    pub fn is_bar(self) -> bool {
        matches!(self, Charge::Qbar { .. })
    }

    /// `(Q^I_α)† = Q̄_{Iα̇}` and back.
    pub fn adjoint(self) -> Charge {
        match self {
            Charge::Q { i, a } => Charge::Qbar { i, a },
            Charge::Qbar { i, a } => Charge::Q { i, a },
        }
    }

    fn indices(self) -> (usize, usize) {
        match self {
            Charge::Q { i, a } | Charge::Qbar { i, a } => (i - 1, a - 1),
        }
    }

    pub fn grade(self) -> Grade {
        if self.is_bar() {
            Grade::MINUS
        } else {
            Grade::PLUS
        }
    }
}

pub const MOMENTA: [&str; 4] = ["P0", "P1", "P2", "P3"];
pub const CENTRAL: &str = "Z";

/// The N=2 super-Poincaré algebra with central charge. Generator order:
/// `P0..P3, Z`, the eight supercharges as in [`Charge::all`], then (with the
/// flag) the six Lorentz generators `L01..L23`.
pub fn build_n2_presentation(include_lorentz: bool) -> Result<AlgebraPresentation> {
    let name = if include_lorentz {
        "n2-super-poincare+lorentz"
    } else {
        "n2-super-poincare"
    };
    let mut b = PresentationBuilder::new(name, AlgebraKind::Superalgebra);
    let p: Vec<GenIdx> = MOMENTA
        .iter()
        .map(|n| b.generator(n, Grade::BOSONIC))
        .collect::<Result<_>>()?;
    let z = b.generator(CENTRAL, Grade::CENTRAL)?;
    let charges = Charge::all();
    let q: Vec<GenIdx> = charges
        .iter()
        .map(|c| b.generator(&c.name(), c.grade()))
        .collect::<Result<_>>()?;
    for (x, &cx) in charges.iter().enumerate() {
        for (y, &cy) in charges.iter().enumerate().skip(x) {
            b.bracket(q[x], q[y], odd_odd(cx, cy, &p, z))?;
        }
    }
    if include_lorentz {
        lorentz::add_lorentz_sector(&mut b, &p, &q)?;
    }
    b.build()
}

fn odd_odd(x: Charge, y: Charge, p: &[GenIdx], z: GenIdx) -> Element {
    let (x, y) = if x.is_bar() && !y.is_bar() {
        (y, x)
    } else {
        (x, y)
    };
    let (i, a) = x.indices();
    let (j, b) = y.indices();
    match (x.is_bar(), y.is_bar()) {
        // {Q^I_α, Q̄_{Jα̇}} = −2i δ^I_J σ^μ_{αα̇} P_μ
        (false, true) => {
            let mut e = Element::zero();
            if i == j {
                let c = Scalar::i().scale(&GaussianRational::from_integer(-2));
                for (mu, &pm) in p.iter().enumerate() {
                    e.add_term(pm, &(&c * sigma_entry(mu, a, b)));
                }
            }
            e
        }
        // {Q^I_α, Q^J_β} = 2Z ε^{IJ} ε_{αβ}
        (false, false) => Element::term(z, Scalar::from_int(2 * eps_upper(i, j) * eps_lower(a, b))),
        // {Q̄_{Iα̇}, Q̄_{Jβ̇}} = −2Z ε_{IJ} ε_{α̇β̇}
        _ => Element::term(z, Scalar::from_int(-2 * eps_lower(i, j) * eps_lower(a, b))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(p: &AlgebraPresentation, n: &str) -> GenIdx {
        p.index_of(n).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for c in Charge::all() {
            assert_eq!(Charge::parse(&c.name()), Some(c));
            assert_eq!(c.adjoint().adjoint(), c);
        }
        assert_eq!(Charge::parse("Q3_1"), None);
        assert_eq!(Charge::parse("P0"), None);
    }

    #[test]
    fn q_qbar_couples_to_p0_plus_p3() {
        let p = build_n2_presentation(false).unwrap();
        let e = p.bracket(idx(&p, "Q1_1"), idx(&p, "Qb1_1"));
        let m2i = Scalar::i().scale(&GaussianRational::from_integer(-2));
        assert_eq!(e.coefficient(idx(&p, "P0")), m2i);
        assert_eq!(e.coefficient(idx(&p, "P3")), m2i);
        assert!(e.coefficient(idx(&p, "P1")).is_zero());
        assert!(p.bracket(idx(&p, "Q1_1"), idx(&p, "Qb2_1")).is_zero());
    }

    #[test]
    fn q_q_central_entries() {
        let p = build_n2_presentation(false).unwrap();
        let z = idx(&p, "Z");
        assert!(p.bracket(idx(&p, "Q1_1"), idx(&p, "Q1_2")).is_zero());
        assert_eq!(
            p.bracket(idx(&p, "Q1_1"), idx(&p, "Q2_2")),
            Element::term(z, Scalar::from_int(-2))
        );
        // −2Z ε_{12} ε_{1̇2̇}
        assert_eq!(
            p.bracket(idx(&p, "Qb1_1"), idx(&p, "Qb2_2")),
            Element::term(z, Scalar::from_int(-2))
        );
    }

    #[test]
    fn z_is_central_and_p_commutes() {
        let p = build_n2_presentation(false).unwrap();
        for g in 0..p.generators().len() {
            assert!(p.bracket(idx(&p, "Z"), g).is_zero());
            for m in MOMENTA {
                if p.parity(g) == crate::algebra::Parity::Odd || g < 4 {
                    assert!(p.bracket(idx(&p, m), g).is_zero());
                }
            }
        }
    }
}
