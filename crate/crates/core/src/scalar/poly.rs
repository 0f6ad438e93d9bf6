use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use super::GaussianRational;
use crate::error::{Error, Result};

/// A named commuting indeterminate or parameter (`m`, `z`, `x1`, ...).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

/// A power product of symbols, stored sparsely as `(symbol, exponent)` pairs
/// sorted by symbol name with every exponent positive.
///
/// Ordering is lexicographic on the exponent vector taken over the sorted
/// symbol names, so `m^2 > m*z > m > z^2 > z > 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn from_powers(powers: impl IntoIterator<Item = (Symbol, u32)>) -> Self {
        let mut acc: BTreeMap<Symbol, u32> = BTreeMap::new();
        for (s, e) in powers {
            *acc.entry(s).or_default() += e;
        }
        Monomial(acc.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Total degree restricted to the given symbols.
    pub fn degree_in(&self, symbols: &BTreeSet<Symbol>) -> u32 {
        self.0
            .iter()
            .filter(|(s, _)| symbols.contains(s))
            .map(|(_, e)| e)
            .sum()
    }

    pub fn exponent(&self, s: &Symbol) -> u32 {
        self.0
            .iter()
            .find(|(t, _)| t == s)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn powers(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.0.is_empty() {
            return other.clone();
        }
        if other.0.is_empty() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((sa, ea)), Some((sb, eb))) => match sa.cmp(sb) {
                    Ordering::Less => {
                        out.push((sa.clone(), *ea));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((sb.clone(), *eb));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((sa.clone(), ea + eb));
                        a.next();
                        b.next();
                    }
                },
                (Some(x), None) => {
                    out.push((*x).clone());
                    a.next();
                }
                (None, Some(y)) => {
                    out.push((*y).clone());
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0.iter(), other.0.iter());
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((sa, ea)), Some((sb, eb))) => {
                    if sa != sb {
                        // The monomial holding the smaller symbol has a
                        // positive exponent where the other has zero.
                        return if sa < sb {
                            Ordering::Greater
                        } else {
                            Ordering::Less
                        };
                    }
                    match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Multivariate polynomial over the Gaussian rationals.
///
/// This is the only number type used by the engine. Zero coefficients are
/// never stored, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, GaussianRational>,
}

pub type Bindings = BTreeMap<Symbol, GaussianRational>;

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::constant(GaussianRational::one())
    }

    pub fn i() -> Self {
        Scalar::constant(GaussianRational::i())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::constant(GaussianRational::from_integer(n))
    }

    pub fn constant(c: GaussianRational) -> Self {
        Scalar::term(c, Monomial::one())
    }

    pub fn term(c: GaussianRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Scalar { terms }
    }

    pub fn symbol(name: &str) -> Self {
        Scalar::term(GaussianRational::one(), Monomial::var(Symbol::new(name)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value when the polynomial has no symbol-dependent terms.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(m, _)| m.is_one())
                .map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Largest monomial in the lexicographic order together with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|(s, _)| s.clone()))
            .collect()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Whether every term has total degree `d` in `symbols` (other symbols
    /// are treated as coefficients).
    pub fn is_homogeneous_in(&self, symbols: &BTreeSet<Symbol>, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree_in(symbols) == d)
    }

    pub fn scale(&self, c: &GaussianRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Coefficient-wise complex conjugation; every symbol is real.
    pub fn conj(&self) -> Scalar {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.conj()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replace symbols by polynomials; unlisted symbols are kept.
    pub fn substitute(&self, subst: &BTreeMap<Symbol, Scalar>) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = Scalar::constant(c.clone());
            for (s, e) in m.powers() {
                let factor = match subst.get(s) {
                    Some(v) => v.pow(*e),
                    None => Scalar::term(
                        GaussianRational::one(),
                        Monomial::from_powers([(s.clone(), *e)]),
                    ),
                };
                t = &t * &factor;
            }
            out += &t;
        }
        out
    }

    /// Exact evaluation with every symbol bound.
    pub fn eval(&self, bindings: &Bindings) -> Result<GaussianRational> {
        if let Some(s) = self
            .symbols()
            .into_iter()
            .find(|s| !bindings.contains_key(s))
        {
            return Err(Error::UnboundSymbol(s.name().to_string()));
        }
        let subst = bindings
            .iter()
            .map(|(s, v)| (s.clone(), Scalar::constant(v.clone())))
            .collect();
        Ok(self
            .substitute(&subst)
            .as_constant()
            .expect("all symbols substituted"))
    }

    /// The constant `λ` with `self = λ·other`, if one exists and `other ≠ 0`.
    pub fn constant_ratio(&self, other: &Scalar) -> Option<GaussianRational> {
        let (lead, lc) = other.leading_term()?;
        let lambda = &self.coefficient(lead) / lc;
        (other.scale(&lambda) == *self).then_some(lambda)
    }

    fn add_term(&mut self, m: &Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(m);
                }
            }
            None => {
                self.terms.insert(m.clone(), c.clone());
            }
        }
    }
}

impl fmt::Display for Scalar {
    /// Terms from the largest monomial down, e.g. `4*m^2 - z^2`, `-2*i*m + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative_simple();
            let mag = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<GaussianRational> for Scalar {
    fn from(c: GaussianRational) -> Self {
        Scalar::constant(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        for (m, c) in &rhs.terms {
            self.add_term(m, &-c);
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let mut out = Scalar::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(&ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn product_examples() {
        assert_eq!(s("(1+i)") * s("(1-i)"), Scalar::from_int(2));
        let mz = s("m") * s("z");
        assert_eq!(mz.len(), 1);
        let (mono, c) = mz.leading_term().unwrap();
        assert!(c.is_one());
        assert_eq!(mono.exponent(&"m".into()), 1);
        assert_eq!(mono.exponent(&"z".into()), 1);
        assert_eq!(s("2*m + z") * s("2*m - z"), s("4*m^2 - z^2"));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(s("1 + i").conj(), s("1 - i"));
        assert_eq!(s("m + i*z").conj(), s("m - i*z"));
    }

    #[test]
    fn eval_examples() {
        let b: Bindings = [
            (Symbol::new("m"), GaussianRational::from_integer(1)),
            (Symbol::new("z"), GaussianRational::zero()),
        ]
        .into();
        assert_eq!(
            s("2*(2*m + z)").eval(&b).unwrap(),
            GaussianRational::from_integer(4)
        );
        let b2: Bindings = [
            (Symbol::new("m"), GaussianRational::from_integer(1)),
            (Symbol::new("z"), GaussianRational::from_integer(2)),
        ]
        .into();
        assert!(s("4*m^2 - z^2").eval(&b2).unwrap().is_zero());
    }

    #[test]
    fn unbound_symbol_is_reported() {
        let err = s("m + q").eval(&[(Symbol::new("m"), GaussianRational::one())].into());
        assert!(matches!(err, Err(Error::UnboundSymbol(name)) if name == "q"));
    }

    #[test]
    fn lexicographic_monomial_order() {
        let ordered = ["1", "z", "z^2", "m", "m*z", "m^2"];
        let monos: Vec<Monomial> = ordered
            .iter()
            .map(|t| s(t).leading_term().unwrap().0.clone())
            .collect();
        for w in monos.windows(2) {
            assert!(w[0] < w[1], "{} < {}", w[0], w[1]);
        }
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(s("z^2*(-1) + 4*m*m").to_string(), "4*m^2 - z^2");
        assert_eq!(s("-2*i*m + 3").to_string(), "-2*i*m + 3");
        assert_eq!(s("(1+i)*m").to_string(), "(1+i)*m");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn constant_ratio() {
        assert_eq!(
            s("8*m^2 + 8*z^2").constant_ratio(&s("-2*m^2 - 2*z^2")),
            Some(GaussianRational::from_integer(-4))
        );
        assert_eq!(s("8*m^2 + 8*z^2").constant_ratio(&s("2*m^2 - 2*z^2")), None);
        assert_eq!(
            s("0").constant_ratio(&s("m")),
            Some(GaussianRational::zero())
        );
        assert_eq!(s("m").constant_ratio(&Scalar::zero()), None);
    }

    #[test]
    fn homogeneity_ignores_parameters() {
        let xs: BTreeSet<Symbol> = ["x", "y"].into_iter().map(Symbol::new).collect();
        assert!(s("m*x^2 + z*x*y").is_homogeneous_in(&xs, 2));
        assert!(!s("x^2 + y").is_homogeneous_in(&xs, 2));
    }
}
