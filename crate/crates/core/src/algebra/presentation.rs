use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Scalar};

/// An element of Z2×Z2. The coarse parity is the sum of the two components.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Grade(pub u8, pub u8);

impl Grade {
    pub const CENTRAL: Grade = Grade(0, 0);
    pub const BOSONIC: Grade = Grade(1, 1);
    pub const PLUS: Grade = Grade(1, 0);
    pub const MINUS: Grade = Grade(0, 1);

    pub fn new(a: u8, b: u8) -> Self {
        Grade(a % 2, b % 2)
    }

    pub fn parity(self) -> Parity {
        if (self.0 + self.1).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self.parity() == Parity::Odd
    }
}

impl std::ops::Add for Grade {
    type Output = Grade;
    fn add(self, rhs: Grade) -> Grade {
        Grade::new(self.0 + rhs.0, self.1 + rhs.1)
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn both_odd(a: Parity, b: Parity) -> bool {
        a == Parity::Odd && b == Parity::Odd
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorId {
    pub name: String,
    pub grade: Grade,
}

impl GeneratorId {
    pub fn new(name: &str, grade: Grade) -> Self {
        GeneratorId {
            name: name.to_string(),
            grade,
        }
    }

    pub fn parity(&self) -> Parity {
        self.grade.parity()
    }
}

pub type GenIdx = usize;

/// A linear combination of generators.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element(BTreeMap<GenIdx, Scalar>);

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn generator(g: GenIdx) -> Self {
        Element::term(g, Scalar::one())
    }

    pub fn term(g: GenIdx, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(g, &c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (GenIdx, &Scalar)> {
        self.0.iter().map(|(g, c)| (*g, c))
    }

    pub fn coefficient(&self, g: GenIdx) -> Scalar {
        self.0.get(&g).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, g: GenIdx, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.0.entry(g).or_default();
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&g);
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        for (g, v) in other.terms() {
            self.add_term(g, &(v * c));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Element {
        let mut e = Element::zero();
        e.add_scaled(self, c);
        e
    }

    pub fn neg(&self) -> Element {
        self.scaled(&Scalar::from_int(-1))
    }

    pub fn support(&self) -> impl Iterator<Item = GenIdx> + '_ {
        self.0.keys().copied()
    }
}

/// A formal element of `span{1, X_i, sym(X_i, X_j)}` over the even
/// generators, where `sym(X, Y) = ½(XY + YX)` and in particular
/// `sym(X, X) = X²`.
///
/// Anticommutators of even elements are recorded as `{X, Y} = 2·sym(X, Y)`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EvenQuadratic {
    pub constant: Scalar,
    linear: BTreeMap<GenIdx, Scalar>,
    quad: BTreeMap<(GenIdx, GenIdx), Scalar>,
}

impl EvenQuadratic {
    pub fn zero() -> Self {
        EvenQuadratic::default()
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.linear.is_empty() && self.quad.is_empty()
    }

    pub fn linear(&self) -> impl Iterator<Item = (GenIdx, &Scalar)> {
        self.linear.iter().map(|(g, c)| (*g, c))
    }

    pub fn quad(&self) -> impl Iterator<Item = ((GenIdx, GenIdx), &Scalar)> {
        self.quad.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_constant(&mut self, c: &Scalar) {
        self.constant += c;
    }

    pub fn add_linear(&mut self, g: GenIdx, c: &Scalar) {
        add_into(&mut self.linear, g, c);
    }

    /// Adds `c·sym(a, b)`; the key is unordered.
    pub fn add_sym(&mut self, a: GenIdx, b: GenIdx, c: &Scalar) {
        add_into(&mut self.quad, (a.min(b), a.max(b)), c);
    }

    /// Adds the anticommutator `{u, v}` of two even elements.
    pub fn add_anticommutator(&mut self, u: &Element, v: &Element, c: &Scalar) {
        let two_c = c * &Scalar::from_int(2);
        for (x, cx) in u.terms() {
            for (y, cy) in v.terms() {
                self.add_sym(x, y, &(&(cx * cy) * &two_c));
            }
        }
    }

    pub fn add_scaled(&mut self, other: &EvenQuadratic, c: &Scalar) {
        self.constant += &(&other.constant * c);
        for (g, v) in other.linear() {
            self.add_linear(g, &(v * c));
        }
        for ((a, b), v) in other.quad() {
            self.add_sym(a, b, &(v * c));
        }
    }

    pub fn scaled(&self, c: &Scalar) -> EvenQuadratic {
        let mut e = EvenQuadratic::zero();
        e.add_scaled(self, c);
        e
    }

    pub fn sub(&self, other: &EvenQuadratic) -> EvenQuadratic {
        let mut e = self.clone();
        e.add_scaled(other, &Scalar::from_int(-1));
        e
    }

    /// Complex conjugation of all coefficients, generators treated as hermitian.
    pub fn conj(&self) -> EvenQuadratic {
        EvenQuadratic {
            constant: self.constant.conj(),
            linear: self.linear.iter().map(|(g, c)| (*g, c.conj())).collect(),
            quad: self.quad.iter().map(|(k, c)| (*k, c.conj())).collect(),
        }
    }

    /// All generators appearing in a linear or quadratic term.
    pub fn generators(&self) -> Vec<GenIdx> {
        let mut gs: Vec<GenIdx> = self
            .linear
            .keys()
            .copied()
            .chain(self.quad.keys().flat_map(|(a, b)| [*a, *b]))
            .collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    /// The `λ` with `self = λ·other` (constant), if one exists and `other ≠ 0`.
    pub fn constant_ratio(&self, other: &EvenQuadratic) -> Option<GaussianRational> {
        let pivot = if !other.constant.is_zero() {
            self.constant.constant_ratio(&other.constant)
        } else if let Some((g, c)) = other.linear.iter().next() {
            self.linear
                .get(g)
                .cloned()
                .unwrap_or_default()
                .constant_ratio(c)
        } else if let Some((k, c)) = other.quad.iter().next() {
            self.quad
                .get(k)
                .cloned()
                .unwrap_or_default()
                .constant_ratio(c)
        } else {
            None
        }?;
        (other.scaled(&Scalar::constant(pivot.clone())) == *self).then_some(pivot)
    }
}

fn add_into<K: Ord + Copy>(map: &mut BTreeMap<K, Scalar>, k: K, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(k).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&k);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    Superalgebra,
    OrderFour,
}

impl AlgebraKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraKind::Superalgebra => "superalgebra",
            AlgebraKind::OrderFour => "order-four",
        }
    }
}

/// Structure constants, stored sparsely.
///
/// Quadratic brackets are kept for ordered pairs `(i, j)` with `i <= j`; the
/// other order follows from graded antisymmetry. The quartic table is keyed
/// by the sorted 4-multiset of odd generators.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct StructureTables {
    brackets: BTreeMap<(GenIdx, GenIdx), Element>,
    quartic: BTreeMap<[GenIdx; 4], EvenQuadratic>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraPresentation {
    pub name: String,
    pub kind: AlgebraKind,
    generators: Vec<GeneratorId>,
    tables: StructureTables,
}

/// Sort four generator indices into multiset-canonical order.
pub fn multiset_key(args: [GenIdx; 4]) -> [GenIdx; 4] {
    let mut k = args;
    k.sort_unstable();
    k
}

impl AlgebraPresentation {
    pub fn generators(&self) -> &[GeneratorId] {
        &self.generators
    }

    pub fn generator(&self, g: GenIdx) -> &GeneratorId {
        &self.generators[g]
    }

    pub fn name_of(&self, g: GenIdx) -> &str {
        &self.generators[g].name
    }

    pub fn index_of(&self, name: &str) -> Option<GenIdx> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn parity(&self, g: GenIdx) -> Parity {
        self.generators[g].parity()
    }

    pub fn odd_generators(&self) -> Vec<GenIdx> {
        (0..self.generators.len())
            .filter(|&g| self.parity(g) == Parity::Odd)
            .collect()
    }

    pub fn even_generators(&self) -> Vec<GenIdx> {
        (0..self.generators.len())
            .filter(|&g| self.parity(g) == Parity::Even)
            .collect()
    }

    pub fn generators_of_grade(&self, grade: Grade) -> Vec<GenIdx> {
        (0..self.generators.len())
            .filter(|&g| self.generators[g].grade == grade)
            .collect()
    }

    /// Stored bracket entries, `i <= j`.
    pub fn bracket_entries(&self) -> impl Iterator<Item = ((GenIdx, GenIdx), &Element)> {
        self.tables.brackets.iter().map(|(k, v)| (*k, v))
    }

    pub fn quartic_entries(&self) -> impl Iterator<Item = ([GenIdx; 4], &EvenQuadratic)> {
        self.tables.quartic.iter().map(|(k, v)| (*k, v))
    }

    pub fn quartic_len(&self) -> usize {
        self.tables.quartic.len()
    }

    /// The graded bracket `[X_a, X_b]` (anticommutator when both are odd).
    pub fn bracket(&self, a: GenIdx, b: GenIdx) -> Element {
        if a <= b {
            return self
                .tables
                .brackets
                .get(&(a, b))
                .cloned()
                .unwrap_or_default();
        }
        let e = self
            .tables
            .brackets
            .get(&(b, a))
            .cloned()
            .unwrap_or_default();
        if Parity::both_odd(self.parity(a), self.parity(b)) {
            e
        } else {
            e.neg()
        }
    }

    /// Bracket of a generator with an element, extended linearly.
    pub fn bracket_with(&self, a: GenIdx, e: &Element) -> Element {
        let mut out = Element::zero();
        for (g, c) in e.terms() {
            out.add_scaled(&self.bracket(a, g), c);
        }
        out
    }

    /// Bracket of an element with a generator, extended linearly.
    pub fn bracket_left(&self, e: &Element, b: GenIdx) -> Element {
        let mut out = Element::zero();
        for (g, c) in e.terms() {
            out.add_scaled(&self.bracket(g, b), c);
        }
        out
    }

    /// The four-bracket value with arguments in any order.
    pub fn quartic(&self, args: [GenIdx; 4]) -> EvenQuadratic {
        self.tables
            .quartic
            .get(&multiset_key(args))
            .cloned()
            .unwrap_or_default()
    }

    /// `f_{ij}^k` for even `i, j, k`.
    pub fn f(&self, i: GenIdx, j: GenIdx, k: GenIdx) -> Scalar {
        self.bracket(i, j).coefficient(k)
    }

    /// `R_{ia}^b` for even `i`, odd `a, b`.
    pub fn r(&self, i: GenIdx, a: GenIdx, b: GenIdx) -> Scalar {
        self.bracket(i, a).coefficient(b)
    }

    /// `Q_{ij}^a`: coefficient of the even generator `a` in `{F⁺_i, F⁻_j}`.
    pub fn q_odd(&self, i: GenIdx, j: GenIdx, a: GenIdx) -> Scalar {
        self.bracket(i, j).coefficient(a)
    }

    /// `g_{ij}`: coefficient of the central generator `z` in `{F_i, F_j}`.
    pub fn g_pair(&self, i: GenIdx, j: GenIdx, z: GenIdx) -> Scalar {
        self.bracket(i, j).coefficient(z)
    }

    pub fn render_element(&self, e: &Element) -> String {
        render_terms(
            e.terms()
                .map(|(g, c)| (c.clone(), self.name_of(g).to_string())),
        )
    }

    pub fn render_quadratic(&self, e: &EvenQuadratic) -> String {
        let terms = std::iter::once((e.constant.clone(), String::new()))
            .chain(
                e.linear()
                    .map(|(g, c)| (c.clone(), self.name_of(g).to_string())),
            )
            .chain(e.quad().map(|((a, b), c)| {
                let label = if a == b {
                    format!("{}^2", self.name_of(a))
                } else {
                    format!("sym({},{})", self.name_of(a), self.name_of(b))
                };
                (c.clone(), label)
            }));
        render_terms(terms)
    }

    /// The sub-presentation on the generators accepted by `keep`; brackets
    /// touching a dropped generator are discarded.
    pub fn restrict(&self, keep: impl Fn(&GeneratorId) -> bool) -> Result<AlgebraPresentation> {
        let mut b = PresentationBuilder::new(&self.name, self.kind);
        for g in &self.generators {
            if keep(g) {
                b.generator(&g.name, g.grade)?;
            }
        }
        let keep_idx: Vec<bool> = self.generators.iter().map(&keep).collect();
        let mapped = |e: &Element| -> Option<Vec<(String, Scalar)>> {
            let mut out = Vec::new();
            for (g, c) in e.terms() {
                if !keep_idx[g] {
                    return None;
                }
                out.push((self.name_of(g).to_string(), c.clone()));
            }
            Some(out)
        };
        for ((i, j), e) in self.bracket_entries() {
            if keep_idx[i] && keep_idx[j] {
                let terms = mapped(e).ok_or_else(|| {
                    Error::ShapeMismatch(format!(
                        "bracket [{}, {}] leaves the retained generators",
                        self.name_of(i),
                        self.name_of(j)
                    ))
                })?;
                b.bracket_named(self.name_of(i), self.name_of(j), &terms)?;
            }
        }
        for (k, q) in self.quartic_entries() {
            if k.iter().all(|&g| keep_idx[g]) {
                let names = k.map(|g| self.name_of(g).to_string());
                let mut out = EvenQuadratic::zero();
                out.constant = q.constant.clone();
                let idx = |g: GenIdx| b.index_of(self.name_of(g)).expect("kept");
                for (g, c) in q.linear() {
                    out.add_linear(idx(g), c);
                }
                for ((x, y), c) in q.quad() {
                    out.add_sym(idx(x), idx(y), c);
                }
                let ids = names.clone().map(|n| b.index_of(&n).expect("kept"));
                b.quartic(ids, out)?;
            }
        }
        b.build()
    }
}

fn render_terms(terms: impl Iterator<Item = (Scalar, String)>) -> String {
    let mut out = String::new();
    for (c, label) in terms {
        if c.is_zero() {
            continue;
        }
        let mut coeff = c.to_string();
        let negative = c.len() == 1 && coeff.starts_with('-');
        if negative {
            coeff.remove(0);
        }
        let simple = c.len() == 1;
        let piece = match (label.is_empty(), simple) {
            (true, true) => coeff,
            (true, false) => format!("({coeff})"),
            (false, true) if coeff == "1" => label,
            (false, true) => format!("{coeff}*{label}"),
            (false, false) => format!("({coeff})*{label}"),
        };
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&piece);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Incremental construction with invariant checks at every step and on
/// [`build`](PresentationBuilder::build).
#[derive(Debug)]
pub struct PresentationBuilder {
    name: String,
    kind: AlgebraKind,
    generators: Vec<GeneratorId>,
    tables: StructureTables,
}

impl PresentationBuilder {
    pub fn new(name: &str, kind: AlgebraKind) -> Self {
        PresentationBuilder {
            name: name.to_string(),
            kind,
            generators: Vec::new(),
            tables: StructureTables::default(),
        }
    }

    pub fn generator(&mut self, name: &str, grade: Grade) -> Result<GenIdx> {
        if self.generators.iter().any(|g| g.name == name) {
            return Err(Error::validation(
                "unique generator names",
                format!("`{name}` declared twice"),
            ));
        }
        self.generators.push(GeneratorId::new(name, grade));
        Ok(self.generators.len() - 1)
    }

    pub fn index_of(&self, name: &str) -> Option<GenIdx> {
        self.generators.iter().position(|g| g.name == name)
    }

    fn resolve(&self, name: &str) -> Result<GenIdx> {
        self.index_of(name).ok_or_else(|| {
            Error::validation(
                "declared generators",
                format!("`{name}` is not a declared generator"),
            )
        })
    }

    /// Record `[a, b] = value`. Giving the same pair in both orders is allowed
    /// as long as the two entries agree under graded antisymmetry.
    pub fn bracket(&mut self, a: GenIdx, b: GenIdx, value: Element) -> Result<()> {
        let both_odd = Parity::both_odd(self.generators[a].parity(), self.generators[b].parity());
        let (key, stored) = if a <= b {
            ((a, b), value)
        } else if both_odd {
            ((b, a), value)
        } else {
            ((b, a), value.neg())
        };
        if a == b && !both_odd && !stored.is_zero() {
            return Err(Error::validation(
                "antisymmetric even bracket",
                format!("[{0}, {0}] must vanish", self.generators[a].name),
            ));
        }
        if let Some(prev) = self.tables.brackets.get(&key) {
            if *prev != stored {
                let invariant = if both_odd {
                    "symmetric odd-odd bracket"
                } else {
                    "antisymmetric bracket"
                };
                return Err(Error::validation(
                    invariant,
                    format!(
                        "the two orders of ({}, {}) disagree",
                        self.generators[key.0].name, self.generators[key.1].name
                    ),
                ));
            }
            return Ok(());
        }
        if !stored.is_zero() {
            self.tables.brackets.insert(key, stored);
        }
        Ok(())
    }

    pub fn bracket_named(&mut self, a: &str, b: &str, terms: &[(String, Scalar)]) -> Result<()> {
        let (ia, ib) = (self.resolve(a)?, self.resolve(b)?);
        let mut e = Element::zero();
        for (g, c) in terms {
            e.add_term(self.resolve(g)?, c);
        }
        self.bracket(ia, ib, e)
    }

    /// Record a four-bracket value; a repeated multiset must agree.
    pub fn quartic(&mut self, args: [GenIdx; 4], value: EvenQuadratic) -> Result<()> {
        let key = multiset_key(args);
        if let Some(prev) = self.tables.quartic.get(&key) {
            if *prev != value {
                return Err(Error::validation(
                    "totally symmetric four-bracket",
                    format!(
                        "orderings of {{{}}} disagree",
                        key.map(|g| self.generators[g].name.clone()).join(", ")
                    ),
                ));
            }
            return Ok(());
        }
        if !value.is_zero() {
            self.tables.quartic.insert(key, value);
        }
        Ok(())
    }

    pub fn build(self) -> Result<AlgebraPresentation> {
        let mut seen = HashSet::new();
        for g in &self.generators {
            if !seen.insert(g.name.as_str()) {
                return Err(Error::validation("unique generator names", g.name.clone()));
            }
        }
        let gens = &self.generators;
        for (&(a, b), e) in &self.tables.brackets {
            let (ga, gb) = (gens[a].grade, gens[b].grade);
            let both_odd = ga.is_odd() && gb.is_odd();
            if both_odd && self.kind == AlgebraKind::OrderFour {
                return Err(Error::validation(
                    "order-four algebras have no quadratic odd-odd bracket",
                    format!("{{{}, {}}}", gens[a].name, gens[b].name),
                ));
            }
            for (g, _) in e.terms() {
                let gr = gens[g].grade;
                let ok = match (ga.is_odd(), gb.is_odd()) {
                    (true, true) => gr == ga + gb,
                    (false, true) => gr == gb,
                    (true, false) => gr == ga,
                    (false, false) => !gr.is_odd(),
                };
                if !ok {
                    return Err(Error::validation(
                        "grading",
                        format!(
                            "[{}, {}] has a component along {} of grade {}",
                            gens[a].name, gens[b].name, gens[g].name, gr
                        ),
                    ));
                }
            }
        }
        if self.kind == AlgebraKind::Superalgebra && !self.tables.quartic.is_empty() {
            return Err(Error::validation(
                "superalgebras carry no quartic table",
                "quartic entries present",
            ));
        }
        for (k, q) in &self.tables.quartic {
            if let Some(&g) = k.iter().find(|&&g| !gens[g].grade.is_odd()) {
                return Err(Error::validation(
                    "four-brackets take odd arguments",
                    gens[g].name.clone(),
                ));
            }
            let target = k.iter().fold(Grade::CENTRAL, |acc, &g| acc + gens[g].grade);
            let constant_ok = q.constant.is_zero() || target == Grade::CENTRAL;
            let linear_ok = q.linear().all(|(g, _)| gens[g].grade == target);
            let quad_ok = q
                .quad()
                .all(|((x, y), _)| gens[x].grade + gens[y].grade == target);
            if !(constant_ok && linear_ok && quad_ok) {
                return Err(Error::validation(
                    "grading",
                    format!(
                        "four-bracket of {{{}}} leaves the grade-{} component",
                        k.map(|g| gens[g].name.clone()).join(", "),
                        target
                    ),
                ));
            }
        }
        Ok(AlgebraPresentation {
            name: self.name,
            kind: self.kind,
            generators: self.generators,
            tables: self.tables,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> PresentationBuilder {
        let mut b = PresentationBuilder::new("small", AlgebraKind::Superalgebra);
        b.generator("Z", Grade::CENTRAL).unwrap();
        b.generator("B", Grade::BOSONIC).unwrap();
        b.generator("Fp", Grade::PLUS).unwrap();
        b.generator("Fm", Grade::MINUS).unwrap();
        b
    }

    #[test]
    fn graded_antisymmetry_of_lookup() {
        let mut b = small();
        b.bracket(2, 3, Element::generator(1)).unwrap();
        b.bracket(1, 2, Element::generator(2)).unwrap();
        let p = b.build().unwrap();
        assert_eq!(p.bracket(3, 2), Element::generator(1));
        assert_eq!(p.bracket(2, 1), Element::generator(2).neg());
    }

    #[test]
    fn asymmetric_odd_pair_is_rejected() {
        let mut b = small();
        b.bracket(2, 2, Element::generator(0)).unwrap();
        let z2 = Element::term(0, Scalar::from_int(2));
        b.bracket(2, 3, Element::generator(1)).unwrap();
        let err = b.bracket(3, 2, Element::generator(1).scaled(&Scalar::from_int(-1)));
        match err {
            Err(Error::Validation { invariant, .. }) => {
                assert_eq!(invariant, "symmetric odd-odd bracket")
            }
            other => panic!("unexpected {other:?}"),
        }
        // Agreeing duplicates are fine.
        b.bracket(3, 2, Element::generator(1)).unwrap();
        let _ = z2;
    }

    #[test]
    fn self_bracket_of_even_generator_must_vanish() {
        let mut b = small();
        assert!(b.bracket(1, 1, Element::generator(1)).is_err());
    }

    #[test]
    fn grading_violation_is_rejected() {
        let mut b = small();
        // {F⁺, F⁺} must land in the central grade.
        b.bracket(2, 2, Element::generator(1)).unwrap();
        assert!(
            matches!(b.build(), Err(Error::Validation { invariant, .. }) if invariant == "grading")
        );
    }

    #[test]
    fn empty_presentation_is_valid() {
        let p = PresentationBuilder::new("empty", AlgebraKind::Superalgebra)
            .build()
            .unwrap();
        assert!(p.generators().is_empty());
    }

    #[test]
    fn even_quadratic_ratio() {
        let mut a = EvenQuadratic::zero();
        a.add_sym(0, 0, &Scalar::from_int(8));
        a.add_linear(1, &Scalar::from_int(-4));
        let mut b = EvenQuadratic::zero();
        b.add_sym(0, 0, &Scalar::from_int(2));
        b.add_linear(1, &Scalar::from_int(-1));
        assert_eq!(
            a.constant_ratio(&b),
            Some(GaussianRational::from_integer(4))
        );
        b.add_linear(1, &Scalar::from_int(1));
        assert_eq!(a.constant_ratio(&b), None);
    }
}
