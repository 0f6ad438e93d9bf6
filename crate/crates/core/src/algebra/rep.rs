use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Bindings, Scalar};

use super::presentation::{AlgebraPresentation, Element, EvenQuadratic, GenIdx};

/// Matrix images of generators, keyed by generator name.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    pub name: String,
    dim: usize,
    images: BTreeMap<String, Matrix>,
    pub bindings: Bindings,
}

impl Representation {
    pub fn new(name: &str, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch(
                "representation dimension must be positive".into(),
            ));
        }
        Ok(Representation {
            name: name.to_string(),
            dim,
            images: BTreeMap::new(),
            bindings: Bindings::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn insert(&mut self, generator: &str, image: Matrix) -> Result<()> {
        if image.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "image of `{generator}` is {0}x{0}, expected {1}x{1}",
                image.dim(),
                self.dim
            )));
        }
        self.images.insert(generator.to_string(), image);
        Ok(())
    }

    pub fn image(&self, generator: &str) -> Result<&Matrix> {
        self.images
            .get(generator)
            .ok_or_else(|| Error::MissingImage(generator.to_string()))
    }

    pub fn images(&self) -> impl Iterator<Item = (&str, &Matrix)> {
        self.images.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Images of the presentation's generators in index order.
    pub fn images_for(&self, p: &AlgebraPresentation) -> Result<Vec<Matrix>> {
        p.generators()
            .iter()
            .map(|g| self.image(&g.name).cloned())
            .collect()
    }

    /// Substitute the stored bindings into every image. Symbols without a
    /// binding are left symbolic.
    pub fn bound(&self) -> Representation {
        if self.bindings.is_empty() {
            return self.clone();
        }
        let subs: BTreeMap<_, _> = self
            .bindings
            .iter()
            .map(|(k, v)| (k.clone(), Scalar::constant(v.clone())))
            .collect();
        let images = self
            .images
            .iter()
            .map(|(k, m)| (k.clone(), m.map(|e| e.substitute(&subs))))
            .collect();
        Representation {
            name: self.name.clone(),
            dim: self.dim,
            images,
            bindings: Bindings::new(),
        }
    }
}

/// Evaluate a linear combination of generators.
pub fn evaluate_element(
    p: &AlgebraPresentation,
    e: &Element,
    rep: &Representation,
) -> Result<Matrix> {
    let mut out = Matrix::zeros(rep.dim());
    for (g, c) in e.terms() {
        out += &rep.image(p.name_of(g))?.scale(c);
    }
    Ok(out)
}

/// `constant·1 + Σ linear·M_i + Σ quad·½(M_iM_j + M_jM_i)`.
pub fn evaluate_even_quadratic(
    p: &AlgebraPresentation,
    e: &EvenQuadratic,
    rep: &Representation,
) -> Result<Matrix> {
    evaluate_with(e, rep.dim(), |g| rep.image(p.name_of(g)))
}

pub(crate) fn evaluate_with<'a>(
    e: &EvenQuadratic,
    dim: usize,
    image: impl Fn(GenIdx) -> Result<&'a Matrix>,
) -> Result<Matrix> {
    let mut out = Matrix::scalar(dim, e.constant.clone());
    for (g, c) in e.linear() {
        out += &image(g)?.scale(c);
    }
    let half = Scalar::constant(crate::scalar::GaussianRational::from_ratio(1, 2));
    for ((a, b), c) in e.quad() {
        let (ma, mb) = (image(a)?, image(b)?);
        let sym = if a == b {
            ma.try_mul(ma)?
        } else {
            ma.anticommutator(mb)?.scale(&half)
        };
        out += &sym.scale(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::{AlgebraKind, Grade, PresentationBuilder};

    #[test]
    fn wrong_size_image_is_rejected() {
        let mut r = Representation::new("r", 2).unwrap();
        assert!(r.insert("X", Matrix::identity(3)).is_err());
        assert!(matches!(r.image("X"), Err(Error::MissingImage(_))));
    }

    #[test]
    fn central_square_evaluates_to_z_squared() {
        let mut b = PresentationBuilder::new("t", AlgebraKind::OrderFour);
        let z = b.generator("Z", Grade::CENTRAL).unwrap();
        let p = b.build().unwrap();
        let mut r = Representation::new("r", 3).unwrap();
        r.insert("Z", Matrix::scalar(3, Scalar::symbol("z")))
            .unwrap();
        let mut e = EvenQuadratic::zero();
        e.add_sym(z, z, &Scalar::one());
        let m = evaluate_even_quadratic(&p, &e, &r).unwrap();
        assert_eq!(m.as_scalar(), Some(Scalar::symbol("z").pow(2)));
    }

    #[test]
    fn bindings_substitute() {
        let mut r = Representation::new("r", 1).unwrap();
        r.insert("Z", Matrix::scalar(1, Scalar::symbol("z")))
            .unwrap();
        r.bindings
            .insert("z".into(), crate::scalar::GaussianRational::from_integer(3));
        assert_eq!(
            r.bound().image("Z").unwrap().as_scalar(),
            Some(Scalar::from_int(3))
        );
    }
}
