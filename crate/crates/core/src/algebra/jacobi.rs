use std::collections::HashMap;

use rayon::prelude::*;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{Failure, VerificationReport};
use crate::scalar::Scalar;

use super::bracket::{four_bracket_nested, four_bracket_sym, graded_bracket};
use super::presentation::{
    AlgebraKind, AlgebraPresentation, Element, EvenQuadratic, GenIdx, Parity,
};
use super::rep::{evaluate_element, evaluate_even_quadratic, Representation};

/// Non-decreasing `k`-tuples over `0..n`, in lexicographic order.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    go(n, k, 0, &mut cur, &mut out);
    out
}

fn parity_of_sum(a: Parity, b: Parity) -> Parity {
    if a == b {
        Parity::Even
    } else {
        Parity::Odd
    }
}

fn matrix_failure(names: Vec<String>, residual: &Matrix) -> Option<Failure> {
    (!residual.is_zero()).then(|| Failure::new(names, residual.to_sparse_json()))
}

fn collect(
    check: &str,
    subject: &str,
    outcomes: Vec<Result<Option<Failure>>>,
) -> Result<VerificationReport> {
    let outcomes: Vec<Option<Failure>> = outcomes.into_iter().collect::<Result<_>>()?;
    Ok(VerificationReport::from_outcomes(check, subject, outcomes))
}

/// Representation-level super-Jacobi check.
///
/// First every stored or implied bracket is compared with the graded matrix
/// bracket of the images (pair instances), then the graded Jacobi identity
/// `[x,[y,w]] = [[x,y],w] + (−1)^{|x||y|}[y,[x,w]]` is evaluated on every
/// generator triple, with inner brackets taken from the table.
pub fn check_super_jacobi(
    p: &AlgebraPresentation,
    rep: &Representation,
) -> Result<VerificationReport> {
    if p.kind != AlgebraKind::Superalgebra {
        return Err(Error::ShapeMismatch(
            "super-Jacobi check needs a superalgebra presentation".into(),
        ));
    }
    let images = rep.images_for(p)?;
    let n = p.generators().len();
    let name = |g: GenIdx| p.name_of(g).to_string();

    let pairs = multisets(n, 2);
    let pair_outcomes: Vec<Result<Option<Failure>>> = pairs
        .par_iter()
        .map(|ij| {
            let (i, j) = (ij[0], ij[1]);
            let claim = evaluate_element(p, &p.bracket(i, j), rep)?;
            let actual = graded_bracket(&images[i], &images[j], p.parity(i), p.parity(j))?;
            Ok(matrix_failure(vec![name(i), name(j)], &(&claim - &actual)))
        })
        .collect();

    let triples = multisets(n, 3);
    let triple_outcomes: Vec<Result<Option<Failure>>> = triples
        .par_iter()
        .map(|t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let (pi, pj, pk) = (p.parity(i), p.parity(j), p.parity(k));
            let jk = evaluate_element(p, &p.bracket(j, k), rep)?;
            let ij = evaluate_element(p, &p.bracket(i, j), rep)?;
            let ik = evaluate_element(p, &p.bracket(i, k), rep)?;
            let lhs = graded_bracket(&images[i], &jk, pi, parity_of_sum(pj, pk))?;
            let r1 = graded_bracket(&ij, &images[k], parity_of_sum(pi, pj), pk)?;
            let mut r2 = graded_bracket(&images[j], &ik, pj, parity_of_sum(pi, pk))?;
            if Parity::both_odd(pi, pj) {
                r2 = -&r2;
            }
            let residual = &(&lhs - &r1) - &r2;
            Ok(matrix_failure(vec![name(i), name(j), name(k)], &residual))
        })
        .collect();

    let mut outcomes = pair_outcomes;
    outcomes.extend(triple_outcomes);
    collect("super-jacobi", &rep.name, outcomes)
}

/// Structure-constant-level graded Jacobi identity over every generator
/// triple. Residuals are linear combinations of generators.
pub fn check_super_jacobi_tables(p: &AlgebraPresentation) -> VerificationReport {
    let n = p.generators().len();
    let triples = multisets(n, 3);
    let outcomes: Vec<Option<Failure>> = triples
        .par_iter()
        .map(|t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let lhs = p.bracket_with(i, &p.bracket(j, k));
            let r1 = p.bracket_left(&p.bracket(i, j), k);
            let mut r2 = p.bracket_with(j, &p.bracket(i, k));
            if Parity::both_odd(p.parity(i), p.parity(j)) {
                r2 = r2.neg();
            }
            let mut residual = lhs;
            residual.add_scaled(&r1, &Scalar::from_int(-1));
            residual.add_scaled(&r2, &Scalar::from_int(-1));
            (!residual.is_zero()).then(|| {
                Failure::new(
                    [i, j, k]
                        .iter()
                        .map(|&g| p.name_of(g).to_string())
                        .collect(),
                    Value::String(p.render_element(&residual)),
                )
            })
        })
        .collect();
    VerificationReport::from_outcomes("super-jacobi-tables", &p.name, outcomes)
}

/// Generalised Jacobi identity on every 5-multiset of the given odd
/// generators: `Σ_i [Y_{a_i}, {Y_{a_1},…,Ŷ_{a_i},…,Y_{a_5}}] = 0`, with the
/// four-bracket computed from the images by the nested identity.
pub fn check_generalized_jacobi(
    odd: &[String],
    rep: &Representation,
) -> Result<VerificationReport> {
    let images: Vec<&Matrix> = odd.iter().map(|g| rep.image(g)).collect::<Result<_>>()?;
    let n = odd.len();
    let fours: Vec<Vec<usize>> = multisets(n, 4);
    let cache: HashMap<Vec<usize>, Matrix> = fours
        .par_iter()
        .map(|k| {
            let m = four_bracket_nested([images[k[0]], images[k[1]], images[k[2]], images[k[3]]])?;
            Ok((k.clone(), m))
        })
        .collect::<Result<_>>()?;

    let fives = multisets(n, 5);
    let outcomes: Vec<Result<Option<Failure>>> = fives
        .par_iter()
        .map(|five| {
            let mut residual = Matrix::zeros(rep.dim());
            for skip in 0..5 {
                let rest: Vec<usize> = five
                    .iter()
                    .enumerate()
                    .filter(|&(s, _)| s != skip)
                    .map(|(_, &g)| g)
                    .collect();
                residual += &images[five[skip]].commutator(&cache[&rest])?;
            }
            let names = five.iter().map(|&g| odd[g].clone()).collect();
            Ok(matrix_failure(names, &residual))
        })
        .collect();
    collect("generalized-jacobi", &rep.name, outcomes)
}

/// `[Y, e]` as a linear combination when `e` has no quadratic part acting
/// nontrivially on odd generators.
fn odd_bracket_with_quadratic(
    p: &AlgebraPresentation,
    y: GenIdx,
    e: &EvenQuadratic,
) -> Result<Element> {
    let trivial = |g: GenIdx| p.bracket(g, y).is_zero();
    let mut out = Element::zero();
    for (g, c) in e.linear() {
        out.add_scaled(&p.bracket(y, g), c);
    }
    for ((a, b), _) in e.quad() {
        if !(trivial(a) && trivial(b)) {
            return Err(Error::ShapeMismatch(format!(
                "[{}, sym({}, {})] leaves the algebra",
                p.name_of(y),
                p.name_of(a),
                p.name_of(b)
            )));
        }
    }
    Ok(out)
}

/// Structure-constant-level generalised Jacobi identity for an order-four
/// presentation.
pub fn check_generalized_jacobi_tables(p: &AlgebraPresentation) -> Result<VerificationReport> {
    if p.kind != AlgebraKind::OrderFour {
        return Err(Error::ShapeMismatch(
            "generalised Jacobi check needs an order-four presentation".into(),
        ));
    }
    let odd = p.odd_generators();
    let fives = multisets(odd.len(), 5);
    let outcomes: Vec<Result<Option<Failure>>> = fives
        .par_iter()
        .map(|five| {
            let gens: Vec<GenIdx> = five.iter().map(|&k| odd[k]).collect();
            let mut residual = Element::zero();
            for skip in 0..5 {
                let mut rest = [0; 4];
                let mut r = 0;
                for (s, &g) in gens.iter().enumerate() {
                    if s != skip {
                        rest[r] = g;
                        r += 1;
                    }
                }
                let term = odd_bracket_with_quadratic(p, gens[skip], &p.quartic(rest))?;
                residual.add_scaled(&term, &Scalar::one());
            }
            Ok((!residual.is_zero()).then(|| {
                Failure::new(
                    gens.iter().map(|&g| p.name_of(g).to_string()).collect(),
                    Value::String(p.render_element(&residual)),
                )
            }))
        })
        .collect();
    collect("generalized-jacobi-tables", &p.name, outcomes)
}

/// The four-bracket extended multilinearly to odd linear combinations.
pub fn quartic_multilinear(p: &AlgebraPresentation, args: [&Element; 4]) -> EvenQuadratic {
    let mut out = EvenQuadratic::zero();
    for (g0, c0) in args[0].terms() {
        for (g1, c1) in args[1].terms() {
            for (g2, c2) in args[2].terms() {
                for (g3, c3) in args[3].terms() {
                    let c = &(&(c0 * c1) * c2) * c3;
                    out.add_scaled(&p.quartic([g0, g1, g2, g3]), &c);
                }
            }
        }
    }
    out
}

/// `[X, {Y₁,Y₂,Y₃,Y₄}] = Σ_s {…,[X,Y_s],…}` for each even `X` and 4-multiset of
/// odd generators, with both sides taken from the tables and evaluated in the
/// representation.
pub fn check_equivariance(
    p: &AlgebraPresentation,
    rep: &Representation,
) -> Result<VerificationReport> {
    if p.kind != AlgebraKind::OrderFour {
        return Err(Error::ShapeMismatch(
            "equivariance check needs an order-four presentation".into(),
        ));
    }
    let odd = p.odd_generators();
    let even = p.even_generators();
    let fours = multisets(odd.len(), 4);
    let (odd, fours) = (&odd, &fours);
    let cases: Vec<(GenIdx, [GenIdx; 4])> = even
        .iter()
        .flat_map(|&x| {
            fours
                .iter()
                .map(move |k| (x, [odd[k[0]], odd[k[1]], odd[k[2]], odd[k[3]]]))
        })
        .collect();
    let outcomes: Vec<Result<Option<Failure>>> = cases
        .par_iter()
        .map(|&(x, ys)| {
            let mx = rep.image(p.name_of(x))?;
            let lhs = mx.commutator(&evaluate_even_quadratic(p, &p.quartic(ys), rep)?)?;
            let gens = ys.map(Element::generator);
            let mut rhs = EvenQuadratic::zero();
            for s in 0..4 {
                let moved = p.bracket(x, ys[s]);
                if moved.is_zero() {
                    continue;
                }
                let mut slots = [&gens[0], &gens[1], &gens[2], &gens[3]];
                slots[s] = &moved;
                rhs.add_scaled(&quartic_multilinear(p, slots), &Scalar::one());
            }
            let rhs = evaluate_even_quadratic(p, &rhs, rep)?;
            let mut names = vec![p.name_of(x).to_string()];
            names.extend(ys.iter().map(|&g| p.name_of(g).to_string()));
            Ok(matrix_failure(names, &(&lhs - &rhs)))
        })
        .collect();
    collect("equivariance", &rep.name, outcomes)
}

/// Compare the quartic table, evaluated in the representation, with the
/// symmetrised product of the odd images, on every 4-multiset.
pub fn check_quartic_transfer(
    p: &AlgebraPresentation,
    rep: &Representation,
) -> Result<VerificationReport> {
    let odd = p.odd_generators();
    let images = rep.images_for(p)?;
    let fours = multisets(odd.len(), 4);
    let outcomes: Vec<Result<Option<Failure>>> = fours
        .par_iter()
        .map(|k| {
            let ys = [odd[k[0]], odd[k[1]], odd[k[2]], odd[k[3]]];
            let table = evaluate_even_quadratic(p, &p.quartic(ys), rep)?;
            let actual = four_bracket_sym(ys.map(|g| &images[g]))?;
            let names = ys.iter().map(|&g| p.name_of(g).to_string()).collect();
            Ok(matrix_failure(names, &(&table - &actual)))
        })
        .collect();
    collect("quartic-transfer", &rep.name, outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::{Grade, PresentationBuilder};

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(8, 5).len(), 792);
        assert_eq!(multisets(8, 4).len(), 330);
        assert_eq!(multisets(3, 2).len(), 6);
        assert!(multisets(0, 5).is_empty());
    }

    fn abelian_pair() -> AlgebraPresentation {
        let mut b = PresentationBuilder::new("abelian", AlgebraKind::Superalgebra);
        b.generator("X", Grade::BOSONIC).unwrap();
        b.generator("Y", Grade::BOSONIC).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn zero_rep_passes() {
        let p = abelian_pair();
        let mut r = Representation::new("zero", 2).unwrap();
        r.insert("X", Matrix::zeros(2)).unwrap();
        r.insert("Y", Matrix::zeros(2)).unwrap();
        assert!(check_super_jacobi(&p, &r).unwrap().passed());
    }

    #[test]
    fn noncommuting_images_of_abelian_algebra_fail_at_the_pair() {
        let p = abelian_pair();
        let mut r = Representation::new("bad", 2).unwrap();
        let x = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
        let y = Matrix::from_ints(&[&[0, 0], &[1, 0]]);
        r.insert("X", x.clone()).unwrap();
        r.insert("Y", y.clone()).unwrap();
        let rep = check_super_jacobi(&p, &r).unwrap();
        assert!(!rep.passed());
        let f = rep
            .failures
            .iter()
            .find(|f| f.indices == ["X", "Y"])
            .expect("pair failure located");
        // Residual = table claim (0) minus the matrix commutator.
        let expected = -&x.commutator(&y).unwrap();
        assert_eq!(f.residual, expected.to_sparse_json());
    }

    #[test]
    fn missing_image_is_an_error() {
        let p = abelian_pair();
        let r = Representation::new("empty", 2).unwrap();
        assert!(matches!(
            check_super_jacobi(&p, &r),
            Err(Error::MissingImage(_))
        ));
    }

    #[test]
    fn scalar_four_brackets_satisfy_generalized_jacobi() {
        // Odd generators squaring to scalars: Clifford generators.
        let mut r = Representation::new("cl", 2).unwrap();
        r.insert("a", Matrix::from_ints(&[&[0, 1], &[1, 0]]))
            .unwrap();
        r.insert("b", Matrix::from_ints(&[&[1, 0], &[0, -1]]))
            .unwrap();
        let odd = vec!["a".to_string(), "b".to_string()];
        let rep = check_generalized_jacobi(&odd, &r).unwrap();
        assert_eq!(rep.total, 6);
        assert!(rep.passed());
    }

    #[test]
    fn generic_matrices_satisfy_generalized_jacobi_identically() {
        // Σ_i Y_i·S(rest) and Σ_i S(rest)·Y_i both equal the full symmetrised
        // product of all five, so the sum vanishes for any matrices.
        let mut r = Representation::new("generic", 3).unwrap();
        let m = [
            Matrix::from_ints(&[&[1, 2, 0], &[0, 3, 1], &[1, 0, 0]]),
            Matrix::from_ints(&[&[0, 1, 0], &[1, 1, 2], &[0, 0, -1]]),
            Matrix::from_ints(&[&[2, 0, 1], &[0, 0, 0], &[-1, 1, 0]]),
            Matrix::from_ints(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]),
            Matrix::from_ints(&[&[1, 1, 1], &[0, 1, 1], &[0, 0, 1]]),
        ];
        let mut odd = Vec::new();
        for (k, img) in m.into_iter().enumerate() {
            odd.push(format!("Y{k}"));
            r.insert(&odd[k], img).unwrap();
        }
        let rep = check_generalized_jacobi(&odd, &r).unwrap();
        assert_eq!(rep.total, 126);
        assert!(rep.passed());
    }

    fn mutation_presentation(quartic: Option<EvenQuadratic>) -> AlgebraPresentation {
        let mut b = PresentationBuilder::new("mutation", AlgebraKind::OrderFour);
        let x = b.generator("X", Grade::CENTRAL).unwrap();
        let y = b.generator("Y", Grade::PLUS).unwrap();
        b.bracket(x, y, Element::generator(y)).unwrap();
        if let Some(q) = quartic {
            b.quartic([y; 4], q).unwrap();
        }
        b.build().unwrap()
    }

    fn mutation_rep() -> Representation {
        let mut r = Representation::new("mutation", 2).unwrap();
        r.insert("X", Matrix::from_ints(&[&[1, 0], &[0, 0]]))
            .unwrap();
        r.insert("Y", Matrix::from_ints(&[&[0, 1], &[0, 0]]))
            .unwrap();
        r
    }

    #[test]
    fn equivariance_catches_corrupted_quartic_table() {
        let r = mutation_rep();
        assert!(check_equivariance(&mutation_presentation(None), &r)
            .unwrap()
            .passed());

        let mut to_x = EvenQuadratic::zero();
        to_x.add_linear(0, &Scalar::one());
        assert!(!check_equivariance(&mutation_presentation(Some(to_x)), &r)
            .unwrap()
            .passed());

        let mut to_one = EvenQuadratic::zero();
        to_one.add_constant(&Scalar::one());
        assert!(
            !check_equivariance(&mutation_presentation(Some(to_one)), &r)
                .unwrap()
                .passed()
        );
    }
}
