use liefour_core::clifford::*;
use liefour_core::susy::{build_little_algebra_rep, transcribed_coefficients};
use liefour_core::{Matrix, Scalar, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn oscillator_form_is_quadratically_compatible() {
    let l = build_little_algebra_rep(Scalar::symbol("m"), Scalar::symbol("z")).unwrap();
    let form = oscillator_form(&l).unwrap();
    let c = quadratic_compatibility_check(&form);
    let p = c.quadratic.expect("compatible");
    // {a^I, a^J} = {a†_I, a†_J} = 0 and {a^I, a†_J} = δ c_I.
    assert_eq!(p, pairing_polynomial(&l.coefficients));
    let t = PolynomialTarget::new(p.pow(2), 4, &form.symbol_set()).unwrap();
    assert!(clifford_verify(&form, &t).unwrap().passed());

    let transcribed = pairing_polynomial(&transcribed_coefficients(&l.m, &l.z)).pow(2);
    let t = PolynomialTarget::new(transcribed, 4, &form.symbol_set()).unwrap();
    assert!(!clifford_verify(&form, &t).unwrap().passed());
}

#[test]
fn two_generator_witness() {
    let g = build_generalized_clifford(2).unwrap();
    assert_eq!(g.target.poly, "x1^4 + x2^4".parse::<Scalar>().unwrap());
    assert!(clifford_verify(&g.form, &g.target).unwrap().passed());
    let c = quadratic_compatibility_check(&g.form);
    assert!(!c.compatible);
    // The cross term x1 x2 (CS + SC) is off-diagonal.
    assert!(!c.square.get(1, 0).is_zero());
}

#[test]
fn wrong_quartic_target_fails() {
    let g = build_generalized_clifford(2).unwrap();
    let t =
        PolynomialTarget::new("x1^4 + 2*x2^4".parse().unwrap(), 4, &g.form.symbol_set()).unwrap();
    let r = clifford_verify(&g.form, &t).unwrap();
    assert_eq!(r.failures.len(), 4);
}

/// Jordan–Wigner gammas on two qubits with random integer weights.
#[test]
fn compatibility_transfers_to_degree_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let z = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
    let x = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
    let y = Matrix::from_ints(&[&[0, -1], &[1, 0]]).scale(&Scalar::i());
    let one = Matrix::identity(2);
    let gammas = [
        x.kron(&one),
        y.kron(&one),
        z.kron(&x),
        z.kron(&y),
        z.kron(&z),
    ];
    for _ in 0..10 {
        let k = rng.gen_range(1..=5);
        let mats: Vec<Matrix> = gammas[..k]
            .iter()
            .map(|g| g.scale(&Scalar::from_int(rng.gen_range(-5..=5))))
            .collect();
        let names = (0..k).map(|j| Symbol::new(&format!("t{j}"))).collect();
        let form = LinearForm::new(names, mats).unwrap();
        let p = quadratic_compatibility_check(&form)
            .quadratic
            .expect("anticommuting");
        let t = PolynomialTarget::new(p.pow(2), 4, &form.symbol_set()).unwrap();
        assert!(clifford_verify(&form, &t).unwrap().passed());
    }
}
