//! Acceptance suite: one line per criterion. All comparisons are exact
//! (zero residual over Gaussian rationals); there is no floating tolerance.
//!
//! Criteria listed in `KNOWN_FAILURES` are still run and reported as FAIL;
//! they only stop failing the process while they keep failing.

use std::process::ExitCode;
use std::time::Instant;

use liefour_cli::format::{emit_document, emit_form, parse_document, parse_form};
use liefour_core::algebra::{
    check_generalized_jacobi, check_quartic_transfer, evaluate_even_quadratic, four_bracket_nested,
    four_bracket_sym, induce_quartic, multisets, FamilyRatio,
};
use liefour_core::clifford::{
    build_generalized_clifford, clifford_verify, oscillator_form, quadratic_compatibility_check,
    PolynomialTarget,
};
use liefour_core::spinor::convention_reports;
use liefour_core::susy::{
    build_little_algebra_rep, verify_abstract_quartic_poincare, verify_induced_n2_quartic,
    verify_little_algebra_display, verify_zero_central_charge, Charge, DisplayComparison,
    LittleAlgebraRep,
};
use liefour_core::{GaussianRational, Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOLERANCE: &str = "exact, zero residual";

/// The rest-frame display has no single constant for the two-Q̄ family.
const KNOWN_FAILURES: &[u32] = &[6];

type Outcome = Result<String, String>;

type Criterion<'a> = (u32, &'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, dim: usize) -> Matrix {
    Matrix::from_fn(dim, |_, _| {
        let re = GaussianRational::from_ratio(rng.gen_range(-20..=20), rng.gen_range(1..=6));
        let im = GaussianRational::from_ratio(rng.gen_range(-20..=20), rng.gen_range(1..=6));
        Scalar::constant(&re + &(&im * &GaussianRational::i()))
    })
}

fn four_bracket_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4b);
    for k in 0..100 {
        let m: Vec<Matrix> = (0..4).map(|_| random_matrix(&mut rng, 4)).collect();
        let args = [&m[0], &m[1], &m[2], &m[3]];
        let (sym, nested) = (
            four_bracket_sym(args).unwrap(),
            four_bracket_nested(args).unwrap(),
        );
        if sym != nested {
            return Err(format!("quadruple {k} differs"));
        }
    }
    Ok("100/100 random 4x4 quadruples".into())
}

fn conventions() -> Outcome {
    let r = convention_reports();
    let line = r.iter().map(|x| x.summary()).collect::<Vec<_>>().join("; ");
    ensure(r.iter().all(|x| x.passed()), line.clone(), line)
}

fn self_check(l: &LittleAlgebraRep) -> Outcome {
    let r = &l.self_check;
    ensure(r.passed(), r.summary(), r.summary())
}

fn transfer(l: &LittleAlgebraRep) -> Outcome {
    let q = induce_quartic(&l.presentation).unwrap();
    let r = check_quartic_transfer(&q, &l.rep).unwrap();
    ensure(r.passed() && r.total == 330, r.summary(), r.summary())
}

fn generalized_jacobi(l: &LittleAlgebraRep) -> Outcome {
    let odd: Vec<String> = Charge::all().iter().map(|c| c.name()).collect();
    let r = check_generalized_jacobi(&odd, &l.rep).unwrap();
    ensure(r.passed() && r.total == 792, r.summary(), r.summary())
}

fn lambdas(c: &DisplayComparison) -> String {
    c.families
        .iter()
        .map(|f| {
            let v = match &f.ratio {
                FamilyRatio::Uniform(l) => l.to_string(),
                FamilyRatio::AllZero => "0/0".into(),
                FamilyRatio::NonUniform(at) => format!("none at {{{}}}", at.join(",")),
            };
            format!("{}={v}", f.family)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn displays(l: &LittleAlgebraRep) -> Outcome {
    let induced = verify_induced_n2_quartic(l).unwrap();
    let rest = verify_little_algebra_display(l).unwrap();
    let coeff = l
        .ledger
        .iter()
        .map(|e| format!("{} vs {} ({})", e.computed, e.reference, e.note))
        .next()
        .unwrap_or_default();
    let line = format!(
        "induced [{}]; rest-frame [{}]; P^2 coefficient {coeff}",
        lambdas(&induced),
        lambdas(&rest)
    );
    ensure(
        induced.report.passed() && rest.report.passed(),
        line.clone(),
        line,
    )
}

fn abstract_quartic_poincare() -> Outcome {
    let r = verify_abstract_quartic_poincare().unwrap();
    let line = r.iter().map(|x| x.summary()).collect::<Vec<_>>().join("; ");
    ensure(r.iter().all(|x| x.passed()), line.clone(), line)
}

fn zero_central_charge() -> Outcome {
    let l = build_little_algebra_rep(Scalar::symbol("m"), Scalar::zero()).unwrap();
    let q = induce_quartic(&l.presentation).unwrap();
    let table = verify_zero_central_charge(&q).unwrap();
    let odd = q.odd_generators();
    let charges = Charge::all();
    let mut evaluated = 0;
    for k in multisets(8, 4) {
        if k.iter().filter(|&&i| charges[i].is_bar()).count() > 1 {
            continue;
        }
        let m = evaluate_even_quadratic(
            &q,
            &q.quartic([odd[k[0]], odd[k[1]], odd[k[2]], odd[k[3]]]),
            &l.rep,
        )
        .unwrap();
        if !m.is_zero() {
            return Err(format!("nonzero image at multiset {k:?}"));
        }
        evaluated += 1;
    }
    ensure(
        table.passed(),
        format!("{}; {evaluated} images vanish at z = 0", table.summary()),
        table.summary(),
    )
}

fn clifford_hierarchy(l: &LittleAlgebraRep) -> Outcome {
    let form = oscillator_form(l).unwrap();
    let c = quadratic_compatibility_check(&form);
    let Some(p) = c.quadratic else {
        return Err("oscillator form is not quadratically compatible".into());
    };
    let t = PolynomialTarget::new(p.pow(2), 4, &form.symbol_set()).unwrap();
    let fock = clifford_verify(&form, &t).unwrap();
    let g = build_generalized_clifford(2).unwrap();
    let expected: Scalar = "x1^4 + x2^4".parse().unwrap();
    let witness = clifford_verify(&g.form, &g.target).unwrap();
    let incompatible = !quadratic_compatibility_check(&g.form).compatible;
    let line = format!(
        "P = {p}; Fock {}; clock-shift {} with target {}, quadratic-incompatible: {incompatible}",
        fock.summary(),
        witness.summary(),
        g.target.poly
    );
    ensure(
        fock.passed() && witness.passed() && g.target.poly == expected && incompatible,
        line.clone(),
        line,
    )
}

fn cli_contract() -> Outcome {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in [
        "n2-susy-d4.alg",
        "quartic-poincare-eq4.alg",
        "little-rep-16.rep",
    ] {
        let text = std::fs::read_to_string(dir.join(name)).map_err(|e| e.to_string())?;
        let doc = parse_document(&text).map_err(|e| format!("{name}: {e}"))?;
        if emit_document(&doc.presentation, doc.representation.as_ref()) != text {
            return Err(format!("{name} does not round-trip"));
        }
    }
    let text =
        std::fs::read_to_string(dir.join("fock-oscillators.form")).map_err(|e| e.to_string())?;
    if emit_form(&parse_form(&text).map_err(|e| e.to_string())?) != text {
        return Err("fock-oscillators.form does not round-trip".into());
    }
    let invoke = || {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = liefour_cli::run(
            [
                "liefour",
                "verify-quartic",
                "--against",
                "induced",
                "--m",
                "m",
                "--z",
                "z",
            ],
            &mut out,
            &mut err,
        );
        (code, out)
    };
    let (a, b) = (invoke(), invoke());
    ensure(
        a.0 == 0 && a == b,
        "4 fixtures round-trip; verify-quartic --against induced exits 0, reports byte-identical"
            .into(),
        format!("exit codes {} and {}, identical: {}", a.0, b.0, a == b),
    )
}

fn main() -> ExitCode {
    let l = build_little_algebra_rep(Scalar::symbol("m"), Scalar::symbol("z")).unwrap();
    let criteria: Vec<Criterion> = vec![
        (1, "four-bracket identity", Box::new(four_bracket_identity)),
        (2, "convention suite", Box::new(conventions)),
        (3, "Fock self-check", Box::new(|| self_check(&l))),
        (4, "transfer theorem", Box::new(|| transfer(&l))),
        (5, "generalized Jacobi", Box::new(|| generalized_jacobi(&l))),
        (6, "display comparison", Box::new(|| displays(&l))),
        (
            7,
            "abstract quartic Poincare",
            Box::new(abstract_quartic_poincare),
        ),
        (8, "zero central charge", Box::new(zero_central_charge)),
        (9, "Clifford hierarchy", Box::new(|| clifford_hierarchy(&l))),
        (10, "CLI contract", Box::new(cli_contract)),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (n, name, check) in &criteria {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        let known = KNOWN_FAILURES.contains(n);
        match &outcome {
            Ok(detail) => {
                passed += 1;
                println!("criterion {n:>2} {name}: PASS [{TOLERANCE}; {secs:.1}s] {detail}");
                if known {
                    unexpected.push(format!("{n} passes but is listed as a known failure"));
                }
            }
            Err(detail) => {
                let tag = if known { " (known, ledgered)" } else { "" };
                println!("criterion {n:>2} {name}: FAIL{tag} [{TOLERANCE}; {secs:.1}s] {detail}");
                if !known {
                    unexpected.push(format!("{n} fails"));
                }
            }
        }
    }
    println!("acceptance: {passed}/{} criteria pass", criteria.len());
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected outcome: {}", unexpected.join("; "));
        ExitCode::FAILURE
    }
}
