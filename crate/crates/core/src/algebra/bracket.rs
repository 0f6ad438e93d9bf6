use crate::error::Result;
use crate::matrix::Matrix;

use super::presentation::Parity;

/// `AB − BA`, or `AB + BA` when both arguments are odd.
pub fn graded_bracket(a: &Matrix, b: &Matrix, pa: Parity, pb: Parity) -> Result<Matrix> {
    if Parity::both_odd(pa, pb) {
        a.anticommutator(b)
    } else {
        a.commutator(b)
    }
}

/// Sum of the 24 ordered products of the four arguments.
pub fn four_bracket_sym(args: [&Matrix; 4]) -> Result<Matrix> {
    for m in &args[1..] {
        args[0].check_same_dim(m)?;
    }
    // Heap's algorithm over the argument order.
    let mut perm = [0usize, 1, 2, 3];
    let mut c = [0usize; 4];
    let product = |p: &[usize; 4]| &(&(args[p[0]] * args[p[1]]) * args[p[2]]) * args[p[3]];
    let mut out = product(&perm);
    let mut i = 0;
    while i < 4 {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            out += &product(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(out)
}

/// `{{A1,A2},{A3,A4}} + {{A1,A3},{A2,A4}} + {{A1,A4},{A2,A3}}`.
pub fn four_bracket_nested(args: [&Matrix; 4]) -> Result<Matrix> {
    let [a1, a2, a3, a4] = args;
    let t1 = a1
        .anticommutator(a2)?
        .anticommutator(&a3.anticommutator(a4)?)?;
    let t2 = a1
        .anticommutator(a3)?
        .anticommutator(&a2.anticommutator(a4)?)?;
    let t3 = a1
        .anticommutator(a4)?
        .anticommutator(&a2.anticommutator(a3)?)?;
    Ok(&(&t1 + &t2) + &t3)
}
