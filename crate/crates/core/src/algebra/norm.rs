use alloc::vec::Vec;

use super::{Artinian, ArtinianElem, Field, FieldElem, FiniteAlgebra, Matrix, Ring};
use crate::{Error, Result};

/// `N_{A/k}(a)` as the determinant of multiplication by `a`.
pub fn algebra_norm<A: FiniteAlgebra>(alg: &A, a: &A::Elem, over: &Field) -> Result<FieldElem> {
    alg.norm_over(a, over)
}

pub fn algebra_trace<A: FiniteAlgebra>(alg: &A, a: &A::Elem, over: &Field) -> Result<FieldElem> {
    alg.trace_over(a, over)
}

/// Both sides of `N_{k'/k}(det T) = det(T viewed over k)`.
///
/// The right side replaces each entry of `T` by its multiplication matrix
/// over `over`.
pub fn norm_det_compat(t: &Matrix<Field>, over: &Field) -> Result<(FieldElem, FieldElem)> {
    let field = t.ring();
    if !t.is_square() {
        return Err(Error::SizeMismatch);
    }
    let lhs = field.norm_over(&t.det(), over)?;
    let d = field.degree_over(over)?;
    let n = t.rows();
    let mut big = Matrix::zeros(over, n * d, n * d);
    for i in 0..n {
        for j in 0..n {
            let block = if d == 1 {
                let c = if field == over { t.get(i, j).clone() } else { field.to_prime(t.get(i, j)).ok_or(Error::MismatchedTower)? };
                Matrix::from_fn(over, 1, 1, |_, _| c.clone())
            } else {
                field.multiplication_matrix(t.get(i, j))
            };
            for a in 0..d {
                for b in 0..d {
                    big.set(i * d + a, j * d + b, block.get(a, b).clone());
                }
            }
        }
    }
    Ok((lhs, big.det()))
}

/// Norm from `k'[e]/(...)` down to `k[e]/(...)` for `k'` a finite extension
/// of the prime field `k`.
///
/// Returns the target algebra along with the norm.
pub fn relative_norm(alg: &Artinian, a: &ArtinianElem, target: &Field) -> Result<(Artinian, ArtinianElem)> {
    let big = alg.base();
    if big == target {
        return Ok((alg.clone(), a.clone()));
    }
    if big.prime_field() != *target {
        return Err(Error::MismatchedTower);
    }
    let small = alg.with_base(target);
    let d = big.degree();
    let u = big.generator().ok_or(Error::MismatchedTower)?;
    // coordinates of u^s over the prime field
    let powers: Vec<Vec<FieldElem>> = (0..2 * d).map(|s| big.coordinates(&big.pow(&u, s as u64))).collect();
    // a = sum_j u^j r_j with r_j in the small algebra
    let parts: Vec<ArtinianElem> = (0..d)
        .map(|j| {
            let coords: Vec<FieldElem> = a.coords().iter().map(|c| big.coordinates(c)[j].clone()).collect();
            small.from_coordinates(&coords)
        })
        .collect();
    let m = Matrix::from_fn(&small, d, d, |l, i| {
        small.sum(parts.iter().enumerate().map(|(j, r)| small.mul(r, &small.embed(&powers[i + j][l]))).collect::<Vec<_>>().iter())
    });
    let n = m.det();
    Ok((small, n))
}
