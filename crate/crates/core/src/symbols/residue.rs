use crate::algebra::{Field, FieldElem, FiniteAlgebra, Matrix};
use crate::laurent::LaurentSeries;
use crate::{Error, Result};

/// `tr_{k'/k}` of the `z^{-1}` coefficient of `alpha * dbeta/dz`.
pub fn residue_coefficient(alpha: &LaurentSeries<Field>, beta: &LaurentSeries<Field>, base: &Field) -> Result<FieldElem> {
    let k = alpha.ring();
    let res = alpha.mul(&beta.derivative()).residue()?;
    k.trace_over(&res, base)
}

fn support_bound(f: &LaurentSeries<Field>) -> Result<usize> {
    if !f.is_exact() {
        return Err(Error::InvalidInput("the Tate residue needs Laurent polynomials".into()));
    }
    Ok((f.pole_order() + f.high().unwrap_or(0).max(0)) as usize)
}

/// Blocks `(beta, gamma)` of multiplication by `f` on `span{z^-w .. z^w}`:
/// `beta = pi_- f|_{V+}`, `gamma = pi_+ f|_{V-}`.
fn off_diagonal(f: &LaurentSeries<Field>, w: usize) -> (Matrix<Field>, Matrix<Field>) {
    let k = f.ring();
    let w = w as i64;
    // V- has basis z^-w..z^-1 (row/col index e + w), V+ has z^0..z^w
    let beta = Matrix::from_fn(k, w as usize, w as usize + 1, |t, s| f.c((t as i64 - w) - s as i64));
    let gamma = Matrix::from_fn(k, w as usize + 1, w as usize, |t, s| f.c(t as i64 - (s as i64 - w)));
    (beta, gamma)
}

/// `tr(gamma_2 beta_1 - gamma_1 beta_2)` on a single window, no checks.
pub fn tate_residue_unchecked(f1: &LaurentSeries<Field>, f2: &LaurentSeries<Field>, window: usize) -> FieldElem {
    let (b1, g1) = off_diagonal(f1, window);
    let (b2, g2) = off_diagonal(f2, window);
    let t = g2.mul(&b1).unwrap().sub(&g1.mul(&b2).unwrap()).unwrap();
    t.trace()
}

/// Tate's residue of `f1 df2` from the off-diagonal blocks of the
/// multiplication operators, checked on windows `w` and `w + 5`.
pub fn tate_residue(f1: &LaurentSeries<Field>, f2: &LaurentSeries<Field>, window: usize, base: &Field) -> Result<FieldElem> {
    let needed = support_bound(f1)?.max(support_bound(f2)?);
    if window < needed {
        return Err(Error::WindowTooSmall { needed, got: window });
    }
    let a = tate_residue_unchecked(f1, f2, window);
    let b = tate_residue_unchecked(f1, f2, window + 5);
    if a != b {
        return Err(Error::InvalidInput("Tate residue changed with the window".into()));
    }
    f1.ring().trace_over(&a, base)
}
