//! The determinant 2-cocycle on a finite window `V = V- (+) V+`.
//!
//! `V-` is spanned by `z^-w- .. z^-1` and `V+` by `z^0 .. z^{w+ - 1}`; an
//! operator is stored as its four blocks
//!
//! ```text
//! ( alpha  beta  )   alpha: V- -> V-   beta: V+ -> V-
//! ( gamma  delta )   gamma: V- -> V+   delta: V+ -> V+
//! ```

use alloc::vec::Vec;

use crate::algebra::{Artinian, Field, FieldElem, FiniteAlgebra, Matrix, Ring};
use crate::laurent::LaurentSeries;
use crate::{Error, Result};

#[derive(Clone, Debug)]
enum Source<R: Ring> {
    Matrix,
    Homothety(LaurentSeries<R>),
}

#[derive(Clone, Debug)]
pub struct BlockOperator<R: Ring> {
    w_minus: usize,
    w_plus: usize,
    alpha: Matrix<R>,
    beta: Matrix<R>,
    gamma: Matrix<R>,
    delta: Matrix<R>,
    source: Source<R>,
}

impl<R: Ring> BlockOperator<R> {
    pub fn from_blocks(alpha: Matrix<R>, beta: Matrix<R>, gamma: Matrix<R>, delta: Matrix<R>) -> Result<Self> {
        let (m, p) = (alpha.rows(), delta.rows());
        let shapes = [
            (alpha.rows(), alpha.cols(), m, m),
            (beta.rows(), beta.cols(), m, p),
            (gamma.rows(), gamma.cols(), p, m),
            (delta.rows(), delta.cols(), p, p),
        ];
        if shapes.iter().any(|(r, c, er, ec)| r != er || c != ec) {
            return Err(Error::SizeMismatch);
        }
        Ok(BlockOperator { w_minus: m, w_plus: p, alpha, beta, gamma, delta, source: Source::Matrix })
    }

    /// Splits a `(w- + w+)`-square matrix in the basis `z^-w- .. z^{w+ - 1}`.
    pub fn from_matrix(m: &Matrix<R>, w_minus: usize) -> Result<Self> {
        if !m.is_square() || m.rows() < w_minus {
            return Err(Error::SizeMismatch);
        }
        let n = m.rows();
        Self::from_blocks(
            m.submatrix(0, w_minus, 0, w_minus),
            m.submatrix(0, w_minus, w_minus, n),
            m.submatrix(w_minus, n, 0, w_minus),
            m.submatrix(w_minus, n, w_minus, n),
        )
    }

    pub fn identity(ring: &R, w_minus: usize, w_plus: usize) -> Self {
        Self::from_matrix(&Matrix::identity(ring, w_minus + w_plus), w_minus).unwrap()
    }

    /// Multiplication by a Laurent polynomial, truncated to the window.
    pub fn from_homothety(f: &LaurentSeries<R>, w_minus: usize, w_plus: usize) -> Result<Self> {
        if !f.is_exact() {
            return Err(Error::InvalidInput("homotheties need Laurent polynomials".into()));
        }
        let pole = f.pole_order() as usize;
        let deg = f.high().unwrap_or(0).max(0) as usize;
        if w_minus < pole {
            return Err(Error::WindowTooSmall { needed: pole, got: w_minus });
        }
        if w_plus < deg {
            return Err(Error::WindowTooSmall { needed: deg, got: w_plus });
        }
        let n = w_minus + w_plus;
        let m = Matrix::from_fn(f.ring(), n, n, |t, s| f.c(t as i64 - s as i64));
        let mut op = Self::from_matrix(&m, w_minus)?;
        op.source = Source::Homothety(f.clone());
        Ok(op)
    }

    pub fn window(&self) -> (usize, usize) {
        (self.w_minus, self.w_plus)
    }

    pub fn alpha(&self) -> &Matrix<R> {
        &self.alpha
    }

    pub fn beta(&self) -> &Matrix<R> {
        &self.beta
    }

    pub fn gamma(&self) -> &Matrix<R> {
        &self.gamma
    }

    pub fn delta(&self) -> &Matrix<R> {
        &self.delta
    }

    pub fn is_homothety(&self) -> bool {
        matches!(self.source, Source::Homothety(_))
    }

    pub fn matrix(&self) -> Matrix<R> {
        Matrix::from_blocks(&self.alpha, &self.beta, &self.gamma, &self.delta).unwrap()
    }

    fn same_window(&self, other: &Self) -> Result<()> {
        if self.window() != other.window() {
            return Err(Error::SizeMismatch);
        }
        Ok(())
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.same_window(other)?;
        Self::from_matrix(&self.matrix().mul(&other.matrix())?, self.w_minus)
    }

    /// `1 + c * self`.
    pub fn one_plus_scaled(&self, c: &R::Elem) -> Self {
        let r = self.alpha.ring().clone();
        let n = self.w_minus + self.w_plus;
        let m = Matrix::identity(&r, n).add(&self.matrix().scale(c)).unwrap();
        Self::from_matrix(&m, self.w_minus).unwrap()
    }

    pub fn map<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> BlockOperator<S> {
        BlockOperator {
            w_minus: self.w_minus,
            w_plus: self.w_plus,
            alpha: self.alpha.map(target, &f),
            beta: self.beta.map(target, &f),
            gamma: self.gamma.map(target, &f),
            delta: self.delta.map(target, &f),
            source: Source::Matrix,
        }
    }
}

fn unit_det<R: Ring>(m: &Matrix<R>, name: &'static str) -> Result<R::Elem> {
    let d = m.det();
    if m.ring().is_unit(&d) {
        Ok(d)
    } else {
        Err(Error::SingularBlock(name))
    }
}

/// `det(delta_1 delta_2 (gamma_1 beta_2 + delta_1 delta_2)^{-1})`.
pub fn cocycle_det<R: Ring>(s1: &BlockOperator<R>, s2: &BlockOperator<R>) -> Result<R::Elem> {
    s1.same_window(s2)?;
    let r = s1.alpha.ring();
    let d1 = unit_det(&s1.delta, "delta_1")?;
    let d2 = unit_det(&s2.delta, "delta_2")?;
    let delta3 = s1.gamma.mul(&s2.beta)?.add(&s1.delta.mul(&s2.delta)?)?;
    let d3 = unit_det(&delta3, "delta_3")?;
    r.div(&r.mul(&d1, &d2), &d3)
}

/// `c(S, T) / c(T, S)` without checking that `S` and `T` commute.
pub fn commutator_ratio<R: Ring>(s: &BlockOperator<R>, t: &BlockOperator<R>) -> Result<R::Elem> {
    let r = s.alpha.ring();
    r.div(&cocycle_det(s, t)?, &cocycle_det(t, s)?)
}

/// The commutator pairing `c(S, T) / c(T, S)` of two commuting operators.
///
/// Homotheties commute as operators on `k((z))`; their truncations to a
/// window only commute away from its edges, so the check is skipped when
/// both come from series.
pub fn commutator_from_cocycle<R: Ring>(s: &BlockOperator<R>, t: &BlockOperator<R>) -> Result<R::Elem> {
    s.same_window(t)?;
    if !(s.is_homothety() && t.is_homothety()) {
        let st = s.matrix().mul(&t.matrix())?;
        let ts = t.matrix().mul(&s.matrix())?;
        if st != ts {
            return Err(Error::NonCommuting);
        }
    }
    commutator_ratio(s, t)
}

/// `tr(gamma_2 beta_1 - gamma_1 beta_2)`.
pub fn lie_cocycle_fd<R: Ring>(s1: &BlockOperator<R>, s2: &BlockOperator<R>) -> Result<R::Elem> {
    s1.same_window(s2)?;
    Ok(s2.gamma.mul(&s1.beta)?.sub(&s1.gamma.mul(&s2.beta)?)?.trace())
}

/// The `e1 e2` coefficient of the commutator of `1 + e1 S1` and `1 + e2 S2`
/// over `k[e1, e2]/(e1^2, e2^2)`.
pub fn lie_cocycle_dual(s1: &BlockOperator<Field>, s2: &BlockOperator<Field>) -> Result<FieldElem> {
    s1.same_window(s2)?;
    let k = s1.alpha.ring();
    let r = Artinian::double_dual(k);
    let a = s1.map(&r, |c| r.embed(c)).one_plus_scaled(&r.generator(0));
    let b = s2.map(&r, |c| r.embed(c)).one_plus_scaled(&r.generator(1));
    let ratio = commutator_ratio(&a, &b)?;
    Ok(r.coefficient(&ratio, &[1, 1]))
}

/// `(-1)^{sum w(S) w(T)}`.
pub fn sign_aggregate(w_pairs: &[(i64, i64)]) -> i64 {
    let e: i64 = w_pairs.iter().map(|(a, b)| a * b).sum();
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Whether the local winding numbers sum to zero.
pub fn winding_sum_check(ws: &[i64]) -> bool {
    ws.iter().sum::<i64>() == 0
}

/// Blocks of a random operator with unit `delta`, for property tests.
pub fn random_block_operator<G: rand::Rng>(k: &Field, w_minus: usize, w_plus: usize, rng: &mut G) -> BlockOperator<Field> {
    loop {
        let n = w_minus + w_plus;
        let entries: Vec<Vec<FieldElem>> = (0..n).map(|_| (0..n).map(|_| crate::random::field_element(k, rng)).collect()).collect();
        let m = Matrix::from_rows(k, entries).unwrap();
        let op = BlockOperator::from_matrix(&m, w_minus).unwrap();
        if !k.is_zero(&op.delta.det()) {
            return op;
        }
    }
}
