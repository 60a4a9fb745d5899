use alloc::vec;
use core::fmt;

use num_integer::Integer;

use crate::algebra::{relative_norm, Artinian, ArtinianElem, Field, FieldElem, FiniteAlgebra, Ring};
use crate::laurent::{CCFactorization, LaurentSeries};
use crate::{Error, Result};

/// A value of the Contou-Carrère symbol, in `k[e..]/(...)` over the base.
#[derive(Clone, Debug, PartialEq)]
pub struct CcValue {
    pub ring: Artinian,
    pub value: ArtinianElem,
}

impl fmt::Display for CcValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ring.display(&self.value))
    }
}

fn max_neg(c: &CCFactorization<Artinian>) -> i64 {
    c.neg.iter().map(|t| t.0).max().unwrap_or(0)
}

/// `prod_{i,j} (1 - x^{j/d} y^{i/d})^d` over positive factors `(i, x)` and
/// negative factors `(j, y)`, `d = gcd(i, j)`.
fn double_product(r: &Artinian, pos: &[(i64, ArtinianElem)], neg: &[(i64, ArtinianElem)]) -> ArtinianElem {
    let mut acc = r.one();
    for (i, x) in pos.iter().filter(|t| t.0 > 0) {
        for (j, y) in neg {
            let d = i.gcd(j);
            let t = r.mul(&r.pow(x, (j / d) as u64), &r.pow(y, (i / d) as u64));
            if r.is_zero(&t) {
                continue;
            }
            acc = r.mul(&acc, &r.pow(&r.sub(&r.one(), &t), d as u64));
        }
    }
    acc
}

/// The Contou-Carrère symbol of two elements of `G_1(R)`, pushed down to
/// the Artinian algebra over `base` by the relative norm.
pub fn cc_symbol(f: &LaurentSeries<Artinian>, g: &LaurentSeries<Artinian>, base: &Field) -> Result<CcValue> {
    let r = f.ring();
    if g.ring() != r {
        return Err(Error::InvalidInput("series live over different rings".into()));
    }
    let probe_f = f.cc_factorize_to(1)?;
    let probe_g = g.cc_factorize_to(1)?;
    let m = max_neg(&probe_f).max(max_neg(&probe_g));
    // x^{j/d} y^{i/d} vanishes once i/d reaches the nilpotency index
    let needed = m * r.nilpotency_index() as i64 + 1;
    let cf = f.cc_factorize_to(needed)?;
    let cg = g.cc_factorize_to(needed)?;
    for c in [&cf, &cg] {
        if c.prec < needed {
            return Err(Error::PrecisionExhausted { needed, available: c.prec });
        }
    }
    let num = double_product(r, &cf.pos, &cg.neg);
    let den = double_product(r, &cg.pos, &cf.neg);
    let value = r.div(&num, &den)?;
    let (ring, value) = relative_norm(r, &value, base)?;
    Ok(CcValue { ring, value })
}

/// The additive cocycle hidden in `<1 + e1 alpha, 1 + e2 beta> = 1 + e1 e2 c`.
pub fn lie_cocycle_via_commutator(alpha: &LaurentSeries<Field>, beta: &LaurentSeries<Field>, base: &Field) -> Result<FieldElem> {
    let k = alpha.ring();
    let r = Artinian::double_dual(k);
    let lift = |s: &LaurentSeries<Field>, gen: usize| {
        let e = r.generator(gen);
        let one = LaurentSeries::one(&r);
        one.add(&s.map(&r, |c| r.mul(&r.embed(c), &e)))
    };
    let v = cc_symbol(&lift(alpha, 0), &lift(beta, 1), base)?;
    let s = &v.ring;
    let unit = s.coefficient(&v.value, &[0, 0]);
    let stray = [vec![1, 0], vec![0, 1]].iter().any(|e| !base.is_zero(&s.coefficient(&v.value, e)));
    if !base.is_one(&unit) || stray {
        return Err(Error::InvalidInput("symbol of dual-number lifts is not of the form 1 + e1*e2*c".into()));
    }
    Ok(s.coefficient(&v.value, &[1, 1]))
}
