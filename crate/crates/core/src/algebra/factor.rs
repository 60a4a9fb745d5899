use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Field, FieldElem, FieldKind, Poly, PolyRing, Ring};
use crate::{Error, Result, DEFAULT_SEED};

/// Upper bound on `q` for the exhaustive root-search fallback.
const ROOT_SEARCH_LIMIT: u64 = 1_000_000;

/// How sure we are that a returned factor is irreducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Proven,
    /// Over the rationals: no rational root and degree at least 4, so the
    /// supported methods cannot decide.
    Unsplit,
    /// Supplied by the caller and trusted.
    Declared,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Factor {
    /// Monic.
    pub poly: Poly,
    pub multiplicity: u32,
    pub irreducibility: Irreducibility,
}

/// `leading * prod(factor^multiplicity)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub leading: FieldElem,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn expand(&self, field: &Field) -> Poly {
        let ring = PolyRing::new(field);
        self.factors.iter().fold(ring.constant(self.leading.clone()), |acc, f| {
            ring.mul(&acc, &ring.pow(&f.poly, f.multiplicity as u64))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.factors.iter().all(|f| f.irreducibility != Irreducibility::Unsplit)
    }
}

/// Factors `f` with the default seed.
pub fn poly_factor(field: &Field, f: &Poly) -> Result<Factorization> {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    poly_factor_with_rng(field, f, &mut rng)
}

/// Factors `f` into monic irreducibles. Over finite fields the result is
/// complete; over the rationals only content, multiplicities and rational
/// roots are split and leftovers of degree >= 4 come back `Unsplit`.
pub fn poly_factor_with_rng<R: Rng>(field: &Field, f: &Poly, rng: &mut R) -> Result<Factorization> {
    let ring = PolyRing::new(field);
    let leading = f.leading().ok_or(Error::ZeroPolynomial)?.clone();
    let monic = ring.monic(f);
    let mut factors = Vec::new();
    if monic.deg() == 0 {
        return Ok(Factorization { leading, factors });
    }
    let squarefree = match field.kind() {
        FieldKind::Rationals => squarefree_char0(&ring, &monic),
        _ => squarefree_charp(&ring, &monic),
    };
    for (part, mult) in squarefree {
        let pieces: Vec<(Poly, Irreducibility)> = match field.kind() {
            FieldKind::Rationals => split_rational(&ring, &part),
            _ => {
                let mut out = Vec::new();
                for (g, d) in distinct_degree(&ring, &part) {
                    for h in equal_degree(&ring, &g, d, rng) {
                        out.push((h, Irreducibility::Proven));
                    }
                }
                out
            }
        };
        for (poly, irreducibility) in pieces {
            factors.push(Factor { poly, multiplicity: mult, irreducibility });
        }
    }
    factors.sort_by(|a, b| (a.poly.deg(), &a.poly).cmp(&(b.poly.deg(), &b.poly)));
    Ok(Factorization { leading, factors })
}

pub(crate) fn is_irreducible(field: &Field, f: &Poly) -> bool {
    match poly_factor(field, f) {
        Ok(fac) => {
            fac.factors.len() == 1
                && fac.factors[0].multiplicity == 1
                && fac.factors[0].irreducibility != Irreducibility::Unsplit
        }
        Err(_) => false,
    }
}

/// All roots of `f` in a finite field with at most 10^6 elements, by evaluation.
pub fn roots_by_search(field: &Field, f: &Poly) -> Option<Vec<FieldElem>> {
    let q = field.small_order().filter(|&q| q <= ROOT_SEARCH_LIMIT)?;
    let ring = PolyRing::new(field);
    Some(
        (0..q)
            .map(|i| field.element_from_index(i))
            .filter(|a| field.is_zero(&ring.eval(f, a)))
            .collect(),
    )
}

fn squarefree_char0(ring: &PolyRing, f: &Poly) -> Vec<(Poly, u32)> {
    // Yun's algorithm
    let mut out = Vec::new();
    let df = ring.derivative(f);
    let mut a = ring.gcd(f, &df);
    let mut b = ring.div_exact(f, &a).unwrap();
    let mut c = ring.div_exact(&df, &a).unwrap();
    let mut d = ring.sub(&c, &ring.derivative(&b));
    let mut i = 1;
    while b.deg() > 0 {
        a = ring.gcd(&b, &d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = ring.div_exact(&b, &a).unwrap();
        c = ring.div_exact(&d, &a).unwrap();
        d = ring.sub(&c, &ring.derivative(&b));
        i += 1;
    }
    out
}

fn squarefree_charp(ring: &PolyRing, f: &Poly) -> Vec<(Poly, u32)> {
    let p = ring.field.characteristic() as u32;
    let mut out = Vec::new();
    let df = ring.derivative(f);
    if df.is_zero() {
        for (h, m) in squarefree_charp(ring, &pth_root(ring, f)) {
            out.push((h, m * p));
        }
        return out;
    }
    let mut c = ring.gcd(f, &df);
    let mut w = ring.div_exact(f, &c).unwrap();
    let mut i = 1;
    while w.deg() > 0 {
        let y = ring.gcd(&w, &c);
        let z = ring.div_exact(&w, &y).unwrap();
        if z.deg() > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y.clone();
        c = ring.div_exact(&c, &y).unwrap();
    }
    if c.deg() > 0 {
        for (h, m) in squarefree_charp(ring, &pth_root(ring, &c)) {
            out.push((h, m * p));
        }
    }
    out
}

/// Inverse of Frobenius on a polynomial whose exponents are multiples of `p`.
fn pth_root(ring: &PolyRing, f: &Poly) -> Poly {
    let k = &ring.field;
    let p = k.characteristic() as usize;
    let e = k.small_order().unwrap() / p as u64;
    let coeffs = f.coeffs().iter().step_by(p).map(|c| k.pow(c, e)).collect();
    Poly::new(k, coeffs)
}

fn field_order(k: &Field) -> BigUint {
    k.order().expect("finite field")
}

/// Splits a squarefree monic `f` into products of irreducibles of equal degree.
fn distinct_degree(ring: &PolyRing, f: &Poly) -> Vec<(Poly, usize)> {
    let q = field_order(&ring.field);
    let x = ring.x();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while rest.deg() >= 2 * d as i64 {
        h = ring.powmod(&h, &q, &rest);
        let g = ring.gcd(&ring.sub(&h, &x), &rest);
        if g.deg() > 0 {
            rest = ring.div_exact(&rest, &g).unwrap();
            h = ring.rem(&h, &rest).unwrap();
            out.push((g, d));
        }
        d += 1;
    }
    if rest.deg() > 0 {
        let n = rest.deg() as usize;
        out.push((rest, n));
    }
    out
}

fn random_poly<R: Rng>(ring: &PolyRing, below: usize, rng: &mut R) -> Poly {
    let k = &ring.field;
    let q = k.small_order();
    let coeffs = (0..below)
        .map(|_| match q {
            Some(q) => k.element_from_index(rng.gen_range(0..q)),
            None => {
                let d = k.degree();
                let p = k.characteristic();
                let digits: Vec<u64> = (0..d).map(|_| rng.gen_range(0..p)).collect();
                if d == 1 {
                    FieldElem::Mod(digits[0])
                } else {
                    FieldElem::Ext(digits)
                }
            }
        })
        .collect();
    Poly::new(k, coeffs)
}

/// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree `d`.
fn equal_degree<R: Rng>(ring: &PolyRing, f: &Poly, d: usize, rng: &mut R) -> Vec<Poly> {
    let n = f.deg() as usize;
    if n == d {
        return vec![f.clone()];
    }
    let k = &ring.field;
    let q = field_order(k);
    let mut failures = 0;
    loop {
        if d == 1 && failures >= 64 {
            if let Some(roots) = roots_by_search(k, f) {
                return roots.iter().map(|r| Poly::linear(k, r)).collect();
            }
        }
        let a = random_poly(ring, n, rng);
        if a.deg() <= 0 {
            failures += 1;
            continue;
        }
        let b = if k.characteristic() == 2 {
            // absolute trace map a + a^2 + ... + a^(2^(m-1)), m = d * log2(q)
            let m = d * k.degree();
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..m {
                t = ring.mulmod(&t, &t, f);
                acc = ring.add(&acc, &t);
            }
            acc
        } else {
            let e = (q.pow(d as u32) - 1u32) >> 1;
            ring.sub(&ring.powmod(&a, &e, f), &ring.one())
        };
        let g = ring.gcd(&b, f);
        if g.deg() > 0 && g.deg() < f.deg() {
            let h = ring.div_exact(f, &g).unwrap();
            let mut out = equal_degree(ring, &g, d, rng);
            out.extend(equal_degree(ring, &h, d, rng));
            return out;
        }
        failures += 1;
    }
}

fn split_rational(ring: &PolyRing, f: &Poly) -> Vec<(Poly, Irreducibility)> {
    let k = &ring.field;
    let mut out = Vec::new();
    let mut rest = f.clone();
    for r in rational_roots(f) {
        let lin = Poly::linear(k, &FieldElem::Rational(r));
        rest = ring.div_exact(&rest, &lin).unwrap();
        out.push((lin, Irreducibility::Proven));
    }
    if rest.deg() > 0 {
        let tag = if rest.deg() <= 3 { Irreducibility::Proven } else { Irreducibility::Unsplit };
        out.push((rest, tag));
    }
    out
}

/// Rational roots of a polynomial over Q via the rational root theorem.
fn rational_roots(f: &Poly) -> Vec<BigRational> {
    let rats: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| match c {
            FieldElem::Rational(r) => r.clone(),
            _ => unreachable!("polynomial over Q"),
        })
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &lcm).to_integer()).collect();
    let mut roots = Vec::new();
    let mut low = 0;
    while ints[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let (a0, an) = (ints[low].abs(), ints.last().unwrap().abs());
    let (Some(num_divs), Some(den_divs)) = (divisors(&a0), divisors(&an)) else {
        return roots;
    };
    let eval = |x: &BigRational| -> bool {
        let mut acc = BigRational::zero();
        for c in ints.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc.is_zero()
    };
    let mut seen = Vec::new();
    for n in &num_divs {
        for d in &den_divs {
            for sign in [1i64, -1] {
                let cand = BigRational::new(BigInt::from(*n) * sign, BigInt::from(*d));
                if !seen.contains(&cand) {
                    if eval(&cand) {
                        roots.push(cand.clone());
                    }
                    seen.push(cand);
                }
            }
        }
    }
    roots
}

/// Positive divisors by trial division; gives up past 10^12.
fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.to_u64().filter(|&n| n <= 1_000_000_000_000)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Some(small)
}
