use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Field, FieldElem, FiniteAlgebra, Ring};
use crate::{Error, Result};

/// `k[e_1, ..., e_r] / (e_1^{n_1}, ..., e_r^{n_r})` over a base field `k`.
///
/// Local with maximal ideal spanned by the monomials of positive degree.
#[derive(Clone)]
pub struct Artinian(Arc<Inner>);

struct Inner {
    base: Field,
    names: Vec<String>,
    orders: Vec<usize>,
    dim: usize,
    /// `products[i * dim + j]`: index of the product monomial, if it survives.
    products: Vec<Option<usize>>,
    degrees: Vec<usize>,
}

/// Dense coordinates on the monomial basis, mixed-radix indexed with the
/// first generator varying fastest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ArtinianElem {
    coords: Vec<FieldElem>,
}

impl ArtinianElem {
    pub fn coords(&self) -> &[FieldElem] {
        &self.coords
    }
}

impl Artinian {
    pub fn new(base: &Field, generators: &[(&str, usize)]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidInput("an Artinian algebra needs at least one generator".into()));
        }
        for (i, (name, n)) in generators.iter().enumerate() {
            if *n < 2 {
                return Err(Error::InvalidInput(format!("nilpotency order of {name} must be at least 2")));
            }
            if name.is_empty() || generators[..i].iter().any(|(m, _)| m == name) {
                return Err(Error::InvalidInput(format!("bad or repeated generator name '{name}'")));
            }
        }
        let orders: Vec<usize> = generators.iter().map(|g| g.1).collect();
        let dim = orders.iter().product();
        let exps: Vec<Vec<usize>> = (0..dim).map(|i| decompose(i, &orders)).collect();
        let degrees = exps.iter().map(|e| e.iter().sum()).collect();
        let mut products = Vec::with_capacity(dim * dim);
        for a in &exps {
            for b in &exps {
                let sum: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                products.push(if sum.iter().zip(&orders).all(|(s, n)| s < n) {
                    Some(compose(&sum, &orders))
                } else {
                    None
                });
            }
        }
        Ok(Artinian(Arc::new(Inner {
            base: base.clone(),
            names: generators.iter().map(|g| g.0.to_string()).collect(),
            orders,
            dim,
            products,
            degrees,
        })))
    }

    /// Dual numbers `k[e1, e2]/(e1^2, e2^2)`, the ring of the Lie cocycle.
    pub fn double_dual(base: &Field) -> Self {
        Artinian::new(base, &[("e1", 2), ("e2", 2)]).unwrap()
    }

    /// Same generators over another base field.
    pub fn with_base(&self, base: &Field) -> Self {
        let gens: Vec<(&str, usize)> =
            self.0.names.iter().map(String::as_str).zip(self.0.orders.iter().copied()).collect();
        Artinian::new(base, &gens).unwrap()
    }

    pub fn base(&self) -> &Field {
        &self.0.base
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn orders(&self) -> &[usize] {
        &self.0.orders
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn generator(&self, i: usize) -> ArtinianElem {
        let mut exps = vec![0; self.0.orders.len()];
        exps[i] = 1;
        self.monomial(&exps, &self.0.base.one())
    }

    /// `c * e^exps`, zero if some exponent reaches its order.
    pub fn monomial(&self, exps: &[usize], c: &FieldElem) -> ArtinianElem {
        let mut out = self.zero();
        if exps.iter().zip(&self.0.orders).all(|(e, n)| e < n) {
            out.coords[compose(exps, &self.0.orders)] = c.clone();
        }
        out
    }

    pub fn exponents(&self, index: usize) -> Vec<usize> {
        decompose(index, &self.0.orders)
    }

    /// Coefficient of the monomial `e^exps`.
    pub fn coefficient(&self, a: &ArtinianElem, exps: &[usize]) -> FieldElem {
        if exps.iter().zip(&self.0.orders).all(|(e, n)| e < n) {
            a.coords[compose(exps, &self.0.orders)].clone()
        } else {
            self.0.base.zero()
        }
    }

    /// The image of `a` in the residue field `k`.
    pub fn reduction(&self, a: &ArtinianElem) -> FieldElem {
        a.coords[0].clone()
    }

    pub fn in_maximal_ideal(&self, a: &ArtinianElem) -> bool {
        self.0.base.is_zero(&a.coords[0])
    }

    /// Lowest total degree of a nonzero monomial; `None` for zero.
    pub fn order(&self, a: &ArtinianElem) -> Option<usize> {
        let k = &self.0.base;
        (0..self.0.dim).filter(|&i| !k.is_zero(&a.coords[i])).map(|i| self.0.degrees[i]).min()
    }

    /// Maps coefficients into another base field with the same generators.
    pub fn map_coefficients(&self, a: &ArtinianElem, target: &Artinian, f: impl Fn(&FieldElem) -> FieldElem) -> ArtinianElem {
        debug_assert_eq!(self.0.orders, target.0.orders);
        ArtinianElem { coords: a.coords.iter().map(f).collect() }
    }
}

fn decompose(mut i: usize, orders: &[usize]) -> Vec<usize> {
    orders
        .iter()
        .map(|n| {
            let e = i % n;
            i /= n;
            e
        })
        .collect()
}

fn compose(exps: &[usize], orders: &[usize]) -> usize {
    exps.iter().zip(orders).rev().fold(0, |acc, (e, n)| acc * n + e)
}

impl PartialEq for Artinian {
    fn eq(&self, other: &Self) -> bool {
        self.0.base == other.0.base && self.0.orders == other.0.orders && self.0.names == other.0.names
    }
}

impl fmt::Debug for Artinian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Artinian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]/(", self.0.base, self.0.names.join(","))?;
        for (i, (n, o)) in self.0.names.iter().zip(&self.0.orders).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}^{o}")?;
        }
        f.write_str(")")
    }
}

impl Ring for Artinian {
    type Elem = ArtinianElem;

    fn zero(&self) -> ArtinianElem {
        ArtinianElem { coords: vec![self.0.base.zero(); self.0.dim] }
    }

    fn one(&self) -> ArtinianElem {
        self.embed(&self.0.base.one())
    }

    fn from_int(&self, n: i64) -> ArtinianElem {
        self.embed(&self.0.base.from_int(n))
    }

    fn add(&self, a: &ArtinianElem, b: &ArtinianElem) -> ArtinianElem {
        let k = &self.0.base;
        ArtinianElem { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| k.add(x, y)).collect() }
    }

    fn neg(&self, a: &ArtinianElem) -> ArtinianElem {
        let k = &self.0.base;
        ArtinianElem { coords: a.coords.iter().map(|x| k.neg(x)).collect() }
    }

    fn mul(&self, a: &ArtinianElem, b: &ArtinianElem) -> ArtinianElem {
        let k = &self.0.base;
        let dim = self.0.dim;
        let mut out = self.zero();
        for (i, x) in a.coords.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if k.is_zero(y) {
                    continue;
                }
                if let Some(t) = self.0.products[i * dim + j] {
                    out.coords[t] = k.add(&out.coords[t], &k.mul(x, y));
                }
            }
        }
        out
    }

    fn is_zero(&self, a: &ArtinianElem) -> bool {
        a.coords.iter().all(|c| self.0.base.is_zero(c))
    }

    fn is_unit(&self, a: &ArtinianElem) -> bool {
        !self.in_maximal_ideal(a)
    }

    fn inv(&self, a: &ArtinianElem) -> Option<ArtinianElem> {
        let k = &self.0.base;
        let c_inv = k.inv(&a.coords[0])?;
        // a = c (1 + m) with m nilpotent; (1 + m)^-1 = sum (-m)^j
        let unit = self.mul(a, &self.embed(&c_inv));
        let m = self.sub(&unit, &self.one());
        let neg_m = self.neg(&m);
        let mut term = self.one();
        let mut acc = self.one();
        for _ in 1..self.nilpotency_index() {
            term = self.mul(&term, &neg_m);
            acc = self.add(&acc, &term);
        }
        Some(self.mul(&acc, &self.embed(&c_inv)))
    }

    fn nilpotency_index(&self) -> usize {
        self.0.orders.iter().map(|n| n - 1).sum::<usize>() + 1
    }

    fn write_elem(&self, a: &ArtinianElem, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = &self.0.base;
        let mut order: Vec<usize> = (0..self.0.dim).filter(|&i| !k.is_zero(&a.coords[i])).collect();
        if order.is_empty() {
            return f.write_str("0");
        }
        order.sort_by_key(|&i| (self.0.degrees[i], self.exponents(i).iter().rev().cloned().collect::<Vec<_>>()));
        for (pos, &i) in order.iter().enumerate() {
            let mut cs = format!("{}", k.display(&a.coords[i]));
            let negative = cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            if pos == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mono: Vec<String> = self
                .exponents(i)
                .iter()
                .zip(&self.0.names)
                .filter(|(e, _)| **e > 0)
                .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
                .collect();
            let mono = mono.join("*");
            let compound = cs.contains(['+', '-', '*', '/']);
            match (mono.is_empty(), cs.as_str()) {
                (true, _) => f.write_str(&cs)?,
                (false, "1") => f.write_str(&mono)?,
                (false, _) if compound => write!(f, "({cs})*{mono}")?,
                (false, _) => write!(f, "{cs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl FiniteAlgebra for Artinian {
    fn base_field(&self) -> Field {
        self.0.base.clone()
    }

    fn dimension(&self) -> usize {
        self.0.dim
    }

    fn coordinates(&self, a: &ArtinianElem) -> Vec<FieldElem> {
        a.coords.clone()
    }

    fn from_coordinates(&self, coords: &[FieldElem]) -> ArtinianElem {
        assert_eq!(coords.len(), self.0.dim);
        ArtinianElem { coords: coords.to_vec() }
    }

    fn embed(&self, c: &FieldElem) -> ArtinianElem {
        let mut out = self.zero();
        out.coords[0] = c.clone();
        out
    }
}
