//! Concrete rings for expression evaluation.

use num_bigint::BigInt;
use reciprocity_core::curve::RationalFunction;
use reciprocity_core::{Artinian, Field, FieldElem, FiniteAlgebra, LaurentSeries, Ring};

use crate::parse::Target;

/// Constants of a field; the extension generator is the only symbol.
pub struct Constants {
    pub field: Field,
}

fn generator(field: &Field) -> Vec<(String, FieldElem)> {
    match (field.generator_name(), field.generator()) {
        (Some(name), Some(u)) => vec![(name.to_string(), u)],
        _ => Vec::new(),
    }
}

impl Target for Constants {
    type Value = FieldElem;

    fn integer(&self, n: &BigInt) -> Result<FieldElem, String> {
        Ok(self.field.from_integer(n))
    }

    fn symbol(&self, name: &str) -> Option<FieldElem> {
        generator(&self.field).into_iter().find(|(n, _)| n == name).map(|(_, u)| u)
    }

    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.field.add(a, b)
    }

    fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.field.sub(a, b)
    }

    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.field.mul(a, b)
    }

    fn neg(&self, a: &FieldElem) -> FieldElem {
        self.field.neg(a)
    }

    fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem, String> {
        self.field.div(a, b).map_err(|e| e.to_string())
    }

    fn pow(&self, a: &FieldElem, e: i64) -> Result<FieldElem, String> {
        self.field.pow_signed(a, e).map_err(|e| e.to_string())
    }

    fn symbols(&self) -> Vec<String> {
        generator(&self.field).into_iter().map(|(n, _)| n).collect()
    }
}

/// Rational functions in one variable over a field.
pub struct Functions {
    pub field: Field,
    pub var: String,
}

impl Functions {
    pub fn new(field: &Field) -> Self {
        Functions { field: field.clone(), var: "x".into() }
    }

    pub fn in_var(field: &Field, var: &str) -> Self {
        Functions { field: field.clone(), var: var.into() }
    }
}

impl Target for Functions {
    type Value = RationalFunction;

    fn integer(&self, n: &BigInt) -> Result<RationalFunction, String> {
        Ok(RationalFunction::constant(&self.field, self.field.from_integer(n)))
    }

    fn symbol(&self, name: &str) -> Option<RationalFunction> {
        if name == self.var {
            return Some(RationalFunction::x(&self.field));
        }
        generator(&self.field).into_iter().find(|(n, _)| n == name).map(|(_, u)| RationalFunction::constant(&self.field, u))
    }

    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.add(b)
    }

    fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.sub(b)
    }

    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a.mul(b)
    }

    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        a.neg()
    }

    fn div(&self, a: &RationalFunction, b: &RationalFunction) -> Result<RationalFunction, String> {
        a.div(b).map_err(|_| "division by zero".to_string())
    }

    fn pow(&self, a: &RationalFunction, e: i64) -> Result<RationalFunction, String> {
        a.pow(e).map_err(|_| "zero raised to a negative power".to_string())
    }

    fn symbols(&self) -> Vec<String> {
        let mut s = vec![self.var.clone()];
        s.extend(generator(&self.field).into_iter().map(|(n, _)| n));
        s
    }
}

/// Laurent series in `z` over a field or an Artinian algebra; `prec` is the
/// number of coefficients kept above the valuation when dividing.
pub struct Series<R: Ring> {
    pub ring: R,
    base: Field,
    named: Vec<(String, R::Elem)>,
    embed: fn(&R, &FieldElem) -> R::Elem,
    pub prec: i64,
}

impl Series<Field> {
    pub fn over_field(field: &Field, prec: i64) -> Self {
        Series { ring: field.clone(), base: field.clone(), named: generator(field), embed: |_, c| c.clone(), prec }
    }
}

impl Series<Artinian> {
    pub fn over_algebra(r: &Artinian, prec: i64) -> Self {
        let base = r.base().clone();
        let mut named: Vec<(String, _)> = r.names().iter().enumerate().map(|(i, n)| (n.clone(), r.generator(i))).collect();
        named.extend(generator(&base).into_iter().map(|(n, u)| (n, r.embed(&u))));
        Series { ring: r.clone(), base, named, embed: |r, c| r.embed(c), prec }
    }
}

impl<R: Ring> Series<R> {
    fn inverse(&self, b: &LaurentSeries<R>) -> Result<LaurentSeries<R>, String> {
        let v = b.valuation().map_err(|e| format!("cannot invert: {e}"))?;
        b.inv_to(v + self.prec).map_err(|e| format!("cannot invert: {e}"))
    }
}

impl<R: Ring> Target for Series<R> {
    type Value = LaurentSeries<R>;

    fn integer(&self, n: &BigInt) -> Result<LaurentSeries<R>, String> {
        Ok(LaurentSeries::constant(&self.ring, (self.embed)(&self.ring, &self.base.from_integer(n))))
    }

    fn symbol(&self, name: &str) -> Option<LaurentSeries<R>> {
        if name == "z" {
            return Some(LaurentSeries::z(&self.ring));
        }
        self.named.iter().find(|(n, _)| n == name).map(|(_, c)| LaurentSeries::constant(&self.ring, c.clone()))
    }

    fn big_o(&self, n: i64) -> Result<LaurentSeries<R>, String> {
        Ok(LaurentSeries::new(&self.ring, n, Vec::new(), Some(n)))
    }

    fn add(&self, a: &LaurentSeries<R>, b: &LaurentSeries<R>) -> LaurentSeries<R> {
        a.add(b)
    }

    fn sub(&self, a: &LaurentSeries<R>, b: &LaurentSeries<R>) -> LaurentSeries<R> {
        a.sub(b)
    }

    fn mul(&self, a: &LaurentSeries<R>, b: &LaurentSeries<R>) -> LaurentSeries<R> {
        a.mul(b)
    }

    fn neg(&self, a: &LaurentSeries<R>) -> LaurentSeries<R> {
        a.neg()
    }

    fn div(&self, a: &LaurentSeries<R>, b: &LaurentSeries<R>) -> Result<LaurentSeries<R>, String> {
        Ok(a.mul(&self.inverse(b)?))
    }

    fn pow(&self, a: &LaurentSeries<R>, e: i64) -> Result<LaurentSeries<R>, String> {
        let base = if e < 0 { self.inverse(a)? } else { a.clone() };
        base.pow(e.abs()).map_err(|e| e.to_string())
    }

    fn symbols(&self) -> Vec<String> {
        let mut s = vec!["z".to_string()];
        s.extend(self.named.iter().map(|(n, _)| n.clone()));
        s
    }
}
