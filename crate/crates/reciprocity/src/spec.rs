//! Field and ring specifications: `Q`, `F7`, `F9`, `F9:u^2+1`,
//! `Q[e1,e2]/(e1^2,e2^2)`.

use reciprocity_core::{Artinian, Field, FieldElem};

use crate::parse::{parse_expr, symbols};
use crate::targets::Functions;
use crate::CliError;

fn bad(spec: &str, why: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("invalid field '{spec}': {why}"))
}

/// `q = p^d` for a prime `p`, if `q` is a prime power.
fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d| d * d <= q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let (mut m, mut d) = (q, 0);
    while m % p == 0 {
        m /= p;
        d += 1;
    }
    (m == 1).then_some((p, d))
}

pub fn parse_field(spec: &str) -> Result<Field, CliError> {
    let spec = spec.trim();
    if spec == "Q" {
        return Ok(Field::rationals());
    }
    let (order, modulus) = match spec.split_once(':') {
        Some((o, m)) => (o.trim(), Some(m.trim())),
        None => (spec, None),
    };
    let q: u64 = order
        .strip_prefix('F')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad(spec, "expected Q, Fq or Fq:modulus"))?;
    let (p, d) = prime_power(q).ok_or_else(|| bad(spec, format!("{q} is not a prime power")))?;
    let Some(modulus) = modulus else {
        return Field::default_extension(p, d).map_err(|e| bad(spec, e));
    };
    if d == 1 {
        return Err(bad(spec, "a prime field takes no modulus"));
    }
    parse_expr(modulus).map_err(|e| bad(spec, e))?;
    let var = symbol_of(modulus).ok_or_else(|| bad(spec, "the modulus must be a polynomial in one variable"))?;
    let fp = Field::prime(p).map_err(|e| bad(spec, e))?;
    let m = crate::parse::parse_in(&Functions::in_var(&fp, &var), modulus).map_err(|e| bad(spec, e))?;
    if m.denominator().deg() != 0 || m.numerator().deg() != d as i64 {
        return Err(bad(spec, format!("the modulus must be a polynomial of degree {d}")));
    }
    let coeffs: Vec<u64> = m
        .numerator()
        .coeffs()
        .iter()
        .map(|c| match c {
            FieldElem::Mod(v) => *v,
            _ => unreachable!(),
        })
        .collect();
    if coeffs[d] != 1 {
        return Err(bad(spec, "the modulus must be monic"));
    }
    Field::extension_named(p, &coeffs, &var).map_err(|e| bad(spec, e))
}

/// The single identifier in `text`, if there is exactly one.
fn symbol_of(text: &str) -> Option<String> {
    let mut names = symbols(&parse_expr(text).ok()?);
    (names.len() == 1).then(|| names.pop().unwrap())
}

/// `K[g1,...,gr]/(g1^n1,...,gr^nr)` with the relations in any order.
pub fn parse_ring(spec: &str) -> Result<Artinian, CliError> {
    let bad = |why: &str| CliError::Input(format!("invalid ring '{spec}': {why}"));
    let open = spec.find('[').ok_or_else(|| bad("expected K[generators]/(relations)"))?;
    let close = spec.find(']').filter(|&c| c > open).ok_or_else(|| bad("missing ']'"))?;
    let field = parse_field(&spec[..open])?;
    let names: Vec<&str> = spec[open + 1..close].split(',').map(str::trim).collect();
    let rest = spec[close + 1..].trim();
    let rels = rest
        .strip_prefix('/')
        .map(str::trim)
        .and_then(|r| r.strip_prefix('('))
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| bad("expected /(relations) after the generators"))?;
    let mut orders = vec![None; names.len()];
    for rel in rels.split(',') {
        let (g, n) = rel.trim().split_once('^').ok_or_else(|| bad("relations must have the form g^n"))?;
        let i = names.iter().position(|m| *m == g.trim()).ok_or_else(|| bad(&format!("relation for unknown generator '{}'", g.trim())))?;
        let n: usize = n.trim().parse().map_err(|_| bad("relation exponents must be integers"))?;
        if orders[i].replace(n).is_some() {
            return Err(bad(&format!("two relations for '{}'", names[i])));
        }
    }
    let gens: Vec<(&str, usize)> = names
        .iter()
        .zip(&orders)
        .map(|(n, o)| o.map(|o| (*n, o)).ok_or_else(|| bad(&format!("no relation for '{n}'"))))
        .collect::<Result<_, _>>()?;
    Artinian::new(&field, &gens).map_err(|e| bad(&e.to_string()))
}
