//! Factored input over the rationals: `c * p1^e1 * p2^e2 / ...`, where each
//! parenthesised polynomial is declared irreducible.

use reciprocity_core::algebra::{poly_factor, Irreducibility};
use reciprocity_core::curve::RationalFunction;
use reciprocity_core::{Field, Poly};

use crate::parse::{eval, parse_expr, Expr, Node, ParseError};
use crate::targets::Functions;
use crate::CliError;

fn leaves<'a>(e: &'a Expr, out: &mut Vec<&'a Expr>) {
    match &e.node {
        Node::Mul(a, b) | Node::Div(a, b) => {
            leaves(a, out);
            leaves(b, out);
        }
        Node::Neg(a) | Node::Pow(a, _) => leaves(a, out),
        _ => out.push(e),
    }
}

/// Evaluates `text` and collects its top-level polynomial factors.
///
/// Factors of degree at most 3 must be irreducible (checked); higher-degree
/// factors are accepted when no splitting is found and are then trusted.
pub fn parse_factored(field: &Field, what: &str, text: &str) -> Result<(RationalFunction, Vec<(Poly, Irreducibility)>), CliError> {
    let wrap = |err: ParseError| CliError::Parse { what: what.to_string(), text: text.to_string(), err };
    let expr = parse_expr(text).map_err(wrap)?;
    let target = Functions::new(field);
    let mut parts = Vec::new();
    leaves(&expr, &mut parts);
    let mut declared: Vec<(Poly, Irreducibility)> = Vec::new();
    for leaf in parts {
        let value = eval(&target, leaf).map_err(wrap)?;
        if value.is_constant() {
            continue;
        }
        if value.denominator().deg() != 0 {
            return Err(wrap(ParseError { position: leaf.at, message: "factored input must be a product of polynomials".into() }));
        }
        let fac = poly_factor(field, value.numerator())?;
        let [only] = fac.factors.as_slice() else {
            return Err(CliError::Input(format!("{what}: declared factor {value} is reducible")));
        };
        if only.multiplicity != 1 {
            return Err(CliError::Input(format!("{what}: declared factor {value} is a power")));
        }
        let how = match only.irreducibility {
            Irreducibility::Proven => Irreducibility::Proven,
            _ => Irreducibility::Declared,
        };
        if !declared.iter().any(|(p, _)| *p == only.poly) {
            declared.push((only.poly.clone(), how));
        }
    }
    let f = eval(&target, &expr).map_err(wrap)?;
    Ok((f.with_known_factors(&declared), declared))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn collects_declared_factors() {
        let q = Field::rationals();
        let (f, declared) = parse_factored(&q, "-f", "3*(x^4+1)^2/((x-1)*(x^2+x+1))").unwrap();
        assert_eq!(declared.len(), 3);
        assert_eq!(declared.iter().find(|(p, _)| p.deg() == 4).unwrap().1, Irreducibility::Declared);
        assert_eq!(declared.iter().find(|(p, _)| p.deg() == 2).unwrap().1, Irreducibility::Proven);
        assert_eq!(f.numerator().deg(), 8);
    }

    #[test]
    fn rejects_reducible_claims() {
        let q = Field::rationals();
        assert!(parse_factored(&q, "-f", "(x^2-1)*x").is_err());
        assert!(parse_factored(&q, "-f", "(x^4-1)").is_err());
        assert!(parse_factored(&q, "-f", "(1/x + 1)*x").is_err());
    }
}
