//! Recursive-descent parser for rational functions in `x`, series in `z`
//! and small matrices of either.

use std::fmt;

use num_bigint::BigInt;

/// 1-based line and column of a character in the input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{position}: {message}")]
pub struct ParseError {
    pub position: Position,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Int(BigInt),
    Symbol(String),
    /// `O(z^n)`.
    BigO(i64),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub node: Node,
    pub at: Position,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Op(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, Position)>,
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let mut toks = Vec::new();
    let (mut line, mut column) = (1, 0);
    let mut last = Position { line: 1, column: 1 };
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        column += 1;
        let here = Position { line, column };
        if c == '\n' {
            line += 1;
            column = 0;
            continue;
        }
        if c.is_whitespace() {
            continue;
        }
        last = here;
        if c.is_ascii_digit() {
            let mut s = String::from(c);
            while let Some(d) = chars.peek().copied().filter(char::is_ascii_digit) {
                s.push(d);
                chars.next();
                column += 1;
                last.column = column;
            }
            toks.push((Tok::Int(s.parse().unwrap()), here));
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::from(c);
            while let Some(d) = chars.peek().copied().filter(|d| d.is_alphanumeric() || *d == '_') {
                s.push(d);
                chars.next();
                column += 1;
                last.column = column;
            }
            toks.push((Tok::Ident(s), here));
        } else if "+-*/^()[],".contains(c) {
            toks.push((Tok::Op(c), here));
        } else {
            return Err(ParseError { position: here, message: format!("unexpected character '{c}'") });
        }
    }
    toks.push((Tok::End, last));
    Ok(Lexer { toks })
}

struct Parser {
    toks: Vec<(Tok, Position)>,
    pos: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("'{n}'"),
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Op(c) => format!("'{c}'"),
        Tok::End => "end of input".into(),
    }
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> Position {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Position) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.at(), message: message.into() })
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if *self.peek() == Tok::Op(c) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected '{c}', found {}", describe(self.peek())))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let at = self.at();
            let node = match self.peek() {
                Tok::Op('+') => Node::Add as fn(_, _) -> _,
                Tok::Op('-') => Node::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr { node: node(Box::new(lhs), Box::new(rhs)), at };
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            let at = self.at();
            let node = match self.peek() {
                Tok::Op('*') => Node::Mul as fn(_, _) -> _,
                Tok::Op('/') => Node::Div,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr { node: node(Box::new(lhs), Box::new(rhs)), at };
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Op('-') {
            let at = self.at();
            self.bump();
            let inner = self.unary()?;
            return Ok(Expr { node: Node::Neg(Box::new(inner)), at });
        }
        if *self.peek() == Tok::Op('+') {
            self.bump();
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Op('^') {
            return Ok(base);
        }
        let at = self.at();
        self.bump();
        let e = self.exponent()?;
        Ok(Expr { node: Node::Pow(Box::new(base), e), at })
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let paren = *self.peek() == Tok::Op('(');
        if paren {
            self.bump();
        }
        let negative = *self.peek() == Tok::Op('-');
        if negative {
            self.bump();
        }
        let at = self.at();
        let e = match self.bump() {
            (Tok::Int(n), _) => i64::try_from(&n).map_err(|_| ParseError { position: at, message: "exponent too large".into() })?,
            (t, p) => return Err(ParseError { position: p, message: format!("expected an integer exponent, found {}", describe(&t)) }),
        };
        if paren {
            self.expect(')')?;
        }
        Ok(if negative { -e } else { e })
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let at = self.at();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(Expr { node: Node::Int(n), at })
            }
            Tok::Ident(s) if s == "O" && self.toks.get(self.pos + 1).map(|t| &t.0) == Some(&Tok::Op('(')) => {
                self.bump();
                self.bump();
                match self.bump() {
                    (Tok::Ident(z), _) if z == "z" => {}
                    (t, p) => return Err(ParseError { position: p, message: format!("expected 'z' in O(...), found {}", describe(&t)) }),
                }
                let n = if *self.peek() == Tok::Op('^') {
                    self.bump();
                    self.exponent()?
                } else {
                    1
                };
                self.expect(')')?;
                Ok(Expr { node: Node::BigO(n), at })
            }
            Tok::Ident(s) => {
                self.bump();
                Ok(Expr { node: Node::Symbol(s), at })
            }
            Tok::Op('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            t => self.error(format!("expected a number, a variable or '(', found {}", describe(&t))),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::End => Ok(()),
            t => self.error(format!("unexpected {} after the expression", describe(t))),
        }
    }
}

/// Parses a single expression.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?.toks, pos: 0 };
    if *p.peek() == Tok::End {
        return p.error("empty expression");
    }
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses `[[a, b], [c, d]]` into rows; any other input is a 1x1 matrix.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<Expr>>, ParseError> {
    let mut p = Parser { toks: lex(text)?.toks, pos: 0 };
    if *p.peek() != Tok::Op('[') {
        return Ok(vec![vec![parse_expr(text)?]]);
    }
    p.bump();
    let mut rows = Vec::new();
    loop {
        p.expect('[')?;
        let mut row = vec![p.expr()?];
        while *p.peek() == Tok::Op(',') {
            p.bump();
            row.push(p.expr()?);
        }
        p.expect(']')?;
        if let Some(first) = rows.first() {
            let first: &Vec<Expr> = first;
            if first.len() != row.len() {
                return p.error(format!("row has {} entries, expected {}", row.len(), first.len()));
            }
        }
        rows.push(row);
        if *p.peek() == Tok::Op(',') {
            p.bump();
            continue;
        }
        p.expect(']')?;
        break;
    }
    p.finish()?;
    if rows.len() != rows[0].len() {
        return Err(ParseError { position: Position { line: 1, column: 1 }, message: format!("matrix is {}x{}, expected a square matrix", rows.len(), rows[0].len()) });
    }
    Ok(rows)
}

/// Evaluation of parsed expressions in a concrete ring.
pub trait Target {
    type Value: Clone;

    fn integer(&self, n: &BigInt) -> Result<Self::Value, String>;
    fn symbol(&self, name: &str) -> Option<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value, String>;
    fn pow(&self, a: &Self::Value, e: i64) -> Result<Self::Value, String>;

    fn big_o(&self, _n: i64) -> Result<Self::Value, String> {
        Err("O(...) is only allowed in series".into())
    }

    /// Names accepted by [`symbol`](Self::symbol), for error messages.
    fn symbols(&self) -> Vec<String>;
}

pub fn eval<T: Target>(t: &T, e: &Expr) -> Result<T::Value, ParseError> {
    let fail = |message: String| ParseError { position: e.at, message };
    match &e.node {
        Node::Int(n) => t.integer(n).map_err(fail),
        Node::Symbol(s) => t.symbol(s).ok_or_else(|| {
            let known = t.symbols();
            if known.is_empty() {
                fail(format!("unknown symbol '{s}'"))
            } else {
                fail(format!("unknown symbol '{s}' (expected one of: {})", known.join(", ")))
            }
        }),
        Node::BigO(n) => t.big_o(*n).map_err(fail),
        Node::Neg(a) => Ok(t.neg(&eval(t, a)?)),
        Node::Add(a, b) => Ok(t.add(&eval(t, a)?, &eval(t, b)?)),
        Node::Sub(a, b) => Ok(t.sub(&eval(t, a)?, &eval(t, b)?)),
        Node::Mul(a, b) => Ok(t.mul(&eval(t, a)?, &eval(t, b)?)),
        Node::Div(a, b) => {
            let (a, b) = (eval(t, a)?, eval(t, b)?);
            t.div(&a, &b).map_err(fail)
        }
        Node::Pow(a, n) => {
            let a = eval(t, a)?;
            t.pow(&a, *n).map_err(fail)
        }
    }
}

/// Identifiers used in `e`, in order of first appearance.
pub fn symbols(e: &Expr) -> Vec<String> {
    fn walk(e: &Expr, out: &mut Vec<String>) {
        match &e.node {
            Node::Symbol(s) => {
                if !out.contains(s) {
                    out.push(s.clone())
                }
            }
            Node::Neg(a) | Node::Pow(a, _) => walk(a, out),
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                walk(a, out);
                walk(b, out);
            }
            Node::Int(_) | Node::BigO(_) => {}
        }
    }
    let mut out = Vec::new();
    walk(e, &mut out);
    out
}

/// Parses and evaluates in one step.
pub fn parse_in<T: Target>(t: &T, text: &str) -> Result<T::Value, ParseError> {
    eval(t, &parse_expr(text)?)
}

/// Renders `text` with a caret under the error position.
pub fn caret(text: &str, at: Position) -> String {
    let line = text.lines().nth(at.line - 1).unwrap_or("");
    format!("  {line}\n  {}^", " ".repeat(at.column.saturating_sub(1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unclosed_paren_points_at_last_character() {
        let err = parse_expr("x/(x").unwrap_err();
        assert_eq!(err.position, Position { line: 1, column: 4 });
        assert!(err.message.contains("')'"));
    }

    #[test]
    fn precedence_and_exponents() {
        let e = parse_expr("-x^2 + 3*z^-1").unwrap();
        let Node::Add(a, b) = e.node else { panic!() };
        assert!(matches!(a.node, Node::Neg(_)));
        assert!(matches!(b.node, Node::Mul(_, ref r) if r.node == Node::Pow(Box::new(Expr { node: Node::Symbol("z".into()), at: Position { line: 1, column: 10 } }), -1)));
    }

    #[test]
    fn errors_carry_line_and_column() {
        let err = parse_expr("1 +\n  x $").unwrap_err();
        assert_eq!(err.position, Position { line: 2, column: 5 });
        let err = parse_expr("(1 + 2))").unwrap_err();
        assert_eq!(err.position.column, 8);
    }

    #[test]
    fn big_o_and_matrices() {
        assert_eq!(parse_expr("O(z^3)").unwrap().node, Node::BigO(3));
        let m = parse_matrix("[[1, z], [0, 1 + z^-1]]").unwrap();
        assert_eq!((m.len(), m[1].len()), (2, 2));
        assert!(parse_matrix("[[1, 2], [3]]").is_err());
        assert_eq!(parse_matrix("1+z").unwrap().len(), 1);
    }
}
