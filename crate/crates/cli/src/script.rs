//! Script language: a ring declaration, named ideal bindings and an optional
//! command statement.
//!
//! ```text
//! ring x, y, z, t over q;
//! I = (t^3, z^3);
//! J = (x^2*t - y^2*z, t^3);
//! reg J;
//! ```
//!
//! Coefficients are integers or fractions `a/b`; `over p:N` selects the
//! prime field with `N` elements.

use std::fmt;

use cmreg_core::{Field, FieldSpec, Monomial, PolyIdeal, PolyRing, Polynomial};
use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "'{s}'"),
            Tok::Int(n) => write!(f, "'{n}'"),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
        } else if c.is_whitespace() {
            chars.next();
            col += 1;
        } else if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Int(s.parse().unwrap()), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push((Tok::Ident(s), pos));
        } else if ",;=()+-*^/:".contains(c) {
            chars.next();
            col += 1;
            out.push((Tok::Sym(c), pos));
        } else {
            return Err(pos.error(format!("unexpected character '{c}'")));
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

/// A term `num/den * x^a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermSpec {
    pub num: BigInt,
    pub den: BigInt,
    pub exps: Vec<u32>,
}

/// A polynomial as written, before choosing a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolySpec {
    pub terms: Vec<TermSpec>,
    pub pos: Option<Pos>,
}

impl PolySpec {
    /// The polynomial over `ring`; fails if a denominator vanishes in the
    /// field.
    pub fn build<F: Field>(&self, ring: &PolyRing<F>) -> Result<Polynomial<F>, String> {
        let field = ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let den = field.from_int(&t.den);
            if field.is_zero(&den) {
                return Err(format!("denominator {} vanishes over {}", t.den, field.spec()));
            }
            let c = field.div(&field.from_int(&t.num), &den);
            terms.push((c, Monomial::new(t.exps.clone())));
        }
        Ok(ring.poly(terms))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binding {
    pub name: String,
    pub gens: Vec<PolySpec>,
    pub pos: Pos,
}

impl Binding {
    pub fn build<F: Field>(&self, ring: &PolyRing<F>) -> Result<PolyIdeal<F>, String> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.build(ring))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("{}: {e}", self.name))?;
        Ok(PolyIdeal::new(ring, gens))
    }
}

/// A command written in the script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub words: Vec<String>,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Script {
    pub vars: Vec<String>,
    pub field: Option<FieldSpec>,
    pub bindings: Vec<Binding>,
    pub command: Option<Statement>,
}

impl Script {
    pub fn binding(&self, name: &str) -> Option<&Binding> {
        self.bindings.iter().find(|b| b.name == name)
    }

    /// Names bound in the script, in order.
    pub fn names(&self) -> Vec<&str> {
        self.bindings.iter().map(|b| b.name.as_str()).collect()
    }
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.pos().error(format!("expected '{c}', found {}", self.peek())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, Pos), ParseError> {
        match self.bump() {
            (Tok::Ident(s), p) => Ok((s, p)),
            (t, p) => Err(p.error(format!("expected {what}, found {t}"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<(BigInt, Pos), ParseError> {
        match self.bump() {
            (Tok::Int(n), p) => Ok((n, p)),
            (t, p) => Err(p.error(format!("expected {what}, found {t}"))),
        }
    }

    fn ring(&mut self) -> Result<(Vec<String>, Option<FieldSpec>), ParseError> {
        match self.peek() {
            Tok::Ident(s) if s == "ring" => {
                self.bump();
            }
            t => return Err(self.pos().error(format!("expected 'ring', found {t}"))),
        }
        let mut vars: Vec<String> = Vec::new();
        loop {
            let (v, p) = self.ident("variable name")?;
            if vars.contains(&v) {
                return Err(p.error(format!("variable '{v}' declared twice")));
            }
            if v == "ring" || v == "over" {
                return Err(p.error(format!("'{v}' is reserved")));
            }
            vars.push(v);
            if !self.eat(',') {
                break;
            }
        }
        let mut field = None;
        if matches!(self.peek(), Tok::Ident(s) if s == "over") {
            self.bump();
            let (name, p) = self.ident("field ('q' or 'p:<prime>')")?;
            field = Some(match name.as_str() {
                "q" | "QQ" => FieldSpec::Rational,
                "p" => {
                    self.expect(':')?;
                    let (n, np) = self.int("prime")?;
                    let p = u64::try_from(&n).map_err(|_| np.error("prime too large"))?;
                    FieldSpec::prime(p).map_err(|e| np.error(e.to_string()))?
                }
                other => return Err(p.error(format!("unknown field '{other}'"))),
            });
        }
        self.expect(';')?;
        Ok((vars, field))
    }

    fn factor(&mut self, vars: &[String], term: &mut TermSpec) -> Result<(), ParseError> {
        match self.bump() {
            (Tok::Int(n), _) => {
                term.num *= n;
                if self.eat('/') {
                    let (d, p) = self.int("denominator")?;
                    if d == BigInt::from(0) {
                        return Err(p.error("zero denominator"));
                    }
                    term.den *= d;
                }
            }
            (Tok::Ident(v), p) => {
                let k = vars
                    .iter()
                    .position(|x| *x == v)
                    .ok_or_else(|| p.error(format!("undeclared variable '{v}'")))?;
                let e = if self.eat('^') {
                    let (e, ep) = self.int("exponent")?;
                    u32::try_from(&e).map_err(|_| ep.error("exponent too large"))?
                } else {
                    1
                };
                term.exps[k] += e;
            }
            (t, p) => return Err(p.error(format!("expected a coefficient or variable, found {t}"))),
        }
        Ok(())
    }

    fn poly(&mut self, vars: &[String]) -> Result<PolySpec, ParseError> {
        let pos = self.pos();
        let mut terms = Vec::new();
        let mut negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        loop {
            let mut term = TermSpec {
                num: BigInt::from(if negative { -1 } else { 1 }),
                den: BigInt::from(1),
                exps: vec![0; vars.len()],
            };
            self.factor(vars, &mut term)?;
            while self.eat('*') {
                self.factor(vars, &mut term)?;
            }
            terms.push(term);
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                break;
            }
        }
        Ok(PolySpec {
            terms,
            pos: Some(pos),
        })
    }

    fn binding(&mut self, vars: &[String], name: String, pos: Pos) -> Result<Binding, ParseError> {
        self.expect('=')?;
        self.expect('(')?;
        let mut gens = Vec::new();
        if !self.eat(')') {
            loop {
                gens.push(self.poly(vars)?);
                if self.eat(')') {
                    break;
                }
                if !self.eat(',') {
                    return Err(self
                        .pos()
                        .error(format!("expected ',' or ')', found {}", self.peek())));
                }
            }
        }
        self.expect(';')?;
        Ok(Binding { name, gens, pos })
    }

    fn statement(&mut self, first: String, pos: Pos) -> Result<Statement, ParseError> {
        let mut words = vec![first];
        loop {
            match self.bump() {
                (Tok::Ident(s), _) => words.push(s),
                (Tok::Int(n), _) => words.push(n.to_string()),
                (Tok::Sym(';'), _) => break,
                (t, p) => return Err(p.error(format!("expected ';' after command, found {t}"))),
            }
        }
        Ok(Statement { words, pos })
    }

    fn script(&mut self) -> Result<Script, ParseError> {
        let (vars, field) = self.ring()?;
        let mut bindings: Vec<Binding> = Vec::new();
        let mut command = None;
        while *self.peek() != Tok::Eof {
            let (name, pos) = self.ident("a binding or command")?;
            if *self.peek() == Tok::Sym('=') {
                if command.is_some() {
                    return Err(pos.error("bindings must precede the command"));
                }
                if vars.contains(&name) {
                    return Err(pos.error(format!("'{name}' is a variable")));
                }
                if bindings.iter().any(|b| b.name == name) {
                    return Err(pos.error(format!("'{name}' bound twice")));
                }
                bindings.push(self.binding(&vars, name, pos)?);
            } else {
                if command.is_some() {
                    return Err(pos.error("a script holds at most one command"));
                }
                let st = self.statement(name, pos)?;
                for w in &st.words[1..] {
                    let known = bindings.iter().any(|b| &b.name == w);
                    let keyword = ["product", "intersect", "colon", "sum"].contains(&w.as_str());
                    if !known && !keyword {
                        return Err(pos.error(format!("unknown name '{w}' in command")));
                    }
                }
                command = Some(st);
            }
        }
        Ok(Script {
            vars,
            field,
            bindings,
            command,
        })
    }
}

pub fn parse(src: &str) -> Result<Script, ParseError> {
    let toks = lex(src)?;
    Parser { toks, at: 0 }.script()
}

/// Script text declaring `ring` and binding `ideals` under their names.
pub fn render_script<F: Field>(ring: &PolyRing<F>, ideals: &[(&str, &PolyIdeal<F>)]) -> String {
    let mut out = format!("ring {} over {};\n", ring.names().join(", "), ring.field().spec());
    for (name, ideal) in ideals {
        let gens: Vec<String> = ideal.gens().iter().map(|g| ring.render(g)).collect();
        out.push_str(&format!("{name} = ({});\n", gens.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_monomial_binding() {
        let s = parse("ring x,y; I = (x^2, y^3);").unwrap();
        assert_eq!(s.vars, vec!["x", "y"]);
        assert_eq!(s.field, None);
        let i = s.binding("I").unwrap();
        assert_eq!(i.gens.len(), 2);
        assert_eq!(i.gens[0].terms[0].exps, vec![2, 0]);
    }

    #[test]
    fn parses_binomial() {
        let s = parse("ring x,y,z,t;\nJ = (x^2*t - y^2*z, t^3);").unwrap();
        let j = &s.binding("J").unwrap().gens[0];
        assert_eq!(j.terms.len(), 2);
        assert_eq!(j.terms[1].num, BigInt::from(-1));
        assert_eq!(j.terms[1].exps, vec![0, 2, 1, 0]);
    }

    #[test]
    fn syntax_error_has_position() {
        let e = parse("ring x,y;\nI = (x,").unwrap_err();
        assert_eq!((e.line, e.col), (2, 8));
        let e = parse("ring x;\nI = (y);").unwrap_err();
        assert_eq!((e.line, e.col), (2, 6));
        assert!(e.message.contains("undeclared"));
        assert!(parse("ring x; I = (x$);").is_err());
    }

    #[test]
    fn field_and_command() {
        let s = parse("ring x, y over p:7; I = (3/2*x - y); reg I;").unwrap();
        assert_eq!(s.field, Some(FieldSpec::Prime(7)));
        assert_eq!(s.command.unwrap().words, vec!["reg", "I"]);
        assert!(parse("ring x over p:8;").is_err());
        assert!(parse("ring x; reg J;").is_err());
        assert!(parse("ring x; I = (x); reg I; J = (x);").is_err());
    }

    #[test]
    fn whitespace_and_comments() {
        let a = parse("ring x,y;I=(x*y-2*y^2);").unwrap();
        let b = parse("ring x , y ;\n# comment\n  I = ( x * y - 2 * y ^ 2 ) ;\n").unwrap();
        assert_eq!(a.binding("I").unwrap().gens[0].terms, b.binding("I").unwrap().gens[0].terms);
    }
}
