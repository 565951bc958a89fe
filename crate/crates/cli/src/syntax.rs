//! Lexer and recursive-descent parser for element expressions.
//!
//! ```text
//! expr    := term ('*' term)*
//! term    := angle '@' term | postfix
//! postfix := primary ('^-1')*
//! primary := literal | '(' expr ')'
//! literal := '[' word '|' angle ';' rational '|' angle ']'
//! angle   := rational [('+' | '-') [int '*'] 'theta'] | ['-'] [int '*'] 'theta'
//! ```

use std::fmt;

use thiserror::Error;
use twistlab_core::exact_arith::{Angle, BasePoint, Rational};
use twistlab_core::freegroup::Word;
use twistlab_core::twistcore::ClassRep;

type TokFn = fn(String) -> Tok;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    fn join(self, other: Span) -> Span {
        Span {
            start: self.start.min(other.start),
            end: self.end.max(other.end),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Literal(ClassRep),
    Product(Box<Expr>, Box<Expr>),
    Inverse(Box<Expr>),
    Act(Angle, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    /// Structural equality ignoring spans.
    pub fn same_shape(&self, other: &Expr) -> bool {
        match (&self.kind, &other.kind) {
            (ExprKind::Literal(a), ExprKind::Literal(b)) => a == b,
            (ExprKind::Product(a1, a2), ExprKind::Product(b1, b2)) => {
                a1.same_shape(b1) && a2.same_shape(b2)
            }
            (ExprKind::Inverse(a), ExprKind::Inverse(b)) => a.same_shape(b),
            (ExprKind::Act(z, a), ExprKind::Act(w, b)) => z == w && a.same_shape(b),
            _ => false,
        }
    }
}

/// Renders with the minimal parentheses the grammar needs.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Literal(c) => write!(f, "{c}"),
            ExprKind::Product(a, b) => {
                write!(f, "{a} * ")?;
                if matches!(b.kind, ExprKind::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
            ExprKind::Inverse(a) => match a.kind {
                ExprKind::Literal(_) | ExprKind::Inverse(_) => write!(f, "{a}^-1"),
                _ => write!(f, "({a})^-1"),
            },
            ExprKind::Act(z, a) => {
                write!(f, "{z} @ ")?;
                if matches!(a.kind, ExprKind::Product(..)) {
                    write!(f, "({a})")
                } else {
                    write!(f, "{a}")
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("syntax error at line {line}, column {col}: expected {}, found {found}", .expected.join(" or "))]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

/// 1-based line and column (in characters) of a byte offset.
pub fn line_col(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset.min(src.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    LBracket,
    RBracket,
    LParen,
    RParen,
    Bar,
    Semi,
    Star,
    At,
    Caret,
    Plus,
    Minus,
    Slash,
    Int(String),
    Ident(String),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Bar => f.write_str("'|'"),
            Tok::Semi => f.write_str("';'"),
            Tok::Star => f.write_str("'*'"),
            Tok::At => f.write_str("'@'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Int(s) => write!(f, "integer {s}"),
            Tok::Ident(s) => write!(f, "identifier {s:?}"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

struct Lexed {
    toks: Vec<(Tok, Span)>,
}

fn error_at(src: &str, offset: usize, expected: &[&str], found: String) -> SyntaxError {
    let (line, col) = line_col(src, offset);
    SyntaxError {
        line,
        col,
        offset,
        expected: expected.iter().map(|s| s.to_string()).collect(),
        found,
    }
}

fn lex(src: &str) -> Result<Lexed, SyntaxError> {
    let mut toks = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let single = match c {
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '|' => Some(Tok::Bar),
            ';' => Some(Tok::Semi),
            '*' => Some(Tok::Star),
            '@' => Some(Tok::At),
            '^' => Some(Tok::Caret),
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '/' => Some(Tok::Slash),
            _ => None,
        };
        if let Some(t) = single {
            chars.next();
            toks.push((
                t,
                Span {
                    start: i,
                    end: i + 1,
                },
            ));
            continue;
        }
        let (pred, make): (fn(char) -> bool, TokFn) = if c.is_ascii_digit() {
            (|c| c.is_ascii_digit(), Tok::Int)
        } else if c.is_ascii_alphabetic() {
            (|c| c.is_ascii_alphabetic(), Tok::Ident)
        } else {
            return Err(error_at(
                src,
                i,
                &["a digit, letter or one of [ ] ( ) | ; * @ ^ + - /"],
                format!("{c:?}"),
            ));
        };
        let mut end = i;
        let mut text = String::new();
        while let Some(&(j, d)) = chars.peek() {
            if !pred(d) {
                break;
            }
            text.push(d);
            end = j + d.len_utf8();
            chars.next();
        }
        toks.push((make(text), Span { start: i, end }));
    }
    toks.push((
        Tok::Eof,
        Span {
            start: src.len(),
            end: src.len(),
        },
    ));
    Ok(Lexed { toks })
}

/// Bounds that keep every recursive pass over an expression shallow.
pub const MAX_DEPTH: usize = 128;
pub const MAX_NODES: usize = 512;

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, Span)>,
    pos: usize,
    depth: usize,
    nodes: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn span(&self) -> Span {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, Span) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, SyntaxError> {
        Err(error_at(
            self.src,
            self.span().start,
            expected,
            self.peek().to_string(),
        ))
    }

    fn enter(&mut self) -> Result<(), SyntaxError> {
        self.depth += 1;
        self.nodes += 1;
        if self.depth > MAX_DEPTH {
            return self.fail(&["shallower nesting"]);
        }
        if self.nodes > MAX_NODES {
            return self.fail(&["a shorter expression"]);
        }
        Ok(())
    }

    fn expect(&mut self, t: Tok, name: &str) -> Result<Span, SyntaxError> {
        if *self.peek() == t {
            Ok(self.bump().1)
        } else {
            self.fail(&[name])
        }
    }

    fn expr(&mut self) -> Result<Expr, SyntaxError> {
        let mut left = self.term()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let right = self.term()?;
            let span = left.span.join(right.span);
            left = Expr {
                kind: ExprKind::Product(Box::new(left), Box::new(right)),
                span,
            };
        }
        Ok(left)
    }

    fn term(&mut self) -> Result<Expr, SyntaxError> {
        self.enter()?;
        let e = self.term_inner();
        self.depth -= 1;
        e
    }

    fn term_inner(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek() {
            Tok::LBracket | Tok::LParen => self.postfix(),
            Tok::Int(_) | Tok::Minus | Tok::Ident(_) => {
                let start = self.span();
                let z = self.angle()?;
                self.expect(Tok::At, "'@'")?;
                let inner = self.term()?;
                let span = start.join(inner.span);
                Ok(Expr {
                    kind: ExprKind::Act(z, Box::new(inner)),
                    span,
                })
            }
            _ => self.fail(&["'['", "'('", "an angle"]),
        }
    }

    fn postfix(&mut self) -> Result<Expr, SyntaxError> {
        let mut e = self.primary()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            self.expect(Tok::Minus, "'-'")?;
            let one = self.span();
            match self.peek() {
                Tok::Int(s) if s == "1" => {
                    self.bump();
                    self.nodes += 1;
                    if self.nodes > MAX_NODES {
                        return self.fail(&["a shorter expression"]);
                    }
                }
                _ => return self.fail(&["1"]),
            }
            let span = e.span.join(one);
            e = Expr {
                kind: ExprKind::Inverse(Box::new(e)),
                span,
            };
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<Expr, SyntaxError> {
        match self.peek() {
            Tok::LBracket => self.literal(),
            Tok::LParen => {
                let open = self.bump().1;
                let mut e = self.expr()?;
                let close = self.expect(Tok::RParen, "')'")?;
                e.span = open.join(close);
                Ok(e)
            }
            _ => self.fail(&["'['", "'('"]),
        }
    }

    fn literal(&mut self) -> Result<Expr, SyntaxError> {
        let open = self.expect(Tok::LBracket, "'['")?;
        let word = self.word()?;
        self.expect(Tok::Bar, "'|'")?;
        let x = self.angle()?;
        self.expect(Tok::Semi, "';'")?;
        let y = self.signed_rational()?;
        self.expect(Tok::Bar, "'|'")?;
        let phase = self.angle()?;
        let close = self.expect(Tok::RBracket, "']'")?;
        Ok(Expr {
            kind: ExprKind::Literal(ClassRep::new(word, BasePoint::new(x, y), phase)),
            span: open.join(close),
        })
    }

    fn word(&mut self) -> Result<Word, SyntaxError> {
        match self.peek().clone() {
            Tok::Ident(s) => match s.parse::<Word>() {
                Ok(w) => {
                    self.bump();
                    Ok(w)
                }
                Err(_) => self.fail(&["a word over a A b B, or e"]),
            },
            _ => self.fail(&["a word over a A b B, or e"]),
        }
    }

    fn int(&mut self) -> Result<i64, SyntaxError> {
        match self.peek().clone() {
            Tok::Int(s) => match s.parse::<i64>() {
                Ok(n) => {
                    self.bump();
                    Ok(n)
                }
                Err(_) => self.fail(&["an integer that fits in 64 bits"]),
            },
            _ => self.fail(&["an integer"]),
        }
    }

    fn unsigned_rational(&mut self) -> Result<Rational, SyntaxError> {
        let num = self.int()?;
        if *self.peek() != Tok::Slash {
            return Ok(Rational::from_integer(num));
        }
        self.bump();
        let at = self.span().start;
        let den = self.int()?;
        if den == 0 {
            return Err(error_at(
                self.src,
                at,
                &["a non-zero denominator"],
                "0".into(),
            ));
        }
        Ok(Rational::new(num, den))
    }

    fn signed_rational(&mut self) -> Result<Rational, SyntaxError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(-&self.unsigned_rational()?);
        }
        self.unsigned_rational()
    }

    /// `[int '*'] 'theta'`, returning the coefficient.
    fn theta_term(&mut self) -> Result<i64, SyntaxError> {
        let coeff = if matches!(self.peek(), Tok::Int(_)) {
            let k = self.int()?;
            self.expect(Tok::Star, "'*'")?;
            k
        } else {
            1
        };
        match self.peek() {
            Tok::Ident(s) if s == "theta" => {
                self.bump();
                Ok(coeff)
            }
            _ => self.fail(&["theta"]),
        }
    }

    fn angle(&mut self) -> Result<Angle, SyntaxError> {
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let sign = |k: i64| if negative { -k } else { k };
        if matches!(self.peek(), Tok::Ident(_)) {
            let m = self.theta_term()?;
            return Ok(Angle::theta_multiple(sign(m)));
        }
        // an integer may start either a rational or `k*theta`
        if let (Tok::Int(_), Tok::Star) = (self.peek(), &self.toks[self.pos + 1].0) {
            let m = self.theta_term()?;
            return Ok(Angle::theta_multiple(sign(m)));
        }
        let q = self.unsigned_rational()?;
        let q = if negative { -&q } else { q };
        let m = match self.peek() {
            Tok::Plus => {
                self.bump();
                self.theta_term()?
            }
            Tok::Minus if self.continues_with_theta() => {
                self.bump();
                -self.theta_term()?
            }
            _ => 0,
        };
        Ok(Angle::new(q, m))
    }

    /// Distinguishes `q - m*theta` from a trailing minus elsewhere.
    fn continues_with_theta(&self) -> bool {
        match self.toks.get(self.pos + 1).map(|t| &t.0) {
            Some(Tok::Ident(s)) => s == "theta",
            Some(Tok::Int(_)) => {
                matches!(self.toks.get(self.pos + 2).map(|t| &t.0), Some(Tok::Star))
            }
            _ => false,
        }
    }

    fn finish(&mut self) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.fail(&["'*'", "'^-1'", "end of input"])
        }
    }
}

fn parser(src: &str) -> Result<Parser<'_>, SyntaxError> {
    let Lexed { toks } = lex(src)?;
    Ok(Parser {
        src,
        toks,
        pos: 0,
        depth: 0,
        nodes: 0,
    })
}

pub fn parse(src: &str) -> Result<Expr, SyntaxError> {
    let mut p = parser(src)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a single angle such as `1/3`, `theta`, or `1/4 - 2*theta`.
pub fn parse_angle(src: &str) -> Result<Angle, SyntaxError> {
    let mut p = parser(src)?;
    let a = p.angle()?;
    p.finish()?;
    Ok(a)
}

/// Parses a word, reporting errors with the same positions as expressions.
pub fn parse_word(src: &str) -> Result<Word, SyntaxError> {
    let mut p = parser(src)?;
    let w = p.word()?;
    p.finish()?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_literals() {
        let e = parse("[b | 0 ; 1/3 | 1/4] * [B | 0 ; 1/3 | 0]").unwrap();
        match e.kind {
            ExprKind::Product(a, b) => {
                assert!(matches!(a.kind, ExprKind::Literal(_)));
                assert!(matches!(b.kind, ExprKind::Literal(_)));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(e.span, Span { start: 0, end: 39 });
    }

    #[test]
    fn inversion_and_action() {
        assert!(matches!(
            parse("([a | 0 ; 0 | 0])^-1").unwrap().kind,
            ExprKind::Inverse(_)
        ));
        match parse("1/2 @ [e | 0 ; 0 | 0]").unwrap().kind {
            ExprKind::Act(z, _) => assert_eq!(z, Angle::frac(1, 2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn angle_forms() {
        assert_eq!(parse_angle("theta").unwrap(), Angle::theta_multiple(1));
        assert_eq!(parse_angle("-2*theta").unwrap(), Angle::theta_multiple(-2));
        assert_eq!(
            parse_angle("1/4 - 3*theta").unwrap(),
            Angle::new(Rational::new(1, 4), -3)
        );
        assert_eq!(
            parse_angle("5/4+theta").unwrap(),
            Angle::new(Rational::new(1, 4), 1)
        );
        assert_eq!(parse_angle("-1/3").unwrap(), Angle::frac(2, 3));
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse("[b | 0 ; 1/3 | 1/4]\n * [x | 0 ; 0 | 0]").unwrap_err();
        assert_eq!((err.line, err.col), (2, 5));
        assert!(err.expected[0].contains("word"));
        let err = parse("[b | 0 ; 1/0 | 0]").unwrap_err();
        assert_eq!(err.col, 12);
        let err = parse("[b | 0 ; 0 | 0] [b | 0 ; 0 | 0]").unwrap_err();
        assert_eq!(err.col, 17);
        assert!(parse("").is_err());
        assert!(parse("[b | 0 ; 0 | 0]^-2").is_err());
    }

    #[test]
    fn render_round_trip() {
        let src = "1/3 @ ([b | theta ; 1/3 | 1/4 - 2*theta] * ([B | 0 ; 1/3 | 0])^-1)^-1 * [e | 0 ; 0 | 0]";
        let e = parse(src).unwrap();
        let again = parse(&e.to_string()).unwrap();
        assert!(e.same_shape(&again), "{e}");
    }
}
