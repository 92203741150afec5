//! Text syntax.
//!
//! ```text
//! formula  := disj
//! disj     := conj ('|' conj)*
//! conj     := res ('&' res)*
//! res      := prod (('\' | '/') prod)?      residuals never chain
//! prod     := unary ('*' unary)*
//! unary    := '~' unary | atom
//! atom     := ident | '1' | 'T' | 'F' | '(' formula ')'
//!
//! bunch    := bsemi
//! bsemi    := bcomma (';' bcomma)*
//! bcomma   := batom (',' batom)*
//! batom    := 'eps' | 'del' | formula | '(' bunch ')'
//!
//! sequent  := bunch '=>' formula
//! ```
//!
//! `*`, `&`, `|`, `,` and `;` group to the left.

use thiserror::Error;

use super::bunch::{Bunch, Sep};
use super::formula::{BinOp, Formula};
use super::Sequent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at column {}: {message}", .position + 1)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    One,
    Top,
    Bot,
    Eps,
    Del,
    Not,
    Op(BinOp),
    Comma,
    Semi,
    LParen,
    RParen,
    Arrow,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::One => "`1`".into(),
            Tok::Top => "`T`".into(),
            Tok::Bot => "`F`".into(),
            Tok::Eps => "`eps`".into(),
            Tok::Del => "`del`".into(),
            Tok::Not => "`~`".into(),
            Tok::Op(op) => format!("`{}`", op.symbol()),
            Tok::Comma => "`,`".into(),
            Tok::Semi => "`;`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Arrow => "`=>`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'~' => Tok::Not,
            b'*' => Tok::Op(BinOp::Tensor),
            b'\\' => Tok::Op(BinOp::Under),
            b'/' => Tok::Op(BinOp::Over),
            b'&' => Tok::Op(BinOp::And),
            b'|' => Tok::Op(BinOp::Or),
            b',' => Tok::Comma,
            b';' => Tok::Semi,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'=' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'1' if !bytes.get(i + 1).is_some_and(|b| is_ident_byte(*b)) => Tok::One,
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len() && is_ident_byte(bytes[i + 1]) {
                    i += 1;
                }
                match &text[start..=i] {
                    "T" => Tok::Top,
                    "F" => Tok::Bot,
                    "eps" => Tok::Eps,
                    "del" => Tok::Del,
                    name => Tok::Ident(name.to_string()),
                }
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

fn is_ident_byte(b: u8) -> bool {
    b.is_ascii_alphanumeric() || b == b'_' || b == b'\''
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Parser, ParseError> {
        Ok(Parser { toks: lex(text)?, pos: 0, end: text.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.offset(), message: message.into() })
    }

    fn unexpected<T>(&self, wanted: &str) -> Result<T, ParseError> {
        match self.peek() {
            Some(t) => self.err(format!("expected {wanted}, found {}", t.describe())),
            None => self.err(format!("expected {wanted}, found end of input")),
        }
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(Tok::Arrow) => self.err("more than one `=>`"),
            Some(t) => self.err(format!("unexpected {}", t.describe())),
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        self.disj()
    }

    fn left_assoc(
        &mut self,
        op: BinOp,
        next: fn(&mut Parser) -> Result<Formula, ParseError>,
    ) -> Result<Formula, ParseError> {
        let mut acc = next(self)?;
        while self.eat(&Tok::Op(op)) {
            let rhs = next(self)?;
            acc = Formula::bin(op, acc, rhs);
        }
        Ok(acc)
    }

    fn disj(&mut self) -> Result<Formula, ParseError> {
        self.left_assoc(BinOp::Or, Parser::conj)
    }

    fn conj(&mut self) -> Result<Formula, ParseError> {
        self.left_assoc(BinOp::And, Parser::res)
    }

    fn res(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.prod()?;
        let op = match self.peek() {
            Some(Tok::Op(op @ (BinOp::Under | BinOp::Over))) => *op,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let rhs = self.prod()?;
        if let Some(Tok::Op(BinOp::Under | BinOp::Over)) = self.peek() {
            return self.err("`\\` and `/` do not associate; add parentheses");
        }
        Ok(Formula::bin(op, lhs, rhs))
    }

    fn prod(&mut self) -> Result<Formula, ParseError> {
        self.left_assoc(BinOp::Tensor, Parser::unary)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        if self.eat(&Tok::Not) {
            return Ok(Formula::not(self.unary()?));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return self.unexpected("a formula");
        };
        let f = match tok {
            Tok::Ident(name) => Formula::Var(name),
            Tok::One => Formula::One,
            Tok::Top => Formula::Top,
            Tok::Bot => Formula::Bot,
            Tok::LParen => {
                self.pos += 1;
                let inner = self.formula()?;
                if !self.eat(&Tok::RParen) {
                    return self.unexpected("`)`");
                }
                return Ok(inner);
            }
            _ => return self.unexpected("a formula"),
        };
        self.pos += 1;
        Ok(f)
    }

    fn bunch(&mut self) -> Result<Bunch, ParseError> {
        let mut acc = self.bunch_comma()?;
        while self.eat(&Tok::Semi) {
            let rhs = self.bunch_comma()?;
            acc = Bunch::node(Sep::Semi, acc, rhs);
        }
        Ok(acc)
    }

    fn bunch_comma(&mut self) -> Result<Bunch, ParseError> {
        let mut acc = self.bunch_atom()?;
        while self.eat(&Tok::Comma) {
            let rhs = self.bunch_atom()?;
            acc = Bunch::node(Sep::Comma, acc, rhs);
        }
        Ok(acc)
    }

    fn bunch_atom(&mut self) -> Result<Bunch, ParseError> {
        if self.eat(&Tok::Eps) {
            return Ok(Bunch::Eps);
        }
        if self.eat(&Tok::Del) {
            return Ok(Bunch::Del);
        }
        // A parenthesis may open either a formula or a sub-bunch; try the
        // formula reading first and fall back when it runs into `,`/`;`.
        let save = self.pos;
        let opens_paren = self.peek() == Some(&Tok::LParen);
        match self.formula() {
            Ok(f)
                if matches!(
                    self.peek(),
                    None | Some(Tok::Comma | Tok::Semi | Tok::RParen | Tok::Arrow)
                ) =>
            {
                return Ok(Bunch::Leaf(f));
            }
            Ok(_) if !opens_paren => return self.unexpected("`,`, `;`, `)` or `=>`"),
            Err(e) if !opens_paren => return Err(e),
            _ => {}
        }
        self.pos = save;
        if !self.eat(&Tok::LParen) {
            return self.unexpected("a bunch");
        }
        let inner = self.bunch()?;
        if !self.eat(&Tok::RParen) {
            return self.unexpected("`)`");
        }
        Ok(inner)
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut p = Parser::new(text)?;
    let f = p.formula()?;
    p.expect_end()?;
    Ok(f)
}

pub fn parse_bunch(text: &str) -> Result<Bunch, ParseError> {
    let mut p = Parser::new(text)?;
    let b = p.bunch()?;
    p.expect_end()?;
    Ok(b)
}

/// Parse `<bunch> => <formula>`.
pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    let mut p = Parser::new(text)?;
    let arrows = p.toks.iter().filter(|(_, t)| *t == Tok::Arrow).count();
    if arrows == 0 {
        return Err(ParseError { position: text.len(), message: "missing `=>`".into() });
    }
    if arrows > 1 {
        let second = p.toks.iter().filter(|(_, t)| *t == Tok::Arrow).nth(1).unwrap().0;
        return Err(ParseError { position: second, message: "more than one `=>`".into() });
    }
    let antecedent = p.bunch()?;
    if !p.eat(&Tok::Arrow) {
        return p.unexpected("`=>`");
    }
    let succedent = p.formula()?;
    p.expect_end()?;
    Ok(Sequent { antecedent, succedent })
}

/// Parse a sequent list: one sequent per line, blank lines and lines
/// starting with `#` are skipped. Errors carry the 1-based line number.
pub fn parse_sequent_lines(text: &str) -> Result<Vec<Sequent>, (usize, ParseError)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, l)| parse_sequent(l).map_err(|e| (i + 1, e)))
        .collect()
}
