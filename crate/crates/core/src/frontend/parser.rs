//! Recursive-descent parser for programs, observations and contexts.

use super::lexer::{tokenize, Spanned, Token};
use super::ParseError;
use crate::abduction::{AbducibleFact, Explanation, Observation};
use crate::syntax::{
    Atom, Body, Clause, InspectKind, IntegrityConstraint, Literal, NegativeHeadEncoder, Program, Subject,
    Term,
};

const RESERVED: [&str; 3] = ["not", "true", "false"];

/// A parsed program together with its denials.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParsedProgram {
    pub program: Program,
    pub ics: Vec<IntegrityConstraint>,
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    /// Location just past the last token, for end-of-input errors.
    end: (usize, usize),
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        let tokens = tokenize(text)?;
        let end = tokens.last().map_or((1, 1), |t| (t.line, t.col + 1));
        Ok(Parser { tokens, pos: 0, end })
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.token)
    }

    fn peek_at(&self, offset: usize) -> Option<&Token> {
        self.tokens.get(self.pos + offset).map(|t| &t.token)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn location(&self) -> (usize, usize) {
        self.tokens.get(self.pos).map_or(self.end, |t| (t.line, t.col))
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.location();
        ParseError::new(line, col, message)
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {}", t.describe())),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: Token) -> Result<(), ParseError> {
        if self.eat(&token) {
            Ok(())
        } else {
            Err(self.unexpected(&token.describe()))
        }
    }

    fn eat_name(&mut self, name: &str) -> bool {
        if matches!(self.peek(), Some(Token::Name(n)) if n == name) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_negation(&mut self) -> bool {
        self.eat(&Token::Tilde) || self.eat_name("not")
    }

    fn is_wrapper_start(&self) -> bool {
        matches!(self.peek(), Some(Token::Name(n)) if n == "inspect" || n == "inspect_neg")
            && self.peek_at(1) == Some(&Token::LParen)
    }

    fn term(&mut self) -> Result<Term, ParseError> {
        let t = match self.peek() {
            Some(Token::Name(n)) if !RESERVED.contains(&n.as_str()) => Term::constant(n.clone()),
            Some(Token::Variable(v)) => Term::variable(v.clone()),
            _ => return Err(self.unexpected("a constant or variable")),
        };
        self.pos += 1;
        Ok(t)
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        if self.is_wrapper_start() {
            return Err(self.error("nested inspection is not allowed"));
        }
        let predicate = match self.peek() {
            Some(Token::Name(n)) if !RESERVED.contains(&n.as_str()) => n.clone(),
            Some(Token::Name(n)) => return Err(self.error(format!("`{n}` is a reserved word"))),
            Some(Token::Variable(v)) => {
                return Err(self.error(format!("predicate `{v}` must start lowercase")))
            }
            _ => return Err(self.unexpected("an atom")),
        };
        self.pos += 1;
        let mut args = Vec::new();
        if self.eat(&Token::LParen) {
            args.push(self.term()?);
            while self.eat(&Token::Comma) {
                args.push(self.term()?);
            }
            self.expect(Token::RParen)?;
        }
        Ok(Atom::new(predicate, args))
    }

    fn subject(&mut self) -> Result<Subject, ParseError> {
        if self.is_wrapper_start() {
            let kind = match self.peek() {
                Some(Token::Name(n)) if n == "inspect" => InspectKind::Positive,
                _ => InspectKind::Negative,
            };
            self.pos += 2;
            let a = self.atom()?;
            self.expect(Token::RParen)?;
            Ok(Subject::Inspect(kind, a))
        } else {
            Ok(Subject::Atom(self.atom()?))
        }
    }

    fn literal(&mut self) -> Result<Literal, ParseError> {
        let negated = self.eat_negation();
        let s = self.subject()?;
        Ok(Literal { subject: s, positive: !negated })
    }

    fn literals(&mut self) -> Result<Vec<Literal>, ParseError> {
        let mut lits = vec![self.literal()?];
        while self.eat(&Token::Comma) {
            lits.push(self.literal()?);
        }
        Ok(lits)
    }

    fn body(&mut self) -> Result<Body, ParseError> {
        if self.peek_at(1) == Some(&Token::Dot) {
            if self.eat_name("true") {
                return Ok(Body::True);
            }
            if self.eat_name("false") {
                return Ok(Body::False);
            }
        }
        Ok(Body::Conj(self.literals()?))
    }

    fn statement(
        &mut self,
        out: &mut ParsedProgram,
        encoder: &mut NegativeHeadEncoder,
    ) -> Result<(), ParseError> {
        if self.eat(&Token::If) {
            let body = self.literals()?;
            self.expect(Token::Dot)?;
            out.ics.push(IntegrityConstraint::new(body));
            return Ok(());
        }
        let negated = self.eat_negation();
        let (line, col) = self.location();
        if self.is_wrapper_start() {
            return Err(self.error("an inspection wrapper cannot be a rule head"));
        }
        let head = self.atom()?;
        let body = if self.eat(&Token::If) { self.body()? } else { Body::True };
        self.expect(Token::Dot)?;
        if !negated {
            out.program.push(Clause::new(head, body));
            return Ok(());
        }
        let (enc, new) = encoder
            .encode(&head.predicate, head.arity())
            .map_err(|e| ParseError::new(line, col, e.to_string()))?;
        out.program.push(Clause::new(Atom::new(enc.primed.clone(), head.args), body));
        if new {
            out.program.push(enc.bridge);
            out.ics.push(enc.constraint);
        }
        Ok(())
    }
}

/// Parses a program text: clauses, denials and negated-head sugar.
pub fn parse_program(text: &str) -> Result<ParsedProgram, ParseError> {
    let mut p = Parser::new(text)?;
    let mut out = ParsedProgram::default();
    let mut encoder = NegativeHeadEncoder::new();
    while !p.at_end() {
        p.statement(&mut out, &mut encoder)?;
    }
    Ok(out)
}

/// Comma-separated ground literals with an optional final `.`.
pub fn parse_literals(text: &str) -> Result<Vec<Literal>, ParseError> {
    let mut p = Parser::new(text)?;
    if p.at_end() {
        return Err(p.error("expected at least one literal"));
    }
    let mut lits = Vec::new();
    loop {
        let (line, col) = p.location();
        let l = p.literal()?;
        if !l.subject.is_ground() {
            return Err(ParseError::new(line, col, format!("`{}` is not ground", l.subject)));
        }
        lits.push(l);
        if !p.eat(&Token::Comma) {
            break;
        }
    }
    p.eat(&Token::Dot);
    if !p.at_end() {
        return Err(p.unexpected("`,` or end of input"));
    }
    Ok(lits)
}

pub fn parse_observation(text: &str) -> Result<Observation, ParseError> {
    let lits = parse_literals(text)?;
    if let Some(l) = lits.iter().find(|l| l.subject.is_inspection()) {
        return Err(ParseError::new(1, 1, format!("observation cannot mention `{}`", l.subject)));
    }
    Observation::new(lits).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Abduced facts, one `subject = true.` or `subject = false.` per statement.
pub fn parse_context(text: &str) -> Result<Explanation, ParseError> {
    let mut p = Parser::new(text)?;
    let mut facts = Vec::new();
    while !p.at_end() {
        let (line, col) = p.location();
        let s = p.subject()?;
        if !s.is_ground() {
            return Err(ParseError::new(line, col, format!("`{s}` is not ground")));
        }
        p.expect(Token::Equals)?;
        let value = if p.eat_name("true") {
            true
        } else if p.eat_name("false") {
            false
        } else {
            return Err(p.unexpected("`true` or `false`"));
        };
        p.expect(Token::Dot)?;
        facts.push(AbducibleFact::new(s, value));
    }
    Explanation::new(facts).map_err(|e| ParseError::new(1, 1, e.to_string()))
}
