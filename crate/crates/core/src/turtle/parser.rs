use std::collections::BTreeMap;

use super::lexer::{tokenize, Spanned, Token};
use super::{expand, Construct, Diagnostic, DiagnosticKind, Literal, ParsedDocument, Severity, Term, Triple};
use crate::error::{Error, Position};
use crate::iri::{vocab, Iri};

/// Parses one document.
///
/// Recoverable problems skip the offending statement and leave a diagnostic.
/// Only unterminated IRIs/literals (`E_PARSE`) and undeclared prefixes
/// (`E_PREFIX`) abort.
pub fn parse_document(text: &str, default_base: Option<&Iri>) -> Result<ParsedDocument, Error> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        base: default_base.cloned(),
        prefixes: BTreeMap::new(),
        triples: Vec::new(),
        diagnostics: Vec::new(),
    };
    parser.run()?;
    let mut diagnostics = parser.diagnostics;
    diagnostics.sort_by_key(|d| d.position);
    Ok(ParsedDocument {
        base_iri: parser.base,
        prefixes: parser.prefixes,
        triples: parser.triples,
        diagnostics,
    })
}

/// Why a statement was abandoned.
enum Skip {
    Unsupported(Construct, Position),
    Malformed(String, Position),
}

type Step<T> = Result<T, Abort>;

enum Abort {
    Skip(Skip),
    Fatal(Error),
}

impl From<Error> for Abort {
    fn from(e: Error) -> Self {
        Abort::Fatal(e)
    }
}

struct Parser<'t> {
    tokens: &'t [Spanned],
    pos: usize,
    base: Option<Iri>,
    prefixes: BTreeMap<String, Iri>,
    triples: Vec<Triple>,
    diagnostics: Vec<Diagnostic>,
}

impl<'t> Parser<'t> {
    fn run(&mut self) -> Result<(), Error> {
        while self.pos < self.tokens.len() {
            let start = self.pos;
            let mut pending = Vec::new();
            let outcome = match self.tokens[self.pos].token {
                Token::PrefixDirective => self.prefix_directive(false),
                Token::BaseDirective => self.base_directive(false),
                Token::SparqlPrefix => self.prefix_directive(true),
                Token::SparqlBase => self.base_directive(true),
                _ => self.triples_statement(&mut pending),
            };
            match outcome {
                Ok(()) => self.triples.append(&mut pending),
                Err(Abort::Fatal(e)) => return Err(e),
                Err(Abort::Skip(skip)) => {
                    let diagnostic = match skip {
                        Skip::Unsupported(construct, position) => Diagnostic {
                            severity: Severity::Warning,
                            kind: DiagnosticKind::Unsupported(construct),
                            message: format!("statement skipped: {construct} is not supported"),
                            position,
                        },
                        Skip::Malformed(message, position) => Diagnostic {
                            severity: Severity::Error,
                            kind: DiagnosticKind::Malformed,
                            message: format!("statement skipped: {message}"),
                            position,
                        },
                    };
                    self.diagnostics.push(diagnostic);
                    self.pos = start;
                    self.skip_statement()?;
                }
            }
        }
        Ok(())
    }

    fn peek(&self) -> Option<&'t Spanned> {
        self.tokens.get(self.pos)
    }

    fn end_position(&self) -> Position {
        self.tokens.last().map(|t| t.position).unwrap_or_default()
    }

    fn next(&mut self) -> Option<&'t Spanned> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn malformed<T>(&self, message: impl Into<String>, position: Position) -> Step<T> {
        Err(Abort::Skip(Skip::Malformed(message.into(), position)))
    }

    /// Advances past the `.` that closes the current statement.
    ///
    /// Undeclared prefixes inside skipped statements are still reported, so a
    /// skipped statement never hides an `E_PREFIX`.
    fn skip_statement(&mut self) -> Result<(), Error> {
        let mut depth = 0usize;
        while let Some(t) = self.next() {
            match &t.token {
                Token::LBracket | Token::LParen => depth += 1,
                Token::RBracket | Token::RParen => depth = depth.saturating_sub(1),
                Token::Dot if depth == 0 => return Ok(()),
                Token::PName { prefix, local } => {
                    expand(&self.prefixes, prefix, local, t.position)?;
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn expect_dot(&mut self) -> Step<()> {
        match self.next() {
            Some(Spanned { token: Token::Dot, .. }) => Ok(()),
            Some(t) => self.malformed(format!("expected '.', found {}", describe(&t.token)), t.position),
            None => self.malformed("expected '.' before end of input", self.end_position()),
        }
    }

    fn prefix_directive(&mut self, sparql: bool) -> Step<()> {
        let directive = self.next().map(|t| t.position).unwrap_or_default();
        let label = match self.next() {
            Some(Spanned { token: Token::PName { prefix, local }, .. }) if local.is_empty() => prefix.clone(),
            Some(t) => return self.malformed(format!("expected prefix label after @prefix, found {}", describe(&t.token)), t.position),
            None => return self.malformed("incomplete @prefix directive", directive),
        };
        let namespace = match self.next() {
            Some(Spanned { token: Token::IriRef(raw), position }) => self.resolve(raw, *position)?,
            Some(t) => return self.malformed(format!("expected IRI in @prefix, found {}", describe(&t.token)), t.position),
            None => return self.malformed("incomplete @prefix directive", directive),
        };
        if !sparql {
            self.expect_dot()?;
        }
        self.prefixes.insert(label, namespace);
        Ok(())
    }

    fn base_directive(&mut self, sparql: bool) -> Step<()> {
        let directive = self.next().map(|t| t.position).unwrap_or_default();
        let base = match self.next() {
            Some(Spanned { token: Token::IriRef(raw), position }) => self.resolve(raw, *position)?,
            Some(t) => return self.malformed(format!("expected IRI in @base, found {}", describe(&t.token)), t.position),
            None => return self.malformed("incomplete @base directive", directive),
        };
        if !sparql {
            self.expect_dot()?;
        }
        self.base = Some(base);
        Ok(())
    }

    fn resolve(&self, raw: &str, position: Position) -> Step<Iri> {
        if let Ok(iri) = Iri::new(raw) {
            return Ok(iri);
        }
        let Some(base) = &self.base else {
            return self.malformed(format!("relative IRI <{raw}> without a base"), position);
        };
        let resolved = oxiri::Iri::parse(base.as_str())
            .map_err(|e| e.to_string())
            .and_then(|b| b.resolve(raw).map_err(|e| e.to_string()));
        match resolved.map(|r| Iri::new(r.as_str())) {
            Ok(Ok(iri)) => Ok(iri),
            Ok(Err(e)) | Err(e) => self.malformed(format!("cannot resolve <{raw}>: {e}"), position),
        }
    }

    fn iri_token(&self, t: &Spanned) -> Step<Option<Iri>> {
        Ok(match &t.token {
            Token::IriRef(raw) => Some(self.resolve(raw, t.position)?),
            Token::PName { prefix, local } => Some(expand(&self.prefixes, prefix, local, t.position)?),
            _ => None,
        })
    }

    fn triples_statement(&mut self, out: &mut Vec<Triple>) -> Step<()> {
        let Some(t) = self.next() else { return Ok(()) };
        let subject = match &t.token {
            Token::BlankLabel(label) => Term::BlankNode(label.clone()),
            Token::LBracket => return Err(Abort::Skip(Skip::Unsupported(Construct::BlankNodePropertyList, t.position))),
            Token::LParen => return Err(Abort::Skip(Skip::Unsupported(Construct::Collection, t.position))),
            _ => match self.iri_token(t)? {
                Some(iri) => Term::Iri(iri),
                None => return self.malformed(format!("expected subject, found {}", describe(&t.token)), t.position),
            },
        };
        loop {
            let predicate = self.verb()?;
            loop {
                let (object, position) = self.object()?;
                out.push(Triple {
                    subject: subject.clone(),
                    predicate: predicate.clone(),
                    object,
                    position,
                });
                match self.peek().map(|t| &t.token) {
                    Some(Token::Comma) => {
                        self.pos += 1;
                    }
                    _ => break,
                }
            }
            let mut saw_semicolon = false;
            while let Some(Token::Semicolon) = self.peek().map(|t| &t.token) {
                self.pos += 1;
                saw_semicolon = true;
            }
            match self.peek().map(|t| &t.token) {
                Some(Token::Dot) => {
                    self.pos += 1;
                    return Ok(());
                }
                _ if saw_semicolon => continue,
                Some(_) => {
                    let t = &self.tokens[self.pos];
                    return self.malformed(format!("expected ';', ',' or '.', found {}", describe(&t.token)), t.position);
                }
                None => return self.malformed("expected '.' before end of input", self.end_position()),
            }
        }
    }

    fn verb(&mut self) -> Step<Iri> {
        let Some(t) = self.next() else {
            return self.malformed("expected predicate before end of input", self.end_position());
        };
        if t.token == Token::A {
            return Ok(Iri::from_static(vocab::RDF_TYPE));
        }
        match self.iri_token(t)? {
            Some(iri) => Ok(iri),
            None => self.malformed(format!("expected predicate, found {}", describe(&t.token)), t.position),
        }
    }

    fn object(&mut self) -> Step<(Term, Position)> {
        let Some(t) = self.next() else {
            return self.malformed("expected object before end of input", self.end_position());
        };
        let position = t.position;
        let term = match &t.token {
            Token::BlankLabel(label) => Term::BlankNode(label.clone()),
            Token::String(lexical) => Term::Literal(self.literal_suffix(lexical.clone())?),
            Token::LBracket => return Err(Abort::Skip(Skip::Unsupported(Construct::BlankNodePropertyList, position))),
            Token::LParen => return Err(Abort::Skip(Skip::Unsupported(Construct::Collection, position))),
            Token::LongString => return Err(Abort::Skip(Skip::Unsupported(Construct::LongString, position))),
            Token::Shorthand(_) => return Err(Abort::Skip(Skip::Unsupported(Construct::Shorthand, position))),
            _ => match self.iri_token(t)? {
                Some(iri) => Term::Iri(iri),
                None => return self.malformed(format!("expected object, found {}", describe(&t.token)), position),
            },
        };
        Ok((term, position))
    }

    fn literal_suffix(&mut self, lexical: String) -> Step<Literal> {
        match self.peek().map(|t| &t.token) {
            Some(Token::LangTag(tag)) => {
                self.pos += 1;
                Ok(Literal { lexical, language: Some(tag.clone()), datatype: None })
            }
            Some(Token::DoubleCaret) => {
                self.pos += 1;
                let Some(t) = self.next() else {
                    return self.malformed("expected datatype IRI before end of input", self.end_position());
                };
                match self.iri_token(t)? {
                    Some(datatype) => Ok(Literal { lexical, language: None, datatype: Some(datatype) }),
                    None => self.malformed(format!("expected datatype IRI, found {}", describe(&t.token)), t.position),
                }
            }
            _ => Ok(Literal { lexical, language: None, datatype: None }),
        }
    }
}

fn describe(token: &Token) -> String {
    match token {
        Token::IriRef(i) => format!("<{i}>"),
        Token::PName { prefix, local } => format!("'{prefix}:{local}'"),
        Token::BlankLabel(l) => format!("'_:{l}'"),
        Token::String(_) | Token::LongString => "string literal".into(),
        Token::LangTag(t) => format!("'@{t}'"),
        Token::DoubleCaret => "'^^'".into(),
        Token::A => "'a'".into(),
        Token::PrefixDirective => "'@prefix'".into(),
        Token::BaseDirective => "'@base'".into(),
        Token::SparqlPrefix => "'PREFIX'".into(),
        Token::SparqlBase => "'BASE'".into(),
        Token::Dot => "'.'".into(),
        Token::Semicolon => "';'".into(),
        Token::Comma => "','".into(),
        Token::LBracket => "'['".into(),
        Token::RBracket => "']'".into(),
        Token::LParen => "'('".into(),
        Token::RParen => "')'".into(),
        Token::Shorthand(s) | Token::Unknown(s) => format!("'{s}'"),
    }
}
