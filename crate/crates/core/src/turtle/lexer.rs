//! Tokenizer for the supported Turtle subset.
//!
//! Only unterminated IRIs and string literals (and malformed escapes inside
//! them) are fatal. Everything else is tokenized, possibly as
//! [`Token::Unknown`], and left to statement-level recovery in the parser.

use crate::error::{Error, Position};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Token {
    IriRef(String),
    PName { prefix: String, local: String },
    BlankLabel(String),
    String(String),
    LongString,
    LangTag(String),
    DoubleCaret,
    A,
    PrefixDirective,
    BaseDirective,
    /// `PREFIX` and `BASE`: no `@`, no closing `.`.
    SparqlPrefix,
    SparqlBase,
    Dot,
    Semicolon,
    Comma,
    LBracket,
    RBracket,
    LParen,
    RParen,
    /// Numeric or boolean shorthand literal.
    Shorthand(String),
    Unknown(String),
}

#[derive(Debug, Clone)]
pub(crate) struct Spanned {
    pub token: Token,
    pub position: Position,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>, Error> {
    Lexer::new(text).run()
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
    out: Vec<Spanned>,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
            out: Vec::new(),
        }
    }

    fn position(&self) -> Position {
        Position::new(self.line, self.column)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn peek2(&self) -> Option<char> {
        let mut it = self.chars.clone();
        it.next();
        it.next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn push(&mut self, token: Token, position: Position) {
        self.out.push(Spanned { token, position });
    }

    fn run(mut self) -> Result<Vec<Spanned>, Error> {
        // A UTF-8 byte order mark is not part of the document.
        if self.peek() == Some('\u{feff}') {
            self.chars.next();
        }
        while let Some(c) = self.peek() {
            let start = self.position();
            match c {
                c if c.is_whitespace() => {
                    self.bump();
                }
                '#' => {
                    while let Some(c) = self.peek() {
                        if c == '\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                '<' => {
                    let iri = self.iri_ref()?;
                    self.push(Token::IriRef(iri), start);
                }
                '"' | '\'' => {
                    let token = self.string(c)?;
                    self.push(token, start);
                }
                '@' => {
                    self.bump();
                    let word = self.take_while(|c| c.is_ascii_alphanumeric() || c == '-');
                    let token = match word.as_str() {
                        "prefix" => Token::PrefixDirective,
                        "base" => Token::BaseDirective,
                        w if is_lang_tag(w) => Token::LangTag(w.to_string()),
                        w => Token::Unknown(format!("@{w}")),
                    };
                    self.push(token, start);
                }
                '^' => {
                    self.bump();
                    if self.peek() == Some('^') {
                        self.bump();
                        self.push(Token::DoubleCaret, start);
                    } else {
                        self.push(Token::Unknown("^".into()), start);
                    }
                }
                '.' if !self.peek2().is_some_and(|c| c.is_ascii_digit()) => {
                    self.bump();
                    self.push(Token::Dot, start);
                }
                ';' => {
                    self.bump();
                    self.push(Token::Semicolon, start);
                }
                ',' => {
                    self.bump();
                    self.push(Token::Comma, start);
                }
                '[' => {
                    self.bump();
                    self.push(Token::LBracket, start);
                }
                ']' => {
                    self.bump();
                    self.push(Token::RBracket, start);
                }
                '(' => {
                    self.bump();
                    self.push(Token::LParen, start);
                }
                ')' => {
                    self.bump();
                    self.push(Token::RParen, start);
                }
                '_' if self.peek2() == Some(':') => {
                    self.bump();
                    self.bump();
                    let label = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                    if label.is_empty() {
                        self.push(Token::Unknown("_:".into()), start);
                    } else {
                        self.push(Token::BlankLabel(label), start);
                    }
                }
                c if c.is_ascii_digit() || matches!(c, '+' | '-' | '.') => {
                    let number = self.number();
                    self.push(Token::Shorthand(number), start);
                }
                c if is_pn_chars_base(c) || c == ':' => {
                    let token = self.name();
                    self.push(token, start);
                }
                _ => {
                    self.bump();
                    self.push(Token::Unknown(c.to_string()), start);
                }
            }
        }
        Ok(self.out)
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            s.push(c);
            self.bump();
        }
        s
    }

    fn iri_ref(&mut self) -> Result<String, Error> {
        let start = self.position();
        self.bump();
        let mut iri = String::new();
        loop {
            match self.bump() {
                Some('>') => return Ok(iri),
                Some('\\') => {
                    let esc = self.position();
                    let c = match self.bump() {
                        Some('u') => self.hex_escape(4, esc)?,
                        Some('U') => self.hex_escape(8, esc)?,
                        _ => {
                            return Err(Error::Parse {
                                position: esc,
                                message: "invalid escape in IRI".into(),
                            })
                        }
                    };
                    iri.push(c);
                }
                Some(c) if c.is_whitespace() || c == '<' || c == '"' => {
                    return Err(Error::Parse {
                        position: start,
                        message: "unterminated IRI".into(),
                    })
                }
                Some(c) => iri.push(c),
                None => {
                    return Err(Error::Parse {
                        position: start,
                        message: "unterminated IRI".into(),
                    })
                }
            }
        }
    }

    fn hex_escape(&mut self, digits: usize, position: Position) -> Result<char, Error> {
        let mut value = 0u32;
        for _ in 0..digits {
            let d = self.bump().and_then(|c| c.to_digit(16)).ok_or_else(|| Error::Parse {
                position,
                message: "malformed \\u escape".into(),
            })?;
            value = value * 16 + d;
        }
        char::from_u32(value).ok_or_else(|| Error::Parse {
            position,
            message: format!("escape U+{value:X} is not a scalar value"),
        })
    }

    fn string(&mut self, quote: char) -> Result<Token, Error> {
        let start = self.position();
        self.bump();
        if self.peek() == Some(quote) && self.peek2() == Some(quote) {
            self.bump();
            self.bump();
            return self.long_string(quote, start);
        }
        let mut s = String::new();
        loop {
            match self.bump() {
                Some(c) if c == quote => return Ok(Token::String(s)),
                Some('\\') => {
                    let c = self.string_escape()?;
                    s.push(c);
                }
                Some('\n') | Some('\r') | None => {
                    return Err(Error::Parse {
                        position: start,
                        message: "unterminated string literal".into(),
                    })
                }
                Some(c) => s.push(c),
            }
        }
    }

    fn long_string(&mut self, quote: char, start: Position) -> Result<Token, Error> {
        loop {
            match self.bump() {
                Some('\\') => {
                    self.bump();
                }
                Some(c) if c == quote => {
                    if self.peek() == Some(quote) && self.peek2() == Some(quote) {
                        self.bump();
                        self.bump();
                        // Quotes directly before the closing delimiter belong to the content.
                        while self.peek() == Some(quote) {
                            self.bump();
                        }
                        return Ok(Token::LongString);
                    }
                }
                Some(_) => {}
                None => {
                    return Err(Error::Parse {
                        position: start,
                        message: "unterminated long string literal".into(),
                    })
                }
            }
        }
    }

    fn string_escape(&mut self) -> Result<char, Error> {
        let position = self.position();
        Ok(match self.bump() {
            Some('t') => '\t',
            Some('b') => '\u{8}',
            Some('n') => '\n',
            Some('r') => '\r',
            Some('f') => '\u{c}',
            Some('"') => '"',
            Some('\'') => '\'',
            Some('\\') => '\\',
            Some('u') => self.hex_escape(4, position)?,
            Some('U') => self.hex_escape(8, position)?,
            _ => {
                return Err(Error::Parse {
                    position,
                    message: "invalid escape in string literal".into(),
                })
            }
        })
    }

    fn number(&mut self) -> String {
        let mut s = String::new();
        if let Some(c @ ('+' | '-')) = self.peek() {
            s.push(c);
            self.bump();
        }
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {}
                Some('.') if self.peek2().is_some_and(|c| c.is_ascii_digit()) => {}
                Some(c @ ('e' | 'E')) => {
                    s.push(c);
                    self.bump();
                    if let Some(c @ ('+' | '-')) = self.peek() {
                        s.push(c);
                        self.bump();
                    }
                    continue;
                }
                _ => break,
            }
            s.push(self.bump().unwrap_or_default());
        }
        s
    }

    /// True when the `.` under the cursor is followed (after more dots) by a name character.
    fn dot_continues_name(&self) -> bool {
        let mut it = self.chars.clone();
        while it.peek() == Some(&'.') {
            it.next();
        }
        matches!(it.peek(), Some(&c) if is_pn_chars(c) || c == ':' || c == '%')
    }

    fn name(&mut self) -> Token {
        let mut prefix = String::new();
        while let Some(c) = self.peek() {
            if is_pn_chars(c) || (c == '.' && self.dot_continues_name()) {
                prefix.push(c);
                self.bump();
            } else {
                break;
            }
        }
        if self.peek() == Some(':') {
            self.bump();
            let local = self.local_name();
            return Token::PName { prefix, local };
        }
        match prefix.as_str() {
            "a" => Token::A,
            "true" | "false" => Token::Shorthand(prefix),
            w if w.eq_ignore_ascii_case("prefix") => Token::SparqlPrefix,
            w if w.eq_ignore_ascii_case("base") => Token::SparqlBase,
            _ => Token::Unknown(prefix),
        }
    }

    fn local_name(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek() {
            match c {
                '.' if self.dot_continues_name() => {
                    s.push(c);
                    self.bump();
                }
                c if is_pn_chars(c) || c == ':' || c == '%' => {
                    s.push(c);
                    self.bump();
                }
                '\\' => match self.peek2() {
                    Some(e) if "_~.-!$&'()*+,;=/?#@%".contains(e) => {
                        self.bump();
                        self.bump();
                        s.push(e);
                    }
                    _ => break,
                },
                _ => break,
            }
        }
        s
    }
}

fn is_pn_chars_base(c: char) -> bool {
    c.is_ascii_alphabetic() || (!c.is_ascii() && c.is_alphanumeric())
}

fn is_pn_chars(c: char) -> bool {
    is_pn_chars_base(c) || c.is_ascii_digit() || c == '_' || c == '-' || c == '\u{b7}'
}

fn is_lang_tag(w: &str) -> bool {
    let mut parts = w.split('-');
    let first = parts.next().unwrap_or_default();
    !first.is_empty()
        && first.chars().all(|c| c.is_ascii_alphabetic())
        && parts.all(|p| !p.is_empty() && p.chars().all(|c| c.is_ascii_alphanumeric()))
}
