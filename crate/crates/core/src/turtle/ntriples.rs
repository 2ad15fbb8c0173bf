use super::{Term, Triple};

/// Escapes a literal's lexical form: `\`, `"`, LF and CR; everything else is written as-is.
pub fn escape_literal(lexical: &str) -> String {
    let mut out = String::with_capacity(lexical.len());
    for c in lexical.chars() {
        match c {
            '\\' => out.push_str("\\\\"),
            '"' => out.push_str("\\\""),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out
}

pub fn term_to_ntriples(term: &Term) -> String {
    match term {
        Term::Iri(iri) => format!("<{iri}>"),
        Term::BlankNode(label) => format!("_:{label}"),
        Term::Literal(lit) => {
            let mut s = format!("\"{}\"", escape_literal(&lit.lexical));
            if let Some(lang) = &lit.language {
                s.push('@');
                s.push_str(lang);
            } else if let Some(dt) = &lit.datatype {
                s.push_str("^^<");
                s.push_str(dt.as_str());
                s.push('>');
            }
            s
        }
    }
}

/// A single N-Triples line without the trailing newline.
pub fn to_ntriples(triple: &Triple) -> String {
    format!(
        "{} <{}> {} .",
        term_to_ntriples(&triple.subject),
        triple.predicate,
        term_to_ntriples(&triple.object)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::turtle::parse_document;

    #[test]
    fn escapes() {
        assert_eq!(escape_literal("a\"b\\c\nd\re\tf"), "a\\\"b\\\\c\\nd\\re\tf");
    }

    #[test]
    fn serializes_literal_variants() {
        let doc = parse_document(
            "<http://x/a> <http://x/p> \"v\"@en-GB , \"w\"^^<http://x/dt> , _:b0 .",
            None,
        )
        .unwrap();
        let lines: Vec<_> = doc.triples.iter().map(to_ntriples).collect();
        assert_eq!(lines[0], "<http://x/a> <http://x/p> \"v\"@en-GB .");
        assert_eq!(lines[1], "<http://x/a> <http://x/p> \"w\"^^<http://x/dt> .");
        assert_eq!(lines[2], "<http://x/a> <http://x/p> _:b0 .");
    }
}
