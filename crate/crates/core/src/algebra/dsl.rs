//! The quiver DSL.
//!
//! ```text
//! # comments run to end of line; `;` separates statements on one line
//! vertices 1 2 3
//! arrow a: 1 -> 2
//! arrow b: 2 -> 3
//! relation b*a        # composite read right to left: first a, then b
//! ```

use std::sync::Arc;

use super::quiver::{Arrow, PathAlgebra, Quiver};
use crate::error::{Error, Result};
use crate::exactla::Field;

#[derive(Clone, Debug, PartialEq)]
struct Tok {
    text: String,
    line: usize,
    col: usize,
}

fn is_word(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

/// Splits source into statements of tokens. Punctuation tokens: `:`, `->`, `*`, `+`, `-`.
fn lex(src: &str) -> Result<Vec<Vec<Tok>>> {
    let mut stmts = Vec::new();
    for (li, raw) in src.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut cur: Vec<Tok> = Vec::new();
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let tok = |text: &str| Tok { text: text.to_string(), line: li + 1, col };
            if c.is_whitespace() {
                i += 1;
            } else if c == ';' {
                if !cur.is_empty() {
                    stmts.push(std::mem::take(&mut cur));
                }
                i += 1;
            } else if c == '-' && chars.get(i + 1) == Some(&'>') {
                cur.push(tok("->"));
                i += 2;
            } else if matches!(c, ':' | '*' | '+' | '-' | '(' | ')') {
                cur.push(tok(&c.to_string()));
                i += 1;
            } else if is_word(c) {
                let start = i;
                while i < chars.len() && is_word(chars[i]) {
                    i += 1;
                }
                cur.push(Tok { text: chars[start..i].iter().collect(), line: li + 1, col: start + 1 });
            } else {
                return Err(Error::Syntax { line: li + 1, col, msg: format!("unexpected character `{c}`") });
            }
        }
        if !cur.is_empty() {
            stmts.push(cur);
        }
    }
    Ok(stmts)
}

fn syntax(t: &Tok, msg: impl Into<String>) -> Error {
    Error::Syntax { line: t.line, col: t.col, msg: msg.into() }
}

fn ident(t: &Tok) -> bool {
    t.text.chars().all(is_word)
}

/// Parses DSL text into a validated path algebra over `field`.
pub fn parse_algebra(src: &str, field: Field) -> Result<Arc<PathAlgebra>> {
    let mut q = Quiver::default();
    let mut rel_toks: Vec<Vec<Tok>> = Vec::new();
    for st in lex(src)? {
        let head = &st[0];
        match head.text.as_str() {
            "vertices" => {
                if st.len() < 2 {
                    return Err(syntax(head, "`vertices` needs at least one id"));
                }
                for t in &st[1..] {
                    if !ident(t) {
                        return Err(syntax(t, format!("expected vertex id, found `{}`", t.text)));
                    }
                    if q.vertex_index(&t.text).is_some() {
                        return Err(syntax(t, format!("duplicate vertex `{}`", t.text)));
                    }
                    q.vertices.push(t.text.clone());
                }
            }
            "arrow" => {
                let shape = st.len() == 6
                    && ident(&st[1])
                    && st[2].text == ":"
                    && ident(&st[3])
                    && st[4].text == "->"
                    && ident(&st[5]);
                if !shape {
                    let at = st.get(1).unwrap_or(head);
                    return Err(syntax(at, "expected `arrow <name>: <src> -> <tgt>`"));
                }
                if q.arrow_index(&st[1].text).is_some() {
                    return Err(syntax(&st[1], format!("duplicate arrow `{}`", st[1].text)));
                }
                let vert = |t: &Tok| {
                    q.vertex_index(&t.text).ok_or_else(|| Error::UndeclaredVertex {
                        line: t.line,
                        col: t.col,
                        name: t.text.clone(),
                    })
                };
                let (s, t) = (vert(&st[3])?, vert(&st[5])?);
                q.arrows.push(Arrow { name: st[1].text.clone(), src: s, tgt: t });
            }
            "relation" => {
                if st.len() < 2 {
                    return Err(syntax(head, "`relation` needs a composite path"));
                }
                rel_toks.push(st[1..].to_vec());
            }
            other => return Err(syntax(head, format!("unknown statement `{other}`"))),
        }
    }
    let mut relations = Vec::new();
    for toks in rel_toks {
        if let Some(t) = toks.iter().find(|t| matches!(t.text.as_str(), "+" | "-" | "(" | ")")) {
            return Err(Error::NonMonomial { line: t.line, col: t.col });
        }
        let mut names = Vec::new();
        for (i, t) in toks.iter().enumerate() {
            let want_name = i % 2 == 0;
            if want_name != (t.text != "*") {
                return Err(syntax(t, "expected `<arrow>*<arrow>...`"));
            }
            if want_name {
                names.push(t);
            }
        }
        if toks.len() % 2 == 0 {
            return Err(syntax(toks.last().unwrap(), "dangling `*`"));
        }
        let mut arrows = Vec::new();
        for t in names.iter().rev() {
            match q.arrow_index(&t.text) {
                Some(a) => arrows.push(a),
                None if t.text.chars().all(|c| c.is_ascii_digit()) => {
                    return Err(Error::NonMonomial { line: t.line, col: t.col })
                }
                None => return Err(syntax(t, format!("unknown arrow `{}`", t.text))),
            }
        }
        let first = &toks[0];
        if arrows.len() < 2 {
            return Err(syntax(first, "a relation needs at least two arrows"));
        }
        for w in arrows.windows(2) {
            if q.arrows[w[0]].tgt != q.arrows[w[1]].src {
                return Err(syntax(first, "relation is not a composable path"));
            }
        }
        relations.push(arrows);
    }
    if q.vertices.is_empty() {
        return Err(Error::Syntax { line: 1, col: 1, msg: "no vertices declared".into() });
    }
    PathAlgebra::new(q, relations, field)
}

/// Canonical DSL text; `parse_algebra(print_algebra(a))` rebuilds `a` and
/// printing canonical text reproduces it byte for byte.
pub fn print_algebra(a: &PathAlgebra) -> String {
    let q = &a.quiver;
    let mut s = format!("vertices {}\n", q.vertices.join(" "));
    for ar in &q.arrows {
        s.push_str(&format!("arrow {}: {} -> {}\n", ar.name, q.vertices[ar.src], q.vertices[ar.tgt]));
    }
    for r in &a.relations {
        let names: Vec<&str> = r.iter().rev().map(|&x| q.arrows[x].name.as_str()).collect();
        s.push_str(&format!("relation {}\n", names.join("*")));
    }
    s
}
