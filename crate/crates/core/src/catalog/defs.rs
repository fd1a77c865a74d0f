//! Line-oriented group-definition documents.
//!
//! ```text
//! # Frobenius group of order 39
//! group Z13
//! kind cyclic
//! n 13
//! end
//!
//! group Z3
//! kind cyclic
//! n 3
//! end
//!
//! group F39
//! kind semidirect
//! normal Z13
//! acting Z3
//! actgens 1
//! act 1 0 3 6 9 12 2 5 8 11 1 4 7 10
//! end
//! ```
//!
//! Keys per kind:
//!
//! | kind         | keys                                                      |
//! |--------------|-----------------------------------------------------------|
//! | `cyclic`     | `n <order>`                                               |
//! | `perm`       | `degree <d>`, `gen <d images>` (repeatable)               |
//! | `product`    | `factors <name> <name> ...`                               |
//! | `semidirect` | `normal <name>`, `acting <name>`, `actgens <indices>`,    |
//! |              | `act <acting element> <|N| images>` (one per generator)   |
//! | `table`      | `row <n indices>` (repeatable, identity first)            |
//!
//! Everything after `#` on a line is a comment. References must point at
//! groups defined earlier in the same document. Semidirect products use the
//! convention of [`semidirect_product`]; `act` names the acting element by
//! its index in the acting group.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use crate::group::{
    cyclic_group_with_cap, direct_product, perm_group, semidirect_product, ActionSpec, FiniteGroup,
    Permutation, DEFAULT_CAP,
};

/// Largest permutation degree a document may declare.
pub const MAX_DEGREE: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Cyclic {
        n: usize,
    },
    Perm {
        degree: usize,
        gens: Vec<Vec<usize>>,
    },
    Product {
        factors: Vec<String>,
    },
    Semidirect {
        normal: String,
        acting: String,
        actgens: Vec<usize>,
        /// One image array per entry of `actgens`, in the same order.
        maps: Vec<Vec<usize>>,
    },
    Table {
        rows: Vec<Vec<usize>>,
    },
}

impl GroupSource {
    pub fn kind(&self) -> &'static str {
        match self {
            GroupSource::Cyclic { .. } => "cyclic",
            GroupSource::Perm { .. } => "perm",
            GroupSource::Product { .. } => "product",
            GroupSource::Semidirect { .. } => "semidirect",
            GroupSource::Table { .. } => "table",
        }
    }
}

/// One `group … end` block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDef {
    pub name: String,
    pub source: GroupSource,
    /// Line of the `group` header, 1-based.
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DefErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("duplicate group name {0:?}")]
    DuplicateName(String),
    #[error("unresolved reference {0:?}")]
    UnresolvedReference(String),
    #[error("cannot construct group: {0}")]
    Construction(String),
}

/// A failure with its 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct DefError {
    pub line: usize,
    pub column: usize,
    pub kind: DefErrorKind,
}

impl fmt::Display for DefError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.kind
        )
    }
}

fn syntax<T>(line: usize, column: usize, msg: impl Into<String>) -> Result<T, DefError> {
    Err(DefError {
        line,
        column,
        kind: DefErrorKind::Syntax(msg.into()),
    })
}

#[derive(Clone, Copy)]
struct Token<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

fn tokenize(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut tokens = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut column = 0;
    for (byte, ch) in content.char_indices() {
        column += 1;
        if ch.is_whitespace() {
            if let Some((b, c)) = start.take() {
                tokens.push(Token {
                    line: line_no,
                    column: c,
                    text: &content[b..byte],
                });
            }
        } else if start.is_none() {
            start = Some((byte, column));
        }
    }
    if let Some((b, c)) = start {
        tokens.push(Token {
            line: line_no,
            column: c,
            text: &content[b..],
        });
    }
    tokens
}

fn number(tok: &Token<'_>) -> Result<usize, DefError> {
    tok.text.parse::<usize>().or_else(|_| {
        syntax(
            tok.line,
            tok.column,
            format!("expected a number, found {:?}", tok.text),
        )
    })
}

fn numbers(toks: &[Token<'_>]) -> Result<Vec<usize>, DefError> {
    toks.iter().map(number).collect()
}

/// Accumulates the keys of one block until `end`.
struct Block<'a> {
    name: String,
    header: Token<'a>,
    kind: Option<Token<'a>>,
    n: Option<usize>,
    degree: Option<(Token<'a>, usize)>,
    gens: Vec<(Token<'a>, Vec<usize>)>,
    factors: Option<Vec<Token<'a>>>,
    normal: Option<Token<'a>>,
    acting: Option<Token<'a>>,
    actgens: Option<Vec<usize>>,
    acts: Vec<(Token<'a>, usize, Vec<usize>)>,
    rows: Vec<Vec<usize>>,
    keys: Vec<Token<'a>>,
}

const KEYS_BY_KIND: &[(&str, &[&str])] = &[
    ("cyclic", &["kind", "n"]),
    ("perm", &["kind", "degree", "gen"]),
    ("product", &["kind", "factors"]),
    (
        "semidirect",
        &["kind", "normal", "acting", "actgens", "act"],
    ),
    ("table", &["kind", "row"]),
];

impl<'a> Block<'a> {
    fn new(name: String, header: Token<'a>) -> Self {
        Self {
            name,
            header,
            kind: None,
            n: None,
            degree: None,
            gens: Vec::new(),
            factors: None,
            normal: None,
            acting: None,
            actgens: None,
            acts: Vec::new(),
            rows: Vec::new(),
            keys: Vec::new(),
        }
    }

    fn single<'t>(key: &Token<'_>, args: &'t [Token<'a>]) -> Result<&'t Token<'a>, DefError> {
        match args {
            [one] => Ok(one),
            _ => syntax(
                key.line,
                key.column,
                format!("{} takes exactly one argument", key.text),
            ),
        }
    }

    fn once<T>(slot: &Option<T>, key: &Token<'_>) -> Result<(), DefError> {
        if slot.is_some() {
            syntax(key.line, key.column, format!("{} given twice", key.text))
        } else {
            Ok(())
        }
    }

    fn key(&mut self, key: Token<'a>, args: &[Token<'a>]) -> Result<(), DefError> {
        match key.text {
            "kind" => {
                Self::once(&self.kind, &key)?;
                let kind = *Self::single(&key, args)?;
                if !KEYS_BY_KIND.iter().any(|(k, _)| *k == kind.text) {
                    return syntax(
                        kind.line,
                        kind.column,
                        format!("unknown kind {:?}", kind.text),
                    );
                }
                self.kind = Some(kind);
            }
            "n" => {
                Self::once(&self.n, &key)?;
                self.n = Some(number(Self::single(&key, args)?)?);
            }
            "degree" => {
                Self::once(&self.degree, &key)?;
                let tok = Self::single(&key, args)?;
                let degree = number(tok)?;
                if degree > MAX_DEGREE {
                    return syntax(tok.line, tok.column, format!("degree exceeds {MAX_DEGREE}"));
                }
                self.degree = Some((*tok, degree));
            }
            "gen" => self.gens.push((key, numbers(args)?)),
            "factors" => {
                Self::once(&self.factors, &key)?;
                if args.len() < 2 {
                    return syntax(key.line, key.column, "factors needs at least two names");
                }
                self.factors = Some(args.to_vec());
            }
            "normal" => {
                Self::once(&self.normal, &key)?;
                self.normal = Some(*Self::single(&key, args)?);
            }
            "acting" => {
                Self::once(&self.acting, &key)?;
                self.acting = Some(*Self::single(&key, args)?);
            }
            "actgens" => {
                Self::once(&self.actgens, &key)?;
                self.actgens = Some(numbers(args)?);
            }
            "act" => {
                let Some((first, images)) = args.split_first() else {
                    return syntax(
                        key.line,
                        key.column,
                        "act needs an acting element and images",
                    );
                };
                self.acts.push((key, number(first)?, numbers(images)?));
            }
            "row" => self.rows.push(numbers(args)?),
            other => return syntax(key.line, key.column, format!("unknown key {other:?}")),
        }
        self.keys.push(key);
        Ok(())
    }

    fn missing<T>(&self, what: &str) -> Result<T, DefError> {
        syntax(
            self.header.line,
            self.header.column,
            format!("group {} is missing {what}", self.name),
        )
    }

    fn finish(mut self) -> Result<GroupDef, DefError> {
        let Some(kind) = self.kind else {
            return self.missing("kind");
        };
        let allowed = KEYS_BY_KIND
            .iter()
            .find(|(k, _)| *k == kind.text)
            .map(|(_, keys)| *keys)
            .unwrap_or(&[]);
        if let Some(bad) = self.keys.iter().find(|k| !allowed.contains(&k.text)) {
            return syntax(
                bad.line,
                bad.column,
                format!("key {:?} does not apply to kind {}", bad.text, kind.text),
            );
        }
        let source = match kind.text {
            "cyclic" => match self.n {
                Some(n) => GroupSource::Cyclic { n },
                None => return self.missing("n"),
            },
            "perm" => {
                let Some((_, degree)) = self.degree else {
                    return self.missing("degree");
                };
                let mut gens = Vec::with_capacity(self.gens.len());
                for (tok, images) in std::mem::take(&mut self.gens) {
                    if images.len() != degree {
                        return syntax(
                            tok.line,
                            tok.column,
                            format!("gen has {} images, degree is {degree}", images.len()),
                        );
                    }
                    if let Err(e) = Permutation::new(images.clone()) {
                        return syntax(tok.line, tok.column, e.to_string());
                    }
                    gens.push(images);
                }
                GroupSource::Perm { degree, gens }
            }
            "product" => match self.factors {
                Some(f) => GroupSource::Product {
                    factors: f.iter().map(|t| t.text.to_string()).collect(),
                },
                None => return self.missing("factors"),
            },
            "semidirect" => {
                let (Some(normal), Some(acting)) = (self.normal, self.acting) else {
                    return self.missing("normal and acting");
                };
                let Some(actgens) = self.actgens.take() else {
                    return self.missing("actgens");
                };
                let mut by_gen: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for (tok, g, images) in std::mem::take(&mut self.acts) {
                    if !actgens.contains(&g) {
                        return syntax(
                            tok.line,
                            tok.column,
                            format!("act refers to {g}, which is not listed in actgens"),
                        );
                    }
                    if by_gen.insert(g, images).is_some() {
                        return syntax(tok.line, tok.column, format!("act {g} given twice"));
                    }
                }
                let mut maps = Vec::with_capacity(actgens.len());
                for g in &actgens {
                    match by_gen.get(g) {
                        Some(m) => maps.push(m.clone()),
                        None => {
                            return self.missing(&format!("an act line for acting element {g}"))
                        }
                    }
                }
                GroupSource::Semidirect {
                    normal: normal.text.to_string(),
                    acting: acting.text.to_string(),
                    actgens,
                    maps,
                }
            }
            "table" => {
                if self.rows.is_empty() {
                    return self.missing("rows");
                }
                GroupSource::Table {
                    rows: std::mem::take(&mut self.rows),
                }
            }
            _ => unreachable!("kind validated when read"),
        };
        Ok(GroupDef {
            name: self.name,
            source,
            line: self.header.line,
        })
    }

    fn references(&self) -> Vec<Token<'a>> {
        let mut refs: Vec<Token<'a>> = self.factors.clone().unwrap_or_default();
        refs.extend(self.normal);
        refs.extend(self.acting);
        refs
    }
}

/// Syntax, duplicate names and references; no construction.
fn parse_structure(document: &str) -> Result<Vec<GroupDef>, DefError> {
    let mut defs = Vec::new();
    let mut seen: HashMap<String, usize> = HashMap::new();
    let mut open: Option<Block<'_>> = None;
    let mut last_line = 0;
    for (i, line) in document.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let tokens = tokenize(line_no, line);
        let Some((head, args)) = tokens.split_first() else {
            continue;
        };
        match (head.text, open.as_mut()) {
            ("group", None) => {
                let name = *Block::single(head, args)?;
                if seen.contains_key(name.text) {
                    return Err(DefError {
                        line: name.line,
                        column: name.column,
                        kind: DefErrorKind::DuplicateName(name.text.to_string()),
                    });
                }
                open = Some(Block::new(name.text.to_string(), *head));
            }
            ("group", Some(block)) => {
                return syntax(
                    head.line,
                    head.column,
                    format!("group {} is not closed with end", block.name),
                )
            }
            ("end", Some(_)) => {
                if let Some(extra) = args.first() {
                    return syntax(extra.line, extra.column, "unexpected token after end");
                }
                let block = open.take().expect("matched Some");
                for r in block.references() {
                    if !seen.contains_key(r.text) {
                        return Err(DefError {
                            line: r.line,
                            column: r.column,
                            kind: DefErrorKind::UnresolvedReference(r.text.to_string()),
                        });
                    }
                }
                let def = block.finish()?;
                seen.insert(def.name.clone(), defs.len());
                defs.push(def);
            }
            (_, Some(block)) => block.key(*head, args)?,
            (other, None) => {
                return syntax(
                    head.line,
                    head.column,
                    format!("expected `group <name>`, found {other:?}"),
                )
            }
        }
    }
    if let Some(block) = open {
        return syntax(
            last_line.max(1),
            1,
            format!("unexpected end of document inside group {}", block.name),
        );
    }
    Ok(defs)
}

/// Parses a document and checks that every definition can be built (with
/// the default size cap).
pub fn parse_group_defs(document: &str) -> Result<Vec<GroupDef>, DefError> {
    let defs = parse_structure(document)?;
    build_groups(&defs, DEFAULT_CAP)?;
    Ok(defs)
}

/// Parses and builds every group in a document.
pub fn load_groups(document: &str, cap: usize) -> Result<Vec<FiniteGroup>, DefError> {
    build_groups(&parse_structure(document)?, cap)
}

/// Builds definitions in order; references resolve to earlier entries.
pub fn build_groups(defs: &[GroupDef], cap: usize) -> Result<Vec<FiniteGroup>, DefError> {
    let mut built: Vec<FiniteGroup> = Vec::with_capacity(defs.len());
    let mut index: HashMap<&str, usize> = HashMap::new();
    for def in defs {
        let fail = |kind: DefErrorKind| DefError {
            line: def.line,
            column: 1,
            kind,
        };
        let lookup = |name: &str| {
            index
                .get(name)
                .map(|&i| &built[i])
                .ok_or_else(|| fail(DefErrorKind::UnresolvedReference(name.to_string())))
        };
        let group = match &def.source {
            GroupSource::Cyclic { n } => cyclic_group_with_cap(*n, cap),
            GroupSource::Perm { degree, gens } => {
                let gens = gens
                    .iter()
                    .map(|g| Permutation::new(g.clone()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| fail(DefErrorKind::Construction(e.to_string())))?;
                perm_group(*degree, &gens, cap)
            }
            GroupSource::Product { factors } => {
                let mut acc = lookup(&factors[0])?.clone();
                let mut result = Ok(());
                for f in &factors[1..] {
                    match direct_product(&acc, lookup(f)?, cap) {
                        Ok(g) => acc = g,
                        Err(e) => {
                            result = Err(e);
                            break;
                        }
                    }
                }
                result.map(|()| acc)
            }
            GroupSource::Semidirect {
                normal,
                acting,
                actgens,
                maps,
            } => {
                let normal = lookup(normal)?;
                let action = ActionSpec::new(normal.order(), maps.clone());
                semidirect_product(normal, lookup(acting)?, &action, actgens, cap)
            }
            GroupSource::Table { rows } => {
                if rows.len() > cap {
                    Err(crate::Error::TooLarge {
                        size: rows.len(),
                        cap,
                    })
                } else {
                    FiniteGroup::from_table(def.name.clone(), rows, false)
                }
            }
        }
        .map_err(|e| fail(DefErrorKind::Construction(e.to_string())))?;
        index.insert(&def.name, built.len());
        built.push(group.with_name(def.name.clone()));
    }
    Ok(built)
}

/// Serializes a group as a `table` definition. Whitespace and `#` in the
/// name are replaced with `_`.
pub fn to_table_def(group: &FiniteGroup) -> String {
    let name: String = group
        .name()
        .chars()
        .map(|c| {
            if c.is_whitespace() || c == '#' {
                '_'
            } else {
                c
            }
        })
        .collect();
    let mut out = format!(
        "group {}\nkind table\n",
        if name.is_empty() { "G" } else { &name }
    );
    for a in group.elements() {
        out.push_str("row");
        for x in group.row(a) {
            out.push(' ');
            out.push_str(&x.to_string());
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    const F78: &str = "\
# Z13 : Z6, GAP-style comment allowed
group Z13
kind cyclic
n 13
end

group Z6   # acting group
kind cyclic
n 6
end

group F78
kind semidirect
normal Z13
acting Z6
actgens 1
act 1 0 4 8 12 3 7 11 2 6 10 1 5 9
end
";

    fn err(doc: &str) -> DefError {
        parse_group_defs(doc).unwrap_err()
    }

    #[test]
    fn single_cyclic() {
        let defs = parse_group_defs("group C6\nkind cyclic\nn 6\nend\n").unwrap();
        assert_eq!(
            defs,
            vec![GroupDef {
                name: "C6".into(),
                source: GroupSource::Cyclic { n: 6 },
                line: 1
            }]
        );
    }

    #[test]
    fn semidirect_document() {
        let defs = parse_group_defs(F78).unwrap();
        assert_eq!(defs.len(), 3);
        assert_eq!(defs[2].source.kind(), "semidirect");
        let groups = load_groups(F78, DEFAULT_CAP).unwrap();
        assert_eq!(groups[2].order(), 78);
        assert_eq!(groups[2].name(), "F78");
    }

    #[test]
    fn perm_and_product_documents() {
        let doc = "group A5\nkind perm\ndegree 5\ngen 1 2 3 4 0\ngen 1 2 0 3 4\nend\n\
                   group Z2\nkind cyclic\nn 2\nend\n\
                   group P\nkind product\nfactors Z2 A5 Z2\nend\n";
        let groups = load_groups(doc, DEFAULT_CAP).unwrap();
        assert_eq!(groups[0].order(), 60);
        assert_eq!(groups[2].order(), 240);
    }

    #[test]
    fn unresolved_reference() {
        let e = err("group P\nkind product\nfactors Zx Zx\nend\n");
        assert_eq!(e.kind, DefErrorKind::UnresolvedReference("Zx".into()));
        assert_eq!((e.line, e.column), (3, 9));
        // forward references are not allowed either
        let e = err("group P\nkind product\nfactors A A\nend\ngroup A\nkind cyclic\nn 2\nend\n");
        assert!(matches!(e.kind, DefErrorKind::UnresolvedReference(_)));
    }

    #[test]
    fn located_syntax_errors() {
        let e = err("group C\nkind cyclic\nn six\nend\n");
        assert_eq!((e.line, e.column), (3, 3));
        let e = err("\n  kind cyclic\n");
        assert_eq!((e.line, e.column), (2, 3));
        let e = err("group C\nkind cyclic\n");
        assert!(e.to_string().contains("unexpected end of document"));
        let e = err("group C\nkind cyclic\ndegree 3\nn 2\nend\n");
        assert_eq!((e.line, e.column), (3, 1));
        let e = err("group C\nkind blob\nend\n");
        assert_eq!((e.line, e.column), (2, 6));
        let e = err("group C\nkind cyclic\nend\n");
        assert!(e.to_string().contains("missing n"), "{e}");
        let e = err("group P\nkind perm\ndegree 3\ngen 0 0 1\nend\n");
        assert_eq!(e.line, 4);
        let e = err("group P\nkind perm\ndegree 3\ngen 0 1\nend\n");
        assert_eq!(e.line, 4);
        let e = err("group A\nkind cyclic\nn 2\ngroup B\n");
        assert_eq!(e.line, 4);
        let e = err("group A extra\n");
        assert_eq!(e.line, 1);
    }

    #[test]
    fn duplicate_names() {
        let e = err("group A\nkind cyclic\nn 2\nend\ngroup A\nkind cyclic\nn 3\nend\n");
        assert_eq!(e.kind, DefErrorKind::DuplicateName("A".into()));
        assert_eq!((e.line, e.column), (5, 7));
    }

    #[test]
    fn construction_errors_are_located() {
        let bad_action = F78.replace("act 1 0 4 8", "act 1 0 2 4");
        let e = err(&bad_action);
        assert!(matches!(e.kind, DefErrorKind::Construction(_)));
        assert_eq!(e.line, 12);

        let e = err("group T\nkind table\nrow 0 1\nrow 0 1\nend\n");
        assert!(matches!(e.kind, DefErrorKind::Construction(_)));

        let e = load_groups("group C\nkind cyclic\nn 50\nend\n", 10).unwrap_err();
        assert!(e.to_string().contains("too large"), "{e}");

        let e = err(&F78.replace("actgens 1", "actgens 1 2"));
        assert!(e.to_string().contains("act line"), "{e}");
        let e = err(&F78.replace("act 1 0", "act 3 0"));
        assert!(e.to_string().contains("not listed"), "{e}");
    }

    #[test]
    fn table_round_trip() {
        for name in ["S3", "H1", "Z2xZ2"] {
            let g = catalog(name).unwrap();
            let text = to_table_def(&g);
            let back = load_groups(&text, DEFAULT_CAP).unwrap();
            assert_eq!(back[0].rows(), g.rows(), "{name}");
            assert_eq!(back[0].name(), name);
        }
    }

    #[test]
    fn tokenizer_columns_count_characters() {
        let toks = tokenize(1, "ψ  ab\tc # d");
        let cols: Vec<_> = toks.iter().map(|t| (t.column, t.text)).collect();
        assert_eq!(cols, vec![(1, "ψ"), (4, "ab"), (7, "c")]);
    }
}
