//! Plain-text formats shared with the CLI.
//!
//! All integers are decimal; field values and matrix entries accept a
//! decimal point. Numeric formats allow `#` comments to end of line and skip
//! blank lines. The path-list format treats every line as data (tokens are
//! opaque, and a blank line is the empty path).

use thiserror::Error;

use crate::contour::{ContourError, ScalarField};
use crate::excursion::{Excursion, ExcursionError};
use crate::path_forest::PathForest;
use crate::tree::{build_tree, ChildOrder, RootedTree, TreeError};

/// Errors from parsing text inputs, including the domain validation of what
/// the text describes.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Excursion(#[from] ExcursionError),
    #[error(transparent)]
    Contour(#[from] ContourError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Comment-stripped nonblank lines with their 1-based line numbers.
fn meaningful_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

fn parse_token<T: std::str::FromStr>(
    line: usize,
    token: &str,
    what: &str,
) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("cannot parse {what} from {token:?}")))
}

fn two_fields<'a>(
    line: usize,
    text: &'a str,
    what: &str,
) -> Result<(&'a str, &'a str), ParseError> {
    let mut it = text.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(syntax(line, format!("expected {what}"))),
    }
}

/// Parses the edge-list tree format: a `n root` header, then `n - 1` lines
/// `parent child`.
pub fn parse_edge_list(text: &str) -> Result<RootedTree, ParseError> {
    let mut lines = meaningful_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `n root` header"))?;
    let (n_tok, root_tok) = two_fields(ln, header, "`n root` header")?;
    let n: usize = parse_token(ln, n_tok, "vertex count")?;
    let root: usize = parse_token(ln, root_tok, "root id")?;
    if n == 0 {
        return Err(syntax(ln, "vertex count must be positive"));
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for _ in 0..n - 1 {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| syntax(ln, format!("expected {} edge lines", n - 1)))?;
        let (a, b) = two_fields(ln, line, "`parent child` edge")?;
        edges.push((
            parse_token(ln, a, "vertex id")?,
            parse_token(ln, b, "vertex id")?,
        ));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "unexpected extra line"));
    }
    Ok(build_tree(n, root, &edges, ChildOrder::AscendingId)?)
}

/// Serializes a tree in the edge-list format, children listed by ascending
/// child id.
pub fn edge_list_string(tree: &RootedTree) -> String {
    let mut out = format!("{} {}\n", tree.len(), tree.root());
    for v in 0..tree.len() {
        if v != tree.root() {
            out.push_str(&format!("{} {}\n", tree.parent(v), v));
        }
    }
    out
}

/// Parses an excursion: whitespace-separated integers.
pub fn parse_excursion(text: &str) -> Result<Excursion, ParseError> {
    let mut seq = Vec::new();
    for (ln, line) in meaningful_lines(text) {
        for token in line.split_whitespace() {
            seq.push(parse_token::<i64>(ln, token, "height")?);
        }
    }
    if seq.is_empty() {
        return Err(syntax(1, "empty excursion"));
    }
    Ok(Excursion::validate(&seq)?)
}

/// One line of space-separated heights.
pub fn excursion_string(exc: &Excursion) -> String {
    let mut out = exc
        .heights()
        .iter()
        .map(|h| h.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push('\n');
    out
}

/// Parses the scalar-field format: `n m` header, `n` lines `vertex value`,
/// `m` lines `u v`.
pub fn parse_field(text: &str) -> Result<ScalarField, ParseError> {
    let mut lines = meaningful_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `n m` header"))?;
    let (n_tok, m_tok) = two_fields(ln, header, "`n m` header")?;
    let n: usize = parse_token(ln, n_tok, "vertex count")?;
    let m: usize = parse_token(ln, m_tok, "edge count")?;
    let mut values = vec![f64::NAN; n];
    let mut assigned = vec![false; n];
    for _ in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| syntax(ln, format!("expected {n} `vertex value` lines")))?;
        let (v_tok, val_tok) = two_fields(ln, line, "`vertex value` line")?;
        let v: usize = parse_token(ln, v_tok, "vertex id")?;
        if v >= n {
            return Err(syntax(
                ln,
                format!("vertex id {v} out of range for n = {n}"),
            ));
        }
        if assigned[v] {
            return Err(syntax(ln, format!("duplicate value for vertex {v}")));
        }
        assigned[v] = true;
        values[v] = parse_token(ln, val_tok, "field value")?;
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| syntax(ln, format!("expected {m} edge lines")))?;
        let (a, b) = two_fields(ln, line, "`u v` edge")?;
        edges.push((
            parse_token(ln, a, "vertex id")?,
            parse_token(ln, b, "vertex id")?,
        ));
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "unexpected extra line"));
    }
    Ok(ScalarField::new(values, &edges)?)
}

/// Serializes a field in the `n m` format.
pub fn field_string(field: &ScalarField) -> String {
    let mut out = format!("{} {}\n", field.len(), field.edges().len());
    for v in 0..field.len() {
        out.push_str(&format!("{} {}\n", v, format_number(field.value(v))));
    }
    for &(u, v) in field.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses a path list: one path per line, whitespace-separated tokens, blank
/// lines meaning the empty path. Returns the forest and the id of each line.
pub fn parse_paths(text: &str) -> Result<(PathForest, Vec<usize>), ParseError> {
    let mut forest = PathForest::new();
    let mut line_ids = Vec::new();
    for line in text.lines() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        line_ids.push(forest.insert_path(&tokens));
    }
    Ok((forest, line_ids))
}

/// Serializes each registered path, one per line, in id order.
pub fn paths_string(forest: &PathForest) -> String {
    let mut out = String::new();
    for p in 0..forest.path_count() {
        let tokens = forest.path_tokens(p).expect("id in range");
        out.push_str(&tokens.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a distance matrix: `n` header, then `n` rows of `n` numbers.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<f64>>, ParseError> {
    let mut lines = meaningful_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| syntax(1, "missing `n` header"))?;
    let mut it = header.split_whitespace();
    let n: usize = match (it.next(), it.next()) {
        (Some(tok), None) => parse_token(ln, tok, "matrix size")?,
        _ => return Err(syntax(ln, "expected a single `n` header")),
    };
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| syntax(ln, format!("expected {n} matrix rows")))?;
        let row: Vec<f64> = line
            .split_whitespace()
            .map(|tok| parse_token(ln, tok, "matrix entry"))
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(syntax(
                ln,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(syntax(ln, "unexpected extra line"));
    }
    Ok(rows)
}

/// Serializes a square matrix with the `n` header.
pub fn matrix_string(matrix: &[Vec<f64>]) -> String {
    let mut out = format!("{}\n", matrix.len());
    for row in matrix {
        let line: Vec<String> = row.iter().map(|&x| format_number(x)).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a label-only Newick string (no branch lengths) into a tree with
/// preorder vertex ids and the written labels.
pub fn parse_newick(text: &str) -> Result<RootedTree, ParseError> {
    struct Tmp {
        label: String,
        children: Vec<Tmp>,
    }

    struct Parser<'a> {
        bytes: &'a [u8],
        pos: usize,
    }

    impl Parser<'_> {
        fn skip_ws(&mut self) {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.bytes.get(self.pos).copied()
        }

        fn label(&mut self) -> String {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len()
                && !matches!(self.bytes[self.pos], b'(' | b')' | b',' | b';')
            {
                self.pos += 1;
            }
            String::from_utf8_lossy(&self.bytes[start..self.pos])
                .trim()
                .to_string()
        }

        fn subtree(&mut self) -> Result<Tmp, ParseError> {
            let mut children = Vec::new();
            if self.peek() == Some(b'(') {
                self.pos += 1;
                loop {
                    children.push(self.subtree()?);
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                        }
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(syntax(1, "expected `,` or `)` in newick")),
                    }
                }
            }
            Ok(Tmp {
                label: self.label(),
                children,
            })
        }
    }

    let mut parser = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let root = parser.subtree()?;
    if parser.peek() != Some(b';') {
        return Err(syntax(1, "expected `;` terminating newick"));
    }
    parser.pos += 1;
    if parser.peek().is_some() {
        return Err(syntax(1, "trailing characters after `;`"));
    }

    fn flatten(node: Tmp, children: &mut Vec<Vec<usize>>, labels: &mut Vec<String>) -> usize {
        let id = children.len();
        children.push(Vec::new());
        labels.push(node.label);
        for child in node.children {
            let c = flatten(child, children, labels);
            children[id].push(c);
        }
        id
    }

    let mut children = Vec::new();
    let mut labels = Vec::new();
    flatten(root, &mut children, &mut labels);
    Ok(RootedTree::from_child_lists(0, children)?.with_labels(labels)?)
}

/// Formats a float, printing integral values without a decimal point.
pub fn format_number(x: f64) -> String {
    if x.is_finite() && x == x.trunc() && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}
