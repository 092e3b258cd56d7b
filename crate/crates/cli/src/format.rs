//! Line-oriented text formats for matroid instances.
//!
//! Three headers are recognized, each starting a document:
//!
//! ```text
//! matroid          graph            gf2
//! n 5              vertices 4       rows 3
//! c 0 1 2          edge 0 1         col 0 1
//! c 2 3 4          edge 1 2         col 2
//! tag e 2          tag f 0          col
//! ```
//!
//! * `matroid`: `n K` fixes the ground size, each `c e1 e2 …` line adds one
//!   circuit, elements are 0-based.
//! * `graph`: `vertices K` fixes the vertex count, each `edge u v` line adds
//!   one edge (parallel edges and loops allowed); the instance is the cycle
//!   matroid, with elements numbered by edge-line order.
//! * `gf2`: `rows K` fixes the row count, each `col r1 r2 …` line adds one
//!   column listing the rows where it has a 1 (a bare `col` is the zero
//!   column); the instance is the linear matroid over GF(2) on the columns.
//!
//! All formats accept `tag NAME INDEX` lines naming individual elements.
//! Everything after `#` on a line is a comment; blank lines are ignored.
//! Errors carry the 1-based line number of the offending line.

use matroid_core::{CircuitFamily, Gf2Matrix, Matroid, Multigraph, Subset};
use std::fmt;

/// A parse failure, pointing at the offending line of the input text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number; 0 when the problem is not tied to one line
    /// (for example an empty document).
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// A parsed input document: the matroid it denotes plus any element tags.
#[derive(Debug, Clone)]
pub struct Document {
    /// The circuit family as written (or derived from the graph/matrix).
    pub circuits: CircuitFamily,
    /// Named elements from `tag` lines, in file order.
    pub tags: Vec<(String, usize)>,
    /// Which header introduced the document.
    pub kind: DocumentKind,
}

/// The header keyword of a parsed document.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Matroid,
    Graph,
    Gf2,
}

impl Document {
    /// Validate the circuit family as a matroid.
    ///
    /// Graph and GF(2) documents always pass; raw `matroid` documents fail
    /// here when their circuit list violates circuit elimination.
    pub fn into_matroid(self) -> Result<(Matroid, Vec<(String, usize)>), ParseError> {
        match Matroid::new(self.circuits) {
            Ok(m) => Ok((m, self.tags)),
            Err(e) => err(0, format!("not a matroid: {e}")),
        }
    }
}

struct Lines<'a> {
    /// (1-based line number, significant tokens)
    rows: Vec<(usize, Vec<&'a str>)>,
}

fn tokenize(text: &str) -> Lines<'_> {
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let before_comment = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = before_comment.split_whitespace().collect();
        if !tokens.is_empty() {
            rows.push((idx + 1, tokens));
        }
    }
    Lines { rows }
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| ParseError {
            line,
            message: format!("expected {what}, found `{token}`"),
        })
}

/// Parse one instance document in any of the three formats.
pub fn parse_input(text: &str) -> Result<Document, ParseError> {
    let lines = tokenize(text);
    let Some(&(first_line, ref first_tokens)) = lines.rows.first() else {
        return err(0, "empty input: expected a `matroid`, `graph`, or `gf2` header");
    };
    if first_tokens.len() != 1 {
        return err(
            first_line,
            format!(
                "expected a bare header (`matroid`, `graph`, or `gf2`), found `{}`",
                first_tokens.join(" ")
            ),
        );
    }
    let body = &lines.rows[1..];
    match first_tokens[0] {
        "matroid" => parse_matroid_body(body),
        "graph" => parse_graph_body(body),
        "gf2" => parse_gf2_body(body),
        other => err(
            first_line,
            format!("unknown header `{other}` (expected `matroid`, `graph`, or `gf2`)"),
        ),
    }
}

fn parse_tag(
    line: usize,
    tokens: &[&str],
    ground: usize,
    tags: &mut Vec<(String, usize)>,
) -> Result<(), ParseError> {
    if tokens.len() != 3 {
        return err(line, "expected `tag NAME INDEX`");
    }
    let idx = parse_usize(line, tokens[2], "an element index")?;
    if idx >= ground {
        return err(
            line,
            format!("tag index {idx} out of range (ground size {ground})"),
        );
    }
    tags.push((tokens[1].to_string(), idx));
    Ok(())
}

fn parse_matroid_body(body: &[(usize, Vec<&str>)]) -> Result<Document, ParseError> {
    let mut ground: Option<usize> = None;
    let mut circuits: Vec<Subset> = Vec::new();
    let mut tags = Vec::new();
    for &(line, ref tokens) in body {
        match tokens[0] {
            "n" => {
                if ground.is_some() {
                    return err(line, "duplicate `n` line");
                }
                if tokens.len() != 2 {
                    return err(line, "expected `n SIZE`");
                }
                let n = parse_usize(line, tokens[1], "a ground size")?;
                if n > 64 {
                    return err(line, format!("ground size {n} too large (limit 64)"));
                }
                ground = Some(n);
            }
            "c" => {
                let Some(n) = ground else {
                    return err(line, "`c` line before `n` line");
                };
                if tokens.len() < 2 {
                    return err(line, "empty circuit: `c` needs at least one element");
                }
                let mut members = Vec::new();
                for t in &tokens[1..] {
                    let e = parse_usize(line, t, "an element index")?;
                    if e >= n {
                        return err(
                            line,
                            format!("element {e} out of range (ground size {n})"),
                        );
                    }
                    if members.contains(&e) {
                        return err(line, format!("repeated element {e} in circuit"));
                    }
                    members.push(e);
                }
                circuits.push(Subset::from_elements(members));
            }
            "tag" => {
                let Some(n) = ground else {
                    return err(line, "`tag` line before `n` line");
                };
                parse_tag(line, tokens, n, &mut tags)?;
            }
            other => {
                return err(
                    line,
                    format!("unknown directive `{other}` (expected `n`, `c`, or `tag`)"),
                )
            }
        }
    }
    let Some(n) = ground else {
        return err(0, "missing `n` line in matroid document");
    };
    let family = CircuitFamily::new(n, circuits).map_err(|e| ParseError {
        line: 0,
        message: format!("invalid circuit list: {e}"),
    })?;
    Ok(Document {
        circuits: family,
        tags,
        kind: DocumentKind::Matroid,
    })
}

fn parse_graph_body(body: &[(usize, Vec<&str>)]) -> Result<Document, ParseError> {
    let mut vertices: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut tags = Vec::new();
    // Tag lines are validated against the edge count once all edges are read.
    let mut pending_tags: Vec<(usize, Vec<String>)> = Vec::new();
    for &(line, ref tokens) in body {
        match tokens[0] {
            "vertices" => {
                if vertices.is_some() {
                    return err(line, "duplicate `vertices` line");
                }
                if tokens.len() != 2 {
                    return err(line, "expected `vertices COUNT`");
                }
                vertices = Some(parse_usize(line, tokens[1], "a vertex count")?);
            }
            "edge" => {
                let Some(v) = vertices else {
                    return err(line, "`edge` line before `vertices` line");
                };
                if tokens.len() != 3 {
                    return err(line, "expected `edge U V`");
                }
                let u = parse_usize(line, tokens[1], "a vertex index")?;
                let w = parse_usize(line, tokens[2], "a vertex index")?;
                if u >= v || w >= v {
                    return err(
                        line,
                        format!("edge endpoint out of range (vertex count {v})"),
                    );
                }
                edges.push((u, w));
            }
            "tag" => {
                pending_tags.push((line, tokens.iter().map(|t| t.to_string()).collect()));
            }
            other => {
                return err(
                    line,
                    format!(
                        "unknown directive `{other}` (expected `vertices`, `edge`, or `tag`)"
                    ),
                )
            }
        }
    }
    let Some(v) = vertices else {
        return err(0, "missing `vertices` line in graph document");
    };
    for (line, tokens) in pending_tags {
        let refs: Vec<&str> = tokens.iter().map(|s| s.as_str()).collect();
        parse_tag(line, &refs, edges.len(), &mut tags)?;
    }
    let graph = Multigraph::new(v, edges).map_err(|e| ParseError {
        line: 0,
        message: format!("invalid graph: {e}"),
    })?;
    let matroid = graph.cycle_matroid().map_err(|e| ParseError {
        line: 0,
        message: format!("cannot build cycle matroid: {e}"),
    })?;
    Ok(Document {
        circuits: matroid.circuits().clone(),
        tags,
        kind: DocumentKind::Graph,
    })
}

fn parse_gf2_body(body: &[(usize, Vec<&str>)]) -> Result<Document, ParseError> {
    let mut rows: Option<usize> = None;
    let mut cols: Vec<u64> = Vec::new();
    let mut tags = Vec::new();
    let mut pending_tags: Vec<(usize, Vec<String>)> = Vec::new();
    for &(line, ref tokens) in body {
        match tokens[0] {
            "rows" => {
                if rows.is_some() {
                    return err(line, "duplicate `rows` line");
                }
                if tokens.len() != 2 {
                    return err(line, "expected `rows COUNT`");
                }
                let r = parse_usize(line, tokens[1], "a row count")?;
                if r > 64 {
                    return err(line, format!("row count {r} too large (limit 64)"));
                }
                rows = Some(r);
            }
            "col" => {
                let Some(r) = rows else {
                    return err(line, "`col` line before `rows` line");
                };
                let mut mask = 0u64;
                for t in &tokens[1..] {
                    let row = parse_usize(line, t, "a row index")?;
                    if row >= r {
                        return err(line, format!("row {row} out of range (row count {r})"));
                    }
                    mask |= 1u64 << row;
                }
                cols.push(mask);
            }
            "tag" => {
                pending_tags.push((line, tokens.iter().map(|t| t.to_string()).collect()));
            }
            other => {
                return err(
                    line,
                    format!("unknown directive `{other}` (expected `rows`, `col`, or `tag`)"),
                )
            }
        }
    }
    let Some(r) = rows else {
        return err(0, "missing `rows` line in gf2 document");
    };
    for (line, tokens) in pending_tags {
        let refs: Vec<&str> = tokens.iter().map(|s| s.as_str()).collect();
        parse_tag(line, &refs, cols.len(), &mut tags)?;
    }
    let matrix = Gf2Matrix::new(r, cols).map_err(|e| ParseError {
        line: 0,
        message: format!("invalid matrix: {e}"),
    })?;
    let matroid = matrix.matroid().map_err(|e| ParseError {
        line: 0,
        message: format!("cannot build column matroid: {e}"),
    })?;
    Ok(Document {
        circuits: matroid.circuits().clone(),
        tags,
        kind: DocumentKind::Gf2,
    })
}

/// Parse a file's text and produce the validated matroid plus its tags.
pub fn load_matroid(text: &str) -> Result<(Matroid, Vec<(String, usize)>), ParseError> {
    parse_input(text)?.into_matroid()
}

#[cfg(test)]
mod tests {
    use super::*;
    use matroid_core::verify::encode_matroid;

    #[test]
    fn parses_uniform_one_three_from_pairs() {
        let (m, tags) = load_matroid("matroid\nn 3\nc 0 1\nc 0 2\nc 1 2\n").unwrap();
        assert_eq!(m.ground_size(), 3);
        assert_eq!(m.rank_full(), 1);
        assert_eq!(m.circuits().len(), 3);
        assert!(tags.is_empty());
    }

    #[test]
    fn parses_double_edge_graph() {
        let doc = parse_input("graph\nvertices 2\nedge 0 1\nedge 0 1\n").unwrap();
        assert_eq!(doc.kind, DocumentKind::Graph);
        let (m, _) = doc.into_matroid().unwrap();
        assert_eq!(m.ground_size(), 2);
        assert_eq!(m.circuits().members(), &[Subset::from_elements([0, 1])]);
    }

    #[test]
    fn rejects_nested_circuits() {
        let e = load_matroid("matroid\nn 3\nc 0 1\nc 0 1 2\n").unwrap_err();
        assert!(e.message.contains("antichain"), "message: {}", e.message);
    }

    #[test]
    fn rejects_non_matroid_circuit_list() {
        // {0,1} and {1,2} demand a circuit inside {0,2}; there is none.
        let e = load_matroid("matroid\nn 3\nc 0 1\nc 1 2\n").unwrap_err();
        assert!(e.message.contains("not a matroid"), "message: {}", e.message);
    }

    #[test]
    fn reports_line_numbers() {
        let e = parse_input("matroid\nn 3\nc 0 5\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("out of range"));

        let e = parse_input("matroid\nc 0 1\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("before `n`"));

        let e = parse_input("graph\nvertices 2\nedge 0 2\n").unwrap_err();
        assert_eq!(e.line, 3);

        let e = parse_input("gf2\nrows 2\ncol 3\n").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let text = "# a triangle\nmatroid\n\nn 3   # ground size\nc 0 1 2\n";
        let (m, _) = load_matroid(text).unwrap();
        assert_eq!(m.circuits().members(), &[Subset::from_elements([0, 1, 2])]);
    }

    #[test]
    fn tags_are_collected_and_validated() {
        let (_, tags) = load_matroid("matroid\nn 3\nc 0 1 2\ntag e 1\ntag f 2\n").unwrap();
        assert_eq!(tags, vec![("e".to_string(), 1), ("f".to_string(), 2)]);

        let e = parse_input("matroid\nn 3\nc 0 1 2\ntag e 9\n").unwrap_err();
        assert_eq!(e.line, 4);
        assert!(e.message.contains("out of range"));
    }

    #[test]
    fn zero_column_is_a_loop() {
        let (m, _) = load_matroid("gf2\nrows 2\ncol\ncol 0\n").unwrap();
        assert_eq!(m.loops(), Subset::singleton(0));
    }

    #[test]
    fn round_trips_through_the_encoder() {
        let text = "matroid\nn 4\nc 0 1 2\nc 0 1 3\nc 0 2 3\nc 1 2 3\ntag p 2\n";
        let (m, tags) = load_matroid(text).unwrap();
        let encoded = encode_matroid(&m, &tags);
        let (m2, tags2) = load_matroid(&encoded).unwrap();
        assert_eq!(m.circuits(), m2.circuits());
        assert_eq!(tags, tags2);
        assert_eq!(encoded, encode_matroid(&m2, &tags2));
    }

    #[test]
    fn rejects_unknown_headers_and_directives() {
        let e = parse_input("polynomial\nn 3\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.message.contains("unknown header"));

        let e = parse_input("matroid\nn 3\nbasis 0 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("unknown directive"));
    }

    #[test]
    fn empty_input_is_an_error() {
        let e = parse_input("# nothing here\n").unwrap_err();
        assert_eq!(e.line, 0);
        assert!(e.message.contains("empty input"));
    }
}
