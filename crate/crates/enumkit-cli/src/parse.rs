//! Plain-text instance files.
//!
//! Four formats, all line-oriented, with `c`-prefixed comment lines and blank
//! lines ignored everywhere:
//!
//! * hypergraph — header `h n m`, then `m` lines of space-separated 1-based
//!   vertex indices (one hyperedge per line);
//! * digraph — header `g n m` or `g n m s` (`s` = source vertex), then `m`
//!   lines `u v`, each a directed edge;
//! * CNF — DIMACS: header `p cnf n m`, then clauses as signed integers
//!   terminated by `0` (clauses may span lines); the caller picks which
//!   clause fragment to validate against;
//! * parity system — lines `x v1 v2 … vk : b` with `b` in `{0,1}`, optionally
//!   preceded by a `p xor n m` header. Without a header, `n` is the largest
//!   variable index that occurs.

use enumkit::sat::{Clause, ClauseSet, FragmentKind, Literal};
use enumkit::{Graph, Hypergraph};

/// A diagnostic pointing at the offending input line (1-based).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// A parsed instance of any supported format.
#[derive(Debug, Clone)]
pub enum InstanceSpec {
    Hypergraph(Hypergraph),
    Digraph(Graph),
    Clauses(ClauseSet),
}

/// Which format (and, for CNF, which clause fragment) to parse a file as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Hypergraph,
    Digraph,
    Cnf(FragmentKind),
    Xor,
}

pub fn parse_instance(text: &str, format: InputFormat) -> Result<InstanceSpec, ParseError> {
    match format {
        InputFormat::Hypergraph => parse_hypergraph(text).map(InstanceSpec::Hypergraph),
        InputFormat::Digraph => parse_digraph(text).map(InstanceSpec::Digraph),
        InputFormat::Cnf(kind) => parse_cnf(text, kind).map(InstanceSpec::Clauses),
        InputFormat::Xor => parse_xor(text).map(InstanceSpec::Clauses),
    }
}

/// Canonical writer; `parse(serialize(i))` reproduces `i`, and serializing a
/// freshly parsed canonical file reproduces that file byte for byte.
pub fn serialize_instance(spec: &InstanceSpec) -> String {
    match spec {
        InstanceSpec::Hypergraph(h) => serialize_hypergraph(h),
        InstanceSpec::Digraph(g) => serialize_digraph(g),
        InstanceSpec::Clauses(cs) if cs.kind() == FragmentKind::Xor => serialize_xor(cs),
        InstanceSpec::Clauses(cs) => serialize_cnf(cs),
    }
}

/// Lines that carry content: `(1-based number, whitespace tokens)`.
fn content_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('c') {
                None
            } else {
                Some((i + 1, line.split_whitespace().collect()))
            }
        })
        .collect()
}

fn parse_count(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .map_err(|_| err(line, format!("{what} must be an integer, got {token:?}")))
}

fn parse_vertex(line: usize, token: &str, n: usize) -> Result<usize, ParseError> {
    let v = parse_count(line, token, "vertex")?;
    if v == 0 || v > n {
        return Err(err(line, format!("vertex {v} is out of range 1..={n}")));
    }
    Ok(v)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let lines = content_lines(text);
    let Some(((header_line, header), rest)) = lines.split_first() else {
        return Err(err(1, "empty file; expected a `h n m` header"));
    };
    let (n, m) = match header.as_slice() {
        ["h", n, m] => (
            parse_count(*header_line, n, "vertex count")?,
            parse_count(*header_line, m, "edge count")?,
        ),
        _ => return Err(err(*header_line, "expected header `h n m`")),
    };
    if n == 0 {
        return Err(err(*header_line, "hypergraphs need at least one vertex"));
    }
    if rest.len() != m {
        let at = rest.get(m).or(rest.last()).map(|(l, _)| *l).unwrap_or(*header_line);
        return Err(err(at, format!("expected {m} hyperedge lines, found {}", rest.len())));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, tokens) in rest {
        let edge: Vec<usize> =
            tokens.iter().map(|t| parse_vertex(*line, t, n)).collect::<Result<_, _>>()?;
        edges.push(edge);
    }
    Hypergraph::new(n, edges).map_err(|e| err(*header_line, e.to_string()))
}

pub fn serialize_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("h {} {}\n", h.vertex_count(), h.edge_lists().len());
    for edge in h.edge_lists() {
        let words: Vec<String> = edge.iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_digraph(text: &str) -> Result<Graph, ParseError> {
    let lines = content_lines(text);
    let Some(((header_line, header), rest)) = lines.split_first() else {
        return Err(err(1, "empty file; expected a `g n m [s]` header"));
    };
    let (n, m, source) = match header.as_slice() {
        ["g", n, m] => (
            parse_count(*header_line, n, "vertex count")?,
            parse_count(*header_line, m, "edge count")?,
            None,
        ),
        ["g", n, m, s] => {
            let n = parse_count(*header_line, n, "vertex count")?;
            let m = parse_count(*header_line, m, "edge count")?;
            if n == 0 {
                return Err(err(*header_line, "digraphs need at least one vertex"));
            }
            (n, m, Some(parse_vertex(*header_line, s, n)?))
        }
        _ => return Err(err(*header_line, "expected header `g n m` or `g n m s`")),
    };
    if n == 0 {
        return Err(err(*header_line, "digraphs need at least one vertex"));
    }
    if rest.len() != m {
        let at = rest.get(m).or(rest.last()).map(|(l, _)| *l).unwrap_or(*header_line);
        return Err(err(at, format!("expected {m} edge lines, found {}", rest.len())));
    }
    let mut edges = Vec::with_capacity(m);
    for (line, tokens) in rest {
        match tokens.as_slice() {
            [u, v] => edges.push((parse_vertex(*line, u, n)?, parse_vertex(*line, v, n)?)),
            _ => return Err(err(*line, "expected an edge line `u v`")),
        }
    }
    Graph::new(n, edges, source).map_err(|e| err(*header_line, e.to_string()))
}

pub fn serialize_digraph(g: &Graph) -> String {
    let mut out = match g.source() {
        Some(s) => format!("g {} {} {}\n", g.vertex_count(), g.edges().len(), s),
        None => format!("g {} {}\n", g.vertex_count(), g.edges().len()),
    };
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_cnf(text: &str, kind: FragmentKind) -> Result<ClauseSet, ParseError> {
    if kind == FragmentKind::Xor {
        return Err(err(1, "parity systems use the `x v1 … vk : b` format, not DIMACS CNF"));
    }
    let lines = content_lines(text);
    let Some(((header_line, header), rest)) = lines.split_first() else {
        return Err(err(1, "empty file; expected a `p cnf n m` header"));
    };
    let (n, m) = match header.as_slice() {
        ["p", "cnf", n, m] => (
            parse_count(*header_line, n, "variable count")?,
            parse_count(*header_line, m, "clause count")?,
        ),
        _ => return Err(err(*header_line, "expected header `p cnf n m`")),
    };
    if n == 0 {
        return Err(err(*header_line, "clause sets need at least one variable"));
    }
    // Clauses are streams of signed literals terminated by 0 and may span
    // lines; a clause is attributed to the line holding its terminator.
    let mut clauses: Vec<(usize, Clause)> = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();
    let mut last_line = *header_line;
    for (line, tokens) in rest {
        last_line = *line;
        for token in tokens {
            let lit: i64 = token.parse().map_err(|_| {
                err(*line, format!("expected a signed literal or 0, got {token:?}"))
            })?;
            if lit == 0 {
                clauses.push((*line, Clause::Or(std::mem::take(&mut pending))));
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > n {
                return Err(err(*line, format!("variable {var} is out of range 1..={n}")));
            }
            pending.push(if lit > 0 { Literal::positive(var) } else { Literal::negative(var) });
        }
    }
    if !pending.is_empty() {
        return Err(err(last_line, "last clause is not terminated by 0"));
    }
    if clauses.len() != m {
        return Err(err(
            last_line,
            format!("header promises {m} clauses, found {}", clauses.len()),
        ));
    }
    // Validate one clause at a time so diagnostics can name the line.
    for (line, clause) in &clauses {
        ClauseSet::new(n, kind, vec![clause.clone()]).map_err(|e| err(*line, e.to_string()))?;
    }
    ClauseSet::new(n, kind, clauses.into_iter().map(|(_, c)| c).collect())
        .map_err(|e| err(*header_line, e.to_string()))
}

pub fn serialize_cnf(cs: &ClauseSet) -> String {
    let mut out = format!("p cnf {} {}\n", cs.var_count(), cs.clauses().len());
    for clause in cs.clauses() {
        let Clause::Or(lits) = clause else { unreachable!("CNF serializer on a parity clause") };
        for lit in lits {
            let v = lit.var as i64;
            out.push_str(&format!("{} ", if lit.positive { v } else { -v }));
        }
        out.push_str("0\n");
    }
    out
}

pub fn parse_xor(text: &str) -> Result<ClauseSet, ParseError> {
    let lines = content_lines(text);
    if lines.is_empty() {
        return Err(err(1, "empty file; expected `x v1 … vk : b` lines"));
    }
    let (declared, equation_lines): (Option<(usize, usize, usize)>, &[(usize, Vec<&str>)]) =
        if lines[0].1.first() == Some(&"p") {
            let (header_line, header) = &lines[0];
            match header.as_slice() {
                ["p", "xor", n, m] => {
                    let n = parse_count(*header_line, n, "variable count")?;
                    let m = parse_count(*header_line, m, "equation count")?;
                    (Some((*header_line, n, m)), &lines[1..])
                }
                _ => return Err(err(*header_line, "expected header `p xor n m`")),
            }
        } else {
            (None, &lines[..])
        };

    let mut raw: Vec<(usize, Vec<usize>, bool)> = Vec::new();
    for (line, tokens) in equation_lines {
        if tokens.first() != Some(&"x") {
            return Err(err(*line, "expected an equation line `x v1 … vk : b`"));
        }
        let Some(colon) = tokens.iter().position(|t| *t == ":") else {
            return Err(err(*line, "equation line is missing the `:` separator"));
        };
        if colon + 2 != tokens.len() {
            return Err(err(*line, "expected exactly one right-hand side bit after `:`"));
        }
        let rhs = match tokens[colon + 1] {
            "0" => false,
            "1" => true,
            other => {
                return Err(err(*line, format!("right-hand side must be 0 or 1, got {other:?}")))
            }
        };
        let vars: Vec<usize> = tokens[1..colon]
            .iter()
            .map(|t| {
                let v = parse_count(*line, t, "variable")?;
                if v == 0 {
                    return Err(err(*line, "variables are numbered from 1"));
                }
                Ok(v)
            })
            .collect::<Result<_, _>>()?;
        if vars.is_empty() {
            return Err(err(*line, "parity equation with no variables"));
        }
        raw.push((*line, vars, rhs));
    }

    let n = match declared {
        Some((header_line, n, m)) => {
            if raw.len() != m {
                return Err(err(
                    header_line,
                    format!("header promises {m} equations, found {}", raw.len()),
                ));
            }
            if n == 0 {
                return Err(err(header_line, "parity systems need at least one variable"));
            }
            n
        }
        None => raw.iter().flat_map(|(_, vars, _)| vars.iter().copied()).max().unwrap_or(0),
    };
    for (line, vars, _) in &raw {
        if let Some(&v) = vars.iter().find(|&&v| v > n) {
            return Err(err(*line, format!("variable {v} is out of range 1..={n}")));
        }
    }
    let clauses: Vec<Clause> =
        raw.into_iter().map(|(_, vars, rhs)| Clause::Xor { vars, rhs }).collect();
    let header_line = declared.map(|(l, _, _)| l).unwrap_or(1);
    ClauseSet::new(n, FragmentKind::Xor, clauses).map_err(|e| err(header_line, e.to_string()))
}

pub fn serialize_xor(cs: &ClauseSet) -> String {
    let mut out = format!("p xor {} {}\n", cs.var_count(), cs.clauses().len());
    for clause in cs.clauses() {
        let Clause::Xor { vars, rhs } = clause else {
            unreachable!("parity serializer on a disjunctive clause")
        };
        let words: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("x {} : {}\n", words.join(" "), u8::from(*rhs)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypergraph_format() {
        let h = parse_hypergraph("h 3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_lists(), &[vec![1, 2], vec![2, 3]]);

        let with_noise = "c a comment\n\nh 3 2\nc another\n1 2\n2 3\n";
        let h2 = parse_hypergraph(with_noise).unwrap();
        assert_eq!(serialize_hypergraph(&h2), "h 3 2\n1 2\n2 3\n");
    }

    #[test]
    fn hypergraph_diagnostics_carry_line_numbers() {
        let e = parse_hypergraph("h 3 2\n1 2\n2 9\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_hypergraph("h 3 2\n1 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_hypergraph("hyper 3 2\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn digraph_format() {
        let g = parse_digraph("g 4 3 1\n1 3\n1 4\n4 2\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.source(), Some(1));
        assert_eq!(g.edges(), &[(1, 3), (1, 4), (4, 2)]);

        let sourceless = parse_digraph("g 2 1\n1 2\n").unwrap();
        assert_eq!(sourceless.source(), None);

        let e = parse_digraph("g 2 1\n1 2 3\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_digraph("g 2 1 5\n1 2\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn cnf_format() {
        let cs = parse_cnf("p cnf 2 1\n1 2 0\n", FragmentKind::MonotonePositive).unwrap();
        assert_eq!(cs.var_count(), 2);
        assert_eq!(cs.clauses().len(), 1);

        // Clauses may span lines; the empty clause is a bare terminator.
        let cs = parse_cnf("p cnf 3 2\n1 2\n3 0 0\n", FragmentKind::Ihs).unwrap();
        assert_eq!(cs.clauses().len(), 2);
        assert_eq!(cs.clauses()[1], Clause::Or(vec![]));
    }

    #[test]
    fn cnf_diagnostics() {
        let e = parse_cnf("p cnf 2 1\n1 5 0\n", FragmentKind::Krom).unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_cnf("p cnf 2 1\n1 2\n", FragmentKind::Krom).unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_cnf("p cnf 2 2\n1 0\n", FragmentKind::Krom).unwrap_err();
        assert_eq!(e.line, 2);
        // Fragment mismatch names the clause's line.
        let e = parse_cnf("p cnf 2 2\n1 0\n1 -2 0\n", FragmentKind::MonotonePositive).unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn xor_format() {
        let cs = parse_xor("x 1 2 3 : 0\n").unwrap();
        assert_eq!(cs.var_count(), 3);
        assert_eq!(cs.clauses(), &[Clause::Xor { vars: vec![1, 2, 3], rhs: false }]);

        let cs = parse_xor("p xor 5 1\nx 1 2 : 1\n").unwrap();
        assert_eq!(cs.var_count(), 5);

        let e = parse_xor("x 1 2 :\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_xor("p xor 2 1\nx 1 3 : 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_xor("x : 1\n").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn serialization_round_trips() {
        let canonical = [
            (InputFormat::Hypergraph, "h 3 2\n1 2\n2 3\n"),
            (InputFormat::Digraph, "g 4 3 1\n1 3\n1 4\n4 2\n"),
            (InputFormat::Cnf(FragmentKind::Krom), "p cnf 2 2\n1 2 0\n-1 -2 0\n"),
            (InputFormat::Xor, "p xor 3 2\nx 1 2 : 1\nx 2 3 : 0\n"),
        ];
        for (format, text) in canonical {
            let spec = parse_instance(text, format).unwrap();
            assert_eq!(serialize_instance(&spec), text, "canonical file must survive a round trip");
        }

        // Non-canonical input normalizes to a fixpoint after one round trip.
        let messy = "c noise\nx 2 1 : 1\n";
        let spec = parse_instance(messy, InputFormat::Xor).unwrap();
        let canon = serialize_instance(&spec);
        let again = parse_instance(&canon, InputFormat::Xor).unwrap();
        assert_eq!(serialize_instance(&again), canon);
    }
}
