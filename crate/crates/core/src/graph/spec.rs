//! Textual graph descriptors and the edge-list file format.
//!
//! Grammar:
//!
//! ```text
//! spec := "cycle:" INT
//!       | "anticycle:" INT
//!       | "circulant:" INT ":" INT ("," INT)*
//!       | "johnson:" INT ":" INT
//!       | "shrikhande"
//!       | "complete:" INT
//!       | "complement(" spec ")"
//!       | "product(" spec "," spec ")"
//!       | "power(" spec "," INT ")"
//!       | "file:" PATH
//! ```
//!
//! Edge-list files: the first non-comment line is the vertex count `n`; each
//! following non-comment line is `u v` with `0 <= u < v < n`. Lines starting
//! with `#` are comments. Duplicate edges are errors.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, DEFAULT_PRODUCT_VERTEX_CAP};

/// Options honored while resolving a descriptor.
#[derive(Clone, Copy, Debug)]
pub struct ResolveOptions {
    /// Vertex cap applied to `product` and `power`.
    pub product_vertex_cap: usize,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            product_vertex_cap: DEFAULT_PRODUCT_VERTEX_CAP,
        }
    }
}

/// A graph descriptor string; `resolve` parses and builds the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec(pub String);

impl GraphSpec {
    pub fn new(text: impl Into<String>) -> GraphSpec {
        GraphSpec(text.into())
    }

    pub fn resolve(&self) -> Result<Graph> {
        self.resolve_with(&ResolveOptions::default())
    }

    pub fn resolve_with(&self, opts: &ResolveOptions) -> Result<Graph> {
        let mut parser = Parser {
            text: self.0.trim(),
            pos: 0,
            opts: *opts,
        };
        let g = parser.spec()?;
        parser.skip_ws();
        if parser.pos != parser.text.len() {
            return Err(Error::Parse(format!(
                "trailing input at byte {} of {:?}",
                parser.pos, parser.text
            )));
        }
        // Canonical label: the descriptor itself.
        Ok(g.with_label(parser.text))
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
    opts: ResolveOptions,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(Error::Parse(format!(
                "expected {token:?} at byte {} of {:?}",
                self.pos, self.text
            )))
        }
    }

    fn int(&mut self) -> Result<usize> {
        let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(Error::Parse(format!(
                "expected integer at byte {} of {:?}",
                self.pos, self.text
            )));
        }
        self.pos += digits.len();
        digits
            .parse()
            .map_err(|e| Error::Parse(format!("bad integer {digits:?}: {e}")))
    }

    fn spec(&mut self) -> Result<Graph> {
        self.skip_ws();
        if self.eat("cycle:") {
            return Graph::cycle(self.int()?);
        }
        if self.eat("anticycle:") {
            let n = self.int()?;
            return Ok(Graph::cycle(n)?.complement());
        }
        if self.eat("circulant:") {
            let n = self.int()?;
            self.expect(":")?;
            let mut conns = vec![self.int()?];
            while self.eat(",") {
                conns.push(self.int()?);
            }
            return Graph::circulant(n, &conns);
        }
        if self.eat("johnson:") {
            let n = self.int()?;
            self.expect(":")?;
            let k = self.int()?;
            return Graph::johnson(n, k);
        }
        if self.eat("shrikhande") {
            return Ok(Graph::shrikhande());
        }
        if self.eat("complete:") {
            return Ok(Graph::complete(self.int()?));
        }
        if self.eat("complement(") {
            let g = self.spec()?;
            self.skip_ws();
            self.expect(")")?;
            return Ok(g.complement());
        }
        if self.eat("product(") {
            let a = self.spec()?;
            self.skip_ws();
            self.expect(",")?;
            let b = self.spec()?;
            self.skip_ws();
            self.expect(")")?;
            return a.disjunctive_product_capped(&b, self.opts.product_vertex_cap);
        }
        if self.eat("power(") {
            let g = self.spec()?;
            self.skip_ws();
            self.expect(",")?;
            self.skip_ws();
            let m = self.int()?;
            self.skip_ws();
            self.expect(")")?;
            return g.disjunctive_power_capped(m, self.opts.product_vertex_cap);
        }
        if self.eat("file:") {
            // Path runs to the next delimiter that could close an enclosing
            // expression, or to end of input.
            let rest = self.rest();
            let end = rest.find([',', ')']).unwrap_or(rest.len());
            let path = rest[..end].trim().to_string();
            self.pos += end;
            if path.is_empty() {
                return Err(Error::Parse("empty path after file:".into()));
            }
            return load_edge_list(Path::new(&path));
        }
        Err(Error::Parse(format!(
            "unknown graph descriptor at byte {} of {:?}",
            self.pos, self.text
        )))
    }
}

/// Loads a graph from the edge-list file format described in the module docs.
pub fn load_edge_list(path: &Path) -> Result<Graph> {
    let content = std::fs::read_to_string(path)?;
    let mut lines = content
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse(format!("{}: missing vertex count", path.display())))?
        .parse()
        .map_err(|e| Error::Parse(format!("{}: bad vertex count: {e}", path.display())))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => {
                return Err(Error::Parse(format!(
                    "{}: expected \"u v\", got {line:?}",
                    path.display()
                )))
            }
        };
        let u: usize = u
            .parse()
            .map_err(|e| Error::Parse(format!("{}: bad endpoint {u:?}: {e}", path.display())))?;
        let v: usize = v
            .parse()
            .map_err(|e| Error::Parse(format!("{}: bad endpoint {v:?}: {e}", path.display())))?;
        if u >= v {
            return Err(Error::Parse(format!(
                "{}: edges must satisfy u < v, got {u} {v}",
                path.display()
            )));
        }
        edges.push((u, v));
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| match e {
        Error::InvalidInput(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })?;
    Ok(g.with_label(format!("file:{}", path.display())))
}
