//! The directed de Bruijn graph and its unoriented quotient.
//!
//! In the unoriented graph every vertex is a reflected pair of length-`(n-1)`
//! words and every edge a reflected pair of length-`n` words. The edge `[e]`
//! joins the classes of `prefix(e)` and `suffix(e)`, where `e` is the
//! representative.
//!
//! Each edge stores its two ends in a fixed order: end 0 sits at the class of
//! the representative's prefix and end 1 at the class of its suffix. Walking
//! an edge from end 0 to end 1 reads the representative; walking it the other
//! way reads the reflection. A loop therefore owns two incidence records at
//! its vertex.
//!
//! At a vertex `[v]` with `v != v'` an end has type I when the word read while
//! leaving through it starts with `v`, and type II when it starts with `v'`.
//! Ends at palindromic vertices have both types.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::words::{checked_pow, PairClass, Radix, Word};

/// Default cap on `k^n` for graph construction.
pub const DEFAULT_EDGE_CAP: u64 = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IncidenceType {
    TypeI,
    TypeII,
    /// Incidence at a palindromic vertex.
    Both,
}

impl IncidenceType {
    pub fn opposite(self) -> IncidenceType {
        match self {
            IncidenceType::TypeI => IncidenceType::TypeII,
            IncidenceType::TypeII => IncidenceType::TypeI,
            IncidenceType::Both => IncidenceType::Both,
        }
    }
}

fn check_parameters(k: u32, n: usize, cap: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if n < 2 {
        return Err(Error::InvalidParameters(format!("de Bruijn graphs need n >= 2, got {n}")));
    }
    let size = checked_pow(u64::from(k), n).ok_or_else(|| Error::overflow(format!("{k}^{n}")))?;
    if size > u128::from(cap) {
        return Err(Error::SizeCap { k, n, size, cap });
    }
    Ok(())
}

/// The directed de Bruijn graph: vertices are the length-`(n-1)` words and
/// each length-`n` word `e` is an edge `prefix(e) -> suffix(e)`.
///
/// Vertices and edges are identified by their base-`k` values.
#[derive(Clone, Debug)]
pub struct DGraph {
    k: u32,
    n: usize,
    vertex_radix: Radix,
    edge_radix: Radix,
}

pub fn build_directed(k: u32, n: usize) -> Result<DGraph> {
    build_directed_with_cap(k, n, DEFAULT_EDGE_CAP)
}

pub fn build_directed_with_cap(k: u32, n: usize, cap: u64) -> Result<DGraph> {
    check_parameters(k, n, cap)?;
    Ok(DGraph { k, n, vertex_radix: Radix::new(k, n - 1)?, edge_radix: Radix::new(k, n)? })
}

impl DGraph {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> u64 {
        self.vertex_radix.size
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_radix.size
    }

    pub fn tail(&self, edge: u64) -> u64 {
        edge / self.edge_radix.k
    }

    pub fn head(&self, edge: u64) -> u64 {
        edge % self.vertex_radix.size
    }

    /// Outgoing edges of `vertex`, in increasing order of the appended symbol.
    pub fn out_edges(&self, vertex: u64) -> impl Iterator<Item = u64> + '_ {
        let k = self.edge_radix.k;
        (0..k).map(move |a| vertex * k + a)
    }

    pub fn in_edges(&self, vertex: u64) -> impl Iterator<Item = u64> + '_ {
        let size = self.vertex_radix.size;
        (0..self.edge_radix.k).map(move |a| a * size + vertex)
    }

    pub fn vertex_word(&self, vertex: u64) -> Word {
        self.vertex_radix.word(vertex)
    }

    pub fn edge_word(&self, edge: u64) -> Word {
        self.edge_radix.word(edge)
    }
}

/// One end of an unoriented edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeEnd {
    pub vertex: usize,
    pub ty: IncidenceType,
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub class: PairClass,
    code: u64,
    pub ends: [EdgeEnd; 2],
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.ends[0].vertex == self.ends[1].vertex
    }

    pub(crate) fn code(&self) -> u64 {
        self.code
    }
}

/// An `(edge, end)` pair seen from the vertex it touches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Incidence {
    pub edge: usize,
    pub end: usize,
    pub ty: IncidenceType,
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub class: PairClass,
    code: u64,
    incidences: Vec<Incidence>,
}

impl Vertex {
    pub fn incidences(&self) -> &[Incidence] {
        &self.incidences
    }

    pub fn degree(&self) -> usize {
        self.incidences.len()
    }

    pub(crate) fn code(&self) -> u64 {
        self.code
    }
}

/// The unoriented de Bruijn graph.
///
/// Vertices and edges are kept sorted by representative, so index 0 is the
/// class of the all-zero word.
#[derive(Clone, Debug)]
pub struct UGraph {
    k: u32,
    n: usize,
    vertex_radix: Radix,
    edge_radix: Radix,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    /// Vertex index of every length-`(n-1)` word, indexed by its value.
    vertex_of_word: Vec<u32>,
}

pub fn build_unoriented(k: u32, n: usize) -> Result<UGraph> {
    build_unoriented_with_cap(k, n, DEFAULT_EDGE_CAP)
}

pub fn build_unoriented_with_cap(k: u32, n: usize, cap: u64) -> Result<UGraph> {
    check_parameters(k, n, cap)?;
    let vertex_radix = Radix::new(k, n - 1)?;
    let edge_radix = Radix::new(k, n)?;

    let mut vertices = Vec::new();
    let mut vertex_of_word = vec![u32::MAX; vertex_radix.size as usize];
    for code in 0..vertex_radix.size {
        let canonical = vertex_radix.canonical(code);
        if canonical == code {
            vertex_of_word[code as usize] = vertices.len() as u32;
            vertices.push(Vertex { class: vertex_radix.word(code).canonicalize(), code, incidences: Vec::new() });
        }
    }
    for code in 0..vertex_radix.size {
        let canonical = vertex_radix.canonical(code);
        vertex_of_word[code as usize] = vertex_of_word[canonical as usize];
    }

    let mut edges = Vec::new();
    for code in (0..edge_radix.size).filter(|&c| edge_radix.canonical(c) == c) {
        let prefix = code / edge_radix.k;
        let suffix = code % vertex_radix.size;
        let leave = end_type(&vertex_radix, &vertices, &vertex_of_word, prefix);
        // Leaving through end 1 reads the reflection, which starts with
        // reflect(suffix).
        let arrive = end_type(&vertex_radix, &vertices, &vertex_of_word, vertex_radix.reflect(suffix));
        let ends = [
            EdgeEnd { vertex: vertex_of_word[prefix as usize] as usize, ty: leave },
            EdgeEnd { vertex: vertex_of_word[suffix as usize] as usize, ty: arrive },
        ];
        let index = edges.len();
        for (end, e) in ends.iter().enumerate() {
            vertices[e.vertex].incidences.push(Incidence { edge: index, end, ty: e.ty });
        }
        edges.push(Edge { class: edge_radix.word(code).canonicalize(), code, ends });
    }

    let graph = UGraph { k, n, vertex_radix, edge_radix, vertices, edges, vertex_of_word };
    graph.check_incidence_definition()?;
    Ok(graph)
}

/// Type of the end through which a walk leaves, given the first `n-1`
/// symbols of the word it reads.
fn end_type(radix: &Radix, vertices: &[Vertex], vertex_of_word: &[u32], start: u64) -> IncidenceType {
    let vertex = &vertices[vertex_of_word[start as usize] as usize];
    if vertex.class.is_palindrome() {
        IncidenceType::Both
    } else if start == vertex.code {
        IncidenceType::TypeI
    } else {
        debug_assert_eq!(radix.reflect(start), vertex.code);
        IncidenceType::TypeII
    }
}

impl UGraph {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex(&self, index: usize) -> &Vertex {
        &self.vertices[index]
    }

    pub fn edge(&self, index: usize) -> &Edge {
        &self.edges[index]
    }

    /// Index of the vertex containing `word` (either member of the pair).
    pub fn vertex_index(&self, word: &Word) -> Result<usize> {
        if word.k() != self.k || word.len() != self.n - 1 {
            return Err(Error::UnknownVertex(word.canonicalize().to_string()));
        }
        Ok(self.vertex_of_code(word.value()?))
    }

    pub fn vertex_of_class(&self, class: &PairClass) -> Result<usize> {
        self.vertex_index(class.rep())
    }

    pub(crate) fn vertex_of_code(&self, code: u64) -> usize {
        self.vertex_of_word[code as usize] as usize
    }

    /// Index of the edge containing `word` (either member of the pair).
    pub fn edge_index(&self, word: &Word) -> Result<usize> {
        let unknown = || Error::UnknownEdge(word.canonicalize().to_string());
        if word.k() != self.k || word.len() != self.n {
            return Err(unknown());
        }
        let code = self.edge_radix.canonical(word.value()?);
        self.edges.binary_search_by_key(&code, |e| e.code).map_err(|_| unknown())
    }

    pub(crate) fn vertex_radix(&self) -> &Radix {
        &self.vertex_radix
    }

    pub(crate) fn edge_radix(&self) -> &Radix {
        &self.edge_radix
    }

    /// Every incidence at `vertex`; loops contribute two entries.
    pub fn incidence_types(&self, vertex: &PairClass) -> Result<Vec<(PairClass, IncidenceType)>> {
        let v = self.vertex_of_class(vertex)?;
        Ok(self.vertices[v].incidences.iter().map(|inc| (self.edges[inc.edge].class.clone(), inc.ty)).collect())
    }

    /// `(#TypeI, #TypeII, #Both)` at a vertex.
    pub fn type_counts(&self, vertex: usize) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for inc in &self.vertices[vertex].incidences {
            match inc.ty {
                IncidenceType::TypeI => counts.0 += 1,
                IncidenceType::TypeII => counts.1 += 1,
                IncidenceType::Both => counts.2 += 1,
            }
        }
        counts
    }

    pub fn degree(&self, vertex: &PairClass) -> Result<usize> {
        Ok(self.vertices[self.vertex_of_class(vertex)?].degree())
    }

    pub fn odd_vertex_indices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.vertices[v].degree() % 2 == 1).collect()
    }

    /// Odd-degree vertices, sorted by representative.
    pub fn odd_vertices(&self) -> Vec<PairClass> {
        self.odd_vertex_indices().into_iter().map(|v| self.vertices[v].class.clone()).collect()
    }

    /// Number of loops at `vertex`: 0, 1 or 2 for non-constant classes.
    pub fn loop_category(&self, vertex: &PairClass) -> Result<usize> {
        let v = self.vertex_of_class(vertex)?;
        Ok(self.loop_count(v))
    }

    pub(crate) fn loop_count(&self, vertex: usize) -> usize {
        // each loop shows up twice in the incidence list
        self.vertices[vertex].incidences.iter().filter(|inc| self.edges[inc.edge].is_loop()).count() / 2
    }

    /// Evaluates the clause-by-clause definition of the incidence types at
    /// every non-palindromic vertex and checks it against the stored ends.
    ///
    /// `[e]` is type I at `[v]` when `v` is the prefix or `v'` the suffix of
    /// `e`, and type II when `v` is the suffix or `v'` the prefix. Exactly one
    /// of the two must hold, including for palindromic edges such as `[010]`
    /// at `[10]`.
    fn check_incidence_definition(&self) -> Result<()> {
        let vr = &self.vertex_radix;
        for edge in &self.edges {
            let prefix = edge.code / self.edge_radix.k;
            let suffix = edge.code % vr.size;
            for end in &edge.ends {
                let vertex = &self.vertices[end.vertex];
                if vertex.class.is_palindrome() {
                    continue;
                }
                let v = vertex.code;
                let v_rev = vr.reflect(v);
                let type_one = prefix == v || suffix == v_rev;
                let type_two = suffix == v || prefix == v_rev;
                let expected = match (type_one, type_two) {
                    (true, false) => IncidenceType::TypeI,
                    (false, true) => IncidenceType::TypeII,
                    _ => {
                        return Err(Error::Internal(format!(
                            "incidence of {} at {} is not of a single type",
                            edge.class, vertex.class
                        )))
                    }
                };
                if expected != end.ty {
                    return Err(Error::Internal(format!(
                        "incidence of {} at {} stored as {:?}, defined as {:?}",
                        edge.class, vertex.class, end.ty, expected
                    )));
                }
            }
        }
        Ok(())
    }

    /// Graphviz rendering. Type I ends carry an arrowhead; loops are written
    /// once with `multiplicity=2`.
    pub fn to_dot(&self) -> String {
        let marker = |ty: IncidenceType| match ty {
            IncidenceType::TypeI => "normal",
            IncidenceType::TypeII => "none",
            IncidenceType::Both => "odot",
        };
        let mut out = String::new();
        let _ = writeln!(out, "graph uBg_{}_{} {{", self.k, self.n);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{}\"];", v.class);
        }
        for e in &self.edges {
            let [a, b] = e.ends;
            let _ = write!(
                out,
                "  v{} -- v{} [label=\"{}\", dir=both, arrowtail={}, arrowhead={}",
                a.vertex,
                b.vertex,
                e.class,
                marker(a.ty),
                marker(b.ty)
            );
            if e.is_loop() {
                out.push_str(", multiplicity=2");
            }
            out.push_str("];\n");
        }
        out.push_str("}\n");
        out
    }
}

/// Closed form for the number of odd-degree vertices of the unoriented
/// graph, by the parities of `k` and `n`.
pub fn ov_formula(k: u64, n: usize) -> Result<u128> {
    if k < 2 || n < 2 {
        return Err(Error::InvalidParameters(format!("odd-vertex formula needs k, n >= 2, got k={k}, n={n}")));
    }
    let pow = |e: usize| checked_pow(k, e).ok_or_else(|| Error::overflow(format!("{k}^{e}")));
    let k128 = u128::from(k);
    let value = match (n.is_multiple_of(2), k.is_multiple_of(2)) {
        (true, true) => pow(n / 2)?,
        (false, true) => pow(n.div_ceil(2))? - k128 * k128 + k128,
        (true, false) => 2 * (pow(n / 2)? - k128),
        (false, false) => pow(n.div_ceil(2))? + pow((n - 1) / 2)? - k128 * k128 - k128,
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(s: &str, k: u32) -> PairClass {
        PairClass::parse(s, k).unwrap()
    }

    #[test]
    fn directed_sizes() {
        let g = build_directed(2, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 8));
        let e = Word::parse("101", 2).unwrap().value().unwrap();
        assert_eq!(g.vertex_word(g.tail(e)).to_string(), "10");
        assert_eq!(g.vertex_word(g.head(e)).to_string(), "01");
        let g = build_directed(2, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 4));
        let g = build_directed(3, 3).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (9, 27));
        for v in 0..g.vertex_count() {
            assert!(g.out_edges(v).all(|e| g.tail(e) == v));
            assert!(g.in_edges(v).all(|e| g.head(e) == v));
            assert_eq!(g.out_edges(v).count(), 3);
        }
    }

    #[test]
    fn size_cap_and_parameters() {
        assert!(matches!(build_unoriented_with_cap(2, 10, 512), Err(Error::SizeCap { .. })));
        assert!(build_unoriented_with_cap(2, 9, 512).is_ok());
        assert!(matches!(build_directed(2, 1), Err(Error::InvalidParameters(_))));
        assert!(matches!(build_directed(0, 3), Err(Error::EmptyAlphabet)));
        assert!(matches!(build_directed(10, 40), Err(Error::Overflow(_))));
    }

    #[test]
    fn unoriented_binary_three() {
        let g = build_unoriented(2, 3).unwrap();
        let labels: Vec<_> = g.vertices().iter().map(|v| v.class.to_string()).collect();
        assert_eq!(labels, ["[00]", "[10]", "[11]"]);
        assert_eq!(g.edge_count(), 6);
        let ten = class("10", 2);
        let loops: Vec<_> = g
            .edges()
            .iter()
            .filter(|e| e.is_loop() && g.vertex(e.ends[0].vertex).class == ten)
            .map(|e| e.class.to_string())
            .collect();
        assert_eq!(loops, ["[010]", "[101]"]);
    }

    #[test]
    fn unoriented_sizes() {
        let g = build_unoriented(2, 4).unwrap();
        let labels: Vec<_> = g.vertices().iter().map(|v| v.class.to_string()).collect();
        assert_eq!(labels, ["[000]", "[010]", "[100]", "[101]", "[110]", "[111]"]);
        assert_eq!(g.edge_count(), 10);
        let g = build_unoriented(2, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 3));
    }

    #[test]
    fn incidence_types_at_ten() {
        let g = build_unoriented(2, 3).unwrap();
        let types = g.incidence_types(&class("10", 2)).unwrap();
        let count = |ty| types.iter().filter(|(_, t)| *t == ty).count();
        assert_eq!((count(IncidenceType::TypeI), count(IncidenceType::TypeII)), (3, 3));
        let of = |edge: &str| -> Vec<IncidenceType> {
            types.iter().filter(|(c, _)| c.to_string() == edge).map(|(_, t)| *t).collect()
        };
        assert_eq!(of("[101]"), [IncidenceType::TypeI, IncidenceType::TypeI]);
        assert_eq!(of("[010]"), [IncidenceType::TypeII, IncidenceType::TypeII]);
        assert_eq!(of("[110]"), [IncidenceType::TypeII]);

        let at_eleven = g.incidence_types(&class("11", 2)).unwrap();
        assert!(at_eleven.iter().all(|(_, t)| *t == IncidenceType::Both));
    }

    #[test]
    fn palindromic_vertex_is_all_both() {
        let g = build_unoriented(2, 4).unwrap();
        let types = g.incidence_types(&class("010", 2)).unwrap();
        assert!(!types.is_empty());
        assert!(types.iter().all(|(_, t)| *t == IncidenceType::Both));
    }

    #[test]
    fn unknown_vertex() {
        let g = build_unoriented(2, 3).unwrap();
        assert!(matches!(g.incidence_types(&class("101", 2)), Err(Error::UnknownVertex(_))));
        assert!(matches!(g.degree(&class("2", 3)), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn degrees_and_odd_vertices() {
        let g = build_unoriented(2, 4).unwrap();
        let odd: Vec<_> = g.odd_vertices().iter().map(|c| c.to_string()).collect();
        assert_eq!(odd, ["[000]", "[100]", "[110]", "[111]"]);
        let g = build_unoriented(2, 3).unwrap();
        assert_eq!(g.degree(&class("10", 2)).unwrap(), 6);
        assert!(build_unoriented(3, 3).unwrap().odd_vertices().is_empty());
    }

    #[test]
    fn ov_formula_values() {
        assert_eq!(ov_formula(2, 5).unwrap(), 6);
        assert_eq!(ov_formula(2, 4).unwrap(), 4);
        assert_eq!(ov_formula(3, 4).unwrap(), 12);
        assert_eq!(ov_formula(3, 3).unwrap(), 0);
        assert!(ov_formula(1, 3).is_err());
    }

    #[test]
    fn loop_categories() {
        let g = build_unoriented(2, 5).unwrap();
        assert_eq!(g.loop_category(&class("1001", 2)).unwrap(), 0);
        assert_eq!(g.loop_category(&class("1101", 2)).unwrap(), 1);
        assert_eq!(g.loop_category(&class("1010", 2)).unwrap(), 2);
    }

    #[test]
    fn edge_lookup() {
        let g = build_unoriented(2, 4).unwrap();
        let i = g.edge_index(&Word::parse("0011", 2).unwrap()).unwrap();
        assert_eq!(g.edge(i).class.to_string(), "[1100]");
        assert!(g.edge_index(&Word::parse("001", 2).unwrap()).is_err());
    }

    #[test]
    fn dot_export() {
        let dot = build_unoriented(2, 3).unwrap().to_dot();
        assert!(dot.starts_with("graph uBg_2_3 {"));
        assert_eq!(dot.lines().filter(|l| l.contains("[label=\"[") && !l.contains("--")).count(), 3);
        assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 6);
        assert_eq!(dot.matches("multiplicity=2").count(), 4);
        assert!(dot.contains("v1 -- v0 [label=\"[100]\", dir=both, arrowtail=normal, arrowhead=odot]"));
    }

    #[test]
    fn single_symbol_alphabet() {
        let g = build_unoriented(1, 4).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 1));
        assert!(g.edge(0).is_loop());
    }
}
