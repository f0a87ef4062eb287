//! Alternating Eulerian paths.
//!
//! A walk through the unoriented graph spells a word only if it enters every
//! non-palindromic vertex on one incidence type and leaves on the other. This
//! module checks when such a walk can cover every edge, balances the types at
//! palindromic vertices, and finds the walk with a modified Hierholzer
//! algorithm.

use crate::error::{Error, Result};
use crate::graph::{DGraph, EdgeEnd, IncidenceType, UGraph};
use crate::words::{PairClass, Word};

/// Whether a covering word of length `(k^n + k^ceil(n/2) + 2n - 2) / 2`
/// exists. True for the trivial cases `k = 1` or `n = 1`; otherwise exactly
/// when `k` is two or odd and `n <= 3`.
pub fn optimal_exists(k: u64, n: u64) -> bool {
    k == 1 || n == 1 || ((k == 2 || k % 2 == 1) && n <= 3)
}

/// Outcome of checking the three existence conditions on an unoriented graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub odd_vertices: Vec<PairClass>,
    /// Even-degree non-palindromic vertices whose type counts differ.
    pub unbalanced_even: Vec<PairClass>,
    /// Odd-degree non-palindromic vertices whose type counts differ by more
    /// than one.
    pub unbalanced_odd: Vec<PairClass>,
}

impl ConditionReport {
    /// Zero or two odd-degree vertices.
    pub fn condition1(&self) -> bool {
        matches!(self.odd_vertices.len(), 0 | 2)
    }

    pub fn condition2(&self) -> bool {
        self.unbalanced_even.is_empty()
    }

    pub fn condition3(&self) -> bool {
        self.unbalanced_odd.is_empty()
    }

    pub fn holds(&self) -> bool {
        self.condition1() && self.condition2() && self.condition3()
    }
}

pub fn check_conditions(g: &UGraph) -> ConditionReport {
    let mut report =
        ConditionReport { odd_vertices: g.odd_vertices(), unbalanced_even: Vec::new(), unbalanced_odd: Vec::new() };
    for (i, v) in g.vertices().iter().enumerate() {
        if v.class.is_palindrome() {
            continue;
        }
        let (one, two, _) = g.type_counts(i);
        if v.degree() % 2 == 0 && one != two {
            report.unbalanced_even.push(v.class.clone());
        } else if v.degree() % 2 == 1 && one.abs_diff(two) != 1 {
            report.unbalanced_odd.push(v.class.clone());
        }
    }
    report
}

/// Identity of an edge of a [`Multigraph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeLabel {
    /// Index of an edge of the underlying unoriented graph.
    Class(usize),
    /// The edge that closes a two-odd-vertex graph into an Eulerian one.
    Virtual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiEdge {
    pub label: EdgeLabel,
    /// 0 for the original edge, 1.. for parallel duplicates.
    pub copy: usize,
    pub ends: [EdgeEnd; 2],
}

/// The unoriented graph plus parallel duplicates and at most one virtual
/// edge.
#[derive(Clone, Debug)]
pub struct Multigraph<'g> {
    graph: &'g UGraph,
    edges: Vec<MultiEdge>,
    /// `(edge id, end)` per vertex.
    incidences: Vec<Vec<(usize, usize)>>,
    copies: Vec<usize>,
}

impl<'g> Multigraph<'g> {
    pub fn new(graph: &'g UGraph) -> Multigraph<'g> {
        let mut m = Multigraph {
            graph,
            edges: Vec::with_capacity(graph.edge_count()),
            incidences: vec![Vec::new(); graph.vertex_count()],
            copies: vec![0; graph.edge_count()],
        };
        for (i, e) in graph.edges().iter().enumerate() {
            m.push(MultiEdge { label: EdgeLabel::Class(i), copy: 0, ends: e.ends });
        }
        m
    }

    fn push(&mut self, edge: MultiEdge) -> usize {
        let id = self.edges.len();
        for (end, e) in edge.ends.iter().enumerate() {
            self.incidences[e.vertex].push((id, end));
        }
        self.edges.push(edge);
        id
    }

    pub fn graph(&self) -> &'g UGraph {
        self.graph
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    /// Adds a parallel copy of edge `index` of the underlying graph. The copy
    /// has the same ends and incidence types as the original.
    pub fn add_duplicate(&mut self, index: usize) -> usize {
        self.copies[index] += 1;
        let copy = self.copies[index];
        let ends = self.graph.edge(index).ends;
        self.push(MultiEdge { label: EdgeLabel::Class(index), copy, ends })
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.incidences[vertex].len()
    }

    pub fn odd_vertices(&self) -> Vec<usize> {
        (0..self.incidences.len()).filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    pub fn virtual_edge(&self) -> Option<usize> {
        self.edges.iter().position(|e| e.label == EdgeLabel::Virtual)
    }

    /// `(#TypeI, #TypeII, #Both)` at a vertex, before any assignment.
    pub fn type_counts(&self, vertex: usize) -> (usize, usize, usize) {
        let mut counts = (0, 0, 0);
        for &(e, end) in &self.incidences[vertex] {
            match self.edges[e].ends[end].ty {
                IncidenceType::TypeI => counts.0 += 1,
                IncidenceType::TypeII => counts.1 += 1,
                IncidenceType::Both => counts.2 += 1,
            }
        }
        counts
    }

    /// The type a new end at `vertex` needs so that its counts even out.
    fn missing_type(&self, vertex: usize) -> Result<IncidenceType> {
        if self.graph.vertex(vertex).class.is_palindrome() {
            return Ok(IncidenceType::Both);
        }
        let (one, two, _) = self.type_counts(vertex);
        match one as isize - two as isize {
            1 => Ok(IncidenceType::TypeII),
            -1 => Ok(IncidenceType::TypeI),
            _ => Err(Error::ConditionFailed {
                condition: 3,
                detail: format!("{} has {one} type I and {two} type II incidences", self.graph.vertex(vertex).class),
            }),
        }
    }

    /// Joins the two odd-degree vertices with a virtual edge whose ends carry
    /// the type each endpoint is short of. Returns `None` when every degree is
    /// already even.
    pub fn close_odd_pair(&mut self) -> Result<Option<usize>> {
        let odd = self.odd_vertices();
        match odd.as_slice() {
            [] => Ok(None),
            &[a, b] => {
                if self.virtual_edge().is_some() {
                    return Err(Error::Internal("graph already has a virtual edge".into()));
                }
                let ends = [
                    EdgeEnd { vertex: a, ty: self.missing_type(a)? },
                    EdgeEnd { vertex: b, ty: self.missing_type(b)? },
                ];
                Ok(Some(self.push(MultiEdge { label: EdgeLabel::Virtual, copy: 0, ends })))
            }
            _ => Err(Error::ConditionFailed { condition: 1, detail: format!("{} odd-degree vertices", odd.len()) }),
        }
    }
}

/// Concrete type of every edge end of a multigraph, with the ends at
/// palindromic vertices resolved to type I or type II.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeAssignment {
    types: Vec<[IncidenceType; 2]>,
}

impl TypeAssignment {
    pub fn get(&self, edge: usize, end: usize) -> IncidenceType {
        self.types[edge][end]
    }

    /// `(#TypeI, #TypeII)` at a vertex under this assignment.
    pub fn counts(&self, m: &Multigraph<'_>, vertex: usize) -> (usize, usize) {
        m.incidences[vertex].iter().fold((0, 0), |(one, two), &(e, end)| match self.get(e, end) {
            IncidenceType::TypeI => (one + 1, two),
            _ => (one, two + 1),
        })
    }

    /// Even-degree vertices are balanced and odd-degree vertices are off by
    /// exactly one.
    pub fn is_balanced(&self, m: &Multigraph<'_>) -> bool {
        self.types.len() == m.edges.len()
            && (0..m.incidences.len()).all(|v| {
                let (one, two) = self.counts(m, v);
                one.abs_diff(two) == m.degree(v) % 2
            })
    }
}

/// Splits the incidences at every palindromic vertex into equal numbers of
/// type I and type II. Loops take one end of each type; the remaining ends
/// alternate in edge order.
pub fn balance_palindromic_types(m: &Multigraph<'_>) -> Result<TypeAssignment> {
    let mut types: Vec<[IncidenceType; 2]> = m.edges.iter().map(|e| [e.ends[0].ty, e.ends[1].ty]).collect();
    let odd_count = m.odd_vertices().len();
    for (v, incidences) in m.incidences.iter().enumerate() {
        if !m.graph.vertex(v).class.is_palindrome() {
            continue;
        }
        if incidences.len() % 2 == 1 && odd_count != 2 {
            return Err(Error::Unbalanceable {
                vertex: m.graph.vertex(v).class.to_string(),
                detail: format!("odd degree {} with {odd_count} odd vertices in the graph", incidences.len()),
            });
        }
        let mut plain = Vec::new();
        for &(e, end) in incidences {
            let edge = &m.edges[e];
            if edge.ends[0].vertex == edge.ends[1].vertex {
                if end == 0 {
                    types[e] = [IncidenceType::TypeI, IncidenceType::TypeII];
                }
            } else {
                plain.push((edge.label, edge.copy, e, end));
            }
        }
        plain.sort();
        for (i, &(_, _, e, end)) in plain.iter().enumerate() {
            types[e][end] = if i % 2 == 0 { IncidenceType::TypeI } else { IncidenceType::TypeII };
        }
    }
    let assignment = TypeAssignment { types };
    if !assignment.is_balanced(m) {
        return Err(Error::Unbalanceable {
            vertex: "graph".into(),
            detail: "non-palindromic vertices are not balanced".into(),
        });
    }
    Ok(assignment)
}

/// One traversal of an alternating path: the edge walked and the word read
/// while walking it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStep {
    pub edge: PairClass,
    pub copy: usize,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingPath {
    k: u32,
    n: usize,
    steps: Vec<PathStep>,
}

impl AlternatingPath {
    /// A path given by the words it reads.
    pub fn from_words(k: u32, n: usize, words: Vec<Word>) -> Result<AlternatingPath> {
        let steps = words
            .into_iter()
            .map(|word| {
                if word.k() != k || word.len() != n {
                    return Err(Error::InvalidParameters(format!("{word} is not a length-{n} word over {k} symbols")));
                }
                Ok(PathStep { edge: word.canonicalize(), copy: 0, word })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlternatingPath { k, n, steps })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Vertex the path starts from.
    pub fn start(&self) -> Option<PairClass> {
        self.steps.first().and_then(|s| s.word.prefix()).map(|p| p.canonicalize())
    }

    /// The words read, one per step.
    pub fn to_strings(&self) -> Vec<String> {
        self.steps.iter().map(|s| s.word.to_string()).collect()
    }

    /// The same edges walked backwards.
    pub fn reversed(&self) -> AlternatingPath {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| PathStep { edge: s.edge.clone(), copy: s.copy, word: s.word.reflect() })
            .collect();
        AlternatingPath { k: self.k, n: self.n, steps }
    }
}

/// An edge index and one of its two ends.
type EdgeSide = (usize, usize);

/// Finds an alternating Eulerian circuit of `m`, or an alternating Eulerian
/// path when `m` carries a virtual edge.
///
/// Every vertex must have even degree and, under `assignment`, as many type I
/// as type II incidences. The virtual edge, if present, is rotated to the end
/// of the circuit and dropped, and the resulting path is oriented to start at
/// the endpoint with the smaller representative. Ties between admissible
/// edges go to the smallest edge class.
pub fn alternating_hierholzer(m: &Multigraph<'_>, assignment: &TypeAssignment) -> Result<AlternatingPath> {
    let g = m.graph;
    let odd = m.odd_vertices();
    if !odd.is_empty() {
        return Err(Error::ConditionFailed {
            condition: 1,
            detail: format!("{} odd-degree vertices remain; close the odd pair first", odd.len()),
        });
    }
    if assignment.types.len() != m.edges.len() {
        return Err(Error::Internal("type assignment does not match the graph".into()));
    }
    for v in 0..g.vertex_count() {
        let (one, two) = assignment.counts(m, v);
        if one != two {
            let class = &g.vertex(v).class;
            return Err(Error::ConditionFailed {
                condition: if class.is_palindrome() || m.degree(v).is_multiple_of(2) { 2 } else { 3 },
                detail: format!("{class} has {one} type I and {two} type II incidences"),
            });
        }
    }
    if m.edges.is_empty() {
        return Ok(AlternatingPath { k: g.k(), n: g.n(), steps: Vec::new() });
    }

    let slot = |ty: IncidenceType| usize::from(ty != IncidenceType::TypeI);
    // ends at each vertex, split by type and sorted by edge label
    let mut lists: Vec<[Vec<(usize, usize)>; 2]> = vec![[Vec::new(), Vec::new()]; g.vertex_count()];
    for (v, incidences) in m.incidences.iter().enumerate() {
        for &(e, end) in incidences {
            lists[v][slot(assignment.get(e, end))].push((e, end));
        }
        for list in &mut lists[v] {
            list.sort_by_key(|&(e, end)| (m.edges[e].label, m.edges[e].copy, end));
        }
    }
    let mut cursor = vec![[0usize; 2]; g.vertex_count()];
    let mut used = vec![false; m.edges.len()];
    let mut next_unused = |v: usize, s: usize, used: &[bool]| -> Option<(usize, usize)> {
        let list = &lists[v][s];
        while cursor[v][s] < list.len() && used[list[cursor[v][s]].0] {
            cursor[v][s] += 1;
        }
        list.get(cursor[v][s]).copied()
    };

    let virtual_edge = m.virtual_edge();
    let start = match virtual_edge {
        Some(e) => m.edges[e].ends[0].vertex.min(m.edges[e].ends[1].vertex),
        None => (0..g.vertex_count()).find(|&v| m.degree(v) > 0).unwrap_or(0),
    };
    let first_leave = [0, 1]
        .into_iter()
        .filter_map(|s| lists[start][s].first().map(|&(e, end)| ((m.edges[e].label, m.edges[e].copy, end), s)))
        .min()
        .map(|(_, s)| s)
        .ok_or_else(|| Error::Internal("start vertex has no edges".into()))?;

    // (vertex, slot of the arrival type, edge and end it was left through)
    let mut stack: Vec<(usize, usize, Option<EdgeSide>)> = vec![(start, 1 - first_leave, None)];
    let mut circuit = Vec::with_capacity(m.edges.len());
    while let Some(&(v, arrival, via)) = stack.last() {
        match next_unused(v, 1 - arrival, &used) {
            Some((e, end)) => {
                used[e] = true;
                let far = 1 - end;
                let to = m.edges[e].ends[far].vertex;
                stack.push((to, slot(assignment.get(e, far)), Some((e, end))));
            }
            None => {
                stack.pop();
                circuit.extend(via);
            }
        }
    }
    circuit.reverse();
    if circuit.len() != m.edges.len() {
        return Err(Error::Internal(format!(
            "walk covered {} of {} edges; the graph is not connected",
            circuit.len(),
            m.edges.len()
        )));
    }

    if let Some(ve) = virtual_edge {
        let p = circuit.iter().position(|&(e, _)| e == ve).expect("virtual edge is in the circuit");
        circuit.rotate_left(p + 1);
        circuit.pop();
        let first = circuit.first().map(|&(e, end)| m.edges[e].ends[end].vertex);
        if first != Some(start) {
            circuit.reverse();
            for step in &mut circuit {
                step.1 = 1 - step.1;
            }
        }
    }

    let radix = g.edge_radix();
    let steps = circuit
        .into_iter()
        .map(|(e, end)| {
            let EdgeLabel::Class(index) = m.edges[e].label else { unreachable!("virtual edge removed above") };
            let edge = g.edge(index);
            let code = if end == 0 { edge.code() } else { radix.reflect(edge.code()) };
            PathStep { edge: edge.class.clone(), copy: m.edges[e].copy, word: radix.word(code) }
        })
        .collect();
    Ok(AlternatingPath { k: g.k(), n: g.n(), steps })
}

/// Closes the odd pair if there is one, balances the palindromic vertices and
/// runs [`alternating_hierholzer`].
pub fn alternating_path(mut m: Multigraph<'_>) -> Result<AlternatingPath> {
    m.close_odd_pair()?;
    let assignment = balance_palindromic_types(&m)?;
    alternating_hierholzer(&m, &assignment)
}

/// Checks that each word read ends with the `n-1` symbols the next one
/// starts with.
pub fn check_continuity(path: &AlternatingPath) -> Result<()> {
    for (i, pair) in path.steps.windows(2).enumerate() {
        let (a, b) = (&pair[0].word, &pair[1].word);
        if a.symbols()[1..] != b.symbols()[..b.len() - 1] {
            return Err(Error::Discontinuous { step: i + 1, detail: format!("{b} cannot follow {a}") });
        }
    }
    Ok(())
}

/// Checks that consecutive steps meet at a common vertex and, at every
/// non-palindromic vertex, arrive and leave on opposite incidence types.
///
/// The types come from the incidence records of `g`; this does not compare
/// words, so it is independent of [`check_continuity`].
pub fn check_alternation(g: &UGraph, path: &AlternatingPath) -> Result<()> {
    // end of the edge a walk leaves through when it reads `word`
    let leave_end = |word: &Word| -> Result<(usize, usize)> {
        let e = g.edge_index(word)?;
        Ok((e, usize::from(*word != *g.edge(e).class.rep())))
    };
    for (i, pair) in path.steps.windows(2).enumerate() {
        let (e_in, leave_in) = leave_end(&pair[0].word)?;
        let arrive = g.edge(e_in).ends[1 - leave_in];
        let (e_out, leave_out) = leave_end(&pair[1].word)?;
        let depart = g.edge(e_out).ends[leave_out];
        if arrive.vertex != depart.vertex {
            return Err(Error::Discontinuous {
                step: i + 1,
                detail: format!(
                    "{} ends at {} but {} leaves from {}",
                    pair[0].edge,
                    g.vertex(arrive.vertex).class,
                    pair[1].edge,
                    g.vertex(depart.vertex).class
                ),
            });
        }
        if !g.vertex(arrive.vertex).class.is_palindrome() && arrive.ty == depart.ty {
            return Err(Error::Discontinuous {
                step: i + 1,
                detail: format!(
                    "enters {} on {:?} via {} and leaves on {:?} via {}",
                    g.vertex(arrive.vertex).class,
                    arrive.ty,
                    pair[0].edge,
                    depart.ty,
                    pair[1].edge
                ),
            });
        }
    }
    Ok(())
}

/// Checks that the path walks every edge of `g` once, plus once more for
/// each entry of `duplicates`.
pub fn check_eulerian(g: &UGraph, path: &AlternatingPath, duplicates: &[PairClass]) -> Result<()> {
    let mut remaining = vec![1isize; g.edge_count()];
    for d in duplicates {
        remaining[g.edge_index(d.rep())?] += 1;
    }
    for step in &path.steps {
        remaining[g.edge_index(&step.word)?] -= 1;
    }
    match remaining.iter().position(|&r| r != 0) {
        None => Ok(()),
        Some(e) => {
            Err(Error::NotEulerian(format!("edge {} is walked {} times too few", g.edge(e).class, remaining[e])))
        }
    }
}

/// An Eulerian circuit of the directed graph, starting at the all-zero
/// vertex and taking the smallest appended symbol first.
pub fn directed_euler(g: &DGraph) -> Vec<Word> {
    let k = u64::from(g.k());
    let mut next = vec![0u64; g.vertex_count() as usize];
    let mut stack: Vec<(u64, Option<u64>)> = vec![(0, None)];
    let mut circuit = Vec::with_capacity(g.edge_count() as usize);
    while let Some(&(v, via)) = stack.last() {
        let slot = &mut next[v as usize];
        if *slot < k {
            let edge = v * k + *slot;
            *slot += 1;
            stack.push((g.head(edge), Some(edge)));
        } else {
            stack.pop();
            circuit.extend(via);
        }
    }
    circuit.reverse();
    circuit.into_iter().map(|e| g.edge_word(e)).collect()
}
