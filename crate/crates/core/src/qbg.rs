//! Quantum Bruhat graphs: the full graph on `W`, the parabolic graph on
//! `W^Lambda`, degree-filtered subgraphs, reflection orders, shortest and
//! label-monotone paths, and tilted Bruhat maxima.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{CorootVec, ParabolicSubset, RootSystem, RootVec};
use crate::weyl::{ElemId, WeylElem, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeKind {
    Bruhat,
    Quantum,
}

impl EdgeKind {
    pub fn letter(self) -> char {
        match self {
            EdgeKind::Bruhat => 'B',
            EdgeKind::Quantum => 'Q',
        }
    }
}

/// Edge `source -> source * s_label` (projected to minimal representatives
/// in the parabolic graph). `label` indexes the positive roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QbgEdge {
    pub source: ElemId,
    pub target: ElemId,
    pub label: usize,
    pub kind: EdgeKind,
}

/// Keeps the edges of `QBG_{a varpi_i}`: label `beta` survives iff
/// `a <varpi_i, beta^vee>` is an integer, with `a = num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeFilter {
    pub i: usize,
    pub num: i64,
    pub den: i64,
}

impl DegreeFilter {
    pub fn new(i: usize, num: i64, den: i64) -> Result<Self> {
        if den <= 0 || num < 0 || num >= den {
            return Err(Error::Precondition(format!("need 0 <= a < 1, got {num}/{den}")));
        }
        Ok(DegreeFilter { i, num, den })
    }

    pub fn admits(&self, rs: &RootSystem, label: usize) -> bool {
        (self.num * rs.coroot_by_index(label)[self.i]) % self.den == 0
    }
}

/// `QBG(W^Lambda)`; with `Lambda` empty this is the full graph on `W`.
#[derive(Debug, Clone)]
pub struct Qbg {
    lambda: ParabolicSubset,
    vertices: Vec<ElemId>,
    slot: Vec<u32>,
    adj: Vec<Vec<QbgEdge>>,
}

impl Qbg {
    pub fn build(group: &WeylGroup, lambda: ParabolicSubset) -> Result<Self> {
        let rs = group.root_system();
        if lambda.rank() != rs.rank() {
            return Err(Error::DimensionMismatch { expected: rs.rank(), got: lambda.rank() });
        }
        let vertices = group.min_reps(lambda);
        let mut slot = vec![u32::MAX; group.order()];
        for (k, v) in vertices.iter().enumerate() {
            slot[v.idx()] = k as u32;
        }
        let labels = rs.complement_roots(lambda);
        // 2(rho - rho_Lambda) in simple-root coordinates
        let mut shift = RootVec::zero(rs.rank());
        for &b in &labels {
            shift += rs.root(b);
        }
        let shift_pairing: Vec<i64> = labels
            .iter()
            .map(|&b| rs.root_coroot_pairing(&shift, rs.coroot_by_index(b)))
            .collect();
        let mut adj = Vec::with_capacity(vertices.len());
        for &x in &vertices {
            let lx = group.length(x) as i64;
            let mut out = Vec::new();
            for (k, &b) in labels.iter().enumerate() {
                let y = group.min_rep(group.mul_reflection(x, b), lambda);
                let ly = group.length(y) as i64;
                let kind = if ly == lx + 1 {
                    EdgeKind::Bruhat
                } else if ly == lx + 1 - shift_pairing[k] {
                    EdgeKind::Quantum
                } else {
                    continue;
                };
                out.push(QbgEdge { source: x, target: y, label: b, kind });
            }
            adj.push(out);
        }
        Ok(Qbg { lambda, vertices, slot, adj })
    }

    pub fn lambda(&self) -> ParabolicSubset {
        self.lambda
    }

    pub fn vertices(&self) -> &[ElemId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, w: ElemId) -> bool {
        self.slot.get(w.idx()).is_some_and(|&s| s != u32::MAX)
    }

    /// Position of a vertex in [`Qbg::vertices`].
    pub fn position(&self, w: ElemId) -> Option<usize> {
        self.slot.get(w.idx()).filter(|&&s| s != u32::MAX).map(|&s| s as usize)
    }

    pub fn out_edges(&self, w: ElemId) -> &[QbgEdge] {
        match self.position(w) {
            Some(k) => &self.adj[k],
            None => &[],
        }
    }

    /// The edge leaving `w` with the given label, if any.
    pub fn edge(&self, w: ElemId, label: usize) -> Option<&QbgEdge> {
        self.out_edges(w).iter().find(|e| e.label == label)
    }

    pub fn edges(&self) -> impl Iterator<Item = &QbgEdge> + '_ {
        self.adj.iter().flatten()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn filtered_edges(&self, rs: &RootSystem, filter: Option<DegreeFilter>) -> Vec<QbgEdge> {
        self.edges().filter(|e| filter.is_none_or(|f| f.admits(rs, e.label))).copied().collect()
    }

    /// Reachability in the (filtered) graph, as one bitset row per vertex
    /// position. Every vertex reaches itself.
    pub fn reachability(
        &self,
        rs: &RootSystem,
        filter: Option<DegreeFilter>,
        bruhat_only: bool,
    ) -> Vec<Vec<u64>> {
        let n = self.vertices.len();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![vec![0u64; words]; n];
        for (s, row) in rows.iter_mut().enumerate() {
            let mut stack = vec![s];
            row[s / 64] |= 1 << (s % 64);
            while let Some(u) = stack.pop() {
                for e in &self.adj[u] {
                    if bruhat_only && e.kind != EdgeKind::Bruhat {
                        continue;
                    }
                    if filter.is_some_and(|f| !f.admits(rs, e.label)) {
                        continue;
                    }
                    let t = self.slot[e.target.idx()] as usize;
                    if row[t / 64] >> (t % 64) & 1 == 0 {
                        row[t / 64] |= 1 << (t % 64);
                        stack.push(t);
                    }
                }
            }
        }
        rows
    }

    /// Graphviz rendering: solid edges are Bruhat, dashed are quantum.
    pub fn to_dot(&self, group: &WeylGroup, filter: Option<DegreeFilter>) -> String {
        let rs = group.root_system();
        let mut s = String::new();
        let _ = writeln!(s, "digraph qbg {{");
        let _ = writeln!(s, "  rankdir=BT;");
        for &v in &self.vertices {
            let _ = writeln!(s, "  \"{}\";", group.word_string(v));
        }
        for e in self.filtered_edges(rs, filter) {
            let style = match e.kind {
                EdgeKind::Bruhat => "solid",
                EdgeKind::Quantum => "dashed",
            };
            let _ = writeln!(
                s,
                "  \"{}\" -> \"{}\" [label=\"{}\", style={style}];",
                group.word_string(e.source),
                group.word_string(e.target),
                rs.root(e.label)
            );
        }
        s.push_str("}\n");
        s
    }

    /// One edge per line: source, target, kind, label in root coordinates.
    pub fn to_tsv(&self, group: &WeylGroup, filter: Option<DegreeFilter>) -> String {
        let rs = group.root_system();
        let mut s = String::from("source\ttarget\tkind\tlabel\n");
        for e in self.filtered_edges(rs, filter) {
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}",
                group.word_string(e.source),
                group.word_string(e.target),
                e.kind.letter(),
                rs.root(e.label)
            );
        }
        s
    }

    pub fn to_json(&self, group: &WeylGroup, filter: Option<DegreeFilter>) -> serde_json::Value {
        let rs = group.root_system();
        let edges: Vec<serde_json::Value> = self
            .filtered_edges(rs, filter)
            .iter()
            .map(|e| {
                serde_json::json!({
                    "source": group.word_string(e.source),
                    "target": group.word_string(e.target),
                    "kind": e.kind,
                    "label": rs.root(e.label),
                })
            })
            .collect();
        let vertices: Vec<String> = self.vertices.iter().map(|&v| group.word_string(v)).collect();
        serde_json::json!({ "vertices": vertices, "edges": edges })
    }
}

/// How reduced words are chosen when building a reflection order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderVariant {
    SmallestFirst,
    LargestFirst,
}

/// Total order on the positive roots coming from a reduced word of `w_0`
/// whose prefix is a reduced word of `w_{0,Lambda}`. The roots of
/// `Lambda` therefore come first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionOrder {
    split: ParabolicSubset,
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl ReflectionOrder {
    pub fn new(rs: &RootSystem, split: ParabolicSubset, variant: OrderVariant) -> Result<Self> {
        if split.rank() != rs.rank() {
            return Err(Error::DimensionMismatch { expected: rs.rank(), got: split.rank() });
        }
        let mut cur = WeylElem::identity(rs);
        let mut seq = Vec::with_capacity(rs.num_positive_roots());
        for phase in [split, ParabolicSubset::full(rs.rank())] {
            loop {
                let mut ascents = phase.nodes().into_iter().filter(|&j| cur.column(j).is_positive());
                let next = match variant {
                    OrderVariant::SmallestFirst => ascents.next(),
                    OrderVariant::LargestFirst => ascents.next_back(),
                };
                let Some(j) = next else { break };
                seq.push(rs.expect_positive_root(&cur.column(j))?);
                cur = cur.times_simple(rs, j);
            }
        }
        if seq.len() != rs.num_positive_roots() {
            return Err(Error::Internal("reflection order does not cover all roots".into()));
        }
        let mut pos = vec![0; seq.len()];
        for (k, &b) in seq.iter().enumerate() {
            pos[b] = k;
        }
        Ok(ReflectionOrder { split, seq, pos })
    }

    pub fn split(&self) -> ParabolicSubset {
        self.split
    }

    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    pub fn position(&self, label: usize) -> usize {
        self.pos[label]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.pos[a] < self.pos[b]
    }

    /// Whenever `a + b` is a root it lies strictly between `a` and `b`.
    pub fn is_convex(&self, rs: &RootSystem) -> bool {
        let m = rs.num_positive_roots();
        for a in 0..m {
            for b in 0..m {
                if !self.less(a, b) {
                    continue;
                }
                if let Some(c) = rs.root_index(&(rs.root(a) + rs.root(b))) {
                    if !(self.less(a, c) && self.less(c, b)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Roots of `Delta_Lambda` precede all other positive roots.
    pub fn respects_split(&self, rs: &RootSystem) -> bool {
        let inside = self.seq.iter().take_while(|&&b| rs.root(b).supported_in(self.split)).count();
        self.seq[inside..].iter().all(|&b| !rs.root(b).supported_in(self.split))
    }
}

/// A directed path in a quantum Bruhat graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DirectedPath {
    pub vertices: Vec<ElemId>,
    pub labels: Vec<usize>,
    pub kinds: Vec<EdgeKind>,
}

impl DirectedPath {
    pub fn trivial(w: ElemId) -> Self {
        DirectedPath { vertices: vec![w], labels: Vec::new(), kinds: Vec::new() }
    }

    pub fn start(&self) -> ElemId {
        self.vertices[0]
    }

    pub fn end(&self) -> ElemId {
        *self.vertices.last().expect("paths have a start vertex")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn push(&mut self, e: &QbgEdge) {
        debug_assert_eq!(e.source, self.end());
        self.vertices.push(e.target);
        self.labels.push(e.label);
        self.kinds.push(e.kind);
    }

    pub fn pop(&mut self) {
        if !self.labels.is_empty() {
            self.vertices.pop();
            self.labels.pop();
            self.kinds.pop();
        }
    }

    pub fn first_label(&self) -> Option<usize> {
        self.labels.first().copied()
    }

    pub fn last_label(&self) -> Option<usize> {
        self.labels.last().copied()
    }

    /// Sum of the coroots of the quantum edges.
    pub fn qwt(&self, rs: &RootSystem) -> CorootVec {
        let mut q = CorootVec::zero(rs.rank());
        for (&b, &k) in self.labels.iter().zip(&self.kinds) {
            if k == EdgeKind::Quantum {
                q += rs.coroot_by_index(b);
            }
        }
        q
    }

    pub fn is_label_increasing(&self, ord: &ReflectionOrder) -> bool {
        self.labels.windows(2).all(|w| ord.less(w[0], w[1]))
    }

    pub fn is_label_decreasing(&self, ord: &ReflectionOrder) -> bool {
        self.labels.windows(2).all(|w| ord.less(w[1], w[0]))
    }

    pub fn describe(&self, group: &WeylGroup) -> String {
        let rs = group.root_system();
        let mut s = group.word_string(self.start());
        for k in 0..self.labels.len() {
            let _ = write!(
                s,
                " -{}{}-> {}",
                self.kinds[k].letter(),
                rs.root(self.labels[k]),
                group.word_string(self.vertices[k + 1])
            );
        }
        s
    }

    pub fn to_json(&self, group: &WeylGroup) -> serde_json::Value {
        let rs = group.root_system();
        let vertices: Vec<String> = self.vertices.iter().map(|&v| group.word_string(v)).collect();
        let labels: Vec<&RootVec> = self.labels.iter().map(|&b| rs.root(b)).collect();
        serde_json::json!({ "vertices": vertices, "labels": labels, "kinds": self.kinds })
    }
}

/// Path queries on the full graph `QBG(W)`, with lazily computed
/// distances and quantum weights.
pub struct QuantumPaths {
    graph: Qbg,
    rev: Vec<Vec<u32>>,
    order: ReflectionOrder,
    dist_to: Vec<OnceLock<Vec<u16>>>,
    qwt_to: Vec<OnceLock<Vec<CorootVec>>>,
}

impl QuantumPaths {
    pub fn new(group: &WeylGroup) -> Result<Self> {
        let rs = group.root_system();
        let graph = Qbg::build(group, ParabolicSubset::empty(rs.rank()))?;
        let mut rev = vec![Vec::new(); group.order()];
        for e in graph.edges() {
            rev[e.target.idx()].push(e.source.0);
        }
        let order = ReflectionOrder::new(rs, ParabolicSubset::empty(rs.rank()), OrderVariant::SmallestFirst)?;
        Ok(QuantumPaths {
            graph,
            rev,
            order,
            dist_to: (0..group.order()).map(|_| OnceLock::new()).collect(),
            qwt_to: (0..group.order()).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn graph(&self) -> &Qbg {
        &self.graph
    }

    /// The reflection order used for quantum weights of shortest paths.
    pub fn default_order(&self) -> &ReflectionOrder {
        &self.order
    }

    fn dist_table(&self, w: ElemId) -> &Vec<u16> {
        self.dist_to[w.idx()].get_or_init(|| {
            let mut d = vec![u16::MAX; self.rev.len()];
            d[w.idx()] = 0;
            let mut queue = std::collections::VecDeque::from([w.0]);
            while let Some(u) = queue.pop_front() {
                for &s in &self.rev[u as usize] {
                    if d[s as usize] == u16::MAX {
                        d[s as usize] = d[u as usize] + 1;
                        queue.push_back(s);
                    }
                }
            }
            d
        })
    }

    /// Length of a shortest directed path `v => w`.
    pub fn dist(&self, v: ElemId, w: ElemId) -> u32 {
        self.dist_table(w)[v.idx()] as u32
    }

    fn monotone_dfs(
        &self,
        path: &mut DirectedPath,
        target: ElemId,
        dist: &[u16],
        ord: &ReflectionOrder,
        increasing: bool,
        last: Option<usize>,
    ) -> bool {
        let u = path.end();
        if u == target {
            return true;
        }
        let du = dist[u.idx()];
        for e in self.graph.out_edges(u) {
            if dist[e.target.idx()].wrapping_add(1) != du {
                continue;
            }
            let p = ord.position(e.label);
            if let Some(l) = last {
                if (increasing && p <= l) || (!increasing && p >= l) {
                    continue;
                }
            }
            path.push(e);
            if self.monotone_dfs(path, target, dist, ord, increasing, Some(p)) {
                return true;
            }
            path.pop();
        }
        false
    }

    fn monotone_path(&self, v: ElemId, w: ElemId, ord: &ReflectionOrder, increasing: bool) -> Result<DirectedPath> {
        let dist = self.dist_table(w);
        let mut path = DirectedPath::trivial(v);
        if self.monotone_dfs(&mut path, w, dist, ord, increasing, None) {
            Ok(path)
        } else {
            Err(Error::Internal(format!("no label-monotone shortest path {v} => {w}")))
        }
    }

    /// The label-increasing shortest path `v => w`.
    pub fn label_increasing_path(&self, v: ElemId, w: ElemId, ord: &ReflectionOrder) -> Result<DirectedPath> {
        self.monotone_path(v, w, ord, true)
    }

    /// The label-decreasing shortest path `v => w`.
    pub fn label_decreasing_path(&self, v: ElemId, w: ElemId, ord: &ReflectionOrder) -> Result<DirectedPath> {
        self.monotone_path(v, w, ord, false)
    }

    /// The label-increasing path `v => w` when all its labels avoid
    /// `Delta_Lambda`; `None` otherwise.
    pub fn label_increasing_path_outside(
        &self,
        rs: &RootSystem,
        v: ElemId,
        w: ElemId,
        ord: &ReflectionOrder,
        lambda: ParabolicSubset,
    ) -> Result<Option<DirectedPath>> {
        let p = self.label_increasing_path(v, w, ord)?;
        Ok(p.labels.iter().all(|&b| !rs.root(b).supported_in(lambda)).then_some(p))
    }

    /// `qwt(v => w)`, read off the label-increasing path.
    pub fn qwt_between(&self, rs: &RootSystem, v: ElemId, w: ElemId) -> CorootVec {
        self.qwt_to[w.idx()]
            .get_or_init(|| {
                (0..self.rev.len())
                    .map(|s| {
                        self.label_increasing_path(ElemId(s as u32), w, &self.order)
                            .expect("QBG(W) is strongly connected")
                            .qwt(rs)
                    })
                    .collect()
            })[v.idx()]
            .clone()
    }

    /// Every label-monotone path starting at `v`, of any length.
    pub fn all_monotone_paths_from(&self, v: ElemId, ord: &ReflectionOrder, increasing: bool) -> Vec<DirectedPath> {
        let mut out = Vec::new();
        let mut path = DirectedPath::trivial(v);
        self.collect_monotone(&mut path, ord, increasing, None, &mut |p| out.push(p.clone()));
        out
    }

    fn collect_monotone(
        &self,
        path: &mut DirectedPath,
        ord: &ReflectionOrder,
        increasing: bool,
        last: Option<usize>,
        sink: &mut dyn FnMut(&DirectedPath),
    ) {
        sink(path);
        for e in self.graph.out_edges(path.end()) {
            let p = ord.position(e.label);
            if let Some(l) = last {
                if (increasing && p <= l) || (!increasing && p >= l) {
                    continue;
                }
            }
            path.push(e);
            self.collect_monotone(path, ord, increasing, Some(p), sink);
            path.pop();
        }
    }

    /// All label-increasing paths from `w` whose labels avoid `Delta_Lambda`
    /// and, when a filter is given, lie in the filtered subgraph. The trivial
    /// path is included.
    pub fn increasing_star(
        &self,
        rs: &RootSystem,
        w: ElemId,
        lambda: ParabolicSubset,
        ord: &ReflectionOrder,
        filter: Option<DegreeFilter>,
    ) -> Vec<DirectedPath> {
        let mut out = Vec::new();
        let mut path = DirectedPath::trivial(w);
        self.star_dfs(rs, &mut path, lambda, ord, filter, None, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn star_dfs(
        &self,
        rs: &RootSystem,
        path: &mut DirectedPath,
        lambda: ParabolicSubset,
        ord: &ReflectionOrder,
        filter: Option<DegreeFilter>,
        last: Option<usize>,
        out: &mut Vec<DirectedPath>,
    ) {
        out.push(path.clone());
        for e in self.graph.out_edges(path.end()) {
            let p = ord.position(e.label);
            if last.is_some_and(|l| p <= l) {
                continue;
            }
            if rs.root(e.label).supported_in(lambda) {
                continue;
            }
            if filter.is_some_and(|f| !f.admits(rs, e.label)) {
                continue;
            }
            path.push(e);
            self.star_dfs(rs, path, lambda, ord, filter, Some(p), out);
            path.pop();
        }
    }

    /// For each length `0..=max_len`, the set of quantum weights of directed
    /// paths `v => w` of exactly that length.
    pub fn path_qwts_by_length(&self, rs: &RootSystem, v: ElemId, w: ElemId, max_len: usize) -> Vec<BTreeSet<CorootVec>> {
        let n = self.rev.len();
        let mut layer: Vec<BTreeSet<CorootVec>> = vec![BTreeSet::new(); n];
        layer[v.idx()].insert(CorootVec::zero(rs.rank()));
        let mut out = vec![layer[w.idx()].clone()];
        for _ in 0..max_len {
            let mut next: Vec<BTreeSet<CorootVec>> = vec![BTreeSet::new(); n];
            for (u, set) in layer.iter().enumerate() {
                if set.is_empty() {
                    continue;
                }
                for e in self.graph.out_edges(ElemId(u as u32)) {
                    for q in set {
                        let q2 = if e.kind == EdgeKind::Quantum { q + rs.coroot_by_index(e.label) } else { q.clone() };
                        next[e.target.idx()].insert(q2);
                    }
                }
            }
            layer = next;
            out.push(layer[w.idx()].clone());
        }
        out
    }

    /// `tbmax(u, Lambda, v)`: the unique element of `u W_Lambda` whose
    /// label-increasing path to `v` avoids `Delta_Lambda`. The order must put
    /// `Delta_Lambda` first.
    pub fn tbmax(
        &self,
        group: &WeylGroup,
        u: ElemId,
        lambda: ParabolicSubset,
        v: ElemId,
        ord: &ReflectionOrder,
    ) -> Result<ElemId> {
        let rs = group.root_system();
        if ord.split() != lambda {
            return Err(Error::Precondition(format!(
                "reflection order is split at {} but tbmax needs {}",
                ord.split(),
                lambda
            )));
        }
        let mut found = None;
        for w in group.coset(u, lambda) {
            if self.label_increasing_path_outside(rs, w, v, ord, lambda)?.is_some() {
                if found.is_some() {
                    return Err(Error::Internal("tbmax candidate is not unique".into()));
                }
                found = Some(w);
            }
        }
        found.ok_or_else(|| Error::Internal("tbmax has no candidate".into()))
    }

    /// `tbmax` computed as the maximum of the coset for the dual tilted
    /// order, using shortest-path distances only.
    pub fn tbmax_tilted(&self, group: &WeylGroup, u: ElemId, lambda: ParabolicSubset, v: ElemId) -> Result<ElemId> {
        let coset = group.coset(u, lambda);
        let mut found = None;
        for &m in &coset {
            let dm = self.dist(m, v);
            if coset.iter().all(|&w| self.dist(w, v) == self.dist(w, m) + dm) {
                if found.is_some() {
                    return Err(Error::Internal("tilted maximum is not unique".into()));
                }
                found = Some(m);
            }
        }
        found.ok_or_else(|| Error::Internal("coset has no tilted maximum".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(t: &str) -> (WeylGroup, QuantumPaths) {
        let g = WeylGroup::parse_type(t).unwrap();
        let q = QuantumPaths::new(&g).unwrap();
        (g, q)
    }

    #[test]
    fn a1_graph() {
        let (g, q) = setup("A1");
        assert_eq!(q.graph().edge_count(), 2);
        let s = g.parse("1").unwrap();
        assert_eq!(q.graph().edge(g.identity(), 0).unwrap().kind, EdgeKind::Bruhat);
        assert_eq!(q.graph().edge(s, 0).unwrap().kind, EdgeKind::Quantum);
    }

    #[test]
    fn orders_are_convex() {
        for t in ["A3", "B3", "C3", "G2", "D4"] {
            let rs = RootSystem::parse(t).unwrap();
            for lam in ParabolicSubset::all_subsets(rs.rank()) {
                for v in [OrderVariant::SmallestFirst, OrderVariant::LargestFirst] {
                    let o = ReflectionOrder::new(&rs, lam, v).unwrap();
                    assert!(o.is_convex(&rs), "{t} {lam}");
                    assert!(o.respects_split(&rs), "{t} {lam}");
                }
            }
        }
    }

    #[test]
    fn qwt_of_longest_path_in_a1() {
        let (g, q) = setup("A1");
        let rs = g.root_system();
        let s = g.parse("1").unwrap();
        assert_eq!(q.qwt_between(rs, s, g.identity()), CorootVec::from_slice(&[1]));
        assert_eq!(q.qwt_between(rs, g.identity(), s), CorootVec::from_slice(&[0]));
    }

    #[test]
    fn parabolic_graph_vertices() {
        let g = WeylGroup::parse_type("G2").unwrap();
        let lam = ParabolicSubset::from_nodes(2, &[0]).unwrap();
        let q = Qbg::build(&g, lam).unwrap();
        assert_eq!(q.vertex_count(), 6);
        for e in q.edges() {
            assert!(q.contains(e.target));
        }
    }

    #[test]
    fn degree_filter_rejects_bad_fraction() {
        assert!(DegreeFilter::new(0, 3, 3).is_err());
        assert!(DegreeFilter::new(0, 0, 0).is_err());
    }

    #[test]
    fn tbmax_requires_split_order() {
        let (g, q) = setup("A2");
        let rs = g.root_system();
        let o = ReflectionOrder::new(rs, ParabolicSubset::empty(2), OrderVariant::SmallestFirst).unwrap();
        let lam = ParabolicSubset::from_nodes(2, &[0]).unwrap();
        assert!(q.tbmax(&g, g.identity(), lam, g.identity(), &o).is_err());
    }
}
