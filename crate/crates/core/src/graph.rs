//! Involutive labeled graphs, Stallings folding, and canonical forms.
//!
//! Graphs here are *involutive*: every edge `u --x--> v` coexists with its
//! partner `v --x'--> u`, and edges labeled by a 2-cell letter `ρ` are their
//! own partners (`ρ` is self-inverse). Only one physical record per edge
//! pair is stored; traversal works with *darts*, the directed views.
//!
//! [`LabeledGraph`] is the mutable builder. [`LabeledGraph::fold`] produces
//! an [`Automaton`]: a deterministic, connected, birooted graph whose
//! vertices are numbered canonically, so that isomorphism checks reduce to
//! comparing byte strings.

use std::collections::VecDeque;

use crate::words::{Letter, Presentation, Word};
use crate::Error;

/// A finite involutive labeled multigraph under construction.
///
/// Edges are stored once per involutive pair: generator edges with positive
/// orientation, 2-cell edges as unordered records. The graph may be
/// nondeterministic; folding resolves that.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pres: Presentation,
    vertex_count: usize,
    edges: Vec<(usize, Letter, usize)>,
    roots: Option<(usize, usize)>,
}

impl LabeledGraph {
    pub fn new(pres: Presentation) -> LabeledGraph {
        LabeledGraph {
            pres,
            vertex_count: 0,
            edges: Vec::new(),
            roots: None,
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Stored edge records: base-letter triples `(source, letter, target)`.
    pub fn edges(&self) -> &[(usize, Letter, usize)] {
        &self.edges
    }

    pub fn roots(&self) -> Option<(usize, usize)> {
        self.roots
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    /// Adds the edge pair for `u --l--> v`. A signed letter is normalized:
    /// `u --x'--> v` is stored as `v --x--> u`.
    ///
    /// Panics if a vertex or letter is out of range.
    pub fn add_edge(&mut self, u: usize, l: Letter, v: usize) {
        assert!(
            u < self.vertex_count && v < self.vertex_count,
            "vertex out of range"
        );
        let in_range = match l {
            Letter::X { index, .. } => (index as usize) < self.pres.x_count(),
            Letter::P { index } => (index as usize) < self.pres.p_count(),
        };
        assert!(in_range, "letter out of range");
        if l.is_inverted() {
            self.edges.push((v, l.base(), u));
        } else {
            self.edges.push((u, l, v));
        }
    }

    pub fn set_roots(&mut self, initial: usize, terminal: usize) {
        assert!(initial < self.vertex_count && terminal < self.vertex_count);
        self.roots = Some((initial, terminal));
    }

    /// Stallings folding: repeatedly identifies the targets of equally
    /// labeled darts with a common source until the graph is deterministic,
    /// then renumbers canonically.
    ///
    /// Panics if the graph has no roots or is not connected.
    pub fn fold(&self) -> Automaton {
        let (ri, rt) = self.roots.expect("fold requires a rooted graph");
        let mut folder = Folder::from_graph(self);
        folder.process();
        folder.into_automaton(&self.pres, ri, rt)
    }
}

/// Union-find based folding engine shared by [`LabeledGraph::fold`] and the
/// saturation loop.
///
/// Each vertex class keeps a sorted dart map at its representative. Dart
/// insertions that collide queue a vertex merge; [`Folder::process`] drains
/// the queue, merging smaller dart maps into larger ones. Stored dart
/// targets may be stale (non-representatives); readers resolve them through
/// `find`.
pub(crate) struct Folder {
    parent: Vec<usize>,
    size: Vec<u32>,
    adj: Vec<Vec<(Letter, usize)>>,
    queue: VecDeque<(usize, usize)>,
    /// Number of vertex identifications performed so far.
    pub folds: u64,
}

impl Folder {
    pub fn new(vertex_count: usize) -> Folder {
        Folder {
            parent: (0..vertex_count).collect(),
            size: vec![1; vertex_count],
            adj: vec![Vec::new(); vertex_count],
            queue: VecDeque::new(),
            folds: 0,
        }
    }

    pub fn from_graph(g: &LabeledGraph) -> Folder {
        let mut folder = Folder::new(g.vertex_count());
        for &(u, l, v) in g.edges() {
            folder.add_edge(u, l, v);
        }
        folder
    }

    pub fn find(&mut self, v: usize) -> usize {
        let mut root = v;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = v;
        while self.parent[cur] != root {
            cur = std::mem::replace(&mut self.parent[cur], root);
        }
        root
    }

    pub fn add_vertex(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.size.push(1);
        self.adj.push(Vec::new());
        self.parent.len() - 1
    }

    /// Inserts both darts of the edge pair `u --base--> v`.
    pub fn add_edge(&mut self, u: usize, base: Letter, v: usize) {
        debug_assert!(!base.is_inverted());
        if base.is_p() {
            self.insert_dart(u, base, v);
            if u != v {
                self.insert_dart(v, base, u);
            }
        } else {
            self.insert_dart(u, base, v);
            self.insert_dart(v, base.inverse(), u);
        }
    }

    /// Inserts a signed-letter edge: `u --x'--> v` becomes `v --x--> u`.
    pub fn add_signed_edge(&mut self, u: usize, l: Letter, v: usize) {
        if l.is_inverted() {
            self.add_edge(v, l.base(), u);
        } else {
            self.add_edge(u, l, v);
        }
    }

    fn insert_dart(&mut self, u: usize, l: Letter, v: usize) {
        let ru = self.find(u);
        match self.adj[ru].binary_search_by_key(&l, |&(k, _)| k) {
            Ok(pos) => {
                let t = self.adj[ru][pos].1;
                let (rt, rv) = (self.find(t), self.find(v));
                if rt != rv {
                    self.queue.push_back((rt, rv));
                }
            }
            Err(pos) => self.adj[ru].insert(pos, (l, v)),
        }
    }

    /// Drains the merge queue, folding until the graph is deterministic.
    pub fn process(&mut self) {
        while let Some((a, b)) = self.queue.pop_front() {
            let (ra, rb) = (self.find(a), self.find(b));
            if ra == rb {
                continue;
            }
            self.folds += 1;
            let (keep, drop) = if self.size[ra] >= self.size[rb] {
                (ra, rb)
            } else {
                (rb, ra)
            };
            self.parent[drop] = keep;
            self.size[keep] += self.size[drop];
            let dropped = std::mem::take(&mut self.adj[drop]);
            for (l, t) in dropped {
                match self.adj[keep].binary_search_by_key(&l, |&(k, _)| k) {
                    Ok(pos) => {
                        let t2 = self.adj[keep][pos].1;
                        let (rt, rt2) = (self.find(t), self.find(t2));
                        if rt != rt2 {
                            self.queue.push_back((rt, rt2));
                        }
                    }
                    Err(pos) => self.adj[keep].insert(pos, (l, t)),
                }
            }
        }
    }

    /// Queues a merge of two vertex classes. Call `process` afterwards.
    pub fn merge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.queue.push_back((ra, rb));
        }
    }

    /// The dart step `v --l-->`, valid at fold fixpoint.
    pub fn step(&mut self, v: usize, l: Letter) -> Option<usize> {
        let rv = self.find(v);
        match self.adj[rv].binary_search_by_key(&l, |&(k, _)| k) {
            Ok(pos) => {
                let t = self.adj[rv][pos].1;
                Some(self.find(t))
            }
            Err(_) => None,
        }
    }

    /// Follows `letters` from `start` as far as darts exist. Returns the
    /// last vertex reached and how many letters were consumed.
    pub fn trace(&mut self, start: usize, letters: &[Letter]) -> (usize, usize) {
        let mut v = self.find(start);
        for (i, &l) in letters.iter().enumerate() {
            match self.step(v, l) {
                Some(w) => v = w,
                None => return (v, i),
            }
        }
        (v, letters.len())
    }

    /// Ensures a path labeled `letters` runs from `from` to `to`: reuses the
    /// maximal existing prefix, appends fresh vertices for the missing part,
    /// and closes at `to`. Queues any folds this induces; call `process`
    /// afterwards. Must be called at fold fixpoint.
    pub fn span_path(&mut self, from: usize, letters: &[Letter], to: usize) {
        let (reached, consumed) = self.trace(from, letters);
        if consumed == letters.len() {
            self.merge(reached, to);
            return;
        }
        let mut cur = reached;
        for i in consumed..letters.len() {
            let next = if i + 1 == letters.len() {
                self.find(to)
            } else {
                self.add_vertex()
            };
            self.add_signed_edge(cur, letters[i], next);
            cur = next;
        }
    }

    /// Representatives in ascending vertex order.
    pub fn representatives(&mut self) -> Vec<usize> {
        (0..self.parent.len())
            .filter(|&v| {
                let mut root = v;
                while self.parent[root] != root {
                    root = self.parent[root];
                }
                root == v
            })
            .collect()
    }

    /// Darts at the representative `rv`, letter-sorted, targets resolved.
    pub fn darts_at(&mut self, rv: usize) -> Vec<(Letter, usize)> {
        debug_assert_eq!(self.parent[rv], rv);
        let darts = self.adj[rv].clone();
        darts.into_iter().map(|(l, t)| (l, self.find(t))).collect()
    }

    /// Extracts the folded graph as a canonically numbered automaton.
    ///
    /// Panics if merges are still queued or if some vertex class is not
    /// reachable from the initial root.
    pub fn into_automaton(
        mut self,
        pres: &Presentation,
        root_init: usize,
        root_term: usize,
    ) -> Automaton {
        assert!(self.queue.is_empty(), "folding is not at fixpoint");
        let live = self.representatives().len();
        let ri = self.find(root_init);
        let rt = self.find(root_term);

        // Breadth-first numbering from the initial root, darts in letter order.
        let mut index = vec![usize::MAX; self.parent.len()];
        let mut order = Vec::with_capacity(live);
        index[ri] = 0;
        order.push(ri);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for (_, t) in self.darts_at(v) {
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                }
            }
        }
        assert_eq!(order.len(), live, "graph is not connected");

        let mut adj = Vec::with_capacity(live);
        for &rep in &order {
            let darts: Vec<(Letter, usize)> = self
                .darts_at(rep)
                .into_iter()
                .map(|(l, t)| (l, index[t]))
                .collect();
            adj.push(darts);
        }
        Automaton::from_canonical_adj(pres.clone(), adj, index[rt])
    }
}

/// A compact, order-sensitive serialization of an automaton. Two automata
/// get equal codes exactly when they are isomorphic as birooted labeled
/// graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// A deterministic, connected, birooted labeled graph in canonical form.
///
/// Vertices are numbered by breadth-first discovery from the initial root
/// (which is therefore always vertex 0), exploring darts in canonical letter
/// order. Construction always goes through folding or validation, so the
/// numbering invariant holds for every value of this type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Automaton {
    pres: Presentation,
    adj: Vec<Vec<(Letter, usize)>>,
    edges: Vec<(usize, Letter, usize)>,
    root_init: usize,
    root_term: usize,
}

impl Automaton {
    fn from_canonical_adj(
        pres: Presentation,
        adj: Vec<Vec<(Letter, usize)>>,
        root_term: usize,
    ) -> Automaton {
        let mut edges = Vec::new();
        for (u, darts) in adj.iter().enumerate() {
            for &(l, v) in darts {
                let keep = match l {
                    Letter::X { inverted, .. } => !inverted,
                    // A non-loop 2-cell edge appears as a dart at both ends.
                    Letter::P { .. } => u <= v,
                };
                if keep {
                    edges.push((u, l, v));
                }
            }
        }
        Automaton {
            pres,
            adj,
            edges,
            root_init: 0,
            root_term,
        }
    }

    /// Validates raw graph data (range, determinism, connectivity) and puts
    /// it in canonical form. `edges` are base-letter records as in
    /// [`LabeledGraph::edges`].
    pub fn from_parts(
        pres: Presentation,
        vertex_count: usize,
        edges: &[(usize, Letter, usize)],
        root_init: usize,
        root_term: usize,
    ) -> Result<Automaton, Error> {
        if vertex_count == 0 {
            return Err(Error::Graph("no vertices".into()));
        }
        if root_init >= vertex_count || root_term >= vertex_count {
            return Err(Error::Graph("root out of range".into()));
        }
        let mut darts: Vec<Vec<(Letter, usize)>> = vec![Vec::new(); vertex_count];
        let mut insert = |u: usize, l: Letter, v: usize| -> Result<(), Error> {
            match darts[u].binary_search_by_key(&l, |&(k, _)| k) {
                Ok(pos) => {
                    if darts[u][pos].1 != v {
                        return Err(Error::Graph(format!(
                            "vertex {u} has two distinct darts labeled by the same letter"
                        )));
                    }
                    Ok(())
                }
                Err(pos) => {
                    darts[u].insert(pos, (l, v));
                    Ok(())
                }
            }
        };
        for &(u, l, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::Graph(format!(
                    "edge endpoint out of range: ({u}, {v})"
                )));
            }
            if l.is_inverted() {
                return Err(Error::Graph("edge records must use base letters".into()));
            }
            let in_range = match l {
                Letter::X { index, .. } => (index as usize) < pres.x_count(),
                Letter::P { index } => (index as usize) < pres.p_count(),
            };
            if !in_range {
                return Err(Error::Graph("edge letter outside the presentation".into()));
            }
            insert(u, l, v)?;
            if l.is_p() {
                if u != v {
                    insert(v, l, u)?;
                }
            } else {
                insert(v, l.inverse(), u)?;
            }
        }

        let mut index = vec![usize::MAX; vertex_count];
        let mut order = Vec::with_capacity(vertex_count);
        index[root_init] = 0;
        order.push(root_init);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &(_, t) in &darts[v] {
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                }
            }
        }
        if order.len() != vertex_count {
            return Err(Error::Graph("graph is not connected".into()));
        }

        let adj: Vec<Vec<(Letter, usize)>> = order
            .iter()
            .map(|&old| darts[old].iter().map(|&(l, t)| (l, index[t])).collect())
            .collect();
        Ok(Automaton::from_canonical_adj(pres, adj, index[root_term]))
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Base-letter edge records, sorted by `(source, letter)`.
    pub fn edges(&self) -> &[(usize, Letter, usize)] {
        &self.edges
    }

    /// `(initial, terminal)` roots. The initial root is always vertex 0.
    pub fn roots(&self) -> (usize, usize) {
        (self.root_init, self.root_term)
    }

    /// Letter-sorted darts at `v`.
    pub fn darts(&self, v: usize) -> &[(Letter, usize)] {
        &self.adj[v]
    }

    /// The dart step `v --l-->`, if that dart exists.
    pub fn step(&self, v: usize, l: Letter) -> Option<usize> {
        self.adj[v]
            .binary_search_by_key(&l, |&(k, _)| k)
            .ok()
            .map(|pos| self.adj[v][pos].1)
    }

    /// Reads `w` from `v`; `None` as soon as a dart is missing.
    pub fn act(&self, v: usize, w: &Word) -> Option<usize> {
        let mut cur = v;
        for &l in w.letters() {
            cur = self.step(cur, l)?;
        }
        Some(cur)
    }

    /// True if `w` reads from the initial to the terminal root.
    pub fn accepts(&self, w: &Word) -> bool {
        self.act(self.root_init, w) == Some(self.root_term)
    }

    /// A shortest word reading from the initial root to `v` (breadth-first,
    /// darts in canonical letter order, hence deterministic).
    pub fn word_to(&self, v: usize) -> Word {
        let n = self.vertex_count();
        let mut back: Vec<Option<(usize, Letter)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        seen[self.root_init] = true;
        queue.push_back(self.root_init);
        while let Some(u) = queue.pop_front() {
            if u == v {
                break;
            }
            for &(l, t) in &self.adj[u] {
                if !seen[t] {
                    seen[t] = true;
                    back[t] = Some((u, l));
                    queue.push_back(t);
                }
            }
        }
        let mut letters = Vec::new();
        let mut cur = v;
        while let Some((prev, l)) = back[cur] {
            letters.push(l);
            cur = prev;
        }
        letters.reverse();
        Word::from_letters(letters)
    }

    /// Re-roots the automaton at `(initial, terminal)` and renumbers.
    pub fn rerooted(&self, initial: usize, terminal: usize) -> Automaton {
        assert!(initial < self.vertex_count() && terminal < self.vertex_count());
        let mut index = vec![usize::MAX; self.vertex_count()];
        let mut order = Vec::with_capacity(self.vertex_count());
        index[initial] = 0;
        order.push(initial);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &(_, t) in &self.adj[v] {
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                }
            }
        }
        let adj: Vec<Vec<(Letter, usize)>> = order
            .iter()
            .map(|&old| self.adj[old].iter().map(|&(l, t)| (l, index[t])).collect())
            .collect();
        Automaton::from_canonical_adj(self.pres.clone(), adj, index[terminal])
    }

    /// The canonical-numbering map `old vertex -> new index` induced by
    /// re-rooting at `initial`.
    fn renumber_from(&self, initial: usize) -> Vec<usize> {
        let mut index = vec![usize::MAX; self.vertex_count()];
        let mut order = Vec::with_capacity(self.vertex_count());
        index[initial] = 0;
        order.push(initial);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &(_, t) in &self.adj[v] {
                if index[t] == usize::MAX {
                    index[t] = order.len();
                    order.push(t);
                }
            }
        }
        index
    }

    /// Serializes the canonical form. See [`CanonicalCode`].
    pub fn canonical_code(&self) -> CanonicalCode {
        let mut bytes = Vec::new();
        let push = |bytes: &mut Vec<u8>, v: u32| bytes.extend_from_slice(&v.to_le_bytes());
        let letter_code = |l: Letter| -> u32 {
            match l {
                Letter::X { index, .. } => index,
                Letter::P { index } => self.pres.x_count() as u32 + index,
            }
        };
        push(&mut bytes, self.pres.x_count() as u32);
        push(&mut bytes, self.pres.p_count() as u32);
        push(&mut bytes, self.vertex_count() as u32);
        push(&mut bytes, self.root_term as u32);
        push(&mut bytes, self.edges.len() as u32);
        for &(u, l, v) in &self.edges {
            push(&mut bytes, u as u32);
            push(&mut bytes, letter_code(l));
            push(&mut bytes, v as u32);
        }
        CanonicalCode(bytes)
    }
}

/// Isomorphism of birooted automata. Because both sides are in canonical
/// form, this is code equality; the isomorphism itself, when it exists, is
/// the identity on vertex numbers.
pub fn iso_rooted(a: &Automaton, b: &Automaton) -> bool {
    a.canonical_code() == b.canonical_code()
}

/// Isomorphism of the underlying graphs, ignoring roots: tries every
/// re-rooting of `a` against `b`'s canonical form. Both automata must have
/// coincident roots. On success, returns the vertex map `a -> b`.
///
/// Between connected deterministic graphs a root-respecting isomorphism is
/// unique, so trying each root image is exhaustive.
pub fn iso_unrooted(a: &Automaton, b: &Automaton) -> Option<Vec<usize>> {
    assert_eq!(
        a.root_init, a.root_term,
        "iso_unrooted requires coincident roots"
    );
    assert_eq!(
        b.root_init, b.root_term,
        "iso_unrooted requires coincident roots"
    );
    if a.vertex_count() != b.vertex_count() {
        return None;
    }
    let code_b = b.canonical_code();
    for v in 0..a.vertex_count() {
        if a.rerooted(v, v).canonical_code() == code_b {
            // b is canonically numbered from its own root, so the map is
            // exactly a's renumbering when rooted at v.
            return Some(a.renumber_from(v));
        }
    }
    None
}
