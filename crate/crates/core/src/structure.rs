//! Zero/nonzero structure of a matrix: its digraph, strongly connected
//! classes, Frobenius normal form and the access relation between classes.
//!
//! Everything here depends only on which entries are `0̄`, never on their
//! numeric values, so it applies uniformly to all semiring instances.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::linalg::{Matrix, Vector};
use crate::Result;

/// The digraph of a matrix: an arc `i → j` for every entry `a_ij ≠ 0̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn from_matrix(a: &Matrix) -> Self {
        let n = a.n();
        let adj = (0..n)
            .map(|i| (0..n).filter(|&j| a.get(i, j) != 0.0).collect())
            .collect();
        Digraph { n, adj }
    }

    /// Builds a digraph from an explicit arc list (test helper and CLI use).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "arc ({u}, {v}) out of range for {n} nodes"
                )));
            }
            adj[u].insert(v);
        }
        Ok(Digraph {
            n,
            adj: adj.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn successors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    /// All arcs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, succ) in self.adj.iter().enumerate() {
            for &v in succ {
                out.push((u, v));
            }
        }
        out
    }

    /// Nodes from which some node of `targets` can be reached (reflexively:
    /// the targets themselves are included).
    pub fn reaching_set(&self, targets: &[usize]) -> Vec<bool> {
        // Reverse adjacency walk from the targets.
        let mut radj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (u, succ) in self.adj.iter().enumerate() {
            for &v in succ {
                radj[v].push(u);
            }
        }
        let mut seen = vec![false; self.n];
        let mut queue: Vec<usize> = targets.iter().copied().collect();
        for &t in targets {
            seen[t] = true;
        }
        while let Some(v) = queue.pop() {
            for &u in &radj[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push(u);
                }
            }
        }
        seen
    }

    /// Strongly connected components, each sorted ascending.
    ///
    /// Components are emitted in an order where every arc between distinct
    /// components points from a later component to an earlier one.
    pub fn tarjan_scc(&self) -> Vec<Vec<usize>> {
        const UNSEEN: usize = usize::MAX;
        let mut index = vec![UNSEEN; self.n];
        let mut low = vec![0usize; self.n];
        let mut on_stack = vec![false; self.n];
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0usize;
        let mut comps: Vec<Vec<usize>> = Vec::new();
        // Explicit DFS stack of (node, next child offset) to stay safe on
        // deep graphs.
        let mut work: Vec<(usize, usize)> = Vec::new();

        for root in 0..self.n {
            if index[root] != UNSEEN {
                continue;
            }
            work.push((root, 0));
            while let Some(&(v, pos)) = work.last() {
                if pos == 0 {
                    index[v] = next;
                    low[v] = next;
                    next += 1;
                    stack.push(v);
                    on_stack[v] = true;
                }
                let mut child = None;
                let mut p = pos;
                while p < self.adj[v].len() {
                    let w = self.adj[v][p];
                    p += 1;
                    if index[w] == UNSEEN {
                        child = Some(w);
                        break;
                    }
                    if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                }
                work.last_mut().expect("nonempty").1 = p;
                if let Some(w) = child {
                    work.push((w, 0));
                    continue;
                }
                work.pop();
                if let Some(parent) = work.last() {
                    let pv = parent.0;
                    low[pv] = low[pv].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("component on stack");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comp.sort_unstable();
                    comps.push(comp);
                }
            }
        }
        comps
    }
}

/// Index set carrying the support of a vector (positions with `≠ 0̄`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SupportSet(BTreeSet<usize>);

impl SupportSet {
    pub fn from_vector(v: &Vector) -> Self {
        SupportSet(v.support().into_iter().collect())
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SupportSet(iter.into_iter().collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.iter().copied().collect()
    }
}

/// Frobenius normal form: the strongly connected classes of the digraph in
/// an order that makes the permuted matrix block lower triangular.
///
/// The order is canonical: among classes whose successors are all placed,
/// the one containing the smallest original index goes first. Inside each
/// class the original index order is kept. In the reduced graph every class
/// carries a (possibly postulated) self-loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusForm {
    n: usize,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    permutation: Vec<usize>,
    reduced_edges: BTreeSet<(usize, usize)>,
    // reach[i][j]: class i accesses class j (reflexive).
    reach: Vec<Vec<bool>>,
}

impl FrobeniusForm {
    pub fn of(a: &Matrix) -> Self {
        Self::from_digraph(&Digraph::from_matrix(a))
    }

    pub fn from_digraph(g: &Digraph) -> Self {
        use std::cmp::Reverse;
        use std::collections::BinaryHeap;

        let sccs = g.tarjan_scc();
        let r = sccs.len();
        let mut scc_of = vec![0usize; g.n()];
        for (c, comp) in sccs.iter().enumerate() {
            for &v in comp {
                scc_of[v] = c;
            }
        }

        // Condensation arcs between distinct components.
        let mut succ: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); r];
        for (u, v) in g.edges() {
            let (cu, cv) = (scc_of[u], scc_of[v]);
            if cu != cv {
                succ[cu].insert(cv);
            }
        }

        // Canonical linear extension: a class becomes ready once everything
        // it accesses is placed; ties go to the smallest original index.
        let mut pending = vec![0usize; r];
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); r];
        for c in 0..r {
            pending[c] = succ[c].len();
            for &d in &succ[c] {
                preds[d].push(c);
            }
        }
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> = (0..r)
            .filter(|&c| pending[c] == 0)
            .map(|c| Reverse((sccs[c][0], c)))
            .collect();
        let mut order = Vec::with_capacity(r);
        let mut pos = vec![usize::MAX; r];
        while let Some(Reverse((_, c))) = heap.pop() {
            pos[c] = order.len();
            order.push(c);
            for &p in &preds[c] {
                pending[p] -= 1;
                if pending[p] == 0 {
                    heap.push(Reverse((sccs[p][0], p)));
                }
            }
        }
        debug_assert_eq!(order.len(), r);

        let classes: Vec<Vec<usize>> = order.iter().map(|&c| sccs[c].clone()).collect();
        let mut class_of = vec![0usize; g.n()];
        let mut permutation = Vec::with_capacity(g.n());
        for (k, class) in classes.iter().enumerate() {
            for &v in class {
                class_of[v] = k;
                permutation.push(v);
            }
        }

        let mut reduced_edges = BTreeSet::new();
        for (k, &c) in order.iter().enumerate() {
            // Self-loops are postulated for every class, real or not.
            reduced_edges.insert((k, k));
            for &d in &succ[c] {
                reduced_edges.insert((k, pos[d]));
            }
        }

        // Transitive closure of the reduced graph (reflexive).
        let mut reach = vec![vec![false; r]; r];
        for i in 0..r {
            let mut stack = vec![i];
            reach[i][i] = true;
            while let Some(c) = stack.pop() {
                for &(from, to) in reduced_edges.range((c, 0)..=(c, r)) {
                    debug_assert_eq!(from, c);
                    if !reach[i][to] {
                        reach[i][to] = true;
                        stack.push(to);
                    }
                }
            }
        }

        FrobeniusForm {
            n: g.n(),
            classes,
            class_of,
            permutation,
            reduced_edges,
            reach,
        }
    }

    /// Number of nodes of the underlying digraph.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Classes in normal-form order; each is ascending in original indices.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The class index of a node.
    pub fn class_of(&self, node: usize) -> usize {
        self.class_of[node]
    }

    /// `permutation()[p]` is the original index at permuted position `p`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// Arcs of the reduced graph between class indices, self-loops included
    /// (every class is postulated to carry one).
    pub fn reduced_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.reduced_edges.iter().copied()
    }

    /// Reorders a matrix by the normal-form permutation; the result is
    /// block lower triangular.
    pub fn permuted(&self, a: &Matrix) -> Result<Matrix> {
        if a.n() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: a.n(),
            });
        }
        let rows = (0..self.n)
            .map(|p| {
                (0..self.n)
                    .map(|q| a.get(self.permutation[p], self.permutation[q]))
                    .collect()
            })
            .collect();
        Matrix::new(a.context(), rows)
    }

    /// Whether class `i` accesses class `j` (reflexive, transitive).
    pub fn class_reaches(&self, i: usize, j: usize) -> bool {
        self.reach[i][j]
    }

    /// Sorted class indices that access at least one of `targets`.
    pub fn classes_accessing(&self, targets: &[usize]) -> Vec<usize> {
        (0..self.class_count())
            .filter(|&i| targets.iter().any(|&t| self.reach[i][t]))
            .collect()
    }

    /// Sorted class indices accessing the support of a vector: the set `J`
    /// of the solvability theory.
    pub fn classes_accessing_support(&self, supp: &SupportSet) -> Vec<usize> {
        let targets: Vec<usize> = supp
            .iter()
            .map(|node| self.class_of(node))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        self.classes_accessing(&targets)
    }

    /// Classes that no other class has access to. Their spectral condition
    /// is vacuous, so their roots always belong to the eigenvalue set.
    pub fn final_classes(&self) -> Vec<usize> {
        (0..self.class_count())
            .filter(|&j| (0..self.class_count()).all(|i| i == j || !self.reach[i][j]))
            .collect()
    }

    /// All nodes of the listed classes, ascending.
    pub fn nodes_of_classes(&self, class_indices: &[usize]) -> Vec<usize> {
        let mut nodes: Vec<usize> = class_indices
            .iter()
            .flat_map(|&c| self.classes[c].iter().copied())
            .collect();
        nodes.sort_unstable();
        nodes
    }
}

/// Node-level access relation `i ↝ j`: a path from `i` to `j` exists in the
/// digraph of `a` (every node accesses itself).
pub fn accesses(a: &Matrix, i: usize, j: usize) -> Result<bool> {
    let n = a.n();
    if i >= n || j >= n {
        return Err(Error::InvalidArgument(format!(
            "node pair ({i}, {j}) out of range for {n} nodes"
        )));
    }
    if i == j {
        return Ok(true);
    }
    let g = Digraph::from_matrix(a);
    Ok(g.reaching_set(&[j])[i])
}
