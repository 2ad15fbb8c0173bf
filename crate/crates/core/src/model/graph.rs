//! Directed graph over IRIs with child → parent edges.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::iri::Iri;

pub type Edge = (Iri, Iri);

/// Subclass (or subproperty) graph. Nodes are kept in IRI order so that
/// every traversal is deterministic.
#[derive(Debug, Clone, Default)]
pub struct TaxonomyGraph {
    nodes: Vec<Iri>,
    index: HashMap<Iri, usize>,
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
    edge_count: usize,
}

impl TaxonomyGraph {
    pub fn new(nodes: impl IntoIterator<Item = Iri>, edges: &BTreeSet<Edge>) -> Self {
        let mut all: BTreeSet<Iri> = nodes.into_iter().collect();
        for (child, parent) in edges {
            all.insert(child.clone());
            all.insert(parent.clone());
        }
        let nodes: Vec<Iri> = all.into_iter().collect();
        let index: HashMap<Iri, usize> = nodes.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect();
        let mut parents = vec![Vec::new(); nodes.len()];
        let mut children = vec![Vec::new(); nodes.len()];
        // `edges` is sorted and deduplicated, so adjacency lists come out sorted too.
        for (child, parent) in edges {
            let (c, p) = (index[child], index[parent]);
            parents[c].push(p);
            children[p].push(c);
        }
        for list in children.iter_mut() {
            list.sort_unstable();
        }
        Self {
            nodes,
            index,
            parents,
            children,
            edge_count: edges.len(),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn contains(&self, iri: &Iri) -> bool {
        self.index.contains_key(iri)
    }

    pub fn id(&self, iri: &Iri) -> Option<usize> {
        self.index.get(iri).copied()
    }

    pub fn iri(&self, id: usize) -> &Iri {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[Iri] {
        &self.nodes
    }

    pub fn parents(&self, id: usize) -> &[usize] {
        &self.parents[id]
    }

    pub fn children(&self, id: usize) -> &[usize] {
        &self.children[id]
    }

    /// All edges as (child, parent), sorted.
    pub fn edges(&self) -> BTreeSet<Edge> {
        self.parents
            .iter()
            .enumerate()
            .flat_map(|(c, ps)| ps.iter().map(move |&p| (self.nodes[c].clone(), self.nodes[p].clone())))
            .collect()
    }

    /// True iff a directed path of length >= 0 leads from `from` to `to`.
    pub fn reaches(&self, from: usize, to: usize) -> bool {
        if from == to {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(n) = queue.pop_front() {
            for &p in &self.parents[n] {
                if p == to {
                    return true;
                }
                if !seen[p] {
                    seen[p] = true;
                    queue.push_back(p);
                }
            }
        }
        false
    }

    /// Marks every node reachable from `starts` by following `step`, starts included.
    fn closure<'g>(&'g self, starts: impl IntoIterator<Item = usize>, step: impl Fn(usize) -> &'g [usize]) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut stack = Vec::new();
        for s in starts {
            if !seen[s] {
                seen[s] = true;
                stack.push(s);
            }
        }
        while let Some(n) = stack.pop() {
            for &m in step(n) {
                if !seen[m] {
                    seen[m] = true;
                    stack.push(m);
                }
            }
        }
        seen
    }

    /// Nodes with a path (length >= 0) to some start node, as a membership mask.
    pub fn descendants_mask(&self, starts: impl IntoIterator<Item = usize>) -> Vec<bool> {
        self.closure(starts, |n| &self.children[n])
    }

    /// Nodes reachable from some start node (length >= 0), as a membership mask.
    pub fn ancestors_mask(&self, starts: impl IntoIterator<Item = usize>) -> Vec<bool> {
        self.closure(starts, |n| &self.parents[n])
    }

    /// Same as [`descendants_mask`](Self::descendants_mask) but keyed by IRI;
    /// IRIs absent from the graph contribute only themselves.
    pub fn descendants_of<'a>(&self, starts: impl IntoIterator<Item = &'a Iri>) -> BTreeSet<Iri> {
        let mut extra = BTreeSet::new();
        let mut ids = Vec::new();
        for iri in starts {
            match self.id(iri) {
                Some(id) => ids.push(id),
                None => {
                    extra.insert(iri.clone());
                }
            }
        }
        let mask = self.descendants_mask(ids);
        self.collect(&mask).into_iter().chain(extra).collect()
    }

    pub fn collect(&self, mask: &[bool]) -> BTreeSet<Iri> {
        mask.iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| self.nodes[i].clone())
            .collect()
    }

    /// One directed cycle, if any, rotated to start at its smallest IRI.
    pub fn find_cycle(&self) -> Option<Vec<Iri>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let mut mark = vec![Mark::New; self.len()];
        for root in 0..self.len() {
            if mark[root] != Mark::New {
                continue;
            }
            // Iterative DFS; `path` mirrors the active stack.
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            let mut path = vec![root];
            mark[root] = Mark::Active;
            while let Some(top) = stack.last_mut() {
                let node = top.0;
                if let Some(&p) = self.parents[node].get(top.1) {
                    top.1 += 1;
                    match mark[p] {
                        Mark::New => {
                            mark[p] = Mark::Active;
                            stack.push((p, 0));
                            path.push(p);
                        }
                        Mark::Active => {
                            let at = path.iter().position(|&n| n == p).unwrap_or(0);
                            let mut cycle: Vec<usize> = path[at..].to_vec();
                            let min = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
                            cycle.rotate_left(min);
                            return Some(cycle.into_iter().map(|n| self.nodes[n].clone()).collect());
                        }
                        Mark::Done => {}
                    }
                } else {
                    mark[node] = Mark::Done;
                    stack.pop();
                    path.pop();
                }
            }
        }
        None
    }

    /// Nodes ordered so that every child precedes its parents. `None` if cyclic.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut pending: Vec<usize> = self.children.iter().map(Vec::len).collect();
        let mut ready: Vec<usize> = (0..self.len()).filter(|&n| pending[n] == 0).collect();
        let mut order = Vec::with_capacity(self.len());
        while let Some(n) = ready.pop() {
            order.push(n);
            for &p in &self.parents[n] {
                pending[p] -= 1;
                if pending[p] == 0 {
                    ready.push(p);
                }
            }
        }
        (order.len() == self.len()).then_some(order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Iri {
        Iri::from_static(&format!("http://ex.org/{s}"))
    }

    fn graph(edges: &[(&str, &str)]) -> TaxonomyGraph {
        let edges: BTreeSet<Edge> = edges.iter().map(|(c, p)| (iri(c), iri(p))).collect();
        TaxonomyGraph::new([], &edges)
    }

    #[test]
    fn reachability_follows_chains() {
        let g = graph(&[("A", "B"), ("B", "C"), ("D", "C")]);
        let id = |s| g.id(&iri(s)).unwrap();
        assert!(g.reaches(id("A"), id("C")));
        assert!(g.reaches(id("A"), id("A")));
        assert!(!g.reaches(id("C"), id("A")));
        assert!(!g.reaches(id("A"), id("D")));
    }

    #[test]
    fn descendants_include_starts() {
        let g = graph(&[("A", "B"), ("B", "C"), ("D", "C")]);
        let d = g.descendants_of([&iri("B")]);
        assert_eq!(d, BTreeSet::from([iri("A"), iri("B")]));
        let d = g.descendants_of([&iri("Missing")]);
        assert_eq!(d, BTreeSet::from([iri("Missing")]));
    }

    #[test]
    fn finds_two_cycle() {
        let g = graph(&[("B", "A"), ("A", "B")]);
        assert_eq!(g.find_cycle(), Some(vec![iri("A"), iri("B")]));
        assert!(g.topological_order().is_none());
    }

    #[test]
    fn finds_self_loop_and_longer_cycle() {
        assert_eq!(graph(&[("A", "A")]).find_cycle(), Some(vec![iri("A")]));
        let g = graph(&[("X", "C"), ("C", "D"), ("D", "E"), ("E", "C")]);
        assert_eq!(g.find_cycle(), Some(vec![iri("C"), iri("D"), iri("E")]));
    }

    #[test]
    fn acyclic_has_topological_order() {
        let g = graph(&[("A", "B"), ("B", "C"), ("A", "C")]);
        assert!(g.find_cycle().is_none());
        let order = g.topological_order().unwrap();
        let pos = |s| order.iter().position(|&n| n == g.id(&iri(s)).unwrap()).unwrap();
        assert!(pos("A") < pos("B") && pos("B") < pos("C"));
    }
}
