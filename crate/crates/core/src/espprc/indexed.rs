//! Label store addressed by position: predecessors and successors are
//! indices into one growable vector, and labels are never removed.

use std::collections::VecDeque;

use super::{dominates, extend, EspprcGraph, EspprcOutcome, Label};

#[derive(Debug, Clone)]
struct Node {
    label: Label,
    pred: Option<usize>,
    succs: Vec<usize>,
    ignored: bool,
    extended: bool,
}

#[derive(Debug, Default)]
struct Store {
    nodes: Vec<Node>,
}

impl Store {
    fn push(&mut self, label: Label, pred: Option<usize>) -> usize {
        let idx = self.nodes.len();
        self.nodes.push(Node {
            label,
            pred,
            succs: Vec::new(),
            ignored: false,
            extended: false,
        });
        if let Some(p) = pred {
            self.nodes[p].succs.push(idx);
        }
        idx
    }

    /// Marks `idx` and everything extended from it as ignored.
    fn ignore(&mut self, idx: usize) {
        let mut stack = vec![idx];
        while let Some(i) = stack.pop() {
            let node = &mut self.nodes[i];
            if node.ignored {
                continue;
            }
            node.ignored = true;
            stack.extend(node.succs.iter().copied());
        }
    }

    fn path(&self, mut idx: usize) -> Vec<usize> {
        let mut path = vec![self.nodes[idx].label.vertex];
        while let Some(p) = self.nodes[idx].pred {
            path.push(self.nodes[p].label.vertex);
            idx = p;
        }
        path.reverse();
        path
    }
}

pub fn solve(g: &EspprcGraph) -> EspprcOutcome {
    let n = g.n();
    let source = g.source();
    let mut store = Store::default();
    let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut closed = Vec::new();
    let mut queue = VecDeque::new();
    let mut queued = vec![false; n];

    let root = store.push(Label::root(g), None);
    at_vertex[source].push(root);
    queue.push_back(source);
    queued[source] = true;

    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        let pending = at_vertex[v].len();
        for k in 0..pending {
            let idx = at_vertex[v][k];
            if store.nodes[idx].ignored || store.nodes[idx].extended {
                continue;
            }
            store.nodes[idx].extended = true;
            for j in 0..n {
                if j == v || store.nodes[idx].ignored {
                    continue;
                }
                let Some(label) = extend(&store.nodes[idx].label, j, g) else {
                    continue;
                };
                if j == source {
                    closed.push(store.push(label, Some(idx)));
                    continue;
                }
                let beaten = at_vertex[j].iter().any(|&e| {
                    let other = &store.nodes[e];
                    !other.ignored && (other.label == label || dominates(&other.label, &label))
                });
                if beaten {
                    continue;
                }
                for e in at_vertex[j].clone() {
                    if !store.nodes[e].ignored && dominates(&label, &store.nodes[e].label) {
                        store.ignore(e);
                    }
                }
                let new_idx = store.push(label, Some(idx));
                at_vertex[j].push(new_idx);
                if !queued[j] {
                    queue.push_back(j);
                    queued[j] = true;
                }
            }
        }
    }

    let mut best: Option<usize> = None;
    for &c in &closed {
        let node = &store.nodes[c];
        if !node.ignored && best.is_none_or(|b| node.label.cost < store.nodes[b].label.cost) {
            best = Some(c);
        }
    }
    EspprcOutcome {
        cost: best.map_or(f64::INFINITY, |b| store.nodes[b].label.cost),
        path: best.map_or_else(Vec::new, |b| store.path(b)),
        labels: store.nodes.len(),
    }
}
