//! Label nodes linked directly to each other: a weak reference to the
//! predecessor and strong references to the successors.

use std::cell::RefCell;
use std::collections::VecDeque;
use std::rc::{Rc, Weak};

use super::{dominates, extend, EspprcGraph, EspprcOutcome, Label};

type NodeRef = Rc<RefCell<Node>>;

#[derive(Debug)]
struct Node {
    label: Label,
    pred: Option<Weak<RefCell<Node>>>,
    succs: Vec<NodeRef>,
    ignored: bool,
    extended: bool,
}

fn new_node(label: Label, pred: Option<&NodeRef>) -> NodeRef {
    let node = Rc::new(RefCell::new(Node {
        label,
        pred: pred.map(Rc::downgrade),
        succs: Vec::new(),
        ignored: false,
        extended: false,
    }));
    if let Some(p) = pred {
        p.borrow_mut().succs.push(Rc::clone(&node));
    }
    node
}

fn ignore(node: &NodeRef) {
    let mut stack = vec![Rc::clone(node)];
    while let Some(current) = stack.pop() {
        let mut inner = current.borrow_mut();
        if inner.ignored {
            continue;
        }
        inner.ignored = true;
        stack.extend(inner.succs.iter().cloned());
    }
}

fn path(node: &NodeRef) -> Vec<usize> {
    let mut path = vec![node.borrow().label.vertex];
    let mut pred = node.borrow().pred.as_ref().and_then(Weak::upgrade);
    while let Some(p) = pred {
        path.push(p.borrow().label.vertex);
        pred = p.borrow().pred.as_ref().and_then(Weak::upgrade);
    }
    path.reverse();
    path
}

pub fn solve(g: &EspprcGraph) -> EspprcOutcome {
    let n = g.n();
    let source = g.source();
    let mut at_vertex: Vec<Vec<NodeRef>> = vec![Vec::new(); n];
    let mut closed: Vec<NodeRef> = Vec::new();
    let mut queue = VecDeque::new();
    let mut queued = vec![false; n];
    let mut created = 1;

    let root = new_node(Label::root(g), None);
    at_vertex[source].push(Rc::clone(&root));
    queue.push_back(source);
    queued[source] = true;

    while let Some(v) = queue.pop_front() {
        queued[v] = false;
        let pending: Vec<NodeRef> = at_vertex[v].clone();
        for node in &pending {
            {
                let mut inner = node.borrow_mut();
                if inner.ignored || inner.extended {
                    continue;
                }
                inner.extended = true;
            }
            for j in 0..n {
                if j == v || node.borrow().ignored {
                    continue;
                }
                let Some(label) = extend(&node.borrow().label, j, g) else {
                    continue;
                };
                if j == source {
                    closed.push(new_node(label, Some(node)));
                    created += 1;
                    continue;
                }
                let beaten = at_vertex[j].iter().any(|other| {
                    let other = other.borrow();
                    !other.ignored && (other.label == label || dominates(&other.label, &label))
                });
                if beaten {
                    continue;
                }
                for other in &at_vertex[j] {
                    let dominated = {
                        let o = other.borrow();
                        !o.ignored && dominates(&label, &o.label)
                    };
                    if dominated {
                        ignore(other);
                    }
                }
                at_vertex[j].push(new_node(label, Some(node)));
                created += 1;
                if !queued[j] {
                    queue.push_back(j);
                    queued[j] = true;
                }
            }
        }
    }

    let mut best: Option<&NodeRef> = None;
    for c in &closed {
        let inner = c.borrow();
        if !inner.ignored && best.is_none_or(|b| inner.label.cost < b.borrow().label.cost) {
            best = Some(c);
        }
    }
    EspprcOutcome {
        cost: best.map_or(f64::INFINITY, |b| b.borrow().label.cost),
        path: best.map_or_else(Vec::new, path),
        labels: created,
    }
}
