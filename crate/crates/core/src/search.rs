//! Bounded breadth-first search over the move graph: reduction to a
//! smallest reachable phrase and equivalence by bidirectional search.
//!
//! States are canonical forms. A path is a list of moves, each relative to
//! the canonical form of the phrase reached so far; [`replay`] checks one.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use crate::data::HomotopyData;
use crate::moves::{apply, apply_with_inverse, enumerate_moves, Move, MoveError, MoveKind, MoveKinds};
use crate::phrase::Nanophrase;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// No visited phrase has more letters than this (the start excepted).
    pub max_letters: usize,
    /// Longest path explored.
    pub max_depth: usize,
    /// Cap on stored states.
    pub max_states: usize,
    /// Longest run of consecutive insertion moves.
    pub max_insertions: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_letters: 10, max_depth: 12, max_states: 100_000, max_insertions: 1 }
    }
}

/// Moves used by default: deletions and exchanges, plus first- and
/// second-move insertions.
pub fn default_kinds() -> MoveKinds {
    MoveKinds::REDUCING | MoveKind::H1Insert.into() | MoveKind::H2Insert.into()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Canonical form of the input; the path starts here.
    pub start: Nanophrase,
    /// Smallest phrase found (canonical).
    pub phrase: Nanophrase,
    pub path: Vec<Move>,
    /// The budget cut the search short, so a smaller phrase may exist.
    pub exhausted: bool,
    pub states: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// A verified path from the canonical form of the first phrase to the
    /// canonical form of the second.
    Equivalent(Vec<Move>),
    /// Not connected within the budget. Never a proof of inequivalence.
    Unknown,
}

struct Node {
    phrase: Nanophrase,
    parent: usize,
    /// move from the parent to this node
    via: Option<Move>,
    /// move from this node back to the parent
    back: Option<Move>,
    depth: usize,
    insertions: usize,
}

struct Frontier<'a> {
    data: &'a HomotopyData,
    kinds: MoveKinds,
    budget: SearchBudget,
    nodes: Vec<Node>,
    seen: BTreeMap<(Nanophrase, usize), usize>,
    by_phrase: BTreeMap<Nanophrase, usize>,
    queue: VecDeque<usize>,
    truncated: bool,
}

impl<'a> Frontier<'a> {
    fn new(start: Nanophrase, data: &'a HomotopyData, kinds: MoveKinds, budget: SearchBudget) -> Self {
        let mut f = Frontier {
            data,
            kinds,
            budget,
            nodes: Vec::new(),
            seen: BTreeMap::new(),
            by_phrase: BTreeMap::new(),
            queue: VecDeque::new(),
            truncated: false,
        };
        f.push(Node { phrase: start, parent: 0, via: None, back: None, depth: 0, insertions: 0 });
        f
    }

    fn push(&mut self, node: Node) -> Option<usize> {
        let key = (node.phrase.clone(), node.insertions);
        if self.seen.contains_key(&key) {
            return None;
        }
        let i = self.nodes.len();
        self.seen.insert(key, i);
        self.by_phrase.entry(node.phrase.clone()).or_insert(i);
        self.nodes.push(node);
        self.queue.push_back(i);
        Some(i)
    }

    /// Expands one queued node; returns indices of new nodes.
    fn expand_one(&mut self) -> Option<Vec<usize>> {
        let i = self.queue.pop_front()?;
        let (depth, insertions) = (self.nodes[i].depth, self.nodes[i].insertions);
        if depth >= self.budget.max_depth {
            self.truncated = true;
            return Some(Vec::new());
        }
        let phrase = self.nodes[i].phrase.clone();
        let mut moves = enumerate_moves(&phrase, self.data, self.kinds.without_insertions());
        if insertions < self.budget.max_insertions {
            moves.extend(enumerate_moves(&phrase, self.data, self.kinds.insertions()));
        }
        let mut added = Vec::new();
        for mv in moves {
            if self.nodes.len() >= self.budget.max_states {
                self.truncated = true;
                break;
            }
            let grows = match mv.kind() {
                MoveKind::H1Insert => 1,
                k if k.is_insertion() => 2,
                _ => 0,
            };
            if grows > 0 && phrase.letter_count() + grows > self.budget.max_letters {
                continue;
            }
            let (next, inverse) = match apply_with_inverse(&phrase, self.data, &mv) {
                Ok(r) => r,
                Err(_) => continue,
            };
            let (canon, map) = next.canonical_with_map();
            let node = Node {
                phrase: canon,
                parent: i,
                via: Some(mv.clone()),
                back: Some(inverse.relabel(&map)),
                depth: depth + 1,
                insertions: if grows > 0 { insertions + 1 } else { 0 },
            };
            if let Some(j) = self.push(node) {
                added.push(j);
            }
        }
        Some(added)
    }

    /// Moves from the root to node `i`.
    fn path_to(&self, mut i: usize) -> Vec<Move> {
        let mut out = Vec::new();
        while i != 0 {
            out.push(self.nodes[i].via.clone().expect("non-root"));
            i = self.nodes[i].parent;
        }
        out.reverse();
        out
    }

    /// Moves from node `i` back to the root.
    fn path_from(&self, mut i: usize) -> Vec<Move> {
        let mut out = Vec::new();
        while i != 0 {
            out.push(self.nodes[i].back.clone().expect("non-root"));
            i = self.nodes[i].parent;
        }
        out
    }
}

/// Smallest phrase reachable from `phrase` with the default move kinds.
pub fn reduce(phrase: &Nanophrase, data: &HomotopyData, budget: SearchBudget) -> Reduction {
    reduce_with(phrase, data, budget, default_kinds())
}

/// Breadth-first reduction. Ties between phrases with equally few letters
/// go to the least compact rendering.
pub fn reduce_with(phrase: &Nanophrase, data: &HomotopyData, budget: SearchBudget, kinds: MoveKinds) -> Reduction {
    let start = phrase.canonical_form();
    let mut f = Frontier::new(start.clone(), data, kinds, budget);
    let score = |p: &Nanophrase| (p.letter_count(), p.compact(data));
    let mut best = 0usize;
    let mut best_score = score(&start);
    while best_score.0 > 0 {
        let Some(added) = f.expand_one() else { break };
        for j in added {
            let s = score(&f.nodes[j].phrase);
            if s < best_score {
                best = j;
                best_score = s;
            }
        }
    }
    let exhausted = f.truncated && best_score.0 > 0;
    Reduction { start, phrase: f.nodes[best].phrase.clone(), path: f.path_to(best), exhausted, states: f.nodes.len() }
}

/// Equivalence with the default move kinds.
pub fn equivalent(p: &Nanophrase, q: &Nanophrase, data: &HomotopyData, budget: SearchBudget) -> Equivalence {
    equivalent_with(p, q, data, budget, default_kinds())
}

/// Bidirectional search between the canonical forms of `p` and `q`.
/// The state budget is shared between both sides.
pub fn equivalent_with(
    p: &Nanophrase,
    q: &Nanophrase,
    data: &HomotopyData,
    budget: SearchBudget,
    kinds: MoveKinds,
) -> Equivalence {
    let (pc, qc) = (p.canonical_form(), q.canonical_form());
    if pc == qc {
        return Equivalence::Equivalent(Vec::new());
    }
    if p.len() != q.len() {
        return Equivalence::Unknown;
    }
    let half = SearchBudget {
        max_states: (budget.max_states / 2).max(1),
        max_depth: budget.max_depth.div_ceil(2),
        max_letters: budget.max_letters.max(pc.letter_count()).max(qc.letter_count()),
        ..budget
    };
    let mut fwd = Frontier::new(pc.clone(), data, kinds, half);
    let mut bwd = Frontier::new(qc.clone(), data, kinds, half);
    loop {
        let forward_turn = match (fwd.queue.is_empty(), bwd.queue.is_empty()) {
            (true, true) => return Equivalence::Unknown,
            (false, true) => true,
            (true, false) => false,
            (false, false) => fwd.nodes.len() <= bwd.nodes.len(),
        };
        let (me, other) = if forward_turn { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        let Some(added) = me.expand_one() else { continue };
        for j in added {
            if let Some(&k) = other.by_phrase.get(&me.nodes[j].phrase) {
                let path = if forward_turn {
                    let mut path = fwd.path_to(j);
                    path.extend(bwd.path_from(k));
                    path
                } else {
                    let mut path = fwd.path_to(k);
                    path.extend(bwd.path_from(j));
                    path
                };
                return match replay(&pc, data, &path) {
                    Ok(end) if end == qc => Equivalence::Equivalent(path),
                    _ => Equivalence::Unknown,
                };
            }
        }
    }
}

/// Applies a path step by step, canonicalizing after each move, and
/// returns the final phrase or the index of the first failing move.
pub fn replay(start: &Nanophrase, data: &HomotopyData, path: &[Move]) -> Result<Nanophrase, (usize, MoveError)> {
    let mut p = start.canonical_form();
    for (i, mv) in path.iter().enumerate() {
        p = apply(&p, data, mv).map_err(|e| (i, e))?.canonical_form();
    }
    Ok(p)
}
