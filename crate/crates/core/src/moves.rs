//! The rewrite engine: homotopy moves, the derived moves, the framed move
//! and the word operations (shift, inversion, permutation).
//!
//! Patterns are matched on the concatenation `w_1 ⋯ w_k`: the two-letter
//! sub-words a move touches may lie in different words, but each of them
//! sits inside a single word. Deletions and
//! triple exchanges name the letters they act on; insertions name the
//! symbol of the new letter and the [`Slot`]s the new occurrences will
//! occupy in the *output* phrase.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::BitOr;

use crate::data::{HomotopyData, Symbol};
use crate::phrase::{Letter, LetterId, Nanophrase, Slot};

/// The four exchange moves on three letters. Each swaps three adjacent
/// pairs `{A,B}`, `{A,C}`, `{B,C}` that appear in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TripleKind {
    /// `xAByACzBCt ↔ xBAyCAzCBt`, needs `(|A|,|B|,|C|) ∈ S`.
    H3,
    /// `xAByCAzBCt ↔ xBAyACzCBt`, needs `(|A|,τ|B|,|C|) ∈ S`.
    D1,
    /// `xAByCAzCBt ↔ xBAyACzBCt`, needs `(τ|A|,τ|B|,|C|) ∈ S`.
    D2,
    /// `xAByACzCBt ↔ xBAyCAzBCt`, needs `(τ|A|,|B|,|C|) ∈ S`.
    D3,
}

impl TripleKind {
    /// Reads kind and direction off the orientation of the three pairs
    /// (`true` when the pair reads `AB`, `AC`, `BC` respectively).
    fn classify(o: [bool; 3]) -> (TripleKind, bool) {
        match o {
            [true, true, true] => (TripleKind::H3, true),
            [false, false, false] => (TripleKind::H3, false),
            [true, false, true] => (TripleKind::D1, true),
            [false, true, false] => (TripleKind::D1, false),
            [true, false, false] => (TripleKind::D2, true),
            [false, true, true] => (TripleKind::D2, false),
            [true, true, false] => (TripleKind::D3, true),
            [false, false, true] => (TripleKind::D3, false),
        }
    }

    /// The triple that must lie in `S`.
    fn condition(self, data: &HomotopyData, [a, b, c]: [Symbol; 3]) -> [Symbol; 3] {
        match self {
            TripleKind::H3 => [a, b, c],
            TripleKind::D1 => [a, data.tau(b), c],
            TripleKind::D2 => [data.tau(a), data.tau(b), c],
            TripleKind::D3 => [data.tau(a), b, c],
        }
    }

    fn move_kind(self) -> MoveKind {
        match self {
            TripleKind::H3 => MoveKind::H3,
            TripleKind::D1 => MoveKind::D1,
            TripleKind::D2 => MoveKind::D2,
            TripleKind::D3 => MoveKind::D3,
        }
    }
}

/// A move descriptor, relative to the phrase it is applied to.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Move {
    /// `xAAy → xy`.
    H1Delete { a: LetterId },
    /// `xy → xAAy` with `|A| = symbol`.
    H1Insert { symbol: Symbol, at: [Slot; 2] },
    /// `xAByBAz → xyz` with `|B| = τ|A|`.
    H2Delete { a: LetterId, b: LetterId },
    /// `xyz → xAByBAz`, `|A| = symbol`; slots in order `A, B, B, A`.
    H2Insert { symbol: Symbol, at: [Slot; 4] },
    /// Exchange of three adjacent pairs; `letters = [A, B, C]`.
    Triple { kind: TripleKind, forward: bool, letters: [LetterId; 3] },
    /// `xAByABz → xyz` with `|B| = τ|A|` over admissible data.
    L2Delete { a: LetterId, b: LetterId },
    /// `xyz → xAByABz`; slots in order `A, B, A, B`.
    L2Insert { symbol: Symbol, at: [Slot; 4] },
    /// `xAAyBBz → xyz` with `|A| = ντ|B|`.
    FramedDelete { a: LetterId, b: LetterId },
    /// `xyz → xAAyBBz`; slots in order `A, A, B, B`.
    FramedInsert { symbol: Symbol, at: [Slot; 4] },
    /// ν-shift of a word: first letter moved to the end.
    Shift { word: usize },
    /// Inverse of [`Move::Shift`]: last letter moved to the front.
    Unshift { word: usize },
    /// ν-inversion of a word.
    Invert { word: usize },
    /// ν-permutation of words `word` and `word + 1`.
    Permute { word: usize },
}

/// Move families, used to filter enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MoveKind {
    H1Delete,
    H2Delete,
    L2Delete,
    FramedDelete,
    H3,
    D1,
    D2,
    D3,
    H1Insert,
    H2Insert,
    L2Insert,
    FramedInsert,
    Shift,
    Unshift,
    Invert,
    Permute,
}

impl MoveKind {
    pub const ALL: [MoveKind; 16] = [
        MoveKind::H1Delete,
        MoveKind::H2Delete,
        MoveKind::L2Delete,
        MoveKind::FramedDelete,
        MoveKind::H3,
        MoveKind::D1,
        MoveKind::D2,
        MoveKind::D3,
        MoveKind::H1Insert,
        MoveKind::H2Insert,
        MoveKind::L2Insert,
        MoveKind::FramedInsert,
        MoveKind::Shift,
        MoveKind::Unshift,
        MoveKind::Invert,
        MoveKind::Permute,
    ];

    pub fn is_insertion(self) -> bool {
        matches!(self, MoveKind::H1Insert | MoveKind::H2Insert | MoveKind::L2Insert | MoveKind::FramedInsert)
    }
}

/// A set of [`MoveKind`]s.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct MoveKinds(u32);

impl MoveKinds {
    pub const NONE: MoveKinds = MoveKinds(0);
    /// Deletions and exchanges that make up `S`-homotopy (no insertions).
    pub const REDUCING: MoveKinds = MoveKinds(
        MoveKinds::bit(MoveKind::H1Delete)
            | MoveKinds::bit(MoveKind::H2Delete)
            | MoveKinds::bit(MoveKind::L2Delete)
            | MoveKinds::bit(MoveKind::H3)
            | MoveKinds::bit(MoveKind::D1)
            | MoveKinds::bit(MoveKind::D2)
            | MoveKinds::bit(MoveKind::D3),
    );
    /// Primitive and derived `S`-homotopy moves in both directions
    /// (framed moves and word operations excluded).
    pub const HOMOTOPY: MoveKinds = MoveKinds(
        MoveKinds::REDUCING.0
            | MoveKinds::bit(MoveKind::H1Insert)
            | MoveKinds::bit(MoveKind::H2Insert)
            | MoveKinds::bit(MoveKind::L2Insert),
    );
    /// Framed homotopy: the framed move replaces the first move.
    pub const FRAMED: MoveKinds = MoveKinds(
        (MoveKinds::HOMOTOPY.0 & !MoveKinds::bit(MoveKind::H1Delete) & !MoveKinds::bit(MoveKind::H1Insert))
            | MoveKinds::bit(MoveKind::FramedDelete)
            | MoveKinds::bit(MoveKind::FramedInsert),
    );
    pub const WORD_OPS: MoveKinds = MoveKinds(
        MoveKinds::bit(MoveKind::Shift)
            | MoveKinds::bit(MoveKind::Unshift)
            | MoveKinds::bit(MoveKind::Invert)
            | MoveKinds::bit(MoveKind::Permute),
    );
    pub const ALL: MoveKinds = MoveKinds((1 << 16) - 1);

    const fn bit(k: MoveKind) -> u32 {
        1 << (k as u32)
    }

    pub const fn only(k: MoveKind) -> MoveKinds {
        MoveKinds(MoveKinds::bit(k))
    }

    pub fn contains(self, k: MoveKind) -> bool {
        self.0 & MoveKinds::bit(k) != 0
    }

    pub fn insertions(self) -> MoveKinds {
        MoveKinds(self.0 & MoveKind::ALL.iter().filter(|k| k.is_insertion()).fold(0, |m, &k| m | MoveKinds::bit(k)))
    }

    pub fn without_insertions(self) -> MoveKinds {
        MoveKinds(self.0 & !self.insertions().0)
    }
}

impl BitOr for MoveKinds {
    type Output = MoveKinds;
    fn bitor(self, rhs: MoveKinds) -> MoveKinds {
        MoveKinds(self.0 | rhs.0)
    }
}

impl From<MoveKind> for MoveKinds {
    fn from(k: MoveKind) -> Self {
        MoveKinds::only(k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoveError {
    /// The descriptor does not match the phrase (wrong pattern or letters).
    Stale,
    /// The pattern matches but the symbol condition fails.
    ConditionUnmet,
    /// The data has no shift involution.
    MissingShift,
    /// Lemma-2 moves need admissible data.
    NotAdmissible,
    EmptyWord,
    IndexOutOfRange,
    ForeignSymbol,
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            MoveError::Stale => "move does not match the phrase",
            MoveError::ConditionUnmet => "symbol condition of the move is not met",
            MoveError::MissingShift => "homotopy data has no shift involution",
            MoveError::NotAdmissible => "homotopy data is not admissible",
            MoveError::EmptyWord => "cannot shift an empty word",
            MoveError::IndexOutOfRange => "word index out of range",
            MoveError::ForeignSymbol => "symbol does not belong to the homotopy data",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for MoveError {}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::H1Delete { .. } => MoveKind::H1Delete,
            Move::H1Insert { .. } => MoveKind::H1Insert,
            Move::H2Delete { .. } => MoveKind::H2Delete,
            Move::H2Insert { .. } => MoveKind::H2Insert,
            Move::Triple { kind, .. } => kind.move_kind(),
            Move::L2Delete { .. } => MoveKind::L2Delete,
            Move::L2Insert { .. } => MoveKind::L2Insert,
            Move::FramedDelete { .. } => MoveKind::FramedDelete,
            Move::FramedInsert { .. } => MoveKind::FramedInsert,
            Move::Shift { .. } => MoveKind::Shift,
            Move::Unshift { .. } => MoveKind::Unshift,
            Move::Invert { .. } => MoveKind::Invert,
            Move::Permute { .. } => MoveKind::Permute,
        }
    }

    /// Renames letter ids through `map` (old id → new id), e.g. after
    /// canonicalizing the phrase the move refers to.
    pub fn relabel(&self, map: &[LetterId]) -> Move {
        let m = |id: &LetterId| map[id.index()];
        match self {
            Move::H1Delete { a } => Move::H1Delete { a: m(a) },
            Move::H2Delete { a, b } => Move::H2Delete { a: m(a), b: m(b) },
            Move::L2Delete { a, b } => Move::L2Delete { a: m(a), b: m(b) },
            Move::FramedDelete { a, b } => Move::FramedDelete { a: m(a), b: m(b) },
            Move::Triple { kind, forward, letters } => {
                Move::Triple { kind: *kind, forward: *forward, letters: letters.map(|l| map[l.index()]) }
            }
            other => other.clone(),
        }
    }

    /// Human-readable rendering with letter names taken from `phrase`.
    pub fn describe(&self, phrase: &Nanophrase, data: &HomotopyData) -> alloc::string::String {
        use alloc::format;
        let n = |id: &LetterId| phrase.letters().get(id.index()).map(|l| l.name.as_str()).unwrap_or("?");
        let slots = |at: &[Slot]| {
            at.iter().map(|s| format!("{}:{}", s.word + 1, s.offset + 1)).collect::<Vec<_>>().join(",")
        };
        match self {
            Move::H1Delete { a } => format!("H1 delete {}", n(a)),
            Move::H1Insert { symbol, at } => format!("H1 insert {} at {}", data.name(*symbol), slots(at)),
            Move::H2Delete { a, b } => format!("H2 delete {},{}", n(a), n(b)),
            Move::H2Insert { symbol, at } => format!("H2 insert {} at {}", data.name(*symbol), slots(at)),
            Move::Triple { kind, forward, letters } => format!(
                "{:?} {} {},{},{}",
                kind,
                if *forward { "forward" } else { "backward" },
                n(&letters[0]),
                n(&letters[1]),
                n(&letters[2])
            ),
            Move::L2Delete { a, b } => format!("L2 delete {},{}", n(a), n(b)),
            Move::L2Insert { symbol, at } => format!("L2 insert {} at {}", data.name(*symbol), slots(at)),
            Move::FramedDelete { a, b } => format!("framed delete {},{}", n(a), n(b)),
            Move::FramedInsert { symbol, at } => format!("framed insert {} at {}", data.name(*symbol), slots(at)),
            Move::Shift { word } => format!("shift word {}", word + 1),
            Move::Unshift { word } => format!("unshift word {}", word + 1),
            Move::Invert { word } => format!("invert word {}", word + 1),
            Move::Permute { word } => format!("permute words {},{}", word + 1, word + 2),
        }
    }
}

/// Flat coordinates of a phrase.
struct Layout {
    starts: Vec<usize>,
    lens: Vec<usize>,
}

impl Layout {
    fn of(lens: Vec<usize>) -> Self {
        let mut starts = Vec::with_capacity(lens.len());
        let mut acc = 0;
        for &l in &lens {
            starts.push(acc);
            acc += l;
        }
        Layout { starts, lens }
    }

    fn total(&self) -> usize {
        self.lens.iter().sum()
    }

    fn flat(&self, s: Slot) -> usize {
        self.starts[s.word] + s.offset
    }

    fn slot(&self, p: usize) -> Slot {
        for (r, (&st, &len)) in self.starts.iter().zip(&self.lens).enumerate() {
            if p >= st && p < st + len {
                return Slot::new(r, p - st);
            }
        }
        unreachable!("flat position out of range")
    }

    /// Words that a gap (a position between letters of the concatenation)
    /// can belong to.
    fn gap_words(&self, g: usize) -> Vec<usize> {
        (0..self.lens.len()).filter(|&r| self.starts[r] <= g && g <= self.starts[r] + self.lens[r]).collect()
    }
}

/// Flat positions of both occurrences of every letter.
fn positions(phrase: &Nanophrase) -> Vec<[usize; 2]> {
    let mut pos = vec![[usize::MAX; 2]; phrase.letter_count()];
    for (p, id) in phrase.flat().iter().enumerate() {
        let e = &mut pos[id.index()];
        if e[0] == usize::MAX {
            e[0] = p;
        } else {
            e[1] = p;
        }
    }
    pos
}

/// Word index of every flat position.
fn word_index(phrase: &Nanophrase) -> Vec<usize> {
    phrase.words().iter().enumerate().flat_map(|(r, w)| core::iter::repeat_n(r, w.len())).collect()
}

/// A matched exchange configuration: letters `[A,B,C]` and the three pairs.
struct TripleMatch {
    letters: [LetterId; 3],
    pairs: [[usize; 2]; 3],
    kind: TripleKind,
    forward: bool,
}

fn match_triple(pos: &[[usize; 2]], word_at: &[usize], letters: [LetterId; 3]) -> Option<TripleMatch> {
    let [a, b, c] = letters;
    if a == b || b == c || a == c {
        return None;
    }
    let (pa, pb, pc) = (pos[a.index()], pos[b.index()], pos[c.index()]);
    let adjacent = |x: usize, y: usize| (x + 1 == y || y + 1 == x) && word_at[x] == word_at[y];
    if !(adjacent(pa[0], pb[0]) && adjacent(pa[1], pc[0]) && adjacent(pb[1], pc[1])) {
        return None;
    }
    let pair = |x: usize, y: usize| [x.min(y), x.max(y)];
    let pairs = [pair(pa[0], pb[0]), pair(pa[1], pc[0]), pair(pb[1], pc[1])];
    if !(pairs[0][1] < pairs[1][0] && pairs[1][1] < pairs[2][0]) {
        return None;
    }
    let (kind, forward) = TripleKind::classify([pa[0] < pb[0], pa[1] < pc[0], pb[1] < pc[1]]);
    Some(TripleMatch { letters, pairs, kind, forward })
}

fn triple_matches(phrase: &Nanophrase) -> Vec<TripleMatch> {
    let flat = phrase.flat();
    let pos = positions(phrase);
    let word_at = word_index(phrase);
    let mut out = Vec::new();
    for p in 0..flat.len().saturating_sub(1) {
        let (u, v) = (flat[p], flat[p + 1]);
        if u == v || word_at[p] != word_at[p + 1] || pos[u.index()][0] != p || pos[v.index()][0] != p + 1 {
            continue;
        }
        // A is the letter of the first pair whose second occurrence comes first
        let (a, b) = if pos[u.index()][1] < pos[v.index()][1] { (u, v) } else { (v, u) };
        let sa = pos[a.index()][1];
        for q in [sa.wrapping_sub(1), sa + 1] {
            if q >= flat.len() {
                continue;
            }
            let c = flat[q];
            if c == a || c == b || pos[c.index()][0] != q {
                continue;
            }
            if let Some(m) = match_triple(&pos, &word_at, [a, b, c]) {
                out.push(m);
            }
        }
    }
    out
}

/// All applicable moves whose kind is in `kinds`, ordered by kind and
/// then by leftmost touched position. Insertion kinds enumerate every
/// symbol and every placement (including placements at word boundaries).
pub fn enumerate_moves(phrase: &Nanophrase, data: &HomotopyData, kinds: MoveKinds) -> Vec<Move> {
    let flat = phrase.flat();
    let pos = positions(phrase);
    let mut out: Vec<(MoveKind, usize, Move)> = Vec::new();
    let word_at = word_index(phrase);
    let adjacent = |x: usize, y: usize| y == x + 1 && word_at[x] == word_at[y];
    let adjacent_pair = |id: LetterId| adjacent(pos[id.index()][0], pos[id.index()][1]);

    if kinds.contains(MoveKind::H1Delete) {
        for id in phrase.letter_ids() {
            if adjacent_pair(id) {
                out.push((MoveKind::H1Delete, pos[id.index()][0], Move::H1Delete { a: id }));
            }
        }
    }

    let want_pairs = kinds.contains(MoveKind::H2Delete) || kinds.contains(MoveKind::L2Delete);
    if want_pairs {
        let l2_ok = kinds.contains(MoveKind::L2Delete) && data.is_admissible();
        for p in 0..flat.len().saturating_sub(1) {
            let (a, b) = (flat[p], flat[p + 1]);
            if a == b || !adjacent(p, p + 1) || pos[a.index()][0] != p || pos[b.index()][0] != p + 1 {
                continue;
            }
            if data.tau(phrase.symbol(a)) != phrase.symbol(b) {
                continue;
            }
            let (qa, qb) = (pos[a.index()][1], pos[b.index()][1]);
            if kinds.contains(MoveKind::H2Delete) && adjacent(qb, qa) {
                out.push((MoveKind::H2Delete, p, Move::H2Delete { a, b }));
            }
            if l2_ok && adjacent(qa, qb) {
                out.push((MoveKind::L2Delete, p, Move::L2Delete { a, b }));
            }
        }
    }

    if kinds.contains(MoveKind::FramedDelete) && data.has_shift() {
        for a in phrase.letter_ids().filter(|&a| adjacent_pair(a)) {
            for b in phrase.letter_ids().filter(|&b| adjacent_pair(b)) {
                if pos[b.index()][0] > pos[a.index()][1] && framed_condition(data, phrase.symbol(a), phrase.symbol(b)) {
                    out.push((MoveKind::FramedDelete, pos[a.index()][0], Move::FramedDelete { a, b }));
                }
            }
        }
    }

    for m in triple_matches(phrase) {
        let k = m.kind.move_kind();
        if !kinds.contains(k) {
            continue;
        }
        let syms = m.letters.map(|l| phrase.symbol(l));
        if data.has_triple(m.kind.condition(data, syms)) {
            out.push((k, m.pairs[0][0], Move::Triple { kind: m.kind, forward: m.forward, letters: m.letters }));
        }
    }

    for kind in [MoveKind::H1Insert, MoveKind::H2Insert, MoveKind::L2Insert, MoveKind::FramedInsert] {
        if kinds.contains(kind) {
            for mv in enumerate_insertions(phrase, data, kind) {
                out.push((kind, insertion_anchor(phrase, &mv), mv));
            }
        }
    }

    if data.has_shift() {
        for r in 0..phrase.len() {
            if !phrase.word(r).is_empty() {
                for (k, mv) in [(MoveKind::Shift, Move::Shift { word: r }), (MoveKind::Unshift, Move::Unshift { word: r })] {
                    if kinds.contains(k) {
                        out.push((k, r, mv));
                    }
                }
            }
            if kinds.contains(MoveKind::Invert) {
                out.push((MoveKind::Invert, r, Move::Invert { word: r }));
            }
            if kinds.contains(MoveKind::Permute) && r + 1 < phrase.len() {
                out.push((MoveKind::Permute, r, Move::Permute { word: r }));
            }
        }
    }

    out.sort();
    out.dedup();
    out.into_iter().map(|(_, _, m)| m).collect()
}

fn insertion_anchor(phrase: &Nanophrase, mv: &Move) -> usize {
    let at: &[Slot] = match mv {
        Move::H1Insert { at, .. } => at,
        Move::H2Insert { at, .. } | Move::L2Insert { at, .. } | Move::FramedInsert { at, .. } => at,
        _ => return 0,
    };
    // flat position in the output phrase
    let mut lens = phrase.word_lengths();
    for s in at {
        lens[s.word] += 1;
    }
    Layout::of(lens).flat(at[0])
}

fn framed_condition(data: &HomotopyData, a: Symbol, b: Symbol) -> bool {
    data.nu(data.tau(b)) == Some(a)
}

/// Output slots for letters inserted at `(gap, word)` placements, listed
/// in reading order.
fn output_slots(layout: &Layout, placements: &[(usize, usize)]) -> Vec<Slot> {
    let mut placed = vec![0usize; layout.lens.len()];
    placements
        .iter()
        .map(|&(g, r)| {
            let s = Slot::new(r, g - layout.starts[r] + placed[r]);
            placed[r] += 1;
            s
        })
        .collect()
}

fn enumerate_insertions(phrase: &Nanophrase, data: &HomotopyData, kind: MoveKind) -> Vec<Move> {
    if phrase.is_empty() {
        return Vec::new();
    }
    if kind == MoveKind::L2Insert && !data.is_admissible() {
        return Vec::new();
    }
    if kind == MoveKind::FramedInsert && !data.has_shift() {
        return Vec::new();
    }
    let layout = Layout::of(phrase.word_lengths());
    let n = layout.total();
    let mut placements: Vec<Vec<(usize, usize)>> = Vec::new();
    match kind {
        MoveKind::H1Insert => {
            for g in 0..=n {
                for r in layout.gap_words(g) {
                    placements.push(alloc::vec![(g, r), (g, r)]);
                }
            }
        }
        _ => {
            for g1 in 0..=n {
                for g2 in g1..=n {
                    // each inserted pair goes into a single word
                    let (w1, w2) = (layout.gap_words(g1), layout.gap_words(g2));
                    for &r1 in &w1 {
                        for &r2 in w2.iter().filter(|&&r2| g1 < g2 || r2 >= r1) {
                            placements.push(alloc::vec![(g1, r1), (g1, r1), (g2, r2), (g2, r2)]);
                        }
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for p in placements {
        let slots = output_slots(&layout, &p);
        for symbol in data.symbols() {
            let mv = match kind {
                MoveKind::H1Insert => Move::H1Insert { symbol, at: [slots[0], slots[1]] },
                MoveKind::H2Insert => Move::H2Insert { symbol, at: [slots[0], slots[1], slots[2], slots[3]] },
                MoveKind::L2Insert => Move::L2Insert { symbol, at: [slots[0], slots[1], slots[2], slots[3]] },
                _ => Move::FramedInsert { symbol, at: [slots[0], slots[1], slots[2], slots[3]] },
            };
            out.push(mv);
        }
    }
    out
}

/// Applies a move. Fails if the descriptor no longer matches the phrase or
/// the symbol condition does not hold.
pub fn apply(phrase: &Nanophrase, data: &HomotopyData, mv: &Move) -> Result<Nanophrase, MoveError> {
    apply_with_inverse(phrase, data, mv).map(|(p, _)| p)
}

/// Applies a move and returns a descriptor that undoes it on the output
/// (`None` for no move kinds at present; every kind is reversible).
pub fn apply_with_inverse(
    phrase: &Nanophrase,
    data: &HomotopyData,
    mv: &Move,
) -> Result<(Nanophrase, Move), MoveError> {
    let check_id = |id: &LetterId| if id.index() < phrase.letter_count() { Ok(()) } else { Err(MoveError::Stale) };
    match mv {
        Move::H1Delete { a } => {
            check_id(a)?;
            let pos = positions(phrase);
            let word_at = word_index(phrase);
            let pa = pos[a.index()];
            if !(pa[1] == pa[0] + 1 && word_at[pa[0]] == word_at[pa[1]]) {
                return Err(MoveError::Stale);
            }
            let inv = Move::H1Insert { symbol: phrase.symbol(*a), at: slots_of(phrase, &[pa[0], pa[1]]).try_into().unwrap() };
            Ok((delete_letters(phrase, &[*a]), inv))
        }
        Move::H2Delete { a, b } | Move::L2Delete { a, b } | Move::FramedDelete { a, b } => {
            check_id(a)?;
            check_id(b)?;
            if a == b {
                return Err(MoveError::Stale);
            }
            let pos = positions(phrase);
            let word_at = word_index(phrase);
            let adjacent = |x: usize, y: usize| y == x + 1 && word_at[x] == word_at[y];
            let (pa, pb) = (pos[a.index()], pos[b.index()]);
            let (sa, sb) = (phrase.symbol(*a), phrase.symbol(*b));
            let inv = match mv {
                Move::H2Delete { .. } => {
                    if !(adjacent(pa[0], pb[0]) && adjacent(pb[1], pa[1]) && pb[1] > pb[0]) {
                        return Err(MoveError::Stale);
                    }
                    if data.tau(sa) != sb {
                        return Err(MoveError::ConditionUnmet);
                    }
                    Move::H2Insert { symbol: sa, at: slots4(phrase, [pa[0], pb[0], pb[1], pa[1]]) }
                }
                Move::L2Delete { .. } => {
                    if !(adjacent(pa[0], pb[0]) && adjacent(pa[1], pb[1]) && pa[1] > pb[0]) {
                        return Err(MoveError::Stale);
                    }
                    if data.tau(sa) != sb {
                        return Err(MoveError::ConditionUnmet);
                    }
                    if !data.is_admissible() {
                        return Err(MoveError::NotAdmissible);
                    }
                    Move::L2Insert { symbol: sa, at: slots4(phrase, [pa[0], pb[0], pa[1], pb[1]]) }
                }
                _ => {
                    if !(adjacent(pa[0], pa[1]) && adjacent(pb[0], pb[1]) && pb[0] > pa[1]) {
                        return Err(MoveError::Stale);
                    }
                    if !data.has_shift() {
                        return Err(MoveError::MissingShift);
                    }
                    if !framed_condition(data, sa, sb) {
                        return Err(MoveError::ConditionUnmet);
                    }
                    Move::FramedInsert { symbol: sa, at: slots4(phrase, [pa[0], pa[1], pb[0], pb[1]]) }
                }
            };
            Ok((delete_letters(phrase, &[*a, *b]), inv))
        }
        Move::Triple { kind, forward, letters } => {
            for l in letters {
                check_id(l)?;
            }
            let pos = positions(phrase);
            let m = match_triple(&pos, &word_index(phrase), *letters).ok_or(MoveError::Stale)?;
            if m.kind != *kind || m.forward != *forward {
                return Err(MoveError::Stale);
            }
            let syms = letters.map(|l| phrase.symbol(l));
            if !data.has_triple(kind.condition(data, syms)) {
                return Err(MoveError::ConditionUnmet);
            }
            let layout = Layout::of(phrase.word_lengths());
            let mut words: Vec<Vec<LetterId>> = phrase.words().to_vec();
            for [x, y] in m.pairs {
                let (sx, sy) = (layout.slot(x), layout.slot(y));
                let tmp = words[sx.word][sx.offset];
                words[sx.word][sx.offset] = words[sy.word][sy.offset];
                words[sy.word][sy.offset] = tmp;
            }
            let inv = Move::Triple { kind: *kind, forward: !*forward, letters: *letters };
            Ok((Nanophrase::from_parts_unchecked(phrase.letters().to_vec(), words), inv))
        }
        Move::H1Insert { symbol, at } => {
            if !data.contains(*symbol) {
                return Err(MoveError::ForeignSymbol);
            }
            let out = insert_letters(phrase, at, &[0, 0], &[*symbol])?;
            let f = flat_of(&out, at);
            if f[1] != f[0] + 1 || at[0].word != at[1].word {
                return Err(MoveError::Stale);
            }
            let inv = Move::H1Delete { a: LetterId(phrase.letter_count() as u32) };
            Ok((out, inv))
        }
        Move::H2Insert { symbol, at } | Move::L2Insert { symbol, at } | Move::FramedInsert { symbol, at } => {
            if !data.contains(*symbol) {
                return Err(MoveError::ForeignSymbol);
            }
            let (roles, other) = match mv {
                Move::H2Insert { .. } => ([0, 1, 1, 0], data.tau(*symbol)),
                Move::L2Insert { .. } => {
                    if !data.is_admissible() {
                        return Err(MoveError::NotAdmissible);
                    }
                    ([0, 1, 0, 1], data.tau(*symbol))
                }
                _ => {
                    let nu = data.nu(*symbol).ok_or(MoveError::MissingShift)?;
                    ([0, 0, 1, 1], data.tau(nu))
                }
            };
            let out = insert_letters(phrase, at, &roles, &[*symbol, other])?;
            let f = flat_of(&out, at);
            let paired = at[0].word == at[1].word && at[2].word == at[3].word;
            if !(paired && f[1] == f[0] + 1 && f[3] == f[2] + 1 && f[2] > f[1]) {
                return Err(MoveError::Stale);
            }
            let a = LetterId(phrase.letter_count() as u32);
            let b = LetterId(phrase.letter_count() as u32 + 1);
            let inv = match mv {
                Move::H2Insert { .. } => Move::H2Delete { a, b },
                Move::L2Insert { .. } => Move::L2Delete { a, b },
                _ => Move::FramedDelete { a, b },
            };
            Ok((out, inv))
        }
        Move::Shift { word } => Ok((shift(phrase, data, *word)?, Move::Unshift { word: *word })),
        Move::Unshift { word } => Ok((unshift(phrase, data, *word)?, Move::Shift { word: *word })),
        Move::Invert { word } => Ok((invert(phrase, data, *word)?, Move::Invert { word: *word })),
        Move::Permute { word } => Ok((permute(phrase, data, *word)?, Move::Permute { word: *word })),
    }
}

fn slots_of(phrase: &Nanophrase, flat: &[usize]) -> Vec<Slot> {
    let layout = Layout::of(phrase.word_lengths());
    flat.iter().map(|&p| layout.slot(p)).collect()
}

fn slots4(phrase: &Nanophrase, flat: [usize; 4]) -> [Slot; 4] {
    slots_of(phrase, &flat).try_into().unwrap()
}

fn flat_of(phrase: &Nanophrase, at: &[Slot]) -> Vec<usize> {
    let layout = Layout::of(phrase.word_lengths());
    at.iter().map(|&s| layout.flat(s)).collect()
}

fn delete_letters(phrase: &Nanophrase, gone: &[LetterId]) -> Nanophrase {
    let mut map = vec![None; phrase.letter_count()];
    let mut letters = Vec::with_capacity(phrase.letter_count() - gone.len());
    for (i, l) in phrase.letters().iter().enumerate() {
        if !gone.contains(&LetterId(i as u32)) {
            map[i] = Some(LetterId(letters.len() as u32));
            letters.push(l.clone());
        }
    }
    let words = phrase
        .words()
        .iter()
        .map(|w| w.iter().filter_map(|id| map[id.index()]).collect())
        .collect();
    Nanophrase::from_parts_unchecked(letters, words)
}

/// Inserts new letters; `roles[i]` says which new letter occupies `at[i]`.
fn insert_letters(
    phrase: &Nanophrase,
    at: &[Slot],
    roles: &[usize],
    symbols: &[Symbol],
) -> Result<Nanophrase, MoveError> {
    let k = phrase.len();
    let mut out_lens = phrase.word_lengths();
    for s in at {
        if s.word >= k {
            return Err(MoveError::Stale);
        }
        out_lens[s.word] += 1;
    }
    for (i, s) in at.iter().enumerate() {
        if s.offset >= out_lens[s.word] || at[..i].contains(s) {
            return Err(MoveError::Stale);
        }
    }
    let base = phrase.letter_count();
    let mut letters = phrase.letters().to_vec();
    let mut start = base + 1;
    for &sym in symbols {
        let name = phrase.fresh_name(start);
        start = name[1..].parse::<usize>().unwrap_or(start) + 1;
        letters.push(Letter { name, symbol: sym });
    }
    let words = (0..k)
        .map(|r| {
            let mut src = phrase.word(r).iter();
            (0..out_lens[r])
                .map(|off| match at.iter().position(|s| *s == Slot::new(r, off)) {
                    Some(i) => LetterId((base + roles[i]) as u32),
                    None => *src.next().expect("lengths agree"),
                })
                .collect()
        })
        .collect();
    Ok(Nanophrase::from_parts_unchecked(letters, words))
}

/// ν-shift of word `r`: its first letter moves to the end, and its
/// projection goes through ν iff the letter occurs twice in that word.
pub fn shift(phrase: &Nanophrase, data: &HomotopyData, r: usize) -> Result<Nanophrase, MoveError> {
    rotate(phrase, data, r, true)
}

/// Inverse of [`shift`]: the last letter of word `r` moves to the front.
pub fn unshift(phrase: &Nanophrase, data: &HomotopyData, r: usize) -> Result<Nanophrase, MoveError> {
    rotate(phrase, data, r, false)
}

fn rotate(phrase: &Nanophrase, data: &HomotopyData, r: usize, left: bool) -> Result<Nanophrase, MoveError> {
    if !data.has_shift() {
        return Err(MoveError::MissingShift);
    }
    if r >= phrase.len() {
        return Err(MoveError::IndexOutOfRange);
    }
    let w = phrase.word(r);
    if w.is_empty() {
        return Err(MoveError::EmptyWord);
    }
    let moved = if left { w[0] } else { w[w.len() - 1] };
    let twice = w.iter().filter(|&&id| id == moved).count() == 2;
    let mut words = phrase.words().to_vec();
    if left {
        words[r].rotate_left(1);
    } else {
        words[r].rotate_right(1);
    }
    let out = Nanophrase::from_parts_unchecked(phrase.letters().to_vec(), words);
    Ok(if twice {
        out.map_symbols(|id, s| if id == moved { data.nu(s).expect("checked") } else { s })
    } else {
        out
    })
}

/// ν-inversion of word `r`: the word is reversed; letters occurring once
/// in it go through τ, letters occurring twice through ν.
pub fn invert(phrase: &Nanophrase, data: &HomotopyData, r: usize) -> Result<Nanophrase, MoveError> {
    if !data.has_shift() {
        return Err(MoveError::MissingShift);
    }
    if r >= phrase.len() {
        return Err(MoveError::IndexOutOfRange);
    }
    let counts = phrase.counts_in_word(r);
    let mut words = phrase.words().to_vec();
    words[r].reverse();
    let out = Nanophrase::from_parts_unchecked(phrase.letters().to_vec(), words);
    Ok(out.map_symbols(|id, s| match counts[id.index()] {
        1 => data.tau(s),
        2 => data.nu(s).expect("checked"),
        _ => s,
    }))
}

/// ν-permutation of words `i` and `i + 1` (0-based): they swap, and
/// letters occurring in both go through ν.
pub fn permute(phrase: &Nanophrase, data: &HomotopyData, i: usize) -> Result<Nanophrase, MoveError> {
    if !data.has_shift() {
        return Err(MoveError::MissingShift);
    }
    if i + 1 >= phrase.len() {
        return Err(MoveError::IndexOutOfRange);
    }
    let (c1, c2) = (phrase.counts_in_word(i), phrase.counts_in_word(i + 1));
    let mut words = phrase.words().to_vec();
    words.swap(i, i + 1);
    let out = Nanophrase::from_parts_unchecked(phrase.letters().to_vec(), words);
    Ok(out.map_symbols(|id, s| {
        if c1[id.index()] > 0 && c2[id.index()] > 0 {
            data.nu(s).expect("checked")
        } else {
            s
        }
    }))
}

/// Finds the descriptor of a move of the given family deleting or
/// exchanging exactly the named letters.
pub fn find_move(phrase: &Nanophrase, data: &HomotopyData, kind: MoveKind, letters: &[&str]) -> Option<Move> {
    let ids: Vec<LetterId> = letters.iter().map(|n| phrase.letter_id(n)).collect::<Option<_>>()?;
    enumerate_moves(phrase, data, kind.into()).into_iter().find(|m| match m {
        Move::H1Delete { a } => ids == [*a],
        Move::H2Delete { a, b } | Move::L2Delete { a, b } | Move::FramedDelete { a, b } => {
            ids.len() == 2 && ids.contains(a) && ids.contains(b)
        }
        Move::Triple { letters, .. } => ids.len() == 3 && letters.iter().all(|l| ids.contains(l)),
        _ => false,
    })
}
