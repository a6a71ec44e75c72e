//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use nanoword::kei::{FiniteKei, KeiPresentation, Relation};
use nanoword::{HomotopyData, LaurentPoly, Nanophrase};

/// Bracket by summing over all smoothing states. Each position `j` of a
/// word has an incoming and an outgoing end joined to its cyclic
/// neighbours; a crossing joins `in(p)–out(q)`, `in(q)–out(p)` (weight
/// `t^ε`) or `in(p)–in(q)`, `out(p)–out(q)` (weight `t^-ε`).
pub fn state_sum_bracket(phrase: &Nanophrase, data: &HomotopyData) -> LaurentPoly {
    let sign: Vec<i32> = phrase.letters().iter().map(|l| if data.name(l.symbol) == "1" { 1 } else { -1 }).collect();
    let lens = phrase.word_lengths();
    let mut start = Vec::new();
    let mut total = 0;
    for &l in &lens {
        start.push(total);
        total += l;
    }
    let empty = lens.iter().filter(|&&l| l == 0).count();
    let mut occ = vec![Vec::new(); phrase.letter_count()];
    for (r, w) in phrase.words().iter().enumerate() {
        for (j, id) in w.iter().enumerate() {
            occ[id.index()].push(start[r] + j);
        }
    }
    let n = phrase.letter_count();
    let d = LaurentPoly::loop_value();
    let mut sum = LaurentPoly::zero();
    for state in 0u64..(1 << n) {
        // node 2p = in(p), 2p+1 = out(p)
        let mut uf: Vec<usize> = (0..2 * total).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        let mut join = |a: usize, b: usize| {
            let (x, y) = (find(&mut uf, a), find(&mut uf, b));
            uf[x] = y;
        };
        for (r, &l) in lens.iter().enumerate() {
            for j in 0..l {
                let p = start[r] + j;
                let next = start[r] + (j + 1) % l;
                join(2 * p + 1, 2 * next);
            }
        }
        let mut exp = 0;
        for (a, o) in occ.iter().enumerate() {
            let (p, q) = (o[0], o[1]);
            if state >> a & 1 == 0 {
                join(2 * p, 2 * q + 1);
                join(2 * q, 2 * p + 1);
                exp += sign[a];
            } else {
                join(2 * p, 2 * q);
                join(2 * p + 1, 2 * q + 1);
                exp -= sign[a];
            }
        }
        let mut loops = empty;
        for x in 0..2 * total {
            if find(&mut uf, x) == x {
                loops += 1;
            }
        }
        sum += &(&LaurentPoly::monomial(1, exp) * &d.pow(loops as u32 - 1));
    }
    sum
}

/// Fox colorings mod `p` of the diagram of a phrase over `α★`, read as a
/// Gauss code: the first passage of a letter is under for `a+`, `b-` and
/// over for `b+`, `a-`. Solves `2·over - in - out ≡ 0` by elimination.
pub fn fox_count(phrase: &Nanophrase, data: &HomotopyData, p: u64) -> u64 {
    fox_count_with(phrase, data, p, false)
}

/// `mirror` swaps over and under at every crossing.
pub fn fox_count_with(phrase: &Nanophrase, data: &HomotopyData, p: u64, mirror: bool) -> u64 {
    let first_under: Vec<bool> =
        phrase.letters().iter().map(|l| matches!(data.name(l.symbol), "a+" | "b-") != mirror).collect();
    let occ = phrase.occurrences();
    let is_under = |r: usize, i: usize, id: usize| {
        let first = occ[id].first == (r, i);
        first == first_under[id]
    };
    // arc index of every position: arcs break after under passages
    let mut arc_at: Vec<Vec<usize>> = Vec::new();
    let mut arcs = 0usize;
    for (r, w) in phrase.words().iter().enumerate() {
        let unders: Vec<usize> = (0..w.len()).filter(|&j| is_under(r, j + 1, w[j].index())).collect();
        if unders.is_empty() {
            arc_at.push(vec![arcs; w.len()]);
            arcs += 1;
            continue;
        }
        // the arc starting right after under passage u covers positions up to the next under
        let base = arcs;
        let mut at = vec![0; w.len()];
        for (k, &u) in unders.iter().enumerate() {
            let mut j = (u + 1) % w.len();
            loop {
                at[j] = base + k;
                if unders.contains(&j) {
                    break;
                }
                j = (j + 1) % w.len();
            }
        }
        arcs += unders.len();
        arc_at.push(at);
    }
    let pos = |(r, i): (usize, usize)| (r, i - 1);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (id, o) in occ.iter().enumerate() {
        let (f, s) = (pos(o.first), pos(o.second));
        let (under, over) = if first_under[id] { (f, s) } else { (s, f) };
        let (r, j) = under;
        let len = phrase.word(r).len();
        let incoming = arc_at[r][j];
        let outgoing = arc_at[r][(j + 1) % len];
        let mut row = vec![0u64; arcs];
        let ov = arc_at[over.0][over.1];
        row[ov] = (row[ov] + 2) % p;
        row[incoming] = (row[incoming] + p - 1) % p;
        row[outgoing] = (row[outgoing] + p - 1) % p;
        rows.push(row);
    }
    let rank = rank_mod(&mut rows, arcs, p);
    p.pow((arcs - rank) as u32)
}

fn rank_mod(rows: &mut [Vec<u64>], cols: usize, p: u64) -> usize {
    let inv = |a: u64| (1..p).find(|&b| a * b % p == 1).unwrap();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, piv);
        let k = inv(rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * k % p;
        }
        let pivot = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p * p - f * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Coloring count by trying every assignment of generators.
pub fn exhaustive_count(pres: &KeiPresentation, kei: &FiniteKei) -> u64 {
    let g = pres.generator_count();
    let m = kei.size();
    let mut val = vec![0usize; g];
    let mut count = 0;
    loop {
        let ok = pres.relations().iter().all(|r| match *r {
            Relation::Act { lhs, symbol, arg } => val[lhs] == kei.act(symbol, val[arg]),
            Relation::Op { lhs, symbol, left, right } => val[lhs] == kei.op(symbol, val[left], val[right]),
            Relation::Eq { lhs, rhs } => val[lhs] == val[rhs],
        });
        if ok {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == g {
                return count;
            }
            val[i] += 1;
            if val[i] < m {
                break;
            }
            val[i] = 0;
            i += 1;
        }
    }
}

pub fn phrase(data: &HomotopyData, letters: &[(&str, &str)], words: &[&str]) -> Nanophrase {
    Nanophrase::from_strs(data, letters, words).expect("valid fixture")
}

/// Fixtures over α★.
pub fn trefoil() -> Nanophrase {
    phrase(&nanoword::presets::alpha_star(), &[("A", "a+"), ("B", "b+"), ("C", "a+")], &["ABCABC"])
}

pub fn figure_eight() -> Nanophrase {
    phrase(
        &nanoword::presets::alpha_star(),
        &[("A", "b+"), ("B", "b-"), ("C", "a-"), ("D", "b+")],
        &["ABCADCBD"],
    )
}

/// Property-test settings without on-disk regression files.
pub fn config(cases: u32) -> proptest::test_runner::Config {
    proptest::test_runner::Config { cases, failure_persistence: None, ..Default::default() }
}
