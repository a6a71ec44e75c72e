//! Concrete homotopy data, the projections between them, kei data and the
//! triple sets they generate.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::data::{DataError, HomotopyData, Symbol, Triple};
use crate::phrase::Nanophrase;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PresetError {
    UnknownPreset(String),
    UnknownProjection(String),
    /// The map is not τ-equivariant at the named symbol.
    NotEquivariant(String),
    /// The image of a source triple is missing from the target triple set.
    TripleNotPreserved(String),
    /// A symbol outside the source data.
    ForeignSymbol(String),
    BadPartition(String),
    /// `a ∼ b` does not imply `τ(a) ∼ τ(b)`.
    NotTauCompatible(String),
    /// `τ(β) ≠ β`.
    BetaNotTauStable(String),
    EmptyGamma,
    Data(DataError),
}

impl fmt::Display for PresetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresetError::UnknownPreset(n) => {
                write!(f, "unknown preset `{n}` (expected alpha_0, alpha_star, alpha_1 or alpha_2)")
            }
            PresetError::UnknownProjection(n) => {
                write!(f, "unknown projection `{n}` (expected star_to_0, star_to_1, star_to_2 or zero_to_1)")
            }
            PresetError::NotEquivariant(s) => write!(f, "map does not commute with tau at `{s}`"),
            PresetError::TripleNotPreserved(t) => write!(f, "image of triple {t} is not in the target set"),
            PresetError::ForeignSymbol(s) => write!(f, "symbol `{s}` does not belong to the source data"),
            PresetError::BadPartition(s) => write!(f, "equivalence classes do not partition the symbols at `{s}`"),
            PresetError::NotTauCompatible(s) => write!(f, "equivalence is not compatible with tau at `{s}`"),
            PresetError::BetaNotTauStable(s) => write!(f, "beta is not tau-stable at `{s}`"),
            PresetError::EmptyGamma => write!(f, "color set must be non-empty"),
            PresetError::Data(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for PresetError {}

impl From<DataError> for PresetError {
    fn from(e: DataError) -> Self {
        PresetError::Data(e)
    }
}

/// `α₀ = {a, b}`, τ swapping, diagonal triples, ν swapping.
pub fn alpha_0() -> HomotopyData {
    HomotopyData::from_names(&["a", "b"], &[("a", "b")], &[["a", "a", "a"], ["b", "b", "b"]], Some(&[("a", "b")]))
        .expect("alpha_0 is well formed")
}

/// `α★ = {a+, a-, b+, b-}` with `τ(a±) = b∓`, the twelve triples of `S★`
/// and `ν(a±) = b±`.
pub fn alpha_star() -> HomotopyData {
    let triples = [
        ["a+", "a+", "a+"],
        ["a-", "a-", "a-"],
        ["a+", "a+", "a-"],
        ["a-", "a-", "a+"],
        ["a-", "a+", "a+"],
        ["a+", "a-", "a-"],
        ["b+", "b+", "b+"],
        ["b-", "b-", "b-"],
        ["b+", "b+", "b-"],
        ["b-", "b-", "b+"],
        ["b-", "b+", "b+"],
        ["b+", "b-", "b-"],
    ];
    HomotopyData::from_names(
        &["a+", "a-", "b+", "b-"],
        &[("a+", "b-"), ("a-", "b+")],
        &triples,
        Some(&[("a+", "b+"), ("a-", "b-")]),
    )
    .expect("alpha_star is well formed")
}

/// `α₁ = {1, -1}` with τ swapping, the six triples of `S₁` and `ν = id`.
pub fn alpha_1() -> HomotopyData {
    HomotopyData::from_names(
        &["1", "-1"],
        &[("1", "-1")],
        &[["1", "1", "1"], ["1", "1", "-1"], ["-1", "1", "1"], ["-1", "-1", "-1"], ["-1", "-1", "1"], ["1", "-1", "-1"]],
        Some(&[]),
    )
    .expect("alpha_1 is well formed")
}

/// `α₂ = {c, d}` with `τ = id`, the six triples of `S₂` and ν swapping.
pub fn alpha_2() -> HomotopyData {
    HomotopyData::from_names(
        &["c", "d"],
        &[],
        &[["c", "c", "c"], ["c", "c", "d"], ["d", "c", "c"], ["d", "d", "d"], ["d", "d", "c"], ["c", "d", "d"]],
        Some(&[("c", "d")]),
    )
    .expect("alpha_2 is well formed")
}

pub const PRESET_NAMES: [&str; 4] = ["alpha_0", "alpha_star", "alpha_1", "alpha_2"];

pub fn preset(name: &str) -> Result<HomotopyData, PresetError> {
    match name {
        "alpha_0" => Ok(alpha_0()),
        "alpha_star" => Ok(alpha_star()),
        "alpha_1" => Ok(alpha_1()),
        "alpha_2" => Ok(alpha_2()),
        other => Err(PresetError::UnknownPreset(String::from(other))),
    }
}

/// Name of the preset equal to `data`, if any.
pub fn preset_name(data: &HomotopyData) -> Option<&'static str> {
    PRESET_NAMES.into_iter().find(|n| preset(n).as_ref() == Ok(data))
}

/// A morphism of homotopy data: a τ-equivariant map sending `S` into `S'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DataMorphism {
    source: HomotopyData,
    target: HomotopyData,
    map: Vec<Symbol>,
}

impl DataMorphism {
    pub fn new(source: HomotopyData, target: HomotopyData, map: Vec<Symbol>) -> Result<Self, PresetError> {
        if map.len() != source.len() || map.iter().any(|s| !target.contains(*s)) {
            return Err(PresetError::Data(DataError::BadTable("morphism")));
        }
        for a in source.symbols() {
            if map[source.tau(a).index()] != target.tau(map[a.index()]) {
                return Err(PresetError::NotEquivariant(String::from(source.name(a))));
            }
        }
        for t in source.triples() {
            let image = [map[t[0].index()], map[t[1].index()], map[t[2].index()]];
            if !target.has_triple(image) {
                return Err(PresetError::TripleNotPreserved(format!(
                    "({},{},{})",
                    source.name(t[0]),
                    source.name(t[1]),
                    source.name(t[2])
                )));
            }
        }
        Ok(DataMorphism { source, target, map })
    }

    pub fn from_names(source: HomotopyData, target: HomotopyData, pairs: &[(&str, &str)]) -> Result<Self, PresetError> {
        let mut map = alloc::vec![None; source.len()];
        for &(a, b) in pairs {
            let a = source.symbol(a).ok_or_else(|| PresetError::ForeignSymbol(String::from(a)))?;
            let b = target.symbol(b).ok_or_else(|| PresetError::Data(DataError::UnknownSymbol(String::from(b))))?;
            map[a.index()] = Some(b);
        }
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| PresetError::ForeignSymbol(String::from(source.name(Symbol(i as u16))))))
            .collect::<Result<Vec<_>, _>>()?;
        DataMorphism::new(source, target, map)
    }

    pub fn identity(data: HomotopyData) -> Self {
        let map = data.symbols().collect();
        DataMorphism { source: data.clone(), target: data, map }
    }

    pub fn source(&self) -> &HomotopyData {
        &self.source
    }

    pub fn target(&self) -> &HomotopyData {
        &self.target
    }

    #[inline]
    pub fn image(&self, s: Symbol) -> Symbol {
        self.map[s.index()]
    }

    /// Whether `f ∘ ν = ν' ∘ f`; `None` when either side has no shift involution.
    pub fn commutes_with_shift(&self) -> Option<bool> {
        let (nu, nu2) = (self.source.shift_table()?, self.target.shift_table()?);
        Some(self.source.symbols().all(|a| self.map[nu[a.index()].index()] == nu2[self.map[a.index()].index()]))
    }

    /// Same letters and words, projections composed with the map.
    pub fn apply(&self, phrase: &Nanophrase) -> Result<Nanophrase, PresetError> {
        if let Some(l) = phrase.letters().iter().find(|l| !self.source.contains(l.symbol)) {
            return Err(PresetError::ForeignSymbol(l.name.clone()));
        }
        Ok(phrase.map_symbols(|_, s| self.map[s.index()]))
    }
}

pub const PROJECTION_NAMES: [&str; 4] = ["star_to_0", "star_to_1", "star_to_2", "zero_to_1"];

/// The named projections between presets.
pub fn projection(name: &str) -> Result<DataMorphism, PresetError> {
    match name {
        "star_to_0" => DataMorphism::from_names(
            alpha_star(),
            alpha_0(),
            &[("a+", "a"), ("a-", "a"), ("b+", "b"), ("b-", "b")],
        ),
        "star_to_1" => DataMorphism::from_names(
            alpha_star(),
            alpha_1(),
            &[("a+", "1"), ("b+", "1"), ("a-", "-1"), ("b-", "-1")],
        ),
        "star_to_2" => DataMorphism::from_names(
            alpha_star(),
            alpha_2(),
            &[("a+", "c"), ("b-", "c"), ("a-", "d"), ("b+", "d")],
        ),
        "zero_to_1" => DataMorphism::from_names(alpha_0(), alpha_1(), &[("a", "1"), ("b", "-1")]),
        other => Err(PresetError::UnknownProjection(String::from(other))),
    }
}

/// The inclusion `α₀ → α★`, `a ↦ a+`, `b ↦ b-`.
pub fn zero_to_star() -> DataMorphism {
    DataMorphism::from_names(alpha_0(), alpha_star(), &[("a", "a+"), ("b", "b-")]).expect("valid morphism")
}

/// Data for building keis of phrases: an equivalence relation on the
/// symbols compatible with τ, and a τ-stable subset `β`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeiDatum {
    data: HomotopyData,
    class_of: Vec<usize>,
    class_names: Vec<String>,
    beta: Vec<bool>,
}

impl KeiDatum {
    /// `classes` lists the equivalence classes by name; `beta` lists the
    /// members of `β`.
    pub fn new(data: HomotopyData, classes: &[(&str, &[&str])], beta: &[&str]) -> Result<Self, PresetError> {
        let mut class_of = alloc::vec![usize::MAX; data.len()];
        for (ci, (_, members)) in classes.iter().enumerate() {
            for m in *members {
                let s = data.symbol(m).ok_or_else(|| PresetError::ForeignSymbol(String::from(*m)))?;
                if class_of[s.index()] != usize::MAX {
                    return Err(PresetError::BadPartition(String::from(*m)));
                }
                class_of[s.index()] = ci;
            }
        }
        if let Some(i) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(PresetError::BadPartition(String::from(data.name(Symbol(i as u16)))));
        }
        let mut in_beta = alloc::vec![false; data.len()];
        for b in beta {
            let s = data.symbol(b).ok_or_else(|| PresetError::ForeignSymbol(String::from(*b)))?;
            in_beta[s.index()] = true;
        }
        let class_names = classes.iter().map(|(n, _)| String::from(*n)).collect();
        KeiDatum::from_parts(data, class_of, class_names, in_beta)
    }

    pub fn from_parts(
        data: HomotopyData,
        class_of: Vec<usize>,
        class_names: Vec<String>,
        beta: Vec<bool>,
    ) -> Result<Self, PresetError> {
        if class_of.len() != data.len() || beta.len() != data.len() || class_of.iter().any(|&c| c >= class_names.len()) {
            return Err(PresetError::Data(DataError::BadTable("kei datum")));
        }
        for a in data.symbols() {
            for b in data.symbols() {
                if class_of[a.index()] == class_of[b.index()]
                    && class_of[data.tau(a).index()] != class_of[data.tau(b).index()]
                {
                    return Err(PresetError::NotTauCompatible(String::from(data.name(a))));
                }
            }
            if beta[a.index()] != beta[data.tau(a).index()] {
                return Err(PresetError::BetaNotTauStable(String::from(data.name(a))));
            }
        }
        Ok(KeiDatum { data, class_of, class_names, beta })
    }

    pub fn data(&self) -> &HomotopyData {
        &self.data
    }

    /// The class `ā` of a symbol in `ᾱ = α/∼`.
    #[inline]
    pub fn class(&self, s: Symbol) -> usize {
        self.class_of[s.index()]
    }

    #[inline]
    pub fn in_beta(&self, s: Symbol) -> bool {
        self.beta[s.index()]
    }

    pub fn quotient_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn quotient_len(&self) -> usize {
        self.class_names.len()
    }

    /// The involution `τ̄` on `ᾱ`, indexed by class.
    pub fn quotient_tau(&self) -> Vec<usize> {
        let mut t = alloc::vec![usize::MAX; self.class_names.len()];
        for a in self.data.symbols() {
            t[self.class(a)] = self.class(self.data.tau(a));
        }
        // empty classes are not produced by `new`; keep them fixed
        for (i, v) in t.iter_mut().enumerate() {
            if *v == usize::MAX {
                *v = i;
            }
        }
        t
    }

    /// The same datum with `β` replaced by `α - β`.
    pub fn complemented(&self) -> KeiDatum {
        KeiDatum { beta: self.beta.iter().map(|b| !b).collect(), ..self.clone() }
    }

    pub fn equivalent(&self, a: Symbol, b: Symbol) -> bool {
        self.class(a) == self.class(b)
    }

    /// `β_0 = β`, `β_1 = α - β`.
    fn side(&self, s: Symbol) -> usize {
        if self.in_beta(s) {
            0
        } else {
            1
        }
    }

    /// Whether `ν(β) = α - β` and `a ∼ ν(a)` hold, so that hat keis are
    /// also invariant under ν-shifts and ν-permutations.
    pub fn supports_shift_invariance(&self) -> bool {
        match self.data.shift_table() {
            None => false,
            Some(nu) => self
                .data
                .symbols()
                .all(|a| self.in_beta(a) != self.in_beta(nu[a.index()]) && self.equivalent(a, nu[a.index()])),
        }
    }

    /// `(a, b, c) ∈ S(β, ∼)`.
    pub fn licenses(&self, [a, b, c]: Triple) -> bool {
        let tau = |s| self.data.tau(s);
        let (sa, sb, sc) = (self.side(a), self.side(b), self.side(c));
        let all_same = sa == sb && sb == sc && self.equivalent(a, b) && self.equivalent(b, c);
        let tail_flip = sa == sb && sc != sa && self.equivalent(a, b) && self.equivalent(b, tau(c));
        let head_flip = sb == sc && sa != sb && self.equivalent(tau(a), b) && self.equivalent(b, c);
        all_same || tail_flip || head_flip
    }
}

/// The homotopy data `(α, S(β, ∼))` (τ and ν are taken from the datum).
pub fn build_triples(datum: &KeiDatum) -> HomotopyData {
    let d = datum.data();
    let mut set = BTreeSet::new();
    for a in d.symbols() {
        for b in d.symbols() {
            for c in d.symbols() {
                if datum.licenses([a, b, c]) {
                    set.insert([a, b, c]);
                }
            }
        }
    }
    d.with_triples(set).expect("same symbols and involutions")
}

/// Link datum: `α★`, `a+ ∼ b+`, `a- ∼ b-`, `β = {a+, b-}`; `ᾱ = {+, -}`.
pub fn link_datum() -> KeiDatum {
    KeiDatum::new(alpha_star(), &[("+", &["a+", "b+"]), ("-", &["a-", "b-"])], &["a+", "b-"]).expect("valid datum")
}

/// Curve datum: `α₀`, equality, `β = α₀`.
pub fn curve_datum() -> KeiDatum {
    KeiDatum::new(alpha_0(), &[("a", &["a"]), ("b", &["b"])], &["a", "b"]).expect("valid datum")
}

/// Quasi-link datum: `α₂`, all symbols equivalent, `β = {c}`; `ᾱ` has one element.
pub fn quasi_datum() -> KeiDatum {
    KeiDatum::new(alpha_2(), &[("*", &["c", "d"])], &["c"]).expect("valid datum")
}

pub const DATUM_NAMES: [&str; 3] = ["link", "curve", "quasi"];

pub fn datum(name: &str) -> Option<KeiDatum> {
    match name {
        "link" => Some(link_datum()),
        "curve" => Some(curve_datum()),
        "quasi" => Some(quasi_datum()),
        _ => None,
    }
}

/// `γ`-colored product: `α★ × γ` with `τ × id`, `ν × id`, `β × γ` and
/// `(x, c) ∼ (y, d)` iff `x ∼ y` and `c = d`. Symbols are named `x@c`.
/// The returned data carries `S(β × γ, ∼_γ)`.
pub fn product_data(gamma: &[&str]) -> Result<(HomotopyData, KeiDatum), PresetError> {
    if gamma.is_empty() {
        return Err(PresetError::EmptyGamma);
    }
    let base = link_datum();
    let star = base.data();
    let m = star.len();
    let index = |x: Symbol, c: usize| Symbol((c * m + x.index()) as u16);
    let mut names = Vec::with_capacity(m * gamma.len());
    let mut tau = Vec::new();
    let mut nu = Vec::new();
    let mut class_of = Vec::new();
    let mut beta = Vec::new();
    for (c, color) in gamma.iter().enumerate() {
        for x in star.symbols() {
            names.push(format!("{}@{}", star.name(x), color));
            tau.push(index(star.tau(x), c));
            nu.push(index(star.nu(x).expect("alpha_star has a shift"), c));
            class_of.push(c * base.quotient_len() + base.class(x));
            beta.push(base.in_beta(x));
        }
    }
    let class_names = gamma
        .iter()
        .flat_map(|color| base.quotient_names().iter().map(move |q| format!("{q}@{color}")))
        .collect();
    let data = HomotopyData::new(names, tau, BTreeSet::new(), Some(nu))?;
    let datum = KeiDatum::from_parts(data, class_of, class_names, beta)?;
    let data = build_triples(&datum);
    let datum = KeiDatum::from_parts(data.clone(), datum.class_of, datum.class_names, datum.beta)?;
    Ok((data, datum))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(d: &HomotopyData, n: &str) -> Symbol {
        d.symbol(n).unwrap()
    }

    #[test]
    fn presets_are_admissible() {
        for name in PRESET_NAMES {
            assert!(preset(name).unwrap().is_admissible(), "{name}");
        }
        assert!(matches!(preset("alpha_9"), Err(PresetError::UnknownPreset(_))));
    }

    #[test]
    fn star_has_twelve_triples() {
        let d = alpha_star();
        assert_eq!(d.triples().len(), 12);
        let ap = sym(&d, "a+");
        assert!(d.has_triple([ap, ap, ap]));
    }

    #[test]
    fn alpha_1_triples_as_listed() {
        let d = alpha_1();
        let (p, m) = (sym(&d, "1"), sym(&d, "-1"));
        let expected: BTreeSet<Triple> =
            [[p, p, p], [p, p, m], [m, p, p], [m, m, m], [m, m, p], [p, m, m]].into_iter().collect();
        assert_eq!(d.triples(), &expected);
        assert!(d.symbols().all(|s| d.nu(s) == Some(s)));
    }

    #[test]
    fn projections_verify() {
        for name in PROJECTION_NAMES {
            projection(name).unwrap();
        }
        let p1 = projection("star_to_1").unwrap();
        let p2 = projection("star_to_2").unwrap();
        assert_eq!(p1.commutes_with_shift(), Some(true));
        assert_eq!(p2.commutes_with_shift(), Some(true));
        let s = alpha_star();
        let one = alpha_1();
        for (x, y) in [("a+", "1"), ("b+", "1"), ("a-", "-1"), ("b-", "-1")] {
            assert_eq!(p1.image(sym(&s, x)), sym(&one, y));
        }
        let two = alpha_2();
        for (x, y) in [("a+", "c"), ("b-", "c"), ("a-", "d"), ("b+", "d")] {
            assert_eq!(p2.image(sym(&s, x)), sym(&two, y));
        }
    }

    #[test]
    fn star_triples_land_in_s1() {
        // exhaustive check of the twelve images
        let p = projection("star_to_1").unwrap();
        for t in alpha_star().triples() {
            let img = [p.image(t[0]), p.image(t[1]), p.image(t[2])];
            assert!(alpha_1().has_triple(img));
        }
    }

    #[test]
    fn non_equivariant_map_is_rejected() {
        let err = DataMorphism::from_names(alpha_0(), alpha_1(), &[("a", "1"), ("b", "1")]).unwrap_err();
        assert!(matches!(err, PresetError::NotEquivariant(_)));
    }

    #[test]
    fn build_triples_reproduces_paper_sets() {
        assert_eq!(build_triples(&link_datum()).triples(), alpha_star().triples());
        assert_eq!(build_triples(&curve_datum()).triples(), alpha_0().triples());
        assert_eq!(build_triples(&quasi_datum()).triples(), alpha_2().triples());
    }

    #[test]
    fn built_triples_contain_diagonal() {
        for d in [link_datum(), curve_datum(), quasi_datum()] {
            let data = build_triples(&d);
            assert!(data.symbols().all(|a| data.has_triple([a, a, a])));
            assert!(data.is_admissible());
        }
    }

    #[test]
    fn datum_checks() {
        assert!(link_datum().supports_shift_invariance());
        assert!(quasi_datum().supports_shift_invariance());
        assert!(!curve_datum().supports_shift_invariance());
        let ok = KeiDatum::new(alpha_star(), &[("p", &["a+", "a-"]), ("q", &["b+", "b-"])], &[]);
        assert!(ok.is_ok());
        let bad = KeiDatum::new(alpha_star(), &[("p", &["a+", "a-"]), ("q", &["b+"]), ("r", &["b-"])], &[]);
        assert!(matches!(bad, Err(PresetError::NotTauCompatible(_))));
        let bad = KeiDatum::new(alpha_star(), &[("p", &["a+", "b+"]), ("q", &["a-", "b-"])], &["a+"]);
        assert!(matches!(bad, Err(PresetError::BetaNotTauStable(_))));
    }

    #[test]
    fn product_sizes() {
        let (d, k) = product_data(&["r", "g"]).unwrap();
        assert_eq!(d.len(), 8);
        assert_eq!(d.triples().len(), 24);
        assert_eq!(k.quotient_len(), 4);
        assert!(k.supports_shift_invariance());
        assert!(d.symbols().all(|s| d.tau(d.tau(s)) == s));
        assert!(d.symbols().all(|s| k.in_beta(s) == k.in_beta(d.tau(s))));
        let (one, _) = product_data(&["x"]).unwrap();
        assert_eq!(one.triples().len(), 12);
        assert!(matches!(product_data(&[]), Err(PresetError::EmptyGamma)));
    }

    #[test]
    fn single_color_product_is_alpha_star() {
        let (d, _) = product_data(&["x"]).unwrap();
        let star = alpha_star();
        let strip = |n: &str| String::from(n.trim_end_matches("@x"));
        let iso: Vec<(String, String)> = d.names().iter().map(|n| (n.clone(), strip(n))).collect();
        let pairs: Vec<(&str, &str)> = iso.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let m = DataMorphism::from_names(d.clone(), star.clone(), &pairs).unwrap();
        // bijective, and the triple sets have equal size, so triples correspond exactly
        assert_eq!(d.triples().len(), star.triples().len());
        assert_eq!(m.commutes_with_shift(), Some(true));
    }
}
