//! Combinatorial codes, trunks, code morphisms, and the codes of oriented matroids.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matroid::{GroundMap, OrientedMatroid};
use crate::sign::{ElementSet, MAX_ELEMENTS};

/// A set of codewords, each a subset of `{1, ..., n}`.
///
/// Codewords are kept deduplicated in graded lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Code {
    n: usize,
    words: Vec<ElementSet>,
}

impl Code {
    pub fn new(n: usize, words: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        Error::check_capacity("code length", n, MAX_ELEMENTS)?;
        let full = ElementSet::full(n);
        let mut words: Vec<ElementSet> = words.into_iter().collect();
        if let Some(bad) = words.iter().find(|w| !w.is_subset(full)) {
            return Err(Error::argument(format!("codeword {bad} is not a subset of [{n}]")));
        }
        words.sort();
        words.dedup();
        Ok(Code { n, words })
    }

    /// Builds a code from 1-based element lists.
    pub fn from_lists(n: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let words = lists
            .iter()
            .map(|w| ElementSet::from_elements(w.iter().copied(), n))
            .collect::<Result<Vec<_>>>()?;
        Code::new(n, words)
    }

    /// Parses compact codeword notation such as `"∅ 1 12 23"` (single-digit elements).
    pub fn parse_compact(n: usize, text: &str) -> Result<Self> {
        let mut words = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            if token == "∅" || token == "0" || token == "{}" {
                words.push(ElementSet::EMPTY);
                continue;
            }
            let digits = token
                .chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::parse(format!("invalid codeword {token:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            words.push(ElementSet::from_elements(digits, n)?);
        }
        Code::new(n, words)
    }

    /// The full code `2^[n]`.
    pub fn power_set(n: usize) -> Result<Self> {
        Error::check_capacity("code length", n, 20)?;
        Code::new(n, ElementSet::full(n).subsets())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[ElementSet] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: ElementSet) -> bool {
        self.words.binary_search(&w).is_ok()
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.words.iter().map(|w| w.to_vec()).collect()
    }

    /// `tk(σ) = {τ ∈ C | σ ⊆ τ}`.
    pub fn trunk(&self, sigma: ElementSet) -> Vec<ElementSet> {
        self.words
            .iter()
            .filter(|w| sigma.is_subset(**w))
            .copied()
            .collect()
    }

    /// Whether `s` is empty or equals `tk(∩s)`.
    pub fn is_trunk(&self, s: &[ElementSet]) -> bool {
        if s.is_empty() {
            return true;
        }
        let mut sorted = s.to_vec();
        sorted.sort();
        sorted.dedup();
        if sorted.iter().any(|w| !self.contains(*w)) {
            return false;
        }
        let meet = sorted
            .iter()
            .fold(ElementSet::full(self.n), |acc, w| acc & *w);
        self.trunk(meet) == sorted
    }

    /// The code `{τ ∈ C | σ ⊆ τ}` on the same neurons.
    pub fn trunk_code(&self, sigma: Option<ElementSet>) -> Code {
        let words = match sigma {
            Some(s) => self.trunk(s),
            None => Vec::new(),
        };
        Code { n: self.n, words }
    }

    /// Canonical defining sets of all distinct trunks: the intersections of
    /// nonempty families of codewords, plus `None` for the empty trunk.
    pub fn trunk_sets(&self) -> Vec<Option<ElementSet>> {
        let mut closed: HashSet<ElementSet> = self.words.iter().copied().collect();
        let mut frontier: Vec<ElementSet> = closed.iter().copied().collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for a in &frontier {
                for w in &self.words {
                    let m = *a & *w;
                    if closed.insert(m) {
                        next.push(m);
                    }
                }
            }
            frontier = next;
        }
        let mut sets: Vec<ElementSet> = closed.into_iter().collect();
        sets.sort();
        let mut out: Vec<Option<ElementSet>> = sets.into_iter().map(Some).collect();
        out.push(None);
        out
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.words.iter().map(|w| w.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A morphism given by trunks `tk(σ₁), ..., tk(σ_m)` of the source code;
/// `None` stands for the empty trunk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeMorphism {
    source: Code,
    trunks: Vec<Option<ElementSet>>,
}

impl CodeMorphism {
    pub fn new(source: Code, trunks: Vec<Option<ElementSet>>) -> Result<Self> {
        Error::check_capacity("morphism target length", trunks.len(), MAX_ELEMENTS)?;
        let full = ElementSet::full(source.n());
        if let Some(bad) = trunks.iter().flatten().find(|s| !s.is_subset(full)) {
            return Err(Error::argument(format!(
                "trunk set {bad} is not a subset of [{}]",
                source.n()
            )));
        }
        Ok(CodeMorphism { source, trunks })
    }

    /// The identity morphism `tk({1}), ..., tk({n})`.
    pub fn identity(source: Code) -> Self {
        let trunks = (1..=source.n()).map(|i| Some(ElementSet::singleton(i))).collect();
        CodeMorphism { source, trunks }
    }

    pub fn source(&self) -> &Code {
        &self.source
    }

    pub fn trunks(&self) -> &[Option<ElementSet>] {
        &self.trunks
    }

    /// `f(σ) = {i | σ ∈ Tᵢ}`.
    pub fn image_of(&self, sigma: ElementSet) -> ElementSet {
        self.trunks
            .iter()
            .enumerate()
            .filter(|(_, t)| t.is_some_and(|t| t.is_subset(sigma)))
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The image code on `m` neurons.
    pub fn apply(&self) -> Code {
        let words = self.source.words().iter().map(|w| self.image_of(*w));
        Code::new(self.trunks.len(), words).expect("image lies in [m]")
    }

    /// The codeword function `C → f(C)`.
    pub fn as_map(&self) -> BTreeMap<ElementSet, ElementSet> {
        self.source
            .words()
            .iter()
            .map(|w| (*w, self.image_of(*w)))
            .collect()
    }
}

/// Whether `map: C → D` pulls every simple trunk of `D` back to a trunk of `C`.
pub fn is_morphism(c: &Code, d: &Code, map: &BTreeMap<ElementSet, ElementSet>) -> Result<bool> {
    for w in c.words() {
        match map.get(w) {
            None => return Err(Error::argument(format!("map is undefined at codeword {w}"))),
            Some(v) if !d.contains(*v) => {
                return Err(Error::argument(format!(
                    "map sends {w} to {v}, which is not a codeword of the target"
                )))
            }
            _ => {}
        }
    }
    Ok(pulls_back_trunks(c, d, map))
}

fn pulls_back_trunks(c: &Code, d: &Code, map: &BTreeMap<ElementSet, ElementSet>) -> bool {
    (1..=d.n()).all(|i| {
        let pre: Vec<ElementSet> = c
            .words()
            .iter()
            .filter(|w| map[*w].contains(i))
            .copied()
            .collect();
        c.is_trunk(&pre)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeMode {
    /// Positive parts of topes.
    WPlus,
    /// Positive parts of covectors.
    LPlus,
    /// Positive and negative parts of covectors on `2n` neurons.
    LPlusMinus,
}

impl std::str::FromStr for CodeMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "W+" => Ok(CodeMode::WPlus),
            "L+" => Ok(CodeMode::LPlus),
            "Lpm" | "L+-" | "L±" => Ok(CodeMode::LPlusMinus),
            other => Err(Error::argument(format!("unknown code mode {other:?}"))),
        }
    }
}

/// `W⁺(M)`, `L⁺(M)` or `L±(M)`.
pub fn matroid_code(m: &OrientedMatroid, mode: CodeMode) -> Code {
    let n = m.n();
    let (len, words): (usize, Vec<ElementSet>) = match mode {
        CodeMode::WPlus => (n, m.topes().iter().map(|t| t.positive()).collect()),
        CodeMode::LPlus => (n, m.covectors().iter().map(|x| x.positive()).collect()),
        CodeMode::LPlusMinus => (
            2 * n,
            m.covectors()
                .iter()
                .map(|x| x.positive() | ElementSet::from_bits(x.negative().bits() << n))
                .collect(),
        ),
    };
    Code::new(len, words).expect("matroid codes fit their neuron count")
}

/// The code map `W⁺(M₂) → W⁺(M₁)`, `σ ↦ f̲⁻¹(σ)`, induced by a strong map `f: M₁ → M₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPlusMorphism {
    pub source: Code,
    pub target: Code,
    pub map: BTreeMap<ElementSet, ElementSet>,
}

pub fn w_plus_morphism(
    f: &GroundMap,
    m1: &OrientedMatroid,
    m2: &OrientedMatroid,
) -> Result<WPlusMorphism> {
    let source = matroid_code(m2, CodeMode::WPlus);
    let target = matroid_code(m1, CodeMode::WPlus);
    for (label, m) in [("source", m1), ("target", m2)] {
        if !m.is_acyclic() {
            let missing: Vec<String> = source
                .words()
                .iter()
                .map(|w| (*w, f.preimage(*w)))
                .filter(|(_, p)| !target.contains(*p))
                .map(|(w, p)| format!("{w} pulls back to {p}"))
                .collect();
            let hint = if missing.is_empty() {
                String::new()
            } else {
                format!("; outside W+ of the source: {}", missing.join(", "))
            };
            return Err(Error::NotAcyclic(format!(
                "the {label} matroid has no positive tope{hint}"
            )));
        }
    }
    let verdict = m1.is_strong_map(f, m2)?;
    if !verdict.verdict {
        return Err(Error::argument("the ground map does not induce a strong map"));
    }
    if verdict.one_sided {
        return Err(Error::argument(
            "the strong-map property could not be verified exhaustively for this target size",
        ));
    }
    let map: BTreeMap<ElementSet, ElementSet> =
        source.words().iter().map(|w| (*w, f.preimage(*w))).collect();
    if let Some((w, p)) = map.iter().find(|(_, p)| !target.contains(**p)) {
        return Err(Error::inconsistent(
            format!("preimage {p} of codeword {w} is not a positive tope part"),
            None,
        ));
    }
    if !is_morphism(&source, &target, &map)? {
        return Err(Error::inconsistent("induced code map is not a morphism", None));
    }
    Ok(WPlusMorphism { source, target, map })
}

/// Largest code accepted by [`is_isomorphic`].
pub const MAX_ISOMORPHISM_CODEWORDS: usize = 12;

/// Whether some bijective morphism `C → D` has a morphism inverse.
pub fn is_isomorphic(c: &Code, d: &Code) -> Result<bool> {
    Error::check_capacity("codewords", c.len().max(d.len()), MAX_ISOMORPHISM_CODEWORDS)?;
    Ok(find_isomorphism(c, d).is_some())
}

/// Searches for an isomorphism, returning it as a codeword map.
///
/// Morphisms are monotone for containment (preimages of trunks are
/// up-closed), so an isomorphism is an order isomorphism; candidates are
/// pruned by up/down degrees and by order preservation on assigned pairs.
pub fn find_isomorphism(c: &Code, d: &Code) -> Option<BTreeMap<ElementSet, ElementSet>> {
    if c.len() != d.len() {
        return None;
    }
    let profile = |code: &Code| -> Vec<(usize, usize)> {
        code.words()
            .iter()
            .map(|w| {
                let up = code.words().iter().filter(|v| w.is_subset(**v)).count();
                let down = code.words().iter().filter(|v| v.is_subset(*w)).count();
                (up, down)
            })
            .collect()
    };
    let pc = profile(c);
    let pd = profile(d);
    let mut sorted_c = pc.clone();
    let mut sorted_d = pd.clone();
    sorted_c.sort();
    sorted_d.sort();
    if sorted_c != sorted_d {
        return None;
    }
    let cw = c.words();
    let dw = d.words();
    let mut assignment: Vec<usize> = Vec::with_capacity(cw.len());
    let mut used = vec![false; dw.len()];

    fn search(
        cw: &[ElementSet],
        dw: &[ElementSet],
        pc: &[(usize, usize)],
        pd: &[(usize, usize)],
        c: &Code,
        d: &Code,
        assignment: &mut Vec<usize>,
        used: &mut [bool],
    ) -> Option<BTreeMap<ElementSet, ElementSet>> {
        let i = assignment.len();
        if i == cw.len() {
            let forward: BTreeMap<ElementSet, ElementSet> =
                assignment.iter().enumerate().map(|(a, &b)| (cw[a], dw[b])).collect();
            let backward: BTreeMap<ElementSet, ElementSet> =
                assignment.iter().enumerate().map(|(a, &b)| (dw[b], cw[a])).collect();
            if pulls_back_trunks(c, d, &forward) && pulls_back_trunks(d, c, &backward) {
                return Some(forward);
            }
            return None;
        }
        for j in 0..dw.len() {
            if used[j] || pc[i] != pd[j] {
                continue;
            }
            let consistent = assignment.iter().enumerate().all(|(a, &b)| {
                cw[a].is_subset(cw[i]) == dw[b].is_subset(dw[j])
                    && cw[i].is_subset(cw[a]) == dw[j].is_subset(dw[b])
            });
            if !consistent {
                continue;
            }
            used[j] = true;
            assignment.push(j);
            if let Some(found) = search(cw, dw, pc, pd, c, d, assignment, used) {
                return Some(found);
            }
            assignment.pop();
            used[j] = false;
        }
        None
    }

    search(cw, dw, &pc, &pd, c, d, &mut assignment, &mut used)
}

/// Evidence that `D ≤ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeqWitness {
    /// `D` is isomorphic to the trunk `tk(σ)` (`None`: the empty trunk).
    Trunk(Option<ElementSet>),
    /// `D` is isomorphic to the image of `C` under these trunks.
    Morphism(Vec<Option<ElementSet>>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LeqOutcome {
    Yes(LeqWitness),
    NoExhausted,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeqResult {
    pub outcome: LeqOutcome,
    /// Candidates evaluated (trunks plus trunk combinations).
    pub nodes: u64,
}

/// Searches for a witness that `D ≤ C`: first `D ≅ T` for a trunk `T` of
/// `C`, then `D ≅ f(C)` for morphisms given by sets of at most `D.n`
/// distinct trunks, in order of increasing total defining-set size.
/// Each candidate evaluated costs one node of `budget`.
pub fn leq_below(d: &Code, c: &Code, budget: u64) -> LeqResult {
    let mut nodes = 0u64;
    let done = |outcome, nodes| LeqResult { outcome, nodes };
    if d.len() > c.len() {
        return done(LeqOutcome::NoExhausted, nodes);
    }
    let trunks = c.trunk_sets();
    for t in &trunks {
        if nodes >= budget {
            return done(LeqOutcome::BudgetExceeded, nodes);
        }
        nodes += 1;
        let code = c.trunk_code(*t);
        if code.len() == d.len() && find_isomorphism(d, &code).is_some() {
            return done(LeqOutcome::Yes(LeqWitness::Trunk(*t)), nodes);
        }
        // The empty code is only isomorphic to the empty code.
    }

    let weight = |t: &Option<ElementSet>| match t {
        Some(s) => s.len(),
        None => c.n() + 1,
    };
    let mut order: Vec<Option<ElementSet>> = trunks.clone();
    order.sort_by_key(|t| (weight(t), t.is_none(), *t));
    let weights: Vec<usize> = order.iter().map(weight).collect();
    let max_k = d.n().min(order.len());

    // Best-first enumeration of index combinations by total weight.
    let mut heap: BinaryHeap<Reverse<(usize, usize, Vec<usize>)>> = BinaryHeap::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for k in 0..=max_k {
        let combo: Vec<usize> = (0..k).collect();
        let total = combo.iter().map(|&i| weights[i]).sum();
        seen.insert(combo.clone());
        heap.push(Reverse((total, k, combo)));
    }
    while let Some(Reverse((_, _, combo))) = heap.pop() {
        if nodes >= budget {
            return done(LeqOutcome::BudgetExceeded, nodes);
        }
        nodes += 1;
        let chosen: Vec<Option<ElementSet>> = combo.iter().map(|&i| order[i]).collect();
        let morphism = CodeMorphism {
            source: c.clone(),
            trunks: chosen.clone(),
        };
        let image = morphism.apply();
        if image.len() == d.len() && find_isomorphism(d, &image).is_some() {
            return done(LeqOutcome::Yes(LeqWitness::Morphism(chosen)), nodes);
        }
        for j in 0..combo.len() {
            let limit = if j + 1 < combo.len() { combo[j + 1] } else { order.len() };
            if combo[j] + 1 < limit {
                let mut next = combo.clone();
                next[j] += 1;
                if seen.insert(next.clone()) {
                    let total = next.iter().map(|&i| weights[i]).sum();
                    heap.push(Reverse((total, next.len(), next)));
                }
            }
        }
    }
    done(LeqOutcome::NoExhausted, nodes)
}

/// Serializable view of a trunk-defining set (`null` for the empty trunk).
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct TrunkSet(pub Option<Vec<usize>>);
