//! Simplicial complexes: links, reduced homology over 𝔽₂, collapsibility,
//! and local obstructions of codes.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::sign::{ElementSet, MAX_GROUND};

/// A finite simplicial complex on the vertices `1..=vertices`.
///
/// Faces are closed under subsets. A nonempty complex contains `∅`; the
/// *void* complex has no faces at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    vertices: usize,
    faces: BTreeSet<ElementSet>,
}

impl SimplicialComplex {
    pub fn void(vertices: usize) -> Self {
        SimplicialComplex {
            vertices,
            faces: BTreeSet::new(),
        }
    }

    /// The downward closure of `facets`.
    pub fn from_facets(vertices: usize, facets: impl IntoIterator<Item = ElementSet>) -> Result<Self> {
        Error::check_capacity("vertex count", vertices, MAX_GROUND)?;
        let full = ElementSet::full(vertices);
        let mut faces = BTreeSet::new();
        for f in facets {
            if !f.is_subset(full) {
                return Err(Error::argument(format!("face {f} uses a vertex outside 1..={vertices}")));
            }
            if faces.contains(&f) {
                continue;
            }
            faces.extend(f.subsets());
        }
        Ok(SimplicialComplex { vertices, faces })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn faces(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.faces.iter().copied()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn contains(&self, face: ElementSet) -> bool {
        self.faces.contains(&face)
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Inclusion-maximal faces, in canonical order.
    pub fn facets(&self) -> Vec<ElementSet> {
        let faces: Vec<ElementSet> = self.faces.iter().copied().collect();
        faces
            .iter()
            .filter(|f| {
                (ElementSet::full(self.vertices) - **f)
                    .iter()
                    .all(|v| !self.faces.contains(&f.with(v)))
            })
            .copied()
            .collect()
    }

    /// `link_σ(Δ) = {τ ∈ Δ | τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`.
    pub fn link(&self, sigma: ElementSet) -> Result<Self> {
        if !self.faces.contains(&sigma) {
            return Err(Error::argument(format!("{sigma} is not a face of the complex")));
        }
        let faces = self
            .faces
            .iter()
            .filter(|t| t.is_disjoint(sigma) && self.faces.contains(&(**t | sigma)))
            .copied()
            .collect();
        Ok(SimplicialComplex {
            vertices: self.vertices,
            faces,
        })
    }

    /// A vertex lying in every facet, if any.
    pub fn cone_apex(&self) -> Option<usize> {
        let facets = self.facets();
        if facets.is_empty() {
            return None;
        }
        let common = facets
            .iter()
            .fold(ElementSet::full(self.vertices), |acc, f| acc & *f);
        common.iter().next()
    }

    /// Reduced homology over 𝔽₂.
    ///
    /// For the complex `{∅}` only `H̃₋₁` is nonzero; the void complex has
    /// no homology at all.
    pub fn reduced_homology(&self) -> ReducedHomology {
        if self.is_void() {
            return ReducedHomology {
                minus_one: 0,
                ranks: vec![],
            };
        }
        let top = self.faces.iter().map(|f| f.len()).max().unwrap_or(0);
        // by_size[k] lists the faces with k vertices (dimension k − 1).
        let mut by_size: Vec<Vec<ElementSet>> = vec![Vec::new(); top + 1];
        for f in &self.faces {
            by_size[f.len()].push(*f);
        }
        let index: Vec<HashMap<ElementSet, usize>> = by_size
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect())
            .collect();
        // boundary_rank[k] = rank of ∂ from size-k faces to size-(k−1) faces.
        let mut boundary_rank = vec![0usize; top + 2];
        for k in 1..=top {
            let rows: Vec<Vec<usize>> = by_size[k]
                .iter()
                .map(|f| f.iter().map(|v| index[k - 1][&f.without(v)]).collect())
                .collect();
            boundary_rank[k] = f2_rank(rows, by_size[k - 1].len());
        }
        let betti = |k: usize| by_size[k].len() - boundary_rank[k] - boundary_rank[k + 1];
        ReducedHomology {
            minus_one: betti(0),
            ranks: (1..=top).map(betti).collect(),
        }
    }

    /// Searches for a sequence of elementary collapses down to one vertex.
    pub fn collapsibility(&self, budget: u64) -> CollapseResult {
        collapse_search(self, budget)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("void");
        }
        let facets: Vec<String> = self.facets().iter().map(|s| s.to_string()).collect();
        write!(f, "⟨{}⟩", facets.join(", "))
    }
}

impl Code {
    /// `Δ(C)`, the closure of the code under taking subsets.
    pub fn simplicial_complex(&self) -> SimplicialComplex {
        let mut faces = BTreeSet::new();
        for w in self.words() {
            if !faces.contains(w) {
                faces.extend(w.subsets());
            }
        }
        SimplicialComplex {
            vertices: self.n(),
            faces,
        }
    }
}

/// Rank over 𝔽₂ of the matrix whose rows list the column indices holding a 1.
fn f2_rank(rows: Vec<Vec<usize>>, columns: usize) -> usize {
    let words = columns.div_ceil(64);
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    let mut rank = 0;
    for row in rows {
        let mut bits = vec![0u64; words];
        for c in row {
            bits[c / 64] ^= 1 << (c % 64);
        }
        while let Some(lead) = bits
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
        {
            match pivots.get(&lead) {
                Some(p) => {
                    for (b, q) in bits.iter_mut().zip(p) {
                        *b ^= q;
                    }
                }
                None => {
                    pivots.insert(lead, bits);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Ranks of reduced homology over 𝔽₂.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ReducedHomology {
    /// `H̃₋₁`, nonzero only for the complex `{∅}`.
    pub minus_one: usize,
    /// `H̃₀, H̃₁, …` up to the dimension of the complex.
    pub ranks: Vec<usize>,
}

impl ReducedHomology {
    pub fn is_zero(&self) -> bool {
        self.minus_one == 0 && self.ranks.iter().all(|r| *r == 0)
    }
}

/// Default node budget for collapse searches.
pub const DEFAULT_COLLAPSE_BUDGET: u64 = 1_000_000;

/// An elementary collapse removing `face` together with its unique coface `coface`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Collapse {
    pub face: ElementSet,
    pub coface: ElementSet,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CollapseOutcome {
    Yes(Vec<Collapse>),
    NoExhausted,
    BudgetExceeded,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CollapseResult {
    pub outcome: CollapseOutcome,
    pub nodes: u64,
}

/// Free pairs `(τ, σ)` in lexicographic order: `τ ≠ ∅` lies in exactly one
/// other face `σ`, which then has one more vertex.
fn free_pairs(faces: &BTreeSet<ElementSet>, vertices: usize) -> Vec<Collapse> {
    let full = ElementSet::full(vertices);
    let mut out = Vec::new();
    for t in faces.iter().filter(|t| !t.is_empty()) {
        let mut cofaces = (full - *t).iter().map(|v| t.with(v)).filter(|s| faces.contains(s));
        if let (Some(s), None) = (cofaces.next(), cofaces.next()) {
            out.push(Collapse { face: *t, coface: s });
        }
    }
    out
}

fn collapse_search(complex: &SimplicialComplex, budget: u64) -> CollapseResult {
    let mut nodes = 0u64;
    let mut seen: HashSet<Vec<ElementSet>> = HashSet::new();
    let mut path = Vec::new();
    let outcome = match dfs(&complex.faces, complex.vertices, budget, &mut nodes, &mut seen, &mut path) {
        Some(true) => CollapseOutcome::Yes(path),
        Some(false) => CollapseOutcome::NoExhausted,
        None => CollapseOutcome::BudgetExceeded,
    };
    CollapseResult { outcome, nodes }
}

/// `Some(true)` on success, `Some(false)` when exhausted, `None` on budget.
fn dfs(
    faces: &BTreeSet<ElementSet>,
    vertices: usize,
    budget: u64,
    nodes: &mut u64,
    seen: &mut HashSet<Vec<ElementSet>>,
    path: &mut Vec<Collapse>,
) -> Option<bool> {
    if faces.len() == 2 && faces.iter().all(|f| f.len() <= 1) {
        return Some(true);
    }
    if !seen.insert(faces.iter().copied().collect()) {
        return Some(false);
    }
    if *nodes >= budget {
        return None;
    }
    *nodes += 1;
    let mut exhausted = true;
    for pair in free_pairs(faces, vertices) {
        let mut next = faces.clone();
        next.remove(&pair.face);
        next.remove(&pair.coface);
        path.push(pair);
        match dfs(&next, vertices, budget, nodes, seen, path) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => exhausted = false,
        }
        path.pop();
        if !exhausted {
            return None;
        }
    }
    Some(false)
}

/// Why a link was judged contractible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Certificate {
    /// Reduced homology ranks (`H̃₋₁` first) witnessing non-contractibility.
    Homology(ReducedHomology),
    /// The link is a cone with this apex.
    Cone(usize),
    /// The link collapses to a point by this sequence.
    Collapse(Vec<Collapse>),
    /// Homology vanishes but no collapse was found within the budget.
    Inconclusive { homology: ReducedHomology, exhausted: bool },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinkStatus {
    Obstruction,
    Contractible,
    Unknown,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkAnalysis {
    pub sigma: ElementSet,
    pub status: LinkStatus,
    pub certificate: Certificate,
}

/// Analysis of each `σ ∈ Δ(C) ∖ C`, in canonical order of `σ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ObstructionReport {
    pub entries: Vec<LinkAnalysis>,
}

impl ObstructionReport {
    pub fn obstructions(&self) -> impl Iterator<Item = &LinkAnalysis> {
        self.entries
            .iter()
            .filter(|e| e.status == LinkStatus::Obstruction)
    }

    pub fn has_obstruction(&self) -> bool {
        self.obstructions().next().is_some()
    }
}

/// Largest code length accepted by [`local_obstructions`].
pub const MAX_OBSTRUCTION_N: usize = 16;

/// Classifies the link of every face of `Δ(C)` missing from `C`.
pub fn local_obstructions(code: &Code, budget: u64) -> Result<ObstructionReport> {
    Error::check_capacity("code length", code.n(), MAX_OBSTRUCTION_N)?;
    let delta = code.simplicial_complex();
    let mut entries = Vec::new();
    for sigma in delta.faces().filter(|s| !code.contains(*s)) {
        let link = delta.link(sigma)?;
        entries.push(analyze_link(sigma, &link, budget));
    }
    Ok(ObstructionReport { entries })
}

fn analyze_link(sigma: ElementSet, link: &SimplicialComplex, budget: u64) -> LinkAnalysis {
    let homology = link.reduced_homology();
    let (status, certificate) = if !homology.is_zero() {
        (LinkStatus::Obstruction, Certificate::Homology(homology))
    } else if let Some(v) = link.cone_apex() {
        (LinkStatus::Contractible, Certificate::Cone(v))
    } else {
        match link.collapsibility(budget).outcome {
            CollapseOutcome::Yes(seq) => (LinkStatus::Contractible, Certificate::Collapse(seq)),
            CollapseOutcome::NoExhausted => (
                LinkStatus::Unknown,
                Certificate::Inconclusive {
                    homology,
                    exhausted: true,
                },
            ),
            CollapseOutcome::BudgetExceeded => (
                LinkStatus::Unknown,
                Certificate::Inconclusive {
                    homology,
                    exhausted: false,
                },
            ),
        }
    };
    LinkAnalysis {
        sigma,
        status,
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(text: &str) -> ElementSet {
        text.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    }

    fn complex(v: usize, facets: &[&str]) -> SimplicialComplex {
        SimplicialComplex::from_facets(v, facets.iter().map(|f| set(f))).unwrap()
    }

    #[test]
    fn links() {
        let hollow = complex(3, &["12", "13", "23"]);
        assert_eq!(hollow.link(set("1")).unwrap(), complex(3, &["2", "3"]));
        assert_eq!(hollow.link(ElementSet::EMPTY).unwrap(), hollow);
        let simplex = complex(3, &["123"]);
        assert_eq!(simplex.link(set("1")).unwrap(), complex(3, &["23"]));
        assert!(hollow.link(set("123")).is_err());
    }

    #[test]
    fn homology_examples() {
        let two_points = complex(3, &["2", "3"]);
        assert_eq!(two_points.reduced_homology().ranks, vec![1]);
        let hollow = complex(3, &["12", "13", "23"]);
        assert_eq!(hollow.reduced_homology().ranks, vec![0, 1]);
        assert!(complex(3, &["123"]).reduced_homology().is_zero());
        let empty_face = complex(3, &[""]);
        assert_eq!(
            empty_face.reduced_homology(),
            ReducedHomology {
                minus_one: 1,
                ranks: vec![]
            }
        );
        assert!(SimplicialComplex::void(2).reduced_homology().is_zero());
        // Boundary of the tetrahedron: a 2-sphere.
        let sphere = complex(4, &["123", "124", "134", "234"]);
        assert_eq!(sphere.reduced_homology().ranks, vec![0, 0, 1]);
    }

    #[test]
    fn collapsibility_examples() {
        let two_points = complex(3, &["2", "3"]);
        assert_eq!(two_points.collapsibility(1000).outcome, CollapseOutcome::NoExhausted);
        let square = complex(4, &["123", "134"]);
        match square.collapsibility(1000).outcome {
            CollapseOutcome::Yes(seq) => assert_eq!(seq.len(), 5),
            other => panic!("{other:?}"),
        }
        assert_eq!(complex(3, &["123"]).cone_apex(), Some(1));
        let hollow = complex(3, &["12", "13", "23"]);
        assert_eq!(hollow.collapsibility(1000).outcome, CollapseOutcome::NoExhausted);
        assert_eq!(hollow.collapsibility(0).outcome, CollapseOutcome::BudgetExceeded);
    }

    #[test]
    fn code_complexes() {
        let c = Code::parse_compact(3, "∅ 12 23").unwrap();
        let d = c.simplicial_complex();
        let faces: Vec<ElementSet> = d.faces().collect();
        assert_eq!(faces, ["", "1", "2", "3", "12", "23"].map(set).to_vec());
        let c = Code::parse_compact(3, "∅").unwrap();
        assert_eq!(c.simplicial_complex().faces().collect::<Vec<_>>(), vec![ElementSet::EMPTY]);
    }

    #[test]
    fn obstruction_examples() {
        let c = Code::parse_compact(3, "∅ 12 13 23").unwrap();
        let report = local_obstructions(&c, DEFAULT_COLLAPSE_BUDGET).unwrap();
        let obstructions: Vec<ElementSet> = report.obstructions().map(|e| e.sigma).collect();
        assert_eq!(obstructions, vec![set("1"), set("2"), set("3")]);
        assert_eq!(
            report.entries[0].certificate,
            Certificate::Homology(ReducedHomology {
                minus_one: 0,
                ranks: vec![1]
            })
        );
        let full = Code::power_set(3).unwrap();
        assert!(local_obstructions(&full, 10).unwrap().entries.is_empty());
    }

    fn random_complex() -> impl Strategy<Value = SimplicialComplex> {
        (1usize..=6).prop_flat_map(|v| {
            proptest::collection::vec(0u64..(1 << v), 1..6)
                .prop_map(move |fs| SimplicialComplex::from_facets(v, fs.into_iter().map(ElementSet::from_bits)).unwrap())
        })
    }

    proptest! {
        #[test]
        fn cones_are_acyclic(base in random_complex()) {
            let apex = base.vertex_count() + 1;
            let cone = SimplicialComplex::from_facets(apex, base.facets().into_iter().map(|f| f.with(apex))).unwrap();
            prop_assert!(cone.reduced_homology().is_zero());
            prop_assert_eq!(cone.cone_apex().is_some(), true);
        }

        #[test]
        fn collapsible_implies_acyclic(delta in random_complex()) {
            if let CollapseOutcome::Yes(seq) = delta.collapsibility(10_000).outcome {
                prop_assert!(delta.reduced_homology().is_zero());
                let mut faces = delta.faces.clone();
                for c in seq {
                    prop_assert!(faces.remove(&c.face) && faces.remove(&c.coface));
                }
                prop_assert_eq!(faces.len(), 2);
            }
        }

        #[test]
        fn links_compose(delta in random_complex(), pick in 0usize..64, pick2 in 0usize..64) {
            let faces: Vec<ElementSet> = delta.faces().collect();
            let sigma = faces[pick % faces.len()];
            let inner = delta.link(sigma).unwrap();
            let inner_faces: Vec<ElementSet> = inner.faces().collect();
            let tau = inner_faces[pick2 % inner_faces.len()];
            prop_assert_eq!(delta.link(sigma | tau).unwrap(), inner.link(tau).unwrap());
        }

        #[test]
        fn euler_characteristic_matches(delta in random_complex()) {
            // Σ (−1)^k f_k = Σ (−1)^k rank H̃_k, both counted from dimension −1.
            let mut by_faces = 0i64;
            for f in delta.faces() {
                by_faces += if f.len() % 2 == 0 { -1 } else { 1 };
            }
            let h = delta.reduced_homology();
            let mut by_homology = -(h.minus_one as i64);
            for (k, r) in h.ranks.iter().enumerate() {
                by_homology += if k % 2 == 0 { *r as i64 } else { -(*r as i64) };
            }
            prop_assert_eq!(by_faces, by_homology);
        }
    }
}
