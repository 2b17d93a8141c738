//! Oriented matroids given by validated covector sets.
//!
//! Every other representation (topes, vectors, circuits, cocircuits) is
//! derived from the covectors on demand.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sign::{ElementSet, GroundSet, Sign, SignedElementSet, SignedVector, MAX_GROUND};

/// One violated axiom together with the first witness found in canonical order.
///
/// Witnesses are sign-vector strings; for the elimination axioms the last
/// entry is the element, written as a decimal string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport {
            valid: violations.is_empty(),
            violations,
        }
    }

    /// Axiom identifiers of all violations, in report order.
    pub fn axioms(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.axiom.as_str()).collect()
    }
}

fn violation(axiom: &str, witness: Vec<String>) -> Violation {
    Violation {
        axiom: axiom.to_string(),
        witness,
    }
}

fn canonical_set(n: usize, vectors: &[SignedVector]) -> Result<Vec<SignedVector>> {
    for v in vectors {
        if v.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: v.len(),
            });
        }
    }
    let mut out = vectors.to_vec();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Checks the covector axioms V1 (zero), V2 (symmetry), V3 (composition)
/// and V4 (elimination), reporting one witness per violated axiom.
pub fn validate_covectors(n: usize, vectors: &[SignedVector]) -> Result<ValidationReport> {
    let list = canonical_set(n, vectors)?;
    let set: HashSet<SignedVector> = list.iter().copied().collect();
    let mut violations = Vec::new();

    if !set.contains(&SignedVector::zero(n)) {
        violations.push(violation("V1", vec![]));
    }
    if let Some(x) = list.iter().find(|x| !set.contains(&x.negate())) {
        violations.push(violation("V2", vec![x.to_string()]));
    }
    'v3: for x in &list {
        for y in &list {
            if !set.contains(&x.compose_unchecked(y)) {
                violations.push(violation("V3", vec![x.to_string(), y.to_string()]));
                break 'v3;
            }
        }
    }
    if let Some((x, y, e)) = first_elimination_failure(&list, &set) {
        violations.push(violation("V4", vec![x.to_string(), y.to_string(), e.to_string()]));
    }
    Ok(ValidationReport::from_violations(violations))
}

/// Smallest `(X, Y, e)` in canonical order for which no eliminating covector exists.
fn first_elimination_failure(
    list: &[SignedVector],
    set: &HashSet<SignedVector>,
) -> Option<(SignedVector, SignedVector, usize)> {
    for (i, x) in list.iter().enumerate() {
        for (j, y) in list.iter().enumerate() {
            let sep = x.separator_unchecked(y);
            if sep.is_empty() {
                continue;
            }
            // The condition is symmetric in X and Y; a failing pair is
            // reported in its first canonical orientation.
            if j < i {
                continue;
            }
            let base = x.compose_unchecked(y);
            for e in sep.iter() {
                if !has_eliminant(&base, sep, e, list, set) {
                    return Some((*x, *y, e));
                }
            }
        }
    }
    None
}

/// Whether some covector is zero at `e` and equals `base` off `sep`.
fn has_eliminant(
    base: &SignedVector,
    sep: ElementSet,
    e: usize,
    list: &[SignedVector],
    set: &HashSet<SignedVector>,
) -> bool {
    let n = base.len();
    let fixed_pos = base.positive() - sep;
    let fixed_neg = base.negative() - sep;
    let free = sep.without(e);
    let free_count = free.len() as u32;
    if 3usize.saturating_pow(free_count) <= list.len() {
        free.subsets().any(|support| {
            support.subsets().any(|pos| {
                let z = SignedVector::from_parts_unchecked(
                    n,
                    fixed_pos | pos,
                    fixed_neg | (support - pos),
                );
                set.contains(&z)
            })
        })
    } else {
        let rest = ElementSet::full(n) - free;
        list.iter()
            .any(|z| z.positive() & rest == fixed_pos && z.negative() & rest == fixed_neg)
    }
}

/// Checks the circuit axioms C1 (no zero), C2 (symmetry), C3 (incomparability)
/// and C4 (weak elimination).
pub fn validate_circuits(n: usize, vectors: &[SignedVector]) -> Result<ValidationReport> {
    let list = canonical_set(n, vectors)?;
    let set: HashSet<SignedVector> = list.iter().copied().collect();
    let mut violations = Vec::new();

    if set.contains(&SignedVector::zero(n)) {
        violations.push(violation("C1", vec![SignedVector::zero(n).to_string()]));
    }
    if let Some(x) = list.iter().find(|x| !set.contains(&x.negate())) {
        violations.push(violation("C2", vec![x.to_string()]));
    }
    'c3: for x in &list {
        for y in &list {
            if x != y && *x != y.negate() && x.support().is_subset(y.support()) {
                violations.push(violation("C3", vec![x.to_string(), y.to_string()]));
                break 'c3;
            }
        }
    }
    'c4: for x in &list {
        for y in &list {
            if *x == y.negate() {
                continue;
            }
            for e in (x.positive() & y.negative()).iter() {
                let pos = (x.positive() | y.positive()).without(e);
                let neg = (x.negative() | y.negative()).without(e);
                let found = list
                    .iter()
                    .any(|z| z.positive().is_subset(pos) && z.negative().is_subset(neg));
                if !found {
                    violations.push(violation(
                        "C4",
                        vec![x.to_string(), y.to_string(), e.to_string()],
                    ));
                    break 'c4;
                }
            }
        }
    }
    Ok(ValidationReport::from_violations(violations))
}

/// Structural predicates of an oriented matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub acyclic: bool,
    pub loopless: bool,
    pub loops: Vec<usize>,
    pub rank: usize,
    pub uniform: bool,
}

/// The tope graph: topes joined when they are the two topes above a common covector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopeGraph {
    pub nodes: Vec<SignedVector>,
    /// `(i, j, label)` with `i < j` indexing `nodes`; the label is `sep(Tᵢ, Tⱼ)`.
    pub edges: Vec<(usize, usize, ElementSet)>,
}

impl TopeGraph {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(i, j, _) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// All-pairs graph distances (`usize::MAX` when unreachable).
    pub fn distances(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        (0..self.nodes.len())
            .map(|s| {
                let mut dist = vec![usize::MAX; self.nodes.len()];
                dist[s] = 0;
                let mut queue = VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    for &v in &adj[u] {
                        if dist[v] == usize::MAX {
                            dist[v] = dist[u] + 1;
                            queue.push_back(v);
                        }
                    }
                }
                dist
            })
            .collect()
    }
}

/// A map `E₁ ∪ {∘} → E₂ ∪ {∘}` fixing `∘`, extended to signed elements by `f(−e) = −f(e)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundMap {
    n1: usize,
    n2: usize,
    images: Vec<Option<usize>>,
}

impl GroundMap {
    /// `images[e - 1]` is `f(e)`, with `None` standing for `∘`.
    pub fn new(n1: usize, n2: usize, images: Vec<Option<usize>>) -> Result<Self> {
        if images.len() != n1 {
            return Err(Error::Dimension {
                expected: n1,
                found: images.len(),
            });
        }
        if let Some(bad) = images.iter().flatten().find(|&&t| t == 0 || t > n2) {
            return Err(Error::argument(format!("image {bad} outside 1..={n2}")));
        }
        Ok(GroundMap { n1, n2, images })
    }

    /// Builds a map from its action on signed elements: `positive[e - 1] = f(e)`
    /// and `negative[e - 1] = f(ē)`, both as signed integers with 0 for `∘`.
    /// Fails unless `f(ē) = −f(e)` everywhere.
    pub fn from_signed(n1: usize, n2: usize, positive: &[i64], negative: &[i64]) -> Result<Self> {
        if positive.len() != n1 || negative.len() != n1 {
            return Err(Error::Dimension {
                expected: n1,
                found: positive.len().max(negative.len()),
            });
        }
        let mut images = Vec::with_capacity(n1);
        for (e, (&p, &q)) in positive.iter().zip(negative).enumerate() {
            if p != -q {
                return Err(Error::argument(format!(
                    "map is not compatible with negation at element {}: f({}) = {p}, f(-{}) = {q}",
                    e + 1,
                    e + 1,
                    e + 1
                )));
            }
            if p < 0 {
                return Err(Error::argument(format!(
                    "element {} must map to an unsigned element or the base point",
                    e + 1
                )));
            }
            images.push(if p == 0 { None } else { Some(p as usize) });
        }
        GroundMap::new(n1, n2, images)
    }

    pub fn identity(n: usize) -> Self {
        GroundMap {
            n1: n,
            n2: n,
            images: (1..=n).map(Some).collect(),
        }
    }

    pub fn source_size(&self) -> usize {
        self.n1
    }

    pub fn target_size(&self) -> usize {
        self.n2
    }

    pub fn image(&self, e: usize) -> Option<usize> {
        self.images[e - 1]
    }

    pub fn images(&self) -> &[Option<usize>] {
        &self.images
    }

    /// `{e | f(e) = ∘}`.
    pub fn kernel(&self) -> ElementSet {
        (1..=self.n1).filter(|&e| self.image(e).is_none()).collect()
    }

    /// Unsigned preimage `f̲⁻¹(σ)`.
    pub fn preimage(&self, sigma: ElementSet) -> ElementSet {
        (1..=self.n1)
            .filter(|&e| self.image(e).is_some_and(|t| sigma.contains(t)))
            .collect()
    }

    /// Signed preimage; `∘` belongs to every set, so `±f⁻¹(∘)` is always included.
    pub fn signed_preimage(&self, s: &SignedElementSet) -> SignedElementSet {
        let kernel = self.kernel();
        let pos = kernel | self.preimage(s.positive());
        let neg = kernel | self.preimage(s.negative());
        SignedElementSet::new(self.n1, pos, neg).expect("preimage lies in the source ground set")
    }

    /// Image of a signed vector that avoids the kernel, as a subset of `±E₂`.
    pub fn signed_image(&self, x: &SignedVector) -> SignedElementSet {
        let mut pos = ElementSet::EMPTY;
        let mut neg = ElementSet::EMPTY;
        for e in x.positive().iter() {
            if let Some(t) = self.image(e) {
                pos = pos.with(t);
            }
        }
        for e in x.negative().iter() {
            if let Some(t) = self.image(e) {
                neg = neg.with(t);
            }
        }
        SignedElementSet::new(self.n2, pos, neg).expect("image lies in the target ground set")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StrongMapMethod {
    Exhaustive,
    CircuitImage,
}

/// Outcome of a strong-map check.
///
/// With [`StrongMapMethod::CircuitImage`] only a `false` verdict is
/// conclusive: the check verifies that every circuit avoiding the kernel maps
/// to a non-signed set or onto a superset of a target circuit, a condition
/// every strong map satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StrongMapVerdict {
    pub verdict: bool,
    pub method: StrongMapMethod,
    pub one_sided: bool,
}

/// Largest `2·n₂` for which strong maps are decided by enumerating all subsets of `±E₂`.
pub const EXHAUSTIVE_STRONG_MAP_LIMIT: usize = 12;

/// An oriented matroid on `{1, ..., n}` given by its covectors.
#[derive(Clone, Debug)]
pub struct OrientedMatroid {
    ground: GroundSet,
    covectors: Vec<SignedVector>,
    index: HashSet<SignedVector>,
    topes: Vec<SignedVector>,
    derived: OnceLock<(Vec<SignedVector>, Vec<SignedVector>)>,
}

impl PartialEq for OrientedMatroid {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.covectors == other.covectors
    }
}

impl Eq for OrientedMatroid {}

impl OrientedMatroid {
    /// Validates the covector axioms and builds the matroid.
    pub fn from_covectors(n: usize, covectors: &[SignedVector]) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let report = validate_covectors(n, covectors)?;
        if !report.valid {
            return Err(Error::inconsistent(
                format!("covector axioms violated: {}", report.axioms().join(", ")),
                Some(report),
            ));
        }
        Ok(Self::build(ground, covectors.to_vec()))
    }

    fn build(ground: GroundSet, mut covectors: Vec<SignedVector>) -> Self {
        covectors.sort();
        covectors.dedup();
        let index: HashSet<SignedVector> = covectors.iter().copied().collect();
        let top = covectors
            .iter()
            .fold(ElementSet::EMPTY, |acc, x| acc | x.support());
        let topes = covectors
            .iter()
            .filter(|x| x.support() == top)
            .copied()
            .collect();
        OrientedMatroid {
            ground,
            covectors,
            index,
            topes,
            derived: OnceLock::new(),
        }
    }

    /// Reconstructs covectors as the sign vectors orthogonal to every circuit.
    pub fn from_circuits(n: usize, circuits: &[SignedVector]) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        let report = validate_circuits(n, circuits)?;
        if !report.valid {
            return Err(Error::inconsistent(
                format!("circuit axioms violated: {}", report.axioms().join(", ")),
                Some(report),
            ));
        }
        let covectors: Vec<SignedVector> = SignedVector::all(n)
            .filter(|x| circuits.iter().all(|c| x.is_orthogonal_unchecked(c)))
            .collect();
        let report = validate_covectors(n, &covectors)?;
        if !report.valid {
            return Err(Error::inconsistent(
                "vectors orthogonal to the circuits do not form a covector set",
                Some(report),
            ));
        }
        Ok(Self::build(ground, covectors))
    }

    pub fn n(&self) -> usize {
        self.ground.size()
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    /// Covectors in canonical order.
    pub fn covectors(&self) -> &[SignedVector] {
        &self.covectors
    }

    pub fn is_covector(&self, x: &SignedVector) -> bool {
        self.index.contains(x)
    }

    /// Topes (covectors of maximal support) in canonical order.
    pub fn topes(&self) -> &[SignedVector] {
        &self.topes
    }

    /// Minimal nonzero covectors.
    pub fn cocircuits(&self) -> Vec<SignedVector> {
        support_minimal(&self.covectors)
    }

    fn derived(&self) -> &(Vec<SignedVector>, Vec<SignedVector>) {
        self.derived.get_or_init(|| {
            let vectors: Vec<SignedVector> = SignedVector::all(self.n())
                .filter(|v| self.covectors.iter().all(|x| v.is_orthogonal_unchecked(x)))
                .collect();
            let mut vectors = vectors;
            vectors.sort();
            let circuits = support_minimal(&vectors);
            (vectors, circuits)
        })
    }

    /// Vectors (sign vectors orthogonal to every covector) and circuits
    /// (support-minimal nonzero vectors), both in canonical order.
    ///
    /// Orthogonality to the topes alone admits extra sign vectors (on M₁,
    /// `+++` is orthogonal to every tope but not to `00+`), but it yields
    /// the same support-minimal members; that agreement is cross-checked.
    pub fn vectors_and_circuits(&self) -> Result<(Vec<SignedVector>, Vec<SignedVector>)> {
        Error::check_capacity("ground set size", self.n(), MAX_GROUND)?;
        let (vectors, circuits) = self.derived();
        let tope_orthogonal: Vec<SignedVector> = SignedVector::all(self.n())
            .filter(|v| self.topes.iter().all(|t| v.is_orthogonal_unchecked(t)))
            .collect();
        if support_minimal(&tope_orthogonal) != *circuits {
            return Err(Error::inconsistent(
                "minimal sign vectors orthogonal to the topes differ from the circuits",
                None,
            ));
        }
        Ok((vectors.clone(), circuits.clone()))
    }

    /// Proper circuits in canonical order.
    pub fn circuits(&self) -> &[SignedVector] {
        &self.derived().1
    }

    pub fn vectors(&self) -> &[SignedVector] {
        &self.derived().0
    }

    /// `M ∖ delete / contract`, relabelled onto `1..` in increasing order of surviving elements.
    pub fn minor(&self, delete: ElementSet, contract: ElementSet) -> Result<Self> {
        if !delete.is_disjoint(contract) {
            return Err(Error::argument("delete and contract sets overlap"));
        }
        let full = self.ground.elements();
        if !(delete | contract).is_subset(full) {
            return Err(Error::argument("minor sets exceed the ground set"));
        }
        let keep = full - delete - contract;
        if keep.is_empty() {
            return Err(Error::argument("minor would have an empty ground set"));
        }
        let covectors: Vec<SignedVector> = self
            .covectors
            .iter()
            .filter(|x| x.support().is_disjoint(contract))
            .map(|x| x.restrict(keep))
            .collect();
        let m = keep.len();
        let report = validate_covectors(m, &covectors)?;
        if !report.valid {
            return Err(Error::inconsistent("minor fails the covector axioms", Some(report)));
        }
        Ok(Self::build(GroundSet::new(m)?, covectors))
    }

    pub fn delete(&self, delete: ElementSet) -> Result<Self> {
        self.minor(delete, ElementSet::EMPTY)
    }

    pub fn contract(&self, contract: ElementSet) -> Result<Self> {
        self.minor(ElementSet::EMPTY, contract)
    }

    /// Elements that are zero in every covector.
    pub fn loops(&self) -> ElementSet {
        let support = self
            .covectors
            .iter()
            .fold(ElementSet::EMPTY, |acc, x| acc | x.support());
        self.ground.elements() - support
    }

    pub fn is_acyclic(&self) -> bool {
        self.topes.iter().any(|t| t.negative().is_empty()) && self.loops().is_empty()
    }

    /// Length of a longest chain `0 = X₀ < X₁ < … < X_r` in the face order.
    pub fn rank(&self) -> usize {
        let mut order: Vec<&SignedVector> = self.covectors.iter().collect();
        order.sort_by_key(|x| x.support().len());
        let mut height: HashMap<SignedVector, usize> = HashMap::new();
        let mut best = 0;
        for (i, x) in order.iter().enumerate() {
            let h = order[..i]
                .iter()
                .filter(|y| y.conforms_to(x) && **y != *x)
                .filter_map(|y| height.get(y))
                .map(|h| h + 1)
                .max()
                .unwrap_or(0);
            height.insert(**x, h);
            best = best.max(h);
        }
        best
    }

    pub fn structure_flags(&self) -> StructureFlags {
        let loops = self.loops();
        let rank = self.rank();
        let n = self.n();
        let uniform = self
            .cocircuits()
            .iter()
            .all(|c| c.support().len() + rank == n + 1);
        StructureFlags {
            acyclic: self.is_acyclic(),
            loopless: loops.is_empty(),
            loops: loops.to_vec(),
            rank,
            uniform,
        }
    }

    /// Topes lying above `z` in the face order.
    fn topes_above(&self, z: &SignedVector) -> usize {
        self.topes.iter().filter(|t| z.conforms_to(t)).count()
    }

    pub fn tope_graph(&self) -> TopeGraph {
        let nodes = self.topes.clone();
        let mut edges = Vec::new();
        for i in 0..nodes.len() {
            for j in i + 1..nodes.len() {
                let sep = nodes[i].separator_unchecked(&nodes[j]);
                let z = SignedVector::from_parts_unchecked(
                    self.n(),
                    nodes[i].positive() - sep,
                    nodes[i].negative() - sep,
                );
                if self.is_covector(&z) && self.topes_above(&z) == 2 {
                    edges.push((i, j, sep));
                }
            }
        }
        TopeGraph { nodes, edges }
    }

    /// Topes with the given sign at `e`.
    pub fn half_space(&self, e: usize, sign: Sign) -> Vec<SignedVector> {
        self.topes
            .iter()
            .filter(|t| t.get(e) == sign)
            .copied()
            .collect()
    }

    /// Whether every shortest tope-graph path between members of `q` stays in `q`.
    pub fn is_t_convex(&self, q: &[SignedVector]) -> Result<bool> {
        let graph = self.tope_graph();
        let position: HashMap<SignedVector, usize> =
            graph.nodes.iter().enumerate().map(|(i, t)| (*t, i)).collect();
        let mut members = Vec::with_capacity(q.len());
        for t in q {
            match position.get(t) {
                Some(&i) => members.push(i),
                None => return Err(Error::argument(format!("{t} is not a tope"))),
            }
        }
        let inside: HashSet<usize> = members.iter().copied().collect();
        let dist = graph.distances();
        for &u in &members {
            for &v in &members {
                let d = dist[u][v];
                if d == usize::MAX {
                    continue;
                }
                for w in 0..graph.nodes.len() {
                    if inside.contains(&w) {
                        continue;
                    }
                    let (a, b) = (dist[u][w], dist[w][v]);
                    if a != usize::MAX && b != usize::MAX && a + b == d {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `x` is forced into every convex superset of `s` when some circuit
    /// `C` has `−x ∈ C ⊆ s ∪ {−x}`. Returns the first forced signed element.
    fn forced_element(&self, s: &SignedElementSet) -> Option<(usize, Sign)> {
        for c in self.circuits() {
            for e in c.support().iter() {
                let sign = c.get(e);
                // x = −(e, sign); skip when x is already present.
                let x_in_s = match sign {
                    Sign::Plus => s.negative().contains(e),
                    _ => s.positive().contains(e),
                };
                if x_in_s {
                    continue;
                }
                let rest = SignedVector::from_parts_unchecked(
                    c.len(),
                    c.positive().without(e),
                    c.negative().without(e),
                );
                if s.contains_vector(&rest) {
                    return Some((e, sign.negate()));
                }
            }
        }
        None
    }

    pub fn is_convex_set(&self, s: &SignedElementSet) -> Result<bool> {
        self.check_signed_set(s)?;
        Ok(self.forced_element(s).is_none())
    }

    /// Intersection of all convex supersets of `s`.
    pub fn convex_closure(&self, s: &SignedElementSet) -> Result<SignedElementSet> {
        self.check_signed_set(s)?;
        let mut cur = *s;
        while let Some((e, sign)) = self.forced_element(&cur) {
            let (mut pos, mut neg) = (cur.positive(), cur.negative());
            match sign {
                Sign::Plus => pos = pos.with(e),
                _ => neg = neg.with(e),
            }
            cur = SignedElementSet::new(self.n(), pos, neg)?;
        }
        Ok(cur)
    }

    fn check_signed_set(&self, s: &SignedElementSet) -> Result<()> {
        if s.len() != self.n() {
            return Err(Error::Dimension {
                expected: self.n(),
                found: s.len(),
            });
        }
        Ok(())
    }

    /// Decides whether `f` induces a strong map `self → target`.
    pub fn is_strong_map(&self, f: &GroundMap, target: &OrientedMatroid) -> Result<StrongMapVerdict> {
        if f.source_size() != self.n() || f.target_size() != target.n() {
            return Err(Error::argument(format!(
                "map is {} → {}, matroids are on {} and {} elements",
                f.source_size(),
                f.target_size(),
                self.n(),
                target.n()
            )));
        }
        if 2 * target.n() <= EXHAUSTIVE_STRONG_MAP_LIMIT {
            let verdict = SignedElementSet::all(target.n()).all(|s| {
                target.forced_element(&s).is_some()
                    || self.forced_element(&f.signed_preimage(&s)).is_none()
            });
            return Ok(StrongMapVerdict {
                verdict,
                method: StrongMapMethod::Exhaustive,
                one_sided: false,
            });
        }
        Ok(StrongMapVerdict {
            verdict: self.circuit_image_condition(f, target),
            method: StrongMapMethod::CircuitImage,
            one_sided: true,
        })
    }

    /// Every circuit avoiding the kernel has a non-signed image or an image
    /// containing a circuit of `target`.
    pub fn circuit_image_condition(&self, f: &GroundMap, target: &OrientedMatroid) -> bool {
        let kernel = f.kernel();
        self.circuits().iter().all(|c| {
            if !c.support().is_disjoint(kernel) {
                return true;
            }
            let image = f.signed_image(c);
            !image.is_signed() || target.circuits().iter().any(|d| image.contains_vector(d))
        })
    }
}

/// Nonzero members whose support contains no other member's support.
fn support_minimal(vectors: &[SignedVector]) -> Vec<SignedVector> {
    let mut by_size: Vec<&SignedVector> = vectors.iter().filter(|v| !v.is_zero()).collect();
    by_size.sort_by_key(|v| v.support().len());
    let mut minimal_supports: Vec<ElementSet> = Vec::new();
    let mut out = Vec::new();
    for v in by_size {
        let s = v.support();
        if minimal_supports.iter().any(|m| m.is_subset(s) && *m != s) {
            continue;
        }
        if !minimal_supports.contains(&s) {
            minimal_supports.push(s);
        }
        out.push(*v);
    }
    out.sort();
    out
}

/// An oriented matroid with a distinguished non-loop element `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineOrientedMatroid {
    base: OrientedMatroid,
    g: usize,
}

impl AffineOrientedMatroid {
    pub fn new(base: OrientedMatroid, g: usize) -> Result<Self> {
        if g == 0 || g > base.n() {
            return Err(Error::argument(format!("element {g} outside 1..={}", base.n())));
        }
        if base.loops().contains(g) {
            return Err(Error::argument(format!("element {g} is a loop")));
        }
        Ok(AffineOrientedMatroid { base, g })
    }

    pub fn base(&self) -> &OrientedMatroid {
        &self.base
    }

    pub fn g(&self) -> usize {
        self.g
    }

    /// `𝓛⁺ = {X | X_g = +}`.
    pub fn positive_covectors(&self) -> Vec<SignedVector> {
        self.base
            .covectors()
            .iter()
            .filter(|x| x.get(self.g) == Sign::Plus)
            .copied()
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    fn svs(items: &[&str]) -> Vec<SignedVector> {
        items.iter().map(|s| sv(s)).collect()
    }

    fn m1() -> OrientedMatroid {
        OrientedMatroid::from_covectors(
            3,
            &svs(&["000", "+-0", "-+0", "00+", "00-", "+-+", "+--", "-++", "-+-"]),
        )
        .unwrap()
    }

    fn rank1_3() -> OrientedMatroid {
        OrientedMatroid::from_covectors(3, &svs(&["000", "+++", "---"])).unwrap()
    }

    #[test]
    fn rank_one_is_valid_and_missing_negation_is_v2() {
        assert!(validate_covectors(3, &svs(&["000", "+++", "---"])).unwrap().valid);
        let r = validate_covectors(3, &svs(&["000", "++0"])).unwrap();
        assert!(!r.valid);
        assert_eq!(r.violations[0], violation("V2", vec!["++0".into()]));
    }

    #[test]
    fn circuit_validation_examples() {
        assert!(validate_circuits(3, &svs(&["++0", "--0"])).unwrap().valid);
        let r = validate_circuits(3, &svs(&["+00", "++0", "--0", "-00"])).unwrap();
        assert_eq!(r.violations[0], violation("C3", vec!["+00".into(), "++0".into()]));
        assert!(validate_circuits(3, &[]).unwrap().valid);
    }

    #[test]
    fn wrong_length_is_dimension_error() {
        assert!(matches!(
            validate_covectors(3, &svs(&["00"])),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn m1_structure() {
        let m = m1();
        assert_eq!(m.topes(), svs(&["+-+", "+--", "-++", "-+-"]).as_slice());
        assert_eq!(m.circuits(), svs(&["++0", "--0"]).as_slice());
        let flags = m.structure_flags();
        assert!(!flags.acyclic);
        assert!(flags.loopless);
        assert_eq!(flags.rank, 2);
        let g = m.tope_graph();
        assert_eq!(g.edges.len(), 4);
        assert!(g.adjacency().iter().all(|a| a.len() == 2));
    }

    #[test]
    fn rank_one_structure() {
        let m = rank1_3();
        assert_eq!(m.topes(), svs(&["+++", "---"]).as_slice());
        let flags = m.structure_flags();
        assert!(flags.acyclic && flags.uniform);
        assert_eq!(flags.rank, 1);
        assert_eq!(
            m.circuits(),
            svs(&["+-0", "+0-", "-+0", "-0+", "0+-", "0-+"]).as_slice()
        );
        let g = m.tope_graph();
        assert_eq!(g.edges, vec![(0, 1, ElementSet::full(3))]);
    }

    #[test]
    fn circuits_round_trip() {
        for m in [m1(), rank1_3()] {
            let back = OrientedMatroid::from_circuits(3, m.circuits()).unwrap();
            assert_eq!(back, m);
        }
        let free = OrientedMatroid::from_circuits(2, &[]).unwrap();
        assert_eq!(free.covectors().len(), 9);
    }

    #[test]
    fn m1_cross_checks() {
        let (vectors, circuits) = m1().vectors_and_circuits().unwrap();
        assert_eq!(circuits.len(), 2);
        assert_eq!(vectors, svs(&["++0", "--0", "000"]));
        // Orthogonal to every tope, yet not a vector.
        let x = sv("+++");
        assert!(m1().topes().iter().all(|t| x.is_orthogonal(t).unwrap()));
        assert!(!x.is_orthogonal(&sv("00+")).unwrap());
    }

    #[test]
    fn minors() {
        let m2 = m1().contract(ElementSet::from_bits(0b011)).unwrap();
        assert_eq!(m2.covectors(), svs(&["+", "-", "0"]).as_slice());
        assert_eq!(m1().minor(ElementSet::EMPTY, ElementSet::EMPTY).unwrap(), m1());
        let d = rank1_3().delete(ElementSet::singleton(3)).unwrap();
        assert_eq!(d.covectors(), svs(&["++", "--", "00"]).as_slice());
        assert!(m1().minor(ElementSet::singleton(1), ElementSet::singleton(1)).is_err());
    }

    #[test]
    fn convexity_examples() {
        let m = m1();
        for t in m.topes() {
            assert!(m.is_convex_set(&SignedElementSet::from(*t)).unwrap());
        }
        assert!(m.is_convex_set(&SignedElementSet::full(3)).unwrap());
        // The circuit 12 lies in {1, 2}, so both 1̄ and 2̄ are forced.
        let s = SignedElementSet::from_signed_ints(3, &[1, 2]).unwrap();
        assert!(!m.is_convex_set(&s).unwrap());
        let closure = m.convex_closure(&s).unwrap();
        assert_eq!(closure.to_signed_ints(), vec![1, -1, 2, -2]);
        // From {1}, the circuit 12 forces 2̄ and nothing else.
        let s = SignedElementSet::from_signed_ints(3, &[1]).unwrap();
        let closure = m.convex_closure(&s).unwrap();
        assert_eq!(closure.to_signed_ints(), vec![1, -2]);
    }

    #[test]
    fn contraction_is_strong_map() {
        let m2 = m1().contract(ElementSet::from_bits(0b011)).unwrap();
        let f = GroundMap::new(3, 1, vec![None, None, Some(1)]).unwrap();
        let v = m1().is_strong_map(&f, &m2).unwrap();
        assert!(v.verdict);
        assert_eq!(v.method, StrongMapMethod::Exhaustive);
        let id = GroundMap::identity(3);
        assert!(m1().is_strong_map(&id, &m1()).unwrap().verdict);
    }

    #[test]
    fn incompatible_signed_map_rejected() {
        assert!(GroundMap::from_signed(2, 2, &[1, 2], &[-1, 2]).is_err());
        assert!(GroundMap::from_signed(2, 2, &[1, 0], &[-1, 0]).is_ok());
    }

    #[test]
    fn t_convexity_rejects_non_topes() {
        assert!(m1().is_t_convex(&svs(&["000"])).is_err());
    }

    #[test]
    fn affine_requires_non_loop() {
        let m = OrientedMatroid::from_covectors(2, &svs(&["00", "+0", "-0"])).unwrap();
        assert!(AffineOrientedMatroid::new(m.clone(), 2).is_err());
        assert!(AffineOrientedMatroid::new(m, 1).is_ok());
    }
}
