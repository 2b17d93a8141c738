//! Neural ideals (pseudomonomials over 𝔽₂) and squarefree monomial ideals in
//! `k[x₁..xₙ, y₁..yₙ]`: the oriented matroid ideal, its prime decomposition
//! and Alexander dual, the affine ideal, and the depolarization square.

use std::collections::HashSet;
use std::fmt;

use crate::codes::{matroid_code, Code, CodeMode};
use crate::error::{Error, Result};
use crate::matroid::{AffineOrientedMatroid, GroundMap, OrientedMatroid};
use crate::sign::{ElementSet, SignedVector};

/// `x^σ (1 − x)^τ`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Pseudomonomial {
    pub sigma: ElementSet,
    pub tau: ElementSet,
}

impl Pseudomonomial {
    pub fn new(sigma: ElementSet, tau: ElementSet) -> Self {
        Pseudomonomial { sigma, tau }
    }

    /// `xᵢ(1 − xᵢ)`.
    pub fn improper(i: usize) -> Self {
        let s = ElementSet::singleton(i);
        Pseudomonomial { sigma: s, tau: s }
    }

    pub fn is_proper(&self) -> bool {
        self.sigma.is_disjoint(self.tau)
    }

    pub fn divides(&self, other: &Pseudomonomial) -> bool {
        self.sigma.is_subset(other.sigma) && self.tau.is_subset(other.tau)
    }

    /// Value at the point of `𝔽₂ⁿ` whose support is `c`.
    pub fn evaluate(&self, c: ElementSet) -> bool {
        self.sigma.is_subset(c) && self.tau.is_disjoint(c)
    }

    fn degree(&self) -> usize {
        self.sigma.len() + self.tau.len()
    }
}

impl fmt::Display for Pseudomonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.sigma.iter().map(|i| format!("x{i}")).collect();
        parts.extend(self.tau.iter().map(|i| format!("(1-x{i})")));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(""))
        }
    }
}

fn minimal_pseudomonomials(mut gens: Vec<Pseudomonomial>) -> Vec<Pseudomonomial> {
    gens.sort_by_key(|g| (g.degree(), *g));
    gens.dedup();
    let mut out: Vec<Pseudomonomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

/// A pseudomonomial ideal of `𝔽₂[x₁..xₙ]` given by generators.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PseudomonomialIdeal {
    n: usize,
    gens: Vec<Pseudomonomial>,
}

/// Largest `n` accepted by neural-ring computations (2ⁿ point scans).
pub const MAX_NEURAL_N: usize = 16;

impl PseudomonomialIdeal {
    pub fn new(n: usize, gens: Vec<Pseudomonomial>) -> Result<Self> {
        let full = ElementSet::full(n);
        if let Some(bad) = gens
            .iter()
            .find(|g| !(g.sigma | g.tau).is_subset(full))
        {
            return Err(Error::argument(format!("generator {bad} uses a variable outside 1..={n}")));
        }
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        Ok(PseudomonomialIdeal { n, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Pseudomonomial] {
        &self.gens
    }

    pub fn proper_generators(&self) -> Vec<Pseudomonomial> {
        self.gens.iter().filter(|g| g.is_proper()).copied().collect()
    }

    /// The same ideal with redundant generators removed.
    pub fn minimalized(&self) -> Self {
        PseudomonomialIdeal {
            n: self.n,
            gens: minimal_pseudomonomials(self.gens.clone()),
        }
    }

    /// Common zeros in `𝔽₂ⁿ`, as a code.
    pub fn variety(&self) -> Result<Code> {
        Error::check_capacity("neural ring size", self.n, MAX_NEURAL_N)?;
        let words = ElementSet::full(self.n)
            .subsets()
            .filter(|c| self.gens.iter().all(|g| !g.evaluate(*c)));
        Code::new(self.n, words)
    }

    /// Ideal membership by the variety criterion: `p ∈ I` iff `p` vanishes on `V(I)`.
    pub fn contains(&self, p: &Pseudomonomial) -> Result<bool> {
        Ok(self.variety()?.words().iter().all(|c| !p.evaluate(*c)))
    }
}

impl fmt::Display for PseudomonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "⟨{}⟩", parts.join(", "))
    }
}

/// The canonical form of `I_C`: its divisibility-minimal proper pseudomonomials.
///
/// `x^σ(1 − x)^τ ∈ I_C` iff no codeword `c` has `σ ⊆ c` and `τ ∩ c = ∅`.
/// Pairs are explored level by level in degree; a pair is only examined
/// when all of its one-smaller sub-pairs lie outside the ideal, so every
/// member found is minimal.
pub fn canonical_form(code: &Code) -> Result<PseudomonomialIdeal> {
    let n = code.n();
    Error::check_capacity("code length", n, MAX_NEURAL_N)?;
    let in_ideal = |p: &Pseudomonomial| !code.words().iter().any(|c| p.evaluate(*c));
    let mut found = Vec::new();
    let empty = Pseudomonomial::new(ElementSet::EMPTY, ElementSet::EMPTY);
    if in_ideal(&empty) {
        return PseudomonomialIdeal::new(n, vec![empty]);
    }
    let mut alive: HashSet<Pseudomonomial> = HashSet::from([empty]);
    while !alive.is_empty() {
        let mut candidates: HashSet<Pseudomonomial> = HashSet::new();
        for p in &alive {
            let used = p.sigma | p.tau;
            for e in (ElementSet::full(n) - used).iter() {
                candidates.insert(Pseudomonomial::new(p.sigma.with(e), p.tau));
                candidates.insert(Pseudomonomial::new(p.sigma, p.tau.with(e)));
            }
        }
        let mut next = HashSet::new();
        for q in candidates {
            let subs_alive = q.sigma.iter().all(|e| {
                alive.contains(&Pseudomonomial::new(q.sigma.without(e), q.tau))
            }) && q.tau.iter().all(|e| {
                alive.contains(&Pseudomonomial::new(q.sigma, q.tau.without(e)))
            });
            if !subs_alive {
                continue;
            }
            if in_ideal(&q) {
                found.push(q);
            } else {
                next.insert(q);
            }
        }
        alive = next;
    }
    PseudomonomialIdeal::new(n, found)
}

/// Weak elimination for the generators read as signed sets `σ ∪ τ̄`.
///
/// For proper generators `X = (σ, τ)`, `Y = (α, β)` with `X ≠ −Y` and
/// `e ∈ σ ∩ β`, some generator or improper `xᵢ(1 − xᵢ)` must divide
/// `x^{(σ∪α)∖e} (1 − x)^{(τ∪β)∖e}`.
pub fn weak_elimination_check(ideal: &PseudomonomialIdeal) -> bool {
    let proper = ideal.proper_generators();
    let mut pool: Vec<Pseudomonomial> = ideal.gens.clone();
    pool.extend((1..=ideal.n).map(Pseudomonomial::improper));
    for x in &proper {
        for y in &proper {
            if x.sigma == y.tau && x.tau == y.sigma {
                continue;
            }
            for e in (x.sigma & y.tau).iter() {
                let target = Pseudomonomial::new(
                    (x.sigma | y.sigma).without(e),
                    (x.tau | y.tau).without(e),
                );
                if !pool.iter().any(|g| g.divides(&target)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Incomparability for the proper generators: nested supports force `X = ±Y`.
pub fn incomparability_check(ideal: &PseudomonomialIdeal) -> bool {
    let proper = ideal.proper_generators();
    proper.iter().all(|x| {
        proper.iter().all(|y| {
            let (sx, sy) = (x.sigma | x.tau, y.sigma | y.tau);
            !sx.is_subset(sy) || x == y || (x.sigma == y.tau && x.tau == y.sigma)
        })
    })
}

/// `x^a y^b` with `a, b ⊆ [n]`, possibly overlapping.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub x: ElementSet,
    pub y: ElementSet,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        x: ElementSet::EMPTY,
        y: ElementSet::EMPTY,
    };

    pub fn new(x: ElementSet, y: ElementSet) -> Self {
        Monomial { x, y }
    }

    /// `m_xy(Z)` for a sign vector `Z`.
    pub fn of_signed(z: &SignedVector) -> Self {
        Monomial {
            x: z.positive(),
            y: z.negative(),
        }
    }

    /// `m_xy(±[n] ∖ Z)`.
    pub fn of_complement(z: &SignedVector) -> Self {
        let full = ElementSet::full(z.len());
        Monomial {
            x: full - z.positive(),
            y: full - z.negative(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.x.is_subset(other.x) && self.y.is_subset(other.y)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            x: self.x | other.x,
            y: self.y | other.y,
        }
    }

    pub fn shares_variable(&self, other: &Monomial) -> bool {
        !self.x.is_disjoint(other.x) || !self.y.is_disjoint(other.y)
    }

    fn degree(&self) -> usize {
        self.x.len() + self.y.len()
    }

    fn variables(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.x
            .iter()
            .map(|i| Monomial::new(ElementSet::singleton(i), ElementSet::EMPTY))
            .chain(
                self.y
                    .iter()
                    .map(|i| Monomial::new(ElementSet::EMPTY, ElementSet::singleton(i))),
            )
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.x.iter().map(|i| format!("x{i}")).collect();
        parts.extend(self.y.iter().map(|i| format!("y{i}")));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(""))
        }
    }
}

fn minimal_monomials(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| (g.degree(), *g));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

/// A squarefree monomial ideal of `k[x₁..xₙ, y₁..yₙ]` in minimal-generator normal form.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SquarefreeMonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl SquarefreeMonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        let full = ElementSet::full(n);
        if let Some(bad) = gens.iter().find(|g| !(g.x | g.y).is_subset(full)) {
            return Err(Error::argument(format!("generator {bad} uses a variable outside 1..={n}")));
        }
        Ok(Self::from_gens(n, gens))
    }

    fn from_gens(n: usize, gens: Vec<Monomial>) -> Self {
        SquarefreeMonomialIdeal {
            n,
            gens: minimal_monomials(gens),
        }
    }

    pub fn zero(n: usize) -> Self {
        SquarefreeMonomialIdeal { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        SquarefreeMonomialIdeal {
            n,
            gens: vec![Monomial::ONE],
        }
    }

    /// The prime ideal generated by the variables of `m`.
    pub fn prime(n: usize, m: &Monomial) -> Self {
        Self::from_gens(n, m.variables().collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    /// `J₁ ∩ J₂`, generated by pairwise lcms.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        Ok(Self::from_gens(self.n, gens))
    }

    /// `J ∩ ⟨variables of p⟩`.
    fn intersect_prime(&self, p: &Monomial) -> Self {
        let mut gens = Vec::new();
        for g in &self.gens {
            if g.shares_variable(p) {
                gens.push(*g);
            } else {
                gens.extend(p.variables().map(|v| g.lcm(&v)));
            }
        }
        Self::from_gens(self.n, gens)
    }

    /// `J₁ : J₂ = ∩_{g ∈ J₂} (J₁ : g)`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut acc = Self::unit(self.n);
        for g in &other.gens {
            let colon = Self::from_gens(
                self.n,
                self.gens
                    .iter()
                    .map(|h| Monomial::new(h.x - g.x, h.y - g.y))
                    .collect(),
            );
            acc = acc.intersect(&colon)?;
        }
        Ok(acc)
    }

    /// Substitutes `x_e = 1`, `y_e = 0`.
    pub fn specialize(&self, e: usize) -> Result<Self> {
        if e == 0 || e > self.n {
            return Err(Error::argument(format!("element {e} outside 1..={}", self.n)));
        }
        let gens = self
            .gens
            .iter()
            .filter(|g| !g.y.contains(e))
            .map(|g| Monomial::new(g.x.without(e), g.y))
            .collect();
        Ok(Self::from_gens(self.n, gens))
    }

    /// Alexander dual over all `2n` variables: `∩_{g} ⟨variables of g⟩`.
    pub fn alexander_dual(&self) -> Self {
        let mut acc = Self::unit(self.n);
        for g in &self.gens {
            acc = acc.intersect_prime(g);
        }
        acc
    }

    /// Re-indexes the variables: variable `i` becomes `positions[i - 1]` in a ring of size `n`.
    pub fn relabel(&self, n: usize, positions: &[usize]) -> Result<Self> {
        if positions.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: positions.len(),
            });
        }
        let map = |s: ElementSet| -> ElementSet { s.iter().map(|i| positions[i - 1]).collect() };
        Self::new(
            n,
            self.gens
                .iter()
                .map(|g| Monomial::new(map(g.x), map(g.y)))
                .collect(),
        )
    }
}

impl fmt::Display for SquarefreeMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "⟨{}⟩", parts.join(", "))
    }
}

/// `x^σ(1 − x)^τ ↦ x^σ y^τ`.
pub fn polarize(ideal: &PseudomonomialIdeal) -> SquarefreeMonomialIdeal {
    SquarefreeMonomialIdeal::from_gens(
        ideal.n,
        ideal
            .gens
            .iter()
            .map(|g| Monomial::new(g.sigma, g.tau))
            .collect(),
    )
}

/// `x^σ y^τ ↦ x^σ(1 − x)^τ`, i.e. `yᵢ ↦ 1 − xᵢ`.
pub fn depolarize(ideal: &SquarefreeMonomialIdeal) -> PseudomonomialIdeal {
    PseudomonomialIdeal {
        n: ideal.n,
        gens: ideal
            .gens
            .iter()
            .map(|g| Pseudomonomial::new(g.x, g.y))
            .collect(),
    }
}

/// `O(M) = ⟨m_xy(±[n] ∖ X) | X ∈ 𝓛⟩`.
pub fn om_ideal(m: &OrientedMatroid) -> SquarefreeMonomialIdeal {
    SquarefreeMonomialIdeal::from_gens(
        m.n(),
        m.covectors().iter().map(Monomial::of_complement).collect(),
    )
}

/// Signed sets of the improper circuits `{i, ī}`, as monomials `xᵢyᵢ`.
fn improper_circuit_monomials(n: usize) -> impl Iterator<Item = Monomial> {
    (1..=n).map(|i| Monomial::new(ElementSet::singleton(i), ElementSet::singleton(i)))
}

/// `∩_C P_C` over all proper and improper circuits.
pub fn om_ideal_primes(m: &OrientedMatroid) -> SquarefreeMonomialIdeal {
    let primes = m
        .circuits()
        .iter()
        .map(Monomial::of_signed)
        .chain(improper_circuit_monomials(m.n()));
    let mut acc = SquarefreeMonomialIdeal::unit(m.n());
    for p in primes {
        acc = acc.intersect_prime(&p);
    }
    acc
}

/// `⟨m_xy(C) | C a proper or improper circuit⟩`.
///
/// For acyclic `M` the tope-prime form `∩_W 𝔭(W)` is computed as well and
/// must agree.
pub fn om_dual_ideal(m: &OrientedMatroid) -> Result<SquarefreeMonomialIdeal> {
    let ideal = SquarefreeMonomialIdeal::from_gens(
        m.n(),
        m.circuits()
            .iter()
            .map(Monomial::of_signed)
            .chain(improper_circuit_monomials(m.n()))
            .collect(),
    );
    if m.is_acyclic() && tope_prime_intersection(m) != ideal {
        return Err(Error::inconsistent(
            "circuit generators and tope primes give different dual ideals",
            None,
        ));
    }
    Ok(ideal)
}

/// `∩_W 𝔭(W)` with `𝔭(W) = ⟨x_e | W_e = +⟩ + ⟨y_e | W_e = −⟩`.
pub fn tope_prime_intersection(m: &OrientedMatroid) -> SquarefreeMonomialIdeal {
    let mut acc = SquarefreeMonomialIdeal::unit(m.n());
    for t in m.topes() {
        acc = acc.intersect_prime(&Monomial::of_signed(t));
    }
    acc
}

/// `O_g(M) = ⟨m_xy^{(g)}(Z) | Z ∈ 𝓛, Z_g = +⟩` with `x_g = y_g = 1`.
pub fn affine_om_ideal(a: &AffineOrientedMatroid) -> SquarefreeMonomialIdeal {
    let g = a.g();
    SquarefreeMonomialIdeal::from_gens(
        a.base().n(),
        a.positive_covectors()
            .iter()
            .map(|z| Monomial::new(z.positive().without(g), z.negative().without(g)))
            .collect(),
    )
}

/// `[O(M) : O(M ∖ g)]` specialized at `x_g = 1`, `y_g = 0`.
pub fn affine_om_ideal_via_quotient(a: &AffineOrientedMatroid) -> Result<SquarefreeMonomialIdeal> {
    let m = a.base();
    let g = a.g();
    let n = m.n();
    let full = om_ideal(m);
    let deletion_ideal = if n == 1 {
        // The deletion has an empty ground set; its ideal is generated by the
        // complement of its only covector, the empty monomial.
        SquarefreeMonomialIdeal::unit(n)
    } else {
        let deletion = m.delete(ElementSet::singleton(g))?;
        let positions: Vec<usize> = (1..=n).filter(|&i| i != g).collect();
        om_ideal(&deletion).relabel(n, &positions)?
    };
    full.quotient(&deletion_ideal)?.specialize(g)
}

/// The strong monomial map `xᵢ ↦ x_{f(i)}`, `yᵢ ↦ y_{f(i)}` (0 when `f(i) = ∘`)
/// applied to generators; the image is reported up to radical (supports).
pub fn strong_monomial_map(f: &GroundMap, ideal: &SquarefreeMonomialIdeal) -> Result<SquarefreeMonomialIdeal> {
    if ideal.n() != f.source_size() {
        return Err(Error::Dimension {
            expected: f.source_size(),
            found: ideal.n(),
        });
    }
    let kernel = f.kernel();
    let map = |s: ElementSet| -> ElementSet { s.iter().filter_map(|i| f.image(i)).collect() };
    let gens = ideal
        .generators()
        .iter()
        .filter(|g| g.x.is_disjoint(kernel) && g.y.is_disjoint(kernel))
        .map(|g| Monomial::new(map(g.x), map(g.y)))
        .collect();
    SquarefreeMonomialIdeal::new(f.target_size(), gens)
}

/// Whether the strong monomial map sends every generator of `source` into `target`.
pub fn maps_into(f: &GroundMap, source: &SquarefreeMonomialIdeal, target: &SquarefreeMonomialIdeal) -> Result<bool> {
    let image = strong_monomial_map(f, source)?;
    Ok(image.generators().iter().all(|g| target.contains(g)))
}

/// Both sides of the square `D ∘ S = R ∘ W⁺` for an acyclic matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutingSquare {
    /// `V(D(O(M)⋆)) = W⁺(M)`.
    pub varieties_agree: bool,
    /// The proper generators of `D(O(M)⋆)` equal the canonical form of `W⁺(M)`.
    pub generators_agree: bool,
}

impl CommutingSquare {
    pub fn holds(&self) -> bool {
        self.varieties_agree && self.generators_agree
    }
}

pub fn commuting_square(m: &OrientedMatroid) -> Result<CommutingSquare> {
    if !m.is_acyclic() {
        return Err(Error::NotAcyclic(
            "the commuting square is stated for acyclic matroids".into(),
        ));
    }
    let dual = om_dual_ideal(m)?;
    let depolarized = depolarize(&dual);
    let w_plus = matroid_code(m, CodeMode::WPlus);
    let varieties_agree = depolarized.variety()? == w_plus;
    let mut proper = depolarized.minimalized().proper_generators();
    proper.sort();
    let generators_agree = proper == canonical_form(&w_plus)?.gens;
    Ok(CommutingSquare {
        varieties_agree,
        generators_agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(text: &str) -> ElementSet {
        text.chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    }

    fn mono(x: &str, y: &str) -> Monomial {
        Monomial::new(set(x), set(y))
    }

    fn pm(s: &str, t: &str) -> Pseudomonomial {
        Pseudomonomial::new(set(s), set(t))
    }

    fn ideal(n: usize, gens: &[(&str, &str)]) -> SquarefreeMonomialIdeal {
        SquarefreeMonomialIdeal::new(n, gens.iter().map(|(x, y)| mono(x, y)).collect()).unwrap()
    }

    fn rank1_3() -> OrientedMatroid {
        let covectors: Vec<SignedVector> =
            ["000", "+++", "---"].iter().map(|s| s.parse().unwrap()).collect();
        OrientedMatroid::from_covectors(3, &covectors).unwrap()
    }

    /// Brute force: minimal proper pseudomonomials vanishing on the code.
    fn canonical_oracle(code: &Code) -> Vec<Pseudomonomial> {
        let n = code.n();
        let members: Vec<Pseudomonomial> = SignedVector::all(n)
            .map(pm_from)
            .filter(|p| code.words().iter().all(|c| !p.evaluate(*c)))
            .collect();
        let mut out: Vec<Pseudomonomial> = members
            .iter()
            .filter(|p| !members.iter().any(|q| q != *p && q.divides(p)))
            .copied()
            .collect();
        out.sort();
        out
    }

    fn pm_from(v: SignedVector) -> Pseudomonomial {
        Pseudomonomial::new(v.positive(), v.negative())
    }

    #[test]
    fn canonical_form_examples() {
        let fig1 = Code::parse_compact(3, "∅ 1 2 12 23").unwrap();
        let cf = canonical_form(&fig1).unwrap();
        assert_eq!(cf.generators(), &[pm("3", "2"), pm("13", "")]);
        assert_eq!(cf.generators(), canonical_oracle(&fig1).as_slice());
        assert!(canonical_form(&Code::power_set(3).unwrap())
            .unwrap()
            .generators()
            .is_empty());
        let c = Code::parse_compact(3, "∅ 123").unwrap();
        let mut expected = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    expected.push(Pseudomonomial::new(ElementSet::singleton(i), ElementSet::singleton(j)));
                }
            }
        }
        expected.sort();
        assert_eq!(canonical_form(&c).unwrap().generators(), expected.as_slice());
    }

    #[test]
    fn empty_code_has_unit_ideal() {
        let c = Code::new(2, vec![]).unwrap();
        assert_eq!(canonical_form(&c).unwrap().generators(), &[pm("", "")]);
        assert!(canonical_form(&c).unwrap().variety().unwrap().is_empty());
    }

    #[test]
    fn variety_examples() {
        let i = PseudomonomialIdeal::new(2, vec![pm("1", "")]).unwrap();
        assert_eq!(i.variety().unwrap(), Code::parse_compact(2, "∅ 2").unwrap());
        let i = PseudomonomialIdeal::new(2, vec![]).unwrap();
        assert_eq!(i.variety().unwrap(), Code::power_set(2).unwrap());
    }

    #[test]
    fn weak_elimination_examples() {
        let i = PseudomonomialIdeal::new(2, vec![pm("1", "2"), pm("2", "1")]).unwrap();
        assert!(weak_elimination_check(&i));
        let c = Code::parse_compact(3, "∅ 1 2 3 123").unwrap();
        let cf = canonical_form(&c).unwrap();
        assert_eq!(cf.generators(), &[pm("12", "3"), pm("13", "2"), pm("23", "1")]);
        assert!(weak_elimination_check(&cf));
        assert!(!incomparability_check(&cf));
    }

    #[test]
    fn weak_elimination_can_fail() {
        // x1(1-x2) and x2(1-x3) eliminate to x1(1-x3), which nothing divides.
        let i = PseudomonomialIdeal::new(3, vec![pm("1", "2"), pm("2", "3")]).unwrap();
        assert!(!weak_elimination_check(&i));
    }

    #[test]
    fn polarization_round_trips() {
        let cf = PseudomonomialIdeal::new(3, vec![pm("13", ""), pm("3", "2")]).unwrap();
        let p = polarize(&cf);
        assert_eq!(p, ideal(3, &[("13", ""), ("3", "2")]));
        assert_eq!(depolarize(&p), cf);
    }

    #[test]
    fn rank_one_ideals() {
        let m = rank1_3();
        let o = om_ideal(&m);
        assert_eq!(o, ideal(3, &[("123", ""), ("", "123")]));
        assert_eq!(om_ideal_primes(&m), o);
        let star = om_dual_ideal(&m).unwrap();
        let mut all = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                all.push(Monomial::new(ElementSet::singleton(i), ElementSet::singleton(j)));
            }
        }
        assert_eq!(star, SquarefreeMonomialIdeal::new(3, all).unwrap());
        assert_eq!(o.alexander_dual(), star);
        let v = depolarize(&star).variety().unwrap();
        assert_eq!(v, Code::parse_compact(3, "∅ 123").unwrap());
        assert!(commuting_square(&m).unwrap().holds());
    }

    #[test]
    fn intersection_quotient_specialization_chain() {
        let a = ideal(3, &[("3", ""), ("", "123")]);
        let b = ideal(3, &[("", "3"), ("123", "")]);
        let expected = ideal(3, &[("3", "3"), ("123", ""), ("", "123")]);
        assert_eq!(a.intersect(&b).unwrap(), expected);
        let o = ideal(3, &[("123", ""), ("", "123")]);
        let q = o.quotient(&ideal(3, &[("12", ""), ("", "12")])).unwrap();
        assert_eq!(q, expected);
        assert_eq!(q.specialize(3).unwrap(), ideal(3, &[("12", "")]));
    }

    #[test]
    fn affine_anchor() {
        let a = AffineOrientedMatroid::new(rank1_3(), 3).unwrap();
        assert_eq!(affine_om_ideal(&a), ideal(3, &[("12", "")]));
        assert_eq!(affine_om_ideal_via_quotient(&a).unwrap(), ideal(3, &[("12", "")]));
    }

    #[test]
    fn alexander_duality_edge_cases() {
        let z = SquarefreeMonomialIdeal::zero(2);
        let u = SquarefreeMonomialIdeal::unit(2);
        assert_eq!(z.alexander_dual(), u);
        assert_eq!(u.alexander_dual(), z);
        let j = ideal(3, &[("12", ""), ("", "3"), ("2", "12")]);
        assert_eq!(j.alexander_dual().alexander_dual(), j);
    }

    #[test]
    fn loop_generators_carry_both_variables() {
        let covectors: Vec<SignedVector> =
            ["00", "+0", "-0"].iter().map(|s| s.parse().unwrap()).collect();
        let m = OrientedMatroid::from_covectors(2, &covectors).unwrap();
        for g in om_ideal(&m).generators() {
            assert!(g.x.contains(2) && g.y.contains(2));
        }
        assert_eq!(om_ideal(&m), om_ideal_primes(&m));
    }

    #[test]
    fn free_matroid_on_one_element() {
        let covectors: Vec<SignedVector> =
            ["0", "+", "-"].iter().map(|s| s.parse().unwrap()).collect();
        let m = OrientedMatroid::from_covectors(1, &covectors).unwrap();
        assert_eq!(om_ideal(&m), ideal(1, &[("1", ""), ("", "1")]));
        assert_eq!(om_ideal_primes(&m), om_ideal(&m));
    }

    #[test]
    fn identity_strong_monomial_map() {
        let j = ideal(3, &[("12", ""), ("", "3")]);
        assert_eq!(strong_monomial_map(&GroundMap::identity(3), &j).unwrap(), j);
        let f = GroundMap::new(3, 1, vec![None, None, Some(1)]).unwrap();
        assert_eq!(strong_monomial_map(&f, &j).unwrap(), ideal(1, &[("", "1")]));
    }
}
