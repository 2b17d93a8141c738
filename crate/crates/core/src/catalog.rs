//! Named example objects and seeded test batteries.

use std::fmt;
use std::str::FromStr;

use crate::arrangement::{CentralArrangement, PolyhedralCover, Rational};
use crate::codes::{Code, CodeMorphism};
use crate::error::{Error, Result};
use crate::matroid::{AffineOrientedMatroid, OrientedMatroid};
use crate::sign::{ElementSet, SignedVector};

/// A 64-bit linear congruential generator:
/// `state ← state · 6364136223846793005 + 1442695040888963407 (mod 2⁶⁴)`,
/// outputs the high 32 bits of the new state.
///
/// The scheme is fixed so that batteries are reproducible across platforms
/// and releases.
#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;

    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform in `0..bound` (by rejection, so without modulo bias).
    pub fn below(&mut self, bound: u32) -> u32 {
        assert!(bound > 0, "empty range");
        let zone = u32::MAX - (u32::MAX % bound);
        loop {
            let v = self.next_u32();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u32) as i64
    }

    /// `true` with probability `num / den`.
    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.below(den) < num
    }
}

/// The object carried by a [`NamedInstance`].
#[derive(Clone, Debug)]
pub enum Payload {
    Code(Code),
    Matroid(OrientedMatroid),
    /// A central arrangement together with its validated oriented matroid.
    Arrangement {
        arrangement: CentralArrangement,
        matroid: OrientedMatroid,
    },
    /// An affine arrangement in homogenized form: the last form is `g = x₀`.
    Affine {
        arrangement: CentralArrangement,
        matroid: AffineOrientedMatroid,
    },
    Morphism(CodeMorphism),
    Cover(PolyhedralCover),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Code(_) => "code",
            Payload::Matroid(_) => "matroid",
            Payload::Arrangement { .. } => "arrangement",
            Payload::Affine { .. } => "affine-arrangement",
            Payload::Morphism(_) => "morphism",
            Payload::Cover(_) => "cover",
        }
    }

    /// The oriented matroid of the payload, if it has one.
    pub fn matroid(&self) -> Option<&OrientedMatroid> {
        match self {
            Payload::Matroid(m) | Payload::Arrangement { matroid: m, .. } => Some(m),
            Payload::Affine { matroid, .. } => Some(matroid.base()),
            _ => None,
        }
    }

    /// The code of the payload: the code itself, a morphism's image, or a cover's code.
    pub fn code(&self) -> Result<Option<Code>> {
        Ok(match self {
            Payload::Code(c) => Some(c.clone()),
            Payload::Morphism(f) => Some(f.apply()),
            Payload::Cover(p) => Some(p.code(1)?),
            _ => None,
        })
    }
}

#[derive(Clone, Debug)]
pub struct NamedInstance {
    pub name: String,
    pub payload: Payload,
}

impl NamedInstance {
    fn new(name: impl Into<String>, payload: Payload) -> Self {
        NamedInstance {
            name: name.into(),
            payload,
        }
    }
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn realized(name: &str, d: usize, forms: &[&[i64]]) -> Result<NamedInstance> {
    let arrangement = CentralArrangement::from_integers(d, &ints(forms))?;
    let matroid = arrangement.oriented_matroid(1)?;
    Ok(NamedInstance::new(name, Payload::Arrangement { arrangement, matroid }))
}

/// `M₁`: the columns `(1,0), (−1,0), (0,1)`.
pub fn m1() -> OrientedMatroid {
    m1_arrangement().oriented_matroid(1).expect("M1 is realizable")
}

pub fn m1_arrangement() -> CentralArrangement {
    CentralArrangement::from_integers(2, &ints(&[&[1, 0], &[-1, 0], &[0, 1]])).expect("valid forms")
}

/// `M₂ = M₁ / {1, 2}`, relabelled onto one element.
pub fn m2() -> OrientedMatroid {
    m1().contract(ElementSet::from_bits(0b11)).expect("contraction of M1")
}

/// The rank-1 matroid of three copies of the same form on `ℝ`.
pub fn rank1_3() -> OrientedMatroid {
    rank1_3_arrangement().oriented_matroid(1).expect("realizable")
}

pub fn rank1_3_arrangement() -> CentralArrangement {
    CentralArrangement::from_integers(1, &ints(&[&[1], &[1], &[1]])).expect("valid forms")
}

/// The intervals `U₁ = (0,2)`, `U₂ = (1,4)`, `U₃ = (3,4)` inside `(−1,7)`.
pub fn fig1_cover() -> PolyhedralCover {
    let r = Rational::from_integer;
    PolyhedralCover::intervals(&[(r(0), r(2)), (r(1), r(4)), (r(3), r(4))], (r(-1), r(7)))
        .expect("valid intervals")
}

pub fn fig1_code() -> Code {
    Code::parse_compact(3, "∅ 1 2 12 23").expect("valid code")
}

pub fn fig3_c() -> Code {
    Code::parse_compact(
        5,
        "12345 245 1245 145 1345 135 1235 235 2345 ∅ 13 3 23 2 24 4 14 1",
    )
    .expect("valid code")
}

pub fn fig3_d() -> Code {
    Code::parse_compact(2, "∅ 1 2 12").expect("valid code")
}

/// The morphism `𝒞 → 𝒟` given by the trunks `tk(135)` and `tk(245)`.
pub fn fig3_morphism() -> CodeMorphism {
    let s = |bits: &[usize]| Some(bits.iter().copied().collect::<ElementSet>());
    CodeMorphism::new(fig3_c(), vec![s(&[1, 3, 5]), s(&[2, 4, 5])]).expect("valid trunks")
}

pub fn lienkaemper_code() -> Code {
    Code::parse_compact(5, "2345 123 134 145 13 14 23 34 45 3 4 ∅").expect("valid code")
}

pub fn jeffs_c2() -> Code {
    Code::parse_compact(6, "1236 234 135 456 23 13 4 5 6 ∅").expect("valid code")
}

/// `{∅, 12, 13, 23}`, which has a local obstruction at every vertex.
pub fn hollow_triangle_code() -> Code {
    Code::parse_compact(3, "∅ 12 13 23").expect("valid code")
}

/// `{∅, 1, 2, 3, 123}`, whose canonical form satisfies weak elimination but not incomparability.
pub fn incomparability_code() -> Code {
    Code::parse_compact(3, "∅ 1 2 3 123").expect("valid code")
}

/// The sunflower code `𝒞ₙ` on `S ∪ P` with `sᵢ = i` and `pᵢ = n + 1 + i`.
///
/// Codewords: `∅`; `S ∪ {p_{n+1}}`; `P`; `X ∪ {s_{n+1}}` for `∅ ⊊ X ⊊ {s₁..sₙ}`;
/// `{pᵢ}` for `i ≤ n + 1`; `(S ∖ {sᵢ}) ∪ {pᵢ}` for `i ≤ n`.
pub fn sunflower_code(n: usize) -> Result<Code> {
    if n < 2 {
        return Err(Error::argument("sunflower codes need n ≥ 2"));
    }
    Error::check_capacity("sunflower size", 2 * n + 2, crate::sign::MAX_GROUND)?;
    let s = |i: usize| i;
    let p = |i: usize| n + 1 + i;
    let s_all: ElementSet = (1..=n + 1).map(s).collect();
    let p_all: ElementSet = (1..=n + 1).map(p).collect();
    let petals: ElementSet = (1..=n).map(s).collect();
    let mut words = vec![ElementSet::EMPTY, s_all.with(p(n + 1)), p_all];
    words.extend(
        petals
            .subsets()
            .filter(|x| !x.is_empty() && *x != petals)
            .map(|x| x.with(s(n + 1))),
    );
    words.extend((1..=n + 1).map(|i| ElementSet::singleton(p(i))));
    words.extend((1..=n).map(|i| s_all.without(s(i)).with(p(i))));
    Code::new(2 * n + 2, words)
}

/// Names accepted by [`paper_instance`].
pub const INSTANCE_NAMES: &[&str] = &[
    "M1",
    "M2",
    "rank1_3",
    "fig1_code",
    "fig1_cover",
    "fig3_C",
    "fig3_D",
    "fig3_morphism",
    "lienkaemper_code",
    "jeffs_C2",
    "sunflower_C2",
    "sunflower_C3",
    "hollow_triangle_code",
    "incomparability_code",
];

pub fn paper_instance(name: &str) -> Result<NamedInstance> {
    let payload = match name {
        "M1" => {
            return realized(name, 2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        }
        "M2" => Payload::Matroid(m2()),
        "rank1_3" => return realized(name, 1, &[&[1], &[1], &[1]]),
        "fig1_code" => Payload::Code(fig1_code()),
        "fig1_cover" => Payload::Cover(fig1_cover()),
        "fig3_C" => Payload::Code(fig3_c()),
        "fig3_D" => Payload::Code(fig3_d()),
        "fig3_morphism" => Payload::Morphism(fig3_morphism()),
        "lienkaemper_code" => Payload::Code(lienkaemper_code()),
        "jeffs_C2" => Payload::Code(jeffs_c2()),
        "sunflower_C2" => Payload::Code(sunflower_code(2)?),
        "sunflower_C3" => Payload::Code(sunflower_code(3)?),
        "hollow_triangle_code" => Payload::Code(hollow_triangle_code()),
        "incomparability_code" => Payload::Code(incomparability_code()),
        _ => {
            return Err(Error::Lookup(format!(
                "unknown instance {name:?}; known: {}",
                INSTANCE_NAMES.join(", ")
            )))
        }
    };
    Ok(NamedInstance::new(name, payload))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BatteryKind {
    AcyclicArrangements,
    UniformAffine,
    RandomCodes,
}

impl FromStr for BatteryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "acyclic-arrangements" => Ok(BatteryKind::AcyclicArrangements),
            "uniform-affine" => Ok(BatteryKind::UniformAffine),
            "random-codes" => Ok(BatteryKind::RandomCodes),
            _ => Err(Error::argument(format!(
                "unknown battery {s:?}; expected acyclic-arrangements, uniform-affine or random-codes"
            ))),
        }
    }
}

impl fmt::Display for BatteryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BatteryKind::AcyclicArrangements => "acyclic-arrangements",
            BatteryKind::UniformAffine => "uniform-affine",
            BatteryKind::RandomCodes => "random-codes",
        })
    }
}

/// Size parameters of a battery.
///
/// * acyclic arrangements: `n` forms on `ℚᵈ`;
/// * uniform affine: `n` elements (`n − 1` affine hyperplanes of `ℚᵈ` plus `g`);
/// * random codes: codes on `n` neurons (`d` unused).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BatteryParams {
    pub count: usize,
    pub n: usize,
    pub d: usize,
}

pub const MAX_BATTERY_N: usize = 7;
pub const MAX_BATTERY_D: usize = 4;
const MAX_RESAMPLES: usize = 10_000;

pub fn battery(kind: BatteryKind, params: BatteryParams, seed: u64) -> Result<Vec<NamedInstance>> {
    Error::check_capacity("battery n", params.n, MAX_BATTERY_N)?;
    if params.n == 0 {
        return Err(Error::argument("battery n must be at least 1"));
    }
    let mut rng = Lcg::new(seed);
    let mut out = Vec::with_capacity(params.count);
    for i in 0..params.count {
        let name = format!("{kind}-s{seed}-n{}-d{}-{i}", params.n, params.d);
        let payload = match kind {
            BatteryKind::AcyclicArrangements => {
                check_dimension(params.d)?;
                let arrangement = acyclic_arrangement(&mut rng, params.n, params.d)?;
                let matroid = arrangement.oriented_matroid(1)?;
                debug_assert!(matroid.is_acyclic());
                Payload::Arrangement { arrangement, matroid }
            }
            BatteryKind::UniformAffine => {
                check_dimension(params.d)?;
                let (arrangement, matroid) = uniform_affine(&mut rng, params.n, params.d)?;
                Payload::Affine { arrangement, matroid }
            }
            BatteryKind::RandomCodes => Payload::Code(random_code(&mut rng, params.n)?),
        };
        out.push(NamedInstance::new(name, payload));
    }
    Ok(out)
}

fn check_dimension(d: usize) -> Result<()> {
    if d == 0 {
        return Err(Error::argument("battery dimension must be at least 1"));
    }
    Error::check_capacity("battery d", d, MAX_BATTERY_D)
}

fn random_rational(rng: &mut Lcg) -> Rational {
    let q = rng.range(1, 3);
    let p = rng.range(-3 * q, 3 * q);
    Rational::from_ratio(p, q).expect("nonzero denominator")
}

fn eval(form: &[Rational], point: &[i64]) -> Rational {
    let mut acc = Rational::from_integer(0).value().clone();
    for (a, x) in form.iter().zip(point) {
        acc += a.value() * num_rational::BigRational::from_integer((*x).into());
    }
    Rational::new(acc)
}

fn negate(form: &[Rational]) -> Vec<Rational> {
    form.iter().map(|r| Rational::new(-r.value().clone())).collect()
}

/// Random rational forms made acyclic by orienting each one positively at a
/// random witness point; with some probability a form repeats an earlier one
/// up to a positive multiple, or is the sum of two earlier ones, to produce
/// non-uniform instances.
fn acyclic_arrangement(rng: &mut Lcg, n: usize, d: usize) -> Result<CentralArrangement> {
    let witness: Vec<i64> = (0..d)
        .map(|_| {
            let v = rng.range(1, 4);
            if rng.chance(1, 2) {
                v
            } else {
                -v
            }
        })
        .collect();
    let mut forms: Vec<Vec<Rational>> = Vec::with_capacity(n);
    while forms.len() < n {
        let form: Vec<Rational> = if !forms.is_empty() && rng.chance(1, 6) {
            let j = rng.below(forms.len() as u32) as usize;
            let scale = Rational::from_integer(rng.range(1, 3));
            forms[j].iter().map(|r| Rational::new(r.value() * scale.value())).collect()
        } else if forms.len() >= 2 && rng.chance(1, 6) {
            let a = rng.below(forms.len() as u32) as usize;
            let b = rng.below(forms.len() as u32) as usize;
            forms[a]
                .iter()
                .zip(&forms[b])
                .map(|(x, y)| Rational::new(x.value() + y.value()))
                .collect()
        } else {
            (0..d).map(|_| random_rational(rng)).collect()
        };
        let at = eval(&form, &witness);
        if at.is_zero() {
            continue;
        }
        forms.push(if at.is_positive() { form } else { negate(&form) });
    }
    CentralArrangement::new(d, forms)
}

/// `n − 1` random affine hyperplanes `a·x + b` of `ℚᵈ` homogenized as
/// `b·x₀ + a·x`, plus `g = x₀` as element `n`; resampled until uniform.
fn uniform_affine(rng: &mut Lcg, n: usize, d: usize) -> Result<(CentralArrangement, AffineOrientedMatroid)> {
    if n < d + 1 {
        return Err(Error::argument(format!(
            "a uniform affine instance in dimension {d} needs at least {} elements",
            d + 1
        )));
    }
    for _ in 0..MAX_RESAMPLES {
        let mut forms: Vec<Vec<Rational>> = (0..n - 1)
            .map(|_| {
                let mut f = vec![random_rational(rng)];
                f.extend((0..d).map(|_| random_rational(rng)));
                f
            })
            .collect();
        let mut g = vec![Rational::from_integer(1)];
        g.extend((0..d).map(|_| Rational::from_integer(0)));
        forms.push(g);
        let arrangement = CentralArrangement::new(d + 1, forms)?;
        let matroid = arrangement.oriented_matroid(1)?;
        if matroid.structure_flags().uniform && matroid.loops().is_empty() {
            let affine = AffineOrientedMatroid::new(matroid, n)?;
            return Ok((arrangement, affine));
        }
    }
    Err(Error::argument("could not sample a uniform affine arrangement"))
}

/// Each subset of `[n]` is a codeword with probability ½.
fn random_code(rng: &mut Lcg, n: usize) -> Result<Code> {
    let words: Vec<ElementSet> = ElementSet::full(n)
        .subsets()
        .filter(|_| rng.chance(1, 2))
        .collect();
    Code::new(n, words)
}

/// Whether `X ∘ U` is a tope for every positive covector `X` and every full `U`.
pub fn tope_lemma_holds(a: &AffineOrientedMatroid) -> bool {
    let m = a.base();
    let n = m.n();
    let positive = a.positive_covectors();
    (0u64..(1 << n)).all(|bits| {
        let u = SignedVector::from_parts(
            n,
            ElementSet::from_bits(bits),
            ElementSet::full(n) - ElementSet::from_bits(bits),
        )
        .expect("disjoint parts");
        positive.iter().all(|x| {
            m.is_covector(&x.compose(&u).expect("same length"))
                && x.compose(&u).expect("same length").support() == ElementSet::full(n)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{matroid_code, CodeMode};

    #[test]
    fn lcg_is_pinned() {
        let mut rng = Lcg::new(1);
        let first: Vec<u32> = (0..3).map(|_| rng.next_u32()).collect();
        // Independently: s1 = 1·A + C mod 2⁶⁴, output s1 >> 32, and so on.
        let mut s: u128 = 1;
        let m: u128 = 1 << 64;
        let mut expect = Vec::new();
        for _ in 0..3 {
            s = (s * Lcg::MULTIPLIER as u128 + Lcg::INCREMENT as u128) % m;
            expect.push((s >> 32) as u32);
        }
        assert_eq!(first, expect);
    }

    #[test]
    fn sunflower_c2_matches_caption() {
        let expected = Code::parse_compact(6, "∅ 23 13 4 5 6 234 135 1236 456").unwrap();
        assert_eq!(sunflower_code(2).unwrap(), expected);
        assert_eq!(jeffs_c2(), expected);
        assert!(sunflower_code(1).is_err());
    }

    #[test]
    fn sunflower_cardinalities() {
        for n in 2..=8 {
            assert_eq!(sunflower_code(n).unwrap().len(), (1 << n) + 2 * n + 2, "n = {n}");
        }
    }

    #[test]
    fn named_instances() {
        for name in INSTANCE_NAMES {
            let inst = paper_instance(name).unwrap();
            assert_eq!(inst.name, *name);
        }
        assert!(matches!(paper_instance("nope"), Err(Error::Lookup(_))));
        assert_eq!(
            paper_instance("fig1_cover").unwrap().payload.code().unwrap().unwrap(),
            fig1_code()
        );
        assert_eq!(fig3_morphism().apply(), fig3_d());
        assert_eq!(matroid_code(&m2(), CodeMode::WPlus), Code::parse_compact(1, "∅ 1").unwrap());
        assert_eq!(
            lienkaemper_code().to_lists().len(),
            12
        );
    }

    #[test]
    fn acyclic_battery() {
        let b = battery(
            BatteryKind::AcyclicArrangements,
            BatteryParams { count: 10, n: 4, d: 2 },
            1,
        )
        .unwrap();
        assert_eq!(b.len(), 10);
        for inst in &b {
            let m = inst.payload.matroid().unwrap();
            assert!(m.is_acyclic(), "{}", inst.name);
        }
        let again = battery(
            BatteryKind::AcyclicArrangements,
            BatteryParams { count: 10, n: 4, d: 2 },
            1,
        )
        .unwrap();
        for (a, b) in b.iter().zip(&again) {
            assert_eq!(a.payload.matroid(), b.payload.matroid());
        }
    }

    #[test]
    fn uniform_affine_battery_satisfies_tope_lemma() {
        let b = battery(BatteryKind::UniformAffine, BatteryParams { count: 3, n: 5, d: 2 }, 7).unwrap();
        for inst in b {
            let Payload::Affine { matroid, .. } = &inst.payload else {
                panic!("wrong payload")
            };
            assert!(matroid.base().structure_flags().uniform);
            assert!(tope_lemma_holds(matroid));
        }
    }

    #[test]
    fn random_codes_battery() {
        let b = battery(BatteryKind::RandomCodes, BatteryParams { count: 5, n: 4, d: 0 }, 3).unwrap();
        assert_eq!(b.len(), 5);
        assert!(battery(BatteryKind::RandomCodes, BatteryParams { count: 1, n: 9, d: 0 }, 3).is_err());
    }
}
