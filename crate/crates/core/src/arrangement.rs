//! Exact rational hyperplane arrangements and codes of polyhedral covers.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::fm::{self, Row};
use crate::matroid::OrientedMatroid;
use crate::sign::{ElementSet, Sign, SignedVector, MAX_GROUND};

/// A reduced rational `p/q` with `q > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(value: BigRational) -> Self {
        Rational(value)
    }

    pub fn from_integer(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_ratio(p: i64, q: i64) -> Result<Self> {
        if q == 0 {
            return Err(Error::parse("zero denominator"));
        }
        Ok(Rational(BigRational::new(BigInt::from(p), BigInt::from(q))))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::parse(format!("invalid rational {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(p, q)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Clears denominators with a positive factor, keeping every sign.
fn integer_row(row: &[Rational]) -> Row {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Row = row
        .iter()
        .map(|r| r.numer() * (&lcm / r.denom()))
        .collect();
    fm::primitive(&ints)
}

/// `n` linear forms `ℓᵢ: ℚᵈ → ℚ`; zero forms are allowed and give loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralArrangement {
    d: usize,
    forms: Vec<Vec<Rational>>,
    rows: Vec<Row>,
}

impl CentralArrangement {
    pub fn new(d: usize, forms: Vec<Vec<Rational>>) -> Result<Self> {
        if d == 0 {
            return Err(Error::argument("dimension must be at least 1"));
        }
        for f in &forms {
            if f.len() != d {
                return Err(Error::Dimension {
                    expected: d,
                    found: f.len(),
                });
            }
        }
        let rows = forms.iter().map(|f| integer_row(f)).collect();
        Ok(CentralArrangement { d, forms, rows })
    }

    pub fn from_integers(d: usize, forms: &[Vec<i64>]) -> Result<Self> {
        let forms = forms
            .iter()
            .map(|f| f.iter().map(|&v| Rational::from_integer(v)).collect())
            .collect();
        CentralArrangement::new(d, forms)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[Vec<Rational>] {
        &self.forms
    }

    /// Integer forms with the same signs as the rational ones.
    pub fn integer_forms(&self) -> &[Row] {
        &self.rows
    }

    /// Whether some `x` has `sign(ℓᵢ(x)) = Xᵢ` for all `i`.
    pub fn feasible_sign_vector(&self, x: &SignedVector) -> Result<bool> {
        if x.len() != self.n() {
            return Err(Error::Dimension {
                expected: self.n(),
                found: x.len(),
            });
        }
        Ok(feasible_prefix(&self.rows, &x.signs().collect::<Vec<_>>()))
    }

    /// All feasible sign vectors in canonical order.
    ///
    /// Depth-first over elements `1..n`, pruning every infeasible prefix;
    /// `jobs > 1` splits the top-level branches across threads without
    /// affecting the result.
    pub fn covectors(&self, jobs: usize) -> Result<Vec<SignedVector>> {
        Error::check_capacity("arrangement size", self.n(), MAX_GROUND)?;
        Ok(enumerate_cells(&self.rows, &vec![None; self.n()], jobs))
    }

    pub fn oriented_matroid(&self, jobs: usize) -> Result<OrientedMatroid> {
        if self.n() == 0 {
            return Err(Error::argument("arrangement has no forms"));
        }
        let covectors = self.covectors(jobs)?;
        OrientedMatroid::from_covectors(self.n(), &covectors)
    }

    /// Rank of the form matrix over ℚ.
    pub fn rank(&self) -> usize {
        matrix_rank(&self.rows)
    }
}

fn matrix_rank(rows: &[Row]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|v| BigRational::from_integer(v.clone())).collect())
        .collect();
    let width = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let factor = &m[i][col] / &m[rank][col];
                for j in col..width {
                    let delta = &factor * &m[rank][j];
                    m[i][j] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn feasible_prefix(rows: &[Row], signs: &[Sign]) -> bool {
    let mut strict = Vec::new();
    let mut equal = Vec::new();
    for (row, s) in rows.iter().zip(signs) {
        match s {
            Sign::Plus => strict.push(row.clone()),
            Sign::Minus => strict.push(row.iter().map(|v| -v).collect()),
            Sign::Zero => equal.push(row.clone()),
        }
    }
    fm::is_feasible(&strict, &equal)
}

const SIGNS: [Sign; 3] = [Sign::Plus, Sign::Minus, Sign::Zero];

/// Feasible full sign vectors, with coordinates in `fixed` pinned to the given sign.
fn enumerate_cells(rows: &[Row], fixed: &[Option<Sign>], jobs: usize) -> Vec<SignedVector> {
    let n = rows.len();

    fn dfs(
        rows: &[Row],
        fixed: &[Option<Sign>],
        prefix: &mut Vec<Sign>,
        out: &mut Vec<SignedVector>,
    ) {
        if !feasible_prefix(rows, prefix) {
            return;
        }
        if prefix.len() == rows.len() {
            out.push(SignedVector::from_signs(prefix).expect("prefix length fits"));
            return;
        }
        let k = prefix.len();
        let choices: &[Sign] = match &fixed[k] {
            Some(s) => std::slice::from_ref(s),
            None => &SIGNS,
        };
        for &s in choices {
            prefix.push(s);
            dfs(rows, fixed, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let top: Vec<Sign> = match fixed[0] {
        Some(s) => vec![s],
        None => SIGNS.to_vec(),
    };
    let jobs = jobs.max(1).min(top.len());
    if jobs <= 1 {
        let mut prefix = Vec::with_capacity(n);
        for s in top {
            prefix.push(s);
            dfs(rows, fixed, &mut prefix, &mut out);
            prefix.pop();
        }
    } else {
        let parts: Vec<Vec<SignedVector>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|j| {
                    let branches: Vec<Sign> =
                        top.iter().copied().skip(j).step_by(jobs).collect();
                    scope.spawn(move || {
                        let mut local = Vec::new();
                        let mut prefix = Vec::with_capacity(n);
                        for s in branches {
                            prefix.push(s);
                            dfs(rows, fixed, &mut prefix, &mut local);
                            prefix.pop();
                        }
                        local
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("enumeration thread panicked"))
                .collect()
        });
        out = parts.into_iter().flatten().collect();
    }
    out.sort();
    out
}

/// A strict affine inequality `a·x + b > 0`, stored as `[a₁, ..., a_d, b]`.
pub type AffineInequality = Vec<Rational>;

/// Open polyhedra `U₁, ..., U_m` inside an open polyhedral ambient set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralCover {
    d: usize,
    regions: Vec<Vec<AffineInequality>>,
    ambient: Vec<AffineInequality>,
}

/// Largest number of distinct inequalities accepted by [`PolyhedralCover::code`].
pub const MAX_COVER_INEQUALITIES: usize = 24;

impl PolyhedralCover {
    pub fn new(
        d: usize,
        regions: Vec<Vec<AffineInequality>>,
        ambient: Vec<AffineInequality>,
    ) -> Result<Self> {
        if d == 0 {
            return Err(Error::argument("dimension must be at least 1"));
        }
        for ineq in regions.iter().flatten().chain(&ambient) {
            if ineq.len() != d + 1 {
                return Err(Error::Dimension {
                    expected: d + 1,
                    found: ineq.len(),
                });
            }
        }
        Ok(PolyhedralCover {
            d,
            regions,
            ambient,
        })
    }

    /// The open intervals `(aᵢ, bᵢ)` of the real line inside the ambient interval `(lo, hi)`.
    pub fn intervals(intervals: &[(Rational, Rational)], ambient: (Rational, Rational)) -> Result<Self> {
        let interval = |lo: &Rational, hi: &Rational| -> Vec<AffineInequality> {
            let neg = |r: &Rational| Rational(-r.0.clone());
            vec![
                vec![Rational::from_integer(1), neg(lo)],
                vec![Rational::from_integer(-1), hi.clone()],
            ]
        };
        let regions = intervals.iter().map(|(a, b)| interval(a, b)).collect();
        PolyhedralCover::new(1, regions, interval(&ambient.0, &ambient.1))
    }

    /// The open positive half-spaces `Hᵢ⁺` of a central arrangement, ambient `ℝᵈ`.
    pub fn positive_half_spaces(a: &CentralArrangement) -> Self {
        let regions = a.forms().iter().map(|f| vec![homogeneous(f)]).collect();
        PolyhedralCover {
            d: a.d(),
            regions,
            ambient: vec![],
        }
    }

    /// `Uₑ = Hₑ⁺` for `e ≤ n` and `U_{n+e} = Hₑ⁻`, ambient `ℝᵈ`.
    pub fn signed_half_spaces(a: &CentralArrangement) -> Self {
        let mut regions: Vec<Vec<AffineInequality>> =
            a.forms().iter().map(|f| vec![homogeneous(f)]).collect();
        regions.extend(a.forms().iter().map(|f| {
            let neg: Vec<Rational> = f.iter().map(|r| Rational(-r.0.clone())).collect();
            vec![homogeneous(&neg)]
        }));
        PolyhedralCover {
            d: a.d(),
            regions,
            ambient: vec![],
        }
    }

    /// The cover `Vⱼ = ∩_{i ∈ σⱼ} Uᵢ` (`None`: the empty set, `∅`: the ambient set).
    pub fn intersection_cover(&self, sigmas: &[Option<ElementSet>]) -> Result<Self> {
        let m = self.regions.len();
        let mut regions = Vec::with_capacity(sigmas.len());
        for sigma in sigmas {
            match sigma {
                None => {
                    let mut never = vec![Rational::from_integer(0); self.d];
                    never.push(Rational::from_integer(-1));
                    regions.push(vec![never]);
                }
                Some(s) => {
                    if s.max_element() > m {
                        return Err(Error::argument(format!(
                            "intersection set {s} exceeds the {m} regions"
                        )));
                    }
                    regions.push(s.iter().flat_map(|i| self.regions[i - 1].clone()).collect());
                }
            }
        }
        Ok(PolyhedralCover {
            d: self.d,
            regions,
            ambient: self.ambient.clone(),
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn regions(&self) -> &[Vec<AffineInequality>] {
        &self.regions
    }

    pub fn ambient(&self) -> &[AffineInequality] {
        &self.ambient
    }

    /// The code `{σ | some ambient point lies in exactly the regions σ}`.
    ///
    /// Each distinct inequality `a·x + b > 0` becomes the central form
    /// `b·x₀ + a·x` on `ℚ^{d+1}`; cells are enumerated with `x₀ > 0` and
    /// every ambient form positive, including lower-dimensional cells.
    pub fn code(&self, jobs: usize) -> Result<Code> {
        let mut index: HashMap<Row, usize> = HashMap::new();
        let mut rows: Vec<Row> = Vec::new();
        let mut id = |ineq: &AffineInequality, rows: &mut Vec<Row>| -> usize {
            let mut lifted: Vec<Rational> = Vec::with_capacity(self.d + 1);
            lifted.push(ineq[self.d].clone());
            lifted.extend(ineq[..self.d].iter().cloned());
            let row = integer_row(&lifted);
            *index.entry(row.clone()).or_insert_with(|| {
                rows.push(row);
                rows.len() - 1
            })
        };
        let region_ids: Vec<Vec<usize>> = self
            .regions
            .iter()
            .map(|r| r.iter().map(|q| id(q, &mut rows)).collect())
            .collect();
        let ambient_ids: BTreeSet<usize> = self.ambient.iter().map(|q| id(q, &mut rows)).collect();
        Error::check_capacity("distinct cover inequalities", rows.len(), MAX_COVER_INEQUALITIES)?;

        // The homogenizing coordinate comes first and is forced positive.
        let mut x0 = vec![BigInt::zero(); self.d + 1];
        x0[0] = BigInt::one();
        let mut all_rows = vec![x0];
        all_rows.extend(rows.iter().cloned());
        let mut fixed: Vec<Option<Sign>> = vec![None; all_rows.len()];
        fixed[0] = Some(Sign::Plus);
        for &a in &ambient_ids {
            fixed[a + 1] = Some(Sign::Plus);
        }
        let cells = enumerate_cells(&all_rows, &fixed, jobs);
        let words = cells.iter().map(|cell| {
            region_ids
                .iter()
                .enumerate()
                .filter(|(_, ids)| ids.iter().all(|&q| cell.get(q + 2) == Sign::Plus))
                .map(|(i, _)| i + 1)
                .collect::<ElementSet>()
        });
        Code::new(self.regions.len(), words)
    }
}

/// `ℓ(x) > 0` as an affine inequality with zero constant term.
fn homogeneous(form: &[Rational]) -> AffineInequality {
    let mut ineq = form.to_vec();
    ineq.push(Rational::from_integer(0));
    ineq
}

impl Rational {
    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{matroid_code, CodeMode};
    use crate::matroid::validate_covectors;

    fn sv(s: &str) -> SignedVector {
        s.parse().unwrap()
    }

    fn r(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn rational_parsing() {
        let q: Rational = "6/-4".parse().unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!("7".parse::<Rational>().unwrap(), r(7));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn feasibility_examples() {
        let a = CentralArrangement::from_integers(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        assert!(!a.feasible_sign_vector(&sv("++-")).unwrap());
        assert!(a.feasible_sign_vector(&sv("000")).unwrap());
        let b = CentralArrangement::from_integers(2, &[vec![1, 0], vec![-1, 0]]).unwrap();
        assert!(!b.feasible_sign_vector(&sv("++")).unwrap());
        assert!(a.feasible_sign_vector(&sv("++")).is_err());
    }

    #[test]
    fn m1_topes() {
        let a = CentralArrangement::from_integers(2, &[vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap();
        let m = a.oriented_matroid(1).unwrap();
        let topes: Vec<String> = m.topes().iter().map(|t| t.to_string()).collect();
        assert_eq!(topes, ["+-+", "+--", "-++", "-+-"]);
    }

    #[test]
    fn generic_three_lines() {
        let a = CentralArrangement::from_integers(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let covectors = a.covectors(1).unwrap();
        // Oracle: test all 27 sign vectors directly.
        let brute: Vec<SignedVector> = SignedVector::all(3)
            .filter(|x| a.feasible_sign_vector(x).unwrap())
            .collect();
        let mut brute = brute;
        brute.sort();
        assert_eq!(covectors, brute);
        assert_eq!(covectors.len(), 13);
        let m = a.oriented_matroid(1).unwrap();
        assert_eq!(m.topes().len(), 6);
        assert_eq!(m.cocircuits().len(), 6);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn zero_form_is_a_loop() {
        let a = CentralArrangement::from_integers(1, &[vec![0]]).unwrap();
        let m = a.oriented_matroid(1).unwrap();
        assert_eq!(m.covectors(), &[sv("0")]);
        assert_eq!(m.loops(), ElementSet::singleton(1));
    }

    #[test]
    fn jobs_do_not_change_output() {
        let a = CentralArrangement::from_integers(
            3,
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1], vec![1, -2, 3]],
        )
        .unwrap();
        let one = a.covectors(1).unwrap();
        assert_eq!(one, a.covectors(2).unwrap());
        assert_eq!(one, a.covectors(3).unwrap());
        assert!(validate_covectors(5, &one).unwrap().valid);
    }

    #[test]
    fn interval_cover_codes() {
        let q = |p, d| Rational::from_ratio(p, d).unwrap();
        // (0,2), (1,4), (3,4) inside (-1,7)
        let cover = PolyhedralCover::intervals(
            &[(q(0, 1), q(2, 1)), (q(1, 1), q(4, 1)), (q(3, 1), q(4, 1))],
            (q(-1, 1), q(7, 1)),
        )
        .unwrap();
        let code = cover.code(1).unwrap();
        assert_eq!(code, Code::parse_compact(3, "∅ 1 2 12 23").unwrap());
        // With U₃ = (3, 6) the point 5 lies in U₃ alone.
        let cover = PolyhedralCover::intervals(
            &[(q(0, 1), q(2, 1)), (q(1, 1), q(4, 1)), (q(3, 1), q(6, 1))],
            (q(-1, 1), q(7, 1)),
        )
        .unwrap();
        assert_eq!(
            cover.code(1).unwrap(),
            Code::parse_compact(3, "∅ 1 2 3 12 23").unwrap()
        );
    }

    #[test]
    fn ambient_region_is_in_every_codeword() {
        let q = |p| Rational::from_integer(p);
        let cover = PolyhedralCover::intervals(
            &[(q(-1), q(7)), (q(1), q(4))],
            (q(-1), q(7)),
        )
        .unwrap();
        let code = cover.code(1).unwrap();
        assert!(code.words().iter().all(|w| w.contains(1)));
    }

    #[test]
    fn positive_half_spaces_give_l_plus() {
        let a = CentralArrangement::from_integers(2, &[vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let m = a.oriented_matroid(1).unwrap();
        let code = PolyhedralCover::positive_half_spaces(&a).code(1).unwrap();
        assert_eq!(code, matroid_code(&m, CodeMode::LPlus));
        let code = PolyhedralCover::signed_half_spaces(&a).code(1).unwrap();
        assert_eq!(code, matroid_code(&m, CodeMode::LPlusMinus));
    }

    #[test]
    fn empty_intersection_set_is_sentinel() {
        let a = CentralArrangement::from_integers(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        let cover = PolyhedralCover::positive_half_spaces(&a);
        let v = cover
            .intersection_cover(&[None, Some(ElementSet::EMPTY), Some(ElementSet::full(2))])
            .unwrap();
        let code = v.code(1).unwrap();
        assert_eq!(code, Code::parse_compact(3, "2 23").unwrap());
    }

    #[test]
    fn rank_matches_matrix() {
        let a = CentralArrangement::from_integers(3, &[vec![1, 0, 0], vec![2, 0, 0], vec![0, 1, 1]])
            .unwrap();
        assert_eq!(a.rank(), 2);
        assert_eq!(a.oriented_matroid(1).unwrap().rank(), 2);
    }
}
