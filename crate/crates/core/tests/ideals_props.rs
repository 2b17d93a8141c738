//! Properties of neural and monomial ideals against brute-force oracles.

use std::collections::BTreeSet;

use omcode::codes::Code;
use omcode::ideals::{canonical_form, depolarize, polarize, Monomial, SquarefreeMonomialIdeal};
use omcode::sign::ElementSet;
use proptest::prelude::*;

fn subsets(n: usize) -> impl Iterator<Item = ElementSet> {
    (0u64..1 << n).map(ElementSet::from_bits)
}

/// Minimal pseudomonomials x_σ ∏_{i∈τ}(1 − x_i) vanishing on every codeword,
/// found by scanning all disjoint pairs (σ, τ) and discarding multiples.
fn brute_force_canonical_form(code: &Code) -> BTreeSet<(ElementSet, ElementSet)> {
    let n = code.n();
    let full = ElementSet::full(n);
    let vanishing: Vec<(ElementSet, ElementSet)> = subsets(n)
        .flat_map(|sigma| {
            (full - sigma)
                .subsets()
                .map(move |tau| (sigma, tau))
                .collect::<Vec<_>>()
        })
        .filter(|&(sigma, tau)| {
            code.words()
                .iter()
                .all(|&c| !(sigma.is_subset(c) && tau.is_disjoint(c)))
        })
        .collect();
    vanishing
        .iter()
        .copied()
        .filter(|&(s, t)| {
            !vanishing
                .iter()
                .any(|&(s2, t2)| (s2, t2) != (s, t) && s2.is_subset(s) && t2.is_subset(t))
        })
        .collect()
}

fn code_strategy(max_n: usize) -> impl Strategy<Value = Code> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::btree_set(0u64..(1 << n), 0..=(1usize << n))
            .prop_map(move |bits| Code::new(n, bits.into_iter().map(ElementSet::from_bits)).unwrap())
    })
}

fn ideal_strategy(max_n: usize) -> impl Strategy<Value = SquarefreeMonomialIdeal> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0u64..(1 << n), 0u64..(1 << n)), 0..6).prop_map(move |gens| {
            let monos = gens
                .into_iter()
                .map(|(x, y)| Monomial::new(ElementSet::from_bits(x), ElementSet::from_bits(y)))
                .collect();
            SquarefreeMonomialIdeal::new(n, monos).unwrap()
        })
    })
}

fn all_monomials(n: usize) -> impl Iterator<Item = Monomial> {
    subsets(n).flat_map(move |x| subsets(n).map(move |y| Monomial::new(x, y)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn canonical_form_matches_brute_force(code in code_strategy(4)) {
        let cf = canonical_form(&code).unwrap();
        let found: BTreeSet<(ElementSet, ElementSet)> =
            cf.proper_generators().iter().map(|p| (p.sigma, p.tau)).collect();
        let expected: BTreeSet<_> = brute_force_canonical_form(&code)
            .into_iter()
            .filter(|(s, t)| !s.is_empty() || !t.is_empty() || code.is_empty())
            .collect();
        prop_assert_eq!(found, expected);
    }

    #[test]
    fn polarization_round_trips(code in code_strategy(5)) {
        let cf = canonical_form(&code).unwrap();
        prop_assert_eq!(depolarize(&polarize(&cf)).variety().unwrap(), code);
    }

    #[test]
    fn alexander_duality_is_an_involution(j in ideal_strategy(3)) {
        prop_assert_eq!(j.alexander_dual().alexander_dual(), j);
    }

    #[test]
    fn intersection_is_membership_conjunction(a in ideal_strategy(2), b in ideal_strategy(2)) {
        prop_assume!(a.n() == b.n());
        let both = a.intersect(&b).unwrap();
        for m in all_monomials(a.n()) {
            prop_assert_eq!(both.contains(&m), a.contains(&m) && b.contains(&m), "{:?}", m);
        }
    }

    #[test]
    fn quotient_is_the_largest_colon(a in ideal_strategy(2), b in ideal_strategy(2)) {
        prop_assume!(a.n() == b.n());
        let q = a.quotient(&b).unwrap();
        for m in all_monomials(a.n()) {
            // Membership in a squarefree ideal depends only on support, so m·g ∈ I iff lcm(m, g) ∈ I.
            let expected = b.generators().iter().all(|g| a.contains(&m.lcm(g)));
            prop_assert_eq!(q.contains(&m), expected, "{:?}", m);
        }
    }
}

