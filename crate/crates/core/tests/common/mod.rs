//! Shared fixtures and independent oracles for the integration tests.
//!
//! The oracles work on plain `Vec<char>` sign strings so that they share no
//! code with the library under test.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use omcode::arrangement::CentralArrangement;
use omcode::catalog::{battery, BatteryKind, BatteryParams, NamedInstance, Payload};
use omcode::matroid::OrientedMatroid;
use omcode::sign::SignedVector;

pub type Signs = Vec<char>;

pub fn signs(v: &SignedVector) -> Signs {
    v.to_string().chars().collect()
}

fn compose(x: &Signs, y: &Signs) -> Signs {
    x.iter().zip(y).map(|(a, b)| if *a == '0' { *b } else { *a }).collect()
}

fn negate(x: &Signs) -> Signs {
    x.iter()
        .map(|c| match c {
            '+' => '-',
            '-' => '+',
            _ => '0',
        })
        .collect()
}

fn separator(x: &Signs, y: &Signs) -> Vec<usize> {
    (0..x.len())
        .filter(|&i| (x[i] == '+' && y[i] == '-') || (x[i] == '-' && y[i] == '+'))
        .collect()
}

/// The set of covector axioms (`"V1"` … `"V4"`) violated by `list`, by direct
/// quantification over all pairs.
pub fn naive_covector_violations(n: usize, list: &[Signs]) -> BTreeSet<String> {
    let set: HashSet<&Signs> = list.iter().collect();
    let mut out = BTreeSet::new();
    if !set.contains(&vec!['0'; n]) {
        out.insert("V1".to_string());
    }
    if list.iter().any(|x| !set.contains(&negate(x))) {
        out.insert("V2".to_string());
    }
    'v3: for x in list {
        for y in list {
            if !set.contains(&compose(x, y)) {
                out.insert("V3".to_string());
                break 'v3;
            }
        }
    }
    'v4: for x in list {
        for y in list {
            let sep = separator(x, y);
            let xy = compose(x, y);
            for &e in &sep {
                let found = list.iter().any(|z| {
                    z[e] == '0' && (0..n).all(|f| sep.contains(&f) || z[f] == xy[f])
                });
                if !found {
                    out.insert("V4".to_string());
                    break 'v4;
                }
            }
        }
    }
    out
}

/// Orthogonality: the agreeing and opposing supports are both empty or both nonempty.
pub fn orthogonal(x: &Signs, y: &Signs) -> bool {
    let mut agree = false;
    let mut oppose = false;
    for (a, b) in x.iter().zip(y) {
        match (a, b) {
            ('0', _) | (_, '0') => {}
            (a, b) if a == b => agree = true,
            _ => oppose = true,
        }
    }
    agree == oppose
}

/// The arrangement battery used throughout: 60 acyclic rational
/// arrangements with `d ≤ 4` and `n ≤ 6`.
pub fn arrangement_battery() -> Vec<(String, CentralArrangement, OrientedMatroid)> {
    const CONFIGS: &[(usize, usize, u64)] = &[(3, 2, 11), (4, 2, 1), (5, 2, 12), (5, 3, 13), (6, 3, 14), (6, 4, 15)];
    let mut out = Vec::new();
    for &(n, d, seed) in CONFIGS {
        let instances = battery(BatteryKind::AcyclicArrangements, BatteryParams { count: 10, n, d }, seed)
            .expect("battery generation");
        for NamedInstance { name, payload } in instances {
            match payload {
                Payload::Arrangement { arrangement, matroid } => out.push((name, arrangement, matroid)),
                other => panic!("unexpected payload {}", other.kind()),
            }
        }
    }
    out
}
