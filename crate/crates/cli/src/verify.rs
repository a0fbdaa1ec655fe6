//! The cross-check harness behind `dissect verify`: every counting
//! identity is driven both by closed formula and exhaustive generation,
//! bounded by `max_n` and by each identity's own desk-scale ceiling.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rand::prelude::*;
use rand::rngs::StdRng;

use dissections::bijections::{
    decode_triple, encode_triple, induced_action, nested_to_partition,
    ordered_partition_to_parens, parens_to_ordered_partition, partition_to_nested,
};
use dissections::counting::{
    assoc_stirling2, dissection_types, distinguished_count, kirkman_cayley, type_count,
    DissectionType,
};
use dissections::dissect::{dissection_from_parenthesization, dissection_type, render_svg};
use dissections::{enumeration, NestedSet, Triple};

use crate::grammar;

pub struct CheckReport {
    pub name: &'static str,
    pub range: String,
    pub result: Result<(), String>,
}

/// Runs every identity check, each bounded by `min(max_n, its own cap)`.
pub fn run_all(max_n: usize) -> Vec<CheckReport> {
    let mut reports = Vec::new();
    let mut push = |name: &'static str, cap: usize, result: Result<(), String>| {
        let hi = max_n.min(cap);
        reports.push(CheckReport {
            name,
            range: format!("n=2..={hi}"),
            result,
        });
    };
    push("cardinality-ward", 7, check_cardinality(max_n.min(7)));
    push("phi-roundtrip", 7, check_phi_roundtrip(max_n.min(7)));
    push("gamma-bijection", 6, check_gamma_bijection(max_n.min(6)));
    push("triple-codec", 6, check_triple_codec(max_n.min(6)));
    push("kirkman-cayley", 8, check_kirkman_cayley(max_n.min(8)));
    push("type-counts", 8, check_type_counts(max_n.min(8)));
    push("type-relations", 8, check_type_relations(max_n.min(8)));
    push("action-laws", 6, check_action_laws(max_n.min(6)));
    reports.push(CheckReport {
        name: "figure-golden",
        range: "hexagon".into(),
        result: check_figure_golden(),
    });
    reports
}

fn pairs(max_n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max_n).flat_map(|n| (1..n).map(move |k| (n, k)))
}

/// |S_2(n,k)| = |T_2(n+k-1,k)| = the 2-associated Stirling number.
pub fn check_cardinality(max_n: usize) -> Result<(), String> {
    for (n, k) in pairs(max_n) {
        let m = n + k - 1;
        let nested = enumeration::nested_sets(n, k).map_err(|e| e.to_string())?.len();
        let parts = enumeration::partitions2(m, k).map_err(|e| e.to_string())?.len();
        let ward = assoc_stirling2(m, k);
        if BigUint::from(nested) != ward || BigUint::from(parts) != ward {
            return Err(format!(
                "n={n} k={k}: |S_2|={nested}, |T_2|={parts}, ward={ward}"
            ));
        }
    }
    let spots = [(4, 2, 10usize), (4, 3, 15), (3, 2, 3)];
    for (n, k, expect) in spots {
        if n > max_n {
            continue;
        }
        let got = enumeration::nested_sets(n, k).map_err(|e| e.to_string())?.len();
        if got != expect {
            return Err(format!("spot value n={n} k={k}: got {got}, want {expect}"));
        }
    }
    Ok(())
}

/// Both roundtrips of the nested-set/partition bijection are identities on
/// every instance, and the image fills the whole target family.
pub fn check_phi_roundtrip(max_n: usize) -> Result<(), String> {
    for (n, k) in pairs(max_n) {
        let m = n + k - 1;
        let mut image = BTreeSet::new();
        for s in enumeration::nested_sets(n, k).map_err(|e| e.to_string())? {
            let p = nested_to_partition(&s).map_err(|e| e.to_string())?;
            let back = partition_to_nested(&p, n, k).map_err(|e| e.to_string())?;
            if back != s {
                return Err(format!("phi_inv(phi(s)) != s at n={n} k={k}"));
            }
            if !image.insert(serde_json::to_string(&p).unwrap()) {
                return Err(format!("phi not injective at n={n} k={k}"));
            }
        }
        let targets = enumeration::partitions2(m, k).map_err(|e| e.to_string())?;
        if image.len() != targets.len() {
            return Err(format!(
                "phi image has {} of {} partitions at n={n} k={k}",
                image.len(),
                targets.len()
            ));
        }
        for p in targets {
            let s = partition_to_nested(&p, n, k).map_err(|e| e.to_string())?;
            if nested_to_partition(&s).map_err(|e| e.to_string())? != p {
                return Err(format!("phi(phi_inv(p)) != p at n={n} k={k}"));
            }
        }
    }
    Ok(())
}

/// The ordered bijection over all n! leaf lists is injective onto the
/// admissible internally ordered partitions, with both roundtrips identities.
pub fn check_gamma_bijection(max_n: usize) -> Result<(), String> {
    use itertools::Itertools;
    for (n, k) in pairs(max_n) {
        let m = n + k - 1;
        let mut image = BTreeSet::new();
        for perm in (1..=n).permutations(n) {
            for p in enumeration::parenthesizations(n, k, &perm).map_err(|e| e.to_string())? {
                let q = parens_to_ordered_partition(&p).map_err(|e| e.to_string())?;
                if ordered_partition_to_parens(&q, n, k).map_err(|e| e.to_string())? != p {
                    return Err(format!("gamma_inv(gamma(p)) != p at n={n} k={k}"));
                }
                if !image.insert(serde_json::to_string(&q).unwrap()) {
                    return Err(format!("gamma not injective at n={n} k={k}"));
                }
            }
        }
        let targets = enumeration::ordered_partitions(m, k).map_err(|e| e.to_string())?;
        if image.len() != targets.len() {
            return Err(format!(
                "gamma image has {} of {} ordered partitions at n={n} k={k}",
                image.len(),
                targets.len()
            ));
        }
        for q in targets {
            let p = ordered_partition_to_parens(&q, n, k).map_err(|e| e.to_string())?;
            if parens_to_ordered_partition(&p).map_err(|e| e.to_string())? != q {
                return Err(format!("gamma(gamma_inv(q)) != q at n={n} k={k}"));
            }
        }
    }
    Ok(())
}

/// Triple counts match the closed formula and k times the ordered-partition
/// count; the codec roundtrips both ways; a pinned golden decode survives
/// re-encodes bit-exactly.
pub fn check_triple_codec(max_n: usize) -> Result<(), String> {
    for (n, k) in pairs(max_n) {
        let m = n + k - 1;
        let generated = enumeration::triples(n, k).map_err(|e| e.to_string())?;
        let formula = distinguished_count(n, k).map_err(|e| e.to_string())?;
        if BigUint::from(generated.len()) != formula {
            return Err(format!(
                "triple count {} != formula {formula} at n={n} k={k}",
                generated.len()
            ));
        }
        let ordered = enumeration::ordered_partitions(m, k).map_err(|e| e.to_string())?;
        if generated.len() != k * ordered.len() {
            return Err(format!(
                "{} triples != k * {} ordered partitions at n={n} k={k}",
                generated.len(),
                ordered.len()
            ));
        }
        for t in &generated {
            let q = decode_triple(t).map_err(|e| e.to_string())?;
            if &encode_triple(&q, n, k).map_err(|e| e.to_string())? != t {
                return Err(format!("encode(decode(t)) != t at n={n} k={k}"));
            }
        }
        for q in &ordered {
            for d in 0..k {
                let marked = q.with_distinguished(d).map_err(|e| e.to_string())?;
                let t = encode_triple(&marked, n, k).map_err(|e| e.to_string())?;
                if decode_triple(&t).map_err(|e| e.to_string())? != marked {
                    return Err(format!("decode(encode(q)) != q at n={n} k={k}"));
                }
            }
        }
    }

    // Golden decode: n=7, k=4.
    let triple = Triple::new(
        7,
        4,
        vec![1, 2, 3, 4, 6, 9, 10],
        vec![2, 5, 1, 7, 3, 6, 4],
        vec![3, 5, 6],
    );
    let q = decode_triple(&triple).map_err(|e| e.to_string())?;
    let expected: &[&[usize]] = &[&[4, 2, 6], &[5, 1, 10], &[7, 3], &[8, 9]];
    if q.blocks() != expected || q.distinguished() != Some(0) {
        return Err(format!("golden triple decoded to {q:?}"));
    }
    if encode_triple(&q, 7, 4).map_err(|e| e.to_string())? != triple {
        return Err("golden triple did not re-encode bit-exactly".into());
    }
    Ok(())
}

/// The dissection-number formula agrees with exhaustive generation, and the
/// full-triangulation column is the Catalan sequence.
pub fn check_kirkman_cayley(max_n: usize) -> Result<(), String> {
    let identity: Vec<usize> = (1..=max_n.max(2)).collect();
    for (n, k) in pairs(max_n) {
        let formula = kirkman_cayley(n, k).map_err(|e| e.to_string())?;
        let generated = enumeration::parenthesizations(n, k, &identity[..n])
            .map_err(|e| e.to_string())?
            .len();
        if BigUint::from(generated) != formula {
            return Err(format!(
                "generated {generated} != formula {formula} at n={n} k={k}"
            ));
        }
    }
    let spots = [(5, 2, 9usize), (5, 3, 21), (5, 4, 14)];
    for (n, k, expect) in spots {
        if n > max_n {
            continue;
        }
        if kirkman_cayley(n, k).map_err(|e| e.to_string())? != BigUint::from(expect) {
            return Err(format!("hexagon spot value k={k} is not {expect}"));
        }
    }
    let mut catalan = BigUint::from(1usize);
    for n in 2..=12usize {
        // C_{j+1} = C_j * 2(2j+1)/(j+2) with j = n-2.
        let j = n - 2;
        catalan = catalan * BigUint::from(2 * (2 * j + 1)) / BigUint::from(j + 2);
        if kirkman_cayley(n, n - 1).map_err(|e| e.to_string())? != catalan {
            return Err(format!("kirkman_cayley({n},{}) is not Catalan", n - 1));
        }
    }
    Ok(())
}

/// Classifying every enumerated dissection by type reproduces the
/// prescribed-type formula exactly, and the types sum to the dissection
/// number.
pub fn check_type_counts(max_n: usize) -> Result<(), String> {
    for (n, k) in pairs(max_n) {
        let identity: Vec<usize> = (1..=n).collect();
        let mut tally: BTreeMap<DissectionType, usize> = BTreeMap::new();
        for p in enumeration::parenthesizations(n, k, &identity).map_err(|e| e.to_string())? {
            let t = dissection_type(&p).map_err(|e| e.to_string())?;
            *tally.entry(t).or_insert(0) += 1;
        }
        let types = dissection_types(n, k).map_err(|e| e.to_string())?;
        if tally.len() != types.len() {
            return Err(format!(
                "{} observed types != {} admissible types at n={n} k={k}",
                tally.len(),
                types.len()
            ));
        }
        let mut total = BigUint::from(0usize);
        for t in &types {
            let formula = type_count(n, k, t).map_err(|e| e.to_string())?;
            let observed = tally.get(t).copied().unwrap_or(0);
            if BigUint::from(observed) != formula {
                return Err(format!(
                    "type {t}: observed {observed}, formula {formula} at n={n} k={k}"
                ));
            }
            total += formula;
        }
        if total != kirkman_cayley(n, k).map_err(|e| e.to_string())? {
            return Err(format!("type counts do not sum to D at n={n} k={k}"));
        }
    }
    Ok(())
}

/// Every enumerated dissection's type satisfies the two defining relations.
pub fn check_type_relations(max_n: usize) -> Result<(), String> {
    for (n, k) in pairs(max_n) {
        let identity: Vec<usize> = (1..=n).collect();
        for p in enumeration::parenthesizations(n, k, &identity).map_err(|e| e.to_string())? {
            let t = dissection_type(&p).map_err(|e| e.to_string())?;
            t.validate_for(n, k)
                .map_err(|e| format!("type {t} at n={n} k={k}: {e}"))?;
        }
    }
    Ok(())
}

/// Group-action laws on 100 random pairs per parameter cell, plus a witness
/// that the action is more than leaf relabelling for k > 3.
pub fn check_action_laws(max_n: usize) -> Result<(), String> {
    let mut rng = StdRng::seed_from_u64(20_260_810);
    for (n, k) in pairs(max_n) {
        let m = n + k - 1;
        let family = enumeration::nested_sets(n, k).map_err(|e| e.to_string())?;
        let identity: Vec<usize> = (1..=m).collect();
        for _ in 0..100 {
            let s = family.choose(&mut rng).unwrap();
            let mut g = identity.clone();
            let mut h = identity.clone();
            g.shuffle(&mut rng);
            h.shuffle(&mut rng);
            if &induced_action(&identity, s).map_err(|e| e.to_string())? != s {
                return Err(format!("identity law fails at n={n} k={k}"));
            }
            let gh: Vec<usize> = h.iter().map(|&x| g[x - 1]).collect();
            let composed = induced_action(&gh, s).map_err(|e| e.to_string())?;
            let staged = induced_action(
                &g,
                &induced_action(&h, s).map_err(|e| e.to_string())?,
            )
            .map_err(|e| e.to_string())?;
            if composed != staged {
                return Err(format!("composition law fails at n={n} k={k}"));
            }
        }
    }
    if max_n >= 5 {
        find_relabelling_witness()?;
    }
    Ok(())
}

/// Searches n=5, k=4 for a permutation fixing [1,5] setwise whose action
/// is not the corresponding leaf relabelling.
fn find_relabelling_witness() -> Result<(), String> {
    use itertools::Itertools;
    let (n, k) = (5, 4);
    let m = n + k - 1;
    let family = enumeration::nested_sets(n, k).map_err(|e| e.to_string())?;
    for alpha in (1..=n).permutations(n) {
        for beta in (n + 1..=m).permutations(m - n) {
            let mut g = alpha.clone();
            g.extend(&beta);
            for s in &family {
                let relabelled = NestedSet::new(
                    n,
                    s.blocks()
                        .iter()
                        .map(|b| b.iter().map(|&e| alpha[e - 1]).collect())
                        .collect::<Vec<_>>(),
                );
                if induced_action(&g, s).map_err(|e| e.to_string())? != relabelled {
                    return Ok(());
                }
            }
        }
    }
    Err("no witness: the action looks like plain leaf relabelling at n=5 k=4".into())
}

/// The triangulated hexagon: parse the figure's string, check the diagonal
/// count in both the dissection and its rendering, and the type.
pub fn check_figure_golden() -> Result<(), String> {
    let p = grammar::parse("(1,((2,3),(4,5)))").map_err(|e| e.to_string())?;
    let d = dissection_from_parenthesization(&p).map_err(|e| e.to_string())?;
    if d.sides() != 6 {
        return Err(format!("expected a hexagon, got {} sides", d.sides()));
    }
    if d.diagonals().len() != 3 {
        return Err(format!("expected 3 diagonals, got {}", d.diagonals().len()));
    }
    let svg = render_svg(&d).map_err(|e| e.to_string())?;
    let lines = svg.matches("class=\"diagonal\"").count();
    if lines != 3 {
        return Err(format!("rendering has {lines} diagonal lines, not 3"));
    }
    let t = dissection_type(&p).map_err(|e| e.to_string())?;
    if t != DissectionType::new(vec![(3, 4)]) {
        return Err(format!("type is {t}, not 3^4"));
    }
    Ok(())
}
