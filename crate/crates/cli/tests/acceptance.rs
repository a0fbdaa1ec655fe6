//! Acceptance suite: one test per verification criterion, each printing a
//! pass/fail line. Every identity is exact; runtime budgets are asserted
//! where one is stated. Run with `cargo test --test acceptance` (add
//! `-- --nocapture` to see the lines for passing criteria too).

use std::process::Command;
use std::time::{Duration, Instant};

use dissections::counting::DissectionType;
use dissections::dissect::dissection_type;
use dissections_cli::{grammar, verify};

fn report(
    number: usize,
    name: &str,
    budget: Option<Duration>,
    run: impl FnOnce() -> Result<(), String>,
) {
    let start = Instant::now();
    let result = run();
    let elapsed = start.elapsed();
    match &result {
        Ok(()) => println!("criterion {number} ({name}): PASS ({elapsed:.2?})"),
        Err(e) => println!("criterion {number} ({name}): FAIL - {e} ({elapsed:.2?})"),
    }
    if let Err(e) = result {
        panic!("criterion {number} ({name}) failed: {e}");
    }
    if let Some(budget) = budget {
        assert!(
            elapsed < budget,
            "criterion {number} ({name}) took {elapsed:.2?}, budget {budget:.2?}"
        );
    }
}

/// |S_2(n,k)| = |T_2(n+k-1,k)| = 2-associated Stirling numbers for
/// 2 <= n <= 7, with the spot values 10, 15 and 3.
#[test]
fn criterion_1_cardinality_identity() {
    report(
        1,
        "cardinality identity",
        Some(Duration::from_secs(60)),
        || verify::check_cardinality(7),
    );
}

/// Both roundtrips of the nested-set/partition bijection are identities on
/// every instance for n <= 7.
#[test]
fn criterion_2_phi_bijectivity() {
    report(
        2,
        "phi bijectivity",
        Some(Duration::from_secs(120)),
        || verify::check_phi_roundtrip(7),
    );
}

/// The ordered bijection over all n! leaf lists is injective onto the
/// admissible internally ordered partitions for n <= 6, roundtrips both
/// ways.
#[test]
fn criterion_3_gamma_bijectivity() {
    report(
        3,
        "gamma bijectivity",
        Some(Duration::from_secs(180)),
        || verify::check_gamma_bijection(6),
    );
}

/// Triple counts equal the closed formula and k times the ordered-partition
/// count for n <= 6; the codec roundtrips; a pinned n=7, k=4 golden triple
/// decodes and re-encodes bit-exactly.
#[test]
fn criterion_4_triple_codec() {
    report(4, "triple codec", None, || verify::check_triple_codec(6));
}

/// The dissection-number formula equals exhaustive generation for n <= 8,
/// with the hexagon spot values 9, 21, 14, and the full-triangulation
/// column equal to the Catalan numbers up to n = 12.
#[test]
fn criterion_5_kirkman_cayley() {
    report(5, "Kirkman-Cayley formula", None, || {
        verify::check_kirkman_cayley(8)
    });
}

/// Classifying every enumerated dissection by type reproduces the
/// prescribed-type formula for every admissible type, and the types sum to
/// the dissection number, for n <= 8.
#[test]
fn criterion_6_prescribed_type_formula() {
    report(
        6,
        "prescribed-type formula",
        Some(Duration::from_secs(120)),
        || verify::check_type_counts(8),
    );
}

/// Every enumerated dissection's type satisfies sum(m_j) = k and
/// sum(i_j m_j) = n + 2k - 1, exhaustively for n <= 8.
#[test]
fn criterion_7_type_relations() {
    report(7, "type relations", None, || verify::check_type_relations(8));
}

/// Group-action laws hold on 100 random pairs per (n,k) for n <= 6, and a
/// witness permutation at n=5, k=4 shows the action is more than leaf
/// relabelling.
#[test]
fn criterion_8_induced_action() {
    report(8, "induced action", None, || verify::check_action_laws(6));
}

/// The figure golden test, end to end through the binary: rendering
/// (1,((2,3),(4,5))) yields a hexagon with exactly 3 diagonals, and its
/// type is 3^4.
#[test]
fn criterion_9_figure_golden() {
    report(9, "figure golden render", None, || {
        let out = Command::new(env!("CARGO_BIN_EXE_dissect"))
            .args(["render", "--parens", "(1,((2,3),(4,5)))"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("render exited with {:?}", out.status.code()));
        }
        let svg = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        let diagonals = svg.matches("class=\"diagonal\"").count();
        if diagonals != 3 {
            return Err(format!("rendered {diagonals} diagonals, want 3"));
        }
        let hexagon_points = svg
            .lines()
            .find(|l| l.contains("class=\"outline\""))
            .map(|l| l.matches(',').count())
            .unwrap_or(0);
        if hexagon_points != 6 {
            return Err(format!("outline has {hexagon_points} vertices, want 6"));
        }
        let p = grammar::parse("(1,((2,3),(4,5)))").map_err(|e| e.to_string())?;
        let t = dissection_type(&p).map_err(|e| e.to_string())?;
        if t != DissectionType::new(vec![(3, 4)]) {
            return Err(format!("type is {t}, want 3^4"));
        }
        verify::check_figure_golden()
    });
}
