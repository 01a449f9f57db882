//! Formula-to-code concordance.
//!
//! The registry is code: every row names a formula, the operation that
//! realizes it and the test that verifies it. Generation checks each name
//! against the embedded sources, so a renamed or deleted test (or
//! operation) turns into a listed gap instead of a stale table.

use std::collections::BTreeSet;
use std::fmt::Write;

mod registry;

pub use registry::REGISTRY;

/// One formula of the theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConcordanceRow {
    /// Stable formula identifier.
    pub id: &'static str,
    /// What the formula states.
    pub formula: &'static str,
    /// Path of the realizing function, e.g. `model::energy`.
    pub operation: &'static str,
    /// Name of the verifying test function.
    pub test: &'static str,
}

/// Library sources searched for operations.
const LIBRARY_SOURCES: &[&str] = &[
    include_str!("../../core/src/specfun.rs"),
    include_str!("../../core/src/model.rs"),
    include_str!("../../core/src/dsusy.rs"),
    include_str!("../../core/src/pct.rs"),
    include_str!("../../core/src/rational/mod.rs"),
    include_str!("../../core/src/rational/oscillator.rs"),
    include_str!("../../core/src/rational/coulomb.rs"),
    include_str!("../../core/src/limits.rs"),
    include_str!("../../core/src/numerics/mod.rs"),
    include_str!("../../core/src/numerics/operator.rs"),
    include_str!("../../core/src/numerics/eigen.rs"),
    include_str!("../../core/src/numerics/quadrature.rs"),
    include_str!("verify.rs"),
];

/// Test sources searched for test names (unit tests live in the library
/// sources above).
const TEST_SOURCES: &[&str] = &[
    include_str!("../../core/tests/specfun.rs"),
    include_str!("../../core/tests/model.rs"),
    include_str!("../../core/tests/dsusy.rs"),
    include_str!("../../core/tests/pct.rs"),
    include_str!("../../core/tests/rational.rs"),
    include_str!("../../core/tests/limits.rs"),
    include_str!("../../core/tests/numerics.rs"),
    include_str!("../tests/acceptance.rs"),
];

fn defines_fn(sources: &[&str], name: &str) -> bool {
    let needle = format!("fn {name}(");
    let generic = format!("fn {name}<");
    sources.iter().any(|s| s.contains(&needle) || s.contains(&generic))
}

fn is_test(name: &str) -> bool {
    !name.is_empty() && (defines_fn(TEST_SOURCES, name) || defines_fn(LIBRARY_SOURCES, name))
}

fn is_operation(path: &str) -> bool {
    let last = path.rsplit("::").next().unwrap_or("");
    !last.is_empty() && defines_fn(LIBRARY_SOURCES, last)
}

/// Problems of a registry: duplicate ids, and operations or tests that are
/// missing or cannot be found.
pub fn gaps(rows: &[ConcordanceRow]) -> Vec<String> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for row in rows {
        if !seen.insert(row.id) {
            out.push(format!("{}: duplicate formula id", row.id));
        }
        if row.operation.is_empty() {
            out.push(format!("{}: no operation", row.id));
        } else if !is_operation(row.operation) {
            out.push(format!("{}: operation {} not found", row.id, row.operation));
        }
        if row.test.is_empty() {
            out.push(format!("{}: no test", row.id));
        } else if !is_test(row.test) {
            out.push(format!("{}: test {} not found", row.id, row.test));
        }
    }
    out
}

/// Markdown table with one row per registered formula, or the list of gaps.
pub fn generate_concordance(rows: &[ConcordanceRow]) -> Result<String, Vec<String>> {
    let g = gaps(rows);
    if !g.is_empty() {
        return Err(g);
    }
    let mut out = String::new();
    out.push_str("# Formula-to-code concordance\n\n");
    out.push_str("Generated by `curvedqm concordance`; do not edit by hand.\n\n");
    let _ = writeln!(out, "{} formulas.\n", rows.len());
    out.push_str("| id | formula | operation | test |\n|---|---|---|---|\n");
    for r in rows {
        let _ = writeln!(
            out,
            "| `{}` | {} | `{}` | `{}` |",
            r.id,
            r.formula.replace('|', "\\|"),
            r.operation,
            r.test
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_complete() {
        assert_eq!(gaps(REGISTRY), Vec::<String>::new());
        let text = generate_concordance(REGISTRY).unwrap();
        assert_eq!(text.lines().filter(|l| l.starts_with("| `")).count(), REGISTRY.len());
    }

    #[test]
    fn removing_a_mapping_names_the_gap() {
        let mut rows = REGISTRY.to_vec();
        rows[0].test = "";
        let err = generate_concordance(&rows).unwrap_err();
        assert_eq!(err, vec![format!("{}: no test", rows[0].id)]);
        rows[0].test = "no_such_test_anywhere";
        let err = generate_concordance(&rows).unwrap_err();
        assert!(err[0].contains("no_such_test_anywhere"));
    }

    #[test]
    fn duplicate_ids_are_gaps() {
        let rows = [REGISTRY[0], REGISTRY[0]];
        let err = generate_concordance(&rows).unwrap_err();
        assert!(err.iter().any(|e| e.contains("duplicate")));
    }
}
