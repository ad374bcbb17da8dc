use edge_depth::formulas::FormulaKind;
use edge_depth_cli::table::{
    cmd_table, read_rows_csv, read_rows_json, write_rows, ComparisonRow, FamilySpec, MatchFlag, TableFamily,
};
use edge_depth_cli::{OutputFormat, RunConfig};
use proptest::prelude::*;

fn csv_then_json(rows: &[ComparisonRow]) -> Vec<ComparisonRow> {
    let mut csv = Vec::new();
    write_rows(rows, OutputFormat::Csv, &mut csv).unwrap();
    let parsed = read_rows_csv(std::str::from_utf8(&csv).unwrap()).unwrap();
    let mut json = Vec::new();
    write_rows(&parsed, OutputFormat::Json, &mut json).unwrap();
    read_rows_json(std::str::from_utf8(&json).unwrap()).unwrap()
}

#[test]
fn real_table_round_trips() {
    let rows = cmd_table(&FamilySpec::new(TableFamily::Path).with_weights(2, 1, 1), 3..=6, 1..=2, &RunConfig::default()).unwrap();
    assert_eq!(rows.len(), 8);
    assert_eq!(csv_then_json(&rows), rows);
}

fn kind() -> impl Strategy<Value = FormulaKind> {
    prop_oneof![Just(FormulaKind::Exact), Just(FormulaKind::LowerBound), Just(FormulaKind::UpperBound)]
}

fn flag() -> impl Strategy<Value = MatchFlag> {
    prop_oneof![Just(MatchFlag::True), Just(MatchFlag::False), Just(MatchFlag::Skipped)]
}

prop_compose! {
    fn row()(
        family in "[a-z][a-z-]{0,12}",
        weights in prop::collection::vec(1u32..5, 1..9),
        t in 1u32..9,
        formula_kind in kind(),
        formula_value in 0usize..9,
        engine_gf2 in prop::option::of(0usize..9),
        engine_rat in prop::option::of(0usize..9),
        matched in flag(),
        ms in 0u64..100_000,
    ) -> ComparisonRow {
        ComparisonRow { family, n: weights.len(), weights, t, formula_kind, formula_value, engine_gf2, engine_rat, matched, ms }
    }
}

proptest! {
    #[test]
    fn arbitrary_rows_round_trip(rows in prop::collection::vec(row(), 0..12)) {
        prop_assert_eq!(csv_then_json(&rows), rows);
    }
}
