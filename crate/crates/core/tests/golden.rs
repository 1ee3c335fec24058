use std::fs;
use std::path::PathBuf;

use tmlab::lab::experiment::{experiment_setup, ExperimentId};
use tmlab::lab::trace::{export_trace, TraceRecord};
use tmlab::table::{bundled_machine, parse_table, serialize_table, BUNDLED_IDS};

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn bundled_tables_serialize_to_golden_text() {
    for id in BUNDLED_IDS {
        let table = bundled_machine(id).unwrap();
        assert_eq!(serialize_table(&table), golden(&format!("{id}.tm")), "{id}");
    }
}

#[test]
fn golden_text_parses_back_to_bundled_tables() {
    for id in BUNDLED_IDS {
        let parsed = parse_table(&golden(&format!("{id}.tm"))).unwrap();
        assert_eq!(parsed, bundled_machine(id).unwrap(), "{id}");
    }
}

#[test]
fn addition_trace_matches_golden() {
    let s = experiment_setup(ExperimentId::E1);
    let mut out = Vec::new();
    let lines = export_trace(&s.table, s.initial, s.budget, &mut out, 1).unwrap();
    assert_eq!(lines, 107);
    assert_eq!(String::from_utf8(out).unwrap(), golden("e1.trace"));
}

#[test]
fn golden_trace_records_parse() {
    let text = golden("e1.trace");
    let recs: Vec<TraceRecord> = text
        .lines()
        .map(|l| TraceRecord::parse(l).unwrap())
        .collect();
    assert_eq!(recs.len(), 107);
    for (i, r) in recs.iter().enumerate() {
        assert_eq!(r.step, i as u64);
        assert_eq!(r.to_string(), text.lines().nth(i).unwrap());
    }
    assert_eq!(recs[106].tape, "*|||*||*|||||*");
}
