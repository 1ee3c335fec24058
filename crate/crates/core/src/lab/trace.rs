//! Line-oriented trace export.
//!
//! Each line is `step=<n> state=<n> head=<n> win=<n> tape=<glyphs>`, where
//! `win` is the first cell of the printed window.

use std::fmt;
use std::io::{self, Write};

use crate::machine::{format_window, Configuration, Engine, MachineTable, StateId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRecord {
    pub step: u64,
    pub state: StateId,
    pub head: i64,
    pub window_start: i64,
    pub tape: String,
}

impl TraceRecord {
    pub fn capture(step: u64, config: &Configuration, table: &MachineTable) -> Self {
        let tape = format_window(config, table.alphabet());
        let window_start = if tape.is_empty() {
            config.head
        } else {
            config.window().0
        };
        TraceRecord {
            step,
            state: config.state,
            head: config.head,
            window_start,
            tape,
        }
    }

    pub fn parse(line: &str) -> Option<Self> {
        let mut it = line.splitn(5, ' ');
        let mut field = |key: &str| it.next()?.strip_prefix(key).map(str::to_string);
        let step = field("step=")?.parse().ok()?;
        let state = field("state=")?.parse().ok()?;
        let head = field("head=")?.parse().ok()?;
        let window_start = field("win=")?.parse().ok()?;
        let tape = field("tape=")?;
        Some(TraceRecord {
            step,
            state,
            head,
            window_start,
            tape,
        })
    }
}

impl fmt::Display for TraceRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "step={} state={} head={} win={} tape={}",
            self.step, self.state, self.head, self.window_start, self.tape
        )
    }
}

/// Writes the initial record, every `every`-th step, and the final record.
/// Returns the number of lines written.
pub fn export_trace<W: Write>(
    table: &MachineTable,
    initial: Configuration,
    budget: u64,
    sink: &mut W,
    every: u64,
) -> io::Result<usize> {
    if every == 0 {
        return Err(io::Error::new(
            io::ErrorKind::InvalidInput,
            "stride must be at least 1",
        ));
    }
    let engine = Engine::new(table);
    let mut cfg = initial;
    let mut step = 0u64;
    let mut lines = 0usize;
    // A record is held back until the next step applies, so that the last
    // step's record shows the tape after a writing halt.
    let mut pending = Some(TraceRecord::capture(0, &cfg, table));
    while step < budget && engine.step(&mut cfg).is_none() {
        step += 1;
        if let Some(rec) = pending.take() {
            writeln!(sink, "{rec}")?;
            lines += 1;
        }
        if step.is_multiple_of(every) {
            pending = Some(TraceRecord::capture(step, &cfg, table));
        }
    }
    writeln!(sink, "{}", TraceRecord::capture(step, &cfg, table))?;
    lines += 1;
    sink.flush()?;
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::experiment::{experiment_setup, ExperimentId};

    #[test]
    fn stride_larger_than_run() {
        let s = experiment_setup(ExperimentId::E1);
        let mut out = Vec::new();
        let n = export_trace(&s.table, s.initial, s.budget, &mut out, 1_000).unwrap();
        assert_eq!(n, 2);
        let text = String::from_utf8(out).unwrap();
        let recs: Vec<_> = text
            .lines()
            .map(|l| TraceRecord::parse(l).unwrap())
            .collect();
        assert_eq!(recs[0].step, 0);
        assert_eq!(recs[1].step, 106);
        assert_eq!(recs[1].tape, "*|||*||*|||||*");
    }

    #[test]
    fn zero_stride_rejected() {
        let s = experiment_setup(ExperimentId::E1);
        assert!(export_trace(&s.table, s.initial, 10, &mut Vec::new(), 0).is_err());
    }
}
