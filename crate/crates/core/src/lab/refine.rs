//! Checking that a low-level run contains a high-level run as an ordered
//! subsequence of projected configurations.

use std::collections::HashMap;
use std::fmt;

use crate::encoding::{decode_m_configuration, UTM_CYCLE_STATE};
use crate::machine::{
    format_window, Action, Configuration, Engine, Letter, MachineTable, Move, Snapshot, StateId,
};
use crate::rna::rna_decode;
use crate::table::rna_group_entries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Index of the high-level configuration that was expected next.
    pub high_index: usize,
    pub low_step: u64,
    pub expected: Snapshot,
    pub found: Snapshot,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinementReport {
    pub matched: usize,
    pub total_high: usize,
    pub low_steps: u64,
    pub first_mismatch: Option<Mismatch>,
    pub passed: bool,
}

impl fmt::Display for RefinementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matched {}/{} after {} low-level steps: {}",
            self.matched,
            self.total_high,
            self.low_steps,
            if self.passed { "passed" } else { "FAILED" }
        )?;
        if let Some(m) = &self.first_mismatch {
            write!(
                f,
                "; at low step {} expected high #{} (state {}, head {}), found state {}, head {}",
                m.low_step,
                m.high_index,
                m.expected.state,
                m.expected.head,
                m.found.state,
                m.found.head
            )?;
        }
        Ok(())
    }
}

/// Number of configurations of a run within `budget` steps, the initial one included.
pub fn trace_length(table: &MachineTable, initial: &Configuration, budget: u64) -> usize {
    let engine = Engine::new(table);
    let mut cfg = initial.clone();
    let mut n = 1usize;
    while (n as u64) <= budget && engine.step(&mut cfg).is_none() {
        n += 1;
    }
    n
}

/// Streams the low-level run and matches each projected configuration against
/// the next unconsumed high-level one.
///
/// A projection equal to the last matched configuration is a stutter and is
/// ignored; any other non-matching projection fails the check. The initial
/// configurations count, so a run of `k` steps has `k + 1` configurations.
pub fn check_refinement<P>(
    high: &MachineTable,
    high_initial: Configuration,
    low: &MachineTable,
    low_initial: Configuration,
    mut project: P,
    high_budget: u64,
    low_budget: u64,
) -> RefinementReport
where
    P: FnMut(&Configuration) -> Option<Snapshot>,
{
    let total_high = trace_length(high, &high_initial, high_budget);
    let high_engine = Engine::new(high);
    let low_engine = Engine::new(low);

    let mut high_cfg = high_initial;
    let mut expected = high_cfg.snapshot();
    let mut last: Option<Snapshot> = None;
    let mut matched = 0usize;
    let mut low_cfg = low_initial;
    let mut low_step = 0u64;
    let mut first_mismatch = None;

    loop {
        if let Some(p) = project(&low_cfg) {
            if p == expected {
                matched += 1;
                if matched == total_high {
                    break;
                }
                high_engine.step(&mut high_cfg);
                last = Some(std::mem::replace(&mut expected, high_cfg.snapshot()));
            } else if last.as_ref() != Some(&p) {
                first_mismatch = Some(Mismatch {
                    high_index: matched,
                    low_step,
                    expected: expected.clone(),
                    found: p,
                });
                break;
            }
        }
        if low_step >= low_budget || low_engine.step(&mut low_cfg).is_some() {
            break;
        }
        low_step += 1;
    }
    RefinementReport {
        matched,
        total_high,
        low_steps: low_step,
        passed: matched == total_high && first_mismatch.is_none(),
        first_mismatch,
    }
}

/// Projects the universal machine onto the simulated machine `m` each time
/// it enters the state that starts a simulated step.
pub fn utm_projection<'a>(
    m: &'a MachineTable,
    utm: &'a MachineTable,
) -> impl FnMut(&Configuration) -> Option<Snapshot> + 'a {
    let mut prev: Option<StateId> = None;
    move |cfg| {
        let entering = cfg.state == UTM_CYCLE_STATE && prev != Some(UTM_CYCLE_STATE);
        prev = Some(cfg.state);
        if !entering {
            return None;
        }
        let text = format_window(cfg, utm.alphabet());
        let decoded = decode_m_configuration(&text).ok()?;
        if !decoded.clean {
            return None;
        }
        decoded.to_configuration(m).map(|c| c.snapshot())
    }
}

/// Projects the RNA machine onto the pedagogical machine at the entry state of
/// each block, when the head sits on the nucleotide that entry state reads
/// first: the right one of a pair for left-moving entries, the left one
/// otherwise. The pedagogical head is the pair index.
pub fn rna_projection<'a>(
    utm: &'a MachineTable,
    rna: &'a MachineTable,
) -> impl FnMut(&Configuration) -> Option<Snapshot> + 'a {
    let mut entry: HashMap<StateId, (StateId, i64)> = HashMap::new();
    for (i, &s) in rna_group_entries().iter().enumerate() {
        let moves: Vec<Move> = rna
            .alphabet()
            .letters()
            .filter_map(|l| match rna.entry(s, l) {
                Some(Action::Do { mv, .. }) => Some(mv),
                _ => None,
            })
            .collect();
        let parity = match moves.first() {
            Some(Move::Left) if moves.iter().all(|&m| m == Move::Left) => 1,
            Some(Move::Right) if moves.iter().all(|&m| m == Move::Right) => 0,
            _ => continue,
        };
        entry.insert(s, (i as StateId + 1, parity));
    }
    let u_blank = utm.blank();
    move |cfg| {
        let &(u_state, parity) = entry.get(&cfg.state)?;
        if cfg.head.rem_euclid(2) != parity {
            return None;
        }
        let (lo, hi) = match cfg.tape.support() {
            Some((lo, hi)) => (lo.div_euclid(2) * 2, hi.div_euclid(2) * 2 + 1),
            None => (0, -1),
        };
        let nucleotides: String = (lo..=hi)
            .map(|p| rna.alphabet().glyph(cfg.tape.read(p)))
            .collect();
        let glyphs = rna_decode(&nucleotides).ok()?;
        let letters: Vec<Letter> = utm.alphabet().parse_word(&glyphs).ok()?;
        let first = letters.iter().position(|&l| l != u_blank);
        let last = letters.iter().rposition(|&l| l != u_blank);
        let (start, cells) = match (first, last) {
            (Some(a), Some(b)) => (lo.div_euclid(2) + a as i64, letters[a..=b].to_vec()),
            _ => (0, Vec::new()),
        };
        Some(Snapshot {
            start,
            cells,
            head: cfg.head.div_euclid(2),
            state: u_state,
        })
    }
}

/// Identity projection, for reflexivity checks.
pub fn identity_projection(cfg: &Configuration) -> Option<Snapshot> {
    Some(cfg.snapshot())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::experiment::{experiment_setup, ExperimentId};
    use crate::machine::RunLimits;

    #[test]
    fn reflexive_on_addition() {
        let s = experiment_setup(ExperimentId::E1);
        let rep = check_refinement(
            &s.table,
            s.initial.clone(),
            &s.table,
            s.initial.clone(),
            identity_projection,
            s.budget,
            s.budget,
        );
        assert!(rep.passed, "{rep}");
        assert_eq!(rep.matched, 107);
    }

    #[test]
    fn detects_a_wrong_high_level() {
        let s = experiment_setup(ExperimentId::E1);
        let mut other = s.initial.clone();
        other.tape.write(0, Letter(2));
        let rep = check_refinement(
            &s.table,
            other,
            &s.table,
            s.initial.clone(),
            identity_projection,
            s.budget,
            s.budget,
        );
        assert!(!rep.passed);
        assert_eq!(rep.first_mismatch.unwrap().low_step, 0);
    }

    #[test]
    fn trace_length_counts_initial() {
        let s = experiment_setup(ExperimentId::E1);
        assert_eq!(trace_length(&s.table, &s.initial, 10_000), 107);
        assert_eq!(trace_length(&s.table, &s.initial, 5), 6);
        let r = crate::machine::run(&s.table, s.initial, &RunLimits::budget(0));
        assert_eq!(r.steps, 0);
    }
}
