//! Searching a run for tape snapshots given as glyph strings.

use crate::machine::{format_window, Configuration, Engine, MachineTable, StateId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sighting {
    pub step: u64,
    pub state: StateId,
}

/// First step at which each pattern occurs in the formatted window. Pattern
/// `i + 1` is only sought from the step where pattern `i` was found; once a
/// pattern is missing, the rest are too.
pub fn scan_for_snapshots(
    table: &MachineTable,
    initial: Configuration,
    budget: u64,
    patterns: &[&str],
) -> Vec<Option<Sighting>> {
    let mut found: Vec<Option<Sighting>> = vec![None; patterns.len()];
    if patterns.is_empty() {
        return found;
    }
    let alpha = table.alphabet();
    let engine = Engine::new(table);
    let blank_glyphs = [
        alpha.glyph(initial.tape.blank_pattern()[0]),
        alpha.glyph(initial.tape.blank_pattern()[1]),
    ];
    // Without a blank glyph, a match lies inside the non-blank span, which
    // only a write can change.
    let needs_every_step = patterns
        .iter()
        .any(|p| p.chars().any(|c| blank_glyphs.contains(&c)));

    let mut cfg = initial;
    let mut next = 0usize;
    let mut step = 0u64;
    let mut dirty = true;
    loop {
        if dirty || needs_every_step {
            let window = format_window(&cfg, alpha);
            while next < patterns.len() && window.contains(patterns[next]) {
                found[next] = Some(Sighting {
                    step,
                    state: cfg.state,
                });
                next += 1;
            }
            if next == patterns.len() {
                break;
            }
        }
        if step >= budget {
            break;
        }
        let head = cfg.head;
        let before = cfg.tape.read(head);
        let halted = engine.step(&mut cfg).is_some();
        let changed = cfg.tape.read(head) != before;
        if halted {
            // A halt may still write.
            if changed {
                let window = format_window(&cfg, alpha);
                while next < patterns.len() && window.contains(patterns[next]) {
                    found[next] = Some(Sighting {
                        step,
                        state: cfg.state,
                    });
                    next += 1;
                }
            }
            break;
        }
        step += 1;
        dirty = changed;
    }
    found
}
