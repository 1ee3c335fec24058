//! Seeded generators of small machines and inputs.

use std::ops::RangeInclusive;

use rand::Rng;

use crate::machine::{
    run, Action, Alphabet, Configuration, Letter, MachineTable, Move, RunLimits, StateId,
};
use crate::table::validate_for_encoding;

/// Glyph pool for random alphabets; includes glyphs that collide with move
/// names and digits.
pub const GLYPH_POOL: &str = "_abcLRZ01X*|?~";

pub fn random_alphabet<R: Rng>(rng: &mut R, size: usize) -> Alphabet {
    let mut pool: Vec<char> = GLYPH_POOL.chars().collect();
    let mut glyphs = Vec::with_capacity(size);
    for _ in 0..size {
        let i = rng.gen_range(0..pool.len());
        glyphs.push(pool.swap_remove(i));
    }
    Alphabet::new(glyphs).expect("distinct glyphs")
}

/// Any table: EMPTY cells, `!` halts and stationary steps included.
pub fn random_table<R: Rng>(rng: &mut R, max_states: u32, max_letters: usize) -> MachineTable {
    let letters = rng.gen_range(1..=max_letters);
    let states = rng.gen_range(1..=max_states);
    let mut t = MachineTable::new("random", random_alphabet(rng, letters), states);
    for s in 1..=states {
        for l in 0..letters {
            let action = match rng.gen_range(0..10) {
                0 | 1 => None,
                2 => Some(Action::Halt {
                    write: rng
                        .gen_bool(0.5)
                        .then(|| Letter(rng.gen_range(0..letters) as u8)),
                }),
                _ => Some(Action::Do {
                    write: Letter(rng.gen_range(0..letters) as u8),
                    mv: [Move::Left, Move::Right, Move::Stay][rng.gen_range(0..3)],
                    next: rng.gen_range(1..=states),
                }),
            };
            t.set(s, Letter(l as u8), action).expect("in range");
        }
    }
    if rng.gen_bool(0.2) {
        let b = Letter(rng.gen_range(0..letters) as u8);
        t.set_blank(b);
    }
    t
}

/// A table the universal machine can simulate: moves on every step, every
/// state has an entry, blank is the first letter.
pub fn random_encodable_table<R: Rng>(
    rng: &mut R,
    states: RangeInclusive<StateId>,
    max_letters: usize,
) -> MachineTable {
    loop {
        let letters = rng.gen_range(1..=max_letters);
        let states = rng.gen_range(states.clone());
        let mut t = MachineTable::new("random", random_alphabet(rng, letters), states);
        for s in 1..=states {
            for l in 0..letters {
                let action = match rng.gen_range(0..8) {
                    0 => None,
                    1 => Some(Action::Halt {
                        write: rng
                            .gen_bool(0.5)
                            .then(|| Letter(rng.gen_range(0..letters) as u8)),
                    }),
                    _ => Some(Action::Do {
                        write: Letter(rng.gen_range(0..letters) as u8),
                        mv: if rng.gen_bool(0.5) {
                            Move::Left
                        } else {
                            Move::Right
                        },
                        next: rng.gen_range(1..=states),
                    }),
                };
                t.set(s, Letter(l as u8), action).expect("in range");
            }
        }
        if validate_for_encoding(&t).is_empty() {
            return t;
        }
    }
}

pub fn random_input<R: Rng>(rng: &mut R, letters: usize, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| Letter(rng.gen_range(0..letters) as u8))
        .collect()
}

/// A machine with an input on which it halts within `max_steps` steps
/// without leaving the half-tape, after at least one step.
#[derive(Clone, Debug)]
pub struct PoliteCase {
    pub table: MachineTable,
    pub input: Vec<Letter>,
    pub steps: u64,
}

impl PoliteCase {
    pub fn initial(&self) -> Configuration {
        Configuration::from_input(&self.table, &self.input, 0, 1)
    }
}

pub fn random_polite_case<R: Rng>(
    rng: &mut R,
    states: RangeInclusive<StateId>,
    max_letters: usize,
    max_steps: u64,
) -> PoliteCase {
    loop {
        let table = random_encodable_table(rng, states.clone(), max_letters);
        let input = random_input(rng, table.alphabet().len(), 6);
        let cfg = Configuration::from_input(&table, &input, 0, 1);
        let limits = RunLimits {
            budget: max_steps,
            fence_left: Some(0),
        };
        let r = run(&table, cfg, &limits);
        if r.reason.is_final() && r.steps >= 1 {
            return PoliteCase {
                table,
                input,
                steps: r.steps,
            };
        }
    }
}

/// A configuration with random contents, head and state.
pub fn random_configuration<R: Rng>(rng: &mut R, table: &MachineTable) -> Configuration {
    let input = random_input(rng, table.alphabet().len(), 8);
    let start = rng.gen_range(-4..=4);
    let mut tape = crate::machine::Tape::with_letters(table.blank(), start, &input);
    let head = rng.gen_range(-6..=10);
    tape.ensure(head);
    Configuration::new(tape, head, rng.gen_range(1..=table.state_count()))
}
