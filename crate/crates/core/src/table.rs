//! Machine file format, bundled machines and instruction census.
//!
//! ```text
//! # comment
//! name: addition
//! alphabet: _ * | a X
//! blank: _            (optional; defaults to the first letter)
//! states: 9           (optional; defaults to the highest state mentioned)
//!
//! state 1:
//!   * -> X R 2
//! ```
//!
//! An entry's right-hand side is `[write] [move] [next]` with Minsky defaults:
//! an omitted write keeps the scanned letter, an omitted move is `Z`, an
//! omitted next state is the current one. A lone token equal to `L`, `R` or
//! `Z` is a move, and a lone number is a next state, so a write always needs an
//! explicit move when the written glyph could be read as either. `!` halts,
//! optionally after a write (`X -> * !`). Letters without a line are EMPTY.

use std::fmt::Write as _;

use thiserror::Error;

use crate::machine::{Action, Alphabet, EntryClass, Letter, MachineTable, Move, StateId};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing `alphabet:` line")]
    MissingAlphabet,
    #[error("bad alphabet: {0}")]
    Alphabet(String),
    #[error("unknown glyph {0:?}")]
    UnknownGlyph(String),
    #[error("duplicate block for state {0}")]
    DuplicateState(StateId),
    #[error("duplicate line for letter {0:?}")]
    DuplicateLetter(char),
    #[error("state {state} out of range 1..={max}")]
    StateOutOfRange { state: StateId, max: StateId },
    #[error("entry outside a state block")]
    EntryOutsideState,
    #[error("malformed line: {0}")]
    Syntax(String),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

struct RawEntry {
    line: usize,
    state: StateId,
    read: Letter,
    action: Action,
}

pub fn parse_table(source: &str) -> Result<MachineTable, ParseError> {
    let mut name = String::from("unnamed");
    let mut alphabet: Option<Alphabet> = None;
    let mut blank_glyph: Option<(usize, String)> = None;
    let mut declared_states: Option<StateId> = None;
    let mut current: Option<StateId> = None;
    let mut seen_states: Vec<StateId> = Vec::new();
    let mut entries: Vec<RawEntry> = Vec::new();
    let mut max_mentioned: StateId = 0;

    for (idx, raw) in source.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        if let Some(rest) = text.strip_prefix("name:") {
            name = rest.trim().to_string();
        } else if let Some(rest) = text.strip_prefix("alphabet:") {
            let mut glyphs = Vec::new();
            for tok in rest.split_whitespace() {
                glyphs.push(single_char(tok).ok_or_else(|| {
                    err(
                        line,
                        ParseErrorKind::Alphabet(format!("{tok:?} is not one char")),
                    )
                })?);
            }
            alphabet = Some(
                Alphabet::new(glyphs)
                    .map_err(|e| err(line, ParseErrorKind::Alphabet(e.to_string())))?,
            );
        } else if let Some(rest) = text.strip_prefix("blank:") {
            blank_glyph = Some((line, rest.trim().to_string()));
        } else if let Some(rest) = text.strip_prefix("states:") {
            let n: StateId = rest
                .trim()
                .parse()
                .map_err(|_| err(line, ParseErrorKind::Syntax(text.to_string())))?;
            if n == 0 {
                return Err(err(line, ParseErrorKind::Syntax(text.to_string())));
            }
            declared_states = Some(n);
        } else if let Some(rest) = text.strip_prefix("state ") {
            let num = rest
                .strip_suffix(':')
                .and_then(|s| s.trim().parse::<StateId>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| err(line, ParseErrorKind::Syntax(text.to_string())))?;
            if seen_states.contains(&num) {
                return Err(err(line, ParseErrorKind::DuplicateState(num)));
            }
            seen_states.push(num);
            max_mentioned = max_mentioned.max(num);
            current = Some(num);
        } else if text.contains("->") {
            let state = current.ok_or_else(|| err(line, ParseErrorKind::EntryOutsideState))?;
            let alpha = alphabet
                .as_ref()
                .ok_or_else(|| err(line, ParseErrorKind::MissingAlphabet))?;
            let (read, action) = parse_entry(text, state, alpha, line)?;
            if entries.iter().any(|e| e.state == state && e.read == read) {
                return Err(err(
                    line,
                    ParseErrorKind::DuplicateLetter(alpha.glyph(read)),
                ));
            }
            if let Action::Do { next, .. } = action {
                max_mentioned = max_mentioned.max(next);
            }
            entries.push(RawEntry {
                line,
                state,
                read,
                action,
            });
        } else {
            return Err(err(line, ParseErrorKind::Syntax(text.to_string())));
        }
    }

    let alphabet = alphabet.ok_or_else(|| err(0, ParseErrorKind::MissingAlphabet))?;
    let states = declared_states.unwrap_or(max_mentioned.max(1));
    let mut table = MachineTable::new(name, alphabet, states);
    if let Some((line, g)) = blank_glyph {
        let l = single_char(&g)
            .and_then(|c| table.alphabet().letter(c))
            .ok_or_else(|| err(line, ParseErrorKind::UnknownGlyph(g.clone())))?;
        table.set_blank(l);
    }
    for e in entries {
        let out_of_range = |s: StateId| {
            err(
                e.line,
                ParseErrorKind::StateOutOfRange {
                    state: s,
                    max: states,
                },
            )
        };
        if e.state > states {
            return Err(out_of_range(e.state));
        }
        if let Action::Do { next, .. } = e.action {
            if next > states {
                return Err(out_of_range(next));
            }
        }
        table
            .set(e.state, e.read, Some(e.action))
            .expect("ranges checked above");
    }
    Ok(table)
}

fn single_char(tok: &str) -> Option<char> {
    let mut it = tok.chars();
    let c = it.next()?;
    it.next().is_none().then_some(c)
}

fn parse_entry(
    text: &str,
    state: StateId,
    alpha: &Alphabet,
    line: usize,
) -> Result<(Letter, Action), ParseError> {
    let (lhs, rhs) = text.split_once("->").expect("caller checked");
    let glyph = |tok: &str| -> Result<Letter, ParseError> {
        single_char(tok)
            .and_then(|c| alpha.letter(c))
            .ok_or_else(|| err(line, ParseErrorKind::UnknownGlyph(tok.to_string())))
    };
    let read = glyph(lhs.trim())?;
    let mut toks: Vec<&str> = rhs.split_whitespace().collect();

    if toks.last() == Some(&"!") {
        toks.pop();
        let write = match toks.as_slice() {
            [] => None,
            [w] => Some(glyph(w)?),
            _ => return Err(err(line, ParseErrorKind::Syntax(text.to_string()))),
        };
        return Ok((read, Action::Halt { write }));
    }

    let mut next = state;
    if let Some(last) = toks.last() {
        if last.chars().all(|c| c.is_ascii_digit()) {
            next = last
                .parse()
                .map_err(|_| err(line, ParseErrorKind::Syntax(text.to_string())))?;
            if next == 0 {
                return Err(err(line, ParseErrorKind::Syntax(text.to_string())));
            }
            toks.pop();
        }
    }
    let (write, mv) = match toks.as_slice() {
        [] => (read, Move::Stay),
        [one] => match single_char(one).and_then(Move::from_glyph) {
            Some(mv) => (read, mv),
            None => (glyph(one)?, Move::Stay),
        },
        [w, m] => {
            let mv = single_char(m)
                .and_then(Move::from_glyph)
                .ok_or_else(|| err(line, ParseErrorKind::Syntax(text.to_string())))?;
            (glyph(w)?, mv)
        }
        _ => return Err(err(line, ParseErrorKind::Syntax(text.to_string()))),
    };
    Ok((read, Action::Do { write, mv, next }))
}

/// Canonical text; `parse_table` of the result rebuilds the same table.
pub fn serialize_table(table: &MachineTable) -> String {
    let alpha = table.alphabet();
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", table.name);
    let glyphs: Vec<String> = alpha.glyphs().iter().map(|g| g.to_string()).collect();
    let _ = writeln!(out, "alphabet: {}", glyphs.join(" "));
    if table.blank() != Letter(0) {
        let _ = writeln!(out, "blank: {}", alpha.glyph(table.blank()));
    }
    let _ = writeln!(out, "states: {}", table.state_count());
    for state in 1..=table.state_count() {
        let _ = writeln!(out);
        let _ = writeln!(out, "state {state}:");
        for read in alpha.letters() {
            if let Some(action) = table.entry(state, read) {
                let rhs = format_rhs(alpha, state, read, action);
                let _ = writeln!(out, "  {} -> {}", alpha.glyph(read), rhs);
            }
        }
    }
    out
}

fn format_rhs(alpha: &Alphabet, state: StateId, read: Letter, action: Action) -> String {
    match action {
        Action::Halt { write: None } => "!".to_string(),
        Action::Halt { write: Some(w) } => format!("{} !", alpha.glyph(w)),
        Action::Do { write, mv, next } => {
            let mut parts: Vec<String> = Vec::new();
            if write != read {
                parts.push(alpha.glyph(write).to_string());
                parts.push(mv.glyph().to_string());
            } else if mv != Move::Stay || next == state {
                parts.push(mv.glyph().to_string());
            }
            if next != state {
                parts.push(next.to_string());
            }
            parts.join(" ")
        }
    }
}

pub const BUNDLED_IDS: [&str; 4] = ["addition", "neary4x6", "pedagogical-utm", "rna-utm"];

/// Source text of a bundled machine.
pub fn bundled_source(id: &str) -> Option<&'static str> {
    Some(match id {
        "addition" => include_str!("../data/addition.tm"),
        "neary4x6" => include_str!("../data/neary4x6.tm"),
        "pedagogical-utm" => include_str!("../data/pedagogical-utm.tm"),
        "rna-utm" => include_str!("../data/rna-utm.tm"),
        _ => return None,
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown bundled machine {0:?}")]
pub struct UnknownMachine(pub String);

pub fn bundled_machine(id: &str) -> Result<MachineTable, UnknownMachine> {
    let src = bundled_source(id).ok_or_else(|| UnknownMachine(id.to_string()))?;
    Ok(parse_table(src).expect("bundled machine parses"))
}

/// Entry state of each block in the RNA machine source (`# group n` comments).
///
/// Index `n - 1` holds the first state of the block simulating state `n`.
pub fn rna_group_entries() -> Vec<StateId> {
    let src = bundled_source("rna-utm").expect("bundled");
    let mut entries = Vec::new();
    let mut pending = false;
    for line in src.lines() {
        let t = line.trim();
        if t.starts_with("# group ") {
            pending = true;
        } else if pending {
            if let Some(n) = t
                .strip_prefix("state ")
                .and_then(|s| s.strip_suffix(':'))
                .and_then(|s| s.parse().ok())
            {
                entries.push(n);
                pending = false;
            }
        }
    }
    entries
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TableStats {
    pub entries: usize,
    pub halting: usize,
    pub no_overwrite_nonhalt: usize,
    pub overwrite_nonhalt: usize,
    pub pure_glides: usize,
    pub same_state_nonhalt: usize,
    pub same_state_overwrite: usize,
    pub empty_entries: usize,
}

impl TableStats {
    pub fn nonhalting(&self) -> usize {
        self.no_overwrite_nonhalt + self.overwrite_nonhalt
    }

    /// Field names and values in declaration order.
    pub fn fields(&self) -> [(&'static str, usize); 8] {
        [
            ("entries", self.entries),
            ("halting", self.halting),
            ("no_overwrite_nonhalt", self.no_overwrite_nonhalt),
            ("overwrite_nonhalt", self.overwrite_nonhalt),
            ("pure_glides", self.pure_glides),
            ("same_state_nonhalt", self.same_state_nonhalt),
            ("same_state_overwrite", self.same_state_overwrite),
            ("empty_entries", self.empty_entries),
        ]
    }
}

pub fn table_stats(table: &MachineTable) -> TableStats {
    let mut s = TableStats {
        entries: table.cells(),
        ..TableStats::default()
    };
    for state in 1..=table.state_count() {
        for letter in table.alphabet().letters() {
            let action = table.entry(state, letter);
            if action.is_none() {
                s.empty_entries += 1;
            }
            let class = table.classify_entry(state, letter).expect("in range");
            match class {
                EntryClass::Halt => s.halting += 1,
                EntryClass::PureGlide | EntryClass::NoOverwriteStep => s.no_overwrite_nonhalt += 1,
                EntryClass::OverwriteStep => s.overwrite_nonhalt += 1,
            }
            if class == EntryClass::PureGlide {
                s.pure_glides += 1;
            }
            if let (Some(Action::Do { next, .. }), false) = (action, class == EntryClass::Halt) {
                if next == state {
                    s.same_state_nonhalt += 1;
                    if class == EntryClass::OverwriteStep {
                        s.same_state_overwrite += 1;
                    }
                }
            }
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A non-halting instruction that does not move the head.
    StationaryStep { state: StateId, letter: Letter },
    /// A state whose every entry is EMPTY.
    EmptyState { state: StateId },
}

/// Everything that prevents encoding the table for the universal machine.
pub fn validate_for_encoding(table: &MachineTable) -> Vec<Violation> {
    let mut v = Vec::new();
    for state in 1..=table.state_count() {
        let mut defined = false;
        for letter in table.alphabet().letters() {
            let action = table.entry(state, letter);
            defined |= action.is_some();
            if let Some(Action::Do { mv: Move::Stay, .. }) = action {
                if !table.halts_at(state, letter) {
                    v.push(Violation::StationaryStep { state, letter });
                }
            }
        }
        if !defined {
            v.push(Violation::EmptyState { state });
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn add() -> MachineTable {
        bundled_machine("addition").unwrap()
    }

    fn l(t: &MachineTable, c: char) -> Letter {
        t.alphabet().letter(c).unwrap()
    }

    #[test]
    fn minsky_defaults() {
        let t = add();
        assert_eq!(
            t.entry(1, l(&t, '*')),
            Some(Action::Do {
                write: l(&t, 'X'),
                mv: Move::Right,
                next: 2
            })
        );
        assert_eq!(
            t.entry(2, l(&t, '|')),
            Some(Action::Do {
                write: l(&t, '|'),
                mv: Move::Right,
                next: 2
            })
        );
        assert_eq!(
            t.entry(9, l(&t, 'X')),
            Some(Action::Halt {
                write: Some(l(&t, '*'))
            })
        );
        assert_eq!(t.entry(1, l(&t, '_')), None);
    }

    #[test]
    fn lone_tokens() {
        let src = "alphabet: _ L 1\nstates: 3\nstate 1:\n  _ -> L\n  L -> 2\n  1 -> L Z\nstate 2:\n  _ -> 1 R 3\n  1 ->\n";
        let t = parse_table(src).unwrap();
        let a = |c| t.alphabet().letter(c).unwrap();
        assert_eq!(
            t.entry(1, a('_')),
            Some(Action::Do {
                write: a('_'),
                mv: Move::Left,
                next: 1
            })
        );
        assert_eq!(
            t.entry(1, a('L')),
            Some(Action::Do {
                write: a('L'),
                mv: Move::Stay,
                next: 2
            })
        );
        assert_eq!(
            t.entry(1, a('1')),
            Some(Action::Do {
                write: a('L'),
                mv: Move::Stay,
                next: 1
            })
        );
        assert_eq!(
            t.entry(2, a('1')),
            Some(Action::Do {
                write: a('1'),
                mv: Move::Stay,
                next: 2
            })
        );
        assert_eq!(parse_table(&serialize_table(&t)).unwrap(), t);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let bad_glyph = "alphabet: _ a\nstate 1:\n  b -> R\n";
        assert_eq!(
            parse_table(bad_glyph).unwrap_err(),
            ParseError {
                line: 3,
                kind: ParseErrorKind::UnknownGlyph("b".into())
            }
        );
        let dup_state = "alphabet: _\nstate 1:\nstate 1:\n";
        assert_eq!(
            parse_table(dup_state).unwrap_err().kind,
            ParseErrorKind::DuplicateState(1)
        );
        let dup_letter = "alphabet: _\nstate 1:\n  _ -> R\n  _ -> L\n";
        assert_eq!(parse_table(dup_letter).unwrap_err().line, 4);
        let range = "alphabet: _\nstates: 1\nstate 1:\n  _ -> R 2\n";
        assert_eq!(
            parse_table(range).unwrap_err(),
            ParseError {
                line: 4,
                kind: ParseErrorKind::StateOutOfRange { state: 2, max: 1 }
            }
        );
        assert_eq!(
            parse_table("state 1:\n").unwrap_err().kind,
            ParseErrorKind::MissingAlphabet
        );
    }

    #[test]
    fn blank_directive() {
        let t = parse_table("alphabet: a b\nblank: b\nstate 1:\n  a -> R\n").unwrap();
        assert_eq!(t.blank(), Letter(1));
        assert!(serialize_table(&t).contains("blank: b\n"));
        assert_eq!(parse_table(&serialize_table(&t)).unwrap(), t);
    }

    #[test]
    fn addition_census() {
        let s = table_stats(&add());
        assert_eq!(s.pure_glides, 13);
        assert_eq!(s.empty_entries, 21);
        assert_eq!(s.entries, 45);
        assert_eq!(s.entries, s.halting + s.nonhalting());
    }

    #[test]
    fn validation() {
        assert!(validate_for_encoding(&add()).is_empty());
        let ident = parse_table("alphabet: _\nstate 1:\n  _ -> Z\n").unwrap();
        assert!(validate_for_encoding(&ident).is_empty());
        let bad = parse_table("alphabet: _ a\nstates: 2\nstate 1:\n  _ -> a Z\n").unwrap();
        assert_eq!(
            validate_for_encoding(&bad),
            vec![
                Violation::StationaryStep {
                    state: 1,
                    letter: Letter(0)
                },
                Violation::EmptyState { state: 2 },
            ]
        );
    }

    #[test]
    fn unknown_bundled() {
        assert_eq!(bundled_machine("nope"), Err(UnknownMachine("nope".into())));
    }
}
