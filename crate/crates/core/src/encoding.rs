//! Encoding a machine and its tape for the universal machine, and decoding back.
//!
//! Layout of the universal machine's initial tape:
//!
//! ```text
//! S X Y<ins>..Y<ins> X Y<ins>.. ... S W<field> U<field> ... _
//! ```
//!
//! Each state contributes `X` followed by one instruction per letter. An
//! instruction is `Y`, the written letter's field, a move glyph and the next
//! state in binary. Letter fields hold the rank in binary, low bit first,
//! padded with `h` to a fixed width; state fields are unpadded. Each tape
//! square is `U` plus a letter field, with `W` in place of `U` on the scanned
//! square.

use thiserror::Error;

use crate::machine::{Action, Alphabet, Configuration, Letter, MachineTable, Move, StateId, Tape};
use crate::table::{validate_for_encoding, Violation};

/// Glyphs of the universal machine, in rank order.
pub const UTM_GLYPHS: &str = "_01LRXYUWShdeFZT";

/// The universal machine starts on the leftmost `S` in this state.
pub const UTM_START_STATE: StateId = 1;

/// State in which the universal machine starts simulating each step.
pub const UTM_CYCLE_STATE: StateId = 29;

/// Fewest states for which the universal machine's startup can build its
/// scale of powers of two.
pub const UTM_MIN_STATES: StateId = 4;

/// Whether the universal machine can start on an encoding of `table`. Its
/// startup counts letters and states into one unary zone and needs the zone
/// to be all `1`s and at least four long: at least [`UTM_MIN_STATES`]
/// states, and no more letters than states.
pub fn utm_supports(table: &MachineTable) -> bool {
    table.state_count() >= UTM_MIN_STATES && table.alphabet().len() <= table.state_count() as usize
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EncodeError {
    #[error("alphabet is empty")]
    EmptyAlphabet,
    #[error("rank {rank} does not fit a field of width {width}")]
    RankTooLarge { rank: u32, width: usize },
    #[error("state {state} on {letter:?} does not move")]
    StationaryStep { state: StateId, letter: char },
    #[error("state {0} has no defined entry")]
    EmptyState(StateId),
    #[error("the machine must start in state 1, not {0}")]
    UnsupportedStart(StateId),
    #[error("tape has non-blank cells left of the head")]
    NotHalfTape,
}

/// Field sizes derived from the encoded machine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EncodingScheme {
    pub letter_field_width: usize,
    pub letters: usize,
    pub states: StateId,
    /// Larger of the letter and state counts; the size of the work area.
    pub p: usize,
}

impl EncodingScheme {
    pub fn for_table(table: &MachineTable) -> Result<Self, EncodeError> {
        let letters = table.alphabet().len();
        Ok(EncodingScheme {
            letter_field_width: field_width(letters)?,
            letters,
            states: table.state_count(),
            p: letters.max(table.state_count() as usize),
        })
    }
}

fn bitlen(n: u64) -> usize {
    (u64::BITS - n.leading_zeros()) as usize
}

/// Width of a letter field: one more than the bit length of the alphabet size.
pub fn field_width(alphabet_size: usize) -> Result<usize, EncodeError> {
    if alphabet_size == 0 {
        return Err(EncodeError::EmptyAlphabet);
    }
    Ok(bitlen(alphabet_size as u64) + 1)
}

fn low_bits_first(mut n: u64, out: &mut String) {
    while n > 0 {
        out.push(if n & 1 == 1 { '1' } else { '0' });
        n >>= 1;
    }
}

pub fn encode_letter_field(rank: u32, width: usize) -> Result<String, EncodeError> {
    if rank == 0 || bitlen(u64::from(rank)) >= width {
        return Err(EncodeError::RankTooLarge { rank, width });
    }
    let mut s = String::with_capacity(width);
    low_bits_first(u64::from(rank), &mut s);
    while s.len() < width {
        s.push('h');
    }
    Ok(s)
}

pub fn encode_state_field(state: StateId) -> String {
    assert!(state >= 1, "states are numbered from 1");
    let mut s = String::new();
    low_bits_first(u64::from(state), &mut s);
    s
}

/// Encodes one grid cell. Halting cells become write / `Z` / same state.
pub fn encode_instruction(
    table: &MachineTable,
    state: StateId,
    read: Letter,
    scheme: &EncodingScheme,
) -> Result<String, EncodeError> {
    let (write, mv, next) = match table.entry(state, read) {
        None => (read, Move::Stay, state),
        Some(Action::Halt { write }) => (write.unwrap_or(read), Move::Stay, state),
        Some(Action::Do { write, mv, next }) => {
            if mv == Move::Stay && !table.halts_at(state, read) {
                return Err(EncodeError::StationaryStep {
                    state,
                    letter: table.alphabet().glyph(read),
                });
            }
            (write, mv, next)
        }
    };
    let mut s = String::from("Y");
    s.push_str(&encode_letter_field(
        write.rank(),
        scheme.letter_field_width,
    )?);
    s.push(mv.glyph());
    s.push_str(&encode_state_field(next));
    Ok(s)
}

fn check_encodable(table: &MachineTable) -> Result<(), EncodeError> {
    match validate_for_encoding(table).first() {
        None => Ok(()),
        Some(Violation::StationaryStep { state, letter }) => Err(EncodeError::StationaryStep {
            state: *state,
            letter: table.alphabet().glyph(*letter),
        }),
        Some(Violation::EmptyState { state }) => Err(EncodeError::EmptyState(*state)),
    }
}

/// `X` plus every instruction of the state, for each state in order.
pub fn encode_program(table: &MachineTable) -> Result<String, EncodeError> {
    check_encodable(table)?;
    let scheme = EncodingScheme::for_table(table)?;
    let mut out = String::new();
    for state in 1..=table.state_count() {
        out.push('X');
        for read in table.alphabet().letters() {
            out.push_str(&encode_instruction(table, state, read, &scheme)?);
        }
    }
    Ok(out)
}

/// Squares of a half-tape, `W` marking the scanned one.
pub fn encode_tape(
    tape: &[Letter],
    scanned: usize,
    scheme: &EncodingScheme,
) -> Result<String, EncodeError> {
    let mut out = String::new();
    for (i, l) in tape.iter().enumerate() {
        out.push(if i == scanned { 'W' } else { 'U' });
        out.push_str(&encode_letter_field(l.rank(), scheme.letter_field_width)?);
    }
    Ok(out)
}

/// Number of symbols in the encoded program: the `X` and `Y` delimiters count,
/// the enclosing `S` delimiters do not.
pub fn encoded_length(table: &MachineTable) -> Result<usize, EncodeError> {
    encode_program(table).map(|p| p.len())
}

/// Initial tape of the universal machine for a machine and its configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncodedConfiguration {
    pub full: String,
    pub u_head: i64,
    pub u_state: StateId,
    /// Index of the first cell after the rightmost `S`.
    pub m_tape_start: usize,
}

impl EncodedConfiguration {
    /// The same tape as a configuration of `utm`.
    pub fn to_configuration(&self, utm: &MachineTable) -> Configuration {
        let letters = utm
            .alphabet()
            .parse_word(&self.full)
            .expect("encoding uses only universal-machine glyphs");
        Configuration::new(
            Tape::with_letters(utm.blank(), 0, &letters),
            self.u_head,
            self.u_state,
        )
    }
}

/// Encodes `config` of `table`. The machine must be in state 1 with nothing
/// left of the head; trailing blanks are not encoded.
pub fn encode_initial_configuration(
    table: &MachineTable,
    config: &Configuration,
) -> Result<EncodedConfiguration, EncodeError> {
    if config.state != 1 {
        return Err(EncodeError::UnsupportedStart(config.state));
    }
    let mut tape = Vec::new();
    if let Some((lo, hi)) = config.tape.support() {
        if lo < config.head {
            return Err(EncodeError::NotHalfTape);
        }
        tape = config.tape.slice(config.head, hi);
    }
    if tape.is_empty() {
        tape.push(config.tape.read(config.head));
    }
    let scheme = EncodingScheme::for_table(table)?;
    let program = encode_program(table)?;
    let mut full = String::with_capacity(program.len() + 3 + tape.len() * 8);
    full.push('S');
    full.push_str(&program);
    full.push('S');
    let m_tape_start = full.len();
    full.push_str(&encode_tape(&tape, 0, &scheme)?);
    full.push('_');
    Ok(EncodedConfiguration {
        full,
        u_head: 0,
        u_state: UTM_START_STATE,
        m_tape_start,
    })
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("no S delimiter")]
    NoDelimiter,
    #[error("unexpected glyph {glyph:?} at offset {offset} of the tape region")]
    BadGlyph { glyph: char, offset: usize },
    #[error("malformed square at offset {0} of the tape region")]
    MalformedSquare(usize),
    #[error("squares have different widths")]
    WidthMismatch,
}

/// A simulated configuration recovered from the universal machine's tape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodedConfiguration {
    pub tape: Vec<Letter>,
    /// Index of the `W` square, if exactly one exists.
    pub scanned: Option<usize>,
    pub state: StateId,
    /// True when the tape region holds exactly one `W` and no transient marks.
    pub clean: bool,
}

impl DecodedConfiguration {
    /// The decoded configuration as a configuration of `table`.
    pub fn to_configuration(&self, table: &MachineTable) -> Option<Configuration> {
        let head = self.scanned? as i64;
        if self
            .tape
            .iter()
            .any(|l| l.0 as usize >= table.alphabet().len())
        {
            return None;
        }
        Some(Configuration::new(
            Tape::with_letters(table.blank(), 0, &self.tape),
            head,
            self.state,
        ))
    }

    pub fn render(&self, alphabet: &Alphabet) -> Option<String> {
        self.tape
            .iter()
            .map(|l| alphabet.glyphs().get(l.0 as usize).copied())
            .collect()
    }
}

/// Reads the simulated machine's tape right of the rightmost `S` and its state
/// from the program-side `W`; before that `W` is placed the state is 1.
///
/// Trailing blanks of the universal tape are ignored.
pub fn decode_m_configuration(u_tape: &str) -> Result<DecodedConfiguration, DecodeError> {
    let chars: Vec<char> = u_tape.trim_end_matches('_').chars().collect();
    let rs = chars
        .iter()
        .rposition(|&c| c == 'S')
        .ok_or(DecodeError::NoDelimiter)?;
    let region = &chars[rs + 1..];

    let mut clean = true;
    let mut squares: Vec<(usize, usize)> = Vec::new();
    for (i, &c) in region.iter().enumerate() {
        match c {
            'U' | 'W' => squares.push((i, i + 1)),
            '0' | '1' | 'h' => {
                if squares.is_empty() {
                    return Err(DecodeError::MalformedSquare(i));
                }
            }
            _ if UTM_GLYPHS.contains(c) => clean = false,
            _ => {
                return Err(DecodeError::BadGlyph {
                    glyph: c,
                    offset: i,
                })
            }
        }
        if let Some(last) = squares.last_mut() {
            last.1 = i + 1;
        }
    }
    if !clean {
        return Ok(DecodedConfiguration {
            tape: Vec::new(),
            scanned: None,
            state: program_state(&chars[..rs]),
            clean: false,
        });
    }

    let width = squares.first().map(|&(a, b)| b - a - 1);
    let mut tape = Vec::with_capacity(squares.len());
    let mut scanned = None;
    let mut marks = 0;
    for &(a, b) in &squares {
        if Some(b - a - 1) != width {
            return Err(DecodeError::WidthMismatch);
        }
        if region[a] == 'W' {
            marks += 1;
            scanned = Some(tape.len());
        }
        let field = &region[a + 1..b];
        let digits: Vec<char> = field.iter().copied().take_while(|&c| c != 'h').collect();
        let valid = !digits.is_empty()
            && digits.len() < field.len()
            && field[digits.len()..].iter().all(|&c| c == 'h')
            && digits.last() == Some(&'1');
        if !valid {
            return Err(DecodeError::MalformedSquare(a));
        }
        let rank = digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * 2 + u64::from(d == '1'));
        let letter = u32::try_from(rank)
            .ok()
            .and_then(Letter::from_rank)
            .ok_or(DecodeError::MalformedSquare(a))?;
        tape.push(letter);
    }
    if marks != 1 {
        scanned = None;
    }
    Ok(DecodedConfiguration {
        tape,
        scanned,
        state: program_state(&chars[..rs]),
        clean: marks == 1,
    })
}

// Blocks are delimited by X, or by W for the current state's block. The
// program starts after the last S or T left of the tape delimiter.
fn program_state(left: &[char]) -> StateId {
    let start = left
        .iter()
        .rposition(|&c| c == 'S' || c == 'T')
        .map_or(0, |i| i + 1);
    let mut block = 0;
    for &c in &left[start..] {
        match c {
            'X' => block += 1,
            'W' => return block + 1,
            _ => {}
        }
    }
    1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{bundled_machine, parse_table};

    #[test]
    fn widths() {
        assert_eq!(field_width(5), Ok(4));
        assert_eq!(field_width(16), Ok(6));
        assert_eq!(field_width(1), Ok(2));
        assert_eq!(field_width(0), Err(EncodeError::EmptyAlphabet));
    }

    #[test]
    fn fields() {
        assert_eq!(encode_letter_field(3, 4).unwrap(), "11hh");
        assert_eq!(encode_letter_field(4, 6).unwrap(), "001hhh");
        assert_eq!(encode_letter_field(1, 4).unwrap(), "1hhh");
        assert_eq!(
            encode_letter_field(8, 4),
            Err(EncodeError::RankTooLarge { rank: 8, width: 4 })
        );
        assert_eq!(encode_state_field(42), "010101");
        assert_eq!(encode_state_field(43), "110101");
        assert_eq!(encode_state_field(1), "1");
    }

    #[test]
    fn addition_instruction() {
        let t = bundled_machine("addition").unwrap();
        let s = EncodingScheme::for_table(&t).unwrap();
        let star = t.alphabet().letter('*').unwrap();
        assert_eq!(encode_instruction(&t, 1, star, &s).unwrap(), "Y101hR01");
    }

    #[test]
    fn smallest_machine() {
        let t = parse_table("alphabet: _\nstate 1:\n  _ -> !\n").unwrap();
        let cfg = Configuration::from_input(&t, &[], 0, 1);
        let e = encode_initial_configuration(&t, &cfg).unwrap();
        assert_eq!(e.full, "SXY1hZ1SW1h_");
        assert_eq!(e.full.len(), 12);
        assert_eq!(e.m_tape_start, 8);
    }

    #[test]
    fn rejects_stationary_steps_and_other_starts() {
        let t = parse_table("alphabet: _ a\nstate 1:\n  _ -> a Z\n").unwrap();
        assert_eq!(
            encode_program(&t),
            Err(EncodeError::StationaryStep {
                state: 1,
                letter: '_'
            })
        );
        let add = bundled_machine("addition").unwrap();
        let cfg = Configuration::from_input(&add, &[], 0, 2);
        assert_eq!(
            encode_initial_configuration(&add, &cfg),
            Err(EncodeError::UnsupportedStart(2))
        );
    }

    #[test]
    fn decodes_states_and_marks() {
        let d = decode_m_configuration("SXY1hZ1SW1h_").unwrap();
        assert_eq!(d.tape, vec![Letter(0)]);
        assert_eq!((d.scanned, d.state, d.clean), (Some(0), 1, true));
        let d = decode_m_configuration("SXY1hhZ1WY01hZ1SU1hhW01h").unwrap();
        assert_eq!(d.tape, vec![Letter(0), Letter(1)]);
        assert_eq!((d.scanned, d.state, d.clean), (Some(1), 2, true));
        let d = decode_m_configuration("SXSU1hd1h").unwrap();
        assert!(!d.clean);
        assert_eq!(decode_m_configuration("XY"), Err(DecodeError::NoDelimiter));
        assert_eq!(
            decode_m_configuration("SW1hU11h"),
            Err(DecodeError::WidthMismatch)
        );
        assert_eq!(
            decode_m_configuration("SW0hh"),
            Err(DecodeError::MalformedSquare(0))
        );
    }
}
