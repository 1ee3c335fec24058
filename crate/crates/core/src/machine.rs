//! Deterministic single-tape Turing machine engine.
//!
//! A [`MachineTable`] is a dense state × letter grid of optional [`Action`]s.
//! States are numbered from 1; letters are zero-based indices into the
//! machine's [`Alphabet`], so a letter's rank is its index plus one.
//!
//! Three conditions halt a run: an explicit `!` action, an EMPTY grid cell,
//! and a stationary identity (write the scanned letter, stay, same state).
//! All three are detected at lookup and never count as a step.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// State identifier, numbered from 1.
pub type StateId = u32;

/// A letter, stored as its zero-based position in the alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

impl Letter {
    /// One-based rank in the ordered alphabet.
    pub fn rank(self) -> u32 {
        u32::from(self.0) + 1
    }

    pub fn from_rank(rank: u32) -> Option<Letter> {
        if rank == 0 || rank > 256 {
            return None;
        }
        Some(Letter((rank - 1) as u8))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("alphabet is empty")]
    Empty,
    #[error("alphabet has more than 256 letters")]
    TooLarge,
    #[error("glyph {0:?} appears twice")]
    Duplicate(char),
    #[error("glyph {0:?} is not printable")]
    Unprintable(char),
}

/// Ordered alphabet of single-character glyphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    glyphs: Vec<char>,
}

impl Alphabet {
    pub fn new(glyphs: Vec<char>) -> Result<Self, AlphabetError> {
        if glyphs.is_empty() {
            return Err(AlphabetError::Empty);
        }
        if glyphs.len() > 256 {
            return Err(AlphabetError::TooLarge);
        }
        for (i, &g) in glyphs.iter().enumerate() {
            if g.is_whitespace() || g.is_control() {
                return Err(AlphabetError::Unprintable(g));
            }
            if glyphs[..i].contains(&g) {
                return Err(AlphabetError::Duplicate(g));
            }
        }
        Ok(Alphabet { glyphs })
    }

    /// Builds an alphabet from a string of glyphs, one char per letter.
    pub fn from_glyphs(s: &str) -> Result<Self, AlphabetError> {
        Alphabet::new(s.chars().collect())
    }

    pub fn len(&self) -> usize {
        self.glyphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.glyphs.is_empty()
    }

    pub fn glyphs(&self) -> &[char] {
        &self.glyphs
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.glyphs.len()).map(|i| Letter(i as u8))
    }

    pub fn glyph(&self, l: Letter) -> char {
        self.glyphs[l.0 as usize]
    }

    pub fn letter(&self, glyph: char) -> Option<Letter> {
        self.glyphs
            .iter()
            .position(|&g| g == glyph)
            .map(|i| Letter(i as u8))
    }

    /// Maps each char of `word` to a letter; returns the first unknown glyph on failure.
    pub fn parse_word(&self, word: &str) -> Result<Vec<Letter>, char> {
        word.chars().map(|c| self.letter(c).ok_or(c)).collect()
    }

    pub fn render(&self, letters: &[Letter]) -> String {
        letters.iter().map(|&l| self.glyph(l)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Left,
    Right,
    Stay,
}

impl Move {
    pub fn glyph(self) -> char {
        match self {
            Move::Left => 'L',
            Move::Right => 'R',
            Move::Stay => 'Z',
        }
    }

    pub fn from_glyph(c: char) -> Option<Move> {
        match c {
            'L' => Some(Move::Left),
            'R' => Some(Move::Right),
            'Z' => Some(Move::Stay),
            _ => None,
        }
    }

    pub fn delta(self) -> i64 {
        match self {
            Move::Left => -1,
            Move::Right => 1,
            Move::Stay => 0,
        }
    }
}

/// A defined grid cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    /// The `!` marker, optionally writing a letter before halting.
    Halt { write: Option<Letter> },
    Do {
        write: Letter,
        mv: Move,
        next: StateId,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HaltReason {
    Explicit,
    EmptyEntry,
    StationaryIdentity,
    BudgetExceeded,
    LeftFenceViolation,
}

impl HaltReason {
    pub fn as_str(self) -> &'static str {
        match self {
            HaltReason::Explicit => "EXPLICIT",
            HaltReason::EmptyEntry => "EMPTY_ENTRY",
            HaltReason::StationaryIdentity => "STATIONARY_IDENTITY",
            HaltReason::BudgetExceeded => "BUDGET_EXCEEDED",
            HaltReason::LeftFenceViolation => "LEFT_FENCE_VIOLATION",
        }
    }

    /// True for the three table-driven halts, which are absorbing.
    pub fn is_final(self) -> bool {
        matches!(
            self,
            HaltReason::Explicit | HaltReason::EmptyEntry | HaltReason::StationaryIdentity
        )
    }
}

impl fmt::Display for HaltReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-entry census class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntryClass {
    Halt,
    /// Moves without writing a new letter or changing state.
    PureGlide,
    /// Writes the scanned letter back; not a pure glide.
    NoOverwriteStep,
    OverwriteStep,
}

impl EntryClass {
    pub fn is_no_overwrite(self) -> bool {
        matches!(self, EntryClass::PureGlide | EntryClass::NoOverwriteStep)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ContractError {
    #[error("state {state} out of range 1..={max}")]
    State { state: StateId, max: StateId },
    #[error("letter rank {rank} out of range 1..={max}")]
    Letter { rank: u32, max: usize },
}

/// Alphabet plus a dense grid of optional actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MachineTable {
    pub name: String,
    alphabet: Alphabet,
    blank: Letter,
    states: StateId,
    grid: Vec<Option<Action>>,
}

impl MachineTable {
    /// A table with every cell EMPTY.
    pub fn new(name: impl Into<String>, alphabet: Alphabet, states: StateId) -> Self {
        assert!(states >= 1, "a machine needs at least one state");
        let cells = states as usize * alphabet.len();
        MachineTable {
            name: name.into(),
            alphabet,
            blank: Letter(0),
            states,
            grid: vec![None; cells],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn blank(&self) -> Letter {
        self.blank
    }

    pub fn set_blank(&mut self, blank: Letter) {
        assert!((blank.0 as usize) < self.alphabet.len());
        self.blank = blank;
    }

    pub fn state_count(&self) -> StateId {
        self.states
    }

    pub fn cells(&self) -> usize {
        self.grid.len()
    }

    fn check(&self, state: StateId, letter: Letter) -> Result<usize, ContractError> {
        if state == 0 || state > self.states {
            return Err(ContractError::State {
                state,
                max: self.states,
            });
        }
        if letter.0 as usize >= self.alphabet.len() {
            return Err(ContractError::Letter {
                rank: letter.rank(),
                max: self.alphabet.len(),
            });
        }
        Ok((state as usize - 1) * self.alphabet.len() + letter.0 as usize)
    }

    /// Reads a grid cell verbatim.
    pub fn lookup(&self, state: StateId, letter: Letter) -> Result<Option<Action>, ContractError> {
        self.check(state, letter).map(|i| self.grid[i])
    }

    /// Like [`lookup`](Self::lookup) but panics on out-of-range indices.
    pub fn entry(&self, state: StateId, letter: Letter) -> Option<Action> {
        self.lookup(state, letter).expect("index in range")
    }

    /// Sets a grid cell; the action's write and next state must be in range.
    pub fn set(
        &mut self,
        state: StateId,
        letter: Letter,
        action: Option<Action>,
    ) -> Result<(), ContractError> {
        let i = self.check(state, letter)?;
        match action {
            Some(Action::Do { write, next, .. }) => {
                self.check(next, write)?;
            }
            Some(Action::Halt { write: Some(w) }) => {
                self.check(state, w)?;
            }
            _ => {}
        }
        self.grid[i] = action;
        Ok(())
    }

    /// True if the cell halts the machine when looked up.
    pub fn halts_at(&self, state: StateId, letter: Letter) -> bool {
        match self.entry(state, letter) {
            None | Some(Action::Halt { .. }) => true,
            Some(Action::Do { write, mv, next }) => {
                write == letter && mv == Move::Stay && next == state
            }
        }
    }

    pub fn classify_entry(
        &self,
        state: StateId,
        letter: Letter,
    ) -> Result<EntryClass, ContractError> {
        let action = self.lookup(state, letter)?;
        Ok(match action {
            None | Some(Action::Halt { .. }) => EntryClass::Halt,
            Some(Action::Do { write, mv, next }) => {
                if write != letter {
                    EntryClass::OverwriteStep
                } else if next == state && mv == Move::Stay {
                    EntryClass::Halt
                } else if next == state {
                    EntryClass::PureGlide
                } else {
                    EntryClass::NoOverwriteStep
                }
            }
        })
    }
}

/// Tape with a finite window of cells and a blank pattern outside it.
///
/// The blank may alternate between two letters by cell parity; this is how a
/// pair-encoded tape keeps its encoded blank outside the written region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tape {
    blank: [Letter; 2],
    start: i64,
    cells: VecDeque<Letter>,
}

impl Tape {
    pub fn new(blank: Letter) -> Self {
        Tape::periodic([blank, blank])
    }

    /// Blank is `blank[0]` on even cells and `blank[1]` on odd cells.
    pub fn periodic(blank: [Letter; 2]) -> Self {
        Tape {
            blank,
            start: 0,
            cells: VecDeque::new(),
        }
    }

    /// Tape holding `letters` from cell `start` onwards.
    pub fn with_letters(blank: Letter, start: i64, letters: &[Letter]) -> Self {
        let mut t = Tape::new(blank);
        t.load(start, letters);
        t
    }

    pub fn with_letters_periodic(blank: [Letter; 2], start: i64, letters: &[Letter]) -> Self {
        let mut t = Tape::periodic(blank);
        t.load(start, letters);
        t
    }

    pub fn load(&mut self, start: i64, letters: &[Letter]) {
        self.start = start;
        self.cells = letters.iter().copied().collect();
    }

    pub fn blank_pattern(&self) -> [Letter; 2] {
        self.blank
    }

    #[inline]
    pub fn blank_at(&self, pos: i64) -> Letter {
        self.blank[(pos & 1) as usize]
    }

    pub fn window_start(&self) -> i64 {
        self.start
    }

    pub fn window_len(&self) -> usize {
        self.cells.len()
    }

    #[inline]
    pub fn read(&self, pos: i64) -> Letter {
        let off = pos - self.start;
        if off >= 0 && (off as usize) < self.cells.len() {
            self.cells[off as usize]
        } else {
            self.blank_at(pos)
        }
    }

    /// Grows the window with blanks until it contains `pos`.
    pub fn ensure(&mut self, pos: i64) {
        if self.cells.is_empty() {
            self.start = pos;
            self.cells.push_back(self.blank_at(pos));
            return;
        }
        while pos < self.start {
            self.start -= 1;
            let b = self.blank_at(self.start);
            self.cells.push_front(b);
        }
        while pos >= self.start + self.cells.len() as i64 {
            let b = self.blank_at(self.start + self.cells.len() as i64);
            self.cells.push_back(b);
        }
    }

    pub fn write(&mut self, pos: i64, l: Letter) {
        self.ensure(pos);
        let off = (pos - self.start) as usize;
        self.cells[off] = l;
    }

    /// Inclusive bounds of the non-blank cells, or `None` on an all-blank tape.
    pub fn support(&self) -> Option<(i64, i64)> {
        let first = self
            .cells
            .iter()
            .enumerate()
            .position(|(i, &c)| c != self.blank_at(self.start + i as i64))?;
        let last = self
            .cells
            .iter()
            .enumerate()
            .rposition(|(i, &c)| c != self.blank_at(self.start + i as i64))?;
        Some((self.start + first as i64, self.start + last as i64))
    }

    /// Letters in the inclusive range `lo..=hi`.
    pub fn slice(&self, lo: i64, hi: i64) -> Vec<Letter> {
        (lo..=hi).map(|p| self.read(p)).collect()
    }
}

/// Tape, head and state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub tape: Tape,
    pub head: i64,
    pub state: StateId,
    /// Set once a table-driven halt has fired; such a configuration stays halted.
    pub halted: Option<HaltReason>,
}

impl Configuration {
    pub fn new(mut tape: Tape, head: i64, state: StateId) -> Self {
        tape.ensure(head);
        Configuration {
            tape,
            head,
            state,
            halted: None,
        }
    }

    /// `input` on cells `0..`, head on cell `head`.
    pub fn from_input(table: &MachineTable, input: &[Letter], head: i64, state: StateId) -> Self {
        Configuration::new(Tape::with_letters(table.blank(), 0, input), head, state)
    }

    /// Inclusive bounds of the minimal window holding every non-blank cell and the head.
    pub fn window(&self) -> (i64, i64) {
        match self.tape.support() {
            Some((lo, hi)) => (lo.min(self.head), hi.max(self.head)),
            None => (self.head, self.head),
        }
    }

    /// Canonical form: equal snapshots mean equal future behaviour.
    pub fn snapshot(&self) -> Snapshot {
        let (start, cells) = match self.tape.support() {
            Some((lo, hi)) => (lo, self.tape.slice(lo, hi)),
            None => (0, Vec::new()),
        };
        Snapshot {
            start,
            cells,
            head: self.head,
            state: self.state,
        }
    }
}

/// Non-blank tape contents with head and state, independent of window padding.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Snapshot {
    pub start: i64,
    pub cells: Vec<Letter>,
    pub head: i64,
    pub state: StateId,
}

/// Glyphs of the minimal window containing all non-blank cells and the head.
///
/// The head position and state are not embedded; an all-blank tape gives "".
pub fn format_window(config: &Configuration, alphabet: &Alphabet) -> String {
    if config.tape.support().is_none() {
        return String::new();
    }
    let (lo, hi) = config.window();
    (lo..=hi)
        .map(|p| alphabet.glyph(config.tape.read(p)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Applied(Configuration),
    Halted {
        reason: HaltReason,
        config: Configuration,
    },
}

/// Applies one instruction to a copy of `config`.
pub fn apply_step(table: &MachineTable, config: &Configuration) -> StepOutcome {
    let mut next = config.clone();
    match Engine::new(table).step(&mut next) {
        None => StepOutcome::Applied(next),
        Some(reason) => StepOutcome::Halted {
            reason,
            config: next,
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunLimits {
    pub budget: u64,
    pub fence_left: Option<i64>,
}

impl RunLimits {
    pub fn budget(budget: u64) -> Self {
        RunLimits {
            budget,
            fence_left: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunResult {
    pub steps: u64,
    pub reason: HaltReason,
    pub final_config: Configuration,
}

pub fn run(table: &MachineTable, initial: Configuration, limits: &RunLimits) -> RunResult {
    Engine::new(table).run(initial, limits, |_, _| {})
}

/// Runs with `observer(step, config)` called after every applied step.
pub fn run_observed<F>(
    table: &MachineTable,
    initial: Configuration,
    limits: &RunLimits,
    observer: F,
) -> RunResult
where
    F: FnMut(u64, &Configuration),
{
    Engine::new(table).run(initial, limits, observer)
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Halt(HaltReason, Option<Letter>),
    Step {
        write: Letter,
        delta: i64,
        next: StateId,
    },
}

/// A table compiled for the step loop, with halting classified per cell.
#[derive(Clone, Debug)]
pub struct Engine {
    ops: Vec<Op>,
    width: usize,
    states: StateId,
}

impl Engine {
    pub fn new(table: &MachineTable) -> Self {
        let width = table.alphabet().len();
        let mut ops = Vec::with_capacity(table.cells());
        for state in 1..=table.state_count() {
            for letter in table.alphabet().letters() {
                let op = match table.entry(state, letter) {
                    None => Op::Halt(HaltReason::EmptyEntry, None),
                    Some(Action::Halt { write }) => Op::Halt(HaltReason::Explicit, write),
                    Some(Action::Do { write, mv, next }) => {
                        if write == letter && mv == Move::Stay && next == state {
                            Op::Halt(HaltReason::StationaryIdentity, None)
                        } else {
                            Op::Step {
                                write,
                                delta: mv.delta(),
                                next,
                            }
                        }
                    }
                };
                ops.push(op);
            }
        }
        Engine {
            ops,
            width,
            states: table.state_count(),
        }
    }

    #[inline]
    fn op(&self, config: &Configuration) -> Op {
        assert!(
            config.state >= 1 && config.state <= self.states,
            "state {} out of range 1..={}",
            config.state,
            self.states
        );
        let letter = config.tape.read(config.head);
        self.ops[(config.state as usize - 1) * self.width + letter.0 as usize]
    }

    /// Applies one instruction in place; returns the halt reason if none applies.
    #[inline]
    pub fn step(&self, config: &mut Configuration) -> Option<HaltReason> {
        if let Some(r) = config.halted {
            return Some(r);
        }
        match self.op(config) {
            Op::Halt(reason, write) => {
                if let Some(w) = write {
                    config.tape.write(config.head, w);
                }
                config.halted = Some(reason);
                Some(reason)
            }
            Op::Step { write, delta, next } => {
                config.tape.write(config.head, write);
                config.head += delta;
                config.tape.ensure(config.head);
                config.state = next;
                None
            }
        }
    }

    /// True if the next step would move the head left of `fence`.
    fn crosses_fence(&self, config: &Configuration, fence: i64) -> bool {
        if config.halted.is_some() {
            return false;
        }
        match self.op(config) {
            Op::Step { delta, .. } => config.head + delta < fence,
            Op::Halt(..) => false,
        }
    }

    pub fn run<F>(
        &self,
        mut config: Configuration,
        limits: &RunLimits,
        mut observer: F,
    ) -> RunResult
    where
        F: FnMut(u64, &Configuration),
    {
        let mut steps = 0u64;
        let reason = loop {
            if let Some(r) = config.halted {
                break r;
            }
            if steps >= limits.budget {
                break HaltReason::BudgetExceeded;
            }
            if let Some(fence) = limits.fence_left {
                if self.crosses_fence(&config, fence) {
                    break HaltReason::LeftFenceViolation;
                }
            }
            if let Some(r) = self.step(&mut config) {
                break r;
            }
            steps += 1;
            observer(steps, &config);
        };
        RunResult {
            steps,
            reason,
            final_config: config,
        }
    }
}
