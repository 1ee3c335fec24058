//! Two-nucleotide code between the universal machine's alphabet and A, C, G, U.

use thiserror::Error;

use crate::encoding::EncodedConfiguration;
use crate::machine::{Configuration, Letter, MachineTable, Tape};

/// Each universal-machine glyph and its nucleotide pair.
pub const RNA_PAIRS: [(char, &str); 16] = [
    ('S', "UU"),
    ('X', "AA"),
    ('Y', "CC"),
    ('U', "GG"),
    ('T', "UA"),
    ('F', "UC"),
    ('W', "UG"),
    ('_', "CG"),
    ('L', "AC"),
    ('R', "AG"),
    ('0', "CA"),
    ('1', "CU"),
    ('h', "GA"),
    ('d', "GC"),
    ('e', "GU"),
    ('Z', "AU"),
];

pub const NUCLEOTIDES: &str = "ACGU";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RnaError {
    #[error("glyph {0:?} has no nucleotide code")]
    UnknownGlyph(char),
    #[error("odd number of nucleotides")]
    OddLength,
    #[error("{0:?} is not a nucleotide")]
    NotNucleotide(char),
}

fn pair_of(glyph: char) -> Option<&'static str> {
    RNA_PAIRS.iter().find(|(g, _)| *g == glyph).map(|(_, p)| *p)
}

fn nucleotide_index(c: char) -> Option<usize> {
    NUCLEOTIDES.find(c)
}

// Indexed by 4 * first + second.
fn glyph_of(a: usize, b: usize) -> char {
    static TABLE: std::sync::OnceLock<[char; 16]> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = ['?'; 16];
        for (g, p) in RNA_PAIRS {
            let mut it = p.chars().map(|c| nucleotide_index(c).expect("nucleotide"));
            let (x, y) = (it.next().unwrap(), it.next().unwrap());
            t[4 * x + y] = g;
        }
        t
    })[4 * a + b]
}

pub fn rna_encode(text: &str) -> Result<String, RnaError> {
    let mut out = String::with_capacity(text.len() * 2);
    for c in text.chars() {
        out.push_str(pair_of(c).ok_or(RnaError::UnknownGlyph(c))?);
    }
    Ok(out)
}

pub fn rna_decode(rna: &str) -> Result<String, RnaError> {
    let idx: Vec<usize> = rna
        .chars()
        .map(|c| nucleotide_index(c).ok_or(RnaError::NotNucleotide(c)))
        .collect::<Result<_, _>>()?;
    if !idx.len().is_multiple_of(2) {
        return Err(RnaError::OddLength);
    }
    Ok(idx.chunks(2).map(|p| glyph_of(p[0], p[1])).collect())
}

/// Starting configuration of the RNA machine for an encoded tape.
///
/// The head starts on the second nucleotide of the universal machine's start
/// cell: the RNA machine's entry states that move left read the right half of
/// a pair first. Outside the written region the tape reads as the code of the
/// universal blank, `C` on even cells and `G` on odd cells.
pub fn rna_initial_configuration(
    encoded: &EncodedConfiguration,
    rna_table: &MachineTable,
) -> Result<Configuration, RnaError> {
    let rna = rna_encode(&encoded.full)?;
    let alpha = rna_table.alphabet();
    let letters: Vec<Letter> = rna
        .chars()
        .map(|c| alpha.letter(c).ok_or(RnaError::NotNucleotide(c)))
        .collect::<Result<_, _>>()?;
    let tape = Tape::with_letters_periodic(rna_blank(rna_table)?, 0, &letters);
    Ok(Configuration::new(
        tape,
        2 * encoded.u_head + 1,
        encoded.u_state,
    ))
}

/// The code of the universal blank as a parity-indexed blank pattern.
pub fn rna_blank(rna_table: &MachineTable) -> Result<[Letter; 2], RnaError> {
    let pair = pair_of('_').expect("blank has a code");
    let alpha = rna_table.alphabet();
    let mut it = pair
        .chars()
        .map(|c| alpha.letter(c).ok_or(RnaError::NotNucleotide(c)));
    Ok([it.next().unwrap()?, it.next().unwrap()?])
}

/// Nucleotides from the rightmost pair-aligned `UU` through the last
/// non-blank pair, followed by one blank pair.
pub fn rna_tape_region(config: &Configuration, rna_table: &MachineTable) -> Option<String> {
    let (lo, hi) = config.tape.support()?;
    let lo = lo & !1;
    let hi = hi | 1;
    let alpha = rna_table.alphabet();
    let text: String = (lo..=hi + 2)
        .map(|p| alpha.glyph(config.tape.read(p)))
        .collect();
    let s_pair = pair_of('S').expect("S has a code");
    let start = (0..text.len())
        .step_by(2)
        .rev()
        .find(|&i| text[i..].starts_with(s_pair))?;
    Some(text[start..].to_string())
}
