//! The three reference runs: the addition machine, the universal machine on its
//! code, and the RNA machine on the nucleotide form of that code.

use std::fmt;
use std::str::FromStr;

use crate::encoding::{encode_initial_configuration, EncodedConfiguration};
use crate::lab::reference as r;
use crate::machine::{
    format_window, run, Alphabet, Configuration, MachineTable, RunLimits, RunResult,
};
use crate::rna::{rna_initial_configuration, rna_tape_region};
use crate::table::bundled_machine;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExperimentId {
    E1,
    E2,
    E3,
}

impl ExperimentId {
    pub const ALL: [ExperimentId; 3] = [ExperimentId::E1, ExperimentId::E2, ExperimentId::E3];

    pub fn default_budget(self) -> u64 {
        match self {
            ExperimentId::E1 => 10_000,
            ExperimentId::E2 | ExperimentId::E3 => 10_000_000,
        }
    }
}

impl fmt::Display for ExperimentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for ExperimentId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "E1" => Ok(ExperimentId::E1),
            "E2" => Ok(ExperimentId::E2),
            "E3" => Ok(ExperimentId::E3),
            _ => Err(format!("unknown experiment {s:?}; expected E1, E2 or E3")),
        }
    }
}

/// Table, starting configuration and budget of an experiment.
#[derive(Clone, Debug)]
pub struct ExperimentSetup {
    pub id: ExperimentId,
    pub table: MachineTable,
    pub initial: Configuration,
    pub budget: u64,
}

/// The addition machine and the universal machine's tape for its reference input.
pub fn addition_encoding() -> (MachineTable, EncodedConfiguration) {
    let add = bundled_machine("addition").expect("bundled");
    let input = add
        .alphabet()
        .parse_word(r::ADDITION_INPUT)
        .expect("input glyphs");
    let cfg = Configuration::from_input(&add, &input, 0, 1);
    let enc = encode_initial_configuration(&add, &cfg).expect("addition is encodable");
    (add, enc)
}

pub fn experiment_setup(id: ExperimentId) -> ExperimentSetup {
    let (add, enc) = addition_encoding();
    let (table, initial) = match id {
        ExperimentId::E1 => {
            let input = add
                .alphabet()
                .parse_word(r::ADDITION_INPUT)
                .expect("glyphs");
            let cfg = Configuration::from_input(&add, &input, 0, 1);
            (add, cfg)
        }
        ExperimentId::E2 => {
            let utm = bundled_machine("pedagogical-utm").expect("bundled");
            let cfg = enc.to_configuration(&utm);
            (utm, cfg)
        }
        ExperimentId::E3 => {
            let rna = bundled_machine("rna-utm").expect("bundled");
            let cfg = rna_initial_configuration(&enc, &rna).expect("encodable");
            (rna, cfg)
        }
    };
    ExperimentSetup {
        id,
        table,
        initial,
        budget: id.default_budget(),
    }
}

/// Universal-machine tape from the rightmost `S` through the last non-blank cell.
pub fn u_tape_region(config: &Configuration, alphabet: &Alphabet) -> String {
    let w = format_window(config, alphabet);
    let blank = alphabet.glyph(config.tape.blank_pattern()[0]);
    match w.rfind('S') {
        Some(i) => w[i..].trim_end_matches(blank).to_string(),
        None => String::new(),
    }
}

/// The compared region of a configuration of the experiment's machine.
pub fn experiment_region(id: ExperimentId, table: &MachineTable, config: &Configuration) -> String {
    match id {
        ExperimentId::E1 => format_window(config, table.alphabet()),
        ExperimentId::E2 => u_tape_region(config, table.alphabet()),
        ExperimentId::E3 => rna_tape_region(config, table).unwrap_or_default(),
    }
}

#[derive(Clone, Debug)]
pub struct ExperimentReport {
    pub id: ExperimentId,
    pub result: RunResult,
    pub initial_region: String,
    pub region: String,
    pub expected_steps: u64,
    pub expected_initial_region: &'static str,
    pub expected_region: &'static str,
}

impl ExperimentReport {
    pub fn steps_match(&self) -> bool {
        self.result.steps == self.expected_steps
    }

    pub fn region_matches(&self) -> bool {
        self.region == self.expected_region
    }

    pub fn initial_region_matches(&self) -> bool {
        self.initial_region == self.expected_initial_region
    }

    pub fn passed(&self) -> bool {
        self.steps_match() && self.region_matches() && self.result.reason.is_final()
    }
}

impl fmt::Display for ExperimentReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "match" } else { "DIFFERS" };
        writeln!(f, "experiment {}", self.id)?;
        writeln!(
            f,
            "  steps   {} (expected {}, {})",
            self.result.steps,
            self.expected_steps,
            mark(self.steps_match())
        )?;
        writeln!(f, "  halt    {}", self.result.reason)?;
        writeln!(
            f,
            "  final   state={} head={}",
            self.result.final_config.state, self.result.final_config.head
        )?;
        writeln!(
            f,
            "  initial {} ({})",
            self.initial_region,
            mark(self.initial_region_matches())
        )?;
        writeln!(
            f,
            "  region  {} ({})",
            self.region,
            mark(self.region_matches())
        )?;
        if !self.region_matches() {
            writeln!(f, "  expect  {}", self.expected_region)?;
            if let Some(i) = first_difference(&self.region, self.expected_region) {
                writeln!(f, "  first difference at offset {i}")?;
            }
        }
        Ok(())
    }
}

pub fn first_difference(a: &str, b: &str) -> Option<usize> {
    let (a, b) = (a.as_bytes(), b.as_bytes());
    (0..a.len().max(b.len())).find(|&i| a.get(i) != b.get(i))
}

pub fn run_experiment(id: ExperimentId) -> ExperimentReport {
    let setup = experiment_setup(id);
    let initial_region = experiment_region(id, &setup.table, &setup.initial);
    let result = run(
        &setup.table,
        setup.initial,
        &RunLimits::budget(setup.budget),
    );
    let region = experiment_region(id, &setup.table, &result.final_config);
    let (expected_steps, expected_initial_region, expected_region) = match id {
        ExperimentId::E1 => (r::E1_STEPS, r::ADDITION_INPUT, r::E1_FINAL_WINDOW),
        ExperimentId::E2 => (r::E2_STEPS, r::E2_INITIAL_REGION, r::E2_FINAL_REGION),
        ExperimentId::E3 => (r::E3_STEPS, r::E3_INITIAL_REGION, r::E3_FINAL_REGION),
    };
    ExperimentReport {
        id,
        result,
        initial_region,
        region,
        expected_steps,
        expected_initial_region,
        expected_region,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::HaltReason;

    #[test]
    fn e1_matches() {
        let rep = run_experiment(ExperimentId::E1);
        assert_eq!(rep.result.steps, 106);
        assert_eq!(rep.result.reason, HaltReason::Explicit);
        assert_eq!(rep.region, "*|||*||*|||||*");
        assert!(rep.passed());
    }

    #[test]
    fn parses_ids() {
        assert_eq!("e2".parse::<ExperimentId>(), Ok(ExperimentId::E2));
        assert!("E4".parse::<ExperimentId>().is_err());
    }
}
