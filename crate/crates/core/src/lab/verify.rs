//! Acceptance criteria A1 to A10 as a structured report.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::encoding::{
    decode_m_configuration, encode_initial_configuration, encode_program, encoded_length,
    UTM_MIN_STATES,
};
use crate::lab::experiment::{experiment_setup, run_experiment, ExperimentId};
use crate::lab::random::{
    random_configuration, random_encodable_table, random_input, random_polite_case, random_table,
};
use crate::lab::reference as r;
use crate::lab::refine::{check_refinement, rna_projection, utm_projection};
use crate::lab::scan::scan_for_snapshots;
use crate::machine::{run, Configuration, Engine, MachineTable, RunLimits};
use crate::rna::{rna_decode, rna_encode, RNA_PAIRS};
use crate::table::{bundled_machine, parse_table, serialize_table, table_stats};

pub const CRITERIA: [(&str, &str); 10] = [
    ("A1", "addition run: steps and final window"),
    (
        "A2",
        "universal machine on the addition code: steps and tape region",
    ),
    (
        "A3",
        "RNA machine on the nucleotide code: steps and tape region",
    ),
    ("A4", "instruction census"),
    ("A5", "state 42 self-encoding and its nucleotide form"),
    ("A6", "encoded lengths"),
    ("A7", "simulated runs appear in order in the universal run"),
    ("A8", "roundtrip properties"),
    ("A9", "scale-area snapshots during the universal run"),
    ("A10", "engine invariants"),
];

/// Nucleotide offsets where the reference code of the four-letter machine
/// differs from the encoding of its table. At 155 the table has move `L`
/// (`AC`) for state 3 on C where the code has `R` (`AG`); at 253 the code
/// holds the field `0hhh`, which is not a valid letter field.
pub const NEARY_RNA_ERRATA: [usize; 2] = [155, 253];

/// Cases per randomized property.
pub const PROPERTY_CASES: usize = 10_000;

const SEED: u64 = 0x7_4d_1a_b5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
    /// Reported but not part of the verdict.
    pub diagnostic: bool,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            passed: expected == actual,
            expected,
            actual,
            diagnostic: false,
        }
    }

    fn flag(name: impl Into<String>, ok: bool, detail: impl ToString) -> Self {
        Check {
            name: name.into(),
            expected: "true".into(),
            actual: if ok {
                "true".into()
            } else {
                format!("false ({})", detail.to_string())
            },
            passed: ok,
            diagnostic: false,
        }
    }

    fn diagnostic(mut self) -> Self {
        self.diagnostic = true;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: &'static str,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| !c.diagnostic)
            .all(|c| c.passed)
    }

    /// One-line verdict: id, PASS or FAIL, title and the failing checks.
    pub fn summary(&self) -> String {
        let failing: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.diagnostic && !c.passed)
            .map(|c| {
                format!(
                    "{}: expected {}, got {}",
                    c.name,
                    clip(&c.expected),
                    clip(&c.actual)
                )
            })
            .collect();
        if failing.is_empty() {
            format!("{:<4}PASS  {}", self.id, self.title)
        } else {
            format!(
                "{:<4}FAIL  {} [{}]",
                self.id,
                self.title,
                failing.join("; ")
            )
        }
    }
}

fn clip(s: &str) -> String {
    if s.len() <= 48 {
        s.to_string()
    } else {
        format!("{}...({} chars)", &s[..40], s.len())
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        for c in &self.checks {
            let tag = match (c.diagnostic, c.passed) {
                (true, _) => "info",
                (false, true) => "ok",
                (false, false) => "FAIL",
            };
            writeln!(
                f,
                "      {tag:<4} {} = {} (expected {})",
                c.name,
                clip(&c.actual),
                clip(&c.expected)
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub criteria: Vec<CriterionResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(CriterionResult::passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.criteria {
            write!(f, "{c}")?;
        }
        let failed = self.criteria.iter().filter(|c| !c.passed()).count();
        writeln!(
            f,
            "{} criteria, {} passed, {} failed",
            self.criteria.len(),
            self.criteria.len() - failed,
            failed
        )
    }
}

pub fn verify_all(only: Option<&str>) -> Result<VerifyReport, String> {
    let ids: Vec<&str> = match only {
        None => CRITERIA.iter().map(|(id, _)| *id).collect(),
        Some(id) => {
            let id = CRITERIA
                .iter()
                .find(|(c, _)| c.eq_ignore_ascii_case(id))
                .map(|(c, _)| *c)
                .ok_or_else(|| format!("unknown criterion {id:?}; expected A1..A10"))?;
            vec![id]
        }
    };
    Ok(VerifyReport {
        criteria: ids
            .into_iter()
            .map(|id| verify_criterion(id).expect("known id"))
            .collect(),
    })
}

pub fn verify_criterion(id: &str) -> Option<CriterionResult> {
    let &(id, title) = CRITERIA.iter().find(|(c, _)| *c == id)?;
    let checks = match id {
        "A1" => a1(),
        "A2" => a2(),
        "A3" => a3(),
        "A4" => a4(),
        "A5" => a5(),
        "A6" => a6(),
        "A7" => a7(),
        "A8" => a8(),
        "A9" => a9(),
        "A10" => a10(),
        _ => unreachable!(),
    };
    Some(CriterionResult { id, title, checks })
}

fn experiment_checks(id: ExperimentId) -> Vec<Check> {
    let rep = run_experiment(id);
    vec![
        Check::new(format!("{id} steps"), rep.expected_steps, rep.result.steps),
        Check::flag(
            format!("{id} halts"),
            rep.result.reason.is_final(),
            rep.result.reason,
        ),
        Check::new(
            format!("{id} final region"),
            rep.expected_region,
            &rep.region,
        ),
        Check::new(
            format!("{id} initial region"),
            rep.expected_initial_region,
            &rep.initial_region,
        )
        .diagnostic(),
        Check::new(format!("{id} halt reason"), "", rep.result.reason).diagnostic(),
    ]
}

fn a1() -> Vec<Check> {
    experiment_checks(ExperimentId::E1)
}

fn a2() -> Vec<Check> {
    experiment_checks(ExperimentId::E2)
}

fn a3() -> Vec<Check> {
    experiment_checks(ExperimentId::E3)
}

fn machine(id: &str) -> MachineTable {
    bundled_machine(id).expect("bundled")
}

fn a4() -> Vec<Check> {
    let rs = table_stats(&machine("rna-utm"));
    let us = table_stats(&machine("pedagogical-utm"));
    let add = table_stats(&machine("addition"));
    let ny = table_stats(&machine("neary4x6"));
    vec![
        Check::new("rna-utm entries", r::RNA_CENSUS_ENTRIES, rs.entries),
        Check::new(
            "rna-utm no_overwrite_nonhalt",
            r::RNA_CENSUS_NO_OVERWRITE,
            rs.no_overwrite_nonhalt,
        ),
        Check::new("rna-utm halting", r::RNA_CENSUS_HALTING, rs.halting),
        Check::new(
            "rna-utm overwrite_nonhalt",
            r::RNA_CENSUS_OVERWRITE,
            rs.overwrite_nonhalt,
        ),
        Check::new(
            "rna-utm same_state_nonhalt",
            r::RNA_CENSUS_SAME_STATE,
            rs.same_state_nonhalt,
        ),
        Check::new(
            "rna-utm same_state_overwrite",
            r::RNA_CENSUS_SAME_STATE_OVERWRITE,
            rs.same_state_overwrite,
        ),
        Check::new("pedagogical-utm entries", r::UTM_CELLS, us.entries),
        Check::new(
            "addition pure_glides",
            r::ADDITION_PURE_GLIDES,
            add.pure_glides,
        ),
        Check::new(
            "addition empty_entries",
            r::ADDITION_EMPTY,
            add.empty_entries,
        ),
        Check::new("neary4x6 non-halting", r::NEARY_NONHALTING, ny.nonhalting()),
    ]
}

/// The `X`-prefixed block of `state` in an encoded program.
pub fn state_block(program: &str, state: usize) -> Option<String> {
    program.split('X').nth(state).map(|b| format!("X{b}"))
}

fn a5() -> Vec<Check> {
    let program = encode_program(&machine("pedagogical-utm")).expect("encodable");
    let block = state_block(&program, 42).unwrap_or_default();
    let rna = rna_encode(&block).unwrap_or_default();
    vec![
        Check::new("state 42 block", r::STATE42_BLOCK, &block),
        Check::new("state 42 block in nucleotides", r::STATE42_RNA, &rna),
    ]
}

/// Offsets where two strings differ, over the longer length.
pub fn differences(a: &str, b: &str) -> Vec<usize> {
    let (a, b) = (a.as_bytes(), b.as_bytes());
    (0..a.len().max(b.len()))
        .filter(|&i| a.get(i) != b.get(i))
        .collect()
}

fn a6() -> Vec<Check> {
    let u = machine("pedagogical-utm");
    let ulen = encoded_length(&u).expect("encodable");
    let urna = rna_encode(&encode_program(&u).expect("encodable")).expect("codable");
    let neary = encode_program(&machine("neary4x6")).expect("encodable");
    let nrna = rna_encode(&neary).expect("codable");
    let diffs = differences(&nrna, r::NEARY_RNA_PROGRAM);
    vec![
        Check::new("pedagogical-utm encoded length", r::UTM_CODE_LENGTH, ulen),
        Check::new(
            "pedagogical-utm nucleotide length",
            r::UTM_CODE_RNA_LENGTH,
            urna.len(),
        ),
        Check::new(
            "neary4x6 nucleotide length",
            r::NEARY_RNA_LENGTH,
            nrna.len(),
        ),
        Check::new(
            "neary4x6 offsets differing from the reference code",
            format!("{NEARY_RNA_ERRATA:?}"),
            format!("{diffs:?}"),
        ),
        Check::new(
            "neary4x6 encoded length (half the nucleotides)",
            r::NEARY_RNA_LENGTH / 2,
            neary.len(),
        ),
        Check::new(
            "neary4x6 stated symbol count",
            r::NEARY_CODE_LENGTH_STATED,
            neary.len(),
        )
        .diagnostic(),
        Check::new(
            "neary4x6 code with one S delimiter",
            r::NEARY_CODE_LENGTH_STATED,
            neary.len() + 1,
        )
        .diagnostic(),
    ]
}

/// Refinement of a polite machine by the universal machine.
pub fn utm_refines(
    m: &MachineTable,
    initial: Configuration,
    high_budget: u64,
) -> crate::lab::refine::RefinementReport {
    let utm = machine("pedagogical-utm");
    let enc = encode_initial_configuration(m, &initial).expect("encodable");
    let low = enc.to_configuration(&utm);
    check_refinement(
        m,
        initial,
        &utm,
        low,
        utm_projection(m, &utm),
        high_budget,
        100_000_000,
    )
}

fn a7() -> Vec<Check> {
    let s = experiment_setup(ExperimentId::E1);
    let rep = utm_refines(&s.table, s.initial, s.budget);
    let mut checks = vec![
        Check::new("addition configurations matched", 107, rep.matched),
        Check::flag("addition refinement", rep.passed, &rep),
    ];

    // Machines of 4 states and up to 4 letters: the largest the bounds allow,
    // and the only ones among them the universal machine can start on.
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut failures = Vec::new();
    for i in 0..50 {
        let case = random_polite_case(&mut rng, UTM_MIN_STATES..=UTM_MIN_STATES, 4, 50);
        let rep = utm_refines(&case.table, case.initial(), case.steps);
        if !rep.passed {
            failures.push(format!("#{i}: {rep}"));
        }
    }
    checks.push(Check::new(
        "random 4-state machines refined (of 50)",
        50,
        50 - failures.len(),
    ));
    if let Some(f) = failures.first() {
        checks.push(Check::new("first random failure", "", f).diagnostic());
    }
    let mut small = 0;
    for _ in 0..20 {
        let case = random_polite_case(&mut rng, 1..=UTM_MIN_STATES - 1, 4, 50);
        if utm_refines(&case.table, case.initial(), case.steps).passed {
            small += 1;
        }
    }
    checks.push(
        Check::new(
            "random machines with fewer than 4 states refined (of 20)",
            0,
            small,
        )
        .diagnostic(),
    );

    let utm = machine("pedagogical-utm");
    let rna = machine("rna-utm");
    let e2 = experiment_setup(ExperimentId::E2);
    let e3 = experiment_setup(ExperimentId::E3);
    let rep = check_refinement(
        &utm,
        e2.initial,
        &rna,
        e3.initial,
        rna_projection(&utm, &rna),
        2_000,
        10_000_000,
    );
    checks.push(
        Check::flag(
            "rna-utm refines the first 2000 universal steps",
            rep.passed,
            &rep,
        )
        .diagnostic(),
    );
    checks
}

fn a8() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 8);
    let glyphs: Vec<char> = RNA_PAIRS.iter().map(|(g, _)| *g).collect();

    let mut rna_fail = 0;
    for _ in 0..PROPERTY_CASES {
        let len = rng.gen_range(0..40);
        let s: String = (0..len).map(|_| glyphs[rng.gen_range(0..16)]).collect();
        let enc = rna_encode(&s).expect("codable");
        let n: String = (0..2 * len)
            .map(|_| "ACGU".as_bytes()[rng.gen_range(0..4)] as char)
            .collect();
        let back = rna_decode(&n).and_then(|d| rna_encode(&d));
        if rna_decode(&enc).as_deref() != Ok(s.as_str())
            || enc.len() != 2 * len
            || back.as_deref() != Ok(n.as_str())
        {
            rna_fail += 1;
        }
    }

    let mut table_fail = 0;
    let mut stats_fail = 0;
    for _ in 0..PROPERTY_CASES {
        let t = random_table(&mut rng, 6, 8);
        let text = serialize_table(&t);
        match parse_table(&text) {
            Ok(p) if p == t && serialize_table(&p) == text => {}
            _ => table_fail += 1,
        }
        let s = table_stats(&t);
        let ok = s.entries == t.state_count() as usize * t.alphabet().len()
            && s.entries == s.halting + s.no_overwrite_nonhalt + s.overwrite_nonhalt
            && s.same_state_overwrite <= s.same_state_nonhalt
            && s.pure_glides <= s.no_overwrite_nonhalt
            && s.empty_entries <= s.halting;
        if !ok {
            stats_fail += 1;
        }
    }

    let mut enc_fail = 0;
    for _ in 0..PROPERTY_CASES {
        let t = random_encodable_table(&mut rng, 1..=6, 8);
        let input = random_input(&mut rng, t.alphabet().len(), 10);
        let cfg = Configuration::from_input(&t, &input, 0, 1);
        let ok = encode_initial_configuration(&t, &cfg)
            .ok()
            .and_then(|e| decode_m_configuration(&e.full).ok())
            .is_some_and(|d| {
                d.clean
                    && d.scanned == Some(0)
                    && d.state == 1
                    && d.to_configuration(&t).map(|c| c.snapshot()) == Some(cfg.snapshot())
            });
        if !ok {
            enc_fail += 1;
        }
    }

    vec![
        Check::new(
            format!("rna roundtrip failures of {PROPERTY_CASES}"),
            0,
            rna_fail,
        ),
        Check::new(
            format!("table roundtrip failures of {PROPERTY_CASES}"),
            0,
            table_fail,
        ),
        Check::new(
            format!("configuration roundtrip failures of {PROPERTY_CASES}"),
            0,
            enc_fail,
        ),
        Check::new(
            format!("census identity failures of {PROPERTY_CASES}"),
            0,
            stats_fail,
        ),
    ]
}

fn a9() -> Vec<Check> {
    let s = experiment_setup(ExperimentId::E2);
    let p = r::SCALE_PATTERNS;
    let describe = |f: &[Option<crate::lab::scan::Sighting>]| -> String {
        f.iter()
            .map(|x| {
                x.map_or("not found".to_string(), |s| {
                    format!("step {} state {}", s.step, s.state)
                })
            })
            .collect::<Vec<_>>()
            .join(", ")
    };
    let ae = scan_for_snapshots(&s.table, s.initial.clone(), s.budget, &[p[0], p[4]]);
    let mut checks = vec![
        Check::flag("(a) found", ae[0].is_some(), describe(&ae[..1])),
        Check::flag("(e) found after (a)", ae[1].is_some(), describe(&ae[1..])),
    ];
    for (i, pat) in p.iter().enumerate().skip(1).take(3) {
        let f = scan_for_snapshots(&s.table, s.initial.clone(), s.budget, &[p[0], pat]);
        checks.push(
            Check::new(
                format!("({}) after (a)", (b'a' + i as u8) as char),
                "",
                describe(&f[1..]),
            )
            .diagnostic(),
        );
    }
    // The scale area is also closed by T while a next-state field is converted.
    let t_forms: Vec<String> = p.iter().map(|x| x.replace('S', "T")).collect();
    let t_refs: Vec<&str> = t_forms.iter().map(String::as_str).collect();
    let f = scan_for_snapshots(&s.table, s.initial, s.budget, &t_refs);
    checks.push(Check::new("(a)..(e) closed by T, in order", "", describe(&f)).diagnostic());
    checks
}

fn a10() -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let (mut absorb, mut additive, mut determinism, mut growth) = (0, 0, 0, 0);
    for _ in 0..PROPERTY_CASES {
        let t = random_table(&mut rng, 5, 5);
        let cfg = random_configuration(&mut rng, &t);
        let budget = rng.gen_range(0..200);
        let a = run(&t, cfg.clone(), &RunLimits::budget(budget));
        let b = run(&t, cfg.clone(), &RunLimits::budget(budget));
        if a != b {
            determinism += 1;
        }
        if a.reason.is_final() {
            let again = run(&t, a.final_config.clone(), &RunLimits::budget(budget));
            if again.steps != 0 || again.reason != a.reason {
                absorb += 1;
            }
        }
        let b1 = rng.gen_range(0..=budget);
        let first = run(&t, cfg.clone(), &RunLimits::budget(b1));
        let second = run(&t, first.final_config, &RunLimits::budget(budget - b1));
        if first.steps + second.steps != a.steps
            || second.final_config.snapshot() != a.final_config.snapshot()
            || (a.reason.is_final() && second.reason != a.reason)
        {
            additive += 1;
        }
        let engine = Engine::new(&t);
        let mut c = cfg.clone();
        let start_len = c.tape.window_len();
        let mut steps = 0usize;
        while steps < budget as usize && engine.step(&mut c).is_none() {
            steps += 1;
            if c.tape.window_len() > start_len + steps {
                growth += 1;
                break;
            }
        }
    }
    vec![
        Check::new(
            format!("halting absorption failures of {PROPERTY_CASES}"),
            0,
            absorb,
        ),
        Check::new(
            format!("step additivity failures of {PROPERTY_CASES}"),
            0,
            additive,
        ),
        Check::new(
            format!("determinism failures of {PROPERTY_CASES}"),
            0,
            determinism,
        ),
        Check::new(
            format!("window growth failures of {PROPERTY_CASES}"),
            0,
            growth,
        ),
    ]
}
