use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use tmlab::encoding::{decode_m_configuration, encode_initial_configuration, encode_program};
use tmlab::lab::experiment::{experiment_setup, run_experiment, ExperimentId};
use tmlab::lab::trace::export_trace;
use tmlab::lab::verify::verify_all;
use tmlab::machine::{format_window, run, Configuration, MachineTable, RunLimits};
use tmlab::rna::{rna_decode, rna_encode};
use tmlab::table::{bundled_machine, parse_table, serialize_table, table_stats, BUNDLED_IDS};

#[derive(Parser)]
#[command(name = "tmlab", version, about = "Turing machine laboratory")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the bundled machines.
    List,
    /// Print a machine in canonical table form.
    Show {
        /// Bundled machine id or path to a table file.
        machine: String,
    },
    /// Run a machine on an input word.
    Run {
        machine: String,
        #[arg(long, default_value = "")]
        input: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        head: i64,
        #[arg(long, default_value_t = 1)]
        state: u32,
        #[arg(long, default_value_t = 1_000_000)]
        max_steps: u64,
        /// Stop before the head would move left of this cell.
        #[arg(long, allow_negative_numbers = true)]
        fence_left: Option<i64>,
        /// Write a trace to this file (`-` for stdout).
        #[arg(long)]
        trace: Option<String>,
        #[arg(long, default_value_t = 1)]
        trace_every: u64,
    },
    /// Encode a machine's program, or its full starting tape for the
    /// universal machine when an input is given.
    Encode {
        machine: String,
        #[arg(long)]
        input: Option<String>,
        /// Print the nucleotide form.
        #[arg(long)]
        rna: bool,
    },
    /// Decode the simulated configuration from a universal-machine tape.
    DecodeConfig {
        /// Tape text, or `@path` to read it from a file.
        text: String,
        /// Render the tape with this machine's glyphs.
        #[arg(long)]
        machine: Option<String>,
    },
    /// Convert between symbols and nucleotides.
    Rna {
        #[command(subcommand)]
        direction: RnaCommand,
    },
    /// Instruction census of a machine.
    Stats {
        machine: String,
        #[arg(long, value_enum, default_value_t = StatsFormat::Table)]
        format: StatsFormat,
    },
    /// Run one of the reference experiments.
    Experiment {
        id: ExperimentId,
        #[arg(long)]
        trace: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        trace_every: u64,
    },
    /// Check the acceptance criteria; exits nonzero if any fails.
    Verify {
        /// Check a single criterion, e.g. A4.
        #[arg(long)]
        only: Option<String>,
        /// Print every check, not only the verdict lines.
        #[arg(long, short)]
        verbose: bool,
    },
}

#[derive(Subcommand)]
enum RnaCommand {
    Encode { text: String },
    Decode { text: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum StatsFormat {
    Table,
    Records,
}

fn load_machine(arg: &str) -> Result<MachineTable> {
    if BUNDLED_IDS.contains(&arg) {
        return Ok(bundled_machine(arg)?);
    }
    let src = fs::read_to_string(arg)
        .with_context(|| format!("{arg:?} is neither a bundled machine nor a readable file"))?;
    parse_table(&src).with_context(|| format!("parsing {arg}"))
}

fn text_arg(arg: &str) -> Result<String> {
    match arg.strip_prefix('@') {
        Some(path) => Ok(fs::read_to_string(path)
            .with_context(|| format!("reading {path}"))?
            .trim()
            .to_string()),
        None => Ok(arg.to_string()),
    }
}

fn trace_sink(path: &str) -> Result<Box<dyn Write>> {
    Ok(if path == "-" {
        Box::new(BufWriter::new(io::stdout()))
    } else {
        Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {path}"))?,
        ))
    })
}

fn parse_input(table: &MachineTable, input: &str) -> Result<Vec<tmlab::machine::Letter>> {
    table
        .alphabet()
        .parse_word(input)
        .map_err(|c| anyhow!("glyph {c:?} is not in the alphabet of {}", table.name))
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn real_main() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for id in BUNDLED_IDS {
                let t = bundled_machine(id)?;
                println!(
                    "{id:<16} {} states, alphabet {}",
                    t.state_count(),
                    t.alphabet().glyphs().iter().collect::<String>()
                );
            }
        }
        Command::Show { machine } => print!("{}", serialize_table(&load_machine(&machine)?)),
        Command::Run {
            machine,
            input,
            head,
            state,
            max_steps,
            fence_left,
            trace,
            trace_every,
        } => {
            let table = load_machine(&machine)?;
            let letters = parse_input(&table, &input)?;
            if state == 0 || state > table.state_count() {
                bail!("state {state} is outside 1..={}", table.state_count());
            }
            let cfg = Configuration::from_input(&table, &letters, head, state);
            if let Some(path) = trace {
                if fence_left.is_some() {
                    bail!("--trace does not support --fence-left");
                }
                let mut sink = trace_sink(&path)?;
                export_trace(&table, cfg.clone(), max_steps, &mut sink, trace_every)?;
            }
            let r = run(
                &table,
                cfg,
                &RunLimits {
                    budget: max_steps,
                    fence_left,
                },
            );
            println!("steps={}", r.steps);
            println!("halt={}", r.reason);
            println!("state={}", r.final_config.state);
            println!("head={}", r.final_config.head);
            println!("tape={}", format_window(&r.final_config, table.alphabet()));
            if !r.reason.is_final() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Encode {
            machine,
            input,
            rna,
        } => {
            let table = load_machine(&machine)?;
            let text = match input {
                None => encode_program(&table)?,
                Some(input) => {
                    let letters = parse_input(&table, &input)?;
                    let cfg = Configuration::from_input(&table, &letters, 0, 1);
                    encode_initial_configuration(&table, &cfg)?.full
                }
            };
            println!("{}", if rna { rna_encode(&text)? } else { text });
        }
        Command::DecodeConfig { text, machine } => {
            let d = decode_m_configuration(&text_arg(&text)?)?;
            println!("state={}", d.state);
            println!("clean={}", d.clean);
            match d.scanned {
                Some(i) => println!("head={i}"),
                None => println!("head=none"),
            }
            match machine {
                Some(m) => {
                    let table = load_machine(&m)?;
                    let tape = d.render(table.alphabet()).ok_or_else(|| {
                        anyhow!("tape holds a letter outside the alphabet of {}", table.name)
                    })?;
                    println!("tape={tape}");
                }
                None => {
                    let ranks: Vec<String> = d.tape.iter().map(|l| l.rank().to_string()).collect();
                    println!("ranks={}", ranks.join(","));
                }
            }
        }
        Command::Rna { direction } => match direction {
            RnaCommand::Encode { text } => println!("{}", rna_encode(&text_arg(&text)?)?),
            RnaCommand::Decode { text } => println!("{}", rna_decode(&text_arg(&text)?)?),
        },
        Command::Stats { machine, format } => {
            let table = load_machine(&machine)?;
            let s = table_stats(&table);
            match format {
                StatsFormat::Table => {
                    println!(
                        "machine {} ({} states, {} letters)",
                        table.name,
                        table.state_count(),
                        table.alphabet().len()
                    );
                    for (name, v) in s.fields() {
                        println!("  {name:<24} {v}");
                    }
                    println!("  {:<24} {}", "nonhalting", s.nonhalting());
                }
                StatsFormat::Records => {
                    for (name, v) in s.fields() {
                        println!("{name}={v}");
                    }
                    println!("nonhalting={}", s.nonhalting());
                }
            }
        }
        Command::Experiment {
            id,
            trace,
            trace_every,
        } => {
            if let Some(path) = trace {
                let s = experiment_setup(id);
                let mut sink = trace_sink(&path)?;
                export_trace(&s.table, s.initial, s.budget, &mut sink, trace_every)?;
            }
            let rep = run_experiment(id);
            print!("{rep}");
            if !rep.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Verify { only, verbose } => {
            let report = verify_all(only.as_deref()).map_err(|e| anyhow!(e))?;
            for c in &report.criteria {
                if verbose {
                    print!("{c}");
                } else {
                    println!("{}", c.summary());
                }
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
