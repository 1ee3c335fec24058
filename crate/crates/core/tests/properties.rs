use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tmlab::encoding::*;
use tmlab::lab::random::*;
use tmlab::lab::verify::utm_refines;
use tmlab::machine::*;
use tmlab::rna::*;
use tmlab::table::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn utm_text() -> impl Strategy<Value = String> {
    proptest::collection::vec(
        proptest::sample::select(UTM_GLYPHS.chars().collect::<Vec<_>>()),
        0..64,
    )
    .prop_map(|v| v.into_iter().collect())
}

fn nucleotides() -> impl Strategy<Value = String> {
    (0usize..32)
        .prop_flat_map(|pairs| {
            proptest::collection::vec(
                proptest::sample::select(vec!['A', 'C', 'G', 'U']),
                2 * pairs,
            )
        })
        .prop_map(|v| v.into_iter().collect())
}

proptest! {
    #[test]
    fn rna_roundtrip(s in utm_text()) {
        let enc = rna_encode(&s).unwrap();
        prop_assert_eq!(enc.len(), 2 * s.len());
        prop_assert_eq!(rna_decode(&enc).unwrap(), s);
    }

    #[test]
    fn rna_decode_is_total_on_pairs(n in nucleotides()) {
        let d = rna_decode(&n).unwrap();
        prop_assert_eq!(rna_encode(&d).unwrap(), n);
    }

    #[test]
    fn odd_nucleotide_strings_rejected(n in nucleotides()) {
        let odd = format!("{n}A");
        prop_assert!(rna_decode(&odd).is_err());
    }

    #[test]
    fn table_text_roundtrip(seed in any::<u64>()) {
        let t = random_table(&mut rng(seed), 6, 8);
        let text = serialize_table(&t);
        let back = parse_table(&text).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(serialize_table(&back), text);
    }

    #[test]
    fn census_identities(seed in any::<u64>()) {
        let t = random_table(&mut rng(seed), 6, 8);
        let s = table_stats(&t);
        prop_assert_eq!(s.entries, t.state_count() as usize * t.alphabet().len());
        prop_assert_eq!(s.entries, s.halting + s.no_overwrite_nonhalt + s.overwrite_nonhalt);
        prop_assert!(s.same_state_overwrite <= s.same_state_nonhalt);
        prop_assert!(s.pure_glides <= s.no_overwrite_nonhalt);
        prop_assert!(s.empty_entries <= s.halting);
    }

    #[test]
    fn letter_fields_have_fixed_width(letters in 1usize..200, pick in any::<u32>()) {
        let w = field_width(letters).unwrap();
        let rank = pick % letters as u32 + 1;
        let f = encode_letter_field(rank, w).unwrap();
        prop_assert_eq!(f.len(), w);
        prop_assert!(f.ends_with('h'));
        let digits = f.trim_end_matches('h');
        prop_assert!(digits.ends_with('1'));
        let back = digits.chars().rev().fold(0u32, |a, c| a * 2 + u32::from(c == '1'));
        prop_assert_eq!(back, rank);
    }

    #[test]
    fn state_fields_are_lsb_first(state in 1u32..100_000) {
        let f = encode_state_field(state);
        let back = f.chars().rev().fold(0u32, |a, c| a * 2 + u32::from(c == '1'));
        prop_assert_eq!(back, state);
        prop_assert!(f.ends_with('1'));
    }

    #[test]
    fn configuration_roundtrip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random_encodable_table(&mut r, 1..=6, 8);
        let input = random_input(&mut r, t.alphabet().len(), 10);
        let cfg = Configuration::from_input(&t, &input, 0, 1);
        let enc = encode_initial_configuration(&t, &cfg).unwrap();
        prop_assert_eq!(enc.full.matches('S').count(), 2);
        let d = decode_m_configuration(&enc.full).unwrap();
        prop_assert!(d.clean);
        prop_assert_eq!((d.scanned, d.state), (Some(0), 1));
        prop_assert_eq!(d.to_configuration(&t).unwrap().snapshot(), cfg.snapshot());
    }

    #[test]
    fn program_length_matches_encoded_length(seed in any::<u64>()) {
        let t = random_encodable_table(&mut rng(seed), 1..=6, 8);
        let p = encode_program(&t).unwrap();
        prop_assert_eq!(p.len(), encoded_length(&t).unwrap());
        prop_assert_eq!(p.matches('X').count(), t.state_count() as usize);
        prop_assert_eq!(p.matches('Y').count(), t.cells());
    }

    #[test]
    fn runs_are_deterministic(seed in any::<u64>(), budget in 0u64..300) {
        let mut r = rng(seed);
        let t = random_table(&mut r, 5, 5);
        let cfg = random_configuration(&mut r, &t);
        let a = run(&t, cfg.clone(), &RunLimits::budget(budget));
        let b = run(&t, cfg, &RunLimits::budget(budget));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn steps_add_up(seed in any::<u64>(), budget in 0u64..300, split in 0u64..300) {
        let mut r = rng(seed);
        let t = random_table(&mut r, 5, 5);
        let cfg = random_configuration(&mut r, &t);
        let split = split.min(budget);
        let whole = run(&t, cfg.clone(), &RunLimits::budget(budget));
        let first = run(&t, cfg, &RunLimits::budget(split));
        let second = run(&t, first.final_config.clone(), &RunLimits::budget(budget - split));
        prop_assert_eq!(first.steps + second.steps, whole.steps);
        prop_assert_eq!(second.final_config.snapshot(), whole.final_config.snapshot());
        if whole.reason.is_final() {
            prop_assert_eq!(second.reason, whole.reason);
        }
    }

    #[test]
    fn halts_are_absorbing(seed in any::<u64>(), extra in 0u64..50) {
        let mut r = rng(seed);
        let t = random_table(&mut r, 5, 5);
        let cfg = random_configuration(&mut r, &t);
        let res = run(&t, cfg, &RunLimits::budget(500));
        if res.reason.is_final() {
            let again = run(&t, res.final_config.clone(), &RunLimits::budget(extra));
            prop_assert_eq!(again.steps, 0);
            prop_assert_eq!(again.reason, res.reason);
            prop_assert_eq!(again.final_config, res.final_config);
        }
    }

    #[test]
    fn window_grows_at_most_one_cell_per_step(seed in any::<u64>()) {
        let mut r = rng(seed);
        let t = random_table(&mut r, 5, 5);
        let mut cfg = random_configuration(&mut r, &t);
        let engine = Engine::new(&t);
        let mut prev = cfg.window();
        for _ in 0..200 {
            if engine.step(&mut cfg).is_some() {
                break;
            }
            let w = cfg.window();
            prop_assert!((w.1 - w.0) <= (prev.1 - prev.0) + 1);
            prev = w;
        }
    }

    #[test]
    fn fence_is_never_crossed(seed in any::<u64>(), fence in -3i64..3) {
        let mut r = rng(seed);
        let t = random_table(&mut r, 5, 5);
        let mut cfg = random_configuration(&mut r, &t);
        if cfg.head < fence {
            cfg.head = fence;
            cfg.tape.ensure(fence);
        }
        let mut lowest = cfg.head;
        let limits = RunLimits { budget: 300, fence_left: Some(fence) };
        let res = run_observed(&t, cfg, &limits, |_, c| lowest = lowest.min(c.head));
        prop_assert!(lowest >= fence);
        prop_assert!(res.final_config.head >= fence);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn universal_machine_refines_supported_machines(seed in any::<u64>()) {
        let case = random_polite_case(&mut rng(seed), UTM_MIN_STATES..=6, 6, 40);
        prop_assume!(utm_supports(&case.table));
        let rep = utm_refines(&case.table, case.initial(), case.steps);
        prop_assert!(rep.passed, "{}", rep);
    }
}
