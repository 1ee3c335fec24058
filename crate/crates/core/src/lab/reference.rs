//! Expected values for the acceptance criteria.

pub const ADDITION_INPUT: &str = "*|||*||*";
pub const E1_STEPS: u64 = 106;
pub const E1_FINAL_WINDOW: &str = "*|||*||*|||||*";

pub const E2_STEPS: u64 = 1_143_717;
pub const E2_INITIAL_REGION: &str = "SW01hhU11hhU11hhU11hhU01hhU11hhU11hhU01hh";
pub const E2_FINAL_REGION: &str =
    "SW01hhU11hhU11hhU11hhU01hhU11hhU11hhU01hhU11hhU11hhU11hhU11hhU11hhU01hh";

pub const E3_STEPS: u64 = 2_303_033;
pub const E3_INITIAL_REGION: &str = concat!(
    "UUUGCACUGAGAGGCUCUGAGAGGCUCUGAGAGGCUCUGAGAGGCACUGAGAGGCUCUGAGAGG",
    "CUCUGAGAGGCACUGAGACG",
);
pub const E3_FINAL_REGION: &str = concat!(
    "UUUGCACUGAGAGGCUCUGAGAGGCUCUGAGAGGCUCUGAGAGGCACUGAGAGGCUCUGAGAGG",
    "CUCUGAGAGGCACUGAGAGGCUCUGAGAGGCUCUGAGAGGCUCUGAGAGGCUCUGAGAGGCUCU",
    "GAGAGGCACUGAGACG",
);

pub const UTM_STATES: u32 = 87;
pub const UTM_CELLS: usize = 1392;
pub const UTM_CODE_LENGTH: usize = 10_351;
pub const UTM_CODE_RNA_LENGTH: usize = 20_702;

/// Encoded block of state 42 of the pedagogical machine.
pub const STATE42_BLOCK: &str = concat!(
    "XY1hhhhhZ010101Y01hhhhL010101Y11hhhhL010101Y001hhhR110101Y101hhh",
    "L010101Y011hhhZ010101Y111hhhL010101Y0001hhL010101Y1001hhZ010101Y",
    "0101hhZ010101Y1101hhL010101Y0011hhL010101Y1011hhL010101Y0111hhL0",
    "10101Y1111hhZ010101Y00001hZ010101",
);

/// Nucleotide form of [`STATE42_BLOCK`].
pub const STATE42_RNA: &str = concat!(
    "AACCCUGAGAGAGAGAAUCACUCACUCACUCCCACUGAGAGAGAACCACUCACUCACUCCCUCU",
    "GAGAGAGAACCACUCACUCACUCCCACACUGAGAGAAGCUCUCACUCACUCCCUCACUGAGAGA",
    "ACCACUCACUCACUCCCACUCUGAGAGAAUCACUCACUCACUCCCUCUCUGAGAGAACCACUCA",
    "CUCACUCCCACACACUGAGAACCACUCACUCACUCCCUCACACUGAGAAUCACUCACUCACUCC",
    "CACUCACUGAGAAUCACUCACUCACUCCCUCUCACUGAGAACCACUCACUCACUCCCACACUCU",
    "GAGAACCACUCACUCACUCCCUCACUCUGAGAACCACUCACUCACUCCCACUCUCUGAGAACCA",
    "CUCACUCACUCCCUCUCUCUGAGAAUCACUCACUCACUCCCACACACACUGAAUCACUCACUCA",
    "CU",
);

/// Nucleotide code of the four-letter, six-state machine's program.
pub const NEARY_RNA_PROGRAM: &str = concat!(
    "AACCCACACUGAACCUCCCUCUGAGAACCUCCCACUGAGAACCUCCCUGAGAGAAGCACUAACC",
    "CUCUGAGAAGCUCACUCCCUCUGAGAAGCACUCCCUCUGAGAAGCUCCCUGAGAGAAGCACUAA",
    "CCCACACUGAACCUCUCCCACUGAGAAGCUCACUCCCACUGAGAACCUCUCCCACACUGAACCU",
    "CACUAACCCUGAGAGAAGCUCACUCCCUCUGAGAAGCACACUCCCACUGAGAAGCACUCCCAGA",
    "GAGAAGCACACUAACCCACUGAGAACCUCUCCCUCUGAGAAGCACUCUCCCACUGAGAACCACU",
    "CUCCCACACUGAAGCUCACUAACCCUGAGAGAAUCACUCUCCCUCUGAGAAGCUCACUCCCACU",
    "GAGAACCACACUCCCUCUGAGAAGCU",
);
pub const NEARY_RNA_LENGTH: usize = 410;
/// Symbol count stated alongside the nucleotide code; half of it is 205.
pub const NEARY_CODE_LENGTH_STATED: usize = 206;

/// Scale-area snapshots while converting 011 to unary, in order.
pub const SCALE_PATTERNS: [&str; 5] = [
    "d000d0ddF000000000S",
    "d000e0ehF000000000S",
    "d000L0ehF000000000S",
    "d000d0LhFhhhh00000S",
    "d000d0ddFhhhhhh000S",
];

pub const RNA_CENSUS_ENTRIES: usize = 1652;
pub const RNA_CENSUS_NO_OVERWRITE: usize = 958;
pub const RNA_CENSUS_HALTING: usize = 542;
pub const RNA_CENSUS_OVERWRITE: usize = 152;
pub const RNA_CENSUS_SAME_STATE: usize = 45;
pub const RNA_CENSUS_SAME_STATE_OVERWRITE: usize = 24;
pub const ADDITION_PURE_GLIDES: usize = 13;
pub const ADDITION_EMPTY: usize = 21;
pub const NEARY_NONHALTING: usize = 23;
