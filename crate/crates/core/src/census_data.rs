// Frozen gluing data for the small census entries, derived by the
// exhaustive enumerations in this module (see `enumerate_one_tet` and
// `enumerate_two_tet`) and selected by homology. The derivation is
// re-checked in tests/census_derivation.rs.
const S3_PAIRS_DATA: [((usize, usize), (usize, usize), &str); 2] =
    [((0, 0), (0, 1), "012"), ((0, 2), (0, 3), "120")];
const L41_PAIRS_DATA: [((usize, usize), (usize, usize), &str); 2] =
    [((0, 0), (0, 1), "120"), ((0, 2), (0, 3), "120")];
const L52_PAIRS_DATA: [((usize, usize), (usize, usize), &str); 2] =
    [((0, 0), (0, 1), "120"), ((0, 2), (0, 3), "201")];
const S2XS1_PAIRS_DATA: [((usize, usize), (usize, usize), &str); 4] = [
    ((0, 0), (0, 1), "120"),
    ((0, 2), (1, 0), "120"),
    ((0, 3), (1, 1), "120"),
    ((1, 2), (1, 3), "120"),
];
const RP3_PAIRS_DATA: [((usize, usize), (usize, usize), &str); 4] = [
    ((0, 0), (0, 1), "012"),
    ((0, 2), (1, 0), "012"),
    ((0, 3), (1, 1), "201"),
    ((1, 2), (1, 3), "201"),
];
const L31_PAIRS_DATA: [((usize, usize), (usize, usize), &str); 4] = [
    ((0, 0), (0, 1), "012"),
    ((0, 2), (1, 0), "120"),
    ((0, 3), (1, 1), "120"),
    ((1, 2), (1, 3), "120"),
];
