mod common;

use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn all_solvers_agree_with_brute_force(g in arb_graph(24)) {
        check_solvers(&g).map_err(TestCaseError::fail)?;
    }
}

#[test]
fn structured_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for inst in structured_instances(&mut rng) {
        if let Err(e) = check_solvers(&inst.graph) {
            panic!("{}: {e}", inst.name);
        }
    }
}

#[test]
fn random_gnp_batch() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for inst in gnp_instances(60, &mut rng) {
        if let Err(e) = check_solvers(&inst.graph) {
            panic!("{}: {e}", inst.name);
        }
    }
}
