//! Seeded pseudorandom suites shared by the `oracle-agree` command and the
//! acceptance tests: two independent procedures for torsion equality are run
//! against each other over a reproducible stream of ideal pairs.

use monotor_core::monomial::{Exponent, MonomialIdeal};
use monotor_core::torsion::{compare_torsion, torsion_equal_by_floor, TorsionRelation};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn random_ideal(rng: &mut ChaCha8Rng, vars: usize, max_exp: u32) -> MonomialIdeal {
    // small chance of the degenerate ideals, otherwise 1..=4 generators
    match rng.gen_range(0..20) {
        0 => MonomialIdeal::zero(vars),
        1 => MonomialIdeal::unit(vars),
        _ => {
            let count = rng.gen_range(1..=4);
            let gens = (0..count)
                .map(|_| Exponent::new((0..vars).map(|_| rng.gen_range(0..=max_exp)).collect()))
                .collect();
            MonomialIdeal::new(vars, gens).expect("generated over the same ring")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AgreementOutcome {
    pub checked: usize,
    pub mismatches: usize,
}

/// Runs the floor comparison against the mutual-power-containment comparison
/// on `pairs` pseudorandom ideal pairs; the two must agree on equality.
pub fn torsion_agreement(
    pairs: usize,
    max_vars: usize,
    max_exp: u32,
    seed: u64,
) -> AgreementOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mismatches = 0;
    for _ in 0..pairs {
        let vars = rng.gen_range(1..=max_vars);
        let a = random_ideal(&mut rng, vars, max_exp);
        let b = random_ideal(&mut rng, vars, max_exp);
        let by_floor = torsion_equal_by_floor(&a, &b).expect("same ring");
        let by_powers =
            compare_torsion(&a, &b).expect("same ring").relation == TorsionRelation::Equal;
        if by_floor != by_powers {
            mismatches += 1;
        }
    }
    AgreementOutcome {
        checked: pairs,
        mismatches,
    }
}
