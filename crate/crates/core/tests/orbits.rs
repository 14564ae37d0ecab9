use std::collections::BTreeSet;

use nilcone::{
    delta, enumerate_multipartitions, enumerate_orbits, enumerate_partitions, fundamental_group,
    residue, semisimplicity_report, shifted_residue, FGAbelianGroup, OrbitCatalog, OrbitLabel,
    RationalCharacter,
};
use num_integer::Integer;
use proptest::prelude::*;

/// `Q(n, ℓ)` by filtering every `(λ, ν)` with `|λ| + |ν| = nℓ`.
fn brute_force_orbits(n: usize, ell: usize) -> BTreeSet<String> {
    let target = n as i64 * delta(ell);
    let mut out = BTreeSet::new();
    for lambda in enumerate_partitions(n * ell) {
        let res = residue(&lambda, ell);
        for nu in enumerate_multipartitions(n * ell - lambda.size(), ell) {
            if &res + &shifted_residue(&nu, ell).unwrap() == target {
                out.insert(format!("{lambda} | {nu}"));
            }
        }
    }
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 0..=3 {
        for ell in 1..=3 {
            let got: Vec<_> = enumerate_orbits(n, ell);
            let as_set: BTreeSet<String> = got
                .iter()
                .map(|l| format!("{} | {}", l.lambda(), l.nu()))
                .collect();
            assert_eq!(as_set.len(), got.len(), "duplicates at n = {n}, ℓ = {ell}");
            assert_eq!(as_set, brute_force_orbits(n, ell), "n = {n}, ℓ = {ell}");
            assert!(got.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn gcd_law_for_ell_one() {
    for n in 0..=6 {
        for label in enumerate_orbits(n, 1) {
            let g = label
                .nu()
                .component(0)
                .parts()
                .iter()
                .fold(0usize, |a, &b| a.gcd(&b));
            assert_eq!(
                fundamental_group(&label),
                FGAbelianGroup::cyclic(g as i64),
                "{label}"
            );
        }
    }
}

#[test]
fn fundamental_group_is_free_of_full_rank_iff_nu_empty() {
    for n in 0..=3 {
        for ell in 1..=3 {
            for label in enumerate_orbits(n, ell) {
                let full = fundamental_group(&label) == FGAbelianGroup::free(ell);
                assert_eq!(full, label.nu().is_empty(), "{label}");
            }
        }
    }
}

#[test]
fn every_orbit_decomposes_to_the_full_dimension_vector() {
    let catalog = OrbitCatalog::new(3, 3);
    let target = (3 * delta(3)).with_framing(1);
    for (label, d) in catalog.labels().iter().zip(catalog.decompositions()) {
        assert_eq!(d.total(), target, "{label}");
    }
}

#[test]
fn labels_round_trip_through_text() {
    for label in enumerate_orbits(2, 3) {
        let again = OrbitLabel::new(
            label.lambda().to_string().parse().unwrap(),
            label.nu().to_string().parse().unwrap(),
        )
        .unwrap();
        assert_eq!(again, label);
    }
}

fn character(ell: usize) -> impl Strategy<Value = RationalCharacter> {
    prop::collection::vec((-24i64..24, 1i64..=12), ell)
        .prop_map(|v| RationalCharacter::from_fractions(&v))
}

fn sized_character() -> impl Strategy<Value = (usize, usize, RationalCharacter)> {
    (1usize..=3, 1usize..=3).prop_flat_map(|(n, ell)| (Just(n), Just(ell), character(ell)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn counting_dichotomy((n, ell, chi) in sized_character()) {
        let r = semisimplicity_report(n, ell, &chi).unwrap();
        prop_assert!(r.simple_count >= r.pell_count);
        prop_assert_eq!(r.simple_count == r.pell_count, r.is_semisimple());
        prop_assert_eq!(r.simple_count == r.orbit_count, chi.is_integral());
        prop_assert_eq!(r.violated_roots.is_empty(), r.is_semisimple());
    }
}
