use nilcone::{
    ariki_product_nonzero, cherednik_semisimple, chi_to_kappa, generate_rn, hecke_params,
    is_integral_pairing, kappa_to_chi, CircleElement, KappaParams, RationalCharacter,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn rat((n, d): (i64, i64)) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn fraction() -> impl Strategy<Value = (i64, i64)> {
    (-60i64..60, 1i64..=12)
}

fn character() -> impl Strategy<Value = RationalCharacter> {
    prop::collection::vec(fraction(), 1..=5).prop_map(|v| RationalCharacter::from_fractions(&v))
}

/// Free choice of `κ_{0,0}` and `κ_1..κ_{ℓ-1}`; `κ_0` closes the sum to zero.
fn kappa() -> impl Strategy<Value = KappaParams> {
    (fraction(), prop::collection::vec(fraction(), 0..=4)).prop_map(|(k00, rest)| {
        let rest: Vec<BigRational> = rest.into_iter().map(rat).collect();
        let k0 = -rest.iter().fold(BigRational::zero(), |a, b| a + b);
        let kappa = std::iter::once(k0).chain(rest).collect();
        KappaParams::from_k00(rat(k00), kappa).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn chi_kappa_chi_is_identity(chi in character()) {
        let kp = chi_to_kappa(&chi);
        prop_assert!((kp.k00() + kp.k01()).is_zero());
        prop_assert!(kp.kappa().iter().fold(BigRational::zero(), |a, b| a + b).is_zero());
        prop_assert_eq!(kappa_to_chi(&kp), chi);
    }

    #[test]
    fn kappa_chi_kappa_is_identity(kp in kappa()) {
        prop_assert_eq!(chi_to_kappa(&kappa_to_chi(&kp)), kp);
    }

    #[test]
    fn delta_pairing_is_k_and_q_is_its_circle(kp in kappa()) {
        let chi = kappa_to_chi(&kp);
        prop_assert_eq!(chi.delta_pairing(), kp.k());
        prop_assert_eq!(hecke_params(&kp).q(), CircleElement::new(kp.k()));
    }

    #[test]
    fn text_forms_round_trip(chi in character(), kp in kappa()) {
        prop_assert_eq!(chi.to_string().parse::<RationalCharacter>().unwrap(), chi);
        prop_assert_eq!(kp.to_string().parse::<KappaParams>().unwrap(), kp);
    }

    #[test]
    fn hecke_and_cherednik_agree_with_root_hyperplanes(
        chi in prop::collection::vec(fraction(), 1..=4).prop_map(|v| RationalCharacter::from_fractions(&v)),
        n in 1usize..=4,
    ) {
        let roots = generate_rn(n, chi.ell())
            .iter()
            .all(|a| !is_integral_pairing(&chi, a).unwrap());
        let kp = chi_to_kappa(&chi);
        let h = hecke_params(&kp);
        prop_assert_eq!(ariki_product_nonzero(&h.q(), &h.u, n), roots);
        prop_assert_eq!(cherednik_semisimple(&kp, n) && !kp.k().is_integer(), roots);
    }
}
