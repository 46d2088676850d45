mod common;

use common::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn basis_conversions_round_trip(f in sym(), b in basis()) {
        basis_round_trip(f, b)?;
    }

    #[test]
    fn perp_is_adjoint_to_multiplication(((g, h), f) in sym_pair().prop_flat_map(|(g, h)| {
        let n = g.degrees().first().copied().unwrap_or(0) + h.degrees().first().copied().unwrap_or(0);
        (Just((g, h)), sym_of_degree(n))
    })) {
        perp_adjoint(f, g, h)?;
    }

    #[test]
    fn plethysm_is_linear((f, g) in sym_pair(), a in alphabet()) {
        pleth_linear(f, g, a)?;
    }

    #[test]
    fn plethysm_is_multiplicative((f, g) in sym_pair(), a in alphabet()) {
        pleth_multiplicative(f, g, a)?;
    }

    #[test]
    fn power_sums_on_alphabet_nodes(k in 1u32..=5, a in alphabet(), b in alphabet()) {
        power_sum_rules(k, a, b)?;
    }

    #[test]
    fn power_sums_compose(k in 1u32..=3, j in 1u32..=2, f in sym_of_degree(2)) {
        power_sum_composition(k, j, f)?;
    }

    #[test]
    fn minus_eps_z_is_omega(f in sym()) {
        minus_eps_is_omega(f)?;
    }

    #[test]
    fn e_skewing_generating_identity(f in sym()) {
        skew_generating_identity(f)?;
    }

    #[test]
    fn q_minus_one_is_alternating_skew_sum(f in sym()) {
        q_minus_one(f)?;
    }

    #[test]
    fn polynomial_ring_axioms(a in mpoly(), b in mpoly(), c in mpoly(), x in -3i64..=3, y in -3i64..=3) {
        mpoly_ring(a, b, c, x, y)?;
    }
}

#[test]
fn tensor_plethysm_on_power_sums() {
    for k in 1..=2 {
        for j in 1..=3 {
            for l in 1..=2 {
                tensor_adams(k, j, l).unwrap();
            }
        }
    }
}

#[test]
fn elementary_basis_is_schur_positive() {
    schur_positivity_of_e().unwrap();
}
