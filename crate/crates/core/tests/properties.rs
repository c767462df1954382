use proptest::prelude::*;
use rgroup_core::{
    arthur_r_group, arthur_r_group_of_induced, centralizer, component_group, jordan_parity_ok,
    knapp_stein_r_group, lambda_tensor, parameter_of_sigma, presented_centralizer,
    random_instance, tensor_type, unitary_jordan_condition, validate_parameter, verify_theorem,
    weyl_quotient, witness, CuspidalSymbol, DualityType, FuzzBounds, GroupFamily, OracleOptions,
    Parameter, Sign, Summand,
};

fn family() -> impl Strategy<Value = GroupFamily> {
    prop::sample::select(GroupFamily::CLASSICAL.to_vec())
}

fn self_dual_type() -> impl Strategy<Value = DualityType> {
    prop::sample::select(vec![DualityType::Orthogonal, DualityType::Symplectic])
}

fn sign() -> impl Strategy<Value = Sign> {
    prop::sample::select(vec![Sign::Plus, Sign::Minus])
}

/// Raw multisets over a small symbol pool; non-self-dual summands always
/// come with their dual at equal multiplicity.
fn raw_parameter() -> impl Strategy<Value = Vec<(Summand, u32)>> {
    let entry = (0u8..6, 1u32..4, 1u32..4, 1u32..4);
    prop::collection::vec(entry, 0..6).prop_map(|entries| {
        let mut raw = Vec::new();
        for (kind, d, a, m) in entries {
            let rho = match kind {
                0 | 1 => CuspidalSymbol::self_dual(format!("o{d}"), d, DualityType::Orthogonal),
                2 => CuspidalSymbol::self_dual(format!("s{d}"), 2 * d, DualityType::Symplectic),
                _ => CuspidalSymbol::not_self_dual(format!("c{d}"), d, format!("c{d}~")),
            }
            .unwrap();
            let s = Summand::new(rho, a).unwrap();
            if !s.is_self_dual() {
                raw.push((s.dual(), m));
            }
            raw.push((s, m));
        }
        raw
    })
}

proptest! {
    #[test]
    fn tensor_type_keeps_type_exactly_for_odd_a(t in self_dual_type(), a in 1u32..40) {
        prop_assert_eq!(tensor_type(t, a) == t, a % 2 == 1);
        prop_assert_eq!(tensor_type(DualityType::NotSelfDual, a), DualityType::NotSelfDual);
    }

    #[test]
    fn canonicalize_is_idempotent_and_keeps_dimension(raw in raw_parameter()) {
        let dim: u32 = raw.iter().map(|(s, m)| s.dim() * m).sum();
        let p = Parameter::canonicalize(raw.clone()).unwrap();
        prop_assert_eq!(p.total_dim(), dim);
        prop_assert_eq!(Parameter::canonicalize(p.expand()).unwrap(), p.clone());
        let mut reversed = raw;
        reversed.reverse();
        prop_assert_eq!(Parameter::canonicalize(reversed).unwrap(), p);
    }

    #[test]
    fn rank_routes_agree(raw in raw_parameter(), fam in family()) {
        let p = Parameter::canonicalize(raw).unwrap();
        let dim = p.total_dim();
        let group = match fam {
            GroupFamily::Symplectic if dim % 2 == 1 => rgroup_core::GroupSpec::sp(dim / 2),
            GroupFamily::OddOrthogonal if dim % 2 == 0 => rgroup_core::GroupSpec::so_odd(dim / 2),
            GroupFamily::EvenOrthogonal if dim % 2 == 0 => rgroup_core::GroupSpec::o_even(dim / 2),
            _ => return Ok(()),
        };
        prop_assume!(validate_parameter(&p, group).is_valid());
        let closed = arthur_r_group(&p, group).unwrap();
        let resolved = centralizer(&p, group).unwrap();
        let presented = presented_centralizer(&p, group).unwrap();
        // R is a quotient of π₀(S_ψ); O(odd) factors add to π₀ only.
        prop_assert!(component_group(&presented).rank >= closed.rank);
        prop_assert_eq!(resolved.closed_form_r_rank(), closed.rank);
        let opts = OracleOptions::default();
        if let Ok(r) = weyl_quotient(&presented, opts) {
            prop_assert_eq!(r, closed);
            prop_assert_eq!(weyl_quotient(&resolved, opts).unwrap(), closed);
        }
    }

    #[test]
    fn lambda_tensor_is_identity_for_odd_a_and_flip_for_even(l in sign(), a in 1u32..50) {
        prop_assert_eq!(lambda_tensor(lambda_tensor(l, a), a), l);
        prop_assert_eq!(lambda_tensor(l, a) == l, a % 2 == 1);
    }

    #[test]
    fn unitary_condition_picks_one_parity(l in sign(), n in 1u32..40, a in 1u32..20) {
        prop_assert_ne!(unitary_jordan_condition(l, a, n), unitary_jordan_condition(l, a + 1, n));
    }

    #[test]
    fn theorem_holds_on_fuzzed_instances(seed in any::<u64>(), fam in family()) {
        let pi = random_instance(seed, &FuzzBounds::with_family(fam)).unwrap();
        let r = verify_theorem(&pi, Some(OracleOptions::default())).unwrap();
        prop_assert!(r.all_agree(), "{}: {:?}", pi, r);
    }

    #[test]
    fn witness_rows_are_consistent(seed in any::<u64>(), fam in family()) {
        let pi = random_instance(seed, &FuzzBounds::with_family(fam)).unwrap();
        for row in witness(&pi).unwrap() {
            prop_assert_eq!(row.counted, row.same_type == Some(true) && !row.in_jordan);
        }
        for b in pi.sigma.blocks() {
            prop_assert!(jordan_parity_ok(&b.rho, b.a, pi.sigma.group()).unwrap());
        }
        let phi = parameter_of_sigma(&pi.sigma).unwrap();
        prop_assert!(phi.entries().iter().all(|e| e.multiplicity == 1));
        prop_assert!(validate_parameter(&phi, pi.sigma.group()).is_valid());
    }

    #[test]
    fn multiplicities_do_not_change_ranks(
        seed in any::<u64>(),
        fam in family(),
        m in 1u32..6,
    ) {
        let pi = random_instance(seed, &FuzzBounds::with_family(fam)).unwrap();
        let ks = knapp_stein_r_group(&pi).unwrap();
        let arthur = arthur_r_group_of_induced(&pi).unwrap();
        for i in 0..pi.deltas.len() {
            let mutated = pi.with_multiplicity(i, m);
            prop_assert_eq!(knapp_stein_r_group(&mutated).unwrap(), ks);
            prop_assert_eq!(arthur_r_group_of_induced(&mutated).unwrap(), arthur);
        }
    }

    #[test]
    fn non_self_dual_deltas_change_nothing(
        seed in any::<u64>(),
        fam in family(),
        d in 1u32..4,
        a in 1u32..5,
        m in 1u32..4,
    ) {
        let pi = random_instance(seed, &FuzzBounds::with_family(fam)).unwrap();
        let before = verify_theorem(&pi, None).unwrap();
        let rho = CuspidalSymbol::not_self_dual("extra", d, "extra~").unwrap();
        let mut bigger = pi.clone();
        bigger.deltas.push((Summand::new(rho, a).unwrap(), m));
        let after = verify_theorem(&bigger, None).unwrap();
        prop_assert_eq!((after.ks_rank, after.arthur_rank), (before.ks_rank, before.arthur_rank));
    }
}
