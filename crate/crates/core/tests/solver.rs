use msf4::bench::{brute_force_variety, gen_hfe, random_system};
use msf4::f4::adjoin_field_equations;
use msf4::f4::buchberger::buchberger_reference;
use msf4::verify::verify_outcome;
use msf4::{solve, Algorithm, MonomialOrder, RenewMode, VariantConfig};

#[test]
fn renew_modes_and_history_caps_agree() {
    for n in 5..=10 {
        for seed in 0..3 {
            let inst = gen_hfe(17, n, seed).unwrap();
            let base = solve(&inst.ring, &inst.system, &VariantConfig::new(Algorithm::MsF4)).unwrap();
            for (mode, cap) in [
                (RenewMode::Rebuild, None),
                (RenewMode::Recompute, Some(1)),
                (RenewMode::Rebuild, Some(2)),
            ] {
                let mut cfg = VariantConfig::new(Algorithm::MsF4);
                cfg.renew_mode = mode;
                cfg.history_cap = cap;
                let out = solve(&inst.ring, &inst.system, &cfg).unwrap();
                assert_eq!(
                    out.full_basis(&inst.ring),
                    base.full_basis(&inst.ring),
                    "n={n} seed={seed} {mode:?} {cap:?}"
                );
                assert!(verify_outcome(&inst.ring, &inst.system, &out, true).unwrap().passed());
            }
        }
    }
}

#[test]
fn hfe_witness_is_a_solution() {
    for n in 5..=12 {
        let inst = gen_hfe(17, n, 7).unwrap();
        let out = solve(&inst.ring, &inst.system, &VariantConfig::new(Algorithm::MsF4)).unwrap();
        assert!(!out.inconsistent);
        for g in out.full_basis(&inst.ring) {
            assert!(!g.evaluate_at(&inst.witness), "n={n}: {}", inst.ring.render(&g));
        }
    }
}

#[test]
fn lex_order_matches_reference() {
    for seed in 0..20 {
        let (ring, system, _) = random_system(5, 5, seed % 2 == 0, seed).unwrap();
        let ring = ring.with_order(MonomialOrder::Lex);
        let system: Vec<_> = system.iter().map(|p| ring.reorder(p)).collect();
        let reference = buchberger_reference(&ring, &adjoin_field_equations(&ring, &system)).unwrap();
        for alg in [Algorithm::FeF4, Algorithm::SF4] {
            let out = solve(&ring, &system, &VariantConfig::new(alg)).unwrap();
            assert_eq!(out.basis, reference, "seed {seed} {}", alg.name());
        }
        let ms = solve(&ring, &system, &VariantConfig::new(Algorithm::MsF4)).unwrap();
        assert!(
            verify_outcome(&ring, &system, &ms, true).unwrap().passed(),
            "seed {seed}"
        );
    }
}

#[test]
fn solved_values_lie_on_every_solution() {
    for seed in 0..30 {
        let (ring, system, _) = random_system(8, 8, true, 300 + seed).unwrap();
        let out = solve(&ring, &system, &VariantConfig::new(Algorithm::MsF4)).unwrap();
        let variety = brute_force_variety(&system, &ring).unwrap();
        for (var, value) in out.assignment.iter() {
            assert!(variety.iter().all(|x| (x >> var & 1 == 1) == value), "seed {seed}");
        }
        for e in out.assignment.events() {
            assert!(e.round <= out.stats.round + 1);
        }
    }
}

#[test]
fn plain_f4_without_field_equations() {
    let inst = gen_hfe(17, 5, 0).unwrap();
    let out = solve(&inst.ring, &inst.system, &VariantConfig::new(Algorithm::PlainF4)).unwrap();
    let reference = buchberger_reference(&inst.ring, &inst.system).unwrap();
    assert_eq!(out.basis, reference);
    let mut cfg = VariantConfig::new(Algorithm::PlainF4);
    cfg.adjoin_field_eqs = true;
    let with = solve(&inst.ring, &inst.system, &cfg).unwrap();
    let fe = solve(&inst.ring, &inst.system, &VariantConfig::new(Algorithm::FeF4)).unwrap();
    assert_eq!(with.basis, fe.basis);
}

#[test]
fn s_variants_refuse_missing_field_equations() {
    let inst = gen_hfe(17, 5, 0).unwrap();
    for alg in [Algorithm::SF4, Algorithm::MsF4] {
        let mut cfg = VariantConfig::new(alg);
        cfg.adjoin_field_eqs = false;
        assert!(solve(&inst.ring, &inst.system, &cfg).is_err());
    }
}
