use msf4::cli::{parse_problem, render_problem};
use msf4::f4::adjoin_field_equations;
use msf4::f4::buchberger::buchberger_reference;
use msf4::matrix::{rref, BitRow};
use msf4::{solve, Algorithm, Monomial, MonomialOrder, Polynomial, Ring, VariantConfig};
use proptest::prelude::*;

const N: usize = 4;

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Grevlex), Just(MonomialOrder::Lex)]
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..4, N).prop_map(|e| Monomial::from_exponents(&e))
}

fn poly(order: MonomialOrder) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(monomial(), 0..8).prop_map(move |ts| Polynomial::from_terms(ts, order))
}

fn ring(order: MonomialOrder) -> Ring {
    Ring::with_vars(N, order).unwrap()
}

fn quadratic(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(prop::collection::vec(0u16..2, n), 1..6)
        .prop_map(move |ts| {
            let ts = ts
                .into_iter()
                .map(|e| {
                    // keep degree at most 2
                    let mut seen = 0;
                    let e: Vec<u16> = e
                        .into_iter()
                        .map(|x| {
                            if x == 1 && seen < 2 {
                                seen += 1;
                                1
                            } else {
                                0
                            }
                        })
                        .collect();
                    Monomial::from_exponents(&e)
                })
                .collect();
            Polynomial::from_terms(ts, MonomialOrder::Grevlex)
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn order_is_admissible(o in order(), a in monomial(), b in monomial(), c in monomial()) {
        let one = Monomial::one(N);
        prop_assert_ne!(o.compare(&a, &one), std::cmp::Ordering::Less);
        prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
        prop_assert_eq!(o.compare(&a, &b), o.compare(&(&a * &c), &(&b * &c)));
    }

    #[test]
    fn addition_is_a_group(o in order(), p in poly(MonomialOrder::Grevlex), q in poly(MonomialOrder::Grevlex), s in poly(MonomialOrder::Grevlex)) {
        let r = ring(o);
        let (p, q, s) = (r.reorder(&p), r.reorder(&q), r.reorder(&s));
        prop_assert_eq!(r.add(&p, &q), r.add(&q, &p));
        prop_assert_eq!(r.add(&r.add(&p, &q), &s), r.add(&p, &r.add(&q, &s)));
        prop_assert!(r.add(&p, &p).is_zero());
        prop_assert!(r.add(&p, &q).is_sorted_under(o));
    }

    #[test]
    fn field_normal_form(p in poly(MonomialOrder::Grevlex), q in poly(MonomialOrder::Grevlex)) {
        let r = ring(MonomialOrder::Grevlex);
        let np = r.normal_form_field(&p);
        prop_assert_eq!(r.normal_form_field(&np), np.clone());
        prop_assert!(np.terms().iter().all(Monomial::is_squarefree));
        prop_assert_eq!(
            r.normal_form_field(&r.add(&p, &q)),
            r.add(&np, &r.normal_form_field(&q))
        );
        for x in 0..1u64 << N {
            prop_assert_eq!(p.evaluate(x), np.evaluate(x));
        }
    }

    #[test]
    fn top_reduce_leaves_irreducible_head(p in poly(MonomialOrder::Grevlex), g in prop::collection::vec(poly(MonomialOrder::Grevlex), 1..4)) {
        let r = ring(MonomialOrder::Grevlex);
        let g: Vec<Polynomial> = g.into_iter().filter(|f| !f.is_zero()).collect();
        let t = r.top_reduce(&p, &g);
        if let Some(h) = t.leading() {
            prop_assert!(!g.iter().any(|f| f.leading().unwrap().divides(h)));
        }
    }

    #[test]
    fn render_parse_round_trip(o in order(), sys in prop::collection::vec(poly(MonomialOrder::Grevlex), 1..5)) {
        let r = ring(o);
        let sys: Vec<Polynomial> = sys.iter().map(|p| r.reorder(p)).filter(|p| !p.is_zero()).collect();
        prop_assume!(!sys.is_empty());
        let text = render_problem(&r, &sys);
        let back = parse_problem(&text).unwrap();
        prop_assert_eq!(back.ring.order(), o);
        prop_assert_eq!(back.system, sys);
    }

    #[test]
    fn rref_is_reduced_and_spans(rows in prop::collection::vec(prop::collection::vec(any::<bool>(), 70), 1..12)) {
        let ncols = 70;
        let e = rref(rows.iter().map(|r| BitRow::from_bools(r)).collect(), ncols);
        let pivots: Vec<usize> = e.iter().map(|r| r.leading().unwrap()).collect();
        prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
        for (k, &c) in pivots.iter().enumerate() {
            for (j, r) in e.iter().enumerate() {
                prop_assert_eq!(r.get(c), j == k);
            }
        }
        // every input row is the sum of the echelon rows at its pivots
        for row in &rows {
            let mut acc = vec![false; ncols];
            for (k, &c) in pivots.iter().enumerate() {
                if row[c] {
                    for (a, col) in acc.iter_mut().zip(0..ncols) {
                        *a ^= e[k].get(col);
                    }
                }
            }
            prop_assert_eq!(&acc, row);
        }
    }

    #[test]
    fn fe_f4_matches_buchberger(sys in prop::collection::vec(quadratic(4), 1..5)) {
        let r = Ring::with_vars(4, MonomialOrder::Grevlex).unwrap();
        let reference = buchberger_reference(&r, &adjoin_field_equations(&r, &sys)).unwrap();
        for alg in [Algorithm::FeF4, Algorithm::SF4] {
            let out = solve(&r, &sys, &VariantConfig::new(alg)).unwrap();
            prop_assert_eq!(&out.basis, &reference);
        }
    }
}
