mod common;

use bilogic::search::{entails_with, EntailmentQuery, SearchOptions};
use bilogic::syntax::{desugar, parse, pretty_print, Mode, ParseOptions};
use bilogic::values::{FourValue, GridValue, Logic};
use common::FormulaGen;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn grid_value(den: u32) -> impl Strategy<Value = GridValue> {
    (0..=den, 0..=den).prop_map(move |(p, n)| GridValue::grid(p, n, den).unwrap())
}

fn four_value() -> impl Strategy<Value = FourValue> {
    (0usize..4).prop_map(|i| FourValue::all()[i])
}

fn logic() -> impl Strategy<Value = Logic> {
    prop_oneof![Just(Logic::Bd4), Just(Logic::Lbd)]
}

fn refine(v: GridValue, den: u32) -> GridValue {
    GridValue::new(v.pos.refine(den).unwrap(), v.neg.refine(den).unwrap())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printing_then_parsing_gives_the_same_tree(seed: u64, logic in logic(), depth in 0usize..=6) {
        let mut gen = FormulaGen::new(logic);
        gen.free_vars = vec!["w".into()];
        let f = gen.formula(&mut rng(seed), depth);
        let text = pretty_print(&f);
        let back = parse(&text, &ParseOptions::new(Mode::new(logic, true)));
        prop_assert_eq!(back.as_ref().ok(), Some(&f), "{}", text);
    }

    #[test]
    fn expansion_is_primitive_idempotent_and_keeps_free_variables(seed: u64, logic in logic()) {
        let mut gen = FormulaGen::new(logic);
        gen.free_vars = vec!["w".into()];
        let f = gen.formula(&mut rng(seed), 5);
        let mode = Mode::new(logic, true);
        let once = desugar(&f, mode).unwrap();
        prop_assert!(once.is_primitive());
        prop_assert_eq!(&desugar(&once, mode).unwrap(), &once);
        prop_assert_eq!(once.free_vars(), f.free_vars());
    }

    #[test]
    fn negation_is_an_involution_and_de_morgan_holds(a in grid_value(12), b in grid_value(12)) {
        prop_assert_eq!(a.bd_neg().bd_neg(), a);
        prop_assert_eq!(a.weak_and(b).bd_neg(), a.bd_neg().weak_or(b.bd_neg()));
        prop_assert_eq!(a.strong_and(b).bd_neg(), a.bd_neg().strong_or(b.bd_neg()));
        prop_assert_eq!(a.weak_and(b), b.weak_and(a));
        prop_assert_eq!(a.strong_or(b), b.strong_or(a));
    }

    #[test]
    fn truth_order_monotonicity(a in grid_value(8), a2 in grid_value(8), b in grid_value(8)) {
        prop_assume!(a.leq_t(a2));
        prop_assert!(a.weak_and(b).leq_t(a2.weak_and(b)));
        prop_assert!(a.weak_or(b).leq_t(a2.weak_or(b)));
        prop_assert!(a.strong_and(b).leq_t(a2.strong_and(b)));
        prop_assert!(a.strong_or(b).leq_t(a2.strong_or(b)));
        prop_assert!(a2.bd_neg().leq_t(a.bd_neg()));
        prop_assert!(b.implies(a).leq_t(b.implies(a2)));
        prop_assert!(a2.implies(b).leq_t(a.implies(b)));
    }

    #[test]
    fn closed_forms_match_their_expansions(a in grid_value(20), b in grid_value(20)) {
        prop_assert_eq!(a.implies(b), a.implies_expanded(b));
        prop_assert_eq!(a.circ(), a.circ_expanded());
        prop_assert_eq!(a.bivalent_neg(), a.bivalent_neg_expanded());
    }

    #[test]
    fn refining_the_grid_commutes_with_every_connective(a in grid_value(6), b in grid_value(6), k in 2u32..4) {
        let den = 6 * k;
        let (ra, rb) = (refine(a, den), refine(b, den));
        prop_assert_eq!(refine(a.strong_and(b), den), ra.strong_and(rb));
        prop_assert_eq!(refine(a.weak_or(b), den), ra.weak_or(rb));
        prop_assert_eq!(refine(a.implies(b), den), ra.implies(rb));
        prop_assert_eq!(refine(a.circ(), den), ra.circ());
        prop_assert_eq!(refine(a.baaz_delta(), den), ra.baaz_delta());
        prop_assert_eq!(a.is_designated(), ra.is_designated());
    }

    #[test]
    fn corners_of_the_unit_grid_behave_like_four_values(a in four_value(), b in four_value()) {
        let g = |v: FourValue| v.to_grid(1);
        prop_assert_eq!(g(a).strong_and(g(b)), g(a.weak_and(b)));
        prop_assert_eq!(g(a).implies(g(b)), g(a.implies(b)));
        prop_assert_eq!(g(a).circ(), g(a.circ()));
        prop_assert_eq!(g(a).baaz_delta(), g(a.bd_delta()));
        prop_assert_eq!(g(a).bivalent_neg(), g(a.bivalent_neg()));
    }

    #[test]
    fn floating_point_agrees_with_the_grid(a in grid_value(10), b in grid_value(10)) {
        let f = |v: GridValue| v.to_f64_pair();
        let close = |x: bilogic::values::FuzzyValue, y: bilogic::values::FuzzyValue| {
            (x.pos - y.pos).abs() < 1e-9 && (x.neg - y.neg).abs() < 1e-9
        };
        prop_assert!(close(f(a.strong_or(b)), f(a).strong_or(f(b))));
        prop_assert!(close(f(a.implies(b)), f(a).implies(f(b))));
        prop_assert!(close(f(a.circ()), f(a).circ()));
        prop_assert_eq!(a.is_designated(), f(a).is_designated());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn adding_a_premise_never_creates_a_countermodel(seed: u64) {
        let mut r = rng(seed);
        let gen = FormulaGen::new(Logic::Bd4);
        let premise = gen.formula(&mut r, 3);
        let extra = gen.formula(&mut r, 2);
        let conclusion = gen.formula(&mut r, 3);
        let opts = SearchOptions::default();
        let small = entails_with(&EntailmentQuery::new(vec![premise.clone()], conclusion.clone()).max_size(2), &opts).unwrap();
        let big = entails_with(&EntailmentQuery::new(vec![premise, extra], conclusion).max_size(2), &opts).unwrap();
        if small.holds() {
            prop_assert!(big.holds());
        }
        if !big.holds() {
            prop_assert!(!small.holds());
        }
    }

    #[test]
    fn worker_count_does_not_change_the_verdict(seed: u64, workers in 2usize..6, fuzzy: bool) {
        let mut r = rng(seed);
        let logic = if fuzzy { Logic::Lbd } else { Logic::Bd4 };
        let mut gen = FormulaGen::new(logic);
        if fuzzy {
            gen.predicates.truncate(1);
        }
        let premise = gen.formula(&mut r, 3);
        let conclusion = gen.formula(&mut r, 3);
        let q = EntailmentQuery::new(vec![premise], conclusion).logic(logic).max_size(2).grid(2);
        let one = entails_with(&q, &SearchOptions::default()).unwrap();
        let many = entails_with(&q, &SearchOptions::default().workers(workers)).unwrap();
        prop_assert_eq!(one.outcome, many.outcome);
        prop_assert_eq!(one.models_examined, many.models_examined);
        prop_assert_eq!(one.witness, many.witness);
    }
}
