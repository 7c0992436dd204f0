use granulab::calculi::{Kind, Negation, TConorm, TNorm};
use proptest::prelude::*;

fn unit() -> impl Strategy<Value = f64> {
    prop_oneof![
        1 => Just(0.0),
        1 => Just(1.0),
        8 => 0.0..=1.0f64,
    ]
}

fn any_tnorm() -> impl Strategy<Value = TNorm> {
    prop_oneof![
        (0usize..6).prop_map(|i| TNorm::LADDER[i]),
        (0.05..50.0f64).prop_map(|q| TNorm::yager(q).unwrap()),
        (0.0..=1.0f64).prop_map(|a| TNorm::dubois(a).unwrap()),
        (0.0..50.0f64).prop_map(|g| TNorm::hamacher(g).unwrap()),
        prop_oneof![-20.0..-0.01f64, 0.01..20.0f64].prop_map(|p| TNorm::schweizer(p).unwrap()),
        prop_oneof![1e-4..0.99f64, 1.01..1e4f64].prop_map(|t| TNorm::frank(t).unwrap()),
        (-1.0..50.0f64).prop_map(|l| TNorm::sugeno(l).unwrap()),
    ]
}

fn drastic(a: f64, b: f64) -> f64 {
    if a == 1.0 {
        b
    } else if b == 1.0 {
        a
    } else {
        0.0
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn tnorm_axioms(t in any_tnorm(), a in unit(), b in unit(), c in unit()) {
        let v = t.eval(a, b);
        prop_assert!((0.0..=1.0).contains(&v));
        prop_assert_eq!(v, t.eval(b, a));
        prop_assert_eq!(t.eval(a, 1.0), a);
        prop_assert_eq!(t.eval(1.0, a), a);
        prop_assert_eq!(t.eval(0.0, a), 0.0);
        let (lo, hi) = if b <= c { (b, c) } else { (c, b) };
        prop_assert!(t.eval(a, lo) <= t.eval(a, hi) + 1e-12, "{t} not monotone at {a}, {lo}, {hi}");
        let left = t.eval(t.eval(a, b), c);
        let right = t.eval(a, t.eval(b, c));
        prop_assert!((left - right).abs() <= 1e-9, "{t}: {left} vs {right}");
    }

    #[test]
    fn tconorm_axioms(t in any_tnorm(), a in unit(), b in unit()) {
        let s = t.dual(Negation::Standard);
        let v = s.eval(a, b);
        prop_assert!((0.0..=1.0).contains(&v));
        prop_assert_eq!(v, s.eval(b, a));
        prop_assert_eq!(s.eval(a, 0.0), a);
        prop_assert_eq!(s.eval(a, 1.0), 1.0);
    }

    #[test]
    fn bounded_by_drastic_and_min(t in any_tnorm(), a in unit(), b in unit()) {
        let v = t.eval(a, b);
        prop_assert!(drastic(a, b) <= v && v <= a.min(b) + 1e-15, "{t}({a}, {b}) = {v}");
        let s = t.dual(Negation::Standard).eval(a, b);
        let drastic_sum = if a == 0.0 { b } else if b == 0.0 { a } else { 1.0 };
        prop_assert!(a.max(b) - 1e-15 <= s && s <= drastic_sum);
    }

    #[test]
    fn family_conorm_is_the_dual(t in any_tnorm(), a in unit(), b in unit()) {
        let s = t.dual(Negation::Standard);
        let generated = 1.0 - t.eval(1.0 - a, 1.0 - b);
        prop_assert!((generated - s.eval(a, b)).abs() <= 1e-9, "{s} at ({a}, {b})");
    }

    #[test]
    fn generated_duals_under_other_negations(t in any_tnorm(), lambda in -0.9..10.0f64, a in unit(), b in unit()) {
        let n = Negation::sugeno(lambda).unwrap();
        let s = t.dual(n);
        let generated = n.eval(t.eval(n.eval(a), n.eval(b)));
        prop_assert!((generated - s.eval(a, b)).abs() <= 1e-9);
        prop_assert_eq!(s.eval(a, 0.0), a);
    }

    #[test]
    fn negations_are_involutive(x in unit(), lambda in -0.99..100.0f64) {
        for n in [Negation::Standard, Negation::sugeno(lambda).unwrap()] {
            prop_assert!((n.eval(n.eval(x)) - x).abs() <= 1e-9, "{n} at {x}");
        }
    }

    /// Where `x^w` falls below one ulp of 1 the intermediate `N(x)` rounds to 1,
    /// so the round trip is only checked where it is representable.
    #[test]
    fn yager_negation_is_involutive(x in prop_oneof![Just(0.0), Just(1.0), 0.01..=1.0f64], w in 0.25..4.0f64) {
        let n = Negation::yager(w).unwrap();
        prop_assert!((n.eval(n.eval(x)) - x).abs() <= 1e-9, "{n} at {x}");
    }

    #[test]
    fn negations_decrease(x in 0.0..1.0f64, y in 0.0..1.0f64, lambda in -0.99..100.0f64) {
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        prop_assume!(hi - lo > 1e-9);
        let n = Negation::sugeno(lambda).unwrap();
        prop_assert!(n.eval(lo) > n.eval(hi));
    }

    #[test]
    fn selector_strings_round_trip(t in any_tnorm()) {
        let back: TNorm = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
        let s = t.dual(Negation::Standard);
        let back: TConorm = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }
}

#[test]
fn schweizer_family_sweeps_from_t1_to_t3() {
    let ps = [-1.0, -0.8, -0.5, -0.3, 1e-9, 0.5, 1.0, 2.0, 50.0];
    let pts: Vec<f64> = (0..=20).map(|i| i as f64 / 20.0).collect();
    for w in ps.windows(2) {
        let lo = TNorm::schweizer(w[0]).unwrap();
        let hi = TNorm::schweizer(w[1]).unwrap();
        for &a in &pts {
            for &b in &pts {
                assert!(
                    lo.eval(a, b) <= hi.eval(a, b) + 1e-12,
                    "{lo} > {hi} at ({a}, {b})"
                );
            }
        }
    }
}

#[test]
fn infinite_schweizer_parameters() {
    let neg = TNorm::schweizer(f64::NEG_INFINITY).unwrap();
    let pos = TNorm::schweizer(f64::INFINITY).unwrap();
    assert_eq!(neg.eval(0.9, 0.9), 0.0);
    assert_eq!(neg.eval(0.9, 1.0), 0.9);
    assert_eq!(pos.eval(0.3, 0.8), 0.3);
    assert_eq!(pos.kind(), Kind::Schweizer { p: f64::INFINITY });
}

#[test]
fn zadeh_bounds_example() {
    // Conjunction of 0.3 and 0.8 ranges from T1 to T3.
    assert!((TNorm::BOUNDED.eval(0.3, 0.8) - 0.1).abs() < 1e-15);
    assert_eq!(TNorm::MIN.eval(0.3, 0.8), 0.3);
}
