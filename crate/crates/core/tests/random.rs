//! Randomized checks at sizes beyond exhaustive reach.

use involution_paths::{
    check_rc_reflection, phi, phi_inverse, Involution, LabelledMotzkinPath, Labelling, MotzkinPath,
    Permutation, Step,
};
use proptest::prelude::*;

/// An involution built from a shuffled list of points: consecutive pairs
/// become 2-cycles while `pairs` lasts, the rest stay fixed.
fn involution() -> impl Strategy<Value = Involution> {
    (0usize..60)
        .prop_flat_map(|n| {
            (
                Just(n),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                0..=n / 2,
            )
        })
        .prop_map(|(n, order, pairs)| {
            let mut values: Vec<u32> = (1..=n as u32).collect();
            for k in 0..pairs {
                let (a, b) = (order[2 * k], order[2 * k + 1]);
                values[a] = b as u32 + 1;
                values[b] = a as u32 + 1;
            }
            Involution::new(Permutation::new(values).unwrap()).unwrap()
        })
}

/// A Motzkin path from an arbitrary step word: steps that would go below the
/// axis are dropped and the path is closed with down steps.
fn motzkin_path() -> impl Strategy<Value = MotzkinPath> {
    prop::collection::vec(0u8..3, 0..60).prop_map(|word| {
        let mut steps = Vec::new();
        let mut level = 0usize;
        for w in word {
            match w {
                0 => {
                    steps.push(Step::Up);
                    level += 1;
                }
                1 => steps.push(Step::Horizontal),
                _ if level > 0 => {
                    steps.push(Step::Down);
                    level -= 1;
                }
                _ => {}
            }
        }
        steps.extend(std::iter::repeat_n(Step::Down, level));
        MotzkinPath::new(steps).unwrap()
    })
}

fn labelled_path() -> impl Strategy<Value = LabelledMotzkinPath> {
    (motzkin_path(), prop::collection::vec(any::<u32>(), 30)).prop_map(|(m, seeds)| {
        let heights = m.step_heights();
        let labels = m
            .steps()
            .iter()
            .zip(&heights)
            .filter(|(s, _)| **s == Step::Down)
            .zip(seeds.iter().cycle())
            .map(|((_, &h), &seed)| seed % h as u32 + 1)
            .collect();
        LabelledMotzkinPath::new(m, labels).unwrap()
    })
}

proptest! {
    #[test]
    fn phi_round_trip(tau in involution()) {
        let lp = phi(&tau);
        prop_assert_eq!(phi_inverse(&lp).unwrap(), tau.clone());
        prop_assert_eq!(lp.len(), tau.len());
        prop_assert_eq!(lp.path().count(Step::Horizontal), tau.fixed_points().len());
    }

    #[test]
    fn phi_inverse_round_trip(lp in labelled_path()) {
        prop_assert_eq!(phi(&phi_inverse(&lp).unwrap()), lp);
    }

    #[test]
    fn rc_reflection(tau in involution()) {
        prop_assert!(check_rc_reflection(&tau));
    }

    #[test]
    fn text_round_trip(lp in labelled_path(), tau in involution()) {
        prop_assert_eq!(lp.to_string().parse::<LabelledMotzkinPath>().unwrap(), lp.clone());
        prop_assert_eq!(tau.to_string().parse::<Involution>().unwrap(), tau);
    }

    #[test]
    fn canonical_labellings_avoid_their_pattern(m in motzkin_path()) {
        let unitary = phi_inverse(&m.relabel(Labelling::Unitary)).unwrap();
        let maximal = phi_inverse(&m.relabel(Labelling::Maximal)).unwrap();
        prop_assert!(!unitary.contains(&"4321".parse().unwrap()));
        prop_assert!(!maximal.contains(&"3412".parse().unwrap()));
    }

    #[test]
    fn reflection_is_an_involution(m in motzkin_path()) {
        prop_assert_eq!(m.reflect().reflect(), m.clone());
        prop_assert_eq!(m.reflect().height(), m.height());
    }
}
