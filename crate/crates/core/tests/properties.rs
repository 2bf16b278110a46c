//! Exhaustive invariants over small sizes.

use std::collections::BTreeSet;

use involution_paths::{
    check_rc_reflection, gen_involutions, gen_labelled_paths, gen_paths, phi, phi_inverse, Base,
    Involution, LabelledMotzkinPath, Labelling, MotzkinPath, PathConstraints, Pattern, Permutation,
    Sequence, Step,
};

fn all_permutations(n: usize) -> Vec<Permutation> {
    fn extend(prefix: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::new(prefix.clone()).unwrap());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u32 + 1);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn patterns_of(k: usize) -> Vec<Pattern> {
    all_permutations(k).into_iter().map(Pattern::new).collect()
}

/// Containment by trying every k-subset of positions.
fn naive_contains(sigma: &Permutation, pattern: &Pattern) -> bool {
    let k = pattern.len();
    let n = sigma.len();
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<u32> = idx.iter().map(|&i| sigma.values()[i]).collect();
        if Permutation::standardize(&sub) == *pattern.as_permutation() {
            return true;
        }
        let Some(j) = (0..k).rev().find(|&j| idx[j] < n - k + j) else {
            return false;
        };
        idx[j] += 1;
        for t in j + 1..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

fn involution_count(n: usize) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for k in 1..n as u64 {
        (prev, cur) = (cur, cur + k * prev);
    }
    cur
}

#[test]
fn pattern_search_matches_subset_oracle() {
    let mut patterns = patterns_of(3);
    patterns.extend(patterns_of(4));
    for n in 0..=6 {
        for sigma in all_permutations(n) {
            for p in &patterns {
                assert_eq!(
                    sigma.contains(p),
                    naive_contains(&sigma, p),
                    "{sigma} / {p}"
                );
            }
        }
    }
}

#[test]
fn containment_respects_rc_and_inverse() {
    let mut patterns = patterns_of(3);
    for p in ["4321", "3412", "2143", "1234"] {
        patterns.push(p.parse().unwrap());
    }
    for n in 0..=8 {
        for tau in gen_involutions(n, Base::All) {
            let rc = tau.as_permutation().reverse_complement();
            let inv = tau.as_permutation().inverse();
            for p in &patterns {
                let c = tau.contains(p);
                assert_eq!(c, rc.contains(&p.reverse_complement()), "{tau} / {p}");
                assert_eq!(c, inv.contains(&p.inverse()), "{tau} / {p}");
            }
        }
    }
}

#[test]
fn connected_components_reassemble() {
    for n in 0..=7 {
        for sigma in all_permutations(n) {
            let comps = sigma.connected_components();
            assert!(comps.iter().all(Permutation::is_connected), "{sigma}");
            let joined = comps
                .iter()
                .fold(Permutation::identity(0), |acc, c| acc.direct_sum(c));
            assert_eq!(joined, sigma);
        }
    }
}

#[test]
fn involution_cycle_statistics() {
    for n in 0..=10 {
        for tau in gen_involutions(n, Base::All) {
            let exc = tau.excedances().len();
            assert_eq!(exc, tau.deficiencies().len());
            assert_eq!(2 * exc + tau.fixed_points().len(), n);
            assert!(tau.reverse_complement().is_involution());
            assert!(tau.as_permutation().inverse() == *tau.as_permutation());
        }
    }
}

#[test]
fn generator_cardinalities() {
    for n in 0..=12 {
        assert_eq!(
            gen_involutions(n, Base::All).count() as u64,
            involution_count(n),
            "n = {n}"
        );
    }
    for n in 0..=14 {
        let count = gen_paths(n, PathConstraints::NONE).count() as u64;
        assert_eq!(count, Sequence::Motzkin.value(n as u64).unwrap(), "n = {n}");
    }
    for h in 0..=7 {
        let count = gen_paths(2 * h, PathConstraints::DYCK).count() as u64;
        assert_eq!(count, Sequence::Catalan.value(h as u64).unwrap(), "h = {h}");
    }
    for n in 0..=10 {
        assert_eq!(
            gen_involutions(n, Base::All).count(),
            gen_labelled_paths(n, PathConstraints::NONE).count(),
            "n = {n}"
        );
    }
}

#[test]
fn motzkin_recurrence_matches_path_count() {
    // Oracle recurrence written out here independently of the library.
    let mut m = vec![1u64];
    for k in 0..12 {
        let mut next = m[k];
        for j in 0..k {
            next += m[j] * m[k - 1 - j];
        }
        m.push(next);
    }
    for (n, &expected) in m.iter().enumerate() {
        assert_eq!(gen_paths(n, PathConstraints::NONE).count() as u64, expected);
    }
}

#[test]
fn generators_are_strictly_increasing() {
    for n in 0..=9 {
        for base in [Base::All, Base::FixedPointFree, Base::Centrosymmetric] {
            let v: Vec<Involution> = gen_involutions(n, base).collect();
            assert!(v.windows(2).all(|w| w[0] < w[1]), "n = {n}, {base:?}");
        }
        for c in [
            PathConstraints::NONE,
            PathConstraints::DYCK,
            PathConstraints::SYMMETRIC,
        ] {
            let v: Vec<MotzkinPath> = gen_paths(n, c).collect();
            assert!(v.windows(2).all(|w| w[0] < w[1]), "n = {n}, {c:?}");
        }
        let labelled: Vec<LabelledMotzkinPath> =
            gen_labelled_paths(n, PathConstraints::NONE).collect();
        let distinct: BTreeSet<_> = labelled.iter().collect();
        assert_eq!(distinct.len(), labelled.len());
    }
}

#[test]
fn labelled_paths_encode_and_parse() {
    for n in 0..=10 {
        for lp in gen_labelled_paths(n, PathConstraints::NONE) {
            let text = lp.to_string();
            assert_eq!(text.parse::<LabelledMotzkinPath>().unwrap(), lp);
        }
    }
}

#[test]
fn path_structure_invariants() {
    for n in 0..=10 {
        for m in gen_paths(n, PathConstraints::NONE) {
            assert_eq!(m.count(Step::Up), m.count(Step::Down));
            assert!(m.height() <= n / 2);
            let comps = m.irreducible_components();
            assert!(comps.iter().all(MotzkinPath::is_irreducible));
            let joined = comps
                .iter()
                .fold(MotzkinPath::default(), |acc, c| acc.concat(c));
            assert_eq!(joined, m);
            assert_eq!(m.reflect().reflect(), m);
            assert_eq!(m.is_symmetric(), m.reflect() == m);
            let unitary = m.relabel(Labelling::Unitary);
            let maximal = m.relabel(Labelling::Maximal);
            // Constructors re-check the label bound.
            LabelledMotzkinPath::new(m.clone(), unitary.labels().to_vec()).unwrap();
            LabelledMotzkinPath::new(m.clone(), maximal.labels().to_vec()).unwrap();
            assert_eq!(unitary == maximal, m.height() <= 1, "{m}");
        }
        for lp in gen_labelled_paths(n, PathConstraints::NONE) {
            let comps = lp.irreducible_components();
            let joined = comps
                .iter()
                .fold(LabelledMotzkinPath::default(), |acc, c| acc.concat(c));
            assert_eq!(joined, lp);
        }
    }
}

#[test]
fn bijection_round_trips() {
    for n in 0..=10 {
        for tau in gen_involutions(n, Base::All) {
            assert_eq!(phi_inverse(&phi(&tau)).unwrap(), tau);
        }
        for lp in gen_labelled_paths(n, PathConstraints::NONE) {
            assert_eq!(phi(&phi_inverse(&lp).unwrap()), lp);
        }
    }
}

#[test]
fn step_kinds_follow_the_involution() {
    for n in 0..=9 {
        for tau in gen_involutions(n, Base::All) {
            let lp = phi(&tau);
            assert_eq!(lp.path().count(Step::Horizontal), tau.fixed_points().len());
            assert_eq!(lp.path().count(Step::Up), tau.excedances().len());
            for (i, step) in lp.steps().iter().enumerate() {
                let expected = match tau.at(i + 1).cmp(&(i + 1)) {
                    std::cmp::Ordering::Equal => Step::Horizontal,
                    std::cmp::Ordering::Greater => Step::Up,
                    std::cmp::Ordering::Less => Step::Down,
                };
                assert_eq!(*step, expected, "{tau} at {}", i + 1);
            }
        }
    }
}

#[test]
fn connectivity_matches_irreducibility() {
    for n in 0..=8 {
        for tau in gen_involutions(n, Base::All) {
            let lp = phi(&tau);
            assert_eq!(tau.is_connected(), lp.path().is_irreducible(), "{tau}");
            let comps = tau.connected_components();
            let images: Vec<LabelledMotzkinPath> = comps
                .into_iter()
                .map(|c| phi(&Involution::new(c).unwrap()))
                .collect();
            assert_eq!(images, lp.irreducible_components(), "{tau}");
        }
    }
}

/// Pairs each down step with the most recent (`newest`) or the earliest
/// unmatched up step.
fn matching(m: &MotzkinPath, newest: bool) -> Involution {
    let mut values: Vec<u32> = (1..=m.len() as u32).collect();
    let mut open: Vec<usize> = Vec::new();
    for (i, step) in m.steps().iter().enumerate() {
        match step {
            Step::Up => open.push(i),
            Step::Horizontal => {}
            Step::Down => {
                let j = if newest {
                    open.pop().unwrap()
                } else {
                    open.remove(0)
                };
                values[i] = j as u32 + 1;
                values[j] = i as u32 + 1;
            }
        }
    }
    Involution::new(Permutation::new(values).unwrap()).unwrap()
}

#[test]
fn canonical_labellings_are_stack_and_queue_matchings() {
    for n in 0..=10 {
        for m in gen_paths(n, PathConstraints::NONE) {
            assert_eq!(
                phi_inverse(&m.relabel(Labelling::Maximal)).unwrap(),
                matching(&m, true)
            );
            assert_eq!(
                phi_inverse(&m.relabel(Labelling::Unitary)).unwrap(),
                matching(&m, false)
            );
        }
    }
}

#[test]
fn reverse_complement_reflects_the_shape() {
    for n in 0..=8 {
        for tau in gen_involutions(n, Base::All) {
            assert!(check_rc_reflection(&tau), "{tau}");
            let reflected = phi(&tau.reverse_complement()).into_path();
            assert_eq!(reflected, phi(&tau).path().reflect());
        }
    }
}

#[test]
fn symmetric_shapes_with_canonical_labels_are_centrosymmetric() {
    for n in 0..=12 {
        for m in gen_paths(n, PathConstraints::SYMMETRIC) {
            for labelling in [Labelling::Unitary, Labelling::Maximal] {
                assert!(
                    phi_inverse(&m.relabel(labelling))
                        .unwrap()
                        .is_centrosymmetric(),
                    "{m}"
                );
            }
        }
    }
}

#[test]
fn symmetric_shape_alone_does_not_force_centrosymmetry() {
    let tau: Involution = "6 2 10 4 8 1 7 5 9 3".parse().unwrap();
    let lp = phi(&tau);
    assert!(lp.path().is_symmetric());
    assert!(!tau.is_centrosymmetric());
    assert!(!lp.is_unitary() && !lp.is_maximal());
}
