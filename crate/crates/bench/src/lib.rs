//! Shared inputs for the benchmarks.

use involution_paths::{
    gen_involutions, gen_labelled_paths, Base, Involution, LabelledMotzkinPath, PathConstraints,
    Permutation,
};

/// All involutions of length `n`.
pub fn involutions(n: usize) -> Vec<Involution> {
    gen_involutions(n, Base::All).collect()
}

/// All labelled Motzkin paths of length `n`.
pub fn labelled_paths(n: usize) -> Vec<LabelledMotzkinPath> {
    gen_labelled_paths(n, PathConstraints::NONE).collect()
}

/// The reversal `n n-1 ... 1`, the involution with the tallest image path.
pub fn reversal(n: usize) -> Involution {
    let values = (1..=n as u32).rev().collect();
    Permutation::new(values)
        .and_then(Involution::new)
        .expect("reversal is an involution")
}
