//! The correspondence between involutions of length `n` and labelled Motzkin
//! paths of length `n`.
//!
//! Reading `τ` left to right, a fixed point gives `H`, an excedance gives `U`
//! and a deficiency `i` gives a `D` labelled with the rank of `τ(i)` among the
//! excedances that are still unmatched. The inverse replays the same scan,
//! keeping the open up steps in increasing order.

use crate::error::{Error, Result};
use crate::path::{LabelledMotzkinPath, MotzkinPath, Step};
use crate::perm::{Involution, Permutation};

/// Image of `tau` as a labelled Motzkin path.
pub fn phi(tau: &Involution) -> LabelledMotzkinPath {
    let n = tau.len();
    let mut open: Vec<usize> = tau.excedances();
    let mut steps = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(open.len());
    for i in 1..=n {
        let j = tau.at(i);
        if j == i {
            steps.push(Step::Horizontal);
        } else if j > i {
            steps.push(Step::Up);
        } else {
            let k = open
                .iter()
                .position(|&e| e == j)
                .expect("partner is an open excedance");
            open.remove(k);
            steps.push(Step::Down);
            labels.push(k as u32 + 1);
        }
    }
    LabelledMotzkinPath::from_parts_unchecked(MotzkinPath::from_steps_unchecked(steps), labels)
}

/// Inverse of [`phi`].
pub fn phi_inverse(path: &LabelledMotzkinPath) -> Result<Involution> {
    let n = path.len();
    let mut values = vec![0u32; n];
    let mut open: Vec<usize> = Vec::new();
    let mut labels = path.labels().iter();
    for (idx, &step) in path.steps().iter().enumerate() {
        let i = idx + 1;
        match step {
            Step::Horizontal => values[idx] = i as u32,
            Step::Up => open.push(i),
            Step::Down => {
                let label = *labels.next().ok_or(Error::MissingLabel { position: i })?;
                let k = label as usize;
                if k == 0 || k > open.len() {
                    return Err(Error::LabelOutOfRange {
                        position: i,
                        label: label.into(),
                        height: open.len(),
                    });
                }
                let j = open.remove(k - 1);
                values[idx] = j as u32;
                values[j - 1] = i as u32;
            }
        }
    }
    if !open.is_empty() {
        return Err(Error::NonzeroFinalHeight { height: open.len() });
    }
    Ok(Involution::from_permutation_unchecked(
        Permutation::from_vec_unchecked(values),
    ))
}

/// Whether the step shape of `phi(τ_rc)` is the mirror image of the step
/// shape of `phi(τ)`.
pub fn check_rc_reflection(tau: &Involution) -> bool {
    let direct = phi(tau).into_path().reflect();
    let of_rc = phi(&tau.reverse_complement()).into_path();
    direct == of_rc
}
