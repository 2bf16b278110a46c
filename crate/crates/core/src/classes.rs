//! Classes of pattern-avoiding involutions and their descriptions on the
//! labelled-path side of the bijection.
//!
//! A [`ClassDescriptor`] names a base set (all, fixed-point-free or
//! centrosymmetric involutions) and a set of forbidden patterns.
//! [`path_predicate`] returns, when one is known, a structural test on
//! `(M, λ)` that holds exactly when `phi_inverse(M, λ)` belongs to the class;
//! [`verify_characterization`] checks that claim exhaustively.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bijection::phi_inverse;
use crate::error::{Error, Result};
use crate::generate::{gen_labelled_paths, PathConstraints};
use crate::path::{LabelledMotzkinPath, MotzkinPath, Step};
use crate::perm::{Involution, Pattern, PatternSet};

/// The ambient set of involutions a class is carved out of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Base {
    /// `I_n`
    All,
    /// `DI_n`, involutions without fixed points.
    FixedPointFree,
    /// `CI_n`, involutions fixed by reverse-complement.
    Centrosymmetric,
}

impl Base {
    pub fn tag(self) -> &'static str {
        match self {
            Base::All => "I",
            Base::FixedPointFree => "DI",
            Base::Centrosymmetric => "CI",
        }
    }

    pub fn contains(self, tau: &Involution) -> bool {
        match self {
            Base::All => true,
            Base::FixedPointFree => tau.is_fixed_point_free(),
            Base::Centrosymmetric => tau.is_centrosymmetric(),
        }
    }

    /// Shape constraint satisfied by the image of every member of the base.
    pub fn path_constraints(self) -> PathConstraints {
        match self {
            Base::All => PathConstraints::NONE,
            Base::FixedPointFree => PathConstraints::DYCK,
            Base::Centrosymmetric => PathConstraints::SYMMETRIC,
        }
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "I" => Ok(Base::All),
            "DI" => Ok(Base::FixedPointFree),
            "CI" => Ok(Base::Centrosymmetric),
            other => Err(Error::InvalidDescriptor(other.to_string())),
        }
    }
}

/// A base set together with forbidden patterns, written `I:4321,132`,
/// `DI:3412,123`, `CI:` and so on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassDescriptor {
    pub base: Base,
    pub avoid: PatternSet,
}

impl ClassDescriptor {
    pub fn new(base: Base, avoid: PatternSet) -> Self {
        Self { base, avoid }
    }

    pub fn contains(&self, tau: &Involution) -> bool {
        self.base.contains(tau) && tau.avoids_all(&self.avoid)
    }

    /// Canonical key of the pattern set as seen by involutions: each pattern
    /// is replaced by the smaller of itself and its inverse, and patterns
    /// that contain another member of the set are dropped.
    pub fn reduced_patterns(&self) -> Vec<Pattern> {
        let mut patterns: Vec<Pattern> = self
            .avoid
            .iter()
            .map(|p| std::cmp::min(p.clone(), p.inverse()))
            .collect();
        patterns.sort();
        patterns.dedup();
        let keep: Vec<Pattern> = patterns
            .iter()
            .filter(|p| !patterns.iter().any(|q| q != *p && p.contains(q)))
            .cloned()
            .collect();
        keep
    }

    fn reduced_key(&self) -> Vec<String> {
        self.reduced_patterns()
            .iter()
            .map(ToString::to_string)
            .collect()
    }
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.base.tag(), self.avoid)
    }
}

impl FromStr for ClassDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidDescriptor(s.to_string());
        let (base, patterns) = s.split_once(':').ok_or_else(invalid)?;
        let base = base.parse().map_err(|_| invalid())?;
        let avoid = PatternSet::parse_list(patterns).map_err(|_| invalid())?;
        Ok(Self { base, avoid })
    }
}

/// Path-side descriptions of the characterized avoidance classes of `I_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Characterization {
    /// No patterns: every labelled path.
    Any,
    /// `4321`: unitary labelling.
    Unitary,
    /// `3412`: maximal labelling.
    Maximal,
    /// `321`: unitary, every horizontal step at height 0.
    Avoid321,
    /// `312` (equivalently `231`): maximal, components `UᵃHDᵃ` or `UᵃDᵃ`.
    Avoid312,
    /// `4321, 132`: unitary, shape `UᵃHᵇDᵃHᶜ`.
    Avoid4321And132,
    /// `4321, 213`: unitary, shape `HᶜUᵃHᵇDᵃ`.
    Avoid4321And213,
    /// `4321, 312`: components among `H`, `UHD`, `UD`.
    Avoid4321And312,
    /// `3412, 132`: maximal, no factor `HU` or `DU`.
    Avoid3412And132,
    /// `3412, 213`: maximal, no factor `DH` or `DU`.
    Avoid3412And213,
    /// `3412, 321`: components among `H`, `UD`.
    Avoid3412And321,
    /// `3412, 123`: maximal, shape in the nested two-tent family.
    Avoid3412And123,
    /// `3412, 4321`: components among `H`, `UHᵃD`.
    Avoid3412And4321,
}

impl Characterization {
    /// Looks up the characterization for a reduced pattern key.
    fn for_key(key: &[String]) -> Option<Self> {
        let key: Vec<&str> = key.iter().map(String::as_str).collect();
        Some(match key.as_slice() {
            [] => Characterization::Any,
            ["4321"] => Characterization::Unitary,
            ["3412"] => Characterization::Maximal,
            ["321"] => Characterization::Avoid321,
            ["231"] => Characterization::Avoid312,
            ["132", "4321"] => Characterization::Avoid4321And132,
            ["213", "4321"] => Characterization::Avoid4321And213,
            ["231", "4321"] => Characterization::Avoid4321And312,
            ["132", "3412"] => Characterization::Avoid3412And132,
            ["213", "3412"] => Characterization::Avoid3412And213,
            ["321", "3412"] => Characterization::Avoid3412And321,
            ["123", "3412"] => Characterization::Avoid3412And123,
            ["3412", "4321"] => Characterization::Avoid3412And4321,
            _ => return None,
        })
    }

    /// Whether every path accepted by `self` carries the unitary or the
    /// maximal labelling.
    pub fn forces_canonical_labelling(self) -> bool {
        self != Characterization::Any
    }

    pub fn holds(self, lp: &LabelledMotzkinPath) -> bool {
        let m = lp.path();
        match self {
            Characterization::Any => true,
            Characterization::Unitary => lp.is_unitary(),
            Characterization::Maximal => lp.is_maximal(),
            Characterization::Avoid321 => lp.is_unitary() && horizontals_on_axis(m),
            Characterization::Avoid312 => {
                lp.is_maximal() && m.irreducible_components().iter().all(is_tent)
            }
            Characterization::Avoid4321And132 => lp.is_unitary() && is_uhdh(m.steps()),
            Characterization::Avoid4321And213 => lp.is_unitary() && is_uhdh(m.reflect().steps()),
            Characterization::Avoid4321And312 => components_among(m, &["H", "UHD", "UD"]),
            Characterization::Avoid3412And132 => {
                lp.is_maximal()
                    && !has_factor(m, &[[Step::Horizontal, Step::Up], [Step::Down, Step::Up]])
            }
            Characterization::Avoid3412And213 => {
                lp.is_maximal()
                    && !has_factor(m, &[[Step::Down, Step::Horizontal], [Step::Down, Step::Up]])
            }
            Characterization::Avoid3412And321 => components_among(m, &["H", "UD"]),
            Characterization::Avoid3412And123 => lp.is_maximal() && in_two_tent_family(m),
            Characterization::Avoid3412And4321 => m.irreducible_components().iter().all(|c| {
                let s = c.steps();
                s == [Step::Horizontal]
                    || (s.len() >= 2
                        && s[0] == Step::Up
                        && s[s.len() - 1] == Step::Down
                        && s[1..s.len() - 1].iter().all(|&x| x == Step::Horizontal))
            }),
        }
    }
}

fn horizontals_on_axis(m: &MotzkinPath) -> bool {
    m.steps()
        .iter()
        .zip(m.step_heights())
        .all(|(&s, h)| s != Step::Horizontal || h == 0)
}

/// `UᵃHDᵃ` or `UᵃDᵃ` with `a ≥ 0`, excluding the empty path.
fn is_tent(m: &MotzkinPath) -> bool {
    let s = m.steps();
    let a = s.iter().take_while(|&&x| x == Step::Up).count();
    let rest = &s[a..];
    let downs = |t: &[Step]| t.len() == a && t.iter().all(|&x| x == Step::Down);
    match rest.first() {
        Some(Step::Horizontal) => downs(&rest[1..]),
        Some(Step::Down) => a > 0 && downs(rest),
        _ => false,
    }
}

/// `UᵃHᵇDᵃHᶜ`.
fn is_uhdh(s: &[Step]) -> bool {
    let a = s.iter().take_while(|&&x| x == Step::Up).count();
    let b = s[a..]
        .iter()
        .take_while(|&&x| x == Step::Horizontal)
        .count();
    let d = s[a + b..].iter().take_while(|&&x| x == Step::Down).count();
    d == a && s[a + b + d..].iter().all(|&x| x == Step::Horizontal)
}

fn components_among(m: &MotzkinPath, allowed: &[&str]) -> bool {
    m.irreducible_components()
        .iter()
        .all(|c| allowed.contains(&c.to_string().as_str()))
}

fn has_factor(m: &MotzkinPath, factors: &[[Step; 2]]) -> bool {
    m.steps().windows(2).any(|w| factors.iter().any(|f| w == f))
}

// Empty, a single H, two tents side by side, or U·member·D.
fn in_two_tent_family(m: &MotzkinPath) -> bool {
    let mut steps = m.steps();
    loop {
        let path = MotzkinPath::from_steps_unchecked(steps.to_vec());
        let components = path.irreducible_components();
        match components.len() {
            0 => return true,
            1 if steps == [Step::Horizontal] => return true,
            1 => steps = &steps[1..steps.len() - 1],
            2 => return components.iter().all(is_tent),
            _ => return false,
        }
    }
}

/// A path-side membership test for one class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassPredicate {
    pub base: Base,
    pub characterization: Characterization,
}

impl ClassPredicate {
    pub fn holds(&self, lp: &LabelledMotzkinPath) -> bool {
        let shape_ok = match self.base {
            Base::All => true,
            Base::FixedPointFree => lp.path().is_dyck(),
            Base::Centrosymmetric => lp.path().is_symmetric(),
        };
        shape_ok && self.characterization.holds(lp)
    }
}

/// The structural test equivalent to membership in `class`, or `None` when
/// no characterization is known.
///
/// Centrosymmetry is only read off the shape when the labelling is forced to
/// be unitary or maximal, so `CI` with no patterns has no predicate.
pub fn path_predicate(class: &ClassDescriptor) -> Option<ClassPredicate> {
    let characterization = Characterization::for_key(&class.reduced_key())?;
    if class.base == Base::Centrosymmetric && !characterization.forces_canonical_labelling() {
        return None;
    }
    Some(ClassPredicate {
        base: class.base,
        characterization,
    })
}

pub fn is_centrosymmetric(tau: &Involution) -> bool {
    tau.is_centrosymmetric()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub path: String,
    pub involution: String,
    pub predicate: bool,
    pub member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub class: String,
    pub checked: u64,
    pub mismatches: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Compares the path predicate of `class` against brute-force membership of
/// `phi_inverse(M, λ)` over every labelled path of length `n`.
pub fn verify_characterization(class: &ClassDescriptor, n: usize) -> Result<VerificationReport> {
    let predicate =
        path_predicate(class).ok_or_else(|| Error::UnsupportedClass(class.to_string()))?;
    let mut report = VerificationReport {
        n,
        class: class.to_string(),
        checked: 0,
        mismatches: 0,
        first_counterexample: None,
    };
    for lp in gen_labelled_paths(n, PathConstraints::NONE) {
        let tau = phi_inverse(&lp)?;
        let by_path = predicate.holds(&lp);
        let member = class.contains(&tau);
        report.checked += 1;
        if by_path != member {
            report.mismatches += 1;
            if report.first_counterexample.is_none() {
                report.first_counterexample = Some(Counterexample {
                    path: lp.to_string(),
                    involution: tau.to_string(),
                    predicate: by_path,
                    member,
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::phi;

    fn class(s: &str) -> ClassDescriptor {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LabelledMotzkinPath {
        s.parse().unwrap()
    }

    #[test]
    fn descriptor_text_form() {
        let c = class("I:4321,132");
        assert_eq!(c.base, Base::All);
        assert_eq!(c.avoid.len(), 2);
        assert_eq!(c.to_string(), "I:4321,132");
        assert_eq!(class("DI:").to_string(), "DI:");
        assert_eq!(class("CI:3412,4321").base, Base::Centrosymmetric);
        assert!("X:123".parse::<ClassDescriptor>().is_err());
        assert!("I4321".parse::<ClassDescriptor>().is_err());
        assert!("I:4421".parse::<ClassDescriptor>().is_err());
    }

    #[test]
    fn reduction_of_pattern_sets() {
        let key = |s: &str| class(s).reduced_key();
        assert_eq!(key("I:4321,321"), ["321"]);
        assert_eq!(key("I:3412,312"), ["231"]);
        assert_eq!(key("I:4321,312"), key("I:4321,231"));
        assert_eq!(key("I:132,4321,132"), ["132", "4321"]);
    }

    #[test]
    fn predicate_examples() {
        let p4321 = path_predicate(&class("I:4321")).unwrap();
        let unitary_example = phi(&"4 2 9 1 10 11 7 12 3 5 6 8".parse().unwrap());
        assert!(p4321.holds(&unitary_example));
        assert!(!p4321.holds(&lp("UUD2D1")));

        let p = path_predicate(&class("I:3412,321")).unwrap();
        assert!(p.holds(&lp("UD1HUD1")));
        assert!(!p.holds(&lp("UUD2D1")));

        let p321 = path_predicate(&class("I:321")).unwrap();
        let contains_321 = phi(&"3 5 1 4 2 6 8 7".parse().unwrap());
        assert!(!p321.holds(&contains_321));

        assert!(path_predicate(&class("I:4321,123")).is_none());
        assert!(path_predicate(&class("I:2143")).is_none());
        assert!(path_predicate(&class("CI:")).is_none());
        assert!(path_predicate(&class("DI:")).is_some());
    }

    #[test]
    fn shape_helpers() {
        let m = |s: &str| s.parse::<MotzkinPath>().unwrap();
        assert!(is_tent(&m("H")) && is_tent(&m("UUHDD")) && is_tent(&m("UD")));
        assert!(!is_tent(&m("UDUD")) && !is_tent(&m("UHHD")));
        assert!(is_uhdh(m("UUHHDDHH").steps()) && is_uhdh(m("HHH").steps()));
        assert!(!is_uhdh(m("UUDHHD").steps()));
        assert!(in_two_tent_family(&m("UUHHDD")));
        assert!(in_two_tent_family(&m("UDUHD")));
        assert!(!in_two_tent_family(&m("UHHDUD")));
        assert!(!in_two_tent_family(&m("HHH")));
    }

    #[test]
    fn centrosymmetry() {
        assert!(!is_centrosymmetric(
            &"6 2 10 4 8 1 7 5 9 3".parse().unwrap()
        ));
        assert!(is_centrosymmetric(&Involution::identity(7)));
        assert!(is_centrosymmetric(&"2 1".parse().unwrap()));
    }

    #[test]
    fn small_verifications() {
        let r = verify_characterization(&class("I:4321"), 8).unwrap();
        assert_eq!((r.checked, r.mismatches), (764, 0));
        let r = verify_characterization(&class("I:3412"), 0).unwrap();
        assert_eq!((r.checked, r.mismatches), (1, 0));
        assert!(verify_characterization(&class("I:312"), 9)
            .unwrap()
            .passed());
        assert!(matches!(
            verify_characterization(&class("I:4321,123"), 3),
            Err(Error::UnsupportedClass(_))
        ));
    }
}
