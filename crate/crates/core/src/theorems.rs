//! Registry of checkable statements about involution classes, each run
//! exhaustively for every size up to a bound.

use serde::Serialize;

use crate::bijection::{check_rc_reflection, phi, phi_inverse};
use crate::census::check_guard;
use crate::classes::{verify_characterization, Base, ClassDescriptor};
use crate::error::{Error, Result};
use crate::generate::{gen_involutions, gen_labelled_paths, gen_paths, PathConstraints};
use crate::path::Labelling;
use crate::perm::Involution;
use crate::sequences::Sequence;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    /// Path predicate agrees with brute-force membership.
    Characterization(&'static str),
    /// The listed classes have identical members.
    SameMembers(&'static [&'static str]),
    /// The class is empty from the given size on.
    EmptyFrom(&'static str, usize),
    /// Centrosymmetric 4321/3412 counts equal the Motzkin-prefix count, which
    /// itself matches enumerated prefixes.
    MotzkinPrefixCount,
    /// Symmetric shapes with unitary or maximal labels map to
    /// centrosymmetric involutions.
    SymmetricCanonicalLabelling,
    /// Shape of `phi(τ_rc)` mirrors the shape of `phi(τ)`.
    RcReflection,
    /// `phi` and `phi_inverse` are mutually inverse.
    RoundTrip,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem {
    pub id: &'static str,
    pub statement: &'static str,
    pub check: Check,
}

macro_rules! theorem {
    ($id:expr, $statement:expr, $check:expr) => {
        Theorem {
            id: $id,
            statement: $statement,
            check: $check,
        }
    };
}

/// Every registered statement, in a fixed order.
pub fn registry() -> Vec<Theorem> {
    use Check::*;
    vec![
        theorem!(
            "thm-4321-unitary",
            "I(4321) <-> unitary labelling",
            Characterization("I:4321")
        ),
        theorem!(
            "thm-3412-maximal",
            "I(3412) <-> maximal labelling",
            Characterization("I:3412")
        ),
        theorem!(
            "prop-321",
            "I(321) <-> unitary, horizontal steps at height 0",
            Characterization("I:321")
        ),
        theorem!(
            "prop-312",
            "I(312) <-> maximal, components U^aHD^a or U^aD^a",
            Characterization("I:312")
        ),
        theorem!(
            "thm-4321-132",
            "I(4321,132) <-> unitary, shape U^aH^bD^aH^c",
            Characterization("I:4321,132")
        ),
        theorem!(
            "thm-4321-213",
            "I(4321,213) <-> unitary, shape H^cU^aH^bD^a",
            Characterization("I:4321,213")
        ),
        theorem!(
            "thm-4321-321",
            "I(4321,321) <-> unitary, horizontal steps at height 0",
            Characterization("I:4321,321")
        ),
        theorem!(
            "thm-4321-312",
            "I(4321,312) <-> components H, UHD, UD",
            Characterization("I:4321,312")
        ),
        theorem!(
            "thm-3412-132",
            "I(3412,132) <-> maximal, no HU or DU",
            Characterization("I:3412,132")
        ),
        theorem!(
            "thm-3412-213",
            "I(3412,213) <-> maximal, no DH or DU",
            Characterization("I:3412,213")
        ),
        theorem!(
            "thm-3412-321",
            "I(3412,321) <-> components H, UD",
            Characterization("I:3412,321")
        ),
        theorem!(
            "thm-3412-312",
            "I(3412,312) <-> maximal, components U^aHD^a or U^aD^a",
            Characterization("I:3412,312")
        ),
        theorem!(
            "thm-3412-123",
            "I(3412,123) <-> maximal, nested two-tent family",
            Characterization("I:3412,123")
        ),
        theorem!(
            "thm-3412-4321",
            "I(3412,4321) <-> components H, UH^aD",
            Characterization("I:3412,4321")
        ),
        theorem!(
            "di-4321",
            "DI(4321) <-> unitary Dyck paths",
            Characterization("DI:4321")
        ),
        theorem!(
            "di-3412",
            "DI(3412) <-> maximal Dyck paths",
            Characterization("DI:3412")
        ),
        theorem!(
            "ci-4321",
            "CI(4321) <-> unitary symmetric paths",
            Characterization("CI:4321")
        ),
        theorem!(
            "ci-3412",
            "CI(3412) <-> maximal symmetric paths",
            Characterization("CI:3412")
        ),
        theorem!(
            "i-4321-312-eq-231",
            "I(4321,312) = I(4321,231)",
            SameMembers(&["I:4321,312", "I:4321,231"])
        ),
        theorem!(
            "i-3412-312-eq-312",
            "I(3412,312) = I(3412,231) = I(312)",
            SameMembers(&["I:3412,312", "I:3412,231", "I:312"])
        ),
        theorem!(
            "di-321-eq-4321",
            "DI(321) = DI(4321)",
            SameMembers(&["DI:321", "DI:4321"])
        ),
        theorem!(
            "ci-4321-321-eq-321",
            "CI(4321,321) = CI(321)",
            SameMembers(&["CI:4321,321", "CI:321"])
        ),
        theorem!(
            "ci-3412-312-eq-312",
            "CI(3412,312) = CI(312)",
            SameMembers(&["CI:3412,312", "CI:312"])
        ),
        theorem!(
            "i-4321-123-empty",
            "I_n(4321,123) is empty for n > 6",
            EmptyFrom("I:4321,123", 7)
        ),
        theorem!(
            "eq1-prefix",
            "|CI_n(4321)| = |CI_n(3412)| = Motzkin prefixes of length floor(n/2)",
            MotzkinPrefixCount
        ),
        theorem!(
            "ci-symmetric-labelling",
            "symmetric shape + unitary/maximal labelling -> centrosymmetric",
            SymmetricCanonicalLabelling
        ),
        theorem!(
            "rc-reflection",
            "phi(tau_rc) is the mirror image of phi(tau)",
            RcReflection
        ),
        theorem!(
            "phi-roundtrip",
            "phi_inverse . phi = id and phi . phi_inverse = id",
            RoundTrip
        ),
    ]
}

/// Looks up a registered statement. `class:<descriptor>` names the
/// characterization check for an arbitrary descriptor.
pub fn lookup(id: &str) -> Option<Theorem> {
    registry().into_iter().find(|t| t.id == id)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub n: usize,
    pub checked: u64,
    pub mismatches: u64,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub statement: String,
    pub n_max: usize,
    pub rows: Vec<TheoremRow>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.mismatches == 0)
    }

    pub fn mismatches(&self) -> u64 {
        self.rows.iter().map(|r| r.mismatches).sum()
    }
}

fn class(s: &str) -> ClassDescriptor {
    s.parse().expect("registry descriptors are well-formed")
}

impl Check {
    /// The base set whose enumeration dominates the cost.
    fn guard_base(&self) -> Base {
        match self {
            Check::SameMembers(classes) => class(classes[0]).base,
            Check::MotzkinPrefixCount | Check::SymmetricCanonicalLabelling => Base::Centrosymmetric,
            _ => Base::All,
        }
    }

    fn run_at(&self, n: usize) -> Result<TheoremRow> {
        let mut row = TheoremRow {
            n,
            checked: 0,
            mismatches: 0,
            detail: None,
        };
        let fail = |row: &mut TheoremRow, detail: String| {
            row.mismatches += 1;
            row.detail.get_or_insert(detail);
        };
        match self {
            Check::Characterization(c) => {
                let report = verify_characterization(&class(c), n)?;
                row.checked = report.checked;
                row.mismatches = report.mismatches;
                row.detail = report.first_counterexample.map(|ce| {
                    format!(
                        "{} -> {} (predicate {}, member {})",
                        ce.path, ce.involution, ce.predicate, ce.member
                    )
                });
            }
            Check::SameMembers(classes) => {
                let members = |c: &str| -> Vec<Involution> {
                    let c = class(c);
                    gen_involutions(n, c.base)
                        .filter(|t| c.contains(t))
                        .collect()
                };
                let first = members(classes[0]);
                row.checked = first.len() as u64;
                for other in &classes[1..] {
                    let rest = members(other);
                    if rest != first {
                        fail(
                            &mut row,
                            format!(
                                "{} has {} members, {} has {}",
                                classes[0],
                                first.len(),
                                other,
                                rest.len()
                            ),
                        );
                    }
                }
            }
            Check::EmptyFrom(c, from) => {
                if n >= *from {
                    let c = class(c);
                    row.checked = 1;
                    if let Some(tau) = gen_involutions(n, c.base).find(|t| c.contains(t)) {
                        fail(&mut row, format!("member {tau}"));
                    }
                }
            }
            Check::MotzkinPrefixCount => {
                let h = n / 2;
                let expected = Sequence::MotzkinPrefix.value(h as u64)?;
                let prefixes = count_motzkin_prefixes(h);
                row.checked = 1;
                if prefixes != expected {
                    fail(
                        &mut row,
                        format!("prefix({h}) = {expected}, enumerated {prefixes}"),
                    );
                }
                for c in ["CI:4321", "CI:3412"] {
                    let c = class(c);
                    let count = gen_involutions(n, c.base).filter(|t| c.contains(t)).count() as u64;
                    row.checked += 1;
                    if count != expected {
                        fail(&mut row, format!("|{c}| = {count}, expected {expected}"));
                    }
                }
            }
            Check::SymmetricCanonicalLabelling => {
                for shape in gen_paths(n, PathConstraints::SYMMETRIC) {
                    for labelling in [Labelling::Unitary, Labelling::Maximal] {
                        let lp = shape.relabel(labelling);
                        let tau = phi_inverse(&lp)?;
                        row.checked += 1;
                        if !tau.is_centrosymmetric() {
                            fail(&mut row, format!("{lp} -> {tau}"));
                        }
                    }
                }
            }
            Check::RcReflection => {
                for tau in gen_involutions(n, Base::All) {
                    row.checked += 1;
                    if !check_rc_reflection(&tau) {
                        fail(&mut row, tau.to_string());
                    }
                }
            }
            Check::RoundTrip => {
                for tau in gen_involutions(n, Base::All) {
                    row.checked += 1;
                    if phi_inverse(&phi(&tau))? != tau {
                        fail(&mut row, tau.to_string());
                    }
                }
                for lp in gen_labelled_paths(n, PathConstraints::NONE) {
                    row.checked += 1;
                    if phi(&phi_inverse(&lp)?) != lp {
                        fail(&mut row, lp.to_string());
                    }
                }
            }
        }
        Ok(row)
    }
}

/// Number of lattice paths of length `len` over `U`, `H`, `D` that never go
/// below the axis, ending at any height.
pub fn count_motzkin_prefixes(len: usize) -> u64 {
    fn walk(remaining: usize, level: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = walk(remaining - 1, level + 1) + walk(remaining - 1, level);
        if level > 0 {
            total += walk(remaining - 1, level - 1);
        }
        total
    }
    walk(len, 0)
}

impl Theorem {
    pub fn run(&self, n_max: usize, force: bool) -> Result<TheoremReport> {
        check_guard(self.check.guard_base(), n_max, force)?;
        let rows = (0..=n_max)
            .map(|n| self.check.run_at(n))
            .collect::<Result<_>>()?;
        Ok(TheoremReport {
            id: self.id.to_string(),
            statement: self.statement.to_string(),
            n_max,
            rows,
        })
    }
}

/// Runs the characterization check for an arbitrary descriptor.
pub fn verify_class_range(
    descriptor: &ClassDescriptor,
    n_max: usize,
    force: bool,
) -> Result<TheoremReport> {
    check_guard(Base::All, n_max, force)?;
    let rows = (0..=n_max)
        .map(|n| {
            let r = verify_characterization(descriptor, n)?;
            Ok(TheoremRow {
                n,
                checked: r.checked,
                mismatches: r.mismatches,
                detail: r
                    .first_counterexample
                    .map(|ce| format!("{} -> {}", ce.path, ce.involution)),
            })
        })
        .collect::<Result<_>>()?;
    Ok(TheoremReport {
        id: format!("class:{descriptor}"),
        statement: format!("path predicate of {descriptor} matches membership"),
        n_max,
        rows,
    })
}

/// Resolves a theorem id (registry entry or `class:<descriptor>`) and runs it.
pub fn run_theorem(id: &str, n_max: usize, force: bool) -> Result<TheoremReport> {
    if let Some(t) = lookup(id) {
        return t.run(n_max, force);
    }
    if let Some(desc) = id.strip_prefix("class:") {
        return verify_class_range(&desc.parse()?, n_max, force);
    }
    Err(Error::UnknownTheorem(id.to_string()))
}
