//! Counting harness: class sizes by exhaustive enumeration next to the
//! closed forms they are expected to follow.

use std::fmt;
use std::io;

use rayon::prelude::*;
use serde::Serialize;

use crate::classes::{path_predicate, Base, ClassDescriptor};
use crate::error::{Error, Result};
use crate::generate::{gen_involutions, gen_labelled_paths};
use crate::sequences::{binomial, Sequence};

/// Largest size enumerated without an explicit override, per base set.
pub fn size_limit(base: Base) -> usize {
    match base {
        Base::All => 14,
        Base::FixedPointFree => 16,
        Base::Centrosymmetric => 20,
    }
}

/// Fails with [`Error::SizeGuard`] when `n` exceeds [`size_limit`] and
/// `force` is not set.
pub fn check_guard(base: Base, n: usize, force: bool) -> Result<()> {
    let limit = size_limit(base);
    if n > limit && !force {
        return Err(Error::SizeGuard {
            base: base.tag(),
            n,
            limit,
        });
    }
    Ok(())
}

/// How [`count_class_with`] enumerates a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMethod {
    /// Filter labelled paths of the right shape with the path predicate.
    PathPredicate,
    /// Filter generated involutions by pattern avoidance.
    BruteForce,
}

/// Size of `class` at `n`, through the path predicate when one exists.
pub fn count_class(class: &ClassDescriptor, n: usize) -> Result<u64> {
    let method = if path_predicate(class).is_some() {
        CountMethod::PathPredicate
    } else {
        CountMethod::BruteForce
    };
    count_class_with(class, n, method)
}

pub fn count_class_with(class: &ClassDescriptor, n: usize, method: CountMethod) -> Result<u64> {
    let count = match method {
        CountMethod::PathPredicate => {
            let predicate =
                path_predicate(class).ok_or_else(|| Error::UnsupportedClass(class.to_string()))?;
            gen_labelled_paths(n, class.base.path_constraints())
                .filter(|lp| predicate.holds(lp))
                .count()
        }
        CountMethod::BruteForce => gen_involutions(n, class.base)
            .filter(|tau| tau.avoids_all(&class.avoid))
            .count(),
    };
    Ok(count as u64)
}

/// Closed forms for class sizes. `h` stands for `⌊n/2⌋` throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Formula {
    /// `M_n`
    Motzkin,
    /// `1 + ⌊n/2⌋⌈n/2⌉`
    QuarterSquarePlusOne,
    /// `binom(n, ⌊n/2⌋)`
    CentralBinomial,
    /// `t_{n+2}`
    TribonacciShifted,
    /// `F_{n+1}`
    FibonacciShifted,
    /// `2^{n-1}`, from `n = 1`.
    HalfPowerOfTwo,
    /// `C_h` for `n = 2h`, 0 for odd `n`.
    CatalanOfHalf,
    /// `1 + binom(h, 2)` for `n = 2h`, 0 for odd `n`.
    OnePlusBinomialOfHalf,
    /// `2^{h-1}` for `n = 2h ≥ 2`, 0 for odd `n`.
    HalfPowerOfTwoOfHalf,
    /// Motzkin prefixes of length `h`.
    MotzkinPrefixOfHalf,
    /// `⌊n/2⌋`
    FloorHalf,
    /// `2^h` for even `n`, `binom(h, ⌊h/2⌋)` for odd `n`.
    PowerOfTwoOrCentralBinomial,
    /// `t_{h+1} + t_{h+2}`
    TribonacciPair,
    /// `F_{h+2}` for even `n`, `F_{h+1}` for odd `n`.
    FibonacciByParity,
    /// `2^h`
    PowerOfTwoOfHalf,
    /// `h + 1` for even `n`, 1 for odd `n`.
    HalfPlusOneOrOne,
}

impl Formula {
    pub fn name(self) -> &'static str {
        match self {
            Formula::Motzkin => "M(n)",
            Formula::QuarterSquarePlusOne => "1+floor(n/2)*ceil(n/2)",
            Formula::CentralBinomial => "binom(n,floor(n/2))",
            Formula::TribonacciShifted => "t(n+2)",
            Formula::FibonacciShifted => "F(n+1)",
            Formula::HalfPowerOfTwo => "2^(n-1)",
            Formula::CatalanOfHalf => "C(n/2)",
            Formula::OnePlusBinomialOfHalf => "1+binom(n/2,2)",
            Formula::HalfPowerOfTwoOfHalf => "2^(n/2-1)",
            Formula::MotzkinPrefixOfHalf => "prefix(floor(n/2))",
            Formula::FloorHalf => "floor(n/2)",
            Formula::PowerOfTwoOrCentralBinomial => "even: 2^h; odd: binom(h,floor(h/2))",
            Formula::TribonacciPair => "t(h+1)+t(h+2)",
            Formula::FibonacciByParity => "even: F(h+2); odd: F(h+1)",
            Formula::PowerOfTwoOfHalf => "2^floor(n/2)",
            Formula::HalfPlusOneOrOne => "even: h+1; odd: 1",
        }
    }

    /// Smallest `n` at which the formula is defined.
    pub fn n_min(self) -> usize {
        match self {
            Formula::HalfPowerOfTwo => 1,
            Formula::HalfPowerOfTwoOfHalf => 2,
            _ => 0,
        }
    }

    /// Expected class size at `n`; `None` below [`Formula::n_min`].
    pub fn expected(self, n: usize) -> Result<Option<u64>> {
        if n < self.n_min() {
            return Ok(None);
        }
        let n64 = n as u64;
        let h = n64 / 2;
        let even = n % 2 == 0;
        let overflow = || Error::Overflow {
            sequence: self.name(),
            n: n64,
        };
        let value = match self {
            Formula::Motzkin => Sequence::Motzkin.value(n64)?,
            Formula::QuarterSquarePlusOne => h
                .checked_mul(n64 - h)
                .and_then(|x| x.checked_add(1))
                .ok_or_else(overflow)?,
            Formula::CentralBinomial => Sequence::CentralBinomial.value(n64)?,
            Formula::TribonacciShifted => Sequence::Tribonacci.value(n64 + 2)?,
            Formula::FibonacciShifted => Sequence::Fibonacci.value(n64 + 1)?,
            Formula::HalfPowerOfTwo => Sequence::PowerOfTwo.value(n64 - 1)?,
            Formula::CatalanOfHalf if even => Sequence::Catalan.value(h)?,
            Formula::OnePlusBinomialOfHalf if even => binomial(h, 2)
                .and_then(|b| b.checked_add(1))
                .ok_or_else(overflow)?,
            Formula::HalfPowerOfTwoOfHalf if even => Sequence::PowerOfTwo.value(h - 1)?,
            Formula::CatalanOfHalf
            | Formula::OnePlusBinomialOfHalf
            | Formula::HalfPowerOfTwoOfHalf => 0,
            Formula::MotzkinPrefixOfHalf => Sequence::MotzkinPrefix.value(h)?,
            Formula::FloorHalf => h,
            Formula::PowerOfTwoOrCentralBinomial if even => Sequence::PowerOfTwo.value(h)?,
            Formula::PowerOfTwoOrCentralBinomial => Sequence::CentralBinomial.value(h)?,
            Formula::TribonacciPair => Sequence::Tribonacci
                .value(h + 1)?
                .checked_add(Sequence::Tribonacci.value(h + 2)?)
                .ok_or_else(overflow)?,
            Formula::FibonacciByParity if even => Sequence::Fibonacci.value(h + 2)?,
            Formula::FibonacciByParity => Sequence::Fibonacci.value(h + 1)?,
            Formula::PowerOfTwoOfHalf => Sequence::PowerOfTwo.value(h)?,
            Formula::HalfPlusOneOrOne if even => h + 1,
            Formula::HalfPlusOneOrOne => 1,
        };
        Ok(Some(value))
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The closed form for `class`, if one is known.
pub fn formula_for(class: &ClassDescriptor) -> Option<Formula> {
    let key: Vec<String> = class
        .reduced_patterns()
        .iter()
        .map(ToString::to_string)
        .collect();
    let key: Vec<&str> = key.iter().map(String::as_str).collect();
    use Base::*;
    Some(match (class.base, key.as_slice()) {
        (All, ["4321"]) | (All, ["3412"]) => Formula::Motzkin,
        (All, ["132", "4321"]) | (All, ["213", "4321"]) => Formula::QuarterSquarePlusOne,
        (All, ["321"]) => Formula::CentralBinomial,
        (All, ["231", "4321"]) => Formula::TribonacciShifted,
        (All, ["132", "3412"]) | (All, ["213", "3412"]) | (All, ["321", "3412"]) => {
            Formula::FibonacciShifted
        }
        (All, ["231"]) | (All, ["3412", "4321"]) => Formula::HalfPowerOfTwo,
        (All, ["123", "3412"]) => Formula::QuarterSquarePlusOne,
        (FixedPointFree, ["4321"]) | (FixedPointFree, ["3412"]) | (FixedPointFree, ["321"]) => {
            Formula::CatalanOfHalf
        }
        (FixedPointFree, ["123", "3412"]) => Formula::OnePlusBinomialOfHalf,
        (FixedPointFree, ["231"]) => Formula::HalfPowerOfTwoOfHalf,
        (Centrosymmetric, ["4321"]) | (Centrosymmetric, ["3412"]) => Formula::MotzkinPrefixOfHalf,
        (Centrosymmetric, ["132", "4321"]) | (Centrosymmetric, ["132", "3412"]) => {
            Formula::FloorHalf
        }
        (Centrosymmetric, ["321"]) => Formula::PowerOfTwoOrCentralBinomial,
        (Centrosymmetric, ["231", "4321"]) => Formula::TribonacciPair,
        (Centrosymmetric, ["321", "3412"]) => Formula::FibonacciByParity,
        (Centrosymmetric, ["231"]) | (Centrosymmetric, ["3412", "4321"]) => {
            Formula::PowerOfTwoOfHalf
        }
        (Centrosymmetric, ["123", "3412"]) => Formula::HalfPlusOneOrOne,
        _ => return None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: usize,
    pub observed: u64,
    pub formula: Option<&'static str>,
    pub expected: Option<u64>,
    /// `Some(observed == expected)` when a formula value exists at `n`.
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    /// Whether the predicate-based and brute-force counts agreed; `None` if
    /// only one method ran.
    pub methods_agree: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub class: String,
    pub formula: Option<&'static str>,
    /// First size at which the formula is asserted.
    pub n_min: Option<usize>,
    pub rows: Vec<CountRow>,
}

impl CountReport {
    /// No row with a formula value disagrees, and every cross-check agreed.
    pub fn all_match(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.matches != Some(false) && r.methods_agree != Some(false))
    }

    pub fn mismatched_sizes(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| r.matches == Some(false))
            .map(|r| r.n)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CensusOptions {
    /// Lift the size guard.
    pub force: bool,
    /// Also count by brute force and record whether both methods agree.
    pub cross_check: bool,
}

/// Counts every class at every `n ≤ n_max` and pairs the counts with their
/// closed forms. Cells run in parallel; output order is by class, then `n`.
pub fn run_census(
    classes: &[ClassDescriptor],
    n_max: usize,
    options: CensusOptions,
) -> Result<Vec<CountReport>> {
    for class in classes {
        check_guard(class.base, n_max, options.force)?;
    }
    let cells: Vec<(usize, usize)> = (0..classes.len())
        .flat_map(|c| (0..=n_max).map(move |n| (c, n)))
        .collect();
    let rows: Vec<CountRow> = cells
        .par_iter()
        .map(|&(c, n)| count_row(&classes[c], n, options.cross_check))
        .collect::<Result<_>>()?;
    let mut rows = rows.into_iter();
    Ok(classes
        .iter()
        .map(|class| {
            let formula = formula_for(class);
            CountReport {
                class: class.to_string(),
                formula: formula.map(Formula::name),
                n_min: formula.map(Formula::n_min),
                rows: rows.by_ref().take(n_max + 1).collect(),
            }
        })
        .collect())
}

fn count_row(class: &ClassDescriptor, n: usize, cross_check: bool) -> Result<CountRow> {
    let observed = count_class(class, n)?;
    let methods_agree = if cross_check && path_predicate(class).is_some() {
        Some(count_class_with(class, n, CountMethod::BruteForce)? == observed)
    } else {
        None
    };
    let formula = formula_for(class);
    let expected = match formula {
        Some(f) => f.expected(n)?,
        None => None,
    };
    Ok(CountRow {
        n,
        observed,
        formula: formula.map(Formula::name),
        expected,
        matches: expected.map(|e| e == observed),
        methods_agree,
    })
}

/// Writes reports as CSV with header `class,n,observed,formula,expected,match`.
pub fn write_csv<W: io::Write>(reports: &[CountReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["class", "n", "observed", "formula", "expected", "match"])
        .map_err(io_err)?;
    for report in reports {
        for row in &report.rows {
            w.write_record([
                report.class.clone(),
                row.n.to_string(),
                row.observed.to_string(),
                row.formula.unwrap_or("").to_string(),
                row.expected.map(|e| e.to_string()).unwrap_or_default(),
                row.matches.map(|m| m.to_string()).unwrap_or_default(),
            ])
            .map_err(io_err)?;
        }
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}

/// Index used for a size-`n` row in b-file output: `n` itself, or `n/2` for
/// fixed-point-free classes (odd sizes are skipped).
pub fn bfile_index(base: Base, n: usize) -> Option<usize> {
    match base {
        Base::FixedPointFree => (n % 2 == 0).then_some(n / 2),
        _ => Some(n),
    }
}

/// Observed counts of one report as `(index, value)` pairs.
pub fn bfile_terms(report: &CountReport, base: Base) -> Vec<(usize, u64)> {
    report
        .rows
        .iter()
        .filter_map(|r| bfile_index(base, r.n).map(|i| (i, r.observed)))
        .collect()
}

/// Writes `n a(n)` lines, preceded by `#` comment lines.
pub fn write_bfile<W: io::Write>(
    class: &ClassDescriptor,
    report: &CountReport,
    mut out: W,
) -> Result<()> {
    let io_err = |e: io::Error| Error::Io(e.to_string());
    let index = match class.base {
        Base::FixedPointFree => "h = n/2",
        _ => "n",
    };
    writeln!(out, "# {}", report.class).map_err(io_err)?;
    writeln!(out, "# offset 0, indexed by {index}").map_err(io_err)?;
    for (i, v) in bfile_terms(report, class.base) {
        writeln!(out, "{i} {v}").map_err(io_err)?;
    }
    Ok(())
}

/// Parses an OEIS-style b-file; blank and `#` lines are skipped. Values are
/// kept as decimal strings since they may exceed 64 bits.
pub fn parse_bfile(text: &str) -> Result<Vec<(usize, String)>> {
    let mut terms = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::InvalidBFile {
            line: lineno + 1,
            content: line.to_string(),
        };
        let mut parts = line.split_whitespace();
        let index = parts
            .next()
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(bad)?;
        let value = parts.next().ok_or_else(bad)?;
        let digits = value.strip_prefix('-').unwrap_or(value);
        if digits.is_empty()
            || !digits.bytes().all(|b| b.is_ascii_digit())
            || parts.next().is_some()
        {
            return Err(bad());
        }
        terms.push((index, value.to_string()));
    }
    Ok(terms)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub index: usize,
    pub produced: u64,
    pub reference: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BFileDiff {
    /// Number of indices present on both sides.
    pub compared: usize,
    pub first_divergence: Option<Divergence>,
}

impl BFileDiff {
    pub fn is_clean(&self) -> bool {
        self.compared > 0 && self.first_divergence.is_none()
    }
}

/// Compares produced terms against a reference b-file; produced index `i`
/// is matched with reference index `i + offset`.
pub fn diff_bfile(
    produced: &[(usize, u64)],
    reference: &[(usize, String)],
    offset: i64,
) -> BFileDiff {
    let mut compared = 0;
    for &(i, v) in produced {
        let Some(target) = usize::try_from(i as i64 + offset).ok() else {
            continue;
        };
        let Some((_, r)) = reference.iter().find(|(j, _)| *j == target) else {
            continue;
        };
        compared += 1;
        if *r != v.to_string() {
            return BFileDiff {
                compared,
                first_divergence: Some(Divergence {
                    index: target,
                    produced: v,
                    reference: r.clone(),
                }),
            };
        }
    }
    BFileDiff {
        compared,
        first_divergence: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(s: &str) -> ClassDescriptor {
        s.parse().unwrap()
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_class(&class("I:4321"), 5), Ok(21));
        assert_eq!(count_class(&class("I:4321,132"), 6), Ok(10));
        assert_eq!(count_class(&class("DI:3412,123"), 6), Ok(4));
        assert_eq!(
            count_class_with(&class("DI:3412,123"), 6, CountMethod::BruteForce),
            Ok(4)
        );
        assert_eq!(count_class(&class("I:4321,123"), 8), Ok(0));
        assert!(matches!(
            count_class_with(&class("I:4321,123"), 3, CountMethod::PathPredicate),
            Err(Error::UnsupportedClass(_))
        ));
    }

    #[test]
    fn formula_lookup() {
        assert_eq!(
            formula_for(&class("I:4321,312")),
            Some(Formula::TribonacciShifted)
        );
        assert_eq!(
            formula_for(&class("I:4321,231")),
            Some(Formula::TribonacciShifted)
        );
        assert_eq!(
            formula_for(&class("CI:3412")).unwrap().expected(4),
            Ok(Some(5))
        );
        assert_eq!(formula_for(&class("I:2143")), None);
        assert_eq!(formula_for(&class("I:4321,123")), None);
        assert_eq!(Formula::HalfPowerOfTwo.expected(0), Ok(None));
        assert_eq!(Formula::CatalanOfHalf.expected(7), Ok(Some(0)));
        assert_eq!(Formula::HalfPowerOfTwoOfHalf.expected(6), Ok(Some(4)));
        assert_eq!(Formula::TribonacciShifted.expected(3), Ok(Some(4)));
    }

    #[test]
    fn census_rows() {
        let reports = run_census(
            &[class("CI:3412,123"), class("I:4321,123")],
            8,
            CensusOptions::default(),
        )
        .unwrap();
        let ci = &reports[0];
        assert_eq!(ci.rows[7].observed, 1);
        assert_eq!(ci.rows[7].expected, Some(1));
        assert!(ci.all_match());
        let empty = &reports[1];
        assert_eq!(empty.rows[8].observed, 0);
        assert_eq!(empty.rows[8].expected, None);
        assert_eq!(empty.formula, None);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            run_census(&[class("I:4321")], 20, CensusOptions::default()),
            Err(Error::SizeGuard { limit: 14, .. })
        ));
        assert!(check_guard(Base::All, 20, true).is_ok());
        assert!(check_guard(Base::Centrosymmetric, 20, false).is_ok());
    }

    #[test]
    fn csv_output() {
        let reports = run_census(&[class("I:4321,132")], 2, CensusOptions::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&reports, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "class,n,observed,formula,expected,match\n\
             \"I:4321,132\",0,1,1+floor(n/2)*ceil(n/2),1,true\n\
             \"I:4321,132\",1,1,1+floor(n/2)*ceil(n/2),1,true\n\
             \"I:4321,132\",2,2,1+floor(n/2)*ceil(n/2),2,true\n"
        );
    }

    #[test]
    fn bfiles() {
        let c = class("DI:4321");
        let reports = run_census(std::slice::from_ref(&c), 6, CensusOptions::default()).unwrap();
        let mut buf = Vec::new();
        write_bfile(&c, &reports[0], &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let terms = parse_bfile(&text).unwrap();
        assert_eq!(
            terms,
            [
                (0, "1".into()),
                (1, "1".into()),
                (2, "2".into()),
                (3, "5".into())
            ]
        );

        let reference = parse_bfile("# Catalan\n0 1\n1 1\n2 2\n3 5\n4 14\n").unwrap();
        let diff = diff_bfile(&bfile_terms(&reports[0], c.base), &reference, 0);
        assert!(diff.is_clean());
        assert_eq!(diff.compared, 4);
        let diff = diff_bfile(&bfile_terms(&reports[0], c.base), &reference, 1);
        assert_eq!(diff.first_divergence.unwrap().index, 2);
        assert!(parse_bfile("0 1\nfoo\n").is_err());
        assert!(!diff_bfile(&[(0, 1)], &[], 0).is_clean());
    }
}
