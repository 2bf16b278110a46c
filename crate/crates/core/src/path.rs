//! Motzkin paths, with and without labels on their down steps.
//!
//! The text encoding is a run of `U`, `H` and `D` tokens; in a labelled path
//! every `D` is immediately followed by its decimal label (`UUUD1D2HD1UD1`).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Horizontal,
    Down,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Horizontal => 'H',
            Step::Down => 'D',
        }
    }

    /// Image under the reflection in a vertical line.
    pub fn mirrored(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Horizontal => Step::Horizontal,
            Step::Down => Step::Up,
        }
    }
}

/// An unlabelled Motzkin path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0usize;
        for (idx, &s) in steps.iter().enumerate() {
            match s {
                Step::Up => height += 1,
                Step::Horizontal => {}
                Step::Down => {
                    height = height
                        .checked_sub(1)
                        .ok_or(Error::NegativeHeight { position: idx + 1 })?;
                }
            }
        }
        if height != 0 {
            return Err(Error::NonzeroFinalHeight { height });
        }
        Ok(Self { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(Self::new(steps.clone()).is_ok());
        Self { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, kind: Step) -> usize {
        self.steps.iter().filter(|&&s| s == kind).count()
    }

    /// Height of every step: the level after an up step, the level of a
    /// horizontal step, the level before a down step.
    pub fn step_heights(&self) -> Vec<usize> {
        let mut level = 0usize;
        self.steps
            .iter()
            .map(|s| match s {
                Step::Up => {
                    level += 1;
                    level
                }
                Step::Horizontal => level,
                Step::Down => {
                    level -= 1;
                    level + 1
                }
            })
            .collect()
    }

    /// Height of step `i` (1-based).
    pub fn step_height(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(self.step_heights()[i - 1])
    }

    /// The largest step height; 0 for the empty path.
    pub fn height(&self) -> usize {
        self.step_heights().into_iter().max().unwrap_or(0)
    }

    /// Step index ranges `[start, end)` of the irreducible components.
    pub fn component_ranges(&self) -> Vec<(usize, usize)> {
        let mut ranges = Vec::new();
        let mut level = 0usize;
        let mut start = 0;
        for (idx, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => level += 1,
                Step::Horizontal => {}
                Step::Down => level -= 1,
            }
            if level == 0 {
                ranges.push((start, idx + 1));
                start = idx + 1;
            }
        }
        ranges
    }

    /// Factors of the path between consecutive visits to the x-axis.
    pub fn irreducible_components(&self) -> Vec<MotzkinPath> {
        self.component_ranges()
            .into_iter()
            .map(|(a, b)| MotzkinPath {
                steps: self.steps[a..b].to_vec(),
            })
            .collect()
    }

    pub fn is_irreducible(&self) -> bool {
        self.component_ranges().len() == 1
    }

    pub fn is_dyck(&self) -> bool {
        !self.steps.contains(&Step::Horizontal)
    }

    /// Mirror image in the vertical line through the midpoint.
    pub fn reflect(&self) -> MotzkinPath {
        MotzkinPath {
            steps: self.steps.iter().rev().map(|s| s.mirrored()).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n / 2).all(|i| self.steps[n - 1 - i] == self.steps[i].mirrored())
    }

    pub fn concat(&self, other: &MotzkinPath) -> MotzkinPath {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        MotzkinPath { steps }
    }

    pub fn relabel(&self, labelling: Labelling) -> LabelledMotzkinPath {
        let labels = self
            .step_heights()
            .into_iter()
            .zip(&self.steps)
            .filter(|(_, &s)| s == Step::Down)
            .map(|(h, _)| match labelling {
                Labelling::Unitary => 1,
                Labelling::Maximal => h as u32,
            })
            .collect();
        LabelledMotzkinPath {
            path: self.clone(),
            labels,
        }
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_path(s)? {
            ParsedPath::Plain(p) => Ok(p),
            ParsedPath::Labelled(lp) => Err(Error::UnexpectedLabel {
                position: lp.down_positions()[0],
            }),
        }
    }
}

/// The two canonical labellings of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Labelling {
    /// Every down step labelled 1.
    Unitary,
    /// Every down step labelled with its height.
    Maximal,
}

/// A Motzkin path whose `k`-th down step carries `labels[k]`, with
/// `1 ≤ labels[k] ≤ h(D)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LabelledMotzkinPath {
    path: MotzkinPath,
    labels: Vec<u32>,
}

impl LabelledMotzkinPath {
    /// `labels` lists the labels of the down steps from left to right.
    pub fn new(path: MotzkinPath, labels: Vec<u32>) -> Result<Self> {
        let heights = path.step_heights();
        let downs: Vec<usize> = (0..path.len())
            .filter(|&i| path.steps[i] == Step::Down)
            .collect();
        if labels.len() < downs.len() {
            return Err(Error::MissingLabel {
                position: downs[labels.len()] + 1,
            });
        }
        if labels.len() > downs.len() {
            return Err(Error::LabelCountMismatch {
                labels: labels.len(),
                downs: downs.len(),
            });
        }
        for (&i, &label) in downs.iter().zip(&labels) {
            if label == 0 || label as usize > heights[i] {
                return Err(Error::LabelOutOfRange {
                    position: i + 1,
                    label: label.into(),
                    height: heights[i],
                });
            }
        }
        Ok(Self { path, labels })
    }

    pub(crate) fn from_parts_unchecked(path: MotzkinPath, labels: Vec<u32>) -> Self {
        debug_assert!(Self::new(path.clone(), labels.clone()).is_ok());
        Self { path, labels }
    }

    pub fn path(&self) -> &MotzkinPath {
        &self.path
    }

    pub fn into_path(self) -> MotzkinPath {
        self.path
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        self.path.steps()
    }

    /// 1-based positions of the down steps.
    pub fn down_positions(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&i| self.path.steps[i - 1] == Step::Down)
            .collect()
    }

    /// Label of step `i` (1-based), `None` unless it is a down step.
    pub fn label_at(&self, i: usize) -> Option<u32> {
        if i == 0 || i > self.len() || self.path.steps[i - 1] != Step::Down {
            return None;
        }
        let k = self.path.steps[..i - 1]
            .iter()
            .filter(|&&s| s == Step::Down)
            .count();
        Some(self.labels[k])
    }

    pub fn is_unitary(&self) -> bool {
        self.labels.iter().all(|&l| l == 1)
    }

    pub fn is_maximal(&self) -> bool {
        self.path
            .step_heights()
            .into_iter()
            .zip(&self.path.steps)
            .filter(|(_, &s)| s == Step::Down)
            .zip(&self.labels)
            .all(|((h, _), &l)| l as usize == h)
    }

    /// Components of the underlying path; each down step keeps its label.
    pub fn irreducible_components(&self) -> Vec<LabelledMotzkinPath> {
        let mut next_label = 0;
        self.path
            .component_ranges()
            .into_iter()
            .map(|(a, b)| {
                let steps = self.path.steps[a..b].to_vec();
                let downs = steps.iter().filter(|&&s| s == Step::Down).count();
                let labels = self.labels[next_label..next_label + downs].to_vec();
                next_label += downs;
                LabelledMotzkinPath {
                    path: MotzkinPath { steps },
                    labels,
                }
            })
            .collect()
    }

    pub fn concat(&self, other: &LabelledMotzkinPath) -> LabelledMotzkinPath {
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        LabelledMotzkinPath {
            path: self.path.concat(&other.path),
            labels,
        }
    }
}

impl fmt::Display for LabelledMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut labels = self.labels.iter();
        for s in &self.path.steps {
            write!(f, "{}", s.letter())?;
            if *s == Step::Down {
                write!(f, "{}", labels.next().expect("one label per down step"))?;
            }
        }
        Ok(())
    }
}

/// Accepts labelled paths, and unlabelled ones without down steps (which are
/// vacuously labelled).
impl FromStr for LabelledMotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse_path(s)? {
            ParsedPath::Labelled(lp) => Ok(lp),
            ParsedPath::Plain(p) => match p.steps.iter().position(|&s| s == Step::Down) {
                None => Ok(LabelledMotzkinPath {
                    path: p,
                    labels: Vec::new(),
                }),
                Some(i) => Err(Error::MissingLabel { position: i + 1 }),
            },
        }
    }
}

/// Result of [`parse_path`]: labelled iff at least one down step carries a
/// label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedPath {
    Plain(MotzkinPath),
    Labelled(LabelledMotzkinPath),
}

impl fmt::Display for ParsedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParsedPath::Plain(p) => p.fmt(f),
            ParsedPath::Labelled(lp) => lp.fmt(f),
        }
    }
}

/// Parses the `U`/`H`/`D` text encoding, optionally with a decimal label
/// after each `D`. Either every down step is labelled or none is.
pub fn parse_path(text: &str) -> Result<ParsedPath> {
    let mut steps = Vec::new();
    let mut labels: Vec<Option<u64>> = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((offset, ch)) = chars.next() {
        let step = match ch {
            'U' => Step::Up,
            'H' => Step::Horizontal,
            'D' => Step::Down,
            _ => return Err(Error::UnknownCharacter { ch, offset }),
        };
        steps.push(step);
        let mut digits = String::new();
        while let Some(&(_, d)) = chars.peek() {
            if !d.is_ascii_digit() {
                break;
            }
            digits.push(d);
            chars.next();
        }
        if digits.is_empty() {
            if step == Step::Down {
                labels.push(None);
            }
            continue;
        }
        if step != Step::Down {
            return Err(Error::LabelOnNonDownStep {
                position: steps.len(),
            });
        }
        // Saturate absurdly long labels; they fail the height bound anyway.
        labels.push(Some(digits.parse().unwrap_or(u64::MAX)));
    }
    let path = MotzkinPath::new(steps)?;
    if labels.iter().all(Option::is_none) {
        return Ok(ParsedPath::Plain(path));
    }
    let heights = path.step_heights();
    let downs = (0..path.len()).filter(|&i| path.steps[i] == Step::Down);
    let mut checked = Vec::with_capacity(labels.len());
    for (i, label) in downs.zip(labels) {
        let label = label.ok_or(Error::PartialLabelling { position: i + 1 })?;
        if label == 0 || label > heights[i] as u64 {
            return Err(Error::LabelOutOfRange {
                position: i + 1,
                label,
                height: heights[i],
            });
        }
        checked.push(label as u32);
    }
    Ok(ParsedPath::Labelled(LabelledMotzkinPath {
        path,
        labels: checked,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    fn labelled(s: &str) -> LabelledMotzkinPath {
        s.parse().unwrap()
    }

    #[test]
    fn parses_nine_step_labelled_path() {
        let lp = labelled("UUUD1D2HD1UD1");
        assert_eq!(lp.len(), 9);
        assert_eq!(lp.labels(), &[1, 2, 1, 1]);
        assert_eq!(lp.to_string(), "UUUD1D2HD1UD1");
        assert_eq!(lp.label_at(5), Some(2));
        assert_eq!(lp.label_at(6), None);
    }

    #[test]
    fn parse_plain_and_errors() {
        assert_eq!(parse_path("HHH").unwrap(), ParsedPath::Plain(plain("HHH")));
        assert_eq!(
            parse_path("UD2"),
            Err(Error::LabelOutOfRange {
                position: 2,
                label: 2,
                height: 1
            })
        );
        assert_eq!(
            parse_path("UDD"),
            Err(Error::NegativeHeight { position: 3 })
        );
        assert_eq!(
            parse_path("UUD"),
            Err(Error::NonzeroFinalHeight { height: 1 })
        );
        assert_eq!(
            parse_path("UUD1D"),
            Err(Error::PartialLabelling { position: 4 })
        );
        assert_eq!(
            parse_path("UD0"),
            Err(Error::LabelOutOfRange {
                position: 2,
                label: 0,
                height: 1
            })
        );
        assert_eq!(
            parse_path("UXD"),
            Err(Error::UnknownCharacter { ch: 'X', offset: 1 })
        );
        assert_eq!(
            parse_path("U1D1"),
            Err(Error::LabelOnNonDownStep { position: 1 })
        );
        assert_eq!(
            parse_path("").unwrap(),
            ParsedPath::Plain(MotzkinPath::default())
        );
        assert!(matches!(
            parse_path("UD99999999999999999999999"),
            Err(Error::LabelOutOfRange { .. })
        ));
        assert_eq!(
            "UD".parse::<LabelledMotzkinPath>(),
            Err(Error::MissingLabel { position: 2 })
        );
        assert_eq!(labelled("HHH").labels(), &[] as &[u32]);
        assert!("UD1".parse::<MotzkinPath>().is_err());
    }

    #[test]
    fn step_heights() {
        let p = labelled("UUUD1D2HD1UD1").into_path();
        assert_eq!(p.step_height(4), Ok(3));
        assert_eq!(p.step_heights(), vec![1, 2, 3, 3, 2, 1, 1, 1, 1]);
        assert_eq!(plain("H").step_height(1), Ok(0));
        assert_eq!(
            plain("H").step_height(2),
            Err(Error::IndexOutOfRange { index: 2, len: 1 })
        );
        assert_eq!(
            plain("H").step_height(0),
            Err(Error::IndexOutOfRange { index: 0, len: 1 })
        );
        assert_eq!(plain("UUDD").height(), 2);
        assert_eq!(plain("").height(), 0);
    }

    #[test]
    fn components() {
        let parts: Vec<String> = plain("UDHUUDD")
            .irreducible_components()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(parts, ["UD", "H", "UUDD"]);
        assert_eq!(
            plain("UHUDD").irreducible_components(),
            vec![plain("UHUDD")]
        );
        assert!(plain("").irreducible_components().is_empty());
        let parts: Vec<String> = labelled("UUD2D1UD1")
            .irreducible_components()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(parts, ["UUD2D1", "UD1"]);
    }

    #[test]
    fn dyck_and_symmetry() {
        assert!(plain("UUDD").is_dyck() && plain("UUDD").is_symmetric());
        assert!(!plain("UHD").is_dyck() && plain("UHD").is_symmetric());
        assert!(!plain("UDH").is_symmetric());
        assert_eq!(plain("UUDHD").reflect(), plain("UHUDD"));
        let e = plain("");
        assert!(e.is_dyck() && e.is_symmetric());
        assert!(e.relabel(Labelling::Unitary).is_maximal());
    }

    #[test]
    fn canonical_labellings() {
        assert_eq!(
            plain("UUDD").relabel(Labelling::Maximal).to_string(),
            "UUD2D1"
        );
        assert_eq!(
            plain("UUDD").relabel(Labelling::Unitary).to_string(),
            "UUD1D1"
        );
        assert_eq!(plain("UHD").relabel(Labelling::Maximal).to_string(), "UHD1");
        assert!(labelled("UD1").is_unitary() && labelled("UD1").is_maximal());
        assert!(!labelled("UUD1D1").is_maximal());
        assert!(!labelled("UUD2D1").is_unitary());
    }

    #[test]
    fn labelled_constructor_checks() {
        assert!(LabelledMotzkinPath::new(plain("UUDD"), vec![2, 1]).is_ok());
        assert_eq!(
            LabelledMotzkinPath::new(plain("UUDD"), vec![1, 2]),
            Err(Error::LabelOutOfRange {
                position: 4,
                label: 2,
                height: 1
            })
        );
        assert_eq!(
            LabelledMotzkinPath::new(plain("UUDD"), vec![1]),
            Err(Error::MissingLabel { position: 4 })
        );
    }
}
