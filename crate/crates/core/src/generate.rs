//! Exhaustive generators for involutions and Motzkin paths.
//!
//! Both generators are depth-first searches driven by an explicit stack, so
//! they stream their output in lexicographic order without materializing it.
//! Involutions come out in one-line lexicographic order; paths in
//! lexicographic order of their encoding with `U < H < D` and, for labelled
//! paths, ascending labels.

use crate::classes::Base;
use crate::path::{LabelledMotzkinPath, MotzkinPath, Step};
use crate::perm::{Involution, Permutation};

const UNSET: u32 = u32::MAX;

/// Streams every involution of length `n` in `base`, in lexicographic order.
pub fn gen_involutions(n: usize, base: Base) -> Involutions {
    Involutions {
        n,
        base,
        image: vec![UNSET; n],
        frames: Vec::new(),
        started: false,
        done: false,
    }
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    pos: usize,
    choice: usize,
    written: [usize; 4],
    len: usize,
}

#[derive(Debug, Clone)]
pub struct Involutions {
    n: usize,
    base: Base,
    image: Vec<u32>,
    frames: Vec<Frame>,
    started: bool,
    done: bool,
}

impl Involutions {
    // Assigns τ(pos) = choice together with everything it forces: the
    // partner, and under central symmetry the mirrored pair.
    fn try_assign(&mut self, pos: usize, choice: usize) -> Option<Frame> {
        if self.base == Base::FixedPointFree && pos == choice {
            return None;
        }
        let mirror = |x: usize| self.n - 1 - x;
        let mut writes = [(pos, choice), (choice, pos), (0, 0), (0, 0)];
        let mut count = 2;
        if self.base == Base::Centrosymmetric {
            writes[2] = (mirror(pos), mirror(choice));
            writes[3] = (mirror(choice), mirror(pos));
            count = 4;
        }
        let writes = &writes[..count];
        for (a, &(p, v)) in writes.iter().enumerate() {
            if self.image[p] != UNSET {
                return None;
            }
            if writes[..a].iter().any(|&(q, w)| q == p && w != v) {
                return None;
            }
        }
        let mut frame = Frame {
            pos,
            choice,
            written: [0; 4],
            len: 0,
        };
        for &(p, v) in writes {
            if self.image[p] == UNSET {
                self.image[p] = v as u32;
                frame.written[frame.len] = p;
                frame.len += 1;
            }
        }
        Some(frame)
    }

    fn undo(&mut self, frame: &Frame) {
        for &p in &frame.written[..frame.len] {
            self.image[p] = UNSET;
        }
    }

    fn first_unset(&self, from: usize) -> Option<usize> {
        (from..self.n).find(|&p| self.image[p] == UNSET)
    }

    fn advance(&mut self, mut resume: Option<(usize, usize)>) -> bool {
        loop {
            let (pos, start) = match resume.take() {
                Some((pos, last)) => (pos, last + 1),
                None => {
                    let from = self.frames.last().map_or(0, |f| f.pos + 1);
                    match self.first_unset(from) {
                        Some(pos) => (pos, pos),
                        None => return true,
                    }
                }
            };
            let mut placed = false;
            for choice in start..self.n {
                if self.image[choice] != UNSET {
                    continue;
                }
                if let Some(frame) = self.try_assign(pos, choice) {
                    self.frames.push(frame);
                    placed = true;
                    break;
                }
            }
            if !placed {
                match self.frames.pop() {
                    Some(frame) => {
                        self.undo(&frame);
                        resume = Some((frame.pos, frame.choice));
                    }
                    None => return false,
                }
            }
        }
    }

    fn current(&self) -> Involution {
        let values = self.image.iter().map(|&v| v + 1).collect();
        Involution::from_permutation_unchecked(Permutation::from_vec_unchecked(values))
    }
}

impl Iterator for Involutions {
    type Item = Involution;

    fn next(&mut self) -> Option<Involution> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.advance(None)
        } else {
            match self.frames.pop() {
                Some(frame) => {
                    self.undo(&frame);
                    self.advance(Some((frame.pos, frame.choice)))
                }
                None => false,
            }
        };
        if found {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}

/// Shape restrictions for [`gen_paths`] and [`gen_labelled_paths`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PathConstraints {
    /// No horizontal steps.
    pub dyck: bool,
    /// Shape invariant under reflection in the vertical midline.
    pub symmetric: bool,
}

impl PathConstraints {
    pub const NONE: PathConstraints = PathConstraints {
        dyck: false,
        symmetric: false,
    };
    pub const DYCK: PathConstraints = PathConstraints {
        dyck: true,
        symmetric: false,
    };
    pub const SYMMETRIC: PathConstraints = PathConstraints {
        dyck: false,
        symmetric: true,
    };
}

/// Streams every Motzkin path of length `n` satisfying `constraints`.
pub fn gen_paths(n: usize, constraints: PathConstraints) -> impl Iterator<Item = MotzkinPath> {
    PathWalker::new(n, constraints, false)
        .map(|(steps, _)| MotzkinPath::from_steps_unchecked(steps))
}

/// Streams every labelled Motzkin path of length `n` whose shape satisfies
/// `constraints`.
pub fn gen_labelled_paths(
    n: usize,
    constraints: PathConstraints,
) -> impl Iterator<Item = LabelledMotzkinPath> {
    PathWalker::new(n, constraints, true).map(|(steps, labels)| {
        LabelledMotzkinPath::from_parts_unchecked(MotzkinPath::from_steps_unchecked(steps), labels)
    })
}

// Choice codes per step: 0 = U, 1 = H, 1 + k = D labelled k.
struct PathWalker {
    n: usize,
    constraints: PathConstraints,
    labelled: bool,
    choices: Vec<u32>,
    levels: Vec<usize>,
    started: bool,
    done: bool,
}

fn step_of(choice: u32) -> Step {
    match choice {
        0 => Step::Up,
        1 => Step::Horizontal,
        _ => Step::Down,
    }
}

impl PathWalker {
    fn new(n: usize, constraints: PathConstraints, labelled: bool) -> Self {
        Self {
            n,
            constraints,
            labelled,
            choices: Vec::with_capacity(n),
            levels: Vec::with_capacity(n),
            started: false,
            done: false,
        }
    }

    fn first_valid(&self, idx: usize, from: u32) -> Option<u32> {
        let level = self.levels.last().copied().unwrap_or(0);
        let remaining = self.n - idx;
        let max_choice = match (level, self.labelled) {
            (0, _) => 1,
            (_, false) => 2,
            (l, true) => 1 + l as u32,
        };
        let mirror = self.n - 1 - idx;
        let forced = (self.constraints.symmetric && mirror <= idx).then(|| {
            if mirror == idx {
                Step::Horizontal
            } else {
                step_of(self.choices[mirror]).mirrored()
            }
        });
        (from..=max_choice).find(|&c| {
            let step = step_of(c);
            if forced.is_some_and(|f| f != step) {
                return false;
            }
            match step {
                Step::Up => level + 1 < remaining,
                Step::Horizontal => !self.constraints.dyck && level < remaining,
                Step::Down => level >= 1,
            }
        })
    }

    fn push(&mut self, choice: u32) {
        let level = self.levels.last().copied().unwrap_or(0);
        let next = match step_of(choice) {
            Step::Up => level + 1,
            Step::Horizontal => level,
            Step::Down => level - 1,
        };
        self.choices.push(choice);
        self.levels.push(next);
    }

    fn pop(&mut self) -> Option<u32> {
        self.levels.pop();
        self.choices.pop()
    }

    fn advance(&mut self, mut from: u32) -> bool {
        loop {
            let idx = self.choices.len();
            if idx == self.n {
                return true;
            }
            match self.first_valid(idx, from) {
                Some(c) => {
                    self.push(c);
                    from = 0;
                }
                None => match self.pop() {
                    Some(c) => from = c + 1,
                    None => return false,
                },
            }
        }
    }

    fn current(&self) -> (Vec<Step>, Vec<u32>) {
        let steps = self.choices.iter().map(|&c| step_of(c)).collect();
        let labels = self
            .choices
            .iter()
            .filter(|&&c| c >= 2)
            .map(|&c| c - 1)
            .collect();
        (steps, labels)
    }
}

impl Iterator for PathWalker {
    type Item = (Vec<Step>, Vec<u32>);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let found = if !self.started {
            self.started = true;
            self.advance(0)
        } else {
            match self.pop() {
                Some(c) => self.advance(c + 1),
                None => false,
            }
        };
        if found {
            Some(self.current())
        } else {
            self.done = true;
            None
        }
    }
}
