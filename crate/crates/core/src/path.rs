//! Schröder lattice paths: steps north, east and diagonal from `(0,0)` to
//! `(n,n)` staying weakly above `y = x`.  Carries the height statistics
//! `tau_k`, the first-return product, and bounded-height enumeration.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::Zero;

use crate::series::{binom, BinomMode, IntPoly};
use crate::{Error, Result, DEFAULT_ENUM_LIMIT};

/// One step of a Schröder path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// `(1,1)`.
    Diag,
    /// `(1,0)`.
    East,
    /// `(0,1)`.
    North,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Diag => 'D',
            Step::East => 'E',
            Step::North => 'N',
        }
    }
}

/// A Schröder path.  The size `n` is the number of east plus diagonal
/// steps; the path ends at `(n, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchroderPath {
    steps: Vec<Step>,
}

/// Height records for the horizontal steps of a path: `height` is `y - x`
/// at the step's left endpoint, present for east and diagonal steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeightProfile {
    pub records: Vec<StepHeight>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepHeight {
    pub step: Step,
    pub height: Option<u64>,
}

impl SchroderPath {
    /// Validates the step sequence: no prefix may dip below the diagonal
    /// and the endpoint must lie on it.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (index, &s) in steps.iter().enumerate() {
            match s {
                Step::North => height += 1,
                Step::East => {
                    height -= 1;
                    if height < 0 {
                        return Err(Error::MalformedPath {
                            index,
                            reason: "path passes below the diagonal".into(),
                        });
                    }
                }
                Step::Diag => {}
            }
        }
        if height != 0 {
            return Err(Error::MalformedPath {
                index: steps.len(),
                reason: "path does not end on the diagonal".into(),
            });
        }
        Ok(SchroderPath { steps })
    }

    pub fn empty() -> Self {
        SchroderPath { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The size `n`: number of east plus diagonal steps.
    pub fn size(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| !matches!(s, Step::North))
            .count()
    }

    /// Heights of all steps, east and diagonal steps carrying `y - x` at
    /// their left endpoint.
    pub fn height_profile(&self) -> HeightProfile {
        let mut records = Vec::with_capacity(self.steps.len());
        let mut height: u64 = 0;
        for &s in &self.steps {
            match s {
                Step::North => {
                    records.push(StepHeight { step: s, height: None });
                    height += 1;
                }
                Step::East => {
                    records.push(StepHeight { step: s, height: Some(height) });
                    height -= 1;
                }
                Step::Diag => {
                    records.push(StepHeight { step: s, height: Some(height) });
                }
            }
        }
        HeightProfile { records }
    }

    /// Largest `y - x` over all points of the path.
    pub fn max_height(&self) -> u64 {
        let mut h: u64 = 0;
        let mut max = 0;
        for &s in &self.steps {
            match s {
                Step::North => {
                    h += 1;
                    max = max.max(h);
                }
                Step::East => h -= 1,
                Step::Diag => {}
            }
        }
        max
    }

    /// `tau_k`: `C(0, k-1)` plus the sum of `C(ht(s), k-1)` over east and
    /// diagonal steps, with the convention `C(i, j) = 0` for `j < 0` or
    /// `i < j`.  `tau_0 = 0`.
    pub fn tau(&self, k: usize) -> BigInt {
        if k == 0 {
            return BigInt::zero();
        }
        let km1 = k as i64 - 1;
        let mut total = binom(0, km1, BinomMode::Standard);
        for rec in self.height_profile().records {
            if let Some(h) = rec.height {
                total += binom(h as i64, km1, BinomMode::Standard);
            }
        }
        total
    }

    /// `(tau_1, ..., tau_K)`.
    pub fn stat_vector(&self, cutoff: usize) -> Vec<BigInt> {
        (1..=cutoff).map(|k| self.tau(k)).collect()
    }

    /// First-return product `N self E other`: the result first touches the
    /// diagonal again right after the east step.
    pub fn first_return_product(&self, other: &SchroderPath) -> SchroderPath {
        let mut steps = Vec::with_capacity(self.steps.len() + other.steps.len() + 2);
        steps.push(Step::North);
        steps.extend_from_slice(&self.steps);
        steps.push(Step::East);
        steps.extend_from_slice(&other.steps);
        SchroderPath { steps }
    }

    /// Prepend a diagonal step.
    pub fn prepend_diag(&self) -> SchroderPath {
        let mut steps = Vec::with_capacity(self.steps.len() + 1);
        steps.push(Step::Diag);
        steps.extend_from_slice(&self.steps);
        SchroderPath { steps }
    }

    /// Undo [`SchroderPath::prepend_diag`] / the first-return product on a
    /// nonempty path: split off a leading diagonal step, or split at the
    /// first return to the diagonal.
    pub fn decompose(&self) -> Result<PathDecomposition> {
        match self.steps.first() {
            None => Err(Error::UndefinedDecomposition("path is empty".into())),
            Some(Step::Diag) => Ok(PathDecomposition::Diag(SchroderPath {
                steps: self.steps[1..].to_vec(),
            })),
            Some(Step::East) => unreachable!("validated path cannot start east"),
            Some(Step::North) => {
                let mut height = 1i64;
                for (i, &s) in self.steps.iter().enumerate().skip(1) {
                    match s {
                        Step::North => height += 1,
                        Step::East => {
                            height -= 1;
                            if height == 0 {
                                let first = SchroderPath { steps: self.steps[1..i].to_vec() };
                                let second = SchroderPath { steps: self.steps[i + 1..].to_vec() };
                                return Ok(PathDecomposition::FirstReturn(first, second));
                            }
                        }
                        Step::Diag => {}
                    }
                }
                unreachable!("validated path must return to the diagonal")
            }
        }
    }
}

/// Result of [`SchroderPath::decompose`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathDecomposition {
    Diag(SchroderPath),
    FirstReturn(SchroderPath, SchroderPath),
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for SchroderPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps: Vec<Step> = s
            .trim()
            .chars()
            .enumerate()
            .map(|(index, c)| match c.to_ascii_uppercase() {
                'N' => Ok(Step::North),
                'E' => Ok(Step::East),
                'D' => Ok(Step::Diag),
                other => Err(Error::MalformedPath {
                    index,
                    reason: format!("unknown step letter {other:?}"),
                }),
            })
            .collect::<Result<_>>()?;
        SchroderPath::new(steps)
    }
}

/// All paths of size `n`, optionally restricted to `y - x <= hmax` at every
/// point, in lexicographic step order with `D < E < N`.
pub fn enumerate_paths(n: usize, hmax: Option<u64>) -> Result<PathIter> {
    enumerate_paths_with_limit(n, hmax, DEFAULT_ENUM_LIMIT)
}

/// As [`enumerate_paths`] with an explicit size cap.
pub fn enumerate_paths_with_limit(n: usize, hmax: Option<u64>, limit: usize) -> Result<PathIter> {
    if n > limit {
        return Err(Error::ResourceLimit { n, limit });
    }
    Ok(PathIter {
        n: n as i64,
        hmax: hmax.map(|h| h as i64),
        stack: Vec::new(),
        x: 0,
        y: 0,
        emitted_empty: false,
        done: false,
    })
}

pub fn all_paths(n: usize) -> Result<Vec<SchroderPath>> {
    Ok(enumerate_paths(n, None)?.collect())
}

/// Depth-first enumeration; every weakly-above-diagonal prefix extends to a
/// complete path, so no dead ends occur.
pub struct PathIter {
    n: i64,
    hmax: Option<i64>,
    stack: Vec<Step>,
    x: i64,
    y: i64,
    emitted_empty: bool,
    done: bool,
}

impl PathIter {
    fn can_take(&self, s: Step) -> bool {
        match s {
            Step::Diag => self.x < self.n && self.y < self.n,
            Step::East => self.x < self.y,
            Step::North => {
                self.y < self.n && self.hmax.map_or(true, |h| self.y + 1 - self.x <= h)
            }
        }
    }

    fn push(&mut self, s: Step) {
        match s {
            Step::Diag => {
                self.x += 1;
                self.y += 1;
            }
            Step::East => self.x += 1,
            Step::North => self.y += 1,
        }
        self.stack.push(s);
    }

    /// Pops the last step and reports it, rewinding the endpoint.
    fn pop(&mut self) -> Option<Step> {
        let s = self.stack.pop()?;
        match s {
            Step::Diag => {
                self.x -= 1;
                self.y -= 1;
            }
            Step::East => self.x -= 1,
            Step::North => self.y -= 1,
        }
        Some(s)
    }
}

impl Iterator for PathIter {
    type Item = SchroderPath;

    fn next(&mut self) -> Option<SchroderPath> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            if self.emitted_empty {
                return None;
            }
            self.emitted_empty = true;
            return Some(SchroderPath::empty());
        }
        // Resume: if we just emitted a path, backtrack once first.
        let mut resume_from: Option<Step> = if self.x == self.n && self.y == self.n {
            self.pop()
        } else {
            None
        };
        loop {
            // Candidates after `resume_from` in the order D < E < N.
            let mut advanced = false;
            let candidates: &[Step] = match resume_from.take() {
                None => &[Step::Diag, Step::East, Step::North],
                Some(Step::Diag) => &[Step::East, Step::North],
                Some(Step::East) => &[Step::North],
                Some(Step::North) => &[],
            };
            for &s in candidates {
                if self.can_take(s) {
                    self.push(s);
                    advanced = true;
                    break;
                }
            }
            if advanced {
                if self.x == self.n && self.y == self.n {
                    return Some(SchroderPath { steps: self.stack.clone() });
                }
            } else {
                match self.pop() {
                    Some(s) => resume_from = Some(s),
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}

/// Generating polynomial, in `t` with `t^2 = x`, for paths of steps north,
/// east and diagonal that start at height `r`, end at height `s`, and keep
/// every point's height within `[0, k]`.  Each north or east step
/// contributes `t`, each diagonal step `t^2`, so the exponent of `t` is
/// twice the half-length statistic.  Truncated at degree `order`.
///
/// This dynamic program is the independent oracle for the transfer-matrix
/// minors in [`crate::formulas`].
pub fn gf_between_heights(r: u64, s: u64, k: u64, order: usize) -> Result<IntPoly> {
    if r > k || s > k {
        return Err(Error::HeightRange(format!("r = {r}, s = {s}, k = {k}")));
    }
    let width = k as usize + 1;
    // ways[h] = number of partial paths from r to height h with the current
    // t-degree; rolled over degree.
    let mut by_degree: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); width]; order + 1];
    by_degree[0][r as usize] = BigInt::from(1);
    for d in 0..order {
        for h in 0..width {
            if by_degree[d][h].is_zero() {
                continue;
            }
            let cur = by_degree[d][h].clone();
            if h + 1 < width {
                let t = &mut by_degree[d + 1][h + 1];
                *t += &cur; // north
            }
            if h >= 1 {
                let t = &mut by_degree[d + 1][h - 1];
                *t += &cur; // east
            }
            if d + 2 <= order {
                let t = &mut by_degree[d + 2][h];
                *t += &cur; // diagonal
            }
        }
    }
    let coeffs: Vec<BigInt> = by_degree.into_iter().map(|row| row[s as usize].clone()).collect();
    Ok(IntPoly::from_coeffs(coeffs))
}
