//! Steps, the four path families, and validated lattice paths.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One lattice step. `Up(j)` is `(1, +j)`, `Down(j)` is `(1, -j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    Up(u32),
    Down(u32),
    Flat,
}

impl Step {
    pub fn rise(self) -> i64 {
        match self {
            Step::Up(j) => i64::from(j),
            Step::Down(j) => -i64::from(j),
            Step::Flat => 0,
        }
    }

    pub fn class(self) -> StepClass {
        match self {
            Step::Up(_) => StepClass::U,
            Step::Down(_) => StepClass::D,
            Step::Flat => StepClass::H,
        }
    }

    /// The step seen when the path is read right to left.
    pub fn mirrored(self) -> Step {
        match self {
            Step::Up(j) => Step::Down(j),
            Step::Down(j) => Step::Up(j),
            Step::Flat => Step::Flat,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Step::Up(1) => write!(f, "U"),
            Step::Up(j) => write!(f, "U{j}"),
            Step::Down(1) => write!(f, "D"),
            Step::Down(j) => write!(f, "D{j}"),
            Step::Flat => write!(f, "H"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StepClass {
    Empty,
    U,
    D,
    H,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    M1,
    M2,
    M1R,
    M2R,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::M1, Family::M2, Family::M1R, Family::M2R];

    pub fn tag(self) -> &'static str {
        match self {
            Family::M1 => "m1",
            Family::M2 => "m2",
            Family::M1R => "m1r",
            Family::M2R => "m2r",
        }
    }

    /// True for the right-to-left families, whose rows are infinite.
    pub fn is_reversed(self) -> bool {
        matches!(self, Family::M1R | Family::M2R)
    }

    pub fn mirror(self) -> Family {
        match self {
            Family::M1 => Family::M1R,
            Family::M1R => Family::M1,
            Family::M2 => Family::M2R,
            Family::M2R => Family::M2,
        }
    }

    pub fn step_allowed(self, step: Step) -> bool {
        match step {
            Step::Up(0) | Step::Down(0) => false,
            Step::Flat => true,
            Step::Up(j) => j == 1 || self.is_reversed(),
            Step::Down(j) => j == 1 || !self.is_reversed(),
        }
    }

    /// Symmetric pair rule: no `D D` in M1, no `U U` in M1R.
    pub fn adjacency_ok(self, prev: Step, next: Step) -> bool {
        match self {
            Family::M1 => !(matches!(prev, Step::Down(_)) && matches!(next, Step::Down(_))),
            Family::M1R => !(matches!(prev, Step::Up(_)) && matches!(next, Step::Up(_))),
            Family::M2 | Family::M2R => true,
        }
    }

    /// Positional rule on a consecutive pair. M2: a down or flat step must be
    /// followed by `U`. M2R: an up or flat step must be preceded by `D`.
    pub fn positional_ok(self, prev: Step, next: Step) -> bool {
        match self {
            Family::M2 => matches!(prev, Step::Up(_)) || next == Step::Up(1),
            Family::M2R => matches!(next, Step::Down(_)) || prev == Step::Down(1),
            Family::M1 | Family::M1R => true,
        }
    }

    /// Whether `next` may follow `prev` (or start the path when `prev` is
    /// `None`) under the pair rules alone.
    pub fn may_follow(self, prev: Option<Step>, next: Step) -> bool {
        match prev {
            None => true,
            Some(p) => self.adjacency_ok(p, next) && self.positional_ok(p, next),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "m1" => Ok(Family::M1),
            "m2" => Ok(Family::M2),
            "m1r" => Ok(Family::M1R),
            "m2r" => Ok(Family::M2R),
            other => Err(format!("unknown family '{other}' (expected m1, m2, m1r or m2r)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("step {0} goes below the x-axis")]
    NegativeHeight(usize),
    #[error("step {0} is not in the family alphabet")]
    IllegalStep(usize),
    #[error("steps {0} and {next} may not be consecutive", next = .0 + 1)]
    AdjacencyViolation(usize),
    #[error("step {0} violates the positional rule")]
    PositionalViolation(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("bad token '{token}' at position {position}")]
    Syntax { position: usize, token: String },
    #[error(transparent)]
    Invalid(#[from] PathError),
}

/// A validated path together with its height profile (`heights[0] = 0`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    family: Family,
    steps: Vec<Step>,
    heights: Vec<i64>,
}

impl LatticePath {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end_height(&self) -> i64 {
        *self.heights.last().expect("heights always holds the origin")
    }

    pub fn last_step_class(&self) -> StepClass {
        last_step_class(self)
    }

    /// The path read right to left, as a member of the mirror family.
    /// Only paths ending on the x-axis stay nonnegative.
    pub fn reversed(&self) -> Result<LatticePath, PathError> {
        let steps: Vec<Step> = self.steps.iter().rev().map(|s| s.mirrored()).collect();
        validate_path(self.family.mirror(), &steps)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_path(self))
    }
}

/// Checks `steps` against the family rules, scanning left to right and
/// reporting the first violation. Adjacency violations and M2's positional
/// rule are reported at the earlier step of the offending pair; M2R's
/// positional rule is reported at the up or flat step lacking its `D`.
pub fn validate_path(family: Family, steps: &[Step]) -> Result<LatticePath, PathError> {
    let mut heights = Vec::with_capacity(steps.len() + 1);
    heights.push(0i64);
    let mut h = 0i64;
    for (i, &step) in steps.iter().enumerate() {
        if !family.step_allowed(step) {
            return Err(PathError::IllegalStep(i));
        }
        if i > 0 {
            let prev = steps[i - 1];
            if !family.adjacency_ok(prev, step) {
                return Err(PathError::AdjacencyViolation(i - 1));
            }
            if !family.positional_ok(prev, step) {
                let at = if family == Family::M2 { i - 1 } else { i };
                return Err(PathError::PositionalViolation(at));
            }
        }
        h += step.rise();
        if h < 0 {
            return Err(PathError::NegativeHeight(i));
        }
        heights.push(h);
    }
    Ok(LatticePath { family, steps: steps.to_vec(), heights })
}

pub fn last_step_class(path: &LatticePath) -> StepClass {
    path.steps.last().map_or(StepClass::Empty, |s| s.class())
}

fn parse_token(position: usize, token: &str) -> Result<Step, ParseError> {
    let bad = || ParseError::Syntax { position, token: token.to_string() };
    if token == "H" {
        return Ok(Step::Flat);
    }
    let (head, rest) = token.split_at(token.find(|c: char| !c.is_ascii_uppercase()).unwrap_or(token.len()));
    let j = if rest.is_empty() {
        1
    } else {
        if !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        rest.parse::<u32>().map_err(|_| bad())?
    };
    if j == 0 {
        return Err(bad());
    }
    match head {
        "U" => Ok(Step::Up(j)),
        "D" => Ok(Step::Down(j)),
        _ => Err(bad()),
    }
}

/// Parses whitespace-separated tokens `U`, `Uk`, `D`, `Dk`, `H`.
pub fn parse_path(family: Family, text: &str) -> Result<LatticePath, ParseError> {
    let steps = text
        .split_whitespace()
        .enumerate()
        .map(|(i, t)| parse_token(i, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(validate_path(family, &steps)?)
}

pub fn render_path(path: &LatticePath) -> String {
    render_steps(&path.steps)
}

pub fn render_steps(steps: &[Step]) -> String {
    steps.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}
