//! Exhaustive generation and counting of paths by length, end height and
//! last-step class.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::path::{validate_path, Family, LatticePath, Step, StepClass};

/// Lazy depth-first stream of all paths of length `n` ending at height at most
/// `k_cap`, in lexicographic step order.
pub struct PathIter {
    family: Family,
    n: usize,
    k_cap: i64,
    steps: Vec<Step>,
    heights: Vec<i64>,
    stack: Vec<(Vec<Step>, usize)>,
    started: bool,
    finished: bool,
}

impl PathIter {
    fn candidates(&self) -> Vec<Step> {
        let h = *self.heights.last().expect("origin is always present");
        let rem = (self.n - self.steps.len() - 1) as i64;
        let prev = self.steps.last().copied();
        let mut out = Vec::new();
        if self.family.is_reversed() {
            // later downs are unit steps, so a jump above k_cap + rem is dead
            let max_up = self.k_cap + rem - h;
            for j in 1..=max_up.max(0) {
                out.push(Step::Up(j as u32));
            }
            if h >= 1 {
                out.push(Step::Down(1));
            }
        } else {
            out.push(Step::Up(1));
            for j in 1..=h {
                out.push(Step::Down(j as u32));
            }
        }
        out.push(Step::Flat);
        out.retain(|&s| self.family.may_follow(prev, s));
        out
    }

    fn current_path(&self) -> LatticePath {
        validate_path(self.family, &self.steps).expect("generator only extends by legal steps")
    }
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.finished {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n == 0 {
                self.finished = true;
                return (self.k_cap >= 0).then(|| self.current_path());
            }
            let c = self.candidates();
            self.stack.push((c, 0));
        }
        loop {
            let Some(top) = self.stack.last_mut() else {
                self.finished = true;
                return None;
            };
            if top.1 >= top.0.len() {
                self.stack.pop();
                self.steps.pop();
                self.heights.pop();
                continue;
            }
            let step = top.0[top.1];
            top.1 += 1;
            let h = self.heights.last().expect("origin") + step.rise();
            self.steps.push(step);
            self.heights.push(h);
            if self.steps.len() == self.n {
                let out = (h <= self.k_cap).then(|| self.current_path());
                self.steps.pop();
                self.heights.pop();
                if out.is_some() {
                    return out;
                }
            } else {
                let c = self.candidates();
                self.stack.push((c, 0));
            }
        }
    }
}

pub fn enumerate_paths(family: Family, n: usize, k_cap: usize) -> PathIter {
    PathIter {
        family,
        n,
        k_cap: k_cap as i64,
        steps: Vec::with_capacity(n),
        heights: vec![0],
        stack: Vec::new(),
        started: false,
        finished: false,
    }
}

/// Path counts split by last-step class; the empty path sits in `f`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassCounts {
    pub f: BigInt,
    pub g: BigInt,
    pub h: BigInt,
}

impl ClassCounts {
    pub fn total(&self) -> BigInt {
        &self.f + &self.g + &self.h
    }

    fn bump(&mut self, class: StepClass, by: &BigInt) {
        match class {
            StepClass::Empty | StepClass::U => self.f += by,
            StepClass::D => self.g += by,
            StepClass::H => self.h += by,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub family: Family,
    pub n_max: usize,
    pub k_max: usize,
    pub counts: Vec<Vec<BigInt>>,
    pub by_class: Vec<Vec<ClassCounts>>,
}

impl CountTable {
    pub fn get(&self, n: usize, k: usize) -> &BigInt {
        &self.counts[n][k]
    }
}

const CLASSES: [StepClass; 4] = [StepClass::Empty, StepClass::U, StepClass::D, StepClass::H];

fn class_index(c: StepClass) -> usize {
    match c {
        StepClass::Empty => 0,
        StepClass::U => 1,
        StepClass::D => 2,
        StepClass::H => 3,
    }
}

fn representative(c: StepClass) -> Option<Step> {
    match c {
        StepClass::Empty => None,
        StepClass::U => Some(Step::Up(1)),
        StepClass::D => Some(Step::Down(1)),
        StepClass::H => Some(Step::Flat),
    }
}

/// Counts by forward dynamic programming over (height, last-step class)
/// states. The pair rules of every family depend on the previous step only
/// through its class, so a class representative decides each transition.
pub fn count_table(family: Family, n_max: usize, k_max: usize) -> CountTable {
    let reversed = family.is_reversed();
    // heights above k_max + (steps left) can never come back under k_max
    let cap = |len: usize| if reversed { k_max + (n_max - len) } else { len };
    let mut cur: Vec<[BigInt; 4]> = vec![Default::default(); cap(0) + 1];
    cur[0][0] = BigInt::from(1);
    let mut counts = Vec::with_capacity(n_max + 1);
    let mut by_class = Vec::with_capacity(n_max + 1);
    for len in 0..=n_max {
        let mut row_c = vec![ClassCounts::default(); k_max + 1];
        for (h, cell) in cur.iter().enumerate().take(k_max + 1) {
            for (ci, &class) in CLASSES.iter().enumerate() {
                row_c[h].bump(class, &cell[ci]);
            }
        }
        counts.push(row_c.iter().map(ClassCounts::total).collect());
        by_class.push(row_c);
        if len == n_max {
            break;
        }
        let next_cap = cap(len + 1);
        let mut next: Vec<[BigInt; 4]> = vec![Default::default(); next_cap + 1];
        for (h, cell) in cur.iter().enumerate() {
            for (ci, &class) in CLASSES.iter().enumerate() {
                let c = &cell[ci];
                if c.is_zero() {
                    continue;
                }
                let prev = representative(class);
                let mut push = |step: Step| {
                    if !family.may_follow(prev, step) {
                        return;
                    }
                    let nh = h as i64 + step.rise();
                    if nh < 0 || nh as usize > next_cap {
                        return;
                    }
                    next[nh as usize][class_index(step.class())] += c;
                };
                if reversed {
                    for j in 1..=(next_cap.saturating_sub(h)) {
                        push(Step::Up(j as u32));
                    }
                    push(Step::Down(1));
                } else {
                    push(Step::Up(1));
                    for j in 1..=h {
                        push(Step::Down(j as u32));
                    }
                }
                push(Step::Flat);
            }
        }
        cur = next;
    }
    CountTable { family, n_max, k_max, counts, by_class }
}

/// Number of paths ending on the line `y = n - x`.
pub fn antidiagonal_count(family: Family, n: usize) -> BigInt {
    let t = count_table(family, n, n);
    (0..=n).map(|x| t.counts[x][n - x].clone()).sum()
}
