//! Dyck paths as E/N step words and the preorder bijection with ordered
//! trees: descending an edge is an east step, climbing back is a north step.

use std::fmt;
use std::str::FromStr;

use crate::trees::{binomial, OrderedTree};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    /// `(1, 0)`
    E,
    /// `(0, 1)`
    N,
}

impl Step {
    /// `E`/`N`, plus the aliases `R`/`U` (right/up) and `1`/`0`.
    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'E' | 'e' | 'R' | 'r' | '1' => Some(Step::E),
            'N' | 'n' | 'U' | 'u' | '0' => Some(Step::N),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }
}

/// A lattice path from `(0,0)` to `(n,n)` that never rises above `y = x`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    /// Checks the step word; on failure reports the first offending index.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::E { 1 } else { -1 };
            if height < 0 {
                return Err(Error::Parse {
                    position: i,
                    message: "prefix has more N than E steps".into(),
                });
            }
        }
        if height != 0 {
            return Err(Error::Parse {
                position: steps.len(),
                message: format!("path ends {height} steps below the diagonal"),
            });
        }
        Ok(DyckPath(steps))
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    /// Unit squares under the path and above the x-axis: each E step
    /// contributes the number of N steps before it.
    pub fn area(&self) -> u64 {
        let mut norths = 0u64;
        let mut area = 0u64;
        for s in &self.0 {
            match s {
                Step::E => area += norths,
                Step::N => norths += 1,
            }
        }
        area
    }

    pub fn from_tree(t: &OrderedTree) -> Self {
        fn walk(t: &OrderedTree, out: &mut Vec<Step>) {
            for c in t.children() {
                out.push(Step::E);
                walk(c, out);
                out.push(Step::N);
            }
        }
        let mut steps = Vec::with_capacity(2 * t.n_edges());
        walk(t, &mut steps);
        DyckPath(steps)
    }

    pub fn to_tree(&self) -> OrderedTree {
        let mut stack: Vec<Vec<OrderedTree>> = vec![Vec::new()];
        for s in &self.0 {
            match s {
                Step::E => stack.push(Vec::new()),
                Step::N => {
                    let done = stack.pop().expect("validated path");
                    stack
                        .last_mut()
                        .expect("validated path")
                        .push(OrderedTree::from_children(done));
                }
            }
        }
        OrderedTree::from_children(stack.pop().expect("validated path"))
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|s| s.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .enumerate()
            .map(|(position, c)| {
                Step::from_char(c).ok_or_else(|| Error::Parse {
                    position,
                    message: format!("unexpected step {c:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        DyckPath::new(steps)
    }
}

pub fn tree_to_path(t: &OrderedTree) -> DyckPath {
    DyckPath::from_tree(t)
}

pub fn path_to_tree(p: &DyckPath) -> OrderedTree {
    p.to_tree()
}

/// Area of the tree's path computed from levels alone:
/// `C(n+1, 2) - sum_v level(v)`.
pub fn area_via_levels(t: &OrderedTree) -> u64 {
    let n = t.n_edges() as u64;
    binomial(n + 1, 2) - t.level_sum()
}

/// All Dyck paths of semilength `n`, E before N at every branch.
pub fn generate_paths(n: usize) -> Vec<DyckPath> {
    fn go(n: usize, e: usize, north: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if e == n && north == n {
            out.push(DyckPath(cur.clone()));
            return;
        }
        if e < n {
            cur.push(Step::E);
            go(n, e + 1, north, cur, out);
            cur.pop();
        }
        if north < e {
            cur.push(Step::N);
            go(n, e, north + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}
