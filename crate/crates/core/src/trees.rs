//! Ordered (plane) trees: exhaustive generation by edge count, the
//! balanced-parentheses encoding and the per-level vertex statistics.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::{Error, Result};

/// A rooted tree whose children are ordered left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedTree {
    children: Vec<OrderedTree>,
}

impl OrderedTree {
    /// The bare root (zero edges).
    pub fn root() -> Self {
        Self::default()
    }

    pub fn from_children(children: Vec<OrderedTree>) -> Self {
        OrderedTree { children }
    }

    /// A single chain of `n` edges.
    pub fn chain(n: usize) -> Self {
        (0..n).fold(Self::root(), |t, _| Self::from_children(vec![t]))
    }

    /// A root with `n` leaf children.
    pub fn star(n: usize) -> Self {
        Self::from_children(vec![Self::root(); n])
    }

    pub fn children(&self) -> &[OrderedTree] {
        &self.children
    }

    pub fn into_children(self) -> Vec<OrderedTree> {
        self.children
    }

    pub fn n_edges(&self) -> usize {
        self.children.iter().map(|c| 1 + c.n_edges()).sum()
    }

    /// Levels of the non-root vertices in preorder.
    pub fn preorder_levels(&self) -> Vec<u32> {
        fn walk(t: &OrderedTree, level: u32, out: &mut Vec<u32>) {
            for c in &t.children {
                out.push(level + 1);
                walk(c, level + 1, out);
            }
        }
        let mut out = Vec::new();
        walk(self, 0, &mut out);
        out
    }

    pub fn level_profile(&self) -> LevelProfile {
        let mut counts: Vec<u32> = Vec::new();
        for level in self.preorder_levels() {
            let idx = level as usize - 1;
            if counts.len() <= idx {
                counts.resize(idx + 1, 0);
            }
            counts[idx] += 1;
        }
        LevelProfile(counts)
    }

    /// Sum of the levels of all vertices (the root contributes 0).
    pub fn level_sum(&self) -> u64 {
        self.preorder_levels().iter().map(|&l| u64::from(l)).sum()
    }

    /// `sum_v C(level(v) - 1, k - 1)` over non-root vertices.
    pub fn binom_level_sum(&self, k: u32) -> Result<u64> {
        if k == 0 {
            return Err(Error::ZeroPatternLength);
        }
        Ok(self
            .preorder_levels()
            .iter()
            .map(|&l| binomial(u64::from(l) - 1, u64::from(k) - 1))
            .sum())
    }

    /// `(` on each descent, `)` on each ascent, in preorder.
    pub fn encode(&self) -> String {
        fn walk(t: &OrderedTree, out: &mut String) {
            for c in &t.children {
                out.push('(');
                walk(c, out);
                out.push(')');
            }
        }
        let mut out = String::with_capacity(2 * self.n_edges());
        walk(self, &mut out);
        out
    }

    pub fn decode(s: &str) -> Result<Self> {
        // stack of partially built child lists; bottom is the root's
        let mut stack: Vec<Vec<OrderedTree>> = vec![Vec::new()];
        for (position, ch) in s.chars().enumerate() {
            match ch {
                '(' => stack.push(Vec::new()),
                ')' => {
                    if stack.len() == 1 {
                        return Err(Error::Parse {
                            position,
                            message: "unmatched ')'".into(),
                        });
                    }
                    let done = stack.pop().expect("nonempty stack");
                    stack
                        .last_mut()
                        .expect("root frame")
                        .push(OrderedTree::from_children(done));
                }
                other => {
                    return Err(Error::Parse {
                        position,
                        message: format!("unexpected character {other:?}"),
                    })
                }
            }
        }
        if stack.len() != 1 {
            return Err(Error::Parse {
                position: s.chars().count(),
                message: format!("{} unclosed '('", stack.len() - 1),
            });
        }
        Ok(OrderedTree::from_children(stack.pop().expect("root frame")))
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for OrderedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::decode(s)
    }
}

/// `counts[k]` is the number of vertices at level `k + 1`. Empty for the
/// bare root; otherwise no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LevelProfile(pub Vec<u32>);

impl LevelProfile {
    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn n_edges(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for LevelProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Streams every ordered tree on `n` edges exactly once.
///
/// Order: the `n - 1` edges below the first child of the root are split as
/// `i` in the first subtree and `n - 1 - i` in the remaining forest, `i`
/// ascending; within a split, first subtrees vary slowest.
pub fn generate_trees(n: usize) -> Trees {
    Trees::new(n)
}

pub struct Trees {
    n: usize,
    done: bool,
    split: Option<Split>,
}

struct Split {
    first_edges: usize,
    firsts: Box<Trees>,
    first: OrderedTree,
    rests: Box<Trees>,
}

impl Trees {
    fn new(n: usize) -> Self {
        Trees {
            n,
            done: false,
            split: None,
        }
    }

    fn start_split(&self, first_edges: usize) -> Split {
        let mut firsts = Box::new(Trees::new(first_edges));
        let first = firsts.next().expect("at least one tree per size");
        Split {
            first_edges,
            firsts,
            first,
            rests: Box::new(Trees::new(self.n - 1 - first_edges)),
        }
    }
}

impl Iterator for Trees {
    type Item = OrderedTree;

    fn next(&mut self) -> Option<OrderedTree> {
        if self.done {
            return None;
        }
        if self.n == 0 {
            self.done = true;
            return Some(OrderedTree::root());
        }
        if self.split.is_none() {
            self.split = Some(self.start_split(0));
        }
        loop {
            let split = self.split.as_mut().expect("split initialised");
            if let Some(rest) = split.rests.next() {
                let mut children = Vec::with_capacity(1 + rest.children.len());
                children.push(split.first.clone());
                children.extend(rest.children);
                return Some(OrderedTree::from_children(children));
            }
            if let Some(first) = split.firsts.next() {
                split.first = first;
                *split.rests = Trees::new(self.n - 1 - split.first_edges);
                continue;
            }
            let next_edges = split.first_edges + 1;
            if next_edges == self.n {
                self.done = true;
                self.split = None;
                return None;
            }
            self.split = Some(self.start_split(next_edges));
        }
    }
}

/// Binomial coefficient by Pascal's rule; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as usize;
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for i in 1..=n as usize {
        for j in (1..=k.min(i)).rev() {
            row[j] = row[j]
                .checked_add(row[j - 1])
                .expect("binomial coefficient overflows u64");
        }
    }
    row[k]
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> BigUint {
    let mut c = BigUint::from(1u32);
    for i in 0..n {
        c = c * (2 * (2 * i + 1)) / (i + 2);
    }
    c
}
