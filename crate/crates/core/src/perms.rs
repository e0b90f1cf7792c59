//! The tree-to-permutation bijection onto 132-avoiding permutations.
//!
//! Non-root vertices are labelled `n, n-1, ..., 1` in preorder and the
//! labels are read back in postorder. A vertex's label then exceeds every
//! label in later subtrees, and increasing subsequences correspond exactly
//! to vertex sets lying on one root-to-leaf path.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::trees::OrderedTree;
use crate::{Error, Result};

/// A permutation written as a word. Entries are distinct and positive; the
/// unshifted form holds exactly `1..=n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermWord(Vec<u32>);

impl PermWord {
    /// Accepts only permutations of `1..=n`.
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (i, &x) in word.iter().enumerate() {
            if x == 0 || x as usize > n {
                return Err(Error::NotPermutation {
                    n,
                    message: format!("entry {x} at position {} is out of range", i + 1),
                });
            }
            if std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::NotPermutation {
                    n,
                    message: format!("entry {x} repeats at position {}", i + 1),
                });
            }
        }
        Ok(PermWord(word))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Adds `k` to every entry.
    pub fn shift(&self, k: u32) -> PermWord {
        PermWord(self.0.iter().map(|x| x + k).collect())
    }

    /// Some 1-based `(i, j, k)` with `i < j < k` and `p(i) < p(k) < p(j)`.
    pub fn has_132(&self) -> Option<(usize, usize, usize)> {
        let w = &self.0;
        let mut min_pos = 0;
        for j in 1..w.len() {
            if w[j - 1] < w[min_pos] {
                min_pos = j - 1;
            }
            let (lo, hi) = (w[min_pos], w[j]);
            if lo >= hi {
                continue;
            }
            if let Some(k) = (j + 1..w.len()).find(|&k| lo < w[k] && w[k] < hi) {
                return Some((min_pos + 1, j + 1, k + 1));
            }
        }
        None
    }

    /// Number of strictly increasing subsequences of length `k`.
    pub fn count_increasing(&self, k: u32) -> Result<BigUint> {
        if k == 0 {
            return Err(Error::ZeroPatternLength);
        }
        let w = &self.0;
        let k = k as usize;
        // ending[i] = count of increasing subsequences of the current length ending at i
        let mut ending: Vec<BigUint> = vec![BigUint::from(1u32); w.len()];
        for _ in 1..k {
            let next: Vec<BigUint> = (0..w.len())
                .map(|i| {
                    (0..i)
                        .filter(|&h| w[h] < w[i])
                        .fold(BigUint::zero(), |acc, h| acc + &ending[h])
                })
                .collect();
            ending = next;
        }
        Ok(ending.into_iter().sum())
    }
}

impl fmt::Display for PermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for PermWord {
    type Err = Error;

    /// Comma- and/or whitespace-separated integers; a bare digit string
    /// such as `2314` is read one digit per entry (only unambiguous up to
    /// length 9).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let separated = s.contains(|c: char| c == ',' || c.is_whitespace());
        let word = if separated {
            let mut word = Vec::new();
            let mut position = 0;
            for tok in s.split(|c: char| c == ',' || c.is_whitespace()) {
                if !tok.is_empty() {
                    word.push(tok.parse::<u32>().map_err(|e| Error::Parse {
                        position,
                        message: format!("bad entry {tok:?}: {e}"),
                    })?);
                }
                position += tok.len() + 1;
            }
            word
        } else {
            if s.chars().count() > 9 {
                return Err(Error::Parse {
                    position: 9,
                    message: "contiguous digits are ambiguous beyond length 9; separate entries".into(),
                });
            }
            s.chars()
                .enumerate()
                .map(|(position, c)| {
                    c.to_digit(10).ok_or_else(|| Error::Parse {
                        position,
                        message: format!("unexpected character {c:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        PermWord::new(word)
    }
}

/// A non-root vertex with its preorder label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledVertex {
    pub label: u32,
    /// Label of the parent; `None` when the parent is the root.
    pub parent: Option<u32>,
    pub level: u32,
}

/// Non-root vertices in preorder, labelled `n, n-1, ..., 1`.
pub fn labeled_vertices(t: &OrderedTree) -> Vec<LabeledVertex> {
    fn walk(t: &OrderedTree, parent: Option<u32>, level: u32, next: &mut u32, out: &mut Vec<LabeledVertex>) {
        for c in t.children() {
            let label = *next;
            *next -= 1;
            out.push(LabeledVertex { label, parent, level: level + 1 });
            walk(c, Some(label), level + 1, next, out);
        }
    }
    let mut next = t.n_edges() as u32;
    let mut out = Vec::with_capacity(next as usize);
    walk(t, None, 0, &mut next, &mut out);
    out
}

/// Labels the tree in preorder and reads it in postorder.
pub fn tree_to_perm(t: &OrderedTree) -> PermWord {
    fn walk(t: &OrderedTree, next: &mut u32, out: &mut Vec<u32>) {
        for c in t.children() {
            let label = *next;
            *next -= 1;
            walk(c, next, out);
            out.push(label);
        }
    }
    let mut next = t.n_edges() as u32;
    let mut out = Vec::with_capacity(next as usize);
    walk(t, &mut next, &mut out);
    PermWord(out)
}

/// Decomposition of `pi(T)` along the root's subtrees `T_1 .. T_s`:
/// `pi(T) = pi(T_1, N_1) N_0 pi(T_2, N_2) N_1 ... pi(T_s, N_s) N_{s-1}` with
/// `N_0 = n` and `N_k = N_{k-1} - n_k - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatSplit {
    /// `N_0 ..= N_s`.
    pub offsets: Vec<u32>,
    /// `(pi(T_k, N_k), N_{k-1})` for each subtree.
    pub blocks: Vec<(PermWord, u32)>,
}

impl ConcatSplit {
    /// Builds the split using `sub` to produce each subtree's permutation.
    pub fn with<F>(t: &OrderedTree, mut sub: F) -> Self
    where
        F: FnMut(&OrderedTree) -> PermWord,
    {
        let mut offsets = vec![t.n_edges() as u32];
        let mut blocks = Vec::with_capacity(t.children().len());
        for c in t.children() {
            let prev = *offsets.last().expect("N_0 present");
            let offset = prev - c.n_edges() as u32 - 1;
            offsets.push(offset);
            blocks.push((sub(c).shift(offset), prev));
        }
        ConcatSplit { offsets, blocks }
    }

    pub fn of(t: &OrderedTree) -> Self {
        Self::with(t, tree_to_perm)
    }

    pub fn reconstitute(&self) -> PermWord {
        let mut word = Vec::new();
        for (block, sep) in &self.blocks {
            word.extend_from_slice(block.as_slice());
            word.push(*sep);
        }
        PermWord(word)
    }
}

/// `pi(T)` built purely from the subtree concatenation rule.
pub fn perm_via_concat(t: &OrderedTree) -> PermWord {
    ConcatSplit::with(t, perm_via_concat).reconstitute()
}

/// Inverse of [`tree_to_perm`] on 132-avoiding permutations.
///
/// The maximum entry is the first subtree's root label; everything before it
/// is that subtree's permutation shifted by a constant. Peeling blocks off
/// this way rebuilds the root's children left to right.
pub fn perm_to_tree(p: &PermWord) -> Result<OrderedTree> {
    if let Some(w) = p.has_132() {
        return Err(Error::Contains132(w));
    }
    fn build(word: &[u32]) -> OrderedTree {
        let mut children = Vec::new();
        let mut rest = word;
        while !rest.is_empty() {
            let (pos, _) = rest
                .iter()
                .enumerate()
                .max_by_key(|(_, &x)| x)
                .expect("nonempty");
            let block = &rest[..pos];
            let base = block.iter().min().map_or(0, |m| m - 1);
            let shifted: Vec<u32> = block.iter().map(|x| x - base).collect();
            children.push(build(&shifted));
            rest = &rest[pos + 1..];
        }
        OrderedTree::from_children(children)
    }
    let tree = build(p.as_slice());
    debug_assert_eq!(&tree_to_perm(&tree), p);
    Ok(tree)
}

/// Increasing patterns of length `k` read off the tree:
/// `sum_v C(level(v) - 1, k - 1)`.
pub fn count_increasing_via_tree(t: &OrderedTree, k: u32) -> Result<u64> {
    t.binom_level_sum(k)
}

/// Number of `k`-subsets of non-root vertices that lie on a single
/// root-to-leaf path, counted by chain extension rather than binomials.
pub fn root_to_leaf_subset_count(t: &OrderedTree, k: u32) -> Result<u64> {
    if k == 0 {
        return Err(Error::ZeroPatternLength);
    }
    let k = k as usize;
    // along_path[j] = number of (j+1)-chains whose deepest vertex is on the current root path
    fn walk(t: &OrderedTree, k: usize, along_path: &mut Vec<u64>, total: &mut u64) {
        for c in t.children() {
            // chains ending at c: c alone, or c appended to a chain above it
            let mut ending = vec![0u64; k];
            ending[0] = 1;
            ending[1..k].copy_from_slice(&along_path[..k - 1]);
            *total += ending[k - 1];
            for j in 0..k {
                along_path[j] += ending[j];
            }
            walk(c, k, along_path, total);
            for j in 0..k {
                along_path[j] -= ending[j];
            }
        }
    }
    let mut along_path = vec![0u64; k];
    let mut total = 0;
    walk(t, k, &mut along_path, &mut total);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::generate_trees;
    use std::collections::BTreeSet;

    fn w(s: &str) -> PermWord {
        s.parse().unwrap()
    }

    #[test]
    fn tree_to_perm_examples() {
        assert_eq!(tree_to_perm(&OrderedTree::chain(3)), w("123"));
        assert_eq!(tree_to_perm(&OrderedTree::star(3)), w("321"));
        assert_eq!(tree_to_perm(&OrderedTree::root()), PermWord::default());
        let all: BTreeSet<String> = generate_trees(3).map(|t| tree_to_perm(&t).to_string()).collect();
        let want: BTreeSet<String> = ["1 2 3", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]
            .into_iter()
            .map(String::from)
            .collect();
        assert_eq!(all, want);
    }

    #[test]
    fn shifts() {
        assert_eq!(w("123").shift(1).as_slice(), &[2, 3, 4]);
        assert_eq!(w("213").shift(0), w("213"));
        assert!(PermWord::default().shift(5).is_empty());
    }

    #[test]
    fn perm_to_tree_examples() {
        assert_eq!(perm_to_tree(&w("123")).unwrap(), OrderedTree::chain(3));
        assert_eq!(perm_to_tree(&w("321")).unwrap(), OrderedTree::star(3));
        assert_eq!(perm_to_tree(&PermWord::default()).unwrap(), OrderedTree::root());
    }

    #[test]
    fn perm_to_tree_rejects_132() {
        assert_eq!(perm_to_tree(&w("132")), Err(Error::Contains132((1, 2, 3))));
        assert_eq!(perm_to_tree(&w("4132")), Err(Error::Contains132((2, 3, 4))));
    }

    #[test]
    fn non_permutations_are_usage_errors() {
        assert!(matches!("1 3".parse::<PermWord>(), Err(Error::NotPermutation { .. })));
        assert!(matches!("1,1".parse::<PermWord>(), Err(Error::NotPermutation { .. })));
        assert!(matches!("0 1".parse::<PermWord>(), Err(Error::NotPermutation { .. })));
        assert!(matches!("12a".parse::<PermWord>(), Err(Error::Parse { position: 2, .. })));
        assert!(matches!("1234567891".parse::<PermWord>(), Err(Error::Parse { .. })));
        assert_eq!("10, 9 8 7 6 5 4 3 2 1".parse::<PermWord>().unwrap().len(), 10);
    }

    #[test]
    fn has_132_examples() {
        assert_eq!(w("132").has_132(), Some((1, 2, 3)));
        assert_eq!(w("123").has_132(), None);
        for n in 0..=8 {
            for t in generate_trees(n) {
                assert_eq!(tree_to_perm(&t).has_132(), None, "{t}");
            }
        }
    }

    #[test]
    fn count_increasing_examples() {
        assert_eq!(w("123").count_increasing(3).unwrap(), BigUint::from(1u32));
        assert_eq!(w("123").count_increasing(2).unwrap(), BigUint::from(3u32));
        assert_eq!(w("321").count_increasing(2).unwrap(), BigUint::zero());
        assert_eq!(w("321").count_increasing(0), Err(Error::ZeroPatternLength));
    }

    #[test]
    fn tree_side_counts() {
        assert_eq!(count_increasing_via_tree(&OrderedTree::chain(3), 3).unwrap(), 1);
        assert_eq!(count_increasing_via_tree(&OrderedTree::star(3), 3).unwrap(), 0);
        assert_eq!(root_to_leaf_subset_count(&OrderedTree::chain(3), 2).unwrap(), 3);
        assert_eq!(root_to_leaf_subset_count(&OrderedTree::star(3), 2).unwrap(), 0);
        for t in generate_trees(4) {
            assert_eq!(count_increasing_via_tree(&t, 1).unwrap(), 4);
            assert_eq!(root_to_leaf_subset_count(&t, 1).unwrap(), 4);
        }
    }

    #[test]
    fn concat_split_offsets() {
        // root with subtrees of 1, 0 and 2 edges
        let t: OrderedTree = "(())()((()))".parse().unwrap();
        let split = ConcatSplit::of(&t);
        assert_eq!(split.offsets, [6, 4, 3, 0]);
        assert_eq!(*split.offsets.last().unwrap(), 0);
        assert_eq!(split.reconstitute(), tree_to_perm(&t));
        assert_eq!(perm_via_concat(&t), tree_to_perm(&t));
    }

    #[test]
    fn labels_follow_preorder() {
        let t: OrderedTree = "(())()".parse().unwrap();
        let labels = labeled_vertices(&t);
        assert_eq!(
            labels,
            [
                LabeledVertex { label: 3, parent: None, level: 1 },
                LabeledVertex { label: 2, parent: Some(3), level: 2 },
                LabeledVertex { label: 1, parent: None, level: 1 },
            ]
        );
    }
}
