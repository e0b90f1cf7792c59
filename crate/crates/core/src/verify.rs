//! Exhaustive checks of the generating-function identities and bijections.
//!
//! Each check walks every object up to `max_edges` and stops at the first
//! disagreement, returning it as a [`Counterexample`] rendered with the
//! canonical encodings.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use clap::ValueEnum;
use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::contfrac::{eval_cf_default, LevelWeights};
use crate::paths::{area_via_levels, generate_paths, path_to_tree, tree_to_path};
use crate::perms::{
    count_increasing_via_tree, labeled_vertices, perm_to_tree, perm_via_concat, root_to_leaf_subset_count,
    tree_to_perm, ConcatSplit, PermWord,
};
use crate::series::Monomial;
use crate::trees::{binomial, catalan, generate_trees, OrderedTree};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// Level-profile census against the multivariate fraction.
    Theorem1,
    /// Path area against the level-sum formula.
    Lemma2,
    /// Area polynomials against the `z q^l` fraction.
    Theorem3,
    /// Permutation against the subtree concatenation rule.
    Lemma3,
    /// Increasing label subsets against root-to-leaf vertex subsets.
    Lemma4,
    /// Increasing-pattern counts against level binomial sums.
    Theorem5,
    /// 132-avoiders by increasing patterns against the `z q^C(l-1,k-1)` fraction.
    Corollary6,
    /// Round trips between trees, paths and permutations.
    Bijections,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Theorem1,
        Check::Lemma2,
        Check::Theorem3,
        Check::Lemma3,
        Check::Lemma4,
        Check::Theorem5,
        Check::Corollary6,
        Check::Bijections,
    ];

    /// Pattern lengths checked when none is given.
    pub fn default_ks(self) -> Vec<u32> {
        match self {
            Check::Lemma4 => (1..=4).collect(),
            Check::Theorem5 => (1..=5).collect(),
            Check::Corollary6 => (2..=5).collect(),
            _ => Vec::new(),
        }
    }

    pub fn uses_k(self) -> bool {
        !self.default_ks().is_empty()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

/// Objects examined at one size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeReport {
    pub n: usize,
    pub k: Option<u32>,
    pub checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: Check,
    pub max_edges: usize,
    pub sizes: Vec<SizeReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: Check,
    pub n: usize,
    pub k: Option<u32>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed at n={}", self.check, self.n)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug)]
pub enum Outcome {
    Passed(CheckReport),
    Failed(Counterexample),
}

type Step = std::result::Result<u64, String>;

/// Runs `check` for every size up to `max_edges` and each requested `k`
/// (ignored by checks that take none; defaults apply when `ks` is empty).
pub fn run_check(check: Check, max_edges: usize, ks: &[u32]) -> Result<Outcome> {
    let ks: Vec<u32> = if !check.uses_k() {
        Vec::new()
    } else if ks.is_empty() {
        check.default_ks()
    } else {
        ks.to_vec()
    };
    if ks.contains(&0) {
        return Err(Error::ZeroPatternLength);
    }
    let mut sizes = Vec::new();
    let k_options: Vec<Option<u32>> = if ks.is_empty() { vec![None] } else { ks.into_iter().map(Some).collect() };
    for n in 0..=max_edges {
        for &k in &k_options {
            let step = match (check, k) {
                (Check::Theorem1, _) => theorem1(n)?,
                (Check::Lemma2, _) => lemma2(n),
                (Check::Theorem3, _) => theorem3(n)?,
                (Check::Lemma3, _) => lemma3(n),
                (Check::Lemma4, Some(k)) => lemma4(n, k),
                (Check::Theorem5, Some(k)) => theorem5(n, k)?,
                (Check::Corollary6, Some(k)) => corollary6(n, k)?,
                (Check::Bijections, _) => bijections(n)?,
                (_, None) => unreachable!("k-checks always receive a k"),
            };
            match step {
                Ok(checked) => sizes.push(SizeReport { n, k, checked }),
                Err(detail) => return Ok(Outcome::Failed(Counterexample { check, n, k, detail })),
            }
        }
    }
    Ok(Outcome::Passed(CheckReport { check, max_edges, sizes }))
}

/// Level-profile census of all trees on `n` edges.
pub fn profile_census(n: usize) -> BTreeMap<Vec<u32>, u64> {
    let mut census = BTreeMap::new();
    for t in generate_trees(n) {
        *census.entry(t.level_profile().0).or_insert(0) += 1;
    }
    census
}

fn theorem1(n: usize) -> Result<Step> {
    let cf = eval_cf_default(&LevelWeights::Multivariate, n as u32)?;
    let census = profile_census(n);
    let from_cf: BTreeMap<Vec<u32>, BigInt> = cf
        .terms()
        .filter(|(m, _)| m.z_deg() as usize == n)
        .map(|(m, c)| (m.v_degs().to_vec(), c.clone()))
        .collect();
    let from_trees: BTreeMap<Vec<u32>, BigInt> =
        census.iter().map(|(p, c)| (p.clone(), BigInt::from(*c))).collect();
    if from_cf != from_trees {
        let bad = from_trees
            .keys()
            .chain(from_cf.keys())
            .find(|p| from_cf.get(*p) != from_trees.get(*p))
            .expect("maps differ");
        return Ok(Err(format!(
            "monomial {}: fraction gives {}, trees give {}",
            Monomial::from_level_profile(bad),
            from_cf.get(bad).map_or("0".into(), BigInt::to_string),
            from_trees.get(bad).map_or("0".into(), BigInt::to_string),
        )));
    }
    Ok(Ok(census.values().sum()))
}

fn lemma2(n: usize) -> Step {
    let mut count = 0;
    for t in generate_trees(n) {
        let direct = tree_to_path(&t).area();
        let formula = area_via_levels(&t);
        if direct != formula {
            return Err(format!("tree {t}: path area {direct}, level formula {formula}"));
        }
        count += 1;
    }
    Ok(count)
}

/// `C_n(q) = sum_P q^A(P)` over all Dyck paths of semilength `n`.
pub fn area_polynomial(n: usize) -> BTreeMap<u64, BigInt> {
    let mut poly = BTreeMap::new();
    for p in generate_paths(n) {
        *poly.entry(p.area()).or_insert_with(|| BigInt::from(0)) += 1;
    }
    poly
}

fn theorem3(n: usize) -> Result<Step> {
    let cf = eval_cf_default(&LevelWeights::Eq2, n as u32)?;
    let top = binomial(n as u64 + 1, 2);
    let reversed: BTreeMap<u64, BigInt> = area_polynomial(n).into_iter().map(|(a, c)| (top - a, c)).collect();
    let from_cf = cf.z_coeff_q_poly(n as u32)?;
    if reversed != from_cf {
        return Ok(Err(format!(
            "q^C(n+1,2) C_n(1/q) = {}, fraction coefficient = {}",
            render_q_poly(&reversed),
            render_q_poly(&from_cf)
        )));
    }
    Ok(Ok(crate::trees::catalan(n as u32).try_into().unwrap_or(u64::MAX)))
}

fn lemma3(n: usize) -> Step {
    let mut count = 0;
    for t in generate_trees(n) {
        let split = ConcatSplit::of(&t);
        if split.offsets.last() != Some(&0) {
            return Err(format!("tree {t}: offsets {:?} do not end at 0", split.offsets));
        }
        let direct = tree_to_perm(&t);
        let via = perm_via_concat(&t);
        if direct != via || split.reconstitute() != direct {
            return Err(format!("tree {t}: traversal gives {direct}, concatenation gives {via}"));
        }
        count += 1;
    }
    Ok(count)
}

/// Label sets (sorted) of the increasing subsequences of length `k`.
pub fn increasing_label_subsets(p: &PermWord, k: u32) -> BTreeSet<Vec<u32>> {
    p.as_slice()
        .iter()
        .copied()
        .combinations(k as usize)
        .filter(|c| c.windows(2).all(|w| w[0] < w[1]))
        .collect()
}

/// Label sets (sorted) of `k` non-root vertices lying on one root-to-leaf
/// path.
pub fn chain_label_subsets(t: &OrderedTree, k: u32) -> BTreeSet<Vec<u32>> {
    let vertices = labeled_vertices(t);
    let parent: HashMap<u32, Option<u32>> = vertices.iter().map(|v| (v.label, v.parent)).collect();
    let is_ancestor = |a: u32, mut b: u32| {
        while let Some(Some(p)) = parent.get(&b) {
            if *p == a {
                return true;
            }
            b = *p;
        }
        false
    };
    let mut labels: Vec<u32> = vertices.iter().map(|v| v.label).collect();
    labels.sort_unstable();
    labels
        .into_iter()
        .combinations(k as usize)
        .filter(|c| {
            c.iter()
                .tuple_combinations()
                .all(|(&a, &b)| is_ancestor(a, b) || is_ancestor(b, a))
        })
        .collect()
}

fn lemma4(n: usize, k: u32) -> Step {
    let mut count = 0;
    for t in generate_trees(n) {
        let p = tree_to_perm(&t);
        let increasing = increasing_label_subsets(&p, k);
        let chains = chain_label_subsets(&t, k);
        if increasing != chains {
            let bad = increasing.symmetric_difference(&chains).next().expect("sets differ");
            return Err(format!(
                "tree {t} perm {p}: label set {bad:?} is {} but {}",
                if increasing.contains(bad) { "increasing" } else { "not increasing" },
                if chains.contains(bad) { "on a root-to-leaf path" } else { "not on a root-to-leaf path" },
            ));
        }
        count += 1;
    }
    Ok(count)
}

fn theorem5(n: usize, k: u32) -> Result<Step> {
    let mut count = 0;
    for t in generate_trees(n) {
        let p = tree_to_perm(&t);
        let direct = p.count_increasing(k)?;
        let levels = count_increasing_via_tree(&t, k)?;
        let chains = root_to_leaf_subset_count(&t, k)?;
        if direct != BigUint::from(levels) || levels != chains {
            return Ok(Err(format!(
                "tree {t} perm {p}: permutation count {direct}, level binomials {levels}, chains {chains}"
            )));
        }
        count += 1;
    }
    Ok(Ok(count))
}

/// `sum q^r` over 132-avoiding permutations of length `n`, `r` the number of
/// increasing patterns of length `k`, by scanning all `n!` permutations.
pub fn avoider_pattern_polynomial(n: usize, k: u32) -> Result<BTreeMap<u64, BigInt>> {
    let mut poly = BTreeMap::new();
    for word in (1..=n as u32).permutations(n) {
        let p = PermWord::new(word)?;
        if p.has_132().is_some() {
            continue;
        }
        let r: u64 = p.count_increasing(k)?.try_into().expect("pattern count fits u64");
        *poly.entry(r).or_insert_with(|| BigInt::from(0)) += 1;
    }
    Ok(poly)
}

fn corollary6(n: usize, k: u32) -> Result<Step> {
    let cf = eval_cf_default(&LevelWeights::general_k(k)?, n as u32)?;
    let from_cf = cf.z_coeff_q_poly(n as u32)?;
    let brute = avoider_pattern_polynomial(n, k)?;
    if brute != from_cf {
        return Ok(Err(format!(
            "permutation scan gives {}, fraction gives {}",
            render_q_poly(&brute),
            render_q_poly(&from_cf)
        )));
    }
    Ok(Ok((1..=n as u64).product()))
}

fn bijections(n: usize) -> Result<Step> {
    let mut checked = 0u64;
    let mut image = BTreeSet::new();
    for t in generate_trees(n) {
        let path = tree_to_path(&t);
        if path_to_tree(&path) != t {
            return Ok(Err(format!("tree {t} -> path {path} does not return")));
        }
        let p = tree_to_perm(&t);
        match perm_to_tree(&p) {
            Ok(back) if back == t => {}
            Ok(back) => return Ok(Err(format!("tree {t} -> perm {p} -> tree {back}"))),
            Err(e) => return Ok(Err(format!("tree {t} -> perm {p}: {e}"))),
        }
        if !image.insert(p.clone()) {
            return Ok(Err(format!("perm {p} is hit twice (again by tree {t})")));
        }
        checked += 1;
    }
    for path in generate_paths(n) {
        let t = path_to_tree(&path);
        if tree_to_path(&t) != path {
            return Ok(Err(format!("path {path} -> tree {t} does not return")));
        }
        checked += 1;
    }
    let mut avoiders = BTreeSet::new();
    for word in (1..=n as u32).permutations(n) {
        let p = PermWord::new(word)?;
        if p.has_132().is_none() {
            let t = perm_to_tree(&p)?;
            if tree_to_perm(&t) != p {
                return Ok(Err(format!("perm {p} -> tree {t} does not return")));
            }
            avoiders.insert(p);
        }
        checked += 1;
    }
    if avoiders != image {
        let bad = avoiders.symmetric_difference(&image).next().expect("sets differ");
        return Ok(Err(format!(
            "perm {bad} is {} the tree image",
            if image.contains(bad) { "in" } else { "missing from" }
        )));
    }
    if BigUint::from(image.len()) != catalan(n as u32) {
        return Ok(Err(format!("image has {} permutations, not Catalan({n})", image.len())));
    }
    Ok(Ok(checked))
}

pub fn render_q_poly(poly: &BTreeMap<u64, BigInt>) -> String {
    if poly.is_empty() {
        return "0".into();
    }
    poly.iter()
        .map(|(e, c)| match e {
            0 => c.to_string(),
            1 => format!("{c}*q"),
            _ => format!("{c}*q^{e}"),
        })
        .join(" + ")
}
