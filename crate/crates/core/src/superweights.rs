//! Weights of `GL(m|n)`, odd-root orderings and Serganova's algorithm.
//!
//! A weight is an integer vector in ε-coordinates: positions `1..=m` are even,
//! `m+1..=m+n` odd. Dominance and polynomiality are predicates rather than type
//! invariants because the intermediate weights of Serganova's algorithm need not
//! be dominant.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{check_modulus, xu_j_count, Partition};
use crate::pflinalg::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightJson")]
pub struct Weight {
    m: usize,
    n: usize,
    coords: Vec<i64>,
}

#[derive(Deserialize)]
struct WeightJson {
    m: usize,
    n: usize,
    coords: Vec<i64>,
}

impl TryFrom<WeightJson> for Weight {
    type Error = Error;

    fn try_from(w: WeightJson) -> Result<Self> {
        Weight::new(w.m, w.n, w.coords)
    }
}

impl Weight {
    pub fn new(m: usize, n: usize, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != m + n {
            return Err(Error::ParameterMismatch(format!(
                "weight has {} coordinates, expected m + n = {}",
                coords.len(),
                m + n
            )));
        }
        Ok(Weight { m, n, coords })
    }

    pub fn zero(m: usize, n: usize) -> Self {
        Weight { m, n, coords: vec![0; m + n] }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// Coefficient of `ε_i` (1-based).
    pub fn coord(&self, i: usize) -> i64 {
        self.coords[i - 1]
    }

    pub fn even_part(&self) -> &[i64] {
        &self.coords[..self.m]
    }

    pub fn odd_part(&self) -> &[i64] {
        &self.coords[self.m..]
    }

    pub fn degree(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Weakly decreasing on each block.
    pub fn is_dominant(&self) -> bool {
        let dec = |s: &[i64]| s.windows(2).all(|w| w[0] >= w[1]);
        dec(self.even_part()) && dec(self.odd_part())
    }

    pub fn is_polynomial(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// Successive differences inside each block are below `p` (the last entry of a block is free).
    pub fn is_restricted(&self, p: u64) -> bool {
        let p = p as i64;
        let ok = |s: &[i64]| s.windows(2).all(|w| w[0] - w[1] < p);
        self.is_dominant() && ok(self.even_part()) && ok(self.odd_part())
    }

    fn check_compatible(&self, other: &Weight) -> Result<()> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(Error::ParameterMismatch(format!(
                "weights for GL({}|{}) and GL({}|{})",
                self.m, self.n, other.m, other.n
            )));
        }
        Ok(())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, other: &Weight, k: i64) -> Result<Weight> {
        self.check_compatible(other)?;
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + k * b).collect();
        Ok(Weight { m: self.m, n: self.n, coords })
    }

    fn minus_root(&self, beta: OddRoot) -> Weight {
        let mut w = self.clone();
        w.coords[beta.i - 1] -= 1;
        w.coords[beta.j - 1] += 1;
        w
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |s: &[i64]| s.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(self.even_part()), join(self.odd_part()))
    }
}

/// The odd root `ε_i - ε_j` with `1 <= i <= m < j <= m + n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OddRoot {
    pub i: usize,
    pub j: usize,
}

impl OddRoot {
    pub fn new(i: usize, j: usize, m: usize, n: usize) -> Result<Self> {
        if !(1 <= i && i <= m && m < j && j <= m + n) {
            return Err(Error::InvalidOrdering(format!("ε{i}-ε{j} is not an odd root of GL({m}|{n})")));
        }
        Ok(OddRoot { i, j })
    }

    /// `self <=_1 other` in the standard dominance order.
    pub fn dominated_by(&self, other: &OddRoot) -> bool {
        self.i >= other.i && self.j <= other.j
    }
}

impl fmt::Display for OddRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ε{}-ε{}", self.i, self.j)
    }
}

/// An ordering of all `mn` odd roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOrdering(pub Vec<OddRoot>);

impl RootOrdering {
    /// `ε_m-ε_{m+1}, ..., ε_1-ε_{m+1}; ε_m-ε_{m+2}, ...` (column by column).
    pub fn column_major(m: usize, n: usize) -> Self {
        RootOrdering(
            (m + 1..=m + n)
                .flat_map(|j| (1..=m).rev().map(move |i| OddRoot { i, j }))
                .collect(),
        )
    }

    /// `ε_m-ε_{m+1}, ..., ε_m-ε_{m+n}; ε_{m-1}-ε_{m+1}, ...` (row by row, bottom row first).
    pub fn row_major(m: usize, n: usize) -> Self {
        RootOrdering(
            (1..=m)
                .rev()
                .flat_map(|i| (m + 1..=m + n).map(move |j| OddRoot { i, j }))
                .collect(),
        )
    }

    pub fn roots(&self) -> &[OddRoot] {
        &self.0
    }

    /// Every ordering compatible with `<=_1`, i.e. all linear extensions of the root poset.
    pub fn all_valid(m: usize, n: usize) -> Vec<RootOrdering> {
        let roots: Vec<OddRoot> = (1..=m)
            .flat_map(|i| (m + 1..=m + n).map(move |j| OddRoot { i, j }))
            .collect();
        let mut out = Vec::new();
        let mut used = vec![false; roots.len()];
        let mut cur = Vec::new();
        linear_extensions(&roots, &mut used, &mut cur, &mut out);
        out
    }
}

fn linear_extensions(
    roots: &[OddRoot],
    used: &mut [bool],
    cur: &mut Vec<OddRoot>,
    out: &mut Vec<RootOrdering>,
) {
    if cur.len() == roots.len() {
        out.push(RootOrdering(cur.clone()));
        return;
    }
    for k in 0..roots.len() {
        if used[k] {
            continue;
        }
        // minimal among the unused roots
        let minimal = (0..roots.len())
            .all(|l| used[l] || l == k || !roots[l].dominated_by(&roots[k]));
        if minimal {
            used[k] = true;
            cur.push(roots[k]);
            linear_extensions(roots, used, cur, out);
            cur.pop();
            used[k] = false;
        }
    }
}

impl fmt::Display for RootOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|r| format!("{}:{}", r.i, r.j)).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for RootOrdering {
    type Err = Error;

    /// `i:j` pairs separated by commas or whitespace, e.g. `2:3,2:4,1:3,1:4`.
    fn from_str(s: &str) -> Result<Self> {
        let roots = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let (i, j) = t
                    .split_once(':')
                    .ok_or_else(|| Error::InvalidOrdering(format!("expected i:j, got {t:?}")))?;
                let parse = |x: &str| {
                    x.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidOrdering(format!("bad index in {t:?}")))
                };
                Ok(OddRoot { i: parse(i)?, j: parse(j)? })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RootOrdering(roots))
    }
}

/// `(λ, ε_i - ε_j) = λ_i + λ_j`, the odd coordinate picking up the sign of the form twice.
pub fn form(lambda: &Weight, beta: OddRoot) -> Result<i64> {
    OddRoot::new(beta.i, beta.j, lambda.m, lambda.n)?;
    Ok(lambda.coord(beta.i) + lambda.coord(beta.j))
}

/// True iff the ordering lists every odd root once and never puts a root after one it is below.
pub fn validate_ordering(ord: &RootOrdering, m: usize, n: usize) -> bool {
    let roots = ord.roots();
    if roots.len() != m * n || roots.iter().any(|r| OddRoot::new(r.i, r.j, m, n).is_err()) {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !roots.iter().all(|r| seen.insert(*r)) {
        return false;
    }
    (0..roots.len()).all(|s| (s + 1..roots.len()).all(|t| !roots[t].dominated_by(&roots[s])))
}

/// 0 (characteristic zero) or an odd prime.
pub(crate) fn check_characteristic(p: u64) -> Result<()> {
    if p == 0 || (p != 2 && is_prime(p)) {
        Ok(())
    } else {
        Err(Error::InvalidCharacteristic(p))
    }
}

fn divisible(x: i64, p: u64) -> bool {
    if p == 0 {
        x == 0
    } else {
        x.rem_euclid(p as i64) == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerganovaStep {
    pub root: OddRoot,
    /// `(λ^{(i-1)}, β_i)`
    pub form_value: i64,
    pub subtracted: bool,
    /// `λ^{(i)}`
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SerganovaTrace {
    pub start: Weight,
    pub p: u64,
    pub steps: Vec<SerganovaStep>,
}

impl SerganovaTrace {
    pub fn result(&self) -> &Weight {
        self.steps.last().map_or(&self.start, |s| &s.weight)
    }
}

/// Serganova's algorithm: walk the odd roots in order, subtracting `β_i` whenever
/// `(λ^{(i-1)}, β_i)` is nonzero mod `p` (nonzero outright for `p = 0`).
pub fn serganova_tilde(lambda: &Weight, p: u64, ord: &RootOrdering) -> Result<SerganovaTrace> {
    check_characteristic(p)?;
    if !validate_ordering(ord, lambda.m, lambda.n) {
        return Err(Error::InvalidOrdering(format!("{ord} is not compatible with <=_1")));
    }
    let mut cur = lambda.clone();
    let mut steps = Vec::with_capacity(ord.0.len());
    for &root in ord.roots() {
        let form_value = form(&cur, root)?;
        let subtracted = !divisible(form_value, p);
        if subtracted {
            cur = cur.minus_root(root);
        }
        steps.push(SerganovaStep { root, form_value, subtracted, weight: cur.clone() });
    }
    Ok(SerganovaTrace { start: lambda.clone(), p, steps })
}

/// `λ̃` computed with the column-major ordering.
pub fn tilde(lambda: &Weight, p: u64) -> Result<Weight> {
    let ord = RootOrdering::column_major(lambda.m, lambda.n);
    Ok(serganova_tilde(lambda, p, &ord)?.result().clone())
}

/// `x(λ) = Σ λ_i ε_i` over the even block.
pub fn embed_x(lambda: &Partition, m: usize, n: usize, d: usize) -> Result<Weight> {
    embed(lambda, m, n, d, 0, m)
}

/// `y(λ) = Σ λ_i ε_{m+i}` over the odd block.
pub fn embed_y(lambda: &Partition, m: usize, n: usize, d: usize) -> Result<Weight> {
    embed(lambda, m, n, d, m, n)
}

fn embed(lambda: &Partition, m: usize, n: usize, d: usize, offset: usize, room: usize) -> Result<Weight> {
    if lambda.size() != d {
        return Err(Error::ParameterMismatch(format!("|{lambda}| = {} but d = {d}", lambda.size())));
    }
    if lambda.len() > room {
        return Err(Error::TooManyParts { partition: lambda.clone(), limit: room });
    }
    let mut w = Weight::zero(m, n);
    for (k, &part) in lambda.parts().iter().enumerate() {
        w.coords[offset + k] = part as i64;
    }
    Ok(w)
}

/// `t(λ) = (λ_{m+1}, ..., λ_{m+n})` as a partition.
pub fn tail(lambda: &Weight) -> Result<Partition> {
    let odd = lambda.odd_part();
    if odd.iter().any(|&c| c < 0) {
        return Err(Error::NotDominant(lambda.coords.clone()));
    }
    Partition::new(odd.iter().map(|&c| c as usize).collect())
        .map_err(|_| Error::NotDominant(lambda.coords.clone()))
}

/// `Λ⁺(m|n,d)`, sorted in decreasing lexicographic order of coordinates.
pub fn enumerate_lambda_plus(m: usize, n: usize, d: usize) -> Vec<Weight> {
    let mut out = Vec::new();
    for k in 0..=d {
        let evens: Vec<Partition> = Partition::all(k).into_iter().filter(|l| l.len() <= m).collect();
        let odds: Vec<Partition> =
            Partition::all(d - k).into_iter().filter(|l| l.len() <= n).collect();
        for e in &evens {
            for o in &odds {
                let mut coords = vec![0i64; m + n];
                for (i, &x) in e.parts().iter().enumerate() {
                    coords[i] = x as i64;
                }
                for (i, &x) in o.parts().iter().enumerate() {
                    coords[m + i] = x as i64;
                }
                out.push(Weight { m, n, coords });
            }
        }
    }
    out.sort_by(|a, b| b.coords.cmp(&a.coords));
    out
}

fn check_lambda_plus(lambda: &Weight, d: usize) -> Result<()> {
    if !lambda.is_dominant() || !lambda.is_polynomial() {
        return Err(Error::NotDominant(lambda.coords.clone()));
    }
    if lambda.degree() != d as i64 {
        return Err(Error::ParameterMismatch(format!("{lambda} has degree {} not {d}", lambda.degree())));
    }
    Ok(())
}

fn check_odd_prime(p: u64) -> Result<()> {
    if p == 0 {
        return Err(Error::InvalidCharacteristic(0));
    }
    check_characteristic(p)
}

/// Membership in `Λ⁺⁺(m|n,d)`: `j(t(λ)) <= λ_m`.
///
/// For `m = 0` the group is `GL(n)` acting on a purely odd space and every
/// dominant polynomial weight qualifies.
pub fn in_lambda_plusplus(lambda: &Weight, p: u64, d: usize) -> Result<bool> {
    check_odd_prime(p)?;
    check_lambda_plus(lambda, d)?;
    if lambda.m == 0 {
        return Ok(true);
    }
    let j = xu_j_count(&tail(lambda)?, p)? as i64;
    Ok(j <= lambda.coord(lambda.m))
}

/// Membership for `d <= m`: every tail entry divisible by `p`.
pub fn in_lambda_plusplus_dt(lambda: &Weight, p: u64, d: usize) -> Result<bool> {
    check_odd_prime(p)?;
    check_lambda_plus(lambda, d)?;
    if d > lambda.m {
        return Err(Error::DegreeExceedsRank { d, m: lambda.m });
    }
    Ok(lambda.odd_part().iter().all(|&c| divisible(c, p)))
}

/// Membership read off the tilde map: the lowest weight `w_0 λ̃` must be polynomial.
pub fn in_lambda_plusplus_tilde(lambda: &Weight, p: u64, d: usize) -> Result<bool> {
    check_odd_prime(p)?;
    check_lambda_plus(lambda, d)?;
    Ok(tilde(lambda, p)?.is_polynomial())
}

/// `λ = μ + pν` with `μ` restricted and `ν` dominant.
///
/// In each block the last entry of `μ` is `λ_last mod p`, and the remaining entries are
/// carried upward: `μ_i` is the least value `>= μ_{i+1}` congruent to `λ_i`.
pub fn restricted_split(lambda: &Weight, p: u64) -> Result<(Weight, Weight)> {
    check_modulus(p)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.coords.clone()));
    }
    let pi = p as i64;
    let mut mu = lambda.clone();
    let mut nu = Weight::zero(lambda.m, lambda.n);
    for (start, len) in [(0, lambda.m), (lambda.m, lambda.n)] {
        for k in (start..start + len).rev() {
            let l = lambda.coords[k];
            let u = if k + 1 == start + len {
                l.rem_euclid(pi)
            } else {
                let below = mu.coords[k + 1];
                below + (l - below).rem_euclid(pi)
            };
            mu.coords[k] = u;
            nu.coords[k] = (l - u) / pi;
        }
    }
    Ok((mu, nu))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, n: usize, c: &[i64]) -> Weight {
        Weight::new(m, n, c.to_vec()).unwrap()
    }

    fn example_order() -> RootOrdering {
        "2:3,2:4,1:3,1:4".parse().unwrap()
    }

    #[test]
    fn form_examples() {
        assert_eq!(form(&w(2, 2, &[1, 1, 2, 0]), OddRoot { i: 2, j: 3 }).unwrap(), 3);
        assert_eq!(form(&w(2, 2, &[1, 0, 2, 1]), OddRoot { i: 1, j: 3 }).unwrap(), 3);
        for r in RootOrdering::column_major(2, 2).roots() {
            assert_eq!(form(&Weight::zero(2, 2), *r).unwrap(), 0);
        }
        assert!(form(&Weight::zero(2, 2), OddRoot { i: 3, j: 4 }).is_err());
    }

    #[test]
    fn ordering_validation() {
        let ord = example_order();
        assert!(validate_ordering(&ord, 2, 2));
        let mut rev = ord.clone();
        rev.0.reverse();
        assert!(!validate_ordering(&rev, 2, 2));
        for (m, n) in [(1, 1), (2, 2), (3, 2), (2, 3), (4, 1)] {
            assert!(validate_ordering(&RootOrdering::column_major(m, n), m, n));
            assert!(validate_ordering(&RootOrdering::row_major(m, n), m, n));
        }
        // missing and duplicated roots
        assert!(!validate_ordering(&"2:3,2:4,1:3".parse().unwrap(), 2, 2));
        assert!(!validate_ordering(&"2:3,2:3,1:3,1:4".parse().unwrap(), 2, 2));
        assert!("2-3".parse::<RootOrdering>().is_err());
    }

    #[test]
    fn linear_extension_counts() {
        // standard Young tableaux of the m x n rectangle
        assert_eq!(RootOrdering::all_valid(2, 2).len(), 2);
        assert_eq!(RootOrdering::all_valid(2, 3).len(), 5);
        assert_eq!(RootOrdering::all_valid(3, 3).len(), 42);
        assert_eq!(RootOrdering::all_valid(1, 4).len(), 1);
        for o in RootOrdering::all_valid(3, 2) {
            assert!(validate_ordering(&o, 3, 2));
        }
    }

    #[test]
    fn worked_serganova_chain() {
        let trace = serganova_tilde(&w(2, 2, &[1, 1, 2, 0]), 3, &example_order()).unwrap();
        let chain: Vec<Vec<i64>> = trace.steps.iter().map(|s| s.weight.coords().to_vec()).collect();
        assert_eq!(chain, vec![vec![1, 1, 2, 0], vec![1, 0, 2, 1], vec![1, 0, 2, 1], vec![0, 0, 2, 2]]);
        let forms: Vec<i64> = trace.steps.iter().map(|s| s.form_value).collect();
        assert_eq!(forms, vec![3, 1, 3, 2]);
        assert_eq!(trace.result(), &w(2, 2, &[0, 0, 2, 2]));
    }

    #[test]
    fn tilde_edge_cases() {
        assert!(tilde(&Weight::zero(3, 2), 5).unwrap().is_zero());
        assert!(tilde(&Weight::zero(3, 2), 0).unwrap().is_zero());
        assert_eq!(tilde(&w(1, 1, &[1, 0]), 2), Err(Error::InvalidCharacteristic(2)));
        assert!(matches!(
            serganova_tilde(&w(2, 2, &[1, 1, 2, 0]), 3, &"1:4,1:3,2:4,2:3".parse().unwrap()),
            Err(Error::InvalidOrdering(_))
        ));
    }

    #[test]
    fn characteristic_zero_subtracts_every_nonzero_form() {
        // brute force over all valid orderings for a strictly dominant polynomial weight
        let lam = w(2, 2, &[3, 1, 0, 0]);
        let results: Vec<Weight> = RootOrdering::all_valid(2, 2)
            .iter()
            .map(|o| serganova_tilde(&lam, 0, o).unwrap().result().clone())
            .collect();
        assert!(results.windows(2).all(|r| r[0] == r[1]));
        let trace = serganova_tilde(&lam, 0, &RootOrdering::column_major(2, 2)).unwrap();
        assert!(trace.steps.iter().all(|s| s.subtracted == (s.form_value != 0)));
        // the result is y of the conjugate partition
        assert_eq!(results[0], w(2, 2, &[1, 0, 2, 1]));
    }

    #[test]
    fn embeddings_and_tail() {
        let l: Partition = "2,1".parse().unwrap();
        assert_eq!(embed_x(&l, 2, 2, 3).unwrap(), w(2, 2, &[2, 1, 0, 0]));
        let m: Partition = "4,3,2,2,2,2,2".parse().unwrap();
        let y = embed_y(&m, 7, 7, 17).unwrap();
        assert_eq!(y.coords(), &[0, 0, 0, 0, 0, 0, 0, 4, 3, 2, 2, 2, 2, 2]);
        assert_eq!(tail(&w(2, 2, &[1, 0, 2, 1])).unwrap(), "2,1".parse().unwrap());
        assert!(matches!(embed_x(&m, 3, 7, 17), Err(Error::TooManyParts { .. })));
        assert!(matches!(embed_x(&l, 2, 2, 4), Err(Error::ParameterMismatch(_))));
        assert!(tail(&w(1, 2, &[0, 1, 2])).is_err());
    }

    #[test]
    fn lambda_plus_enumeration() {
        let got: Vec<Vec<i64>> = enumerate_lambda_plus(1, 1, 2).iter().map(|w| w.coords().to_vec()).collect();
        assert_eq!(got, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(enumerate_lambda_plus(3, 2, 0), vec![Weight::zero(3, 2)]);
        let got: Vec<Vec<i64>> = enumerate_lambda_plus(2, 1, 2).iter().map(|w| w.coords().to_vec()).collect();
        assert_eq!(got, vec![vec![2, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![0, 0, 2]]);
    }

    #[test]
    fn classification_examples() {
        let members: Vec<bool> = [[2, 0], [1, 1], [0, 2]]
            .iter()
            .map(|c| in_lambda_plusplus(&w(1, 1, c), 3, 2).unwrap())
            .collect();
        assert_eq!(members, vec![true, true, false]);
        let members: Vec<Weight> = enumerate_lambda_plus(2, 1, 2)
            .into_iter()
            .filter(|l| in_lambda_plusplus(l, 3, 2).unwrap())
            .collect();
        assert_eq!(members, vec![w(2, 1, &[2, 0, 0]), w(2, 1, &[1, 1, 0])]);
        for l in enumerate_lambda_plus(2, 1, 2) {
            assert_eq!(in_lambda_plusplus(&l, 3, 2).unwrap(), in_lambda_plusplus_dt(&l, 3, 2).unwrap());
        }
        assert!(in_lambda_plusplus_dt(&Weight::zero(2, 2), 5, 0).unwrap());
        // tail (p) with d = p + 2 <= m
        let lam = w(5, 2, &[1, 1, 0, 0, 0, 3, 0]);
        assert!(in_lambda_plusplus_dt(&lam, 3, 5).unwrap());
        assert!(in_lambda_plusplus(&lam, 3, 5).unwrap());
        assert_eq!(
            in_lambda_plusplus_dt(&w(1, 1, &[1, 1]), 3, 2),
            Err(Error::DegreeExceedsRank { d: 2, m: 1 })
        );
        assert!(matches!(in_lambda_plusplus(&w(2, 1, &[0, 1, 1]), 3, 2), Err(Error::NotDominant(_))));
        assert!(matches!(in_lambda_plusplus(&w(1, 1, &[1, 1]), 3, 3), Err(Error::ParameterMismatch(_))));
    }

    #[test]
    fn purely_odd_group_admits_everything() {
        for l in enumerate_lambda_plus(0, 2, 4) {
            assert!(in_lambda_plusplus(&l, 3, 4).unwrap());
            assert!(in_lambda_plusplus_tilde(&l, 3, 4).unwrap());
        }
    }

    /// All splits with `0 <= μ_last < p` in each block, found by brute force.
    fn all_splits(lambda: &Weight, p: i64) -> Vec<(Weight, Weight)> {
        let mut out = Vec::new();
        let k = lambda.coords().len();
        let lo: Vec<i64> = lambda.coords().iter().map(|&c| c.rem_euclid(p)).collect();
        let bound = lambda.coords().iter().map(|c| c.abs()).max().unwrap_or(0) + p;
        let mut idx = vec![0i64; k];
        loop {
            let mu: Vec<i64> = (0..k).map(|i| lo[i] + p * idx[i]).collect();
            let mu = Weight::new(lambda.m(), lambda.n(), mu).unwrap();
            let nu: Vec<i64> = (0..k).map(|i| (lambda.coords()[i] - mu.coords()[i]) / p).collect();
            let nu = Weight::new(lambda.m(), lambda.n(), nu).unwrap();
            let last_ok = [lambda.m(), lambda.m() + lambda.n()]
                .iter()
                .filter(|&&e| e > 0 && (e != lambda.m() || lambda.m() > 0))
                .all(|&e| mu.coords()[e - 1] < p);
            if mu.is_restricted(p as u64) && nu.is_dominant() && last_ok {
                out.push((mu, nu));
            }
            let mut c = 0;
            loop {
                if c == k {
                    return out;
                }
                idx[c] += 1;
                if lo[c] + p * idx[c] <= bound {
                    break;
                }
                idx[c] = 0;
                c += 1;
            }
        }
    }

    #[test]
    fn restricted_split_examples() {
        let (mu, nu) = restricted_split(&w(1, 0, &[7]), 3).unwrap();
        assert_eq!((mu.coords(), nu.coords()), (&[1][..], &[2][..]));
        let r = w(2, 2, &[3, 1, 2, 0]);
        assert_eq!(restricted_split(&r, 3).unwrap(), (r.clone(), Weight::zero(2, 2)));
        let nu = w(2, 2, &[2, 1, 1, 1]);
        let scaled = Weight::zero(2, 2).add_scaled(&nu, 5).unwrap();
        assert_eq!(restricted_split(&scaled, 5).unwrap(), (Weight::zero(2, 2), nu));
        for c in [[7, 2, 9, 4], [6, 6, 3, 0], [10, 1, 5, 5], [4, 4, 4, 4]] {
            let lam = w(2, 2, &c);
            let splits = all_splits(&lam, 3);
            assert_eq!(splits.len(), 1, "{lam}");
            assert_eq!(restricted_split(&lam, 3).unwrap(), splits[0]);
        }
    }

    #[test]
    fn weight_json() {
        let lam = w(2, 2, &[1, 1, 2, 0]);
        let s = serde_json::to_string(&lam).unwrap();
        assert_eq!(s, r#"{"m":2,"n":2,"coords":[1,1,2,0]}"#);
        assert_eq!(serde_json::from_str::<Weight>(&s).unwrap(), lam);
        assert!(serde_json::from_str::<Weight>(r#"{"m":2,"n":2,"coords":[1]}"#).is_err());
    }
}
