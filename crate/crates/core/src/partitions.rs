//! Partitions, Young diagrams, p-rims and Xu's operator `J`.
//!
//! Nodes are 1-based `(row, col)` pairs in English notation. The rim is read
//! from the bottom-left node to the top-right node, so along the rim the
//! column never decreases and the row never increases.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if the parts increase anywhere.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// |λ|
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_{i+1}` (0-based index), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.get(0)
    }

    pub fn contains_node(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && self.get(row - 1) >= col
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts: Vec<usize> =
            (1..=cols).map(|c| self.parts.iter().take_while(|&&x| x >= c).count()).collect();
        Partition { parts, size: self.size }
    }

    /// All successive differences, including the last part minus zero, are below `p`.
    pub fn is_restricted(&self, p: u64) -> Result<bool> {
        check_modulus(p)?;
        let p = p as usize;
        Ok((0..self.len()).all(|i| self.get(i) - self.get(i + 1) < p))
    }

    /// No part is repeated `p` or more times.
    pub fn is_regular(&self, p: u64) -> Result<bool> {
        check_modulus(p)?;
        let p = p as usize;
        Ok(self.parts.windows(p).all(|w| w[0] != w[p - 1]) || self.len() < p)
    }

    /// `R(λ) = (λ_2, λ_3, ...)`
    pub fn remove_first_row(&self) -> Partition {
        match self.parts.split_first() {
            Some((&head, rest)) => Partition { parts: rest.to_vec(), size: self.size - head },
            None => Partition::empty(),
        }
    }

    /// Partwise `self + k * other`, padding the shorter sequence with zeros.
    pub fn add_scaled(&self, other: &Partition, k: usize) -> Partition {
        let n = self.len().max(other.len());
        let parts = (0..n).map(|i| self.get(i) + k * other.get(i)).collect();
        Partition::new(parts).expect("sum of partitions is a partition")
    }

    /// Nodes of the diagram in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Power notation, e.g. `(4,3,2^5)`.
    pub fn exponent_notation(&self) -> String {
        if self.is_empty() {
            return "()".to_string();
        }
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.len() {
            let v = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&x| x == v).count();
            if run == 1 {
                out.push(v.to_string());
            } else {
                out.push(format!("{v}^{run}"));
            }
            i += run;
        }
        format!("({})", out.join(","))
    }

    /// All partitions of `n`, in reverse lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_partitions(n, n, &mut cur, &mut out);
        out
    }

    pub fn restricted(n: usize, p: u64) -> Result<Vec<Partition>> {
        check_modulus(p)?;
        Ok(Self::all(n).into_iter().filter(|l| l.is_restricted(p).unwrap()).collect())
    }

    pub fn regular(n: usize, p: u64) -> Result<Vec<Partition>> {
        check_modulus(p)?;
        Ok(Self::all(n).into_iter().filter(|l| l.is_regular(p).unwrap()).collect())
    }
}

fn fill_partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition { parts: cur.clone(), size: cur.iter().sum() });
        return;
    }
    for k in (1..=n.min(max)).rev() {
        cur.push(k);
        fill_partitions(n - k, k, cur, out);
        cur.pop();
    }
}

pub(crate) fn check_modulus(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::InvalidModulus(p));
    }
    Ok(())
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string is the zero partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(s.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A node on the p-rim, annotated with its segment data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RimNode {
    pub row: usize,
    pub col: usize,
    /// 0-based index of the p-segment containing the node.
    pub segment_index: usize,
    pub is_row_end: bool,
    pub is_segment_pth: bool,
}

/// The rim `{(i,j) ∈ λ : (i+1,j+1) ∉ λ}` in reading order.
pub fn rim(lambda: &Partition) -> Vec<(usize, usize)> {
    let conj = lambda.conjugate();
    let mut out = Vec::new();
    for c in 1..=lambda.first() {
        let bottom = conj.get(c - 1);
        let top = conj.get(c).max(1);
        for r in (top..=bottom).rev() {
            out.push((r, c));
        }
    }
    out
}

/// The p-rim in reading order.
///
/// Each segment takes up to `p` consecutive rim nodes; the next segment starts at
/// the first rim node strictly right of the column where the previous one ended.
pub fn p_rim(lambda: &Partition, p: u64) -> Result<Vec<RimNode>> {
    check_modulus(p)?;
    let p = p as usize;
    let rim = rim(lambda);
    let mut out = Vec::new();
    let mut start = 0;
    let mut segment = 0;
    while start < rim.len() {
        let end = (start + p).min(rim.len());
        for (k, &(row, col)) in rim[start..end].iter().enumerate() {
            out.push(RimNode {
                row,
                col,
                segment_index: segment,
                is_row_end: lambda.get(row - 1) == col,
                is_segment_pth: k + 1 == p,
            });
        }
        if end - start < p {
            break;
        }
        let last_col = rim[end - 1].1;
        match rim[end..].iter().position(|&(_, c)| c > last_col) {
            Some(off) => start = end + off,
            None => break,
        }
        segment += 1;
    }
    Ok(out)
}

/// `a(λ)`: the number of nodes in the p-rim.
pub fn rim_count_a(lambda: &Partition, p: u64) -> Result<usize> {
    Ok(p_rim(lambda, p)?.len())
}

fn remove_nodes(lambda: &Partition, nodes: impl Iterator<Item = (usize, usize)>) -> Partition {
    let mut parts = lambda.parts.clone();
    for (row, _) in nodes {
        parts[row - 1] -= 1;
    }
    Partition::new(parts).expect("node removal left a non-partition")
}

/// `λ` minus its whole p-rim.
pub fn strip_p_rim(lambda: &Partition, p: u64) -> Result<Partition> {
    let rim = p_rim(lambda, p)?;
    // p-rim nodes in each row form a suffix of that row, so removal by count is exact
    Ok(remove_nodes(lambda, rim.iter().map(|n| (n.row, n.col))))
}

/// Xu's `J`: delete every p-rim node that ends its row but is not the p-th node of its segment.
pub fn xu_j_map(lambda: &Partition, p: u64) -> Result<Partition> {
    let rim = p_rim(lambda, p)?;
    Ok(remove_nodes(
        lambda,
        rim.iter().filter(|n| n.is_row_end && !n.is_segment_pth).map(|n| (n.row, n.col)),
    ))
}

/// Closed form of `j(λ)` in terms of `a(λ)` and `λ_1`.
pub fn xu_j_count_closed_form(lambda: &Partition, p: u64) -> Result<usize> {
    let a = rim_count_a(lambda, p)?;
    let first = lambda.first();
    Ok(if a as u64 % p == 0 { a - first } else { a + 1 - first })
}

/// `j(λ) = |λ| - |J(λ)|`, cross-checked against the closed form.
pub fn xu_j_count(lambda: &Partition, p: u64) -> Result<usize> {
    let by_nodes = lambda.size() - xu_j_map(lambda, p)?.size();
    let closed = xu_j_count_closed_form(lambda, p)?;
    assert_eq!(by_nodes, closed, "j({lambda}) disagrees with its closed form at p = {p}");
    Ok(by_nodes)
}

/// `J(λ)` through the backward bit recursion over the first `m` rows.
///
/// `x_i = 1` exactly when `λ_i + x_{i+1} + ... + x_m` is not divisible by `p`.
pub fn xu_j_map_bits(lambda: &Partition, p: u64, m: usize) -> Result<(Partition, Vec<u8>)> {
    check_modulus(p)?;
    if lambda.len() > m {
        return Err(Error::TooManyParts { partition: lambda.clone(), limit: m });
    }
    let mut bits = vec![0u8; m];
    let mut carry = 0usize;
    for i in (0..m).rev() {
        if (lambda.get(i) + carry) as u64 % p != 0 {
            bits[i] = 1;
            carry += 1;
        }
    }
    let parts = (0..m).map(|i| lambda.get(i) - bits[i] as usize).collect();
    Ok((Partition::new(parts).expect("bit recursion left a non-partition"), bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Column counts read straight off the node set.
    fn conjugate_by_columns(l: &Partition) -> Partition {
        let mut cols = vec![0usize; l.first()];
        for (_, c) in l.nodes() {
            cols[c - 1] += 1;
        }
        Partition::new(cols).unwrap()
    }

    #[test]
    fn construction_and_parsing() {
        assert_eq!(pt(""), Partition::empty());
        assert_eq!(pt("3,1,0,0").parts(), &[3, 1]);
        assert_eq!(pt("(2,2)").size(), 4);
        assert!(matches!("1,2".parse::<Partition>(), Err(Error::NotAPartition(_))));
        assert!(matches!("1,x".parse::<Partition>(), Err(Error::Parse(_))));
        assert_eq!(pt("5,4,3,3,1,1").to_string(), "5,4,3,3,1,1");
        assert_eq!(pt("4,3,2,2,2,2,2").exponent_notation(), "(4,3,2^5)");
    }

    #[test]
    fn serde_is_a_plain_array() {
        let l = pt("5,4,1");
        assert_eq!(serde_json::to_string(&l).unwrap(), "[5,4,1]");
        let back: Partition = serde_json::from_str("[5,4,1,0]").unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(pt("2,1").conjugate(), pt("2,1"));
        let l = pt("5,4,3,3,1,1");
        assert_eq!(conjugate_by_columns(&l), pt("6,4,4,2,1"));
        assert_eq!(l.conjugate(), pt("6,4,4,2,1"));
    }

    #[test]
    fn restricted_and_regular() {
        assert!(pt("5,4,3,3,1,1").is_restricted(5).unwrap());
        for p in 2..8 {
            assert!(!Partition::new(vec![p as usize]).unwrap().is_restricted(p).unwrap());
            assert!(Partition::empty().is_restricted(p).unwrap());
        }
        assert!(pt("1,1,1").is_restricted(3).unwrap());
        assert!(!pt("1,1,1").is_regular(3).unwrap());
        assert!(pt("3,2,1").is_regular(2).unwrap());
        assert!(pt("2,2,1").is_regular(3).unwrap());
        assert_eq!(pt("2,1").is_restricted(1), Err(Error::InvalidModulus(1)));
        assert_eq!(pt("2,1").is_regular(0), Err(Error::InvalidModulus(0)));
    }

    #[test]
    fn remove_first_row_examples() {
        assert_eq!(pt("4,3,2,2,2,2,2").remove_first_row(), pt("3,2,2,2,2,2"));
        assert_eq!(Partition::empty().remove_first_row(), Partition::empty());
        assert_eq!(pt("5,4,3,3,1,1").remove_first_row(), pt("4,3,3,1,1"));
    }

    #[test]
    fn p_rim_of_the_worked_figure() {
        let rim = p_rim(&pt("5,4,3,3,1,1"), 5).unwrap();
        let nodes: Vec<_> = rim.iter().map(|n| (n.row, n.col)).collect();
        assert_eq!(nodes, vec![(6, 1), (5, 1), (4, 1), (4, 2), (4, 3), (2, 4), (1, 4), (1, 5)]);
        let segs: Vec<_> = rim.iter().map(|n| n.segment_index).collect();
        assert_eq!(segs, vec![0, 0, 0, 0, 0, 1, 1, 1]);
        // (4,3) is the 5th node of the first segment, so it survives J
        assert!(rim[4].is_row_end && rim[4].is_segment_pth);
        assert_eq!(rim_count_a(&pt("5,4,3,3,1,1"), 5).unwrap(), 8);
    }

    #[test]
    fn small_rims() {
        let rim = p_rim(&pt("1"), 5).unwrap();
        assert_eq!(rim.len(), 1);
        assert_eq!((rim[0].row, rim[0].col), (1, 1));
        let rim = p_rim(&pt("3,3,3"), 5).unwrap();
        let nodes: Vec<_> = rim.iter().map(|n| (n.row, n.col)).collect();
        assert_eq!(nodes, vec![(3, 1), (3, 2), (3, 3), (2, 3), (1, 3)]);
        assert!(rim.iter().all(|n| n.segment_index == 0));
        assert_eq!(rim_count_a(&Partition::empty(), 3).unwrap(), 0);
        assert_eq!(rim_count_a(&pt("3,3,3"), 5).unwrap(), 5);
    }

    #[test]
    fn j_map_examples() {
        assert_eq!(xu_j_map(&pt("5,4,3,3,1,1"), 5).unwrap(), pt("4,3,3,3"));
        assert_eq!(xu_j_map(&pt("4,3,3,3"), 5).unwrap(), pt("3,3,2,2"));
        assert_eq!(xu_j_map(&Partition::empty(), 3).unwrap(), Partition::empty());
        assert_eq!(xu_j_count(&pt("5,4,3,3,1,1"), 5).unwrap(), 4);
        assert_eq!(xu_j_count(&Partition::empty(), 7).unwrap(), 0);
        // a = 5 ≡ 0: j = a - λ_1; the deleted row ends are (3,3) and (2,3)
        assert_eq!(xu_j_count(&pt("3,3,3"), 5).unwrap(), 2);
        assert_eq!(xu_j_map(&pt("3,3,3"), 5).unwrap(), pt("3,2,2"));
    }

    #[test]
    fn j_bits_examples() {
        let (mu, x) = xu_j_map_bits(&pt("5,4,3,3,1,1"), 5, 6).unwrap();
        assert_eq!(mu, pt("4,3,3,3"));
        assert_eq!(x, vec![1, 1, 0, 0, 1, 1]);
        let (mu, x) = xu_j_map_bits(&Partition::empty(), 3, 4).unwrap();
        assert_eq!(mu, Partition::empty());
        assert_eq!(x, vec![0; 4]);
        let (mu, x) = xu_j_map_bits(&pt("6"), 3, 1).unwrap();
        assert_eq!(mu, pt("6"));
        assert_eq!(x, vec![0]);
        assert!(matches!(
            xu_j_map_bits(&pt("2,1"), 3, 1),
            Err(Error::TooManyParts { limit: 1, .. })
        ));
    }

    #[test]
    fn strip_gives_partition() {
        assert_eq!(strip_p_rim(&pt("5,4,3,3,1,1"), 5).unwrap(), pt("3,3,3"));
        assert_eq!(strip_p_rim(&pt("3,3,3"), 5).unwrap(), pt("2,2"));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(Partition::all(3)[0], pt("3"));
        // restricted and regular partitions are equinumerous
        for p in [2, 3, 5] {
            for n in 0..10 {
                assert_eq!(
                    Partition::restricted(n, p).unwrap().len(),
                    Partition::regular(n, p).unwrap().len()
                );
            }
        }
    }
}
