//! The Mullineux symbol and the Mullineux map on restricted partitions.
//!
//! The map is computed two ways: by rewriting the second row of the symbol
//! ([`mullineux_symbolic`]) and by iterating Xu's `J` ([`mullineux_xu`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{check_modulus, rim_count_a, strip_p_rim, xu_j_count, xu_j_map, Partition};

/// Columns `(a_i, r_i)`: p-rim size and first row of the i-th rim-stripped partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SymbolJson", into = "SymbolJson")]
pub struct MullineuxSymbol {
    p: u64,
    columns: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct SymbolJson {
    p: u64,
    a: Vec<usize>,
    r: Vec<usize>,
}

impl TryFrom<SymbolJson> for MullineuxSymbol {
    type Error = Error;

    fn try_from(j: SymbolJson) -> Result<Self> {
        if j.a.len() != j.r.len() {
            return Err(Error::InconsistentSymbol("rows have different lengths".into()));
        }
        MullineuxSymbol::new(j.p, j.a.into_iter().zip(j.r).collect())
    }
}

impl From<MullineuxSymbol> for SymbolJson {
    fn from(s: MullineuxSymbol) -> Self {
        SymbolJson { p: s.p, a: s.a_row(), r: s.r_row() }
    }
}

impl MullineuxSymbol {
    pub fn new(p: u64, columns: Vec<(usize, usize)>) -> Result<Self> {
        check_modulus(p)?;
        if let Some(&(a, r)) = columns.iter().find(|&&(a, r)| a == 0 || r == 0) {
            return Err(Error::InconsistentSymbol(format!("column ({a}, {r}) has a zero entry")));
        }
        Ok(MullineuxSymbol { p, columns })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn columns(&self) -> &[(usize, usize)] {
        &self.columns
    }

    pub fn a_row(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.0).collect()
    }

    pub fn r_row(&self) -> Vec<usize> {
        self.columns.iter().map(|c| c.1).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    /// Σ a_i
    pub fn total(&self) -> usize {
        self.columns.iter().map(|c| c.0).sum()
    }
}

impl fmt::Display for MullineuxSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .columns
            .iter()
            .map(|&(a, r)| a.to_string().len().max(r.to_string().len()))
            .max()
            .unwrap_or(1);
        let row = |v: Vec<usize>| {
            v.iter().map(|x| format!("{x:>width$}")).collect::<Vec<_>>().join(" ")
        };
        writeln!(f, "( {} )", row(self.a_row()))?;
        write!(f, "( {} )", row(self.r_row()))
    }
}

/// G(λ): strip full p-rims until nothing is left.
pub fn symbol(lambda: &Partition, p: u64) -> Result<MullineuxSymbol> {
    check_modulus(p)?;
    let mut columns = Vec::new();
    let mut cur = lambda.clone();
    while !cur.is_empty() {
        columns.push((rim_count_a(&cur, p)?, cur.first()));
        cur = strip_p_rim(&cur, p)?;
    }
    debug_assert_eq!(columns.iter().map(|c| c.0).sum::<usize>(), lambda.size());
    Ok(MullineuxSymbol { p, columns })
}

/// Rebuilds the partition with symbol `sym`, working from the last column back.
///
/// Each step re-attaches a p-rim of size `a_i` to the current partition so that
/// the new first row is `r_i`. Candidates are enumerated row by row (a re-attached
/// rim adds at most one node below each existing row end) and every candidate is
/// validated by stripping it again.
pub fn from_symbol(sym: &MullineuxSymbol) -> Result<Partition> {
    let p = sym.p;
    let mut cur = Partition::empty();
    for (idx, &(a, r)) in sym.columns.iter().enumerate().rev() {
        let found = attach_rim(&cur, a, r, p)?;
        match found.len() {
            0 => {
                return Err(Error::InconsistentSymbol(format!(
                    "no partition with p-rim size {a} and first row {r} strips to {cur} (column {})",
                    idx + 1
                )))
            }
            1 => cur = found.into_iter().next().unwrap(),
            _ => {
                return Err(Error::InconsistentSymbol(format!(
                    "column {} admits {} reconstructions",
                    idx + 1,
                    found.len()
                )))
            }
        }
    }
    Ok(cur)
}

fn attach_rim(inner: &Partition, a: usize, r: usize, p: u64) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    if r < inner.first() {
        return Ok(out);
    }
    let mut rows = vec![r];
    let remaining = (r - inner.first()) as isize;
    let remaining = a as isize - remaining;
    if remaining < 0 {
        return Ok(out);
    }
    extend_rows(inner, a, r, p, &mut rows, remaining as usize, &mut out)?;
    Ok(out)
}

fn extend_rows(
    inner: &Partition,
    a: usize,
    r: usize,
    p: u64,
    rows: &mut Vec<usize>,
    remaining: usize,
    out: &mut Vec<Partition>,
) -> Result<()> {
    let k = rows.len();
    if remaining == 0 && k >= inner.len() {
        let cand = Partition::new(rows.clone()).expect("rows are weakly decreasing");
        if cand.first() == r && rim_count_a(&cand, p)? == a && strip_p_rim(&cand, p)? == *inner {
            out.push(cand);
        }
        return Ok(());
    }
    if k >= inner.len() + a {
        return Ok(());
    }
    let lo = inner.get(k).max(1);
    let hi = rows[k - 1].min(inner.get(k - 1) + 1);
    for v in (lo..=hi).rev() {
        let extra = v - inner.get(k);
        if extra > remaining {
            continue;
        }
        rows.push(v);
        extend_rows(inner, a, r, p, rows, remaining - extra, out)?;
        rows.pop();
    }
    Ok(())
}

fn require_restricted(lambda: &Partition, p: u64) -> Result<()> {
    if !lambda.is_restricted(p)? {
        return Err(Error::NotRestricted { partition: lambda.clone(), p });
    }
    Ok(())
}

/// M(λ) by rewriting the symbol: `s_i = a_i - r_i` if `p | a_i`, else `a_i + 1 - r_i`.
pub fn mullineux_symbolic(lambda: &Partition, p: u64) -> Result<Partition> {
    require_restricted(lambda, p)?;
    let sym = symbol(lambda, p)?;
    let columns = sym
        .columns
        .iter()
        .map(|&(a, r)| (a, if a as u64 % p == 0 { a - r } else { a + 1 - r }))
        .collect();
    let image = from_symbol(&MullineuxSymbol::new(p, columns)?)?;
    debug_assert!(image.is_restricted(p)?);
    Ok(image)
}

/// One step of Xu's chain: the partition and the number of nodes `J` removes from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JStep {
    pub partition: Partition,
    pub j: usize,
}

/// `λ, J(λ), J²(λ), ...` up to (not including) the empty partition, with their `j`-values.
pub fn j_chain(lambda: &Partition, p: u64) -> Result<Vec<JStep>> {
    check_modulus(p)?;
    let mut out = Vec::new();
    let mut cur = lambda.clone();
    while !cur.is_empty() {
        let j = xu_j_count(&cur, p)?;
        let next = xu_j_map(&cur, p)?;
        out.push(JStep { partition: cur, j });
        cur = next;
    }
    Ok(out)
}

/// M(λ) by Xu's algorithm: `M(λ)_i = j(J^{i-1}(λ))`.
pub fn mullineux_xu(lambda: &Partition, p: u64) -> Result<Partition> {
    require_restricted(lambda, p)?;
    let parts = j_chain(lambda, p)?.into_iter().map(|s| s.j).collect();
    Partition::new(parts).map_err(|e| match e {
        Error::NotAPartition(v) => {
            Error::InconsistentSymbol(format!("j-values {v:?} along the J-chain increase"))
        }
        e => e,
    })
}

/// The Mullineux map in its original form on p-regular partitions: `M(μ')'`.
pub fn mullineux_regular(mu: &Partition, p: u64) -> Result<Partition> {
    if !mu.is_regular(p)? {
        return Err(Error::NotRegular { partition: mu.clone(), p });
    }
    Ok(mullineux_xu(&mu.conjugate(), p)?.conjugate())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn symbol_examples() {
        let s = symbol(&pt("5,4,3,3,1,1"), 5).unwrap();
        assert_eq!(s.a_row(), vec![8, 5, 3, 1]);
        assert_eq!(s.r_row(), vec![5, 3, 2, 1]);
        assert_eq!(s.total(), 17);
        let s = symbol(&pt("1"), 3).unwrap();
        assert_eq!(s.columns(), &[(1, 1)]);
        let s = symbol(&pt("2,2"), 5).unwrap();
        assert_eq!(s.columns(), &[(3, 2), (1, 1)]);
        assert!(symbol(&Partition::empty(), 5).unwrap().is_empty());
    }

    #[test]
    fn symbol_display_and_json() {
        let s = symbol(&pt("5,4,3,3,1,1"), 5).unwrap();
        assert_eq!(s.to_string(), "( 8 5 3 1 )\n( 5 3 2 1 )");
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"p":5,"a":[8,5,3,1],"r":[5,3,2,1]}"#);
        let back: MullineuxSymbol = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<MullineuxSymbol>(r#"{"p":5,"a":[1],"r":[]}"#).is_err());
    }

    #[test]
    fn reconstruction() {
        let l = pt("5,4,3,3,1,1");
        assert_eq!(from_symbol(&symbol(&l, 5).unwrap()).unwrap(), l);
        assert_eq!(from_symbol(&MullineuxSymbol::new(5, vec![]).unwrap()).unwrap(), Partition::empty());
        let s = MullineuxSymbol::new(5, vec![(8, 4), (5, 2), (3, 2), (1, 1)]).unwrap();
        assert_eq!(from_symbol(&s).unwrap(), pt("4,3,2,2,2,2,2"));
    }

    #[test]
    fn inconsistent_symbols_are_rejected() {
        // a rim of 2 nodes cannot have first row 5
        let s = MullineuxSymbol::new(3, vec![(2, 5)]).unwrap();
        assert!(matches!(from_symbol(&s), Err(Error::InconsistentSymbol(_))));
        assert!(matches!(
            MullineuxSymbol::new(3, vec![(0, 1)]),
            Err(Error::InconsistentSymbol(_))
        ));
    }

    #[test]
    fn worked_example_both_ways() {
        let l = pt("5,4,3,3,1,1");
        assert_eq!(mullineux_symbolic(&l, 5).unwrap(), pt("4,3,2,2,2,2,2"));
        assert_eq!(mullineux_xu(&l, 5).unwrap(), pt("4,3,2,2,2,2,2"));
        let chain: Vec<String> =
            j_chain(&l, 5).unwrap().iter().map(|s| s.partition.to_string()).collect();
        assert_eq!(
            chain,
            vec!["5,4,3,3,1,1", "4,3,3,3", "3,3,2,2", "3,3,1,1", "3,3", "2,2", "1,1"]
        );
    }

    #[test]
    fn tiny_cases() {
        for p in [2, 3, 5] {
            assert_eq!(mullineux_symbolic(&pt("1"), p).unwrap(), pt("1"));
            assert_eq!(mullineux_xu(&Partition::empty(), p).unwrap(), Partition::empty());
        }
        // at p = 3 the two restricted partitions of 3 are swapped
        assert_eq!(mullineux_symbolic(&pt("2,1"), 3).unwrap(), pt("1,1,1"));
        assert_eq!(mullineux_xu(&pt("2,1"), 3).unwrap(), pt("1,1,1"));
        assert_eq!(mullineux_xu(&pt("1,1,1"), 3).unwrap(), pt("2,1"));
    }

    #[test]
    fn non_restricted_input_is_rejected() {
        assert!(matches!(mullineux_xu(&pt("3"), 3), Err(Error::NotRestricted { .. })));
        assert!(matches!(mullineux_symbolic(&pt("5,1"), 3), Err(Error::NotRestricted { .. })));
        assert!(matches!(mullineux_regular(&pt("1,1,1"), 3), Err(Error::NotRegular { .. })));
    }

    #[test]
    fn regular_form() {
        assert_eq!(mullineux_regular(&pt("3,2,1"), 7).unwrap(), pt("3,2,1"));
        assert_eq!(mullineux_regular(&pt("2,1"), 3).unwrap(), pt("3"));
        let mu = pt("5,4,3,3,1,1").conjugate();
        assert_eq!(mullineux_regular(&mu, 5).unwrap(), pt("4,3,2,2,2,2,2").conjugate());
    }

    #[test]
    fn exhaustive_agreement_at_size_six() {
        for l in Partition::restricted(6, 3).unwrap() {
            assert_eq!(mullineux_symbolic(&l, 3).unwrap(), mullineux_xu(&l, 3).unwrap(), "{l}");
        }
    }
}
