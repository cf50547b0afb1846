//! The Schur superalgebra `S(m|n,d)` with its signed basis `ξ_{i,j}`, structure
//! constants, and the representation `ρ_d` on `V^{⊗d}`.
//!
//! Conventions:
//! - multi-indexes are 1-based, entries `> m` are odd;
//! - permutations are 0-based image vectors `w[s] = w(s)`, composed as `(u∘v)(s) = u(v(s))`;
//! - `S_d` acts on the right, `i·w = (i_{w(1)}, ..., i_{w(d)})`, so `(i·u)·v = i·(u∘v)`;
//! - tensor matrices are indexed by multi-indexes in lexicographic order and act on
//!   column vectors.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pflinalg::{commutant_dimension, FpMatrix, IntMatrix, PrimeField};

/// Largest tensor-space dimension `(m+n)^d` the dense representation accepts.
pub const MAX_TENSOR_DIM: usize = 4096;

/// A permutation of `{0, ..., d-1}` as its image vector.
pub type Permutation = Vec<usize>;

/// All permutations of `d` points in lexicographic order.
pub fn permutations(d: usize) -> Vec<Permutation> {
    (0..d).permutations(d).collect()
}

/// `(u∘v)(s) = u(v(s))`
pub fn compose(u: &[usize], v: &[usize]) -> Permutation {
    v.iter().map(|&s| u[s]).collect()
}

pub fn inverse(w: &[usize]) -> Permutation {
    let mut inv = vec![0; w.len()];
    for (s, &t) in w.iter().enumerate() {
        inv[t] = s;
    }
    inv
}

/// The transposition `s_k = (k, k+1)` for `k` in `1..d`.
pub fn adjacent_transposition(d: usize, k: usize) -> Permutation {
    let mut w: Permutation = (0..d).collect();
    w.swap(k - 1, k);
    w
}

fn add_parity(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().zip(b).map(|(x, y)| (x + y) & 1).collect()
}

/// `α(ε, δ) = Π_{s<t} (-1)^{δ_s ε_t}`
pub fn alpha(eps: &[u8], delta: &[u8]) -> i64 {
    assert_eq!(eps.len(), delta.len(), "parity vectors of different lengths");
    let mut odd_before = 0u32;
    let mut exponent = 0u32;
    for (e, d) in eps.iter().zip(delta) {
        exponent += odd_before * u32::from(*e & 1);
        odd_before += u32::from(*d & 1);
    }
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `γ(ε, w) = Π (-1)^{ε_s ε_t}` over pairs `s < t` with `w⁻¹(s) > w⁻¹(t)`.
pub fn gamma(eps: &[u8], w: &[usize]) -> i64 {
    assert_eq!(eps.len(), w.len(), "parity vector and permutation of different lengths");
    let winv = inverse(w);
    let mut exponent = 0u32;
    for s in 0..w.len() {
        for t in s + 1..w.len() {
            if winv[s] > winv[t] {
                exponent += u32::from(eps[s] & eps[t] & 1);
            }
        }
    }
    if exponent % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A function `{1..d} → {1..m+n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    entries: Vec<usize>,
    m: usize,
    n: usize,
}

impl MultiIndex {
    pub fn new(entries: Vec<usize>, m: usize, n: usize) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&e| e == 0 || e > m + n) {
            return Err(Error::ParameterMismatch(format!("index entry {bad} outside 1..={}", m + n)));
        }
        Ok(MultiIndex { entries, m, n })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `ε_i`: 1 at positions holding an odd entry.
    pub fn parity(&self) -> Vec<u8> {
        self.entries.iter().map(|&e| u8::from(e > self.m)).collect()
    }

    /// `i·w`
    pub fn act(&self, w: &[usize]) -> MultiIndex {
        assert_eq!(w.len(), self.len());
        MultiIndex { entries: w.iter().map(|&s| self.entries[s]).collect(), m: self.m, n: self.n }
    }

    /// `wt(i)`: how often each of `1..=m+n` occurs.
    pub fn weight(&self) -> Vec<usize> {
        let mut wt = vec![0; self.m + self.n];
        for &e in &self.entries {
            wt[e - 1] += 1;
        }
        wt
    }

    /// `i_λ = (1^{λ_1}, 2^{λ_2}, ...)`
    pub fn from_weight(wt: &[usize], m: usize, n: usize) -> Result<Self> {
        if wt.len() != m + n {
            return Err(Error::ParameterMismatch(format!("weight of length {} for m + n = {}", wt.len(), m + n)));
        }
        let entries = wt.iter().enumerate().flat_map(|(k, &c)| std::iter::repeat(k + 1).take(c)).collect();
        Ok(MultiIndex { entries, m, n })
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.entries.iter().join(","))
    }
}

/// A pair `(i, j)` of multi-indexes of equal length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DoubleIndex {
    top: MultiIndex,
    bottom: MultiIndex,
    #[serde(skip)]
    strict: bool,
}

impl DoubleIndex {
    pub fn new(top: MultiIndex, bottom: MultiIndex) -> Result<Self> {
        if top.len() != bottom.len() || (top.m, top.n) != (bottom.m, bottom.n) {
            return Err(Error::ParameterMismatch(format!("double index ({top}, {bottom}) is unbalanced")));
        }
        let strict = is_strict(&top, &bottom);
        Ok(DoubleIndex { top, bottom, strict })
    }

    pub fn from_entries(top: Vec<usize>, bottom: Vec<usize>, m: usize, n: usize) -> Result<Self> {
        Self::new(MultiIndex::new(top, m, n)?, MultiIndex::new(bottom, m, n)?)
    }

    pub fn top(&self) -> &MultiIndex {
        &self.top
    }

    pub fn bottom(&self) -> &MultiIndex {
        &self.bottom
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }

    /// `ε_i + ε_j`
    pub fn parity(&self) -> Vec<u8> {
        add_parity(&self.top.parity(), &self.bottom.parity())
    }

    pub fn act(&self, w: &[usize]) -> DoubleIndex {
        DoubleIndex { top: self.top.act(w), bottom: self.bottom.act(w), strict: self.strict }
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.top.entries.iter().copied().zip(self.bottom.entries.iter().copied())
    }

    pub fn is_canonical(&self) -> bool {
        self.pairs().tuple_windows().all(|(a, b)| a <= b)
    }
}

impl PartialOrd for DoubleIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the sequence of pairs `(top_r, bottom_r)`.
impl Ord for DoubleIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.pairs()
            .cmp(other.pairs())
            .then_with(|| (self.top.m, self.top.n).cmp(&(other.top.m, other.top.n)))
    }
}

impl fmt::Display for DoubleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.top, self.bottom)
    }
}

fn is_strict(top: &MultiIndex, bottom: &MultiIndex) -> bool {
    let par: Vec<u8> = add_parity(&top.parity(), &bottom.parity());
    let pairs: Vec<(usize, usize)> = top.entries.iter().copied().zip(bottom.entries.iter().copied()).collect();
    (0..pairs.len()).all(|r| par[r] == 0 || !pairs[r + 1..].contains(&pairs[r]))
}

/// Every `w` with `rep·w == x`, found position by position.
fn carriers(rep: &DoubleIndex, x: &DoubleIndex) -> Vec<Permutation> {
    fn go(
        rep: &[(usize, usize)],
        x: &[(usize, usize)],
        used: &mut [bool],
        cur: &mut Permutation,
        out: &mut Vec<Permutation>,
    ) {
        let s = cur.len();
        if s == x.len() {
            out.push(cur.clone());
            return;
        }
        for t in 0..rep.len() {
            if !used[t] && rep[t] == x[s] {
                used[t] = true;
                cur.push(t);
                go(rep, x, used, cur, out);
                cur.pop();
                used[t] = false;
            }
        }
    }
    let rep: Vec<_> = rep.pairs().collect();
    let x: Vec<_> = x.pairs().collect();
    let mut out = Vec::new();
    go(&rep, &x, &mut vec![false; rep.len()], &mut Vec::new(), &mut out);
    out
}

/// The canonical orbit representative (sorted pair sequence) and the sign
/// `σ = γ(ε_rep_top + ε_rep_bottom, w)` with `ξ_x = σ ξ_rep`.
///
/// Panics if two permutations carrying `rep` to `x` disagree on the sign, which
/// cannot happen for strict indexes.
pub fn canonical_rep(x: &DoubleIndex) -> Result<(DoubleIndex, i64)> {
    if !x.strict {
        return Err(Error::NotStrict);
    }
    let order: Vec<usize> = (0..x.len()).sorted_by_key(|&r| (x.top.entries[r], x.bottom.entries[r])).collect();
    let rep = x.act(&order);
    let par = rep.parity();
    let signs: Vec<i64> = carriers(&rep, x).iter().map(|w| gamma(&par, w)).collect();
    assert!(signs.iter().all_equal(), "sign of {x} depends on the permutation");
    Ok((rep, signs[0]))
}

/// Position of a multi-index in lexicographic order.
fn index_position(entries: &[usize], base: usize) -> usize {
    entries.iter().fold(0, |acc, &e| acc * base + (e - 1))
}

/// Compositions of `d` into `parts` nonnegative parts, in decreasing lexicographic order.
pub fn compositions(d: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// An element of `S(m|n,d)` as coefficients on canonical basis elements, over `ℤ`
/// or over `F_p` when a modulus is attached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurElement {
    params: (usize, usize, usize),
    modulus: Option<u64>,
    coeffs: BTreeMap<DoubleIndex, i64>,
}

impl SchurElement {
    pub fn zero(m: usize, n: usize, d: usize, modulus: Option<u64>) -> Self {
        SchurElement { params: (m, n, d), modulus, coeffs: BTreeMap::new() }
    }

    pub fn params(&self) -> (usize, usize, usize) {
        self.params
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, x: &DoubleIndex) -> i64 {
        self.coeffs.get(x).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DoubleIndex, i64)> {
        self.coeffs.iter().map(|(k, &v)| (k, v))
    }

    fn normalize(&self, c: i64) -> i64 {
        match self.modulus {
            Some(p) => c.rem_euclid(p as i64),
            None => c,
        }
    }

    fn add_term(&mut self, key: DoubleIndex, c: i64) {
        let v = self.normalize(self.coeff(&key) + c);
        if v == 0 {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, v);
        }
    }

    fn check_compatible(&self, other: &SchurElement) -> Result<()> {
        if self.params != other.params || self.modulus != other.modulus {
            return Err(Error::ParameterMismatch(format!(
                "elements of S{:?} mod {:?} and S{:?} mod {:?}",
                self.params, self.modulus, other.params, other.modulus
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &SchurElement) -> Result<SchurElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> SchurElement {
        let mut out = SchurElement { coeffs: BTreeMap::new(), ..self.clone() };
        for (key, c) in self.terms() {
            let v = out.normalize(c * k);
            if v != 0 {
                out.coeffs.insert(key.clone(), v);
            }
        }
        out
    }

    /// Reduce integer coefficients mod an odd prime.
    pub fn reduce(&self, p: u64) -> Result<SchurElement> {
        PrimeField::new(p)?;
        if let Some(q) = self.modulus {
            if q != p {
                return Err(Error::ParameterMismatch(format!("element is already reduced mod {q}")));
            }
        }
        let mut out = SchurElement { modulus: Some(p), coeffs: BTreeMap::new(), ..self.clone() };
        for (key, c) in self.terms() {
            let v = out.normalize(c);
            if v != 0 {
                out.coeffs.insert(key.clone(), v);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms = self.terms().map(|(k, c)| format!("{c}·ξ{k}")).join(" + ");
        f.write_str(&terms)
    }
}

/// The structure-constant table in its JSON shape.
#[derive(Clone, Debug, Serialize)]
pub struct StructureTable {
    pub params: [usize; 3],
    pub basis: Vec<DoubleIndex>,
    /// `[left, right, result, coeff]` for every nonzero constant.
    pub products: Vec<[i64; 4]>,
}

/// `S(m|n,d)` with its basis, orbits and the data needed for products and `ρ_d`.
#[derive(Clone, Debug)]
pub struct SchurAlgebra {
    m: usize,
    n: usize,
    d: usize,
    indices: Vec<MultiIndex>,
    parities: Vec<Vec<u8>>,
    basis: Vec<DoubleIndex>,
    basis_pos: HashMap<(usize, usize), usize>,
    /// orbit of each basis element: `(top position, bottom position, σ)`
    orbits: Vec<Vec<(usize, usize, i64)>>,
}

impl SchurAlgebra {
    pub fn new(m: usize, n: usize, d: usize) -> Result<Self> {
        let base = m + n;
        if base == 0 {
            return Err(Error::ParameterMismatch("m + n must be positive".into()));
        }
        let dim = (0..d).try_fold(1usize, |acc, _| acc.checked_mul(base).filter(|&x| x <= MAX_TENSOR_DIM));
        let Some(dim) = dim else {
            return Err(Error::TooLarge(base.saturating_pow(d as u32)));
        };
        let indices: Vec<MultiIndex> = (0..d)
            .map(|_| 1..=base)
            .multi_cartesian_product()
            .map(|entries| MultiIndex { entries, m, n })
            .collect();
        let indices = if d == 0 { vec![MultiIndex { entries: vec![], m, n }] } else { indices };
        debug_assert_eq!(indices.len(), dim);
        let parities: Vec<Vec<u8>> = indices.iter().map(|i| i.parity()).collect();

        let mut basis = Vec::new();
        for (a, b) in (0..dim).cartesian_product(0..dim) {
            let x = DoubleIndex::new(indices[a].clone(), indices[b].clone())?;
            if x.strict && x.is_canonical() {
                basis.push(x);
            }
        }
        basis.sort();
        let perms = permutations(d);
        let mut basis_pos = HashMap::new();
        let mut orbits = Vec::with_capacity(basis.len());
        for (pos, x) in basis.iter().enumerate() {
            basis_pos.insert((index_position(&x.top.entries, base), index_position(&x.bottom.entries, base)), pos);
            let par = x.parity();
            let mut orbit: BTreeMap<(usize, usize), i64> = BTreeMap::new();
            for w in &perms {
                let y = x.act(w);
                let key = (index_position(&y.top.entries, base), index_position(&y.bottom.entries, base));
                let sign = gamma(&par, w);
                let prev = *orbit.entry(key).or_insert(sign);
                assert_eq!(prev, sign, "sign of {y} depends on the permutation");
            }
            orbits.push(orbit.into_iter().map(|((k, l), s)| (k, l, s)).collect());
        }
        Ok(SchurAlgebra { m, n, d, indices, parities, basis, basis_pos, orbits })
    }

    pub fn params(&self) -> (usize, usize, usize) {
        (self.m, self.n, self.d)
    }

    /// `(m+n)^d`
    pub fn tensor_dim(&self) -> usize {
        self.indices.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[DoubleIndex] {
        &self.basis
    }

    /// Multi-indexes in the order used for tensor matrices.
    pub fn multi_indices(&self) -> &[MultiIndex] {
        &self.indices
    }

    pub fn position(&self, i: &MultiIndex) -> usize {
        index_position(&i.entries, self.m + self.n)
    }

    fn check_index(&self, x: &DoubleIndex) -> Result<()> {
        if (x.top.m, x.top.n, x.len()) != (self.m, self.n, self.d) {
            return Err(Error::ParameterMismatch(format!("{x} is not an index for S{:?}", self.params())));
        }
        Ok(())
    }

    fn basis_position(&self, x: &DoubleIndex) -> Option<usize> {
        self.basis_pos.get(&(self.position(&x.top), self.position(&x.bottom))).copied()
    }

    pub fn zero(&self) -> SchurElement {
        SchurElement::zero(self.m, self.n, self.d, None)
    }

    pub fn basis_element(&self, pos: usize) -> SchurElement {
        let mut e = self.zero();
        e.coeffs.insert(self.basis[pos].clone(), 1);
        e
    }

    /// `ξ_{i,j}` written in the canonical basis, i.e. `σ ξ_rep`.
    pub fn xi(&self, x: &DoubleIndex) -> Result<SchurElement> {
        self.check_index(x)?;
        let (rep, sign) = canonical_rep(x)?;
        let mut e = self.zero();
        e.coeffs.insert(rep, sign);
        Ok(e)
    }

    /// `Λ(m|n,d)`: all compositions of `d` into `m+n` parts.
    pub fn weights(&self) -> Vec<Vec<usize>> {
        compositions(self.d, self.m + self.n)
    }

    /// `ξ_λ = ξ_{i_λ, i_λ}`
    pub fn weight_idempotent(&self, lambda: &[usize]) -> Result<SchurElement> {
        if lambda.iter().sum::<usize>() != self.d {
            return Err(Error::ParameterMismatch(format!("weight {lambda:?} does not have degree {}", self.d)));
        }
        let i = MultiIndex::from_weight(lambda, self.m, self.n)?;
        self.xi(&DoubleIndex::new(i.clone(), i)?)
    }

    /// `Σ_λ ξ_λ`
    pub fn identity(&self) -> SchurElement {
        let mut e = self.zero();
        for lambda in self.weights() {
            let i = MultiIndex::from_weight(&lambda, self.m, self.n).expect("weights have length m + n");
            e.add_term(DoubleIndex { top: i.clone(), bottom: i, strict: true }, 1);
        }
        e
    }

    /// Basis positions with `wt(top) = λ` and `wt(bottom) = μ`.
    pub fn weight_block(&self, lambda: &[usize], mu: &[usize]) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].top.weight() == lambda && self.basis[b].bottom.weight() == mu)
            .collect()
    }

    /// `ξ_{i_ω·x, i_ω}` for `ω = ε_1 + ... + ε_d`.
    pub fn embed_group_element(&self, x: &[usize]) -> Result<SchurElement> {
        if self.d > self.m {
            return Err(Error::DegreeExceedsRank { d: self.d, m: self.m });
        }
        if x.len() != self.d || !x.iter().copied().sorted().eq(0..self.d) {
            return Err(Error::ParameterMismatch(format!("{x:?} is not a permutation of {} points", self.d)));
        }
        let omega = MultiIndex { entries: (1..=self.d).collect(), m: self.m, n: self.n };
        self.xi(&DoubleIndex::new(omega.act(x), omega)?)
    }

    /// `ξ_a ξ_b` for basis positions, as `(result position, coefficient)` pairs.
    pub fn basis_product(&self, a: usize, b: usize) -> Vec<(usize, i64)> {
        let mut by_middle: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
        for &(s, h, sign) in &self.orbits[a] {
            by_middle.entry(h).or_default().push((s, sign));
        }
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for &(h, t, sign2) in &self.orbits[b] {
            let Some(lefts) = by_middle.get(&h) else { continue };
            for &(s, sign1) in lefts {
                let Some(&r) = self.basis_pos.get(&(s, t)) else { continue };
                let ps = &self.parities[s];
                let ph = &self.parities[h];
                let pt = &self.parities[t];
                let sign = alpha(&add_parity(ps, ph), &add_parity(ph, pt));
                *acc.entry(r).or_insert(0) += sign1 * sign2 * sign;
            }
        }
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }

    /// All structure constants, indexed by `(a, b)` as `a * dim + b`.
    pub fn structure_constants(&self) -> Vec<Vec<(usize, i64)>> {
        let dim = self.dim();
        (0..dim * dim).map(|ab| self.basis_product(ab / dim, ab % dim)).collect()
    }

    pub fn structure_table(&self) -> StructureTable {
        let dim = self.dim();
        let mut products = Vec::new();
        for (ab, terms) in self.structure_constants().into_iter().enumerate() {
            for (r, c) in terms {
                products.push([(ab / dim) as i64, (ab % dim) as i64, r as i64, c]);
            }
        }
        StructureTable { params: [self.m, self.n, self.d], basis: self.basis.clone(), products }
    }

    fn check_element(&self, a: &SchurElement) -> Result<()> {
        if a.params != self.params() {
            return Err(Error::ParameterMismatch(format!(
                "element of S{:?} used in S{:?}",
                a.params,
                self.params()
            )));
        }
        Ok(())
    }

    fn position_of_key(&self, key: &DoubleIndex) -> usize {
        self.basis_position(key).expect("element keys are canonical basis indexes")
    }

    pub fn multiply(&self, a: &SchurElement, b: &SchurElement) -> Result<SchurElement> {
        self.check_element(a)?;
        a.check_compatible(b)?;
        let mut out = SchurElement { coeffs: BTreeMap::new(), ..a.clone() };
        for (x, cx) in a.terms() {
            let px = self.position_of_key(x);
            for (y, cy) in b.terms() {
                for (r, c) in self.basis_product(px, self.position_of_key(y)) {
                    out.add_term(self.basis[r].clone(), cx * cy * c);
                }
            }
        }
        Ok(out)
    }

    /// Nonzero entries `(row, col, value)` of `ρ_d(ξ_b)`.
    fn rho_terms(&self, b: usize) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.orbits[b].iter().map(move |&(k, l, sign)| {
            let pl = &self.parities[l];
            (k, l, sign * alpha(&add_parity(&self.parities[k], pl), pl))
        })
    }

    /// `ρ_d(a)` on `V^{⊗d}`; entries are residues when `a` carries a modulus.
    pub fn rho(&self, a: &SchurElement) -> Result<IntMatrix> {
        self.check_element(a)?;
        let dim = self.tensor_dim();
        let mut out = IntMatrix::zeros(dim, dim);
        for (x, c) in a.terms() {
            for (k, l, v) in self.rho_terms(self.position_of_key(x)) {
                out.add_at(k, l, c * v);
            }
        }
        if let Some(p) = a.modulus {
            for k in 0..dim {
                for l in 0..dim {
                    out.set(k, l, out.get(k, l).rem_euclid(p as i64));
                }
            }
        }
        Ok(out)
    }

    pub fn rho_basis(&self, b: usize) -> IntMatrix {
        self.rho(&self.basis_element(b)).expect("basis element belongs to this algebra")
    }

    /// The signed permutation matrix of `w`: `v_i ↦ γ(ε_i, w) v_{i·w}`.
    ///
    /// Because the action is on the right, `symmetric_action(u∘v) = symmetric_action(v) · symmetric_action(u)`.
    pub fn symmetric_action(&self, w: &[usize]) -> Result<IntMatrix> {
        if w.len() != self.d || !w.iter().copied().sorted().eq(0..self.d) {
            return Err(Error::ParameterMismatch(format!("{w:?} is not a permutation of {} points", self.d)));
        }
        let dim = self.tensor_dim();
        let mut out = IntMatrix::zeros(dim, dim);
        for (col, i) in self.indices.iter().enumerate() {
            out.set(self.position(&i.act(w)), col, gamma(&self.parities[col], w));
        }
        Ok(out)
    }

    /// Matrices of the adjacent transpositions, which generate the `S_d` action.
    pub fn symmetric_generators(&self) -> Vec<IntMatrix> {
        (1..self.d)
            .map(|k| self.symmetric_action(&adjacent_transposition(self.d, k)).unwrap())
            .collect()
    }
}

/// Outcome of one check in [`verify_algebra`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurCheck {
    pub name: String,
    /// `"Z"` or `"F<p>"`
    pub ring: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchurReport {
    pub params: [usize; 3],
    pub dim: usize,
    pub checks: Vec<SchurCheck>,
    pub pass: bool,
}

/// Prime used for the rational upper bound on commutant dimensions.
const LARGE_PRIME: u64 = 1_000_003;

fn flatten(mats: &[IntMatrix]) -> IntMatrix {
    let rows: Vec<Vec<i64>> = mats.iter().map(|m| m.entries().to_vec()).collect();
    IntMatrix::from_rows(&rows)
}

fn commutes(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.mul(b).unwrap() == b.mul(a).unwrap()
}

fn reduce_all(mats: &[IntMatrix], field: PrimeField) -> Vec<FpMatrix> {
    mats.iter().map(|m| m.reduce(field)).collect()
}

/// Commutant dimension over `ℚ`, pinned between the rank of known commuting
/// integer witnesses and the dimension over `F_ℓ` for a large prime `ℓ`.
fn rational_commutant_dimension(size: usize, gens: &[IntMatrix], witnesses: &[IntMatrix]) -> Option<usize> {
    let field = PrimeField::new(LARGE_PRIME).unwrap();
    let upper = commutant_dimension(field, size, &reduce_all(gens, field)).ok()?;
    let all_commute = witnesses.iter().all(|w| gens.iter().all(|g| commutes(g, w)));
    let lower = flatten(witnesses).rank();
    (all_commute && lower == upper).then_some(upper)
}

/// Run the structural checks of `S(m|n,d)` over `ℤ` and each prime in `primes`.
pub fn verify_algebra(m: usize, n: usize, d: usize, primes: &[u64]) -> Result<SchurReport> {
    let fields = primes.iter().map(|&p| PrimeField::new(p)).collect::<Result<Vec<_>>>()?;
    let alg = SchurAlgebra::new(m, n, d)?;
    let dim = alg.dim();
    let tdim = alg.tensor_dim();
    let table = alg.structure_constants();
    let rhos: Vec<IntMatrix> = (0..dim).map(|b| alg.rho_basis(b)).collect();
    let sym = alg.symmetric_generators();
    let group: Vec<IntMatrix> = permutations(d).iter().map(|w| alg.symmetric_action(w).unwrap()).collect();
    let mut checks = Vec::new();
    let mut push = |name: &str, ring: String, pass: bool, detail: String| {
        checks.push(SchurCheck { name: name.into(), ring, pass, detail });
    };

    let rings: Vec<Option<PrimeField>> = std::iter::once(None).chain(fields.iter().copied().map(Some)).collect();
    for f in rings {
        let ring = f.map_or("Z".to_string(), |f| format!("F{}", f.modulus()));
        let red = |c: i64| f.map_or(c, |f| f.reduce(c) as i64);
        let combine = |terms: &[(usize, i64)], k: i64, acc: &mut BTreeMap<usize, i64>| {
            for &(r, c) in terms {
                *acc.entry(r).or_insert(0) += k * c;
            }
        };
        let clean = |acc: BTreeMap<usize, i64>| -> Vec<(usize, i64)> {
            acc.into_iter().map(|(r, c)| (r, red(c))).filter(|&(_, c)| c != 0).collect()
        };

        let mut bad = 0usize;
        for a in 0..dim {
            for b in 0..dim {
                let ab = &table[a * dim + b];
                for c in 0..dim {
                    let mut left = BTreeMap::new();
                    for &(r, k) in ab {
                        combine(&table[r * dim + c], k, &mut left);
                    }
                    let mut right = BTreeMap::new();
                    for &(r, k) in &table[b * dim + c] {
                        combine(&table[a * dim + r], k, &mut right);
                    }
                    if clean(left) != clean(right) {
                        bad += 1;
                    }
                }
            }
        }
        push("associativity", ring.clone(), bad == 0, format!("{} basis triples, {bad} failures", dim * dim * dim));

        let to_ring = |mat: &IntMatrix| f.map(|f| mat.reduce(f));
        let mut bad = 0usize;
        for a in 0..dim {
            for b in 0..dim {
                let mut lhs = IntMatrix::zeros(tdim, tdim);
                for &(r, c) in &table[a * dim + b] {
                    lhs = lhs.add(&rhos[r].scale(c)).unwrap();
                }
                let rhs = rhos[a].mul(&rhos[b]).unwrap();
                let ok = match f {
                    None => lhs == rhs,
                    Some(_) => to_ring(&lhs) == to_ring(&rhs),
                };
                bad += usize::from(!ok);
            }
        }
        push("rho multiplicative", ring.clone(), bad == 0, format!("{} basis pairs, {bad} failures", dim * dim));

        let images = flatten(&rhos);
        let rank = match f {
            None => images.rank(),
            Some(f) => images.reduce(f).rank(),
        };
        push("rho injective", ring.clone(), rank == dim, format!("rank {rank} of {dim} basis images"));

        let one = alg.identity();
        let one_rho = alg.rho(&one)?;
        let mut ok = one_rho == IntMatrix::identity(tdim);
        for b in 0..dim {
            let e = alg.basis_element(b);
            ok &= alg.multiply(&one, &e)? == e && alg.multiply(&e, &one)? == e;
        }
        push("idempotent sum is identity", ring.clone(), ok, format!("{} weights", alg.weights().len()));

        let bad = rhos.iter().filter(|r| !sym.iter().all(|s| commutes(r, s))).count();
        push("S_d action commutes with rho", ring.clone(), bad == 0, format!("{bad} non-commuting images"));

        let sd_comm = match f {
            None => rational_commutant_dimension(tdim, &sym, &rhos),
            Some(f) => commutant_dimension(f, tdim, &reduce_all(&sym, f)).ok(),
        };
        push(
            "commutant of S_d action",
            ring.clone(),
            sd_comm == Some(dim),
            format!("dimension {sd_comm:?}, expected {dim}"),
        );

        if d <= m {
            let expected = group.len();
            let comm = match f {
                None => rational_commutant_dimension(tdim, &rhos, &group),
                Some(f) => commutant_dimension(f, tdim, &reduce_all(&rhos, f)).ok(),
            };
            push(
                "commutant of rho image",
                ring.clone(),
                comm == Some(expected),
                format!("dimension {comm:?}, expected d! = {expected}"),
            );
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(SchurReport { params: [m, n, d], dim, checks, pass })
}
