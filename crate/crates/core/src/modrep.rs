//! Modular representations of symmetric groups at desk scale.
//!
//! Specht modules are built from polytabloids inside the tabloid permutation
//! module, `D^μ` is the image of the Gram matrix, and isomorphism is decided by
//! solving for intertwiners. All modules are left modules: generator `k` is the
//! matrix of `s_k = (k, k+1)` acting on column vectors.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mullineux::mullineux_regular;
use crate::partitions::Partition;
use crate::pflinalg::{commutant_dimension, solve_commutant, FpMatrix, IntMatrix, PrimeField};

/// Largest degree the dense constructions are meant for.
pub const MAX_DEGREE: usize = 7;

/// A representation of `S_d` over `F_p` given by its adjacent transpositions.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRep {
    d: usize,
    p: u64,
    dim: usize,
    gens: Vec<FpMatrix>,
}

impl fmt::Debug for GroupRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupRep").field("d", &self.d).field("p", &self.p).field("dim", &self.dim).finish()
    }
}

impl GroupRep {
    /// Checks `s_k² = 1`, the braid relations and commutation of distant generators.
    pub fn new(d: usize, p: u64, dim: usize, gens: Vec<FpMatrix>) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let bad = |msg: String| Err(Error::InvalidRepresentation(msg));
        if gens.len() != d.saturating_sub(1) {
            return bad(format!("{} generators for S_{d}", gens.len()));
        }
        if let Some(g) = gens.iter().find(|g| g.modulus() != p || g.rows() != dim || g.cols() != dim) {
            return bad(format!("generator of shape {}x{} mod {}, expected {dim}x{dim} mod {p}", g.rows(), g.cols(), g.modulus()));
        }
        let one = FpMatrix::identity(field, dim);
        for (k, g) in gens.iter().enumerate() {
            if g.mul(g)? != one {
                return bad(format!("s_{} does not square to the identity", k + 1));
            }
        }
        for (k, l) in (0..gens.len()).tuple_combinations() {
            let (a, b) = (&gens[k], &gens[l]);
            let ok = if l == k + 1 {
                a.mul(b)?.mul(a)? == b.mul(a)?.mul(b)?
            } else {
                a.mul(b)? == b.mul(a)?
            };
            if !ok {
                return bad(format!("relation between s_{} and s_{} fails", k + 1, l + 1));
            }
        }
        Ok(GroupRep { d, p, dim, gens })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[FpMatrix] {
        &self.gens
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("checked at construction")
    }

    /// The matrix of an arbitrary permutation (0-based image vector), composed from
    /// adjacent transpositions.
    pub fn act(&self, w: &[usize]) -> Result<FpMatrix> {
        if w.len() != self.d || !w.iter().copied().sorted().eq(0..self.d) {
            return Err(Error::ParameterMismatch(format!("{w:?} is not a permutation of {} points", self.d)));
        }
        // w ∘ s_{k1} ∘ ... ∘ s_{kr} = id, hence w = s_{kr} ∘ ... ∘ s_{k1}
        let mut cur = w.to_vec();
        let mut word = Vec::new();
        while let Some(k) = (0..self.d.saturating_sub(1)).find(|&k| cur[k] > cur[k + 1]) {
            cur.swap(k, k + 1);
            word.push(k);
        }
        let mut out = FpMatrix::identity(self.field(), self.dim);
        for &k in word.iter().rev() {
            out = out.mul(&self.gens[k])?;
        }
        Ok(out)
    }

    pub fn commutant_dimension(&self) -> Result<usize> {
        commutant_dimension(self.field(), self.dim, &self.gens)
    }
}

/// A standard Young tableau as its rows of entries `1..=d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau(pub Vec<Vec<usize>>);

impl Tableau {
    /// The row (0-based) holding each entry.
    fn row_word(&self, d: usize) -> Vec<u8> {
        let mut word = vec![0u8; d];
        for (r, row) in self.0.iter().enumerate() {
            for &x in row {
                word[x - 1] = r as u8;
            }
        }
        word
    }

    fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.0.first().map_or(0, Vec::len);
        (0..width).map(|c| self.0.iter().filter_map(|row| row.get(c).copied()).collect()).collect()
    }
}

/// Standard tableaux of shape `λ`, ordered by their row words (the row of entry 1, entry 2, ...).
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    fn go(lambda: &Partition, filled: &mut Vec<usize>, word: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if word.len() == lambda.size() {
            out.push(word.clone());
            return;
        }
        for r in 0..lambda.len() {
            let fits = filled[r] < lambda.parts()[r] && (r == 0 || filled[r - 1] > filled[r]);
            if fits {
                filled[r] += 1;
                word.push(r as u8);
                go(lambda, filled, word, out);
                word.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut words = Vec::new();
    go(lambda, &mut vec![0; lambda.len()], &mut Vec::new(), &mut words);
    words
        .into_iter()
        .map(|word| {
            let mut rows = vec![Vec::new(); lambda.len()];
            for (x, &r) in word.iter().enumerate() {
                rows[r as usize].push(x + 1);
            }
            Tableau(rows)
        })
        .collect()
}

fn sign_of(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len()).tuple_combinations().filter(|&(a, b)| perm[a] > perm[b]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `e_t = Σ_{π ∈ C_t} sgn(π) {πt}`, keyed by tabloid row words.
fn polytabloid(t: &Tableau, d: usize) -> HashMap<Vec<u8>, i64> {
    let columns = t.columns();
    let mut terms: Vec<(Vec<u8>, i64)> = vec![(vec![0u8; d], 1)];
    for col in &columns {
        let h = col.len();
        let mut next = Vec::with_capacity(terms.len() * (1..=h).product::<usize>());
        for perm in (0..h).permutations(h) {
            let sign = sign_of(&perm);
            for (word, s) in &terms {
                let mut word = word.clone();
                for (r, &src) in perm.iter().enumerate() {
                    word[col[src] - 1] = r as u8;
                }
                next.push((word, s * sign));
            }
        }
        terms = next;
    }
    let mut out = HashMap::new();
    for (word, s) in terms {
        *out.entry(word).or_insert(0) += s;
    }
    out.retain(|_, v| *v != 0);
    out
}

/// The Specht module `S^λ` over `F_p` in its standard polytabloid basis.
#[derive(Clone, Debug)]
pub struct SpechtData {
    pub shape: Partition,
    pub basis: Vec<Tableau>,
    pub rep: GroupRep,
    /// Integral Gram matrix of the polytabloids, tabloids being orthonormal.
    pub gram: IntMatrix,
}

fn check_degree(d: usize) -> Result<()> {
    if d > MAX_DEGREE {
        return Err(Error::TooLarge(d));
    }
    Ok(())
}

pub fn specht(lambda: &Partition, d: usize, p: u64) -> Result<SpechtData> {
    let field = PrimeField::new(p)?;
    if lambda.size() != d {
        return Err(Error::ParameterMismatch(format!("|{lambda}| = {} but d = {d}", lambda.size())));
    }
    check_degree(d)?;
    let basis = standard_tableaux(lambda);
    let dim = basis.len();
    let polys: Vec<HashMap<Vec<u8>, i64>> = basis.iter().map(|t| polytabloid(t, d)).collect();
    let std_words: Vec<Vec<u8>> = basis.iter().map(|t| t.row_word(d)).collect();

    let mut gram = IntMatrix::zeros(dim, dim);
    for a in 0..dim {
        for b in a..dim {
            let (small, large) = if polys[a].len() <= polys[b].len() { (a, b) } else { (b, a) };
            let v: i64 = polys[small].iter().filter_map(|(k, x)| polys[large].get(k).map(|y| x * y)).sum();
            gram.set(a, b, v);
            gram.set(b, a, v);
        }
    }

    // [P | images]: P[u][t] is the coefficient of the standard tabloid {u} in e_t,
    // and each image column is e_{s_k t} restricted to standard tabloids.
    let mut gens = Vec::with_capacity(d.saturating_sub(1));
    if d >= 2 {
        let width = dim + (d - 1) * dim;
        let mut aug = vec![vec![0i64; width]; dim];
        for (t, poly) in polys.iter().enumerate() {
            for (u, w) in std_words.iter().enumerate() {
                aug[u][t] = poly.get(w).copied().unwrap_or(0);
            }
        }
        for k in 0..d - 1 {
            for (t, tab) in basis.iter().enumerate() {
                let swapped = Tableau(
                    tab.0
                        .iter()
                        .map(|row| row.iter().map(|&x| if x == k + 1 { k + 2 } else if x == k + 2 { k + 1 } else { x }).collect())
                        .collect(),
                );
                let poly = polytabloid(&swapped, d);
                for (u, w) in std_words.iter().enumerate() {
                    aug[u][dim + k * dim + t] = poly.get(w).copied().unwrap_or(0);
                }
            }
        }
        let (rref, pivots) = FpMatrix::from_rows(field, &aug).rref();
        if pivots.iter().take(dim).copied().ne(0..dim) {
            return Err(Error::InvalidRepresentation(format!("polytabloids of {lambda} are dependent mod {p}")));
        }
        for k in 0..d - 1 {
            let mut g = FpMatrix::zeros(field, dim, dim);
            for u in 0..dim {
                for t in 0..dim {
                    g.set(u, t, rref.get(u, dim + k * dim + t));
                }
            }
            gens.push(g);
        }
    }
    let rep = GroupRep::new(d, p, dim, gens)?;
    let g = gram.reduce(field);
    for a in rep.gens() {
        if a.transpose().mul(&g)?.mul(a)? != g {
            return Err(Error::InvalidRepresentation(format!("Gram matrix of {lambda} is not invariant")));
        }
    }
    Ok(SpechtData { shape: lambda.clone(), basis, rep, gram })
}

/// `D^μ = S^μ / rad`, realized on the image of the Gram matrix mod `p`.
pub fn irreducible_d(mu: &Partition, d: usize, p: u64) -> Result<GroupRep> {
    if !mu.is_regular(p)? {
        return Err(Error::NotRegular { partition: mu.clone(), p });
    }
    let sp = specht(mu, d, p)?;
    let field = sp.rep.field();
    let (rref, pivots) = sp.gram.reduce(field).rref();
    let r = pivots.len();
    if r == 0 {
        return Err(Error::ZeroDimension);
    }
    // G A_k = A_kᵀ G, so the image of G carries the action A_kᵀ
    let gens = sp
        .rep
        .gens()
        .iter()
        .map(|a| {
            let at = a.transpose();
            let mut g = FpMatrix::zeros(field, r, r);
            for k in 0..r {
                let image = at.mul_vec(rref.row(k));
                for (j, &c) in pivots.iter().enumerate() {
                    g.set(j, k, image[c]);
                }
            }
            g
        })
        .collect();
    let rep = GroupRep::new(d, p, r, gens)?;
    let comm = rep.commutant_dimension()?;
    if comm != 1 {
        return Err(Error::InvalidRepresentation(format!("D^{mu} mod {p} has a {comm}-dimensional commutant")));
    }
    Ok(rep)
}

/// `r ⊗ sgn`
pub fn tensor_sign(r: &GroupRep) -> GroupRep {
    GroupRep { gens: r.gens.iter().map(FpMatrix::neg).collect(), ..r.clone() }
}

/// Whether a nonzero, invertible `X` with `X a(s_k) = b(s_k) X` for all `k` exists.
pub fn are_isomorphic(a: &GroupRep, b: &GroupRep) -> Result<bool> {
    if (a.d, a.p) != (b.d, b.p) {
        return Err(Error::ParameterMismatch(format!(
            "representations of S_{} mod {} and S_{} mod {}",
            a.d, a.p, b.d, b.p
        )));
    }
    if a.dim == 0 || b.dim == 0 {
        return Err(Error::ZeroDimension);
    }
    if a.dim != b.dim {
        return Ok(false);
    }
    if a.gens.is_empty() {
        return Ok(true);
    }
    let solutions = solve_commutant(&a.gens, &b.gens)?;
    Ok(solutions.first().is_some_and(FpMatrix::is_invertible))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MullineuxCase {
    pub mu: Partition,
    pub m_mu: Partition,
    pub dim: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MullineuxReport {
    pub d: usize,
    pub p: u64,
    pub cases: Vec<MullineuxCase>,
    pub pass: bool,
}

/// Checks `D^μ ⊗ sgn ≅ D^{M(μ)}` for every `p`-regular `μ` of `d`.
pub fn verify_mullineux(d: usize, p: u64) -> Result<MullineuxReport> {
    PrimeField::new(p)?;
    check_degree(d)?;
    let mut cases = Vec::new();
    for mu in Partition::regular(d, p)? {
        let m_mu = mullineux_regular(&mu, p)?;
        let twisted = tensor_sign(&irreducible_d(&mu, d, p)?);
        let target = irreducible_d(&m_mu, d, p)?;
        let pass = are_isomorphic(&twisted, &target)?;
        cases.push(MullineuxCase { dim: twisted.dim(), mu, m_mu, pass });
    }
    let pass = cases.iter().all(|c| c.pass);
    Ok(MullineuxReport { d, p, cases, pass })
}
