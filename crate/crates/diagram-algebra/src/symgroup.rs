//! The symmetric-group layer: permutations and involutions, the Saxl and
//! Adin-Postnikov-Roichman twisting signs, Murnaghan-Nakayama characters,
//! and the multiplicity table of the involution module.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diagram::{Diagram, Family};
use crate::model::{self, SymmetricBasis};
use crate::poly::Rational;
use crate::{Error, Result};

/// A permutation of `1..=k`, stored as the image list `w(1), ..., w(k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Self { images: (1..=k).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &j in &images {
            if j == 0 || j > k || seen[j - 1] {
                return Err(Error::NotAPermutation(images.clone()));
            }
            seen[j - 1] = true;
        }
        Ok(Self { images })
    }

    /// Product of cycles, e.g. `&[vec![1, 3], vec![4, 5, 6]]` in `S_k`.
    pub fn from_cycles(k: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=k).collect();
        for cycle in cycles {
            for w in cycle.windows(2) {
                images[w[0] - 1] = w[1];
            }
            if let (Some(&last), Some(&first)) = (cycle.last(), cycle.first()) {
                images[last - 1] = first;
            }
        }
        Self::from_images(images)
    }

    pub fn k(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.k()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j - 1] = i + 1;
        }
        Self { images }
    }

    /// `self` after `rhs`: `(self * rhs)(i) = self(rhs(i))`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.k() != rhs.k() {
            return Err(Error::KMismatch(self.k(), rhs.k()));
        }
        Ok(Self { images: (1..=self.k()).map(|i| self.apply(rhs.apply(i))).collect() })
    }

    pub fn conjugate(&self, t: &Self) -> Result<Self> {
        self.compose(t)?.compose(&self.inverse())
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.k()).all(|i| self.apply(self.apply(i)) == i)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (1..=self.k()).filter(|&i| self.apply(i) == i).collect()
    }

    /// Parity of the inversion count.
    pub fn sign(&self) -> i8 {
        let mut inversions = 0usize;
        for i in 0..self.k() {
            for j in i + 1..self.k() {
                if self.images[i] > self.images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Cycle type as a descending partition of `k`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.k()];
        let mut parts = Vec::new();
        for start in 1..=self.k() {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur - 1] {
                seen[cur - 1] = true;
                len += 1;
                cur = self.apply(cur);
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts
    }

    /// The diagram with blocks `{w(j), j'}`: each bottom vertex is wired to
    /// its image on top.  With this orientation stacking diagrams composes
    /// the underlying functions, and conjugating a symmetric diagram by the
    /// diagram of `w` realizes `w t w^{-1}`.
    pub fn to_diagram(&self) -> Diagram {
        let k = self.k();
        let blocks: Vec<Vec<usize>> =
            self.images.iter().enumerate().map(|(j, &i)| vec![i, k + j + 1]).collect();
        Diagram::from_encoded_blocks(k, &blocks).expect("permutation blocks partition")
    }

    pub fn from_diagram(d: &Diagram) -> Result<Self> {
        let k = d.k();
        if d.rank() != k {
            return Err(Error::NotInFamily {
                family: Family::SymmetricGroup,
                diagram: d.to_string(),
            });
        }
        let mut images = vec![0; k];
        for b in d.blocks() {
            images[b[1] - k - 1] = b[0];
        }
        Self::from_images(images)
    }
}

impl std::fmt::Debug for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

/// All involutions of `S_k` with exactly `f` fixed points (empty when the
/// parity is wrong).
pub fn involutions(k: usize, f: usize) -> Vec<Permutation> {
    if f > k || (k - f) % 2 != 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut images: Vec<usize> = vec![0; k];
    fn rec(
        fixed_left: usize,
        pairs_left: usize,
        images: &mut Vec<usize>,
        out: &mut Vec<Permutation>,
    ) {
        let i = match images.iter().position(|&x| x == 0) {
            None => {
                out.push(Permutation { images: images.clone() });
                return;
            }
            Some(i) => i,
        };
        if fixed_left > 0 {
            images[i] = i + 1;
            rec(fixed_left - 1, pairs_left, images, out);
            images[i] = 0;
        }
        if pairs_left > 0 {
            for j in i + 1..images.len() {
                if images[j] == 0 {
                    images[i] = j + 1;
                    images[j] = i + 1;
                    rec(fixed_left, pairs_left - 1, images, out);
                    images[i] = 0;
                    images[j] = 0;
                }
            }
        }
    }
    rec(f, (k - f) / 2, &mut images, &mut out);
    out.sort_unstable();
    out
}

/// Sign of the permutation that `w` induces on the fixed points of the
/// involution `t`: parity of `{ i < j : t(i) = i, t(j) = j, w(i) > w(j) }`.
pub fn saxl_sign(w: &Permutation, t: &Permutation) -> Result<i8> {
    if !t.is_involution() {
        return Err(Error::NotAnInvolution(t.images.clone()));
    }
    let fixed = t.fixed_points();
    let mut count = 0usize;
    for a in 0..fixed.len() {
        for b in a + 1..fixed.len() {
            if w.apply(fixed[a]) > w.apply(fixed[b]) {
                count += 1;
            }
        }
    }
    Ok(if count % 2 == 0 { 1 } else { -1 })
}

/// The Adin-Postnikov-Roichman sign, computed over the two-cycles of `t`:
/// parity of `{ i < j : t(i) = j, t(j) = i, w(i) > w(j) }`.
pub fn apr_sign(w: &Permutation, t: &Permutation) -> Result<i8> {
    if !t.is_involution() {
        return Err(Error::NotAnInvolution(t.images.clone()));
    }
    let mut count = 0usize;
    for i in 1..=t.k() {
        let j = t.apply(i);
        if j > i && w.apply(i) > w.apply(j) {
            count += 1;
        }
    }
    Ok(if count % 2 == 0 { 1 } else { -1 })
}

// ---------------------------------------------------------------------------
// Integer partitions, conjugacy classes, Murnaghan-Nakayama characters
// ---------------------------------------------------------------------------

/// All partitions of `n` in descending-parts form, lexicographically sorted.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    out.sort_unstable();
    out
}

/// Number of odd parts.
pub fn odd_parts(partition: &[usize]) -> usize {
    partition.iter().filter(|&&p| p % 2 == 1).count()
}

/// Size of the conjugacy class with cycle type `mu` in `S_k`: `k! / z_mu`.
pub fn class_size(mu: &[usize], k: usize) -> BigInt {
    let mut z = BigInt::one();
    let mut mult: HashMap<usize, u32> = HashMap::new();
    for &p in mu {
        *mult.entry(p).or_insert(0) += 1;
    }
    for (&p, &m) in &mult {
        for _ in 0..m {
            z *= BigInt::from(p);
        }
        for i in 1..=m {
            z *= BigInt::from(i);
        }
    }
    factorial(k) / z
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// A permutation with the given cycle type, cycles laid out consecutively.
pub fn class_representative(mu: &[usize]) -> Permutation {
    let k: usize = mu.iter().sum();
    let mut cycles = Vec::new();
    let mut next = 1;
    for &len in mu {
        cycles.push((next..next + len).collect::<Vec<usize>>());
        next += len;
    }
    Permutation::from_cycles(k, &cycles).expect("cycle layout is disjoint")
}

/// Cached Murnaghan-Nakayama evaluation of irreducible symmetric-group
/// characters: `value(lambda, mu)` is the character of the class of cycle
/// type `mu` in the irreducible labeled by `lambda`.
#[derive(Default)]
pub struct CharacterTable {
    cache: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl CharacterTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&mut self, lambda: &[usize], mu: &[usize]) -> Result<i64> {
        let size_l: usize = lambda.iter().sum();
        let size_m: usize = mu.iter().sum();
        if size_l != size_m {
            return Err(Error::PartitionSizeMismatch(lambda.to_vec(), mu.to_vec()));
        }
        Ok(self.eval(lambda, mu))
    }

    /// Dimension of the irreducible: character at the identity class.
    pub fn dimension(&mut self, lambda: &[usize]) -> i64 {
        let n: usize = lambda.iter().sum();
        self.eval(lambda, &vec![1; n])
    }

    fn eval(&mut self, lambda: &[usize], mu: &[usize]) -> i64 {
        if lambda.is_empty() {
            return 1;
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(&v) = self.cache.get(&key) {
            return v;
        }
        // remove a border strip of length mu[0] via the beta-set trick:
        // beta_i = lambda_i + (rows - 1 - i); a strip removal replaces some
        // beta_j by beta_j - m, and its height is the number of beta values
        // jumped over.
        let m = mu[0];
        let rest = &mu[1..];
        let rows = lambda.len();
        let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + (rows - 1 - i)).collect();
        let mut total = 0i64;
        for (j, &bj) in beta.iter().enumerate() {
            if bj < m {
                continue;
            }
            let target = bj - m;
            if beta.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&b| target < b && b < bj).count();
            let sign = if height % 2 == 0 { 1 } else { -1 };
            let mut new_beta = beta.clone();
            new_beta[j] = target;
            new_beta.sort_unstable_by(|a, b| b.cmp(a));
            // convert back to a partition, dropping the staircase
            let nrows = new_beta.len();
            let mut new_lambda: Vec<usize> = new_beta
                .iter()
                .enumerate()
                .map(|(i, &b)| b - (nrows - 1 - i))
                .collect();
            new_lambda.retain(|&p| p > 0);
            total += sign * self.eval(&new_lambda, rest);
        }
        self.cache.insert(key, total);
        total
    }
}

// ---------------------------------------------------------------------------
// The involution module of S_k and its decomposition
// ---------------------------------------------------------------------------

/// Trace of `w` on the span of involutions with `f` fixed points, computed
/// through the diagram model: symmetric permutation diagrams of rank `k`
/// with `f` fixed blocks are exactly those involutions.
pub fn involution_module_trace(w: &Permutation, f: usize) -> Result<i64> {
    let k = w.k();
    let basis = SymmetricBasis::new(Family::SymmetricGroup, k, k, f);
    let poly = model::model_character(&basis, &w.to_diagram())?;
    if let Some(deg) = poly.degree() {
        if deg > 0 {
            return Err(Error::Internal(format!(
                "involution-module trace of {w:?} is not constant: {poly}"
            )));
        }
    }
    let c = poly.coeff(0);
    i64::try_from(&c).map_err(|_| Error::Internal(format!("trace overflow: {c}")))
}

/// Group-side twisted trace: sum of `sign(w, t)` over involutions `t` with
/// `f` fixed points that commute with `w`.  An independent route to the same
/// number as [`involution_module_trace`].
pub fn twisted_conjugation_trace(
    w: &Permutation,
    f: usize,
    sign: impl Fn(&Permutation, &Permutation) -> Result<i8>,
) -> Result<i64> {
    let mut total = 0i64;
    for t in involutions(w.k(), f) {
        if w.conjugate(&t)? == t {
            total += sign(w, &t)? as i64;
        }
    }
    Ok(total)
}

/// The multiplicity table `m(f, lambda)` of the graded involution modules:
/// inner products of their traces with the irreducible characters, computed
/// over one representative per conjugacy class.
pub struct InvolutionDecomposition {
    pub k: usize,
    /// Fixed-point counts with `k - f` even, ascending.
    pub fixed_counts: Vec<usize>,
    /// Partitions of `k`, lexicographically sorted.
    pub partitions: Vec<Vec<usize>>,
    /// `multiplicity[i][j]` pairs `partitions[i]` with `fixed_counts[j]`.
    pub multiplicity: Vec<Vec<u64>>,
}

/// Decompose every graded involution module of `S_k` into irreducibles.
///
/// Multiplicities are exact integers; a non-integral inner product is an
/// internal-consistency error.
pub fn involution_decomposition(k: usize) -> Result<InvolutionDecomposition> {
    let fixed_counts: Vec<usize> = (0..=k).filter(|f| (k - f) % 2 == 0).collect();
    let lambdas = partitions(k);
    let classes = partitions(k);
    let mut table = CharacterTable::new();
    let kfact = Rational::from_integer(factorial(k));

    // model-character value per (class, f)
    let mut traces: Vec<Vec<i64>> = Vec::with_capacity(classes.len());
    for mu in &classes {
        let w = class_representative(mu);
        let row: Vec<i64> = fixed_counts
            .iter()
            .map(|&f| involution_module_trace(&w, f))
            .collect::<Result<_>>()?;
        traces.push(row);
    }

    let mut multiplicity = vec![vec![0u64; fixed_counts.len()]; lambdas.len()];
    for (li, lambda) in lambdas.iter().enumerate() {
        for (fi, _) in fixed_counts.iter().enumerate() {
            let mut acc = Rational::zero();
            for (ci, mu) in classes.iter().enumerate() {
                let chi = table.value(lambda, mu)?;
                let weight = Rational::from_integer(class_size(mu, k));
                acc += weight * Rational::from_integer(BigInt::from(chi * traces[ci][fi]));
            }
            acc /= kfact.clone();
            if !acc.is_integer() || acc.is_negative() {
                return Err(Error::Internal(format!(
                    "inner product <phi^{}, chi^{lambda:?}> = {acc} is not a nonnegative integer",
                    fixed_counts[fi]
                )));
            }
            multiplicity[li][fi] = u64::try_from(acc.to_integer().magnitude().clone())
                .map_err(|_| Error::Internal("multiplicity overflow".into()))?;
        }
    }
    Ok(InvolutionDecomposition { k, fixed_counts, partitions: lambdas, multiplicity })
}

/// A counterexample to the sign-twist comparison of the two involution
/// models.
#[derive(Debug, Clone)]
pub struct TwistMismatch {
    pub class: Vec<usize>,
    pub fixed: usize,
    pub saxl_trace: i64,
    pub apr_trace: i64,
}

/// Check that on every conjugacy class and every grade the Saxl-style trace
/// equals `sign(w)` times the two-cycle-twisted trace, i.e. the two models
/// differ exactly by the sign representation.
pub fn twist_comparison(k: usize) -> Result<std::result::Result<(), TwistMismatch>> {
    for mu in partitions(k) {
        let w = class_representative(&mu);
        for f in (0..=k).filter(|f| (k - f) % 2 == 0) {
            let saxl = twisted_conjugation_trace(&w, f, saxl_sign)?;
            let apr = twisted_conjugation_trace(&w, f, apr_sign)?;
            if saxl != (w.sign() as i64) * apr {
                return Ok(Err(TwistMismatch {
                    class: mu.clone(),
                    fixed: f,
                    saxl_trace: saxl,
                    apr_trace: apr,
                }));
            }
        }
    }
    Ok(Ok(()))
}
