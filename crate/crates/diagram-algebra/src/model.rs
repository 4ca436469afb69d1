//! The signed-conjugation representation: graded bases of symmetric diagrams,
//! the action `d . t = +/- x^kappa (d o t o d^T)` (zero when the rank drops),
//! representing matrices, their traces, and explicit conjugators between
//! basis diagrams of the same grade.

use std::collections::HashMap;

use crate::diagram::{Diagram, Family, UnionFind};
use crate::enumerate::enumerate;
use crate::poly::IntPoly;
use crate::{Error, Result};

/// The ordered basis of symmetric diagrams of one family with fixed size,
/// rank and fixed-block count.
#[derive(Clone)]
pub struct SymmetricBasis {
    pub family: Family,
    pub k: usize,
    pub rank: usize,
    pub fixed: usize,
    diagrams: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
}

impl SymmetricBasis {
    /// Exhaustive ordered basis (possibly empty) of symmetric diagrams with
    /// the given rank and fixed-block count.
    pub fn new(family: Family, k: usize, rank: usize, fixed: usize) -> Self {
        let diagrams: Vec<Diagram> = enumerate(family, k)
            .into_iter()
            .filter(|d| {
                d.is_symmetric() && d.rank() == rank && d.fixed_blocks().len() == fixed
            })
            .collect();
        Self::from_members(family, k, rank, fixed, diagrams)
    }

    /// Every nonempty graded basis of the family at size `k`, ordered by
    /// `(rank, fixed)`.
    pub fn all_blocks(family: Family, k: usize) -> Vec<SymmetricBasis> {
        let mut buckets: std::collections::BTreeMap<(usize, usize), Vec<Diagram>> =
            Default::default();
        for d in enumerate(family, k) {
            if d.is_symmetric() {
                buckets
                    .entry((d.rank(), d.fixed_blocks().len()))
                    .or_default()
                    .push(d);
            }
        }
        buckets
            .into_iter()
            .map(|((r, f), diagrams)| Self::from_members(family, k, r, f, diagrams))
            .collect()
    }

    fn from_members(
        family: Family,
        k: usize,
        rank: usize,
        fixed: usize,
        diagrams: Vec<Diagram>,
    ) -> Self {
        // enumeration is sorted, so the basis order is canonical
        let index = diagrams.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        Self { family, k, rank, fixed, diagrams, index }
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn diagrams(&self) -> &[Diagram] {
        &self.diagrams
    }

    pub fn position(&self, d: &Diagram) -> Option<usize> {
        self.index.get(d).copied()
    }
}

/// Outcome of acting on a symmetric diagram by signed conjugation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    /// Conjugation dropped the rank; the diagram acts as zero.
    Zero,
    /// `d . t = sign * x^kappa * image` with `image` symmetric of the same
    /// rank and fixed-block count as `t`.
    Image { kappa: u32, sign: i8, image: Diagram },
}

/// Bookkeeping for the three-fold stack `d / t / d^T`.
struct Conjugation {
    result: Diagram,
    /// Components removed in the `d o t` step alone.
    kappa_first: u32,
    /// All middle components removed across both steps.
    kappa_total: u32,
    rank_preserved: bool,
    /// For each fixed block of `t` (by ascending least top vertex), the index
    /// of the fixed block of the result it connects to.  Present exactly when
    /// the rank is preserved and the traced map is a bijection.
    fixed_image: Option<Vec<usize>>,
}

/// Union-find over the four rows of the stacked product `d o t o d^T`,
/// tracing fixed blocks of `t` through to the result.
fn conjugate(d: &Diagram, t: &Diagram) -> Result<Conjugation> {
    if d.k() != t.k() {
        return Err(Error::KMismatch(d.k(), t.k()));
    }
    let k = d.k();
    // rows: A = result top 0..k, B = k..2k, C = 2k..3k, D = result bottom 3k..4k.
    // d spans (A, B); t spans (B, C); d^T spans (C, D), where a top vertex i
    // of d lands in D and a bottom vertex i' of d lands in C.
    let mut uf = UnionFind::new(4 * k);
    let upper = |v: usize| v - 1;
    let middle = |v: usize| v - 1 + k;
    let lower = |v: usize| if v <= k { v - 1 + 3 * k } else { v - 1 + k };
    for b in d.blocks() {
        for w in b.windows(2) {
            uf.union(upper(w[0]), upper(w[1]));
            uf.union(lower(w[0]), lower(w[1]));
        }
    }
    for b in t.blocks() {
        for w in b.windows(2) {
            uf.union(middle(w[0]), middle(w[1]));
        }
    }

    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for node in 0..4 * k {
        groups.entry(uf.find(node)).or_default().push(node);
    }

    // nodes within a group ascend, and A precedes D, so each restricted
    // block below comes out sorted by encoding
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut root_to_block: HashMap<usize, usize> = HashMap::new();
    let mut kappa_first = 0u32;
    let mut kappa_total = 0u32;
    for (&root, nodes) in &groups {
        let block: Vec<usize> = nodes
            .iter()
            .filter_map(|&n| {
                if n < k {
                    Some(n + 1) // top row
                } else if n >= 3 * k {
                    Some(n - 3 * k + 1 + k) // bottom row
                } else {
                    None
                }
            })
            .collect();
        if block.is_empty() {
            kappa_total += 1;
            if nodes.iter().all(|&n| n < 2 * k) {
                kappa_first += 1;
            }
        } else {
            root_to_block.insert(root, blocks.len());
            blocks.push(block);
        }
    }
    let result = Diagram::from_encoded_blocks(k, &blocks)?;
    let rank_preserved = result.rank() == t.rank();

    let fixed_image = if rank_preserved {
        let result_fixed = result.fixed_blocks();
        let fixed_pos: HashMap<Vec<usize>, usize> =
            result_fixed.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        let mut images = Vec::new();
        let mut ok = true;
        for fb in t.fixed_blocks() {
            let root = uf.find(middle(fb[0]));
            match root_to_block.get(&root).and_then(|&i| fixed_pos.get(&blocks[i])) {
                Some(&i) => images.push(i),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        let distinct: std::collections::HashSet<_> = images.iter().collect();
        if ok && distinct.len() == images.len() && images.len() == result_fixed.len() {
            Some(images)
        } else {
            None
        }
    } else {
        None
    };

    Ok(Conjugation { result, kappa_first, kappa_total, rank_preserved, fixed_image })
}

fn permutation_parity(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
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

/// The sign of the permutation induced on the fixed blocks of `t` by
/// conjugation with `d`.  Defined only when the rank is preserved.
pub fn fixed_block_sign(d: &Diagram, t: &Diagram) -> Result<i8> {
    if !t.is_symmetric() {
        return Err(Error::NotSymmetric(t.to_string()));
    }
    let conj = conjugate(d, t)?;
    if !conj.rank_preserved {
        return Err(Error::RankDrop { d: d.to_string(), t: t.to_string() });
    }
    match conj.fixed_image {
        Some(perm) => Ok(permutation_parity(&perm)),
        None => Err(Error::Internal(format!(
            "fixed blocks of {t} do not map bijectively under {d}"
        ))),
    }
}

/// Signed conjugation of the symmetric diagram `t` by the basis diagram `d`.
///
/// `kappa` counts only the components removed in the `d o t` step; the
/// mirrored copies removed in the second step are deliberately not charged,
/// which is what makes the action associative.
pub fn act(d: &Diagram, t: &Diagram) -> Result<Action> {
    if !t.is_symmetric() {
        return Err(Error::NotSymmetric(t.to_string()));
    }
    let conj = conjugate(d, t)?;
    if !conj.rank_preserved {
        return Ok(Action::Zero);
    }
    match conj.fixed_image {
        Some(perm) => Ok(Action::Image {
            kappa: conj.kappa_first,
            sign: permutation_parity(&perm),
            image: conj.result,
        }),
        None => Err(Error::Internal(format!(
            "rank preserved but fixed blocks of {t} do not map bijectively under {d}"
        ))),
    }
}

/// Total count of removed middle components in the full triple product,
/// exposed for the `d t d^T = x^{2 kappa(d,t)} d o t o d^T` cross-check.
pub fn conjugation_kappas(d: &Diagram, t: &Diagram) -> Result<(u32, u32)> {
    let conj = conjugate(d, t)?;
    Ok((conj.kappa_first, conj.kappa_total))
}

/// A representing matrix on a symmetric basis.  Basis diagrams act
/// monomially, so each column has at most one nonzero entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RepMatrix {
    pub dim: usize,
    /// `cols[j] = Some((i, c))` means entry `c` in row `i` of column `j`.
    pub cols: Vec<Option<(usize, IntPoly)>>,
}

impl RepMatrix {
    pub fn identity(dim: usize) -> Self {
        Self { dim, cols: (0..dim).map(|i| Some((i, IntPoly::one()))).collect() }
    }

    /// Matrix product `self * rhs` (apply `rhs` first).
    pub fn then(&self, rhs: &RepMatrix) -> RepMatrix {
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                col.as_ref().and_then(|(mid, c)| {
                    self.cols[*mid].as_ref().map(|(row, c2)| (*row, c * c2))
                })
            })
            .collect();
        RepMatrix { dim: self.dim, cols }
    }

    pub fn scale(&self, c: &IntPoly) -> RepMatrix {
        let cols = self
            .cols
            .iter()
            .map(|col| {
                col.as_ref().and_then(|(row, a)| {
                    let scaled = a * c;
                    if scaled.is_zero() {
                        None
                    } else {
                        Some((*row, scaled))
                    }
                })
            })
            .collect();
        RepMatrix { dim: self.dim, cols }
    }

    pub fn trace(&self) -> IntPoly {
        let mut out = IntPoly::zero();
        for (j, col) in self.cols.iter().enumerate() {
            if let Some((i, c)) = col {
                if *i == j {
                    out = &out + c;
                }
            }
        }
        out
    }

    /// Dense rows over `Z[x]`, for export.
    pub fn dense(&self) -> Vec<Vec<IntPoly>> {
        let mut rows = vec![vec![IntPoly::zero(); self.dim]; self.dim];
        for (j, col) in self.cols.iter().enumerate() {
            if let Some((i, c)) = col {
                rows[*i][j] = c.clone();
            }
        }
        rows
    }
}

/// The matrix of `d` acting on the basis by signed conjugation.
pub fn representation_matrix(basis: &SymmetricBasis, d: &Diagram) -> Result<RepMatrix> {
    if d.k() != basis.k {
        return Err(Error::KMismatch(d.k(), basis.k));
    }
    if !basis.family.contains(d) {
        return Err(Error::NotInFamily { family: basis.family, diagram: d.to_string() });
    }
    let mut cols = Vec::with_capacity(basis.len());
    for t in basis.diagrams() {
        match act(d, t)? {
            Action::Zero => cols.push(None),
            Action::Image { kappa, sign, image } => {
                let row = basis.position(&image).ok_or_else(|| {
                    Error::Internal(format!(
                        "image {image} of {t} under {d} left the ({}, {}) basis",
                        basis.rank, basis.fixed
                    ))
                })?;
                cols.push(Some((row, IntPoly::signed_power(sign, kappa))));
            }
        }
    }
    Ok(RepMatrix { dim: basis.len(), cols })
}

/// Trace of `d` on the graded block: the model character value.
pub fn model_character(basis: &SymmetricBasis, d: &Diagram) -> Result<IntPoly> {
    let mut out = IntPoly::zero();
    for (j, t) in basis.diagrams().iter().enumerate() {
        if let Action::Image { kappa, sign, image } = act(d, t)? {
            if basis.position(&image) == Some(j) {
                out = &out + &IntPoly::signed_power(sign, kappa);
            }
        }
    }
    Ok(out)
}

/// Build a diagram `d` with `d o s o d^T = t` for symmetric diagrams of the
/// same family, size, rank and fixed-block count: fixed blocks are joined to
/// fixed blocks and the remaining propagating blocks to each other, both in
/// left-to-right order, with mirrored propagating pairs kept aligned.  The
/// result is verified before returning.
pub fn find_conjugator(family: Family, s: &Diagram, t: &Diagram) -> Result<Diagram> {
    if s.k() != t.k() {
        return Err(Error::KMismatch(s.k(), t.k()));
    }
    for d in [s, t] {
        if !d.is_symmetric() {
            return Err(Error::NotSymmetric(d.to_string()));
        }
    }
    let mismatch = || Error::NoConjugator { s: s.to_string(), t: t.to_string() };
    if s.rank() != t.rank() || s.fixed_blocks().len() != t.fixed_blocks().len() {
        return Err(mismatch());
    }
    let k = s.k();

    let top_of = |b: &Vec<usize>| -> Vec<usize> {
        b.iter().copied().filter(|&v| v <= k).collect()
    };
    // mirrored pairs of non-fixed propagating blocks, each pair oriented by
    // its smaller top minimum and the list sorted by that minimum
    let propagating_pairs = |d: &Diagram| -> Vec<(Vec<usize>, Vec<usize>)> {
        let fixed            = d.fixed_blocks();
        let mut seen: Vec<Vec<usize>> = Vec::new();
        let mut pairs = Vec::new();
        for b in d.blocks() {
            let top = top_of(b);
            let bottom_count = b.len() - top.len();
            if top.is_empty() || bottom_count == 0 || fixed.contains(b) || seen.contains(b) {
                continue;
            }
            let mut mirrored: Vec<usize> =
                b.iter().map(|&v| if v <= k { v + k } else { v - k }).collect();
            mirrored.sort_unstable();
            seen.push(mirrored.clone());
            let top_b = top;
            let top_mirror = top_of(&mirrored);
            if top_b[0] < top_mirror[0] {
                pairs.push((top_b, top_mirror));
            } else {
                pairs.push((top_mirror, top_b));
            }
        }
        pairs.sort_by_key(|(a, _)| a[0]);
        pairs
    };

    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let join = |top_part: &[usize], bottom_part: &[usize]| -> Vec<usize> {
        let mut b: Vec<usize> = top_part.to_vec();
        b.extend(bottom_part.iter().map(|&v| v + k));
        b
    };

    // (ii) fixed blocks of t on top to fixed blocks of s on the bottom
    for (ft, fs) in t.fixed_blocks().iter().zip(s.fixed_blocks().iter()) {
        blocks.push(join(&top_of(ft), &top_of(fs)));
    }
    // (iii) remaining propagating blocks, mirror pairs kept consistent
    let pt = propagating_pairs(t);
    let ps = propagating_pairs(s);
    if pt.len() != ps.len() {
        return Err(mismatch());
    }
    for ((t_lead, t_mirror), (s_lead, s_mirror)) in pt.iter().zip(ps.iter()) {
        blocks.push(join(t_lead, s_lead));
        blocks.push(join(t_mirror, s_mirror));
    }
    // non-propagating top blocks of t stay on top, those of s go to the bottom
    for b in t.blocks() {
        if b.iter().all(|&v| v <= k) {
            blocks.push(b.clone());
        }
    }
    for b in s.blocks() {
        if b.iter().all(|&v| v <= k) {
            blocks.push(b.iter().map(|&v| v + k).collect());
        }
    }

    let d = Diagram::from_encoded_blocks(k, &blocks)?;
    if !family.contains(&d) {
        return Err(Error::Internal(format!(
            "conjugator {d} for {s} -> {t} escaped {family:?}"
        )));
    }
    let conj = conjugate(&d, s)?;
    if conj.result != *t {
        return Err(Error::Internal(format!(
            "conjugator {d} sends {s} to {} instead of {t}",
            conj.result
        )));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(k: usize, signed: &[&[i64]]) -> Diagram {
        let blocks: Vec<Vec<i64>> = signed.iter().map(|b| b.to_vec()).collect();
        Diagram::from_signed_blocks(k, &blocks).unwrap()
    }

    #[test]
    fn symmetric_basis_examples() {
        assert_eq!(SymmetricBasis::new(Family::Partition, 2, 1, 1).len(), 3);
        let sym = SymmetricBasis::new(Family::SymmetricGroup, 3, 3, 3);
        assert_eq!(sym.diagrams(), &[Diagram::identity(3)]);
        assert_eq!(SymmetricBasis::new(Family::TemperleyLieb, 4, 2, 2).len(), 3);
    }

    #[test]
    fn act_examples() {
        let one2 = Diagram::identity(2);
        let swap = d(2, &[&[1, -2], &[2, -1]]);
        assert_eq!(
            act(&swap, &one2).unwrap(),
            Action::Image { kappa: 0, sign: -1, image: one2.clone() }
        );
        let e2 = Family::Partition.essential_idempotent(2).unwrap();
        assert_eq!(act(&e2, &one2).unwrap(), Action::Zero);
        assert_eq!(
            act(&e2, &e2).unwrap(),
            Action::Image { kappa: 1, sign: 1, image: e2.clone() }
        );
    }

    #[test]
    fn sign_examples() {
        // the identity never rearranges fixed blocks
        for t in crate::enumerate::enumerate(Family::Partition, 3) {
            if t.is_symmetric() {
                assert_eq!(fixed_block_sign(&Diagram::identity(3), &t).unwrap(), 1);
            }
        }
        // sign is undefined (rank drop) for e_2 acting on the identity
        let e2 = Family::Partition.essential_idempotent(2).unwrap();
        assert!(matches!(
            fixed_block_sign(&e2, &Diagram::identity(2)),
            Err(Error::RankDrop { .. })
        ));
    }

    #[test]
    fn representation_matrix_examples() {
        // (1 2) on the rank-2 fixed-2 block of S_2 is the 1x1 matrix [-1]
        let basis = SymmetricBasis::new(Family::SymmetricGroup, 2, 2, 2);
        let swap = d(2, &[&[1, -2], &[2, -1]]);
        let m = representation_matrix(&basis, &swap).unwrap();
        assert_eq!(m.cols, vec![Some((0, IntPoly::constant(-1)))]);
        // the cup-cap diagram on the rank-0 block of TL_2 is [x]
        let basis = SymmetricBasis::new(Family::TemperleyLieb, 2, 0, 0);
        let cup = d(2, &[&[1, 2], &[-1, -2]]);
        let m = representation_matrix(&basis, &cup).unwrap();
        assert_eq!(m.cols, vec![Some((0, IntPoly::x()))]);
        // the identity acts as the identity matrix on every block
        for basis in SymmetricBasis::all_blocks(Family::Brauer, 3) {
            let m = representation_matrix(&basis, &Diagram::identity(3)).unwrap();
            assert_eq!(m, RepMatrix::identity(basis.len()));
        }
    }

    #[test]
    fn model_character_examples() {
        // rank-k blocks vanish on lower-rank diagrams
        for f in [0, 2] {
            let basis = SymmetricBasis::new(Family::Partition, 2, 2, f);
            let e2 = Family::Partition.essential_idempotent(2).unwrap();
            assert!(model_character(&basis, &e2).unwrap().is_zero());
        }
        // (1 2) fixes itself with sign +1
        let basis = SymmetricBasis::new(Family::SymmetricGroup, 2, 2, 0);
        let swap = d(2, &[&[1, -2], &[2, -1]]);
        assert_eq!(model_character(&basis, &swap).unwrap(), IntPoly::one());
        // the cup-cap trace is x
        let basis = SymmetricBasis::new(Family::TemperleyLieb, 2, 0, 0);
        let cup = d(2, &[&[1, 2], &[-1, -2]]);
        assert_eq!(model_character(&basis, &cup).unwrap(), IntPoly::x());
    }

    #[test]
    fn monomial_columns() {
        for basis in SymmetricBasis::all_blocks(Family::Motzkin, 3) {
            for dg in crate::enumerate::enumerate(Family::Motzkin, 3) {
                let m = representation_matrix(&basis, &dg).unwrap();
                assert_eq!(m.cols.len(), basis.len());
            }
        }
    }

    #[test]
    fn conjugator_examples() {
        // self-conjugation always succeeds
        for t in crate::enumerate::enumerate(Family::Brauer, 3) {
            if !t.is_symmetric() {
                continue;
            }
            let dd = find_conjugator(Family::Brauer, &t, &t).unwrap();
            match act(&dd, &t).unwrap() {
                Action::Image { image, .. } => assert_eq!(image, t),
                Action::Zero => panic!("self-conjugator dropped rank"),
            }
        }
        // the worked rook monoid example
        let s = d(2, &[&[1, -1], &[2], &[-2]]);
        let t = d(2, &[&[2, -2], &[1], &[-1]]);
        let dd = find_conjugator(Family::RookMonoid, &s, &t).unwrap();
        assert_eq!(dd, d(2, &[&[2, -1], &[1], &[-2]]));
        // Brauer contractions moving position
        let s = d(4, &[&[1, 2], &[-1, -2], &[3, -3], &[4, -4]]);
        let t = d(4, &[&[3, 4], &[-3, -4], &[1, -1], &[2, -2]]);
        let dd = find_conjugator(Family::Brauer, &s, &t).unwrap();
        assert!(matches!(act(&dd, &s).unwrap(), Action::Image { image, .. } if image == t));
        // mismatched grades are refused
        let e2 = Family::RookMonoid.essential_idempotent(2).unwrap();
        let err = find_conjugator(Family::RookMonoid, &Diagram::identity(2), &e2).unwrap_err();
        assert!(matches!(err, Error::NoConjugator { .. }));
    }

    #[test]
    fn orbit_transitivity_small() {
        for (fam, k) in [
            (Family::Partition, 2),
            (Family::Brauer, 3),
            (Family::RookMonoid, 2),
            (Family::TemperleyLieb, 4),
            (Family::Motzkin, 3),
        ] {
            for basis in SymmetricBasis::all_blocks(fam, k) {
                for s in basis.diagrams() {
                    for t in basis.diagrams() {
                        let dd = find_conjugator(fam, s, t)
                            .unwrap_or_else(|e| panic!("{fam:?} {s} -> {t}: {e}"));
                        assert!(fam.contains(&dd));
                    }
                }
            }
        }
    }

    #[test]
    fn grading_preserved_and_mirror_kappa() {
        for (fam, k) in [(Family::Partition, 2), (Family::RookBrauer, 3)] {
            let all = crate::enumerate::enumerate(fam, k);
            for t in all.iter().filter(|t| t.is_symmetric()) {
                for dg in &all {
                    match act(dg, t).unwrap() {
                        Action::Zero => {}
                        Action::Image { image, .. } => {
                            assert_eq!(image.rank(), t.rank());
                            assert_eq!(image.fixed_blocks().len(), t.fixed_blocks().len());
                            assert!(image.is_symmetric());
                            // full triple product charges exactly twice kappa
                            let (first, total) = conjugation_kappas(dg, t).unwrap();
                            assert_eq!(total, 2 * first);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_to_the_symmetric_group() {
        // on permutation diagrams the fixed-block sign is the inversion-count
        // sign on fixed points, and the action is plain twisted conjugation
        use crate::symgroup::{involutions, saxl_sign, Permutation};
        for k in 1..=4 {
            for wd in crate::enumerate::enumerate(Family::SymmetricGroup, k) {
                let w = Permutation::from_diagram(&wd).unwrap();
                for f in (0..=k).filter(|f| (k - f) % 2 == 0) {
                    for t in involutions(k, f) {
                        let td = t.to_diagram();
                        assert_eq!(
                            fixed_block_sign(&wd, &td).unwrap(),
                            saxl_sign(&w, &t).unwrap()
                        );
                        match act(&wd, &td).unwrap() {
                            Action::Image { kappa: 0, sign, image } => {
                                assert_eq!(image, w.conjugate(&t).unwrap().to_diagram());
                                assert_eq!(sign, saxl_sign(&w, &t).unwrap());
                            }
                            other => panic!("unexpected action {other:?}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sign_multiplicative_on_composites() {
        use crate::diagram::compose;
        let fam = Family::Partition;
        let all = crate::enumerate::enumerate(fam, 2);
        for t in all.iter().filter(|t| t.is_symmetric()) {
            for d1 in &all {
                for d2 in &all {
                    let Action::Image { sign: s2, image: mid, .. } = act(d2, t).unwrap() else {
                        continue;
                    };
                    let Action::Image { sign: s1, .. } = act(d1, &mid).unwrap() else {
                        continue;
                    };
                    let (prod, _) = compose(d1, d2).unwrap();
                    match act(&prod, t).unwrap() {
                        Action::Image { sign, .. } => assert_eq!(sign, s1 * s2),
                        Action::Zero => panic!("composite dropped rank unexpectedly"),
                    }
                }
            }
        }
    }
}
