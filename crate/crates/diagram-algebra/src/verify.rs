//! The structural check harness: dimension censuses, the module axiom for
//! signed conjugation, character recursion, absorption, commutant and
//! intertwiner dimensions at a generic specialization point, the involution
//! decomposition of the symmetric group, sequence identities, the
//! Temperley-Lieb subset bijection, and transcribed regression fixtures.
//!
//! Every check is deterministic given its configuration and seed, and every
//! failure carries a reproducible witness in canonical text form.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::absorbing_idempotent;
use crate::combinatorics::{
    algebra_dimension, expected_block_commutant, labels, predicted_symmetric_count,
    sequence_checks, symmetric_total_table, tl_diagram, tl_subset,
};
use crate::diagram::{compose, parse_diagram, Diagram, Family};
use crate::enumerate::enumerate;
use crate::linalg::{commutant_dimension, intertwiner_dimension, SpecMatrix};
use crate::model::{act, model_character, representation_matrix, Action, SymmetricBasis};
use crate::poly::{IntPoly, Rational};
use crate::symgroup::{
    involution_decomposition, odd_parts, saxl_sign, twist_comparison,
    twisted_conjugation_trace, Permutation,
};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one verification job.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub check: &'static str,
    pub family: Option<Family>,
    pub k: Option<usize>,
    pub params: serde_json::Value,
    pub status: Status,
    pub witness: Option<String>,
    pub ms: u128,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

fn run_check(
    check: &'static str,
    family: Option<Family>,
    k: Option<usize>,
    params: serde_json::Value,
    body: impl FnOnce() -> std::result::Result<(), String>,
) -> CheckReport {
    let start = Instant::now();
    let outcome = body();
    CheckReport {
        check,
        family,
        k,
        params,
        status: if outcome.is_ok() { Status::Pass } else { Status::Fail },
        witness: outcome.err(),
        ms: start.elapsed().as_millis(),
    }
}

fn fail<T>(msg: String) -> std::result::Result<T, String> {
    Err(msg)
}

// ---------------------------------------------------------------------------
// Censuses
// ---------------------------------------------------------------------------

/// Basis size by exhaustive enumeration versus the closed form.
pub fn check_dimension_census(family: Family, k: usize) -> CheckReport {
    run_check("dimension-census", Some(family), Some(k), serde_json::json!({}), || {
        let enumerated = enumerate(family, k).len() as u64;
        let expected = algebra_dimension(family, k)
            .ok_or_else(|| format!("no closed form for {family:?}"))?;
        if enumerated != expected {
            return fail(format!("|basis| = {enumerated}, closed form gives {expected}"));
        }
        Ok(())
    })
}

/// Graded symmetric-diagram counts versus the closed forms, and the grand
/// total versus the tabulated sequence.
pub fn check_symmetric_census(family: Family, k: usize) -> CheckReport {
    run_check("symmetric-census", Some(family), Some(k), serde_json::json!({}), || {
        let mut census: HashMap<(usize, usize), u64> = HashMap::new();
        for d in enumerate(family, k) {
            if d.is_symmetric() {
                *census.entry((d.rank(), d.fixed_blocks().len())).or_insert(0) += 1;
            }
        }
        let mut total = 0u64;
        for r in 0..=k {
            for f in 0..=r {
                let enumerated = census.get(&(r, f)).copied().unwrap_or(0);
                let predicted = predicted_symmetric_count(family, k, r, f)
                    .ok_or_else(|| format!("no closed form for {family:?}"))?;
                if enumerated != predicted {
                    return fail(format!(
                        "block (r={r}, f={f}): enumerated {enumerated}, predicted {predicted}"
                    ));
                }
                total += enumerated;
            }
        }
        if let Some(table) = symmetric_total_table(family) {
            if k < table.len() && total != table[k] {
                return fail(format!("total {total} but the table lists {}", table[k]));
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Module axiom
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

/// A monomial action entry: image index, sign, power of x.
type ActEntry = Option<(u32, i8, u8)>;

/// Precomputed signed-conjugation tables for one family at one size: for
/// every graded block and every basis diagram, the action on each basis
/// symmetric diagram.
struct ActTables {
    diagrams: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
    blocks: Vec<SymmetricBasis>,
    /// `tables[b][d][t]`
    tables: Vec<Vec<Vec<ActEntry>>>,
}

impl ActTables {
    fn new(family: Family, k: usize) -> Result<Self> {
        let diagrams = enumerate(family, k);
        let index: HashMap<Diagram, usize> =
            diagrams.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
        let blocks = SymmetricBasis::all_blocks(family, k);
        let mut tables = Vec::with_capacity(blocks.len());
        for block in &blocks {
            let mut per_diagram = Vec::with_capacity(diagrams.len());
            for d in &diagrams {
                let mut row: Vec<ActEntry> = Vec::with_capacity(block.len());
                for t in block.diagrams() {
                    row.push(match act(d, t)? {
                        Action::Zero => None,
                        Action::Image { kappa, sign, image } => {
                            let idx = block.position(&image).ok_or_else(|| {
                                crate::Error::Internal(format!(
                                    "image {image} escaped its graded block"
                                ))
                            })?;
                            Some((idx as u32, sign, kappa as u8))
                        }
                    });
                }
                per_diagram.push(row);
            }
            tables.push(per_diagram);
        }
        Ok(Self { diagrams, index, blocks, tables })
    }

    /// Compare `rho(d1) rho(d2)` with `rho(d1 d2)` columnwise on one block.
    fn pair_mismatch(
        &self,
        block: usize,
        i: usize,
        j: usize,
        prod: usize,
        kappa12: u8,
        mutate: &dyn Fn((u32, i8, u8)) -> (u32, i8, u8),
    ) -> Option<String> {
        let ti = &self.tables[block][i];
        let tj = &self.tables[block][j];
        let tp = &self.tables[block][prod];
        for t in 0..ti.len() {
            let lhs = tj[t].and_then(|(s, sg2, k2)| {
                ti[s as usize].map(|(u, sg1, k1)| (u, sg1 * sg2, k1 + k2))
            });
            let rhs = tp[t].map(mutate).map(|(v, sg3, k3)| (v, sg3, kappa12 + k3));
            if lhs != rhs {
                let basis = &self.blocks[block];
                return Some(format!(
                    "block (r={}, f={}): d1 = \"{}\", d2 = \"{}\", column t = \"{}\": \
                     rho(d1)rho(d2) gives {:?}, rho(d1 d2) gives {:?}",
                    basis.rank,
                    basis.fixed,
                    self.diagrams[i],
                    self.diagrams[j],
                    basis.diagrams()[t],
                    lhs,
                    rhs
                ));
            }
        }
        None
    }
}

/// Verify `rho(d1) rho(d2) = rho(d1 d2)` identically in `x` on every graded
/// block, over all basis pairs (exhaustive) or seeded random pairs.
pub fn check_module_axiom(family: Family, k: usize, mode: Mode, seed: u64) -> CheckReport {
    check_module_axiom_mutated(family, k, mode, seed, &|entry| entry)
}

/// Same check with a fault hook applied to the product-side action, used by
/// the harness self-tests to prove the check can fail.
pub(crate) fn check_module_axiom_mutated(
    family: Family,
    k: usize,
    mode: Mode,
    seed: u64,
    mutate: &dyn Fn((u32, i8, u8)) -> (u32, i8, u8),
) -> CheckReport {
    let params = serde_json::json!({
        "mode": if mode == Mode::Exhaustive { "exhaustive" } else { "sampled" },
        "seed": seed,
    });
    run_check("module-axiom", Some(family), Some(k), params, || {
        let tables = ActTables::new(family, k).map_err(|e| e.to_string())?;
        let n = tables.diagrams.len();
        let check_pair = |i: usize, j: usize| -> std::result::Result<(), String> {
            let (prod_diagram, kappa12) =
                compose(&tables.diagrams[i], &tables.diagrams[j]).map_err(|e| e.to_string())?;
            let prod = *tables
                .index
                .get(&prod_diagram)
                .ok_or_else(|| format!("product {prod_diagram} escaped the family"))?;
            for block in 0..tables.blocks.len() {
                if let Some(witness) =
                    tables.pair_mismatch(block, i, j, prod, kappa12 as u8, mutate)
                {
                    return fail(witness);
                }
            }
            Ok(())
        };
        match mode {
            Mode::Exhaustive => {
                for i in 0..n {
                    for j in 0..n {
                        check_pair(i, j)?;
                    }
                }
            }
            Mode::Sampled => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..10_000 {
                    let i = rng.gen_range(0..n);
                    let j = rng.gen_range(0..n);
                    check_pair(i, j)?;
                }
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Absorption
// ---------------------------------------------------------------------------

/// `p_t t = t p_t = x^ell t` for every symmetric basis diagram `t`.
pub fn check_absorption(family: Family, k: usize) -> CheckReport {
    run_check("absorption", Some(family), Some(k), serde_json::json!({}), || {
        for t in enumerate(family, k) {
            if !t.is_symmetric() {
                continue;
            }
            let (p, ell) = absorbing_idempotent(&t).map_err(|e| e.to_string())?;
            if p.rank() != t.rank() {
                return fail(format!("rank of p changed: t = \"{t}\", p = \"{p}\""));
            }
            if !family.contains(&p) {
                return fail(format!("p = \"{p}\" left {family:?}"));
            }
            let (pt, k1) = compose(&p, &t).map_err(|e| e.to_string())?;
            let (tp, k2) = compose(&t, &p).map_err(|e| e.to_string())?;
            if pt != t || tp != t || k1 as u32 != ell || k2 as u32 != ell {
                return fail(format!(
                    "t = \"{t}\": p t = x^{k1} \"{pt}\", t p = x^{k2} \"{tp}\", ell = {ell}"
                ));
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Character recursion
// ---------------------------------------------------------------------------

/// Model characters restrict along the tower: on the ideal they are `x`
/// times the character one step down, and the rank-`k` blocks vanish below
/// rank `k` and restrict to the involution model on rank `k`.
pub fn check_character_recursion(family: Family, k: usize) -> CheckReport {
    run_check("character-recursion", Some(family), Some(k), serde_json::json!({}), || {
        let step = family.tower_step().map_err(|e| e.to_string())?;
        let e_k = family.essential_idempotent(k).map_err(|e| e.to_string())?;
        let diagrams_k = enumerate(family, k);

        // ideal part: traces of a e_k against x * (trace of a) one step down
        if k >= step {
            let k2 = k - step;
            for r in 0..=k2 {
                for f in 0..=r {
                    let upper = SymmetricBasis::new(family, k, r, f);
                    let lower = SymmetricBasis::new(family, k2, r, f);
                    for a in enumerate(family, k2) {
                        let (d, extra) =
                            compose(&a.embed(step), &e_k).map_err(|e| e.to_string())?;
                        if extra != 0 {
                            return fail(format!(
                                "embedding produced an unexpected removed component for a = \"{a}\""
                            ));
                        }
                        let lhs = model_character(&upper, &d).map_err(|e| e.to_string())?;
                        let rhs = &IntPoly::x()
                            * &model_character(&lower, &a).map_err(|e| e.to_string())?;
                        if lhs != rhs {
                            return fail(format!(
                                "block (r={r}, f={f}), a = \"{a}\": trace(a e_k) = {lhs}, \
                                 x * lower trace = {rhs}"
                            ));
                        }
                    }
                }
            }
        }

        // top part: rank-k blocks vanish on rank < k and restrict to the
        // involution model on rank k
        for f in 0..=k {
            let basis = SymmetricBasis::new(family, k, k, f);
            if basis.is_empty() {
                continue;
            }
            for d in &diagrams_k {
                let trace = model_character(&basis, d).map_err(|e| e.to_string())?;
                if d.rank() < k {
                    if !trace.is_zero() {
                        return fail(format!(
                            "rank-{k} block f={f}: trace of \"{d}\" is {trace}, expected 0"
                        ));
                    }
                } else if family.is_planar_family() {
                    let expected = IntPoly::constant(basis.len() as i64);
                    if trace != expected {
                        return fail(format!(
                            "planar rank-{k} block: trace of the identity is {trace}"
                        ));
                    }
                } else {
                    let w = Permutation::from_diagram(d).map_err(|e| e.to_string())?;
                    let expected = twisted_conjugation_trace(&w, f, saxl_sign)
                        .map_err(|e| e.to_string())?;
                    if trace != IntPoly::constant(expected) {
                        return fail(format!(
                            "rank-{k} block f={f}: trace of \"{d}\" is {trace}, the twisted \
                             involution trace is {expected}"
                        ));
                    }
                }
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Commutants and intertwiners at a specialization point
// ---------------------------------------------------------------------------

/// Specialization points to try: the rook monoids are defined at `x = 1`;
/// the rook-Brauer algebra's non-semisimple set is not pinned down, so a few
/// fallback points are tried before reporting failure; everything else is
/// provably semisimple at `2k + 3`.
fn specialization_candidates(family: Family, k: usize, over: Option<&Rational>) -> Vec<Rational> {
    if let Some(x0) = over {
        return vec![x0.clone()];
    }
    let int = |n: usize| Rational::from_integer(BigInt::from(n));
    match family {
        Family::RookMonoid | Family::PlanarRook => vec![int(1)],
        Family::RookBrauer => vec![int(2 * k + 3), int(2 * k + 5), int(2 * k + 9)],
        _ => vec![int(2 * k + 3)],
    }
}

fn specialized_blocks(
    family: Family,
    k: usize,
    x0: &Rational,
) -> Result<(Vec<SymmetricBasis>, Vec<Vec<SpecMatrix>>)> {
    let blocks = SymmetricBasis::all_blocks(family, k);
    let diagrams = enumerate(family, k);
    let mut mats = Vec::with_capacity(blocks.len());
    for block in &blocks {
        let mut per_diagram = Vec::with_capacity(diagrams.len());
        for d in &diagrams {
            per_diagram.push(SpecMatrix::from_rep(&representation_matrix(block, d)?, x0));
        }
        mats.push(per_diagram);
    }
    Ok((blocks, mats))
}

/// Per-block commutant dimensions equal the number of expected irreducible
/// constituents, and the full-model commutant dimension equals the number of
/// irreducible labels.  The constraints of the block-diagonal full model
/// decouple into blockwise intertwiner equations, so the full dimension is
/// the sum over ordered block pairs.
pub fn check_multiplicity_free(
    family: Family,
    k: usize,
    x0_override: Option<&Rational>,
) -> CheckReport {
    let candidates = specialization_candidates(family, k, x0_override);
    let params = serde_json::json!({
        "x0": candidates.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    });
    run_check("multiplicity-free", Some(family), Some(k), params, || {
        let expected_total = labels(family, k).map_err(|e| e.to_string())?.len();
        let mut last_witness = String::new();
        'candidates: for x0 in &candidates {
            let (blocks, mats) =
                specialized_blocks(family, k, x0).map_err(|e| e.to_string())?;
            let mut total = 0usize;
            for (bi, block) in blocks.iter().enumerate() {
                let expected = expected_block_commutant(family, block.rank, block.fixed);
                let dim = commutant_dimension(&mats[bi]);
                if dim as u64 != expected {
                    last_witness = format!(
                        "block (r={}, f={}) at x0 = {x0}: commutant dimension {dim}, \
                         expected {expected}",
                        block.rank, block.fixed
                    );
                    continue 'candidates;
                }
                total += dim;
            }
            for (bi, _) in blocks.iter().enumerate() {
                for (bj, _) in blocks.iter().enumerate() {
                    if bi != bj {
                        total += intertwiner_dimension(&mats[bi], &mats[bj]);
                    }
                }
            }
            if total != expected_total {
                last_witness = format!(
                    "full model at x0 = {x0}: commutant dimension {total}, \
                     |labels| = {expected_total}"
                );
                continue 'candidates;
            }
            return Ok(());
        }
        fail(last_witness)
    })
}

/// Blocks of different rank admit no nonzero intertwiners.
pub fn check_disjointness(
    family: Family,
    k: usize,
    x0_override: Option<&Rational>,
) -> CheckReport {
    let candidates = specialization_candidates(family, k, x0_override);
    let params = serde_json::json!({
        "x0": candidates.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    });
    run_check("disjointness", Some(family), Some(k), params, || {
        let mut last_witness = String::new();
        'candidates: for x0 in &candidates {
            let (blocks, mats) =
                specialized_blocks(family, k, x0).map_err(|e| e.to_string())?;
            for (bi, a) in blocks.iter().enumerate() {
                for (bj, b) in blocks.iter().enumerate() {
                    if a.rank == b.rank {
                        continue;
                    }
                    let dim = intertwiner_dimension(&mats[bi], &mats[bj]);
                    if dim != 0 {
                        last_witness = format!(
                            "blocks (r={}, f={}) and (r={}, f={}) at x0 = {x0}: \
                             {dim} intertwiners",
                            a.rank, a.fixed, b.rank, b.fixed
                        );
                        continue 'candidates;
                    }
                }
            }
            return Ok(());
        }
        fail(last_witness)
    })
}

// ---------------------------------------------------------------------------
// Symmetric-group checks
// ---------------------------------------------------------------------------

/// The involution module of `S_k` is multiplicity-free with grades picking
/// out partitions by their number of odd parts.
pub fn check_involution_decomposition(k: usize) -> CheckReport {
    run_check(
        "involution-decomposition",
        Some(Family::SymmetricGroup),
        Some(k),
        serde_json::json!({}),
        || {
            let dec = involution_decomposition(k).map_err(|e| e.to_string())?;
            for (li, lambda) in dec.partitions.iter().enumerate() {
                for (fi, &f) in dec.fixed_counts.iter().enumerate() {
                    let expected = u64::from(odd_parts(lambda) == f);
                    let got = dec.multiplicity[li][fi];
                    if got != expected {
                        return fail(format!(
                            "m(f={f}, {lambda:?}) = {got}, expected {expected}"
                        ));
                    }
                }
            }
            Ok(())
        },
    )
}

/// The two sign twists differ by the sign character on every class.
pub fn check_twist_comparison(k: usize) -> CheckReport {
    run_check(
        "sign-twist-comparison",
        Some(Family::SymmetricGroup),
        Some(k),
        serde_json::json!({}),
        || match twist_comparison(k).map_err(|e| e.to_string())? {
            Ok(()) => Ok(()),
            Err(cex) => fail(format!(
                "class {:?}, f = {}: traces {} vs {}",
                cex.class, cex.fixed, cex.saxl_trace, cex.apr_trace
            )),
        },
    )
}

// ---------------------------------------------------------------------------
// Temperley-Lieb bijection
// ---------------------------------------------------------------------------

pub fn check_tl_bijection(max_k: usize) -> CheckReport {
    run_check(
        "tl-subset-bijection",
        Some(Family::TemperleyLieb),
        Some(max_k),
        serde_json::json!({}),
        || {
            for k in 0..=max_k {
                let symmetric: Vec<Diagram> = enumerate(Family::TemperleyLieb, k)
                    .into_iter()
                    .filter(|d| d.is_symmetric())
                    .collect();
                for d in &symmetric {
                    let subset = tl_subset(d).map_err(|e| e.to_string())?;
                    let back = tl_diagram(&subset, k).map_err(|e| e.to_string())?;
                    if back != *d {
                        return fail(format!("k={k}: \"{d}\" -> {subset:?} -> \"{back}\""));
                    }
                }
                // every floor(k/2)-subset arises, and round-trips
                let mut seen = 0usize;
                for mask in 0u32..(1 << k) {
                    if mask.count_ones() as usize != k / 2 {
                        continue;
                    }
                    seen += 1;
                    let subset: std::collections::BTreeSet<usize> =
                        (1..=k).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    let d = tl_diagram(&subset, k).map_err(|e| e.to_string())?;
                    let back = tl_subset(&d).map_err(|e| e.to_string())?;
                    if back != subset {
                        return fail(format!("k={k}: {subset:?} -> \"{d}\" -> {back:?}"));
                    }
                }
                if seen != symmetric.len() {
                    return fail(format!(
                        "k={k}: {seen} subsets vs {} symmetric diagrams",
                        symmetric.len()
                    ));
                }
            }
            // the worked 11-column example
            let subset: std::collections::BTreeSet<usize> =
                [3, 4, 8, 9, 11].into_iter().collect();
            let expected = parse_diagram(
                "1 -1 | 2 -2 | 3 6 | 4 5 | 7 -7 | 8 -8 | 9 10 | 11 -11 | -3 -6 | -4 -5 | -9 -10",
                11,
            )
            .map_err(|e| e.to_string())?;
            let built = tl_diagram(&subset, 11).map_err(|e| e.to_string())?;
            if built != expected {
                return fail(format!("11-column example built \"{built}\""));
            }
            if tl_subset(&expected).map_err(|e| e.to_string())? != subset {
                return fail("11-column example does not invert".into());
            }
            Ok(())
        },
    )
}

// ---------------------------------------------------------------------------
// Sequence identities
// ---------------------------------------------------------------------------

pub fn check_sequence_identities(max_k: usize) -> CheckReport {
    run_check("sequence-identities", None, Some(max_k), serde_json::json!({}), || {
        for c in sequence_checks(max_k) {
            if !c.passed() {
                return fail(format!(
                    "{} at k = {}: computed {}, table lists {}",
                    c.name, c.k, c.computed, c.expected
                ));
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Regression fixtures: hand-checked worked examples kept bit-exact
// ---------------------------------------------------------------------------

mod fixtures {
    /// A 12-column composition with exactly one removed middle component.
    pub const COMP12_LHS: &str =
        "1 3 -4 -6 | 2 | 4 7 | 5 -1 -5 | 6 -9 | 8 -7 | 9 10 -12 | 11 | 12 -10 | -2 -3 | -8 -11";
    pub const COMP12_RHS: &str =
        "1 -1 -3 -5 | 2 11 | 3 8 | 4 -2 | 5 6 | 7 -12 | 9 10 | 12 | -4 | -6 -7 -9 | -8 | -10 | -11";
    pub const COMP12_PRODUCT: &str =
        "1 3 5 -1 -2 -3 -5 | 2 | 4 7 | 6 12 | 8 -12 | 9 10 | 11 | -4 | -6 -7 -9 | -8 | -10 | -11";

    /// A 14-column signed conjugation with coefficient `-x`.
    pub const CONJ14_D: &str = "1 2 3 -1 -2 | 4 6 -12 | 5 | 7 -5 | 8 11 12 14 -6 | 9 -3 | 10 13 \
                                | -4 | -7 -9 -10 -11 | -8 | -13 | -14";
    pub const CONJ14_T: &str = "1 2 -5 | 3 4 10 -3 -4 -10 | 5 -1 -2 | 6 8 -6 -8 | 7 | 9 11 \
                                | 12 14 -12 -14 | 13 | -7 | -9 -11 | -13";
    pub const CONJ14_IMAGE: &str = "1 2 3 -7 | 4 6 -4 -6 | 5 | 7 -1 -2 -3 \
                                    | 8 11 12 14 -8 -11 -12 -14 | 9 -9 | 10 13 | -5 | -10 -13";

    /// A 10-column symmetric diagram with two fixed blocks.
    pub const SYM10: &str = "1 -3 | 2 -4 -5 | 3 -1 | 4 5 -2 | 6 7 10 -6 -7 -10 | 8 -8 | 9 | -9";

    /// A 16-column symmetric diagram and its absorbing idempotent.
    pub const ABSORB16_T: &str = "1 3 4 -6 -7 -8 | 2 | 5 | 6 7 8 -1 -3 -4 | 9 11 13 | 10 12 \
                                  | 14 16 -14 -16 | 15 -15 | -2 | -5 | -9 -11 -13 | -10 -12";
    pub const ABSORB16_P: &str = "1 3 4 -1 -3 -4 | 2 | 5 | 6 7 8 -6 -7 -8 | 9 11 13 | 10 12 \
                                  | 14 16 -14 -16 | 15 -15 | -2 | -5 | -9 -11 -13 | -10 -12";
}

pub fn check_regression_fixtures() -> CheckReport {
    run_check("regression-fixtures", None, None, serde_json::json!({}), || {
        let parse = |text: &str, k: usize| parse_diagram(text, k).map_err(|e| e.to_string());

        // 12-column composition
        let d1 = parse(fixtures::COMP12_LHS, 12)?;
        let d2 = parse(fixtures::COMP12_RHS, 12)?;
        let expected = parse(fixtures::COMP12_PRODUCT, 12)?;
        let (product, kappa) = compose(&d1, &d2).map_err(|e| e.to_string())?;
        if product != expected || kappa != 1 {
            return fail(format!("12-column composition gave x^{kappa} \"{product}\""));
        }

        // 9-point twisted conjugation
        let w = Permutation::from_images(vec![3, 5, 1, 6, 4, 9, 2, 7, 8])
            .map_err(|e| e.to_string())?;
        let t = Permutation::from_cycles(9, &[vec![1, 3], vec![4, 6], vec![8, 9]])
            .map_err(|e| e.to_string())?;
        let expected_image =
            Permutation::from_cycles(9, &[vec![1, 3], vec![6, 9], vec![7, 8]])
                .map_err(|e| e.to_string())?;
        if saxl_sign(&w, &t).map_err(|e| e.to_string())? != -1 {
            return fail("9-point conjugation sign is not -1".into());
        }
        if w.conjugate(&t).map_err(|e| e.to_string())? != expected_image {
            return fail("9-point conjugation image mismatch".into());
        }
        match act(&w.to_diagram(), &t.to_diagram()).map_err(|e| e.to_string())? {
            Action::Image { kappa: 0, sign: -1, image } if image == expected_image.to_diagram() => {}
            other => return fail(format!("9-point diagram action gave {other:?}")),
        }

        // 14-column signed conjugation: coefficient -x
        let d = parse(fixtures::CONJ14_D, 14)?;
        let t = parse(fixtures::CONJ14_T, 14)?;
        let expected = parse(fixtures::CONJ14_IMAGE, 14)?;
        match act(&d, &t).map_err(|e| e.to_string())? {
            Action::Image { kappa: 1, sign: -1, image } if image == expected => {}
            other => return fail(format!("14-column signed conjugation gave {other:?}")),
        }

        // 10-column fixed blocks: {6,7,10,6',7',10'} and {8,8'}
        let d = parse(fixtures::SYM10, 10)?;
        let fixed = d.fixed_blocks();
        let expected: Vec<Vec<usize>> = vec![vec![6, 7, 10, 16, 17, 20], vec![8, 18]];
        if fixed != expected {
            return fail(format!("10-column fixed blocks came out as {fixed:?}"));
        }

        // 16-column absorbing idempotent, ell = 4 non-propagating top blocks
        let t = parse(fixtures::ABSORB16_T, 16)?;
        let p = parse(fixtures::ABSORB16_P, 16)?;
        match absorbing_idempotent(&t).map_err(|e| e.to_string())? {
            (got_p, 4) if got_p == p => {}
            (got_p, ell) => {
                return fail(format!("16-column absorber gave x^{ell} \"{got_p}\""))
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// The aggregate run
// ---------------------------------------------------------------------------

/// Configuration of a full verification run.
#[derive(Debug, Clone)]
pub struct Config {
    pub families: Vec<Family>,
    /// Cap applied to every per-check default bound.
    pub max_k: Option<usize>,
    pub seed: u64,
    pub x0: Option<Rational>,
    /// Pair-selection mode for the module-axiom checks.
    pub mode: Mode,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            families: Family::MODEL.to_vec(),
            max_k: None,
            seed: 0xD1A6,
            x0: None,
            mode: Mode::Exhaustive,
        }
    }
}

/// Default size bounds per family for each kind of check; chosen so the
/// whole suite runs in minutes with exact arithmetic.
fn census_bound(family: Family) -> usize {
    match family {
        Family::Partition => 3,
        Family::PlanarPartition => 2,
        Family::SymmetricGroup => 5,
        Family::Brauer => 5,
        Family::RookMonoid => 4,
        Family::RookBrauer => 4,
        Family::TemperleyLieb => 8,
        Family::Motzkin => 5,
        Family::PlanarRook => 6,
    }
}

fn symmetric_census_bound(family: Family) -> Option<usize> {
    match family {
        Family::Partition => Some(5),
        Family::PlanarPartition => None,
        Family::SymmetricGroup => Some(8),
        Family::Brauer => Some(7),
        Family::RookMonoid => Some(7),
        Family::RookBrauer => Some(6),
        Family::TemperleyLieb => Some(10),
        Family::Motzkin => Some(7),
        Family::PlanarRook => Some(10),
    }
}

fn module_axiom_bound(family: Family) -> Option<usize> {
    match family {
        Family::Partition => Some(2),
        Family::PlanarPartition => None,
        Family::SymmetricGroup => Some(4),
        Family::Brauer => Some(4),
        Family::RookMonoid => Some(3),
        Family::RookBrauer => Some(3),
        Family::TemperleyLieb => Some(5),
        Family::Motzkin => Some(4),
        Family::PlanarRook => Some(4),
    }
}

fn commutant_bound(family: Family) -> Option<usize> {
    match family {
        Family::Partition => Some(2),
        Family::Brauer => Some(3),
        Family::RookMonoid => Some(3),
        Family::RookBrauer => Some(3),
        Family::TemperleyLieb => Some(5),
        Family::Motzkin => Some(4),
        Family::PlanarRook => Some(5),
        Family::SymmetricGroup | Family::PlanarPartition => None,
    }
}

/// Run every check for the configured families, deterministically ordered.
pub fn run_all(config: &Config) -> Vec<CheckReport> {
    let cap = |bound: usize| config.max_k.map_or(bound, |m| m.min(bound));
    let mut reports = Vec::new();
    let mut families = config.families.clone();
    families.sort_unstable();
    families.dedup();
    if families.is_empty() {
        return reports;
    }

    for &family in &families {
        for k in 0..=cap(census_bound(family)) {
            reports.push(check_dimension_census(family, k));
        }
        if let Some(bound) = symmetric_census_bound(family) {
            for k in 0..=cap(bound) {
                reports.push(check_symmetric_census(family, k));
            }
        }
        if let Some(bound) = module_axiom_bound(family) {
            for k in 0..=cap(bound) {
                reports.push(check_module_axiom(family, k, config.mode, config.seed));
                reports.push(check_absorption(family, k));
                if let Ok(step) = family.tower_step() {
                    if k >= step {
                        reports.push(check_character_recursion(family, k));
                    }
                }
            }
            if config.max_k.is_none() && config.mode == Mode::Exhaustive {
                reports.push(check_module_axiom(
                    family,
                    bound + 1,
                    Mode::Sampled,
                    config.seed,
                ));
            }
        }
        if let Some(bound) = commutant_bound(family) {
            for k in 0..=cap(bound) {
                reports.push(check_multiplicity_free(family, k, config.x0.as_ref()));
                reports.push(check_disjointness(family, k, config.x0.as_ref()));
            }
        }
        if family == Family::SymmetricGroup {
            for k in 1..=cap(7) {
                reports.push(check_involution_decomposition(k));
            }
            for k in 1..=cap(6) {
                reports.push(check_twist_comparison(k));
            }
        }
        if family == Family::TemperleyLieb {
            reports.push(check_tl_bijection(cap(12)));
        }
    }
    reports.push(check_sequence_identities(cap(10)));
    reports.push(check_regression_fixtures());
    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn module_axiom_passes_small() {
        for fam in [Family::Partition, Family::Brauer, Family::TemperleyLieb] {
            let report = check_module_axiom(fam, 2, Mode::Exhaustive, 1);
            assert!(report.passed(), "{:?}", report.witness);
        }
    }

    #[test]
    fn module_axiom_self_test_catches_faults() {
        // a flipped sign must be caught with a witness pair
        let report = check_module_axiom_mutated(
            Family::SymmetricGroup,
            3,
            Mode::Exhaustive,
            1,
            &|(i, s, k)| (i, -s, k),
        );
        assert!(!report.passed());
        assert!(report.witness.as_deref().unwrap_or("").contains("d1"));
        // an off-by-one kappa must be caught as well
        let report = check_module_axiom_mutated(
            Family::TemperleyLieb,
            3,
            Mode::Exhaustive,
            1,
            &|(i, s, k)| (i, s, k + 1),
        );
        assert!(!report.passed());
    }

    #[test]
    fn commutant_checks_small() {
        let report = check_multiplicity_free(Family::Partition, 2, None);
        assert!(report.passed(), "{:?}", report.witness);
        let report = check_disjointness(Family::RookMonoid, 2, None);
        assert!(report.passed(), "{:?}", report.witness);
    }

    #[test]
    fn character_recursion_small() {
        for fam in [Family::TemperleyLieb, Family::RookMonoid, Family::Partition] {
            let step = fam.tower_step().unwrap();
            for k in step..step + 2 {
                let report = check_character_recursion(fam, k);
                assert!(report.passed(), "{fam:?} k={k}: {:?}", report.witness);
            }
        }
    }

    #[test]
    fn fixtures_pass() {
        let report = check_regression_fixtures();
        assert!(report.passed(), "{:?}", report.witness);
    }

    #[test]
    fn empty_config_gives_empty_report() {
        let config = Config { families: vec![], ..Config::default() };
        assert!(run_all(&config).is_empty());
    }

    #[test]
    fn capped_run_is_deterministic_and_green() {
        let config = Config {
            families: vec![Family::TemperleyLieb, Family::SymmetricGroup],
            max_k: Some(3),
            ..Config::default()
        };
        let first = run_all(&config);
        assert!(first.iter().all(CheckReport::passed));
        let second = run_all(&config);
        let summary = |rs: &[CheckReport]| -> Vec<(String, Option<usize>)> {
            rs.iter().map(|r| (r.check.to_string(), r.k)).collect()
        };
        assert_eq!(summary(&first), summary(&second));
    }
}
