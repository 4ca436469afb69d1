//! Linear combinations of diagrams over `Z[x]` with the stacking product
//! `d1 d2 = x^kappa (d1 o d2)`, the rank filtration, conditional expectation
//! onto the derived algebra, and the absorbing idempotent of a symmetric
//! diagram.

use std::collections::BTreeMap;

use crate::diagram::{compose, Diagram, Family};
use crate::poly::IntPoly;
use crate::{Error, Result};

/// An element of a diagram algebra: a finite `Z[x]`-combination of basis
/// diagrams of a fixed family and size.  No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    k: usize,
    family: Family,
    terms: BTreeMap<Diagram, IntPoly>,
}

impl Element {
    pub fn zero(family: Family, k: usize) -> Self {
        Self { k, family, terms: BTreeMap::new() }
    }

    pub fn identity(family: Family, k: usize) -> Self {
        Self::from_diagram(family, Diagram::identity(k)).expect("identity is in every family")
    }

    pub fn from_diagram(family: Family, d: Diagram) -> Result<Self> {
        Self::from_terms(family, d.k(), [(d, IntPoly::one())])
    }

    pub fn from_terms(
        family: Family,
        k: usize,
        terms: impl IntoIterator<Item = (Diagram, IntPoly)>,
    ) -> Result<Self> {
        let mut out = Self::zero(family, k);
        for (d, c) in terms {
            if d.k() != k {
                return Err(Error::KMismatch(d.k(), k));
            }
            if !family.contains(&d) {
                return Err(Error::NotInFamily { family, diagram: d.to_string() });
            }
            out.accumulate(d, c);
        }
        Ok(out)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical diagram order.
    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &IntPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &Diagram) -> IntPoly {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    fn accumulate(&mut self, d: Diagram, c: IntPoly) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_compatible(&self, rhs: &Self) -> Result<()> {
        if self.k != rhs.k {
            return Err(Error::KMismatch(self.k, rhs.k));
        }
        if self.family != rhs.family {
            return Err(Error::FamilyMismatch(self.family, rhs.family));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.accumulate(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (d, c) in &rhs.terms {
            out.accumulate(d.clone(), -c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &IntPoly) -> Self {
        let mut out = Self::zero(self.family, self.k);
        for (d, a) in &self.terms {
            out.accumulate(d.clone(), a * c);
        }
        out
    }

    /// Bilinear extension of `d1 d2 = x^kappa (d1 o d2)`.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs)?;
        let mut out = Self::zero(self.family, self.k);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                let (prod, kappa) = compose(d1, d2)?;
                out.accumulate(prod, (c1 * c2).shifted(kappa as u32));
            }
        }
        Ok(out)
    }

    /// The component supported on diagrams of rank at most `r`: the piece of
    /// the element inside the two-sided ideal spanned by low-rank diagrams.
    pub fn rank_filter(&self, r: usize) -> Self {
        let mut out = Self::zero(self.family, self.k);
        for (d, c) in &self.terms {
            if d.rank() <= r {
                out.accumulate(d.clone(), c.clone());
            }
        }
        out
    }
}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(d, c)| format!("({c})*[{d}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Conditional expectation of a basis diagram onto the derived algebra:
/// returns `(a, eps)` with `e_k d e_k = x^a (embed(eps) o e_k)` exactly,
/// where `eps` lives one tower step down.  The factorization is re-verified
/// by multiplying back before returning.
pub fn conditional_expectation(family: Family, d: &Diagram) -> Result<(u32, Diagram)> {
    let k = d.k();
    let step = family.tower_step()?;
    let e = family.essential_idempotent(k)?;
    let (ed, kappa1) = compose(&e, d)?;
    let (ede, kappa2) = compose(&ed, &e)?;
    let power = (kappa1 + kappa2) as u32;
    let eps = ede.strip_columns(step).map_err(|_| {
        Error::Internal(format!("e d e = {ede} does not factor through the tower for d = {d}"))
    })?;
    let (rebuilt, kappa3) = compose(&eps.embed(step), &e)?;
    if rebuilt != ede || kappa3 != 0 {
        return Err(Error::Internal(format!(
            "conditional expectation of {d} failed re-verification"
        )));
    }
    Ok((power, eps))
}

/// The absorbing idempotent `p` of a symmetric diagram `t`: same top and
/// bottom row partitions as `t`, with every block of `t` that propagates
/// replaced by an identity-connected block.  Returns `(p, ell)` with
/// `p t = t p = x^ell t`, where `ell` counts the non-propagating top-row
/// blocks of `t` (equivalently `kappa(p, t)`).
pub fn absorbing_idempotent(t: &Diagram) -> Result<(Diagram, u32)> {
    if !t.is_symmetric() {
        return Err(Error::NotSymmetric(t.to_string()));
    }
    let k = t.k();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for block in t.blocks() {
        let top: Vec<usize> = block.iter().copied().filter(|&v| v <= k).collect();
        let bottom: Vec<usize> = block.iter().copied().filter(|&v| v > k).collect();
        if !top.is_empty() && !bottom.is_empty() {
            // propagating: identity-connect the top part with its mirror
            let mut joined = top.clone();
            joined.extend(top.iter().map(|&v| v + k));
            blocks.push(joined);
        } else if !top.is_empty() {
            blocks.push(top);
        } else {
            blocks.push(bottom);
        }
    }
    let p = Diagram::from_encoded_blocks(k, &blocks)?;
    let (pt, ell) = compose(&p, t)?;
    if pt != *t {
        return Err(Error::Internal(format!("absorbing idempotent of {t} failed: p t = {pt}")));
    }
    Ok((p, ell as u32))
}
