//! Set-partition diagrams on two rows of `k` vertices and their calculus:
//! canonical form, the stacking composition with removed-component count,
//! transposition, rank, symmetry, planarity and family membership.
//!
//! Vertices are encoded as integers `1..=2k`: top vertex `i` is `i`, bottom
//! vertex `i'` is `k + i`.  The signed text form writes top `i` as `i` and
//! bottom `i'` as `-i`.

use std::fmt;

use crate::{Error, Result};

/// Which row a vertex lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Row {
    Top,
    Bottom,
}

/// A vertex of a `k`-column diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vertex {
    /// Column index, `1..=k`.
    pub column: usize,
    pub row: Row,
}

impl Vertex {
    /// Canonical encoding: top `i` -> `i`, bottom `i'` -> `k + i`.
    pub fn encode(&self, k: usize) -> usize {
        match self.row {
            Row::Top => self.column,
            Row::Bottom => k + self.column,
        }
    }

    pub fn decode(code: usize, k: usize) -> Self {
        if code <= k {
            Vertex { column: code, row: Row::Top }
        } else {
            Vertex { column: code - k, row: Row::Bottom }
        }
    }
}

/// A set partition of the `2k` vertices, held in canonical form: within each
/// block the encodings ascend, and blocks ascend by their least encoding.
/// Equality, ordering and hashing are therefore structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    k: usize,
    blocks: Vec<Vec<usize>>,
}

impl Diagram {
    /// Canonicalize raw blocks of encoded vertices (`1..=2k`).
    ///
    /// Rejects out-of-range, duplicated and missing vertices, naming the
    /// offending vertex.  Idempotent on canonical input.
    pub fn from_encoded_blocks(k: usize, raw_blocks: &[Vec<usize>]) -> Result<Self> {
        let n = 2 * k;
        let mut seen = vec![false; n];
        let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(raw_blocks.len());
        for raw in raw_blocks {
            let mut block = raw.clone();
            block.sort_unstable();
            for &v in &block {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v as i64, k });
                }
                if seen[v - 1] {
                    return Err(Error::DuplicateVertex(signed_of_encoded(v, k)));
                }
                seen[v - 1] = true;
            }
            if !block.is_empty() {
                blocks.push(block);
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::MissingVertex(signed_of_encoded(missing + 1, k)));
        }
        blocks.sort_unstable();
        Ok(Diagram { k, blocks })
    }

    /// Build from signed blocks: positive `i` is top, negative `-i` is bottom.
    pub fn from_signed_blocks(k: usize, signed: &[Vec<i64>]) -> Result<Self> {
        let mut encoded = Vec::with_capacity(signed.len());
        for block in signed {
            let mut enc = Vec::with_capacity(block.len());
            for &v in block {
                if v == 0 || v.unsigned_abs() as usize > k {
                    return Err(Error::VertexOutOfRange { vertex: v, k });
                }
                let col = v.unsigned_abs() as usize;
                enc.push(if v > 0 { col } else { k + col });
            }
            encoded.push(enc);
        }
        Self::from_encoded_blocks(k, &encoded)
    }

    /// Rebuild the canonical form from arbitrary (valid) block data.
    fn from_components(k: usize, mut blocks: Vec<Vec<usize>>) -> Self {
        for block in &mut blocks {
            block.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort_unstable();
        Diagram { k, blocks }
    }

    /// The identity diagram: blocks `{i, i'}`; `k = 0` gives the empty
    /// diagram, the scalar unit.
    pub fn identity(k: usize) -> Self {
        let blocks = (1..=k).map(|i| vec![i, k + i]).collect();
        Diagram { k, blocks }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Blocks in canonical order, as encoded vertices.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Blocks as signed vertices (top positive, bottom negative).
    pub fn signed_blocks(&self) -> Vec<Vec<i64>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&v| signed_of_encoded(v, self.k)).collect())
            .collect()
    }

    /// Number of propagating blocks (blocks meeting both rows).
    pub fn rank(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| b[0] <= self.k && *b.last().unwrap() > self.k)
            .count()
    }

    /// Reflection across the horizontal axis: swap `i` and `i'` in every block.
    pub fn transpose(&self) -> Self {
        let k = self.k;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| if v <= k { v + k } else { v - k }).collect())
            .collect();
        Self::from_components(k, blocks)
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.transpose()
    }

    /// Blocks `B` with `B' = B`, ordered by least top vertex.
    ///
    /// A fixed block always meets both rows, so the canonical block order
    /// (least encoding first) already sorts by least top vertex.
    pub fn fixed_blocks(&self) -> Vec<Vec<usize>> {
        let k = self.k;
        self.blocks
            .iter()
            .filter(|b| {
                let mut mirrored: Vec<usize> =
                    b.iter().map(|&v| if v <= k { v + k } else { v - k }).collect();
                mirrored.sort_unstable();
                mirrored == **b
            })
            .cloned()
            .collect()
    }

    /// The top-row set partition: each block restricted to `1..=k`, empty
    /// restrictions dropped.
    pub fn top_partition(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().copied().filter(|&v| v <= self.k).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect()
    }

    /// The bottom-row set partition, in unprimed labels `1..=k`.
    pub fn bottom_partition(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| {
                b.iter().copied().filter(|&v| v > self.k).map(|v| v - self.k).collect::<Vec<_>>()
            })
            .filter(|b| !b.is_empty())
            .collect()
    }

    /// True if the diagram can be drawn without crossings inside the
    /// rectangle, i.e. the partition is noncrossing in the boundary order
    /// `1, ..., k, k', (k-1)', ..., 1'`.
    pub fn is_planar(&self) -> bool {
        let pos: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut p: Vec<usize> = b.iter().map(|&v| self.boundary_position(v)).collect();
                p.sort_unstable();
                p
            })
            .collect();
        for i in 0..pos.len() {
            for j in i + 1..pos.len() {
                if blocks_cross(&pos[i], &pos[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Position of an encoded vertex in the cyclic boundary order, cut into
    /// the line `1, ..., k, k', (k-1)', ..., 1'` (0-based).
    fn boundary_position(&self, v: usize) -> usize {
        if v <= self.k {
            v - 1
        } else {
            // bottom column c sits at 2k - c
            2 * self.k - (v - self.k)
        }
    }

    /// Append `extra` identity columns on the right: the standard embedding
    /// of a `k`-column diagram into `k + extra` columns.
    pub fn embed(&self, extra: usize) -> Self {
        let k = self.k;
        let kk = k + extra;
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| if v <= k { v } else { v - k + kk }).collect())
            .collect();
        for i in k + 1..=kk {
            blocks.push(vec![i, kk + i]);
        }
        Self::from_components(kk, blocks)
    }

    /// Drop the last `strip` columns; every block must live entirely inside
    /// the first `k - strip` columns or entirely inside the stripped ones.
    pub(crate) fn strip_columns(&self, strip: usize) -> Result<Self> {
        let k = self.k;
        let kk = k - strip;
        let keep = |v: usize| if v <= k { v <= kk } else { v - k <= kk };
        let mut blocks = Vec::new();
        for b in &self.blocks {
            let kept: Vec<usize> =
                b.iter().copied().filter(|&v| keep(v)).map(|v| if v <= k { v } else { v - k + kk }).collect();
            if kept.len() == b.len() {
                blocks.push(kept);
            } else if !kept.is_empty() {
                return Err(Error::Internal(format!(
                    "block {b:?} straddles the stripped columns of {self}"
                )));
            }
        }
        Ok(Self::from_components(kk, blocks))
    }
}

fn signed_of_encoded(v: usize, k: usize) -> i64 {
    if v <= k {
        v as i64
    } else {
        -((v - k) as i64)
    }
}

/// Two sorted position lists cross iff their merge alternates at least three
/// times (an `abab` subsequence in either orientation).
fn blocks_cross(a: &[usize], b: &[usize]) -> bool {
    let mut ia = 0;
    let mut ib = 0;
    let mut last = 0u8; // 0 = none, 1 = from a, 2 = from b
    let mut changes = 0;
    while ia < a.len() || ib < b.len() {
        let take_a = ib == b.len() || (ia < a.len() && a[ia] < b[ib]);
        let label = if take_a { 1 } else { 2 };
        if take_a {
            ia += 1;
        } else {
            ib += 1;
        }
        if last != 0 && label != last {
            changes += 1;
            if changes >= 3 {
                return true;
            }
        }
        last = label;
    }
    false
}

/// Stack `d1` over `d2`, identify the shared middle row, drop the components
/// that live entirely in the middle, and return the resulting diagram along
/// with how many components were dropped.
pub fn compose(d1: &Diagram, d2: &Diagram) -> Result<(Diagram, usize)> {
    if d1.k != d2.k {
        return Err(Error::KMismatch(d1.k, d2.k));
    }
    let k = d1.k;
    // union-find over 3k nodes: top 0..k, middle k..2k, bottom 2k..3k
    let mut uf = UnionFind::new(3 * k);
    // d1: top i -> node i-1, bottom i' -> node k+i-1 (middle);
    // d2: top i -> node k+i-1 (middle), bottom i' -> node 2k+i-1.
    for b in &d1.blocks {
        for w in b.windows(2) {
            uf.union(w[0] - 1, w[1] - 1);
        }
    }
    for b in &d2.blocks {
        for w in b.windows(2) {
            uf.union(w[0] - 1 + k, w[1] - 1 + k);
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); 3 * k];
    for node in 0..3 * k {
        groups[uf.find(node)].push(node);
    }
    let mut blocks = Vec::new();
    let mut kappa = 0usize;
    for group in groups.iter().filter(|g| !g.is_empty()) {
        let block: Vec<usize> = group
            .iter()
            .filter_map(|&n| {
                if n < k {
                    Some(n + 1)
                } else if n >= 2 * k {
                    Some(n - 2 * k + 1 + k)
                } else {
                    None
                }
            })
            .collect();
        if block.is_empty() {
            kappa += 1;
        } else {
            blocks.push(block);
        }
    }
    Ok((Diagram::from_components(k, blocks), kappa))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// The diagram families realized inside the partition monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Partition,
    PlanarPartition,
    SymmetricGroup,
    Brauer,
    RookMonoid,
    RookBrauer,
    TemperleyLieb,
    Motzkin,
    PlanarRook,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Partition,
        Family::PlanarPartition,
        Family::SymmetricGroup,
        Family::Brauer,
        Family::RookMonoid,
        Family::RookBrauer,
        Family::TemperleyLieb,
        Family::Motzkin,
        Family::PlanarRook,
    ];

    /// The seven families whose model representation the library builds,
    /// plus the symmetric group base case.
    pub const MODEL: [Family; 8] = [
        Family::Partition,
        Family::SymmetricGroup,
        Family::Brauer,
        Family::RookMonoid,
        Family::RookBrauer,
        Family::TemperleyLieb,
        Family::Motzkin,
        Family::PlanarRook,
    ];

    /// Membership predicate.
    pub fn contains(self, d: &Diagram) -> bool {
        let k = d.k();
        let blocks = d.blocks();
        let sizes_at_most_two = || blocks.iter().all(|b| b.len() <= 2);
        let all_size_two = || blocks.iter().all(|b| b.len() == 2);
        let rook_shape = || {
            blocks.iter().all(|b| {
                b.iter().filter(|&&v| v <= k).count() <= 1
                    && b.iter().filter(|&&v| v > k).count() <= 1
            })
        };
        match self {
            Family::Partition => true,
            Family::PlanarPartition => d.is_planar(),
            Family::SymmetricGroup => d.rank() == k,
            Family::Brauer => all_size_two(),
            Family::RookMonoid => rook_shape(),
            Family::RookBrauer => sizes_at_most_two(),
            Family::TemperleyLieb => all_size_two() && d.is_planar(),
            Family::Motzkin => sizes_at_most_two() && d.is_planar(),
            Family::PlanarRook => rook_shape() && d.is_planar(),
        }
    }

    /// Planar families have trivial rank-`k` part (only the identity).
    pub fn is_planar_family(self) -> bool {
        matches!(
            self,
            Family::PlanarPartition | Family::TemperleyLieb | Family::Motzkin | Family::PlanarRook
        )
    }

    /// The rook monoid and planar rook monoid carry no parameter; their
    /// algebras fix `x = 1`.
    pub fn fixed_parameter(self) -> Option<i64> {
        match self {
            Family::RookMonoid | Family::PlanarRook => Some(1),
            _ => None,
        }
    }

    /// How many columns the essential idempotent removes: the tower step
    /// from `A_k` down to the derived algebra `A_k'`.
    pub fn tower_step(self) -> Result<usize> {
        match self {
            Family::Partition
            | Family::PlanarPartition
            | Family::RookMonoid
            | Family::RookBrauer
            | Family::Motzkin
            | Family::PlanarRook => Ok(1),
            Family::Brauer | Family::TemperleyLieb => Ok(2),
            Family::SymmetricGroup => Err(Error::NoIdempotent(self, 0)),
        }
    }

    /// The essential idempotent `e_k`, satisfying `e_k e_k = x e_k`.
    ///
    /// Step-1 families take the last column to a pair of singletons; step-2
    /// families join the last two columns horizontally in each row.
    pub fn essential_idempotent(self, k: usize) -> Result<Diagram> {
        let step = self.tower_step().map_err(|_| Error::NoIdempotent(self, k))?;
        if k < step {
            return Err(Error::NoIdempotent(self, k));
        }
        let mut blocks: Vec<Vec<usize>> = (1..=k - step).map(|i| vec![i, k + i]).collect();
        if step == 1 {
            blocks.push(vec![k]);
            blocks.push(vec![2 * k]);
        } else {
            blocks.push(vec![k - 1, k]);
            blocks.push(vec![2 * k - 1, 2 * k]);
        }
        Ok(Diagram::from_components(k, blocks))
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Partition => "partition",
            Family::PlanarPartition => "planar-partition",
            Family::SymmetricGroup => "symmetric-group",
            Family::Brauer => "brauer",
            Family::RookMonoid => "rook",
            Family::RookBrauer => "rook-brauer",
            Family::TemperleyLieb => "temperley-lieb",
            Family::Motzkin => "motzkin",
            Family::PlanarRook => "planar-rook",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        let norm = name.to_ascii_lowercase();
        let found = Family::ALL.iter().find(|f| {
            f.name() == norm
                || f.name().replace('-', "_") == norm
                || f.name().replace('-', "") == norm.replace(['-', '_'], "")
        });
        match (found, norm.as_str()) {
            (Some(&f), _) => Ok(f),
            (None, "tl") => Ok(Family::TemperleyLieb),
            (None, "rb") => Ok(Family::RookBrauer),
            (None, "pr") => Ok(Family::PlanarRook),
            (None, "pp") => Ok(Family::PlanarPartition),
            (None, "sym" | "s") => Ok(Family::SymmetricGroup),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown family {name:?}") }),
        }
    }
}

// ---------------------------------------------------------------------------
// Text form: blocks joined by " | ", vertices signed, canonical order.
// The k = 2 transposition prints as "1 -2 | 2 -1".
// ---------------------------------------------------------------------------

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .signed_blocks()
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rendered.join(" | "))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[k={} {}]", self.k, self)
    }
}

/// Parse the signed text form.  Reports the byte position of the first
/// offending token; partition validity is delegated to canonicalization.
pub fn parse_diagram(text: &str, k: usize) -> Result<Diagram> {
    let mut blocks: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    let mut token_start: Option<usize> = None;
    let mut saw_block_content = false;

    let flush_token = |start: usize, end: usize, text: &str, current: &mut Vec<i64>| -> Result<()> {
        let token = &text[start..end];
        let value: i64 = token.parse().map_err(|_| Error::Parse {
            pos: start,
            msg: format!("expected a signed integer, found {token:?}"),
        })?;
        if value == 0 {
            return Err(Error::Parse { pos: start, msg: "vertex 0 is not valid".into() });
        }
        current.push(value);
        Ok(())
    };

    for (pos, ch) in text.char_indices() {
        match ch {
            c if c.is_ascii_whitespace() => {
                if let Some(start) = token_start.take() {
                    flush_token(start, pos, text, &mut current)?;
                    saw_block_content = true;
                }
            }
            '|' => {
                if let Some(start) = token_start.take() {
                    flush_token(start, pos, text, &mut current)?;
                    saw_block_content = true;
                }
                if current.is_empty() {
                    return Err(Error::Parse { pos, msg: "empty block before '|'".into() });
                }
                blocks.push(std::mem::take(&mut current));
            }
            '-' | '0'..='9' => {
                token_start.get_or_insert(pos);
            }
            other => {
                return Err(Error::Parse { pos, msg: format!("unexpected character {other:?}") });
            }
        }
    }
    if let Some(start) = token_start {
        flush_token(start, text.len(), text, &mut current)?;
        saw_block_content = true;
    }
    if !current.is_empty() {
        blocks.push(current);
    } else if saw_block_content || !blocks.is_empty() {
        return Err(Error::Parse { pos: text.len(), msg: "trailing '|' with empty block".into() });
    }
    Diagram::from_signed_blocks(k, &blocks)
}
