//! Symmetric-group machinery: permutations, cycle types, group specifications
//! and the Young-subgroup fitting used by the torsion and bounds modules.
//!
//! Points are labelled `1..=n` in every public signature. Composition is
//! right-to-left: `p.compose(&q)` applies `q` first, then `p`.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Default cap on closure enumeration for generated groups.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based image table
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Build from a 1-based image table, `table[x - 1] = p(x)`.
    pub fn from_images(table: &[usize]) -> Result<Self> {
        let n = table.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &y in table {
            if y == 0 || y > n || seen[y - 1] {
                return Err(Error::InvalidArgument(format!(
                    "image table {table:?} is not a bijection of 1..={n}"
                )));
            }
            seen[y - 1] = true;
            images.push(y - 1);
        }
        Ok(Permutation { images })
    }

    /// The transposition `(a b)` on `1..=degree`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(degree, &[vec![a, b]])
    }

    /// Product of disjoint cycles, each given as 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &x in cycle {
                if x == 0 || x > degree {
                    return Err(Error::InvalidArgument(format!(
                        "point {x} outside 1..={degree}"
                    )));
                }
                if used[x - 1] {
                    return Err(Error::InvalidArgument(format!(
                        "point {x} appears twice in cycle notation"
                    )));
                }
                used[x - 1] = true;
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parse cycle notation such as `(1 2)(3 4 5)`; `()`, `id` and the empty
    /// string denote the identity. Cycles must be disjoint.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "id" {
            return Ok(Self::identity(degree));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = open
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &open[..close];
            let points = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {s:?} in {text:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&y| y + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &y) in self.images.iter().enumerate() {
            images[y] = i;
        }
        Permutation { images }
    }

    pub fn pow(&self, exponent: i64) -> Permutation {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut result = Permutation::identity(self.degree());
        for _ in 0..exponent.unsigned_abs() {
            result = Permutation {
                images: result.images.iter().map(|&y| base.images[y]).collect(),
            };
        }
        result
    }

    /// `q ∘ self ∘ q⁻¹`.
    pub fn conjugate_by(&self, q: &Permutation) -> Result<Permutation> {
        q.compose(self)?.compose(&q.inverse())
    }

    /// Right multiplication by the adjacent transposition `(i i+1)`, 1-based.
    pub(crate) fn mul_adjacent_right(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// All cycles, fixed points included, each starting at its smallest
    /// point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_parts_unchecked(self.cycles().iter().map(Vec::len).collect())
    }

    /// Indices `i₁, …, i_r` (1-based) with `self = (i₁ i₁+1) ∘ ⋯ ∘ (i_r i_r+1)`
    /// and `r` equal to the inversion count.
    pub fn adjacent_factors(&self) -> Vec<usize> {
        let mut table = self.images.clone();
        let mut swaps = Vec::new();
        // bubble sort by right multiplications p ∘ (i i+1)
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..table.len().saturating_sub(1) {
                if table[i] > table[i + 1] {
                    table.swap(i, i + 1);
                    swaps.push(i + 1);
                    changed = true;
                }
            }
        }
        swaps.reverse();
        swaps
    }

    pub fn inversions(&self) -> usize {
        let n = self.degree();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.images[i] > self.images[j])
            .count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for cycle in nontrivial {
            let body: Vec<String> = cycle.iter().map(ToString::to_string).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Multiset of cycle lengths, fixed points recorded as 1's. Stored in
/// non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn from_parts(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidArgument(
                "cycle type parts must be positive".into(),
            ));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", body.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// Trivial group: preimage is the pure braid group.
    Pure,
    /// All of `S_n`.
    Full,
    /// `S_first × S_second`, the first block being `1..=first`.
    Mixed { first: usize, second: usize },
    Generated(Vec<Permutation>),
}

/// A subgroup `G ≤ S_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    degree: usize,
    kind: GroupKind,
}

impl GroupSpec {
    pub fn pure(degree: usize) -> Self {
        GroupSpec {
            degree,
            kind: GroupKind::Pure,
        }
    }

    pub fn full(degree: usize) -> Self {
        GroupSpec {
            degree,
            kind: GroupKind::Full,
        }
    }

    /// `S_{n−k} × S_k` with `n = first + second`.
    pub fn mixed(first: usize, second: usize) -> Self {
        GroupSpec {
            degree: first + second,
            kind: GroupKind::Mixed { first, second },
        }
    }

    pub fn generated(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        Ok(GroupSpec {
            degree,
            kind: GroupKind::Generated(generators),
        })
    }

    /// Parse a `;`-separated list of permutations in cycle notation.
    pub fn parse_generators(degree: usize, text: &str) -> Result<Self> {
        let gens = text
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| Permutation::parse_cycles(degree, s))
            .collect::<Result<Vec<_>>>()?;
        Self::generated(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    /// Generators of the group (for named families, the evident ones).
    pub fn generators(&self) -> Vec<Permutation> {
        let n = self.degree;
        let adjacent = |i: usize| {
            Permutation::transposition(n, i, i + 1).expect("adjacent transposition in range")
        };
        match &self.kind {
            GroupKind::Pure => Vec::new(),
            GroupKind::Full => (1..n).map(adjacent).collect(),
            GroupKind::Mixed { first, .. } => {
                (1..n).filter(|&i| i != *first).map(adjacent).collect()
            }
            GroupKind::Generated(gens) => gens.clone(),
        }
    }

    /// Orbit partition of `1..=n`, blocks sorted and ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        match &self.kind {
            GroupKind::Pure => (1..=n).map(|x| vec![x]).collect(),
            GroupKind::Full if n > 0 => vec![(1..=n).collect()],
            GroupKind::Full => Vec::new(),
            GroupKind::Mixed { first, .. } => [(1..=*first).collect::<Vec<_>>(), (first + 1..=n).collect()]
                .into_iter()
                .filter(|b| !b.is_empty())
                .collect(),
            GroupKind::Generated(gens) => {
                let mut parent: Vec<usize> = (0..n).collect();
                fn find(parent: &mut [usize], x: usize) -> usize {
                    let mut r = x;
                    while parent[r] != r {
                        r = parent[r];
                    }
                    let mut y = x;
                    while parent[y] != r {
                        let next = parent[y];
                        parent[y] = r;
                        y = next;
                    }
                    r
                }
                for g in gens {
                    for x in 0..n {
                        let (a, b) = (find(&mut parent, x), find(&mut parent, g.images[x]));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                }
                let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for x in 0..n {
                    let root = find(&mut parent, x);
                    blocks.entry(root).or_default().push(x + 1);
                }
                blocks.into_values().collect()
            }
        }
    }

    pub fn member(&self, p: &Permutation) -> Result<bool> {
        self.member_with_cap(p, DEFAULT_GROUP_CAP)
    }

    pub fn member_with_cap(&self, p: &Permutation, cap: usize) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        match &self.kind {
            GroupKind::Pure => Ok(p.is_identity()),
            GroupKind::Full => Ok(true),
            GroupKind::Mixed { first, .. } => Ok((1..=*first).all(|x| p.apply(x) <= *first)),
            GroupKind::Generated(_) => {
                // cheap rejection: p must preserve every orbit
                for orbit in self.orbits() {
                    let block: HashSet<usize> = orbit.iter().copied().collect();
                    if orbit.iter().any(|&x| !block.contains(&p.apply(x))) {
                        return Ok(false);
                    }
                }
                Ok(self.elements(cap)?.contains(p))
            }
        }
    }

    /// Every element of the group, by breadth-first closure over the
    /// generators. Fails once more than `cap` elements are found.
    pub fn elements(&self, cap: usize) -> Result<HashSet<Permutation>> {
        let gens = self.generators();
        let identity = Permutation::identity(self.degree);
        let mut seen = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = g.compose(&x)?;
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(seen)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GroupKind::Pure => write!(f, "pure({})", self.degree),
            GroupKind::Full => write!(f, "full({})", self.degree),
            GroupKind::Mixed { first, second } => write!(f, "mixed({first},{second})"),
            GroupKind::Generated(gens) => {
                let body: Vec<String> = gens.iter().map(ToString::to_string).collect();
                write!(f, "gens({}; {})", self.degree, body.join(";"))
            }
        }
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Accepts `{2,2}`, `2,2` or `2 2`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad cycle length {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        CycleType::from_parts(parts)
    }
}

/// A split of a cycle type's parts between the two blocks of
/// `S_{n−k} × S_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YoungSplit {
    pub n_minus_k: usize,
    pub k: usize,
    /// Parts placed in the first block `1..=n−k`.
    pub first: Vec<usize>,
    /// Parts placed in the last block, summing to `k`.
    pub second: Vec<usize>,
}

/// Find a sub-multiset of the parts summing to `k`; the remaining parts then
/// fill the `n − k` block. Returns `None` when no such split exists.
pub fn fit_into_young(c: &CycleType, n_minus_k: usize, k: usize) -> Option<YoungSplit> {
    let parts = c.parts();
    if c.degree() != n_minus_k + k {
        return None;
    }
    // reach[i][s]: some subset of parts[..i] sums to s
    let mut reach = vec![vec![false; k + 1]; parts.len() + 1];
    reach[0][0] = true;
    for (i, &part) in parts.iter().enumerate() {
        for s in 0..=k {
            reach[i + 1][s] = reach[i][s] || (s >= part && reach[i][s - part]);
        }
    }
    if !reach[parts.len()][k] {
        return None;
    }
    let mut first = Vec::new();
    let mut second = Vec::new();
    let mut s = k;
    for i in (0..parts.len()).rev() {
        if reach[i][s] {
            first.push(parts[i]);
        } else {
            second.push(parts[i]);
            s -= parts[i];
        }
    }
    first.sort_unstable_by(|a, b| b.cmp(a));
    second.sort_unstable_by(|a, b| b.cmp(a));
    Some(YoungSplit {
        n_minus_k,
        k,
        first,
        second,
    })
}

/// A permutation `β` such that `β ∘ p ∘ β⁻¹` preserves the blocks
/// `1..=n−k` and `n−k+1..=n`, with the cycles of `p` distributed as in
/// `split`. Cycles are relabelled onto consecutive points of their block;
/// when `p` already has the required shape on trailing points, later cycles
/// are preferred for the last block.
pub fn conjugator_realizing(p: &Permutation, split: &YoungSplit) -> Result<Permutation> {
    let n = p.degree();
    if split.n_minus_k + split.k != n {
        return Err(Error::DegreeMismatch(split.n_minus_k + split.k, n));
    }
    if split.second.iter().sum::<usize>() != split.k {
        return Err(Error::Infeasible(format!(
            "parts {:?} do not sum to k = {}",
            split.second, split.k
        )));
    }
    let cycles = p.cycles();
    let mut in_second = vec![false; cycles.len()];
    for &len in &split.second {
        let slot = (0..cycles.len())
            .rev()
            .find(|&c| !in_second[c] && cycles[c].len() == len)
            .ok_or_else(|| {
                Error::Infeasible(format!(
                    "cycle type {} has no free {len}-cycle for the last block",
                    p.cycle_type()
                ))
            })?;
        in_second[slot] = true;
    }
    let mut table = vec![0; n];
    let mut next_first = 1;
    let mut next_second = split.n_minus_k + 1;
    for (c, cycle) in cycles.iter().enumerate() {
        for &x in cycle {
            let slot = if in_second[c] {
                &mut next_second
            } else {
                &mut next_first
            };
            table[x - 1] = *slot;
            *slot += 1;
        }
    }
    Permutation::from_images(&table)
}
