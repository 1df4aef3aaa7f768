//! Intervals for the higher topological complexity `TC_m(B_n^G)`.
//!
//! The engine only needs the orbit structure of `G`: every bound it applies
//! is stated for a containment `G ≤ S_{n−k} × S_k` (or with fixed points),
//! and conjugate subgroups of `S_n` have isomorphic preimages, so any block
//! arrangement compatible with the orbits may be used.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permutation::GroupSpec;
use crate::torsion::gcd_triple;

/// Cohomological dimension of `B_n^G`, the same for every `G ≤ S_n`.
pub fn cd_of(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::TooFewStrands { need: 2, got: n });
    }
    Ok(n - 1)
}

/// A containment `G ≤ S_{first} × S_{second}` up to relabelling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub first: usize,
    pub second: usize,
    /// `((n,k), (n−1,k), (n−1,k−1))` with `k = second`.
    pub gcds: [u64; 3],
}

impl Bipartition {
    pub fn coprime(&self) -> bool {
        self.gcds.iter().all(|&g| g == 1)
    }

    pub fn smaller_block(&self) -> usize {
        self.first.min(self.second)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupAnalysis {
    pub degree: usize,
    pub orbits: Vec<Vec<usize>>,
    pub fixed_points: usize,
    /// One entry per achievable `k ∈ 1..n` (both orientations listed).
    pub bipartitions: Vec<Bipartition>,
}

pub fn analyze(g: &GroupSpec) -> GroupAnalysis {
    let n = g.degree();
    let orbits = g.orbits();
    let fixed_points = orbits.iter().filter(|o| o.len() == 1).count();
    // subset sums of orbit sizes
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for orbit in &orbits {
        for s in (orbit.len()..=n).rev() {
            reachable[s] |= reachable[s - orbit.len()];
        }
    }
    let bipartitions = (1..n)
        .filter(|&k| reachable[k])
        .map(|k| Bipartition {
            first: n - k,
            second: k,
            gcds: gcd_triple(n, k),
        })
        .collect();
    GroupAnalysis {
        degree: n,
        orbits,
        fixed_points,
        bipartitions,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub tag: String,
    pub quote: String,
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub cd: usize,
    pub lower: i64,
    pub upper: i64,
    pub exact: bool,
    pub provenance: Vec<Provenance>,
}

const LOWER_CD: &str = "cd(B_n^G) = n-1 <= TC_m(B_n^G)";
const UPPER_DIMENSION: &str =
    "TC_m(B_n^G) <= m*cd(B_n^G) = m(n-1) [standard dimension bound, not specific to braid subgroups]";
const LOWER_BLOCKS: &str =
    "G <= S_{n-k} x S_k with k >= 2 implies TC_m(B_n^G) >= m(n-1)-k+1 [up to relabeling]";
const LOWER_FIXED_POINT: &str =
    "G <= S_{n-1} x {1} implies TC_m(B_n^G) >= m(n-1)-1 [up to relabeling]";
const UPPER_FIXED_POINTS: &str =
    "G <= S_{n-2} x {1}^2 implies TC_m(B_n^G) <= m(n-1)-1 [up to relabeling]";
const UPPER_COPRIME: &str =
    "G <= S_{n-k} x S_k with (n,k)=(n-1,k)=(n-1,k-1)=1 implies TC_m(B_n^G) <= m(n-1)-1 [up to relabeling]";

struct Candidate {
    tag: String,
    quote: &'static str,
    bound: i64,
}

/// Sharpest interval for `TC_m(B_n^G)` licensed by the block and fixed-point
/// containments of `G`, with the winning bounds recorded as provenance.
pub fn tc_bounds(n: usize, g: &GroupSpec, m: usize) -> Result<BoundReport> {
    let cd = cd_of(n)?;
    if m < 2 {
        return Err(Error::InvalidArgument(format!("m must be at least 2, got {m}")));
    }
    if g.degree() != n {
        return Err(Error::DegreeMismatch(n, g.degree()));
    }
    let analysis = analyze(g);
    let top = (m * cd) as i64;

    let mut lowers = vec![Candidate {
        tag: "lower/cohomological-dimension".into(),
        quote: LOWER_CD,
        bound: cd as i64,
    }];
    // both blocks of size >= 2; the smaller block gives the larger bound
    if let Some(k) = analysis
        .bipartitions
        .iter()
        .filter(|b| b.smaller_block() >= 2)
        .map(Bipartition::smaller_block)
        .min()
    {
        lowers.push(Candidate {
            tag: format!("lower/disjoint-subgroups(k={k})"),
            quote: LOWER_BLOCKS,
            bound: top - k as i64 + 1,
        });
    }
    if analysis.fixed_points >= 1 {
        lowers.push(Candidate {
            tag: "lower/disjoint-subgroups(fixed-point)".into(),
            quote: LOWER_FIXED_POINT,
            bound: top - 1,
        });
    }

    let mut uppers = vec![Candidate {
        tag: "upper/dimension".into(),
        quote: UPPER_DIMENSION,
        bound: top,
    }];
    if analysis.fixed_points >= 2 {
        uppers.push(Candidate {
            tag: "upper/centre-quotient(two-fixed-points)".into(),
            quote: UPPER_FIXED_POINTS,
            bound: top - 1,
        });
    }
    if let Some(b) = analysis.bipartitions.iter().find(|b| b.coprime()) {
        uppers.push(Candidate {
            tag: format!("upper/centre-quotient(k={})", b.second.min(b.first)),
            quote: UPPER_COPRIME,
            bound: top - 1,
        });
    }

    let lower = lowers.iter().map(|c| c.bound).max().expect("baseline present");
    let upper = uppers.iter().map(|c| c.bound).min().expect("baseline present");
    let provenance = lowers
        .into_iter()
        .filter(|c| c.bound == lower)
        .chain(uppers.into_iter().filter(|c| c.bound == upper))
        .map(|c| Provenance {
            tag: c.tag,
            quote: c.quote.to_string(),
            bound: c.bound,
        })
        .collect();
    Ok(BoundReport {
        n,
        m,
        cd,
        lower,
        upper,
        exact: lower == upper,
        provenance,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub group: String,
    #[serde(flatten)]
    pub report: BoundReport,
}

/// `tc_bounds` for every group and every `m`, groups outermost.
pub fn bounds_table(groups: &[GroupSpec], ms: impl IntoIterator<Item = usize> + Clone) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for g in groups {
        for m in ms.clone() {
            rows.push(TableRow {
                group: g.to_string(),
                report: tc_bounds(g.degree(), g, m)?,
            });
        }
    }
    Ok(rows)
}
