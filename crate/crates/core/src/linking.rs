//! Linking numbers of braid closures.
//!
//! Closing a braid joins the end of each strand to the start position it
//! lands on, so closure components are the cycles of the braid's
//! permutation. Components are indexed by their smallest strand label.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::BraidWord;
use crate::equivalence;
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::rewrite::random_block_word;

/// Symmetric matrix of pairwise linking numbers between closure components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LinkingProfile {
    /// Strand labels (1-based) of each component, sorted.
    pub components: Vec<Vec<usize>>,
    pub matrix: Vec<Vec<i64>>,
}

impl LinkingProfile {
    pub fn zero(strands: usize) -> Self {
        LinkingProfile {
            components: (1..=strands).map(|s| vec![s]).collect(),
            matrix: vec![vec![0; strands]; strands],
        }
    }

    pub fn size(&self) -> usize {
        self.components.len()
    }

    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.matrix[a][b]
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().flatten().all(|&x| x == 0)
    }

    /// Relabel strands by `p` (strand `s` becomes `p(s)`) and reorder the
    /// components by smallest label.
    pub fn permuted(&self, p: &Permutation) -> LinkingProfile {
        let mut relabelled: Vec<(Vec<usize>, usize)> = self
            .components
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                let mut c: Vec<usize> = c.iter().map(|&s| p.apply(s)).collect();
                c.sort_unstable();
                (c, idx)
            })
            .collect();
        relabelled.sort();
        let order: Vec<usize> = relabelled.iter().map(|(_, idx)| *idx).collect();
        LinkingProfile {
            components: relabelled.into_iter().map(|(c, _)| c).collect(),
            matrix: order
                .iter()
                .map(|&a| order.iter().map(|&b| self.matrix[a][b]).collect())
                .collect(),
        }
    }
}

/// Signed crossing counts between strands, indexed by starting position.
fn crossing_counts(w: &BraidWord) -> Vec<Vec<i64>> {
    let n = w.strands();
    let mut at: Vec<usize> = (0..n).collect();
    let mut counts = vec![vec![0i64; n]; n];
    for l in w.letters() {
        let i = l.index() - 1;
        let (a, b) = (at[i], at[i + 1]);
        let s = l.sign().value();
        counts[a][b] += s;
        counts[b][a] += s;
        at.swap(i, i + 1);
    }
    counts
}

pub fn linking_matrix(w: &BraidWord) -> LinkingProfile {
    let counts = crossing_counts(w);
    let mut components = w.permutation().cycles();
    for comp in &mut components {
        comp.sort_unstable();
    }
    let mut component_of = vec![0; w.strands()];
    for (c, comp) in components.iter().enumerate() {
        for &s in comp {
            component_of[s - 1] = c;
        }
    }
    let size = components.len();
    let mut doubled = vec![vec![0i64; size]; size];
    for (a, row) in counts.iter().enumerate() {
        for (b, &x) in row.iter().enumerate() {
            if a < b && component_of[a] != component_of[b] {
                doubled[component_of[a]][component_of[b]] += x;
                doubled[component_of[b]][component_of[a]] += x;
            }
        }
    }
    let matrix = doubled
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    debug_assert!(x % 2 == 0, "odd crossing count between components");
                    x / 2
                })
                .collect()
        })
        .collect();
    LinkingProfile { components, matrix }
}

/// `linking_matrix(g · w · g⁻¹)`.
pub fn conjugated_profile(w: &BraidWord, g: &BraidWord) -> Result<LinkingProfile> {
    Ok(linking_matrix(&w.conjugate_by(g)?))
}

/// Coordinates `(m_1, …, m_{n−1})` of `∏ α_i^{m_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentVector(pub Vec<i64>);

impl ExponentVector {
    /// The word `α_1^{m_1} ⋯ α_{n−1}^{m_{n−1}}` on `len + 1` strands.
    pub fn to_word(&self) -> Result<BraidWord> {
        let n = self.0.len() + 1;
        let mut word = BraidWord::identity(n);
        for (idx, &m) in self.0.iter().enumerate() {
            word = word.concat(&BraidWord::alpha(n, idx + 1)?.pow(m))?;
        }
        Ok(word)
    }
}

fn require_pure(w: &BraidWord) -> Result<LinkingProfile> {
    if !w.is_pure() {
        return Err(Error::InvalidArgument(format!(
            "braid {w} is not pure (permutation {})",
            w.permutation()
        )));
    }
    Ok(linking_matrix(w))
}

/// `m_i = lk(i, n)`. Each `α_i` links strand `i` once with every later
/// strand and leaves earlier strands alone, so on `A_n` this recovers the
/// exponents of the product form.
pub fn exponents_from_linking(w: &BraidWord) -> Result<ExponentVector> {
    let n = w.strands();
    let lk = require_pure(w)?;
    Ok(ExponentVector(
        (0..n.saturating_sub(1)).map(|i| lk.get(i, n - 1)).collect(),
    ))
}

/// `Σ_{j>i} lk(i, j)` for each `i < n`. On `A_n` this equals `(n − i)·m_i`.
pub fn linking_sums(w: &BraidWord) -> Result<Vec<i64>> {
    let n = w.strands();
    let lk = require_pure(w)?;
    Ok((0..n.saturating_sub(1))
        .map(|i| (i + 1..n).map(|j| lk.get(i, j)).sum())
        .collect())
}

fn linked(p: &LinkingProfile, idx: usize) -> bool {
    p.matrix[idx].iter().any(|&x| x != 0)
}

/// At least two of the last `k` indices are linked with some other index.
pub fn last_block_linked(p: &LinkingProfile, k: usize) -> bool {
    let size = p.size();
    (size.saturating_sub(k)..size).filter(|&i| linked(p, i)).count() >= 2
}

/// The last index is linked with some other index.
pub fn linked_with_last(p: &LinkingProfile) -> bool {
    p.size() > 0 && linked(p, p.size() - 1)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub sigma: BraidWord,
    pub gamma: BraidWord,
    pub rho: BraidWord,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisjointnessReport {
    pub n: usize,
    pub k: usize,
    pub samples: usize,
    /// Samples whose conjugated `A_n` element passed the linking test.
    pub abelian_side_linked: usize,
    /// Samples whose `P_{n−k+1}` element passed the linking test.
    pub pure_side_unlinked: usize,
    /// Word-level inequalities confirmed (only attempted for `n ≤ 5`).
    pub word_checks: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl DisjointnessReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// Largest strand count for which the certificate also compares words.
pub const WORD_CHECK_MAX_STRANDS: usize = 5;

fn random_small_pure<R: Rng>(strands: usize, ambient: usize, rng: &mut R) -> Result<BraidWord> {
    let mut word = BraidWord::identity(ambient);
    let factors = rng.gen_range(1..=4);
    for _ in 0..factors {
        let j = rng.gen_range(2..=strands);
        let i = rng.gen_range(1..j);
        let power = if rng.gen_bool(0.5) { 1 } else { -1 };
        let a = BraidWord::pure_generator(strands, i, j)?.embed(ambient)?;
        word = word.concat(&a.pow(power))?;
    }
    Ok(word)
}

/// Sample nontrivial `σ ∈ A_n`, block-preserving `γ`, and nontrivial `ρ` in
/// the embedded pure braid group on the first strands, then check that the
/// linking data of `γσγ⁻¹` and `ρ` separate them. For `k ≥ 2` the embedded
/// group is `P_{n−k+1}` and the test is [`last_block_linked`]; for `k = 1`
/// it is `P_{n−1}` and the test is [`linked_with_last`].
pub fn disjointness_certificate(n: usize, k: usize, samples: usize, seed: u64) -> Result<DisjointnessReport> {
    if n < 3 || k < 1 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "disjointness needs n >= 3 and 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let small = if k >= 2 { n - k + 1 } else { n - 1 };
    let test = |p: &LinkingProfile| {
        if k >= 2 {
            last_block_linked(p, k)
        } else {
            linked_with_last(p)
        }
    };
    let mut report = DisjointnessReport {
        n,
        k,
        samples,
        abelian_side_linked: 0,
        pure_side_unlinked: 0,
        word_checks: 0,
        counterexamples: Vec::new(),
    };
    for _ in 0..samples {
        let exps = loop {
            let m: Vec<i64> = (1..n).map(|_| rng.gen_range(-2..=2)).collect();
            if m.iter().any(|&x| x != 0) {
                break ExponentVector(m);
            }
        };
        let sigma = exps.to_word()?;
        let gamma_len = rng.gen_range(0..=10);
        let gamma = random_block_word(n, n - k, gamma_len, &mut rng);
        let rho = loop {
            let candidate = random_small_pure(small, n, &mut rng)?;
            if !equivalence::is_trivial(&candidate)?.equal {
                break candidate;
            }
        };

        let mut reasons = Vec::new();
        if test(&conjugated_profile(&sigma, &gamma)?) {
            report.abelian_side_linked += 1;
        } else {
            reasons.push("conjugated A_n element fails the linking test");
        }
        if test(&linking_matrix(&rho)) {
            reasons.push("embedded pure braid passes the linking test");
        } else {
            report.pure_side_unlinked += 1;
        }
        if n <= WORD_CHECK_MAX_STRANDS {
            if equivalence::equals(&sigma.conjugate_by(&gamma)?, &rho)?.equal {
                reasons.push("conjugate equals the pure braid");
            } else {
                report.word_checks += 1;
            }
        }
        if !reasons.is_empty() {
            report.counterexamples.push(Counterexample {
                sigma,
                gamma,
                rho,
                reason: reasons.join("; "),
            });
        }
    }
    Ok(report)
}
