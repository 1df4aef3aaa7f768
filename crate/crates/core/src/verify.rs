//! Property-verification suites. Each suite exercises one group-theoretic
//! claim over an exhaustive range or a seeded random corpus and tallies
//! passes per check.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::tc_bounds;
use crate::braid::{BraidWord, Sign};
use crate::equivalence::equals;
use crate::error::{Error, Result};
use crate::linking::{
    conjugated_profile, disjointness_certificate, exponents_from_linking, linking_matrix,
    linking_sums, ExponentVector,
};
use crate::permutation::GroupSpec;
use crate::rewrite::{random_word, scramble};
use crate::torsion::{brute_force_torsion, torsion_free, torsion_report};

/// Suite names with the acceptance criterion each one covers.
pub const SUITES: &[(&str, &str)] = &[
    ("center", "A1"),
    ("a-structure", "A2"),
    ("invariance", "A3"),
    ("equivariance", "A4"),
    ("torsion-oracle", "A5"),
    ("bounds", "A6"),
    ("disjointness", "A7"),
    ("congruence", "A8"),
];

const MAX_FAILURES_KEPT: usize = 5;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult {
            name: name.to_string(),
            ..Default::default()
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.failures.len() < MAX_FAILURES_KEPT {
            self.failures.push(detail());
        }
    }

    pub fn ok(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub criterion: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::ok)
    }
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    let criterion = SUITES
        .iter()
        .find(|(s, _)| *s == name)
        .map(|(_, c)| *c)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {name:?}")))?;
    let checks = match name {
        "center" => center()?,
        "a-structure" => a_structure()?,
        "invariance" => invariance(seed),
        "equivariance" => equivariance(seed)?,
        "torsion-oracle" => torsion_oracle()?,
        "bounds" => bound_fidelity()?,
        "disjointness" => disjointness(seed)?,
        "congruence" => congruence(seed)?,
        _ => unreachable!("suite table and dispatch agree"),
    };
    Ok(SuiteReport {
        suite: name.to_string(),
        criterion: criterion.to_string(),
        seed,
        checks,
    })
}

/// δⁿ = Δ², ε^{n−1} = Δ², and Δ² commutes with every generator, n = 3..=6.
pub fn center() -> Result<Vec<CheckResult>> {
    let mut rotations = CheckResult::new("delta^n = eps^(n-1) = full twist");
    let mut central = CheckResult::new("full twist commutes with sigma_i");
    for n in 3..=6 {
        let twist = BraidWord::full_twist(n)?;
        let d = BraidWord::delta(n)?.pow(n as i64);
        let e = BraidWord::epsilon(n)?.pow(n as i64 - 1);
        rotations.record(equals(&d, &twist)?.equal, || format!("delta^{n} != twist"));
        rotations.record(equals(&e, &twist)?.equal, || format!("eps^{} != twist", n - 1));
        for i in 1..n {
            let s = BraidWord::sigma(n, i, Sign::Positive)?;
            let ok = equals(&twist.concat(&s)?, &s.concat(&twist)?)?.equal;
            central.record(ok, || format!("n={n}: twist does not commute with sigma_{i}"));
        }
    }
    Ok(vec![rotations, central])
}

/// The `α_j` commute pairwise and linking coordinates invert the product
/// form on `[−3,3]^{n−1}`, n ≤ 6.
pub fn a_structure() -> Result<Vec<CheckResult>> {
    let mut commute = CheckResult::new("alpha_i alpha_j = alpha_j alpha_i");
    let mut round_trip = CheckResult::new("exponents_from_linking inverts prod alpha_i^m_i");
    let mut sums = CheckResult::new("sum_{j>i} lk(i,j) = (n-i) m_i");
    for n in 2..=6usize {
        let alphas = (1..n).map(|j| BraidWord::alpha(n, j)).collect::<Result<Vec<_>>>()?;
        for i in 0..alphas.len() {
            for j in i + 1..alphas.len() {
                let ok = equals(&alphas[i].concat(&alphas[j])?, &alphas[j].concat(&alphas[i])?)?.equal;
                commute.record(ok, || format!("n={n}: alpha_{} alpha_{}", i + 1, j + 1));
            }
        }
        let dims = n - 1;
        let count = 7usize.pow(dims as u32);
        for code in 0..count {
            let m: Vec<i64> = (0..dims)
                .map(|d| (code / 7usize.pow(d as u32) % 7) as i64 - 3)
                .collect();
            let vector = ExponentVector(m.clone());
            let word = vector.to_word()?;
            let recovered = exponents_from_linking(&word)?;
            round_trip.record(recovered == vector, || format!("{m:?} -> {:?}", recovered.0));
            let expected: Vec<i64> = m.iter().enumerate().map(|(i, &x)| (n - 1 - i) as i64 * x).collect();
            let got = linking_sums(&word)?;
            sums.record(got == expected, || format!("{m:?}: sums {got:?}"));
        }
    }
    Ok(vec![commute, round_trip, sums])
}

/// Linking profile, component count, permutation and exponent sum survive
/// 50 random relation rewrites, 1000 words, n ≤ 7.
pub fn invariance(seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut profile = CheckResult::new("linking profile invariant");
    let mut components = CheckResult::new("component count invariant");
    let mut perm = CheckResult::new("permutation invariant");
    let mut exp = CheckResult::new("exponent sum invariant");
    for _ in 0..1000 {
        let n = rng.gen_range(2..=7);
        let len = rng.gen_range(0..=40);
        let w = random_word(n, len, &mut rng);
        let v = scramble(&w, 50, 64, &mut rng);
        let (pw, pv) = (linking_matrix(&w), linking_matrix(&v));
        components.record(pw.size() == pv.size(), || format!("{w:?} vs {v:?}"));
        profile.record(pw == pv, || format!("{w:?} vs {v:?}"));
        perm.record(w.permutation() == v.permutation(), || format!("{w:?} vs {v:?}"));
        exp.record(w.exponent_sum() == v.exponent_sum(), || format!("{w:?} vs {v:?}"));
    }
    vec![profile, components, perm, exp]
}

/// `conjugated_profile(w, g)` is the `π(g)`-relabelled profile of `w`.
pub fn equivariance(seed: u64) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut check = CheckResult::new("conjugation permutes profile by pi(g)");
    for _ in 0..1000 {
        let n = rng.gen_range(2..=6);
        let w = random_word(n, rng.gen_range(0..=30), &mut rng);
        let g = random_word(n, rng.gen_range(0..=12), &mut rng);
        let direct = conjugated_profile(&w, &g)?;
        let moved = linking_matrix(&w).permuted(&g.permutation());
        check.record(direct == moved, || format!("w={w:?} g={g:?}"));
    }
    Ok(vec![check])
}

/// gcd criterion agrees with enumeration for 3 ≤ n ≤ 12; witnesses land in
/// the block subgroup and, for n ≤ 5, satisfy `w^m = Δ^l`.
pub fn torsion_oracle() -> Result<Vec<CheckResult>> {
    let mut agree = CheckResult::new("torsion_free = brute_force_torsion");
    let mut members = CheckResult::new("witness permutation in S_(n-k) x S_k");
    let mut powers = CheckResult::new("witness^m = Delta^l (n <= 5)");
    for n in 3..=12 {
        for k in 1..n {
            let fast = torsion_free(n, k)?;
            let slow = brute_force_torsion(n, k)?;
            agree.record(fast == slow, || format!("(n,k)=({n},{k}): gcd {fast}, enumeration {slow}"));
            let report = torsion_report(n, k)?;
            let Some(w) = report.witness else { continue };
            let inside = GroupSpec::mixed(n - k, k).member(&w.word.permutation())?;
            members.record(inside, || format!("(n,k)=({n},{k}): {}", w.word.permutation()));
            if n <= 5 {
                let lhs = w.word.pow(w.order.m as i64);
                let rhs = BraidWord::full_twist(n)?.pow(w.order.l as i64 / 2);
                let ok = w.order.l % 2 == 0 && equals(&lhs, &rhs)?.equal;
                powers.record(ok, || format!("(n,k)=({n},{k}): order datum {:?}", w.order));
            }
        }
    }
    Ok(vec![agree, members, powers])
}

/// Emitted intervals match the closed-form values.
pub fn bound_fidelity() -> Result<Vec<CheckResult>> {
    let mut pure = CheckResult::new("pure P_n exact 2n-3, n=2..10");
    for n in 2..=10usize {
        let r = tc_bounds(n, &GroupSpec::pure(n), 2)?;
        let want = 2 * n as i64 - 3;
        pure.record(r.exact && r.lower == want, || format!("n={n}: [{}, {}]", r.lower, r.upper));
    }

    let mut fixed = CheckResult::new("G <= S_(n-2) x {1}^2 exact m(n-1)-1, n<=10, m<=5");
    for n in 2..=10usize {
        let mut groups = vec![GroupSpec::pure(n)];
        if n >= 4 {
            // S_{n−2} on the first n−2 points, two fixed points
            let gens = GroupSpec::mixed(n - 2, 0).generators();
            let padded = gens
                .iter()
                .map(|g| {
                    let mut table = g.images();
                    table.extend([n - 1, n]);
                    crate::permutation::Permutation::from_images(&table)
                })
                .collect::<Result<Vec<_>>>()?;
            groups.push(GroupSpec::generated(n, padded)?);
        }
        for g in &groups {
            for m in 2..=5usize {
                let r = tc_bounds(n, g, m)?;
                let want = (m * (n - 1)) as i64 - 1;
                fixed.record(r.exact && r.lower == want, || {
                    format!("{g}, m={m}: [{}, {}]", r.lower, r.upper)
                });
            }
        }
    }

    let mut coprime = CheckResult::new("coprime blocks give [2n-k-1, 2n-3]");
    for n in 4..=16usize {
        for k in 2..=n - 2 {
            if crate::torsion::gcd_triple(n, k).iter().any(|&g| g != 1) {
                continue;
            }
            let r = tc_bounds(n, &GroupSpec::mixed(n - k, k), 2)?;
            let small = k.min(n - k) as i64;
            let want = (2 * n as i64 - small - 1, 2 * n as i64 - 3);
            coprime.record((r.lower, r.upper) == want, || {
                format!("(n,k)=({n},{k}): [{}, {}]", r.lower, r.upper)
            });
        }
    }

    let mut named = CheckResult::new("B_{5,3}, m=2 gives [12, 13]");
    let r = tc_bounds(8, &GroupSpec::mixed(5, 3), 2)?;
    named.record((r.lower, r.upper) == (12, 13), || format!("[{}, {}]", r.lower, r.upper));

    let mut full = CheckResult::new("full B_n baseline [n-1, 2n-2]");
    for n in 2..=10usize {
        let r = tc_bounds(n, &GroupSpec::full(n), 2)?;
        let want = (n as i64 - 1, 2 * n as i64 - 2);
        full.record((r.lower, r.upper) == want, || format!("n={n}: [{}, {}]", r.lower, r.upper));
    }
    Ok(vec![pure, fixed, coprime, named, full])
}

/// Sampled `P_{n−k+1} ∩ γ A_n γ⁻¹ = {1}` certificates.
pub fn disjointness(seed: u64) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    for (n, k, samples) in [(4, 2, 200), (3, 1, 100)] {
        let report = disjointness_certificate(n, k, samples, seed)?;
        let mut linking = CheckResult::new(&format!("n={n}, k={k}: linking separates"));
        linking.total = samples;
        linking.passed = samples - report.counterexamples.len();
        linking.failures = report
            .counterexamples
            .iter()
            .take(MAX_FAILURES_KEPT)
            .map(|c| c.reason.clone())
            .collect();
        let mut words = CheckResult::new(&format!("n={n}, k={k}: words unequal"));
        words.total = samples;
        words.passed = report.word_checks;
        out.push(linking);
        out.push(words);
    }
    Ok(out)
}

/// Rewrite-generated pairs are equal; pairs separated by permutation or
/// linking are unequal.
pub fn congruence(seed: u64) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut same = CheckResult::new("rewrite-equivalent pairs judged equal");
    for _ in 0..500 {
        let n = rng.gen_range(2..=7);
        let w = random_word(n, rng.gen_range(0..=24), &mut rng);
        let v = scramble(&w, 50, 64, &mut rng);
        same.record(equals(&w, &v)?.equal, || format!("{w:?} vs {v:?}"));
    }
    let mut different = CheckResult::new("invariant-separated pairs judged unequal");
    let mut drawn = 0;
    while drawn < 500 {
        let n = rng.gen_range(2..=7);
        let a = random_word(n, rng.gen_range(0..=32), &mut rng);
        let b = random_word(n, rng.gen_range(0..=32), &mut rng);
        if a.permutation() == b.permutation() && linking_matrix(&a) == linking_matrix(&b) {
            continue;
        }
        drawn += 1;
        different.record(!equals(&a, &b)?.equal, || format!("{a:?} vs {b:?}"));
    }
    Ok(vec![same, different])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nosuch", 0).is_err());
    }

    #[test]
    fn center_suite_passes() {
        let r = run_suite("center", 0).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.criterion, "A1");
    }
}
