//! Torsion in the mixed braid group `B_{n−k,k}` modulo its centre `⟨Δ²⟩`.
//!
//! Torsion classes are represented by conjugates of powers of the rotations
//! `δ` and `ε`. A power survives in `B_{n−k,k}` exactly when its cycle type
//! splits between the two blocks, which reduces to three gcd conditions.

use serde::Serialize;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::permutation::{conjugator_realizing, fit_into_young, GroupSpec, Permutation};

/// Greatest common divisor with `gcd(x, 0) = x`.
pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `((n,k), (n−1,k), (n−1,k−1))`.
pub fn gcd_triple(n: usize, k: usize) -> [u64; 3] {
    let (n, k) = (n as u64, k as u64);
    [gcd(n, k), gcd(n - 1, k), gcd(n - 1, k - 1)]
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if n < 2 || k < 1 || k >= n {
        return Err(Error::InvalidArgument(format!(
            "torsion analysis needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// `B_{n−k,k}/Z` is torsion-free iff all three gcds are 1. For `n = 2` every
/// group in sight is infinite cyclic.
pub fn torsion_free(n: usize, k: usize) -> Result<bool> {
    check_range(n, k)?;
    if n == 2 {
        return Ok(true);
    }
    Ok(gcd_triple(n, k).iter().all(|&g| g == 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WitnessSource {
    #[serde(rename = "delta-power")]
    DeltaPower,
    #[serde(rename = "epsilon-power")]
    EpsilonPower,
}

/// `w^m = Δ^l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrderDatum {
    pub m: u64,
    pub l: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionWitness {
    pub word: BraidWord,
    pub strands: usize,
    pub source: WitnessSource,
    pub exponent: u64,
    /// The relabelling `β` whose lift conjugates the rotation power.
    pub conjugator: Permutation,
    pub order: OrderDatum,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionReport {
    pub n: usize,
    pub k: usize,
    pub gcds: [u64; 3],
    pub torsion_free: bool,
    pub witness: Option<TorsionWitness>,
}

/// A braid word with permutation `p`, one `σ_i` per adjacent transposition.
pub fn lift_permutation(p: &Permutation) -> BraidWord {
    let signed: Vec<i64> = p.adjacent_factors().into_iter().map(|i| i as i64).collect();
    BraidWord::from_signed(p.degree(), &signed).expect("adjacent factors are in range")
}

/// Smallest exponent in the preferred family whose rotation power fits
/// `S_{n−k} × S_k`, decided by the divisibility conditions.
fn first_fitting_power(n: usize, k: usize) -> Option<(WitnessSource, u64)> {
    let (n, k) = (n as u64, k as u64);
    let delta = (1..n).find(|&p| k % (n / gcd(p, n)) == 0);
    if let Some(p) = delta {
        return Some((WitnessSource::DeltaPower, p));
    }
    (1..n - 1)
        .find(|&q| {
            let len = (n - 1) / gcd(q, n - 1);
            k % len == 0 || (k - 1) % len == 0
        })
        .map(|q| (WitnessSource::EpsilonPower, q))
}

fn rotation(n: usize, source: WitnessSource) -> Result<BraidWord> {
    match source {
        WitnessSource::DeltaPower => BraidWord::delta(n),
        WitnessSource::EpsilonPower => BraidWord::epsilon(n),
    }
}

/// Full report: gcd data, verdict, and a witness braid when torsion exists.
pub fn torsion_report(n: usize, k: usize) -> Result<TorsionReport> {
    let free = torsion_free(n, k)?;
    let witness = if free {
        None
    } else {
        Some(build_witness(n, k)?)
    };
    Ok(TorsionReport {
        n,
        k,
        gcds: gcd_triple(n, k),
        torsion_free: free,
        witness,
    })
}

/// Like [`torsion_report`] but fails on torsion-free input.
pub fn torsion_witness(n: usize, k: usize) -> Result<TorsionReport> {
    if torsion_free(n, k)? {
        return Err(Error::TorsionFree { n_minus_k: n - k, k });
    }
    torsion_report(n, k)
}

fn build_witness(n: usize, k: usize) -> Result<TorsionWitness> {
    let (source, exponent) = first_fitting_power(n, k).ok_or_else(|| {
        Error::Infeasible(format!("no rotation power fits S_{} x S_{k}", n - k))
    })?;
    let rot = rotation(n, source)?.pow(exponent as i64);
    let image = rot.permutation();
    let split = fit_into_young(&image.cycle_type(), n - k, k).ok_or_else(|| {
        Error::Infeasible(format!(
            "cycle type {} does not split as ({}, {k})",
            image.cycle_type(),
            n - k
        ))
    })?;
    let beta = conjugator_realizing(&image, &split)?;
    let word = rot.conjugate_by(&lift_permutation(&beta))?;
    if !GroupSpec::mixed(n - k, k).member(&word.permutation())? {
        return Err(Error::Infeasible(format!(
            "witness permutation {} escapes the block subgroup",
            word.permutation()
        )));
    }
    let period = match source {
        WitnessSource::DeltaPower => n as u64,
        WitnessSource::EpsilonPower => n as u64 - 1,
    };
    let d = gcd(exponent, period);
    Ok(TorsionWitness {
        word,
        strands: n,
        source,
        exponent,
        conjugator: beta,
        order: OrderDatum {
            m: period / d,
            l: 2 * exponent / d,
        },
    })
}

/// The first rotation power (δ family first, then ε) whose cycle type fits
/// `S_{n−k} × S_k`, found by enumerating powers and solving the subset-sum
/// split directly rather than through the gcd conditions.
pub fn brute_force_first_hit(n: usize, k: usize) -> Result<Option<(WitnessSource, u64)>> {
    check_range(n, k)?;
    for (source, top) in [
        (WitnessSource::DeltaPower, n),
        (WitnessSource::EpsilonPower, n - 1),
    ] {
        let base = rotation(n, source)?.permutation();
        for e in 1..top {
            if fit_into_young(&base.pow(e as i64).cycle_type(), n - k, k).is_some() {
                return Ok(Some((source, e as u64)));
            }
        }
    }
    Ok(None)
}

/// Torsion-freeness decided by enumeration: no proper power of `π(δ)` or
/// `π(ε)` is conjugate into `S_{n−k} × S_k`.
pub fn brute_force_torsion(n: usize, k: usize) -> Result<bool> {
    Ok(brute_force_first_hit(n, k)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_convention() {
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd_triple(8, 3), [1, 1, 1]);
        assert_eq!(gcd_triple(3, 1), [1, 1, 2]);
    }

    #[test]
    fn criterion() {
        assert!(!torsion_free(4, 2).unwrap());
        assert!(torsion_free(8, 3).unwrap());
        assert!(!torsion_free(5, 2).unwrap());
        assert!(torsion_free(2, 1).unwrap());
        assert!(torsion_free(4, 0).is_err());
        assert!(torsion_free(4, 4).is_err());
        assert!(torsion_free(1, 1).is_err());
    }

    #[test]
    fn witness_for_4_2() {
        let report = torsion_witness(4, 2).unwrap();
        let w = report.witness.unwrap();
        assert_eq!((w.source, w.exponent), (WitnessSource::DeltaPower, 2));
        assert_eq!(w.word.permutation().cycle_type().parts(), &[2, 2]);
        assert!(GroupSpec::mixed(2, 2).member(&w.word.permutation()).unwrap());
        assert_eq!(w.order, OrderDatum { m: 2, l: 2 });
    }

    #[test]
    fn witness_for_3_1_uses_epsilon() {
        let w = torsion_witness(3, 1).unwrap().witness.unwrap();
        assert_eq!((w.source, w.exponent), (WitnessSource::EpsilonPower, 1));
        assert_eq!(w.order, OrderDatum { m: 2, l: 2 });
        assert_eq!(w.word.permutation().apply(3), 3);
    }

    #[test]
    fn torsion_free_inputs_have_no_witness() {
        assert_eq!(
            torsion_witness(8, 3),
            Err(Error::TorsionFree { n_minus_k: 5, k: 3 })
        );
        assert!(torsion_report(8, 3).unwrap().witness.is_none());
    }

    #[test]
    fn brute_force_first_hits() {
        assert_eq!(
            brute_force_first_hit(4, 2).unwrap(),
            Some((WitnessSource::DeltaPower, 2))
        );
        assert_eq!(brute_force_torsion(7, 3).unwrap(), torsion_free(7, 3).unwrap());
        assert!(brute_force_torsion(8, 3).unwrap());
    }

    #[test]
    fn lifts_realise_permutations() {
        let p = Permutation::parse_cycles(6, "(1 5 2)(3 6)").unwrap();
        assert_eq!(lift_permutation(&p).permutation(), p);
    }
}
