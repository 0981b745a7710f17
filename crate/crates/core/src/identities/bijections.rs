//! Explicit bijections behind `a_m(n) = a_{m-1}(2n, n)` and
//! `2ā_2(n) = p̄(2n, n)`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::enumeration::{gen_overpartitions, gen_partitions, Overpartition, Partition, PartitionFilter};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{0}")]
    Domain(String),
}

fn domain<T>(msg: impl Into<String>) -> Result<T, BijectionError> {
    Err(BijectionError::Domain(msg.into()))
}

/// Removes one copy of the smallest part `k` and inserts `n + k`, where `n`
/// is the size of `lambda`. The smallest part must occur at least `m >= 2`
/// times.
pub fn prop3_forward(lambda: &Partition, m: u32) -> Result<Partition, BijectionError> {
    if m < 2 {
        return domain(format!("multiplicity bound must be at least 2, got {m}"));
    }
    let Some(k) = lambda.smallest() else {
        return domain("empty partition");
    };
    if lambda.smallest_multiplicity() < m as usize {
        return domain(format!("{lambda}: smallest part occurs fewer than {m} times"));
    }
    let n = lambda.size() as u32;
    let mut parts = lambda.parts().to_vec();
    parts.pop();
    parts.insert(0, n + k);
    Ok(Partition::new(parts).expect("parts stay positive"))
}

/// Inverse of [`prop3_forward`]: `mu` is a partition of `2n` with largest
/// minus smallest equal to `n` and smallest part repeated at least `m - 1`
/// times. Removes the largest part `n + k` and adds a part `k`.
pub fn prop3_inverse(mu: &Partition, m: u32) -> Result<Partition, BijectionError> {
    if m < 2 {
        return domain(format!("multiplicity bound must be at least 2, got {m}"));
    }
    let (Some(big), Some(k)) = (mu.largest(), mu.smallest()) else {
        return domain("empty partition");
    };
    let size = mu.size();
    if !size.is_multiple_of(2) || size == 0 || (big - k) as u64 != size / 2 {
        return domain(format!("{mu}: not a partition of 2n with difference n"));
    }
    if mu.smallest_multiplicity() < (m - 1) as usize {
        return domain(format!("{mu}: smallest part occurs fewer than {} times", m - 1));
    }
    let mut parts = mu.parts()[1..].to_vec();
    parts.push(k);
    Ok(Partition::new(parts).expect("parts stay positive"))
}

/// Adds `n` (the size of `lambda`) to the rightmost copy of the smallest
/// value, which is plain because `lambda` repeats its smallest value, and
/// returns the variants with that new largest part plain and overlined.
pub fn over1_pair(lambda: &Overpartition) -> Result<(Overpartition, Overpartition), BijectionError> {
    if lambda.smallest_multiplicity() < 2 {
        return domain(format!("{lambda}: smallest value occurs fewer than 2 times"));
    }
    let n = lambda.size() as u32;
    let mut rest: Vec<(u32, bool)> = lambda.parts().iter().map(|p| (p.value, p.overlined)).collect();
    let (k, _) = rest.pop().expect("nonempty");
    let build = |overlined: bool| {
        let mut parts = rest.clone();
        parts.push((n + k, overlined));
        Overpartition::new(parts).expect("the new largest value is unique")
    };
    Ok((build(false), build(true)))
}

/// Result of an exhaustive bijection check at one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageCheck {
    pub domain_size: usize,
    pub target_size: usize,
    /// Every image lies in the target set and the inverse recovers the input.
    pub round_trip: bool,
    /// Images are distinct and cover the target set.
    pub exact_cover: bool,
}

impl CoverageCheck {
    pub fn holds(&self) -> bool {
        self.round_trip && self.exact_cover
    }
}

/// Exhaustive check of [`prop3_forward`] / [`prop3_inverse`] on partitions of `n`.
pub fn check_prop3(m: u32, n: i64) -> CoverageCheck {
    let domain: Vec<Partition> = gen_partitions(n, PartitionFilter::none().smallest_mult(m)).collect();
    let target: BTreeSet<Partition> = if n < 1 {
        BTreeSet::new()
    } else {
        gen_partitions(2 * n, PartitionFilter::none().smallest_mult(m - 1).diff(n as u32)).collect()
    };
    let mut images = BTreeSet::new();
    let mut round_trip = true;
    for lambda in &domain {
        match prop3_forward(lambda, m) {
            Ok(mu) => {
                round_trip &= target.contains(&mu) && prop3_inverse(&mu, m).as_ref() == Ok(lambda);
                images.insert(mu);
            }
            Err(_) => round_trip = false,
        }
    }
    CoverageCheck {
        domain_size: domain.len(),
        target_size: target.len(),
        round_trip,
        exact_cover: images.len() == domain.len() && images == target,
    }
}

/// Exhaustive check of [`over1_pair`]: the pairs over all overpartitions of
/// `n` with repeated smallest value partition the overpartitions of `2n`
/// with difference `n`.
pub fn check_over1(n: i64) -> CoverageCheck {
    let domain: Vec<Overpartition> = gen_overpartitions(n, PartitionFilter::none().smallest_mult(2)).collect();
    let target: BTreeSet<Overpartition> = if n < 1 {
        BTreeSet::new()
    } else {
        gen_overpartitions(2 * n, PartitionFilter::none().diff(n as u32)).collect()
    };
    let mut images = BTreeSet::new();
    let mut hits = 0;
    let mut round_trip = true;
    for lambda in &domain {
        match over1_pair(lambda) {
            Ok((plain, bar)) => {
                round_trip &= plain != bar && target.contains(&plain) && target.contains(&bar);
                hits += 2;
                images.insert(plain);
                images.insert(bar);
            }
            Err(_) => round_trip = false,
        }
    }
    CoverageCheck {
        domain_size: domain.len(),
        target_size: target.len(),
        round_trip,
        exact_cover: hits == images.len() && images == target,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn over(p: &[(u32, bool)]) -> Overpartition {
        Overpartition::new(p.iter().copied()).unwrap()
    }

    #[test]
    fn prop3_examples() {
        assert_eq!(prop3_forward(&part(&[2, 2]), 2).unwrap(), part(&[6, 2]));
        assert_eq!(prop3_forward(&part(&[1, 1, 1, 1]), 2).unwrap(), part(&[5, 1, 1, 1]));
        assert_eq!(prop3_inverse(&part(&[6, 2]), 2).unwrap(), part(&[2, 2]));
    }

    #[test]
    fn prop3_domain_errors() {
        assert!(prop3_forward(&part(&[3, 1]), 2).is_err());
        assert!(prop3_forward(&Partition::empty(), 2).is_err());
        assert!(prop3_forward(&part(&[1, 1]), 1).is_err());
        assert!(prop3_inverse(&part(&[5, 1]), 2).is_err());
        assert!(prop3_inverse(&part(&[5, 1, 1, 1]), 5).is_err());
    }

    #[test]
    fn over1_examples() {
        let (a, b) = over1_pair(&over(&[(1, false), (1, false)])).unwrap();
        assert_eq!(
            (a, b),
            (over(&[(3, false), (1, false)]), over(&[(3, true), (1, false)]))
        );
        let (a, b) = over1_pair(&over(&[(1, true), (1, false)])).unwrap();
        assert_eq!((a, b), (over(&[(3, false), (1, true)]), over(&[(3, true), (1, true)])));
        assert!(over1_pair(&over(&[(2, false), (1, true)])).is_err());
    }

    #[test]
    fn small_coverage() {
        for n in 1..=10 {
            assert!(check_prop3(2, n).holds(), "n={n}");
            assert!(check_over1(n).holds(), "n={n}");
        }
    }
}
