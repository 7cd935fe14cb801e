//! The coefficient-vector result type and the polynomial predicates the
//! whole artifact is about: unimodality (with a dip witness) and
//! palindromicity, plus the frozen CSV interchange format.

use crate::error::Error;
use crate::root_system::GroupSpec;
use crate::stats::StatSpec;

/// Counts of group elements per statistic value 0..=degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    group: GroupSpec,
    stat: StatSpec,
    counts: Vec<u64>,
}

/// Verdict of the unimodality check. A dip is the smallest index whose value
/// is strictly below its predecessor and strictly below some later value;
/// such an index exists exactly when the sequence is not unimodal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Unimodality {
    Unimodal,
    Dip(usize),
}

impl Unimodality {
    pub fn is_unimodal(&self) -> bool {
        matches!(self, Unimodality::Unimodal)
    }

    pub fn dip(&self) -> Option<usize> {
        match self {
            Unimodality::Unimodal => None,
            Unimodality::Dip(d) => Some(*d),
        }
    }
}

impl std::fmt::Display for Unimodality {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Unimodality::Unimodal => write!(f, "unimodal"),
            Unimodality::Dip(d) => write!(f, "NOT unimodal (dip at {d})"),
        }
    }
}

impl Distribution {
    pub fn new(group: GroupSpec, stat: StatSpec, counts: Vec<u64>) -> Self {
        assert!(!counts.is_empty(), "a distribution has at least one count");
        Distribution { group, stat, counts }
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn stat(&self) -> StatSpec {
        self.stat
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Top degree of the generating polynomial.
    pub fn degree(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Weakly rises then weakly falls? Plateaus are allowed; on failure the
    /// witness is the first strict dip.
    pub fn unimodality(&self) -> Unimodality {
        unimodality_of(&self.counts)
    }

    pub fn is_palindromic(&self) -> bool {
        is_palindromic(&self.counts)
    }

    /// Pointwise checked sum of two partial histograms for the same group and
    /// statistic.
    pub fn merge(&self, other: &Distribution) -> Result<Distribution, Error> {
        if self.group != other.group || self.stat != other.stat {
            return Err(Error::MergeMismatch(format!(
                "{} ({}) vs {} ({})",
                self.group, self.stat, other.group, other.stat
            )));
        }
        if self.counts.len() != other.counts.len() {
            return Err(Error::MergeMismatch(format!(
                "length {} vs {}",
                self.counts.len(),
                other.counts.len()
            )));
        }
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow("merging histograms")))
            .collect::<Result<Vec<u64>, Error>>()?;
        Ok(Distribution::new(self.group, self.stat, counts))
    }

    /// Plot-ready text: header `l N`, one `degree count` line per row,
    /// ascending, space-separated, trailing newline. Byte-exact contract.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l N\n");
        for (d, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{d} {c}\n"));
        }
        out
    }
}

/// First strict dip of a count sequence, if any.
pub fn unimodality_of(counts: &[u64]) -> Unimodality {
    assert!(!counts.is_empty());
    // suffix_max[d] = max of counts[d..]
    let mut suffix_max = counts.to_vec();
    for d in (0..counts.len() - 1).rev() {
        suffix_max[d] = suffix_max[d].max(suffix_max[d + 1]);
    }
    for d in 1..counts.len() {
        if counts[d] < counts[d - 1] && d + 1 < counts.len() && suffix_max[d + 1] > counts[d] {
            return Unimodality::Dip(d);
        }
    }
    Unimodality::Unimodal
}

pub fn is_palindromic(counts: &[u64]) -> bool {
    let n = counts.len();
    (0..n / 2).all(|d| counts[d] == counts[n - 1 - d])
}

/// Parse the `to_csv` format back into a count vector.
pub fn parse_csv(text: &str) -> Result<Vec<u64>, Error> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, "l N")) => {}
        _ => {
            return Err(Error::CsvParse {
                line: 1,
                msg: "expected header `l N`".into(),
            })
        }
    }
    let mut counts = Vec::new();
    for (idx, line) in lines {
        let mut parts = line.split(' ');
        let (d, c) = (parts.next(), parts.next());
        if parts.next().is_some() {
            return Err(Error::CsvParse {
                line: idx + 1,
                msg: "expected two fields".into(),
            });
        }
        let parse = |s: Option<&str>, what: &str| -> Result<u64, Error> {
            s.and_then(|v| v.parse::<u64>().ok()).ok_or(Error::CsvParse {
                line: idx + 1,
                msg: format!("bad {what}"),
            })
        };
        let d = parse(d, "degree")?;
        let c = parse(c, "count")?;
        if d as usize != counts.len() {
            return Err(Error::CsvParse {
                line: idx + 1,
                msg: format!("expected degree {}, found {d}", counts.len()),
            });
        }
        counts.push(c);
    }
    if counts.is_empty() {
        return Err(Error::CsvParse {
            line: 1,
            msg: "no data rows".into(),
        });
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;
    use proptest::prelude::*;

    fn dist(counts: Vec<u64>) -> Distribution {
        Distribution::new(
            GroupSpec::new(Family::A, 3).unwrap(),
            StatSpec::new(2, 1).unwrap(),
            counts,
        )
    }

    /// Definitional checker: some split point N with a weak rise before and a
    /// weak fall after. Quadratic, for cross-checking only.
    fn unimodal_brute(counts: &[u64]) -> bool {
        (0..counts.len()).any(|peak| {
            counts[..=peak].windows(2).all(|w| w[0] <= w[1])
                && counts[peak..].windows(2).all(|w| w[0] >= w[1])
        })
    }

    fn palindromic_brute(counts: &[u64]) -> bool {
        let rev: Vec<u64> = counts.iter().rev().copied().collect();
        rev == counts
    }

    #[test]
    fn dip_witnesses() {
        assert_eq!(unimodality_of(&[1, 8, 6, 8, 1]), Unimodality::Dip(2));
        assert_eq!(unimodality_of(&[1, 12, 23, 48, 23, 12, 1]), Unimodality::Unimodal);
        assert_eq!(unimodality_of(&[1, 1]), Unimodality::Unimodal);
        assert_eq!(unimodality_of(&[5]), Unimodality::Unimodal);
        // plateaus at the top are unimodal
        assert_eq!(unimodality_of(&[1, 2, 2, 1]), Unimodality::Unimodal);
        // strictly falling tails after a dip
        assert_eq!(unimodality_of(&[3, 1, 2, 1]), Unimodality::Dip(1));
        // a later plateau does not mask an earlier dip
        assert_eq!(unimodality_of(&[1, 5, 4, 4, 5, 1]), Unimodality::Dip(2));
    }

    #[test]
    fn palindromic_cases() {
        assert!(is_palindromic(&[1, 4, 1]));
        assert!(!is_palindromic(&[1, 2]));
        assert!(is_palindromic(&[1, 11, 25, 52, 70, 66, 70, 52, 25, 11, 1]));
    }

    #[test]
    fn merge_cases() {
        let a = dist(vec![1, 2, 3]);
        let zero = dist(vec![0, 0, 0]);
        assert_eq!(a.merge(&zero).unwrap(), a);
        let b = dist(vec![3, 1, 0]);
        assert_eq!(a.merge(&b).unwrap(), b.merge(&a).unwrap());
        assert!(a.merge(&dist(vec![1, 2])).is_err());
        let other_stat = Distribution::new(
            GroupSpec::new(Family::A, 3).unwrap(),
            StatSpec::new(3, 1).unwrap(),
            vec![1, 2, 3],
        );
        assert!(a.merge(&other_stat).is_err());
        let top = dist(vec![u64::MAX, 0, 0]);
        assert!(matches!(top.merge(&dist(vec![1, 0, 0])), Err(Error::Overflow(_))));
    }

    #[test]
    fn merge_of_split_s3_histograms() {
        // brute-force split of S_3 by the first-position comparison; the two
        // partial histograms of odd-gap inversions must merge to [1, 4, 1]
        use crate::stats::{for_each_permutation, inv_kh, StatSpec};
        let spec = GroupSpec::new(Family::A, 2).unwrap();
        let stat = StatSpec::new(2, 1).unwrap();
        let mut first = vec![0u64; 3];
        let mut second = vec![0u64; 3];
        for_each_permutation(3, |p| {
            let v = inv_kh(p, stat) as usize;
            if p.image(1) > p.image(2) {
                first[v] += 1;
            } else {
                second[v] += 1;
            }
        });
        let merged = Distribution::new(spec, stat, first)
            .merge(&Distribution::new(spec, stat, second))
            .unwrap();
        assert_eq!(merged.counts(), &[1, 4, 1]);
    }

    #[test]
    fn csv_format_is_exact() {
        assert_eq!(dist(vec![1, 1]).to_csv(), "l N\n0 1\n1 1\n");
        assert_eq!(dist(vec![1, 4, 1]).to_csv(), "l N\n0 1\n1 4\n2 1\n");
    }

    #[test]
    fn csv_rejects_bad_input() {
        assert!(parse_csv("").is_err());
        assert!(parse_csv("l N\n").is_err());
        assert!(parse_csv("N l\n0 1\n").is_err());
        assert!(parse_csv("l N\n1 1\n").is_err());
        assert!(parse_csv("l N\n0 1 2\n").is_err());
        assert!(parse_csv("l N\n0 x\n").is_err());
    }

    proptest! {
        #[test]
        fn unimodality_matches_brute_force(counts in proptest::collection::vec(0u64..6, 1..12)) {
            let verdict = unimodality_of(&counts);
            prop_assert_eq!(verdict.is_unimodal(), unimodal_brute(&counts));
            if let Unimodality::Dip(d) = verdict {
                prop_assert!(d > 0 && d < counts.len());
                prop_assert!(counts[d] < counts[d - 1]);
                prop_assert!(counts[d + 1..].iter().any(|&c| c > counts[d]));
                // d is the smallest dip
                for e in 1..d {
                    let dips = counts[e] < counts[e - 1]
                        && counts[e + 1..].iter().any(|&c| c > counts[e]);
                    prop_assert!(!dips);
                }
            }
        }

        #[test]
        fn palindromic_matches_brute_force(counts in proptest::collection::vec(0u64..6, 1..12)) {
            prop_assert_eq!(is_palindromic(&counts), palindromic_brute(&counts));
        }

        #[test]
        fn csv_roundtrip(counts in proptest::collection::vec(0u64..u64::MAX, 1..40)) {
            let d = dist(counts.clone());
            prop_assert_eq!(parse_csv(&d.to_csv()).unwrap(), counts);
        }
    }
}
