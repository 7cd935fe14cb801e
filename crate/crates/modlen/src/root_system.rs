//! Root systems of the finite Weyl types A-G: positive roots in simple-root
//! coordinates, heights, and the simple-reflection action used everywhere else.
//!
//! The positive roots are generated by saturation: starting from the simple
//! roots, apply the Cartan-matrix reflections `s_i(b) = b - <b, a_i^v> a_i`
//! until no new root appears. A simple reflection permutes the positive roots
//! other than its own simple root, which it negates, so the whole action is
//! stored as a signed permutation table.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::stats::StatSpec;

/// One of the finite Weyl families. B and C share a Weyl group but carry
/// different root systems, so they are distinct specs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "E" | "e" => Ok(Family::E),
            "F" | "f" => Ok(Family::F),
            "G" | "g" => Ok(Family::G),
            other => Err(format!("unknown family `{other}` (expected one of A B C D E F G)")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated (family, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    family: Family,
    rank: usize,
}

impl GroupSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self, Error> {
        let constraint: &'static str = match family {
            Family::A if rank >= 1 => "",
            Family::A => "family A requires rank >= 1",
            Family::B | Family::C if rank >= 2 => "",
            Family::B | Family::C => "families B and C require rank >= 2",
            Family::D if rank >= 4 => "",
            Family::D => "family D requires rank >= 4",
            Family::E if (6..=8).contains(&rank) => "",
            Family::E => "family E requires rank in {6, 7, 8}",
            Family::F if rank == 4 => "",
            Family::F => "family F requires rank 4",
            Family::G if rank == 2 => "",
            Family::G => "family G requires rank 2",
        };
        if constraint.is_empty() {
            Ok(GroupSpec { family, rank })
        } else {
            Err(Error::InvalidSpec {
                family: family.letter(),
                rank,
                constraint,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Fundamental degrees of the reflection representation. Their product is
    /// the group order; this is independent of the enumeration engine and is
    /// used to cross-check it.
    pub fn degrees(&self) -> Vec<u64> {
        let n = self.rank as u64;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut d: Vec<u64> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d
            }
            Family::G => vec![2, 6],
            Family::F => vec![2, 6, 8, 12],
            Family::E => match self.rank {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
        }
    }

    /// |W| as the product of the fundamental degrees; `None` on u128 overflow
    /// (absurdly large ranks), which budget checks treat as "too big".
    pub fn order(&self) -> Option<u128> {
        self.degrees()
            .iter()
            .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A positive root: coordinates in the simple-root basis plus its height
/// (the coordinate sum). All coefficients fit in i8 across the finite types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    coeffs: Vec<i8>,
    height: u32,
}

impl Root {
    pub fn coeffs(&self) -> &[i8] {
        &self.coeffs
    }

    pub fn height(&self) -> u32 {
        self.height
    }
}

/// Sign bit of a packed root image: `index | NEG` encodes minus the root at
/// `index`. Positive-root indices stay below 128 for every type in scope, so
/// the low 7 bits suffice for the index.
pub(crate) const NEG: u8 = 0x80;
pub(crate) const IDX: u8 = 0x7f;

/// Maximum number of positive roots representable by the packed-u8 images
/// (and by the 128-bit inversion sets).
pub const MAX_POSITIVE_ROOTS: usize = 120;

/// The static geometry of a Weyl type: indexed positive roots, heights, and
/// the signed-permutation action of each simple reflection. Immutable after
/// construction and freely shareable across threads.
pub struct RootSystem {
    spec: GroupSpec,
    roots: Vec<Root>,
    cartan: Vec<Vec<i32>>,
    /// `simple_action[s][b]` packs the image s(root b) as `index | sign`.
    simple_action: Vec<Vec<u8>>,
    /// Root index of each simple root.
    simple_index: Vec<usize>,
    index_by_coeffs: BTreeMap<Vec<i8>, usize>,
}

impl RootSystem {
    pub fn new(spec: GroupSpec) -> Result<Self, Error> {
        let rank = spec.rank();
        let cartan = cartan_matrix(spec);

        // Saturate from the simple roots. A simple reflection keeps every
        // positive root positive except its own simple root, so skipping the
        // (s, alpha_s) pair keeps the whole orbit inside the positive cone.
        let mut roots: Vec<Vec<i8>> = Vec::new();
        let mut seen: BTreeMap<Vec<i8>, ()> = BTreeMap::new();
        for s in 0..rank {
            let mut a = vec![0i8; rank];
            a[s] = 1;
            seen.insert(a.clone(), ());
            roots.push(a);
        }
        let mut head = 0;
        while head < roots.len() {
            let current = roots[head].clone();
            head += 1;
            for s in 0..rank {
                if let Some(image) = reflect(&cartan, &current, s) {
                    if seen.insert(image.clone(), ()).is_none() {
                        roots.push(image);
                        if roots.len() > MAX_POSITIVE_ROOTS {
                            return Err(Error::TooLarge {
                                what: "root system",
                                detail: format!(
                                    "{spec} has more than {MAX_POSITIVE_ROOTS} positive roots"
                                ),
                            });
                        }
                    }
                }
            }
        }

        // Fixed indexing: by height, then lexicographically by coordinates.
        let mut roots: Vec<Root> = roots
            .into_iter()
            .map(|coeffs| {
                let height = coeffs.iter().map(|&c| c as i64).sum::<i64>() as u32;
                Root { coeffs, height }
            })
            .collect();
        roots.sort_by(|a, b| (a.height, &a.coeffs).cmp(&(b.height, &b.coeffs)));

        let index_by_coeffs: BTreeMap<Vec<i8>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();

        let mut simple_index = vec![0usize; rank];
        for s in 0..rank {
            let mut a = vec![0i8; rank];
            a[s] = 1;
            simple_index[s] = index_by_coeffs[&a];
        }

        let mut simple_action = vec![vec![0u8; roots.len()]; rank];
        for s in 0..rank {
            for (b, root) in roots.iter().enumerate() {
                simple_action[s][b] = if b == simple_index[s] {
                    b as u8 | NEG
                } else {
                    let image = reflect(&cartan, &root.coeffs, s)
                        .expect("simple reflection must keep other positive roots positive");
                    index_by_coeffs[&image] as u8
                };
            }
        }

        Ok(RootSystem {
            spec,
            roots,
            cartan,
            simple_action,
            simple_index,
            index_by_coeffs,
        })
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index]
    }

    pub fn height(&self, index: usize) -> u32 {
        self.roots[index].height
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Index of the simple root of generator `s`.
    pub fn simple_root_index(&self, s: usize) -> usize {
        self.simple_index[s]
    }

    pub fn root_index(&self, coeffs: &[i8]) -> Option<usize> {
        self.index_by_coeffs.get(coeffs).copied()
    }

    pub(crate) fn action(&self, s: usize) -> &[u8] {
        &self.simple_action[s]
    }

    /// Number of positive roots whose height is congruent to `h` mod `k`;
    /// this is the top degree of the associated distribution, attained
    /// exactly at the longest element.
    pub fn height_class_count(&self, stat: StatSpec) -> usize {
        self.roots
            .iter()
            .filter(|r| r.height % stat.k() == stat.h())
            .count()
    }

    /// Multiset of root heights as (height, multiplicity), ascending.
    pub fn height_histogram(&self) -> Vec<(u32, usize)> {
        let mut hist: BTreeMap<u32, usize> = BTreeMap::new();
        for r in &self.roots {
            *hist.entry(r.height).or_insert(0) += 1;
        }
        hist.into_iter().collect()
    }

    pub fn highest_root_height(&self) -> u32 {
        self.roots.last().map(|r| r.height).unwrap_or(0)
    }
}

/// Apply the simple reflection `s` in simple-root coordinates. Returns `None`
/// when the image is a negative root (which happens only for the simple root
/// of `s` itself).
fn reflect(cartan: &[Vec<i32>], coeffs: &[i8], s: usize) -> Option<Vec<i8>> {
    let pairing: i32 = cartan[s]
        .iter()
        .zip(coeffs)
        .map(|(&c, &a)| c * a as i32)
        .sum();
    let mut image = coeffs.to_vec();
    let new = image[s] as i32 - pairing;
    debug_assert!((-128..128).contains(&new));
    image[s] = new as i8;
    if image.iter().all(|&c| c >= 0) {
        Some(image)
    } else {
        None
    }
}

/// Cartan matrix in the convention `c[i][j] = 2(a_i, a_j)/(a_i, a_i)`, so the
/// reflection rule reads `s_i(b) = b - (sum_j c[i][j] b_j) a_i`. Bourbaki
/// numbering throughout; heights do not depend on the node order.
fn cartan_matrix(spec: GroupSpec) -> Vec<Vec<i32>> {
    let n = spec.rank();
    let mut c = vec![vec![0i32; n]; n];
    for i in 0..n {
        c[i][i] = 2;
    }
    let mut bond = |i: usize, j: usize, cij: i32, cji: i32| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match spec.family() {
        Family::A => {
            for i in 0..n - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        Family::B => {
            // alpha_n short: the double bond points from node n-1 to node n
            for i in 0..n - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            // dual of B: alpha_n long
            for i in 0..n - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            for i in 0..n - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(n - 3, n - 1, -1, -1);
        }
        Family::E => {
            // chain 1-3-4-5-6(-7(-8)) with node 2 attached to node 4
            let chain = [0usize, 2, 3, 4, 5, 6, 7];
            for w in chain[..n - 1].windows(2) {
                bond(w[0], w[1], -1, -1);
            }
            bond(1, 3, -1, -1);
        }
        Family::F => {
            bond(0, 1, -1, -1);
            bond(1, 2, -1, -2);
            bond(2, 3, -1, -1);
        }
        Family::G => {
            // alpha_1 short
            bond(0, 1, -3, -1);
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(family: Family, rank: usize) -> RootSystem {
        RootSystem::new(GroupSpec::new(family, rank).unwrap()).unwrap()
    }

    fn heights(r: &RootSystem) -> Vec<u32> {
        let mut h: Vec<u32> = r.roots().iter().map(|x| x.height()).collect();
        h.sort_unstable();
        h
    }

    #[test]
    fn rank_constraints() {
        assert!(GroupSpec::new(Family::A, 0).is_err());
        assert!(GroupSpec::new(Family::B, 1).is_err());
        assert!(GroupSpec::new(Family::C, 1).is_err());
        assert!(GroupSpec::new(Family::D, 3).is_err());
        assert!(GroupSpec::new(Family::E, 5).is_err());
        assert!(GroupSpec::new(Family::E, 9).is_err());
        assert!(GroupSpec::new(Family::F, 3).is_err());
        assert!(GroupSpec::new(Family::G, 3).is_err());
        assert!(GroupSpec::new(Family::A, 1).is_ok());
        assert!(GroupSpec::new(Family::D, 4).is_ok());
        let err = GroupSpec::new(Family::D, 2).unwrap_err();
        assert!(err.to_string().contains("rank >= 4"));
        assert!(Family::from_str("Z").is_err());
    }

    #[test]
    fn positive_root_counts_match_classical_values() {
        let cases = [
            (Family::A, 1, 1),
            (Family::A, 4, 10),
            (Family::A, 7, 28),
            (Family::B, 2, 4),
            (Family::B, 5, 25),
            (Family::C, 5, 25),
            (Family::D, 4, 12),
            (Family::D, 6, 30),
            (Family::G, 2, 6),
            (Family::F, 4, 24),
            (Family::E, 6, 36),
            (Family::E, 7, 63),
            (Family::E, 8, 120),
        ];
        for (f, n, count) in cases {
            assert_eq!(rs(f, n).num_positive_roots(), count, "{f}{n}");
        }
    }

    #[test]
    fn a2_heights() {
        assert_eq!(heights(&rs(Family::A, 2)), vec![1, 1, 2]);
    }

    #[test]
    fn a4_heights_are_gap_lengths() {
        // heights of e_i - e_j are j - i: multiset {1x4, 2x3, 3x2, 4x1}
        assert_eq!(heights(&rs(Family::A, 4)), vec![1, 1, 1, 1, 2, 2, 2, 3, 3, 4]);
    }

    // Saturated by hand from the G2 Cartan matrix [[2,-3],[-1,2]]:
    // (1,0) (0,1) (1,1) (2,1) (3,1) (3,2).
    #[test]
    fn g2_heights() {
        assert_eq!(heights(&rs(Family::G, 2)), vec![1, 1, 2, 3, 4, 5]);
    }

    // By hand from [[2,-1],[-2,2]]: (1,0) (0,1) (1,1) (1,2).
    #[test]
    fn b2_heights() {
        assert_eq!(heights(&rs(Family::B, 2)), vec![1, 1, 2, 3]);
    }

    #[test]
    fn heights_sum_rule() {
        for (f, n) in [
            (Family::A, 5),
            (Family::B, 4),
            (Family::C, 4),
            (Family::D, 5),
            (Family::F, 4),
            (Family::E, 6),
        ] {
            let r = rs(f, n);
            for k in 1..=7u32 {
                let sum: usize = (0..k)
                    .map(|h| r.height_class_count(StatSpec::new(k, h as i64).unwrap()))
                    .sum();
                assert_eq!(sum, r.num_positive_roots(), "{f}{n} k={k}");
            }
        }
    }

    #[test]
    fn highest_root_is_unique() {
        for (f, n) in [
            (Family::A, 6),
            (Family::B, 5),
            (Family::C, 5),
            (Family::D, 5),
            (Family::G, 2),
            (Family::F, 4),
            (Family::E, 7),
        ] {
            let r = rs(f, n);
            let top = r.highest_root_height();
            let count = r.roots().iter().filter(|x| x.height() == top).count();
            assert_eq!(count, 1, "{f}{n}");
        }
    }

    #[test]
    fn odd_height_count_in_type_a() {
        // floor((n+1)/2) * ceil((n+1)/2)
        for n in 1..=8usize {
            let r = rs(Family::A, n);
            let expected = ((n + 1) / 2) * ((n + 2) / 2);
            assert_eq!(
                r.height_class_count(StatSpec::new(2, 1).unwrap()),
                expected,
                "A{n}"
            );
        }
    }

    #[test]
    fn odd_height_count_b2() {
        assert_eq!(rs(Family::B, 2).height_class_count(StatSpec::new(2, 1).unwrap()), 3);
    }

    #[test]
    fn full_class_count_a3() {
        assert_eq!(rs(Family::A, 3).height_class_count(StatSpec::new(1, 0).unwrap()), 6);
    }

    #[test]
    fn simple_action_signs() {
        for (f, n) in [(Family::A, 3), (Family::B, 3), (Family::G, 2), (Family::F, 4)] {
            let r = rs(f, n);
            for s in 0..r.rank() {
                for b in 0..r.num_positive_roots() {
                    let packed = r.action(s)[b];
                    if b == r.simple_root_index(s) {
                        assert_eq!(packed, b as u8 | NEG);
                    } else {
                        assert_eq!(packed & NEG, 0, "{f}{n} s={s} b={b}");
                    }
                }
            }
            // each action is an involution on root indices
            for s in 0..r.rank() {
                for b in 0..r.num_positive_roots() {
                    let c = (r.action(s)[b] & IDX) as usize;
                    assert_eq!((r.action(s)[c] & IDX) as usize, b);
                }
            }
        }
    }

    #[test]
    fn group_orders_from_degrees() {
        assert_eq!(GroupSpec::new(Family::A, 3).unwrap().order(), Some(24));
        assert_eq!(GroupSpec::new(Family::B, 3).unwrap().order(), Some(48));
        assert_eq!(GroupSpec::new(Family::D, 4).unwrap().order(), Some(192));
        assert_eq!(GroupSpec::new(Family::G, 2).unwrap().order(), Some(12));
        assert_eq!(GroupSpec::new(Family::F, 4).unwrap().order(), Some(1152));
        assert_eq!(GroupSpec::new(Family::E, 6).unwrap().order(), Some(51840));
        assert_eq!(GroupSpec::new(Family::E, 7).unwrap().order(), Some(2903040));
        assert_eq!(GroupSpec::new(Family::E, 8).unwrap().order(), Some(696729600));
    }

    #[test]
    fn oversized_system_rejected() {
        let spec = GroupSpec::new(Family::A, 16).unwrap();
        assert!(matches!(RootSystem::new(spec), Err(Error::TooLarge { .. })));
        assert!(RootSystem::new(GroupSpec::new(Family::A, 15).unwrap()).is_ok());
    }
}
