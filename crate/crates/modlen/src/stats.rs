//! The statistics themselves: modular inversion counts on permutations,
//! their root-system counterpart on Weyl elements, descent counts, and the
//! alternating parabolic sum that defines the odd length in type A.

use crate::error::Error;
use crate::root_system::{Family, GroupSpec, RootSystem};
use crate::weyl::Element;

/// The pair (k, h) selecting a modular-height statistic. `h` is normalized
/// into `0..k` at construction, so there is one canonical representation per
/// statistic. `k = 1` is allowed; the (1, 0) statistic is plain length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StatSpec {
    k: u32,
    h: u32,
}

impl StatSpec {
    pub fn new(k: u32, h: i64) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidStat);
        }
        Ok(StatSpec {
            k,
            h: h.rem_euclid(k as i64) as u32,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn h(&self) -> u32 {
        self.h
    }
}

impl std::fmt::Display for StatSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "k={},h={}", self.k, self.h)
    }
}

/// A permutation of 1..=m in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self, Error> {
        let m = values.len();
        let mut seen = vec![false; m];
        for &v in &values {
            if v == 0 || v as usize > m || seen[v as usize - 1] {
                return Err(Error::TooLarge {
                    what: "permutation",
                    detail: format!("{values:?} is not a permutation of 1..={m}"),
                });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(m: usize) -> Self {
        Permutation {
            values: (1..=m as u32).collect(),
        }
    }

    pub fn reversal(m: usize) -> Self {
        Permutation {
            values: (1..=m as u32).rev().collect(),
        }
    }

    /// Number of letters acted on (n + 1 for the type A_n group).
    pub fn size(&self) -> usize {
        self.values.len()
    }

    /// Image of i (1-based).
    pub fn image(&self, i: usize) -> u32 {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { values: inv }
    }
}

/// Visit every permutation of 1..=m in lexicographic order.
pub fn for_each_permutation(m: usize, mut f: impl FnMut(&Permutation)) {
    let mut values: Vec<u32> = (1..=m as u32).collect();
    loop {
        f(&Permutation {
            values: values.clone(),
        });
        // next_permutation
        let Some(i) = (0..values.len().saturating_sub(1))
            .rev()
            .find(|&i| values[i] < values[i + 1])
        else {
            return;
        };
        let j = (i + 1..values.len())
            .rev()
            .find(|&j| values[j] > values[i])
            .unwrap();
        values.swap(i, j);
        values[i + 1..].reverse();
    }
}

/// Reference count of inversions (i, j) with i < j, w(i) > w(j) and
/// j - i congruent to h mod k. Plain O(m^2) double loop.
pub fn inv_kh(p: &Permutation, stat: StatSpec) -> u64 {
    let m = p.size();
    let k = stat.k() as usize;
    let h = stat.h() as usize;
    let mut count = 0u64;
    for i in 1..=m {
        for j in i + 1..=m {
            if p.image(i) > p.image(j) && (j - i) % k == h {
                count += 1;
            }
        }
    }
    count
}

/// |{i : w(i) > w(i+1)}|.
pub fn descent_count(p: &Permutation) -> u64 {
    p.values().windows(2).filter(|w| w[0] > w[1]).count() as u64
}

/// Count of inversion roots of `w` whose height is congruent to h mod k.
pub fn l_kh(rs: &RootSystem, w: &Element, stat: StatSpec) -> u64 {
    let inv = rs.inversion_set(w);
    (0..rs.num_positive_roots())
        .filter(|&b| inv.contains(b) && rs.height(b) % stat.k() == stat.h())
        .count() as u64
}

/// The Weyl element of type A_(m-1) acting as `p` on the roots e_i - e_j.
///
/// `rs` must be a type A system with rank + 1 == p.size(). The action is
/// w(e_i - e_j) = e_w(i) - e_w(j), negated and re-sorted when w(i) > w(j).
pub fn element_from_permutation(rs: &RootSystem, p: &Permutation) -> Element {
    assert_eq!(rs.spec().family(), Family::A, "type A root system required");
    let n = rs.rank();
    assert_eq!(p.size(), n + 1, "permutation size must be rank + 1");

    let index_of = |i: usize, j: usize| -> usize {
        // e_i - e_j (i < j) has simple-root coordinates 1 at i..j-1
        let mut coeffs = vec![0i8; n];
        for c in &mut coeffs[i - 1..j - 1] {
            *c = 1;
        }
        rs.root_index(&coeffs).expect("type A root lookup")
    };

    let mut images = vec![0u8; rs.num_positive_roots()];
    for i in 1..=n {
        for j in i + 1..=n + 1 {
            let (a, b) = (p.image(i), p.image(j));
            let packed = if a < b {
                index_of(a as usize, b as usize) as u8
            } else {
                index_of(b as usize, a as usize) as u8 | crate::root_system::NEG
            };
            images[index_of(i, j)] = packed;
        }
    }
    Element::from_raw(images)
}

/// Odd length evaluated from its defining alternating sum over proper
/// parabolic quotients: sum over J of (-1)^|J| 2^(|S|-|J|-1) len(J-minimal
/// coset representative). Exponential in the rank; oracle use only.
///
/// The quotients are taken on the side that matches the identification of
/// pair inversions with right inversion roots: stripping the inverse element
/// through `min_coset_rep_left` (i.e. right quotients of w). With left
/// quotients of w itself the sum evaluates the statistic of w's inverse,
/// which has the same distribution but differs elementwise.
pub fn odd_length_parabolic_sum(p: &Permutation) -> Result<u64, Error> {
    let m = p.size();
    if m > 12 {
        return Err(Error::TooLarge {
            what: "parabolic sum",
            detail: format!("needs 2^{} subset terms; limit is size 12", m - 1),
        });
    }
    let n = m - 1;
    let rs = RootSystem::new(GroupSpec::new(Family::A, n)?)?;
    let w = rs.inverse(&element_from_permutation(&rs, p));

    let mut total: i64 = 0;
    // The J = S term carries a fractional weight but a zero coset length, so
    // proper subsets are enough to stay in integers.
    for j_mask in 0..(1u32 << n) - 1 {
        let bits = j_mask.count_ones();
        let rep = rs.min_coset_rep_left(&w, j_mask);
        let term = (1i64 << (n as u32 - bits - 1)) * rep.length() as i64;
        total += if bits % 2 == 0 { term } else { -term };
    }
    debug_assert!(total >= 0, "alternating sum must be nonnegative");
    Ok(total as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stat(k: u32, h: i64) -> StatSpec {
        StatSpec::new(k, h).unwrap()
    }

    #[test]
    fn stat_spec_normalizes_h() {
        assert_eq!(stat(3, 7).h(), 1);
        assert_eq!(stat(3, -1).h(), 2);
        assert_eq!(stat(1, 1).h(), 0);
        assert!(StatSpec::new(0, 0).is_err());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![2, 1, 3]).is_ok());
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
    }

    #[test]
    fn inv_kh_identity_is_zero() {
        for k in 1..5 {
            for h in 0..k {
                assert_eq!(inv_kh(&Permutation::identity(6), stat(k, h as i64)), 0);
            }
        }
    }

    #[test]
    fn inv_kh_reversal_s5() {
        // reversal of S_5: 6 odd-gap inversions = floor(5/2) * ceil(5/2)
        assert_eq!(inv_kh(&Permutation::reversal(5), stat(2, 1)), 6);
    }

    #[test]
    fn inv_kh_simple_transposition() {
        let s1 = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(inv_kh(&s1, stat(2, 1)), 1);
    }

    #[test]
    fn descent_counts() {
        assert_eq!(descent_count(&Permutation::identity(5)), 0);
        assert_eq!(descent_count(&Permutation::reversal(4)), 3);
    }

    #[test]
    fn eulerian_distribution_s4() {
        // descent generating counts over S_4: 1, 11, 11, 1
        let mut hist = [0u64; 4];
        for_each_permutation(4, |p| hist[descent_count(p) as usize] += 1);
        assert_eq!(hist, [1, 11, 11, 1]);
    }

    #[test]
    fn for_each_permutation_counts() {
        let mut count = 0u64;
        for_each_permutation(5, |_| count += 1);
        assert_eq!(count, 120);
    }

    #[test]
    fn parabolic_sum_identity_and_longest() {
        assert_eq!(odd_length_parabolic_sum(&Permutation::identity(4)).unwrap(), 0);
        assert_eq!(odd_length_parabolic_sum(&Permutation::reversal(5)).unwrap(), 6);
        assert!(odd_length_parabolic_sum(&Permutation::identity(13)).is_err());
    }

    #[test]
    fn parabolic_sum_matches_odd_gap_inversions_s4() {
        for_each_permutation(4, |p| {
            assert_eq!(
                odd_length_parabolic_sum(p).unwrap(),
                inv_kh(p, stat(2, 1)),
                "{:?}",
                p.values()
            );
        });
    }

    #[test]
    fn l_kh_on_small_elements() {
        let rs = RootSystem::new(GroupSpec::new(Family::A, 3).unwrap()).unwrap();
        let id = rs.identity();
        for k in 1..5 {
            for h in 0..k {
                assert_eq!(l_kh(&rs, &id, stat(k, h as i64)), 0);
            }
        }
        // every simple generator has a single height-1 inversion root
        for s in 0..rs.rank() {
            let g = rs.mul_right_gen(&id, s);
            for k in 2..6 {
                assert_eq!(l_kh(&rs, &g, stat(k, 1)), 1);
            }
            assert_eq!(l_kh(&rs, &g, stat(1, 0)), 1);
        }
        // the longest element picks up the whole height class
        let w0 = rs.longest_element();
        for k in 1..5u32 {
            for h in 0..k {
                let sp = stat(k, h as i64);
                assert_eq!(l_kh(&rs, &w0, sp), rs.height_class_count(sp) as u64);
            }
        }
    }

    #[test]
    fn element_from_permutation_roundtrip_properties() {
        let rs = RootSystem::new(GroupSpec::new(Family::A, 3).unwrap()).unwrap();
        for_each_permutation(4, |p| {
            let w = element_from_permutation(&rs, p);
            let expected = inv_kh(p, stat(1, 0));
            assert_eq!(w.length() as u64, expected, "{:?}", p.values());
        });
    }

    #[test]
    fn type_a_bridge_inverse_identification() {
        // L_{k,h} of the matrix realization equals inv_{k,h} of the inverse
        // permutation: left versus right inversion sets.
        for n in 2..=4usize {
            let rs = RootSystem::new(GroupSpec::new(Family::A, n).unwrap()).unwrap();
            for_each_permutation(n + 1, |p| {
                let w = element_from_permutation(&rs, p);
                let pinv = p.inverse();
                for k in 1..=4u32 {
                    for h in 0..k {
                        let sp = stat(k, h as i64);
                        assert_eq!(l_kh(&rs, &w, sp), inv_kh(&pinv, sp));
                    }
                }
            });
        }
    }
}
