//! Group elements as signed permutations of the positive roots, weak-order
//! enumeration, parabolic coset representatives, and the general distribution
//! engine that walks the whole group.
//!
//! An element stores, for every positive root b, the packed image w(b) =
//! `index | sign`. Composition with a generator is one table pass; sign
//! composition is an XOR on the sign bit. Length is the number of negative
//! signs, which equals the inversion-set size.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::distribution::Distribution;
use crate::root_system::{RootSystem, IDX, NEG};
use crate::stats::StatSpec;

/// A Weyl group element, represented by its signed action on positive roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    images: Box<[u8]>,
    length: u32,
}

impl Element {
    pub(crate) fn from_raw(images: Vec<u8>) -> Element {
        let length = images.iter().filter(|&&p| p & NEG != 0).count() as u32;
        Element {
            images: images.into_boxed_slice(),
            length,
        }
    }

    /// Coxeter length: the number of positive roots sent to negative ones.
    pub fn length(&self) -> u32 {
        self.length
    }

    /// Image of positive root `b` as (root index, is_negative).
    pub fn image(&self, b: usize) -> (usize, bool) {
        let p = self.images[b];
        ((p & IDX) as usize, p & NEG != 0)
    }

    pub(crate) fn images(&self) -> &[u8] {
        &self.images
    }
}

/// Left inversion set as a bitmask over positive-root indices. 128 bits cover
/// every type in scope (at most 120 positive roots).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InversionSet(u128);

impl InversionSet {
    pub fn empty() -> Self {
        InversionSet(0)
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0 >> index & 1 != 0
    }

    pub fn count(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn bits(&self) -> u128 {
        self.0
    }

    /// Complement within the first `num_roots` indices.
    pub fn complement(&self, num_roots: usize) -> InversionSet {
        let mask = if num_roots == 128 {
            u128::MAX
        } else {
            (1u128 << num_roots) - 1
        };
        InversionSet(!self.0 & mask)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (0..128).filter(move |&i| bits >> i & 1 != 0)
    }
}

/// Composes `w . s(b)` for one root slot: apply the packed generator action,
/// then look the result up through `w`, XORing the sign bits.
#[inline]
fn compose_slot(w_images: &[u8], action: &[u8], b: usize) -> u8 {
    let a = action[b];
    w_images[(a & IDX) as usize] ^ (a & NEG)
}

impl RootSystem {
    pub fn identity(&self) -> Element {
        Element {
            images: (0..self.num_positive_roots() as u8).collect(),
            length: 0,
        }
    }

    /// The generator `s` as an element.
    pub fn generator(&self, s: usize) -> Element {
        self.mul_right_gen(&self.identity(), s)
    }

    /// w * s, one pass over the root table; length changes by exactly one.
    pub fn mul_right_gen(&self, w: &Element, s: usize) -> Element {
        let action = self.action(s);
        let images: Vec<u8> = (0..self.num_positive_roots())
            .map(|b| compose_slot(&w.images, action, b))
            .collect();
        let length = if self.is_right_descent(w, s) {
            w.length - 1
        } else {
            w.length + 1
        };
        Element {
            images: images.into_boxed_slice(),
            length,
        }
    }

    /// s * w: apply w first, then the generator action on the result.
    pub fn mul_left_gen(&self, s: usize, w: &Element) -> Element {
        let action = self.action(s);
        let images: Vec<u8> = w
            .images
            .iter()
            .map(|&p| action[(p & IDX) as usize] ^ (p & NEG))
            .collect();
        Element::from_raw(images)
    }

    /// The product x * y (apply y, then x).
    pub fn compose(&self, x: &Element, y: &Element) -> Element {
        let images: Vec<u8> = y
            .images
            .iter()
            .map(|&p| x.images[(p & IDX) as usize] ^ (p & NEG))
            .collect();
        Element::from_raw(images)
    }

    pub fn inverse(&self, w: &Element) -> Element {
        let mut images = vec![0u8; self.num_positive_roots()];
        for (b, &p) in w.images.iter().enumerate() {
            images[(p & IDX) as usize] = b as u8 | (p & NEG);
        }
        Element {
            images: images.into_boxed_slice(),
            length: w.length,
        }
    }

    /// True iff l(ws) < l(w), i.e. w sends the simple root of `s` negative.
    pub fn is_right_descent(&self, w: &Element, s: usize) -> bool {
        w.images[self.simple_root_index(s)] & NEG != 0
    }

    /// Greedy ascent from the identity: right-multiply by any non-descent
    /// generator until every generator is a descent.
    pub fn longest_element(&self) -> Element {
        let mut w = self.identity();
        'ascent: loop {
            for s in 0..self.rank() {
                if !self.is_right_descent(&w, s) {
                    w = self.mul_right_gen(&w, s);
                    continue 'ascent;
                }
            }
            return w;
        }
    }

    /// The left inversion set of w: root b is included iff w^-1(b) is
    /// negative, read off by inverting the signed permutation.
    pub fn inversion_set(&self, w: &Element) -> InversionSet {
        let mut bits = 0u128;
        for &p in w.images.iter() {
            if p & NEG != 0 {
                bits |= 1u128 << (p & IDX);
            }
        }
        InversionSet(bits)
    }

    /// The minimal-length representative of the coset W_J w, for J given as a
    /// generator bitmask: strip left descents lying in J until none remains.
    pub fn min_coset_rep_left(&self, w: &Element, j_mask: u32) -> Element {
        // Work with the inverse so left descents become sign lookups.
        let mut y = self.inverse(w);
        'strip: loop {
            for s in 0..self.rank() {
                if j_mask >> s & 1 != 0 && self.is_right_descent(&y, s) {
                    y = self.mul_right_gen(&y, s);
                    continue 'strip;
                }
            }
            return self.inverse(&y);
        }
    }

    /// Whether the inversion set of w*w0 is the complement of the inversion
    /// set of w over all positive roots. Holds for every element; exposed as
    /// a test oracle.
    pub fn check_complement_law(&self, w: &Element) -> bool {
        let w0 = self.longest_element();
        let ww0 = self.compose(w, &w0);
        self.inversion_set(&ww0) == self.inversion_set(w).complement(self.num_positive_roots())
    }

    /// The root index added to the inversion set along the spanning-tree edge
    /// w -> ws, or None when ws is not a canonical child of w.
    ///
    /// Canonical child rule: l(ws) > l(w) and s is the minimum right descent
    /// of ws. Both conditions are sign lookups in w's table, so rejected
    /// candidates cost O(rank) and no composition.
    fn tree_child_root(&self, w_images: &[u8], s: usize) -> Option<usize> {
        let img = w_images[self.simple_root_index(s)];
        if img & NEG != 0 {
            return None; // descent: the edge would go down
        }
        for s2 in 0..s {
            // sign of (ws)(alpha_s2) = sign of w at s(alpha_s2), positive root
            let a = self.action(s)[self.simple_root_index(s2)];
            if w_images[(a & IDX) as usize] & NEG != 0 {
                return None; // s2 < s is already a descent of ws
            }
        }
        Some((img & IDX) as usize)
    }

    /// Visit every group element exactly once, depth-first along the
    /// canonical spanning tree of right weak order. Each non-root visit
    /// reports the positive root its edge adds to the inversion set.
    /// Returns the number of elements visited.
    pub fn enumerate(&self, mut visitor: impl FnMut(&Element, Option<usize>)) -> u64 {
        fn go(
            rs: &RootSystem,
            w: &Element,
            new_root: Option<usize>,
            count: &mut u64,
            visitor: &mut impl FnMut(&Element, Option<usize>),
        ) {
            *count = count
                .checked_add(1)
                .expect("visit counter overflow: group order exceeds u64");
            visitor(w, new_root);
            for s in 0..rs.rank() {
                if let Some(r) = rs.tree_child_root(&w.images, s) {
                    let child = rs.mul_right_gen(w, s);
                    go(rs, &child, Some(r), count, visitor);
                }
            }
        }
        let mut count = 0u64;
        let id = self.identity();
        go(self, &id, None, &mut count, &mut visitor);
        count
    }

    /// Distribution of the (k, h) statistic over the whole group.
    ///
    /// The spanning tree is split at a depth where at least 16 subtrees per
    /// worker exist; workers own disjoint subtrees and private histograms,
    /// and the merge is a pointwise sum, so the result does not depend on
    /// thread count or scheduling.
    pub fn distribution(&self, stat: StatSpec, threads: usize) -> Distribution {
        let threads = threads.max(1);
        let degree = self.height_class_count(stat);
        let in_class: Vec<bool> = (0..self.num_positive_roots())
            .map(|b| self.height(b) % stat.k() == stat.h())
            .collect();

        let mut hist = vec![0u64; degree + 1];
        // Grow the frontier level by level, histogramming interior elements,
        // until there is enough work to share out.
        let target = 16 * threads;
        let mut frontier: Vec<(Element, u32)> = vec![(self.identity(), 0)];
        while frontier.len() < target {
            let mut next = Vec::new();
            for (w, v) in &frontier {
                hist[*v as usize] += 1;
                for s in 0..self.rank() {
                    if let Some(r) = self.tree_child_root(w.images(), s) {
                        next.push((self.mul_right_gen(w, s), v + in_class[r] as u32));
                    }
                }
            }
            if next.is_empty() {
                // Whole group exhausted during expansion.
                return Distribution::new(self.spec(), stat, hist);
            }
            frontier = next;
        }

        let seed_index = AtomicUsize::new(0);
        let worker_count = threads.min(frontier.len());
        let partials: Vec<Vec<u64>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..worker_count)
                .map(|_| {
                    let frontier = &frontier;
                    let seed_index = &seed_index;
                    let in_class = &in_class;
                    scope.spawn(move || {
                        let mut walker = Walker::new(self, in_class, degree);
                        loop {
                            let i = seed_index.fetch_add(1, Ordering::Relaxed);
                            let Some((seed, value)) = frontier.get(i) else {
                                return walker.hist;
                            };
                            walker.run(seed, *value);
                        }
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });

        for partial in partials {
            for (slot, add) in hist.iter_mut().zip(partial) {
                *slot = slot
                    .checked_add(add)
                    .expect("histogram overflow while merging worker results");
            }
        }
        Distribution::new(self.spec(), stat, hist)
    }
}

/// Subtree walker with one preallocated image table per tree level, so the
/// hot loop never allocates.
struct Walker<'a> {
    rs: &'a RootSystem,
    in_class: &'a [bool],
    levels: Vec<Vec<u8>>,
    hist: Vec<u64>,
}

impl<'a> Walker<'a> {
    fn new(rs: &'a RootSystem, in_class: &'a [bool], degree: usize) -> Self {
        let num = rs.num_positive_roots();
        Walker {
            rs,
            in_class,
            levels: (0..=num + 1).map(|_| vec![0u8; num]).collect(),
            hist: vec![0u64; degree + 1],
        }
    }

    fn run(&mut self, seed: &Element, value: u32) {
        self.levels[0].copy_from_slice(seed.images());
        self.walk(0, value);
    }

    fn walk(&mut self, depth: usize, value: u32) {
        self.hist[value as usize] += 1;
        for s in 0..self.rs.rank() {
            let Some(r) = self.rs.tree_child_root(&self.levels[depth], s) else {
                continue;
            };
            let action = self.rs.action(s);
            let (current, rest) = self.levels.split_at_mut(depth + 1);
            let (parent, child) = (&current[depth], &mut rest[0]);
            for b in 0..parent.len() {
                child[b] = compose_slot(parent, action, b);
            }
            self.walk(depth + 1, value + self.in_class[r] as u32);
        }
    }
}
