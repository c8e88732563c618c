//! Weyl group elements and whole-group enumeration.
//!
//! A [`WeylElement`] stores its action on the positive roots as a signed
//! permutation table: entry `j` is `±(k+1)` meaning `u(α_j) = ±root_k`.
//! That table determines the element, composes in O(|Π₊|), and is exactly
//! what the ν-sequence machinery consumes.
//!
//! For sweeping entire groups the table is too fat to allocate per element,
//! so each type gets a [`CompactElement`] code: a permutation of
//! `{0..r}` for type A, a signed permutation for B/C/D, and the canonical
//! action table itself for E/F/G. Enumeration streams the codes in a fixed
//! deterministic order and can be split into disjoint sub-streams by the
//! leading code symbol for parallel scans.

use crate::roots::{EuclideanModel, Family, LieType, Root, RootSystem};
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

/// A Weyl group element, represented by its action on positive roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    lie_type: LieType,
    /// action[j] = ±(k+1): u(α_j) = ±root_k.
    action: Vec<i16>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordError {
    pub position: usize,
    pub index: usize,
    pub rank: usize,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "word letter {} at position {} is out of range 1..={}",
            self.index, self.position, self.rank
        )
    }
}

impl std::error::Error for WordError {}

impl WeylElement {
    /// The identity element.
    pub fn identity(rs: &RootSystem) -> WeylElement {
        let n = rs.num_positive();
        WeylElement {
            lie_type: rs.lie_type(),
            action: (1..=n as i16).collect(),
        }
    }

    pub(crate) fn from_action(rs: &RootSystem, action: Vec<i16>) -> WeylElement {
        debug_assert_eq!(action.len(), rs.num_positive());
        WeylElement { lie_type: rs.lie_type(), action }
    }

    /// Product of simple reflections read left to right, the rightmost
    /// factor acting first: `from_word(rs, [1, 2])` maps α to s₁(s₂(α)).
    /// Letters are 1-based simple indices.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement, WordError> {
        for (pos, &i) in word.iter().enumerate() {
            if i < 1 || i > rs.rank() {
                return Err(WordError { position: pos, index: i, rank: rs.rank() });
            }
        }
        let mut u = WeylElement::identity(rs);
        for &i in word {
            u = u.mul_simple_right(rs, i);
        }
        Ok(u)
    }

    /// u·s_i, composing the action tables.
    pub(crate) fn mul_simple_right(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let row = rs.simple_action_row(i);
        let action = row
            .iter()
            .map(|&s| {
                let v = self.action[(s.abs() - 1) as usize];
                if s < 0 { -v } else { v }
            })
            .collect();
        WeylElement { lie_type: self.lie_type, action }
    }

    /// s_i·u.
    pub fn mul_simple_left(&self, rs: &RootSystem, i: usize) -> WeylElement {
        let row = rs.simple_action_row(i);
        let action = self
            .action
            .iter()
            .map(|&v| {
                let s = row[(v.abs() - 1) as usize];
                if v < 0 { -s } else { s }
            })
            .collect();
        WeylElement { lie_type: self.lie_type, action }
    }

    /// Group product u·v (this element acting after `v`).
    pub fn mul(&self, v: &WeylElement) -> WeylElement {
        assert_eq!(self.lie_type, v.lie_type, "mixed root systems");
        let action = v
            .action
            .iter()
            .map(|&s| {
                let w = self.action[(s.abs() - 1) as usize];
                if s < 0 { -w } else { w }
            })
            .collect();
        WeylElement { lie_type: self.lie_type, action }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut action = vec![0i16; self.action.len()];
        for (j, &v) in self.action.iter().enumerate() {
            let k = (v.abs() - 1) as usize;
            action[k] = if v < 0 { -((j + 1) as i16) } else { (j + 1) as i16 };
        }
        WeylElement { lie_type: self.lie_type, action }
    }

    pub fn is_identity(&self) -> bool {
        self.action.iter().enumerate().all(|(j, &v)| v == (j + 1) as i16)
    }

    /// Signed image of a positive root index: `±(k+1)`.
    pub fn image(&self, root_idx: usize) -> i16 {
        self.action[root_idx]
    }

    pub(crate) fn action_table(&self) -> &[i16] {
        &self.action
    }

    /// Applies the element to an arbitrary root (positive or negative).
    pub fn act(&self, rs: &RootSystem, root: &Root) -> Root {
        assert_eq!(self.lie_type, rs.lie_type(), "mixed root systems");
        let (idx, neg) = if root.is_positive() {
            (rs.index_of(&root.coeffs).expect("not a root"), false)
        } else {
            let p = root.negated();
            (rs.index_of(&p.coeffs).expect("not a root"), true)
        };
        let v = self.action[idx];
        let img = rs.root((v.abs() - 1) as usize);
        if (v < 0) ^ neg { img.negated() } else { img.clone() }
    }

    /// Number of positive roots sent negative.
    pub fn length(&self) -> usize {
        self.action.iter().filter(|&&v| v < 0).count()
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    /// A reduced word, built by left-stripping the smallest admissible
    /// simple reflection at each step.
    pub fn reduced_word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut inv = self.inverse();
        // ℓ(s_i·u) < ℓ(u) iff u⁻¹(α_i) < 0
        while let Some(i) =
            (1..=rs.rank()).find(|&i| inv.action[rs.simple_index(i)] < 0)
        {
            word.push(i);
            inv = inv.mul_simple_right(rs, i);
        }
        debug_assert!(inv.is_identity());
        word
    }
}

/// The longest element w₀, grown greedily from the identity.
pub fn longest_element(rs: &RootSystem) -> WeylElement {
    let mut u = WeylElement::identity(rs);
    // While some simple root stays positive, ℓ(u·s_i) = ℓ(u) + 1.
    loop {
        let up = (1..=rs.rank()).find(|&i| u.action[rs.simple_index(i)] > 0);
        match up {
            Some(i) => u = u.mul_simple_right(rs, i),
            None => break,
        }
    }
    debug_assert_eq!(u.length(), rs.num_positive());
    u
}

/// The Dynkin diagram involution ε with w₀(α_i) = −α_{ε(i)} (1-based).
pub fn epsilon_index(rs: &RootSystem, w0: &WeylElement, i: usize) -> usize {
    let v = w0.action[rs.simple_index(i)];
    debug_assert!(v < 0, "w₀ must send simple roots negative");
    let img = (v.abs() - 1) as usize;
    let coeffs = &rs.root(img).coeffs;
    debug_assert_eq!(rs.root(img).height(), 1);
    coeffs.iter().position(|&c| c == 1).unwrap() + 1
}

/// The group automorphism induced by ε, i.e. conjugation by w₀.
pub fn epsilon(rs: &RootSystem, u: &WeylElement) -> WeylElement {
    let w0 = longest_element(rs);
    w0.mul(u).mul(&w0)
}

/// All distinct Coxeter elements: products of the r simple reflections,
/// one each, over every ordering, deduplicated as group elements.
pub fn coxeter_elements(rs: &RootSystem) -> Vec<WeylElement> {
    let r = rs.rank();
    let mut word: Vec<usize> = (1..=r).collect();
    let mut seen: HashSet<Vec<i16>> = HashSet::new();
    let mut out = Vec::new();
    // Heap's algorithm over the orderings.
    let mut c = vec![0usize; r];
    let push = |w: &[usize], out: &mut Vec<WeylElement>, seen: &mut HashSet<Vec<i16>>| {
        let u = WeylElement::from_word(rs, w).unwrap();
        if seen.insert(u.action.clone()) {
            out.push(u);
        }
    };
    push(&word, &mut out, &mut seen);
    let mut i = 0;
    while i < r {
        if c[i] < i {
            if i % 2 == 0 {
                word.swap(0, i);
            } else {
                word.swap(c[i], i);
            }
            push(&word, &mut out, &mut seen);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// The distinguished D_r element of order 4 built from its explicit
/// reduced decomposition. For odd r it acts on the coordinate model by
/// e₁ ↦ −e_r, e_i ↦ −e_i (1 < i < r), e_r ↦ e₁.
pub fn special_d_element(rs: &RootSystem) -> Result<WeylElement, String> {
    let t = rs.lie_type();
    if t.family != Family::D {
        return Err(format!("special element is defined for type D, got {t}"));
    }
    let r = t.rank;
    let mut word = vec![r];
    for k in (1..=r - 2).rev() {
        word.extend(k..=r - 1);
        if k >= 2 {
            word.push(r);
            word.extend((k + 1..=r - 2).rev());
        }
    }
    Ok(WeylElement::from_word(rs, &word).unwrap())
}

// ---------------------------------------------------------------------------
// Compact encodings and conversion

/// Type-specific compact code for one group element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CompactElement {
    /// Type A_r: images of the r+1 coordinates, `u(e_i) = e_{perm[i]}`.
    Perm(Vec<u8>),
    /// Types B/C/D: `u(e_i) = ±e_{perm[i]}`, bit i of `signs` set for −.
    SignedPerm { perm: Vec<u8>, signs: u32 },
    /// Types E/F/G: the root action table itself.
    Action(Vec<i16>),
}

/// Borrowed view of a compact code, used by the zero-allocation scans.
#[derive(Debug, Clone, Copy)]
pub enum CompactView<'a> {
    Perm(&'a [u8]),
    SignedPerm { perm: &'a [u8], signs: u32 },
    Action(&'a [i16]),
}

impl CompactElement {
    pub fn view(&self) -> CompactView<'_> {
        match self {
            CompactElement::Perm(p) => CompactView::Perm(p),
            CompactElement::SignedPerm { perm, signs } => {
                CompactView::SignedPerm { perm, signs: *signs }
            }
            CompactElement::Action(a) => CompactView::Action(a),
        }
    }
}

impl CompactView<'_> {
    pub fn to_owned(&self) -> CompactElement {
        match self {
            CompactView::Perm(p) => CompactElement::Perm(p.to_vec()),
            CompactView::SignedPerm { perm, signs } => {
                CompactElement::SignedPerm { perm: perm.to_vec(), signs: *signs }
            }
            CompactView::Action(a) => CompactElement::Action(a.to_vec()),
        }
    }
}

/// Writes the root action table of a compact code into `out`.
pub fn fill_action(rs: &RootSystem, view: CompactView<'_>, out: &mut Vec<i16>) {
    let n = rs.num_positive();
    out.clear();
    out.resize(n, 0);
    match (view, &rs.model) {
        (CompactView::Perm(p), EuclideanModel::TypeA { pairs, diff_idx, dim }) => {
            for t in 0..n {
                let (a, b) = pairs[t];
                let (ia, ib) = (p[a as usize] as usize, p[b as usize] as usize);
                out[t] = if ia < ib {
                    (diff_idx[ia * dim + ib] + 1) as i16
                } else {
                    -((diff_idx[ib * dim + ia] + 1) as i16)
                };
            }
        }
        (
            CompactView::SignedPerm { perm, signs },
            EuclideanModel::TypeBCD { pairs_diff, pairs_sum, singles, diff_idx, sum_idx, single_idx, dim },
        ) => {
            let image = |i: usize| -> (usize, bool) {
                (perm[i] as usize, signs & (1 << i) != 0)
            };
            for t in 0..n {
                out[t] = if singles[t] != u8::MAX {
                    let (a, neg) = image(singles[t] as usize);
                    signed(single_idx[a], neg)
                } else if pairs_diff[t].0 != u8::MAX {
                    let (a, b) = pairs_diff[t];
                    let (ia, na) = image(a as usize);
                    let (ib, nb) = image(b as usize);
                    // ±e_{ia} ∓ e_{ib}
                    combine(ia, na, ib, !nb, diff_idx, sum_idx, *dim)
                } else {
                    let (a, b) = pairs_sum[t];
                    let (ia, na) = image(a as usize);
                    let (ib, nb) = image(b as usize);
                    combine(ia, na, ib, nb, diff_idx, sum_idx, *dim)
                };
            }
        }
        (CompactView::Action(a), EuclideanModel::Table) => {
            out.copy_from_slice(a);
        }
        _ => panic!("compact code does not match the root system model"),
    }
}

fn signed(idx: u16, neg: bool) -> i16 {
    let v = (idx + 1) as i16;
    if neg { -v } else { v }
}

/// Signed root index of `s_a·e_a + s_b·e_b` (signs true = negative).
fn combine(a: usize, neg_a: bool, b: usize, neg_b: bool, diff_idx: &[u16], sum_idx: &[u16], dim: usize) -> i16 {
    match (neg_a, neg_b) {
        (false, false) => signed(sum_idx[a.min(b) * dim + a.max(b)], false),
        (true, true) => signed(sum_idx[a.min(b) * dim + a.max(b)], true),
        (false, true) => {
            // e_a − e_b
            if a < b {
                signed(diff_idx[a * dim + b], false)
            } else {
                signed(diff_idx[b * dim + a], true)
            }
        }
        (true, false) => {
            // e_b − e_a
            if b < a {
                signed(diff_idx[b * dim + a], false)
            } else {
                signed(diff_idx[a * dim + b], true)
            }
        }
    }
}

/// Decodes a compact code into a full element.
pub fn from_compact(rs: &RootSystem, c: &CompactElement) -> WeylElement {
    let mut action = Vec::new();
    fill_action(rs, c.view(), &mut action);
    WeylElement::from_action(rs, action)
}

/// Encodes an element in the compact per-type form. Inverse of
/// [`from_compact`].
pub fn to_compact(rs: &RootSystem, u: &WeylElement) -> CompactElement {
    let r = rs.rank();
    let Some(dim) = rs.euclidean_dim() else {
        return CompactElement::Action(u.action.clone());
    };
    // Euclidean coordinates of the signed image of a simple root.
    let eu_image = |i: usize| -> Vec<i32> {
        let v = u.action[rs.simple_index(i)];
        let root = rs.root((v.abs() - 1) as usize);
        let mut out = root_euclidean(rs, root, dim);
        if v < 0 {
            for x in out.iter_mut() {
                *x = -*x;
            }
        }
        out
    };
    match rs.lie_type().family {
        Family::A => {
            // u(e_i) − u(e_{i+1}) chains the images together.
            let mut perm = Vec::with_capacity(dim);
            let first = eu_image(1);
            perm.push(first.iter().position(|&x| x == 1).unwrap() as u8);
            for i in 1..=r {
                let img = eu_image(i);
                perm.push(img.iter().position(|&x| x == -1).unwrap() as u8);
            }
            CompactElement::Perm(perm)
        }
        Family::B | Family::C | Family::D => {
            // Recover u(e_r) from the last simple root(s), then walk up.
            let mut images: Vec<Vec<i32>> = vec![Vec::new(); dim];
            match rs.lie_type().family {
                Family::B => {
                    images[r - 1] = eu_image(r);
                }
                Family::C => {
                    images[r - 1] = eu_image(r).iter().map(|&x| x / 2).collect();
                }
                Family::D => {
                    let d = eu_image(r - 1); // u(e_{r-1} − e_r)
                    let s = eu_image(r); // u(e_{r-1} + e_r)
                    images[r - 2] = d.iter().zip(&s).map(|(a, b)| (a + b) / 2).collect();
                    images[r - 1] = s.iter().zip(&d).map(|(b, a)| (b - a) / 2).collect();
                }
                _ => unreachable!(),
            }
            let upto = if rs.lie_type().family == Family::D { r - 2 } else { r - 1 };
            for i in (1..=upto).rev() {
                let d = eu_image(i); // u(e_{i-1}) − u(e_i) in 0-based coords
                images[i - 1] = d.iter().zip(&images[i]).map(|(a, b)| a + b).collect();
            }
            let mut perm = vec![0u8; dim];
            let mut signs = 0u32;
            for (i, img) in images.iter().enumerate() {
                let pos = img.iter().position(|&x| x != 0).unwrap();
                perm[i] = pos as u8;
                if img[pos] < 0 {
                    signs |= 1 << i;
                }
            }
            CompactElement::SignedPerm { perm, signs }
        }
        _ => unreachable!(),
    }
}

fn root_euclidean(rs: &RootSystem, root: &Root, dim: usize) -> Vec<i32> {
    let mut v = vec![0i32; dim];
    let fam = rs.lie_type().family;
    let r = rs.rank();
    for (i, &c) in root.coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        // simple root i+1 in euclidean coordinates
        if i + 1 < r || fam == Family::A {
            v[i] += c;
            v[i + 1] -= c;
        } else {
            match fam {
                Family::B => v[r - 1] += c,
                Family::C => v[r - 1] += 2 * c,
                Family::D => {
                    v[r - 2] += c;
                    v[r - 1] += c;
                }
                _ => unreachable!(),
            }
        }
    }
    v
}

// ---------------------------------------------------------------------------
// Enumeration

/// One unit of the whole-group stream. Units have a canonical order; their
/// concatenation is the full stream, and any round-robin grouping of them
/// is a valid disjoint partition for parallel scans.
#[derive(Debug, Clone)]
pub enum GroupUnit {
    /// Type A: the permutations with this first coordinate image.
    PermFirst { dim: usize, first: u8 },
    /// Types B/C/D: the signed permutations with this first image and
    /// first sign. For D, the remaining signs keep the total parity even.
    SignedFirst { dim: usize, first: u8, first_neg: bool, even_only: bool },
    /// Table types: a contiguous range of the breadth-first element list.
    Slice { elems: Arc<Vec<CompactElement>>, start: usize, end: usize },
}

/// The canonical ordered list of stream units for one group.
pub fn partition_units(rs: &RootSystem) -> Vec<GroupUnit> {
    match &rs.model {
        EuclideanModel::TypeA { dim, .. } => (0..*dim as u8)
            .map(|first| GroupUnit::PermFirst { dim: *dim, first })
            .collect(),
        EuclideanModel::TypeBCD { dim, .. } => {
            let even_only = rs.lie_type().family == Family::D;
            let mut out = Vec::with_capacity(dim * 2);
            for first in 0..*dim as u8 {
                for first_neg in [false, true] {
                    out.push(GroupUnit::SignedFirst { dim: *dim, first, first_neg, even_only });
                }
            }
            out
        }
        EuclideanModel::Table => {
            let elems = Arc::new(bfs_elements(rs));
            let n = elems.len();
            // enough slices that round-robin grouping balances well
            let k = 32.min(n.max(1));
            let chunk = n.div_ceil(k);
            (0..k)
                .filter_map(|w| {
                    let start = w * chunk;
                    if start >= n {
                        return None;
                    }
                    Some(GroupUnit::Slice {
                        elems: Arc::clone(&elems),
                        start,
                        end: ((w + 1) * chunk).min(n),
                    })
                })
                .collect()
        }
    }
}

/// Groups the canonical units round-robin into `k` disjoint partitions.
pub fn partitions(rs: &RootSystem, k: usize) -> Vec<Vec<GroupUnit>> {
    let k = k.max(1);
    let mut buckets = vec![Vec::new(); k];
    for (i, u) in partition_units(rs).into_iter().enumerate() {
        buckets[i % k].push(u);
    }
    buckets
}

/// In-progress scan over one unit. `advance` steps to the next element;
/// `view` borrows the current code without allocating.
pub struct UnitIter {
    state: UnitState,
}

enum UnitState {
    Perm {
        perm: Vec<u8>,
        started: bool,
        done: bool,
    },
    Signed {
        perm: Vec<u8>,
        dim: usize,
        first_neg: bool,
        even_only: bool,
        pattern: u32,
        pattern_count: u32,
        started: bool,
        done: bool,
        signs: u32,
    },
    Slice {
        elems: Arc<Vec<CompactElement>>,
        idx: usize,
        end: usize,
    },
}

impl GroupUnit {
    pub fn iter(&self) -> UnitIter {
        let state = match self {
            GroupUnit::PermFirst { dim, first } => {
                let mut perm = Vec::with_capacity(*dim);
                perm.push(*first);
                perm.extend((0..*dim as u8).filter(|x| x != first));
                UnitState::Perm { perm, started: false, done: false }
            }
            GroupUnit::SignedFirst { dim, first, first_neg, even_only } => {
                let mut perm = Vec::with_capacity(*dim);
                perm.push(*first);
                perm.extend((0..*dim as u8).filter(|x| x != first));
                let free = if *even_only { *dim - 2 } else { *dim - 1 };
                UnitState::Signed {
                    perm,
                    dim: *dim,
                    first_neg: *first_neg,
                    even_only: *even_only,
                    pattern: 0,
                    pattern_count: 1u32 << free,
                    started: false,
                    done: false,
                    signs: 0,
                }
            }
            GroupUnit::Slice { elems, start, end } => UnitState::Slice {
                elems: Arc::clone(elems),
                idx: start.wrapping_sub(1),
                end: *end,
            },
        };
        UnitIter { state }
    }
}

impl UnitIter {
    /// Moves to the next element; false when the unit is exhausted.
    pub fn advance(&mut self) -> bool {
        match &mut self.state {
            UnitState::Perm { perm, started, done } => {
                if *done {
                    return false;
                }
                if !*started {
                    *started = true;
                    return true;
                }
                if next_permutation(&mut perm[1..]) {
                    true
                } else {
                    *done = true;
                    false
                }
            }
            UnitState::Signed {
                perm,
                dim,
                first_neg,
                even_only,
                pattern,
                pattern_count,
                started,
                done,
                signs,
            } => {
                if *done {
                    return false;
                }
                if !*started {
                    *started = true;
                } else {
                    *pattern += 1;
                    if *pattern == *pattern_count {
                        *pattern = 0;
                        if !next_permutation(&mut perm[1..]) {
                            *done = true;
                            return false;
                        }
                    }
                }
                let mut s = *pattern << 1;
                if *first_neg {
                    s |= 1;
                }
                if *even_only {
                    let parity = s.count_ones() & 1;
                    s |= parity << (*dim - 1);
                }
                *signs = s;
                true
            }
            UnitState::Slice { idx, end, .. } => {
                *idx = idx.wrapping_add(1);
                *idx < *end
            }
        }
    }

    /// The current element; only valid after `advance` returned true.
    pub fn view(&self) -> CompactView<'_> {
        match &self.state {
            UnitState::Perm { perm, .. } => CompactView::Perm(perm),
            UnitState::Signed { perm, signs, .. } => {
                CompactView::SignedPerm { perm, signs: *signs }
            }
            UnitState::Slice { elems, idx, .. } => elems[*idx].view(),
        }
    }
}

/// Visits every element of a group of units without allocating per element.
pub fn scan_units<F: FnMut(CompactView<'_>)>(units: &[GroupUnit], mut f: F) {
    for unit in units {
        let mut it = unit.iter();
        while it.advance() {
            f(it.view());
        }
    }
}

fn next_permutation(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Breadth-first closure over action tables, for the exceptional types.
/// Discovery order is deterministic.
fn bfs_elements(rs: &RootSystem) -> Vec<CompactElement> {
    let id = WeylElement::identity(rs);
    let mut seen: HashSet<Vec<i16>> = HashSet::new();
    seen.insert(id.action.clone());
    let mut order: Vec<WeylElement> = vec![id];
    let mut frontier = 0;
    while frontier < order.len() {
        let u = order[frontier].clone();
        frontier += 1;
        for i in 1..=rs.rank() {
            let v = u.mul_simple_right(rs, i);
            if seen.insert(v.action.clone()) {
                order.push(v);
            }
        }
    }
    order.into_iter().map(|u| CompactElement::Action(u.action)).collect()
}

/// Streams every group element exactly once, in the canonical unit order.
pub fn enumerate_group(rs: &RootSystem) -> GroupIter {
    GroupIter { units: partition_units(rs).into_iter(), current: None }
}

pub struct GroupIter {
    units: std::vec::IntoIter<GroupUnit>,
    current: Option<UnitIter>,
}

impl Iterator for GroupIter {
    type Item = CompactElement;

    fn next(&mut self) -> Option<CompactElement> {
        loop {
            if let Some(cur) = &mut self.current {
                if cur.advance() {
                    return Some(cur.view().to_owned());
                }
            }
            self.current = Some(self.units.next()?.iter());
        }
    }
}
