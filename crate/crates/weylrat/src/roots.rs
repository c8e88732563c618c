//! Crystallographic root systems and the root poset.
//!
//! A [`RootSystem`] is built once per `(family, rank)` by closing the simple
//! roots under simple reflections, and then stays immutable: positive roots
//! get a fixed deterministic index (graded by height, ties broken
//! lexicographically on coefficients), and the partial order `β ≤ γ` (γ − β
//! nonnegative on simple roots) is precomputed as per-root bitmasks so that
//! the downward closure used by ν-sequences is a handful of word-ORs.

use std::collections::HashMap;
use std::fmt;

/// Simple Lie families in scope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
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
            other => Err(format!("unknown Lie family `{other}`")),
        }
    }
}

/// An indecomposable Lie type: family plus rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Self {
        LieType { family, rank }
    }

    /// Admissible ranks: A r≥1, B r≥2, C r≥2, D r≥4, E r∈{6,7,8}, F r=4, G r=2.
    pub fn is_admissible(&self) -> bool {
        match self.family {
            Family::A => self.rank >= 1,
            Family::B | Family::C => self.rank >= 2,
            Family::D => self.rank >= 4,
            Family::E => matches!(self.rank, 6..=8),
            Family::F => self.rank == 4,
            Family::G => self.rank == 2,
        }
    }

    /// Number of positive roots, in closed form.
    pub fn positive_root_count(&self) -> usize {
        let r = self.rank;
        match self.family {
            Family::A => r * (r + 1) / 2,
            Family::B | Family::C => r * r,
            Family::D => r * (r - 1),
            Family::E => match r {
                6 => 36,
                7 => 63,
                8 => 120,
                _ => unreachable!(),
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn group_order(&self) -> u128 {
        fn fact(n: usize) -> u128 {
            (1..=n as u128).product()
        }
        let r = self.rank;
        match self.family {
            Family::A => fact(r + 1),
            Family::B | Family::C => (1u128 << r) * fact(r),
            Family::D => (1u128 << (r - 1)) * fact(r),
            Family::E => match r {
                6 => 51_840,
                7 => 2_903_040,
                8 => 696_729_600,
                _ => unreachable!(),
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root written over the simple roots: `coeffs[i]` is the coefficient of
/// α_{i+1}. Valid roots are componentwise nonnegative (positive roots) or
/// componentwise nonpositive (negative roots).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub coeffs: Vec<i32>,
}

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root { coeffs }
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0) && self.coeffs.iter().any(|&c| c < 0)
    }

    /// Sum of coefficients; 1 exactly for simple roots.
    pub fn height(&self) -> i32 {
        self.coeffs.iter().sum()
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coeffs.iter().map(|&c| -c).collect())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { "-" } else { "+" })?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Maximum number of positive roots a [`RootSet`] can hold.
pub const MAX_POSITIVE_ROOTS: usize = 256;

const LIMBS: usize = MAX_POSITIVE_ROOTS / 64;

/// A set of positive-root indices as a fixed-width bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct RootSet([u64; LIMBS]);

impl RootSet {
    pub const EMPTY: RootSet = RootSet([0; LIMBS]);

    pub fn insert(&mut self, idx: usize) {
        self.0[idx / 64] |= 1u64 << (idx % 64);
    }

    pub fn remove(&mut self, idx: usize) {
        self.0[idx / 64] &= !(1u64 << (idx % 64));
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.0[idx / 64] & (1u64 << (idx % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn union_with(&mut self, other: &RootSet) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &RootSet) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a &= b;
        }
    }

    pub fn is_subset_of(&self, other: &RootSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> RootSetIter {
        RootSetIter { words: self.0, limb: 0 }
    }

    pub fn from_indices(indices: &[usize]) -> RootSet {
        let mut s = RootSet::EMPTY;
        for &i in indices {
            s.insert(i);
        }
        s
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for RootSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = RootSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

/// Iterates set bits in increasing order.
pub struct RootSetIter {
    words: [u64; LIMBS],
    limb: usize,
}

impl Iterator for RootSetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.limb < LIMBS {
            let w = self.words[self.limb];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.limb] &= w - 1;
                return Some(self.limb * 64 + bit);
            }
            self.limb += 1;
        }
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    InadmissibleRank { family: Family, rank: usize },
    TooLarge { positive_roots: usize },
}

impl fmt::Display for RootSystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootSystemError::InadmissibleRank { family, rank } => {
                write!(f, "inadmissible Lie type {family}{rank}")
            }
            RootSystemError::TooLarge { positive_roots } => write!(
                f,
                "{positive_roots} positive roots exceed the supported maximum of {MAX_POSITIVE_ROOTS}"
            ),
        }
    }
}

impl std::error::Error for RootSystemError {}

/// Euclidean coordinates for the classical families, used by the compact
/// Weyl element encodings. Entries are the integer coordinates of each
/// positive root in the standard orthonormal model.
#[derive(Debug, Clone)]
pub(crate) enum EuclideanModel {
    /// Type A_r in r+1 coordinates: every positive root is e_a − e_b, a < b.
    TypeA { pairs: Vec<(u8, u8)>, diff_idx: Vec<u16>, dim: usize },
    /// Types B/C/D in r coordinates: e_a − e_b, e_a + e_b (a < b), and for
    /// B/C the single-coordinate roots e_a resp. 2e_a.
    TypeBCD {
        pairs_diff: Vec<(u8, u8)>,
        pairs_sum: Vec<(u8, u8)>,
        singles: Vec<u8>,
        diff_idx: Vec<u16>,
        sum_idx: Vec<u16>,
        single_idx: Vec<u16>,
        dim: usize,
    },
    /// Exceptional types: no coordinate model; elements are stored as root
    /// action tables directly.
    Table,
}

/// Immutable tables for one root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    /// All positive roots, graded by height then lexicographic on coeffs.
    positive_roots: Vec<Root>,
    /// coeffs → index into `positive_roots`.
    index_of: HashMap<Vec<i32>, usize>,
    /// Cartan matrix a_ij = ⟨α_j, α_i^∨⟩, row-major, rank × rank.
    cartan: Vec<i32>,
    /// down_sets[i] = { j : root_j ≤ root_i }.
    down_sets: Vec<RootSet>,
    /// up_sets[i] = { j : root_i ≤ root_j }.
    up_sets: Vec<RootSet>,
    /// simple_action[i][j] = signed image index of s_{i+1}(α_j):
    /// value ±(k+1) meaning ±root_k.
    simple_action: Vec<Vec<i16>>,
    highest_root: usize,
    pub(crate) model: EuclideanModel,
}

impl RootSystem {
    /// Builds the full root system for an admissible type by reflection
    /// closure of the simple roots.
    pub fn build(t: LieType) -> Result<RootSystem, RootSystemError> {
        if !t.is_admissible() {
            return Err(RootSystemError::InadmissibleRank { family: t.family, rank: t.rank });
        }
        let n_pos = t.positive_root_count();
        if n_pos > MAX_POSITIVE_ROOTS {
            return Err(RootSystemError::TooLarge { positive_roots: n_pos });
        }

        let rank = t.rank;
        let cartan = cartan_matrix(t);
        let at = |i: usize, j: usize| cartan[i * rank + j];

        // Close the simple roots under all simple reflections, keeping the
        // positive half.
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        let mut queue: Vec<Vec<i32>> = Vec::new();
        for i in 0..rank {
            let mut c = vec![0i32; rank];
            c[i] = 1;
            seen.insert(c.clone(), ());
            queue.push(c);
        }
        while let Some(c) = queue.pop() {
            for i in 0..rank {
                // ⟨β, α_i^∨⟩ = Σ_j c_j a_ij
                let pairing: i32 = (0..rank).map(|j| c[j] * at(i, j)).sum();
                let mut img = c.clone();
                img[i] -= pairing;
                if img.iter().all(|&x| x >= 0) && !seen.contains_key(&img) {
                    seen.insert(img.clone(), ());
                    queue.push(img);
                }
            }
        }

        // graded by height; inside a grade, descending lexicographic puts
        // the simple roots at indices 0..rank in index order
        let mut positive_roots: Vec<Root> = seen.into_keys().map(Root::new).collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then(b.coeffs.cmp(&a.coeffs)));
        assert_eq!(
            positive_roots.len(),
            n_pos,
            "reflection closure of {t} produced {} positive roots, expected {n_pos}",
            positive_roots.len()
        );

        let index_of: HashMap<Vec<i32>, usize> =
            positive_roots.iter().enumerate().map(|(i, r)| (r.coeffs.clone(), i)).collect();

        // Partial order: β ≤ γ iff γ − β is componentwise ≥ 0.
        let mut down_sets = vec![RootSet::EMPTY; n_pos];
        let mut up_sets = vec![RootSet::EMPTY; n_pos];
        for i in 0..n_pos {
            for j in 0..n_pos {
                let le = positive_roots[j]
                    .coeffs
                    .iter()
                    .zip(positive_roots[i].coeffs.iter())
                    .all(|(b, c)| b <= c);
                if le {
                    down_sets[i].insert(j);
                    up_sets[j].insert(i);
                }
            }
        }

        // Simple reflections as signed permutations of the positive roots.
        let mut simple_action = vec![vec![0i16; n_pos]; rank];
        for i in 0..rank {
            for j in 0..n_pos {
                let c = &positive_roots[j].coeffs;
                let pairing: i32 = (0..rank).map(|k| c[k] * at(i, k)).sum();
                let mut img = c.clone();
                img[i] -= pairing;
                simple_action[i][j] = if img.iter().all(|&x| x >= 0) {
                    (index_of[&img] + 1) as i16
                } else {
                    let neg: Vec<i32> = img.iter().map(|&x| -x).collect();
                    -((index_of[&neg] + 1) as i16)
                };
            }
        }

        let highest_root = (0..n_pos)
            .max_by_key(|&i| (positive_roots[i].height(), positive_roots[i].coeffs.clone()))
            .unwrap();

        let model = build_model(t, &positive_roots, n_pos);

        Ok(RootSystem {
            lie_type: t,
            positive_roots,
            index_of,
            cartan,
            down_sets,
            up_sets,
            simple_action,
            highest_root,
            model,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The simple roots α_1, …, α_rank; by the grading they occupy the
    /// first `rank` indices in order.
    pub fn simple_roots(&self) -> &[Root] {
        &self.positive_roots[..self.rank()]
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.positive_roots[idx]
    }

    /// Index of the simple root α_i (1-based i).
    pub fn simple_index(&self, i: usize) -> usize {
        let mut c = vec![0i32; self.rank()];
        c[i - 1] = 1;
        self.index_of[&c]
    }

    /// Index of a positive root given by coefficients, if it is a root.
    pub fn index_of(&self, coeffs: &[i32]) -> Option<usize> {
        self.index_of.get(coeffs).copied()
    }

    /// Cartan integer a_ij = ⟨α_j, α_i^∨⟩ (1-based i, j).
    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        self.cartan[(i - 1) * self.rank() + (j - 1)]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest_root
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive_roots[self.highest_root]
    }

    /// β ≤ γ in the root poset.
    pub fn leq(&self, beta: usize, gamma: usize) -> bool {
        self.down_sets[gamma].contains(beta)
    }

    /// Down-set of one positive root: { β : β ≤ γ }.
    pub fn down_set(&self, gamma: usize) -> &RootSet {
        &self.down_sets[gamma]
    }

    /// Up-set of one positive root: { γ : β ≤ γ }.
    pub fn up_set(&self, beta: usize) -> &RootSet {
        &self.up_sets[beta]
    }

    /// Downward closure of a set of positive roots.
    pub fn adj(&self, set: &RootSet) -> RootSet {
        let mut out = RootSet::EMPTY;
        for i in set.iter() {
            out.union_with(&self.down_sets[i]);
        }
        out
    }

    /// Action row of s_i (1-based i) on the positive roots: entry j is
    /// ±(k+1) meaning s_i(α_j) = ±root_k.
    pub(crate) fn simple_action_row(&self, i: usize) -> &[i16] {
        &self.simple_action[i - 1]
    }

    /// Euclidean coordinates of a positive root in the classical model
    /// (types A–D only).
    pub(crate) fn euclidean_dim(&self) -> Option<usize> {
        match &self.model {
            EuclideanModel::TypeA { dim, .. } => Some(*dim),
            EuclideanModel::TypeBCD { dim, .. } => Some(*dim),
            EuclideanModel::Table => None,
        }
    }
}

fn cartan_matrix(t: LieType) -> Vec<i32> {
    let r = t.rank;
    let mut a = vec![0i32; r * r];
    for i in 0..r {
        a[i * r + i] = 2;
    }
    let mut bond = |i: usize, j: usize, aij: i32, aji: i32| {
        a[(i - 1) * r + (j - 1)] = aij;
        a[(j - 1) * r + (i - 1)] = aji;
    };
    match t.family {
        Family::A => {
            for i in 1..r {
                bond(i, i + 1, -1, -1);
            }
        }
        // B_r: the branch-end root α_r is short, so a_{r,r-1} = -2.
        Family::B => {
            for i in 1..r - 1 {
                bond(i, i + 1, -1, -1);
            }
            bond(r - 1, r, -1, -2);
        }
        // C_r is dual to B_r: α_r long.
        Family::C => {
            for i in 1..r - 1 {
                bond(i, i + 1, -1, -1);
            }
            bond(r - 1, r, -2, -1);
        }
        Family::D => {
            for i in 1..r - 1 {
                bond(i, i + 1, -1, -1);
            }
            bond(r - 2, r, -1, -1);
        }
        Family::E => {
            // Chain 1-3-4-5-...-r with node 2 attached to 4.
            bond(1, 3, -1, -1);
            bond(2, 4, -1, -1);
            for i in 3..r {
                bond(i, i + 1, -1, -1);
            }
        }
        Family::F => {
            bond(1, 2, -1, -1);
            bond(2, 3, -1, -2); // α_1, α_2 long; α_3, α_4 short
            bond(3, 4, -1, -1);
        }
        Family::G => {
            bond(1, 2, -3, -1); // α_1 short, α_2 long
        }
    }
    a
}

/// Euclidean coordinates of the simple roots of the classical families.
fn euclidean_simples(t: LieType) -> Option<(usize, Vec<Vec<i32>>)> {
    let r = t.rank;
    match t.family {
        Family::A => {
            let dim = r + 1;
            let mut simples = Vec::with_capacity(r);
            for i in 0..r {
                let mut v = vec![0i32; dim];
                v[i] = 1;
                v[i + 1] = -1;
                simples.push(v);
            }
            Some((dim, simples))
        }
        Family::B | Family::C | Family::D => {
            let dim = r;
            let mut simples = Vec::with_capacity(r);
            for i in 0..r - 1 {
                let mut v = vec![0i32; dim];
                v[i] = 1;
                v[i + 1] = -1;
                simples.push(v);
            }
            let mut last = vec![0i32; dim];
            match t.family {
                Family::B => last[r - 1] = 1,
                Family::C => last[r - 1] = 2,
                Family::D => {
                    last[r - 2] = 1;
                    last[r - 1] = 1;
                }
                _ => unreachable!(),
            }
            simples.push(last);
            Some((dim, simples))
        }
        _ => None,
    }
}

fn build_model(t: LieType, positive_roots: &[Root], n_pos: usize) -> EuclideanModel {
    let Some((dim, simples)) = euclidean_simples(t) else {
        return EuclideanModel::Table;
    };
    let eu = |root: &Root| -> Vec<i32> {
        let mut v = vec![0i32; dim];
        for (c, s) in root.coeffs.iter().zip(simples.iter()) {
            for (vi, si) in v.iter_mut().zip(s.iter()) {
                *vi += c * si;
            }
        }
        v
    };
    match t.family {
        Family::A => {
            let mut pairs = vec![(0u8, 0u8); n_pos];
            let mut diff_idx = vec![u16::MAX; dim * dim];
            for (idx, root) in positive_roots.iter().enumerate() {
                let v = eu(root);
                let a = v.iter().position(|&x| x == 1).unwrap();
                let b = v.iter().position(|&x| x == -1).unwrap();
                pairs[idx] = (a as u8, b as u8);
                diff_idx[a * dim + b] = idx as u16;
            }
            EuclideanModel::TypeA { pairs, diff_idx, dim }
        }
        Family::B | Family::C | Family::D => {
            let mut pairs_diff = Vec::new();
            let mut pairs_sum = Vec::new();
            let mut singles = Vec::new();
            let mut diff_idx = vec![u16::MAX; dim * dim];
            let mut sum_idx = vec![u16::MAX; dim * dim];
            let mut single_idx = vec![u16::MAX; dim];
            for (idx, root) in positive_roots.iter().enumerate() {
                let v = eu(root);
                let support: Vec<usize> = (0..dim).filter(|&i| v[i] != 0).collect();
                match support.as_slice() {
                    [a] => {
                        singles.push(*a as u8);
                        single_idx[*a] = idx as u16;
                        // placeholder entries keep the three pair vectors
                        // index-aligned with positive_roots
                        pairs_diff.push((u8::MAX, u8::MAX));
                        pairs_sum.push((u8::MAX, u8::MAX));
                    }
                    [a, b] => {
                        debug_assert!(a < b);
                        if v[*b] > 0 {
                            pairs_sum.push((*a as u8, *b as u8));
                            pairs_diff.push((u8::MAX, u8::MAX));
                            sum_idx[a * dim + b] = idx as u16;
                        } else {
                            pairs_diff.push((*a as u8, *b as u8));
                            pairs_sum.push((u8::MAX, u8::MAX));
                            diff_idx[a * dim + b] = idx as u16;
                        }
                        singles.push(u8::MAX);
                    }
                    _ => unreachable!("classical root with support > 2"),
                }
            }
            EuclideanModel::TypeBCD {
                pairs_diff,
                pairs_sum,
                singles,
                diff_idx,
                sum_idx,
                single_idx,
                dim,
            }
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, r: usize) -> RootSystem {
        RootSystem::build(LieType::new(f, r)).unwrap()
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        let cases = [
            (Family::A, 1..=6),
            (Family::B, 2..=5),
            (Family::C, 2..=5),
            (Family::D, 4..=6),
            (Family::F, 4..=4),
            (Family::G, 2..=2),
        ];
        for (f, ranks) in cases {
            for r in ranks {
                let t = LieType::new(f, r);
                assert_eq!(rs(f, r).num_positive(), t.positive_root_count(), "{t}");
            }
        }
        for r in [6, 7, 8] {
            let t = LieType::new(Family::E, r);
            assert_eq!(rs(Family::E, r).num_positive(), t.positive_root_count(), "{t}");
        }
    }

    #[test]
    fn a2_positive_roots() {
        let rs = rs(Family::A, 2);
        let coeffs: Vec<_> = rs.positive_roots().iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(coeffs, vec![vec![1, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(rs.highest_root().coeffs, vec![1, 1]);
    }

    #[test]
    fn b2_positive_roots_and_highest() {
        let rs = rs(Family::B, 2);
        let coeffs: Vec<_> = rs.positive_roots().iter().map(|r| r.coeffs.clone()).collect();
        assert_eq!(coeffs, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
        assert_eq!(rs.highest_root().coeffs, vec![1, 2]);
    }

    #[test]
    fn d5_has_twenty_positive_roots() {
        assert_eq!(rs(Family::D, 5).num_positive(), 20);
    }

    #[test]
    fn simple_roots_lead_the_ordering() {
        for (f, r) in [(Family::A, 4), (Family::B, 3), (Family::E, 6), (Family::G, 2)] {
            let rs = rs(f, r);
            for (i, root) in rs.simple_roots().iter().enumerate() {
                assert_eq!(root.height(), 1);
                assert_eq!(root.coeffs[i], 1);
            }
        }
    }

    #[test]
    fn leq_examples() {
        let b2 = rs(Family::B, 2);
        let a2_idx = b2.simple_index(2);
        let theta = b2.highest_root_index();
        assert!(b2.leq(a2_idx, theta));
        assert!(b2.leq(a2_idx, a2_idx));

        let a2 = rs(Family::A, 2);
        assert!(!a2.leq(a2.simple_index(1), a2.simple_index(2)));
    }

    #[test]
    fn adj_examples() {
        let b2 = rs(Family::B, 2);
        let theta = RootSet::from_indices(&[b2.highest_root_index()]);
        assert_eq!(b2.adj(&theta).len(), b2.num_positive());

        assert!(b2.adj(&RootSet::EMPTY).is_empty());

        let a2 = rs(Family::A, 2);
        let s = RootSet::from_indices(&[a2.simple_index(2)]);
        assert_eq!(a2.adj(&s), s);
    }

    #[test]
    fn adj_is_extensive_monotone_idempotent() {
        for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::D, 4), (Family::G, 2)] {
            let rs = rs(f, r);
            let n = rs.num_positive();
            // a few deterministic sample sets
            for seed in 0..8usize {
                let s: RootSet = (0..n).filter(|i| (i * 7 + seed * 3) % 5 < 2).collect();
                let a = rs.adj(&s);
                assert!(s.is_subset_of(&a), "extensive");
                assert_eq!(rs.adj(&a), a, "idempotent");
                let mut bigger = s;
                bigger.insert(seed % n);
                let ab = rs.adj(&bigger);
                assert!(a.is_subset_of(&ab), "monotone");
            }
        }
    }

    #[test]
    fn highest_root_dominates() {
        for (f, r) in
            [(Family::A, 4), (Family::B, 3), (Family::C, 3), (Family::D, 5), (Family::G, 2), (Family::F, 4)]
        {
            let rs = rs(f, r);
            let theta = rs.highest_root_index();
            for i in 0..rs.num_positive() {
                assert!(rs.leq(i, theta), "{f:?}{r}: root {i} not ≤ θ");
                for (c, h) in rs.root(i).coeffs.iter().zip(rs.highest_root().coeffs.iter()) {
                    assert!(c <= h);
                }
            }
        }
    }

    #[test]
    fn poset_is_a_partial_order() {
        let rs = rs(Family::B, 3);
        let n = rs.num_positive();
        for i in 0..n {
            assert!(rs.leq(i, i));
            for j in 0..n {
                if rs.leq(i, j) && rs.leq(j, i) {
                    assert_eq!(i, j, "antisymmetry");
                }
                for k in 0..n {
                    if rs.leq(i, j) && rs.leq(j, k) {
                        assert!(rs.leq(i, k), "transitivity");
                    }
                }
            }
        }
    }

    #[test]
    fn cartan_sign_pattern() {
        for (f, r) in [(Family::A, 3), (Family::B, 4), (Family::C, 3), (Family::E, 6), (Family::F, 4), (Family::G, 2)] {
            let rs = rs(f, r);
            for i in 1..=r {
                assert_eq!(rs.cartan(i, i), 2);
                for j in 1..=r {
                    if i != j {
                        assert!(rs.cartan(i, j) <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn inadmissible_types_rejected() {
        for (f, r) in [
            (Family::A, 0),
            (Family::B, 1),
            (Family::C, 1),
            (Family::D, 3),
            (Family::E, 5),
            (Family::E, 9),
            (Family::F, 3),
            (Family::G, 1),
        ] {
            assert!(RootSystem::build(LieType::new(f, r)).is_err(), "{f:?}{r}");
        }
    }

    #[test]
    fn root_display() {
        let rs = rs(Family::B, 2);
        assert_eq!(rs.highest_root().to_string(), "a1+2a2");
        assert_eq!(rs.root(0).to_string(), "a1");
        assert_eq!(rs.root(0).negated().to_string(), "-a1");
    }

    #[test]
    fn rootset_basics() {
        let mut s = RootSet::EMPTY;
        s.insert(3);
        s.insert(200);
        assert!(s.contains(3) && s.contains(200) && !s.contains(4));
        assert_eq!(s.to_vec(), vec![3, 200]);
        assert_eq!(s.len(), 2);
        s.remove(3);
        assert_eq!(s.to_vec(), vec![200]);
    }
}
