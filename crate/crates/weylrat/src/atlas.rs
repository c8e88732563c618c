//! Whole-group scans and the rationality graph Γ(W).
//!
//! Vertices of Γ(W) are the rational elements; `u` and `v` are joined when
//! `u = s_α·v` for a simple reflection. The scan enumerates the group in
//! disjoint sub-streams (see [`crate::weyl::partitions`]), keeps only the
//! rational elements, and then discovers edges by applying the r left
//! multiplications to each vertex and testing membership — no second group
//! sweep.

use crate::rationality::{self, is_rational_action};
use crate::roots::{LieType, RootSystem};
use crate::weyl::{self, CompactElement, GroupUnit, WeylElement};
use std::collections::{HashMap, HashSet};
use std::fmt;

/// Which side the simple reflection multiplies on when joining vertices.
/// `Left` is the graph from the definition; `Right` is a diagnostic variant
/// that is disconnected except in trivial cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSide {
    Left,
    Right,
}

#[derive(Debug, Clone)]
pub struct AtlasOptions {
    pub workers: usize,
    /// Refuse to enumerate groups larger than this.
    pub budget: u128,
    pub edge_side: EdgeSide,
}

impl Default for AtlasOptions {
    fn default() -> Self {
        AtlasOptions { workers: 1, budget: 100_000_000, edge_side: EdgeSide::Left }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtlasError {
    BudgetExceeded { order: u128, budget: u128 },
}

impl fmt::Display for AtlasError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtlasError::BudgetExceeded { order, budget } => write!(
                f,
                "group order {order} exceeds the element budget {budget}; rerun with --budget at least {order}"
            ),
        }
    }
}

impl std::error::Error for AtlasError {}

/// The rationality graph of one Weyl group.
#[derive(Debug, Clone)]
pub struct Atlas {
    pub lie_type: LieType,
    /// Rational elements in scan order; vertex i is `rational_elements[i]`.
    pub rational_elements: Vec<CompactElement>,
    /// Undirected edges (u, v, simple index label), u < v.
    pub edges: Vec<(usize, usize, usize)>,
    /// Connected component id per vertex.
    pub components: Vec<usize>,
    pub num_components: usize,
    /// Vertex degrees.
    pub valencies: Vec<usize>,
}

impl Atlas {
    pub fn count(&self) -> usize {
        self.rational_elements.len()
    }

    pub fn is_connected(&self) -> bool {
        self.num_components <= 1
    }

    /// Vertices of the given valency.
    pub fn vertices_of_valency(&self, d: usize) -> Vec<usize> {
        (0..self.valencies.len()).filter(|&i| self.valencies[i] == d).collect()
    }

    pub fn vertex_index(&self, rs: &RootSystem, u: &WeylElement) -> Option<usize> {
        let target = weyl::to_compact(rs, u);
        self.rational_elements.iter().position(|c| *c == target)
    }
}

/// Counts rational elements by scanning the whole group. The result does
/// not depend on `workers`.
pub fn count_rational(rs: &RootSystem, workers: usize) -> u64 {
    let buckets = weyl::partitions(rs, workers.max(1));
    if workers <= 1 {
        return buckets.iter().map(|b| count_bucket(rs, b)).sum();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = buckets
            .iter()
            .map(|b| scope.spawn(move || count_bucket(rs, b)))
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).sum()
    })
}

fn count_bucket(rs: &RootSystem, units: &[GroupUnit]) -> u64 {
    let mut action: Vec<i16> = Vec::new();
    let mut n = 0u64;
    weyl::scan_units(units, |v| {
        weyl::fill_action(rs, v, &mut action);
        if is_rational_action(rs, &action) {
            n += 1;
        }
    });
    n
}

/// Collects the rational elements in canonical stream order, regardless of
/// worker count.
fn collect_rational(rs: &RootSystem, workers: usize) -> Vec<CompactElement> {
    let units = weyl::partition_units(rs);
    let scan_unit = |unit: &GroupUnit| -> Vec<CompactElement> {
        let mut found = Vec::new();
        let mut action: Vec<i16> = Vec::new();
        let mut it = unit.iter();
        while it.advance() {
            let v = it.view();
            weyl::fill_action(rs, v, &mut action);
            if is_rational_action(rs, &action) {
                found.push(v.to_owned());
            }
        }
        found
    };
    if workers <= 1 {
        return units.iter().flat_map(scan_unit).collect();
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let units = &units;
                let scan_unit = &scan_unit;
                scope.spawn(move || {
                    let mut results: Vec<(usize, Vec<CompactElement>)> = Vec::new();
                    for (i, unit) in units.iter().enumerate() {
                        if i % workers == w {
                            results.push((i, scan_unit(unit)));
                        }
                    }
                    results
                })
            })
            .collect();
        let mut all: Vec<(usize, Vec<CompactElement>)> =
            handles.into_iter().flat_map(|h| h.join().unwrap()).collect();
        all.sort_by_key(|(i, _)| *i);
        all.into_iter().flat_map(|(_, v)| v).collect()
    })
}

/// Builds the full rationality graph: vertices, labeled edges, components
/// and valencies.
pub fn build_atlas(rs: &RootSystem, opts: &AtlasOptions) -> Result<Atlas, AtlasError> {
    let order = rs.lie_type().group_order();
    if order > opts.budget {
        return Err(AtlasError::BudgetExceeded { order, budget: opts.budget });
    }
    let rational = collect_rational(rs, opts.workers);
    let actions: Vec<Vec<i16>> = rational
        .iter()
        .map(|c| {
            let mut a = Vec::new();
            weyl::fill_action(rs, c.view(), &mut a);
            a
        })
        .collect();
    let index: HashMap<&[i16], usize> =
        actions.iter().enumerate().map(|(i, a)| (a.as_slice(), i)).collect();

    let mut edges = Vec::new();
    let mut neighbor = Vec::new();
    for (ui, a) in actions.iter().enumerate() {
        for i in 1..=rs.rank() {
            match opts.edge_side {
                EdgeSide::Left => compose_left(rs, i, a, &mut neighbor),
                EdgeSide::Right => compose_right(rs, i, a, &mut neighbor),
            }
            if let Some(&vi) = index.get(neighbor.as_slice()) {
                if ui < vi {
                    edges.push((ui, vi, i));
                }
            }
        }
    }
    edges.sort();

    // connected components by union-find
    let mut parent: Vec<usize> = (0..rational.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    for &(u, v, _) in &edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru.max(rv)] = ru.min(rv);
        }
    }
    let mut comp_ids: HashMap<usize, usize> = HashMap::new();
    let mut components = vec![0usize; rational.len()];
    for (v, slot) in components.iter_mut().enumerate() {
        let root = find(&mut parent, v);
        let next_id = comp_ids.len();
        *slot = *comp_ids.entry(root).or_insert(next_id);
    }

    let mut valencies = vec![0usize; rational.len()];
    for &(u, v, _) in &edges {
        valencies[u] += 1;
        valencies[v] += 1;
    }

    Ok(Atlas {
        lie_type: rs.lie_type(),
        rational_elements: rational,
        edges,
        components,
        num_components: comp_ids.len(),
        valencies,
    })
}

/// (s_i ∘ u) as an action table.
fn compose_left(rs: &RootSystem, i: usize, action: &[i16], out: &mut Vec<i16>) {
    let row = rs.simple_action_row(i);
    out.clear();
    out.extend(action.iter().map(|&v| {
        let s = row[(v.abs() - 1) as usize];
        if v < 0 { -s } else { s }
    }));
}

/// (u ∘ s_i) as an action table.
fn compose_right(rs: &RootSystem, i: usize, action: &[i16], out: &mut Vec<i16>) {
    let row = rs.simple_action_row(i);
    out.clear();
    out.extend(row.iter().map(|&s| {
        let v = action[(s.abs() - 1) as usize];
        if s < 0 { -v } else { v }
    }));
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotRational;

impl fmt::Display for NotRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("element is not rational")
    }
}

impl std::error::Error for NotRational {}

/// A path from `u` to w₀ inside Γ(W): returns simple indices a₁, …, a_k
/// with s_{a_k}⋯s_{a₁}·u = w₀, every prefix product rational. Greedy: at
/// each step the smallest simple root α with u⁻¹(α) > 0 and u(α) < 0.
pub fn path_to_w0(rs: &RootSystem, u: &WeylElement) -> Result<Vec<usize>, NotRational> {
    if !rationality::is_rational(rs, u) {
        return Err(NotRational);
    }
    let mut path = Vec::new();
    let mut cur = u.clone();
    while cur.length() < rs.num_positive() {
        let inv = cur.inverse();
        let i = (1..=rs.rank())
            .find(|&i| {
                let idx = rs.simple_index(i);
                inv.image(idx) > 0 && cur.image(idx) < 0
            })
            .expect("a rational element below w0 admits a climbing root");
        path.push(i);
        cur = cur.mul_simple_left(rs, i);
        debug_assert!(rationality::is_rational(rs, &cur));
    }
    Ok(path)
}

/// Rational Coxeter elements and their valencies in Γ(W).
#[derive(Debug, Clone)]
pub struct CoxeterReport {
    /// Number of distinct Coxeter elements.
    pub total: usize,
    pub rational: Vec<WeylElement>,
    /// Γ(W)-valency of each rational Coxeter element.
    pub valencies: Vec<usize>,
}

pub fn coxeter_report(rs: &RootSystem) -> CoxeterReport {
    let all = weyl::coxeter_elements(rs);
    let total = all.len();
    let rational: Vec<WeylElement> =
        all.into_iter().filter(|c| rationality::is_rational(rs, c)).collect();
    let valencies = rational
        .iter()
        .map(|c| {
            (1..=rs.rank())
                .filter(|&i| rationality::is_rational(rs, &c.mul_simple_left(rs, i)))
                .count()
        })
        .collect();
    CoxeterReport { total, rational, valencies }
}

/// True iff ε maps the vertex set onto itself and preserves edges.
pub fn check_z2_symmetry(rs: &RootSystem, atlas: &Atlas) -> bool {
    let w0 = weyl::longest_element(rs);
    let vertices: Vec<WeylElement> = atlas
        .rational_elements
        .iter()
        .map(|c| weyl::from_compact(rs, c))
        .collect();
    let index: HashMap<&WeylElement, usize> =
        vertices.iter().enumerate().map(|(i, u)| (u, i)).collect();
    let mut eps_of = Vec::with_capacity(vertices.len());
    for u in &vertices {
        let eps_u = w0.mul(u).mul(&w0);
        match index.get(&eps_u) {
            Some(&i) => eps_of.push(i),
            None => return false,
        }
    }
    let edge_set: HashSet<(usize, usize)> =
        atlas.edges.iter().map(|&(u, v, _)| (u.min(v), u.max(v))).collect();
    atlas.edges.iter().all(|&(u, v, _)| {
        let (a, b) = (eps_of[u], eps_of[v]);
        edge_set.contains(&(a.min(b), a.max(b)))
    })
}
