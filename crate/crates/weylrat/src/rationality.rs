//! ν-sequences, rationality graphs, and rationality predicates.
//!
//! For `u` in the Weyl group, the ν-sequence starts from
//! `ν⁰(u) = u(Π₊) ∩ Π₊` and iterates `ν^k = u(Adj ν^{k−1}) ∩ Π₊`, where
//! `Adj` is the downward closure in the root poset. The sequence descends
//! and stabilizes; `u` is *rational* when the limit is empty, equivalently
//! when the graph Γ(u) on ν⁰(u) with edges `α → β` for `u⁻¹(α) ≤ β` is
//! acyclic. Both routes are implemented; the ν-iteration on bitmasks is the
//! hot path for group sweeps, and the graph route stays as a cross-check.

use crate::roots::{Root, RootSet, RootSystem};
use crate::weyl::WeylElement;

/// The computed ν-chain of one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NuSequence {
    /// ν⁰, ν¹, …, ν^m where m is minimal with ν^m = ν^{m+1}.
    pub terms: Vec<RootSet>,
    /// The stabilized set ν(u), equal to the last term.
    pub limit: RootSet,
}

impl NuSequence {
    /// Index at which the sequence becomes empty, if it does.
    pub fn emptying_index(&self) -> Option<usize> {
        self.terms.iter().position(|t| t.is_empty())
    }
}

/// ν⁰ of an action table: the set of positive roots with positive preimage.
pub(crate) fn nu0_of_action(action: &[i16]) -> RootSet {
    let mut s = RootSet::EMPTY;
    for &v in action {
        if v > 0 {
            s.insert((v - 1) as usize);
        }
    }
    s
}

/// One ν step: `u(Adj prev) ∩ Π₊`.
fn nu_step(rs: &RootSystem, action: &[i16], prev: &RootSet) -> RootSet {
    let adj = rs.adj(prev);
    let mut next = RootSet::EMPTY;
    for j in adj.iter() {
        let v = action[j];
        if v > 0 {
            next.insert((v - 1) as usize);
        }
    }
    next
}

/// Computes the ν-sequence until its first repetition.
pub fn nu_sequence(rs: &RootSystem, u: &WeylElement) -> NuSequence {
    let action = u.action_table();
    let mut terms = vec![nu0_of_action(action)];
    loop {
        let next = nu_step(rs, action, terms.last().unwrap());
        if next == *terms.last().unwrap() {
            let limit = next;
            return NuSequence { terms, limit };
        }
        terms.push(next);
    }
}

/// Fast rationality predicate on a raw action table.
pub(crate) fn is_rational_action(rs: &RootSystem, action: &[i16]) -> bool {
    let mut cur = RootSet::EMPTY;
    for &v in action {
        if v > 0 {
            cur.insert((v - 1) as usize);
        }
    }
    // Highest root in ν⁰ forces a loop in Γ(u).
    if cur.contains(rs.highest_root_index()) {
        return false;
    }
    loop {
        if cur.is_empty() {
            return true;
        }
        let next = nu_step(rs, action, &cur);
        if next == cur {
            return false;
        }
        cur = next;
    }
}

/// True iff ν(u) = ∅.
pub fn is_rational(rs: &RootSystem, u: &WeylElement) -> bool {
    is_rational_action(rs, u.action_table())
}

/// Why an element is or is not rational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// ν(u) = ∅; `steps` is the index of the first empty term.
    EmptyNu { steps: usize },
    /// A cycle in Γ(u), as positive-root indices (a loop has length 1).
    Cycle(Vec<usize>),
}

/// Rationality with a certificate: the emptying step, or a cycle of Γ(u).
pub fn certify(rs: &RootSystem, u: &WeylElement) -> Certificate {
    let nu = nu_sequence(rs, u);
    if let Some(steps) = nu.emptying_index() {
        return Certificate::EmptyNu { steps };
    }
    let g = gamma(rs, u);
    Certificate::Cycle(g.find_cycle().expect("nonempty ν limit implies a cycle"))
}

/// The rationality graph Γ(u): vertices ν⁰(u), edge α → β iff u⁻¹(α) ≤ β.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatGraph {
    /// Vertex set, as sorted positive-root indices.
    pub vertices: Vec<usize>,
    /// rows[i] = targets of vertices[i], as a bitmask over root indices.
    pub rows: Vec<RootSet>,
}

impl RatGraph {
    /// All edges as ordered root-index pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &v) in self.vertices.iter().enumerate() {
            for w in self.rows[i].iter() {
                out.push((v, w));
            }
        }
        out
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        match self.vertices.binary_search(&from) {
            Ok(i) => self.rows[i].contains(to),
            Err(_) => false,
        }
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Kahn-style topological check; a loop is an immediate cycle.
    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// Finds some cycle as a vertex list, or None when acyclic.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        // DFS, colors: 0 unvisited, 1 on stack, 2 done.
        let mut color = vec![0u8; n];
        let mut stack: Vec<usize> = Vec::new();
        let idx_of = |v: usize| self.vertices.binary_search(&v).unwrap();
        for start in 0..n {
            if color[start] != 0 {
                continue;
            }
            // iterative DFS keeping an explicit path
            let mut path: Vec<(usize, Vec<usize>)> = Vec::new();
            let targets: Vec<usize> =
                self.rows[start].iter().filter(|&t| self.has_vertex(t)).collect();
            path.push((start, targets));
            color[start] = 1;
            stack.push(start);
            while let Some((node, targets)) = path.last_mut() {
                let node = *node;
                match targets.pop() {
                    Some(t) => {
                        let ti = idx_of(t);
                        if color[ti] == 1 {
                            // found a cycle: slice the stack from t
                            let pos =
                                stack.iter().position(|&s| s == ti).unwrap();
                            let cycle: Vec<usize> =
                                stack[pos..].iter().map(|&s| self.vertices[s]).collect();
                            return Some(cycle);
                        }
                        if color[ti] == 0 {
                            color[ti] = 1;
                            stack.push(ti);
                            let tt: Vec<usize> = self.rows[ti]
                                .iter()
                                .filter(|&x| self.has_vertex(x))
                                .collect();
                            path.push((ti, tt));
                        }
                    }
                    None => {
                        color[node] = 2;
                        path.pop();
                        stack.pop();
                    }
                }
            }
        }
        None
    }

    fn has_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// Builds Γ(u).
pub fn gamma(rs: &RootSystem, u: &WeylElement) -> RatGraph {
    let nu0 = nu0_of_action(u.action_table());
    let vertices: Vec<usize> = nu0.iter().collect();
    let inv = u.inverse();
    let rows = vertices
        .iter()
        .map(|&alpha| {
            let pre = inv.image(alpha);
            debug_assert!(pre > 0, "vertices of Γ(u) have positive preimage");
            let mut row = *rs.up_set((pre - 1) as usize);
            row.intersect_with(&nu0);
            row
        })
        .collect();
    RatGraph { vertices, rows }
}

/// Rationality via acyclicity of Γ(u); cross-check for [`is_rational`].
pub fn is_rational_by_acyclicity(rs: &RootSystem, u: &WeylElement) -> bool {
    gamma(rs, u).is_acyclic()
}

/// A loop witness: some α ∈ Π₊ with α ≤ u(α).
pub fn has_loop(rs: &RootSystem, u: &WeylElement) -> Option<Root> {
    for j in 0..rs.num_positive() {
        let v = u.image(j);
        if v > 0 && rs.leq(j, (v - 1) as usize) {
            return Some(rs.root(j).clone());
        }
    }
    None
}

/// ν⁰(v·w₀) from a reduced word of `v`, via the partial products
/// `β_k = s_{i₁}⋯s_{i_{k−1}}(α_{i_k})`.
///
/// Returns an error when the word is not reduced (detected by a length
/// drop while building the partial products).
pub fn nu0_via_reduced_word(rs: &RootSystem, v_word: &[usize]) -> Result<RootSet, NotReduced> {
    let mut out = RootSet::EMPTY;
    let mut prefix = WeylElement::identity(rs);
    for (k, &i) in v_word.iter().enumerate() {
        assert!(i >= 1 && i <= rs.rank(), "word letter out of range");
        let beta = prefix.image(rs.simple_index(i));
        if beta < 0 {
            return Err(NotReduced { position: k });
        }
        out.insert((beta - 1) as usize);
        prefix = prefix.mul_simple_right(rs, i);
        if prefix.length() != k + 1 {
            return Err(NotReduced { position: k });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotReduced {
    pub position: usize,
}

impl std::fmt::Display for NotReduced {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "word is not reduced: length drops at letter {}", self.position)
    }
}

impl std::error::Error for NotReduced {}

/// The ν-sequence of `u` relative to `v`, which need not descend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeNu {
    /// Terms up to (not including) the first repeated value, or up to the
    /// `max_terms` cap.
    pub terms: Vec<RootSet>,
    /// Index of the earlier occurrence when a term value repeated.
    pub cycle_start: Option<usize>,
    /// True iff some term is empty (the sequence then stays empty).
    pub empty_limit: bool,
}

/// Default cap on relative ν-sequence terms.
pub fn default_max_terms(rs: &RootSystem) -> usize {
    2 * rs.num_positive() + 2
}

/// Computes `ν^k(u|v)` with `ν⁰ = uv⁻¹(Π₋) ∩ Π₊` and
/// `ν^k = u(Adj ν^{k−1}) ∩ Π₊`, stopping at a repeated term value or at
/// `max_terms`.
pub fn relative_nu(rs: &RootSystem, u: &WeylElement, v: &WeylElement, max_terms: usize) -> RelativeNu {
    let w = u.mul(&v.inverse());
    // w(Π₋) ∩ Π₊ = { −w(α_j) : w(α_j) < 0 }
    let mut nu0 = RootSet::EMPTY;
    for j in 0..rs.num_positive() {
        let img = w.image(j);
        if img < 0 {
            nu0.insert((-img - 1) as usize);
        }
    }
    let action = u.action_table();
    let mut terms = vec![nu0];
    let mut cycle_start = None;
    while terms.len() < max_terms {
        let next = nu_step(rs, action, terms.last().unwrap());
        if let Some(pos) = terms.iter().position(|t| *t == next) {
            cycle_start = Some(pos);
            break;
        }
        terms.push(next);
    }
    let empty_limit = terms.iter().any(|t| t.is_empty());
    RelativeNu { terms, cycle_start, empty_limit }
}

/// Prefix/suffix cycle obstruction for type A viewed as a symmetric group:
/// true iff the cycle `(1 2 … k)` for some k < n, or `(k … n)` for some
/// k > 1, appears in the cycle decomposition. Sufficient for
/// non-rationality only. The permutation is given 0-based: `perm[i]` is the
/// image of i.
pub fn sn_cycle_obstruction(perm: &[u8]) -> bool {
    let n = perm.len();
    // prefix cycle (1 2 ... k), k < n: perm maps i ↦ i+1 cyclically on 0..k
    for k in 1..n {
        if (0..k - 1).all(|i| perm[i] == (i + 1) as u8) && perm[k - 1] == 0 {
            return true;
        }
    }
    // suffix cycle (k ... n), k > 1: on (k-1)..n 0-based
    for k in 2..=n {
        let lo = k - 1;
        if (lo..n - 1).all(|i| perm[i] == (i + 1) as u8) && perm[n - 1] == lo as u8 {
            return true;
        }
    }
    false
}

/// Which length-boundary element to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryKind {
    /// s_i·w₀
    SiW0,
    /// s_i·s_j·w₀, i ≠ j
    SiSjW0,
}

/// Closed-form rationality of the elements one or two reflections below
/// w₀: s_i·w₀ is rational iff w₀(α_i) ≠ −α_i; s_i·s_j·w₀ is rational iff
/// w₀(α_j) ∉ {−α_i, −α_j} and, when a_ij = 0, also w₀(α_i) ≠ −α_i.
pub fn len_boundary_rational(
    rs: &RootSystem,
    kind: BoundaryKind,
    w0: &WeylElement,
    i: usize,
    j: usize,
) -> bool {
    let minus_simple = |img: i16, s: usize| -> bool {
        img == -((rs.simple_index(s) + 1) as i16)
    };
    match kind {
        BoundaryKind::SiW0 => !minus_simple(w0.image(rs.simple_index(i)), i),
        BoundaryKind::SiSjW0 => {
            assert_ne!(i, j);
            let w0_aj = w0.image(rs.simple_index(j));
            if minus_simple(w0_aj, i) || minus_simple(w0_aj, j) {
                return false;
            }
            if rs.cartan(i, j) == 0 && minus_simple(w0.image(rs.simple_index(i)), i) {
                return false;
            }
            true
        }
    }
}
