//! The conjugation decomposition `g = N·B·ū·N⁻¹` in GL_n.
//!
//! The base case is the longest element: with `w̄₀` any representative,
//! `N₀(g) = [g·w̄₀⁻¹]₋` and `B₀(g) = [g·w̄₀⁻¹]⊕·w̄₀·[g·w̄₀⁻¹]₋·w̄₀⁻¹` give an
//! exact decomposition wherever the Gaussian factorization exists. For an
//! arbitrary target `u`, the solver iterates
//!
//! ```text
//! P₀ = B̃(g)·v̄·ū⁻¹,   P_k = [P_{k−1}]⊕ · ū·[P_{k−1}]₋·ū⁻¹
//! ```
//!
//! starting from any known solution `v` (default w₀) with maps `B̃`, `Ñ`.
//! Once some `P_m` lands in B₊ the sequence is constant and
//! `N = Ñ(g)·Ñ(P_m·ū)⁻¹` completes the decomposition; the identity is then
//! verified by exact multiplication before returning. Rational Weyl
//! elements stabilize; non-solutions stall and are reported with the full
//! iteration trace.

use crate::matgroup::{
    chevalley_y, gauss_decompose, longest_word, representative, NotGeneric, QMatrix, Rational,
};
use crate::roots::{Family, LieType, RootSystem};
use crate::weyl::WeylElement;
use num_traits::{One, Zero};
use std::fmt;

/// An exact decomposition g = N·B·ū·N⁻¹.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    /// N ∈ N₋ (unit lower-triangular).
    pub n_part: QMatrix,
    /// B ∈ B₊ (upper-triangular, nonzero diagonal).
    pub b_part: QMatrix,
    /// The representative ū the decomposition was solved against.
    pub representative: QMatrix,
    /// Index m at which the P-sequence entered B₊.
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Stabilized(usize),
    NotStabilized(usize),
    NotGeneric(usize),
}

/// The P_k / N_k terms of a solver run.
#[derive(Debug, Clone)]
pub struct IterationTrace {
    pub p_terms: Vec<QMatrix>,
    pub n_terms: Vec<QMatrix>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub enum SolveFailure {
    /// A Gaussian decomposition inside the iteration failed at this step.
    NotGeneric { step: usize },
    /// The cap was hit without the P-sequence entering B₊.
    NotStabilized { trace: IterationTrace },
}

impl fmt::Display for SolveFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveFailure::NotGeneric { step } => {
                write!(f, "input not generic: Gaussian decomposition failed at step {step}")
            }
            SolveFailure::NotStabilized { trace } => {
                write!(f, "did not stabilize within {} iterations", trace.p_terms.len() - 1)
            }
        }
    }
}

impl std::error::Error for SolveFailure {}

/// Base solution used to seed the iteration.
#[derive(Debug, Clone, Default)]
pub enum Base {
    /// The longest element with the standard representative.
    #[default]
    Longest,
    /// A previously solved element, given by a word; its maps are evaluated
    /// by solving from w₀ at every point where they are needed.
    Word(Vec<usize>),
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub base: Base,
    pub max_iter: usize,
    /// Replaces the standard representative of the target word.
    pub rep_override: Option<QMatrix>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { base: Base::Longest, max_iter: 64, rep_override: None }
    }
}

/// The w₀ base solution from the closed-form Gaussian formulas.
pub fn w0_solution(g: &QMatrix, w0_rep: &QMatrix) -> Result<Solution, NotGeneric> {
    let w0_inv = w0_rep.inverse().expect("representative is invertible");
    let pair = gauss_decompose(&g.mul(&w0_inv))?;
    let b = pair.upper.mul(w0_rep).mul(&pair.lower).mul(&w0_inv);
    let sol = Solution {
        n_part: pair.lower,
        b_part: b,
        representative: w0_rep.clone(),
        iterations: 0,
    };
    assert!(verify_solution(g, &sol), "w0 base identity must hold exactly");
    Ok(sol)
}

/// Exact check of g = N·B·ū·N⁻¹.
pub fn verify_solution(g: &QMatrix, sol: &Solution) -> bool {
    let n_inv = match sol.n_part.inverse() {
        Some(m) => m,
        None => return false,
    };
    sol.n_part.mul(&sol.b_part).mul(&sol.representative).mul(&n_inv) == *g
}

/// Evaluates the base maps (B̃, Ñ) at a point.
fn eval_base(
    h: &QMatrix,
    base: &Base,
    w0_rep: &QMatrix,
    w0_inv: &QMatrix,
    max_iter: usize,
) -> Result<(QMatrix, QMatrix), ()> {
    match base {
        Base::Longest => {
            let pair = gauss_decompose(&h.mul(w0_inv)).map_err(|_| ())?;
            let b = pair.upper.mul(w0_rep).mul(&pair.lower).mul(w0_inv);
            Ok((b, pair.lower))
        }
        Base::Word(v_word) => {
            let opts = SolveOptions { base: Base::Longest, max_iter, rep_override: None };
            let sol = solve(h, v_word, &opts).map_err(|_| ())?;
            Ok((sol.b_part, sol.n_part))
        }
    }
}

/// Evaluates only Ñ at a point; the iteration needs nothing else there.
fn eval_base_n(
    h: &QMatrix,
    base: &Base,
    w0_inv: &QMatrix,
    max_iter: usize,
) -> Result<QMatrix, ()> {
    match base {
        Base::Longest => Ok(gauss_decompose(&h.mul(w0_inv)).map_err(|_| ())?.lower),
        Base::Word(v_word) => {
            let opts = SolveOptions { base: Base::Longest, max_iter, rep_override: None };
            Ok(solve(h, v_word, &opts).map_err(|_| ())?.n_part)
        }
    }
}

/// Runs the parabolic-approximation iteration for the element given by
/// `u_word` (1-based simple indices in GL_n, so letters < n).
pub fn solve(g: &QMatrix, u_word: &[usize], opts: &SolveOptions) -> Result<Solution, SolveFailure> {
    let n = g.size();
    assert!(n >= 2, "GL_n needs n ≥ 2");
    for &i in u_word {
        assert!((1..n).contains(&i), "word letter {i} out of range for GL_{n}");
    }
    let u_rep = match &opts.rep_override {
        Some(m) => m.clone(),
        None => representative(n, u_word),
    };
    let u_inv = u_rep.inverse().expect("representative is invertible");
    let w0_rep = representative(n, &longest_word(n));
    let w0_inv = w0_rep.inverse().expect("representative is invertible");

    let v_rep = match &opts.base {
        Base::Longest => w0_rep.clone(),
        Base::Word(w) => representative(n, w),
    };

    let (b_at_g, n_at_g) = eval_base(g, &opts.base, &w0_rep, &w0_inv, opts.max_iter)
        .map_err(|_| SolveFailure::NotGeneric { step: 0 })?;

    let mut p = b_at_g.mul(&v_rep).mul(&u_inv);
    let mut p_terms = vec![p.clone()];
    let mut n_terms: Vec<QMatrix> = Vec::new();
    for k in 0..=opts.max_iter {
        let n_at_pu = eval_base_n(&p.mul(&u_rep), &opts.base, &w0_inv, opts.max_iter)
            .map_err(|_| SolveFailure::NotGeneric { step: k })?;
        let n_k = n_at_g.mul(&n_at_pu.inverse().expect("unipotent factor is invertible"));
        n_terms.push(n_k.clone());

        if p.is_upper_borel() {
            let sol = Solution {
                n_part: n_k,
                b_part: p.clone(),
                representative: u_rep.clone(),
                iterations: k,
            };
            assert!(verify_solution(g, &sol), "stabilized identity must hold exactly");
            return Ok(sol);
        }
        if k == opts.max_iter {
            break;
        }
        let pair = gauss_decompose(&p).map_err(|_| SolveFailure::NotGeneric { step: k + 1 })?;
        p = pair.upper.mul(&u_rep).mul(&pair.lower).mul(&u_inv);
        p_terms.push(p.clone());
    }
    Err(SolveFailure::NotStabilized {
        trace: IterationTrace {
            p_terms,
            n_terms,
            verdict: Verdict::NotStabilized(opts.max_iter),
        },
    })
}

/// Reconstructs N from B alone: N = [g·w̄₀⁻¹]₋ · ([B·ū·w̄₀⁻¹]₋)⁻¹.
pub fn n_from_b(
    g: &QMatrix,
    b_part: &QMatrix,
    u_rep: &QMatrix,
    w0_rep: &QMatrix,
) -> Result<QMatrix, NotGeneric> {
    let w0_inv = w0_rep.inverse().expect("representative is invertible");
    let n0_g = gauss_decompose(&g.mul(&w0_inv))?.lower;
    let n0_bu = gauss_decompose(&b_part.mul(u_rep).mul(&w0_inv))?.lower;
    Ok(n0_g.mul(&n0_bu.inverse().expect("unipotent factor is invertible")))
}

/// Checks B(n·g·n⁻¹) = B(g) and N(n·g·n⁻¹) = n·N(g) by two solver runs.
pub fn conjugation_invariance_check(
    g: &QMatrix,
    n: &QMatrix,
    u_word: &[usize],
    opts: &SolveOptions,
) -> Result<bool, SolveFailure> {
    assert!(n.is_unit_lower(), "conjugator must be unit lower-triangular");
    let sol = solve(g, u_word, opts)?;
    let conj = n.mul(g).mul(&n.inverse().expect("unipotent"));
    let sol_conj = solve(&conj, u_word, opts)?;
    Ok(sol_conj.b_part == sol.b_part && sol_conj.n_part == n.mul(&sol.n_part))
}

/// n ≠ 1 with n⁻¹·b·ū·n·ū⁻¹ ∈ B₊ certifies a fiber collision for u.
pub fn check_fiber_collision(b: &QMatrix, u_rep: &QMatrix, n: &QMatrix) -> bool {
    if n == &QMatrix::identity(n.size()) {
        return false;
    }
    let n_inv = n.inverse().expect("unipotent conjugator is invertible");
    let u_inv = u_rep.inverse().expect("representative is invertible");
    n_inv.mul(b).mul(u_rep).mul(n).mul(&u_inv).is_upper_borel()
}

/// A fiber-collision witness.
#[derive(Debug, Clone)]
pub struct Witness {
    pub matrix: QMatrix,
    /// True when the formula degenerates to the identity, which certifies
    /// nothing.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessError {
    /// The element does not fix the requested simple root / does not have
    /// the requested cycle.
    PreconditionViolated(String),
    /// b is outside the domain of the witness formula (zero coefficient or
    /// vanishing denominator).
    DegenerateInput(String),
    /// The constructed witness failed the exact collision check.
    VerificationFailed,
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::PreconditionViolated(m) => write!(f, "precondition violated: {m}"),
            WitnessError::DegenerateInput(m) => write!(f, "degenerate input: {m}"),
            WitnessError::VerificationFailed => f.write_str("witness failed the exact check"),
        }
    }
}

impl std::error::Error for WitnessError {}

fn type_a_system(n: usize) -> RootSystem {
    RootSystem::build(LieType::new(Family::A, n - 1)).expect("A_{n-1} is admissible")
}

/// The scaling constant r with ū·y_i(t)·ū⁻¹ = y_j(r·t), provided the
/// conjugate is a lower elementary matrix at position j.
fn conjugation_scale(u_rep: &QMatrix, i: usize, j: usize) -> Option<Rational> {
    let n = u_rep.size();
    let m = u_rep
        .mul(&chevalley_y(n, i, &Rational::one()))
        .mul(&u_rep.inverse().expect("invertible"));
    let r = m[(j, j - 1)].clone();
    if m == chevalley_y(n, j, &r) {
        Some(r)
    } else {
        None
    }
}

/// Witness for an element fixing a simple root α: n = y_α(c) with
/// c = (r·a^{−α} − 1)/(r·t), where b = a·x_α(t)·n′ and ū·y_α(s)·ū⁻¹ = y_α(r·s).
pub fn fixer_witness(
    b: &QMatrix,
    u_word: &[usize],
    alpha_index: usize,
) -> Result<Witness, WitnessError> {
    let n = b.size();
    if !b.is_upper_borel() {
        return Err(WitnessError::PreconditionViolated("b must be upper Borel".into()));
    }
    if !(1..n).contains(&alpha_index) {
        return Err(WitnessError::PreconditionViolated(format!(
            "simple index {alpha_index} out of range for GL_{n}"
        )));
    }
    let rs = type_a_system(n);
    let u = WeylElement::from_word(&rs, u_word)
        .map_err(|e| WitnessError::PreconditionViolated(e.to_string()))?;
    let alpha = rs.simple_index(alpha_index);
    if u.image(alpha) != (alpha + 1) as i16 {
        return Err(WitnessError::PreconditionViolated(format!(
            "element does not fix the simple root α{alpha_index}"
        )));
    }

    let i = alpha_index;
    let t = &b[(i - 1, i)] / &b[(i - 1, i - 1)];
    if t.is_zero() {
        return Err(WitnessError::DegenerateInput("coefficient of x_α in b is zero".into()));
    }
    let u_rep = representative(n, u_word);
    let r = conjugation_scale(&u_rep, i, i)
        .expect("an element fixing α conjugates y_α to itself");
    let a_neg_alpha = &b[(i, i)] / &b[(i - 1, i - 1)];
    let c = (&r * &a_neg_alpha - Rational::one()) / (&r * &t);
    if c.is_zero() {
        return Ok(Witness { matrix: QMatrix::identity(n), degenerate: true });
    }
    let witness = chevalley_y(n, i, &c);
    if check_fiber_collision(b, &u_rep, &witness) {
        Ok(Witness { matrix: witness, degenerate: false })
    } else {
        Err(WitnessError::VerificationFailed)
    }
}

/// Witness for a Γ(u)-cycle of pairwise orthogonal simple roots
/// α_{i₁}, …, α_{i_m} with u(α_{i_j}) = α_{i_{j−1}}:
/// n = ∏ y_{i_j}(c_j) with c_j = (∏g_k − ∏a_k)/(a_j·g_j·D_j).
pub fn ortho_cycle_witness(
    b: &QMatrix,
    u_word: &[usize],
    cycle: &[usize],
) -> Result<Witness, WitnessError> {
    let n = b.size();
    if !b.is_upper_borel() {
        return Err(WitnessError::PreconditionViolated("b must be upper Borel".into()));
    }
    let m = cycle.len();
    if m < 2 {
        return Err(WitnessError::PreconditionViolated(
            "cycle needs at least two roots; use the fixer witness for loops".into(),
        ));
    }
    let rs = type_a_system(n);
    for &i in cycle {
        if !(1..n).contains(&i) {
            return Err(WitnessError::PreconditionViolated(format!(
                "simple index {i} out of range for GL_{n}"
            )));
        }
    }
    for (p, &ip) in cycle.iter().enumerate() {
        for &iq in cycle.iter().skip(p + 1) {
            if ip == iq {
                return Err(WitnessError::PreconditionViolated("repeated cycle index".into()));
            }
            if rs.cartan(ip, iq) != 0 {
                return Err(WitnessError::PreconditionViolated(format!(
                    "roots α{ip} and α{iq} are not orthogonal"
                )));
            }
        }
    }
    let u = WeylElement::from_word(&rs, u_word)
        .map_err(|e| WitnessError::PreconditionViolated(e.to_string()))?;
    for j in 0..m {
        let prev = cycle[(j + m - 1) % m];
        let cur = cycle[j];
        if u.image(rs.simple_index(cur)) != (rs.simple_index(prev) + 1) as i16 {
            return Err(WitnessError::PreconditionViolated(format!(
                "u does not map α{cur} to α{prev}"
            )));
        }
    }

    let u_rep = representative(n, u_word);
    // g_j: ū·y_{i_j}(t)·ū⁻¹ = y_{i_{j−1}}(g_j·t)
    let g_consts: Vec<Rational> = (0..m)
        .map(|j| {
            let prev = cycle[(j + m - 1) % m];
            conjugation_scale(&u_rep, cycle[j], prev)
                .expect("cycle condition makes the conjugate elementary")
        })
        .collect();
    let a_consts: Vec<Rational> =
        cycle.iter().map(|&i| &b[(i - 1, i - 1)] / &b[(i, i)]).collect();
    let t_consts: Vec<Rational> =
        cycle.iter().map(|&i| &b[(i - 1, i)] / &b[(i - 1, i - 1)]).collect();

    let g_prod: Rational = g_consts.iter().product();
    let a_prod: Rational = a_consts.iter().product();
    if g_prod == a_prod {
        return Ok(Witness { matrix: QMatrix::identity(n), degenerate: true });
    }

    let mut c_consts = Vec::with_capacity(m);
    for j in 0..m {
        // D_j = Σ_s t_{j+s} · (Π_{l≤s} a_{j+l}) · (Π_{k∉{j..j+s}} g_k)
        let mut d = Rational::zero();
        for s in 0..m {
            let mut term = t_consts[(j + s) % m].clone();
            for l in 1..=s {
                term *= &a_consts[(j + l) % m];
            }
            for k in s + 1..m {
                term *= &g_consts[(j + k) % m];
            }
            d += term;
        }
        if d.is_zero() {
            return Err(WitnessError::DegenerateInput(format!("denominator D_{j} vanishes")));
        }
        let denom = &a_consts[j] * &g_consts[j] * d;
        if denom.is_zero() {
            return Err(WitnessError::DegenerateInput("vanishing a_j·g_j".into()));
        }
        c_consts.push((&g_prod - &a_prod) / denom);
    }

    let mut witness = QMatrix::identity(n);
    for (j, &i) in cycle.iter().enumerate() {
        witness = witness.mul(&chevalley_y(n, i, &c_consts[j]));
    }
    if check_fiber_collision(b, &u_rep, &witness) {
        Ok(Witness { matrix: witness, degenerate: false })
    } else {
        Err(WitnessError::VerificationFailed)
    }
}

/// Elements of ν⁰(u) that are fixed simple roots, usable by
/// [`fixer_witness`]; 1-based simple indices.
pub fn fixed_simple_roots(rs: &RootSystem, u: &WeylElement) -> Vec<usize> {
    (1..=rs.rank())
        .filter(|&i| {
            let idx = rs.simple_index(i);
            u.image(idx) == (idx + 1) as i16
        })
        .collect()
}
