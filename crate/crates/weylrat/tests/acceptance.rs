//! Acceptance suite. Each test checks one criterion end to end and prints
//! a single PASS line (visible with `--nocapture`); cargo's own per-test
//! status gives the pass/fail summary. The two `#[ignore]`d tests are the
//! long opt-in sweeps:
//!
//! ```text
//! cargo test --release -p weylrat --test acceptance -- --ignored
//! ```

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylrat::atlas::{self, AtlasOptions};
use weylrat::decompose::{self, SolveFailure, SolveOptions, Verdict};
use weylrat::matgroup::{gauss_decompose, rat, representative, QMatrix};
use weylrat::rationality::{self, BoundaryKind};
use weylrat::roots::{Family, LieType, RootSystem};
use weylrat::weyl::{self, WeylElement};

fn rs(f: Family, r: usize) -> RootSystem {
    RootSystem::build(LieType::new(f, r)).unwrap()
}

fn pass(criterion: &str, detail: &str, elapsed: Duration) {
    println!("PASS {criterion}: {detail} ({elapsed:.2?})");
}

fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> QMatrix {
    QMatrix::from_rows(
        (0..n).map(|_| (0..n).map(|_| rat(rng.random_range(-9..=9))).collect()).collect(),
    )
}

/// Seeded small-integer matrices, rejection-sampled until `accept`.
fn generic_matrix<F: Fn(&QMatrix) -> bool>(n: usize, rng: &mut ChaCha8Rng, accept: F) -> QMatrix {
    loop {
        let g = random_matrix(n, rng);
        if accept(&g) {
            return g;
        }
    }
}

#[test]
fn criterion_01_type_a_counts() {
    let t0 = Instant::now();
    let expected = [1u64, 3, 7, 25, 89, 379, 1679, 8289];
    for (r, &want) in (1..=8).zip(expected.iter()) {
        let rs = rs(Family::A, r);
        assert_eq!(atlas::count_rational(&rs, 1), want, "A{r}");
    }
    let small = t0.elapsed();
    assert!(small < Duration::from_secs(30), "A1..A8 took {small:?}, budget 30 s");

    let t9 = Instant::now();
    assert_eq!(atlas::count_rational(&rs(Family::A, 9), 1), 42_561);
    let a9 = t9.elapsed();
    assert!(a9 < Duration::from_secs(300), "A9 took {a9:?}, budget 5 min");

    pass("criterion 1", "A1..A8 = 1,3,7,25,89,379,1679,8289 and A9 = 42561", t0.elapsed());
}

#[test]
#[ignore = "long opt-in sweep (~1 min with 4 workers)"]
fn criterion_01_opt_in_a10() {
    let t0 = Instant::now();
    assert_eq!(atlas::count_rational(&rs(Family::A, 10), 4), 236_099);
    pass("criterion 1 (opt-in)", "A10 = 236099 with 4 workers", t0.elapsed());
}

#[test]
fn criterion_02_type_d_and_e6_counts() {
    let t0 = Instant::now();
    assert_eq!(atlas::count_rational(&rs(Family::D, 5), 1), 31);
    assert_eq!(atlas::count_rational(&rs(Family::E, 6), 1), 397);
    let fast = t0.elapsed();
    assert!(fast < Duration::from_secs(30), "D5+E6 took {fast:?}, budget 30 s");

    let t7 = Instant::now();
    assert_eq!(atlas::count_rational(&rs(Family::D, 7), 1), 127);
    let d7 = t7.elapsed();
    assert!(d7 < Duration::from_secs(120), "D7 took {d7:?}, budget 2 min");

    pass("criterion 2", "D5 = 31, D7 = 127, E6 = 397", t0.elapsed());
}

#[test]
#[ignore = "long opt-in sweep (~2 min with 4 workers)"]
fn criterion_02_opt_in_d9() {
    let t0 = Instant::now();
    assert_eq!(atlas::count_rational(&rs(Family::D, 9), 4), 511);
    pass("criterion 2 (opt-in)", "D9 = 511 with 4 workers", t0.elapsed());
}

#[test]
fn criterion_03_gamma_structure() {
    let t0 = Instant::now();
    // connected multi-vertex graphs
    let multi = [
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::A, 5),
        (Family::D, 5),
        (Family::E, 6),
    ];
    for &(f, r) in &multi {
        let rs = rs(f, r);
        let atlas = atlas::build_atlas(&rs, &AtlasOptions::default()).unwrap();
        assert!(atlas.is_connected(), "{f:?}{r} must be connected");
        assert!(atlas.count() > 1, "{f:?}{r} must have several vertices");
        assert!(atlas::check_z2_symmetry(&rs, &atlas), "{f:?}{r} Z2 symmetry");
    }
    // single-vertex graphs
    let single = [
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
        (Family::F, 4),
        (Family::G, 2),
        (Family::A, 1),
    ];
    for &(f, r) in &single {
        let rs = rs(f, r);
        let atlas = atlas::build_atlas(&rs, &AtlasOptions::default()).unwrap();
        assert_eq!(atlas.count(), 1, "{f:?}{r} must be a single vertex");
        assert!(atlas.edges.is_empty(), "{f:?}{r}");
        assert!(atlas::check_z2_symmetry(&rs, &atlas), "{f:?}{r} Z2 symmetry");
        // the single vertex is w0
        let w0 = weyl::longest_element(&rs);
        assert_eq!(atlas.vertex_index(&rs, &w0), Some(0), "{f:?}{r}");
    }
    pass(
        "criterion 3",
        "connectivity, single-vertex types, and Z2 symmetry on all computed atlases",
        t0.elapsed(),
    );
}

#[test]
fn criterion_04_appendix_figures() {
    let t0 = Instant::now();
    // Γ(A3): 7 vertices forming a path; valency-1 exactly at C and C⁻¹
    let a3 = rs(Family::A, 3);
    let atlas_a3 = atlas::build_atlas(&a3, &AtlasOptions::default()).unwrap();
    assert_eq!(atlas_a3.count(), 7);
    let mut valencies = atlas_a3.valencies.clone();
    valencies.sort();
    assert_eq!(valencies, vec![1, 1, 2, 2, 2, 2, 2]);
    let c = WeylElement::from_word(&a3, &[1, 2, 3]).unwrap();
    let mut v1 = atlas_a3.vertices_of_valency(1);
    v1.sort();
    let mut expect = vec![
        atlas_a3.vertex_index(&a3, &c).unwrap(),
        atlas_a3.vertex_index(&a3, &c.inverse()).unwrap(),
    ];
    expect.sort();
    assert_eq!(v1, expect);

    // Γ(D5): 31 vertices, two of valency 1
    let d5 = rs(Family::D, 5);
    let atlas_d5 = atlas::build_atlas(&d5, &AtlasOptions::default()).unwrap();
    assert_eq!(atlas_d5.count(), 31);
    let observed = atlas_d5.vertices_of_valency(1).len();
    assert_eq!(observed, 2, "observed valency-1 count in Γ(D5)");

    pass(
        "criterion 4",
        "Γ(A3) has 7 vertices, valencies [1,1,2,2,2,2,2] at C, C⁻¹; Γ(D5) has 31 vertices, 2 of valency 1",
        t0.elapsed(),
    );
}

#[test]
fn criterion_05_coxeter_classification() {
    let t0 = Instant::now();
    for r in 2..=5 {
        let a = rs(Family::A, r);
        let rep = atlas::coxeter_report(&a);
        let c = WeylElement::from_word(&a, &(1..=r).collect::<Vec<_>>()).unwrap();
        let want: HashSet<WeylElement> = [c.clone(), c.inverse()].into_iter().collect();
        let got: HashSet<WeylElement> = rep.rational.iter().cloned().collect();
        assert_eq!(got, want, "A{r} rational Coxeter elements");
        assert_eq!(rep.valencies, vec![1, 1], "A{r} valencies");
    }
    for (f, r) in [(Family::D, 4), (Family::D, 5), (Family::E, 6)] {
        let rs = rs(f, r);
        let rep = atlas::coxeter_report(&rs);
        assert!(rep.rational.is_empty(), "{f:?}{r} has no rational Coxeter elements");
        assert!(rep.total > 0);
    }
    pass(
        "criterion 5",
        "A2..A5 have exactly {C, C⁻¹} rational (valency 1); D4, D5, E6 have none",
        t0.elapsed(),
    );
}

#[test]
fn criterion_06_special_d5_element() {
    let t0 = Instant::now();
    let d5 = rs(Family::D, 5);
    let c = weyl::special_d_element(&d5).unwrap();
    assert_eq!(c.length(), 13);
    let c2 = c.mul(&c);
    assert!(!c2.is_identity());
    assert!(c2.mul(&c2).is_identity(), "order 4");
    assert_eq!(weyl::epsilon(&d5, &c), c.inverse());

    let nu = rationality::nu_sequence(&d5, &c);
    assert_eq!(nu.terms[0].len(), 7);
    assert_eq!(nu.terms[1].len(), 3);
    assert!(nu.terms[2].is_empty());

    let atlas = atlas::build_atlas(&d5, &AtlasOptions::default()).unwrap();
    let ci = atlas.vertex_index(&d5, &c).unwrap();
    let neighbors: Vec<usize> = atlas
        .edges
        .iter()
        .filter_map(|&(u, v, _)| {
            if u == ci {
                Some(v)
            } else if v == ci {
                Some(u)
            } else {
                None
            }
        })
        .collect();
    let s4c = c.mul_simple_left(&d5, 4);
    assert_eq!(neighbors, vec![atlas.vertex_index(&d5, &s4c).unwrap()]);

    pass(
        "criterion 6",
        "ℓ=13, order 4, ε(C)=C⁻¹, |ν⁰|=7, |ν¹|=3, ν²=∅, unique neighbor s4·C",
        t0.elapsed(),
    );
}

/// Words of every rational element of a type-A rank, via the atlas.
fn rational_words(rs: &RootSystem) -> Vec<Vec<usize>> {
    let atlas = atlas::build_atlas(rs, &AtlasOptions::default()).unwrap();
    atlas
        .rational_elements
        .iter()
        .map(|c| weyl::from_compact(rs, c).reduced_word(rs))
        .collect()
}

#[test]
fn criterion_07_decomposition_positive() {
    let t0 = Instant::now();
    let opts = SolveOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(1807);
    let mut cases = 0;
    for (rank, gl) in [(2usize, 3usize), (3, 4)] {
        let a = rs(Family::A, rank);
        let words = rational_words(&a);
        assert_eq!(words.len(), if rank == 2 { 3 } else { 7 });
        for word in &words {
            let u = WeylElement::from_word(&a, word).unwrap();
            let emptying = rationality::nu_sequence(&a, &u).emptying_index().unwrap();
            let mut max_iter_seen = 0;
            for _ in 0..20 {
                let g = generic_matrix(gl, &mut rng, |g| {
                    !matches!(
                        decompose::solve(g, word, &opts),
                        Err(SolveFailure::NotGeneric { .. })
                    )
                });
                let sol = decompose::solve(&g, word, &opts)
                    .unwrap_or_else(|e| panic!("A{rank} word {word:?} failed: {e}"));
                assert!(decompose::verify_solution(&g, &sol), "exact identity");
                assert!(sol.n_part.is_unit_lower());
                assert!(sol.b_part.is_upper_borel());
                max_iter_seen = max_iter_seen.max(sol.iterations);
                cases += 1;
            }
            // observed stabilization step vs. the ν-emptying index; recorded
            // for the report, not asserted
            println!(
                "  A{rank} word {word:?}: stabilized in ≤ {max_iter_seen} steps (ν empties at {emptying})"
            );
        }
    }
    let elapsed = t0.elapsed();
    assert_eq!(cases, (3 + 7) * 20);
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}, budget 10 s");
    pass(
        "criterion 7",
        "all rational u of A2 (GL3) and A3 (GL4) stabilize with exact identities on 20 seeds each",
        elapsed,
    );
}

#[test]
fn criterion_08_decomposition_negative() {
    let t0 = Instant::now();
    let opts = SolveOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(1870);
    for word in [vec![], vec![1usize], vec![2usize]] {
        for _ in 0..20 {
            let g = generic_matrix(3, &mut rng, |g| {
                !matches!(
                    decompose::solve(g, &word, &opts),
                    Err(SolveFailure::NotGeneric { .. })
                )
            });
            match decompose::solve(&g, &word, &opts) {
                Err(SolveFailure::NotStabilized { trace }) => {
                    assert_eq!(trace.verdict, Verdict::NotStabilized(64));
                    assert!(trace.p_terms.iter().all(|p| !p.is_upper_borel()));
                }
                other => panic!("A2 word {word:?} should stall, got {other:?}"),
            }
        }
    }
    pass(
        "criterion 8",
        "the non-rational A2 elements (id, s1, s2) return NotStabilized(64) on 20 seeds each",
        t0.elapsed(),
    );
}

#[test]
fn criterion_09_gl2_closed_form() {
    let t0 = Instant::now();
    // permutation representative, as in the closed formulas
    let mut w0 = QMatrix::zero(2);
    w0[(0, 1)] = rat(1);
    w0[(1, 0)] = rat(1);
    let mut rng = ChaCha8Rng::seed_from_u64(1905);
    let mut done = 0;
    while done < 50 {
        let x = random_matrix(2, &mut rng);
        if x[(0, 1)].is_zero() || x.inverse().is_none() {
            continue;
        }
        let sol = decompose::w0_solution(&x, &w0).unwrap();
        let det = &x[(0, 0)] * &x[(1, 1)] - &x[(0, 1)] * &x[(1, 0)];
        assert_eq!(sol.n_part[(1, 0)], &x[(1, 1)] / &x[(0, 1)], "N21 = x22/x12");
        assert_eq!(sol.b_part[(0, 0)], x[(0, 1)], "B11 = x12");
        assert_eq!(sol.b_part[(0, 1)], &x[(0, 0)] + &x[(1, 1)], "B12 = x11+x22");
        assert_eq!(sol.b_part[(1, 1)], -&det / &x[(0, 1)], "B22 = -det/x12");
        done += 1;
    }
    pass("criterion 9", "w0_solution matches the GL2 closed form on 50 seeded inputs", t0.elapsed());
}

#[test]
fn criterion_10_property_suites() {
    let t0 = Instant::now();

    // ν-descent + acyclicity oracle agreement + |ν⁰| law, exhaustively
    for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::D, 4)] {
        let rsys = rs(f, r);
        for c in weyl::enumerate_group(&rsys) {
            let u = weyl::from_compact(&rsys, &c);
            let nu = rationality::nu_sequence(&rsys, &u);
            for k in 1..nu.terms.len() {
                assert!(nu.terms[k].is_subset_of(&nu.terms[k - 1]));
            }
            assert_eq!(
                rationality::is_rational(&rsys, &u),
                rationality::is_rational_by_acyclicity(&rsys, &u)
            );
            assert_eq!(nu.terms[0].len(), rsys.num_positive() - u.length());
        }
    }

    // path characterization, ranks ≤ 3, k ≤ 4
    for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::G, 2)] {
        let rsys = rs(f, r);
        for c in weyl::enumerate_group(&rsys) {
            let u = weyl::from_compact(&rsys, &c);
            let nu = rationality::nu_sequence(&rsys, &u);
            let g = rationality::gamma(&rsys, &u);
            fn reach(g: &rationality::RatGraph, from: usize, k: usize) -> bool {
                if k == 0 {
                    return true;
                }
                let i = g.vertices.binary_search(&from).unwrap();
                g.rows[i].iter().any(|t| reach(g, t, k - 1))
            }
            for k in 0..=4usize {
                let term = if k < nu.terms.len() { nu.terms[k] } else { nu.limit };
                for &alpha in &g.vertices {
                    assert_eq!(term.contains(alpha), reach(&g, alpha, k));
                }
            }
        }
    }

    // length-boundary characterizations: exhaustive A4 and D5, all E6 pairs
    for (f, r) in [(Family::A, 4), (Family::D, 5), (Family::E, 6)] {
        let rsys = rs(f, r);
        let w0 = weyl::longest_element(&rsys);
        for i in 1..=r {
            let predicted = rationality::len_boundary_rational(&rsys, BoundaryKind::SiW0, &w0, i, 0);
            assert_eq!(predicted, rationality::is_rational(&rsys, &w0.mul_simple_left(&rsys, i)));
            for j in 1..=r {
                if i != j {
                    let predicted =
                        rationality::len_boundary_rational(&rsys, BoundaryKind::SiSjW0, &w0, i, j);
                    let u = w0.mul_simple_left(&rsys, j).mul_simple_left(&rsys, i);
                    assert_eq!(predicted, rationality::is_rational(&rsys, &u), "{f:?}{r} s{i}s{j}w0");
                }
            }
        }
    }

    // relative sandwich on deterministic A4 pairs
    {
        let rsys = rs(Family::A, 4);
        let all: Vec<WeylElement> =
            weyl::enumerate_group(&rsys).map(|c| weyl::from_compact(&rsys, &c)).collect();
        let mut a = 5usize;
        for _ in 0..100 {
            a = (a * 131 + 7) % all.len();
            let b = (a * 89 + 3) % all.len();
            let (u, v) = (&all[a], &all[b]);
            let letters: HashSet<usize> =
                u.mul(&v.inverse()).reduced_word(&rsys).into_iter().collect();
            let rel =
                rationality::relative_nu(&rsys, u, v, rationality::default_max_terms(&rsys));
            let adj0 = rsys.adj(&rel.terms[0]);
            for &i in &letters {
                assert!(adj0.contains(rsys.simple_index(i)));
            }
            for t in adj0.iter() {
                for (k, &ck) in rsys.root(t).coeffs.iter().enumerate() {
                    if ck != 0 {
                        assert!(letters.contains(&(k + 1)));
                    }
                }
            }
        }
    }

    // Gaussian property suite: (n₋g)₋ = n₋g₋, (g·a·n₊)₋ = g₋, (a·g)₋ = a·g₋·a⁻¹
    {
        let mut rng = ChaCha8Rng::seed_from_u64(1931);
        for _ in 0..20 {
            let g = generic_matrix(3, &mut rng, |g| gauss_decompose(g).is_ok());
            let g_minus = gauss_decompose(&g).unwrap().lower;
            let mut n_minus = QMatrix::identity(3);
            n_minus[(1, 0)] = rat(rng.random_range(-5..=5));
            n_minus[(2, 0)] = rat(rng.random_range(-5..=5));
            n_minus[(2, 1)] = rat(rng.random_range(-5..=5));
            let mut n_plus = QMatrix::identity(3);
            n_plus[(0, 1)] = rat(rng.random_range(-5..=5));
            n_plus[(0, 2)] = rat(rng.random_range(-5..=5));
            n_plus[(1, 2)] = rat(rng.random_range(-5..=5));
            let mut a = QMatrix::identity(3);
            for i in 0..3 {
                a[(i, i)] = rat([2, -3, 5][(i + rng.random_range(0..3usize)) % 3]);
            }
            assert_eq!(gauss_decompose(&n_minus.mul(&g)).unwrap().lower, n_minus.mul(&g_minus));
            assert_eq!(gauss_decompose(&g.mul(&a).mul(&n_plus)).unwrap().lower, g_minus);
            assert_eq!(
                gauss_decompose(&a.mul(&g)).unwrap().lower,
                a.mul(&g_minus).mul(&a.inverse().unwrap())
            );
        }
    }

    // conjugation invariance and n_from_b consistency in GL3
    {
        let mut rng = ChaCha8Rng::seed_from_u64(1944);
        let opts = SolveOptions::default();
        let mut n = QMatrix::identity(3);
        n[(1, 0)] = rat(2);
        n[(2, 0)] = rat(-3);
        n[(2, 1)] = rat(1);
        for _ in 0..5 {
            let g = generic_matrix(3, &mut rng, |g| {
                decompose::conjugation_invariance_check(g, &n, &[1, 2], &opts).is_ok()
            });
            assert!(decompose::conjugation_invariance_check(&g, &n, &[1, 2], &opts).unwrap());
            let sol = decompose::solve(&g, &[1, 2], &opts).unwrap();
            let w0_rep = representative(3, &weylrat::matgroup::longest_word(3));
            let n_re = decompose::n_from_b(&g, &sol.b_part, &sol.representative, &w0_rep).unwrap();
            assert_eq!(n_re, sol.n_part);
        }
    }

    // witness fiber collisions: fixer and orthogonal 2-cycle
    {
        let b = QMatrix::from_i64_rows(&[&[2, 2], &[0, 3]]);
        let w = decompose::fixer_witness(&b, &[], 1).unwrap();
        assert!(!w.degenerate);
        assert!(decompose::check_fiber_collision(&b, &representative(2, &[]), &w.matrix));

        let mut rng = ChaCha8Rng::seed_from_u64(1953);
        let u_word = [2usize, 1, 3, 2];
        let mut done = 0;
        while done < 5 {
            let mut b = random_matrix(4, &mut rng);
            for i in 0..4 {
                for j in 0..i {
                    b[(i, j)] = rat(0);
                }
                if b[(i, i)].is_zero() {
                    b[(i, i)] = rat(1);
                }
            }
            match decompose::ortho_cycle_witness(&b, &u_word, &[1, 3]) {
                Ok(w) if !w.degenerate => {
                    assert!(decompose::check_fiber_collision(
                        &b,
                        &representative(4, &u_word),
                        &w.matrix
                    ));
                    done += 1;
                }
                _ => continue,
            }
        }
    }

    pass(
        "criterion 10",
        "descent, path characterization, oracle agreement, |ν⁰| law, sandwich, boundary laws, \
         Gaussian suite, conjugation invariance, n_from_b, witness collisions",
        t0.elapsed(),
    );
}
