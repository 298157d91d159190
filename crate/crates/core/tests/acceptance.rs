//! Acceptance criteria. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits non-zero if any fails.

use std::time::{Duration, Instant};

use mediahom::collision::{
    build_channel, imperfect_controller_sequence, ChannelTemplate, CollisionChannel, ControllerSequence,
    ControllerStep, Superoperator,
};
use mediahom::convergence::{
    check_invariance, entropy_ratio, forgetting_metric, haag_mixture_check, is_relaxing,
    iterative_fixed_point, spectral_fixed_point,
};
use mediahom::network::{
    chain_graph, excitation_observable, interaction_hamiltonian, swap_network_hamiltonian,
    swap_operator, xxz_hamiltonian, CouplingGraph, Model, NetworkSpec,
};
use mediahom::qmath::random::{random_density, random_unitary};
use mediahom::qmath::{
    basis_ket, concurrence, kron, partial_trace, tensor, von_neumann_entropy, ComplexMatrix,
    DensityMatrix, SubsystemShape,
};
use mediahom::scenario::{linspace, Scenario, ScenarioConfig};
use mediahom::{Complex64, Error};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn chain_channel(n: usize, d: usize, model: Model, omega: &DensityMatrix, t: f64) -> Result<CollisionChannel, String> {
    let spec = NetworkSpec::new(chain_graph(n, 1.0).map_err(err)?, d, model, vec![]).map_err(err)?;
    let h_a = match model {
        Model::SwapNetwork => swap_network_hamiltonian(&spec),
        Model::Xxz { .. } => xxz_hamiltonian(&spec),
    }
    .map_err(err)?;
    let shape = SubsystemShape::uniform(n + 1, d).map_err(err)?;
    let h_i = interaction_hamiltonian(&shape, &[(n, n - 1)]).map_err(err)?;
    build_channel(&h_a, &h_i, omega, t).map_err(err)
}

fn scenario(json: serde_json::Value) -> Result<Scenario, String> {
    let cfg = ScenarioConfig::from_value(json).map_err(err)?;
    Scenario::new(&cfg).map_err(err)
}

/// 1. Swap chain N=3, d=2, t=0.5, 20 random mixed ω.
fn swap_chain_homogenization() -> Outcome {
    let started = Instant::now();
    let mut r = rng(1001);
    let mut worst_steps = 0;
    let mut worst_spectral: f64 = 0.0;
    for trial in 0..20 {
        let omega = random_density(&mut r, 2);
        let target = omega.power(3).map_err(err)?;
        let ch = chain_channel(3, 2, Model::SwapNetwork, &omega, 0.5)?;
        let mut rho = DensityMatrix::pure(&basis_ket(8, 0)).map_err(err)?;
        let mut steps = 0;
        while rho.trace_distance(&target).map_err(err)? > 1e-6 {
            ensure(steps < 5000, || format!("trial {trial}: not within 1e-6 after 5000 collisions"))?;
            rho = ch.apply(&rho).map_err(err)?;
            steps += 1;
        }
        worst_steps = worst_steps.max(steps);
        let spectral = spectral_fixed_point(&ch.superoperator().map_err(err)?).map_err(err)?;
        let d = spectral.trace_distance(&target).map_err(err)?;
        worst_spectral = worst_spectral.max(d);
        ensure(d <= 1e-7, || format!("trial {trial}: spectral fixed point off by {d:.2e}"))?;
        let (iterated, _) = iterative_fixed_point(&ch, &rho, 1e-12, 100_000).map_err(err)?;
        let cross = iterated.trace_distance(&spectral).map_err(err)?;
        ensure(cross <= 1e-7, || format!("trial {trial}: solvers differ by {cross:.2e}"))?;
    }
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:.2?}"))?;
    Ok(format!(
        "max collisions {worst_steps}, max spectral distance {worst_spectral:.1e}, {elapsed:.2?}"
    ))
}

/// 2. Swap pair of qutrits.
fn qudit_case() -> Outcome {
    let mut r = rng(1002);
    let mut worst: f64 = 0.0;
    for _ in 0..5 {
        let omega = random_density(&mut r, 3);
        let ch = chain_channel(2, 3, Model::SwapNetwork, &omega, 0.5)?;
        let rho = spectral_fixed_point(&ch.superoperator().map_err(err)?).map_err(err)?;
        worst = worst.max(rho.trace_distance(&omega.power(2).map_err(err)?).map_err(err)?);
    }
    ensure(worst <= 1e-6, || format!("fixed point off by {worst:.2e}"))?;
    Ok(format!("max distance to ω⊗ω {worst:.1e}"))
}

/// 3. XXZ chain N=3, diagonal bath, several anisotropies.
fn diagonal_bath_xxz() -> Outcome {
    let omega = DensityMatrix::from_populations(&[0.7, 0.3]).map_err(err)?;
    let target = omega.power(3).map_err(err)?;
    let mut details = Vec::new();
    for delta in [0.0, 0.5, 2.0] {
        let ch = chain_channel(3, 2, Model::Xxz { delta }, &omega, 0.5)?;
        let rho = spectral_fixed_point(&ch.superoperator().map_err(err)?).map_err(err)?;
        let d = rho.trace_distance(&target).map_err(err)?;
        ensure(d <= 1e-6, || format!("Δ={delta}: fixed point off by {d:.2e}"))?;
        let inv = check_invariance(ch.joint_unitary(), &target, &omega, 1e-9).map_err(err)?;
        ensure(inv.passed, || format!("Δ={delta}: commutator {:.2e}", inv.commutator_norm))?;
        details.push(format!("Δ={delta}: {d:.1e}/{:.1e}", inv.commutator_norm));
    }
    Ok(details.join(", "))
}

fn xx_chain_config(p: f64) -> serde_json::Value {
    serde_json::json!({
        "model": "xxz", "n": 4, "delta": 0.0, "t": 0.5,
        "baths": [{"site": 3, "state": {"mix": {"p": p, "a": "zero", "b": "minus"}}}],
        "solver": "spectral"
    })
}

/// 4. XX chain N=4 with the p|0⟩⟨0| + (1−p)|−⟩⟨−| bath.
fn entropy_ratio_behaviour() -> Outcome {
    for p in linspace(0.0, 0.999, 40) {
        let s = scenario(xx_chain_config(p))?;
        let fp = s.fixed_point().map_err(err)?;
        ensure(fp.relaxing == Some(true), || format!("p={p}: not relaxing ({:?})", fp.status))?;
    }
    let mut deviations = Vec::new();
    for p in [0.9, 0.99, 0.999] {
        let s = scenario(xx_chain_config(p))?;
        let rho = s.fixed_point().map_err(err)?.state.ok_or("no fixed point")?;
        let ratio = entropy_ratio(&rho, &s.bath_states()[0]).map_err(err)?;
        deviations.push((p, ratio));
    }
    let gaps: Vec<f64> = deviations.iter().map(|(_, r)| (r - 4.0).abs()).collect();
    ensure(gaps.windows(2).all(|w| w[1] < w[0]), || format!("R does not approach 4: {deviations:?}"))?;
    ensure(gaps[2] <= 0.5, || format!("R(0.999) = {:.4}", deviations[2].1))?;

    let s = scenario(xx_chain_config(0.0))?;
    let rho = s.fixed_point().map_err(err)?.state.ok_or("no fixed point at p=0")?;
    let s_a = von_neumann_entropy(&rho).map_err(err)?;
    ensure(
        matches!(entropy_ratio(&rho, &s.bath_states()[0]), Err(Error::UndefinedRatio { .. })),
        || "p=0 did not raise the undefined-ratio error".into(),
    )?;
    ensure(s_a > 0.1, || format!("S_A(p=0) = {s_a:.4}"))?;
    Ok(format!(
        "40/40 relaxing, R = {:.3}, {:.3}, {:.3}, S_A(p=0) = {s_a:.3}",
        deviations[0].1, deviations[1].1, deviations[2].1
    ))
}

/// 5. XXZ chain N=4 with a |−⟩ bath, anisotropy grid.
fn anisotropy_behaviour() -> Outcome {
    let config = |delta: f64| {
        serde_json::json!({
            "model": "xxz", "n": 4, "delta": delta, "t": 0.5,
            "baths": [{"site": 3, "state": "minus"}], "solver": "spectral"
        })
    };
    let pair = |rho: &DensityMatrix| -> Result<f64, String> {
        let shape = SubsystemShape::uniform(4, 2).map_err(err)?;
        concurrence(&rho.reduce(&shape, &[0, 1]).map_err(err)?).map_err(err)
    };
    let mut max_c: f64 = 0.0;
    let mut grid = linspace(0.0, 1.5, 40);
    grid.push(1.0);
    for delta in grid {
        let fp = scenario(config(delta))?.fixed_point().map_err(err)?;
        ensure(fp.relaxing == Some(true), || format!("Δ={delta}: not relaxing ({:?})", fp.status))?;
        let rho = fp.state.ok_or("no fixed point")?;
        max_c = max_c.max(pair(&rho)?);
    }
    let rho = scenario(config(1.0))?.fixed_point().map_err(err)?.state.ok_or("no fixed point")?;
    let s_a = von_neumann_entropy(&rho).map_err(err)?;
    let c12 = pair(&rho)?;
    ensure(s_a <= 1e-6, || format!("S_A(Δ=1) = {s_a:.2e}"))?;
    ensure(c12 <= 1e-6, || format!("C12(Δ=1) = {c12:.2e}"))?;
    ensure(max_c > 0.01, || format!("max C12 over grid {max_c:.2e}"))?;
    Ok(format!("41/41 relaxing, Δ=1: S_A {s_a:.1e}, C12 {c12:.1e}; max C12 {max_c:.3}"))
}

fn two_bath_config(p: f64, q: f64, t: f64) -> serde_json::Value {
    serde_json::json!({
        "model": "xxz", "n": 5, "delta": 1.0, "t": t,
        "baths": [
            {"site": 4, "state": {"diag": p}, "label": "B"},
            {"site": 0, "state": {"diag": q}, "label": "C"}
        ],
        "solver": "both",
        "tolerances": {"iteration": 1e-13, "max_iter": 200000}
    })
}

/// 6. Two-bath Heisenberg chain N=5.
fn two_bath_steady_state() -> Outcome {
    let started = Instant::now();
    let mut details = Vec::new();
    for t in [0.5, 1.0] {
        let fp = scenario(two_bath_config(0.9, 0.4, t))?.fixed_point().map_err(err)?;
        ensure(fp.relaxing == Some(true), || format!("t={t}: not relaxing ({:?})", fp.status))?;
        ensure(fp.status.is_empty(), || format!("t={t}: {:?}", fp.status))?;
        ensure(fp.solver_distance <= 1e-7, || format!("t={t}: solvers differ by {:.2e}", fp.solver_distance))?;
        details.push(format!("t={t}: gap {:.3}, solvers {:.1e}", fp.gap, fp.solver_distance));
    }
    let cooled = scenario(two_bath_config(1.0, 1.0, 0.5))?;
    let fp = cooled.fixed_point().map_err(err)?;
    let rho = fp.state.ok_or("no fixed point for p=q=1")?;
    let ground = DensityMatrix::pure(&basis_ket(32, 0)).map_err(err)?;
    let d = rho.trace_distance(&ground).map_err(err)?;
    ensure(d <= 1e-6, || format!("p=q=1 steady state off |0…0⟩ by {d:.2e}"))?;
    let elapsed = started.elapsed();
    ensure(elapsed < Duration::from_secs(120), || format!("took {elapsed:.2?}"))?;
    Ok(format!("{}; cooling {d:.1e}; {elapsed:.2?}", details.join(", ")))
}

/// 7. Convex mixtures with a relaxing channel.
fn haag_suite() -> Outcome {
    let mut r = rng(1007);
    let mut relaxing = 0;
    let mut min_gap = f64::INFINITY;
    for trial in 0..50 {
        let omega = random_density(&mut r, 2);
        let base = chain_channel(2, 2, Model::SwapNetwork, &omega, r.random_range(0.3..1.5))?;
        let s_base = base.superoperator().map_err(err)?;
        ensure(is_relaxing(&s_base, 1e-8).map_err(err)?.is_relaxing(), || {
            format!("trial {trial}: base channel not relaxing")
        })?;
        let other = Superoperator::unitary(&random_unitary(&mut r, 4)).map_err(err)?;
        let p = r.random_range(0.1..=1.0);
        let report = haag_mixture_check(&s_base, &other, p).map_err(err)?;
        if report.is_relaxing() && report.spectral_gap > 0.0 {
            relaxing += 1;
        }
        min_gap = min_gap.min(report.spectral_gap);
    }
    ensure(relaxing == 50, || format!("{relaxing}/50 relaxing"))?;
    Ok(format!("50/50 relaxing, min gap {min_gap:.3e}"))
}

/// 8. Forgetting under imperfect controller preparation.
fn forgetting_suite() -> Outcome {
    let mut r = rng(1008);
    let swap = swap_operator(&SubsystemShape::uniform(2, 2).map_err(err)?, 0, 1).map_err(err)?;
    let template = ChannelTemplate {
        h_system: ComplexMatrix::zeros(2, 2),
        h_interaction: swap,
        t: 0.5,
    };
    let mut worst_final: f64 = 0.0;
    for trial in 0..20 {
        let steps = (0..500)
            .map(|_| ControllerStep {
                weight: r.random_range(0.5..=1.0),
                perturbation: random_density(&mut r, 2),
            })
            .collect();
        let seq = ControllerSequence::new(random_density(&mut r, 2), steps, 0.5).map_err(err)?;
        let channels = imperfect_controller_sequence(&template, &seq).map_err(err)?;
        let f = forgetting_metric(&channels, &random_density(&mut r, 2), &random_density(&mut r, 2))
            .map_err(err)?;
        ensure(f.windows(2).all(|w| w[1] <= w[0] + 1e-10), || format!("trial {trial}: f_n increases"))?;
        ensure(f[500] < 1e-3, || format!("trial {trial}: f_500 = {:.2e}", f[500]))?;
        worst_final = worst_final.max(f[500]);
    }
    Ok(format!("20/20 monotone, max f_500 {worst_final:.1e}"))
}

/// Brute-force `A ⊗ B` and partial trace over the last factor.
fn brute_kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (ra, ca, rb, cb) = (a.rows(), a.cols(), b.rows(), b.cols());
    let mut out = ComplexMatrix::zeros(ra * rb, ca * cb);
    for i in 0..ra {
        for j in 0..ca {
            for k in 0..rb {
                for l in 0..cb {
                    out[(i * rb + k, j * cb + l)] = a[(i, j)] * b[(k, l)];
                }
            }
        }
    }
    out
}

fn brute_trace_middle(m: &ComplexMatrix, d0: usize, d1: usize, d2: usize) -> ComplexMatrix {
    // Keep factors 0 and 2 of d0 ⊗ d1 ⊗ d2.
    let mut out = ComplexMatrix::zeros(d0 * d2, d0 * d2);
    for a in 0..d0 {
        for c in 0..d2 {
            for a2 in 0..d0 {
                for c2 in 0..d2 {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for b in 0..d1 {
                        acc += m[((a * d1 + b) * d2 + c, (a2 * d1 + b) * d2 + c2)];
                    }
                    out[(a * d2 + c, a2 * d2 + c2)] = acc;
                }
            }
        }
    }
    out
}

/// 9. Equivalence of channel representations and index oracles.
fn oracle_equivalences() -> Outcome {
    let mut r = rng(1009);
    let mut worst_super: f64 = 0.0;
    let mut worst_kraus: f64 = 0.0;
    let channels = [
        chain_channel(2, 2, Model::SwapNetwork, &random_density(&mut r, 2), 0.5)?,
        chain_channel(2, 2, Model::Xxz { delta: 0.7 }, &random_density(&mut r, 2), 0.8)?,
        chain_channel(2, 3, Model::SwapNetwork, &random_density(&mut r, 3), 0.5)?,
        chain_channel(3, 2, Model::SwapNetwork, &random_density(&mut r, 2), 1.1)?,
    ];
    for ch in &channels {
        let s = ch.superoperator().map_err(err)?;
        let kraus = ch.kraus_operators().map_err(err)?;
        for _ in 0..20 {
            let rho = random_density(&mut r, ch.system_dim());
            let direct = ch.apply(&rho).map_err(err)?;
            worst_super = worst_super.max(s.apply(rho.matrix()).map_err(err)?.max_abs_diff(direct.matrix()));
            let mut via = ComplexMatrix::zeros(ch.system_dim(), ch.system_dim());
            for k in &kraus {
                via += &k.conjugate(rho.matrix());
            }
            worst_kraus = worst_kraus.max(via.max_abs_diff(direct.matrix()));
        }
    }
    ensure(worst_super <= 1e-10, || format!("superoperator vs direct {worst_super:.2e}"))?;
    ensure(worst_kraus <= 1e-10, || format!("Kraus vs direct {worst_kraus:.2e}"))?;

    let mut worst_index: f64 = 0.0;
    for _ in 0..10 {
        let a = random_density(&mut r, 2).into_matrix();
        let b = random_density(&mut r, 3).into_matrix();
        let c = random_density(&mut r, 2).into_matrix();
        let abc = tensor(&[a.clone(), b.clone(), c.clone()]).map_err(err)?;
        worst_index = worst_index.max(abc.max_abs_diff(&brute_kron(&brute_kron(&a, &b), &c)));
        worst_index = worst_index.max(kron(&a, &b).max_abs_diff(&brute_kron(&a, &b)));
        let joint = random_density(&mut r, 12).into_matrix();
        let shape = SubsystemShape::new(vec![2, 3, 2]).map_err(err)?;
        let kept = partial_trace(&joint, &shape, &[0, 2]).map_err(err)?;
        worst_index = worst_index.max(kept.max_abs_diff(&brute_trace_middle(&joint, 2, 3, 2)));
    }
    ensure(worst_index <= 1e-12, || format!("index oracles {worst_index:.2e}"))?;
    Ok(format!(
        "superoperator {worst_super:.1e}, Kraus {worst_kraus:.1e}, index {worst_index:.1e}"
    ))
}

/// 10. Symmetry and conservation commutators.
fn structural_commutators() -> Outcome {
    let mut r = rng(1010);
    let n = 3;
    let graph = CouplingGraph::new(n, [(0, 1, r.random_range(0.5..2.0)), (1, 2, r.random_range(0.5..2.0)), (0, 2, r.random_range(0.5..2.0))])
        .map_err(err)?;
    let spec = NetworkSpec::new(graph, 2, Model::SwapNetwork, vec![]).map_err(err)?;
    let h_a = swap_network_hamiltonian(&spec).map_err(err)?;
    let mut worst_theta: f64 = 0.0;
    for _ in 0..10 {
        let theta = random_unitary(&mut r, 2);
        let big = tensor(&vec![theta; n]).map_err(err)?;
        worst_theta = worst_theta.max(h_a.commutator(&big).frobenius_norm());
    }
    ensure(worst_theta <= 1e-10, || format!("[H_A, Θ^⊗N] = {worst_theta:.2e}"))?;

    let shape = SubsystemShape::uniform(n + 1, 2).map_err(err)?;
    let h_total = &kron(&h_a, &ComplexMatrix::identity(2))
        + &interaction_hamiltonian(&shape, &[(n, n - 1)]).map_err(err)?;
    let m = excitation_observable(&basis_ket(2, 0), &shape).map_err(err)?;
    let conserved = m.commutator(&h_total).frobenius_norm();
    ensure(conserved <= 1e-10, || format!("[M_AB, H_A + H_I] = {conserved:.2e}"))?;
    Ok(format!("[H_A, Θ^⊗N] ≤ {worst_theta:.1e}, [M_AB, H] = {conserved:.1e}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("homogenization through a swap chain N=3", swap_chain_homogenization),
        ("qudit swap pair N=2, d=3", qudit_case),
        ("diagonal-bath XXZ homogenization", diagonal_bath_xxz),
        ("entropy ratio, XX chain N=4", entropy_ratio_behaviour),
        ("anisotropy sweep, XXZ N=4 with |−⟩ bath", anisotropy_behaviour),
        ("two-bath Heisenberg chain N=5", two_bath_steady_state),
        ("convex mixtures with a relaxing channel", haag_suite),
        ("forgetting under imperfect controllers", forgetting_suite),
        ("representation and index oracles", oracle_equivalences),
        ("structural commutators", structural_commutators),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = started.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail}) [{elapsed:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail} [{elapsed:.2?}]", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
