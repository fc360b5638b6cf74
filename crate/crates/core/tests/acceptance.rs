//! Acceptance criteria. Runs every criterion, prints one PASS/FAIL line per
//! criterion and exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{close, close_c, cmatrix, invertible, lu_det, matrix, quat, real_det4, rng, zero_divisor};
use cquat::hamilton::{basis_matrices, RealMat4};
use cquat::{
    complex_eig, det_q, eigenpairs, eta, is_invertible, sigma, sigma_trace, CMatrix, CQMatrix, CQuat, Complex64,
    Conjugation,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn cmat_close(a: &CMatrix, b: &CMatrix, tol: f64) -> bool {
    a.max_abs_diff(b) <= tol * (1.0 + a.max_abs().max(b.max_abs()))
}

fn ac1_worked_example() -> Outcome {
    let a = CQMatrix::from_rows(&[vec![CQuat::I, CQuat::J + CQuat::K], vec![CQuat::ONE, CQuat::K]]);
    let printed = CMatrix::from_rows(&[
        vec![c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 1.0)],
        vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)],
        vec![c(0.0, 0.0), c(1.0, 1.0), c(0.0, 1.0), c(0.0, 0.0)],
        vec![c(0.0, 0.0), c(0.0, 1.0), c(1.0, 0.0), c(0.0, 0.0)],
    ]);
    let mut best = Duration::MAX;
    let mut result = None;
    for _ in 0..5 {
        let start = Instant::now();
        let adj = eta(&a).map_err(|e| e.to_string())?;
        let d = det_q(&a).map_err(|e| e.to_string())?;
        best = best.min(start.elapsed());
        result = Some((adj, d));
    }
    let (adj, d) = result.unwrap();
    check(adj == printed, || format!("eta mismatch:\n{adj}"))?;
    let err = (d - c(-3.0, -4.0)).norm();
    check(err <= 1e-12, || format!("det_q = {d}, error {err:e}"))?;
    check(best < Duration::from_millis(1), || format!("runtime {best:?}"))?;
    Ok(format!("det_q = {d}, |err| = {err:e}, runtime {best:?}"))
}

fn ac2_basis_table() -> Outcome {
    let [e1, e2, e3] = basis_matrices();
    let id = RealMat4::identity();
    let table = [
        ("E1E1 = -I", e1 * e1, -id),
        ("E2E2 = I", e2 * e2, id),
        ("E3E3 = -I", e3 * e3, -id),
        ("E1E2 = E3", e1 * e2, e3),
        ("E2E1 = E3", e2 * e1, e3),
        ("E2E3 = E1", e2 * e3, e1),
        ("E3E2 = E1", e3 * e2, e1),
        ("E1E3 = -E2", e1 * e3, -e2),
        ("E3E1 = -E2", e3 * e1, -e2),
    ];
    for (name, lhs, rhs) in table {
        check(lhs == rhs, || format!("{name} fails"))?;
    }
    Ok("9 products exact".into())
}

fn ac3_hamilton_suite() -> Outcome {
    let mut r = rng(0xAC03);
    let mut worst_hom = 0.0f64;
    let mut worst_det = 0.0f64;
    for _ in 0..1000 {
        let q = quat(&mut r);
        let q1 = quat(&mut r);
        let lambda: f64 = rand::Rng::gen_range(&mut r, -5.0..5.0);
        let scale = (q.magnitude() * q1.magnitude()).max(1.0);

        let dev = sigma(q * q1).max_abs_diff(&(sigma(q) * sigma(q1))) / scale;
        worst_hom = worst_hom.max(dev);
        check(dev <= 1e-12, || format!("homomorphism deviation {dev:e} for {q}, {q1}"))?;
        let dev = (sigma(q + q1).max_abs_diff(&(sigma(q) + sigma(q1)))) / (q.magnitude() + q1.magnitude()).max(1.0);
        check(dev <= 1e-12, || format!("additivity deviation {dev:e}"))?;
        let dev = sigma(q.scale(lambda)).max_abs_diff(&sigma(q).scale(lambda)) / (lambda.abs() * q.magnitude()).max(1.0);
        check(dev <= 1e-12, || format!("linearity deviation {dev:e}"))?;

        check(sigma_trace(q) == 4.0 * q.t, || format!("trace {} != 4t for {q}", sigma_trace(q)))?;

        let det = real_det4(&sigma(q).0);
        let floor = q.magnitude().max(1e-300).powi(4);
        let rel = (det.abs() - q.norm4()).abs() / det.abs().max(q.norm4()).max(floor);
        worst_det = worst_det.max(rel);
        check(rel <= 1e-10, || format!("|det sigma| vs norm4 relative error {rel:e} for {q}"))?;
    }
    Ok(format!("1000 pairs, worst homomorphism {worst_hom:.1e}, worst |det| rel {worst_det:.1e}"))
}

fn ac4_conjugate_transpose_suite() -> Outcome {
    let mut r = rng(0xAC04);
    let tol = 1e-9;
    let mut worst = 0.0f64;
    let mut record = |a: &CQMatrix, b: &CQMatrix, what: &str| -> Result<(), String> {
        let dev = a.max_abs_diff(b) / (1.0 + a.max_abs().max(b.max_abs()));
        worst = worst.max(dev);
        check(dev <= tol, || format!("{what}: deviation {dev:e}"))
    };
    for trial in 0..200 {
        let n = if trial % 2 == 0 { 2 } else { 3 };
        let a = matrix(&mut r, n, n);
        let b = matrix(&mut r, n, n);
        let ab = a.mul(&b).map_err(|e| e.to_string())?;
        record(&ab.transpose(), &b.transpose().mul(&a.transpose()).unwrap(), "III")?;
        for cj in Conjugation::ALL {
            record(&a.conj(cj).transpose(), &a.transpose().conj(cj), "I")?;
            record(&ab.dagger(cj), &b.dagger(cj).mul(&a.dagger(cj)).unwrap(), "II")?;
            record(&ab.conj(cj), &a.conj(cj).mul(&b.conj(cj)).unwrap(), "IV")?;
            record(&a.conj(cj).conj(cj), &a, "VIII (i = j)")?;
            for dj in Conjugation::ALL {
                if let Some(k) = cj.then(dj) {
                    record(&a.conj(cj).conj(dj), &a.conj(k), "VIII (i != j)")?;
                }
            }
        }

        let ai = invertible(&mut r, n);
        let bi = invertible(&mut r, n);
        let (ainv, binv) = (ai.inverse().map_err(|e| e.to_string())?, bi.inverse().map_err(|e| e.to_string())?);
        let abinv = ai.mul(&bi).unwrap().inverse().map_err(|e| e.to_string())?;
        record(&abinv, &binv.mul(&ainv).unwrap(), "V")?;
        for cj in Conjugation::ALL {
            record(&ai.dagger(cj).inverse().map_err(|e| e.to_string())?, &ainv.dagger(cj), "VI")?;
            record(&ai.conj(cj).inverse().map_err(|e| e.to_string())?, &ainv.conj(cj), "VII")?;
        }
    }
    Ok(format!("200 instances (2x2 and 3x3), worst scaled deviation {worst:.1e}"))
}

fn ac5_one_sided_inverse() -> Outcome {
    let mut r = rng(0xAC05);
    let mut worst = 0.0f64;
    for trial in 0..200 {
        let n = 1 + trial % 6;
        let a = invertible(&mut r, n);
        let b = a.inverse().map_err(|e| e.to_string())?;
        let id = CQMatrix::identity(n);
        let ab = a.mul(&b).unwrap().max_abs_diff(&id);
        let ba = b.mul(&a).unwrap().max_abs_diff(&id);
        worst = worst.max(ab).max(ba);
        check(ab <= 1e-9 && ba <= 1e-9, || format!("n={n}: |AB-I| {ab:e}, |BA-I| {ba:e}"))?;
    }
    Ok(format!("200 matrices, worst {worst:.1e}"))
}

fn ac6_adjoint_suite() -> Outcome {
    let mut r = rng(0xAC06);
    for n in 1..=4 {
        check(eta(&CQMatrix::identity(n)).unwrap() == CMatrix::identity(2 * n), || format!("eta(I_{n})"))?;
    }
    let mut worst_mul = 0.0f64;
    for trial in 0..200 {
        let n = 1 + trial % 4;
        let a = invertible(&mut r, n);
        let b = invertible(&mut r, n);
        let (ea, eb) = (eta(&a).unwrap(), eta(&b).unwrap());

        check(eta(&a.add(&b).unwrap()).unwrap() == ea.add(&eb).unwrap(), || "II: eta(A+B)".into())?;

        let lhs = eta(&a.mul(&b).unwrap()).unwrap();
        let rhs = ea.mul(&eb).unwrap();
        let dev = lhs.max_abs_diff(&rhs) / (1.0 + lhs.max_abs());
        worst_mul = worst_mul.max(dev);
        check(dev <= 1e-11, || format!("III: eta(AB) deviation {dev:e}"))?;

        let inv = eta(&a.inverse().map_err(|e| e.to_string())?).unwrap();
        let direct = ea.inverse().map_err(|e| e.to_string())?;
        check(cmat_close(&inv, &direct, 1e-9), || format!("IV: deviation {:e}", inv.max_abs_diff(&direct)))?;

        check(eta(&a.dagger(Conjugation::First)).unwrap() == ea.conj_transpose(), || "V: dagger 1".into())?;
        check(eta(&a.conj(Conjugation::First)).unwrap() == ea.conj(), || "eta(A^(1)) = conj".into())?;

        let (da, db) = (det_q(&a).unwrap(), det_q(&b).unwrap());
        let dab = det_q(&a.mul(&b).unwrap()).unwrap();
        check(close_c(dab, da * db, 1e-9, 1e-300), || format!("VI: {dab} vs {}", da * db))?;
        let dinv = det_q(&a.inverse().unwrap()).unwrap();
        check(close_c(dinv, da.inv(), 1e-9, 1e-300), || format!("VI inverse: {dinv} vs {}", da.inv()))?;
    }

    // fixed seeded counterexample for the second and third conjugate transposes
    let a = matrix(&mut rng(0x9C0FFEE), 3, 3);
    let target = eta(&a).unwrap().conj_transpose();
    let mut devs = Vec::new();
    for cj in [Conjugation::Second, Conjugation::Third] {
        let dev = eta(&a.dagger(cj)).unwrap().max_abs_diff(&target);
        check(dev > 1e-3, || format!("V: dagger {cj} unexpectedly matches (dev {dev:e})"))?;
        devs.push(dev);
    }
    Ok(format!(
        "200 pairs, worst eta(AB) {worst_mul:.1e}; dagger 2/3 deviations {:.2}, {:.2}",
        devs[0], devs[1]
    ))
}

fn ac7_spectra() -> Outcome {
    let mut r = rng(0xAC07);
    let mut worst_res = 0.0f64;
    let mut worst_prod = 0.0f64;
    for trial in 0..200 {
        let n = 1 + trial % 8;
        let a = matrix(&mut r, n, n);
        let s = eigenpairs(&a).map_err(|e| e.to_string())?;
        check(s.len() == 2 * n, || format!("n={n}: {} eigenvalues", s.len()))?;
        let d = det_q(&a).unwrap();
        let rel = (s.product() - d).norm() / d.norm().max(1e-300);
        worst_prod = worst_prod.max(rel);
        check(rel <= 1e-7, || format!("n={n}: product relative error {rel:e}"))?;
        let bound = 1e-8 * (1.0 + a.max_abs());
        for res in &s.residuals {
            worst_res = worst_res.max(*res);
            check(*res <= bound, || format!("n={n}: residual {res:e} > {bound:e}"))?;
        }
    }

    let j = CQMatrix::from_rows(&[vec![CQuat::J]]);
    let s = eigenpairs(&j).map_err(|e| e.to_string())?;
    check(s.eigenvalues == vec![c(-1.0, 0.0), c(1.0, 0.0)], || format!("[j] eigenvalues {:?}", s.eigenvalues))?;
    let vecs = s.eigenvectors.unwrap();
    check(vecs[0] == vec![CQuat::ONE - CQuat::J], || "eigenvector for -1".into())?;
    check(vecs[1] == vec![CQuat::ONE + CQuat::J], || "eigenvector for 1".into())?;
    Ok(format!("200 matrices, worst product rel {worst_prod:.1e}, worst residual {worst_res:.1e}; [j] -> {{-1, 1}}"))
}

fn ac8_invertibility_equivalence() -> Outcome {
    let mut r = rng(0xAC08);
    let mut singular_seen = 0;
    let mut regular_seen = 0;
    for trial in 0..500 {
        let n = 1 + trial % 6;
        let mut a = matrix(&mut r, n, n);
        let forced = trial % 5 == 0;
        if forced {
            let row = rand::Rng::gen_range(&mut r, 0..n);
            let zd = CQuat::ONE + CQuat::J;
            for col in 0..n {
                a[(row, col)] = zd * a[(row, col)];
            }
        }
        let rep = is_invertible(&a).map_err(|e| e.to_string())?;
        check(rep.verdicts_agree(), || format!("trial {trial}: verdicts disagree {rep:?}"))?;
        if forced {
            check(!rep.invertible(), || format!("trial {trial}: forced-singular reported invertible"))?;
        }
        if rep.invertible() {
            regular_seen += 1;
        } else {
            singular_seen += 1;
        }
    }
    Ok(format!("500 matrices agree ({regular_seen} invertible, {singular_seen} singular)"))
}

fn ac9_norm_multiplicativity() -> Outcome {
    let mut r = rng(0xAC09);
    let mut worst = 0.0f64;
    for trial in 0..1000 {
        let q = quat(&mut r);
        let q1 = if trial % 4 == 0 { zero_divisor(&mut r) } else { quat(&mut r) };
        let lhs = (q * q1).norm4();
        let rhs = q.norm4() * q1.norm4();
        let floor = (q.magnitude() * q1.magnitude()).powi(4);
        worst = worst.max((lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(floor));
        check(close(lhs, rhs, 1e-10, floor), || format!("{q} * {q1}: {lhs:e} vs {rhs:e}"))?;
        if trial % 4 == 0 {
            check(rhs == 0.0, || format!("zero divisor {q1} has norm4 {}", q1.norm4()))?;
        }
    }
    Ok(format!("1000 pairs (250 with a zero divisor), worst rel {worst:.1e}"))
}

fn ac10_oracle_cross_check() -> Outcome {
    let mut r = rng(0xAC10);
    let mut worst_det = 0.0f64;
    for trial in 0..100 {
        let n = 1 + trial % 6;
        let a = matrix(&mut r, n, n);
        let block = det_q(&a).unwrap();
        let direct = lu_det(&eta(&a).unwrap());
        let rel = (block - direct).norm() / direct.norm().max(block.norm()).max(1e-300);
        worst_det = worst_det.max(rel);
        check(rel <= 1e-9, || format!("n={n}: blockwise {block} vs direct {direct}"))?;
    }
    let mut worst_eig = 0.0f64;
    for trial in 0..100 {
        let n = 1 + trial % 6;
        let m = cmatrix(&mut r, n);
        let eig = complex_eig(&m).map_err(|e| e.to_string())?;
        let sum: Complex64 = eig.iter().sum();
        let prod: Complex64 = eig.iter().product();
        let (tr, det) = (m.trace(), lu_det(&m));
        let e1 = (sum - tr).norm() / tr.norm().max(1.0);
        let e2 = (prod - det).norm() / det.norm().max(1.0);
        worst_eig = worst_eig.max(e1).max(e2);
        check(e1 <= 1e-8 && e2 <= 1e-8, || format!("n={n}: trace err {e1:e}, det err {e2:e}"))?;
    }
    Ok(format!("worst det rel {worst_det:.1e}, worst trace/det {worst_eig:.1e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 worked example: eta(A) and det_q = -3-4i", ac1_worked_example),
        ("AC2 basis product table", ac2_basis_table),
        ("AC3 Hamilton matrix suite", ac3_hamilton_suite),
        ("AC4 conjugate/transpose/inverse identities", ac4_conjugate_transpose_suite),
        ("AC5 one-sided inverse is two-sided", ac5_one_sided_inverse),
        ("AC6 complex adjoint suite", ac6_adjoint_suite),
        ("AC7 2n eigenvalues and eigenpair residuals", ac7_spectra),
        ("AC8 invertibility verdicts agree", ac8_invertibility_equivalence),
        ("AC9 quartic norm multiplicativity", ac9_norm_multiplicativity),
        ("AC10 blockwise det_q and eigensolver oracles", ac10_oracle_cross_check),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (name, run) in criteria {
        let t = Instant::now();
        match run() {
            Ok(detail) => println!("PASS  {name} ({:.2?}): {detail}", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name} ({:.2?}): {why}", t.elapsed());
            }
        }
    }
    let total = start.elapsed();
    let within_budget = total < Duration::from_secs(60);
    println!(
        "{}  suite runtime {total:.2?} (budget 60s)",
        if within_budget { "PASS" } else { "FAIL" }
    );
    if failed > 0 || !within_budget {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    } else {
        println!("all 10 criteria passed");
        ExitCode::SUCCESS
    }
}
