//! Subcommand implementations. Each returns a [`ResultDocument`] together
//! with the exit status; `main` only does argument parsing and I/O.

use cquat::adjoint::{block_diagonalize, inf_norm, DET_SINGULAR_TOL, RESIDUAL_TOL};
use cquat::matrix::PREDICATE_TOL;
use cquat::{det_q, eigenpairs, eigenvalues, eta, is_invertible, Block, CQMatrix, CQuat, Conjugation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::report::{self, InputInfo, ResultDocument};
use crate::{classify, Exit};

pub struct Input {
    pub info: InputInfo,
    pub matrix: CQMatrix,
}

impl Input {
    pub fn new(path: impl Into<String>, label: Option<String>, matrix: CQMatrix) -> Self {
        let info = InputInfo {
            path: path.into(),
            label,
            rows: matrix.rows(),
            cols: matrix.cols(),
        };
        Input { info, matrix }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    /// Overrides the relative tolerance of the operation.
    pub tolerance: Option<f64>,
    pub vectors: bool,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            tolerance: None,
            vectors: true,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Predicate {
    Normal,
    Hermitian,
    Unitary,
    Invertible,
    Selftest,
}

impl Predicate {
    fn name(self) -> &'static str {
        match self {
            Predicate::Normal => "normal",
            Predicate::Hermitian => "hermitian",
            Predicate::Unitary => "unitary",
            Predicate::Invertible => "invertible",
            Predicate::Selftest => "selftest",
        }
    }
}

pub struct Outcome {
    pub doc: ResultDocument,
    pub exit: Exit,
}

impl Outcome {
    fn ok(doc: ResultDocument) -> Self {
        Outcome { doc, exit: Exit::Ok }
    }

    fn math(doc: ResultDocument, why: impl Into<String>) -> Self {
        Outcome {
            doc: doc.failed(why),
            exit: Exit::Math,
        }
    }

    fn from_error(doc: ResultDocument, err: cquat::Error) -> Self {
        Outcome {
            doc: doc.failed(err.to_string()),
            exit: classify(&err),
        }
    }
}

macro_rules! attempt {
    ($doc:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Outcome::from_error($doc, err),
        }
    };
}

fn scaled_dev(a: &CQMatrix, b: &CQMatrix) -> f64 {
    a.max_abs_diff(b) / (1.0 + a.max_abs().max(b.max_abs()))
}

fn block_name(b: Block) -> &'static str {
    match b {
        Block::Plus => "plus",
        Block::Minus => "minus",
    }
}

pub fn detq(input: &Input, opts: &Options) -> Outcome {
    let tol = opts.tolerance.unwrap_or(DET_SINGULAR_TOL);
    let doc = ResultDocument::new("detq", vec![input.info.clone()], Some(tol));
    let a = &input.matrix;
    let (plus, minus) = attempt!(doc, block_diagonalize(a));
    let (dp, dm) = (attempt!(doc, plus.det()), attempt!(doc, minus.det()));
    let d = attempt!(doc, det_q(a));
    let threshold = tol * (1.0 + inf_norm(a)).powi(2 * a.rows() as i32);
    Outcome::ok(doc.with_payload(json!({
        "det_q": report::complex(d),
        "abs": d.norm(),
        "det_plus": report::complex(dp),
        "det_minus": report::complex(dm),
        "threshold": threshold,
        "singular": d.norm() <= threshold,
    })))
}

pub fn inv(input: &Input, opts: &Options) -> Outcome {
    let tol = opts.tolerance.unwrap_or(PREDICATE_TOL);
    let doc = ResultDocument::new("inv", vec![input.info.clone()], Some(tol));
    let a = &input.matrix;
    let b = attempt!(doc, a.inverse());
    let id = CQMatrix::identity(a.rows());
    let residual = scaled_dev(&attempt!(doc, a.mul(&b)), &id).max(scaled_dev(&attempt!(doc, b.mul(a)), &id));
    let doc = doc.with_payload(json!({
        "inverse": report::qmatrix(&b),
        "residual": residual,
    }));
    if residual > tol {
        return Outcome::math(doc, format!("inverse residual {residual:e} exceeds tolerance {tol:e}"));
    }
    Outcome::ok(doc)
}

pub fn eig(input: &Input, opts: &Options) -> Outcome {
    let tol = opts.tolerance.unwrap_or(RESIDUAL_TOL);
    let doc = ResultDocument::new("eig", vec![input.info.clone()], Some(tol));
    let a = &input.matrix;
    let s = if opts.vectors {
        attempt!(doc, eigenpairs(a))
    } else {
        attempt!(doc, eigenvalues(a))
    };
    let mut payload = json!({
        "eigenvalues": s.eigenvalues.iter().map(|l| report::complex(*l)).collect::<Vec<_>>(),
        "blocks": s.blocks.iter().map(|b| block_name(*b)).collect::<Vec<_>>(),
    });
    let Some(vectors) = &s.eigenvectors else {
        return Outcome::ok(doc.with_payload(payload));
    };
    let bound = tol * (1.0 + inf_norm(a));
    let worst = s.max_residual();
    payload["eigenvectors"] = vectors.iter().map(|v| report::quat_vec(v)).collect();
    payload["residuals"] = json!(s.residuals);
    payload["max_residual"] = json!(worst);
    payload["residual_bound"] = json!(bound);
    let doc = doc.with_payload(payload);
    if worst > bound {
        return Outcome::math(doc, format!("eigenpair residual {worst:e} exceeds bound {bound:e}"));
    }
    Outcome::ok(doc)
}

pub fn adjoint(input: &Input) -> Outcome {
    let doc = ResultDocument::new("adjoint", vec![input.info.clone()], None);
    let a = &input.matrix;
    let full = attempt!(doc, eta(a));
    let (plus, minus) = attempt!(doc, block_diagonalize(a));
    Outcome::ok(doc.with_payload(json!({
        "eta": report::cmatrix(&full),
        "plus": report::cmatrix(&plus),
        "minus": report::cmatrix(&minus),
    })))
}

pub fn mul(lhs: &Input, rhs: &Input) -> Outcome {
    let doc = ResultDocument::new("mul", vec![lhs.info.clone(), rhs.info.clone()], None);
    let p = attempt!(doc, lhs.matrix.mul(&rhs.matrix));
    Outcome::ok(doc.with_payload(json!({ "product": report::qmatrix(&p) })))
}

pub fn check(predicate: Predicate, input: Option<&Input>, conj: Conjugation, opts: &Options) -> Outcome {
    if predicate == Predicate::Selftest {
        return selftest(opts);
    }
    let input = input.expect("predicate checks need an input matrix");
    let default = match predicate {
        Predicate::Invertible => DET_SINGULAR_TOL,
        _ => PREDICATE_TOL,
    };
    let tol = opts.tolerance.unwrap_or(default);
    let doc = ResultDocument::new("check", vec![input.info.clone()], Some(tol));
    let a = &input.matrix;
    if !a.is_square() {
        return Outcome::from_error(
            doc,
            cquat::Error::NotSquare {
                op: predicate.name(),
                rows: a.rows(),
                cols: a.cols(),
            },
        );
    }
    let payload = match predicate {
        Predicate::Invertible => {
            let rep = attempt!(doc, is_invertible(a));
            let threshold = tol * (1.0 + inf_norm(a)).powi(2 * a.rows() as i32);
            json!({
                "predicate": "invertible",
                "holds": rep.det_q_abs > threshold,
                "det_q": report::complex(rep.det_q),
                "det_threshold": threshold,
                "min_abs_eigenvalue": rep.min_abs_eigenvalue,
                "eigen_threshold": rep.eigen_threshold,
                "by_determinant": rep.by_determinant,
                "by_eigenvalues": rep.by_eigenvalues,
                "by_inverse": rep.by_inverse,
                "verdicts_agree": rep.verdicts_agree(),
            })
        }
        _ => {
            let d = a.dagger(conj);
            let deviation = match predicate {
                Predicate::Normal => scaled_dev(&attempt!(doc, a.mul(&d)), &attempt!(doc, d.mul(a))),
                Predicate::Hermitian => scaled_dev(a, &d),
                _ => scaled_dev(&attempt!(doc, a.mul(&d)), &CQMatrix::identity(a.rows())),
            };
            json!({
                "predicate": predicate.name(),
                "conjugation": conj.index(),
                "holds": deviation <= tol,
                "deviation": deviation,
            })
        }
    };
    Outcome::ok(doc.with_payload(payload))
}

const SELFTEST_CASES: usize = 24;

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> CQMatrix {
    CQMatrix::from_fn(n, n, |_, _| {
        CQuat::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        )
    })
}

/// Seeded consistency checks of the library on random matrices.
fn selftest(opts: &Options) -> Outcome {
    let tol = opts.tolerance.unwrap_or(PREDICATE_TOL);
    let doc = ResultDocument::new("check", Vec::new(), Some(tol));
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut failures = Vec::new();
    let mut fail = |case: usize, n: usize, what: String| failures.push(format!("case {case} (n={n}): {what}"));

    for case in 0..SELFTEST_CASES {
        let n = 1 + case % 6;
        let a = random_matrix(&mut rng, n);
        let b = random_matrix(&mut rng, n);
        let ab = a.mul(&b).expect("square operands");

        match (eta(&ab), eta(&a), eta(&b)) {
            (Ok(lhs), Ok(ea), Ok(eb)) => {
                let rhs = ea.mul(&eb).expect("square operands");
                let dev = lhs.max_abs_diff(&rhs) / (1.0 + lhs.max_abs());
                if dev > tol {
                    fail(case, n, format!("eta(AB) deviates by {dev:e}"));
                }
            }
            _ => fail(case, n, "eta failed".into()),
        }

        let (da, db, dab) = (det_q(&a).unwrap(), det_q(&b).unwrap(), det_q(&ab).unwrap());
        let rel = (dab - da * db).norm() / dab.norm().max((da * db).norm()).max(f64::MIN_POSITIVE);
        if rel > tol.max(1e-9) {
            fail(case, n, format!("det_q(AB) relative error {rel:e}"));
        }

        match is_invertible(&a) {
            Ok(rep) if !rep.verdicts_agree() => fail(case, n, format!("invertibility verdicts disagree: {rep:?}")),
            Ok(rep) if rep.invertible() => match a.inverse() {
                Ok(inv) => {
                    let id = CQMatrix::identity(n);
                    let dev = scaled_dev(&a.mul(&inv).unwrap(), &id).max(scaled_dev(&inv.mul(&a).unwrap(), &id));
                    if dev > tol {
                        fail(case, n, format!("inverse residual {dev:e}"));
                    }
                }
                Err(e) => fail(case, n, format!("inverse failed: {e}")),
            },
            Ok(_) => {}
            Err(e) => fail(case, n, format!("invertibility check failed: {e}")),
        }

        match eigenpairs(&a) {
            Ok(s) => {
                if s.len() != 2 * n {
                    fail(case, n, format!("{} eigenvalues", s.len()));
                }
                if !s.residuals_within_tolerance() {
                    fail(case, n, format!("eigenpair residual {:e}", s.max_residual()));
                }
                let rel = (s.product() - da).norm() / da.norm().max(f64::MIN_POSITIVE);
                if rel > 1e-7 {
                    fail(case, n, format!("eigenvalue product relative error {rel:e}"));
                }
            }
            Err(e) => fail(case, n, format!("eigensolver failed: {e}")),
        }
    }

    let holds = failures.is_empty();
    let doc = doc.with_payload(json!({
        "predicate": "selftest",
        "seed": opts.seed,
        "cases": SELFTEST_CASES,
        "holds": holds,
        "failures": failures,
    }));
    if holds {
        Outcome::ok(doc)
    } else {
        Outcome::math(doc, "self-test found inconsistencies")
    }
}
