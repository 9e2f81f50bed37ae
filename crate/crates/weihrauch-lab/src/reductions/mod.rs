//! Reductions between problems as first-class values: a forward instance
//! transform and a back solution transform, with certificate transport, plus
//! the combinator algebra (compose, parallelize, flatten).

mod coloring;
mod embed;
mod lg;
mod tc;
mod trees;

pub use coloring::{red_gc2_to_gcn, red_gcn_to_wkln, red_hat_llpo_to_gc2};
pub use embed::{
    red_d_to_rc, red_d_to_s, red_hat_wf_to_s_vecl, red_lpo_to_sf, red_rc_d_wf, red_rc_to_d,
    red_s_to_wf, red_s_vecl_to_hat_s, red_sf_to_lpo, red_wf_to_d, red_wf_to_s_l,
};
pub use lg::{red_lgk_to_lpo, red_lpo_to_lgk};
pub use tc::{red_lpo_to_tck, red_tck_to_hat_lpo};
pub use trees::{block_decode, block_encode, red_wkl_to_hat_llpo, red_wkln_to_wkl};

use std::sync::Arc;

use crate::encodings::{diag_pair, diag_unpair};
use crate::error::{Error, Result};
use crate::problems::{
    hat_row, Certificate, HatPayload, HatSolution, Instance, Payload, ProblemId, Solution,
};

type ForwardFn = Arc<dyn Fn(&Instance) -> Result<Instance> + Send + Sync>;
type BackFn = Arc<dyn Fn(&Instance, &Solution) -> Result<Solution> + Send + Sync>;

/// A reduction `source <= target`: `forward` realizes the instance transform
/// (including certificate transport), `back` pulls a target solution back to
/// a source solution. `strong` records that `back` ignores the instance.
#[derive(Clone)]
pub struct Reduction {
    pub name: String,
    pub source: ProblemId,
    pub target: ProblemId,
    pub strong: bool,
    forward: ForwardFn,
    back: BackFn,
}

impl Reduction {
    pub fn new<F, B>(
        name: impl Into<String>,
        source: ProblemId,
        target: ProblemId,
        strong: bool,
        forward: F,
        back: B,
    ) -> Self
    where
        F: Fn(&Instance) -> Result<Instance> + Send + Sync + 'static,
        B: Fn(&Instance, &Solution) -> Result<Solution> + Send + Sync + 'static,
    {
        Reduction {
            name: name.into(),
            source,
            target,
            strong,
            forward: Arc::new(forward),
            back: Arc::new(back),
        }
    }

    pub fn forward(&self, u: &Instance) -> Result<Instance> {
        if u.problem != self.source {
            return Err(Error::ReductionMismatch(format!(
                "{} expects a {} instance, got {}",
                self.name, self.source, u.problem
            )));
        }
        let x = (self.forward)(u)?;
        if x.problem != self.target {
            return Err(Error::ReductionMismatch(format!(
                "{} produced a {} instance, declared target {}",
                self.name, x.problem, self.target
            )));
        }
        Ok(x)
    }

    pub fn back(&self, u: &Instance, y: &Solution) -> Result<Solution> {
        (self.back)(u, y)
    }

    /// Replaces the back map, keeping everything else. Used by the harness's
    /// fault-injection checks.
    pub fn with_back<B>(&self, name: impl Into<String>, back: B) -> Self
    where
        B: Fn(&Instance, &Solution) -> Result<Solution> + Send + Sync + 'static,
    {
        Reduction {
            name: name.into(),
            source: self.source.clone(),
            target: self.target.clone(),
            strong: self.strong,
            forward: Arc::clone(&self.forward),
            back: Arc::new(back),
        }
    }
}

impl std::fmt::Debug for Reduction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Reduction({}: {} <= {}{})",
            self.name,
            self.source,
            self.target,
            if self.strong { ", strong" } else { "" }
        )
    }
}

/// The identity reduction on a problem.
pub fn identity(problem: ProblemId) -> Reduction {
    Reduction::new(
        format!("identity_{problem}"),
        problem.clone(),
        problem,
        true,
        |u| Ok(u.clone()),
        |_, y| Ok(y.clone()),
    )
}

/// `r1: Q <= P` composed with `r2: P <= R` gives `Q <= R`.
pub fn compose(r1: &Reduction, r2: &Reduction) -> Result<Reduction> {
    if r1.target != r2.source {
        return Err(Error::ReductionMismatch(format!(
            "cannot chain {} (target {}) into {} (source {})",
            r1.name, r1.target, r2.name, r2.source
        )));
    }
    let (a, b) = (r1.clone(), r2.clone());
    let (a2, b2) = (r1.clone(), r2.clone());
    Ok(Reduction::new(
        format!("{};{}", r1.name, r2.name),
        r1.source.clone(),
        r2.target.clone(),
        r1.strong && r2.strong,
        move |u| b.forward(&a.forward(u)?),
        move |u, z| {
            let mid = a2.forward(u)?;
            a2.back(u, &b2.back(&mid, z)?)
        },
    ))
}

/// Componentwise lifting: `Q <= P` gives `Hat(Q) <= Hat(P)`.
pub fn parallelize(r: &Reduction) -> Reduction {
    let fwd_r = r.clone();
    let back_r = r.clone();
    let source = ProblemId::hat(r.source.clone());
    let target = ProblemId::hat(r.target.clone());
    Reduction::new(
        format!("hat_{}", r.name),
        source,
        target.clone(),
        r.strong,
        move |u| {
            let payload = {
                let r = fwd_r.clone();
                let u = u.clone();
                HatPayload::computed(move |i| Ok(r.forward(&hat_row(&u, i)?)?.payload))
            };
            let certificate = if u.certificate.is_some() {
                let r = fwd_r.clone();
                let u = u.clone();
                Some(Certificate::hat_gen(move |i| {
                    r.forward(&hat_row(&u, i)?)?
                        .certificate
                        .ok_or_else(|| Error::MissingCertificate(format!("row {i} of {}", r.name)))
                }))
            } else {
                None
            };
            Ok(Instance {
                problem: ProblemId::hat(fwd_r.target.clone()),
                payload: Payload::Hat(payload),
                certificate,
            })
        },
        move |u, y| {
            let r = back_r.clone();
            let u = u.clone();
            let y = y.as_hat()?.clone();
            Ok(Solution::Hat(HatSolution::computed(move |i| {
                r.back(&hat_row(&u, i)?, &y.row(i)?)
            })))
        },
    )
}

/// `Hat(Hat(base)) <= Hat(base)`: rows re-indexed through the diagonal
/// pairing, flat row `diag_pair(i, j)` holding inner row `j` of outer row
/// `i`.
pub fn hat_flatten(base: ProblemId) -> Reduction {
    let source = ProblemId::hat(ProblemId::hat(base.clone()));
    let target = ProblemId::hat(base.clone());
    let target_fwd = target.clone();
    Reduction::new(
        format!("flatten_{base}"),
        source,
        target,
        true,
        move |u| {
            let payload = {
                let u = u.clone();
                HatPayload::computed(move |n| {
                    let (i, j) = diag_unpair(n);
                    u.payload.as_hat()?.row(i)?.as_hat()?.row(j)
                })
            };
            let certificate = match &u.certificate {
                Some(cert) => {
                    let cert = cert.clone();
                    Some(Certificate::hat_gen(move |n| {
                        let (i, j) = diag_unpair(n);
                        cert.hat_row(i)?.hat_row(j)
                    }))
                }
                None => None,
            };
            Ok(Instance {
                problem: target_fwd.clone(),
                payload: Payload::Hat(payload),
                certificate,
            })
        },
        |_, y| {
            let y = y.as_hat()?.clone();
            Ok(Solution::Hat(HatSolution::computed(move |i| {
                let y = y.clone();
                Ok(Solution::Hat(HatSolution::computed(move |j| {
                    y.row(diag_pair(i, j))
                })))
            })))
        },
    )
}

/// The trivial inverse of [`hat_flatten`]: `Hat(base) <= Hat(Hat(base))`.
pub fn hat_unflatten(base: ProblemId) -> Reduction {
    let source = ProblemId::hat(base.clone());
    let target = ProblemId::hat(ProblemId::hat(base.clone()));
    let target_fwd = target.clone();
    Reduction::new(
        format!("unflatten_{base}"),
        source,
        target,
        true,
        move |u| {
            let payload = {
                let u = u.clone();
                HatPayload::computed(move |i| {
                    let u = u.clone();
                    Ok(Payload::Hat(HatPayload::computed(move |j| {
                        u.payload.as_hat()?.row(diag_pair(i, j))
                    })))
                })
            };
            let certificate = match &u.certificate {
                Some(cert) => {
                    let cert = cert.clone();
                    Some(Certificate::hat_gen(move |i| {
                        let cert = cert.clone();
                        Ok(Certificate::hat_gen(move |j| cert.hat_row(diag_pair(i, j))))
                    }))
                }
                None => None,
            };
            Ok(Instance {
                problem: target_fwd.clone(),
                payload: Payload::Hat(payload),
                certificate,
            })
        },
        |_, y| {
            let y = y.as_hat()?.clone();
            Ok(Solution::Hat(HatSolution::computed(move |n| {
                let (i, j) = diag_unpair(n);
                y.row(i)?.as_hat()?.row(j)
            })))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::OracleFn;
    use crate::problems::{check_solution, hat_pack, solve_certified, Budget};

    fn lpo_inst(j: u64) -> Instance {
        Instance::certified(
            ProblemId::Lpo,
            Payload::Oracle(OracleFn::finite_support(vec![(j, 0)], 1)),
            Certificate::FirstZero(j),
        )
    }

    #[test]
    fn identity_round_trip() {
        let r = identity(ProblemId::Lpo);
        let u = lpo_inst(3);
        let x = r.forward(&u).unwrap();
        let y = solve_certified(&x, &Budget::default()).unwrap();
        let v = r.back(&u, &y).unwrap();
        assert_eq!(v.as_value().unwrap(), 4);
    }

    #[test]
    fn compose_requires_matching_problems() {
        let r = identity(ProblemId::Lpo);
        let s = identity(ProblemId::Llpo);
        assert!(compose(&r, &s).is_err());
        assert!(compose(&r, &r).is_ok());
    }

    #[test]
    fn parallelize_rows_match_base_reduction() {
        let r = identity(ProblemId::Lpo);
        let hat_r = parallelize(&r);
        let u = hat_pack(&[lpo_inst(1), lpo_inst(4)]).unwrap();
        let x = hat_r.forward(&u).unwrap();
        let y = solve_certified(&x, &Budget::default()).unwrap();
        let v = hat_r.back(&u, &y).unwrap();
        let rows = v.as_hat().unwrap();
        assert_eq!(rows.row(0).unwrap().as_value().unwrap(), 2);
        assert_eq!(rows.row(1).unwrap().as_value().unwrap(), 5);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn flatten_unflatten_row_exact() {
        // A 2x2 grid of certified LPO instances, padded by repetition.
        let inner0 = hat_pack(&[lpo_inst(0), lpo_inst(1)]).unwrap();
        let inner1 = hat_pack(&[lpo_inst(2), lpo_inst(3)]).unwrap();
        let grid = hat_pack(&[inner0, inner1]).unwrap();

        let flat = hat_flatten(ProblemId::Lpo);
        assert_eq!(flat.source, grid.problem);
        let flat_inst = flat.forward(&grid).unwrap();
        for i in 0..20u64 {
            for j in 0..20u64 {
                let want = hat_row(&hat_row(&grid, i).unwrap(), j).unwrap();
                let got = hat_row(&flat_inst, diag_pair(i, j)).unwrap();
                let wp = want.payload.as_oracle().unwrap();
                let gp = got.payload.as_oracle().unwrap();
                for n in 0..8 {
                    assert_eq!(wp.eval(n).unwrap(), gp.eval(n).unwrap());
                }
            }
        }

        // Solve the flattened instance and pull back through the reduction.
        let y = solve_certified(&flat_inst, &Budget::default()).unwrap();
        let v = flat.back(&grid, &y).unwrap();
        let rows = v.as_hat().unwrap();
        let inner = rows.row(1).unwrap();
        let inner = inner.as_hat().unwrap();
        assert_eq!(inner.row(0).unwrap().as_value().unwrap(), 3);
        assert_eq!(inner.row(1).unwrap().as_value().unwrap(), 4);
    }

    #[test]
    fn unflatten_then_flatten_is_identity_on_rows() {
        let u = hat_pack(&(0..6).map(lpo_inst).collect::<Vec<_>>()).unwrap();
        let unflat = hat_unflatten(ProblemId::Lpo);
        let x = unflat.forward(&u).unwrap();
        let flat = hat_flatten(ProblemId::Lpo);
        let back_again = flat.forward(&x).unwrap();
        for n in 0..20u64 {
            let a = hat_row(&u, n).unwrap();
            let b = hat_row(&back_again, n).unwrap();
            for m in 0..8 {
                assert_eq!(
                    a.payload.as_oracle().unwrap().eval(m).unwrap(),
                    b.payload.as_oracle().unwrap().eval(m).unwrap()
                );
            }
        }
    }
}
