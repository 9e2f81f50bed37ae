//! Packing instances into a parallelized (hat) instance and extracting rows.

use crate::error::{Error, Result};
use crate::problems::{Certificate, HatPayload, Instance, Payload, ProblemId};

/// Packs instances of one base problem into a hat instance. The listed rows
/// are followed by the last row repeated forever, so row extraction is total.
pub fn hat_pack(instances: &[Instance]) -> Result<Instance> {
    let first = instances
        .first()
        .ok_or_else(|| Error::Precondition("hat_pack needs at least one instance".into()))?;
    let base = first.problem.clone();
    if instances.iter().any(|i| i.problem != base) {
        return Err(Error::Precondition(
            "hat_pack rows must share one base problem".into(),
        ));
    }
    let rows: Vec<Payload> = instances.iter().map(|i| i.payload.clone()).collect();
    let tail = Box::new(rows.last().unwrap().clone());
    let payload = Payload::Hat(HatPayload::Explicit { rows, tail });

    let certs: Option<Vec<Certificate>> = instances.iter().map(|i| i.certificate.clone()).collect();
    let certificate = certs.map(|rows| {
        let tail = rows.last().cloned().map(Box::new);
        Certificate::HatOf { rows, tail }
    });

    Ok(Instance {
        problem: ProblemId::hat(base),
        payload,
        certificate,
    })
}

/// Extracts row `i` of a hat instance as a base-problem instance.
pub fn hat_row(inst: &Instance, i: u64) -> Result<Instance> {
    let base = match &inst.problem {
        ProblemId::Hat(base) => (**base).clone(),
        other => {
            return Err(Error::ShapeMismatch(format!(
                "{other} is not a hat problem"
            )))
        }
    };
    let payload = inst.payload.as_hat()?.row(i)?;
    let certificate = match &inst.certificate {
        Some(cert) => Some(cert.hat_row(i)?),
        None => None,
    };
    Ok(Instance {
        problem: base,
        payload,
        certificate,
    })
}
