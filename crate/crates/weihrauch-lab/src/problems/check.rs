//! Certificate verification and solution checking at finite budget.
//!
//! Both functions report `Unknown` whenever the defining condition cannot be
//! discharged within the budget; running out of fuel is never converted into
//! a boolean answer.

use crate::encodings::{
    check_coloring, finite_subgraph, is_k_colorable, path_prefix, pattern_embeds, seq_encode,
    Branching, GraphCode, TreeCode,
};
use crate::error::{Error, Result};
use crate::oracle::OracleFn;
use crate::problems::{Budget, Certificate, Instance, ProblemId, Solution};
use crate::verdict::Verdict;

macro_rules! try_fuel {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(Error::FuelExhausted { index, limit }) => {
                return Ok(Verdict::unknown(format!(
                    "fuel exhausted at index {index} (limit {limit})"
                )))
            }
            Err(e) => return Err(e),
        }
    };
}

fn scan_limit(p: &OracleFn, budget: &Budget) -> u64 {
    budget.fuel.min(p.fuel_limit)
}

/// Checks a certificate against its instance's payload, up to the budget.
pub fn verify_certificate(inst: &Instance, budget: &Budget) -> Result<Verdict> {
    let cert = inst.require_certificate()?;
    verify_cert_inner(&inst.problem, inst, cert, budget)
}

fn verify_cert_inner(
    problem: &ProblemId,
    inst: &Instance,
    cert: &Certificate,
    budget: &Budget,
) -> Result<Verdict> {
    match problem {
        ProblemId::Lpo => {
            let p = inst.payload.as_oracle()?;
            match cert {
                Certificate::FirstZero(j) => verify_lpo_first_zero(p, *j),
                Certificate::NoZero | Certificate::KnownAnswer(0) => {
                    match try_fuel!(p.first_zero(scan_limit(p, budget))) {
                        Some(z) => Ok(Verdict::invalid(format!("zero at index {z}"))),
                        None => Ok(Verdict::Valid),
                    }
                }
                Certificate::KnownAnswer(v) => verify_lpo_first_zero(p, v - 1),
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::Llpo => {
            let p = inst.payload.as_oracle()?;
            match cert {
                Certificate::FirstZero(j) => {
                    for t in 0..*j {
                        if try_fuel!(p.eval(t)) != 0 {
                            return Ok(Verdict::invalid(format!("p({t}) != 0 before index {j}")));
                        }
                    }
                    if try_fuel!(p.eval(*j)) == 0 {
                        Ok(Verdict::invalid(format!("p({j}) = 0, no pivot there")))
                    } else {
                        Ok(Verdict::Valid)
                    }
                }
                Certificate::NoZero => match try_fuel!(p.first_nonzero(scan_limit(p, budget))) {
                    Some(i) => Ok(Verdict::invalid(format!("nonzero at index {i}"))),
                    None => Ok(Verdict::Valid),
                },
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::Lg(k) => {
            let g = inst.payload.as_graph()?;
            match cert {
                Certificate::KnownAnswer(0) => {
                    // Colorability of truncations is monotone; checking the
                    // largest one covers all smaller.
                    let trunc = try_fuel!(finite_subgraph(g, budget.coloring_bound));
                    if is_k_colorable(&trunc, *k) {
                        Ok(Verdict::Valid)
                    } else {
                        Ok(Verdict::invalid(format!(
                            "G_{} has no {k}-coloring",
                            budget.coloring_bound
                        )))
                    }
                }
                Certificate::KnownAnswer(m) => verify_first_uncolorable(g, *k, *m),
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::Gc(k) => {
            let g = inst.payload.as_graph()?;
            match cert {
                Certificate::KnownColoring(c) | Certificate::PathGen(c) => {
                    Ok(check_coloring(g, c, *k, budget.coloring_bound))
                }
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::Tc(k) => {
            let g = inst.payload.as_graph()?;
            match cert {
                Certificate::KnownAnswer(m) if *m > 0 => {
                    let trunc = try_fuel!(finite_subgraph(g, *m));
                    if is_k_colorable(&trunc, *k) {
                        Ok(Verdict::invalid(format!("G_{m} is {k}-colorable")))
                    } else {
                        Ok(Verdict::Valid)
                    }
                }
                Certificate::KnownColoring(c) => {
                    if try_fuel!(c.eval(0)) != 0 {
                        return Ok(Verdict::invalid("certified coloring has c(0) != 0"));
                    }
                    Ok(check_coloring(g, c, *k, budget.coloring_bound))
                }
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::Wkl | ProblemId::Wkln(_) => {
            let t = inst.payload.as_tree()?;
            match cert {
                Certificate::PathGen(g) => verify_tree_path(t, g, budget.depth),
                Certificate::Finite(d) => {
                    if try_fuel!(t.has_level(*d)) {
                        Ok(Verdict::invalid(format!("tree reaches level {d}")))
                    } else {
                        Ok(Verdict::Valid)
                    }
                }
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::Wf => {
            let t = inst.payload.as_tree()?;
            match cert {
                Certificate::PathGen(g) => verify_tree_path(t, g, budget.depth),
                Certificate::Finite(d) => verify_tree_finite(t, *d, budget),
                Certificate::KnownAnswer(v) if *v <= 1 => Ok(Verdict::Valid),
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::S => {
            let (g, h) = inst.payload.as_graph_pair()?;
            match cert {
                Certificate::EmbedsAt(map) => verify_pair_embedding(g, h, map),
                Certificate::PathGen(_)
                | Certificate::NoEmbedding(_)
                | Certificate::KnownAnswer(0)
                | Certificate::KnownAnswer(1) => Ok(Verdict::Valid),
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::SL => {
            let g = inst.payload.as_graph()?;
            match cert {
                Certificate::PathGen(h) => verify_ray(g, h, budget.depth),
                Certificate::NoEmbedding(_)
                | Certificate::KnownAnswer(0)
                | Certificate::KnownAnswer(1)
                | Certificate::Finite(_) => Ok(Verdict::Valid),
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::SVecL => match cert {
            Certificate::HatOf { .. } | Certificate::HatGen(_) => {
                let mut verdict = Verdict::Valid;
                for n in 0..budget.hat_rows {
                    let row = cert.hat_row(n)?;
                    if decision_cert_answer(&row).is_none() {
                        return Err(Error::CertificateMismatch(format!(
                            "S_vecL row {n} carries no answer: {row:?}"
                        )));
                    }
                    verdict = verdict.and(Verdict::Valid);
                }
                Ok(verdict)
            }
            other => cert_mismatch(problem, other),
        },
        ProblemId::Sf(f) => {
            let g = inst.payload.as_graph()?;
            match cert {
                Certificate::EmbedsAt(map) => {
                    let bound = map.iter().max().copied().unwrap_or(0);
                    let trunc = try_fuel!(finite_subgraph(g, bound));
                    if crate::encodings::pattern_map_ok(f, &trunc, map) {
                        Ok(Verdict::Valid)
                    } else {
                        Ok(Verdict::invalid("claimed embedding map does not embed"))
                    }
                }
                Certificate::KnownAnswer(1) => {
                    let trunc = try_fuel!(finite_subgraph(g, budget.scan_bound));
                    if pattern_embeds(f, &trunc) {
                        Ok(Verdict::Valid)
                    } else {
                        Ok(Verdict::unknown(format!(
                            "no embedding found below vertex {}",
                            budget.scan_bound
                        )))
                    }
                }
                Certificate::KnownAnswer(0) | Certificate::NoEmbedding(_) => {
                    let bound = match cert {
                        Certificate::NoEmbedding(b) => (*b).min(budget.scan_bound),
                        _ => budget.scan_bound,
                    };
                    let trunc = try_fuel!(finite_subgraph(g, bound));
                    if pattern_embeds(f, &trunc) {
                        Ok(Verdict::invalid(format!(
                            "pattern embeds below vertex {bound}"
                        )))
                    } else {
                        Ok(Verdict::Valid)
                    }
                }
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::Rc | ProblemId::D => {
            let g = inst.payload.as_graph()?;
            match cert {
                Certificate::PathGen(h) => verify_independent_set(g, h, budget.depth),
                Certificate::NoEmbedding(_)
                | Certificate::Finite(_)
                | Certificate::KnownAnswer(0)
                | Certificate::KnownAnswer(1) => Ok(Verdict::Valid),
                other => cert_mismatch(problem, other),
            }
        }
        ProblemId::Hat(base) => match cert {
            Certificate::HatOf { .. } | Certificate::HatGen(_) => {
                let hat = inst.payload.as_hat()?;
                let mut verdict = Verdict::Valid;
                for i in 0..budget.hat_rows {
                    let row_inst = Instance {
                        problem: (**base).clone(),
                        payload: hat.row(i)?,
                        certificate: None,
                    };
                    let row_cert = cert.hat_row(i)?;
                    let v = verify_cert_inner(base, &row_inst, &row_cert, budget)?;
                    if let Verdict::Invalid { witness } = v {
                        return Ok(Verdict::invalid(format!("row {i}: {witness}")));
                    }
                    verdict = verdict.and(v);
                }
                Ok(verdict)
            }
            other => cert_mismatch(problem, other),
        },
    }
}

fn cert_mismatch(problem: &ProblemId, cert: &Certificate) -> Result<Verdict> {
    Err(Error::CertificateMismatch(format!(
        "{cert:?} does not fit problem {problem}"
    )))
}

fn verify_lpo_first_zero(p: &OracleFn, j: u64) -> Result<Verdict> {
    for t in 0..j {
        if try_fuel!(p.eval(t)) == 0 {
            return Ok(Verdict::invalid(format!("p({t}) = 0 before index {j}")));
        }
    }
    if try_fuel!(p.eval(j)) != 0 {
        Ok(Verdict::invalid(format!("p({j}) != 0")))
    } else {
        Ok(Verdict::Valid)
    }
}

fn verify_first_uncolorable(g: &GraphCode, k: u64, m: u64) -> Result<Verdict> {
    let trunc = try_fuel!(finite_subgraph(g, m));
    if is_k_colorable(&trunc, k) {
        return Ok(Verdict::invalid(format!("G_{m} is {k}-colorable")));
    }
    if m > 0 {
        let prev = try_fuel!(finite_subgraph(g, m - 1));
        if !is_k_colorable(&prev, k) {
            return Ok(Verdict::invalid(format!("G_{} already uncolorable", m - 1)));
        }
    }
    Ok(Verdict::Valid)
}

fn verify_tree_path(t: &TreeCode, gen: &OracleFn, depth: u64) -> Result<Verdict> {
    let depth = depth.min(gen.fuel_limit);
    let prefix = try_fuel!(path_prefix(gen, depth));
    if let Some(&bad) = prefix.iter().find(|&&v| !t.branching.admits(v)) {
        return Ok(Verdict::invalid(format!(
            "path symbol {bad} outside alphabet"
        )));
    }
    for l in 0..=prefix.len() {
        // Prefix codes grow geometrically with depth; verification stops
        // where the tree's own fuel ends and the checked part stands.
        let code = match seq_encode(t.branching, &prefix[..l]) {
            Ok(code) if code < t.node_fn.fuel_limit => code,
            Ok(_) | Err(Error::CodeOverflow(_)) => break,
            Err(e) => return Err(e),
        };
        if t.node_fn.eval(code)? == 0 {
            return Ok(Verdict::invalid(format!(
                "path prefix of length {l} not in tree"
            )));
        }
    }
    Ok(Verdict::Valid)
}

fn verify_tree_finite(t: &TreeCode, d: u64, budget: &Budget) -> Result<Verdict> {
    match t.branching {
        Branching::Omega => {
            // Cannot scan an omega tree's level; check the consistent part:
            // no member among the first codes may reach depth d.
            for code in 0..budget.scan_bound {
                let seq = crate::encodings::seq_decode(Branching::Omega, code);
                if seq.len() as u64 >= d && try_fuel!(t.member(&seq)) {
                    return Ok(Verdict::invalid(format!(
                        "member of length {} at code {code}",
                        seq.len()
                    )));
                }
            }
            Ok(Verdict::Valid)
        }
        _ => {
            if try_fuel!(t.has_level(d)) {
                Ok(Verdict::invalid(format!("tree reaches level {d}")))
            } else {
                Ok(Verdict::Valid)
            }
        }
    }
}

fn verify_pair_embedding(g: &GraphCode, h: &GraphCode, map: &[u64]) -> Result<Verdict> {
    let mut seen = std::collections::BTreeSet::new();
    if !map.iter().all(|&v| seen.insert(v)) {
        return Ok(Verdict::invalid("embedding map not injective"));
    }
    for j in 0..map.len() as u64 {
        for i in 0..j {
            if try_fuel!(h.edge(i, j)) && !try_fuel!(g.edge(map[i as usize], map[j as usize])) {
                return Ok(Verdict::invalid(format!(
                    "pattern edge ({i}, {j}) not preserved"
                )));
            }
        }
    }
    Ok(Verdict::Valid)
}

fn verify_ray(g: &GraphCode, gen: &OracleFn, len: u64) -> Result<Verdict> {
    let len = len.min(gen.fuel_limit);
    let verts = try_fuel!(path_prefix(gen, len));
    let mut seen = std::collections::BTreeSet::new();
    for (i, &v) in verts.iter().enumerate() {
        if !seen.insert(v) {
            return Ok(Verdict::invalid(format!("ray revisits vertex {v}")));
        }
        if !try_fuel!(g.contains_vertex(v)) {
            return Ok(Verdict::invalid(format!("ray vertex {v} outside universe")));
        }
        if i > 0 && !try_fuel!(g.edge(verts[i - 1], v)) {
            return Ok(Verdict::invalid(format!(
                "ray edge ({}, {v}) missing",
                verts[i - 1]
            )));
        }
    }
    Ok(Verdict::Valid)
}

fn verify_independent_set(g: &GraphCode, gen: &OracleFn, len: u64) -> Result<Verdict> {
    let len = len.min(gen.fuel_limit);
    let verts = try_fuel!(path_prefix(gen, len));
    let mut seen = std::collections::BTreeSet::new();
    for (i, &v) in verts.iter().enumerate() {
        if !seen.insert(v) {
            return Ok(Verdict::invalid(format!("witness revisits vertex {v}")));
        }
        if !try_fuel!(g.contains_vertex(v)) {
            return Ok(Verdict::invalid(format!(
                "witness vertex {v} outside universe"
            )));
        }
        for &u in &verts[..i] {
            if try_fuel!(g.edge(u, v)) {
                return Ok(Verdict::invalid(format!(
                    "witness vertices {u} and {v} are adjacent"
                )));
            }
        }
    }
    Ok(Verdict::Valid)
}

/// The answer a certificate pins for a decision problem, if any.
fn decision_cert_answer(cert: &Certificate) -> Option<u64> {
    match cert {
        Certificate::KnownAnswer(v) => Some(*v),
        Certificate::PathGen(_) | Certificate::EmbedsAt(_) => Some(1),
        Certificate::NoEmbedding(_) | Certificate::Finite(_) => Some(0),
        _ => None,
    }
}

/// For WF the witness polarity is flipped: a path means the answer is 0.
fn wf_cert_answer(cert: &Certificate) -> Option<u64> {
    match cert {
        Certificate::KnownAnswer(v) => Some(*v),
        Certificate::PathGen(_) => Some(0),
        Certificate::Finite(_) => Some(1),
        _ => None,
    }
}

/// Checks a candidate solution against an instance.
///
/// `Valid` / `Invalid` are finite-witness answers; `Unknown` means the
/// defining condition was not decidable at this budget (typically a missing
/// certificate for a universally quantified clause).
pub fn check_solution(inst: &Instance, cand: &Solution, budget: &Budget) -> Result<Verdict> {
    inst.problem.validate()?;
    check_inner(&inst.problem, inst, cand, budget)
}

fn check_inner(
    problem: &ProblemId,
    inst: &Instance,
    cand: &Solution,
    budget: &Budget,
) -> Result<Verdict> {
    match problem {
        ProblemId::Lpo => {
            let p = inst.payload.as_oracle()?;
            let v = cand.as_value()?;
            if v > 0 {
                return verify_lpo_first_zero(p, v - 1);
            }
            match try_fuel!(p.first_zero(scan_limit(p, budget))) {
                Some(z) => Ok(Verdict::invalid(format!("p({z}) = 0 but candidate is 0"))),
                None if p.provably_positive() => Ok(Verdict::Valid),
                None => match certified_valid(inst, budget)? {
                    Some(true) if lpo_cert_answer(inst) == Some(0) => Ok(Verdict::Valid),
                    Some(true) => Ok(Verdict::invalid("certificate pins a nonzero answer")),
                    _ => Ok(Verdict::unknown(
                        "no zero found within budget, no certificate",
                    )),
                },
            }
        }
        ProblemId::Llpo => {
            let p = inst.payload.as_oracle()?;
            let v = cand.as_value()?;
            if v > 1 {
                return Ok(Verdict::invalid(format!("LLPO output {v} outside {{0,1}}")));
            }
            match try_fuel!(p.first_nonzero(scan_limit(p, budget))) {
                Some(j) => {
                    // 0 is permitted iff the pivot index is odd.
                    let ok = (v == 0) == (j % 2 == 1);
                    if ok {
                        Ok(Verdict::Valid)
                    } else {
                        Ok(Verdict::invalid(format!(
                            "first nonzero at {j} ({}) forbids output {v}",
                            if j % 2 == 0 { "even" } else { "odd" }
                        )))
                    }
                }
                // All zero: both outputs are permitted.
                None if p.provably_zero() => Ok(Verdict::Valid),
                None => match certified_valid(inst, budget)? {
                    Some(true) => Ok(Verdict::Valid),
                    _ => Ok(Verdict::unknown(
                        "no nonzero found within budget, no certificate",
                    )),
                },
            }
        }
        ProblemId::Lg(k) => {
            let g = inst.payload.as_graph()?;
            let m = cand.as_value()?;
            if m > 0 {
                return verify_first_uncolorable(g, *k, m);
            }
            let trunc = try_fuel!(finite_subgraph(g, budget.coloring_bound));
            if !is_k_colorable(&trunc, *k) {
                return Ok(Verdict::invalid(format!(
                    "G_{} has no {k}-coloring but candidate is 0",
                    budget.coloring_bound
                )));
            }
            match certified_valid(inst, budget)? {
                Some(true) if matches!(inst.certificate, Some(Certificate::KnownAnswer(0))) => {
                    Ok(Verdict::Valid)
                }
                Some(true) => Ok(Verdict::invalid("certificate pins a nonzero answer")),
                _ => Ok(Verdict::unknown(
                    "all truncations colorable within budget, no certificate",
                )),
            }
        }
        ProblemId::Gc(k) => {
            let g = inst.payload.as_graph()?;
            let c = cand.as_fn()?;
            Ok(check_coloring(g, c, *k, budget.coloring_bound))
        }
        ProblemId::Tc(k) => {
            let g = inst.payload.as_graph()?;
            let f = cand.as_fn()?;
            let head = try_fuel!(f.eval(0));
            if head == 0 {
                Ok(check_coloring(g, f, *k, budget.coloring_bound))
            } else {
                let trunc = try_fuel!(finite_subgraph(g, head));
                if is_k_colorable(&trunc, *k) {
                    Ok(Verdict::invalid(format!(
                        "G_{head} is {k}-colorable, escape value unjustified"
                    )))
                } else {
                    Ok(Verdict::Valid)
                }
            }
        }
        ProblemId::Wkl | ProblemId::Wkln(_) => {
            let t = inst.payload.as_tree()?;
            let path = cand.as_fn()?;
            verify_tree_path(t, path, budget.depth)
        }
        ProblemId::Wf => {
            let t = inst.payload.as_tree()?;
            let v = cand.as_value()?;
            if v > 1 {
                return Ok(Verdict::invalid(format!("WF output {v} outside {{0,1}}")));
            }
            // Finitely branching trees can be refuted by level search.
            if t.branching.width().is_some() && !try_fuel!(t.has_level(budget.depth)) {
                return if v == 1 {
                    Ok(Verdict::Valid)
                } else {
                    Ok(Verdict::invalid(format!(
                        "tree dies before level {}",
                        budget.depth
                    )))
                };
            }
            match (certified_valid(inst, budget)?, inst.certificate.as_ref()) {
                (Some(true), Some(cert)) => match wf_cert_answer(cert) {
                    Some(ans) if ans == v => Ok(Verdict::Valid),
                    Some(ans) => Ok(Verdict::invalid(format!("certified answer is {ans}"))),
                    None => Ok(Verdict::unknown("certificate pins no answer")),
                },
                (Some(false), _) => Err(Error::CertificateMismatch(
                    "WF certificate failed verification".into(),
                )),
                _ => Ok(Verdict::unknown("well-foundedness needs a certificate")),
            }
        }
        ProblemId::S | ProblemId::SL | ProblemId::Rc | ProblemId::D => {
            let v = cand.as_value()?;
            if v > 1 {
                return Ok(Verdict::invalid(format!("output {v} outside {{0,1}}")));
            }
            match (certified_valid(inst, budget)?, inst.certificate.as_ref()) {
                (Some(true), Some(cert)) => match decision_cert_answer(cert) {
                    Some(ans) if ans == v => Ok(Verdict::Valid),
                    Some(ans) => Ok(Verdict::invalid(format!("certified answer is {ans}"))),
                    None => Ok(Verdict::unknown("certificate pins no answer")),
                },
                (Some(false), _) => Err(Error::CertificateMismatch(
                    "certificate failed verification".into(),
                )),
                _ => Ok(Verdict::unknown(format!(
                    "{problem} is not decidable at finite budget without a certificate"
                ))),
            }
        }
        ProblemId::SVecL => {
            let s = cand.as_fn()?;
            let cert = match &inst.certificate {
                Some(c) => c,
                None => {
                    return Ok(Verdict::unknown(
                        "S_vecL needs a certificate to pin the answer vector",
                    ))
                }
            };
            match verify_certificate(inst, budget)? {
                Verdict::Valid => {}
                Verdict::Invalid { .. } => {
                    return Err(Error::CertificateMismatch(
                        "S_vecL certificate failed verification".into(),
                    ))
                }
                v @ Verdict::Unknown { .. } => return Ok(v),
            }
            for n in 0..budget.hat_rows {
                let row = cert.hat_row(n)?;
                let expected = decision_cert_answer(&row)
                    .ok_or_else(|| Error::CertificateMismatch(format!("row {n} pins no answer")))?;
                let got = try_fuel!(s.eval(n));
                if got != expected {
                    return Ok(Verdict::invalid(format!(
                        "s({n}) = {got}, certified answer {expected}"
                    )));
                }
            }
            Ok(Verdict::Valid)
        }
        ProblemId::Sf(f) => {
            let g = inst.payload.as_graph()?;
            let v = cand.as_value()?;
            if v > 1 {
                return Ok(Verdict::invalid(format!("output {v} outside {{0,1}}")));
            }
            let trunc = try_fuel!(finite_subgraph(g, budget.scan_bound));
            if pattern_embeds(f, &trunc) {
                return if v == 1 {
                    Ok(Verdict::Valid)
                } else {
                    Ok(Verdict::invalid(format!(
                        "pattern embeds below vertex {}",
                        budget.scan_bound
                    )))
                };
            }
            match (certified_valid(inst, budget)?, inst.certificate.as_ref()) {
                (Some(true), Some(cert)) => match decision_cert_answer(cert) {
                    Some(ans) if ans == v => Ok(Verdict::Valid),
                    Some(ans) => Ok(Verdict::invalid(format!("certified answer is {ans}"))),
                    None => Ok(Verdict::unknown("certificate pins no answer")),
                },
                (Some(false), _) => Err(Error::CertificateMismatch(
                    "S_F certificate failed verification".into(),
                )),
                _ => Ok(Verdict::unknown(
                    "no embedding within budget and no certificate",
                )),
            }
        }
        ProblemId::Hat(base) => {
            let hat = inst.payload.as_hat()?;
            let sols = cand.as_hat()?;
            let mut verdict = Verdict::Valid;
            for i in 0..budget.hat_rows {
                let row_inst = Instance {
                    problem: (**base).clone(),
                    payload: hat.row(i)?,
                    certificate: match &inst.certificate {
                        Some(c) => Some(c.hat_row(i)?),
                        None => None,
                    },
                };
                let row_sol = sols.row(i)?;
                match check_inner(base, &row_inst, &row_sol, budget)? {
                    Verdict::Invalid { witness } => {
                        return Ok(Verdict::invalid(format!("row {i}: {witness}")))
                    }
                    v => verdict = verdict.and(v),
                }
            }
            Ok(verdict)
        }
    }
}

fn lpo_cert_answer(inst: &Instance) -> Option<u64> {
    match inst.certificate.as_ref()? {
        Certificate::NoZero | Certificate::KnownAnswer(0) => Some(0),
        Certificate::FirstZero(j) => Some(j + 1),
        Certificate::KnownAnswer(v) => Some(*v),
        _ => None,
    }
}

/// `Some(true)` when a certificate is present and verifies, `Some(false)`
/// when present and refuted, `None` when absent or undecided.
fn certified_valid(inst: &Instance, budget: &Budget) -> Result<Option<bool>> {
    match &inst.certificate {
        None => Ok(None),
        Some(_) => match verify_certificate(inst, budget)? {
            Verdict::Valid => Ok(Some(true)),
            Verdict::Invalid { .. } => Ok(Some(false)),
            Verdict::Unknown { .. } => Ok(None),
        },
    }
}
