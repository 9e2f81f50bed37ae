//! Path problems: n-ary trees reduce to binary trees by block coding, and
//! binary tree paths reduce to parallelized LLPO by branch-survival probes.

use crate::encodings::{seq_decode, seq_encode, Branching, TreeCode};
use crate::error::{Error, Result};
use crate::oracle::OracleFn;
use crate::problems::{Certificate, HatPayload, Instance, Payload, ProblemId, Solution};
use crate::reductions::Reduction;

/// Digit of a complete block: `k` ones padded on the right with zeros. Block
/// `1^n` is no digit (the alphabet stops at `n - 1`).
fn block_digit(bits: &[u64], full_width: usize) -> Option<u64> {
    let ones = bits.iter().take_while(|&&b| b == 1).count();
    if bits[ones..].iter().any(|&b| b != 0) {
        return None;
    }
    if bits.len() == full_width && ones == full_width {
        return None;
    }
    Some(ones as u64)
}

/// Block encoding of a digit string: digit `k` becomes `k` ones padded on
/// the right with zeros to `width`.
pub fn block_encode(digits: &[u64], width: u64) -> Vec<u64> {
    let mut bits = Vec::with_capacity(digits.len() * width as usize);
    for &d in digits {
        for j in 0..width {
            bits.push((j < d) as u64);
        }
    }
    bits
}

/// Block decoding: successive width-`width` blocks are summed back into
/// digits.
pub fn block_decode(bits: &[u64], width: u64) -> Vec<u64> {
    bits.chunks(width as usize)
        .take(bits.len() / width as usize)
        .map(|b| b.iter().sum())
        .collect()
}

/// `WKL_n <= WKL`: members of the binary tree are block encodings of the
/// n-ary tree's members. A partial block is kept exactly when it can be
/// completed to a digit of a living child.
pub fn red_wkln_to_wkl(n: u64) -> Reduction {
    assert!(n >= 2);
    Reduction::new(
        format!("wkl{n}_to_wkl"),
        ProblemId::Wkln(n),
        ProblemId::Wkl,
        true,
        move |u| {
            let t = u.payload.as_tree()?.clone();
            if t.branching != Branching::NAry(n) && !(n == 2 && t.branching == Branching::Binary) {
                return Err(Error::ShapeMismatch(format!(
                    "WKL_{n} instance must carry an {n}-ary tree"
                )));
            }
            let width = n as usize;
            let tt = t.clone();
            let node_fn = OracleFn::computed(move |code| {
                let tau = seq_decode(Branching::Binary, code);
                let mut digits = Vec::new();
                for block in tau.chunks(width).take(tau.len() / width) {
                    match block_digit(block, width) {
                        Some(d) => digits.push(d),
                        None => return Ok(0),
                    }
                }
                if !tt.member(&digits)? {
                    return Ok(0);
                }
                let tail = &tau[digits.len() * width..];
                if tail.is_empty() {
                    return Ok(1);
                }
                let ones = match block_digit(tail, width) {
                    Some(o) => o,
                    None => return Ok(0),
                };
                let forced = tail[tail.len() - 1] == 0;
                let candidates = if forced { ones..ones + 1 } else { ones..n };
                for d in candidates {
                    if tt.child_alive(&digits, d)? {
                        return Ok(1);
                    }
                }
                Ok(0)
            })
            .with_fuel(u64::MAX);
            let certificate = match &u.certificate {
                Some(Certificate::PathGen(g)) => {
                    let g = g.clone();
                    let fuel = g.fuel_limit.saturating_mul(n);
                    Some(Certificate::PathGen(
                        OracleFn::computed(move |j| {
                            let d = g.eval(j / n)?;
                            Ok((j % n < d) as u64)
                        })
                        .with_fuel(fuel),
                    ))
                }
                Some(Certificate::Finite(d)) => Some(Certificate::Finite(d.saturating_mul(n))),
                _ => None,
            };
            Ok(Instance {
                problem: ProblemId::Wkl,
                payload: Payload::Tree(TreeCode::new(Branching::Binary, node_fn)),
                certificate,
            })
        },
        move |_, y| {
            let g = y.as_fn()?.clone();
            let fuel = g.fuel_limit / n;
            Ok(Solution::Fn(
                // Summing successive blocks recovers the digits.
                OracleFn::computed(move |i| {
                    let mut sum = 0;
                    for j in i * n..(i + 1) * n {
                        sum += g.eval(j)?;
                    }
                    Ok(sum)
                })
                .with_fuel(fuel),
            ))
        },
    )
}

/// Fuel of the branch-probe LLPO rows: probes reach extensions of total
/// length up to half this bound.
const BGP_ROW_FUEL: u64 = 64;

/// Largest probe index whose member queries stay within the tree's own fuel:
/// a binary sequence of length `L` codes below `2^(L+1)`.
fn bgp_scan_limit(t: &TreeCode) -> u64 {
    let f = t.node_fn.fuel_limit.max(2);
    let max_len = (63 - f.leading_zeros() as u64).saturating_sub(1);
    (2 * max_len).min(BGP_ROW_FUEL)
}

/// Does any extension of `node` with total length `total` lie in the tree?
fn reaches_len(t: &TreeCode, node: &mut Vec<u64>, total: u64) -> Result<bool> {
    if node.len() as u64 > total {
        return Ok(false);
    }
    if !t.member(node)? {
        return Ok(false);
    }
    if node.len() as u64 == total {
        return Ok(true);
    }
    for s in 0..2 {
        node.push(s);
        let hit = reaches_len(t, node, total)?;
        node.pop();
        if hit {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The branch-survival LLPO instance of a binary-tree node: for `n > 0`,
/// `p(2n)` and `p(2n+1)` compare whether the 0-child and the 1-child still
/// have extensions of total length `n`. The parity of the first nonzero
/// value names the branch that lives longer.
fn bgp_row(t: &TreeCode, sigma: Vec<u64>) -> OracleFn {
    let fuel = bgp_scan_limit(t);
    let t = t.clone();
    OracleFn::computed(move |m| {
        if m <= 1 || !t.member(&sigma)? {
            return Ok(0);
        }
        let n = m / 2;
        let mut child0 = sigma.clone();
        child0.push(0);
        let mut child1 = sigma.clone();
        child1.push(1);
        let a0 = reaches_len(&t, &mut child0, n)?;
        let a1 = reaches_len(&t, &mut child1, n)?;
        Ok(match (a0, a1) {
            (true, false) => (m % 2 == 1) as u64,
            (false, true) => (m % 2 == 0) as u64,
            _ => 0,
        })
    })
    .with_fuel(fuel)
}

/// `WKL <= Hat(LLPO)`: one LLPO row per binary sequence code; the path is
/// rebuilt by following the row answers downward. The input must certify an
/// infinite tree with a `PathGen` witness.
pub fn red_wkl_to_hat_llpo() -> Reduction {
    Reduction::new(
        "wkl_to_hat_llpo",
        ProblemId::Wkl,
        ProblemId::hat(ProblemId::Llpo),
        true,
        move |u| {
            let t = u.payload.as_tree()?.clone();
            if t.branching != Branching::Binary {
                return Err(Error::ShapeMismatch(
                    "WKL instance must carry a binary tree".into(),
                ));
            }
            match &u.certificate {
                Some(Certificate::PathGen(_)) => {}
                _ => {
                    return Err(Error::MissingCertificate(
                        "WKL <= Hat(LLPO) needs a PathGen witness of an infinite tree".into(),
                    ))
                }
            }
            let rows_t = t.clone();
            let payload = HatPayload::computed(move |i| {
                Ok(Payload::Oracle(bgp_row(
                    &rows_t,
                    seq_decode(Branching::Binary, i),
                )))
            });
            let cert_t = t.clone();
            // Each row's pivot, located by bounded scan; rows whose probes
            // stay balanced within the scan get the all-zero certificate.
            let certificate = Certificate::hat_gen(move |i| {
                let p = bgp_row(&cert_t, seq_decode(Branching::Binary, i));
                match p.first_nonzero(p.fuel_limit)? {
                    Some(j) => Ok(Certificate::FirstZero(j)),
                    None => Ok(Certificate::NoZero),
                }
            });
            Ok(Instance {
                problem: ProblemId::hat(ProblemId::Llpo),
                payload: Payload::Hat(payload),
                certificate: Some(certificate),
            })
        },
        |_, y| {
            let y = y.as_hat()?.clone();
            Ok(Solution::Fn(
                OracleFn::computed(move |i| {
                    let mut cur: Vec<u64> = Vec::new();
                    for _ in 0..=i {
                        let idx = seq_encode(Branching::Binary, &cur)?;
                        let bit = y.row(idx)?.as_value()?;
                        if bit > 1 {
                            return Err(Error::Precondition(format!(
                                "row {idx} answered {bit}, not a branch"
                            )));
                        }
                        cur.push(bit);
                    }
                    Ok(cur[i as usize])
                })
                .with_fuel(BGP_ROW_FUEL / 2),
            ))
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encodings::path_prefix;
    use crate::problems::{check_solution, solve_certified, verify_certificate, Budget};

    #[test]
    fn block_example() {
        let bits = block_encode(&[2, 0, 3], 3);
        assert_eq!(bits, vec![1, 1, 0, 0, 0, 0, 1, 1, 1]);
        assert_eq!(block_decode(&bits, 3), vec![2, 0, 3]);
    }

    #[test]
    fn full_ternary_tree_block_encodes() {
        let t = TreeCode::full(Branching::NAry(3));
        let u = Instance::certified(
            ProblemId::Wkln(3),
            Payload::Tree(t),
            Certificate::PathGen(OracleFn::constant(0)),
        );
        let r = red_wkln_to_wkl(3);
        let x = r.forward(&u).unwrap();
        let bt = x.payload.as_tree().unwrap();
        // Encoded all-zero path.
        assert!(bt.member(&[0, 0, 0, 0, 0, 0]).unwrap());
        // <2> encodes to <1,1,0>; partial prefixes survive.
        assert!(bt.member(&[1]).unwrap());
        assert!(bt.member(&[1, 1]).unwrap());
        assert!(bt.member(&[1, 1, 0]).unwrap());
        // 1^3 would be digit 3, outside the alphabet.
        assert!(!bt.member(&[1, 1, 1]).unwrap());
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn pruned_nary_tree_round_trip() {
        // Ternary tree: kill everything whose first digit is not 1 beyond
        // depth 2, certified by the constant-1 path.
        let t = TreeCode::new(
            Branching::NAry(3),
            OracleFn::computed(|code| {
                let seq = seq_decode(Branching::NAry(3), code);
                Ok((seq.len() < 2 || seq[0] == 1) as u64)
            }),
        );
        let u = Instance::certified(
            ProblemId::Wkln(3),
            Payload::Tree(t),
            Certificate::PathGen(OracleFn::constant(1)),
        );
        let r = red_wkln_to_wkl(3);
        let x = r.forward(&u).unwrap();
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        assert!(check_solution(&x, &y, &Budget::default())
            .unwrap()
            .is_valid());
        let v = r.back(&u, &y).unwrap();
        let digits = path_prefix(v.as_fn().unwrap(), 5).unwrap();
        assert_eq!(digits, vec![1, 1, 1, 1, 1]);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn bgp_probe_parities() {
        // Kill all extensions of <1> at depth 3, keep the all-zero path: the
        // root row's first nonzero value sits at an odd index, answer 0.
        let t = TreeCode::new(
            Branching::Binary,
            OracleFn::computed(|code| {
                let seq = seq_decode(Branching::Binary, code);
                let dead = seq.len() >= 3 && seq[0] == 1;
                Ok((!dead) as u64)
            })
            .with_fuel(u64::MAX),
        );
        let p = bgp_row(&t, vec![]);
        let vals = path_prefix(&p, 10).unwrap();
        let pivot = vals.iter().position(|&v| v != 0).unwrap();
        assert_eq!(pivot % 2, 1);

        let u = Instance::certified(
            ProblemId::Wkl,
            Payload::Tree(t),
            Certificate::PathGen(OracleFn::constant(0)),
        );
        let r = red_wkl_to_hat_llpo();
        let x = r.forward(&u).unwrap();
        assert!(verify_certificate(&x, &Budget::default())
            .unwrap()
            .is_valid());
        let y = solve_certified(&x, &Budget::default()).unwrap();
        let v = r.back(&u, &y).unwrap();
        let prefix = path_prefix(v.as_fn().unwrap(), 8).unwrap();
        assert_eq!(prefix[0], 0);
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }

    #[test]
    fn full_binary_tree_nothing_pruned() {
        let u = Instance::certified(
            ProblemId::Wkl,
            Payload::Tree(TreeCode::new(
                Branching::Binary,
                OracleFn::constant(1).with_fuel(u64::MAX),
            )),
            Certificate::PathGen(OracleFn::constant(0)),
        );
        let r = red_wkl_to_hat_llpo();
        let x = r.forward(&u).unwrap();
        let y = solve_certified(&x, &Budget::default()).unwrap();
        let v = r.back(&u, &y).unwrap();
        assert!(check_solution(&u, &v, &Budget::default())
            .unwrap()
            .is_valid());
    }
}
