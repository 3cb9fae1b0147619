//! Claims about a single graph, evaluated from its distances and report.

use crate::distance::{all_pairs_distances, DistanceData};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::invariants::{wiener, wiener_tree_edgecut, zagreb_ecc_1, InvariantReport};
use crate::rational::Rational;
use crate::ud::{gap_equality_condition, lemma41_gap};

use super::verdict::TheoremVerdict;
use super::Theorem::{self, *};

/// Evaluates a unary claim on `g`, given its distances and report.
///
/// # Errors
/// `InvalidParameter` for non-unary claims; `Identity` when a proof
/// bookkeeping identity fails; `Internal` if a tree of diameter ≥ 3 has a
/// disconnected complement.
pub fn check_unary(
    theorem: Theorem,
    g: &Graph,
    d: &DistanceData,
    r: &InvariantReport,
) -> Result<TheoremVerdict> {
    let id = theorem.id();
    Ok(match theorem {
        SelfCenteredE2AtLeastE1 => {
            if !(r.self_centered && !g.is_complete()) {
                return Ok(TheoremVerdict::vacuous(id, g, "not self-centered or complete".into()));
            }
            let cycle = g.is_cycle();
            let eq = r.e2 == r.e1;
            TheoremVerdict::decided(
                id,
                g,
                r.e2 >= r.e1 && eq == cycle,
                eq,
                format!("E1={} E2={} cycle={cycle}", r.e1, r.e2),
            )
        }
        Diameter2SelfCenteredE2AtLeastE1 => {
            if !(r.self_centered && r.diam == 2) {
                return Ok(TheoremVerdict::vacuous(id, g, "not self-centered of diameter 2".into()));
            }
            let c4_or_c5 = g.is_cycle() && (r.n == 4 || r.n == 5);
            let eq = r.e2 == r.e1;
            TheoremVerdict::decided(
                id,
                g,
                r.e2 >= r.e1 && eq == c4_or_c5,
                eq,
                format!("E1={} E2={} C4_or_C5={c4_or_c5}", r.e1, r.e2),
            )
        }
        Diameter2E1E2Classification => {
            if !(r.diam == 2 && !r.self_centered && r.n >= 3) {
                return Ok(TheoremVerdict::vacuous(id, g, "not diameter 2 non-self-centered".into()));
            }
            let (n, np) = (r.n as i128, r.n_universal as i128);
            let x = remainder_size(r);
            // 2(E2 - E1) = 4(n' - 2)(n - n') + n'(n' - 3) + 8x
            let lhs = 2 * (r.e2 as i128 - r.e1 as i128);
            let rhs = 4 * (np - 2) * (n - np) + np * (np - 3) + 8 * x;
            if lhs != rhs || r.e1 as i128 != 4 * n - 3 * np {
                return Err(identity_error(id, g, format!("E1={} E2={} n'={np} x={x}", r.e1, r.e2)));
            }
            let avd = remainder_avd(r);
            let e2_wins = np >= 3
                || (np == 2 && avd.is_positive())
                || (np == 1 && avd > Rational::ONE + Rational::new(1, 2 * (r.n as i64 - 1)));
            let held = if e2_wins { r.e1 < r.e2 } else { r.e1 > r.e2 };
            TheoremVerdict::decided(
                id,
                g,
                held,
                false,
                format!(
                    "n'={np} avd(G')={avd} predicted={} E1={} E2={}",
                    if e2_wins { "E1<E2" } else { "E1>E2" },
                    r.e1,
                    r.e2
                ),
            )
        }
        Diameter2Wiener => {
            if r.diam != 2 {
                return Ok(TheoremVerdict::vacuous(id, g, format!("diam={}", r.diam)));
            }
            let expect = r.n as u64 * (r.n as u64 - 1) - r.m as u64;
            TheoremVerdict::decided(
                id,
                g,
                r.wiener == expect,
                false,
                format!("W={} n(n-1)-m={expect}", r.wiener),
            )
        }
        Diameter2WienerExceedsE1 => {
            if !(r.n >= 9 && r.diam == 2) {
                return Ok(TheoremVerdict::vacuous(id, g, format!("n={} diam={}", r.n, r.diam)));
            }
            TheoremVerdict::decided(
                id,
                g,
                r.wiener > r.e1,
                false,
                format!("W={} E1={}", r.wiener, r.e1),
            )
        }
        Diameter2SelfCenteredCriteria => {
            if !(r.self_centered && r.diam == 2) {
                return Ok(TheoremVerdict::vacuous(id, g, "not self-centered of diameter 2".into()));
            }
            let (n, m) = (r.n as i64, r.m as i64);
            let first = (r.wiener > r.e1) == (m < n * (n - 5));
            let second = (r.wiener > r.e2) == (5 * m < n * (n - 1));
            TheoremVerdict::decided(
                id,
                g,
                first && second,
                false,
                format!(
                    "W={} E1={} E2={} m={m} n(n-5)={} n(n-1)/5={}",
                    r.wiener,
                    r.e1,
                    r.e2,
                    n * (n - 5),
                    Rational::new(n * (n - 1), 5)
                ),
            )
        }
        ManyUniversalE2ExceedsW | DenseRemainderE2ExceedsW | SparseRemainderE2BelowW => {
            check_e2_vs_w(theorem, g, r)?
        }
        TreeSmallDiameterE2AtMostW => {
            let d = i64::from(r.diam);
            if !(g.is_tree() && r.n >= 3 && d * (d - 1) < r.n as i64) {
                return Ok(TheoremVerdict::vacuous(id, g, format!("tree={} diam={d}", g.is_tree())));
            }
            let edge_cut = wiener_tree_edgecut(g)?;
            if edge_cut != r.wiener {
                return Err(identity_error(id, g, format!("W={} edge-cut W={edge_cut}", r.wiener)));
            }
            let eq = r.e2 == r.wiener;
            let is_p3 = r.n == 3;
            TheoremVerdict::decided(
                id,
                g,
                r.e2 <= r.wiener && eq == is_p3,
                eq,
                format!("E2={} W={} d(d-1)={} n-1={}", r.e2, r.wiener, d * (d - 1), r.n - 1),
            )
        }
        TreeLargeDiameterE1ExceedsW => {
            if !(g.is_tree() && r.n > 3 && 3 * r.diam as usize >= 2 * r.n) {
                return Ok(TheoremVerdict::vacuous(id, g, format!("tree={} diam={}", g.is_tree(), r.diam)));
            }
            TheoremVerdict::decided(
                id,
                g,
                r.wiener < r.e1,
                false,
                format!("W={} E1={} diam={} parity={}", r.wiener, r.e1, r.diam, r.diam % 2),
            )
        }
        TreeOrComplementWExceedsE1 => {
            if !(g.is_tree() && r.n > 8) {
                return Ok(TheoremVerdict::vacuous(id, g, format!("tree={} n={}", g.is_tree(), r.n)));
            }
            let complement = g.complement();
            let (cw, ce1) = match all_pairs_distances(&complement) {
                Ok(cd) => (Some(wiener(&cd)), Some(zagreb_ecc_1(&cd))),
                Err(Error::Disconnected) if r.diam < 3 => (None, None),
                Err(Error::Disconnected) => {
                    return Err(Error::Internal(format!(
                        "complement of {} is disconnected although diam = {}",
                        emit_graph6(g),
                        r.diam
                    )))
                }
                Err(e) => return Err(e),
            };
            let first = r.wiener > r.e1;
            let second = matches!((cw, ce1), (Some(w), Some(e)) if w > e);
            let fmt_opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
            TheoremVerdict::decided(
                id,
                g,
                first || second,
                false,
                format!(
                    "W={} E1={} W(co)={} E1(co)={}",
                    r.wiener,
                    r.e1,
                    fmt_opt(cw),
                    fmt_opt(ce1)
                ),
            )
        }
        EccentricityTransmissionGap => {
            let mut tight = 0;
            let mut bad = None;
            for v in 0..r.n {
                let gap = lemma41_gap(d, v);
                let cond = gap_equality_condition(d, v);
                tight += usize::from(gap == 0);
                if bad.is_none() && (gap < 0 || (gap == 0) != cond) {
                    bad = Some(format!("vertex {v}: gap={gap} condition={cond}"));
                }
            }
            let held = bad.is_none();
            TheoremVerdict::decided(
                id,
                g,
                held,
                false,
                bad.unwrap_or_else(|| format!("tight vertices={tight}")),
            )
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "{} is not a single-graph claim",
                other.id()
            )))
        }
    })
}

/// x = m(G'), the number of edges among non-universal vertices.
fn remainder_size(r: &InvariantReport) -> i128 {
    let (n, np, m) = (r.n as i128, r.n_universal as i128, r.m as i128);
    m - np * (np - 1) / 2 - np * (n - np)
}

/// avd(G') = 2x / (n − n'), zero when every vertex is universal.
fn remainder_avd(r: &InvariantReport) -> Rational {
    let rest = (r.n - r.n_universal) as i64;
    if rest == 0 {
        return Rational::ZERO;
    }
    Rational::new(2 * remainder_size(r) as i64, rest)
}

fn check_e2_vs_w(theorem: Theorem, g: &Graph, r: &InvariantReport) -> Result<TheoremVerdict> {
    let id = theorem.id();
    if !(r.diam == 2 && r.n >= 3) {
        return Ok(TheoremVerdict::vacuous(id, g, format!("diam={}", r.diam)));
    }
    let (n, np) = (r.n as i128, r.n_universal as i128);
    let x = remainder_size(r);
    // E2 - W = 5x - (n - n')(n - 1 - 2n') on every diameter-2 graph
    let lhs = r.e2 as i128 - r.wiener as i128;
    if lhs != 5 * x - (n - np) * (n - 1 - 2 * np) {
        return Err(identity_error(id, g, format!("E2={} W={} n'={np} x={x}", r.e2, r.wiener)));
    }
    let many = 2 * np > n - 1;
    let avd = remainder_avd(r);
    let threshold = Rational::new(2 * (r.n as i64 - 1 - 2 * r.n_universal as i64), 5);
    let detail = format!(
        "n'={np} avd(G')={avd} threshold={threshold} E2={} W={}",
        r.e2, r.wiener
    );
    let verdict = match theorem {
        ManyUniversalE2ExceedsW if many => TheoremVerdict::decided(id, g, r.e2 > r.wiener, false, detail),
        DenseRemainderE2ExceedsW if np > 0 && !many && avd > threshold => {
            TheoremVerdict::decided(id, g, r.e2 > r.wiener, false, detail)
        }
        SparseRemainderE2BelowW if np > 0 && !many && avd < threshold => {
            TheoremVerdict::decided(id, g, r.e2 < r.wiener, false, detail)
        }
        _ => TheoremVerdict::vacuous(id, g, detail),
    };
    Ok(verdict)
}

fn identity_error(theorem: &'static str, g: &Graph, detail: String) -> Error {
    Error::Identity {
        theorem,
        detail: format!("{} on {}", detail, emit_graph6(g)),
    }
}
