//! Growth at a universally diametrical pair: attaching pendant vertices (or
//! pendant paths) at both ends preserves E1 > W and, for dense graphs,
//! E2 > E1.

use crate::distance::{all_pairs_distances, DistanceData};
use crate::error::{Error, Result};
use crate::families::{attach_pendant_paths_at, attach_pendants_at};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::invariants::InvariantReport;
use crate::ud::is_ud_pair;

use super::verdict::TheoremVerdict;
use super::Theorem;

/// f(x) = 2x² + 9x + 6.
pub fn f_bound(x: u64) -> u64 {
    2 * x * x + 9 * x + 6
}

struct Grown {
    base: InvariantReport,
    grown: InvariantReport,
    diam: u64,
    tr_u: u64,
    tr_v: u64,
}

/// Validates the UD pair, builds `G*` and checks the expansions of E1(G*),
/// W(G*) and E2(G*) in terms of `G`, which hold for every UD pair.
fn grow(theorem: Theorem, g: &Graph, u: usize, v: usize) -> Result<Grown> {
    let d = all_pairs_distances(g)?;
    if !is_ud_pair(&d, u, v)? {
        return Err(Error::NotUdPair { u, v });
    }
    let base = InvariantReport::from_distances(g, &d);
    let star = attach_pendants_at(g, u, v)?;
    let ds: DistanceData = all_pairs_distances(&star)?;
    let grown = InvariantReport::from_distances(&star, &ds);

    let (n, m, diam) = (base.n as u64, base.m as u64, u64::from(base.diam));
    let (tr_u, tr_v) = (d.transmission(u), d.transmission(v));
    let e1 = base.e1 + 2 * base.total_ecc + n + 2 * (diam + 2) * (diam + 2);
    let w = base.wiener + tr_u + tr_v + 2 * n + diam + 2;
    let e2 = 2 * (diam + 2) * (diam + 1) + base.e2 + m + base.ecc_connectivity;
    if (grown.e1, grown.wiener, grown.e2) != (e1, w, e2) {
        return Err(Error::Identity {
            theorem: theorem.id(),
            detail: format!(
                "on {} at ({u}, {v}): E1* = {} vs {e1}, W* = {} vs {w}, E2* = {} vs {e2}",
                emit_graph6(g),
                grown.e1,
                grown.wiener,
                grown.e2
            ),
        });
    }
    Ok(Grown {
        base,
        grown,
        diam,
        tr_u,
        tr_v,
    })
}

/// Pendant vertices at the UD pair `(u, v)` preserve E1 > W when
/// f(diam) ≥ n. The verdict is about the input graph `g`.
///
/// # Errors
/// `NotDiametrical` / `NotUdPair` for a bad pair, `Disconnected` for a
/// disconnected `g`, `Identity` if an expansion of E1(G*), W(G*) or E2(G*)
/// fails.
pub fn check_pendant_e1_w(g: &Graph, u: usize, v: usize) -> Result<TheoremVerdict> {
    let id = Theorem::PendantPairPreservesE1OverW.id();
    let Grown {
        base,
        grown,
        diam,
        tr_u,
        tr_v,
    } = grow(Theorem::PendantPairPreservesE1OverW, g, u, v)?;
    let n = base.n as u64;
    let detail = format!(
        "d={diam} f(d)={} n={n} E1={} W={} Tr(u)={tr_u} Tr(v)={tr_v} E1*={} W*={}",
        f_bound(diam),
        base.e1,
        base.wiener,
        grown.e1,
        grown.wiener
    );
    if !(f_bound(diam) >= n && base.e1 > base.wiener) {
        return Ok(TheoremVerdict::vacuous(id, g, detail));
    }
    Ok(TheoremVerdict::decided(id, g, grown.e1 > grown.wiener, false, detail))
}

/// Pendant vertices at the UD pair `(u, v)` preserve E2 > E1 when
/// m ≥ n + 2·diam + 4 and δ ≥ 2.
pub fn check_pendant_e2_e1(g: &Graph, u: usize, v: usize) -> Result<TheoremVerdict> {
    let id = Theorem::PendantPairPreservesE2OverE1.id();
    let Grown {
        base, grown, diam, ..
    } = grow(Theorem::PendantPairPreservesE2OverE1, g, u, v)?;
    let (n, m) = (base.n as u64, base.m as u64);
    let detail = format!(
        "d={diam} n={n} m={m} min_degree={} xi={} E1={} E2={} E1*={} E2*={}",
        g.min_degree(),
        base.ecc_connectivity,
        base.e1,
        base.e2,
        grown.e1,
        grown.e2
    );
    if !(m >= n + 2 * diam + 4 && g.min_degree() >= 2 && base.e2 > base.e1) {
        return Ok(TheoremVerdict::vacuous(id, g, detail));
    }
    Ok(TheoremVerdict::decided(id, g, grown.e2 > grown.e1, false, detail))
}

/// Pendant paths of length `len` at the UD pair `(u, v)` preserve E1 > W
/// when f(diam + 2ℓ − 2) ≥ n + 2ℓ − 2.
///
/// Also runs the single-step check `len` times along the growing chain
/// (each round on the previous round's tips) and returns those verdicts;
/// the chain must end at the same graph as the direct construction.
pub fn check_pendant_paths_e1_w(
    g: &Graph,
    u: usize,
    v: usize,
    len: usize,
) -> Result<(TheoremVerdict, Vec<TheoremVerdict>)> {
    let id = Theorem::PendantPathsPreserveE1OverW.id();
    if len == 0 {
        return Err(Error::InvalidParameter("pendant path length must be >= 1".into()));
    }
    let mut steps = Vec::with_capacity(len);
    let mut current = g.clone();
    let (mut tu, mut tv) = (u, v);
    for _ in 0..len {
        steps.push(check_pendant_e1_w(&current, tu, tv)?);
        let n = current.order();
        current = attach_pendants_at(&current, tu, tv)?;
        (tu, tv) = (n, n + 1);
    }
    let direct = attach_pendant_paths_at(g, u, v, len)?;
    if direct != current {
        return Err(Error::Internal(format!(
            "pendant path growth of {} disagrees with iterated pendant growth",
            emit_graph6(g)
        )));
    }

    let d = all_pairs_distances(g)?;
    let base = InvariantReport::from_distances(g, &d);
    let grown = crate::invariants::full_report(&direct)?;
    let (n, diam, l) = (base.n as u64, u64::from(base.diam), len as u64);
    let chained = steps.iter().filter(|s| s.hypothesis_met).count();
    let detail = format!(
        "d={diam} l={l} f(d+2l-2)={} n+2l-2={} E1={} W={} E1(l*)={} W(l*)={} chain_hypotheses={chained}/{len}",
        f_bound(diam + 2 * l - 2),
        n + 2 * l - 2,
        base.e1,
        base.wiener,
        grown.e1,
        grown.wiener
    );
    let verdict = if f_bound(diam + 2 * l - 2) >= n + 2 * l - 2 && base.e1 > base.wiener {
        TheoremVerdict::decided(id, g, grown.e1 > grown.wiener, false, detail)
    } else {
        TheoremVerdict::vacuous(id, g, detail)
    };
    Ok((verdict, steps))
}
