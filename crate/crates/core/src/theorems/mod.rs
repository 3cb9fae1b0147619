//! Executable hypothesis → conclusion checks for the comparison inequalities
//! between W, E1 and E2, and a sweep-driven counterexample hunter.
//!
//! Every threshold is evaluated exactly: square roots and fractions in the
//! hypotheses are restated as integer or [`Rational`](crate::Rational)
//! comparisons. Proof bookkeeping identities that a checker recomputes are
//! hard failures ([`Error::Identity`](crate::Error::Identity)), since they
//! indicate a wrong derivation or a bug rather than a counterexample.

mod construction;
mod hunt;
mod pendant;
mod product;
mod unary;
mod verdict;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use construction::check_construction;
pub use hunt::{hunt, hunt_with_verdicts, HuntError, HuntOutcome};
pub use pendant::{check_pendant_e1_w, check_pendant_e2_e1, check_pendant_paths_e1_w, f_bound};
pub use product::{check_product_identities, check_product_w_e1, check_product_w_e2, MAX_PRODUCT_ORDER};
pub use unary::check_unary;
pub use verdict::{
    isomorphism_class_id, CheckReport, TheoremVerdict, MAX_CANONICAL_ORDER,
    MAX_STORED_COUNTEREXAMPLES,
};

/// Every checked claim. [`Theorem::id`] gives the short identifier used on
/// the command line and in reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// Self-centered non-complete graphs: E2 ≥ E1, equality iff a cycle.
    SelfCenteredE2AtLeastE1,
    /// Self-centered diameter 2: E2 ≥ E1, equality iff C4 or C5.
    Diameter2SelfCenteredE2AtLeastE1,
    /// Non-self-centered diameter 2: sign of E2 − E1 from n' and avd(G').
    Diameter2E1E2Classification,
    /// Diameter 2: W = n(n − 1) − m.
    Diameter2Wiener,
    /// Diameter 2 and n ≥ 9: W > E1.
    Diameter2WienerExceedsE1,
    /// Self-centered diameter 2: W > E1 iff m < n(n − 5); W > E2 iff 5m < n(n − 1).
    Diameter2SelfCenteredCriteria,
    /// Diameter 2 with n' > (n − 1)/2: E2 > W.
    ManyUniversalE2ExceedsW,
    /// Diameter 2, 0 < n' ≤ (n − 1)/2, avd(G') above (2/5)(n − 1 − 2n'): E2 > W.
    DenseRemainderE2ExceedsW,
    /// As above with avd(G') below the threshold: E2 < W.
    SparseRemainderE2BelowW,
    /// Existence of a diameter-2 graph with n' universal vertices and E2 > W.
    Diameter2E2ExceedsWConstruction,
    /// Trees with d(d − 1) ≤ n − 1: E2 ≤ W, equality iff P3.
    TreeSmallDiameterE2AtMostW,
    /// Trees with n > 3 and 3d ≥ 2n: W < E1.
    TreeLargeDiameterE1ExceedsW,
    /// Trees with n > 8: W > E1 for the tree or for its complement.
    TreeOrComplementWExceedsE1,
    /// ε(G) − ε(v) ≥ Tr(v), equality iff every other u has ε(u) = d(v, u).
    EccentricityTransmissionGap,
    /// Pendant vertices at a UD pair preserve E1 > W when f(d) ≥ n.
    PendantPairPreservesE1OverW,
    /// Pendant vertices at a UD pair preserve E2 > E1 for dense δ ≥ 2 graphs.
    PendantPairPreservesE2OverE1,
    /// Pendant paths of length ℓ at a UD pair preserve E1 > W.
    PendantPathsPreserveE1OverW,
    /// E1 of a Cartesian product from the factors.
    ProductE1Formula,
    /// E2 of a Cartesian product from the factors.
    ProductE2Formula,
    /// W of a Cartesian product from the factors.
    ProductWienerFormula,
    /// W ≥ E1 on both factors (one of order > 2) gives W > E1 on the product.
    ProductPreservesWOverE1,
    /// W ≥ max(E1, E2) and average-transmission bounds give W > E2 on the product.
    ProductPreservesWOverE2,
}

use Theorem::*;

impl Theorem {
    pub const ALL: [Theorem; 22] = [
        SelfCenteredE2AtLeastE1,
        Diameter2SelfCenteredE2AtLeastE1,
        Diameter2E1E2Classification,
        Diameter2Wiener,
        Diameter2WienerExceedsE1,
        Diameter2SelfCenteredCriteria,
        ManyUniversalE2ExceedsW,
        DenseRemainderE2ExceedsW,
        SparseRemainderE2BelowW,
        Diameter2E2ExceedsWConstruction,
        TreeSmallDiameterE2AtMostW,
        TreeLargeDiameterE1ExceedsW,
        TreeOrComplementWExceedsE1,
        EccentricityTransmissionGap,
        PendantPairPreservesE1OverW,
        PendantPairPreservesE2OverE1,
        PendantPathsPreserveE1OverW,
        ProductE1Formula,
        ProductE2Formula,
        ProductWienerFormula,
        ProductPreservesWOverE1,
        ProductPreservesWOverE2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            SelfCenteredE2AtLeastE1 => "P2.1",
            Diameter2SelfCenteredE2AtLeastE1 => "C2.2",
            Diameter2E1E2Classification => "T2.3",
            Diameter2Wiener => "P2.4",
            Diameter2WienerExceedsE1 => "T2.5",
            Diameter2SelfCenteredCriteria => "P2.6",
            ManyUniversalE2ExceedsW => "T2.7",
            DenseRemainderE2ExceedsW => "C2.8i",
            SparseRemainderE2BelowW => "C2.8ii",
            Diameter2E2ExceedsWConstruction => "T2.9",
            TreeSmallDiameterE2AtMostW => "T3.1",
            TreeLargeDiameterE1ExceedsW => "T3.2",
            TreeOrComplementWExceedsE1 => "T3.3",
            EccentricityTransmissionGap => "L4.1",
            PendantPairPreservesE1OverW => "T4.2",
            PendantPairPreservesE2OverE1 => "T4.3",
            PendantPathsPreserveE1OverW => "C4.4",
            ProductE1Formula => "L5.1",
            ProductE2Formula => "L5.3",
            ProductWienerFormula => "W5.2",
            ProductPreservesWOverE1 => "T5.2",
            ProductPreservesWOverE2 => "T5.4",
        }
    }

    /// Whether the claim is about a single graph and can run inside a sweep.
    /// The rest need constructed inputs (UD pairs, factor pairs, parameters).
    pub fn is_unary(self) -> bool {
        matches!(
            self,
            SelfCenteredE2AtLeastE1
                | Diameter2SelfCenteredE2AtLeastE1
                | Diameter2E1E2Classification
                | Diameter2Wiener
                | Diameter2WienerExceedsE1
                | Diameter2SelfCenteredCriteria
                | ManyUniversalE2ExceedsW
                | DenseRemainderE2ExceedsW
                | SparseRemainderE2BelowW
                | TreeSmallDiameterE2AtMostW
                | TreeLargeDiameterE1ExceedsW
                | TreeOrComplementWExceedsE1
                | EccentricityTransmissionGap
        )
    }

    pub fn unary() -> Vec<Theorem> {
        Theorem::ALL.into_iter().filter(|t| t.is_unary()).collect()
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownTheorem(s.trim().to_string()))
    }
}

/// Parses a comma-separated list of ids. `all-unary` selects every unary
/// claim and `C2.8` both of its parts. Duplicates are dropped, first
/// occurrence kept.
pub fn parse_theorem_list(text: &str) -> Result<Vec<Theorem>> {
    let mut out: Vec<Theorem> = Vec::new();
    for item in text.split(',').map(str::trim) {
        let expanded = match item.to_ascii_lowercase().as_str() {
            "" => return Err(Error::UnknownTheorem(text.to_string())),
            "all-unary" => Theorem::unary(),
            "c2.8" => vec![DenseRemainderE2ExceedsW, SparseRemainderE2BelowW],
            _ => vec![item.parse()?],
        };
        for t in expanded {
            if !out.contains(&t) {
                out.push(t);
            }
        }
    }
    Ok(out)
}
