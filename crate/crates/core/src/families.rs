//! Deterministic constructors for the named graph families, plus the textual
//! [`FamilySpec`] used by the command line (`path:7`, `ak:3`,
//! `cartesian(path:3,cycle:5)`, `pendant_ud(ak:1,l=2)`, `thm29:n=10,np=1`).

use std::fmt;
use std::str::FromStr;

use crate::distance::all_pairs_distances;
use crate::error::{spec_err, Error, Result};
use crate::graph::Graph;
use crate::invariants::InvariantReport;
use crate::ud::ud_certificate;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// `P_n`, edges `{i, i+1}`. Requires `n ≥ 1`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("path needs n >= 1"));
    }
    Graph::from_edge_list(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
}

/// `C_n`, edges `{i, i+1 mod n}`. Requires `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Graph::from_edge_list(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

/// `K_n`. Requires `n ≥ 1`.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(invalid("complete needs n >= 1"));
    }
    let adj = (0..n).map(|u| (0..n).filter(|&v| v != u).collect()).collect();
    Ok(Graph::from_raw_adjacency(adj))
}

/// `K_{1,n-1}` with center 0. Requires `n ≥ 2`.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(invalid("star needs n >= 2"));
    }
    Graph::from_edge_list(n, &(1..n).map(|v| (0, v)).collect::<Vec<_>>())
}

/// Two adjacent centers 0 and 1 carrying `a` and `b` leaves respectively.
/// The leaves of 0 are `2..2+a`, those of 1 follow.
pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("double star needs a, b >= 1"));
    }
    let mut edges = vec![(0, 1)];
    edges.extend((2..2 + a).map(|v| (0, v)));
    edges.extend((2 + a..2 + a + b).map(|v| (1, v)));
    Graph::from_edge_list(a + b + 2, &edges)
}

/// `Q_d` on bitstrings `0..2^d`, adjacent at Hamming distance one. `1 ≤ d ≤ 20`.
pub fn hypercube(d: u32) -> Result<Graph> {
    if !(1..=20).contains(&d) {
        return Err(invalid("hypercube dimension must be in 1..=20"));
    }
    let n = 1usize << d;
    let adj = (0..n)
        .map(|x| (0..d).map(|bit| x ^ (1 << bit)).collect())
        .collect();
    Ok(Graph::from_raw_adjacency(adj))
}

/// `C4` (cycle 0-1-2-3) with `k` pendant vertices on each of the antipodal
/// vertices 0 and 2. Pendants of 0 are `4..4+k`, pendants of 2 are
/// `4+k..4+2k`.
pub fn a_k(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(invalid("a_k needs k >= 1"));
    }
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
    edges.extend((4..4 + k).map(|v| (0, v)));
    edges.extend((4 + k..4 + 2 * k).map(|v| (2, v)));
    Graph::from_edge_list(4 + 2 * k, &edges)
}

/// Index of `a1` in [`figure1`].
pub const FIGURE1_U: usize = 0;
/// Index of `a12` in [`figure1`].
pub const FIGURE1_V: usize = 11;

/// The sporadic 16-vertex graph of diameter 11: a path `a1 … a12`
/// (indices 0..=11) with gadget vertices `b3` ~ {a2,a3,a4}, `b6` ~
/// {a5,a6,a7}, `b9` ~ {a8,a9,a10} and `b11` ~ {a11,a12} at indices 12..=15.
pub fn figure1() -> Graph {
    let a = |i: usize| i - 1;
    let mut edges: Vec<_> = (1..12).map(|i| (a(i), a(i + 1))).collect();
    for (b, attached) in [
        (12, &[2, 3, 4][..]),
        (13, &[5, 6, 7][..]),
        (14, &[8, 9, 10][..]),
        (15, &[11, 12][..]),
    ] {
        edges.extend(attached.iter().map(|&i| (a(i), b)));
    }
    Graph::from_edge_list(16, &edges).expect("fixture is well formed")
}

/// `G □ H` with vertex `(g, h)` at index `g·n(H) + h`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let nh = h.order();
    let idx = |a: usize, b: usize| a * nh + b;
    let adj = (0..g.order())
        .flat_map(|a| (0..nh).map(move |b| (a, b)))
        .map(|(a, b)| {
            let mut list: Vec<usize> = g.neighbors(a).iter().map(|&a2| idx(a2, b)).collect();
            list.extend(h.neighbors(b).iter().map(|&b2| idx(a, b2)));
            list
        })
        .collect();
    Graph::from_raw_adjacency(adj)
}

/// `G*`: a new pendant vertex `n` on `u` and `n + 1` on `v`.
pub fn attach_pendants_at(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let n = g.order();
    if u == v {
        return Err(invalid("pendant attachment needs u != v"));
    }
    let mut edges: Vec<_> = g.edges().collect();
    edges.push((u, n));
    edges.push((v, n + 1));
    Graph::from_edge_list(n + 2, &edges)
}

/// `G^{ℓ*}`: `len` rounds of [`attach_pendants_at`], each on the previous
/// round's new tips. Round `i` (from 0) adds `n + 2i` on the `u` side and
/// `n + 2i + 1` on the `v` side.
pub fn attach_pendant_paths_at(g: &Graph, u: usize, v: usize, len: usize) -> Result<Graph> {
    if len == 0 {
        return Err(invalid("pendant path length must be >= 1"));
    }
    let mut current = g.clone();
    let (mut tip_u, mut tip_v) = (u, v);
    for _ in 0..len {
        let n = current.order();
        current = attach_pendants_at(&current, tip_u, tip_v)?;
        (tip_u, tip_v) = (n, n + 1);
    }
    Ok(current)
}

/// A diameter-2 graph on `n` vertices with exactly `n_prime` universal
/// vertices and `E2 > W`.
///
/// Vertices `0..n_prime` are universal. The remaining `k = n - n_prime`
/// vertices induce `K_k` minus a minimum edge cover: a perfect matching when
/// `k` is even, a near-perfect matching plus one edge at the unmatched vertex
/// when `k` is odd. Every non-universal vertex thus misses exactly the
/// fewest edges needed to stay non-universal.
///
/// The postconditions are verified before returning; parameters where they
/// fail (only `n = 3, n_prime = 1`, which forces `P3` with `E2 = W`) are
/// rejected.
pub fn diameter2_e2_construction(n: usize, n_prime: usize) -> Result<Graph> {
    if n < 3 || n_prime == 0 || n_prime + 2 > n {
        return Err(invalid(format!(
            "construction needs 3 <= n and 0 < n' <= n - 2, got n = {n}, n' = {n_prime}"
        )));
    }
    let k = n - n_prime;
    let base = n_prime;
    let mut removed: Vec<(usize, usize)> = (0..k / 2)
        .map(|i| (base + 2 * i, base + 2 * i + 1))
        .collect();
    if k % 2 == 1 {
        removed.push((base, base + k - 1));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !removed.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edge_list(n, &edges)?;

    let d = all_pairs_distances(&g)?;
    let r = InvariantReport::from_distances(&g, &d);
    if r.n_universal != n_prime || r.diam != 2 || r.e2 <= r.wiener {
        return Err(invalid(format!(
            "construction at n = {n}, n' = {n_prime} gives n' = {}, diam = {}, E2 = {}, W = {}",
            r.n_universal, r.diam, r.e2, r.wiener
        )));
    }
    Ok(g)
}

/// Declarative description of one constructed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    DoubleStar(usize, usize),
    Hypercube(u32),
    Ak(usize),
    Figure1,
    Cartesian(Box<FamilySpec>, Box<FamilySpec>),
    /// `G*` at the canonical UD pair of the operand.
    PendantUd(Box<FamilySpec>),
    /// `G^{ℓ*}` at the canonical UD pair of the operand.
    PendantPathUd(Box<FamilySpec>, usize),
    Diameter2E2 { n: usize, n_prime: usize },
}

/// Maximum nesting of operands inside a [`FamilySpec`].
pub const MAX_SPEC_DEPTH: usize = 4;

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path(*n),
            FamilySpec::Cycle(n) => cycle(*n),
            FamilySpec::Complete(n) => complete(*n),
            FamilySpec::Star(n) => star(*n),
            FamilySpec::DoubleStar(a, b) => double_star(*a, *b),
            FamilySpec::Hypercube(d) => hypercube(*d),
            FamilySpec::Ak(k) => a_k(*k),
            FamilySpec::Figure1 => Ok(figure1()),
            FamilySpec::Cartesian(a, b) => Ok(cartesian_product(&a.build()?, &b.build()?)),
            FamilySpec::PendantUd(base) => {
                let g = base.build()?;
                let (u, v) = canonical_ud_pair(&g)?;
                attach_pendants_at(&g, u, v)
            }
            FamilySpec::PendantPathUd(base, len) => {
                let g = base.build()?;
                let (u, v) = canonical_ud_pair(&g)?;
                attach_pendant_paths_at(&g, u, v, *len)
            }
            FamilySpec::Diameter2E2 { n, n_prime } => diameter2_e2_construction(*n, *n_prime),
        }
    }
}

fn canonical_ud_pair(g: &Graph) -> Result<(usize, usize)> {
    let cert = ud_certificate(&all_pairs_distances(g)?);
    cert.pair
        .ok_or_else(|| invalid("operand graph has no universally diametrical pair"))
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::DoubleStar(a, b) => write!(f, "double_star:{a},{b}"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            FamilySpec::Ak(k) => write!(f, "ak:{k}"),
            FamilySpec::Figure1 => write!(f, "figure1"),
            FamilySpec::Cartesian(a, b) => write!(f, "cartesian({a},{b})"),
            FamilySpec::PendantUd(a) => write!(f, "pendant_ud({a})"),
            FamilySpec::PendantPathUd(a, l) => write!(f, "pendant_path_ud({a},l={l})"),
            FamilySpec::Diameter2E2 { n, n_prime } => write!(f, "thm29:n={n},np={n_prime}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = SpecParser {
            src: s,
            bytes: s.trim().as_bytes(),
            pos: 0,
        };
        let spec = p.spec(0)?;
        if p.pos != p.bytes.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(spec)
    }
}

#[derive(Debug, PartialEq)]
enum Param {
    Positional(usize),
    Named(String, usize),
}

struct SpecParser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl SpecParser<'_> {
    fn err(&self, msg: &str) -> Error {
        spec_err(self.src, format!("{msg} at offset {}", self.pos))
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        if start == self.pos || !self.bytes[start].is_ascii_alphabetic() {
            return Err(self.err("expected a family name"));
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).to_ascii_lowercase())
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected an integer"))
    }

    /// True when the input at the cursor looks like `digits` or `key=` for
    /// one of `keys`; anything else belongs to an enclosing operand list.
    fn at_param(&self, keys: &[&str]) -> bool {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => true,
            Some(c) if c.is_ascii_alphabetic() => {
                let rest = &self.bytes[self.pos..];
                let key_len = rest
                    .iter()
                    .take_while(|c| c.is_ascii_alphanumeric() || **c == b'_')
                    .count();
                rest.get(key_len) == Some(&b'=')
                    && keys.iter().any(|k| k.as_bytes() == &rest[..key_len])
            }
            _ => false,
        }
    }

    fn param(&mut self) -> Result<Param> {
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            return Ok(Param::Positional(self.number()?));
        }
        let key = self.ident()?;
        self.expect(b'=')?;
        Ok(Param::Named(key, self.number()?))
    }

    fn params(&mut self, keys: &[&str]) -> Result<Vec<Param>> {
        let mut out = vec![self.param()?];
        while self.peek() == Some(b',') {
            let save = self.pos;
            self.pos += 1;
            if self.at_param(keys) {
                out.push(self.param()?);
            } else {
                self.pos = save;
                break;
            }
        }
        Ok(out)
    }

    fn spec(&mut self, depth: usize) -> Result<FamilySpec> {
        if depth > MAX_SPEC_DEPTH {
            return Err(self.err("operands nested too deeply"));
        }
        let kind = self.ident()?;
        if self.eat(b'(') {
            let first = self.spec(depth + 1)?;
            let spec = match kind.as_str() {
                "cartesian" => {
                    self.expect(b',')?;
                    let second = self.spec(depth + 1)?;
                    FamilySpec::Cartesian(Box::new(first), Box::new(second))
                }
                "pendant_ud" | "pendant_path_ud" => {
                    let len = if self.eat(b',') {
                        let params = self.params(&["l"])?;
                        self.named_only(&params, "l")?
                    } else if kind == "pendant_path_ud" {
                        return Err(self.err("pendant_path_ud needs l=<length>"));
                    } else {
                        0
                    };
                    match len {
                        0 => FamilySpec::PendantUd(Box::new(first)),
                        l => FamilySpec::PendantPathUd(Box::new(first), l),
                    }
                }
                _ => return Err(self.err(&format!("{kind:?} takes no graph operands"))),
            };
            self.expect(b')')?;
            return Ok(spec);
        }
        let params = if self.eat(b':') {
            self.params(param_names(&kind))?
        } else {
            Vec::new()
        };
        self.leaf(&kind, &params)
    }

    fn named_only(&self, params: &[Param], key: &str) -> Result<usize> {
        match params {
            [Param::Named(k, v)] if k == key => {
                if *v == 0 {
                    Err(self.err("pendant path length must be >= 1"))
                } else {
                    Ok(*v)
                }
            }
            _ => Err(self.err(&format!("expected exactly `{key}=<int>`"))),
        }
    }

    /// Resolves parameters against the expected names, positionally or by key.
    fn bind(&self, kind: &str, params: &[Param], names: &[&str]) -> Result<Vec<usize>> {
        if params.len() != names.len() {
            return Err(self.err(&format!("{kind} takes {} parameter(s)", names.len())));
        }
        let mut out = vec![None; names.len()];
        for (i, p) in params.iter().enumerate() {
            let (slot, value) = match p {
                Param::Positional(v) => (i, *v),
                Param::Named(k, v) => {
                    let slot = names
                        .iter()
                        .position(|n| n == k)
                        .ok_or_else(|| self.err(&format!("{kind} has no parameter {k:?}")))?;
                    (slot, *v)
                }
            };
            if out[slot].replace(value).is_some() {
                return Err(self.err(&format!("parameter {} given twice", names[slot])));
            }
        }
        Ok(out.into_iter().map(|v| v.expect("all slots bound")).collect())
    }

    fn leaf(&self, kind: &str, params: &[Param]) -> Result<FamilySpec> {
        let names = param_names(kind);
        let one = || -> Result<usize> { Ok(self.bind(kind, params, names)?[0]) };
        Ok(match kind {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "star" => FamilySpec::Star(one()?),
            "double_star" | "doublestar" => {
                let v = self.bind(kind, params, names)?;
                FamilySpec::DoubleStar(v[0], v[1])
            }
            "hypercube" => FamilySpec::Hypercube(
                u32::try_from(one()?).map_err(|_| self.err("dimension too large"))?,
            ),
            "ak" | "a_k" => FamilySpec::Ak(one()?),
            "figure1" => {
                self.bind(kind, params, names)?;
                FamilySpec::Figure1
            }
            "thm29" => {
                let v = self.bind(kind, params, names)?;
                FamilySpec::Diameter2E2 {
                    n: v[0],
                    n_prime: v[1],
                }
            }
            "cartesian" | "pendant_ud" | "pendant_path_ud" => {
                return Err(self.err(&format!("{kind} needs parenthesized operands")))
            }
            _ => return Err(self.err(&format!("unknown family {kind:?}"))),
        })
    }
}

fn param_names(kind: &str) -> &'static [&'static str] {
    match kind {
        "path" | "cycle" | "complete" | "star" => &["n"],
        "double_star" | "doublestar" => &["a", "b"],
        "hypercube" => &["d"],
        "ak" | "a_k" => &["k"],
        "thm29" => &["n", "np"],
        _ => &[],
    }
}
