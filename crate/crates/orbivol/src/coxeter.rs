//! Coxeter symbols, diagrams, Gram matrices and signatures.
//!
//! A diagram node is a mirror hyperplane; an edge of weight q/p > 2 means
//! the mirrors meet at angle pπ/q (Gram entry −cos(pπ/q)), a dashed edge
//! means they admit a common perpendicular of length l (Gram entry
//! −cosh l), and absent edges mean orthogonal mirrors. Symbols only encode
//! weighted edges; dashed edges are added separately, e.g. when truncating
//! an orthoscheme by the polar hyperplane of an ultra-ideal vertex.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hp::{require_min_digits, working_digits, HPReal};

/// Edge weight q/p, stored reduced, with q/p > 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Weight {
    pub num: u32,
    pub den: u32,
}

impl Weight {
    pub fn new(num: u32, den: u32) -> Result<Weight> {
        if den == 0 || num == 0 {
            return Err(Error::Validation("weight must be a positive rational".into()));
        }
        let g = gcd(num, den);
        let (num, den) = (num / g, den / g);
        if num <= 2 * den {
            return Err(Error::Validation(format!(
                "weight {num}/{den} must exceed 2 (angle strictly below pi/2)"
            )));
        }
        Ok(Weight { num, den })
    }

    /// Gram entry −cos(pπ/q).
    fn gram_entry(&self, wp: u32) -> HPReal {
        let angle = &(&HPReal::pi(wp) * &HPReal::from_u64(self.den as u64, wp))
            / &HPReal::from_u64(self.num as u64, wp);
        -angle.cos()
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Debug)]
pub enum EdgeKind {
    Weighted(Weight),
    /// Common perpendicular; `None` length means unknown, to be solved.
    Dashed(Option<HPReal>),
}

#[derive(Clone, Debug)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub kind: EdgeKind,
}

/// Weighted mirror graph.
#[derive(Clone, Debug)]
pub struct CoxeterDiagram {
    pub nodes: usize,
    pub edges: Vec<Edge>,
}

impl CoxeterDiagram {
    pub fn new(nodes: usize, edges: Vec<Edge>) -> Result<CoxeterDiagram> {
        let d = CoxeterDiagram { nodes, edges };
        d.validate()?;
        Ok(d)
    }

    /// No self-loops, at most one edge per pair, indices in range, and the
    /// graph minus dashed edges connected.
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for e in &self.edges {
            if e.i == e.j {
                return Err(Error::Validation(format!("self-loop at node {}", e.i)));
            }
            if e.i >= self.nodes || e.j >= self.nodes {
                return Err(Error::Validation(format!(
                    "edge ({}, {}) outside node range 0..{}",
                    e.i, e.j, self.nodes
                )));
            }
            let key = (e.i.min(e.j), e.i.max(e.j));
            if !seen.insert(key) {
                return Err(Error::Validation(format!(
                    "duplicate edge between nodes {} and {}",
                    key.0, key.1
                )));
            }
        }
        // connectivity of the solid (non-dashed) part, ignoring isolated
        // polar nodes that carry only dashed edges
        let mut adj = vec![Vec::new(); self.nodes];
        let mut has_solid = vec![false; self.nodes];
        for e in &self.edges {
            if matches!(e.kind, EdgeKind::Weighted(_)) {
                adj[e.i].push(e.j);
                adj[e.j].push(e.i);
                has_solid[e.i] = true;
                has_solid[e.j] = true;
            }
        }
        let solid: Vec<usize> = (0..self.nodes).filter(|&i| has_solid[i]).collect();
        if let Some(&start) = solid.first() {
            let mut visited = vec![false; self.nodes];
            let mut stack = vec![start];
            visited[start] = true;
            while let Some(v) = stack.pop() {
                for &w in &adj[v] {
                    if !visited[w] {
                        visited[w] = true;
                        stack.push(w);
                    }
                }
            }
            if solid.iter().any(|&i| !visited[i]) {
                return Err(Error::Validation(
                    "diagram minus dashed edges is not connected".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn dashed_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(|e| matches!(e.kind, EdgeKind::Dashed(_)))
    }

    fn unknown_dashed(&self) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .filter_map(|e| match e.kind {
                EdgeKind::Dashed(None) => Some((e.i, e.j)),
                _ => None,
            })
            .collect()
    }

    /// Append a dashed edge. An index equal to the current node count
    /// creates a fresh polar node orthogonal to everything else.
    pub fn add_dashed(&mut self, i: usize, j: usize, length: Option<HPReal>) -> Result<()> {
        let limit = self.nodes;
        if i > limit || j > limit || (i == limit && j == limit) {
            return Err(Error::Validation(format!(
                "dashed edge ({i}, {j}) out of range; at most one new node (index {limit}) may be introduced"
            )));
        }
        if i == limit || j == limit {
            self.nodes += 1;
        }
        self.edges.push(Edge { i, j, kind: EdgeKind::Dashed(length) });
        self.validate()
    }
}

/// Parse a bracketed Coxeter symbol such as `[5,3,3,3,4]`, `[5,3,3,5/2,5]`
/// or `[5,3,3,3,3^{1,1}]` (trailing Y-branch of weight-3 strings).
pub fn parse_symbol(s: &str) -> Result<CoxeterDiagram> {
    let err = |pos: usize, detail: &str| Error::Parse { position: pos, detail: detail.into() };
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .ok_or_else(|| err(0, "expected '['"))?
        .strip_suffix(']')
        .ok_or_else(|| err(t.len().saturating_sub(1), "expected closing ']'"))?;
    let base = s.find('[').unwrap_or(0) + 1;
    let mut edges: Vec<Edge> = Vec::new();
    let mut nodes = 1usize; // leading node of the chain
    let items: Vec<(usize, &str)> = {
        // split on commas not inside braces
        let mut out = Vec::new();
        let mut depth = 0usize;
        let mut start = 0usize;
        for (k, c) in inner.char_indices() {
            match c {
                '{' => depth += 1,
                '}' => depth = depth.saturating_sub(1),
                ',' if depth == 0 => {
                    out.push((start, &inner[start..k]));
                    start = k + 1;
                }
                _ => {}
            }
        }
        out.push((start, &inner[start..]));
        out
    };
    let last = items.len() - 1;
    for (idx, (pos, raw)) in items.iter().enumerate() {
        let item = raw.trim();
        let at = base + pos;
        if item.is_empty() {
            return Err(err(at, "empty symbol entry"));
        }
        if let Some(rest) = item.strip_prefix("3^") {
            if idx != last {
                return Err(err(at, "branch token is only allowed in the last position"));
            }
            let body = rest
                .strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .ok_or_else(|| err(at, "branch token must look like 3^{i,j}"))?;
            let mut arms = Vec::new();
            for part in body.split(',') {
                let n: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| err(at, "branch arm lengths must be positive integers"))?;
                if n == 0 {
                    return Err(err(at, "branch arm length must be positive"));
                }
                arms.push(n);
            }
            if arms.len() != 2 {
                return Err(err(at, "branch token must carry exactly two arm lengths"));
            }
            // two weight-3 strings emanating from the current chain end
            let hub = nodes - 1;
            let w3 = Weight::new(3, 1)?;
            for &arm in &arms {
                let mut prev = hub;
                for _ in 0..arm {
                    let next = nodes;
                    nodes += 1;
                    edges.push(Edge { i: prev, j: next, kind: EdgeKind::Weighted(w3) });
                    prev = next;
                }
            }
            continue;
        }
        let (num, den) = match item.split_once('/') {
            Some((a, b)) => (
                a.trim().parse::<u32>().map_err(|_| err(at, "invalid weight numerator"))?,
                b.trim().parse::<u32>().map_err(|_| err(at, "invalid weight denominator"))?,
            ),
            None => (item.parse::<u32>().map_err(|_| err(at, "invalid integer weight"))?, 1),
        };
        let w = Weight::new(num, den)?;
        let next = nodes;
        nodes += 1;
        edges.push(Edge { i: next - 1, j: next, kind: EdgeKind::Weighted(w) });
    }
    CoxeterDiagram::new(nodes, edges)
}

/// Render a chain (or chain followed by a Y-branch) back to its symbol.
/// Returns `None` for diagrams that are not symbol-shaped; dashed edges are
/// omitted, as in symbols.
pub fn render_symbol(d: &CoxeterDiagram) -> Option<String> {
    let weighted: Vec<&Edge> = d
        .edges
        .iter()
        .filter(|e| matches!(e.kind, EdgeKind::Weighted(_)))
        .collect();
    // adjacency over weighted edges only
    let mut adj: Vec<Vec<(usize, Weight)>> = vec![Vec::new(); d.nodes];
    for e in &weighted {
        if let EdgeKind::Weighted(w) = e.kind {
            adj[e.i].push((e.j, w));
            adj[e.j].push((e.i, w));
        }
    }
    let solid: Vec<usize> = (0..d.nodes).filter(|&i| !adj[i].is_empty()).collect();
    if solid.is_empty() {
        return None;
    }
    let degrees: Vec<usize> = adj.iter().map(Vec::len).collect();
    let n3 = solid.iter().filter(|&&i| degrees[i] == 3).count();
    if n3 > 1 || solid.iter().any(|&i| degrees[i] > 3) {
        return None;
    }
    if n3 == 0 {
        // plain chain: walk from one endpoint
        let start = *solid.iter().find(|&&i| degrees[i] == 1)?;
        let mut out = Vec::new();
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = adj[cur].iter().find(|&&(n, _)| n != prev)?;
            out.push(next.1.to_string());
            prev = cur;
            cur = next.0;
            if degrees[cur] == 1 && out.len() == weighted.len() {
                break;
            }
            if out.len() > weighted.len() {
                return None;
            }
        }
        return Some(format!("[{}]", out.join(",")));
    }
    // Y-shape: chain into the hub plus two weight-3 arms
    let hub = *solid.iter().find(|&&i| degrees[i] == 3)?;
    let mut arms: Vec<Vec<Weight>> = Vec::new();
    for &(first, w) in &adj[hub] {
        let mut arm = vec![w];
        let mut prev = hub;
        let mut cur = first;
        while degrees[cur] == 2 {
            let next = adj[cur].iter().find(|&&(n, _)| n != prev)?;
            arm.push(next.1);
            prev = cur;
            cur = next.0;
        }
        if degrees[cur] != 1 {
            return None;
        }
        arms.push(arm);
    }
    // the trunk is the arm with a non-3 weight (or the longest); the two
    // pure weight-3 arms become the branch token
    let w3 = Weight { num: 3, den: 1 };
    let mut branch: Vec<usize> = Vec::new();
    let mut trunk: Option<Vec<Weight>> = None;
    let mut sorted = arms.clone();
    sorted.sort_by_key(|a| std::cmp::Reverse(a.len()));
    for arm in sorted {
        if trunk.is_none() && !(arm.iter().all(|w| *w == w3) && branch.len() < 2) {
            trunk = Some(arm);
        } else if branch.len() < 2 && arm.iter().all(|w| *w == w3) {
            branch.push(arm.len());
        } else if trunk.is_none() {
            trunk = Some(arm);
        } else {
            return None;
        }
    }
    let trunk = trunk?;
    if branch.len() != 2 {
        return None;
    }
    branch.sort();
    let mut parts: Vec<String> = trunk.iter().rev().map(Weight::to_string).collect();
    parts.push(format!("3^{{{},{}}}", branch[1], branch[0]));
    Some(format!("[{}]", parts.join(",")))
}

/// Symmetric Gram matrix of a diagram.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub entries: Vec<Vec<HPReal>>,
    pub dimension: usize,
}

/// Sign counts of the eigenvalue spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.positive, self.negative, self.zero)
    }
}

/// Build the Gram matrix; fails on unresolved dashed edges.
pub fn gram(d: &CoxeterDiagram, digits: u32) -> Result<GramMatrix> {
    require_min_digits(digits)?;
    d.validate()?;
    let wp = working_digits(digits);
    let n = d.nodes;
    let mut m = vec![vec![HPReal::zero(wp); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = HPReal::from_u64(1, wp);
    }
    for e in &d.edges {
        let entry = match &e.kind {
            EdgeKind::Weighted(w) => w.gram_entry(wp),
            EdgeKind::Dashed(Some(l)) => {
                #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN lengths too
                if !(l > &HPReal::zero(wp)) {
                    return Err(Error::Validation(format!(
                        "dashed edge ({}, {}) has non-positive length {l}",
                        e.i, e.j
                    )));
                }
                -l.cosh()
            }
            EdgeKind::Dashed(None) => return Err(Error::UnresolvedEdge { i: e.i, j: e.j }),
        };
        m[e.i][e.j] = entry.clone();
        m[e.j][e.i] = entry;
    }
    Ok(GramMatrix { entries: m, dimension: n })
}

/// Eigenvalue sign counts with |λ| < tol counted as zero (Jacobi sweeps).
pub fn inertia(g: &GramMatrix, tol: &HPReal) -> Inertia {
    let eigen = jacobi_eigenvalues(&g.entries);
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    for ev in eigen {
        if &ev.abs() < tol {
            out.zero += 1;
        } else if ev.is_negative() {
            out.negative += 1;
        } else {
            out.positive += 1;
        }
    }
    out
}

/// Default eigenvalue zero-tolerance, 10^(−digits/2).
pub fn default_zero_tol(digits: u32) -> HPReal {
    HPReal::pow10(-((digits / 2) as i64), working_digits(digits))
}

#[allow(clippy::needless_range_loop)] // explicit indices match the matrix algebra
fn jacobi_eigenvalues(m: &[Vec<HPReal>]) -> Vec<HPReal> {
    let n = m.len();
    let wp = m[0][0].digits();
    let mut a: Vec<Vec<HPReal>> = m.to_vec();
    let stop = HPReal::pow10(-(2 * wp as i64), wp);
    let tiny = HPReal::pow10(-(2 * wp as i64 + 10), wp);
    for _sweep in 0..60 {
        let mut off = HPReal::zero(wp);
        for i in 0..n {
            for j in i + 1..n {
                off = &off + &a[i][j].square();
            }
        }
        if off < stop {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < tiny {
                    continue;
                }
                let theta = &(&a[q][q] - &a[p][p]) / &(&HPReal::from_u64(2, wp) * &a[p][q]);
                let theta_abs = theta.abs();
                let root = (&theta_abs.square() + &HPReal::from_u64(1, wp)).sqrt().unwrap();
                let mut t = (&theta_abs + &root).recip().unwrap();
                if theta.is_negative() {
                    t = -t;
                }
                let c = (&t.square() + &HPReal::from_u64(1, wp)).sqrt().unwrap().recip().unwrap();
                let s = &t * &c;
                for k in 0..n {
                    let akp = a[k][p].clone();
                    let akq = a[k][q].clone();
                    a[k][p] = &(&c * &akp) - &(&s * &akq);
                    a[k][q] = &(&s * &akp) + &(&c * &akq);
                }
                for k in 0..n {
                    let apk = a[p][k].clone();
                    let aqk = a[q][k].clone();
                    a[p][k] = &(&c * &apk) - &(&s * &aqk);
                    a[q][k] = &(&s * &apk) + &(&c * &aqk);
                }
            }
        }
    }
    (0..n).map(|i| a[i][i].clone()).collect()
}

#[allow(clippy::needless_range_loop)]
fn lu_det(m: &[Vec<HPReal>]) -> HPReal {
    let n = m.len();
    let wp = m[0][0].digits();
    let mut a: Vec<Vec<HPReal>> = m.to_vec();
    let mut det = HPReal::from_u64(1, wp);
    for col in 0..n {
        let mut piv = col;
        for r in col + 1..n {
            if a[r][col].abs() > a[piv][col].abs() {
                piv = r;
            }
        }
        if piv != col {
            a.swap(col, piv);
            det = -det;
        }
        if a[col][col].is_zero() {
            return HPReal::zero(wp);
        }
        det = &det * &a[col][col];
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            for j in col..n {
                a[r][j] = &a[r][j] - &(&f * &a[col][j]);
            }
        }
    }
    det
}

/// Determinant of the Gram matrix; exposed for residual checks.
pub fn gram_det(g: &GramMatrix) -> HPReal {
    lu_det(&g.entries)
}

/// Solve the one unknown dashed-edge length of a diagram.
///
/// The determinant of the Gram matrix is a quadratic polynomial in
/// c = cosh l; the root with c > 1 whose matrix has inertia
/// (n−2, 1, 1) is selected and l = arccosh c returned.
pub fn solve_dashed(d: &CoxeterDiagram, edge: (usize, usize), digits: u32) -> Result<HPReal> {
    require_min_digits(digits)?;
    let wp = working_digits(digits);
    let unknown = d.unknown_dashed();
    if unknown.len() != 1 {
        return Err(Error::Validation(format!(
            "solve_dashed requires exactly one unknown dashed edge, found {}",
            unknown.len()
        )));
    }
    let (ui, uj) = unknown[0];
    if (ui, uj) != edge && (uj, ui) != edge {
        return Err(Error::Validation(format!(
            "requested edge ({}, {}) is not the unknown dashed edge ({ui}, {uj})",
            edge.0, edge.1
        )));
    }
    // Gram matrix with the unknown entry set to −c (c need not exceed 1
    // during the fit, so the entry is patched in directly)
    let gram_at = |c: &HPReal| -> Result<GramMatrix> {
        let filtered: Vec<Edge> = d
            .edges
            .iter()
            .filter(|e| !matches!(e.kind, EdgeKind::Dashed(None)))
            .cloned()
            .collect();
        let partial = CoxeterDiagram { nodes: d.nodes, edges: filtered };
        let mut g = gram(&partial, digits)?;
        g.entries[ui][uj] = -c.clone();
        g.entries[uj][ui] = -c.clone();
        Ok(g)
    };
    // det is quadratic in c: fit from c = 0, 1, −1
    let d0 = lu_det(&gram_at(&HPReal::zero(wp))?.entries);
    let dp = lu_det(&gram_at(&HPReal::from_u64(1, wp))?.entries);
    let dm = lu_det(&gram_at(&HPReal::from_i64(-1, wp))?.entries);
    let half = HPReal::from_ratio(1, 2, wp);
    let q2 = &(&(&dp + &dm) * &half) - &d0;
    let q1 = &(&dp - &dm) * &half;
    let q0 = d0;

    let one = HPReal::from_u64(1, wp);
    let tiny = HPReal::pow10(-(wp as i64 - 4), wp);
    let mut roots: Vec<HPReal> = Vec::new();
    if q2.abs() < tiny {
        if q1.abs() >= tiny {
            roots.push(-(&q0 / &q1));
        }
    } else {
        let disc = &q1.square() - &(&(&HPReal::from_u64(4, wp) * &q2) * &q0);
        if !disc.is_negative() {
            let s = disc.sqrt()?;
            let two_q2 = &HPReal::from_u64(2, wp) * &q2;
            roots.push(&(&(-&q1) + &s) / &two_q2);
            roots.push(&(&(-&q1) - &s) / &two_q2);
        }
    }
    let expected = Inertia { positive: d.nodes - 2, negative: 1, zero: 1 };
    let zero_tol = default_zero_tol(digits);
    let mut valid: Vec<HPReal> = Vec::new();
    for c in roots {
        if c <= one {
            continue;
        }
        let g = gram_at(&c)?;
        if inertia(&g, &zero_tol) == expected {
            valid.push(c);
        }
    }
    match valid.len() {
        0 => Err(Error::NonRealizable(
            "no root with cosh l > 1 and Lorentzian degenerate inertia".into(),
        )),
        1 => valid[0].acosh(),
        _ => Err(Error::Ambiguous(valid[0].to_string(), valid[1].to_string())),
    }
}

// ---- diagram file format ----

/// JSON file form of a diagram: `{"nodes": n, "edges": [...]}` where each
/// edge is `{"i": .., "j": .., "weight": "5"|"5/2"}` or
/// `{"i": .., "j": .., "dashed": true, "length": "1.25"?}`.
#[derive(Serialize, Deserialize)]
pub struct DiagramFile {
    pub nodes: usize,
    pub edges: Vec<EdgeFile>,
}

#[derive(Serialize, Deserialize)]
pub struct EdgeFile {
    pub i: usize,
    pub j: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dashed: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<String>,
}

impl DiagramFile {
    pub fn into_diagram(self, digits: u32) -> Result<CoxeterDiagram> {
        let mut edges = Vec::new();
        for e in self.edges {
            let kind = match (e.weight, e.dashed) {
                (Some(w), None) | (Some(w), Some(false)) => {
                    let (num, den) = match w.split_once('/') {
                        Some((a, b)) => (
                            a.trim().parse().map_err(|_| Error::Validation(format!("bad weight {w:?}")))?,
                            b.trim().parse().map_err(|_| Error::Validation(format!("bad weight {w:?}")))?,
                        ),
                        None => (
                            w.trim().parse().map_err(|_| Error::Validation(format!("bad weight {w:?}")))?,
                            1,
                        ),
                    };
                    EdgeKind::Weighted(Weight::new(num, den)?)
                }
                (None, Some(true)) => match e.length {
                    Some(l) => EdgeKind::Dashed(Some(HPReal::parse(&l, working_digits(digits))?)),
                    None => EdgeKind::Dashed(None),
                },
                _ => {
                    return Err(Error::Validation(format!(
                        "edge ({}, {}) must carry either a weight or dashed: true",
                        e.i, e.j
                    )))
                }
            };
            edges.push(Edge { i: e.i, j: e.j, kind });
        }
        CoxeterDiagram::new(self.nodes, edges)
    }
}

/// The prism diagram for P(α): chain [5,3,3,3,α] plus the polar node of the
/// truncated ultra-ideal vertex, joined by a dashed edge of unknown length
/// to the facet at the α end of the chain (the attachment validated by the
/// inertia criterion; see `solve_dashed`).
pub fn prism_diagram(alpha_weight: Weight) -> Result<CoxeterDiagram> {
    let w3 = Weight::new(3, 1)?;
    let w5 = Weight::new(5, 1)?;
    let mut edges = vec![
        Edge { i: 0, j: 1, kind: EdgeKind::Weighted(w5) },
        Edge { i: 1, j: 2, kind: EdgeKind::Weighted(w3) },
        Edge { i: 2, j: 3, kind: EdgeKind::Weighted(w3) },
        Edge { i: 3, j: 4, kind: EdgeKind::Weighted(w3) },
        Edge { i: 4, j: 5, kind: EdgeKind::Weighted(alpha_weight) },
    ];
    edges.push(Edge { i: 6, j: 5, kind: EdgeKind::Dashed(None) });
    CoxeterDiagram::new(7, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_linear_symbols() {
        let d = parse_symbol("[5,3,3,3,4]").unwrap();
        assert_eq!(d.nodes, 6);
        assert_eq!(d.edges.len(), 5);
        let d = parse_symbol("[5,3,3,5/2,5]").unwrap();
        assert_eq!(d.nodes, 6);
        match d.edges[3].kind {
            EdgeKind::Weighted(w) => assert_eq!((w.num, w.den), (5, 2)),
            _ => panic!("expected weighted edge"),
        }
    }

    #[test]
    fn parse_branch_symbol() {
        let d = parse_symbol("[5,3,3,3,3^{1,1}]").unwrap();
        assert_eq!(d.nodes, 7);
        assert_eq!(d.edges.len(), 6);
        // hub is the chain end, node 4
        let hub_edges = d.edges.iter().filter(|e| e.i == 4 || e.j == 4).count();
        assert_eq!(hub_edges, 3);
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(parse_symbol("5,3,3"), Err(Error::Parse { .. })));
        assert!(matches!(parse_symbol("[5,,3]"), Err(Error::Parse { .. })));
        assert!(matches!(parse_symbol("[5,x,3]"), Err(Error::Parse { .. })));
        // weight ≤ 2 is a validation error
        assert!(matches!(parse_symbol("[5,2,3]"), Err(Error::Validation(_))));
        assert!(matches!(parse_symbol("[5,7/6,3]"), Err(Error::Validation(_))));
    }

    #[test]
    fn round_trip_table_symbols() {
        for s in ["[5,3,3,3,3]", "[5,3,3,3,4]", "[5,3,3,3,3^{1,1}]", "[5,3,3,5/2,5]"] {
            let d = parse_symbol(s).unwrap();
            assert_eq!(render_symbol(&d).as_deref(), Some(s), "round trip of {s}");
        }
    }

    #[test]
    fn gram_of_a6_is_positive_definite() {
        let d = parse_symbol("[3,3,3,3,3]").unwrap();
        let g = gram(&d, 30).unwrap();
        for i in 0..5 {
            let half = HPReal::from_ratio(-1, 2, 40);
            assert!((&g.entries[i][i + 1] - &half).abs() < HPReal::pow10(-35, 40));
        }
        let inr = inertia(&g, &default_zero_tol(30));
        assert_eq!(inr, Inertia { positive: 6, negative: 0, zero: 0 });
    }

    #[test]
    fn gram_entries_of_prism_chain() {
        let d = parse_symbol("[5,3,3,3,4]").unwrap();
        let g = gram(&d, 30).unwrap();
        let wp = 40;
        let pi = HPReal::pi(wp);
        let expect = [
            -(&pi / &HPReal::from_u64(5, wp)).cos(),
            HPReal::from_ratio(-1, 2, wp),
            HPReal::from_ratio(-1, 2, wp),
            HPReal::from_ratio(-1, 2, wp),
            -(&pi / &HPReal::from_u64(4, wp)).cos(),
        ];
        for (i, e) in expect.iter().enumerate() {
            assert!((&g.entries[i][i + 1] - e).abs() < HPReal::pow10(-32, wp));
        }
        // Lorentzian signature for the compact 5-orthoscheme chains
        let inr = inertia(&g, &default_zero_tol(30));
        assert_eq!(inr, Inertia { positive: 5, negative: 1, zero: 0 });
    }

    #[test]
    fn gram_with_dashed_edge_is_minus_cosh() {
        let mut d = parse_symbol("[5,3,3,3,3]").unwrap();
        let l = HPReal::parse("0.75", 40).unwrap();
        d.add_dashed(6, 5, Some(l.clone())).unwrap();
        let g = gram(&d, 30).unwrap();
        assert!((&g.entries[6][5] + &l.cosh()).abs() < HPReal::pow10(-30, 40));
    }

    #[test]
    fn gram_fails_on_unknown_length() {
        let mut d = parse_symbol("[5,3,3,3,3]").unwrap();
        d.add_dashed(6, 5, None).unwrap();
        assert!(matches!(gram(&d, 30), Err(Error::UnresolvedEdge { .. })));
    }

    #[test]
    fn identity_inertia() {
        let d = CoxeterDiagram::new(6, vec![]).unwrap();
        let g = gram(&d, 30).unwrap();
        assert_eq!(inertia(&g, &default_zero_tol(30)), Inertia { positive: 6, negative: 0, zero: 0 });
    }

    #[test]
    fn solve_dashed_prism_diagrams() {
        let digits = 30;
        for (alpha, expect_l) in [(Weight::new(3, 1).unwrap(), 0.383598609), (Weight::new(4, 1).unwrap(), 0.530637531)] {
            let d = prism_diagram(alpha).unwrap();
            let l = solve_dashed(&d, (6, 5), digits).unwrap();
            assert!((l.to_f64() - expect_l).abs() < 1e-8, "l = {l}");
            // det residual at the solved root
            let mut solved = prism_diagram(alpha).unwrap();
            solved.edges.pop();
            solved.edges.push(Edge { i: 6, j: 5, kind: EdgeKind::Dashed(Some(l)) });
            let g = gram(&solved, digits).unwrap();
            assert!(gram_det(&g).abs() < HPReal::pow10(-25, 40), "det residual");
            assert_eq!(inertia(&g, &default_zero_tol(digits)), Inertia { positive: 5, negative: 1, zero: 1 });
        }
    }

    #[test]
    fn solve_dashed_wrong_attachment_is_non_realizable() {
        // polar node orthogonal to nodes 1..5, dashed to the 5-end facet:
        // the determinant has no root with cosh l > 1
        let w3 = Weight::new(3, 1).unwrap();
        let w5 = Weight::new(5, 1).unwrap();
        let edges = vec![
            Edge { i: 0, j: 1, kind: EdgeKind::Weighted(w5) },
            Edge { i: 1, j: 2, kind: EdgeKind::Weighted(w3) },
            Edge { i: 2, j: 3, kind: EdgeKind::Weighted(w3) },
            Edge { i: 3, j: 4, kind: EdgeKind::Weighted(w3) },
            Edge { i: 4, j: 5, kind: EdgeKind::Weighted(w3) },
            Edge { i: 6, j: 0, kind: EdgeKind::Dashed(None) },
        ];
        let d = CoxeterDiagram::new(7, edges).unwrap();
        assert!(matches!(solve_dashed(&d, (6, 0), 30), Err(Error::NonRealizable(_))));
    }

    #[test]
    fn solve_dashed_two_node_toy_is_non_realizable() {
        // det = 1 - c² forces c = 1, no common perpendicular
        let d = CoxeterDiagram::new(2, vec![Edge { i: 0, j: 1, kind: EdgeKind::Dashed(None) }]).unwrap();
        assert!(matches!(solve_dashed(&d, (0, 1), 30), Err(Error::NonRealizable(_))));
    }

    #[test]
    fn inertia_invariant_under_permutation() {
        let d = prism_diagram(Weight::new(3, 1).unwrap()).unwrap();
        let l = solve_dashed(&d, (6, 5), 30).unwrap();
        let mut solved = d.clone();
        solved.edges.pop();
        solved.edges.push(Edge { i: 6, j: 5, kind: EdgeKind::Dashed(Some(l)) });
        let g = gram(&solved, 30).unwrap();
        let base = inertia(&g, &default_zero_tol(30));
        // a fixed featureful permutation
        let perm = [3usize, 0, 6, 2, 5, 1, 4];
        let n = g.dimension;
        let mut pg = vec![vec![HPReal::zero(40); n]; n];
        for i in 0..n {
            for j in 0..n {
                pg[i][j] = g.entries[perm[i]][perm[j]].clone();
            }
        }
        let permuted = GramMatrix { entries: pg, dimension: n };
        assert_eq!(inertia(&permuted, &default_zero_tol(30)), base);
    }

    #[test]
    fn principal_minors_after_solving() {
        // deleting the polar node recovers the (5,1,0) chain
        for w in [Weight::new(3, 1).unwrap(), Weight::new(4, 1).unwrap()] {
            let d = prism_diagram(w).unwrap();
            let l = solve_dashed(&d, (6, 5), 30).unwrap();
            let mut solved = d.clone();
            solved.edges.pop();
            solved.edges.push(Edge { i: 6, j: 5, kind: EdgeKind::Dashed(Some(l)) });
            let g = gram(&solved, 30).unwrap();
            let minor: Vec<Vec<HPReal>> = (0..6).map(|i| g.entries[i][..6].to_vec()).collect();
            let gm = GramMatrix { entries: minor, dimension: 6 };
            assert_eq!(inertia(&gm, &default_zero_tol(30)), Inertia { positive: 5, negative: 1, zero: 0 });
        }
    }

    #[test]
    fn diagram_file_round_trip() {
        let json = r#"{"nodes":7,"edges":[
            {"i":0,"j":1,"weight":"5"},
            {"i":1,"j":2,"weight":"3"},
            {"i":2,"j":3,"weight":"3"},
            {"i":3,"j":4,"weight":"3"},
            {"i":4,"j":5,"weight":"3"},
            {"i":6,"j":5,"dashed":true}
        ]}"#;
        let file: DiagramFile = serde_json::from_str(json).unwrap();
        let d = file.into_diagram(30).unwrap();
        assert_eq!(d.nodes, 7);
        let l = solve_dashed(&d, (6, 5), 30).unwrap();
        assert!((l.to_f64() - 0.383598609).abs() < 1e-8);
    }

    #[test]
    fn validation_rejects_malformed_diagrams() {
        // self loop
        assert!(CoxeterDiagram::new(2, vec![Edge { i: 0, j: 0, kind: EdgeKind::Dashed(None) }]).is_err());
        // duplicate edge
        let w = Weight::new(3, 1).unwrap();
        assert!(CoxeterDiagram::new(
            2,
            vec![
                Edge { i: 0, j: 1, kind: EdgeKind::Weighted(w) },
                Edge { i: 1, j: 0, kind: EdgeKind::Weighted(w) }
            ]
        )
        .is_err());
        // disconnected solid part
        let disconnected = CoxeterDiagram::new(
            4,
            vec![
                Edge { i: 0, j: 1, kind: EdgeKind::Weighted(w) },
                Edge { i: 2, j: 3, kind: EdgeKind::Weighted(w) },
            ],
        );
        assert!(disconnected.is_err());
    }
}
