//! Forest degree-two webs: the canonical two-white / three-white model, the
//! map ω to tableaux, realization from a noncrossing matching, and structural
//! validation of the exported graph form.
//!
//! Boundary labels run `1..=2r` counterclockwise from a fixed basepoint. A
//! web's white vertices are in bijection with the cyclic short arcs of its
//! matching; the gaps between consecutive boundary sectors sit exactly at
//! those short arcs. Two webs are equal iff their realized matchings are
//! equal, so the stored form is canonicalized: the block or sector containing
//! label 1 comes first.

use std::fmt;

use crate::catalan::{cyclic_short_arcs, matching_to_tableau, NoncrossingMatching, Tableau2Col};
use crate::error::{Error, Result};

/// Largest `r` for which web enumeration is allowed (the underlying matching
/// scan is Catalan-sized).
pub const WEB_ENUMERATION_MAX_R: usize = 14;

/// A cyclic interval of boundary labels: `start, start+1, ...` taken mod `2r`
/// in `1..=2r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicInterval {
    pub start: usize,
    pub len: usize,
}

impl CyclicInterval {
    pub fn labels(&self, n: usize) -> Vec<usize> {
        (0..self.len).map(|t| wrap(self.start + t, n)).collect()
    }

    pub fn contains(&self, label: usize, n: usize) -> bool {
        // distance from start to label, walking forward
        (label + n - self.start) % n < self.len
    }

    /// Last label of the interval.
    pub fn end(&self, n: usize) -> usize {
        wrap(self.start + self.len - 1, n)
    }
}

/// Normalizes any positive label to `1..=n`.
fn wrap(x: usize, n: usize) -> usize {
    (x - 1) % n + 1
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WebKind {
    /// Two white vertices, no interior black vertex; the two blocks are
    /// complementary cyclic intervals of size `r` and the matching is the
    /// cyclic rainbow between them.
    TwoWhite { blocks: [CyclicInterval; 2] },
    /// Three white vertices and one interior black vertex joined to each
    /// white by an hourglass of multiplicity `hourglass[i]`.
    ThreeWhite {
        sectors: [CyclicInterval; 3],
        hourglass: [usize; 3],
    },
}

/// A forest degree-two web in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ForestWeb {
    r: usize,
    kind: WebKind,
}

impl ForestWeb {
    /// Two-white web from the start of either block; canonicalized so the
    /// block containing label 1 comes first.
    pub fn two_white(r: usize, block_start: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidWeb("r must be positive".into()));
        }
        let n = 2 * r;
        if block_start < 1 || block_start > n {
            return Err(Error::InvalidWeb(format!(
                "block start {block_start} out of range 1..={n}"
            )));
        }
        let a = CyclicInterval { start: block_start, len: r };
        let b = CyclicInterval { start: wrap(block_start + r, n), len: r };
        let blocks = if a.contains(1, n) { [a, b] } else { [b, a] };
        Ok(Self { r, kind: WebKind::TwoWhite { blocks } })
    }

    /// Three-white web from its sector decomposition and hourglass
    /// multiplicities; canonicalized so the sector containing label 1 comes
    /// first.
    pub fn three_white(
        r: usize,
        sectors: [CyclicInterval; 3],
        hourglass: [usize; 3],
    ) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidWeb("r must be positive".into()));
        }
        let n = 2 * r;
        if sectors.iter().map(|s| s.len).sum::<usize>() != n {
            return Err(Error::InvalidWeb("sector sizes must sum to 2r".into()));
        }
        for (s, &h) in sectors.iter().zip(hourglass.iter()) {
            if s.len == 0 || s.start < 1 || s.start > n {
                return Err(Error::InvalidWeb("sector out of range or empty".into()));
            }
            if h == 0 {
                return Err(Error::InvalidWeb("hourglass multiplicity must be positive".into()));
            }
            if s.len + h != r {
                return Err(Error::InvalidWeb(format!(
                    "white vertex degree violated: sector size {} + hourglass {} != r = {}",
                    s.len, h, r
                )));
            }
        }
        if hourglass.iter().sum::<usize>() != r {
            return Err(Error::InvalidWeb(
                "hourglass multiplicities must sum to r".into(),
            ));
        }
        for k in 0..3 {
            let next = sectors[(k + 1) % 3];
            if wrap(sectors[k].start + sectors[k].len, n) != next.start {
                return Err(Error::InvalidWeb(
                    "sectors must be consecutive in cyclic order".into(),
                ));
            }
        }
        let first = (0..3)
            .find(|&k| sectors[k].contains(1, n))
            .expect("sectors cover every label");
        let sectors = [sectors[first], sectors[(first + 1) % 3], sectors[(first + 2) % 3]];
        let hourglass = [hourglass[first], hourglass[(first + 1) % 3], hourglass[(first + 2) % 3]];
        Ok(Self { r, kind: WebKind::ThreeWhite { sectors, hourglass } })
    }

    /// Three-white web from the three gap positions (a short arc `{g, g+1}`
    /// sits at gap `g`); hourglass multiplicities are forced by the sector
    /// sizes.
    fn from_gaps(r: usize, gaps: [usize; 3]) -> Result<Self> {
        let n = 2 * r;
        let [g1, g2, g3] = gaps;
        let lens = [g2 - g1, g3 - g2, n - g3 + g1];
        let starts = [g1 + 1, g2 + 1, wrap(g3 + 1, n)];
        let sectors = [
            CyclicInterval { start: starts[0], len: lens[0] },
            CyclicInterval { start: starts[1], len: lens[1] },
            CyclicInterval { start: starts[2], len: lens[2] },
        ];
        let mut hourglass = [0usize; 3];
        for k in 0..3 {
            if lens[k] >= r {
                return Err(Error::InvalidWeb(format!(
                    "sector of size {} leaves no hourglass capacity at r = {r}",
                    lens[k]
                )));
            }
            hourglass[k] = r - lens[k];
        }
        Self::three_white(r, sectors, hourglass)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn kind(&self) -> &WebKind {
        &self.kind
    }

    pub fn white_count(&self) -> usize {
        match self.kind {
            WebKind::TwoWhite { .. } => 2,
            WebKind::ThreeWhite { .. } => 3,
        }
    }
}

impl fmt::Display for ForestWeb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = 2 * self.r;
        match &self.kind {
            WebKind::TwoWhite { blocks } => {
                write!(
                    f,
                    "two-white(r={}; blocks {:?} / {:?})",
                    self.r,
                    blocks[0].labels(n),
                    blocks[1].labels(n)
                )
            }
            WebKind::ThreeWhite { sectors, hourglass } => {
                write!(
                    f,
                    "three-white(r={}; sectors {:?} / {:?} / {:?}; hourglass {:?})",
                    self.r,
                    sectors[0].labels(n),
                    sectors[1].labels(n),
                    sectors[2].labels(n),
                    hourglass
                )
            }
        }
    }
}

/// Number of white vertices of the web a matching would realize: the number
/// of cyclic short arcs.
pub fn white_vertex_count(m: &NoncrossingMatching) -> usize {
    cyclic_short_arcs(m).len()
}

/// A matching realizes a forest web iff it has at most 3 white vertices.
pub fn is_forest(m: &NoncrossingMatching) -> bool {
    white_vertex_count(m) <= 3
}

/// Gap positions of a matching's cyclic short arcs, ascending: arc
/// `{g, g+1}` sits at gap `g` and `{2r, 1}` at gap `2r`.
fn gap_positions(m: &NoncrossingMatching) -> Vec<usize> {
    let n = m.points();
    let mut gaps: Vec<usize> = cyclic_short_arcs(m)
        .arcs()
        .iter()
        .map(|&(a, b)| if (a, b) == (1, n) { n } else { a })
        .collect();
    gaps.sort_unstable();
    gaps
}

/// Reconstructs the unique forest web whose strand matching is `m`.
pub fn realize_forest_web(m: &NoncrossingMatching) -> Result<ForestWeb> {
    let r = m.half_size();
    let n = m.points();
    if r == 1 {
        return ForestWeb::two_white(1, 1);
    }
    let gaps = gap_positions(m);
    match gaps.len() {
        0 | 1 => Err(Error::MalformedMatching(format!(
            "matching on {n} points has only {} cyclic short arcs",
            gaps.len()
        ))),
        2 => {
            let (g1, g2) = (gaps[0], gaps[1]);
            if g2 - g1 != r {
                return Err(Error::MalformedMatching(
                    "two short arcs are not antipodal; matching is not a cyclic rainbow".into(),
                ));
            }
            for t in 0..r {
                let a = wrap(g2 + n - t, n);
                let b = wrap(g2 + 1 + t, n);
                if m.partner_of(a) != b {
                    return Err(Error::MalformedMatching(format!(
                        "matching is not the cyclic rainbow across gaps {g1}/{g2}"
                    )));
                }
            }
            ForestWeb::two_white(r, g1 + 1)
        }
        3 => {
            // every arc must cross exactly one of the three sector gaps
            for (i, j) in m.arcs() {
                let inside = (0..3).filter(|&k| i <= gaps[k] && gaps[k] < j).count();
                if inside == 0 || inside == 3 {
                    return Err(Error::MalformedMatching(format!(
                        "arc {{{i},{j}}} stays within a sector"
                    )));
                }
            }
            let web = ForestWeb::from_gaps(r, [gaps[0], gaps[1], gaps[2]])?;
            // cross-check: the realized web must reproduce the matching
            if &web_to_matching(&web) != m {
                return Err(Error::MalformedMatching(
                    "arc families are not nested across the sector gaps".into(),
                ));
            }
            Ok(web)
        }
        count => Err(Error::NotForest(count)),
    }
}

/// The strand matching of a forest web: nested families of arcs across each
/// gap, one family per polygon edge.
pub fn web_to_matching(w: &ForestWeb) -> NoncrossingMatching {
    let r = w.r();
    let n = 2 * r;
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(r);
    let mut rainbow = |gap: usize, size: usize| {
        for t in 0..size {
            let a = wrap(gap + n - t, n);
            let b = wrap(gap + 1 + t, n);
            arcs.push((a.min(b), a.max(b)));
        }
    };
    match w.kind() {
        WebKind::TwoWhite { blocks } => {
            rainbow(blocks[0].end(n), r);
        }
        WebKind::ThreeWhite { sectors, hourglass } => {
            for k in 0..3 {
                // the family over the gap after sector k has the size of the
                // hourglass at the opposite white
                rainbow(sectors[k].end(n), hourglass[(k + 2) % 3]);
            }
        }
    }
    NoncrossingMatching::from_arcs(r, &arcs)
        .expect("forest web strands always form a noncrossing matching")
}

/// The map ω from a forest web to its two-column standard tableau.
pub fn omega(w: &ForestWeb) -> Tableau2Col {
    matching_to_tableau(&web_to_matching(w))
}

/// Every forest web for boundary size `2r`, each exactly once: the `r` cyclic
/// rainbows and the `2·C(r,3)` three-sector webs.
pub fn enumerate_forest_webs(r: usize) -> Result<Vec<ForestWeb>> {
    if r == 0 || r > WEB_ENUMERATION_MAX_R {
        return Err(Error::SizeLimitExceeded { r, max: WEB_ENUMERATION_MAX_R });
    }
    let n = 2 * r;
    let mut out = Vec::new();
    for g in 1..=r {
        out.push(ForestWeb::two_white(r, g + 1)?);
    }
    if r >= 2 {
        for g1 in 1..=n {
            for g2 in g1 + 1..=n {
                if g2 - g1 > r - 1 {
                    break;
                }
                for g3 in g2 + 1..=n {
                    if g3 - g2 > r - 1 {
                        break;
                    }
                    if n - g3 + g1 > r - 1 {
                        continue;
                    }
                    out.push(ForestWeb::from_gaps(r, [g1, g2, g3])?);
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexColor {
    Black,
    White,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexLocation {
    Boundary,
    Interior,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebVertex {
    pub name: String,
    pub color: VertexColor,
    pub location: VertexLocation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebEdge {
    pub a: String,
    pub b: String,
    pub multiplicity: usize,
}

/// Explicit vertex/edge form of a web, suitable for export and validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebGraph {
    pub r: usize,
    pub vertices: Vec<WebVertex>,
    pub edges: Vec<WebEdge>,
    /// Cyclic order of the boundary vertices.
    pub boundary_order: Vec<String>,
}

impl WebGraph {
    pub fn vertex(&self, name: &str) -> Option<&WebVertex> {
        self.vertices.iter().find(|v| v.name == name)
    }
}

/// Expands a forest web into its explicit graph: boundary vertices `b1..`,
/// whites `w1..`, and (three-white case) the interior black vertex `k1`.
pub fn to_graph(w: &ForestWeb) -> WebGraph {
    let r = w.r();
    let n = 2 * r;
    let mut vertices: Vec<WebVertex> = (1..=n)
        .map(|i| WebVertex {
            name: format!("b{i}"),
            color: VertexColor::Black,
            location: VertexLocation::Boundary,
        })
        .collect();
    let mut edges = Vec::new();
    let intervals: Vec<CyclicInterval> = match w.kind() {
        WebKind::TwoWhite { blocks } => blocks.to_vec(),
        WebKind::ThreeWhite { sectors, .. } => sectors.to_vec(),
    };
    for (k, interval) in intervals.iter().enumerate() {
        let white = format!("w{}", k + 1);
        vertices.push(WebVertex {
            name: white.clone(),
            color: VertexColor::White,
            location: VertexLocation::Interior,
        });
        for label in interval.labels(n) {
            edges.push(WebEdge {
                a: format!("b{label}"),
                b: white.clone(),
                multiplicity: 1,
            });
        }
    }
    if let WebKind::ThreeWhite { hourglass, .. } = w.kind() {
        vertices.push(WebVertex {
            name: "k1".into(),
            color: VertexColor::Black,
            location: VertexLocation::Interior,
        });
        for (k, &h) in hourglass.iter().enumerate() {
            edges.push(WebEdge {
                a: "k1".into(),
                b: format!("w{}", k + 1),
                multiplicity: h,
            });
        }
    }
    WebGraph {
        r,
        vertices,
        edges,
        boundary_order: (1..=n).map(|i| format!("b{i}")).collect(),
    }
}

/// One structural check of a [`WebGraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Pass/fail report over all structural properties of a web graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WebValidationReport {
    pub checks: Vec<WebCheck>,
}

impl WebValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs the full structural checklist: proper bicoloring, boundary degrees,
/// interior multiplicity sums, white-to-boundary adjacency, the 3-hourglass
/// condition at interior black vertices, and the white/black count gap.
pub fn validate_web_graph(g: &WebGraph) -> WebValidationReport {
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(WebCheck { name: name.to_string(), passed, detail });
    };

    let bad_edges: Vec<&WebEdge> = g
        .edges
        .iter()
        .filter(|e| match (g.vertex(&e.a), g.vertex(&e.b)) {
            (Some(a), Some(b)) => a.color == b.color,
            _ => true,
        })
        .collect();
    push(
        "properly-bicolored",
        bad_edges.is_empty(),
        if bad_edges.is_empty() {
            "every edge joins a black and a white vertex".into()
        } else {
            format!("{} monochromatic or dangling edges", bad_edges.len())
        },
    );

    let degree = |name: &str| -> usize {
        g.edges
            .iter()
            .filter(|e| e.a == name || e.b == name)
            .map(|e| e.multiplicity)
            .sum()
    };
    let edge_count = |name: &str| -> usize {
        g.edges.iter().filter(|e| e.a == name || e.b == name).count()
    };

    let boundary_ok = g
        .vertices
        .iter()
        .filter(|v| v.location == VertexLocation::Boundary)
        .all(|v| v.color == VertexColor::Black && degree(&v.name) == 1);
    push(
        "boundary-black-degree-one",
        boundary_ok,
        "every boundary vertex is black of degree one (counting multiplicity)".into(),
    );

    let interior_sum_ok = g
        .vertices
        .iter()
        .filter(|v| v.location == VertexLocation::Interior)
        .all(|v| degree(&v.name) == g.r);
    push(
        "interior-multiplicity-sum",
        interior_sum_ok,
        format!("every interior vertex has multiplicity sum {}", g.r),
    );

    let white_boundary_ok = g
        .vertices
        .iter()
        .filter(|v| v.location == VertexLocation::Interior && v.color == VertexColor::White)
        .all(|v| {
            g.edges.iter().any(|e| {
                let other = if e.a == v.name {
                    Some(&e.b)
                } else if e.b == v.name {
                    Some(&e.a)
                } else {
                    None
                };
                other
                    .and_then(|o| g.vertex(o))
                    .is_some_and(|o| o.location == VertexLocation::Boundary)
            })
        });
    push(
        "white-adjacent-to-boundary",
        white_boundary_ok,
        "every interior white vertex touches the boundary".into(),
    );

    let black_hourglass_ok = g
        .vertices
        .iter()
        .filter(|v| v.location == VertexLocation::Interior && v.color == VertexColor::Black)
        .all(|v| edge_count(&v.name) == 3);
    push(
        "black-three-hourglasses",
        black_hourglass_ok,
        "every interior black vertex has exactly 3 incident hourglasses".into(),
    );

    let whites = g
        .vertices
        .iter()
        .filter(|v| v.location == VertexLocation::Interior && v.color == VertexColor::White)
        .count();
    let blacks = g
        .vertices
        .iter()
        .filter(|v| v.location == VertexLocation::Interior && v.color == VertexColor::Black)
        .count();
    push(
        "white-black-count-gap",
        whites == blacks + 2,
        format!("{whites} interior whites vs {blacks} interior blacks"),
    );

    WebValidationReport { checks }
}
