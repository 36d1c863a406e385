//! Two-column standard Young tableaux, Dyck paths, noncrossing matchings,
//! and the conversions among them.
//!
//! Conventions, fixed once here:
//! - tableau entries are `1..=2r`, columns strictly increasing;
//! - Dyck paths start at `(1, 0)`, end at `(r+1, r)`, and never pass below
//!   the line `y = x - 1` (equivalently, every step-word prefix has at least
//!   as many `N` as `E`);
//! - matchings are stored as a full partner table for O(1) lookup; arc lists
//!   are derived views.

use std::fmt;

use crate::error::{Error, Result};

/// Largest `r` for which exhaustive Catalan-object enumeration is allowed
/// (`Catalan(14) = 2,674,440`).
pub const ENUMERATION_MAX_R: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    North,
    East,
}

/// An `r × 2` standard Young tableau stored column-wise.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tableau2Col {
    col1: Vec<usize>,
    col2: Vec<usize>,
}

impl Tableau2Col {
    /// Validates all standardness conditions and names the violated one on
    /// failure.
    pub fn new(col1: Vec<usize>, col2: Vec<usize>) -> Result<Self> {
        let r = col1.len();
        if r == 0 {
            return Err(Error::NotStandard("tableau must have at least one row".into()));
        }
        if col2.len() != r {
            return Err(Error::NotStandard(format!(
                "column lengths differ: {} vs {}",
                r,
                col2.len()
            )));
        }
        let mut seen = vec![false; 2 * r];
        for &v in col1.iter().chain(col2.iter()) {
            if v < 1 || v > 2 * r {
                return Err(Error::NotStandard(format!(
                    "entry {v} out of range 1..={}",
                    2 * r
                )));
            }
            if seen[v - 1] {
                return Err(Error::NotStandard(format!("entry {v} repeated")));
            }
            seen[v - 1] = true;
        }
        for (label, col) in [("1", &col1), ("2", &col2)] {
            for i in 1..r {
                if col[i - 1] >= col[i] {
                    return Err(Error::NotStandard(format!(
                        "column {label} not strictly increasing at row {}",
                        i + 1
                    )));
                }
            }
        }
        // prefix condition: every prefix of 1..2r holds at least as many
        // column-1 entries as column-2 entries; checked before the row
        // condition (which implies it) so violations get the sharper message
        let mut balance = 0i64;
        for m in 1..=2 * r {
            if col1.binary_search(&m).is_ok() {
                balance += 1;
            } else {
                balance -= 1;
            }
            if balance < 0 {
                return Err(Error::NotStandard(format!(
                    "prefix condition fails at m = {m}"
                )));
            }
        }
        for i in 0..r {
            if col1[i] >= col2[i] {
                return Err(Error::NotStandard(format!(
                    "row {} not increasing: {} >= {}",
                    i + 1,
                    col1[i],
                    col2[i]
                )));
            }
        }
        Ok(Self { col1, col2 })
    }

    pub(crate) fn from_cols_unchecked(col1: Vec<usize>, col2: Vec<usize>) -> Self {
        debug_assert!(Self::new(col1.clone(), col2.clone()).is_ok());
        Self { col1, col2 }
    }

    pub fn rows(&self) -> usize {
        self.col1.len()
    }

    pub fn col1(&self) -> &[usize] {
        &self.col1
    }

    pub fn col2(&self) -> &[usize] {
        &self.col2
    }
}

impl fmt::Display for Tableau2Col {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}|{}", self.col1[i], self.col2[i])?;
        }
        write!(f, "]")
    }
}

/// A `2r`-step north/east word satisfying the shifted boundary condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if steps.is_empty() || !steps.len().is_multiple_of(2) {
            return Err(Error::NotDyck(format!(
                "step count {} is not a positive even number",
                steps.len()
            )));
        }
        let mut balance = 0i64;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::North => balance += 1,
                Step::East => balance -= 1,
            }
            if balance < 0 {
                return Err(Error::NotDyck(format!(
                    "path passes below y = x - 1 after step {}",
                    i + 1
                )));
            }
        }
        if balance != 0 {
            return Err(Error::NotDyck("unequal numbers of N and E steps".into()));
        }
        Ok(Self { steps })
    }

    /// Parses a word over `{N, E}`.
    pub fn from_word(word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'N' => Ok(Step::North),
                'E' => Ok(Step::East),
                other => Err(Error::NotDyck(format!("unexpected step symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }

    pub fn half_length(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn word(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::North => 'N',
                Step::East => 'E',
            })
            .collect()
    }

    /// Lattice points visited, starting at `(1, 0)` and ending at `(r+1, r)`.
    pub fn points(&self) -> Vec<(usize, usize)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (1usize, 0usize);
        pts.push((x, y));
        for s in &self.steps {
            match s {
                Step::North => y += 1,
                Step::East => x += 1,
            }
            pts.push((x, y));
        }
        pts
    }

    /// Height of the path over column `x`, for `x` in `1..=r`: the number of
    /// north steps taken before the `x`-th east step.
    pub fn column_heights(&self) -> Vec<usize> {
        let r = self.half_length();
        let mut heights = Vec::with_capacity(r);
        let mut norths = 0usize;
        for s in &self.steps {
            match s {
                Step::North => norths += 1,
                Step::East => heights.push(norths),
            }
        }
        debug_assert_eq!(heights.len(), r);
        heights
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

/// A perfect noncrossing matching on `{1..2r}`, stored as a partner table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NoncrossingMatching {
    partner: Vec<usize>,
}

impl NoncrossingMatching {
    /// `partner[i-1]` is the partner of point `i` (1-based).
    pub fn new(partner: Vec<usize>) -> Result<Self> {
        let n = partner.len();
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::MalformedMatching(format!(
                "point count {n} is not a positive even number"
            )));
        }
        for (i, &p) in partner.iter().enumerate() {
            let i = i + 1;
            if p < 1 || p > n {
                return Err(Error::MalformedMatching(format!(
                    "partner of {i} is {p}, out of range 1..={n}"
                )));
            }
            if p == i {
                return Err(Error::MalformedMatching(format!("point {i} matched to itself")));
            }
            if partner[p - 1] != i {
                return Err(Error::MalformedMatching(format!(
                    "partner table is not an involution at {i}"
                )));
            }
        }
        // noncrossing check via parenthesis stack
        let mut stack: Vec<usize> = Vec::new();
        for i in 1..=n {
            let p = partner[i - 1];
            if p > i {
                stack.push(i);
            } else {
                match stack.pop() {
                    Some(top) if top == p => {}
                    _ => {
                        return Err(Error::MalformedMatching(format!(
                            "arcs {{{p},{i}}} cross another arc"
                        )))
                    }
                }
            }
        }
        Ok(Self { partner })
    }

    /// Builds the partner table from an arc list.
    pub fn from_arcs(r: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let n = 2 * r;
        let mut partner = vec![0usize; n];
        for &(a, b) in arcs {
            if a < 1 || a > n || b < 1 || b > n {
                return Err(Error::MalformedMatching(format!(
                    "arc {{{a},{b}}} out of range 1..={n}"
                )));
            }
            if partner[a - 1] != 0 || partner[b - 1] != 0 {
                return Err(Error::MalformedMatching(format!(
                    "arc {{{a},{b}}} reuses a matched point"
                )));
            }
            partner[a - 1] = b;
            partner[b - 1] = a;
        }
        if partner.contains(&0) {
            return Err(Error::MalformedMatching("matching is not perfect".into()));
        }
        Self::new(partner)
    }

    pub(crate) fn from_partner_unchecked(partner: Vec<usize>) -> Self {
        debug_assert!(Self::new(partner.clone()).is_ok());
        Self { partner }
    }

    pub fn half_size(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn partner_of(&self, i: usize) -> usize {
        self.partner[i - 1]
    }

    pub fn partner_table(&self) -> &[usize] {
        &self.partner
    }

    /// Arcs as `(min, max)` pairs, sorted by minimum.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs: Vec<(usize, usize)> = (1..=self.points())
            .filter(|&i| self.partner_of(i) > i)
            .map(|i| (i, self.partner_of(i)))
            .collect();
        arcs.sort_unstable();
        arcs
    }
}

impl fmt::Display for NoncrossingMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, (a, b)) in self.arcs().into_iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "}}")
    }
}

/// A set of arcs drawn from a matching, normalized as `(min, max)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcSet {
    arcs: Vec<(usize, usize)>,
}

impl ArcSet {
    fn new(mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        Self { arcs }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        let pair = (a.min(b), a.max(b));
        self.arcs.binary_search(&pair).is_ok()
    }
}

/// The `i`-th step is north iff `i` lies in the first column.
pub fn tableau_to_path(t: &Tableau2Col) -> DyckPath {
    let n = 2 * t.rows();
    let mut steps = Vec::with_capacity(n);
    let mut c1 = t.col1().iter().peekable();
    for i in 1..=n {
        if c1.peek() == Some(&&i) {
            steps.push(Step::North);
            c1.next();
        } else {
            steps.push(Step::East);
        }
    }
    DyckPath::new(steps).expect("standard tableau always yields a Dyck path")
}

/// Inverse of [`tableau_to_path`]: north positions become column 1.
pub fn path_to_tableau(p: &DyckPath) -> Tableau2Col {
    let mut col1 = Vec::with_capacity(p.half_length());
    let mut col2 = Vec::with_capacity(p.half_length());
    for (i, s) in p.steps().iter().enumerate() {
        match s {
            Step::North => col1.push(i + 1),
            Step::East => col2.push(i + 1),
        }
    }
    Tableau2Col::from_cols_unchecked(col1, col2)
}

/// The map μ: reading `1..2r`, each column-2 value closes the most recent
/// unclosed column-1 value.
pub fn tableau_to_matching(t: &Tableau2Col) -> NoncrossingMatching {
    let n = 2 * t.rows();
    let mut partner = vec![0usize; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut c1 = t.col1().iter().peekable();
    for i in 1..=n {
        if c1.peek() == Some(&&i) {
            stack.push(i);
            c1.next();
        } else {
            let open = stack.pop().expect("prefix condition guarantees an open value");
            partner[open - 1] = i;
            partner[i - 1] = open;
        }
    }
    NoncrossingMatching::from_partner_unchecked(partner)
}

/// Arc minima become column 1, arc maxima column 2.
pub fn matching_to_tableau(m: &NoncrossingMatching) -> Tableau2Col {
    let mut col1 = Vec::with_capacity(m.half_size());
    let mut col2 = Vec::with_capacity(m.half_size());
    for i in 1..=m.points() {
        if m.partner_of(i) > i {
            col1.push(i);
        } else {
            col2.push(i);
        }
    }
    Tableau2Col::from_cols_unchecked(col1, col2)
}

/// Arcs of the form `{i, i+1}`, indices read cyclically so that `{2r, 1}`
/// counts. For `r = 1` the sole arc `{1, 2}` is reported once.
pub fn cyclic_short_arcs(m: &NoncrossingMatching) -> ArcSet {
    let n = m.points();
    let mut arcs = Vec::new();
    for i in 1..n {
        if m.partner_of(i) == i + 1 {
            arcs.push((i, i + 1));
        }
    }
    if m.partner_of(n) == 1 {
        arcs.push((1, n));
    }
    ArcSet::new(arcs)
}

/// True iff every lattice point visited by steps `2` through `2r - 1`
/// (endpoints included) satisfies `y >= x`.
pub fn interior_weakly_above_diagonal(p: &DyckPath) -> bool {
    let pts = p.points();
    let n = p.steps().len();
    // interior points: after step 1 through after step n-1
    pts[1..n].iter().all(|&(x, y)| y >= x)
}

fn check_enumeration_bound(r: usize) -> Result<()> {
    if r == 0 || r > ENUMERATION_MAX_R {
        return Err(Error::SizeLimitExceeded {
            r,
            max: ENUMERATION_MAX_R,
        });
    }
    Ok(())
}

/// Streams every `r × 2` standard tableau exactly once, lexicographically by
/// first column.
pub fn for_each_tableau<F: FnMut(&Tableau2Col)>(r: usize, mut f: F) -> Result<()> {
    check_enumeration_bound(r)?;
    let mut col1 = Vec::with_capacity(r);
    let mut col2 = Vec::with_capacity(r);
    rec_tableaux(r, 1, &mut col1, &mut col2, &mut f);
    Ok(())
}

fn rec_tableaux<F: FnMut(&Tableau2Col)>(
    r: usize,
    next: usize,
    col1: &mut Vec<usize>,
    col2: &mut Vec<usize>,
    f: &mut F,
) {
    if next > 2 * r {
        f(&Tableau2Col::from_cols_unchecked(col1.clone(), col2.clone()));
        return;
    }
    // putting `next` in column 1 first keeps the stream in col1-lex order
    if col1.len() < r {
        col1.push(next);
        rec_tableaux(r, next + 1, col1, col2, f);
        col1.pop();
    }
    if col2.len() < r && col1.len() > col2.len() {
        col2.push(next);
        rec_tableaux(r, next + 1, col1, col2, f);
        col2.pop();
    }
}

/// Materialized form of [`for_each_tableau`]; count equals `Catalan(r)`.
pub fn enumerate_tableaux(r: usize) -> Result<Vec<Tableau2Col>> {
    let mut out = Vec::new();
    for_each_tableau(r, |t| out.push(t.clone()))?;
    Ok(out)
}

/// `Catalan(r)` as an exact integer (valid well beyond the enumeration cap).
pub fn catalan(r: usize) -> u64 {
    let mut c: u128 = 1;
    for i in 0..r as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c as u64
}
