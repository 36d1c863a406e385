//! The marker-placement map π from two-column tableaux to 132-avoiding
//! permutations, its inverse, and the composite Φ from forest webs to
//! `{132,4321,3214}`-avoiding permutations.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::catalan::{
    tableau_to_matching, tableau_to_path, DyckPath, Step, Tableau2Col,
};
use crate::error::{Error, Result};
use crate::perm::{contains_pattern, Permutation};
use crate::webs::{omega, realize_forest_web, ForestWeb};

/// The `r` marked lattice points of `[1,r]²` produced by the marker
/// algorithm; one per row and per column, each weakly below the path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerSet {
    points: Vec<(usize, usize)>,
    r: usize,
}

impl MarkerSet {
    fn new(mut points: Vec<(usize, usize)>, r: usize) -> Self {
        points.sort_unstable();
        let set = Self { points, r };
        debug_assert!(set.is_permutation_grid());
        set
    }

    pub fn points(&self) -> &[(usize, usize)] {
        &self.points
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn is_permutation_grid(&self) -> bool {
        let mut rows = vec![false; self.r];
        let mut cols = vec![false; self.r];
        for &(x, y) in &self.points {
            if x < 1 || x > self.r || y < 1 || y > self.r || rows[y - 1] || cols[x - 1] {
                return false;
            }
            rows[y - 1] = true;
            cols[x - 1] = true;
        }
        self.points.len() == self.r
    }

    /// Reads the permutation top-down: a marker at `(x, y)` means
    /// `w(r + 1 - y) = x`.
    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0usize; self.r];
        for &(x, y) in &self.points {
            word[self.r - y] = x;
        }
        Permutation::from_word_unchecked(word)
    }
}

/// Lattice points at the northwest corners of a path: wherever a north step
/// is immediately followed by an east step.
pub fn northwest_corners(path: &DyckPath) -> Vec<(usize, usize)> {
    let pts = path.points();
    path.steps()
        .windows(2)
        .enumerate()
        .filter(|(_, pair)| pair[0] == Step::North && pair[1] == Step::East)
        .map(|(i, _)| pts[i + 1])
        .collect()
}

struct MarkerBoard {
    r: usize,
    heights: Vec<usize>,
    covered: Vec<bool>, // (x, y) at [(x-1) * r + (y-1)]
    markers: Vec<(usize, usize)>,
}

impl MarkerBoard {
    fn seed(path: &DyckPath) -> Self {
        let r = path.half_length();
        let mut board = Self {
            r,
            heights: path.column_heights(),
            covered: vec![false; r * r],
            markers: Vec::with_capacity(r),
        };
        for corner in northwest_corners(path) {
            board.place(corner);
        }
        board
    }

    fn is_covered(&self, x: usize, y: usize) -> bool {
        self.covered[(x - 1) * self.r + (y - 1)]
    }

    /// Marks the point and covers its eastward and southward rays.
    fn place(&mut self, (x, y): (usize, usize)) {
        self.markers.push((x, y));
        for xx in x..=self.r {
            self.covered[(xx - 1) * self.r + (y - 1)] = true;
        }
        for yy in 1..=y {
            self.covered[(x - 1) * self.r + (yy - 1)] = true;
        }
    }

    fn candidates(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 1..=self.r {
            for y in 1..=self.heights[x - 1].min(self.r) {
                if !self.is_covered(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Candidates with no other candidate weakly to their northwest.
    fn northwest_maximal(&self) -> Vec<(usize, usize)> {
        let all = self.candidates();
        all.iter()
            .copied()
            .filter(|&(x, y)| {
                !all.iter()
                    .any(|&(x2, y2)| (x2, y2) != (x, y) && x2 <= x && y2 >= y)
            })
            .collect()
    }
}

/// Deterministic marker placement: after seeding the northwest corners, scan
/// by decreasing `y` then increasing `x` for the next uncovered point weakly
/// below the path. That scan order always lands on a northwest-maximal point.
pub fn deterministic_markers(path: &DyckPath) -> MarkerSet {
    let mut board = MarkerBoard::seed(path);
    while board.markers.len() < board.r {
        let next = (1..=board.r)
            .rev()
            .flat_map(|y| (1..=board.r).map(move |x| (x, y)))
            .find(|&(x, y)| y <= board.heights[x - 1] && !board.is_covered(x, y))
            .expect("marker placement always terminates with r markers");
        board.place(next);
    }
    MarkerSet::new(board.markers, board.r)
}

/// Marker placement with a uniformly random choice among the
/// northwest-maximal candidates at each step; exists to check that the
/// choice does not matter.
pub fn randomized_markers<R: Rng>(path: &DyckPath, rng: &mut R) -> MarkerSet {
    let mut board = MarkerBoard::seed(path);
    while board.markers.len() < board.r {
        let candidates = board.northwest_maximal();
        let next = *candidates
            .choose(rng)
            .expect("marker placement always terminates with r markers");
        board.place(next);
    }
    MarkerSet::new(board.markers, board.r)
}

/// The map π: tableau to 132-avoiding permutation via marker placement on
/// its Dyck path.
pub fn pi(t: &Tableau2Col) -> Permutation {
    deterministic_markers(&tableau_to_path(t)).to_permutation()
}

/// Inverse of π: recover the path heights as the running maximum of marker
/// heights, then rebuild the tableau.
pub fn pi_inverse(w: &Permutation) -> Result<Tableau2Col> {
    let pattern_132 = Permutation::from_slice(&[1, 3, 2]).expect("valid pattern");
    if contains_pattern(w, &pattern_132) {
        return Err(Error::Not132Avoiding);
    }
    let r = w.size();
    let mut heights = vec![0usize; r];
    for (i, &x) in w.word().iter().enumerate() {
        // w(i+1) = x puts a marker at (x, r - i)
        heights[x - 1] = heights[x - 1].max(r - i);
    }
    for x in 1..r {
        heights[x] = heights[x].max(heights[x - 1]);
    }
    let mut steps = Vec::with_capacity(2 * r);
    let mut prev = 0usize;
    for &h in &heights {
        for _ in prev..h {
            steps.push(Step::North);
        }
        steps.push(Step::East);
        prev = h;
    }
    let path = DyckPath::new(steps).expect("marker heights always yield a Dyck path");
    Ok(crate::catalan::path_to_tableau(&path))
}

/// The composite Φ = π ∘ ω from forest webs to permutations.
pub fn phi(w: &ForestWeb) -> Permutation {
    pi(&omega(w))
}

/// Inverse of Φ. Fails with [`Error::NotInClass`] when `w` contains 132 (no
/// tableau preimage) or 4321/3214 (the matching has four or more short arcs,
/// so the realized web would contain a cycle).
pub fn phi_inverse(w: &Permutation) -> Result<ForestWeb> {
    let tableau = pi_inverse(w).map_err(|_| Error::NotInClass)?;
    realize_forest_web(&tableau_to_matching(&tableau)).map_err(|_| Error::NotInClass)
}
