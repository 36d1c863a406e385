//! Graphviz and TikZ export. Output is deterministic: vertices and edges
//! are emitted in construction order, so renders diff cleanly.

use std::fmt::Write;

use crate::bijection::deterministic_markers;
use crate::catalan::{DyckPath, NoncrossingMatching, Step};
use crate::webs::{to_graph, ForestWeb, VertexColor, VertexLocation, WebGraph};

/// Undirected DOT. Boundary vertices keep their cyclic order via explicit
/// positions on a circle; hourglass multiplicities above 1 become edge labels.
pub fn export_dot(g: &WebGraph) -> String {
    let mut out = String::new();
    out.push_str("graph web {\n");
    out.push_str("  layout=neato;\n  node [shape=circle, fixedsize=true, width=0.35];\n");
    let n = g.boundary_order.len() as f64;
    for v in &g.vertices {
        let fill = match v.color {
            VertexColor::Black => "style=filled, fillcolor=black, fontcolor=white",
            VertexColor::White => "style=filled, fillcolor=white",
        };
        match v.location {
            VertexLocation::Boundary => {
                let idx = g
                    .boundary_order
                    .iter()
                    .position(|name| *name == v.name)
                    .expect("boundary vertex listed in boundary order") as f64;
                // counterclockwise from the top
                let angle = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * idx / n;
                let _ = writeln!(
                    out,
                    "  {} [{fill}, pos=\"{:.3},{:.3}!\"];",
                    v.name,
                    3.0 * angle.cos(),
                    3.0 * angle.sin()
                );
            }
            VertexLocation::Interior => {
                let _ = writeln!(out, "  {} [{fill}];", v.name);
            }
        }
    }
    for e in &g.edges {
        if e.multiplicity > 1 {
            let _ = writeln!(out, "  {} -- {} [label=\"{}\"];", e.a, e.b, e.multiplicity);
        } else {
            let _ = writeln!(out, "  {} -- {};", e.a, e.b);
        }
    }
    out.push_str("}\n");
    out
}

pub fn export_web_dot(w: &ForestWeb) -> String {
    export_dot(&to_graph(w))
}

/// Standalone tikzpicture of a web: boundary circle, boundary-to-white
/// edges, and (three-white case) the interior hourglasses drawn as parallel
/// edges.
pub fn export_web_tikz(w: &ForestWeb) -> String {
    export_graph_tikz(&to_graph(w))
}

pub fn export_graph_tikz(g: &WebGraph) -> String {
    let n = g.boundary_order.len() as f64;
    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}[every node/.style={circle, draw, inner sep=2pt}]\n");
    let pos = |name: &str| -> (f64, f64) {
        match g.boundary_order.iter().position(|b| b == name) {
            Some(idx) => {
                let angle = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * idx as f64 / n;
                (3.0 * angle.cos(), 3.0 * angle.sin())
            }
            None => {
                // interior vertices: whites at a smaller radius under the
                // centroid of their boundary neighbours would need the edge
                // list; place whites evenly and the black core at the origin
                let whites: Vec<&str> = g
                    .vertices
                    .iter()
                    .filter(|v| v.color == VertexColor::White)
                    .map(|v| v.name.as_str())
                    .collect();
                match whites.iter().position(|w| *w == name) {
                    Some(k) => {
                        let angle = std::f64::consts::FRAC_PI_2
                            + std::f64::consts::TAU * k as f64 / whites.len() as f64;
                        (1.4 * angle.cos(), 1.4 * angle.sin())
                    }
                    None => (0.0, 0.0),
                }
            }
        }
    };
    for v in &g.vertices {
        let (x, y) = pos(&v.name);
        let style = match v.color {
            VertexColor::Black => "fill=black, text=white",
            VertexColor::White => "fill=white",
        };
        let _ = writeln!(
            out,
            "  \\node[{style}] ({}) at ({x:.3},{y:.3}) {{{}}};",
            v.name, v.name
        );
    }
    for e in &g.edges {
        if e.multiplicity == 1 {
            let _ = writeln!(out, "  \\draw ({}) -- ({});", e.a, e.b);
        } else {
            // fan the strands of a multi-edge apart
            for k in 0..e.multiplicity {
                let bend = 12.0 * (2.0 * k as f64 - (e.multiplicity as f64 - 1.0));
                let _ = writeln!(
                    out,
                    "  \\draw ({}) to[bend left={bend:.0}] ({});",
                    e.a, e.b
                );
            }
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// Chord diagram of a matching: points on a circle, arcs as straight chords.
pub fn export_matching_tikz(m: &NoncrossingMatching) -> String {
    let n = m.points() as f64;
    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}\n  \\draw[dashed, gray] (0,0) circle (3);\n");
    let pos = |i: usize| {
        let angle = std::f64::consts::FRAC_PI_2 + std::f64::consts::TAU * (i as f64 - 1.0) / n;
        (3.0 * angle.cos(), 3.0 * angle.sin())
    };
    for i in 1..=m.points() {
        let (x, y) = pos(i);
        // labels point radially outward
        let deg = (90.0 + 360.0 * (i as f64 - 1.0) / n).rem_euclid(360.0);
        let _ = writeln!(
            out,
            "  \\node[circle, fill, inner sep=1pt, label={{[label distance=2pt]{deg:.0}:{i}}}] (p{i}) at ({x:.3},{y:.3}) {{}};",
        );
    }
    for (a, b) in m.arcs() {
        let _ = writeln!(out, "  \\draw[thick] (p{a}) -- (p{b});");
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

/// The path on its `r x r` grid with the diagonal `y = x` dotted and the
/// deterministic markers circled.
pub fn export_path_tikz(p: &DyckPath) -> String {
    let r = p.half_length();
    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}[scale=0.7]\n");
    let _ = writeln!(out, "  \\draw[step=1, very thin, gray!40] (0,0) grid ({},{});", r + 1, r);
    let _ = writeln!(out, "  \\draw[dotted] (0,0) -- ({},{});", r, r);
    let mut x = 1usize;
    let mut y = 0usize;
    let mut path = format!("({x},{y})");
    for s in p.steps() {
        match s {
            Step::North => y += 1,
            Step::East => x += 1,
        }
        let _ = write!(path, " -- ({x},{y})");
    }
    let _ = writeln!(out, "  \\draw[very thick] {path};");
    for (mx, my) in deterministic_markers(p).points() {
        let _ = writeln!(out, "  \\draw ({mx},{my}) circle (0.25);");
        let _ = writeln!(out, "  \\fill ({mx},{my}) circle (0.08);");
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::webs::enumerate_forest_webs;

    #[test]
    fn dot_is_deterministic_and_well_formed() {
        let w = ForestWeb::two_white(4, 6).unwrap();
        let dot = export_web_dot(&w);
        assert_eq!(dot, export_web_dot(&w));
        assert!(dot.starts_with("graph web {"));
        assert!(dot.trim_end().ends_with('}'));
        assert!(dot.contains("b1"));
        assert!(dot.contains("w2"));
        assert!(!dot.contains("--  "));
    }

    #[test]
    fn dot_labels_hourglass_multiplicities() {
        let webs = enumerate_forest_webs(4).unwrap();
        let three = webs.iter().find(|w| w.white_count() == 3).unwrap();
        let dot = export_web_dot(three);
        assert!(dot.contains("k1"));
        assert!(dot.contains("label=\"2\""), "{dot}");
    }

    #[test]
    fn tikz_outputs_are_balanced() {
        let w = enumerate_forest_webs(4)
            .unwrap()
            .into_iter()
            .find(|w| w.white_count() == 3)
            .unwrap();
        for text in [
            export_web_tikz(&w),
            export_matching_tikz(&crate::webs::web_to_matching(&w)),
            export_path_tikz(&DyckPath::from_word("NNENEENNEE").unwrap()),
        ] {
            assert!(text.starts_with("\\begin{tikzpicture}"));
            assert!(text.trim_end().ends_with("\\end{tikzpicture}"));
        }
    }

    #[test]
    fn path_render_includes_markers_and_diagonal() {
        let p = DyckPath::from_word("NENE").unwrap();
        let tikz = export_path_tikz(&p);
        assert!(tikz.contains("dotted"));
        assert!(tikz.contains("circle (0.25)"));
        assert!(tikz.contains("(1,0) -- (1,1) -- (2,1) -- (2,2) -- (3,2)"));
    }
}
