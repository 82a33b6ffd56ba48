//! Fixed-layout SVG arc diagrams.
//!
//! Vertex `k` sits at `x = 40k` on a horizontal baseline, arcs are
//! quadratic curves above it and vacant vertices get a short ray pointing
//! up and to the right. No text metrics are involved, so output is
//! byte-stable.

use std::fmt::Write;

use pstat_core::{Edge, SetPartition, TraceGraph};

const STEP: usize = 40;
const MARGIN_TOP: usize = 20;
const MARGIN_BOTTOM: usize = 30;
const ARC_RISE: usize = 12;

/// Draws the full partition graph.
pub fn render_partition(pi: &SetPartition) -> String {
    draw(pi.n(), &pi.edges(), &[])
}

/// Draws the trace `D_i`: vertices `1..=i`, the arcs inside `[i]` and a
/// half-edge on each vacant vertex.
pub fn render_trace(trace: &TraceGraph) -> String {
    draw(trace.i, &trace.edges, &trace.vacant)
}

fn draw(vertices: usize, edges: &[Edge], vacant: &[usize]) -> String {
    let max_span = edges.iter().map(|e| e.right - e.left).max().unwrap_or(0);
    let width = STEP * (vertices + 1);
    // highest apex sits at MARGIN_TOP; half-edges rise 20
    let base = MARGIN_TOP + (ARC_RISE * max_span).max(20);
    let height = base + MARGIN_BOTTOM;

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(s, r#"<g fill="none" stroke="black" stroke-width="1.5">"#).unwrap();
    if vertices > 0 {
        writeln!(
            s,
            r#"<line class="baseline" x1="{}" y1="{base}" x2="{}" y2="{base}" stroke="gray" stroke-width="0.5"/>"#,
            STEP - 10,
            STEP * vertices + 10
        )
        .unwrap();
    }
    for e in edges {
        let x1 = STEP * e.left;
        let x2 = STEP * e.right;
        let mid = (x1 + x2) / 2;
        // control point at twice the apex height
        let cy = base as isize - 2 * (ARC_RISE * (e.right - e.left)) as isize;
        writeln!(s, r#"<path class="arc" d="M {x1} {base} Q {mid} {cy} {x2} {base}"/>"#).unwrap();
    }
    for &x in vacant {
        let x1 = STEP * x;
        writeln!(
            s,
            r#"<line class="half-edge" x1="{x1}" y1="{base}" x2="{}" y2="{}"/>"#,
            x1 + 10,
            base - 20
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    for k in 1..=vertices {
        let x = STEP * k;
        writeln!(s, r#"<circle class="vertex" cx="{x}" cy="{base}" r="3" fill="black"/>"#).unwrap();
        writeln!(
            s,
            r#"<text class="label" x="{x}" y="{}" text-anchor="middle" font-size="12">{k}</text>"#,
            base + 18
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use pstat_core::{parse_partition, trace};

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!(r#"class="{class}""#)).count()
    }

    #[test]
    fn worked_example_counts() {
        let pi = parse_partition("1,9,10/2,3,7/4/5,6,11/8").unwrap();
        let svg = render_partition(&pi);
        assert_eq!(count(&svg, "vertex"), 11);
        assert_eq!(count(&svg, "arc"), 6);
        assert_eq!(count(&svg, "half-edge"), 0);
        let t = render_trace(&trace(&pi, 6).unwrap());
        assert_eq!(count(&t, "half-edge"), 3);
        assert_eq!(count(&t, "vertex"), 6);
        assert_eq!(count(&t, "arc"), 2);
    }

    #[test]
    fn single_vertex() {
        let svg = render_partition(&parse_partition("1").unwrap());
        assert_eq!(count(&svg, "vertex"), 1);
        assert_eq!(count(&svg, "arc"), 0);
        assert!(svg.starts_with("<svg ") && svg.ends_with("</svg>\n"));
    }

    #[test]
    fn output_is_stable() {
        let pi = parse_partition("1,3/2,4").unwrap();
        assert_eq!(render_partition(&pi), render_partition(&pi));
        let expected = concat!(
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="200" height="74" viewBox="0 0 200 74">"#, "\n",
            r#"<g fill="none" stroke="black" stroke-width="1.5">"#, "\n",
            r#"<line class="baseline" x1="30" y1="44" x2="170" y2="44" stroke="gray" stroke-width="0.5"/>"#, "\n",
            r#"<path class="arc" d="M 40 44 Q 80 -4 120 44"/>"#, "\n",
            r#"<path class="arc" d="M 80 44 Q 120 -4 160 44"/>"#, "\n",
            "</g>\n",
        );
        assert!(render_partition(&pi).starts_with(expected), "{}", render_partition(&pi));
    }
}
