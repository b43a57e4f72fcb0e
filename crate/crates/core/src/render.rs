//! Deterministic text and DOT rendering of decorated diagrams. The first
//! line of the text form is the diagram's spec string, so rendering is
//! loss-free and `parse ∘ render` is the identity.

use crate::classify::SphericalDiagram;
use crate::grammar::format_diagram;
use crate::localmodels::Factor;

/// Glyph for the bond between drawn nodes `i`, `j` (in that drawing order).
/// The arrow points at the shorter root.
fn bond_glyph(aij: i64, aji: i64) -> String {
    match (aij, aji) {
        (-1, -1) => "---".to_string(),
        (-2, -2) => "<=>".to_string(),
        (-1, -2) => "=>>".to_string(), // second node short
        (-2, -1) => "<<=".to_string(), // first node short
        (-1, -3) => "-3>".to_string(),
        (-3, -1) => "<3-".to_string(),
        (-1, -4) => "-4>".to_string(),
        (-4, -1) => "<4-".to_string(),
        other => format!("({},{})", other.0, other.1),
    }
}

fn node_token(d: &SphericalDiagram, i: usize) -> String {
    if d.side1.nodes.contains(&i) {
        format!("{}*{}[1]", factor_prefix(d.side1.factor), i)
    } else if d.side2.nodes.contains(&i) {
        format!("{}*{}[2]", factor_prefix(d.side2.factor), i)
    } else if d.circled.contains(&i) {
        format!("({i})")
    } else {
        format!("{i}")
    }
}

fn factor_prefix(f: Factor) -> String {
    match f {
        Factor::One => String::new(),
        other => format!("{other}"),
    }
}

/// ASCII rendering: spec line, then one line per component. Path-shaped
/// components are drawn inline; forks and cycles list the extra edges after
/// the longest path.
pub fn render_text(d: &SphericalDiagram) -> String {
    let host = &d.host;
    let mut out = format_diagram(d);
    out.push('\n');
    for comp in host.components() {
        let nodes = &comp.nodes;
        // longest path greedily from the first endpoint (or first node)
        let degree = |i: usize| nodes.iter().filter(|&&j| host.adjacent(i, j)).count();
        let start = nodes.iter().copied().find(|&i| degree(i) <= 1).unwrap_or(nodes[0]);
        let mut order = vec![start];
        let mut drawn_edges: Vec<(usize, usize)> = Vec::new();
        loop {
            let last = *order.last().unwrap();
            let next = nodes
                .iter()
                .copied()
                .find(|&j| host.adjacent(last, j) && !order.contains(&j));
            match next {
                Some(j) => {
                    drawn_edges.push((last, j));
                    order.push(j);
                }
                None => break,
            }
        }
        let mut line = format!("  [{}] ", comp.kind.name());
        for (k, &i) in order.iter().enumerate() {
            if k > 0 {
                let (a, b) = (order[k - 1], i);
                line.push_str(&format!(" {} ", bond_glyph(host.entry(a, b), host.entry(b, a))));
            }
            line.push_str(&node_token(d, i));
        }
        // every edge the greedy path missed (branches, the cycle-closing edge)
        let mut extras = Vec::new();
        for (pos, &i) in nodes.iter().enumerate() {
            for &j in &nodes[pos + 1..] {
                if !host.adjacent(i, j) {
                    continue;
                }
                let on_path = drawn_edges.contains(&(i, j)) || drawn_edges.contains(&(j, i));
                if !on_path {
                    extras.push(format!(
                        "{} {} {}",
                        node_token(d, i),
                        bond_glyph(host.entry(i, j), host.entry(j, i)),
                        node_token(d, j)
                    ));
                }
            }
        }
        if !extras.is_empty() {
            line.push_str(&format!("  (also {})", extras.join(", ")));
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// DOT output with `side`, `factor` and `circled` node attributes.
pub fn render_dot(d: &SphericalDiagram) -> String {
    let host = &d.host;
    let mut out = String::from("graph diagram {\n");
    out.push_str(&format!("  label=\"{}\";\n", format_diagram(d)));
    for i in 0..host.n() {
        let (side, factor) = if d.side1.nodes.contains(&i) {
            ("1", format!("{}", d.side1.factor))
        } else if d.side2.nodes.contains(&i) {
            ("2", format!("{}", d.side2.factor))
        } else {
            ("0", String::new())
        };
        let circled = d.circled.contains(&i);
        let shape = if side != "0" {
            "box"
        } else if circled {
            "doublecircle"
        } else {
            "circle"
        };
        out.push_str(&format!(
            "  n{i} [label=\"{i}\", shape={shape}, side={side}, factor=\"{factor}\", circled={circled}];\n"
        ));
    }
    for i in 0..host.n() {
        for j in i + 1..host.n() {
            if host.adjacent(i, j) {
                out.push_str(&format!(
                    "  n{i} -- n{j} [label=\"{},{}\"];\n",
                    host.entry(i, j),
                    host.entry(j, i)
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grammar::parse_diagram;

    #[test]
    fn render_parse_round_trip() {
        for s in [
            "A1~1 ; S1'={0}:c=i ; S2'={1}:c=i",
            "D7 ; S1'={5,6}:c=1 ; S2'={3}:c=i ; Sc={2}",
            "A2~1 ; S1'={0,1}:c=1 ; S2'={2}:c=1",
        ] {
            let d = parse_diagram(s).unwrap();
            let text = render_text(&d);
            let first = text.lines().next().unwrap();
            let back = parse_diagram(first).unwrap();
            assert_eq!(back, d);
        }
    }

    #[test]
    fn dot_contains_attributes() {
        let d = parse_diagram("D7 ; S1'={5,6}:c=1 ; S2'={3}:c=i ; Sc={2}").unwrap();
        let dot = render_dot(&d);
        assert!(dot.contains("circled=true"));
        assert!(dot.contains("side=1"));
        assert!(dot.starts_with("graph"));
    }
}
