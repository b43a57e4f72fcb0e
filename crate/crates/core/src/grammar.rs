//! The textual grammar for hosts and diagrams.
//!
//! Host names: `<Family><rank>[~<twist>]`, with `x` joining product factors
//! (`A3`, `F4~1`, `A2~2xA2~2`). Diagram specs:
//!
//! ```text
//! HOST ; S1'={i,j}:c=<1/2|1|2|i> ; S2'={k}:c=... [; Sc={...}]
//! ```
//!
//! `S2'` may be omitted for a bare local diagram; empty sets are written
//! `{}` and always carry `c=i`.

use std::sync::Arc;

use crate::classify::{Side, SphericalDiagram};
use crate::error::Error;
use crate::localmodels::Factor;
use crate::rootsys::{DynkinDiagram, Series};

fn parse_irreducible(s: &str) -> Result<DynkinDiagram, Error> {
    let s = s.trim();
    let (base, twist) = match s.split_once('~') {
        Some((b, t)) => {
            let t: u8 = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad twist in host {s:?}")))?;
            (b.trim(), Some(t))
        }
        None => (s, None),
    };
    let mut chars = base.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::Parse("empty host name".into()))?
        .to_ascii_uppercase();
    let series = match letter {
        'A' => Series::A,
        'B' => Series::B,
        'C' => Series::C,
        'D' => Series::D,
        'E' => Series::E,
        'F' => Series::F,
        'G' => Series::G,
        other => return Err(Error::Parse(format!("unknown family letter {other:?}"))),
    };
    let rank: u32 = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank in host {s:?}")))?;
    DynkinDiagram::host(series, rank, twist)
}

/// Parse a host name, products joined by `x`.
pub fn parse_host(s: &str) -> Result<DynkinDiagram, Error> {
    let mut out: Option<DynkinDiagram> = None;
    for part in s.trim().split('x') {
        let piece = parse_irreducible(part)?;
        out = Some(match out {
            None => piece,
            Some(acc) => acc.product(&piece),
        });
    }
    out.ok_or_else(|| Error::Parse("empty host name".into()))
}

fn parse_node_set(s: &str) -> Result<Vec<usize>, Error> {
    let s = s.trim();
    let inner = s
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| Error::Parse(format!("expected {{...}} node set, got {s:?}")))?;
    let mut nodes = Vec::new();
    for tok in inner.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        nodes.push(tok.parse::<usize>().map_err(|_| Error::Parse(format!("bad node index {tok:?}")))?);
    }
    Ok(nodes)
}

fn parse_side(s: &str, tag: &str) -> Result<Side, Error> {
    let body = s
        .trim()
        .strip_prefix(tag)
        .and_then(|t| t.trim_start().strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("expected `{tag}={{...}}:c=...`, got {s:?}")))?;
    let (set_part, factor_part) = body
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("missing `:c=` in {s:?}")))?;
    let factor_str = factor_part
        .trim()
        .strip_prefix('c')
        .and_then(|t| t.trim_start().strip_prefix('='))
        .ok_or_else(|| Error::Parse(format!("missing `c=` in {s:?}")))?;
    let nodes = parse_node_set(set_part)?;
    let factor = Factor::parse(factor_str)?;
    if nodes.is_empty() && factor != Factor::Inhom {
        return Err(Error::Parse("an empty side must carry c=i".into()));
    }
    Ok(Side::new(nodes, factor))
}

/// Parse a full diagram spec. The result is a sextuple; a quintuple is the
/// special case with no circled nodes.
pub fn parse_diagram(s: &str) -> Result<SphericalDiagram, Error> {
    let mut parts = s.split(';').map(str::trim);
    let host = parse_host(parts.next().ok_or_else(|| Error::Parse("empty spec".into()))?)?;
    let mut side1: Option<Side> = None;
    let mut side2: Option<Side> = None;
    let mut circled: Vec<usize> = Vec::new();
    for part in parts {
        if part.is_empty() {
            continue;
        }
        if part.starts_with("S1'") {
            side1 = Some(parse_side(part, "S1'")?);
        } else if part.starts_with("S2'") {
            side2 = Some(parse_side(part, "S2'")?);
        } else if let Some(rest) = part.strip_prefix("Sc") {
            let rest = rest
                .trim_start()
                .strip_prefix('=')
                .ok_or_else(|| Error::Parse(format!("expected `Sc={{...}}`, got {part:?}")))?;
            circled = parse_node_set(rest)?;
        } else {
            return Err(Error::Parse(format!("unrecognized clause {part:?}")));
        }
    }
    let side1 = side1.ok_or_else(|| Error::Parse("missing S1' clause".into()))?;
    let side2 = side2.unwrap_or_else(Side::empty);
    Ok(SphericalDiagram::new(Arc::new(host), circled, side1, side2))
}

fn fmt_set(nodes: &[usize]) -> String {
    format!("{{{}}}", nodes.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// Canonical spec string of a diagram; `parse_diagram` inverts it.
pub fn format_diagram(d: &SphericalDiagram) -> String {
    let mut s = format!(
        "{} ; S1'={}:c={} ; S2'={}:c={}",
        d.host.name(),
        fmt_set(&d.side1.nodes),
        d.side1.factor,
        fmt_set(&d.side2.nodes),
        d.side2.factor
    );
    if !d.circled.is_empty() {
        s.push_str(&format!(" ; Sc={}", fmt_set(&d.circled)));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_hosts() {
        assert_eq!(parse_host("F4~1").unwrap().name(), "F4~1");
        assert_eq!(parse_host("A1~1xA1~1").unwrap().name(), "A1~1xA1~1");
        assert_eq!(parse_host("D7").unwrap().name(), "D7");
        assert!(parse_host("H3").is_err());
        assert!(parse_host("B2~1").is_err());
    }

    #[test]
    fn spec_round_trip() {
        let s = "F4~1 ; S1'={1}:c=1/2 ; S2'={3}:c=1";
        let d = parse_diagram(s).unwrap();
        assert_eq!(format_diagram(&d), s);
        let s = "D7 ; S1'={5,6}:c=1 ; S2'={3}:c=i ; Sc={2}";
        let d = parse_diagram(s).unwrap();
        assert_eq!(format_diagram(&d), s);
        let d = parse_diagram("B3 ; S1'={0}:c=2").unwrap();
        assert!(d.side2.nodes.is_empty());
    }

    #[test]
    fn bad_specs_are_parse_errors() {
        assert!(parse_diagram("F4~1").is_err());
        assert!(parse_diagram("F4~1 ; S1'={1}:c=3").is_err());
        assert!(parse_diagram("F4~1 ; S1'={}:c=1").is_err());
        assert!(parse_diagram("F4~1 ; S1'={1}:c=1 ; Qc={2}").is_err());
    }
}
