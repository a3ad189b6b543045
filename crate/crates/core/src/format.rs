//! Line-oriented text formats: `.xg` graphs, walks, certificates, and
//! embeddings. `#` starts a comment anywhere on a line.

use std::fmt::Write as _;

use crate::embed::{FaceSet, RotationSystem};
use crate::error::{Error, Result};
use crate::graph::{Dart, Edge, End, RawXGraph, XGraph};
use crate::walk::{ClosedWalk, OrientedEdge};

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(l, _)| l).trim()
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::syntax(line, format!("{what} `{tok}` is not a non-negative integer")))
}

pub fn parse_dart(tok: &str, line: usize) -> Result<Dart> {
    let (e, end) = tok
        .split_once('.')
        .ok_or_else(|| Error::syntax(line, format!("dart `{tok}` must look like `<edge>.s` or `<edge>.t`")))?;
    let edge = number(Some(e), line, "dart edge")?;
    let end = match end {
        "s" => End::S,
        "t" => End::T,
        _ => return Err(Error::syntax(line, format!("dart `{tok}` has end `{end}`, expected s or t"))),
    };
    Ok(Dart::new(edge, end))
}

/// Reads the unchecked contents of an `.xg` document.
pub fn parse_raw(text: &str) -> Result<RawXGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<Option<Edge>> = Vec::new();
    let mut pairing: Vec<Option<[Vec<Dart>; 2]>> = Vec::new();
    let mut last_line = 0;
    for (i, raw_line) in text.lines().enumerate() {
        let ln = i + 1;
        last_line = ln;
        let line = strip_comment(raw_line);
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let keyword = toks.next().expect("non-empty line has a token");
        let Some((v_count, e_count)) = header else {
            if keyword != "xgraph" {
                return Err(Error::syntax(ln, "expected header `xgraph <V> <E>`"));
            }
            let v = number(toks.next(), ln, "vertex count")?;
            let e = number(toks.next(), ln, "edge count")?;
            if toks.next().is_some() {
                return Err(Error::syntax(ln, "trailing tokens after header"));
            }
            header = Some((v, e));
            edges = vec![None; e];
            pairing = vec![None; v];
            continue;
        };
        match keyword {
            "e" => {
                let id = number(toks.next(), ln, "edge id")?;
                let tail = number(toks.next(), ln, "tail vertex")?;
                let head = number(toks.next(), ln, "head vertex")?;
                if toks.next().is_some() {
                    return Err(Error::syntax(ln, "trailing tokens after edge"));
                }
                if id >= e_count {
                    return Err(Error::syntax(ln, format!("edge id {id} out of range 0..{e_count}")));
                }
                if edges[id].replace(Edge { tail, head }).is_some() {
                    return Err(Error::syntax(ln, format!("edge {id} declared twice")));
                }
            }
            "p" => {
                let v = number(toks.next(), ln, "vertex")?;
                if v >= v_count {
                    return Err(Error::syntax(ln, format!("vertex {v} out of range 0..{v_count}")));
                }
                let mut pairs = [Vec::new(), Vec::new()];
                let mut side = 0;
                for tok in toks {
                    if tok == "|" {
                        if side == 1 {
                            return Err(Error::syntax(ln, "more than one `|` in pairing"));
                        }
                        side = 1;
                    } else {
                        pairs[side].push(parse_dart(tok, ln)?);
                    }
                }
                if side == 0 {
                    return Err(Error::syntax(ln, "pairing needs `|` between the two pairs"));
                }
                if pairing[v].replace(pairs).is_some() {
                    return Err(Error::syntax(ln, format!("pairing for vertex {v} given twice")));
                }
            }
            "xgraph" => return Err(Error::syntax(ln, "duplicate header")),
            other => return Err(Error::syntax(ln, format!("unknown record `{other}`"))),
        }
    }
    let Some((vertex_count, _)) = header else {
        return Err(Error::syntax(last_line.max(1), "missing header `xgraph <V> <E>`"));
    };
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(id, e)| e.ok_or_else(|| Error::syntax(last_line, format!("edge {id} never declared"))))
        .collect::<Result<_>>()?;
    Ok(RawXGraph {
        vertex_count,
        edges,
        pairing,
    })
}

/// Parses and validates an `.xg` document.
pub fn parse_xgraph(text: &str) -> Result<XGraph> {
    XGraph::try_from(parse_raw(text)?)
}

/// Canonical `.xg` text: ascending ids, each pair sorted, smaller pair first.
pub fn write_xgraph(g: &XGraph) -> String {
    let mut out = format!("xgraph {} {}\n", g.vertex_count(), g.edge_count());
    for (i, e) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "e {i} {} {}", e.tail, e.head);
    }
    for v in 0..g.vertex_count() {
        let [[a, b], [c, d]] = g.pairs(v);
        let _ = writeln!(out, "p {v} {a} {b} | {c} {d}");
    }
    out
}

pub fn parse_step(tok: &str, line: usize) -> Result<OrientedEdge> {
    let (forward, rest) = match tok.as_bytes().first() {
        Some(b'+') => (true, &tok[1..]),
        Some(b'-') => (false, &tok[1..]),
        _ => return Err(Error::syntax(line, format!("step `{tok}` must start with + or -"))),
    };
    let edge = number(Some(rest), line, "step edge")?;
    Ok(OrientedEdge { edge, forward })
}

/// `w +0 -1 ...`
pub fn write_walk(w: &ClosedWalk) -> String {
    format!("w {w}")
}

/// A certificate document: two walks and the claimed crossing vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateFile {
    pub walk1: ClosedWalk,
    pub walk2: ClosedWalk,
    pub crossing: Option<usize>,
}

pub fn write_certificate(w1: &ClosedWalk, w2: &ClosedWalk, crossing: usize) -> String {
    format!("{}\n{}\nx {crossing}\n", write_walk(w1), write_walk(w2))
}

/// Reads `w` and `x` records; everything else except comments is an error.
pub fn parse_certificate(text: &str) -> Result<CertificateFile> {
    let mut walks = Vec::new();
    let mut crossing = None;
    let mut last = 0;
    for (i, raw_line) in text.lines().enumerate() {
        let ln = i + 1;
        last = ln;
        let line = strip_comment(raw_line);
        let mut toks = line.split_whitespace();
        match toks.next() {
            None => {}
            Some("w") => {
                let steps = toks.map(|t| parse_step(t, ln)).collect::<Result<Vec<_>>>()?;
                walks.push(ClosedWalk::new(steps).map_err(|e| Error::syntax(ln, e.to_string()))?);
            }
            Some("x") => {
                if crossing.is_some() {
                    return Err(Error::syntax(ln, "crossing vertex given twice"));
                }
                crossing = Some(number(toks.next(), ln, "crossing vertex")?);
            }
            Some(other) => return Err(Error::syntax(ln, format!("unknown record `{other}`"))),
        }
    }
    match <[ClosedWalk; 2]>::try_from(walks) {
        Ok([walk1, walk2]) => Ok(CertificateFile {
            walk1,
            walk2,
            crossing,
        }),
        Err(w) => Err(Error::syntax(
            last.max(1),
            format!("certificate needs exactly two walks, found {}", w.len()),
        )),
    }
}

/// `r <v> <d> <d> <d> <d>` per vertex (cyclic order from the smallest dart),
/// then one `f <count>` line per face set given.
pub fn write_embedding(r: &RotationSystem, face_sets: &[&FaceSet]) -> String {
    let mut out = String::new();
    for v in 0..r.vertex_count() {
        let [a, b, c, d] = r.canonical_at(v);
        let _ = writeln!(out, "r {v} {a} {b} {c} {d}");
    }
    for f in face_sets {
        let _ = writeln!(out, "f {}", f.count());
    }
    out
}

/// Reads the `r` records of an embedding document into a rotation system.
pub fn parse_embedding(text: &str, g: &XGraph) -> Result<RotationSystem> {
    let mut order: Vec<Option<[Dart; 4]>> = vec![None; g.vertex_count()];
    for (i, raw_line) in text.lines().enumerate() {
        let ln = i + 1;
        let line = strip_comment(raw_line);
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("r") => {
                let v = number(toks.next(), ln, "vertex")?;
                let darts = toks.map(|t| parse_dart(t, ln)).collect::<Result<Vec<_>>>()?;
                let darts: [Dart; 4] = darts
                    .try_into()
                    .map_err(|_| Error::syntax(ln, "rotation needs exactly four darts"))?;
                let slot = order
                    .get_mut(v)
                    .ok_or_else(|| Error::syntax(ln, format!("vertex {v} out of range")))?;
                *slot = Some(darts);
            }
            Some("f" | "t" | "c") | None => {}
            Some(other) => return Err(Error::syntax(ln, format!("unknown record `{other}`"))),
        }
    }
    let order = order
        .into_iter()
        .enumerate()
        .map(|(v, o)| o.ok_or_else(|| Error::Precondition(format!("no rotation for vertex {v}"))))
        .collect::<Result<_>>()?;
    RotationSystem::new(order, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Violation;

    const FIG8_LOOP: &str = "xgraph 1 2\ne 0 0 0\ne 1 0 0\np 0 0.s 0.t | 1.s 1.t\n";

    #[test]
    fn parses_fig8_loop() {
        let g = parse_xgraph(FIG8_LOOP).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.pairs(0), [[Dart::s(0), Dart::t(0)], [Dart::s(1), Dart::t(1)]]);
        assert_eq!(write_xgraph(&g), FIG8_LOOP);
    }

    #[test]
    fn parses_fig8_pass_with_comments() {
        let text = "# figure eight\nxgraph 1 2\ne 0 0 0   # first loop\ne 1 0 0\np 0 0.t 1.s | 0.s 1.t\n";
        let g = parse_xgraph(text).unwrap();
        assert!(g.same_pair(Dart::t(0), Dart::s(1)));
        assert_eq!(write_xgraph(&g), "xgraph 1 2\ne 0 0 0\ne 1 0 0\np 0 0.s 1.t | 0.t 1.s\n");
    }

    #[test]
    fn degree_violation() {
        let err = parse_xgraph("xgraph 1 1\ne 0 0 0\np 0 0.s | 0.t\n").unwrap_err();
        let Error::Invalid(v) = err else {
            panic!("expected validation failure, got {err:?}")
        };
        assert_eq!(v[0], Violation::Degree { vertex: 0, degree: 2 });
        assert!(v[0].to_string().contains("degree 2"));
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let cases = [
            ("xgraph 1 2\ne 0 0\n", 2),
            ("e 0 0 0\n", 1),
            ("xgraph 1 2\ne 0 0 0\ne 1 0 0\np 0 0.s 0.x | 1.s 1.t\n", 4),
            ("xgraph 1 2\ne 0 0 0\ne 0 0 0\n", 3),
            ("xgraph 1 2\ne 0 0 0\ne 1 0 0\nq 1\n", 4),
            ("xgraph 1 2\ne 0 0 0\ne 1 0 0\np 0 0.s 0.t 1.s 1.t\n", 4),
        ];
        for (text, line) in cases {
            match parse_xgraph(text) {
                Err(Error::Syntax { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: expected syntax error, got {other:?}"),
            }
        }
    }

    #[test]
    fn overlap_and_unknown_dart() {
        let err = parse_xgraph("xgraph 1 2\ne 0 0 0\ne 1 0 0\np 0 0.s 0.s | 1.s 1.t\n").unwrap_err();
        assert!(matches!(err, Error::Invalid(ref v) if v.contains(&Violation::PairOverlap { vertex: 0 })));
        let err = parse_xgraph("xgraph 1 2\ne 0 0 0\ne 1 0 0\np 0 0.s 0.t | 1.s 9.t\n").unwrap_err();
        assert!(matches!(err, Error::Invalid(ref v) if v.iter().any(|x| matches!(x, Violation::UnknownDart { .. }))));
    }

    #[test]
    fn certificate_round_trip() {
        let w1 = ClosedWalk::new(vec![OrientedEdge::forward(1)]).unwrap();
        let w2 = ClosedWalk::new(vec![OrientedEdge::forward(0), OrientedEdge::backward(3)]).unwrap();
        let text = write_certificate(&w1, &w2, 0);
        assert_eq!(text, "w +1\nw +0 -3\nx 0\n");
        let c = parse_certificate(&format!("# header\n{text}")).unwrap();
        assert_eq!((c.walk1, c.walk2, c.crossing), (w1, w2, Some(0)));
        assert!(parse_certificate("w +1\n").is_err());
        assert!(parse_certificate("w 1\nw +0\n").is_err());
    }
}
