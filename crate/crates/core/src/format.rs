//! Text and JSON renderings. JSON documents are compact and end in a newline.

use num_rational::BigRational;
use serde::Serialize;

use crate::hypersimplex::{EdgeKind, EdgeSpec, FacetKind, FacetSpec, SHypersimplex};
use crate::permutahedra::{MonotonePath, PermFacet, Permutahedron};
use crate::subset::VertexSubset;
use crate::triangulation::Triangulation;

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Exact fraction as `"p/q"`, also for integers.
pub fn fraction(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

fn digits(v: &VertexSubset) -> String {
    v.indicator().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Header `d=<d> S=<list>` followed by one 0/1 row per vertex.
pub fn vertex_list_text(p: &SHypersimplex, vertices: &[VertexSubset]) -> String {
    let mut out = format!("{}\n", p.card_set());
    for v in vertices {
        out.push_str(&digits(v));
        out.push('\n');
    }
    out
}

/// Parses the vertex list text format back into `(d, S, vertices)`.
pub fn parse_vertex_list(text: &str) -> Result<(usize, Vec<usize>, Vec<VertexSubset>), crate::Error> {
    let bad = |m: &str| crate::Error::InvalidSubset(m.to_string());
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("missing header"))?;
    let (d_part, s_part) = header.split_once(' ').ok_or_else(|| bad("malformed header"))?;
    let d: usize = d_part
        .strip_prefix("d=")
        .and_then(|x| x.parse().ok())
        .ok_or_else(|| bad("malformed d"))?;
    let s_list = s_part.strip_prefix("S=").ok_or_else(|| bad("malformed S"))?;
    let members = s_list
        .split(',')
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|_| bad("malformed S")))
        .collect::<Result<Vec<_>, _>>()?;
    let mut vertices = Vec::new();
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let row: Vec<&str> = line.split_whitespace().collect();
        if row.len() != d {
            return Err(crate::Error::LengthMismatch(row.len(), d));
        }
        let mut bits = 0u64;
        for (i, x) in row.iter().enumerate() {
            match *x {
                "0" => {}
                "1" => bits |= 1 << i,
                _ => return Err(bad(line)),
            }
        }
        vertices.push(VertexSubset::new(d, bits)?);
    }
    Ok((d, members, vertices))
}

#[derive(Serialize)]
struct VertexDoc<'a> {
    d: usize,
    #[serde(rename = "S")]
    s: &'a [usize],
    vertices: Vec<Vec<i64>>,
}

pub fn vertex_list_json(p: &SHypersimplex, vertices: &[VertexSubset]) -> String {
    json(&VertexDoc {
        d: p.d(),
        s: p.members(),
        vertices: vertices.iter().map(VertexSubset::indicator).collect(),
    })
}

fn kind_name(kind: EdgeKind) -> &'static str {
    match kind {
        EdgeKind::Chain => "chain",
        EdgeKind::Swap => "swap",
    }
}

#[derive(Serialize)]
struct EdgeDoc {
    a: Vec<usize>,
    b: Vec<usize>,
    kind: &'static str,
}

pub fn edges_json(edges: &[EdgeSpec]) -> String {
    let docs: Vec<EdgeDoc> = edges
        .iter()
        .map(|e| EdgeDoc {
            a: e.a.elements(),
            b: e.b.elements(),
            kind: kind_name(e.kind),
        })
        .collect();
    json(&docs)
}

pub fn edges_text(edges: &[EdgeSpec]) -> String {
    let mut out = format!("{} edges\n", edges.len());
    for e in edges {
        out.push_str(&format!("{:<5} {} -- {}\n", kind_name(e.kind), e.a, e.b));
    }
    out
}

#[derive(Serialize)]
#[serde(untagged)]
enum Witness {
    Index(usize),
    Join { set: Vec<usize>, h: usize },
}

#[derive(Serialize)]
struct FacetDoc<'a> {
    normal: &'a [i64],
    rhs: i64,
    kind: &'static str,
    witness: Option<Witness>,
}

fn witness(kind: &FacetKind) -> Option<Witness> {
    match *kind {
        FacetKind::Top | FacetKind::Bottom => None,
        FacetKind::CoordUp(i) | FacetKind::CoordDown(i) => Some(Witness::Index(i)),
        FacetKind::Join { set, h } => Some(Witness::Join { set: set.elements(), h }),
    }
}

pub fn facets_json(facets: &[FacetSpec]) -> String {
    let docs: Vec<FacetDoc> = facets
        .iter()
        .map(|f| FacetDoc {
            normal: &f.normal,
            rhs: f.rhs,
            kind: f.kind.tag(),
            witness: witness(&f.kind),
        })
        .collect();
    json(&docs)
}

pub fn facets_text(facets: &[FacetSpec]) -> String {
    let mut out = format!("{} facets\n", facets.len());
    for f in facets {
        let lhs: Vec<String> = f.normal.iter().map(|x| format!("{x:>3}")).collect();
        let note = match witness(&f.kind) {
            None => String::new(),
            Some(Witness::Index(i)) => format!("i={i}"),
            Some(Witness::Join { set, h }) => format!("I={set:?} h={h}"),
        };
        out.push_str(&format!("{:<3} [{}] <= {:>3}  {note}\n", f.kind.tag(), lhs.join(""), f.rhs));
    }
    out
}

#[derive(Serialize)]
struct PieceDoc<'a> {
    d: usize,
    #[serde(rename = "S")]
    s: &'a [usize],
}

pub fn decomposition_json(pieces: &[SHypersimplex]) -> String {
    let docs: Vec<PieceDoc> = pieces
        .iter()
        .map(|p| PieceDoc { d: p.d(), s: p.members() })
        .collect();
    json(&docs)
}

pub fn decomposition_text(pieces: &[SHypersimplex]) -> String {
    pieces.iter().map(|p| format!("{p}\n")).collect()
}

/// Chains of sorted index arrays.
pub fn paths_json(paths: &[MonotonePath]) -> String {
    let docs: Vec<Vec<Vec<usize>>> = paths
        .iter()
        .map(|w| w.chain.iter().map(VertexSubset::elements).collect())
        .collect();
    json(&docs)
}

pub fn paths_text(paths: &[MonotonePath]) -> String {
    let mut out = format!("{} monotone paths\n", paths.len());
    for w in paths {
        out.push_str(&format!("{w}\n"));
    }
    out
}

#[derive(Serialize)]
struct PermDoc<'a> {
    p: &'a [i64],
    num_vertices: u128,
}

pub fn permutahedron_json(pi: &Permutahedron) -> String {
    json(&PermDoc {
        p: pi.p(),
        num_vertices: pi.vertex_count(),
    })
}

pub fn permutahedron_text(pi: &Permutahedron) -> String {
    format!("{pi} with {} vertices\n", pi.vertex_count())
}

#[derive(Serialize)]
struct PermFacetDoc<'a> {
    set: Vec<usize>,
    normal: &'a [i64],
    rhs: i64,
}

pub fn perm_facets_json(facets: &[PermFacet]) -> String {
    let docs: Vec<PermFacetDoc> = facets
        .iter()
        .map(|f| PermFacetDoc {
            set: f.set.elements(),
            normal: &f.normal,
            rhs: f.rhs,
        })
        .collect();
    json(&docs)
}

#[derive(Serialize)]
struct TriangulationDoc {
    simplices: Vec<Vec<u64>>,
    count: usize,
    volume: String,
}

/// Simplices as arrays of vertex bitmasks, with the exact total volume.
pub fn triangulation_json(t: &Triangulation, volume: &BigRational) -> String {
    json(&TriangulationDoc {
        simplices: t
            .simplices
            .iter()
            .map(|s| s.iter().map(VertexSubset::bits).collect())
            .collect(),
        count: t.len(),
        volume: fraction(volume),
    })
}

pub fn triangulation_text(t: &Triangulation, volume: &BigRational) -> String {
    let mut out = format!("{} simplices, volume {}\n", t.len(), fraction(volume));
    for s in &t.simplices {
        let names: Vec<String> = s.iter().map(VertexSubset::to_string).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct VolumeDoc {
    volume: String,
    normalized: String,
    simplices: usize,
}

/// Volume and `d!·vol`.
pub fn volume_json(volume: &BigRational, normalized: &BigRational, simplices: usize) -> String {
    json(&VolumeDoc {
        volume: fraction(volume),
        normalized: fraction(normalized),
        simplices,
    })
}

#[derive(Serialize)]
struct BoundDoc {
    bound: u128,
    facets: u128,
    nontrivial: bool,
}

pub fn extension_bound_json(bound: u128, facets: u128) -> String {
    json(&BoundDoc {
        bound,
        facets,
        nontrivial: bound < facets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_text_round_trips() {
        let p = SHypersimplex::from_parts(3, &[1, 2]).unwrap();
        let text = vertex_list_text(&p, &p.vertices());
        assert!(text.starts_with("d=3 S=1,2\n1 0 0\n"));
        let (d, s, v) = parse_vertex_list(&text).unwrap();
        assert_eq!((d, s, v), (3, vec![1, 2], p.vertices()));
        assert!(parse_vertex_list("d=2 S=1\n1 1 0\n").is_err());
    }

    #[test]
    fn permutahedron_document() {
        let pi = Permutahedron::new(vec![2, 2, 1, 1]).unwrap();
        assert_eq!(permutahedron_json(&pi), "{\"p\":[2,2,1,1],\"num_vertices\":6}\n");
    }

    #[test]
    fn facet_documents() {
        let p = SHypersimplex::from_parts(3, &[0, 2]).unwrap();
        let text = facets_json(&p.facets().unwrap());
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), p.facet_count().unwrap() as usize);
        for f in arr {
            assert!(f["normal"].is_array() && f["rhs"].is_i64() && f["kind"].is_string());
        }
    }

    #[test]
    fn fractions_always_have_denominators() {
        assert_eq!(fraction(&BigRational::from_integer(2.into())), "2/1");
        assert_eq!(fraction(&BigRational::new(2.into(), 6.into())), "1/3");
    }
}
