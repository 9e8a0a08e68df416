//! File formats: edge lists, edit files, and the JSON tree/trace shapes.

use std::fs;
use std::io::Read;

use serde::{Deserialize, Serialize};

use cograph::{Cotree, CotreeLabel, EditSet, Graph, MdNode, MergeTrace, ModuleKind};

use crate::Failure;

/// Reads a file, or stdin when the path is `-`.
pub fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Parse(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Parse(format!("reading {path}: {e}")))
    }
}

/// Parses the edge-list format: a `n m` header, then m lines `u v` with
/// 0-based distinct endpoints. Lines starting with `#` and blank lines
/// are ignored. Duplicate edges are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph, Failure> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (header_no, header) = lines
        .next()
        .ok_or_else(|| Failure::Parse("empty input, expected a `n m` header".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(parts.next(), header_no, "vertex count")?;
    let m: usize = parse_field(parts.next(), header_no, "edge count")?;
    if parts.next().is_some() {
        return Err(Failure::Parse(format!(
            "line {header_no}: header has trailing tokens"
        )));
    }
    let mut g = Graph::new(n);
    let mut seen = 0usize;
    for (no, line) in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(parts.next(), no, "endpoint")?;
        let v: usize = parse_field(parts.next(), no, "endpoint")?;
        if parts.next().is_some() {
            return Err(Failure::Parse(format!("line {no}: edge has trailing tokens")));
        }
        if u >= n || v >= n {
            return Err(Failure::Parse(format!(
                "line {no}: vertex out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Failure::Parse(format!("line {no}: self-loop at {u}")));
        }
        if g.has_edge(u, v) {
            return Err(Failure::Parse(format!("line {no}: duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)
            .map_err(|e| Failure::Parse(format!("line {no}: {e}")))?;
        seen += 1;
    }
    if seen != m {
        return Err(Failure::Parse(format!(
            "header promised {m} edges but the file has {seen}"
        )));
    }
    Ok(g)
}

fn parse_field(tok: Option<&str>, line: usize, what: &str) -> Result<usize, Failure> {
    let tok = tok.ok_or_else(|| Failure::Parse(format!("line {line}: missing {what}")))?;
    tok.parse()
        .map_err(|_| Failure::Parse(format!("line {line}: invalid {what} {tok:?}")))
}

pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Renders an edit set against its input graph: `- u v` for deletions
/// (pairs that are edges of the input), `+ u v` for additions, sorted.
pub fn render_edit_file(g: &Graph, edits: &EditSet) -> String {
    let mut out = String::new();
    for (u, v) in edits.iter() {
        let sign = if g.has_edge(u, v) { '-' } else { '+' };
        out.push_str(&format!("{sign} {u} {v}\n"));
    }
    out
}

/// Parses an edit file against the graph it applies to. The sign is
/// presentation only (the semantics are a symmetric difference), but a
/// sign contradicting the graph is rejected as a parse error, as are
/// out-of-range vertices and repeated pairs.
pub fn parse_edit_file(text: &str, g: &Graph) -> Result<EditSet, Failure> {
    let mut edits = EditSet::new();
    for (no, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let sign = parts
            .next()
            .ok_or_else(|| Failure::Parse(format!("line {no}: empty edit line")))?;
        if sign != "+" && sign != "-" {
            return Err(Failure::Parse(format!(
                "line {no}: expected `+` or `-`, got {sign:?}"
            )));
        }
        let u: usize = parse_field(parts.next(), no, "endpoint")?;
        let v: usize = parse_field(parts.next(), no, "endpoint")?;
        if parts.next().is_some() {
            return Err(Failure::Parse(format!("line {no}: edit has trailing tokens")));
        }
        if u >= g.n() || v >= g.n() {
            return Err(Failure::Parse(format!(
                "line {no}: vertex out of range for {} vertices",
                g.n()
            )));
        }
        if u == v {
            return Err(Failure::Parse(format!("line {no}: self-loop at {u}")));
        }
        let is_edge = g.has_edge(u, v);
        if (sign == "-") != is_edge {
            return Err(Failure::Parse(format!(
                "line {no}: sign {sign} contradicts the graph, {u} {v} is {}an edge",
                if is_edge { "" } else { "not " }
            )));
        }
        if !edits.insert(u, v) {
            return Err(Failure::Parse(format!("line {no}: duplicate pair {u} {v}")));
        }
    }
    Ok(edits)
}

/// JSON shape shared by cotrees and decomposition trees. Leaves carry a
/// vertex; inner nodes carry their vertex set and children; prime nodes
/// additionally carry quotient edges as child-index pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub children: Option<Vec<TreeJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_edges: Option<Vec<(usize, usize)>>,
}

impl TreeJson {
    fn leaf(vertex: usize) -> TreeJson {
        TreeJson {
            kind: "leaf".into(),
            vertex: Some(vertex),
            vertices: None,
            children: None,
            quotient_edges: None,
        }
    }

    fn inner(kind: &str, vertices: Vec<usize>, children: Vec<TreeJson>) -> TreeJson {
        TreeJson {
            kind: kind.into(),
            vertex: None,
            vertices: Some(vertices),
            children: Some(children),
            quotient_edges: None,
        }
    }

    /// The representation of a graph with no vertices.
    pub fn empty() -> TreeJson {
        TreeJson::inner("parallel", Vec::new(), Vec::new())
    }

    pub fn from_cotree(t: &Cotree) -> TreeJson {
        match t {
            Cotree::Empty => TreeJson::empty(),
            Cotree::Leaf(v) => TreeJson::leaf(*v),
            Cotree::Inner { label, children } => {
                let kind = match label {
                    CotreeLabel::Series => "series",
                    CotreeLabel::Parallel => "parallel",
                };
                let mut vertices = t.leaves();
                vertices.sort_unstable();
                let children = children.iter().map(TreeJson::from_cotree).collect();
                TreeJson::inner(kind, vertices, children)
            }
        }
    }

    pub fn from_md(node: &MdNode) -> TreeJson {
        match node {
            MdNode::Leaf(v) => TreeJson::leaf(*v),
            MdNode::Inner { .. } => {
                let kind = match node.kind() {
                    Some(ModuleKind::Parallel) => "parallel",
                    Some(ModuleKind::Series) => "series",
                    Some(ModuleKind::Prime) => "prime",
                    None => unreachable!("inner nodes have a kind"),
                };
                let mut vertices = node.vertex_set();
                vertices.sort_unstable();
                let children: Vec<TreeJson> =
                    node.children().iter().map(TreeJson::from_md).collect();
                let quotient_edges = node.quotient().map(|q| q.edges().collect());
                TreeJson {
                    kind: kind.into(),
                    vertex: None,
                    vertices: Some(vertices),
                    children: Some(children),
                    quotient_edges,
                }
            }
        }
    }

    pub fn render(&self) -> String {
        serde_json::to_string(self).expect("tree serialization cannot fail")
    }
}

#[derive(Serialize)]
struct TraceRecordJson {
    sources: Vec<Vec<usize>>,
    merged: Vec<usize>,
    edits: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct TraceJson {
    records: Vec<TraceRecordJson>,
}

pub fn render_trace(trace: &MergeTrace) -> String {
    let records = trace
        .records()
        .iter()
        .map(|r| TraceRecordJson {
            sources: r.sources().to_vec(),
            merged: r.merged().to_vec(),
            edits: r.edits().iter().collect(),
        })
        .collect();
    serde_json::to_string(&TraceJson { records }).expect("trace serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn edge_lists_round_trip() {
        let g = p4();
        let text = render_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let g = parse_edge_list("# header\n\n3 1\n# edge\n0 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn malformed_inputs_name_their_line() {
        let cases = [
            ("", "header"),
            ("2", "missing edge count"),
            ("2 1\n0 0", "self-loop"),
            ("2 1\n0 5", "out of range"),
            ("2 2\n0 1\n1 0", "duplicate"),
            ("2 2\n0 1", "promised 2 edges"),
            ("x y", "invalid vertex count"),
        ];
        for (text, needle) in cases {
            match parse_edge_list(text) {
                Err(Failure::Parse(msg)) => {
                    assert!(msg.contains(needle), "{text:?} gave {msg:?}")
                }
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn edit_files_round_trip_with_signs() {
        let g = p4();
        let mut edits = EditSet::new();
        edits.insert(1, 2);
        edits.insert(0, 3);
        let text = render_edit_file(&g, &edits);
        assert_eq!(text, "+ 0 3\n- 1 2\n");
        assert_eq!(parse_edit_file(&text, &g).unwrap(), edits);
    }

    #[test]
    fn contradictory_signs_are_rejected() {
        let g = p4();
        assert!(matches!(
            parse_edit_file("+ 0 1\n", &g),
            Err(Failure::Parse(_))
        ));
        assert!(matches!(
            parse_edit_file("- 0 3\n", &g),
            Err(Failure::Parse(_))
        ));
        assert!(matches!(
            parse_edit_file("- 0 9\n", &g),
            Err(Failure::Parse(_))
        ));
    }

    #[test]
    fn tree_json_round_trips_through_serde() {
        let g = p4();
        let md = cograph::MdTree::build(&g);
        let tree = TreeJson::from_md(md.root().unwrap());
        let text = tree.render();
        let back: TreeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, tree);
        assert!(text.starts_with("{\"type\":\"prime\",\"vertices\":[0,1,2,3]"));

        let cotree = Cotree::from_graph(&Graph::from_edges(3, &[(0, 1)]).unwrap()).unwrap();
        let tree = TreeJson::from_cotree(&cotree);
        let back: TreeJson = serde_json::from_str(&tree.render()).unwrap();
        assert_eq!(back, tree);
    }
}
