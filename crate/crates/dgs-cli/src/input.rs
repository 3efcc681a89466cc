//! Graph ingestion: files, stdin, and the built-in fixture.

use std::fs;
use std::io::Read;

use dgs_core::fixtures;
use dgs_core::graphs::Graph;

use crate::{Failure, Format};

/// Reads input graphs from a path ("-" for stdin) or materializes a
/// named fixture, enforcing the vertex cap on everything that comes
/// in. graph6 inputs hold one graph per line; an edge-list input is a
/// single graph.
pub fn read_graphs(
    input: Option<&str>,
    fixture: Option<&str>,
    format: Format,
    max_vertices: usize,
) -> Result<Vec<Graph>, Failure> {
    let graphs = match (input, fixture) {
        (_, Some(name)) => vec![fixture_graph(name)?],
        (Some(path), None) => parse_graphs(&read_source(path)?, format)?,
        (None, None) => {
            return Err(Failure::usage(
                "no input: pass a path, \"-\" for stdin, or --fixture",
            ))
        }
    };
    if graphs.is_empty() {
        return Err(Failure::usage("input contained no graphs"));
    }
    for g in &graphs {
        if g.order() > max_vertices {
            return Err(Failure::cap(max_vertices, g.order()));
        }
    }
    Ok(graphs)
}

pub fn fixture_graph(name: &str) -> Result<Graph, Failure> {
    match name {
        "paper-g8" => Ok(fixtures::paper_g8()),
        other => Err(Failure::usage(&format!(
            "unknown fixture {other:?}; available: paper-g8"
        ))),
    }
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|err| Failure::usage(&format!("cannot read stdin: {err}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
            .map_err(|err| Failure::usage(&format!("cannot read {path}: {err}")))
    }
}

fn parse_graphs(content: &str, format: Format) -> Result<Vec<Graph>, Failure> {
    match format {
        Format::Graph6 => content
            .lines()
            .map(str::trim)
            .filter(|line| !line.is_empty())
            .map(|line| Graph::from_graph6(line).map_err(Failure::from_core))
            .collect(),
        Format::Edgelist => Ok(vec![
            Graph::from_edge_list(content).map_err(Failure::from_core)?
        ]),
    }
}
