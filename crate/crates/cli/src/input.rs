//! Reading graphs and colorings from JSON files.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use rainbow_core::{EdgeColoring, Graph};
use serde_json::Value;

fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("{}: not valid JSON", path.display()))
}

/// Parses `{"colors": [...], "palette": p}` or a bare array. Without a
/// palette the largest color is used.
fn coloring_from_value(v: &Value, origin: &str) -> Result<EdgeColoring> {
    let (list, palette) = match v {
        Value::Array(_) => (v, None),
        Value::Object(map) => {
            let list = map
                .get("colors")
                .ok_or_else(|| anyhow!("{origin}: missing field `colors`"))?;
            let palette = match map.get("palette") {
                None => None,
                Some(p) => Some(
                    p.as_u64()
                        .and_then(|p| u32::try_from(p).ok())
                        .ok_or_else(|| anyhow!("{origin}: field `palette` must be a positive integer"))?,
                ),
            };
            (list, palette)
        }
        _ => bail!("{origin}: expected an array of colors or an object with field `colors`"),
    };
    let colors: Vec<u32> = serde_json::from_value(list.clone())
        .with_context(|| format!("{origin}: field `colors` must be an array of positive integers"))?;
    let coloring = match palette {
        Some(p) => EdgeColoring::new(colors, p),
        None => EdgeColoring::from_colors(colors),
    };
    coloring.with_context(|| format!("{origin}: field `colors`"))
}

/// A graph file holds either a bare graph `{"n", "edges"}` or a construction
/// with a `graph` field; in the latter case its coloring is returned too.
pub fn load_graph(path: &Path) -> Result<(Graph, Option<EdgeColoring>)> {
    let origin = path.display().to_string();
    let v = read_json(path)?;
    let (graph_value, field) = match v.get("graph") {
        Some(inner) => (inner.clone(), "field `graph`"),
        None => (v.clone(), "graph"),
    };
    let graph: Graph = serde_json::from_value(graph_value).with_context(|| format!("{origin}: {field}"))?;
    let coloring = if v.get("graph").is_some() && v.get("colors").is_some() {
        Some(coloring_from_value(&v, &origin)?)
    } else {
        None
    };
    Ok((graph, coloring))
}

pub fn load_coloring(path: &Path) -> Result<EdgeColoring> {
    let v = read_json(path)?;
    coloring_from_value(&v, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn coloring_shapes() {
        let c = coloring_from_value(&json!([1, 2, 2]), "x").unwrap();
        assert_eq!(c.palette_size(), 2);
        let c = coloring_from_value(&json!({"colors": [1, 2], "palette": 5}), "x").unwrap();
        assert_eq!(c.palette_size(), 5);
        let e = coloring_from_value(&json!({"colours": [1]}), "x").unwrap_err();
        assert!(e.to_string().contains("`colors`"));
        let e = coloring_from_value(&json!([1, 0]), "x").unwrap_err();
        assert!(format!("{e:#}").contains("colors[1]"));
    }
}
