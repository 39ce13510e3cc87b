use intercol::bounds::BoundReport;
use serde_json::Value;

/// Left-aligned columns separated by two spaces.
pub fn render(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<String>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.iter().map(|h| h.to_string()).collect())];
    out.push(line(widths.iter().map(|w| "-".repeat(*w)).collect()));
    out.extend(rows.iter().map(|r| line(r.clone())));
    out.join("\n")
}

pub fn bounds(r: &BoundReport) -> String {
    let rows: Vec<Vec<String>> = r
        .entries
        .iter()
        .map(|e| {
            let value = e
                .value
                .map(|v| v.to_string())
                .or_else(|| e.verdict.clone())
                .unwrap_or_default();
            vec![
                e.direction.as_str().to_string(),
                e.name.clone(),
                value,
                e.citation.clone(),
            ]
        })
        .collect();
    format!(
        "{}\n{}",
        r.descriptor,
        render(&["direction", "bound", "value", "citation"], &rows)
    )
}

pub fn spectrum(v: &Value) -> String {
    let mut rows = Vec::new();
    for (key, label) in [("infeasible", "infeasible"), ("undecided", "undecided")] {
        for t in v[key].as_array().into_iter().flatten() {
            rows.push((t.as_u64().unwrap_or(0), label));
        }
    }
    for f in v["feasible"].as_array().into_iter().flatten() {
        rows.push((f["t"].as_u64().unwrap_or(0), "feasible"));
    }
    rows.sort();
    let rows: Vec<Vec<String>> = rows
        .into_iter()
        .map(|(t, s)| vec![t.to_string(), s.to_string()])
        .collect();
    format!(
        "status: {}\n{}",
        v["status"].as_str().unwrap_or("?"),
        render(&["t", "result"], &rows)
    )
}

/// Flat `key  value` listing for small objects.
pub fn object(v: &Value) -> String {
    match v.as_object() {
        Some(map) => {
            let rows: Vec<Vec<String>> = map
                .iter()
                .map(|(k, v)| {
                    vec![
                        k.clone(),
                        match v {
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        },
                    ]
                })
                .collect();
            render(&["field", "value"], &rows)
        }
        None => v.to_string(),
    }
}
