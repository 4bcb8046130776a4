//! Deterministic key-value reports: one `key: value` per line, nesting via
//! dotted keys, emitted in insertion order.

#[derive(Default)]
pub struct Report {
    entries: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push_str(": ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }
}

/// `(i, j)` as 1-based `(a,b)`.
pub fn vertex_label(v: linarr::VertexId) -> String {
    format!("({},{})", v.lo + 1, v.hi + 1)
}

/// Lines of a set as 1-based space-separated indices.
pub fn line_list(lines: &[usize]) -> String {
    lines
        .iter()
        .map(|&l| (l + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// `rows: [1<2<3, 4<5]` rendering of a decomposition.
pub fn rows_label(rows: &[Vec<usize>]) -> String {
    let parts: Vec<String> = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| (x + 1).to_string())
                .collect::<Vec<_>>()
                .join("<")
        })
        .collect();
    format!("[{}]", parts.join(", "))
}
