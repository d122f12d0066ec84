//! Plain-text rendering of an alignment: a row/column grid with the New
//! pattern in row 0, plus a machine-readable block.

use crate::align::Alignment;

/// Grid layout: one line per row, cells padded to column width, the row
/// index at both ends.
pub fn render_grid(alignment: &Alignment) -> String {
    let columns = alignment.columns();
    let widths: Vec<usize> = columns
        .iter()
        .map(|c| alignment.column_symbol(c).as_str().len())
        .collect();
    let mut out = String::new();
    for (r, row) in alignment.rows().iter().enumerate() {
        let mut line = format!("{r} ");
        for (ci, col) in columns.iter().enumerate() {
            let cell = match col.cells.get(&r) {
                Some(&pos) => row.symbols()[pos].as_str(),
                None => "",
            };
            line.push_str(&format!("{cell:<width$} ", width = widths[ci]));
        }
        let line = line.trim_end().to_string();
        out.push_str(&line);
        // Right-pad to a common edge so the closing row index lines up.
        let full: usize = 2 + widths.iter().map(|w| w + 1).sum::<usize>();
        for _ in line.len()..full {
            out.push(' ');
        }
        out.push_str(&format!("{r}\n"));
    }
    out
}

/// Machine-readable block: `row <k>: <pattern-id> <col:pos ...>` per row
/// and a final `score:` line.
pub fn render_machine(alignment: &Alignment) -> String {
    let mut out = String::new();
    for (r, row) in alignment.rows().iter().enumerate() {
        let cells: Vec<String> = alignment
            .columns()
            .iter()
            .enumerate()
            .filter_map(|(ci, col)| col.cells.get(&r).map(|&pos| format!("{ci}:{pos}")))
            .collect();
        out.push_str(&format!("row {r}: {} {}\n", row.id(), cells.join(" ")));
    }
    out.push_str(&format!(
        "score: raw={:.4} encoded={:.4} saving={:.4}\n",
        alignment.score.raw_cost, alignment.score.encoded_cost, alignment.score.saving
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::align::pairwise_align;
    use crate::pattern::Pattern;

    #[test]
    fn grid_places_symbols_in_columns() {
        let new = Pattern::incoming("new", "a x b").unwrap();
        let old = Pattern::old("p1", "a b", 1).unwrap();
        let a = &pairwise_align(&new, &old, 1)[0];
        let grid = render_grid(a);
        let lines: Vec<&str> = grid.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("0 a x b"));
        assert!(lines[1].starts_with("1 a   b"));
        assert!(lines[0].ends_with('0'));
        assert!(lines[1].ends_with('1'));
    }

    #[test]
    fn machine_block_lists_cells_and_score() {
        let new = Pattern::incoming("new", "a x b").unwrap();
        let old = Pattern::old("p1", "a b", 1).unwrap();
        let a = &pairwise_align(&new, &old, 1)[0];
        let text = render_machine(a);
        assert!(text.contains("row 0: new 0:0 1:1 2:2"));
        assert!(text.contains("row 1: p1 0:0 2:1"));
        assert!(text.contains("score: raw="));
    }
}
