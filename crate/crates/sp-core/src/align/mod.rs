//! Pairwise and multiple alignment by beam search over pairwise extensions.

mod multiple;
mod pairwise;

pub use multiple::{build_multiple_alignment, pairwise_align, AlignConfig};

use std::collections::BTreeMap;

use crate::pattern::{Pattern, PatternId};
use crate::score::CompressionScore;
use crate::symbol::Symbol;

/// One column of an alignment: at most one cell per row, mapping the row
/// index to a position inside that row's pattern. Columns holding two or
/// more cells are unified and carry the shared symbol.
#[derive(Clone, Debug, PartialEq)]
pub struct AlignmentColumn {
    pub cells: BTreeMap<usize, usize>,
    pub unified: Option<Symbol>,
}

impl AlignmentColumn {
    fn single(row: usize, pos: usize) -> Self {
        AlignmentColumn {
            cells: BTreeMap::from([(row, pos)]),
            unified: None,
        }
    }
}

/// A column-ordered arrangement of one New pattern (row 0) against zero or
/// more Old patterns (rows 1..), with its compression score.
#[derive(Clone, Debug)]
pub struct Alignment {
    rows: Vec<Pattern>,
    columns: Vec<AlignmentColumn>,
    pub score: CompressionScore,
}

impl Alignment {
    /// The baseline arrangement: the New pattern alone, one column per
    /// symbol, nothing unified, saving zero.
    pub fn baseline(new: &Pattern) -> Self {
        let columns = (0..new.len()).map(|i| AlignmentColumn::single(0, i)).collect();
        Alignment {
            rows: vec![new.clone()],
            columns,
            score: CompressionScore::zero(),
        }
    }

    pub fn rows(&self) -> &[Pattern] {
        &self.rows
    }

    pub fn new_row(&self) -> &Pattern {
        &self.rows[0]
    }

    pub fn old_rows(&self) -> &[Pattern] {
        &self.rows[1..]
    }

    pub fn old_row_count(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn columns(&self) -> &[AlignmentColumn] {
        &self.columns
    }

    /// Symbol shown in a column: the unified symbol, or the single cell's.
    pub fn column_symbol<'a>(&'a self, col: &'a AlignmentColumn) -> &'a Symbol {
        if let Some(sym) = &col.unified {
            return sym;
        }
        let (&row, &pos) = col.cells.iter().next().expect("column has a cell");
        &self.rows[row].symbols()[pos]
    }

    /// New positions whose column carries at least one Old cell.
    pub fn covered_new_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.new_row().len()];
        for col in &self.columns {
            if let Some(&pos) = col.cells.get(&0) {
                if col.cells.keys().any(|&r| r > 0) {
                    mask[pos] = true;
                }
            }
        }
        mask
    }

    pub fn uncovered_new_positions(&self) -> Vec<usize> {
        self.covered_new_mask()
            .iter()
            .enumerate()
            .filter(|(_, covered)| !**covered)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn unmatched_new_count(&self) -> usize {
        self.uncovered_new_positions().len()
    }

    /// New positions unified with a given Old row, in column order.
    pub fn new_positions_of_row(&self, row: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for col in &self.columns {
            if col.cells.contains_key(&row) {
                if let Some(&pos) = col.cells.get(&0) {
                    out.push(pos);
                }
            }
        }
        out
    }

    pub fn old_row_ids(&self) -> Vec<&PatternId> {
        self.old_rows().iter().map(|p| p.id()).collect()
    }

    /// Adds `pattern` as a new Old row. `matches` pairs a column index with
    /// a position inside the pattern, strictly increasing in both; the
    /// pattern's remaining symbols become fresh single-cell columns packed
    /// against the next matched column (tail goes right after the last).
    pub(crate) fn extend_with(&self, pattern: &Pattern, matches: &[(usize, usize)]) -> Alignment {
        let row = self.rows.len();
        let len = pattern.len();
        let mut columns: Vec<AlignmentColumn> = Vec::with_capacity(self.columns.len() + len);
        let mut mi = 0;
        for (ci, col) in self.columns.iter().enumerate() {
            if mi < matches.len() && matches[mi].0 == ci {
                let pos = matches[mi].1;
                let from = if mi == 0 { 0 } else { matches[mi - 1].1 + 1 };
                for p in from..pos {
                    columns.push(AlignmentColumn::single(row, p));
                }
                let mut unified = col.clone();
                unified.cells.insert(row, pos);
                unified.unified = Some(pattern.symbols()[pos].clone());
                columns.push(unified);
                if mi == matches.len() - 1 {
                    for p in pos + 1..len {
                        columns.push(AlignmentColumn::single(row, p));
                    }
                }
                mi += 1;
            } else {
                columns.push(col.clone());
            }
        }
        let mut rows = self.rows.clone();
        rows.push(pattern.clone());
        Alignment {
            rows,
            columns,
            score: CompressionScore::zero(),
        }
    }

    /// Reorders Old rows by the first column they occupy (ties by id), the
    /// layout the grid display expects.
    pub(crate) fn canonical_row_order(&self) -> Alignment {
        let first_col = |row: usize| {
            self.columns
                .iter()
                .position(|c| c.cells.contains_key(&row))
                .unwrap_or(usize::MAX)
        };
        let mut order: Vec<usize> = (1..self.rows.len()).collect();
        order.sort_by(|&a, &b| {
            first_col(a)
                .cmp(&first_col(b))
                .then_with(|| self.rows[a].id().cmp(self.rows[b].id()))
                .then_with(|| a.cmp(&b))
        });
        let mut remap = vec![0usize; self.rows.len()];
        for (new_idx, &old_idx) in order.iter().enumerate() {
            remap[old_idx] = new_idx + 1;
        }
        let rows: Vec<Pattern> = std::iter::once(self.rows[0].clone())
            .chain(order.iter().map(|&i| self.rows[i].clone()))
            .collect();
        let columns = self
            .columns
            .iter()
            .map(|c| AlignmentColumn {
                cells: c.cells.iter().map(|(&r, &p)| (remap[r], p)).collect(),
                unified: c.unified.clone(),
            })
            .collect();
        Alignment {
            rows,
            columns,
            score: self.score,
        }
    }

    /// Signature identifying which patterns were used and which New
    /// positions each row covers; used to merge search duplicates.
    pub(crate) fn coverage_signature(&self) -> Vec<(String, Vec<usize>)> {
        let mut sig: Vec<(String, Vec<usize>)> = (1..self.rows.len())
            .map(|r| {
                (
                    self.rows[r].id().as_str().to_string(),
                    self.new_positions_of_row(r),
                )
            })
            .collect();
        sig.sort();
        sig
    }

    /// Checks the structural invariants; returns a description of the first
    /// violation found. Intended for tests and debug assertions.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let mut seen_new = vec![0usize; self.new_row().len()];
        let mut last_pos: Vec<Option<usize>> = vec![None; self.rows.len()];
        for (ci, col) in self.columns.iter().enumerate() {
            if col.cells.is_empty() {
                return Err(format!("column {ci} has no cells"));
            }
            let mut symbol: Option<&Symbol> = None;
            for (&row, &pos) in &col.cells {
                if row >= self.rows.len() {
                    return Err(format!("column {ci} references row {row}"));
                }
                let syms = self.rows[row].symbols();
                if pos >= syms.len() {
                    return Err(format!("column {ci} row {row} position {pos} out of range"));
                }
                if let Some(prev) = last_pos[row] {
                    if pos <= prev {
                        return Err(format!("row {row} positions not increasing at column {ci}"));
                    }
                }
                last_pos[row] = Some(pos);
                if let Some(s) = symbol {
                    if s != &syms[pos] {
                        return Err(format!("column {ci} unifies distinct symbols"));
                    }
                } else {
                    symbol = Some(&syms[pos]);
                }
                if row == 0 {
                    seen_new[pos] += 1;
                }
            }
            if col.cells.len() >= 2 && col.unified.is_none() {
                return Err(format!("column {ci} has {} cells but no unified symbol", col.cells.len()));
            }
            if col.cells.len() < 2 && col.unified.is_some() {
                return Err(format!("column {ci} is single-cell but marked unified"));
            }
        }
        if let Some(pos) = seen_new.iter().position(|&c| c != 1) {
            return Err(format!("New position {pos} appears in {} columns", seen_new[pos]));
        }
        Ok(())
    }
}
