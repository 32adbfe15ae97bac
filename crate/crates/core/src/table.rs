//! The table of prime pairs and their nest-weights.

use crate::error::Result;
use crate::sequences::Count;
use crate::weights::{NestWeights, PairParams};

/// Derivative orders shown per row: `wt` through `wt^v`.
pub const ORDERS: usize = 6;

pub const HEADER: [&str; 10] = [
    "№№", "n/k", "p_{n,k}", "M_k", "wt", "wt'", "wt''", "wt'''", "wt^iv", "wt^v",
];

/// Marker for a nest-weight that does not exist (`k <= s`).
pub const UNDEFINED: &str = "–";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub index: usize,
    pub n: usize,
    pub k: usize,
    pub m_k: Count,
    /// `weights[s]` is `wt^(s) p_{n,k}`, absent when `k <= s`.
    pub weights: Vec<Option<Count>>,
}

impl TableRow {
    pub fn cells(&self) -> Vec<String> {
        let pair = PairParams {
            n: self.n,
            k: self.k,
            s: 0,
        };
        let mut cells = vec![
            self.index.to_string(),
            format!("{}/{}", self.n, self.k),
            pair.word().to_text(),
            self.m_k.to_string(),
        ];
        cells.extend(self.weights.iter().map(|w| match w {
            Some(v) => v.to_string(),
            None => UNDEFINED.to_string(),
        }));
        cells
    }
}

/// All prime pairs of size `2..=max_n`, by size then closing offset.
pub fn rows(table: &mut NestWeights, max_n: usize) -> Result<Vec<TableRow>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for k in 1..n {
            let weights = (0..ORDERS)
                .map(|s| (s < k).then(|| table.nest_weight(n, k, s)).transpose())
                .collect::<Result<Vec<_>>>()?;
            out.push(TableRow {
                index: out.len() + 1,
                n,
                k,
                m_k: table.sequences().motzkin(k).clone(),
                weights,
            });
        }
    }
    Ok(out)
}

/// Tab-separated rendering, header first, one line per row.
pub fn render(rows: &[TableRow]) -> String {
    let mut text = HEADER.join("\t");
    text.push('\n');
    for row in rows {
        text.push_str(&row.cells().join("\t"));
        text.push('\n');
    }
    text
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        let rows = rows(&mut NestWeights::new(), 4).unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[5].cells().join(" "), "6 4/3 ()00 4 7 6 3 – – –");
        assert_eq!(rows[0].cells().join(" "), "1 2/1 () 1 1 – – – – –");
    }

    #[test]
    fn render_layout() {
        let text = render(&rows(&mut NestWeights::new(), 3).unwrap());
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("№№\tn/k"));
        assert_eq!(lines[3], "3\t3/2\t()0\t2\t3\t2\t–\t–\t–\t–");
    }
}
