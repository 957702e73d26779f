use std::fmt::Write as _;

use serde::Serialize;

use crate::census::CensusTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    /// Tab-separated with a `#` header line.
    Table,
    /// One JSON object per row.
    Jsonl,
}

#[derive(Serialize)]
struct RowOut<'a> {
    canonical: String,
    n: u32,
    clutching: i64,
    directed: bool,
    manifold: String,
    page: &'a str,
}

fn hex(bytes: &[u8]) -> String {
    bytes
        .iter()
        .fold(String::with_capacity(2 * bytes.len()), |mut s, b| {
            write!(s, "{b:02x}").unwrap();
            s
        })
}

pub fn render_table(table: &CensusTable, format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Table => {
            writeln!(
                out,
                "# n={} s_max={} k_max={} rows={}",
                table.n,
                table.s_max,
                table.k_max,
                table.rows.len()
            )
            .unwrap();
            out.push_str("# canonical\tclutching\tdirected\tmanifold\tpage\n");
            for r in &table.rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    hex(&r.canonical),
                    r.descriptor.clutching(),
                    r.directed,
                    r.manifold,
                    r.summary
                )
                .unwrap();
            }
        }
        TableFormat::Jsonl => {
            for r in &table.rows {
                let row = RowOut {
                    canonical: hex(&r.canonical),
                    n: table.n,
                    clutching: r.descriptor.clutching(),
                    directed: r.directed,
                    manifold: r.manifold.to_string(),
                    page: &r.summary,
                };
                out.push_str(&serde_json::to_string(&row).expect("plain data serializes"));
                out.push('\n');
            }
        }
    }
    out
}
