use zn_ag::CayleyTable;

/// Parses the table import format: `n` lines, each `n` comma-separated
/// decimal residues in `0..n`, no header. A final newline is optional.
pub fn parse_table(text: &str) -> Result<CayleyTable, String> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Err("empty table".into());
    }
    let mut rows = Vec::new();
    for (i, line) in body.split('\n').enumerate() {
        let row = line
            .split(',')
            .map(|cell| {
                if cell.is_empty() || !cell.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(format!("line {}: `{cell}` is not a residue", i + 1));
                }
                cell.parse::<usize>()
                    .map_err(|e| format!("line {}: `{cell}`: {e}", i + 1))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    CayleyTable::from_rows(&rows).map_err(|e| e.to_string())
}
