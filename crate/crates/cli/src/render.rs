//! Deterministic text and CSV rendering.

/// Values closer to zero than this print as `0` in text output.
const SNAP: f64 = 5e-13;

/// `%g`-style formatting with 6 significant digits.
pub fn g6(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x.abs() < SNAP {
        return "0".to_owned();
    }
    let sci = format!("{x:.5e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..6).contains(&exp) {
        let decimals = (5 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    }
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.to_owned();
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".to_owned()
    } else {
        t.to_owned()
    }
}

/// Left-aligned columns separated by two spaces; no trailing whitespace.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows) {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Minimal CSV quoting: fields with commas, quotes or newlines are quoted.
pub fn csv_line(fields: &[String]) -> String {
    let quoted: Vec<String> = fields
        .iter()
        .map(|f| {
            if f.contains([',', '"', '\n']) {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect();
    let mut line = quoted.join(",");
    line.push('\n');
    line
}

/// Brace-delimited list in 6-digit text form.
pub fn set(values: &[f64]) -> String {
    let cells: Vec<String> = values.iter().map(|&x| g6(x)).collect();
    format!("{{{}}}", cells.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_format() {
        assert_eq!(g6(0.0), "0");
        assert_eq!(g6(-1e-14), "0");
        assert_eq!(g6(5.0), "5");
        assert_eq!(g6(3.0 - 2f64.sqrt()), "1.58579");
        assert_eq!(g6(-2.0), "-2");
        assert_eq!(g6(123456.7), "123457");
        assert_eq!(g6(1234567.0), "1.23457e+06");
        assert_eq!(g6(0.000123456), "0.000123456");
        assert_eq!(g6(1.5e-7), "1.5e-07");
        assert_eq!(g6(16.0 + 2.0 * 2f64.sqrt()), "18.8284");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_line(&["a".into(), "b,c".into()]), "a,\"b,c\"\n");
    }

    #[test]
    fn table_alignment() {
        let t = table(&["x", "mult"], &[vec!["10".into(), "1".into()]]);
        assert_eq!(t, "x   mult\n10  1\n");
    }
}
