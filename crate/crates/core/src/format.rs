//! Plain-text archives of generator matrices.
//!
//! A code is written as `k` lines of `n` characters from `{0,1,2}`. Blank
//! lines and lines starting with `#` are ignored, and consecutive codes are
//! separated by a line holding only `%`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf3::Gf3Vector;

/// Parses every code in `text`; `source` is only used in error messages.
pub fn parse_codes(text: &str, source: &Path) -> Result<Vec<LinearCode>> {
    let mut codes = Vec::new();
    let mut rows: Vec<Gf3Vector> = Vec::new();
    let mut start_line = 0;

    let err = |line: usize, msg: String| Error::Parse {
        file: source.to_path_buf(),
        line,
        msg,
    };
    let mut finish = |rows: &mut Vec<Gf3Vector>, line: usize| -> Result<()> {
        if rows.is_empty() {
            return Ok(());
        }
        let expected = rows.len();
        let code = LinearCode::from_generators(std::mem::take(rows)).map_err(|e| err(line, e.to_string()))?;
        if code.dimension() != expected {
            return Err(err(line, format!("generator rows are linearly dependent (rank {} < {expected})", code.dimension())));
        }
        codes.push(code);
        Ok(())
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "%" {
            finish(&mut rows, start_line)?;
            continue;
        }
        let row: Gf3Vector = line
            .parse()
            .map_err(|e: Error| err(line_no, e.to_string()))?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(err(
                    line_no,
                    format!("row has length {}, expected {}", row.len(), first.len()),
                ));
            }
        } else {
            start_line = line_no;
        }
        rows.push(row);
    }
    finish(&mut rows, start_line)?;
    Ok(codes)
}

pub fn read_codes(path: &Path) -> Result<Vec<LinearCode>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_codes(&text, path)
}

/// Serializes codes; `header` lines are emitted as `#` comments.
pub fn format_codes<'a>(codes: impl IntoIterator<Item = &'a LinearCode>, header: &[String]) -> String {
    let mut out = String::new();
    for h in header {
        writeln!(out, "# {h}").unwrap();
    }
    for (i, c) in codes.into_iter().enumerate() {
        if i > 0 {
            out.push_str("%\n");
        }
        writeln!(out, "# {}", i + 1).unwrap();
        for r in c.generator().rows() {
            writeln!(out, "{r}").unwrap();
        }
    }
    out
}

/// Writes through a temporary file so readers never observe a partial archive.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let tmp: PathBuf = path.with_extension("tmp");
    std::fs::write(&tmp, contents).map_err(|e| Error::io(&tmp, e))?;
    std::fs::rename(&tmp, path).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip() {
        let codes = vec![
            fixtures::code_10_5_5(),
            LinearCode::from_strs(&["1100", "0111"]).unwrap(),
        ];
        let text = format_codes(&codes, &["demo".to_string()]);
        let back = parse_codes(&text, Path::new("mem")).unwrap();
        assert_eq!(back.len(), 2);
        for (a, b) in codes.iter().zip(&back) {
            assert_eq!(a.generator(), b.generator());
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\n110\n\n# mid\n011\n%\n%\n111\n";
        let codes = parse_codes(text, Path::new("x.codes")).unwrap();
        assert_eq!(codes.len(), 2);
        assert_eq!(codes[0].dimension(), 2);
        assert_eq!(codes[1].dimension(), 1);
    }

    #[test]
    fn errors_name_file_and_line() {
        let e = parse_codes("110\n013\n", Path::new("bad.codes")).unwrap_err();
        assert_eq!(e.to_string(), "bad.codes:2: invalid field symbol '3'; expected one of '0', '1', '2'");
        let e = parse_codes("110\n01\n", Path::new("bad.codes")).unwrap_err();
        assert!(e.to_string().starts_with("bad.codes:2:"), "{e}");
        let e = parse_codes("# c\n110\n220\n", Path::new("dep.codes")).unwrap_err();
        assert!(e.to_string().starts_with("dep.codes:2:"), "{e}");
    }
}
