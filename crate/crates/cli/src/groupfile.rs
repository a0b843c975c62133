//! Line-oriented group files: `name; degree; (0 1 2)(3 4); (0 1); …`.

use std::fs;
use std::path::Path;

use tisub_core::{GroupTable, Permutation, DEFAULT_MAX_ORDER};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

pub fn load_groups(path: &Path) -> Result<Vec<GroupTable>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_groups(&text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        error: e,
    })
}

pub fn parse_groups(text: &str) -> Result<Vec<GroupTable>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| ParseError { line: i + 1, message };
        out.push(parse_record(line).map_err(err)?);
    }
    Ok(out)
}

fn parse_record(line: &str) -> Result<GroupTable, String> {
    let mut fields = line.split(';').map(str::trim);
    let name = fields.next().filter(|s| !s.is_empty()).ok_or("missing group name")?;
    let degree_field = fields.next().ok_or("missing degree")?;
    let degree: usize = degree_field
        .parse()
        .map_err(|_| format!("degree {degree_field:?} is not a non-negative integer"))?;
    if degree == 0 {
        return Err("degree must be at least 1".into());
    }
    let gens = fields
        .filter(|f| !f.is_empty())
        .map(|f| parse_permutation(f, degree))
        .collect::<Result<Vec<_>, _>>()?;
    GroupTable::from_generators_capped(&gens, name, DEFAULT_MAX_ORDER).map_err(|e| e.to_string())
}

/// A product of disjoint cycles such as `(0 1 2)(3 4)`; `()` is the identity.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation, String> {
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected '(' in {text:?}"))?;
        let close = body.find(')').ok_or_else(|| format!("unclosed cycle in {text:?}"))?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| format!("bad point {s:?} in {text:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        cycles.push(points);
        rest = body[close + 1..].trim_start();
    }
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(degree, &refs).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records() {
        let gs = parse_groups("# comment\n\nS3; 3; (0 1 2); (0 1)\nC1; 1;\nV4; 4; (0 1)(2 3); (0 2)(1 3) # Klein\n").unwrap();
        assert_eq!(gs.iter().map(|g| g.order()).collect::<Vec<_>>(), [6, 1, 4]);
        assert_eq!(gs[0].name(), "S3");
        assert_eq!(gs[2].name(), "V4");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_groups("S3; 3; (0 1 2)\n\nbad; 3; (0 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert_eq!(parse_groups("X; 3; (0 5)").unwrap_err().line, 1);
        assert!(parse_groups("X; three; (0 1)").is_err());
        assert!(parse_groups("X; 3; (0 1)(1 2)").is_err());
        assert!(parse_groups("; 3; (0 1)").is_err());
        assert!(parse_groups("X").is_err());
    }

    #[test]
    fn identity_generator() {
        assert_eq!(parse_groups("E; 2; ()").unwrap()[0].order(), 1);
    }
}
