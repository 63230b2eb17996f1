//! The group-specification grammar shared by all subcommands: either a
//! builtin name (`S5`, `A4`, `Z12`, `D6`, `Q8`) or an explicit generator
//! list `deg=<n>; (cycles)[,(cycles)]*` in 1-based cycle notation.

use std::fmt;

use crate::permgrp::{builtin_with_cap, parse_permutation, FiniteGroup, GroupError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Builtin(String),
    Explicit { degree: usize, generators: Vec<Permutation> },
}

impl GroupSpec {
    /// Parses a spec string; errors carry the byte offset into the input.
    pub fn parse(s: &str) -> Result<GroupSpec, GroupError> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(GroupError::Parse { offset: 0, expected: "group spec" });
        }
        if let Some(rest) = trimmed.strip_prefix("deg=") {
            let base = s.len() - s.trim_start().len() + 4;
            let semi = rest.find(';').ok_or(GroupError::Parse {
                offset: base + rest.len(),
                expected: "';' after the degree",
            })?;
            let degree: usize = rest[..semi].trim().parse().map_err(|_| GroupError::Parse {
                offset: base,
                expected: "degree",
            })?;
            if degree == 0 {
                return Err(GroupError::InvalidDegree);
            }
            let tail = &rest[semi + 1..];
            let mut generators = Vec::new();
            let mut cursor = base + semi + 1;
            for part in tail.split(',') {
                let lead = part.len() - part.trim_start().len();
                let piece = part.trim();
                if piece.is_empty() {
                    return Err(GroupError::Parse {
                        offset: cursor + lead,
                        expected: "cycle list",
                    });
                }
                let perm = parse_permutation(piece, degree).map_err(|e| match e {
                    GroupError::Parse { offset, expected } => {
                        GroupError::Parse { offset: cursor + lead + offset, expected }
                    }
                    other => other,
                })?;
                generators.push(perm);
                cursor += part.len() + 1;
            }
            return Ok(GroupSpec::Explicit { degree, generators });
        }
        // builtin names: a letter in SAZD followed by digits, or Q8
        let builtin_shape = trimmed == "Q8"
            || (trimmed.len() >= 2
                && "SAZD".contains(&trimmed[..1])
                && trimmed[1..].bytes().all(|b| b.is_ascii_digit()));
        if builtin_shape {
            return Ok(GroupSpec::Builtin(trimmed.to_string()));
        }
        Err(GroupError::Parse {
            offset: s.len() - s.trim_start().len(),
            expected: "builtin name (S/A/Z/D<k> or Q8) or 'deg=<n>; (cycles),...'",
        })
    }

    /// Realizes the spec as a group, honoring the element cap.
    pub fn build(&self, cap: usize) -> Result<FiniteGroup, GroupError> {
        match self {
            GroupSpec::Builtin(name) => builtin_with_cap(name, cap),
            GroupSpec::Explicit { degree, generators } => {
                FiniteGroup::generate(*degree, generators.clone(), cap)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Builtin(name) => f.write_str(name),
            GroupSpec::Explicit { degree, generators } => {
                write!(f, "deg={degree}; ")?;
                for (i, g) in generators.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_specs() {
        let spec = GroupSpec::parse("A5").unwrap();
        assert_eq!(spec, GroupSpec::Builtin("A5".into()));
        assert_eq!(spec.build(20_000).unwrap().order(), 60);
        assert!(GroupSpec::parse("Q8").is_ok());
    }

    #[test]
    fn explicit_spec_builds_s3() {
        let spec = GroupSpec::parse("deg=3; (1 2),(1 2 3)").unwrap();
        let g = spec.build(20_000).unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let err = GroupSpec::parse("deg=3; (1 2").unwrap_err();
        assert_eq!(err, GroupError::Parse { offset: 11, expected: "point or ')'" });
        let err = GroupSpec::parse("deg=x; (1 2)").unwrap_err();
        assert_eq!(err, GroupError::Parse { offset: 4, expected: "degree" });
        let err = GroupSpec::parse("hello").unwrap_err();
        assert!(matches!(err, GroupError::Parse { offset: 0, .. }));
        let err = GroupSpec::parse("deg=3; (1 4)").unwrap_err();
        assert_eq!(
            err,
            GroupError::Parse { offset: 10, expected: "point within the stated degree" }
        );
    }

    #[test]
    fn round_trip() {
        for s in ["A5", "Q8", "deg=3; (1 2),(1 2 3)", "deg=5; (1 2)(3 4),(1 3 5)"] {
            let spec = GroupSpec::parse(s).unwrap();
            let again = GroupSpec::parse(&spec.to_string()).unwrap();
            assert_eq!(spec, again);
        }
    }
}
