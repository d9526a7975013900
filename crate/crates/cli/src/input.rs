use schubert_ic::geometry::validate;
use schubert_ic::{EnumLimit, SchubertInput};

use crate::CliError;

pub const ENUM_LIMIT_VAR: &str = "SCHUBERT_ENUM_LIMIT";

/// Accepts `2 5 4 8`, `2,5,4,8` or `(2,5,4,8)`, possibly split over several
/// arguments.
pub fn parse_input(args: &[String]) -> Result<SchubertInput, CliError> {
    let joined = args.join(" ");
    let inner = joined.trim().trim_start_matches('(').trim_end_matches(')');
    let nums = inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<i64>().map_err(|_| CliError::Input(format!("'{s}' is not an integer"))))
        .collect::<Result<Vec<_>, _>>()?;
    match nums[..] {
        [i, j, k, l] => Ok(validate(i, j, k, l)?),
        _ => Err(CliError::Input(format!("expected four integers i j k l, got {}", nums.len()))),
    }
}

/// Reads the enumeration cap from the environment, if set.
pub fn enum_limit_from_env() -> Result<EnumLimit, CliError> {
    match std::env::var(ENUM_LIMIT_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(EnumLimit)
            .map_err(|_| CliError::Input(format!("{ENUM_LIMIT_VAR}='{v}' is not a nonnegative integer"))),
        Err(_) => Ok(EnumLimit::DEFAULT),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn accepted_spellings() {
        for a in [&["2", "5", "4", "8"][..], &["(2,5,4,8)"], &["2,5,4,8"], &["(2,", "5,", "4,", "8)"]] {
            let s = parse_input(&args(a)).unwrap();
            assert_eq!((s.i(), s.j(), s.k(), s.l()), (2, 5, 4, 8));
        }
    }

    #[test]
    fn rejected() {
        assert!(matches!(parse_input(&args(&["2", "5", "4"])), Err(CliError::Input(_))));
        assert!(matches!(parse_input(&args(&["a", "5", "4", "8"])), Err(CliError::Input(_))));
        let err = parse_input(&args(&["1", "3", "3", "5"])).unwrap_err();
        assert!(err.to_string().contains("r < c violated"));
        assert_eq!(err.exit_code(), 2);
    }
}
