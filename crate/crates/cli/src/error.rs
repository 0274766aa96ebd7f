//! Error type shared by every subcommand, with a stable exit-code mapping.

use std::path::PathBuf;

use thiserror::Error;

/// Anything that can go wrong while running a subcommand.
///
/// Every variant carries enough context to print a single actionable line on
/// stderr; [`CliError::exit_code`] maps the failure class to the process exit
/// status so scripts can branch on it.
#[derive(Debug, Error)]
pub enum CliError {
    /// The invocation itself was malformed (unknown method name, bad
    /// configuration value, ...). Mirrors the exit code clap uses for flag
    /// parsing failures.
    #[error("{0}")]
    Usage(String),

    /// A file could not be opened, read, or written.
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// An input file was readable but not understandable. `line` is 1-based.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    /// The computation itself rejected the inputs.
    #[error(transparent)]
    Compute(#[from] curvedepth::Error),
}

impl CliError {
    /// Process exit status for this failure class.
    ///
    /// `1` computation error, `2` usage error, `3` I/O error, `4` malformed
    /// input file. Success is `0` as usual.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Compute(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Parse { .. } => 4,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_are_stable() {
        let usage = CliError::Usage("bad flag".into());
        let io = CliError::Io {
            path: PathBuf::from("missing.csv"),
            source: std::io::Error::from(std::io::ErrorKind::NotFound),
        };
        let parse = CliError::Parse {
            path: PathBuf::from("sample.csv"),
            line: 3,
            message: "invalid number 'abc'".into(),
        };
        let compute = CliError::Compute(curvedepth::Error::EmptySample);

        assert_eq!(usage.exit_code(), 2);
        assert_eq!(io.exit_code(), 3);
        assert_eq!(parse.exit_code(), 4);
        assert_eq!(compute.exit_code(), 1);
    }

    #[test]
    fn parse_errors_cite_file_and_line() {
        let err = CliError::Parse {
            path: PathBuf::from("sample.csv"),
            line: 7,
            message: "row has 4 values, expected 5".into(),
        };
        assert_eq!(err.to_string(), "sample.csv:7: row has 4 values, expected 5");
    }
}
