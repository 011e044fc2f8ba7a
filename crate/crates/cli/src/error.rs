use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid shape `{0}`: expected comma-separated weakly decreasing positive integers")]
    Shape(String),
    #[error("{0}")]
    Parse(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("direct and contraction constructions differ:\n{}", .0.join("\n"))]
    Oracle(Vec<String>),
    #[error("max_n = {max_n} exceeds the bound {cap} (set CSKIT_MAX_N to raise it)")]
    Bound { max_n: usize, cap: usize },
}

impl CliError {
    /// `1` for a failed oracle comparison, `2` for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(_) => 1,
            _ => 2,
        }
    }
}
