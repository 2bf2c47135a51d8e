use thiserror::Error;

/// One finding of [`crate::validate_config`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    /// error name, e.g. `NonIntegerEll`
    pub code: String,
    pub message: String,
}

impl Diagnostic {
    pub fn new(code: impl Into<String>, message: impl Into<String>) -> Self {
        Self { code: code.into(), message: message.into() }
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "error[{}]: {}", self.code, self.message)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    ConfigParse(String),
    #[error("unknown profile {0:?}")]
    UnknownProfile(String),
    #[error("config has {} problem(s)", .0.len())]
    Invalid(Vec<Diagnostic>),
    #[error(transparent)]
    Module(#[from] minkq::Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn name(&self) -> &str {
        match self {
            CliError::ConfigParse(_) => "ConfigParse",
            CliError::UnknownProfile(_) => "UnknownProfile",
            CliError::Invalid(d) => d.first().map(|d| d.code.as_str()).unwrap_or("Invalid"),
            CliError::Module(e) => e.name(),
            CliError::Io(_) => "Io",
        }
    }

    /// 2 for configuration problems, 1 for failures while running.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ConfigParse(_) | CliError::UnknownProfile(_) | CliError::Invalid(_) => 2,
            CliError::Module(_) | CliError::Io(_) => 1,
        }
    }

    /// Lines of the form `error[Name]: message`.
    pub fn report(&self) -> Vec<String> {
        match self {
            CliError::Invalid(diags) => diags.iter().map(|d| d.to_string()).collect(),
            other => vec![format!("error[{}]: {}", other.name(), other)],
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
