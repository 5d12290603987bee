use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Parse { message: String, line: Option<usize>, column: Option<usize> },
    Input(String),
    Io(std::io::Error),
    Library(symcanon::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(e) if e.is_internal() => EXIT_INTERNAL,
            _ => EXIT_INVALID_INPUT,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse",
            CliError::Input(_) => "invalid_input",
            CliError::Io(_) => "io",
            CliError::Library(e) if e.is_internal() => "internal_verification",
            CliError::Library(_) => "invalid_input",
        }
    }

    pub fn to_value(&self) -> Value {
        let mut v = json!({ "kind": self.kind(), "message": self.to_string() });
        if let CliError::Parse { line, column, .. } = self {
            if let Some(l) = line {
                v["line"] = json!(l);
            }
            if let Some(c) = column {
                v["column"] = json!(c);
            }
        }
        v
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse { message, .. } => write!(f, "parse error: {message}"),
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
            CliError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<symcanon::Error> for CliError {
    fn from(e: symcanon::Error) -> Self {
        CliError::Library(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
