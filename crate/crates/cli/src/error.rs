//! CLI error type carrying the documented exit codes.

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_LOOKUP: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_CAPABILITY: i32 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<concord_core::Error> for CliError {
    fn from(e: concord_core::Error) -> Self {
        let code = match &e {
            concord_core::Error::Capability(_) => EXIT_CAPABILITY,
            concord_core::Error::MissingLeafData(_) => EXIT_LOOKUP,
            _ => EXIT_PARSE,
        };
        CliError::new(code, e.to_string())
    }
}
