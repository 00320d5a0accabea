pub mod frozen;
#[allow(dead_code)] // not every test target uses the transcription oracle
pub mod oracle;
