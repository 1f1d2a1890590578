use std::io::Write;
use std::process::ExitCode;

use rainbow_kernels_cli::{run, EXIT_NEGATIVE, EXIT_OK};

fn main() -> ExitCode {
    let outcome = run(std::env::args_os().skip(1));
    let written = if outcome.exit_code == EXIT_OK || outcome.exit_code == EXIT_NEGATIVE {
        std::io::stdout().write_all(outcome.report_text.as_bytes())
    } else {
        std::io::stderr().write_all(outcome.report_text.as_bytes())
    };
    if written.is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code as u8)
}
