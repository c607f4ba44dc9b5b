use std::process::ExitCode;

fn main() -> ExitCode {
    equichar_cli::run()
}
