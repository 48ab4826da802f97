use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(bwma_cli::run(std::env::args_os()))
}
