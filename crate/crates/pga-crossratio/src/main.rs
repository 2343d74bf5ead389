use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(pga_crossratio::cli::run(std::env::args_os()))
}
