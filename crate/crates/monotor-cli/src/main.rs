use std::process::ExitCode;

fn main() -> ExitCode {
    monotor_cli::run_main()
}
