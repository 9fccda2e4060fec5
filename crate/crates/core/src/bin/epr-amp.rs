use std::io;
use std::process::ExitCode;

use epr_amplitudes::cli::{self, Context};

fn main() -> ExitCode {
    let code = cli::run(
        std::env::args_os(),
        &Context::from_env(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
