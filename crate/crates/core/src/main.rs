use std::io;
use std::process::ExitCode;

use strange_duality::cli;
use strange_duality::singularities::Table;

fn main() -> ExitCode {
    let code = cli::run(
        std::env::args_os(),
        &Table::canonical(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
