// SPDX-License-Identifier: Apache-2.0

use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let status = revequiv::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(status.code() as u8)
}
