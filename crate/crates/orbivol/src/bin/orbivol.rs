use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut stdout = std::io::stdout().lock();
    ExitCode::from(orbivol::cli::run(&argv, &mut stdout) as u8)
}
