use std::io::IsTerminal;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let color = std::env::var("CPG_COLOR").map_or(true, |v| v != "0") && std::io::stderr().is_terminal();
    let code = cpg_core::cli::run(
        &args,
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        color,
    );
    ExitCode::from(code as u8)
}
