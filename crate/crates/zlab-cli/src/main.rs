use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let result = zlab_cli::run(std::env::args_os());
    for d in &result.diagnostics {
        eprintln!("warning: {d}");
    }
    let text = result.render();
    let mut out = std::io::stdout().lock();
    if !text.is_empty() {
        let _ = out.write_all(text.as_bytes());
        if !text.ends_with('\n') {
            let _ = out.write_all(b"\n");
        }
    }
    ExitCode::from(result.exit_code())
}
