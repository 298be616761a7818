use std::process::ExitCode;

fn main() -> ExitCode {
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    let code = ramify_cli::run(
        std::env::args_os(),
        &mut ramify_cli::Io {
            out: &mut out,
            err: &mut err,
        },
    );
    ExitCode::from(code)
}
