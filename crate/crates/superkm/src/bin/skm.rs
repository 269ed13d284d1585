use std::io::Write;

fn main() {
    let r = superkm::cli::run(std::env::args_os());
    let mut out = std::io::stdout().lock();
    let _ = if r.code == 2 {
        std::io::stderr().write_all(r.report.as_bytes())
    } else {
        out.write_all(r.report.as_bytes())
    };
    let _ = out.flush();
    std::process::exit(r.code);
}
