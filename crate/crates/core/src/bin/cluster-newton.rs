use std::io::Write;

fn main() {
    let out = cluster_newton::cli::run(std::env::args_os());
    std::io::stdout().write_all(&out.stdout).expect("stdout");
    std::io::stderr().write_all(&out.stderr).expect("stderr");
    std::process::exit(out.code);
}
