use std::io::Write;

fn main() {
    let out = critpoint::cli::run(std::env::args_os().skip(1));
    print!("{}", out.stdout);
    let _ = std::io::stdout().flush();
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
