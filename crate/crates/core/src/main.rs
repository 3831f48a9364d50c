use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let (out, code) = stablemon::cli::run(&args, &mut std::io::stdin().lock());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    std::process::exit(code);
}
