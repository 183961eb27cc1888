fn main() {
    let (code, text) = zariski_series::cli::run(std::env::args_os());
    if code == 0 {
        println!("{text}");
    } else {
        eprintln!("{text}");
    }
    std::process::exit(code);
}
