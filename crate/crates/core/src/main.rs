fn main() {
    let code = qlie::frontend::cli_main(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
