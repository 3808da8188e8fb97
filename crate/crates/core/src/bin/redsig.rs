fn main() -> std::process::ExitCode {
    redsig::cli::main()
}
