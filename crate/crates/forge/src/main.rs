fn main() -> std::process::ExitCode {
    operad_forge::cli::main()
}
