fn main() -> std::process::ExitCode {
    skewbetti::run(std::env::args_os())
}
