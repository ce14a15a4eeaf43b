fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("QMIN_LOG", "error")).init();
    std::process::exit(qmin::cli::main());
}
