fn main() {
    std::process::exit(sp6_orbits::cli::main_with(std::env::args_os()));
}
