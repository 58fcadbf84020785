fn main() {
    std::process::exit(garside_kit_cli::app::run());
}
