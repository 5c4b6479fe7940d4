//! Thin binary wrapper; all logic lives in the library crate.

fn main() {
    std::process::exit(sl2char_cli::run());
}
