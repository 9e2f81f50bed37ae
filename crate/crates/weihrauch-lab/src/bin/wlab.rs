fn main() {
    std::process::exit(weihrauch_lab::cli::main());
}
