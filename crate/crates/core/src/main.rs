use clap::Parser;

fn main() {
    let cli = realknot::cli::Cli::parse();
    std::process::exit(realknot::cli::main_with(cli));
}
