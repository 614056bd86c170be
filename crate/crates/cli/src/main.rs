use clap::Parser;

fn main() {
    let cli = lgcy_cli::Cli::parse();
    std::process::exit(lgcy_cli::run(&cli));
}
