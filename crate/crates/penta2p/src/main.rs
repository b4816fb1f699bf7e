use clap::Parser;

fn main() {
    let cli = penta2p::cli::Cli::parse();
    match penta2p::cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}
