use clap::Parser;
use reciprocity::cli::{run, Cli};
use reciprocity::exit_code;

fn main() {
    let cli = Cli::parse();
    let env = std::env::var("RECIPROCITY_SEED").ok();
    let result = run(&cli, env.as_deref());
    match &result {
        Ok(out) if cli.json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap()),
        Ok(out) => print!("{}", out.text),
        Err(e) => eprintln!("error: {}", e.render()),
    }
    std::process::exit(exit_code(&result));
}
