use outfn_cli::execute;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let as_json = args.iter().any(|a| a == "--json");
    let outcome = execute(&args);
    let out = outcome.render(as_json);
    if outcome.code == 2 {
        eprintln!("{}", out.trim_end());
    } else {
        print!("{out}");
        if !out.ends_with('\n') {
            println!();
        }
    }
    std::process::exit(outcome.code);
}
