// Drive the command-line interface in-process.

use a3b_tiling::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for args in [
        vec!["a3b", "counts", "--f", "18"],
        vec!["a3b", "flips", "--f", "14", "--m", "5", "--count"],
        vec!["a3b", "quad", "--f", "12", "--beta", "0.75"],
    ] {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(args.clone(), &mut out, &mut err);
        println!("$ {}  (exit {code})", args[1..].join(" "));
        print!("{}", String::from_utf8(out)?);
        if code != 0 {
            return Err(String::from_utf8(err)?.into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
