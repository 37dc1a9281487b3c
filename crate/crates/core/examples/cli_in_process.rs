//! Drives the command-line interface in-process with a private cache.

use msw::cli::{run_with, Cache};

fn main() {
    let dir = std::env::temp_dir().join(format!("msw-example-{}", std::process::id()));
    let cache = Cache::at(&dir);
    let mut out = Vec::new();
    let mut err = Vec::new();
    for args in [
        vec!["msw", "htilde", "--mu", "2,1", "--json"],
        vec!["msw", "htilde", "--mu", "2,1", "--json"],
        vec!["msw", "polygraph-freeness", "--n", "2", "--l", "1"],
        vec!["msw", "coinv", "--n", "3", "--csv"],
    ] {
        let code = run_with(&args, &cache, &mut out, &mut err);
        println!("$ {} -> exit {code}", args[1..].join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        out.clear();
    }
    let _ = std::fs::remove_dir_all(dir);
}
