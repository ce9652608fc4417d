//! Run the whole verification harness in-process and print the summary.

use lie4::catalog::Catalog;
use lie4::cli::verify_all;

fn main() {
    let cat = Catalog::builtin();
    let outcome = verify_all(&cat, 2, 7);
    println!(
        "total {}, matched {}, mismatched {}, flagged {}",
        outcome.total,
        outcome.matched,
        outcome.mismatched.len(),
        outcome.flagged_incomplete.len()
    );
    if !outcome.mismatched.is_empty() {
        println!("{}", serde_json::to_string_pretty(&outcome.mismatched).unwrap());
        std::process::exit(1);
    }
}
