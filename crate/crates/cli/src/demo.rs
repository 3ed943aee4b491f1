use spectra_core::characterization::counterexample_demo;

use crate::Outcome;

pub(crate) fn run() -> Outcome {
    let r = counterexample_demo();
    println!("B = {}", r.b);
    println!("f(x) = {}", r.f);
    println!("f(B) = {}", r.f_of_b);
    println!(
        "f(B) matches [[16,5,10],[0,6,0],[10,0,6]]: {}",
        if r.f_of_b_matches() { "yes" } else { "NO" }
    );
    println!("charpoly(B) = {}", r.charpoly_b);
    println!("charpoly(f(B)) = {}", r.charpoly_f_of_b);
    println!(
        "charpoly(B)(0) = {}, so 0 is {}an eigenvalue of B",
        r.charpoly_b_at_zero,
        if r.charpoly_b_at_zero == 0.into() {
            ""
        } else {
            "not "
        }
    );
    println!(
        "charpoly(f(B))({}) = {}, so f(0) = {} is {}an eigenvalue of f(B)",
        r.f_at_zero,
        r.charpoly_f_of_b_at_f_zero,
        r.f_at_zero,
        if r.charpoly_f_of_b_at_f_zero == 0.into() {
            ""
        } else {
            "not "
        }
    );
    if r.reproduces_counterexample() {
        println!("f(0) lies in the spectrum of f(B) although 0 does not lie in the spectrum of B:");
        println!("the converse of the spectral mapping inclusion fails for non-symmetric B.");
        Outcome::Pass
    } else {
        println!("the published values were NOT reproduced");
        Outcome::Fail
    }
}
