//! Prints the frozen Baues sign table for simplices up to dimension 7.

use freehedra::hga::{baues_sign, sign_table};

fn main() {
    println!("{}", serde_json::to_string_pretty(&sign_table(7, &baues_sign)).unwrap());
}
