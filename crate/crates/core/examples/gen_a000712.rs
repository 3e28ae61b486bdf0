//! Regenerates `data/a000712.txt` from the two-kinds enumeration.
//!
//! cargo run --release --example gen_a000712 > crates/core/data/a000712.txt

use partition_magnitudes::oracle::count_two_kinds;

const TERMS: usize = 32;

fn main() {
    println!("# A000712: partitions of n into parts of two kinds.");
    println!("# Each value counted by walking every (plain, marked) pair with");
    println!("# oracle::count_two_kinds; not copied from an external table.");
    println!("# Format: index value");
    for n in 0..TERMS {
        println!("{n} {}", count_two_kinds(n));
    }
}
