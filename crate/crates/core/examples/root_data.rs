//! Prints the basic invariants of a few root data.
//!
//! `cargo run --example root_data -- gsp4`

use weylchar::root_datum::{Kind, RootDatum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names = if names.is_empty() { vec!["gl3".into(), "gsp4".into(), "g2".into()] } else { names };
    for name in names {
        let kind: Kind = name.parse()?;
        let d = RootDatum::build(kind)?;
        println!("{} (type {}, rank {})", d.kind(), d.cartan_type(), d.rank());
        for row in d.cartan_matrix() {
            println!("  {row:?}");
        }
        for r in d.positive_roots() {
            println!("  root {:?} = {}  coroot {}", r.simple_coords, r.coords, r.coroot);
        }
        match d.theta() {
            Ok(theta) => println!("  theta = {theta}"),
            Err(e) => println!("  theta: {e}"),
        }
        println!("  |W| = {}, connected center: {}", d.weyl_order(), d.has_connected_center());
    }
    Ok(())
}
