//! A generic character of the G2 torus that is fixed by the longest element.

use weylchar::character::{build_example_313, genericity, stabilizer, CharSpec};
use weylchar::root_datum::RootDatum;
use weylchar::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p: u64 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let g = WeylGroup::new(RootDatum::build("g2".parse()?)?);
    let chi = build_example_313(p)?;
    println!("chi = {chi}");
    println!("json: {}", serde_json::to_string(&CharSpec::from_character(&chi))?);
    println!("genericity: {}", genericity(&g, &chi)?);
    let stab: Vec<String> = stabilizer(&g, &chi)?.iter().map(|w| w.label()).collect();
    println!("stabilizer: {}", stab.join(" "));
    Ok(())
}
