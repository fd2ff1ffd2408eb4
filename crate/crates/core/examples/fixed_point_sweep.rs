//! Exhaustive sweep: generic characters are moved by every w of length at most 5.

use weylchar::character::lemma314_sweep;
use weylchar::field::ResidueField;
use weylchar::root_datum::RootDatum;
use weylchar::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = ResidueField::prime(5)?;
    for name in ["ad-a1xa1", "ad-a2", "gsp4", "g2"] {
        let g = WeylGroup::new(RootDatum::build(name.parse()?)?);
        let s = lemma314_sweep(&g, field, 1_000_000)?;
        println!(
            "{name:>8}: {} characters, {} generic, {} pairs, {} violations",
            s.characters_swept, s.generic_characters, s.pairs_checked, s.violations
        );
        if let Some(w) = &s.witness {
            println!("          fixed at length 6 by {:?}: {}", w.w, serde_json::to_string(&w.character)?);
        }
    }
    Ok(())
}
