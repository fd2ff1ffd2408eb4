//! The A3 lattice for `Psi = Phi+`, printed as DOT, with its subrepresentation count.

use std::collections::BTreeSet;

use weylchar::bh_lattice::{build_lattice, hasse_dot, subrep_lattice};
use weylchar::character::first_strongly_generic;
use weylchar::closed_roots::ClosedRootSubset;
use weylchar::field::ResidueField;
use weylchar::root_datum::RootDatum;
use weylchar::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = WeylGroup::new(RootDatum::build("gl4".parse()?)?);
    let chi = first_strongly_generic(&g, ResidueField::prime(5)?, 1 << 20)?.ok_or("no strongly generic character")?;
    let lat = build_lattice(&g, &chi, &ClosedRootSubset::all(g.datum()), &g.identity())?;
    for c in &lat.constituents {
        println!("{} socle degree {} label {}", c.name(), c.socle_degree(), c.label);
    }
    print!("{}", lat.to_dot());
    let i: BTreeSet<usize> = [0, 2].into_iter().collect();
    println!("subrepresentations for I = {{a1,a3}}: {}", subrep_lattice(&i, 5)?.len());
    print!("{}", hasse_dot(&i, 5)?);
    Ok(())
}
