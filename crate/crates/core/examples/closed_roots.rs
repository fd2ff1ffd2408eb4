//! Closed subsets of the positive roots of A2 and their sets `W_Psi`.

use weylchar::closed_roots::{enumerate_closed_subsets, w_psi_report};
use weylchar::root_datum::RootDatum;
use weylchar::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = WeylGroup::new(RootDatum::build("sc-a2".parse()?)?);
    for psi in enumerate_closed_subsets(g.datum(), 12)? {
        println!("Psi = {:?}", psi.simple_coords(g.datum()));
        for e in w_psi_report(&g, &psi)? {
            println!("  w = {:?}  Delta cap w(Psi) = {:?}  I in {:?}", e.w_psi, e.delta_cap, e.orthogonal_subsets);
        }
    }
    Ok(())
}
