//! Graded pieces for a maximal parabolic of GL3 and a regular character.

use weylchar::character::TorusCharacter;
use weylchar::field::ResidueField;
use weylchar::ord_skeleton::conjecture15_report;
use weylchar::root_datum::RootDatum;
use weylchar::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = WeylGroup::new(RootDatum::build("gl3".parse()?)?);
    let f = ResidueField::prime(5)?;
    let chi = TorusCharacter::from_logs(g.datum(), f, &[(1, 0), (2, 1), (3, 2)])?;
    let p = g.parabolic([0])?;
    for d in [1, 2] {
        println!("d = {d}");
        for row in conjecture15_report(&g, &p, &chi, d)? {
            println!("  degree {} {:?}", row.degree, row.status);
            for piece in row.pieces {
                println!(
                    "    w = {:?} alpha = {:?} -> {}",
                    piece.kostant_rep,
                    piece.alpha_tilde,
                    serde_json::to_string(&piece.output_character)?
                );
            }
        }
    }
    Ok(())
}
