//! Chain verdicts on GL3 and case dispatch for a pair of parabolics of GL4.

use weylchar::character::{first_strongly_generic, weyl_act, TorusCharacter};
use weylchar::ext_rules::{classify_chain, classify_conj343, twist, InductionPair, PiLabel, SupersingularToken};
use weylchar::field::ResidueField;
use weylchar::root_datum::RootDatum;
use weylchar::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = ResidueField::prime(5)?;
    let g = WeylGroup::new(RootDatum::build("gl3".parse()?)?);
    let chi = first_strongly_generic(&g, f, 1 << 20)?.ok_or("no strongly generic character")?;
    let s1 = weyl_act(&g, &g.simple_reflection(0)?, &chi)?;
    let s2s1 = weyl_act(&g, &g.simple_reflection(1)?, &s1)?;
    let w0 = weyl_act(&g, &g.longest_element(), &chi)?;
    for (name, mid, last) in [("chi, s1 chi, s2 s1 chi", &s1, &s2s1), ("chi, s1 chi, chi", &s1, &chi), ("chi, w0 chi, chi", &w0, &chi)] {
        let r = classify_chain(&g, &chi, mid, last)?;
        println!("({name}): {:?} by {}", r.verdict, r.rule);
    }

    let g4 = WeylGroup::new(RootDatum::build("gl4".parse()?)?);
    let p = g4.parabolic([0])?;
    let pi = PiLabel::Supersingular(SupersingularToken {
        name: "pi".into(),
        conj: g4.identity(),
        central: TorusCharacter::from_logs(g4.datum(), f, &[(1, 0), (2, 0), (3, 1), (4, 0)])?,
    });
    let twisted = twist(&g4, &p, &pi, 2)?;
    println!("twist of {} along a3: {}", pi.describe(), twisted.describe());
    for d in [1, 2] {
        let pair = InductionPair { p: p.clone(), p_prime: p.clone(), pi: pi.clone(), pi_prime: twisted.clone() };
        let r = classify_conj343(&g4, &pair, d)?;
        println!("d = {d}: {:?}, {}", r.case, r.prediction);
    }
    Ok(())
}
