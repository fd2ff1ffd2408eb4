//! Reduced words, Bruhat intervals and Kostant representatives in type B2.

use weylchar::root_datum::RootDatum;
use weylchar::weyl::WeylGroup;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = WeylGroup::new(RootDatum::build("sc-b2".parse()?)?);
    let w0 = g.longest_element();
    println!("w0 = {} (length {})", w0.label(), w0.length());
    for word in g.reduced_words(&w0) {
        let word: Vec<usize> = word.iter().map(|i| i + 1).collect();
        println!("  reduced word {word:?}");
    }

    let w = g.parse_word("s1s2s1")?;
    let below: Vec<String> = g.bruhat_interval(&w).iter().map(|v| v.label()).collect();
    println!("[1, {}] = {}", w.label(), below.join(" "));

    let p = g.parabolic([0])?;
    let reps: Vec<String> = g.kostant_representatives(&p)?.iter().map(|v| v.label()).collect();
    println!("Kostant representatives for L = <s1>: {}", reps.join(" "));
    for v in g.elements()? {
        let (rep, wl) = g.kostant_decompose(v, &p);
        println!("  {:>12} = {} . {}", v.label(), rep.label(), wl.label());
    }
    Ok(())
}
