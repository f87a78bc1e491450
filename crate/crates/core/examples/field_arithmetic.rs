//! Exact scalars: rationals, prime fields, text encoding, square roots.

use cayley_core::field::FieldSpec;

fn main() -> cayley_core::Result<()> {
    let q = FieldSpec::Rational;
    let sum = q.fraction(1, 2)? + q.fraction(1, 3)?;
    println!("in Q: 1/2 + 1/3 = {sum}");

    let gf7: FieldSpec = "gf:7".parse()?;
    let three = gf7.from_i64(3);
    println!("in {gf7}: 3^-1 = {}, -3 = {}, 2/3 = {}", three.inv()?, -&three, gf7.from_i64(2) / &three);

    // fractions and negatives reduce into the residue field
    println!("in {gf7}: \"-1/2\" parses to {}", gf7.parse_element("-1/2")?);

    for p in [2u64, 3, 5] {
        let f = FieldSpec::prime(p)?;
        let squares: Vec<String> = f.elements()?.filter(|x| x.sqrt().is_some()).map(|x| x.to_string()).collect();
        println!("characteristic {}: squares {{{}}}", f.characteristic(), squares.join(", "));
    }
    println!("sqrt(9/4) in Q = {:?}", q.fraction(9, 4)?.sqrt().map(|r| r.to_string()));
    Ok(())
}
