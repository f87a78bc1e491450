//! Over the rational division octonions every local derivation matches a
//! derivation at any two points, and stabilizer orbits are
//! (F1 + Fx + Fy)^perp.

use cayley_core::construct::division_octonions_q;
use cayley_core::derivation::DerivationSpaces;
use cayley_core::linalg::Subspace;
use cayley_core::sample::SampleSpec;
use cayley_core::suite::PairSystem;

fn main() -> cayley_core::Result<()> {
    let c = division_octonions_q();
    let spec = c.spec();
    let s = DerivationSpaces::compute(&c);
    let der = s.der.basis_maps();
    let loc = s.locder.basis_maps();

    let pairs = SampleSpec::new(3, 40).pairs(spec, 8);
    let mut solved = 0;
    for (x, y) in &pairs {
        for v in PairSystem::new(&der, x, y)?.interpolate(&loc)? {
            solved += usize::from(v.solvable && v.witness_holds(&der)?);
        }
    }
    println!("{solved} of {} interpolation systems solvable", pairs.len() * loc.len());

    let (x, y) = (c.basis_vector(1), c.basis_vector(2));
    let orbit = s.der.stabilizer(std::slice::from_ref(&x))?.eval_subspace(&y)?;
    let perp = Subspace::span(spec, 8, &[c.unit().clone(), x, y])?.orth_complement(c.form().polar_gram())?;
    println!("stabilizer orbit of b2 under d(b1) = 0: dim {}, equals complement: {}", orbit.dim(), orbit == perp);
    Ok(())
}
