//! Running the verification suites and serializing algebras and reports.

use cayley_core::construct::split_cayley;
use cayley_core::field::FieldSpec;
use cayley_core::report::{algebra_to_json, cayley_from_json, VerificationReport};
use cayley_core::sample::SampleSpec;
use cayley_core::suite::{Subject, Suite};

fn main() -> cayley_core::Result<()> {
    let c = split_cayley(FieldSpec::prime(7)?);
    let json = algebra_to_json(&c);
    println!("algebra JSON is {} bytes; round trip exact: {}", json.len(), cayley_from_json(&json)? == c);

    let subject = Subject::new(c);
    let report = VerificationReport::run(&subject, "split", &Suite::ALL, &SampleSpec::new(42, 50));
    print!("{}", report.to_text());

    let focused = VerificationReport::run(&subject, "split", &[Suite::SplitStabilizers], &SampleSpec::default());
    println!("{}", focused.to_json());
    Ok(())
}
