//! Driving the command layer from code: JSON envelopes in, a
//! `{status, payload, diagnostics}` object out.
//!
//! ```bash
//! cargo run --example cli_envelopes
//! ```

use stablemon::cli::{parse_inputs, run_command, SessionConfig};
use stablemon::FieldSpec;

fn main() {
    let cfg = SessionConfig::default();
    let inputs = parse_inputs(
        r#"[{"omega": "x^4", "f": "[[x, 1], [0, x^2]]"}, {"omega": "x^4", "f": "[[x^2]]"}]"#,
        FieldSpec::Rationals,
        None,
    )
    .expect("valid envelopes");
    for command in ["validate", "sigma", "decompose", "coker", "is-projective"] {
        let r = run_command(&cfg, command, &inputs[..1]);
        println!("{command}: {}", serde_json::to_string(&r.payload).unwrap());
    }
    let r = run_command(&cfg, "stable-hom", &inputs);
    println!("stable-hom: exit {} {}", r.exit_code, r.render());
    let r = run_command(&cfg, "stable-hom", &inputs[..1]);
    println!("stable-hom with one input: exit {} {:?}", r.exit_code, r.diagnostics);
}
