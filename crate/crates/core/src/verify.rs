//! Named verification suites, as run by the command line.

use crate::error::{Error, Result};
use crate::hadamard_aut::{m_submodule_check, submodule_closure_order, verify_prop1, verify_prop2};
use crate::report::Report;

pub const SUITES: [&str; 6] = ["prop1", "prop2", "theorem", "codes", "outer", "submodule"];

pub fn verify_submodule() -> Report {
    let mut r = Report::new("submodule");
    r.check(
        "constant",
        "(ω,ω,ω,ω,ω,ω) generates a module of order 3",
        3,
        submodule_closure_order([1; 6]),
    );
    r.check(
        "generic",
        "(1,1,1,1,ω,ω̄) generates M",
        243,
        submodule_closure_order([0, 0, 0, 0, 1, 2]),
    );
    r.check(
        "zero",
        "the identity vector generates 1",
        1,
        submodule_closure_order([0; 6]),
    );
    r.check(
        "all",
        "every non-constant element generates M",
        true,
        m_submodule_check(),
    );
    r
}

pub fn run_suite(name: &str, seed: u64) -> Result<Report> {
    Ok(match name {
        "prop1" => verify_prop1(),
        "prop2" => verify_prop2(),
        "theorem" => crate::splitquat_rep::verify_theorem(seed),
        "codes" => crate::codes::verify_codes(),
        "outer" => crate::outer_s6::verify_outer(),
        "submodule" => verify_submodule(),
        _ => {
            return Err(Error::Parse {
                text: name.to_string(),
                reason: format!("unknown suite; expected one of {}", SUITES.join(", ")),
            })
        }
    })
}
