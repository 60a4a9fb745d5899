//! Seeded random verification runs, fanned out over a thread pool and
//! reported in instance order.

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Value};

use reciprocity_core::curve::{verify_gf_global, verify_residue_theorem, verify_wrl, RationalFunction};
use reciprocity_core::random::{factored_rational, field_element, rational_function, rng_from_seed};
use reciprocity_core::algebra::FieldKind;
use reciprocity_core::{Field, Matrix};

use crate::cli::Output;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Wrl,
    Residues,
    Gf,
    All,
}

impl Check {
    fn names(self) -> &'static [&'static str] {
        match self {
            Check::Wrl => &["wrl"],
            Check::Residues => &["residues"],
            Check::Gf => &["gf"],
            Check::All => &["wrl", "residues", "gf"],
        }
    }
}

struct Instance {
    index: usize,
    f: String,
    g: String,
    outcomes: Vec<(&'static str, Result<bool, String>)>,
}

/// Independent seed for instance `i` (splitmix64 of the mixed input).
pub fn instance_seed(seed: u64, i: usize) -> u64 {
    let mut z = seed ^ (i as u64).wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn run_instance(k: &Field, seed: u64, index: usize, check: Check) -> Instance {
    let mut rng = rng_from_seed(instance_seed(seed, index));
    let (f, g): (RationalFunction, RationalFunction) = match k.kind() {
        FieldKind::Rationals => (factored_rational(&mut rng), factored_rational(&mut rng)),
        _ => (rational_function(k, &mut rng), rational_function(k, &mut rng)),
    };
    let s = Matrix::from_fn(k, 2, 2, |_, _| field_element(k, &mut rng));
    let t = Matrix::from_fn(k, 2, 2, |_, _| field_element(k, &mut rng));
    let outcomes = check
        .names()
        .iter()
        .map(|&name| {
            let report = match name {
                "wrl" => verify_wrl(&f, &g),
                "residues" => verify_residue_theorem(&f, &g),
                _ => verify_gf_global(&s, &t, &f, &g),
            };
            (name, report.map(|r| r.verified).map_err(|e| e.to_string()))
        })
        .collect();
    Instance { index, f: f.to_string(), g: g.to_string(), outcomes }
}

pub fn sweep(k: &Field, count: usize, seed: u64, check: Check) -> Output {
    let instances: Vec<Instance> = (0..count).into_par_iter().map(|i| run_instance(k, seed, i, check)).collect();
    let mut text = format!("sweep over {k}: {count} instances, seed {seed:#x}\n");
    let mut summary = serde_json::Map::new();
    let mut verified = true;
    for &name in check.names() {
        let passed = instances.iter().filter(|inst| inst.outcomes.iter().any(|(n, o)| *n == name && *o == Ok(true))).count();
        verified &= passed == count;
        text += &format!("{name:<9} {passed}/{count} verified\n");
        summary.insert(name.into(), json!({"passed": passed, "total": count}));
    }
    for inst in &instances {
        for (name, outcome) in &inst.outcomes {
            match outcome {
                Ok(true) => {}
                Ok(false) => text += &format!("instance {}: {name} VIOLATED for f = {}, g = {}\n", inst.index, inst.f, inst.g),
                Err(e) => text += &format!("instance {}: {name} failed ({e}) for f = {}, g = {}\n", inst.index, inst.f, inst.g),
            }
        }
    }
    let list: Vec<Value> = instances
        .iter()
        .map(|inst| {
            let mut v = json!({"index": inst.index, "f": inst.f, "g": inst.g});
            for (name, outcome) in &inst.outcomes {
                v[*name] = match outcome {
                    Ok(b) => json!(b),
                    Err(e) => json!({"error": e}),
                };
            }
            v
        })
        .collect();
    let input = json!({"command": "sweep", "field": k.to_string(), "count": count, "seed": seed, "check": check.names()});
    let json = json!({"input": input, "summary": summary, "instances": list, "verified": verified});
    Output { text, json, verified }
}
