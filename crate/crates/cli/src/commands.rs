use std::fs;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use exdp::dplattice::{DPLattice, LatticeVector};
use exdp::ellmoduli::{
    construct_marked_dp, effective_roots, recover_psi, subgroup_psi_basis, EcPoint,
    EllipticCurve, PsiHom,
};
use exdp::gmweights::{h0_dimension, looijenga_weights, presentation, scan_e, z_weights};
use exdp::instability::{classify_mode, descend, Cocharacter, SubsetFilter};
use exdp::localsing::{local_algebra_dims, milnor_number, LocalPoly, Milnor, PrimeField, RationalField};
use exdp::rootdata::cartan_isomorphism;
use exdp::{Error, RootSystem, TypeTag};

use crate::expected::{expand, expected};
use crate::report::VerificationReport;
use crate::{Cli, CocharCommand, Command, EnumArgs, FilterArg, MarkedDpArgs};

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub json: Value,
    /// `false` maps to exit code 1.
    pub ok: bool,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, ok: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    /// Exit code 2.
    Input(String),
    /// Exit code 1.
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => CliError::Failed(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Tables { tag } => {
            let types = tag.map_or(TypeTag::ALL.to_vec(), |t| vec![t]);
            Ok(tables_outcome(&tables(&types)))
        }
        Command::Lines(args) => lines(args),
        Command::Roots { args, system } => roots(args, *system),
        Command::Cochar { command } => cochar(command),
        Command::Ci { tag } => ci(*tag),
        Command::MarkedDp(args) => marked_dp(args, cli.seed),
        Command::Milnor {
            poly,
            p,
            cap,
            rational,
        } => milnor(poly, *p, *cap, *rational),
        Command::Nef {
            tag,
            class,
            with_roots,
        } => nef(*tag, class, *with_roots),
    }
}

/// All table checks for the given types, types processed in parallel and
/// merged in the order given.
pub fn tables(types: &[TypeTag]) -> Vec<VerificationReport> {
    types
        .par_iter()
        .map(|&t| table_checks(t))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

pub fn tables_outcome(reports: &[VerificationReport]) -> Outcome {
    let failed = reports.iter().filter(|r| !r.passed()).count();
    Outcome {
        json: json!({
            "reports": to_json(&reports),
            "passed": reports.len() - failed,
            "failed": failed,
        }),
        ok: failed == 0,
    }
}

fn computed<T: serde::Serialize>(r: exdp::Result<T>) -> Value {
    match r {
        Ok(v) => to_json(&v),
        Err(e) => Value::String(format!("error: {e}")),
    }
}

fn table_checks(t: TypeTag) -> Vec<VerificationReport> {
    let rs = RootSystem::build(t);
    let exp = expected(t);
    let zw = z_weights(&rs);
    let pres = presentation(&rs);
    vec![
        VerificationReport::compare("m-vector", t, json!(exp.m_vector), computed(rs.m_vector())),
        VerificationReport::compare(
            "z-weights",
            t,
            json!(expand(exp.z_weights)),
            computed(zw.clone().map(|z| z.weights.to_vec())),
        ),
        VerificationReport::compare(
            "looijenga-weights",
            t,
            json!(expand(exp.looijenga_weights)),
            json!(looijenga_weights(&rs).to_vec()),
        ),
        VerificationReport::compare(
            "ci-presentation",
            t,
            json!({"relations": expand(exp.ci_relations), "ambient": expand(exp.ci_ambient)}),
            computed(pres.map(|p| {
                json!({"relations": p.relations.to_vec(), "ambient": p.ambient.to_vec()})
            })),
        ),
        VerificationReport::compare("h0-dimension", t, json!(exp.h0_dimension), computed(h0_dimension(&rs))),
        VerificationReport::compare(
            "z-weight-count",
            t,
            json!(exp.z_weight_count),
            computed(zw.map(|z| z.weights.len())),
        ),
    ]
}

fn lattice(t: TypeTag) -> Result<DPLattice, CliError> {
    Ok(DPLattice::build(&RootSystem::build(t))?)
}

fn lines(args: &EnumArgs) -> Result<Outcome, CliError> {
    let lat = lattice(args.tag)?;
    let e = lat.enumerate_lines()?;
    if args.count_only {
        return Ok(Outcome::ok(json!({"count": e.vectors.len()})));
    }
    let (line, profile) = lat.dominant_line()?;
    Ok(Outcome::ok(json!({
        "type": args.tag,
        "count": e.vectors.len(),
        "lines": e.vectors,
        "certificate": e.certificate,
        "dominant_line": {"line": line, "profile": profile},
    })))
}

fn roots(args: &EnumArgs, system: bool) -> Result<Outcome, CliError> {
    let rs = RootSystem::build(args.tag);
    let lat = DPLattice::build(&rs)?;
    let e = lat.enumerate_roots()?;
    if args.count_only {
        return Ok(Outcome::ok(json!({"count": e.vectors.len()})));
    }
    let mut out = json!({
        "type": args.tag,
        "count": e.vectors.len(),
        "roots": e.vectors,
        "certificate": e.certificate,
    });
    let mut ok = true;
    if system {
        let simple = lat.simple_system(&e.vectors);
        let cartan = lat.cartan_of(&simple);
        let matches = cartan_isomorphism(&cartan, rs.cartan()).is_some();
        ok = matches;
        out["simple_system"] = to_json(&simple);
        out["cartan"] = to_json(&cartan);
        out["matches_type"] = json!(matches);
    }
    Ok(Outcome { json: out, ok })
}

fn parse_ints(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Input(format!("bad integer '{t}'")))
        })
        .collect()
}

fn cochar(cmd: &CocharCommand) -> Result<Outcome, CliError> {
    match cmd {
        CocharCommand::Classify {
            tag,
            mode,
            filter,
            ledger,
        } => {
            let rs = RootSystem::build(*tag);
            let f = match filter {
                FilterArg::All => SubsetFilter::AllSubsets,
                FilterArg::Pairs => SubsetFilter::SingletonsAndPairs,
            };
            let c = classify_mode(&rs, *mode, f)?;
            let mut out = json!({
                "type": tag,
                "mode": mode,
                "filter": c.filter,
                "bound": c.bound,
                "require_node5": c.require_node5,
                "subsets_tested": c.subsets_tested,
                "candidates": c.ledger.len(),
                "cocharacters": c.cocharacters,
            });
            if *ledger {
                out["ledger"] = to_json(&c.ledger);
            }
            Ok(Outcome::ok(out))
        }
        CocharCommand::Descend { tag, v } => {
            let rs = RootSystem::build(*tag);
            let v = parse_ints(v)?;
            let d = descend(&rs, &Cocharacter(v.clone()))?;
            let before = rs.pair(&v, rs.two_rho())?;
            let after = rs.pair(d.result.coeffs(), rs.two_rho())?;
            Ok(Outcome {
                ok: before - after == 2 * d.trace.len() as i64,
                json: json!({
                    "type": tag,
                    "start": v,
                    "result": d.result,
                    "steps": d.trace.len(),
                    "trace": d.trace,
                    "pair_2rho_start": before,
                    "pair_2rho_result": after,
                }),
            })
        }
    }
}

fn ci(t: TypeTag) -> Result<Outcome, CliError> {
    let rs = RootSystem::build(t);
    let p = presentation(&rs)?;
    Ok(Outcome::ok(json!({
        "type": t,
        "relations": p.relations.to_vec(),
        "ambient": p.ambient.to_vec(),
        "e": p.e,
        "multiplicity": p.multiplicity(),
        "presentation": p.to_string(),
        "feasible_e": scan_e(&rs)?,
    })))
}

fn read_psi(path: &std::path::Path) -> Result<Vec<EcPoint>, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let list = match v {
        Value::Object(mut o) => o
            .remove("delta_images")
            .ok_or_else(|| CliError::Input("missing 'delta_images'".into()))?,
        other => other,
    };
    serde_json::from_value(list).map_err(|e| CliError::Input(format!("bad point list: {e}")))
}

fn curve_json(c: &EllipticCurve) -> Value {
    json!({"p": c.p(), "a": c.a(), "b": c.b()})
}

fn marked_dp(args: &MarkedDpArgs, seed: u64) -> Result<Outcome, CliError> {
    let curve = EllipticCurve::new(args.p, args.a, args.b)?;
    if args.roundtrip {
        let types = args.tag.map_or(TypeTag::ALL.to_vec(), |t| vec![t]);
        return roundtrip(curve, &types, args.trials, seed);
    }
    let t = args
        .tag
        .ok_or_else(|| CliError::Input("--type is required without --roundtrip".into()))?;
    let lat = lattice(t)?;
    let psi = match &args.psi {
        Some(path) => PsiHom::new(curve, t, read_psi(path)?)?,
        None => PsiHom::trivial(curve, t),
    };
    let m = construct_marked_dp(&psi, &lat)?;
    let back = recover_psi(&m)?;
    let eff = effective_roots(&psi, &lat)?;
    let simple = lat.simple_system(&eff);
    let kappa = psi.eval(lat.kappa())?;
    let same = back == psi;
    Ok(Outcome {
        ok: same,
        json: json!({
            "type": t,
            "curve": curve_json(&curve),
            "psi": psi.delta_images,
            "points": m.points,
            "hyperplane_point": m.hyperplane,
            "generic": m.is_generic(),
            "recovered": back.delta_images,
            "roundtrip": same,
            "kappa_image": {"point": kappa.pt, "degree": kappa.deg},
            "effective_roots": eff,
            "effective_root_count": eff.len(),
            "effective_simple_system": simple,
            "effective_cartan": lat.cartan_of(&simple),
        }),
    })
}

/// Runs `trials` random `ψ'` per type, then the `ψ' = 0` configuration check.
pub fn roundtrip(
    curve: EllipticCurve,
    types: &[TypeTag],
    trials: usize,
    seed: u64,
) -> Result<Outcome, CliError> {
    let mut results = Vec::new();
    let mut ok = true;
    for &t in types {
        let rs = RootSystem::build(t);
        let lat = DPLattice::build(&rs)?;
        let q = subgroup_psi_basis(&lat)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (t.rank() as u64) << 32);
        let mut failures = 0;
        for _ in 0..trials {
            let psi = PsiHom::random(curve, &lat, &q, &mut rng)?;
            if recover_psi(&construct_marked_dp(&psi, &lat)?)? != psi {
                failures += 1;
            }
        }
        let zero = effective_roots(&PsiHom::trivial(curve, t), &lat)?;
        let all = lat.enumerate_roots()?.vectors;
        let simple = lat.simple_system(&zero);
        let cartan_match = cartan_isomorphism(&lat.cartan_of(&simple), rs.cartan()).is_some();
        let full = zero == all;
        ok &= failures == 0 && full && cartan_match;
        results.push(json!({
            "type": t,
            "trials": trials,
            "failures": failures,
            "trivial_effective_roots": zero.len(),
            "trivial_is_full_root_system": full,
            "trivial_cartan_matches": cartan_match,
        }));
    }
    Ok(Outcome {
        ok,
        json: json!({"curve": curve_json(&curve), "seed": seed, "results": results, "ok": ok}),
    })
}

fn milnor(poly: &str, p: u64, cap: usize, rational: bool) -> Result<Outcome, CliError> {
    let f: LocalPoly = poly.parse()?;
    let (m, dims, field) = if rational {
        (milnor_number(&f, cap, &RationalField)?, local_algebra_dims(&f, cap, &RationalField)?, "Q".to_string())
    } else {
        let fp = PrimeField::new(p)?;
        (milnor_number(&f, cap, &fp)?, local_algebra_dims(&f, cap, &fp)?, format!("F_{p}"))
    };
    let base = json!({"poly": f.to_string(), "field": field, "cap": cap, "dims": dims});
    Ok(match m {
        Milnor::Isolated { mu, stabilized_at } => {
            let mut out = base;
            out["mu"] = json!(mu);
            out["stabilized_at"] = json!(stabilized_at);
            Outcome::ok(out)
        }
        Milnor::NotStabilized { .. } => {
            let mut out = base;
            out["mu"] = Value::Null;
            out["stabilized"] = json!(false);
            Outcome { json: out, ok: false }
        }
    })
}

fn nef(t: TypeTag, class: &str, with_roots: bool) -> Result<Outcome, CliError> {
    let lat = lattice(t)?;
    let x: LatticeVector = class.parse()?;
    let eff = if with_roots {
        lat.enumerate_roots()?.vectors
    } else {
        Vec::new()
    };
    let r = lat.is_nef(&x, &eff)?;
    Ok(Outcome::ok(json!({
        "type": t,
        "class": x,
        "self_intersection": lat.dot(&x, &x),
        "degree": lat.dot(&x, lat.kappa()),
        "nef": r.nef,
        "nef_weak": r.nef_weak,
        "boundary_lines": r.boundary_lines,
        "negative_lines": r.negative_lines,
        "negative_effective_roots": r.negative_effective_roots,
    })))
}
