use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use zlab_catalog::family::affine_code;
use zlab_catalog::{enumerate_catalog, kac_quadruple, FamilyId};
use zlab_core::Bigraph;
use zlab_dynamics::{
    growth_classify_with, log_series, numeric_evolve, symbolic_evolve, tropical_evolve, DynamicsError, GrowthConfig,
};
use zlab_dynkin::DynkinType;
use zlab_spectral::{labeling_regime, perron, Regime};
use zlab_twist::{
    conserved_check, devron_check, devron_exponents, devron_sequence, exponent_matrix, factorization_check,
    underlying_graph, TwistError,
};

use crate::args::{CatalogCmd, Cli, Command, EvolveArgs, GrowthArgs, Mode, Transform, TwistCmd};
use crate::input::{read_bigraph, read_init, read_quiver, read_series, write_series, InitValues};
use crate::{CliError, ErrorKind, Payload};

type Res = Result<Payload, CliError>;

fn dyn_err(e: DynamicsError) -> CliError {
    match e {
        DynamicsError::Budget { .. } => CliError::new(ErrorKind::Budget, e),
        _ => CliError::compute(e),
    }
}

fn twist_err(e: TwistError) -> CliError {
    match e {
        TwistError::Dynamics(d) => dyn_err(d),
        TwistError::Violated(r) => CliError {
            kind: ErrorKind::CheckFailed,
            message: format!("conservation law violated: worst residual {:e}", r.worst_residual),
            payload: serde_json::to_value(&r).ok(),
        },
        TwistError::Core(_) | TwistError::UnknownVertex(..) | TwistError::NotBipartite | TwistError::NotAffine(_) => {
            CliError::input(e)
        }
        _ => CliError::compute(e),
    }
}

pub(crate) fn dispatch(cli: &Cli, diagnostics: &mut Vec<String>) -> Res {
    match &cli.command {
        Command::Catalog(CatalogCmd::Build { family, params, dual }) => catalog_build(family, params, *dual),
        Command::Catalog(CatalogCmd::List { max_vertices }) => catalog_list(*max_vertices, cli.jobs),
        Command::Classify(a) => classify(&read_bigraph(&a.input)?),
        Command::Evolve(a) => evolve(a, diagnostics),
        Command::Growth(a) => growth(a),
        Command::Twist(t) => twist(t),
        Command::Dual(a) => Ok(Payload::Json(read_bigraph(&a.input)?.dual().to_json_value())),
        Command::Isocheck(a) => {
            let g = read_bigraph(&a.inputs[0])?;
            let h = read_bigraph(&a.inputs[1])?;
            let map = g.isomorphism(&h);
            Ok(Payload::Json(json!({ "isomorphic": map.is_some(), "map": map })))
        }
    }
}

fn parse_params(params: &[String]) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for p in params {
        if let Ok(x) = p.trim().parse::<usize>() {
            out.push(x);
            continue;
        }
        let ty: DynkinType = p.parse().map_err(CliError::input)?;
        let code = affine_code(ty).ok_or_else(|| CliError::input(format!("{ty} is not an affine type")))?;
        out.extend(code);
    }
    Ok(out)
}

fn parse_family(s: &str, params: &[String], dual: bool) -> Result<FamilyId, CliError> {
    let params = parse_params(params)?;
    let t = s.trim().trim_start_matches('#');
    let (num, star) = match t.strip_suffix('*') {
        Some(rest) => (rest, true),
        None => (t, false),
    };
    let id: u8 = num.parse().map_err(|_| CliError::input(format!("bad family {s:?}")))?;
    FamilyId::with_dual(id, params, dual || star).map_err(CliError::input)
}

fn catalog_build(family: &str, params: &[String], dual: bool) -> Res {
    let f = parse_family(family, params, dual)?;
    let g = f.build().map_err(CliError::compute)?;
    Ok(Payload::Json(g.to_json_value()))
}

fn manifest_item(f: &FamilyId, g: &Bigraph) -> Value {
    let name = f.info().map(|i| i.name).unwrap_or_default();
    let mut item = json!({
        "family": f.to_string(),
        "id": f.id,
        "params": f.params,
        "dual": f.dual,
        "name": name,
        "n": g.n(),
    });
    match kac_quadruple(g) {
        Ok(k) => item["kac_quadruple"] = json!(k),
        Err(e) => item["error"] = json!(e.to_string()),
    }
    item
}

fn catalog_list(max_vertices: usize, jobs: usize) -> Res {
    let items = enumerate_catalog(max_vertices).map_err(CliError::compute)?;
    let jobs = jobs.max(1).min(items.len().max(1));
    let chunk = items.len().div_ceil(jobs).max(1);
    let rows: Vec<Value> = std::thread::scope(|s| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|(f, g)| manifest_item(f, g)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("manifest worker")).collect()
    });
    let exceptional = items.iter().filter(|(f, _)| f.is_exceptional()).count();
    Ok(Payload::Json(json!({
        "max_vertices": max_vertices,
        "count": rows.len(),
        "exceptional": exceptional,
        "items": rows,
    })))
}

fn names(ts: &[DynkinType]) -> Vec<String> {
    ts.iter().map(|t| t.to_string()).collect()
}

fn classify(g: &Bigraph) -> Res {
    if !g.is_connected() {
        return Err(CliError::input("bigraph is empty or disconnected"));
    }
    if !g.is_recurrent() {
        return Ok(Payload::Json(json!({ "n": g.n(), "recurrent": false, "regime": Value::Null })));
    }
    let v = labeling_regime(g).map_err(CliError::compute)?;
    let p = perron(g).map_err(CliError::compute)?;
    let kac = if v.regime == Regime::AffineAffine { Some(kac_quadruple(g).map_err(CliError::compute)?) } else { None };
    Ok(Payload::Json(json!({
        "n": g.n(),
        "recurrent": true,
        "regime": v.regime,
        "red_types": names(&v.red_types),
        "blue_types": names(&v.blue_types),
        "labeling": v.labeling,
        "perron": { "mu_red": p.mu_red, "mu_blue": p.mu_blue, "eigenvector": p.eigenvector },
        "kac_quadruple": kac,
    })))
}

fn float(x: &f64) -> String {
    format!("{x:?}")
}

fn evolve(a: &EvolveArgs, diagnostics: &mut Vec<String>) -> Res {
    let g = read_bigraph(&a.input)?;
    let n = g.n();
    if a.mode == Mode::Symbolic {
        if a.init != "ones" {
            diagnostics.push(format!("--init {} ignored: symbolic runs start from the seed variables", a.init));
        }
        let traj = symbolic_evolve(&g, a.steps).map_err(dyn_err)?;
        let values: Vec<Value> = traj
            .records()
            .into_iter()
            .map(|(t, v, p)| json!({ "t": t, "vertex": v, "terms": p.term_count(), "value": p }))
            .collect();
        return Ok(Payload::Json(json!({ "n": n, "steps": a.steps, "parity": traj.parity, "values": values })));
    }
    let init = match a.init.as_str() {
        "ones" => InitValues::Float(vec![1.0; n]),
        "perron" => InitValues::Float(perron(&g).map_err(CliError::compute)?.eigenvector),
        "random" => {
            let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
            InitValues::Float((0..n).map(|_| rng.gen_range(-1.0f64..=1.0).exp()).collect())
        }
        path => read_init(std::path::Path::new(path), n)?,
    };
    let csv = match (a.mode, init) {
        (Mode::Numeric, InitValues::Float(x)) => write_series(&numeric_evolve(&g, &x, a.steps).map_err(dyn_err)?, float),
        (Mode::Numeric, InitValues::Exact(x)) => {
            let x: Vec<f64> = x.iter().map(|r| r.to_f64().unwrap_or(f64::NAN)).collect();
            write_series(&numeric_evolve(&g, &x, a.steps).map_err(dyn_err)?, float)
        }
        (Mode::Tropical, InitValues::Float(x)) => write_series(&tropical_evolve(&g, &x, a.steps).map_err(dyn_err)?, float),
        (Mode::Tropical, InitValues::Exact(x)) => {
            write_series(&tropical_evolve::<BigRational>(&g, &x, a.steps).map_err(dyn_err)?, |r| r.to_string())
        }
        (Mode::Symbolic, _) => unreachable!("handled above"),
    };
    Ok(Payload::Csv(csv))
}

fn growth(a: &GrowthArgs) -> Res {
    let mut series = read_series(&a.input)?;
    if a.transform == Transform::Ln {
        series = log_series(&series);
    }
    let cfg = GrowthConfig {
        window_fraction: a.window_fraction,
        sd_threshold: a.sd_threshold,
        revisit_tol: a.tol,
        min_len: a.min_len,
    };
    let v = growth_classify_with(&series, &cfg).map_err(dyn_err)?;
    Ok(Payload::Json(json!(v)))
}

fn integer(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(i) => json!(i),
        None => json!(x.to_string()),
    }
}

fn twist(t: &TwistCmd) -> Res {
    match t {
        TwistCmd::Verify { quiver, seq } => {
            let q = read_quiver(quiver)?;
            let ok = factorization_check(&q, seq).map_err(twist_err)?;
            let a = exponent_matrix(&underlying_graph(&q), seq).map_err(twist_err)?;
            let rows: Vec<Vec<Value>> = a.entries.iter().map(|r| r.iter().map(integer).collect()).collect();
            let doc = json!({
                "n": q.n(),
                "sequence": seq,
                "factorization": ok,
                "exponents": rows,
                "nonnegative": a.is_nonnegative(),
            });
            check(ok, "τ-values do not factor as x·∏X^a", doc)
        }
        TwistCmd::Devron { quiver } => {
            let q = read_quiver(quiver)?;
            let seq = devron_sequence(&q).map_err(twist_err)?;
            let ex: Vec<Value> = devron_exponents(&q)
                .map_err(twist_err)?
                .into_iter()
                .map(|(v, a)| json!({ "vertex": v, "exponent": a }))
                .collect();
            let ok = devron_check(&q).map_err(twist_err)?;
            check(ok, "Devron property fails", json!({ "n": q.n(), "sequence": seq, "exponents": ex, "devron": ok }))
        }
        TwistCmd::Conserved { ty, trials, seed, tol } => {
            let parsed: DynkinType = ty.parse().map_err(CliError::input)?;
            let affine = if parsed.is_finite() { parsed.affine().expect("finite types extend") } else { parsed };
            let mut doc = match conserved_check(affine, *trials, *seed, *tol) {
                Ok(r) => json!(r),
                Err(e) => {
                    let mut e = twist_err(e);
                    if let Some(p) = e.payload.as_mut() {
                        p["dynkin"] = json!(affine.to_string());
                    }
                    return Err(e);
                }
            };
            doc["dynkin"] = json!(affine.to_string());
            Ok(Payload::Json(doc))
        }
    }
}

fn check(ok: bool, msg: &str, doc: Value) -> Res {
    if ok {
        Ok(Payload::Json(doc))
    } else {
        Err(CliError { kind: ErrorKind::CheckFailed, message: msg.to_string(), payload: Some(doc) })
    }
}
