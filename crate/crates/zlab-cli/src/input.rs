//! Reading bigraphs, quivers, initial values and CSV series.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::Value;
use zlab_core::{quiver_of, Bigraph, Quiver};
use zlab_dynamics::Trajectory;

use crate::{CliError, ErrorKind};

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::new(ErrorKind::Io, format!("{}: {e}", path.display())))
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    serde_json::from_str(&read_text(path)?).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// `{"n", "color", "red", "blue"}` with edges `[u, v, multiplicity]`.
pub fn read_bigraph(path: &Path) -> Result<Bigraph, CliError> {
    let v = read_json(path)?;
    Bigraph::from_json_value(&v).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverJson {
    n: usize,
    arrows: Vec<[usize; 3]>,
    #[serde(default)]
    bipartition: Option<Vec<u8>>,
}

/// `{"n", "arrows": [[u, v, m], ...], "bipartition"?}`, or a bigraph file (white→black red arrows).
pub fn read_quiver(path: &Path) -> Result<Quiver, CliError> {
    let v = read_json(path)?;
    let bad = |e: String| CliError::input(format!("{}: {e}", path.display()));
    if v.get("red").is_some() {
        let g = Bigraph::from_json_value(&v).map_err(|e| bad(e.to_string()))?;
        return Ok(quiver_of(&g));
    }
    let q: QuiverJson = serde_json::from_value(v).map_err(|e| bad(e.to_string()))?;
    let arrows: Vec<(usize, usize, u32)> = q
        .arrows
        .iter()
        .map(|&[u, v, m]| u32::try_from(m).map(|m| (u, v, m)).map_err(|_| bad(format!("multiplicity {m} too large"))))
        .collect::<Result<_, _>>()?;
    Quiver::new(q.n, &arrows, q.bipartition).map_err(|e| bad(e.to_string()))
}

/// Initial values given in a file.
pub enum InitValues {
    Float(Vec<f64>),
    Exact(Vec<BigRational>),
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.trim().parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(p.trim().parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// A JSON array with one entry per vertex: numbers, or strings like `"-3/2"`.
pub fn read_init(path: &Path, n: usize) -> Result<InitValues, CliError> {
    let v = read_json(path)?;
    let bad = |m: String| CliError::input(format!("{}: {m}", path.display()));
    let items = v.as_array().ok_or_else(|| bad("expected a JSON array".into()))?;
    if items.len() != n {
        return Err(bad(format!("expected {n} values, found {}", items.len())));
    }
    if items.iter().all(|x| x.is_string()) {
        let r = items
            .iter()
            .map(|x| {
                let s = x.as_str().unwrap_or_default();
                parse_rational(s).ok_or_else(|| bad(format!("not a rational number: {s:?}")))
            })
            .collect::<Result<_, _>>()?;
        return Ok(InitValues::Exact(r));
    }
    let f = items
        .iter()
        .map(|x| x.as_f64().ok_or_else(|| bad(format!("not a number: {x}"))))
        .collect::<Result<_, _>>()?;
    Ok(InitValues::Float(f))
}

#[derive(Deserialize)]
struct Row {
    t: i64,
    vertex: usize,
    value: f64,
}

/// A `t,vertex,value` series.
pub fn read_series(path: &Path) -> Result<Trajectory<f64>, CliError> {
    let text = read_text(path)?;
    parse_series(&text).map_err(|e| CliError::input(format!("{}: {}", path.display(), e.message)))
}

pub fn parse_series(text: &str) -> Result<Trajectory<f64>, CliError> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let headers = rdr.headers().map_err(|e| CliError::input(e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["t", "vertex", "value"] {
        return Err(CliError::input(format!("expected header t,vertex,value, found {}", headers.iter().collect::<Vec<_>>().join(","))));
    }
    let mut rows = Vec::new();
    for r in rdr.deserialize::<Row>() {
        let r = r.map_err(|e| CliError::input(e.to_string()))?;
        rows.push((r.t, r.vertex, r.value));
    }
    let n = rows.iter().map(|r| r.1 + 1).max().unwrap_or(0);
    Trajectory::from_records(n, rows).map_err(|e| CliError::input(e.to_string()))
}

/// Writes `t,vertex,value` rows.
pub fn write_series<V>(traj: &Trajectory<V>, fmt: impl Fn(&V) -> String) -> String
where
    V: Clone,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["t", "vertex", "value"]).expect("in-memory write");
    for (t, v, x) in traj.records() {
        w.write_record([t.to_string(), v.to_string(), fmt(&x)]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
}
