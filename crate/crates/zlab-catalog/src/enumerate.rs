use zlab_core::Bigraph;

use crate::error::Result;
use crate::family::{affine_from_code, FamilyId, FAMILIES};
use crate::listing::vertex_count;

/// Candidate parameter tuples for a family, loosely bounded by `max` vertices.
fn candidates(id: u8, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let arity = FAMILIES[id as usize - 1].params.len();
    match id {
        1 => {
            for t1 in 1..=3 {
                for i1 in 1..=max {
                    for t2 in 1..=3 {
                        for i2 in 1..=max {
                            let (Some(s), Some(t)) = (affine_from_code(t1, i1), affine_from_code(t2, i2)) else {
                                continue;
                            };
                            if s.vertex_count() * t.vertex_count() <= max {
                                out.push(vec![t1, i1, t2, i2]);
                            }
                        }
                    }
                }
            }
        }
        2 => {
            for t in 1..=3 {
                for i in 1..=max {
                    if affine_from_code(t, i).is_some_and(|x| 2 * x.vertex_count() <= max) {
                        out.push(vec![t, i]);
                    }
                }
            }
        }
        3 => {
            for r in 2..=max {
                for p in 1..=r / 2 {
                    for n in 1..=max / r {
                        for d in 1..=max / (r * n) {
                            out.push(vec![r, p, n, d]);
                        }
                    }
                }
            }
        }
        17 => {
            for r in 1..=max {
                for p in 0..=r / 2 {
                    for n in 2..=max {
                        for d in 2..=max {
                            if 2 * r * d * (n - 1) > max {
                                break;
                            }
                            out.push(vec![r, p, n, d]);
                        }
                    }
                }
            }
        }
        18 => {
            for r in 2..=max {
                for p in 1..=r / 2 {
                    for n in 2..=max {
                        if 2 * r * (n - 1) > max {
                            break;
                        }
                        out.push(vec![r, p, n]);
                    }
                }
            }
        }
        _ if arity == 0 => out.push(Vec::new()),
        _ if arity == 1 => out.extend((1..=max).map(|n| vec![n])),
        _ => {
            for m in 1..=max {
                for n in 1..=max {
                    out.push(vec![m, n]);
                }
            }
        }
    }
    out
}

/// Valid base instances of one family with at most `max_vertices` vertices,
/// one per dual pair for self-dual families, in lexicographic parameter order.
pub fn family_instances(id: u8, max_vertices: usize) -> Result<Vec<FamilyId>> {
    let mut out = Vec::new();
    for params in candidates(id, max_vertices) {
        let f = FamilyId { id, params, dual: false };
        if f.validate().is_err() || vertex_count(&f)? > max_vertices {
            continue;
        }
        if f.info()?.self_dual && f.dual_family()?.params < f.params {
            continue;
        }
        out.push(f);
    }
    out.sort();
    Ok(out)
}

/// Every listed bigraph with at most `max_vertices` vertices, by family then parameters.
pub fn enumerate_catalog(max_vertices: usize) -> Result<Vec<(FamilyId, Bigraph)>> {
    let mut out = Vec::new();
    for info in FAMILIES.iter() {
        for f in family_instances(info.id, max_vertices)? {
            let g = f.build()?;
            out.push((f, g));
        }
    }
    Ok(out)
}
