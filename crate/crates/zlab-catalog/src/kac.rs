use serde::{Deserialize, Serialize};
use zlab_core::Bigraph;
use zlab_spectral::binding::cartan_with;
use zlab_spectral::{describe, kac_type, labeling_regime, red_components, Regime, Trichotomy};

use crate::error::{CatalogError, Result};

/// `(S(G), descr(G), S(G*), descr(G*))`; descriptions read `NAME[label, ...]` in template node order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KacQuadruple {
    pub s_g: String,
    pub descr_g: String,
    pub s_gstar: String,
    pub descr_gstar: String,
}

impl KacQuadruple {
    pub fn swapped(&self) -> KacQuadruple {
        KacQuadruple {
            s_g: self.s_gstar.clone(),
            descr_g: self.descr_gstar.clone(),
            s_gstar: self.s_g.clone(),
            descr_gstar: self.descr_g.clone(),
        }
    }
}

/// Name and description of the red side.
pub fn red_description(g: &Bigraph) -> Result<(String, String)> {
    let rc = red_components(g)?;
    let a = cartan_with(g, &rc)?;
    let k = kac_type(&a)?;
    if k.class != Trichotomy::Aff {
        return Err(CatalogError::NotAffineAffine(format!("A(G) is {:?}", k.class)));
    }
    let labels: Vec<String> = rc.types.iter().map(|t| t.to_string()).collect();
    Ok((k.name.unwrap_or_default(), describe(&a, &labels)?))
}

pub fn kac_quadruple(g: &Bigraph) -> Result<KacQuadruple> {
    let v = labeling_regime(g)?;
    if v.regime != Regime::AffineAffine {
        return Err(CatalogError::NotAffineAffine(format!("{:?}", v.regime)));
    }
    let (s_g, descr_g) = red_description(g)?;
    let (s_gstar, descr_gstar) = red_description(&g.dual())?;
    Ok(KacQuadruple { s_g, descr_g, s_gstar, descr_gstar })
}
