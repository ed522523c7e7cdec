use zlab_core::Bigraph;

use crate::error::{CatalogError, Result};

/// Family numbers of the thirteen exceptional bigraphs.
pub const EXCEPTIONAL_IDS: [u8; 13] = [36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 51, 52];

fn source(id: u8) -> Option<&'static str> {
    Some(match id {
        36 => include_str!("../data/e8e8.json"),
        37 => include_str!("../data/a5e6.json"),
        38 => include_str!("../data/d5e7.json"),
        39 => include_str!("../data/a3d6.json"),
        40 => include_str!("../data/a1d4.json"),
        41 => include_str!("../data/a3a3d5.json"),
        42 => include_str!("../data/a3d5d5.json"),
        43 => include_str!("../data/d6d6e7.json"),
        44 => include_str!("../data/d6e7e7.json"),
        45 => include_str!("../data/d4d4e6.json"),
        46 => include_str!("../data/d4e6e6.json"),
        51 => include_str!("../data/e6e6e7e7e7.json"),
        52 => include_str!("../data/e6e6e6e7e7.json"),
        _ => return None,
    })
}

pub fn build_exceptional(id: u8) -> Result<Bigraph> {
    let src = source(id).ok_or(CatalogError::UnknownExceptional(id))?;
    Ok(Bigraph::from_json(src)?)
}

pub fn is_exceptional(id: u8) -> bool {
    EXCEPTIONAL_IDS.contains(&id)
}
