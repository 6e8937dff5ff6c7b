//! Versioned JSON dump of the catalog data.

use serde::Serialize;

use super::algebras::{AlgebraSpec, ALGEBRAS};
use super::appendix::{AppendixRow, APPENDIX_ROWS};
use super::certificates::{certificates, Certificate};
use super::families::{TableRow, TableRow2, FAMILY_II_TEMPLATE, FAMILY_I_TEMPLATE, TABLE_1, TABLE_2};

pub const CATALOG_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct FamilyDump<R: 'static> {
    pub template: &'static str,
    pub rows: &'static [R],
}

#[derive(Serialize)]
pub struct CatalogDump {
    pub version: u32,
    pub algebras: &'static [AlgebraSpec],
    pub family_i: FamilyDump<TableRow>,
    pub family_ii: FamilyDump<TableRow2>,
    pub appendix: &'static [AppendixRow],
    pub certificates: Vec<Certificate>,
}

pub fn catalog_dump() -> CatalogDump {
    CatalogDump {
        version: CATALOG_VERSION,
        algebras: &ALGEBRAS,
        family_i: FamilyDump {
            template: FAMILY_I_TEMPLATE,
            rows: &TABLE_1,
        },
        family_ii: FamilyDump {
            template: FAMILY_II_TEMPLATE,
            rows: &TABLE_2,
        },
        appendix: &APPENDIX_ROWS,
        certificates: certificates(),
    }
}
