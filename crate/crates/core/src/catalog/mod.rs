//! The classified objects as data: normal forms, real algebras, dictionaries, certificates.

pub mod algebras;
pub mod appendix;
pub mod certificates;
pub mod dump;
pub mod families;
pub mod tables;

pub use algebras::{real_algebra, spec, AlgebraSpec, ALGEBRAS};
pub use appendix::{appendix_map, check_row, AppendixRow, Family, FamilyPoint, RowCheck, APPENDIX_ROWS};
pub use families::{FamilyIIParams, FamilyIParams, TABLE_1, TABLE_2};
pub use tables::{reproduce_table, Manifest, TableId, TableReport};
pub use dump::{catalog_dump, CatalogDump, CATALOG_VERSION};
