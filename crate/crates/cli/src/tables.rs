//! The bundled reference spectra that `tables` regenerates and diffs.
//!
//! Values are stored as an explicit head plus an optional closing interval,
//! exactly as published; [`ReferenceTable::rendered`] routes them through
//! the same canonical renderer as computed spectra so the comparison is
//! byte-for-byte.

use crate::render::render_value_set;

pub struct ReferenceTable {
    pub h: u32,
    pub k: u32,
    head: &'static [i64],
    tail: Option<(i64, i64)>,
}

pub const REFERENCE_TABLES: [ReferenceTable; 12] = [
    ReferenceTable {
        h: 3,
        k: 3,
        head: &[0, 3, 6, 7],
        tail: None,
    },
    ReferenceTable {
        h: 3,
        k: 4,
        head: &[0, 3, 6, 7, 9, 10, 11, 12, 14, 15],
        tail: None,
    },
    ReferenceTable {
        h: 3,
        k: 5,
        head: &[0, 3, 6, 7],
        tail: Some((9, 24)),
    },
    ReferenceTable {
        h: 3,
        k: 6,
        head: &[0, 3, 6, 7],
        tail: Some((9, 36)),
    },
    ReferenceTable {
        h: 4,
        k: 3,
        head: &[0, 4, 8, 10],
        tail: None,
    },
    ReferenceTable {
        h: 4,
        k: 4,
        head: &[0, 4, 8, 10, 12, 14, 15, 16, 17, 18, 20, 22, 23, 24, 26],
        tail: None,
    },
    ReferenceTable {
        h: 5,
        k: 3,
        head: &[0, 5, 10, 13, 14],
        tail: None,
    },
    ReferenceTable {
        h: 5,
        k: 4,
        head: &[0, 5, 10, 13, 14, 15],
        tail: Some((18, 29)),
    },
    ReferenceTable {
        h: 6,
        k: 3,
        head: &[0, 6, 12, 16, 18],
        tail: None,
    },
    ReferenceTable {
        h: 6,
        k: 4,
        head: &[0, 6, 12, 16, 18, 22, 23, 24, 26, 27, 28, 29],
        tail: None,
    },
    ReferenceTable {
        h: 7,
        k: 3,
        head: &[0, 7, 14, 19, 22, 23],
        tail: None,
    },
    ReferenceTable {
        h: 7,
        k: 4,
        head: &[0, 7, 14, 19, 21, 22, 23, 26, 27, 28],
        tail: None,
    },
];

impl ReferenceTable {
    pub fn values(&self) -> Vec<i64> {
        let mut v = self.head.to_vec();
        if let Some((lo, hi)) = self.tail {
            v.extend(lo..=hi);
        }
        v
    }

    pub fn rendered(&self) -> String {
        render_value_set(&self.values())
    }
}
