//! Certificates: structured, human-readable records of verified identities.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateItem {
    pub name: String,
    pub statement: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: u32,
    pub title: String,
    pub items: Vec<CertificateItem>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(title: impl Into<String>) -> Self {
        Certificate { schema_version: SCHEMA_VERSION, title: title.into(), items: vec![], notes: vec![] }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        statement: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        pass: bool,
    ) {
        self.items.push(CertificateItem {
            name: name.into(),
            statement: statement.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            pass,
        });
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertificateItem> {
        self.items.iter().filter(|i| !i.pass)
    }

    pub fn find(&self, name: &str) -> Option<&CertificateItem> {
        self.items.iter().find(|i| i.name == name)
    }

    pub fn merge(&mut self, other: Certificate) {
        self.items.extend(other.items);
        self.notes.extend(other.notes);
    }
}
