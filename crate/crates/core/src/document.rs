//! Text documents for partitions and reports.
//!
//! A partition document is a JSON object with the keys `order`, `pairs`,
//! and optionally `metadata` and `provenance`. The canonical rendering puts
//! one key per line with a compact value, pairs sorted and lo-first, so that
//! equal partitions render to identical bytes and golden files diff well.
//! Lists of objects (provenance, violations) get one element per line.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cover::{OrientedList, OrientedPair};
use crate::error::{Error, Result};
use crate::partition::TwoPartition;
use crate::product::{ProductResult, Provenance};
use crate::properties::{PredicateSet, PropertyReport};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
    /// Free-form description of where the partition came from.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl Metadata {
    pub fn named(name: impl Into<String>) -> Self {
        Metadata {
            name: Some(name.into()),
            ..Metadata::default()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.name.is_none() && self.tags.is_empty() && self.source.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProvenanceEntry {
    pub pair: [u32; 2],
    pub kind: String,
    pub rt: [u32; 2],
    pub xy: [u32; 2],
}

impl From<&Provenance> for ProvenanceEntry {
    fn from(p: &Provenance) -> Self {
        ProvenanceEntry {
            pair: [p.u, p.v],
            kind: p.kind.label().to_string(),
            rt: [p.rt.0, p.rt.1],
            xy: [p.xy.0, p.xy.1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartitionDocument {
    pub order: u64,
    /// Pairs as written. Their order and orientation are kept for
    /// `as-given` orientations.
    pub pairs: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub provenance: Vec<ProvenanceEntry>,
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

impl PartitionDocument {
    pub fn from_partition(p: &TwoPartition, metadata: Metadata) -> Self {
        PartitionDocument {
            order: p.order() as u64,
            pairs: p
                .pairs()
                .iter()
                .map(|q| [q.lo() as i64, q.hi() as i64])
                .collect(),
            metadata,
            provenance: Vec::new(),
        }
    }

    pub fn from_product(w: &ProductResult, metadata: Metadata) -> Self {
        PartitionDocument {
            provenance: w.provenance().iter().map(ProvenanceEntry::from).collect(),
            ..Self::from_partition(w.partition(), metadata)
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(parse_error)
    }

    /// Parses a sequence of whitespace-separated documents, as produced by
    /// [`PartitionDocument::render_compact`] streams.
    pub fn parse_stream(text: &str) -> Result<Vec<Self>> {
        serde_json::Deserializer::from_str(text)
            .into_iter::<Self>()
            .map(|d| d.map_err(parse_error))
            .collect()
    }

    pub fn partition(&self) -> Result<TwoPartition> {
        let order = u32::try_from(self.order).map_err(|_| Error::InvalidOrder(self.order))?;
        let raw: Vec<(i64, i64)> = self.pairs.iter().map(|&[a, b]| (a, b)).collect();
        TwoPartition::new(order, &raw)
    }

    /// Parses the inline syntax `"1,2 3,4"`: pairs separated by whitespace,
    /// elements by a comma.
    pub fn from_inline(order: u64, text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut column = 1;
        for chunk in text.split(' ') {
            if !chunk.trim().is_empty() {
                let bad = |message: String| Error::Parse {
                    line: 1,
                    column,
                    message,
                };
                let (a, b) = chunk
                    .split_once(',')
                    .ok_or_else(|| bad(format!("expected `a,b`, found `{chunk}`")))?;
                let num = |t: &str| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| bad(format!("`{t}` is not an integer")))
                };
                pairs.push([num(a)?, num(b)?]);
            }
            column += chunk.chars().count() + 1;
        }
        Ok(PartitionDocument {
            order,
            pairs,
            metadata: Metadata::default(),
            provenance: Vec::new(),
        })
    }

    /// The orientation written in the document: each pair `[a, b]` becomes
    /// `(a mod n, b mod n)`, in file order.
    pub fn as_given(&self) -> Result<OrientedList> {
        let p = self.partition()?;
        let z = p.modulus();
        let entries = self
            .pairs
            .iter()
            .map(|&[a, b]| OrientedPair::new(z.reduce(a), z.reduce(b)))
            .collect();
        OrientedList::new(&p, entries)
    }

    /// The canonical multi-line rendering, ending in a newline.
    pub fn render(&self) -> String {
        let mut fields = vec![
            ("order", Value::from(self.order)),
            ("pairs", json(&self.pairs)),
        ];
        if !self.metadata.is_empty() {
            fields.push(("metadata", json(&self.metadata)));
        }
        if !self.provenance.is_empty() {
            fields.push(("provenance", json(&self.provenance)));
        }
        render_object(&fields)
    }

    /// A single-line rendering without trailing newline.
    pub fn render_compact(&self) -> String {
        serde_json::to_string(self).expect("documents serialize")
    }
}

/// Renders a partition in canonical form with the given metadata.
pub fn render_partition(p: &TwoPartition, metadata: Metadata) -> String {
    PartitionDocument::from_partition(p, metadata).render()
}

/// The check report with a stable key order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportDocument {
    pub report: PropertyReport,
    pub required: PredicateSet,
}

impl ReportDocument {
    pub fn new(report: PropertyReport, required: PredicateSet) -> Self {
        ReportDocument { report, required }
    }

    /// True when every required predicate holds.
    pub fn passes(&self) -> bool {
        self.required.iter().all(|p| self.report.holds(p))
    }

    pub fn render(&self) -> String {
        let r = &self.report;
        let violations: Vec<Value> = r
            .violations
            .iter()
            .map(|v| serde_json::json!({ "predicate": v.predicate.name(), "pairs": v.pairs }))
            .collect();
        render_object(&[
            ("order", Value::from(r.order)),
            ("starter", Value::from(r.starter)),
            ("strong", Value::from(r.strong)),
            ("skew", Value::from(r.skew)),
            ("skolem", Value::from(r.skolem)),
            ("cardioidal", Value::from(r.cardioidal)),
            ("canonical", Value::from(r.canonical)),
            ("required", Value::from(self.required.to_string())),
            ("pass", Value::from(self.passes())),
            ("differences", json(&r.differences)),
            ("sums", json(&r.sums)),
            ("violations", Value::Array(violations)),
        ])
    }
}

fn json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data serializes")
}

fn render_object(fields: &[(&str, Value)]) -> String {
    let mut out = String::from("{\n");
    for (i, (key, value)) in fields.iter().enumerate() {
        out.push_str(&format!("  {}: ", Value::from(*key)));
        match value {
            Value::Array(items) if items.iter().any(Value::is_object) => {
                out.push_str("[\n");
                for (j, item) in items.iter().enumerate() {
                    out.push_str("    ");
                    out.push_str(&item.to_string());
                    out.push_str(if j + 1 < items.len() { ",\n" } else { "\n" });
                }
                out.push_str("  ]");
            }
            other => out.push_str(&other.to_string()),
        }
        out.push_str(if i + 1 < fields.len() { ",\n" } else { "\n" });
    }
    out.push_str("}\n");
    out
}
