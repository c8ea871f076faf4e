//! Reference signature tables for `N = 2, 3, 4`: each entry records the value
//! as printed, whether it was printed as conjecture-dependent, and a
//! correction where the printed value is wrong. Checking an entry recomputes
//! every listed point with the engine and, for unramified points, with the
//! intertwining operator.

use std::fmt::Write as _;

use hsig_core::classification::is_unramified;
use hsig_core::intertwiner::unramified_signature;
use hsig_core::sigengine::{Engine, Mode};
use hsig_core::walls::{Family, HermitianParameter};
use hsig_core::{Multisegment, Provenance, Result, SignatureCharacter};
use serde::Deserialize;
use serde_json::{json, Value};

const DATA: &str = include_str!("../data/reference_tables.json");

#[derive(Clone, Debug, Deserialize)]
pub struct Erratum {
    pub corrected: String,
    pub reason: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct TableEntry {
    pub n: usize,
    pub family: String,
    pub stratum: String,
    pub points: Vec<String>,
    pub printed: String,
    /// Printed as depending on a conjecture.
    pub conjectural: bool,
    #[serde(default)]
    pub erratum: Option<Erratum>,
    /// Why the value is proven although it was printed as conjectural.
    #[serde(default)]
    pub proven_elsewhere: Option<String>,
}

impl TableEntry {
    pub fn printed_value(&self) -> Result<SignatureCharacter> {
        self.printed.parse().map_err(Into::into)
    }

    /// The printed value, or its correction.
    pub fn expected(&self) -> Result<SignatureCharacter> {
        match &self.erratum {
            Some(e) => e.corrected.parse().map_err(Into::into),
            None => self.printed_value(),
        }
    }

    pub fn multisegments(&self) -> Result<Vec<Multisegment>> {
        self.points
            .iter()
            .map(|p| p.parse().map_err(Into::into))
            .collect()
    }

    /// `m` lies in the same family and the same stratum as the first listed
    /// point.
    pub fn covers(&self, m: &Multisegment) -> bool {
        let Some(Ok(p)) = self.points.first().map(|p| p.parse::<Multisegment>()) else {
            return false;
        };
        match (Family::of(&p), Family::of(m)) {
            (Ok((f0, x0)), Ok((f, x))) => f0 == f && f0.chamber(&x0) == f.chamber(&x),
            _ => false,
        }
    }
}

pub fn entries() -> Vec<TableEntry> {
    serde_json::from_str(DATA).expect("embedded reference tables are valid")
}

pub fn entries_for(n: Option<usize>) -> Vec<TableEntry> {
    entries()
        .into_iter()
        .filter(|e| n.is_none_or(|n| e.n == n))
        .collect()
}

/// Notes for every corrected entry whose stratum contains `m`.
pub fn errata_for(m: &Multisegment) -> Vec<String> {
    entries()
        .iter()
        .filter(|e| e.n == m.n() && e.covers(m))
        .filter_map(|e| {
            e.erratum.as_ref().map(|err| {
                format!(
                    "reference table prints {} here; correct value {}: {}",
                    e.printed, err.corrected, err.reason
                )
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct PointCheck {
    pub point: Multisegment,
    pub computed: SignatureCharacter,
    /// Operator signature, for unramified points.
    pub oracle: Option<SignatureCharacter>,
}

#[derive(Clone, Debug)]
pub struct EntryCheck {
    pub entry: TableEntry,
    pub expected: SignatureCharacter,
    pub points: Vec<PointCheck>,
}

impl EntryCheck {
    pub fn values_match(&self) -> bool {
        self.points
            .iter()
            .all(|p| p.computed.coeffs() == self.expected.coeffs())
    }

    pub fn oracle_agrees(&self) -> bool {
        self.points
            .iter()
            .filter_map(|p| p.oracle.as_ref())
            .all(|o| o.coeffs() == self.expected.coeffs())
    }

    pub fn oracle_points(&self) -> usize {
        self.points.iter().filter(|p| p.oracle.is_some()).count()
    }

    pub fn flag_matches(&self) -> bool {
        self.points.iter().all(|p| {
            let conj = p.computed.provenance() == Provenance::Conjectural;
            conj == self.entry.conjectural || (self.entry.proven_elsewhere.is_some() && !conj)
        })
    }

    pub fn passes(&self) -> bool {
        self.values_match() && self.oracle_agrees() && self.flag_matches()
    }

    fn computed(&self) -> &SignatureCharacter {
        &self.points[0].computed
    }
}

pub fn check_entry(entry: &TableEntry, engine: &mut Engine) -> Result<EntryCheck> {
    let expected = entry.expected()?;
    let mut points = Vec::new();
    for m in entry.multisegments()? {
        let computed = engine.signature(&m, Mode::AllowConjectures)?;
        let oracle = if is_unramified(&m) && m.n() > 1 {
            let p = HermitianParameter::new(m.content())?;
            Some(unramified_signature(&p)?)
        } else {
            None
        };
        points.push(PointCheck {
            point: m,
            computed,
            oracle,
        });
    }
    Ok(EntryCheck {
        entry: entry.clone(),
        expected,
        points,
    })
}

pub fn check_tables(n: Option<usize>) -> Result<Vec<EntryCheck>> {
    let mut engine = Engine::new();
    entries_for(n)
        .iter()
        .map(|e| check_entry(e, &mut engine))
        .collect()
}

fn provenance_label(s: &SignatureCharacter) -> String {
    match s.provenance() {
        Provenance::Proven => "proven".into(),
        Provenance::Conjectural => {
            let names: Vec<&str> = s.conjectures().iter().map(|c| c.name()).collect();
            format!("conjectural [{}]", names.join(", "))
        }
    }
}

pub fn render_text(checks: &[EntryCheck]) -> String {
    let mut out = String::new();
    let mut last: Option<(usize, &str)> = None;
    for c in checks {
        let e = &c.entry;
        if last.map(|l| l.0) != Some(e.n) {
            if last.is_some() {
                out.push('\n');
            }
            let _ = writeln!(out, "N = {}", e.n);
        }
        if last != Some((e.n, e.family.as_str())) {
            let _ = writeln!(out, "  {}", e.family);
        }
        last = Some((e.n, e.family.as_str()));
        let status = if c.passes() { "ok" } else { "MISMATCH" };
        let _ = writeln!(out, "    {}  [{status}]", e.stratum);
        let mark = if e.conjectural { "?=" } else { "=" };
        let _ = writeln!(out, "      printed   {mark} {}", e.printed);
        let _ = writeln!(
            out,
            "      computed  {}  {}",
            c.computed().render(true),
            provenance_label(c.computed())
        );
        if let Some(err) = &e.erratum {
            let _ = writeln!(
                out,
                "      erratum   corrected to {}: {}",
                err.corrected, err.reason
            );
        }
        if let Some(why) = &e.proven_elsewhere {
            let _ = writeln!(out, "      note      proven: {why}");
        }
        if c.oracle_points() > 0 {
            let verdict = if c.oracle_agrees() {
                "agrees"
            } else {
                "DISAGREES"
            };
            let _ = writeln!(
                out,
                "      operator  {verdict} at {} point(s)",
                c.oracle_points()
            );
        }
    }
    out
}

pub fn render_json(checks: &[EntryCheck]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|c| {
                let e = &c.entry;
                json!({
                    "n": e.n,
                    "family": e.family,
                    "stratum": e.stratum,
                    "printed": e.printed,
                    "printed_conjectural": e.conjectural,
                    "computed": c.computed().render(true),
                    "provenance": c.computed().provenance().to_string(),
                    "conjecture_uses": c.computed().conjectures().iter().map(|x| x.name()).collect::<Vec<_>>(),
                    "erratum": e.erratum.as_ref().map(|x| json!({"corrected": x.corrected, "reason": x.reason})),
                    "proven_elsewhere": e.proven_elsewhere,
                    "points": c.points.iter().map(|p| p.point.to_string()).collect::<Vec<_>>(),
                    "operator_points": c.oracle_points(),
                    "operator_agrees": c.oracle_agrees(),
                    "ok": c.passes(),
                })
            })
            .collect(),
    )
}
