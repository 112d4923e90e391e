//! Group-configuration files.
//!
//! A config is a TOML document:
//!
//! ```toml
//! max_table_order = 256          # optional
//!
//! [factors.a]
//! kind = "cyclic"                # "integer" | "cyclic" | "table"
//! order = 5
//!
//! [factors.b]
//! kind = "table"
//! elements = ["e", "s"]
//! identity = "e"                 # optional, detected if absent
//! table = [["e", "s"], ["s", "e"]]
//!
//! swap = "identity"              # optional: "identity", "none", or a name map
//! # [swap]
//! # "1" = "2"
//! ```
//!
//! Without a `swap` key the identity name-map is used when both factors are
//! the same group.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::factors::{Factor, GroupConfig, RawTable, SwapIso, DEFAULT_MAX_TABLE_ORDER};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigDoc {
    max_table_order: Option<usize>,
    factors: FactorsDoc,
    swap: Option<SwapDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorsDoc {
    a: FactorDoc,
    b: FactorDoc,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorDoc {
    kind: String,
    order: Option<u32>,
    elements: Option<Vec<String>>,
    identity: Option<String>,
    table: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum SwapDoc {
    Keyword(String),
    Map(BTreeMap<String, String>),
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

fn build_factor(name: &str, doc: &FactorDoc, max_order: usize) -> Result<Factor> {
    let unexpected = |key: &str| {
        Error::InvalidConfig(format!("factor {name}: key `{key}` does not apply to kind {:?}", doc.kind))
    };
    match doc.kind.as_str() {
        "integer" => {
            if doc.order.is_some() {
                return Err(unexpected("order"));
            }
            if doc.elements.is_some() || doc.table.is_some() {
                return Err(unexpected("table"));
            }
            Ok(Factor::Integer)
        }
        "cyclic" => {
            if doc.elements.is_some() || doc.table.is_some() || doc.identity.is_some() {
                return Err(unexpected("table"));
            }
            let order = doc
                .order
                .ok_or_else(|| Error::InvalidConfig(format!("factor {name}: cyclic factor needs `order`")))?;
            Factor::cyclic(order)
        }
        "table" => {
            if doc.order.is_some() {
                return Err(unexpected("order"));
            }
            let raw = RawTable {
                elements: doc
                    .elements
                    .clone()
                    .ok_or_else(|| Error::InvalidConfig(format!("factor {name}: table factor needs `elements`")))?,
                identity: doc.identity.clone(),
                table: doc
                    .table
                    .clone()
                    .ok_or_else(|| Error::InvalidConfig(format!("factor {name}: table factor needs `table`")))?,
            };
            Factor::table(&raw, max_order)
        }
        other => Err(Error::InvalidConfig(format!(
            "factor {name}: unknown kind {other:?}, expected integer, cyclic or table"
        ))),
    }
}

/// Parses and fully validates a group configuration.
pub fn parse_config(text: &str) -> Result<GroupConfig> {
    let doc: ConfigDoc = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((1, 1), |s| line_col(text, s.start));
        Error::syntax(line, column, e.message().trim().to_string())
    })?;
    let max_order = doc.max_table_order.unwrap_or(DEFAULT_MAX_TABLE_ORDER);
    let a = build_factor("a", &doc.factors.a, max_order)?;
    let b = build_factor("b", &doc.factors.b, max_order)?;
    let swap = match doc.swap {
        None => SwapIso::identity_for(&a, &b),
        Some(SwapDoc::Keyword(k)) => match k.as_str() {
            "none" => None,
            "identity" => Some(SwapIso::identity_for(&a, &b).ok_or_else(|| {
                Error::InvalidSwap("identity map requires both factors to be the same group".into())
            })?),
            other => {
                return Err(Error::InvalidConfig(format!(
                    "swap must be \"identity\", \"none\" or a name map, got {other:?}"
                )))
            }
        },
        Some(SwapDoc::Map(map)) => {
            let pairs: Vec<(String, String)> = map.into_iter().collect();
            Some(SwapIso::from_name_map(&a, &b, &pairs)?)
        }
    };
    Ok(GroupConfig::new(a, b, swap))
}

/// Reads a config file from disk.
pub fn load_config(path: impl AsRef<std::path::Path>) -> Result<GroupConfig> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text)
}

fn factor_doc(cfg: &GroupConfig, side: crate::Side) -> String {
    match cfg.factor(side) {
        Factor::Integer => "kind = \"integer\"\n".to_string(),
        Factor::Cyclic { order } => format!("kind = \"cyclic\"\norder = {order}\n"),
        Factor::Table(_) => {
            let raw = cfg.raw_table(side).expect("table factor");
            let quote = |v: &[String]| {
                v.iter().map(|s| format!("{s:?}")).collect::<Vec<_>>().join(", ")
            };
            let rows: Vec<String> = raw.table.iter().map(|r| format!("[{}]", quote(r))).collect();
            format!(
                "kind = \"table\"\nelements = [{}]\nidentity = {:?}\ntable = [{}]\n",
                quote(&raw.elements),
                raw.identity.unwrap_or_default(),
                rows.join(", ")
            )
        }
    }
}

/// Writes a config back out in the same schema.
pub fn format_config(cfg: &GroupConfig) -> String {
    let swap = match cfg.swap() {
        None => "swap = \"none\"\n".to_string(),
        Some(iso) => {
            let pairs = iso.name_pairs(cfg.factor(crate::Side::A), cfg.factor(crate::Side::B));
            let body: Vec<String> = pairs.iter().map(|(x, y)| format!("{x:?} = {y:?}")).collect();
            format!("swap = {{ {} }}\n", body.join(", "))
        }
    };
    format!(
        "{swap}\n[factors.a]\n{}\n[factors.b]\n{}",
        factor_doc(cfg, crate::Side::A),
        factor_doc(cfg, crate::Side::B)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factors::Element;

    #[test]
    fn cyclic_pair() {
        let cfg = parse_config("[factors.a]\nkind = \"cyclic\"\norder = 5\n[factors.b]\nkind = \"cyclic\"\norder = 2\n").unwrap();
        assert_eq!(cfg.to_string(), "Z/5 * Z/2");
        assert!(cfg.swap().is_none());
    }

    #[test]
    fn integer_and_cyclic() {
        let cfg = parse_config("[factors.a]\nkind = \"integer\"\n[factors.b]\nkind = \"cyclic\"\norder = 3\n").unwrap();
        assert_eq!(cfg.to_string(), "Z * Z/3");
        assert_eq!(cfg.integer_side(), Some(crate::Side::A));
    }

    #[test]
    fn identical_factors_default_to_identity_swap() {
        let text = "swap = \"identity\"\n[factors.a]\nkind = \"cyclic\"\norder = 3\n[factors.b]\nkind = \"cyclic\"\norder = 3\n";
        let cfg = parse_config(text).unwrap();
        assert_eq!(cfg.swap().unwrap().to_b(&Element::Finite(2)), Element::Finite(2));
        let implicit = parse_config("[factors.a]\nkind = \"cyclic\"\norder = 3\n[factors.b]\nkind = \"cyclic\"\norder = 3\n").unwrap();
        assert!(implicit.swap().is_some());
        let none = parse_config("swap = \"none\"\n[factors.a]\nkind = \"cyclic\"\norder = 3\n[factors.b]\nkind = \"cyclic\"\norder = 3\n").unwrap();
        assert!(none.swap().is_none());
    }

    #[test]
    fn syntax_error_has_position() {
        let err = parse_config("[factors.a]\nkind = \"cyclic\"\norder = = 5\n").unwrap_err();
        match err {
            Error::Syntax { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn invalid_table_rejected() {
        let text = r#"
[factors.a]
kind = "table"
elements = ["x", "y"]
table = [["y", "x"], ["y", "x"]]
[factors.b]
kind = "integer"
"#;
        assert!(matches!(parse_config(text), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn bad_swap_reports_product() {
        let text = r#"
[factors.a]
kind = "table"
elements = ["0", "1", "2", "3"]
table = [["0","1","2","3"],["1","2","3","0"],["2","3","0","1"],["3","0","1","2"]]
[factors.b]
kind = "table"
elements = ["0", "1", "2", "3"]
table = [["0","1","2","3"],["1","2","3","0"],["2","3","0","1"],["3","0","1","2"]]
[swap]
"1" = "2"
"2" = "1"
"3" = "3"
"#;
        let err = parse_config(text).unwrap_err();
        assert!(matches!(err, Error::InvalidSwap(ref m) if m.contains('*')), "{err}");
    }

    #[test]
    fn unknown_kind_and_missing_order() {
        assert!(parse_config("[factors.a]\nkind = \"free\"\n[factors.b]\nkind = \"integer\"\n").is_err());
        assert!(parse_config("[factors.a]\nkind = \"cyclic\"\n[factors.b]\nkind = \"integer\"\n").is_err());
        assert!(parse_config("[factors.a]\nkind = \"cyclic\"\norder = 1\n[factors.b]\nkind = \"integer\"\n").is_err());
    }

    #[test]
    fn format_round_trips() {
        let text = r#"
[factors.a]
kind = "table"
elements = ["e", "s"]
identity = "e"
table = [["e", "s"], ["s", "e"]]
[factors.b]
kind = "table"
elements = ["e", "s"]
identity = "e"
table = [["e", "s"], ["s", "e"]]
"#;
        let cfg = parse_config(text).unwrap();
        assert_eq!(parse_config(&format_config(&cfg)).unwrap(), cfg);
        let cfg = parse_config("[factors.a]\nkind = \"integer\"\n[factors.b]\nkind = \"cyclic\"\norder = 7\n").unwrap();
        assert_eq!(parse_config(&format_config(&cfg)).unwrap(), cfg);
    }
}
