use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Polynomial ring context: coefficient field plus ordered variable names.
///
/// Cheap to clone; equality compares field and names.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

#[derive(PartialEq, Eq, Hash)]
struct RingData {
    field: FieldSpec,
    vars: Vec<String>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<S: AsRef<str>>(field: FieldSpec, vars: &[S]) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::Parse("a ring needs at least one variable".into()));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::Parse(format!("invalid variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Parse(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Ring(Arc::new(RingData { field, vars })))
    }

    /// Parses a comma separated variable list such as `x,y,z`.
    pub fn parse_vars(field: FieldSpec, list: &str) -> Result<Ring> {
        let names: Vec<&str> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        Ring::new(field, &names)
    }

    pub fn field(&self) -> FieldSpec {
        self.0.field
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// The same field with one extra variable appended after the existing ones.
    pub(crate) fn with_tag_variable(&self) -> Ring {
        let mut name = String::from("_t");
        while self.var_index(&name).is_some() {
            name.push('_');
        }
        let mut vars = self.0.vars.clone();
        vars.push(name);
        Ring(Arc::new(RingData {
            field: self.0.field,
            vars,
        }))
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl std::hash::Hash for Ring {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
