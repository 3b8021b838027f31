use std::collections::BTreeMap;
use std::fmt;

/// Which of the four independent routes produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Oracle,
    Series,
    Formula,
    Circle,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Oracle, Method::Series, Method::Formula, Method::Circle];

    pub fn name(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Series => "series",
            Method::Formula => "formula",
            Method::Circle => "circle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s.trim() {
            "oracle" => Ok(Method::Oracle),
            "series" => Ok(Method::Series),
            "formula" => Ok(Method::Formula),
            "circle" => Ok(Method::Circle),
            other => Err(crate::Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

/// Tabulated `sc_t(n)` values from one method.
///
/// Exact methods store integers; the circle method stores its rounded main
/// term, which is why the agreement check in the CLI treats it separately.
#[derive(Debug, Clone, PartialEq)]
pub struct CoreCountTable {
    pub t: u32,
    pub method: Method,
    values: BTreeMap<u64, u64>,
}

impl CoreCountTable {
    pub fn new(t: u32, method: Method) -> Self {
        CoreCountTable {
            t,
            method,
            values: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, n: u64, count: u64) {
        self.values.insert(n, count);
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        self.values.get(&n).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.values.iter().map(|(&n, &v)| (n, v))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
