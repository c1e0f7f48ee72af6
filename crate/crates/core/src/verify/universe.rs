use std::fmt;
use std::str::FromStr;

use crate::partition::Partition;

use super::VerifyError;

/// A finite family of diagrams to scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Universe {
    /// Every diagram with at most `columns` columns and `rows` rows whose
    /// size lies in the optional bounds.
    Rect { columns: u32, rows: usize, min_size: Option<u64>, max_size: Option<u64> },
    /// An explicit list, scanned in the canonical order without repeats.
    List(Vec<Partition>),
}

impl Universe {
    pub fn rect(columns: u32, rows: usize) -> Self {
        Universe::Rect { columns, rows, min_size: None, max_size: None }
    }

    pub fn with_size_bounds(self, min_size: Option<u64>, max_size: Option<u64>) -> Self {
        match self {
            Universe::Rect { columns, rows, .. } => Universe::Rect { columns, rows, min_size, max_size },
            list => list,
        }
    }

    /// The diagrams, in the canonical order.
    pub fn diagrams(&self) -> Vec<Partition> {
        match self {
            Universe::Rect { columns, rows, min_size, max_size } => Partition::in_rectangle(*columns, *rows)
                .into_iter()
                .filter(|a| min_size.is_none_or(|m| a.size() >= m) && max_size.is_none_or(|m| a.size() <= m))
                .collect(),
            Universe::List(list) => {
                let mut v = list.clone();
                v.sort();
                v.dedup();
                v
            }
        }
    }
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Universe::Rect { columns, rows, min_size, max_size } => {
                write!(f, "rect {columns}x{rows}")?;
                if let Some(m) = min_size {
                    write!(f, ", size >= {m}")?;
                }
                if let Some(m) = max_size {
                    write!(f, ", size <= {m}")?;
                }
                Ok(())
            }
            Universe::List(_) => {
                f.write_str("list [")?;
                for (i, a) in self.diagrams().iter().enumerate() {
                    if i > 0 {
                        f.write_str("; ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// `NxD`: `N` columns by `D` rows.
impl FromStr for Universe {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || VerifyError::BadRect(s.to_string());
        let (n, d) = s.trim().split_once(['x', 'X']).ok_or_else(bad)?;
        let columns = n.trim().parse::<u32>().map_err(|_| bad())?;
        let rows = d.trim().parse::<usize>().map_err(|_| bad())?;
        Ok(Universe::rect(columns, rows))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::p;

    #[test]
    fn rectangles() {
        assert_eq!("5x5".parse::<Universe>().unwrap().diagrams().len(), 252);
        assert_eq!("2x2".parse::<Universe>().unwrap().diagrams().len(), 6);
        assert_eq!("0x0".parse::<Universe>().unwrap().diagrams(), vec![Partition::empty()]);
        assert!("5by5".parse::<Universe>().is_err());
        assert!("x5".parse::<Universe>().is_err());
        let bounded = Universe::rect(3, 3).with_size_bounds(Some(2), Some(3));
        assert!(bounded.diagrams().iter().all(|a| (2..=3).contains(&a.size())));
        assert_eq!(bounded.to_string(), "rect 3x3, size >= 2, size <= 3");
    }

    #[test]
    fn lists() {
        let u = Universe::List(vec![p(&[2, 1]), p(&[1]), p(&[2, 1])]);
        assert_eq!(u.diagrams(), vec![p(&[1]), p(&[2, 1])]);
        assert_eq!(u.to_string(), "list [1; 2,1]");
        assert!(Universe::List(vec![]).diagrams().is_empty());
    }
}
