use crate::error::{Error, Result};
use crate::partitions::{MultiPartition, Partition};

/// `[3,1]`; whitespace is allowed, trailing zeros are dropped.
pub fn parse_partition(s: &str) -> Result<Partition> {
    serde_json::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad partition {s:?}: {e}")))
}

/// `[[2,1],[],[1]]`. A bare partition `[2,1]` is read as level one.
pub fn parse_multipartition(s: &str) -> Result<MultiPartition> {
    let s = s.trim();
    match serde_json::from_str::<MultiPartition>(s) {
        Ok(m) => Ok(m),
        Err(e) => match parse_partition(s) {
            Ok(p) => Ok(MultiPartition::from(p)),
            Err(_) => Err(Error::Parse(format!("bad multipartition {s:?}: {e}"))),
        },
    }
}

/// A weight: nonnegative integers, not necessarily decreasing.
pub fn parse_weight(s: &str) -> Result<Vec<u32>> {
    let w: Vec<u32> = serde_json::from_str(s.trim()).map_err(|e| Error::Parse(format!("bad weight {s:?}: {e}")))?;
    if w.iter().try_fold(0u32, |a, &x| a.checked_add(x)).is_none() {
        return Err(Error::Parse("weight size overflows".into()));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{multi, part};

    #[test]
    fn parses() {
        assert_eq!(parse_multipartition(" [[2, 1], [], [1]] ").unwrap(), multi(&[&[2, 1], &[], &[1]]));
        assert_eq!(parse_multipartition("[3,1]").unwrap(), multi(&[&[3, 1]]));
        assert_eq!(parse_partition("[2,1,0]").unwrap(), part(&[2, 1]));
        assert!(parse_multipartition("[[1,2]]").is_err());
        assert_eq!(parse_multipartition("[]").unwrap(), multi(&[&[]]));
        assert!(parse_multipartition("{}").is_err());
        assert!(parse_multipartition("[[1],").is_err());
        assert!(parse_weight("[0,2,1]").is_ok());
        assert!(parse_weight("[4294967295,1]").is_err());
    }
}
