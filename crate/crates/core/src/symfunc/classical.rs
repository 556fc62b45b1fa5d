use crate::error::{Error, Result};
use crate::exactalg::Poly;
use crate::multisym::{hl_multi, kostka_table, EngineConfig, Sign};
use crate::partitions::{MultiPartition, Partition};

use super::SymExpansion;

/// K_{λμ}(t), read off the level-one orthogonalization.
pub fn classical_kostka(lambda: &Partition, mu: &Partition) -> Result<Poly> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.size() as u64, mu.size() as u64));
    }
    let table = kostka_table(lambda.size(), 1, Sign::Minus, EngineConfig::default())?;
    let v = table.get(&lambda.clone().into(), &mu.clone().into())?;
    v.poly_extract()
        .ok_or_else(|| Error::Precondition(format!("K_{{{lambda},{mu}}} = {v} is not a polynomial")))
}

/// t^{n(μ)} K_{λμ}(1/t).
pub fn classical_kostka_modified(lambda: &Partition, mu: &Partition) -> Result<Poly> {
    let k = classical_kostka(lambda, mu)?;
    Ok(k.reverse(mu.n_stat() as usize))
}

/// P_μ(y;t) in Schur coordinates.
pub fn classical_hl(mu: &Partition) -> Result<SymExpansion> {
    let family = hl_multi(mu.size(), 1, Sign::Minus, EngineConfig::default())?;
    family.get(&MultiPartition::from(mu.clone())).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::RatFunc;
    use crate::partitions::part;

    #[test]
    fn small_kostka() {
        assert!(classical_kostka(&part(&[1, 1]), &part(&[1, 1])).unwrap().is_one());
        assert_eq!(classical_kostka(&part(&[2]), &part(&[1, 1])).unwrap(), Poly::from_ints(1, &[0, 1]));
        assert_eq!(classical_kostka(&part(&[2, 1]), &part(&[1, 1, 1])).unwrap(), Poly::from_ints(1, &[0, 1, 1]));
        assert!(classical_kostka(&part(&[1, 1]), &part(&[2])).unwrap().is_zero());
        assert!(classical_kostka_modified(&part(&[2]), &part(&[1, 1])).unwrap().is_one());
        assert_eq!(classical_kostka_modified(&part(&[1, 1, 1]), &part(&[1, 1, 1])).unwrap(), Poly::from_ints(1, &[0, 0, 0, 1]));
    }

    #[test]
    fn small_hl() {
        let p2 = classical_hl(&part(&[2])).unwrap();
        assert!(p2.coeff(&part(&[2]).into()).is_one());
        assert_eq!(p2.coeff(&part(&[1, 1]).into()), RatFunc::from_poly(Poly::from_ints(1, &[0, -1])));
        assert_eq!(p2.len(), 2);
        assert_eq!(classical_hl(&part(&[1, 1])).unwrap().len(), 1);
        assert_eq!(classical_hl(&part(&[1])).unwrap().len(), 1);
    }
}
