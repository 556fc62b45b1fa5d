use super::tableau::SkewTableau;
use crate::error::{Error, Result};

/// Reading word: each row right to left, starting with the top row.
pub fn word(t: &SkewTableau) -> Vec<u32> {
    t.rows().iter().flat_map(|row| row.iter().rev().copied()).collect()
}

/// Every prefix holds at least as many i as i+1.
pub fn is_lattice(w: &[u32]) -> bool {
    let mut count: Vec<u32> = Vec::new();
    for &x in w {
        if x == 0 {
            return false;
        }
        let x = x as usize;
        if count.len() < x {
            count.resize(x, 0);
        }
        count[x - 1] += 1;
        if x > 1 && count[x - 1] > count[x - 2] {
            return false;
        }
    }
    true
}

/// Charge of a reading word whose weight is a partition.
///
/// Standard subwords are peeled off one at a time: take the leftmost 1,
/// then search to the right (wrapping around) for 2, then 3, and so on. A
/// letter's index rises by one whenever the search had to wrap.
pub fn charge(w: &[u32]) -> Result<u64> {
    let max = w.iter().copied().max().unwrap_or(0) as usize;
    let mut content = vec![0u32; max];
    for &x in w {
        if x == 0 {
            return Err(Error::NonPartitionWeight);
        }
        content[x as usize - 1] += 1;
    }
    if content.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::NonPartitionWeight);
    }
    let mut alive = vec![true; w.len()];
    let mut total = 0u64;
    let mut remaining = w.len();
    while remaining > 0 {
        let k = alive.iter().zip(w).filter(|(a, _)| **a).map(|(_, &x)| x).max().unwrap_or(0);
        let mut pos = (0..w.len()).find(|&i| alive[i] && w[i] == 1).expect("weight is a partition");
        alive[pos] = false;
        remaining -= 1;
        let mut index = 0u64;
        for letter in 2..=k {
            let next = (1..=w.len())
                .map(|d| (pos + d) % w.len())
                .find(|&i| alive[i] && w[i] == letter)
                .expect("weight is a partition");
            if next < pos {
                index += 1;
            }
            total += index;
            alive[next] = false;
            remaining -= 1;
            pos = next;
        }
    }
    Ok(total)
}

/// Charge of a straight tableau through its reading word.
pub fn tableau_charge(t: &SkewTableau) -> Result<u64> {
    charge(&word(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;
    use crate::tableaux::SkewShape;

    #[test]
    fn lattice_examples() {
        assert!(is_lattice(&[1, 1, 2]));
        assert!(!is_lattice(&[2, 1]));
        assert!(is_lattice(&[1, 2, 1]));
        assert!(is_lattice(&[]));
    }

    #[test]
    fn charge_of_small_tableaux() {
        let col = SkewTableau::new(SkewShape::straight(part(&[1, 1])), vec![vec![1], vec![2]]).unwrap();
        let row = SkewTableau::new(SkewShape::straight(part(&[2])), vec![vec![1, 2]]).unwrap();
        assert_eq!(tableau_charge(&col).unwrap(), 0);
        assert_eq!(tableau_charge(&row).unwrap(), 1);
        assert_eq!(charge(&[1, 1, 1, 1]).unwrap(), 0);
    }

    #[test]
    fn standard_words() {
        // reversed identity 3 2 1 is the word of the row 1 2 3: index 0,1,2
        assert_eq!(charge(&[3, 2, 1]).unwrap(), 3);
        assert_eq!(charge(&[1, 2, 3]).unwrap(), 0);
        assert_eq!(charge(&[2, 1, 3]).unwrap(), 2);
    }

    #[test]
    fn rejects_non_partition_weight() {
        assert_eq!(charge(&[2, 2, 1]), Err(Error::NonPartitionWeight));
        assert_eq!(charge(&[2]), Err(Error::NonPartitionWeight));
    }
}
