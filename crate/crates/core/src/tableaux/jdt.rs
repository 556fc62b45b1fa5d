use super::shape::SkewShape;
use super::tableau::SkewTableau;
use crate::partitions::Partition;

/// Rows of the inner diagram whose last cell is an inner corner.
fn inner_corners(inner: &[u32]) -> Vec<usize> {
    (0..inner.len()).filter(|&i| inner[i] > 0 && inner.get(i + 1).copied().unwrap_or(0) < inner[i]).collect()
}

/// Jeu de taquin rectification. The slide schedule picks the row of the
/// next inner corner to vacate from the list of candidates.
pub fn rectify_with(t: &SkewTableau, schedule: &mut dyn FnMut(&[usize]) -> usize) -> SkewTableau {
    let shape = t.shape();
    let rows = shape.rows();
    let mut inner: Vec<u32> = (0..rows).map(|i| shape.inner().part(i)).collect();
    let mut outer: Vec<u32> = (0..rows).map(|i| shape.outer().part(i)).collect();
    // grid[i][j] for absolute columns; None inside the inner diagram
    let mut grid: Vec<Vec<Option<u32>>> = (0..rows)
        .map(|i| (0..outer[i] as usize).map(|j| t.get(i, j)).collect())
        .collect();
    loop {
        let corners = inner_corners(&inner);
        if corners.is_empty() {
            break;
        }
        let (mut i, mut j) = {
            let i = schedule(&corners);
            assert!(corners.contains(&i), "schedule must pick a listed corner");
            (i, inner[i] as usize - 1)
        };
        inner[i] -= 1;
        loop {
            let right = grid[i].get(j + 1).copied().flatten();
            let below = grid.get(i + 1).and_then(|r| r.get(j)).copied().flatten();
            match (right, below) {
                (None, None) => break,
                (Some(_), None) => {
                    grid[i][j] = grid[i][j + 1].take();
                    j += 1;
                }
                (None, Some(_)) => {
                    grid[i][j] = grid[i + 1][j].take();
                    i += 1;
                }
                (Some(a), Some(b)) => {
                    if b <= a {
                        grid[i][j] = grid[i + 1][j].take();
                        i += 1;
                    } else {
                        grid[i][j] = grid[i][j + 1].take();
                        j += 1;
                    }
                }
            }
        }
        grid[i].pop();
        outer[i] -= 1;
    }
    let rows: Vec<Vec<u32>> = grid
        .into_iter()
        .map(|r| r.into_iter().map(|x| x.expect("filled")).collect::<Vec<_>>())
        .filter(|r| !r.is_empty())
        .collect();
    let outer = Partition::new(rows.iter().map(|r| r.len() as u32).collect()).expect("rectified shape");
    SkewTableau::from_parts_unchecked(SkewShape::straight(outer), rows)
}

/// Rectification sliding into the lowest inner corner first.
pub fn rectify(t: &SkewTableau) -> SkewTableau {
    rectify_with(t, &mut |c| *c.last().expect("nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::part;

    fn sk(o: &[u32], i: &[u32], rows: Vec<Vec<u32>>) -> SkewTableau {
        SkewTableau::new(SkewShape::new(part(o), part(i)).unwrap(), rows).unwrap()
    }

    #[test]
    fn single_slides() {
        let a = rectify(&sk(&[2, 1], &[1], vec![vec![1], vec![2]]));
        assert_eq!(a.rows(), &[vec![1], vec![2]]);
        let b = rectify(&sk(&[2, 1], &[1], vec![vec![2], vec![1]]));
        assert_eq!(b.rows(), &[vec![1, 2]]);
        let c = sk(&[3, 1], &[], vec![vec![1, 1, 2], vec![2]]);
        assert_eq!(rectify(&c), c);
    }

    #[test]
    fn schedules_agree() {
        let t = sk(&[4, 3, 2], &[2, 1], vec![vec![1, 2], vec![1, 3], vec![2, 4]]);
        let low = rectify(&t);
        let high = rectify_with(&t, &mut |c| c[0]);
        assert_eq!(low, high);
        assert_eq!(low.shape().size(), 6);
    }
}
