//! Simultaneous straight-line embedding of two spanning paths: place each
//! vertex at (position in path one, position in path two). Path one then
//! runs with strictly increasing x, path two with strictly increasing y, so
//! neither can self-cross.

use num_bigint::BigInt;

use super::Embedding;
use crate::geom::Point;
use crate::Error;

/// Positions of every vertex in two spanning paths; both maps are
/// bijections onto `0..n`.
#[derive(Debug, Clone)]
pub struct PathOrders {
    pub sigma1: Vec<usize>,
    pub sigma2: Vec<usize>,
}

impl PathOrders {
    /// Builds the position maps from two vertex sequences.
    pub fn from_sequences(path1: &[u32], path2: &[u32]) -> Result<PathOrders, Error> {
        let n = path1.len();
        if path2.len() != n {
            return Err(Error::InvariantViolation(
                "the two paths visit different vertex counts".into(),
            ));
        }
        let mut sigma1 = vec![usize::MAX; n];
        let mut sigma2 = vec![usize::MAX; n];
        for (pos, &v) in path1.iter().enumerate() {
            if (v as usize) >= n || sigma1[v as usize] != usize::MAX {
                return Err(Error::InvariantViolation(format!(
                    "path one is not a permutation at vertex {v}"
                )));
            }
            sigma1[v as usize] = pos;
        }
        for (pos, &v) in path2.iter().enumerate() {
            if (v as usize) >= n || sigma2[v as usize] != usize::MAX {
                return Err(Error::InvariantViolation(format!(
                    "path two is not a permutation at vertex {v}"
                )));
            }
            sigma2[v as usize] = pos;
        }
        Ok(PathOrders { sigma1, sigma2 })
    }
}

/// Places vertex v at (sigma1(v), sigma2(v)) on the (n-1)-extent grid.
pub fn embed_two_paths(orders: &PathOrders) -> Result<Embedding, Error> {
    let n = orders.sigma1.len();
    if orders.sigma2.len() != n {
        return Err(Error::InvariantViolation("order length mismatch".into()));
    }
    let position = (0..n)
        .map(|v| Point::new(orders.sigma1[v] as i64, orders.sigma2[v] as i64))
        .collect();
    let extent = BigInt::from(n.saturating_sub(1));
    Ok(Embedding { position, extent })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_orders_place_on_diagonal() {
        let o = PathOrders::from_sequences(&[0, 1, 2], &[0, 1, 2]).unwrap();
        let e = embed_two_paths(&o).unwrap();
        for v in 0..3usize {
            assert_eq!(e.position[v], Point::new(v as i64, v as i64));
        }
    }

    #[test]
    fn hand_checked_four_vertex_orders() {
        // path1 = a,b,c,d and path2 = b,d,a,c with a=0, b=1, c=2, d=3.
        let o = PathOrders::from_sequences(&[0, 1, 2, 3], &[1, 3, 0, 2]).unwrap();
        let e = embed_two_paths(&o).unwrap();
        assert_eq!(e.position[0], Point::new(0, 2));
        assert_eq!(e.position[1], Point::new(1, 0));
        assert_eq!(e.position[2], Point::new(2, 3));
        assert_eq!(e.position[3], Point::new(3, 1));
        assert_eq!(e.extent, BigInt::from(3));
    }

    #[test]
    fn single_vertex() {
        let o = PathOrders::from_sequences(&[0], &[0]).unwrap();
        let e = embed_two_paths(&o).unwrap();
        assert_eq!(e.position[0], Point::new(0, 0));
        assert_eq!(e.extent, BigInt::from(0));
    }

    #[test]
    fn non_bijective_orders_rejected() {
        assert!(PathOrders::from_sequences(&[0, 0, 2], &[0, 1, 2]).is_err());
        assert!(PathOrders::from_sequences(&[0, 1], &[0, 1, 2]).is_err());
    }
}
