//! The polynomial ring `S = k[x_1..x_n, y_1..y_n]`, optionally extended by
//! auxiliary elimination variables.
//!
//! Variable layout: auxiliary variables first (greatest), then `x_1..x_n`,
//! then `y_1..y_n`. Public constructors build plain `2n`-variable rings;
//! intersection and colon computations internally build one-auxiliary
//! extensions with an elimination order.

use crate::field::CoefficientField;
use crate::monomial::{Monomial, MonomialOrder};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    n_vertices: usize,
    n_aux: usize,
    field: CoefficientField,
    order: MonomialOrder,
}

impl PolyRing {
    /// `k[x_1..x_n, y_1..y_n]` with the default DegRevLex order.
    pub fn new(n_vertices: usize, field: CoefficientField) -> Arc<Self> {
        Self::with_order(n_vertices, field, MonomialOrder::DegRevLex)
    }

    pub fn with_order(
        n_vertices: usize,
        field: CoefficientField,
        order: MonomialOrder,
    ) -> Arc<Self> {
        Arc::new(PolyRing { n_vertices, n_aux: 0, field, order })
    }

    /// Extension by one auxiliary variable `t`, greatest under an elimination
    /// block order.
    pub fn elimination_extension(self: &Arc<Self>) -> Arc<Self> {
        Arc::new(PolyRing {
            n_vertices: self.n_vertices,
            n_aux: self.n_aux + 1,
            field: self.field,
            order: MonomialOrder::Elimination { block: self.n_aux + 1 },
        })
    }

    /// Same variables, different order.
    pub fn reordered(self: &Arc<Self>, order: MonomialOrder) -> Arc<Self> {
        Arc::new(PolyRing { order, ..**self })
    }

    /// Same variables and order, different coefficient field.
    pub fn with_field(self: &Arc<Self>, field: CoefficientField) -> Arc<Self> {
        Arc::new(PolyRing { field, ..**self })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_aux(&self) -> usize {
        self.n_aux
    }

    pub fn num_vars(&self) -> usize {
        self.n_aux + 2 * self.n_vertices
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Variable index of `x_i` (vertices are 1-based).
    pub fn x(&self, i: usize) -> usize {
        debug_assert!(1 <= i && i <= self.n_vertices);
        self.n_aux + (i - 1)
    }

    /// Variable index of `y_i`.
    pub fn y(&self, i: usize) -> usize {
        debug_assert!(1 <= i && i <= self.n_vertices);
        self.n_aux + self.n_vertices + (i - 1)
    }

    /// Variable index of the auxiliary variable `t` (requires an extension).
    pub fn t(&self) -> usize {
        debug_assert!(self.n_aux > 0);
        0
    }

    pub fn var_name(&self, var: usize) -> String {
        if var < self.n_aux {
            if self.n_aux == 1 {
                "t".to_string()
            } else {
                format!("t{}", var + 1)
            }
        } else if var < self.n_aux + self.n_vertices {
            format!("x{}", var - self.n_aux + 1)
        } else {
            format!("y{}", var - self.n_aux - self.n_vertices + 1)
        }
    }

    /// Parse a variable name as produced by [`Self::var_name`].
    pub fn var_index(&self, name: &str) -> Option<usize> {
        let (head, digits) = name.split_at(1);
        match head {
            "t" if self.n_aux == 1 && digits.is_empty() => Some(0),
            "t" if self.n_aux > 1 => {
                let k: usize = digits.parse().ok()?;
                (1..=self.n_aux).contains(&k).then(|| k - 1)
            }
            "x" => {
                let i: usize = digits.parse().ok()?;
                (1..=self.n_vertices).contains(&i).then(|| self.x(i))
            }
            "y" => {
                let i: usize = digits.parse().ok()?;
                (1..=self.n_vertices).contains(&i).then(|| self.y(i))
            }
            _ => None,
        }
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.order.cmp(a, b)
    }

    /// Descriptor string used in JSON dumps and cache keys.
    pub fn descriptor(&self) -> String {
        format!("n={};aux={};field={};order={}", self.n_vertices, self.n_aux, self.field, self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_layout_and_names() {
        let r = PolyRing::new(3, CoefficientField::Rationals);
        assert_eq!(r.num_vars(), 6);
        assert_eq!(r.var_name(r.x(1)), "x1");
        assert_eq!(r.var_name(r.y(3)), "y3");
        assert_eq!(r.var_index("x2"), Some(1));
        assert_eq!(r.var_index("y1"), Some(3));
        assert_eq!(r.var_index("t"), None);

        let e = r.elimination_extension();
        assert_eq!(e.num_vars(), 7);
        assert_eq!(e.t(), 0);
        assert_eq!(e.var_name(0), "t");
        assert_eq!(e.var_index("t"), Some(0));
        assert_eq!(e.var_name(e.x(1)), "x1");
        assert_eq!(e.order(), MonomialOrder::Elimination { block: 1 });
    }
}
