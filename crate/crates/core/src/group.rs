//! Finite group actions on algebras: a multiplication table together with
//! one verified automorphism per group element.

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct GroupAction {
    pub element_names: Vec<String>,
    /// `table[g][h]` is the index of the product `g * h`; index 0 is the
    /// identity.
    pub table: Vec<Vec<usize>>,
    pub autos: Vec<AlgebraMorphism>,
}

impl GroupAction {
    pub fn order(&self) -> usize {
        self.element_names.len()
    }

    pub fn inverse_index(&self, g: usize) -> usize {
        (0..self.order())
            .find(|&h| self.table[g][h] == 0)
            .expect("verified group has inverses")
    }

    /// Group axioms and the homomorphism property of the action.
    pub fn verify(&self, a: &Algebra) -> Result<()> {
        let n = self.order();
        if n == 0 || self.table.len() != n || self.autos.len() != n {
            return Err(Error::ActionMismatch("empty or ragged group data".into()));
        }
        for row in &self.table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::ActionMismatch("table entries out of range".into()));
            }
        }
        for g in 0..n {
            if self.table[0][g] != g || self.table[g][0] != g {
                return Err(Error::ActionMismatch("index 0 is not an identity".into()));
            }
            if !(0..n).any(|h| self.table[g][h] == 0) {
                return Err(Error::ActionMismatch(format!(
                    "element {g} has no inverse"
                )));
            }
        }
        for g in 0..n {
            for h in 0..n {
                for k in 0..n {
                    if self.table[self.table[g][h]][k] != self.table[g][self.table[h][k]] {
                        return Err(Error::ActionMismatch("table is not associative".into()));
                    }
                }
            }
        }
        if !self.autos[0].is_identity(a) {
            return Err(Error::ActionMismatch(
                "identity element does not act as the identity".into(),
            ));
        }
        for (g, auto) in self.autos.iter().enumerate() {
            auto.verify_automorphism(a).map_err(|e| {
                Error::ActionMismatch(format!("element {g} does not act by an automorphism: {e}"))
            })?;
        }
        for g in 0..n {
            for h in 0..n {
                let composed = self.autos[g].compose(&self.autos[h]);
                if composed != self.autos[self.table[g][h]] {
                    return Err(Error::ActionMismatch(format!(
                        "action is not a homomorphism at ({g}, {h})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The cyclic group generated by one automorphism of the given order.
    pub fn cyclic(a: &Algebra, generator: &AlgebraMorphism, order: usize) -> Result<GroupAction> {
        generator.verify_automorphism(a)?;
        if order == 0 {
            return Err(Error::ActionMismatch("cyclic group of order zero".into()));
        }
        let mut autos = vec![AlgebraMorphism::identity(a)];
        for k in 1..order {
            autos.push(generator.compose(&autos[k - 1]));
        }
        if generator.compose(&autos[order - 1]) != autos[0] {
            return Err(Error::ActionMismatch(format!(
                "generator does not have order {order}"
            )));
        }
        let table = (0..order)
            .map(|g| (0..order).map(|h| (g + h) % order).collect())
            .collect();
        let element_names = (0..order).map(|k| format!("g^{k}")).collect();
        let action = GroupAction { element_names, table, autos };
        action.verify(a)?;
        Ok(action)
    }

    /// The action preserves the grading (needed to grade a skew group
    /// algebra).
    pub fn is_graded(&self, a: &Algebra) -> bool {
        let Some(g) = a.grading() else {
            return false;
        };
        self.autos.iter().all(|auto| {
            (0..a.dim()).all(|i| {
                auto.apply(&a.basis_element(i))
                    .coeffs
                    .iter()
                    .enumerate()
                    .all(|(k, c)| c.is_zero() || g[k] == g[i])
            })
        })
    }
}
