use std::sync::Arc;

use serde::Serialize;

use crate::error::Result;
use crate::perm::{Elements, PermGroup, Permutation};

/// A conjugacy class, named by its lexicographically least member.
#[derive(Debug, Clone, Serialize)]
pub struct ConjClass {
    pub representative: Permutation,
    pub size: u64,
    #[serde(skip)]
    pub members: Option<Vec<Permutation>>,
}

impl ConjClass {
    pub fn centralizer_order(&self, group_order: u64) -> u64 {
        group_order / self.size
    }
}

/// All classes of a group plus an element-to-class lookup.
#[derive(Debug)]
pub struct Classes {
    classes: Vec<ConjClass>,
    class_of: Vec<u32>,
    elements: Arc<Elements>,
}

impl Classes {
    fn compute(g: &PermGroup) -> Result<Self> {
        let elements = g.elements()?;
        let n = elements.len();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        // sorted traversal: the first unvisited member of a class is its least
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let k = classes.len() as u32;
            class_of[start] = k;
            let mut members = vec![elements[start].clone()];
            let mut i = 0;
            while i < members.len() {
                for s in g.generators() {
                    let y = members[i].conjugate_by(s);
                    let j = elements.index_of(&y).expect("conjugate lies in the group");
                    if class_of[j] == u32::MAX {
                        class_of[j] = k;
                        members.push(y);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(ConjClass {
                representative: elements[start].clone(),
                size: members.len() as u64,
                members: Some(members),
            });
        }
        Ok(Classes {
            classes,
            class_of,
            elements,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn as_slice(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ConjClass> {
        self.classes.iter()
    }

    pub fn get(&self, i: usize) -> Option<&ConjClass> {
        self.classes.get(i)
    }

    /// Index of the class containing `x`, if `x` is in the group.
    pub fn class_index(&self, x: &Permutation) -> Option<usize> {
        self.elements
            .index_of(x)
            .map(|i| self.class_of[i] as usize)
    }

    /// Class index of the `i`-th element in sorted order.
    pub fn class_of_element_index(&self, i: usize) -> usize {
        self.class_of[i] as usize
    }

    pub fn elements(&self) -> &Arc<Elements> {
        &self.elements
    }

    pub fn members(&self, i: usize) -> &[Permutation] {
        self.classes[i]
            .members
            .as_deref()
            .expect("members retained for enumerated classes")
    }
}

impl std::ops::Index<usize> for Classes {
    type Output = ConjClass;

    fn index(&self, i: usize) -> &ConjClass {
        &self.classes[i]
    }
}

/// Conjugacy classes, sorted by representative (the identity class first).
pub fn conjugacy_classes(g: &PermGroup) -> Result<Arc<Classes>> {
    if let Some(c) = g.classes.get() {
        return Ok(c.clone());
    }
    let classes = Arc::new(Classes::compute(g)?);
    Ok(g.classes.get_or_init(|| classes).clone())
}
