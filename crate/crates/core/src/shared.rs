//! Append-only lists that reference their children's lists instead of
//! copying them, so a parent can collect everything below it in time
//! proportional to its own additions.

use std::rc::Rc;

pub struct SharedList<T>(Rc<Node<T>>);

struct Node<T> {
    own: Vec<T>,
    parts: Vec<SharedList<T>>,
    len: usize,
}

impl<T> Drop for Node<T> {
    // Unlinks uniquely owned descendants one by one; the default drop would
    // recurse once per level.
    fn drop(&mut self) {
        let mut stack = std::mem::take(&mut self.parts);
        while let Some(part) = stack.pop() {
            if let Ok(mut node) = Rc::try_unwrap(part.0) {
                stack.append(&mut node.parts);
            }
        }
    }
}

impl<T> Clone for SharedList<T> {
    fn clone(&self) -> Self {
        SharedList(Rc::clone(&self.0))
    }
}

impl<T> Default for SharedList<T> {
    fn default() -> Self {
        SharedList::new(Vec::new(), Vec::new())
    }
}

impl<T> SharedList<T> {
    /// Empty parts are dropped so iteration never walks dead branches.
    pub fn new(own: Vec<T>, parts: Vec<SharedList<T>>) -> Self {
        let parts: Vec<SharedList<T>> = parts.into_iter().filter(|p| !p.is_empty()).collect();
        let len = own.len() + parts.iter().map(|p| p.len()).sum::<usize>();
        SharedList(Rc::new(Node { own, parts, len }))
    }

    pub fn single(item: T) -> Self {
        SharedList::new(vec![item], Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len
    }

    pub fn is_empty(&self) -> bool {
        self.0.len == 0
    }

    /// First item in iteration order.
    pub fn first(&self) -> Option<&T> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_, T> {
        Iter {
            current: self.0.own.iter(),
            stack: self.0.parts.iter().rev().collect(),
        }
    }
}

impl<T: Clone> SharedList<T> {
    pub fn to_vec(&self) -> Vec<T> {
        let mut out = Vec::with_capacity(self.len());
        out.extend(self.iter().cloned());
        out
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for SharedList<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

pub struct Iter<'a, T> {
    current: std::slice::Iter<'a, T>,
    stack: Vec<&'a SharedList<T>>,
}

impl<'a, T> Iterator for Iter<'a, T> {
    type Item = &'a T;

    fn next(&mut self) -> Option<&'a T> {
        loop {
            if let Some(x) = self.current.next() {
                return Some(x);
            }
            let next = self.stack.pop()?;
            self.stack.extend(next.0.parts.iter().rev());
            self.current = next.0.own.iter();
        }
    }
}

impl<'a, T> IntoIterator for &'a SharedList<T> {
    type Item = &'a T;
    type IntoIter = Iter<'a, T>;

    fn into_iter(self) -> Iter<'a, T> {
        self.iter()
    }
}
