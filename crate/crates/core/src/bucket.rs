use std::cmp::Reverse;
use std::collections::BinaryHeap;

const REMOVED: usize = usize::MAX;

/// Min-priority bucket queue over dense integer items with small integer keys.
///
/// Items sharing a key are popped in ascending item order. Each bucket is a
/// lazy min-heap: a decrement pushes the item one bucket down and leaves a
/// stale copy behind, which is skipped when it surfaces.
#[derive(Debug)]
pub(crate) struct BucketQueue {
    buckets: Vec<BinaryHeap<Reverse<usize>>>,
    key: Vec<usize>,
    min: usize,
    len: usize,
}

impl BucketQueue {
    pub(crate) fn new(keys: &[usize]) -> Self {
        let max = keys.iter().copied().max().unwrap_or(0);
        let mut lists = vec![Vec::new(); max + 1];
        for (item, &k) in keys.iter().enumerate() {
            lists[k].push(Reverse(item));
        }
        Self {
            buckets: lists.into_iter().map(BinaryHeap::from).collect(),
            key: keys.to_vec(),
            min: 0,
            len: keys.len(),
        }
    }

    pub(crate) fn contains(&self, item: usize) -> bool {
        self.key[item] != REMOVED
    }

    /// Removes the item with the smallest key, lowest id first.
    pub(crate) fn pop_min(&mut self) -> Option<(usize, usize)> {
        if self.len == 0 {
            return None;
        }
        loop {
            let bucket = &mut self.buckets[self.min];
            match bucket.pop() {
                Some(Reverse(item)) if self.key[item] == self.min => {
                    self.key[item] = REMOVED;
                    self.len -= 1;
                    return Some((item, self.min));
                }
                Some(_) => {}
                None => self.min += 1,
            }
        }
    }

    pub(crate) fn decrement(&mut self, item: usize) {
        let k = self.key[item];
        debug_assert!(
            k != REMOVED && k > 0,
            "decrement of removed or zero-key item"
        );
        self.buckets[k - 1].push(Reverse(item));
        self.key[item] = k - 1;
        if k - 1 < self.min {
            self.min = k - 1;
        }
    }
}
