//! Multiset of small nonnegative vertex values (residual degrees) answering
//! "sum of the `t` largest values" under single-unit updates.
//!
//! Values are bucketed by magnitude into a Fenwick tree holding per-bucket
//! counts and sums, so updates and queries cost O(log max_value).

pub(crate) struct TopSum {
    values: Vec<u32>,
    // Fenwick arrays over the value axis, 1-based internally.
    cnt: Vec<u64>,
    sum: Vec<u64>,
    size: usize,
    total_sum: u64,
}

impl TopSum {
    pub fn new(values: Vec<u32>) -> Self {
        let max_value = values.iter().copied().max().unwrap_or(0) as usize;
        let size = max_value + 1;
        let mut ts = TopSum {
            values: Vec::new(),
            cnt: vec![0; size + 1],
            sum: vec![0; size + 1],
            size,
            total_sum: 0,
        };
        for &v in &values {
            ts.add(v);
        }
        ts.values = values;
        ts
    }

    fn add(&mut self, value: u32) {
        self.total_sum += value as u64;
        let mut i = value as usize + 1;
        while i <= self.size {
            self.cnt[i] += 1;
            self.sum[i] += value as u64;
            i += i & i.wrapping_neg();
        }
    }

    fn remove(&mut self, value: u32) {
        self.total_sum -= value as u64;
        let mut i = value as usize + 1;
        while i <= self.size {
            self.cnt[i] -= 1;
            self.sum[i] -= value as u64;
            i += i & i.wrapping_neg();
        }
    }

    pub fn decrement(&mut self, slot: usize) {
        let v = self.values[slot];
        debug_assert!(v > 0);
        self.remove(v);
        self.add(v - 1);
        self.values[slot] = v - 1;
    }

    pub fn increment(&mut self, slot: usize) {
        let v = self.values[slot];
        // Bucket for v + 1 must exist; callers never raise a value past the
        // maximum seen at construction.
        debug_assert!((v as usize) + 2 <= self.size);
        self.remove(v);
        self.add(v + 1);
        self.values[slot] = v + 1;
    }

    /// Count and sum of values `<= bound`.
    fn prefix(&self, bound: usize) -> (u64, u64) {
        let mut i = bound + 1;
        let (mut c, mut s) = (0, 0);
        while i > 0 {
            c += self.cnt[i];
            s += self.sum[i];
            i -= i & i.wrapping_neg();
        }
        (c, s)
    }

    /// Sum of the `t` largest values in the multiset.
    pub fn top_sum(&self, t: usize) -> u64 {
        let n = self.values.len();
        debug_assert!(t <= n);
        if t == 0 {
            return 0;
        }
        if t >= n {
            return self.total_sum;
        }
        // Smallest value bucket v such that at least n - t values are <= v;
        // everything above v plus the needed copies of v form the top t.
        let need = (n - t) as u64;
        let mut v = 0usize;
        let (mut c, mut s) = (0u64, 0u64);
        let mut step = self.size.next_power_of_two();
        while step > 0 {
            let next = v + step;
            if next <= self.size && c + self.cnt[next] < need {
                c += self.cnt[next];
                s += self.sum[next];
                v = next;
            }
            step /= 2;
        }
        // After the descent, (c, s) cover buckets [0, v) in Fenwick terms and
        // bucket index v is the first whose inclusion reaches `need`.
        let value = v as u64; // bucket index == value
        let (c_incl, s_incl) = (c + self.count_at(v), s + self.sum_at(v));
        debug_assert!(c_incl >= need && c < need);
        let extra = c_incl - need; // copies of `value` that belong to the top t
        self.total_sum - s_incl + extra * value
    }

    fn count_at(&self, value: usize) -> u64 {
        let (c_hi, _) = self.prefix(value);
        let (c_lo, _) = if value == 0 {
            (0, 0)
        } else {
            self.prefix(value - 1)
        };
        c_hi - c_lo
    }

    fn sum_at(&self, value: usize) -> u64 {
        self.count_at(value) * value as u64
    }
}
