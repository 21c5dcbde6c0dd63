//! Ordered map over independent jobs, parallel when the `parallel` feature is on.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Parallel,
    Sequential,
}

impl Default for Mode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

/// Applies `f` to every item and returns the results in input order.
/// Without the `parallel` feature, `Mode::Parallel` runs sequentially.
pub fn map<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_keep_order() {
        let xs: Vec<u64> = (0..200).collect();
        let sq = |x: &u64| x * x;
        assert_eq!(map(Mode::Parallel, &xs, sq), map(Mode::Sequential, &xs, sq));
        assert_eq!(map(Mode::Sequential, &xs, sq)[7], 49);
    }
}
