use std::time::Instant;

use roundfold_core::census::{enumerate_pages, PageFilter};

fn main() {
    for s_max in 1..=roundfold_core::census::MAX_CRITICAL {
        let t = Instant::now();
        let pages = enumerate_pages(s_max, PageFilter::default()).unwrap();
        let top = pages.iter().filter(|p| p.critical_count() == s_max).count();
        println!(
            "s<={s_max}: {} classes ({top} at s={s_max}) in {:?}",
            pages.len(),
            t.elapsed()
        );
    }
}
