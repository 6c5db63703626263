use fht_core::analysis::{complexity_series, ComplexityRecord};
use fht_core::oracle::{count_additions_tree, slow_hough};
use fht_core::{fht2d, fht2d_counted, fht2d_pattern, Image, SplitStrategy};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn strategy() -> impl Strategy<Value = SplitStrategy> {
    prop_oneof![Just(SplitStrategy::Simple), Just(SplitStrategy::Tweaked)]
}

fn image(max_w: usize, max_h: usize, max_abs: i64) -> impl Strategy<Value = Image> {
    (1..=max_w, 1..=max_h).prop_flat_map(move |(w, h)| {
        proptest::collection::vec(-max_abs..=max_abs, w * h).prop_map(move |data| Image::new(w, h, data).unwrap())
    })
}

fn random_image(rng: &mut impl Rng, w: usize, h: usize) -> Image {
    Image::from_fn(w, h, |_, _| rng.gen_range(-1000..=1000)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matches_direct_pattern_sums(img in image(40, 40, 1 << 20), s in strategy()) {
        prop_assert_eq!(fht2d(&img, s).unwrap(), slow_hough(&img, s).unwrap());
    }

    #[test]
    fn every_cell_is_a_pattern_sum(img in image(24, 24, 255), s in strategy(), pick in any::<(usize, usize)>()) {
        let (w, h) = (img.width(), img.height());
        let (t, shift) = (pick.0 % w, pick.1 % h);
        let pat = fht2d_pattern(w, t, s).unwrap();
        let expected: i64 = (0..w).map(|x| img.get(x, (pat.values[x] as usize + shift) % h)).sum();
        prop_assert_eq!(fht2d(&img, s).unwrap().get(t, shift), expected);
    }

    #[test]
    fn linear(
        (a, b) in (1usize..30, 1usize..30).prop_flat_map(|(w, h)| {
            let v = proptest::collection::vec(-1000i64..1000, w * h);
            (v.clone(), v).prop_map(move |(a, b)| (Image::new(w, h, a).unwrap(), Image::new(w, h, b).unwrap()))
        }),
        alpha in -50i64..50,
        beta in -50i64..50,
        s in strategy(),
    ) {
        let mix = Image::new(a.width(), a.height(), a.data().iter().zip(b.data()).map(|(x, y)| alpha * x + beta * y).collect()).unwrap();
        let (ja, jb) = (fht2d(&a, s).unwrap(), fht2d(&b, s).unwrap());
        let expected: Vec<i64> = ja.data().iter().zip(jb.data()).map(|(x, y)| alpha * x + beta * y).collect();
        prop_assert_eq!(fht2d(&mix, s).unwrap().into_data(), expected);
    }

    #[test]
    fn shift_equivariant(img in image(30, 30, 1000), r in any::<usize>(), s in strategy()) {
        let r = r % img.height();
        let j = fht2d(&img, s).unwrap();
        let shifted = fht2d(&img.shift_rows(r), s).unwrap();
        for t in 0..j.width() {
            for sh in 0..j.height() {
                prop_assert_eq!(shifted.get(t, sh), j.get(t, (sh + r) % j.height()));
            }
        }
    }

    #[test]
    fn conserves_mass(img in image(40, 40, 1000), s in strategy()) {
        let total: i64 = img.data().iter().sum();
        let j = fht2d(&img, s).unwrap();
        for t in 0..j.width() {
            prop_assert_eq!((0..j.height()).map(|sh| j.get(t, sh)).sum::<i64>(), total);
        }
    }
}

#[test]
fn larger_rectangles_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (w, h) in [(33, 47), (100, 17), (65, 3), (129, 5), (3, 200)] {
        let img = random_image(&mut rng, w, h);
        for s in SplitStrategy::ALL {
            assert_eq!(fht2d(&img, s).unwrap(), slow_hough(&img, s).unwrap(), "{w}x{h} {s}");
        }
    }
}

#[test]
fn powers_of_two_coincide() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for q in 0..=8 {
        let n = 1 << q;
        let img = random_image(&mut rng, n, n);
        assert_eq!(
            fht2d(&img, SplitStrategy::Simple).unwrap(),
            fht2d(&img, SplitStrategy::Tweaked).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn instrumented_count_matches_tree_count() {
    for w in 1..=128 {
        for h in 1..=128 {
            let img = Image::zeros(w, h).unwrap();
            for s in SplitStrategy::ALL {
                let (_, counted) = fht2d_counted(&img, s).unwrap();
                assert_eq!(counted, count_additions_tree(w, h, s), "{w}x{h} {s}");
            }
        }
    }
}

#[test]
fn tweaked_peaks_within_octaves() {
    // On every [2^k, 2^(k+1)] the normalized tweaked count peaks at 2^k + 1.
    let rows = complexity_series(4096);
    for k in 1..12 {
        let (lo, hi) = (1usize << k, 1usize << (k + 1));
        let best = (lo..=hi)
            .max_by(|&a, &b| rows[a - 1].norm_tweaked.partial_cmp(&rows[b - 1].norm_tweaked).unwrap())
            .unwrap();
        assert_eq!(best, lo + 1, "k = {k}");
    }
    assert_eq!(ComplexityRecord::new(3).f_tweaked, 15);
}
