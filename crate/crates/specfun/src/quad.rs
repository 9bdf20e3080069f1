//! Globally adaptive 21-point Gauss-Kronrod quadrature.

use num_complex::Complex64;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_980_876_681,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Gauss weights for the odd-indexed Kronrod nodes.
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

/// Values that can be integrated: a real vector space with a norm.
pub trait QuadValue: Copy {
    fn zero() -> Self;
    fn add(self, other: Self) -> Self;
    fn scale(self, s: f64) -> Self;
    fn norm(&self) -> f64;

    fn sub(self, other: Self) -> Self {
        self.add(other.scale(-1.0))
    }
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn norm(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn norm(&self) -> f64 {
        Complex64::norm(*self)
    }
}

impl<T: QuadValue, const N: usize> QuadValue for [T; N] {
    fn zero() -> Self {
        [T::zero(); N]
    }
    fn add(mut self, other: Self) -> Self {
        for (a, b) in self.iter_mut().zip(other) {
            *a = a.add(b);
        }
        self
    }
    fn scale(mut self, s: f64) -> Self {
        for a in self.iter_mut() {
            *a = a.scale(s);
        }
        self
    }
    fn norm(&self) -> f64 {
        self.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct QuadOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Tolerance relative to the integral of the integrand's norm, for
    /// integrals with cancellation.
    pub mass_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions { abs_tol: 0.0, rel_tol: 1e-13, mass_tol: 0.0, max_intervals: 5000 }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct QuadResult<T> {
    pub value: T,
    pub abs_error: f64,
    /// Estimate of the integral of the norm of the integrand.
    pub abs_integral: f64,
    pub intervals: usize,
    pub converged: bool,
}

struct Panel<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
    abs_value: f64,
}

impl<T> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T> Eq for Panel<T> {}
impl<T> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<T: QuadValue, F: FnMut(f64) -> T>(f: &mut F, a: f64, b: f64) -> Panel<T> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut fv = [T::zero(); 21];
    fv[10] = f(center);
    for i in 0..10 {
        let dx = half * XGK[i];
        fv[i] = f(center - dx);
        fv[20 - i] = f(center + dx);
    }
    let mut kron = fv[10].scale(WGK[10]);
    let mut gauss = T::zero();
    let mut abs_k = fv[10].norm() * WGK[10];
    for i in 0..10 {
        let pair = fv[i].add(fv[20 - i]);
        kron = kron.add(pair.scale(WGK[i]));
        abs_k += WGK[i] * (fv[i].norm() + fv[20 - i].norm());
        if i % 2 == 1 {
            gauss = gauss.add(pair.scale(WG[i / 2]));
        }
    }
    let mean = kron.scale(0.5);
    let mut asc = WGK[10] * fv[10].sub(mean).norm();
    for i in 0..10 {
        asc += WGK[i] * (fv[i].sub(mean).norm() + fv[20 - i].sub(mean).norm());
    }
    let value = kron.scale(half);
    let abs_value = abs_k * half.abs();
    let asc = asc * half.abs();
    let diff = kron.sub(gauss).norm() * half.abs();
    let mut error = diff;
    if asc != 0.0 && diff != 0.0 {
        error = asc * (200.0 * diff / asc).powf(1.5).min(1.0);
    }
    if abs_value > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * abs_value);
    }
    if !value.norm().is_finite() {
        error = f64::INFINITY;
    }
    Panel { a, b, value, error, abs_value }
}

/// Integrates `f` over `[points[0], points[last]]`, with the interior points
/// used as initial breakpoints.
pub fn integrate<T, F>(mut f: F, points: &[f64], opts: &QuadOptions) -> QuadResult<T>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    assert!(points.len() >= 2, "need at least two points");
    let mut heap = BinaryHeap::new();
    let mut done: Vec<Panel<T>> = Vec::new();
    for win in points.windows(2) {
        if win[1] != win[0] {
            heap.push(kronrod(&mut f, win[0], win[1]));
        }
    }
    let totals = |heap: &BinaryHeap<Panel<T>>, done: &Vec<Panel<T>>| {
        let mut v = T::zero();
        let mut e = 0.0;
        let mut mass = 0.0;
        for p in heap.iter().chain(done.iter()) {
            v = v.add(p.value);
            e += p.error;
            mass += p.abs_value;
        }
        (v, e, mass)
    };
    let (mut value, mut error, mut mass) = totals(&heap, &done);
    let mut converged = true;
    let mut iterations = 0usize;
    loop {
        let tol = opts.abs_tol.max(opts.rel_tol * value.norm()).max(opts.mass_tol * mass);
        if error <= tol || heap.is_empty() {
            break;
        }
        if heap.len() + done.len() >= opts.max_intervals {
            converged = false;
            break;
        }
        let worst = heap.pop().expect("heap not empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a.min(worst.b) || mid >= worst.a.max(worst.b) {
            done.push(worst);
            continue;
        }
        let left = kronrod(&mut f, worst.a, mid);
        let right = kronrod(&mut f, mid, worst.b);
        value = value.sub(worst.value).add(left.value).add(right.value);
        error += left.error + right.error - worst.error;
        mass += left.abs_value + right.abs_value - worst.abs_value;
        heap.push(left);
        heap.push(right);
        iterations += 1;
        if iterations % 64 == 0 {
            (value, error, mass) = totals(&heap, &done);
        }
    }
    let (value, error, abs_integral) = totals(&heap, &done);
    if !error.is_finite() {
        converged = false;
    }
    QuadResult { value, abs_error: error, abs_integral, intervals: heap.len() + done.len(), converged }
}
