//! Deterministic math primitives: 3-vectors, spherical/equirectangular
//! mappings, solid angles, GGX half-vector sampling, and seeded RNG streams.

use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PI: f32 = std::f32::consts::PI;
pub const TWO_PI: f32 = 2.0 * PI;

/// A 3-component vector. Directions are unit length, radiances are linear HDR.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Vec3 {
    pub x: f32,
    pub y: f32,
    pub z: f32,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3 {
        x: 0.0,
        y: 0.0,
        z: 0.0,
    };

    pub fn new(x: f32, y: f32, z: f32) -> Self {
        Vec3 { x, y, z }
    }

    pub fn splat(v: f32) -> Self {
        Vec3 { x: v, y: v, z: v }
    }

    pub fn dot(self, o: Vec3) -> f32 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn length(self) -> f32 {
        self.dot(self).sqrt()
    }

    pub fn normalized(self) -> Vec3 {
        let len = self.length();
        if len > 0.0 {
            self / len
        } else {
            Vec3::ZERO
        }
    }

    pub fn min_component(self) -> f32 {
        self.x.min(self.y).min(self.z)
    }

    pub fn max_component(self) -> f32 {
        self.x.max(self.y).max(self.z)
    }

    pub fn mean(self) -> f32 {
        (self.x + self.y + self.z) / 3.0
    }

    /// Componentwise product.
    pub fn hadamard(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x * o.x, self.y * o.y, self.z * o.z)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f32; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f32; 3]> for Vec3 {
    fn from(a: [f32; 3]) -> Self {
        Vec3::new(a[0], a[1], a[2])
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3 {
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f32> for Vec3 {
    type Output = Vec3;
    fn mul(self, s: f32) -> Vec3 {
        Vec3::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Vec3> for f32 {
    type Output = Vec3;
    fn mul(self, v: Vec3) -> Vec3 {
        v * self
    }
}

impl Div<f32> for Vec3 {
    type Output = Vec3;
    fn div(self, s: f32) -> Vec3 {
        Vec3::new(self.x / s, self.y / s, self.z / s)
    }
}

/// Equirectangular convention used throughout: +Y is up,
/// `u = 0.5 + atan2(x, z) / 2pi`, `v = acos(clamp(y, -1, 1)) / pi`.
/// Computed in f64 so the round trip stays below 1e-5 radians.
pub fn dir_to_equirect(d: Vec3) -> (f32, f32) {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut u = 0.5 + (d.x as f64).atan2(d.z as f64) / two_pi;
    if u >= 1.0 {
        u -= 1.0;
    }
    if u < 0.0 {
        u += 1.0;
    }
    let v = (d.y as f64).clamp(-1.0, 1.0).acos() / std::f64::consts::PI;
    (
        (u as f32).min(1.0 - f32::EPSILON),
        (v as f32).clamp(0.0, 1.0),
    )
}

/// Inverse of [`dir_to_equirect`].
pub fn equirect_to_dir(u: f32, v: f32) -> Vec3 {
    let theta = v as f64 * std::f64::consts::PI;
    let phi = (u as f64 - 0.5) * 2.0 * std::f64::consts::PI;
    let sin_t = theta.sin();
    Vec3::new(
        (phi.sin() * sin_t) as f32,
        theta.cos() as f32,
        (phi.cos() * sin_t) as f32,
    )
}

/// Solid angle of one texel in row `row` of a `width x height`
/// equirectangular map, using the texel-center polar angle.
pub fn texel_solid_angle(row: usize, width: usize, height: usize) -> f32 {
    debug_assert!(row < height);
    let theta = (row as f64 + 0.5) * std::f64::consts::PI / height as f64;
    let dphi = 2.0 * std::f64::consts::PI / width as f64;
    let dtheta = std::f64::consts::PI / height as f64;
    (dphi * dtheta * theta.sin()) as f32
}

/// Mirror `v` about `n`: `r = 2 (v.n) n - v`. Both inputs unit length.
pub fn reflect(v: Vec3, n: Vec3) -> Vec3 {
    n * (2.0 * v.dot(n)) - v
}

/// Orthonormal basis completing `n` (Duff et al. branchless construction).
pub fn orthonormal_basis(n: Vec3) -> (Vec3, Vec3) {
    let sign = 1.0_f32.copysign(n.z);
    let a = -1.0 / (sign + n.z);
    let b = n.x * n.y * a;
    let t = Vec3::new(1.0 + sign * n.x * n.x * a, sign * b, -sign * n.x);
    let bt = Vec3::new(b, sign + n.y * n.y * a, -n.y);
    (t, bt)
}

/// GGX microfacet distribution `D(alpha, cos_nh)`.
pub fn ggx_d(alpha: f32, cos_nh: f32) -> f32 {
    let a2 = alpha * alpha;
    let c2 = cos_nh * cos_nh;
    let denom = c2 * (a2 - 1.0) + 1.0;
    a2 / (PI * denom * denom)
}

/// Sample a half vector `h` proportional to `D(h) (n.h)` about `n`
/// (Walter 2007 inversion `tan^2 theta = alpha^2 xi / (1 - xi)`).
/// Returns the world-space half vector and its pdf per steradian.
pub fn sample_ggx_half(rng: &mut RngStream, alpha: f32, n: Vec3) -> (Vec3, f32) {
    let xi1 = rng.next_f32();
    let xi2 = rng.next_f32();
    let a2 = alpha * alpha;
    // cos^2 = (1 - xi) / (1 - xi + a2 xi), clamped away from the pole at xi -> 1
    let denom = 1.0 - xi1 + a2 * xi1;
    let cos_t = ((1.0 - xi1) / denom).max(0.0).sqrt().min(1.0);
    let sin_t = (1.0 - cos_t * cos_t).max(0.0).sqrt();
    let phi = TWO_PI * xi2;
    let (t, b) = orthonormal_basis(n);
    let h = (t * (phi.cos() * sin_t) + b * (phi.sin() * sin_t) + n * cos_t).normalized();
    let pdf = ggx_d(alpha, cos_t) * cos_t;
    (h, pdf)
}

/// Cosine-weighted hemisphere sample about `n`; pdf = cos(theta) / pi.
pub fn sample_cosine_hemisphere(rng: &mut RngStream, n: Vec3) -> (Vec3, f32) {
    let xi1 = rng.next_f32();
    let xi2 = rng.next_f32();
    let r = xi1.sqrt();
    let phi = TWO_PI * xi2;
    let cos_t = (1.0 - xi1).max(0.0).sqrt();
    let (t, b) = orthonormal_basis(n);
    let d = (t * (r * phi.cos()) + b * (r * phi.sin()) + n * cos_t).normalized();
    (d, (cos_t / PI).max(1e-12))
}

/// Point `i` of `n` on a Fibonacci spiral over the unit sphere.
pub fn fibonacci_sphere(i: usize, n: usize) -> Vec3 {
    let golden = (1.0 + 5.0_f64.sqrt()) / 2.0;
    let y = 1.0 - 2.0 * (i as f64 + 0.5) / n as f64;
    let r = (1.0 - y * y).max(0.0).sqrt();
    let phi = 2.0 * std::f64::consts::PI * (i as f64 / golden).fract();
    Vec3::new((phi.cos() * r) as f32, y as f32, (phi.sin() * r) as f32)
}

/// A counter-seeded deterministic RNG stream. Identical `(seed, stream)`
/// pairs produce identical sequences on every thread and platform.
pub struct RngStream {
    rng: ChaCha8Rng,
}

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        RngStream { rng }
    }

    /// Uniform in [0, 1) with 24 bits of precision.
    pub fn next_f32(&mut self) -> f32 {
        (self.rng.next_u32() >> 8) as f32 * (1.0 / 16_777_216.0)
    }

    /// Uniform in [lo, hi).
    pub fn next_range(&mut self, lo: f32, hi: f32) -> f32 {
        lo + (hi - lo) * self.next_f32()
    }

    pub fn next_u32(&mut self) -> u32 {
        self.rng.next_u32()
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform integer in [0, n).
    pub fn next_index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// Standard normal via Box-Muller.
    pub fn next_normal(&mut self) -> f32 {
        let u1 = self.next_f32().max(1e-12);
        let u2 = self.next_f32();
        (-2.0 * u1.ln()).sqrt() * (TWO_PI * u2).cos()
    }

    /// Fisher-Yates shuffle of `0..n`.
    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.next_index(i + 1);
            p.swap(i, j);
        }
        p
    }

    /// A random derangement of `0..n` (no fixed points), n >= 2.
    /// Rejection sampling over Fisher-Yates shuffles.
    pub fn derangement(&mut self, n: usize) -> Vec<usize> {
        debug_assert!(n >= 2);
        loop {
            let p = self.permutation(n);
            if p.iter().enumerate().all(|(i, &j)| i != j) {
                return p;
            }
        }
    }
}
