#include "expspline/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace expspline {

namespace {

bool is_pow2(std::size_t n) { return n && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

} // namespace

void fft_pow2(std::vector<Cplx>& a, int sign) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
        const Cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            Cplx w = 1.0;
            for (std::size_t k = 0; k < len / 2; ++k) {
                Cplx u = a[i + k];
                Cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<Cplx> dft(const std::vector<Cplx>& x, int sign) {
    const std::size_t n = x.size();
    if (n == 0) return {};
    if (is_pow2(n)) {
        std::vector<Cplx> a = x;
        fft_pow2(a, sign);
        return a;
    }
    // Bluestein: jk = (j^2 + k^2 - (j-k)^2) / 2.
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<Cplx> a(m, 0.0), b(m, 0.0);
    std::vector<Cplx> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        // k^2/2 mod N, exact in double for the sizes used here (k^2 < 2^53)
        const double ang = sign * M_PI * static_cast<double>(k) * static_cast<double>(k) /
                           static_cast<double>(n);
        chirp[k] = Cplx(std::cos(ang), std::sin(ang));
        a[k] = x[k] * chirp[k];
        b[k] = std::conj(chirp[k]);
        if (k > 0) b[m - k] = b[k];
    }
    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, +1);
    std::vector<Cplx> out(n);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t j = 0; j < n; ++j) out[j] = a[j] * inv_m * chirp[j];
    return out;
}

std::vector<Cplx> idft(const std::vector<Cplx>& x) {
    std::vector<Cplx> out = dft(x, +1);
    const double inv_n = 1.0 / static_cast<double>(x.size());
    for (auto& v : out) v *= inv_n;
    return out;
}

} // namespace expspline
