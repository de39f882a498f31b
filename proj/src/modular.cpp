#include "cycloschur/modular.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace cycloschur {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 b, u64 e, u64 p) {
    u64 r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, b, p);
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> out;
    for (u64 q = 2; q * q <= n; ++q) {
        if (n % q) continue;
        out.push_back(q);
        while (n % q == 0) n /= q;
    }
    if (n > 1) out.push_back(n);
    return out;
}

u64 primitive_root_of_unity(u64 n, u64 p) {
    const auto qs = prime_divisors(n);
    for (u64 g = 2;; ++g) {
        const u64 r = pow_mod(g, (p - 1) / n, p);
        bool primitive = true;
        for (u64 q : qs)
            if (pow_mod(r, n / q, p) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return r;
    }
}

// Gaussian elimination mod p; destroys `a`.
u64 det_mod(std::vector<u64>& a, std::size_t size, u64 p) {
    u64 det = 1;
    for (std::size_t k = 0; k < size; ++k) {
        std::size_t pr = k;
        while (pr < size && a[pr * size + k] == 0) ++pr;
        if (pr == size) return 0;
        if (pr != k) {
            for (std::size_t c = k; c < size; ++c) std::swap(a[k * size + c], a[pr * size + c]);
            det = p - det;
        }
        const u64 pivot = a[k * size + k];
        det = mul_mod(det, pivot, p);
        const u64 inv = inv_mod(pivot, p);
        for (std::size_t r = k + 1; r < size; ++r) {
            const u64 f = mul_mod(a[r * size + k], inv, p);
            if (f == 0) continue;
            const u64 nf = p - f;
            for (std::size_t c = k + 1; c < size; ++c)
                a[r * size + c] = static_cast<u64>((static_cast<u128>(a[k * size + c]) * nf + a[r * size + c]) % p);
        }
    }
    return det % p;
}

// Solves m x = b mod p for invertible m (row-major, size x size).
std::vector<u64> solve_mod(std::vector<u64> m, std::vector<u64> b, std::size_t size, u64 p) {
    for (std::size_t k = 0; k < size; ++k) {
        std::size_t pr = k;
        while (pr < size && m[pr * size + k] == 0) ++pr;
        if (pr == size) throw std::logic_error("solve_mod: singular embedding matrix");
        if (pr != k) {
            for (std::size_t c = 0; c < size; ++c) std::swap(m[k * size + c], m[pr * size + c]);
            std::swap(b[k], b[pr]);
        }
        const u64 inv = inv_mod(m[k * size + k], p);
        for (std::size_t c = k; c < size; ++c) m[k * size + c] = mul_mod(m[k * size + c], inv, p);
        b[k] = mul_mod(b[k], inv, p);
        for (std::size_t r = 0; r < size; ++r) {
            if (r == k || m[r * size + k] == 0) continue;
            const u64 nf = p - m[r * size + k];
            for (std::size_t c = k; c < size; ++c)
                m[r * size + c] = static_cast<u64>((static_cast<u128>(m[k * size + c]) * nf + m[r * size + c]) % p);
            b[r] = static_cast<u64>((static_cast<u128>(b[k]) * nf + b[r]) % p);
        }
    }
    return b;
}

// log2 of the max row sum of |V^-1|, V_kj = exp(2 pi i a_k j / n).
double log2_embedding_inverse_norm(u64 n) {
    static std::mutex mutex;
    static std::map<u64, double> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    using C = std::complex<double>;
    const auto exps = primitive_exponents(n);
    const std::size_t d = exps.size();
    std::vector<C> v(d * d), inv(d * d);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t j = 0; j < d; ++j)
            v[k * d + j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((exps[k] * j) % n) / static_cast<double>(n));
        inv[k * d + k] = 1.0;
    }
    for (std::size_t k = 0; k < d; ++k) {
        std::size_t pr = k;
        for (std::size_t r = k + 1; r < d; ++r)
            if (std::abs(v[r * d + k]) > std::abs(v[pr * d + k])) pr = r;
        for (std::size_t c = 0; c < d; ++c) {
            std::swap(v[k * d + c], v[pr * d + c]);
            std::swap(inv[k * d + c], inv[pr * d + c]);
        }
        const C piv = v[k * d + k];
        for (std::size_t c = 0; c < d; ++c) {
            v[k * d + c] /= piv;
            inv[k * d + c] /= piv;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r == k) continue;
            const C f = v[r * d + k];
            for (std::size_t c = 0; c < d; ++c) {
                v[r * d + c] -= f * v[k * d + c];
                inv[r * d + c] -= f * inv[k * d + c];
            }
        }
    }
    double worst = 0;
    for (std::size_t r = 0; r < d; ++r) {
        double sum = 0;
        for (std::size_t c = 0; c < d; ++c) sum += std::abs(inv[r * d + c]);
        worst = std::max(worst, sum);
    }
    const double bits = std::log2(std::max(worst, 1.0));
    std::lock_guard lock(mutex);
    cache.emplace(n, bits);
    return bits;
}

}  // namespace

bool is_prime_u64(u64 p) {
    if (p < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (p % q == 0) return p == q;
    }
    u64 d = p - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s && composite; ++i) {
            x = mul_mod(x, x, p);
            if (x == p - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

u64 split_prime(u64 n, std::size_t k) {
    if (n == 0) throw std::invalid_argument("split_prime: n must be positive");
    static std::mutex mutex;
    static std::map<u64, std::vector<u64>> cache;
    std::lock_guard lock(mutex);
    auto& primes = cache[n];
    u64 next = primes.empty() ? ((u64{1} << 62) - 1) / n * n + 1 : primes.back() - n;
    if (next >= (u64{1} << 62)) next -= n;
    while (primes.size() <= k) {
        while (!is_prime_u64(next)) next -= n;
        primes.push_back(next);
        next -= n;
    }
    return primes[k];
}

CycloElement root_power_determinant(u64 n, std::span<const u64> exponents, std::size_t size) {
    if (n == 0) throw std::invalid_argument("root_power_determinant: n must be positive");
    if (exponents.size() != size * size) throw std::invalid_argument("root_power_determinant: table is not square");
    if (size == 0) return CycloElement::one(n);
    const auto exps = primitive_exponents(n);
    const std::size_t d = exps.size();

    const double half = static_cast<double>(size) / 2.0;
    const double bound_bits = half * std::log2(static_cast<double>(size)) + log2_embedding_inverse_norm(n) + 16.0;

    std::vector<Integer> coords(d, 0);
    Integer modulus = 1;
    std::vector<u64> table(n), work(size * size), values(d), vander(d * d);
    for (std::size_t prime_index = 0; static_cast<double>(mpz_sizeinbase(modulus.get_mpz_t(), 2)) - 1.0 < bound_bits + 1.0; ++prime_index) {
        const u64 p = split_prime(n, prime_index);
        const u64 r = primitive_root_of_unity(n, p);
        for (std::size_t k = 0; k < d; ++k) {
            const u64 rk = pow_mod(r, exps[k], p);
            table[0] = 1;
            for (u64 t = 1; t < n; ++t) table[t] = mul_mod(table[t - 1], rk, p);
            for (std::size_t i = 0; i < size * size; ++i) work[i] = table[exponents[i] % n];
            values[k] = det_mod(work, size, p);
            for (std::size_t j = 0; j < d; ++j) vander[k * d + j] = table[j];
        }
        const std::vector<u64> residues = solve_mod(vander, values, d, p);

        // CRT: x = coords + modulus * ((res - coords) * modulus^-1 mod p)
        const Integer pz(std::to_string(p));
        const u64 m_inv = inv_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        for (std::size_t j = 0; j < d; ++j) {
            const u64 cur = mpz_fdiv_ui(coords[j].get_mpz_t(), p);
            const u64 diff = (residues[j] + p - cur) % p;
            const u64 t = mul_mod(diff, m_inv, p);
            coords[j] += modulus * Integer(std::to_string(t));
        }
        modulus *= pz;
    }
    const Integer half_modulus = modulus / 2;
    std::vector<Rational> out(d);
    for (std::size_t j = 0; j < d; ++j) {
        if (coords[j] > half_modulus) coords[j] -= modulus;
        out[j] = Rational(coords[j]);
    }
    return CycloElement(n, std::move(out));
}

}  // namespace cycloschur
