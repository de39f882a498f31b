#include "cycloschur/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace cycloschur {

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t degree) {
    std::vector<Integer> c(degree + 1);
    c[0] = -1;
    c[degree] += 1;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const Integer& c) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (sgn(lhs.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("IntPolynomial::divide_exact: division by zero polynomial");
    if (is_zero()) return {};
    if (degree() < divisor.degree()) throw std::domain_error("IntPolynomial::divide_exact: nonzero remainder");

    std::vector<Integer> rem = coeffs_;
    const std::size_t dd = divisor.coeffs_.size() - 1;
    std::vector<Integer> quot(rem.size() - dd);
    const Integer& lead = divisor.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Integer& top = rem[k + dd];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::domain_error("IntPolynomial::divide_exact: leading coefficient does not divide");
        Integer q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= q * divisor.coeffs_[i];
        quot[k] = std::move(q);
    }
    for (const auto& r : rem)
        if (sgn(r) != 0) throw std::domain_error("IntPolynomial::divide_exact: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Integer& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) os << mag;
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

// ---------------------------------------------------------------------------
// Totient, exponents, Phi_n

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

std::vector<std::uint64_t> primitive_exponents(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("primitive_exponents: n must be positive");
    std::vector<std::uint64_t> out;
    for (std::uint64_t a = 0; a < n; ++a)
        if (std::gcd(a, n) == 1) out.push_back(a);
    return out;
}

namespace {

struct PolyCache {
    std::shared_mutex mutex;
    std::map<std::uint64_t, std::unique_ptr<const IntPolynomial>> polys;
    std::map<std::uint64_t, std::shared_ptr<const CycloContext>> contexts;
};

PolyCache& poly_cache() {
    static PolyCache cache;
    return cache;
}

IntPolynomial compute_cyclotomic(std::uint64_t n) {
    IntPolynomial p = IntPolynomial::x_pow_minus_one(n);
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0) p = p.divide_exact(cyclotomic_poly(d));
    return p;
}

}  // namespace

const IntPolynomial& cyclotomic_poly(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be positive");
    auto& cache = poly_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.polys.find(n); it != cache.polys.end()) return *it->second;
    }
    // Computed outside the lock: the recursion re-enters for every divisor.
    auto fresh = std::make_unique<const IntPolynomial>(compute_cyclotomic(n));
    std::unique_lock lock(cache.mutex);
    auto [it, inserted] = cache.polys.try_emplace(n, std::move(fresh));
    return *it->second;
}

std::vector<Integer> inverse_cyclotomic_series(std::uint64_t n, std::size_t max_degree) {
    const IntPolynomial& phi = cyclotomic_poly(n);
    const Integer c0 = phi.coeff(0);  // +1 for n >= 2, -1 for n == 1
    std::vector<Integer> h(max_degree + 1);
    const auto& c = phi.coeffs();
    for (std::size_t k = 0; k <= max_degree; ++k) {
        Integer acc = (k == 0) ? Integer(1) : Integer(0);
        for (std::size_t i = 1; i <= k && i < c.size(); ++i) acc -= c[i] * h[k - i];
        h[k] = acc * c0;  // dividing by +-1
    }
    return h;
}

// ---------------------------------------------------------------------------
// Q(zeta_n)

std::shared_ptr<const CycloContext> CycloContext::get(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("CycloContext: conductor must be positive");
    auto& cache = poly_cache();
    {
        std::shared_lock lock(cache.mutex);
        if (auto it = cache.contexts.find(n); it != cache.contexts.end()) return it->second;
    }
    const IntPolynomial& phi = cyclotomic_poly(n);
    auto ctx = std::make_shared<CycloContext>();
    ctx->n = n;
    ctx->degree = static_cast<std::size_t>(phi.degree());
    ctx->modulus = phi.coeffs();
    std::unique_lock lock(cache.mutex);
    auto [it, inserted] = cache.contexts.try_emplace(n, std::move(ctx));
    return it->second;
}

namespace {

// Reduces coefficient vector `r` in place modulo the monic modulus, leaving
// `degree` entries.
template <class T>
void reduce_in_place(std::vector<T>& r, const std::vector<Integer>& modulus, std::size_t degree) {
    for (std::size_t k = r.size(); k-- > degree;) {
        if (sgn(r[k]) == 0) continue;
        const T top = r[k];
        for (std::size_t i = 0; i < degree; ++i) {
            if (sgn(modulus[i]) == 0) continue;
            r[k - degree + i] -= top * modulus[i];
        }
        r[k] = 0;
    }
    r.resize(degree);
}

// Rational polynomial helpers for the extended Euclidean algorithm.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Returns quotient; `a` becomes the remainder.
QPoly divmod(QPoly& a, const QPoly& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    QPoly q(a.size() - b.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational c = a[k + b.size() - 1] / b.back();
        if (sgn(c) == 0) continue;
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= c * b[i];
        q[k] = c;
    }
    trim(a);
    return q;
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly out = a;
    if (b.size() > out.size()) out.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    trim(out);
    return out;
}

}  // namespace

CycloElement::CycloElement(std::uint64_t n) : ctx_(CycloContext::get(n)), coeffs_(ctx_->degree) {}

CycloElement::CycloElement(std::uint64_t n, std::vector<Rational> coeffs) : ctx_(CycloContext::get(n)) {
    for (auto& c : coeffs) c.canonicalize();
    if (coeffs.size() > ctx_->degree) reduce_in_place(coeffs, ctx_->modulus, ctx_->degree);
    coeffs.resize(ctx_->degree);
    coeffs_ = std::move(coeffs);
}

CycloElement CycloElement::from_integer(std::uint64_t n, const Integer& value) {
    CycloElement e(n);
    e.coeffs_[0] = value;
    return e;
}

std::vector<Integer> reduce_mod_cyclotomic(std::uint64_t n, std::span<const Integer> coeffs) {
    auto ctx = CycloContext::get(n);
    std::vector<Integer> r(coeffs.begin(), coeffs.end());
    if (r.size() < ctx->degree) r.resize(ctx->degree);
    reduce_in_place(r, ctx->modulus, ctx->degree);
    return r;
}

std::vector<Integer> zeta_power_coordinates(std::uint64_t n, std::int64_t k) {
    if (n == 0) throw std::invalid_argument("zeta_power_coordinates: n must be positive");
    const auto nn = static_cast<std::int64_t>(n);
    const auto e = static_cast<std::size_t>(((k % nn) + nn) % nn);
    std::vector<Integer> x(e + 1);
    x[e] = 1;
    return reduce_mod_cyclotomic(n, x);
}

CycloElement CycloElement::zeta_power(std::uint64_t n, std::int64_t k) {
    auto coords = zeta_power_coordinates(n, k);
    std::vector<Rational> q(coords.begin(), coords.end());
    return CycloElement(n, std::move(q));
}

bool CycloElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

void CycloElement::require_same_field(const CycloElement& other) const {
    if (ctx_->n != other.ctx_->n)
        throw std::invalid_argument("CycloElement: conductor mismatch (" + std::to_string(ctx_->n) + " vs " +
                                    std::to_string(other.ctx_->n) + ")");
}

CycloElement& CycloElement::operator+=(const CycloElement& rhs) {
    require_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& rhs) {
    require_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& rhs) {
    require_same_field(rhs);
    const std::size_t d = ctx_->degree;
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (sgn(rhs.coeffs_[j]) == 0) continue;
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    reduce_in_place(prod, ctx_->modulus, d);
    coeffs_ = std::move(prod);
    return *this;
}

CycloElement& CycloElement::operator/=(const CycloElement& rhs) { return *this *= rhs.inverse(); }

CycloElement CycloElement::operator-() const {
    CycloElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

bool operator==(const CycloElement& a, const CycloElement& b) {
    return a.ctx_->n == b.ctx_->n && a.coeffs_ == b.coeffs_;
}

CycloElement CycloElement::inverse() const {
    if (is_zero()) throw std::domain_error("CycloElement::inverse: zero has no inverse");
    // Invariant: s_i * a == r_i (mod Phi_n).
    QPoly r0(ctx_->modulus.begin(), ctx_->modulus.end());
    QPoly r1 = coeffs_;
    trim(r1);
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        QPoly q = divmod(r0, r1);
        std::swap(r0, r1);
        QPoly s2 = sub(s0, mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant since Phi_n is irreducible.
    const Rational c = r1.at(0);
    for (auto& x : s1) x /= c;
    return CycloElement(ctx_->n, std::move(s1));
}

std::optional<Integer> CycloElement::to_rational_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (sgn(coeffs_[i]) != 0) return std::nullopt;
    if (coeffs_[0].get_den() != 1) return std::nullopt;
    return Integer(coeffs_[0].get_num());
}

std::string CycloElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (sgn(coeffs_[k]) == 0) continue;
        if (!first) os << (sgn(coeffs_[k]) < 0 ? " - " : " + ");
        else if (sgn(coeffs_[k]) < 0) os << "-";
        first = false;
        Rational mag = abs(coeffs_[k]);
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << (k == 0 || mag != 1 ? "*" : "") << "z";
        if (k >= 2) os << "^" << k;
    }
    return first ? "0" : os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloElement& a) { return os << a.to_string(); }

}  // namespace cycloschur
