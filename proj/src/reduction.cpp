#include "cycloschur/reduction.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace cycloschur {

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

RationalVector to_rational(const std::vector<Integer>& v) { return RationalVector(v.begin(), v.end()); }

RationalVector map_vector(const RationalMatrix& m, const RationalVector& v) {
    RationalVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(v[j]) != 0) out[i] += m(i, j) * v[j];
    return out;
}

SplitCertificate certify(std::uint64_t target, RationalMatrix map, VectorSystem source) {
    const VectorSystem roots = z_n_system(target);
    if (map.rows() != roots.ambient_dim() || map.cols() != source.ambient_dim())
        throw std::logic_error("certify: map shape does not match the spaces");
    SplitCertificate cert{target, std::move(map), std::move(source), Rational(0), false, false};
    cert.determinant = det_exact(cert.map);
    cert.invertible = sgn(cert.determinant) != 0;

    std::set<RationalVector> image;
    for (const auto& v : cert.source.vectors()) image.insert(map_vector(cert.map, v));
    const std::set<RationalVector> expected(roots.vectors().begin(), roots.vectors().end());
    cert.image_matches = cert.source.size() == roots.size() && image == expected;
    return cert;
}

}  // namespace

ConditionStarReport condition_star(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("condition_star: n must be positive");
    ConditionStarReport r;
    r.n = n;
    for (const auto& [p, e] : factorize(n))
        if (p != 2) r.odd_prime_factors.push_back(p);
    r.satisfied = r.odd_prime_factors.size() <= 2;
    return r;
}

FactorShape factor_shape(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor_shape: n must be positive");
    FactorShape shape;
    shape.n = n;
    for (const auto& [p, e] : factorize(n)) {
        if (p == 2) shape.two_exponent = e;
        else shape.odd_parts.emplace_back(p, e);
    }
    if (shape.odd_parts.size() > 2)
        throw std::domain_error("factor_shape: " + std::to_string(n) + " has more than two distinct odd primes");
    return shape;
}

VectorSystem z_n_system(std::uint64_t n) {
    if (n <= 1) throw std::invalid_argument("z_n_system: n must be at least 2");
    const std::size_t d = euler_phi(n);
    std::vector<RationalVector> vs;
    vs.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) vs.push_back(to_rational(zeta_power_coordinates(n, static_cast<std::int64_t>(k))));
    return VectorSystem(d, std::move(vs));
}

VectorSystem omega_n_system(std::uint64_t n) { return z_n_system(n); }

SplitCertificate coprime_split(std::uint64_t a, std::uint64_t b) {
    if (a < 2 || b < 2) throw std::invalid_argument("coprime_split: both factors must be at least 2");
    if (std::gcd(a, b) != 1)
        throw std::invalid_argument("coprime_split: " + std::to_string(a) + " and " + std::to_string(b) + " are not coprime");
    const std::uint64_t n = a * b;
    const std::size_t da = euler_phi(a), db = euler_phi(b);
    // zeta_a = zeta_n^b and zeta_b = zeta_n^a.
    std::vector<std::vector<Rational>> columns;
    columns.reserve(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < db; ++j)
            columns.push_back(to_rational(zeta_power_coordinates(n, static_cast<std::int64_t>(b * i + a * j))));
    return certify(n, RationalMatrix::from_columns(euler_phi(n), columns), tensor_product(z_n_system(a), z_n_system(b)));
}

SplitCertificate prime_power_split(std::uint64_t p, unsigned l) {
    if (!is_prime(p)) throw std::invalid_argument("prime_power_split: " + std::to_string(p) + " is not prime");
    if (l == 0) throw std::invalid_argument("prime_power_split: exponent must be at least 1");
    const std::uint64_t copies = ipow(p, l - 1);
    const std::uint64_t q = copies * p;
    const std::size_t dp = p - 1;
    // Copy j, basis element zeta_p^i = zeta_q^(copies * i), goes to zeta_q^(j + copies * i).
    std::vector<std::vector<Rational>> columns;
    columns.reserve(copies * dp);
    for (std::uint64_t j = 0; j < copies; ++j)
        for (std::size_t i = 0; i < dp; ++i)
            columns.push_back(to_rational(zeta_power_coordinates(q, static_cast<std::int64_t>(j + copies * i))));

    const VectorSystem zp = z_n_system(p);
    VectorSystem source = zp;
    for (std::uint64_t j = 1; j < copies; ++j) source = disjoint_sum(source, zp);
    return certify(q, RationalMatrix::from_columns(euler_phi(q), columns), std::move(source));
}

SplitCertificate factorization_certificate(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("factorization_certificate: n must be at least 2");
    const auto factors = factorize(n);
    SplitCertificate acc = prime_power_split(factors.front().first, factors.front().second);
    for (std::size_t k = 1; k < factors.size(); ++k) {
        const auto [p, l] = factors[k];
        SplitCertificate next = prime_power_split(p, l);
        SplitCertificate join = coprime_split(acc.target, next.target);
        acc = certify(acc.target * next.target, join.map * kronecker(acc.map, next.map),
                      tensor_product(acc.source, next.source));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// End-to-end verifier

bool TheoremVerdict::consistent() const {
    return star.satisfied == direct.pass && direct.pass == structural.pass;
}

namespace {

std::uint64_t box_size(std::uint64_t length, std::uint64_t part) {
    // binomial(length + part, length), saturating
    const std::uint64_t k = std::min(length, part);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (length + part - k + i) / i;
        if (r > ~std::uint64_t{0}) return ~std::uint64_t{0};
    }
    return static_cast<std::uint64_t>(r);
}

DirectCheck run_direct(std::uint64_t n, int max_part, std::uint64_t budget) {
    DirectCheck check;
    const std::size_t d = euler_phi(n);
    if (box_size(d, static_cast<std::uint64_t>(max_part)) <= budget) {
        const SchurBoxSummary summary = schur_box_summary(n, d, max_part, 1);
        check.complete = true;
        check.partitions = summary.partitions;
        check.pass = summary.all_in_unit_set();
        if (!summary.violations.empty()) check.counterexample = summary.violations.front();
        return check;
    }
    check.pass = true;
    check.complete = true;
    for_each_partition_in_box(d, max_part, [&](const Partition& lambda) {
        if (check.partitions == budget) {
            check.complete = false;
            return false;
        }
        ++check.partitions;
        Integer value = schur_at_roots(n, lambda);
        if (abs(value) > 1) {
            check.pass = false;
            check.complete = false;
            check.counterexample.emplace(lambda, std::move(value));
            return false;
        }
        return true;
    });
    return check;
}

StructuralCheck run_structural(std::uint64_t n, const VerifyOptions& options) {
    StructuralCheck check;
    const VectorSystem roots = z_n_system(n);
    const UnimodularReport report = is_unimodular_system(roots, options.subset_budget);
    if (report.verdict != UnimodularVerdict::budget_exceeded) {
        check.mode = CheckMode::exhaustive;
        check.pass = report.unimodular();
        check.abs_det = report.abs_det;
        check.witness = report.witness;
        return check;
    }
    check.mode = CheckMode::sampled;
    check.witness = find_nonunimodular_witness(roots, options.witness_budget, options.seed);
    check.pass = !check.witness.has_value();
    return check;
}

}  // namespace

TheoremVerdict verify_theorem(std::uint64_t n, int max_part, const VerifyOptions& options) {
    if (n < 2) throw std::invalid_argument("verify_theorem: n must be at least 2");
    if (max_part < 0) throw std::invalid_argument("verify_theorem: max_part must be nonnegative");
    TheoremVerdict verdict;
    verdict.n = n;
    verdict.max_part = max_part;
    verdict.star = condition_star(n);
    verdict.direct = run_direct(n, max_part, options.partition_budget);
    verdict.structural = run_structural(n, options);
    return verdict;
}

}  // namespace cycloschur
