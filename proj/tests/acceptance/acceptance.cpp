// Acceptance suite: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails. Time limits are wall-clock seconds measured here.

#include "cycloschur/reduction.hpp"
#include "../oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace cycloschur;

namespace {

constexpr double kLimitCyclotomic = 10.0;
constexpr double kLimitDeskSweep = 180.0;
constexpr double kLimitCounterexample = 5.0;
constexpr double kLimitOracleAgreement = 120.0;
constexpr double kLimitTensorProducts = 120.0;
constexpr double kLimitCertificates = 30.0;

constexpr std::uint64_t kWitnessSeeds[] = {1, 2, 3, 4, 5};
constexpr std::uint64_t kIntegralitySeed = 20240601;
constexpr int kIntegralitySamples = 200;
constexpr int kIntegralitySamples105 = 10;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << secs << " s";
    if (limit_seconds > 0) {
        line << " (limit " << limit_seconds << " s)";
        if (secs >= limit_seconds) {
            out.pass = false;
            out.detail += "; over time limit";
        }
    }
    if (!out.pass) ++failures;
    std::printf("[%s] criterion %d: %s: %s; %s\n", out.pass ? "PASS" : "FAIL", id, title, out.detail.c_str(),
                line.str().c_str());
    std::fflush(stdout);
}

Partition random_partition(std::mt19937_64& rng, std::size_t max_length, int max_part) {
    std::vector<int> parts(max_length);
    for (auto& p : parts) p = static_cast<int>(rng() % static_cast<std::uint64_t>(max_part + 1));
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

VectorSystem random_sign_system(std::mt19937_64& rng, std::size_t dim, std::size_t count) {
    while (true) {
        std::vector<RationalVector> vs;
        while (vs.size() < count) {
            RationalVector v(dim);
            bool nonzero = false;
            for (auto& x : v) {
                x = static_cast<long>(rng() % 3) - 1;
                nonzero = nonzero || sgn(x) != 0;
            }
            if (nonzero) vs.push_back(std::move(v));
        }
        RationalMatrix m(dim, count);
        for (std::size_t j = 0; j < count; ++j)
            for (std::size_t i = 0; i < dim; ++i) m(i, j) = vs[j][i];
        if (rank_exact(m) == dim) return VectorSystem(dim, std::move(vs));
    }
}

Outcome cyclotomic_baseline() {
    for (std::uint64_t n = 1; n <= 104; ++n)
        for (const auto& c : cyclotomic_poly(n).coeffs())
            if (abs(c) > 1) return {false, "coefficient " + c.get_str() + " in Phi_" + std::to_string(n)};
    const auto& p = cyclotomic_poly(105);
    const auto mobius = oracle::phi_mobius(105);
    if (p.coeffs() != mobius) return {false, "Phi_105 differs from the Moebius product"};
    if (p.coeff(7) != -2) return {false, "coefficient of x^7 in Phi_105 is " + p.coeff(7).get_str()};
    return {true, "n <= 104 all in {1,0,-1}; Phi_105 x^7 coefficient -2 (Moebius product agrees)"};
}

Outcome desk_sweep() {
    // n = 1 is outside the evaluator's domain (Q(zeta_1) = Q); sweep 2..30.
    std::uint64_t total = 0;
    for (std::uint64_t n = 2; n <= 30; ++n) {
        const auto s = schur_box_summary(n, euler_phi(n), 8, 1);
        total += s.partitions;
        if (!s.all_in_unit_set()) {
            const auto& [lambda, value] = s.violations.front();
            std::ostringstream os;
            os << "n=" << n << " lambda=" << lambda << " value " << value;
            return {false, os.str()};
        }
    }
    return {true, std::to_string(total) + " partitions over n=2..30, box (phi(n), 8), all in {-1,0,1}"};
}

Outcome counterexample() {
    const Integer v = schur_at_roots(105, Partition::column(7));
    const bool star = condition_star(105).satisfied;
    std::ostringstream os;
    os << "s_(1^7) at n=105 is " << v << ", condition holds: " << (star ? "yes" : "no");
    return {abs(v) == 2 && !star, os.str()};
}

Outcome oracle_agreement() {
    std::uint64_t compared = 0;
    for (std::uint64_t n = 2; n <= 12; ++n)
        for (const auto& lambda : partitions_in_box(euler_phi(n), 5)) {
            ++compared;
            const Integer jt = schur_at_roots(n, lambda);
            const Integer bi = schur_at_roots_bialternant(n, lambda);
            if (jt != bi) {
                std::ostringstream os;
                os << "n=" << n << " lambda=" << lambda << ": " << jt << " vs " << bi;
                return {false, os.str()};
            }
        }
    return {true, std::to_string(compared) + " partitions agree for n <= 12, box (phi(n), 5)"};
}

Outcome tensor_products() {
    std::string detail;
    for (auto [a, b] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
        const auto r = is_unimodular_system(tensor_product(maximal_circuit(a), maximal_circuit(b)));
        detail += "(" + std::to_string(a) + "," + std::to_string(b) + "):" + to_string(r.verdict) + " ";
        if (!r.unimodular()) return {false, detail};
    }
    detail.pop_back();
    return {true, detail};
}

Outcome network_construction() {
    const auto built = bipartite_construction(2, 3);
    const auto expected = RationalMatrix::from_rows({{1, -1, 0, 0, -1, 0},
                                                      {1, -1, 0, 0, 0, -1},
                                                      {1, 0, -1, 0, -1, 0},
                                                      {1, 0, -1, 0, 0, -1},
                                                      {1, 0, 0, -1, -1, 0},
                                                      {1, 0, 0, -1, 0, -1}});
    if (built.a != expected) return {false, "(2,3) matrix differs from the expected one"};
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto c = bipartite_construction(m, n);
            if (network_matrix(c.network) != c.a.transpose())
                return {false, "transpose mismatch at (" + std::to_string(m) + "," + std::to_string(n) + ")"};
        }
    const auto tu = is_totally_unimodular(expected);
    if (tu.mode != CheckMode::exhaustive || !tu.totally_unimodular) return {false, "(2,3) matrix fails exhaustive TU"};
    return {true, "(2,3) matrix reproduced; transpose is the network matrix for m,n <= 4; exhaustive TU ("
                      + std::to_string(tu.submatrices_checked) + " submatrices)"};
}

Outcome closure_families() {
    std::mt19937_64 rng(7);
    int sums = 0, signs = 0, augmented = 0;

    // Disjoint sums of unimodular systems.
    while (sums < 40) {
        const auto x = random_sign_system(rng, 1 + rng() % 3, 4);
        const auto y = random_sign_system(rng, 1 + rng() % 3, 4);
        if (!is_unimodular_system(x).unimodular() || !is_unimodular_system(y).unimodular()) continue;
        if (!is_unimodular_system(disjoint_sum(x, y)).unimodular()) return {false, "disjoint sum lost unimodularity"};
        ++sums;
    }
    // {1, -1} (x) X keeps the verdict either way.
    for (; signs < 60; ++signs) {
        const std::size_t dim = 1 + rng() % 3;
        const auto x = random_sign_system(rng, dim, dim + 1 + rng() % 3);
        if (is_unimodular_system(tensor_product(maximal_circuit(1), x)).unimodular() != is_unimodular_system(x).unimodular())
            return {false, "sign extension changed the verdict"};
    }
    // [A | I] on TU matrices with at most 4 rows.
    TuOptions exhaustive;
    exhaustive.max_exhaustive_entries = 4 * 9;
    exhaustive.max_exhaustive_min_dim = 4;
    while (augmented < 40) {
        const auto a = oracle::random_sign_matrix(1 + rng() % 4, 1 + rng() % 5, rng);
        if (!oracle::brute_tu(a)) continue;
        const auto r = is_totally_unimodular(augment_identity(a), exhaustive);
        if (r.mode != CheckMode::exhaustive || !r.totally_unimodular) return {false, "[A|I] failed TU for\n" + a.to_string()};
        ++augmented;
    }
    return {true, std::to_string(sums) + " disjoint sums, " + std::to_string(signs) + " sign extensions, " +
                      std::to_string(augmented) + " identity augmentations"};
}

Outcome certificates() {
    const auto c35 = coprime_split(3, 5);
    const auto c29 = coprime_split(2, 9);
    const auto p32 = prime_power_split(3, 2);
    const auto n18 = factorization_certificate(18);
    const auto p23 = prime_power_split(2, 3);
    const auto describe = [](const char* name, const SplitCertificate& c) {
        return std::string(name) + (c.holds() ? " ok" : " FAILED");
    };
    const bool ok = c35.holds() && c29.holds() && p32.holds() && n18.holds() && p23.holds();
    return {ok, describe("coprime(3,5)", c35) + ", " + describe("coprime(2,9)", c29) + ", " +
                    describe("prime_power(3,2)", p32) + ", " + describe("composed 18", n18) + ", " +
                    describe("prime_power(2,3)", p23)};
}

Outcome witness_search() {
    const auto x = tensor_product(tensor_product(maximal_circuit(2), maximal_circuit(4)), maximal_circuit(6));
    std::string detail;
    int found = 0;
    for (auto seed : kWitnessSeeds) {
        const auto w = find_nonunimodular_witness(x, kDefaultWitnessBudget, seed);
        detail += "seed " + std::to_string(seed) + ": ";
        if (w && w->first_abs_det != w->second_abs_det && abs(x.determinant(w->first)) == w->first_abs_det &&
            abs(x.determinant(w->second)) == w->second_abs_det) {
            ++found;
            detail += "|det| " + w->first_abs_det.get_str() + " vs " + w->second_abs_det.get_str() + "; ";
        } else {
            detail += "none; ";
        }
    }
    detail += std::to_string(found) + "/5 seeds found a witness";
    return {found > 0, detail};
}

Outcome integrality() {
    std::mt19937_64 rng(kIntegralitySeed);
    int done = 0;
    for (int i = 0; i < kIntegralitySamples; ++i) {
        const std::uint64_t n = 2 + rng() % 19;
        const auto lambda = random_partition(rng, euler_phi(n), 1 + static_cast<int>(rng() % 8));
        if (schur_at_roots_bialternant(n, lambda) != schur_at_roots(n, lambda)) return {false, "disagreement at n=" + std::to_string(n)};
        ++done;
    }
    int done105 = 0;
    for (int i = 0; i < kIntegralitySamples105; ++i) {
        const auto lambda = random_partition(rng, euler_phi(105), 1 + static_cast<int>(rng() % 4));
        if (schur_at_roots_bialternant(105, lambda) != schur_at_roots(105, lambda)) return {false, "disagreement at n=105"};
        ++done105;
    }
    return {true, std::to_string(done) + " samples with n <= 20 and " + std::to_string(done105) +
                      " at n=105 extract to integers matching Jacobi-Trudi"};
}

}  // namespace

int main() {
    run(1, "cyclotomic coefficients", kLimitCyclotomic, cyclotomic_baseline);
    run(2, "Schur values at desk scale", kLimitDeskSweep, desk_sweep);
    run(3, "counterexample at n=105", kLimitCounterexample, counterexample);
    run(4, "Jacobi-Trudi vs bialternant", kLimitOracleAgreement, oracle_agreement);
    run(5, "tensor products of maximal circuits", kLimitTensorProducts, tensor_products);
    run(6, "bipartite network construction", 0, network_construction);
    run(7, "disjoint sum, sign extension and augmentation families", 0, closure_families);
    run(8, "splitting certificates", kLimitCertificates, certificates);
    run(9, "non-unimodularity witness for (2,4,6)", 0, witness_search);
    run(10, "bialternant integrality", 0, integrality);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
