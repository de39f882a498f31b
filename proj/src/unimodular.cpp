#include "cycloschur/unimodular.hpp"

#include "cycloschur/parallel.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace cycloschur {

// ---------------------------------------------------------------------------
// VectorSystem

VectorSystem::VectorSystem(std::size_t ambient_dim, std::vector<RationalVector> vectors)
    : dim_(ambient_dim), vectors_(std::move(vectors)) {
    if (dim_ == 0) throw std::invalid_argument("VectorSystem: ambient dimension must be positive");
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        const auto& v = vectors_[i];
        if (v.size() != dim_)
            throw std::invalid_argument("VectorSystem: vector " + std::to_string(i) + " has length " +
                                        std::to_string(v.size()) + ", expected " + std::to_string(dim_));
        if (std::all_of(v.begin(), v.end(), [](const Rational& c) { return sgn(c) == 0; }))
            throw std::invalid_argument("VectorSystem: vector " + std::to_string(i) + " is zero");
    }
    if (rank_exact(as_matrix()) != dim_) throw std::invalid_argument("VectorSystem: vectors do not span the space");
}

VectorSystem VectorSystem::from_integer_vectors(std::size_t ambient_dim, const std::vector<std::vector<long>>& vectors) {
    std::vector<RationalVector> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) out.emplace_back(v.begin(), v.end());
    return VectorSystem(ambient_dim, std::move(out));
}

RationalMatrix VectorSystem::as_matrix() const { return RationalMatrix::from_columns(dim_, vectors_); }

Rational VectorSystem::determinant(std::span<const std::size_t> indices) const {
    if (indices.size() != dim_) throw std::invalid_argument("VectorSystem::determinant: need exactly dim indices");
    RationalMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t i = 0; i < dim_; ++i) m(i, j) = vectors_.at(indices[j])[i];
    return det_exact(m);
}

namespace {

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

// Uniform integer in [0, bound) from a 64-bit engine, independent of the
// standard library's distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

template <class It>
void shuffle_with(It first, It last, std::mt19937_64& rng) {
    const auto n = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = n; i > 1; --i) std::swap(first[i - 1], first[draw(rng, i)]);
}

// Scales every vector to an integer vector; returns the per-vector scale
// factors (original = scaled / factor).
std::vector<std::vector<Integer>> integer_columns(const std::vector<RationalVector>& vs, std::vector<Integer>& scales) {
    std::vector<std::vector<Integer>> out;
    out.reserve(vs.size());
    scales.clear();
    for (const auto& v : vs) {
        Integer l = 1;
        for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        std::vector<Integer> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].get_num() * (l / v[i].get_den());
        out.push_back(std::move(w));
        scales.push_back(l);
    }
    return out;
}

bool is_unit_or_zero(const Rational& x) { return sgn(x) == 0 || abs(x) == 1; }

}  // namespace

// ---------------------------------------------------------------------------
// Total unimodularity

std::string to_string(CheckMode mode) { return mode == CheckMode::exhaustive ? "exhaustive" : "sampled"; }

namespace {

// Square-submatrix determinant of an integral {-1,0,1} matrix.
Integer small_det(const std::vector<std::vector<std::int64_t>>& a, std::span<const std::size_t> rows,
                  std::span<const std::size_t> cols) {
    const std::size_t k = rows.size();
    std::vector<Integer> m(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m[i * k + j] = a[rows[i]][cols[j]];
    return bareiss_determinant(std::move(m), k);
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
    std::vector<std::size_t> c(k);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    // partial Fisher-Yates
    for (std::size_t i = 0; i < k; ++i) std::swap(all[i], all[i + draw(rng, n - i)]);
    all.resize(k);
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

TuResult is_totally_unimodular(const RationalMatrix& m, const TuOptions& options) {
    TuResult result;
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t max_k = std::min(rows, cols);
    result.mode = (rows * cols <= options.max_exhaustive_entries && max_k <= options.max_exhaustive_min_dim)
                      ? CheckMode::exhaustive
                      : CheckMode::sampled;

    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            ++result.submatrices_checked;
            if (!is_unit_or_zero(m(r, c))) {
                result.witness = SubmatrixWitness{{r}, {c}, m(r, c)};
                return result;
            }
            a[r][c] = m(r, c).get_num().get_si();
        }

    auto check = [&](std::span<const std::size_t> rs, std::span<const std::size_t> cs) {
        ++result.submatrices_checked;
        Integer det = small_det(a, rs, cs);
        if (abs(det) > 1) {
            result.witness = SubmatrixWitness{{rs.begin(), rs.end()}, {cs.begin(), cs.end()}, Rational(det)};
            return false;
        }
        return true;
    };

    if (result.mode == CheckMode::exhaustive) {
        for (std::size_t k = 2; k <= max_k; ++k) {
            auto rs = first_combination(k);
            do {
                auto cs = first_combination(k);
                do {
                    if (!check(rs, cs)) return result;
                } while (next_combination(cs, cols));
            } while (next_combination(rs, rows));
        }
    } else if (max_k >= 2) {
        std::mt19937_64 rng(options.seed);
        for (std::uint64_t s = 0; s < options.samples; ++s) {
            const std::size_t k = 2 + draw(rng, max_k - 1);
            auto rs = random_subset(rng, rows, k);
            auto cs = random_subset(rng, cols, k);
            if (!check(rs, cs)) return result;
        }
    }
    result.totally_unimodular = true;
    return result;
}

RationalMatrix augment_identity(const RationalMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    RationalMatrix out(m, n + m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = a(r, c);
        out(r, n + r) = 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Unimodular systems

std::string to_string(UnimodularVerdict verdict) {
    switch (verdict) {
        case UnimodularVerdict::unimodular: return "unimodular";
        case UnimodularVerdict::not_unimodular: return "not_unimodular";
        case UnimodularVerdict::budget_exceeded: return "budget_exceeded";
    }
    return "unknown";
}

namespace {

struct BasisTally {
    std::uint64_t bases = 0;
    std::uint64_t singular = 0;
    std::optional<std::pair<std::vector<std::size_t>, Rational>> first;
    std::optional<std::pair<std::vector<std::size_t>, Rational>> first_different;
};

template <class T>
class BasisSweep {
public:
    BasisSweep(std::vector<std::vector<T>> columns, std::vector<Integer> scales, std::size_t dim)
        : columns_(std::move(columns)), scales_(std::move(scales)), dim_(dim) {}

    // All subsets whose smallest index is `lead`.
    BasisTally run(std::size_t lead) const {
        BasisTally tally;
        IncrementalBareiss<T> elim(dim_);
        std::vector<std::size_t> chosen;
        chosen.reserve(dim_);
        const std::size_t n = columns_.size();
        if (!elim.push(std::span<const T>(columns_[lead]))) {
            tally.singular += saturating_binomial(n - lead - 1, dim_ - 1);
            return tally;
        }
        chosen.push_back(lead);
        descend(lead + 1, elim, chosen, tally);
        return tally;
    }

private:
    void descend(std::size_t start, IncrementalBareiss<T>& elim, std::vector<std::size_t>& chosen,
                 BasisTally& tally) const {
        const std::size_t depth = chosen.size();
        if (depth == dim_) {
            record(elim.determinant(), chosen, tally);
            return;
        }
        const std::size_t n = columns_.size();
        const std::size_t need = dim_ - depth;
        for (std::size_t idx = start; idx + need <= n; ++idx) {
            if (elim.push(std::span<const T>(columns_[idx]))) {
                chosen.push_back(idx);
                descend(idx + 1, elim, chosen, tally);
                chosen.pop_back();
                elim.pop();
            } else {
                tally.singular += saturating_binomial(n - idx - 1, need - 1);
            }
        }
    }

    void record(const T& det, const std::vector<std::size_t>& chosen, BasisTally& tally) const {
        ++tally.bases;
        Integer num;
        if constexpr (std::is_same_v<T, Integer>) num = abs(det);
        else num = Integer(static_cast<long>(det < 0 ? -det : det));
        Integer den = 1;
        for (std::size_t i : chosen) den *= scales_[i];
        Rational value(num, den);
        value.canonicalize();
        if (!tally.first) {
            tally.first.emplace(chosen, value);
        } else if (!tally.first_different && value != tally.first->second) {
            tally.first_different.emplace(chosen, value);
        }
    }

    std::vector<std::vector<T>> columns_;
    std::vector<Integer> scales_;
    std::size_t dim_;
};

template <class T>
T convert(const Integer& v) {
    if constexpr (std::is_same_v<T, Integer>) return v;
    else return static_cast<T>(v.get_si());
}

template <class T>
std::vector<BasisTally> sweep_bases(const std::vector<std::vector<Integer>>& cols, std::vector<Integer> scales,
                                    std::size_t dim) {
    std::vector<std::vector<T>> typed;
    typed.reserve(cols.size());
    for (const auto& c : cols) {
        std::vector<T> t;
        t.reserve(c.size());
        for (const auto& v : c) t.push_back(convert<T>(v));
        typed.push_back(std::move(t));
    }
    BasisSweep<T> sweep(std::move(typed), std::move(scales), dim);
    const std::size_t leads = cols.size() - dim + 1;
    std::vector<BasisTally> tallies(leads);
    parallel_for(leads, [&](std::size_t lead) { tallies[lead] = sweep.run(lead); });
    return tallies;
}

}  // namespace

UnimodularReport is_unimodular_system(const VectorSystem& x, std::uint64_t budget) {
    UnimodularReport report;
    const std::size_t dim = x.ambient_dim();
    const std::size_t n = x.size();
    if (saturating_binomial(n, dim) > budget) {
        report.verdict = UnimodularVerdict::budget_exceeded;
        return report;
    }
    std::vector<Integer> scales;
    const auto cols = integer_columns(x.vectors(), scales);

    // Minor bound over the `dim` largest column norms.
    std::vector<double> norms;
    norms.reserve(n);
    for (const auto& c : cols) norms.push_back(log2_minor_bound(std::span(&c, 1)));
    std::sort(norms.begin(), norms.end(), std::greater<>());
    const bool small = fits_int64_bareiss(std::accumulate(norms.begin(), norms.begin() + static_cast<std::ptrdiff_t>(dim), 0.0));

    std::vector<BasisTally> tallies = small ? sweep_bases<std::int64_t>(cols, scales, dim)
                                            : sweep_bases<Integer>(cols, scales, dim);

    // Merge in lexicographic order of the leading index.
    std::optional<std::pair<std::vector<std::size_t>, Rational>> first, different;
    for (auto& t : tallies) {
        report.bases += t.bases;
        report.singular_subsets += t.singular;
        if (!t.first) continue;
        if (!first) {
            first = t.first;
            different = t.first_different;
        } else if (!different) {
            if (t.first->second != first->second) different = t.first;
            else if (t.first_different) different = t.first_different;
        }
    }
    // A spanning system always contains a basis.
    report.abs_det = first->second;
    if (different) {
        report.verdict = UnimodularVerdict::not_unimodular;
        report.witness = BasisPair{first->first, different->first, first->second, different->second};
    } else {
        report.verdict = UnimodularVerdict::unimodular;
    }
    return report;
}

VectorSystem maximal_circuit(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("maximal_circuit: dimension must be positive");
    std::vector<RationalVector> vs;
    for (std::size_t i = 0; i < dim; ++i) {
        RationalVector e(dim);
        e[i] = 1;
        vs.push_back(std::move(e));
    }
    vs.emplace_back(dim, Rational(-1));
    return VectorSystem(dim, std::move(vs));
}

bool is_maximal_circuit(const VectorSystem& x) {
    if (x.size() != x.ambient_dim() + 1) return false;
    if (rank_exact(x.as_matrix()) != x.ambient_dim()) return false;
    RationalVector sum(x.ambient_dim());
    for (const auto& v : x.vectors())
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
    return std::all_of(sum.begin(), sum.end(), [](const Rational& c) { return sgn(c) == 0; });
}

VectorSystem tensor_product(const VectorSystem& x, const VectorSystem& y) {
    const std::size_t m = x.ambient_dim(), n = y.ambient_dim();
    std::vector<RationalVector> out;
    out.reserve(x.size() * y.size());
    for (const auto& u : x.vectors())
        for (const auto& v : y.vectors()) {
            RationalVector w(m * n);
            for (std::size_t a = 0; a < m; ++a) {
                if (sgn(u[a]) == 0) continue;
                for (std::size_t b = 0; b < n; ++b) w[a * n + b] = u[a] * v[b];
            }
            out.push_back(std::move(w));
        }
    return VectorSystem(m * n, std::move(out));
}

VectorSystem disjoint_sum(const VectorSystem& x, const VectorSystem& y) {
    const std::size_t m = x.ambient_dim(), n = y.ambient_dim();
    std::vector<RationalVector> out;
    out.reserve(x.size() + y.size());
    for (const auto& u : x.vectors()) {
        RationalVector w(m + n);
        std::copy(u.begin(), u.end(), w.begin());
        out.push_back(std::move(w));
    }
    for (const auto& v : y.vectors()) {
        RationalVector w(m + n);
        std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(m));
        out.push_back(std::move(w));
    }
    return VectorSystem(m + n, std::move(out));
}

// ---------------------------------------------------------------------------
// Witness search

namespace {

// Random basis: indices in shuffled order, kept when independent of those
// already chosen.
std::vector<std::size_t> random_basis(const std::vector<std::vector<Integer>>& cols, std::size_t dim,
                                      std::mt19937_64& rng) {
    std::vector<std::size_t> order(cols.size());
    std::iota(order.begin(), order.end(), 0);
    shuffle_with(order.begin(), order.end(), rng);
    IncrementalBareiss<Integer> elim(dim);
    std::vector<std::size_t> basis;
    for (std::size_t idx : order) {
        if (basis.size() == dim) break;
        if (elim.push(std::span<const Integer>(cols[idx]))) basis.push_back(idx);
    }
    return basis;
}

BasisPair make_pair(const VectorSystem& x, std::vector<std::size_t> basis, std::size_t row, std::size_t column) {
    std::vector<std::size_t> other = basis;
    other[row] = column;
    std::sort(basis.begin(), basis.end());
    std::sort(other.begin(), other.end());
    Rational d1 = abs(x.determinant(basis));
    Rational d2 = abs(x.determinant(other));
    return BasisPair{std::move(basis), std::move(other), d1, d2};
}

}  // namespace

std::optional<BasisPair> find_nonunimodular_witness(const VectorSystem& x, std::uint64_t budget, std::uint64_t seed) {
    const std::size_t dim = x.ambient_dim();
    const std::size_t n = x.size();
    if (n <= dim) return std::nullopt;  // a single basis
    std::mt19937_64 rng(seed);
    std::vector<Integer> scales;
    const auto cols = integer_columns(x.vectors(), scales);
    const RationalMatrix all = x.as_matrix();
    const std::uint64_t restart_every = 16 * static_cast<std::uint64_t>(dim) + 16;

    std::uint64_t spent = 0;
    while (true) {
        std::vector<std::size_t> basis = random_basis(cols, dim, rng);
        RationalMatrix b(dim, dim);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t i = 0; i < dim; ++i) b(i, j) = x[basis[j]][i];
        const RationalMatrix tableau = inverse_exact(b) * all;

        // Any entry outside {-1, 0, 1} already separates two bases.
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!is_unit_or_zero(tableau(i, j))) return make_pair(x, basis, i, j);

        // From here every pivot is on a +-1 entry, so the tableau stays
        // integral and a new entry of magnitude 2 is the first sign of a
        // determinant jump.
        std::vector<std::vector<int>> t(dim, std::vector<int>(n));
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < n; ++j) t[i][j] = static_cast<int>(tableau(i, j).get_num().get_si());
        std::vector<char> in_basis(n, 0);
        for (std::size_t idx : basis) in_basis[idx] = 1;

        std::vector<std::pair<std::size_t, std::size_t>> moves;
        for (std::uint64_t step = 0; step < restart_every; ++step) {
            if (spent >= budget) return std::nullopt;
            moves.clear();
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (!in_basis[j] && t[i][j] != 0) moves.emplace_back(i, j);
            if (moves.empty()) return std::nullopt;  // only one basis reachable
            const auto [pi, pj] = moves[draw(rng, moves.size())];
            ++spent;
            const int p = t[pi][pj];
            for (std::size_t j = 0; j < n; ++j) t[pi][j] *= p;  // divide by +-1
            for (std::size_t i = 0; i < dim; ++i) {
                if (i == pi || t[i][pj] == 0) continue;
                const int f = t[i][pj];
                for (std::size_t j = 0; j < n; ++j) t[i][j] -= f * t[pi][j];
            }
            in_basis[basis[pi]] = 0;
            in_basis[pj] = 1;
            basis[pi] = pj;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (t[i][j] > 1 || t[i][j] < -1) return make_pair(x, basis, i, j);
        }
        if (spent >= budget) return std::nullopt;
    }
}

}  // namespace cycloschur
