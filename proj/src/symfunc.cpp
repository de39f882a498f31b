#include "cycloschur/symfunc.hpp"

#include "cycloschur/linalg.hpp"
#include "cycloschur/modular.hpp"
#include "cycloschur/parallel.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace cycloschur {

// ---------------------------------------------------------------------------
// Partition / Composition

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    parts_ = std::move(parts);
}

Partition Partition::column(int k) { return Partition(std::vector<int>(static_cast<std::size_t>(std::max(k, 0)), 1)); }

Partition Partition::row(int k) { return k <= 0 ? Partition() : Partition(std::vector<int>{k}); }

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

Partition Partition::conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(largest()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("Composition: negative entry");
}

Composition Composition::staircase(std::size_t d) {
    std::vector<int> e(d);
    for (std::size_t i = 0; i < d; ++i) e[i] = static_cast<int>(d - 1 - i);
    return Composition(std::move(e));
}

Composition Composition::shifted(const Partition& lambda, std::size_t d) {
    if (lambda.length() > d) throw std::invalid_argument("Composition::shifted: partition longer than d");
    std::vector<int> e(d);
    for (std::size_t i = 0; i < d; ++i) e[i] = static_cast<int>(d - 1 - i) + lambda[i];
    return Composition(std::move(e));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Partitions of `remaining` into at most `slots` parts each <= `cap`, in
// lexicographically decreasing order.
bool visit_weight(int remaining, std::size_t slots, int cap, std::vector<int>& prefix,
                  const std::function<bool(const Partition&)>& visit) {
    if (remaining == 0) return visit(Partition(prefix));
    if (slots == 0) return true;
    const int hi = std::min(cap, remaining);
    const int lo = (remaining + static_cast<int>(slots) - 1) / static_cast<int>(slots);
    for (int part = hi; part >= lo; --part) {
        prefix.push_back(part);
        const bool go_on = visit_weight(remaining - part, slots - 1, part, prefix, visit);
        prefix.pop_back();
        if (!go_on) return false;
    }
    return true;
}

bool box_order_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return b.parts() < a.parts();
}

}  // namespace

void for_each_partition_in_box(std::size_t max_length, int max_part,
                               const std::function<bool(const Partition&)>& visit) {
    const int cap = std::max(max_part, 0);
    const int max_weight = static_cast<int>(max_length) * cap;
    std::vector<int> prefix;
    for (int w = 0; w <= max_weight; ++w)
        if (!visit_weight(w, max_length, cap, prefix, visit)) return;
}

std::vector<Partition> partitions_in_box(std::size_t max_length, int max_part) {
    std::vector<Partition> out;
    for_each_partition_in_box(max_length, max_part, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// e_k and h_k at the primitive roots

namespace {

// Memoized h_0.. per conductor. Readers share; a writer replaces the vector
// with a longer one, so handed-out snapshots stay valid.
class CompleteCache {
public:
    std::shared_ptr<const std::vector<Integer>> get(std::uint64_t n, std::size_t upto) {
        {
            std::shared_lock lock(mutex_);
            auto it = series_.find(n);
            if (it != series_.end() && it->second->size() > upto) return it->second;
        }
        auto fresh = std::make_shared<const std::vector<Integer>>(
            inverse_cyclotomic_series(n, std::max<std::size_t>(upto, 64)));
        std::unique_lock lock(mutex_);
        auto& slot = series_[n];
        if (!slot || slot->size() < fresh->size()) slot = fresh;
        return slot;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::uint64_t, std::shared_ptr<const std::vector<Integer>>> series_;
};

CompleteCache& complete_cache() {
    static CompleteCache cache;
    return cache;
}

// e_0..e_upto (zero past phi(n)).
std::vector<Integer> elementary_sequence(std::uint64_t n, std::size_t upto) {
    const IntPolynomial& phi = cyclotomic_poly(n);
    const auto d = static_cast<std::size_t>(phi.degree());
    std::vector<Integer> e(upto + 1);
    for (std::size_t k = 0; k <= std::min(upto, d); ++k) {
        e[k] = phi.coeff(d - k);
        if (k % 2 == 1) e[k] = -e[k];
    }
    return e;
}

// h_0..h_upto at the primitive roots (n == 1 handled: all ones).
std::vector<Integer> complete_sequence(std::uint64_t n, std::size_t upto) {
    if (n == 1) return std::vector<Integer>(upto + 1, Integer(1));
    auto snap = complete_cache().get(n, upto);
    return std::vector<Integer>(snap->begin(), snap->begin() + static_cast<std::ptrdiff_t>(upto + 1));
}

}  // namespace

Integer elementary_at_roots(std::uint64_t n, long k) {
    if (n == 0) throw std::invalid_argument("elementary_at_roots: n must be positive");
    if (k < 0) return 0;
    const IntPolynomial& phi = cyclotomic_poly(n);
    const long d = phi.degree();
    if (k > d) return 0;
    Integer c = phi.coeff(static_cast<std::size_t>(d - k));
    return (k % 2 == 1) ? Integer(-c) : c;
}

Integer complete_at_roots(std::uint64_t n, long k) {
    if (n == 0) throw std::invalid_argument("complete_at_roots: n must be positive");
    if (k < 0) return 0;
    if (n == 1) return 1;
    auto snap = complete_cache().get(n, static_cast<std::size_t>(k));
    return (*snap)[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------
// Jacobi-Trudi

namespace {

void require_schur_domain(std::uint64_t n, const Partition& lambda, const char* who) {
    if (n <= 1) throw std::invalid_argument(std::string(who) + ": n must be at least 2");
    const std::uint64_t d = euler_phi(n);
    if (lambda.length() > d)
        throw std::invalid_argument(std::string(who) + ": length(lambda) = " + std::to_string(lambda.length()) +
                                    " exceeds phi(n) = " + std::to_string(d));
}

template <class T>
T to_number(const Integer& v) {
    if constexpr (std::is_same_v<T, Integer>) return v;
    else return static_cast<T>(v.get_si());
}

template <class T>
Integer from_number(const T& v) {
    if constexpr (std::is_same_v<T, Integer>) return v;
    else return Integer(static_cast<long>(v));
}

// Entry (i, j) is seq[parts_i - i + j], zero for negative indices.
template <class T>
Integer jacobi_trudi_det(const std::vector<int>& parts, const std::vector<Integer>& seq) {
    const std::size_t n = parts.size();
    std::vector<T> m(n * n, T(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long idx = static_cast<long>(parts[i]) - static_cast<long>(i) + static_cast<long>(j);
            if (idx >= 0) m[i * n + j] = to_number<T>(seq[static_cast<std::size_t>(idx)]);
        }
    return from_number(bareiss_determinant(std::move(m), n));
}

double log2_row_bound(const std::vector<Integer>& seq, std::size_t size) {
    Integer max_abs = 0;
    for (const auto& v : seq)
        if (abs(v) > max_abs) max_abs = abs(v);
    const double row_norm = std::max(1.0, max_abs.get_d() * std::sqrt(static_cast<double>(size)));
    return static_cast<double>(size) * std::log2(row_norm);
}

}  // namespace

Integer schur_at_roots(std::uint64_t n, const Partition& lambda) {
    require_schur_domain(n, lambda, "schur_at_roots");
    if (lambda.empty()) return 1;
    const bool use_e = static_cast<std::size_t>(lambda.largest()) < lambda.length();
    const Partition rows = use_e ? lambda.conjugate() : lambda;
    const std::size_t size = rows.length();
    const std::size_t top = static_cast<std::size_t>(rows.largest()) + size;
    const std::vector<Integer> seq = use_e ? elementary_sequence(n, top) : complete_sequence(n, top);
    if (fits_int64_bareiss(log2_row_bound(seq, size))) return jacobi_trudi_det<std::int64_t>(rows.parts(), seq);
    return jacobi_trudi_det<Integer>(rows.parts(), seq);
}

// ---------------------------------------------------------------------------
// Bialternant

CycloElement alternant_at_roots(std::uint64_t n, const Composition& mu) {
    if (n <= 1) throw std::invalid_argument("alternant_at_roots: n must be at least 2");
    const std::vector<std::uint64_t> exps = primitive_exponents(n);
    const std::size_t d = exps.size();
    if (mu.size() != d)
        throw std::invalid_argument("alternant_at_roots: composition has " + std::to_string(mu.size()) +
                                    " entries, expected phi(n) = " + std::to_string(d));
    std::vector<std::uint64_t> table(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) table[i * d + j] = (exps[i] * static_cast<std::uint64_t>(mu[j])) % n;
    return root_power_determinant(n, table, d);
}

namespace {

class StaircaseCache {
public:
    CycloElement get(std::uint64_t n) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = values_.find(n); it != values_.end()) return it->second;
        }
        CycloElement value = alternant_at_roots(n, Composition::staircase(euler_phi(n)));
        std::unique_lock lock(mutex_);
        return values_.try_emplace(n, std::move(value)).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::uint64_t, CycloElement> values_;
};

StaircaseCache& staircase_cache() {
    static StaircaseCache cache;
    return cache;
}

}  // namespace

Integer schur_at_roots_bialternant(std::uint64_t n, const Partition& lambda) {
    require_schur_domain(n, lambda, "schur_at_roots_bialternant");
    const std::size_t d = euler_phi(n);
    const CycloElement denominator = staircase_cache().get(n);
    if (lambda.empty()) {
        // a_delta / a_delta; still routed through the field division.
        auto one = (denominator / denominator).to_rational_integer();
        if (!one) throw std::logic_error("schur_at_roots_bialternant: a_delta / a_delta is not 1");
        return *one;
    }
    const CycloElement numerator = alternant_at_roots(n, Composition::shifted(lambda, d));
    const CycloElement ratio = numerator / denominator;
    auto value = ratio.to_rational_integer();
    if (!value)
        throw std::logic_error("schur_at_roots_bialternant: quotient " + ratio.to_string() + " for n = " +
                               std::to_string(n) + ", lambda = " + lambda.to_string() + " is not a rational integer");
    return *value;
}

// ---------------------------------------------------------------------------
// Box sweep

namespace {

struct SweepTally {
    std::uint64_t partitions = 0;
    std::array<std::uint64_t, 3> unit{};  // -1, 0, 1
    std::map<Integer, std::uint64_t> other;
    std::vector<std::pair<Partition, Integer>> violations;
    std::uint64_t violation_count = 0;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

template <class T>
class BoxSweep {
public:
    BoxSweep(std::size_t size, std::vector<T> seq, bool conjugated, std::size_t max_violations)
        : size_(size), seq_(std::move(seq)), conjugated_(conjugated), max_violations_(max_violations) {}

    // Sweeps every row sequence with first row value `first`.
    SweepTally run(int first) {
        SweepTally tally;
        IncrementalBareiss<T> elim(size_);
        std::vector<int> values(size_, 0);
        std::vector<T> row(size_);
        descend(0, first, first, elim, values, row, tally);
        return tally;
    }

private:
    void fill_row(std::size_t i, int v, std::vector<T>& row) const {
        for (std::size_t j = 0; j < size_; ++j) {
            const long idx = static_cast<long>(v) - static_cast<long>(i) + static_cast<long>(j);
            row[j] = idx >= 0 ? seq_[static_cast<std::size_t>(idx)] : T(0);
        }
    }

    void descend(std::size_t i, int lo_first, int hi, IncrementalBareiss<T>& elim, std::vector<int>& values,
                 std::vector<T>& row, SweepTally& tally) {
        if (i == size_) {
            record(values, elim.determinant(), tally);
            return;
        }
        const int lo = (i == 0) ? lo_first : 0;
        for (int v = lo; v <= hi; ++v) {
            fill_row(i, v, row);
            if (elim.push(std::span<const T>(row))) {
                values[i] = v;
                descend(i + 1, 0, v, elim, values, row, tally);
                elim.pop();
            } else {
                // Dependent prefix: every completion has determinant zero.
                const std::uint64_t completions = binomial(static_cast<std::uint64_t>(v) + (size_ - 1 - i), size_ - 1 - i);
                tally.partitions += completions;
                tally.unit[1] += completions;
            }
        }
    }

    void record(const std::vector<int>& values, const T& det, SweepTally& tally) const {
        ++tally.partitions;
        if (det >= T(-1) && det <= T(1)) {
            ++tally.unit[static_cast<std::size_t>(to_int(det) + 1)];
            return;
        }
        Integer value = from_number(det);
        ++tally.other[value];
        ++tally.violation_count;
        if (max_violations_ == 0) return;
        Partition p(values);
        if (conjugated_) p = p.conjugate();
        // Keep the smallest max_violations_ in box order.
        auto& kept = tally.violations;
        if (kept.size() == max_violations_ && !box_order_less(p, kept.back().first)) return;
        auto pos = std::upper_bound(kept.begin(), kept.end(), p,
                                    [](const Partition& q, const auto& entry) { return box_order_less(q, entry.first); });
        kept.insert(pos, {std::move(p), std::move(value)});
        if (kept.size() > max_violations_) kept.pop_back();
    }

    static int to_int(const T& v) {
        if constexpr (std::is_same_v<T, Integer>) return static_cast<int>(v.get_si());
        else return static_cast<int>(v);
    }

    std::size_t size_;
    std::vector<T> seq_;
    bool conjugated_;
    std::size_t max_violations_;
};

template <class T>
SchurBoxSummary sweep_box(SchurBoxSummary summary, std::size_t size, int bound, const std::vector<Integer>& seq,
                          bool conjugated, std::size_t max_violations) {
    std::vector<T> numbers;
    numbers.reserve(seq.size());
    for (const auto& v : seq) numbers.push_back(to_number<T>(v));
    BoxSweep<T> sweep(size, std::move(numbers), conjugated, max_violations);

    std::vector<SweepTally> tallies(static_cast<std::size_t>(bound) + 1);
    parallel_for(tallies.size(), [&](std::size_t first) { tallies[first] = sweep.run(static_cast<int>(first)); });

    std::array<std::uint64_t, 3> unit{};
    for (auto& t : tallies) {
        summary.partitions += t.partitions;
        for (std::size_t k = 0; k < 3; ++k) unit[k] += t.unit[k];
        for (auto& [value, count] : t.other) summary.histogram[value] += count;
        summary.violation_count += t.violation_count;
        for (auto& v : t.violations) summary.violations.push_back(std::move(v));
    }
    for (int k = -1; k <= 1; ++k)
        if (unit[static_cast<std::size_t>(k + 1)] > 0) summary.histogram[Integer(k)] += unit[static_cast<std::size_t>(k + 1)];
    std::sort(summary.violations.begin(), summary.violations.end(),
              [](const auto& a, const auto& b) { return box_order_less(a.first, b.first); });
    if (summary.violations.size() > max_violations) summary.violations.resize(max_violations);
    return summary;
}

}  // namespace

SchurBoxSummary schur_box_summary(std::uint64_t n, std::size_t max_length, int max_part, std::size_t max_violations) {
    if (n <= 1) throw std::invalid_argument("schur_box_summary: n must be at least 2");
    if (max_part < 0) throw std::invalid_argument("schur_box_summary: max_part must be nonnegative");
    const std::uint64_t d = euler_phi(n);
    if (max_length > d)
        throw std::invalid_argument("schur_box_summary: max_length = " + std::to_string(max_length) +
                                    " exceeds phi(n) = " + std::to_string(d));
    SchurBoxSummary summary;
    summary.n = n;
    summary.max_length = max_length;
    summary.max_part = max_part;

    // Rows of the determinant are the parts of lambda (h-form) or of its
    // conjugate (e-form); pick whichever makes the determinant smaller.
    const bool use_e = static_cast<std::size_t>(max_part) <= max_length;
    const std::size_t size = use_e ? static_cast<std::size_t>(max_part) : max_length;
    const int bound = use_e ? static_cast<int>(max_length) : max_part;
    if (size == 0) {
        summary.partitions = 1;
        summary.histogram[Integer(1)] = 1;
        return summary;
    }
    const std::size_t top = static_cast<std::size_t>(bound) + size;
    const std::vector<Integer> seq = use_e ? elementary_sequence(n, top) : complete_sequence(n, top);
    if (fits_int64_bareiss(log2_row_bound(seq, size)))
        return sweep_box<std::int64_t>(std::move(summary), size, bound, seq, use_e, max_violations);
    return sweep_box<Integer>(std::move(summary), size, bound, seq, use_e, max_violations);
}

}  // namespace cycloschur
