#pragma once

// Partitions and exact Schur polynomial values at the full set of primitive
// n-th roots of unity.

#include "cycloschur/cyclotomic.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace cycloschur {

/// Integer partition, stored without trailing zero parts.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are weakly decreasing and
    /// nonnegative. Zero parts at the end are dropped.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (1^k)
    static Partition column(int k);
    /// (k)
    static Partition row(int k);

    [[nodiscard]] std::size_t length() const { return parts_.size(); }
    [[nodiscard]] int weight() const;
    [[nodiscard]] bool empty() const { return parts_.empty(); }
    [[nodiscard]] int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    /// Part i (0-based); zero past the length.
    [[nodiscard]] int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
    [[nodiscard]] Partition conjugate() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Sequence of nonnegative exponents (mu_1, ..., mu_d) for alternants.
class Composition {
public:
    explicit Composition(std::vector<int> entries);
    /// delta = (d-1, d-2, ..., 1, 0)
    static Composition staircase(std::size_t d);
    /// delta + lambda, with lambda padded by zeros to length d.
    static Composition shifted(const Partition& lambda, std::size_t d);

    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] int operator[](std::size_t i) const { return entries_[i]; }
    [[nodiscard]] const std::vector<int>& entries() const { return entries_; }

private:
    std::vector<int> entries_;
};

/// Every partition with at most max_length parts, each at most max_part.
///
/// Order: increasing weight; within a weight, lexicographically decreasing
/// (so (2) precedes (1,1)). There are binomial(max_length + max_part,
/// max_length) of them.
std::vector<Partition> partitions_in_box(std::size_t max_length, int max_part);

/// Same order as partitions_in_box, without materialising the list. The
/// visitor returns false to stop early.
void for_each_partition_in_box(std::size_t max_length, int max_part,
                               const std::function<bool(const Partition&)>& visit);

/// e_k(omega_1, ..., omega_d) over the primitive n-th roots: (-1)^k times the
/// coefficient of x^(d-k) in Phi_n, and 0 for k > d. Throws for n == 0.
Integer elementary_at_roots(std::uint64_t n, long k);

/// h_k(omega_1, ..., omega_d) over the primitive n-th roots, read off the
/// power series 1/Phi_n. h_k = 0 for k < 0. For n == 1 the single root is 1
/// and h_k = 1, which is the negated series coefficient (Phi_1(0) = -1).
Integer complete_at_roots(std::uint64_t n, long k);

/// s_lambda(omega_1, ..., omega_d) by a Jacobi-Trudi determinant.
///
/// Both Jacobi-Trudi forms are exact: det(h_{lambda_i - i + j}) of size
/// length(lambda) and det(e_{lambda'_i - i + j}) of size lambda_1. The smaller
/// one is evaluated with fraction-free elimination. Requires n >= 2 and
/// length(lambda) <= phi(n); throws std::invalid_argument otherwise.
Integer schur_at_roots(std::uint64_t n, const Partition& lambda);

/// det(omega_i^{mu_j}) in Q(zeta_n). Rows follow the ascending primitive
/// exponents a_i (omega_i = zeta_n^{a_i}), columns follow mu as given.
CycloElement alternant_at_roots(std::uint64_t n, const Composition& mu);

/// s_lambda at the primitive roots through the bialternant a_{delta+lambda} /
/// a_delta computed in Q(zeta_n). Throws std::logic_error if the quotient is
/// not a rational integer, which would indicate an arithmetic fault.
Integer schur_at_roots_bialternant(std::uint64_t n, const Partition& lambda);

/// Aggregate of schur_at_roots over a box of partitions.
struct SchurBoxSummary {
    std::uint64_t n = 0;
    std::size_t max_length = 0;
    int max_part = 0;
    std::uint64_t partitions = 0;
    std::map<Integer, std::uint64_t> histogram;  // value -> count
    /// Partitions with |value| > 1: the first `max_violations` of them in
    /// partitions_in_box order.
    std::vector<std::pair<Partition, Integer>> violations;
    std::uint64_t violation_count = 0;

    [[nodiscard]] bool all_in_unit_set() const { return violation_count == 0; }
};

/// Evaluates s_lambda for every lambda in the box (max_length, max_part) by a
/// depth-first sweep that shares elimination work between partitions with a
/// common prefix. Requires max_length <= phi(n).
SchurBoxSummary schur_box_summary(std::uint64_t n, std::size_t max_length, int max_part,
                                  std::size_t max_violations = 16);

}  // namespace cycloschur
