#pragma once

// Roots of unity as vector systems in the power basis of Q(zeta_n), the
// isomorphisms that split Z_n into smaller root systems, the condition on
// odd prime factors, and an end-to-end verifier.

#include "cycloschur/symfunc.hpp"
#include "cycloschur/unimodular.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cycloschur {

struct ConditionStarReport {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> odd_prime_factors;  // distinct, ascending
    /// At most two distinct odd prime factors.
    bool satisfied = false;
};

/// Throws std::invalid_argument for n == 0.
ConditionStarReport condition_star(std::uint64_t n);

/// n = 2^k p^l q^m with p < q odd primes; absent odd parts have no entry.
struct FactorShape {
    std::uint64_t n = 0;
    unsigned two_exponent = 0;
    std::vector<std::pair<std::uint64_t, unsigned>> odd_parts;  // (prime, exponent), at most two
};

/// Throws std::domain_error when n has three or more distinct odd primes.
FactorShape factor_shape(std::uint64_t n);

/// Power-basis coordinates of zeta_n^0, ..., zeta_n^(n-1) as vectors in
/// Q^phi(n). n == 1 is rejected: Q(zeta_1) = Q and Z_1 = {1} is degenerate.
VectorSystem z_n_system(std::uint64_t n);

/// Omega_n = {(omega_1^k, ..., omega_d^k)} viewed through the projection onto
/// the first coordinate, which identifies it with Z_n. Returns z_n_system(n).
VectorSystem omega_n_system(std::uint64_t n);

/// A linear isomorphism onto Q(zeta_target) together with the checks that
/// it is invertible and carries `source` onto Z_target as a set.
struct SplitCertificate {
    std::uint64_t target = 0;
    RationalMatrix map;       // phi(target) x dim(source)
    VectorSystem source;      // system in the domain
    Rational determinant;
    bool invertible = false;
    bool image_matches = false;

    [[nodiscard]] bool holds() const { return invertible && image_matches; }
};

/// Q(zeta_a) (x) Q(zeta_b) -> Q(zeta_ab), z (x) w -> z w, for coprime a, b.
/// Domain basis zeta_a^i (x) zeta_b^j, left-factor-major; source Z_a (x) Z_b.
SplitCertificate coprime_split(std::uint64_t a, std::uint64_t b);

/// The direct sum of p^(l-1) copies of Q(zeta_p) -> Q(zeta_{p^l}), the j-th
/// copy's z going to zeta_{p^l}^j z. Source: the disjoint sum of p^(l-1)
/// copies of Z_p, copy-major.
SplitCertificate prime_power_split(std::uint64_t p, unsigned l);

/// Composes prime_power_split for every prime power of n with coprime_split
/// across them (ascending primes), giving a certificate from the tensor
/// product of disjoint sums of Z_p onto Z_n.
SplitCertificate factorization_certificate(std::uint64_t n);

struct DirectCheck {
    bool pass = false;
    bool complete = false;  // the whole box was evaluated
    std::uint64_t partitions = 0;
    std::optional<std::pair<Partition, Integer>> counterexample;
};

struct StructuralCheck {
    bool pass = false;
    CheckMode mode = CheckMode::exhaustive;
    std::optional<Rational> abs_det;          // exhaustive mode
    std::optional<BasisPair> witness;          // when a witness was found
};

struct TheoremVerdict {
    std::uint64_t n = 0;
    int max_part = 0;
    ConditionStarReport star;
    DirectCheck direct;
    StructuralCheck structural;

    /// The three checks agree: all pass, or all fail.
    [[nodiscard]] bool consistent() const;
};

struct VerifyOptions {
    /// Partitions evaluated by the direct check before it stops.
    std::uint64_t partition_budget = 2'000'000;
    /// Subsets for the exhaustive structural check.
    std::uint64_t subset_budget = kDefaultSubsetBudget;
    /// Pivots for the sampled structural check.
    std::uint64_t witness_budget = kDefaultWitnessBudget;
    std::uint64_t seed = 1;
};

/// Runs the direct Schur check over the box (phi(n), max_part), the
/// unimodularity check of z_n_system(n), and the condition gate.
///
/// Direct check: when the box has at most partition_budget partitions it is
/// swept completely; otherwise partitions are taken in partitions_in_box
/// order (by weight) until the budget runs out. The reported counterexample
/// is the first one in that order. Structural check: exhaustive within
/// subset_budget, else a seeded witness search; a sampled pass only means no
/// witness was found.
TheoremVerdict verify_theorem(std::uint64_t n, int max_part, const VerifyOptions& options = {});

}  // namespace cycloschur
