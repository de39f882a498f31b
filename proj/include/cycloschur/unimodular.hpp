#pragma once

// Vector systems over Q, unimodularity, total unimodularity, maximal
// circuits and their tensor products, and network matrices.

#include "cycloschur/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cycloschur {

using RationalVector = std::vector<Rational>;

/// Finite list of nonzero vectors spanning Q^m. Order is significant and
/// duplicates are kept; both invariants are checked on construction.
class VectorSystem {
public:
    /// Throws std::invalid_argument on a zero vector, a length mismatch, or
    /// vectors that do not span Q^ambient_dim.
    VectorSystem(std::size_t ambient_dim, std::vector<RationalVector> vectors);
    static VectorSystem from_integer_vectors(std::size_t ambient_dim, const std::vector<std::vector<long>>& vectors);

    [[nodiscard]] std::size_t ambient_dim() const { return dim_; }
    [[nodiscard]] std::size_t size() const { return vectors_.size(); }
    [[nodiscard]] const RationalVector& operator[](std::size_t i) const { return vectors_[i]; }
    [[nodiscard]] const std::vector<RationalVector>& vectors() const { return vectors_; }
    /// ambient_dim x size matrix with the vectors as columns.
    [[nodiscard]] RationalMatrix as_matrix() const;
    /// Determinant of the square matrix with columns vectors[indices[k]].
    [[nodiscard]] Rational determinant(std::span<const std::size_t> indices) const;

    friend bool operator==(const VectorSystem&, const VectorSystem&) = default;

private:
    std::size_t dim_;
    std::vector<RationalVector> vectors_;
};

// ---------------------------------------------------------------------------
// Total unimodularity

struct TuOptions {
    /// Exhaustive when rows * cols <= max_exhaustive_entries and
    /// min(rows, cols) <= max_exhaustive_min_dim.
    std::size_t max_exhaustive_entries = 36;
    std::size_t max_exhaustive_min_dim = 6;
    /// Square submatrices drawn in sampled mode.
    std::uint64_t samples = 20000;
    std::uint64_t seed = 0;
};

enum class CheckMode { exhaustive, sampled };

std::string to_string(CheckMode mode);

struct SubmatrixWitness {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Rational determinant;
};

struct TuResult {
    bool totally_unimodular = false;
    CheckMode mode = CheckMode::exhaustive;
    std::uint64_t submatrices_checked = 0;
    std::optional<SubmatrixWitness> witness;
};

/// Every square submatrix has determinant in {-1, 0, 1}. Exhaustive up to
/// the configured size, randomized sampling beyond it; the mode is reported.
/// A sampled "true" means no violating submatrix was drawn. Entries outside
/// {-1, 0, 1} are reported as 1x1 witnesses before any enumeration.
TuResult is_totally_unimodular(const RationalMatrix& m, const TuOptions& options = {});

/// [A | I_m]
RationalMatrix augment_identity(const RationalMatrix& a);

// ---------------------------------------------------------------------------
// Unimodular systems

enum class UnimodularVerdict { unimodular, not_unimodular, budget_exceeded };

std::string to_string(UnimodularVerdict verdict);

struct BasisPair {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    Rational first_abs_det;
    Rational second_abs_det;
};

struct UnimodularReport {
    UnimodularVerdict verdict = UnimodularVerdict::budget_exceeded;
    /// Common |det| of the bases (for not_unimodular: |det| of the first basis).
    Rational abs_det;
    std::uint64_t bases = 0;
    std::uint64_t singular_subsets = 0;
    /// For not_unimodular: the first basis and the first basis whose |det|
    /// differs, in enumeration order.
    std::optional<BasisPair> witness;

    [[nodiscard]] bool unimodular() const { return verdict == UnimodularVerdict::unimodular; }
};

/// Default cap on the number of size-m subsets examined.
inline constexpr std::uint64_t kDefaultSubsetBudget = 20'000'000;

/// Enumerates every size-m subset of X in lexicographic index order and
/// compares |det| over the nonsingular ones (sign classes {a, -a}). When
/// binomial(|X|, m) exceeds `budget`, nothing is enumerated and the verdict is
/// budget_exceeded.
UnimodularReport is_unimodular_system(const VectorSystem& x, std::uint64_t budget = kDefaultSubsetBudget);

/// Standard basis of Q^dim followed by minus their sum.
VectorSystem maximal_circuit(std::size_t dim);

/// |X| = dim + 1, X spans, and the vectors sum to zero.
bool is_maximal_circuit(const VectorSystem& x);

/// All x (x) y, x-major: index i * |Y| + j holds x_i (x) y_j, with Kronecker
/// coordinates (x_i)_a (y_j)_b at position a * n + b.
VectorSystem tensor_product(const VectorSystem& x, const VectorSystem& y);

/// (x, 0) for x in X followed by (0, y) for y in Y.
VectorSystem disjoint_sum(const VectorSystem& x, const VectorSystem& y);

/// Randomized search for two bases of X with different |det|.
///
/// Starts from a random basis B and works on the coordinate tableau B^-1 X.
/// Exchanging basis vector i for column j scales |det| by |tableau(i, j)|, so
/// an entry outside {-1, 0, 1} is a witness; otherwise a random exchange is
/// performed (a pivot). `budget` bounds the total number of pivots across
/// restarts. The search is deterministic for a given seed. nullopt means
/// "nothing found", never "unimodular".
std::optional<BasisPair> find_nonunimodular_witness(const VectorSystem& x, std::uint64_t budget, std::uint64_t seed);

/// Default pivot budget for find_nonunimodular_witness.
inline constexpr std::uint64_t kDefaultWitnessBudget = 20000;

// ---------------------------------------------------------------------------
// Network matrices

using Arc = std::pair<std::string, std::string>;

/// A directed spanning tree and a directed graph on a shared vertex set.
class NetworkInstance {
public:
    /// Throws std::invalid_argument when an endpoint is unknown, vertex names
    /// repeat, or the tree arcs do not form a spanning tree once directions
    /// are ignored.
    NetworkInstance(std::vector<std::string> vertices, std::vector<Arc> tree, std::vector<Arc> edges);

    [[nodiscard]] const std::vector<std::string>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<Arc>& tree() const { return tree_; }
    [[nodiscard]] const std::vector<Arc>& edges() const { return edges_; }

    friend bool operator==(const NetworkInstance&, const NetworkInstance&) = default;

private:
    std::vector<std::string> vertices_;
    std::vector<Arc> tree_;
    std::vector<Arc> edges_;
};

/// Tree-arc x graph-arc matrix. For tree arc t and graph arc (u, v), the entry
/// is +1 if t is traversed along its direction on the unique tree path from u
/// to v, -1 if against it, and 0 if the path avoids t. Rows follow tree(),
/// columns follow edges().
/// The arc compared against the path is always the row's own tree arc t.
RationalMatrix network_matrix(const NetworkInstance& instance);

struct BipartiteConstruction {
    /// mn x (m+n+1): columns e0(x)f0, e0(x)f_1..f_n, e_1..e_m(x)f0 written in
    /// the basis e_i(x)f_j, row (j-1)*m + (i-1).
    RationalMatrix a;
    NetworkInstance network;
};

/// Coordinates of R = {e0(x)f0} u (e0 (x) Y+) u (X+ (x) f0) for the maximal
/// circuits X = {e0, .., em}, Y = {f0, .., fn} with e0 = -sum e_i and
/// f0 = -sum f_j, together with the network instance whose network matrix is
/// the transpose of `a`.
///
/// Tree arcs: (e0,f0), (e0,f_j) for j = 1..n, (e_i,f0) for i = 1..m.
/// Graph arcs: the complete bipartite arcs between {e_i} and {f_j}, oriented
/// f_j -> e_i and ordered like the rows of `a`. With the opposite orientation
/// e_i -> f_j the network matrix is -transpose(a), which is equally totally
/// unimodular.
BipartiteConstruction bipartite_construction(std::size_t m, std::size_t n);

}  // namespace cycloschur
