#pragma once

// Determinants over Z[zeta_n] by reduction modulo primes p = 1 (mod n),
// where Phi_n splits into linear factors and Z[zeta_n] / p is a product of
// phi(n) copies of F_p.

#include "cycloschur/cyclotomic.hpp"

#include <cstdint>
#include <span>

namespace cycloschur {

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t p);

/// Primes p = 1 (mod n) below 2^62, in decreasing order; the k-th one.
std::uint64_t split_prime(std::uint64_t n, std::size_t k);

/// det(zeta_n^(e_ij)) for a size x size table of exponents (row-major,
/// reduced mod n by the callee).
///
/// Each prime gives the determinant's power-basis coordinates mod p; primes
/// are combined by CRT until the modulus exceeds twice a coordinate bound.
/// The bound is |sigma(det)| <= size^(size/2) for every embedding sigma,
/// times the max row sum of the inverse of the embedding matrix
/// (zeta^(a_k j)), which is computed in floating point and padded by 2^16.
CycloElement root_power_determinant(std::uint64_t n, std::span<const std::uint64_t> exponents, std::size_t size);

}  // namespace cycloschur
