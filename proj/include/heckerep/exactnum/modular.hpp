#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "heckerep/exactnum/polynomial.hpp"

namespace heckerep::modular {

// A prime p = 1 (mod N), p < 2^30, with the phi(N) roots of Phi_N in F_p and the
// Vandermonde matrix (and inverse) mapping power-basis coordinates to root values.
struct PrimeData {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> roots;
  std::vector<std::uint32_t> vandermonde;      // [t * phi + c] = roots[t]^c
  std::vector<std::uint32_t> vandermonde_inv;  // [c * phi + t]
};

bool is_prime(std::uint64_t n);
const PrimeData& prime_for(int order, std::size_t index);

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p);

// Dense row-major scalar matrix over F_p.
struct ResidueMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint32_t> v;
};

ResidueMatrix multiply_mod(const ResidueMatrix& a, const ResidueMatrix& b, std::uint32_t p);
ResidueMatrix power_mod(const ResidueMatrix& a, unsigned e, std::uint32_t p);

// Integer image of a matrix over Q(zeta_N): entries = coef / den with integer coef.
struct IntegerForm {
  std::size_t rows = 0, cols = 0;
  int phi = 1;
  std::vector<Integer> coef;  // [(i * cols + j) * phi + c]
  Integer den = 1;
  Integer max_abs = 0;
};

// Evaluates an arithmetic circuit of the inputs prime by prime: each input is mapped to
// phi scalar matrices (one per root of Phi_N); `op` combines the scalar matrices at one
// root; results are interpolated back and lifted by CRT until the primes' product exceeds
// 2 * bound. Returns integer coefficients [(i * cols + j) * phi + c].
std::vector<Integer> evaluate_circuit(
    int order, const std::vector<const IntegerForm*>& inputs, std::size_t out_rows, std::size_t out_cols,
    const Integer& bound,
    const std::function<ResidueMatrix(const std::vector<ResidueMatrix>&, std::uint32_t)>& op);

}  // namespace heckerep::modular
