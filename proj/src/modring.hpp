// Exact linear algebra over Z/m and small integer Smith normal form.
//
// The solvers here stay deliberately small: matrices come from cocycle
// constraint systems, abelian relation matrices and character-extension
// systems, all of which live on groups of modest order.  For prime-power
// m = p^k elimination works over the local ring Z/p^k with valuation
// pivoting; composite moduli are handled by CRT on the prime-power parts.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace tgrip {

using i64 = std::int64_t;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

i64 gcd64(i64 a, i64 b);
i64 lcm64(i64 a, i64 b);
// Modular inverse of a unit; throws if gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);
i64 pow_mod(i64 a, i64 e, i64 m);
i64 mod_norm(i64 a, i64 m);  // representative in [0, m)

bool is_prime(i64 n);
// Factor m as p^k; returns false if m is not a prime power (m >= 2).
bool prime_power(i64 m, i64* p, int* k);
// Full factorisation into (prime, exponent) pairs, ascending primes.
std::vector<std::pair<i64, int>> factorize(i64 m);

// p-adic valuation of x mod p^k, i.e. largest v <= k with p^v | x; val(0) = k.
int val_p(i64 x, i64 p, int k);

// Generating set (rows) of {x : A x == 0 (mod m)}.  Works for any m >= 1.
Mat kernel_mod(const Mat& a, int ncols, i64 m);

// Size of the subgroup of (Z/m)^ncols generated by the rows.
i64 span_size_mod(const Mat& rows, int ncols, i64 m);

// Membership of `row` in the subgroup of (Z/m)^ncols spanned by the rows.
bool row_in_span_mod(const Vec& row, const Mat& rows, int ncols, i64 m);

// One solution of A x == b (mod m), if solvable.
std::optional<Vec> solve_mod(const Mat& a, const Vec& b, int ncols, i64 m);

// Invariant factors (each > 1, divisibility-ascending) of Z^n / rowspan(rels).
// Free Z-summands would be reported as 0; our groups are finite so callers
// treat a 0 as a contract violation.
std::vector<i64> snf_invariants(Mat rels, int n);

// Smith normal form with column transform: rels * V has row span equal to
// span of diag entries; returns diagonal d (length min(rows, n) padded with 0)
// plus V and V^-1.  Row operations are discarded.
struct SnfResult {
  std::vector<i64> diag;
  Mat v;      // n x n unimodular
  Mat vinv;   // its inverse
};
SnfResult snf_with_transform(Mat rels, int n);

// Invariant factors of (⊕ Z/d_i) / <rows of sub>, with sub given in the
// coordinates of the d-basis.
std::vector<i64> quotient_invariants(const std::vector<i64>& d, const Mat& sub);

Mat mat_identity(int n);
Mat mat_mul_mod(const Mat& a, const Mat& b, i64 m);

}  // namespace tgrip
