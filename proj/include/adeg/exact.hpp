#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace adeg {

// All verdict-bearing arithmetic in this library is exact. Integers are
// arbitrary precision; rationals appear only inside the symmetric
// diagonalization and are cleared back to integers before anything is
// reported.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Dense square integer matrix, row-major.
class IMat {
public:
    IMat() = default;
    explicit IMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static IMat identity(int n);

    int n() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool operator==(const IMat& o) const = default;

private:
    int n_ = 0;
    std::vector<Int> a_;
};

IMat mul(const IMat& a, const IMat& b);
IMat transpose(const IMat& a);

/// Exact determinant (fraction-free Bareiss elimination with row pivoting).
Int det(const IMat& m);

/// Leading principal minors of sizes 1..n, each computed exactly.
std::vector<Int> leading_minors(const IMat& m);

bool is_unimodular(const IMat& u);

struct InertiaCounts {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;
};

/// Result of a rational congruence diagonalization T^t M T = diag.
/// `cols[k]` is column k of T cleared to a primitive integer vector, so
///   cols[k]^t M cols[k] has the sign of diag[k],
/// and when diag[k] = 0, M cols[k] = 0.
struct SymDiag {
    InertiaCounts inertia;
    std::vector<Rat> diag;
    std::vector<std::vector<Int>> cols;
};

/// Symmetric congruence diagonalization over Q. `m` must be symmetric.
SymDiag sym_diagonalize(const IMat& m);

/// Divides by the gcd and makes the first nonzero entry positive.
void normalize_int_vector(std::vector<Int>& v);

std::string to_string(const Int& v);

}  // namespace adeg
