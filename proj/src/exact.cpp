#include "adeg/exact.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>
#include <utility>

namespace adeg {

IMat IMat::identity(int n) {
    IMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat mul(const IMat& a, const IMat& b) {
    if (a.n() != b.n()) throw std::invalid_argument("IMat::mul: dimension mismatch");
    const int n = a.n();
    IMat c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    }
    return c;
}

IMat transpose(const IMat& a) {
    const int n = a.n();
    IMat t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

namespace {

// Bareiss elimination on a working copy; intermediate entries stay integral
// (they are minors of the input), so no fractions appear.
Int bareiss_det(IMat w) {
    const int n = w.n();
    if (n == 0) return 1;
    Int denom = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = t / denom;
            }
            w.at(i, k) = 0;
        }
        denom = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

}  // namespace

Int det(const IMat& m) { return bareiss_det(m); }

std::vector<Int> leading_minors(const IMat& m) {
    const int n = m.n();
    std::vector<Int> out;
    out.reserve(n);
    for (int k = 1; k <= n; ++k) {
        IMat sub(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
        out.push_back(det(sub));
    }
    return out;
}

bool is_unimodular(const IMat& u) {
    Int d = det(u);
    return d == 1 || d == -1;
}

SymDiag sym_diagonalize(const IMat& m) {
    const int n = m.n();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    std::vector<std::vector<Rat>> t(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) {
        t[i][i] = 1;
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    }

    auto swap_cols = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < n; ++r) std::swap(a[i][r], a[j][r]);
        for (int r = 0; r < n; ++r) std::swap(t[r][i], t[r][j]);
    };
    // column/row operation C_i += f*C_j (congruence)
    auto add_col = [&](int i, int j, const Rat& f) {
        for (int r = 0; r < n; ++r) a[r][i] += f * a[r][j];
        for (int r = 0; r < n; ++r) a[i][r] += f * a[j][r];
        for (int r = 0; r < n; ++r) t[r][i] += f * t[r][j];
    };

    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int j = k + 1; j < n; ++j)
                if (a[j][j] != 0) { p = j; break; }
            if (p >= 0) {
                swap_cols(k, p);
            } else {
                // all remaining diagonal entries vanish; a nonzero off-diagonal
                // pair yields a nonzero pivot after one column addition
                int q = -1;
                for (int j = k + 1; j < n && q < 0; ++j)
                    if (a[k][j] != 0) q = j;
                if (q >= 0) add_col(k, q, Rat(1));
            }
        }
        if (a[k][k] == 0) continue;  // row/column k is zero from k on
        const Rat pivot = a[k][k];
        for (int j = k + 1; j < n; ++j) {
            if (a[k][j] == 0) continue;
            add_col(j, k, -a[k][j] / pivot);
        }
    }

    SymDiag out;
    out.diag.resize(n);
    out.cols.resize(n);
    for (int k = 0; k < n; ++k) {
        out.diag[k] = a[k][k];
        if (a[k][k] > 0)
            ++out.inertia.n_plus;
        else if (a[k][k] < 0)
            ++out.inertia.n_minus;
        else
            ++out.inertia.n_zero;
        // clear denominators of column k of T
        Int lcm = 1;
        for (int r = 0; r < n; ++r) {
            Int den = boost::multiprecision::denominator(t[r][k]);
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        std::vector<Int> col(n);
        for (int r = 0; r < n; ++r) {
            col[r] = boost::multiprecision::numerator(t[r][k]) *
                     (lcm / boost::multiprecision::denominator(t[r][k]));
        }
        normalize_int_vector(col);
        out.cols[k] = std::move(col);
    }
    return out;
}

void normalize_int_vector(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
}

std::string to_string(const Int& v) { return v.str(); }

}  // namespace adeg
