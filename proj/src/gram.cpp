#include "adeg/gram.hpp"

#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace adeg {

void GramMatrix::set_offdiag(int i, int j, int v) {
    if (i == j) throw std::invalid_argument("diagonal is fixed at 2");
    if (v < -1 || v > 1) throw std::invalid_argument("off-diagonal entry out of {-1,0,1}");
    a_[static_cast<size_t>(i) * n_ + j] = static_cast<int8_t>(v);
    a_[static_cast<size_t>(j) * n_ + i] = static_cast<int8_t>(v);
}

IMat GramMatrix::to_imat() const {
    IMat m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = entry(i, j);
    return m;
}

GramMatrix gram_matrix(const SignedGraph& g) {
    GramMatrix m(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (int s = g.sign_at(i, j); s != 0) m.set_offdiag(i, j, s);
    return m;
}

namespace {

// Entries are bounded by 2, so for n <= 18 every minor fits in int64
// (Hadamard: (2 sqrt(n))^n < 2^63). Beyond that we fall back to cpp_int.
constexpr int kInt64SafeDim = 18;

int64_t bareiss_det64(std::vector<int64_t> w, int n) {
    if (n == 0) return 1;
    auto at = [&](int i, int j) -> int64_t& { return w[static_cast<size_t>(i) * n + j]; };
    int64_t denom = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / denom;
            at(i, k) = 0;
        }
        denom = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

std::vector<Int> gram_leading_minors(const GramMatrix& m) {
    const int n = m.n();
    std::vector<Int> out;
    out.reserve(n);
    if (n <= kInt64SafeDim) {
        for (int k = 1; k <= n; ++k) {
            std::vector<int64_t> sub(static_cast<size_t>(k) * k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub[static_cast<size_t>(i) * k + j] = m.entry(i, j);
            out.emplace_back(bareiss_det64(std::move(sub), k));
        }
    } else {
        out = leading_minors(m.to_imat());
    }
    return out;
}

Int quad_form(const GramMatrix& m, const std::vector<Int>& x) {
    Int q = 0;
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (m.entry(i, j) != 0) q += x[i] * m.entry(i, j) * x[j];
    return q;
}

bool in_kernel(const GramMatrix& m, const std::vector<Int>& x) {
    for (int i = 0; i < m.n(); ++i) {
        Int s = 0;
        for (int j = 0; j < m.n(); ++j)
            if (m.entry(i, j) != 0) s += Int(m.entry(i, j)) * x[j];
        if (s != 0) return false;
    }
    return true;
}

}  // namespace

DefinitenessReport definiteness(const GramMatrix& m) {
    DefinitenessReport rep;
    rep.leading_minors = gram_leading_minors(m);
    rep.det = m.n() == 0 ? Int(1) : rep.leading_minors.back();

    bool pd = true;
    for (const Int& v : rep.leading_minors)
        if (v <= 0) { pd = false; break; }
    if (pd) {
        rep.verdict = Verdict::PositiveDefinite;
        return rep;
    }

    SymDiag d = sym_diagonalize(m.to_imat());
    if (d.inertia.n_minus > 0) {
        rep.verdict = Verdict::Indefinite;
        for (int k = 0; k < m.n(); ++k)
            if (d.diag[k] < 0) { rep.witness = d.cols[k]; break; }
        assert(quad_form(m, rep.witness) < 0);
    } else {
        rep.verdict = Verdict::PositiveSemidefinite;
        for (int k = 0; k < m.n(); ++k)
            if (d.diag[k] == 0) { rep.witness = d.cols[k]; break; }
        assert(in_kernel(m, rep.witness));
    }
    return rep;
}

Inertia inertia(const GramMatrix& m) {
    SymDiag d = sym_diagonalize(m.to_imat());
    return Inertia{d.inertia.n_plus, d.inertia.n_zero, d.inertia.n_minus};
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::PositiveDefinite: return "positive_definite";
        case Verdict::PositiveSemidefinite: return "positive_semidefinite";
        case Verdict::Indefinite: return "indefinite";
    }
    return "?";
}

}  // namespace adeg
