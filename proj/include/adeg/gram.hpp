#pragma once

#include "adeg/exact.hpp"
#include "adeg/graph.hpp"

#include <vector>

namespace adeg {

/// The symmetric integer matrix 2I + A(G): diagonal 2, off-diagonal in
/// {-1, 0, 1}. Indexing follows the graph's stored vertex order.
class GramMatrix {
public:
    GramMatrix() = default;
    explicit GramMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0) {
        for (int i = 0; i < n; ++i) a_[static_cast<size_t>(i) * n + i] = 2;
    }

    int n() const { return n_; }
    int entry(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    void set_offdiag(int i, int j, int v);

    IMat to_imat() const;
    bool operator==(const GramMatrix& o) const = default;

private:
    int n_ = 0;
    std::vector<int8_t> a_;
};

GramMatrix gram_matrix(const SignedGraph& g);

enum class Verdict { PositiveDefinite, PositiveSemidefinite, Indefinite };

struct DefinitenessReport {
    Verdict verdict = Verdict::PositiveDefinite;
    /// Kernel vector when semidefinite; x with x^t M x < 0 when indefinite.
    std::vector<Int> witness;
    std::vector<Int> leading_minors;
    Int det = 1;
};

struct Inertia {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;
    int signature() const { return n_plus - n_minus; }
};

/// Exact verdict; witnesses are integral and checked before being reported.
DefinitenessReport definiteness(const GramMatrix& m);

/// Exact Sylvester inertia.
Inertia inertia(const GramMatrix& m);

const char* verdict_name(Verdict v);

}  // namespace adeg
