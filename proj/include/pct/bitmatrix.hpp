#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pct/embedding.hpp"
#include "pct/euler.hpp"

namespace pct {

/// Dense square 0/1 matrix, bit-packed per row, with cached row/column sums.
class BitMatrix {
public:
    explicit BitMatrix(int order);

    int order() const { return order_; }
    bool get(int i, int j) const
    {
        return (bits_[static_cast<size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(int i, int j, bool value);

    int row_sum(int i) const { return row_sum_[i]; }
    int col_sum(int j) const { return col_sum_[j]; }
    long total_ones() const;

    bool rows_equal(int a, int b) const;
    bool rows_disjoint(int a, int b) const;
    bool cols_equal(int a, int b) const;
    bool cols_disjoint(int a, int b) const;

    bool operator==(const BitMatrix& other) const;

    /// First line the order, then one row of 0/1 characters per line.
    std::string to_text() const;
    static BitMatrix from_text(const std::string& text);

private:
    int order_;
    int words_;
    std::vector<uint64_t> bits_;
    std::vector<int> row_sum_, col_sum_;
};

/// F: vertex adjacency of the oriented conjugate.  F[i][j] = 1 iff some arc
/// runs i -> j; order n_H.
BitMatrix vertex_adjacency_matrix(const Digraph& d);

/// R (the straight conversion): arc adjacency.  R[a][b] = 1 iff
/// head(a) = tail(b); order m_H.
BitMatrix arc_adjacency_matrix(const Digraph& d);

/// Zero diagonal and no symmetric pair of ones.
Verdict antisymmetry_check(const BitMatrix& m);

struct QuasiBlock {
    std::vector<int> rows, cols;
};

struct QuasiDecomposition {
    std::vector<QuasiBlock> blocks;
    long covered_ones = 0;
    long unassigned = 0;  // ones outside every block; zero on success

    bool all_blocks_2x2() const;
};

/// Decide whether the ones of m split into disjoint all-ones blocks, i.e.
/// whether m is the arc-adjacency matrix of some digraph.  Operationally the
/// nonzero rows must be pairwise equal or support-disjoint (the dual holds
/// for columns automatically and is verified as well).  On failure the
/// witness is a pair of overlapping, unequal rows (or columns).
struct QuasiOutcome {
    bool ok = false;
    QuasiDecomposition dec;
    int witness_a = -1, witness_b = -1;
    std::string note;
};

QuasiOutcome quasicanonical_decomposition(const BitMatrix& m);

/// Rebuild a digraph whose arc-adjacency matrix equals m, arc ids preserved.
/// One vertex per block, plus a fresh source/sink for each arc whose column/
/// row is zero.
struct ReverseOutcome {
    bool ok = false;
    Digraph g;
    int witness_a = -1, witness_b = -1;
};

ReverseOutcome reverse_convert(const BitMatrix& m);

/// Exhibit the digraph isomorphism mapping a onto b assuming arc ids agree:
/// vertex_map[v of a] = v of b, checked arc by arc.
struct ArcIsoResult {
    bool ok = false;
    std::vector<int> vertex_map;
    std::string issue;
};

ArcIsoResult check_arc_isomorphism(const Digraph& a, const Digraph& b);

/// m_H multiple of 6, n_H multiple of 3, sum(R) = 2 m_H multiple of 12 and
/// of 4.  Skipped for disk instances and the degenerate 3-vertex case.
struct MultiplicityAudit {
    bool skipped = false;
    Verdict verdict;
};

MultiplicityAudit multiplicity_audit(Mode mode, int n_l, int n_h, int m_h, const BitMatrix& r);

struct Rational {
    long long num = 0;
    long long den = 1;

    bool operator==(const Rational&) const = default;
    std::string str() const;
};

Rational make_rational(long long num, long long den);

enum class MatrixKind { F, R };

/// sigma = ones/order^2, lambda = 1/sigma.  minimum_order_ok applies the
/// realizability floor: order >= 6 for F (multiple-of-3 rule on n_H) and
/// order >= 12 for R (multiple-of-6 rule on m_H); both subsume the generic
/// antisymmetric floor of 5.
struct CompactnessMetrics {
    Rational sigma;
    Rational lambda;
    bool minimum_order_ok = false;
};

CompactnessMetrics compactness_metrics(const BitMatrix& m, MatrixKind kind);

/// Record of the reverse-conversion feasibility claim for one instance: the
/// predicted bound says no F with n_L >= 7 decomposes; the empirical outcome
/// is recorded, never assumed.
struct FeasibilityRecord {
    int n_l = 0;
    int n_h = 0;
    int deg4_count = 0;
    bool size_candidate = false;       // n_H <= 12
    bool deg4_condition = false;       // deg4_count >= n_L / 2
    bool predicted_infeasible = false; // n_L >= 7
    bool empirical_success = false;
    bool agreement = false;  // false only when a predicted-infeasible F decomposes
};

FeasibilityRecord reverse_feasibility_claim(const Embedding& l, const BitMatrix& f);

}  // namespace pct
