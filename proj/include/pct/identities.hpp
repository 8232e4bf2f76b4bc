#pragma once

#include <string>
#include <vector>

#include "pct/bitmatrix.hpp"
#include "pct/conjugate.hpp"
#include "pct/embedding.hpp"

namespace pct {

struct IdentityCheck {
    std::string name;
    long lhs = 0;
    long rhs = 0;
    bool pass = false;
};

// Every counting identity relating L, its conjugate H, and the arithmetic
// companion graph M, evaluated in exact integer arithmetic from measured
// quantities.  nu_M is arithmetic only: (nu_L + 3) / 2.
struct IdentityReport {
    bool mode_skipped = false;  // disk instances skip the sphere identities
    long n_l = 0, m_l = 0, mu_l = 0;
    long n_h = 0, m_h = 0, mu_h1 = 0, mu_h2 = 0;
    long nu_l = 0, nu_h = 0, nu_m = 0;
    long delta_l = 0;  // nu_H - nu_L
    long k = 0;        // n_L - 2
    // Recorded observation, not asserted: the increment delta_l equals n_L,
    // so it is even exactly when n_L is.
    bool delta_even = false;
    std::vector<IdentityCheck> checks;
    bool all_pass = false;

    const IdentityCheck* find(const std::string& name) const;
};

IdentityReport identity_report(const Embedding& l, const ConjugateGraph& h,
                               const FaceClassification& cls);

struct KTableRow {
    long k = 0, n_l = 0, n_h = 0, m_h = 0, nu_h = 0;
};

/// Rows (k, n_L = k+2, n_H = 3k, m_H = 6k, nu_H = 3k+1) for k = 1..k_max.
std::vector<KTableRow> k_table(int k_max);

/// Closed-form series behind the summary tables and charts.
struct RelationTables {
    // per n_L = 3..: m_L, nu_L and the ratio nu_L/n_L
    std::vector<long> l_n, l_m, l_nu;
    std::vector<Rational> l_ratio;
    // per n_H = 3k: m_H, nu_H and the ratio nu_H/n_H
    std::vector<long> h_n, h_m, h_nu;
    std::vector<Rational> h_ratio;
    // per k: the full row plus nu pairs (nu_L, nu_H)
    std::vector<KTableRow> rows;
    std::vector<long> k_nu_l;
    std::vector<long> k_nu_m;
};

RelationTables relation_tables(int k_max);

}  // namespace pct
