#include "pct/identities.hpp"

#include <stdexcept>

namespace pct {

const IdentityCheck* IdentityReport::find(const std::string& name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

IdentityReport identity_report(const Embedding& l, const ConjugateGraph& h,
                               const FaceClassification& cls)
{
    IdentityReport r;
    if (h.mode != Mode::sphere) {
        r.mode_skipped = true;
        return r;
    }

    r.n_l = l.vertex_count();
    r.m_l = l.edge_count();
    r.mu_l = h.l_face_count;
    r.n_h = h.h.vertex_count();
    r.m_h = h.h.edge_count();
    r.mu_h1 = cls.class1_count();
    r.mu_h2 = cls.class2_count();
    r.nu_l = cyclomatic_number(l);
    r.nu_h = cyclomatic_number(h.h);
    r.nu_m = (r.nu_l + 3) / 2;
    r.delta_l = r.nu_h - r.nu_l;
    r.k = r.n_l - 2;
    r.delta_even = (r.delta_l % 2 == 0);

    auto add = [&](const std::string& name, long lhs, long rhs) {
        r.checks.push_back({name, lhs, rhs, lhs == rhs});
    };

    add("nh_eq_ml", r.n_h, r.m_l);
    add("nh_eq_3nl_minus_6", r.n_h, 3 * r.n_l - 6);
    add("mh_eq_6nl_minus_12", r.m_h, 6 * r.n_l - 12);
    add("ml_eq_3nl_minus_6", r.m_l, 3 * r.n_l - 6);
    add("nul_eq_2nl_minus_5", r.nu_l, 2 * r.n_l - 5);
    add("nuh_eq_nh_plus_1", r.nu_h, r.n_h + 1);
    add("mh_eq_2nh", r.m_h, 2 * r.n_h);
    add("two_nuh_eq_mh_plus_2", 2 * r.nu_h, r.m_h + 2);  // nu_H = m_H/2 + 1
    add("nuh_eq_ml_plus_1", r.nu_h, r.m_l + 1);
    add("mu1_eq_mul", r.mu_h1, r.mu_l);
    add("mu1_eq_2nl_minus_4", r.mu_h1, 2 * r.n_l - 4);
    add("mu2_eq_nl", r.mu_h2, r.n_l);
    add("nuh_eq_mu1_plus_mu2_minus_1", r.nu_h, r.mu_h1 + r.mu_h2 - 1);
    add("two_nuh_eq_3nul_plus_5", 2 * r.nu_h, 3 * r.nu_l + 5);  // nu_H = 3/2 nu_L + 5/2
    add("two_delta_eq_nul_plus_5", 2 * r.delta_l, r.nu_l + 5);
    add("nuh_eq_nul_plus_delta", r.nu_h, r.nu_l + r.delta_l);
    add("num_eq_nl_minus_1", r.nu_m, r.n_l - 1);
    add("nul_eq_2num_minus_3", r.nu_l, 2 * r.nu_m - 3);
    add("nuh_eq_3num_minus_2", r.nu_h, 3 * r.nu_m - 2);
    add("nuh_eq_3nl_minus_5", r.nu_h, 3 * r.n_l - 5);
    add("nuh_mod3_eq_1", r.nu_h % 3, 1);
    add("nh_eq_3k", r.n_h, 3 * r.k);
    add("mh_eq_6k", r.m_h, 6 * r.k);
    add("nuh_eq_3k_plus_1", r.nu_h, 3 * r.k + 1);

    r.all_pass = true;
    for (const auto& c : r.checks)
        r.all_pass &= c.pass;
    return r;
}

std::vector<KTableRow> k_table(int k_max)
{
    if (k_max < 1)
        throw std::invalid_argument("k_table() needs k_max >= 1");
    std::vector<KTableRow> rows;
    rows.reserve(k_max);
    for (long k = 1; k <= k_max; ++k)
        rows.push_back({k, k + 2, 3 * k, 6 * k, 3 * k + 1});
    return rows;
}

RelationTables relation_tables(int k_max)
{
    RelationTables t;
    t.rows = k_table(k_max);
    for (long k = 1; k <= k_max; ++k) {
        long n_l = k + 2;
        t.l_n.push_back(n_l);
        t.l_m.push_back(3 * n_l - 6);
        t.l_nu.push_back(2 * n_l - 5);
        t.l_ratio.push_back(make_rational(2 * n_l - 5, n_l));
        long n_h = 3 * k;
        t.h_n.push_back(n_h);
        t.h_m.push_back(2 * n_h);
        t.h_nu.push_back(n_h + 1);
        t.h_ratio.push_back(make_rational(n_h + 1, n_h));
        t.k_nu_l.push_back(2 * k - 1);
        t.k_nu_m.push_back(k + 1);
    }
    return t;
}

}  // namespace pct
