#include "pct/bitmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pct {

BitMatrix::BitMatrix(int order)
    : order_(order),
      words_((order + 63) / 64),
      bits_(static_cast<size_t>(order) * ((order + 63) / 64), 0),
      row_sum_(order, 0),
      col_sum_(order, 0)
{
}

void BitMatrix::set(int i, int j, bool value)
{
    uint64_t& w = bits_[static_cast<size_t>(i) * words_ + (j >> 6)];
    uint64_t mask = 1ull << (j & 63);
    bool old = w & mask;
    if (old == value)
        return;
    w ^= mask;
    int d = value ? 1 : -1;
    row_sum_[i] += d;
    col_sum_[j] += d;
}

long BitMatrix::total_ones() const
{
    return std::accumulate(row_sum_.begin(), row_sum_.end(), 0L);
}

bool BitMatrix::rows_equal(int a, int b) const
{
    const uint64_t* ra = &bits_[static_cast<size_t>(a) * words_];
    const uint64_t* rb = &bits_[static_cast<size_t>(b) * words_];
    return std::equal(ra, ra + words_, rb);
}

bool BitMatrix::rows_disjoint(int a, int b) const
{
    const uint64_t* ra = &bits_[static_cast<size_t>(a) * words_];
    const uint64_t* rb = &bits_[static_cast<size_t>(b) * words_];
    for (int w = 0; w < words_; ++w)
        if (ra[w] & rb[w])
            return false;
    return true;
}

bool BitMatrix::cols_equal(int a, int b) const
{
    for (int i = 0; i < order_; ++i)
        if (get(i, a) != get(i, b))
            return false;
    return true;
}

bool BitMatrix::cols_disjoint(int a, int b) const
{
    for (int i = 0; i < order_; ++i)
        if (get(i, a) && get(i, b))
            return false;
    return true;
}

bool BitMatrix::operator==(const BitMatrix& other) const
{
    return order_ == other.order_ && bits_ == other.bits_;
}

std::string BitMatrix::to_text() const
{
    std::string out = std::to_string(order_) + "\n";
    out.reserve(out.size() + static_cast<size_t>(order_) * (order_ + 1));
    for (int i = 0; i < order_; ++i) {
        for (int j = 0; j < order_; ++j)
            out.push_back(get(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BitMatrix BitMatrix::from_text(const std::string& text)
{
    std::istringstream in(text);
    int order = -1;
    if (!(in >> order) || order < 0)
        throw FormatError("matrix text must start with the order");
    BitMatrix m(order);
    std::string row;
    for (int i = 0; i < order; ++i) {
        if (!(in >> row) || static_cast<int>(row.size()) != order)
            throw FormatError("matrix row " + std::to_string(i) + " malformed");
        for (int j = 0; j < order; ++j) {
            if (row[j] != '0' && row[j] != '1')
                throw FormatError("matrix entries must be 0 or 1");
            m.set(i, j, row[j] == '1');
        }
    }
    return m;
}

BitMatrix vertex_adjacency_matrix(const Digraph& d)
{
    BitMatrix f(d.vertex_count);
    for (auto [t, h] : d.arcs)
        f.set(t, h, true);
    return f;
}

BitMatrix arc_adjacency_matrix(const Digraph& d)
{
    const int m = d.arc_count();
    BitMatrix r(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (d.arcs[a].second == d.arcs[b].first)
                r.set(a, b, true);
    return r;
}

Verdict antisymmetry_check(const BitMatrix& m)
{
    Verdict v;
    for (int i = 0; i < m.order(); ++i) {
        if (m.get(i, i)) {
            v.fail("diagonal entry at " + std::to_string(i));
            return v;
        }
        for (int j = i + 1; j < m.order(); ++j)
            if (m.get(i, j) && m.get(j, i)) {
                v.fail("symmetric pair at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                return v;
            }
    }
    return v;
}

bool QuasiDecomposition::all_blocks_2x2() const
{
    for (const auto& b : blocks)
        if (b.rows.size() != 2 || b.cols.size() != 2)
            return false;
    return true;
}

QuasiOutcome quasicanonical_decomposition(const BitMatrix& m)
{
    QuasiOutcome out;
    std::vector<int> nonzero_rows;
    for (int i = 0; i < m.order(); ++i)
        if (m.row_sum(i) > 0)
            nonzero_rows.push_back(i);

    std::vector<int> reps;
    std::vector<std::vector<int>> groups;
    for (int i : nonzero_rows) {
        bool placed = false;
        for (size_t g = 0; g < reps.size(); ++g) {
            if (m.rows_equal(i, reps[g])) {
                groups[g].push_back(i);
                placed = true;
                break;
            }
            if (!m.rows_disjoint(i, reps[g])) {
                out.witness_a = reps[g];
                out.witness_b = i;
                out.note = "rows overlap without being equal";
                return out;
            }
        }
        if (!placed) {
            reps.push_back(i);
            groups.push_back({i});
        }
    }

    // The dual column condition is implied by the row condition; verify it
    // anyway so a corrupted cache cannot slip through.
    std::vector<int> col_group(m.order(), -1);
    for (size_t g = 0; g < reps.size(); ++g)
        for (int j = 0; j < m.order(); ++j)
            if (m.get(reps[g], j)) {
                if (col_group[j] != -1) {
                    out.witness_a = col_group[j];
                    out.witness_b = static_cast<int>(g);
                    out.note = "column claimed by two blocks";
                    return out;
                }
                col_group[j] = static_cast<int>(g);
            }
    for (int j = 0; j < m.order(); ++j)
        for (int k = j + 1; k < m.order(); ++k) {
            if (m.col_sum(j) == 0 || m.col_sum(k) == 0)
                continue;
            if (col_group[j] == col_group[k]) {
                if (!m.cols_equal(j, k)) {
                    out.witness_a = j;
                    out.witness_b = k;
                    out.note = "columns of one block differ";
                    return out;
                }
            } else if (!m.cols_disjoint(j, k)) {
                out.witness_a = j;
                out.witness_b = k;
                out.note = "columns overlap across blocks";
                return out;
            }
        }

    out.ok = true;
    for (size_t g = 0; g < reps.size(); ++g) {
        QuasiBlock b;
        b.rows = groups[g];
        for (int j = 0; j < m.order(); ++j)
            if (m.get(reps[g], j))
                b.cols.push_back(j);
        out.dec.covered_ones +=
            static_cast<long>(b.rows.size()) * static_cast<long>(b.cols.size());
        out.dec.blocks.push_back(std::move(b));
    }
    out.dec.unassigned = m.total_ones() - out.dec.covered_ones;
    return out;
}

ReverseOutcome reverse_convert(const BitMatrix& m)
{
    ReverseOutcome out;
    QuasiOutcome q = quasicanonical_decomposition(m);
    if (!q.ok) {
        out.witness_a = q.witness_a;
        out.witness_b = q.witness_b;
        return out;
    }

    const int order = m.order();
    std::vector<int> head_of(order, -1), tail_of(order, -1);
    for (size_t g = 0; g < q.dec.blocks.size(); ++g) {
        for (int a : q.dec.blocks[g].rows)
            head_of[a] = static_cast<int>(g);
        for (int b : q.dec.blocks[g].cols)
            tail_of[b] = static_cast<int>(g);
    }
    int next_vertex = static_cast<int>(q.dec.blocks.size());
    for (int a = 0; a < order; ++a)
        if (head_of[a] == -1)
            head_of[a] = next_vertex++;  // fresh sink: arc with no successor
    for (int a = 0; a < order; ++a)
        if (tail_of[a] == -1)
            tail_of[a] = next_vertex++;  // fresh source: arc with no predecessor

    out.ok = true;
    out.g.vertex_count = next_vertex;
    out.g.arcs.reserve(order);
    for (int a = 0; a < order; ++a)
        out.g.arcs.emplace_back(tail_of[a], head_of[a]);
    return out;
}

ArcIsoResult check_arc_isomorphism(const Digraph& a, const Digraph& b)
{
    ArcIsoResult res;
    if (a.arc_count() != b.arc_count()) {
        res.issue = "arc counts differ";
        return res;
    }
    res.vertex_map.assign(a.vertex_count, -1);
    for (int i = 0; i < a.arc_count(); ++i) {
        auto [at, ah] = a.arcs[i];
        auto [bt, bh] = b.arcs[i];
        for (auto [av, bv] : {std::pair{at, bt}, std::pair{ah, bh}}) {
            if (res.vertex_map[av] == -1)
                res.vertex_map[av] = bv;
            else if (res.vertex_map[av] != bv) {
                res.issue = "vertex " + std::to_string(av) + " maps inconsistently";
                return res;
            }
        }
    }
    std::vector<int> hit;
    for (int v : res.vertex_map)
        if (v >= 0)
            hit.push_back(v);
    std::sort(hit.begin(), hit.end());
    if (std::adjacent_find(hit.begin(), hit.end()) != hit.end()) {
        res.issue = "vertex map is not injective";
        return res;
    }
    for (int i = 0; i < a.arc_count(); ++i) {
        auto [at, ah] = a.arcs[i];
        if (std::make_pair(res.vertex_map[at], res.vertex_map[ah]) != b.arcs[i]) {
            res.issue = "arc " + std::to_string(i) + " not preserved";
            return res;
        }
    }
    res.ok = true;
    return res;
}

MultiplicityAudit multiplicity_audit(Mode mode, int n_l, int n_h, int m_h, const BitMatrix& r)
{
    MultiplicityAudit audit;
    if (mode != Mode::sphere || n_l < 4) {
        audit.skipped = true;
        return audit;
    }
    auto& v = audit.verdict;
    if (m_h % 6 != 0)
        v.fail("m_H = " + std::to_string(m_h) + " not a multiple of 6");
    if (n_h % 3 != 0)
        v.fail("n_H = " + std::to_string(n_h) + " not a multiple of 3");
    long sum = r.total_ones();
    if (sum != 2L * m_h)
        v.fail("sum(R) = " + std::to_string(sum) + " != 2 m_H");
    if (sum % 12 != 0)
        v.fail("sum(R) = " + std::to_string(sum) + " not a multiple of 12");
    if (sum % 4 != 0)
        v.fail("sum(R) = " + std::to_string(sum) + " not a multiple of 4");
    return audit;
}

Rational make_rational(long long num, long long den)
{
    if (den == 0)
        return {0, 0};
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::string Rational::str() const
{
    if (den == 1)
        return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

CompactnessMetrics compactness_metrics(const BitMatrix& m, MatrixKind kind)
{
    CompactnessMetrics cm;
    long ones = m.total_ones();
    long long sq = static_cast<long long>(m.order()) * m.order();
    cm.sigma = make_rational(ones, sq);
    cm.lambda = ones > 0 ? make_rational(sq, ones) : Rational{0, 1};
    int floor = kind == MatrixKind::F ? 6 : 12;
    cm.minimum_order_ok = m.order() >= floor;
    return cm;
}

FeasibilityRecord reverse_feasibility_claim(const Embedding& l, const BitMatrix& f)
{
    FeasibilityRecord rec;
    rec.n_l = l.vertex_count();
    rec.n_h = f.order();
    for (int v = 0; v < l.vertex_count(); ++v)
        if (l.degree(v) == 4)
            ++rec.deg4_count;
    rec.size_candidate = rec.n_h <= 12;
    rec.deg4_condition = 2 * rec.deg4_count >= rec.n_l;
    rec.predicted_infeasible = rec.n_l >= 7;
    rec.empirical_success = quasicanonical_decomposition(f).ok;
    rec.agreement = !(rec.predicted_infeasible && rec.empirical_success);
    return rec;
}

}  // namespace pct
