#include "pct/textio.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace pct {

namespace {

struct RawRecord {
    std::map<int, std::vector<std::pair<int, int>>> rows;  // vertex -> (nbr, edge or -1)
    std::optional<std::pair<int, int>> outer;
    bool any_edge_ids = false;
    bool all_edge_ids = true;
};

ParsedInstance finish_record(const RawRecord& rec)
{
    const int n = static_cast<int>(rec.rows.size());
    for (const auto& [v, _] : rec.rows)
        if (v < 0 || v >= n)
            throw FormatError("vertex ids must be 0.." + std::to_string(n - 1) +
                              ", got " + std::to_string(v));
    if (rec.any_edge_ids && !rec.all_edge_ids)
        throw FormatError("mixed neighbor tokens: edge ids must be used on every token or none");

    Embedding e = [&] {
        if (rec.any_edge_ids) {
            std::vector<std::vector<std::pair<int, int>>> lists(n);
            for (const auto& [v, row] : rec.rows)
                lists[v] = row;
            return Embedding::from_rotations_with_edges(n, lists);
        }
        std::vector<std::vector<int>> lists(n);
        for (const auto& [v, row] : rec.rows)
            for (auto [u, _] : row)
                lists[v].push_back(u);
        return Embedding::from_rotations(lists);
    }();
    return ParsedInstance{std::move(e), rec.outer};
}

}  // namespace

std::vector<ParsedInstance> parse_instances(std::istream& in)
{
    std::vector<ParsedInstance> out;
    RawRecord rec;
    bool in_record = false;
    std::string line;
    int lineno = 0;

    auto flush = [&] {
        if (in_record) {
            out.push_back(finish_record(rec));
            rec = RawRecord{};
            in_record = false;
        }
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) {
            flush();
            continue;
        }
        if (first == "!outer:") {
            int u, v;
            if (!(ls >> u >> v))
                throw FormatError("line " + std::to_string(lineno) + ": !outer: needs two vertex ids");
            rec.outer = {u, v};
            in_record = true;
            continue;
        }
        if (first.empty() || first.back() != ':')
            throw FormatError("line " + std::to_string(lineno) + ": expected '<vertex>:'");
        int v;
        try {
            v = std::stoi(first.substr(0, first.size() - 1));
        } catch (...) {
            throw FormatError("line " + std::to_string(lineno) + ": bad vertex id '" + first + "'");
        }
        if (rec.rows.count(v))
            throw FormatError("line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                              " listed twice");
        std::vector<std::pair<int, int>> row;
        std::string tok;
        while (ls >> tok) {
            int nbr, eid = -1;
            auto at = tok.find('@');
            try {
                size_t used = 0;
                if (at == std::string::npos) {
                    nbr = std::stoi(tok, &used);
                    if (used != tok.size())
                        throw FormatError("");
                    rec.all_edge_ids = false;
                } else {
                    nbr = std::stoi(tok.substr(0, at), &used);
                    if (used != at)
                        throw FormatError("");
                    eid = std::stoi(tok.substr(at + 1), &used);
                    if (used != tok.size() - at - 1)
                        throw FormatError("");
                    rec.any_edge_ids = true;
                }
            } catch (...) {
                throw FormatError("line " + std::to_string(lineno) + ": bad neighbor token '" + tok +
                                  "'");
            }
            row.emplace_back(nbr, eid);
        }
        rec.rows[v] = std::move(row);
        in_record = true;
    }
    flush();
    return out;
}

std::vector<ParsedInstance> parse_instances_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path);
    return parse_instances(in);
}

void write_instance(std::ostream& out, const Embedding& e,
                    std::optional<std::pair<int, int>> outer_dart, const std::string& comment)
{
    if (!comment.empty())
        out << "# " << comment << "\n";
    if (outer_dart)
        out << "!outer: " << outer_dart->first << " " << outer_dart->second << "\n";
    const bool need_ids = !e.is_simple();
    auto rows = e.rotations_with_edges();
    for (int v = 0; v < e.vertex_count(); ++v) {
        out << v << ":";
        for (auto [u, eid] : rows[v]) {
            out << " " << u;
            if (need_ids)
                out << "@" << eid;
        }
        out << "\n";
    }
}

std::string instance_to_string(const Embedding& e, std::optional<std::pair<int, int>> outer_dart,
                               const std::string& comment)
{
    std::ostringstream os;
    write_instance(os, e, outer_dart, comment);
    return os.str();
}

int face_of_dart_pair(const Embedding& e, const FaceSet& fs, int u, int v)
{
    if (u < 0 || u >= e.vertex_count())
        return -1;
    for (int d : e.rotation(u))
        if (e.head(d) == v)
            return fs.face_of_dart[d];
    return -1;
}

}  // namespace pct
