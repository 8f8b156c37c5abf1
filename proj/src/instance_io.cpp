#include "triclub/instance_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace triclub {

namespace {

std::vector<std::string> tokens(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

[[noreturn]] void bad_line(int lineno, const std::string& why) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + why);
}

int parse_int(const std::string& s, int lineno) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) bad_line(lineno, "not an integer: " + s);
        return v;
    } catch (const std::invalid_argument&) {
        bad_line(lineno, "not an integer: " + s);
    } catch (const std::out_of_range&) {
        bad_line(lineno, "integer out of range: " + s);
    }
}

variant parse_variant(const std::string& s, int lineno) {
    if (s == "club") return variant::club;
    if (s == "vt") return variant::vertex_triangle;
    if (s == "et") return variant::edge_triangle;
    if (s == "seeded") return variant::seeded;
    bad_line(lineno, "unknown variant: " + s);
}

std::vector<int> parse_id_list(const std::string& s, int lineno) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(parse_int(cur, lineno));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

}  // namespace

instance_file parse_instance(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool dimacs = false;
    int declared_n = -1;
    int max_id = -1;
    std::vector<std::pair<int, int>> edges;
    std::optional<problem_spec> spec;
    std::vector<std::pair<int, role_label>> layout;

    auto note_edge = [&](int u, int v, int ln) {
        if (u == v) bad_line(ln, "self-loop " + std::to_string(u) + " " + std::to_string(v));
        if (u < 0 || v < 0) bad_line(ln, "negative vertex id");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> t = tokens(line);
        if (t.empty()) continue;
        if (t[0] == "c" || t[0] == "#") {
            if (t.size() >= 2 && t[1] == "n" && t.size() >= 3) {
                declared_n = parse_int(t[2], lineno);
            } else if (t.size() >= 2 && t[1] == "spec") {
                problem_spec ps;
                bool have_variant = false;
                for (size_t i = 2; i < t.size(); ++i) {
                    auto eq = t[i].find('=');
                    if (eq == std::string::npos) bad_line(lineno, "malformed spec token: " + t[i]);
                    std::string key = t[i].substr(0, eq), val = t[i].substr(eq + 1);
                    if (key == "variant") {
                        ps.var = parse_variant(val, lineno);
                        have_variant = true;
                    } else if (key == "s") {
                        ps.s = parse_int(val, lineno);
                    } else if (key == "l") {
                        ps.ell = parse_int(val, lineno);
                    } else if (key == "k") {
                        ps.k = parse_int(val, lineno);
                    } else if (key == "seed") {
                        ps.seeds = vertex_set(parse_id_list(val, lineno));
                    } else {
                        bad_line(lineno, "unknown spec key: " + key);
                    }
                }
                if (!have_variant) bad_line(lineno, "spec comment without variant");
                spec = std::move(ps);
            } else if (t.size() >= 2 && t[1] == "layout") {
                if (t.size() != 7) bad_line(lineno, "layout line needs: c layout id tag owner i j");
                role_label l;
                int id = parse_int(t[2], lineno);
                l.tag = t[3];
                l.owner = parse_int(t[4], lineno);
                l.i = parse_int(t[5], lineno);
                l.j = parse_int(t[6], lineno);
                layout.emplace_back(id, std::move(l));
                max_id = std::max(max_id, id);
            }
            continue;
        }
        if (t[0] == "p") {
            if (t.size() < 4 || t[1] != "edge") bad_line(lineno, "malformed problem line");
            declared_n = parse_int(t[2], lineno);
            dimacs = true;
            continue;
        }
        if (t[0] == "e") {
            if (t.size() != 3) bad_line(lineno, "malformed edge line");
            int u = parse_int(t[1], lineno), v = parse_int(t[2], lineno);
            if (u < 1 || v < 1) bad_line(lineno, "DIMACS vertex ids are 1-based");
            note_edge(u - 1, v - 1, lineno);
            continue;
        }
        if (t.size() != 2) bad_line(lineno, "expected two vertex ids");
        if (dimacs) bad_line(lineno, "plain edge line inside a DIMACS file");
        note_edge(parse_int(t[0], lineno), parse_int(t[1], lineno), lineno);
    }

    int n = std::max(declared_n, max_id + 1);
    if (n < 0) n = 0;
    instance_file out;
    try {
        out.g = graph::build(n, edges);
    } catch (const std::invalid_argument& err) {
        throw std::invalid_argument(std::string("instance rejected: ") + err.what());
    }
    out.spec = std::move(spec);
    out.layout = std::move(layout);
    return out;
}

std::string serialize_instance(const instance_file& inst) {
    std::ostringstream out;
    if (inst.spec.has_value()) {
        const problem_spec& ps = *inst.spec;
        out << "c spec variant=" << variant_name(ps.var) << " s=" << ps.s;
        if (ps.ell > 0) out << " l=" << ps.ell;
        out << " k=" << ps.k;
        if (!ps.seeds.empty()) {
            out << " seed=";
            const auto& ids = ps.seeds.ids();
            for (size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
        }
        out << "\n";
    }
    out << "c n " << inst.g.vertex_count() << "\n";
    for (const auto& [u, v] : inst.g.edge_list()) out << u << " " << v << "\n";
    for (const auto& [id, l] : inst.layout)
        out << "c layout " << id << " " << l.tag << " " << l.owner << " " << l.i << " " << l.j << "\n";
    return out.str();
}

instance_file instance_of(const gadget_instance& gi) {
    instance_file out;
    out.g = gi.g;
    out.spec = gi.spec;
    for (size_t v = 0; v < gi.layout.size(); ++v)
        out.layout.emplace_back(static_cast<int>(v), gi.layout[v]);
    return out;
}

certificate parse_certificate(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<int> members;
    std::vector<std::pair<int, int>> edges;
    bool have_edges = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> t = tokens(line);
        if (t.empty() || t[0] == "c" || t[0] == "#") continue;
        if (t[0] == "e") {
            if (t.size() != 3) bad_line(lineno, "malformed certificate edge line");
            edges.emplace_back(parse_int(t[1], lineno), parse_int(t[2], lineno));
            have_edges = true;
            continue;
        }
        if (t.size() != 1) bad_line(lineno, "expected one vertex id per line");
        members.push_back(parse_int(t[0], lineno));
    }
    certificate cert;
    cert.members = vertex_set(std::move(members));
    if (have_edges) cert.witness_edges = edge_set(std::move(edges));
    return cert;
}

std::string serialize_certificate(const certificate& cert) {
    std::ostringstream out;
    for (int v : cert.members.ids()) out << v << "\n";
    if (cert.witness_edges.has_value())
        for (const auto& [u, v] : cert.witness_edges->pairs()) out << "e " << u << " " << v << "\n";
    return out.str();
}

}  // namespace triclub
