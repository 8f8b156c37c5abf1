#include "triclub/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "triclub/instance_io.hpp"
#include "triclub/kernel.hpp"
#include "triclub/solve.hpp"

namespace triclub::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
    out << text;
}

variant variant_from_name(const std::string& name) {
    if (name == "club") return variant::club;
    if (name == "vt") return variant::vertex_triangle;
    if (name == "et") return variant::edge_triangle;
    if (name == "seeded") return variant::seeded;
    throw std::invalid_argument("unknown variant: " + name);
}

struct spec_flags {
    std::string variant_name;
    int s = 0;
    int ell = 0;
    int k = 0;
    std::string seed_list;

    void attach(CLI::App* cmd, bool with_k = true) {
        cmd->add_option("--variant", variant_name, "problem variant: club, vt, et, seeded");
        cmd->add_option("-s,--diameter", s, "diameter bound s");
        cmd->add_option("-l,--triangles", ell, "triangle threshold (vt/et)");
        if (with_k) cmd->add_option("-k,--size", k, "target solution size");
        cmd->add_option("--seed", seed_list, "comma-separated seed vertices (seeded variant)");
    }

    // File spec (if any) provides defaults; explicit flags win.
    problem_spec resolve(const instance_file& inst) const {
        problem_spec ps;
        if (inst.spec.has_value()) ps = *inst.spec;
        if (!variant_name.empty()) ps.var = variant_from_name(variant_name);
        if (s > 0) ps.s = s;
        if (ell > 0) ps.ell = ell;
        if (k > 0) ps.k = k;
        if (!seed_list.empty()) {
            std::vector<int> ids;
            std::string cur;
            for (char ch : seed_list + ",") {
                if (ch == ',') {
                    if (!cur.empty()) ids.push_back(std::stoi(cur));
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            ps.seeds = vertex_set(std::move(ids));
        }
        const bool triangle = ps.var == variant::vertex_triangle || ps.var == variant::edge_triangle;
        if (!triangle) {
            if (ell > 0)
                throw std::invalid_argument("-l applies to the triangle variants only, not to '" +
                                            std::string(triclub::variant_name(ps.var)) + "'");
            ps.ell = 0;  // discard stale file defaults after a variant override
        }
        if (ps.var != variant::seeded) {
            if (!seed_list.empty())
                throw std::invalid_argument("--seed applies to the seeded variant only");
            ps.seeds = vertex_set{};
        }
        return ps;
    }
};

json certificate_json(const certificate& cert) {
    json c;
    c["vertices"] = cert.members.ids();
    if (cert.witness_edges.has_value()) {
        json edges = json::array();
        for (const auto& [u, v] : cert.witness_edges->pairs()) edges.push_back({u, v});
        c["edges"] = std::move(edges);
    }
    return c;
}

json trace_json(const kernel_trace& trace) {
    json t;
    t["removed_vertices"] = trace.removed_vertices.size();
    t["removed_edges"] = trace.removed_edges.size();
    t["rounds"] = trace.rounds;
    t["infeasible"] = trace.infeasible;
    t["shortcut_size"] =
        trace.shortcut_witness.has_value() ? trace.shortcut_witness->members.size() : 0;
    return t;
}

json spec_json(const problem_spec& ps) {
    json d;
    d["variant"] = variant_name(ps.var);
    d["s"] = ps.s;
    if (ps.ell > 0) d["l"] = ps.ell;
    d["k"] = ps.k;
    if (!ps.seeds.empty()) d["seed"] = ps.seeds.ids();
    return d;
}

// Explains which condition a certificate violates, for human output.
std::pair<bool, std::string> explain_verification(const graph& g, const problem_spec& ps,
                                                  const certificate& cert) {
    if (cert.members.empty()) return {false, "certificate is empty"};
    for (int v : cert.members.ids())
        if (v < 0 || v >= g.vertex_count())
            return {false, "certificate vertex " + std::to_string(v) + " out of range"};

    if (ps.var == variant::seeded) {
        for (int w : ps.seeds.ids())
            if (!cert.members.contains(w))
                return {false, "seed vertex " + std::to_string(w) + " missing from certificate"};
    }
    if (ps.var == variant::vertex_triangle) {
        std::vector<int> counts = vertex_triangle_counts(g, &cert.members);
        for (int v : cert.members.ids())
            if (counts[v] < ps.ell)
                return {false, "vertex " + std::to_string(v) + " lies in " + std::to_string(counts[v]) +
                                   " triangles, needs " + std::to_string(ps.ell)};
    }
    if (ps.var == variant::edge_triangle) {
        auto [ok, f] = verify_edge_triangle_club(g, cert.members, ps.s, ps.ell);
        if (!ok) {
            edge_set peeled = truss_peel(g, ps.ell, &cert.members);
            auto d = diameter(g, &cert.members, &peeled);
            if (!d.has_value())
                return {false, "peeled witness subgraph is disconnected"};
            return {false, "peeled witness subgraph has diameter " + std::to_string(*d) + " > s=" +
                               std::to_string(ps.s)};
        }
        if (cert.witness_edges.has_value()) {
            for (const auto& [u, v] : cert.witness_edges->pairs()) {
                if (!cert.members.contains(u) || !cert.members.contains(v))
                    return {false, "witness edge endpoint outside the certificate"};
                if (!f.contains(u, v))
                    return {false, "claimed witness edge " + std::to_string(u) + "-" + std::to_string(v) +
                                       " does not survive peeling"};
            }
        }
        return {true, ""};
    }
    auto d = diameter(g, &cert.members);
    if (!d.has_value()) return {false, "induced subgraph is disconnected"};
    if (*d > ps.s)
        return {false, "induced subgraph has diameter " + std::to_string(*d) + " > s=" + std::to_string(ps.s)};
    return {true, ""};
}

int cmd_solve(const std::string& instance_path, const spec_flags& flags, bool decide, bool as_json,
              int threads, const std::string& cert_out) {
    instance_file inst = parse_instance(read_file(instance_path));
    problem_spec ps = flags.resolve(inst);
    ps.validate(inst.g);
    solve_options opt;
    opt.threads = threads;

    auto t0 = std::chrono::steady_clock::now();
    json doc;
    doc["command"] = decide ? "decide" : "solve";
    doc["spec"] = spec_json(ps);
    doc["n"] = inst.g.vertex_count();
    doc["m"] = inst.g.edge_count();
    doc["threads"] = threads;

    int exit_code = 1;
    std::optional<certificate> cert;
    if (decide) {
        decision_result res = solve_decision(inst.g, ps, opt);
        doc["decision"] = res.yes;
        doc["optimum_size"] = res.cert.has_value() ? res.cert->members.size() : 0;
        doc["nodes_explored"] = res.nodes_explored;
        doc["used_shortcut"] = res.used_shortcut;
        doc["kernel"] = trace_json(res.trace);
        cert = res.cert;
        exit_code = res.yes ? 0 : 1;
    } else {
        solve_result res = solve_max(inst.g, ps, opt);
        doc["optimum_size"] = res.optimum_size;
        doc["nodes_explored"] = res.nodes_explored;
        doc["used_shortcut"] = res.used_shortcut;
        doc["kernel"] = trace_json(res.trace);
        cert = res.best;
        bool yes = flags.k > 0 || inst.spec.has_value() ? res.optimum_size >= ps.k
                                                        : res.optimum_size >= 1;
        exit_code = yes ? 0 : 1;
    }
    if (cert.has_value()) doc["certificate"] = certificate_json(*cert);
    auto t1 = std::chrono::steady_clock::now();
    doc["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();

    if (!cert_out.empty() && cert.has_value()) write_file(cert_out, serialize_certificate(*cert));
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        if (decide)
            std::cout << (exit_code == 0 ? "yes" : "no") << "\n";
        else
            std::cout << "optimum " << doc["optimum_size"] << "\n";
        if (cert.has_value()) {
            std::cout << "solution:";
            for (int v : cert->members.ids()) std::cout << " " << v;
            std::cout << "\n";
        }
    }
    return exit_code;
}

int cmd_verify(const std::string& instance_path, const std::string& cert_path, const spec_flags& flags,
               int robust_budget, std::uint64_t rng_seed, bool as_json) {
    instance_file inst = parse_instance(read_file(instance_path));
    problem_spec ps = flags.resolve(inst);
    ps.validate(inst.g);
    certificate cert = parse_certificate(read_file(cert_path));

    auto [ok, why] = explain_verification(inst.g, ps, cert);
    int have_k = flags.k > 0 ? flags.k : (inst.spec.has_value() ? inst.spec->k : 0);
    if (ok && have_k > 0 && cert.members.size() < have_k) {
        ok = false;
        why = "certificate has " + std::to_string(cert.members.size()) + " vertices, needs k=" +
              std::to_string(have_k);
    }
    bool robust = true;
    if (ok && robust_budget >= 0) {
        if (ps.var != variant::edge_triangle)
            throw std::invalid_argument("robustness checks apply to the edge variant only");
        robustness_options ropt;
        ropt.rng_seed = rng_seed;
        robust = robustness_check(inst.g, cert, ps.s, ps.ell, robust_budget, ropt);
        if (!robust) why = "diameter bound violated after deleting " + std::to_string(robust_budget) + " witness edges";
    }

    if (as_json) {
        json doc;
        doc["command"] = "verify";
        doc["spec"] = spec_json(ps);
        doc["valid"] = ok && robust;
        if (!(ok && robust)) doc["violated"] = why;
        doc["size"] = cert.members.size();
        if (robust_budget >= 0) {
            doc["robust_budget"] = robust_budget;
            doc["rng_seed"] = rng_seed;
        }
        std::cout << doc.dump(2) << "\n";
    } else if (ok && robust) {
        std::cout << "ok: certificate verifies (" << cert.members.size() << " vertices)\n";
    } else {
        std::cout << "invalid: " << why << "\n";
    }
    return ok && robust ? 0 : 1;
}

int cmd_kernelize(const std::string& instance_path, const spec_flags& flags, bool as_json) {
    instance_file inst = parse_instance(read_file(instance_path));
    problem_spec ps = flags.resolve(inst);
    ps.validate(inst.g);

    turing_decomposition dec = turing_subinstances(inst.g, ps);  // rejects uncovered combinations

    if (as_json) {
        json doc;
        doc["command"] = "kernelize";
        doc["spec"] = spec_json(ps);
        doc["kernel"] = trace_json(dec.trace);
        doc["alive"] = dec.alive.size();
        json subs = json::array();
        for (const auto& sub : dec.subinstances) {
            json s;
            if (sub.center.has_value()) s["center"] = *sub.center;
            s["universe_size"] = sub.universe.size();
            s["bound"] = sub.bound;
            subs.push_back(std::move(s));
        }
        doc["subinstances"] = std::move(subs);
        if (dec.shortcut.has_value()) doc["shortcut"] = certificate_json(*dec.shortcut);
        std::cout << doc.dump(2) << "\n";
        return dec.trace.infeasible ? 1 : 0;
    }

    instance_file reduced;
    reduced.g = dec.reduced;
    reduced.spec = ps;
    std::cout << serialize_instance(reduced);
    std::cout << "c trace removed_vertices=" << dec.trace.removed_vertices.size()
              << " removed_edges=" << dec.trace.removed_edges.size() << " rounds=" << dec.trace.rounds
              << " infeasible=" << (dec.trace.infeasible ? 1 : 0) << "\n";
    if (dec.shortcut.has_value()) {
        std::cout << "c shortcut size=" << dec.shortcut->members.size() << " vertices=";
        const auto& ids = dec.shortcut->members.ids();
        for (size_t i = 0; i < ids.size(); ++i) std::cout << (i ? "," : "") << ids[i];
        std::cout << "\n";
    } else {
        for (const auto& sub : dec.subinstances)
            if (sub.center.has_value())
                std::cout << "c universe center=" << *sub.center << " size=" << sub.universe.size()
                          << " bound=" << sub.bound << "\n";
            else
                std::cout << "c universe seeded size=" << sub.universe.size() << " bound=" << sub.bound
                          << "\n";
    }
    return dec.trace.infeasible ? 1 : 0;
}

int cmd_generate(const std::string& construction, const std::string& source_path,
                 const std::string& shape_path, int k, int s, int ell, int n, double p,
                 std::uint64_t rng_seed, const std::string& out_path) {
    if (construction == "gnp") {
        instance_file out;
        out.g = gen_random_gnp(n, p, rng_seed);
        write_file(out_path, serialize_instance(out));
        return 0;
    }
    if (source_path.empty()) throw std::invalid_argument("--source is required for gadget constructions");
    graph source = parse_instance(read_file(source_path)).g;
    gadget_instance gi;
    if (construction == "vt2") {
        gi = gen_vt2(source, k, ell);
    } else if (construction == "vts") {
        gi = gen_vts(source, k, ell, s);
    } else if (construction == "et") {
        gi = gen_et(source, k, ell, s);
    } else if (construction == "seeded2" || construction == "seededs") {
        if (shape_path.empty())
            throw std::invalid_argument("--shape is required for the seeded constructions");
        graph shape = parse_instance(read_file(shape_path)).g;
        gi = construction == "seeded2" ? gen_seeded2(source, k, shape)
                                       : gen_seededs(source, k, shape, s);
    } else {
        throw std::invalid_argument("unknown construction: " + construction);
    }
    write_file(out_path, serialize_instance(instance_of(gi)));
    return 0;
}

int cmd_oracle(const std::string& instance_path, const spec_flags& flags, bool clique, bool as_json) {
    instance_file inst = parse_instance(read_file(instance_path));
    if (clique) {
        clique_result res = clique_max(inst.g);
        if (as_json) {
            json doc;
            doc["command"] = "oracle";
            doc["clique_size"] = res.size;
            doc["clique"] = res.members.ids();
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "maximum clique " << res.size << "\n";
        }
        return res.size >= 1 ? 0 : 1;
    }
    problem_spec ps = flags.resolve(inst);
    ps.validate(inst.g);
    solve_result res = brute_force_max(inst.g, ps);
    if (as_json) {
        json doc;
        doc["command"] = "oracle";
        doc["spec"] = spec_json(ps);
        doc["optimum_size"] = res.optimum_size;
        doc["subsets_tested"] = res.nodes_explored;
        if (res.best.has_value()) doc["certificate"] = certificate_json(*res.best);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "optimum " << res.optimum_size << "\n";
    }
    int have_k = flags.k > 0 ? flags.k : (inst.spec.has_value() ? inst.spec->k : 1);
    return res.optimum_size >= have_k ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"exact solvers, kernels and gadget generators for triangle- and seed-constrained s-clubs"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "exact search for a maximum solution");
    std::string solve_instance;
    solve->add_option("instance", solve_instance, "instance file (- for stdin)")->required();
    spec_flags solve_flags;
    solve_flags.attach(solve);
    bool flag_max = false, flag_decide = false, solve_json = false;
    int threads = 1;
    std::string cert_out;
    solve->add_flag("--max", flag_max, "report the exact maximum (default)");
    solve->add_flag("--decide", flag_decide, "stop at the first solution of size >= k");
    solve->add_flag("--json", solve_json, "machine-readable output");
    solve->add_option("--threads", threads, "parallel universe workers (identical output for any count)");
    solve->add_option("--cert-out", cert_out, "write the certificate to this file");

    // verify
    auto* verify = app.add_subcommand("verify", "independently check a certificate file");
    std::string verify_instance, verify_cert;
    verify->add_option("instance", verify_instance, "instance file")->required();
    verify->add_option("certificate", verify_cert, "certificate file")->required();
    spec_flags verify_flags;
    verify_flags.attach(verify);
    int robust_budget = -1;
    std::uint64_t rng_seed = default_rng_seed;
    bool verify_json = false;
    verify->add_option("--robust-budget", robust_budget,
                       "additionally check the diameter after deleting up to this many witness edges");
    verify->add_option("--rng-seed", rng_seed, "seed for sampled deletion sets");
    verify->add_flag("--json", verify_json, "machine-readable output");

    // kernelize
    auto* kernelize = app.add_subcommand("kernelize", "apply reduction rules and decompose");
    std::string kern_instance;
    kernelize->add_option("instance", kern_instance, "instance file")->required();
    spec_flags kern_flags;
    kern_flags.attach(kernelize);
    bool kern_json = false;
    kernelize->add_flag("--json", kern_json, "machine-readable output");

    // generate
    auto* generate = app.add_subcommand("generate", "emit hardness gadget or random instances");
    std::string construction, source_path, shape_path, out_path;
    int gen_k = 1, gen_s = 2, gen_ell = 1, gen_n = 0;
    double gen_p = 0.5;
    std::uint64_t gen_seed = default_rng_seed;
    generate->add_option("--construction", construction, "vt2, vts, et, seeded2, seededs, or gnp")
        ->required();
    generate->add_option("--source", source_path, "source graph of the encoded clique instance");
    generate->add_option("--shape", shape_path, "seed shape graph (seeded constructions)");
    generate->add_option("-k,--size", gen_k, "clique target encoded by the gadget");
    generate->add_option("-s,--diameter", gen_s, "diameter bound s");
    generate->add_option("-l,--triangles", gen_ell, "triangle threshold");
    generate->add_option("-n,--vertices", gen_n, "vertex count (gnp)");
    generate->add_option("-p,--probability", gen_p, "edge probability (gnp)");
    generate->add_option("--rng-seed", gen_seed, "random seed (gnp)");
    generate->add_option("-o,--output", out_path, "output file (default stdout)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force reference solver (desk scale)");
    std::string oracle_instance;
    oracle->add_option("instance", oracle_instance, "instance file")->required();
    spec_flags oracle_flags;
    oracle_flags.attach(oracle);
    bool oracle_clique = false, oracle_json = false;
    oracle->add_flag("--clique", oracle_clique, "maximum clique instead of the spec variant");
    oracle->add_flag("--json", oracle_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            if (flag_decide && flag_max) throw std::invalid_argument("--max and --decide are exclusive");
            return cmd_solve(solve_instance, solve_flags, flag_decide, solve_json, threads, cert_out);
        }
        if (verify->parsed())
            return cmd_verify(verify_instance, verify_cert, verify_flags, robust_budget, rng_seed,
                              verify_json);
        if (kernelize->parsed()) return cmd_kernelize(kern_instance, kern_flags, kern_json);
        if (generate->parsed())
            return cmd_generate(construction, source_path, shape_path, gen_k, gen_s, gen_ell, gen_n,
                                gen_p, gen_seed, out_path);
        if (oracle->parsed()) return cmd_oracle(oracle_instance, oracle_flags, oracle_clique, oracle_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run(const std::vector<std::string>& argv) {
    std::vector<const char*> ptrs;
    ptrs.reserve(argv.size());
    for (const auto& a : argv) ptrs.push_back(a.c_str());
    return run(static_cast<int>(ptrs.size()), ptrs.data());
}

}  // namespace triclub::cli
