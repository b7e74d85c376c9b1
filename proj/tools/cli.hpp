#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arank/arank.hpp"

namespace arank::cli {

enum ExitCode : int { kOk = 0, kFalse = 1, kParse = 2, kPrecondition = 3 };

struct RunConfig {
    std::string order = "degrevlex";
    int field_char = 0;
    unsigned lmax = 0;
    std::uint64_t seed = 1;
    bool json = false;
    int workers = 1;
};

// A path, "-" for stdin, or inline text with ';' for newlines.
inline std::string read_input(const std::string& spec) {
    if (spec == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        std::ifstream in(spec);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::string text = spec;
    for (char& c : text)
        if (c == ';') c = '\n';
    return text;
}

// "x3 x4", "x3,x4" or "{}".
inline VarSet parse_face(const std::string& text, int n) {
    std::string t = text;
    for (char& c : t)
        if (c == ',') c = ' ';
    SimplicialComplex c = parse_complex("vars: " + std::to_string(n) + "\n" + (t.empty() ? "{}" : t));
    return c.facets().front();
}

inline nlohmann::json face_json(const VarSet& f) {
    nlohmann::json a = nlohmann::json::array();
    for (int v : f.indices()) a.push_back("x" + std::to_string(v));
    return a;
}

inline nlohmann::json complex_json(const SimplicialComplex& c) {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : c.facets()) fs.push_back(face_json(f));
    return {{"vars", c.ambient()}, {"facets", fs}};
}

inline nlohmann::json ideal_json(const MonomialIdeal& I) {
    return {{"vars", I.ambient()}, {"generators", generators_json(I)}};
}

inline OrderKind order_kind(const std::string& name) { return MonomialOrder::from_name(name, 1).kind(); }

inline void print_witness(std::ostream& out, const GeneratorWitness& w, bool json) {
    if (json) {
        out << to_json(w).dump() << "\n";
        return;
    }
    out << format_elements(w.elements);
    out << "# " << w.elements.size() << " elements, " << w.provenance << ", verified: " << std::boolalpha
        << w.verified << "\n";
}

inline nlohmann::json analyze(const MonomialIdeal& I, int field_char) {
    require_nonzero(I, "analyze");
    if (I.is_unit()) throw PreconditionError("analyze: unit ideal");
    BettiTable t = hochster_betti(I, field_char);
    int ind = indeg(I);
    int r = t.reg_ideal();
    nlohmann::json j = {{"vars", I.ambient()},
                        {"generators", I.num_generators()},
                        {"height", height(I)},
                        {"indeg", ind},
                        {"pd", t.pd()},
                        {"reg", r},
                        {"linear", r == ind},
                        {"cm", t.pd() == height(I)},
                        {"char", field_char}};
    if (r == ind) j["k"] = ind;
    j["dual_generalized_tree"] = is_generalized_tree(dual_complex_of_ideal(I));
    j["betti"] = to_json(t);
    return j;
}

inline GeneratorWitness construct(const std::string& method, const MonomialIdeal& I,
                                  const std::optional<std::string>& face_text,
                                  const std::optional<std::string>& facet_text,
                                  const std::optional<std::string>& elements_text, const RunConfig& cfg) {
    H2cmOptions opts;
    opts.lmax = cfg.lmax;
    opts.order = order_kind(cfg.order);
    if (method == "h2cm") return construct_h2cm(I, opts);
    auto qs = [&] {
        if (elements_text) return parse_elements(read_input(*elements_text), I.ambient());
        return construct_h2cm(I, opts).elements;
    };
    if (!face_text) throw PreconditionError("construct: --method " + method + " needs --face");
    VarSet F = parse_face(*face_text, I.ambient());
    if (method == "plus-one") return ara_plus_one(I, F, qs());
    if (method == "bt-cone") {
        SimplicialComplex delta = complex_of_ideal(I);
        std::optional<VarSet> G;
        if (facet_text) G = parse_face(*facet_text, I.ambient());
        return bt_cone_elements(delta, F, qs(), G);
    }
    throw PreconditionError("construct: unknown method '" + method + "'");
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Arithmetical rank constructions for squarefree monomial ideals"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--order", cfg.order, "Monomial order for certificates")
        ->check(CLI::IsMember({"degrevlex", "lex"}));
    app.add_option("--char", cfg.field_char, "Field characteristic for Betti numbers: 0 or a prime");
    app.add_option("--lmax", cfg.lmax, "Largest power tried for membership certificates (0: 2n)");
    app.add_option("--seed", cfg.seed, "Seed for the sampling filter");
    app.add_flag("--json", cfg.json, "Machine-readable output");
    app.add_option("--workers", cfg.workers, "Parallel workers for batch")->check(CLI::Range(1, 256));

    std::string input, elements_in, method = "h2cm";
    std::optional<std::string> face, facet, elements_opt;
    bool as_complex = false;
    int family_n = 0;
    std::vector<std::string> batch_inputs;

    auto* dual = app.add_subcommand("dual", "Alexander dual of an ideal (or of a complex with --complex)");
    dual->add_option("input", input, "File, '-' or inline text")->required();
    dual->add_flag("--complex", as_complex, "Input is a simplicial complex");
    auto* ideal = app.add_subcommand("ideal", "Stanley-Reisner ideal of a complex");
    ideal->add_option("input", input)->required();
    auto* cplx = app.add_subcommand("complex", "Complex whose Stanley-Reisner ideal is the input");
    cplx->add_option("input", input)->required();
    auto* an = app.add_subcommand("analyze", "Height, indeg, pd, reg, linearity and Cohen-Macaulayness");
    an->add_option("input", input)->required();
    auto* con = app.add_subcommand("construct", "Elements generating an ideal up to radical");
    con->add_option("input", input)->required();
    con->add_option("--method", method)->check(CLI::IsMember({"h2cm", "plus-one", "bt-cone"}));
    con->add_option("--face", face, "Face F, e.g. \"x3 x4\"");
    con->add_option("--facet", facet, "Facet G containing F (bt-cone)");
    con->add_option("--elements", elements_opt, "Elements generating the input up to radical");
    auto* fam = app.add_subcommand("family", "The path-dual family I_n with its two elements");
    fam->add_option("n", family_n)->required()->check(CLI::Range(4, 12));
    auto* ver = app.add_subcommand("verify", "Check that elements generate an ideal up to radical");
    ver->add_option("input", input)->required();
    ver->add_option("elements", elements_in)->required();
    auto* bat = app.add_subcommand("batch", "construct h2cm on many ideal files");
    bat->add_option("inputs", batch_inputs)->required();
    auto* bet = app.add_subcommand("betti", "Graded Betti numbers of R/I");
    bet->add_option("input", input)->required();
    bet->add_flag("--complex", as_complex, "Input is a simplicial complex");
    auto* pel = app.add_subcommand("peel", "Peel a complex down to a simplex");
    pel->add_option("input", input)->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    }

    try {
        if (cfg.field_char != 0 && !detail::is_prime(cfg.field_char))
            throw PreconditionError("--char must be 0 or a prime");
        if (*dual) {
            if (as_complex) {
                auto c = alexander_dual(parse_complex(read_input(input)));
                out << (cfg.json ? complex_json(c).dump() + "\n" : format_complex(c));
            } else {
                auto I = alexander_dual(parse_ideal(read_input(input)));
                out << (cfg.json ? ideal_json(I).dump() + "\n" : format_ideal(I));
            }
        } else if (*ideal) {
            auto I = stanley_reisner_ideal(parse_complex(read_input(input)));
            out << (cfg.json ? ideal_json(I).dump() + "\n" : format_ideal(I));
        } else if (*cplx) {
            auto c = complex_of_ideal(parse_ideal(read_input(input)));
            out << (cfg.json ? complex_json(c).dump() + "\n" : format_complex(c));
        } else if (*an) {
            out << analyze(parse_ideal(read_input(input)), cfg.field_char).dump() << "\n";
        } else if (*con) {
            auto w = construct(method, parse_ideal(read_input(input)), face, facet, elements_opt, cfg);
            print_witness(out, w, cfg.json);
            return w.verified ? kOk : kFalse;
        } else if (*fam) {
            auto f = adual_line_family(family_n);
            bool identity = family_n < 5 || check_family_identity(family_n);
            if (cfg.json) {
                out << nlohmann::json{{"n", family_n},
                                      {"ideal", ideal_json(f.ideal)},
                                      {"q1", f.q1.to_string()},
                                      {"q2", f.q2.to_string()},
                                      {"identity", identity}}
                           .dump()
                    << "\n";
            } else {
                out << format_ideal(f.ideal) << "q1: " << f.q1.to_string() << "\nq2: " << f.q2.to_string() << "\n";
            }
            return identity ? kOk : kFalse;
        } else if (*ver) {
            auto I = parse_ideal(read_input(input));
            auto e = parse_elements(read_input(elements_in), I.ambient());
            VerifyOptions vo;
            vo.seed = cfg.seed;
            auto r = verify_up_to_radical(e, I, vo);
            if (cfg.json) {
                out << to_json(r).dump() << "\n";
            } else {
                out << "containment: " << std::boolalpha << r.containment_ok << "\n";
                for (const auto& c : r.coverage)
                    out << c.generator.to_string() << ": " << (c.in_radical ? "covered" : "not covered") << "\n";
                out << "verified: " << r.verdict << "\n";
            }
            return r.verdict ? kOk : kFalse;
        } else if (*bat) {
            std::vector<nlohmann::json> results(batch_inputs.size());
            std::atomic<std::size_t> next{0};
            auto work = [&] {
                for (std::size_t k = next++; k < batch_inputs.size(); k = next++) {
                    nlohmann::json r = {{"input", batch_inputs[k]}};
                    auto t0 = std::chrono::steady_clock::now();
                    try {
                        H2cmOptions opts;
                        opts.lmax = cfg.lmax;
                        opts.order = order_kind(cfg.order);
                        auto w = construct_h2cm(parse_ideal(read_input(batch_inputs[k])), opts);
                        r["verified"] = w.verified;
                        nlohmann::json e = nlohmann::json::array();
                        for (const auto& p : w.elements) e.push_back(p.to_string());
                        r["elements"] = e;
                    } catch (const std::exception& ex) {
                        r["verified"] = false;
                        r["error"] = ex.what();
                    }
                    r["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
                    results[k] = std::move(r);
                }
            };
            std::vector<std::thread> pool;
            for (int w = 1; w < cfg.workers; ++w) pool.emplace_back(work);
            work();
            for (auto& t : pool) t.join();
            bool all = true;
            for (const auto& r : results) {
                all = all && r["verified"].get<bool>();
                if (cfg.json) {
                    out << r.dump() << "\n";
                } else {
                    out << r["input"].get<std::string>() << ": "
                        << (r.contains("error") ? "error: " + r["error"].get<std::string>()
                                                : (r["verified"].get<bool>() ? "verified" : "not verified"))
                        << "\n";
                }
            }
            return all ? kOk : kFalse;
        } else if (*bet) {
            std::string text = read_input(input);
            BettiTable t = as_complex ? hochster_betti(parse_complex(text), cfg.field_char)
                                      : hochster_betti(parse_ideal(text), cfg.field_char);
            if (cfg.json) {
                out << to_json(t).dump() << "\n";
            } else {
                for (const auto& [ij, b] : t.entries)
                    out << "beta_" << ij.first << "," << ij.second << " = " << b << "\n";
                out << "pd = " << t.pd() << "\n";
            }
        } else if (*pel) {
            auto c = parse_complex(read_input(input));
            auto seq = peel(c);
            if (cfg.json) {
                nlohmann::json j = {{"generalized_tree", seq.has_value()}};
                if (seq) {
                    j["base"] = face_json(seq->base.facets().front());
                    nlohmann::json steps = nlohmann::json::array();
                    for (const auto& s : seq->steps)
                        steps.push_back({{"vertex", "x" + std::to_string(s.vertex)}, {"face", face_json(s.face)}});
                    j["steps"] = steps;
                }
                out << j.dump() << "\n";
            } else if (seq) {
                out << "base: " << seq->base.facets().front().to_string() << "\n";
                for (const auto& s : seq->steps)
                    out << "cone x" << s.vertex << " over {" << s.face.to_string() << "}\n";
            } else {
                out << "not a generalized tree\n";
            }
        }
    } catch (const ParseError& e) {
        err << "parse error at " << e.what() << "\n";
        return kParse;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kFalse;
    }
    return kOk;
}

}  // namespace arank::cli
