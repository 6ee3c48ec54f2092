#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpairs/json_io.hpp"

using namespace lpairs;

namespace {

struct Io {
    std::string in_path;   // empty: stdin
    std::string out_path;  // empty: stdout
};

json read_payload(const Io& io) {
    std::string text;
    if (io.in_path.empty()) {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(io.in_path);
        if (!in) throw std::runtime_error("cannot open input file " + io.in_path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return json::parse(text);
}

void write_line(const Io& io, const json& j) {
    if (io.out_path.empty()) {
        std::cout << j.dump() << "\n";
    } else {
        std::ofstream out(io.out_path);
        if (!out) throw std::runtime_error("cannot open output file " + io.out_path);
        out << j.dump() << "\n";
    }
}

Relative relative_from_name(const std::string& which) {
    if (which == "star") return Relative::Star;
    if (which == "down") return Relative::Down;
    if (which == "Down") return Relative::DDown;
    if (which == "vee") return Relative::Vee;
    throw Error(ErrorCode::InvalidInput, "which must be one of star, down, Down, vee");
}

json run_validate(const json& in) {
    ParameterArray p = parameter_array_from_json(in);
    ValidationReport rep = validate(p);
    return {{"valid", rep.valid}, {"violations", rep.violations}};
}

json run_classify(const json& in) {
    ParameterArray p = parameter_array_from_json(in);
    LeonardType t = classify_type(p);
    json out = {{"type", leonard_type_name(t)}};
    if (p.d >= 3) {
        InvariantData inv = invariants(p);
        out["beta"] = element_to_json(inv.beta);
        out["kappa"] = element_to_json(inv.kappa);
    }
    return out;
}

json run_invariants(const json& in) {
    ParameterArray p = parameter_array_from_json(in);
    InvariantData inv = invariants(p);
    return {{"beta", element_to_json(inv.beta)},
            {"gamma", element_to_json(inv.gamma)},
            {"varrho", element_to_json(inv.varrho)},
            {"kappa", element_to_json(inv.kappa)}};
}

json run_realize(const json& in) {
    ParameterArray p = parameter_array_from_json(in);
    LeonardRealization r = realize(p);
    SplitRealization s = split_realize(p);
    DualBasisData db = dual_basis_data(r, p.theta[0]);
    OneDIdentities ids = one_d_identities(p);
    json a = json::array(), x = json::array();
    for (const auto& v : r.a) a.push_back(element_to_json(v));
    for (const auto& v : r.x) x.push_back(element_to_json(v));
    json b = json::array(), c = json::array(), u = json::array();
    for (const auto& v : db.b) b.push_back(element_to_json(v));
    for (const auto& v : db.c) c.push_back(element_to_json(v));
    for (const auto& v : db.eigvec0) u.push_back(element_to_json(v));
    return {{"a", std::move(a)},
            {"x", std::move(x)},
            {"a_matrix", matrix_to_json(r.a_matrix)},
            {"a_star", matrix_to_json(r.a_star)},
            {"a_split", matrix_to_json(s.a_split)},
            {"a_star_split", matrix_to_json(s.a_star_split)},
            {"bipartite", is_bipartite(r)},
            {"dual_basis", json{{"b", std::move(b)}, {"c", std::move(c)}, {"u", std::move(u)}}},
            {"identities", json{{"head", ids.head}, {"tail", ids.tail}, {"cross", ids.cross}}}};
}

json run_basic(const json& in) {
    ParameterArray p = parameter_array_from_json(in);
    std::optional<FieldElement> q;
    if (in.contains("q")) q = element_from_json(in.at("q"), p.field);
    BasicSequence b = basic_from_array(p, q);
    json out = basic_sequence_to_json(b);
    if (b.type == LeonardType::I) {
        json cands = json::array();
        for (const auto& cand : type1_q_candidates(p)) cands.push_back(element_to_json(cand));
        out["q_candidates"] = std::move(cands);
    }
    return out;
}

json run_from_basic(const json& in) {
    FieldPtr f = field_from_json(in.at("field"));
    int d = in.at("d").get<int>();
    BasicSequence b = basic_sequence_from_json(in.at("basic"), f);
    return parameter_array_to_json(array_from_basic(b, d));
}

json run_relatives(const json& in) {
    ParameterArray p = parameter_array_from_json(in.at("array"));
    Relative which = relative_from_name(in.at("which").get<std::string>());
    return parameter_array_to_json(relatives(p, which));
}

json run_affine(const json& in) {
    ParameterArray p = parameter_array_from_json(in.at("array"));
    FieldElement xi = element_from_json(in.at("xi"), p.field);
    FieldElement zeta = element_from_json(in.at("zeta"), p.field);
    FieldElement xi_star = element_from_json(in.at("xi_star"), p.field);
    FieldElement zeta_star = element_from_json(in.at("zeta_star"), p.field);
    return parameter_array_to_json(affine(p, xi, zeta, xi_star, zeta_star));
}

CompatInput compat_input(const json& in) {
    return CompatInput{parameter_array_from_json(in.at("a")), parameter_array_from_json(in.at("b"))};
}

json run_compatible(const json& in) {
    CompatInput c = compat_input(in);
    bool products = compatible_by_products(c);
    bool endpoints = compatible_by_endpoints(c);
    bool direct = compatible_direct(c);
    if (products != endpoints || products != direct)
        throw Error(ErrorCode::InternalInconsistency, "the three compatibility tests disagree");
    json out = {{"compatible", products},
                {"by_products", products},
                {"by_endpoints", endpoints},
                {"direct", direct}};
    if (products) {
        CompanionResult k = companion_of(c);
        json kj = json::array();
        for (int i = 0; i < k.k.size(); ++i) kj.push_back(element_to_json(k.k.at(i, i)));
        out["K"] = std::move(kj);
    }
    return out;
}

json run_companion(const json& in) { return companion_result_to_json(companion_of(compat_input(in))); }

json run_bond(const json& in) {
    CompatInput c = compat_input(in);
    auto shift = detect_shift(c);
    auto bond_shift = detect_bond_shift(c);
    json out;
    out["shift"] = shift ? element_to_json(*shift) : json(nullptr);
    out["bond_shift"] = bond_shift ? element_to_json(*bond_shift) : json(nullptr);
    if (c.p.d <= 2 && compatible_by_products(c)) {
        json entries = json::array();
        for (const auto& v : companion_entries_typeO(c)) entries.push_back(element_to_json(v));
        out["companion_entries"] = std::move(entries);
    }
    return out;
}

json run_families(const json& in) {
    FieldPtr f = field_from_json(in.at("field"));
    int d = in.at("d").get<int>();
    BasicSequence b = basic_sequence_from_json(in.at("basic"), f);
    json fams = json::array();
    for (const auto& fam : companion_families(b, d)) fams.push_back(companion_family_to_json(fam));
    return {{"families", std::move(fams)}};
}

json run_materialize(const json& in) {
    FieldPtr f = field_from_json(in.at("field"));
    int d = in.at("d").get<int>();
    BasicSequence b = basic_sequence_from_json(in.at("basic"), f);
    std::string family = in.at("family").get<std::string>();
    std::map<std::string, FieldElement> bindings;
    if (in.contains("bindings"))
        for (const auto& [key, value] : in.at("bindings").items())
            bindings.emplace(key, element_from_json(value, f));
    return companion_result_to_json(materialize_family(b, family, bindings, d));
}

json run_oracle_pair(const json& in) {
    FieldPtr f = field_from_json(in.at("field"));
    Matrix a = matrix_from_json(in.at("a"), f);
    Matrix a_star = matrix_from_json(in.at("a_star"), f);
    LeonardPairCheck chk = is_leonard_pair(a, a_star);
    json orderings = json::array();
    for (const auto& seq : chk.standard_orderings) {
        json o = json::array();
        for (const auto& v : seq) o.push_back(element_to_json(v));
        orderings.push_back(std::move(o));
    }
    return {{"is_pair", chk.is_pair}, {"orderings", std::move(orderings)}};
}

// Streams one companion per line, sorted, for reproducible downstream diffing.
void run_oracle_companions(const json& in, const Io& io, std::uint64_t cap, int workers) {
    FieldPtr f = field_from_json(in.at("field"));
    Matrix a = matrix_from_json(in.at("a"), f);
    Matrix a_star = matrix_from_json(in.at("a_star"), f);
    auto companions = all_companions_bruteforce(a, a_star, cap, workers);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!io.out_path.empty()) {
        file.open(io.out_path);
        if (!file) throw std::runtime_error("cannot open output file " + io.out_path);
        out = &file;
    }
    for (const Matrix& k : companions) {
        json kj = json::array();
        for (int i = 0; i < k.size(); ++i) kj.push_back(element_to_json(k.at(i, i)));
        *out << json{{"K", std::move(kj)}}.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction, classification, and companion search for Leonard pairs"};
    app.require_subcommand(1);

    Io io;
    std::uint64_t enum_cap = 10000000;
    int workers = 1;
    app.add_option("--in", io.in_path, "input file (default: stdin)");
    app.add_option("--out", io.out_path, "output file (default: stdout)");
    app.add_option("--workers", workers, "worker threads for oracle-companions");
    app.add_option("--enum-cap", enum_cap, "enumeration bound for oracle-companions");

    const std::vector<std::pair<std::string, json (*)(const json&)>> commands = {
        {"validate", run_validate},     {"classify", run_classify},
        {"invariants", run_invariants}, {"realize", run_realize},
        {"basic", run_basic},           {"from-basic", run_from_basic},
        {"relatives", run_relatives},   {"affine", run_affine},
        {"compatible", run_compatible}, {"companion", run_companion},
        {"families", run_families},     {"materialize", run_materialize},
        {"bond", run_bond},             {"oracle-pair", run_oracle_pair},
    };
    for (const auto& [name, fn] : commands) {
        (void)fn;
        app.add_subcommand(name)->fallthrough();
    }
    app.add_subcommand("oracle-companions")->fallthrough();

    CLI11_PARSE(app, argc, argv);

    json payload;
    try {
        payload = read_payload(io);
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    }

    auto guard_domain = [&](auto&& fn) -> int {
        try {
            fn();
            return 0;
        } catch (const MalformedInput& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return 1;
        } catch (const Error& e) {
            write_line(io, json{{"error", e.code_name()}, {"detail", e.what()}});
            return 2;
        } catch (const json::exception& e) {
            std::cerr << "input error: " << e.what() << "\n";
            return 1;
        }
    };

    for (const auto& [name, fn] : commands)
        if (app.get_subcommand(name)->parsed()) {
            auto run = fn;
            return guard_domain([&] { write_line(io, run(payload)); });
        }
    if (app.get_subcommand("oracle-companions")->parsed())
        return guard_domain([&] { run_oracle_companions(payload, io, enum_cap, workers); });
    return 1;
}
