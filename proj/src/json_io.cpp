#include "lpairs/json_io.hpp"

namespace lpairs {

namespace {

void require_key(const json& j, const char* key) {
    if (!j.contains(key))
        throw MalformedInput(std::string("missing key '") + key + "'");
}

// Decoding failures surface as MalformedInput so callers can separate bad
// payloads from domain errors.
template <typename F>
auto decoding(F&& f) {
    try {
        return f();
    } catch (const MalformedInput&) {
        throw;
    } catch (const Error& e) {
        throw MalformedInput(e.what());
    } catch (const json::exception& e) {
        throw MalformedInput(e.what());
    }
}

}  // namespace

json field_to_json(const FieldPtr& f) {
    switch (f->kind()) {
        case FieldKind::Rational: return {{"kind", "rational"}};
        case FieldKind::Prime: return {{"kind", "prime"}, {"p", f->prime_modulus()}};
        case FieldKind::Extension:
            return {{"kind", "extension"}, {"p", f->prime_modulus()}, {"modulus", f->modulus()}};
    }
    throw Error(ErrorCode::InternalInconsistency, "unreachable");
}

FieldPtr field_from_json(const json& j) {
    return decoding([&] {
        require_key(j, "kind");
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "rational") return Field::rationals();
        if (kind == "prime") {
            require_key(j, "p");
            return Field::prime(j.at("p").get<long>());
        }
        if (kind == "extension") {
            require_key(j, "p");
            require_key(j, "modulus");
            return Field::extension(j.at("p").get<long>(), j.at("modulus").get<std::vector<long>>());
        }
        throw MalformedInput("unknown field kind '" + kind + "'");
    });
}

json element_to_json(const FieldElement& x) { return x.to_string(); }

FieldElement element_from_json(const json& j, const FieldPtr& f) {
    return decoding([&] {
        if (j.is_string()) return f->parse(j.get<std::string>());
        if (j.is_number_integer()) return f->from_integer(j.get<long>());
        if (j.is_array()) {
            // Convenience form for extension elements: [c0,c1,...] as numbers.
            std::string s = "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(j[i].get<long>());
            }
            return f->parse(s + "]");
        }
        throw MalformedInput("cannot read a field element from " + j.dump());
    });
}

namespace {

json elements_to_json(const std::vector<FieldElement>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(element_to_json(x));
    return arr;
}

std::vector<FieldElement> elements_from_json(const json& j, const FieldPtr& f) {
    if (!j.is_array()) throw MalformedInput("expected an array of field elements");
    std::vector<FieldElement> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(element_from_json(item, f));
    return out;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < m.size(); ++j2) row.push_back(element_to_json(m.at(i, j2)));
        rows.push_back(std::move(row));
    }
    return {{"n", m.size()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const json& j, const FieldPtr& f) {
    return decoding([&] {
        require_key(j, "n");
        require_key(j, "entries");
        const int n = j.at("n").get<int>();
        const json& rows = j.at("entries");
        if (n <= 0 || !rows.is_array() || static_cast<int>(rows.size()) != n)
            throw MalformedInput("matrix entries must be n rows");
        Matrix m(f, n);
        for (int i = 0; i < n; ++i) {
            const json& row = rows[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw MalformedInput("matrix rows must have length n");
            for (int c = 0; c < n; ++c) m.set(i, c, element_from_json(row[static_cast<std::size_t>(c)], f));
        }
        return m;
    });
}

json parameter_array_to_json(const ParameterArray& p) {
    return {{"field", field_to_json(p.field)},
            {"d", p.d},
            {"theta", elements_to_json(p.theta)},
            {"theta_star", elements_to_json(p.theta_star)},
            {"varphi", elements_to_json(p.varphi)},
            {"phi", elements_to_json(p.phi)}};
}

ParameterArray parameter_array_from_json(const json& j) {
    return decoding([&] {
        for (const char* key : {"field", "d", "theta", "theta_star", "varphi", "phi"}) require_key(j, key);
        ParameterArray p;
        p.field = field_from_json(j.at("field"));
        p.d = j.at("d").get<int>();
        p.theta = elements_from_json(j.at("theta"), p.field);
        p.theta_star = elements_from_json(j.at("theta_star"), p.field);
        p.varphi = elements_from_json(j.at("varphi"), p.field);
        p.phi = elements_from_json(j.at("phi"), p.field);
        require_shape(p);
        return p;
    });
}

json basic_sequence_to_json(const BasicSequence& b) {
    json out = {{"type", leonard_type_name(b.type)}};
    if (b.q) out["q"] = element_to_json(*b.q);
    json arr = json::array();
    for (const auto& e : b.entries) arr.push_back(element_to_json(e));
    out["entries"] = std::move(arr);
    json names = json::array();
    for (const char* n : b.entry_names()) names.push_back(n);
    out["entry_names"] = std::move(names);
    return out;
}

BasicSequence basic_sequence_from_json(const json& j, const FieldPtr& f) {
    return decoding([&] {
        require_key(j, "type");
        require_key(j, "entries");
        BasicSequence b;
        b.type = leonard_type_from_name(j.at("type").get<std::string>());
        if (b.type == LeonardType::O) throw MalformedInput("type O has no basic sequence");
        if (j.contains("q")) b.q = element_from_json(j.at("q"), f);
        if (b.type == LeonardType::I && !b.q)
            throw MalformedInput("type I basic sequences carry q");
        const json& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != 7)
            throw MalformedInput("basic sequences have exactly 7 entries");
        for (std::size_t i = 0; i < 7; ++i) b.entries[i] = element_from_json(entries[i], f);
        return b;
    });
}

json companion_family_to_json(const CompanionFamily& f) {
    return {{"id", f.id},
            {"assignments", f.assignments},
            {"free_parameters", f.free_parameters},
            {"requires_sqrt", f.requires_sqrt}};
}

json companion_result_to_json(const CompanionResult& r) {
    json k = json::array();
    for (int i = 0; i < r.k.size(); ++i) k.push_back(element_to_json(r.k.at(i, i)));
    json out = {{"K", std::move(k)},
                {"B", matrix_to_json(r.b_matrix)},
                {"B_array", parameter_array_to_json(r.b_array)}};
    if (!r.family.empty()) out["family"] = r.family;
    return out;
}

}  // namespace lpairs
