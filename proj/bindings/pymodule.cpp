#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpairs/json_io.hpp"

namespace py = pybind11;
using namespace lpairs;

namespace {

FieldElement parse_in(const FieldPtr& f, const py::object& v) {
    if (py::isinstance<FieldElement>(v)) return v.cast<FieldElement>();
    if (py::isinstance<py::int_>(v)) return f->from_integer(v.cast<long>());
    return f->parse(v.cast<std::string>());
}

std::vector<FieldElement> parse_list(const FieldPtr& f, const py::sequence& seq) {
    std::vector<FieldElement> out;
    out.reserve(seq.size());
    for (const auto& item : seq) out.push_back(parse_in(f, py::reinterpret_borrow<py::object>(item)));
    return out;
}

py::list matrix_rows(const Matrix& m) {
    py::list rows;
    for (int i = 0; i < m.size(); ++i) {
        py::list row;
        for (int j = 0; j < m.size(); ++j) row.append(m.at(i, j));
        rows.append(std::move(row));
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_lpairs, m) {
    m.doc() = "Exact Leonard-pair construction, classification, and companion search";

    py::register_exception<Error>(m, "DomainError");

    py::class_<Field, FieldPtr>(m, "Field")
        .def_static("rationals", &Field::rationals)
        .def_static("prime", &Field::prime, py::arg("p"))
        .def_static("extension", &Field::extension, py::arg("p"), py::arg("modulus"))
        .def_property_readonly("characteristic", &Field::characteristic)
        .def_property_readonly("degree", &Field::degree)
        .def_property_readonly("finite", &Field::finite)
        .def("order", &Field::order)
        .def("zero", &Field::zero)
        .def("one", &Field::one)
        .def("element", [](const FieldPtr& f, const py::object& v) { return parse_in(f, v); })
        .def("element_at", &Field::element_at)
        .def("__eq__", [](const FieldPtr& a, const FieldPtr& b) { return *a == *b; })
        .def("__repr__", &Field::describe);

    py::class_<FieldElement>(m, "FieldElement")
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def(py::self < py::self)
        .def("inverse", &FieldElement::inverse)
        .def("pow", &FieldElement::pow_signed)
        .def_property_readonly("field", &FieldElement::field)
        .def("is_zero", &FieldElement::is_zero)
        .def("__str__", &FieldElement::to_string)
        .def("__repr__", &FieldElement::to_string);

    m.def("sqrt", [](const FieldElement& a) -> py::object {
        auto r = lpairs::sqrt(a);
        return r ? py::cast(*r) : py::none();
    });
    m.def("solve_quadratic", &solve_quadratic, py::arg("b"), py::arg("c"));

    py::class_<Matrix>(m, "Matrix")
        .def(py::init([](const FieldPtr& f, const py::sequence& rows) {
                 std::vector<std::vector<FieldElement>> conv;
                 for (const auto& row : rows)
                     conv.push_back(parse_list(f, py::reinterpret_borrow<py::sequence>(row)));
                 return Matrix(f, std::move(conv));
             }),
             py::arg("field"), py::arg("rows"))
        .def_property_readonly("n", &Matrix::size)
        .def("at", &Matrix::at, py::arg("i"), py::arg("j"))
        .def("rows", &matrix_rows)
        .def(py::self == py::self)
        .def(py::self - py::self)
        .def("__repr__", [](const Matrix& mm) { return matrix_to_json(mm).dump(); });

    m.def("bond_mate", &bond_mate);
    m.def("commutator", &commutator);

    py::class_<ParameterArray>(m, "ParameterArray")
        .def(py::init([](const FieldPtr& f, int d, const py::sequence& theta, const py::sequence& ts,
                         const py::sequence& vphi, const py::sequence& phi) {
                 ParameterArray p;
                 p.field = f;
                 p.d = d;
                 p.theta = parse_list(f, theta);
                 p.theta_star = parse_list(f, ts);
                 p.varphi = parse_list(f, vphi);
                 p.phi = parse_list(f, phi);
                 require_shape(p);
                 return p;
             }),
             py::arg("field"), py::arg("d"), py::arg("theta"), py::arg("theta_star"),
             py::arg("varphi"), py::arg("phi"))
        .def_readonly("field", &ParameterArray::field)
        .def_readonly("d", &ParameterArray::d)
        .def_readonly("theta", &ParameterArray::theta)
        .def_readonly("theta_star", &ParameterArray::theta_star)
        .def_readonly("varphi", &ParameterArray::varphi)
        .def_readonly("phi", &ParameterArray::phi)
        .def(py::self == py::self)
        .def("__repr__", [](const ParameterArray& p) { return parameter_array_to_json(p).dump(); });

    m.def("validate", [](const ParameterArray& p) {
        ValidationReport rep = validate(p);
        return py::make_tuple(rep.valid, rep.violations);
    });

    py::class_<InvariantData>(m, "InvariantData")
        .def_readonly("beta", &InvariantData::beta)
        .def_readonly("gamma", &InvariantData::gamma)
        .def_readonly("varrho", &InvariantData::varrho)
        .def_readonly("kappa", &InvariantData::kappa);
    m.def("invariants", &invariants);

    py::enum_<Relative>(m, "Relative")
        .value("star", Relative::Star)
        .value("down", Relative::Down)
        .value("Down", Relative::DDown)
        .value("vee", Relative::Vee);
    m.def("relatives", &relatives);
    m.def("affine", &affine);

    py::class_<LeonardRealization>(m, "LeonardRealization")
        .def_readonly("a_matrix", &LeonardRealization::a_matrix)
        .def_readonly("a_star", &LeonardRealization::a_star)
        .def_readonly("a", &LeonardRealization::a)
        .def_readonly("x", &LeonardRealization::x);
    m.def("realize", &realize);

    py::class_<SplitRealization>(m, "SplitRealization")
        .def_readonly("a_split", &SplitRealization::a_split)
        .def_readonly("a_star_split", &SplitRealization::a_star_split);
    m.def("split_realize", &split_realize);
    m.def("is_bipartite", &is_bipartite);

    py::enum_<LeonardType>(m, "LeonardType")
        .value("O", LeonardType::O)
        .value("I", LeonardType::I)
        .value("II", LeonardType::II)
        .value("III_plus", LeonardType::IIIPlus)
        .value("III_minus", LeonardType::IIIMinus)
        .value("IV", LeonardType::IV);
    m.def("classify_type", &classify_type);
    m.def("type_name", &leonard_type_name);

    py::class_<BasicSequence>(m, "BasicSequence")
        .def(py::init([](LeonardType t, const FieldPtr& f, const py::sequence& entries,
                         const py::object& q) {
                 BasicSequence b;
                 b.type = t;
                 auto list = parse_list(f, entries);
                 if (list.size() != 7) throw Error(ErrorCode::LengthMismatch, "need 7 entries");
                 std::copy(list.begin(), list.end(), b.entries.begin());
                 if (!q.is_none()) b.q = parse_in(f, q);
                 return b;
             }),
             py::arg("type"), py::arg("field"), py::arg("entries"), py::arg("q") = py::none())
        .def_readonly("type", &BasicSequence::type)
        .def_property_readonly("q", [](const BasicSequence& b) -> py::object {
            return b.q ? py::cast(*b.q) : py::none();
        })
        .def_property_readonly("entries",
                               [](const BasicSequence& b) {
                                   return std::vector<FieldElement>(b.entries.begin(), b.entries.end());
                               })
        .def_property_readonly("entry_names", &BasicSequence::entry_names)
        .def(py::self == py::self)
        .def("__repr__", [](const BasicSequence& b) { return basic_sequence_to_json(b).dump(); });

    m.def("array_from_basic", &array_from_basic, py::arg("basic"), py::arg("d"));
    m.def(
        "basic_from_array",
        [](const ParameterArray& p, const py::object& q) {
            std::optional<FieldElement> qq;
            if (!q.is_none()) qq = parse_in(p.field, q);
            return basic_from_array(p, qq);
        },
        py::arg("array"), py::arg("q") = py::none());
    m.def("type1_q_candidates", &type1_q_candidates);
    m.def("basic_relatives", &basic_relatives);
    m.def("basic_affine", &basic_affine);
    m.def("kappa_from_basic", &kappa_from_basic);
    m.def(
        "rst_identity_check",
        [](const ParameterArray& p, const py::object& q) {
            std::optional<FieldElement> qq;
            if (!q.is_none()) qq = parse_in(p.field, q);
            return rst_identity_check(p, qq);
        },
        py::arg("array"), py::arg("q") = py::none());

    m.def("compatible_by_products",
          [](const ParameterArray& a, const ParameterArray& b) { return compatible_by_products({a, b}); });
    m.def("compatible_by_endpoints",
          [](const ParameterArray& a, const ParameterArray& b) { return compatible_by_endpoints({a, b}); });
    m.def("compatible_direct",
          [](const ParameterArray& a, const ParameterArray& b) { return compatible_direct({a, b}); });

    py::class_<CompanionResult>(m, "CompanionResult")
        .def_readonly("k", &CompanionResult::k)
        .def_readonly("b_matrix", &CompanionResult::b_matrix)
        .def_readonly("b_array", &CompanionResult::b_array)
        .def_readonly("family", &CompanionResult::family)
        .def("__repr__", [](const CompanionResult& r) { return companion_result_to_json(r).dump(); });
    m.def("companion_of",
          [](const ParameterArray& a, const ParameterArray& b) { return companion_of({a, b}); });
    m.def("detect_shift", [](const ParameterArray& a, const ParameterArray& b) -> py::object {
        auto z = detect_shift({a, b});
        return z ? py::cast(*z) : py::none();
    });
    m.def("detect_bond_shift", [](const ParameterArray& a, const ParameterArray& b) -> py::object {
        auto z = detect_bond_shift({a, b});
        return z ? py::cast(*z) : py::none();
    });
    m.def("companion_entries_low_degree",
          [](const ParameterArray& a, const ParameterArray& b) { return companion_entries_typeO({a, b}); });
    m.def("compat_conditions_basic", &compat_conditions_basic);

    py::class_<CompanionFamily>(m, "CompanionFamily")
        .def_readonly("id", &CompanionFamily::id)
        .def_readonly("assignments", &CompanionFamily::assignments)
        .def_readonly("free_parameters", &CompanionFamily::free_parameters)
        .def_readonly("requires_sqrt", &CompanionFamily::requires_sqrt)
        .def("__repr__", [](const CompanionFamily& f) { return companion_family_to_json(f).dump(); });
    m.def("companion_families", &companion_families);
    m.def(
        "materialize_family",
        [](const BasicSequence& b, const std::string& id, const py::dict& bindings, int d) {
            std::map<std::string, FieldElement> bound;
            for (const auto& [key, value] : bindings)
                bound.emplace(key.cast<std::string>(),
                              parse_in(b.field(), py::reinterpret_borrow<py::object>(value)));
            return materialize_family(b, id, bound, d);
        },
        py::arg("basic"), py::arg("family"), py::arg("bindings"), py::arg("d"));

    m.def("is_leonard_pair", [](const Matrix& a, const Matrix& a_star) {
        LeonardPairCheck chk = is_leonard_pair(a, a_star);
        return py::make_tuple(chk.is_pair, chk.standard_orderings);
    });
    m.def("all_companions_bruteforce", &all_companions_bruteforce, py::arg("a"), py::arg("a_star"),
          py::arg("cap") = 10000000, py::arg("workers") = 1);
    m.def("isomorphic_in_omega", &isomorphic_in_omega);
    m.def("parameter_arrays_of", &parameter_arrays_of);
}
