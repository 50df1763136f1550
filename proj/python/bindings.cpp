#include "resemblance/incompressible.hpp"
#include "resemblance/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace resemblance;

namespace {

Ordinal to_ord(const py::object& o, int depth) {
    if (py::isinstance<Ordinal>(o)) return o.cast<Ordinal>();
    if (py::isinstance<py::int_>(o)) {
        long long n = o.cast<long long>();
        if (n < 0) throw Error("SyntaxError", "negative natural");
        return Ordinal(static_cast<unsigned long long>(n));
    }
    return parse(o.cast<std::string>(), depth);
}

std::vector<Ordinal> to_ords(const py::iterable& xs, int depth) {
    std::vector<Ordinal> v;
    for (auto x : xs) v.push_back(to_ord(py::reinterpret_borrow<py::object>(x), depth));
    return v;
}

std::optional<Ordinal> ext(const Ext& e) {
    if (e.kind == Ext::Unbounded) throw Error("Unbounded", "no ordinal value");
    if (!e.known()) return std::nullopt;
    return e.value;
}

py::tuple verdict(const Verdict& v) { return py::make_tuple(tri_name(v.value), v.trace); }

py::object json_to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

struct Engine {
    explicit Engine(const Config& cfg) : c(cfg) {}
    Calculus c;
    int depth() const { return c.config().eps_depth; }
    Ordinal o(const py::object& x) const { return to_ord(x, depth()); }
    ClosedSet set(const py::iterable& xs) const { return closure(to_ords(xs, depth()), c.rho()); }
};

} // namespace

PYBIND11_MODULE(_resemblance, m) {
    py::register_exception<Error>(m, "ResemblanceError", PyExc_ValueError);

    py::class_<Ordinal>(m, "Ordinal")
        .def(py::init([](const py::object& o, int depth) { return to_ord(o, depth); }), py::arg("value") = 0,
             py::arg("eps_depth") = 1)
        .def("__str__", [](const Ordinal& a) { return format(a); })
        .def("__repr__", [](const Ordinal& a) { return "Ordinal('" + format(a) + "')"; })
        .def("__hash__", [](const Ordinal& a) { return py::hash(py::str(format(a))); })
        .def("__eq__", [](const Ordinal& a, const Ordinal& b) { return a == b; })
        .def("__lt__", [](const Ordinal& a, const Ordinal& b) { return a < b; })
        .def("__le__", [](const Ordinal& a, const Ordinal& b) { return a <= b; })
        .def("__gt__", [](const Ordinal& a, const Ordinal& b) { return a > b; })
        .def("__ge__", [](const Ordinal& a, const Ordinal& b) { return a >= b; })
        .def("__add__", [](const Ordinal& a, const Ordinal& b) { return add(a, b); })
        .def("__mul__", [](const Ordinal& a, const Ordinal& b) { return mul(a, b); })
        .def_property_readonly("is_limit", [](const Ordinal& a) { return is_limit(a); })
        .def_property_readonly("is_successor", [](const Ordinal& a) { return is_successor(a); });

    py::class_<Engine>(m, "Calculus")
        .def(py::init([](const py::object& rho, int depth, bool sequel) {
                 Config cfg{to_ord(rho, depth), depth, sequel};
                 return new Engine(cfg);
             }),
             py::arg("rho") = 1, py::arg("eps_depth") = 1, py::arg("sequel") = false)
        .def_property_readonly("rho", [](const Engine& e) { return e.c.rho(); })
        .def("kappa", [](const Engine& e, const py::object& a) { return e.c.kappa(e.o(a)); })
        .def("max1_kappa", [](const Engine& e, const py::object& a) { return ext(e.c.max1_kappa(e.o(a))); })
        .def("max1_lower_bound", [](const Engine& e, const py::object& a) { return e.c.max1_lower_bound(e.o(a)); })
        .def("index", [](const Engine& e, const py::object& b) { return ext(e.c.index(e.o(b))); })
        .def("max1", [](const Engine& e, const py::object& b) { return ext(e.c.max1(e.o(b))); })
        .def("le1", [](const Engine& e, const py::object& a, const py::object& b) { return verdict(e.c.le1(e.o(a), e.o(b))); })
        .def("max2", [](const Engine& e, const py::object& b) { return ext(max2(e.c, e.o(b))); })
        .def("le2", [](const Engine& e, const py::object& a, const py::object& b) { return verdict(le2(e.c, e.o(a), e.o(b))); })
        .def("nu", [](const Engine& e, const py::object& alpha, const py::object& xi) { return ext(nu(e.c, e.o(alpha), e.o(xi))); })
        .def("frt_iso", [](const Engine& e, const py::object& a, const py::object& b, const py::object& x) {
            return e.c.frt_iso(e.o(a), e.o(b), e.o(x));
        })
        .def("closure", [](const Engine& e, const py::iterable& xs) { return e.set(xs).members(); })
        .def("incompressible_cover", [](const Engine& e, const py::iterable& xs) {
            return incompressible_cover(e.c, e.set(xs)).image;
        })
        .def("verify_incompressible", [](const Engine& e, const py::iterable& xs) {
            ClosedSet x = e.set(xs);
            Budget b;
            return json_to_py(verify_json(verify_incompressible(e.c, x, b), x, b));
        })
        .def("pattern", [](const Engine& e, const py::iterable& xs) { return json_to_py(to_json(extract_pattern(e.c, e.set(xs)))); })
        .def("check_axioms", [](const Engine& e, const py::iterable& xs) { return check_axioms(extract_pattern(e.c, e.set(xs))); })
        .def("iso", [](const Engine& e, const py::iterable& a, const py::iterable& b) {
            return iso_name(iso_check(e.c, to_ords(a, e.depth()), to_ords(b, e.depth())));
        });
}
