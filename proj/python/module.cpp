#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "cubiclinks/formats.hpp"

namespace py = pybind11;
using namespace cubiclinks;

namespace {

std::vector<long long> m_list(const SurfaceClass& c) {
    return {c.m.begin(), c.m.end()};
}

py::dict classify_dict(const SurfaceClass& c) {
    CandidateRecord r = classify_type(c);
    py::dict d;
    d["type"] = to_string(c);
    d["standard"] = to_string(r.type);
    d["degree"] = r.degree;
    d["genus"] = r.genus;
    d["weakFano"] = r.weak_fano;
    d["status"] = to_string(r.status);
    if (r.witness)
        d["witness"] = py::make_tuple(r.witness->first.name(), r.witness->second.name());
    else
        d["witness"] = py::none();
    return d;
}

py::dict analyze_dict(const SurfaceClass& c) {
    LinkReport r = analyze_link(c);
    py::dict d;
    d["type"] = to_string(r.type);
    d["degree"] = r.degree;
    d["genus"] = r.genus;
    d["kx3"] = r.kx3.str_canonical();
    py::list steps;
    for (const auto& s : r.steps) {
        py::dict step;
        step["kind"] = to_string(s.kind);
        step["count"] = s.count;
        steps.append(step);
    }
    d["steps"] = steps;
    py::list basket;
    for (SingKind s : r.basket) basket.append(to_string(s));
    d["basket"] = basket;
    py::dict kind;
    if (const auto* ii = std::get_if<TypeIIData>(&r.link)) {
        kind["kind"] = "II";
        kind["contraction"] = to_string(ii->contraction);
        kind["ky3"] = ii->ky3.str_canonical();
        kind["fanoWeilIndex"] = ii->fano_weil_index;
    } else {
        const auto& i = std::get<TypeIData>(r.link);
        kind["kind"] = "I";
        kind["dpDegree"] = i.dp_degree;
        kind["ky03"] = i.ky03.str_canonical();
    }
    d["linkKind"] = kind;
    py::dict contracted;
    py::list flipped, flopped;
    for (const auto& l : r.contracted.flipped) flipped.append(l.name());
    for (const auto& l : r.contracted.flopped) flopped.append(l.name());
    contracted["flipped"] = flipped;
    contracted["flopped"] = flopped;
    d["contractedLines"] = contracted;
    return d;
}

}  // namespace

PYBIND11_MODULE(cubiclinks, m) {
    m.doc() = "Curve types on smooth cubic surfaces and the Sarkisov links their blowups induce";

    py::class_<SurfaceClass>(m, "SurfaceClass")
        .def(py::init([](const std::string& s) { return parse_surface_class(s); }), py::arg("type"))
        .def(py::init([](long long k, const std::vector<long long>& m) {
                 if (m.size() != 6) throw std::invalid_argument("expected six multiplicities");
                 SurfaceClass c;
                 c.k = k;
                 std::copy(m.begin(), m.end(), c.m.begin());
                 return c;
             }),
             py::arg("k"), py::arg("m"))
        .def_readonly("k", &SurfaceClass::k)
        .def_property_readonly("m", &m_list)
        .def("__str__", [](const SurfaceClass& c) { return to_string(c); })
        .def("__repr__", [](const SurfaceClass& c) { return "SurfaceClass(\"" + to_string(c) + "\")"; })
        .def("__eq__", [](const SurfaceClass& a, const SurfaceClass& b) { return a == b; })
        .def("__hash__", [](const SurfaceClass& c) { return hash_of(c); });

    m.def("parse_type", [](const std::string& s) { return parse_surface_class(s); },
          "Parse a type string \"(k;m1,m2,m3,m4,m5,m6)\"");
    m.def("pairing", &pairing, "Intersection pairing of two classes");
    m.def("canonical_class", &canonical_class_s, "The canonical class of the cubic surface");
    m.def("degree", &degree_in_p3, "Degree of the curve in P^3");
    m.def("genus", &genus, "Arithmetic genus of the class");
    m.def("lines", [] {
        py::list out;
        for (const auto& l : twenty_seven_lines()) out.append(py::make_tuple(l.name(), l.cls));
        return out;
    }, "The 27 lines as (name, class) pairs in canonical order");
    m.def("secancy", [](const SurfaceClass& c) {
        SecancyProfile p = secancy_profile(c);
        py::dict d;
        d["e"] = std::vector<long long>(p.e.begin(), p.e.end());
        d["l"] = std::vector<long long>(p.l.begin(), p.l.end());
        d["c"] = std::vector<long long>(p.c.begin(), p.c.end());
        return d;
    }, "Intersection numbers with the 27 lines");
    m.def("standardize", [](const SurfaceClass& c) {
        auto [standard, word] = standardize(c);
        return py::make_tuple(standard, move_word_str(word));
    }, "Reduce to standard form; returns (class, move word)");
    m.def("same_orbit", &same_orbit, "Weyl-orbit equivalence of two classes");
    m.def("h0", &h0_on_cubic, "Sections of a divisor class on the cubic");
    m.def("cubic_count", &cubic_count, "Dimension of the space of cubics through the curve");
    m.def("classify", &classify_dict, "Status of a curve type");
    m.def("enumerate_candidates", [] {
        std::vector<SurfaceClass> out;
        for (const auto& r : enumerate_candidates()) out.push_back(r.type);
        return out;
    }, "The candidate curve types in table order");
    m.def("analyze", &analyze_dict, "Replay the Sarkisov link of a candidate type");
    m.def("analyze_json", [](const SurfaceClass& c) { return link_report_json(analyze_link(c)); },
          "Link report as canonical JSON");
}
