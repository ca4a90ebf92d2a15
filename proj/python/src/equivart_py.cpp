// Python bindings for the main operations. Structured values cross the
// boundary as JSON strings matching the CLI schemas; scales are rational
// turns as "p/q" strings.

#include "equivart/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace equivart;

namespace {

Rational scale(const std::string& turns) {
    Rational r = parse_rational(turns);
    if (r < 0) throw std::invalid_argument("scale must be nonnegative");
    return r;
}

CircleMeasure measure(const std::string& json_text) {
    return measure_from_json(Json::parse(json_text));
}

CoefField field_of(const std::string& name) {
    if (name == "f2" || name == "F2") return CoefField::F2;
    if (name == "q" || name == "Q") return CoefField::Q;
    throw std::invalid_argument("field must be f2 or q");
}

}  // namespace

PYBIND11_MODULE(_equivart, m) {
    m.doc() = "Persistent circle-equivariant cohomology of Vietoris-Rips thickenings of the circle";

    m.def("ring", [](const std::string& r) { return vr_ring(scale(r)).str(); },
          py::arg("r_turns"), "Integral equivariant cohomology ring at a scale, as a string");

    m.def("naive_guess_ring", [](const std::string& r) { return naive_guess_ring(scale(r)).str(); },
          py::arg("r_turns"));

    m.def("band", [](const std::string& r) -> py::object {
              auto k = band_index(scale(r));
              return k ? py::cast(*k) : py::none();
          },
          py::arg("r_turns"), "Band index k with 2*pi*k/(2k+1) <= r, or None for r >= pi");

    m.def("specialize", [](const std::string& r, const std::string& field) {
              Field f;
              if (field == "Q") f = Field::Q;
              else if (field == "R") f = Field::R;
              else if (field == "F2") f = Field::F2;
              else if (field == "F3") f = Field::F3;
              else throw std::invalid_argument("field must be Q, R, F2 or F3");
              return specialize(vr_ring(scale(r)), f).str();
          },
          py::arg("r_turns"), py::arg("field"));

    m.def("sphere_ring", [](const std::vector<long>& ms) {
              std::vector<Integer> w(ms.begin(), ms.end());
              return sphere_ring(w).str();
          },
          py::arg("weights"));

    m.def("euler_class", [](const std::vector<long>& ms) {
              std::vector<Integer> w(ms.begin(), ms.end());
              EulerClass e = euler_class(w);
              return py::make_tuple(e.coefficient.str(), e.degree);
          },
          py::arg("weights"));

    m.def("structure_map", [](const std::string& r, const std::string& r2, int degree) {
              return structure_map(scale(r), scale(r2)).degree_map(degree).str();
          },
          py::arg("r_turns"), py::arg("r_prime_turns"), py::arg("degree"));

    m.def("barcode_over_scale", [](int degree) {
              Json out = Json::array();
              for (const auto& iv : barcode_over_scale(degree, Rational(1, 2)))
                  out.push_back(scale_interval_to_json(iv));
              return out.dump();
          },
          py::arg("degree"));

    m.def("diameter", [](const std::string& mu) { return format_rational(measure(mu).diameter_turns()); },
          py::arg("measure_json"), "Support diameter in turns, as \"p/q\"");

    m.def("vr_member", [](const std::string& mu, const std::string& r) {
              return vr_member(measure(mu), scale(r));
          },
          py::arg("measure_json"), py::arg("r_turns"));

    m.def("rotate", [](const std::string& mu, const std::string& theta) {
              return measure_to_json(rotate(measure(mu), Angle::of_turns(parse_rational(theta)))).dump();
          },
          py::arg("measure_json"), py::arg("theta_turns"));

    m.def("w1", [](const std::string& mu, const std::string& nu) {
              return format_rational(w1_distance_turns(measure(mu), measure(nu)));
          },
          py::arg("measure_json"), py::arg("other_json"));

    m.def("stratum", [](const std::string& mu, const std::string& r) {
              return stratum(measure(mu), scale(r));
          },
          py::arg("measure_json"), py::arg("r_turns"));

    m.def("average", [](const std::string& mu, const std::string& r) {
              return polygon_to_json(average(measure(mu), scale(r))).dump();
          },
          py::arg("measure_json"), py::arg("r_turns"));

    m.def("quotient_eq", [](const std::string& mu, const std::string& nu, const std::string& r) {
              return quotient_eq(measure(mu), measure(nu), scale(r));
          },
          py::arg("measure_json"), py::arg("other_json"), py::arg("r_turns"));

    m.def("phi", [](const std::string& mu, const std::string& r) {
              return join_point_to_json(phi(measure(mu), scale(r))).dump();
          },
          py::arg("measure_json"), py::arg("r_turns"));

    m.def("g_n", [](const std::string& mu, int n) {
              return measure_to_json(g_n(measure(mu), n)).dump();
          },
          py::arg("measure_json"), py::arg("n"));

    m.def("commuting_square", [](const std::string& mu, const std::string& r, int n) {
              return commuting_square(measure(mu), scale(r), n).equal;
          },
          py::arg("measure_json"), py::arg("r_turns"), py::arg("n"));

    m.def("betti", [](int n, const std::string& r, int max_dim, const std::string& field) {
              return betti(n, scale(r), max_dim, field_of(field));
          },
          py::arg("n"), py::arg("r_turns"), py::arg("max_dim"), py::arg("field") = "f2");

    m.def("oracle_barcode", [](int n, int max_dim, const std::string& field) {
              return barcode_to_json(persistent_homology(build_filtration(n, max_dim), field_of(field)))
                  .dump();
          },
          py::arg("n"), py::arg("max_dim"), py::arg("field") = "f2");

    m.def("first_fixed_scale", [](int n, int d) { return format_rational(first_fixed_scale_turns(n, d)); },
          py::arg("n"), py::arg("d"));

    m.def("compare_with_theory", [](int n, const std::string& r, int max_dim, const std::string& field) {
              return comparison_to_json(compare_with_theory(n, scale(r), max_dim, field_of(field))).dump();
          },
          py::arg("n"), py::arg("r_turns"), py::arg("max_dim"), py::arg("field") = "f2");

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
