#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sturmian/sturmian.hpp"

namespace py = pybind11;
using namespace sturmian;

namespace {

MorphismWord name_of(const std::string& s) { return MorphismWord::parse(s); }

std::optional<char> start_of(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  if (s->size() != 1) throw Error(ErrorKind::SyntaxError, "start must be '0' or '1'");
  return (*s)[0];
}

py::dict params_dict(const IetParams& p) {
  py::dict d;
  d["l0"] = format_quad(p.l0);
  d["l1"] = format_quad(p.l1);
  d["rho"] = format_quad(p.rho);
  d["boundary"] = std::string(to_string(p.boundary));
  d["gamma"] = format_quad(p.slope());
  d["delta"] = format_quad(p.intercept());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Sturmian morphism algebra and derived words";

  // Messages start with the error kind, e.g. "NotPrimitive: ...".
  py::register_exception<Error>(m, "SturmianError", PyExc_ValueError);

  m.def("normalize", [](const std::string& w) { return normalize(name_of(w)).to_string(); }, py::arg("name"));
  m.def("is_normalized", [](const std::string& w) { return is_normalized(name_of(w)); }, py::arg("name"));
  m.def("morphisms_equal", [](const std::string& u, const std::string& v) { return morphisms_equal(name_of(u), name_of(v)); },
        py::arg("u"), py::arg("v"));
  m.def("delta", [](const std::string& w) { return delta(name_of(w)).to_string(); }, py::arg("name"));
  m.def(
      "delta_orbit",
      [](const std::string& w) {
        const DeltaOrbit o = delta_orbit(name_of(w));
        std::vector<std::string> words;
        for (const MorphismWord& v : o.words) words.push_back(v.to_string());
        py::dict d;
        d["preperiod"] = o.preperiod;
        d["period"] = o.period;
        d["words"] = words;
        return d;
      },
      py::arg("name"));

  m.def(
      "realize",
      [](const std::string& w) {
        const SturmianMorphism s = realize(name_of(w));
        return std::make_pair(s.image0, s.image1);
      },
      py::arg("name"), "Images of 0 and 1.");
  m.def("apply", [](const std::string& w, const std::string& x) { return apply_morphism(realize(name_of(w)), x); },
        py::arg("name"), py::arg("word"));

  m.def(
      "fixed_point_prefix",
      [](const std::string& w, std::size_t n, std::optional<std::string> start) {
        return fixed_point_prefix(name_of(w), n, start_of(start));
      },
      py::arg("name"), py::arg("length"), py::arg("start") = py::none());
  m.def(
      "fixed_point_params",
      [](const std::string& w, std::optional<std::string> start) {
        return params_dict(fixed_point_params(name_of(w), start_of(start)));
      },
      py::arg("name"), py::arg("start") = py::none(), "Exact parameters as strings in the quadratic-number grammar.");
  m.def(
      "generate",
      [](const std::string& l0, const std::string& l1, const std::string& rho, std::size_t n, const std::string& boundary) {
        return generate(IetParams{parse_quad(l0), parse_quad(l1), parse_quad(rho), parse_boundary(boundary)}, n);
      },
      py::arg("l0"), py::arg("l1"), py::arg("rho"), py::arg("length"), py::arg("boundary") = "lower");

  m.def(
      "derived_word",
      [](const std::string& w, const std::string& factor, std::size_t n, std::optional<std::string> start) {
        const DerivedWordReport r = derived_word(WordSource::fixed_point(name_of(w), start_of(start)), factor, n);
        py::dict d;
        d["factor"] = r.factor;
        d["return_words"] = r.return_words;
        d["derived_prefix"] = r.derived_prefix;
        d["first_occurrence"] = r.first_occurrence;
        return d;
      },
      py::arg("name"), py::arg("factor"), py::arg("length"), py::arg("start") = py::none(),
      "Derived word of a factor in the fixed point of phi_name.");

  m.def("is_closeable", [](const std::string& w) { return is_closeable(name_of(w)).closeable; }, py::arg("name"));
  m.def(
      "classify",
      [](const std::string& w) {
        const MorphismWord name = name_of(w);
        const Closeability c = is_closeable(name);
        const InterceptClassification ic = classify_by_intercept(name);
        py::list params;
        for (const IetParams& p : ic.params) params.append(params_dict(p));
        py::dict d;
        d["closeable"] = c.closeable;
        d["reason"] = c.reason;
        d["delta_class"] = std::string(to_string(ic.delta_class));
        d["params"] = params;
        return d;
      },
      py::arg("name"));
  m.def(
      "closed_set",
      [](const std::string& w) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& member : closed_set(name_of(w)).members) out.emplace_back(member.name.to_string(), member.provenance);
        return out;
      },
      py::arg("name"), "Members of the witness set with their provenance.");
  m.def(
      "verify_closed",
      [](const std::string& w, std::size_t max_factor_len, std::size_t derive_len) {
        const ClosedSet set = closed_set(name_of(w));
        VerificationReport r;
        {
          py::gil_scoped_release release;
          r = verify_closed_empirically(set, max_factor_len, derive_len);
        }
        py::dict d;
        d["total"] = r.checks.size();
        d["failures"] = r.failures;
        return d;
      },
      py::arg("name"), py::arg("max_factor_len") = 12, py::arg("derive_len") = 300);

  m.def("yasutomi_gamma", [](const std::string& g, const std::string& d) { return yasutomi_gamma(parse_quad(g), parse_quad(d)); },
        py::arg("gamma"), py::arg("delta"));
  m.def("yasutomi_theta", [](const std::string& t, const std::string& r) { return yasutomi_theta(parse_quad(t), parse_quad(r)); },
        py::arg("theta"), py::arg("rho"));
}
