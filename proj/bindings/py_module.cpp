#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mobility/axioms.hpp"
#include "mobility/inequality.hpp"
#include "mobility/io.hpp"

namespace py = pybind11;
using namespace mobility;

namespace {

MovementProfile make_profile(const StatusVector& u, const StatusVector& v) {
    return validate_profile(u, v);
}

StatusTransform transform_from(const std::string& name) {
    if (name == "identity") return StatusTransform::identity;
    if (name == "log") return StatusTransform::log_status;
    if (name == "rank") return StatusTransform::rank;
    fail(Errc::BadArguments, "unknown status transform '" + name + "'");
}

MeasureSpec spec_from_kwargs(const std::string& measure, double alpha, int gamma,
                             const std::string& status, const std::string& pmode,
                             const std::string& var, const std::string& ineq, double c,
                             double alpha_tilde) {
    MeasureSpec spec;
    const auto id = parse_measure(measure);
    if (!id) fail(Errc::BadArguments, "unknown measure '" + measure + "'");
    spec.id = *id;
    spec.alpha = alpha;
    spec.gamma = gamma;
    spec.location_c = c;
    spec.alpha_tilde = alpha_tilde;
    spec.transform = transform_from(status);
    spec.p_mode = pmode == "status" ? PMode::status_based : PMode::distance_based;
    spec.variance = var == "n-1" ? VarianceConvention::sample : VarianceConvention::population;
    spec.ineq = ineq == "gini" ? InequalityKind::relative_gini : InequalityKind::theil;
    return spec;
}

py::dict decomposition_to_dict(const DecompositionResult& d) {
    py::dict components;
    for (const auto& c : d.components) {
        py::dict entry;
        entry["weight"] = c.weight;
        entry["value"] = c.value;
        components[c.label.c_str()] = entry;
    }
    py::dict out;
    out["components"] = components;
    out["between"] = d.between;
    out["total"] = d.total;
    out["residual"] = d.residual;
    return out;
}

}  // namespace

PYBIND11_MODULE(pymobility, m) {
    m.doc() = "income/rank mobility measures, decompositions and property audits";

    py::register_exception<Error>(m, "MobilityError");

    py::class_<MovementProfile>(m, "MovementProfile")
        .def(py::init(&make_profile), py::arg("u"), py::arg("v"))
        .def_readonly("u", &MovementProfile::u)
        .def_readonly("v", &MovementProfile::v)
        .def("__len__", &MovementProfile::size);

    m.def("transform_status",
          [](const MovementProfile& p, const std::string& t) {
              return transform_status(p, transform_from(t));
          },
          py::arg("profile"), py::arg("transform"));
    m.def("replicate", &replicate, py::arg("profile"), py::arg("r"));
    m.def("summary", [](const MovementProfile& p) {
        const auto s = summary(p);
        py::dict out;
        out["mu_u"] = s.mu_u;
        out["mu_v"] = s.mu_v;
        out["n"] = s.n;
        return out;
    });

    m.def("evaluate",
          [](const MovementProfile& p, const std::string& measure, double alpha, int gamma,
             const std::string& status, const std::string& pmode, const std::string& var,
             const std::string& ineq, double c, double alpha_tilde) {
              return evaluate(spec_from_kwargs(measure, alpha, gamma, status, pmode, var,
                                               ineq, c, alpha_tilde),
                              p);
          },
          py::arg("profile"), py::arg("measure"), py::arg("alpha") = 0.0,
          py::arg("gamma") = 1, py::arg("status") = "identity",
          py::arg("pmode") = "distance", py::arg("var") = "n", py::arg("ineq") = "theil",
          py::arg("c") = 0.0, py::arg("alpha_tilde") = 0.5);

    m.def("decompose_updown",
          [](const MovementProfile& p, const std::string& concept_name, int gamma,
             const std::string& pmode) {
              const DistanceConcept dc = concept_name == "absolute" ? DistanceConcept::absolute
                                         : concept_name == "scale"
                                             ? DistanceConcept::scale_normalised
                                             : DistanceConcept::translation_normalised;
              return decomposition_to_dict(decompose_updown(
                  p, dc,
                  WeightScheme{gamma, pmode == "status" ? PMode::status_based
                                                        : PMode::distance_based}));
          },
          py::arg("profile"), py::arg("concept") = "absolute", py::arg("gamma") = 1,
          py::arg("pmode") = "distance");

    m.def("decompose_seg",
          [](const MovementProfile& p, const std::string& concept_name) {
              const DistanceConcept dc = concept_name == "absolute" ? DistanceConcept::absolute
                                         : concept_name == "scale"
                                             ? DistanceConcept::scale_normalised
                                             : DistanceConcept::translation_normalised;
              return decomposition_to_dict(decompose_seg(p, dc));
          },
          py::arg("profile"), py::arg("concept") = "absolute");

    m.def("decompose_s1_subgroups",
          [](const MovementProfile& p, double alpha, const std::vector<std::size_t>& groups) {
              return decomposition_to_dict(
                  decompose_s1_subgroups(p, alpha, make_partition(groups)));
          },
          py::arg("profile"), py::arg("alpha"), py::arg("groups"));
    m.def("decompose_t1_subgroups",
          [](const MovementProfile& p, double alpha, const std::vector<std::size_t>& groups) {
              return decomposition_to_dict(
                  decompose_t1_subgroups(p, alpha, make_partition(groups)));
          },
          py::arg("profile"), py::arg("alpha"), py::arg("groups"));

    m.def("generalized_entropy", &generalized_entropy, py::arg("x"), py::arg("alpha"));
    m.def("kolm",
          [](const Distribution& x, double alpha, const std::string& var) {
              return kolm_family(x, alpha,
                                 var == "n-1" ? VarianceConvention::sample
                                              : VarianceConvention::population);
          },
          py::arg("x"), py::arg("alpha"), py::arg("var") = "n");
    m.def("gini",
          [](const Distribution& x, const std::string& variant) {
              return gini(x, variant == "relative" ? GiniVariant::relative
                                                   : GiniVariant::absolute);
          },
          py::arg("x"), py::arg("variant") = "absolute");
    m.def("extended_gini",
          [](const Distribution& x, int gamma, const std::string& variant) {
              return extended_gini(x, gamma,
                                   variant == "relative" ? GiniVariant::relative
                                                         : GiniVariant::absolute);
          },
          py::arg("x"), py::arg("gamma"), py::arg("variant") = "absolute");

    m.def("reduce_mobility",
          [](const Distribution& x, const std::string& measure, double alpha, int gamma) {
              MeasureSpec spec;
              const auto id = parse_measure(measure);
              if (!id) fail(Errc::BadArguments, "unknown measure '" + measure + "'");
              spec.id = *id;
              spec.alpha = alpha;
              spec.gamma = gamma;
              return reduce_mobility(x, spec);
          },
          py::arg("x"), py::arg("measure"), py::arg("alpha") = 0.0, py::arg("gamma") = 1);

    m.def("paper_table",
          [](int which, int decimals) {
              const auto table = run_paper_tables(which);
              py::dict out;
              out["columns"] = table.column_labels;
              py::dict rows;
              for (std::size_t r = 0; r < table.row_labels.size(); ++r) {
                  py::list cells;
                  for (double v : table.values[r])
                      cells.append(render_value(v, decimals));
                  rows[table.row_labels[r].c_str()] = cells;
              }
              out["rows"] = rows;
              return out;
          },
          py::arg("which"), py::arg("decimals") = 3);

    m.def("property_report_json",
          [](int trials, std::uint64_t seed) {
              return report_to_json(property_report(default_roster(), trials, seed));
          },
          py::arg("trials") = 120, py::arg("seed") = 1);
}
