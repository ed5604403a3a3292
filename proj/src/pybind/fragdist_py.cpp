#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fragdist/acceptance.hpp"
#include "fragdist/counterexamples.hpp"
#include "fragdist/error.hpp"
#include "fragdist/fragility.hpp"
#include "fragdist/metrics.hpp"
#include "fragdist/models.hpp"
#include "fragdist/pmf.hpp"
#include "fragdist/stein.hpp"

namespace py = pybind11;
using namespace fragdist;

namespace {

SteinParams params_from_dict(SteinFamily family, const py::dict& d) {
    switch (family) {
        case SteinFamily::cond_poisson: return d["lambda"].cast<double>();
        case SteinFamily::cond_negbin:
            return NegBinParams(d["r"].cast<double>(), d["p"].cast<double>());
        case SteinFamily::cond_compound_poisson:
            return CompoundPoissonParams(d["lambdas"].cast<std::vector<double>>());
    }
    fail("invalid-parameter", "unknown Stein family");
}

py::dict factors_to_dict(SteinFamily family, const SteinFactors& f) {
    py::dict out;
    out["family"] = stein_family_name(family);
    out["m"] = f.m;
    out["G1"] = f.G1;
    out["G2"] = f.G2;
    out["method"] = stein_method_name(f.method);
    return out;
}

}  // namespace

PYBIND11_MODULE(_fragdist, m) {
    m.doc() = "fragility distributions of exceedance counts and their "
              "conditional compound Poisson / negative binomial approximations";

    py::register_exception<error>(m, "FragdistError");

    py::class_<PmfVector>(m, "PmfVector")
        .def(py::init<>())
        .def_readwrite("offset", &PmfVector::offset)
        .def_readwrite("probs", &PmfVector::probs)
        .def_readwrite("tail_mass", &PmfVector::tail_mass)
        .def_readwrite("tol", &PmfVector::tol)
        .def("at", &PmfVector::at)
        .def("sum", &PmfVector::sum)
        .def("mass_from", &PmfVector::mass_from)
        .def("validate", &PmfVector::validate)
        .def("__repr__", [](const PmfVector& p) {
            return "PmfVector(offset=" + std::to_string(p.offset) + ", n=" +
                   std::to_string(p.size()) + ", tail=" + std::to_string(p.tail_mass) + ")";
        });

    py::class_<FragilityResult>(m, "FragilityResult")
        .def_readonly("m", &FragilityResult::m)
        .def_readonly("I_m", &FragilityResult::I_m)
        .def_readonly("law", &FragilityResult::law);

    py::class_<TvReport>(m, "TvReport")
        .def_readonly("tv", &TvReport::tv)
        .def_readonly("achieving_set", &TvReport::achieving_set)
        .def_readonly("tail_bound", &TvReport::tail_bound)
        .def_readonly("precision_warning", &TvReport::precision_warning);

    py::class_<OscillationReport>(m, "OscillationReport")
        .def_readonly("function", &OscillationReport::function)
        .def_readonly("depth", &OscillationReport::depth)
        .def_readonly("seq_a", &OscillationReport::seq_a)
        .def_readonly("seq_b", &OscillationReport::seq_b)
        .def_readonly("limit_a", &OscillationReport::limit_a)
        .def_readonly("limit_b", &OscillationReport::limit_b)
        .def_readonly("gap", &OscillationReport::gap);

    // dist_core
    m.def("poisson_pmf", &poisson_pmf, py::arg("lam"), py::arg("tol") = kDefaultTol);
    m.def(
        "nb_pmf",
        [](double r, double p, double tol) { return nb_pmf(NegBinParams(r, p), tol); },
        py::arg("r"), py::arg("p"), py::arg("tol") = kDefaultTol);
    m.def(
        "cp_pmf",
        [](const std::vector<double>& lambdas, double tol) {
            return cp_pmf(CompoundPoissonParams(lambdas), tol);
        },
        py::arg("lambdas"), py::arg("tol") = kDefaultTol);
    m.def("conditional_truncate", &conditional_truncate, py::arg("pmf"), py::arg("m"));
    m.def("convolve", &convolve, py::arg("a"), py::arg("b"));
    m.def(
        "convolve_power",
        [](const std::vector<double>& pi, int j) {
            return convolve_power(ClusterDistribution(pi), j);
        },
        py::arg("pi"), py::arg("j"));

    // fragility
    m.def(
        "index_I_m",
        [](const std::vector<double>& pi, int m) { return index_I_m(ClusterDistribution(pi), m); },
        py::arg("pi"), py::arg("m"));
    m.def(
        "fd_limit",
        [](const std::vector<double>& pi, int m) { return fd_limit(ClusterDistribution(pi), m); },
        py::arg("pi"), py::arg("m"));
    m.def(
        "conditional_cp_law",
        [](double rate, const std::vector<double>& pi, int m, double tol) {
            return conditional_cp_law(rate, ClusterDistribution(pi), m, tol);
        },
        py::arg("rate"), py::arg("pi"), py::arg("m"), py::arg("tol") = kDefaultTol);
    m.def(
        "fd_convergence_table",
        [](const std::vector<double>& pi, int m, const std::vector<double>& rates, double tol) {
            return fd_convergence_table(ClusterDistribution(pi), m, rates, tol);
        },
        py::arg("pi"), py::arg("m"), py::arg("rates"), py::arg("tol") = kDefaultTol);

    // stein
    m.def(
        "stein_factors_numeric",
        [](const std::string& family, const py::dict& params, int m, int M) {
            const SteinFamily fam = stein_family_from_name(family);
            return factors_to_dict(fam, stein_factors_numeric(fam, params_from_dict(fam, params), m, M));
        },
        py::arg("family"), py::arg("params"), py::arg("m"), py::arg("M") = 0);
    m.def(
        "stein_factors_reference",
        [](const std::string& family, const py::dict& params, int m) {
            const SteinFamily fam = stein_family_from_name(family);
            return factors_to_dict(fam, stein_factors_reference(fam, params_from_dict(fam, params), m));
        },
        py::arg("family"), py::arg("params"), py::arg("m"));
    m.def(
        "monotonicity_sweep",
        [](const std::string& family, const py::dict& params, int m_max, int M) {
            const SteinFamily fam = stein_family_from_name(family);
            const MonotonicityTable table =
                monotonicity_sweep(fam, params_from_dict(fam, params), m_max, M);
            py::list rows;
            for (const auto& row : table.rows) rows.append(py::make_tuple(row.m, row.G1, row.G2));
            py::dict out;
            out["rows"] = rows;
            out["monotone"] = table.monotone;
            return out;
        },
        py::arg("family"), py::arg("params"), py::arg("m_max"), py::arg("M") = 0);
    m.def(
        "solve_stein_poisson",
        [](double lam, int m, const std::vector<int>& A, int M) {
            const SteinSolution sol = solve_stein_poisson(lam, m, A, M);
            return py::make_tuple(sol.g, sol.residual);
        },
        py::arg("lam"), py::arg("m"), py::arg("A"), py::arg("M"));
    m.def(
        "G_m2_nb_exact",
        [](double r, double p, int m) { return G_m2_nb_exact(NegBinParams(r, p), m); },
        py::arg("r"), py::arg("p"), py::arg("m"));
    m.def("G_m2_poisson_exact", &G_m2_poisson_exact, py::arg("lam"), py::arg("m"));
    m.def("G_m1_poisson_bound", &G_m1_poisson_bound, py::arg("lam"));
    m.def(
        "G_m1_nb_bound", [](double r, double p) { return G_m1_nb_bound(NegBinParams(r, p)); },
        py::arg("r"), py::arg("p"));
    m.def("G_m_cp_bounds", &G_m_cp_bounds, py::arg("lambda1"), py::arg("lambda2"));
    m.def("cluster_rates_decreasing", &cluster_rates_decreasing, py::arg("lambdas"));
    m.def("transfer_conditional_bound", &transfer_conditional_bound, py::arg("eps1"),
          py::arg("eps2"), py::arg("prob_W_ge_m"), py::arg("G1"), py::arg("G2"));

    // models
    m.def(
        "poisson_binomial_pmf",
        [](const std::vector<double>& p) {
            return poisson_binomial_pmf(IndependentExceedanceModel(p));
        },
        py::arg("p"));
    m.def(
        "tworuns_pmf", [](int n, double p) { return tworuns_pmf(TwoRunsModel(n, p)); },
        py::arg("n"), py::arg("p"));
    m.def(
        "zeroinflated_pmf",
        [](int n, double p1, double q) { return zeroinflated_pmf(ZeroInflatedModel(n, p1, q)); },
        py::arg("n"), py::arg("p1"), py::arg("q"));
    m.def(
        "sample_independent",
        [](const std::vector<double>& p, std::uint64_t seed, int count) {
            return sample(ModelSpec{IndependentExceedanceModel(p)}, seed, count).counts;
        },
        py::arg("p"), py::arg("seed"), py::arg("count"));
    m.def(
        "sample_tworuns",
        [](int n, double p, std::uint64_t seed, int count) {
            return sample(ModelSpec{TwoRunsModel(n, p)}, seed, count).counts;
        },
        py::arg("n"), py::arg("p"), py::arg("seed"), py::arg("count"));
    m.def(
        "sample_zeroinflated",
        [](int n, double p1, double q, std::uint64_t seed, int count) {
            return sample(ModelSpec{ZeroInflatedModel(n, p1, q)}, seed, count).counts;
        },
        py::arg("n"), py::arg("p1"), py::arg("q"), py::arg("seed"), py::arg("count"));
    m.def(
        "example1_bound",
        [](const std::vector<double>& p) { return example1_bound(IndependentExceedanceModel(p)); },
        py::arg("p"));
    m.def(
        "example2_bound",
        [](int n, double p) {
            const TwoRunsBound b = example2_bound(TwoRunsModel(n, p));
            return py::make_tuple(b.a, b.b, b.bound, b.asymptotic);
        },
        py::arg("n"), py::arg("p"));
    m.def(
        "example3_bound",
        [](int n, double p1, double q) { return example3_bound(ZeroInflatedModel(n, p1, q)); },
        py::arg("n"), py::arg("p1"), py::arg("q"));

    // metrics
    m.def("tv_distance", &tv_distance, py::arg("a"), py::arg("b"));
    m.def("empirical_pmf", &empirical_pmf, py::arg("counts"));
    m.def("conditional_empirical", &conditional_empirical, py::arg("counts"), py::arg("m"));

    // counterexamples
    m.def("G1_cdf", &G1_cdf, py::arg("y"));
    m.def("ratio_r1", &ratio_r1, py::arg("y"));
    m.def("G2_cdf", &G2_cdf, py::arg("z"));
    m.def("bivariate_ratio", &bivariate_ratio, py::arg("s"));
    m.def("trivariate_m1", &trivariate_m1, py::arg("s"));
    m.def("trivariate_m2", &trivariate_m2, py::arg("s"));
    m.def(
        "oscillation_report",
        [](const std::string& which, int depth) {
            return oscillation_report(osc_function_from_name(which), depth);
        },
        py::arg("which"), py::arg("depth") = 40);

    // acceptance
    m.def("run_acceptance", []() {
        py::list out;
        for (const auto& r : acceptance::run_all()) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            out.append(d);
        }
        return out;
    });
}
