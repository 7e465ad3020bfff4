// Python bindings for the gspx core: graphs, graphons, spectral transforms,
// W-random sampling, homomorphism densities, cut norms and the experiment
// harnesses.

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gspx/experiments.hpp"
#include "gspx/homomorphism.hpp"
#include "gspx/io.hpp"
#include "gspx/sampling.hpp"
#include "gspx/spectral.hpp"

namespace py = pybind11;
using namespace gspx;

PYBIND11_MODULE(_gspx, m) {
    m.doc() = "graphon signal processing core";

    // ---- graphs ----
    py::class_<Graph>(m, "Graph")
        .def(py::init<int, Eigen::MatrixXd>(), py::arg("n"), py::arg("weights"))
        .def_readonly("n", &Graph::n)
        .def_readonly("weights", &Graph::weights);
    m.def("new_graph", &new_graph, py::arg("n"), py::arg("edges"));
    m.def("shift_operator", &shift_operator, py::return_value_policy::copy);

    py::class_<GraphSignal>(m, "GraphSignal")
        .def(py::init<Eigen::VectorXd>(), py::arg("values"))
        .def_readonly("values", &GraphSignal::values);
    m.def("permute", &permute, py::arg("graph"), py::arg("signal"), py::arg("pi"));

    py::class_<RatingTable::Entry>(m, "RatingEntry")
        .def_readonly("user", &RatingTable::Entry::user)
        .def_readonly("item", &RatingTable::Entry::item)
        .def_readonly("rating", &RatingTable::Entry::rating);
    py::class_<RatingTable>(m, "RatingTable")
        .def(py::init<>())
        .def_readwrite("num_users", &RatingTable::num_users)
        .def_readwrite("num_items", &RatingTable::num_items)
        .def_readwrite("entries", &RatingTable::entries);
    m.def("pearson_similarity_graph", &pearson_similarity_graph, py::arg("ratings"),
          py::arg("users"));

    // ---- graphons ----
    py::class_<Graphon>(m, "Graphon")
        .def("__call__", &Graphon::operator(), py::arg("u"), py::arg("v"))
        .def("range_lo", &Graphon::range_lo)
        .def("range_hi", &Graphon::range_hi)
        .def("nonnegative_range", &Graphon::nonnegative_range);
    py::class_<StepGraphon, Graphon>(m, "StepGraphon")
        .def(py::init<Eigen::MatrixXd, double, double>(), py::arg("values"),
             py::arg("lo") = 0.0, py::arg("hi") = 1.0)
        .def("block_count", &StepGraphon::block_count)
        .def("values", &StepGraphon::values, py::return_value_policy::copy)
        .def("block_of", &StepGraphon::block_of, py::arg("u"));
    py::class_<AnalyticKernel, Graphon>(m, "AnalyticKernel")
        .def_static("constant", &AnalyticKernel::constant, py::arg("p"))
        .def_static("product", &AnalyticKernel::product)
        .def_static("soft_geometric", &AnalyticKernel::soft_geometric, py::arg("beta"))
        .def("name", &AnalyticKernel::name);

    py::class_<GraphonSignal>(m, "GraphonSignal")
        .def("__call__", &GraphonSignal::operator(), py::arg("u"))
        .def("l2_bound", &GraphonSignal::l2_bound);
    py::class_<StepSignal, GraphonSignal>(m, "StepSignal")
        .def(py::init<Eigen::VectorXd>(), py::arg("values"))
        .def("block_count", &StepSignal::block_count)
        .def("values", &StepSignal::values, py::return_value_policy::copy)
        .def("l2_norm", &StepSignal::l2_norm);
    py::class_<AnalyticSignal, GraphonSignal>(m, "AnalyticSignal")
        .def_static("constant", &AnalyticSignal::constant, py::arg("c"))
        .def_static("identity", &AnalyticSignal::identity)
        .def("name", &AnalyticSignal::name);

    m.def("induce_graphon", &induce_graphon, py::arg("graph"));
    m.def("induce_signal", &induce_signal, py::arg("signal"));
    m.def("step_graphon_from_matrix", &step_graphon_from_matrix, py::arg("values"),
          py::arg("lo"), py::arg("hi"));
    m.def("discretize", &discretize, py::arg("graphon"), py::arg("N"));
    m.def("discretize_signal", &discretize_signal, py::arg("signal"), py::arg("N"));

    // ---- spectral ----
    py::class_<SpectrumEntry>(m, "SpectrumEntry")
        .def_readonly("sigma", &SpectrumEntry::sigma)
        .def_readonly("vec", &SpectrumEntry::vec);
    py::class_<SignedSpectrum>(m, "SignedSpectrum")
        .def_readonly("size", &SignedSpectrum::size)
        .def("at", &SignedSpectrum::at, py::arg("j"), py::return_value_policy::copy)
        .def("indices", &SignedSpectrum::indices)
        .def("eigenvalues", &SignedSpectrum::eigenvalues);
    py::class_<FourierCoefficients>(m, "FourierCoefficients")
        .def_readonly("coeffs", &FourierCoefficients::coeffs)
        .def_readonly("source_size", &FourierCoefficients::source_size)
        .def("at", &FourierCoefficients::at, py::arg("j"))
        .def("l2_norm", &FourierCoefficients::l2_norm)
        .def("sorted_magnitudes", &FourierCoefficients::sorted_magnitudes);

    m.def("graph_spectrum", &graph_spectrum, py::arg("graph"));
    m.def("gft",
          py::overload_cast<const Graph&, const GraphSignal&>(&gft),
          py::arg("graph"), py::arg("signal"));
    m.def("gft",
          py::overload_cast<const SignedSpectrum&, const GraphSignal&>(&gft),
          py::arg("spectrum"), py::arg("signal"));
    m.def("igft",
          py::overload_cast<const SignedSpectrum&, const FourierCoefficients&>(&igft),
          py::arg("spectrum"), py::arg("coeffs"));
    m.def("wft_step", &wft_step, py::arg("graphon"), py::arg("signal"));
    m.def("wft_numeric", &wft_numeric, py::arg("graphon"), py::arg("signal"), py::arg("N"));
    m.def("step_spectrum", &step_spectrum, py::arg("graphon"));
    m.def("iwft", &iwft, py::arg("spectrum"), py::arg("coeffs"));
    m.def("bandlimit", &bandlimit, py::arg("coeffs"), py::arg("spectrum"), py::arg("cutoff"));
    m.def("is_bandlimited", &is_bandlimited, py::arg("coeffs"), py::arg("spectrum"),
          py::arg("cutoff"), py::arg("tol") = 1e-12);
    m.def("graphon_shift", &graphon_shift, py::arg("graphon"), py::arg("signal"), py::arg("N"));
    m.def("is_non_derogatory", &is_non_derogatory, py::arg("spectrum"), py::arg("tol"));
    m.def("spectral_projection_distance", &spectral_projection_distance, py::arg("a"),
          py::arg("b"), py::arg("indices"));

    // ---- sampling ----
    m.def("rng_stream", &rng_stream, py::arg("master_seed"), py::arg("trial_index"));
    py::class_<SampleLabels>(m, "SampleLabels")
        .def_readonly("u", &SampleLabels::u)
        .def_readonly("seed", &SampleLabels::seed)
        .def_readonly("stream", &SampleLabels::stream);
    m.def("sample_w_random_graph", &sample_w_random_graph, py::arg("graphon"), py::arg("n"),
          py::arg("seed"), py::arg("stream"));
    m.def("sample_graphon_signal", &sample_graphon_signal, py::arg("signal"), py::arg("labels"));

    // ---- homomorphism densities / norms ----
    py::class_<Motif>(m, "Motif")
        .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"), py::arg("edges"))
        .def_readonly("n_prime", &Motif::n_prime)
        .def_readonly("edges", &Motif::edges)
        .def_static("single_node", &Motif::single_node)
        .def_static("edge", &Motif::edge)
        .def_static("triangle", &Motif::triangle)
        .def_static("cycle", &Motif::cycle, py::arg("k"))
        .def_static("named", &Motif::named, py::arg("name"));
    m.def("hom_count", &hom_count, py::arg("motif"), py::arg("graph"));
    m.def("hom_density_graph", &hom_density_graph, py::arg("motif"), py::arg("graph"));
    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("estimate", &McEstimate::estimate)
        .def_readonly("stderr", &McEstimate::stderr_)
        .def_readonly("signed_kernel", &McEstimate::signed_kernel);
    m.def("hom_density_graphon_mc", &hom_density_graphon_mc, py::arg("motif"),
          py::arg("graphon"), py::arg("samples"), py::arg("seed"));
    m.def("cycle_hom_count", &cycle_hom_count, py::arg("k"), py::arg("graph"));
    m.def("cycle_density_graph", &cycle_density_graph, py::arg("k"), py::arg("graph"));
    m.def("cycle_density_graphon", &cycle_density_graphon, py::arg("k"), py::arg("spectrum"));
    py::class_<CutNorm>(m, "CutNorm")
        .def_readonly("value", &CutNorm::value)
        .def_readonly("row_blocks", &CutNorm::row_blocks)
        .def_readonly("col_blocks", &CutNorm::col_blocks);
    m.def("cut_norm_step", &cut_norm_step, py::arg("graphon"));
    m.def("l2_operator_norm", &l2_operator_norm, py::arg("spectrum"));
    py::class_<NormSandwich>(m, "NormSandwich")
        .def_readonly("cut", &NormSandwich::cut)
        .def_readonly("opnorm", &NormSandwich::opnorm)
        .def_readonly("holds", &NormSandwich::holds);
    m.def("check_norm_sandwich", &check_norm_sandwich, py::arg("graphon"));

    // ---- experiments ----
    m.def("quantiles", &quantiles, py::arg("samples"), py::arg("levels"));
    m.def("spearman", &spearman, py::arg("a"), py::arg("b"));
    m.def("pollution_graphon", &pollution_graphon, py::arg("beta"));
    m.def("pollution_signal", &pollution_signal, py::arg("sigma_y"));
    m.def("min_norm_gft_difference", &min_norm_gft_difference, py::arg("a"), py::arg("b"));

    py::class_<PollutionConfig>(m, "PollutionConfig")
        .def(py::init<>())
        .def_readwrite("beta", &PollutionConfig::beta)
        .def_readwrite("sigma_y", &PollutionConfig::sigma_y)
        .def_readwrite("n_grid", &PollutionConfig::n_grid)
        .def_readwrite("trials", &PollutionConfig::trials)
        .def_readwrite("master_seed", &PollutionConfig::master_seed);
    py::class_<QuantileRow>(m, "QuantileRow")
        .def_readonly("n", &QuantileRow::n)
        .def_readonly("q68", &QuantileRow::q68)
        .def_readonly("q95", &QuantileRow::q95)
        .def_readonly("q997", &QuantileRow::q997);
    py::class_<PollutionResult>(m, "PollutionResult")
        .def_readonly("rows", &PollutionResult::rows)
        .def_readonly("samples", &PollutionResult::samples);
    m.def("run_pollution_experiment", &run_pollution_experiment, py::arg("config"));

    py::class_<Theorem1Row>(m, "Theorem1Row")
        .def_readonly("n", &Theorem1Row::n)
        .def_readonly("median_error", &Theorem1Row::median_error)
        .def_readonly("non_derogatory", &Theorem1Row::non_derogatory);
    m.def("run_theorem1_check", &run_theorem1_check, py::arg("graphon"), py::arg("signal"),
          py::arg("cutoff"), py::arg("n_grid"), py::arg("trials"), py::arg("seed"),
          py::arg("n_ref"));

    py::class_<TransferConfig>(m, "TransferConfig")
        .def(py::init<>())
        .def_readwrite("movie_id", &TransferConfig::movie_id)
        .def_readwrite("n_grid", &TransferConfig::n_grid)
        .def_readwrite("trials", &TransferConfig::trials)
        .def_readwrite("master_seed", &TransferConfig::master_seed)
        .def_readwrite("imputation_policy", &TransferConfig::imputation_policy);
    py::class_<TransferRow>(m, "TransferRow")
        .def_readonly("n", &TransferRow::n)
        .def_readonly("mean_rel_diff", &TransferRow::mean_rel_diff)
        .def_readonly("std_rel_diff", &TransferRow::std_rel_diff);
    m.def("run_movielens_experiment", &run_movielens_experiment, py::arg("config"),
          py::arg("ratings"));
    m.def("movielens_reference_signal", &movielens_reference_signal, py::arg("ratings"),
          py::arg("movie_id"), py::arg("policy"));

    // ---- io ----
    m.def("fmt12", &fmt12, py::arg("value"));
    m.def("save_graph", &save_graph, py::arg("graph"), py::arg("path"));
    m.def("load_graph", &load_graph, py::arg("path"));
    m.def("save_step_graphon", &save_step_graphon, py::arg("graphon"), py::arg("path"));
    m.def("load_step_graphon", &load_step_graphon, py::arg("path"));
    m.def("save_signal", &save_signal, py::arg("values"), py::arg("path"));
    m.def("load_signal", &load_signal, py::arg("path"));
    m.def("save_motif", &save_motif, py::arg("motif"), py::arg("path"));
    m.def("load_motif", &load_motif, py::arg("path"));
    m.def("parse_movielens", &parse_movielens, py::arg("path"));
}
