#pragma once

#include "conelat/report.hpp"

namespace conelat {

// cone: nu join/meet subspace identities (independent complement route),
// exact rank identity, modular law on constrained triples.
Report check_nu_identities(Field f, int max_n, int trials, std::uint64_t seed,
                           double tol = 1e-9);
Report check_modular_law(Field f, int max_n, int trials, std::uint64_t seed,
                         double tol = 1e-8);
Report check_dimension_formula();
Report check_radial_identity(Field f, int n, int trials, std::uint64_t seed,
                             double tol = 1e-9);
Report check_radial_conjugation(Field f, int n, int trials,
                                std::uint64_t seed, double tol = 1e-9);

// lattice: polytope face lattices against the modularity classification and
// the star-join product lemma.
Report check_polytope_shape(const std::string& shape);
Report check_product_lemma();

// albert
Report check_albert_chart(int trials, std::uint64_t seed, double tol = 1e-10);
Report check_albert_duality(int trials, std::uint64_t seed, double tol = 1e-7);
Report check_albert_incidence(int trials, std::uint64_t seed,
                              double tol = 1e-7);
Report check_albert_det_sigma(int trials, std::uint64_t seed,
                              double tol = 1e-9);

// r5
Report check_r5_fidelity();
Report check_r5_incidence();
Report check_r5_factorization(int trials, std::uint64_t seed);
Report check_r5_spans(int n_spans, std::uint64_t seed, double tol = 1e-8);
Report check_r5_conics(int fit_samples, int test_samples, double tol = 1e-7);
Report check_r5_equivalence(int n_maps, int spans_per_map, std::uint64_t seed,
                            double tol = 1e-7);

// sections
Report check_sections_compactness(int trials, std::uint64_t seed);
Report check_sections_unique_ray(int trials, std::uint64_t seed);
Report check_sections_shared_directions(int trials, std::uint64_t seed);
Report check_sections_classes(int n_faces, int n_dirs, std::uint64_t seed,
                              double tol = 1e-8);
// Demo payload for the sections subcommand: recession rays, class counts and
// affine-axiom sampling statistics for the C_n(field), M = E11 section.
Report sections_demo(Field f, int n, int trials, std::uint64_t seed);

// Structured report for the R^5 machinery: the printed-matrix fidelity
// table, sample exact factorizations, and spans-check statistics.
nlohmann::json r5_report(int trials, std::uint64_t seed);
std::string r5_report_text(const nlohmann::json& rep);

// Dispatches cfg.subcommand to the checks above; throws UsageError for
// unknown subcommands and invalid field/n combinations.
std::vector<Report> run_suite(const RunConfig& cfg);

}  // namespace conelat
