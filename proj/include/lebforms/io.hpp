// Copyright 2026 The lebforms Authors
// SPDX-License-Identifier: Apache-2.0
//
// Problem-file parsing, report serialization, and the subcommand dispatcher
// shared by the command-line tool and the tests.
//
// Problem files are JSON (schema 1). Matrices are row-major arrays of rows;
// every complex entry is a [re, im] pair and entry (i, j) = t(e_i, e_j).

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "lebforms/errors.hpp"
#include "lebforms/forms.hpp"
#include "lebforms/linalg.hpp"
#include "lebforms/measures.hpp"
#include "lebforms/verify.hpp"

namespace lebforms {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kConventionNote = "entry (i,j) = t(e_i, e_j)";
inline constexpr std::uint64_t kDefaultSeed = 20260810ull;
inline constexpr int kDefaultSamples = 500;

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitValidationFailure = 2,
  kExitVerificationFailure = 3,
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

inline Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(complex_to_json(m(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json vector_to_json(const ComplexVector& v) {
  Json entries = Json::array();
  for (Index i = 0; i < v.size(); ++i) {
    entries.push_back(complex_to_json(v(i)));
  }
  return entries;
}

inline Json basis_to_json(const SubspaceBasis& basis) {
  Json vectors = Json::array();
  for (Index i = 0; i < basis.count(); ++i) {
    vectors.push_back(vector_to_json(basis.vector(i)));
  }
  return vectors;
}

inline Json measure_to_json(const AtomicMeasure& mu) {
  Json j;
  j["atoms"] = mu.atoms();
  j["weights"] = vector_to_json(mu.weights());
  return j;
}

inline Json check_to_json(const CheckResult& check) {
  Json j;
  j["name"] = check.name;
  j["passed"] = check.passed;
  j["inconclusive"] = check.inconclusive;
  j["worst_residual"] = check.worst_residual;
  j["tolerance"] = check.tolerance;
  j["detail"] = check.detail;
  return j;
}

inline Json report_to_json(const VerificationReport& report) {
  Json j;
  j["seed"] = report.seed;
  j["samples"] = report.samples;
  j["all_passed"] = report.all_passed();
  Json checks = Json::array();
  for (const CheckResult& check : report.checks) {
    checks.push_back(check_to_json(check));
  }
  j["checks"] = std::move(checks);
  return j;
}

// ---------------------------------------------------------------------------
// Problem files
// ---------------------------------------------------------------------------

struct PairSpec {
  enum class Kind { identity, polar, explicit_forms };
  Kind kind = Kind::identity;
  std::optional<FormMatrix> s1;  // set iff explicit_forms
  std::optional<FormMatrix> s2;
};

struct MeasureProblem {
  AtomicMeasure mu;
  AtomicMeasure nu;
};

struct ProblemFile {
  Index dimension;
  FormMatrix form_t;
  FormMatrix form_w;
  PairSpec pair;
  ToleranceContext tolerance;
  std::optional<ComplexVector> vector_f;
  std::optional<MeasureProblem> measure;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
};

namespace detail {

inline Complex complex_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidInputError(where + ": complex entries must be [re, im] number pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline ComplexMatrix matrix_from_json(const Json& j, Index dim, const std::string& field) {
  if (!j.is_array() || static_cast<Index>(j.size()) != dim) {
    throw InvalidInputError(field + ": expected " + std::to_string(dim) + " rows, got " +
                            std::to_string(j.is_array() ? j.size() : 0));
  }
  ComplexMatrix m(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != dim) {
      throw InvalidInputError(field + " row " + std::to_string(i) + ": expected " +
                              std::to_string(dim) + " entries");
    }
    for (Index k = 0; k < dim; ++k) {
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)],
                                  field + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
  }
  if (!m.allFinite()) {
    throw InvalidInputError(field + ": non-finite entries");
  }
  return m;
}

inline ComplexVector vector_from_json(const Json& j, Index dim, const std::string& field) {
  if (!j.is_array() || static_cast<Index>(j.size()) != dim) {
    throw InvalidInputError(field + ": expected " + std::to_string(dim) + " entries");
  }
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) {
    v(i) = complex_from_json(j[static_cast<std::size_t>(i)],
                             field + "[" + std::to_string(i) + "]");
  }
  return v;
}

inline void require_keys(const Json& j, const std::vector<std::string>& allowed,
                         const std::string& where) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const std::string& key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw InvalidInputError(where + ": unknown field \"" + item.key() + "\"");
    }
  }
}

inline MeasureProblem measure_from_json(const Json& j) {
  require_keys(j, {"atoms", "mu", "nu"}, "measure");
  if (!j.contains("atoms") || !j.contains("mu") || !j.contains("nu")) {
    throw InvalidInputError("measure: fields atoms, mu, nu are all required");
  }
  const Json& atoms_json = j["atoms"];
  if (!atoms_json.is_array() || atoms_json.empty()) {
    throw InvalidInputError("measure.atoms: expected a non-empty array of strings");
  }
  std::vector<std::string> atoms;
  for (const Json& a : atoms_json) {
    if (!a.is_string()) {
      throw InvalidInputError("measure.atoms: atom labels must be strings");
    }
    atoms.push_back(a.get<std::string>());
  }
  const Index n = static_cast<Index>(atoms.size());
  ComplexVector mu_weights = vector_from_json(j["mu"], n, "measure.mu");
  const Json& nu_json = j["nu"];
  if (!nu_json.is_array() || static_cast<Index>(nu_json.size()) != n) {
    throw InvalidInputError("measure.nu: expected " + std::to_string(n) + " entries");
  }
  ComplexVector nu_weights(n);
  for (Index i = 0; i < n; ++i) {
    const Json& entry = nu_json[static_cast<std::size_t>(i)];
    if (!entry.is_number()) {
      throw InvalidInputError("measure.nu[" + std::to_string(i) + "]: expected a real number");
    }
    nu_weights(i) = Complex(entry.get<double>(), 0.0);
  }
  return MeasureProblem{AtomicMeasure(atoms, std::move(mu_weights)),
                        AtomicMeasure(atoms, std::move(nu_weights))};
}

inline PairSpec pair_from_json(const Json& j, Index dim) {
  require_keys(j, {"preset", "s1", "s2"}, "pair");
  PairSpec spec;
  const bool has_preset = j.contains("preset");
  const bool has_forms = j.contains("s1") || j.contains("s2");
  if (has_preset == has_forms) {
    throw InvalidInputError("pair: give either a preset or explicit s1 and s2");
  }
  if (has_preset) {
    const Json& preset = j["preset"];
    if (!preset.is_string()) {
      throw InvalidInputError("pair.preset: expected \"identity\" or \"polar\"");
    }
    const std::string name = preset.get<std::string>();
    if (name == "identity") {
      spec.kind = PairSpec::Kind::identity;
    } else if (name == "polar") {
      spec.kind = PairSpec::Kind::polar;
    } else {
      throw InvalidInputError("pair.preset: unknown preset \"" + name + "\"");
    }
    return spec;
  }
  if (!j.contains("s1") || !j.contains("s2")) {
    throw InvalidInputError("pair: explicit pairs need both s1 and s2");
  }
  spec.kind = PairSpec::Kind::explicit_forms;
  spec.s1 = FormMatrix(matrix_from_json(j["s1"], dim, "pair.s1"));
  spec.s2 = FormMatrix(matrix_from_json(j["s2"], dim, "pair.s2"));
  return spec;
}

}  // namespace detail

inline ProblemFile parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw InvalidInputError("problem file: top level must be a JSON object");
  }
  detail::require_keys(j,
                       {"schema", "dimension", "form_t", "form_w", "pair", "tolerance",
                        "vector_f", "measure", "seed", "samples"},
                       "problem file");
  if (j.contains("schema")) {
    if (!j["schema"].is_number_integer() || j["schema"].get<int>() != kSchemaVersion) {
      throw InvalidInputError("problem file: unsupported schema version");
    }
  }
  if (!j.contains("dimension") || !j["dimension"].is_number_integer() ||
      j["dimension"].get<long long>() < 1) {
    throw InvalidInputError("problem file: dimension must be a positive integer");
  }
  const Index dim = static_cast<Index>(j["dimension"].get<long long>());

  std::optional<MeasureProblem> measure;
  if (j.contains("measure")) {
    measure = detail::measure_from_json(j["measure"]);
    if (measure->mu.size() != dim) {
      throw InvalidInputError("measure: atom count must equal the problem dimension");
    }
  }

  std::optional<FormMatrix> form_t;
  std::optional<FormMatrix> form_w;
  if (j.contains("form_t")) {
    form_t = FormMatrix(detail::matrix_from_json(j["form_t"], dim, "form_t"));
  } else if (measure) {
    form_t = induced_form(measure->mu);
  }
  if (j.contains("form_w")) {
    form_w = FormMatrix(detail::matrix_from_json(j["form_w"], dim, "form_w"));
  } else if (measure) {
    form_w = induced_form(measure->nu);
  }
  if (!form_t || !form_w) {
    throw InvalidInputError(
        "problem file: form_t and form_w are required (they default to the induced forms "
        "only when a measure block is present)");
  }

  PairSpec pair;
  if (j.contains("pair")) {
    pair = detail::pair_from_json(j["pair"], dim);
  }

  ToleranceContext tolerance;
  if (j.contains("tolerance")) {
    const Json& t = j["tolerance"];
    detail::require_keys(t, {"rank_rel", "cert_abs"}, "tolerance");
    if (t.contains("rank_rel")) {
      if (!t["rank_rel"].is_number()) throw InvalidInputError("tolerance.rank_rel: expected a number");
      tolerance.rank_rel = t["rank_rel"].get<double>();
    }
    if (t.contains("cert_abs")) {
      if (!t["cert_abs"].is_number()) throw InvalidInputError("tolerance.cert_abs: expected a number");
      tolerance.cert_abs = t["cert_abs"].get<double>();
    }
    if (!tolerance.valid()) {
      throw InvalidInputError("tolerance: rank_rel and cert_abs must be positive and finite");
    }
  }

  std::optional<ComplexVector> vector_f;
  if (j.contains("vector_f")) {
    vector_f = detail::vector_from_json(j["vector_f"], dim, "vector_f");
  }

  std::optional<std::uint64_t> seed;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<long long>() < 0) {
      throw InvalidInputError("problem file: seed must be a non-negative integer");
    }
    seed = j["seed"].get<std::uint64_t>();
  }
  std::optional<int> samples;
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer() || j["samples"].get<int>() < 1) {
      throw InvalidInputError("problem file: samples must be a positive integer");
    }
    samples = j["samples"].get<int>();
  }

  return ProblemFile{dim,
                     std::move(*form_t),
                     std::move(*form_w),
                     std::move(pair),
                     tolerance,
                     std::move(vector_f),
                     std::move(measure),
                     seed,
                     samples};
}

inline Json problem_to_json(const ProblemFile& problem) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["dimension"] = problem.dimension;
  j["form_t"] = matrix_to_json(problem.form_t.matrix());
  j["form_w"] = matrix_to_json(problem.form_w.matrix());
  switch (problem.pair.kind) {
    case PairSpec::Kind::identity:
      j["pair"] = Json{{"preset", "identity"}};
      break;
    case PairSpec::Kind::polar:
      j["pair"] = Json{{"preset", "polar"}};
      break;
    case PairSpec::Kind::explicit_forms:
      j["pair"] = Json{{"s1", matrix_to_json(problem.pair.s1->matrix())},
                       {"s2", matrix_to_json(problem.pair.s2->matrix())}};
      break;
  }
  j["tolerance"] = Json{{"rank_rel", problem.tolerance.rank_rel},
                        {"cert_abs", problem.tolerance.cert_abs}};
  if (problem.vector_f) {
    j["vector_f"] = vector_to_json(*problem.vector_f);
  }
  if (problem.measure) {
    Json m;
    m["atoms"] = problem.measure->mu.atoms();
    m["mu"] = vector_to_json(problem.measure->mu.weights());
    Json nu = Json::array();
    for (Index i = 0; i < problem.measure->nu.size(); ++i) {
      nu.push_back(problem.measure->nu.weight(i).real());
    }
    m["nu"] = std::move(nu);
    j["measure"] = std::move(m);
  }
  if (problem.seed) j["seed"] = *problem.seed;
  if (problem.samples) j["samples"] = *problem.samples;
  return j;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct RunOptions {
  std::optional<PairSpec> pair_override;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::optional<double> tol_rank;
  std::optional<double> tol_cert;
};

struct RunResult {
  Json report;
  int exit_code = kExitOk;
  std::string summary;
};

namespace detail {

inline ToleranceContext resolve_tolerance(const ProblemFile& problem, const RunOptions& options) {
  ToleranceContext tol = problem.tolerance;
  if (options.tol_rank) tol.rank_rel = *options.tol_rank;
  if (options.tol_cert) tol.cert_abs = *options.tol_cert;
  if (!tol.valid()) {
    throw InvalidInputError("tolerance overrides must be positive and finite");
  }
  return tol;
}

inline const PairSpec& resolve_pair_spec(const ProblemFile& problem, const RunOptions& options) {
  if (options.pair_override) {
    if (options.pair_override->kind == PairSpec::Kind::explicit_forms &&
        !options.pair_override->s1) {
      // --pair explicit defers to the forms in the problem file.
      if (problem.pair.kind != PairSpec::Kind::explicit_forms) {
        throw InvalidInputError("--pair explicit requires an explicit pair in the problem file");
      }
      return problem.pair;
    }
    return *options.pair_override;
  }
  return problem.pair;
}

inline const char* pair_kind_name(PairSpec::Kind kind) {
  switch (kind) {
    case PairSpec::Kind::identity: return "identity";
    case PairSpec::Kind::polar: return "polar";
    case PairSpec::Kind::explicit_forms: return "explicit";
  }
  return "unknown";
}

inline DominatingPair resolve_pair(const PairSpec& spec, const FormMatrix& t,
                                   const ToleranceContext& tol) {
  switch (spec.kind) {
    case PairSpec::Kind::identity:
      return identity_pair(t, tol);
    case PairSpec::Kind::polar:
      return polar_pair(t, tol);
    case PairSpec::Kind::explicit_forms:
      return checked_pair(NonnegativeForm(*spec.s1, tol), NonnegativeForm(*spec.s2, tol), t, tol);
  }
  throw InvalidInputError("unknown pair kind");
}

inline Json report_header(const std::string& subcommand, Index dimension) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["subcommand"] = subcommand;
  j["convention"] = kConventionNote;
  j["dimension"] = dimension;
  return j;
}

inline Json pair_to_json(const PairSpec::Kind kind, const DominatingPair& pair) {
  Json j;
  j["kind"] = pair_kind_name(kind);
  j["s1"] = matrix_to_json(pair.s1.matrix());
  j["s2"] = matrix_to_json(pair.s2.matrix());
  j["contraction_norm"] = pair.contraction_norm;
  return j;
}

inline Json decomposition_to_json(const LeftDecomposition& dec, const FormMatrix& t) {
  Json j;
  j["t_lr"] = matrix_to_json(dec.t_lr.matrix());
  j["t_ls"] = matrix_to_json(dec.t_ls.matrix());
  j["sigma_a"] = matrix_to_json(dec.sigma_a.matrix());
  j["sigma_s"] = matrix_to_json(dec.sigma_s.matrix());
  Json certificates;
  certificates["additivity_residual"] =
      max_abs(dec.t_lr.matrix() + dec.t_ls.matrix() - t.matrix());
  certificates["ker_w_dim"] = dec.ker_w.count();
  certificates["ker_t_lr_dim"] = dec.ker_lr.count();
  certificates["ker_t_ls_dim"] = dec.ker_ls.count();
  certificates["ker_w"] = basis_to_json(dec.ker_w);
  certificates["ker_t_lr"] = basis_to_json(dec.ker_lr);
  certificates["ker_t_ls"] = basis_to_json(dec.ker_ls);
  certificates["bound_norm_regular"] = dec.bound_norm_regular;
  certificates["bound_norm_singular"] = dec.bound_norm_singular;
  j["certificates"] = std::move(certificates);
  return j;
}

inline LeftDecomposition decompose_for(const ProblemFile& problem, const RunOptions& options,
                                       const NonnegativeForm& w, const ToleranceContext& tol,
                                       PairSpec::Kind* kind_out) {
  const PairSpec& spec = resolve_pair_spec(problem, options);
  if (kind_out != nullptr) *kind_out = spec.kind;
  if (spec.kind == PairSpec::Kind::identity) {
    return left_decompose_default(problem.form_t, w, tol);
  }
  return left_decompose(problem.form_t, w, resolve_pair(spec, problem.form_t, tol), tol);
}

}  // namespace detail

inline RunResult run_subcommand(const std::string& name, const ProblemFile& problem,
                                const RunOptions& options = {}) {
  const ToleranceContext tol = detail::resolve_tolerance(problem, options);
  const std::uint64_t seed = options.seed.value_or(problem.seed.value_or(kDefaultSeed));
  const int samples = options.samples.value_or(problem.samples.value_or(kDefaultSamples));
  std::ostringstream summary;

  RunResult result;
  if (name == "classify") {
    NonnegativeForm w(problem.form_w, tol);
    LeftClassification cls = classify_left(problem.form_t, w, tol);
    Json j = detail::report_header(name, problem.dimension);
    j["left_regular"] = cls.left_regular;
    j["left_strongly_singular"] = cls.left_strongly_singular;
    j["left_bounded"] = cls.left_bounded;
    j["minimal_C"] = cls.minimal_c ? Json(*cls.minimal_c) : Json(nullptr);
    summary << "classify: left_regular=" << (cls.left_regular ? "true" : "false")
            << " left_strongly_singular=" << (cls.left_strongly_singular ? "true" : "false");
    if (cls.minimal_c) summary << " minimal_C=" << *cls.minimal_c;
    result.report = std::move(j);
  } else if (name == "decompose" || name == "verify") {
    NonnegativeForm w(problem.form_w, tol);
    PairSpec::Kind kind = PairSpec::Kind::identity;
    LeftDecomposition dec = detail::decompose_for(problem, options, w, tol, &kind);
    Json j = detail::report_header(name, problem.dimension);
    j["pair"] = detail::pair_to_json(kind, dec.pair);
    j.update(detail::decomposition_to_json(dec, problem.form_t));
    summary << name << ": pair=" << detail::pair_kind_name(kind)
            << " dim(ker w)=" << dec.ker_w.count()
            << " bound_norms=(" << dec.bound_norm_regular << ", " << dec.bound_norm_singular
            << ")";
    if (name == "verify") {
      VerificationReport report = full_report(problem.form_t, w, dec, seed, tol, samples);
      report.checks.push_back(parallel_sum_limit_check(dec.pair.s1, w, dec.sigma_a, tol));
      j["verification"] = report_to_json(report);
      for (const CheckResult& check : report.checks) {
        summary << "\n  [" << (check.passed ? (check.inconclusive ? "SKIP" : "PASS") : "FAIL")
                << "] " << check.name << " worst_residual=" << check.worst_residual
                << " tolerance=" << check.tolerance;
      }
      if (!report.all_passed()) {
        result.exit_code = kExitVerificationFailure;
      }
    }
    result.report = std::move(j);
  } else if (name == "psd-decompose") {
    NonnegativeForm s(problem.form_t, tol);
    NonnegativeForm w(problem.form_w, tol);
    PsdDecomposition dec = lebesgue_decompose_psd(s, w, tol);
    Json j = detail::report_header(name, problem.dimension);
    j["s_a"] = matrix_to_json(dec.s_a.matrix());
    j["s_s"] = matrix_to_json(dec.s_s.matrix());
    Json checks;
    checks["s_a_abs_continuous"] = is_abs_continuous(dec.s_a, w, tol);
    checks["s_s_singular"] = is_singular(dec.s_s, w, tol);
    checks["parts_mutually_singular"] = is_singular(dec.s_a, dec.s_s, tol);
    checks["additivity_residual"] =
        max_abs(dec.s_a.matrix() + dec.s_s.matrix() - s.matrix());
    j["checks"] = std::move(checks);
    summary << "psd-decompose: |s_a|=" << operator_norm(dec.s_a.matrix())
            << " |s_s|=" << operator_norm(dec.s_s.matrix());
    result.report = std::move(j);
  } else if (name == "check-pair") {
    const PairSpec& spec = detail::resolve_pair_spec(problem, options);
    Json j = detail::report_header(name, problem.dimension);
    if (spec.kind == PairSpec::Kind::explicit_forms) {
      NonnegativeForm s1(*spec.s1, tol);
      NonnegativeForm s2(*spec.s2, tol);
      PairCheck check = pair_check(s1, s2, problem.form_t, tol);
      j["ok"] = check.ok;
      j["contraction_norm"] = check.contraction_norm;
      summary << "check-pair: ok=" << (check.ok ? "true" : "false")
              << " contraction_norm=" << check.contraction_norm;
    } else {
      DominatingPair pair = detail::resolve_pair(spec, problem.form_t, tol);
      j["ok"] = true;
      j["contraction_norm"] = pair.contraction_norm;
      j["pair"] = detail::pair_to_json(spec.kind, pair);
      summary << "check-pair: preset=" << detail::pair_kind_name(spec.kind)
              << " ok=true contraction_norm=" << pair.contraction_norm;
    }
    result.report = std::move(j);
  } else if (name == "witness") {
    if (!problem.vector_f) {
      throw InvalidInputError("witness: problem file needs a vector_f field");
    }
    NonnegativeForm w(problem.form_w, tol);
    WitnessSplit split = singular_witness(problem.form_t, w, *problem.vector_f, tol);
    Json j = detail::report_header(name, problem.dimension);
    j["u"] = vector_to_json(split.u);
    j["v"] = vector_to_json(split.v);
    j["residual"] = (split.u + split.v - *problem.vector_f).norm();
    summary << "witness: |u|=" << split.u.norm() << " |v|=" << split.v.norm();
    result.report = std::move(j);
  } else if (name == "measure") {
    if (!problem.measure) {
      throw InvalidInputError("measure: problem file needs a measure block");
    }
    const AtomicMeasure& mu = problem.measure->mu;
    const AtomicMeasure& nu = problem.measure->nu;
    MeasureDecomposition dec = lebesgue_decompose_measure(mu, nu);
    Json j = detail::report_header(name, problem.dimension);
    j["mu_a"] = measure_to_json(dec.mu_a);
    j["mu_s"] = measure_to_json(dec.mu_s);
    Json rn;
    for (const auto& [atom, value] : radon_nikodym(mu, nu)) {
      rn[atom] = complex_to_json(value);
    }
    j["radon_nikodym"] = std::move(rn);
    j["total_variation"] = measure_to_json(total_variation(mu));
    Json correspondence;
    const bool atomwise_ac = measure_abs_continuous(mu, nu);
    correspondence["mu_abs_continuous"] = atomwise_ac;
    correspondence["mu_singular"] = measure_singular(mu, nu);
    NonnegativeForm w_form(induced_form(nu), tol);
    correspondence["induced_left_regular"] =
        classify_left(induced_form(mu), w_form, tol).left_regular;
    j["correspondence"] = std::move(correspondence);
    summary << "measure: mu_a support "
            << (atomwise_ac ? "covers mu" : "is a proper part of mu");
    result.report = std::move(j);
  } else {
    throw InvalidInputError("unknown subcommand \"" + name + "\"");
  }
  result.summary = summary.str();
  return result;
}

}  // namespace lebforms
