// Command-line surface for the annulus operator toolkit: classification,
// decompositions, Brehmer positivity and model generators, all speaking a
// small JSON matrix format: {"dim": N, "data": [[re, im], ...]} row-major.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "annulus/brehmer.hpp"
#include "annulus/classify.hpp"
#include "annulus/decompose.hpp"
#include "annulus/family.hpp"
#include "annulus/linops.hpp"
#include "annulus/models.hpp"

using json = nlohmann::ordered_json;
using namespace annulus;

namespace {

struct CommonOpts {
  double r = 0.0;
  double tol_rank, tol_id, tol_spec;
  bool strict = false;
  std::uint64_t seed = 0;
  std::string out;

  CommonOpts() {
    AnnulusParams defaults{0.5};
    const char* profile = std::getenv("ANNULUS_OPS_TOLERANCE_PROFILE");
    if (profile && std::string(profile) == "strict")
      defaults = AnnulusParams::strict_profile(0.5);
    else if (profile && std::string(profile) != "default")
      throw ParseError("ANNULUS_OPS_TOLERANCE_PROFILE must be 'default' or "
                       "'strict'");
    tol_rank = defaults.tol_rank;
    tol_id = defaults.tol_id;
    tol_spec = defaults.tol_spec;
  }

  AnnulusParams params() const {
    AnnulusParams p{r, tol_rank, tol_id, tol_spec};
    p.validate();
    return p;
  }

  void attach(CLI::App* cmd, bool need_r = true) {
    auto* ropt = cmd->add_option("--r", r, "annulus modulus in (0,1)");
    if (need_r) ropt->required();
    cmd->add_option("--tol-rank", tol_rank, "relative singular value cutoff");
    cmd->add_option("--tol-id", tol_id, "identity residual cutoff");
    cmd->add_option("--tol-spec", tol_spec, "spectral membership slack");
    cmd->add_option("--seed", seed, "seed for generated randomness");
    cmd->add_option("--out", out, "write the report/files here");
    cmd->add_flag("--strict", strict,
                  "nonzero exit when a verdict check fails");
  }
};

json complex_rowmajor(const ComplexMatrix& M) {
  json data = json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i)
    for (Eigen::Index j = 0; j < M.cols(); ++j)
      data.push_back({M(i, j).real(), M(i, j).imag()});
  return data;
}

json matrix_file_json(const ComplexMatrix& M) {
  return json{{"dim", M.rows()}, {"data", complex_rowmajor(M)}};
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.contains("dim") || !j.contains("data"))
    throw ParseError(path + ": missing 'dim' or 'data'");
  const Eigen::Index d = j["dim"].get<Eigen::Index>();
  const auto& data = j["data"];
  if (d < 1 || !data.is_array() ||
      data.size() != static_cast<std::size_t>(d * d))
    throw ParseError(path + ": data length must equal dim^2");
  ComplexMatrix M(d, d);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j2 = 0; j2 < d; ++j2, ++idx) {
      const auto& cell = data[idx];
      if (!cell.is_array() || cell.size() != 2)
        throw ParseError(path + ": entries must be [re, im] pairs");
      M(i, j2) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  if (!M.allFinite()) throw ParseError(path + ": non-finite entries");
  return M;
}

void write_json(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  out << j.dump(2) << "\n";
}

json tolerances_json(const AnnulusParams& p) {
  return json{{"tol_rank", p.tol_rank},
              {"tol_id", p.tol_id},
              {"tol_spec", p.tol_spec}};
}

json subspace_json(const Subspace& S) {
  return json{{"dim", S.dim()},
              {"ambient_dim", S.ambient()},
              {"basis", complex_rowmajor(S.basis)}};
}

int run_classify(const CommonOpts& opts, const std::vector<std::string>& files) {
  const AnnulusParams p = opts.params();
  json rep{{"command", "classify"}, {"r", p.r},
           {"tolerances", tolerances_json(p)}};
  json matrices = json::array();
  for (const auto& path : files) {
    const ComplexMatrix M = read_matrix_file(path);
    json entry{{"file", path}, {"dim", M.rows()}};
    entry["contraction"] = is_contraction(M, p.tol_id);
    entry["normal"] = is_normal(M, p.tol_id);
    entry["ar_unitary"] = is_ar_unitary(M, p);
    try {
      entry["ar_isometry"] = is_ar_isometry(M, p);
    } catch (const SingularOperator&) {
      entry["ar_isometry"] = nullptr;
    }
    const bool cand = is_ar_contraction_candidate(M, p);
    entry["candidate"] = cand;
    if (cand)
      entry["atom"] = to_string(classify_atom(M, p));
    else
      entry["atom"] = nullptr;
    if (entry["ar_unitary"].get<bool>()) {
      try {
        entry["unitary_type"] = to_string(classify_unitary_type(M, p));
      } catch (const MixedType&) {
        entry["unitary_type"] = "mixed";
      }
    } else {
      entry["unitary_type"] = nullptr;
    }
    matrices.push_back(std::move(entry));
  }
  rep["matrices"] = std::move(matrices);
  write_json(rep, opts.out);
  return 0;
}

json split_report_json(const SplitReport& s) {
  json parts = json::array();
  for (const auto& part : s.parts)
    parts.push_back(json{{"label", part.label},
                         {"space", subspace_json(part.space)},
                         {"residual", part.residual}});
  return parts;
}

int run_decompose(const CommonOpts& opts, const std::string& kind,
                  const std::string& file) {
  const AnnulusParams p = opts.params();
  const ComplexMatrix M = read_matrix_file(file);
  SplitReport s;
  if (kind == "unitary") s = split_ar_unitary(M, p);
  else if (kind == "wold") s = wold_ar_isometry(M, p);
  else if (kind == "canonical") s = canonical_ar_contraction(M, p);
  else if (kind == "levan") s = levan_split(M, p);
  else throw ParseError("unknown decompose kind: " + kind);
  json rep{{"command", "decompose"}, {"kind", kind}, {"file", file},
           {"r", p.r}, {"tolerances", tolerances_json(p)},
           {"parts", split_report_json(s)}};
  write_json(rep, opts.out);
  return 0;
}

json family_report_json(const FamilyReport& f) {
  json rep;
  json parts = json::array();
  for (const auto& part : f.parts)
    parts.push_back(json{{"assignment", part.assignment.labels},
                         {"space", subspace_json(part.space)},
                         {"residuals", part.residuals}});
  rep["parts"] = std::move(parts);
  if (f.remainder) {
    rep["remainder"] = json{
        {"tag", f.remainder->tag},
        {"space", subspace_json(f.remainder->space)},
        {"spot_check_dims", f.remainder->spot_check_dims}};
  }
  if (!f.notes.empty()) rep["notes"] = f.notes;
  return rep;
}

int run_family(const CommonOpts& opts, const std::string& kind,
               const std::vector<std::string>& files) {
  const AnnulusParams p = opts.params();
  std::vector<ComplexMatrix> ops;
  ops.reserve(files.size());
  for (const auto& f : files) ops.push_back(read_matrix_file(f));
  FamilyReport fam;
  if (kind == "canonical") fam = canonical_family(ops, p);
  else if (kind == "wold") fam = wold_family(ops, p);
  else if (kind == "unitary") fam = unitary_family(ops, p);
  else if (kind == "levan") fam = levan_family(ops, p);
  else if (kind == "burdak") fam = burdak_family(ops, p);
  else throw ParseError("unknown family kind: " + kind);
  json rep{{"command", "family"}, {"kind", kind}, {"files", files},
           {"r", p.r}, {"tolerances", tolerances_json(p)}};
  rep.update(family_report_json(fam));
  write_json(rep, opts.out);
  return 0;
}

int run_brehmer(const CommonOpts& opts, long max_k,
                const std::vector<std::string>& files) {
  const AnnulusParams p = opts.params();
  std::vector<ComplexMatrix> ops;
  for (const auto& f : files) ops.push_back(read_matrix_file(f));
  const BrehmerReport br = check_brehmer(ops, p);
  json rep{{"command", "brehmer"}, {"files", files}, {"r", p.r},
           {"tolerances", tolerances_json(p)}};
  json subsets = json::array();
  for (const auto& e : br.entries)
    subsets.push_back(json{{"members", e.members},
                           {"min_eigenvalue", e.min_eigenvalue}});
  rep["subsets"] = std::move(subsets);
  rep["pass"] = br.pass;

  if (max_k > 0) {
    bool all_isometries = true;
    for (const auto& V : ops) {
      try {
        if (!is_ar_isometry(V, p)) all_isometries = false;
      } catch (const SingularOperator&) {
        all_isometries = false;
      }
    }
    if (all_isometries) {
      json bp = json::array();
      for (const auto& e : br.entries)
        for (long k = 1; k <= max_k; ++k) {
          SubsetMask u{static_cast<int>(ops.size()), e.members};
          MultiIndex mk{std::vector<long>(e.members.size(), k)};
          bp.push_back(json{{"members", e.members}, {"k", k},
                            {"residual", check_bp_identity(ops, u, mk, p)}});
        }
      rep["bp_residuals"] = std::move(bp);
    } else {
      rep["bp_residuals"] = nullptr;
      rep["bp_note"] =
          "tuple components are not all A_r-isometries; identity skipped";
    }
  }
  write_json(rep, opts.out);
  if (opts.strict && !br.pass) return 2;
  return 0;
}

struct GenOpts {
  int N = 3, M = 2;
  double alpha = 0.0;
  std::vector<long> window{-5, 5};
  int dim_u = 2, dim_r = 2;
};

int run_gen(const CommonOpts& opts, const std::string& model,
            const GenOpts& g) {
  const AnnulusParams p = opts.params();
  if (opts.out.empty()) throw ParseError("gen requires --out");
  json meta{{"command", "gen"}, {"model", model}, {"r", p.r},
            {"seed", opts.seed}};
  std::vector<ComplexMatrix> mats;
  if (model == "cyclic") {
    mats.push_back(gen_cyclic_annulus_unitary(g.N, g.M, p));
    meta["N"] = g.N;
    meta["M"] = g.M;
    meta["expected_split_dims"] = {g.N, g.M};
  } else if (model == "hardy") {
    if (g.window.size() != 2) throw ParseError("--window needs two integers");
    HardyShift hs = gen_hardy_shift({g.alpha, p.r, g.window[0], g.window[1]});
    mats.push_back(hs.matrix);
    meta["alpha"] = g.alpha;
    meta["window"] = g.window;
    meta["weights"] = hs.weights;
  } else if (model == "sarason") {
    if (g.window.size() != 2) throw ParseError("--window needs two integers");
    SarasonPair sp = gen_sarason_pair({g.alpha, p.r, g.window[0], g.window[1]});
    mats.push_back(sp.v1);
    mats.push_back(sp.v2);
    meta["alpha"] = g.alpha;
    meta["window"] = g.window;
    meta["weights"] = sp.weights;
    meta["r_squared"] = sp.r_squared;
  } else if (model == "arunitary") {
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    std::vector<Complex> unit, rmod;
    for (int i = 0; i < g.dim_u; ++i) unit.push_back(std::polar(1.0, angle(rng)));
    for (int i = 0; i < g.dim_r; ++i) rmod.push_back(std::polar(p.r, angle(rng)));
    const ComplexMatrix D = gen_ar_unitary(unit, rmod, p);
    const ComplexMatrix Q = haar_unitary(D.rows(), opts.seed + 1);
    mats.push_back(Q * D * Q.adjoint());
    meta["dim_u"] = g.dim_u;
    meta["dim_r"] = g.dim_r;
  } else {
    throw ParseError("unknown gen model: " + model);
  }

  json files = json::array();
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const std::string path = opts.out + ".m" + std::to_string(i) + ".json";
    write_json(matrix_file_json(mats[i]), path);
    files.push_back(path);
  }
  meta["files"] = std::move(files);
  write_json(meta, opts.out + ".meta.json");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    CLI::App app{"operator classification and decomposition over the "
                 "annulus r < |z| < 1"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<std::string> files;
    std::string kind, model;
    long max_k = 0;
    GenOpts gen_opts;

    auto* classify_cmd = app.add_subcommand("classify", "classify operators");
    opts.attach(classify_cmd);
    classify_cmd->add_option("files", files, "matrix files")->required();

    auto* decompose_cmd =
        app.add_subcommand("decompose", "single-operator splits");
    CommonOpts dec_opts;
    dec_opts.attach(decompose_cmd);
    decompose_cmd
        ->add_option("kind", kind, "unitary | wold | canonical | levan")
        ->required();
    decompose_cmd->add_option("files", files, "matrix file")->required();

    auto* family_cmd = app.add_subcommand("family", "joint tuple splits");
    CommonOpts fam_opts;
    fam_opts.attach(family_cmd);
    family_cmd
        ->add_option("kind", kind,
                     "canonical | wold | unitary | levan | burdak")
        ->required();
    family_cmd->add_option("files", files, "matrix files")->required();

    auto* brehmer_cmd =
        app.add_subcommand("brehmer", "positivity and identity checks");
    CommonOpts bre_opts;
    bre_opts.attach(brehmer_cmd);
    brehmer_cmd->add_option("--max-k", max_k, "test the identity up to k");
    brehmer_cmd->add_option("files", files, "matrix files")->required();

    auto* gen_cmd = app.add_subcommand("gen", "write model operators");
    CommonOpts gen_common;
    gen_common.attach(gen_cmd);
    gen_cmd->add_option("model", model,
                        "cyclic | hardy | sarason | arunitary")->required();
    gen_cmd->add_option("--N", gen_opts.N, "unit-circle cyclic order");
    gen_cmd->add_option("--M", gen_opts.M, "r-circle cyclic order");
    gen_cmd->add_option("--alpha", gen_opts.alpha, "Hardy model offset");
    gen_cmd->add_option("--window", gen_opts.window, "index window (two ints)")
        ->expected(2);
    gen_cmd->add_option("--dim-u", gen_opts.dim_u, "unit-circle eigenvalues");
    gen_cmd->add_option("--dim-r", gen_opts.dim_r, "r-circle eigenvalues");

    CLI11_PARSE(app, argc, argv);

    if (classify_cmd->parsed()) return run_classify(opts, files);
    if (decompose_cmd->parsed()) return run_decompose(dec_opts, kind, files.front());
    if (family_cmd->parsed()) return run_family(fam_opts, kind, files);
    if (brehmer_cmd->parsed()) return run_brehmer(bre_opts, max_k, files);
    if (gen_cmd->parsed()) return run_gen(gen_common, model, gen_opts);
    return 1;
  } catch (const Error& e) {
    std::cout << json{{"error", {{"type", e.code()}, {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"type", "InternalError"},
                                 {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    return 1;
  }
}
