// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The waveletn Authors

#include "waveletn/tools/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "waveletn/waveletn.hpp"
#include "waveletn/tools/io.hpp"

namespace waveletn::cli {

namespace fs = std::filesystem;
using io::json;

ExitCode exit_code_for(Errc code) {
  switch (code) {
    case Errc::Parse:
      return ParseFailed;
    case Errc::Diverging:
    case Errc::NonConvergent:
    case Errc::Inconsistent:
    case Errc::NotRealValued:
    case Errc::QuadratureUnstable:
      return ValidationFailed;
    default:
      return PreconditionFailed;
  }
}

namespace {

struct Context {
  std::ostream& out;
  double tol = kUnitarityTol;
};

double tolerance_from_env() {
  const char* raw = std::getenv("WAVELETN_TOL");
  if (raw == nullptr || *raw == '\0') return kUnitarityTol;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !std::isfinite(v) || v <= 0.0)
    throw Error(Errc::Parse, "WAVELETN_TOL must be a positive number");
  return v;
}

void require_range(long long v, long long lo, long long hi, const char* name) {
  if (v < lo || v > hi)
    throw Error(Errc::Precondition, std::string(name) + " must lie in " + std::to_string(lo) +
                                        ".." + std::to_string(hi));
}

void emit(const Context& ctx, const std::string& output, const std::string& content) {
  if (output.empty())
    ctx.out << content;
  else
    io::write_atomic(output, content);
}

json unit_root_json(const UnitRoot& a) { return json::array({a.num, a.den}); }

// validate ------------------------------------------------------------------

struct ValidateArgs {
  std::string bank, output;
};

int cmd_validate(const Context& ctx, const ValidateArgs& a) {
  const FilterBank bank = io::to_bank(io::read_filters(a.bank));
  const Eigen::MatrixXd res = check_unitarity(bank);
  json rows = json::array();
  for (Eigen::Index i = 0; i < res.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < res.cols(); ++j) row.push_back(res(i, j));
    rows.push_back(row);
  }
  const double worst = res.maxCoeff();
  const bool ok = worst <= ctx.tol;
  emit(ctx, a.output,
       io::canonical_dump(json{{"N", bank.N()},
                               {"residuals", rows},
                               {"max_residual", worst},
                               {"tolerance", ctx.tol},
                               {"unitary", ok}}));
  return ok ? Ok : ValidationFailed;
}

// complete ------------------------------------------------------------------

struct CompleteArgs {
  std::string input, output, method = "auto";
};

int cmd_complete(const Context& ctx, const CompleteArgs& a) {
  const io::FilterFile file = io::read_filters(a.input);
  const CompletionMethod method = parse_completion_method(a.method);
  const FilterBank bank = complete(file.filters.front(), file.N, method);
  emit(ctx, a.output, io::canonical_dump(io::filters_to_json(bank.N(), bank.filters())));
  return Ok;
}

// cascade -------------------------------------------------------------------

struct CascadeArgs {
  std::string input, output, out_dir = ".";
  int level = 8, iters = 60, depth = 24;
};

int cmd_cascade(const Context& ctx, const CascadeArgs& a) {
  require_range(a.level, 1, 14, "level L");
  require_range(a.iters, 1, 10000, "iterations");
  require_range(a.depth, 1, 64, "product depth K");
  const io::FilterFile file = io::read_filters(a.input);
  const LaurentPoly& m0 = file.filters.front();
  const CascadeResult cr = cascade_iterate(m0, file.N, a.level, a.iters);
  const std::vector<double> t = default_t_grid();
  const SpectralSamples phi_hat = infinite_product(m0, file.N, t, a.depth);

  fs::create_directories(a.out_dir);
  json files = json::array();
  auto write_csv = [&](const std::string& name, const std::function<void(std::ostream&)>& body) {
    std::ostringstream os;
    body(os);
    const fs::path path = fs::path(a.out_dir) / name;
    io::write_atomic(path, os.str());
    files.push_back(path.string());
  };
  write_csv("phi.csv", [&](std::ostream& os) { write_grid_csv(os, cr.grid); });
  write_csv("phi_hat.csv", [&](std::ostream& os) { write_spectrum_csv(os, phi_hat); });
  if (static_cast<int>(file.filters.size()) == file.N) {
    const FilterBank bank = io::to_bank(file);
    const auto spectra = mother_spectra(bank, t, a.depth);
    for (std::size_t k = 0; k < spectra.size(); ++k)
      write_csv("psi_hat_" + std::to_string(k + 1) + ".csv",
                [&](std::ostream& os) { write_spectrum_csv(os, spectra[k]); });
  }

  const LaurentPoly per_poly = per(cr.grid);
  const FrameBounds fb = frame_bounds(per_poly);
  json report{{"N", file.N},
              {"level", a.level},
              {"iterations", cr.iterations},
              {"fixed_point_residual", cr.residual},
              {"refinement_residual", refinement_residual(cr.grid, m0)},
              {"l2_norm2", cr.grid.l2_norm2()},
              {"integral", io::complex_to_json(cr.grid.integral())},
              {"per", io::coeffs_to_json(per_poly)},
              {"frame_bounds",
               {{"lower", fb.lower}, {"upper", fb.upper}, {"invertible", fb.invertible}}},
              {"product_tail_bound", phi_hat.tail_bound},
              {"files", files}};
  try {
    const FatherVerdict fv = father_criterion(m0, file.N);
    report["father_filter"] = fv.is_father;
    report["father_reason"] = fv.reason;
  } catch (const Error& e) {
    report["father_filter"] = false;
    report["father_reason"] = e.what();
  }
  emit(ctx, a.output, io::canonical_dump(report));
  return Ok;
}

// spectrum ------------------------------------------------------------------

struct SpectrumArgs {
  std::string input, output;
  int window = -1, cesaro = 512, period = 4;
};

int cmd_spectrum(const Context& ctx, const SpectrumArgs& a) {
  const io::FilterFile file = io::read_filters(a.input);
  const LaurentPoly& m0 = file.filters.front();
  const int d = a.window < 0 ? transfer_window(m0, file.N) : a.window;
  require_range(d, 0, 256, "window d");
  require_range(a.cesaro, 0, 1'000'000, "Cesaro length M");
  require_range(a.period, 1, 12, "cycle period K");
  const TransferMatrix tm = build_transfer(m0, file.N, d);

  json ev = json::array();
  for (cplx v : eigenvalues(tm)) ev.push_back(io::complex_to_json(v));
  const FixedSpace fsp = fixed_space(tm);
  json basis = json::array();
  for (const auto& b : fsp.basis) basis.push_back(io::coeffs_to_json(b));
  json cycles = json::array();
  for (const auto& c : cohen_cycles(m0, file.N, a.period)) {
    json pts = json::array();
    for (const auto& p : c) pts.push_back(unit_root_json(p));
    cycles.push_back(json{{"points", pts}, {"description", describe(c)}});
  }

  json report{{"N", file.N},
              {"window", d},
              {"isometry_residual", tm.isometry_residual},
              {"eigenvalues", ev},
              {"fixed_space", {{"dim", fsp.dim}, {"basis", basis}}},
              {"verdict", std::string(to_string(fsp.verdict))},
              {"cycles", cycles}};
  try {
    const MeasureD md = measure_d(tm, a.cesaro);
    LaurentPoly moments{LaurentPoly::map_type(md.moments.begin(), md.moments.end())};
    json atoms = json::array();
    for (const auto& at : md.atoms)
      atoms.push_back(json{{"point", unit_root_json(at.point)}, {"weight", at.weight}});
    report["measure"] = json{{"moments", io::coeffs_to_json(moments)},
                             {"atoms", atoms},
                             {"fit_residual", md.fit_residual},
                             {"tail_variation", md.tail_variation}};
  } catch (const Error& e) {
    if (e.code() != Errc::NonConvergent) throw;
    report["measure"] = json{{"error", e.what()}};
  }
  emit(ctx, a.output, io::canonical_dump(report));
  return Ok;
}

// wold ----------------------------------------------------------------------

struct WoldArgs {
  std::string input, output, method = "fast";
  int window = -1;
};

int cmd_wold(const Context& ctx, const WoldArgs& a) {
  const io::FilterFile file = io::read_filters(a.input);
  WoldMethod method;
  if (a.method == "fast")
    method = WoldMethod::Fast;
  else if (a.method == "matrix")
    method = WoldMethod::Matrix;
  else
    throw Error(Errc::Parse, "unknown Wold method \"" + a.method + "\"");

  WoldReport rep;
  int d = a.window;
  if (file.filters.size() == 1) {
    if (d < 0) d = wold_window(file.filters.front(), file.N);
    require_range(d, 0, 256, "window d");
    rep = wold_scalar(file.filters.front(), file.N, d, method);
  } else {
    const FilterBank bank = io::to_bank(file);
    if (d < 0) d = wold_window(bank);
    require_range(d, 0, 256, "window d");
    rep = wold_vector(bank, d);
  }
  json pairs = json::array();
  for (const auto& ep : rep.eigenpairs)
    pairs.push_back(json{{"lambda", io::complex_to_json(ep.lambda)},
                         {"xi", io::coeffs_to_json(ep.xi)},
                         {"residual", ep.residual}});
  json report{{"kind", std::string(to_string(rep.kind))},
              {"dim", rep.dim},
              {"window", d},
              {"eigenpairs", pairs}};
  if (!rep.note.empty()) report["note"] = rep.note;
  emit(ctx, a.output, io::canonical_dump(report));
  return Ok;
}

// analyze / synthesize ------------------------------------------------------

struct AnalyzeArgs {
  std::string bank, signal, output;
  int levels = 1;
};

int cmd_analyze(const Context& ctx, const AnalyzeArgs& a) {
  require_range(a.levels, 1, 16, "levels J");
  const FilterBank bank = io::to_bank(io::read_filters(a.bank));
  const LaurentPoly f = io::read_signal_csv(a.signal);
  const WaveletCoeffs c = analyze(bank, f, a.levels);
  const double err = distance(synthesize(bank, c), f);
  json dumpj = io::wavelet_coeffs_to_json(c);
  dumpj["reconstruction_error"] = err;
  emit(ctx, a.output, io::canonical_dump(dumpj));
  return err <= ctx.tol ? Ok : ValidationFailed;
}

struct SynthesizeArgs {
  std::string bank, coeffs, output, reference;
};

int cmd_synthesize(const Context& ctx, const SynthesizeArgs& a) {
  const FilterBank bank = io::to_bank(io::read_filters(a.bank));
  const WaveletCoeffs c = io::parse_wavelet_coeffs(io::read_json(a.coeffs));
  if (c.N != bank.N()) throw Error(Errc::Precondition, "coefficients and bank disagree on N");
  const LaurentPoly f = synthesize(bank, c);
  emit(ctx, a.output, io::signal_csv(f));
  if (a.reference.empty()) return Ok;
  return distance(f, io::read_signal_csv(a.reference)) <= ctx.tol ? Ok : ValidationFailed;
}

// classify ------------------------------------------------------------------

struct ClassifyArgs {
  std::string first, second, output;
};

int cmd_classify(const Context& ctx, const ClassifyArgs& a) {
  const CylinderCocycle u1 = io::read_cocycle(a.first);
  const bool pair = !a.second.empty();
  CoboundResult r;
  int order = u1.p();
  if (pair) {
    const CylinderCocycle u2 = io::read_cocycle(a.second);
    if (u2.N() != u1.N()) throw Error(Errc::Precondition, "cocycles must share N");
    order = std::max(u1.p(), u2.p());
    r = equivalent(u1, u2);
  } else {
    r = cobound(u1);
  }
  std::string verdict;
  if (pair)
    verdict = r.coboundary ? "Equivalent" : "Disjoint";
  else
    verdict = r.coboundary ? "Coboundary" : "NotCoboundary";
  json report{{"N", u1.N()}, {"p", order}, {"verdict", verdict}};
  if (r.coboundary) {
    report["delta"] = io::cocycle_table_to_json(u1.N(), order, r.delta);
  } else {
    report["witness"] = r.witness;
    report["product"] = io::complex_to_json(r.product);
  }
  emit(ctx, a.output, io::canonical_dump(report));
  return Ok;
}

// compare-scales ------------------------------------------------------------

struct CompareArgs {
  std::string bank2, other, output;
  int level = 10, n_max = 16;
};

int cmd_compare(const Context& ctx, const CompareArgs& a) {
  require_range(a.level, 1, 14, "level L");
  require_range(a.n_max, 0, 40, "n_max");
  const io::FilterFile f2 = io::read_filters(a.bank2);
  if (f2.N != 2 || f2.filters.size() != 2)
    throw Error(Errc::Precondition, "the first file must hold a scale-2 bank (m0, m1)");
  const io::FilterFile fn = io::read_filters(a.other);
  const double residual = commute_check(f2.filters[0], fn.filters.front(), fn.N);
  const ScaleDecomposition sd = decompose(f2.filters[0], f2.filters[1], fn.N, a.level, a.n_max);
  json C = json::array();
  for (const auto& c : sd.C) C.push_back(io::coeffs_to_json(c));
  json report{{"N", fn.N},
              {"commute_residual", residual},
              {"decomposition",
               {{"A", io::coeffs_to_json(sd.A)},
                {"B", io::coeffs_to_json(sd.B)},
                {"C", C},
                {"partial_sums", sd.partial_sums},
                {"parseval_defect", sd.parseval_defect},
                {"consistency_residual", sd.consistency_residual},
                {"energy_residual", sd.energy_residual}}}};
  emit(ctx, a.output, io::canonical_dump(report));
  return Ok;
}

// partition -----------------------------------------------------------------

struct PartitionArgs {
  std::string input, output, angle;
  int depth = 0;
};

Rational parse_angle(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t pos = 0;
    const long long num = std::stoll(s.substr(0, slash), &pos);
    if (pos != (slash == std::string::npos ? s.size() : slash)) throw std::invalid_argument(s);
    long long den = 1;
    if (slash != std::string::npos) {
      const std::string tail = s.substr(slash + 1);
      den = std::stoll(tail, &pos);
      if (pos != tail.size() || den == 0) throw std::invalid_argument(s);
    }
    return Rational(num, den);
  } catch (const std::logic_error&) {
    throw Error(Errc::Parse, "angle must be written num/den (a fraction of a turn)");
  }
}

int cmd_partition(const Context& ctx, const PartitionArgs& a) {
  require_range(a.depth, 0, 4096, "depth");
  const ArcPartition part = io::read_partition(a.input);
  const PartitionCheck check = validate_partition(part);
  json report{{"N", part.N}, {"valid", check.valid}};
  if (!check.valid) report["witness"] = check.witness;
  if (check.valid && !a.angle.empty()) {
    const Coding code = coding(part, parse_angle(a.angle), a.depth);
    report["coding"] = json{{"word", code.word}, {"boundary_hits", code.boundary_hits}};
  }
  emit(ctx, a.output, io::canonical_dump(report));
  return check.valid ? Ok : ValidationFailed;
}

void report_error(std::ostream& err, const std::string& code, const std::string& message,
                  int exit_code) {
  err << io::canonical_dump(json{{"error", code}, {"message", message}, {"exit_code", exit_code}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scale-N wavelet filter banks as Cuntz algebra representations", "waveletn"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Unitarity residuals of a filter bank");
  validate->add_option("bank", va.bank, "Filter bank JSON")->required();
  validate->add_option("-o,--output", va.output, "Write the report here");

  CompleteArgs ca;
  auto* completion = app.add_subcommand("complete", "Complete a low-pass row to a filter bank");
  completion->add_option("m0", ca.input, "Filter JSON whose first filter is m0")->required();
  completion->add_option("--method", ca.method, "auto, flip2, householder_const, quaternion, cayley");
  completion->add_option("-o,--output", ca.output, "Write the bank here");

  CascadeArgs cs;
  auto* cascade = app.add_subcommand("cascade", "Scaling function grid, spectra and frame bounds");
  cascade->add_option("bank", cs.input, "Filter bank (or m0) JSON")->required();
  cascade->add_option("-L,--level", cs.level, "Grid level L (step N^-L)");
  cascade->add_option("--iters", cs.iters, "Maximum cascade iterations");
  cascade->add_option("-K,--depth", cs.depth, "Infinite product depth");
  cascade->add_option("--out-dir", cs.out_dir, "Directory for the CSV files");
  cascade->add_option("-o,--output", cs.output, "Write the report here");

  SpectrumArgs sp;
  auto* spectrum = app.add_subcommand("spectrum", "Transfer operator spectrum and measure D");
  spectrum->add_option("bank", sp.input, "Filter bank (or m0) JSON")->required();
  spectrum->add_option("-d,--window", sp.window, "Monomial window z^-d..z^d");
  spectrum->add_option("-M,--cesaro", sp.cesaro, "Burn-in length for the Cesaro averages");
  spectrum->add_option("-K,--period", sp.period, "Largest cycle period searched");
  spectrum->add_option("-o,--output", sp.output, "Write the report here");

  WoldArgs wa;
  auto* wold = app.add_subcommand("wold", "Wold decomposition of S_m or of the operator T");
  wold->add_option("input", wa.input, "Single filter m or a full bank")->required();
  wold->add_option("-d,--window", wa.window, "Monomial window z^-d..z^d");
  wold->add_option("--method", wa.method, "fast or matrix (single filter only)");
  wold->add_option("-o,--output", wa.output, "Write the report here");

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze", "Wavelet coefficients of a V0 signal");
  analyze_cmd->add_option("bank", an.bank, "Filter bank JSON")->required();
  analyze_cmd->add_option("signal", an.signal, "Signal CSV (k,re,im)")->required();
  analyze_cmd->add_option("-J,--levels", an.levels, "Number of levels");
  analyze_cmd->add_option("-o,--output", an.output, "Write the coefficients here");

  SynthesizeArgs sy;
  auto* synth = app.add_subcommand("synthesize", "Rebuild a signal from wavelet coefficients");
  synth->add_option("bank", sy.bank, "Filter bank JSON")->required();
  synth->add_option("coeffs", sy.coeffs, "Coefficient JSON from analyze")->required();
  synth->add_option("--reference", sy.reference, "Compare against this signal CSV");
  synth->add_option("-o,--output", sy.output, "Write the signal CSV here");

  ClassifyArgs cl;
  auto* classify = app.add_subcommand("classify", "Coboundary or equivalence test for cocycles");
  classify->add_option("u1", cl.first, "Cocycle JSON")->required();
  classify->add_option("u2", cl.second, "Second cocycle JSON");
  classify->add_option("-o,--output", cl.output, "Write the report here");

  CompareArgs cmp;
  auto* compare = app.add_subcommand("compare-scales", "Scale-2 versus scale-N father functions");
  compare->add_option("bank2", cmp.bank2, "Scale-2 bank JSON")->required();
  compare->add_option("other", cmp.other, "Scale-N m0 or bank JSON")->required();
  compare->add_option("-L,--level", cmp.level, "Grid level for the quadrature");
  compare->add_option("--nmax", cmp.n_max, "Number of C_n terms");
  compare->add_option("-o,--output", cmp.output, "Write the report here");

  PartitionArgs pa;
  auto* partition = app.add_subcommand("partition", "Validate an arc partition and code an angle");
  partition->add_option("partition", pa.input, "Partition JSON")->required();
  partition->add_option("--angle", pa.angle, "Angle as num/den of a full turn");
  partition->add_option("--depth", pa.depth, "Number of coding symbols");
  partition->add_option("-o,--output", pa.output, "Write the report here");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    report_error(err, "Parse", e.what(), ParseFailed);
    return ParseFailed;
  }

  try {
    Context ctx{out, tolerance_from_env()};
    if (*validate) return cmd_validate(ctx, va);
    if (*completion) return cmd_complete(ctx, ca);
    if (*cascade) return cmd_cascade(ctx, cs);
    if (*spectrum) return cmd_spectrum(ctx, sp);
    if (*wold) return cmd_wold(ctx, wa);
    if (*analyze_cmd) return cmd_analyze(ctx, an);
    if (*synth) return cmd_synthesize(ctx, sy);
    if (*classify) return cmd_classify(ctx, cl);
    if (*compare) return cmd_compare(ctx, cmp);
    if (*partition) return cmd_partition(ctx, pa);
  } catch (const Error& e) {
    const ExitCode code = exit_code_for(e.code());
    report_error(err, std::string(to_string(e.code())), e.what(), code);
    return code;
  } catch (const std::exception& e) {
    report_error(err, "Internal", e.what(), ValidationFailed);
    return ValidationFailed;
  }
  return ParseFailed;
}

}  // namespace waveletn::cli
