// Command-line front end: LR coefficients, cone generation, membership,
// minimization, equality of documents and the sampling harness.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "conespec/catalog.hpp"
#include "conespec/combinatorics.hpp"
#include "conespec/document.hpp"
#include "conespec/harness.hpp"
#include "conespec/lr.hpp"
#include "conespec/polyhedral.hpp"

using namespace conespec;

namespace {

constexpr int kMember = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kNumerics = 3;

struct ConeFlags {
  std::string cone;
  int n = 0, m = 0, p = 0, q = 0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  CLI::Option* q_opt = nullptr;
  std::string method;

  void attach(CLI::App* app) {
    app->add_option("--cone", cone, "horn | lrmn | A | S | T | thompson")->required();
    n_opt = app->add_option("-n", n, "size n (horn, lrmn)");
    m_opt = app->add_option("-m", m, "size m (lrmn)");
    p_opt = app->add_option("-p", p, "block size p (A, S, T, thompson)");
    q_opt = app->add_option("-q", q, "block size q (A, S, T)");
    app->add_option("--method", method, "fflp | embed (A); direct | pullback (S, T)");
  }

  ConeRequest request() const {
    ConeRequest r;
    r.kind = parse_cone_kind(cone);
    if (n_opt->count()) r.params["n"] = n;
    if (m_opt->count()) r.params["m"] = m;
    if (p_opt->count()) r.params["p"] = p;
    if (q_opt->count()) r.params["q"] = q;
    r.method = method;
    return r;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string format_point(const ConeDescription& desc, const std::vector<Rational>& point) {
  std::string out;
  for (std::size_t b = 0; b < desc.blocks().size(); ++b) {
    if (b) out += ";";
    out += desc.blocks()[b].name + "=";
    for (std::size_t i = 0; i < desc.blocks()[b].dim; ++i) {
      if (i) out += ",";
      out += to_string(point[desc.block_offset(b) + i]);
    }
  }
  return out;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::ResourceLimit:
    case ErrorKind::SizeLimit:
      return kNumerics;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvalue and singular value cones of matrix blocks"};
  app.require_subcommand(1);
  int status = kMember;

  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^λ_{μ,ν}");
  std::string lambda_text, mu_text, nu_text;
  lr->add_option("lambda", lambda_text, "e.g. 3,2,1")->required();
  lr->add_option("mu", mu_text)->required();
  lr->add_option("nu", nu_text)->required();
  lr->callback([&] {
    std::cout << lr_coefficient(parse_partition(lambda_text), parse_partition(mu_text), parse_partition(nu_text))
              << "\n";
  });

  auto* gen = app.add_subcommand("gen", "Generate an inequality description");
  ConeFlags gen_flags;
  gen_flags.attach(gen);
  bool c1 = false, chamber = false, minimize = false, full = false;
  std::string format = "json";
  gen->add_flag("--c1", c1, "keep only triples with coefficient one (horn, lrmn)");
  gen->add_flag("--chamber", chamber, "append ordering and sign rows");
  gen->add_flag("--minimize", minimize, "drop redundant rows by exact LP");
  gen->add_flag("--full", full, "lrmn: every triple instead of half list plus duals");
  gen->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  gen->callback([&] {
    auto request = gen_flags.request();
    request.c1_only = c1;
    request.chamber = chamber;
    request.full = full;
    auto desc = generate(request);
    if (minimize) desc = minimize_description(desc, {workers_from_env(), {}}).minimized;
    const auto doc = make_document(request, std::move(desc));
    std::cout << (format == "json" ? render_json(doc) : render_text(doc));
  });

  auto* check = app.add_subcommand("check", "Test a point for membership");
  ConeFlags check_flags;
  check_flags.attach(check);
  std::string point_text;
  double tol = 0;
  auto* tol_opt = check->add_option("--tol", tol, "floating test with this tolerance; allows decimals");
  check->add_option("--point", point_text, "e.g. \"lambda=1,0,0,-1;s=1,0\"")->required();
  check->callback([&] {
    auto request = check_flags.request();
    request.chamber = true;
    const auto desc = generate(request);
    const bool numeric = tol_opt->count() > 0;
    const auto point = parse_point(desc, point_text, numeric);
    MembershipResult result;
    if (numeric) {
      std::vector<double> approx;
      for (const auto& v : point) approx.push_back(to_double(v));
      result = check_point(desc, std::span<const double>(approx), tol);
    } else {
      result = check_point(desc, std::span<const Rational>(point));
    }
    const auto verdict = make_verdict(desc, result);
    std::cout << (verdict.member ? "member" : "not a member") << "\n";
    for (const auto& row : verdict.violated) std::cout << "violated: " << row << "\n";
    status = verdict.member ? kMember : kNegative;
  });

  auto* verify = app.add_subcommand("verify", "Sample random matrices and test their spectra");
  ConeFlags verify_flags;
  verify_flags.attach(verify);
  HarnessConfig config;
  verify->add_option("--samples", config.samples)->check(CLI::PositiveNumber);
  verify->add_option("--seed", config.seed)->required();
  verify->add_option("--tol", config.tol);
  verify->callback([&] {
    config.cone = verify_flags.request();
    const auto report = run_harness(config);
    char slack[64];
    std::snprintf(slack, sizeof slack, "%.6e", report.min_slack);
    std::cout << "passed=" << report.passed << " failed=" << report.failed << " min_slack=" << slack << "\n";
    for (std::size_t i : report.failures) std::cout << "failed sample " << i << "\n";
    status = report.failed == 0 ? kMember : kNegative;
  });

  auto* equal = app.add_subcommand("equal", "Compare the cones of two documents");
  std::string file_a, file_b;
  equal->add_option("--a", file_a)->required();
  equal->add_option("--b", file_b)->required();
  equal->callback([&] {
    const auto a = parse_json(read_file(file_a));
    const auto b = parse_json(read_file(file_b));
    if (a.description.blocks().size() != b.description.blocks().size()) {
      throw Error(ErrorKind::Schema, "documents have different blocks");
    }
    for (std::size_t i = 0; i < a.description.blocks().size(); ++i) {
      const auto& ba = a.description.blocks()[i];
      const auto& bb = b.description.blocks()[i];
      if (ba.name != bb.name || ba.dim != bb.dim) throw Error(ErrorKind::Schema, "documents have different blocks");
    }
    // Both cones live inside the chamber, as in check.
    auto da = a.description;
    auto db = b.description;
    da.add_chamber_rows();
    db.add_chamber_rows();
    const auto cmp = cones_equal(da, db);
    if (cmp.equal) {
      std::cout << "equal\n";
      return;
    }
    std::cout << "not equal\n"
              << "witness (in " << (cmp.in_first ? "a" : "b") << "): " << format_point(da, cmp.witness) << "\n"
              << "violates: " << cmp.row << "\n";
    status = kNegative;
  });

  auto* minimize_cmd = app.add_subcommand("minimize", "Drop redundant rows of a document");
  std::string file_in;
  minimize_cmd->add_option("file", file_in)->required();
  minimize_cmd->callback([&] {
    const auto doc = parse_json(read_file(file_in));
    const auto report = minimize_description(doc.description, {workers_from_env(), {}});
    std::cerr << "kept " << report.kept.size() << " of " << doc.description.inequalities().size() << "\n";
    for (const auto& d : report.dropped) {
      std::cerr << "dropped " << d.index << ": " << doc.description.render(doc.description.inequalities()[d.index])
                << "\n";
    }
    auto out = doc;
    out.description = report.minimized;
    std::cout << render_json(out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return status;
}
