#include "pi2/cli.hpp"

#include "pi2/enumerator.hpp"
#include "pi2/homotopy.hpp"
#include "pi2/milnor.hpp"
#include "pi2/presentation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace pi2 {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  BigInt lo, hi;
};

Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      BigInt v(text);
      return {v, v};
    }
    Range r{BigInt(text.substr(0, dots)), BigInt(text.substr(dots + 2))};
    if (r.lo > r.hi) throw InputError("empty range '" + text + "'");
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("bad range '" + text + "', expected a..b");
  }
}

std::size_t max_cosets_default() {
  if (const char* env = std::getenv("PI2_MAX_COSETS")) {
    try {
      long long v = std::stoll(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("PI2_MAX_COSETS must be a positive integer, got '") + env + "'");
  }
  return kDefaultMaxCosets;
}

Presentation read_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_presentation(ss.str());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  }
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass:
      return kExitPass;
    case Status::Fail:
      return kExitCheckFailed;
    case Status::Inconclusive:
      return kExitResourceCap;
  }
  return kExitCheckFailed;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << j.dump(2) << "\n";
}

void print_summary(std::ostream& out, const Certificate& cert) {
  for (const auto& s : cert.sections) {
    out << s.name() << ": " << to_string(s.status()) << "\n";
    for (const auto& c : s.checks()) {
      if (c.status == Status::Pass) continue;
      out << "  " << to_string(c.status) << ": " << c.name;
      if (!c.witness.empty()) out << " [" << c.witness << "]";
      out << "\n";
    }
  }
  for (const auto& n : cert.notes) out << "note: " << n << "\n";
  out << "conclusion: " << to_string(cert.conclusion()) << "\n";
}

struct Common {
  bool verbose = false;
  bool json = false;
  std::string out_path;
};

int emit(std::ostream& out, const Common& c, Certificate cert, std::chrono::steady_clock::time_point start) {
  cert.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  auto j = cert.to_json(c.verbose);
  if (!c.out_path.empty()) write_json(c.out_path, j);
  if (c.json) out << j.dump(2) << "\n";
  else print_summary(out, cert);
  return exit_code(cert.conclusion());
}

CheckReport boundary_report(const ChainComplex& cx) {
  CheckReport rep("boundary");
  rep.add("composite C2 -> C0 is zero", cx.composite_is_zero(),
          cx.composite_witness() ? "row " + std::to_string(*cx.composite_witness() + 1) : "");
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : cx.d2) {
    auto row = nlohmann::ordered_json::array();
    for (const auto& e : r) row.push_back(e.to_string());
    rows.push_back(row);
  }
  rep.detail()["d2"] = rows;
  rep.detail()["d2_integer"] = cx.d2_int.to_json();
  return rep;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verifier for second homotopy modules of quaternion group presentations", "pi2"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));
  Common common;
  app.add_flag("-v,--verbose", common.verbose, "Include matrices and lattice bases in JSON reports");
  app.add_flag("--json", common.json, "Print the JSON report instead of the summary");

  std::string file, range_n, range_r, format = "text", phi2_text;
  long n = 7, r = 3, expect_order = 0;
  long long max_cosets = 0;
  bool emit_only = false, standard = false, rewritten = false;

  auto* verify = app.add_subcommand("verify", "Check that a presentation file presents a group of the given order");
  verify->add_option("--file", file, "Presentation file")->required();
  verify->add_option("--expect-order", expect_order, "Expected group order (4n checks Q_4n)");
  verify->add_option("--max-cosets", max_cosets, "Coset bound");
  verify->add_option("--out", common.out_path, "Write JSON report");

  auto* enr_cmd = app.add_subcommand("enr", "Build E(n, r) and check it presents Q_4n");
  enr_cmd->add_option("--n", n, "n >= 2")->required();
  enr_cmd->add_option("--r", r, "r");
  enr_cmd->add_flag("--emit", emit_only, "Print the presentation and exit");
  enr_cmd->add_flag("--standard", standard, "Use the standard presentation of Q_4n");
  enr_cmd->add_flag("--rewritten", rewritten, "Use the rewritten form of E(7, 3)");
  enr_cmd->add_option("--max-cosets", max_cosets, "Coset bound");
  enr_cmd->add_option("--out", common.out_path, "Write JSON report");

  auto* scan_cmd = app.add_subcommand("scan", "Check E(n, r) over a grid");
  scan_cmd->add_option("--n", range_n, "n range a..b")->required();
  scan_cmd->add_option("--r", range_r, "r range a..b")->required();
  scan_cmd->add_option("--max-cosets", max_cosets, "Coset bound");
  scan_cmd->add_option("--out", common.out_path, "Write JSON rows");

  auto* bnd = app.add_subcommand("boundary", "Fox boundary matrix of a presentation over Q_4n");
  bnd->add_option("--file", file, "Presentation file")->required();
  bnd->add_option("--n", n, "n")->required();
  bnd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* std_cmd = app.add_subcommand("standard", "Check the generator u of pi2 for the standard presentation");
  std_cmd->add_option("--n", n, "n");
  std_cmd->add_option("--out", common.out_path, "Write JSON report");

  auto* exotic = app.add_subcommand("exotic", "Check the generators 4, phi1, phi2 for E(7, 3)");
  exotic->add_option("--phi2", phi2_text, "Substitute for phi2");
  exotic->add_option("--out", common.out_path, "Write JSON report");

  auto* mil = app.add_subcommand("milnor", "Check the ideal N and the unit obstruction");
  mil->add_option("--out", common.out_path, "Write JSON report");

  auto* thm = app.add_subcommand("theorem-a", "Run the full verification");
  thm->add_option("--out", common.out_path, "Write JSON report");
  thm->add_option("--n", n, "Order parameter for the enumeration section");
  thm->add_option("--phi2", phi2_text, "Substitute for phi2");

  auto* gen = app.add_subcommand("generators", "Generators of pi2 from the general formulas");
  gen->add_option("--file", file, "Presentation file")->required();
  gen->add_option("--n", n, "n")->required();
  gen->add_option("--out", common.out_path, "Write JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    std::size_t cap = max_cosets > 0 ? static_cast<std::size_t>(max_cosets) : max_cosets_default();
    Certificate cert;

    if (*verify) {
      cert.command = "verify";
      Presentation p = read_presentation(file);
      bool quaternion = expect_order > 0 && expect_order % 4 == 0 && p.generators().size() == 2 &&
                        p.has_generator("x") && p.has_generator("y");
      if (quaternion) {
        cert.sections.push_back(verdict_report(p, verify_q4n(p, expect_order / 4, cap)));
      } else {
        CosetTable t = enumerate(p, cap);
        CheckReport rep("enumeration");
        if (!t.closed()) rep.add(Check{"enumeration closes", Status::Inconclusive, "coset bound " + std::to_string(cap)});
        else {
          rep.add("enumeration closes", true, std::to_string(t.rows()) + " cosets");
          if (expect_order > 0)
            rep.add("order = " + std::to_string(expect_order), t.rows() == static_cast<std::size_t>(expect_order),
                    "order " + std::to_string(t.rows()));
        }
        cert.sections.push_back(rep);
      }
      return emit(out, common, cert, start);
    }

    if (*enr_cmd) {
      if (n < 2) throw InputError("--n must be at least 2");
      Presentation p = standard ? standard_presentation(n) : rewritten ? rewritten_p_prime() : enr(n, r);
      if (emit_only) {
        out << p.to_string() << "\n";
        return kExitPass;
      }
      cert.command = "enr";
      cert.sections.push_back(verdict_report(p, verify_q4n(p, n, cap)));
      return emit(out, common, cert, start);
    }

    if (*scan_cmd) {
      Range rn = parse_range(range_n), rr = parse_range(range_r);
      if (rn.lo < 2) throw InputError("n must be at least 2");
      auto rows = scan(rn.lo.get_si(), rn.hi.get_si(), rr.lo, rr.hi, cap);
      auto j = scan_to_json(rows);
      if (!common.out_path.empty()) write_json(common.out_path, j);
      out << j.dump(2) << "\n";
      for (const auto& row : rows)
        if (!row.verdict.conclusive()) return kExitResourceCap;
      return kExitPass;
    }

    if (*bnd) {
      ChainComplex cx = boundary(read_presentation(file), n);
      if (format == "json") {
        cert.command = "boundary";
        cert.sections.push_back(boundary_report(cx));
        common.json = true;
        common.verbose = true;
        return emit(out, common, cert, start);
      }
      for (std::size_t i = 0; i < cx.d2.size(); ++i)
        out << "R" << i + 1 << ": (" << cx.d2[i][0].to_string() << ", " << cx.d2[i][1].to_string() << ")\n";
      return cx.composite_is_zero() ? kExitPass : kExitCheckFailed;
    }

    if (*std_cmd) {
      if (n < 2) throw InputError("--n must be at least 2");
      cert.command = "standard";
      cert.sections.push_back(verify_standard_u(n));
      return emit(out, common, cert, start);
    }

    if (*exotic) {
      cert.command = "exotic";
      cert.sections.push_back(quartic_witness().report);
      cert.sections.push_back(psi_kernel().report);
      QGroup g(7);
      cert.sections.push_back(phi2_text.empty() ? verify_exotic_generators()
                                                : verify_exotic_generators(parse_group_ring(phi2_text, g)));
      cert.sections.push_back(kernel_correspondence_check());
      return emit(out, common, cert, start);
    }

    if (*mil) {
      cert.command = "milnor";
      cert.sections.push_back(sigma_factorization());
      cert.sections.push_back(build_N_checks());
      cert.sections.push_back(phi1_identities());
      cert.sections.push_back(ideal_I_principal());
      UnitCosetReport uc = unit_cosets();
      cert.sections.push_back(uc.report);
      cert.sections.push_back(freeness_obstruction(uc));
      return emit(out, common, cert, start);
    }

    if (*thm) {
      if (n < 2) throw InputError("--n must be at least 2");
      TheoremOptions opts;
      opts.n = n;
      if (!phi2_text.empty()) opts.phi2 = parse_group_ring(phi2_text, QGroup(7));
      return emit(out, common, theorem_a(opts), start);
    }

    if (*gen) {
      cert.command = "generators";
      GeneralGenerators gg = general_generators(read_presentation(file), n);
      gg.report.detail()["lambda"] = gg.lambda.to_string();
      gg.report.detail()["mu1"] = gg.mu1.to_string();
      gg.report.detail()["mu2"] = gg.mu2.to_string();
      cert.sections.push_back(gg.report);
      return emit(out, common, cert, start);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}

}  // namespace pi2
