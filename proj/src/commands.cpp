#include "casimir/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/algebra_file.hpp"
#include "casimir/invariants.hpp"
#include "casimir/pbw.hpp"
#include "casimir/structure.hpp"

namespace casimir::cli {

namespace {

using exact::Rational;
using invariants::SemiInvariant;
using liealg::StructureConstants;
using nlohmann::ordered_json;

std::string render_vector(const std::vector<Rational>& v,
                          const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational mag = v[i] < 0 ? Rational(-v[i]) : v[i];
    if (first) {
      if (v[i] < 0) os << "-";
      first = false;
    } else {
      os << (v[i] < 0 ? " - " : " + ");
    }
    if (mag != 1) os << exact::to_string(mag) << "*";
    os << labels[i];
  }
  if (first) return "0";
  return os.str();
}

std::string render_tuple(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << exact::to_string(v[i]);
  }
  os << ")";
  return os.str();
}

ordered_json json_tuple(const std::vector<Rational>& v) {
  ordered_json arr = ordered_json::array();
  for (const Rational& x : v) arr.push_back(exact::to_string(x));
  return arr;
}

ordered_json json_dims(const std::vector<int>& dims) {
  ordered_json arr = ordered_json::array();
  for (int d : dims) arr.push_back(d);
  return arr;
}

struct CheckList {
  std::vector<std::tuple<std::string, bool, std::string>> entries;

  void add(const std::string& name, bool pass, const std::string& detail) {
    entries.emplace_back(name, pass, detail);
  }
  bool all_pass() const {
    for (const auto& [n, p, d] : entries)
      if (!p) return false;
    return true;
  }
};

// Runs every check applicable to the file; `check` command body.
CheckList run_checks(const AlgebraFile& f, int max_degree) {
  CheckList checks;
  StructureConstants c = f.to_constants();

  liealg::ValidationResult valid = liealg::validate(c);
  if (!valid.ok) {
    std::ostringstream os;
    os << "violation at triple (" << valid.i + 1 << ", " << valid.j + 1 << ", "
       << valid.l + 1 << "): cyclic sum = " << render_vector(valid.cyclic_sum, f.basis);
    checks.add("jacobi", false, os.str());
    return checks;
  }
  checks.add("jacobi", true, "ok");

  liealg::StructureReport report = liealg::structure_report(c);

  if (f.expected) {
    if (f.expected->invariant_count) {
      int count = invariants::invariant_count(c);
      checks.add("expected_invariant_count", count == *f.expected->invariant_count,
                 "computed " + std::to_string(count) + ", expected " +
                     std::to_string(*f.expected->invariant_count));
    }
    if (f.expected->radical_nilpotent) {
      checks.add("expected_radical_nilpotent",
                 report.radical_is_nilpotent == *f.expected->radical_nilpotent,
                 std::string("computed ") +
                     (report.radical_is_nilpotent ? "true" : "false"));
    }
    if (f.expected->perfect) {
      checks.add("expected_perfect", report.is_perfect == *f.expected->perfect,
                 std::string("computed ") + (report.is_perfect ? "true" : "false"));
    }
  }

  if (f.levi) {
    liealg::LeviResult levi = liealg::verify_levi(c, *f.levi);
    if (!levi.ok()) {
      checks.add("theorem_a", false, "declared Levi basis rejected: " + levi.rejection);
    } else {
      liealg::TheoremAReport thm = liealg::theorem_a_check(*levi.value, c);
      std::ostringstream os;
      os << "perfect=" << (thm.is_perfect ? "yes" : "no")
         << " contained=" << (thm.contained ? "yes" : "no")
         << " dim_identity=" << (thm.dim_identity ? "yes" : "no");
      checks.add("theorem_a", thm.agree && thm.dim_identity, os.str());
    }
  }

  if (report.radical_is_nilpotent) {
    invariants::ZeroWeightCertificate cert = invariants::zero_weight_certificate(c);
    if (cert.ok) {
      checks.add("zero_weight_certificate", true,
                 "all " + std::to_string(cert.reasons.size()) + " directions covered");
    } else {
      std::ostringstream os;
      os << "uncovered directions:";
      for (int i : cert.uncovered) os << " " << i + 1;
      checks.add("zero_weight_certificate", false, os.str());
    }

    invariants::SemiInvariantResult semi = invariants::semi_invariants(c, max_degree);
    bool all_zero = true;
    for (const SemiInvariant& s : semi.items)
      if (!s.weight.is_zero()) all_zero = false;
    checks.add("semi_invariant_weights", all_zero,
               std::to_string(semi.items.size()) + " semi-invariant(s) up to degree " +
                   std::to_string(max_degree) + (all_zero ? ", all weights zero" : ", nonzero weight found"));
  }

  invariants::InvariantSet inv = invariants::polynomial_invariants(c, max_degree);
  bool all_central = true;
  std::string witness;
  for (const exact::Polynomial& p : inv.polys) {
    enveloping::CentralityResult res = enveloping::is_central(c, enveloping::symmetrize(c, p));
    if (!res.central) {
      all_central = false;
      witness = " (fails against " + f.basis[res.witness_index] + ")";
      break;
    }
  }
  checks.add("casimir_centrality", all_central,
             std::to_string(inv.polys.size()) + " invariant(s) symmetrized" + witness);

  return checks;
}

int command_validate(const AlgebraFile& f, bool json, bool quiet, std::ostream& out) {
  liealg::ValidationResult valid = liealg::validate(f.to_constants());
  if (json) {
    ordered_json doc;
    doc["algebra"] = f.name;
    doc["ok"] = valid.ok;
    if (!valid.ok) {
      doc["triple"] = {valid.i + 1, valid.j + 1, valid.l + 1};
      doc["cyclic_sum"] = json_tuple(valid.cyclic_sum);
    }
    out << doc.dump(2) << "\n";
  } else if (valid.ok) {
    if (!quiet) out << "ok\n";
  } else {
    out << "Jacobi violation at triple (" << valid.i + 1 << ", " << valid.j + 1 << ", "
        << valid.l + 1 << "): cyclic sum = " << render_vector(valid.cyclic_sum, f.basis)
        << "\n";
  }
  return valid.ok ? 0 : 1;
}

int command_analyze(const AlgebraFile& f, bool json, bool quiet, std::ostream& out) {
  StructureConstants c = f.to_constants();
  std::optional<std::string> levi_rejection;
  liealg::StructureReport report;
  try {
    report = liealg::structure_report(c, f.levi);
  } catch (const liealg::LeviRejection& e) {
    levi_rejection = e.what();
    report = liealg::structure_report(c);
  }

  auto yes = [](bool b) { return b ? "yes" : "no"; };
  if (json) {
    ordered_json doc;
    doc["algebra"] = f.name;
    doc["dim"] = f.dim;
    doc["solvable"] = report.is_solvable;
    doc["nilpotent"] = report.is_nilpotent;
    doc["semisimple"] = report.is_semisimple;
    doc["perfect"] = report.is_perfect;
    doc["radical_dim"] = report.radical.dim();
    ordered_json basis = ordered_json::array();
    for (const auto& v : report.radical.basis()) basis.push_back(json_tuple(v));
    doc["radical_basis"] = basis;
    doc["radical_nilpotent"] = report.radical_is_nilpotent;
    doc["radical_abelian"] = report.radical_is_abelian;
    doc["derived_series_dims"] = json_dims(report.derived_series_dims);
    doc["lower_central_dims"] = json_dims(report.lower_central_dims);
    doc["radical_lower_central_dims"] = json_dims(report.radical_lower_central_dims);
    if (report.levi) doc["levi_dim"] = report.levi->levi.dim();
    if (levi_rejection) doc["levi_rejected"] = *levi_rejection;
    out << doc.dump(2) << "\n";
  } else if (!quiet) {
    out << "algebra: " << f.name << " (dim " << f.dim << ")\n";
    out << "solvable: " << yes(report.is_solvable) << "\n";
    out << "nilpotent: " << yes(report.is_nilpotent) << "\n";
    out << "semisimple: " << yes(report.is_semisimple) << "\n";
    out << "perfect: " << yes(report.is_perfect) << "\n";
    out << "radical: dim " << report.radical.dim();
    for (const auto& v : report.radical.basis()) out << "  " << render_vector(v, f.basis);
    out << "\n";
    out << "radical nilpotent: " << yes(report.radical_is_nilpotent) << "\n";
    out << "radical abelian: " << yes(report.radical_is_abelian) << "\n";
    auto dims = [&](const std::vector<int>& d) {
      std::ostringstream os;
      for (size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d[i];
      return os.str();
    };
    out << "derived series dims: " << dims(report.derived_series_dims) << "\n";
    out << "lower central series dims: " << dims(report.lower_central_dims) << "\n";
    out << "radical lower central dims: " << dims(report.radical_lower_central_dims)
        << "\n";
    if (report.levi) out << "levi: verified, dim " << report.levi->levi.dim() << "\n";
    if (levi_rejection) out << "levi: rejected: " << *levi_rejection << "\n";
  }
  return levi_rejection ? 1 : 0;
}

int command_count(const AlgebraFile& f, bool json, std::ostream& out) {
  int count = invariants::invariant_count(f.to_constants());
  if (json) {
    ordered_json doc;
    doc["algebra"] = f.name;
    doc["count"] = count;
    out << doc.dump(2) << "\n";
  } else {
    out << count << "\n";
  }
  return 0;
}

int command_invariants(const AlgebraFile& f, int max_degree, bool json, bool quiet,
                       std::ostream& out) {
  StructureConstants c = f.to_constants();
  invariants::InvariantSet inv = invariants::polynomial_invariants(c, max_degree);
  if (json) {
    ordered_json doc;
    doc["algebra"] = f.name;
    doc["max_degree"] = max_degree;
    doc["count"] = inv.expected_count;
    ordered_json polys = ordered_json::array();
    for (const auto& p : inv.polys) polys.push_back(p.str());
    doc["invariants"] = polys;
    doc["certificate"] = {{"point", json_tuple(inv.certificate.point)},
                          {"jacobian_rank", inv.certificate.jacobian_rank}};
    doc["count_matched"] = inv.count_matched;
    out << doc.dump(2) << "\n";
    return 0;
  }
  if (!quiet) {
    out << "invariant count (dim minus generic rank): " << inv.expected_count << "\n";
    out << "independent invariants up to degree " << max_degree << ": " << inv.polys.size()
        << "\n";
  }
  for (const auto& p : inv.polys) out << "  " << p.str() << "\n";
  if (!quiet) {
    out << "certificate point: " << render_tuple(inv.certificate.point) << "\n";
    out << "certificate jacobian rank: " << inv.certificate.jacobian_rank << "\n";
    out << "count matched: " << (inv.count_matched ? "yes" : "no") << "\n";
  }
  return 0;
}

int command_semi(const AlgebraFile& f, int max_degree, bool json, bool quiet,
                 std::ostream& out) {
  invariants::SemiInvariantResult semi =
      invariants::semi_invariants(f.to_constants(), max_degree);
  if (json) {
    ordered_json doc;
    doc["algebra"] = f.name;
    doc["max_degree"] = max_degree;
    ordered_json items = ordered_json::array();
    for (const SemiInvariant& s : semi.items) {
      ordered_json node;
      node["poly"] = s.poly.str();
      node["weight"] = json_tuple(s.weight.components);
      items.push_back(node);
    }
    doc["semi_invariants"] = items;
    doc["skipped_dimension"] = semi.skipped_dimension;
    out << doc.dump(2) << "\n";
    return 0;
  }
  if (!quiet)
    out << "semi-invariants up to degree " << max_degree << ": " << semi.items.size()
        << "\n";
  for (const SemiInvariant& s : semi.items)
    out << "  " << s.poly.str() << "  weight " << render_tuple(s.weight.components) << "\n";
  if (!quiet)
    out << "skipped dimension from irrational eigenvalues: " << semi.skipped_dimension
        << "\n";
  return 0;
}

int command_casimir(const AlgebraFile& f, int max_degree, bool json, bool quiet,
                    std::ostream& out) {
  StructureConstants c = f.to_constants();
  invariants::InvariantSet inv = invariants::polynomial_invariants(c, max_degree);
  bool all_central = true;
  ordered_json items = ordered_json::array();
  std::ostringstream text;
  for (const auto& p : inv.polys) {
    enveloping::PBWElement u = enveloping::symmetrize(c, p);
    enveloping::CentralityResult res = enveloping::is_central(c, u);
    all_central = all_central && res.central;
    if (json) {
      ordered_json node;
      node["invariant"] = p.str();
      node["casimir"] = u.str(f.basis);
      node["central"] = res.central;
      if (!res.central) {
        node["witness_generator"] = f.basis[res.witness_index];
        node["witness_commutator"] = res.commutator.str(f.basis);
      }
      items.push_back(node);
    } else {
      text << "  " << u.str(f.basis) << "  central: " << (res.central ? "yes" : "no");
      if (!res.central)
        text << "  (commutator with " << f.basis[res.witness_index] << ": "
             << res.commutator.str(f.basis) << ")";
      text << "\n";
    }
  }
  if (json) {
    ordered_json doc;
    doc["algebra"] = f.name;
    doc["max_degree"] = max_degree;
    doc["casimirs"] = items;
    doc["all_central"] = all_central;
    out << doc.dump(2) << "\n";
  } else {
    if (!quiet)
      out << "casimir operators from " << inv.polys.size() << " invariant(s) up to degree "
          << max_degree << ":\n";
    out << text.str();
  }
  return all_central ? 0 : 1;
}

int command_check(const AlgebraFile& f, int max_degree, bool json, bool quiet,
                  std::ostream& out) {
  CheckList checks = run_checks(f, max_degree);
  if (json) {
    ordered_json doc;
    doc["algebra"] = f.name;
    doc["dim"] = f.dim;
    doc["max_degree"] = max_degree;
    ordered_json list = ordered_json::array();
    for (const auto& [name, pass, detail] : checks.entries) {
      ordered_json node;
      node["name"] = name;
      node["pass"] = pass;
      node["detail"] = detail;
      list.push_back(node);
    }
    doc["checks"] = list;
    doc["all_pass"] = checks.all_pass();
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [name, pass, detail] : checks.entries) {
      if (quiet && pass) continue;
      out << (pass ? "PASS " : "FAIL ") << name << " — " << detail << "\n";
    }
    if (!quiet)
      out << (checks.all_pass() ? "all checks passed: " : "checks FAILED: ") << f.name
          << "\n";
  }
  return checks.all_pass() ? 0 : 1;
}

int command_catalog(const std::string& write_dir, bool json, std::ostream& out,
                    std::ostream& err) {
  std::vector<AlgebraFile> entries = catalog();
  if (!write_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(write_dir, ec);
    for (const AlgebraFile& f : entries) {
      std::string path = write_dir + "/" + f.name + ".json";
      std::ofstream file(path, std::ios::binary);
      if (!file) {
        err << "error: cannot write " << path << "\n";
        return 2;
      }
      file << serialize(f);
    }
    out << "wrote " << entries.size() << " files to " << write_dir << "\n";
    return 0;
  }
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const AlgebraFile& f : entries) {
      ordered_json node;
      node["name"] = f.name;
      node["dim"] = f.dim;
      arr.push_back(node);
    }
    out << arr.dump(2) << "\n";
  } else {
    for (const AlgebraFile& f : entries) out << f.name << " (dim " << f.dim << ")\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact invariants, semi-invariants and Casimir operators of "
               "finite-dimensional Lie algebras over Q"};
  app.name("casimir");
  app.require_subcommand(1);

  std::string file;
  int max_degree = 4;
  bool json = false;
  bool quiet = false;
  std::string write_dir;

  auto add_common = [&](CLI::App* sub, bool with_degree) {
    sub->add_option("file", file, "algebra description file")->required();
    if (with_degree)
      sub->add_option("--max-degree", max_degree, "largest homogeneous degree searched")
          ->check(CLI::PositiveNumber);
    sub->add_flag("--json", json, "machine-readable output");
    sub->add_flag("--quiet", quiet, "suppress informational output");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the Jacobi identity");
  add_common(validate, false);
  CLI::App* analyze = app.add_subcommand("analyze", "structural report");
  add_common(analyze, false);
  CLI::App* count = app.add_subcommand("count", "number of independent invariants");
  add_common(count, false);
  CLI::App* invariants_cmd =
      app.add_subcommand("invariants", "polynomial invariants up to a degree");
  add_common(invariants_cmd, true);
  CLI::App* semi = app.add_subcommand("semi", "semi-invariants with their weights");
  add_common(semi, true);
  CLI::App* casimir_cmd =
      app.add_subcommand("casimir", "symmetrize invariants and certify centrality");
  add_common(casimir_cmd, true);
  CLI::App* check = app.add_subcommand("check", "run every applicable property check");
  add_common(check, true);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "bundled algebras");
  catalog_cmd->add_option("--write", write_dir, "write the catalog files to a directory");
  catalog_cmd->add_flag("--json", json, "machine-readable output");
  catalog_cmd->add_flag("--quiet", quiet, "suppress informational output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  try {
    if (catalog_cmd->parsed()) return command_catalog(write_dir, json, out, err);

    AlgebraFile f = load_algebra(file);
    if (validate->parsed()) return command_validate(f, json, quiet, out);
    if (analyze->parsed()) return command_analyze(f, json, quiet, out);
    if (count->parsed()) return command_count(f, json, out);
    if (invariants_cmd->parsed())
      return command_invariants(f, max_degree, json, quiet, out);
    if (semi->parsed()) return command_semi(f, max_degree, json, quiet, out);
    if (casimir_cmd->parsed()) return command_casimir(f, max_degree, json, quiet, out);
    if (check->parsed()) return command_check(f, max_degree, json, quiet, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace casimir::cli
