#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sunsys/assembly.hpp"
#include "sunsys/certificate.hpp"
#include "sunsys/errors.hpp"
#include "sunsys/holes.hpp"
#include "sunsys/search.hpp"
#include "sunsys/verify.hpp"

namespace sunsys::cli {

namespace {

// Writes the certificate to `path`, or to `out` when the path is empty.
void emit(const certificate& c, const std::string& path, std::ostream& out) {
  const auto text = to_json(c);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw parse_error("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int cmd_solve(int k, long long v, const std::string& path, bool show_plan, std::ostream& out) {
  if (show_plan) out << assembly::describe(assembly::plan(k, v));
  const auto s = assembly::solve(k, v);
  const auto c = make_certificate(s, k);
  const auto rep = verify(c);
  emit(c, path, out);
  if (!path.empty()) out << "K_" << v << " k=" << k << ": " << rep.summary() << "\n";
  return rep.pass ? ok : failed;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  const auto c = certificate_from_json(read_file(path));
  const auto rep = verify(c);
  out << rep.summary() << "\n";
  return rep.pass ? ok : failed;
}

int cmd_admissible(int k, long long max_v, std::ostream& out) {
  const long long m = 4LL * k;
  out << "k = " << k << ": v >= " << 2 * k << " and v(v-1) = 0 (mod " << m << ")\n";
  out << "residues mod " << m << ":";
  for (long long r = 0; r < m; ++r)
    if ((r * (r - 1)) % m == 0) out << " " << r;
  out << "\n";
  bool first = true;
  for (long long v = 2; v <= max_v; ++v) {
    if (!assembly::admissible(k, v)) continue;
    out << (first ? "" : " ") << v;
    first = false;
  }
  out << "\n";
  return ok;
}

int cmd_hole(int k, int n, const std::string& path, std::ostream& out) {
  const auto s = holes::hole(k, n);
  const auto c = make_certificate(s, k);
  const auto rep = verify(c);
  emit(c, path, out);
  if (!path.empty()) out << "K_" << 4 * k << " + " << n << " k=" << k << ": " << rep.summary() << "\n";
  return rep.pass ? ok : failed;
}

int cmd_search(int k, int v, const std::string& kind, double cap, std::uint32_t seed, int symmetry,
               const std::string& path, std::ostream& out) {
  search::options opt;
  opt.time_cap_seconds = cap;
  opt.seed = seed;
  opt.symmetry = symmetry;
  const auto bk = kind == "cycle" ? search::block_kind::cycle : search::block_kind::sun;
  const auto r = search::search_complete(k, v, bk, opt);
  if (r.status != search::outcome::found) {
    out << search::to_string(r.status) << ": " << r.reason << "\n";
    return r.status == search::outcome::cap_exceeded ? unsupported : failed;
  }
  const auto c = bk == search::block_kind::sun ? make_certificate(r.suns, k) : make_certificate(r.cycles, k);
  const auto rep = verify(c);
  emit(c, path, out);
  if (!path.empty())
    out << "found with Z_" << r.symmetry << " symmetry: " << rep.summary() << "\n";
  return rep.pass ? ok : failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build and verify k-sun systems of complete graphs", "sunsys"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  int k = 0;
  long long v = 0;
  int n = 0;
  long long max_v = 0;
  std::string path;
  std::string kind = "sun";
  double cap = 10.0;
  std::uint32_t seed = 1;
  int symmetry = 0;
  bool show_plan = false;

  auto* solve = app.add_subcommand("solve", "Build a verified k-sun system of K_v");
  solve->add_option("--k", k, "block size (odd)")->required();
  solve->add_option("--v", v, "order of the complete graph")->required();
  solve->add_option("--out", path, "certificate file (default: standard output)");
  solve->add_flag("--plan", show_plan, "print the construction plan first");

  auto* ver = app.add_subcommand("verify", "Check a certificate file");
  ver->add_option("file", path, "certificate file")->required();

  auto* adm = app.add_subcommand("admissible", "List the admissible orders v for k");
  adm->add_option("--k", k, "block size (odd)")->required();
  adm->add_option("--max-v", max_v, "largest v listed (default 12k)");

  auto* hole = app.add_subcommand("hole", "Build the k-sun system of K_4k + n");
  hole->add_option("--k", k, "block size (odd, >= 7)")->required();
  hole->add_option("--n", n, "number of outer vertices")->required();
  hole->add_option("--out", path, "certificate file (default: standard output)");

  auto* srch = app.add_subcommand("search", "Exact-cover search on K_v");
  srch->add_option("--k", k, "block size")->required();
  srch->add_option("--v", v, "order of the complete graph")->required();
  srch->add_option("--kind", kind, "sun or cycle")->check(CLI::IsMember({"sun", "cycle"}));
  srch->add_option("--time-cap", cap, "seconds before giving up")->check(CLI::PositiveNumber);
  srch->add_option("--seed", seed, "restart seed");
  srch->add_option("--symmetry", symmetry, "translation group order (0 = automatic, 1 = none)");
  srch->add_option("--out", path, "certificate file (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return usage;
  }

  try {
    if (*solve) return cmd_solve(k, v, path, show_plan, out);
    if (*ver) return cmd_verify(path, out);
    if (*adm) return cmd_admissible(k, max_v > 0 ? max_v : 12LL * k, out);
    if (*hole) return cmd_hole(k, n, path, out);
    if (*srch) return cmd_search(k, static_cast<int>(v), kind, cap, seed, symmetry, path, out);
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const inadmissible_error& e) {
    err << "inadmissible: " << e.what() << "\n";
    return unsupported;
  } catch (const unsupported_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return unsupported;
  } catch (const exception_pair_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return unsupported;
  } catch (const precondition_error& e) {
    err << "invalid arguments: " << e.what() << "\n";
    return usage;
  } catch (const verification_error& e) {
    err << "verification failed: " << e.what() << "\n";
    return failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace sunsys::cli
