#include "jstir/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "jstir/diagonal.hpp"
#include "jstir/format.hpp"
#include "jstir/jsnumbers.hpp"
#include "jstir/permutations.hpp"
#include "jstir/posets.hpp"
#include "jstir/suites.hpp"

namespace jstir {

namespace {

constexpr unsigned kMaxTableN = 25;
constexpr unsigned kMaxAktK = 9;
constexpr unsigned kMaxEnumAktK = 4;

struct Options {
  std::string out_file;
  std::string format = "text";

  // jstab
  std::string kind = "second";
  unsigned n_max = 0;

  // akt, conjecture
  unsigned k_max = 0;
  int i_max = -1;
  std::string method = "rec";

  // poset, jsp
  std::string family = "R";
  unsigned k = 1;
  std::vector<unsigned> subset;
  std::string poset_emit = "covers";
  std::string jsp_emit = "words";
  int i = -1;
  std::string stat = "jacobi";

  // verify
  std::string suite = "all";
};

void usage_check(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, message);
}

void cmd_jstab(const Options& o, std::ostream& out) {
  usage_check(o.n_max <= kMaxTableN, "--nmax must be at most 25");
  const Kind kind = o.kind == "first" ? Kind::kFirst : Kind::kSecond;
  const JSTriangle tri = build_triangle(kind, o.n_max);
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned n = 0; n <= o.n_max; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        rows.push_back({{"n", n}, {"k", k}, {"entry", to_json(tri.entry(n, k), "z")}});
      }
    }
    out << nlohmann::json{{"kind", o.kind}, {"nmax", o.n_max}, {"entries", rows}}.dump() << '\n';
    return;
  }
  if (o.format == "csv") out << "n,k,entry\n";
  for (unsigned n = 0; n <= o.n_max; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      const IntPoly& e = tri.entry(n, k);
      if (o.format == "csv") {
        std::string cell = to_json(e, "z").dump();
        std::string quoted;
        for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        out << n << ',' << k << ",\"" << quoted << "\"\n";
      } else {
        out << n << '\t' << k << '\t' << to_text(e, "z") << '\n';
      }
    }
  }
}

DescentTable akt_table(unsigned k_max, const std::string& method) {
  if (method == "gf") return descent_table_gf(k_max);
  if (method == "rec") return descent_table_rec(k_max);
  if (k_max > kMaxEnumAktK) {
    throw Error(ErrorCode::kTooLarge, "--method " + method + " is limited to --kmax 4");
  }
  if (method == "enum") return a_table_enum(k_max);
  return descent_table_posets(k_max);
}

void cmd_akt(const Options& o, std::ostream& out) {
  if (o.k_max > kMaxAktK) throw Error(ErrorCode::kTooLarge, "--kmax is limited to 9");
  const DescentTable table = akt_table(o.k_max, o.method);
  const unsigned i_top = o.i_max < 0 ? o.k_max : std::min<unsigned>(o.k_max, o.i_max);
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned k = 0; k <= o.k_max; ++k) {
      for (unsigned i = 0; i <= std::min(k, i_top); ++i) {
        rows.push_back({{"k", k}, {"i", i}, {"A", to_json(table.at(k, i), "t")}});
      }
    }
    out << rows.dump() << '\n';
    return;
  }
  out << "k\\i";
  for (unsigned i = 0; i <= i_top; ++i) out << '\t' << i;
  out << '\n';
  for (unsigned k = 0; k <= o.k_max; ++k) {
    out << k;
    for (unsigned i = 0; i <= std::min(k, i_top); ++i) out << '\t' << to_text(table.at(k, i), "t");
    out << '\n';
  }
}

void cmd_poset(const Options& o, std::ostream& out) {
  std::vector<unsigned> s = o.subset;
  std::sort(s.begin(), s.end());
  usage_check(o.family == "R" || s.empty(), "--S applies only to --family R");
  const LabeledPoset p = o.family == "P" ? build_P_legendre(o.k) : build_R(o.k, s);
  if (o.poset_emit == "extensions") {
    for_each_linear_extension(p, [&](std::span<const int> w) {
      for (std::size_t l = 0; l < w.size(); ++l) out << (l ? " " : "") << w[l];
      out << '\n';
    });
    return;
  }
  for (const auto& [a, b] : p.covers()) out << a << '<' << b << '\n';
}

void cmd_jsp(const Options& o, std::ostream& out) {
  usage_check(o.i >= 0 && static_cast<unsigned>(o.i) <= o.k, "--i must lie in 0..k");
  if (o.k > kMaxJspK) throw Error(ErrorCode::kTooLarge, "--k is limited to 6");
  const DescentOrder order = o.stat == "legendre" ? DescentOrder::kLegendre : DescentOrder::kJacobi;
  std::map<unsigned, unsigned long> histogram;
  for (const Subset& s : subsets_of_size(o.k, static_cast<unsigned>(o.i))) {
    for_each_stirling_permutation(jsp_multiset(o.k, s), [&](std::span<const Letter> w) {
      if (o.jsp_emit == "histogram") {
        ++histogram[descents(w, order) + 1];
      } else {
        out << to_string(Word(w.begin(), w.end())) << '\n';
      }
    });
  }
  for (const auto& [j, count] : histogram) out << j << ' ' << count << '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerifyReport r = run_suite(o.suite);
  if (o.format == "json") {
    out << to_json(r).dump() << '\n';
  } else {
    out << to_text(r);
  }
  return r.passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_conjecture(const Options& o, std::ostream& out) {
  const auto verdicts = check_conjecture(o.k_max);
  const VerifyReport r = conjecture_report(verdicts);
  if (o.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& v : verdicts) {
      rows.push_back({{"k", v.k}, {"i", v.i}, {"real_rooted", v.real_rooted}, {"unimodal", v.unimodal}});
    }
    out << nlohmann::json{{"kmax", o.k_max}, {"verdicts", rows}, {"report", to_json(r)}}.dump()
        << '\n';
  } else {
    out << "k\ti\treal-rooted\tunimodal\n";
    for (const auto& v : verdicts) {
      out << v.k << '\t' << v.i << '\t' << (v.real_rooted ? "true" : "false") << '\t'
          << (v.unimodal ? "true" : "false") << '\n';
    }
    out << to_text(r);
  }
  return r.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobi-Stirling numbers, descent polynomials and their verification", "jstir"};
  app.require_subcommand(1);
  Options o;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", o.out_file, "Write output to FILE instead of stdout");
  };

  auto* jstab = app.add_subcommand("jstab", "Triangle of JS(n,k;z) or js(n,k;z)");
  jstab->add_option("--kind", o.kind)->check(CLI::IsMember({"second", "first"}));
  jstab->add_option("--nmax", o.n_max)->required();
  jstab->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
  add_out(jstab);

  auto* akt = app.add_subcommand("akt", "Descent polynomials A_{k,i}(t)");
  akt->add_option("--kmax", o.k_max)->required();
  akt->add_option("--imax", o.i_max)->check(CLI::NonNegativeNumber);
  akt->add_option("--method", o.method)->check(CLI::IsMember({"gf", "rec", "enum", "posets"}));
  akt->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  add_out(akt);

  auto* poset = app.add_subcommand("poset", "Posets R_{k,S} and P_k");
  poset->add_option("--family", o.family)->check(CLI::IsMember({"R", "P"}));
  poset->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  poset->add_option("--S", o.subset)->delimiter(',');
  poset->add_option("--emit", o.poset_emit)->check(CLI::IsMember({"covers", "extensions"}));
  add_out(poset);

  auto* jsp = app.add_subcommand("jsp", "Jacobi-Stirling permutations of level i");
  jsp->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  jsp->add_option("--i", o.i)->required();
  jsp->add_option("--stat", o.stat)->check(CLI::IsMember({"jacobi", "legendre"}));
  jsp->add_option("--emit", o.jsp_emit)->check(CLI::IsMember({"words", "histogram"}));
  add_out(jsp);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> names = suite_names();
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(names));
  verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  add_out(verify);

  auto* conjecture = app.add_subcommand("conjecture", "Real-rootedness and unimodality of A_{k,i}");
  conjecture->add_option("--kmax", o.k_max)->required();
  conjecture->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  add_out(conjecture);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) {
      err << "error: cannot open " << o.out_file << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = o.out_file.empty() ? out : file;

  try {
    if (jstab->parsed()) cmd_jstab(o, sink);
    if (akt->parsed()) cmd_akt(o, sink);
    if (poset->parsed()) cmd_poset(o, sink);
    if (jsp->parsed()) cmd_jsp(o, sink);
    if (verify->parsed()) return cmd_verify(o, sink);
    if (conjecture->parsed()) return cmd_conjecture(o, sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kCrossCheckFailure ? kExitVerifyFailed : kExitUsage;
  }
  return kExitOk;
}

}  // namespace jstir
