// Command-line front end for the sfborel library.
//
//   sfborel profile 2,3,5,6,8,10
//   sfborel alpha 3..5,8..10,48..50,98..100 --method interval
//   sfborel construct 104348/33215 --format json
//   sfborel batch monomials.txt --format csv

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfborel/sfborel.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sfborel;

struct GlobalOptions {
  std::size_t cap = kDefaultEnumerationCap;
  std::string format = "text";
  bool approx = false;
};

constexpr int kApproxDigits = 12;
// Largest predicted prime count for which `construct` runs a confirming LP.
constexpr std::uint64_t kConstructConfirmLimit = 20000;

struct CommandResult {
  std::string command;
  std::string input;
  json payload = json::object();
  std::vector<std::string> errors;

  json to_json() const {
    return json{{"command", command}, {"input", input}, {"payload", payload}, {"errors", errors}};
  }
};

void put_rational(json& obj, const std::string& key, const Rational& q, const GlobalOptions& opt) {
  obj[key] = to_string(q);
  if (opt.approx) obj[key + "_approx"] = to_decimal(q, kApproxDigits);
}

json index_list(auto&& range) {
  json arr = json::array();
  for (auto v : range) arr.push_back(v);
  return arr;
}

// ---- commands ---------------------------------------------------------------

void cmd_profile(CommandResult& res, const SquareFreeMonomial& m) {
  JumpProfile p = jump_profile(m);
  json& out = res.payload;
  out["degree"] = m.degree();
  out["n_eff"] = reduce_variables(m);
  out["t"] = index_list(p.t);
  out["it"] = index_list(p.it);
  out["ell"] = p.ell;
  out["nu"] = p.nu ? json(*p.nu) : json(nullptr);
  json bases = json::array();
  for (const auto& r : base_blocks(p)) bases.push_back(r.to_monomial().to_string());
  out["bases"] = bases;
}

void cmd_gens(CommandResult& res, const SquareFreeMonomial& m, const GlobalOptions& opt) {
  GeneratorSet g = sfborel_generators(m, opt.cap);
  res.payload["count"] = g.monomials.size();
  res.payload["truncated"] = g.truncated;
  json gens = json::array();
  for (const auto& x : g.monomials) gens.push_back(x.to_string());
  res.payload["generators"] = gens;
}

void cmd_primes(CommandResult& res, const SquareFreeMonomial& m, const GlobalOptions& opt, bool verify_cover) {
  AssociatedPrimeSystem sys = associated_primes(m, opt.cap);
  json& out = res.payload;
  out["n_eff"] = sys.n_eff;
  out["truncated"] = sys.truncated;
  out["predicted"] = sys.predicted.to_string();
  out["count"] = sys.primes.size();
  json primes = json::array();
  for (std::size_t i = 0; i < sys.primes.size(); ++i)
    primes.push_back({{"support", SquareFreeMonomial(sys.primes[i].variables).to_string()},
                      {"base_index", *sys.base_index[i]}});
  out["primes"] = primes;
  out["cover_verified"] = nullptr;
  if (verify_cover) {
    if (sys.truncated) throw std::invalid_argument("--verify-cover needs a complete prime system");
    if (sys.n_eff > kCoverOracleMaxVariables)
      throw std::invalid_argument("--verify-cover supports at most " + std::to_string(kCoverOracleMaxVariables) +
                                  " variables");
    GeneratorSet gens = sfborel_generators(m, opt.cap);
    bool agree = prime_set(minimal_cover_primes(gens, sys.n_eff)) == prime_set(sys);
    out["cover_verified"] = agree;
    if (!agree) res.errors.push_back("minimal vertex covers disagree with the associated primes");
  }
}

void put_exact(json& out, const ExactResult& r, const GlobalOptions& opt) {
  out["kind"] = "exact";
  put_rational(out, "value", r.value, opt);
  out["method"] = method_tag(r.method);
  if (r.certificate) out["certificate"] = {{"pivots", r.certificate->pivots}, {"verified", true}};
}

void put_interval(json& out, const BoundInterval& b, const GlobalOptions& opt) {
  out["kind"] = "interval";
  put_rational(out, "lower", b.lower, opt);
  put_rational(out, "upper", b.upper, opt);
  out["lower_method"] = method_tag(b.lower_method);
  out["upper_method"] = method_tag(b.upper_method);
}

void cmd_alpha(CommandResult& res, const SquareFreeMonomial& m, const GlobalOptions& opt, const std::string& method) {
  json& out = res.payload;
  out["requested"] = method;
  if (method == "auto") {
    AutoResult r = waldschmidt_auto(m, opt.cap);
    if (auto* e = std::get_if<ExactResult>(&r)) put_exact(out, *e, opt);
    else put_interval(out, std::get<BoundInterval>(r), opt);
  } else if (method == "lp") {
    auto est = predict_prime_count(jump_profile(m));
    if (est.exceeds(opt.cap)) {
      out["kind"] = "refused";
      out["truncated"] = true;
      out["predicted"] = est.to_string();
    }
    put_exact(out, waldschmidt_lp(m, opt.cap), opt);
  } else if (method == "formula") {
    auto f = exact_formula(m);
    if (!f) throw std::invalid_argument("closed form needs t_0 <= i_{t_k}, which fails for " + m.to_string());
    put_exact(out, *f, opt);
  } else if (method == "upper") {
    UpperBoundCertificate c = upper_bound_certificate(m);
    out["kind"] = "upper";
    put_rational(out, "value", c.bound, opt);
    out["method"] = method_tag(Method::segment_upper);
    json segs = json::array();
    for (const auto& s : c.segments)
      segs.push_back({{"first", s.first}, {"last", s.last}, {"value", to_string(s.value)}});
    out["certificate"] = {{"checks", "passed"}, {"a", to_string(c.a)}, {"segments", segs}};
    put_rational(out, "coarse", coarse_upper_bound(m), opt);
  } else if (method == "lower") {
    out["kind"] = "lower";
    put_rational(out, "value", lower_bound(m), opt);
    out["method"] = method_tag(jump_profile(m).ell == jump_profile(m).k() ? Method::closed_form : Method::recursive_lower);
  } else if (method == "interval") {
    put_interval(out, bound_interval(m), opt);
  } else {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
}

void cmd_construct(CommandResult& res, const std::string& text, const GlobalOptions& opt) {
  Rational target = parse_rational(text);
  SquareFreeMonomial m = construct_for_rational(target);
  json& out = res.payload;
  put_rational(out, "target", target, opt);
  out["monomial"] = m.to_string();
  json conf = nullptr;
  auto est = predict_prime_count(jump_profile(m));
  if (est.value && *est.value <= kConstructConfirmLimit && *est.value <= opt.cap) {
    ExactResult lp = waldschmidt_lp(m, opt.cap);
    conf = {{"method", method_tag(lp.method)}, {"value", to_string(lp.value)}, {"matches", lp.value == target}};
    if (lp.value != target) res.errors.push_back("LP value " + to_string(lp.value) + " differs from target");
  } else if (auto f = exact_formula(m)) {
    conf = {{"method", method_tag(f->method)}, {"value", to_string(f->value)}, {"matches", f->value == target}};
  }
  out["confirmation"] = conf;
}

void cmd_oracle(CommandResult& res, const SquareFreeMonomial& m, const GlobalOptions& opt, unsigned smax) {
  ConvergenceReport r = convergence_report(m, smax, opt.cap);
  json& out = res.payload;
  put_rational(out, "reference", r.reference, opt);
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j = {{"s", row.s}};
    if (row.alpha) {
      j["alpha"] = *row.alpha;
      put_rational(j, "ratio", row.ratio, opt);
      j["below_reference"] = row.below_reference;
    } else {
      j["alpha"] = nullptr;
      j["error"] = row.error;
      res.errors.push_back("s=" + std::to_string(row.s) + ": " + row.error);
    }
    rows.push_back(j);
  }
  out["rows"] = rows;
  out["violation"] = r.has_violation;
  if (r.has_violation) res.errors.push_back("some alpha(I^(s))/s fell below the LP value");
}

json batch_row(std::size_t line_no, const std::string& line, const GlobalOptions& opt, bool& failed) {
  json row = {{"line", line_no}, {"input", line}};
  try {
    SquareFreeMonomial m = parse_monomial(line);
    row["input"] = m.to_string();
    AutoResult r = waldschmidt_auto(m, opt.cap);
    if (auto* e = std::get_if<ExactResult>(&r)) put_exact(row, *e, opt);
    else put_interval(row, std::get<BoundInterval>(r), opt);
    row["error"] = nullptr;
  } catch (const std::exception& e) {
    failed = true;
    row["kind"] = "error";
    row["error"] = e.what();
  }
  return row;
}

void cmd_batch(CommandResult& res, const std::string& path, const GlobalOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open batch file '" + path + "'");
  json rows = json::array();
  std::string line;
  std::size_t line_no = 0;
  bool failed = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    json row = batch_row(line_no, line.substr(first), opt, failed);
    if (!row["error"].is_null()) res.errors.push_back("line " + std::to_string(line_no) + ": " + row["error"].get<std::string>());
    rows.push_back(std::move(row));
  }
  res.payload["rows"] = rows;
}

// ---- rendering --------------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  return out + "\"";
}

void write_table(std::ostream& os, const json& rows, const std::vector<std::string>& columns) {
  for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << (c ? "," : "");
      if (row.contains(columns[c])) os << csv_escape(scalar_text(row[columns[c]]));
    }
    os << "\n";
  }
}

void render_csv(std::ostream& os, const CommandResult& res, const GlobalOptions& opt) {
  const json& p = res.payload;
  if (res.command == "oracle" && p.contains("rows")) {
    std::vector<std::string> cols{"s", "alpha", "ratio"};
    if (opt.approx) cols.push_back("ratio_approx");
    cols.insert(cols.end(), {"below_reference", "error"});
    write_table(os, p["rows"], cols);
  } else if (res.command == "batch" && p.contains("rows")) {
    std::vector<std::string> cols{"line", "input", "kind", "value", "lower", "upper", "method",
                                  "lower_method", "upper_method", "error"};
    if (opt.approx) cols.insert(cols.begin() + 6, {"value_approx", "lower_approx", "upper_approx"});
    write_table(os, p["rows"], cols);
  } else {
    os << "key,value\n";
    os << "input," << csv_escape(res.input) << "\n";
    for (const auto& [k, v] : p.items())
      if (!v.is_structured()) os << k << "," << csv_escape(scalar_text(v)) << "\n";
      else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
        std::string joined;
        for (const auto& x : v) joined += (joined.empty() ? "" : " ") + scalar_text(x);
        os << k << "," << csv_escape(joined) << "\n";
      }
  }
  for (const auto& e : res.errors) std::cerr << "error: " << e << "\n";
}

void render_text_value(std::ostream& os, const std::string& label, const json& p, const std::string& key) {
  if (!p.contains(key)) return;
  os << label << p[key].get<std::string>();
  if (p.contains(key + "_approx")) os << "  (~" << p[key + "_approx"].get<std::string>() << ")";
  os << "\n";
}

void render_text(std::ostream& os, const CommandResult& res) {
  const json& p = res.payload;
  if (!res.input.empty()) os << "input: " << res.input << "\n";
  if (res.command == "profile" && p.contains("t")) {
    auto tuple = [](const json& a) {
      std::string s = "(";
      for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].dump();
      return s + ")";
    };
    os << "degree: " << p["degree"] << "\nn_eff: " << p["n_eff"] << "\nT=" << tuple(p["t"]) << "\nIT=" << tuple(p["it"])
       << "\nell: " << p["ell"] << "\nnu: " << (p["nu"].is_null() ? "none" : p["nu"].dump()) << "\nbases:";
    for (const auto& b : p["bases"]) os << " x[" << b.get<std::string>() << "]";
    os << "\n";
  } else if (res.command == "gens" && p.contains("generators")) {
    os << "generators: " << p["count"] << (p["truncated"].get<bool>() ? " (truncated)" : "") << "\n";
    for (const auto& g : p["generators"]) os << "  " << g.get<std::string>() << "\n";
  } else if (res.command == "primes" && p.contains("primes")) {
    if (p["truncated"].get<bool>()) {
      os << "truncated: predicted " << p["predicted"].get<std::string>() << " associated primes exceeds the cap\n";
    } else {
      os << "associated primes: " << p["count"] << "\n";
      for (const auto& q : p["primes"])
        os << "  <" << q["support"].get<std::string>() << ">  base " << q["base_index"] << "\n";
    }
    if (!p["cover_verified"].is_null())
      os << "minimal vertex cover check: " << (p["cover_verified"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
  } else if ((res.command == "alpha") && p.contains("kind")) {
    std::string kind = p["kind"];
    if (kind == "refused") {
      os << "refused: predicted " << p["predicted"].get<std::string>() << " associated primes exceeds the cap\n";
    } else if (kind == "interval") {
      render_text_value(os, "lower: ", p, "lower");
      render_text_value(os, "upper: ", p, "upper");
      os << "methods: " << p["lower_method"].get<std::string>() << " / " << p["upper_method"].get<std::string>() << "\n";
    } else {
      render_text_value(os, kind + ": ", p, "value");
      os << "method: " << p["method"].get<std::string>() << "\n";
      if (p.contains("certificate") && p["certificate"].contains("pivots"))
        os << "certificate: verified, " << p["certificate"]["pivots"] << " pivots\n";
      if (p.contains("certificate") && p["certificate"].contains("checks"))
        os << "certificate: covering vector checks " << p["certificate"]["checks"].get<std::string>() << "\n";
      render_text_value(os, "coarse upper: ", p, "coarse");
    }
  } else if (res.command == "construct" && p.contains("monomial")) {
    render_text_value(os, "target: ", p, "target");
    os << "monomial: " << p["monomial"].get<std::string>() << "\n";
    if (!p["confirmation"].is_null())
      os << "confirmation: " << p["confirmation"]["value"].get<std::string>() << " ("
         << p["confirmation"]["method"].get<std::string>() << ")\n";
  } else if (res.command == "oracle" && p.contains("rows")) {
    render_text_value(os, "reference: ", p, "reference");
    for (const auto& row : p["rows"]) {
      os << "  s=" << row["s"] << "  ";
      if (row["alpha"].is_null()) os << "error: " << row["error"].get<std::string>() << "\n";
      else os << "alpha=" << row["alpha"] << "  ratio=" << row["ratio"].get<std::string>() << "\n";
    }
  } else if (res.command == "batch" && p.contains("rows")) {
    for (const auto& row : p["rows"]) {
      os << row["line"] << ": " << row["input"].get<std::string>() << "  ";
      std::string kind = row["kind"];
      if (kind == "exact") os << row["value"].get<std::string>() << " [" << row["method"].get<std::string>() << "]";
      else if (kind == "interval") os << "[" << row["lower"].get<std::string>() << ", " << row["upper"].get<std::string>() << "]";
      else os << "error: " << row["error"].get<std::string>();
      os << "\n";
    }
  }
  for (const auto& e : res.errors) std::cerr << "error: " << e << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Waldschmidt constants of square-free principal Borel ideals"};
  app.require_subcommand(1);
  GlobalOptions opt;
  app.add_option("--cap", opt.cap, "Enumeration cap for generators and associated primes")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--approx", opt.approx, "Add 12-significant-digit decimal renderings");

  std::string monomial_text, rational_text, batch_path, method = "auto";
  bool verify_cover = false;
  unsigned smax = 4;

  auto* profile = app.add_subcommand("profile", "Jump profile T(m), IT(m), ell, nu");
  auto* gens = app.add_subcommand("gens", "Minimal generators of sfBorel(m)");
  auto* primes = app.add_subcommand("primes", "Associated primes of sfBorel(m)");
  auto* alpha = app.add_subcommand("alpha", "Waldschmidt constant or bounds");
  auto* oracle = app.add_subcommand("oracle", "alpha(I^(s))/s convergence table");
  for (auto* sub : {profile, gens, primes, alpha, oracle})
    sub->add_option("monomial", monomial_text, "Indices, e.g. 2,3,5 or 3..5,8..10")->required();
  primes->add_flag("--verify-cover", verify_cover, "Cross-check with minimal vertex covers");
  alpha->add_option("--method", method, "auto|lp|formula|upper|lower|interval")
      ->check(CLI::IsMember({"auto", "lp", "formula", "upper", "lower", "interval"}));
  oracle->add_option("--smax", smax, "Largest symbolic power")->check(CLI::PositiveNumber);
  auto* construct = app.add_subcommand("construct", "Monomial with Waldschmidt constant a/b");
  construct->add_option("fraction", rational_text, "Target a/b >= 1")->required();
  auto* batch = app.add_subcommand("batch", "Run auto mode on every line of a file");
  batch->add_option("file", batch_path, "One monomial per line, '#' comments")->required();
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  CommandResult res;
  res.command = app.get_subcommands().front()->get_name();
  try {
    if (res.command == "construct") {
      res.input = rational_text;
      cmd_construct(res, rational_text, opt);
    } else if (res.command == "batch") {
      res.input = batch_path;
      cmd_batch(res, batch_path, opt);
    } else {
      res.input = monomial_text;
      SquareFreeMonomial m = parse_monomial(monomial_text);
      res.input = m.to_string();
      if (res.command == "profile") cmd_profile(res, m);
      else if (res.command == "gens") cmd_gens(res, m, opt);
      else if (res.command == "primes") cmd_primes(res, m, opt, verify_cover);
      else if (res.command == "alpha") cmd_alpha(res, m, opt, method);
      else if (res.command == "oracle") cmd_oracle(res, m, opt, smax);
    }
  } catch (const std::exception& e) {
    res.errors.push_back(e.what());
  }

  if (opt.format == "json") {
    std::cout << res.to_json().dump(2) << "\n";
  } else if (opt.format == "csv") {
    render_csv(std::cout, res, opt);
  } else {
    render_text(std::cout, res);
  }
  return res.errors.empty() ? 0 : 1;
}
