#include "ramify/cli/app.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ramify/cli/emit.hpp"
#include "ramify/cli/parse.hpp"
#include "ramify/error.hpp"

namespace ramify {

namespace {

struct Context {
  const RunConfig& cfg;
  Field field;
  LocalField K;
};

Json header(const Context& c) {
  Json j;
  j["command"] = c.cfg.command;
  j["field"] = Json{{"p", c.field.characteristic()}, {"n", c.field.degree()}};
  return j;
}

std::uint64_t need_k(const RunConfig& cfg) {
  if (!cfg.k) throw PreconditionError(cfg.command + " needs --k");
  return *cfg.k;
}

Polynomial need_modulus(const Context& c) {
  if (c.cfg.modulus.empty()) throw PreconditionError(c.cfg.command + " needs --modulus");
  return parse_polynomial(c.field, c.cfg.modulus);
}

void check_format(const RunConfig& cfg, bool csv, bool svg) {
  if ((cfg.format == "csv" && !csv) || (cfg.format == "svg" && !svg))
    throw PreconditionError("format " + cfg.format + " is not available for " + cfg.command);
}

void merge(Json& j, const Json& more) {
  for (const auto& [key, value] : more.items()) j[key] = value;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string coefficient_csv(const XSeries& s) {
  std::string o = "d,coefficient\n";
  for (std::size_t d = 0; d < s.size(); ++d) o += std::to_string(d) + "," + to_string(s[d]) + "\n";
  return o;
}

std::string identity_csv(const IdentityReport& r) {
  std::string o = "d,lhs,rhs,equal\n";
  for (std::size_t d = 0; d < std::max(r.lhs.size(), r.rhs.size()); ++d) {
    auto a = d < r.lhs.size() ? to_string(r.lhs[d]) : "";
    auto b = d < r.rhs.size() ? to_string(r.rhs[d]) : "";
    o += std::to_string(d) + "," + a + "," + b + "," + (a == b ? "1" : "0") + "\n";
  }
  return o;
}

LocalPolynomial local_polynomial(const Context& c, Json& h) {
  if (c.cfg.coeffs) {
    h["coeffs"] = *c.cfg.coeffs;
    return parse_local_polynomial(c.K, *c.cfg.coeffs);
  }
  auto k = need_k(c.cfg);
  h["k"] = k;
  return as_series(special_polynomial(c.field, k, c.cfg.budget));
}

std::string cmd_zeta(const Context& c) {
  check_format(c.cfg, true, false);
  auto z = special_polynomial(c.field, need_k(c.cfg), c.cfg.budget);
  if (c.cfg.format == "csv") return coefficient_csv(z.coefficients);
  Json j = header(c);
  j["k"] = z.k;
  j["bound"] = z.bound();
  j["guard_checked"] = z.guard_checked;
  j["coefficients"] = to_json(z.coefficients);
  Json text = Json::array();
  for (const auto& s : z.coefficients) text.push_back(to_string(s));
  j["text"] = std::move(text);
  return dump(j);
}

std::string cmd_zeroes(const Context& c) {
  check_format(c.cfg, true, false);
  Json j = header(c);
  auto f = local_polynomial(c, j);
  auto np = newton_polygon(f);
  auto reports = classify_zeroes(f, c.cfg.prec, c.cfg.depth);
  if (c.cfg.format == "csv") {
    std::string o = "valuation,count,verdict,ramification_index,residue_field_degree,witnesses\n";
    for (const auto& r : reports)
      o += to_string(r.valuation) + "," + std::to_string(r.count) + "," + to_string(r.verdict) + "," +
           std::to_string(r.ramification_index) + "," + std::to_string(r.residue_field_degree) + "," +
           std::to_string(r.witnesses.size()) + "\n";
    return o;
  }
  j["prec"] = c.cfg.prec;
  j["depth"] = c.cfg.depth;
  Json poly = Json::array();
  for (const auto& s : f) poly.push_back(to_json(s));
  j["polynomial"] = std::move(poly);
  j["polygon"] = to_json(np);
  j["rh_check"] = to_json(rh_check(np));
  Json rs = Json::array();
  for (const auto& r : reports) rs.push_back(to_json(r));
  j["reports"] = std::move(rs);
  j["reconstruction"] = to_json(reconstruct(f, reports));
  return dump(j);
}

std::string cmd_np(const Context& c) {
  check_format(c.cfg, true, true);
  Json j = header(c);
  auto f = local_polynomial(c, j);
  auto np = newton_polygon(f);
  if (c.cfg.format == "svg")
    return newton_svg(np, c.cfg.coeffs ? "Newton polygon of " + *c.cfg.coeffs
                                       : "Newton polygon of z_" + std::to_string(*c.cfg.k));
  if (c.cfg.format == "csv") {
    std::string o = "kind,index,length,value\n";
    for (const auto& v : np.vertices) o += "vertex," + std::to_string(v.index) + ",," + to_string(v.valuation) + "\n";
    for (const auto& s : np.segments)
      o += "segment," + std::to_string(s.start) + "," + std::to_string(s.length) + "," + to_string(s.slope) + "\n";
    return o;
  }
  j["polygon"] = to_json(np);
  j["rh_check"] = to_json(rh_check(np));
  return dump(j);
}

Json character_json(const CharacterSpec& s) {
  Json j;
  j["group_order"] = s.group_order;
  j["generator"] = to_json(s.generator);
  j["generator_text"] = to_string(s.generator);
  j["index"] = s.index;
  j["order"] = s.order;
  j["value_field"] = Json{{"p", s.value_field.characteristic()}, {"n", s.value_field.degree()}};
  j["omega"] = element_json(s.value_field, s.omega);
  return j;
}

Json modulus_header(const Context& c, const Polynomial& f) {
  Json j = header(c);
  j["modulus"] = to_json(f);
  j["modulus_text"] = to_string(f);
  j["k"] = need_k(c.cfg);
  j["deg"] = c.cfg.deg;
  return j;
}

std::string cmd_lfun(const Context& c) {
  check_format(c.cfg, true, false);
  auto f = need_modulus(c);
  auto spec = make_character(c.field, f, c.cfg.j);
  auto L = l_polynomial(spec, need_k(c.cfg), c.cfg.deg, c.cfg.budget);
  if (c.cfg.format == "csv") return coefficient_csv(L);
  Json j = modulus_header(c, f);
  j["character"] = character_json(spec);
  j["coefficients"] = to_json(L);
  return dump(j);
}

std::string cmd_dedekind(const Context& c) {
  check_format(c.cfg, true, false);
  auto f = need_modulus(c);
  auto sub = make_subgroup(c.field, f, c.cfg.beta);
  auto Z = subgroup_dedekind(sub, need_k(c.cfg), c.cfg.deg, c.cfg.budget);
  if (c.cfg.format == "csv") return coefficient_csv(Z);
  Json j = modulus_header(c, f);
  j["beta"] = sub.beta;
  j["coefficients"] = to_json(Z);
  return dump(j);
}

std::string cmd_factor_check(const Context& c) {
  check_format(c.cfg, true, false);
  auto f = need_modulus(c);
  auto sub = make_subgroup(c.field, f, c.cfg.beta);
  auto r = verify_factorization(sub, need_k(c.cfg), c.cfg.deg, c.cfg.budget);
  if (c.cfg.format == "csv") return identity_csv(r);
  auto F = common_value_field(sub);
  Json j = modulus_header(c, f);
  j["beta"] = sub.beta;
  j["common_field"] = Json{{"p", F.characteristic()}, {"n", F.degree()}};
  merge(j, to_json(r));
  return dump(j);
}

std::string cmd_as_check(const Context& c) {
  check_format(c.cfg, true, false);
  auto f = need_modulus(c);
  auto r = caveat_identity_check(f, need_k(c.cfg), c.cfg.deg, c.cfg.budget);
  if (c.cfg.format == "csv") return identity_csv(r);
  Json j = modulus_header(c, f);
  merge(j, to_json(r));
  return dump(j);
}

std::string cmd_euler_zero(const Context& c) {
  check_format(c.cfg, true, false);
  auto f = need_modulus(c);
  auto r = euler_factor_zero_report(f, need_k(c.cfg));
  if (c.cfg.format == "csv")
    return "degree,valuation,separable_degree,inseparable_degree,residue_degree,verdict,inseparable\n" +
           std::to_string(r.degree) + "," + to_string(r.valuation) + "," + std::to_string(r.separable_degree) + "," +
           std::to_string(r.inseparable_degree) + "," + std::to_string(r.residue_degree) + "," + r.verdict + "," +
           (r.inseparable ? "1" : "0") + "\n";
  Json j = header(c);
  j["modulus"] = to_json(f);
  j["modulus_text"] = to_string(f);
  j["k"] = need_k(c.cfg);
  j["report"] = to_json(r);
  return dump(j);
}

std::string cmd_period(const Context& c) {
  check_format(c.cfg, true, false);
  auto r = period_checks(c.field, c.cfg.prec);
  if (c.cfg.format == "csv")
    return "valuation,valuation_ok,power_in_k,exp_valuation,exp_vanishes\n" + to_string(r.valuation) + "," +
           (r.valuation_ok ? "1" : "0") + "," + (r.power_in_k ? "1" : "0") + "," + to_string(r.exp_valuation) + "," +
           (r.exp_vanishes ? "1" : "0") + "\n";
  Json j = header(c);
  j["prec"] = c.cfg.prec;
  j["twist"] = element_json(c.field, r.period.field().twist());
  merge(j, to_json(r));
  return dump(j);
}

std::string cmd_expc(const Context& c) {
  check_format(c.cfg, false, false);
  if (!c.cfg.z) throw PreconditionError("expc needs --z");
  auto z = parse_laurent(c.K, *c.cfg.z);
  auto e = carlitz_exp(z, c.cfg.prec);
  Json j = header(c);
  j["prec"] = c.cfg.prec;
  j["z"] = to_json(z);
  j["exp"] = to_json(e);
  j["exp_valuation"] = to_json(e.normalized_valuation());
  return dump(j);
}

MonomialMode parse_mode(const std::string& m) {
  if (m == "inverse") return MonomialMode::InverseExponents;
  if (m == "direct") return MonomialMode::DirectExponents;
  throw ParseError("unknown mode '" + m + "'");
}

std::string cmd_sq(const Context& c) {
  check_format(c.cfg, true, false);
  auto rho = parse_permutation(c.cfg.perm);
  const auto q = c.field.order();
  Json j = header(c);
  j["perm"] = rho.to_string();
  if (c.cfg.z) {
    auto mode = parse_mode(c.cfg.mode);
    auto s = parse_laurent(c.K, *c.cfg.z);
    auto image = act_laurent(rho, s, mode);
    if (c.cfg.format == "csv") throw PreconditionError("format csv is not available for sq --z");
    j["mode"] = to_string(mode);
    j["series"] = to_json(s);
    j["image"] = to_json(image);
    return dump(j);
  }
  PAdicDigits y = c.cfg.ydigits ? parse_digits(q, *c.cfg.ydigits)
                  : c.cfg.y     ? PAdicDigits::from_integer(q, parse_integer(*c.cfg.y))
                                : throw PreconditionError("sq needs --y, --ydigits or --z");
  auto image = act_padic(rho, y);
  if (c.cfg.format == "csv") {
    auto show = [](const PAdicDigits& d) {
      auto v = d.to_integer();
      return v ? std::to_string(*v) : std::string("");
    };
    return "input,output\n" + show(y) + "," + show(image) + "\n";
  }
  j["input"] = to_json(y);
  j["output"] = to_json(image);
  return dump(j);
}

std::string cmd_sq_orbit(const Context& c) {
  check_format(c.cfg, false, false);
  auto rho = parse_permutation(c.cfg.perm);
  auto r = zero_orbit_experiment(c.field, need_k(c.cfg), rho, c.cfg.prec);
  Json j = header(c);
  j["perm"] = rho.to_string();
  j["prec"] = c.cfg.prec;
  merge(j, to_json(r));
  return dump(j);
}

const std::map<std::string, std::function<std::string(const Context&)>>& table() {
  static const std::map<std::string, std::function<std::string(const Context&)>> t = {
      {"zeta", cmd_zeta},           {"zeroes", cmd_zeroes},   {"np", cmd_np},
      {"lfun", cmd_lfun},           {"dedekind", cmd_dedekind}, {"factor-check", cmd_factor_check},
      {"as-check", cmd_as_check},   {"euler-zero", cmd_euler_zero}, {"period", cmd_period},
      {"expc", cmd_expc},           {"sq", cmd_sq},           {"sq-orbit", cmd_sq_orbit},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"zeta",       "zeroes", "np",     "lfun", "dedekind", "factor-check",
                                                 "as-check",   "euler-zero", "period", "expc", "sq",       "sq-orbit"};
  return names;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    auto it = table().find(cfg.command);
    if (it == table().end()) throw ParseError("unknown subcommand '" + cfg.command + "'");
    if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "svg")
      throw ParseError("unknown format '" + cfg.format + "'");
    if (cfg.prec <= 0) throw PreconditionError("--prec must be positive");
    Field F = Field::make(cfg.p, cfg.n);
    Context c{cfg, F, LocalField(F)};
    std::string artifact = it->second(c);
    if (cfg.out.empty()) {
      out << artifact;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) throw PreconditionError("cannot open " + cfg.out);
      f << artifact;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"ramify: zeta, L-series and ramification of zeroes over F_q[t]"};
  app.add_option("command", cfg.command, "subcommand")->required()->check(CLI::IsMember(subcommands()));
  app.add_option("--p", cfg.p, "characteristic");
  app.add_option("--n", cfg.n, "q = p^n");
  app.add_option("--k", cfg.k, "zeta or L-series argument -k");
  app.add_option("--y", cfg.y, "integer y for sq");
  app.add_option("--ydigits", cfg.ydigits, "base-q digits of y for sq: d0,d1,...[;zero|full|trunc]");
  app.add_option("--coeffs", cfg.coeffs, "local polynomial c0;c1;... over K for zeroes and np");
  app.add_option("--z", cfg.z, "element of K for expc and sq");
  app.add_option("--modulus", cfg.modulus, "conductor f, e.g. t^2+1");
  app.add_option("--beta", cfg.beta, "subgroup index");
  app.add_option("--j", cfg.j, "character index");
  app.add_option("--perm", cfg.perm, "digit permutation, e.g. 0>1,1>0");
  app.add_option("--mode", cfg.mode, "monomial action for sq --z: inverse|direct");
  app.add_option("--prec", cfg.prec, "precision in 1/t-digits");
  app.add_option("--deg", cfg.deg, "degree bound D in x");
  app.add_option("--depth", cfg.depth, "classifier recursion depth");
  app.add_option("--format", cfg.format, "json|csv|svg")->check(CLI::IsMember({"json", "csv", "svg"}));
  app.add_option("--out", cfg.out, "output path");
  auto* budget = app.add_option("--budget", cfg.budget, "enumeration budget");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  if (budget->count() == 0)
    if (const char* env = std::getenv("RAMIFY_BUDGET")) {
      try {
        cfg.budget = static_cast<std::uint64_t>(parse_integer(env));
      } catch (const ParseError& e) {
        err << "parse error: RAMIFY_BUDGET: " << e.what() << "\n";
        return kExitParse;
      }
    }
  return run(cfg, out, err);
}

}  // namespace ramify
