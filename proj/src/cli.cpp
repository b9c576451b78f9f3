#include "grassmann/cli.hpp"

#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "grassmann/automorphisms.hpp"
#include "grassmann/canonical.hpp"
#include "grassmann/derivations.hpp"
#include "grassmann/errors.hpp"
#include "grassmann/normal.hpp"
#include "grassmann/random.hpp"
#include "grassmann/skew_derivations.hpp"
#include "grassmann/subspace.hpp"

namespace grassmann::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Session {
  int n = 0;
  Field field;
};

// Everything a subcommand may read, filled by CLI11.
struct Inputs {
  int n = 0;
  std::string field = "q";
  bool json = false;
  std::uint64_t seed = 1;
  int rounds = 20;
  std::string images;
  std::vector<std::string> positional;
  bool strict = false;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    out.push_back(trim(std::string_view(text).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<Element> parse_list(const std::string& text, const Session& s) {
  if (trim(text).empty()) throw ParseError("empty element list");
  std::vector<Element> out;
  for (const auto& item : split_list(text)) out.push_back(parse_element(item, s.n, s.field));
  if (static_cast<int>(out.size()) != s.n) {
    throw ParseError("expected " + std::to_string(s.n) + " comma-separated elements, got " +
                     std::to_string(out.size()));
  }
  return out;
}

Json strings(const std::vector<Element>& v) {
  Json out = Json::array();
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Json subspace_json(const Subspace& sub) {
  Json out = Json::object();
  out["dimension"] = sub.dimension();
  out["basis"] = strings(sub.basis());
  return out;
}

std::string render_value(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  if (v.is_array()) {
    const bool matrix = !v.empty() && v.front().is_array();
    std::string out = matrix ? "[" : "";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += matrix ? "; " : ", ";
      out += render_value(v[i]);
    }
    return matrix ? out + "]" : out;
  }
  return v.dump();
}

void render_text(const Json& result, std::ostream& out) {
  if (!result.is_object()) {
    out << render_value(result) << '\n';
    return;
  }
  for (const auto& [key, value] : result.items()) out << key << ": " << render_value(value) << '\n';
}

const std::string& single_positional(const Inputs& in, std::size_t index) {
  if (index >= in.positional.size()) throw ParseError("missing element argument");
  return in.positional[index];
}

Element positional_element(const Inputs& in, const Session& s, std::size_t index) {
  return parse_element(single_positional(in, index), s.n, s.field);
}

Json cmd_mul(const Inputs& in, const Session& s) {
  return to_string(positional_element(in, s, 0) * positional_element(in, s, 1));
}

Json cmd_apply_der(const Inputs& in, const Session& s) {
  return to_string(apply_derivation(Derivation(parse_list(in.images, s)), positional_element(in, s, 0)));
}

Json cmd_apply_sder(const Inputs& in, const Session& s) {
  return to_string(apply_skew(SkewDerivation(parse_list(in.images, s)), positional_element(in, s, 0)));
}

Json cmd_decompose_der(const Inputs& in, const Session& s) {
  const auto parts = decompose_derivation(Derivation(parse_list(in.images, s)));
  Json out = Json::object();
  out["even_coeffs"] = strings(parts.even_coeffs);
  out["inner_element"] = to_string(parts.inner_element);
  return out;
}

Json cmd_decompose_sder(const Inputs& in, const Session& s) {
  const auto parts = decompose_skew(SkewDerivation(parse_list(in.images, s)));
  Json out = Json::object();
  out["odd_coeffs"] = strings(parts.odd_coeffs);
  out["sad_element"] = to_string(parts.sad_element);
  return out;
}

Json cmd_canon(const Inputs& in, const Session& s) {
  const auto form = triangular_presentation(positional_element(in, s, 0));
  Json out = Json::object();
  out["a_" + std::to_string(s.n)] = form.top.to_string();
  for (std::size_t i = 0; i < form.b.size(); ++i) {
    out["b_" + std::to_string(i + 1)] = to_string(form.b[i]);
  }
  return out;
}

Json cmd_solve_xa(const Inputs& in, const Session& s) {
  std::string joined;
  for (const auto& p : in.positional) joined += (joined.empty() ? "" : ",") + p;
  const auto u = parse_list(joined, s);
  const XaResult r = solve_xa_system(u);
  Json out = Json::object();
  if (const auto* sol = std::get_if<XaSolution>(&r)) {
    out["solvable"] = true;
    out["particular"] = to_string(sol->particular);
    out["kernel"] = "K*" + to_string(sol->kernel);
  } else {
    const auto& f = std::get<XaFailure>(r);
    out["solvable"] = false;
    out["condition"] = f.condition == XaFailure::Condition::NotInIdeal ? "not_in_ideal" : "anticommutation";
    out["indices"] = f.condition == XaFailure::Condition::NotInIdeal ? Json::array({f.i})
                                                                       : Json::array({f.i, f.j});
    out["reason"] = f.describe();
  }
  return out;
}

Json cmd_factor_aut(const Inputs& in, const Session& s) {
  const auto f = factor_automorphism(Automorphism(parse_list(in.images, s)));
  Json out = Json::object();
  out["a"] = to_string(f.a);
  out["b"] = strings(f.b);
  out["A"] = matrix_json(f.A);
  return out;
}

Json cmd_is_normal(const Inputs& in, const Session& s) { return is_normal(positional_element(in, s, 0)); }

Json cmd_classify_normal(const Inputs& in, const Session& s) {
  const Element a = positional_element(in, s, 0);
  const int k = stratum(a);
  Json out = Json::object();
  if (k == 0) {
    const UnitReport r = classify_unit(a);
    out["stratum"] = "unit";
    out["lambda"] = r.lambda.to_string();
    out["orbit"] = to_string(r.report.orbit);
    out["witness"] = strings(r.report.witness.images());
    return out;
  }
  out["stratum"] = k;
  if (k != 1) {
    out["orbit"] = "unclassified";
    return out;
  }
  const OrbitReport r = classify_n1(a);
  out["orbit"] = to_string(r.orbit);
  out["witness"] = strings(r.witness.images());
  return out;
}

Json cmd_centre(const Inputs&, const Session& s) { return subspace_json(centre_basis(s.n, s.field)); }

Json cmd_diff_closure(const Inputs& in, const Session& s) {
  return subspace_json(differential_closure(positional_element(in, s, 0)));
}

Json cmd_sdiff_closure(const Inputs& in, const Session& s) {
  return subspace_json(skew_differential_closure(positional_element(in, s, 0)));
}

Json cmd_jordan(const Inputs& in, const Session& s) {
  const Derivation d(parse_list(in.images, s));
  Json out = Json::object();
  out["nilpotent"] = is_nilpotent(d);
  out["semisimple"] = is_semisimple(d);
  return out;
}

Json cmd_selfcheck(const Inputs& in, const Session& s) {
  Rng rng(in.seed);
  const int n = s.n;
  const Field f = s.field;
  std::vector<std::pair<std::string, std::function<bool()>>> ordered{
      {"derivation_decomposition",
       [&] {
         const Derivation d = random_derivation(rng, n, f);
         return reassemble(decompose_derivation(d)) == d;
       }},
      {"skew_decomposition",
       [&] {
         const SkewDerivation d = random_skew_derivation(rng, n, f);
         return reassemble(decompose_skew(d)) == d;
       }},
      {"triangular_presentation",
       [&] {
         const Element a = random_element(rng, n, f);
         return reassemble(triangular_presentation(a), n, f) == a;
       }},
      {"xa_solver",
       [&] {
         const Element a = random_element(rng, n, f);
         std::vector<Element> u;
         for (int i = 1; i <= n; ++i) u.push_back(left_multiply(generator_mask(i), a));
         const auto r = solve_xa_system(u);
         const auto* sol = std::get_if<XaSolution>(&r);
         if (sol == nullptr) return false;
         for (int i = 1; i <= n; ++i) {
           if (!(left_multiply(generator_mask(i), sol->particular) == u[static_cast<std::size_t>(i - 1)])) {
             return false;
           }
         }
         return true;
       }},
      {"factorization",
       [&] {
         const Automorphism sigma = random_automorphism(rng, n, f);
         return reassemble(factor_automorphism(sigma)) == sigma;
       }},
      {"orbit_witness",
       [&] {
         const Automorphism sigma = random_automorphism(rng, n, f);
         const Element a = apply_automorphism(sigma, Element::generator(n, f, 1));
         const OrbitReport r = classify_n1(a);
         return r.orbit == OrbitTag::X1 && apply_automorphism(r.witness, r.representative) == a;
       }},
  };
  Json out = Json::object();
  out["seed"] = in.seed;
  out["rounds"] = in.rounds;
  bool all = true;
  for (auto& [name, check] : ordered) {
    bool ok = true;
    for (int r = 0; r < in.rounds && ok; ++r) ok = check();
    out[name] = ok;
    all = all && ok;
  }
  out["passed"] = all;
  return out;
}

using Handler = Json (*)(const Inputs&, const Session&);

struct Command {
  const char* name;
  const char* help;
  Handler handler;
  bool images;
  int min_positional;
  int max_positional;
};

const Command kCommands[] = {
    {"mul", "Product A*B", cmd_mul, false, 2, 2},
    {"apply-der", "Apply the derivation with the given images to A", cmd_apply_der, true, 1, 1},
    {"apply-sder", "Apply the skew derivation with the given images to A", cmd_apply_sder, true, 1, 1},
    {"decompose-der", "Even coefficients and inner element of a derivation", cmd_decompose_der, true, 0, 0},
    {"decompose-sder", "Odd coefficients and sad element of a skew derivation", cmd_decompose_sder, true, 0, 0},
    {"canon", "Triangular presentation of A", cmd_canon, false, 1, 1},
    {"solve-xa", "Solve x_i a = u_i for a list u_1,...,u_n", cmd_solve_xa, false, 1, -1},
    {"factor-aut", "Factor an automorphism as omega_{1+a} gamma_b sigma_A", cmd_factor_aut, true, 0, 0},
    {"is-normal", "Whether A is normal", cmd_is_normal, false, 1, 1},
    {"classify-normal", "Stratum, orbit and witness of a normal element", cmd_classify_normal, false, 1, 1},
    {"centre", "Basis of the centre", cmd_centre, false, 0, 0},
    {"diff-closure", "Smallest differential ideal containing A", cmd_diff_closure, false, 1, 1},
    {"sdiff-closure", "Smallest skew differential ideal containing A", cmd_sdiff_closure, false, 1, 1},
    {"jordan", "Nilpotency and semisimplicity of a derivation", cmd_jordan, true, 0, 0},
    {"selfcheck", "Randomized consistency checks driven by --seed", cmd_selfcheck, false, 0, 0},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Inputs in;
  CLI::App app{"Exact computations in Grassmann algebras over Q and F_p", "grassmann"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--n", in.n, "Number of generators (1..16)")->required();
  app.add_option("--field", in.field, "Coefficient field: q or fp:<odd prime>");
  app.add_flag("--json", in.json, "Print {\"n\", \"field\", \"result\"} as JSON");
  app.add_option("--seed", in.seed, "Seed for selfcheck");

  std::map<const CLI::App*, const Command*> by_app;
  for (const auto& c : kCommands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    if (c.images) sub->add_option("--images", in.images, "Comma-separated images of x_1..x_n")->required();
    if (c.max_positional != 0) {
      auto* opt = sub->add_option("args", in.positional, "Element arguments");
      if (c.max_positional > 0) opt->expected(c.min_positional, c.max_positional);
      if (c.min_positional > 0) opt->required();
    }
    if (std::string(c.name) == "selfcheck") sub->add_option("--rounds", in.rounds, "Rounds per check");
    by_app[sub] = &c;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Command* command = nullptr;
  for (const auto* sub : app.get_subcommands()) command = by_app.at(sub);

  try {
    require_generator_count(in.n);
    const Session session{in.n, Field::parse(in.field)};
    const Json result = command->handler(in, session);
    if (in.json) {
      Json doc = Json::object();
      doc["n"] = session.n;
      doc["field"] = session.field.to_string();
      doc["result"] = result;
      out << doc.dump() << '\n';
    } else {
      render_text(result, out);
    }
    if (result.is_object() && result.contains("passed") && !result["passed"].get<bool>()) {
      return kExitDomain;
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FieldError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace grassmann::cli
