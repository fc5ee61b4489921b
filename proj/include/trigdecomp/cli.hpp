#pragma once

// Command-line front end. `run` parses arguments, dispatches a subcommand and
// writes the rendered result; it returns the process exit code
// (0 success, 1 mathematical negative, 2 usage or input error).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "trigdecomp/decompose.hpp"
#include "trigdecomp/errors.hpp"
#include "trigdecomp/moments.hpp"
#include "trigdecomp/ritt.hpp"
#include "trigdecomp/text.hpp"

namespace trigdecomp::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

namespace detail {

inline Ring parse_ring(const std::string& s) {
  if (s == "trig") return Ring::Trig;
  if (s == "laurent") return Ring::Laurent;
  if (s == "poly") return Ring::Poly;
  throw DomainError("unknown ring '" + s + "'");
}

template <class T>
std::string any_text(const T& v) {
  return to_text(v);
}

inline std::string outer_text(const Decomposition& d) {
  return std::visit([](const auto& o) { return any_text(o); }, d.outer);
}
inline std::string inner_text(const Decomposition& d) {
  return std::visit([](const auto& o) { return any_text(o); }, d.inner);
}

struct Input {
  bool laurent = false;
  Quadruple q;
  LaurentQuadruple lq;
};

inline std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

inline std::string field(const Json& j, const char* a, const char* b) {
  if (j.contains(a)) return j.at(a).get<std::string>();
  if (j.contains(b)) return j.at(b).get<std::string>();
  throw DomainError(std::string("quadruple document lacks \"") + a + "\"");
}

// One JSON path, "P1 @ w1" "=" "P2 @ w2", or four expressions.
inline Input read_input(const std::vector<std::string>& args) {
  Input in;
  if (args.size() == 1) {
    Json j;
    try {
      j = Json::parse(read_all(args[0]));
    } catch (const nlohmann::json::parse_error& e) {
      throw DomainError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("schema") || j.at("schema") != kSchema) {
      throw DomainError("quadruple document needs \"schema\": 1");
    }
    if (j.value("ring", std::string("trig")) == "laurent") {
      in.laurent = true;
      in.lq = {parse_complex_poly(field(j, "P1", "P1")), parse_laurent(field(j, "W1", "w1")),
               parse_complex_poly(field(j, "P2", "P2")), parse_laurent(field(j, "W2", "w2"))};
      return in;
    }
    in.q = {parse_real_poly(field(j, "P1", "P1")), parse_trig(field(j, "w1", "W1")),
            parse_real_poly(field(j, "P2", "P2")), parse_trig(field(j, "w2", "W2"))};
    return in;
  }
  if (args.size() == 3 && args[1] == "=") {
    auto [p1, w1] = parse_composition(args[0]);
    auto [p2, w2] = parse_composition(args[2]);
    in.q = {p1, w1, p2, w2};
    return in;
  }
  if (args.size() == 4) {
    in.q = {parse_real_poly(args[0]), parse_trig(args[1]), parse_real_poly(args[2]), parse_trig(args[3])};
    return in;
  }
  throw DomainError("expected a JSON file, \"P1 @ w1\" \"=\" \"P2 @ w2\", or four expressions");
}

inline Json quadruple_json(const Quadruple& q) {
  return Json{{"schema", kSchema}, {"ring", "trig"},         {"P1", to_text(q.P1)},
              {"w1", to_text(q.w1)}, {"P2", to_text(q.P2)}, {"w2", to_text(q.w2)}};
}

inline Json witness_json(const SolutionWitness& w) {
  Json j{{"schema", kSchema}, {"case_label", to_string(w.label)}, {"swapped", w.swapped},
         {"U", to_text(w.U)},  {"P1t", to_text(w.P1t)},          {"P2t", to_text(w.P2t)}};
  Json t;
  if (w.label == CaseLabel::A || w.label == CaseLabel::B) {
    j["W1"] = to_text(w.W1);
    j["W2"] = to_text(w.W2);
    j["w"] = to_text(w.w);
    t = Json{{"X1", to_text(w.X1)}, {"Y1", to_text(w.Y1)}, {"X2", to_text(w.X2)}, {"Y2", to_text(w.Y2)}};
  } else {
    j["w1t"] = to_text(w.w1t);
    j["w2t"] = to_text(w.w2t);
    j["k"] = w.k;
    j["b"] = to_text(w.b);
    t = Json{{"X1", to_text(w.X1)}, {"Y1", to_text(w.Y1t)}, {"X2", to_text(w.X2)}, {"Y2", to_text(w.Y2t)}};
  }
  j["templates"] = t;
  j["adjusters"] = Json::array({to_text(w.mu1), to_text(w.mu2)});
  Json p;
  switch (w.label) {
    case CaseLabel::A:
      p = Json{{"n", w.n}, {"r", w.r}, {"R", to_text(w.R)}};
      break;
    case CaseLabel::B:
      p = Json{{"n", w.n}, {"m", w.m}};
      break;
    case CaseLabel::C:
      p = Json{{"S", to_text(w.S)}};
      break;
    default:
      p = Json{{"n", w.n}, {"m", w.m}, {"l", w.l}, {"s", w.s}};
      break;
  }
  j["params"] = p;
  return j;
}

template <class V>
Json moments_json(const std::string& ring, int max_i, const MomentReport<V>& r) {
  Json vals = Json::array();
  for (const auto& v : r.moments) vals.push_back(to_string(v));
  Json j{{"schema", kSchema}, {"ring", ring}, {"max_i", max_i}, {"moments", vals}, {"all_vanish", r.all_vanish}};
  j["first_nonzero"] = r.first_nonzero ? Json(*r.first_nonzero) : Json(nullptr);
  return j;
}

template <class V>
void moments_text(std::ostream& out, const MomentReport<V>& r) {
  for (std::size_t i = 0; i < r.moments.size(); ++i) out << "i=" << i << ": " << to_string(r.moments[i]) << "\n";
  out << "all_vanish: " << (r.all_vanish ? "true" : "false") << "\n";
  out << "first_nonzero: " << (r.first_nonzero ? std::to_string(*r.first_nonzero) : "none") << "\n";
}

// There are no short options, so "-z^2 + 1" is an expression, not a flag.
inline std::string shield_leading_minus(const std::string& a) {
  if (a.size() < 2 || a[0] != '-' || a[1] == '-') return a;
  const bool numeric = a.find_first_not_of("0123456789", 1) == std::string::npos;
  return numeric ? a : " " + a;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decompositions of trigonometric and Laurent polynomials", "trigdecomp"};
  app.require_subcommand(1);

  std::string ring = "trig", expr, expr2;
  bool json = false, expect_some = false, inverse = false, use_psi = false;
  int max_degree = kDefaultDegreeCap, max_i = 10, classify_cap = 32;
  std::vector<std::string> quad;

  auto* phi_cmd = app.add_subcommand("phi", "Map a trigonometric polynomial to its Laurent image");
  phi_cmd->add_option("expr", expr, "expression")->required();
  phi_cmd->add_flag("--inverse", inverse, "map a self-reciprocal Laurent polynomial back");
  phi_cmd->add_flag("--psi", use_psi, "rewrite in x = tan(t/2) instead");

  auto* compose_cmd = app.add_subcommand("compose", "Compose an outer polynomial with an inner element");
  compose_cmd->add_option("outer", expr, "polynomial in z")->required();
  compose_cmd->add_option("inner", expr2, "inner element")->required();
  compose_cmd->add_option("--ring", ring, "ring of the inner element")->check(CLI::IsMember({"trig", "laurent", "poly"}));

  auto* dec_cmd = app.add_subcommand("decompose", "List the decompositions of an element");
  dec_cmd->add_option("expr", expr, "expression")->required();
  dec_cmd->add_option("--ring", ring, "ring")->check(CLI::IsMember({"trig", "laurent", "poly"}));
  dec_cmd->add_option("--max-degree", max_degree, "degree cap");
  dec_cmd->add_flag("--json", json, "JSON output");
  dec_cmd->add_flag("--expect-some", expect_some, "exit 1 when nothing decomposes");

  std::string fam_case;
  FamilyParams fp;
  std::string fam_R, fam_S, fam_U, fam_w, fam_W, fam_b;
  std::optional<int> fam_eps;
  auto* fam_cmd = app.add_subcommand("family", "Generate a solution of P1∘w1 = P2∘w2");
  fam_cmd->add_option("case", fam_case, "a, b, c, d, or Laurent case 1..5")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "d", "1", "2", "3", "4", "5"}));
  fam_cmd->add_option("--n", fp.n);
  fam_cmd->add_option("--m", fp.m);
  fam_cmd->add_option("--r", fp.r);
  fam_cmd->add_option("--l", fp.l);
  fam_cmd->add_option("--s", fp.s);
  fam_cmd->add_option("--k", fp.k, "inner shift θ -> kθ + b");
  fam_cmd->add_option("--b", fam_b, "shift angle, a multiple of pi/12 such as pi/4");
  fam_cmd->add_option("--R", fam_R, "polynomial R of case a / 1");
  fam_cmd->add_option("--S", fam_S, "polynomial S of case c / 3");
  fam_cmd->add_option("--U", fam_U, "outer polynomial composed on the left");
  fam_cmd->add_option("--w", fam_w, "base inner of cases a and b");
  fam_cmd->add_option("--W", fam_W, "Laurent right factor of cases 1..5");
  fam_cmd->add_option("--eps", fam_eps, "case 4: epsilon = exp(i*pi*j/12)");
  fam_cmd->add_flag("--json", json, "print a quadruple document");

  auto* cls_cmd = app.add_subcommand("classify", "Classify a solution and print its witness as JSON");
  cls_cmd->add_option("input", quad, "JSON file, \"P1 @ w1\" = \"P2 @ w2\", or P1 w1 P2 w2")->required();
  cls_cmd->add_option("--max-degree", classify_cap, "degree cap");

  auto* ver_cmd = app.add_subcommand("verify", "Check P1∘w1 = P2∘w2 exactly");
  ver_cmd->add_option("input", quad, "JSON file, \"P1 @ w1\" = \"P2 @ w2\", or P1 w1 P2 w2")->required();

  auto* mom_cmd = app.add_subcommand("moments", "Exact moments of p^i dq");
  mom_cmd->add_option("p", expr, "p")->required();
  mom_cmd->add_option("q", expr2, "q")->required();
  mom_cmd->add_option("--ring", ring, "ring")->check(CLI::IsMember({"trig", "poly"}));
  mom_cmd->add_option("--max-i", max_i, "largest moment index");
  mom_cmd->add_flag("--json", json, "JSON output");

  try {
    std::vector<std::string> rev;
    for (auto it = args.rbegin(); it != args.rend(); ++it) rev.push_back(detail::shield_leading_minus(*it));
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (phi_cmd->parsed()) {
      if (inverse) {
        out << to_text(phi_inverse(parse_laurent(expr))) << "\n";
      } else if (use_psi) {
        auto [n, d] = psi(parse_trig(expr));
        out << "(" << to_text(n, "x") << ")/(" << to_text(d, "x") << ")\n";
      } else {
        out << to_text(phi(parse_trig(expr))) << "\n";
      }
      return 0;
    }
    if (compose_cmd->parsed()) {
      switch (detail::parse_ring(ring)) {
        case Ring::Trig: out << to_text(trig_compose(parse_real_poly(expr), parse_trig(expr2))) << "\n"; break;
        case Ring::Laurent: out << to_text(compose_outer(parse_complex_poly(expr), parse_laurent(expr2))) << "\n"; break;
        case Ring::Poly: out << to_text(compose(parse_complex_poly(expr), parse_complex_poly(expr2))) << "\n"; break;
      }
      return 0;
    }
    if (dec_cmd->parsed()) {
      std::vector<Decomposition> ds;
      switch (detail::parse_ring(ring)) {
        case Ring::Trig: ds = trig_decompose(parse_trig(expr), max_degree); break;
        case Ring::Laurent: ds = enumerate_decompositions(parse_laurent(expr), max_degree); break;
        case Ring::Poly: {
          const ComplexPoly p = parse_complex_poly(expr);
          if (auto rp = as_real(p)) {
            ds = enumerate_poly_decompositions(*rp, max_degree);
          } else {
            ds = enumerate_poly_decompositions(p, max_degree);
          }
          break;
        }
      }
      if (json) {
        Json list = Json::array();
        for (const auto& d : ds) {
          list.push_back(Json{{"kind", to_string(d.kind)},
                              {"outer", detail::outer_text(d)},
                              {"inner", detail::inner_text(d)},
                              {"adjuster", to_text(d.adjuster)}});
        }
        out << Json{{"schema", kSchema}, {"ring", ring}, {"input", expr}, {"decompositions", list}}.dump(2) << "\n";
      } else if (ds.empty()) {
        out << "no decompositions\n";
      } else {
        for (const auto& d : ds) {
          out << to_string(d.kind) << ": " << detail::outer_text(d) << " @ " << detail::inner_text(d) << "\n";
        }
      }
      return ds.empty() && expect_some ? 1 : 0;
    }
    if (fam_cmd->parsed()) {
      if (fam_case.size() == 1 && fam_case[0] >= 'a') {
        if (!fam_R.empty()) fp.R = parse_real_poly(fam_R);
        if (!fam_S.empty()) fp.S = parse_real_poly(fam_S);
        if (!fam_U.empty()) fp.U = parse_real_poly(fam_U);
        if (!fam_w.empty()) fp.w = parse_trig(fam_w);
        if (!fam_b.empty()) fp.b = parse_angle(fam_b);
        const Family f = gen_family(fam_case[0], fp);
        if (json) {
          Json j = detail::quadruple_json(f.q);
          j["family"] = fam_case;
          out << j.dump(2) << "\n";
        } else {
          out << "P1 = " << to_text(f.q.P1) << "\nw1 = " << to_text(f.q.w1) << "\nP2 = " << to_text(f.q.P2)
              << "\nw2 = " << to_text(f.q.w2) << "\n";
        }
        return 0;
      }
      LaurentFamilyParams lp;
      lp.n = fp.n;
      lp.m = fp.m;
      lp.r = fp.r;
      lp.l = fp.l;
      lp.epsilon_index = fam_eps;
      if (!fam_R.empty()) lp.R = parse_complex_poly(fam_R);
      if (!fam_S.empty()) lp.S = parse_complex_poly(fam_S);
      if (!fam_U.empty()) lp.U = parse_complex_poly(fam_U);
      if (!fam_W.empty()) lp.W = parse_laurent(fam_W);
      const LaurentFamily f = gen_laurent_family(std::stoi(fam_case), lp);
      if (json) {
        out << Json{{"schema", kSchema},          {"ring", "laurent"},           {"family", fam_case},
                    {"P1", to_text(f.q.P1)},     {"W1", to_text(f.q.W1)},       {"P2", to_text(f.q.P2)},
                    {"W2", to_text(f.q.W2)}}
                   .dump(2)
            << "\n";
      } else {
        out << "P1 = " << to_text(f.q.P1) << "\nW1 = " << to_text(f.q.W1) << "\nP2 = " << to_text(f.q.P2)
            << "\nW2 = " << to_text(f.q.W2) << "\n";
      }
      return 0;
    }
    if (cls_cmd->parsed()) {
      const auto in = detail::read_input(quad);
      if (in.laurent) throw DomainError("classify takes real trigonometric quadruples");
      out << detail::witness_json(classify_solution(in.q, classify_cap)).dump(2) << "\n";
      return 0;
    }
    if (ver_cmd->parsed()) {
      const auto in = detail::read_input(quad);
      const bool ok = in.laurent ? verify_laurent_solution(in.lq) : verify_solution(in.q);
      out << (ok ? "true" : "false") << "\n";
      return ok ? 0 : 1;
    }
    if (mom_cmd->parsed()) {
      if (detail::parse_ring(ring) == Ring::Trig) {
        const auto r = trig_moments_vanish(parse_trig(expr), parse_trig(expr2), max_i);
        if (json) {
          out << detail::moments_json(ring, max_i, r).dump(2) << "\n";
        } else {
          detail::moments_text(out, r);
        }
      } else {
        const auto r = poly_moments_vanish(parse_real_poly(expr), parse_real_poly(expr2), max_i);
        if (json) {
          out << detail::moments_json(ring, max_i, r).dump(2) << "\n";
        } else {
          detail::moments_text(out, r);
        }
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace trigdecomp::cli
