#pragma once

// Command-line front end. `run` is separate from main so the tests can drive
// it in-process and compare output byte for byte.
//
// Exit codes: 0 success, 1 usage error, 2 guard refusal, 3 invariant failure
// (including a verification that reports DIFFER).

#include <hyperspec/hyperspec.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hyperspec::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kGuard = 2;
inline constexpr int kInvariant = 3;

struct Options {
  std::string kind;
  unsigned n = 0;
  unsigned m = 0;
  unsigned k = 0;
  unsigned q = 0;
  bool expand = false;
  bool closed_form = false;
  bool scaled = false;
  bool csv = false;
  bool clt = false;
  bool poisson = false;
  bool petal = false;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::string file;
  std::string out;
  bool inject_bug = false;
  bool single_point = false;
  std::uint64_t degree_guard = kDefaultDegreeGuard;
  std::size_t macaulay_guard = kDefaultMacaulayGuard;
};

namespace detail {

inline json coefficients_json(const IntPoly& p) {
  json c = json::array();
  for (const auto& v : p.coeffs()) c.push_back(bigint_to_json(v));
  return c;
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

inline std::string coeff_str(const RatPoly& p, long i) {
  return i <= p.degree() ? p.coeff(static_cast<std::size_t>(i)).get_str() : "0";
}

/// Compares two polynomials from the top degree down and writes the verdict.
/// Returns true on equality.
inline bool report_comparison(std::ostream& os, const RatPoly& closed, const RatPoly& oracle) {
  os << "closed form: " << closed.to_string("lambda") << "\n";
  os << "oracle:      " << oracle.to_string("lambda") << "\n";
  const long top = std::max(closed.degree(), oracle.degree());
  for (long i = top; i >= 0; --i) {
    if (closed.coeff(i) != oracle.coeff(i)) {
      os << "DIFFER at lambda^" << i << ": closed form " << coeff_str(closed, i) << ", oracle "
         << coeff_str(oracle, i) << "\n";
      return false;
    }
  }
  os << "EQUAL\n";
  return true;
}

/// Moves one unit of multiplicity from the zero eigenvalue to the eigenvalue
/// of largest modulus. Used to check that verify notices a wrong factor list.
inline FactoredCharPoly inject_multiplicity_bug(FactoredCharPoly f) {
  if (f.factors.empty()) throw PreconditionError("nothing to perturb: no nonzero eigenvalues");
  std::size_t target = 0;
  for (std::size_t i = 1; i < f.factors.size(); ++i) {
    if (std::abs(embed(f.factors[i].c)) > std::abs(embed(f.factors[target].c))) target = i;
  }
  auto zero = std::find_if(f.factors.begin(), f.factors.end(),
                           [](const CharFactor& c) { return c.c.is_zero() && c.d == 1; });
  if (zero != f.factors.end() && zero->mult > 0) {
    --zero->mult;
    if (zero->mult == 0) {
      const bool before = zero < f.factors.begin() + static_cast<long>(target);
      f.factors.erase(zero);
      if (before) --target;
    }
  } else if (f.lambda_exponent > 0) {
    --f.lambda_exponent;
  } else {
    throw PreconditionError("nothing to perturb: zero is not an eigenvalue");
  }
  ++f.factors[target].mult;
  return f;
}

/// Detects S(n,1,3): 2n+1 vertices, 3-uniform, one vertex in every edge,
/// the remaining pairs disjoint. Returns n.
inline std::optional<unsigned> as_single_seed_sunflower(const Hypergraph& h) {
  if (h.uniformity() != 3 || h.edges().empty()) return std::nullopt;
  const unsigned n = static_cast<unsigned>(h.edges().size());
  if (h.vertex_count() != 2 * n + 1) return std::nullopt;
  std::vector<unsigned> degree(h.vertex_count(), 0);
  for (const auto& e : h.edges())
    for (unsigned v : e) ++degree[v];
  unsigned seeds = 0;
  for (unsigned d : degree) {
    if (d == n) ++seeds;
    else if (d != 1) return std::nullopt;
  }
  if (n == 1 ? seeds != 3 : seeds != 1) return std::nullopt;
  return n;
}

inline std::optional<FactoredCharPoly> recognise(const Hypermatrix& a, std::uint64_t guard) {
  if (a.entries().empty()) return zero_char_poly(a.dim(), a.order(), guard);
  if (a == Hypermatrix::all_ones(a.dim(), a.order())) {
    return all_ones_char_poly(a.dim(), a.order(), guard);
  }
  return std::nullopt;
}

inline int verify_system(std::ostream& os, const std::vector<HomogPoly>& system,
                         const std::optional<FactoredCharPoly>& closed, unsigned dim,
                         unsigned order, std::size_t guard) {
  const auto oracle = characteristic_polynomial_oracle(system, guard);
  if (closed) {
    return report_comparison(os, to_rational(expand(*closed)), oracle.monic) ? kOk : kInvariant;
  }
  const BigInt want = ipow(BigInt(order - 1), dim - 1) * dim;
  os << "oracle: " << oracle.monic.to_string("lambda") << "\n";
  os << "no closed form for this input\n";
  if (BigInt(oracle.monic.degree()) != want) {
    os << "DIFFER: degree " << oracle.monic.degree() << ", expected " << want.get_str() << "\n";
    return kInvariant;
  }
  os << "degree " << want.get_str() << " as expected\n";
  return kOk;
}

/// D(2)/D'(2) for S(n,1,3) against the closed form at lambda = 2 times the
/// recorded normalization constant.
inline int verify_sunflower_single_point(std::ostream& os, unsigned n, std::uint64_t degree_guard,
                                         std::size_t guard) {
  const auto closed = sunflower_char_poly(n, degree_guard);
  const auto system = eigen_system(sunflower(n, 1, 3));
  const Rational t(2);
  const auto value = macaulay_quotient_at(system, t, guard);
  const auto constant = macaulay_leading_constant(system, guard);
  if (!value || !constant) {
    os << "reduced minor vanishes at the sample point; no verdict\n";
    return kInvariant;
  }
  const Rational want = Rational(expand(closed)(BigInt(2))) * *constant;
  os << "closed form at lambda=2: " << want.get_str() << "\n";
  os << "oracle at lambda=2:      " << value->get_str() << "\n";
  if (*value != want) {
    os << "DIFFER\n";
    return kInvariant;
  }
  os << "EQUAL\n";
  return kOk;
}

inline int cmd_charpoly(const Options& o, std::ostream& os) {
  FactoredCharPoly f;
  if (o.kind == "all-ones") {
    f = all_ones_char_poly(o.n, o.m, o.degree_guard);
  } else if (o.kind == "sunflower") {
    f = sunflower_char_poly(o.n, o.degree_guard);
  } else if (o.kind == "zero") {
    f = zero_char_poly(o.n, o.m, o.degree_guard);
  } else {
    throw PreconditionError("unknown kind " + o.kind);
  }
  json j = charpoly_to_json(f);
  if (o.expand) j["coefficients"] = coefficients_json(expand(f));
  os << j.dump(2) << "\n";
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& os) {
  if (o.kind == "all-ones") {
    auto f = all_ones_char_poly(o.n, o.m, o.degree_guard);
    if (o.inject_bug) f = inject_multiplicity_bug(f);
    return verify_system(os, eigen_system(Hypermatrix::all_ones(o.n, o.m)), f, o.n, o.m,
                         o.macaulay_guard);
  }
  if (o.kind == "sunflower") {
    if (o.single_point) return verify_sunflower_single_point(os, o.n, o.degree_guard, o.macaulay_guard);
    auto f = sunflower_char_poly(o.n, o.degree_guard);
    if (o.inject_bug) f = inject_multiplicity_bug(f);
    return verify_system(os, eigen_system(sunflower(o.n, 1, 3)), f, 2 * o.n + 1, 3,
                         o.macaulay_guard);
  }
  if (o.kind == "hypergraph") {
    if (o.file.empty()) throw PreconditionError("verify hypergraph needs --file");
    const Hypergraph h = hypergraph_from_json(load_json(o.file));
    std::optional<FactoredCharPoly> closed;
    if (auto n = as_single_seed_sunflower(h)) closed = sunflower_char_poly(*n, o.degree_guard);
    if (closed && o.inject_bug) closed = inject_multiplicity_bug(*closed);
    return verify_system(os, eigen_system(h), closed, h.vertex_count(), h.uniformity(),
                         o.macaulay_guard);
  }
  if (o.kind == "hypermatrix") {
    if (o.file.empty()) throw PreconditionError("verify hypermatrix needs --file");
    const Hypermatrix a = hypermatrix_from_json(load_json(o.file));
    auto closed = recognise(a, o.degree_guard);
    if (closed && o.inject_bug) closed = inject_multiplicity_bug(*closed);
    return verify_system(os, eigen_system(a), closed, a.dim(), a.order(), o.macaulay_guard);
  }
  throw PreconditionError("unknown verify target " + o.kind);
}

inline int cmd_measure(const Options& o, std::ostream& os) {
  const SpectralMeasure mu =
      o.closed_form ? closed_form_measure(o.n, o.m) : exact_measure(o.n, o.m, o.degree_guard);
  if (o.csv) {
    os << emit_scatter(mu, o.scaled);
  } else {
    if (o.scaled) throw PreconditionError("--scaled applies to --csv output");
    os << measure_to_json(mu).dump(2) << "\n";
  }
  return kOk;
}

inline int cmd_probe(const Options& o, std::ostream& os) {
  if (o.clt + o.poisson + o.petal != 1) {
    throw PreconditionError("probe needs exactly one of --clt, --poisson, --petal");
  }
  if (o.clt) {
    const auto mom = moment_check(o.n, o.m);
    os << "E[Re^2] = " << mom.re_sq.get_str() << "\n";
    os << "E[Im^2] = " << mom.im_sq.get_str() << "\n";
    os << "E[Re Im] = " << mom.re_im.get_str() << "\n";
    os << "sup distance to N(0,1/2): "
       << hyperspec::detail::format_double(clt_probe(o.n, o.m)) << "\n";
    const Rational half_n = make_rational(o.n, 2);
    if (mom.re_sq != half_n || mom.im_sq != half_n || mom.re_im != 0) {
      os << "moment identity FAILED\n";
      return kInvariant;
    }
    return kOk;
  }
  if (o.poisson) {
    const auto r = poisson_trials(o.trials, o.seed);
    os << "trials: " << r.trials << "\n";
    os << "rejected draws: " << r.rejected << "\n";
    os << "max relative error: " << hyperspec::detail::format_double(r.max_relative_error) << "\n";
    if (r.max_relative_error > 1e-6) {
      os << "FAIL\n";
      return kInvariant;
    }
    os << "OK\n";
    return kOk;
  }
  const auto p = petal_feasibility(o.k);
  os << p.solutions_per_petal.get_str() << (p.equal ? " = " : " != ")
     << p.required_per_petal.get_str()
     << (p.equal ? ": product formula applicable" : ": product formula not applicable") << "\n";
  return kOk;
}

inline int cmd_walks(const Options& o, std::ostream& os) {
  const auto t = walk_counts(o.n, o.q);
  if (o.csv) {
    os << walk_table_csv(t);
    return kOk;
  }
  json counts = json::array();
  for (const auto& [w, c] : t.counts) {
    counts.push_back({{"endpoint", cycint_to_json(w)}, {"count", bigint_to_json(c)}});
  }
  os << json{{"n", t.steps}, {"q", t.q}, {"counts", counts}}.dump(2) << "\n";
  return kOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characteristic polynomials and spectra of hypermatrices", "hyperspec"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  };
  auto guards = [&](CLI::App* sub) {
    sub->add_option("--degree-guard", o.degree_guard, "Largest characteristic polynomial degree");
    sub->add_option("--macaulay-guard", o.macaulay_guard, "Largest Macaulay matrix dimension");
  };

  auto* charpoly = app.add_subcommand("charpoly", "Factored characteristic polynomial");
  charpoly->add_option("kind", o.kind, "all-ones | sunflower | zero")
      ->required()
      ->check(CLI::IsMember({"all-ones", "sunflower", "zero"}));
  charpoly->add_option("--n", o.n, "Dimension, or petal count for sunflower")->required();
  charpoly->add_option("--m", o.m, "Order");
  charpoly->add_flag("--expand", o.expand, "Include expanded integer coefficients");
  common(charpoly);
  guards(charpoly);

  auto* verify = app.add_subcommand("verify", "Compare a closed form with the resultant oracle");
  verify->add_option("kind", o.kind, "all-ones | sunflower | hypergraph | hypermatrix")
      ->required()
      ->check(CLI::IsMember({"all-ones", "sunflower", "hypergraph", "hypermatrix"}));
  verify->add_option("--n", o.n, "Dimension, or petal count for sunflower");
  verify->add_option("--m", o.m, "Order");
  verify->add_option("--file", o.file, "JSON input for hypergraph or hypermatrix");
  verify->add_flag("--inject-mult-bug", o.inject_bug, "Perturb the closed form (self-test)");
  verify->add_flag("--single-point", o.single_point, "Sunflower: check only lambda = 2");
  common(verify);
  guards(verify);

  auto* measure = app.add_subcommand("measure", "Spectral measure of the all-ones hypermatrix");
  measure->add_option("--n", o.n, "Dimension")->required();
  measure->add_option("--m", o.m, "Order")->required();
  measure->add_flag("--closed-form", o.closed_form, "Use the closed forms (m = 2..5)");
  measure->add_flag("--scaled", o.scaled, "Divide atoms by sqrt(n) (CSV only)");
  measure->add_flag("--csv", o.csv, "Emit re,im,mass rows");
  common(measure);
  guards(measure);

  auto* probe = app.add_subcommand("probe", "Numeric probes");
  probe->add_flag("--clt", o.clt, "Moments and distance to the normal law");
  probe->add_flag("--poisson", o.poisson, "Random checks of the binary product formula");
  probe->add_flag("--petal", o.petal, "Petal solution count against the required count");
  probe->add_option("--n", o.n, "Steps");
  probe->add_option("--m", o.m, "Order");
  probe->add_option("--trials", o.trials, "Poisson trials");
  probe->add_option("--seed", o.seed, "Poisson seed");
  probe->add_option("--k", o.k, "Uniformity");
  common(probe);

  auto* walks = app.add_subcommand("walks", "Endpoint counts of root-of-unity walks");
  walks->add_option("--n", o.n, "Steps")->required();
  walks->add_option("--q", o.q, "Step-set order")->required();
  walks->add_flag("--csv", o.csv, "Emit re,im,count rows");
  common(walks);

  std::vector<std::string> argv_store;
  argv_store.push_back("hyperspec");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    if (charpoly->parsed()) {
      if (o.kind != "sunflower" && o.m == 0) throw PreconditionError("--m is required");
      code = detail::cmd_charpoly(o, buffer);
    } else if (verify->parsed()) {
      if ((o.kind == "all-ones" && (o.n == 0 || o.m == 0)) || (o.kind == "sunflower" && o.n == 0)) {
        throw PreconditionError("--n (and --m for all-ones) are required");
      }
      code = detail::cmd_verify(o, buffer);
    } else if (measure->parsed()) {
      code = detail::cmd_measure(o, buffer);
    } else if (probe->parsed()) {
      code = detail::cmd_probe(o, buffer);
    } else if (walks->parsed()) {
      code = detail::cmd_walks(o, buffer);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return kInvariant;
  } catch (const DegenerateResultant& e) {
    err << "degenerate: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::overflow_error& e) {
    err << "guard: " << e.what() << "\n";
    return kGuard;
  }

  if (o.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
    f << buffer.str();
  }
  return code;
}

}  // namespace hyperspec::cli
