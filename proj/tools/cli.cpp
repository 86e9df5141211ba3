#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "topochar/characteristics.hpp"
#include "topochar/cohomology.hpp"
#include "topochar/errors.hpp"
#include "topochar/exact_linalg.hpp"
#include "topochar/generators.hpp"
#include "topochar/io.hpp"
#include "topochar/product.hpp"
#include "topochar/recognizers.hpp"

namespace topochar::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Config {
  std::string input;
  std::string with;
  std::string output;
  std::string suite;
  std::string what;
  std::string route = "order";
  std::string set_a;
  std::string set_b;
  std::string set;
  int m = 1;
  int k = 1;
  int d = 0;
  int pairs = 200;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;  // 0: the command's default
  unsigned threads = 1;
  bool allow_closed = false;
  bool json = false;
  GeneratorSpec gen;
  std::string left;
  std::string right;
};

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

Json integer_json(const Integer& v) {
  try {
    return v.to_int64();
  } catch (const std::overflow_error&) {
    return v.to_string();
  }
}

Json simplex_json(const Simplex& x) {
  Json a = Json::array();
  for (VertexId v : x.vertices()) a.push_back(v);
  return a;
}

std::string plain(const Json& j) {
  if (!j.is_object()) return j.dump();
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (!out.empty()) out += ' ';
    out += key + '=' + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

void emit(const Json& j, const Config& c, std::ostream& out) {
  out << (c.json ? j.dump() : plain(j)) << '\n';
}

Json report_json(const EnergyReport& r) { return Json::parse(to_json(r)); }

// star:1-2,3 / core:1-2 / set:1-2,2 / all / none. Commas separate simplices,
// dashes separate the vertices of one simplex.
SimplexSubset parse_set(const Complex& g, const std::string& token) {
  if (token == "all") return SimplexSubset::all(g);
  if (token == "none") return SimplexSubset::none(g);
  const auto colon = token.find(':');
  if (colon == std::string::npos) throw InputError("bad set token '" + token + "'");
  const std::string kind = token.substr(0, colon);
  std::vector<Simplex> listed;
  std::stringstream items(token.substr(colon + 1));
  std::string item;
  while (std::getline(items, item, ',')) {
    std::vector<VertexId> vs;
    std::stringstream parts(item);
    std::string part;
    while (std::getline(parts, part, '-')) {
      try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(part, &used);
        if (used != part.size()) throw std::invalid_argument(part);
        vs.push_back(static_cast<VertexId>(v));
      } catch (const std::logic_error&) {
        throw InputError("bad vertex '" + part + "' in set token '" + token + "'");
      }
    }
    listed.emplace_back(std::move(vs));
  }
  if (listed.empty()) throw InputError("empty set token '" + token + "'");
  const SimplexSubset base = SimplexSubset::of(g, listed);
  if (kind == "set") return base;
  if (kind == "core") return closure(base);
  if (kind == "star") {
    Membership m(g.size());
    for (std::uint32_t i : base.indices())
      for (std::uint32_t c : g.cofaces(i)) m.set(c);
    return SimplexSubset(g, std::move(m));
  }
  throw InputError("unknown set kind '" + kind + "'");
}

// Collects many checks into one report: the first failure, or the last pass.
struct Aggregate {
  EnergyReport shown;
  std::size_t checks = 0;
  std::size_t failures = 0;

  void add(const EnergyReport& r) {
    ++checks;
    if (!r.pass && failures++ == 0) shown = r;
    if (failures == 0) shown = r;
  }

  Json json(const std::string& suite, int m, int k, double ms) const {
    Json j = report_json(shown);
    j["suite"] = suite;
    j["m"] = m;
    j["k"] = k;
    j["pass"] = failures == 0;
    j["elapsed_ms"] = ms;
    j["checks"] = checks;
    j["failures"] = failures;
    return j;
  }
};

int finish(const Json& j, const Config& c, std::ostream& out) {
  emit(j, c, out);
  return j.value("pass", false) ? kPass : kFail;
}

int cmd_info(const Config& c, std::ostream& out) {
  const Complex g = read_complex(c.input);
  Json j;
  j["f_vector"] = f_vector(g).counts;
  j["dimension"] = g.dimension();
  j["n_simplices"] = g.size();
  j["w1"] = characteristic(g, 1);
  j["w2"] = characteristic(g, 2);
  j["w3"] = characteristic(g, 3);
  j["fermi"] = fermi(g);
  emit(j, c, out);
  return kPass;
}

int cmd_verify(const Config& c, std::ostream& out) {
  const Complex g = read_complex(c.input);
  SumOptions opts;
  opts.threads = c.threads;
  if (c.budget) opts.budget = c.budget;
  const auto start = Clock::now();
  const std::string& s = c.suite;

  if (s == "energy") return finish(report_json(energy_sum(g, c.m, c.k, opts)), c, out);
  if (s == "energy-ball") return finish(report_json(energy_ball_sum(g, c.m, c.k, opts)), c, out);
  if (s == "sphere") return finish(report_json(sphere_sum(g, c.m, c.k, opts)), c, out);
  if (s == "dual-sphere") return finish(report_json(dual_sphere_sum(g, c.m, c.k, opts)), c, out);

  if (s == "valuation") {
    if (!c.set_a.empty() || !c.set_b.empty()) {
      const SimplexSubset a = parse_set(g, c.set_a.empty() ? "none" : c.set_a);
      const SimplexSubset b = parse_set(g, c.set_b.empty() ? "none" : c.set_b);
      if (is_open(a) && is_open(b))
        return finish(report_json(valuation_check(OpenSet(a), OpenSet(b), c.m)), c, out);
      if (!c.allow_closed) throw DomainError("valuation sets must be open (see --allow-closed)");
      return finish(report_json(valuation_identity(a, b, c.m)), c, out);
    }
    SplitMix64 rng(c.seed);
    Aggregate agg;
    for (int p = 0; p < c.pairs; ++p) {
      const OpenSet u(random_open_set(g, rng));
      const OpenSet v(random_open_set(g, rng));
      agg.add(valuation_check(u, v, c.m));
    }
    return finish(agg.json(s, c.m, 0, ms_since(start)), c, out);
  }

  if (s == "local-valuation") {
    if (c.k < 1) throw InputError("k must be at least 1");
    Aggregate agg;
    for (int j = 1; j <= c.k; ++j) {
      Configuration x(static_cast<std::size_t>(j), 0);
      if (g.empty()) break;
      for (;;) {
        agg.add(local_valuation_check(g, x, c.m));
        std::size_t i = x.size();
        while (i > 0 && x[i - 1] + 1 == g.size()) x[--i] = 0;
        if (i == 0) break;
        ++x[i - 1];
      }
    }
    return finish(agg.json(s, c.m, c.k, ms_since(start)), c, out);
  }

  EnergyReport r;
  r.suite = s;
  r.m = c.m;
  r.n_simplices = g.size();
  if (s == "green-inverse") {
    const IntMatrix l = connection_matrix(g);
    const IntMatrix prod = l * green_matrix(g);
    const IntMatrix id = IntMatrix::Identity(l.rows(), l.cols());
    Value agree = 0;
    for (Eigen::Index i = 0; i < l.rows(); ++i)
      for (Eigen::Index j = 0; j < l.cols(); ++j) agree += prod(i, j) == id(i, j);
    r.lhs = agree;
    r.rhs = static_cast<Value>(l.size());
  } else if (s == "det-fermi") {
    r.lhs = det(connection_matrix(g)).to_int64();
    r.rhs = fermi(g);
  } else if (s == "barycentric") {
    r.lhs = characteristic(barycentric(g), c.m);
    r.rhs = characteristic(g, c.m);
  } else if (s == "product") {
    if (c.with.empty()) throw InputError("the product suite needs --with");
    const Complex h = read_complex(c.with);
    r.lhs = characteristic(topological_product(g, h), c.m);
    r.rhs = checked_mul(characteristic(g, c.m), characteristic(h, c.m));
  } else {
    throw InputError("unknown suite '" + s + "'");
  }
  r.pass = r.lhs == r.rhs;
  r.elapsed_ms = ms_since(start);
  return finish(report_json(r), c, out);
}

void write_output(const Complex& g, const Config& c, std::ostream& out) {
  if (c.output.empty()) {
    write_facets(out, g);
    return;
  }
  std::ofstream f(c.output);
  if (!f) throw InputError("cannot write " + c.output);
  write_facets(f, g);
}

int cmd_generate(const Config& c, std::ostream& out) {
  write_output(generate(c.gen), c, out);
  return kPass;
}

int cmd_product(const Config& c, std::ostream& out) {
  const Complex g = read_complex(c.left);
  const Complex h = read_complex(c.right);
  if (c.route == "order") {
    write_output(topological_product(g, h), c, out);
  } else if (c.route == "ring") {
    write_output(ring_product(g, h).complex, c, out);
  } else {
    throw InputError("unknown route '" + c.route + "'");
  }
  return kPass;
}

int cmd_betti(const Config& c, std::ostream& out) {
  const Complex g = read_complex(c.input);
  const CochainSupport support(parse_set(g, c.set.empty() ? "all" : c.set));
  out << Json(betti(support).b).dump() << '\n';
  return kPass;
}

int cmd_recognize(const Config& c, std::ostream& out) {
  const Complex g = read_complex(c.input);
  Recognizer rec(c.budget ? c.budget : kDefaultRecognizerBudget);
  Verdict v;
  if (c.what == "contractible") v = rec.contractible(g);
  else if (c.what == "sphere") v = rec.sphere(g, c.d);
  else if (c.what == "ball") v = rec.ball(g, c.d);
  else if (c.what == "manifold") v = rec.manifold(g, c.d);
  else if (c.what == "manifold-with-boundary") v = rec.manifold_with_boundary(g, c.d);
  else if (c.what == "dehn-sommerville") v = rec.dehn_sommerville(g, c.d);
  else throw InputError("unknown recognizer '" + c.what + "'");
  Json j;
  j["what"] = c.what;
  j["d"] = c.d;
  j["answer"] = to_string(v.answer);
  j["trace"] = v.trace;
  j["calls"] = v.calls;
  emit(j, c, out);
  switch (v.answer) {
    case Answer::kYes: return kPass;
    case Answer::kNo: return kFail;
    case Answer::kUnknown: return kResource;
  }
  return kResource;
}

int cmd_bench(const Config& c, std::ostream& out) {
  if (c.m != 2 && c.m != 3) throw InputError("bench needs m = 2 or m = 3");
  const Complex g = read_complex(c.input);
  const std::uint64_t budget = c.budget ? c.budget : kDefaultWorkBudget;
  std::uint64_t tuples = 1;
  for (int j = 0; j < c.m; ++j)
    if (__builtin_mul_overflow(tuples, g.size(), &tuples) || tuples > budget)
      throw ResourceError("naive sum exceeds the work budget", 0);

  EvalStats naive_stats, local_stats;
  auto t = Clock::now();
  const Value naive = characteristic_naive(SimplexSubset::all(g), c.m, &naive_stats);
  const double naive_ms = ms_since(t);
  t = Clock::now();
  const Value local = gauss_bonnet(g, c.m, &local_stats);
  const double local_ms = ms_since(t);

  Json j;
  j["m"] = c.m;
  j["n_simplices"] = g.size();
  j["naive"] = {{"value", naive}, {"tuples", naive_stats.tuples}, {"elapsed_ms", naive_ms}};
  j["local"] = {{"value", local}, {"tuples", local_stats.tuples}, {"elapsed_ms", local_ms}};
  j["equal"] = naive == local;
  j["op_ratio"] = local_stats.tuples ? double(naive_stats.tuples) / double(local_stats.tuples) : 0.0;
  j["speedup"] = local_ms > 0 ? naive_ms / local_ms : 0.0;
  out << (c.json ? j.dump() : j.dump(2)) << '\n';
  return naive == local ? kPass : kFail;
}

int cmd_matrix(const Config& c, std::ostream& out) {
  const Complex g = read_complex(c.input);
  auto rows = [](const IntMatrix& m) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(integer_json(m(i, j)));
      a.push_back(row);
    }
    return a;
  };
  auto coeffs = [](const std::vector<Integer>& p) {
    Json a = Json::array();
    for (const Integer& v : p) a.push_back(integer_json(v));
    return a;
  };
  if (c.what == "L") {
    out << rows(connection_matrix(g)).dump() << '\n';
  } else if (c.what == "g") {
    out << rows(green_matrix(g)).dump() << '\n';
  } else if (c.what == "charpoly") {
    const auto pl = char_poly(connection_matrix(g));
    const auto pg = char_poly(green_matrix(g));
    Json j;
    j["L"] = coeffs(pl);
    j["g"] = coeffs(pg);
    j["equal"] = pl == pg;
    out << j.dump() << '\n';
  } else {
    throw InputError("unknown matrix '" + c.what + "'");
  }
  return kPass;
}

int cmd_curvature(const Config& c, std::ostream& out) {
  const Complex g = read_complex(c.input);
  const auto profile = curvature_profile(g, c.m);
  Value total = 0;
  Json values = Json::array();
  for (const auto& [x, v] : profile) {
    total = checked_add(total, v);
    values.push_back({{"simplex", simplex_json(x)}, {"value", v}});
  }
  if (c.json) {
    out << Json{{"m", c.m}, {"values", values}, {"total", total}}.dump() << '\n';
  } else {
    for (const auto& [x, v] : profile) out << x.to_string() << ' ' << v << '\n';
    out << "total " << total << '\n';
  }
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Higher characteristics of finite simplicial complexes"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* info = app.add_subcommand("info", "f-vector, w1..w3 and the Fermi characteristic");
  info->add_option("complex", c.input)->required();
  info->add_flag("--json", c.json);

  auto* verify = app.add_subcommand("verify", "check an identity; exit 0 on pass, 1 on failure");
  verify->add_option("suite", c.suite, "energy, energy-ball, sphere, dual-sphere, valuation, "
                                        "local-valuation, green-inverse, det-fermi, barycentric, product")
      ->required();
  verify->add_option("complex", c.input)->required();
  verify->add_option("--m", c.m)->check(CLI::PositiveNumber);
  verify->add_option("--k", c.k)->check(CLI::PositiveNumber);
  verify->add_option("--with", c.with, "second factor for the product suite");
  verify->add_option("--pairs", c.pairs, "random open pairs for the valuation suite");
  verify->add_option("--seed", c.seed);
  verify->add_option("--set-a", c.set_a, "star:1-2,3 | core:... | set:... | all | none");
  verify->add_option("--set-b", c.set_b);
  verify->add_flag("--allow-closed", c.allow_closed, "accept non-open valuation sets");
  verify->add_option("--budget", c.budget, "work budget (elementary steps)");
  verify->add_option("--threads", c.threads, "0 = all cores");
  verify->add_flag("--json", c.json);

  auto* gen = app.add_subcommand("generate", "write a generated complex as facets");
  gen->add_option("--kind", c.gen.kind, "simplex, cycle, cross-polytope, octahedron, star, path3, random")
      ->required();
  gen->add_option("--n", c.gen.n);
  gen->add_option("--edges", c.gen.edges);
  gen->add_option("--d", c.gen.d);
  gen->add_option("--seed", c.gen.seed);
  gen->add_option("-o,--output", c.output);

  auto* prod = app.add_subcommand("product", "topological product of two complexes");
  prod->add_option("left", c.left)->required();
  prod->add_option("right", c.right)->required();
  prod->add_option("--route", c.route, "order (default) or ring");
  prod->add_option("-o,--output", c.output);

  auto* bet = app.add_subcommand("betti", "Betti vector of a complex or of an open/closed set");
  bet->add_option("complex", c.input)->required();
  bet->add_option("--set", c.set);

  auto* rec = app.add_subcommand("recognize", "recursive sphere/ball/manifold recognizers");
  rec->add_option("complex", c.input)->required();
  rec->add_option("--what", c.what,
                  "contractible, sphere, ball, manifold, manifold-with-boundary, dehn-sommerville")
      ->required();
  rec->add_option("--d", c.d);
  rec->add_option("--budget", c.budget);
  rec->add_flag("--json", c.json);

  auto* bench = app.add_subcommand("bench", "naive tuple sum against the local star sum");
  bench->add_option("complex", c.input)->required();
  bench->add_option("--m", c.m);
  bench->add_option("--budget", c.budget);
  bench->add_flag("--json", c.json);

  auto* mat = app.add_subcommand("matrix", "dump L, g or both characteristic polynomials as JSON");
  mat->add_option("complex", c.input)->required();
  mat->add_option("--what", c.what, "L, g or charpoly")->required();

  auto* curv = app.add_subcommand("curvature", "g_m(x) for every simplex");
  curv->add_option("complex", c.input)->required();
  curv->add_option("--m", c.m)->check(CLI::PositiveNumber);
  curv->add_flag("--json", c.json);

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInput;
  }

  try {
    if (*info) return cmd_info(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*gen) return cmd_generate(c, out);
    if (*prod) return cmd_product(c, out);
    if (*bet) return cmd_betti(c, out);
    if (*rec) return cmd_recognize(c, out);
    if (*bench) return cmd_bench(c, out);
    if (*mat) return cmd_matrix(c, out);
    if (*curv) return cmd_curvature(c, out);
  } catch (const ResourceError& e) {
    Json j{{"error", e.what()}, {"partial", e.partial()}};
    if (*verify) j["suite"] = c.suite;
    out << (c.json ? j.dump() : plain(j)) << '\n';
    return kResource;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}

}  // namespace topochar::cli
